//! K3 carpets: double structures with trivial canonical class on rational
//! normal scrolls.
//!
//! Each scroll S(a, b) carries exactly one such double structure (see
//! [`crate::scroll::ScrollSpec::carpet_count`]). The carpet has the numeric
//! invariants of a smooth K3 surface of genus g = a + b + 1 embedded by a
//! complete linear system, and its hyperplane sections are canonical
//! ribbons on rational normal curves. This module computes those
//! invariants, decides whether the Hilbert scheme of the ambient space is
//! smooth at the carpet, and identifies the component(s) of the Hilbert
//! scheme the carpet lies on via rank-2 Picard lattices of polarized
//! hyperelliptic K3 surfaces.

use std::cmp::max;
use std::fmt;

use num::bigint::BigInt;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::les_calculus::{CohInfo, Interval, SesProblem};
use crate::p1_bundles::SplitBundle;
use crate::picard_lattice::{
    hyperelliptic_model, two_component_condition, HyperellipticModel, LatticeModel,
};
use crate::scroll::ScrollSpec;

/// The unique K3 carpet supported on a given scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CarpetSpec {
    scroll: ScrollSpec,
}

/// Numeric invariants shared with a smooth polarized K3 surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarpetInvariants {
    pub genus: BigInt,
    pub ambient_dim: BigInt,
    pub degree: BigInt,
    pub chi_structure_sheaf: BigInt,
    pub h1_structure_sheaf: BigInt,
    pub trivial_canonical: bool,
}

/// Invariants of a hyperplane section: a canonical ribbon on a rational
/// normal curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonInvariants {
    pub support_degree: BigInt,
    pub ambient_dim: BigInt,
    pub degree: BigInt,
    pub arithmetic_genus: BigInt,
}

/// Hilbert-scheme tangent data at the carpet: the cohomology of its normal
/// bundle, with the degree-0 and degree-1 dimensions known up to the rank of
/// one connecting map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub genus: BigInt,
    pub hirzebruch_index: i64,
    /// chi of the normal bundle = expected dimension, since h2 vanishes.
    pub chi_normal: BigInt,
    pub expected_dim: BigInt,
    pub h0: Interval,
    pub h1: Interval,
    pub h2: BigInt,
    /// True when h1 is forced to vanish, i.e. the Hilbert scheme is smooth
    /// at the carpet. Holds exactly for scroll index a − b ≤ 2.
    pub smooth_point: bool,
    pub h1_omega_dual: BigInt,
    pub h1_omega_minus2: BigInt,
}

/// Why the carpet lies on the component of embedded K3 surfaces with
/// primitive polarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeEvidence {
    /// The carpet is a flat limit of smooth hyperelliptic K3 surfaces whose
    /// polarization class is primitive in the given lattice family.
    Hyperelliptic(HyperellipticModel),
    /// The carpet degenerates to the carpet on a scroll of index 0 or 1
    /// with the same genus, reducing to the hyperelliptic case.
    BalancedDegeneration,
}

impl fmt::Display for PrimeEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeEvidence::Hyperelliptic(m) => {
                write!(f, "limit of hyperelliptic K3 surfaces ({}, n = {})", m.model, m.n)
            }
            PrimeEvidence::BalancedDegeneration => {
                f.write_str("degeneration to a low-index scroll of the same genus")
            }
        }
    }
}

/// Which Hilbert-scheme components contain the carpet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMembership {
    pub genus: BigInt,
    /// The carpet always lies on the primitive component.
    pub prime: PrimeEvidence,
    /// A second component, present exactly when the scroll has index 4 and
    /// the genus exceeds 9 with g ≡ 1 (mod 4); its general member is a
    /// hyperelliptic K3 with divisibility-2 polarization.
    pub second: Option<HyperellipticModel>,
}

impl CarpetSpec {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        Ok(CarpetSpec {
            scroll: ScrollSpec::new(a, b)?,
        })
    }

    pub fn from_scroll(scroll: ScrollSpec) -> Self {
        CarpetSpec { scroll }
    }

    pub fn scroll(&self) -> ScrollSpec {
        self.scroll
    }

    /// Genus of the carpet: g = a + b + 1, so that its degree 2(a + b) is
    /// 2g − 2 and its ambient space is P^g.
    pub fn genus(&self) -> i64 {
        self.scroll.degree() + 1
    }

    pub fn invariants(&self) -> CarpetInvariants {
        let g = BigInt::from(self.genus());
        CarpetInvariants {
            ambient_dim: g.clone(),
            degree: 2 * &g - 2,
            genus: g,
            chi_structure_sheaf: BigInt::from(2),
            h1_structure_sheaf: BigInt::zero(),
            trivial_canonical: true,
        }
    }

    /// Invariants of a hyperplane section: a double structure of arithmetic
    /// genus g on a rational normal curve of degree g − 1, canonically
    /// embedded in a hyperplane P^{g−1}.
    pub fn hyperplane_section(&self) -> RibbonInvariants {
        let g = BigInt::from(self.genus());
        RibbonInvariants {
            support_degree: &g - 1,
            ambient_dim: &g - 1,
            degree: 2 * &g - 2,
            arithmetic_genus: g,
        }
    }

    /// h1 of the dual of the canonical class of the scroll, computed three
    /// ways (ruling pushforward, surface cohomology, closed form max(0, n−3))
    /// that must agree.
    pub fn h1_omega_dual(&self) -> Result<BigInt> {
        let n = self.scroll.hirzebruch_index();
        let split = SplitBundle::new([n + 2, 2, 2 - n]).h1();
        let surface = self.scroll.divisor(2, n + 2).cohomology().h1;
        let closed = BigInt::from(max(0, n - 3));
        if split != surface || surface != closed {
            return Err(Error::internal(format!(
                "h1 of the anticanonical class disagrees between routes: \
                 split {split}, surface {surface}, closed form {closed}"
            )));
        }
        Ok(closed)
    }

    /// h1 of the inverse square of the canonical class, computed three ways
    /// (closed form: max(0, 2n−5) + max(0, n−5)).
    pub fn h1_omega_minus2(&self) -> Result<BigInt> {
        let n = self.scroll.hirzebruch_index();
        let split = SplitBundle::new([2 * n + 4, n + 4, 4, 4 - n, 4 - 2 * n]).h1();
        let surface = self.scroll.divisor(4, 2 * n + 4).cohomology().h1;
        let closed = BigInt::from(max(0, 2 * n - 5) + max(0, n - 5));
        if split != surface || surface != closed {
            return Err(Error::internal(format!(
                "h1 of the inverse-square canonical class disagrees between routes: \
                 split {split}, surface {surface}, closed form {closed}"
            )));
        }
        Ok(closed)
    }

    /// Cohomology of the normal bundle of the carpet in P^g, assembled from
    /// the normal bundle of the scroll and the anticanonical geometry. The
    /// expected dimension (g + 1)² + 18 is exact; h1 is pinned between
    /// h1_omega_minus2 and h1_omega_minus2 + h1_omega_dual, so the Hilbert
    /// scheme is smooth at the carpet exactly when both vanish.
    pub fn smoothness(&self) -> Result<SmoothnessReport> {
        let n = self.scroll.hirzebruch_index();
        let g = BigInt::from(self.genus());

        let h1_dual = self.h1_omega_dual()?;
        let h1_sq = self.h1_omega_minus2()?;
        let h1_window = Interval::new(h1_sq.clone(), &h1_sq + &h1_dual)?;

        // chi of the inverse-square canonical class is 25 on every scroll;
        // check it along two independent routes before relying on it.
        let omega_m2 = self.scroll.divisor(4, 2 * n + 4);
        let anti2 = omega_m2.cohomology();
        let chi25 = BigInt::from(25);
        if anti2.chi() != chi25
            || omega_m2.riemann_roch_chi() != chi25
            || omega_m2.pushforward().euler_char() != chi25
        {
            return Err(Error::internal(
                "chi of the inverse-square canonical class must be 25",
            ));
        }

        // Restricting the carpet's normal bundle to the scroll splits off
        // the anticanonical class; the quotient collects the rest of the
        // scroll's normal directions and the square twist.
        let anti = self.scroll.divisor(2, n + 2).cohomology();
        if !anti.h2.is_zero() || !anti2.h2.is_zero() {
            return Err(Error::internal(
                "anticanonical classes on a scroll have no h2",
            ));
        }
        let scroll_normal_h0 = self.scroll.normal_bundle_cohomology()?.h0;
        let sub = CohInfo::exact(anti.h0.clone(), anti.h1.clone(), 0);
        let quotient = CohInfo::exact(
            &scroll_normal_h0 - &anti.h0 + &anti.h1 + &anti2.h0,
            anti2.h1.clone(),
            0,
        );
        let envelope = SesProblem::solve_for_middle(&sub, &quotient)?;

        let plus_one = &g + 1;
        let expected_dim = &plus_one * &plus_one + 18;
        let smooth_point = h1_window.hi().is_zero();
        let consistent = *envelope.chi() == expected_dim
            && envelope.h(1) == &h1_window
            && envelope.h(2) == &Interval::exact(0)
            && envelope.h(0) == &h1_window.shift(&expected_dim)?
            && smooth_point == (n <= 2);
        if !consistent {
            return Err(Error::internal(format!(
                "normal bundle envelope {envelope} is inconsistent with the \
                 closed forms at genus {g}, index {n}"
            )));
        }

        Ok(SmoothnessReport {
            genus: g,
            hirzebruch_index: n,
            chi_normal: envelope.chi().clone(),
            expected_dim,
            h0: envelope.h(0).clone(),
            h1: envelope.h(1).clone(),
            h2: BigInt::zero(),
            smooth_point,
            h1_omega_dual: h1_dual,
            h1_omega_minus2: h1_sq,
        })
    }

    /// Which components of the Hilbert scheme of P^g contain the carpet.
    pub fn component_membership(&self) -> Result<ComponentMembership> {
        let n = self.scroll.hirzebruch_index();
        let g = self.genus();
        let genus = BigInt::from(g);

        let prime = match n {
            // index 0: g = 2a + 1, polarization E1 + ((g-1)/2) E2 on F0
            0 => PrimeEvidence::Hyperelliptic(self.checked_model(
                LatticeModel::F0,
                (g - 1) / 2,
                &genus,
            )?),
            // index 1: g = 2b + 2, polarization (g/2) E + R on F1
            1 => PrimeEvidence::Hyperelliptic(self.checked_model(
                LatticeModel::F1,
                g / 2,
                &genus,
            )?),
            _ => PrimeEvidence::BalancedDegeneration,
        };

        let second = if n == 4 {
            // index 4: g = 2b + 5; the F4 family of the same genus exists
            // and is non-primitive exactly when g = 1 (mod 4)
            let model = self.checked_model(LatticeModel::F4, (g + 3) / 2, &genus)?;
            let non_primitive = model.divisibility == BigInt::from(2);
            if non_primitive != (g % 4 == 1) {
                return Err(Error::internal(format!(
                    "divisibility of the F4 polarization must flip with g mod 4, genus {g}"
                )));
            }
            two_component_condition(&genus)?.then_some(model)
        } else {
            None
        };

        Ok(ComponentMembership {
            genus,
            prime,
            second,
        })
    }

    fn checked_model(
        &self,
        model: LatticeModel,
        n: i64,
        genus: &BigInt,
    ) -> Result<HyperellipticModel> {
        let m = hyperelliptic_model(model, n)?;
        if m.genus != *genus {
            return Err(Error::internal(format!(
                "lattice family {model} at n = {n} has genus {}, expected {genus}",
                m.genus
            )));
        }
        Ok(m)
    }
}
