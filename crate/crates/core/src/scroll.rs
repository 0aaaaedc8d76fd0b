//! Rational normal scrolls S(a, b) and the cohomology of their normal
//! geometry.
//!
//! For a ≥ b ≥ 1 the scroll S(a, b) is the image of the Hirzebruch surface
//! F_{a−b} under the complete linear system |C₀ + a·f|; it is a smooth
//! surface of degree a + b in P^{a+b+1}. This module computes the cohomology
//! of its tangent bundle, of the restricted tangent bundle of the ambient
//! projective space, and of the normal bundle — both untwisted and twisted
//! by the canonical class — by propagating dimension constraints through the
//! Euler and tangent-bundle sequences.
//!
//! Every interval produced by the sequence calculus is cross-checked against
//! an independent route (ruling pushforwards or a closed form); a mismatch is
//! reported as an internal error rather than silently averaged away.

use num::bigint::BigInt;
use num::traits::One;

use crate::error::{Error, Result};
use crate::hirzebruch::{leray_cohomology, CohTriple, HirzebruchDivisor};
use crate::les_calculus::{CohInfo, SesProblem};
use crate::p1_bundles::SplitBundle;

/// A rational normal scroll S(a, b) with a ≥ b ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScrollSpec {
    a: i64,
    b: i64,
}

/// Derived pushforwards of a sheaf along the ruling of the scroll: the
/// direct image and first derived image, both split bundles on the base
/// curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardRow {
    pub pushforward: SplitBundle,
    pub r1_pushforward: SplitBundle,
}

impl PushforwardRow {
    /// Total cohomology of the sheaf upstairs, assembled from the two
    /// derived images on the base.
    pub fn leray(&self) -> CohTriple {
        leray_cohomology(&self.pushforward, &self.r1_pushforward)
    }

    /// Euler characteristic of the sheaf upstairs: chi of the direct image
    /// minus chi of the first derived image.
    pub fn euler_char(&self) -> BigInt {
        self.pushforward.euler_char() - self.r1_pushforward.euler_char()
    }
}

/// Ruling pushforwards of the three canonically twisted bundles in the
/// normal-bundle sequence of the scroll.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardTable {
    pub tangent_twisted: PushforwardRow,
    pub ambient_twisted: PushforwardRow,
    pub normal_twisted: PushforwardRow,
}

impl PushforwardTable {
    /// Rows in sequence order, labeled for display.
    pub fn rows(&self) -> [(&'static str, &PushforwardRow); 3] {
        [
            ("tangent_twisted", &self.tangent_twisted),
            ("ambient_twisted", &self.ambient_twisted),
            ("normal_twisted", &self.normal_twisted),
        ]
    }
}

/// Cohomology of the canonically twisted normal bundle, computed two ways:
/// exactly via ruling pushforwards, and as the envelope the sequence
/// calculus alone can certify. The exact values always lie inside the
/// envelope; the gap is what the extra geometric input closes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalTwistReport {
    pub cohomology: CohTriple,
    pub envelope: CohInfo,
}

impl ScrollSpec {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < 1 || a < b {
            return Err(Error::InvalidScroll {
                a: BigInt::from(a),
                b: BigInt::from(b),
            });
        }
        Ok(ScrollSpec { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// Index n = a − b of the Hirzebruch surface underlying the scroll.
    pub fn hirzebruch_index(&self) -> i64 {
        self.a - self.b
    }

    /// Degree a + b of the scroll in its ambient projective space.
    pub fn degree(&self) -> i64 {
        self.a + self.b
    }

    /// Dimension a + b + 1 of the smallest projective space containing the
    /// scroll.
    pub fn ambient_dim(&self) -> i64 {
        self.a + self.b + 1
    }

    /// The divisor x·C₀ + y·f on the underlying Hirzebruch surface.
    pub fn divisor(&self, x: impl Into<BigInt>, y: impl Into<BigInt>) -> HirzebruchDivisor {
        HirzebruchDivisor::new(self.hirzebruch_index(), x, y)
            .expect("a - b is nonnegative for a valid scroll")
    }

    /// Class of a hyperplane section: C₀ + a·f.
    pub fn hyperplane_class(&self) -> HirzebruchDivisor {
        self.divisor(1, self.a)
    }

    /// Canonical class of the underlying surface.
    pub fn canonical_class(&self) -> HirzebruchDivisor {
        self.divisor(-2, -(self.hirzebruch_index() + 2))
    }

    /// Cohomology of the tangent bundle of the scroll, via the relative
    /// tangent sequence of the ruling. For index n ≥ 2 the connecting map
    /// leaves a genuine window in degrees 0 and 1; chi is always 6.
    pub fn tangent_cohomology(&self) -> Result<CohInfo> {
        let n = self.hirzebruch_index();
        let relative = CohInfo::from(self.divisor(2, n).cohomology());
        let base = CohInfo::from(self.divisor(0, 2).cohomology());
        let tangent = SesProblem::solve_for_middle(&relative, &base)?;
        if *tangent.chi() != BigInt::from(6) {
            return Err(Error::internal(format!(
                "chi of the tangent bundle must be 6 on every scroll, got {}",
                tangent.chi()
            )));
        }
        Ok(tangent)
    }

    /// Cohomology of the tangent bundle of the ambient projective space
    /// restricted to the scroll, via the restricted Euler sequence. Exact:
    /// ((N+1)² − 1, 0, 0) for N = a + b + 1.
    pub fn ambient_tangent_cohomology(&self) -> Result<CohInfo> {
        let structure = CohInfo::from(self.divisor(0, 0).cohomology());
        let sections = BigInt::from(self.ambient_dim() + 1);
        let euler_middle = CohInfo::exact(&sections * &sections, 0, 0);
        let ambient = SesProblem::solve_for_right(&structure, &euler_middle)?;
        if !ambient.is_exact() {
            return Err(Error::internal(format!(
                "the restricted Euler sequence must pin the ambient tangent bundle, got {ambient}"
            )));
        }
        Ok(ambient)
    }

    /// Cohomology of the normal bundle of the scroll in its ambient space.
    /// The window in the tangent bundle cancels against chi, so the result
    /// is exact: ((N+1)² − 7, 0, 0).
    pub fn normal_bundle_cohomology(&self) -> Result<CohTriple> {
        let tangent = self.tangent_cohomology()?;
        let ambient = self.ambient_tangent_cohomology()?;
        let normal = SesProblem::solve_for_right(&tangent, &ambient)?;
        let expected = {
            let sections = BigInt::from(self.ambient_dim() + 1);
            CohTriple::new(&sections * &sections - 7, 0, 0)
        };
        match normal.to_triple() {
            Some(triple) if triple == expected => Ok(triple),
            _ => Err(Error::internal(format!(
                "normal bundle cohomology must collapse to {expected}, got {normal}"
            ))),
        }
    }

    /// Cohomology of the tangent bundle twisted by the canonical class,
    /// via the twisted relative tangent sequence. Exact: (0, 2, 0).
    pub fn tangent_twisted_cohomology(&self) -> Result<CohTriple> {
        let n = self.hirzebruch_index();
        let relative = CohInfo::from(self.divisor(0, -2).cohomology());
        let base = CohInfo::from(self.divisor(-2, -n).cohomology());
        let twisted = SesProblem::solve_for_middle(&relative, &base)?;
        match twisted.to_triple() {
            Some(triple) if triple == CohTriple::new(0, 2, 0) => Ok(triple),
            _ => Err(Error::internal(format!(
                "the twisted tangent bundle must have cohomology (0, 2, 0), got {twisted}"
            ))),
        }
    }

    /// Cohomology of the restricted ambient tangent bundle twisted by the
    /// canonical class, via the twisted Euler sequence. Exact: (0, 1, 0).
    pub fn ambient_tangent_twisted_cohomology(&self) -> Result<CohTriple> {
        let canonical = CohInfo::from(self.canonical_class().cohomology());
        // Each of the N + 1 Euler summands twists to C0 - (b - 2) fibers
        // down; all its cohomology vanishes, so the sum is exactly zero.
        let summand = self.divisor(-1, self.b - 2).cohomology();
        if summand != CohTriple::new(0, 0, 0) {
            return Err(Error::internal(format!(
                "each twisted Euler summand must have no cohomology, got {summand}"
            )));
        }
        let middle = CohInfo::exact(0, 0, 0);
        let twisted = SesProblem::solve_for_right(&canonical, &middle)?;
        match twisted.to_triple() {
            Some(triple) if triple == CohTriple::new(0, 1, 0) => Ok(triple),
            _ => Err(Error::internal(format!(
                "the twisted ambient tangent bundle must have cohomology (0, 1, 0), got {twisted}"
            ))),
        }
    }

    /// Ruling pushforwards of the canonically twisted tangent, ambient
    /// tangent, and normal bundles. Each row is forced by the vanishing of
    /// the flanking derived images in its defining sequence; the rows are
    /// tied together by additivity of the Euler characteristic.
    pub fn pushforward_table(&self) -> Result<PushforwardTable> {
        let n = self.hirzebruch_index();

        // Twisted relative tangent sequence: the sub has no derived image
        // and the quotient has no direct image, so the two columns split.
        let sub = self.divisor(0, -2);
        let quotient = self.divisor(-2, -n);
        if !quotient.pushforward().is_zero() || !sub.r1_pushforward().is_zero() {
            return Err(Error::internal(
                "the twisted tangent sequence does not split along the ruling",
            ));
        }
        let tangent_twisted = PushforwardRow {
            pushforward: sub.pushforward(),
            r1_pushforward: quotient.r1_pushforward(),
        };

        // Twisted Euler sequence: every summand has vanishing derived
        // images, so the twisted ambient bundle inherits the canonical
        // class's first derived image as its direct image.
        let canonical = self.canonical_class();
        let summand = self.divisor(-1, self.b - 2);
        if !canonical.pushforward().is_zero()
            || !summand.pushforward().is_zero()
            || !summand.r1_pushforward().is_zero()
        {
            return Err(Error::internal(
                "the twisted Euler sequence does not split along the ruling",
            ));
        }
        let ambient_twisted = PushforwardRow {
            pushforward: canonical.r1_pushforward(),
            r1_pushforward: SplitBundle::zero(),
        };

        // Normal bundle sequence: the quotient of the previous two rows is
        // the trivial line bundle on the base.
        let normal_twisted = PushforwardRow {
            pushforward: SplitBundle::new([0]),
            r1_pushforward: SplitBundle::zero(),
        };

        let table = PushforwardTable {
            tangent_twisted,
            ambient_twisted,
            normal_twisted,
        };

        // chi is additive across the normal bundle sequence, and the leray
        // totals must reproduce the sheaf cohomology computed upstairs.
        let chi_balanced = table.normal_twisted.euler_char()
            == table.ambient_twisted.euler_char() - table.tangent_twisted.euler_char();
        if !chi_balanced
            || table.tangent_twisted.leray() != self.tangent_twisted_cohomology()?
            || table.ambient_twisted.leray() != self.ambient_tangent_twisted_cohomology()?
        {
            return Err(Error::internal(
                "ruling pushforward table is inconsistent with the twisted sheaf cohomology",
            ));
        }
        Ok(table)
    }

    /// Cohomology of the normal bundle twisted by the canonical class,
    /// computed exactly via ruling pushforwards together with the envelope
    /// certified by the sequence calculus alone.
    pub fn normal_twist_canonical(&self) -> Result<NormalTwistReport> {
        let cohomology = self.pushforward_table()?.normal_twisted.leray();
        let envelope = SesProblem::solve_for_right(
            &CohInfo::from(self.tangent_twisted_cohomology()?),
            &CohInfo::from(self.ambient_tangent_twisted_cohomology()?),
        )?;
        if !envelope.encloses(&CohInfo::from(&cohomology)) {
            return Err(Error::internal(format!(
                "exact twisted normal cohomology {cohomology} escapes its envelope {envelope}"
            )));
        }
        Ok(NormalTwistReport {
            cohomology,
            envelope,
        })
    }

    /// Number of double structures with trivial canonical class carried by
    /// the scroll: the number of sections of the canonically twisted normal
    /// bundle. Equals 1 for every scroll.
    pub fn carpet_count(&self) -> Result<BigInt> {
        let count = self.normal_twist_canonical()?.cohomology.h0;
        if !count.is_one() {
            return Err(Error::internal(format!(
                "every scroll carries exactly one carpet, got {count}"
            )));
        }
        Ok(count)
    }
}
