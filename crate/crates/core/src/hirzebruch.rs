//! Divisor classes and sheaf cohomology on Hirzebruch surfaces F_n.
//!
//! Pic(F_n) = Z·C0 ⊕ Z·f with C0² = −n, C0·f = 1, f² = 0, where C0 is the
//! section of minimal self-intersection and f a fiber of the ruling
//! F_n → P¹. Cohomology of a line bundle O(x·C0 + y·f) is computed by
//! pushing forward along the ruling: the direct image and first derived
//! image are split bundles on P¹, and since the base is a curve the spectral
//! sequence degenerates into three closed formulas. Riemann–Roch and a
//! direct monomial count of h⁰ give two independent cross-checks.

use std::cmp::max;
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::iter::range_inclusive;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::p1_bundles::SplitBundle;

/// The three cohomology dimensions (h⁰, h¹, h²) of a sheaf on a surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohTriple {
    pub h0: BigInt,
    pub h1: BigInt,
    pub h2: BigInt,
}

impl CohTriple {
    pub fn new(h0: impl Into<BigInt>, h1: impl Into<BigInt>, h2: impl Into<BigInt>) -> Self {
        CohTriple {
            h0: h0.into(),
            h1: h1.into(),
            h2: h2.into(),
        }
    }

    /// Euler characteristic h⁰ − h¹ + h².
    pub fn chi(&self) -> BigInt {
        &self.h0 - &self.h1 + &self.h2
    }
}

impl fmt::Display for CohTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.h0, self.h1, self.h2)
    }
}

/// Cohomology of a sheaf on the total space of a fibration over P¹ from its
/// direct image and first derived image: h⁰ comes from sections of the
/// direct image, h² from first cohomology of the derived image, and h¹
/// collects the two remaining contributions.
pub fn leray_cohomology(pushforward: &SplitBundle, r1_pushforward: &SplitBundle) -> CohTriple {
    CohTriple {
        h0: pushforward.h0(),
        h1: pushforward.h1() + r1_pushforward.h0(),
        h2: r1_pushforward.h1(),
    }
}

/// A divisor class x·C0 + y·f on the Hirzebruch surface F_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HirzebruchDivisor {
    n: BigInt,
    x: BigInt,
    y: BigInt,
}

impl HirzebruchDivisor {
    /// Divisor class x·C0 + y·f on F_n. Rejects n < 0.
    pub fn new(
        n: impl Into<BigInt>,
        x: impl Into<BigInt>,
        y: impl Into<BigInt>,
    ) -> Result<Self> {
        let n = n.into();
        if n.is_negative() {
            return Err(Error::NegativeRulingIndex { n });
        }
        Ok(HirzebruchDivisor {
            n,
            x: x.into(),
            y: y.into(),
        })
    }

    /// The canonical class K = −2·C0 − (n + 2)·f of F_n.
    pub fn canonical(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        let y = -(&n + BigInt::from(2));
        HirzebruchDivisor::new(n, -2, y)
    }

    pub fn surface_index(&self) -> &BigInt {
        &self.n
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    /// Intersection number with another class on the same surface:
    /// D₁·D₂ = −n·x₁x₂ + x₁y₂ + x₂y₁. Classes on different surfaces are rejected.
    pub fn intersect(&self, other: &HirzebruchDivisor) -> Result<BigInt> {
        if self.n != other.n {
            return Err(Error::SurfaceMismatch {
                left: self.n.clone(),
                right: other.n.clone(),
            });
        }
        Ok(self.pair_with(other))
    }

    // Intersection form without the surface check, for classes built internally.
    fn pair_with(&self, other: &HirzebruchDivisor) -> BigInt {
        -&self.n * &self.x * &other.x + &self.x * &other.y + &other.x * &self.y
    }

    /// Direct image of O(x·C0 + y·f) on P¹: the degrees y − k·n for
    /// 0 ≤ k ≤ x when x ≥ 0, the zero sheaf otherwise.
    pub fn pushforward(&self) -> SplitBundle {
        if self.x.is_negative() {
            return SplitBundle::zero();
        }
        SplitBundle::new(
            range_inclusive(BigInt::zero(), self.x.clone()).map(|k| &self.y - k * &self.n),
        )
    }

    /// First derived image on P¹: the degrees y + j·n for 1 ≤ j ≤ −x − 1
    /// when x ≤ −2, the zero sheaf otherwise.
    pub fn r1_pushforward(&self) -> SplitBundle {
        if self.x >= BigInt::from(-1) {
            return SplitBundle::zero();
        }
        let top = -&self.x - 1;
        SplitBundle::new(range_inclusive(BigInt::one(), top).map(|j| &self.y + j * &self.n))
    }

    /// Cohomology (h⁰, h¹, h²) of O(x·C0 + y·f), via the images on P¹.
    pub fn cohomology(&self) -> CohTriple {
        leray_cohomology(&self.pushforward(), &self.r1_pushforward())
    }

    /// Euler characteristic by Riemann–Roch: χ = 1 + D·(D − K)/2.
    /// The pairing D·(D − K) is even for every integral class; an odd value
    /// would mean the intersection form itself is broken, so it panics.
    pub fn riemann_roch_chi(&self) -> BigInt {
        let k = Self::canonical(self.n.clone()).expect("surface index is already nonnegative");
        let d_minus_k = HirzebruchDivisor {
            n: self.n.clone(),
            x: &self.x - &k.x,
            y: &self.y - &k.y,
        };
        let pairing = self.pair_with(&d_minus_k);
        let (half, rem) = pairing.div_rem(&BigInt::from(2));
        assert!(
            rem.is_zero(),
            "internal invariant violation: D·(D−K) must be even, got {pairing}"
        );
        BigInt::one() + half
    }

    /// Number of monomial sections of O(x·C0 + y·f), counted directly:
    /// Σ_{k=0}^{x} max(0, y − k·n + 1) for x ≥ 0, and 0 for x < 0.
    /// Independent of the pushforward machinery; used as a cross-check on h⁰.
    pub fn h0_lattice_count(&self) -> BigInt {
        if self.x.is_negative() {
            return BigInt::zero();
        }
        range_inclusive(BigInt::zero(), self.x.clone())
            .map(|k| max(BigInt::zero(), &self.y - k * &self.n + 1))
            .sum()
    }

    /// The Serre-dual class K − D on the same surface.
    pub fn serre_dual(&self) -> HirzebruchDivisor {
        let k = Self::canonical(self.n.clone()).expect("surface index is already nonnegative");
        HirzebruchDivisor {
            n: self.n.clone(),
            x: &k.x - &self.x,
            y: &k.y - &self.y,
        }
    }
}

impl fmt::Display for HirzebruchDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*C0 + {}*f on F_{}", self.x, self.y, self.n)
    }
}
