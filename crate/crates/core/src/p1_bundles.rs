//! Split vector bundles on the projective line.
//!
//! Every vector bundle on P¹ splits as a direct sum of line bundles, so a
//! bundle is represented by the multiset of its degrees. Cohomology is then
//! elementary: h⁰(O(d)) = max(0, d + 1) and h¹(O(d)) = max(0, −d − 1),
//! summed over the summands. All degrees are arbitrary-precision integers.

use std::cmp::max;
use std::fmt;

use num::bigint::BigInt;
use num::traits::Zero;

/// A direct sum ⊕ᵢ O(dᵢ) on P¹, stored as the multiset of degrees dᵢ.
///
/// The empty multiset is the zero sheaf (rank 0, all cohomology trivial).
/// Degrees are kept sorted in descending order, so equality is multiset
/// equality and printing is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SplitBundle {
    degrees: Vec<BigInt>,
}

impl SplitBundle {
    /// Bundle with the given degree multiset.
    pub fn new(degrees: impl IntoIterator<Item = impl Into<BigInt>>) -> Self {
        let mut degrees: Vec<BigInt> = degrees.into_iter().map(Into::into).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplitBundle { degrees }
    }

    /// The zero sheaf (empty multiset).
    pub fn zero() -> Self {
        SplitBundle::default()
    }

    /// Rank of the bundle (number of summands).
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// True for the zero sheaf.
    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Degrees in descending order.
    pub fn degrees(&self) -> &[BigInt] {
        &self.degrees
    }

    /// Dimension of the space of global sections: Σ max(0, d + 1).
    pub fn h0(&self) -> BigInt {
        self.degrees
            .iter()
            .map(|d| max(BigInt::zero(), d + 1))
            .sum()
    }

    /// Dimension of first cohomology: Σ max(0, −d − 1).
    pub fn h1(&self) -> BigInt {
        self.degrees
            .iter()
            .map(|d| max(BigInt::zero(), -d - 1))
            .sum()
    }

    /// Euler characteristic Σ (d + 1); always equals h⁰ − h¹.
    pub fn euler_char(&self) -> BigInt {
        self.degrees.iter().map(|d| d + 1).sum()
    }

    /// Serre dual bundle: d ↦ −d − 2 on every summand, so that
    /// h⁰ and h¹ swap between a bundle and its dual.
    pub fn serre_dual(&self) -> SplitBundle {
        SplitBundle::new(self.degrees.iter().map(|d| -d - 2))
    }

    /// Direct sum of two bundles (multiset union).
    pub fn direct_sum(&self, other: &SplitBundle) -> SplitBundle {
        SplitBundle::new(
            self.degrees
                .iter()
                .chain(other.degrees.iter())
                .cloned(),
        )
    }
}

impl fmt::Display for SplitBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "O({d})")?;
        }
        Ok(())
    }
}
