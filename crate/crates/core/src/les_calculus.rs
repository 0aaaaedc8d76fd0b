//! Dimension bookkeeping for the long exact cohomology sequence of a short
//! exact sequence of sheaves on a surface.
//!
//! A short exact sequence 0 → A → B → C → 0 yields a ten-term exact sequence
//! of cohomology groups in degrees 0, 1, 2. Writing d₀, d₁ for the ranks of
//! the two connecting maps Hⁱ(C) → Hⁱ⁺¹(A), exactness pins the middle
//! dimensions:
//!
//!   h⁰(B) = h⁰(A) + h⁰(C) − d₀
//!   h¹(B) = h¹(A) + h¹(C) − d₀ − d₁
//!   h²(B) = h²(A) + h²(C) − d₁
//!
//! with 0 ≤ dᵢ ≤ min(hⁱ(C), hⁱ⁺¹(A)). Each slot of the sequence may be only
//! partially known — an interval per degree plus an exact Euler
//! characteristic — and [`SesProblem::solve`] computes, for every degree of
//! every slot, the exact range of values attained over all dimension
//! assignments and connecting ranks satisfying every constraint at once.
//! Enumeration over the connecting ranks is exhaustive; the bounds are tiny
//! in all intended uses.

use std::cmp::{max, min};
use std::fmt;

use num::bigint::BigInt;
use num::iter::range_inclusive;
use num::traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hirzebruch::CohTriple;

/// A closed integer interval [lo, hi] of candidate dimensions, 0 ≤ lo ≤ hi.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
}

impl Interval {
    /// Interval [lo, hi]; rejects lo > hi and lo < 0.
    pub fn new(lo: impl Into<BigInt>, hi: impl Into<BigInt>) -> Result<Self> {
        let lo = lo.into();
        let hi = hi.into();
        if lo.is_negative() || lo > hi {
            return Err(Error::EmptyInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// The single-point interval [n, n]. Panics on a negative value:
    /// dimensions are nonnegative by definition.
    pub fn exact(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        assert!(!n.is_negative(), "a dimension cannot be negative: {n}");
        Interval { hi: n.clone(), lo: n }
    }

    pub fn lo(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi(&self) -> &BigInt {
        &self.hi
    }

    /// True when the interval is a single point.
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The single value, if exact.
    pub fn value(&self) -> Option<&BigInt> {
        self.is_exact().then_some(&self.lo)
    }

    /// hi − lo.
    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// True when `other` lies inside this interval.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Translate both endpoints by `delta` (must stay nonnegative).
    pub fn shift(&self, delta: &BigInt) -> Result<Interval> {
        Interval::new(&self.lo + delta, &self.hi + delta)
    }

    fn iter(&self) -> impl Iterator<Item = BigInt> {
        range_inclusive(self.lo.clone(), self.hi.clone())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Partial knowledge of the cohomology of one sheaf: an interval per degree
/// 0, 1, 2 and an exact Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohInfo {
    h: [Interval; 3],
    chi: BigInt,
}

impl CohInfo {
    /// General constructor. Rejects data whose alternating sum can never
    /// attain `chi` for any choice of dimensions inside the intervals.
    pub fn new(h: [Interval; 3], chi: impl Into<BigInt>) -> Result<Self> {
        let chi = chi.into();
        let lo = h[0].lo() - h[1].hi() + h[2].lo();
        let hi = h[0].hi() - h[1].lo() + h[2].hi();
        if chi < lo || chi > hi {
            return Err(Error::ChiInfeasible { chi });
        }
        Ok(CohInfo { h, chi })
    }

    /// Fully known cohomology (h⁰, h¹, h²); chi is derived.
    pub fn exact(
        h0: impl Into<BigInt>,
        h1: impl Into<BigInt>,
        h2: impl Into<BigInt>,
    ) -> Self {
        let h = [
            Interval::exact(h0),
            Interval::exact(h1),
            Interval::exact(h2),
        ];
        let chi = h[0].lo() - h[1].lo() + h[2].lo();
        CohInfo { h, chi }
    }

    pub fn h(&self, degree: usize) -> &Interval {
        &self.h[degree]
    }

    pub fn chi(&self) -> &BigInt {
        &self.chi
    }

    /// True when every degree is pinned to a single value.
    pub fn is_exact(&self) -> bool {
        self.h.iter().all(Interval::is_exact)
    }

    /// The exact dimensions, if all three degrees are pinned.
    pub fn to_triple(&self) -> Option<CohTriple> {
        Some(CohTriple {
            h0: self.h[0].value()?.clone(),
            h1: self.h[1].value()?.clone(),
            h2: self.h[2].value()?.clone(),
        })
    }

    /// True when `other`'s intervals all lie inside this one's (same chi).
    pub fn encloses(&self, other: &CohInfo) -> bool {
        self.chi == other.chi
            && self
                .h
                .iter()
                .zip(other.h.iter())
                .all(|(outer, inner)| outer.encloses(inner))
    }
}

impl From<&CohTriple> for CohInfo {
    fn from(t: &CohTriple) -> Self {
        CohInfo::exact(t.h0.clone(), t.h1.clone(), t.h2.clone())
    }
}

impl From<CohTriple> for CohInfo {
    fn from(t: CohTriple) -> Self {
        CohInfo::from(&t)
    }
}

impl fmt::Display for CohInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(h0 = {}, h1 = {}, h2 = {}, chi = {})",
            self.h[0], self.h[1], self.h[2], self.chi
        )
    }
}

/// The three slots of a short exact sequence 0 → left → middle → right → 0,
/// each possibly only partially known. Construction enforces additivity of
/// the Euler characteristic, which the long exact sequence forces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesProblem {
    left: CohInfo,
    middle: CohInfo,
    right: CohInfo,
}

/// Hull accumulator for the nine dimension coordinates of a feasible point.
#[derive(Default)]
struct Hull {
    bounds: Option<[(BigInt, BigInt); 9]>,
}

impl Hull {
    fn record(&mut self, point: [&BigInt; 9]) {
        match &mut self.bounds {
            None => {
                self.bounds = Some(std::array::from_fn(|i| {
                    (point[i].clone(), point[i].clone())
                }));
            }
            Some(bounds) => {
                for (slot, v) in bounds.iter_mut().zip(point) {
                    if *v < slot.0 {
                        slot.0 = v.clone();
                    }
                    if *v > slot.1 {
                        slot.1 = v.clone();
                    }
                }
            }
        }
    }
}

impl SesProblem {
    pub fn new(left: CohInfo, middle: CohInfo, right: CohInfo) -> Result<Self> {
        let sum = left.chi() + right.chi();
        if *middle.chi() != sum {
            return Err(Error::ChiNotAdditive {
                middle: middle.chi().clone(),
                sum,
            });
        }
        Ok(SesProblem {
            left,
            middle,
            right,
        })
    }

    pub fn left(&self) -> &CohInfo {
        &self.left
    }

    pub fn middle(&self) -> &CohInfo {
        &self.middle
    }

    pub fn right(&self) -> &CohInfo {
        &self.right
    }

    /// Tighten every interval of every slot to the exact range of values
    /// attained over all assignments consistent with exactness of the long
    /// exact sequence. Idempotent; never widens an interval; fails with a
    /// contradiction when no assignment exists at all.
    pub fn solve(&self) -> Result<SesProblem> {
        let (a, b, c) = (&self.left, &self.middle, &self.right);
        let zero = BigInt::zero();

        // The connecting map in degree i goes H^i(right) -> H^{i+1}(left),
        // so its rank is capped by both endpoint dimensions.
        let d0_cap = min(c.h(0).hi(), a.h(1).hi()).clone();
        let d1_cap = min(c.h(1).hi(), a.h(2).hi()).clone();

        let mut hull = Hull::default();
        for d0 in range_inclusive(zero.clone(), d0_cap) {
            for d1 in range_inclusive(zero.clone(), d1_cap.clone()) {
                for a0 in a.h(0).iter() {
                    // d0 injects the cokernel into H^1(left): need a1 >= d0
                    let a1_lo = max(a.h(1).lo(), &d0).clone();
                    for a1 in range_inclusive(a1_lo, a.h(1).hi().clone()) {
                        let a2 = a.chi() - &a0 + &a1;
                        if !a.h(2).contains(&a2) || a2 < d1 {
                            continue;
                        }
                        // b0 = a0 + c0 - d0 must land in the middle box,
                        // which bounds c0 from both sides.
                        let c0_lo =
                            max(max(c.h(0).lo(), &d0), &(b.h(0).lo() - &a0 + &d0)).clone();
                        let c0_hi = min(c.h(0).hi(), &(b.h(0).hi() - &a0 + &d0)).clone();
                        for c0 in range_inclusive(c0_lo, c0_hi) {
                            let b0 = &a0 + &c0 - &d0;
                            let shift1 = &d0 + &d1;
                            let c1_lo = max(
                                max(c.h(1).lo(), &d1),
                                &(b.h(1).lo() - &a1 + &shift1),
                            )
                            .clone();
                            let c1_hi =
                                min(c.h(1).hi(), &(b.h(1).hi() - &a1 + &shift1)).clone();
                            for c1 in range_inclusive(c1_lo, c1_hi) {
                                let b1 = &a1 + &c1 - &shift1;
                                let c2 = c.chi() - &c0 + &c1;
                                if !c.h(2).contains(&c2) {
                                    continue;
                                }
                                let b2 = &a2 + &c2 - &d1;
                                if !b.h(2).contains(&b2) {
                                    continue;
                                }
                                hull.record([
                                    &a0, &a1, &a2, &b0, &b1, &b2, &c0, &c1, &c2,
                                ]);
                            }
                        }
                    }
                }
            }
        }

        let bounds = hull.bounds.ok_or_else(|| Error::Contradiction {
            context: format!(
                "no dimension assignment is exact for left = {}, middle = {}, right = {}",
                a, b, c
            ),
        })?;
        let slot = |lo: usize, chi: &BigInt| -> Result<CohInfo> {
            CohInfo::new(
                [
                    Interval::new(bounds[lo].0.clone(), bounds[lo].1.clone())?,
                    Interval::new(bounds[lo + 1].0.clone(), bounds[lo + 1].1.clone())?,
                    Interval::new(bounds[lo + 2].0.clone(), bounds[lo + 2].1.clone())?,
                ],
                chi.clone(),
            )
        };
        SesProblem::new(slot(0, a.chi())?, slot(3, b.chi())?, slot(6, c.chi())?)
    }

    /// Solve for the right slot given the other two: seeds the unknown slot
    /// with the widest ranges the exactness equations allow, then tightens.
    pub fn solve_for_right(left: &CohInfo, middle: &CohInfo) -> Result<CohInfo> {
        let chi = middle.chi() - left.chi();
        // c_i = b_i - a_i + (connecting contributions), with the degree-i
        // connecting rank capped by h^{i+1}(left).
        let h = [
            seeded_interval(
                middle.h(0).lo() - left.h(0).hi(),
                middle.h(0).hi() - left.h(0).lo() + left.h(1).hi(),
            )?,
            seeded_interval(
                middle.h(1).lo() - left.h(1).hi(),
                middle.h(1).hi() - left.h(1).lo() + left.h(1).hi() + left.h(2).hi(),
            )?,
            seeded_interval(
                middle.h(2).lo() - left.h(2).hi(),
                middle.h(2).hi() - left.h(2).lo() + left.h(2).hi(),
            )?,
        ];
        let right = CohInfo::new(h, chi).map_err(infeasible_seed)?;
        let solved = SesProblem::new(left.clone(), middle.clone(), right)?.solve()?;
        Ok(solved.right)
    }

    /// Solve for the middle slot given the two ends.
    pub fn solve_for_middle(left: &CohInfo, right: &CohInfo) -> Result<CohInfo> {
        let chi = left.chi() + right.chi();
        let d0_cap = min(right.h(0).hi(), left.h(1).hi());
        let d1_cap = min(right.h(1).hi(), left.h(2).hi());
        let h = [
            seeded_interval(
                left.h(0).lo() + right.h(0).lo() - d0_cap,
                left.h(0).hi() + right.h(0).hi(),
            )?,
            seeded_interval(
                left.h(1).lo() + right.h(1).lo() - d0_cap - d1_cap,
                left.h(1).hi() + right.h(1).hi(),
            )?,
            seeded_interval(
                left.h(2).lo() + right.h(2).lo() - d1_cap,
                left.h(2).hi() + right.h(2).hi(),
            )?,
        ];
        let middle = CohInfo::new(h, chi).map_err(infeasible_seed)?;
        let solved = SesProblem::new(left.clone(), middle, right.clone())?.solve()?;
        Ok(solved.middle)
    }

    /// Solve for the left slot given the other two.
    pub fn solve_for_left(middle: &CohInfo, right: &CohInfo) -> Result<CohInfo> {
        let chi = middle.chi() - right.chi();
        // a_i = b_i - c_i + (connecting contributions), with the degree-i
        // connecting rank capped by h^i(right).
        let h = [
            seeded_interval(
                middle.h(0).lo() - right.h(0).hi(),
                middle.h(0).hi() - right.h(0).lo() + right.h(0).hi(),
            )?,
            seeded_interval(
                middle.h(1).lo() - right.h(1).hi(),
                middle.h(1).hi() - right.h(1).lo() + right.h(0).hi() + right.h(1).hi(),
            )?,
            seeded_interval(
                middle.h(2).lo() - right.h(2).hi(),
                middle.h(2).hi() - right.h(2).lo() + right.h(1).hi(),
            )?,
        ];
        let left = CohInfo::new(h, chi).map_err(infeasible_seed)?;
        let solved = SesProblem::new(left, middle.clone(), right.clone())?.solve()?;
        Ok(solved.left)
    }
}

/// Clamp a seed range into a legal interval; an upper bound below zero means
/// the unknown slot cannot exist at all.
fn seeded_interval(lo: BigInt, hi: BigInt) -> Result<Interval> {
    let lo = max(lo, BigInt::zero());
    if hi < lo {
        return Err(Error::Contradiction {
            context: format!("the unknown slot needs a dimension in the empty range [{lo}, {hi}]"),
        });
    }
    Interval::new(lo, hi)
}

fn infeasible_seed(err: Error) -> Error {
    match err {
        Error::ChiInfeasible { chi } => Error::Contradiction {
            context: format!("the unknown slot cannot attain chi = {chi}"),
        },
        other => other,
    }
}
