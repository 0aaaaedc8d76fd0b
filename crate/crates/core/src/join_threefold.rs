//! Intersection theory on the threefold swept out by the lines joining two
//! rational normal curves of degrees n₀ and n′ in Pⁿ⁰⁺ⁿ′⁺¹.
//!
//! The join is resolved by the projective bundle X = P(O(n₀, 0) ⊕ O(0, n′))
//! over P¹ × P¹. Its Chow ring is generated by the two ruling classes α, β
//! of the base and the tautological hyperplane class H, subject to
//!
//!   α² = β² = 0,   H² = n₀·αH + n′·βH − n₀n′·αβ,
//!
//! and ∫ αβH = 1. Every class is stored by its eight coordinates in the
//! monomial basis {1, α, β, H, αH, βH, αβ, αβH} with rational coefficients,
//! so discrepancy computations with fractional coefficients stay exact.
//!
//! The module computes the canonical class, the two section surfaces
//! contracted by |H|, the extremal curve classes, Fano-type positivity, and
//! a full cross-check of a published intersection table for the join —
//! including the two corrections the cross-check surfaces.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, Zero};

use crate::error::{Error, Result};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A Chow class on the resolved join, in the monomial basis
/// {1, α, β, H, αH, βH, αβ, αβH}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChowClass {
    pub c: BigRational,
    pub alpha: BigRational,
    pub beta: BigRational,
    pub h: BigRational,
    pub alpha_h: BigRational,
    pub beta_h: BigRational,
    pub alpha_beta: BigRational,
    pub point: BigRational,
}

impl ChowClass {
    pub fn zero() -> Self {
        ChowClass::default()
    }

    pub fn one() -> Self {
        ChowClass {
            c: rat(1),
            ..ChowClass::default()
        }
    }

    /// Ruling class of the first P¹ factor of the base.
    pub fn alpha() -> Self {
        ChowClass {
            alpha: rat(1),
            ..ChowClass::default()
        }
    }

    /// Ruling class of the second P¹ factor of the base.
    pub fn beta() -> Self {
        ChowClass {
            beta: rat(1),
            ..ChowClass::default()
        }
    }

    /// Tautological hyperplane class of the bundle.
    pub fn hyperplane() -> Self {
        ChowClass {
            h: rat(1),
            ..ChowClass::default()
        }
    }

    /// Class of a fiber of the bundle projection: αβ.
    pub fn fiber() -> Self {
        ChowClass {
            alpha_beta: rat(1),
            ..ChowClass::default()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|q| q.is_zero())
    }

    fn coords(&self) -> [&BigRational; 8] {
        [
            &self.c,
            &self.alpha,
            &self.beta,
            &self.h,
            &self.alpha_h,
            &self.beta_h,
            &self.alpha_beta,
            &self.point,
        ]
    }

    /// Which codimensions carry a nonzero coordinate.
    fn grades(&self) -> [bool; 4] {
        [
            !self.c.is_zero(),
            !(self.alpha.is_zero() && self.beta.is_zero() && self.h.is_zero()),
            !(self.alpha_h.is_zero() && self.beta_h.is_zero() && self.alpha_beta.is_zero()),
            !self.point.is_zero(),
        ]
    }

    /// Scale by an integer.
    pub fn times(self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    /// Scale by a rational.
    pub fn scale(&self, q: &BigRational) -> Self {
        ChowClass {
            c: &self.c * q,
            alpha: &self.alpha * q,
            beta: &self.beta * q,
            h: &self.h * q,
            alpha_h: &self.alpha_h * q,
            beta_h: &self.beta_h * q,
            alpha_beta: &self.alpha_beta * q,
            point: &self.point * q,
        }
    }
}

impl Add for ChowClass {
    type Output = ChowClass;

    fn add(self, rhs: ChowClass) -> ChowClass {
        ChowClass {
            c: self.c + rhs.c,
            alpha: self.alpha + rhs.alpha,
            beta: self.beta + rhs.beta,
            h: self.h + rhs.h,
            alpha_h: self.alpha_h + rhs.alpha_h,
            beta_h: self.beta_h + rhs.beta_h,
            alpha_beta: self.alpha_beta + rhs.alpha_beta,
            point: self.point + rhs.point,
        }
    }
}

impl Sub for ChowClass {
    type Output = ChowClass;

    fn sub(self, rhs: ChowClass) -> ChowClass {
        self + (-rhs)
    }
}

impl Neg for ChowClass {
    type Output = ChowClass;

    fn neg(self) -> ChowClass {
        self.scale(&rat(-1))
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = [
            "", "alpha", "beta", "H", "alpha*H", "beta*H", "alpha*beta", "alpha*beta*H",
        ];
        let mut wrote = false;
        for (coef, label) in self.coords().into_iter().zip(labels) {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if coef.is_negative() {
                f.write_str("-")?;
            }
            let mag = coef.abs();
            if label.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == rat(1) {
                f.write_str(label)?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Positivity of the anticanonical class, on the resolution and on the
/// join image it contracts to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoReport {
    /// Anticanonical degree of the extremal curves: the minimal sections of
    /// the two ruled surfaces over the base rulings, and a bundle fiber.
    pub minus_k_kappa1: BigRational,
    pub minus_k_kappa2: BigRational,
    pub minus_k_fiber: BigRational,
    pub minus_k_cubed: BigRational,
    /// Strict positivity on all extremal curves; holds only for n₀ = n′ = 1.
    pub fano: bool,
    /// Nonnegativity on all extremal curves with positive top self-degree.
    pub weak_fano: bool,
    /// Coefficient λ with −K = λ·H modulo the two contracted surfaces;
    /// always 2/n₀ + 2/n′.
    pub lambda: BigRational,
    /// λ > 0: the singular join image is anticanonically polarized.
    pub image_fano: bool,
}

/// How a published table entry compares with the computed ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchStatus {
    /// Matches with the published A, B read as α, β in that order.
    Match,
    /// Matches only with A, B read as β, α (and the curve labels swapped
    /// with them); the published table names the rulings in the other order.
    MatchSwapped,
    Mismatch,
}

impl MatchStatus {
    pub fn label(&self) -> &'static str {
        match self {
            MatchStatus::Match => "match",
            MatchStatus::MatchSwapped => "match_swapped",
            MatchStatus::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for MatchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One checked entry of the published table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub label: String,
    pub status: MatchStatus,
}

/// A reproducible correction to the published table: an identity or claim
/// that fails under every reading, with the computed residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyNote {
    pub id: &'static str,
    pub detail: String,
}

/// Outcome of checking every entry of the published intersection table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCheckReport {
    pub entries: Vec<EntryCheck>,
    pub discrepancies: Vec<DiscrepancyNote>,
    /// No entry is a mismatch (swapped readings count as consistent).
    pub all_consistent: bool,
}

/// Reading of the published surface labels A, B and curve labels C₁, C₂ as
/// classes of the ring.
struct Interp {
    a: ChowClass,
    b: ChowClass,
    /// Expected position of the published C₁, C₂ coefficients in the
    /// computed (κ₁, κ₂) coordinates: false = (C₁, C₂) → (κ₁, κ₂),
    /// true = (C₁, C₂) → (κ₂, κ₁).
    swap_curves: bool,
}

/// The resolved join of rational normal curves of degrees n₀ and n′.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JoinThreefold {
    n0: i64,
    nprime: i64,
}

impl JoinThreefold {
    pub fn new(n0: i64, nprime: i64) -> Result<Self> {
        if n0 < 1 || nprime < 1 {
            return Err(Error::InvalidBundleDegrees {
                n0: BigInt::from(n0),
                n1: BigInt::from(nprime),
            });
        }
        Ok(JoinThreefold { n0, nprime })
    }

    pub fn n0(&self) -> i64 {
        self.n0
    }

    pub fn nprime(&self) -> i64 {
        self.nprime
    }

    /// Product in the Chow ring. Fails when two classes of complementary
    /// codimension overflow the threefold (nonzero parts of codimension
    /// i and j with i + j > 3).
    pub fn multiply(&self, u: &ChowClass, v: &ChowClass) -> Result<ChowClass> {
        let gu = u.grades();
        let gv = v.grades();
        for (i, iu) in gu.iter().enumerate() {
            for (j, jv) in gv.iter().enumerate() {
                if *iu && *jv && i + j > 3 {
                    return Err(Error::CodimensionOverflow {
                        left: i as u32,
                        right: j as u32,
                    });
                }
            }
        }
        let n0 = rat(self.n0);
        let n1 = rat(self.nprime);
        let hh = &u.h * &v.h;
        Ok(ChowClass {
            c: &u.c * &v.c,
            alpha: &u.c * &v.alpha + &u.alpha * &v.c,
            beta: &u.c * &v.beta + &u.beta * &v.c,
            h: &u.c * &v.h + &u.h * &v.c,
            alpha_h: &u.c * &v.alpha_h
                + &u.alpha_h * &v.c
                + &u.alpha * &v.h
                + &u.h * &v.alpha
                + &n0 * &hh,
            beta_h: &u.c * &v.beta_h
                + &u.beta_h * &v.c
                + &u.beta * &v.h
                + &u.h * &v.beta
                + &n1 * &hh,
            alpha_beta: &u.c * &v.alpha_beta
                + &u.alpha_beta * &v.c
                + &u.alpha * &v.beta
                + &u.beta * &v.alpha
                - &n0 * &n1 * &hh,
            point: &u.c * &v.point
                + &u.point * &v.c
                + &u.alpha * &v.beta_h
                + &v.alpha * &u.beta_h
                + &u.beta * &v.alpha_h
                + &v.beta * &u.alpha_h
                + &u.h * &v.alpha_beta
                + &v.h * &u.alpha_beta
                + &n1 * (&u.h * &v.alpha_h + &v.h * &u.alpha_h)
                + &n0 * (&u.h * &v.beta_h + &v.h * &u.beta_h),
        })
    }

    /// Triple product.
    pub fn multiply3(&self, u: &ChowClass, v: &ChowClass, w: &ChowClass) -> Result<ChowClass> {
        let uv = self.multiply(u, v)?;
        self.multiply(&uv, w)
    }

    /// Degree of the zero-cycle part of a class.
    pub fn integrate(&self, class: &ChowClass) -> BigRational {
        class.point.clone()
    }

    /// Canonical class: −2H + (n₀ − 2)α + (n′ − 2)β.
    pub fn canonical_class(&self) -> ChowClass {
        ChowClass::hyperplane().times(-2)
            + ChowClass::alpha().times(self.n0 - 2)
            + ChowClass::beta().times(self.nprime - 2)
    }

    /// The section surface H − n′β, contracted by |H| to the degree-n₀
    /// curve.
    pub fn section_first(&self) -> ChowClass {
        ChowClass::hyperplane() - ChowClass::beta().times(self.nprime)
    }

    /// The section surface H − n₀α, contracted by |H| to the degree-n′
    /// curve.
    pub fn section_second(&self) -> ChowClass {
        ChowClass::hyperplane() - ChowClass::alpha().times(self.n0)
    }

    /// Minimal section κ₁ = αH − n′αβ of the ruled surface over a point of
    /// the first base ruling.
    pub fn minimal_section_first(&self) -> ChowClass {
        ChowClass {
            alpha_h: rat(1),
            alpha_beta: rat(-self.nprime),
            ..ChowClass::default()
        }
    }

    /// Minimal section κ₂ = βH − n₀αβ of the ruled surface over a point of
    /// the second base ruling.
    pub fn minimal_section_second(&self) -> ChowClass {
        ChowClass {
            beta_h: rat(1),
            alpha_beta: rat(-self.n0),
            ..ChowClass::default()
        }
    }

    /// Whether K + 2α + 2β + E₁ + E₂ vanishes: the doubled ruled surfaces
    /// together with the two contracted sections form an anticanonical
    /// divisor. This is the identity that places a K3 carpet inside the
    /// join.
    pub fn anticanonical_carpet_identity(&self) -> bool {
        let sum = self.canonical_class()
            + ChowClass::alpha().times(2)
            + ChowClass::beta().times(2)
            + self.section_first()
            + self.section_second();
        sum.is_zero()
    }

    /// Degree of the join image: ∫ H³ = n₀n′.
    pub fn image_degree(&self) -> Result<BigInt> {
        let h = ChowClass::hyperplane();
        let cube = self.multiply3(&h, &h, &h)?;
        let degree = self.integrate(&cube);
        if !degree.is_integer() {
            return Err(Error::internal(format!(
                "the degree of the join image must be an integer, got {degree}"
            )));
        }
        Ok(degree.to_integer())
    }

    /// Anticanonical positivity on the resolution and on the join image.
    pub fn fano_report(&self) -> Result<FanoReport> {
        let minus_k = -self.canonical_class();
        let deg = |curve: &ChowClass| -> Result<BigRational> {
            Ok(self.integrate(&self.multiply(&minus_k, curve)?))
        };
        let minus_k_kappa1 = deg(&self.minimal_section_first())?;
        let minus_k_kappa2 = deg(&self.minimal_section_second())?;
        let minus_k_fiber = deg(&ChowClass::fiber())?;
        let minus_k_cubed = self.integrate(&self.multiply3(&minus_k, &minus_k, &minus_k)?);

        let fano = minus_k_kappa1.is_positive()
            && minus_k_kappa2.is_positive()
            && minus_k_fiber.is_positive();
        if fano != (self.n0 == 1 && self.nprime == 1) {
            return Err(Error::internal(format!(
                "strict anticanonical positivity must single out degrees (1, 1), \
                 got it at ({}, {})",
                self.n0, self.nprime
            )));
        }
        let weak_fano = !minus_k_kappa1.is_negative()
            && !minus_k_kappa2.is_negative()
            && !minus_k_fiber.is_negative()
            && minus_k_cubed.is_positive();

        // Subtract the discrepancies of the two contracted surfaces from
        // -K; what is left must be a rational multiple of H.
        let lambda_class = -(self.canonical_class()
            + self
                .section_first()
                .scale(&BigRational::new(BigInt::from(self.nprime - 2), BigInt::from(self.nprime)))
            + self
                .section_second()
                .scale(&BigRational::new(BigInt::from(self.n0 - 2), BigInt::from(self.n0))));
        let mut pure_h = lambda_class.clone();
        pure_h.h = BigRational::zero();
        if !pure_h.is_zero() {
            return Err(Error::internal(format!(
                "the image anticanonical class must be a multiple of H, got {lambda_class}"
            )));
        }
        let lambda = lambda_class.h;
        let expected = BigRational::new(BigInt::from(2), BigInt::from(self.n0))
            + BigRational::new(BigInt::from(2), BigInt::from(self.nprime));
        if lambda != expected {
            return Err(Error::internal(format!(
                "lambda must equal 2/n0 + 2/n', got {lambda}"
            )));
        }
        let image_fano = lambda.is_positive();

        Ok(FanoReport {
            minus_k_kappa1,
            minus_k_kappa2,
            minus_k_fiber,
            minus_k_cubed,
            fano,
            weak_fano,
            lambda,
            image_fano,
        })
    }

    /// Convert the codimension-2 part of a class to coordinates in the
    /// basis (κ₁, κ₂, fiber): αH = κ₁ + n′·f and βH = κ₂ + n₀·f.
    fn curve_basis_coords(&self, class: &ChowClass) -> [BigRational; 3] {
        [
            class.alpha_h.clone(),
            class.beta_h.clone(),
            &class.alpha_beta + rat(self.nprime) * &class.alpha_h
                + rat(self.n0) * &class.beta_h,
        ]
    }

    fn interp(&self, swapped: bool) -> Interp {
        if swapped {
            Interp {
                a: ChowClass::beta(),
                b: ChowClass::alpha(),
                swap_curves: true,
            }
        } else {
            Interp {
                a: ChowClass::alpha(),
                b: ChowClass::beta(),
                swap_curves: false,
            }
        }
    }

    /// Check every entry of the published intersection table for the join
    /// against the computed ring, under both readings of the surface labels
    /// A, B (the published order of the two rulings is not stated). Two
    /// corrections that no reading repairs are reported as discrepancies.
    pub fn reference_table_check(&self) -> Result<TableCheckReport> {
        let n0 = self.n0;
        let n1 = self.nprime;
        let mut entries = Vec::new();

        let status_of = |direct: bool, swapped: bool| -> MatchStatus {
            if direct {
                MatchStatus::Match
            } else if swapped {
                MatchStatus::MatchSwapped
            } else {
                MatchStatus::Mismatch
            }
        };

        // Products of the three divisor labels, published in the curve
        // basis (C1, C2, f).
        let published_products: [(&str, &str, [i64; 3]); 6] = [
            ("H", "H", [n1, n0, n0 * n1]),
            ("H", "A", [1, 0, n0]),
            ("H", "B", [0, 1, n1]),
            ("A", "A", [0, 0, 0]),
            ("A", "B", [0, 0, 1]),
            ("B", "B", [0, 0, 0]),
        ];
        for (left, right, published) in &published_products {
            let mut ok = [false; 2];
            for (slot, swapped) in [false, true].into_iter().enumerate() {
                let interp = self.interp(swapped);
                let class_of = |label: &str| match label {
                    "H" => ChowClass::hyperplane(),
                    "A" => interp.a.clone(),
                    _ => interp.b.clone(),
                };
                let product = self.multiply(&class_of(left), &class_of(right))?;
                let coords = self.curve_basis_coords(&product);
                let expected = if interp.swap_curves {
                    [published[1], published[0], published[2]]
                } else {
                    *published
                };
                ok[slot] = coords
                    .iter()
                    .zip(expected)
                    .all(|(got, want)| *got == rat(want));
            }
            entries.push(EntryCheck {
                label: format!("product({left}, {right})"),
                status: status_of(ok[0], ok[1]),
            });
        }

        // Pairing of divisor rows against curve columns.
        let published_pairing: [(&str, [i64; 3]); 3] =
            [("H", [0, 0, 1]), ("A", [0, 1, 0]), ("B", [1, 0, 0])];
        for (row, values) in &published_pairing {
            for (col_index, col) in ["C1", "C2", "f"].into_iter().enumerate() {
                let mut ok = [false; 2];
                for (slot, swapped) in [false, true].into_iter().enumerate() {
                    let interp = self.interp(swapped);
                    let row_class = match *row {
                        "H" => ChowClass::hyperplane(),
                        "A" => interp.a.clone(),
                        _ => interp.b.clone(),
                    };
                    let col_class = match col {
                        "C1" if interp.swap_curves => self.minimal_section_second(),
                        "C1" => self.minimal_section_first(),
                        "C2" if interp.swap_curves => self.minimal_section_first(),
                        "C2" => self.minimal_section_second(),
                        _ => ChowClass::fiber(),
                    };
                    let got = self.integrate(&self.multiply(&row_class, &col_class)?);
                    ok[slot] = got == rat(values[col_index]);
                }
                entries.push(EntryCheck {
                    label: format!("pairing({row}, {col})"),
                    status: status_of(ok[0], ok[1]),
                });
            }
        }

        // Published canonical class: -2H + (n' - 2)A + (n0 - 2)B.
        {
            let mut ok = [false; 2];
            for (slot, swapped) in [false, true].into_iter().enumerate() {
                let interp = self.interp(swapped);
                let published = ChowClass::hyperplane().times(-2)
                    + interp.a.times(n1 - 2)
                    + interp.b.times(n0 - 2);
                ok[slot] = published == self.canonical_class();
            }
            entries.push(EntryCheck {
                label: "canonical_class".into(),
                status: status_of(ok[0], ok[1]),
            });
        }

        // Published contracted sections: E1 = H - n'A, E2 = H - n0 B.
        let published_sections: [(&str, i64, fn(&Self) -> ChowClass, bool); 2] = [
            ("section_first", n1, Self::section_first, true),
            ("section_second", n0, Self::section_second, false),
        ];
        for (label, coef, ours, uses_a) in published_sections {
            let mut ok = [false; 2];
            for (slot, swapped) in [false, true].into_iter().enumerate() {
                let interp = self.interp(swapped);
                let surface = if uses_a {
                    interp.a.clone()
                } else {
                    interp.b.clone()
                };
                let published = ChowClass::hyperplane() - surface.times(coef);
                ok[slot] = published == ours(self);
            }
            entries.push(EntryCheck {
                label: label.into(),
                status: status_of(ok[0], ok[1]),
            });
        }

        // Correction 1: the published decomposition of 2H reads
        // n'A + n0 B - 2H + E1 - E2 = 0; no reading makes it vanish, and
        // flipping the sign of E2 repairs it.
        let residual_of = |swapped: bool, flip: i64| -> ChowClass {
            let interp = self.interp(swapped);
            interp.a.times(n1) + interp.b.times(n0) - ChowClass::hyperplane().times(2)
                + self.section_first()
                + self.section_second().times(flip)
        };
        let direct_residual = residual_of(false, -1);
        let swapped_residual = residual_of(true, -1);
        if direct_residual.is_zero() || swapped_residual.is_zero() {
            return Err(Error::internal(
                "the published section sum unexpectedly closes; the correction note is stale",
            ));
        }
        let corrected = residual_of(true, 1);
        if !corrected.is_zero() {
            return Err(Error::internal(format!(
                "the sign-corrected section sum must vanish, got {corrected}"
            )));
        }
        let discrepancies = vec![
            DiscrepancyNote {
                id: "section_sum_display",
                detail: format!(
                    "the published identity n'A + n0 B - 2H + E1 - E2 = 0 fails under \
                     either reading of A, B (residuals {direct_residual} and \
                     {swapped_residual}); with + E2 in place of - E2 it vanishes"
                ),
            },
            DiscrepancyNote {
                id: "fano_boundary",
                detail: {
                    let report = self.fano_report()?;
                    format!(
                        "the published criterion calls the resolution Fano whenever both \
                         degrees are at most 2, but at degree 2 the anticanonical class \
                         meets an extremal curve in 0 and is only nef; strict positivity \
                         needs n0 = n' = 1. Here (n0, n') = ({n0}, {n1}): published \
                         criterion {}, strict {}, weak {}",
                        n0 <= 2 && n1 <= 2,
                        report.fano,
                        report.weak_fano
                    )
                },
            },
        ];

        let all_consistent = entries
            .iter()
            .all(|entry| entry.status != MatchStatus::Mismatch);
        Ok(TableCheckReport {
            entries,
            discrepancies,
            all_consistent,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn join(n0: i64, n1: i64) -> JoinThreefold {
        JoinThreefold::new(n0, n1).expect("valid join")
    }

    fn int(q: &BigRational) -> i64 {
        assert!(q.is_integer(), "expected an integer, got {q}");
        let i = q.to_integer();
        i64::try_from(&i).expect("fits in i64")
    }

    #[test]
    fn rejects_degenerate_degrees() {
        assert!(matches!(
            JoinThreefold::new(0, 3),
            Err(Error::InvalidBundleDegrees { .. })
        ));
        assert!(matches!(
            JoinThreefold::new(2, -1),
            Err(Error::InvalidBundleDegrees { .. })
        ));
    }

    #[test]
    fn hyperplane_powers() {
        for (n0, n1) in [(1, 1), (2, 1), (3, 2), (5, 4)] {
            let x = join(n0, n1);
            let h = ChowClass::hyperplane();
            let hh = x.multiply(&h, &h).unwrap();
            assert_eq!(hh.alpha_h, rat(n0));
            assert_eq!(hh.beta_h, rat(n1));
            assert_eq!(hh.alpha_beta, rat(-n0 * n1));
            assert_eq!(x.image_degree().unwrap(), BigInt::from(n0 * n1));
            // surface degrees of the two ruling families
            let ha = x.multiply(&hh, &ChowClass::alpha()).unwrap();
            let hb = x.multiply(&hh, &ChowClass::beta()).unwrap();
            assert_eq!(int(&x.integrate(&ha)), n1);
            assert_eq!(int(&x.integrate(&hb)), n0);
        }
    }

    #[test]
    fn ring_is_associative_on_divisors() {
        let x = join(3, 2);
        let classes = [
            ChowClass::hyperplane(),
            ChowClass::alpha(),
            ChowClass::beta(),
            x.canonical_class(),
            x.section_first(),
        ];
        for u in &classes {
            for v in &classes {
                for w in &classes {
                    let left = x.multiply(&x.multiply(u, v).unwrap(), w).unwrap();
                    let right = x.multiply(u, &x.multiply(v, w).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn section_surfaces_are_disjoint_and_contracted() {
        for (n0, n1) in [(1, 1), (2, 1), (4, 3)] {
            let x = join(n0, n1);
            let e1 = x.section_first();
            let e2 = x.section_second();
            assert!(x.multiply(&e1, &e2).unwrap().is_zero());
            let cube1 = x.multiply3(&e1, &e1, &e1).unwrap();
            let cube2 = x.multiply3(&e2, &e2, &e2).unwrap();
            assert_eq!(int(&x.integrate(&cube1)), -2 * n0 * n1);
            assert_eq!(int(&x.integrate(&cube2)), -2 * n0 * n1);
            // |H| contracts both sections
            let h = ChowClass::hyperplane();
            assert_eq!(int(&x.integrate(&x.multiply3(&h, &h, &e1).unwrap())), 0);
            assert_eq!(int(&x.integrate(&x.multiply3(&h, &h, &e2).unwrap())), 0);
        }
    }

    #[test]
    fn extremal_curve_pairings() {
        let x = join(3, 2);
        let e1 = x.section_first();
        let pair = |u: &ChowClass, v: &ChowClass| int(&x.integrate(&x.multiply(u, v).unwrap()));
        assert_eq!(pair(&e1, &x.minimal_section_first()), -2);
        assert_eq!(pair(&e1, &x.minimal_section_second()), 0);
        assert_eq!(pair(&e1, &ChowClass::fiber()), 1);
        // hyperplane degree of the extremal curves
        let h = ChowClass::hyperplane();
        assert_eq!(pair(&h, &x.minimal_section_first()), 0);
        assert_eq!(pair(&h, &x.minimal_section_second()), 0);
        assert_eq!(pair(&h, &ChowClass::fiber()), 1);
    }

    #[test]
    fn anticanonical_degrees() {
        for (n0, n1) in [(1, 1), (2, 1), (3, 2), (5, 4)] {
            let x = join(n0, n1);
            let report = x.fano_report().unwrap();
            assert_eq!(report.minus_k_kappa1, rat(2 - n1));
            assert_eq!(report.minus_k_kappa2, rat(2 - n0));
            assert_eq!(report.minus_k_fiber, rat(2));
            assert_eq!(
                report.lambda,
                BigRational::new(BigInt::from(2), BigInt::from(n0))
                    + BigRational::new(BigInt::from(2), BigInt::from(n1))
            );
            assert!(report.image_fano);
        }
    }

    #[test]
    fn fano_classification() {
        let report = join(1, 1).fano_report().unwrap();
        assert!(report.fano && report.weak_fano);
        assert_eq!(report.minus_k_cubed, rat(44));

        let report = join(2, 1).fano_report().unwrap();
        assert!(!report.fano && report.weak_fano);
        assert_eq!(report.minus_k_cubed, rat(40));

        let report = join(2, 2).fano_report().unwrap();
        assert!(!report.fano && report.weak_fano);

        let report = join(5, 3).fano_report().unwrap();
        assert!(!report.fano && !report.weak_fano);
    }

    #[test]
    fn carpet_identity_holds() {
        for (n0, n1) in [(1, 1), (2, 1), (3, 3), (7, 2)] {
            assert!(join(n0, n1).anticanonical_carpet_identity());
        }
    }

    #[test]
    fn codimension_overflow_is_rejected() {
        let x = join(2, 1);
        let curve = x.minimal_section_first();
        assert!(x.multiply(&curve, &curve).is_err());
        let point = x.multiply(&curve, &ChowClass::beta()).unwrap();
        assert_eq!(x.integrate(&point), rat(1));
        assert!(matches!(
            x.multiply(&point, &ChowClass::beta()),
            Err(Error::CodimensionOverflow { left: 3, right: 1 })
        ));
    }

    #[test]
    fn table_check_distinct_degrees() {
        let report = join(2, 1).reference_table_check().unwrap();
        assert!(report.all_consistent);
        assert_eq!(report.entries.len(), 18);
        let status = |label: &str| {
            report
                .entries
                .iter()
                .find(|e| e.label == label)
                .unwrap_or_else(|| panic!("missing entry {label}"))
                .status
        };
        assert_eq!(status("product(H, H)"), MatchStatus::MatchSwapped);
        assert_eq!(status("product(H, A)"), MatchStatus::MatchSwapped);
        assert_eq!(status("product(A, B)"), MatchStatus::Match);
        assert_eq!(status("pairing(H, f)"), MatchStatus::Match);
        assert_eq!(status("canonical_class"), MatchStatus::MatchSwapped);
        assert_eq!(status("section_first"), MatchStatus::MatchSwapped);
        let ids: Vec<_> = report.discrepancies.iter().map(|d| d.id).collect();
        assert_eq!(ids, ["section_sum_display", "fano_boundary"]);
    }

    #[test]
    fn table_check_equal_degrees() {
        // with n0 = n' every symmetric entry matches directly; only the
        // section formulas still depend on the reading of A, B
        let report = join(3, 3).reference_table_check().unwrap();
        assert!(report.all_consistent);
        for entry in &report.entries {
            let expected = if entry.label.starts_with("section") {
                MatchStatus::MatchSwapped
            } else {
                MatchStatus::Match
            };
            assert_eq!(entry.status, expected, "{}", entry.label);
        }
        assert_eq!(report.discrepancies.len(), 2);
    }

    #[test]
    fn display_formats() {
        let x = join(3, 1);
        assert_eq!(x.canonical_class().to_string(), "alpha - beta - 2*H");
        assert_eq!(ChowClass::zero().to_string(), "0");
        let half = ChowClass::fiber().scale(&BigRational::new(
            BigInt::from(1),
            BigInt::from(2),
        ));
        assert_eq!(half.to_string(), "1/2*alpha*beta");
    }
}
