//! Rank-2 Picard lattices of polarized hyperelliptic K3 surfaces.
//!
//! A K3 surface with a degree-2g−2 polarization L and an elliptic pencil E
//! with L·E = 2 maps 2:1 onto a surface of minimal degree; the three
//! families relevant here have the general member mapping onto F₀, F₁, or
//! F₄. Each family is recorded as a rank-2 lattice with a distinguished
//! polarization class, and the lattice data decides whether the polarization
//! is primitive — which in turn decides whether the corresponding point of
//! the Hilbert scheme can lie on more than one component.

use std::fmt;

use num::bigint::BigInt;
use num::traits::{Signed, Zero};
use num::Integer;

use crate::error::{Error, Result};

/// A rank-2 lattice: a symmetric integer Gram matrix with labeled basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice2 {
    gram: [[BigInt; 2]; 2],
    labels: [&'static str; 2],
}

impl Lattice2 {
    /// Lattice with the given Gram matrix; panics unless symmetric.
    pub fn new(gram: [[BigInt; 2]; 2], labels: [&'static str; 2]) -> Self {
        assert_eq!(gram[0][1], gram[1][0], "Gram matrix must be symmetric");
        Lattice2 { gram, labels }
    }

    /// Section lattice of a polarized hyperelliptic K3 of genus g ≥ 2:
    /// basis (L, E) with L² = 2g − 2, L·E = 2, E² = 0.
    pub fn hyperelliptic_section(g: impl Into<BigInt>) -> Result<Self> {
        let g = g.into();
        if g < BigInt::from(2) {
            return Err(Error::GenusTooSmall { g });
        }
        let two_g_minus_2 = BigInt::from(2) * &g - 2;
        Ok(Lattice2::new(
            [
                [two_g_minus_2, BigInt::from(2)],
                [BigInt::from(2), BigInt::zero()],
            ],
            ["L", "E"],
        ))
    }

    /// Lattice of the family mapping to F₀: two elliptic pencils E₁, E₂
    /// with E₁·E₂ = 2.
    pub fn f0() -> Self {
        Lattice2::new(
            [
                [BigInt::zero(), BigInt::from(2)],
                [BigInt::from(2), BigInt::zero()],
            ],
            ["E1", "E2"],
        )
    }

    /// Lattice of the family mapping to F₁: an elliptic pencil E and a
    /// (−2)-curve R with E·R = 2.
    pub fn f1() -> Self {
        Lattice2::new(
            [
                [BigInt::zero(), BigInt::from(2)],
                [BigInt::from(2), BigInt::from(-2)],
            ],
            ["E", "R"],
        )
    }

    /// Lattice of the family mapping to F₄: an elliptic pencil E and a
    /// (−2)-curve R with E·R = 1.
    pub fn f4() -> Self {
        Lattice2::new(
            [
                [BigInt::zero(), BigInt::from(1)],
                [BigInt::from(1), BigInt::from(-2)],
            ],
            ["E", "R"],
        )
    }

    pub fn gram(&self) -> &[[BigInt; 2]; 2] {
        &self.gram
    }

    pub fn labels(&self) -> [&'static str; 2] {
        self.labels
    }

    /// Bilinear pairing of two classes in basis coordinates.
    pub fn inner(&self, u: &[BigInt; 2], v: &[BigInt; 2]) -> BigInt {
        let mut sum = BigInt::zero();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                sum += ui * vj * &self.gram[i][j];
            }
        }
        sum
    }

    /// Self-intersection of a class.
    pub fn self_int(&self, v: &[BigInt; 2]) -> BigInt {
        self.inner(v, v)
    }

    /// Determinant of the Gram matrix.
    pub fn det(&self) -> BigInt {
        &self.gram[0][0] * &self.gram[1][1] - &self.gram[0][1] * &self.gram[1][0]
    }
}

impl fmt::Display for Lattice2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}, {}> with Gram [[{}, {}], [{}, {}]]",
            self.labels[0],
            self.labels[1],
            self.gram[0][0],
            self.gram[0][1],
            self.gram[1][0],
            self.gram[1][1]
        )
    }
}

/// Largest integer dividing a nonzero class; 1 means the class is primitive.
pub fn divisibility(v: &[BigInt; 2]) -> Result<BigInt> {
    if v[0].is_zero() && v[1].is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok(v[0].abs().gcd(&v[1].abs()))
}

/// Genus of a polarization from its self-intersection: g = v²/2 + 1.
/// Defined here only for even self-intersection at least 2.
pub fn genus_of(self_int: &BigInt) -> Result<BigInt> {
    if self_int.is_odd() || *self_int < BigInt::from(2) {
        return Err(Error::GenusUndefined {
            self_int: self_int.clone(),
        });
    }
    Ok(self_int / 2 + 1)
}

/// Whether genus-g double structures sit on two distinct Hilbert-scheme
/// components: exactly when g > 9 and g ≡ 1 (mod 4). Defined for g ≥ 3.
pub fn two_component_condition(g: &BigInt) -> Result<bool> {
    if *g < BigInt::from(3) {
        return Err(Error::GenusTooSmall { g: g.clone() });
    }
    Ok(*g > BigInt::from(9) && g % 4 == BigInt::from(1))
}

/// The three lattice families, named by the minimal-degree surface their
/// general member double-covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeModel {
    F0,
    F1,
    F4,
}

impl LatticeModel {
    pub fn label(&self) -> &'static str {
        match self {
            LatticeModel::F0 => "F0",
            LatticeModel::F1 => "F1",
            LatticeModel::F4 => "F4",
        }
    }

    /// Smallest parameter for which the polarization class is ample enough
    /// to define the model.
    pub fn min_parameter(&self) -> i64 {
        match self {
            LatticeModel::F0 => 1,
            LatticeModel::F1 => 2,
            LatticeModel::F4 => 5,
        }
    }

    pub fn lattice(&self) -> Lattice2 {
        match self {
            LatticeModel::F0 => Lattice2::f0(),
            LatticeModel::F1 => Lattice2::f1(),
            LatticeModel::F4 => Lattice2::f4(),
        }
    }

    /// Coordinates of the degree-n polarization class in the model basis:
    /// E₁ + n·E₂ on F₀, n·E + R on F₁, n·E + 2R on F₄.
    pub fn polarization_coords(&self, n: i64) -> Result<[BigInt; 2]> {
        if n < self.min_parameter() {
            return Err(Error::ModelParameterTooSmall {
                model: self.label(),
                min: self.min_parameter(),
                n: BigInt::from(n),
            });
        }
        Ok(match self {
            LatticeModel::F0 => [BigInt::from(1), BigInt::from(n)],
            LatticeModel::F1 => [BigInt::from(n), BigInt::from(1)],
            LatticeModel::F4 => [BigInt::from(n), BigInt::from(2)],
        })
    }

    /// Genus of the degree-n polarization in closed form.
    fn genus_closed_form(&self, n: i64) -> BigInt {
        BigInt::from(match self {
            LatticeModel::F0 => 2 * n + 1,
            LatticeModel::F1 => 2 * n,
            LatticeModel::F4 => 2 * n - 3,
        })
    }
}

impl fmt::Display for LatticeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A polarized lattice family member: the lattice, the polarization class,
/// and its numerical invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticModel {
    pub model: LatticeModel,
    pub n: i64,
    pub lattice: Lattice2,
    pub class: [BigInt; 2],
    pub self_int: BigInt,
    pub genus: BigInt,
    pub divisibility: BigInt,
    pub primitive: bool,
}

/// Build the degree-n member of a lattice family and derive its invariants,
/// cross-checking the genus against the closed form for the family.
pub fn hyperelliptic_model(model: LatticeModel, n: i64) -> Result<HyperellipticModel> {
    let lattice = model.lattice();
    let class = model.polarization_coords(n)?;
    let self_int = lattice.self_int(&class);
    let genus = genus_of(&self_int)?;
    if genus != model.genus_closed_form(n) {
        return Err(Error::internal(format!(
            "lattice genus {genus} disagrees with the closed form for {model} at n = {n}"
        )));
    }
    let divisibility = divisibility(&class)?;
    let primitive = divisibility == BigInt::from(1);
    Ok(HyperellipticModel {
        model,
        n,
        lattice,
        class,
        self_int,
        genus,
        divisibility,
        primitive,
    })
}
