//! D6 group data: conjugacy classes, character table, representation labels
//! and the map between rotation eigenvalues tau and representation types.
//!
//! Class ordering is fixed as {e}, {R_i}, {P_i}, {Rot^(+-1)}, {Rot^(+-2)},
//! {Rot^3} and frozen in the serialization schema.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Number of conjugacy classes (= number of irreducibles).
pub const CLASS_COUNT: usize = 6;

/// Sizes of the conjugacy classes in the fixed order.
pub const CLASS_SIZES: [i64; CLASS_COUNT] = [1, 3, 3, 2, 2, 1];

/// Group order.
pub const GROUP_ORDER: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }
}

/// Label of an irreducible D6 representation.
///
/// The one-dimensional labels carry the parities (rho, p) of the mirror
/// reflections R_k and the exchange reflections P_k respectively; `p = +`
/// is bosonic and `p = -` fermionic under the exchange-S3 subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepLabel {
    OneDim { rho: Parity, p: Parity },
    TwoDimDefining,
    TwoDimTwisted,
}

impl RepLabel {
    pub const ALL: [RepLabel; 6] = [
        RepLabel::OneDim { rho: Parity::Plus, p: Parity::Plus },
        RepLabel::OneDim { rho: Parity::Minus, p: Parity::Plus },
        RepLabel::OneDim { rho: Parity::Plus, p: Parity::Minus },
        RepLabel::OneDim { rho: Parity::Minus, p: Parity::Minus },
        RepLabel::TwoDimDefining,
        RepLabel::TwoDimTwisted,
    ];

    pub fn dimension(self) -> i64 {
        match self {
            RepLabel::OneDim { .. } => 1,
            _ => 2,
        }
    }

    /// Short serialization name: "++", "-+", "+-", "--", "2", "2~".
    pub fn name(self) -> &'static str {
        match self {
            RepLabel::OneDim { rho: Parity::Plus, p: Parity::Plus } => "++",
            RepLabel::OneDim { rho: Parity::Minus, p: Parity::Plus } => "-+",
            RepLabel::OneDim { rho: Parity::Plus, p: Parity::Minus } => "+-",
            RepLabel::OneDim { rho: Parity::Minus, p: Parity::Minus } => "--",
            RepLabel::TwoDimDefining => "2",
            RepLabel::TwoDimTwisted => "2~",
        }
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Character values on the six conjugacy classes, in the fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterVector(pub [i64; CLASS_COUNT]);

impl CharacterVector {
    /// Class-weighted inner product times the group order (exact integer).
    pub fn inner_times_order(&self, other: &CharacterVector) -> i64 {
        (0..CLASS_COUNT)
            .map(|i| CLASS_SIZES[i] * self.0[i] * other.0[i])
            .sum()
    }
}

/// The character table of D6.
pub fn character_table() -> BTreeMap<RepLabel, CharacterVector> {
    use Parity::*;
    let mut t = BTreeMap::new();
    // classes:                         e   R_i  P_i  Rot1 Rot2 Rot3
    t.insert(
        RepLabel::OneDim { rho: Plus, p: Plus },
        CharacterVector([1, 1, 1, 1, 1, 1]),
    );
    t.insert(
        RepLabel::OneDim { rho: Minus, p: Plus },
        CharacterVector([1, -1, 1, -1, 1, -1]),
    );
    t.insert(
        RepLabel::OneDim { rho: Plus, p: Minus },
        CharacterVector([1, 1, -1, -1, 1, -1]),
    );
    t.insert(
        RepLabel::OneDim { rho: Minus, p: Minus },
        CharacterVector([1, -1, -1, 1, 1, 1]),
    );
    t.insert(RepLabel::TwoDimDefining, CharacterVector([2, 0, 0, 1, -1, -2]));
    t.insert(RepLabel::TwoDimTwisted, CharacterVector([2, 0, 0, -1, -1, 2]));
    t
}

/// Decompose the character of a genuine representation into irreducible
/// multiplicities via class-weighted inner products (exact arithmetic).
pub fn decompose(chi: &CharacterVector) -> Result<BTreeMap<RepLabel, u32>> {
    let table = character_table();
    let mut out = BTreeMap::new();
    for (label, irr) in &table {
        let num = chi.inner_times_order(irr);
        if num % GROUP_ORDER != 0 {
            return Err(Error::InvalidCharacter(format!(
                "non-integer multiplicity {num}/12 on {label}"
            )));
        }
        let m = num / GROUP_ORDER;
        if m < 0 {
            return Err(Error::InvalidCharacter(format!(
                "negative multiplicity {m} on {label}"
            )));
        }
        if m > 0 {
            out.insert(*label, m as u32);
        }
    }
    Ok(out)
}

/// Classification of a rotation eigenvalue tau (a sixth root of unity).
#[derive(Debug, Clone, PartialEq)]
pub enum TauClass {
    /// tau = +-1; the candidate one-dimensional representations share
    /// the rotation character chi(Rot1) = tau.
    Type1 { candidates: [RepLabel; 2] },
    /// tau in {-j, -jbar} or {j, jbar} with j = exp(2 pi i / 3).
    Type2(RepLabel),
}

/// Map a sixth root of unity to its representation type.
pub fn rep_of_tau(tau: Complex64) -> Result<TauClass> {
    let tol = 1e-9;
    if (tau.norm() - 1.0).abs() > tol {
        return Err(Error::InvalidInput(format!("tau = {tau} is not unimodular")));
    }
    let angle = tau.arg() / (std::f64::consts::PI / 3.0);
    let k = angle.round();
    if (angle - k).abs() > tol {
        return Err(Error::InvalidInput(format!(
            "tau = {tau} is not a sixth root of unity"
        )));
    }
    use Parity::*;
    Ok(match k.rem_euclid(6.0) as i64 {
        0 => TauClass::Type1 {
            candidates: [
                RepLabel::OneDim { rho: Plus, p: Plus },
                RepLabel::OneDim { rho: Minus, p: Minus },
            ],
        },
        3 => TauClass::Type1 {
            candidates: [
                RepLabel::OneDim { rho: Minus, p: Plus },
                RepLabel::OneDim { rho: Plus, p: Minus },
            ],
        },
        // -j = exp(-i pi/3), -jbar = exp(i pi/3): defining representation
        1 | 5 => TauClass::Type2(RepLabel::TwoDimDefining),
        // j = exp(2 pi i/3), jbar = exp(-2 pi i/3): twisted representation
        2 | 4 => TauClass::Type2(RepLabel::TwoDimTwisted),
        _ => unreachable!(),
    })
}
