//! Exact arithmetic in GF(2) and GF(4).
//!
//! GF(4) = {0, 1, ω, ω²} with ω² = ω + 1. An element is stored as the two-bit
//! code `lo | hi << 1` of `lo + hi·ω`, so addition is XOR of codes and GF(2)
//! is the subset of codes {0, 1}.
//!
//! ```text
//! code  0  1  2  3
//! elt   0  1  ω  ω²
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// ω
    pub const W: Gf4 = Gf4(2);
    /// ω² = ω + 1
    pub const W2: Gf4 = Gf4(3);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::W2];

    /// Element with the given two-bit code (higher bits are ignored).
    pub const fn from_code(code: u8) -> Gf4 {
        Gf4(code & 3)
    }

    pub const fn code(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True for 0 and 1, the prime subfield.
    pub const fn is_binary(self) -> bool {
        self.0 < 2
    }

    pub fn inverse(self) -> Result<Gf4> {
        match self.0 {
            0 => Err(Error::DivisionByZero),
            // x³ = 1 on the multiplicative group, so x⁻¹ = x²
            _ => Ok(self.frobenius()),
        }
    }

    /// The nontrivial automorphism of GF(4): x ↦ x², which swaps ω and ω².
    pub const fn frobenius(self) -> Gf4 {
        // (lo + hi·ω)² = (lo + hi) + hi·ω
        Gf4(self.0 ^ (self.0 >> 1))
    }

    pub fn apply(self, alpha: Automorphism) -> Gf4 {
        match alpha {
            Automorphism::Id => self,
            Automorphism::Inv => self.frobenius(),
        }
    }

    pub const fn token(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

// characteristic 2
impl Neg for Gf4 {
    type Output = Gf4;
    #[inline]
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl FromStr for Gf4 {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Gf4, String> {
        match s {
            "0" => Ok(Gf4::ZERO),
            "1" => Ok(Gf4::ONE),
            "w" => Ok(Gf4::W),
            "W" => Ok(Gf4::W2),
            other => Err(format!("invalid GF(4) token `{other}` (expected 0, 1, w or W)")),
        }
    }
}

pub fn gf4_add(x: Gf4, y: Gf4) -> Gf4 {
    x + y
}

pub fn gf4_mul(x: Gf4, y: Gf4) -> Gf4 {
    x * y
}

pub fn gf4_inverse(x: Gf4) -> Result<Gf4> {
    x.inverse()
}

pub fn apply_automorphism(alpha: Automorphism, x: Gf4) -> Gf4 {
    x.apply(alpha)
}

/// Ordered so that `Gf2 < Gf4` (the smaller field embeds in the larger).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Gf2,
    Gf4,
}

impl Field {
    pub fn contains(self, x: Gf4) -> bool {
        match self {
            Field::Gf2 => x.is_binary(),
            Field::Gf4 => true,
        }
    }

    pub fn elements(self) -> &'static [Gf4] {
        match self {
            Field::Gf2 => &Gf4::ALL[..2],
            Field::Gf4 => &Gf4::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Gf4 => "gf4",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Field, String> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" => Ok(Field::Gf2),
            "gf4" => Ok(Field::Gf4),
            other => Err(format!("unknown field `{other}` (expected gf2 or gf4)")),
        }
    }
}

/// An involutive automorphism: the identity, or the Frobenius map of GF(4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Automorphism {
    Id,
    Inv,
}

impl Automorphism {
    /// `Inv` is only meaningful over GF(4).
    pub fn check(self, field: Field) -> Result<()> {
        match (self, field) {
            (Automorphism::Inv, Field::Gf2) => Err(Error::AutomorphismMismatch),
            _ => Ok(()),
        }
    }
}

/// A field together with a selected involutive automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldTag {
    pub field: Field,
    pub alpha: Automorphism,
}

impl FieldTag {
    pub fn new(field: Field, alpha: Automorphism) -> Result<FieldTag> {
        alpha.check(field)?;
        Ok(FieldTag { field, alpha })
    }
}
