//! Univariate polynomials in y with exact coefficients, and the polynomial
//! invariants of set systems built on them.

pub mod eval;
mod penrose;
mod transition;
mod tutte;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use eval::{penrose_evaluations, Check, EvalReport, Status};
pub use penrose::{p1, p1_graph_direct, p1_graph_recursive, penrose_direct, penrose_fundamental, penrose_recursive};
pub use transition::{transition_direct, transition_recursive, TransitionWeights};
pub use tutte::{tutte, verify_transition_tutte, Poly2, TutteCheck};

/// Coefficient rings usable in [`Poly`].
pub trait Coeff: Clone + PartialEq + Zero + One + Signed + fmt::Display {}

impl<T: Clone + PartialEq + Zero + One + Signed + fmt::Display> Coeff for T {}

/// Ascending coefficients with no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Poly<T> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<T> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly<T> {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Poly<T> {
        Poly::new(vec![c])
    }

    /// c·y^k
    pub fn monomial(c: T, k: usize) -> Poly<T> {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn y() -> Poly<T> {
        Poly::monomial(T::one(), 1)
    }

    /// c0 + c1·y
    pub fn linear(c0: T, c1: T) -> Poly<T> {
        Poly::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, y: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * y.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, k: usize) -> Poly<T> {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// p(q(y))
    pub fn compose(&self, q: &Poly<T>) -> Poly<T> {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * q) + &Poly::constant(c.clone()))
    }

    /// p(−y)
    pub fn reflect(&self) -> Poly<T> {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Ascending coefficients separated by spaces; `-` for the zero polynomial.
    pub fn format_coeffs(&self) -> String {
        if self.is_zero() {
            "-".to_string()
        } else {
            self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
        }
    }
}

impl IntPoly {
    pub fn from_ints(coeffs: &[i64]) -> IntPoly {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl RatPoly {
    /// `None` unless every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// `|c|` as printed in a term; non-integral rationals are parenthesized.
fn magnitude<T: Coeff>(c: &T) -> String {
    let s = c.abs().to_string();
    if s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    /// `y^4 - 8y^3 + 35y^2 - 56y + 28`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = magnitude(c);
            let unit = c.abs().is_one();
            match k {
                0 => f.write_str(&mag)?,
                _ => {
                    if !unit {
                        f.write_str(&mag)?;
                    }
                    if k == 1 {
                        f.write_str("y")?;
                    } else {
                        write!(f, "y^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// (−1)^k as an integer.
pub(crate) fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
