use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bits::Mask;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::setsys::SetSystem;

use super::transition::{transition_direct, TransitionWeights};

/// A polynomial in x and y; `grid[i][j]` is the coefficient of x^i y^j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    grid: Vec<Vec<BigInt>>,
}

impl Poly2 {
    pub fn one() -> Poly2 {
        Poly2 { grid: vec![vec![BigInt::one()]] }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.grid.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn grid(&self) -> &[Vec<BigInt>] {
        &self.grid
    }

    fn normalize(mut self) -> Poly2 {
        for row in &mut self.grid {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while self.grid.last().is_some_and(Vec::is_empty) {
            self.grid.pop();
        }
        self
    }

    fn shifted(&self, di: usize, dj: usize) -> Poly2 {
        let mut grid = vec![Vec::new(); di];
        for row in &self.grid {
            let mut r = vec![BigInt::zero(); dj];
            r.extend(row.iter().cloned());
            grid.push(r);
        }
        Poly2 { grid }.normalize()
    }

    fn add(&self, other: &Poly2) -> Poly2 {
        let rows = self.grid.len().max(other.grid.len());
        let grid = (0..rows)
            .map(|i| {
                let cols = self.grid.get(i).map_or(0, Vec::len).max(other.grid.get(i).map_or(0, Vec::len));
                (0..cols).map(|j| self.coeff(i, j) + other.coeff(i, j)).collect()
            })
            .collect();
        Poly2 { grid }.normalize()
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        let mut xp = BigRational::one();
        for row in &self.grid {
            let mut yp = BigRational::one();
            for c in row {
                total += &xp * &yp * BigRational::from_integer(c.clone());
                yp *= y;
            }
            xp *= x;
        }
        total
    }
}

impl fmt::Display for Poly2 {
    /// Terms by descending total degree, then descending power of x.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(usize, usize, &BigInt)> = Vec::new();
        for (i, row) in self.grid.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((i, j, c));
                }
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (k, (i, j, c)) in terms.into_iter().enumerate() {
            let neg = c < &BigInt::zero();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = if neg { -c.clone() } else { c.clone() };
            if !mag.is_one() || (i == 0 && j == 0) {
                write!(f, "{mag}")?;
            }
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => f.write_str(v)?,
                    _ => write!(f, "{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Tutte polynomial by deletion and contraction, caching on the family of bases.
pub fn tutte(m: &Matroid) -> Poly2 {
    let mut cache = HashMap::new();
    tutte_rec(m.set_system(), &mut cache)
}

fn tutte_rec(b: &SetSystem, cache: &mut HashMap<(usize, Vec<Mask>), Poly2>) -> Poly2 {
    let n = b.n();
    if n == 0 {
        return Poly2::one();
    }
    let key = (n, b.family().to_vec());
    if let Some(t) = cache.get(&key) {
        return t.clone();
    }
    let u = n - 1;
    let t = if b.is_loop(u) {
        tutte_rec(&b.delete_one(u), cache).shifted(0, 1)
    } else if b.is_coloop(u) {
        tutte_rec(&b.pivot_delete_one(u), cache).shifted(1, 0)
    } else {
        tutte_rec(&b.delete_one(u), cache).add(&tutte_rec(&b.pivot_delete_one(u), cache))
    };
    cache.insert(key, t.clone());
    t
}

/// Both sides of Q_{[a,b,0]}(M)(y) = a^ν b^ρ t_M(1 + (a/b)y, 1 + (b/a)y) at one y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteCheck {
    pub y: BigRational,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl TutteCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn verify_transition_tutte(m: &Matroid, a: &BigRational, b: &BigRational, samples: &[BigRational]) -> Result<Vec<TutteCheck>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let q = transition_direct(m.set_system(), &TransitionWeights::new(a.clone(), b.clone(), BigRational::zero()))?;
    let t = tutte(m);
    let scale = num_traits::pow(a.clone(), m.nullity()) * num_traits::pow(b.clone(), m.rank());
    let one = BigRational::one();
    Ok(samples
        .iter()
        .map(|y| {
            let x_arg = &one + a / b * y;
            let y_arg = &one + b / a * y;
            TutteCheck { y: y.clone(), lhs: q.eval(y), rhs: &scale * t.eval(&x_arg, &y_arg) }
        })
        .collect())
}
