use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bicycle;
use crate::bits::{self, Mask};
use crate::capacity;
use crate::error::Result;
use crate::matroid::Matroid;
use crate::setsys::SetSystem;

use super::penrose::penrose_direct;
use super::transition::{transition_direct, TransitionWeights};
use super::tutte::tutte;
use super::{sign, IntPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

/// One identity with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalReport {
    pub penrose: IntPoly,
    pub checks: Vec<Check>,
}

impl EvalReport {
    /// No applicable identity failed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn compare(&mut self, name: &str, lhs: impl fmt::Display, rhs: impl fmt::Display, ok: bool) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, lhs: lhs.to_string(), rhs: rhs.to_string() });
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, name: &str, lhs: T, rhs: T) {
        let ok = lhs == rhs;
        self.compare(name, lhs, rhs, ok);
    }

    fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skipped(reason.into()), lhs: String::new(), rhs: String::new() });
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "P(y) = {}", self.penrose)?;
        for c in &self.checks {
            match &c.status {
                Status::Pass => writeln!(f, "[pass] {}: {} = {}", c.name, c.lhs, c.rhs)?,
                Status::Fail => writeln!(f, "[FAIL] {}: {} != {}", c.name, c.lhs, c.rhs)?,
                Status::Skipped(why) => writeln!(f, "[skip] {}: {}", c.name, why)?,
            }
        }
        Ok(())
    }
}

pub const P_AT_1: &str = "P(1) = 0";
pub const P_REFLECT: &str = "P(y) = (-1)^d(M*V) Q[1,1,0](M ~V)(-y)";
pub const P_AT_M1: &str = "P(-1) = (-1)^d(M*V) 2^|V|";
pub const P_AT_2: &str = "P(2) = (-1)^(d(M)+d(M*V)+|V|) 2^d(M)";
pub const EULER_AT_2: &str = "Eulerian: P(2) = 2^rank";
pub const EULER_AT_M1: &str = "Eulerian: P(-1) = (-1)^nullity 2^|V|";
pub const TUTTE_AT_M2: &str = "P(-2) = 2^rank t(0,-3)";
pub const DEGREE_BOUND: &str = "deg P <= d(M*V)";
pub const ZERO_PENROSE: &str = "P = 0 <=> deg P < d(M*V) <=> M+X = M for some odd X";
pub const EVEN_SIGN_B: &str = "Q[1,2,0](M)(y) = (-1)^d(M) Q[1,-2,0](M)(-y)";
pub const EVEN_SIGN_A: &str = "Q[1,2,0](M)(y) = (-1)^d(M*V) Q[-1,2,0](M)(-y)";

fn int(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

fn q(m: &SetSystem, a: i64, b: i64) -> Result<RatPoly> {
    transition_direct(m, &TransitionWeights::from_ints(a, b, 0))
}

/// An odd X with M + X = M, searched over all 2^|V| subsets.
fn odd_fixed_point(m: &SetSystem) -> Option<Mask> {
    fn walk(m: &SetSystem, cur: &SetSystem, i: usize, x: Mask) -> Option<Mask> {
        if i == m.n() {
            return (x.count_ones() % 2 == 1 && cur == m).then_some(x);
        }
        walk(m, cur, i + 1, x).or_else(|| walk(m, &cur.loop_complement_one(i), i + 1, x | bits::bit(i)))
    }
    walk(m, m, 0, 0)
}

/// Every evaluation identity for the Penrose polynomial whose hypotheses
/// hold for `m`. `binary` supplies a representation for the Eulerian checks.
pub fn penrose_evaluations(m: &SetSystem, binary: Option<&Matroid>) -> Result<EvalReport> {
    let p = penrose_direct(m)?;
    let n = m.n();
    let mut r = EvalReport { penrose: p.clone(), checks: Vec::new() };
    let at = |y: i64| p.eval(&BigInt::from(y));
    let d_m = m.d()?;
    let d_dual = m.d_dual()?;
    let small = n <= capacity::TRANSITION_MAX;

    if n > 0 {
        r.expect_eq(P_AT_1, at(1), BigInt::zero());
    } else {
        r.skip(P_AT_1, "empty ground set");
    }

    let nv = m.dual_pivot(m.ground().full())?;
    let vf_safe = if n <= capacity::VF_SAFE_MAX { Some(m.is_delta_matroid() && m.is_vf_safe()?) } else { None };
    if nv.is_even() {
        if small {
            let rhs = q(&nv, 1, 1)?.reflect().scale(&int(sign(d_dual)));
            r.expect_eq(P_REFLECT, p.to_rational(), rhs);
        } else {
            r.skip(P_REFLECT, "ground set too large for the transition sum");
        }
        r.expect_eq(P_AT_M1, at(-1), sign(d_dual) * pow2(n));
        match vf_safe {
            Some(true) => r.expect_eq(P_AT_2, at(2), sign(d_m + d_dual + n) * pow2(d_m)),
            Some(false) => r.skip(P_AT_2, "M is not a vf-safe delta-matroid"),
            None => r.skip(P_AT_2, "ground set too large for the vf-safety check"),
        }
    } else {
        for name in [P_REFLECT, P_AT_M1, P_AT_2] {
            r.skip(name, "M ~V is not even");
        }
    }

    match binary {
        Some(bm) if bm.is_binary() && bm.set_system() == m => match bicycle::is_eulerian(bm)? {
            true => {
                r.expect_eq(EULER_AT_2, at(2), pow2(bm.rank()));
                r.expect_eq(EULER_AT_M1, at(-1), sign(bm.nullity()) * pow2(n));
            }
            false => {
                r.skip(EULER_AT_2, "matroid is not Eulerian");
                r.skip(EULER_AT_M1, "matroid is not Eulerian");
            }
        },
        _ => {
            r.skip(EULER_AT_2, "no binary representation");
            r.skip(EULER_AT_M1, "no binary representation");
        }
    }

    match (Matroid::from_bases(m.clone()), vf_safe) {
        (Ok(mat), Some(true)) => {
            let t = tutte(&mat).eval(&BigRational::zero(), &int(BigInt::from(-3)));
            r.expect_eq(TUTTE_AT_M2, int(at(-2)), int(pow2(mat.rank())) * t);
        }
        (Ok(_), Some(false)) => r.skip(TUTTE_AT_M2, "matroid is not vf-safe"),
        (Ok(_), None) => r.skip(TUTTE_AT_M2, "ground set too large for the vf-safety check"),
        (Err(_), _) => r.skip(TUTTE_AT_M2, "M is not a matroid"),
    }

    if m.is_equicardinal() {
        let deg = p.degree();
        let deg_text = deg.map_or("-inf".to_string(), |d| d.to_string());
        r.compare(DEGREE_BOUND, &deg_text, d_dual, deg.is_none_or(|d| d <= d_dual));
        let zero = p.is_zero();
        let drop = deg.is_none_or(|d| d < d_dual);
        let fixed = odd_fixed_point(m);
        let witness = fixed.map_or("none".to_string(), |x| m.ground().format_set(x));
        r.compare(
            ZERO_PENROSE,
            format!("P = 0: {zero}, deg P < d(M*V): {drop}"),
            format!("odd fixed point: {witness}"),
            zero == drop && drop == fixed.is_some(),
        );
    } else {
        r.skip(DEGREE_BOUND, "M is not equicardinal");
        r.skip(ZERO_PENROSE, "M is not equicardinal");
    }

    if !m.is_even() {
        r.skip(EVEN_SIGN_B, "M is not even");
        r.skip(EVEN_SIGN_A, "M is not even");
    } else if !small {
        r.skip(EVEN_SIGN_B, "ground set too large for the transition sum");
        r.skip(EVEN_SIGN_A, "ground set too large for the transition sum");
    } else {
        let base = q(m, 1, 2)?;
        r.expect_eq(EVEN_SIGN_B, base.clone(), q(m, 1, -2)?.reflect().scale(&int(sign(d_m))));
        r.expect_eq(EVEN_SIGN_A, base, q(m, -1, 2)?.reflect().scale(&int(sign(d_dual))));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_two_five() {
        let m = Matroid::uniform(2, 5).unwrap();
        let r = penrose_evaluations(m.set_system(), None).unwrap();
        assert_eq!(r.penrose, IntPoly::from_ints(&[-10, 15, -6, 1]));
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.get(P_AT_M1).unwrap().lhs, "-32");
        assert_eq!(r.get(P_AT_2).unwrap().lhs, "4");
        assert_eq!(r.get(P_AT_2).unwrap().status, Status::Pass);
    }

    #[test]
    fn uniform_three_five_vanishes() {
        let m = Matroid::uniform(3, 5).unwrap();
        let r = penrose_evaluations(m.set_system(), None).unwrap();
        assert!(r.penrose.is_zero());
        let z = r.get(ZERO_PENROSE).unwrap();
        assert_eq!(z.status, Status::Pass);
        assert!(z.rhs.contains('{'), "{}", z.rhs);
    }
}
