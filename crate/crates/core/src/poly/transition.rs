use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bits::{self, Mask};
use crate::capacity;
use crate::error::{Error, Result};
use crate::setsys::SetSystem;

use super::RatPoly;

/// Weights [a, b, c] for the three parts of an ordered tripartition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionWeights {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl TransitionWeights {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> TransitionWeights {
        TransitionWeights { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> TransitionWeights {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        TransitionWeights { a: r(a), b: r(b), c: r(c) }
    }
}

/// In-place min-plus distance transform over the hypercube: afterwards
/// `dist[s]` is min over t of (initial `dist[t]` + |s Δ t|).
pub(crate) fn hamming_transform(dist: &mut [u8], k: usize) {
    for j in 0..k {
        let b = 1usize << j;
        for s in 0..dist.len() {
            if s & b == 0 {
                let (x, y) = (dist[s], dist[s | b]);
                dist[s] = x.min(y.saturating_add(1));
                dist[s | b] = y.min(x.saturating_add(1));
            }
        }
    }
}

/// counts[nb][nc][d] = number of tripartitions (A, B, C) with |B| = nb,
/// |C| = nc and d_{M*B ∗̄ C} = d.
fn tripartition_counts(m: &SetSystem) -> Vec<Vec<Vec<u64>>> {
    let n = m.n();
    let mut counts = vec![vec![vec![0u64; n + 1]; n + 1]; n + 1];
    fn walk(sys: &SetSystem, i: usize, c: Mask, counts: &mut [Vec<Vec<u64>>]) {
        let n = sys.n();
        if i == n {
            let rest = bits::full(n) & !c;
            let k = bits::popcount(rest);
            let nc = bits::popcount(c);
            let mut dist = vec![u8::MAX; 1 << k];
            for &y in sys.family() {
                let idx = bits::compress(y, rest) as usize;
                dist[idx] = dist[idx].min(bits::popcount(y & c) as u8);
            }
            hamming_transform(&mut dist, k);
            for (b, &d) in dist.iter().enumerate() {
                counts[(b as u64).count_ones() as usize][nc][d as usize] += 1;
            }
            return;
        }
        walk(sys, i + 1, c, counts);
        walk(&sys.dual_pivot_one(i), i + 1, c | bits::bit(i), counts);
    }
    walk(m, 0, 0, &mut counts);
    counts
}

fn powers(x: &BigRational, n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    for k in 0..n {
        out.push(&out[k] * x);
    }
    out
}

/// Q_{[a,b,c]}(M)(y): the sum over ordered tripartitions (A, B, C) of V of
/// a^|A| b^|B| c^|C| y^{d_{M*B ∗̄ C}}.
///
/// For each C the values d_{M ∗̄ C * B} over all B ⊆ V \ C come from one
/// distance transform, since d_{N*B} = min over Y ∈ N of |Y Δ B|.
pub fn transition_direct(m: &SetSystem, w: &TransitionWeights) -> Result<RatPoly> {
    capacity::check("transition polynomial", m.n(), capacity::TRANSITION_MAX)?;
    m.require_proper()?;
    let n = m.n();
    let counts = tripartition_counts(m);
    let (pa, pb, pc) = (powers(&w.a, n), powers(&w.b, n), powers(&w.c, n));
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (nb, by_c) in counts.iter().enumerate() {
        for (nc, by_d) in by_c.iter().enumerate() {
            if nb + nc > n {
                continue;
            }
            let weight = &pa[n - nb - nc] * &pb[nb] * &pc[nc];
            if weight.is_zero() {
                continue;
            }
            for (d, &cnt) in by_d.iter().enumerate() {
                if cnt != 0 {
                    coeffs[d] += &weight * BigRational::from_integer(BigInt::from(cnt));
                }
            }
        }
    }
    Ok(RatPoly::new(coeffs))
}

/// Q_{[a,b,0]}(M)(y) by the deletion recursion
/// Q(M) = a Q(M\u) + b Q(M*u\u) for nonsingular u, with factors (a + by)
/// for a loop and (b + ay) for a coloop.
pub fn transition_recursive(m: &SetSystem, a: &BigRational, b: &BigRational) -> Result<RatPoly> {
    if let Some(v) = m.exchange_violation() {
        return Err(Error::NotDeltaMatroid(m.describe_violation(v)));
    }
    m.require_proper()?;
    transition_rec(m, a, b)
}

fn transition_rec(m: &SetSystem, a: &BigRational, b: &BigRational) -> Result<RatPoly> {
    if m.is_empty() {
        return Err(Error::NotDeltaMatroid("a minor has no members".into()));
    }
    let n = m.n();
    if n == 0 {
        return Ok(RatPoly::one());
    }
    let u = (0..n).find(|&u| !m.is_singular(u)).unwrap_or(0);
    if m.is_loop(u) {
        let f = RatPoly::linear(a.clone(), b.clone());
        Ok(&f * &transition_rec(&m.delete_one(u), a, b)?)
    } else if m.is_coloop(u) {
        let f = RatPoly::linear(b.clone(), a.clone());
        Ok(&f * &transition_rec(&m.pivot_delete_one(u), a, b)?)
    } else {
        let del = transition_rec(&m.delete_one(u), a, b)?.scale(a);
        let piv = transition_rec(&m.pivot_delete_one(u), a, b)?.scale(b);
        Ok(&del + &piv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::Ground;

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn empty_ground_gives_one() {
        let q = transition_direct(&SetSystem::trivial(), &TransitionWeights::from_ints(2, 3, 5)).unwrap();
        assert_eq!(q, RatPoly::one());
    }

    #[test]
    fn single_loop_and_coloop() {
        let g = Ground::numbered(1);
        let lp = SetSystem::new(g.clone(), [0]).unwrap();
        let cl = SetSystem::new(g, [1]).unwrap();
        let (a, b) = (rat(2), rat(7));
        assert_eq!(transition_recursive(&lp, &a, &b).unwrap(), RatPoly::linear(a.clone(), b.clone()));
        assert_eq!(transition_recursive(&cl, &a, &b).unwrap(), RatPoly::linear(b.clone(), a.clone()));
        let w = TransitionWeights::new(a.clone(), b.clone(), BigRational::zero());
        assert_eq!(transition_direct(&lp, &w).unwrap(), RatPoly::linear(a.clone(), b.clone()));
        assert_eq!(transition_direct(&cl, &w).unwrap(), RatPoly::linear(b, a));
    }

    #[test]
    fn distance_transform_matches_brute_force() {
        let seeds = [(0b000usize, 2u8), (0b101, 0), (0b110, 3)];
        let mut dist = vec![u8::MAX; 8];
        for &(s, v) in &seeds {
            dist[s] = v;
        }
        hamming_transform(&mut dist, 3);
        for (t, &d) in dist.iter().enumerate() {
            let want = seeds.iter().map(|&(s, v)| v + (s ^ t).count_ones() as u8).min().unwrap();
            assert_eq!(d, want);
        }
    }

    #[test]
    fn rejects_non_delta_matroid() {
        let m = SetSystem::new(Ground::numbered(3), [0, 0b111]).unwrap();
        assert!(matches!(transition_recursive(&m, &rat(1), &rat(1)), Err(Error::NotDeltaMatroid(_))));
    }
}
