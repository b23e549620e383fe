use num_bigint::BigInt;
use num_traits::Zero;

use crate::bits::{self, Mask};
use crate::capacity;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::Matroid;
use crate::setsys::SetSystem;

use super::transition::hamming_transform;
use super::{sign, IntPoly};

fn accumulate(coeffs: &mut Vec<BigInt>, d: usize, s: &BigInt) {
    if coeffs.len() <= d {
        coeffs.resize(d + 1, BigInt::zero());
    }
    coeffs[d] += s;
}

/// p₁(M)(y) = Σ_X (−1)^|X| y^{d_{M*X}}.
pub fn p1(m: &SetSystem) -> Result<IntPoly> {
    capacity::check("p1 polynomial", m.n(), capacity::PENROSE_MAX)?;
    m.require_proper()?;
    let n = m.n();
    let mut dist = vec![u8::MAX; 1 << n];
    for &y in m.family() {
        dist[y as usize] = 0;
    }
    hamming_transform(&mut dist, n);
    let mut counts = vec![[0i64; 2]; n + 1];
    for (x, &d) in dist.iter().enumerate() {
        counts[d as usize][(x.count_ones() & 1) as usize] += 1;
    }
    Ok(IntPoly::new(counts.iter().map(|[even, odd]| BigInt::from(even - odd)).collect()))
}

/// p₁(G)(y) = Σ_X (−1)^|X| y^{ν(G[X])}, one nullity per subset.
pub fn p1_graph_direct(g: &Graph) -> IntPoly {
    let mut coeffs = Vec::new();
    for x in bits::submasks(g.vertices().full()) {
        accumulate(&mut coeffs, g.induced(x).nullity(), &sign(bits::popcount(x)));
    }
    IntPoly::new(coeffs)
}

/// p₁(G) by local complementation: a looped vertex u gives
/// p₁(G\u) − p₁(G*u\u), an edge uv between unlooped vertices gives
/// p₁(G\u) + p₁(G*{u,v}\u), and each isolated unlooped vertex a factor (1 − y).
pub fn p1_graph_recursive(g: &Graph) -> IntPoly {
    let n = g.n();
    if n == 0 {
        return IntPoly::one();
    }
    if let Some(u) = (0..n).find(|&u| g.has_loop(u)) {
        let b = bits::bit(u);
        let lc = g.local_complement(u).expect("u is looped");
        return &p1_graph_recursive(&g.delete(b)) - &p1_graph_recursive(&lc.delete(b));
    }
    if let Some(u) = (0..n).find(|&u| g.neighbours(u) != 0) {
        let v = bits::ones(g.neighbours(u)).next().expect("u has a neighbour");
        let b = bits::bit(u);
        let elc = g.edge_local_complement(u, v).expect("no vertex is looped");
        return &p1_graph_recursive(&g.delete(b)) + &p1_graph_recursive(&elc.delete(b));
    }
    IntPoly::from_ints(&[1, -1]).pow(n)
}

/// P_M(y) = Σ_X (−1)^|X| y^{d_{M*V ∗̄ X}}.
pub fn penrose_direct(m: &SetSystem) -> Result<IntPoly> {
    capacity::check("Penrose polynomial", m.n(), capacity::PENROSE_MAX)?;
    m.require_proper()?;
    let mut coeffs = Vec::new();
    fn walk(sys: &SetSystem, i: usize, size: usize, coeffs: &mut Vec<BigInt>) {
        if i == sys.n() {
            let d = bits::popcount(sys.family()[0]);
            accumulate(coeffs, d, &sign(size));
            return;
        }
        walk(sys, i + 1, size, coeffs);
        walk(&sys.dual_pivot_one(i), i + 1, size + 1, coeffs);
    }
    walk(&m.twist(m.ground().full())?, 0, 0, &mut coeffs);
    Ok(IntPoly::new(coeffs))
}

/// P_M by the recursion in M ∗̄ V: for u nonsingular there,
/// P_M = P_{M*u\u} − P_{M∗̄u\u}; a coloop gives (1 − y)·P_{M*u\u}, a loop
/// (y − 1)·P_{M∗̄u\u}.
///
/// Every visited M ∗̄ V must be a delta-matroid; the first one that is not
/// is reported as a failure of vf-safety.
pub fn penrose_recursive(m: &SetSystem) -> Result<IntPoly> {
    m.require_proper()?;
    penrose_rec(m)
}

fn penrose_rec(m: &SetSystem) -> Result<IntPoly> {
    let n = m.n();
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let nv = m.dual_pivot(m.ground().full())?;
    if let Some(v) = nv.exchange_violation() {
        return Err(Error::NotVfSafe(format!("M ∗̄ V for M = {m} is not a delta-matroid: {}", nv.describe_violation(v))));
    }
    if nv.is_empty() {
        return Err(Error::NotVfSafe(format!("M ∗̄ V for M = {m} has no members")));
    }
    let u = (0..n).find(|&u| !nv.is_singular(u)).unwrap_or(0);
    if nv.is_coloop(u) {
        Ok(&IntPoly::from_ints(&[1, -1]) * &penrose_rec(&m.pivot_delete_one(u))?)
    } else if nv.is_loop(u) {
        Ok(&IntPoly::from_ints(&[-1, 1]) * &penrose_rec(&m.dual_pivot_delete_one(u))?)
    } else {
        Ok(&penrose_rec(&m.pivot_delete_one(u))? - &penrose_rec(&m.dual_pivot_delete_one(u))?)
    }
}

/// P_M = (−1)^ν(M) p₁(G) with M_G = M ∗̄ V * Z for a basis Z.
///
/// G is read off the members of size at most two; the whole of M_G is then
/// compared with M ∗̄ V * Z, so a non-binary input is rejected.
pub fn penrose_fundamental(m: &Matroid, z: Mask) -> Result<IntPoly> {
    let ss = m.set_system();
    ss.ground().check(z)?;
    if !ss.contains(z) {
        return Err(Error::NotABasis(ss.ground().labels_in(z).iter().map(|s| s.to_string()).collect()));
    }
    let target = ss.dual_pivot(ss.ground().full())?.twist(z)?;
    let g = Graph::from_small_sets(&target)?;
    if g.delta_matroid() != target {
        return Err(Error::NotGraphic("M ∗̄ V * Z is not the delta-matroid of its small-set graph; M is not binary".into()));
    }
    let p = p1_graph_recursive(&g);
    Ok(if m.nullity() % 2 == 0 { p } else { -p })
}
