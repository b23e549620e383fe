//! Standard representations, bicycle spaces and matroids, the principal
//! tripartition and the Eulerian / bipartite predicates.

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::field::Automorphism;
use crate::graph::Graph;
use crate::ground::Ground;
use crate::matrix::{RectMatrix, SquareMatrix};
use crate::matroid::{Matroid, Subspace};
use crate::setsys::SetSystem;
use crate::vector::{self, PackedVec};

/// B = (I S) obtained by row-reducing the attached representation onto the basis `z`.
pub fn standard_representation(m: &Matroid, z: Mask) -> Result<RectMatrix> {
    let rep = m.representation().ok_or(Error::MissingRepresentation)?;
    m.ground().check(z)?;
    let not_basis = || Error::NotABasis(m.ground().labels_in(z).iter().map(|s| s.to_string()).collect());
    if !m.set_system().contains(z) {
        return Err(not_basis());
    }
    rep.pivot_onto(z).ok_or_else(not_basis)
}

/// R(B, α): the α-symmetric matrix with blocks 0, S, α(−Sᵀ), 0 for B = (I S).
///
/// The row labels of `b` name the identity columns.
pub fn r_matrix(b: &RectMatrix, alpha: Automorphism) -> Result<SquareMatrix> {
    alpha.check(b.field())?;
    let ground = b.ground();
    let rows: Vec<usize> = b.row_labels().iter().map(|l| ground.index_of(l)).collect::<Result<_>>()?;
    let z = rows.iter().fold(0, |m, &i| m | bits::bit(i));
    for (k, &i) in rows.iter().enumerate() {
        if b.rows()[k].project(z) != PackedVec::from_mask(bits::bit(i)) {
            return Err(Error::Dimension("matrix is not of the form (I S) on its row labels".into()));
        }
    }
    let mut a = SquareMatrix::zero(b.field(), ground.clone());
    for (k, &x) in rows.iter().enumerate() {
        for y in bits::ones(ground.full() & !z) {
            let s = b.get(k, y);
            a.set(x, y, s);
            a.set(y, x, (-s).apply(alpha));
        }
    }
    Ok(a)
}

/// BC_L(Y) = {v ∈ L | π_Y(v) ∈ inv(L^⊥)}.
///
/// With generators g_i of L, π_Y(Σ c_i g_i) ∈ inv(L^⊥) iff
/// Σ_i c_i ⟨inv(g_j), π_Y g_i⟩ = 0 for every j, because inv(L^⊥)^⊥ = inv(L).
pub fn bicycle_space(l: &Subspace, y: Mask) -> Result<Subspace> {
    l.ground().check(y)?;
    let gens = l.basis();
    let conj = l.conjugate();
    let k = gens.len();
    let system: Vec<PackedVec> = conj
        .basis()
        .iter()
        .map(|&h| {
            let mut row = PackedVec::ZERO;
            for (i, &g) in gens.iter().enumerate() {
                row.set(i, h.dot(g.project(y)));
            }
            row
        })
        .collect();
    let coeffs = vector::kernel(&system, k);
    let vectors = coeffs
        .iter()
        .map(|c| gens.iter().enumerate().fold(PackedVec::ZERO, |acc, (i, &g)| acc.add(g.scale(c.get(i)))))
        .collect();
    Subspace::new(l.field(), l.ground().clone(), vectors)
}

/// BM_M(Y) = max(M + Y), checked to be a matroid.
pub fn bicycle_matroid(m: &SetSystem, y: Mask) -> Result<Matroid> {
    m.require_proper()?;
    let mx = m.loop_complement(y)?.max_sets();
    Matroid::from_bases(mx).map_err(|e| Error::NotVfSafe(format!("max(M+{}) is not a matroid ({e})", m.ground().format_set(y))))
}

/// d_{M*V ∗̄ Y}
pub fn bicycle_dimension(m: &SetSystem, y: Mask) -> Result<usize> {
    m.twist(m.ground().full())?.dual_pivot(y)?.d()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tripartition {
    pub p: Mask,
    pub q: Mask,
    pub r: Mask,
}

impl Tripartition {
    /// `P: 1 2 3 4  Q: -  R: 5 6`
    pub fn format(&self, ground: &Ground) -> String {
        format!("P: {}  Q: {}  R: {}", ground.format_list(self.p), ground.format_list(self.q), ground.format_list(self.r))
    }

    fn classify(ground: &Ground, flags: impl Iterator<Item = [bool; 3]>) -> Result<Tripartition> {
        let mut t = Tripartition { p: 0, q: 0, r: 0 };
        for (v, f) in flags.enumerate() {
            let count = f.iter().filter(|&&b| b).count();
            if count != 1 {
                return Err(Error::NotVfSafe(format!("element {} lies in {count} classes", ground.label(v))));
            }
            let b = bits::bit(v);
            if f[0] {
                t.p |= b;
            } else if f[1] {
                t.q |= b;
            } else {
                t.r |= b;
            }
        }
        Ok(t)
    }
}

fn max_matroid(n: &SetSystem, what: &str) -> Result<Matroid> {
    Matroid::from_bases(n.max_sets()).map_err(|e| Error::NotVfSafe(format!("{what} is not a matroid ({e})")))
}

/// P, Q, R: v is not a coloop of max(M+V+v), max(M+V*v), max(M+V) respectively.
pub fn tripartition(m: &SetSystem) -> Result<Tripartition> {
    m.require_proper()?;
    let g = m.ground();
    let nv = m.loop_complement(g.full())?;
    let m3 = max_matroid(&nv, "max(M+V)")?;
    let flags = (0..m.n())
        .map(|v| {
            let b = bits::bit(v);
            let label = g.label(v);
            let m1 = max_matroid(&nv.loop_complement(b)?, &format!("max(M+V+{label})"))?;
            let m2 = max_matroid(&nv.twist(b)?, &format!("max(M+V*{label})"))?;
            Ok([!m1.is_coloop(v), !m2.is_coloop(v), !m3.is_coloop(v)])
        })
        .collect::<Result<Vec<_>>>()?;
    Tripartition::classify(g, flags.into_iter())
}

fn binary_spaces(m: &Matroid) -> Result<(Vec<Mask>, Vec<Mask>)> {
    let cs = m.cycle_space()?;
    let co = cs.orthogonal_complement();
    let masks = |s: &Subspace| {
        let mut v: Vec<Mask> = s.elements().into_iter().map(|v| v.lo).collect();
        v.sort_unstable();
        v
    };
    Ok((masks(&cs), masks(&co)))
}

/// Tripartition from the cycle space CS and cocycle space CS^⊥ of a binary matroid.
pub fn tripartition_classical(m: &Matroid) -> Result<Tripartition> {
    let (cs, co) = binary_spaces(m)?;
    let in_cs = |x: Mask| cs.binary_search(&x).is_ok();
    let in_co = |x: Mask| co.binary_search(&x).is_ok();
    let flags = (0..m.n()).map(|v| {
        let b = bits::bit(v);
        let p = cs.iter().any(|&x| x & b != 0 && in_co(x & !b));
        let q = co.iter().any(|&x| x & b != 0 && in_cs(x & !b));
        let r = cs.iter().any(|&x| x & b != 0 && in_co(x));
        [p, q, r]
    });
    Tripartition::classify(m.ground(), flags)
}

/// (ν(H+v), ν(H\v), ν(H)) for H = G+V, G the fundamental graph for basis `z`.
pub fn fundamental_nullities(m: &Matroid, z: Mask) -> Result<Vec<[usize; 3]>> {
    let g = Graph::fundamental(m, z)?;
    let h = g.loop_complement(g.vertices().full());
    let base = h.nullity();
    Ok((0..g.n())
        .map(|v| {
            let b = bits::bit(v);
            [h.loop_complement(b).nullity(), h.delete(b).nullity(), base]
        })
        .collect())
}

/// Tripartition from nullities of a fundamental graph; P and Q swap roles on Z.
pub fn tripartition_fundamental(m: &Matroid, z: Mask) -> Result<Tripartition> {
    if !m.is_binary() {
        return Err(Error::NotBinary);
    }
    let table = fundamental_nullities(m, z)?;
    let flags = table.iter().enumerate().map(|(v, t)| {
        let top = *t.iter().max().expect("three entries");
        let [a, b, c] = t.map(|x| x == top);
        if bits::contains(z, v) {
            [b, a, c]
        } else {
            [a, b, c]
        }
    });
    Tripartition::classify(m.ground(), flags)
}

/// Every circuit has even size.
pub fn is_bipartite(m: &Matroid) -> bool {
    m.circuits().family().iter().all(|&c| c.count_ones() % 2 == 0)
}

/// V ∈ CS_M, for a binary matroid.
pub fn is_eulerian(m: &Matroid) -> Result<bool> {
    let cs = m.cycle_space()?;
    Ok(cs.contains(PackedVec::from_mask(m.ground().full())))
}

/// V is a disjoint union of circuits. Needs no representation.
pub fn is_eulerian_by_circuits(m: &Matroid) -> bool {
    let circuits = m.circuits();
    let full = m.ground().full();
    // covered[x]: x is a disjoint union of circuits
    let mut covered = vec![false; 1 << m.n()];
    covered[0] = true;
    for x in 1..=full {
        if x & full != x {
            continue;
        }
        let low = x & x.wrapping_neg();
        covered[x as usize] =
            circuits.family().iter().any(|&c| c & low != 0 && c & !x == 0 && covered[(x & !c) as usize]);
    }
    covered[full as usize]
}

/// M + V is even.
pub fn is_bipartite_gen(m: &SetSystem) -> Result<bool> {
    Ok(m.loop_complement(m.ground().full())?.is_even())
}

/// M ∗̄ V is even.
pub fn is_eulerian_gen(m: &SetSystem) -> Result<bool> {
    Ok(m.dual_pivot(m.ground().full())?.is_even())
}
