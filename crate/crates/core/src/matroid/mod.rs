//! Matroids described by their bases, with optional GF(2)/GF(4) representations.

mod subspace;

use std::fmt;

pub use subspace::Subspace;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::field::{Field, Gf4};
use crate::ground::Ground;
use crate::matrix::RectMatrix;
use crate::setsys::SetSystem;
use crate::vector::{self, PackedVec};

/// A matroid as its (equicardinal, exchange-closed) family of bases.
///
/// Equality compares bases only; an attached representation is extra data.
#[derive(Debug, Clone)]
pub struct Matroid {
    bases: SetSystem,
    rank: usize,
    representation: Option<RectMatrix>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Matroid) -> bool {
        self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Validate a basis family: proper, equicardinal, basis exchange.
    pub fn from_bases(bases: SetSystem) -> Result<Matroid> {
        if !bases.is_proper() {
            return Err(Error::InvalidMatroid("no bases".into()));
        }
        if !bases.is_equicardinal() {
            let f = bases.family();
            let (a, b) = (f[0], f[f.len() - 1]);
            return Err(Error::InvalidMatroid(format!(
                "bases {} and {} have different sizes",
                bases.ground().format_set(a),
                bases.ground().format_set(b)
            )));
        }
        if let Some(v) = bases.exchange_violation() {
            return Err(Error::InvalidMatroid(format!("basis exchange fails for {}", bases.describe_violation(v))));
        }
        let rank = bases.d()?;
        Ok(Matroid { bases, rank, representation: None })
    }

    pub fn from_compact(ground: Ground, bases: &[&str]) -> Result<Matroid> {
        Matroid::from_bases(SetSystem::from_compact(ground, bases)?)
    }

    /// M(A): bases are the maximal sets of linearly independent columns.
    pub fn column_matroid(a: &RectMatrix) -> Matroid {
        let n = a.ncols();
        let r = a.rank();
        let family = bits::k_subsets(n, r).filter(|&x| columns_rank(a, x) == r);
        let bases = SetSystem::new(a.ground().clone(), family).expect("masks lie in the ground set");
        Matroid { bases, rank: r, representation: Some(a.clone()) }
    }

    /// Attach a representation after checking that its column matroid is `self`.
    pub fn with_representation(self, rep: RectMatrix) -> Result<Matroid> {
        if rep.ground() != self.ground() {
            return Err(Error::Dimension("representation columns differ from the ground set".into()));
        }
        let m = Matroid::column_matroid(&rep);
        if m.bases != self.bases {
            return Err(Error::InvalidMatroid("representation has a different column matroid".into()));
        }
        Ok(Matroid { representation: Some(rep), ..self })
    }

    pub fn without_representation(&self) -> Matroid {
        Matroid { representation: None, ..self.clone() }
    }

    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n {
            return Err(Error::InvalidMatroid(format!("U_{{{r},{n}}} needs r <= n")));
        }
        let ground = Ground::numbered(n);
        let bases = SetSystem::new(ground, bits::k_subsets(n, r))?;
        Ok(Matroid { bases, rank: r, representation: None })
    }

    /// Cycle matroid of a multigraph; each edge is `(label, u, v)`, a loop when `u == v`.
    ///
    /// Bases are the spanning forests. The vertex-edge incidence matrix is
    /// attached as a GF(2) representation.
    pub fn graphic<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)]) -> Result<Matroid> {
        let vg = Ground::new(vertices.iter().map(|v| v.as_ref().to_string()))?;
        let ground = Ground::new(edges.iter().map(|(l, _, _)| l.as_ref().to_string()))?;
        let ends: Vec<(usize, usize)> = edges
            .iter()
            .map(|(_, u, v)| Ok((vg.index_of(u.as_ref())?, vg.index_of(v.as_ref())?)))
            .collect::<Result<_>>()?;
        let r = vg.len() - components(vg.len(), &ends, u64::MAX);
        let family = bits::k_subsets(ends.len(), r).filter(|&x| is_forest(vg.len(), &ends, x));
        let bases = SetSystem::new(ground.clone(), family)?;
        let rows = (0..vg.len())
            .map(|v| {
                let mut row = PackedVec::ZERO;
                for (e, &(a, b)) in ends.iter().enumerate() {
                    if a != b && (a == v || b == v) {
                        row.set(e, Gf4::ONE);
                    }
                }
                row
            })
            .collect();
        let rep = RectMatrix::new(Field::Gf2, vg.labels().to_vec(), ground, rows)?;
        Ok(Matroid { bases, rank: r, representation: Some(rep) })
    }

    /// The Fano plane F₇ on 1..7 with lines 123, 145, 167, 246, 257, 347, 356.
    ///
    /// Column i of the representation is the binary expansion of i.
    pub fn fano() -> Matroid {
        let ground = Ground::numbered(7);
        let rows = (0..3)
            .map(|b| PackedVec::from_mask((0..7).filter(|&i| (i + 1) >> b & 1 == 1).fold(0, |m, i| m | bits::bit(i))))
            .collect();
        let rep = RectMatrix::from_rows(Field::Gf2, ground, rows).expect("valid 3x7 matrix");
        Matroid::column_matroid(&rep)
    }

    pub fn set_system(&self) -> &SetSystem {
        &self.bases
    }

    pub fn into_set_system(self) -> SetSystem {
        self.bases
    }

    pub fn bases(&self) -> &[Mask] {
        self.bases.family()
    }

    pub fn ground(&self) -> &Ground {
        self.bases.ground()
    }

    pub fn n(&self) -> usize {
        self.bases.n()
    }

    /// ρ(M)
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// ν(M) = |V| − ρ(M)
    pub fn nullity(&self) -> usize {
        self.n() - self.rank
    }

    pub fn representation(&self) -> Option<&RectMatrix> {
        self.representation.as_ref()
    }

    /// Has a representation with all entries in GF(2).
    pub fn is_binary(&self) -> bool {
        self.representation.as_ref().is_some_and(|r| r.rows().iter().all(PackedVec::is_binary))
    }

    pub fn is_loop(&self, u: usize) -> bool {
        self.bases.is_loop(u)
    }

    pub fn is_coloop(&self, u: usize) -> bool {
        self.bases.is_coloop(u)
    }

    /// M* = M * V. A representation is carried over as a basis of its kernel.
    pub fn dual(&self) -> Matroid {
        let bases = self.bases.twist_unchecked(self.ground().full());
        let representation = self.representation.as_ref().map(|a| {
            RectMatrix::from_rows(a.field(), a.ground().clone(), a.kernel()).expect("kernel fits")
        });
        Matroid { bases, rank: self.nullity(), representation }
    }

    /// Matroid deletion: M \ u, or M * u \ u when u is a coloop.
    pub fn delete(&self, u: usize) -> Matroid {
        if self.is_coloop(u) {
            return self.contract_nonloop(u);
        }
        let representation = self.representation.as_ref().map(|a| a.restrict_columns(self.ground().full() & !bits::bit(u)));
        Matroid { bases: self.bases.delete_one(u), rank: self.rank, representation }
    }

    /// Matroid contraction: M * u \ u, or M \ u when u is a loop.
    pub fn contract(&self, u: usize) -> Matroid {
        if self.is_loop(u) {
            let representation =
                self.representation.as_ref().map(|a| a.restrict_columns(self.ground().full() & !bits::bit(u)));
            return Matroid { bases: self.bases.delete_one(u), rank: self.rank, representation };
        }
        self.contract_nonloop(u)
    }

    fn contract_nonloop(&self, u: usize) -> Matroid {
        let representation = self.representation.as_ref().map(|a| {
            let mut rows = a.rows().to_vec();
            let p = rows.iter().position(|r| !r.get(u).is_zero()).expect("u is not a loop");
            let pivot = rows.remove(p);
            let inv = pivot.get(u).inverse().expect("nonzero");
            for r in &mut rows {
                let x = r.get(u);
                if !x.is_zero() {
                    r.add_assign(pivot.scale(x * inv));
                }
            }
            let mut labels = a.row_labels().to_vec();
            labels.remove(p);
            let keep = a.ground().full() & !bits::bit(u);
            let rows = rows.into_iter().map(|r| r.compress(keep)).collect();
            RectMatrix::new(a.field(), labels, a.ground().restrict(keep), rows).expect("minor of a valid matrix")
        });
        Matroid { bases: self.bases.pivot_delete_one(u), rank: self.rank - 1, representation }
    }

    /// X is contained in some basis.
    pub fn is_independent(&self, x: Mask) -> bool {
        self.bases().iter().any(|&b| b & x == x)
    }

    pub fn rank_of(&self, x: Mask) -> usize {
        self.bases().iter().map(|&b| bits::popcount(b & x)).max().unwrap_or(0)
    }

    /// Minimal dependent sets, by increasing size.
    pub fn circuits(&self) -> SetSystem {
        let n = self.n();
        let mut found: Vec<Mask> = Vec::new();
        for k in 1..=(self.rank + 1).min(n) {
            for x in bits::k_subsets(n, k) {
                if found.iter().any(|&c| c & x == c) {
                    continue;
                }
                if !self.is_independent(x) {
                    found.push(x);
                }
            }
        }
        SetSystem::new(self.ground().clone(), found).expect("masks lie in the ground set")
    }

    /// CS_M, the null space of a binary representation.
    pub fn cycle_space(&self) -> Result<Subspace> {
        let a = self.representation.as_ref().ok_or(Error::MissingRepresentation)?;
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        Subspace::new(Field::Gf2, self.ground().clone(), a.kernel())
    }

    /// CS_M^⊥ = CS_{M*}, the row space of a binary representation.
    pub fn cocycle_space(&self) -> Result<Subspace> {
        Ok(self.cycle_space()?.orthogonal_complement())
    }

    /// No circuit of `self` meets a circuit of `other` in exactly one element.
    pub fn is_orthogonal(&self, other: &Matroid) -> Result<bool> {
        if self.ground() != other.ground() {
            return Err(Error::Dimension("matroids live on different ground sets".into()));
        }
        let (c1, c2) = (self.circuits(), other.circuits());
        Ok(c1.family().iter().all(|&a| c2.family().iter().all(|&b| bits::popcount(a & b) != 1)))
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bases)
    }
}

fn columns_rank(a: &RectMatrix, cols: Mask) -> usize {
    let rows: Vec<PackedVec> = a.rows().iter().map(|r| r.compress(cols)).collect();
    vector::rank_of(&rows, bits::popcount(cols))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Number of connected components of the vertices using the edges in `sel`.
fn components(nv: usize, ends: &[(usize, usize)], sel: Mask) -> usize {
    let mut parent: Vec<usize> = (0..nv).collect();
    let mut count = nv;
    for (e, &(a, b)) in ends.iter().enumerate() {
        if bits::contains(sel, e) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
    }
    count
}

fn is_forest(nv: usize, ends: &[(usize, usize)], sel: Mask) -> bool {
    let mut parent: Vec<usize> = (0..nv).collect();
    for e in bits::ones(sel) {
        let (a, b) = ends[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_has_28_bases() {
        let f = Matroid::fano();
        assert_eq!(f.bases().len(), 28);
        assert_eq!(f.rank(), 3);
        let lines = ["123", "145", "167", "246", "257", "347", "356"];
        let g = Ground::numbered(7);
        for l in lines {
            assert!(!f.is_independent(g.mask_of(l.chars().map(|c| c.to_string())).unwrap()));
        }
        assert_eq!(f.circuits().family().iter().filter(|&&c| bits::popcount(c) == 3).count(), 7);
    }

    #[test]
    fn rejects_bad_bases() {
        let g = Ground::numbered(4);
        assert!(Matroid::from_compact(g.clone(), &["12", "3"]).is_err());
        assert!(Matroid::from_compact(g.clone(), &["12", "34"]).is_err());
        assert!(Matroid::from_compact(g, &["12", "13", "24", "34"]).is_ok());
    }

    #[test]
    fn minors_follow_convention() {
        let coloop = Matroid::from_compact(Ground::numbered(1), &["1"]).unwrap();
        let d = coloop.delete(0);
        assert_eq!(d.n(), 0);
        assert_eq!(d.bases(), &[0]);
        let lp = Matroid::from_compact(Ground::numbered(1), &[""]).unwrap();
        assert_eq!(lp.contract(0).bases(), &[0]);
    }

    #[test]
    fn graphic_triangle_with_loop() {
        let m = Matroid::graphic(&["a", "b", "c"], &[("1", "a", "b"), ("2", "b", "c"), ("3", "a", "c"), ("4", "a", "a")]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases().len(), 3);
        assert!(m.is_loop(3));
        assert!(m.is_binary());
        assert_eq!(Matroid::column_matroid(m.representation().unwrap()), m);
        assert_eq!(m.cycle_space().unwrap().dim(), m.nullity());
    }

    #[test]
    fn dual_representation_is_consistent() {
        let f = Matroid::fano();
        let d = f.dual();
        assert_eq!(d.rank(), 4);
        assert_eq!(Matroid::column_matroid(d.representation().unwrap()), d);
        assert!(f.is_orthogonal(&d).unwrap());
    }

    #[test]
    fn minors_keep_representation_consistent() {
        let f = Matroid::fano();
        for u in 0..7 {
            for m in [f.delete(u), f.contract(u)] {
                assert_eq!(Matroid::column_matroid(m.representation().unwrap()), m);
            }
        }
    }

    #[test]
    fn free_matroid_has_no_circuits() {
        let free = Matroid::uniform(3, 3).unwrap();
        assert!(free.circuits().is_empty());
        assert_eq!(free.bases(), &[0b111]);
    }
}
