//! Graphs with loops, stored as symmetric GF(2) adjacency matrices.

use std::fmt;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::field::{Field, Gf4};
use crate::ground::Ground;
use crate::matrix::SquareMatrix;
use crate::matroid::Matroid;
use crate::setsys::SetSystem;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: SquareMatrix,
}

impl Graph {
    pub fn new(adj: SquareMatrix) -> Result<Graph> {
        if adj.field() != Field::Gf2 {
            return Err(Error::FieldMismatch { expected: "gf2".into(), found: adj.field().to_string() });
        }
        if adj.transpose() != adj {
            return Err(Error::NotGraphic("adjacency matrix is not symmetric".into()));
        }
        Ok(Graph { adj })
    }

    /// Edges as index pairs (u ≠ v), loops as a vertex mask.
    pub fn from_edges(vertices: Ground, edges: &[(usize, usize)], loops: Mask) -> Result<Graph> {
        vertices.check(loops)?;
        let mut adj = SquareMatrix::zero(Field::Gf2, vertices);
        for &(u, v) in edges {
            if u >= adj.n() || v >= adj.n() {
                return Err(Error::NotASubset);
            }
            if u == v {
                return Err(Error::NotGraphic(format!("edge {{{u}, {v}}} is a loop; pass loops separately")));
            }
            adj.set(u, v, Gf4::ONE);
            adj.set(v, u, Gf4::ONE);
        }
        for u in bits::ones(loops) {
            adj.set(u, u, Gf4::ONE);
        }
        Ok(Graph { adj })
    }

    pub fn from_labels<S: AsRef<str>>(vertices: Ground, edges: &[(S, S)], loops: &[S]) -> Result<Graph> {
        let idx = edges
            .iter()
            .map(|(u, v)| Ok((vertices.index_of(u.as_ref())?, vertices.index_of(v.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let loops = vertices.mask_of(loops.iter())?;
        Graph::from_edges(vertices, &idx, loops)
    }

    pub fn vertices(&self) -> &Ground {
        self.adj.ground()
    }

    pub fn n(&self) -> usize {
        self.adj.n()
    }

    pub fn adjacency(&self) -> &SquareMatrix {
        &self.adj
    }

    pub fn has_loop(&self, u: usize) -> bool {
        !self.adj.get(u, u).is_zero()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && !self.adj.get(u, v).is_zero()
    }

    /// N_G(u), excluding u itself.
    pub fn neighbours(&self, u: usize) -> Mask {
        self.adj.rows()[u].support() & !bits::bit(u)
    }

    pub fn loops(&self) -> Mask {
        (0..self.n()).filter(|&u| self.has_loop(u)).fold(0, |m, u| m | bits::bit(u))
    }

    /// Non-loop edges with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| bits::ones(self.neighbours(u) & !bits::full(u + 1)).map(move |v| (u, v))).collect()
    }

    /// G * X, the principal pivot transform of the adjacency matrix.
    pub fn pivot(&self, x: Mask) -> Result<Graph> {
        Ok(Graph { adj: self.adj.ppt(x)? })
    }

    /// G * {u} for a looped vertex u.
    pub fn local_complement(&self, u: usize) -> Result<Graph> {
        if !self.has_loop(u) {
            return Err(Error::InvalidPivot(format!("vertex {} has no loop", self.vertices().label(u))));
        }
        self.pivot(bits::bit(u))
    }

    /// G * {u, v} for an edge whose ends are both unlooped.
    pub fn edge_local_complement(&self, u: usize, v: usize) -> Result<Graph> {
        let (lu, lv) = (self.vertices().label(u), self.vertices().label(v));
        if !self.is_adjacent(u, v) {
            return Err(Error::InvalidPivot(format!("{{{lu} {lv}}} is not an edge")));
        }
        if self.has_loop(u) || self.has_loop(v) {
            return Err(Error::InvalidPivot(format!("edge {{{lu} {lv}}} has a looped end")));
        }
        self.pivot(bits::bit(u) | bits::bit(v))
    }

    /// G + X: toggle the loops on X.
    pub fn loop_complement(&self, x: Mask) -> Graph {
        Graph { adj: self.adj.diag_complement(x) }
    }

    /// G \ X, the subgraph induced by V \ X.
    pub fn delete(&self, x: Mask) -> Graph {
        Graph { adj: self.adj.delete(x) }
    }

    /// G[X]
    pub fn induced(&self, x: Mask) -> Graph {
        Graph { adj: self.adj.principal(x) }
    }

    /// ν(G), the nullity of the adjacency matrix over GF(2).
    pub fn nullity(&self) -> usize {
        self.adj.nullity()
    }

    /// max{ν(G), ν(G \ v), ν(G + v)}
    pub fn nmax(&self, v: usize) -> usize {
        let b = bits::bit(v);
        self.nullity().max(self.delete(b).nullity()).max(self.loop_complement(b).nullity())
    }

    /// M_G: the sets X with G[X] nonsingular.
    pub fn delta_matroid(&self) -> SetSystem {
        self.adj.delta_matroid()
    }

    /// The graph G with M_G agreeing with `m` on members of size at most 2.
    ///
    /// Requires ∅ ∈ m. Loops are the singleton members; for u ≠ v,
    /// det G[{u,v}] = g_uu g_vv + g_uv over GF(2) fixes the edge bit.
    pub fn from_small_sets(m: &SetSystem) -> Result<Graph> {
        if !m.contains(0) {
            return Err(Error::NotGraphic("the empty set is not a member".into()));
        }
        let n = m.n();
        let loops = (0..n).filter(|&u| m.contains(bits::bit(u))).fold(0, |a, u| a | bits::bit(u));
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let pair = m.contains(bits::bit(u) | bits::bit(v));
                let both_looped = bits::contains(loops, u) && bits::contains(loops, v);
                if pair != both_looped {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(m.ground().clone(), &edges, loops)
    }

    /// Fundamental graph of `m` with respect to the basis `z`: edges {u, v}
    /// with u ∈ Z, v ∉ Z and Z Δ {u, v} a basis.
    pub fn fundamental(m: &Matroid, z: Mask) -> Result<Graph> {
        let ss = m.set_system();
        ss.ground().check(z)?;
        if !ss.contains(z) {
            return Err(Error::NotABasis(ss.ground().labels_in(z).iter().map(|s| s.to_string()).collect()));
        }
        let rest = ss.ground().full() & !z;
        let mut edges = Vec::new();
        for u in bits::ones(z) {
            for v in bits::ones(rest) {
                if ss.contains(z ^ bits::bit(u) ^ bits::bit(v)) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(ss.ground().clone(), &edges, 0)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.vertices();
        writeln!(f, "vertices {g}")?;
        for (u, v) in self.edges() {
            writeln!(f, "edge {} {}", g.label(u), g.label(v))?;
        }
        for u in bits::ones(self.loops()) {
            writeln!(f, "loop {}", g.label(u))?;
        }
        Ok(())
    }
}
