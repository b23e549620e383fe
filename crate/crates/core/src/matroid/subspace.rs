use crate::bits;
use crate::error::{Error, Result};
use crate::field::{Automorphism, Field};
use crate::ground::Ground;
use crate::matrix::RectMatrix;
use crate::vector::{self, PackedVec};

use super::Matroid;

/// A subspace of F^V held as a reduced row echelon basis, so equal subspaces
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ground: Ground,
    basis: Vec<PackedVec>,
}

impl Subspace {
    /// Span of `gens`; dependent generators are dropped.
    pub fn new(field: Field, ground: Ground, mut gens: Vec<PackedVec>) -> Result<Subspace> {
        let full = ground.full();
        for g in &gens {
            if g.support() & !full != 0 {
                return Err(Error::NotASubset);
            }
            if field == Field::Gf2 && !g.is_binary() {
                return Err(Error::FieldMismatch { expected: "gf2".into(), found: "gf4".into() });
            }
        }
        vector::rref(&mut gens, ground.len());
        Ok(Subspace { field, ground, basis: gens })
    }

    pub fn zero(field: Field, ground: Ground) -> Subspace {
        Subspace { field, ground, basis: Vec::new() }
    }

    pub fn whole(field: Field, ground: Ground) -> Subspace {
        let basis = (0..ground.len()).map(|i| PackedVec::from_mask(bits::bit(i))).collect();
        Subspace { field, ground, basis }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn basis(&self) -> &[PackedVec] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ground != other.ground || self.field != other.field {
            Err(Error::Dimension("subspaces live in different ambient spaces".into()))
        } else {
            Ok(())
        }
    }

    /// L^⊥ = {v : ⟨u, v⟩ = 0 for all u ∈ L}.
    pub fn orthogonal_complement(&self) -> Subspace {
        let k = vector::kernel(&self.basis, self.ground.len());
        Subspace::new(self.field, self.ground.clone(), k).expect("kernel stays in the ambient space")
    }

    /// α(L), the entrywise image. Over GF(2) only the identity applies.
    pub fn apply(&self, alpha: Automorphism) -> Result<Subspace> {
        alpha.check(self.field)?;
        let gens = self.basis.iter().map(|v| v.apply(alpha)).collect();
        Subspace::new(self.field, self.ground.clone(), gens)
    }

    /// inv(L) over GF(4); L itself over GF(2), where inv fixes every scalar.
    pub fn conjugate(&self) -> Subspace {
        match self.field {
            Field::Gf2 => self.clone(),
            Field::Gf4 => self.apply(Automorphism::Inv).expect("inv is defined over GF(4)"),
        }
    }

    pub fn contains(&self, v: PackedVec) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v);
        vector::rank_of(&rows, self.ground.len()) == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let gens = self.basis.iter().chain(&other.basis).copied().collect();
        Subspace::new(self.field, self.ground.clone(), gens)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.orthogonal_complement().sum(&other.orthogonal_complement())?.orthogonal_complement())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&v| other.contains(v))
    }

    /// Every vector of the subspace, |F|^dim of them.
    pub fn elements(&self) -> Vec<PackedVec> {
        let scalars = self.field.elements();
        let mut out = vec![PackedVec::ZERO];
        for &g in &self.basis {
            let mut next = Vec::with_capacity(out.len() * scalars.len());
            for &v in &out {
                for &c in scalars {
                    next.push(v.add(g.scale(c)));
                }
            }
            out = next;
        }
        out
    }

    /// The generators as the rows of a matrix.
    pub fn matrix(&self) -> RectMatrix {
        RectMatrix::from_rows(self.field, self.ground.clone(), self.basis.clone()).expect("at most 64 generators")
    }

    /// M(L): circuits are the minimal supports of nonzero vectors of L.
    ///
    /// Computed as the column matroid of a matrix whose rows span L^⊥.
    pub fn matroid(&self) -> Matroid {
        Matroid::column_matroid(&self.orthogonal_complement().matrix())
    }

    /// L = {0}
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}
