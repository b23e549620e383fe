//! Set-indexed matrices over GF(2) and GF(4).
//!
//! Rows are [`PackedVec`]s, so a matrix on a ground set of `n ≤ 64` labels is
//! `n` pairs of words. Negation is the identity in characteristic 2, but the
//! α-symmetry test still spells out α(−Aᵀ).

use std::fmt;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::field::{Automorphism, Field, Gf4};
use crate::ground::Ground;
use crate::setsys::SetSystem;
use crate::vector::{self, PackedVec};

/// A V×V matrix whose rows and columns are both indexed by `ground`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    field: Field,
    ground: Ground,
    rows: Vec<PackedVec>,
}

fn check_rows(field: Field, rows: &[PackedVec], ncols: usize) -> Result<()> {
    let full = bits::full(ncols);
    for r in rows {
        if r.support() & !full != 0 {
            return Err(Error::Dimension(format!("row has entries beyond column {ncols}")));
        }
        if field == Field::Gf2 && !r.is_binary() {
            return Err(Error::FieldMismatch { expected: "gf2".into(), found: "gf4".into() });
        }
    }
    Ok(())
}

impl SquareMatrix {
    pub fn new(field: Field, ground: Ground, rows: Vec<PackedVec>) -> Result<SquareMatrix> {
        if rows.len() != ground.len() {
            return Err(Error::Dimension(format!(
                "{} rows for a ground set of {} elements",
                rows.len(),
                ground.len()
            )));
        }
        check_rows(field, &rows, ground.len())?;
        Ok(SquareMatrix { field, ground, rows })
    }

    pub fn zero(field: Field, ground: Ground) -> SquareMatrix {
        let rows = vec![PackedVec::ZERO; ground.len()];
        SquareMatrix { field, ground, rows }
    }

    pub fn identity(field: Field, ground: Ground) -> SquareMatrix {
        let rows = (0..ground.len()).map(|i| PackedVec::from_mask(bits::bit(i))).collect();
        SquareMatrix { field, ground, rows }
    }

    pub fn from_fn(field: Field, ground: Ground, mut f: impl FnMut(usize, usize) -> Gf4) -> Result<SquareMatrix> {
        let n = ground.len();
        let rows = (0..n)
            .map(|i| {
                let mut r = PackedVec::ZERO;
                for j in 0..n {
                    r.set(j, f(i, j));
                }
                r
            })
            .collect();
        SquareMatrix::new(field, ground, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn rows(&self) -> &[PackedVec] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.rows[i].get(j)
    }

    /// Panics if `x` lies outside the matrix field.
    pub fn set(&mut self, i: usize, j: usize, x: Gf4) {
        assert!(self.field.contains(x), "{x} is not an element of {}", self.field);
        self.rows[i].set(j, x);
    }

    /// The principal submatrix A[X].
    pub fn principal(&self, x: Mask) -> SquareMatrix {
        let x = x & self.ground.full();
        let rows = bits::ones(x).map(|i| self.rows[i].compress(x)).collect();
        SquareMatrix { field: self.field, ground: self.ground.restrict(x), rows }
    }

    /// A \ X = A[V \ X].
    pub fn delete(&self, x: Mask) -> SquareMatrix {
        self.principal(self.ground.full() & !x)
    }

    /// A[X, Y] as a dense table.
    fn block(&self, x: Mask, y: Mask) -> Dense {
        bits::ones(x).map(|i| bits::ones(y).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn det(&self) -> Gf4 {
        det_rows(self.rows.clone(), self.n())
    }

    /// det(A[X]); 1 for X = ∅.
    pub fn principal_minor(&self, x: Mask) -> Gf4 {
        let x = x & self.ground.full();
        let rows = bits::ones(x).map(|i| self.rows[i].compress(x)).collect();
        det_rows(rows, bits::popcount(x))
    }

    pub fn rank(&self) -> usize {
        vector::rank_of(&self.rows, self.n())
    }

    pub fn nullity(&self) -> usize {
        self.n() - self.rank()
    }

    /// Basis of {v : Av = 0}, one vector per non-pivot column in ground order.
    pub fn null_space(&self) -> Vec<PackedVec> {
        vector::kernel(&self.rows, self.n())
    }

    pub fn mul_vec(&self, v: PackedVec) -> PackedVec {
        let mut out = PackedVec::ZERO;
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(v));
        }
        out
    }

    pub fn transpose(&self) -> SquareMatrix {
        let n = self.n();
        let mut rows = vec![PackedVec::ZERO; n];
        for (i, r) in self.rows.iter().enumerate() {
            for j in bits::ones(r.support()) {
                rows[j].set(i, r.get(j));
            }
        }
        SquareMatrix { field: self.field, ground: self.ground.clone(), rows }
    }

    /// −A, which equals A in characteristic 2.
    pub fn neg(&self) -> SquareMatrix {
        self.clone()
    }

    /// Entrywise α(A).
    pub fn apply(&self, alpha: Automorphism) -> SquareMatrix {
        let rows = self.rows.iter().map(|r| r.apply(alpha)).collect();
        SquareMatrix { field: self.field, ground: self.ground.clone(), rows }
    }

    pub fn matmul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.ground != other.ground {
            return Err(Error::Dimension("ground sets differ".into()));
        }
        let t = other.transpose();
        SquareMatrix::from_fn(self.field.max(other.field), self.ground.clone(), |i, j| {
            self.rows[i].dot(t.rows[j])
        })
    }

    pub fn inverse(&self) -> Option<SquareMatrix> {
        self.ppt(self.ground.full()).ok()
    }

    /// Principal pivot transform A*X.
    ///
    /// With A = [[P, Q], [R, S]] in the (X, V\X) block order,
    /// A*X = [[P⁻¹, −P⁻¹Q], [RP⁻¹, S − RP⁻¹Q]].
    pub fn ppt(&self, x: Mask) -> Result<SquareMatrix> {
        self.ground.check(x)?;
        let rest = self.ground.full() & !x;
        let p_inv = dense_inverse(self.block(x, x))
            .ok_or_else(|| Error::SingularPivot(self.ground.labels_in(x).iter().map(|s| s.to_string()).collect()))?;
        let q = self.block(x, rest);
        let r = self.block(rest, x);
        let s = self.block(rest, rest);
        let (kx, ky) = (bits::popcount(x), bits::popcount(rest));
        let p_inv_q = dense_neg(&dense_mul(&p_inv, &q, ky));
        let r_p_inv = dense_mul(&r, &p_inv, kx);
        let schur = dense_add(&s, &dense_neg(&dense_mul(&r_p_inv, &q, ky)));

        let xs: Vec<usize> = bits::ones(x).collect();
        let ys: Vec<usize> = bits::ones(rest).collect();
        let mut out = SquareMatrix::zero(self.field, self.ground.clone());
        let mut place = |rows: &[usize], cols: &[usize], block: &Dense| {
            for (bi, &i) in rows.iter().enumerate() {
                for (bj, &j) in cols.iter().enumerate() {
                    out.rows[i].set(j, block[bi][bj]);
                }
            }
        };
        place(&xs, &xs, &p_inv);
        place(&xs, &ys, &p_inv_q);
        place(&ys, &xs, &r_p_inv);
        place(&ys, &ys, &schur);
        Ok(out)
    }

    /// A+X: add 1 to every diagonal entry indexed by X.
    pub fn diag_complement(&self, x: Mask) -> SquareMatrix {
        let mut out = self.clone();
        for i in bits::ones(x & self.ground.full()) {
            let d = out.get(i, i) + Gf4::ONE;
            out.rows[i].set(i, d);
        }
        out
    }

    /// α(−Aᵀ) = A.
    pub fn is_alpha_symmetric(&self, alpha: Automorphism) -> Result<bool> {
        alpha.check(self.field)?;
        Ok(self.transpose().neg().apply(alpha) == *self)
    }

    /// Every principal minor lies in {0, 1, −1}; over GF(2) this always holds.
    pub fn is_pu(&self) -> bool {
        match self.field {
            Field::Gf2 => true,
            Field::Gf4 => bits::submasks(self.ground.full()).all(|x| self.principal_minor(x).is_binary()),
        }
    }

    /// The set system M_A = (V, {X : A[X] nonsingular}).
    pub fn delta_matroid(&self) -> SetSystem {
        let family = bits::submasks(self.ground.full()).filter(|&x| !self.principal_minor(x).is_zero());
        SetSystem::new(self.ground.clone(), family).expect("masks lie in the ground set")
    }

    pub fn to_rect(&self) -> RectMatrix {
        RectMatrix {
            field: self.field,
            row_labels: self.ground.labels().to_vec(),
            cols: self.ground.clone(),
            rows: self.rows.clone(),
        }
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            let toks: Vec<String> = (0..self.n()).map(|j| r.get(j).to_string()).collect();
            writeln!(f, "{}: {}", self.ground.label(i), toks.join(" "))?;
        }
        Ok(())
    }
}

/// An X×V matrix: arbitrary row labels, columns indexed by a ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectMatrix {
    field: Field,
    row_labels: Vec<String>,
    cols: Ground,
    rows: Vec<PackedVec>,
}

impl RectMatrix {
    pub fn new(field: Field, row_labels: Vec<String>, cols: Ground, rows: Vec<PackedVec>) -> Result<RectMatrix> {
        if row_labels.len() != rows.len() {
            return Err(Error::Dimension(format!("{} row labels for {} rows", row_labels.len(), rows.len())));
        }
        if rows.len() > bits::MAX_GROUND {
            return Err(Error::GroundTooLarge(rows.len()));
        }
        check_rows(field, &rows, cols.len())?;
        Ok(RectMatrix { field, row_labels, cols, rows })
    }

    /// Rows labelled `r1, r2, …`.
    pub fn from_rows(field: Field, cols: Ground, rows: Vec<PackedVec>) -> Result<RectMatrix> {
        let labels = (1..=rows.len()).map(|i| format!("r{i}")).collect();
        RectMatrix::new(field, labels, cols, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ground(&self) -> &Ground {
        &self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn rows(&self) -> &[PackedVec] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.rows[i].get(j)
    }

    pub fn rank(&self) -> usize {
        vector::rank_of(&self.rows, self.ncols())
    }

    pub fn kernel(&self) -> Vec<PackedVec> {
        vector::kernel(&self.rows, self.ncols())
    }

    /// Column `j` as a vector indexed by row position.
    pub fn column(&self, j: usize) -> PackedVec {
        let mut v = PackedVec::ZERO;
        for (i, r) in self.rows.iter().enumerate() {
            v.set(i, r.get(j));
        }
        v
    }

    pub fn columns(&self) -> Vec<PackedVec> {
        (0..self.ncols()).map(|j| self.column(j)).collect()
    }

    pub fn apply(&self, alpha: Automorphism) -> RectMatrix {
        RectMatrix { rows: self.rows.iter().map(|r| r.apply(alpha)).collect(), ..self.clone() }
    }

    /// Keep only the columns in `keep`.
    pub fn restrict_columns(&self, keep: Mask) -> RectMatrix {
        RectMatrix {
            field: self.field,
            row_labels: self.row_labels.clone(),
            cols: self.cols.restrict(keep),
            rows: self.rows.iter().map(|r| r.compress(keep)).collect(),
        }
    }

    /// Multiply column `j` by a nonzero scalar.
    pub fn scale_column(&mut self, j: usize, x: Gf4) {
        assert!(!x.is_zero() && self.field.contains(x));
        for r in &mut self.rows {
            let e = r.get(j) * x;
            r.set(j, e);
        }
    }

    /// row_i += x · row_k
    pub fn add_row_multiple(&mut self, i: usize, k: usize, x: Gf4) {
        assert!(self.field.contains(x));
        let src = self.rows[k].scale(x);
        self.rows[i].add_assign(src);
    }

    pub fn swap_rows(&mut self, i: usize, k: usize) {
        self.rows.swap(i, k);
    }

    /// Row-reduce so that the columns of `z` form an identity block, dropping
    /// zero rows; rows are relabelled by the elements of `z` in ground order.
    pub(crate) fn pivot_onto(&self, z: Mask) -> Option<RectMatrix> {
        let mut rows = self.rows.clone();
        let mut labels = Vec::new();
        let mut r = 0;
        for c in bits::ones(z) {
            let p = (r..rows.len()).find(|&i| !rows[i].get(c).is_zero())?;
            rows.swap(r, p);
            let inv = rows[r].get(c).inverse().ok()?;
            rows[r] = rows[r].scale(inv);
            let pivot = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                let x = row.get(c);
                if i != r && !x.is_zero() {
                    row.add_assign(pivot.scale(x));
                }
            }
            labels.push(self.cols.label(c).to_string());
            r += 1;
        }
        if rows[r..].iter().any(|row| !row.is_zero()) {
            return None;
        }
        rows.truncate(r);
        Some(RectMatrix { field: self.field, row_labels: labels, cols: self.cols.clone(), rows })
    }
}

impl fmt::Display for RectMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "    {}", self.cols)?;
        for (l, r) in self.row_labels.iter().zip(&self.rows) {
            let toks: Vec<String> = (0..self.ncols()).map(|j| r.get(j).to_string()).collect();
            writeln!(f, "{l}: {}", toks.join(" "))?;
        }
        Ok(())
    }
}

fn det_rows(mut rows: Vec<PackedVec>, n: usize) -> Gf4 {
    let mut det = Gf4::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i].get(c).is_zero()) else {
            return Gf4::ZERO;
        };
        // row swaps flip the sign, which is invisible in characteristic 2
        rows.swap(c, p);
        let pivot = rows[c].get(c);
        det *= pivot;
        let inv = pivot.inverse().expect("nonzero pivot");
        let pivot_row = rows[c];
        for row in rows.iter_mut().skip(c + 1) {
            let x = row.get(c);
            if !x.is_zero() {
                row.add_assign(pivot_row.scale(x * inv));
            }
        }
    }
    det
}

type Dense = Vec<Vec<Gf4>>;

/// `cols` is passed explicitly because a product with an empty inner
/// dimension still has columns.
fn dense_mul(a: &Dense, b: &Dense, cols: usize) -> Dense {
    let inner = b.len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Gf4::ZERO, |acc, k| acc + row[k] * b[k][j]))
                .collect()
        })
        .collect()
}

fn dense_add(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(&x, &y)| x + y).collect()).collect()
}

fn dense_neg(a: &Dense) -> Dense {
    a.iter().map(|r| r.iter().map(|&x| -x).collect()).collect()
}

/// Gauss–Jordan inverse; `None` when singular. The empty matrix is its own inverse.
fn dense_inverse(mut a: Dense) -> Option<Dense> {
    let n = a.len();
    let mut inv: Dense = (0..n).map(|i| (0..n).map(|j| if i == j { Gf4::ONE } else { Gf4::ZERO }).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let s = a[c][c].inverse().ok()?;
        for j in 0..n {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for i in 0..n {
            let x = a[i][c];
            if i != c && !x.is_zero() {
                for j in 0..n {
                    let (ac, ic) = (a[c][j], inv[c][j]);
                    a[i][j] += x * ac;
                    inv[i][j] += x * ic;
                }
            }
        }
    }
    Some(inv)
}
