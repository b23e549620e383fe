//! Bit-sliced vectors over GF(4) of length at most 64.
//!
//! Coordinate `i` holds `lo_i + hi_i·ω`; the two planes are stored as `u64`
//! words so that vector addition and scaling are a handful of word operations.

use std::fmt;

use crate::bits::{self, Mask};
use crate::field::{Automorphism, Gf4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PackedVec {
    pub lo: u64,
    pub hi: u64,
}

impl PackedVec {
    pub const ZERO: PackedVec = PackedVec { lo: 0, hi: 0 };

    /// Binary vector with support `m`.
    pub const fn from_mask(m: Mask) -> PackedVec {
        PackedVec { lo: m, hi: 0 }
    }

    pub fn from_entries(entries: &[Gf4]) -> PackedVec {
        let mut v = PackedVec::ZERO;
        for (i, &x) in entries.iter().enumerate() {
            v.set(i, x);
        }
        v
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        Gf4::from_code(((self.lo >> i) & 1) as u8 | (((self.hi >> i) & 1) as u8) << 1)
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: Gf4) {
        let b = bits::bit(i);
        let c = x.code();
        self.lo = (self.lo & !b) | if c & 1 == 1 { b } else { 0 };
        self.hi = (self.hi & !b) | if c & 2 == 2 { b } else { 0 };
    }

    #[inline]
    pub fn support(&self) -> Mask {
        self.lo | self.hi
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    /// All entries in {0, 1}.
    #[inline]
    pub fn is_binary(&self) -> bool {
        self.hi == 0
    }

    #[inline]
    pub fn add(self, other: PackedVec) -> PackedVec {
        PackedVec { lo: self.lo ^ other.lo, hi: self.hi ^ other.hi }
    }

    #[inline]
    pub fn add_assign(&mut self, other: PackedVec) {
        self.lo ^= other.lo;
        self.hi ^= other.hi;
    }

    #[inline]
    pub fn scale(self, x: Gf4) -> PackedVec {
        let (lo, hi) = (self.lo, self.hi);
        match x.code() {
            0 => PackedVec::ZERO,
            1 => self,
            // (a + bω)ω = b + (a + b)ω
            2 => PackedVec { lo: hi, hi: lo ^ hi },
            // (a + bω)ω² = (a + b) + aω
            _ => PackedVec { lo: lo ^ hi, hi: lo },
        }
    }

    /// Entrywise Frobenius map x ↦ x².
    #[inline]
    pub fn frobenius(self) -> PackedVec {
        PackedVec { lo: self.lo ^ self.hi, hi: self.hi }
    }

    pub fn apply(self, alpha: Automorphism) -> PackedVec {
        match alpha {
            Automorphism::Id => self,
            Automorphism::Inv => self.frobenius(),
        }
    }

    /// π_Y: zero every coordinate outside `y`.
    #[inline]
    pub fn project(self, y: Mask) -> PackedVec {
        PackedVec { lo: self.lo & y, hi: self.hi & y }
    }

    /// The bilinear form Σ u(x)v(x) (no conjugation).
    #[inline]
    pub fn dot(self, other: PackedVec) -> Gf4 {
        let (a0, a1, b0, b1) = (self.lo, self.hi, other.lo, other.hi);
        // (a0 + a1ω)(b0 + b1ω) = (a0b0 + a1b1) + (a0b1 + a1b0 + a1b1)ω
        let lo = ((a0 & b0) ^ (a1 & b1)).count_ones() & 1;
        let hi = ((a0 & b1) ^ (a1 & b0) ^ (a1 & b1)).count_ones() & 1;
        Gf4::from_code((lo | hi << 1) as u8)
    }

    /// Keep the coordinates selected by `sel`, packed into the low positions.
    pub fn compress(self, sel: Mask) -> PackedVec {
        PackedVec { lo: bits::compress(self.lo, sel), hi: bits::compress(self.hi, sel) }
    }

    pub fn expand(self, sel: Mask) -> PackedVec {
        PackedVec { lo: bits::expand(self.lo, sel), hi: bits::expand(self.hi, sel) }
    }

    pub fn squeeze(self, i: usize) -> PackedVec {
        PackedVec { lo: bits::squeeze(self.lo, i), hi: bits::squeeze(self.hi, i) }
    }

    /// First nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        let s = self.support();
        (s != 0).then(|| s.trailing_zeros() as usize)
    }

    pub fn entries(&self, n: usize) -> Vec<Gf4> {
        (0..n).map(|i| self.get(i)).collect()
    }

    pub fn display(&self, n: usize) -> String {
        (0..n).map(|i| self.get(i).token()).collect()
    }
}

impl fmt::Display for PackedVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 64 - self.support().leading_zeros() as usize;
        f.write_str(&self.display(n.max(1)))
    }
}

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
///
/// Pivots are chosen as the first row (in order) with a nonzero entry in the
/// leftmost unreduced column, so results are reproducible. Zero rows end up at
/// the bottom and are truncated.
pub fn rref(rows: &mut Vec<PackedVec>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].get(c).is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].get(c).inverse().expect("pivot is nonzero");
        rows[r] = rows[r].scale(inv);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r {
                let x = row.get(c);
                if !x.is_zero() {
                    row.add_assign(pivot_row.scale(x));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank_of(rows: &[PackedVec], ncols: usize) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work, ncols).len()
}

/// Basis of {x : ⟨row, x⟩ = 0 for every row}, one vector per free column.
pub fn kernel(rows: &[PackedVec], ncols: usize) -> Vec<PackedVec> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work, ncols);
    let pivot_mask = pivots.iter().fold(0, |m, &c| m | bits::bit(c));
    bits::ones(bits::full(ncols) & !pivot_mask)
        .map(|f| {
            let mut v = PackedVec::ZERO;
            v.set(f, Gf4::ONE);
            for (row, &c) in work.iter().zip(&pivots) {
                // x_c + row[f] = 0
                v.set(c, -row.get(f));
            }
            v
        })
        .collect()
}
