//! Deterministic inputs shared by the benchmarks.

use deltamat::{Automorphism, Field, Gf4, Ground, Matroid, SetSystem, SquareMatrix};

/// A fixed pseudo-random stream (xorshift), enough to vary matrix entries.
struct Stream(u64);

impl Stream {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
}

/// An inv-symmetric GF(4) matrix on n elements.
pub fn inv_symmetric(n: usize, seed: u64) -> SquareMatrix {
    let mut s = Stream(seed | 1);
    let mut a = SquareMatrix::zero(Field::Gf4, Ground::numbered(n));
    for i in 0..n {
        a.set(i, i, if s.next() % 2 == 0 { Gf4::ZERO } else { Gf4::ONE });
        for j in i + 1..n {
            let x = Gf4::ALL[(s.next() % 4) as usize];
            a.set(i, j, x);
            a.set(j, i, x.apply(Automorphism::Inv));
        }
    }
    a
}

/// M_A for an inv-symmetric A: a vf-safe delta-matroid.
pub fn quaternary_delta_matroid(n: usize, seed: u64) -> SetSystem {
    inv_symmetric(n, seed).delta_matroid()
}

pub fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::uniform(r, n).expect("r <= n")
}
