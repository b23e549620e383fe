#![allow(dead_code)]

pub mod checks;

use deltamat::bits::{self, Mask};
use deltamat::{Automorphism, Field, Gf4, Graph, Ground, Matroid, PackedVec, RectMatrix, SetSystem, SquareMatrix};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn mask(g: &Ground, compact: &str) -> Mask {
    g.mask_of(compact.chars().map(|c| c.to_string())).unwrap()
}

pub fn family(m: &SetSystem, compact: &[&str]) -> Vec<Mask> {
    let mut v: Vec<Mask> = compact.iter().map(|s| mask(m.ground(), s)).collect();
    v.sort_by_key(|&x| (x.count_ones(), x));
    v
}

/// Loop 1; 2 = ac, 3 = ba, 4 = cb; 5 and 6 parallel between c and d.
pub fn looped_graph() -> Matroid {
    Matroid::graphic(&["a", "b", "c", "d"], &[("1", "a", "a"), ("2", "a", "c"), ("3", "b", "a"), ("4", "c", "b"), ("5", "c", "d"), ("6", "d", "c")]).unwrap()
}

/// The diamond: 4-cycle 1 2 3 4 on corners p q r s with chord 5 = qs.
pub fn diamond() -> Matroid {
    Matroid::graphic(&["p", "q", "r", "s"], &[("1", "p", "s"), ("2", "s", "r"), ("3", "r", "q"), ("4", "q", "p"), ("5", "s", "q")]).unwrap()
}

pub fn k4() -> Matroid {
    Matroid::graphic(&["a", "b", "c", "d"], &[("1", "a", "b"), ("2", "a", "c"), ("3", "a", "d"), ("4", "b", "c"), ("5", "b", "d"), ("6", "c", "d")]).unwrap()
}

pub fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::uniform(r, n).unwrap()
}

/// U_{2,5} over GF(4): the five points of the projective line.
pub fn u25_quaternary() -> Matroid {
    let cols = [(Gf4::ONE, Gf4::ZERO), (Gf4::ZERO, Gf4::ONE), (Gf4::ONE, Gf4::ONE), (Gf4::ONE, Gf4::W), (Gf4::ONE, Gf4::W2)];
    let rows = (0..2)
        .map(|r| PackedVec::from_entries(&cols.iter().map(|&(a, b)| if r == 0 { a } else { b }).collect::<Vec<_>>()))
        .collect();
    let b = RectMatrix::from_rows(Field::Gf4, Ground::numbered(5), rows).unwrap();
    Matroid::column_matroid(&b)
}

pub fn random_scalar(rng: &mut impl Rng, field: Field) -> Gf4 {
    let el = field.elements();
    el[rng.gen_range(0..el.len())]
}

pub fn random_nonzero(rng: &mut impl Rng, field: Field) -> Gf4 {
    let el = field.elements();
    el[rng.gen_range(1..el.len())]
}

/// Uniform among matrices with α(−Aᵀ) = A: off-diagonal pairs (x, α(x)),
/// diagonal entries fixed by α.
pub fn random_alpha_symmetric(rng: &mut impl Rng, field: Field, alpha: Automorphism, n: usize) -> SquareMatrix {
    let mut a = SquareMatrix::zero(field, Ground::numbered(n));
    for i in 0..n {
        let d = loop {
            let x = random_scalar(rng, field);
            if x.apply(alpha) == x {
                break x;
            }
        };
        a.set(i, i, d);
        for j in i + 1..n {
            let x = random_scalar(rng, field);
            a.set(i, j, x);
            a.set(j, i, x.apply(alpha));
        }
    }
    a
}

pub fn random_inv_symmetric(rng: &mut impl Rng, n: usize) -> SquareMatrix {
    random_alpha_symmetric(rng, Field::Gf4, Automorphism::Inv, n)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, loops: bool) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    let lp = if loops { (0..n).filter(|_| rng.gen_bool(0.3)).fold(0, |m, u| m | bits::bit(u)) } else { 0 };
    Graph::from_edges(Ground::numbered(n), &edges, lp).unwrap()
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> Mask {
    rng.gen::<u64>() & bits::full(n)
}

/// M_A * X for a random symmetric GF(2) matrix: a binary delta-matroid.
pub fn random_binary_delta_matroid(rng: &mut impl Rng, n: usize) -> SetSystem {
    let a = random_alpha_symmetric(rng, Field::Gf2, Automorphism::Id, n);
    a.delta_matroid().twist(random_subset(rng, n)).unwrap()
}

/// M_A * X for a random inv-symmetric GF(4) matrix: a vf-safe delta-matroid.
pub fn random_quaternary_delta_matroid(rng: &mut impl Rng, n: usize) -> SetSystem {
    let a = random_inv_symmetric(rng, n);
    a.delta_matroid().twist(random_subset(rng, n)).unwrap()
}

pub fn random_matrix(rng: &mut impl Rng, field: Field, rows: usize, n: usize) -> RectMatrix {
    let rows = (0..rows)
        .map(|_| {
            let mut v = PackedVec::ZERO;
            for j in 0..n {
                v.set(j, random_scalar(rng, field));
            }
            v
        })
        .collect();
    RectMatrix::from_rows(field, Ground::numbered(n), rows).unwrap()
}

/// Column matroid of a random r×n matrix, representation attached.
pub fn random_represented(rng: &mut impl Rng, field: Field, r: usize, n: usize) -> Matroid {
    Matroid::column_matroid(&random_matrix(rng, field, r, n))
}

/// A random proper set system with roughly `density` of all subsets.
pub fn random_set_system(rng: &mut impl Rng, n: usize, density: f64) -> SetSystem {
    let mut fam: Vec<Mask> = (0..1u64 << n).filter(|_| rng.gen_bool(density)).collect();
    if fam.is_empty() {
        fam.push(random_subset(rng, n));
    }
    SetSystem::new(Ground::numbered(n), fam).unwrap()
}

/// A random even proper set system: members share the parity of the first.
pub fn random_even_set_system(rng: &mut impl Rng, n: usize, density: f64) -> SetSystem {
    let parity = rng.gen_range(0..2u32);
    let mut fam: Vec<Mask> = (0..1u64 << n).filter(|m| m.count_ones() % 2 == parity && rng.gen_bool(density)).collect();
    if fam.is_empty() {
        fam.push(if parity == 0 { 0 } else { 1 });
    }
    SetSystem::new(Ground::numbered(n), fam).unwrap()
}
