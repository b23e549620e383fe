//! Reduction of twist / loop-complementation words to the normal form
//! `+Z₁ *Z₂ +Z₃` with `Z₁ ⊆ Z₂`.
//!
//! For a single element, `*` and `+` are involutions generating S₃. Each
//! element's subword is evaluated as a permutation of three points and matched
//! against the six normal-form patterns.

use crate::bits::{self, Mask};
use crate::error::Result;

use super::SetSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Twist,
    LoopComplement,
    DualPivot,
}

/// An element of S₃ as the images of 0, 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct S3([u8; 3]);

impl S3 {
    pub const ID: S3 = S3([0, 1, 2]);
    pub const TWIST: S3 = S3([1, 0, 2]);
    pub const LOOP: S3 = S3([0, 2, 1]);

    /// `self` followed by `next`.
    pub fn then(self, next: S3) -> S3 {
        S3([next.0[self.0[0] as usize], next.0[self.0[1] as usize], next.0[self.0[2] as usize]])
    }

    pub fn of(g: Gen) -> S3 {
        match g {
            Gen::Twist => S3::TWIST,
            Gen::LoopComplement => S3::LOOP,
            Gen::DualPivot => S3::TWIST.then(S3::LOOP).then(S3::TWIST),
        }
    }

    pub fn word(gens: &[Gen]) -> S3 {
        gens.iter().fold(S3::ID, |acc, &g| acc.then(S3::of(g)))
    }
}

/// M + Z₁ * Z₂ + Z₃ with Z₁ ⊆ Z₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NormalForm {
    pub z1: Mask,
    pub z2: Mask,
    pub z3: Mask,
}

// (in Z₁, in Z₂, in Z₃) for the six per-element patterns
const PATTERNS: [(bool, bool, bool); 6] = [
    (false, false, false),
    (false, false, true),
    (false, true, false),
    (true, true, false),
    (false, true, true),
    (true, true, true),
];

fn pattern_perm((a, b, c): (bool, bool, bool)) -> S3 {
    let mut p = S3::ID;
    if a {
        p = p.then(S3::LOOP);
    }
    if b {
        p = p.then(S3::TWIST);
    }
    if c {
        p = p.then(S3::LOOP);
    }
    p
}

/// Normal form of a left-to-right word of operations on subsets.
pub fn normal_form(word: &[(Gen, Mask)]) -> NormalForm {
    let support = word.iter().fold(0, |m, &(_, x)| m | x);
    let mut nf = NormalForm::default();
    for u in bits::ones(support) {
        let gens: Vec<Gen> = word.iter().filter(|(_, x)| bits::contains(*x, u)).map(|&(g, _)| g).collect();
        let perm = S3::word(&gens);
        let &(a, b, c) = PATTERNS.iter().find(|&&p| pattern_perm(p) == perm).expect("six patterns cover S3");
        let bit = bits::bit(u);
        if a {
            nf.z1 |= bit;
        }
        if b {
            nf.z2 |= bit;
        }
        if c {
            nf.z3 |= bit;
        }
    }
    nf
}

impl NormalForm {
    pub fn apply(&self, m: &SetSystem) -> Result<SetSystem> {
        m.loop_complement(self.z1)?.twist(self.z2)?.loop_complement(self.z3)
    }

    pub fn to_word(&self) -> Vec<(Gen, Mask)> {
        vec![(Gen::LoopComplement, self.z1), (Gen::Twist, self.z2), (Gen::LoopComplement, self.z3)]
    }
}

/// Apply a word directly, left to right.
pub(crate) fn apply_word(m: &SetSystem, word: &[(Gen, Mask)]) -> Result<SetSystem> {
    word.iter().try_fold(m.clone(), |cur, &(g, x)| match g {
        Gen::Twist => cur.twist(x),
        Gen::LoopComplement => cur.loop_complement(x),
        Gen::DualPivot => cur.dual_pivot(x),
    })
}

impl SetSystem {
    pub fn apply_word(&self, word: &[(Gen, Mask)]) -> Result<SetSystem> {
        apply_word(self, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::Ground;

    #[test]
    fn group_relations() {
        let t = S3::TWIST;
        let l = S3::LOOP;
        assert_eq!(t.then(t), S3::ID);
        assert_eq!(l.then(l), S3::ID);
        let tl = t.then(l);
        assert_eq!(tl.then(tl).then(tl), S3::ID);
        assert_eq!(t.then(l).then(t), l.then(t).then(l));
        let perms: std::collections::HashSet<S3> = PATTERNS.iter().map(|&p| pattern_perm(p)).collect();
        assert_eq!(perms.len(), 6);
    }

    #[test]
    fn normal_form_matches_direct_application() {
        let m = SetSystem::new(Ground::numbered(3), [0b000, 0b011, 0b101, 0b110, 0b001]).unwrap();
        let word = [
            (Gen::Twist, 0b011),
            (Gen::LoopComplement, 0b110),
            (Gen::DualPivot, 0b101),
            (Gen::Twist, 0b100),
        ];
        let nf = normal_form(&word);
        assert_eq!(nf.z1 & !nf.z2, 0);
        assert_eq!(nf.apply(&m).unwrap(), m.apply_word(&word).unwrap());
    }
}
