//! Set systems over a labelled ground set and the twist / loop complementation /
//! dual pivot action.
//!
//! A family is a sorted, duplicate-free `Vec<Mask>`, ordered by
//! `(popcount, value)`. Loop complementation and dual pivot are computed one
//! element at a time: for `u`, `+u` toggles `Z ∪ {u}` for every member `Z`
//! missing `u`, and `∗̄u` toggles `Z \ {u}` for every member `Z` containing
//! `u`. Operations on distinct elements commute, so `+X` is the composition of
//! `+u` over `u ∈ X` in any order.

mod word;

use std::collections::HashSet;
use std::fmt;

pub use word::{normal_form, Gen, NormalForm, S3};

use crate::bits::{self, Mask};
use crate::capacity;
use crate::error::{Error, Result};
use crate::ground::Ground;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: Ground,
    family: Vec<Mask>,
}

#[inline]
fn key(m: &Mask) -> (u32, Mask) {
    (m.count_ones(), *m)
}

fn canonical(mut v: Vec<Mask>) -> Vec<Mask> {
    v.sort_unstable_by_key(key);
    v.dedup();
    v
}

/// Symmetric difference of a canonical family with a duplicate-free list.
fn toggle(family: &[Mask], extras: Vec<Mask>) -> Vec<Mask> {
    if extras.is_empty() {
        return family.to_vec();
    }
    let mut all = extras;
    all.extend_from_slice(family);
    all.sort_unstable_by_key(key);
    let mut out = Vec::with_capacity(all.len());
    let mut i = 0;
    while i < all.len() {
        if i + 1 < all.len() && all[i] == all[i + 1] {
            i += 2;
        } else {
            out.push(all[i]);
            i += 1;
        }
    }
    out
}

/// Constant-time membership for the delta-matroid scan.
enum Lookup {
    Bitmap(Vec<u64>),
    Hash(HashSet<Mask>),
}

impl Lookup {
    fn new(n: usize, family: &[Mask]) -> Lookup {
        if n <= 22 {
            let mut words = vec![0u64; (1usize << n).div_ceil(64)];
            for &m in family {
                words[(m >> 6) as usize] |= 1 << (m & 63);
            }
            Lookup::Bitmap(words)
        } else {
            Lookup::Hash(family.iter().copied().collect())
        }
    }

    #[inline]
    fn has(&self, m: Mask) -> bool {
        match self {
            Lookup::Bitmap(w) => w.get((m >> 6) as usize).is_some_and(|x| x >> (m & 63) & 1 == 1),
            Lookup::Hash(h) => h.contains(&m),
        }
    }
}

/// Inclusion-minimal/maximal members and the two distance parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremal {
    pub min: SetSystem,
    pub max: SetSystem,
    /// d_M: smallest member size.
    pub d: usize,
    /// d_{M*V}: |V| minus the largest member size.
    pub d_dual: usize,
}

/// One step of an operation sequence; `elements` are labels of the current ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Op {
    pub kind: OpKind,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    Twist,
    LoopComplement,
    DualPivot,
    Delete,
    Restrict,
}

impl Op {
    pub fn new<S: Into<String>>(kind: OpKind, elements: impl IntoIterator<Item = S>) -> Op {
        Op { kind, elements: elements.into_iter().map(Into::into).collect() }
    }
}

impl SetSystem {
    /// Members may repeat; they are deduplicated.
    pub fn new(ground: Ground, family: impl IntoIterator<Item = Mask>) -> Result<SetSystem> {
        let family: Vec<Mask> = family.into_iter().collect();
        for &m in &family {
            ground.check(m)?;
        }
        Ok(SetSystem { ground, family: canonical(family) })
    }

    pub fn from_labels<S: AsRef<str>>(ground: Ground, members: &[Vec<S>]) -> Result<SetSystem> {
        let masks = members.iter().map(|m| ground.mask_of(m.iter())).collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, masks)
    }

    /// Members given as strings of single-character labels, e.g. `["235", "236"]`.
    pub fn from_compact(ground: Ground, members: &[&str]) -> Result<SetSystem> {
        let masks = members
            .iter()
            .map(|s| ground.mask_of(s.chars().map(|c| c.to_string())))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, masks)
    }

    /// M_∅ = (∅, {∅}).
    pub fn trivial() -> SetSystem {
        SetSystem { ground: Ground::empty(), family: vec![0] }
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn family(&self) -> &[Mask] {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.family.is_empty()
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.family.binary_search_by_key(&key(&m), key).is_ok()
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::Improper)
        }
    }

    /// Same family over a relabelled ground set of the same size.
    pub fn relabel(&self, ground: Ground) -> Result<SetSystem> {
        if ground.len() != self.n() {
            return Err(Error::Dimension("relabelling must keep the ground set size".into()));
        }
        Ok(SetSystem { ground, family: self.family.clone() })
    }

    /// M * X
    pub fn twist(&self, x: Mask) -> Result<SetSystem> {
        self.ground.check(x)?;
        Ok(self.twist_unchecked(x))
    }

    pub(crate) fn twist_unchecked(&self, x: Mask) -> SetSystem {
        let family = canonical(self.family.iter().map(|&m| m ^ x).collect());
        SetSystem { ground: self.ground.clone(), family }
    }

    /// M + X
    pub fn loop_complement(&self, x: Mask) -> Result<SetSystem> {
        self.ground.check(x)?;
        Ok(bits::ones(x).fold(self.clone(), |m, u| m.loop_complement_one(u)))
    }

    /// M ∗̄ X
    pub fn dual_pivot(&self, x: Mask) -> Result<SetSystem> {
        self.ground.check(x)?;
        Ok(bits::ones(x).fold(self.clone(), |m, u| m.dual_pivot_one(u)))
    }

    pub(crate) fn loop_complement_one(&self, u: usize) -> SetSystem {
        let b = bits::bit(u);
        let extras = self.family.iter().filter(|&&z| z & b == 0).map(|&z| z | b).collect();
        SetSystem { ground: self.ground.clone(), family: toggle(&self.family, extras) }
    }

    pub(crate) fn dual_pivot_one(&self, u: usize) -> SetSystem {
        let b = bits::bit(u);
        let extras = self.family.iter().filter(|&&z| z & b != 0).map(|&z| z & !b).collect();
        SetSystem { ground: self.ground.clone(), family: toggle(&self.family, extras) }
    }

    /// M \ X: members disjoint from X, on the ground set V \ X.
    pub fn delete(&self, x: Mask) -> Result<SetSystem> {
        self.ground.check(x)?;
        let keep = self.ground.full() & !x;
        let family = self.family.iter().filter(|&&m| m & x == 0).map(|&m| bits::compress(m, keep)).collect();
        Ok(SetSystem { ground: self.ground.restrict(keep), family: canonical(family) })
    }

    /// M[X] = M \ (V \ X).
    pub fn restrict(&self, x: Mask) -> Result<SetSystem> {
        self.ground.check(x)?;
        self.delete(self.ground.full() & !x)
    }

    /// M \ u
    pub fn delete_one(&self, u: usize) -> SetSystem {
        let b = bits::bit(u);
        let family = self.family.iter().filter(|&&m| m & b == 0).map(|&m| bits::squeeze(m, u)).collect();
        SetSystem { ground: self.ground.without(u), family: canonical(family) }
    }

    /// M * u \ u: members containing u, with u removed.
    pub fn pivot_delete_one(&self, u: usize) -> SetSystem {
        let b = bits::bit(u);
        let family = self.family.iter().filter(|&&m| m & b != 0).map(|&m| bits::squeeze(m, u)).collect();
        SetSystem { ground: self.ground.without(u), family: canonical(family) }
    }

    /// M ∗̄ u \ u
    pub fn dual_pivot_delete_one(&self, u: usize) -> SetSystem {
        self.dual_pivot_one(u).delete_one(u)
    }

    /// Left-to-right application of an operation sequence.
    pub fn apply_sequence(&self, ops: &[Op]) -> Result<SetSystem> {
        let mut cur = self.clone();
        for op in ops {
            let x = cur.ground.mask_of(op.elements.iter())?;
            cur = match op.kind {
                OpKind::Twist => cur.twist(x)?,
                OpKind::LoopComplement => cur.loop_complement(x)?,
                OpKind::DualPivot => cur.dual_pivot(x)?,
                OpKind::Delete => cur.delete(x)?,
                OpKind::Restrict => cur.restrict(x)?,
            };
        }
        Ok(cur)
    }

    /// d_M, the size of a smallest member.
    pub fn d(&self) -> Result<usize> {
        self.family.first().map(|&m| bits::popcount(m)).ok_or(Error::Improper)
    }

    /// d_{M*V} = |V| − size of a largest member.
    pub fn d_dual(&self) -> Result<usize> {
        self.family.last().map(|&m| self.n() - bits::popcount(m)).ok_or(Error::Improper)
    }

    /// min(M): inclusion-minimal members.
    pub fn min_sets(&self) -> SetSystem {
        let mut keep = Vec::new();
        for (i, &m) in self.family.iter().enumerate() {
            // only strictly smaller members can be proper subsets
            if !self.family[..i].iter().any(|&s| s != m && s & m == s) {
                keep.push(m);
            }
        }
        SetSystem { ground: self.ground.clone(), family: keep }
    }

    /// max(M): inclusion-maximal members.
    pub fn max_sets(&self) -> SetSystem {
        let mut keep = Vec::new();
        for (i, &m) in self.family.iter().enumerate() {
            if !self.family[i + 1..].iter().any(|&s| s != m && s & m == m) {
                keep.push(m);
            }
        }
        SetSystem { ground: self.ground.clone(), family: keep }
    }

    pub fn extremal(&self) -> Result<Extremal> {
        Ok(Extremal { d: self.d()?, d_dual: self.d_dual()?, min: self.min_sets(), max: self.max_sets() })
    }

    /// No member contains u.
    pub fn is_loop(&self, u: usize) -> bool {
        assert!(u < self.n(), "element index {u} out of range");
        self.family.iter().all(|&m| !bits::contains(m, u))
    }

    /// Every member contains u.
    pub fn is_coloop(&self, u: usize) -> bool {
        assert!(u < self.n(), "element index {u} out of range");
        self.family.iter().all(|&m| bits::contains(m, u))
    }

    pub fn is_singular(&self, u: usize) -> bool {
        self.is_loop(u) || self.is_coloop(u)
    }

    /// All members have the same size parity.
    pub fn is_even(&self) -> bool {
        match self.family.first() {
            None => true,
            Some(&f) => self.family.iter().all(|&m| (m.count_ones() ^ f.count_ones()) & 1 == 0),
        }
    }

    pub fn is_equicardinal(&self) -> bool {
        match (self.family.first(), self.family.last()) {
            (Some(a), Some(b)) => a.count_ones() == b.count_ones(),
            _ => true,
        }
    }

    /// A witness against the symmetric exchange axiom: members X, Y and
    /// x ∈ X Δ Y such that no y ∈ X Δ Y has X Δ {x, y} ∈ M.
    pub fn exchange_violation(&self) -> Option<(Mask, Mask, usize)> {
        let n = self.n();
        let look = Lookup::new(n, &self.family);
        for &x_set in &self.family {
            for x in 0..n {
                let bx = bits::bit(x);
                if look.has(x_set ^ bx) {
                    // y = x always works
                    continue;
                }
                let reach = (0..n).filter(|&y| y != x && look.has(x_set ^ bx ^ bits::bit(y))).fold(0, |r, y| r | bits::bit(y));
                // Y violates the axiom with X iff X Δ Y contains x and misses reach.
                let s = reach | bx;
                if let Some(&y_set) = self.family.iter().find(|&&y| (y ^ x_set) & s == bx) {
                    return Some((x_set, y_set, x));
                }
            }
        }
        None
    }

    /// Proper and satisfying the symmetric exchange axiom.
    pub fn is_delta_matroid(&self) -> bool {
        self.is_proper() && self.exchange_violation().is_none()
    }

    pub fn describe_violation(&self, (x, y, e): (Mask, Mask, usize)) -> String {
        format!(
            "X = {}, Y = {}, x = {}: no y in X Δ Y gives a member X Δ {{x, y}}",
            self.ground.format_set(x),
            self.ground.format_set(y),
            self.ground.label(e)
        )
    }

    /// Every set system in the orbit under twist and loop complementation is a delta-matroid.
    ///
    /// Checks M + Z₁ ∗̄ Z₂ for disjoint Z₁, Z₂ (3^|V| systems). Per element, the
    /// operations id, +u, ∗̄u represent the cosets of ⟨*u⟩ in S₃ and twists
    /// preserve the delta-matroid property, so this covers the whole orbit.
    pub fn is_vf_safe(&self) -> Result<bool> {
        Ok(self.vf_safety_witness()?.is_none())
    }

    /// A pair (Z₁, Z₂) with M + Z₁ ∗̄ Z₂ not a delta-matroid, if any.
    pub fn vf_safety_witness(&self) -> Result<Option<(Mask, Mask)>> {
        capacity::check("vf-safety check", self.n(), capacity::VF_SAFE_MAX)?;
        self.require_proper()?;
        Ok(self.vf_dfs(0, 0, 0))
    }

    fn vf_dfs(&self, i: usize, z1: Mask, z2: Mask) -> Option<(Mask, Mask)> {
        if i == self.n() {
            return (!self.is_delta_matroid()).then_some((z1, z2));
        }
        let b = bits::bit(i);
        self.vf_dfs(i + 1, z1, z2)
            .or_else(|| self.loop_complement_one(i).vf_dfs(i + 1, z1 | b, z2))
            .or_else(|| self.dual_pivot_one(i).vf_dfs(i + 1, z1, z2 | b))
    }

    /// Members rendered with labels, e.g. `{1 2}, {3}`.
    pub fn format_family(&self) -> String {
        self.family.iter().map(|&m| self.ground.format_set(m)).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}}, {{{}}})", self.ground, self.format_family())
    }
}
