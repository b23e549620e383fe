//! Subsets of a ground set of at most 64 elements, encoded as `u64` bitmasks.

/// Bitmask over ground-set indices; bit `i` set means element `i` is a member.
pub type Mask = u64;

pub const MAX_GROUND: usize = 64;

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub fn contains(m: Mask, i: usize) -> bool {
    m >> i & 1 == 1
}

#[inline]
pub fn popcount(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Indices of the set bits, ascending.
pub fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// All submasks of `m` (including 0 and `m`), in increasing numeric order.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == m {
            None
        } else {
            Some((cur.wrapping_sub(m)) & m)
        };
        Some(cur)
    })
}

/// All `k`-subsets of `{0..n}` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    let limit = full(n);
    let mut next = if k > n {
        None
    } else {
        Some(full(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nx = (((r ^ cur) >> 2) / c) | r;
                if nx & !limit != 0 {
                    None
                } else {
                    Some(nx)
                }
            }
        };
        Some(cur)
    })
}

/// Remove bit position `i`, shifting higher bits down by one.
#[inline]
pub fn squeeze(m: Mask, i: usize) -> Mask {
    let low = bit(i) - 1;
    (m & low) | ((m >> 1) & !low)
}

/// Gather the bits of `m` selected by `sel` into the low bits (software `pext`).
pub fn compress(m: Mask, sel: Mask) -> Mask {
    let mut out = 0;
    for (k, i) in ones(sel).enumerate() {
        if contains(m, i) {
            out |= bit(k);
        }
    }
    out
}

/// Inverse of [`compress`]: scatter the low bits of `m` onto the positions of `sel`.
pub fn expand(m: Mask, sel: Mask) -> Mask {
    let mut out = 0;
    for (k, i) in ones(sel).enumerate() {
        if contains(m, k) {
            out |= bit(i);
        }
    }
    out
}
