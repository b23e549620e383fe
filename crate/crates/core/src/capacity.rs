//! Size limits for exhaustive enumerations.

use crate::error::{Error, Result};

/// Largest ground set for the 3^|V| vf-safety scan.
pub const VF_SAFE_MAX: usize = 12;
/// Largest ground set for the direct transition-polynomial sum.
pub const TRANSITION_MAX: usize = 16;
/// Largest ground set for the direct Penrose sum.
pub const PENROSE_MAX: usize = 20;
/// 3^|V| enumerations warn above this size.
pub const WARN_POW3: usize = 12;
/// 2^|V| enumerations warn above this size.
pub const WARN_POW2: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    Pow2,
    Pow3,
}

pub fn check(op: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::Capacity { op, n, max })
    } else {
        Ok(())
    }
}

/// A human-readable warning when an enumeration of the given growth is large.
pub fn warning(op: &str, growth: Growth, n: usize) -> Option<String> {
    let (limit, base) = match growth {
        Growth::Pow2 => (WARN_POW2, 2),
        Growth::Pow3 => (WARN_POW3, 3),
    };
    (n > limit).then(|| format!("{op} enumerates {base}^{n} configurations; expect a long run"))
}
