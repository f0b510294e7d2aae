//! Size limits for the exhaustive enumerators.

use std::env;

use crate::error::{Error, Result};

pub const WALK_STEPS_VAR: &str = "IBAX_MAX_WALK_STEPS";
pub const PATH_N_VAR: &str = "IBAX_MAX_PATH_N";
pub const PERM_SIZE_VAR: &str = "IBAX_MAX_PERM_SIZE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Combined step count of the three walks in a disjoint-triple search.
    pub walk_steps: usize,
    /// Largest `n` for diagonal-triple class enumeration (`2^{3(n-1)}` candidates).
    pub path_n: usize,
    /// Largest permutation size for brute-force censuses.
    pub perm_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            walk_steps: 24,
            path_n: 8,
            perm_size: 14,
        }
    }
}

impl Bounds {
    /// Defaults, overridden by `IBAX_MAX_*` environment variables when set.
    pub fn from_env() -> Result<Self> {
        let mut b = Self::default();
        for (var, slot) in [
            (WALK_STEPS_VAR, &mut b.walk_steps),
            (PATH_N_VAR, &mut b.path_n),
            (PERM_SIZE_VAR, &mut b.perm_size),
        ] {
            if let Ok(text) = env::var(var) {
                *slot = text
                    .trim()
                    .parse()
                    .map_err(|_| Error::Format(format!("{var}={text:?} is not a size")))?;
            }
        }
        Ok(b)
    }

    pub fn unbounded() -> Self {
        Self {
            walk_steps: usize::MAX,
            path_n: usize::MAX,
            perm_size: usize::MAX,
        }
    }

    pub fn check(what: &'static str, requested: usize, bound: usize) -> Result<()> {
        if requested > bound {
            Err(Error::Capacity {
                what,
                requested,
                bound,
            })
        } else {
            Ok(())
        }
    }
}
