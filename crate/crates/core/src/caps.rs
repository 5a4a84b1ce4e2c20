//! Size limits on enumeration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable that overrides every cap at once.
pub const CAP_OVERRIDE_ENV: &str = "UPFAM_MAX_ORDER";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub all_semigroups: usize,
    pub commutative: usize,
    pub bands: usize,
    pub semilattices: usize,
    pub linear: usize,
    pub lattices: usize,
    pub upsilon: usize,
    pub n2: usize,
    pub lambda: usize,
    pub phi: usize,
    pub beta: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            all_semigroups: 3,
            commutative: 4,
            bands: 5,
            semilattices: 7,
            linear: 5,
            lattices: 7,
            upsilon: 5,
            n2: 5,
            lambda: 6,
            phi: 7,
            beta: 8,
        }
    }
}

impl Caps {
    /// Every cap set to `n`.
    pub fn uniform(n: usize) -> Self {
        Caps {
            all_semigroups: n,
            commutative: n,
            bands: n,
            semilattices: n,
            linear: n,
            lattices: n,
            upsilon: n,
            n2: n,
            lambda: n,
            phi: n,
            beta: n,
        }
    }

    /// Defaults, or [`Caps::uniform`] when the override variable is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_OVERRIDE_ENV) {
            Ok(v) => {
                let n: usize = v.trim().parse().map_err(|_| {
                    Error::Input(format!("{CAP_OVERRIDE_ENV}={v} is not a number"))
                })?;
                Ok(Caps::uniform(n.min(crate::cayley::MAX_ORDER)))
            }
            Err(_) => Ok(Caps::default()),
        }
    }
}

pub(crate) fn check(what: &str, order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::CapExceeded {
            what: what.to_string(),
            order,
            cap,
        })
    } else {
        Ok(())
    }
}
