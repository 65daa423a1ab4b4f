//! Size limits that keep exact computations at desk scale.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostGuard {
    /// Largest accepted `2j`.
    pub max_two_j: u32,
    /// Largest accepted moment order `r` (for `<n|q^{2r}|n>`).
    pub max_r: u32,
    /// Largest accepted total degree `a + b` of a Weyl-symmetrized operator.
    pub max_weyl_degree: u32,
}

impl Default for CostGuard {
    fn default() -> Self {
        Self {
            max_two_j: 16,
            max_r: 12,
            max_weyl_degree: 10,
        }
    }
}

impl CostGuard {
    pub fn unbounded() -> Self {
        Self {
            max_two_j: u32::MAX,
            max_r: u32::MAX,
            max_weyl_degree: u32::MAX,
        }
    }

    pub fn check_two_j(&self, two_j: u32) -> Result<()> {
        if two_j > self.max_two_j {
            return Err(Error::CostGuard(format!(
                "2j = {two_j} exceeds the limit {}",
                self.max_two_j
            )));
        }
        Ok(())
    }

    pub fn check_moment(&self, r: u32) -> Result<()> {
        if r > self.max_r {
            return Err(Error::CostGuard(format!(
                "moment order r = {r} exceeds the limit {}",
                self.max_r
            )));
        }
        Ok(())
    }

    pub fn check_weyl(&self, a: u32, b: u32) -> Result<()> {
        if a.saturating_add(b) > self.max_weyl_degree {
            return Err(Error::CostGuard(format!(
                "Weyl symmetrization of degree a + b = {} exceeds the limit {}",
                a.saturating_add(b),
                self.max_weyl_degree
            )));
        }
        Ok(())
    }
}
