//! Numerical tolerances and resource budgets, kept in one place so every
//! module validates and compares with the same constants.

/// Distributions constructed programmatically must have unit mass within this.
pub const MASS_TOL: f64 = 1e-12;

/// Rows read from channel files may be off by this much; they are rescaled
/// to exact unit mass on load.
pub const FILE_ROW_TOL: f64 = 1e-9;

/// Probabilities below this are treated as exact zeros inside entropy sums
/// (0·log 0 = 0) and support checks.
pub const ZERO_PROB: f64 = 1e-15;

/// Mutual informations are mathematically nonnegative; values above this far
/// below zero indicate a real bug rather than rounding, so they panic in
/// debug assertions. Small negatives are clamped to 0.
pub const MI_NEG_TOL: f64 = 1e-10;

/// Tolerance for information identities (chain rules, sum-rate identities,
/// Markov-feasibility residuals).
pub const IDENTITY_TOL: f64 = 1e-9;

/// Cross products with absolute value at or below this are treated as
/// collinear during hull construction.
pub const CROSS_TOL: f64 = 1e-12;

/// Tolerance for point-in-region and region-dominance queries.
pub const REGION_TOL: f64 = 1e-9;

/// Strict inequalities (positive-rate conditions) require at least this margin.
pub const STRICT_MARGIN: f64 = 1e-9;

/// Resource budgets for exact (enumerative) computations. `cells` bounds the
/// size of any dense joint table; `terms` bounds the number of elementary
/// terms an exact equivocation/error enumeration may touch.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub cells: u128,
    pub terms: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            cells: 1 << 24,
            terms: 1 << 28,
        }
    }
}

impl Budget {
    /// Default budgets, with the cell budget overridable through the
    /// `SECRECY_BUDGET_CELLS` environment variable.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var("SECRECY_BUDGET_CELLS") {
            if let Ok(cells) = v.trim().parse::<u128>() {
                if cells > 0 {
                    b.cells = cells;
                }
            }
        }
        b
    }

    pub fn check_cells(&self, what: &str, needed: u128) -> crate::Result<()> {
        if needed > self.cells {
            return Err(crate::Error::Budget {
                what: what.to_string(),
                needed,
                budget: self.cells,
                unit: "cells",
            });
        }
        Ok(())
    }

    pub fn check_terms(&self, what: &str, needed: u128) -> crate::Result<()> {
        if needed > self.terms {
            return Err(crate::Error::Budget {
                what: what.to_string(),
                needed,
                budget: self.terms,
                unit: "terms",
            });
        }
        Ok(())
    }
}
