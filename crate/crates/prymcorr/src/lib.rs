//! Batch front end for `prymcorr-core`: exponent tables, verification suites
//! and JSON/CSV exports with a fixed exit-code contract.

pub mod error;
pub mod export;
pub mod output;
pub mod suites;
pub mod table;

pub use error::{RunError, RunResult};

use prymcorr_core::{Family, LieType, RootDatum, Weight};

/// Environment variable overriding the group-order cap.
pub const MAX_GROUP_ORDER_ENV: &str = "PRYMCORR_MAX_GROUP_ORDER";

pub fn parse_type(family: &str, rank: usize) -> RunResult<RootDatum> {
    let family: Family = family.parse().map_err(|e| RunError::Invalid(format!("{e}")))?;
    let t = LieType::new(family, rank).map_err(|e| RunError::Invalid(format!("{e}")))?;
    Ok(RootDatum::new(t))
}

/// Comma-separated coordinates in the fundamental-weight basis, or `wI`
/// for the `I`-th fundamental weight.
pub fn parse_weight(s: &str, datum: &RootDatum) -> RunResult<Weight> {
    let s = s.trim();
    let w = match s.strip_prefix('w') {
        Some(idx) => {
            let i: usize = idx.parse().map_err(|_| RunError::Invalid(format!("bad weight {s:?}")))?;
            Weight::fundamental(i, datum.rank()).map_err(|e| RunError::Invalid(format!("{e}")))?
        }
        None => s.parse::<Weight>().map_err(|e| RunError::Invalid(format!("{e}")))?,
    };
    datum.check_weight(&w).map_err(|e| RunError::Invalid(format!("{e}")))?;
    if !w.is_integral() {
        return Err(RunError::Invalid(format!("weight ({w}) is not integral")));
    }
    if w.is_zero() {
        return Err(RunError::Invalid("weight must be nonzero".into()));
    }
    Ok(w)
}

pub fn check_group_cap(datum: &RootDatum, max_group_order: u64) -> RunResult<()> {
    let order = datum.weyl_order();
    if order > max_group_order as u128 {
        return Err(prymcorr_core::Error::ResourceLimit { what: "Weyl group", size: order, limit: max_group_order as u128 }.into());
    }
    Ok(())
}
