//! Standard numerical constraints on minimal surfaces of general type.
//!
//! These are sanity gates on computed data, not minimality proofs.

use serde::{Deserialize, Serialize};

use crate::numeric::Quantity;
use crate::surface::SurfaceInvariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeographyCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeographyReport {
    pub checks: Vec<GeographyCheck>,
}

impl GeographyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}

pub const CHECK_NAMES: [&str; 4] = ["chi >= 1", "K2 >= 1", "noether", "bmy"];

/// Evaluate `χ ≥ 1`, `K² ≥ 1`, `K² ≥ 2p_g - 4` and `K² ≤ 9χ`.
///
/// Symbolic inputs are checked for every parameter value `≥ floor`.
pub fn check_geography(s: &SurfaceInvariants, minimal_general_type: bool, floor: i64) -> GeographyReport {
    let one = Quantity::from(1i64);
    // each entry: (name, lhs, rhs) meaning lhs >= rhs
    let inequalities: [(&str, Quantity, Quantity); 4] = [
        (CHECK_NAMES[0], s.chi.clone(), one.clone()),
        (CHECK_NAMES[1], s.k2.clone(), one),
        (
            CHECK_NAMES[2],
            s.k2.clone(),
            s.pg.scale(2).try_sub(&Quantity::from(4i64)).expect("same parameter"),
        ),
        (CHECK_NAMES[3], s.chi.scale(9), s.k2.clone()),
    ];

    let checks = inequalities
        .into_iter()
        .map(|(name, lhs, rhs)| {
            let detail = format!("{lhs} >= {rhs}");
            let status = if !minimal_general_type {
                CheckStatus::Skipped
            } else {
                match lhs.ge_from(&rhs, floor) {
                    Ok(true) => CheckStatus::Pass,
                    Ok(false) => CheckStatus::Fail,
                    // mixed parameters are a data error
                    Err(_) => CheckStatus::Fail,
                }
            };
            GeographyCheck {
                name: name.to_string(),
                status,
                detail,
            }
        })
        .collect();
    GeographyReport { checks }
}

/// `p_g(Y) = p_g(T)`, compared symbolically when both are forms.
pub fn check_canonical_cover_pair(y: &SurfaceInvariants, t: &SurfaceInvariants) -> bool {
    y.pg == t.pg
}
