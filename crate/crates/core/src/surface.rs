//! Numerical shadows of surfaces: `q`, `p_g`, `K²`, `χ`, `e` and singularity counts.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numeric::Quantity;

/// Invariants of a smooth surface, or of the minimal resolution of a surface
/// with canonical singularities.
///
/// `chi = 1 - q + p_g` and `e = 12·chi - K²` hold by construction. `e` is
/// `None` only for models explicitly flagged as unresolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub label: String,
    pub q: Quantity,
    pub pg: Quantity,
    pub k2: Quantity,
    pub chi: Quantity,
    pub e: Option<Quantity>,
}

/// Counts of singular points by type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularLocus {
    pub a1: Quantity,
    pub a2: Quantity,
    pub one_third: Quantity,
}

/// Dimensions `h⁰, h¹, h²` of a sheaf.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohTriple {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohTriple {
    pub const fn new(h0: u64, h1: u64, h2: u64) -> Self {
        CohTriple { h0, h1, h2 }
    }
}

impl SingularLocus {
    pub fn empty() -> Self {
        SingularLocus {
            a1: Quantity::zero(),
            a2: Quantity::zero(),
            one_third: Quantity::zero(),
        }
    }

    pub fn is_empty(&self) -> bool {
        [&self.a1, &self.a2, &self.one_third]
            .iter()
            .all(|c| **c == Quantity::zero())
    }

    /// Every count is nonnegative for all parameter values `≥ floor`.
    pub fn is_admissible(&self, floor: i64) -> bool {
        [&self.a1, &self.a2, &self.one_third]
            .iter()
            .all(|c| c.nonneg_from(floor))
    }

    pub fn at(&self, t: i64) -> SingularLocus {
        SingularLocus {
            a1: self.a1.at(t),
            a2: self.a2.at(t),
            one_third: self.one_third.at(t),
        }
    }
}

/// Build a surface from `(q, p_g, K²)`, deriving `χ` and `e`.
pub fn make_surface(
    q: impl Into<Quantity>,
    pg: impl Into<Quantity>,
    k2: impl Into<Quantity>,
    label: impl Into<String>,
) -> Result<SurfaceInvariants> {
    let (q, pg, k2) = (q.into(), pg.into(), k2.into());
    let chi = Quantity::from(1i64).try_sub(&q)?.try_add(&pg)?;
    let e = chi.scale(12).try_sub(&k2)?;
    Ok(SurfaceInvariants {
        label: label.into(),
        q,
        pg,
        k2,
        chi,
        e: Some(e),
    })
}

/// A violated identity reported by [`check_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub expected: Quantity,
    pub actual: Quantity,
}

/// Check `χ = 1 - q + p_g` and, when `e` is recorded, the Noether formula
/// `e = 12χ - K²`. An empty list means every identity holds (symbolically,
/// hence for every parameter value).
pub fn check_identities(s: &SurfaceInvariants) -> Vec<Violation> {
    let mut out = Vec::new();
    match Quantity::from(1i64).try_sub(&s.q).and_then(|v| v.try_add(&s.pg)) {
        Ok(chi) if chi == s.chi => {}
        Ok(chi) => out.push(Violation {
            identity: "chi = 1 - q + pg",
            expected: chi,
            actual: s.chi.clone(),
        }),
        Err(_) => out.push(Violation {
            identity: "chi = 1 - q + pg (mixed parameters)",
            expected: s.chi.clone(),
            actual: s.pg.clone(),
        }),
    }
    if let Some(e) = &s.e {
        match s.chi.scale(12).try_sub(&s.k2) {
            Ok(noether) if noether == *e => {}
            Ok(noether) => out.push(Violation {
                identity: "e = 12 chi - K2",
                expected: noether,
                actual: e.clone(),
            }),
            Err(_) => out.push(Violation {
                identity: "e = 12 chi - K2 (mixed parameters)",
                expected: e.clone(),
                actual: s.k2.clone(),
            }),
        }
    }
    out
}

impl SurfaceInvariants {
    /// The same surface viewed as an unresolved singular model: `e` is dropped.
    pub fn unresolved(mut self) -> Self {
        self.e = None;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Evaluate every symbolic field at parameter value `t`.
    pub fn at(&self, t: i64) -> SurfaceInvariants {
        SurfaceInvariants {
            label: self.label.clone(),
            q: self.q.at(t),
            pg: self.pg.at(t),
            k2: self.k2.at(t),
            chi: self.chi.at(t),
            e: self.e.as_ref().map(|e| e.at(t)),
        }
    }

    /// Fields as `(name, value)` pairs in serialization order.
    pub fn fields(&self) -> Vec<(&'static str, Option<&Quantity>)> {
        vec![
            ("q", Some(&self.q)),
            ("pg", Some(&self.pg)),
            ("k2", Some(&self.k2)),
            ("chi", Some(&self.chi)),
            ("e", self.e.as_ref()),
        ]
    }
}
