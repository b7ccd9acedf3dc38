//! Generating pairs I–III and the three `Z/3` quotient recipes built on them.
//!
//! The catalog is plain data and round-trips through JSON, so an edited copy
//! can be fed to the verifier. The formulas it must reproduce live separately
//! in [`crate::reference`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kunneth::LineBundleShadow;
use crate::numeric::{LinForm, Param, Quantity};
use crate::quotients::FixedPointProfile;
use crate::sections::WeightPattern;
use crate::surface::{make_surface, SurfaceInvariants};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PairId {
    I,
    II,
    III,
}

impl PairId {
    pub const ALL: [PairId; 3] = [PairId::I, PairId::II, PairId::III];
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairId::I => "I",
            PairId::II => "II",
            PairId::III => "III",
        })
    }
}

impl FromStr for PairId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "1" => Ok(PairId::I),
            "II" | "2" => Ok(PairId::II),
            "III" | "3" => Ok(PairId::III),
            other => Err(Error::MissingCatalogEntry(format!("pair {other}"))),
        }
    }
}

/// One row of a pair's invariant table, in the series parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub q: i64,
    pub pg: LinForm,
    pub k2: LinForm,
}

impl TableRow {
    fn surface(&self, label: &str) -> Result<SurfaceInvariants> {
        make_surface(self.q, self.pg.clone(), self.k2.clone(), label)
    }
}

/// Shadows needed to derive `p_g(X)` from Künneth data alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KunnethData {
    /// `K_V ⊗ h*L` on the surface factor.
    pub adjoint: LineBundleShadow,
    /// `K_V` on the surface factor.
    pub canonical: LineBundleShadow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingPair {
    pub id: PairId,
    pub genus: i64,
    pub iota_fixed_points: u64,
    pub min_n: i64,
    pub x: TableRow,
    pub s: TableRow,
    pub kunneth: Option<KunnethData>,
}

impl GeneratingPair {
    /// `(X, S)` as forms in `n`.
    pub fn invariants_symbolic(&self) -> Result<(SurfaceInvariants, SurfaceInvariants)> {
        Ok((
            self.x.surface(&format!("pair {}, X", self.id))?,
            self.s.surface(&format!("pair {}, S", self.id))?,
        ))
    }

    /// `(X, S)` at a concrete `n ≥ min_n`.
    pub fn invariants_at(&self, n: i64) -> Result<(SurfaceInvariants, SurfaceInvariants)> {
        if n < self.min_n {
            return Err(Error::OutOfRange {
                name: "n",
                value: n,
                min: self.min_n,
            });
        }
        let row = |r: &TableRow, which: &str| {
            make_surface(
                r.q,
                Quantity::Exact(r.pg.eval(n)),
                Quantity::Exact(r.k2.eval(n)),
                format!("pair {}, {which}", self.id),
            )
        };
        Ok((row(&self.x, "X")?, row(&self.s, "S")?))
    }

    /// The involution on `X` has `iota_fixed_points · n` isolated fixed points.
    pub fn involution_fixed_symbolic(&self) -> LinForm {
        LinForm::new(self.iota_fixed_points, 0, Param::n())
    }
}

/// The auxiliary quotient `V → V/Z3` used to fix the action on `H⁰(K_V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryQuotient {
    pub label: String,
    pub q: i64,
    pub pg: i64,
    pub k2: i64,
    pub fixed_total: u64,
    /// Points known to have distinct characters.
    pub beta_min: u64,
    pub q_quotient: i64,
}

/// Sections whose weights are unknown; only their number and the action on
/// `P¹` are recorded, and coverage is checked for every weight assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveragePattern {
    pub sections: usize,
    pub u0: u8,
    pub u1: u8,
    pub degree: LinForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleRecipe {
    pub id: u8,
    pub pair: PairId,
    /// `n = substitution · k`.
    pub substitution: i64,
    pub x_profile: FixedPointProfile,
    pub sigma_profile: FixedPointProfile,
    pub q_y: i64,
    pub q_t: i64,
    /// Linearization of `L(n)` whose invariant sections cut out `X`.
    pub x_sections: WeightPattern,
    /// Invariant part of the adjoint system on the `Σ` side, when listed.
    pub adjoint_sections: Option<WeightPattern>,
    /// Invariant dimension of `h¹(K)` on the product.
    pub h1_correction: i64,
    /// The `Σ` node count is derived from the pair, not quoted for this example.
    pub sigma_a1_inferred: bool,
    pub auxiliary: Option<AuxiliaryQuotient>,
    pub coverage: Option<CoveragePattern>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub pairs: Vec<GeneratingPair>,
    pub examples: Vec<ExampleRecipe>,
}

fn n(a: i64, b: i64) -> LinForm {
    LinForm::new(a, b, Param::n())
}

fn k(a: i64, b: i64) -> LinForm {
    LinForm::new(a, b, Param::k())
}

fn pattern(weights: &[u8], u0: u8, u1: u8, degree: LinForm) -> WeightPattern {
    WeightPattern {
        section_weights: weights.to_vec(),
        u0,
        u1,
        degree,
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::standard()
    }
}

impl Catalog {
    pub fn standard() -> Self {
        let pairs = vec![
            GeneratingPair {
                id: PairId::I,
                genus: 3,
                iota_fixed_points: 16,
                min_n: 3,
                x: TableRow { q: 2, pg: n(4, -3), k2: n(24, -32) },
                s: TableRow { q: 0, pg: n(4, -3), k2: n(12, -16) },
                kunneth: Some(KunnethData {
                    adjoint: LineBundleShadow::new("M^2 on Pic1(C)", 4, 0, 0),
                    canonical: LineBundleShadow::new("K of Pic1(C)", 1, 2, 1),
                }),
            },
            GeneratingPair {
                id: PairId::II,
                genus: 3,
                iota_fixed_points: 20,
                min_n: 3,
                x: TableRow { q: 2, pg: n(5, -3), k2: n(32, -32) },
                s: TableRow { q: 0, pg: n(5, -3), k2: n(16, -16) },
                kunneth: None,
            },
            GeneratingPair {
                id: PairId::III,
                genus: 4,
                iota_fixed_points: 28,
                min_n: 3,
                x: TableRow { q: 3, pg: n(7, -4), k2: n(48, -48) },
                s: TableRow { q: 0, pg: n(7, -4), k2: n(24, -24) },
                kunneth: None,
            },
        ];

        let examples = vec![
            ExampleRecipe {
                id: 1,
                pair: PairId::I,
                substitution: 3,
                x_profile: FixedPointProfile::new(4, 4),
                sigma_profile: FixedPointProfile::new(2, 2),
                q_y: 0,
                q_t: 0,
                x_sections: pattern(&[0, 0, 2, 1], 1, 2, k(3, 0)),
                adjoint_sections: Some(pattern(&[0, 0, 2, 1], 1, 2, k(3, -2))),
                h1_correction: 1,
                sigma_a1_inferred: false,
                auxiliary: None,
                coverage: None,
            },
            ExampleRecipe {
                id: 2,
                pair: PairId::II,
                substitution: 3,
                x_profile: FixedPointProfile::new(4, 4),
                sigma_profile: FixedPointProfile::new(2, 2),
                q_y: 0,
                q_t: 0,
                x_sections: pattern(&[0, 0], 1, 2, k(3, 0)),
                adjoint_sections: None,
                h1_correction: 1,
                sigma_a1_inferred: true,
                auxiliary: Some(AuxiliaryQuotient {
                    label: "V".into(),
                    q: 2,
                    pg: 2,
                    k2: 4,
                    fixed_total: 14,
                    beta_min: 10,
                    q_quotient: 0,
                }),
                coverage: Some(CoveragePattern {
                    sections: 5,
                    u0: 1,
                    u1: 2,
                    degree: k(3, 0),
                }),
            },
            ExampleRecipe {
                id: 3,
                pair: PairId::III,
                substitution: 3,
                x_profile: FixedPointProfile::new(6, 6),
                sigma_profile: FixedPointProfile::new(3, 3),
                q_y: 0,
                q_t: 0,
                x_sections: pattern(&[0, 0, 2], 2, 1, k(3, 0)),
                adjoint_sections: None,
                h1_correction: 1,
                sigma_a1_inferred: false,
                auxiliary: None,
                coverage: None,
            },
        ];

        Catalog { pairs, examples }
    }

    pub fn pair(&self, id: PairId) -> Result<&GeneratingPair> {
        self.pairs
            .iter()
            .find(|p| p.id == id)
            .ok_or_else(|| Error::MissingCatalogEntry(format!("pair {id}")))
    }

    pub fn example(&self, id: u8) -> Result<&ExampleRecipe> {
        self.examples
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::MissingCatalogEntry(format!("example {id}")))
    }

    /// Table values of pair `id` at `n`.
    pub fn pair_invariants(&self, id: PairId, n: i64) -> Result<(SurfaceInvariants, SurfaceInvariants)> {
        self.pair(id)?.invariants_at(n)
    }

    pub fn pair_invariants_symbolic(&self, id: PairId) -> Result<(SurfaceInvariants, SurfaceInvariants)> {
        self.pair(id)?.invariants_symbolic()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
