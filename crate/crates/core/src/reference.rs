//! Fixed formulas and basis listings that computed pipelines must match,
//! independent of the (editable) catalog.

use crate::numeric::{LinForm, Param};
use crate::quotients::FixedPointProfile;
use crate::sections::Monomial;

/// Monomials `x0^(first + 3i) ... f_section` for `0 ≤ i < count(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisFamily {
    pub section: usize,
    pub first: u64,
    pub count: LinForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReference {
    pub name: &'static str,
    pub families: Vec<BasisFamily>,
    pub dim: LinForm,
}

impl BasisReference {
    /// Sorted listing at parameter value `k`.
    pub fn listing(&self, k: i64) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .families
            .iter()
            .flat_map(|f| {
                let count = f.count.eval(k).to_i64().unwrap_or(0).max(0) as u64;
                (0..count).map(move |i| Monomial {
                    section: f.section,
                    x0: f.first + 3 * i,
                })
            })
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryReference {
    pub profile: FixedPointProfile,
    pub k2: i64,
    pub chi: i64,
    pub pg: i64,
    pub q: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleReference {
    pub example: u8,
    /// `(field, formula in k)`, fields named like `Y.K2` or `Sigma.A1`.
    pub formulas: Vec<(&'static str, LinForm)>,
    pub x_fixed_points: u64,
    pub sigma_fixed_points: u64,
    pub x_basis: BasisReference,
    pub adjoint_basis: Option<BasisReference>,
    pub auxiliary: Option<AuxiliaryReference>,
}

fn k(a: i64, b: i64) -> LinForm {
    LinForm::new(a, b, Param::k())
}

fn fam(section: usize, first: u64, count: LinForm) -> BasisFamily {
    BasisFamily { section, first, count }
}

pub fn example_reference(example: u8) -> Option<ExampleReference> {
    let r = match example {
        1 => ExampleReference {
            example,
            formulas: vec![
                ("Y.K2", k(24, -12)),
                ("Y.q", k(0, 0)),
                ("Y.pg", k(4, -1)),
                ("T.K2", k(12, -6)),
                ("T.q", k(0, 0)),
                ("T.pg", k(4, -1)),
                ("Sigma.A1", k(48, 0)),
            ],
            x_fixed_points: 8,
            sigma_fixed_points: 4,
            x_basis: BasisReference {
                name: "|X|",
                families: vec![
                    fam(0, 0, k(1, 1)),
                    fam(1, 0, k(1, 1)),
                    fam(2, 2, k(1, 0)),
                    fam(3, 1, k(1, 0)),
                ],
                dim: k(4, 2),
            },
            adjoint_basis: Some(BasisReference {
                name: "H",
                families: vec![
                    fam(0, 2, k(1, -1)),
                    fam(1, 2, k(1, -1)),
                    fam(2, 1, k(1, 0)),
                    fam(3, 0, k(1, 0)),
                ],
                dim: k(4, -2),
            }),
            auxiliary: None,
        },
        2 => ExampleReference {
            example,
            formulas: vec![
                ("Y.chi", k(5, 0)),
                ("Y.K2", k(32, -12)),
                ("Y.q", k(0, 0)),
                ("Y.pg", k(5, -1)),
                ("T.q", k(0, 0)),
                ("T.pg", k(5, -1)),
                ("T.K2", k(16, -6)),
                // 20 involution fixed points times n = 3k; not printed for this example
                ("Sigma.A1", k(60, 0)),
            ],
            x_fixed_points: 8,
            sigma_fixed_points: 4,
            x_basis: BasisReference {
                name: "|X|",
                families: vec![fam(0, 0, k(1, 1)), fam(1, 0, k(1, 1))],
                dim: k(2, 2),
            },
            adjoint_basis: None,
            auxiliary: Some(AuxiliaryReference {
                profile: FixedPointProfile::new(4, 10),
                k2: 0,
                chi: 3,
                pg: 2,
                q: 0,
            }),
        },
        3 => ExampleReference {
            example,
            formulas: vec![
                ("Y.K2", k(48, -18)),
                ("Y.chi", k(7, 0)),
                ("Y.q", k(0, 0)),
                ("Y.pg", k(7, -1)),
                ("Sigma.A1", k(84, 0)),
                ("T.K2", k(24, -9)),
                ("T.q", k(0, 0)),
                ("T.pg", k(7, -1)),
            ],
            x_fixed_points: 12,
            sigma_fixed_points: 6,
            x_basis: BasisReference {
                name: "|X|",
                families: vec![fam(0, 0, k(1, 1)), fam(1, 0, k(1, 1)), fam(2, 1, k(1, 0))],
                dim: k(3, 2),
            },
            adjoint_basis: None,
            auxiliary: None,
        },
        _ => return None,
    };
    Some(r)
}
