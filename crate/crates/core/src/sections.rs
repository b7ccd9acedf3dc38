//! `Z/3`-invariant monomial bases `x0^a x1^(d-a) f_i` on a product with `P¹`.
//!
//! Weights are pullback exponents: `ξ*f_i = ω^{w_i} f_i`, `ξ*x_j = ω^{u_j} x_j`.
//! A monomial is invariant iff `w_i + a·u0 + (d-a)·u1 ≡ 0 (mod 3)`. For each
//! section this is a single residue condition on `a` (or no condition at all
//! when `u0 ≡ u1`), so bases and their sizes are computed class by class
//! rather than by testing every exponent.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{LinForm, Quantity, Rational};

/// Linearization data on `L ⊠ O(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightConfig {
    pub section_weights: Vec<u8>,
    pub u0: u8,
    pub u1: u8,
    pub degree: u64,
}

/// `x0^x0 x1^(degree - x0) f_section`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub section: usize,
    pub x0: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialBasis {
    pub degree: u64,
    /// Sorted by `(section, x0)`, no duplicates.
    pub elements: Vec<Monomial>,
}

/// Exponents `a ∈ [0, d]` satisfying the residue condition for one section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Exponents {
    All,
    None,
    Class(u64),
}

fn residue(v: i64) -> u64 {
    v.rem_euclid(3) as u64
}

/// Residue condition on `a` for a monomial with section weight `w` to carry
/// total weight `target`, given `d mod 3`.
fn exponent_class(w: u8, u0: u8, u1: u8, degree_mod3: u64, target: u64) -> Exponents {
    let base = residue(w as i64 + degree_mod3 as i64 * u1 as i64);
    let step = residue(u0 as i64 - u1 as i64);
    if step == 0 {
        return if base == target { Exponents::All } else { Exponents::None };
    }
    // step is its own inverse mod 3
    Exponents::Class(residue((target as i64 - base as i64) * step as i64))
}

fn count_in_range(class: Exponents, degree: u64) -> u64 {
    match class {
        Exponents::All => degree + 1,
        Exponents::None => 0,
        Exponents::Class(r) if r > degree => 0,
        Exponents::Class(r) => (degree - r) / 3 + 1,
    }
}

impl WeightConfig {
    pub fn new(section_weights: Vec<u8>, u0: u8, u1: u8, degree: u64) -> Result<Self> {
        if section_weights.is_empty() {
            return Err(Error::InvalidWeightConfig("no sections".into()));
        }
        if let Some(w) = section_weights.iter().chain([&u0, &u1]).find(|w| **w > 2) {
            return Err(Error::InvalidWeightConfig(format!("{w} is not a residue mod 3")));
        }
        Ok(WeightConfig { section_weights, u0, u1, degree })
    }

    /// The same action seen through the inverse generator.
    pub fn inverse(&self) -> WeightConfig {
        let dbl = |w: u8| (2 * w) % 3;
        WeightConfig {
            section_weights: self.section_weights.iter().map(|w| dbl(*w)).collect(),
            u0: dbl(self.u0),
            u1: dbl(self.u1),
            degree: self.degree,
        }
    }

    fn classes(&self, target: u64) -> impl Iterator<Item = Exponents> + '_ {
        let dm = self.degree % 3;
        self.section_weights
            .iter()
            .map(move |w| exponent_class(*w, self.u0, self.u1, dm, target))
    }

    /// Total pullback weight of a monomial, mod 3.
    pub fn weight_of(&self, m: Monomial) -> u64 {
        let w = self.section_weights[m.section] as u64;
        (w + m.x0 * self.u0 as u64 + (self.degree - m.x0) * self.u1 as u64) % 3
    }
}

pub fn invariant_monomial_basis(cfg: &WeightConfig) -> MonomialBasis {
    let mut elements = Vec::new();
    for (section, class) in cfg.classes(0).enumerate() {
        let exps: Box<dyn Iterator<Item = u64>> = match class {
            Exponents::All => Box::new(0..=cfg.degree),
            Exponents::None => Box::new(std::iter::empty()),
            Exponents::Class(r) => Box::new((r..=cfg.degree).step_by(3)),
        };
        elements.extend(exps.map(|x0| Monomial { section, x0 }));
    }
    MonomialBasis { degree: cfg.degree, elements }
}

/// Closed-form count of invariant monomials.
pub fn invariant_dimension(cfg: &WeightConfig) -> u64 {
    cfg.classes(0).map(|c| count_in_range(c, cfg.degree)).sum()
}

/// Dimensions `(d0, d1, d2)` of the isotypic pieces of `H⁰(L ⊠ O(d))`.
///
/// `d_j` is the multiplicity of the character `ω^j` for the natural action
/// `ξ·s = (ξ⁻¹)*s` on sections, i.e. the number of monomials whose pullback
/// weight is `-j mod 3`. `d0` is the invariant dimension either way.
pub fn eigenspace_dimensions(cfg: &WeightConfig) -> [u64; 3] {
    [0u64, 1, 2].map(|j| {
        let target = (3 - j) % 3;
        cfg.classes(target).map(|c| count_in_range(c, cfg.degree)).sum()
    })
}

/// Every section index occurs in some invariant monomial.
pub fn coverage_check(cfg: &WeightConfig) -> bool {
    cfg.classes(0).all(|c| count_in_range(c, cfg.degree) > 0)
}

/// A weight configuration whose degree is a form `3m·k + c` in the example
/// parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightPattern {
    pub section_weights: Vec<u8>,
    pub u0: u8,
    pub u1: u8,
    pub degree: LinForm,
}

/// Dimension as a form in the pattern's parameter, valid for parameter
/// values `≥ valid_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicDimension {
    pub dim: Quantity,
    pub valid_from: i64,
}

impl WeightPattern {
    pub fn at(&self, k: i64) -> Result<WeightConfig> {
        let d = self.degree.eval(k);
        let degree = d
            .to_i64()
            .filter(|d| *d >= 0)
            .ok_or_else(|| Error::InvalidWeightConfig(format!("degree {d} at {}={k}", self.degree.param)))?;
        WeightConfig::new(self.section_weights.clone(), self.u0, self.u1, degree as u64)
    }

    /// Invariant dimension as a linear form.
    ///
    /// Only degrees `3m·k + c` with integers `m ≥ 0` and `c` are supported;
    /// anything else has a dimension that is not linear in `k`.
    pub fn symbolic_dimension(&self) -> Result<SymbolicDimension> {
        let unsupported = || Error::InvalidWeightConfig(format!("degree {} is not of the form 3mk+c", self.degree));
        let slope = self.degree.slope.to_i64().ok_or_else(unsupported)?;
        let c = self.degree.offset.to_i64().ok_or_else(unsupported)?;
        if slope < 0 || slope % 3 != 0 {
            return Err(unsupported());
        }
        let m = slope / 3;
        let param = self.degree.param.clone();
        // every formula below needs d = 3mk + c >= 0 (or m = 0 and c >= 0)
        let mut valid_from = if m == 0 { 0 } else { ceil_div(-c, 3 * m).max(0) };
        if m == 0 && c < 0 {
            return Err(unsupported());
        }

        let dm = residue(c);
        let mut slope_sum = 0i64;
        let mut offset_sum = 0i64;
        for w in &self.section_weights {
            match exponent_class(*w, self.u0, self.u1, dm, 0) {
                Exponents::All => {
                    slope_sum += 3 * m;
                    offset_sum += c + 1;
                }
                Exponents::None => {}
                Exponents::Class(r) => {
                    // #{a ≡ r, 0 ≤ a ≤ 3mk + c} = mk + floor((c - r)/3) + 1
                    // once 3mk + c - r ≥ -3
                    let r = r as i64;
                    slope_sum += m;
                    offset_sum += (c - r).div_euclid(3) + 1;
                    if m > 0 {
                        valid_from = valid_from.max(ceil_div(r - c - 3, 3 * m));
                    }
                }
            }
        }
        let dim = Quantity::from(LinForm::new(
            Rational::from(slope_sum),
            Rational::from(offset_sum),
            param,
        ));
        Ok(SymbolicDimension { dim, valid_from })
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

impl fmt::Display for MonomialBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.elements {
            writeln!(f, "{}", m.render(self.degree))?;
        }
        write!(f, "dim = {}", self.elements.len())
    }
}

impl Monomial {
    /// `x0^a x1^b f_i`.
    pub fn render(&self, degree: u64) -> String {
        format!("x0^{} x1^{} f_{}", self.x0, degree - self.x0, self.section)
    }
}
