//! End-to-end computation `X → Σ → Y → T` for one example, with every
//! cross-check recorded in the report.
//!
//! The numeric path evaluates the pair tables at `n = 3k` and quotients
//! integers; the symbolic path reparameterizes the tables to `k` and
//! quotients linear forms. Both go through the same quotient functions.

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, ExampleRecipe, GeneratingPair};
use crate::error::{Error, Result};
use crate::geography::{check_canonical_cover_pair, check_geography, GeographyReport};
use crate::kunneth::{equivariant_member_pg, member_pg};
use crate::numeric::{LinForm, Param, Quantity};
use crate::quotients::{
    cyclic3_quotient, involution_quotient, solve_fixed_point_profile, FixedPointProfile,
    ProfileConstraints,
};
use crate::reference::{example_reference, BasisReference, ExampleReference};
use crate::sections::{
    coverage_check, invariant_dimension, invariant_monomial_basis, Monomial, WeightConfig,
    WeightPattern,
};
use crate::surface::{check_identities, make_surface, SingularLocus, SurfaceInvariants};

/// Values at which bases and Künneth counts are spot-checked in symbolic mode.
const SYMBOLIC_SAMPLES: [u64; 3] = [1, 2, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    At(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckValue {
    Quantity(Quantity),
    Flag(bool),
    Text(String),
}

impl std::fmt::Display for CheckValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckValue::Quantity(q) => write!(f, "{q}"),
            CheckValue::Flag(b) => write!(f, "{b}"),
            CheckValue::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: CheckValue,
    pub actual: CheckValue,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceGeography {
    pub surface: String,
    pub report: GeographyReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub example: u8,
    /// `None` for a symbolic report.
    pub k: Option<u64>,
    pub x: SurfaceInvariants,
    pub s: SurfaceInvariants,
    pub y: SurfaceInvariants,
    pub t: SurfaceInvariants,
    pub sigma_locus: SingularLocus,
    pub y_locus: SingularLocus,
    pub t_locus: SingularLocus,
    pub geography: Vec<SurfaceGeography>,
    pub checks: Vec<Check>,
}

impl PipelineReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn checks_passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The four surfaces in pipeline order.
    pub fn surfaces(&self) -> [(&'static str, &SurfaceInvariants); 4] {
        [("X", &self.x), ("S", &self.s), ("Y", &self.y), ("T", &self.t)]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, expected: CheckValue, actual: CheckValue) {
        let pass = expected == actual;
        self.0.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
    }

    fn quantity(&mut self, name: impl Into<String>, expected: Quantity, actual: Quantity) {
        self.push(name, CheckValue::Quantity(expected), CheckValue::Quantity(actual));
    }

    fn flag(&mut self, name: impl Into<String>, actual: bool) {
        self.push(name, CheckValue::Flag(true), CheckValue::Flag(actual));
    }

    fn text(&mut self, name: impl Into<String>, expected: String, actual: String) {
        self.push(name, CheckValue::Text(expected), CheckValue::Text(actual));
    }

    /// A sub-computation failed outright.
    fn error(&mut self, name: impl Into<String>, err: &Error) {
        self.push(name, CheckValue::Text("ok".into()), CheckValue::Text(err.to_string()));
    }
}

fn substitute(q: &Quantity, factor: i64) -> Quantity {
    match q {
        Quantity::Linear(f) if !f.is_constant() => Quantity::Linear(f.reparameterize(factor, Param::k())),
        other => other.clone(),
    }
}

fn substitute_surface(s: &SurfaceInvariants, factor: i64) -> SurfaceInvariants {
    SurfaceInvariants {
        label: s.label.clone(),
        q: substitute(&s.q, factor),
        pg: substitute(&s.pg, factor),
        k2: substitute(&s.k2, factor),
        chi: substitute(&s.chi, factor),
        e: s.e.as_ref().map(|e| substitute(e, factor)),
    }
}

fn render_profiles(ps: &[FixedPointProfile]) -> String {
    let inner: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn render_monomials(ms: &[Monomial], degree: u64) -> String {
    ms.iter().map(|m| m.render(degree)).collect::<Vec<_>>().join(", ")
}

/// Table values of the pair in the example parameter.
fn pair_rows(
    pair: &GeneratingPair,
    recipe: &ExampleRecipe,
    mode: Mode,
) -> Result<(SurfaceInvariants, SurfaceInvariants, Quantity)> {
    match mode {
        Mode::Symbolic => {
            let (x, s) = pair.invariants_symbolic()?;
            let fixed = pair
                .involution_fixed_symbolic()
                .reparameterize(recipe.substitution, Param::k());
            Ok((
                substitute_surface(&x, recipe.substitution),
                substitute_surface(&s, recipe.substitution),
                fixed.into(),
            ))
        }
        Mode::At(k) => {
            let n = recipe.substitution * k as i64;
            let (x, s) = pair.invariants_at(n)?;
            Ok((x, s, Quantity::from(pair.iota_fixed_points * n as u64)))
        }
    }
}

pub fn run_pipeline(catalog: &Catalog, example: u8, k: u64) -> Result<PipelineReport> {
    if k < 1 {
        return Err(Error::OutOfRange { name: "k", value: k as i64, min: 1 });
    }
    build(catalog, example, Mode::At(k)).map_err(|e| Error::Pipeline {
        example,
        k: Some(k),
        source: Box::new(e),
    })
}

pub fn symbolic_pipeline(catalog: &Catalog, example: u8) -> Result<PipelineReport> {
    build(catalog, example, Mode::Symbolic).map_err(|e| Error::Pipeline {
        example,
        k: None,
        source: Box::new(e),
    })
}

fn build(catalog: &Catalog, example: u8, mode: Mode) -> Result<PipelineReport> {
    let recipe = catalog.example(example)?;
    let pair = catalog.pair(recipe.pair)?;
    let reference = example_reference(example)
        .ok_or_else(|| Error::MissingCatalogEntry(format!("reference for example {example}")))?;

    let (x, s_table, fixed) = pair_rows(pair, recipe, mode)?;
    let x = x.with_label("X");

    let yq = cyclic3_quotient(&x, recipe.x_profile, recipe.q_y)?;
    let sq = involution_quotient(&x, &fixed, pair.s.q)?;
    // Σ carries the invariants of its resolution S
    let sigma = sq.surface.clone().with_label("S");
    let tq = cyclic3_quotient(&sigma, recipe.sigma_profile, recipe.q_t)?;

    // nodes of Σ fall into free Z3-orbits
    let (inherited, ok) = sq.locus.a1.divide_exact(3);
    if !ok {
        return Err(Error::InconsistentFixedCount {
            fixed: sq.locus.a1.to_string(),
            formula: "A1(Sigma)/3",
            value: inherited.to_string(),
        });
    }
    let t_locus = SingularLocus { a1: inherited, ..tq.locus.clone() };

    let y = yq.surface.with_label("Y");
    let t = tq.surface.with_label("T");

    let mut checks = Checks::default();
    let at = |f: &LinForm| -> Quantity {
        match mode {
            Mode::Symbolic => f.clone().into(),
            Mode::At(k) => Quantity::Exact(f.eval(k)),
        }
    };

    // published formulas
    for (name, formula) in &reference.formulas {
        match field(name, &y, &t, &sq.locus) {
            Some(actual) => checks.quantity(*name, at(formula), actual),
            None => checks.text(*name, "known field".into(), "unknown field".into()),
        }
    }

    // double cover reproduces the pair table
    checks.quantity("S.K2 = table", s_table.k2.clone(), sigma.k2.clone());
    checks.quantity("S.pg = table", s_table.pg.clone(), sigma.pg.clone());
    checks.quantity("S.chi = table", s_table.chi.clone(), sigma.chi.clone());
    checks.quantity("X.q = genus - 1", Quantity::from(pair.genus - 1), x.q.clone());
    checks.flag("pg(Y) = pg(T)", check_canonical_cover_pair(&y, &t));

    for (name, s) in [("X", &x), ("S", &sigma), ("Y", &y), ("T", &t)] {
        let violations = check_identities(s);
        checks.quantity(format!("{name}.identities"), Quantity::zero(), Quantity::from(violations.len() as u64));
    }

    round_trip_checks(&mut checks, "X", &x, &y, recipe.x_profile);
    round_trip_checks(&mut checks, "Sigma", &sigma, &t, recipe.sigma_profile);

    checks.quantity(
        "X.fixed_points",
        Quantity::from(reference.x_fixed_points),
        Quantity::from(recipe.x_profile.total()),
    );
    checks.quantity(
        "Sigma.fixed_points",
        Quantity::from(reference.sigma_fixed_points),
        Quantity::from(recipe.sigma_profile.total()),
    );

    for (name, locus) in [("Sigma", &sq.locus), ("Y", &yq.locus), ("T", &t_locus)] {
        checks.flag(format!("{name}.locus >= 0"), locus.is_admissible(1));
    }

    match mode {
        Mode::At(_) => {
            // the divisibility conditions alone must force the catalog profiles
            for (name, surface, profile) in [("X", &x, recipe.x_profile), ("Sigma", &sigma, recipe.sigma_profile)] {
                let forced = match (surface.k2.to_i64(), surface.chi.to_i64()) {
                    (Some(k2), Some(chi)) => solve_fixed_point_profile(k2, chi, profile.total(), ProfileConstraints::default()),
                    _ => Vec::new(),
                };
                checks.text(
                    format!("{name}.profile forced"),
                    render_profiles(&[profile]),
                    render_profiles(&forced),
                );
            }
        }
        Mode::Symbolic => {
            for (name, s) in [("X", &x), ("S", &sigma), ("Y", &y), ("T", &t)] {
                checks.flag(format!("{name}.K2 increasing"), s.k2.slope().is_positive());
            }
        }
    }

    let mut geography = Vec::new();
    for (name, s) in [("X", &x), ("S", &sigma), ("Y", &y), ("T", &t)] {
        let report = check_geography(s, true, 1);
        checks.flag(format!("{name}.geography"), report.passed());
        geography.push(SurfaceGeography { surface: name.to_string(), report });
    }

    section_checks(&mut checks, recipe, &reference, mode, &t);

    if let Some(data) = &pair.kunneth {
        let samples: Vec<u64> = match mode {
            Mode::At(k) => vec![k],
            Mode::Symbolic => SYMBOLIC_SAMPLES.to_vec(),
        };
        for k in samples {
            let n = recipe.substitution * k as i64;
            let name = sample_name("X.pg via Kunneth", mode, k);
            match member_pg(&data.adjoint, &data.canonical, n) {
                Ok(pg) => checks.quantity(name, Quantity::Exact(x.pg.eval(k)), Quantity::from(pg)),
                Err(e) => checks.error(name, &e),
            }
        }
    }

    if let (Some(aux), Some(expected)) = (&recipe.auxiliary, &reference.auxiliary) {
        let v = make_surface(aux.q, aux.pg, aux.k2, aux.label.clone())?;
        let chi_v = v.chi.to_i64().unwrap_or_default();
        let by_beta = solve_fixed_point_profile(
            aux.k2,
            chi_v,
            aux.fixed_total,
            ProfileConstraints { beta_min: aux.beta_min, require_k2_nonneg: false },
        );
        let by_k2 = solve_fixed_point_profile(
            aux.k2,
            chi_v,
            aux.fixed_total,
            ProfileConstraints { beta_min: 0, require_k2_nonneg: true },
        );
        let want = render_profiles(&[expected.profile]);
        checks.text("V.profile (beta bound)", want.clone(), render_profiles(&by_beta));
        checks.text("V.profile (K2 >= 0)", want, render_profiles(&by_k2));
        match cyclic3_quotient(&v, expected.profile, aux.q_quotient) {
            Ok(z) => {
                let z = z.surface;
                checks.quantity("Z.K2", Quantity::from(expected.k2), z.k2);
                checks.quantity("Z.chi", Quantity::from(expected.chi), z.chi);
                checks.quantity("Z.pg", Quantity::from(expected.pg), z.pg);
                checks.quantity("Z.q", Quantity::from(expected.q), z.q);
            }
            Err(e) => checks.error("Z", &e),
        }
    } else if recipe.auxiliary.is_some() != reference.auxiliary.is_some() {
        checks.text("V.present", "matching".into(), "catalog and reference disagree".into());
    }

    if let Some(cov) = &recipe.coverage {
        let k = match mode {
            Mode::At(k) => k,
            Mode::Symbolic => SYMBOLIC_SAMPLES[0],
        };
        let degree = cov.degree.eval(k).to_i64().unwrap_or(-1);
        let all_covered = degree >= 0
            && all_weight_assignments(cov.sections).all(|w| {
                WeightConfig::new(w, cov.u0, cov.u1, degree as u64)
                    .map(|c| coverage_check(&c))
                    .unwrap_or(false)
            });
        checks.flag(sample_name("H.coverage (all weights)", mode, k), all_covered);
    }

    Ok(PipelineReport {
        example,
        k: match mode {
            Mode::At(k) => Some(k),
            Mode::Symbolic => None,
        },
        x,
        s: sigma,
        y,
        t,
        sigma_locus: sq.locus,
        y_locus: yq.locus,
        t_locus,
        geography,
        checks: checks.0,
    })
}

fn sample_name(base: &str, mode: Mode, k: u64) -> String {
    match mode {
        Mode::At(_) => base.to_string(),
        Mode::Symbolic => format!("{base} @k={k}"),
    }
}

fn field(name: &str, y: &SurfaceInvariants, t: &SurfaceInvariants, sigma: &SingularLocus) -> Option<Quantity> {
    let (surface, attr) = name.split_once('.')?;
    if surface == "Sigma" {
        return (attr == "A1").then(|| sigma.a1.clone());
    }
    let s = match surface {
        "Y" => y,
        "T" => t,
        _ => return None,
    };
    Some(match attr {
        "K2" => s.k2.clone(),
        "chi" => s.chi.clone(),
        "pg" => s.pg.clone(),
        "q" => s.q.clone(),
        _ => return None,
    })
}

/// `K²_up = 3K²_down + α` and `χ_up = 3χ_down - α/3 - 2β/3`.
fn round_trip_checks(
    checks: &mut Checks,
    name: &str,
    up: &SurfaceInvariants,
    down: &SurfaceInvariants,
    p: FixedPointProfile,
) {
    let alpha = Quantity::from(p.alpha);
    let beta = Quantity::from(p.beta);
    let k2 = down.k2.scale(3).try_add(&alpha);
    let chi = down
        .chi
        .scale(3)
        .try_sub(&alpha.scale(crate::numeric::Rational::new(1, 3).unwrap()))
        .and_then(|c| c.try_sub(&beta.scale(crate::numeric::Rational::new(2, 3).unwrap())));
    match (k2, chi) {
        (Ok(k2), Ok(chi)) => {
            checks.quantity(format!("{name}.K2 = 3 K2' + alpha"), up.k2.clone(), k2);
            checks.quantity(format!("{name}.chi = 3 chi' - alpha/3 - 2beta/3"), up.chi.clone(), chi);
        }
        (Err(e), _) | (_, Err(e)) => checks.error(format!("{name}.round trip"), &e),
    }
}

fn basis_checks(
    checks: &mut Checks,
    label: &str,
    pattern: &WeightPattern,
    reference: &BasisReference,
    mode: Mode,
) {
    let samples: Vec<u64> = match mode {
        Mode::At(k) => vec![k],
        Mode::Symbolic => SYMBOLIC_SAMPLES.to_vec(),
    };
    for k in samples {
        let name = sample_name(&format!("{label}.basis"), mode, k);
        match pattern.at(k as i64) {
            Ok(cfg) => {
                let basis = invariant_monomial_basis(&cfg);
                let expected = reference.listing(k as i64);
                checks.text(
                    name,
                    render_monomials(&expected, cfg.degree),
                    render_monomials(&basis.elements, cfg.degree),
                );
                if let Mode::At(_) = mode {
                    checks.quantity(
                        format!("{label}.dim"),
                        Quantity::Exact(reference.dim.eval(k)),
                        Quantity::from(invariant_dimension(&cfg)),
                    );
                }
            }
            Err(e) => checks.error(name, &e),
        }
    }
    if mode == Mode::Symbolic {
        match pattern.symbolic_dimension() {
            Ok(sym) => {
                checks.quantity(format!("{label}.dim"), reference.dim.clone().into(), sym.dim);
                checks.flag(format!("{label}.dim valid for k >= 1"), sym.valid_from <= 1);
            }
            Err(e) => checks.error(format!("{label}.dim"), &e),
        }
    }
}

fn section_checks(
    checks: &mut Checks,
    recipe: &ExampleRecipe,
    reference: &ExampleReference,
    mode: Mode,
    t: &SurfaceInvariants,
) {
    basis_checks(checks, "X", &recipe.x_sections, &reference.x_basis, mode);

    match (&recipe.adjoint_sections, &reference.adjoint_basis) {
        (Some(pattern), Some(basis)) => {
            basis_checks(checks, "H", pattern, basis, mode);
            match mode {
                Mode::At(k) => match pattern.at(k as i64) {
                    Ok(cfg) => checks.quantity(
                        "T.pg via H",
                        t.pg.clone(),
                        Quantity::from(equivariant_member_pg(&cfg, recipe.h1_correction)),
                    ),
                    Err(e) => checks.error("T.pg via H", &e),
                },
                Mode::Symbolic => match pattern.symbolic_dimension() {
                    Ok(sym) => {
                        let pg = sym.dim.try_add(&Quantity::from(recipe.h1_correction));
                        match pg {
                            Ok(pg) => checks.quantity("T.pg via H", t.pg.clone(), pg),
                            Err(e) => checks.error("T.pg via H", &e),
                        }
                    }
                    Err(e) => checks.error("T.pg via H", &e),
                },
            }
        }
        (None, None) => {}
        _ => checks.text("H.present", "matching".into(), "catalog and reference disagree".into()),
    }
}

/// Every vector in `{0,1,2}^len`.
pub fn all_weight_assignments(len: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = 3usize.pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let w = (code % 3) as u8;
                code /= 3;
                w
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::LinForm;

    fn k(a: i64, b: i64) -> Quantity {
        LinForm::new(a, b, Param::k()).into()
    }

    fn q(v: i64) -> Quantity {
        Quantity::from(v)
    }

    #[test]
    fn example_one_at_k1() {
        let r = run_pipeline(&Catalog::standard(), 1, 1).unwrap();
        assert_eq!((r.y.k2.clone(), r.y.chi.clone(), r.y.pg.clone()), (q(12), q(4), q(3)));
        assert_eq!((r.t.k2.clone(), r.t.chi.clone(), r.t.pg.clone()), (q(6), q(4), q(3)));
        assert_eq!(r.sigma_locus.a1, q(48));
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn example_two_at_k2() {
        let r = run_pipeline(&Catalog::standard(), 2, 2).unwrap();
        assert_eq!((r.y.k2.clone(), r.y.chi.clone(), r.y.pg.clone()), (q(52), q(10), q(9)));
        assert_eq!((r.t.k2.clone(), r.t.chi.clone(), r.t.pg.clone()), (q(26), q(10), q(9)));
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn example_three_at_k1() {
        let r = run_pipeline(&Catalog::standard(), 3, 1).unwrap();
        assert_eq!((r.y.k2.clone(), r.y.chi.clone(), r.y.pg.clone()), (q(30), q(7), q(6)));
        assert_eq!((r.t.k2.clone(), r.t.chi.clone(), r.t.pg.clone()), (q(15), q(7), q(6)));
        assert_eq!(r.sigma_locus.a1, q(84));
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn symbolic_reports() {
        let c = Catalog::standard();
        let r1 = symbolic_pipeline(&c, 1).unwrap();
        assert_eq!(r1.y.k2, k(24, -12));
        assert_eq!(r1.t_locus.a1, k(16, 0));
        assert!(r1.passed(), "{:#?}", r1.failures().collect::<Vec<_>>());
        let r2 = symbolic_pipeline(&c, 2).unwrap();
        assert_eq!(r2.y.chi, k(5, 0));
        assert!(r2.passed(), "{:#?}", r2.failures().collect::<Vec<_>>());
        let r3 = symbolic_pipeline(&c, 3).unwrap();
        assert_eq!(r3.t.k2, k(24, -9));
        assert!(r3.passed(), "{:#?}", r3.failures().collect::<Vec<_>>());
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(matches!(
            run_pipeline(&Catalog::standard(), 1, 0),
            Err(Error::OutOfRange { name: "k", .. })
        ));
    }

    #[test]
    fn bad_profile_carries_context() {
        let mut c = Catalog::standard();
        c.examples[0].x_profile = FixedPointProfile::new(5, 3);
        let err = run_pipeline(&c, 1, 2).unwrap_err();
        assert!(err.to_string().starts_with("example 1 at k=2:"), "{err}");
    }

    #[test]
    fn report_json_round_trip() {
        let r = run_pipeline(&Catalog::standard(), 2, 3).unwrap();
        let s = r.to_json();
        let back: PipelineReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn weight_assignments() {
        let all: Vec<_> = all_weight_assignments(2).collect();
        assert_eq!(all.len(), 9);
        assert!(all.contains(&vec![2, 1]));
    }
}
