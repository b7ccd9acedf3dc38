//! Whole-catalog verification: pair consistency, symbolic pipelines and a
//! numeric sweep, aggregated into per-check counts and a failure list.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, GeneratingPair};
use crate::geography::check_geography;
use crate::kunneth::member_pg;
use crate::numeric::Quantity;
use crate::pipeline::{run_pipeline, symbolic_pipeline, PipelineReport};
use crate::quotients::involution_quotient;
use crate::surface::{check_identities, SingularLocus, SurfaceInvariants};

/// Examples every catalog must provide.
pub const EXAMPLE_IDS: [u8; 3] = [1, 2, 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCount {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub scope: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub k_max: u64,
    pub counts: Vec<CheckCount>,
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|c| c.passed + c.failed).sum()
    }
}

struct Outcome {
    scope: String,
    check: String,
    expected: String,
    actual: String,
    pass: bool,
}

#[derive(Default)]
struct Log(Vec<Outcome>);

impl Log {
    fn record(&mut self, scope: &str, check: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.0.push(Outcome {
            scope: scope.to_string(),
            check: check.into(),
            pass: expected == actual,
            expected,
            actual,
        });
    }

    fn flag(&mut self, scope: &str, check: impl Into<String>, ok: bool) {
        self.record(scope, check, true, ok);
    }

    fn report(&mut self, scope: &str, r: &PipelineReport) {
        for c in &r.checks {
            self.0.push(Outcome {
                scope: scope.to_string(),
                check: strip_sample(&c.name).to_string(),
                expected: c.expected.to_string(),
                actual: c.actual.to_string(),
                pass: c.pass,
            });
        }
    }

    fn error(&mut self, scope: &str, check: &str, err: &crate::error::Error) {
        self.record(scope, check, "ok", err);
    }
}

/// `"X.basis @k=2"` counts under `"X.basis"`.
fn strip_sample(name: &str) -> &str {
    name.split(" @k=").next().unwrap_or(name)
}

pub fn verify(catalog: &Catalog, k_max: u64) -> VerifySummary {
    let mut log = Log::default();

    let n_max = 50.max(3 * k_max as i64);
    for pair in &catalog.pairs {
        verify_pair(&mut log, pair, n_max);
    }

    for &e in &EXAMPLE_IDS {
        let scope = format!("example {e}");
        match symbolic_pipeline(catalog, e) {
            Ok(sym) => {
                log.report(&scope, &sym);
                let mut sweep: Vec<(u64, Log)> = (1..=k_max)
                    .into_par_iter()
                    .map(|k| {
                        let mut local = Log::default();
                        let scope = format!("example {e}, k={k}");
                        match run_pipeline(catalog, e, k) {
                            Ok(num) => {
                                local.report(&scope, &num);
                                agreement(&mut local, &scope, &sym, &num, k);
                            }
                            Err(err) => local.error(&scope, "pipeline", &err),
                        }
                        (k, local)
                    })
                    .collect();
                sweep.sort_by_key(|(k, _)| *k);
                for (_, local) in sweep {
                    log.0.extend(local.0);
                }
            }
            Err(err) => log.error(&scope, "pipeline", &err),
        }
    }

    summarize(log, k_max)
}

fn verify_pair(log: &mut Log, pair: &GeneratingPair, n_max: i64) {
    let scope = format!("pair {}", pair.id);
    let (x, s) = match pair.invariants_symbolic() {
        Ok(v) => v,
        Err(e) => return log.error(&scope, "table", &e),
    };
    log.record(&scope, "X.q = genus - 1", pair.genus - 1, &x.q);
    log.record(&scope, "S.q", 0, &s.q);
    log.record(&scope, "X.K2 = 2 S.K2", &x.k2, s.k2.scale(2));
    for (name, surface) in [("X", &x), ("S", &s)] {
        log.record(&scope, format!("{name}.identities"), 0, check_identities(surface).len());
        let g = check_geography(surface, true, pair.min_n);
        log.flag(&scope, format!("{name}.geography"), g.passed());
    }
    let fixed = Quantity::from(pair.involution_fixed_symbolic());
    match involution_quotient(&x, &fixed, pair.s.q) {
        Ok(q) => {
            log.record(&scope, "involution S.K2", &s.k2, &q.surface.k2);
            log.record(&scope, "involution S.chi", &s.chi, &q.surface.chi);
            log.record(&scope, "involution S.pg", &s.pg, &q.surface.pg);
        }
        Err(e) => log.error(&scope, "involution", &e),
    }
    if let Some(data) = &pair.kunneth {
        let mut first_bad = None;
        for n in pair.min_n..=n_max {
            let expected = x.pg.eval(n).to_i64();
            let got = member_pg(&data.adjoint, &data.canonical, n).ok();
            if expected != got && first_bad.is_none() {
                first_bad = Some((n, expected, got));
            }
        }
        match first_bad {
            None => log.flag(&scope, format!("X.pg via Kunneth, n={}..{n_max}", pair.min_n), true),
            Some((n, e, g)) => log.record(&scope, format!("X.pg via Kunneth, n={}..{n_max}", pair.min_n), format!("{e:?} at n={n}"), format!("{g:?} at n={n}")),
        }
    }
}

fn agreement(log: &mut Log, scope: &str, sym: &PipelineReport, num: &PipelineReport, k: u64) {
    let k = k as i64;
    let surfaces = sym.surfaces().into_iter().zip(num.surfaces());
    for ((name, s), (_, n)) in surfaces {
        for ((field, a), (_, b)) in fields(s).into_iter().zip(fields(n)) {
            log.record(scope, format!("agreement {name}.{field}"), a.at(k), b);
        }
    }
    let loci = [
        ("Sigma", &sym.sigma_locus, &num.sigma_locus),
        ("Y", &sym.y_locus, &num.y_locus),
        ("T", &sym.t_locus, &num.t_locus),
    ];
    for (name, a, b) in loci {
        log.record(scope, format!("agreement {name}.locus"), locus_text(&a.at(k)), locus_text(b));
    }
}

fn fields(s: &SurfaceInvariants) -> Vec<(&'static str, &Quantity)> {
    let mut v = vec![("q", &s.q), ("pg", &s.pg), ("K2", &s.k2), ("chi", &s.chi)];
    if let Some(e) = &s.e {
        v.push(("e", e));
    }
    v
}

fn locus_text(l: &SingularLocus) -> String {
    format!("A1={} A2={} 1/3={}", l.a1, l.a2, l.one_third)
}

fn summarize(log: Log, k_max: u64) -> VerifySummary {
    let mut counts: BTreeMap<String, (u64, u64)> = BTreeMap::new();
    let mut failures = Vec::new();
    for o in log.0 {
        let entry = counts.entry(o.check.clone()).or_default();
        if o.pass {
            entry.0 += 1;
        } else {
            entry.1 += 1;
            failures.push(Failure {
                scope: o.scope,
                check: o.check,
                expected: o.expected,
                actual: o.actual,
            });
        }
    }
    VerifySummary {
        k_max,
        counts: counts
            .into_iter()
            .map(|(name, (passed, failed))| CheckCount { name, passed, failed })
            .collect(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::LinForm;
    use crate::numeric::Param;

    #[test]
    fn standard_catalog_verifies() {
        let s = verify(&Catalog::standard(), 3);
        assert!(s.passed(), "{:#?}", s.failures);
        assert!(s.total() > 100);
    }

    #[test]
    fn wrong_slope_is_caught() {
        let mut c = Catalog::standard();
        c.pairs[0].x.k2 = LinForm::new(25, -32, Param::n());
        let s = verify(&c, 2);
        assert!(!s.passed());
    }

    #[test]
    fn wrong_fixed_count_is_caught() {
        let mut c = Catalog::standard();
        c.pairs[0].iota_fixed_points = 15;
        assert!(!verify(&c, 1).passed());
    }

    #[test]
    fn sample_suffix() {
        assert_eq!(strip_sample("X.basis @k=2"), "X.basis");
        assert_eq!(strip_sample("X.basis"), "X.basis");
    }
}
