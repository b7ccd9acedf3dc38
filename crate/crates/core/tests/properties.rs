use proptest::prelude::*;

use surfinv_core::numeric::{LinForm, Param, Quantity, Rational};
use surfinv_core::quotients::{cyclic3_quotient, solve_fixed_point_profile, FixedPointProfile, ProfileConstraints};
use surfinv_core::sections::{eigenspace_dimensions, invariant_dimension, invariant_monomial_basis, Monomial, WeightConfig};
use surfinv_core::surface::make_surface;

/// Every `(α, β)` with `α + β = total` making both quotient formulas integral,
/// checked with plain integer arithmetic.
fn profile_oracle(k2: i64, chi: i64, total: u64, c: ProfileConstraints) -> Vec<FixedPointProfile> {
    let mut out = Vec::new();
    for alpha in 0..=total {
        let beta = total - alpha;
        let (a, b) = (alpha as i64, beta as i64);
        if beta < c.beta_min {
            continue;
        }
        if (k2 - a).rem_euclid(3) != 0 || (3 * chi + a + 2 * b).rem_euclid(9) != 0 {
            continue;
        }
        if c.require_k2_nonneg && k2 - a < 0 {
            continue;
        }
        out.push(FixedPointProfile::new(alpha, beta));
    }
    out
}

/// Every monomial `x0^a x1^(d-a) f_i` whose weight is `target` mod 3.
fn basis_oracle(w: &[u8], u0: u8, u1: u8, d: u64, target: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for (i, wi) in w.iter().enumerate() {
        for a in 0..=d {
            if (*wi as u64 + a * u0 as u64 + (d - a) * u1 as u64) % 3 == target {
                out.push(Monomial { section: i, x0: a });
            }
        }
    }
    out
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..50).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn form() -> impl Strategy<Value = LinForm> {
    (rational(), rational()).prop_map(|(a, b)| LinForm::new(a, b, Param::k()))
}

fn config() -> impl Strategy<Value = WeightConfig> {
    (prop::collection::vec(0u8..3, 1..=8), 0u8..3, 0u8..3, 0u64..=60)
        .prop_map(|(w, u0, u1, d)| WeightConfig::new(w, u0, u1, d).unwrap())
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        let shown: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(shown, a);
    }

    #[test]
    fn combine_is_linear(f in form(), g in form(), a in rational(), b in rational(), t in -100i64..100) {
        let h = LinForm::combine(&a, &f, &b, &g).unwrap();
        prop_assert_eq!(h.eval(t), &(&a * &f.eval(t)) + &(&b * &g.eval(t)));
    }

    #[test]
    fn exact_division_recovers(f in form(), d in 1u64..20) {
        let q = f.divide_exact(d);
        prop_assert_eq!(q.form.scale(&Rational::from(d)), f.clone());
        prop_assert_eq!(q.integral, f.scale(&Rational::new(1, d as i64).unwrap()).is_integral());
    }

    #[test]
    fn cyclic_quotient_round_trip(k2_y in -50i64..200, chi_y in 1i64..50, alpha in 0u64..30, beta in 0u64..30) {
        // build X from Y so that the quotient formulas are exact
        prop_assume!((alpha + 2 * beta) % 3 == 0);
        let k2_x = 3 * k2_y + alpha as i64;
        let chi_x = 3 * chi_y - (alpha as i64 + 2 * beta as i64) / 3;
        let x = make_surface(0i64, chi_x - 1, k2_x, "X").unwrap();
        let y = cyclic3_quotient(&x, FixedPointProfile::new(alpha, beta), 0).unwrap().surface;
        prop_assert_eq!(y.k2, Quantity::from(k2_y));
        prop_assert_eq!(y.chi, Quantity::from(chi_y));
    }

    #[test]
    fn symbolic_quotient_matches_numeric(a in 1i64..20, b in -30i64..30, t in 1i64..40) {
        // chosen so that the profile (4,4) divides symbolically
        let k2 = LinForm::new(9 * a, 3 * b + 4, Param::k());
        let pg = LinForm::new(3 * a, -2, Param::k());
        let x = make_surface(0i64, pg, k2, "X").unwrap();
        let p = FixedPointProfile::new(4, 4);
        let sym = cyclic3_quotient(&x, p, 0).unwrap().surface;
        let xt = x.at(t);
        let num = cyclic3_quotient(&xt, p, 0).unwrap().surface;
        prop_assert_eq!(sym.at(t), num);
    }

    #[test]
    fn solver_matches_oracle(k2 in -100i64..400, chi in -20i64..100, total in 0u64..=200, beta_min in 0u64..20, nonneg: bool) {
        let c = ProfileConstraints { beta_min, require_k2_nonneg: nonneg };
        prop_assert_eq!(solve_fixed_point_profile(k2, chi, total, c), profile_oracle(k2, chi, total, c));
    }

    #[test]
    fn basis_matches_oracle(cfg in config()) {
        let basis = invariant_monomial_basis(&cfg);
        let mut got = basis.elements.clone();
        got.sort();
        let mut want = basis_oracle(&cfg.section_weights, cfg.u0, cfg.u1, cfg.degree, 0);
        want.sort();
        prop_assert_eq!(&got, &want);
        prop_assert_eq!(invariant_dimension(&cfg), want.len() as u64);
    }

    #[test]
    fn eigenspaces_partition_sections(cfg in config()) {
        let d = eigenspace_dimensions(&cfg);
        let n = cfg.section_weights.len() as u64;
        prop_assert_eq!(d.iter().sum::<u64>(), n * (cfg.degree + 1));
        for (j, dj) in d.iter().enumerate() {
            let target = ((3 - j) % 3) as u64;
            let oracle = basis_oracle(&cfg.section_weights, cfg.u0, cfg.u1, cfg.degree, target);
            prop_assert_eq!(*dj, oracle.len() as u64);
        }
    }

    #[test]
    fn inverse_generator_same_invariants(cfg in config()) {
        let inv = cfg.inverse();
        prop_assert_eq!(invariant_monomial_basis(&inv).elements, invariant_monomial_basis(&cfg).elements);
        let (d, e) = (eigenspace_dimensions(&cfg), eigenspace_dimensions(&inv));
        prop_assert_eq!((d[1], d[2]), (e[2], e[1]));
    }

    #[test]
    fn quantity_json_round_trip(f in form(), exact in rational()) {
        for q in [Quantity::from(f.clone()), Quantity::from(exact.clone())] {
            let text = serde_json::to_string(&q).unwrap();
            let back: Quantity = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &q);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }
}
