use surfinv_core::catalog::{Catalog, PairId};
use surfinv_core::error::Error;
use surfinv_core::numeric::{LinForm, Param, Quantity};
use surfinv_core::pipeline::{run_pipeline, symbolic_pipeline, PipelineReport};
use surfinv_core::verify::verify;

fn k(a: i64, b: i64) -> Quantity {
    LinForm::new(a, b, Param::k()).into()
}

fn q(v: i64) -> Quantity {
    Quantity::from(v)
}

fn triple(c: &Catalog, id: PairId, n: i64) -> [(Quantity, Quantity, Quantity); 2] {
    let (x, s) = c.pair_invariants(id, n).unwrap();
    [(x.q, x.pg, x.k2), (s.q, s.pg, s.k2)]
}

#[test]
fn pair_tables() {
    let c = Catalog::standard();
    assert_eq!(triple(&c, PairId::I, 3), [(q(2), q(9), q(40)), (q(0), q(9), q(20))]);
    assert_eq!(triple(&c, PairId::II, 4), [(q(2), q(17), q(96)), (q(0), q(17), q(48))]);
    assert_eq!(triple(&c, PairId::III, 3), [(q(3), q(17), q(96)), (q(0), q(17), q(48))]);
    assert!(matches!(c.pair_invariants(PairId::I, 2), Err(Error::OutOfRange { .. })));
}

#[test]
fn sigma_level_quotient_example_one() {
    // K²_Σ - 2 = 3K²_T and χ(Σ) = 3χ(T) - 2/3 - 4/3
    let r = symbolic_pipeline(&Catalog::standard(), 1).unwrap();
    assert_eq!(r.s.k2.try_sub(&q(2)).unwrap(), r.t.k2.scale(3));
    assert_eq!(r.s.chi, r.t.chi.scale(3).try_sub(&q(2)).unwrap());
}

#[test]
fn example_formulas() {
    let c = Catalog::standard();
    let r1 = symbolic_pipeline(&c, 1).unwrap();
    assert_eq!([&r1.y.k2, &r1.y.pg, &r1.t.k2, &r1.t.pg], [&k(24, -12), &k(4, -1), &k(12, -6), &k(4, -1)]);
    assert_eq!(r1.sigma_locus.a1, k(48, 0));
    let r2 = symbolic_pipeline(&c, 2).unwrap();
    assert_eq!([&r2.y.chi, &r2.y.k2, &r2.y.pg, &r2.t.k2, &r2.t.pg], [&k(5, 0), &k(32, -12), &k(5, -1), &k(16, -6), &k(5, -1)]);
    let r3 = symbolic_pipeline(&c, 3).unwrap();
    assert_eq!([&r3.y.k2, &r3.y.chi, &r3.t.k2, &r3.t.pg], [&k(48, -18), &k(7, 0), &k(24, -9), &k(7, -1)]);
    assert_eq!(r3.sigma_locus.a1, k(84, 0));
}

#[test]
fn numeric_agrees_with_symbolic() {
    let c = Catalog::standard();
    for e in 1..=3 {
        let sym = symbolic_pipeline(&c, e).unwrap();
        for kk in 1..=100u64 {
            let num = run_pipeline(&c, e, kk).unwrap();
            let t = kk as i64;
            for ((_, a), (_, b)) in sym.surfaces().into_iter().zip(num.surfaces()) {
                assert_eq!(&a.at(t).with_label(""), &b.clone().with_label(""), "example {e} k={kk}");
            }
            assert_eq!(sym.sigma_locus.at(t), num.sigma_locus);
            assert_eq!(sym.y_locus.at(t), num.y_locus);
            assert_eq!(sym.t_locus.at(t), num.t_locus);
            assert!(num.passed(), "example {e} k={kk}");
        }
    }
}

#[test]
fn reports_round_trip() {
    let c = Catalog::standard();
    for r in [symbolic_pipeline(&c, 1).unwrap(), run_pipeline(&c, 3, 7).unwrap()] {
        let text = r.to_json();
        let back: PipelineReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_json(), text);
    }
}

#[test]
fn catalog_round_trip() {
    let c = Catalog::standard();
    let text = c.to_json();
    let back = Catalog::from_json(&text).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.to_json(), text);
}

#[test]
fn wrong_q_is_reported_not_raised() {
    let mut c = Catalog::standard();
    c.examples[0].q_y = 1;
    let r = run_pipeline(&c, 1, 1).unwrap();
    assert!(!r.passed());
    assert!(!verify(&c, 1).passed());
}

#[test]
fn wrong_weight_keeps_dimension_but_fails() {
    let mut c = Catalog::standard();
    c.examples[0].x_sections.section_weights = vec![0, 0, 2, 2];
    let r = symbolic_pipeline(&c, 1).unwrap();
    assert!(r.check("X.dim").unwrap().pass);
    assert!(!r.check("X.basis @k=1").unwrap().pass);
}
