use bms_core::algebra::{anti_involution_generator, Generator, HalfInt};
use bms_core::exactnum::{Poly, Rational};
use bms_core::pbw::{weight_basis, IndexTriple, UeaElement};
use bms_core::verma::{
    act, act_via_normal_form, contravariant_form, determinant_check, diagonal_report, factor_level,
    gram_data, gram_data_in, gram_rank, singular_vectors, verma_simple, GramReport, VermaModule,
    VermaVector, WeightParams,
};
use proptest::prelude::*;

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

fn t(s: &str) -> IndexTriple {
    s.parse().unwrap()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn half(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn basis_upto(max_twice: i64) -> Vec<IndexTriple> {
    (0..=max_twice)
        .flat_map(|n| weight_basis(half(n)))
        .collect()
}

#[test]
fn action_examples() {
    let params = WeightParams::symbolic();
    let gen = |g: Generator| UeaElement::generator(g);
    let v = |s: &str| VermaVector::basis(t(s));

    let out = act(&gen(Generator::l(1)), &v("M[-1]"), &params).unwrap();
    assert_eq!(out, VermaVector::vacuum().scale(&p("2*h2")));
    assert!(act(&gen(Generator::m(1)), &v("M[-1]"), &params)
        .unwrap()
        .is_zero());

    // L_1 L_{-1}^2 = L_{-1}^2 L_1 + 2 L_{-1} L_0 + 2 L_0 L_{-1}, and
    // L_0 L_{-1} 1 = (h1 + 1) L_{-1} 1, so the image is (2 h1 + 2 (h1 + 1)) L_{-1} 1.
    let oracle = &(&p("h1") * &Poly::int(2)) + &(&(&p("h1") + &Poly::one()) * &Poly::int(2));
    let out = act(&gen(Generator::l(1)), &v("L[-1]^2"), &params).unwrap();
    assert_eq!(out, VermaVector::basis(t("L[-1]")).scale(&oracle));
}

#[test]
fn form_examples() {
    let params = WeightParams::symbolic();
    let form = |a: &str, b: &str| {
        contravariant_form(
            &VermaVector::basis(t(a)),
            &VermaVector::basis(t(b)),
            &params,
        )
        .unwrap()
    };
    assert_eq!(form("Q[-1/2]", "Q[-1/2]"), p("2*h2"));
    assert_eq!(form("L[-1]", "L[-1]"), p("2*h1"));
    assert_eq!(form("M[-1]", "M[-1]"), p("0"));
    // L_1 L_1 M_{-1} M_{-1} 1 = 8 h2^2
    assert_eq!(form("L[-1]^2", "M[-1]^2"), p("8*h2^2"));
    // different weights are orthogonal
    assert_eq!(form("L[-1]", "Q[-1/2]"), p("0"));
}

#[test]
fn level_one_gram_matrix() {
    let data = gram_data(HalfInt::int(1), &WeightParams::symbolic()).unwrap();
    let basis: Vec<String> = data.basis.iter().map(ToString::to_string).collect();
    assert_eq!(basis, vec!["M[-1]", "L[-1]"]);
    // oracle: the form on all pairs
    let module = VermaModule::new(WeightParams::symbolic());
    for (a, x) in data.basis.iter().enumerate() {
        for (b, y) in data.basis.iter().enumerate() {
            assert_eq!(data.gram[(a, b)], module.form_basis(x, y).unwrap());
        }
    }
    assert_eq!(
        data.gram.to_rows(),
        vec![vec![p("0"), p("2*h2")], vec![p("2*h2"), p("2*h1")]]
    );
}

#[test]
fn form_is_symmetric() {
    let module = VermaModule::new(WeightParams::symbolic());
    for twice in 0..=5 {
        let data = gram_data_in(&module, half(twice)).unwrap();
        assert!(data.gram.is_symmetric(), "level {}", half(twice));
    }
}

#[test]
fn form_is_contravariant() {
    let module = VermaModule::new(WeightParams::symbolic());
    let xs = [
        Generator::l(1),
        Generator::l(-1),
        Generator::l(2),
        Generator::l(-2),
        Generator::m(1),
        Generator::m(-1),
        Generator::q(1),
        Generator::q(-1),
        Generator::q(3),
        Generator::q(-3),
    ];
    let basis = basis_upto(4);
    for x in xs {
        let wx = anti_involution_generator(x).unwrap();
        for u in &basis {
            for v in &basis {
                if u.weight() - x.index() != v.weight() {
                    continue;
                }
                let xu = module.act_generator(x, u).unwrap();
                let wxv = module.act_generator(wx, v).unwrap();
                let lhs = module
                    .contravariant_form(&xu, &VermaVector::basis(v.clone()))
                    .unwrap();
                let rhs = module
                    .contravariant_form(&VermaVector::basis(u.clone()), &wxv)
                    .unwrap();
                assert_eq!(lhs, rhs, "x = {x}, u = {u}, v = {v}");
            }
        }
    }
}

#[test]
fn d_matrices_are_lower_triangular() {
    let module = VermaModule::new(WeightParams::symbolic());
    for twice in 0..=6 {
        let data = gram_data_in(&module, half(twice)).unwrap();
        for a in 0..data.basis.len() {
            for b in a + 1..data.basis.len() {
                assert!(
                    data.dmat[(a, b)].is_zero(),
                    "level {} entry ({a}, {b})",
                    half(twice)
                );
            }
        }
    }
}

#[test]
fn symbolic_determinant_identity() {
    for twice in 0..=4 {
        let check = determinant_check(half(twice), &WeightParams::symbolic()).unwrap();
        assert!(check.agrees(), "level {}", half(twice));
    }
}

#[test]
fn displayed_diagonal_discrepancies_are_reported() {
    let params = WeightParams::symbolic();
    let data = gram_data(half(3), &params).unwrap();
    let report = diagonal_report(&data, &params);
    let q = report.iter().find(|r| r.basis == t("Q[-3/2]")).unwrap();
    assert_eq!(q.computed, p("2*h2 + 2/3*c2"));
    assert_eq!(q.displayed, p("2*h2 + 5/4*c2"));
    assert!(!q.agrees);
}

#[test]
fn gram_report_round_trips_through_json() {
    let data = gram_data(HalfInt::int(2), &WeightParams::symbolic()).unwrap();
    let report = GramReport::new(&data).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    let back: GramReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["level"], "2");
    assert_eq!(value["basis"][3], "Q[-3/2]Q[-1/2]");
}

/// Full rank at level `n` exactly when no violating `i` enters by level `n`.
#[test]
fn gram_rank_matches_simplicity_criterion() {
    let grid = [
        (0, 1, 5, 1),
        (-1, 1, 8, 1),
        (5, 1, 7, 1),
        (1, 1, 0, 1),
        (-1, 1, 3, 1),
        (-2, 1, 1, 1),
        (-5, 8, 1, 1),
    ];
    for (hn, hd, cn, cd) in grid {
        let (h2, c2) = (rat(hn, hd), rat(cn, cd));
        let params = WeightParams::numeric(rat(2, 5), h2.clone(), rat(-1, 3), c2.clone());
        let module = VermaModule::new(params);
        let report = verma_simple(&h2, &c2, 20);
        for twice in 0..=5 {
            let n = half(twice);
            let full = gram_rank(&module, n).unwrap() == weight_basis(n).len();
            let degenerate = report.violations.iter().any(|&i| factor_level(i) <= n);
            assert_eq!(full, !degenerate, "(h2, c2) = ({h2}, {c2}) at level {n}");
        }
    }
}

#[test]
fn singular_vector_examples() {
    let generic = WeightParams::numeric(rat(1, 1), rat(5, 1), rat(2, 1), rat(7, 1));
    assert!(singular_vectors(half(1), &generic, 2).unwrap().is_empty());

    let vacuum = WeightParams::numeric(rat(0, 1), rat(0, 1), rat(1, 2), rat(3, 1));
    let level_half = singular_vectors(half(1), &vacuum, 2).unwrap();
    assert_eq!(level_half.len(), 1);
    assert_eq!(
        level_half[0]
            .terms()
            .map(|(t, _)| t.to_string())
            .collect::<Vec<_>>(),
        vec!["Q[-1/2]"]
    );

    // L_1 M_{-1} 1 = 2 M_0 1 = 0 and Q_{1/2} M_{-1} 1 = 0, while
    // Q_{1/2} L_{-1} 1 = Q_{-1/2} 1.
    let level_one = singular_vectors(half(2), &vacuum, 3).unwrap();
    assert_eq!(level_one.len(), 1);
    assert_eq!(
        level_one[0]
            .terms()
            .map(|(t, _)| t.to_string())
            .collect::<Vec<_>>(),
        vec!["M[-1]"]
    );
    let module = VermaModule::new(vacuum);
    let q = module.act_generator(Generator::q(1), &t("L[-1]")).unwrap();
    assert_eq!(q, VermaVector::basis(t("Q[-1/2]")));
}

fn lowering_word() -> impl Strategy<Value = Vec<Generator>> {
    let g = prop_oneof![
        (1i64..=2).prop_map(|n| Generator::l(-n)),
        (1i64..=2).prop_map(|n| Generator::m(-n)),
        (0i64..2).prop_map(|n| Generator::q(-(2 * n + 1))),
    ];
    prop::collection::vec(g, 0..=3)
}

fn any_word() -> impl Strategy<Value = Vec<Generator>> {
    let g = prop_oneof![
        (-2i64..=2).prop_map(Generator::l),
        (-2i64..=2).prop_map(Generator::m),
        (-2i64..2).prop_map(|n| Generator::q(2 * n + 1)),
        Just(Generator::C1),
        Just(Generator::C2),
    ];
    prop::collection::vec(g, 0..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursive_action_matches_normal_ordering(x in any_word(), v in lowering_word()) {
        let params = WeightParams::symbolic();
        let v = act(&UeaElement::from_word(v), &VermaVector::vacuum(), &params).unwrap();
        let x = UeaElement::from_word(x);
        prop_assert_eq!(
            act(&x, &v, &params).unwrap(),
            act_via_normal_form(&x, &v, &params).unwrap()
        );
    }
}
