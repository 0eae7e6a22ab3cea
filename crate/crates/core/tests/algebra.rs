use bms_core::algebra::{
    anti_involution, anti_involution_generator, bracket, bracket_elements, degree_parity,
    AlgebraElement, Generator, HalfInt,
};
use bms_core::exactnum::Poly;
use bms_core::Error;
use proptest::prelude::*;

fn bms_generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (-4i64..=4).prop_map(Generator::l),
        (-4i64..=4).prop_map(Generator::m),
        (-4i64..4).prop_map(|n| Generator::q(2 * n + 1)),
        Just(Generator::C1),
        Just(Generator::C2),
    ]
}

fn hc_generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (-4i64..=4).prop_map(Generator::a),
        (-4i64..=4).prop_map(Generator::b),
        (-4i64..4).prop_map(|n| Generator::c(2 * n + 1)),
        Just(Generator::K),
    ]
}

fn sign(x: Generator, y: Generator) -> i64 {
    if x.is_odd() && y.is_odd() {
        -1
    } else {
        1
    }
}

fn nested(x: Generator, y: Generator, z: Generator) -> AlgebraElement {
    bracket_elements(&AlgebraElement::from_generator(x), &bracket(y, z).unwrap()).unwrap()
}

fn jacobi(x: Generator, y: Generator, z: Generator) -> AlgebraElement {
    nested(x, y, z)
        .scale(&Poly::int(sign(x, z)))
        .add(&nested(y, z, x).scale(&Poly::int(sign(y, x))))
        .add(&nested(z, x, y).scale(&Poly::int(sign(z, y))))
}

proptest! {
    #[test]
    fn bms_antisymmetry(x in bms_generator(), y in bms_generator()) {
        let xy = bracket(x, y).unwrap();
        let yx = bracket(y, x).unwrap();
        prop_assert!(xy.add(&yx.scale(&Poly::int(sign(x, y)))).is_zero());
    }

    #[test]
    fn bms_jacobi(x in bms_generator(), y in bms_generator(), z in bms_generator()) {
        prop_assert!(jacobi(x, y, z).is_zero());
    }

    #[test]
    fn hc_antisymmetry_and_jacobi(x in hc_generator(), y in hc_generator(), z in hc_generator()) {
        let xy = bracket(x, y).unwrap();
        let yx = bracket(y, x).unwrap();
        prop_assert!(xy.add(&yx.scale(&Poly::int(sign(x, y)))).is_zero());
        prop_assert!(jacobi(x, y, z).is_zero());
    }

    #[test]
    fn brackets_respect_grading(x in bms_generator(), y in bms_generator()) {
        let (dx, px) = degree_parity(x);
        let (dy, py) = degree_parity(y);
        for (g, _) in bracket(x, y).unwrap().terms() {
            if !g.is_central() {
                prop_assert_eq!(g.index(), dx + dy);
                prop_assert_eq!(g.is_odd(), px.is_odd() != py.is_odd());
            }
        }
    }

    #[test]
    fn anti_involution_reverses_brackets(x in bms_generator(), y in bms_generator()) {
        let wx = anti_involution_generator(x).unwrap();
        let wy = anti_involution_generator(y).unwrap();
        prop_assert_eq!(anti_involution_generator(wx).unwrap(), x);
        let lhs = anti_involution(&bracket(x, y).unwrap()).unwrap();
        prop_assert_eq!(lhs, bracket(wy, wx).unwrap());
    }

    #[test]
    fn generator_text_round_trip(x in prop_oneof![bms_generator(), hc_generator()]) {
        let back: Generator = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Generator>(&json).unwrap(), x);
    }
}

#[test]
fn central_terms_of_the_brackets() {
    let p = |s: &str| -> Poly { s.parse().unwrap() };
    // (m^3 - m)/12 at m = 3 is 2
    let e = bracket(Generator::l(3), Generator::l(-3)).unwrap();
    assert_eq!(e.coefficient(&Generator::l(0)), p("6"));
    assert_eq!(e.coefficient(&Generator::C1), p("2"));
    // (r^2 - 1/4)/3 at r = 3/2 is 2/3
    let e = bracket(Generator::q(3), Generator::q(-3)).unwrap();
    assert_eq!(e.coefficient(&Generator::m(0)), p("2"));
    assert_eq!(e.coefficient(&Generator::C2), p("2/3"));
    // (m/2 - r) at m = 2, r = -1/2
    let e = bracket(Generator::l(2), Generator::q(-1)).unwrap();
    assert_eq!(e.coefficient(&Generator::q(3)), p("3/2"));
    let e = bracket(Generator::a(2), Generator::b(-2)).unwrap();
    assert_eq!(e.coefficient(&Generator::K), p("2"));
}

#[test]
fn invalid_input_is_rejected() {
    assert!(matches!(
        bracket(Generator::l(1), Generator::a(-1)),
        Err(Error::MixedAlgebra(..))
    ));
    assert!(anti_involution_generator(Generator::b(1)).is_err());
    assert!("Q[1]".parse::<Generator>().is_err());
    assert!("L[1/2]".parse::<Generator>().is_err());
    assert!("X[1]".parse::<Generator>().is_err());
    assert!("1/0".parse::<HalfInt>().is_err());
}
