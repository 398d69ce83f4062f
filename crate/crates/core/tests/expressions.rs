use bigeo::fexpr::{differentiate, eval_constant, Expr, Func};
use bigeo::registry::registry;
use bigeo::{parse, GError};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        Just(Expr::var()),
        (-9i32..=9).prop_map(|c| Expr::constant(c as f64)),
        (1u32..100).prop_map(|c| Expr::constant(c as f64 / 8.0)),
    ]
}

fn tree() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        let funcs = prop_oneof![
            Just(Func::Sin),
            Just(Func::Cos),
            Just(Func::Tan),
            Just(Func::Exp),
            Just(Func::Ln)
        ];
        prop_oneof![
            inner.clone().prop_map(Expr::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sub(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::mul(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::div(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::pow(a, b)),
            (funcs, inner).prop_map(|(f, u)| Expr::func(f, u)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_parse_is_idempotent(e in tree()) {
        let printed = e.to_string();
        let reparsed = parse(&printed)?;
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn reparsed_tree_evaluates_alike(e in tree(), x in 0.1f64..3.0) {
        let reparsed = parse(&e.to_string())?;
        match (e.eval(x), reparsed.eval(x)) {
            (Ok(a), Ok(b)) => prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0)),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "{a:?} vs {b:?}"),
        }
    }
}

#[test]
fn symbolic_derivatives_match_central_differences() {
    let step = 1e-6;
    for entry in registry() {
        let f = parse(entry.text).unwrap();
        let df = differentiate(&f).unwrap();
        for x in entry.samples(50) {
            let fd = (f.eval(x + step).unwrap() - f.eval(x - step).unwrap()) / (2.0 * step);
            let exact = df.eval(x).unwrap();
            let err = (fd - exact).abs() / exact.abs().max(1.0);
            assert!(err <= 1e-5, "{} at {x}: {exact} vs {fd}", entry.name);
        }
    }
}

#[test]
fn grammar_examples() {
    assert_eq!(parse("-x^2").unwrap().eval(3.0).unwrap(), -9.0);
    assert_eq!(parse("2^3^2").unwrap().eval(0.0).unwrap(), 512.0);
    assert_eq!(parse("2*x^-1").unwrap().eval(4.0).unwrap(), 0.5);
    assert!((eval_constant("pi/6").unwrap() - std::f64::consts::FRAC_PI_6).abs() < 1e-15);
    assert!(eval_constant("x").is_err());
}

#[test]
fn parse_errors_carry_columns() {
    for (text, column) in [
        ("ln(", 4),
        ("2**x", 2),
        ("x +", 4),
        ("foo(x)", 1),
        ("(x", 3),
    ] {
        match parse(text) {
            Err(GError::Parse { column: c, .. }) => assert_eq!(c, column, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn evaluation_errors() {
    assert!(matches!(
        parse("ln(x)").unwrap().eval(-1.0),
        Err(GError::Domain(_))
    ));
    assert!(matches!(
        parse("1/x").unwrap().eval(0.0),
        Err(GError::Domain(_))
    ));
    assert!(parse("tan(x)")
        .unwrap()
        .eval(std::f64::consts::FRAC_PI_2)
        .is_err());
    assert!(parse("x^x").unwrap().eval(-2.0).is_err());
}
