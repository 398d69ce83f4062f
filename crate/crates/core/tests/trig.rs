use bigeo::garith::{g_add, g_mul, g_sub, rel_log_error, GReal};
use bigeo::gtrig::{
    g_triangle_area, g_trig, g_trig_from_triangle, triplet_check, triplet_generate, GTriplet,
    TrigKind,
};
use proptest::prelude::*;
use std::f64::consts::FRAC_PI_2;

const TOL: f64 = 1e-12;

fn t(kind: TrigKind, theta: f64) -> GReal {
    g_trig(kind, theta).unwrap()
}

fn close(a: GReal, b: GReal) -> bool {
    rel_log_error(a.log_value(), b.log_value()) <= TOL
}

fn sq(x: GReal) -> GReal {
    x.gpow(2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn pythagorean_and_reciprocal(theta in 0.01f64..(FRAC_PI_2 - 0.01)) {
        use TrigKind::*;
        let e = GReal::ONE;
        prop_assert!(close(g_add(sq(t(Sing, theta)), sq(t(Cosg, theta)))?, e));
        prop_assert!(close(g_mul(t(Sing, theta), t(Cscg, theta))?, e));
        prop_assert!(close(g_mul(t(Cosg, theta), t(Secg, theta))?, e));
        prop_assert!(close(g_mul(t(Tang, theta), t(Cotg, theta))?, e));
        prop_assert!(close(g_add(sq(t(Tang, theta)), e)?, sq(t(Secg, theta))));
        prop_assert!(close(g_add(sq(t(Cotg, theta)), e)?, sq(t(Cscg, theta))));
    }

    #[test]
    fn addition_formulas(a in 0.01f64..1.5, frac in 0.01f64..0.99) {
        use TrigKind::*;
        let b = frac * (FRAC_PI_2 - a);
        let sum_sin = g_add(g_mul(t(Sing, a), t(Cosg, b))?, g_mul(t(Cosg, a), t(Sing, b))?)?;
        prop_assert!(close(t(Sing, a + b), sum_sin));
        let sum_cos = g_sub(g_mul(t(Cosg, a), t(Cosg, b))?, g_mul(t(Sing, a), t(Sing, b))?)?;
        prop_assert!(close(t(Cosg, a + b), sum_cos));
    }

    #[test]
    fn generated_triplets_check(m in 2u64..1000) {
        let tr = triplet_generate(m)?;
        prop_assert!(triplet_check(tr.hypotenuse(), tr.opposite(), tr.adjacent()));
    }
}

#[test]
fn triangle_ratios() {
    let e = |k: f64| GReal::from_log(k).unwrap();
    let tr = GTriplet::new(e(5.0), e(3.0), e(4.0)).unwrap();
    let sing = g_trig_from_triangle(&tr, TrigKind::Sing).unwrap();
    let cosg = g_trig_from_triangle(&tr, TrigKind::Cosg).unwrap();
    let tang = g_trig_from_triangle(&tr, TrigKind::Tang).unwrap();
    assert!((sing.log_value() - 0.6).abs() < 1e-12);
    assert!((tang.log_value() - 0.75).abs() < 1e-12);
    assert!(close(sing.oslash(cosg).unwrap(), tang));
    // the triangle and the bridge agree at the triangle's angle
    for kind in TrigKind::ALL {
        let via_angle = g_trig(kind, tr.angle()).unwrap();
        let via_sides = g_trig_from_triangle(&tr, kind).unwrap();
        assert!(
            rel_log_error(via_angle.log_value(), via_sides.log_value()) <= 1e-12,
            "{kind}"
        );
    }

    assert!(triplet_check(e(5.0), e(3.0), e(4.0)));
    assert!(!triplet_check(e(2.0), e(1.0), e(1.0)));
    assert!(triplet_check(e(2f64.sqrt()), e(1.0), e(1.0)));
    assert!(GTriplet::new(e(2.0), e(1.0), e(1.0)).is_err());
    assert!(triplet_generate(1).is_err());

    assert_eq!(g_triangle_area(e(3.0), e(4.0)).unwrap(), 6.0);
    assert_eq!(g_triangle_area(e(2.0), e(5.0)).unwrap(), 5.0);
    assert!(g_triangle_area(GReal::ZERO, e(5.0)).is_err());
}

#[test]
fn poles() {
    assert!(g_trig(TrigKind::Tang, FRAC_PI_2).is_err());
    assert!(g_trig(TrigKind::Cscg, 0.0).is_err());
    assert!((g_trig(TrigKind::Sing, FRAC_PI_2).unwrap().log_value() - 1.0).abs() < 1e-15);
}
