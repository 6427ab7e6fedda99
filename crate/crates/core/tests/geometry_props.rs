use proptest::prelude::*;
use recip_core::curve::{chart_at, count_points_at_infinity, points_at_infinity, AffinePlaneCurve};
use recip_core::exactalg::{rat, squarefree_part, BiPoly, Rat};
use recip_core::puiseux::newton::order_on_axis;
use recip_core::puiseux::{branch_classes, branch_classes_of, valuation_at, PlaceAtInfinity};
use recip_core::{parse_poly, Error};

/// `f(x + a, y + b)`.
fn translate(f: &BiPoly, a: &Rat, b: &Rat) -> BiPoly {
    let xs = BiPoly::x().add(&BiPoly::constant(a.clone()));
    let ys = BiPoly::y().add(&BiPoly::constant(b.clone()));
    let mut out = BiPoly::zero();
    for (&(i, j), c) in f.terms() {
        out = out.add(&xs.pow(i as u64).mul(&ys.pow(j as u64)).scale(c));
    }
    out
}

/// Leading form from linear factors `a x + b y`, plus lower-degree terms.
fn curve_poly() -> impl Strategy<Value = BiPoly> {
    let linear = prop::collection::vec((-2i64..=2, -2i64..=2), 1..=4);
    let lower = prop::collection::vec(((0u32..4, 0u32..4), -3i64..=3), 0..6);
    (linear, lower).prop_map(|(ls, lower)| {
        let mut f = BiPoly::one();
        for (a, b) in &ls {
            let (a, b) = if *a == 0 && *b == 0 { (1, 0) } else { (*a, *b) };
            f = f.mul(&BiPoly::from_terms([((1, 0), rat(a)), ((0, 1), rat(b))]));
        }
        let d = ls.len() as u32;
        for ((i, j), c) in lower {
            if i + j < d {
                f = f.add(&BiPoly::monomial(rat(c), i, j));
            }
        }
        f
    })
}

fn local_poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..5, 0u32..5), -3i64..=3), 1..6).prop_map(|ts| {
        BiPoly::from_terms(ts.into_iter().filter(|&((i, j), _)| i + j > 0).map(|(e, c)| (e, rat(c))))
    })
}

/// Curves with one place at infinity and the pole orders of x and y there.
const PLACES: &[(&str, i64, i64)] = &[
    ("y^2 - x^3 + x", -2, -3),
    ("y^2 - x^5 - 1", -2, -5),
    ("y - x^3", -1, -3),
    ("y - x^2", -1, -2),
    ("y^3 - x^4 - 1", -3, -4),
    ("y^2 - 2*x^2*y + x^4 - x", -2, -4),
];

fn small_poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -3i64..=3), 1..4)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn points_at_infinity_are_roots_of_the_leading_form(f in curve_poly(), a in -3i64..=3, b in -3i64..=3) {
        let Ok(c) = AffinePlaneCurve::new(f.clone()) else { return Ok(()) };
        let n = count_points_at_infinity(&c).unwrap();
        // distinct roots of L(z, 1), plus [0:1:0] when L(1, 0) = 0
        let ell = c.leading_form().eval_y(&rat(1));
        let expected = squarefree_part(&ell).unwrap().deg() + usize::from(ell.deg() < c.degree() as usize);
        prop_assert_eq!(n, expected);
        let moved = AffinePlaneCurve::new(translate(&f, &rat(a), &rat(b))).unwrap();
        prop_assert_eq!(count_points_at_infinity(&moved).unwrap(), n);
    }

    #[test]
    fn branch_degrees_add_up_at_infinity(f in curve_poly()) {
        let Ok(c) = AffinePlaneCurve::new(f) else { return Ok(()) };
        for class in points_at_infinity(&c).unwrap() {
            let Some(p) = class.rational_point.clone() else { continue };
            let chart = chart_at(&c, &p).unwrap();
            let i0 = order_on_axis(&chart.g).unwrap() as usize;
            // intersection number with the line at infinity
            prop_assert_eq!(i0, class.multiplicity);
            match branch_classes(&chart) {
                Ok(bs) => {
                    let total: usize = bs.iter().map(|b| b.e as usize * b.d).sum();
                    prop_assert_eq!(total, i0);
                }
                Err(Error::DepthExceeded { .. }) => {}
                Err(e) => prop_assert!(false, "{e} at {p}"),
            }
        }
    }

    #[test]
    fn branch_degrees_add_up_locally(g in local_poly()) {
        let Some(i0) = order_on_axis(&g) else { return Ok(()) };
        match branch_classes_of(&g) {
            Ok(bs) => {
                let total: usize = bs.iter().map(|b| b.e as usize * b.d).sum();
                prop_assert_eq!(total, i0 as usize);
            }
            // repeated factors and deep towers are reported, not expanded
            Err(Error::NotIrreducible(_) | Error::DepthExceeded { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn valuation_axioms(k in 0..PLACES.len(), g in small_poly(), h in small_poly(), c in 1i64..=9) {
        let (src, vx, vy) = PLACES[k];
        let curve = AffinePlaneCurve::parse(src).unwrap();
        let place = PlaceAtInfinity::unique(&curve, None).unwrap();
        let v = |p: &BiPoly| valuation_at(&place, p, 8);
        prop_assert_eq!(v(&BiPoly::x()).unwrap(), vx);
        prop_assert_eq!(v(&BiPoly::y()).unwrap(), vy);
        prop_assert_eq!(v(&BiPoly::constant(rat(c))).unwrap(), 0);
        let (Ok(a), Ok(b)) = (v(&g), v(&h)) else { return Ok(()) };
        // regular functions on the affine curve only have poles at infinity
        prop_assert!(a <= 0 && b <= 0);
        prop_assert_eq!(v(&g.mul(&h)).unwrap(), a + b);
        match v(&g.add(&h)) {
            Ok(s) if a != b => prop_assert_eq!(s, a.min(b)),
            Ok(s) => prop_assert!(s >= a.min(b)),
            Err(Error::ZeroFunction) => prop_assert_eq!(a, b),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}

#[test]
fn valuation_of_the_curve_equation() {
    let curve = AffinePlaneCurve::parse("y^2 - x^3 + x").unwrap();
    let place = PlaceAtInfinity::unique(&curve, None).unwrap();
    assert_eq!(valuation_at(&place, &parse_poly("y^2 - x^3 + x").unwrap(), 8), Err(Error::ZeroFunction));
    assert_eq!(valuation_at(&place, &parse_poly("y^2 - x^3").unwrap(), 8), Ok(-2));
}
