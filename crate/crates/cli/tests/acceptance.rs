//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::{shift_x, verdict_fields, POOL};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use recip_cli::{cmd_analyze, cmd_corpus, AnalysisDocument, AnalyzeOptions};
use recip_core::curve::{chart_at, is_affine_smooth, is_regular_at_infinity, points_at_infinity};
use recip_core::exactalg::{rat, rat_frac, BiPoly, Rat};
use recip_core::puiseux::newton::order_on_axis;
use recip_core::puiseux::{branch_classes, valuation_at, PlaceAtInfinity};
use recip_core::semigroup::{NumericalSemigroup, VRecip};
use recip_core::{format_poly, parse_poly, recip_analysis, AffinePlaneCurve, Error, RecipOptions};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const BOUND: u64 = 64;
const CASES: u32 = 200;

fn analyze(src: &str) -> Result<AnalysisDocument, String> {
    let (doc, code) = cmd_analyze(src, &AnalyzeOptions::default());
    ensure!(code == 0, "{src}: exit {code}, {:?}", doc.error);
    Ok(doc)
}

/// Sums of `gens` up to `bound`.
fn closure(gens: &[u64], bound: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::from([0]);
    for n in 1..=bound {
        if gens.iter().any(|&g| g <= n && out.contains(&(n - g))) {
            out.insert(n);
        }
    }
    out
}

/// `(1 + c t^k)^(1/2)` to `len` terms by the binomial series.
fn sqrt_series(c: i64, k: usize, len: usize) -> Vec<Rat> {
    let mut out = vec![rat(0); len];
    let mut binom = rat(1);
    let mut j = 0i64;
    while (j as usize) * k < len {
        out[j as usize * k] = binom.clone() * rat(c).pow(j as i32);
        binom = binom * (rat_frac(1, 2) - rat(j)) / rat(j + 1);
        j += 1;
    }
    out
}

fn mul_series(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().min(b.len());
    (0..n).map(|k| (0..=k).map(|i| a[i].clone() * b[k - i].clone()).sum()).collect()
}

/// Checks `s^2 = 1 + c t^k` up to the length of `s`.
fn check_square(s: &[Rat], c: i64, k: usize) -> Outcome {
    let sq = mul_series(s, s);
    for (i, v) in sq.iter().enumerate() {
        let want = if i == 0 { rat(1) } else if i == k { rat(c) } else { rat(0) };
        ensure!(*v == want, "series square differs at t^{i}");
    }
    Ok(())
}

fn members(s: &NumericalSemigroup, bound: u64) -> BTreeSet<u64> {
    (0..=bound).filter(|&n| s.contains(n)).collect()
}

fn fermat() -> Outcome {
    for n in 3..=5 {
        let doc = analyze(&format!("x^{n} + y^{n} - 1"))?;
        ensure!(doc.points_at_infinity == Some(n), "n = {n}: points {:?}", doc.points_at_infinity);
        ensure!(doc.egyptian == Some(true), "n = {n}: not Egyptian");
    }
    Ok(())
}

fn elliptic() -> Outcome {
    let src = "y^2 - x^3 + x";
    let doc = analyze(src)?;
    ensure!(doc.egyptian == Some(false), "Egyptian");
    ensure!(doc.unique_point_xyz.as_deref() == Some("[0:1:0]"), "point {:?}", doc.unique_point_xyz);
    ensure!(doc.regular_at_infinity == Some(true), "not regular at infinity");

    // oracle: x = t^-2, y = t^-3 (1 - t^4)^(1/2) satisfies y^2 = x^3 - x
    let s = sqrt_series(-1, 4, 40);
    check_square(&s, -1, 4)?;
    let (vx, vy) = (-2, -3);
    let c = AffinePlaneCurve::parse(src).unwrap();
    let place = PlaceAtInfinity::unique(&c, None).map_err(|e| e.to_string())?;
    ensure!(valuation_at(&place, &BiPoly::x(), 8) == Ok(vx), "v(x)");
    ensure!(valuation_at(&place, &BiPoly::y(), 8) == Ok(vy), "v(y)");
    // a smooth cubic has genus 1, so the closure of {2, 3} has exactly the right gap count
    let oracle = closure(&[2, 3], BOUND);
    ensure!((0..=BOUND).filter(|n| !oracle.contains(n)).count() == 1, "oracle gap count");

    let gens = doc.semigroup_generators.clone().ok_or("no semigroup")?;
    let h = NumericalSemigroup::from_generators(&gens).map_err(|e| e.to_string())?;
    ensure!(members(&h, BOUND) == oracle, "H = {h}");
    ensure!(doc.genus == Some(1), "genus {:?}", doc.genus);
    ensure!(doc.weierstrass_point == Some(false), "Weierstrass point");
    ensure!(doc.v_recip_kind.as_deref() == Some("exact"), "v(R(D)) {:?}", doc.v_recip_kind);
    ensure!(doc.colength == Some(1), "colength {:?}", doc.colength);
    ensure!(doc.dvr == Some(false), "dvr");
    Ok(())
}

fn cubic_line() -> Outcome {
    let doc = analyze("y - x^3")?;
    ensure!(doc.egyptian == Some(false), "Egyptian");
    ensure!(doc.unique_point.as_deref() == Some("[0:0:1]"), "point {:?}", doc.unique_point);
    ensure!(doc.regular_at_infinity == Some(false), "regular at infinity");
    ensure!(doc.places_at_infinity == Some(1) && doc.places_exact == Some(true), "places");
    ensure!(doc.semigroup_generators == Some(vec![1]), "H {:?}", doc.semigroup_generators);
    ensure!(doc.genus == Some(0), "genus");
    ensure!(doc.dvr == Some(true), "dvr");
    Ok(())
}

fn two_branches() -> Outcome {
    let doc = analyze("x^3 - x*y - y")?;
    ensure!(doc.egyptian == Some(true), "not Egyptian");
    ensure!(doc.points_at_infinity == Some(1), "points {:?}", doc.points_at_infinity);
    ensure!(doc.places_at_infinity == Some(2) && doc.places_exact == Some(true), "places {:?}", doc.places_at_infinity);
    Ok(())
}

fn dvr_iff_genus_zero() -> Outcome {
    let (rows, code) = cmd_corpus("y - x^3\ny - x^2\ny - x\ny^2 - x^3 + x\ny^2 - x^5 - 1\n", &AnalyzeOptions::default());
    ensure!(code == 0, "corpus exit {code}");
    let dvr: Vec<Option<bool>> = rows.iter().map(|r| r.doc.dvr).collect();
    let want = [true, true, true, false, false].map(Some);
    ensure!(dvr == want, "dvr column {dvr:?}");
    for r in &rows {
        ensure!(r.doc.dvr == r.doc.genus.map(|g| g == 0), "line {}: dvr and genus disagree", r.line);
    }
    Ok(())
}

fn sandwich() -> Outcome {
    let src = "y^2 - x^5 - 1";
    let doc = analyze(src)?;
    ensure!(doc.weierstrass_point == Some(true), "not a Weierstrass point");
    ensure!(doc.v_recip_kind.as_deref() == Some("sandwich"), "kind {:?}", doc.v_recip_kind);

    // oracle: x = t^-2, y = t^-5 (1 + t^10)^(1/2); hyperelliptic genus 2
    check_square(&sqrt_series(1, 10, 60), 1, 10)?;
    let lower = closure(&[2, 5], BOUND);
    ensure!((0..=BOUND).filter(|n| !lower.contains(n)).count() == 2, "oracle gap count");
    let mu = *lower.iter().nth(1).unwrap();
    let upper: BTreeSet<u64> = (0..=BOUND).filter(|&n| n == 0 || n >= mu).collect();

    let r = recip_analysis(&AffinePlaneCurve::parse(src).unwrap(), &RecipOptions::default()).map_err(|e| e.to_string())?;
    let VRecip::Sandwich { lower: l, upper: u } = &r.v_recip else {
        return Err("exact result at a Weierstrass point".into());
    };
    ensure!(members(l, BOUND) == lower, "lower {l}");
    ensure!(members(u, BOUND) == upper, "upper {u}");
    ensure!(lower.is_subset(&upper), "lower not inside upper");
    ensure!(doc.mu == Some(mu), "mu {:?}", doc.mu);
    ensure!(doc.colength.is_none(), "colength reported for a sandwich");
    Ok(())
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let mut runner = TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn small_poly(deg: u32, terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=deg, 0..=deg), -3i64..=3), 1..=terms)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c)))))
}

fn properties() -> Outcome {
    let places: Vec<PlaceAtInfinity> = ["y^2 - x^3 + x", "y^2 - x^5 - 1", "y - x^3", "y^3 - x^4 - 1"]
        .iter()
        .map(|s| PlaceAtInfinity::unique(&AffinePlaneCurve::parse(s).unwrap(), None).unwrap())
        .collect();
    run_property("valuation axioms", (0..places.len(), small_poly(2, 3), small_poly(2, 3)), |(k, g, h)| {
        let v = |p: &BiPoly| valuation_at(&places[k], p, 8);
        let (Ok(a), Ok(b)) = (v(&g), v(&h)) else { return Ok(()) };
        prop_assert_eq!(v(&g.mul(&h)).unwrap(), a + b);
        match v(&g.add(&h)) {
            Ok(s) if a != b => prop_assert_eq!(s, a.min(b)),
            Ok(s) => prop_assert!(s >= a.min(b)),
            Err(Error::ZeroFunction) => prop_assert_eq!(a, b),
            Err(e) => prop_assert!(false, "{}", e),
        }
        Ok(())
    })?;

    let curves = (prop::collection::vec((-2i64..=2, -2i64..=2), 1..=4), small_poly(3, 5)).prop_map(|(ls, lower)| {
        let mut f = BiPoly::one();
        for (a, b) in &ls {
            let (a, b) = if (*a, *b) == (0, 0) { (0, 1) } else { (*a, *b) };
            f = f.mul(&BiPoly::from_terms([((1, 0), rat(a)), ((0, 1), rat(b))]));
        }
        let d = ls.len() as u32;
        lower.terms().filter(|(e, _)| e.0 + e.1 < d).for_each(|(e, c)| f.add_term(*e, c));
        f
    });
    run_property("branch degree accounting", curves, |f| {
        let Ok(c) = AffinePlaneCurve::new(f) else { return Ok(()) };
        for class in points_at_infinity(&c).unwrap() {
            let Some(p) = class.rational_point else { continue };
            let chart = chart_at(&c, &p).unwrap();
            let i0 = order_on_axis(&chart.g).unwrap() as usize;
            match branch_classes(&chart) {
                Ok(bs) => prop_assert_eq!(bs.iter().map(|b| b.e as usize * b.d).sum::<usize>(), i0),
                Err(Error::DepthExceeded { .. }) => {}
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
        Ok(())
    })?;

    let gens = prop::collection::vec(2u64..=15, 1..=4);
    run_property("semigroup closure", gens, |gens| {
        let Ok(s) = NumericalSemigroup::from_generators(&gens) else { return Ok(()) };
        let els = s.elements_up_to(BOUND);
        for &a in &els {
            for &b in &els {
                if a + b <= BOUND {
                    prop_assert!(s.contains(a + b));
                }
            }
        }
        prop_assert_eq!(members(&s, BOUND), closure(&gens, BOUND));
        Ok(())
    })?;

    let polys = prop::collection::vec(((0u32..5, 0u32..5), -9i64..=9, 1i64..=5), 0..7)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat_frac(n, d)))));
    run_property("parser round-trip", polys, |p| {
        prop_assert_eq!(parse_poly(&format_poly(&p)).unwrap(), p);
        Ok(())
    })?;

    run_property("realization invariance", (0..POOL.len(), -7i64..=7, 1i64..=3), |(k, n, d)| {
        let opts = AnalyzeOptions::default();
        let (base, code) = cmd_analyze(POOL[k], &opts);
        let moved = format_poly(&shift_x(&parse_poly(POOL[k]).unwrap(), &rat_frac(n, d)));
        let (doc, moved_code) = cmd_analyze(&moved, &opts);
        prop_assert_eq!(code, moved_code);
        prop_assert_eq!(verdict_fields(&base), verdict_fields(&doc));
        Ok(())
    })
}

fn smooth_genus() -> Outcome {
    let corpus = [
        "y - x",
        "y - x^2",
        "y^2 - x^3 + x",
        "y^2 - x^3 - x^2 - 3*x - 5",
        "y^3 - x^4 - 1",
        "y^3 - x^4 + x*y - 1",
        "y^4 - x^5 - 1",
        "y - x^3",
        "y^2 - x^5 - 1",
    ];
    let mut smooth = Vec::new();
    for src in corpus {
        let c = AffinePlaneCurve::parse(src).unwrap();
        if !(is_affine_smooth(&c).unwrap() && is_regular_at_infinity(&c).unwrap()) {
            continue;
        }
        let d = c.degree() as i64;
        let doc = analyze(src)?;
        ensure!(doc.genus == Some(((d - 1) * (d - 2) / 2) as u64), "{src}: genus {:?} for degree {d}", doc.genus);
        smooth.push(src);
    }
    ensure!(smooth.len() == 7, "smooth inputs found: {smooth:?}");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Fermat curves have n points at infinity and are Egyptian", fermat),
        ("elliptic curve: H = <2, 3>, exact v(R(D)), colength 1", elliptic),
        ("y - x^3: one singular point, one place, H = N, DVR", cubic_line),
        ("x^3 - xy - y: one point, two places, Egyptian", two_branches),
        ("R(D) is a DVR exactly in genus 0", dvr_iff_genus_zero),
        ("y^2 - x^5 - 1: Weierstrass point with sandwich bounds", sandwich),
        ("property suites, 200 cases each", properties),
        ("smooth plane curves have genus (d-1)(d-2)/2", smooth_genus),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {title}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
