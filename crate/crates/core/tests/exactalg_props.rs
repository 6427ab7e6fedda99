use proptest::prelude::*;
use recip_core::exactalg::{
    factor_rational, gcd_uni, rat, rat_frac, resultant, resultant_y, squarefree_part, BiPoly, Field, Rat, UniPoly,
};

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|cs| UniPoly::new(cs.into_iter().map(rat).collect()))
}

fn nonzero_uni(max_deg: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    uni(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn bi(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), -4i64..=4), 1..6)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c)))))
}

/// Determinant of the Sylvester matrix by Gaussian elimination over Q.
fn sylvester_resultant(p: &UniPoly<Rat>, q: &UniPoly<Rat>) -> Rat {
    let (m, n) = (p.deg(), q.deg());
    let size = m + n;
    if size == 0 {
        return rat(1);
    }
    let mut a = vec![vec![rat(0); size]; size];
    for i in 0..n {
        for j in 0..=m {
            a[i][i + j] = p.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            a[n + i][i + j] = q.coeff(n - j);
        }
    }
    let mut det = rat(1);
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !Field::is_zero(&a[r][col])) else {
            return rat(0);
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..size {
            let f = a[r][col].clone() / a[col][col].clone();
            for c in col..size {
                let v = a[col][c].clone() * f.clone();
                a[r][c] -= v;
            }
        }
    }
    det
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_divides_both(p in nonzero_uni(5), q in nonzero_uni(5), r in nonzero_uni(3)) {
        let (a, b) = (p.mul(&r), q.mul(&r));
        let g = gcd_uni(&a, &b);
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
        prop_assert!(r.divides(&g));
    }

    #[test]
    fn squarefree_part_is_squarefree(p in nonzero_uni(3), q in nonzero_uni(3)) {
        let a = p.mul(&p).mul(&q);
        let s = squarefree_part(&a).unwrap();
        prop_assert!(s.divides(&a));
        prop_assert!(gcd_uni(&s, &s.derivative()).is_constant());
        // every root of a is a root of s
        prop_assert!(s.divides(&p.mul(&q)));
        prop_assert!(a.divides(&s.pow(a.deg() as u64)));
    }

    #[test]
    fn factors_multiply_back(p in nonzero_uni(7)) {
        let fs = factor_rational(&p).unwrap();
        let mut prod = UniPoly::constant(p.lc().unwrap().clone());
        for (f, m) in &fs {
            prop_assert!(f.is_monic());
            prop_assert!(f.deg() >= 1);
            prod = prod.mul(&f.pow(*m as u64));
        }
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn resultant_matches_sylvester(p in nonzero_uni(5), q in nonzero_uni(5)) {
        prop_assert_eq!(resultant(&p, &q), sylvester_resultant(&p, &q));
    }

    #[test]
    fn resultant_vanishes_on_common_factor(p in nonzero_uni(3), q in nonzero_uni(3), r in nonzero_uni(2)) {
        prop_assume!(!r.is_constant());
        prop_assert!(Field::is_zero(&resultant(&p.mul(&r), &q.mul(&r))));
    }

    #[test]
    fn bivariate_resultant_specializes(p in bi(3), q in bi(3), c in -5i64..=5) {
        prop_assume!(p.deg_y() + q.deg_y() > 0 && !p.is_zero() && !q.is_zero());
        let r = resultant_y(&p, &q).unwrap();
        let c = rat_frac(c, 2);
        prop_assume!(!Field::is_zero(&p.lc_y().eval(&c)) && !Field::is_zero(&q.lc_y().eval(&c)));
        prop_assert_eq!(r.eval(&c), resultant(&p.eval_x(&c), &q.eval_x(&c)));
    }
}
