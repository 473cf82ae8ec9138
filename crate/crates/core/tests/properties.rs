use num_traits::Zero;
use proptest::prelude::*;
use tanvar_core::curves::dehomogenize;
use tanvar_core::{curve_type, normalize, projective_type, rat, CurveGerm, ExtOrder, Jet1, Jet2, Rational, TypeVerdict, Var};

const K: usize = 8;

fn jet1() -> impl Strategy<Value = Jet1> {
    prop::collection::vec(-4i64..=4, K + 1).prop_map(|c| Jet1::from_ints(&c))
}

fn jet1_vanishing() -> impl Strategy<Value = Jet1> {
    prop::collection::vec(-3i64..=3, K).prop_map(|c| {
        let mut v = vec![0];
        v.extend(c);
        Jet1::from_ints(&v)
    })
}

fn jet2() -> impl Strategy<Value = Jet2> {
    let n = (K + 1) * (K + 2) / 2;
    prop::collection::vec(-3i64..=3, n).prop_map(|c| {
        let mut terms = Vec::new();
        let mut it = c.into_iter();
        for d in 0..=K {
            for j in 0..=d {
                terms.push(((d - j, j), it.next().unwrap()));
            }
        }
        Jet2::from_int_terms(&terms, K)
    })
}

fn germ(m: usize) -> impl Strategy<Value = CurveGerm> {
    prop::collection::vec(jet1_vanishing(), m).prop_map(|c| CurveGerm::new(c).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    // unit lower triangular times unit upper triangular
    (prop::collection::vec(-2i64..=2, n * n), prop::collection::vec(-2i64..=2, n * n)).prop_map(move |(l, u)| {
        let lower = |i: usize, j: usize| if i == j { 1 } else if j < i { l[i * n + j] } else { 0 };
        let upper = |i: usize, j: usize| if i == j { 1 } else if j > i { u[i * n + j] } else { 0 };
        (0..n).map(|i| (0..n).map(|j| rat((0..n).map(|k| lower(i, k) * upper(k, j)).sum(), 1)).collect()).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jet1_ring_axioms(a in jet1(), b in jet1(), c in jet1()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn jet1_order_is_additive(a in jet1(), b in jet1()) {
        if let (ExtOrder::Finite(p), ExtOrder::Finite(q)) = (a.order(), b.order()) {
            let prod = (&a * &b).order();
            if p + q <= K {
                prop_assert_eq!(prod, ExtOrder::Finite(p + q));
            } else {
                prop_assert_eq!(prod, ExtOrder::AboveTruncation);
            }
        }
    }

    #[test]
    fn jet1_division_round_trip(a in jet1(), b in jet1()) {
        if let ExtOrder::Finite(d) = b.order() {
            let q = (&a * &b).divide(&b).unwrap();
            prop_assert_eq!(q, a.truncate(K - d));
        }
    }

    #[test]
    fn jet1_derive_undoes_integration(a in jet1()) {
        prop_assert_eq!(a.integrate_weighted(0).derive(), a);
    }

    #[test]
    fn jet2_ring_axioms(a in jet2(), b in jet2(), c in jet2()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn jet2_division_round_trip(a in jet2(), b in jet2()) {
        if let ExtOrder::Finite(d) = b.order() {
            let q = (&a * &b).divide(&b).unwrap();
            prop_assert_eq!(q, a.truncate(K - d));
        }
    }

    #[test]
    fn jet2_derive_undoes_integration(a in jet2()) {
        for v in [Var::X, Var::Y] {
            prop_assert_eq!(a.integrate_weighted(v, 0).derive(v), a.clone());
        }
    }

    #[test]
    fn type_survives_reparametrization(g in germ(3), phi in jet1_vanishing(), c in 1i64..=3) {
        let mut p = phi.coeffs().to_vec();
        p[1] = rat(c, 1);
        let phi = Jet1::from_coeffs(p);
        prop_assert_eq!(curve_type(&g.reparametrize(&phi).unwrap()), curve_type(&g));
    }

    #[test]
    fn type_survives_chart_change(g in germ(3), m in invertible(3)) {
        prop_assert_eq!(curve_type(&g.linear_image(&m)), curve_type(&g));
    }

    #[test]
    fn projective_type_of_affine_lift(g in germ(3), m in invertible(4)) {
        let lift = g.homogeneous_lift();
        let k = g.truncation();
        let moved: Vec<Jet1> = m
            .iter()
            .map(|row| row.iter().zip(&lift).fold(Jet1::zero(k), |acc, (a, c)| &acc + &c.scale(a)))
            .collect();
        prop_assert_eq!(projective_type(&moved).unwrap(), curve_type(&g));
        if !moved[0].coeff(0).is_zero() {
            prop_assert_eq!(curve_type(&dehomogenize(&moved).unwrap()), curve_type(&g));
        }
    }

    #[test]
    fn normalize_isolates_type_degrees(g in germ(3)) {
        if let TypeVerdict::Finite(a) = curve_type(&g) {
            let (h, _) = normalize(&g).unwrap();
            for (i, c) in h.components().iter().enumerate() {
                for (j, &d) in a.entries().iter().enumerate() {
                    let want = if i == j { rat(1, 1) } else { rat(0, 1) };
                    prop_assert_eq!(c.coeff(d), &want);
                }
            }
        }
    }
}
