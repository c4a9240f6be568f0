use proptest::prelude::*;

use torzar::positivity::{
    is_big, is_d_big, is_psef, pair, pair_with, positive_product, restricted_volume, slope, vol,
};
use torzar::rational::{int, rat, to_f64, Rational};
use torzar::verifier::{check_kt, RandomSpec, Sampler};
use torzar::ToricClass;

fn sampler(seed: u64, n: usize) -> Sampler {
    let subdivisions = (seed % 3) as usize % if n == 2 { 3 } else { 2 };
    Sampler::new(&RandomSpec::new(seed, n).with_subdivisions(subdivisions))
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![3 => Just(2usize), 1 => Just(3usize)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn volume_is_positive_product(seed in any::<u64>(), n in dims()) {
        let mut s = sampler(seed, n);
        let a = s.psef();
        prop_assert_eq!(vol(&a), positive_product(&vec![&a; n]).unwrap());
        prop_assert_eq!(pair(&vec![&a; n - 1], &a).unwrap(), vol(&a));
    }

    #[test]
    fn monotone_in_each_argument(seed in any::<u64>(), n in dims()) {
        let mut s = sampler(seed, n);
        let small: Vec<ToricClass> = (0..n).map(|_| s.nef()).collect();
        let big: Vec<ToricClass> = small.iter().map(|b| b.add(&s.psef()).unwrap()).collect();
        let lo = positive_product(&small.iter().collect::<Vec<_>>()).unwrap();
        let hi = positive_product(&big.iter().collect::<Vec<_>>()).unwrap();
        prop_assert!(lo <= hi, "{} > {}", lo, hi);
    }

    #[test]
    fn khovanskii_teissier(seed in any::<u64>(), n in dims()) {
        let mut s = sampler(seed, n);
        let tuple: Vec<ToricClass> = (0..n).map(|_| s.psef()).collect();
        let r = check_kt(&tuple).unwrap();
        prop_assert!(r.verdict.passed(), "{:?}", r);
    }

    #[test]
    fn volume_root_is_midpoint_concave(seed in any::<u64>(), n in dims()) {
        let mut s = sampler(seed, n);
        let a = s.psef();
        let b = s.psef();
        let mid = a.add(&b).unwrap().scale(&rat(1, 2));
        let (w, x, y) = (vol(&mid), vol(&a), vol(&b));
        if n == 2 {
            // 2 sqrt(w) >= sqrt(x) + sqrt(y)  <=>  4w - x - y >= 0 and (4w - x - y)^2 >= 4xy
            let d = int(4) * &w - &x - &y;
            prop_assert!(d >= int(0));
            prop_assert!(&d * &d >= int(4) * &x * &y);
        } else {
            let lhs = to_f64(&w).cbrt();
            let rhs = (to_f64(&x).cbrt() + to_f64(&y).cbrt()) / 2.0;
            prop_assert!(lhs >= rhs - 1e-9);
        }
    }

    #[test]
    fn slope_lands_on_the_boundary(seed in any::<u64>(), n in dims()) {
        let mut s = sampler(seed, n);
        let a = s.big();
        let b = s.big();
        let t = slope(&a, &b).unwrap();
        prop_assert!(t > int(0));
        let (a2, b2) = torzar::positivity::align(&a, &b).unwrap();
        let edge = a2.add_scaled(&-t, &b2).unwrap();
        prop_assert!(is_psef(&edge));
        prop_assert!(!is_big(&edge));
        prop_assert_eq!(vol(&edge), int(0));
    }

    #[test]
    fn restricted_against_pairing(seed in any::<u64>(), n in dims()) {
        let mut s = sampler(seed, n);
        let a = s.big();
        let rho = s.ray();
        let delta = torzar::positivity::delta(a.fan(), rho);
        let rv = restricted_volume(&a, rho).unwrap();
        let p = pair(&vec![&a; n - 1], &delta).unwrap();
        prop_assert_eq!(&rv, &p);
        if !is_d_big(&a, rho).unwrap() {
            prop_assert_eq!(rv, int(0));
        }
    }

    #[test]
    fn pairing_is_linear_and_reference_free(seed in any::<u64>(), n in dims()) {
        let mut s = sampler(seed, n);
        let alphas: Vec<ToricClass> = (0..n - 1).map(|_| s.psef()).collect();
        let refs: Vec<&ToricClass> = alphas.iter().collect();
        let g1 = s.class();
        let g2 = s.class();
        let c: Rational = s.value();
        let sum = g1.add(&g2).unwrap();
        let p1 = pair(&refs, &g1).unwrap();
        let p2 = pair(&refs, &g2).unwrap();
        prop_assert_eq!(pair(&refs, &sum).unwrap(), &p1 + &p2);
        prop_assert_eq!(pair(&refs, &g1.scale(&c)).unwrap(), &p1 * &c);
        let m: Vec<Rational> = (0..n).map(|_| s.value()).collect();
        prop_assert_eq!(pair(&refs, &g1.add_linear(&m)).unwrap(), p1.clone());
        let omega = s.big_nef();
        prop_assume!(omega.is_strictly_convex());
        prop_assert_eq!(pair_with(&refs, &g1, Some(&omega)).unwrap(), p1);
    }
}
