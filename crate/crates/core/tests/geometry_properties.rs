use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torzar::linalg;
use torzar::rational::{int, rat, to_f64, Rational};
use torzar::verifier::{RandomSpec, Sampler};
use torzar::{fan, lattice, mixed_volume, Fan, HalfSpace, Polytope, ToricClass};

fn pts(rng: &mut ChaCha8Rng, n: usize) -> Polytope {
    let count = rng.gen_range(n + 1..=n + 4);
    let points: Vec<Vec<Rational>> = (0..count).map(|_| (0..n).map(|_| int(rng.gen_range(-3..=3))).collect()).collect();
    Polytope::hull(&points).unwrap()
}

fn h_form(rng: &mut ChaCha8Rng, n: usize) -> Polytope {
    let mut hs = Vec::new();
    for i in 0..n {
        for s in [1i64, -1] {
            let mut e = vec![0i64; n];
            e[i] = s;
            hs.push(HalfSpace::new(lattice(&e), int(rng.gen_range(1..=4))));
        }
    }
    for _ in 0..rng.gen_range(1..=4) {
        let normal: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        hs.push(HalfSpace::new(lattice(&normal), rat(rng.gen_range(-2..=8), rng.gen_range(1..=3))));
    }
    Polytope::from_halfspaces(n, hs).unwrap()
}

fn sorted_vertices(p: &Polytope) -> Vec<Vec<Rational>> {
    let mut v = p.vertices().unwrap().to_vec();
    v.sort();
    v
}

/// Every facet inequality of `b` holds on `a`.
fn contained(a: &Polytope, b: &Polytope) -> bool {
    b.halfspaces().iter().all(|h| a.support_int(&h.normal).unwrap() <= h.bound)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hull_of_vertices_is_same_set(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = h_form(&mut rng, n);
        prop_assume!(!p.is_empty().unwrap());
        let q = Polytope::hull(p.vertices().unwrap()).unwrap();
        prop_assert!(contained(&p, &q));
        prop_assert!(contained(&q, &p));
        prop_assert_eq!(p.volume().unwrap(), q.volume().unwrap());
    }

    #[test]
    fn mixed_volume_symmetric_and_diagonal(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ps: Vec<Polytope> = (0..n).map(|_| pts(&mut rng, n)).collect();
        let refs: Vec<&Polytope> = ps.iter().collect();
        let base = mixed_volume(&refs).unwrap();
        let mut rev = refs.clone();
        rev.reverse();
        prop_assert_eq!(&base, &mixed_volume(&rev).unwrap());
        let mut rot = refs.clone();
        rot.rotate_left(1);
        prop_assert_eq!(&base, &mixed_volume(&rot).unwrap());
        let diag = vec![&ps[0]; n];
        prop_assert_eq!(mixed_volume(&diag).unwrap(), ps[0].volume().unwrap());
    }

    #[test]
    fn brunn_minkowski(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = pts(&mut rng, n);
        let q = pts(&mut rng, n);
        let a = p.volume().unwrap();
        let b = q.volume().unwrap();
        let w = p.minkowski_sum(&q).unwrap().volume().unwrap();
        if n == 2 {
            // sqrt(w) >= sqrt(a) + sqrt(b)  <=>  w - a - b >= 0 and (w - a - b)^2 >= 4ab
            let d = &w - &a - &b;
            prop_assert!(d >= int(0));
            prop_assert!(&d * &d >= int(4) * &a * &b);
        } else {
            let lhs = to_f64(&w).cbrt();
            let rhs = to_f64(&a).cbrt() + to_f64(&b).cbrt();
            prop_assert!(lhs >= rhs - 1e-9);
        }
    }

    #[test]
    fn pl_value_agrees_across_facets(seed in any::<u64>(), n in 2usize..=3, subdivisions in 0usize..=2) {
        let mut s = Sampler::new(&RandomSpec::new(seed, n).with_subdivisions(subdivisions));
        let alpha = s.class();
        let f = alpha.fan().clone();
        for (i, ci) in f.cones().iter().enumerate() {
            for (j, cj) in f.cones().iter().enumerate().skip(i + 1) {
                let shared: Vec<usize> = ci.iter().copied().filter(|r| cj.contains(r)).collect();
                if shared.len() != n - 1 {
                    continue;
                }
                let mut v = vec![int(0); n];
                for &r in &shared {
                    for (k, x) in linalg::to_rational(f.ray(r)).into_iter().enumerate() {
                        v[k] += x;
                    }
                }
                let mi = f.linear_piece(alpha.values(), i);
                let mj = f.linear_piece(alpha.values(), j);
                prop_assert_eq!(linalg::dot(&mi, &v), linalg::dot(&mj, &v));
            }
        }
    }

    #[test]
    fn newton_translates_with_linear_forms(seed in any::<u64>(), n in 2usize..=3) {
        let mut s = Sampler::new(&RandomSpec::new(seed, n));
        let alpha = s.psef();
        let m: Vec<Rational> = (0..n).map(|_| s.value()).collect();
        let shifted = alpha.add_linear(&m);
        let expect = alpha.newton_polytope().translate(&m).unwrap();
        prop_assert_eq!(sorted_vertices(shifted.newton_polytope()), sorted_vertices(&expect));
    }

    #[test]
    fn minorant_idempotent_and_homogeneous(seed in any::<u64>(), n in 2usize..=3, subdivisions in 0usize..=1) {
        let mut s = Sampler::new(&RandomSpec::new(seed, n).with_subdivisions(subdivisions));
        let alpha = s.psef();
        let (nef, gaps) = alpha.convex_minorant().unwrap();
        let positive = nef.on_fan(alpha.fan().clone()).unwrap();
        let (_, again) = positive.convex_minorant().unwrap();
        prop_assert!(again.iter().all(|g| *g == int(0)));
        for k in [2i64, 3, 7] {
            let scaled = alpha.scale(&int(k));
            let (_, kg) = scaled.convex_minorant().unwrap();
            let want: Vec<Rational> = gaps.iter().map(|g| g * int(k)).collect();
            prop_assert_eq!(kg, want);
            let kv: Vec<Vec<Rational>> =
                sorted_vertices(alpha.newton_polytope()).into_iter().map(|v| v.iter().map(|x| x * int(k)).collect()).collect();
            prop_assert_eq!(sorted_vertices(scaled.newton_polytope()), kv);
        }
    }

    #[test]
    fn nef_tests_agree(seed in any::<u64>(), n in 2usize..=3, subdivisions in 0usize..=2) {
        let mut s = Sampler::new(&RandomSpec::new(seed, n).with_subdivisions(subdivisions));
        for c in [s.class(), s.psef(), s.nef()] {
            prop_assert_eq!(c.is_nef(), c.is_nef_on_refinement().unwrap());
            prop_assert_eq!(c.is_nef(), torzar::positivity::is_nef(&c));
        }
    }

    #[test]
    fn restating_on_a_refinement_changes_nothing(seed in any::<u64>(), n in 2usize..=3) {
        let mut s = Sampler::new(&RandomSpec::new(seed, n));
        let alpha = s.psef();
        let faces = alpha.fan().faces(2);
        let face = &faces[(seed as usize) % faces.len()];
        let (fine, _) = alpha.fan().stellar_subdivision(face).unwrap();
        let moved = alpha.restate(&std::sync::Arc::new(fine));
        prop_assert_eq!(sorted_vertices(moved.newton_polytope()), sorted_vertices(alpha.newton_polytope()));
        prop_assert_eq!(torzar::positivity::vol(&moved), torzar::positivity::vol(&alpha));
    }
}

/// `lambda` with `v = sum lambda_i r_i` over the rays of a simplicial cone.
fn cone_coordinates(f: &Fan, cone: &[usize], v: &[Rational]) -> Vec<Rational> {
    let n = f.dim();
    let rows: Vec<Vec<Rational>> =
        (0..n).map(|i| cone.iter().map(|&r| Rational::from_integer(f.ray(r)[i].clone())).collect()).collect();
    linalg::solve(&rows, v).unwrap()
}

fn inside(f: &Fan, v: &[Rational]) -> Vec<usize> {
    (0..f.cones().len()).filter(|&c| cone_coordinates(f, &f.cones()[c], v).iter().all(|x| *x >= int(0))).collect()
}

fn check_refines(fine: &Fan, coarse: &Fan) {
    for cone in fine.cones() {
        let mut bary = vec![int(0); fine.dim()];
        for &r in cone {
            for (k, x) in linalg::to_rational(fine.ray(r)).into_iter().enumerate() {
                bary[k] += x;
            }
        }
        let hosts = inside(coarse, &bary);
        assert_eq!(hosts.len(), 1, "interior point of {cone:?} lies in a unique coarse cone");
        let host = &coarse.cones()[hosts[0]];
        for &r in cone {
            let lambda = cone_coordinates(coarse, host, &linalg::to_rational(fine.ray(r)));
            assert!(lambda.iter().all(|x| *x >= int(0)), "ray {r} of {cone:?} inside {host:?}");
        }
    }
}

#[test]
fn common_refinement_refines_both() {
    for seed in 0..24u64 {
        let n = if seed % 3 == 2 { 3 } else { 2 };
        let a = Sampler::new(&RandomSpec::new(seed, n).with_subdivisions(1)).fan.clone();
        let b = Sampler::new(&RandomSpec::new(seed + 4, n).with_subdivisions(2)).fan.clone();
        let c = fan::common_refinement(&a, &b).unwrap();
        check_refines(&c, &a);
        check_refines(&c, &b);
        assert!(fan::refines(&c, &a) && fan::refines(&c, &b));
    }
}

#[test]
fn lattice_points_approach_volume() {
    let n = 2;
    let tri = Polytope::hull(&[vec![int(0), int(0)], vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap();
    let square = Polytope::hull(&[vec![int(0), int(0)], vec![int(1), int(0)], vec![int(0), int(1)], vec![int(1), int(1)]]).unwrap();
    let kite = Polytope::hull(&[vec![int(0), int(0)], vec![int(2), int(-1)], vec![int(2), int(-2)], vec![int(1), int(0)]]).unwrap();
    let cube3 = Polytope::hull(&[
        vec![int(0), int(0), int(0)],
        vec![int(1), int(0), int(0)],
        vec![int(0), int(1), int(0)],
        vec![int(0), int(0), int(1)],
    ])
    .unwrap();
    let k = 8i64;
    for (p, dim) in [(tri, n), (square, n), (kite, n), (cube3, 3)] {
        let count = p.scale(&int(k)).unwrap().lattice_points().unwrap();
        let v = p.volume().unwrap();
        let ratio = Rational::from_integer((count as i64).into()) / int(k.pow(dim as u32));
        let diff = &ratio - &v;
        let rel = if diff < int(0) { -diff / &v } else { diff / &v };
        assert!(rel <= rat(3 * dim as i64, k), "relative error {rel}");
    }
}

#[test]
fn stellar_subdivision_of_plane_is_blowup() {
    let p2 = Fan::projective_space(2);
    let (bl, new) = p2.stellar_subdivision(&[0, 1]).unwrap();
    assert_eq!(bl.rays().len(), 4);
    assert_eq!(bl.ray(new), &lattice(&[1, 1]));
    let e = ToricClass::ray_divisor(std::sync::Arc::new(bl), new);
    assert!(!e.is_nef());
}
