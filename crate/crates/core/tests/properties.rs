use std::collections::BTreeSet;

use proptest::prelude::*;

use serre_core::rees::{corollary_check_r, Triple};
use serre_core::serre::DEFAULT_BOUND;
use serre_core::{
    check_face, check_r, cone_from_generators, degree2_decompose, hnf, ideal_min_gens,
    new_semigroup, numsgp_contains, primitive, rees_semigroup, Int, IntMat, IntVec, LambdaSpec,
};

fn v(x: &[i64]) -> IntVec {
    IntVec::from_i64s(x)
}

fn to_i64s(x: &IntVec) -> Vec<i64> {
    x.iter().map(|e| i64::try_from(e).unwrap()).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn mat(rows: &[Vec<i64>], n: usize) -> IntMat {
    IntMat::new(n, rows.iter().map(|r| v(r)).collect()).unwrap()
}

fn cross(a: &[i64], b: &[i64]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Facets of a full-dimensional cone in R^3: normals of generator pairs that
/// keep every generator on one side.
fn brute_force_facets(gens: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = cross(&gens[i], &gens[j]);
            if c == [0, 0, 0] {
                continue;
            }
            let g = c.iter().fold(0, |acc, &x| gcd(acc, x));
            let c: Vec<i64> = c.iter().map(|x| x / g).collect();
            let vals: Vec<i64> = gens
                .iter()
                .map(|x| x.iter().zip(&c).map(|(a, b)| a * b).sum())
                .collect();
            if vals.iter().all(|&x| x >= 0) {
                out.insert(c);
            } else if vals.iter().all(|&x| x <= 0) {
                out.insert(c.iter().map(|x| -x).collect());
            }
        }
    }
    out
}

fn gens_3d() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3..=8)
        .prop_filter("no zero rows", |g| {
            g.iter().all(|r| r.iter().any(|&x| x != 0))
        })
}

fn pointed_gens_3d() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0i64..=3, 3), 0..=5).prop_map(|mut extra| {
        extra.retain(|r| r.iter().any(|&x| x != 0));
        let mut g = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        g.extend(extra);
        g
    })
}

/// Ordered weight triples in `[1, 7]^3` with pairwise coprime entries.
fn coprime_weights() -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 1..=7 {
        for b in 1..=7 {
            for c in 1..=7 {
                if gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facets_match_brute_force(gens in gens_3d()) {
        let m = mat(&gens, 3);
        match cone_from_generators(&m) {
            Ok(cone) => {
                let got: BTreeSet<Vec<i64>> =
                    cone.facets().iter().map(|f| to_i64s(f.coeffs())).collect();
                // a non-pointed cone can be a half-space or all of R^3
                prop_assert_eq!(got, brute_force_facets(&gens));
            }
            Err(_) => {
                let rank = hnf(&m).rank();
                prop_assert!(rank < 3);
            }
        }
    }

    #[test]
    fn generator_order_does_not_matter(gens in pointed_gens_3d(), seed in any::<u64>()) {
        let s = new_semigroup(&mat(&gens, 3)).unwrap();
        let mut shuffled = gens.clone();
        let len = shuffled.len();
        for i in (1..len).rev() {
            shuffled.swap(i, (seed as usize).wrapping_add(i * 7919) % (i + 1));
        }
        let t = new_semigroup(&mat(&shuffled, 3)).unwrap();
        prop_assert_eq!(s.cone().facets(), t.cone().facets());
        for ell in 1..=3 {
            prop_assert_eq!(
                check_r(&s, ell, DEFAULT_BOUND).unwrap().overall,
                check_r(&t, ell, DEFAULT_BOUND).unwrap().overall
            );
        }
    }

    #[test]
    fn coordinate_permutation_permutes_facets(gens in pointed_gens_3d()) {
        let s = new_semigroup(&mat(&gens, 3)).unwrap();
        let swapped: Vec<Vec<i64>> = gens.iter().map(|g| vec![g[2], g[0], g[1]]).collect();
        let t = new_semigroup(&mat(&swapped, 3)).unwrap();
        let expect: BTreeSet<Vec<i64>> = s
            .cone()
            .facets()
            .iter()
            .map(|f| {
                let c = to_i64s(f.coeffs());
                vec![c[2], c[0], c[1]]
            })
            .collect();
        let got: BTreeSet<Vec<i64>> = t.cone().facets().iter().map(|f| to_i64s(f.coeffs())).collect();
        prop_assert_eq!(got, expect);
        prop_assert_eq!(
            check_r(&s, 2, DEFAULT_BOUND).unwrap().overall,
            check_r(&t, 2, DEFAULT_BOUND).unwrap().overall
        );
    }

    #[test]
    fn unimodular_image_has_same_verdicts(gens in pointed_gens_3d(), k in -3i64..=3) {
        // (x, y, z) -> (x + k y, y, z + y)
        let image: Vec<Vec<i64>> = gens.iter().map(|g| vec![g[0] + k * g[1], g[1], g[2] + g[1]]).collect();
        let s = new_semigroup(&mat(&gens, 3)).unwrap();
        let t = new_semigroup(&mat(&image, 3)).unwrap();
        prop_assert_eq!(s.cone().facets().len(), t.cone().facets().len());
        for ell in 1..=3 {
            prop_assert_eq!(
                check_r(&s, ell, DEFAULT_BOUND).unwrap().overall,
                check_r(&t, ell, DEFAULT_BOUND).unwrap().overall
            );
        }
    }

    #[test]
    fn holding_faces_have_free_localisation(gens in pointed_gens_3d()) {
        // when a face passes, the images of its witnesses are a free basis:
        // the witness matrix against the facet forms is the identity
        let s = new_semigroup(&mat(&gens, 3)).unwrap();
        let report = check_r(&s, 3, DEFAULT_BOUND).unwrap();
        for fv in report.verdicts.iter().filter(|fv| fv.holds()) {
            let Some(ws) = &fv.gamma_witnesses else { continue };
            for (i, f) in fv.facet_forms.iter().enumerate() {
                for (j, w) in ws.iter().enumerate() {
                    prop_assert_eq!(f.eval(w), Int::from(i64::from(i == j)));
                }
            }
            prop_assert_eq!(fv.facet_forms.len(), fv.k);
        }
    }

    #[test]
    fn min_gens_form_the_minimal_antichain(lambda in prop::collection::vec(1u64..=6, 2..=3)) {
        let spec = LambdaSpec::from_u64s(&lambda).unwrap();
        let l = spec.l().clone();
        let omega = spec.omega().to_vec();
        let weight = |a: &[i64]| -> Int { a.iter().zip(&omega).map(|(x, w)| Int::from(*x) * w).sum() };

        // brute force over the box [0, λ]
        let mut all: Vec<Vec<i64>> = vec![vec![]];
        for &b in &lambda {
            all = all
                .into_iter()
                .flat_map(|p| (0..=b as i64).map(move |x| { let mut p = p.clone(); p.push(x); p }))
                .collect();
        }
        let upset: Vec<&Vec<i64>> = all.iter().filter(|a| weight(a) >= l).collect();
        let mut minimal: Vec<Vec<i64>> = upset
            .iter()
            .filter(|a| !upset.iter().any(|b| b != *a && b.iter().zip(a.iter()).all(|(x, y)| x <= y)))
            .map(|a| (*a).clone())
            .collect();
        minimal.sort();
        let got: Vec<Vec<i64>> = ideal_min_gens(&spec).rows().iter().map(to_i64s).collect();
        prop_assert_eq!(got, minimal);
    }

    #[test]
    fn sigma_faces_pass_the_group_test(lambda in prop::collection::vec(1u64..=6, 2..=4)) {
        let spec = LambdaSpec::from_u64s(&lambda).unwrap();
        let s = rees_semigroup(&spec).unwrap();
        let n = lambda.len();
        let sigma_index = s.cone().facets().iter().position(|f| f == &spec.sigma()).unwrap();
        for face in s.cone().faces_up_to_codim(n).into_iter().filter(|f| f.codim() > 0) {
            let fv = check_face(&s, &face, DEFAULT_BOUND).unwrap();
            if face.facet_set().contains(&sigma_index) {
                if fv.facet_count_ok {
                    prop_assert!(fv.group_ok, "face {:?}", face.facet_set());
                }
            } else if face.codim() <= n {
                // faces cut out by coordinate hyperplanes only
                prop_assert!(fv.holds(), "face {:?} of {:?}", face.facet_set(), lambda);
            }
        }
    }

    #[test]
    fn fast_path_matches_general_checker(lambda in prop::collection::vec(1u64..=6, 3)) {
        let spec = LambdaSpec::from_u64s(&lambda).unwrap();
        let s = rees_semigroup(&spec).unwrap();
        for r in 2..=3 {
            let fast = corollary_check_r(&spec, r).unwrap().holds;
            let general = check_r(&s, r, DEFAULT_BOUND).unwrap();
            prop_assert_eq!(fast, general.holds(), "lambda {:?} r {}", lambda, r);
        }
    }

    #[test]
    fn two_generator_conductor(a in 1i64..=12, b in 1i64..=12, t in 0i64..=200) {
        prop_assume!(gcd(a, b) == 1);
        let gens = [Int::from(a), Int::from(b)];
        let member = numsgp_contains(&Int::from(t), &gens).unwrap();
        if t >= (a - 1) * (b - 1) {
            prop_assert!(member);
        }
        let direct = (0..=t / a).any(|x| (t - x * a) % b == 0);
        prop_assert_eq!(member, direct);
    }

    #[test]
    fn degree2_postcondition(
        pick in any::<prop::sample::Index>(),
        u_raw in 0i64..10_000,
        v_raw in 0i64..10_000,
        extra_raw in 0i64..7,
    ) {
        let w = {
            let all = coprime_weights();
            all[pick.index(all.len())]
        };
        let l = w[0] * w[1] * w[2];
        let max = *w.iter().max().unwrap();
        let target = 2 * l + extra_raw % max;
        let u = u_raw % (target / w[0] + 1);
        let vv = v_raw % ((target - u * w[0]) / w[1] + 1);
        let partial = u * w[0] + vv * w[1];
        let third = (target - partial + w[2] - 1) / w[2];
        let exps = [u, vv, third];
        let total = partial + third * w[2];
        prop_assume!(total < 2 * l + max);
        let (p, q) = degree2_decompose(&exps.map(Int::from), &w.map(Int::from) as &Triple).unwrap();
        let p: Vec<i64> = p.iter().map(|x| i64::try_from(x).unwrap()).collect();
        let q: Vec<i64> = q.iter().map(|x| i64::try_from(x).unwrap()).collect();
        for i in 0..3 {
            prop_assert!(p[i] >= 0 && q[i] >= 0);
            prop_assert_eq!(p[i] + q[i], exps[i]);
        }
        prop_assert!(p.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>() >= l);
        prop_assert!(q.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>() >= l);
    }
}

#[test]
fn primitive_is_idempotent() {
    for x in [[4, -6, 8], [0, 0, 5], [-7, 0, 14]] {
        let p = primitive(&v(&x)).unwrap();
        assert_eq!(primitive(p.coeffs()).unwrap(), p);
    }
}
