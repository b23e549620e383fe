mod common;

use common::checks::{self, Outcome};
use common::*;
use deltamat::bits;
use deltamat::poly::{self, TransitionWeights};
use deltamat::{Field, Graph, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;

fn pass(o: Outcome) {
    if let Err(e) = o {
        panic!("{e}");
    }
}

#[test]
fn transition_recursion_matches_direct_sum() {
    pass(checks::transition_recursive_matches_direct(&mut rng(11), 50));
}

#[test]
fn penrose_three_routes() {
    pass(checks::penrose_routes_agree(&mut rng(12), 30));
}

#[test]
fn p1_graph_recursion_matches_direct_sum() {
    pass(checks::p1_graph_routes_agree(&mut rng(13), 100));
}

#[test]
fn four_way_symmetry() {
    pass(checks::multivariate_symmetry(&mut rng(14), 25));
}

#[test]
fn even_systems_sign_laws() {
    pass(checks::even_sign_laws(&mut rng(15), 25));
}

#[test]
fn group_action_relations() {
    pass(checks::s3_relations(&mut rng(16), 200));
}

#[test]
fn pivot_determinant_identity() {
    pass(checks::tucker_identity(&mut rng(17), 60));
}

#[test]
fn diagonal_complement_is_loop_complement() {
    pass(checks::pu_loop_complement(&mut rng(18), 60));
}

#[test]
fn inv_symmetric_matrices_are_pu() {
    pass(checks::inv_symmetric_minors(&mut rng(19), 200));
}

#[test]
fn bicycle_kernel_by_enumeration() {
    pass(checks::matrix_bicycle_kernels(&mut rng(20), 15));
}

#[test]
fn bicycle_matroid_independent_of_representation() {
    pass(checks::representation_independence(&mut rng(21), 8, 2));
}

#[test]
fn max_matroids_mutually_orthogonal() {
    pass(checks::max_matroids_orthogonal(&mut rng(22), 40));
}

#[test]
fn eulerian_dual_to_bipartite() {
    pass(checks::eulerian_bipartite_duality(&mut rng(23), 60));
}

#[test]
fn interlace_sum_is_transition_at_ones() {
    pass(checks::interlace_identity(&mut rng(24), 30));
}

#[test]
fn penrose_sign_under_loop_complement() {
    let mut r = rng(25);
    for _ in 0..40 {
        let n = r.gen_range(0..=7);
        let m = checks::random_vf_safe(&mut r, n);
        let z = random_subset(&mut r, n);
        let p = poly::penrose_direct(&m).unwrap();
        let pz = poly::penrose_direct(&m.loop_complement(z).unwrap()).unwrap();
        let want = if z.count_ones() % 2 == 0 { p.clone() } else { -p.clone() };
        assert_eq!(pz, want, "{m}");
        if n > 0 {
            assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(0));
        }
    }
}

#[test]
fn penrose_degree_bound_on_matroids() {
    let mut r = rng(26);
    for k in 0..40 {
        let n = r.gen_range(1..=7);
        let rank = r.gen_range(0..=n);
        let field = if k % 2 == 0 { Field::Gf2 } else { Field::Gf4 };
        let m = random_represented(&mut r, field, rank, n);
        let ss = m.set_system();
        let p = poly::penrose_direct(ss).unwrap();
        let bound = ss.twist(ss.ground().full()).unwrap().d().unwrap();
        match p.degree() {
            None => {}
            Some(d) => assert_eq!(d, bound, "{ss}: {p}"),
        }
    }
}

#[test]
fn tutte_specialization_of_transition() {
    let mut r = rng(27);
    let samples: Vec<BigRational> = (-3..=3).map(|y| BigRational::from_integer(y.into())).collect();
    let weights = [(1, 1), (2, -1), (-3, 2)];
    for k in 0..20 {
        let n = r.gen_range(0..=6);
        let rank = r.gen_range(0..=n);
        let m = random_represented(&mut r, if k % 2 == 0 { Field::Gf2 } else { Field::Gf4 }, rank, n);
        let (a, b) = weights[k % weights.len()];
        let (a, b) = (BigRational::from_integer(a.into()), BigRational::from_integer(b.into()));
        for c in poly::verify_transition_tutte(&m, &a, &b, &samples).unwrap() {
            assert!(c.holds(), "{}: y = {}: {} vs {}", m.set_system(), c.y, c.lhs, c.rhs);
        }
    }
}

#[test]
fn chen_parity() {
    let mut r = rng(28);
    for k in 0..40 {
        let n = r.gen_range(1..=7);
        let rank = r.gen_range(0..=n);
        let m = random_represented(&mut r, if k % 2 == 0 { Field::Gf2 } else { Field::Gf4 }, rank, n);
        let q = deltamat::bicycle::bicycle_dimension(m.set_system(), m.ground().full()).unwrap();
        assert_eq!(m.bases().len() % 2 == 1, q == 0, "{}", m.set_system());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn p1_sign_under_twist(seed in any::<u64>(), n in 0usize..=7, x in any::<u64>()) {
        let m = random_set_system(&mut rng(seed), n, 0.3);
        let x = x & bits::full(n);
        let p = poly::p1(&m).unwrap();
        let want = if x.count_ones() % 2 == 0 { p.clone() } else { -p.clone() };
        prop_assert_eq!(poly::p1(&m.twist(x).unwrap()).unwrap(), want);
        if n > 0 {
            prop_assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(0));
        }
    }

    #[test]
    fn transition_at_one_counts_subsets(seed in any::<u64>(), n in 0usize..=7) {
        let m = random_set_system(&mut rng(seed), n, 0.25);
        let q = poly::transition_direct(&m, &TransitionWeights::from_ints(1, 1, 0)).unwrap();
        prop_assert_eq!(q.eval(&BigRational::from_integer(1.into())), BigRational::from_integer(BigInt::from(1u64 << n)));
    }

    #[test]
    fn graph_from_its_small_sets(seed in any::<u64>(), n in 0usize..=7, loops in any::<bool>()) {
        let g = random_graph(&mut rng(seed), n, loops);
        prop_assert_eq!(Graph::from_small_sets(&g.delta_matroid()).unwrap(), g);
    }

    #[test]
    fn empty_ground_transition_is_one(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3) {
        let q = poly::transition_direct(&deltamat::SetSystem::trivial(), &TransitionWeights::from_ints(a, b, c)).unwrap();
        prop_assert_eq!(q, IntPoly::one().to_rational());
    }
}

#[test]
fn penrose_is_transition_specialization() {
    let mut r = rng(29);
    for _ in 0..40 {
        let n = r.gen_range(0..=7);
        let m = random_set_system(&mut r, n, 0.3);
        let p = poly::penrose_direct(&m).unwrap().to_rational();
        let q = poly::transition_direct(&m, &TransitionWeights::from_ints(0, 1, -1)).unwrap();
        assert_eq!(p, q, "{m}");
        let p1 = poly::p1(&m).unwrap().to_rational();
        let q1 = poly::transition_direct(&m, &TransitionWeights::from_ints(1, -1, 0)).unwrap();
        assert_eq!(p1, q1, "{m}");
    }
}
