#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;

use common::{half_step, quadric_with_distortion, random_planar, random_quadric, rng, EpsSign};
use tropdual::classical::sylvester_resultant;
use tropdual::matrix::{trop_adjoint_seq, trop_det, trop_minor};
use tropdual::quadric::{
    classify_by_distortion, distortion_matrix, dual_quadric, g_factor, is_regular, minor_by_paths, poly_from_matrix,
    quadric_det, DistortionClass, QuadricMatrix, RegularityStatus,
};
use tropdual::semiring::{rat, Rational, TropValue};
use tropdual::subdivision::{
    induced_subdivision, is_complete, midpoint_distortion, node_classification, LiftedPoints, NodeClass,
};
use tropdual::symbolic::{sym_adjoint, SymbolicMatrix, SymbolicPoly};
use tropdual::tropicalize::tropicalize;
use tropdual::{Sign, TropPolynomial};

fn big(q: Rational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

fn random_rational_matrix(r: &mut impl Rng, n: usize, symmetric: bool) -> SymbolicMatrix {
    let mut rows = vec![vec![BigRational::from_integer(0.into()); n]; n];
    for i in 0..n {
        for j in 0..n {
            if symmetric && j < i {
                rows[i][j] = rows[j][i].clone();
            } else {
                rows[i][j] = big(half_step(r, -5, 5));
            }
        }
    }
    SymbolicMatrix::from_rationals(&rows).unwrap()
}

#[test]
fn adjugate_twice_scales_by_det_power() {
    let mut r = rng(11);
    for n in 2..=5 {
        for _ in 0..20 {
            let c = random_rational_matrix(&mut r, n, n % 2 == 1);
            let d = c.det();
            let twice = c.adjugate().adjugate();
            assert!(twice.same_as(&c.scale(&d.pow(n as u32 - 2))), "n = {n}");
        }
    }
}

#[test]
fn double_dual_identity_for_rational_conics() {
    let mut r = rng(12);
    for _ in 0..50 {
        let c = random_rational_matrix(&mut r, 3, true);
        let twice = sym_adjoint(&sym_adjoint(&c).unwrap()).unwrap();
        assert!(twice.same_as(&c.scale(&-&c.det())));
    }
}

/// Values of the generic symmetric matrix of side `size`, keyed `c1, c2, ...`.
fn valuation(a: &QuadricMatrix) -> BTreeMap<String, TropValue> {
    let names = SymbolicMatrix::generic_symmetric_names(a.size());
    let mut val = BTreeMap::new();
    for i in 0..a.size() {
        for j in i..a.size() {
            val.insert(names[i][j].clone(), a.get(i, j));
        }
    }
    val
}

#[test]
fn commuting_square_beyond_conics() {
    let mut r = rng(13);
    for size in 3..=5 {
        let star = sym_adjoint(&SymbolicMatrix::generic_symmetric(size)).unwrap();
        for _ in 0..60 {
            let a = random_quadric(&mut r, size, 0.15);
            let dual = dual_quadric(&a).unwrap();
            let val = valuation(&a);
            for i in 0..size {
                for j in 0..size {
                    let t = tropicalize(star.get(i, j), &val, &[]).unwrap().value().unwrap();
                    assert_eq!(t, dual.get(i, j), "size {size} entry ({i},{j}) of\n{a}");
                }
            }
        }
    }
}

#[test]
fn resultant_vanishes_on_common_factor_and_is_multiplicative() {
    let vars = ["x"];
    let mut r = rng(14);
    let poly = |r: &mut rand_chacha::ChaCha8Rng| {
        let deg = r.gen_range(1..=3);
        let terms = (0..=deg).map(|k| {
            let mut c = r.gen_range(-4..=4);
            if k == deg && c == 0 {
                c = 1;
            }
            (vec![k as u32], BigRational::from_integer(c.into()))
        });
        SymbolicPoly::from_terms(&vars, terms.collect::<Vec<_>>())
    };
    for _ in 0..100 {
        let (p, q1, q2) = (poly(&mut r), poly(&mut r), poly(&mut r));
        assert!(sylvester_resultant(&p, &(&p * &q1), "x").unwrap().is_zero());
        let lhs = sylvester_resultant(&p, &(&q1 * &q2), "x").unwrap();
        let rhs = &sylvester_resultant(&p, &q1, "x").unwrap() * &sylvester_resultant(&p, &q2, "x").unwrap();
        assert!((&lhs - &rhs).is_zero(), "{p} ; {q1} ; {q2}");
    }
}

#[test]
fn negative_distortion_dual_is_path_closure() {
    for size in 3..=7 {
        let mut r = rng(15 + size as u64);
        for _ in 0..80 {
            let a = quadric_with_distortion(&mut r, size, EpsSign::Negative);
            let e = distortion_matrix(&a).unwrap();
            let e_star = distortion_matrix(&dual_quadric(&a).unwrap()).unwrap();
            for i in 1..=size {
                for j in 1..=size {
                    let m = trop_det(&trop_minor(e.matrix(), i, j).unwrap()).unwrap().value;
                    if i == j {
                        assert_eq!(m, TropValue::ONE);
                    } else {
                        assert!(m.is_negative());
                    }
                    assert_eq!(e_star.get(i - 1, j - 1), minor_by_paths(&e, i, j).unwrap());
                }
            }
        }
    }
}

#[test]
fn lifting_constant_for_negative_distortion() {
    let mut seen_regular = 0;
    for size in 3..=7 {
        let mut r = rng(16 + size as u64);
        for _ in 0..120 {
            let a = quadric_with_distortion(&mut r, size, EpsSign::Negative);
            let v = is_regular(&a).unwrap();
            if v.status != RegularityStatus::Regular {
                continue;
            }
            seen_regular += 1;
            let det = quadric_det(&a).unwrap().value.finite().unwrap();
            assert_eq!(v.lifting_constant, Some(det * (size as i64 - 2)), "size {size}");
            if size == 3 {
                assert_eq!(v.lifting_constant, Some(det));
            }
        }
    }
    assert!(seen_regular > 50);
}

#[test]
fn g_factor_identity() {
    let mut r = rng(17);
    for size in 2..=6 {
        let a = random_quadric(&mut r, size, 0.0);
        for i in 1..=size {
            for j in 1..=size {
                let lhs = g_factor(&a, i, i).unwrap().finite().unwrap() + g_factor(&a, j, j).unwrap().finite().unwrap();
                assert_eq!(lhs, g_factor(&a, j, i).unwrap().finite().unwrap() * 2);
            }
        }
    }
}

#[test]
fn conic_node_appearance_follows_the_chord_rule() {
    let mut r = rng(18);
    for _ in 0..300 {
        let a = quadric_with_distortion(&mut r, 3, EpsSign::Any);
        let f = poly_from_matrix(&a).unwrap();
        let s = induced_subdivision(&f, Sign::Examples).unwrap();
        let lifted = LiftedPoints::new(&f, Sign::Examples);
        for (node, ends) in [([1, 1], ([2, 0], [0, 2])), ([1, 0], ([2, 0], [0, 0])), ([0, 1], ([0, 2], [0, 0]))] {
            let d = midpoint_distortion(&lifted, &ends.0, &ends.1).unwrap();
            assert_eq!(s.appearing_nodes.contains(node.as_slice()), d < rat(0, 1), "{a}");
        }
        let class = node_classification(&s);
        match classify_by_distortion(&distortion_matrix(&a).unwrap()) {
            DistortionClass::AllNegative => assert_eq!(class, NodeClass::MaximalInNodes),
            DistortionClass::AllPositive => assert_eq!(class, NodeClass::MinimalInNodes),
            DistortionClass::Mixed => {}
        }
    }
}

#[test]
fn complete_subdivisions_are_maximal_in_nodes() {
    let mut r = rng(19);
    let mut complete = 0;
    for _ in 0..400 {
        let deg = r.gen_range(1..=3);
        let lattice: Vec<Vec<i64>> = (0..=deg).flat_map(|i| (0..=deg - i).map(move |j| vec![i, j])).collect();
        let terms: Vec<_> = lattice.into_iter().map(|e| (e, TropValue::Finite(half_step(&mut r, -8, 8)))).collect();
        let f = TropPolynomial::new(2, terms).unwrap();
        let s = induced_subdivision(&f, Sign::Examples).unwrap();
        if is_complete(&s).unwrap() {
            complete += 1;
            assert_eq!(node_classification(&s), NodeClass::MaximalInNodes, "{f}");
        }
    }
    assert!(complete > 20, "only {complete} complete subdivisions sampled");
}

#[test]
fn kapranov_sign_is_negated_coefficients() {
    let mut r = rng(20);
    for _ in 0..100 {
        let f = random_planar(&mut r, 4);
        let neg = TropPolynomial::new(2, f.terms().map(|(e, a)| (e.clone(), TropValue::Finite(-a.finite().unwrap()))))
            .unwrap();
        let k = induced_subdivision(&f, Sign::Kapranov).unwrap();
        let e = induced_subdivision(&neg, Sign::Examples).unwrap();
        assert_eq!(k.cells, e.cells);
        assert_eq!(k.appearing_nodes, e.appearing_nodes);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subdivision_is_translation_invariant(seed in any::<u64>(), shift in -20i64..20) {
        let f = random_planar(&mut rng(seed), 4);
        let g = f.shift(Rational::from_integer(shift));
        let (sf, sg) = (induced_subdivision(&f, Sign::Examples).unwrap(), induced_subdivision(&g, Sign::Examples).unwrap());
        prop_assert_eq!(sf.appearing_nodes, sg.appearing_nodes);
        prop_assert_eq!(sf.edges, sg.edges);
    }

    #[test]
    fn dual_shifts_with_the_matrix(seed in any::<u64>(), size in 2usize..=6, shift in -10i64..10) {
        let a = random_quadric(&mut rng(seed), size, 0.1);
        let c = TropValue::int(shift);
        let shifted = QuadricMatrix::new(a.matrix().shift(c)).unwrap();
        let lhs = dual_quadric(&shifted).unwrap();
        let rhs = dual_quadric(&a).unwrap().matrix().shift(TropValue::int(shift * (size as i64 - 1)));
        prop_assert_eq!(lhs.matrix(), &rhs);
        prop_assert_eq!(is_regular(&a).unwrap().status, is_regular(&shifted).unwrap().status);
    }

    #[test]
    fn adjoint_paths_agree(seed in any::<u64>(), size in 2usize..=7) {
        let a = random_quadric(&mut rng(seed), size, 0.2);
        prop_assert_eq!(trop_adjoint_seq(a.matrix()).unwrap(), dual_quadric(&a).unwrap().matrix().clone());
    }
}
