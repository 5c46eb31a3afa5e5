use proptest::prelude::*;

use coxkit::algebra::{nullspace, rank, ratio, QMat, QScalar, Rational};
use coxkit::bialgebra::{cybe_defect_mixed, dy_tensor, omega_is_dy_endomorphism, sl2_borel, verify_dy};
use coxkit::braid::{coxeter_labels_from_gcm, verify_braid_relation, BraidRep, CoxeterLabel};
use coxkit::catalog::{classify_indecomposable, GcmType};
use coxkit::diagram::{
    canonical_section, chain_to_nested_set, enumerate_nested_sets, validate_nested_set, vertical_decompose, vertical_union, Diagram, VSet,
};
use coxkit::fixtures::Fixture;
use coxkit::hopf::{cyclic_group_algebra, db_module_from_dy, dy_from_db_module, hopf_dy_tensor, quantum_double, sweedler, verify_hopf_dy, yang_baxter, HopfDYModule};
use coxkit::quantum::{build_sl2_module, classical_limit_signs, QuantumGroupData};
use coxkit::realization::{cartan_diagrammatic_test, int_matrix, is_morphism, minimal_realization, morphism_space, Verdict};
use coxkit::report::all_passed;
use coxkit::suites::borel_fixtures;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn qscalar() -> impl Strategy<Value = QScalar> {
    prop::collection::vec((small_rational(), -4i64..=4, prop::sample::select(vec![1i64, 2, 4])), 0..4).prop_map(|terms| {
        terms.into_iter().fold(QScalar::zero(), |acc, (c, k, m)| acc.add(&QScalar::monomial(c, &ratio(k, m))))
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMat> {
    prop::collection::vec(prop::collection::vec(small_rational(), cols), rows).prop_map(QMat::from_dense)
}

fn diagram(max_n: usize) -> impl Strategy<Value = Diagram> {
    (1..=max_n).prop_flat_map(|n| (Just(n), 0u64..1 << (n * (n - 1) / 2))).prop_map(|(n, bits)| Diagram::from_edge_bits(n, bits))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qscalar_values_are_canonical(a in qscalar(), b in qscalar(), c in qscalar()) {
        let left = a.add(&b).mul(&c);
        let right = a.mul(&c).add(&b.mul(&c));
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(format!("{left:?}"), format!("{right:?}"));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            let back = a.mul(&b).div(&b).unwrap();
            prop_assert_eq!(format!("{back:?}"), format!("{a:?}"));
            let x = a.add(&QScalar::one()).div(&b).unwrap();
            let y = a.div(&b).unwrap().add(&b.inv().unwrap());
            prop_assert_eq!(format!("{x:?}"), format!("{y:?}"));
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(a in qscalar(), b in qscalar()) {
        let (sa, sb) = (a.specialize_at_one().unwrap(), b.specialize_at_one().unwrap());
        prop_assert_eq!(a.add(&b).specialize_at_one().unwrap(), &sa + &sb);
        prop_assert_eq!(a.mul(&b).specialize_at_one().unwrap(), &sa * &sb);
        if let Ok(r) = a.div(&b).and_then(|x| x.specialize_at_one()) {
            if sb != Rational::from_integer(0.into()) {
                prop_assert_eq!(r, &sa / &sb);
            }
        }
    }

    #[test]
    fn rank_plus_nullity(a in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let kernel = nullspace(&a);
        prop_assert_eq!(rank(&a) + kernel.len(), a.cols());
        for v in &kernel {
            prop_assert!(a.mul(v).is_zero());
        }
    }

    #[test]
    fn maximal_nested_sets_have_n_plus_one_members(d in diagram(6)) {
        prop_assume!(d.is_connected(d.all()));
        for h in enumerate_nested_sets(&d, d.all(), VSet::EMPTY, true).unwrap() {
            prop_assert_eq!(h.len(), d.vertex_count() + 1);
        }
    }

    #[test]
    fn maximal_nested_sets_factor_over_components(d in diagram(6)) {
        let total = enumerate_nested_sets(&d, d.all(), VSet::EMPTY, true).unwrap().len();
        let product: usize = d
            .connected_components(d.all())
            .into_iter()
            .map(|c| enumerate_nested_sets(&d, c, VSet::EMPTY, true).unwrap().len())
            .product();
        prop_assert_eq!(total, product);
    }

    #[test]
    fn section_is_a_right_inverse(d in diagram(5), b_bits in any::<u64>(), l_bits in any::<u64>()) {
        let b = VSet(b_bits).intersection(d.all());
        let lower = VSet(l_bits).intersection(b);
        for h in enumerate_nested_sets(&d, b, lower, false).unwrap() {
            let c = canonical_section(&d, &h);
            prop_assert_eq!(chain_to_nested_set(&d, &c), h);
        }
    }

    #[test]
    fn vertical_union_image_is_nested_sets_containing_lower_components(d in diagram(4), bits in any::<(u64, u64, u64)>()) {
        let b = VSet(bits.0).intersection(d.all());
        let mid = VSet(bits.1).intersection(b);
        let low = VSet(bits.2).intersection(mid);
        let mut image = std::collections::BTreeSet::new();
        for h in enumerate_nested_sets(&d, b, mid, false).unwrap() {
            for h2 in enumerate_nested_sets(&d, mid, low, false).unwrap() {
                let u = vertical_union(&d, &h, &h2).unwrap();
                prop_assert!(validate_nested_set(&d, &u).is_ok());
                prop_assert_eq!(vertical_decompose(&d, &u, mid).unwrap(), (h2.clone(), h.clone()));
                image.insert(u);
            }
        }
        let cc = d.connected_components(mid);
        let expected: std::collections::BTreeSet<_> = enumerate_nested_sets(&d, b, low, false)
            .unwrap()
            .into_iter()
            .filter(|h| cc.iter().all(|c| h.contains(*c)) && (!mid.is_empty() || h.contains(VSet::EMPTY)))
            .collect();
        prop_assert_eq!(image, expected);
    }

    #[test]
    fn coxeter_labels_match_reflection_order(x in 0i64..=4, y in 0i64..=4) {
        prop_assume!((x == 0) == (y == 0) && x * y <= 6);
        let a = vec![vec![2, -x], vec![-y, 2]];
        let labels = coxeter_labels_from_gcm(&a).unwrap();
        // s_i(α_j) = α_j - a_ij α_i on the root lattice.
        let s = |i: usize| -> [[i64; 2]; 2] {
            let mut m = [[1, 0], [0, 1]];
            for j in 0..2 {
                m[i][j] -= a[i][j];
            }
            m
        };
        let mul = |p: [[i64; 2]; 2], q: [[i64; 2]; 2]| {
            let mut r = [[0; 2]; 2];
            for i in 0..2 { for j in 0..2 { for k in 0..2 { r[i][j] += p[i][k] * q[k][j]; } } }
            r
        };
        let prod = mul(s(0), s(1));
        let mut pow = prod;
        let order = (1..=12).find(|_| { let id = pow == [[1, 0], [0, 1]]; pow = mul(pow, prod); id });
        let expected = order.map_or(CoxeterLabel::Infinity, |m| CoxeterLabel::Finite(m as u32));
        prop_assert_eq!(labels.label(0, 1), expected);
    }

    #[test]
    fn braid_check_is_symmetric(entries in prop::collection::vec(-2i64..=2, 6), m in 2u32..=6) {
        let unipotent = |a: i64, b: i64, c: i64, upper: bool| {
            let mut t = QMat::identity(3);
            if upper { t.set(0, 1, ratio(a, 1)); t.set(0, 2, ratio(b, 1)); t.set(1, 2, ratio(c, 1)); }
            else { t.set(1, 0, ratio(a, 1)); t.set(2, 0, ratio(b, 1)); t.set(2, 1, ratio(c, 1)); }
            t
        };
        let rho = BraidRep::new(vec![unipotent(entries[0], entries[1], entries[2], true), unipotent(entries[3], entries[4], entries[5], false)]).unwrap();
        let ij = verify_braid_relation(&rho, 0, 1, CoxeterLabel::Finite(m)).unwrap();
        let ji = verify_braid_relation(&rho, 1, 0, CoxeterLabel::Finite(m)).unwrap();
        prop_assert_eq!(ij.holds, ji.holds);
        if let (Some(x), Some(y)) = (ij.difference, ji.difference) {
            prop_assert_eq!(x, y.neg());
        }
    }

    #[test]
    fn realizations_survive_null_directions_and_compose(a in matrix(2, 2), k1 in 0usize..3, k2 in 0usize..3, k3 in 0usize..3) {
        let base = minimal_realization(&a).unwrap();
        let (v1, v2, v3) = (base.with_null_dims(k1), base.with_null_dims(k2), base.with_null_dims(k3));
        for v in [&v1, &v2, &v3] {
            prop_assert!(v.check().is_ok());
        }
        let t1 = morphism_space(&v1, &v2).unwrap().particular;
        let t2 = morphism_space(&v2, &v3).unwrap().particular;
        prop_assert!(is_morphism(&v1, &v2, &t1));
        prop_assert!(is_morphism(&v1, &v3, &t2.mul(&t1)));
        prop_assert!(is_morphism(&v2.transpose(), &v1.transpose(), &t1.transpose()));
    }

    #[test]
    fn hyperbolic_rank_three_is_diagrammatic(codes in prop::collection::vec(0usize..9, 3)) {
        const PAIRS: [(i64, i64); 9] = [(0, 0), (-1, -1), (-1, -2), (-2, -1), (-1, -3), (-3, -1), (-2, -2), (-1, -4), (-4, -1)];
        let mut a = vec![vec![2i64; 3]; 3];
        for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            (a[i][j], a[j][i]) = PAIRS[codes[k]];
        }
        let sub = |s: &[usize]| s.iter().map(|&i| s.iter().map(|&j| a[i][j]).collect()).collect::<Vec<Vec<i64>>>();
        let proper_ok = [[0usize, 1], [0, 2], [1, 2]].iter().all(|s| {
            let m = sub(s);
            m[0][1] == 0 || matches!(classify_indecomposable(&m), Some(GcmType::Finite | GcmType::Affine))
        });
        prop_assume!(proper_ok && classify_indecomposable(&a).is_some());
        let r = cartan_diagrammatic_test(&int_matrix(&a)).unwrap();
        prop_assert_eq!(r.verdict, Verdict::DiagrammaticBySufficientCondition);
    }

    #[test]
    fn dy_tensors_are_compatible(d in 1i64..=3, i in 0usize..3, j in 0usize..3, k in 0usize..3) {
        let fx = borel_fixtures(d).unwrap();
        let b = sl2_borel(d);
        let vw = dy_tensor(&fx[i].1, &fx[j].1).unwrap();
        prop_assert!(all_passed(&verify_dy(&b, &vw)));
        prop_assert!(omega_is_dy_endomorphism(&fx[i].1, &fx[j].1).unwrap());
        prop_assert!(cybe_defect_mixed(&fx[i].1, &fx[j].1, &fx[k].1).is_zero());
    }

    #[test]
    fn hopf_dy_round_trip_and_yang_baxter(which in 0usize..3, i in 0usize..2, j in 0usize..2) {
        let h = [cyclic_group_algebra(2), cyclic_group_algebra(3), sweedler()][which].clone();
        let q = quantum_double(&h).unwrap();
        let mods = [HopfDYModule::trivial(&h), HopfDYModule::regular(&h)];
        let vw = hopf_dy_tensor(&h, &mods[i], &mods[j]).unwrap();
        prop_assert!(all_passed(&verify_hopf_dy(&h, &vw)));
        let back = dy_from_db_module(&q, &db_module_from_dy(&q, &vw)).unwrap();
        prop_assert_eq!(back, vw.clone());
        if vw.act(&h.basis(0)).rows() <= 4 {
            prop_assert!(yang_baxter(&h, &vw).passed());
        }
    }

    #[test]
    fn sl2_classical_limit_has_trivial_signs(m in 0usize..=6) {
        let data = QuantumGroupData::sl2();
        let v = build_sl2_module(m).unwrap();
        let signs = classical_limit_signs(&data, &v, 0).unwrap();
        prop_assert_eq!(signs, Some(vec![1; m + 1]));
    }

    #[test]
    fn fixtures_round_trip(a in (1usize..4, 1usize..4).prop_flat_map(|(r, c)| matrix(r, c)), d in diagram(5)) {
        let f = Fixture::from_matrix(&a);
        prop_assert_eq!(Fixture::from_json(&f.to_json()).unwrap().matrix().unwrap(), a);
        let g = Fixture::from_diagram(&d);
        prop_assert_eq!(Fixture::from_json(&g.to_json()).unwrap().diagram().unwrap(), d);
    }
}

#[test]
fn section_does_not_preserve_vertical_union() {
    let d = Diagram::type_a(3);
    let (b, mid) = (d.all(), VSet::from_vertices([0, 1]));
    let mut witness = None;
    'search: for low in mid.subsets() {
        for h in enumerate_nested_sets(&d, b, mid, false).unwrap() {
            for h2 in enumerate_nested_sets(&d, mid, low, false).unwrap() {
                let u = vertical_union(&d, &h, &h2).unwrap();
                let joined = [canonical_section(&d, &h).sets, canonical_section(&d, &h2).sets[1..].to_vec()].concat();
                if canonical_section(&d, &u).sets != joined {
                    witness = Some((h, h2));
                    break 'search;
                }
            }
        }
    }
    assert!(witness.is_some());
}
