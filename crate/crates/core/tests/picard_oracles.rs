use proptest::prelude::*;
use schubert_core::admissible::admissible_set;
use schubert_core::affine_weyl::AffineWeylGroup;
use schubert_core::demazure::{simple_root_affine, AffineWeight};
use schubert_core::picard::{
    anticanonical_degrees, central_charge, fano_perturbation, is_ample, is_semiample,
    line_bundle_degrees, DegreeVector, QSequence,
};
use schubert_core::rational::{q, Q};
use schubert_core::root_data::{Coweight, Isogeny, RootDatum, TypeLetter};

fn datum(letter: TypeLetter, rank: usize) -> RootDatum {
    RootDatum::new(letter, rank, Isogeny::SimplyConnected).unwrap()
}

fn rank_two_or_less() -> Vec<RootDatum> {
    vec![
        datum(TypeLetter::A, 1),
        datum(TypeLetter::A, 2),
        datum(TypeLetter::B, 2),
        datum(TypeLetter::C, 2),
        datum(TypeLetter::G, 2),
    ]
}

fn words(nodes: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..nodes).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// On `(s, s)` the variety is `P¹ × P¹` and `d ↦ (d_1 − d_2, d_2)` is the bidegree.
#[test]
fn ampleness_on_a_product_of_lines() {
    let mut cases = 0;
    for d1 in -5i64..=5 {
        for d2 in -5i64..=5 {
            let d = DegreeVector::from_integers(vec![1, 1], &[d1, d2]).unwrap();
            let (x, y) = (d1 - d2, d2);
            assert_eq!(is_ample(&d), x > 0 && y > 0);
            assert_eq!(is_semiample(&d), x >= 0 && y >= 0);
            cases += 1;
        }
    }
    assert_eq!(cases, 121);
}

/// Anticanonical degrees against pairings of affine simple roots computed
/// through the degree map instead of the Cartan table.
#[test]
fn anticanonical_identity() {
    for d in rank_two_or_less() {
        for word in words(d.affine_nodes(), 5) {
            let total = anticanonical_degrees(&d, &word, &QSequence::constant(2, word.len()).unwrap())
                .unwrap()
                .total;
            for k in 0..word.len() {
                let mut expected = q(2);
                for &s in &word[k + 1..] {
                    expected += line_bundle_degrees(&d, &word, &simple_root_affine(&d, s)).unwrap().degrees[k];
                }
                assert_eq!(total.degrees[k], expected, "{word:?} slot {k}");
            }
        }
    }
}

fn check_certificate(d: &RootDatum, word: &[usize]) {
    let cert = fano_perturbation(d, word, &QSequence::constant(3, word.len()).unwrap())
        .unwrap()
        .expect("constant q admits a perturbation");
    assert!(cert.passes());
    assert_eq!(cert.checks.len(), 3);
    if let Some(last) = cert.epsilon.last() {
        assert_eq!(*last, q(0));
        assert!(cert.epsilon[0] < q(1));
    }
    assert!(cert.epsilon.windows(2).all(|w| w[0] > w[1]));
    assert!(cert.divisor().is_subboundary());
    assert!(cert.integer_degrees.iter().all(|&x| x >= 0));
    assert!(cert.integer_degrees.windows(2).all(|w| w[0] > w[1]));
}

#[test]
fn fano_on_admissible_words() {
    let cases = [
        (RootDatum::new(TypeLetter::A, 1, Isogeny::SimplyConnected).unwrap(), Coweight(vec![2])),
        (RootDatum::new(TypeLetter::A, 1, Isogeny::Adjoint).unwrap(), Coweight(vec![1])),
        (RootDatum::new(TypeLetter::A, 2, Isogeny::Adjoint).unwrap(), Coweight(vec![1, 0])),
    ];
    for (d, mu) in cases {
        let g = AffineWeylGroup::new(d.clone());
        for w in admissible_set(&g, &mu).unwrap().elements() {
            for word in g.all_reduced_words(w).unwrap() {
                check_certificate(&d, &word.letters);
            }
        }
    }
    let a1 = datum(TypeLetter::A, 1);
    for p in [2, 3, 5] {
        let up = QSequence::new(p, vec![q(1), q(p)]).unwrap();
        assert!(fano_perturbation(&a1, &[1, 1], &up).unwrap().is_none());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ampleness_is_stable(
        word in prop::collection::vec(0usize..3, 1..7),
        a in prop::collection::vec(-3i64..6, 6),
        b in prop::collection::vec(0i64..4, 6),
    ) {
        let n = word.len();
        let da = DegreeVector::from_integers(word.clone(), &a[..n]).unwrap();
        let mut sorted_b = b[..n].to_vec();
        sorted_b.sort_unstable_by(|x, y| y.cmp(x));
        let db = DegreeVector::from_integers(word.clone(), &sorted_b).unwrap();
        prop_assert!(!is_ample(&da) || is_semiample(&da));
        if is_ample(&da) && is_semiample(&db) {
            prop_assert!(is_ample(&da.try_add(&db).unwrap()));
        }
    }

    #[test]
    fn degrees_of_rho_and_charge(idx in 0usize..5, word in prop::collection::vec(0usize..3, 0..8), f in prop::collection::vec(0i64..4, 3)) {
        let d = &rank_two_or_less()[idx];
        let word: Vec<usize> = word.into_iter().map(|s| s % d.affine_nodes()).collect();
        let ones = line_bundle_degrees(d, &word, &AffineWeight::rho(d)).unwrap();
        prop_assert!(ones.degrees.iter().all(|x| *x == q(1)));
        let nu = AffineWeight::from_affine_coords(d, &f[..d.affine_nodes()]);
        let all: Vec<usize> = (0..d.affine_nodes()).collect();
        let per_node = line_bundle_degrees(d, &all, &nu).unwrap().node_degrees(d.affine_nodes()).unwrap();
        prop_assert_eq!(central_charge(d, &per_node).unwrap(), q(nu.level));
        let rho_nodes = vec![q(1); d.affine_nodes()];
        prop_assert_eq!(central_charge(d, &rho_nodes).unwrap(), q(d.dual_coxeter_number()));
    }

    #[test]
    fn perturbations_exist_for_every_word(idx in 0usize..5, word in prop::collection::vec(0usize..3, 0..7)) {
        let d = &rank_two_or_less()[idx];
        let word: Vec<usize> = word.into_iter().map(|s| s % d.affine_nodes()).collect();
        check_certificate(d, &word);
    }

    #[test]
    fn perturbation_absent_exactly_when_q_rises(word in prop::collection::vec(0usize..2, 1..6), e in prop::collection::vec(-2i32..3, 6)) {
        let d = datum(TypeLetter::A, 1);
        let qs = QSequence::from_exponents(2, &e[..word.len()]).unwrap();
        let rises = (0..word.len()).any(|i| {
            (i + 1..word.len()).any(|j| word[i] == word[j] && qs.q[i] < qs.q[j])
        });
        let out = fano_perturbation(&d, &word, &qs).unwrap();
        prop_assert_eq!(out.is_none(), rises);
        if let Some(cert) = out {
            prop_assert!(cert.passes());
        }
    }
}

#[test]
fn general_q_splits_into_boundary_and_twist() {
    let d = datum(TypeLetter::A, 2);
    let word = [0, 1, 2, 0];
    let qs = QSequence::new(3, vec![q(9), q(3), q(3), Q::new(1, 3)]).unwrap();
    let k = anticanonical_degrees(&d, &word, &qs).unwrap();
    let k1 = anticanonical_degrees(&d, &word, &QSequence::constant(3, 4).unwrap()).unwrap();
    assert_eq!(k.boundary, k1.boundary);
    assert_eq!(k.twist.degrees, qs.q);
}
