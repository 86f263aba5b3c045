use std::collections::BTreeSet;

use schubert_core::admissible::{
    admissible_set, chain_coefficients, double_coset, double_cosets, max_representative,
    mobius_coefficients, parabolic_subgroup, AdmissiblePoset, CosetPolicy,
};
use schubert_core::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use schubert_core::root_data::{Coweight, Isogeny, RootDatum, TypeLetter};

fn group(letter: TypeLetter, rank: usize, isogeny: Isogeny) -> AffineWeylGroup {
    AffineWeylGroup::new(RootDatum::new(letter, rank, isogeny).unwrap())
}

fn instances() -> Vec<(AffineWeylGroup, Coweight)> {
    use Isogeny::*;
    use TypeLetter::*;
    vec![
        (group(A, 1, SimplyConnected), Coweight(vec![2])),
        (group(A, 1, SimplyConnected), Coweight(vec![4])),
        (group(A, 1, Adjoint), Coweight(vec![1])),
        (group(A, 1, Adjoint), Coweight(vec![3])),
        (group(A, 2, Adjoint), Coweight(vec![1, 0])),
        (group(A, 2, Adjoint), Coweight(vec![0, 1])),
        (group(A, 2, SimplyConnected), Coweight(vec![1, 1])),
        (group(C, 2, Adjoint), Coweight(vec![0, 1])),
        (group(B, 2, Adjoint), Coweight(vec![1, 0])),
        (group(G, 2, SimplyConnected), Coweight(vec![0, 1])),
        (group(A, 3, Adjoint), Coweight(vec![0, 1, 0])),
    ]
}

/// Products of every subword of one reduced word of each `t_λ`.
fn subword_oracle(g: &AffineWeylGroup, mu: &Coweight) -> BTreeSet<AffineWeylElement> {
    let mut out = BTreeSet::new();
    for lambda in g.datum().coweight_orbit(mu) {
        let word = g.reduced_word(&g.translation(&lambda).unwrap());
        let n = word.letters.len();
        for mask in 0u64..(1 << n) {
            let sub: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| word.letters[i]).collect();
            out.insert(g.product(&sub).unwrap().mul(&word.omega));
        }
    }
    out
}

/// Every element of the component up to the top length that lies below some `t_λ`.
fn order_oracle(g: &AffineWeylGroup, mu: &Coweight) -> BTreeSet<AffineWeylElement> {
    let tops: Vec<AffineWeylElement> = g
        .datum()
        .coweight_orbit(mu)
        .iter()
        .map(|l| g.translation(l).unwrap())
        .collect();
    let top_len = g.length(&tops[0]);
    g.elements_up_to_length(&tops[0], top_len)
        .into_values()
        .flatten()
        .filter(|w| tops.iter().any(|t| g.bruhat_leq(w, t)))
        .collect()
}

fn inclusion_exclusion_holds(poset: &AdmissiblePoset, c: &[i64]) -> bool {
    (0..poset.len()).all(|v| {
        (0..poset.len())
            .filter(|&w| poset.leq(v, w))
            .map(|w| c[w])
            .sum::<i64>()
            == 1
    })
}

#[test]
fn admissible_sets_match_oracles() {
    for (g, mu) in instances() {
        let adm = admissible_set(&g, &mu).unwrap();
        let set: BTreeSet<AffineWeylElement> = adm.elements().iter().cloned().collect();
        assert_eq!(set, subword_oracle(&g, &mu), "{mu:?}");
        assert_eq!(set, order_oracle(&g, &mu), "{mu:?}");
        assert!(adm.is_downward_closed(&g).unwrap());
        let tops: BTreeSet<AffineWeylElement> = adm.maximal().iter().map(|&i| adm.elements()[i].clone()).collect();
        assert!(tops.iter().all(|t| t.is_translation()));
        assert_eq!(tops.len(), g.datum().coweight_orbit(&mu).len());
        let c = chain_coefficients(&adm);
        assert_eq!(c, mobius_coefficients(&adm));
        assert!(inclusion_exclusion_holds(&adm, &c));
        for i in 0..adm.len() {
            for j in 0..adm.len() {
                if i != j && adm.leq(i, j) {
                    assert!(!adm.leq(j, i));
                    for k in 0..adm.len() {
                        if adm.leq(j, k) {
                            assert!(adm.leq(i, k));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn known_sizes() {
    let pgl2 = group(TypeLetter::A, 1, Isogeny::Adjoint);
    assert_eq!(admissible_set(&pgl2, &Coweight(vec![1])).unwrap().len(), 3);
    // Minuscule A_2 admissible set: 7 elements.
    let a2 = group(TypeLetter::A, 2, Isogeny::Adjoint);
    assert_eq!(admissible_set(&a2, &Coweight(vec![1, 0])).unwrap().len(), 7);
    // Drinfeld case GSp_4 / minuscule C_2: 13 elements.
    let c2 = group(TypeLetter::C, 2, Isogeny::Adjoint);
    assert_eq!(admissible_set(&c2, &Coweight(vec![0, 1])).unwrap().len(), 13);
}

#[test]
fn conjugates_give_the_same_set() {
    for (g, mu) in instances() {
        let adm = admissible_set(&g, &mu).unwrap();
        for lambda in g.datum().coweight_orbit(&mu) {
            let dominant = g.datum().dominant_coweight(&lambda);
            assert_eq!(admissible_set(&g, &dominant).unwrap().len(), adm.len());
        }
    }
}

#[test]
fn parahoric_cosets() {
    for (g, mu) in instances() {
        let adm = admissible_set(&g, &mu).unwrap();
        for s in 0..g.nodes() {
            let facet = [s];
            let lift = double_cosets(&g, &adm, &facet, CosetPolicy::LiftInAdm).unwrap();
            let strict = double_cosets(&g, &adm, &facet, CosetPolicy::MaxRepInAdm).unwrap();
            assert!(strict.len() <= lift.len());
            assert!(strict.elements().iter().all(|w| lift.index_of(w).is_some()));
            for w in lift.elements() {
                assert_eq!(&max_representative(&g, w, &facet).unwrap(), w);
                let coset = double_coset(&g, w, &facet).unwrap();
                assert_eq!(coset.last().unwrap(), w);
                assert!(coset.iter().any(|x| adm.index_of(x).is_some()));
            }
            let c = chain_coefficients(&lift);
            assert_eq!(c, mobius_coefficients(&lift));
            assert!(inclusion_exclusion_holds(&lift, &c));
        }
        let parabolic = parabolic_subgroup(&g, &[1]).unwrap();
        let e_coset: BTreeSet<_> = double_coset(&g, &g.identity(), &[1]).unwrap().into_iter().collect();
        assert_eq!(e_coset, parabolic.into_iter().collect());
    }
}
