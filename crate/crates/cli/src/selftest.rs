//! Seeded randomized checks; the same seed always gives the same report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use schubert_core::affine_weyl::{AffineWeylElement, AffineWeylGroup, ElementDoc};
use schubert_core::demazure::{apply_word, demazure_char, demazure_op, AffineWeight, CharacterElt};
use schubert_core::picard::{is_ample, is_semiample, DegreeVector};
use schubert_core::root_data::{Coweight, Isogeny, RootDatum, TypeLetter, Weight};

fn data() -> Vec<RootDatum> {
    [(TypeLetter::A, 1), (TypeLetter::A, 2), (TypeLetter::C, 2), (TypeLetter::G, 2)]
        .into_iter()
        .map(|(l, r)| RootDatum::new(l, r, Isogeny::SimplyConnected).expect("valid type"))
        .collect()
}

fn random_weight(rng: &mut ChaCha8Rng, d: &RootDatum) -> AffineWeight {
    let finite = Weight((0..d.rank()).map(|_| rng.gen_range(-2..=3)).collect());
    AffineWeight::new(finite, rng.gen_range(0..=3))
}

fn random_dominant(rng: &mut ChaCha8Rng, d: &RootDatum) -> AffineWeight {
    let coords: Vec<i64> = (0..d.affine_nodes()).map(|_| rng.gen_range(0..=2)).collect();
    AffineWeight::from_affine_coords(d, &coords)
}

fn braid_order(d: &RootDatum, s: usize, t: usize) -> Option<usize> {
    let c = d.affine_cartan();
    [2, 3, 4, 6].get((c[s][t] * c[t][s]) as usize).copied()
}

fn operator_algebra(rng: &mut ChaCha8Rng, cases: usize) -> (usize, usize) {
    let mut failures = 0;
    for d in data() {
        for _ in 0..cases {
            let e = CharacterElt::monomial(&random_weight(rng, &d));
            for s in 0..d.affine_nodes() {
                let once = demazure_op(&d, s, &e);
                failures += usize::from(demazure_op(&d, s, &once) != once);
                for t in s + 1..d.affine_nodes() {
                    if let Some(m) = braid_order(&d, s, t) {
                        let st: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect();
                        let ts: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { t } else { s }).collect();
                        failures += usize::from(apply_word(&d, &st, e.clone()) != apply_word(&d, &ts, e.clone()));
                    }
                }
            }
        }
    }
    (4 * cases, failures)
}

fn word_independence(rng: &mut ChaCha8Rng, cases: usize) -> (usize, usize) {
    let mut failures = 0;
    for d in data().into_iter().take(2) {
        let g = AffineWeylGroup::new(d.clone());
        for _ in 0..cases {
            let letters: Vec<usize> = (0..rng.gen_range(0..=5)).map(|_| rng.gen_range(0..g.nodes())).collect();
            let w = g.product(&letters).expect("letters are nodes");
            let nu = random_dominant(rng, &d);
            let words = g.all_reduced_words(&w).expect("short elements");
            let first = demazure_char(&g, &words[0], &nu).expect("dominant");
            failures += words[1..]
                .iter()
                .filter(|word| demazure_char(&g, word, &nu).expect("dominant") != first)
                .count();
        }
    }
    (2 * cases, failures)
}

fn weyl_consistency(rng: &mut ChaCha8Rng, cases: usize) -> (usize, usize) {
    let mut failures = 0;
    for d in data() {
        let g = AffineWeylGroup::new(d.clone());
        let word = g.reduced_word(&g.longest_finite_element());
        for _ in 0..cases {
            let lambda = Weight((0..d.rank()).map(|_| rng.gen_range(0..=4)).collect());
            let nu = AffineWeight::new(lambda.clone(), d.theta_pairing(&lambda));
            let dim = demazure_char(&g, &word, &nu).expect("dominant").dim();
            failures += usize::from(dim as u128 != d.weyl_dimension(&lambda).expect("dominant"));
        }
    }
    (4 * cases, failures)
}

fn length_law(rng: &mut ChaCha8Rng, cases: usize) -> (usize, usize) {
    let mut failures = 0;
    let mut checked = 0;
    for d in data() {
        let g = AffineWeylGroup::new(d.clone());
        for _ in 0..cases {
            let lambda = Coweight((0..d.rank()).map(|_| rng.gen_range(-4..=4)).collect());
            let Ok(t) = g.translation(&lambda) else { continue };
            checked += 1;
            let expected: i64 = d.positive_roots().iter().map(|a| d.pair_coweight_root(&lambda, a).abs()).sum();
            failures += usize::from(g.length(&t) as i64 != expected);
        }
    }
    (checked, failures)
}

fn round_trips(rng: &mut ChaCha8Rng, cases: usize) -> (usize, usize) {
    let mut failures = 0;
    let d = RootDatum::new(TypeLetter::A, 2, Isogeny::Adjoint).expect("valid type");
    let g = AffineWeylGroup::new(d.clone());
    for _ in 0..cases {
        let letters: Vec<usize> = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..3)).collect();
        let w: AffineWeylElement = g.product(&letters).expect("nodes");
        let doc = g.to_doc(&w);
        let back: ElementDoc = serde_json::from_str(&serde_json::to_string(&doc).expect("json")).expect("json");
        failures += usize::from(g.from_doc(&back).ok() != Some(w));
        let nu = random_weight(rng, &d);
        let text = serde_json::to_string(&nu).expect("json");
        failures += usize::from(serde_json::from_str::<AffineWeight>(&text).ok() != Some(nu));
        let degrees: Vec<i64> = letters.iter().map(|_| rng.gen_range(-3..4)).collect();
        let dv = DegreeVector::from_integers(letters.clone(), &degrees).expect("lengths match");
        let text = serde_json::to_string(&dv).expect("json");
        let back: DegreeVector = serde_json::from_str(&text).expect("json");
        failures += usize::from(back != dv || is_ample(&back) && !is_semiample(&back));
    }
    (cases, failures)
}

pub fn run(seed: u64, cases: usize) -> Value {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    type Check = fn(&mut ChaCha8Rng, usize) -> (usize, usize);
    let checks: [(&str, Check); 5] = [
        ("operator_algebra", operator_algebra),
        ("word_independence", word_independence),
        ("weyl_consistency", weyl_consistency),
        ("length_law", length_law),
        ("json_round_trip", round_trips),
    ];
    let mut passed = true;
    let results: Vec<Value> = checks
        .iter()
        .map(|(name, check)| {
            let (count, failures) = check(&mut rng, cases);
            passed &= failures == 0;
            json!({ "name": name, "cases": count, "failures": failures })
        })
        .collect();
    json!({ "seed": seed, "checks": results, "passed": passed })
}
