//! Affine weights, level-tagged characters and Demazure operators.
//!
//! An [`AffineWeight`] is a finite weight together with a level (the central
//! charge coordinate). Its affine coordinates are `ν_0 = level − ⟨θ^∨, ν⟩`
//! and `ν_i = ⟨α_i^∨, ν⟩`, so `Σ_s comark_s · ν_s = level`.
//!
//! Roots have level zero, hence every operator here preserves the level and a
//! [`CharacterElt`] is a Laurent polynomial over finite weights tagged with a
//! single level.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup, Word};
use crate::root_data::{RootDatum, Weight};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeight {
    #[serde(rename = "fund")]
    pub finite: Weight,
    pub level: i64,
}

impl AffineWeight {
    pub fn new(finite: Weight, level: i64) -> Self {
        AffineWeight { finite, level }
    }

    pub fn zero(rank: usize) -> Self {
        AffineWeight::new(Weight::zero(rank), 0)
    }

    /// `ρ = Σ_s ω_s`: every affine coordinate equal to 1, level `h^∨`.
    pub fn rho(datum: &RootDatum) -> Self {
        AffineWeight::new(datum.rho(), datum.dual_coxeter_number())
    }

    /// The affine fundamental weight `ω_s` (affine coordinates `δ_{s,t}`).
    pub fn fundamental(datum: &RootDatum, s: usize) -> Self {
        let mut coords = vec![0; datum.affine_nodes()];
        coords[s] = 1;
        AffineWeight::from_affine_coords(datum, &coords)
    }

    /// Inverse of [`Self::affine_coords`].
    pub fn from_affine_coords(datum: &RootDatum, coords: &[i64]) -> Self {
        let level = coords
            .iter()
            .zip(datum.comarks())
            .map(|(c, m)| c * m)
            .sum();
        AffineWeight::new(Weight(coords[1..].to_vec()), level)
    }

    /// `(ν_0, ν_1, …, ν_n)`.
    pub fn affine_coords(&self, datum: &RootDatum) -> Vec<i64> {
        std::iter::once(self.level - datum.theta_pairing(&self.finite))
            .chain(self.finite.0.iter().copied())
            .collect()
    }

    pub fn scaled(&self, k: i64) -> Self {
        AffineWeight::new(self.finite.scaled(k), self.level * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        AffineWeight::new(&self.finite + &other.finite, self.level + other.level)
    }

    /// `⟨α_s^∨, ν⟩ ≥ 0` for every affine node.
    pub fn is_dominant(&self, datum: &RootDatum) -> bool {
        self.affine_coords(datum).iter().all(|&c| c >= 0)
    }
}

/// `⟨α_s^∨, ν⟩`: the finite coroot pairing, or `level − ⟨θ^∨, ν⟩` for `s_0`.
pub fn affine_pairing(datum: &RootDatum, s: usize, nu: &AffineWeight) -> i64 {
    if s == 0 {
        nu.level - datum.theta_pairing(&nu.finite)
    } else {
        nu.finite.0[s - 1]
    }
}

/// The finite part `a_s` of the affine simple root, in weight coordinates
/// (`a_{s_0} = −θ`).
pub fn simple_root_weight(datum: &RootDatum, s: usize) -> Weight {
    if s == 0 {
        -&datum.root_to_weight(datum.highest_root())
    } else {
        datum.root_to_weight(&datum.simple_root(s))
    }
}

/// The affine simple root `α_s` as a level-zero affine weight.
pub fn simple_root_affine(datum: &RootDatum, s: usize) -> AffineWeight {
    AffineWeight::new(simple_root_weight(datum, s), 0)
}

/// Element of `Z[X^*]` at a fixed level; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterElt {
    pub level: i64,
    #[serde(with = "term_list")]
    terms: BTreeMap<Weight, i64>,
}

mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(terms: &BTreeMap<Weight, i64>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(terms.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Weight, i64>, D::Error> {
        let pairs = Vec::<(Weight, i64)>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for (w, c) in pairs {
            *out.entry(w).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }
}

impl CharacterElt {
    pub fn zero(level: i64) -> Self {
        CharacterElt {
            level,
            terms: BTreeMap::new(),
        }
    }

    /// `e^ν`.
    pub fn monomial(nu: &AffineWeight) -> Self {
        CharacterElt {
            level: nu.level,
            terms: BTreeMap::from([(nu.finite.clone(), 1)]),
        }
    }

    pub fn from_terms(level: i64, terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut out = CharacterElt::zero(level);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, weight: Weight, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(weight);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, weight: &Weight) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scaled(-1))
    }

    pub fn scaled(&self, k: i64) -> Self {
        CharacterElt::from_terms(self.level, self.terms.iter().map(|(w, &c)| (w.clone(), c * k)))
    }

    /// Multiplication by `e^μ` for a level-zero shift `μ`.
    pub fn shifted(&self, by: &Weight) -> Self {
        CharacterElt {
            level: self.level,
            terms: self.terms.iter().map(|(w, &c)| (w + by, c)).collect(),
        }
    }
}

/// `Λ_s(e^ν) = (e^ν − e^{ν − m a_s}) / (1 − e^{−a_s})` with `m = ⟨α_s^∨, ν + ρ⟩`,
/// expanded as the finite geometric sum.
pub fn demazure_op(datum: &RootDatum, s: usize, chi: &CharacterElt) -> CharacterElt {
    let root = simple_root_weight(datum, s);
    let mut out = CharacterElt::zero(chi.level);
    for (weight, coefficient) in chi.terms() {
        let nu = AffineWeight::new(weight.clone(), chi.level);
        let m = affine_pairing(datum, s, &nu) + 1;
        if m >= 1 {
            let mut w = weight.clone();
            for _ in 0..m {
                out.add_term(w.clone(), coefficient);
                w = &w - &root;
            }
        } else if m < 0 {
            let mut w = weight.clone();
            for _ in 0..-m {
                w = &w + &root;
                out.add_term(w.clone(), -coefficient);
            }
        }
    }
    out
}

/// Twist of `ν` by a length-zero `τ`: `ν'_s = ν_{τ^{-1} s τ}` in affine
/// coordinates. Demazure characters of `u·τ` are those of `u` on `ν'`.
pub fn omega_twist(
    group: &AffineWeylGroup,
    tau: &AffineWeylElement,
    nu: &AffineWeight,
) -> Result<AffineWeight> {
    let datum = group.datum();
    let sigma = group.omega_permutation(&tau.inverse())?;
    let coords = nu.affine_coords(datum);
    let twisted: Vec<i64> = sigma.iter().map(|&t| coords[t]).collect();
    Ok(AffineWeight::from_affine_coords(datum, &twisted))
}

/// `Λ_{s_1} ∘ ⋯ ∘ Λ_{s_n}(e^ν)` for dominant `ν`, after twisting by the word's
/// length-zero part.
pub fn demazure_char(
    group: &AffineWeylGroup,
    word: &Word,
    nu: &AffineWeight,
) -> Result<CharacterElt> {
    let datum = group.datum();
    if nu.finite.rank() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            found: nu.finite.rank(),
        });
    }
    if !nu.is_dominant(datum) {
        return Err(Error::NotDominant(format!(
            "affine weight {:?} at level {}",
            nu.finite.0, nu.level
        )));
    }
    if let Some(&bad) = word.letters.iter().find(|&&l| l >= datum.affine_nodes()) {
        return Err(Error::NodeOutOfRange {
            index: bad,
            nodes: datum.affine_nodes(),
        });
    }
    let start = if word.has_trivial_omega() {
        nu.clone()
    } else {
        omega_twist(group, &word.omega, nu)?
    };
    Ok(apply_word(datum, &word.letters, CharacterElt::monomial(&start)))
}

/// `Λ_{l_1} ∘ ⋯ ∘ Λ_{l_k}` applied to an arbitrary character.
pub fn apply_word(datum: &RootDatum, letters: &[usize], chi: CharacterElt) -> CharacterElt {
    letters
        .iter()
        .rev()
        .fold(chi, |acc, &s| demazure_op(datum, s, &acc))
}

pub fn dim(chi: &CharacterElt) -> i64 {
    chi.dim()
}
