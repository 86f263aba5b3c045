//! Section dimensions on the admissible locus against the Borel–Weil side.
//!
//! The left side is the inclusion–exclusion sum `Σ_w c_w · dim Λ_w(e^ν)` over
//! the admissible poset; the right side is the Weyl dimension of
//! `charge · ϖ_μ` for minuscule `μ`, where `ϖ_μ` is the fundamental weight
//! of the node `μ` pairs to 1 with.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::admissible::{
    admissible_set, chain_coefficients, double_cosets, mobius_coefficients, AdmissiblePoset,
    CosetPolicy,
};
use crate::affine_weyl::{AffineWeylGroup, ElementDoc};
use crate::demazure::{affine_pairing, demazure_char, omega_twist, AffineWeight};
use crate::parallel;
use crate::root_data::{Coweight, DatumConfig};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Unequal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub element: ElementDoc,
    pub length: usize,
    pub reduced_word: Vec<usize>,
    pub coefficient: i64,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub datum: DatumConfig,
    pub mu: Coweight,
    pub facet: Vec<usize>,
    pub experimental: bool,
    pub perturbed: bool,
    /// `ν = multiple · base`.
    pub multiple: i64,
    pub nu: AffineWeight,
    pub central_charge: i64,
    pub table: Vec<TableRow>,
    pub lhs_dim: i64,
    /// Left side recomputed with Möbius-function coefficients.
    pub lhs_dim_mobius: i64,
    pub rhs_dim: i64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoherenceOptions {
    /// Parahoric facet `J`; empty for Iwahori level.
    pub facet: Vec<usize>,
    pub policy: CosetPolicy,
    /// Base weight scaled by each multiple. Defaults to `ρ`, or to
    /// `Σ_{s ∉ J} ω_s` at parahoric level.
    pub base: Option<AffineWeight>,
    /// Negative control: shifts the first chain coefficient by one.
    pub perturb: bool,
}

/// The Iwahori-level set, or its double cosets when a facet is given.
pub fn coherence_poset(
    group: &AffineWeylGroup,
    mu: &Coweight,
    facet: &[usize],
    policy: CosetPolicy,
) -> Result<AdmissiblePoset> {
    let adm = admissible_set(group, mu)?;
    if facet.is_empty() {
        Ok(adm)
    } else {
        double_cosets(group, &adm, facet, policy)
    }
}

pub fn default_base(group: &AffineWeylGroup, facet: &[usize]) -> AffineWeight {
    let datum = group.datum();
    let coords: Vec<i64> = (0..datum.affine_nodes())
        .map(|s| i64::from(!facet.contains(&s)))
        .collect();
    AffineWeight::from_affine_coords(datum, &coords)
}

/// Dimension of sections of `L(ν)` on one Schubert variety, after checking
/// that `L(ν)` is ample there: `ν` (twisted by the length-zero part) must be
/// positive on every letter of the support outside the facet.
pub fn schubert_dim(
    group: &AffineWeylGroup,
    w: &crate::affine_weyl::AffineWeylElement,
    nu: &AffineWeight,
    facet: &[usize],
) -> Result<i64> {
    let datum = group.datum();
    let word = group.reduced_word(w);
    let sigma = group.omega_permutation(&word.omega.inverse())?;
    let twisted = omega_twist(group, &word.omega, nu)?;
    let support: BTreeSet<usize> = word.letters.iter().copied().collect();
    for &s in &support {
        let exempt = facet.contains(&sigma[s]);
        if !exempt && affine_pairing(datum, s, &twisted) <= 0 {
            return Err(Error::NotAmple(format!(
                "letter {s} of {:?} at level {}",
                word.letters, nu.level
            )));
        }
    }
    Ok(demazure_char(group, &word, nu)?.dim())
}

/// `Σ_w c_w dim_w` together with the per-element table.
pub fn lhs_dim(
    group: &AffineWeylGroup,
    poset: &AdmissiblePoset,
    nu: &AffineWeight,
    coefficients: &[i64],
) -> Result<(i64, Vec<TableRow>)> {
    let dims = parallel::try_map(poset.elements(), |w| schubert_dim(group, w, nu, poset.facet()))?;
    let mut total = 0i64;
    let mut table = Vec::with_capacity(dims.len());
    for (i, (w, dim)) in poset.elements().iter().zip(dims).enumerate() {
        total = coefficients[i]
            .checked_mul(dim)
            .and_then(|x| x.checked_add(total))
            .ok_or(Error::Overflow("coherence sum"))?;
        table.push(TableRow {
            element: group.to_doc(w),
            length: poset.lengths()[i],
            reduced_word: group.reduced_word(w).letters,
            coefficient: coefficients[i],
            dim,
        });
    }
    Ok((total, table))
}

/// `dim V(charge · ϖ_μ)`; requires minuscule `μ`.
pub fn rhs_dim(group: &AffineWeylGroup, mu: &Coweight, charge: i64) -> Result<i64> {
    let datum = group.datum();
    if mu.is_zero() {
        return Ok(1);
    }
    if !datum.is_minuscule(mu)? {
        return Err(Error::NotMinuscule(mu.to_string()));
    }
    let node = datum
        .minuscule_node(mu)
        .ok_or_else(|| Error::NotMinuscule(mu.to_string()))?;
    let lambda = datum.fundamental_weight(node).scaled(charge);
    let dim = datum.weyl_dimension(&lambda)?;
    i64::try_from(dim).map_err(|_| Error::Overflow("Weyl dimension"))
}

/// One report per multiple, computed in parallel.
pub fn verify_coherence(
    group: &AffineWeylGroup,
    mu: &Coweight,
    multiples: &[i64],
    options: &CoherenceOptions,
) -> Result<Vec<CoherenceReport>> {
    let datum = group.datum();
    let poset = coherence_poset(group, mu, &options.facet, options.policy)?;
    let mut coefficients = chain_coefficients(&poset);
    let mobius = mobius_coefficients(&poset);
    if options.perturb {
        if let Some(first) = coefficients.first_mut() {
            *first += 1;
        }
    }
    let base = options
        .base
        .clone()
        .unwrap_or_else(|| default_base(group, &options.facet));
    if let Some(&s) = options
        .facet
        .iter()
        .find(|&&s| affine_pairing(datum, s, &base) != 0)
    {
        return Err(Error::Parse(format!("base weight does not vanish on facet node {s}")));
    }
    if !base.is_dominant(datum) {
        return Err(Error::NotDominant(format!("affine weight {:?}", base.finite.0)));
    }
    parallel::try_map(multiples, |&multiple| {
        let nu = base.scaled(multiple);
        let (lhs, table) = lhs_dim(group, &poset, &nu, &coefficients)?;
        let lhs_mobius = table
            .iter()
            .zip(&mobius)
            .map(|(row, c)| c * row.dim)
            .sum();
        let rhs = rhs_dim(group, mu, nu.level)?;
        Ok(CoherenceReport {
            datum: datum.config(),
            mu: mu.clone(),
            facet: poset.facet().to_vec(),
            experimental: !poset.facet().is_empty(),
            perturbed: options.perturb,
            multiple,
            central_charge: nu.level,
            nu,
            table,
            lhs_dim: lhs,
            lhs_dim_mobius: lhs_mobius,
            rhs_dim: rhs,
            verdict: if lhs == rhs {
                Verdict::Equal
            } else {
                Verdict::Unequal
            },
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{Isogeny, RootDatum, TypeLetter};

    fn group(letter: TypeLetter, rank: usize, isogeny: Isogeny) -> AffineWeylGroup {
        AffineWeylGroup::new(RootDatum::new(letter, rank, isogeny).unwrap())
    }

    #[test]
    fn pgl2_examples() {
        let g = group(TypeLetter::A, 1, Isogeny::Adjoint);
        let mu = Coweight(vec![1]);
        let poset = admissible_set(&g, &mu).unwrap();
        let coefficients = chain_coefficients(&poset);
        let rho = AffineWeight::rho(g.datum());
        let (lhs, table) = lhs_dim(&g, &poset, &rho, &coefficients).unwrap();
        assert_eq!(lhs, 3);
        let dims: Vec<i64> = table.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 2, 2]);
        assert_eq!(coefficients, vec![-1, 1, 1]);
        let (lhs, _) = lhs_dim(&g, &poset, &rho.scaled(2), &coefficients).unwrap();
        assert_eq!(lhs, 5);
        assert_eq!(rhs_dim(&g, &mu, 2).unwrap(), 3);
        assert_eq!(rhs_dim(&g, &mu, 0).unwrap(), 1);
    }

    #[test]
    fn rhs_values() {
        let a2 = group(TypeLetter::A, 2, Isogeny::Adjoint);
        assert_eq!(rhs_dim(&a2, &Coweight(vec![1, 0]), 1).unwrap(), 3);
        assert_eq!(rhs_dim(&a2, &Coweight(vec![1, 0]), 3).unwrap(), 10);
        assert!(matches!(
            rhs_dim(&a2, &Coweight(vec![1, 1]), 1),
            Err(Error::NotMinuscule(_))
        ));
    }

    #[test]
    fn verification() {
        let g = group(TypeLetter::A, 1, Isogeny::Adjoint);
        let reports =
            verify_coherence(&g, &Coweight(vec![1]), &[1, 2, 3, 4], &CoherenceOptions::default())
                .unwrap();
        for (c, r) in (1..).zip(&reports) {
            assert_eq!(r.verdict, Verdict::Equal);
            assert_eq!(r.lhs_dim, 2 * c + 1);
            assert_eq!(r.lhs_dim_mobius, r.lhs_dim);
        }
        let trivial = verify_coherence(&g, &Coweight(vec![0]), &[1], &CoherenceOptions::default())
            .unwrap();
        assert_eq!((trivial[0].lhs_dim, trivial[0].rhs_dim), (1, 1));
        let perturbed = CoherenceOptions {
            perturb: true,
            ..Default::default()
        };
        let bad = verify_coherence(&g, &Coweight(vec![1]), &[1], &perturbed).unwrap();
        assert_eq!(bad[0].verdict, Verdict::Unequal);

        let a2 = group(TypeLetter::A, 2, Isogeny::Adjoint);
        let r = verify_coherence(&a2, &Coweight(vec![1, 0]), &[1], &CoherenceOptions::default())
            .unwrap();
        assert_eq!((r[0].lhs_dim, r[0].rhs_dim), (10, 10));
    }

    #[test]
    fn non_ample_weights_are_rejected() {
        let g = group(TypeLetter::A, 1, Isogeny::Adjoint);
        let options = CoherenceOptions {
            base: Some(AffineWeight::fundamental(g.datum(), 0)),
            ..Default::default()
        };
        assert!(matches!(
            verify_coherence(&g, &Coweight(vec![1]), &[1], &options),
            Err(Error::NotAmple(_))
        ));
    }
}
