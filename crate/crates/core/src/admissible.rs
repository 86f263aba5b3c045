//! Admissible sets, parahoric double cosets and strict-chain coefficients.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup};
use crate::root_data::Coweight;
use crate::{Error, Result};

/// How a `W_J`-double coset is admitted at parahoric level.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CosetPolicy {
    /// Some member of the coset lies in the Iwahori-level set.
    #[default]
    LiftInAdm,
    /// The maximal-length representative itself lies in the Iwahori-level set.
    MaxRepInAdm,
}

/// A finite Bruhat-closed set with its order relation.
///
/// Elements are sorted by length and then structurally. At parahoric level
/// each element is the maximal-length member of its double coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePoset {
    elements: Vec<AffineWeylElement>,
    lengths: Vec<usize>,
    order: Vec<Vec<bool>>,
    maximal: Vec<usize>,
    facet: Vec<usize>,
    mu: Coweight,
}

impl AdmissiblePoset {
    /// A poset from explicit data; `order[i][j]` means `elements[i] ≤ elements[j]`.
    pub fn from_order(
        group: &AffineWeylGroup,
        mut elements: Vec<AffineWeylElement>,
        facet: Vec<usize>,
        mu: Coweight,
    ) -> Self {
        group.sort_elements(&mut elements);
        elements.dedup();
        let lengths = elements.iter().map(|e| group.length(e)).collect();
        let order: Vec<Vec<bool>> = elements
            .iter()
            .map(|v| elements.iter().map(|w| group.bruhat_leq(v, w)).collect())
            .collect();
        let maximal = (0..elements.len())
            .filter(|&i| (0..elements.len()).all(|j| j == i || !order[i][j]))
            .collect();
        AdmissiblePoset {
            elements,
            lengths,
            order,
            maximal,
            facet,
            mu,
        }
    }

    pub fn elements(&self) -> &[AffineWeylElement] {
        &self.elements
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i][j]
    }

    pub fn order(&self) -> &[Vec<bool>] {
        &self.order
    }

    /// Indices of the maximal elements.
    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    /// The facet `J`; empty at Iwahori level.
    pub fn facet(&self) -> &[usize] {
        &self.facet
    }

    pub fn mu(&self) -> &Coweight {
        &self.mu
    }

    pub fn index_of(&self, w: &AffineWeylElement) -> Option<usize> {
        self.elements.iter().position(|e| e == w)
    }

    /// Pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.order[i][j] {
                    continue;
                }
                let between = (0..n)
                    .any(|k| k != i && k != j && self.order[i][k] && self.order[k][j]);
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Whether every Bruhat predecessor (within the component) is present.
    /// Only meaningful at Iwahori level.
    pub fn is_downward_closed(&self, group: &AffineWeylGroup) -> Result<bool> {
        let present: HashSet<&AffineWeylElement> = self.elements.iter().collect();
        for w in &self.elements {
            for v in group.bruhat_interval(w)? {
                if !present.contains(&v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `Adm_μ`: the union of the lower intervals of `t_λ` over the Weyl orbit of `μ`.
pub fn admissible_set(group: &AffineWeylGroup, mu: &Coweight) -> Result<AdmissiblePoset> {
    let datum = group.datum();
    datum.check_coweight(mu)?;
    if !datum.is_dominant_coweight(mu) {
        return Err(Error::NotDominant(format!("coweight {mu}")));
    }
    let mut union: BTreeSet<AffineWeylElement> = BTreeSet::new();
    for lambda in datum.coweight_orbit(mu) {
        let t = group.translation(&lambda)?;
        union.extend(group.bruhat_interval(&t)?);
    }
    let mut poset = AdmissiblePoset::from_order(group, union.into_iter().collect(), Vec::new(), mu.clone());
    let tops: BTreeSet<usize> = datum
        .coweight_orbit(mu)
        .iter()
        .filter_map(|lambda| {
            let t = group.translation(lambda).ok()?;
            poset.index_of(&t)
        })
        .collect();
    debug_assert_eq!(tops.iter().copied().collect::<Vec<_>>(), poset.maximal);
    poset.maximal = tops.into_iter().collect();
    Ok(poset)
}

fn check_facet(group: &AffineWeylGroup, facet: &[usize]) -> Result<Vec<usize>> {
    let nodes: BTreeSet<usize> = facet.iter().copied().collect();
    if let Some(&bad) = nodes.iter().find(|&&s| s >= group.nodes()) {
        return Err(Error::NodeOutOfRange {
            index: bad,
            nodes: group.nodes(),
        });
    }
    // Every proper subset of the affine Dynkin diagram is of finite type.
    if nodes.len() == group.nodes() {
        return Err(Error::InfiniteParabolic(nodes.into_iter().collect()));
    }
    Ok(nodes.into_iter().collect())
}

/// The finite parabolic subgroup `W_J`.
pub fn parabolic_subgroup(group: &AffineWeylGroup, facet: &[usize]) -> Result<Vec<AffineWeylElement>> {
    let facet = check_facet(group, facet)?;
    let mut seen = BTreeSet::from([group.identity()]);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(w) = queue.pop_front() {
        for &s in &facet {
            let v = group.simple(s).mul(&w);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `W_J w W_J`, sorted by length.
pub fn double_coset(
    group: &AffineWeylGroup,
    w: &AffineWeylElement,
    facet: &[usize],
) -> Result<Vec<AffineWeylElement>> {
    let parabolic = parabolic_subgroup(group, facet)?;
    let mut out: BTreeSet<AffineWeylElement> = BTreeSet::new();
    for x in &parabolic {
        let xw = x.mul(w);
        for y in &parabolic {
            out.insert(xw.mul(y));
        }
    }
    let mut out: Vec<_> = out.into_iter().collect();
    group.sort_elements(&mut out);
    Ok(out)
}

/// The unique maximal-length member of `W_J w W_J`.
pub fn max_representative(
    group: &AffineWeylGroup,
    w: &AffineWeylElement,
    facet: &[usize],
) -> Result<AffineWeylElement> {
    let facet = check_facet(group, facet)?;
    let mut u = w.clone();
    let mut len = group.length(&u);
    loop {
        let step = facet.iter().find_map(|&s| {
            let left = group.simple(s).mul(&u);
            let right = u.mul(group.simple(s));
            if group.length(&left) > len {
                Some(left)
            } else if group.length(&right) > len {
                Some(right)
            } else {
                None
            }
        });
        match step {
            Some(next) => {
                u = next;
                len += 1;
            }
            None => return Ok(u),
        }
    }
}

/// Double cosets `W_J \ poset / W_J`, each represented by its maximal-length
/// member and ordered by comparing representatives.
pub fn double_cosets(
    group: &AffineWeylGroup,
    poset: &AdmissiblePoset,
    facet: &[usize],
    policy: CosetPolicy,
) -> Result<AdmissiblePoset> {
    let facet = check_facet(group, facet)?;
    let present: HashSet<&AffineWeylElement> = poset.elements.iter().collect();
    let mut reps: BTreeSet<AffineWeylElement> = BTreeSet::new();
    for w in &poset.elements {
        let rep = max_representative(group, w, &facet)?;
        match policy {
            CosetPolicy::LiftInAdm => {
                reps.insert(rep);
            }
            CosetPolicy::MaxRepInAdm => {
                if present.contains(&rep) {
                    reps.insert(rep);
                }
            }
        }
    }
    Ok(AdmissiblePoset::from_order(
        group,
        reps.into_iter().collect(),
        facet,
        poset.mu.clone(),
    ))
}

/// `c_w = Σ_n (−1)^n #{w < w_1 < ⋯ < w_n}`, by enumerating every strict chain.
pub fn chain_coefficients(poset: &AdmissiblePoset) -> Vec<i64> {
    let n = poset.len();
    let above: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && poset.order[i][j]).collect())
        .collect();
    fn walk(at: usize, sign: i64, above: &[Vec<usize>]) -> i64 {
        above[at]
            .iter()
            .map(|&next| walk(next, -sign, above))
            .sum::<i64>()
            + sign
    }
    (0..n).map(|i| walk(i, 1, &above)).collect()
}

/// `−μ(w, 1̂)` for the poset with a top adjoined; equals [`chain_coefficients`].
pub fn mobius_coefficients(poset: &AdmissiblePoset) -> Vec<i64> {
    let n = poset.len();
    let mut out = vec![0i64; n];
    // Descending by length so every strict upper bound is already known.
    for i in (0..n).rev() {
        let above: i64 = (0..n)
            .filter(|&j| j != i && poset.order[i][j])
            .map(|j| out[j])
            .sum();
        out[i] = 1 - above;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{Isogeny, RootDatum, TypeLetter};

    fn group(letter: TypeLetter, rank: usize, isogeny: Isogeny) -> AffineWeylGroup {
        AffineWeylGroup::new(RootDatum::new(letter, rank, isogeny).unwrap())
    }

    #[test]
    fn small_admissible_sets() {
        let sl2 = group(TypeLetter::A, 1, Isogeny::SimplyConnected);
        let trivial = admissible_set(&sl2, &Coweight(vec![0])).unwrap();
        assert_eq!(trivial.len(), 1);
        assert!(trivial.elements()[0].is_identity());

        // One translation contributes a 4-element interval; the union over
        // both Weyl conjugates has 5.
        let t = sl2.translation(&Coweight(vec![2])).unwrap();
        assert_eq!(sl2.bruhat_interval(&t).unwrap().len(), 4);
        let adm = admissible_set(&sl2, &Coweight(vec![2])).unwrap();
        assert_eq!(adm.len(), 5);
        assert_eq!(adm.maximal().len(), 2);
        assert!(adm.is_downward_closed(&sl2).unwrap());

        let pgl2 = group(TypeLetter::A, 1, Isogeny::Adjoint);
        let adm = admissible_set(&pgl2, &Coweight(vec![1])).unwrap();
        assert_eq!(adm.len(), 3);
        assert_eq!(adm.lengths(), &[0, 1, 1]);
        assert!(adm.elements()[1..].iter().all(|e| e.is_translation()));

        assert!(matches!(
            admissible_set(&sl2, &Coweight(vec![-2])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            admissible_set(&sl2, &Coweight(vec![1])),
            Err(Error::NotInLattice(_))
        ));
        let tight = group(TypeLetter::A, 1, Isogeny::SimplyConnected).with_bound(3);
        assert!(matches!(
            admissible_set(&tight, &Coweight(vec![4])),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn chain_examples() {
        let sl2 = group(TypeLetter::A, 1, Isogeny::SimplyConnected);
        let id = sl2.identity();
        let s0 = sl2.simple(0).clone();
        let s1 = sl2.simple(1).clone();
        let single = AdmissiblePoset::from_order(&sl2, vec![id.clone()], vec![], Coweight(vec![0]));
        assert_eq!(chain_coefficients(&single), vec![1]);
        let vee = AdmissiblePoset::from_order(
            &sl2,
            vec![id.clone(), s0.clone(), s1.clone()],
            vec![],
            Coweight(vec![0]),
        );
        assert_eq!(chain_coefficients(&vee), vec![-1, 1, 1]);
        let two = AdmissiblePoset::from_order(&sl2, vec![id, s1], vec![], Coweight(vec![0]));
        assert_eq!(chain_coefficients(&two), vec![0, 1]);
    }

    #[test]
    fn cosets() {
        let sl2 = group(TypeLetter::A, 1, Isogeny::SimplyConnected);
        let adm = admissible_set(&sl2, &Coweight(vec![2])).unwrap();
        let same = double_cosets(&sl2, &adm, &[], CosetPolicy::LiftInAdm).unwrap();
        assert_eq!(same.elements(), adm.elements());
        let coarse = double_cosets(&sl2, &adm, &[1], CosetPolicy::LiftInAdm).unwrap();
        assert!(coarse.len() < adm.len());
        let parabolic = parabolic_subgroup(&sl2, &[1]).unwrap();
        assert_eq!(double_coset(&sl2, &sl2.identity(), &[1]).unwrap().len(), parabolic.len());
        assert!(matches!(
            double_cosets(&sl2, &adm, &[0, 1], CosetPolicy::LiftInAdm),
            Err(Error::InfiniteParabolic(_))
        ));
        let a2 = group(TypeLetter::A, 2, Isogeny::SimplyConnected);
        assert_eq!(parabolic_subgroup(&a2, &[0, 2]).unwrap().len(), 6);
        let c2 = group(TypeLetter::C, 2, Isogeny::SimplyConnected);
        assert_eq!(parabolic_subgroup(&c2, &[0, 2]).unwrap().len(), 4);
        assert_eq!(parabolic_subgroup(&c2, &[0, 1]).unwrap().len(), 8);
    }

    #[test]
    fn policies_differ_on_pgl2() {
        let pgl2 = group(TypeLetter::A, 1, Isogeny::Adjoint);
        let adm = admissible_set(&pgl2, &Coweight(vec![1])).unwrap();
        let lift = double_cosets(&pgl2, &adm, &[1], CosetPolicy::LiftInAdm).unwrap();
        let strict = double_cosets(&pgl2, &adm, &[1], CosetPolicy::MaxRepInAdm).unwrap();
        assert_eq!(lift.len(), 1);
        assert_eq!(lift.lengths(), &[2]);
        assert!(strict.is_empty());
    }
}
