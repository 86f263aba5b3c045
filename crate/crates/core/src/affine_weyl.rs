//! The extended affine Weyl group `W̃ = X_* ⋊ W`.
//!
//! Elements are stored as affine maps `x ↦ v̄(x) + λ` of coweight space, so
//! equality is structural and composition costs a few small matrix products.
//! The affine simple reflections are `s_1, …, s_n` (the finite ones) and
//! `s_0 = t_{θ^∨} s_θ`, the reflection in `⟨x, θ⟩ = 1`.
//!
//! Length is the number of affine root hyperplanes separating the base alcove
//! from its image. It is evaluated at the base point `ρ^∨/h`, whose pairing
//! with every root is non-integral.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::root_data::{Coweight, RootDatum};
use crate::{Error, Result};

/// Default bound on `ℓ(w)` for the exhaustive enumerations.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

type Matrix = Vec<Vec<i64>>;

fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik != 0 {
                for j in 0..n {
                    out[i][j] += aik * b[k][j];
                }
            }
        }
    }
    out
}

fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// `x ↦ F x + λ` on coweight coordinates. `finite_inv` caches `F^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    translation: Coweight,
    finite: Matrix,
    finite_inv: Matrix,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        AffineWeylElement {
            translation: Coweight::zero(rank),
            finite: identity_matrix(rank),
            finite_inv: identity_matrix(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.translation.rank()
    }

    pub fn translation(&self) -> &Coweight {
        &self.translation
    }

    /// Action of the finite part on coweight coordinates.
    pub fn finite_matrix(&self) -> &Matrix {
        &self.finite
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite == identity_matrix(self.rank())
    }

    pub fn is_translation(&self) -> bool {
        self.finite == identity_matrix(self.rank())
    }

    /// The finite part `v̄` as an element with zero translation.
    pub fn finite_part(&self) -> Self {
        AffineWeylElement {
            translation: Coweight::zero(self.rank()),
            finite: self.finite.clone(),
            finite_inv: self.finite_inv.clone(),
        }
    }

    /// `(t_λ v̄)(t_μ ū) = t_{λ + v̄μ} (v̄ū)`.
    pub fn mul(&self, other: &Self) -> Self {
        let moved = mat_vec(&self.finite, &other.translation.0);
        AffineWeylElement {
            translation: Coweight(
                self.translation
                    .0
                    .iter()
                    .zip(&moved)
                    .map(|(a, b)| a + b)
                    .collect(),
            ),
            finite: mat_mul(&self.finite, &other.finite),
            finite_inv: mat_mul(&other.finite_inv, &self.finite_inv),
        }
    }

    pub fn inverse(&self) -> Self {
        let back = mat_vec(&self.finite_inv, &self.translation.0);
        AffineWeylElement {
            translation: Coweight(back.into_iter().map(|x| -x).collect()),
            finite: self.finite_inv.clone(),
            finite_inv: self.finite.clone(),
        }
    }

    /// Image of a lattice point of coweight space.
    pub fn apply(&self, x: &Coweight) -> Coweight {
        let fx = mat_vec(&self.finite, &x.0);
        Coweight(fx.iter().zip(&self.translation.0).map(|(a, b)| a + b).collect())
    }
}

/// A word `s_{l_1} ⋯ s_{l_k} · τ` in the affine simple reflections followed by
/// a length-zero element `τ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub letters: Vec<usize>,
    pub omega: AffineWeylElement,
}

impl Word {
    pub fn plain(letters: Vec<usize>, rank: usize) -> Self {
        Word {
            letters,
            omega: AffineWeylElement::identity(rank),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_trivial_omega(&self) -> bool {
        self.omega.is_identity()
    }
}

/// Interchange form `t_λ · s_{w_1} ⋯ s_{w_k}`. The canonical form uses a
/// reduced word in the finite letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementDoc {
    pub translation: Coweight,
    pub word: Vec<usize>,
}

/// The extended affine Weyl group of a root datum.
#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    datum: RootDatum,
    simples: Vec<AffineWeylElement>,
    bound: usize,
}

impl AffineWeylGroup {
    pub fn new(datum: RootDatum) -> Self {
        let n = datum.rank();
        let mut simples = Vec::with_capacity(n + 1);
        // s_0: x ↦ x − (⟨x, θ⟩ − 1) θ^∨
        let theta = datum.highest_root().clone();
        let theta_cw = datum.coroot_to_coweight(datum.highest_root_coroot());
        let s_theta: Matrix = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| i64::from(j == k) - theta_cw.0[j] * theta.0[k])
                    .collect()
            })
            .collect();
        simples.push(AffineWeylElement {
            translation: theta_cw,
            finite: s_theta.clone(),
            finite_inv: s_theta,
        });
        for i in 1..=n {
            let a = datum.cartan();
            let m: Matrix = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| i64::from(j == k) - if k == i - 1 { a[i - 1][j] } else { 0 })
                        .collect()
                })
                .collect();
            simples.push(AffineWeylElement {
                translation: Coweight::zero(n),
                finite: m.clone(),
                finite_inv: m,
            });
        }
        AffineWeylGroup {
            datum,
            simples,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Affine simple reflections are indexed `0..=rank`.
    pub fn nodes(&self) -> usize {
        self.simples.len()
    }

    pub fn identity(&self) -> AffineWeylElement {
        AffineWeylElement::identity(self.rank())
    }

    pub fn simple(&self, i: usize) -> &AffineWeylElement {
        &self.simples[i]
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i < self.nodes() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index: i,
                nodes: self.nodes(),
            })
        }
    }

    /// `t_λ` for `λ` in the cocharacter lattice.
    pub fn translation(&self, lambda: &Coweight) -> Result<AffineWeylElement> {
        self.datum.check_coweight(lambda)?;
        let mut t = self.identity();
        t.translation = lambda.clone();
        Ok(t)
    }

    /// `t_λ · s_{l_1} ⋯ s_{l_k}`.
    pub fn element(&self, lambda: &Coweight, letters: &[usize]) -> Result<AffineWeylElement> {
        let mut w = self.translation(lambda)?;
        for &l in letters {
            self.check_node(l)?;
            w = w.mul(&self.simples[l]);
        }
        Ok(w)
    }

    pub fn product(&self, letters: &[usize]) -> Result<AffineWeylElement> {
        self.element(&Coweight::zero(self.rank()), letters)
    }

    pub fn evaluate(&self, word: &Word) -> Result<AffineWeylElement> {
        Ok(self.product(&word.letters)?.mul(&word.omega))
    }

    /// Number of separating affine hyperplanes `H_{a,k}`.
    pub fn length(&self, w: &AffineWeylElement) -> usize {
        let h = self.datum.coxeter_number();
        // F·ρ^∨ with ρ^∨ = (1, …, 1) in coweight coordinates.
        let moved: Vec<i64> = w.finite.iter().map(|row| row.iter().sum()).collect();
        self.datum
            .positive_roots()
            .iter()
            .map(|a| {
                let p: i64 = a.0.iter().zip(&moved).map(|(c, x)| c * x).sum();
                let t: i64 = a.0.iter().zip(&w.translation.0).map(|(c, x)| c * x).sum();
                // ⟨a, x_0⟩ ∈ (0, 1), ⟨a, w x_0⟩ = p/h + t.
                Integer::div_floor(&(p + h * t), &h).unsigned_abs() as usize
            })
            .sum()
    }

    pub fn is_left_descent(&self, w: &AffineWeylElement, i: usize) -> bool {
        self.length(&self.simples[i].mul(w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: &AffineWeylElement, i: usize) -> bool {
        self.length(&w.mul(&self.simples[i])) < self.length(w)
    }

    pub fn left_descents(&self, w: &AffineWeylElement) -> Vec<usize> {
        let l = self.length(w);
        (0..self.nodes())
            .filter(|&i| self.length(&self.simples[i].mul(w)) < l)
            .collect()
    }

    /// Greedy left descent: `w = s_{l_1} ⋯ s_{l_k} · τ` with `ℓ(τ) = 0`.
    pub fn reduced_word(&self, w: &AffineWeylElement) -> Word {
        let mut letters = Vec::new();
        let mut u = w.clone();
        let mut len = self.length(&u);
        while len > 0 {
            let (i, next, next_len) = (0..self.nodes())
                .find_map(|i| {
                    let v = self.simples[i].mul(&u);
                    let lv = self.length(&v);
                    (lv < len).then_some((i, v, lv))
                })
                .expect("an element of positive length has a left descent");
            letters.push(i);
            u = next;
            len = next_len;
        }
        Word { letters, omega: u }
    }

    /// The length-zero element `τ` with `w ∈ W_aff · τ`.
    pub fn omega_part(&self, w: &AffineWeylElement) -> AffineWeylElement {
        self.reduced_word(w).omega
    }

    /// Whether `v` and `w` lie in the same `W_aff`-coset.
    pub fn same_component(&self, v: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        self.datum
            .in_coroot_lattice(&(&v.translation - &w.translation))
    }

    /// For `ℓ(τ) = 0`: the permutation `σ` of nodes with `τ s_i τ^{-1} = s_{σ(i)}`.
    pub fn omega_permutation(&self, tau: &AffineWeylElement) -> Result<Vec<usize>> {
        if self.length(tau) != 0 {
            return Err(Error::NotLengthZero);
        }
        let inv = tau.inverse();
        Ok((0..self.nodes())
            .map(|i| {
                let c = tau.mul(&self.simples[i]).mul(&inv);
                self.simples
                    .iter()
                    .position(|s| *s == c)
                    .expect("length-zero elements normalise the simple reflections")
            })
            .collect())
    }

    /// Representatives of `Ω ≅ X_*/Q^∨`, identity first.
    pub fn length_zero_elements(&self) -> Vec<AffineWeylElement> {
        let n = self.rank();
        let mut out = vec![self.identity()];
        let candidates = (1..=n)
            .filter(|&j| self.datum.marks()[j] == 1)
            .map(|j| self.datum.fundamental_coweight(j));
        for lambda in candidates {
            if let Ok(t) = self.translation(&lambda) {
                let tau = self.omega_part(&t);
                if !out.contains(&tau) {
                    out.push(tau);
                }
            }
        }
        // Intermediate lattices: close under products.
        loop {
            let mut grew = false;
            for a in out.clone() {
                for b in out.clone() {
                    let c = a.mul(&b);
                    if !out.contains(&c) {
                        out.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        out
    }

    /// Bruhat order; elements of different `Ω`-components are incomparable.
    pub fn bruhat_leq(&self, v: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        if !self.same_component(v, w) {
            return false;
        }
        let mut v = v.clone();
        let mut w = w.clone();
        let mut lv = self.length(&v);
        let mut lw = self.length(&w);
        loop {
            if lv > lw {
                return false;
            }
            if lw == 0 {
                return v == w;
            }
            let (i, sw) = (0..self.nodes())
                .find_map(|i| {
                    let sw = self.simples[i].mul(&w);
                    (self.length(&sw) < lw).then_some((i, sw))
                })
                .expect("positive length has a left descent");
            w = sw;
            lw -= 1;
            let sv = self.simples[i].mul(&v);
            let lsv = self.length(&sv);
            if lsv < lv {
                v = sv;
                lv = lsv;
            }
        }
    }

    fn check_bound(&self, w: &AffineWeylElement) -> Result<usize> {
        let length = self.length(w);
        if length > self.bound {
            Err(Error::BoundExceeded {
                length,
                bound: self.bound,
            })
        } else {
            Ok(length)
        }
    }

    /// Every reduced word of `w`, by branching over left descents.
    pub fn all_reduced_words(&self, w: &AffineWeylElement) -> Result<Vec<Word>> {
        self.check_bound(w)?;
        let mut memo: HashMap<AffineWeylElement, BTreeSet<Vec<usize>>> = HashMap::new();
        let letters = self.reduced_words_rec(w, &mut memo);
        let omega = self.omega_part(w);
        Ok(letters
            .into_iter()
            .map(|letters| Word {
                letters,
                omega: omega.clone(),
            })
            .collect())
    }

    fn reduced_words_rec(
        &self,
        w: &AffineWeylElement,
        memo: &mut HashMap<AffineWeylElement, BTreeSet<Vec<usize>>>,
    ) -> BTreeSet<Vec<usize>> {
        if let Some(found) = memo.get(w) {
            return found.clone();
        }
        let descents = self.left_descents(w);
        let result = if descents.is_empty() {
            BTreeSet::from([Vec::new()])
        } else {
            let mut out = BTreeSet::new();
            for i in descents {
                let rest = self.simples[i].mul(w);
                for tail in self.reduced_words_rec(&rest, memo) {
                    let mut word = Vec::with_capacity(tail.len() + 1);
                    word.push(i);
                    word.extend(tail);
                    out.insert(word);
                }
            }
            out
        };
        memo.insert(w.clone(), result.clone());
        result
    }

    /// The lower Bruhat interval `{v : v ≤ w}`, by subwords of one reduced
    /// word. Sorted by length, then structurally.
    pub fn bruhat_interval(&self, w: &AffineWeylElement) -> Result<Vec<AffineWeylElement>> {
        self.check_bound(w)?;
        let word = self.reduced_word(w);
        let mut products: HashSet<AffineWeylElement> = HashSet::from([self.identity()]);
        for &l in &word.letters {
            let extended: Vec<AffineWeylElement> =
                products.iter().map(|x| x.mul(&self.simples[l])).collect();
            products.extend(extended);
        }
        let mut out: Vec<AffineWeylElement> =
            products.into_iter().map(|x| x.mul(&word.omega)).collect();
        self.sort_elements(&mut out);
        Ok(out)
    }

    pub fn sort_elements(&self, elements: &mut [AffineWeylElement]) {
        elements.sort_by_cached_key(|e| (self.length(e), e.clone()));
    }

    /// All elements `τ·u` of the `Ω`-component of `tau` with `ℓ ≤ max_length`,
    /// grouped by length.
    pub fn elements_up_to_length(
        &self,
        tau: &AffineWeylElement,
        max_length: usize,
    ) -> BTreeMap<usize, Vec<AffineWeylElement>> {
        let start = self.omega_part(tau);
        let mut seen: HashSet<AffineWeylElement> = HashSet::from([start.clone()]);
        let mut layers = BTreeMap::from([(0usize, vec![start.clone()])]);
        let mut frontier = VecDeque::from([start]);
        for len in 1..=max_length {
            let mut next = Vec::new();
            while let Some(w) = frontier.pop_front() {
                for s in &self.simples {
                    let v = s.mul(&w);
                    if self.length(&v) == len && seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            self.sort_elements(&mut next);
            frontier = next.iter().cloned().collect();
            layers.insert(len, next);
        }
        layers
    }

    /// Longest element of the finite Weyl group.
    pub fn longest_finite_element(&self) -> AffineWeylElement {
        let mut w = self.identity();
        let mut len = 0;
        while let Some(next) = (1..self.nodes()).find_map(|i| {
            let v = self.simples[i].mul(&w);
            (self.length(&v) > len).then_some(v)
        }) {
            w = next;
            len += 1;
        }
        w
    }

    /// Decomposes `w = t_λ · v̄` and returns `λ` with a reduced word of `v̄` in
    /// the finite letters.
    pub fn translation_and_finite_word(&self, w: &AffineWeylElement) -> (Coweight, Vec<usize>) {
        let finite = w.finite_part();
        let word = self.reduced_word(&finite);
        debug_assert!(word.omega.is_identity());
        debug_assert!(word.letters.iter().all(|&l| l != 0));
        (w.translation.clone(), word.letters)
    }

    pub fn from_doc(&self, doc: &ElementDoc) -> Result<AffineWeylElement> {
        self.datum.check_rank(doc.translation.rank())?;
        self.element(&doc.translation, &doc.word)
    }

    pub fn to_doc(&self, w: &AffineWeylElement) -> ElementDoc {
        let (translation, word) = self.translation_and_finite_word(w);
        ElementDoc { translation, word }
    }

    /// Order of the finite Weyl group.
    pub fn finite_weyl_order(&self) -> usize {
        let mut seen: HashSet<Matrix> = HashSet::from([identity_matrix(self.rank())]);
        let mut queue = VecDeque::from([identity_matrix(self.rank())]);
        while let Some(m) = queue.pop_front() {
            for s in &self.simples[1..] {
                let next = mat_mul(&s.finite, &m);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.len()
    }
}
