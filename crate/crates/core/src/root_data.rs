//! Finite root data of types A–G and their untwisted affine extension.
//!
//! Coordinates are fixed once and used everywhere:
//!
//! * [`Weight`]: fundamental-weight coordinates, `ν_i = ⟨α_i^∨, ν⟩`;
//! * [`Root`]: simple-root coordinates;
//! * [`Coroot`]: simple-coroot coordinates;
//! * [`Coweight`]: `λ_j = ⟨λ, α_j⟩`.
//!
//! With these choices every pairing except coweight/weight is an integer
//! matrix-vector product; only that one needs the inverse Cartan matrix.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{q, Q};
use crate::{Error, Result};

macro_rules! lattice_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                Self(vec![0; rank])
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                Self(self.0.iter().map(|x| x * k).collect())
            }

            /// `self + k * other`
            pub fn add_scaled(&self, k: i64, other: &Self) -> Self {
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                self.add_scaled(1, rhs)
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                self.add_scaled(-1, rhs)
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                self.scaled(-1)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($name), self.0)
            }
        }
    };
}

lattice_vector!(
    /// A weight in fundamental-weight coordinates.
    Weight
);
lattice_vector!(
    /// A root-lattice vector in simple-root coordinates.
    Root
);
lattice_vector!(
    /// A coroot-lattice vector in simple-coroot coordinates.
    Coroot
);
lattice_vector!(
    /// A coweight, recorded by its pairings `⟨λ, α_j⟩` with the simple roots.
    Coweight
);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "A" | "a" => TypeLetter::A,
            "B" | "b" => TypeLetter::B,
            "C" | "c" => TypeLetter::C,
            "D" | "d" => TypeLetter::D,
            "E" | "e" => TypeLetter::E,
            "F" | "f" => TypeLetter::F,
            "G" | "g" => TypeLetter::G,
            other => {
                return Err(Error::InvalidType {
                    letter: other.to_string(),
                    rank: 0,
                })
            }
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
            TypeLetter::E => "E",
            TypeLetter::F => "F",
            TypeLetter::G => "G",
        }
    }
}

/// Choice of cocharacter lattice `Q^∨ ⊆ X_* ⊆ P^∨`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    /// `X_*` spanned by the coroot lattice and these coweights.
    Intermediate(Vec<Coweight>),
}

/// JSON form of a root datum: `{"type":"A","rank":2,"isogeny":"sc"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumConfig {
    #[serde(rename = "type")]
    pub type_letter: String,
    pub rank: usize,
    #[serde(default)]
    pub isogeny: IsogenyConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IsogenyConfig {
    Named(String),
    Intermediate { intermediate: Vec<Vec<i64>> },
}

impl Default for IsogenyConfig {
    fn default() -> Self {
        IsogenyConfig::Named("sc".into())
    }
}

impl IsogenyConfig {
    pub fn to_isogeny(&self) -> Result<Isogeny> {
        match self {
            IsogenyConfig::Named(name) => match name.as_str() {
                "sc" | "simply_connected" => Ok(Isogeny::SimplyConnected),
                "adj" | "adjoint" => Ok(Isogeny::Adjoint),
                other => Err(Error::InvalidIsogeny(other.to_string())),
            },
            IsogenyConfig::Intermediate { intermediate } => Ok(Isogeny::Intermediate(
                intermediate.iter().cloned().map(Coweight).collect(),
            )),
        }
    }
}

/// Either side of a pairing: the dual space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dual {
    Coroot(Coroot),
    Coweight(Coweight),
}

/// Either side of a pairing: the primal space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primal {
    Root(Root),
    Weight(Weight),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    letter: TypeLetter,
    rank: usize,
    isogeny: Isogeny,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<Q>>,
    symmetrizer: Vec<Q>,
    positive_roots: Vec<Root>,
    positive_coroots: Vec<Coroot>,
    theta: Root,
    theta_coroot: Coroot,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    coxeter_number: i64,
    dual_coxeter_number: i64,
    affine_cartan: Vec<Vec<i64>>,
    /// Canonical keys of the classes of `X_*/Q^∨`.
    cocharacter_classes: BTreeSet<Vec<Q>>,
}

pub fn cartan_matrix(letter: TypeLetter, rank: usize) -> Result<Vec<Vec<i64>>> {
    let valid = match letter {
        TypeLetter::A => rank >= 1,
        TypeLetter::B | TypeLetter::C => rank >= 2,
        TypeLetter::D => rank >= 4,
        TypeLetter::E => (6..=8).contains(&rank),
        TypeLetter::F => rank == 4,
        TypeLetter::G => rank == 2,
    };
    if !valid {
        return Err(Error::InvalidType {
            letter: letter.as_str().into(),
            rank,
        });
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // Simple bonds, 1-based node labels.
    let mut bond = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match letter {
        TypeLetter::A | TypeLetter::B | TypeLetter::C => {
            for i in 1..n {
                bond(i, i + 1);
            }
        }
        TypeLetter::D => {
            for i in 1..n - 1 {
                bond(i, i + 1);
            }
            bond(n - 2, n);
        }
        TypeLetter::E => {
            bond(1, 3);
            bond(2, 4);
            for i in 3..n {
                bond(i, i + 1);
            }
        }
        TypeLetter::F => {
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
        }
        TypeLetter::G => bond(1, 2),
    }
    match letter {
        // α_n short
        TypeLetter::B => a[n - 1][n - 2] = -2,
        // α_n long
        TypeLetter::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        TypeLetter::F => a[2][1] = -2,
        // α_1 short, α_2 long
        TypeLetter::G => a[0][1] = -3,
        _ => {}
    }
    Ok(a)
}

fn invert(matrix: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = matrix.len();
    let mut m: Vec<Vec<Q>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| q(x)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootDatum {
    pub fn new(letter: TypeLetter, rank: usize, isogeny: Isogeny) -> Result<Self> {
        let cartan = cartan_matrix(letter, rank)?;
        let n = rank;
        if let Isogeny::Intermediate(gens) = &isogeny {
            if let Some(g) = gens.iter().find(|g| g.rank() != n) {
                return Err(Error::RankMismatch {
                    expected: n,
                    found: g.rank(),
                });
            }
        }
        let cartan_inverse = invert(&cartan);

        // d_i = |α_i|²/2, normalised so the smallest is 1.
        let mut symmetrizer = vec![Q::zero(); n];
        symmetrizer[0] = Q::one();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if cartan[i][j] != 0 && i != j && symmetrizer[j].is_zero() {
                    symmetrizer[j] = symmetrizer[i] * q(cartan[i][j]) / q(cartan[j][i]);
                    queue.push_back(j);
                }
            }
        }
        let smallest = *symmetrizer.iter().min().expect("rank ≥ 1");
        for d in symmetrizer.iter_mut() {
            *d /= smallest;
        }

        let positive_roots = reflection_closure(&cartan);
        let theta = positive_roots
            .iter()
            .max_by_key(|r| r.0.iter().sum::<i64>())
            .cloned()
            .expect("non-empty root system");
        let mut datum = RootDatum {
            letter,
            rank,
            isogeny,
            cartan,
            cartan_inverse,
            symmetrizer,
            positive_coroots: Vec::new(),
            positive_roots,
            theta_coroot: Coroot::zero(n),
            theta: theta.clone(),
            marks: Vec::new(),
            comarks: Vec::new(),
            coxeter_number: 0,
            dual_coxeter_number: 0,
            affine_cartan: Vec::new(),
            cocharacter_classes: BTreeSet::new(),
        };
        datum.positive_coroots = datum
            .positive_roots
            .iter()
            .map(|r| datum.coroot_of(r))
            .collect();
        datum.theta_coroot = datum.coroot_of(&theta);
        datum.marks = std::iter::once(1).chain(theta.0.iter().copied()).collect();
        datum.comarks = std::iter::once(1)
            .chain(datum.theta_coroot.0.iter().copied())
            .collect();
        datum.coxeter_number = 1 + theta.0.iter().sum::<i64>();
        datum.dual_coxeter_number = 1 + datum.theta_coroot.0.iter().sum::<i64>();
        datum.affine_cartan = datum.build_affine_cartan();
        datum.cocharacter_classes = datum.build_cocharacter_classes();
        Ok(datum)
    }

    pub fn from_config(config: &DatumConfig) -> Result<Self> {
        let letter = TypeLetter::parse(&config.type_letter).map_err(|_| Error::InvalidType {
            letter: config.type_letter.clone(),
            rank: config.rank,
        })?;
        Self::new(letter, config.rank, config.isogeny.to_isogeny()?)
    }

    pub fn config(&self) -> DatumConfig {
        let isogeny = match &self.isogeny {
            Isogeny::SimplyConnected => IsogenyConfig::Named("sc".into()),
            Isogeny::Adjoint => IsogenyConfig::Named("adj".into()),
            Isogeny::Intermediate(gens) => IsogenyConfig::Intermediate {
                intermediate: gens.iter().map(|g| g.0.clone()).collect(),
            },
        };
        DatumConfig {
            type_letter: self.letter.as_str().into(),
            rank: self.rank,
            isogeny,
        }
    }

    /// The coroot `a^∨ = 2a/(a,a)` in simple-coroot coordinates.
    fn coroot_of(&self, root: &Root) -> Coroot {
        let n = self.rank;
        let c = &root.0;
        let mut norm = Q::zero();
        for i in 0..n {
            for j in 0..n {
                norm += q(c[i] * c[j]) * self.symmetrizer[i] * q(self.cartan[i][j]);
            }
        }
        let half = norm / q(2);
        Coroot(
            (0..n)
                .map(|j| {
                    let v = q(c[j]) * self.symmetrizer[j] / half;
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect(),
        )
    }

    fn build_affine_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let theta_cw = self.coroot_to_coweight(&self.theta_coroot);
        let theta_w = self.root_to_weight(&self.theta);
        let mut m = vec![vec![0i64; n + 1]; n + 1];
        m[0][0] = 2;
        for t in 1..=n {
            m[0][t] = -theta_cw.0[t - 1];
            m[t][0] = -theta_w.0[t - 1];
            for s in 1..=n {
                m[s][t] = self.cartan[s - 1][t - 1];
            }
        }
        m
    }

    /// Canonical key of `λ + Q^∨`: fractional parts of its coroot coordinates.
    fn coroot_class_key(&self, lambda: &Coweight) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                let x: Q = (0..self.rank)
                    .map(|j| self.cartan_inverse[j][i] * q(lambda.0[j]))
                    .sum();
                x - x.floor()
            })
            .collect()
    }

    fn build_cocharacter_classes(&self) -> BTreeSet<Vec<Q>> {
        let n = self.rank;
        let gens: Vec<Coweight> = match &self.isogeny {
            Isogeny::SimplyConnected => Vec::new(),
            Isogeny::Adjoint => (0..n)
                .map(|i| {
                    let mut v = Coweight::zero(n);
                    v.0[i] = 1;
                    v
                })
                .collect(),
            Isogeny::Intermediate(gens) => gens.clone(),
        };
        let add = |a: &[Q], b: &[Q]| -> Vec<Q> {
            a.iter()
                .zip(b)
                .map(|(x, y)| {
                    let s = x + y;
                    s - s.floor()
                })
                .collect()
        };
        let gen_keys: Vec<Vec<Q>> = gens.iter().map(|g| self.coroot_class_key(g)).collect();
        let mut classes = BTreeSet::from([vec![Q::zero(); n]]);
        let mut queue = VecDeque::from([vec![Q::zero(); n]]);
        while let Some(k) = queue.pop_front() {
            for g in &gen_keys {
                let next = add(&k, g);
                if classes.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        classes
    }

    pub fn type_letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of affine nodes `0..=rank`.
    pub fn affine_nodes(&self) -> usize {
        self.rank + 1
    }

    pub fn isogeny(&self) -> &Isogeny {
        &self.isogeny
    }

    /// `A_ij = ⟨α_i^∨, α_j⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `⟨α_s^∨, α_t⟩` over the affine nodes, node 0 carrying `α_0 = δ − θ`.
    pub fn affine_cartan(&self) -> &[Vec<i64>] {
        &self.affine_cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Coroots of [`Self::positive_roots`], index for index.
    pub fn positive_coroots(&self) -> &[Coroot] {
        &self.positive_coroots
    }

    pub fn highest_root(&self) -> &Root {
        &self.theta
    }

    pub fn highest_root_coroot(&self) -> &Coroot {
        &self.theta_coroot
    }

    /// Marks `(1, a_1, …, a_n)` with `θ = Σ a_i α_i`.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Comarks `(1, a_1^∨, …, a_n^∨)` with `θ^∨ = Σ a_i^∨ α_i^∨`.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter_number
    }

    pub fn check_rank(&self, found: usize) -> Result<()> {
        if found == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank,
                found,
            })
        }
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn rho_coweight(&self) -> Coweight {
        Coweight(vec![1; self.rank])
    }

    /// Fundamental weight `ϖ_i` for a finite node `1 ≤ i ≤ rank`.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank);
        w.0[i - 1] = 1;
        w
    }

    /// Fundamental coweight `ϖ_i^∨` for a finite node `1 ≤ i ≤ rank`.
    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        let mut w = Coweight::zero(self.rank);
        w.0[i - 1] = 1;
        w
    }

    /// Simple root `α_i` as a root vector, `1 ≤ i ≤ rank`.
    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = Root::zero(self.rank);
        r.0[i - 1] = 1;
        r
    }

    /// Simple coroot `α_i^∨`, `1 ≤ i ≤ rank`.
    pub fn simple_coroot(&self, i: usize) -> Coroot {
        let mut r = Coroot::zero(self.rank);
        r.0[i - 1] = 1;
        r
    }

    /// A root vector written in fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * root.0[j]).sum())
                .collect(),
        )
    }

    /// A coroot vector written in coweight coordinates.
    pub fn coroot_to_coweight(&self, coroot: &Coroot) -> Coweight {
        Coweight(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| coroot.0[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    pub fn pair_coroot_weight(&self, coroot: &Coroot, weight: &Weight) -> i64 {
        coroot.0.iter().zip(&weight.0).map(|(a, b)| a * b).sum()
    }

    pub fn pair_coweight_root(&self, coweight: &Coweight, root: &Root) -> i64 {
        coweight.0.iter().zip(&root.0).map(|(a, b)| a * b).sum()
    }

    pub fn pair_coroot_root(&self, coroot: &Coroot, root: &Root) -> i64 {
        self.pair_coweight_root(&self.coroot_to_coweight(coroot), root)
    }

    pub fn pair_coweight_weight(&self, coweight: &Coweight, weight: &Weight) -> Q {
        let n = self.rank;
        (0..n)
            .map(|i| {
                let fund: Q = (0..n)
                    .map(|j| self.cartan_inverse[j][i] * q(coweight.0[j]))
                    .sum();
                fund * q(weight.0[i])
            })
            .sum()
    }

    /// Bilinear pairing between the dual and primal spaces, exact.
    pub fn pair(&self, left: &Dual, right: &Primal) -> Result<Q> {
        let (l, r) = match (left, right) {
            (Dual::Coroot(a), Primal::Root(b)) => (a.rank(), b.rank()),
            (Dual::Coroot(a), Primal::Weight(b)) => (a.rank(), b.rank()),
            (Dual::Coweight(a), Primal::Root(b)) => (a.rank(), b.rank()),
            (Dual::Coweight(a), Primal::Weight(b)) => (a.rank(), b.rank()),
        };
        self.check_rank(l)?;
        self.check_rank(r)?;
        Ok(match (left, right) {
            (Dual::Coroot(a), Primal::Root(b)) => q(self.pair_coroot_root(a, b)),
            (Dual::Coroot(a), Primal::Weight(b)) => q(self.pair_coroot_weight(a, b)),
            (Dual::Coweight(a), Primal::Root(b)) => q(self.pair_coweight_root(a, b)),
            (Dual::Coweight(a), Primal::Weight(b)) => self.pair_coweight_weight(a, b),
        })
    }

    pub fn reflect_weight(&self, i: usize, weight: &Weight) -> Weight {
        let k = weight.0[i - 1];
        Weight(
            (0..self.rank)
                .map(|j| weight.0[j] - k * self.cartan[j][i - 1])
                .collect(),
        )
    }

    pub fn reflect_coweight(&self, i: usize, coweight: &Coweight) -> Coweight {
        let k = coweight.0[i - 1];
        Coweight(
            (0..self.rank)
                .map(|j| coweight.0[j] - k * self.cartan[i - 1][j])
                .collect(),
        )
    }

    pub fn reflect_root(&self, i: usize, root: &Root) -> Root {
        let k: i64 = (0..self.rank).map(|j| self.cartan[i - 1][j] * root.0[j]).sum();
        let mut r = root.clone();
        r.0[i - 1] -= k;
        r
    }

    pub fn is_dominant_weight(&self, weight: &Weight) -> bool {
        weight.0.iter().all(|&x| x >= 0)
    }

    pub fn is_dominant_coweight(&self, coweight: &Coweight) -> bool {
        coweight.0.iter().all(|&x| x >= 0)
    }

    /// The Weyl orbit of a coweight, sorted.
    pub fn coweight_orbit(&self, coweight: &Coweight) -> Vec<Coweight> {
        let mut seen = BTreeSet::from([coweight.clone()]);
        let mut queue = VecDeque::from([coweight.clone()]);
        while let Some(c) = queue.pop_front() {
            for i in 1..=self.rank {
                let r = self.reflect_coweight(i, &c);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The unique dominant element of the Weyl orbit.
    pub fn dominant_coweight(&self, coweight: &Coweight) -> Coweight {
        let mut c = coweight.clone();
        while let Some(i) = (1..=self.rank).find(|&i| c.0[i - 1] < 0) {
            c = self.reflect_coweight(i, &c);
        }
        c
    }

    pub fn in_coroot_lattice(&self, coweight: &Coweight) -> bool {
        self.coroot_class_key(coweight).iter().all(Q::is_zero)
    }

    /// Membership in the cocharacter lattice `X_*` selected by the isogeny.
    pub fn in_cocharacter_lattice(&self, coweight: &Coweight) -> bool {
        coweight.rank() == self.rank
            && self
                .cocharacter_classes
                .contains(&self.coroot_class_key(coweight))
    }

    /// Membership in the character lattice `X^*`, the dual of `X_*`.
    pub fn in_weight_lattice(&self, weight: &Weight) -> bool {
        if weight.rank() != self.rank {
            return false;
        }
        match &self.isogeny {
            Isogeny::SimplyConnected => true,
            Isogeny::Adjoint => (1..=self.rank)
                .all(|j| self.pair_coweight_weight(&self.fundamental_coweight(j), weight).is_integer()),
            Isogeny::Intermediate(gens) => gens
                .iter()
                .all(|g| self.pair_coweight_weight(g, weight).is_integer()),
        }
    }

    pub fn check_weight(&self, weight: &Weight) -> Result<()> {
        self.check_rank(weight.rank())?;
        if self.in_weight_lattice(weight) {
            Ok(())
        } else {
            Err(Error::NotInLattice(weight.to_string()))
        }
    }

    pub fn check_coweight(&self, coweight: &Coweight) -> Result<()> {
        self.check_rank(coweight.rank())?;
        if self.in_cocharacter_lattice(coweight) {
            Ok(())
        } else {
            Err(Error::NotInLattice(coweight.to_string()))
        }
    }

    /// Order of the fundamental group `X_*/Q^∨`.
    pub fn fundamental_group_order(&self) -> usize {
        self.cocharacter_classes.len()
    }

    /// `Π_{a>0} ⟨λ+ρ, a^∨⟩ / ⟨ρ, a^∨⟩` for dominant `λ`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u128> {
        self.check_rank(lambda.rank())?;
        if !self.is_dominant_weight(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let shifted = lambda + &self.rho();
        let rho = self.rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for coroot in &self.positive_coroots {
            num *= BigInt::from(self.pair_coroot_weight(coroot, &shifted));
            den *= BigInt::from(self.pair_coroot_weight(coroot, &rho));
        }
        let (quot, rem) = (&num / &den, &num % &den);
        assert!(rem.is_zero() && quot.is_positive(), "Weyl dimension must be a positive integer");
        quot.to_u128().ok_or(Error::Overflow("weyl_dimension"))
    }

    /// Whether `⟨μ, a⟩ ∈ {−1, 0, 1}` for every root `a`.
    pub fn is_minuscule(&self, mu: &Coweight) -> Result<bool> {
        self.check_rank(mu.rank())?;
        Ok(self
            .positive_roots
            .iter()
            .all(|a| self.pair_coweight_root(mu, a).abs() <= 1))
    }

    /// For a nonzero dominant minuscule `μ`, the unique node `j` with
    /// `⟨μ, α_j⟩ = 1`.
    pub fn minuscule_node(&self, mu: &Coweight) -> Option<usize> {
        if !self.is_dominant_coweight(mu) || !self.is_minuscule(mu).ok()? {
            return None;
        }
        let nodes: Vec<usize> = (1..=self.rank).filter(|&j| mu.0[j - 1] == 1).collect();
        match nodes.as_slice() {
            [j] => Some(*j),
            _ => None,
        }
    }

    /// `⟨θ^∨, ν⟩`.
    pub fn theta_pairing(&self, weight: &Weight) -> i64 {
        self.pair_coroot_weight(&self.theta_coroot, weight)
    }
}

/// Positive roots by closure of the simple roots under simple reflections,
/// sorted by height then lexicographically.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let simple: Vec<Root> = (0..n)
        .map(|i| {
            let mut r = Root::zero(n);
            r.0[i] = 1;
            r
        })
        .collect();
    let mut seen: BTreeSet<Root> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Root> = simple.into_iter().collect();
    while let Some(root) = queue.pop_front() {
        for i in 0..n {
            let k: i64 = (0..n).map(|j| cartan[i][j] * root.0[j]).sum();
            if k == 0 {
                continue;
            }
            let mut r = root.clone();
            r.0[i] -= k;
            if r.0.iter().all(|&x| x >= 0) && !r.is_zero() && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    roots
}
