//! Line bundles on Demazure varieties through their degree vectors.
//!
//! A word `s_1 ⋯ s_n` of simple affine reflections gives an iterated
//! `P¹`-bundle; a line bundle on it is determined by its degrees on the `n`
//! distinguished curves, one per slot. Rows of the boundary matrix are the
//! deletion divisors `D_i`, columns are the slot curves.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::demazure::{affine_pairing, AffineWeight};
use crate::rational::{self, q, Q};
use crate::root_data::RootDatum;
use crate::{Error, Result};

pub const DEFAULT_PRIME: i64 = 2;

/// Scales at which a Fano perturbation is checked.
pub fn certificate_scales() -> [Q; 3] {
    [Q::new(1, 2), q(1), q(10)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVector {
    pub word: Vec<usize>,
    #[serde(with = "rational::vec")]
    pub degrees: Vec<Q>,
}

impl DegreeVector {
    pub fn new(word: Vec<usize>, degrees: Vec<Q>) -> Result<Self> {
        if word.len() != degrees.len() {
            return Err(Error::RankMismatch {
                expected: word.len(),
                found: degrees.len(),
            });
        }
        Ok(DegreeVector { word, degrees })
    }

    pub fn from_integers(word: Vec<usize>, degrees: &[i64]) -> Result<Self> {
        Self::new(word, degrees.iter().map(|&d| q(d)).collect())
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.word != other.word {
            return Err(Error::Parse("degree vectors on different words".into()));
        }
        Ok(DegreeVector {
            word: self.word.clone(),
            degrees: self.degrees.iter().zip(&other.degrees).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scaled(&self, c: Q) -> Self {
        DegreeVector {
            word: self.word.clone(),
            degrees: self.degrees.iter().map(|d| d * c).collect(),
        }
    }

    /// Degrees grouped by letter, in slot order.
    fn per_letter(&self) -> BTreeMap<usize, Vec<Q>> {
        let mut out: BTreeMap<usize, Vec<Q>> = BTreeMap::new();
        for (&s, &d) in self.word.iter().zip(&self.degrees) {
            out.entry(s).or_default().push(d);
        }
        out
    }

    /// Degree per affine node, when every node occurs and repeated letters agree.
    pub fn node_degrees(&self, nodes: usize) -> Option<Vec<Q>> {
        let groups = self.per_letter();
        (0..nodes)
            .map(|s| {
                let ds = groups.get(&s)?;
                ds.iter().all(|d| *d == ds[0]).then_some(ds[0])
            })
            .collect()
    }
}

/// Coefficients of `Σ_i c_i D_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryDivisor {
    #[serde(with = "rational::vec")]
    pub coefficients: Vec<Q>,
}

impl BoundaryDivisor {
    pub fn is_boundary(&self) -> bool {
        self.coefficients.iter().all(|c| *c >= q(0) && *c <= q(1))
    }

    pub fn is_subboundary(&self) -> bool {
        self.coefficients.iter().all(|c| *c >= q(0) && *c < q(1))
    }

    /// Degrees of the divisor: `Mᵀ c`.
    pub fn degrees(&self, datum: &RootDatum, word: &[usize]) -> Result<DegreeVector> {
        let m = boundary_matrix(datum, word)?;
        if m.len() != self.coefficients.len() {
            return Err(Error::RankMismatch {
                expected: m.len(),
                found: self.coefficients.len(),
            });
        }
        let degrees = (0..word.len())
            .map(|k| {
                (0..word.len())
                    .map(|i| self.coefficients[i] * q(m[i][k]))
                    .sum()
            })
            .collect();
        DegreeVector::new(word.to_vec(), degrees)
    }
}

/// A sequence of powers of a prime `p`, one per slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSequence {
    pub p: i64,
    #[serde(with = "rational::vec")]
    pub q: Vec<Q>,
}

fn is_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn is_power_of(mut n: i64, p: i64) -> bool {
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

impl QSequence {
    pub fn new(p: i64, q: Vec<Q>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidQ(format!("{p} is not prime")));
        }
        for x in &q {
            let ok = *x > Q::from_integer(0)
                && ((x.denom() == &1 && is_power_of(*x.numer(), p))
                    || (x.numer() == &1 && is_power_of(*x.denom(), p)));
            if !ok {
                return Err(Error::InvalidQ(format!("{x} is not a power of {p}")));
            }
        }
        Ok(QSequence { p, q })
    }

    pub fn constant(p: i64, n: usize) -> Result<Self> {
        Self::new(p, vec![q(1); n])
    }

    /// `q_i = p^{e_i}`.
    pub fn from_exponents(p: i64, exponents: &[i32]) -> Result<Self> {
        let values = exponents
            .iter()
            .map(|&e| {
                let base = Q::from_integer(p);
                Ok(if e >= 0 {
                    num_traits::checked_pow(base, e as usize).ok_or(Error::Overflow("q power"))?
                } else {
                    num_traits::checked_pow(base, (-e) as usize)
                        .ok_or(Error::Overflow("q power"))?
                        .recip()
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, values)
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn is_constant_one(&self) -> bool {
        self.q.iter().all(|x| *x == q(1))
    }

    /// Shape required of permissible sequences.
    pub fn is_non_decreasing(&self) -> bool {
        self.q.windows(2).all(|w| w[0] <= w[1])
    }
}

fn check_word(datum: &RootDatum, word: &[usize]) -> Result<()> {
    match word.iter().find(|&&s| s >= datum.affine_nodes()) {
        Some(&bad) => Err(Error::NodeOutOfRange {
            index: bad,
            nodes: datum.affine_nodes(),
        }),
        None => Ok(()),
    }
}

fn check_q(word: &[usize], q: &QSequence) -> Result<()> {
    if q.len() != word.len() {
        return Err(Error::InvalidQ(format!(
            "{} entries for a word of length {}",
            q.len(),
            word.len()
        )));
    }
    Ok(())
}

/// Degrees of `L(ν)`: the pairing of each slot's affine coroot with `ν`.
pub fn line_bundle_degrees(
    datum: &RootDatum,
    word: &[usize],
    nu: &AffineWeight,
) -> Result<DegreeVector> {
    check_word(datum, word)?;
    datum.check_rank(nu.finite.rank())?;
    let degrees = word
        .iter()
        .map(|&s| q(affine_pairing(datum, s, nu)))
        .collect();
    DegreeVector::new(word.to_vec(), degrees)
}

/// `M[i][k]`: degree of `O(D_i)` on the slot-`k` curve.
pub fn boundary_matrix(datum: &RootDatum, word: &[usize]) -> Result<Vec<Vec<i64>>> {
    check_word(datum, word)?;
    let cartan = datum.affine_cartan();
    let n = word.len();
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|k| match k.cmp(&i) {
                    std::cmp::Ordering::Greater => 0,
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Less => cartan[word[k]][word[i]],
                })
                .collect()
        })
        .collect())
}

/// Degrees of `ω^{-1} ≅ O(∂) ⊗ O(q)`, split into its two parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnticanonicalDegrees {
    pub boundary: DegreeVector,
    pub twist: DegreeVector,
    pub total: DegreeVector,
}

pub fn anticanonical_degrees(
    datum: &RootDatum,
    word: &[usize],
    q_seq: &QSequence,
) -> Result<AnticanonicalDegrees> {
    check_q(word, q_seq)?;
    let ones = BoundaryDivisor {
        coefficients: vec![q(1); word.len()],
    };
    let boundary = ones.degrees(datum, word)?;
    let twist = DegreeVector::new(word.to_vec(), q_seq.q.clone())?;
    let total = boundary.try_add(&twist)?;
    Ok(AnticanonicalDegrees {
        boundary,
        twist,
        total,
    })
}

/// Positive, and strictly decreasing along the slots of each letter.
pub fn is_ample(d: &DegreeVector) -> bool {
    d.degrees.iter().all(|x| *x > q(0))
        && d
            .per_letter()
            .values()
            .all(|ds| ds.windows(2).all(|w| w[0] > w[1]))
}

/// Non-negative, and weakly decreasing along the slots of each letter.
pub fn is_semiample(d: &DegreeVector) -> bool {
    d.degrees.iter().all(|x| *x >= q(0))
        && d
            .per_letter()
            .values()
            .all(|ds| ds.windows(2).all(|w| w[0] >= w[1]))
}

/// Whether `−K − ∂` (degrees `q_i`) is semi-ample.
pub fn semiample_anticanonical(word: &[usize], q_seq: &QSequence) -> Result<bool> {
    check_q(word, q_seq)?;
    Ok(is_semiample(&DegreeVector::new(word.to_vec(), q_seq.q.clone())?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplenessCheck {
    #[serde(with = "rational::single")]
    pub c: Q,
    #[serde(with = "rational::vec")]
    pub degrees: Vec<Q>,
    pub ample: bool,
}

/// Boundary coefficients `ε` with `E + c Σ ε_i D_i` ample for every `c > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoCertificate {
    pub word: Vec<usize>,
    /// Integer coefficients before normalisation.
    pub integers: Vec<i64>,
    pub scale: i64,
    #[serde(with = "rational::vec")]
    pub epsilon: Vec<Q>,
    /// Degrees of `Σ a_i D_i`.
    pub integer_degrees: Vec<i64>,
    pub checks: Vec<AmplenessCheck>,
    /// Exact check of ampleness for every positive `c`.
    pub ample_for_all_c: bool,
}

impl FanoCertificate {
    pub fn passes(&self) -> bool {
        self.ample_for_all_c && self.checks.iter().all(|c| c.ample)
    }

    pub fn divisor(&self) -> BoundaryDivisor {
        BoundaryDivisor {
            coefficients: self.epsilon.clone(),
        }
    }
}

/// Integers `0 = a_n < a_{n-1} < ⋯ < a_1` whose divisor `Σ a_i D_i` has
/// non-negative, strictly decreasing slot degrees. Built from the last slot
/// backwards, taking each `a_k` minimal.
pub fn perturbation_integers(datum: &RootDatum, word: &[usize]) -> Result<(Vec<i64>, Vec<i64>)> {
    let m = boundary_matrix(datum, word)?;
    let n = word.len();
    let mut a = vec![0i64; n];
    let mut degrees = vec![0i64; n];
    for k in (0..n).rev() {
        // Slot k only sees D_i for i ≥ k, and D_k with degree 1.
        let mut rest = 0i64;
        for i in k + 1..n {
            rest = a[i]
                .checked_mul(m[i][k])
                .and_then(|x| x.checked_add(rest))
                .ok_or(Error::Overflow("perturbation"))?;
        }
        let mut need = if k + 1 < n { a[k + 1] + 1 } else { 0 };
        need = need.max(-rest);
        if let Some(&later) = degrees[k + 1..].iter().max() {
            need = need.max(later + 1 - rest);
        }
        a[k] = need;
        degrees[k] = need + rest;
    }
    Ok((a, degrees))
}

/// The perturbation search; `None` when `q` is not non-increasing along some
/// repeated letter, in which case no perturbation works for small `c`.
pub fn fano_perturbation(
    datum: &RootDatum,
    word: &[usize],
    q_seq: &QSequence,
) -> Result<Option<FanoCertificate>> {
    check_word(datum, word)?;
    check_q(word, q_seq)?;
    let twist = DegreeVector::new(word.to_vec(), q_seq.q.clone())?;
    if !is_semiample(&twist) {
        return Ok(None);
    }
    let (integers, integer_degrees) = perturbation_integers(datum, word)?;
    let scale = integers.iter().copied().max().unwrap_or(0) + 1;
    let epsilon: Vec<Q> = integers.iter().map(|&a| Q::new(a, scale)).collect();
    let divisor = BoundaryDivisor {
        coefficients: epsilon.clone(),
    };
    let perturbation = divisor.degrees(datum, word)?;
    let checks = certificate_scales()
        .into_iter()
        .map(|c| {
            let total = perturbation.scaled(c).try_add(&twist)?;
            Ok(AmplenessCheck {
                c,
                ample: is_ample(&total),
                degrees: total.degrees,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ample_for_all_c = ample_for_every_scale(&perturbation, &twist);
    Ok(Some(FanoCertificate {
        word: word.to_vec(),
        integers,
        scale,
        epsilon,
        integer_degrees,
        checks,
        ample_for_all_c,
    }))
}

/// Whether `c·a + b` is ample for all `c > 0`. Each condition is affine in
/// `c`, so it holds on `(0, ∞)` iff the slope and the value at `0` are
/// non-negative and not both zero.
pub fn ample_for_every_scale(a: &DegreeVector, b: &DegreeVector) -> bool {
    let positive = |slope: Q, base: Q| slope >= q(0) && base >= q(0) && (slope > q(0) || base > q(0));
    if !a.degrees.iter().zip(&b.degrees).all(|(&x, &y)| positive(x, y)) {
        return false;
    }
    let n = a.len();
    for i in 0..n {
        if let Some(j) = (i + 1..n).find(|&j| a.word[j] == a.word[i]) {
            if !positive(a.degrees[i] - a.degrees[j], b.degrees[i] - b.degrees[j]) {
                return false;
            }
        }
    }
    true
}

/// `Σ_s comark_s · deg_s` over per-node degrees; equals the level of `ν`
/// for the degrees of `L(ν)`.
pub fn central_charge(datum: &RootDatum, node_degrees: &[Q]) -> Result<Q> {
    if node_degrees.len() != datum.affine_nodes() {
        return Err(Error::RankMismatch {
            expected: datum.affine_nodes(),
            found: node_degrees.len(),
        });
    }
    Ok(node_degrees
        .iter()
        .zip(datum.comarks())
        .map(|(d, &m)| d * q(m))
        .sum())
}
