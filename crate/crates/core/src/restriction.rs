//! Restrictions `[X_α]|_{e_β}` in equivariant K-theory and cohomology.
//!
//! With `λ = σ(α)` and `μ = σ(β)`:
//!
//! * K-theory: `(−1)^{l(α)} Σ_{S ∈ SSVT(λ, μ)} Π_{x ∈ S} (1 / (t_{β'(x)} t_{β'(z(x))}) − 1)`
//! * cohomology: `Σ_{P ∈ SSYT(λ, μ)} Π_{x ∈ P} (−t_{β'(x)} − t_{β'(z(x))})`
//!
//! where `t_{bar(k)}` is `t_k^{-1}` in K-theory and `−t_k` in cohomology.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indexcomb::{bar_unchecked, enumerate_isotropic, IsotropicIndex};
use crate::laurent::{bar_var_h, bar_var_k, Root};
use crate::tableaux::{enumerate_ssvt, enumerate_ssyt, EntryContext};
use crate::Laurent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theory {
    K,
    H,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::K => "K",
            Theory::H => "H",
        })
    }
}

impl std::str::FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" | "k" => Ok(Theory::K),
            "H" | "h" => Ok(Theory::H),
            _ => Err(Error::Parse(format!("unknown theory {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RestrictionResult {
    pub alpha: IsotropicIndex,
    pub beta: IsotropicIndex,
    pub theory: Theory,
    pub value: Laurent,
    /// Number of tableaux in the sum.
    pub term_count: usize,
}

fn check_ranks(alpha: &IsotropicIndex, beta: &IsotropicIndex) -> Result<usize> {
    if alpha.rank() != beta.rank() {
        return Err(Error::RankMismatch {
            left: alpha.rank(),
            right: beta.rank(),
        });
    }
    Ok(alpha.rank())
}

/// Labels `(β'(x), β'(z(x)))` of one entry.
fn entry_labels(comp: &IsotropicIndex, e: &EntryContext) -> (usize, usize) {
    (comp.at(e.value), comp.at(e.z()))
}

fn k_factor(n: usize, a: usize, b: usize) -> Laurent {
    let prod = &bar_var_k::<i64>(a, n).expect("label") * &bar_var_k(b, n).expect("label");
    &prod.monomial_inverse().expect("monomial") - &Laurent::one(n)
}

fn h_factor(n: usize, a: usize, b: usize) -> Laurent {
    (&bar_var_h::<i64>(a, n).expect("label") + &bar_var_h(b, n).expect("label")).negate()
}

pub fn restrict_k(alpha: &IsotropicIndex, beta: &IsotropicIndex) -> Result<RestrictionResult> {
    let n = check_ranks(alpha, beta)?;
    let comp = beta.complement();
    let tableaux = enumerate_ssvt(&alpha.sigma(), &beta.sigma());
    let mut value = Laurent::zero(n);
    for s in &tableaux {
        let term = s.entries().fold(Laurent::one(n), |acc, e| {
            let (a, b) = entry_labels(&comp, &e);
            &acc * &k_factor(n, a, b)
        });
        value += &term;
    }
    if alpha.length() % 2 == 1 {
        value = value.negate();
    }
    Ok(RestrictionResult {
        alpha: alpha.clone(),
        beta: beta.clone(),
        theory: Theory::K,
        value,
        term_count: tableaux.len(),
    })
}

pub fn restrict_h(alpha: &IsotropicIndex, beta: &IsotropicIndex) -> Result<RestrictionResult> {
    let n = check_ranks(alpha, beta)?;
    let comp = beta.complement();
    let tableaux = enumerate_ssyt(&alpha.sigma(), &beta.sigma());
    let mut value = Laurent::zero(n);
    for p in &tableaux {
        let term = p.entries().fold(Laurent::one(n), |acc, e| {
            let (a, b) = entry_labels(&comp, &e);
            &acc * &h_factor(n, a, b)
        });
        value += &term;
    }
    Ok(RestrictionResult {
        alpha: alpha.clone(),
        beta: beta.clone(),
        theory: Theory::H,
        value,
        term_count: tableaux.len(),
    })
}

pub fn restrict(
    alpha: &IsotropicIndex,
    beta: &IsotropicIndex,
    theory: Theory,
) -> Result<RestrictionResult> {
    match theory {
        Theory::K => restrict_k(alpha, beta),
        Theory::H => restrict_h(alpha, beta),
    }
}

/// All restrictions for rank `n`: row `i` holds `[X_α]` at every `β`, with
/// `α` and `β` in the order of [`enumerate_isotropic`].
pub fn restriction_table(n: usize, theory: Theory) -> Result<Vec<Vec<RestrictionResult>>> {
    let all = enumerate_isotropic(n)?;
    all.par_iter()
        .map(|a| all.iter().map(|b| restrict(a, b, theory)).collect())
        .collect()
}

/// Memoizes restriction values per `(α, β, theory)`.
#[derive(Debug, Default)]
pub struct RestrictionCache {
    map: Mutex<HashMap<(IsotropicIndex, IsotropicIndex, Theory), RestrictionResult>>,
}

impl RestrictionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(
        &self,
        alpha: &IsotropicIndex,
        beta: &IsotropicIndex,
        theory: Theory,
    ) -> Result<RestrictionResult> {
        let key = (alpha.clone(), beta.clone(), theory);
        if let Some(r) = self.map.lock().expect("poisoned").get(&key) {
            return Ok(r.clone());
        }
        let r = restrict(alpha, beta, theory)?;
        self.map.lock().expect("poisoned").insert(key, r.clone());
        Ok(r)
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A positive root for `B⁻`, in the three shapes produced by the formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PositiveRoot {
    /// `−t_a − t_b`, `a < b ≤ n`.
    NegSum { a: usize, b: usize },
    /// `−t_a + t_c`, `a < c ≤ n`.
    Difference { a: usize, c: usize },
    /// `−2 t_a`.
    NegDouble { a: usize },
}

impl PositiveRoot {
    /// Classifies the factor `−t_a − t_b` (labels in `1..=2n`), checking
    /// `a ≤ b`, `a < bar(b)` and `a ≤ n`.
    pub fn from_labels(a: usize, b: usize, n: usize) -> Result<Self> {
        let bb = bar_unchecked(b, n);
        if !(a <= b && a < bb && a <= n) {
            return Err(Error::Certificate(format!(
                "labels ({a}, {b}) fail a ≤ b, a < bar(b), a ≤ n for n = {n}"
            )));
        }
        Ok(if b <= n {
            if a == b {
                PositiveRoot::NegDouble { a }
            } else {
                PositiveRoot::NegSum { a, b }
            }
        } else {
            PositiveRoot::Difference { a, c: bb }
        })
    }

    /// `θ` as written in the formula (positive for `B⁻`).
    pub fn root(&self, n: usize) -> Root {
        match *self {
            PositiveRoot::NegSum { a, b } => Root::pair(n, a, -1, b, -1),
            PositiveRoot::Difference { a, c } => Root::pair(n, a, -1, c, 1),
            PositiveRoot::NegDouble { a } => Root::double(n, a, -1),
        }
        .expect("valid type C root")
    }

    /// The mirror `−θ`, positive for the upper-triangular Borel.
    pub fn standard(&self, n: usize) -> Root {
        self.root(n).negated()
    }

    /// The cohomology factor `θ`.
    pub fn h_factor(&self, n: usize) -> Laurent {
        self.root(n).linear_form()
    }

    /// The K-theory factor `e^θ − 1`.
    pub fn k_factor(&self, n: usize) -> Laurent {
        &self.root(n).character() - &Laurent::one(n)
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PositiveRoot::NegSum { a, b } => write!(f, "-t{a} - t{b}"),
            PositiveRoot::Difference { a, c } => write!(f, "-t{a} + t{c}"),
            PositiveRoot::NegDouble { a } => write!(f, "-2*t{a}"),
        }
    }
}

/// For every tableau in the sum and every entry, the root whose factor
/// appears in the product. Each one is checked against the literal factor.
pub fn positivity_certificate(
    alpha: &IsotropicIndex,
    beta: &IsotropicIndex,
    theory: Theory,
) -> Result<Vec<Vec<PositiveRoot>>> {
    let n = check_ranks(alpha, beta)?;
    let comp = beta.complement();
    let (lambda, mu) = (alpha.sigma(), beta.sigma());
    let tableaux = match theory {
        Theory::K => enumerate_ssvt(&lambda, &mu),
        Theory::H => enumerate_ssyt(&lambda, &mu),
    };
    tableaux
        .iter()
        .map(|s| {
            s.entries()
                .map(|e| {
                    let (a, b) = entry_labels(&comp, &e);
                    let root = PositiveRoot::from_labels(a, b, n)?;
                    let matches = match theory {
                        Theory::K => root.k_factor(n) == k_factor(n, a, b),
                        Theory::H => root.h_factor(n) == h_factor(n, a, b),
                    };
                    if !matches {
                        return Err(Error::Certificate(format!(
                            "factor for labels ({a}, {b}) is not {root}"
                        )));
                    }
                    Ok(root)
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexcomb::enumerate_isotropic;

    fn iso(n: usize, v: &[usize]) -> IsotropicIndex {
        IsotropicIndex::new(n, v.to_vec()).unwrap()
    }

    fn t(i: usize) -> Laurent {
        Laurent::var(3, i)
    }

    #[test]
    fn example_cohomology_value() {
        let r = restrict_h(&iso(3, &[1, 3, 5]), &iso(3, &[3, 5, 6])).unwrap();
        let m2 = |p: &Laurent| p.scalar_mul(&-2);
        let expected = &(&(&m2(&t(1)) * &(&t(1) + &t(2)).negate())
            + &(&m2(&t(1)) * &(&t(3) - &t(2))))
            + &(&m2(&t(2)) * &(&t(3) - &t(2)));
        assert_eq!(r.value, expected);
        assert_eq!(r.term_count, 3);
    }

    #[test]
    fn identity_class_is_one() {
        for n in 1..=4 {
            let id = IsotropicIndex::identity(n).unwrap();
            for b in enumerate_isotropic(n).unwrap() {
                assert!(restrict_k(&id, &b).unwrap().value.is_one());
                assert!(restrict_h(&id, &b).unwrap().value.is_one());
            }
        }
    }

    #[test]
    fn vanishing_case() {
        let (a, b) = (iso(2, &[3, 4]), iso(2, &[1, 3]));
        let k = restrict_k(&a, &b).unwrap();
        assert!(k.value.is_zero());
        assert_eq!(k.term_count, 0);
        assert!(restrict_h(&a, &b).unwrap().value.is_zero());
    }

    #[test]
    fn rank_mismatch() {
        assert!(restrict_k(&iso(2, &[1, 2]), &iso(3, &[1, 2, 3])).is_err());
    }

    #[test]
    fn rank_one_values() {
        let (a1, a2) = (iso(1, &[1]), iso(1, &[2]));
        let h = restrict_h(&a2, &a2).unwrap().value;
        assert_eq!(h, Laurent::var(1, 1).scalar_mul(&-2));
        let k = restrict_k(&a2, &a2).unwrap().value;
        assert_eq!(k, &Laurent::one(1) - &Laurent::var_pow(1, 1, -2));
        assert!(restrict_h(&a2, &a1).unwrap().value.is_zero());
    }

    #[test]
    fn certificates_for_example() {
        let (a, b) = (iso(3, &[1, 3, 5]), iso(3, &[3, 5, 6]));
        let cert = positivity_certificate(&a, &b, Theory::H).unwrap();
        assert_eq!(cert.len(), 3);
        assert_eq!(cert[0][0], PositiveRoot::NegDouble { a: 1 });
        assert_eq!(cert[0][0].standard(3), Root::double(3, 1, 1).unwrap());
        assert_eq!(cert[2][1], PositiveRoot::Difference { a: 2, c: 3 });
        assert_eq!(cert[2][1].h_factor(3), &t(3) - &t(2));
        let kc = positivity_certificate(&a, &b, Theory::K).unwrap();
        assert_eq!(kc.len(), 5);
    }

    #[test]
    fn certificate_rejects_bad_labels() {
        assert!(PositiveRoot::from_labels(2, 1, 3).is_err());
        assert!(PositiveRoot::from_labels(4, 5, 3).is_err());
        // a = bar(b)
        assert!(PositiveRoot::from_labels(1, 6, 3).is_err());
    }

    #[test]
    fn rank_one_table() {
        let t = restriction_table(1, Theory::H).unwrap();
        assert!(t[0].iter().all(|r| r.value.is_one()));
        assert!(t[1][0].value.is_zero());
        assert_eq!(t[1][1].value, Laurent::var(1, 1).scalar_mul(&-2));
    }

    #[test]
    fn cache_reuses_values() {
        let cache = RestrictionCache::new();
        let (a, b) = (iso(2, &[2, 4]), iso(2, &[3, 4]));
        let r1 = cache.get(&a, &b, Theory::K).unwrap();
        let r2 = cache.get(&a, &b, Theory::K).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(cache.len(), 1);
    }
}
