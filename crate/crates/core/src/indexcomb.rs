//! The index set `I_n`, partitions, and the maps `π`, `ρ`, `σ` between them.
//!
//! Labels are the integers `1..=2n`; the bar involution is `k ↦ 2n + 1 − k`.
//! An element of `I_n` is an `n`-subset containing exactly one of `k`, `bar(k)`
//! for every `k`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `bar(k) = 2n + 1 − k`.
pub fn bar(k: usize, n: usize) -> Result<usize> {
    if k == 0 || k > 2 * n {
        return Err(Error::LabelOutOfRange {
            label: k as i64,
            max: 2 * n,
        });
    }
    Ok(2 * n + 1 - k)
}

#[inline]
pub(crate) fn bar_unchecked(k: usize, n: usize) -> usize {
    2 * n + 1 - k
}

/// An element of `I_n`, stored as its increasing list of labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IsotropicRepr", into = "IsotropicRepr")]
pub struct IsotropicIndex {
    n: usize,
    values: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct IsotropicRepr {
    n: usize,
    values: Vec<usize>,
}

impl TryFrom<IsotropicRepr> for IsotropicIndex {
    type Error = Error;

    fn try_from(r: IsotropicRepr) -> Result<Self> {
        IsotropicIndex::new(r.n, r.values)
    }
}

impl From<IsotropicIndex> for IsotropicRepr {
    fn from(a: IsotropicIndex) -> Self {
        IsotropicRepr {
            n: a.n,
            values: a.values,
        }
    }
}

impl IsotropicIndex {
    /// Validates and sorts `values`.
    pub fn new(n: usize, mut values: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        values.sort_unstable();
        if values.len() != n {
            return Err(Error::InvalidIsotropic {
                n,
                reason: format!("expected {n} labels, got {}", values.len()),
            });
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIsotropic {
                n,
                reason: "repeated label".into(),
            });
        }
        for &v in &values {
            if v == 0 || v > 2 * n {
                return Err(Error::LabelOutOfRange {
                    label: v as i64,
                    max: 2 * n,
                });
            }
            if values.binary_search(&bar_unchecked(v, n)).is_ok() {
                return Err(Error::InvalidIsotropic {
                    n,
                    reason: format!("contains both {v} and its bar"),
                });
            }
        }
        Ok(IsotropicIndex { n, values })
    }

    /// The identity coset `{1, …, n}`.
    pub fn identity(n: usize) -> Result<Self> {
        IsotropicIndex::new(n, (1..=n).collect())
    }

    /// Parses the signed-list syntax: `-k` stands for `bar(k)`, positive
    /// labels in `1..=2n` are taken verbatim.
    pub fn parse_signed(n: usize, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['{', '[']).trim_end_matches(['}', ']']);
        let mut values = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let k: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad label {tok:?}")))?;
            let label = if k < 0 {
                let m = k.unsigned_abs() as usize;
                if m > n {
                    return Err(Error::LabelOutOfRange { label: k, max: n });
                }
                bar_unchecked(m, n)
            } else {
                k as usize
            };
            values.push(label);
        }
        IsotropicIndex::new(n, values)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `self(i)` for `i` in `1..=n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// `α' = {1..2n} ∖ α`.
    pub fn complement(&self) -> IsotropicIndex {
        let values = self
            .values
            .iter()
            .rev()
            .map(|&v| bar_unchecked(v, self.n))
            .collect();
        IsotropicIndex { n: self.n, values }
    }

    /// `π(α) = (α(n) − n, …, α(1) − 1)`.
    pub fn pi(&self) -> Partition {
        let parts: Vec<usize> = (1..=self.n).rev().map(|i| self.at(i) - i).collect();
        Partition::from_sorted(parts)
    }

    /// `σ(α) = ρ(π(α))`.
    pub fn sigma(&self) -> StrictPartition {
        self.pi().rho()
    }

    /// Sum of the parts of `σ(α)`.
    pub fn length(&self) -> usize {
        self.sigma().size()
    }

    /// `η_j = #{i : α'(i) < α(n + 1 − j)}`, which agrees with `π(α)`.
    pub fn eta(&self) -> Partition {
        let comp = self.complement();
        let parts = (1..=self.n)
            .map(|j| {
                let bound = self.at(self.n + 1 - j);
                comp.values.iter().filter(|&&v| v < bound).count()
            })
            .collect();
        Partition::from_sorted(parts)
    }

    /// Labels in the signed notation (`-k` for `bar(k)`).
    pub fn signed(&self) -> Vec<i64> {
        self.values
            .iter()
            .map(|&v| {
                if v <= self.n {
                    v as i64
                } else {
                    -(bar_unchecked(v, self.n) as i64)
                }
            })
            .collect()
    }
}

impl fmt::Display for IsotropicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.signed().iter().map(i64::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Parses the signed syntax with `n` equal to the number of labels.
impl FromStr for IsotropicIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.split(',').filter(|t| !t.trim().is_empty()).count();
        IsotropicIndex::parse_signed(n, s)
    }
}

/// All `2^n` elements of `I_n`, lexicographic on the sorted labels.
pub fn enumerate_isotropic(n: usize) -> Result<Vec<IsotropicIndex>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut out: Vec<IsotropicIndex> = (0u64..1 << n)
        .map(|mask| {
            let values = (1..=n)
                .map(|k| {
                    if mask >> (k - 1) & 1 == 1 {
                        bar_unchecked(k, n)
                    } else {
                        k
                    }
                })
                .collect();
            IsotropicIndex::new(n, values).expect("one of k, bar(k) per k")
        })
        .collect();
    out.sort();
    Ok(out)
}

/// A partition with trailing zeros stripped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ^t_j = #{i : λ_i ≥ j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_symmetric(&self) -> bool {
        self.transpose() == *self
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `ρ(λ) = (λ_1, λ_2 − 1, …, λ_l − l + 1)` with `l` maximal such that the
    /// last part is nonnegative; a trailing zero is dropped.
    pub fn rho(&self) -> StrictPartition {
        let parts: Vec<usize> = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p >= i)
            .map(|(i, &p)| p - i)
            .filter(|&p| p > 0)
            .collect();
        StrictPartition { parts }
    }

    /// Boxes `(row, col)` of the Young diagram, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// A strictly decreasing list of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(s: StrictPartition) -> Self {
        s.parts
    }
}

impl StrictPartition {
    /// Trailing zeros are accepted and dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrict(parts));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `μ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Number of nonzero parts (`h` in the on-`μ` condition).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn in_m(&self, n: usize) -> bool {
        self.part(1) <= n
    }

    /// `σ(α) ⊆ σ(β)` componentwise.
    pub fn is_contained_in(&self, other: &StrictPartition) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// The symmetric partition `η` with `ρ(η) = self`.
    pub fn unrho(&self) -> Partition {
        let d = self.len();
        let upper: Vec<usize> = (1..=d).map(|i| self.part(i) + i - 1).collect();
        let mut parts = upper.clone();
        let mut i = d + 1;
        loop {
            let p = upper.iter().filter(|&&u| u >= i).count();
            if p == 0 {
                break;
            }
            parts.push(p);
            i += 1;
        }
        Partition::from_sorted(parts)
    }

    /// Every element of `M_n`, ordered by size then lexicographically.
    pub fn all_in_m(n: usize) -> Vec<StrictPartition> {
        let mut out: Vec<StrictPartition> = (0u64..1 << n)
            .map(|mask| {
                let parts = (1..=n).rev().filter(|k| mask >> (k - 1) & 1 == 1).collect();
                StrictPartition { parts }
            })
            .collect();
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.parts.cmp(&b.parts)));
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(usize::to_string).collect();
    write!(f, "[{}]", s.join(","))
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {t:?}")))
        })
        .collect()
}

/// The unique `α ∈ I_n` with `σ(α) = λ`.
pub fn sigma_inverse(lambda: &StrictPartition, n: usize) -> Result<IsotropicIndex> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if !lambda.in_m(n) {
        return Err(Error::NotInM {
            parts: lambda.parts.clone(),
            n,
        });
    }
    let eta = lambda.unrho();
    // π(α) = η reads α(k) = η_{n+1−k} + k.
    let values = (1..=n).map(|k| eta.part(n + 1 - k) + k).collect();
    IsotropicIndex::new(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(n: usize, v: &[usize]) -> IsotropicIndex {
        IsotropicIndex::new(n, v.to_vec()).unwrap()
    }

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bar_values() {
        assert_eq!(bar(1, 3).unwrap(), 6);
        assert_eq!(bar(2, 3).unwrap(), 5);
        for k in 1..=8 {
            assert_eq!(bar(bar(k, 4).unwrap(), 4).unwrap(), k);
        }
        assert!(bar(0, 3).is_err());
        assert!(bar(7, 3).is_err());
    }

    #[test]
    fn enumerate_small() {
        let one: Vec<_> = enumerate_isotropic(1).unwrap();
        assert_eq!(one, vec![iso(1, &[1]), iso(1, &[2])]);
        let two = enumerate_isotropic(2).unwrap();
        // brute force: all 2-subsets of {1..4} with exactly one of k, 5-k
        let mut brute = Vec::new();
        for a in 1..=4usize {
            for b in a + 1..=4 {
                let ok = (1..=4).all(|k| (a == k || b == k) != (a == 5 - k || b == 5 - k));
                if ok {
                    brute.push(iso(2, &[a, b]));
                }
            }
        }
        assert_eq!(two, brute);
        assert_eq!(
            two,
            vec![iso(2, &[1, 2]), iso(2, &[1, 3]), iso(2, &[2, 4]), iso(2, &[3, 4])]
        );
        assert_eq!(enumerate_isotropic(3).unwrap().len(), 8);
        assert!(enumerate_isotropic(0).is_err());
    }

    #[test]
    fn rejects_non_isotropic() {
        assert!(IsotropicIndex::new(3, vec![1, 2, 5]).is_err());
        assert!(IsotropicIndex::new(3, vec![1, 2]).is_err());
        assert!(IsotropicIndex::new(3, vec![1, 2, 7]).is_err());
        assert!(IsotropicIndex::new(3, vec![1, 1, 3]).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(iso(3, &[3, 5, 6]).complement(), iso(3, &[1, 2, 4]));
        assert_eq!(iso(4, &[1, 4, 6, 7]).complement(), iso(4, &[2, 3, 5, 8]));
        for a in enumerate_isotropic(3).unwrap() {
            assert_eq!(a.complement().complement(), a);
            let c = a.complement();
            let all: Vec<usize> = {
                let mut v = [a.values(), c.values()].concat();
                v.sort();
                v
            };
            assert_eq!(all, (1..=6).collect::<Vec<_>>());
        }
    }

    #[test]
    fn pi_rho_sigma_examples() {
        assert_eq!(iso(3, &[1, 3, 5]).pi(), part(&[2, 1]));
        assert_eq!(iso(3, &[3, 5, 6]).pi(), part(&[3, 3, 2]));
        assert!(iso(2, &[1, 2]).pi().is_empty());
        assert_eq!(part(&[3, 3, 2]).rho(), sp(&[3, 2]));
        assert_eq!(part(&[2, 1]).rho(), sp(&[2]));
        assert!(Partition::empty().rho().is_empty());
        assert_eq!(iso(3, &[1, 3, 5]).sigma(), sp(&[2]));
        assert_eq!(iso(3, &[3, 5, 6]).sigma(), sp(&[3, 2]));
        // Figure 1 of the rho picture: (5,3,2,1,1) -> (5,2)
        assert_eq!(part(&[5, 3, 2, 1, 1]).rho(), sp(&[5, 2]));
    }

    #[test]
    fn sigma_injective_on_i4() {
        let all = enumerate_isotropic(4).unwrap();
        let mut images: Vec<_> = all.iter().map(IsotropicIndex::sigma).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 16);
    }

    #[test]
    fn sigma_inverse_examples() {
        assert_eq!(sigma_inverse(&sp(&[2]), 3).unwrap(), iso(3, &[1, 3, 5]));
        assert_eq!(sigma_inverse(&StrictPartition::empty(), 2).unwrap(), iso(2, &[1, 2]));
        for lam in StrictPartition::all_in_m(3) {
            assert_eq!(sigma_inverse(&lam, 3).unwrap().sigma(), lam);
        }
        assert!(sigma_inverse(&sp(&[4]), 3).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(iso(3, &[1, 3, 5]).length(), 2);
        assert_eq!(IsotropicIndex::identity(4).unwrap().length(), 0);
        assert_eq!(iso(2, &[3, 4]).sigma(), sp(&[2, 1]));
        assert_eq!(iso(2, &[3, 4]).length(), 3);
    }

    #[test]
    fn transpose_and_predicates() {
        let p = part(&[3, 3, 2]);
        assert_eq!(p.transpose(), p);
        assert!(p.is_symmetric());
        assert!(!p.is_strict());
        assert!(Partition::empty().transpose().is_empty());
        assert_eq!(part(&[3, 1]).transpose(), part(&[2, 1, 1]));
        for a in enumerate_isotropic(4).unwrap() {
            assert!(a.pi().is_symmetric(), "{a}");
        }
    }

    #[test]
    fn eta_matches_pi() {
        assert_eq!(iso(3, &[3, 5, 6]).eta(), part(&[3, 3, 2]));
        assert!(iso(2, &[1, 2]).eta().is_empty());
        for n in 1..=5 {
            for b in enumerate_isotropic(n).unwrap() {
                assert_eq!(b.eta(), b.pi(), "{b}");
            }
        }
    }

    #[test]
    fn eta_inequality_exhaustive() {
        // i ≤ η_j  ⟺  β'(i) < β(n+1−j)
        for n in 1..=4 {
            for b in enumerate_isotropic(n).unwrap() {
                let eta = b.eta();
                let comp = b.complement();
                for i in 1..=n {
                    for j in 1..=n {
                        assert_eq!(i <= eta.part(j), comp.at(i) < b.at(n + 1 - j));
                    }
                }
            }
        }
    }

    #[test]
    fn signed_syntax() {
        let b = IsotropicIndex::parse_signed(3, "3,-2,-1").unwrap();
        assert_eq!(b, iso(3, &[3, 5, 6]));
        assert_eq!(b.to_string(), "3,-2,-1");
        assert_eq!("1,3,-2".parse::<IsotropicIndex>().unwrap(), iso(3, &[1, 3, 5]));
        assert_eq!(IsotropicIndex::parse_signed(3, "{3,5,6}").unwrap(), b);
        assert!(IsotropicIndex::parse_signed(3, "3,-4,1").is_err());
        assert_eq!("[3,2]".parse::<StrictPartition>().unwrap(), sp(&[3, 2]));
        assert_eq!("[]".parse::<StrictPartition>().unwrap(), StrictPartition::empty());
    }

    #[test]
    fn unrho_inverts_rho() {
        for n in 1..=5 {
            for lam in StrictPartition::all_in_m(n) {
                let eta = lam.unrho();
                assert!(eta.is_symmetric());
                assert_eq!(eta.rho(), lam);
            }
        }
    }
}
