//! The type `C_n` Weyl group as signed permutations, and a subword formula
//! for cohomology restrictions.
//!
//! An element is stored as a permutation of the labels `1..=2n` commuting
//! with `k ↦ bar(k)`. Label `k ≤ n` stands for `ε_k`, label `bar(k)` for
//! `−ε_k`. Simple reflections: `s_i` (`i < n`) swaps `i, i+1` and their bars,
//! `s_n` swaps `n` and `n+1`; the simple roots are `ε_i − ε_{i+1}` and `2ε_n`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indexcomb::{bar_unchecked, IsotropicIndex};
use crate::Laurent;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    n: usize,
    /// `images[k - 1]` is the image of label `k`.
    images: Vec<usize>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            n,
            images: (1..=2 * n).collect(),
        }
    }

    /// From signed one-line notation `w(1), …, w(n)` with `−k` for `bar(k)`.
    pub fn from_signed(signed: &[i64]) -> Result<Self> {
        let n = signed.len();
        let mut images = vec![0; 2 * n];
        let mut seen = vec![false; n + 1];
        for (i, &s) in signed.iter().enumerate() {
            let a = s.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!("not a signed permutation: {signed:?}")));
            }
            seen[a] = true;
            let img = if s > 0 { a } else { bar_unchecked(a, n) };
            images[i] = img;
            images[bar_unchecked(i + 1, n) - 1] = bar_unchecked(img, n);
        }
        Ok(SignedPermutation { n, images })
    }

    /// `(α(1), …, α(n), bar α(n), …, bar α(1))`, the minimal-length
    /// representative of the coset of `α`.
    pub fn from_isotropic(alpha: &IsotropicIndex) -> Self {
        let n = alpha.rank();
        let mut images: Vec<usize> = alpha.values().to_vec();
        images.extend(alpha.values().iter().rev().map(|&a| bar_unchecked(a, n)));
        SignedPermutation { n, images }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn apply(&self, label: usize) -> usize {
        self.images[label - 1]
    }

    /// `w(1..=n)` as an isotropic index.
    pub fn coset(&self) -> IsotropicIndex {
        IsotropicIndex::new(self.n, self.images[..self.n].to_vec()).expect("commutes with bar")
    }

    pub fn signed(&self) -> Vec<i64> {
        self.images[..self.n]
            .iter()
            .map(|&k| if k <= self.n { k as i64 } else { -(bar_unchecked(k, self.n) as i64) })
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            n: self.n,
            images: other.images.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    pub fn simple(n: usize, i: usize) -> SignedPermutation {
        let mut images: Vec<usize> = (1..=2 * n).collect();
        let swap = |v: &mut Vec<usize>, a: usize, b: usize| v.swap(a - 1, b - 1);
        if i < n {
            swap(&mut images, i, i + 1);
            swap(&mut images, bar_unchecked(i, n), bar_unchecked(i + 1, n));
        } else {
            swap(&mut images, n, n + 1);
        }
        SignedPermutation { n, images }
    }

    /// `w(θ)` for a linear form `θ = Σ c_k ε_k`.
    pub fn act_on_root(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n];
        for (k, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.apply(k + 1);
            if img <= self.n {
                out[img - 1] += c;
            } else {
                out[bar_unchecked(img, self.n) - 1] -= c;
            }
        }
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.signed().iter().map(i64::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

pub fn simple_root(n: usize, i: usize) -> Vec<i64> {
    let mut c = vec![0; n];
    if i < n {
        c[i - 1] = 1;
        c[i] = -1;
    } else {
        c[n - 1] = 2;
    }
    c
}

/// Every group element with one reduced word, found by breadth-first search
/// from the identity with right multiplication by simple reflections.
pub fn reduced_words(n: usize) -> HashMap<SignedPermutation, Vec<usize>> {
    let id = SignedPermutation::identity(n);
    let gens: Vec<SignedPermutation> = (1..=n).map(|i| SignedPermutation::simple(n, i)).collect();
    let mut words = HashMap::from([(id.clone(), Vec::new())]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let word = words[&w].clone();
        for (i, s) in gens.iter().enumerate() {
            let ws = w.compose(s);
            if !words.contains_key(&ws) {
                let mut wd = word.clone();
                wd.push(i + 1);
                words.insert(ws.clone(), wd);
                queue.push_back(ws);
            }
        }
    }
    words
}

/// Sign and side choices for the subword formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BilleyConvention {
    /// Replace `α, β` by their complements (the twist by the longest element).
    pub twist: bool,
    /// Negate every root factor.
    pub negate: bool,
}

impl BilleyConvention {
    pub const ALL: [BilleyConvention; 4] = [
        BilleyConvention { twist: false, negate: false },
        BilleyConvention { twist: false, negate: true },
        BilleyConvention { twist: true, negate: false },
        BilleyConvention { twist: true, negate: true },
    ];
}

/// The convention matching the `B⁻` restrictions: no twist, roots negated.
pub const CALIBRATED: BilleyConvention = BilleyConvention {
    twist: false,
    negate: true,
};

/// Subword-formula evaluator with cached reduced words.
#[derive(Debug, Clone)]
pub struct BilleyOracle {
    n: usize,
    words: HashMap<SignedPermutation, Vec<usize>>,
}

impl BilleyOracle {
    pub fn new(n: usize) -> Self {
        BilleyOracle {
            n,
            words: reduced_words(n),
        }
    }

    pub fn length(&self, w: &SignedPermutation) -> usize {
        self.words[w].len()
    }

    pub fn reduced_word(&self, w: &SignedPermutation) -> &[usize] {
        &self.words[w]
    }

    /// `Σ_J Π_{j ∈ J} s_{i_1} ⋯ s_{i_{j−1}}(α_{i_j})` over subwords `J` of the
    /// reduced word of `w` of length `l(v)` whose product is `v`.
    pub fn subword_sum(&self, v: &SignedPermutation, w: &SignedPermutation, negate: bool) -> Laurent {
        let n = self.n;
        let word = &self.words[w];
        let lv = self.length(v);
        let gens: Vec<SignedPermutation> = (1..=n).map(|i| SignedPermutation::simple(n, i)).collect();
        let mut roots = Vec::with_capacity(word.len());
        let mut prefix = SignedPermutation::identity(n);
        for &i in word {
            let mut r = prefix.act_on_root(&simple_root(n, i));
            if negate {
                r.iter_mut().for_each(|c| *c = -*c);
            }
            roots.push(linear(n, &r));
            prefix = prefix.compose(&gens[i - 1]);
        }
        let mut total = Laurent::zero(n);
        let len = word.len();
        for mask in 0u32..(1 << len) {
            if mask.count_ones() as usize != lv {
                continue;
            }
            let mut prod = SignedPermutation::identity(n);
            for (j, &i) in word.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    prod = prod.compose(&gens[i - 1]);
                }
            }
            if &prod != v {
                continue;
            }
            let term = (0..len)
                .filter(|j| mask >> j & 1 == 1)
                .fold(Laurent::one(n), |acc, j| &acc * &roots[j]);
            total += &term;
        }
        total
    }

    pub fn restrict_h(
        &self,
        alpha: &IsotropicIndex,
        beta: &IsotropicIndex,
        conv: BilleyConvention,
    ) -> Result<Laurent> {
        if alpha.rank() != self.n || beta.rank() != self.n {
            return Err(Error::RankMismatch {
                left: alpha.rank(),
                right: beta.rank(),
            });
        }
        let (a, b) = if conv.twist {
            (alpha.complement(), beta.complement())
        } else {
            (alpha.clone(), beta.clone())
        };
        let v = SignedPermutation::from_isotropic(&a);
        let w = SignedPermutation::from_isotropic(&b);
        Ok(self.subword_sum(&v, &w, conv.negate))
    }
}

fn linear(n: usize, coeffs: &[i64]) -> Laurent {
    let mut p = Laurent::zero(n);
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            p += &Laurent::var(n, i + 1).scalar_mul(&c);
        }
    }
    p
}

/// The subword formula under the calibrated convention.
pub fn billey_restrict_h(alpha: &IsotropicIndex, beta: &IsotropicIndex) -> Result<Laurent> {
    BilleyOracle::new(alpha.rank()).restrict_h(alpha, beta, CALIBRATED)
}

/// Conventions under which the subword formula reproduces `target` at
/// `(α, β)`.
pub fn calibrate(
    alpha: &IsotropicIndex,
    beta: &IsotropicIndex,
    target: &Laurent,
) -> Result<Vec<BilleyConvention>> {
    let oracle = BilleyOracle::new(alpha.rank());
    let mut out = Vec::new();
    for conv in BilleyConvention::ALL {
        if &oracle.restrict_h(alpha, beta, conv)? == target {
            out.push(conv);
        }
    }
    Ok(out)
}
