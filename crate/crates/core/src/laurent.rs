//! Sparse multivariate Laurent polynomials in `t_1, …, t_n`.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration is
//! always in lexicographic exponent order and zero coefficients never appear.
//! Cohomology classes are the special case with nonnegative exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Num;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::indexcomb::bar_unchecked;

/// Coefficient ring for [`LaurentPolynomial`].
pub trait Coefficient: Num + Clone + Neg<Output = Self> + fmt::Debug + fmt::Display {}

impl<T> Coefficient for T where T: Num + Clone + Neg<Output = T> + fmt::Debug + fmt::Display {}

pub type Exponents = Vec<i32>;

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPolynomial<C> {
    nvars: usize,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> LaurentPolynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: C) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `t_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    /// `t_i^e` (1-based).
    pub fn var_pow(nvars: usize, i: usize, e: i32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = e;
        Self::monomial(nvars, exps, C::one())
    }

    /// Builds from possibly repeated or zero terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, C)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negate())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        self.map_coefficients(|c| -c.clone())
    }

    pub fn scalar_mul(&self, k: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPolynomial<D> {
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Inverse of a monomial `c·t^e` when `c` is a unit (`±1`).
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        let inv_c = C::one() / c.clone();
        if !(inv_c.clone() * c.clone()).is_one() {
            return None;
        }
        Some(Self::monomial(
            self.nvars,
            e.iter().map(|x| -x).collect(),
            inv_c,
        ))
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Total degree of each term; `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Option<Option<i64>> {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        let first = degs.next()?;
        Some(if degs.all(|d| d == first) { Some(first) } else { None })
    }

    /// Evaluates at `point`; negative powers use `1 / t_i`.
    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                let base = if k < 0 { C::one() / x.clone() } else { x.clone() };
                for _ in 0..k.unsigned_abs() {
                    term = term * base.clone();
                }
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Substitutes `t_i ↦ t_j^power` for the listed variable.
    fn substitute_monomial(&self, i: usize, j: usize, power: i32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let ei = e2[i - 1];
            e2[i - 1] = 0;
            e2[j - 1] += ei * power;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Reduces exponents of `t_i` modulo 2 (the ring with `t_i^2 = 1`).
    fn reduce_square_to_one(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[i - 1] = e2[i - 1].rem_euclid(2);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Divisibility by `θ` as a polynomial: vanishing on the hyperplane `θ = 0`.
    pub fn divisible_by_root_h(&self, root: &Root) -> Result<bool> {
        if !self.is_polynomial() {
            return Err(Error::InvalidTableau(
                "cohomology divisibility needs nonnegative exponents".into(),
            ));
        }
        self.check_root(root)?;
        let reduced = match root.kind() {
            RootKind::Double(i) => {
                let mut out = Self::zero(self.nvars);
                for (e, c) in &self.terms {
                    if e[i - 1] == 0 {
                        out.add_term(e.clone(), c.clone());
                    }
                }
                out
            }
            RootKind::Pair { i, j, same_sign } => {
                // θ = ±(t_i − t_j) gives t_i = t_j; θ = ±(t_i + t_j) gives t_i = −t_j.
                let mut out = Self::zero(self.nvars);
                for (e, c) in &self.terms {
                    let mut e2 = e.clone();
                    let ei = e2[i - 1];
                    e2[i - 1] = 0;
                    e2[j - 1] += ei;
                    let c2 = if same_sign && ei % 2 != 0 { -c.clone() } else { c.clone() };
                    out.add_term(e2, c2);
                }
                out
            }
        };
        Ok(reduced.is_zero())
    }

    /// Divisibility by `1 − e^θ`: vanishing in the quotient ring where `e^θ = 1`.
    pub fn divisible_by_k_root(&self, root: &Root) -> Result<bool> {
        self.check_root(root)?;
        let reduced = match root.kind() {
            RootKind::Double(i) => self.reduce_square_to_one(i),
            RootKind::Pair { i, j, same_sign } => {
                // t_i t_j^{±1} = 1
                let power = if same_sign { -1 } else { 1 };
                self.substitute_monomial(i, j, power)
            }
        };
        Ok(reduced.is_zero())
    }

    fn check_root(&self, root: &Root) -> Result<()> {
        if root.coeffs.len() != self.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: root.coeffs.len(),
            });
        }
        Ok(())
    }

    /// Human-readable form, e.g. `t3/t2 - 1` or `1/(t1*t2) - 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Exponents, &C)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: i64 = a.iter().map(|&x| x as i64).sum();
            let db: i64 = b.iter().map(|&x| x as i64).sum();
            let ca = a.iter().all(|&x| x == 0);
            let cb = b.iter().all(|&x| x == 0);
            ca.cmp(&cb).then(db.cmp(&da)).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let mono = format_monomial(e);
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (mono.as_deref(), mag == "1") {
                (None, _) => out.push_str(&mag),
                (Some(m), true) => out.push_str(m),
                (Some(m), false) => {
                    out.push_str(&mag);
                    out.push('*');
                    out.push_str(m);
                }
            }
        }
        out
    }
}

fn format_monomial(e: &[i32]) -> Option<String> {
    let factor = |i: usize, k: i32| {
        if k == 1 {
            format!("t{}", i + 1)
        } else {
            format!("t{}^{}", i + 1, k)
        }
    };
    let num: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| factor(i, k))
        .collect();
    let den: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k < 0)
        .map(|(i, &k)| factor(i, -k))
        .collect();
    if num.is_empty() && den.is_empty() {
        return None;
    }
    let num_s = if num.is_empty() { "1".to_string() } else { num.join("*") };
    Some(match den.len() {
        0 => num_s,
        1 => format!("{num_s}/{}", den[0]),
        _ => format!("{num_s}/({})", den.join("*")),
    })
}

impl<C: Coefficient + Integer> LaurentPolynomial<C> {
    /// Lowest nonvanishing homogeneous component of the image under the Chern
    /// character `t_i ↦ exp(−t_i)`, scanning degrees `0..=max_order`.
    ///
    /// The degree-`d` component of `Σ c_m t^{e_m}` is
    /// `Σ c_m (−⟨e_m, t⟩)^d / d!`.
    pub fn lowest_degree_form(&self, max_order: u32) -> Result<LaurentPolynomial<Ratio<C>>> {
        if self.is_zero() {
            return Ok(LaurentPolynomial::zero(self.nvars));
        }
        let n = self.nvars;
        let linear = |e: &Exponents| {
            let mut p: LaurentPolynomial<C> = LaurentPolynomial::zero(n);
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    p.add_term(unit_exps(n, i), small_int::<C>(-(k as i64)));
                }
            }
            p
        };
        let forms: Vec<(LaurentPolynomial<C>, &C)> =
            self.terms.iter().map(|(e, c)| (linear(e), c)).collect();
        let mut powers: Vec<LaurentPolynomial<C>> =
            forms.iter().map(|_| LaurentPolynomial::one(n)).collect();
        let mut factorial = C::one();
        for d in 0..=max_order {
            if d > 0 {
                factorial = factorial * small_int::<C>(d as i64);
                for (p, (l, _)) in powers.iter_mut().zip(&forms) {
                    *p = &*p * l;
                }
            }
            let mut sum: LaurentPolynomial<C> = LaurentPolynomial::zero(n);
            for (p, (_, c)) in powers.iter().zip(&forms) {
                sum = &sum + &p.scalar_mul(c);
            }
            if !sum.is_zero() {
                let f = factorial.clone();
                return Ok(sum.map_coefficients(|c| Ratio::new(c.clone(), f.clone())));
            }
        }
        Err(Error::TruncationOrder(max_order))
    }

    /// [`lowest_degree_form`](Self::lowest_degree_form) starting at `hint` and
    /// doubling the order on truncation failure, up to order 64.
    pub fn chern_lowest_form(&self, hint: u32) -> Result<LaurentPolynomial<Ratio<C>>> {
        let mut order = hint.max(1);
        loop {
            match self.lowest_degree_form(order) {
                Err(Error::TruncationOrder(_)) if order < 64 => order = (order * 2).min(64),
                other => return other,
            }
        }
    }
}

impl<C: Coefficient + Integer> LaurentPolynomial<Ratio<C>> {
    /// Converts back to integer coefficients if every coefficient is integral.
    pub fn to_integer(&self) -> Option<LaurentPolynomial<C>> {
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(e.clone(), c.to_integer());
        }
        Some(out)
    }
}

fn unit_exps(n: usize, i: usize) -> Exponents {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

fn small_int<C: Coefficient>(k: i64) -> C {
    let mut out = C::zero();
    for _ in 0..k.unsigned_abs() {
        out = out + C::one();
    }
    if k < 0 {
        -out
    } else {
        out
    }
}

/// `t_{bar(k)}` in K-theory: `t_k` for `k ≤ n`, `t_{bar(k)}^{-1}` otherwise.
pub fn bar_var_k<C: Coefficient>(k: usize, n: usize) -> Result<LaurentPolynomial<C>> {
    check_label(k, n)?;
    Ok(if k <= n {
        LaurentPolynomial::var(n, k)
    } else {
        LaurentPolynomial::var_pow(n, bar_unchecked(k, n), -1)
    })
}

/// `t_{bar(k)}` in cohomology: `t_k` for `k ≤ n`, `−t_{bar(k)}` otherwise.
pub fn bar_var_h<C: Coefficient>(k: usize, n: usize) -> Result<LaurentPolynomial<C>> {
    check_label(k, n)?;
    Ok(if k <= n {
        LaurentPolynomial::var(n, k)
    } else {
        LaurentPolynomial::var(n, bar_unchecked(k, n)).negate()
    })
}

fn check_label(k: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if k == 0 || k > 2 * n {
        return Err(Error::LabelOutOfRange {
            label: k as i64,
            max: 2 * n,
        });
    }
    Ok(())
}

/// A root of type `C_n` written as an integer linear form in `t_1..t_n`:
/// `±t_i ± t_j` (`i ≠ j`) or `±2 t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    coeffs: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RootKind {
    Double(usize),
    Pair { i: usize, j: usize, same_sign: bool },
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        let nz: Vec<(usize, i64)> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        let ok = match nz.as_slice() {
            [(_, c)] => c.abs() == 2,
            [(_, a), (_, b)] => a.abs() == 1 && b.abs() == 1,
            _ => false,
        };
        if !ok {
            return Err(Error::NotARoot(coeffs));
        }
        Ok(Root { coeffs })
    }

    /// `s_i t_i + s_j t_j` with 1-based indices.
    pub fn pair(n: usize, i: usize, si: i64, j: usize, sj: i64) -> Result<Self> {
        let mut c = vec![0; n];
        c[i - 1] += si;
        c[j - 1] += sj;
        Root::new(c)
    }

    /// `s · 2 t_i`.
    pub fn double(n: usize, i: usize, s: i64) -> Result<Self> {
        let mut c = vec![0; n];
        c[i - 1] = 2 * s;
        Root::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub(crate) fn kind(&self) -> RootKind {
        let nz: Vec<(usize, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
            .collect();
        match nz.as_slice() {
            [(i, _)] => RootKind::Double(*i),
            [(i, a), (j, b)] => RootKind::Pair {
                i: *i,
                j: *j,
                same_sign: a.signum() == b.signum(),
            },
            _ => unreachable!("validated in Root::new"),
        }
    }

    /// The linear form `Σ c_i t_i`.
    pub fn linear_form<C: Coefficient>(&self) -> LaurentPolynomial<C> {
        let n = self.coeffs.len();
        let mut p = LaurentPolynomial::zero(n);
        for (i, &c) in self.coeffs.iter().enumerate() {
            p.add_term(unit_exps(n, i), small_int(c));
        }
        p
    }

    /// The character `e^θ = Π t_i^{c_i}`.
    pub fn character<C: Coefficient>(&self) -> LaurentPolynomial<C> {
        LaurentPolynomial::monomial(
            self.coeffs.len(),
            self.coeffs.iter().map(|&c| c as i32).collect(),
            C::one(),
        )
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.linear_form::<i64>().pretty())
    }
}

impl<C: Coefficient> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<'a, C: Coefficient> $trait<&'a LaurentPolynomial<C>> for &'a LaurentPolynomial<C> {
            type Output = LaurentPolynomial<C>;

            /// Panics if the variable counts differ.
            fn $method(self, rhs: &'a LaurentPolynomial<C>) -> LaurentPolynomial<C> {
                self.$inner(rhs).expect("variable count mismatch")
            }
        }

        impl<C: Coefficient> $trait for LaurentPolynomial<C> {
            type Output = LaurentPolynomial<C>;

            fn $method(self, rhs: LaurentPolynomial<C>) -> LaurentPolynomial<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Coefficient> AddAssign<&LaurentPolynomial<C>> for LaurentPolynomial<C> {
    fn add_assign(&mut self, rhs: &LaurentPolynomial<C>) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl<C: Coefficient> Neg for LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn neg(self) -> Self {
        self.negate()
    }
}

impl<C: Coefficient> Neg for &LaurentPolynomial<C> {
    type Output = LaurentPolynomial<C>;

    fn neg(self) -> LaurentPolynomial<C> {
        self.negate()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C> {
    e: Exponents,
    c: C,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr<C> {
    n: usize,
    terms: Vec<TermRepr<C>>,
}

impl<C: Coefficient + Serialize> Serialize for LaurentPolynomial<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            n: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    e: e.clone(),
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coefficient + Deserialize<'de>> Deserialize<'de> for LaurentPolynomial<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::<C>::deserialize(d)?;
        LaurentPolynomial::from_terms(repr.n, repr.terms.into_iter().map(|t| (t.e, t.c)))
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Laurent;
    use proptest::prelude::*;

    fn t(n: usize, i: usize) -> Laurent {
        Laurent::var(n, i)
    }

    fn inv(n: usize, i: usize) -> Laurent {
        Laurent::var_pow(n, i, -1)
    }

    #[test]
    fn hand_expansion() {
        let one = Laurent::one(1);
        let p = &(&inv(1, 1) - &one) * &(&t(1, 1) - &one);
        let expected = &(&t(1, 1).negate() - &inv(1, 1)) + &Laurent::constant(1, 2);
        assert_eq!(p, expected);
        assert!((&p + &p.negate()).is_zero());
    }

    #[test]
    fn mismatched_vars() {
        assert!(t(2, 1).try_add(&t(3, 1)).is_err());
        assert!(t(2, 1).try_mul(&t(3, 1)).is_err());
    }

    #[test]
    fn bar_variables() {
        let k4: Laurent = bar_var_k(4, 3).unwrap();
        assert_eq!(k4, inv(3, 3));
        assert_eq!(bar_var_k::<i64>(2, 3).unwrap(), t(3, 2));
        for k in 1..=6 {
            let a: Laurent = bar_var_k(k, 3).unwrap();
            let b: Laurent = bar_var_k(7 - k, 3).unwrap();
            assert!((&a * &b).is_one());
        }
        let h4: Laurent = bar_var_h(4, 3).unwrap();
        assert_eq!(h4, t(3, 3).negate());
        assert_eq!(bar_var_h::<i64>(1, 3).unwrap(), t(3, 1));
        for k in 1..=6 {
            let a: Laurent = bar_var_h(k, 3).unwrap();
            let b: Laurent = bar_var_h(7 - k, 3).unwrap();
            assert!((&a + &b).is_zero());
        }
        assert!(bar_var_k::<i64>(0, 3).is_err());
        assert!(bar_var_h::<i64>(7, 3).is_err());
    }

    #[test]
    fn lowest_form_of_factor() {
        // ch(1/(t1 t2) − 1) = e^{t1 + t2} − 1, lowest part t1 + t2
        let n = 2;
        let p = &(&inv(n, 1) * &inv(n, 2)) - &Laurent::one(n);
        let low = p.lowest_degree_form(3).unwrap().to_integer().unwrap();
        assert_eq!(low, &t(n, 1) + &t(n, 2));
        let one = Laurent::one(n).lowest_degree_form(1).unwrap().to_integer().unwrap();
        assert!(one.is_one());
        // a product of two order-1 factors needs degree 2
        let q = &p * &p;
        let low2 = q.lowest_degree_form(1);
        assert_eq!(low2, Err(Error::TruncationOrder(1)));
        let low2 = q.chern_lowest_form(1).unwrap().to_integer().unwrap();
        assert_eq!(low2, (&t(n, 1) + &t(n, 2)).pow(2));
    }

    #[test]
    fn root_divisibility_h() {
        let n = 2;
        let p = &t(n, 1).pow(2) - &t(n, 2).pow(2);
        let r = Root::pair(n, 1, 1, 2, -1).unwrap();
        assert!(p.divisible_by_root_h(&r).unwrap());
        assert!(!t(n, 1).divisible_by_root_h(&r).unwrap());
        let s = Root::pair(n, 1, 1, 2, 1).unwrap();
        assert!(p.divisible_by_root_h(&s).unwrap());
        assert!(!(&t(n, 1) - &t(n, 2)).divisible_by_root_h(&s).unwrap());
        let d = Root::double(n, 1, 1).unwrap();
        assert!((&t(n, 1) * &t(n, 2)).divisible_by_root_h(&d).unwrap());
        assert!(!t(n, 2).divisible_by_root_h(&d).unwrap());
        assert!(Root::new(vec![0, 0]).is_err());
        assert!(Root::new(vec![1, 0]).is_err());
        assert!(Root::new(vec![2, 1]).is_err());
    }

    #[test]
    fn root_divisibility_k() {
        let n = 2;
        let one = Laurent::one(n);
        let diff = Root::pair(n, 1, 1, 2, -1).unwrap();
        let sum = Root::pair(n, 1, 1, 2, 1).unwrap();
        let dbl = Root::double(n, 2, 1).unwrap();
        assert!((&(&t(n, 1) * &inv(n, 2)) - &one).divisible_by_k_root(&diff).unwrap());
        assert!((&(&t(n, 1) * &t(n, 2)) - &one).divisible_by_k_root(&sum).unwrap());
        assert!((&t(n, 2).pow(2) - &one).divisible_by_k_root(&dbl).unwrap());
        let bad = &t(n, 1) - &Laurent::constant(n, 2);
        for r in [&diff, &sum, &dbl] {
            assert!(!bad.divisible_by_k_root(r).unwrap());
        }
    }

    #[test]
    fn pretty_printing() {
        let n = 3;
        let p = &(&t(n, 3) * &inv(n, 2)) - &Laurent::one(n);
        assert_eq!(p.pretty(), "t3/t2 - 1");
        let q = &(&inv(n, 1) * &inv(n, 2)) - &Laurent::one(n);
        assert_eq!(q.pretty(), "1/(t1*t2) - 1");
        assert_eq!(Laurent::zero(2).pretty(), "0");
        let r = t(n, 1).scalar_mul(&-2);
        assert_eq!(r.pretty(), "-2*t1");
    }

    #[test]
    fn json_shape() {
        let p = &inv(3, 1).pow(2) - &Laurent::one(3);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":3,"terms":[{"e":[-2,0,0],"c":1},{"e":[0,0,0],"c":-1}]}"#
        );
        let bad = r#"{"n":2,"terms":[{"e":[1],"c":1}]}"#;
        assert!(serde_json::from_str::<Laurent>(bad).is_err());
    }

    #[test]
    fn monomial_inverse_and_eval() {
        let m = &t(2, 1) * &inv(2, 2);
        assert!((&m * &m.monomial_inverse().unwrap()).is_one());
        assert!((&t(2, 1) + &t(2, 2)).monomial_inverse().is_none());
        let f: LaurentPolynomial<f64> = m.map_coefficients(|&c| c as f64);
        assert_eq!(f.evaluate(&[3.0, 2.0]).unwrap(), 1.5);
    }

    fn small_poly() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((prop::collection::vec(-2i32..=2, 2), -3i64..=3), 0..5)
            .prop_map(|ts| Laurent::from_terms(2, ts).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn json_round_trip(a in small_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: Laurent = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
