//! Exact scalar and polynomial arithmetic.
//!
//! Everything downstream works over arbitrary-precision rationals; there is
//! no floating point anywhere in the crate. Polynomials are sparse maps from
//! exponent vectors to coefficients, kept in graded-lexicographic order so
//! that iteration, serialization and printing are all deterministic.
//!
//! Provided here:
//! - [`Rational`] scalars with `p/q` parsing and formatting
//! - [`Monomial`] exponent vectors ordered by total degree, then lex
//! - [`MultiPoly`] sparse polynomials with ring operations, evaluation,
//!   partial derivatives, variable permutations and sign changes
//! - exact division by the structured divisors `x_i`, `x_i - x_j`, `x_i + x_j`
//! - a canonical JSON form plus CSV and LaTeX renderings
//! - [`Params`] holding the ambient dimension and coupling constants

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision rational scalar. Always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    if let Some((_, den)) = t.split_once('/') {
        if den.trim().trim_start_matches('-').parse::<BigInt>() == Ok(BigInt::zero()) {
            return Err(format!("zero denominator in rational '{s}'"));
        }
    }
    Rational::from_str(t).map_err(|e| format!("bad rational '{s}': {e}"))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// Exponent vector of a single monomial. The slot count always equals the
/// ambient variable count of the polynomial holding it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// Total degree, the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// Graded-lexicographic order: lower total degree first, ties broken by the
/// exponent vector compared left to right.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Sparse multivariate polynomial over [`Rational`].
///
/// Invariants: every stored coefficient is nonzero, and every exponent vector
/// has exactly `nvars` slots. Both are maintained by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::new(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The variable `x_i` (zero-based slot).
    pub fn var(nvars: usize, i: usize) -> Self {
        MultiPoly::monomial(nvars, {
            let mut e = vec![0; nvars];
            e[i] = 1;
            e
        }, Rational::one())
    }

    /// A single term `c * x^exps`.
    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector has wrong arity");
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::new(exps), c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in terms {
            p.add_term(&exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector, zero when absent.
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `c * x^exps` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exps: &[u32], c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector has wrong arity");
        if c.is_zero() {
            return;
        }
        let key = Monomial::new(exps.to_vec());
        match self.terms.get_mut(&key) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// `self += scale * other`, the workhorse behind ring ops.
    pub fn add_scaled(&mut self, other: &MultiPoly, scale: &Rational) {
        assert_eq!(self.nvars, other.nvars, "mixed ambient dimensions");
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(&m.exps, c * scale);
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        out.add_scaled(self, c);
        out
    }

    /// Multiplies by a single term `c * x^exps`.
    pub fn mul_term(&self, exps: &[u32], c: &Rational) -> MultiPoly {
        assert_eq!(exps.len(), self.nvars, "exponent vector has wrong arity");
        let mut out = MultiPoly::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m, coef) in &self.terms {
            let e: Vec<u32> = m.exps.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.terms.insert(Monomial::new(e), coef * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point, one value per variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point has wrong arity");
        // Per-variable power tables so x_i^e is computed once per exponent.
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, e) in m.exps.iter().enumerate() {
                max_exp[i] = max_exp[i].max(*e);
            }
        }
        let powers: Vec<Vec<Rational>> = (0..self.nvars)
            .map(|i| {
                let mut col = Vec::with_capacity(max_exp[i] as usize + 1);
                col.push(Rational::one());
                for e in 1..=max_exp[i] as usize {
                    let next = &col[e - 1] * &point[i];
                    col.push(next);
                }
                col
            })
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exps.iter().enumerate() {
                if *e > 0 {
                    t *= &powers[i][*e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e > 0 {
                let mut exps = m.exps.clone();
                exps[i] = e - 1;
                out.add_term(&exps, c * rat_int(e as i64));
            }
        }
        out
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The common degree when homogeneous, `None` otherwise. The zero
    /// polynomial counts as homogeneous of every degree and returns `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => Some(0),
            Some(d) => {
                if degs.all(|e| e == d) {
                    Some(d)
                } else {
                    None
                }
            }
        }
    }

    // -- variable moves ----------------------------------------------------

    /// Swaps the variables in slots `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            exps.swap(i, j);
            out.terms.insert(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Substitutes `x_i -> -x_i`.
    pub fn negate_var(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let c = if m.exps[i] % 2 == 1 { -c.clone() } else { c.clone() };
            out.terms.insert(m.clone(), c);
        }
        out
    }

    /// Substitutes `x_i -> 0`, keeping only terms free of slot `i`.
    pub fn set_var_zero(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exps[i] == 0 {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Substitutes `x_j -> x_i`, folding slot `j`'s exponent onto slot `i`.
    pub fn merge_var(&self, i: usize, j: usize) -> MultiPoly {
        assert_ne!(i, j);
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            exps[i] += exps[j];
            exps[j] = 0;
            out.add_term(&exps, c.clone());
        }
        out
    }

    /// Relabels variables: slot `i` of the result carries what slot
    /// `perm[i]` carried in `self`. `perm` must be a permutation.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars, "permutation has wrong arity");
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let exps: Vec<u32> = perm.iter().map(|&src| m.exps[src]).collect();
            out.terms.insert(Monomial::new(exps), c.clone());
        }
        out
    }

    // -- exact division ----------------------------------------------------

    /// Divides by `x_i`. Panics unless every term is divisible; a remainder
    /// here always means a broken invariant upstream, never a data condition.
    pub fn div_exact_var(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            assert!(
                m.exps[i] > 0,
                "division by x{} hit a term of exponent zero: {}",
                i + 1,
                self
            );
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            out.terms.insert(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Divides by `x_i - x_j` exactly. Panics on a nonzero remainder.
    pub fn div_exact_diff(&self, i: usize, j: usize) -> MultiPoly {
        self.div_linear(i, j, false)
    }

    /// Divides by `x_i + x_j` exactly. Panics on a nonzero remainder.
    pub fn div_exact_sum(&self, i: usize, j: usize) -> MultiPoly {
        self.div_linear(i, j, true)
    }

    // Synthetic division in the variable x_i over the ring in the remaining
    // variables: dividing by x_i -+ x_j runs the Horner recurrence
    // q_{d-1} = a_d +- x_j q_d downward from the top x_i-degree.
    fn div_linear(&self, i: usize, j: usize, sum: bool) -> MultiPoly {
        assert_ne!(i, j);
        // Bucket by the x_i exponent, zeroing that slot.
        let mut buckets: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.exps[i];
            let mut exps = m.exps.clone();
            exps[i] = 0;
            buckets
                .entry(d)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .add_term(&exps, c.clone());
        }
        let top = buckets.keys().next_back().copied().unwrap_or(0);
        let sign = if sum { -Rational::one() } else { Rational::one() };
        let mut quotient = MultiPoly::zero(self.nvars);
        let mut carry = MultiPoly::zero(self.nvars); // q_d while descending
        let mut shift = vec![0u32; self.nvars];
        shift[j] = 1;
        for d in (1..=top).rev() {
            let mut q = carry.mul_term(&shift, &sign);
            if let Some(a) = buckets.get(&d) {
                q.add_scaled(a, &Rational::one());
            }
            let mut lift = vec![0u32; self.nvars];
            lift[i] = d - 1;
            quotient.add_scaled(&q.mul_term(&lift, &Rational::one()), &Rational::one());
            carry = q;
        }
        let mut rem = carry.mul_term(&shift, &sign);
        if let Some(a) = buckets.get(&0) {
            rem.add_scaled(a, &Rational::one());
        }
        assert!(
            rem.is_zero(),
            "division by x{} {} x{} left remainder {}",
            i + 1,
            if sum { "+" } else { "-" },
            j + 1,
            rem
        );
        quotient
    }

    // -- serialization -----------------------------------------------------

    /// Canonical JSON form: `{"nvars": N, "terms": [{"exps": [...], "coef":
    /// "p/q"}, ...]}` with terms in ascending graded-lex order. Equal
    /// polynomials always serialize to identical bytes.
    pub fn to_canonical_json(&self) -> String {
        let doc = JsonPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| JsonTerm { exps: m.exps.clone(), coef: c.to_string() })
                .collect(),
        };
        serde_json::to_string(&doc).expect("polynomial serialization cannot fail")
    }

    pub fn from_canonical_json(s: &str) -> Result<MultiPoly, String> {
        let doc: JsonPoly = serde_json::from_str(s).map_err(|e| e.to_string())?;
        let mut p = MultiPoly::zero(doc.nvars);
        for t in doc.terms {
            if t.exps.len() != doc.nvars {
                return Err(format!(
                    "term arity {} does not match nvars {}",
                    t.exps.len(),
                    doc.nvars
                ));
            }
            p.add_term(&t.exps, parse_rational(&t.coef)?);
        }
        Ok(p)
    }

    /// CSV term list: header `e1,...,eN,coef`, one row per term in ascending
    /// graded-lex order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.nvars {
            out.push_str(&format!("e{i},"));
        }
        out.push_str("coef\n");
        for (m, c) in &self.terms {
            for e in &m.exps {
                out.push_str(&format!("{e},"));
            }
            out.push_str(&format!("{c}\n"));
        }
        out
    }

    /// LaTeX rendering, leading term first, e.g. `x_{1}^{2}-x_{2}^{2}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mono = latex_monomial(m);
            push_signed_term(&mut out, c, &mono, "", |r| {
                let (n, d) = (r.numer(), r.denom());
                if d.is_one() {
                    n.to_string()
                } else {
                    format!("\\frac{{{n}}}{{{d}}}")
                }
            });
        }
        out
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (i, e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("x_{{{}}}", i + 1)),
            _ => s.push_str(&format!("x_{{{}}}^{{{}}}", i + 1, e)),
        }
    }
    s
}

// Shared by the LaTeX and plain-text writers: appends one term with its sign,
// dropping unit coefficients in front of nonempty monomials.
fn push_signed_term<F>(out: &mut String, c: &Rational, mono: &str, sep: &str, render: F)
where
    F: Fn(&Rational) -> String,
{
    let mag = c.abs();
    let negative = c.is_negative();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push(if negative { '-' } else { '+' });
    }
    if mono.is_empty() {
        out.push_str(&render(&mag));
    } else {
        if !mag.is_one() {
            out.push_str(&render(&mag));
            out.push_str(sep);
        }
        out.push_str(mono);
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| {
                    if *e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            push_signed_term(&mut out, c, &mono.join("*"), "*", |r| r.to_string());
        }
        write!(f, "{out}")
    }
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    nvars: usize,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exps: Vec<u32>,
    coef: String,
}

// -- ring operator impls ----------------------------------------------------

impl<'b> Add<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<'b> Sub<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<'b> Mul<&'b MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "mixed ambient dimensions");
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e: Vec<u32> = m.exps.iter().zip(&m2.exps).map(|(a, b)| a + b).collect();
                out.add_term(&e, c * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// Ambient dimension and coupling constants.
///
/// `k` weights the permutation and sign-swap reflections, `k1` the plain sign
/// changes. The derived constant `k2 = (N-1)k + k1 + 1/2` shows up in nearly
/// every closed form, so it is computed once and stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub nvars: usize,
    pub k: Rational,
    pub k1: Rational,
    pub k2: Rational,
}

impl Params {
    pub fn new(nvars: usize, k: Rational, k1: Rational) -> Self {
        assert!(nvars >= 2, "need at least two variables");
        let k2 = rat_int(nvars as i64 - 1) * &k + &k1 + rat(1, 2);
        Params { nvars, k, k1, k2 }
    }
}
