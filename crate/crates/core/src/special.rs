//! Closed-form special values for the harmonic families.
//!
//! Four groups of evaluations, each an exact ratio of Pochhammer products,
//! sometimes times a terminating hypergeometric sum at unit argument:
//! values at the all-ones point, coefficients of the extreme monomials,
//! values of the even part at `(1, -1, 0, ..., 0)`, and squared norms under
//! the operator pairing `<f, g> = f(T) g(x) |_{x=0}`. Every closed form has
//! an independent check path against the materialized polynomials; the norm
//! certificate carries both routes and refuses to answer when they differ.
//!
//! The point `(1, -1, 0, ...)` stands in for the complex point whose square
//! is that vector: each family is a monomial prefix in the first two
//! variables times an even polynomial, so only squared variables ever need
//! a value and all arithmetic stays rational.

use crate::dunkl::dunkl_t;
use crate::exactalg::{format_rational, rat, rat_int, MultiPoly, Params, Rational};
use crate::harmonic::{ladder, HarmonicContext, HarmonicLabel};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

/// Rising factorial `(a)_n = a(a+1)...(a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += rat_int(1);
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// A hypergeometric series at unit argument, kept as its parameter lists.
/// Only terminating instances (some upper parameter a non-positive integer)
/// can be summed.
#[derive(Clone, Debug, PartialEq)]
pub struct HypSeries {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

impl HypSeries {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        HypSeries { upper, lower }
    }

    /// Smallest `n` with `-n` among the upper parameters, the index of the
    /// last non-zero term. `None` when the series does not terminate.
    pub fn termination_order(&self) -> Option<u32> {
        self.upper
            .iter()
            .filter(|u| u.is_integer() && !u.is_positive())
            .map(|u| (-u).to_integer().to_u32().expect("termination order fits in u32"))
            .min()
    }

    /// One plus the sum of the upper parameters equals the sum of the lower
    /// parameters. The transformation below is valid exactly in this case.
    pub fn is_balanced(&self) -> bool {
        let up: Rational = self.upper.iter().sum();
        let lo: Rational = self.lower.iter().sum();
        up + rat_int(1) == lo
    }
}

/// Exact value of a terminating series: `sum_i prod(upper)_i / (prod(lower)_i i!)`.
/// Fails when no upper parameter terminates the sum, or when a lower
/// parameter reaches zero while non-zero terms remain.
pub fn hyp_sum(s: &HypSeries) -> Result<Rational, String> {
    let order = s
        .termination_order()
        .ok_or_else(|| "series does not terminate: no upper parameter is -n".to_string())?;
    let mut term = Rational::one();
    let mut acc = term.clone();
    for i in 0..order {
        let shift = rat_int(i as i64);
        let mut num = Rational::one();
        for u in &s.upper {
            num *= u + &shift;
        }
        let mut den = rat_int(i as i64 + 1);
        for l in &s.lower {
            let factor = l + &shift;
            if factor.is_zero() {
                return Err(format!(
                    "lower parameter {} vanishes at term {}",
                    format_rational(l),
                    i + 1
                ));
            }
            den *= factor;
        }
        term = term * num / den;
        acc += &term;
    }
    Ok(acc)
}

/// Rewrites a balanced terminating series with four upper and three lower
/// parameters (the termination parameter first) into an equivalent one:
/// returns `(prefactor, transformed)` with
/// `hyp_sum(input) = prefactor * hyp_sum(transformed)`. With upper
/// `(-n, a, b, c)` and lower `(d, e, f)`, the transformed series is
/// `(-n, a, d-b, d-c)` over `(d, 1+a-e-n, 1+a-f-n)` and the prefactor is
/// `(1+a-e-n)_n (1+a-f-n)_n / ((e)_n (f)_n)`.
pub fn whipple_transform(s: &HypSeries) -> Result<(Rational, HypSeries), String> {
    if s.upper.len() != 4 || s.lower.len() != 3 {
        return Err("expected four upper and three lower parameters".to_string());
    }
    let head = &s.upper[0];
    if !head.is_integer() || head.is_positive() {
        return Err("first upper parameter must be a non-positive integer".to_string());
    }
    let n = (-head).to_integer().to_u32().expect("termination order fits in u32");
    if !s.is_balanced() {
        return Err("series is not balanced".to_string());
    }
    let (a, b, c) = (&s.upper[1], &s.upper[2], &s.upper[3]);
    let (d, e, f) = (&s.lower[0], &s.lower[1], &s.lower[2]);
    let e_new = rat_int(1) + a - e - rat_int(n as i64);
    let f_new = rat_int(1) + a - f - rat_int(n as i64);
    let den = pochhammer(e, n) * pochhammer(f, n);
    if den.is_zero() {
        return Err("prefactor denominator vanishes".to_string());
    }
    let pre = pochhammer(&e_new, n) * pochhammer(&f_new, n) / den;
    let out = HypSeries::new(
        vec![head.clone(), a.clone(), d - b, d - c],
        vec![d.clone(), e_new, f_new],
    );
    Ok((pre, out))
}

fn nk(p: &Params) -> Rational {
    rat_int(p.nvars as i64) * &p.k
}

fn nm1k(p: &Params) -> Rational {
    rat_int(p.nvars as i64 - 1) * &p.k
}

/// Increments the second coupling parameter, which shifts `k2` by one while
/// leaving `k` alone. Several `eps = 1` formulas are the `eps = 0` ones
/// under this shift.
fn bump_k2(p: &Params) -> Params {
    Params::new(p.nvars, p.k.clone(), &p.k1 + rat_int(1))
}

fn neg_one_pow(n: u32) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn two_pow(n: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= rat_int(2);
    }
    acc
}

/// Value of `h_{n,eps}` at `(1, 1, ..., 1)`. Five closed forms cover the
/// explicit families (two of them are identically zero there, being
/// antisymmetric under the swap of the first two variables); the
/// swap-defined families inherit the value of their source unchanged.
pub fn value_at_ones(label: HarmonicLabel, p: &Params) -> Rational {
    let n = label.class_index();
    let ni = n as i64;
    let one = rat_int(1);
    match (label.residue(), label.eps) {
        (0, 0) => {
            pochhammer(&(nk(p) + &one), n) * pochhammer(&(nm1k(p) + &one), n)
                / (factorial(n) * pochhammer(&(&p.k2 + rat_int(ni)), n))
        }
        (1, 0) | (1, 1) => {
            pochhammer(&(nk(p) + &one), n) * pochhammer(&(nm1k(p) + &one), n)
                / (factorial(n) * pochhammer(&(&p.k2 + rat_int(ni + 1)), n))
        }
        (2, 0) | (3, 1) => Rational::zero(),
        (3, 0) => {
            pochhammer(&(nk(p) + &one), n + 1) * pochhammer(&(nm1k(p) + &one), n)
                / (factorial(n) * pochhammer(&(&p.k2 + rat_int(ni + 1)), n + 1))
        }
        (0, 1) | (2, 1) => value_at_ones(HarmonicLabel::new(label.n + 1, 0), p),
        _ => unreachable!("eps is 0 or 1"),
    }
}

/// Value of the table entry `phi_{n,j}` at `(1, 1, ..., 1)`: zero when
/// `n + j` is odd, otherwise `2^j (-1)^{(n-j)/2} (Nk+1)_{(n+j)/2}` over
/// `((n-j)/2)! j!`.
pub fn phi_at_ones(n: u32, j: u32, p: &Params) -> Rational {
    if (n + j) % 2 == 1 {
        return Rational::zero();
    }
    let lower = (n - j) / 2;
    let upper = (n + j) / 2;
    two_pow(j) * neg_one_pow(lower) * pochhammer(&(nk(p) + rat_int(1)), upper)
        / (factorial(lower) * factorial(j))
}

/// The two distinguished monomials a family's closed coefficient formulas
/// cover: the label monomial `x1^n x2^eps`, and its partner on the other
/// side of the swap of the first two variables (which degenerates to a
/// second independent slot, `x1 x2^{n-1}`, for the mixed-parity families).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LeadingMonomial {
    Primary,
    Companion,
}

/// Exponent vector of the selected monomial.
pub fn leading_monomial(label: HarmonicLabel, which: LeadingMonomial, nvars: usize) -> Vec<u32> {
    let mut exps = vec![0u32; nvars];
    match which {
        LeadingMonomial::Primary => {
            exps[0] = label.n;
            exps[1] = label.eps as u32;
        }
        LeadingMonomial::Companion => match (label.residue(), label.eps) {
            (0, 0) | (2, 0) => exps[1] = label.n,
            (1, 1) | (3, 1) => {
                exps[0] = 1;
                exps[1] = label.n;
            }
            (1, 0) | (3, 0) => {
                exps[0] = 1;
                exps[1] = label.n - 1;
            }
            (0, 1) | (2, 1) => exps[1] = label.n + 1,
            _ => unreachable!("eps is 0 or 1"),
        },
    }
    exps
}

/// Closed form for the coefficient of the selected monomial in `h_{n,eps}`.
pub fn leading_coefficient(label: HarmonicLabel, which: LeadingMonomial, p: &Params) -> Rational {
    let n = label.class_index();
    let ni = n as i64;
    match (label.residue(), label.eps, which) {
        (0, 0, _) => lead_base(n, rat_int(ni), rat_int(ni + 1), p),
        (1, 1, _) => {
            let b = bump_k2(p);
            lead_base(n, rat_int(ni), rat_int(ni + 1), &b)
        }
        (2, 0, LeadingMonomial::Primary) => lead_base(n, rat_int(ni + 1), rat_int(ni + 2), p),
        (2, 0, LeadingMonomial::Companion) => -lead_base(n, rat_int(ni + 1), rat_int(ni + 2), p),
        (3, 1, LeadingMonomial::Primary) => {
            let b = bump_k2(p);
            lead_base(n, rat_int(ni + 1), rat_int(ni + 2), &b)
        }
        (3, 1, LeadingMonomial::Companion) => {
            let b = bump_k2(p);
            -lead_base(n, rat_int(ni + 1), rat_int(ni + 2), &b)
        }
        (1, 0, LeadingMonomial::Primary) => lead_base(n, rat_int(ni + 1), rat_int(ni + 1), p),
        (1, 0, LeadingMonomial::Companion) => {
            let ratio = (&p.k2 - &p.k + rat_int(2 * ni)) / (&p.k2 - &p.k);
            lead_base(n, rat_int(ni + 1), rat_int(ni + 1), p) * ratio
        }
        (3, 0, LeadingMonomial::Primary) => lead_odd_tail(n, p),
        (3, 0, LeadingMonomial::Companion) => {
            let ratio = (&p.k2 + &p.k + rat_int(2 * ni + 1)) / (&p.k2 - &p.k);
            -lead_odd_tail(n, p) * ratio
        }
        // Swap-defined families: the swap exchanges the two monomials.
        (0, 1, LeadingMonomial::Primary) | (2, 1, LeadingMonomial::Primary) => leading_coefficient(
            HarmonicLabel::new(label.n + 1, 0),
            LeadingMonomial::Companion,
            p,
        ),
        (0, 1, LeadingMonomial::Companion) | (2, 1, LeadingMonomial::Companion) => {
            leading_coefficient(HarmonicLabel::new(label.n + 1, 0), LeadingMonomial::Primary, p)
        }
        _ => unreachable!("eps is 0 or 1"),
    }
}

/// `(-1)^n (k+1)_n (k2-k)_n ((N-1)k+1)_n / (n! (k2+s1)_n (Nk+s2)_n)`, the
/// shape shared by most of the closed coefficient forms.
fn lead_base(n: u32, s1: Rational, s2: Rational, p: &Params) -> Rational {
    let one = rat_int(1);
    neg_one_pow(n)
        * pochhammer(&(&p.k + &one), n)
        * pochhammer(&(&p.k2 - &p.k), n)
        * pochhammer(&(nm1k(p) + &one), n)
        / (factorial(n)
            * pochhammer(&(&p.k2 + s1), n)
            * pochhammer(&(nk(p) + s2), n))
}

/// The one form with mismatched Pochhammer lengths:
/// `(-1)^{n+1} (k+1)_n (k2-k)_{n+1} ((N-1)k+1)_n / (n! (k2+n+1)_{n+1} (Nk+n+2)_n)`.
fn lead_odd_tail(n: u32, p: &Params) -> Rational {
    let ni = n as i64;
    let one = rat_int(1);
    neg_one_pow(n + 1)
        * pochhammer(&(&p.k + &one), n)
        * pochhammer(&(&p.k2 - &p.k), n + 1)
        * pochhammer(&(nm1k(p) + &one), n)
        / (factorial(n)
            * pochhammer(&(&p.k2 + rat_int(ni + 1)), n + 1)
            * pochhammer(&(nk(p) + rat_int(ni + 2)), n))
}

/// The ordered Pochhammer product attached to a two-row exponent pair:
/// `(Nk+1)_a ((N-1)k+1)_b (k2)_{m-a} (k2-k)_{n-b}` with `a = floor(m/2)`,
/// `b = floor(n/2)`. Requires `m >= n`.
pub fn lambda_value(m: u32, n: u32, p: &Params) -> Rational {
    assert!(m >= n, "lambda requires m >= n, got ({m}, {n})");
    let a = m / 2;
    let b = n / 2;
    let one = rat_int(1);
    pochhammer(&(nk(p) + &one), a)
        * pochhammer(&(nm1k(p) + &one), b)
        * pochhammer(&p.k2, m - a)
        * pochhammer(&(&p.k2 - &p.k), n - b)
}

/// The scalar `c` with `T1^n T2^eps h_{n,eps} = c`. Six families have
/// explicit `2^... (+-1) Lambda(...)` products; the swap-defined ones take
/// one ladder step into their symmetric neighbor first.
pub fn t_power_scalar(label: HarmonicLabel, p: &Params) -> Rational {
    let m = label.class_index();
    match (label.residue(), label.eps) {
        (0, 0) => two_pow(4 * m) * neg_one_pow(m) * lambda_value(2 * m, 2 * m, p),
        (1, 0) => two_pow(4 * m + 1) * neg_one_pow(m) * lambda_value(2 * m + 1, 2 * m, p),
        (2, 0) => two_pow(4 * m + 2) * neg_one_pow(m) * lambda_value(2 * m + 2, 2 * m, p),
        (1, 1) => two_pow(4 * m + 2) * neg_one_pow(m) * lambda_value(2 * m + 1, 2 * m + 1, p),
        (3, 0) => two_pow(4 * m + 3) * neg_one_pow(m + 1) * lambda_value(2 * m + 2, 2 * m + 1, p),
        (3, 1) => two_pow(4 * m + 4) * neg_one_pow(m) * lambda_value(2 * m + 3, 2 * m + 1, p),
        (0, 1) | (2, 1) => {
            let (scale, target) =
                ladder(1, label, p).expect("swap families have a non-zero second-operator image");
            debug_assert_eq!(target, HarmonicLabel::new(label.n, 0));
            scale * t_power_scalar(target, p)
        }
        _ => unreachable!("eps is 0 or 1"),
    }
}

/// Monomial prefix `(e1, e2)` with `h = x1^e1 x2^e2 f0(x1^2, ..., xN^2)`.
pub fn eps_pattern(label: HarmonicLabel) -> (u32, u32) {
    match (label.residue() % 2, label.eps) {
        (0, 0) => (0, 0),
        (1, 0) => (1, 0),
        (1, 1) => (1, 1),
        (0, 1) => (0, 1),
        _ => unreachable!("eps is 0 or 1"),
    }
}

/// Evaluates the even factor `f0` of `h = x1^e1 x2^e2 f0(x1^2, ..., xN^2)`
/// at `(1, -1, 0, ..., 0)`, straight from the monomials of `h`. Panics if
/// some monomial does not match the declared parity pattern.
pub fn even_part_at_y0(h: &MultiPoly, eps: (u32, u32)) -> Rational {
    let mut acc = Rational::zero();
    for (mono, coef) in h.iter() {
        let e = &mono.exps;
        assert_eq!(e[0] % 2, eps.0, "first exponent parity breaks the prefix pattern");
        assert_eq!(e[1] % 2, eps.1, "second exponent parity breaks the prefix pattern");
        assert!(
            e.iter().skip(2).all(|&v| v % 2 == 0),
            "tail exponents must be even"
        );
        if e.iter().skip(2).any(|&v| v > 0) {
            continue;
        }
        if ((e[1] - eps.1) / 2) % 2 == 0 {
            acc += coef;
        } else {
            acc -= coef;
        }
    }
    acc
}

/// Value of the even factor of the table entry `phi_{n,j}` at
/// `(1, -1, 0, ..., 0)`. Zero for odd `j`; otherwise a ratio of Pochhammer
/// products in `k` alone (the inert variables drop out).
pub fn phi_at_x0(n: u32, j: u32, p: &Params) -> Rational {
    if j % 2 == 1 {
        return Rational::zero();
    }
    let jh = j / 2;
    let two_k = rat_int(2) * &p.k;
    let k32 = &p.k + rat(3, 2);
    if n % 2 == 0 {
        let m = n / 2;
        pochhammer(&(&two_k + rat_int(1)), m + jh)
            * neg_one_pow(m)
            * pochhammer(&rat_int(-(m as i64)), jh)
            * (&two_k + rat_int(2 * m as i64 + 1))
            / (factorial(m) * factorial(jh) * pochhammer(&k32, jh) * (&two_k + rat_int(1)))
    } else {
        let m = (n - 1) / 2;
        rat_int(2)
            * pochhammer(&(&two_k + rat_int(2)), m + jh)
            * neg_one_pow(m)
            * pochhammer(&rat_int(-(m as i64)), jh)
            / (factorial(m) * factorial(jh) * pochhammer(&k32, jh))
    }
}

/// Value of the even factor of `h_{n,eps}` at `(1, -1, 0, ..., 0)`, by the
/// closed forms: a Pochhammer prefactor times a balanced terminating series
/// whose terms are all positive for positive couplings. The `eps = 1`
/// prefix families reuse the `eps = 0` forms with `k2` shifted by one; the
/// swap-defined families pick up the parity sign of their source's even
/// factor.
pub fn value_at_x0(label: HarmonicLabel, p: &Params) -> Rational {
    let idx = label.class_index();
    match (label.residue(), label.eps) {
        (r, 0) => x0_display(u32::from(r), idx, p),
        (1, 1) => x0_display(0, idx, &bump_k2(p)),
        (3, 1) => x0_display(2, idx, &bump_k2(p)),
        (0, 1) => value_at_x0(HarmonicLabel::new(label.n + 1, 0), p),
        (2, 1) => -value_at_x0(HarmonicLabel::new(label.n + 1, 0), p),
        _ => unreachable!("eps is 0 or 1"),
    }
}

/// The four explicit displays behind [`value_at_x0`], one per residue.
fn x0_display(residue: u32, idx: u32, p: &Params) -> Rational {
    let n = idx;
    let ni = n as i64;
    let one = rat_int(1);
    let k = &p.k;
    let k2 = &p.k2;
    let wide = nm1k(p);
    let full = nk(p);
    let two_k = rat_int(2) * k;
    let k32 = k + rat(3, 2);
    let (pre, series) = match residue {
        0 => (
            neg_one_pow(n)
                * pochhammer(&(&two_k + &one), n)
                * (&two_k + rat_int(2 * ni + 1))
                * pochhammer(&(&wide + &one), n)
                * pochhammer(&(k2 - k), n)
                / (factorial(n)
                    * (&two_k + &one)
                    * pochhammer(&(k2 + rat_int(ni)), n)
                    * pochhammer(&(&full + rat_int(ni + 1)), n)),
            HypSeries::new(
                vec![
                    rat_int(-ni),
                    k2 + &wide + rat_int(2 * ni),
                    k + &one,
                    rat(1, 2) - k - rat_int(ni),
                ],
                vec![k32, k2 - k, &wide + &one],
            ),
        ),
        1 => (
            neg_one_pow(n)
                * pochhammer(&(&two_k + &one), n)
                * (&two_k + rat_int(2 * ni + 1))
                * pochhammer(&(&wide + &one), n)
                * pochhammer(&(k2 - k + &one), n)
                / (factorial(n)
                    * (&two_k + &one)
                    * pochhammer(&(k2 + rat_int(ni + 1)), n)
                    * pochhammer(&(&full + rat_int(ni + 1)), n)),
            HypSeries::new(
                vec![
                    rat_int(-ni),
                    k2 + &wide + rat_int(2 * ni + 1),
                    k + &one,
                    rat(1, 2) - k - rat_int(ni),
                ],
                vec![k32, k2 - k + &one, &wide + &one],
            ),
        ),
        2 => (
            neg_one_pow(n)
                * rat_int(2)
                * pochhammer(&(&two_k + rat_int(2)), n)
                * pochhammer(&(&wide + &one), n)
                * pochhammer(&(k2 - k), n)
                / (factorial(n)
                    * pochhammer(&(k2 + rat_int(ni + 1)), n)
                    * pochhammer(&(&full + rat_int(ni + 2)), n)),
            HypSeries::new(
                vec![
                    rat_int(-ni),
                    k2 + &wide + rat_int(2 * ni + 1),
                    k + &one,
                    rat(-1, 2) - k - rat_int(ni),
                ],
                vec![k32, k2 - k, &wide + &one],
            ),
        ),
        3 => (
            neg_one_pow(n + 1)
                * (rat_int(2) * k2 + rat_int(2 * ni + 1))
                * pochhammer(&(&two_k + rat_int(2)), n)
                * pochhammer(&(&wide + &one), n)
                * pochhammer(&(k2 - k + &one), n)
                / (factorial(n)
                    * pochhammer(&(k2 + rat_int(ni + 1)), n + 1)
                    * pochhammer(&(&full + rat_int(ni + 2)), n)),
            HypSeries::new(
                vec![
                    rat_int(-ni),
                    k2 + &wide + rat_int(2 * ni + 2),
                    k + &one,
                    rat(-1, 2) - k - rat_int(ni),
                ],
                vec![k32, k2 - k + &one, &wide + &one],
            ),
        ),
        _ => unreachable!("residue is n mod 4"),
    };
    pre * hyp_sum(&series).expect("the display series terminates")
}

/// `f(T) g |_{x=0}`: expand `f` in monomials and apply the matching
/// operator monomials to `g`. Chains are built last variable first and
/// memoized, so monomials sharing a trailing exponent block reuse the
/// partial applications.
pub fn t_pairing(f: &MultiPoly, g: &MultiPoly, p: &Params) -> Rational {
    assert_eq!(f.nvars(), g.nvars());
    let mut memo: HashMap<Vec<u32>, MultiPoly> = HashMap::new();
    let origin = vec![0u32; f.nvars()];
    let mut acc = Rational::zero();
    for (mono, coef) in f.iter() {
        let applied = t_chain(&mono.exps, &mut memo, g, p);
        acc += coef * applied.coeff(&origin);
    }
    acc
}

fn t_chain(
    exps: &[u32],
    memo: &mut HashMap<Vec<u32>, MultiPoly>,
    g: &MultiPoly,
    p: &Params,
) -> MultiPoly {
    if let Some(hit) = memo.get(exps) {
        return hit.clone();
    }
    let lead = match exps.iter().position(|&e| e > 0) {
        None => return g.clone(),
        Some(i) => i,
    };
    let mut rest = exps.to_vec();
    rest[lead] -= 1;
    let inner = t_chain(&rest, memo, g, p);
    let out = dunkl_t(lead, &inner, p);
    memo.insert(exps.to_vec(), out.clone());
    out
}

/// Squared norm of `h_{n,eps}` under the operator pairing, with both
/// routes recorded: the raw pairing of the polynomial with itself, and the
/// product of the even-part value at `(1, -1, 0, ...)` with the scalar of
/// `T1^n T2^eps`. Disagreement is an error, never a silent pick.
#[derive(Clone, Debug)]
pub struct NormSquared {
    pub label: HarmonicLabel,
    pub value: Rational,
    pub pairing_route: Rational,
    pub closed_route: Rational,
    pub x0_value: Rational,
    pub t_scalar: Rational,
}

pub fn norm_squared(ctx: &HarmonicContext, label: HarmonicLabel) -> Result<NormSquared, String> {
    let p = ctx.params();
    let h = ctx.build(label);
    let pairing = t_pairing(&h, &h, p);
    let x0_value = value_at_x0(label, p);
    let t_scalar = t_power_scalar(label, p);
    let closed = &x0_value * &t_scalar;
    if pairing != closed {
        return Err(format!(
            "norm routes disagree for h_({},{}): pairing {} vs closed {}",
            label.n,
            label.eps,
            format_rational(&pairing),
            format_rational(&closed)
        ));
    }
    Ok(NormSquared {
        label,
        value: pairing.clone(),
        pairing_route: pairing,
        closed_route: closed,
        x0_value,
        t_scalar,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{BasisKind, SeriesTable};

    fn params_a() -> Params {
        Params::new(3, rat(1, 3), rat(1, 2))
    }

    fn params_b() -> Params {
        Params::new(4, rat(2, 5), rat(3, 7))
    }

    fn all_labels(max_n: u32) -> Vec<HarmonicLabel> {
        let mut out = Vec::new();
        for n in 0..=max_n {
            for eps in 0..=1u8 {
                out.push(HarmonicLabel::new(n, eps));
            }
        }
        out
    }

    #[test]
    fn pochhammer_and_factorial_pinned() {
        assert_eq!(pochhammer(&rat(7, 2), 0), rat_int(1));
        assert_eq!(pochhammer(&rat_int(3), 2), rat_int(12));
        assert_eq!(pochhammer(&rat(-5, 2), 3), rat(-15, 8));
        assert_eq!(factorial(0), rat_int(1));
        assert_eq!(factorial(5), rat_int(120));
    }

    #[test]
    fn vandermonde_and_saalschuetz_spot_checks() {
        // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n.
        for (n, b, c) in [
            (0u32, rat(1, 3), rat(5, 2)),
            (3, rat(2, 7), rat(4, 3)),
            (5, rat(-3, 4), rat(9, 5)),
        ] {
            let series = HypSeries::new(vec![rat_int(-(n as i64)), b.clone()], vec![c.clone()]);
            let expect = pochhammer(&(&c - &b), n) / pochhammer(&c, n);
            assert_eq!(hyp_sum(&series).unwrap(), expect);
        }
        // 3F2(-n, a, b; c, d; 1) = (c-a)_n (d-a)_n / ((c)_n (d)_n) when
        // -n + a + b + 1 = c + d.
        for (n, a, b, c) in [
            (2u32, rat(1, 2), rat(5, 3), rat(7, 4)),
            (4, rat(3, 5), rat(2, 9), rat(11, 6)),
        ] {
            let d = rat_int(1 - n as i64) + &a + &b - &c;
            let series = HypSeries::new(
                vec![rat_int(-(n as i64)), a.clone(), b.clone()],
                vec![c.clone(), d.clone()],
            );
            let expect = pochhammer(&(&c - &a), n) * pochhammer(&(&d - &a), n)
                / (pochhammer(&c, n) * pochhammer(&d, n));
            assert_eq!(hyp_sum(&series).unwrap(), expect);
        }
    }

    #[test]
    fn hyp_sum_error_states() {
        let no_term = HypSeries::new(vec![rat(1, 2), rat_int(1)], vec![rat_int(2)]);
        assert!(hyp_sum(&no_term).unwrap_err().contains("terminate"));
        // Lower parameter -2 reaches zero while -3 still has terms left.
        let bad_lower = HypSeries::new(vec![rat_int(-3), rat_int(1)], vec![rat_int(-2)]);
        assert!(hyp_sum(&bad_lower).unwrap_err().contains("vanishes"));
        // A lower parameter that would vanish only past the last term is fine.
        let safe = HypSeries::new(vec![rat_int(-2), rat_int(1)], vec![rat_int(-5)]);
        assert!(hyp_sum(&safe).is_ok());
    }

    #[test]
    fn whipple_transform_preserves_the_sum() {
        // Order zero: both sums are 1 and the prefactor is empty.
        let trivial = HypSeries::new(
            vec![rat_int(0), rat(1, 2), rat(1, 3), rat(1, 4)],
            vec![rat(5, 2), rat(1, 5), rat(-37, 60)],
        );
        assert!(trivial.is_balanced());
        let (pre, out) = whipple_transform(&trivial).unwrap();
        assert_eq!(pre, rat_int(1));
        assert_eq!(hyp_sum(&out).unwrap(), rat_int(1));

        // A balanced order-three tuple.
        let s = HypSeries::new(
            vec![rat_int(-3), rat(5, 2), rat(1, 3), rat(3, 4)],
            vec![rat(7, 6), rat(4, 3), rat(-11, 12)],
        );
        assert!(s.is_balanced());
        let (pre, out) = whipple_transform(&s).unwrap();
        assert_eq!(hyp_sum(&s).unwrap(), pre * hyp_sum(&out).unwrap());

        // Unbalanced input is rejected.
        let skew = HypSeries::new(
            vec![rat_int(-3), rat(5, 2), rat(1, 3), rat(3, 4)],
            vec![rat(7, 6), rat(4, 3), rat(1, 2)],
        );
        assert!(whipple_transform(&skew).unwrap_err().contains("balanced"));
    }

    #[test]
    fn x0_series_is_the_transform_of_the_raw_sum() {
        // The raw expansion of the even part of h_{4n,0} at (1,-1,0,...)
        // is a balanced series; its transform is the one the closed route
        // uses, and the prefactors match up.
        let p = params_a();
        let n: u32 = 2;
        let ni = n as i64;
        let one = rat_int(1);
        let k = &p.k;
        let k2 = &p.k2;
        let wide = nm1k(&p);
        let full = nk(&p);
        let two_k = rat_int(2) * k;
        let raw = HypSeries::new(
            vec![
                rat_int(-ni),
                k2 + &wide + rat_int(2 * ni),
                rat(1, 2),
                &two_k + rat_int(ni + 1),
            ],
            vec![k + rat(3, 2), k2 + rat_int(ni), &full + rat_int(ni + 1)],
        );
        assert!(raw.is_balanced());
        let raw_pre = neg_one_pow(n) * pochhammer(&(&two_k + &one), n)
            * (&two_k + rat_int(2 * ni + 1))
            / (factorial(n) * (&two_k + &one));
        let (w_pre, w_out) = whipple_transform(&raw).unwrap();
        let mut upper = w_out.upper.clone();
        let mut lower = w_out.lower.clone();
        upper.sort();
        lower.sort();
        let mut want_upper = vec![
            rat_int(-ni),
            k2 + &wide + rat_int(2 * ni),
            k + &one,
            rat(1, 2) - k - rat_int(ni),
        ];
        let mut want_lower = vec![k + rat(3, 2), k2 - k, &wide + &one];
        want_upper.sort();
        want_lower.sort();
        assert_eq!(upper, want_upper);
        assert_eq!(lower, want_lower);
        assert_eq!(
            w_pre,
            pochhammer(&(&wide + &one), n) * pochhammer(&(k2 - k), n)
                / (pochhammer(&(k2 + rat_int(ni)), n) * pochhammer(&(&full + rat_int(ni + 1)), n))
        );
        let label = HarmonicLabel::new(4 * n, 0);
        assert_eq!(raw_pre * hyp_sum(&raw).unwrap(), value_at_x0(label, &p));
    }

    #[test]
    fn values_at_ones_match_direct_evaluation() {
        for p in [params_a(), params_b()] {
            let ctx = HarmonicContext::new(p.clone(), 8);
            let ones = vec![rat_int(1); p.nvars];
            for label in all_labels(7) {
                let direct = ctx.build(label).eval(&ones);
                assert_eq!(direct, value_at_ones(label, &p), "label {:?}", label);
            }
        }
    }

    #[test]
    fn phi_at_ones_matches_table() {
        for p in [params_a(), params_b()] {
            let table = SeriesTable::expand(BasisKind::Phi, 4, &p);
            let ones = vec![rat_int(1); p.nvars];
            for n in 0..=4i64 {
                for j in 0..=n {
                    let direct = table.entry(n, j).eval(&ones);
                    assert_eq!(direct, phi_at_ones(n as u32, j as u32, &p));
                }
            }
        }
    }

    #[test]
    fn leading_coefficients_match_materialized() {
        for p in [params_a(), params_b()] {
            let ctx = HarmonicContext::new(p.clone(), 8);
            for label in all_labels(7) {
                for which in [LeadingMonomial::Primary, LeadingMonomial::Companion] {
                    let mono = leading_monomial(label, which, p.nvars);
                    let direct = ctx.build(label).coeff(&mono);
                    assert_eq!(
                        direct,
                        leading_coefficient(label, which, &p),
                        "label {:?} {:?}",
                        label,
                        which
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_pinned_values() {
        let p = params_a();
        assert_eq!(lambda_value(0, 0, &p), rat_int(1));
        let nk1 = nk(&p) + rat_int(1);
        assert_eq!(lambda_value(1, 0, &p), p.k2.clone());
        assert_eq!(lambda_value(2, 0, &p), &nk1 * &p.k2);
        assert_eq!(lambda_value(2, 1, &p), &nk1 * &p.k2 * (&p.k2 - &p.k));
    }

    #[test]
    #[should_panic(expected = "m >= n")]
    fn lambda_rejects_reversed_arguments() {
        lambda_value(1, 2, &params_a());
    }

    #[test]
    fn t_power_scalars_match_repeated_operators() {
        let p = params_a();
        let ctx = HarmonicContext::new(p.clone(), 6);
        let origin = vec![0u32; p.nvars];
        for label in all_labels(5) {
            let mut f = ctx.build(label);
            for _ in 0..label.eps {
                f = dunkl_t(1, &f, &p);
            }
            for _ in 0..label.n {
                f = dunkl_t(0, &f, &p);
            }
            let scalar = t_power_scalar(label, &p);
            assert_eq!(f.coeff(&origin), scalar, "label {:?}", label);
            assert!(f.num_terms() <= 1, "result must be constant");
        }
    }

    #[test]
    fn phi_x0_lemma_matches_table_entries() {
        for p in [params_a(), params_b()] {
            let table = SeriesTable::expand(BasisKind::Phi, 4, &p);
            for n in 0..=4i64 {
                for j in 0..=n {
                    let direct = even_part_at_y0(&table.entry(n, j), (0, 0));
                    assert_eq!(
                        direct,
                        phi_at_x0(n as u32, j as u32, &p),
                        "entry ({n}, {j})"
                    );
                }
            }
        }
        let p = params_a();
        assert_eq!(phi_at_x0(1, 0, &p), rat_int(2));
        assert_eq!(phi_at_x0(2, 0, &p), -(rat_int(2) * &p.k + rat_int(3)));
    }

    #[test]
    fn x0_values_match_direct_even_part_evaluation() {
        for p in [params_a(), params_b()] {
            let ctx = HarmonicContext::new(p.clone(), 8);
            for label in all_labels(7) {
                let h = ctx.build(label);
                let direct = even_part_at_y0(&h, eps_pattern(label));
                assert_eq!(direct, value_at_x0(label, &p), "label {:?}", label);
            }
        }
        // h_{3,0} evaluates to -(2 k2 + 1)/(k2 + 1).
        let p = params_a();
        let want = -(rat_int(2) * &p.k2 + rat_int(1)) / (&p.k2 + rat_int(1));
        assert_eq!(value_at_x0(HarmonicLabel::new(3, 0), &p), want);
    }

    #[test]
    fn norms_dual_route_and_pinned() {
        let p = params_a();
        let ctx = HarmonicContext::new(p.clone(), 6);
        for label in all_labels(5) {
            let cert = norm_squared(&ctx, label).unwrap();
            assert!(cert.value.is_positive(), "label {:?}", label);
            assert_eq!(cert.pairing_route, cert.closed_route);
        }
        let at = |n, eps| norm_squared(&ctx, HarmonicLabel::new(n, eps)).unwrap().value;
        assert_eq!(at(0, 0), rat_int(1));
        assert_eq!(at(1, 0), rat_int(2) * &p.k2);
        assert_eq!(at(2, 0), rat_int(8) * (nk(&p) + rat_int(1)) * &p.k2);

        let pb = params_b();
        let ctxb = HarmonicContext::new(pb.clone(), 4);
        for label in all_labels(3) {
            let cert = norm_squared(&ctxb, label).unwrap();
            assert!(cert.value.is_positive(), "label {:?}", label);
        }

        // Families of equal degree pair to zero against each other.
        let h20 = ctx.build(HarmonicLabel::new(2, 0));
        let h11 = ctx.build(HarmonicLabel::new(1, 1));
        assert!(t_pairing(&h20, &h11, &p).is_zero());
        let h40 = ctx.build(HarmonicLabel::new(4, 0));
        let h31 = ctx.build(HarmonicLabel::new(3, 1));
        assert!(t_pairing(&h40, &h31, &p).is_zero());
    }
}
