//! The inhomogeneous `p` basis for squared-variable polynomials.
//!
//! `p_n(y_i; y)` is the coefficient of `r^n` in
//! `(1 - r y_i)^{-1} prod_j (1 - r y_j)^{-k}`, and `p_alpha` is the product
//! over slots of `p_{alpha_i}(y_i; y)`. The basis diagonalizes the
//! squared-variable operators one slot at a time: `hatT_j` kills
//! `p_n(y_i; y)` for `j != i`, and on a full product it acts by an explicit
//! expansion ([`hat_t_on_p_alpha`]) whose terms are again `p` products.
//!
//! Sending `p_alpha` to the monomial `p_1^{alpha_1} ... p_N^{alpha_N}`
//! identifies the basis with ordinary polynomials in formal variables
//! `p_1..p_N` ([`PPoly`]); under that identification `hatT_i` becomes the
//! formal operator [`hat_t_formal`] built from substitutions and divided
//! differences, and [`delta12`] is the two-variable divided difference that
//! drives the generating-function recurrences.

use crate::dunkl::YPoly;
use crate::exactalg::{rat_int, MultiPoly, Params, Rational};
use num_traits::One;
use std::collections::BTreeMap;

/// Exponent list `alpha`, one entry per slot.
pub type Composition = Vec<u32>;

/// A polynomial in the formal variables `p_1..p_N` (slot `i` means `p_i`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PPoly(pub MultiPoly);

/// Coefficients of `r^0..r^order` in `prod_j (1 - r y_j)^{-k}`.
fn resolvent_product(order: u32, p: &Params) -> Vec<MultiPoly> {
    let n = p.nvars;
    let mut acc: Vec<MultiPoly> = vec![MultiPoly::zero(n); order as usize + 1];
    acc[0] = MultiPoly::one(n);
    for j in 0..n {
        // One factor: sum_l (k)_l / l! (y_j r)^l, truncated.
        let mut factor: Vec<Rational> = Vec::with_capacity(order as usize + 1);
        let mut c = Rational::one();
        factor.push(c.clone());
        for l in 1..=order as i64 {
            c = c * (&p.k + rat_int(l - 1)) / rat_int(l);
            factor.push(c.clone());
        }
        let mut next = vec![MultiPoly::zero(n); order as usize + 1];
        for (m, coef) in acc.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (l, fc) in factor.iter().enumerate() {
                if m + l > order as usize {
                    break;
                }
                let mut exps = vec![0u32; n];
                exps[j] = l as u32;
                next[m + l].add_scaled(&coef.mul_term(&exps, fc), &Rational::one());
            }
        }
        acc = next;
    }
    acc
}

/// `p_n(y_i; y)`.
pub fn p_n(n: u32, i: usize, p: &Params) -> YPoly {
    assert!(i < p.nvars, "slot out of range");
    let prod = resolvent_product(n, p);
    let mut out = MultiPoly::zero(p.nvars);
    for (m, coef) in prod.iter().enumerate() {
        let mut exps = vec![0u32; p.nvars];
        exps[i] = n - m as u32;
        out.add_scaled(&coef.mul_term(&exps, &Rational::one()), &Rational::one());
    }
    YPoly(out)
}

/// `p_alpha = prod_i p_{alpha_i}(y_i; y)`. Zero entries contribute `p_0 = 1`.
pub fn p_alpha(alpha: &[u32], p: &Params) -> YPoly {
    assert_eq!(alpha.len(), p.nvars, "composition has wrong arity");
    let mut acc = MultiPoly::one(p.nvars);
    for (i, &a) in alpha.iter().enumerate() {
        if a > 0 {
            acc = &acc * &p_n(a, i, p).0;
        }
    }
    YPoly(acc)
}

/// `hatT_i p_alpha` as an unmerged list of `(scalar, composition)` terms;
/// each composition stands for its `p_alpha` product. Empty when
/// `alpha_i = 0`, since `hatT_i` kills such products. Otherwise:
///
/// ```text
/// (N k + alpha_i) p_{alpha - e_i}
///   + k sum_{j != i} sum_{m=0}^{alpha_j - 1} ( p at (i -> a_i+a_j-1-m, j -> m)
///                                            - p at (i -> m, j -> a_i+a_j-1-m) )
/// ```
pub fn hat_t_on_p_alpha(i: usize, alpha: &[u32], p: &Params) -> Vec<(Rational, Composition)> {
    assert_eq!(alpha.len(), p.nvars, "composition has wrong arity");
    assert!(i < p.nvars, "slot out of range");
    let mut out = Vec::new();
    let ai = alpha[i];
    if ai == 0 {
        return out;
    }
    let lead = rat_int(p.nvars as i64) * &p.k + rat_int(ai as i64);
    let mut lowered = alpha.to_vec();
    lowered[i] = ai - 1;
    out.push((lead, lowered));
    for j in 0..p.nvars {
        if j == i {
            continue;
        }
        for m in 0..alpha[j] {
            let split = ai + alpha[j] - 1 - m;
            let mut plus = alpha.to_vec();
            plus[i] = split;
            plus[j] = m;
            out.push((p.k.clone(), plus));
            let mut minus = alpha.to_vec();
            minus[i] = m;
            minus[j] = split;
            out.push((-p.k.clone(), minus));
        }
    }
    out
}

/// Materializes a `(scalar, composition)` list back into squared variables.
pub fn expand_combination(terms: &[(Rational, Composition)], p: &Params) -> YPoly {
    let mut acc = MultiPoly::zero(p.nvars);
    for (c, alpha) in terms {
        acc.add_scaled(&p_alpha(alpha, p).0, c);
    }
    YPoly(acc)
}

// ---------------------------------------------------------------------------
// The formal isomorphism
// ---------------------------------------------------------------------------

/// Coefficients of a polynomial written in the `p_alpha` basis.
pub type PBasisExpansion = BTreeMap<Composition, Rational>;

/// Sends each `p_alpha` coordinate to the monomial `p^alpha`.
pub fn psi_map(coords: &PBasisExpansion, nvars: usize) -> PPoly {
    let mut out = MultiPoly::zero(nvars);
    for (alpha, c) in coords {
        assert_eq!(alpha.len(), nvars, "composition has wrong arity");
        out.add_term(alpha, c.clone());
    }
    PPoly(out)
}

/// Reads a formal polynomial back as `p_alpha` coordinates.
pub fn psi_inverse(f: &PPoly) -> PBasisExpansion {
    let mut out = PBasisExpansion::new();
    for (m, c) in f.0.iter() {
        out.insert(m.exps.clone(), c.clone());
    }
    out
}

/// Pulls a formal polynomial all the way back to squared variables by
/// expanding each recovered `p_alpha`.
pub fn psi_inverse_expand(f: &PPoly, p: &Params) -> YPoly {
    let mut acc = MultiPoly::zero(p.nvars);
    for (m, c) in f.0.iter() {
        acc.add_scaled(&p_alpha(&m.exps, p).0, c);
    }
    YPoly(acc)
}

/// The transport of `hatT_i` across the isomorphism:
///
/// ```text
/// d/dp_i + N k (1 - eta_i)/p_i
///        + k sum_{j != i} (xi_ij + xi_ji - 1 - (ij)) / (p_i - p_j)
/// ```
///
/// with `eta_i` the substitution `p_i -> 0`, `xi_ij` the substitution
/// `p_j -> p_i`, and `(ij)` the swap. Each quotient divides exactly.
pub fn hat_t_formal(i: usize, f: &PPoly, p: &Params) -> PPoly {
    let n = p.nvars;
    assert!(i < n, "slot out of range");
    assert_eq!(f.0.nvars(), n, "polynomial arity does not match params");
    let mut out = f.0.partial_derivative(i);
    let vanish = &f.0 - &f.0.set_var_zero(i);
    let nk = rat_int(n as i64) * &p.k;
    out.add_scaled(&vanish.div_exact_var(i), &nk);
    for j in 0..n {
        if j == i {
            continue;
        }
        out.add_scaled(&divided_difference_core(&f.0, i, j), &p.k);
    }
    PPoly(out)
}

// (xi_ij f + xi_ji f - f - (ij) f) / (p_i - p_j)
fn divided_difference_core(f: &MultiPoly, i: usize, j: usize) -> MultiPoly {
    let mut num = f.merge_var(i, j); // p_j -> p_i
    num.add_scaled(&f.merge_var(j, i), &Rational::one()); // p_i -> p_j
    num.add_scaled(f, &-Rational::one());
    num.add_scaled(&f.swap_vars(i, j), &-Rational::one());
    num.div_exact_diff(i, j)
}

/// Two-variable divided difference on the first two slots:
/// `(f(p1,p1) + f(p2,p2) - f(p1,p2) - f(p2,p1)) / (p1 - p2)`.
pub fn delta12(f: &PPoly) -> PPoly {
    PPoly(divided_difference_core(&f.0, 0, 1))
}
