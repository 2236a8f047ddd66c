//! Rational Dunkl operators for the hyperoctahedral reflection group.
//!
//! The group acting on `x_1..x_N` is generated by sign changes `x_i -> -x_i`
//! and (signed) coordinate swaps. The operator `T_i` deforms `d/dx_i` by
//! difference quotients against those reflections, weighted by the coupling
//! constants in [`Params`]:
//!
//! ```text
//! T_i f = df/dx_i + k1 (f - s_i f)/x_i
//!       + k sum_{j != i} [ (f - s_ij f)/(x_i - x_j) + (f - t_ij f)/(x_i + x_j) ]
//! ```
//!
//! where `s_i` flips the sign of `x_i`, `s_ij` swaps `x_i, x_j`, and `t_ij`
//! swaps them with both signs flipped. Every difference quotient divides
//! exactly, so the result is again a polynomial. `T_i` lowers degree by one
//! and the family commutes; both facts are exercised in the tests.
//!
//! On even polynomials it is convenient to pass to squared variables
//! `y_i = x_i^2`. [`YPoly`] tags that world to keep it from mixing with
//! ordinary polynomials, and [`dunkl_hat_t`] is the corresponding operator
//! with only the swap terms, at weight `k`. [`dunkl_t_lifted`] reproduces
//! `T_i` on products `x^eps g(y)` (each `eps_i` is 0 or 1) purely from the
//! squared-variable side, which gives an independent route to the same
//! values.

use crate::exactalg::{rat, MultiPoly, Params, Rational};
use num_traits::One;

/// A reflection in the hyperoctahedral group. Indices are zero-based slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reflection {
    /// `x_i -> -x_i`
    Sign(usize),
    /// `x_i <-> x_j`
    Swap(usize, usize),
    /// `x_i -> -x_j`, `x_j -> -x_i`
    SignedSwap(usize, usize),
}

pub fn apply_reflection(r: Reflection, f: &MultiPoly) -> MultiPoly {
    match r {
        Reflection::Sign(i) => f.negate_var(i),
        Reflection::Swap(i, j) => f.swap_vars(i, j),
        Reflection::SignedSwap(i, j) => f.swap_vars(i, j).negate_var(i).negate_var(j),
    }
}

/// Applies `T_i` (zero-based `i`).
pub fn dunkl_t(i: usize, f: &MultiPoly, p: &Params) -> MultiPoly {
    let n = p.nvars;
    assert!(i < n, "operator index out of range");
    assert_eq!(f.nvars(), n, "polynomial arity does not match params");
    let mut out = f.partial_derivative(i);
    // Sign-change term: (f - s_i f)/x_i, always divisible because the
    // numerator is odd in x_i.
    let odd = f - &apply_reflection(Reflection::Sign(i), f);
    out.add_scaled(&odd.div_exact_var(i), &p.k1);
    for j in 0..n {
        if j == i {
            continue;
        }
        let swap = f - &apply_reflection(Reflection::Swap(i, j), f);
        out.add_scaled(&swap.div_exact_diff(i, j), &p.k);
        let signed = f - &apply_reflection(Reflection::SignedSwap(i, j), f);
        out.add_scaled(&signed.div_exact_sum(i, j), &p.k);
    }
    out
}

/// The Laplacian `sum_i T_i^2`, computed by literally applying each `T_i`
/// twice so that it cannot drift from `dunkl_t`.
pub fn laplacian_b(f: &MultiPoly, p: &Params) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars);
    for i in 0..p.nvars {
        out.add_scaled(&dunkl_t(i, &dunkl_t(i, f, p), p), &Rational::one());
    }
    out
}

// ---------------------------------------------------------------------------
// Squared variables
// ---------------------------------------------------------------------------

/// A polynomial in the squared variables: slot `i` holds the exponent of
/// `y_i = x_i^2`. The wrapper exists so squared-variable values cannot be
/// handed to an `x`-world operator by mistake.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YPoly(pub MultiPoly);

impl YPoly {
    pub fn zero(nvars: usize) -> Self {
        YPoly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        YPoly(MultiPoly::one(nvars))
    }

    /// Substitutes `y_i = x_i^2`, doubling every exponent.
    pub fn to_x_poly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.0.nvars());
        for (m, c) in self.0.iter() {
            let exps: Vec<u32> = m.exps.iter().map(|e| 2 * e).collect();
            out.add_term(&exps, c.clone());
        }
        out
    }

    /// Reads an everywhere-even polynomial back into squared variables.
    /// Panics on any odd exponent.
    pub fn from_even_x_poly(f: &MultiPoly) -> Self {
        let mut out = MultiPoly::zero(f.nvars());
        for (m, c) in f.iter() {
            let exps: Vec<u32> = m
                .exps
                .iter()
                .map(|e| {
                    assert!(e % 2 == 0, "polynomial is not even in every variable: {f}");
                    e / 2
                })
                .collect();
            out.add_term(&exps, c.clone());
        }
        YPoly(out)
    }
}

/// The squared-variable operator: `d/dy_i + k sum_{j != i} (1 - (ij))/(y_i - y_j)`.
pub fn dunkl_hat_t(i: usize, g: &YPoly, p: &Params) -> YPoly {
    let n = p.nvars;
    assert!(i < n, "operator index out of range");
    assert_eq!(g.0.nvars(), n, "polynomial arity does not match params");
    let mut out = g.0.partial_derivative(i);
    for j in 0..n {
        if j == i {
            continue;
        }
        let diff = &g.0 - &g.0.swap_vars(i, j);
        out.add_scaled(&diff.div_exact_diff(i, j), &p.k);
    }
    YPoly(out)
}

/// `T_i` applied to `x^eps g(y)` computed entirely on the squared-variable
/// side. `eps` has one 0/1 entry per slot. Two cases:
///
/// - `eps_i = 0`: `2 x_i x^eps (hatT_i g)(x^2)`
/// - `eps_i = 1`: `2 (x^eps / x_i) [ (k1 - 1/2) g + hatT_i(y_i g)
///                 - k sum { (ij) g : eps_j = 1, j != i } ](x^2)`
pub fn dunkl_t_lifted(i: usize, eps: &[u32], g: &YPoly, p: &Params) -> MultiPoly {
    let n = p.nvars;
    assert_eq!(eps.len(), n, "eps has wrong arity");
    assert!(eps.iter().all(|e| *e <= 1), "eps entries must be 0 or 1");
    let two = rat(2, 1);
    if eps[i] == 0 {
        let mut pre = eps.to_vec();
        pre[i] += 1;
        dunkl_hat_t(i, g, p).to_x_poly().mul_term(&pre, &two)
    } else {
        let mut acc = g.0.scale(&(&p.k1 - rat(1, 2)));
        let mut yi = vec![0u32; n];
        yi[i] = 1;
        let shifted = YPoly(g.0.mul_term(&yi, &Rational::one()));
        acc.add_scaled(&dunkl_hat_t(i, &shifted, p).0, &Rational::one());
        for j in 0..n {
            if j != i && eps[j] == 1 {
                acc.add_scaled(&g.0.swap_vars(i, j), &-p.k.clone());
            }
        }
        let mut pre = eps.to_vec();
        pre[i] -= 1;
        YPoly(acc).to_x_poly().mul_term(&pre, &two)
    }
}

/// Builds `x^eps g(x^2)` itself, for comparing the two routes.
pub fn attach_eps(eps: &[u32], g: &YPoly) -> MultiPoly {
    g.to_x_poly().mul_term(eps, &Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat_int, Rational};
    use num_traits::Zero;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn params(n: usize) -> Params {
        Params::new(n, rat(1, 3), rat(1, 2))
    }

    fn x(nv: usize, i: usize) -> MultiPoly {
        MultiPoly::var(nv, i)
    }

    fn random_poly(rng: &mut StdRng, nvars: usize, max_deg: u32, terms: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(nvars);
        for _ in 0..terms {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
            let c = rat(rng.gen_range(-9..=9), rng.gen_range(1..=7));
            p.add_term(&exps, c);
        }
        p
    }

    #[test]
    fn reflections_act_as_substitutions() {
        let n = 3;
        let f = MultiPoly::monomial(n, vec![2, 1, 0], Rational::one());
        assert_eq!(
            apply_reflection(Reflection::Sign(1), &f),
            MultiPoly::monomial(n, vec![2, 1, 0], rat_int(-1))
        );
        assert_eq!(
            apply_reflection(Reflection::Swap(0, 1), &f),
            MultiPoly::monomial(n, vec![1, 2, 0], Rational::one())
        );
        // x1^2 x2 -> (-x2)^2 (-x1) = -x1 x2^2
        assert_eq!(
            apply_reflection(Reflection::SignedSwap(0, 1), &f),
            MultiPoly::monomial(n, vec![1, 2, 0], rat_int(-1))
        );
    }

    #[test]
    fn t_on_x1_gives_twice_k2() {
        for n in [2, 3, 4] {
            let p = params(n);
            let got = dunkl_t(0, &x(n, 0), &p);
            assert_eq!(got, MultiPoly::constant(n, rat(2, 1) * &p.k2));
        }
    }

    #[test]
    fn t2_on_x1x2() {
        // T_2(x1 x2) = 2((N-2)k + k1 + 1/2) x1
        for n in [2, 3, 4] {
            let p = params(n);
            let f = &x(n, 0) * &x(n, 1);
            let scalar = rat(2, 1) * (rat_int(n as i64 - 2) * &p.k + &p.k1 + rat(1, 2));
            assert_eq!(dunkl_t(1, &f, &p), x(n, 0).scale(&scalar));
        }
    }

    #[test]
    fn kills_constants_and_lowers_degree_by_one() {
        let n = 3;
        let p = params(n);
        assert!(dunkl_t(0, &MultiPoly::one(n), &p).is_zero());
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..10 {
            let d = rng.gen_range(1..=5);
            // Random homogeneous input of degree d.
            let mut f = MultiPoly::zero(n);
            for _ in 0..4 {
                let mut exps = vec![0u32; n];
                for _ in 0..d {
                    exps[rng.gen_range(0..n)] += 1;
                }
                f.add_term(&exps, rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)));
            }
            let g = dunkl_t(rng.gen_range(0..n), &f, &p);
            if !g.is_zero() {
                assert_eq!(g.homogeneous_degree(), Some(d - 1));
            }
        }
    }

    #[test]
    fn operators_commute() {
        let n = 3;
        let p = params(n);
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..8 {
            let f = random_poly(&mut rng, n, 4, 5);
            for i in 0..n {
                for j in (i + 1)..n {
                    let a = dunkl_t(i, &dunkl_t(j, &f, &p), &p);
                    let b = dunkl_t(j, &dunkl_t(i, &f, &p), &p);
                    assert_eq!(a, b, "T{} T{} != T{} T{} on {}", i, j, j, i, f);
                }
            }
        }
    }

    #[test]
    fn equivariance_under_reflections() {
        let n = 3;
        let p = params(n);
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..6 {
            let f = random_poly(&mut rng, n, 4, 5);
            // s_12 T_1 s_12 = T_2
            let lhs = apply_reflection(
                Reflection::Swap(0, 1),
                &dunkl_t(0, &apply_reflection(Reflection::Swap(0, 1), &f), &p),
            );
            assert_eq!(lhs, dunkl_t(1, &f, &p));
            // s_1 T_1 s_1 = -T_1
            let lhs = apply_reflection(
                Reflection::Sign(0),
                &dunkl_t(0, &apply_reflection(Reflection::Sign(0), &f), &p),
            );
            assert_eq!(lhs, -&dunkl_t(0, &f, &p));
        }
    }

    #[test]
    fn zero_couplings_reduce_to_derivatives() {
        let n = 3;
        let p = Params::new(n, Rational::zero(), Rational::zero());
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..6 {
            let f = random_poly(&mut rng, n, 5, 6);
            for i in 0..n {
                assert_eq!(dunkl_t(i, &f, &p), f.partial_derivative(i));
            }
        }
    }

    #[test]
    fn hat_t_small_values() {
        let n = 3;
        let p = params(n);
        let y1 = YPoly(x(n, 0));
        // hatT_1 y_1 = 1 + (N-1)k, hatT_2 y_1 = -k
        assert_eq!(
            dunkl_hat_t(0, &y1, &p).0,
            MultiPoly::constant(n, Rational::one() + rat_int(n as i64 - 1) * &p.k)
        );
        assert_eq!(dunkl_hat_t(1, &y1, &p).0, MultiPoly::constant(n, -p.k.clone()));
    }

    #[test]
    fn lift_matches_direct_dunkl() {
        let n = 3;
        let p = params(n);
        let mut rng = StdRng::seed_from_u64(23);
        let eps_patterns: Vec<Vec<u32>> =
            vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![1, 0, 1]];
        for _ in 0..5 {
            let g = YPoly(random_poly(&mut rng, n, 3, 4));
            for eps in &eps_patterns {
                let f = attach_eps(eps, &g);
                for i in 0..n {
                    assert_eq!(
                        dunkl_t_lifted(i, eps, &g, &p),
                        dunkl_t(i, &f, &p),
                        "lift mismatch at i={i}, eps={eps:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn lift_example_even_square() {
        // T_1(x_1^2) = 2 x_1 hatT_1(y_1)(x^2) = 2(1 + (N-1)k) x_1
        let n = 3;
        let p = params(n);
        let g = YPoly(x(n, 0));
        let got = dunkl_t_lifted(0, &[0, 0, 0], &g, &p);
        let scalar = rat(2, 1) * (Rational::one() + rat_int(2) * &p.k);
        assert_eq!(got, x(n, 0).scale(&scalar));
    }

    #[test]
    fn laplacian_of_squared_norm_is_constant() {
        let n = 4;
        let p = params(n);
        let mut r2 = MultiPoly::zero(n);
        for i in 0..n {
            r2.add_scaled(&x(n, i).pow(2), &Rational::one());
        }
        // 4 N k2, a useful pinned constant.
        let expected = MultiPoly::constant(n, rat(4, 1) * rat_int(n as i64) * &p.k2);
        assert_eq!(laplacian_b(&r2, &p), expected);
    }
}
