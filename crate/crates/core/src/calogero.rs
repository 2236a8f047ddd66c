//! Confined many-body Hamiltonian with harmonic-times-Laguerre
//! eigenfunctions, and permutation-invariant sums of harmonics.
//!
//! The singular Hamiltonian itself is never applied. Conjugating by the
//! ground state leaves `2 omega (sum_i x_i d/dx_i + N k2) - Delta_B`, which
//! maps polynomials to polynomials, and the products
//! `L_n^{(c)}(omega |x|^2) h_m(x)` with `c = m + N k2 - 1` are exact
//! eigenfunctions with eigenvalue `2 omega (m + 2n + N k2)`. Everything is
//! verified by literal operator application, no spectra are approximated.
//!
//! A harmonic that is symmetric in its first two slots and in the rest can
//! be spread over every slot pair and summed; the sum is fixed by all
//! variable permutations and, for the families even in each variable, by
//! the full reflection group.

use crate::dunkl::laplacian_b;
use crate::exactalg::{rat_int, MultiPoly, Params, Rational};
use crate::harmonic::{HarmonicContext, HarmonicLabel};
use crate::special::pochhammer;
use num_traits::{One, Signed};

/// Couplings plus the confinement frequency.
#[derive(Clone, Debug)]
pub struct CalogeroParams {
    pub params: Params,
    pub omega: Rational,
}

impl CalogeroParams {
    pub fn new(params: Params, omega: Rational) -> Self {
        assert!(omega.is_positive(), "frequency must be positive");
        CalogeroParams { params, omega }
    }

    /// `N k2`, the ground-state degree constant that shifts every
    /// eigenvalue and Laguerre index.
    pub fn nk2(&self) -> Rational {
        rat_int(self.params.nvars as i64) * &self.params.k2
    }
}

/// Names one eigenfunction: harmonic factor degree `m`, radial degree `n`,
/// and the coupled Laguerre index `c = m + N k2 - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenLabel {
    pub m: u32,
    pub n: u32,
    pub c: Rational,
}

impl EigenLabel {
    pub fn new(m: u32, n: u32, cp: &CalogeroParams) -> Self {
        let c = rat_int(m as i64) + cp.nk2() - rat_int(1);
        EigenLabel { m, n, c }
    }

    /// `2 omega (m + 2n + N k2)`.
    pub fn eigenvalue(&self, cp: &CalogeroParams) -> Rational {
        rat_int(2) * &cp.omega * (rat_int(self.m as i64 + 2 * self.n as i64) + cp.nk2())
    }
}

/// Coefficient list of the degree-`n` Laguerre polynomial with index `c`:
/// entry `i` multiplies `t^i`, and the whole list is
/// `((c+1)_n / n!) * (-n)_i / ((c+1)_i i!)`.
pub fn laguerre_coeffs(n: u32, c: &Rational) -> Vec<Rational> {
    let c1 = c + rat_int(1);
    let scale = pochhammer(&c1, n) / pochhammer(&Rational::one(), n);
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut term = Rational::one();
    for i in 0..=n {
        out.push(&scale * &term);
        // (-n + i) / ((c + 1 + i)(i + 1)) advances the ratio one slot.
        term = term * (rat_int(i as i64) - rat_int(n as i64))
            / ((&c1 + rat_int(i as i64)) * rat_int(i as i64 + 1));
    }
    out
}

/// `2 omega (sum_i x_i d_i f + N k2 f) - Delta_B f`, the ground-state
/// conjugate of the Hamiltonian.
pub fn conjugated_hamiltonian(f: &MultiPoly, cp: &CalogeroParams) -> MultiPoly {
    let nvars = f.nvars();
    let mut euler = MultiPoly::zero(nvars);
    for i in 0..nvars {
        let mut lift = vec![0u32; nvars];
        lift[i] = 1;
        euler = euler + f.partial_derivative(i).mul_term(&lift, &Rational::one());
    }
    let mut acc = MultiPoly::zero(nvars);
    let two_omega = rat_int(2) * &cp.omega;
    acc.add_scaled(&euler, &two_omega);
    acc.add_scaled(f, &(&two_omega * cp.nk2()));
    acc.add_scaled(&laplacian_b(f, &cp.params), &-Rational::one());
    acc
}

/// `sum_i x_i^2` in `nvars` variables.
pub fn radius_squared(nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for i in 0..nvars {
        let mut exps = vec![0u32; nvars];
        exps[i] = 2;
        out.add_term(&exps, Rational::one());
    }
    out
}

/// The polynomial part `L_n^{(c)}(omega |x|^2) h(x)` of the eigenfunction
/// attached to `label` and radial degree `n`.
pub fn eigenfunction(
    ctx: &HarmonicContext,
    label: HarmonicLabel,
    n: u32,
    cp: &CalogeroParams,
) -> MultiPoly {
    let h = ctx.build(label);
    let eig = EigenLabel::new(label.degree(), n, cp);
    let coeffs = laguerre_coeffs(n, &eig.c);
    let r2 = radius_squared(cp.params.nvars);
    let mut radial = MultiPoly::zero(cp.params.nvars);
    let mut power = MultiPoly::one(cp.params.nvars);
    let mut omega_pow = Rational::one();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            power = power * r2.clone();
            omega_pow *= &cp.omega;
        }
        radial.add_scaled(&power, &(c * &omega_pow));
    }
    radial * h
}

/// Transports a polynomial whose first two slots are distinguished onto the
/// slot pair `(a, b)`: slot 0 goes to `a`, slot 1 to `b`, and the remaining
/// slots keep their relative order.
pub fn pair_translate(f: &MultiPoly, a: usize, b: usize) -> MultiPoly {
    let nvars = f.nvars();
    assert!(a < b && b < nvars, "need slots a < b inside the variable range");
    let mut perm = vec![usize::MAX; nvars];
    perm[a] = 0;
    perm[b] = 1;
    let mut next = 2;
    for slot in perm.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    f.permute_vars(&perm)
}

/// Sums the translates of `h_{n,0}` (`n` even) over every slot pair. The
/// summand is fixed by the stabilizer of the first two slots, so the sum
/// runs over one representative per coset and the result is fixed by every
/// variable permutation; the families even in each variable are then fixed
/// by the whole reflection group. Harmonicity survives because the
/// Laplacian commutes with the group action.
pub fn invariantize(ctx: &HarmonicContext, label: HarmonicLabel) -> MultiPoly {
    assert_eq!(label.eps, 0, "only the plain families spread over slot pairs");
    assert_eq!(label.n % 2, 0, "odd families are not stabilizer-invariant");
    let nvars = ctx.params().nvars;
    assert!(nvars >= 3, "fewer than three slots leave nothing to spread");
    let h = ctx.build(label);
    let mut acc = MultiPoly::zero(nvars);
    for a in 0..nvars {
        for b in (a + 1)..nvars {
            acc = acc + pair_translate(&h, a, b);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dunkl::dunkl_t;
    use crate::exactalg::rat;

    fn cp_a() -> CalogeroParams {
        CalogeroParams::new(Params::new(3, rat(1, 3), rat(1, 2)), rat(2, 3))
    }

    fn cp_b() -> CalogeroParams {
        CalogeroParams::new(Params::new(4, rat(2, 5), rat(3, 7)), rat(5, 4))
    }

    #[test]
    fn laguerre_pinned_degrees() {
        let c = rat(3, 7);
        assert_eq!(laguerre_coeffs(0, &c), vec![rat_int(1)]);
        let c1 = &c + rat_int(1);
        assert_eq!(laguerre_coeffs(1, &c), vec![c1.clone(), rat_int(-1)]);
        let c2 = &c + rat_int(2);
        assert_eq!(
            laguerre_coeffs(2, &c),
            vec![&c1 * &c2 / rat_int(2), -&c2, rat(1, 2)]
        );
    }

    #[test]
    fn conjugated_hamiltonian_pinned() {
        let cp = cp_a();
        let nv = cp.params.nvars;
        let two_omega = rat_int(2) * &cp.omega;

        let one = MultiPoly::one(nv);
        let want = MultiPoly::constant(nv, &two_omega * cp.nk2());
        assert_eq!(conjugated_hamiltonian(&one, &cp), want);

        let x1 = MultiPoly::var(nv, 0);
        let mut want = MultiPoly::zero(nv);
        want.add_scaled(&x1, &(&two_omega * (rat_int(1) + cp.nk2())));
        assert_eq!(conjugated_hamiltonian(&x1, &cp), want);

        // On |x|^2 the operator adds a constant: the Laplacian of |x|^2.
        let r2 = radius_squared(nv);
        let mut want = MultiPoly::constant(nv, -rat_int(4) * cp.nk2());
        want.add_scaled(&r2, &(&two_omega * (rat_int(2) + cp.nk2())));
        assert_eq!(conjugated_hamiltonian(&r2, &cp), want);
    }

    #[test]
    fn eigen_relation_holds_exactly() {
        for cp in [cp_a(), cp_b()] {
            let ctx = HarmonicContext::new(cp.params.clone(), 4);
            for label_n in 0..=3u32 {
                for eps in 0..=1u8 {
                    let label = HarmonicLabel::new(label_n, eps);
                    for n in 0..=2u32 {
                        let u = eigenfunction(&ctx, label, n, &cp);
                        let eig = EigenLabel::new(label.degree(), n, &cp);
                        let mut want = MultiPoly::zero(cp.params.nvars);
                        want.add_scaled(&u, &eig.eigenvalue(&cp));
                        assert_eq!(
                            conjugated_hamiltonian(&u, &cp),
                            want,
                            "label {:?} radial {}",
                            label,
                            n
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn perturbed_laguerre_index_breaks_the_relation() {
        let cp = cp_a();
        let ctx = HarmonicContext::new(cp.params.clone(), 2);
        let label = HarmonicLabel::new(1, 0);
        let eig = EigenLabel::new(label.degree(), 1, &cp);
        let wrong = EigenLabel {
            c: &eig.c + rat_int(1),
            ..eig.clone()
        };
        let h = ctx.build(label);
        let coeffs = laguerre_coeffs(wrong.n, &wrong.c);
        let r2 = radius_squared(cp.params.nvars);
        let mut radial = MultiPoly::constant(cp.params.nvars, coeffs[0].clone());
        radial.add_scaled(&r2, &(&coeffs[1] * &cp.omega));
        let u = radial * h;
        let mut want = MultiPoly::zero(cp.params.nvars);
        want.add_scaled(&u, &wrong.eigenvalue(&cp));
        assert_ne!(conjugated_hamiltonian(&u, &cp), want);
    }

    #[test]
    fn pair_translate_remaps_slots() {
        // x1^2 x2 + x3 moved to the pair (2, 3) of four slots.
        let mut f = MultiPoly::zero(4);
        f.add_term(&[2, 1, 0, 0], rat_int(1));
        f.add_term(&[0, 0, 1, 0], rat_int(1));
        let moved = pair_translate(&f, 1, 2);
        let mut want = MultiPoly::zero(4);
        want.add_term(&[0, 2, 1, 0], rat_int(1));
        want.add_term(&[1, 0, 0, 0], rat_int(1));
        assert_eq!(moved, want);
        // The identity pair leaves the polynomial alone.
        assert_eq!(pair_translate(&f, 0, 1), f);
    }

    #[test]
    fn invariant_sum_is_symmetric_and_harmonic() {
        // The coupling-free case once exposed a missing group of translates:
        // the pair sum must cover all slot pairs, not just those through
        // the first slot.
        let zero_k = CalogeroParams::new(Params::new(3, rat_int(0), rat_int(0)), rat_int(1));
        let generic = cp_a();
        for cp in [zero_k, generic] {
            let ctx = HarmonicContext::new(cp.params.clone(), 4);
            for label_n in [0u32, 2, 4] {
                let label = HarmonicLabel::new(label_n, 0);
                let inv = invariantize(&ctx, label);
                assert!(laplacian_b(&inv, &cp.params).is_zero(), "label {:?}", label);
                if label_n % 4 == 0 {
                    for i in 0..cp.params.nvars {
                        for j in (i + 1)..cp.params.nvars {
                            assert_eq!(inv.swap_vars(i, j), inv, "swap {} {}", i, j);
                        }
                        assert_eq!(inv.negate_var(i), inv, "sign change {}", i);
                    }
                }
            }
        }
    }

    #[test]
    fn invariant_sum_counts_cosets() {
        // One translate per slot pair: the constant harmonic counts them.
        let cp = cp_a();
        let ctx = HarmonicContext::new(cp.params.clone(), 2);
        let inv = invariantize(&ctx, HarmonicLabel::new(0, 0));
        assert_eq!(inv, MultiPoly::constant(3, rat_int(3)));
    }

    #[test]
    fn translates_stay_harmonic_and_annihilated_outside_their_pair() {
        let p = Params::new(4, rat(1, 3), rat(1, 2));
        let ctx = HarmonicContext::new(p.clone(), 4);
        let h = ctx.build(HarmonicLabel::new(4, 0));
        let moved = pair_translate(&h, 1, 3);
        assert!(laplacian_b(&moved, &p).is_zero());
        // The translate is annihilated by the operators of the slots its
        // source did not use, after the move: slots 0 and 2.
        assert!(dunkl_t(0, &moved, &p).is_zero());
        assert!(dunkl_t(2, &moved, &p).is_zero());
    }
}
