//! Harmonic polynomials `h_{n,eps}` for the two-parameter Laplacian.
//!
//! Labels carry the exponent pair of the leading term `x1^n x2^eps`. The
//! residue of `n` mod 4 together with `eps` picks one of eight construction
//! recipes: six are explicit coefficient sums over a `phi` or `psi` table
//! row (with an `x1 x2` prefactor for two of them), and the remaining two
//! are defined by swapping the first two variables in a neighbor family.
//! All coefficients are ratios of shifted Pochhammer products and are
//! generated by a running one-term recurrence.
//!
//! [`ladder`] encodes how the first two Dunkl operators move between the
//! families: eight source rows are explicit, and the other eight follow by
//! conjugation with the swap of the first two variables. The `map_*`
//! functions express the same operator actions as maps on dense coefficient
//! lists over the table's second index, which lets the ladder be verified
//! slot by slot without building a single polynomial.

use crate::exactalg::{rat, rat_int, MultiPoly, Params, Rational};
use crate::planar::{BasisKind, SeriesTable};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

/// Names `h_{n,eps}`: `n` is the leading power of `x1`, `eps` that of `x2`.
/// The polynomial is homogeneous of degree `n + eps`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct HarmonicLabel {
    pub n: u32,
    pub eps: u8,
}

impl HarmonicLabel {
    pub fn new(n: u32, eps: u8) -> Self {
        assert!(eps <= 1, "eps must be 0 or 1");
        HarmonicLabel { n, eps }
    }

    pub fn degree(&self) -> u32 {
        self.n + self.eps as u32
    }

    /// Index of the family instance inside its residue class.
    pub fn class_index(&self) -> u32 {
        self.n / 4
    }

    /// `n` mod 4, the selector for the construction recipe.
    pub fn residue(&self) -> u8 {
        (self.n % 4) as u8
    }
}

/// Dense description of a harmonic as a coefficient list over one table
/// row: the polynomial is `(x1 x2)^pre * sum_i coeffs[i] * entry(order, i)`.
/// The two swap-defined families have no such form.
#[derive(Clone, Debug)]
pub struct CoeffForm {
    pub table: BasisKind,
    pub order: u32,
    pub x1x2_prefactor: bool,
    pub coeffs: Vec<Rational>,
}

fn half() -> Rational {
    rat(1, 2)
}

/// `out[j] = prod_{l=1}^{j} (a+l-1)(l-1/2) / ((b+l-1)(c+l-1))` for
/// `j = 0..=count`.
fn running_list(a: &Rational, b: &Rational, c: &Rational, count: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count as usize + 1);
    out.push(Rational::one());
    for j in 1..=count as i64 {
        let prev = out.last().unwrap();
        let num = (a + rat_int(j - 1)) * (rat_int(j) - half());
        let den = (b + rat_int(j - 1)) * (c + rat_int(j - 1));
        out.push(prev * num / den);
    }
    out
}

/// Spreads `vals[j]` onto even slots `2j` of a dense list of length `len`.
fn spread_even(vals: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (j, v) in vals.iter().enumerate() {
        out[2 * j] = v.clone();
    }
    out
}

/// The coefficient form of a label, if it has one (the swap-defined
/// families with `n = 0, 2 mod 4` and `eps = 1` do not).
pub fn coeff_form(label: HarmonicLabel, p: &Params) -> Option<CoeffForm> {
    let n = label.class_index() as i64;
    let nm1k = rat_int(p.nvars as i64 - 1) * &p.k;
    let nk = rat_int(p.nvars as i64) * &p.k;
    let k2 = &p.k2;
    let form = match (label.residue(), label.eps) {
        (0, 0) => {
            let a = &nm1k + k2 + rat_int(2 * n);
            let b = k2 + rat_int(n);
            let c = &nk + rat_int(n + 1);
            let vals = running_list(&a, &b, &c, n as u32);
            CoeffForm {
                table: BasisKind::Phi,
                order: 2 * n as u32,
                x1x2_prefactor: false,
                coeffs: spread_even(&vals, 2 * n as usize + 1),
            }
        }
        (2, 0) => {
            let a = &nm1k + k2 + rat_int(2 * n + 1);
            let b = k2 + rat_int(n + 1);
            let c = &nk + rat_int(n + 2);
            let vals = running_list(&a, &b, &c, n as u32);
            CoeffForm {
                table: BasisKind::Phi,
                order: 2 * n as u32 + 1,
                x1x2_prefactor: false,
                coeffs: spread_even(&vals, 2 * n as usize + 2),
            }
        }
        (1, 1) => {
            let a = &nm1k + k2 + rat_int(2 * n + 1);
            let b = k2 + rat_int(n + 1);
            let c = &nk + rat_int(n + 1);
            let vals = running_list(&a, &b, &c, n as u32);
            CoeffForm {
                table: BasisKind::Phi,
                order: 2 * n as u32,
                x1x2_prefactor: true,
                coeffs: spread_even(&vals, 2 * n as usize + 1),
            }
        }
        (3, 1) => {
            let a = &nm1k + k2 + rat_int(2 * n + 2);
            let b = k2 + rat_int(n + 2);
            let c = &nk + rat_int(n + 2);
            let vals = running_list(&a, &b, &c, n as u32);
            CoeffForm {
                table: BasisKind::Phi,
                order: 2 * n as u32 + 1,
                x1x2_prefactor: true,
                coeffs: spread_even(&vals, 2 * n as usize + 2),
            }
        }
        (1, 0) => {
            // Even slots carry the same list as the x1 x2 family one degree
            // up; odd slots interleave a shifted companion list.
            let a = &nm1k + k2 + rat_int(2 * n + 1);
            let b = k2 + rat_int(n + 1);
            let c = &nk + rat_int(n + 1);
            let evens = running_list(&a, &b, &c, n as u32);
            let mut coeffs = spread_even(&evens, 2 * n as usize + 1);
            for j in 1..=n {
                let v = &evens[j as usize - 1] * (rat_int(j) - half()) / (&c + rat_int(j - 1));
                coeffs[2 * j as usize - 1] = v;
            }
            CoeffForm {
                table: BasisKind::Psi,
                order: 2 * n as u32,
                x1x2_prefactor: false,
                coeffs,
            }
        }
        (3, 0) => {
            let a = &nm1k + k2 + rat_int(2 * n + 2);
            let b = k2 + rat_int(n + 1);
            let c = &nk + rat_int(n + 2);
            let evens = running_list(&a, &b, &c, n as u32);
            let mut coeffs = spread_even(&evens, 2 * n as usize + 2);
            for j in 1..=n + 1 {
                let v = &evens[j as usize - 1] * (rat_int(j) - half()) / (&b + rat_int(j - 1));
                coeffs[2 * j as usize - 1] = v;
            }
            CoeffForm {
                table: BasisKind::Psi,
                order: 2 * n as u32 + 1,
                x1x2_prefactor: false,
                coeffs,
            }
        }
        _ => return None,
    };
    Some(form)
}

/// Image of `h_label` under swapping the first two variables, as
/// `(target, sign)`: the swap sends `h_label` to `sign * h_target`.
pub fn sigma12_image(label: HarmonicLabel) -> (HarmonicLabel, i8) {
    match (label.residue(), label.eps) {
        (0, 0) | (1, 1) => (label, 1),
        (2, 0) | (3, 1) => (label, -1),
        (1, 0) | (3, 0) => (HarmonicLabel::new(label.n - 1, 1), 1),
        (0, 1) | (2, 1) => (HarmonicLabel::new(label.n + 1, 0), 1),
        _ => unreachable!(),
    }
}

/// One step of the operator ladder: `T_op h_label = scalar * h_target`, or
/// zero when the target degree would be negative. `op` is 0 for the first
/// variable's operator, 1 for the second's.
pub fn ladder(op: usize, label: HarmonicLabel, p: &Params) -> Option<(Rational, HarmonicLabel)> {
    assert!(op < 2, "only the first two operators move along the ladder");
    if let Some(step) = direct_ladder(op, label, p) {
        return step;
    }
    // Conjugate by the swap of the first two variables.
    let (src, s1) = sigma12_image(label);
    let step = direct_ladder(1 - op, src, p)
        .expect("swap image must have a direct rule for the other operator");
    step.map(|(c, mid)| {
        let (tgt, s2) = sigma12_image(mid);
        (c * rat_int(s1 as i64 * s2 as i64), tgt)
    })
}

/// The eight explicit rows. Outer `None` means "not a direct row"; inner
/// `None` means the row applies and the result is zero.
#[allow(clippy::type_complexity)]
fn direct_ladder(
    op: usize,
    label: HarmonicLabel,
    p: &Params,
) -> Option<Option<(Rational, HarmonicLabel)>> {
    let m = label.class_index() as i64;
    let nm1k = rat_int(p.nvars as i64 - 1) * &p.k;
    let nk = rat_int(p.nvars as i64) * &p.k;
    let k2 = &p.k2;
    let two = rat_int(2);
    let step = match (op, label.residue(), label.eps) {
        (0, 0, 0) => {
            if label.n == 0 {
                None
            } else {
                Some((&two * (&nm1k + rat_int(m)), HarmonicLabel::new(label.n - 1, 0)))
            }
        }
        (0, 3, 0) => Some((
            -&two * (k2 - &p.k + rat_int(m)),
            HarmonicLabel::new(label.n - 1, 0),
        )),
        (0, 2, 0) => Some((&two * (&nk + rat_int(m + 1)), HarmonicLabel::new(label.n - 1, 0))),
        (0, 1, 0) => Some((&two * (k2 + rat_int(m)), HarmonicLabel::new(label.n - 1, 0))),
        (1, 3, 0) => Some((&two * (&nk + rat_int(m + 1)), HarmonicLabel::new(label.n - 2, 1))),
        (1, 1, 1) => Some((&two * (k2 - &p.k + rat_int(m)), HarmonicLabel::new(label.n, 0))),
        (1, 1, 0) => {
            if label.n == 1 {
                None
            } else {
                Some((&two * (&nm1k + rat_int(m)), HarmonicLabel::new(label.n - 2, 1)))
            }
        }
        (1, 3, 1) => Some((-&two * (k2 + rat_int(m + 1)), HarmonicLabel::new(label.n, 0))),
        _ => return None,
    };
    Some(step)
}

/// `T_1` on a `phi` row list: input over `phi_{m, .}`, output over
/// `psi_{m-1, .}`.
pub fn map_t1_phi(c: &[Rational], m: u32, p: &Params) -> Vec<Rational> {
    assert_eq!(c.len(), m as usize + 1);
    let nk2 = rat_int(2 * p.nvars as i64) * &p.k;
    let nm1k2 = rat_int(2 * (p.nvars as i64 - 1)) * &p.k;
    let mm = m as i64;
    (0..m as i64)
        .map(|i| {
            let mut v = Rational::zero();
            if (mm + i) % 2 == 0 {
                v = v + (&nm1k2 + rat_int(mm)) * at(c, i);
                v = v + rat_int(i) * at(c, i - 1);
            } else {
                v = v + (&nk2 + rat_int(mm + i + 1)) * (at(c, i) + at(c, i + 1));
                v = v - rat_int(i) * at(c, i - 1);
            }
            v
        })
        .collect()
}

/// `T_1` on a `psi` row list: input over `psi_{m, .}`, output over
/// `phi_{m, .}`.
pub fn map_t1_psi(c: &[Rational], m: u32, p: &Params) -> Vec<Rational> {
    assert_eq!(c.len(), m as usize + 1);
    let two_k2 = rat_int(2) * &p.k2;
    let two_k = rat_int(2) * &p.k;
    let mm = m as i64;
    (0..=mm)
        .map(|i| {
            let mut v = Rational::zero();
            if (mm + i) % 2 == 0 {
                v = v + (&two_k2 + rat_int(mm + i)) * at(c, i);
                v = v - rat_int(i) * at(c, i - 1);
            } else {
                v = v + (&two_k2 + rat_int(mm + i + 1)) * at(c, i + 1);
                v = v - (&two_k2 - &two_k + rat_int(mm)) * at(c, i);
                v = v - rat_int(i) * at(c, i - 1);
            }
            v
        })
        .collect()
}

/// `T_2` on a `psi` row list: input over `psi_{m, .}`, output over
/// `x1 x2 phi_{m-1, .}`.
pub fn map_t2_psi(c: &[Rational], m: u32, p: &Params) -> Vec<Rational> {
    assert_eq!(c.len(), m as usize + 1);
    let nk2 = rat_int(2 * p.nvars as i64) * &p.k;
    let nm1k2 = rat_int(2 * (p.nvars as i64 - 1)) * &p.k;
    let mm = m as i64;
    (0..mm)
        .map(|i| {
            let mut v = Rational::zero();
            if (mm + i) % 2 == 0 {
                v = v + (&nm1k2 + rat_int(mm + 1)) * at(c, i);
                v = v - (&nk2 + rat_int(mm + i + 2)) * at(c, i + 1);
                v = v + rat_int(i) * at(c, i - 1);
            } else {
                v = v + (&nk2 + rat_int(mm + i + 1)) * at(c, i);
                v = v - rat_int(i) * at(c, i - 1);
            }
            v
        })
        .collect()
}

/// `T_2` on an `x1 x2 phi` row list: input over `x1 x2 phi_{m, .}`, output
/// over `psi_{m, .}`.
pub fn map_t2_x1x2_phi(c: &[Rational], m: u32, p: &Params) -> Vec<Rational> {
    assert_eq!(c.len(), m as usize + 1);
    let two_k2 = rat_int(2) * &p.k2;
    let two_k = rat_int(2) * &p.k;
    let mm = m as i64;
    (0..=mm)
        .map(|i| {
            let mut v = Rational::zero();
            if (mm + i) % 2 == 0 {
                v = v + (&two_k2 - &two_k + rat_int(mm)) * at(c, i);
                v = v - rat_int(i) * at(c, i - 1);
            } else {
                v = v + (&two_k2 + rat_int(mm + i + 1)) * (at(c, i + 1) - at(c, i));
                v = v - rat_int(i) * at(c, i - 1);
            }
            v
        })
        .collect()
}

fn at(c: &[Rational], i: i64) -> Rational {
    if i < 0 || i as usize >= c.len() {
        Rational::zero()
    } else {
        c[i as usize].clone()
    }
}

/// Runs the coefficient-map route for one explicit ladder row and compares
/// it slot by slot against the scalar times the target family's list, or
/// against the zero list when the step degenerates. `op` selects the first
/// (0) or second (1) Dunkl operator; only the eight rows with an explicit
/// rule are accepted, the swap-conjugated rows have no map of their own.
pub fn ladder_map_check(op: usize, label: HarmonicLabel, p: &Params) -> Result<(), String> {
    let explicit = match op {
        0 => label.eps == 0,
        1 => matches!((label.residue(), label.eps), (1, 0) | (3, 0) | (1, 1) | (3, 1)),
        _ => false,
    };
    if !explicit {
        return Err(format!("operator {op} on {label:?} has no explicit map row"));
    }
    let form = coeff_form(label, p)
        .ok_or_else(|| format!("{label:?} is swap-defined and has no coefficient list"))?;
    let out = match (op, form.table) {
        (0, BasisKind::Phi) => map_t1_phi(&form.coeffs, form.order, p),
        (0, BasisKind::Psi) => map_t1_psi(&form.coeffs, form.order, p),
        (1, BasisKind::Phi) => map_t2_x1x2_phi(&form.coeffs, form.order, p),
        _ => map_t2_psi(&form.coeffs, form.order, p),
    };
    match ladder(op, label, p) {
        None => {
            if let Some(i) = out.iter().position(|v| !v.is_zero()) {
                return Err(format!(
                    "operator {op} on {label:?} should vanish, slot {i} is {}",
                    out[i]
                ));
            }
        }
        Some((scalar, target)) => {
            let tform = coeff_form(target, p)
                .ok_or_else(|| format!("target {target:?} has no coefficient list"))?;
            let expected: Vec<Rational> = tform.coeffs.iter().map(|v| v * &scalar).collect();
            if out != expected {
                return Err(format!(
                    "operator {op} on {label:?}: map route disagrees with {target:?}"
                ));
            }
        }
    }
    Ok(())
}

/// Asserts that a self-imaged family is an eigenvector of the swap of the
/// first two variables and returns the eigenvalue sign.
pub fn symmetry_check(ctx: &HarmonicContext, label: HarmonicLabel) -> i8 {
    let (target, sign) = sigma12_image(label);
    assert_eq!(target, label, "{label:?} is not fixed by the swap");
    let h = ctx.build(label);
    assert_eq!(h.swap_vars(0, 1), h.scale(&rat_int(sign as i64)), "sign of {label:?}");
    sign
}

/// Shared expansion state: the two tables at a fixed truncation order plus
/// a memo of built polynomials.
pub struct HarmonicContext {
    params: Params,
    max_degree: u32,
    phi: SeriesTable,
    psi: SeriesTable,
    memo: Mutex<HashMap<HarmonicLabel, MultiPoly>>,
}

impl HarmonicContext {
    pub fn new(params: Params, max_degree: u32) -> Self {
        let (phi, psi) = SeriesTable::expand_pair(max_degree / 2, &params);
        HarmonicContext {
            params,
            max_degree,
            phi,
            psi,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn phi_table(&self) -> &SeriesTable {
        &self.phi
    }

    pub fn psi_table(&self) -> &SeriesTable {
        &self.psi
    }

    /// Materializes `h_label`.
    pub fn build(&self, label: HarmonicLabel) -> MultiPoly {
        assert!(
            label.degree() <= self.max_degree,
            "degree {} beyond context bound {}",
            label.degree(),
            self.max_degree
        );
        if let Some(hit) = self.memo.lock().unwrap().get(&label) {
            return hit.clone();
        }
        let poly = match coeff_form(label, &self.params) {
            Some(form) => self.materialize(&form),
            None => {
                // Swap-defined family: build the neighbor and swap.
                let (src, sign) = sigma12_image(label);
                debug_assert_eq!(sign, 1);
                self.build(src).swap_vars(0, 1)
            }
        };
        self.memo.lock().unwrap().insert(label, poly.clone());
        poly
    }

    fn materialize(&self, form: &CoeffForm) -> MultiPoly {
        let table = match form.table {
            BasisKind::Phi => &self.phi,
            BasisKind::Psi => &self.psi,
        };
        let mut acc = MultiPoly::zero(self.params.nvars);
        for (i, coef) in form.coeffs.iter().enumerate() {
            if !coef.is_zero() {
                acc.add_scaled(&table.entry(form.order as i64, i as i64), coef);
            }
        }
        if form.x1x2_prefactor {
            let mut exps = vec![0u32; self.params.nvars];
            exps[0] = 1;
            exps[1] = 1;
            acc = acc.mul_term(&exps, &Rational::one());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dunkl::{dunkl_t, laplacian_b};
    use crate::exactalg::rat;

    fn params(n: usize) -> Params {
        Params::new(n, rat(2, 5), rat(1, 3))
    }

    fn ctx(nv: usize, max_degree: u32) -> HarmonicContext {
        HarmonicContext::new(params(nv), max_degree)
    }

    #[test]
    fn small_instances() {
        let nv = 3;
        let c = ctx(nv, 4);
        let p = c.params().clone();
        assert_eq!(c.build(HarmonicLabel::new(0, 0)), MultiPoly::one(nv));
        assert_eq!(c.build(HarmonicLabel::new(1, 0)), MultiPoly::var(nv, 0));
        assert_eq!(c.build(HarmonicLabel::new(0, 1)), MultiPoly::var(nv, 1));
        let x1x2 = MultiPoly::monomial(nv, vec![1, 1, 0], Rational::one());
        assert_eq!(c.build(HarmonicLabel::new(1, 1)), x1x2);
        let x1sq = MultiPoly::monomial(nv, vec![2, 0, 0], Rational::one());
        let x2sq = MultiPoly::monomial(nv, vec![0, 2, 0], Rational::one());
        assert_eq!(c.build(HarmonicLabel::new(2, 0)), &x1sq - &x2sq);
        // Degree three: psi_{1,0} + psi_{1,1} / (2 k2 + 2)
        let expected = {
            let mut acc = c.psi_table().entry(1, 0);
            let scale = Rational::one() / (rat_int(2) * &p.k2 + rat_int(2));
            acc.add_scaled(&c.psi_table().entry(1, 1), &scale);
            acc
        };
        assert_eq!(c.build(HarmonicLabel::new(3, 0)), expected);
    }

    #[test]
    fn leading_term_is_the_label() {
        let nv = 3;
        let c = ctx(nv, 6);
        for n in 0..=5u32 {
            for eps in 0..=1u8 {
                let label = HarmonicLabel::new(n, eps);
                let poly = c.build(label);
                // Highest power of x1 occurs exactly once, at x1^n x2^eps.
                let best = poly
                    .iter()
                    .max_by_key(|(m, _)| m.exps[0])
                    .expect("nonzero polynomial");
                let mut want = vec![0u32; nv];
                want[0] = n;
                want[1] = eps as u32;
                assert_eq!(best.0.exps, want, "leading term of {label:?}");
            }
        }
    }

    #[test]
    fn all_families_are_harmonic() {
        for nv in [2usize, 3] {
            let c = ctx(nv, 5);
            for n in 0..=4u32 {
                for eps in 0..=1u8 {
                    let label = HarmonicLabel::new(n, eps);
                    let h = c.build(label);
                    assert!(laplacian_b(&h, c.params()).is_zero(), "laplacian of {label:?}");
                    for i in 2..nv {
                        assert!(dunkl_t(i, &h, c.params()).is_zero(), "slot {i} on {label:?}");
                    }
                    assert_eq!(h.homogeneous_degree(), Some(label.degree()));
                }
            }
        }
    }

    #[test]
    fn swap_images_match_built_polynomials() {
        let c = ctx(3, 5);
        for n in 0..=4u32 {
            for eps in 0..=1u8 {
                let label = HarmonicLabel::new(n, eps);
                let (target, sign) = sigma12_image(label);
                let swapped = c.build(label).swap_vars(0, 1);
                let expected = c.build(target).scale(&rat_int(sign as i64));
                assert_eq!(swapped, expected, "swap image of {label:?}");
            }
        }
    }

    #[test]
    fn ladder_matches_direct_operator_application() {
        let c = ctx(3, 5);
        let p = c.params();
        for n in 0..=4u32 {
            for eps in 0..=1u8 {
                let label = HarmonicLabel::new(n, eps);
                let h = c.build(label);
                for op in 0..2usize {
                    let applied = dunkl_t(op, &h, p);
                    match ladder(op, label, p) {
                        None => assert!(applied.is_zero(), "T_{op} {label:?} should vanish"),
                        Some((scalar, target)) => {
                            let expected = c.build(target).scale(&scalar);
                            assert_eq!(applied, expected, "T_{op} {label:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_ladder_scalars() {
        let p = params(3);
        let k = &p.k;
        let k2 = &p.k2;
        // First-variable drop on degree 1: scalar 2 k2.
        let (s, t) = ladder(0, HarmonicLabel::new(1, 0), &p).unwrap();
        assert_eq!(s, rat_int(2) * k2);
        assert_eq!(t, HarmonicLabel::new(0, 0));
        // Second-variable drop on x1 x2: 2 (k2 - k).
        let (s, t) = ladder(1, HarmonicLabel::new(1, 1), &p).unwrap();
        assert_eq!(s, rat_int(2) * (k2 - k));
        assert_eq!(t, HarmonicLabel::new(1, 0));
        // Conjugated row: second operator on the swap-symmetric family.
        let (s, t) = ladder(1, HarmonicLabel::new(4, 0), &p).unwrap();
        assert_eq!(s, rat_int(2) * (rat_int(2) * k + rat_int(1)));
        assert_eq!(t, HarmonicLabel::new(2, 1));
        // Degenerate rows produce zero.
        assert!(ladder(0, HarmonicLabel::new(0, 0), &p).is_none());
        assert!(ladder(1, HarmonicLabel::new(1, 0), &p).is_none());
        assert!(ladder(0, HarmonicLabel::new(0, 1), &p).is_none());
    }

    #[test]
    fn coefficient_maps_reproduce_ladder_rows() {
        let p = params(4);
        for idx in 0..=3u32 {
            for residue in [0u32, 1, 2, 3] {
                let label = HarmonicLabel::new(4 * idx + residue, 0);
                ladder_map_check(0, label, &p).unwrap();
            }
            for (residue, eps) in [(3u32, 0u8), (1, 1), (1, 0), (3, 1)] {
                let label = HarmonicLabel::new(4 * idx + residue, eps);
                ladder_map_check(1, label, &p).unwrap();
            }
        }
        // Conjugated rows have no explicit map and are rejected up front.
        assert!(ladder_map_check(0, HarmonicLabel::new(4, 1), &p).is_err());
        assert!(ladder_map_check(1, HarmonicLabel::new(4, 0), &p).is_err());
    }
}
