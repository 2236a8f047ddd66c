//! The planar polynomial families `phi_{n,j}` and `psi_{n,j}`.
//!
//! Both families live in the first two variables modulo the action of the
//! remaining ones and are produced as exact coefficient tables of two
//! generating functions in auxiliary scalars `(s, t)`:
//!
//! ```text
//! F0 = (1 - s t (x1^2 + x2^2) + t^2 x1^2 x2^2) * G
//! F1 = t (x1^2 - x2^2) * G
//! G  = prod_i (1 - 2 s t x_i^2 + t^2 x_i^4)^{-c_i},   c1 = c2 = k+1, else k
//! ```
//!
//! `phi_{n,j}` is the `t^n s^j` coefficient of `F0 + F1` (the two terms feed
//! disjoint parities of `n + j`), and `psi_{n,j}` that of `x1 (F0 + s F1) -
//! x1 F1`. Each quadratic factor is expanded through the three-term
//! ultraspherical coefficient recurrence, which keeps the work per factor
//! quadratic in the truncation order.
//!
//! The same machinery expands the images of `F0`, `F1` in the formal
//! `p`-variables ([`expand_p_gen_tables`]), where the product collapses to
//! the two `c = 1` factors in `p_1, p_2`.
//!
//! The four `t*` functions return the action of the first two Dunkl
//! operators on table entries as short coefficient combinations of
//! neighboring entries, split by the parity of `n + j`.

use crate::exactalg::{rat_int, MultiPoly, Params, Rational};
use num_traits::{One, Zero};

/// Which family a table holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisKind {
    Phi,
    Psi,
}

/// Which generating term feeds entry `(n, j)`: the part symmetric under
/// swapping the first two variables (even `n + j`) or the antisymmetric
/// part (odd). The rule is the same for both families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SourceTerm {
    Symmetric,
    Antisymmetric,
}

pub fn parity_split(n: u32, j: u32) -> SourceTerm {
    if (n + j) % 2 == 0 {
        SourceTerm::Symmetric
    } else {
        SourceTerm::Antisymmetric
    }
}

type GridRows = Vec<Vec<MultiPoly>>;

/// Triangular array of `(s, t)` coefficients: row `n` holds the polynomials
/// at `t^n s^j` for `0 <= j <= n`.
#[derive(Clone, Debug)]
pub struct CoeffGrid {
    max_n: u32,
    nvars: usize,
    rows: GridRows,
}

impl CoeffGrid {
    fn from_rows(max_n: u32, nvars: usize, rows: GridRows) -> Self {
        CoeffGrid { max_n, nvars, rows }
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficient at `t^n s^j`. Indices outside the triangle `0 <= j <= n`
    /// are zero; `n` beyond the truncation order is a caller bug.
    pub fn entry(&self, n: i64, j: i64) -> MultiPoly {
        if n < 0 || j < 0 || j > n {
            return MultiPoly::zero(self.nvars);
        }
        assert!(n <= self.max_n as i64, "order {n} beyond truncation {}", self.max_n);
        self.rows[n as usize][j as usize].clone()
    }
}

fn empty_rows(max_n: u32, nvars: usize) -> GridRows {
    (0..=max_n as usize)
        .map(|n| vec![MultiPoly::zero(nvars); n + 1])
        .collect()
}

/// Rows of ultraspherical coefficients: `rows[m][j]` is the `s^j`
/// coefficient of the `r^m` term of `(1 - 2 s r + r^2)^{-c}`, generated by
/// `(m+1) C_{m+1} = 2 (c+m) s C_m - (2c+m-1) C_{m-1}`.
fn gegenbauer_rows(c: &Rational, max_m: u32) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_m as usize + 1);
    rows.push(vec![Rational::one()]);
    if max_m == 0 {
        return rows;
    }
    rows.push(vec![Rational::zero(), rat_int(2) * c]);
    for m in 1..max_m as i64 {
        let a = (c + rat_int(m)) * rat_int(2);
        let b = rat_int(2) * c + rat_int(m - 1);
        let prev = &rows[m as usize - 1];
        let cur = &rows[m as usize];
        let mut next = vec![Rational::zero(); m as usize + 2];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut v = Rational::zero();
            if j >= 1 {
                v = &a * &cur[j - 1];
            }
            if j < prev.len() {
                v = v - &b * &prev[j];
            }
            *slot = v / rat_int(m + 1);
        }
        rows.push(next);
    }
    rows
}

/// Multiplies a grid by `(1 - 2 s t x_slot^upow + t^2 x_slot^{2 upow})^{-c}`
/// with truncation at `t^max_n`.
fn mul_gegenbauer_factor(
    grid: &GridRows,
    c: &Rational,
    slot: usize,
    upow: u32,
    max_n: u32,
    nvars: usize,
) -> GridRows {
    let coeffs = gegenbauer_rows(c, max_n);
    let mut out = empty_rows(max_n, nvars);
    for (n, row) in grid.iter().enumerate() {
        for (j, src) in row.iter().enumerate() {
            if src.is_zero() {
                continue;
            }
            for (m, crow) in coeffs.iter().enumerate().take(max_n as usize - n + 1) {
                let mut exps = vec![0u32; nvars];
                exps[slot] = upow * m as u32;
                for (jp, coef) in crow.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    out[n + m][j + jp].add_scaled(&src.mul_term(&exps, coef), &Rational::one());
                }
            }
        }
    }
    out
}

/// Applies the numerator pair: from `G` produces the grids of
/// `(1 - s t a + t^2 b) G` and `t d G`.
fn apply_prefactors(
    g: &GridRows,
    a: &MultiPoly,
    b: &MultiPoly,
    d: &MultiPoly,
    max_n: u32,
    nvars: usize,
) -> (GridRows, GridRows) {
    let mut f0 = empty_rows(max_n, nvars);
    let mut f1 = empty_rows(max_n, nvars);
    for n in 0..=max_n as usize {
        for j in 0..=n {
            let mut e0 = g[n][j].clone();
            if n >= 1 && j >= 1 {
                e0.add_scaled(&(a * &g[n - 1][j - 1]), &-Rational::one());
            }
            if n >= 2 && j <= n - 2 {
                e0.add_scaled(&(b * &g[n - 2][j]), &Rational::one());
            }
            f0[n][j] = e0;
            if n >= 1 && j <= n - 1 {
                f1[n][j] = d * &g[n - 1][j];
            }
        }
    }
    (f0, f1)
}

/// Grids of the two squared-variable generating functions `F0`, `F1`.
pub fn expand_f_tables(max_n: u32, params: &Params) -> (CoeffGrid, CoeffGrid) {
    let nv = params.nvars;
    let mut g = empty_rows(max_n, nv);
    g[0][0] = MultiPoly::one(nv);
    for slot in 0..nv {
        let c = if slot < 2 { &params.k + rat_int(1) } else { params.k.clone() };
        g = mul_gegenbauer_factor(&g, &c, slot, 2, max_n, nv);
    }
    let x1sq = MultiPoly::monomial(nv, first_exps(nv, 2, 0), Rational::one());
    let x2sq = MultiPoly::monomial(nv, first_exps(nv, 0, 2), Rational::one());
    let a = &x1sq + &x2sq;
    let b = &x1sq * &x2sq;
    let d = &x1sq - &x2sq;
    let (f0, f1) = apply_prefactors(&g, &a, &b, &d, max_n, nv);
    (
        CoeffGrid::from_rows(max_n, nv, f0),
        CoeffGrid::from_rows(max_n, nv, f1),
    )
}

/// Grids of the formal-variable images `f0`, `f1`: the same construction
/// with the two `c = 1` factors in `p_1, p_2` and no coupling dependence.
pub fn expand_p_gen_tables(max_n: u32, nvars: usize) -> (CoeffGrid, CoeffGrid) {
    assert!(nvars >= 2, "need at least two slots");
    let mut g = empty_rows(max_n, nvars);
    g[0][0] = MultiPoly::one(nvars);
    for slot in 0..2 {
        g = mul_gegenbauer_factor(&g, &Rational::one(), slot, 1, max_n, nvars);
    }
    let p1 = MultiPoly::var(nvars, 0);
    let p2 = MultiPoly::var(nvars, 1);
    let a = &p1 + &p2;
    let b = &p1 * &p2;
    let d = &p1 - &p2;
    let (f0, f1) = apply_prefactors(&g, &a, &b, &d, max_n, nvars);
    (
        CoeffGrid::from_rows(max_n, nvars, f0),
        CoeffGrid::from_rows(max_n, nvars, f1),
    )
}

fn first_exps(nvars: usize, e1: u32, e2: u32) -> Vec<u32> {
    let mut exps = vec![0u32; nvars];
    exps[0] = e1;
    exps[1] = e2;
    exps
}

/// Exact table of one family up to `t^max_n`.
#[derive(Clone, Debug)]
pub struct SeriesTable {
    kind: BasisKind,
    grid: CoeffGrid,
}

impl SeriesTable {
    /// Expands both families from one pass over the generating functions.
    pub fn expand_pair(max_n: u32, params: &Params) -> (SeriesTable, SeriesTable) {
        let nv = params.nvars;
        let (f0, f1) = expand_f_tables(max_n, params);
        let mut phi = empty_rows(max_n, nv);
        let mut psi = empty_rows(max_n, nv);
        let x1 = first_exps(nv, 1, 0);
        for n in 0..=max_n as i64 {
            for j in 0..=n {
                let e0 = f0.entry(n, j);
                let e1 = f1.entry(n, j);
                // The two sources feed disjoint parities of n + j.
                if (n + j) % 2 == 0 {
                    assert!(e1.is_zero(), "parity leak in antisymmetric term at ({n},{j})");
                } else {
                    assert!(e0.is_zero(), "parity leak in symmetric term at ({n},{j})");
                }
                let ph = &e0 + &e1;
                if !ph.is_zero() {
                    assert_eq!(ph.homogeneous_degree(), Some(2 * n as u32), "phi degree at ({n},{j})");
                }
                let mut ps = &e0 + &f1.entry(n, j - 1);
                ps.add_scaled(&e1, &-Rational::one());
                let ps = ps.mul_term(&x1, &Rational::one());
                if !ps.is_zero() {
                    assert_eq!(ps.homogeneous_degree(), Some(2 * n as u32 + 1), "psi degree at ({n},{j})");
                }
                phi[n as usize][j as usize] = ph;
                psi[n as usize][j as usize] = ps;
            }
        }
        (
            SeriesTable { kind: BasisKind::Phi, grid: CoeffGrid::from_rows(max_n, nv, phi) },
            SeriesTable { kind: BasisKind::Psi, grid: CoeffGrid::from_rows(max_n, nv, psi) },
        )
    }

    pub fn expand(kind: BasisKind, max_n: u32, params: &Params) -> SeriesTable {
        let (phi, psi) = SeriesTable::expand_pair(max_n, params);
        match kind {
            BasisKind::Phi => phi,
            BasisKind::Psi => psi,
        }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn max_n(&self) -> u32 {
        self.grid.max_n
    }

    pub fn nvars(&self) -> usize {
        self.grid.nvars
    }

    /// Table entry, with out-of-triangle labels defined as zero.
    pub fn entry(&self, n: i64, j: i64) -> MultiPoly {
        self.grid.entry(n, j)
    }
}

/// One term of a coefficient combination: `coef` times the entry at `(n, j)`
/// of the target family.
#[derive(Clone, Debug)]
pub struct BasisTerm {
    pub coef: Rational,
    pub n: i64,
    pub j: i64,
}

fn term(coef: Rational, n: i64, j: i64) -> BasisTerm {
    BasisTerm { coef, n, j }
}

/// Materializes a combination against a table.
pub fn combine(table: &SeriesTable, terms: &[BasisTerm]) -> MultiPoly {
    let mut acc = MultiPoly::zero(table.nvars());
    for t in terms {
        acc.add_scaled(&table.entry(t.n, t.j), &t.coef);
    }
    acc
}

/// `T_1 phi_{n,j}` as a combination of `psi_{n-1, .}`.
pub fn t1_on_phi(n: u32, j: u32, p: &Params) -> Vec<BasisTerm> {
    let (nn, jj) = (n as i64, j as i64);
    let nk2 = rat_int(2 * p.nvars as i64) * &p.k;
    if (n + j) % 2 == 0 {
        vec![
            term(&nk2 + rat_int(nn + jj), nn - 1, jj - 1),
            term(rat_int(2 * (p.nvars as i64 - 1)) * &p.k + rat_int(nn), nn - 1, jj),
            term(rat_int(-(jj + 1)), nn - 1, jj + 1),
        ]
    } else {
        vec![
            term(&nk2 + rat_int(nn + jj + 1), nn - 1, jj),
            term(rat_int(jj + 1), nn - 1, jj + 1),
        ]
    }
}

/// `T_1 psi_{n,j}` as a combination of `phi_{n, .}`.
pub fn t1_on_psi(n: u32, j: u32, p: &Params) -> Vec<BasisTerm> {
    let (nn, jj) = (n as i64, j as i64);
    let two_k2 = rat_int(2) * &p.k2;
    if (n + j) % 2 == 0 {
        let c = &two_k2 + rat_int(nn + jj);
        vec![
            term(c.clone(), nn, jj),
            term(c, nn, jj - 1),
            term(rat_int(-(jj + 1)), nn, jj + 1),
        ]
    } else {
        vec![
            term(-(&two_k2 - rat_int(2) * &p.k + rat_int(nn)), nn, jj),
            term(rat_int(-(jj + 1)), nn, jj + 1),
        ]
    }
}

/// `T_2 (x1 x2 phi_{n,j})` as a combination of `psi_{n, .}`.
pub fn t2_on_x1x2_phi(n: u32, j: u32, p: &Params) -> Vec<BasisTerm> {
    let (nn, jj) = (n as i64, j as i64);
    let two_k2 = rat_int(2) * &p.k2;
    if (n + j) % 2 == 0 {
        vec![
            term(&two_k2 - rat_int(2) * &p.k + rat_int(nn), nn, jj),
            term(&two_k2 + rat_int(nn + jj), nn, jj - 1),
            term(rat_int(-(jj + 1)), nn, jj + 1),
        ]
    } else {
        vec![
            term(-(&two_k2 + rat_int(nn + jj + 1)), nn, jj),
            term(rat_int(-(jj + 1)), nn, jj + 1),
        ]
    }
}

/// `T_2 psi_{n,j}` as `x1 x2` times a combination of `phi_{n-1, .}`.
pub fn t2_on_psi(n: u32, j: u32, p: &Params) -> Vec<BasisTerm> {
    let (nn, jj) = (n as i64, j as i64);
    if (n + j) % 2 == 0 {
        vec![
            term(rat_int(2 * (p.nvars as i64 - 1)) * &p.k + rat_int(nn + 1), nn - 1, jj),
            term(rat_int(-(jj + 1)), nn - 1, jj + 1),
        ]
    } else {
        let c = rat_int(2 * p.nvars as i64) * &p.k + rat_int(nn + jj + 1);
        vec![
            term(c.clone(), nn - 1, jj),
            term(-c, nn - 1, jj - 1),
            term(rat_int(jj + 1), nn - 1, jj + 1),
        ]
    }
}
