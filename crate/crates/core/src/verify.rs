//! Randomized exact verification suites, shared by the acceptance tests and
//! the command line.
//!
//! Every suite is deterministic for a fixed seed: couplings are ratios of
//! integers drawn uniformly from `[1, 40]` out of a ChaCha8 generator, and
//! each suite reads its own stream of the generator, so skipping or
//! reordering suites never changes the data another suite sees. A suite
//! reports how many individual identities it checked and keeps the first
//! counterexample as text.

use crate::calogero::{
    conjugated_hamiltonian, eigenfunction, laguerre_coeffs, radius_squared, CalogeroParams,
    EigenLabel,
};
use crate::dunkl::{dunkl_hat_t, dunkl_t, laplacian_b};
use crate::exactalg::{rat, rat_int, MultiPoly, Params, Rational};
use crate::harmonic::{ladder, ladder_map_check, HarmonicContext, HarmonicLabel};
use crate::pbasis::{
    expand_combination, hat_t_formal, hat_t_on_p_alpha, p_alpha, p_n, psi_inverse_expand,
    psi_map, PBasisExpansion,
};
use crate::planar::{combine, t1_on_phi, t1_on_psi, t2_on_psi, t2_on_x1x2_phi, SeriesTable};
use crate::special::{
    eps_pattern, even_part_at_y0, hyp_sum, leading_coefficient, leading_monomial, norm_squared,
    phi_at_ones, phi_at_x0, pochhammer, value_at_ones, value_at_x0, whipple_transform, HypSeries,
    LeadingMonomial,
};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bounds for one verification run. [`SuiteConfig::acceptance`] freezes the
/// bounds used by the integration gate; the command line builds smaller ones.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Master seed; each suite mixes in its own stream index.
    pub seed: u64,
    /// Coupling samples per variable count.
    pub samples: u32,
    /// Variable counts to exercise.
    pub sizes: Vec<usize>,
    /// When present, overrides coupling sampling with fixed `(k, k1)`.
    pub fixed: Option<(Rational, Rational)>,
    /// Largest family index for annihilation, ladder, and closed forms.
    pub max_label: u32,
    /// Largest family index for the quadratic norm suite.
    pub max_norm_label: u32,
    /// Largest generating order for the operator recurrence suite.
    pub max_recurrence: u32,
    /// Largest single index for kernel annihilation in the shifted basis.
    pub max_p_degree: u32,
    /// Largest composition weight for the first-order action formula.
    pub max_weight: u32,
    /// Largest harmonic degree entering the oscillator suite.
    pub max_eigen_degree: u32,
    /// Largest radial index for oscillator eigenfunctions.
    pub max_radial: u32,
    /// Accepted tuple counts for the three hypergeometric summation laws.
    pub hyp_tuples: (u32, u32, u32),
    /// Plants a deliberately broken polynomial in the annihilation suite.
    pub corrupt: bool,
}

impl SuiteConfig {
    /// The full bounds the acceptance gate runs at.
    pub fn acceptance(seed: u64) -> Self {
        SuiteConfig {
            seed,
            samples: 3,
            sizes: vec![3, 4],
            fixed: None,
            max_label: 11,
            max_norm_label: 9,
            max_recurrence: 4,
            max_p_degree: 6,
            max_weight: 5,
            max_eigen_degree: 7,
            max_radial: 2,
            hyp_tuples: (50, 50, 25),
            corrupt: false,
        }
    }
}

/// Result of one suite.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn summary(&self) -> String {
        match &self.first_failure {
            None => format!("PASS {} ({} checks)", self.name, self.checks),
            Some(f) => format!(
                "FAIL {} ({} of {} checks failed; first: {})",
                self.name, self.failures, self.checks, f
            ),
        }
    }
}

/// Suite names in reporting order, accepted by [`run_suite`].
pub const SUITE_NAMES: [&str; 9] = [
    "annihilation",
    "ladder",
    "recurrences",
    "shifted-basis",
    "closed-forms",
    "norms",
    "summation-laws",
    "oscillator",
    "classical-limit",
];

/// Runs one suite by name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteOutcome> {
    match name {
        "annihilation" => Some(suite_harmonicity(cfg)),
        "ladder" => Some(suite_ladder(cfg)),
        "recurrences" => Some(suite_recurrences(cfg)),
        "shifted-basis" => Some(suite_pbasis(cfg)),
        "closed-forms" => Some(suite_closed_forms(cfg)),
        "norms" => Some(suite_norms(cfg)),
        "summation-laws" => Some(suite_hypergeometric(cfg)),
        "oscillator" => Some(suite_calogero(cfg)),
        "classical-limit" => Some(suite_degeneration(cfg)),
        _ => None,
    }
}

/// Runs every suite in reporting order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteOutcome> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, cfg).expect("registered name"))
        .collect()
}

fn stream(cfg: &SuiteConfig, lane: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(lane);
    rng
}

fn draw_ratio(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(1..=40), rng.gen_range(1..=40))
}

fn draw_signed_ratio(rng: &mut ChaCha8Rng) -> Rational {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(sign * rng.gen_range(1..=40), rng.gen_range(1..=40))
}

fn sample_params(cfg: &SuiteConfig, nvars: usize, rng: &mut ChaCha8Rng) -> Params {
    match &cfg.fixed {
        Some((k, k1)) => Params::new(nvars, k.clone(), k1.clone()),
        None => {
            let k = draw_ratio(rng);
            let k1 = draw_ratio(rng);
            Params::new(nvars, k, k1)
        }
    }
}

fn labels_up_to(max_n: u32) -> Vec<HarmonicLabel> {
    let mut v = Vec::new();
    for n in 0..=max_n {
        for eps in 0..=1u8 {
            v.push(HarmonicLabel::new(n, eps));
        }
    }
    v
}

fn describe(p: &Params) -> String {
    format!("nvars={} k={} k1={}", p.nvars, p.k, p.k1)
}

/// Every family is killed by the full Laplacian and by each operator past
/// the first two. The corrupt switch adds `r^2` times a lower family, which
/// is never harmonic, so the suite must then fail.
pub fn suite_harmonicity(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("annihilation");
    let mut rng = stream(cfg, 1);
    for &nvars in &cfg.sizes {
        for _ in 0..cfg.samples {
            let p = sample_params(cfg, nvars, &mut rng);
            let ctx = HarmonicContext::new(p.clone(), cfg.max_label + 1);
            let r2 = radius_squared(nvars);
            for label in labels_up_to(cfg.max_label) {
                let mut h = ctx.build(label);
                if cfg.corrupt && label.n >= 2 {
                    let lower = ctx.build(HarmonicLabel::new(label.n - 2, label.eps));
                    h.add_scaled(&(&r2 * &lower), &Rational::one());
                }
                out.check(laplacian_b(&h, &p).is_zero(), || {
                    format!("laplacian on {label:?} at {}", describe(&p))
                });
                for i in 2..nvars {
                    out.check(dunkl_t(i, &h, &p).is_zero(), || {
                        format!("operator {i} on {label:?} at {}", describe(&p))
                    });
                }
            }
        }
    }
    out
}

/// The first two operators act on each family exactly as the ladder table
/// says, both by direct application and through the coefficient maps, and
/// their squares are negatives of each other.
pub fn suite_ladder(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("ladder");
    let mut rng = stream(cfg, 2);
    for &nvars in &cfg.sizes {
        for _ in 0..cfg.samples {
            let p = sample_params(cfg, nvars, &mut rng);
            let ctx = HarmonicContext::new(p.clone(), cfg.max_label + 1);
            for label in labels_up_to(cfg.max_label) {
                let h = ctx.build(label);
                let t1 = dunkl_t(0, &h, &p);
                let t2 = dunkl_t(1, &h, &p);
                for (op, lhs) in [(0usize, &t1), (1, &t2)] {
                    match ladder(op, label, &p) {
                        None => out.check(lhs.is_zero(), || {
                            format!("operator {op} on {label:?} at {}", describe(&p))
                        }),
                        Some((scalar, target)) => {
                            let want = ctx.build(target).scale(&scalar);
                            out.check(*lhs == want, || {
                                format!(
                                    "operator {op} on {label:?} vs {target:?} at {}",
                                    describe(&p)
                                )
                            });
                        }
                    }
                }
                let sq1 = dunkl_t(0, &t1, &p);
                let sq2 = dunkl_t(1, &t2, &p);
                out.check(sq2 == sq1.scale(&-Rational::one()), || {
                    format!("squares on {label:?} at {}", describe(&p))
                });
            }
            for n in 0..=cfg.max_label {
                let r = ladder_map_check(0, HarmonicLabel::new(n, 0), &p);
                let ok = r.is_ok();
                out.check(ok, || {
                    format!("map route: {}", r.err().unwrap_or_default())
                });
                if n % 2 == 1 {
                    for eps in 0..=1u8 {
                        let r = ladder_map_check(1, HarmonicLabel::new(n, eps), &p);
                        let ok = r.is_ok();
                        out.check(ok, || {
                            format!("map route: {}", r.err().unwrap_or_default())
                        });
                    }
                }
            }
        }
    }
    out
}

/// The four operator recurrences on generating rows, both parities, checked
/// against direct operator application.
pub fn suite_recurrences(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("recurrences");
    let mut rng = stream(cfg, 3);
    for &nvars in &cfg.sizes {
        for _ in 0..cfg.samples {
            let p = sample_params(cfg, nvars, &mut rng);
            let (phi, psi) = SeriesTable::expand_pair(cfg.max_recurrence, &p);
            let mut x1x2 = vec![0u32; nvars];
            x1x2[0] = 1;
            x1x2[1] = 1;
            for n in 0..=cfg.max_recurrence {
                for j in 0..=n {
                    let (nn, jj) = (n as i64, j as i64);
                    let direct = dunkl_t(0, &phi.entry(nn, jj), &p);
                    out.check(direct == combine(&psi, &t1_on_phi(n, j, &p)), || {
                        format!("first op on phi({n},{j}) at {}", describe(&p))
                    });
                    let direct = dunkl_t(0, &psi.entry(nn, jj), &p);
                    out.check(direct == combine(&phi, &t1_on_psi(n, j, &p)), || {
                        format!("first op on psi({n},{j}) at {}", describe(&p))
                    });
                    let src = phi.entry(nn, jj).mul_term(&x1x2, &Rational::one());
                    let direct = dunkl_t(1, &src, &p);
                    out.check(direct == combine(&psi, &t2_on_x1x2_phi(n, j, &p)), || {
                        format!("second op on x1 x2 phi({n},{j}) at {}", describe(&p))
                    });
                    let direct = dunkl_t(1, &psi.entry(nn, jj), &p);
                    let want =
                        combine(&phi, &t2_on_psi(n, j, &p)).mul_term(&x1x2, &Rational::one());
                    out.check(direct == want, || {
                        format!("second op on psi({n},{j}) at {}", describe(&p))
                    });
                }
            }
        }
    }
    out
}

fn compositions_up_to(nvars: usize, max_weight: u32) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for c in &acc {
            let used: u32 = c.iter().sum();
            for v in 0..=(max_weight - used) {
                let mut d = c.clone();
                d.push(v);
                next.push(d);
            }
        }
        acc = next;
    }
    acc
}

/// Shifted-basis laws: each `p_n(y_i; y)` is killed by the operators at the
/// other slots, the first-order action formula matches brute-force operator
/// application on every product, and conjugating the formal operator by the
/// coordinate map reproduces the true one.
pub fn suite_pbasis(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("shifted-basis");
    let mut rng = stream(cfg, 4);
    for &nvars in &cfg.sizes {
        for _ in 0..cfg.samples {
            let p = sample_params(cfg, nvars, &mut rng);
            for n in 1..=cfg.max_p_degree {
                for i in 0..nvars {
                    let g = p_n(n, i, &p);
                    for j in 0..nvars {
                        if j == i {
                            continue;
                        }
                        out.check(dunkl_hat_t(j, &g, &p).0.is_zero(), || {
                            format!("operator {j} on p_{n}(slot {i}) at {}", describe(&p))
                        });
                    }
                }
            }
            for alpha in compositions_up_to(nvars, cfg.max_weight) {
                let g = p_alpha(&alpha, &p);
                for i in 0..nvars {
                    let direct = dunkl_hat_t(i, &g, &p);
                    let formula = expand_combination(&hat_t_on_p_alpha(i, &alpha, &p), &p);
                    out.check(direct.0 == formula.0, || {
                        format!("action formula at {alpha:?} slot {i}, {}", describe(&p))
                    });
                    let mut coords = PBasisExpansion::new();
                    coords.insert(alpha.clone(), Rational::one());
                    let formal = hat_t_formal(i, &psi_map(&coords, nvars), &p);
                    out.check(psi_inverse_expand(&formal, &p).0 == direct.0, || {
                        format!("conjugation at {alpha:?} slot {i}, {}", describe(&p))
                    });
                }
            }
        }
    }
    out
}

/// Closed forms: values at the all-ones point, leading coefficients for both
/// distinguished monomials, and the values at the special planar point for
/// both the families and the generating rows.
pub fn suite_closed_forms(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("closed-forms");
    let mut rng = stream(cfg, 5);
    for &nvars in &cfg.sizes {
        for _ in 0..cfg.samples {
            let p = sample_params(cfg, nvars, &mut rng);
            let ctx = HarmonicContext::new(p.clone(), cfg.max_label + 1);
            let ones = vec![Rational::one(); nvars];
            for label in labels_up_to(cfg.max_label) {
                let h = ctx.build(label);
                out.check(h.eval(&ones) == value_at_ones(label, &p), || {
                    format!("value at ones for {label:?} at {}", describe(&p))
                });
                for which in [LeadingMonomial::Primary, LeadingMonomial::Companion] {
                    let m = leading_monomial(label, which, nvars);
                    out.check(h.coeff(&m) == leading_coefficient(label, which, &p), || {
                        format!("{which:?} coefficient of {label:?} at {}", describe(&p))
                    });
                }
                let even = even_part_at_y0(&h, eps_pattern(label));
                out.check(even == value_at_x0(label, &p), || {
                    format!("planar-point value of {label:?} at {}", describe(&p))
                });
            }
            let max_order = ctx.phi_table().max_n();
            for n in 0..=max_order {
                for j in 0..=n {
                    let entry = ctx.phi_table().entry(n as i64, j as i64);
                    out.check(entry.eval(&ones) == phi_at_ones(n, j, &p), || {
                        format!("phi({n},{j}) at ones, {}", describe(&p))
                    });
                    out.check(even_part_at_y0(&entry, (0, 0)) == phi_at_x0(n, j, &p), || {
                        format!("phi({n},{j}) at the planar point, {}", describe(&p))
                    });
                }
            }
        }
    }
    out
}

/// The operator pairing norm agrees with the closed product formula and is
/// positive at positive couplings.
pub fn suite_norms(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("norms");
    let mut rng = stream(cfg, 6);
    for &nvars in &cfg.sizes {
        for _ in 0..cfg.samples {
            let p = sample_params(cfg, nvars, &mut rng);
            let ctx = HarmonicContext::new(p.clone(), cfg.max_norm_label + 1);
            for label in labels_up_to(cfg.max_norm_label) {
                let result = norm_squared(&ctx, label);
                let agreement = result.is_ok();
                let err_text = result.as_ref().err().cloned();
                out.check(agreement, || {
                    format!("{} ({})", err_text.unwrap_or_default(), describe(&p))
                });
                if let Ok(ns) = result {
                    out.check(ns.value.is_positive(), || {
                        format!("norm of {label:?} not positive at {}", describe(&p))
                    });
                }
            }
        }
    }
    out
}

fn lower_is_degenerate(c: &Rational, n: u32) -> bool {
    pochhammer(c, n).is_zero()
}

/// The three summation laws on random admissible tuples: the two-parameter
/// terminating sum, the balanced three-parameter sum, and the double-sum
/// transformation for balanced series with four numerator parameters.
pub fn suite_hypergeometric(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("summation-laws");
    let mut rng = stream(cfg, 7);
    let (want_cv, want_sz, want_wh) = cfg.hyp_tuples;

    let mut accepted = 0u32;
    let mut attempts = 0u32;
    while accepted < want_cv && attempts < 100_000 {
        attempts += 1;
        let n = rng.gen_range(0u32..=6);
        let b = draw_signed_ratio(&mut rng);
        let c = draw_signed_ratio(&mut rng);
        if lower_is_degenerate(&c, n) {
            continue;
        }
        let s = HypSeries::new(vec![rat_int(-i64::from(n)), b.clone()], vec![c.clone()]);
        let lhs = match hyp_sum(&s) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let rhs = pochhammer(&(&c - &b), n) / pochhammer(&c, n);
        out.check(lhs == rhs, || format!("two-parameter sum at n={n} b={b} c={c}"));
        accepted += 1;
    }
    out.check(accepted == want_cv, || {
        format!("two-parameter tuples: only {accepted} of {want_cv} admissible")
    });

    let mut accepted = 0u32;
    let mut attempts = 0u32;
    while accepted < want_sz && attempts < 100_000 {
        attempts += 1;
        let n = rng.gen_range(0u32..=6);
        let a = draw_signed_ratio(&mut rng);
        let b = draw_signed_ratio(&mut rng);
        let c = draw_signed_ratio(&mut rng);
        let d = Rational::one() - rat_int(i64::from(n)) + &a + &b - &c;
        if lower_is_degenerate(&c, n) || lower_is_degenerate(&d, n) {
            continue;
        }
        let s = HypSeries::new(
            vec![rat_int(-i64::from(n)), a.clone(), b.clone()],
            vec![c.clone(), d.clone()],
        );
        let lhs = match hyp_sum(&s) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let rhs = pochhammer(&(&c - &a), n) * pochhammer(&(&d - &a), n)
            / (pochhammer(&c, n) * pochhammer(&d, n));
        out.check(lhs == rhs, || {
            format!("balanced sum at n={n} a={a} b={b} c={c}")
        });
        accepted += 1;
    }
    out.check(accepted == want_sz, || {
        format!("balanced tuples: only {accepted} of {want_sz} admissible")
    });

    let mut accepted = 0u32;
    let mut attempts = 0u32;
    while accepted < want_wh && attempts < 100_000 {
        attempts += 1;
        let n = rng.gen_range(0u32..=5);
        let a = draw_signed_ratio(&mut rng);
        let b = draw_signed_ratio(&mut rng);
        let c = draw_signed_ratio(&mut rng);
        let d = draw_signed_ratio(&mut rng);
        let e = draw_signed_ratio(&mut rng);
        let f = Rational::one() - rat_int(i64::from(n)) + &a + &b + &c - &d - &e;
        if lower_is_degenerate(&d, n)
            || lower_is_degenerate(&e, n)
            || lower_is_degenerate(&f, n)
        {
            continue;
        }
        let s = HypSeries::new(
            vec![rat_int(-i64::from(n)), a.clone(), b.clone(), c.clone()],
            vec![d.clone(), e.clone(), f.clone()],
        );
        let direct = match hyp_sum(&s) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let (prefactor, transformed) = match whipple_transform(&s) {
            Ok(t) => t,
            Err(_) => continue,
        };
        let other = match hyp_sum(&transformed) {
            Ok(v) => v,
            Err(_) => continue,
        };
        out.check(direct == prefactor * other, || {
            format!("transformation at n={n} a={a} b={b} c={c} d={d} e={e}")
        });
        accepted += 1;
    }
    out.check(accepted == want_wh, || {
        format!("transformation tuples: only {accepted} of {want_wh} admissible")
    });

    out
}

/// Oscillator eigenfunctions: radial factor times family is an exact
/// eigenfunction of the conjugated Hamiltonian, and perturbing the radial
/// index breaks the relation.
pub fn suite_calogero(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("oscillator");
    let mut rng = stream(cfg, 8);
    for &nvars in &cfg.sizes {
        for _ in 0..cfg.samples {
            let p = sample_params(cfg, nvars, &mut rng);
            let omega = draw_ratio(&mut rng);
            let cp = CalogeroParams::new(p.clone(), omega);
            let ctx = HarmonicContext::new(p.clone(), cfg.max_eigen_degree);
            for label in labels_up_to(cfg.max_eigen_degree) {
                if label.degree() > cfg.max_eigen_degree {
                    continue;
                }
                for rad in 0..=cfg.max_radial {
                    let el = EigenLabel::new(label.degree(), rad, &cp);
                    let u = eigenfunction(&ctx, label, rad, &cp);
                    let lhs = conjugated_hamiltonian(&u, &cp);
                    out.check(lhs == u.scale(&el.eigenvalue(&cp)), || {
                        format!(
                            "eigen relation {label:?} radial {rad} omega={} at {}",
                            cp.omega,
                            describe(&p)
                        )
                    });
                }
            }
            // A shifted radial index must break the relation.
            let label = HarmonicLabel::new(2, 0);
            let el = EigenLabel::new(2, 1, &cp);
            let bad = laguerre_coeffs(1, &(&el.c + Rational::one()));
            let r2 = radius_squared(nvars);
            let h = ctx.build(label);
            let mut u = MultiPoly::zero(nvars);
            let mut radial_pow = MultiPoly::one(nvars);
            let mut omega_pow = Rational::one();
            for coef in &bad {
                u.add_scaled(&(&radial_pow * &h), &(coef * &omega_pow));
                radial_pow = &radial_pow * &r2;
                omega_pow = omega_pow * &cp.omega;
            }
            let lhs = conjugated_hamiltonian(&u, &cp);
            out.check(lhs != u.scale(&el.eigenvalue(&cp)), || {
                format!("perturbed radial index still satisfied at {}", describe(&p))
            });
        }
    }
    out
}

/// At vanishing couplings the operators are plain partial derivatives and
/// every family is an ordinary harmonic polynomial.
pub fn suite_degeneration(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("classical-limit");
    let mut rng = stream(cfg, 9);
    for &nvars in &cfg.sizes {
        let p0 = Params::new(nvars, Rational::zero(), Rational::zero());
        for _ in 0..cfg.samples {
            let mut f = MultiPoly::zero(nvars);
            for _ in 0..8 {
                let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=3)).collect();
                f.add_term(&exps, draw_signed_ratio(&mut rng));
            }
            for i in 0..nvars {
                out.check(dunkl_t(i, &f, &p0) == f.partial_derivative(i), || {
                    format!("operator {i} is not the derivative at nvars={nvars}")
                });
            }
        }
        let ctx = HarmonicContext::new(p0.clone(), cfg.max_label + 1);
        for label in labels_up_to(cfg.max_label) {
            let h = ctx.build(label);
            let mut lap = MultiPoly::zero(nvars);
            for i in 0..nvars {
                lap.add_scaled(
                    &h.partial_derivative(i).partial_derivative(i),
                    &Rational::one(),
                );
            }
            out.check(lap.is_zero(), || {
                format!("classical laplacian on {label:?} at nvars={nvars}")
            });
        }
    }
    out
}
