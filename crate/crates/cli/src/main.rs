//! Command line for the exact planar harmonics library: build single
//! polynomials, run the verification suites, tabulate closed forms against
//! direct computation, and check oscillator eigenfunctions.
//!
//! All arithmetic is exact. Randomized verification draws couplings as
//! ratios of integers from `[1, 40]` out of per-suite ChaCha8 streams, so
//! output is byte-identical for a fixed seed and argument list.

use clap::{Args, Parser, Subcommand, ValueEnum};
use planarb::calogero::{conjugated_hamiltonian, eigenfunction, CalogeroParams, EigenLabel};
use planarb::exactalg::{format_rational, parse_rational, rat, rat_int};
use planarb::harmonic::{HarmonicContext, HarmonicLabel};
use planarb::pbasis::p_alpha;
use planarb::planar::{BasisKind, SeriesTable};
use planarb::special::{leading_coefficient, leading_monomial, norm_squared, value_at_ones, LeadingMonomial};
use planarb::verify::{run_suite, SuiteConfig, SUITE_NAMES};
use planarb::{MultiPoly, Params, Rational};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "planarb",
    version,
    about = "Exact planar harmonic polynomials for the two-parameter Dunkl Laplacian"
)]
struct Cli {
    /// Number of variables (at least 3).
    #[arg(long = "N", global = true, default_value_t = 3)]
    nvars: usize,

    /// Reflection coupling as a nonnegative rational `p/q`. Defaults to 1/3;
    /// when omitted, `verify` samples couplings from the seed instead.
    #[arg(long, global = true, value_parser = parse_rational)]
    k: Option<Rational>,

    /// Sign-flip coupling as a nonnegative rational `p/q`. Defaults to 1/2;
    /// when omitted, `verify` samples couplings from the seed instead.
    #[arg(long, global = true, value_parser = parse_rational)]
    k1: Option<Rational>,

    /// Seed for the deterministic verification streams.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Coupling samples per verification suite.
    #[arg(long, global = true, default_value_t = 2)]
    samples: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Largest family index used by `verify` and `table`.
    #[arg(long = "max-n", global = true, default_value_t = 6)]
    max_n: u32,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one polynomial and print it.
    Build(BuildArgs),
    /// Run verification suites and print one line per suite.
    Verify(VerifyArgs),
    /// Tabulate closed forms next to direct computation.
    Table(TableArgs),
    /// Oscillator eigenfunction commands.
    Calogero(CalogeroArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Family index `n` of `h_{n,eps}`.
    #[arg(long, conflicts_with_all = ["basis", "alpha"])]
    n: Option<u32>,

    /// Family index `eps` of `h_{n,eps}` (0 or 1).
    #[arg(long, default_value_t = 0)]
    eps: u8,

    /// Generating table to read instead of a family.
    #[arg(long, value_enum, requires = "order", conflicts_with = "alpha")]
    basis: Option<TableChoice>,

    /// Row of the generating table.
    #[arg(long, requires = "basis")]
    order: Option<u32>,

    /// Column of the generating table.
    #[arg(long, default_value_t = 0, requires = "basis")]
    j: u32,

    /// Comma-separated composition for a shifted-basis product, printed in
    /// squared variables.
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum TableChoice {
    Phi,
    Psi,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run (repeatable); defaults to every suite.
    #[arg(long = "suite")]
    suites: Vec<String>,

    /// Plants a broken polynomial so the harness must fail (self test).
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(subcommand)]
    which: TableCmd,
}

#[derive(Subcommand)]
enum TableCmd {
    /// Values at the all-ones point.
    Values,
    /// Leading coefficients for both distinguished monomials.
    Leading,
    /// Quadratic norms by the pairing route and the closed route.
    Norms,
}

#[derive(Args)]
struct CalogeroArgs {
    #[command(subcommand)]
    cmd: CalogeroCmd,
}

#[derive(Subcommand)]
enum CalogeroCmd {
    /// Verify one eigenfunction relation exactly.
    Check(CalogeroCheckArgs),
}

#[derive(Args)]
struct CalogeroCheckArgs {
    /// Family index `n` of the harmonic factor.
    #[arg(long)]
    m: u32,

    /// Family index `eps` of the harmonic factor (0 or 1).
    #[arg(long, default_value_t = 0)]
    eps: u8,

    /// Radial index.
    #[arg(long, default_value_t = 0)]
    n: u32,

    /// Oscillator frequency as a positive rational `p/q`.
    #[arg(long, value_parser = parse_rational)]
    omega: Rational,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn build_params(cli: &Cli) -> Params {
    let k = cli.k.clone().unwrap_or_else(|| rat(1, 3));
    let k1 = cli.k1.clone().unwrap_or_else(|| rat(1, 2));
    Params::new(cli.nvars, k, k1)
}

fn render(poly: &MultiPoly, format: Format) -> String {
    match format {
        Format::Json => poly.to_canonical_json(),
        Format::Csv => poly.to_csv().trim_end().to_string(),
        Format::Latex => poly.to_latex(),
    }
}

fn cmd_build(cli: &Cli, args: &BuildArgs) -> ExitCode {
    let modes =
        usize::from(args.n.is_some()) + usize::from(args.basis.is_some()) + usize::from(args.alpha.is_some());
    if modes != 1 {
        return usage_error("build needs exactly one of --n, --basis, --alpha");
    }
    let p = build_params(cli);
    let poly = if let Some(n) = args.n {
        if args.eps > 1 {
            return usage_error("--eps must be 0 or 1");
        }
        let label = HarmonicLabel::new(n, args.eps);
        let ctx = HarmonicContext::new(p, label.degree());
        ctx.build(label)
    } else if let Some(choice) = args.basis {
        let order = args.order.expect("clap enforces --order with --basis");
        if args.j > order {
            return usage_error("--j cannot exceed --order");
        }
        let kind = match choice {
            TableChoice::Phi => BasisKind::Phi,
            TableChoice::Psi => BasisKind::Psi,
        };
        SeriesTable::expand(kind, order, &p).entry(i64::from(order), i64::from(args.j))
    } else {
        let text = args.alpha.as_deref().expect("mode checked above");
        let mut alpha = Vec::new();
        for part in text.split(',') {
            match part.trim().parse::<u32>() {
                Ok(v) => alpha.push(v),
                Err(_) => return usage_error("--alpha must be a comma-separated list of nonnegative integers"),
            }
        }
        if alpha.len() != cli.nvars {
            return usage_error("--alpha must have one entry per variable");
        }
        p_alpha(&alpha, &p).0
    };
    println!("{}", render(&poly, cli.format));
    ExitCode::SUCCESS
}

fn suite_config(cli: &Cli, corrupt: bool) -> SuiteConfig {
    let m = cli.max_n;
    SuiteConfig {
        seed: cli.seed,
        samples: cli.samples,
        sizes: vec![cli.nvars],
        fixed: if cli.k.is_some() || cli.k1.is_some() {
            Some((
                cli.k.clone().unwrap_or_else(|| rat(1, 3)),
                cli.k1.clone().unwrap_or_else(|| rat(1, 2)),
            ))
        } else {
            None
        },
        max_label: m,
        max_norm_label: m.min(6),
        max_recurrence: m.min(4),
        max_p_degree: m.min(6),
        max_weight: m.clamp(1, 5),
        max_eigen_degree: m.min(6),
        max_radial: 2,
        hyp_tuples: (20, 20, 10),
        corrupt,
    }
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> ExitCode {
    let mut requested: Vec<&str> = Vec::new();
    if args.suites.is_empty() {
        requested.extend(SUITE_NAMES);
    } else {
        for s in &args.suites {
            if !SUITE_NAMES.contains(&s.as_str()) {
                eprintln!(
                    "error: unknown suite `{s}` (known: {})",
                    SUITE_NAMES.join(", ")
                );
                return ExitCode::from(2);
            }
            requested.push(s.as_str());
        }
    }
    let cfg = suite_config(cli, args.corrupt);
    let mut checks = 0u64;
    let mut failed = 0u64;
    for name in requested {
        let outcome = run_suite(name, &cfg).expect("name validated above");
        println!("{}", outcome.summary());
        checks += outcome.checks;
        if !outcome.passed() {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("VERIFIED ({checks} checks)");
        ExitCode::SUCCESS
    } else {
        println!("FAILED ({failed} suites)");
        ExitCode::from(1)
    }
}

fn print_table(format: Format, headers: &[&str], rows: &[Vec<String>]) {
    match format {
        Format::Csv => {
            println!("{}", headers.join(","));
            for r in rows {
                println!("{}", r.join(","));
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{{}}}", "l".repeat(headers.len()));
            println!("{} \\\\", headers.join(" & "));
            for r in rows {
                println!("{} \\\\", r.join(" & "));
            }
            println!("\\end{{tabular}}");
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut m = serde_json::Map::new();
                    for (h, v) in headers.iter().zip(r) {
                        m.insert((*h).to_string(), serde_json::Value::String(v.clone()));
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            println!("{}", serde_json::Value::Array(objects));
        }
    }
}

fn agree(ok: bool) -> String {
    if ok { "yes".into() } else { "no".into() }
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

fn cmd_table(cli: &Cli, which: &TableCmd) -> ExitCode {
    let p = build_params(cli);
    let ctx = HarmonicContext::new(p.clone(), cli.max_n + 1);
    let mut all_agree = true;
    match which {
        TableCmd::Values => {
            let ones = vec![Rational::from_integer(1.into()); cli.nvars];
            let mut rows = Vec::new();
            for label in labels_up_to(cli.max_n) {
                let direct = ctx.build(label).eval(&ones);
                let closed = value_at_ones(label, &p);
                let ok = direct == closed;
                all_agree &= ok;
                rows.push(vec![
                    label.n.to_string(),
                    label.eps.to_string(),
                    format_rational(&closed),
                    format_rational(&direct),
                    agree(ok),
                ]);
            }
            print_table(cli.format, &["n", "eps", "closed", "direct", "agree"], &rows);
        }
        TableCmd::Leading => {
            let mut rows = Vec::new();
            for label in labels_up_to(cli.max_n) {
                let h = ctx.build(label);
                for which in [LeadingMonomial::Primary, LeadingMonomial::Companion] {
                    let mono = leading_monomial(label, which, cli.nvars);
                    let direct = h.coeff(&mono);
                    let closed = leading_coefficient(label, which, &p);
                    let ok = direct == closed;
                    all_agree &= ok;
                    let mono_text = mono
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                    rows.push(vec![
                        label.n.to_string(),
                        label.eps.to_string(),
                        format!("{which:?}"),
                        mono_text,
                        format_rational(&closed),
                        format_rational(&direct),
                        agree(ok),
                    ]);
                }
            }
            print_table(
                cli.format,
                &["n", "eps", "monomial", "exponents", "closed", "direct", "agree"],
                &rows,
            );
        }
        TableCmd::Norms => {
            let mut rows = Vec::new();
            for label in labels_up_to(cli.max_n) {
                let (value, ok) = match norm_squared(&ctx, label) {
                    Ok(ns) => (format_rational(&ns.value), true),
                    Err(_) => ("n/a".into(), false),
                };
                all_agree &= ok;
                rows.push(vec![
                    label.n.to_string(),
                    label.eps.to_string(),
                    value,
                    agree(ok),
                ]);
            }
            print_table(cli.format, &["n", "eps", "norm", "agree"], &rows);
        }
    }
    if all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_calogero(cli: &Cli, args: &CalogeroCheckArgs) -> ExitCode {
    if args.eps > 1 {
        return usage_error("--eps must be 0 or 1");
    }
    if args.omega <= rat_int(0) {
        return usage_error("--omega must be positive");
    }
    let p = build_params(cli);
    let cp = CalogeroParams::new(p.clone(), args.omega.clone());
    let label = HarmonicLabel::new(args.m, args.eps);
    let ctx = HarmonicContext::new(p, label.degree());
    let el = EigenLabel::new(label.degree(), args.n, &cp);
    let u = eigenfunction(&ctx, label, args.n, &cp);
    let ok = conjugated_hamiltonian(&u, &cp) == u.scale(&el.eigenvalue(&cp));
    println!(
        "{} h[{},{}] radial {} eigenvalue {}",
        if ok { "PASS" } else { "FAIL" },
        args.m,
        args.eps,
        args.n,
        format_rational(&el.eigenvalue(&cp))
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.nvars < 3 {
        return usage_error("--N must be at least 3");
    }
    for (name, value) in [("--k", &cli.k), ("--k1", &cli.k1)] {
        if let Some(v) = value {
            if *v < rat_int(0) {
                return usage_error(&format!("{name} must be nonnegative"));
            }
        }
    }
    match &cli.cmd {
        Cmd::Build(args) => cmd_build(&cli, args),
        Cmd::Verify(args) => cmd_verify(&cli, args),
        Cmd::Table(args) => cmd_table(&cli, &args.which),
        Cmd::Calogero(args) => {
            let CalogeroCmd::Check(check) = &args.cmd;
            cmd_calogero(&cli, check)
        }
    }
}
