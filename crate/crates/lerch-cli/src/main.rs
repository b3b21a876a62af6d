//! `lerch` — command-line evaluation of the pole-free Lerch combination
//! `F(z,s,a) = Φ(z,s,a) − Li_s(z)·z^(−a)` and finite power sums.
//!
//! Subcommands: point evaluation (`eval-f`, `eval-eta`, `eval-phi`),
//! coefficient inspection (`coeffs`), the built-in relative-error table
//! (`table1`), error sweeps over `z` or `a` (`sweep`), and the
//! cross-validation property suite (`check`).
//!
//! Exit codes: `0` success; `1` evaluation failure (accuracy, convergence)
//! or a failed property check; `2` domain or usage violation, with a
//! one-line reason on standard error; `64` unparseable command line.

mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lerch_core::error::Result;
use lerch_core::scalar::{as_positive_integer, cplx, format_complex, parse_complex};
use lerch_core::{
    evaluate_eta, evaluate_f_convergent, expand_f, expand_phi_classic, f_quadrature, phi_series,
    reproduce_table1, run_property_suite, select_truncation, sweep_figure2, CoefficientTable,
    ComplexScalar, Error, EtaMethod, ExpansionResult, PathSelect, QuadratureSettings, SweepAxis,
    ValidationReport,
};
use output::{csv_text, emit, scalar_json, sig10_complex, Format};

/// Default tolerance for the tolerance-driven routes (convergent series,
/// defining series).
const DEFAULT_TOL: f64 = 1e-14;

/// Term budget for the convergent integer-`a` series. Its terms decay like a
/// power of `n`, so it legitimately needs far more terms than the asymptotic
/// truncation order ever should; it is deliberately not tied to
/// `LERCH_MAX_ORDER`.
const CONVERGENT_TERM_BUDGET: usize = 4000;

/// Default cap on expansion orders when `LERCH_MAX_ORDER` is not set.
const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Parser)]
#[command(
    name = "lerch",
    version,
    about = "Evaluate the pole-free Lerch combination F(z,s,a), finite power sums, \
             and the expansions and validation datasets behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate F(z,s,a) = Phi(z,s,a) - Li_s(z) * z^(-a)
    #[command(name = "eval-f")]
    EvalF(EvalFArgs),
    /// Evaluate the finite power sum eta(z,s,m) = sum_{n=1..m} z^n/n^s
    #[command(name = "eval-eta")]
    EvalEta(EvalEtaArgs),
    /// Evaluate the Lerch transcendent Phi(z,s,a)
    #[command(name = "eval-phi")]
    EvalPhi(EvalPhiArgs),
    /// Print the kernel Taylor coefficients C_0..C_n (with c_n, p_n)
    #[command(name = "coeffs")]
    Coeffs(CoeffsArgs),
    /// Reproduce the built-in relative-error table and compare every cell
    #[command(name = "table1")]
    Table1(Table1Args),
    /// Sample expansion error along a sweep in z or in a
    #[command(name = "sweep")]
    Sweep(SweepArgs),
    /// Run the cross-validation property suite; exits nonzero on any failure
    #[command(name = "check")]
    Check(CheckArgs),
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalFArgs {
    /// Argument z, as "re" or "re+imi" (e.g. "2", "10+1i")
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    z: ComplexScalar,
    /// Exponent s
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    s: ComplexScalar,
    /// Shift a, the large parameter of the expansion
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    a: ComplexScalar,
    /// Truncation order; picked by smallest-term search when omitted
    #[arg(long)]
    order: Option<usize>,
    /// Evaluation route
    #[arg(long, value_enum, default_value_t = FMethod::Asymptotic)]
    method: FMethod,
    /// Tolerance for the convergent and quadrature routes
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FMethod {
    /// Truncated large-a expansion
    Asymptotic,
    /// Convergent series; needs a positive integer a
    Convergent,
    /// Adaptive quadrature of the pole-free integral
    Quadrature,
}

#[derive(Args)]
struct EvalEtaArgs {
    /// Base z, as "re" or "re+imi"
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    z: ComplexScalar,
    /// Exponent s
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    s: ComplexScalar,
    /// Number of terms (the upper summation limit)
    #[arg(long)]
    m: u32,
    /// Evaluation route
    #[arg(long, value_enum, default_value_t = EtaMethodArg::Direct)]
    method: EtaMethodArg,
    /// Truncation order for the asymptotic route; auto-selected when omitted
    #[arg(long)]
    order: Option<usize>,
    /// Tolerance for the convergent route
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EtaMethodArg {
    /// Direct term-by-term summation
    Direct,
    /// Via the truncated large-a expansion of F(z,s,m+1)
    Asymptotic,
    /// Via the convergent series for F(z,s,m+1)
    Convergent,
}

#[derive(Args)]
struct EvalPhiArgs {
    /// Argument z, as "re" or "re+imi"
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    z: ComplexScalar,
    /// Exponent s
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    s: ComplexScalar,
    /// Shift a
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    a: ComplexScalar,
    /// Evaluation route
    #[arg(long, value_enum, default_value_t = PhiMethodArg::Series)]
    method: PhiMethodArg,
    /// Truncation order; required for the asymptotic route
    #[arg(long)]
    order: Option<usize>,
    /// Tolerance for the series route
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PhiMethodArg {
    /// Defining series; converges for |z| < 1
    Series,
    /// Classic large-a expansion of Phi, off the ray z >= 1
    Asymptotic,
}

#[derive(Args)]
struct CoeffsArgs {
    /// Argument z, as "re" or "re+imi"
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    z: ComplexScalar,
    /// Shift a
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    a: ComplexScalar,
    /// Highest coefficient order to print
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Coefficient computation path
    #[arg(long, value_enum, default_value_t = PathArg::Auto)]
    path: PathArg,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PathArg {
    /// Integer-direct for positive integer a, explicit otherwise
    Auto,
    /// Closed form c_n - z^(1-a) p_n (Bernoulli form at z = 1)
    Explicit,
    /// Triangular recurrence
    Recurrence,
    /// Finite power sum; needs a positive integer a
    IntegerDirect,
}

#[derive(Args)]
struct Table1Args {
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct SweepArgs {
    /// Built-in sweep: i/ii vary z in [1,10] at a=5/a=10 (s=1, orders
    /// 1,3,5); iii/iv vary a in [1,10] at z=2/z=5 (s=1, orders 2,5,10)
    #[arg(long, value_enum,
          conflicts_with_all = ["axis", "z", "a", "s", "from", "to", "orders"])]
    panel: Option<Panel>,
    /// Sweep variable of a custom sweep
    #[arg(long, value_enum, required_unless_present = "panel")]
    axis: Option<AxisArg>,
    /// Fixed z for an a-axis sweep
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    z: Option<ComplexScalar>,
    /// Fixed a for a z-axis sweep
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    a: Option<ComplexScalar>,
    /// Exponent s
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true, required_unless_present = "panel")]
    s: Option<ComplexScalar>,
    /// Lower end of the sweep range
    #[arg(long, allow_hyphen_values = true, required_unless_present = "panel")]
    from: Option<f64>,
    /// Upper end of the sweep range
    #[arg(long, allow_hyphen_values = true, required_unless_present = "panel")]
    to: Option<f64>,
    /// Truncation orders evaluated at every sample, comma-separated
    #[arg(long, value_delimiter = ',', required_unless_present = "panel")]
    orders: Vec<usize>,
    /// Number of evenly spaced samples
    #[arg(long, default_value_t = 91)]
    samples: usize,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Panel {
    I,
    Ii,
    Iii,
    Iv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    Z,
    A,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    output: OutputOpts,
}

fn complex_arg(text: &str) -> std::result::Result<ComplexScalar, String> {
    parse_complex(text).map_err(|e| match e {
        Error::Usage(msg) => msg,
        other => other.to_string(),
    })
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                let _ = e.print();
                std::process::exit(0);
            }
            let _ = e.print();
            std::process::exit(64);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(best) = e.best_value() {
                eprintln!("best estimate: {}", format_complex(best));
            }
            match e {
                Error::Domain(_) | Error::Usage(_) => 2,
                Error::Accuracy { .. }
                | Error::NoConvergence { .. }
                | Error::DegenerateReference { .. } => 1,
            }
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::EvalF(args) => {
            let text = eval_f_text(&args)?;
            emit(args.output.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::EvalEta(args) => {
            let text = eval_eta_text(&args)?;
            emit(args.output.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::EvalPhi(args) => {
            let text = eval_phi_text(&args)?;
            emit(args.output.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Coeffs(args) => {
            let text = coeffs_text(&args)?;
            emit(args.output.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Table1(args) => {
            let report = reproduce_table1();
            let text = report_text(&report, args.output.format);
            emit(args.output.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Sweep(args) => {
            let text = sweep_text(&args)?;
            emit(args.output.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Check(args) => run_check(&args),
    }
}

// ---------------------------------------------------------------------------
// Order budget
// ---------------------------------------------------------------------------

/// Expansion-order cap from `LERCH_MAX_ORDER` (default 64). Explicit
/// `--order`/`--n` requests above the cap are rejected, and automatic order
/// selection searches up to it. Built-in datasets (`table1`, `--panel`) use
/// their fixed orders.
fn order_cap() -> Result<usize> {
    match std::env::var("LERCH_MAX_ORDER") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_ORDER),
        Err(std::env::VarError::NotUnicode(_)) => Err(Error::Usage(
            "LERCH_MAX_ORDER must be a positive integer".into(),
        )),
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "LERCH_MAX_ORDER must be a positive integer, got '{raw}'"
                ))
            }),
    }
}

fn validate_order(n: usize, cap: usize, flag: &str) -> Result<()> {
    if n == 0 {
        Err(Error::Usage(format!("{flag} must be at least 1")))
    } else if n > cap {
        Err(Error::Usage(format!(
            "{flag} {n} exceeds the LERCH_MAX_ORDER cap of {cap}"
        )))
    } else {
        Ok(())
    }
}

fn reject_order(order: Option<usize>, method: &str) -> Result<()> {
    if order.is_some() {
        Err(Error::Usage(format!(
            "--order applies to the asymptotic route, not {method}"
        )))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Point evaluation
// ---------------------------------------------------------------------------

fn eval_f_text(args: &EvalFArgs) -> Result<String> {
    let (z, s, a) = (args.z, args.s, args.a);
    let inputs = [("z", z), ("s", s), ("a", a)];
    match args.method {
        FMethod::Asymptotic => {
            let cap = order_cap()?;
            let order = match args.order {
                Some(n) => {
                    validate_order(n, cap, "--order")?;
                    n
                }
                None => select_truncation(z, s, a, cap)?,
            };
            let r = expand_f(z, s, a, order)?;
            Ok(expansion_eval_text(args.output.format, &inputs, "asymptotic", &r))
        }
        FMethod::Convergent => {
            reject_order(args.order, "the convergent route")?;
            let m = as_positive_integer(a).ok_or_else(|| {
                Error::Usage("the convergent route needs a positive integer a".into())
            })?;
            let tol = args.tol.unwrap_or(DEFAULT_TOL);
            let r = evaluate_f_convergent(z, s, m, tol, CONVERGENT_TERM_BUDGET)?;
            Ok(expansion_eval_text(args.output.format, &inputs, "convergent", &r))
        }
        FMethod::Quadrature => {
            reject_order(args.order, "the quadrature route")?;
            let mut settings = QuadratureSettings::default();
            if let Some(t) = args.tol {
                settings.abs_tol = t;
                settings.rel_tol = t;
            }
            let v = f_quadrature(z, s, a, &settings)?;
            Ok(plain_eval_text(args.output.format, &inputs, "quadrature", v))
        }
    }
}

fn eval_eta_text(args: &EvalEtaArgs) -> Result<String> {
    let (z, s, m) = (args.z, args.s, args.m);
    let inputs = [("z", z), ("s", s), ("m", cplx(f64::from(m), 0.0))];
    match args.method {
        EtaMethodArg::Direct => {
            reject_order(args.order, "the direct route")?;
            let v = evaluate_eta(z, s, m, EtaMethod::Direct)?;
            Ok(plain_eval_text(args.output.format, &inputs, "direct", v))
        }
        EtaMethodArg::Asymptotic => {
            let cap = order_cap()?;
            let shift = m.checked_add(1).ok_or_else(|| {
                Error::Usage("m is too large for the expansion-based route".into())
            })?;
            let order = match args.order {
                Some(n) => {
                    validate_order(n, cap, "--order")?;
                    n
                }
                None => select_truncation(z, s, cplx(f64::from(shift), 0.0), cap)?,
            };
            let v = evaluate_eta(z, s, m, EtaMethod::Asymptotic(order))?;
            Ok(eval_text(
                args.output.format,
                &inputs,
                "asymptotic",
                Some(order),
                v,
                None,
                &[],
            ))
        }
        EtaMethodArg::Convergent => {
            reject_order(args.order, "the convergent route")?;
            let tol = args.tol.unwrap_or(DEFAULT_TOL);
            let v = evaluate_eta(z, s, m, EtaMethod::Convergent(tol))?;
            Ok(plain_eval_text(args.output.format, &inputs, "convergent", v))
        }
    }
}

fn eval_phi_text(args: &EvalPhiArgs) -> Result<String> {
    let (z, s, a) = (args.z, args.s, args.a);
    let inputs = [("z", z), ("s", s), ("a", a)];
    match args.method {
        PhiMethodArg::Series => {
            reject_order(args.order, "the series route")?;
            let v = phi_series(z, s, a, args.tol.unwrap_or(DEFAULT_TOL))?;
            Ok(plain_eval_text(args.output.format, &inputs, "series", v))
        }
        PhiMethodArg::Asymptotic => {
            let cap = order_cap()?;
            let n = args.order.ok_or_else(|| {
                Error::Usage("the asymptotic route needs an explicit --order".into())
            })?;
            validate_order(n, cap, "--order")?;
            let r = expand_phi_classic(z, s, a, n)?;
            Ok(expansion_eval_text(args.output.format, &inputs, "asymptotic", &r))
        }
    }
}

fn expansion_eval_text(
    fmt: Format,
    inputs: &[(&str, ComplexScalar)],
    method: &str,
    r: &ExpansionResult,
) -> String {
    eval_text(
        fmt,
        inputs,
        method,
        Some(r.order_used),
        r.value,
        Some(r.remainder_estimate),
        &r.diagnostics,
    )
}

fn plain_eval_text(
    fmt: Format,
    inputs: &[(&str, ComplexScalar)],
    method: &str,
    value: ComplexScalar,
) -> String {
    eval_text(fmt, inputs, method, None, value, None, &[])
}

/// The single-value output contract: json is the bare value, human is the
/// 10-digit value followed by context lines, csv is one row echoing the
/// inputs.
fn eval_text(
    fmt: Format,
    inputs: &[(&str, ComplexScalar)],
    method: &str,
    order: Option<usize>,
    value: ComplexScalar,
    remainder: Option<f64>,
    notes: &[String],
) -> String {
    match fmt {
        Format::Json => scalar_json(value),
        Format::Human => {
            let mut lines = vec![sig10_complex(value), format!("method: {method}")];
            if let Some(n) = order {
                lines.push(format!("order used: {n}"));
            }
            if let Some(est) = remainder {
                lines.push(format!("remainder estimate: {est:.2e}"));
            }
            lines.extend(notes.iter().cloned());
            lines.join("\n")
        }
        Format::Csv => {
            let mut header: Vec<&str> = inputs.iter().map(|(k, _)| *k).collect();
            header.extend(["method", "order", "value", "remainder_estimate"]);
            let mut row: Vec<String> = inputs.iter().map(|(_, v)| format_complex(*v)).collect();
            row.push(method.into());
            row.push(order.map(|n| n.to_string()).unwrap_or_default());
            row.push(format_complex(value));
            row.push(remainder.map(|x| format!("{x}")).unwrap_or_default());
            csv_text(&header, &[row])
        }
    }
}

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

fn coeffs_text(args: &CoeffsArgs) -> Result<String> {
    let cap = order_cap()?;
    if args.n > cap {
        return Err(Error::Usage(format!(
            "--n {} exceeds the LERCH_MAX_ORDER cap of {cap}",
            args.n
        )));
    }
    let path = match args.path {
        PathArg::Auto => PathSelect::Auto,
        PathArg::Explicit => PathSelect::Explicit,
        PathArg::Recurrence => PathSelect::Recurrence,
        PathArg::IntegerDirect => PathSelect::IntegerDirect,
    };
    let table = CoefficientTable::build(args.z, args.a, path, args.n)?;
    Ok(match args.output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct CoeffsDump<'a> {
                z: [f64; 2],
                a: [f64; 2],
                path: &'a str,
                c: Vec<[f64; 2]>,
                p: Vec<[f64; 2]>,
                #[serde(rename = "C")]
                big_c: Vec<[f64; 2]>,
                diagnostics: &'a [String],
            }
            let pair = |v: &ComplexScalar| [v.re, v.im];
            let dump = CoeffsDump {
                z: pair(&table.z),
                a: pair(&table.a),
                path: table.path.name(),
                c: table.c.iter().map(pair).collect(),
                p: table.p.iter().map(pair).collect(),
                big_c: table.big_c.iter().map(pair).collect(),
                diagnostics: &table.diagnostics,
            };
            serde_json::to_string(&dump).expect("coefficient dump serializes")
        }
        Format::Human => {
            let mut lines = vec![format!("path: {}", table.path.name())];
            lines.extend(table.diagnostics.iter().cloned());
            for k in 0..=table.order() {
                let mut line = format!("C_{k} = {}", sig10_complex(table.big_c[k]));
                if !table.c.is_empty() {
                    line.push_str(&format!(
                        "   (c_{k} = {}, p_{k} = {})",
                        sig10_complex(table.c[k]),
                        sig10_complex(table.p[k])
                    ));
                }
                lines.push(line);
            }
            lines.join("\n")
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = (0..=table.order())
                .map(|k| {
                    vec![
                        k.to_string(),
                        table.c.get(k).map(|v| format_complex(*v)).unwrap_or_default(),
                        table.p.get(k).map(|v| format_complex(*v)).unwrap_or_default(),
                        format_complex(table.big_c[k]),
                    ]
                })
                .collect();
            csv_text(&["n", "c", "p", "C"], &rows)
        }
    })
}

// ---------------------------------------------------------------------------
// Reports (table1, sweep)
// ---------------------------------------------------------------------------

fn report_text(report: &ValidationReport, fmt: Format) -> String {
    match fmt {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Human => report_human(report),
    }
}

fn report_human(report: &ValidationReport) -> String {
    let mut lines = vec![
        format!("reference method: {}", report.reference_method),
        format!("timestamp: {}", report.timestamp),
        format!("tolerance policy: {}", report.tolerance_policy),
        String::new(),
    ];
    for row in &report.rows {
        let mut line = format!(
            "z={} s={} a={} n={}  rel_error={:.3e}",
            format_complex(row.z),
            format_complex(row.s),
            format_complex(row.a),
            row.n,
            row.rel_error,
        );
        if let Some(p) = row.expected {
            line.push_str(&format!(
                "  expected={:.2e}  {}",
                p,
                if row.pass { "PASS" } else { "FAIL" }
            ));
        }
        if !row.note.is_empty() {
            line.push_str(&format!("  [{}]", row.note));
        }
        lines.push(line);
    }
    lines.push(String::new());
    let tabulated = report.rows.iter().filter(|r| r.expected.is_some()).count();
    if tabulated > 0 {
        let passed = report.rows.iter().filter(|r| r.pass).count();
        lines.push(format!("{passed}/{tabulated} tabulated rows pass"));
    } else {
        lines.push(format!(
            "{} rows; no tabulated expected values (see tolerance policy)",
            report.rows.len()
        ));
    }
    lines.join("\n")
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

fn sweep_text(args: &SweepArgs) -> Result<String> {
    let cap = order_cap()?;
    let axis = sweep_axis(args, cap)?;
    let report = sweep_figure2(axis, args.samples)?;
    Ok(report_text(&report, args.output.format))
}

fn sweep_axis(args: &SweepArgs, cap: usize) -> Result<SweepAxis> {
    if let Some(panel) = args.panel {
        let one = cplx(1.0, 0.0);
        return Ok(match panel {
            Panel::I => SweepAxis::ZAxis {
                a: cplx(5.0, 0.0),
                s: one,
                z_range: (1.0, 10.0),
                orders: vec![1, 3, 5],
            },
            Panel::Ii => SweepAxis::ZAxis {
                a: cplx(10.0, 0.0),
                s: one,
                z_range: (1.0, 10.0),
                orders: vec![1, 3, 5],
            },
            Panel::Iii => SweepAxis::AAxis {
                z: cplx(2.0, 0.0),
                s: one,
                a_range: (1.0, 10.0),
                orders: vec![2, 5, 10],
            },
            Panel::Iv => SweepAxis::AAxis {
                z: cplx(5.0, 0.0),
                s: one,
                a_range: (1.0, 10.0),
                orders: vec![2, 5, 10],
            },
        });
    }
    // clap guarantees presence of these whenever --panel is absent.
    let axis = args.axis.expect("clap requires --axis");
    let s = args.s.expect("clap requires --s");
    let from = args.from.expect("clap requires --from");
    let to = args.to.expect("clap requires --to");
    for &n in &args.orders {
        validate_order(n, cap, "--orders entry")?;
    }
    match axis {
        AxisArg::Z => {
            if args.z.is_some() {
                return Err(Error::Usage(
                    "z is the sweep variable on the z axis; pass --a for the fixed shift".into(),
                ));
            }
            let a = args
                .a
                .ok_or_else(|| Error::Usage("a z-axis sweep needs the fixed --a".into()))?;
            Ok(SweepAxis::ZAxis {
                a,
                s,
                z_range: (from, to),
                orders: args.orders.clone(),
            })
        }
        AxisArg::A => {
            if args.a.is_some() {
                return Err(Error::Usage(
                    "a is the sweep variable on the a axis; pass --z for the fixed base".into(),
                ));
            }
            let z = args
                .z
                .ok_or_else(|| Error::Usage("an a-axis sweep needs the fixed --z".into()))?;
            Ok(SweepAxis::AAxis {
                z,
                s,
                a_range: (from, to),
                orders: args.orders.clone(),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

fn run_check(args: &CheckArgs) -> Result<i32> {
    let checks = run_property_suite();
    let text = match args.output.format {
        Format::Human => {
            let mut lines: Vec<String> = checks
                .iter()
                .map(|c| {
                    format!(
                        "{} {}: {}",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        c.detail
                    )
                })
                .collect();
            let passed = checks.iter().filter(|c| c.pass).count();
            lines.push(format!("{passed}/{} checks pass", checks.len()));
            lines.join("\n")
        }
        Format::Json => {
            #[derive(Serialize)]
            struct CheckDump<'a> {
                name: &'a str,
                pass: bool,
                detail: &'a str,
            }
            let dump: Vec<CheckDump> = checks
                .iter()
                .map(|c| CheckDump {
                    name: &c.name,
                    pass: c.pass,
                    detail: &c.detail,
                })
                .collect();
            serde_json::to_string(&dump).expect("check dump serializes")
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| vec![c.name.clone(), c.pass.to_string(), c.detail.clone()])
                .collect();
            csv_text(&["name", "pass", "detail"], &rows)
        }
    };
    emit(args.output.out.as_deref(), &text)?;
    Ok(if checks.iter().all(|c| c.pass) { 0 } else { 1 })
}
