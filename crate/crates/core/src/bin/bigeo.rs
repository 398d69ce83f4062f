use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bigeo::apps::price_elasticity;
use bigeo::cli::{
    audit_table, comparison_tolerance, describe, eval_geometric, generate_table, write_csv,
    CliError, TableSpec, EXIT_OK,
};
use bigeo::fexpr::eval_constant;
use bigeo::ganalysis::{
    g_derivative_n_analytic, g_derivative_n_numeric, g_derivative_numeric, Sidedness,
};
use bigeo::garith::{rel_log_error, GReal};
use bigeo::gdiff::{diff_table, Direction};
use bigeo::gtaylor::{taylor_eval, taylor_factors};
use bigeo::gtrig::triplet_generate;
use bigeo::{GError, GFunction};

/// Bigeometric calculus toolkit.
#[derive(Parser)]
#[command(name = "bigeo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// G-derivative of a function at a point.
    Gderiv(GderivArgs),
    /// Table of f, its linear approximation L and geometric approximation E.
    Table(TableArgs),
    /// Evaluate an infix expression with +g, -g, *g, /g.
    Ops { expr: String },
    /// Geometric Taylor product around a base point.
    Taylor(TaylorArgs),
    /// Geometric forward or backward difference table.
    Diff(DiffArgs),
    /// Geometric Pythagorean triplet (e^{m²+1}, e^{m²-1}, e^{2m}).
    Triplet {
        #[arg(long)]
        m: u64,
    },
    /// Price elasticity and resiliency of a demand curve.
    Elasticity(ElasticityArgs),
}

/// Function given positionally or through `--fn`.
#[derive(Args)]
struct FnArg {
    #[arg(value_name = "FN")]
    positional: Option<String>,
    #[arg(long = "fn", value_name = "FN")]
    flag: Option<String>,
}

impl FnArg {
    fn function(&self, default: Option<&str>) -> Result<GFunction, CliError> {
        let text = match (&self.flag, &self.positional, default) {
            (Some(t), _, _) | (None, Some(t), _) => t.as_str(),
            (None, None, Some(d)) => d,
            (None, None, None) => {
                return Err(
                    GError::Precondition("a function is required (FN or --fn)".into()).into(),
                )
            }
        };
        Ok(GFunction::parse(text)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Numeric,
    Analytic,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

#[derive(Args)]
struct GderivArgs {
    #[command(flatten)]
    func: FnArg,
    #[arg(long, allow_hyphen_values = true)]
    at: String,
    #[arg(long, default_value_t = 1)]
    order: usize,
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    func: FnArg,
    #[arg(long, default_value = "pi/6", allow_hyphen_values = true)]
    base: String,
    #[arg(long, default_value = "-2", allow_hyphen_values = true)]
    from: String,
    #[arg(long, default_value = "5.2", allow_hyphen_values = true)]
    to: String,
    #[arg(long, default_value = "0.4", allow_hyphen_values = true)]
    step: String,
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<String>,
    /// Compare against the published reference rows.
    #[arg(long)]
    audit: bool,
}

#[derive(Args)]
struct TaylorArgs {
    #[command(flatten)]
    func: FnArg,
    #[arg(long, allow_hyphen_values = true)]
    base: String,
    #[arg(long, default_value_t = 1)]
    order: usize,
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
}

#[derive(Args)]
struct DiffArgs {
    #[command(flatten)]
    func: FnArg,
    #[arg(long, allow_hyphen_values = true)]
    base: String,
    /// Geometric step h (a raw positive value, not 1).
    #[arg(long, allow_hyphen_values = true)]
    step: String,
    #[arg(long, default_value_t = 1)]
    order: u32,
    #[arg(long, value_enum, default_value = "forward")]
    direction: DirectionArg,
}

#[derive(Args)]
struct ElasticityArgs {
    #[command(flatten)]
    func: FnArg,
    #[arg(long, allow_hyphen_values = true)]
    at: String,
}

fn number(text: &str) -> Result<f64, CliError> {
    Ok(eval_constant(text)?)
}

fn gderiv(args: &GderivArgs, out: &mut impl Write) -> Result<(), CliError> {
    let f = args.func.function(None)?;
    let x = number(&args.at)?;
    let n = args.order;
    let numeric = match args.method {
        MethodArg::Analytic => None,
        _ if n == 1 => match g_derivative_numeric(&f, x)?.outcome {
            Sidedness::TwoSided(v) => Some(Some(v)),
            Sidedness::OneSided { left, right } => {
                writeln!(out, "numeric: no two-sided limit").map_err(stdout_err)?;
                writeln!(out, "  left:  {}", describe(left)).map_err(stdout_err)?;
                writeln!(out, "  right: {}", describe(right)).map_err(stdout_err)?;
                Some(None)
            }
        },
        _ => Some(Some(g_derivative_n_numeric(&f, x, n)?)),
    };
    if let Some(Some(v)) = numeric {
        writeln!(out, "numeric:  {}", describe(v)).map_err(stdout_err)?;
    }
    let analytic = match args.method {
        MethodArg::Numeric => None,
        _ => Some(g_derivative_n_analytic(f.require_expr()?, x, n)?),
    };
    if let Some(v) = analytic {
        writeln!(out, "analytic: {}", describe(v)).map_err(stdout_err)?;
    }
    if let (Some(Some(a)), Some(b)) = (numeric, analytic) {
        let tol = comparison_tolerance();
        let gap = rel_log_error(a.log_value(), b.log_value());
        let verdict = if gap <= tol { "agree" } else { "DIFFER" };
        writeln!(out, "discrepancy: {gap:.3e} (tol {tol:e}) {verdict}").map_err(stdout_err)?;
    }
    Ok(())
}

fn table(args: &TableArgs, out: &mut impl Write) -> Result<(), CliError> {
    let spec = TableSpec {
        function: args.func.function(Some("sin(x)"))?,
        base: number(&args.base)?,
        from: number(&args.from)?,
        to: number(&args.to)?,
        step: number(&args.step)?,
    };
    let rows = generate_table(&spec)?;
    match &args.out {
        Some(path) => {
            let io_err = |source| CliError::Io {
                path: path.clone(),
                source,
            };
            let mut file = BufWriter::new(File::create(path).map_err(io_err)?);
            write_csv(&rows, &mut file).map_err(io_err)?;
            file.flush().map_err(io_err)?;
        }
        None => write_csv(&rows, &mut *out).map_err(stdout_err)?,
    }
    if args.audit {
        let mut err = io::stderr().lock();
        let _ = writeln!(err, "audit against reference rows:");
        for line in audit_table(&rows) {
            let e = match line.e_pair {
                Some((ours, published)) => {
                    format!(
                        "E {ours:.6} vs published {published:.6} (diff {:.6})",
                        ours - published
                    )
                }
                None => "E -".to_string(),
            };
            let _ = writeln!(
                err,
                "x={:>5.1}  |f diff| {:.2e}  |L diff| {:.2e}  {e}",
                line.x, line.f_dev, line.l_dev
            );
        }
    }
    Ok(())
}

fn taylor(args: &TaylorArgs, out: &mut impl Write) -> Result<(), CliError> {
    let f = args.func.function(None)?;
    let a = number(&args.base)?;
    let t = taylor_factors(&f, a, args.order)?;
    for (k, factor) in t.factors.iter().enumerate() {
        writeln!(out, "f^[{k}]({a}) = {}", describe(*factor)).map_err(stdout_err)?;
    }
    if let Some(at) = &args.at {
        let x = number(at)?;
        writeln!(out, "product at {x}: {:.6}", taylor_eval(&t, x)?).map_err(stdout_err)?;
        writeln!(out, "f({x}) = {:.6}", f.eval(x)?).map_err(stdout_err)?;
    }
    Ok(())
}

fn diff(args: &DiffArgs, out: &mut impl Write) -> Result<(), CliError> {
    let f = args.func.function(None)?;
    let a = number(&args.base)?;
    let h = GReal::from_value(number(&args.step)?)?;
    let direction = match args.direction {
        DirectionArg::Forward => Direction::Forward,
        DirectionArg::Backward => Direction::Backward,
    };
    let t = diff_table(&f, a, h, args.order, direction)?;
    for (k, row) in t.rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| v.log_form()).collect();
        writeln!(out, "k={k}: {}", cells.join(", ")).map_err(stdout_err)?;
    }
    Ok(())
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gderiv(a) => gderiv(&a, &mut out),
        Command::Table(a) => table(&a, &mut out),
        Command::Ops { expr } => {
            writeln!(out, "{}", describe(eval_geometric(&expr)?)).map_err(stdout_err)
        }
        Command::Taylor(a) => taylor(&a, &mut out),
        Command::Diff(a) => diff(&a, &mut out),
        Command::Triplet { m } => {
            let t = triplet_generate(m)?;
            writeln!(
                out,
                "{}, {}, {}",
                t.hypotenuse().log_form(),
                t.opposite().log_form(),
                t.adjacent().log_form()
            )
            .map_err(stdout_err)
        }
        Command::Elasticity(a) => {
            let f = a.func.function(None)?;
            let r = price_elasticity(&f, number(&a.at)?)?;
            writeln!(
                out,
                "E_p={:.6}, resiliency={:.6}",
                r.elasticity,
                r.resiliency.value()
            )
            .map_err(stdout_err)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::from(EXIT_OK as u8),
        Err(CliError::Io { source, .. }) if source.kind() == io::ErrorKind::BrokenPipe => {
            ExitCode::from(EXIT_OK as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
