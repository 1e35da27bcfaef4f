use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Args;

use geoskew::{
    geodesical_skew, geodesical_skew_continuous, gaussian_density, verify, Alpha, Lambda,
    NormalizeMode, QuadratureConfig,
};

use crate::fmt::fmt_sig;
use crate::source::{resolve, CliError, Source};

pub fn parse_alpha(s: &str) -> Result<Alpha, String> {
    s.parse::<Alpha>().map_err(|e| e.to_string())
}

pub fn parse_lambda(s: &str) -> Result<Lambda, String> {
    s.parse::<Lambda>().map_err(|e| e.to_string())
}

#[derive(Args)]
pub struct CommonOpts {
    /// How zero weights in input files are treated
    #[arg(long, value_enum, default_value_t = Mode::Strict)]
    pub mode: Mode,
    /// Replacement for zero weights in clamp mode
    #[arg(long, default_value_t = 1e-12)]
    pub eps: f64,
    /// Absolute tolerance of the quadrature used for density sources
    #[arg(long, default_value_t = 1e-8)]
    pub quad_tol: f64,
}

#[derive(Clone, Copy, PartialEq, clap::ValueEnum)]
pub enum Mode {
    Strict,
    Clamp,
}

impl CommonOpts {
    fn normalize_mode(&self) -> NormalizeMode {
        match self.mode {
            Mode::Strict => NormalizeMode::Strict,
            Mode::Clamp => NormalizeMode::Clamp { eps: self.eps },
        }
    }

    fn quadrature(&self) -> Result<QuadratureConfig, CliError> {
        QuadratureConfig::new(32, 1, self.quad_tol).map_err(CliError::from)
    }
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Family parameter alpha (a float, `inf`, or `-inf`)
    #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
    pub alpha: Alpha,
    /// Interpolation weight lambda in [0, 1]
    #[arg(long, value_parser = parse_lambda)]
    pub lambda: Lambda,
    /// Source distribution: file path or generator
    #[arg(long)]
    pub p: String,
    /// Target distribution: file path or generator
    #[arg(long)]
    pub q: String,
    #[command(flatten)]
    pub common: CommonOpts,
}

pub fn compute(args: &ComputeArgs) -> Result<(), CliError> {
    let mode = args.common.normalize_mode();
    let p = resolve(&args.p, mode)?;
    let q = resolve(&args.q, mode)?;
    let value = match (&p, &q) {
        (Source::Discrete(p), Source::Discrete(q)) => {
            geodesical_skew(args.alpha, args.lambda, p, q)?
        }
        (Source::Continuous(p), Source::Continuous(q)) => {
            geodesical_skew_continuous(args.alpha, args.lambda, p, q, &args.common.quadrature()?)?
        }
        _ => {
            return Err(CliError::Domain(
                "p and q must both be discrete or both be densities".to_string(),
            ))
        }
    };
    println!("{}", fmt_sig(value.nats(), 12));
    Ok(())
}

#[derive(Args)]
pub struct SweepArgs {
    /// Comma-separated alpha grid
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha, allow_hyphen_values = true)]
    pub alphas: Option<Vec<Alpha>>,
    /// Comma-separated lambda grid (default: 0 to 1 in steps of 0.01)
    #[arg(long, value_delimiter = ',', value_parser = parse_lambda)]
    pub lambdas: Option<Vec<Lambda>>,
    #[arg(long, default_value = "binomial:10:0.3")]
    pub p: String,
    #[arg(long, default_value = "binomial:10:0.7")]
    pub q: String,
    /// Output CSV path
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub common: CommonOpts,
}

fn default_alphas() -> Vec<Alpha> {
    [-1.0, 0.0, 1.0, 3.0]
        .iter()
        .map(|&a| Alpha::new(a).expect("finite"))
        .collect()
}

fn percent_grid() -> Vec<Lambda> {
    (0..=100)
        .map(|i| Lambda::new(i as f64 / 100.0).expect("in range"))
        .collect()
}

fn tenth_grid() -> Vec<Lambda> {
    (0..=10)
        .map(|i| Lambda::new(i as f64 / 10.0).expect("in range"))
        .collect()
}

fn open_out(path: &Path) -> Result<BufWriter<File>, CliError> {
    let file = File::create(path)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(BufWriter::new(file))
}

fn write_line(w: &mut impl Write, line: &str) -> Result<(), CliError> {
    writeln!(w, "{line}").map_err(|e| CliError::Io(format!("write failed: {e}")))
}

pub fn sweep(args: &SweepArgs) -> Result<(), CliError> {
    let alphas = args.alphas.clone().unwrap_or_else(default_alphas);
    let lambdas = args.lambdas.clone().unwrap_or_else(percent_grid);
    if alphas.is_empty() || lambdas.is_empty() {
        return Err(CliError::Domain("sweep grids must be nonempty".to_string()));
    }
    let mode = args.common.normalize_mode();
    let p = resolve(&args.p, mode)?;
    let q = resolve(&args.q, mode)?;
    let cfg = args.common.quadrature()?;

    let mut out = open_out(&args.out)?;
    write_line(&mut out, "alpha,lambda,divergence")?;
    for &alpha in &alphas {
        for &lambda in &lambdas {
            let value = match (&p, &q) {
                (Source::Discrete(p), Source::Discrete(q)) => {
                    geodesical_skew(alpha, lambda, p, q)?
                }
                (Source::Continuous(p), Source::Continuous(q)) => {
                    geodesical_skew_continuous(alpha, lambda, p, q, &cfg)?
                }
                _ => {
                    return Err(CliError::Domain(
                        "p and q must both be discrete or both be densities".to_string(),
                    ))
                }
            };
            write_line(
                &mut out,
                &format!(
                    "{},{},{}",
                    fmt_sig(alpha.value(), 12),
                    fmt_sig(lambda.value(), 12),
                    fmt_sig(value.nats(), 12)
                ),
            )?;
        }
    }
    out.flush()
        .map_err(|e| CliError::Io(format!("write failed: {e}")))?;
    Ok(())
}

#[derive(Args)]
pub struct GaussianSweepArgs {
    /// Mean of the fixed reference distribution
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub ref_mu: f64,
    /// Variance of the fixed reference distribution
    #[arg(long, default_value_t = 0.5)]
    pub ref_var: f64,
    /// Number of input distributions (j = 1..=count; j = 1 is the reference)
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    /// Mean increment between consecutive inputs
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub mu_step: f64,
    /// Variance increment between consecutive inputs
    #[arg(long, default_value_t = 0.2)]
    pub var_step: f64,
    /// Comma-separated alpha grid
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha, allow_hyphen_values = true)]
    pub alphas: Option<Vec<Alpha>>,
    /// Comma-separated lambda grid (default: 0 to 1 in steps of 0.1)
    #[arg(long, value_delimiter = ',', value_parser = parse_lambda)]
    pub lambdas: Option<Vec<Lambda>>,
    /// Output CSV path
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub common: CommonOpts,
}

pub fn gaussian_sweep(args: &GaussianSweepArgs) -> Result<(), CliError> {
    if args.count < 1 {
        return Err(CliError::Domain("count must be at least 1".to_string()));
    }
    let alphas = args.alphas.clone().unwrap_or_else(default_alphas);
    let lambdas = args.lambdas.clone().unwrap_or_else(tenth_grid);
    if alphas.is_empty() || lambdas.is_empty() {
        return Err(CliError::Domain("sweep grids must be nonempty".to_string()));
    }
    let reference = gaussian_density(args.ref_mu, args.ref_var)?;
    let cfg = args.common.quadrature()?;

    let mut out = open_out(&args.out)?;
    write_line(&mut out, "j,mu,var,alpha,lambda,divergence")?;
    for j in 1..=args.count {
        let mu = args.ref_mu + args.mu_step * (j - 1) as f64;
        let var = args.ref_var + args.var_step * (j - 1) as f64;
        let input = gaussian_density(mu, var)?;
        for &alpha in &alphas {
            for &lambda in &lambdas {
                let value = geodesical_skew_continuous(alpha, lambda, &input, &reference, &cfg)?;
                write_line(
                    &mut out,
                    &format!(
                        "{j},{},{},{},{},{}",
                        fmt_sig(mu, 12),
                        fmt_sig(var, 12),
                        fmt_sig(alpha.value(), 12),
                        fmt_sig(lambda.value(), 12),
                        fmt_sig(value.nats(), 12)
                    ),
                )?;
            }
        }
    }
    out.flush()
        .map_err(|e| CliError::Io(format!("write failed: {e}")))?;
    Ok(())
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Seed for the property suite's random draws
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random samples per property
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

/// Run the verification suite and print one line per property. Returns
/// whether every asserted property passed.
pub fn run_verify(args: &VerifyArgs) -> bool {
    let report = verify::run(args.seed, args.samples);
    println!("seed={} samples={}", report.seed, args.samples);
    println!(
        "{:<8}{:<36}{:>12}  {:>10}  {:>8}",
        "status", "property", "worst", "tolerance", "samples"
    );
    for r in &report.records {
        let status = if !r.asserted {
            "report"
        } else if r.passed {
            "pass"
        } else {
            "FAIL"
        };
        let tol = if r.asserted {
            fmt_sig(r.tolerance, 3)
        } else {
            "-".to_string()
        };
        println!(
            "{:<8}{:<36}{:>12}  {:>10}  {:>8}",
            status,
            r.name,
            fmt_sig(r.worst, 3),
            tol,
            r.samples
        );
    }
    let ok = report.all_passed();
    println!("overall: {}", if ok { "pass" } else { "FAIL" });
    ok
}
