//! Command-line interface for the alternated Julia set engine.
//!
//! Exit codes: 0 success, 1 i/o failure, 2 usage error, 3 invalid prime.

mod config;
mod parse;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};

use altjulia_core::{
    alternated_orbit, alternated_orbit_p, classify_alternated_padic, classify_connectivity,
    escape_radius, mandelbrot_member, mandelbrot_member_quadratic, orbit_trace_p,
    quartic_critical_points, render_alternated, render_mandelbrot, write_ppm, AlternatedParams,
    Error, PAdicOrbit, Rational, ViewPort, DEFAULT_SIZE_BUDGET,
};

use config::Config;

#[derive(Parser)]
#[command(
    name = "altjulia",
    version,
    about = "Alternated Julia sets over the complex numbers and the p-adic rationals"
)]
struct Cli {
    /// Flat `key = value` config file; flags override file values.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Accepted for scripted harnesses; engine output never depends on it.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render an alternated Julia set to a binary PPM image.
    Render(RenderArgs),
    /// Classify the connectivity of a complex alternated Julia set.
    ClassifyComplex(ClassifyComplexArgs),
    /// Classify the connectivity of a p-adic alternated Julia set.
    ClassifyPadic(ClassifyPadicArgs),
    /// Write an orbit trace as CSV.
    OrbitTrace(OrbitTraceArgs),
    /// Decide p-adic Mandelbrot membership of a coefficient vector.
    MandelbrotMember(MandelbrotMemberArgs),
    /// Compose two polynomials and report the critical points.
    Compose(ComposeArgs),
}

#[derive(Args)]
struct RenderArgs {
    /// Image width in pixels [default: 600]
    #[arg(long)]
    width: Option<String>,
    /// Image height in pixels [default: 600]
    #[arg(long)]
    height: Option<String>,
    /// Complex units per pixel [default: 3.0/min(width,height)]
    #[arg(long)]
    zoom: Option<String>,
    /// Center of the view, real part [default: 0]
    #[arg(long, allow_hyphen_values = true)]
    center_x: Option<String>,
    /// Center of the view, imaginary part [default: 0]
    #[arg(long, allow_hyphen_values = true)]
    center_y: Option<String>,
    /// First constant as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// Second constant as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Iteration budget [default: 256]
    #[arg(long)]
    max_iter: Option<String>,
    /// Escape threshold on |z| [default: 4.0]
    #[arg(long)]
    threshold: Option<String>,
    /// Apply the c2 map first (the swapped orbit order)
    #[arg(long, action = ArgAction::SetTrue)]
    swap_order: bool,
    /// Render the classic Mandelbrot view instead (c1/c2 are ignored)
    #[arg(long, action = ArgAction::SetTrue)]
    mandelbrot: bool,
    /// Output PPM path
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ClassifyComplexArgs {
    /// First constant as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// Second constant as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Iteration budget per critical orbit [default: 1000]
    #[arg(long)]
    max_iter: Option<String>,
}

#[derive(Args)]
struct ClassifyPadicArgs {
    /// First polynomial, degree-descending rational coefficients
    #[arg(long, allow_hyphen_values = true)]
    f1: Option<String>,
    /// Second polynomial, degree-descending rational coefficients
    #[arg(long, allow_hyphen_values = true)]
    f2: Option<String>,
    /// The prime p
    #[arg(long)]
    p: Option<String>,
    /// Iteration budget per critical orbit [default: 1000]
    #[arg(long)]
    max_iter: Option<String>,
    /// Bit-length budget for orbit values [default: 1000000]
    #[arg(long)]
    size_budget: Option<String>,
}

#[derive(Args)]
struct OrbitTraceArgs {
    /// "complex" or "padic"
    #[arg(long)]
    mode: Option<String>,
    /// Starting point: "re,im" in complex mode, "a/b" in padic mode
    #[arg(long, allow_hyphen_values = true)]
    z0: Option<String>,
    /// Complex mode: first constant as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// Complex mode: second constant as "re,im"
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Complex mode: escape radius [default: sound radius of (c1,c2)]
    #[arg(long)]
    radius: Option<String>,
    /// Padic mode: a single polynomial to iterate
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Padic mode: first alternated polynomial
    #[arg(long, allow_hyphen_values = true)]
    f1: Option<String>,
    /// Padic mode: second alternated polynomial
    #[arg(long, allow_hyphen_values = true)]
    f2: Option<String>,
    /// Padic mode: the prime p
    #[arg(long)]
    p: Option<String>,
    /// Iteration budget [default: 100]
    #[arg(long)]
    max_iter: Option<String>,
    /// Padic mode: bit-length budget [default: 1000000]
    #[arg(long)]
    size_budget: Option<String>,
    /// Output CSV path
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct MandelbrotMemberArgs {
    /// Coefficient vector "c1,c2,..." of exact rationals
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    /// The prime p
    #[arg(long)]
    p: Option<String>,
    /// Iteration budget per critical orbit [default: 1000]
    #[arg(long)]
    max_iter: Option<String>,
    /// Bit-length budget for orbit values [default: 1000000]
    #[arg(long)]
    size_budget: Option<String>,
}

#[derive(Args)]
struct ComposeArgs {
    /// Inner polynomial, degree-descending rational coefficients
    #[arg(long, allow_hyphen_values = true)]
    f1: Option<String>,
    /// Outer polynomial, degree-descending rational coefficients
    #[arg(long, allow_hyphen_values = true)]
    f2: Option<String>,
}

/// CLI failure carrying its exit code.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
    InvalidPrime(String),
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::InvalidPrime(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::InvalidPrime(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::NotPrime(_) => CliError::InvalidPrime(err.to_string()),
            Error::Io(_) => CliError::Io(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            if matches!(err, CliError::Usage(_)) {
                eprintln!("run with --help for usage");
            }
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
            Config::parse(&text).map_err(CliError::Usage)?
        }
        None => Config::empty(),
    };
    let ctx = Ctx { config };
    match cli.command {
        Command::Render(args) => cmd_render(&ctx, args),
        Command::ClassifyComplex(args) => cmd_classify_complex(&ctx, args),
        Command::ClassifyPadic(args) => cmd_classify_padic(&ctx, args),
        Command::OrbitTrace(args) => cmd_orbit_trace(&ctx, args),
        Command::MandelbrotMember(args) => cmd_mandelbrot_member(&ctx, args),
        Command::Compose(args) => cmd_compose(&ctx, args),
    }
}

/// Resolves flag-vs-config precedence and typed parsing.
struct Ctx {
    config: Config,
}

impl Ctx {
    /// The flag value if given, else the config value under `key`.
    fn lookup(&self, flag: Option<String>, key: &str) -> Option<String> {
        flag.or_else(|| self.config.get(key).map(str::to_string))
    }

    fn required(&self, flag: Option<String>, key: &str) -> Result<String, CliError> {
        self.lookup(flag, key)
            .ok_or_else(|| CliError::usage(format!("missing required --{key}")))
    }

    fn parsed<T>(
        &self,
        flag: Option<String>,
        key: &str,
        parser: impl Fn(&str) -> Result<T, String>,
    ) -> Result<Option<T>, CliError> {
        self.lookup(flag, key)
            .map(|text| parser(&text).map_err(CliError::Usage))
            .transpose()
    }

    fn required_parsed<T>(
        &self,
        flag: Option<String>,
        key: &str,
        parser: impl Fn(&str) -> Result<T, String>,
    ) -> Result<T, CliError> {
        let text = self.required(flag, key)?;
        parser(&text).map_err(CliError::Usage)
    }

    fn u32_or(&self, flag: Option<String>, key: &str, default: u32) -> Result<u32, CliError> {
        Ok(self
            .parsed(flag, key, |t| parse::uint(t, key))?
            .unwrap_or(default))
    }

    fn u64_or(&self, flag: Option<String>, key: &str, default: u64) -> Result<u64, CliError> {
        Ok(self
            .parsed(flag, key, |t| parse::uint64(t, key))?
            .unwrap_or(default))
    }

    fn f64_or(&self, flag: Option<String>, key: &str, default: f64) -> Result<f64, CliError> {
        Ok(self
            .parsed(flag, key, |t| parse::real(t, key))?
            .unwrap_or(default))
    }

    /// Presence-style flag with a config fallback.
    fn flag_or(&self, set: bool, key: &str) -> Result<bool, CliError> {
        if set {
            return Ok(true);
        }
        Ok(self
            .config
            .get(key)
            .map(|t| parse::boolean(t, key).map_err(CliError::Usage))
            .transpose()?
            .unwrap_or(false))
    }
}

fn positive_u32(value: u32, what: &str) -> Result<u32, CliError> {
    if value == 0 {
        return Err(CliError::usage(format!("--{what} must be at least 1")));
    }
    Ok(value)
}

fn cmd_render(ctx: &Ctx, args: RenderArgs) -> Result<(), CliError> {
    let width = positive_u32(ctx.u32_or(args.width, "width", 600)?, "width")?;
    let height = positive_u32(ctx.u32_or(args.height, "height", 600)?, "height")?;
    let default_zoom = 3.0 / width.min(height) as f64;
    let zoom = ctx.f64_or(args.zoom, "zoom", default_zoom)?;
    if zoom <= 0.0 {
        return Err(CliError::usage("--zoom must be positive"));
    }
    let center_x = ctx.f64_or(args.center_x, "center-x", 0.0)?;
    let center_y = ctx.f64_or(args.center_y, "center-y", 0.0)?;
    let max_iter = positive_u32(ctx.u32_or(args.max_iter, "max-iter", 256)?, "max-iter")?;
    let threshold = ctx.f64_or(args.threshold, "threshold", 4.0)?;
    if threshold <= 0.0 {
        return Err(CliError::usage("--threshold must be positive"));
    }
    let mandelbrot = ctx.flag_or(args.mandelbrot, "mandelbrot")?;
    let swap_order = ctx.flag_or(args.swap_order, "swap-order")?;
    let out = PathBuf::from(ctx.required(args.out, "out")?);

    let view = ViewPort::new(width, height, zoom, center_x, center_y);
    let image = if mandelbrot {
        render_mandelbrot(&view, max_iter, threshold)?
    } else {
        let c1 = ctx.required_parsed(args.c1, "c1", parse::complex)?;
        let c2 = ctx.required_parsed(args.c2, "c2", parse::complex)?;
        render_alternated(
            &view,
            AlternatedParams::new(c1, c2),
            max_iter,
            threshold,
            swap_order,
        )?
    };
    write_ppm(&image, &out).map_err(|e| CliError::Io(e.to_string()))?;
    println!(
        "{} pixels, escaped fraction {:.6}",
        view.pixel_count(),
        image.escaped_fraction()
    );
    Ok(())
}

fn cmd_classify_complex(ctx: &Ctx, args: ClassifyComplexArgs) -> Result<(), CliError> {
    let c1 = ctx.required_parsed(args.c1, "c1", parse::complex)?;
    let c2 = ctx.required_parsed(args.c2, "c2", parse::complex)?;
    let max_iter = positive_u32(ctx.u32_or(args.max_iter, "max-iter", 1000)?, "max-iter")?;

    let class = classify_connectivity(AlternatedParams::new(c1, c2), max_iter);
    println!("{}", class.connectivity);
    let points = quartic_critical_points(c1);
    for (i, (point, escape)) in points.iter().zip(&class.critical_escape_indices).enumerate() {
        let location = format!("({:?}, {:?})", point.re, point.im);
        match escape {
            Some(index) => println!("critical orbit {i} at {location}: escaped at index {index}"),
            None => {
                println!("critical orbit {i} at {location}: no escape within {max_iter} iterations")
            }
        }
    }
    Ok(())
}

fn cmd_classify_padic(ctx: &Ctx, args: ClassifyPadicArgs) -> Result<(), CliError> {
    let f1 = ctx.required_parsed(args.f1, "f1", parse::polynomial)?;
    let f2 = ctx.required_parsed(args.f2, "f2", parse::polynomial)?;
    let p = ctx.required_parsed(args.p, "p", |t| parse::uint64(t, "p"))?;
    let max_iter = positive_u32(ctx.u32_or(args.max_iter, "max-iter", 1000)?, "max-iter")?;
    let size_budget = ctx.u64_or(args.size_budget, "size-budget", DEFAULT_SIZE_BUDGET)?;

    let class = classify_alternated_padic(&f1, &f2, p, max_iter, size_budget)?;
    println!("{} ({})", class.connectivity, class.decided_by);
    Ok(())
}

fn cmd_orbit_trace(ctx: &Ctx, args: OrbitTraceArgs) -> Result<(), CliError> {
    let mode = ctx.required(args.mode, "mode")?;
    let out = PathBuf::from(ctx.required(args.out, "out")?);
    match mode.as_str() {
        "complex" => {
            let z0 = ctx.required_parsed(args.z0, "z0", parse::complex)?;
            let c1 = ctx.required_parsed(args.c1, "c1", parse::complex)?;
            let c2 = ctx.required_parsed(args.c2, "c2", parse::complex)?;
            let max_iter = positive_u32(ctx.u32_or(args.max_iter, "max-iter", 100)?, "max-iter")?;
            let params = AlternatedParams::new(c1, c2);
            let radius = ctx.f64_or(args.radius, "radius", escape_radius(params))?;
            if radius <= 0.0 {
                return Err(CliError::usage("--radius must be positive"));
            }
            let record = alternated_orbit(z0, params, max_iter, radius);
            let mut csv = String::new();
            for (i, z) in record.points.iter().enumerate() {
                let _ = writeln!(csv, "{i},{:?},{:?},{:?}", z.re, z.im, z.norm());
            }
            write_text(&out, &csv)?;
            match record.escape_index {
                Some(index) => println!("escaped at index {index}"),
                None => println!("no escape within {max_iter} iterations"),
            }
        }
        "padic" => {
            let z0 = ctx.required_parsed(args.z0, "z0", parse::rational)?;
            let p = ctx.required_parsed(args.p, "p", |t| parse::uint64(t, "p"))?;
            let max_iter = positive_u32(ctx.u32_or(args.max_iter, "max-iter", 100)?, "max-iter")?;
            let size_budget = ctx.u64_or(args.size_budget, "size-budget", DEFAULT_SIZE_BUDGET)?;
            let single = ctx.parsed(args.f, "f", parse::polynomial)?;
            let f1 = ctx.parsed(args.f1, "f1", parse::polynomial)?;
            let f2 = ctx.parsed(args.f2, "f2", parse::polynomial)?;
            let orbit: PAdicOrbit = match (single, f1, f2) {
                (Some(f), None, None) => orbit_trace_p(&f, &z0, p, max_iter, size_budget)?,
                (None, Some(f1), Some(f2)) => {
                    alternated_orbit_p(&z0, &f1, &f2, p, max_iter, size_budget)?
                }
                _ => {
                    return Err(CliError::usage(
                        "padic mode takes either --f, or both --f1 and --f2",
                    ))
                }
            };
            write_text(&out, &padic_csv(&orbit.points, p)?)?;
            println!("{}", orbit.verdict);
        }
        other => {
            return Err(CliError::usage(format!(
                "--mode must be \"complex\" or \"padic\", got {other:?}"
            )))
        }
    }
    Ok(())
}

fn padic_csv(points: &[Rational], p: u64) -> Result<String, CliError> {
    let mut csv = String::new();
    for (i, z) in points.iter().enumerate() {
        let valuation = altjulia_core::vp(z, p)?;
        let _ = writeln!(csv, "{i},{},{},{valuation}", z.numer(), z.denom());
    }
    Ok(csv)
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let mut file = std::fs::File::create(path)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
    file.write_all(text.as_bytes())
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

fn cmd_mandelbrot_member(ctx: &Ctx, args: MandelbrotMemberArgs) -> Result<(), CliError> {
    let v = ctx.required_parsed(args.v, "v", parse::rational_list)?;
    let p = ctx.required_parsed(args.p, "p", |t| parse::uint64(t, "p"))?;
    let max_iter = positive_u32(ctx.u32_or(args.max_iter, "max-iter", 1000)?, "max-iter")?;
    let size_budget = ctx.u64_or(args.size_budget, "size-budget", DEFAULT_SIZE_BUDGET)?;

    let verdict = if v.len() == 1 {
        altjulia_core::check_prime(p)?;
        mandelbrot_member_quadratic(&v[0], p)?
    } else {
        mandelbrot_member(&v, p, max_iter, size_budget)?
    };
    println!("{} ({})", verdict.member, verdict.decided_by);
    Ok(())
}

fn cmd_compose(ctx: &Ctx, args: ComposeArgs) -> Result<(), CliError> {
    let f1 = ctx.required_parsed(args.f1, "f1", parse::polynomial)?;
    let f2 = ctx.required_parsed(args.f2, "f2", parse::polynomial)?;

    let composed = f2.compose(&f1);
    let coeffs: Vec<String> = composed
        .descending_coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("{}", coeffs.join(","));

    let derivative = composed.derivative();
    if derivative.is_zero() {
        println!("critical points: none (constant composition)");
        return Ok(());
    }
    let roots = derivative.rational_roots()?;
    let mut line = String::from("critical points: ");
    if roots.roots.is_empty() {
        line.push_str("none");
    } else {
        let items: Vec<String> = roots
            .roots
            .iter()
            .map(|(root, multiplicity)| {
                if *multiplicity > 1 {
                    format!("{root} (multiplicity {multiplicity})")
                } else {
                    root.to_string()
                }
            })
            .collect();
        line.push_str(&items.join(", "));
    }
    if roots.unresolved_degree > 0 {
        let _ = write!(line, "; unresolved degree {}", roots.unresolved_degree);
    }
    println!("{line}");
    Ok(())
}
