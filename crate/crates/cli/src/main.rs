//! `hyperalg`: multiplication tables, property classification, plane-wave
//! sampling, generalized Fourier spectra and verification suites.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error.

use std::f64::consts::PI;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use hyperalg_core::analysis::classify;
use hyperalg_core::checks::{run_suite, Suite};
use hyperalg_core::format::fmt_float;
use hyperalg_core::report::{render_table, TableFormat};
use hyperalg_core::wave::{
    delta_concentration_ratio, generalized_ft, kernel, linspace, sample_wave, samples_csv,
    schroedinger_residual, spectrum_csv, Direction, PlaneWave, SchroedingerForm, WaveTag,
};
use hyperalg_core::{builtin, AlgebraSpec};

/// Width of the spectrum window around the wave's own wavenumber.
const SPECTRUM_HALF_WIDTH: f64 = 4.0;
const SPECTRUM_POINTS: usize = 401;

#[derive(Parser)]
#[command(name = "hyperalg", version, about = "Hypercomplex algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a multiplication table (row times column).
    Tables {
        /// Builtin name or `@path` to a spec file.
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Report which algebraic laws hold.
    Classify {
        /// Builtin name or `@path` to a spec file.
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Sample a plane wave on an x-grid at fixed time and write CSV.
    #[command(allow_negative_numbers = true)]
    Simulate {
        #[arg(long, value_enum)]
        wave: Tag,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        m: f64,
        #[arg(long)]
        x0: f64,
        #[arg(long)]
        x1: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0)]
        t: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Transform a sampled plane wave and report delta concentration.
    #[command(allow_negative_numbers = true)]
    Fourier {
        #[arg(long, value_enum)]
        wave: Tag,
        #[arg(long, value_enum)]
        kernel: Tag,
        #[arg(long)]
        p: f64,
        /// Domain length; samples span [-L/2, L/2].
        #[arg(long = "L", default_value_t = 40.0 * PI)]
        l: f64,
        #[arg(long, default_value_t = 2048)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tag {
    #[value(name = "C")]
    C,
    #[value(name = "J")]
    J,
}

impl From<Tag> for WaveTag {
    fn from(t: Tag) -> Self {
        match t {
            Tag::C => WaveTag::C,
            Tag::J => WaveTag::J,
        }
    }
}

/// Usage or input problem: message for stderr, exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<ExitCode, UsageError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Tables { algebra, format } => {
            let spec = load_algebra(&algebra)?;
            let format = match format {
                Format::Ascii => TableFormat::Ascii,
                Format::Csv => TableFormat::Csv,
            };
            emit(&render_table(&spec, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { algebra, seed } => {
            let spec = load_algebra(&algebra)?;
            emit(&classify(&spec, seed).to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate {
            wave,
            p,
            m,
            x0,
            x1,
            n,
            t,
            out,
        } => simulate(wave.into(), p, m, (x0, x1, n), t, &out),
        Command::Fourier {
            wave,
            kernel,
            p,
            l,
            n,
            out,
        } => fourier(wave.into(), kernel.into(), p, l, n, &out),
        Command::Check { suite } => {
            let suite: Suite = suite.parse()?;
            let lines = run_suite(suite);
            let text: String = lines.iter().map(|l| format!("{l}\n")).collect();
            emit(&text);
            Ok(if lines.iter().all(|l| l.ok()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn load_algebra(arg: &str) -> Result<Arc<AlgebraSpec>, UsageError> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read `{path}`: {e}")))?;
            let spec = AlgebraSpec::parse(&text).map_err(|e| UsageError(format!("{path}: {e}")))?;
            Ok(Arc::new(spec))
        }
        None => Ok(builtin(arg)?),
    }
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as a normal end.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write to stdout: {e}");
        }
    }
}

fn check_finite(name: &str, v: f64) -> Result<(), UsageError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(UsageError(format!("--{name} must be finite")))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), UsageError> {
    fs::write(path, text).map_err(|e| UsageError(format!("cannot write `{}`: {e}", path.display())))
}

fn simulate(
    tag: WaveTag,
    p: f64,
    m: f64,
    grid: (f64, f64, usize),
    t: f64,
    out: &Path,
) -> CmdResult {
    let (x0, x1, n) = grid;
    for (name, v) in [("p", p), ("m", m), ("x0", x0), ("x1", x1), ("t", t)] {
        check_finite(name, v)?;
    }
    if m <= 0.0 {
        return Err(UsageError(format!("--m must be positive, got {m}")));
    }
    if n < 2 {
        return Err(UsageError(format!("--n must be at least 2, got {n}")));
    }
    let energy = p * p / (2.0 * m);
    let wave = PlaneWave::from_tag(tag, p, energy);
    let rows = linspace(x0, x1, n)
        .into_iter()
        .map(|x| Ok((x, t, wave.eval(x, t)?)))
        .collect::<hyperalg_core::Result<Vec<_>>>()?;
    write_file(out, &samples_csv(&rows)?)?;
    let form = match tag {
        WaveTag::C => SchroedingerForm::C,
        WaveTag::J => SchroedingerForm::J,
    };
    let residual = schroedinger_residual(form, &wave, m)?;
    emit(&format!("schroedinger_residual={}\n", fmt_float(residual)));
    Ok(ExitCode::SUCCESS)
}

fn fourier(tag: WaveTag, kernel_tag: WaveTag, p: f64, l: f64, n: usize, out: &Path) -> CmdResult {
    check_finite("p", p)?;
    check_finite("L", l)?;
    if l <= 0.0 {
        return Err(UsageError(format!("--L must be positive, got {l}")));
    }
    if n < 2 {
        return Err(UsageError(format!("--n must be at least 2, got {n}")));
    }
    let wave = PlaneWave::from_tag(tag, p, 0.0);
    let samples = sample_wave(&wave, l, n)?;
    let (alpha, beta) = kernel(kernel_tag);
    let grid = linspace(
        p - SPECTRUM_HALF_WIDTH,
        p + SPECTRUM_HALF_WIDTH,
        SPECTRUM_POINTS,
    );
    let spectrum = generalized_ft(&samples, &alpha, &beta, &grid, Direction::Forward)?;
    write_file(out, &spectrum_csv(&spectrum)?)?;
    let ratio = delta_concentration_ratio(tag, kernel_tag, p, l, n)?;
    emit(&format!("concentration_ratio={}\n", fmt_float(ratio)));
    Ok(ExitCode::SUCCESS)
}
