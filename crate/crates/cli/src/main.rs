mod commands;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use minplus::io::{parse_input, Input};
use minplus::{random_separated, Caps};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use commands::Rendered;

/// Min-plus characteristic polynomials, their roots, and the circuits behind them.
#[derive(Debug, Parser)]
#[command(name = "minplus", version)]
struct Cli {
    command: Command,

    /// Matrix or polynomial file (`-` reads standard input).
    input: Option<PathBuf>,

    /// charpoly, factor, roots, plot-data: tropdet | flv | both.
    /// eigenvalue: karp | tropdet | flv | all.
    #[arg(long, value_enum)]
    method: Option<Method>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also print the canonical (lower-hull) coefficients.
    #[arg(long)]
    canonical: bool,

    /// Largest order for permutation-by-permutation determinants.
    #[arg(long, value_name = "N", value_parser = positive, default_value_t = Caps::default().perms)]
    cap_perms: usize,

    /// Largest order for principal-minor enumeration.
    #[arg(long, value_name = "N", value_parser = positive, default_value_t = Caps::default().subsets)]
    cap_subsets: usize,

    /// Most elementary circuits to enumerate.
    #[arg(long, value_name = "N", value_parser = positive, default_value_t = Caps::default().circuits)]
    cap_circuits: usize,

    /// Largest order for extended-circuit enumeration.
    #[arg(long, value_name = "N", value_parser = positive, default_value_t = Caps::default().exhaustive)]
    cap_exhaustive: usize,

    /// Seed for `--random-separated`.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Use a generated matrix with at most K planted disjoint cycles (and at
    /// most 8 vertices) instead of an input file.
    #[arg(long, value_name = "K")]
    random_separated: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Charpoly,
    Factor,
    Roots,
    Eigenvalue,
    Circuits,
    Verify,
    PlotData,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Tropdet,
    Flv,
    Both,
    Karp,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Why a run stopped early, mapped onto the exit code.
pub enum Failure {
    Input(String),
    Cap(String),
}

impl From<minplus::Error> for Failure {
    fn from(e: minplus::Error) -> Self {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn read_input(cli: &Cli) -> Result<Input, Failure> {
    if let Some(k) = cli.random_separated {
        if cli.input.is_some() {
            return Err(Failure::Input(
                "give either an input file or --random-separated, not both".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        return Ok(Input::Matrix(random_separated(&mut rng, 8, k).matrix));
    }
    let Some(path) = &cli.input else {
        return Err(Failure::Input("missing input file".into()));
    };
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    let caps = Caps {
        perms: cli.cap_perms,
        subsets: cli.cap_subsets,
        circuits: cli.cap_circuits,
        exhaustive: cli.cap_exhaustive,
    };
    let input = read_input(cli)?;
    match cli.command {
        Command::Charpoly => commands::charpoly(&input, cli.method, cli.canonical, &caps),
        Command::Factor => commands::factor(&input, cli.method, &caps),
        Command::Roots => commands::roots(&input, cli.method, &caps),
        Command::Eigenvalue => commands::eigenvalue(&input, cli.method, &caps),
        Command::Circuits => commands::circuits(&input, cli.method, &caps),
        Command::Verify => commands::verify(&input, cli.method, &caps),
        Command::PlotData => commands::plot_data(&input, cli.method, &caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Tsv => out.tsv,
                Format::Json => {
                    serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n"
                }
            };
            print!("{body}");
            ExitCode::from(if out.ok { 0 } else { 4 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("minplus: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("minplus: {msg}");
            ExitCode::from(3)
        }
    }
}
