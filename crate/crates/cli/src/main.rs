use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hog_core::builtins::catalog;
use hog_core::report::{self, Concept};
use hog_core::{
    builtin, parse_game, render_game, EquilibriumReport, Game, GameError, GameSource,
    DEFAULT_CONTEXT_BUDGET, DEFAULT_PROFILE_BUDGET,
};

const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

#[derive(Parser)]
#[command(name = "hog", version, about = "Equilibria of higher-order games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate profiles and report quantifier and selection equilibria
    Solve(SolveArgs),
    /// Check each player's selection function for closedness and attainment
    Analyze(AnalyzeArgs),
    /// List the builtin games
    List,
    /// Print a game in the .hog format
    Render(InputArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// A .hog game file
    file: Option<PathBuf>,
    /// Use a builtin game instead of a file
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConceptArg {
    Selection,
    Quantifier,
    Both,
}

impl From<ConceptArg> for Concept {
    fn from(c: ConceptArg) -> Self {
        match c {
            ConceptArg::Selection => Concept::Selection,
            ConceptArg::Quantifier => Concept::Quantifier,
            ConceptArg::Both => Concept::Both,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long, value_enum, default_value = "both")]
    concept: ConceptArg,
    /// Check a single profile, e.g. `B,B,A`
    #[arg(long, value_delimiter = ',')]
    profile: Option<Vec<String>>,
    #[arg(long, default_value_t = DEFAULT_PROFILE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    max_profiles: u64,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_CONTEXT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    max_contexts: u64,
}

/// A failure carrying its exit code; the message is already formatted.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        let code = if e.is_budget() {
            EXIT_BUDGET
        } else {
            match e {
                GameError::InvalidProfile(_) | GameError::InvalidGame(_) => EXIT_INPUT,
                _ => EXIT_INVARIANT,
            }
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn load(input: &InputArgs) -> Result<Game, Failure> {
    if let Some(name) = &input.builtin {
        return builtin(name).map_err(|e| {
            let known: Vec<&str> = catalog().iter().map(|b| b.name).collect();
            Failure::input(format!("{e}; known: {}", known.join(", ")))
        });
    }
    let path = input.file.as_ref().expect("clap enforces one input");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let src = GameSource::named(text, path.display().to_string());
    match parse_game(&src) {
        Ok(parsed) => {
            for w in &parsed.warnings {
                eprintln!("{}:{w}", path.display());
            }
            Ok(parsed.game)
        }
        Err(diags) => {
            let lines: Vec<String> = diags
                .iter()
                .map(|d| format!("{}:{d}", path.display()))
                .collect();
            Err(Failure::input(lines.join("\n")))
        }
    }
}

fn solve(args: &SolveArgs) -> Result<String, Failure> {
    let game = load(&args.input)?;
    let report = match &args.profile {
        Some(labels) => {
            let s = game.profile(labels)?;
            EquilibriumReport {
                players: game.players().iter().map(|p| p.name.clone()).collect(),
                rows: vec![game.analyze_profile(&s)?],
            }
        }
        None => game.enumerate_equilibria(args.max_profiles)?,
    };
    if let Some(row) = report.refinement_violations().first() {
        return Err(Failure {
            code: EXIT_INVARIANT,
            message: format!(
                "internal error: {} is a selection but not a quantifier equilibrium",
                game.profile_string(&row.profile)
            ),
        });
    }
    let concept = args.concept.into();
    Ok(match args.format {
        Format::Table => report::render_table(&game, &report, concept),
        Format::Json => report::render_json(&game, &report, concept),
    })
}

fn analyze(args: &AnalyzeArgs) -> Result<String, Failure> {
    let game = load(&args.input)?;
    let analysis = game.analyze_players(args.max_contexts)?;
    Ok(match args.format {
        Format::Table => report::render_analysis_table(&game, &analysis),
        Format::Json => report::render_analysis_json(&game, &analysis),
    })
}

fn list() -> String {
    let width = catalog().iter().map(|e| e.name.len()).max().unwrap_or(0);
    catalog()
        .iter()
        .map(|e| format!("{:width$}  {}\n", e.name, e.note))
        .collect()
}

fn render(input: &InputArgs) -> Result<String, Failure> {
    let game = load(input)?;
    render_game(&game)
        .map(|s| s.text)
        .map_err(|e| Failure::input(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(a) => solve(a),
        Command::Analyze(a) => analyze(a),
        Command::List => Ok(list()),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(EXIT_INVARIANT);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("hog: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
