use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grouplcd::search::DEFAULT_BUDGET;
use grouplcd::{
    emit_table, reference_table, search_lcd, search_reversible_lcd, CheckReport, Error, Format,
    GrayReport, GroupRingElement, GroupTable, RingSpec, SearchSpec,
};

#[derive(Parser)]
#[command(
    name = "grouplcd",
    version,
    about = "LCD and reversible LCD codes from group rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the code C(v) generated by sigma(v).
    Check(ElementArgs),
    /// Exhaustive search for LCD codes C(v).
    Search(SearchArgs),
    /// As `search`, additionally verifying reversibility (needs a `d<2n>:rev` group).
    SearchRev(SearchArgs),
    /// Gray image of C(v) for v over R_k.
    Gray(ElementArgs),
    /// Run a bundled preset and diff its parameter sets against the expected rows.
    Tables(TablesArgs),
}

#[derive(Args)]
struct ElementArgs {
    /// Group id: `c<n>` or `d<2n>:aibj|bjai|rev`.
    #[arg(long)]
    group: String,
    /// Ring: f2, r1, r2 or r3.
    #[arg(long, default_value = "f2")]
    ring: String,
    /// Element: bit string over the listing, `+`-joined names, or a comma list of ring elements.
    #[arg(long)]
    v: String,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Md,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Md => Format::Markdown,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value = "f2")]
    ring: String,
    /// Enumerate only v = v^T (`--symmetric=false` enumerates every v).
    #[arg(long, default_value_t = true, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
    symmetric: bool,
    /// Keep the zero code and the full space.
    #[arg(long)]
    include_trivial: bool,
    #[arg(long, default_value_t = 0)]
    min_k: usize,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long, value_enum, default_value = "md")]
    format: FormatArg,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum number of candidates to enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    workers: Workers,
}

#[derive(Args)]
struct Workers {
    /// Worker threads (default: all cores).
    #[arg(long, env = "GROUPLCD_THREADS")]
    threads: Option<usize>,
}

#[derive(Args)]
struct TablesArgs {
    /// Table id, 1 to 16.
    #[arg(value_parser = clap::value_parser!(u32).range(1..=16))]
    id: u32,
    #[command(flatten)]
    workers: Workers,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn element(args: &ElementArgs) -> grouplcd::Result<GroupRingElement> {
    let group = Arc::new(GroupTable::parse(&args.group)?);
    let ring = RingSpec::parse(&args.ring)?;
    GroupRingElement::parse(group, ring, &args.v)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn run(command: Command) -> grouplcd::Result<ExitCode> {
    match command {
        Command::Check(args) => {
            let report = CheckReport::new(&element(&args)?)?;
            if args.json {
                println!("{}", to_json(&report));
            } else {
                print!("{report}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gray(args) => {
            let report = GrayReport::new(&element(&args)?)?;
            if args.json {
                println!("{}", to_json(&report));
            } else {
                print!("{report}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search(args) => search(args, false),
        Command::SearchRev(args) => search(args, true),
        Command::Tables(args) => {
            let preset = reference_table(args.id)?;
            let mut spec = preset.search_spec()?;
            spec.threads = args.workers.threads;
            let check = preset.run_with(spec)?;
            print!("{check}");
            if check.matches() {
                println!("table {}: match ({} rows)", args.id, check.found.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "table {}: MISMATCH ({} missing, {} unexpected, {} not reversible)",
                    args.id,
                    check.missing.len(),
                    check.unexpected.len(),
                    check.report.reversibility_failures.len()
                );
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn search(args: SearchArgs, reversible: bool) -> grouplcd::Result<ExitCode> {
    let group = Arc::new(GroupTable::parse(&args.group)?);
    let mut spec = SearchSpec::new(group, RingSpec::parse(&args.ring)?);
    spec.symmetric = args.symmetric;
    spec.include_trivial = args.include_trivial;
    spec.min_k = args.min_k;
    spec.max_k = args.max_k;
    spec.budget = args.budget;
    spec.threads = args.workers.threads;
    let report = if reversible {
        search_reversible_lcd(&spec)?
    } else {
        search_lcd(&spec)?
    };
    let text = emit_table(&report.table, args.format.into())?;
    match &args.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    eprintln!(
        "{} candidates, {} distinct codes, {} LCD codes in range, {} table rows",
        report.candidates,
        report.distinct_codes,
        report.codes.len(),
        report.table.records.len()
    );
    if !report.reversibility_failures.is_empty() {
        for r in &report.reversibility_failures {
            eprintln!(
                "not reversible: {} from v = {}",
                r.params, r.provenance.v_bits
            );
        }
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}
