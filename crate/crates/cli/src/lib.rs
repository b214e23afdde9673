//! Command-line surface for the band-move calculus engine.
//!
//! Exit codes: 0 success, 1 input error, 2 search exhausted or resource
//! limit, 3 internal consistency failure.

use bandcalc_core::diagram::{attach_band, BandSpec, Coherence, SurfaceTrace};
use bandcalc_core::invariants::invariant_profile;
use bandcalc_core::pinch::{batson_table, batson_table_text, pinch_sequence, TorusParams};
use bandcalc_core::search::{certify_t49, search_to_profile, CertifyMode, SearchBudget};
use bandcalc_core::table::{knot_profile, table_self_check};
use bandcalc_core::{closure, orient, BraidWord, Error, OrientedDiagram, PlanarDiagram};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bandcalc",
    about = "Band-move calculus on knot diagrams: invariants, pinch sequences, band surgery, and invariant-targeted band search",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Diagram input: exactly one of the three sources.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct DiagramInput {
    /// Torus knot parameters p q
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    torus: Option<Vec<u64>>,
    /// Braid word `n: l1 l2 ...`, inline or a file path
    #[arg(long)]
    braid: Option<String>,
    /// PD code text, inline or a file path
    #[arg(long)]
    pd: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant profile of a knot diagram
    Invariants(DiagramInput),
    /// Pinch sequence of a torus knot down to the unknot
    Pinch {
        /// Torus knot parameters p q
        #[arg(long, num_args = 2, value_names = ["P", "Q"], required = true)]
        torus: Vec<u64>,
    },
    /// Pinch-sequence b1 table over coprime (p, q) ranges
    Table {
        /// Largest p (rows cover 2 <= q < p)
        #[arg(long, default_value_t = 12)]
        p_max: u64,
        /// Largest q
        #[arg(long, default_value_t = 12)]
        q_max: u64,
    },
    /// Band surgery operations
    #[command(subcommand)]
    Band(BandCommand),
    /// Certify the single non-coherent band taking T(4,9) to the 6_1 profile
    CertifyT49 {
        /// Replay the committed fixture band instead of searching
        #[arg(long)]
        fixture: bool,
        /// Budget config file for the search (`key = value` lines)
        #[arg(long)]
        budget: Option<String>,
    },
}

#[derive(Subcommand)]
enum BandCommand {
    /// Apply a band to a knot diagram and report the result
    Apply {
        #[command(flatten)]
        input: DiagramInput,
        /// Band text `band attach=(...) ...`, inline or a file path
        #[arg(long, required = true)]
        band: String,
    },
    /// Search for non-coherent bands matching a bundled knot's profile
    Search {
        #[command(flatten)]
        input: DiagramInput,
        /// Name of the bundled target knot (e.g. 6_1, unknot)
        #[arg(long, required = true)]
        target: String,
        /// Budget config file (`key = value` lines); default budget otherwise
        #[arg(long)]
        budget: Option<String>,
    },
}

/// Treats the argument as a file path when one exists, else as inline text.
fn file_or_inline(arg: &str) -> Result<String, Error> {
    let p = std::path::Path::new(arg);
    if p.exists() {
        std::fs::read_to_string(p)
            .map_err(|e| Error::input(format!("cannot read '{arg}': {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn torus_params(pair: &[u64]) -> Result<(u64, u64), Error> {
    match pair {
        [p, q] => Ok((*p, *q)),
        _ => Err(Error::input("--torus takes exactly two integers")),
    }
}

fn load_diagram(input: &DiagramInput) -> Result<OrientedDiagram, Error> {
    let d = if let Some(pq) = &input.torus {
        let (p, q) = torus_params(pq)?;
        closure(&bandcalc_core::torus_braid(p, q)?)
    } else if let Some(b) = &input.braid {
        closure(&BraidWord::parse(&file_or_inline(b)?)?)
    } else if let Some(pd) = &input.pd {
        PlanarDiagram::parse(&file_or_inline(pd)?)?
    } else {
        return Err(Error::input("missing diagram input"));
    };
    Ok(orient(&d))
}

fn load_budget(path: &Option<String>) -> Result<SearchBudget, Error> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::input(format!("cannot read budget '{p}': {e}")))?;
            SearchBudget::parse(&text)
        }
        None => Ok(SearchBudget::default()),
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Invariants(input) => {
            let od = load_diagram(&input)?;
            let profile = invariant_profile(&od)?;
            print!("{}", profile.render());
            Ok(0)
        }
        Command::Pinch { torus } => {
            let (p, q) = torus_params(&torus)?;
            let seq = pinch_sequence(TorusParams::new(p, q)?);
            println!("b1 = {}", seq.b1);
            println!("{}", seq.machine_line());
            Ok(0)
        }
        Command::Table { p_max, q_max } => {
            let rows = batson_table(p_max, q_max)?;
            print!("{}", batson_table_text(&rows));
            Ok(0)
        }
        Command::Band(BandCommand::Apply { input, band }) => {
            let od = load_diagram(&input)?;
            let spec = BandSpec::parse(file_or_inline(&band)?.trim())?;
            let (out, coherence) = attach_band(&od, &spec)?;
            let mut trace = SurfaceTrace::default();
            trace.record(&spec, coherence, "band applied");
            println!("{}", spec.render());
            println!(
                "coherence: {}",
                match coherence {
                    Coherence::Coherent => "coherent",
                    Coherence::NonCoherent => "non-coherent",
                }
            );
            println!("components: {}", out.component_count());
            println!("b1: {}", trace.b1);
            println!("pd: {}", out.render());
            if out.component_count() == 1 {
                print!("{}", invariant_profile(&orient(&out))?.render());
            }
            Ok(0)
        }
        Command::Band(BandCommand::Search {
            input,
            target,
            budget,
        }) => {
            table_self_check()?;
            let od = load_diagram(&input)?;
            let target_profile = knot_profile(&target)?;
            let budget = load_budget(&budget)?;
            let outcome = search_to_profile(&od, &target_profile, &budget, &target)?;
            println!(
                "candidates: {}  matches: {}  deepest_stage: {}  complete: {}",
                outcome.candidates,
                outcome.results.len(),
                outcome.deepest_stage,
                outcome.complete
            );
            for r in &outcome.results {
                println!("{}", r.band.render());
            }
            if outcome.results.is_empty() || !outcome.complete {
                return Err(Error::resource(format!(
                    "search exhausted without a match (deepest stage {})",
                    outcome.deepest_stage
                )));
            }
            Ok(0)
        }
        Command::CertifyT49 { fixture, budget } => {
            table_self_check()?;
            let mode = if fixture {
                CertifyMode::Fixture
            } else {
                CertifyMode::Search(load_budget(&budget)?)
            };
            let report = certify_t49(mode)?;
            print!("{}", report.render());
            Ok(0)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => 1,
        Error::Resource(_) => 2,
        Error::Consistency(_) => 3,
    }
}

pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version to stdout with success status
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
