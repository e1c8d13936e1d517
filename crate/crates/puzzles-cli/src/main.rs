//! Command-line surface for the puzzle engine.
//!
//! Exit codes: 0 on success, 1 when a verification ran and failed, 2 on
//! usage errors (bad flags, malformed boundaries, violated theorem
//! hypotheses). Stdout is deterministic: identical argv produces
//! byte-identical output for any --threads value.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use puzzles_core::{
    complete_to_triangle, count, enumerate, lr_coeff, lr_coeff_padded, parse_boundary,
    render_svg, sweep, verify_instance, weight_sum, BinaryString, BoundarySpec, Error, Filling,
    PieceSet, RenderStyle, TheoremId, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "puzzles",
    version,
    about = "Enumerate, weigh, and verify Knutson-Tao puzzles on polygonal boundaries"
)]
struct Cli {
    /// Worker threads for sweeps (output is identical for any value).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoundaryArgs {
    /// Compact boundary: tri:L,M,N | trap:B,G,N,D | par:A,G,B,D |
    /// rhom:A,G,B,D | pent:B,G,D,E,Z | hex:A,B,G,D,E,Z ("-" = empty side).
    #[arg(long)]
    boundary: String,
    /// Piece set: H, H+eqvt, H+delta, H+nabla (extras combine with +).
    #[arg(long, default_value = "H", value_parser = parse_pieces)]
    pieces: PieceSet,
}

#[derive(Subcommand)]
enum Command {
    /// Count the fillings of a boundary.
    Count {
        #[command(flatten)]
        target: BoundaryArgs,
    },
    /// Stream every filling as JSON lines, in canonical scan order.
    Enumerate {
        #[command(flatten)]
        target: BoundaryArgs,
    },
    /// Sum the filling weights: a count, a signed count, or a polynomial.
    Weight {
        #[command(flatten)]
        target: BoundaryArgs,
    },
    /// Littlewood-Richardson coefficient of three binary strings.
    Lr {
        lambda: BinaryString,
        mu: BinaryString,
        nu: BinaryString,
        /// Pad lambda and mu with leading 0s and trailing 1s to nu's content.
        #[arg(long)]
        padded: bool,
    },
    /// Check a theorem: a full sweep by default, or one --instance.
    Verify {
        /// Theorem id, e.g. SPLIT, HEX_ALLWAY_COUNT (see README for the list).
        theorem: String,
        /// Sweep all instances up to the size bound (the default mode).
        #[arg(long)]
        sweep: bool,
        /// Size bound for the sweep; each theorem has a sensible default.
        #[arg(long, conflicts_with = "instance")]
        max_size: Option<usize>,
        /// Comma-separated side labels of a single instance ("-" = empty).
        #[arg(long, conflicts_with = "sweep")]
        instance: Option<String>,
    },
    /// Complete a polygonal boundary to its triangle.
    Complete {
        #[arg(long)]
        boundary: String,
    },
    /// Render a boundary, or one of its fillings, as SVG.
    Render {
        #[command(flatten)]
        target: BoundaryArgs,
        /// Render the k-th filling (0-based, canonical order) instead of
        /// the bare boundary.
        #[arg(long)]
        filling_index: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Skip edge labels.
        #[arg(long)]
        no_labels: bool,
        /// Edge length in pixels.
        #[arg(long, default_value_t = 48.0)]
        unit: f64,
    },
}

fn parse_pieces(text: &str) -> Result<PieceSet, String> {
    let mut parts = text.split('+');
    if parts.next() != Some("H") {
        return Err(format!(
            "piece set {:?} must start with H (H, H+eqvt, H+delta, H+nabla)",
            text
        ));
    }
    let mut set = PieceSet::classical();
    for part in parts {
        match part {
            "eqvt" => set.equivariant = true,
            "delta" => set.k_delta = true,
            "nabla" => set.k_nabla = true,
            other => return Err(format!("unknown piece-set extra {:?}", other)),
        }
    }
    Ok(set)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command, cli.json) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, json: bool) -> Result<ExitCode, Error> {
    match command {
        Command::Count { target } => {
            let (b, set) = realize(&target)?;
            let n = count(&b, &set);
            if json {
                println!("{}", serde_json::json!({ "count": n }));
            } else {
                println!("{n}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { target } => {
            let (b, set) = realize(&target)?;
            for filling in enumerate(&b, &set) {
                println!("{}", to_json(&filling));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Weight { target } => {
            let (b, set) = realize(&target)?;
            let w = weight_sum(&b, &set);
            if json {
                println!("{}", serde_json::json!({ "weight": w }));
            } else {
                println!("{w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lr {
            lambda,
            mu,
            nu,
            padded,
        } => {
            let c = if padded {
                lr_coeff_padded(&lambda, &mu, &nu)?
            } else {
                lr_coeff(&lambda, &mu, &nu)?
            };
            if json {
                println!("{}", serde_json::json!({ "coefficient": c }));
            } else {
                println!("{c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            sweep: _,
            max_size,
            instance,
        } => {
            let id: TheoremId = theorem.parse()?;
            let reports = match instance {
                Some(text) => vec![verify_instance(id, &parse_instance(&text)?)?],
                None => sweep(id, max_size),
            };
            let failures = reports.iter().filter(|r| !r.pass).count();
            emit_reports(&reports, json);
            if !json && reports.len() > 1 {
                println!("{}: {} instances, {} failures", id, reports.len(), failures);
            }
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Complete { boundary } => {
            let cm = complete_to_triangle(&parse_boundary(&boundary)?)?;
            if json {
                println!("{}", to_json(&cm));
            } else {
                let t = &cm.triangle;
                println!("tri:{},{},{}", side_text(&t.nw), side_text(&t.ne), side_text(&t.south));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            target,
            filling_index,
            output,
            no_labels,
            unit,
        } => {
            let (b, set) = realize(&target)?;
            let style = RenderStyle {
                unit,
                draw_labels: !no_labels,
                ..RenderStyle::default()
            };
            let svg = match filling_index {
                None => render_svg(&b, &style),
                Some(k) => {
                    let fillings: Vec<Filling> = enumerate(&b, &set);
                    let f = fillings.get(k).ok_or_else(|| {
                        Error::ParseError(format!(
                            "filling index {} out of range: boundary has {} fillings",
                            k,
                            fillings.len()
                        ))
                    })?;
                    render_svg(f, &style)
                }
            };
            match output {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Error::ParseError(format!("cannot write {:?}: {e}", path)))?,
                None => print!("{svg}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn realize(target: &BoundaryArgs) -> Result<(BoundarySpec, PieceSet), Error> {
    Ok((parse_boundary(&target.boundary)?, target.pieces))
}

fn parse_instance(text: &str) -> Result<Vec<BinaryString>, Error> {
    text.split(',')
        .map(|part| {
            if part == "-" {
                Ok(BinaryString::empty())
            } else {
                part.parse()
            }
        })
        .collect()
}

fn side_text(s: &BinaryString) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.to_string()
    }
}

fn emit_reports(reports: &[VerificationReport], json: bool) {
    for report in reports {
        if json {
            println!("{}", to_json(report));
        } else {
            println!("{}", report.summary());
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("engine types serialize without errors")
}
