//! Command line front end: builds iterated wreath products of symmetric
//! and alternating groups, inspects tableau elements, and runs the
//! verification reports from `wreath-core` with text or JSON output.
//!
//! Exit codes: 0 when every check passes (warnings allowed), 1 when any
//! check failed internally, 2 for usage and parse errors, 3 when the tool
//! worked but a published claim was not reproduced.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use wreath_core::catalog::{
    commutator_witness, families_containing, label_lattice, monolith_check, normalizer_check,
    parity_quotient, verify_catalog, verify_triple, MonolithMode,
};
use wreath_core::report::{Check, Report, Status};
use wreath_core::wreath::{LevelKind, WreathProduct};
use wreath_core::Tableau;

mod render;

#[derive(Parser)]
#[command(
    name = "wreath",
    version,
    about = "Verifier for normal subgroup catalogs of iterated wreath products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Element budget for exhaustive operations (lattices, centers).
    #[arg(long, global = true, default_value_t = 1_000_000)]
    limit: u64,

    /// Largest admissible number of tree leaves.
    #[arg(long, global = true, default_value_t = 10_000)]
    leaf_limit: u64,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a product such as S3*S3 and verify its order.
    Build {
        /// Product string: (S|A)<degree> per level, root first, '*'-separated.
        product: String,
        /// Print only the group order.
        #[arg(long)]
        order: bool,
    },
    /// Parse one tableau element and report its invariants and memberships.
    Element {
        product: String,
        /// Tableau literal, e.g. "[(1,2,3)];[(1,2),(),(1,2)]".
        tableau: String,
    },
    /// Enumerate the full normal subgroup lattice with family labels.
    NormalSubgroups { product: String },
    /// Verify the published two-level normal subgroup catalog.
    Catalog { product: String },
    /// Verify the published three-level candidate list over S_n wr S_n wr S_n.
    Triple { n: usize },
    /// Check the minimal-normal-subgroup claim, exactly or by sampling.
    Monolith {
        product: String,
        /// Switch to sampling mode with this many seeded random elements.
        #[arg(long)]
        sampling: Option<u32>,
    },
    /// Verify level parity kernels and the parity quotient.
    Parity { product: String },
    /// Project a tableau onto its top levels.
    Project {
        product: String,
        tableau: String,
        /// How many levels the image keeps.
        top_levels: usize,
    },
    /// Build the iterated-commutator witness and verify its shape.
    Witness {
        product: String,
        /// Tree level of the witness vertex (1-based; default: deepest).
        #[arg(long)]
        level: Option<usize>,
        /// Vertex index within that level.
        #[arg(long, default_value_t = 0)]
        vertex: usize,
    },
    /// Compare the normalizer of the all-even member against its claim.
    Normalizer { product: String },
}

struct Outcome {
    report: Report,
    /// Replaces the text rendering entirely (e.g. `build --order`).
    text_override: Option<String>,
}

impl Outcome {
    fn plain(report: Report) -> Outcome {
        Outcome {
            report,
            text_override: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(outcome) => {
            let runtime_ms = started.elapsed().as_millis() as u64;
            let rendered = match cli.format {
                Format::Text => match &outcome.text_override {
                    Some(s) => s.clone(),
                    None => render::text(&outcome.report),
                },
                Format::Json => render::json(&outcome.report, cli.seed, runtime_ms),
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, rendered.as_bytes()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                println!("{rendered}");
            }
            match outcome.report.worst_status() {
                Status::Pass | Status::Warn => ExitCode::SUCCESS,
                Status::Fail => ExitCode::from(1),
                Status::Discrepancy => ExitCode::from(3),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Build { product, order } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            let mut report = Report::new("build", w.describe());
            report.push(Check::compare(
                "order/computed",
                w.expected_order(),
                w.order(),
                Status::Fail,
            ));
            report.push(Check::new(
                "observed/depth",
                "-",
                w.spec().depth().to_string(),
                Status::Pass,
            ));
            report.push(Check::new(
                "observed/leaf-count",
                "-",
                w.spec().leaf_count().to_string(),
                Status::Pass,
            ));
            report.push(Check::new(
                "observed/generators",
                "-",
                w.group().generators().len().to_string(),
                Status::Pass,
            ));
            let text_override = order.then(|| w.order().to_string());
            Ok(Outcome {
                report,
                text_override,
            })
        }
        Command::Element { product, tableau } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            let t = Tableau::parse(tableau, w.spec())?;
            let mut report = Report::new("element", w.describe());
            let cls = t.classify();
            report.push(Check::new(
                "element/literal",
                "-",
                format!("{t}"),
                Status::Pass,
            ));
            report.push(Check::new(
                "element/first-active-level",
                "-",
                match cls.first_active_level {
                    None => String::from("none (identity)"),
                    Some(l) => l.to_string(),
                },
                Status::Pass,
            ));
            report.push(Check::new(
                "element/rank-sums",
                "-",
                join_usize(&cls.level_rank_sums),
                Status::Pass,
            ));
            report.push(Check::new(
                "element/parities",
                "-",
                cls.level_parities
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                Status::Pass,
            ));
            report.push(Check::new(
                "element/families",
                "-",
                {
                    let fams = families_containing(&t);
                    if fams.is_empty() {
                        String::from("-")
                    } else {
                        fams.join(", ")
                    }
                },
                Status::Pass,
            ));
            let leaf = t.leaf_permutation();
            report.push(Check::new(
                "element/leaf-cycle-type",
                "-",
                join_usize(&leaf.cycle_type()),
                Status::Pass,
            ));
            report.push(Check::new(
                "element/order",
                "-",
                leaf.order().to_string(),
                Status::Pass,
            ));
            report.checks.sort_by(|a, b| a.name.cmp(&b.name));
            Ok(Outcome::plain(report))
        }
        Command::NormalSubgroups { product } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            let labeled = label_lattice(&w, cli.limit)?;
            let mut report = Report::new("normal-subgroups", w.describe());
            report.push(Check::new(
                "lattice/count",
                "-",
                labeled.len().to_string(),
                Status::Pass,
            ));
            report.push(Check::new(
                "lattice/orders",
                "-",
                labeled
                    .iter()
                    .map(|(g, _)| g.order().to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                Status::Pass,
            ));
            for (i, (g, label)) in labeled.iter().enumerate() {
                report.push(Check::new(
                    format!("lattice/member/{:02}", i + 1),
                    "-",
                    format!("{label} (order {})", g.order()),
                    Status::Pass,
                ));
            }
            Ok(Outcome::plain(report))
        }
        Command::Catalog { product } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            Ok(Outcome::plain(verify_catalog(&w, cli.limit)?))
        }
        Command::Triple { n } => Ok(Outcome::plain(verify_triple(*n, cli.leaf_limit)?)),
        Command::Monolith { product, sampling } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            let mode = match sampling {
                Some(count) => MonolithMode::Sampling {
                    count: *count,
                    seed: cli.seed,
                },
                None => MonolithMode::Exact { limit: cli.limit },
            };
            Ok(Outcome::plain(monolith_check(&w, mode)?))
        }
        Command::Parity { product } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            Ok(Outcome::plain(parity_quotient(&w)?))
        }
        Command::Project {
            product,
            tableau,
            top_levels,
        } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            let t = Tableau::parse(tableau, w.spec())?;
            let image = w.project(&t, *top_levels)?;
            let mut report = Report::new("project", w.describe());
            report.push(Check::new(
                "project/top-levels",
                "-",
                top_levels.to_string(),
                Status::Pass,
            ));
            report.push(Check::new(
                "project/image",
                "-",
                format!("{image}"),
                Status::Pass,
            ));
            report.push(Check::new(
                "project/kernel-order",
                "-",
                w.kernel_order(*top_levels)?.to_string(),
                Status::Pass,
            ));
            // Spot-check that projecting commutes with multiplication.
            let square_then_project = w.project(&t.multiply(&t)?, *top_levels)?;
            let project_then_square = image.multiply(&image)?;
            let consistent = square_then_project == project_then_square;
            report.push(Check::new(
                "project/multiplicative",
                "true",
                if consistent { "true" } else { "false" },
                if consistent {
                    Status::Pass
                } else {
                    Status::Fail
                },
            ));
            report.checks.sort_by(|a, b| a.name.cmp(&b.name));
            Ok(Outcome::plain(report))
        }
        Command::Witness {
            product,
            level,
            vertex,
        } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            if w.kinds().iter().any(|k| *k != LevelKind::Symmetric) {
                anyhow::bail!("the witness construction runs in all-symmetric products");
            }
            let level = level.unwrap_or(w.spec().depth());
            let (_, report) = commutator_witness(w.spec(), level, *vertex, cli.leaf_limit)?;
            Ok(Outcome::plain(report))
        }
        Command::Normalizer { product } => {
            let w = WreathProduct::parse_and_build(product, cli.leaf_limit)?;
            Ok(Outcome::plain(normalizer_check(&w, cli.limit)?))
        }
    }
}

fn join_usize(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
