//! Command-line surface: diagram verdicts, knot Floer chain data, braid
//! classification, the solid-torus filling search, and SVG rendering.
//!
//! Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

use clap::{Parser, Subcommand, ValueEnum};
use oneone::braid::{
    berge_search, braid_validate, classify_inclusion, classify_type, inclusion_diagram,
    slope_interval, BraidClass, BraidError,
};
use oneone::diagram::{CoherenceVerdict, DiagramError, GraphicSign, OneOneDiagram};
use oneone::floer::{
    alexander_polynomial, chain_summand, lspace_verdict, FloerError, LSpaceVerdict,
};
use oneone::io;
use oneone::lattice::ProjectiveSlope;
use oneone::render::render_svg;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "oneone", version, about = "L-space verdicts for genus-1 doubly-pointed Heegaard diagrams and 1-bridge braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Coherence and L-space verdicts for a diagram file.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Per-class generators, differential edges, and Alexander gradings.
    Hfk {
        path: PathBuf,
        /// Also print the Alexander polynomial (knots in the three-sphere).
        #[arg(long)]
        alexander: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// 1-bridge braid operations.
    Braid {
        #[command(subcommand)]
        sub: BraidCommand,
    },
    /// Enumerate strict braids and their solid-torus filling slopes.
    Search {
        #[arg(long = "max-winding")]
        max_winding: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render a diagram as SVG.
    Render {
        path: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Slope interval and knot type of K(omega, b, m).
    Interval { omega: i64, b: i64, m: i64 },
    /// Inclusion verdicts at a filling slope, cross-checked geometrically.
    Classify {
        omega: i64,
        b: i64,
        m: i64,
        /// Filling slope p/q, or "inf" for the three-sphere.
        #[arg(long)]
        filling: String,
    },
    /// Write the reduced inclusion diagram to a file.
    Diagram {
        omega: i64,
        b: i64,
        m: i64,
        #[arg(long)]
        filling: String,
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_internal(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn is_internal(e: &anyhow::Error) -> bool {
    for cause in e.chain() {
        if let Some(d) = cause.downcast_ref::<DiagramError>() {
            if matches!(d, DiagramError::Internal(_)) {
                return true;
            }
        }
        if let Some(f) = cause.downcast_ref::<FloerError>() {
            if matches!(f, FloerError::Internal(_) | FloerError::Diagram(DiagramError::Internal(_))) {
                return true;
            }
        }
        if let Some(b) = cause.downcast_ref::<BraidError>() {
            if matches!(
                b,
                BraidError::Internal(_)
                    | BraidError::Diagram(DiagramError::Internal(_))
                    | BraidError::Floer(FloerError::Internal(_))
            ) {
                return true;
            }
        }
    }
    false
}

fn run() -> anyhow::Result<()> {
    match Cli::parse().command {
        Command::Check { path, format } => cmd_check(&path, format),
        Command::Hfk {
            path,
            alexander,
            format,
        } => cmd_hfk(&path, alexander, format),
        Command::Braid { sub } => match sub {
            BraidCommand::Interval { omega, b, m } => cmd_braid_interval(omega, b, m),
            BraidCommand::Classify {
                omega,
                b,
                m,
                filling,
            } => cmd_braid_classify(omega, b, m, &filling),
            BraidCommand::Diagram {
                omega,
                b,
                m,
                filling,
                out,
            } => cmd_braid_diagram(omega, b, m, &filling, &out),
        },
        Command::Search {
            max_winding,
            format,
        } => cmd_search(max_winding, format),
        Command::Render { path, out } => cmd_render(&path, &out),
    }
}

fn load_diagram(path: &PathBuf) -> anyhow::Result<OneOneDiagram> {
    let text = std::fs::read_to_string(path)?;
    Ok(io::diagram_from_json(&text)?)
}

fn verdict_name(v: LSpaceVerdict) -> &'static str {
    match v {
        LSpaceVerdict::PositiveLSpaceKnot => "PositiveLSpaceKnot",
        LSpaceVerdict::NegativeLSpaceKnot => "NegativeLSpaceKnot",
        LSpaceVerdict::Both => "Both",
        LSpaceVerdict::NotByThisDiagram => "NotByThisDiagram",
    }
}

fn coherence_name(v: CoherenceVerdict) -> &'static str {
    match v {
        CoherenceVerdict::Positive => "Positive",
        CoherenceVerdict::Negative => "Negative",
        CoherenceVerdict::Both => "Both",
        CoherenceVerdict::Incoherent => "Incoherent",
    }
}

fn graphic_name(g: GraphicSign) -> &'static str {
    match g {
        GraphicSign::Positive => "positive",
        GraphicSign::Negative => "negative",
        GraphicSign::Either => "either",
        GraphicSign::None => "none",
    }
}

fn cmd_check(path: &PathBuf, format: Format) -> anyhow::Result<()> {
    let input = load_diagram(path)?;
    let was_reduced = input.is_reduced()?;
    let d = if was_reduced {
        input
    } else {
        eprintln!("input is not reduced; reducing first");
        input.reduce()?
    };
    let coherence = d.coherence()?;
    let verdict = lspace_verdict(&d)?;
    let mut classes = Vec::new();
    for c in 0..d.homology_order() {
        let geo = d.class_geometry(c)?;
        classes.push((c, geo.points.len(), d.graphic_sign(c)?));
    }
    match format {
        Format::Json => {
            let body = serde_json::json!({
                "reduced": was_reduced,
                "coherence": coherence_name(coherence),
                "lspace": verdict_name(verdict),
                "classes": classes
                    .iter()
                    .map(|(c, size, g)| {
                        serde_json::json!({
                            "class": c,
                            "size": size,
                            "graphic_sign": graphic_name(*g),
                        })
                    })
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string(&body)?);
        }
        Format::Text => {
            println!("reduced:   {was_reduced}");
            println!("coherence: {}", coherence_name(coherence));
            println!("lspace:    {}", verdict_name(verdict));
            for (c, size, g) in classes {
                println!("class {c}: {size} generators, graphic {}", graphic_name(g));
            }
        }
    }
    Ok(())
}

fn cmd_hfk(path: &PathBuf, alexander: bool, format: Format) -> anyhow::Result<()> {
    let input = load_diagram(path)?;
    let d = if input.is_reduced()? {
        input
    } else {
        eprintln!("input is not reduced; reducing first");
        input.reduce()?
    };
    let mut summands = Vec::new();
    for c in 0..d.homology_order() {
        summands.push(chain_summand(&d, c)?);
    }
    let alex = if alexander {
        Some(alexander_polynomial(&d)?)
    } else {
        None
    };
    match format {
        Format::Json => {
            let body = serde_json::json!({
                "classes": summands.iter().map(|s| serde_json::json!({
                    "class": s.class_id,
                    "generators": s.generators.len(),
                    "v_edges": s.v_edges,
                    "h_edges": s.h_edges,
                    "rel_alexander": s.rel_alexander,
                })).collect::<Vec<_>>(),
                "alexander": alex.as_ref().map(io::laurent_to_json),
            });
            println!("{}", serde_json::to_string(&body)?);
        }
        Format::Text => {
            for s in &summands {
                println!(
                    "class {}: {} generators, v_edges {:?}, h_edges {:?}, rel_alexander {:?}",
                    s.class_id,
                    s.generators.len(),
                    s.v_edges,
                    s.h_edges,
                    s.rel_alexander
                );
            }
            if let Some(p) = alex {
                println!("{p}");
            }
        }
    }
    Ok(())
}

fn parse_slope(text: &str) -> anyhow::Result<ProjectiveSlope> {
    ProjectiveSlope::parse(text)
        .ok_or_else(|| anyhow::anyhow!("invalid filling slope {text:?}; use p/q or \"inf\""))
}

fn cmd_braid_interval(omega: i64, b: i64, m: i64) -> anyhow::Result<()> {
    let k = braid_validate(omega, b, m)?;
    let si = slope_interval(&k)?;
    let class = classify_type(&k)?;
    let (lo, hi) = si.endpoints();
    let class_text = match class {
        BraidClass::Strict => "Strict".to_string(),
        BraidClass::TorusKnot { q, omega } => format!("TorusKnot({q},{omega})"),
        BraidClass::ExceptionalCable {
            companion_q,
            companion_omega,
            d,
            positive,
        } => format!(
            "ExceptionalCable(T({companion_q},{companion_omega}), d={d}, sign={})",
            if positive { "+" } else { "-" }
        ),
    };
    println!("[\"{lo}\",\"{hi}\"], \"{class_text}\"");
    Ok(())
}

fn cmd_braid_classify(omega: i64, b: i64, m: i64, filling: &str) -> anyhow::Result<()> {
    let k = braid_validate(omega, b, m)?;
    let slope = parse_slope(filling)?;
    let verdict = classify_inclusion(&k, &slope)?;
    // Geometric cross-check through the diagram pipeline.
    let d = inclusion_diagram(&k, &slope)?;
    let lv = lspace_verdict(&d)?;
    println!(
        "positive={} negative={} simple={} diagram={}",
        verdict.positive,
        verdict.negative,
        verdict.simple,
        verdict_name(lv)
    );
    Ok(())
}

fn cmd_braid_diagram(omega: i64, b: i64, m: i64, filling: &str, out: &PathBuf) -> anyhow::Result<()> {
    let k = braid_validate(omega, b, m)?;
    let slope = parse_slope(filling)?;
    let d = inclusion_diagram(&k, &slope)?;
    std::fs::write(out, io::diagram_to_json(&d))?;
    eprintln!("wrote {}", out.display());
    Ok(())
}

fn cmd_search(max_winding: i64, format: Format) -> anyhow::Result<()> {
    if max_winding < 2 {
        anyhow::bail!("--max-winding must be at least 2");
    }
    let pool = thread_pool_from_env()?;
    let (rows, stats) = pool.install(|| berge_search(max_winding))?;
    match format {
        Format::Json | Format::Text => {
            for row in &rows {
                println!("{}", io::search_row_to_json(row));
            }
            eprintln!(
                "examined {} triples: {} strict, {} links, {} torus/cable, {} degenerate",
                stats.examined,
                stats.strict,
                stats.not_a_knot,
                stats.not_strict,
                stats.degenerate_geodesic
            );
        }
    }
    Ok(())
}

fn thread_pool_from_env() -> anyhow::Result<rayon_pool::Pool> {
    let threads = std::env::var("ONEONE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    rayon_pool::build(threads)
}

mod rayon_pool {
    pub type Pool = oneone::rayon::ThreadPool;

    pub fn build(threads: Option<usize>) -> anyhow::Result<Pool> {
        let mut b = oneone::rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            b = b.num_threads(n.max(1));
        }
        Ok(b.build()?)
    }
}

fn cmd_render(path: &PathBuf, out: &PathBuf) -> anyhow::Result<()> {
    let d = load_diagram(path)?;
    let svg = render_svg(&d)?;
    std::fs::write(out, svg)?;
    eprintln!("wrote {}", out.display());
    Ok(())
}
