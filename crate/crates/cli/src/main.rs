//! `blueprint-forge`: verify blueprint families, build the groups `U_G`, and
//! run the gallery detectors.
//!
//! Exit status: 0 when every selected check passes, 1 when one fails, 2 for
//! configuration errors (unreadable files, invalid documents, bad flags).

mod render;
mod schema;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use blueprint_families::{detect_alternating, detect_exotic, detect_type_nr, geodesic_between, nil_pattern, parse_nil, BlueprintFamily, FamilyDocument, Variant};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coxeter_core::{Gallery, Gen, PairClass};
use serde_json::{json, Value};
use verifier::{CheckKind, Reproduction, Status, VerifyError, VerifyOptions};

#[derive(Parser)]
#[command(name = "blueprint-forge", version, about = "Commutator blueprints over Coxeter systems: verification, groups and galleries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the blueprint axioms on a ball (or on sample elements).
    Verify(VerifyArgs),
    /// Build U_G for one minimal gallery and report its invariants.
    Group(GroupArgs),
    /// Run the family's detector between two crossings of a gallery.
    Gallery(GalleryArgs),
    /// Check a nilpotency-class statement for the family.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Family document (JSON).
    #[arg(long)]
    family: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, env = "BLUEPRINT_FORGE_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Ball radius; defaults to 8 for universal rank 2 and 6 otherwise.
    #[arg(long)]
    depth: Option<usize>,
    /// Check sample elements (words in the generator names) instead of a ball.
    #[arg(long = "sample", value_name = "WORD", conflicts_with = "depth")]
    samples: Vec<String>,
    #[arg(long)]
    cb1: bool,
    #[arg(long)]
    cb2: bool,
    #[arg(long)]
    cb3: bool,
    #[arg(long)]
    weyl: bool,
    #[arg(long = "2n")]
    two_n: bool,
    #[arg(long)]
    prop52: bool,
    /// Every check that applies to the family (the default).
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    common: Common,
    /// Type of the gallery from 1, in generator names.
    #[arg(long)]
    word: Option<String>,
    /// Nil families: use the pattern gallery with these parameters, e.g. 1,2,3,4.
    #[arg(long, value_name = "I1,J1,I2,J2")]
    nil_pattern: Option<String>,
    /// Bound on each lower-central-series term.
    #[arg(long, default_value_t = verifier::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct GalleryArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    word: Option<String>,
    #[arg(long, value_name = "I1,J1,I2,J2")]
    nil_pattern: Option<String>,
    /// 1-based crossing index of alpha (default 1).
    #[arg(long)]
    alpha: Option<usize>,
    /// 1-based crossing index of beta (default: the last crossing).
    #[arg(long)]
    beta: Option<usize>,
    /// Quad families: how far to walk along the wall of alpha.
    #[arg(long)]
    search_radius: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Statement {
    /// Tits family: U_w has class at most 2 on the ball.
    TitsClassTwo,
    /// Exotic family: class at most 2 and the adjacent central products.
    ExoticClassTwo,
    /// Nil family with bound n: the (1,2,n-1,n) gallery has class exactly n-1.
    NilSharp,
    /// Unbounded nil family: the (1,2,m+1,m+2) gallery has class above m.
    NilUnbounded,
}

#[derive(Args)]
struct ReproduceArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    statement: Statement,
    #[arg(long)]
    depth: Option<usize>,
    /// For nil-sharp: the bound n (defaults to the family's).
    #[arg(long)]
    n: Option<usize>,
    /// For nil-unbounded: the class m to exceed.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = verifier::DEFAULT_CAP)]
    cap: usize,
}

/// A run that completed: what to print and whether it counts as failed.
struct Finished {
    body: String,
    failed: bool,
}

fn load_family(path: &Path) -> Result<BlueprintFamily> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("{} is not JSON", path.display()))?;
    schema::check_family(&value).map_err(|e| anyhow!("{} does not match the family schema: {e}", path.display()))?;
    let doc: FamilyDocument = serde_json::from_value(value).with_context(|| format!("{} is not a valid family document", path.display()))?;
    doc.build().with_context(|| format!("{} describes an invalid family", path.display()))
}

fn emit(common: &Common, body: &str) -> Result<()> {
    match &common.output {
        Some(path) => fs::write(path, body).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn json_text(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn config(e: VerifyError) -> anyhow::Error {
    anyhow!(e)
}

fn run_verify(args: &VerifyArgs) -> Result<Finished> {
    let family = load_family(&args.common.family)?;
    let flags = [
        (args.cb1, CheckKind::Cb1),
        (args.cb2, CheckKind::Cb2),
        (args.cb3, CheckKind::Cb3Pcb),
        (args.weyl, CheckKind::Weyl),
        (args.two_n, CheckKind::TwoN),
        (args.prop52, CheckKind::Prop52),
    ];
    let mut checks: Vec<CheckKind> = flags.iter().filter(|f| f.0).map(|f| f.1).collect();
    if args.all || checks.is_empty() {
        checks.extend(verifier::applicable_checks(&family));
    }
    let report = if args.samples.is_empty() {
        let depth = args.depth.unwrap_or_else(|| verifier::default_depth(&family));
        verifier::verify(&family, &VerifyOptions { depth, checks, jobs: args.common.jobs }).map_err(config)?
    } else {
        let words = args.samples.iter().map(|w| family.parse_word(w)).collect::<Result<Vec<_>, _>>()?;
        verifier::verify_sample(&family, &words, &checks, args.common.jobs).map_err(config)?
    };
    let body = match args.common.format {
        Format::Json => {
            let value = serde_json::to_value(&report)?;
            let errors = schema::violations(schema::report(), &value);
            if !errors.is_empty() {
                bail!("report does not match its schema: {}", errors.join("; "));
            }
            json_text(&value)?
        }
        Format::Text => render::report(&report),
    };
    Ok(Finished { body, failed: !report.passed() })
}

fn parse_params(text: &str) -> Result<[usize; 4]> {
    let parts: Vec<usize> = text.split(',').map(|p| p.trim().parse::<usize>()).collect::<Result<_, _>>().context("pattern parameters are integers")?;
    parts.try_into().map_err(|_| anyhow!("a nil pattern takes four parameters i1,j1,i2,j2"))
}

fn gallery_word(family: &BlueprintFamily, word: &Option<String>, pattern: &Option<String>) -> Result<Vec<Gen>> {
    match (word, pattern) {
        (Some(w), None) => Ok(family.parse_word(w)?),
        (None, Some(p)) => {
            let Variant::Nil { letters, .. } = family.variant() else { bail!("--nil-pattern needs a nil family") };
            let [i1, j1, i2, j2] = parse_params(p)?;
            Ok(nil_pattern(i1, j1, i2, j2, *letters)?.word)
        }
        _ => bail!("give exactly one of --word and --nil-pattern"),
    }
}

fn run_group(args: &GroupArgs) -> Result<Finished> {
    let family = load_family(&args.common.family)?;
    let word = gallery_word(&family, &args.word, &args.nil_pattern)?;
    match verifier::group_summary(&family, &word, args.cap) {
        Ok(summary) => {
            let body = match args.common.format {
                Format::Json => json_text(&summary)?,
                Format::Text => render::group(&summary),
            };
            Ok(Finished { body, failed: false })
        }
        Err(VerifyError::Extension { step, source }) => {
            let value = json!({ "word": family.spell(&word), "extension_failure": { "step": step, "error": source.to_string() } });
            let body = match args.common.format {
                Format::Json => json_text(&value)?,
                Format::Text => format!("U_G for G of type {}: extension fails when adding u_{step}: {source}\n", family.spell(&word)),
            };
            Ok(Finished { body, failed: true })
        }
        Err(e) => Err(config(e)),
    }
}

fn root_json(family: &BlueprintFamily, roots: &[coxeter_core::Root], pos: usize) -> Value {
    let r = &roots[pos - 1];
    json!({ "position": pos, "reflection": family.spell(r.reflection().word()), "positive": r.is_positive() })
}

fn run_gallery(args: &GalleryArgs) -> Result<Finished> {
    let family = load_family(&args.common.family)?;
    let m = family.matrix();
    let word = gallery_word(&family, &args.word, &args.nil_pattern)?;
    let gallery = Gallery::from_identity(m, word.clone())?;
    let roots = family.gallery_roots(&gallery)?;
    let (i, j) = (args.alpha.unwrap_or(1), args.beta.unwrap_or(roots.len()));
    if i == 0 || i >= j || j > roots.len() {
        bail!("need 1 <= alpha < beta <= {}", roots.len());
    }
    let (alpha, beta) = (&roots[i - 1], &roots[j - 1]);
    let spell = |w: &[Gen]| family.spell(w);
    let detection = match family.variant() {
        Variant::Tits { s, t, .. } => match detect_alternating(m, alpha, beta, *s, *t) {
            Some(h) => json!({ "detector": "alternating", "k": h.k, "geodesic": spell(h.gallery.type_word()) }),
            None => json!({ "detector": "alternating", "match": null }),
        },
        Variant::Exotic { s0, s1 } => match detect_exotic(m, alpha, beta, *s0, *s1) {
            Some(h) => json!({ "detector": "exotic", "k": h.k, "first": spell(&[h.first]), "positions": h.positions }),
            None => json!({ "detector": "exotic", "match": null }),
        },
        Variant::Nil { letters, .. } => {
            let geodesic = geodesic_between(m, alpha, beta);
            match geodesic.as_ref().and_then(|g| parse_nil(g.type_word(), *letters)) {
                Some(p) => json!({
                    "detector": "nil",
                    "parameters": [p.i1, p.j1, p.i2, p.j2],
                    "geodesic_length": p.word.len(),
                    "labels": p.labels.iter().map(|&(a, b, at)| json!({ "entry": [a, b], "crossing": at })).collect::<Vec<_>>(),
                }),
                None => json!({ "detector": "nil", "geodesic_length": geodesic.map(|g| g.len()), "match": null }),
            }
        }
        Variant::Quad { .. } => match m.pair_class(alpha, beta) {
            PairClass::Finite(order) => {
                let open = m.open_interval(alpha, beta)?;
                let positions: Vec<usize> = open.iter().filter_map(|r| roots.iter().position(|x| x == r)).map(|p| p + 1).collect();
                json!({ "detector": "interval", "order": order, "open_interval": positions })
            }
            _ => {
                let radius = args.search_radius.unwrap_or(2 * roots.len() + 9);
                match detect_type_nr(m, alpha, beta, radius) {
                    Ok(Some(h)) => json!({
                        "detector": "type_nr",
                        "n": h.n,
                        "r": spell(&[h.r]),
                        "u": h.u.map(|g| spell(&[g])),
                        "v": h.v.map(|g| spell(&[g])),
                        "witness": { "start": spell(h.gallery.start().word()), "type": spell(h.gallery.type_word()) },
                        "omega_positions": (1..=h.n).map(|b| h.omega_positions(b)).collect::<Vec<_>>(),
                    }),
                    Ok(None) => json!({ "detector": "type_nr", "search_radius": radius, "match": null }),
                    Err(e) => json!({ "detector": "type_nr", "search_radius": radius, "truncated": e.to_string() }),
                }
            }
        },
    };
    let mset = family.m_set_at(&gallery, &roots, i, j)?;
    let value = json!({
        "gallery": spell(&word),
        "length": word.len(),
        "alpha": root_json(&family, &roots, i),
        "beta": root_json(&family, &roots, j),
        "pair_class": format!("{:?}", m.pair_class(alpha, beta)),
        "detection": detection,
        "m_set": mset.positions,
    });
    let body = match args.common.format {
        Format::Json => json_text(&value)?,
        Format::Text => {
            let mut s = format!("gallery of length {}, alpha = crossing {i}, beta = crossing {j}\n", word.len());
            s.push_str(&format!("pair: {}\n", value["pair_class"].as_str().unwrap_or_default()));
            s.push_str(&format!("detection: {}\n", value["detection"]));
            s.push_str(&format!("M-set positions: {:?}\n", mset.positions));
            s
        }
    };
    Ok(Finished { body, failed: false })
}

fn run_reproduce(args: &ReproduceArgs) -> Result<Finished> {
    let family = load_family(&args.common.family)?;
    let depth = args.depth.unwrap_or_else(|| verifier::default_depth(&family));
    let what = match args.statement {
        Statement::TitsClassTwo => Reproduction::TitsClassTwo { depth },
        Statement::ExoticClassTwo => Reproduction::ExoticClassTwo { depth },
        Statement::NilSharp => {
            let n = match (args.n, family.variant()) {
                (Some(n), _) => n,
                (None, Variant::Nil { n: blueprint_families::NilBound::Finite(n), .. }) => *n,
                _ => bail!("nil-sharp needs --n or a nil family with a finite bound"),
            };
            Reproduction::NilSharp { n }
        }
        Statement::NilUnbounded => Reproduction::NilUnbounded { m: args.m.ok_or_else(|| anyhow!("nil-unbounded needs --m"))? },
    };
    let section = verifier::reproduce(&family, what, args.cap, args.common.jobs).map_err(config)?;
    let body = match args.common.format {
        Format::Json => json_text(&section)?,
        Format::Text => {
            let mut s = String::new();
            render::section(&mut s, &section);
            s
        }
    };
    Ok(Finished { body, failed: section.status == Status::Fail })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, outcome) = match &cli.command {
        Command::Verify(a) => (&a.common, run_verify(a)),
        Command::Group(a) => (&a.common, run_group(a)),
        Command::Gallery(a) => (&a.common, run_gallery(a)),
        Command::Reproduce(a) => (&a.common, run_reproduce(a)),
    };
    let finished = match outcome.and_then(|f| emit(common, &f.body).map(|()| f)) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if finished.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
