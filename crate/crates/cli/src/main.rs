//! `grounds`: check, reduce and classify ground terms; validate, normalize
//! and classify designs; search for focused proofs.
//!
//! Exit status 0 for an affirmative answer, 1 for a negative one, 2 for
//! errors and undecided answers.

mod load;
mod repl;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use grounds::behaviour::{BehaviourError, CandidateVerdict, UniverseBounds};
use grounds::focusing::search::DEFAULT_SEARCH_FUEL;
use grounds::focusing::text::strategy_to_string;
use grounds::focusing::{
    derivation_to_strategy, focused_search, strategy_to_derivation, Derivation, Rule, SearchConfig, SearchOutcome,
};
use grounds::ground::text::term_to_sexp;
use grounds::ground::{denotes_ground, typecheck, GroundhoodConfig, Outcome, Reducer, StepEvent, Verdict};
use grounds::interaction::{
    render_snapshots, snapshots, trace_lines, CutNet, InteractionOutcome, InteractionResult, Orthogonality,
};
use grounds::ludics::text::design_to_string;
use grounds::translation::{check_translation, translate};

/// Answers, ordered so that the worst one wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Indented trees and traces.
    Pretty,
    /// One action or rewrite per line.
    TraceLines,
    /// One JSON object per result.
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Render {
    Snapshots,
    TraceLines,
}

#[derive(Parser)]
#[command(name = "grounds", version, about = "Ground terms, designs, behaviours and focused proofs")]
struct Cli {
    /// Rewrites, matched pairs or visited sequents allowed before giving up.
    #[arg(long, global = true)]
    fuel: Option<usize>,
    /// Universe bounds `DEPTH[:N]`: designs of depth at most DEPTH over all
    /// subsets of {0..N} (N defaults to 1). Overrides bounds in files.
    #[arg(long, global = true, value_parser = parse_bounds_flag)]
    bounds: Option<UniverseBounds>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TermArgs {
    /// A `.gt` file.
    #[arg(long)]
    term: PathBuf,
    /// Only the given term of the file, counting from 1.
    #[arg(long)]
    index: Option<usize>,
}

#[derive(Args)]
struct SequentArgs {
    /// A `.frm` file holding `(sequent ...)`.
    #[arg(long)]
    sequent: PathBuf,
    /// Close unprovable leaves with the daimon.
    #[arg(long)]
    daimon: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Type-check every term of a file.
    Check(TermArgs),
    /// Reduce terms to canonical form, printing each rewrite.
    Reduce(TermArgs),
    /// Decide whether closed terms denote grounds.
    Ground(TermArgs),
    /// Check the designs of a file.
    DesignValidate {
        #[arg(long)]
        design: PathBuf,
    },
    /// Normalize a cut-net.
    Interact {
        #[arg(long)]
        net: PathBuf,
        /// Shorthand for `--format pretty` or `--format trace-lines`.
        #[arg(long, value_enum)]
        render: Option<Render>,
    },
    /// Test two designs for orthogonality.
    Orth {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        counter: PathBuf,
    },
    /// Build a behaviour from its generators and summarize it.
    Behaviour {
        #[arg(long)]
        behaviour: PathBuf,
        /// List the members.
        #[arg(long)]
        members: bool,
    },
    /// The incarnation of each design in a behaviour.
    Incarnate {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        behaviour: PathBuf,
    },
    /// Ground, pseudo-ground or outside a behaviour.
    Classify {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        behaviour: PathBuf,
    },
    /// Translate linear implicational terms into designs and classify them.
    Translate {
        #[command(flatten)]
        term: TermArgs,
        /// An `(environment ...)` file interpreting atoms and constants.
        #[arg(long)]
        env: PathBuf,
        /// Write the designs here; the report still goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Focused proof search.
    Focus(SequentArgs),
    /// Search, then print the strategy of the derivation found.
    ToStrategy(SequentArgs),
    /// Rebuild a derivation from a strategy.
    ToDerivation {
        #[arg(long)]
        strategy: PathBuf,
    },
    /// Step through a reduction or a normalization: step, back, show, trace, quit.
    Repl {
        #[arg(long, required_unless_present = "term", conflicts_with = "term")]
        net: Option<PathBuf>,
        #[arg(long)]
        term: Option<PathBuf>,
        #[arg(long, requires = "term")]
        index: Option<usize>,
    },
}

fn parse_bounds_flag(s: &str) -> Result<UniverseBounds, String> {
    let (depth, n) = s.split_once(':').unwrap_or((s, "1"));
    let depth: usize = depth.parse().map_err(|_| format!("bad depth `{depth}`"))?;
    let n: u32 = n.parse().map_err(|_| format!("bad index bound `{n}`"))?;
    if depth == 0 {
        return Err("depth must be at least 1".into());
    }
    Ok(UniverseBounds::powerset(depth, n))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(Status::Unknown as u8)
        }
    }
}

/// `term k: ` when the file has several items.
fn label(what: &str, k: usize, n: usize) -> String {
    if n > 1 {
        format!("{what} {k}: ")
    } else {
        String::new()
    }
}

fn show_path(path: &[usize]) -> String {
    if path.is_empty() {
        "ε".to_owned()
    } else {
        path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
    }
}

fn run(cli: &Cli) -> Result<Status> {
    let fuel = |default: usize| cli.fuel.unwrap_or(default);
    let bounds = cli.bounds.as_ref();
    match &cli.command {
        Command::Check(a) => check(a, cli.format),
        Command::Reduce(a) => reduce(a, fuel(grounds::ground::DEFAULT_FUEL), cli.format),
        Command::Ground(a) => ground(a, fuel(grounds::ground::DEFAULT_FUEL), cli.format),
        Command::DesignValidate { design } => design_validate(design, cli.format),
        Command::Interact { net, render } => {
            let format = match render {
                Some(Render::Snapshots) => Format::Pretty,
                Some(Render::TraceLines) => Format::TraceLines,
                None => cli.format,
            };
            interact(net, fuel(grounds::interaction::DEFAULT_FUEL), format)
        }
        Command::Orth { design, counter } => orth(design, counter, fuel(grounds::interaction::DEFAULT_FUEL), cli.format),
        Command::Behaviour { behaviour, members } => {
            summarize_behaviour(behaviour, *members, bounds, fuel(grounds::interaction::DEFAULT_FUEL), cli.format)
        }
        Command::Incarnate { design, behaviour } => {
            incarnate(design, behaviour, bounds, fuel(grounds::interaction::DEFAULT_FUEL), cli.format)
        }
        Command::Classify { design, behaviour } => {
            classify(design, behaviour, bounds, fuel(grounds::interaction::DEFAULT_FUEL), cli.format)
        }
        Command::Translate { term, env, out } => {
            translate_terms(term, env, out.as_deref(), bounds, fuel(grounds::interaction::DEFAULT_FUEL), cli.format)
        }
        Command::Focus(a) => focus(a, fuel(DEFAULT_SEARCH_FUEL), cli.format, false),
        Command::ToStrategy(a) => focus(a, fuel(DEFAULT_SEARCH_FUEL), cli.format, true),
        Command::ToDerivation { strategy } => to_derivation(strategy, cli.format),
        Command::Repl { net, term, index } => {
            let stdin = std::io::stdin().lock();
            let stdout = std::io::stdout().lock();
            match (net, term) {
                (Some(net), _) => repl::net(net, fuel(grounds::interaction::DEFAULT_FUEL), stdin, stdout),
                (None, Some(term)) => repl::term(term, *index, fuel(grounds::ground::DEFAULT_FUEL), stdin, stdout),
                (None, None) => Err(anyhow!("give `--net` or `--term`")),
            }
        }
    }
}

fn check(a: &TermArgs, format: Format) -> Result<Status> {
    let file = load::ground_file(&a.term)?;
    let terms = load::terms(&file, &a.term, a.index)?;
    let mut status = Status::Yes;
    for (k, t) in &terms {
        let result = typecheck(t, &file.language);
        status = status.max(if result.is_ok() { Status::Yes } else { Status::No });
        match format {
            Format::Records => {
                let r = match &result {
                    Ok(ty) => json!({"term": k, "ok": true, "type": ty.to_string()}),
                    Err(e) => json!({"term": k, "ok": false, "error": e.to_string()}),
                };
                println!("{r}");
            }
            _ => match result {
                Ok(ty) => println!("{}{ty}", label("term", *k, file.terms.len())),
                Err(e) => println!("{}{e}", label("term", *k, file.terms.len())),
            },
        }
    }
    Ok(status)
}

fn outcome_status(o: &Outcome) -> Status {
    match o {
        Outcome::Canonical(_) => Status::Yes,
        Outcome::Loop(_) | Outcome::Stuck(_) => Status::No,
        Outcome::FuelExhausted(_) => Status::Unknown,
    }
}

fn describe_outcome(o: &Outcome, n: usize) -> String {
    let steps = if n == 1 { "1 step".to_owned() } else { format!("{n} steps") };
    match o {
        Outcome::Canonical(t) => format!("canonical after {steps}: {t}"),
        Outcome::Loop(cycle) => {
            format!("loop after {steps}: back to {}, a cycle of {}", cycle[0], cycle.len() - 1)
        }
        Outcome::Stuck(t) => format!("stuck after {steps}: {t}"),
        Outcome::FuelExhausted(t) => format!("fuel exhausted after {steps}: {t}"),
    }
}

fn reduce(a: &TermArgs, fuel: usize, format: Format) -> Result<Status> {
    let file = load::ground_file(&a.term)?;
    let terms = load::terms(&file, &a.term, a.index)?;
    let mut status = Status::Yes;
    for (k, t) in terms {
        let mut r = Reducer::new(t.clone(), fuel);
        let outcome = loop {
            if let StepEvent::Finished(o) = r.step(&file.language) {
                break o;
            }
        };
        status = status.max(outcome_status(&outcome));
        match format {
            Format::Pretty => {
                println!("{}{t}", label("term", k, file.terms.len()));
                for (n, (step, after)) in r.trace().iter().zip(&r.history()[1..]).enumerate() {
                    println!("  {}. {} at {}", n + 1, step.equation, show_path(&step.path));
                    println!("     {after}");
                }
                println!("  {}", describe_outcome(&outcome, r.trace().len()));
            }
            Format::TraceLines => {
                for step in r.trace() {
                    println!("{} {}", step.equation, show_path(&step.path));
                }
                println!("{} {}", outcome.tag(), outcome.term());
            }
            Format::Records => {
                let steps: Vec<_> = r
                    .trace()
                    .iter()
                    .map(|s| json!({"equation": s.equation, "path": s.path}))
                    .collect();
                let rec = json!({
                    "term": k,
                    "outcome": outcome.tag(),
                    "result": term_to_sexp(outcome.term()).to_string(),
                    "steps": steps,
                });
                println!("{rec}");
            }
        }
    }
    Ok(status)
}

fn ground(a: &TermArgs, fuel: usize, format: Format) -> Result<Status> {
    let file = load::ground_file(&a.term)?;
    let terms = load::terms(&file, &a.term, a.index)?;
    let config = GroundhoodConfig { fuel, ..GroundhoodConfig::default() };
    let mut status = Status::Yes;
    for (k, t) in terms {
        let verdict = denotes_ground(&t, &file.language, config);
        status = status.max(match verdict {
            Verdict::Yes => Status::Yes,
            Verdict::No(_) => Status::No,
            Verdict::Unknown(_) => Status::Unknown,
        });
        match format {
            Format::Records => println!("{}", json!({"term": k, "verdict": verdict.to_string()})),
            _ => println!("{}{verdict}", label("term", k, file.terms.len())),
        }
    }
    Ok(status)
}

fn design_validate(path: &Path, format: Format) -> Result<Status> {
    let designs = load::designs(path)?;
    let mut status = Status::Yes;
    for (k, d) in designs.iter().enumerate() {
        let result = d.validate();
        status = status.max(if result.is_ok() { Status::Yes } else { Status::No });
        match (format, result) {
            (Format::Records, r) => {
                let err = r.err().map(|e| e.to_string());
                println!("{}", json!({"design": k + 1, "base": d.base.to_string(), "ok": err.is_none(), "error": err}));
            }
            (_, Ok(())) => println!("{}ok on {}", label("design", k + 1, designs.len()), d.base),
            (_, Err(e)) => println!("{}{e}", label("design", k + 1, designs.len())),
        }
    }
    Ok(status)
}

fn interaction_status(r: &InteractionResult) -> Status {
    match r.outcome {
        InteractionOutcome::Converged(_) => Status::Yes,
        InteractionOutcome::Diverged { .. } => Status::No,
        InteractionOutcome::FuelExhausted => Status::Unknown,
    }
}

fn interaction_record(r: &InteractionResult) -> serde_json::Value {
    let (outcome, detail) = match &r.outcome {
        InteractionOutcome::Converged(d) => ("converged", design_to_string(d)),
        InteractionOutcome::Diverged { at, reason } => {
            ("diverged", at.as_ref().map(|a| format!("{reason} at {a}")).unwrap_or_else(|| reason.to_string()))
        }
        InteractionOutcome::FuelExhausted => ("fuel-exhausted", String::new()),
    };
    let trace: Vec<String> = trace_lines(&r.trace).lines().map(str::to_owned).collect();
    json!({"outcome": outcome, "detail": detail, "pairs": r.pairs(), "trace": trace})
}

fn interact(path: &Path, fuel: usize, format: Format) -> Result<Status> {
    let net = CutNet::new(load::designs(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let (states, result) = snapshots(&net, fuel);
    match format {
        Format::Pretty => print!("{}", render_snapshots(&states, &result)),
        Format::TraceLines => print!("{}", trace_lines(&result.trace)),
        Format::Records => println!("{}", interaction_record(&result)),
    }
    Ok(interaction_status(&result))
}

fn orth(design: &Path, counter: &Path, fuel: usize, format: Format) -> Result<Status> {
    let (d, e) = (load::one_design(design)?, load::one_design(counter)?);
    let verdict = grounds::interaction::orthogonal(&d, &e, fuel)?;
    match format {
        Format::Records => println!("{}", json!({"orthogonal": verdict.to_string()})),
        _ => println!("{verdict}"),
    }
    Ok(match verdict {
        Orthogonality::Yes => Status::Yes,
        Orthogonality::No => Status::No,
        Orthogonality::Unknown => Status::Unknown,
    })
}

fn build_behaviour(
    path: &Path,
    bounds: Option<&UniverseBounds>,
    fuel: usize,
) -> Result<grounds::behaviour::Behaviour> {
    let spec = load::behaviour(path, bounds)?;
    spec.build(fuel).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn summarize_behaviour(
    path: &Path,
    list: bool,
    bounds: Option<&UniverseBounds>,
    fuel: usize,
    format: Format,
) -> Result<Status> {
    let b = build_behaviour(path, bounds, fuel)?;
    let material = b.material_members();
    match format {
        Format::Records => {
            let rec = json!({
                "base": b.base.to_string(),
                "bounds": b.bounds.to_string(),
                "generators": b.generators.len(),
                "counter_families": b.orthogonal.len(),
                "members": b.members.len(),
                "material": material.len(),
                "undecided": b.unknown,
            });
            println!("{rec}");
        }
        _ => {
            println!("base {}", b.base);
            println!("bounds {}", b.bounds);
            println!("generators {}", b.generators.len());
            println!("counter-designs {}", b.orthogonal.len());
            println!("members {} ({} material)", b.members.len(), material.len());
            if b.unknown > 0 {
                println!("undecided {} (fuel {})", b.unknown, b.fuel);
            }
            if list {
                for d in &b.members {
                    println!("{}", design_to_string(d));
                }
            }
        }
    }
    Ok(if b.unknown > 0 { Status::Unknown } else { Status::Yes })
}

fn incarnate(
    design: &Path,
    behaviour: &Path,
    bounds: Option<&UniverseBounds>,
    fuel: usize,
    format: Format,
) -> Result<Status> {
    let designs = load::designs(design)?;
    let b = build_behaviour(behaviour, bounds, fuel)?;
    let mut status = Status::Yes;
    for (k, d) in designs.iter().enumerate() {
        let (s, text, material) = match b.incarnation(d) {
            Ok(inc) => (Status::Yes, design_to_string(&inc), Some(inc == *d)),
            Err(BehaviourError::Unknown) => (Status::Unknown, format!("undecided within fuel {}", b.fuel), None),
            Err(e) => (Status::No, e.to_string(), None),
        };
        status = status.max(s);
        match format {
            Format::Records => {
                println!("{}", json!({"design": k + 1, "member": s == Status::Yes, "incarnation": text, "material": material}))
            }
            _ => {
                let prefix = label("design", k + 1, designs.len());
                match material {
                    Some(m) => println!("{prefix}{}\n{text}", if m { "material" } else { "not material" }),
                    None => println!("{prefix}{text}"),
                }
            }
        }
    }
    Ok(status)
}

fn verdict_status(v: CandidateVerdict) -> Status {
    match v {
        CandidateVerdict::Ground => Status::Yes,
        CandidateVerdict::PseudoGround(_) | CandidateVerdict::NotInBehaviour => Status::No,
        CandidateVerdict::Unknown(_) => Status::Unknown,
    }
}

fn classify(
    design: &Path,
    behaviour: &Path,
    bounds: Option<&UniverseBounds>,
    fuel: usize,
    format: Format,
) -> Result<Status> {
    let designs = load::designs(design)?;
    let b = build_behaviour(behaviour, bounds, fuel)?;
    let mut status = Status::Yes;
    for (k, d) in designs.iter().enumerate() {
        let v = b.classify(d);
        status = status.max(verdict_status(v));
        match format {
            Format::Records => println!("{}", json!({"design": k + 1, "verdict": v.to_string()})),
            _ => println!("{}{v}", label("design", k + 1, designs.len())),
        }
    }
    Ok(status)
}

fn translate_terms(
    a: &TermArgs,
    env_path: &Path,
    out: Option<&Path>,
    bounds: Option<&UniverseBounds>,
    fuel: usize,
    format: Format,
) -> Result<Status> {
    let file = load::ground_file(&a.term)?;
    let terms = load::terms(&file, &a.term, a.index)?;
    let mut env = load::environment(env_path, fuel, bounds)?;
    let mut status = Status::Yes;
    let mut written = String::new();
    for (k, t) in terms {
        let tr = translate(&t, &mut env).map_err(|e| anyhow!("term {k}: {e}"))?;
        let verdict = check_translation(&t, &tr.design, &env).map_err(|e| anyhow!("term {k}: {e}"))?;
        status = status.max(verdict_status(verdict));
        let text = design_to_string(&tr.design);
        written.push_str(&format!("; term {k}: {}\n{text}\n", tr.ty));
        match format {
            Format::Records => {
                let rec = json!({
                    "term": k,
                    "type": tr.ty.to_string(),
                    "site": tr.site.to_string(),
                    "design": text,
                    "verdict": verdict.to_string(),
                });
                println!("{rec}");
            }
            _ => {
                if out.is_none() {
                    println!("{text}");
                }
                println!("; term {k}: {} on {}: {verdict}", tr.ty, tr.site);
            }
        }
    }
    if let Some(path) = out {
        std::fs::write(path, written).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
    }
    Ok(status)
}

fn uses_daimon(d: &Derivation) -> bool {
    d.rule == Rule::Daimon || d.premises.iter().any(uses_daimon)
}

fn focus(a: &SequentArgs, fuel: usize, format: Format, as_strategy: bool) -> Result<Status> {
    let seq = load::sequent(&a.sequent)?;
    let outcome = focused_search(&seq, SearchConfig { fuel, daimon: a.daimon })
        .map_err(|e| anyhow!("{}: {e}", a.sequent.display()))?;
    let (status, summary) = match &outcome {
        SearchOutcome::Found(d) if uses_daimon(d) => (Status::No, "closed with †"),
        SearchOutcome::Found(_) => (Status::Yes, "proved"),
        SearchOutcome::NotFound => (Status::No, "no focused proof"),
        SearchOutcome::FuelExhausted => (Status::Unknown, "fuel exhausted"),
    };
    let found = match &outcome {
        SearchOutcome::Found(d) => Some(d),
        _ => None,
    };
    match format {
        Format::Records => {
            let body = found.map(|d| if as_strategy { strategy_to_string(&derivation_to_strategy(d)) } else { d.render() });
            println!("{}", json!({"result": summary, "output": body}));
        }
        _ => match found {
            Some(d) if as_strategy => println!("{}", strategy_to_string(&derivation_to_strategy(d))),
            Some(d) => println!("{}{summary}", d.render()),
            None => println!("{summary}"),
        },
    }
    Ok(status)
}

fn to_derivation(path: &Path, format: Format) -> Result<Status> {
    let s = load::strategy(path)?;
    let result = strategy_to_derivation(&s);
    match (format, &result) {
        (Format::Records, _) => {
            let (ok, body) = match &result {
                Ok(d) => (true, d.render()),
                Err(e) => (false, e.to_string()),
            };
            println!("{}", json!({"ok": ok, "output": body}));
        }
        (_, Ok(d)) => print!("{}", d.render()),
        (_, Err(e)) => println!("not a derivation: {e}"),
    }
    Ok(match result {
        Ok(d) if uses_daimon(&d) => Status::No,
        Ok(_) => Status::Yes,
        Err(_) => Status::No,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_flag() {
        let b = parse_bounds_flag("3").unwrap();
        assert_eq!((b.max_depth, b.pool.len()), (3, 4));
        assert_eq!(parse_bounds_flag("2:2").unwrap().pool.len(), 8);
        assert!(parse_bounds_flag("0").is_err());
        assert!(parse_bounds_flag("x:1").is_err());
    }

    #[test]
    fn statuses_combine_to_the_worst() {
        assert_eq!(Status::Yes.max(Status::No), Status::No);
        assert_eq!(Status::No.max(Status::Unknown), Status::Unknown);
    }

    #[test]
    fn paths() {
        assert_eq!(show_path(&[]), "ε");
        assert_eq!(show_path(&[0, 2]), "0.2");
    }
}
