//! Stepping through a reduction or a normalization, one command per line.

use std::collections::BTreeSet;
use std::io::{BufRead, IsTerminal, Write};
use std::path::Path;

use anyhow::{anyhow, Result};
use grounds::ground::{Outcome, Reducer, StepEvent};
use grounds::interaction::{
    render_outcome, render_snapshot, snapshots, trace_lines, visited_addresses, CutNet, InteractionOutcome,
    StepReport, Stepper,
};
use grounds::ludics::Address;

use crate::{load, show_path, Status};

const HELP: &str = "commands: step, back, show, trace, quit";

enum Command {
    Step,
    Back,
    Show,
    Trace,
    Quit,
}

/// Reads commands until `quit` or the end of the input; blank lines are skipped.
fn commands(input: impl BufRead, out: &mut impl Write, mut on: impl FnMut(Command, &mut dyn Write) -> Result<()>) -> Result<Status> {
    let interactive = std::io::stdin().is_terminal();
    let prompt = |out: &mut dyn Write| -> Result<()> {
        if interactive {
            write!(out, "> ")?;
            out.flush()?;
        }
        Ok(())
    };
    prompt(out)?;
    for line in input.lines() {
        let line = line?;
        let cmd = match line.trim() {
            "" => {
                prompt(out)?;
                continue;
            }
            "step" | "s" => Command::Step,
            "back" | "b" => Command::Back,
            "show" => Command::Show,
            "trace" => Command::Trace,
            "quit" | "q" => Command::Quit,
            other => {
                writeln!(out, "unknown command `{other}`; {HELP}")?;
                prompt(out)?;
                continue;
            }
        };
        if matches!(cmd, Command::Quit) {
            break;
        }
        on(cmd, out)?;
        prompt(out)?;
    }
    Ok(Status::Yes)
}

fn describe(outcome: &InteractionOutcome) -> String {
    match outcome {
        InteractionOutcome::Converged(d) => format!("converged on {}", d.base),
        InteractionOutcome::Diverged { at: Some(a), reason } => format!("diverged at {a}: {reason}"),
        InteractionOutcome::Diverged { at: None, reason } => format!("diverged: {reason}"),
        InteractionOutcome::FuelExhausted => "fuel exhausted".to_owned(),
    }
}

/// `show` prints the current net the way `interact` prints snapshots, marked
/// with the addresses of the whole run, so the shows of a session are the
/// snapshots of the batch run.
pub fn net(path: &Path, fuel: usize, input: impl BufRead, mut out: impl Write) -> Result<Status> {
    let net = CutNet::new(load::designs(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let marked: BTreeSet<Address> = visited_addresses(&snapshots(&net, fuel).1.trace).into_iter().collect();
    let mut stepper = Stepper::new(&net, fuel);
    commands(input, &mut out, |cmd, out| {
        match cmd {
            Command::Step => {
                let already = stepper.result().is_some();
                match stepper.step() {
                    StepReport::Paired(event) => {
                        writeln!(out, "step {}", stepper.trace().len())?;
                        writeln!(out, "{event}")?;
                    }
                    StepReport::Finished(r) if already => writeln!(out, "finished: {}", describe(&r.outcome))?,
                    StepReport::Finished(r) => writeln!(out, "{}", describe(&r.outcome))?,
                }
            }
            Command::Back => {
                if stepper.back() {
                    writeln!(out, "back at step {}", stepper.states().len() - 1)?;
                } else {
                    writeln!(out, "already at the initial net")?;
                }
            }
            Command::Show => {
                let number = stepper.states().len();
                match stepper.result() {
                    Some(r) => {
                        writeln!(out, "snapshot {}", number + 1)?;
                        write!(out, "{}", render_outcome(&r.outcome, &marked))?;
                    }
                    None => {
                        let state: Vec<_> = stepper.current().iter().map(|s| s.design.clone()).collect();
                        write!(out, "{}", render_snapshot(number, &state, &marked))?;
                    }
                }
            }
            Command::Trace => {
                let trace = stepper.result().map(|r| r.trace.as_slice()).unwrap_or(stepper.trace());
                write!(out, "{}", trace_lines(trace))?;
            }
            Command::Quit => {}
        }
        Ok(())
    })
}

fn describe_term(o: &Outcome, steps: usize) -> String {
    match o {
        Outcome::Canonical(t) => format!("canonical: {t}"),
        Outcome::Loop(cycle) => format!("loop detected at step {steps}: back to {}", cycle[0]),
        Outcome::Stuck(t) => format!("stuck: {t}"),
        Outcome::FuelExhausted(t) => format!("fuel exhausted: {t}"),
    }
}

pub fn term(path: &Path, index: Option<usize>, fuel: usize, input: impl BufRead, mut out: impl Write) -> Result<Status> {
    let file = load::ground_file(path)?;
    let (_, t) = load::terms(&file, path, Some(index.unwrap_or(1)))?.remove(0);
    let mut r = Reducer::new(t, fuel);
    commands(input, &mut out, |cmd, out| {
        match cmd {
            Command::Step => {
                let already = r.outcome().is_some();
                match r.step(&file.language) {
                    StepEvent::Reduced(s) => {
                        writeln!(out, "step {}: {} at {}", r.trace().len(), s.equation, show_path(&s.path))?;
                        writeln!(out, "  {}", r.current())?;
                    }
                    StepEvent::Finished(o) if already => writeln!(out, "finished: {}", describe_term(&o, r.trace().len()))?,
                    StepEvent::Finished(o) => writeln!(out, "{}", describe_term(&o, r.trace().len()))?,
                }
            }
            Command::Back => {
                if r.back() {
                    writeln!(out, "back at step {}", r.trace().len())?;
                } else {
                    writeln!(out, "already at the initial term")?;
                }
            }
            Command::Show => writeln!(out, "{}", r.current())?,
            Command::Trace => {
                for (n, s) in r.trace().iter().enumerate() {
                    writeln!(out, "{}. {} at {}", n + 1, s.equation, show_path(&s.path))?;
                }
            }
            Command::Quit => {}
        }
        Ok(())
    })
}
