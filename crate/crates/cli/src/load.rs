//! Reading input files. Positions in error messages are prefixed with the
//! file they come from, and `(file "...")` references resolve relative to
//! the file that contains them.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use grounds::behaviour::text::{bounds_to_sexp, parse_behaviour_with, BehaviourSpec};
use grounds::behaviour::UniverseBounds;
use grounds::focusing::text::{parse_sequent, parse_strategy};
use grounds::focusing::{Formula, Strategy};
use grounds::ground::text::{parse_ground_forms, GroundFile};
use grounds::ground::GroundTerm;
use grounds::ludics::text::parse_designs_with;
use grounds::ludics::Design;
use grounds::sexp::{self, ParseError, ParseResult, Sexp};
use grounds::translation::text::parse_environment_with;
use grounds::translation::TranslationEnv;

const MAX_NESTING: usize = 16;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn located(path: &Path, e: ParseError) -> anyhow::Error {
    anyhow!("{}:{e}", path.display())
}

fn forms(path: &Path) -> Result<Vec<Sexp>> {
    sexp::parse_all(&read(path)?).map_err(|e| located(path, e))
}

fn single_form(path: &Path) -> Result<Sexp> {
    sexp::parse_one(&read(path)?).map_err(|e| located(path, e))
}

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn loader(dir: PathBuf, depth: usize) -> impl FnMut(&Sexp, &str) -> ParseResult<Vec<Design>> {
    move |form, name| {
        if depth >= MAX_NESTING {
            return Err(form.error("file references nest too deeply"));
        }
        designs_at(&dir.join(name), depth + 1).map_err(|e| form.error(format!("{e:#}")))
    }
}

fn designs_at(path: &Path, depth: usize) -> Result<Vec<Design>> {
    let forms = forms(path)?;
    parse_designs_with(&forms, &mut loader(dir_of(path), depth)).map_err(|e| located(path, e))
}

/// Every design of a `.dsn` or `.net` file.
pub fn designs(path: &Path) -> Result<Vec<Design>> {
    let ds = designs_at(path, 0)?;
    if ds.is_empty() {
        return Err(anyhow!("{}: no designs", path.display()));
    }
    Ok(ds)
}

pub fn one_design(path: &Path) -> Result<Design> {
    let mut ds = designs(path)?;
    if ds.len() != 1 {
        return Err(anyhow!("{}: expected one design, found {}", path.display(), ds.len()));
    }
    Ok(ds.remove(0))
}

pub fn ground_file(path: &Path) -> Result<GroundFile> {
    parse_ground_forms(&forms(path)?).map_err(|e| located(path, e))
}

/// The terms of a `.gt` file, numbered from 1, or only the `index`th.
pub fn terms(file: &GroundFile, path: &Path, index: Option<usize>) -> Result<Vec<(usize, GroundTerm)>> {
    let all: Vec<(usize, GroundTerm)> = file.terms.iter().cloned().enumerate().map(|(k, t)| (k + 1, t)).collect();
    if all.is_empty() {
        return Err(anyhow!("{}: no `(term ...)` forms", path.display()));
    }
    match index {
        None => Ok(all),
        Some(k) => all
            .into_iter()
            .find(|(n, _)| *n == k)
            .map(|t| vec![t])
            .ok_or_else(|| anyhow!("{}: there is no term {k}", path.display())),
    }
}

pub fn behaviour(path: &Path, bounds: Option<&UniverseBounds>) -> Result<BehaviourSpec> {
    let form = single_form(path)?;
    let mut spec = parse_behaviour_with(&form, &mut loader(dir_of(path), 0)).map_err(|e| located(path, e))?;
    if let Some(b) = bounds {
        spec.bounds = b.clone();
    }
    Ok(spec)
}

/// Atoms are built while parsing, so overriding bounds rewrites the form.
pub fn environment(path: &Path, fuel: usize, bounds: Option<&UniverseBounds>) -> Result<TranslationEnv> {
    let mut form = single_form(path)?;
    if let (Some(b), Sexp::List(items, _)) = (bounds, &mut form) {
        if let Some(first) = items.get_mut(1).filter(|f| matches!(f.head(), Some(("bounds", _)))) {
            *first = bounds_to_sexp(b);
        }
    }
    parse_environment_with(&form, fuel, &mut loader(dir_of(path), 0)).map_err(|e| located(path, e))
}

pub fn sequent(path: &Path) -> Result<Vec<Formula>> {
    parse_sequent(&single_form(path)?).map_err(|e| located(path, e))
}

pub fn strategy(path: &Path) -> Result<Strategy> {
    parse_strategy(&single_form(path)?).map_err(|e| located(path, e))
}
