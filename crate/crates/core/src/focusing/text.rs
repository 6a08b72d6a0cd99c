//! Text syntax for polarized formulas, sequents and strategies.
//!
//! ```text
//! (sequent (par (atom+ A) (with (atom+ B) (atom+ C)))
//!          (plus (tensor (atom- A) (atom- B)) (tensor (atom- A) (atom- C))))
//! ```

use super::formula::Formula;
use super::strategy::{Game, Move, Strategy};
use crate::sexp::{self, ParseResult, Sexp};

pub fn parse_formula(s: &Sexp) -> ParseResult<Formula> {
    if let Some(a) = s.as_atom() {
        return match a {
            "one" | "1" => Ok(Formula::One),
            "zero" | "0" => Ok(Formula::Zero),
            "top" | "⊤" => Ok(Formula::Top),
            "bottom" | "⊥" => Ok(Formula::Bottom),
            _ => Err(s.error(format!("unknown constant `{a}`; atoms are written `(atom+ A)` or `(atom- A)`"))),
        };
    }
    let (head, args) = s.expect_head("a formula")?;
    let binary = |make: fn(Formula, Formula) -> Formula| -> ParseResult<Formula> {
        if args.len() < 2 {
            return Err(s.error(format!("`{head}` takes at least two formulas")));
        }
        let mut items = args.iter().rev().map(parse_formula);
        let last = items.next().expect("two arguments")?;
        items.try_fold(last, |acc, f| Ok(make(f?, acc)))
    };
    match head {
        "atom+" | "atom-" => {
            sexp::arity(s, head, args, 1)?;
            let name = args[0].expect_atom("an atom name")?;
            Ok(if head == "atom+" { Formula::pos(name) } else { Formula::neg(name) })
        }
        "tensor" => binary(Formula::tensor),
        "plus" => binary(Formula::plus),
        "par" => binary(Formula::par),
        "with" => binary(Formula::with),
        "dual" => {
            sexp::arity(s, head, args, 1)?;
            Ok(parse_formula(&args[0])?.dual())
        }
        "one" | "zero" | "top" | "bottom" if args.is_empty() => parse_formula(&Sexp::atom(head)),
        other => Err(s.error(format!("unknown connective `{other}`"))),
    }
}

pub fn formula_to_sexp(f: &Formula) -> Sexp {
    match f {
        Formula::PosAtom(a) => Sexp::tagged("atom+", [Sexp::atom(a.clone())]),
        Formula::NegAtom(a) => Sexp::tagged("atom-", [Sexp::atom(a.clone())]),
        Formula::Tensor(a, b) => Sexp::tagged("tensor", [formula_to_sexp(a), formula_to_sexp(b)]),
        Formula::Plus(a, b) => Sexp::tagged("plus", [formula_to_sexp(a), formula_to_sexp(b)]),
        Formula::Par(a, b) => Sexp::tagged("par", [formula_to_sexp(a), formula_to_sexp(b)]),
        Formula::With(a, b) => Sexp::tagged("with", [formula_to_sexp(a), formula_to_sexp(b)]),
        Formula::One => Sexp::atom("one"),
        Formula::Zero => Sexp::atom("zero"),
        Formula::Top => Sexp::atom("top"),
        Formula::Bottom => Sexp::atom("bottom"),
    }
}

pub fn parse_sequent(s: &Sexp) -> ParseResult<Vec<Formula>> {
    match s.expect_head("`(sequent FORMULA...)`")? {
        ("sequent", items) => items.iter().map(parse_formula).collect(),
        (other, _) => Err(s.error(format!("expected `sequent`, found `{other}`"))),
    }
}

pub fn sequent_to_sexp(seq: &[Formula]) -> Sexp {
    Sexp::tagged("sequent", seq.iter().map(formula_to_sexp))
}

/// The single `(sequent ...)` form of a file.
pub fn parse_sequent_file(src: &str) -> ParseResult<Vec<Formula>> {
    parse_sequent(&sexp::parse_one(src)?)
}

fn parse_move(s: &Sexp) -> ParseResult<Move> {
    match s.expect_head("`(move FOCUS (CHOICE...))`")? {
        ("move", [focus, choices]) => Ok(Move::new(
            parse_formula(focus)?,
            choices.expect_list("a choice list")?.iter().map(parse_formula).collect::<Result<_, _>>()?,
        )),
        _ => Err(s.error("expected `(move FOCUS (CHOICE...))`")),
    }
}

fn parse_game(s: &Sexp) -> ParseResult<Game> {
    match s.expect_head("`(game MOVE...)`")? {
        ("game", moves) => moves.iter().map(parse_move).collect(),
        _ => Err(s.error("expected `(game MOVE...)`")),
    }
}

/// `(strategy (sequent ...) (game ...) ...)`, games taken as listed.
pub fn parse_strategy(s: &Sexp) -> ParseResult<Strategy> {
    match s.expect_head("`(strategy (sequent ...) (game ...)...)`")? {
        ("strategy", [seq, games @ ..]) => Ok(Strategy {
            sequent: parse_sequent(seq)?,
            games: games.iter().map(parse_game).collect::<Result<_, _>>()?,
        }),
        _ => Err(s.error("expected `(strategy (sequent ...) (game ...)...)`")),
    }
}

pub fn parse_strategy_file(src: &str) -> ParseResult<Strategy> {
    parse_strategy(&sexp::parse_one(src)?)
}

pub fn strategy_to_sexp(s: &Strategy) -> Sexp {
    let games = s.games.iter().map(|g| {
        Sexp::tagged(
            "game",
            g.iter().map(|m| {
                Sexp::tagged("move", [formula_to_sexp(&m.focus), Sexp::list(m.choices.iter().map(formula_to_sexp).collect())])
            }),
        )
    });
    Sexp::tagged("strategy", std::iter::once(sequent_to_sexp(&s.sequent)).chain(games))
}

pub fn strategy_to_string(s: &Strategy) -> String {
    sexp::pretty(&strategy_to_sexp(s), 78)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_round_trip() {
        let src = "(par (atom+ A) (with (atom+ B) (atom+ C)))";
        let f = parse_formula(&sexp::parse_one(src).unwrap()).unwrap();
        assert_eq!(f.to_string(), "A ⅋ (B & C)");
        assert_eq!(formula_to_sexp(&f).to_string(), src);
        let d = parse_formula(&sexp::parse_one("(dual (tensor (atom+ A) one))").unwrap()).unwrap();
        assert_eq!(d, Formula::par(Formula::neg("A"), Formula::Bottom));
    }

    #[test]
    fn nary_connectives_nest_to_the_right() {
        let f = parse_formula(&sexp::parse_one("(tensor (atom+ A) (atom+ B) (atom+ C))").unwrap()).unwrap();
        assert_eq!(f.to_string(), "A ⊗ (B ⊗ C)");
    }
}
