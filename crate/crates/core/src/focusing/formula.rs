use std::fmt;

/// Formulas of multiplicative-additive linear logic in negation normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    PosAtom(String),
    NegAtom(String),
    Tensor(Box<Formula>, Box<Formula>),
    Plus(Box<Formula>, Box<Formula>),
    Par(Box<Formula>, Box<Formula>),
    With(Box<Formula>, Box<Formula>),
    One,
    Zero,
    Top,
    Bottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

use Formula as F;

impl Formula {
    pub fn pos(name: &str) -> Self {
        F::PosAtom(name.to_owned())
    }

    pub fn neg(name: &str) -> Self {
        F::NegAtom(name.to_owned())
    }

    pub fn tensor(a: Formula, b: Formula) -> Self {
        F::Tensor(Box::new(a), Box::new(b))
    }

    pub fn plus(a: Formula, b: Formula) -> Self {
        F::Plus(Box::new(a), Box::new(b))
    }

    pub fn par(a: Formula, b: Formula) -> Self {
        F::Par(Box::new(a), Box::new(b))
    }

    pub fn with(a: Formula, b: Formula) -> Self {
        F::With(Box::new(a), Box::new(b))
    }

    /// Linear negation, pushed to the atoms.
    pub fn dual(&self) -> Formula {
        match self {
            F::PosAtom(a) => F::NegAtom(a.clone()),
            F::NegAtom(a) => F::PosAtom(a.clone()),
            F::Tensor(a, b) => F::par(a.dual(), b.dual()),
            F::Par(a, b) => F::tensor(a.dual(), b.dual()),
            F::Plus(a, b) => F::with(a.dual(), b.dual()),
            F::With(a, b) => F::plus(a.dual(), b.dual()),
            F::One => F::Bottom,
            F::Bottom => F::One,
            F::Zero => F::Top,
            F::Top => F::Zero,
        }
    }

    pub fn polarity(&self) -> Polarity {
        match self {
            F::PosAtom(_) | F::Tensor(..) | F::Plus(..) | F::One | F::Zero => Polarity::Positive,
            F::NegAtom(_) | F::Par(..) | F::With(..) | F::Top | F::Bottom => Polarity::Negative,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.polarity() == Polarity::Positive
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, F::PosAtom(_) | F::NegAtom(_))
    }

    /// A compound negative formula, decomposed by a negative cluster.
    pub fn is_negative_compound(&self) -> bool {
        !self.is_positive() && !self.is_atom()
    }

    /// A compound positive formula, the focus of a positive cluster.
    pub fn is_positive_compound(&self) -> bool {
        self.is_positive() && !self.is_atom()
    }

    /// Clusters open onto formulas of the other polarity: no negative atom
    /// directly under ⅋ or &, no positive atom directly under ⊗ or ⊕.
    /// Closed under duality.
    pub fn is_polarized(&self) -> bool {
        match self {
            F::Par(a, b) | F::With(a, b) => {
                !matches!(**a, F::NegAtom(_)) && !matches!(**b, F::NegAtom(_)) && a.is_polarized() && b.is_polarized()
            }
            F::Tensor(a, b) | F::Plus(a, b) => {
                !matches!(**a, F::PosAtom(_)) && !matches!(**b, F::PosAtom(_)) && a.is_polarized() && b.is_polarized()
            }
            _ => true,
        }
    }

    /// Premise contents of the negative cluster on this formula: one entry per
    /// premise, listing the subformulas it introduces.
    pub fn negative_branches(&self) -> Vec<Vec<Formula>> {
        match self {
            F::Par(a, b) => {
                let (l, r) = (a.negative_branches(), b.negative_branches());
                l.iter().flat_map(|x| r.iter().map(move |y| x.iter().chain(y).cloned().collect())).collect()
            }
            F::With(a, b) => a.negative_branches().into_iter().chain(b.negative_branches()).collect(),
            F::Top => Vec::new(),
            F::Bottom => vec![Vec::new()],
            other => vec![vec![other.clone()]],
        }
    }

    /// The choices a positive cluster on this formula can make, one premise
    /// per chosen subformula.
    pub fn positive_alternatives(&self) -> Vec<Vec<Formula>> {
        match self {
            F::Plus(a, b) => a.positive_alternatives().into_iter().chain(b.positive_alternatives()).collect(),
            F::Tensor(a, b) => {
                let (l, r) = (a.positive_alternatives(), b.positive_alternatives());
                l.iter().flat_map(|x| r.iter().map(move |y| x.iter().chain(y).cloned().collect())).collect()
            }
            F::One => vec![Vec::new()],
            F::Zero => Vec::new(),
            other => vec![vec![other.clone()]],
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |f: &mut fmt::Formatter<'_>, x: &Formula| match x {
            F::Tensor(..) | F::Par(..) | F::Plus(..) | F::With(..) => write!(f, "({x})"),
            _ => write!(f, "{x}"),
        };
        let bin = |f: &mut fmt::Formatter<'_>, a: &Formula, op: &str, b: &Formula| {
            sub(f, a)?;
            write!(f, " {op} ")?;
            sub(f, b)
        };
        match self {
            F::PosAtom(a) => f.write_str(a),
            F::NegAtom(a) => write!(f, "{a}^⊥"),
            F::Tensor(a, b) => bin(f, a, "⊗", b),
            F::Par(a, b) => bin(f, a, "⅋", b),
            F::Plus(a, b) => bin(f, a, "⊕", b),
            F::With(a, b) => bin(f, a, "&", b),
            F::One => f.write_str("1"),
            F::Zero => f.write_str("0"),
            F::Top => f.write_str("⊤"),
            F::Bottom => f.write_str("⊥"),
        }
    }
}
