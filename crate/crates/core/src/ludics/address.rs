use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A locus: a finite string of natural numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Address(pub Vec<u32>);

impl Address {
    pub fn root() -> Self {
        Address(Vec::new())
    }

    pub fn new(path: &[u32]) -> Self {
        Address(path.to_vec())
    }

    /// `ξi`.
    pub fn child(&self, i: u32) -> Address {
        let mut v = self.0.clone();
        v.push(i);
        Address(v)
    }

    /// `ξ ⋆ I`.
    pub fn star(&self, ram: &Ramification) -> BTreeSet<Address> {
        ram.iter().map(|i| self.child(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Neither is a prefix of the other.
    pub fn disjoint(&self, other: &Address) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    pub fn parent(&self) -> Option<(Address, u32)> {
        let (&last, init) = self.0.split_last()?;
        Some((Address(init.to_vec()), last))
    }

    /// Replaces the prefix `from` by `to`; addresses outside `from` are unchanged.
    pub fn relocate(&self, from: &Address, to: &Address) -> Address {
        if from.is_prefix_of(self) {
            let mut v = to.0.clone();
            v.extend_from_slice(&self.0[from.len()..]);
            Address(v)
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddressParseError(pub String);

impl fmt::Display for AddressParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}` is not an address (dot-separated naturals or ε)", self.0)
    }
}

impl std::error::Error for AddressParseError {}

impl FromStr for Address {
    type Err = AddressParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ε" || s == "eps" {
            return Ok(Address::root());
        }
        s.split('.')
            .map(|p| p.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(Address)
            .map_err(|_| AddressParseError(s.to_owned()))
    }
}

/// A finite set of natural numbers. Ordered by size, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ramification(pub BTreeSet<u32>);

impl Ord for Ramification {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Ramification {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ramification {
    pub fn empty() -> Self {
        Ramification::default()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.contains(&i)
    }

    pub fn is_subset(&self, other: &Ramification) -> bool {
        self.0.is_subset(&other.0)
    }

    /// All subsets of `{0, ..., n}`, ordered by size then lexicographically.
    pub fn all_subsets_up_to(n: u32) -> Vec<Ramification> {
        powerset(&(0..=n).collect::<Vec<_>>())
    }
}

/// Every subset of `items`, smallest first.
pub fn powerset(items: &[u32]) -> Vec<Ramification> {
    let mut out: Vec<Ramification> = (0u64..1 << items.len())
        .map(|mask| {
            Ramification(items.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect())
        })
        .collect();
    out.sort();
    out
}

impl<const N: usize> From<[u32; N]> for Ramification {
    fn from(items: [u32; N]) -> Self {
        Ramification(items.into_iter().collect())
    }
}

impl FromIterator<u32> for Ramification {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        Ramification(iter.into_iter().collect())
    }
}

impl fmt::Display for Ramification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// `Γ ⊢ Δ` with at most one negative address.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pitchfork {
    pub negative: Option<Address>,
    pub positive: BTreeSet<Address>,
}

impl Pitchfork {
    /// `⊢ Δ`.
    pub fn positive(addrs: impl IntoIterator<Item = Address>) -> Self {
        Pitchfork { negative: None, positive: addrs.into_iter().collect() }
    }

    /// `ξ ⊢ Δ`.
    pub fn negative(xi: Address, addrs: impl IntoIterator<Item = Address>) -> Self {
        Pitchfork { negative: Some(xi), positive: addrs.into_iter().collect() }
    }

    pub fn is_positive(&self) -> bool {
        self.negative.is_none()
    }

    pub fn addresses(&self) -> impl Iterator<Item = &Address> {
        self.negative.iter().chain(&self.positive)
    }

    pub fn is_empty(&self) -> bool {
        self.negative.is_none() && self.positive.is_empty()
    }

    /// All addresses pairwise disjoint.
    pub fn is_well_formed(&self) -> bool {
        let all: Vec<&Address> = self.addresses().collect();
        all.iter().enumerate().all(|(k, a)| all[k + 1..].iter().all(|b| a.disjoint(b)))
    }

    pub fn relocate(&self, from: &Address, to: &Address) -> Pitchfork {
        Pitchfork {
            negative: self.negative.as_ref().map(|a| a.relocate(from, to)),
            positive: self.positive.iter().map(|a| a.relocate(from, to)).collect(),
        }
    }

    pub fn render(&self, marked: &BTreeSet<Address>) -> String {
        let show = |a: &Address| {
            if marked.contains(a) {
                format!("*{a}*")
            } else {
                a.to_string()
            }
        };
        let pos: Vec<String> = self.positive.iter().map(show).collect();
        match (&self.negative, pos.is_empty()) {
            (Some(n), true) => format!("{} ⊢", show(n)),
            (Some(n), false) => format!("{} ⊢ {}", show(n), pos.join(", ")),
            (None, true) => "⊢".to_owned(),
            (None, false) => format!("⊢ {}", pos.join(", ")),
        }
    }
}

impl fmt::Display for Pitchfork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&BTreeSet::new()))
    }
}
