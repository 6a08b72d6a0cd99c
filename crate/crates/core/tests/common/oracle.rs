//! Interaction of two designs replayed through views: each player answers
//! from the node its view of the play leads to in its own tree.

use grounds::ludics::{Address, Body, Design, Ramification};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum End {
    Daimon,
    Fid,
    NoMatch,
    OutOfFuel,
}

type Action = (Address, Ramification);

/// Each action with the player that played it positively: 0 for the
/// positive design, 1 for the negative one.
struct Play {
    actions: Vec<(usize, Action)>,
}

impl Play {
    /// The view of `player` of the first `upto` actions.
    fn view(&self, player: usize, upto: usize) -> Vec<(bool, Action)> {
        if upto == 0 {
            return Vec::new();
        }
        let (who, act) = &self.actions[upto - 1];
        if *who == player {
            let mut v = self.view(player, upto - 1);
            v.push((true, act.clone()));
            return v;
        }
        let justifier = act.0.parent().and_then(|(p, i)| {
            (0..upto - 1).rev().find(|&k| {
                let (w, (a, r)) = &self.actions[k];
                *w == player && *a == p && r.contains(i)
            })
        });
        let mut v = match justifier {
            Some(k) => self.view(player, k + 1),
            None => Vec::new(),
        };
        v.push((false, act.clone()));
        v
    }
}

/// Follows a view down a design; `None` when an answer is missing.
fn walk<'a>(d: &'a Design, view: &[(bool, Action)]) -> Option<&'a Design> {
    let mut node = d;
    let mut k = 0;
    while k < view.len() {
        match &node.body {
            Body::Negative { branches } => {
                let (own, (_, ram)) = &view[k];
                assert!(!own, "a negative node answers the other player");
                node = branches.get(ram)?;
                k += 1;
            }
            Body::Positive { focus, children } => {
                let (own, (a, ram)) = &view[k];
                assert!(*own && a == focus && node.ramification().as_ref() == Some(ram), "view leaves the design");
                k += 1;
                let Some((_, (b, _))) = view.get(k) else { return Some(node) };
                let (p, i) = b.parent().expect("answers are below their justifier");
                assert_eq!(&p, focus, "views put justifiers right before");
                node = children.get(&i)?;
            }
            _ => panic!("view continues past a leaf"),
        }
    }
    Some(node)
}

/// Plays `pos` (on `⊢ ξ`) against `neg` (on `ξ ⊢`).
pub fn naive_play(pos: &Design, neg: &Design, fuel: usize) -> (Vec<Action>, End) {
    let designs = [pos, neg];
    let mut play = Play { actions: Vec::new() };
    let mut player = 0;
    loop {
        let view = play.view(player, play.actions.len());
        let Some(node) = walk(designs[player], &view) else {
            let mut p = pairs(&play);
            p.pop();
            return (p, End::NoMatch);
        };
        let action = match &node.body {
            Body::Daimon => return (pairs(&play), End::Daimon),
            Body::Fid => return (pairs(&play), End::Fid),
            Body::Positive { focus, .. } => (focus.clone(), node.ramification().unwrap()),
            Body::Negative { .. } => unreachable!("the active player is positive"),
        };
        if play.actions.len() >= fuel {
            return (pairs(&play), End::OutOfFuel);
        }
        play.actions.push((player, action));
        player = 1 - player;
    }
}

fn pairs(play: &Play) -> Vec<Action> {
    play.actions.iter().map(|(_, a)| a.clone()).collect()
}
