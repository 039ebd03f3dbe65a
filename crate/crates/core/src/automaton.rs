//! Büchi input automata and deterministic Emerson-Lei output automata.

use alloc::vec;
use alloc::vec::Vec;

use crate::acceptance::Acceptance;
use crate::bitset::BitSet;
use crate::error::Error;
use crate::{Color, Letter, State};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub target: State,
    pub accepting: bool,
}

/// A transition-based nondeterministic Büchi automaton over an explicit
/// alphabet `0..alphabet_size`. State indices double as the total state order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nba {
    state_count: usize,
    initial: State,
    alphabet_size: usize,
    // indexed by state * alphabet_size + letter, sorted by target
    edges: Vec<Vec<Edge>>,
}

impl Nba {
    pub fn new(state_count: usize, alphabet_size: usize, initial: State) -> Self {
        assert!(
            (initial as usize) < state_count,
            "initial state out of range"
        );
        Nba {
            state_count,
            initial,
            alphabet_size,
            edges: vec![Vec::new(); state_count * alphabet_size],
        }
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Adds `source -letter-> target`. A parallel edge with a different
    /// accepting flag is merged into a single accepting edge.
    pub fn add_transition(
        &mut self,
        source: State,
        letter: Letter,
        target: State,
        accepting: bool,
    ) {
        assert!((target as usize) < self.state_count, "target out of range");
        let cell = &mut self.edges[source as usize * self.alphabet_size + letter as usize];
        match cell.binary_search_by_key(&target, |e| e.target) {
            Ok(i) => cell[i].accepting |= accepting,
            Err(i) => cell.insert(i, Edge { target, accepting }),
        }
    }

    pub fn successors(&self, state: State, letter: Letter) -> &[Edge] {
        &self.edges[state as usize * self.alphabet_size + letter as usize]
    }

    pub fn transition_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// All transitions as `(source, letter, edge)` in state/letter/target order.
    pub fn transitions(&self) -> impl Iterator<Item = (State, Letter, Edge)> + '_ {
        self.edges.iter().enumerate().flat_map(move |(cell, es)| {
            let (q, a) = (cell / self.alphabet_size, cell % self.alphabet_size);
            es.iter().map(move |e| (q as State, a as Letter, *e))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edges.iter().all(|es| !es.is_empty())
    }

    /// Redirects every missing transition to one fresh nonaccepting sink with
    /// self-loops on all letters. The sink takes the largest index. Returns the
    /// automaton unchanged if it is already complete.
    pub fn completed(&self) -> Nba {
        if self.is_complete() {
            return self.clone();
        }
        let sink = self.state_count as State;
        let mut out = Nba::new(self.state_count + 1, self.alphabet_size, self.initial);
        for (q, a, e) in self.transitions() {
            out.add_transition(q, a, e.target, e.accepting);
        }
        for q in 0..=sink {
            for a in 0..self.alphabet_size as Letter {
                if out.successors(q, a).is_empty() {
                    out.add_transition(q, a, sink, false);
                }
            }
        }
        out
    }

    /// Extends the alphabet to `new_size` letters; every new letter behaves
    /// exactly like `like`.
    pub fn pad_alphabet(&self, new_size: usize, like: Letter) -> Nba {
        assert!(new_size >= self.alphabet_size);
        let mut out = Nba::new(self.state_count, new_size, self.initial);
        for (q, a, e) in self.transitions() {
            out.add_transition(q, a, e.target, e.accepting);
        }
        for q in 0..self.state_count as State {
            for a in self.alphabet_size..new_size {
                for e in self.successors(q, like) {
                    out.add_transition(q, a as Letter, e.target, e.accepting);
                }
            }
        }
        out
    }

    /// Same automaton with a different initial state.
    pub fn with_initial(&self, initial: State) -> Nba {
        assert!((initial as usize) < self.state_count);
        Nba {
            initial,
            ..self.clone()
        }
    }
}

/// Successor of a set of states: the union of all targets on `letter`.
pub fn reached_step(nba: &Nba, states: &BitSet, letter: Letter) -> BitSet {
    let mut out = BitSet::new();
    for q in states {
        out.extend(nba.successors(q, letter).iter().map(|e| e.target));
    }
    out
}

/// A Büchi automaton as read from a file, before normalization: marks may sit
/// on transitions or on states and some transitions may be missing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawBuchi {
    pub state_count: usize,
    pub initial: State,
    pub alphabet_size: usize,
    /// `(source, letter, target, accepting)`
    pub edges: Vec<(State, Letter, State, bool)>,
    /// States carrying a state-based acceptance mark.
    pub marked_states: BitSet,
}

/// Converts state-based marks to transition marks (every outgoing edge of a
/// marked state becomes accepting) and completes the automaton.
pub fn normalize(raw: &RawBuchi) -> Nba {
    let mut nba = Nba::new(raw.state_count, raw.alphabet_size, raw.initial);
    for &(q, a, t, acc) in &raw.edges {
        nba.add_transition(q, a, t, acc || raw.marked_states.contains(q));
    }
    nba.completed()
}

/// A complete deterministic Emerson-Lei automaton with colors on transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dela {
    pub state_count: usize,
    pub initial: State,
    pub alphabet_size: usize,
    /// indexed by state * alphabet_size + letter
    pub successor: Vec<State>,
    /// indexed like `successor`
    pub edge_colors: Vec<BitSet>,
    pub color_count: usize,
    pub acceptance: Acceptance,
}

impl Dela {
    pub fn succ(&self, state: State, letter: Letter) -> State {
        self.successor[state as usize * self.alphabet_size + letter as usize]
    }

    pub fn colors(&self, state: State, letter: Letter) -> &BitSet {
        &self.edge_colors[state as usize * self.alphabet_size + letter as usize]
    }

    pub fn transition_count(&self) -> usize {
        self.successor.len()
    }

    /// Checks totality and color bounds.
    pub fn validate(&self) -> Result<(), Error> {
        assert_eq!(self.successor.len(), self.state_count * self.alphabet_size);
        assert_eq!(self.edge_colors.len(), self.successor.len());
        for (cell, &t) in self.successor.iter().enumerate() {
            if t as usize >= self.state_count {
                return Err(Error::Incomplete {
                    state: (cell / self.alphabet_size) as State,
                    letter: (cell % self.alphabet_size) as Letter,
                });
            }
        }
        let too_big = |c: Color| c as usize >= self.color_count;
        assert!(
            !self
                .edge_colors
                .iter()
                .any(|s| s.last().is_some_and(too_big)),
            "edge color exceeds declared color count"
        );
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_adds_one_sink() {
        let mut nba = Nba::new(1, 2, 0);
        nba.add_transition(0, 0, 0, true);
        let c = nba.completed();
        assert_eq!(c.state_count(), 2);
        assert!(c.is_complete());
        assert_eq!(
            c.successors(0, 1),
            &[Edge {
                target: 1,
                accepting: false
            }]
        );
        assert_eq!(
            c.successors(1, 0),
            &[Edge {
                target: 1,
                accepting: false
            }]
        );
        assert_eq!(
            c.successors(1, 1),
            &[Edge {
                target: 1,
                accepting: false
            }]
        );
        assert_eq!(
            c.successors(0, 0),
            &[Edge {
                target: 0,
                accepting: true
            }]
        );
    }

    #[test]
    fn complete_input_is_unchanged() {
        let raw = RawBuchi {
            state_count: 1,
            initial: 0,
            alphabet_size: 2,
            edges: vec![(0, 0, 0, true), (0, 1, 0, false)],
            marked_states: BitSet::new(),
        };
        let nba = normalize(&raw);
        assert_eq!(nba.state_count(), 1);
        assert_eq!(nba.transition_count(), 2);
    }

    #[test]
    fn state_marks_become_edge_marks() {
        let raw = RawBuchi {
            state_count: 2,
            initial: 0,
            alphabet_size: 2,
            edges: vec![
                (0, 0, 0, false),
                (0, 0, 1, false),
                (0, 1, 1, false),
                (1, 0, 1, false),
                (1, 1, 0, false),
            ],
            marked_states: BitSet::singleton(0),
        };
        let nba = normalize(&raw);
        let from0: Vec<_> = nba.transitions().filter(|t| t.0 == 0).collect();
        assert_eq!(from0.len(), 3);
        assert!(from0.iter().all(|t| t.2.accepting));
        assert!(nba
            .transitions()
            .filter(|t| t.0 == 1)
            .all(|t| !t.2.accepting));
    }

    #[test]
    fn parallel_edges_merge_to_accepting() {
        let mut nba = Nba::new(1, 1, 0);
        nba.add_transition(0, 0, 0, false);
        nba.add_transition(0, 0, 0, true);
        assert_eq!(
            nba.successors(0, 0),
            &[Edge {
                target: 0,
                accepting: true
            }]
        );
    }

    #[test]
    fn reached_step_basics() {
        let mut nba = Nba::new(3, 1, 0);
        nba.add_transition(0, 0, 1, false);
        nba.add_transition(0, 0, 2, true);
        nba.add_transition(1, 0, 1, false);
        nba.add_transition(2, 0, 0, false);
        assert!(reached_step(&nba, &BitSet::new(), 0).is_empty());
        let s0 = BitSet::singleton(0);
        assert_eq!(reached_step(&nba, &s0, 0), [1, 2].into_iter().collect());
        let s = [1u32, 2].into_iter().collect();
        assert_eq!(reached_step(&nba, &s, 0), [0, 1].into_iter().collect());
    }
}
