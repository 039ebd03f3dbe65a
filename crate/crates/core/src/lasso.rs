//! Membership of ultimately periodic words `u·v^ω` and bounded equivalence.
//!
//! The NBA check works on the product of the automaton with the positions of
//! the cycle and does not share code with the SCC analysis it is used to test.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::automaton::{Dela, Nba};
use crate::bitset::BitSet;
use crate::error::Error;
use crate::{Letter, State};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LassoWord {
    stem: Vec<Letter>,
    cycle: Vec<Letter>,
}

impl LassoWord {
    pub fn new(stem: Vec<Letter>, cycle: Vec<Letter>) -> Result<Self, Error> {
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        Ok(LassoWord { stem, cycle })
    }

    pub fn stem(&self) -> &[Letter] {
        &self.stem
    }

    pub fn cycle(&self) -> &[Letter] {
        &self.cycle
    }

    pub fn check_alphabet(&self, alphabet_size: usize) -> Result<(), Error> {
        match self
            .stem
            .iter()
            .chain(&self.cycle)
            .find(|&&a| a as usize >= alphabet_size)
        {
            Some(&letter) => Err(Error::LetterOutOfRange {
                letter,
                alphabet_size,
            }),
            None => Ok(()),
        }
    }
}

/// Does some run of `nba` over the word take accepting transitions infinitely
/// often?
pub fn nba_accepts(nba: &Nba, w: &LassoWord) -> bool {
    let mut current = BitSet::singleton(nba.initial());
    for &a in w.stem() {
        current = crate::automaton::reached_step(nba, &current, a);
    }
    let period = w.cycle().len();
    let node = |q: State, pos: usize| q as usize * period + pos;
    let nodes = nba.state_count() * period;

    // product edges: (q, i) -> (q', i+1 mod period)
    let successors = |id: usize| {
        let (q, pos) = ((id / period) as State, id % period);
        let next = (pos + 1) % period;
        nba.successors(q, w.cycle()[pos])
            .iter()
            .map(move |e| (node(e.target, next), e.accepting))
    };

    let reachable = |from: &[usize]| {
        let mut seen = vec![false; nodes];
        let mut queue: VecDeque<usize> = from.iter().copied().collect();
        for &f in from {
            seen[f] = true;
        }
        while let Some(x) = queue.pop_front() {
            for (y, _) in successors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    };

    let starts: Vec<usize> = current.iter().map(|q| node(q, 0)).collect();
    let live = reachable(&starts);
    // an accepting edge x -> y lies on a cycle iff y reaches x
    (0..nodes).filter(|&x| live[x]).any(|x| {
        successors(x)
            .filter(|&(_, acc)| acc)
            .any(|(y, _)| y == x || reachable(&[y])[x])
    })
}

/// Colors seen infinitely often along the run of `dela` over the word.
pub fn det_inf_colors(dela: &Dela, w: &LassoWord) -> BitSet {
    let mut q = dela.initial;
    for &a in w.stem() {
        q = dela.succ(q, a);
    }
    // state at each cycle boundary until one repeats
    let mut boundary: Vec<State> = vec![q];
    let start = loop {
        for &a in w.cycle() {
            q = dela.succ(q, a);
        }
        if let Some(i) = boundary.iter().position(|&b| b == q) {
            break i;
        }
        boundary.push(q);
    };
    let mut inf = BitSet::new();
    for &b in &boundary[start..] {
        let mut q = b;
        for &a in w.cycle() {
            inf.union_with(dela.colors(q, a));
            q = dela.succ(q, a);
        }
    }
    inf
}

pub fn det_accepts(dela: &Dela, w: &LassoWord) -> bool {
    dela.acceptance.eval(&det_inf_colors(dela, w))
}

/// All lasso words with `|stem| <= max_stem` and `1 <= |cycle| <= max_cycle`,
/// ordered by stem length, stem, cycle length, cycle.
pub fn lasso_words(
    alphabet_size: usize,
    max_stem: usize,
    max_cycle: usize,
) -> impl Iterator<Item = LassoWord> {
    let stems: Vec<Vec<Letter>> = (0..=max_stem)
        .flat_map(|len| words_of_length(alphabet_size, len))
        .collect();
    let cycles: Vec<Vec<Letter>> = (1..=max_cycle)
        .flat_map(|len| words_of_length(alphabet_size, len))
        .collect();
    stems.into_iter().flat_map(move |u| {
        cycles.clone().into_iter().map(move |v| LassoWord {
            stem: u.clone(),
            cycle: v,
        })
    })
}

fn words_of_length(alphabet_size: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alphabet_size as Letter).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// First bounded lasso word on which the two verdicts differ.
pub fn find_disagreement(
    alphabet_size: usize,
    max_stem: usize,
    max_cycle: usize,
    mut left: impl FnMut(&LassoWord) -> bool,
    mut right: impl FnMut(&LassoWord) -> bool,
) -> Option<LassoWord> {
    lasso_words(alphabet_size, max_stem, max_cycle).find(|w| left(w) != right(w))
}

/// First bounded lasso word accepted by exactly one of `nba` and `dela`.
pub fn bounded_equiv(
    nba: &Nba,
    dela: &Dela,
    max_stem: usize,
    max_cycle: usize,
) -> Option<LassoWord> {
    assert_eq!(nba.alphabet_size(), dela.alphabet_size, "alphabets differ");
    find_disagreement(
        nba.alphabet_size(),
        max_stem,
        max_cycle,
        |w| nba_accepts(nba, w),
        |w| det_accepts(dela, w),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acceptance::Acceptance;

    fn loop_nba() -> Nba {
        let mut nba = Nba::new(1, 2, 0);
        nba.add_transition(0, 0, 0, true);
        nba.add_transition(0, 1, 0, false);
        nba
    }

    #[test]
    fn single_accepting_loop() {
        let nba = loop_nba();
        assert!(nba_accepts(&nba, &LassoWord::new(vec![], vec![0]).unwrap()));
        assert!(!nba_accepts(
            &nba,
            &LassoWord::new(vec![], vec![1]).unwrap()
        ));
        assert!(nba_accepts(
            &nba,
            &LassoWord::new(vec![1, 1], vec![1, 0]).unwrap()
        ));
    }

    #[test]
    fn empty_cycle_rejected() {
        assert_eq!(LassoWord::new(vec![0], vec![]), Err(Error::EmptyCycle));
    }

    fn two_state_dela(colors: [u32; 2]) -> Dela {
        Dela {
            state_count: 2,
            initial: 0,
            alphabet_size: 1,
            successor: vec![1, 0],
            edge_colors: colors.iter().map(|&c| BitSet::singleton(c)).collect(),
            color_count: 4,
            acceptance: Acceptance::Fin(1),
        }
    }

    #[test]
    fn det_fin_one() {
        let w = LassoWord::new(vec![], vec![0]).unwrap();
        assert!(det_accepts(&two_state_dela([2, 2]), &w));
        assert!(!det_accepts(&two_state_dela([2, 1]), &w));
        assert_eq!(
            det_inf_colors(&two_state_dela([2, 1]), &w),
            [1, 2].into_iter().collect()
        );
    }

    #[test]
    fn enumeration_counts() {
        // stems: 1 + 2 + 4 + 8, cycles: 2 + 4 + 8 + 16
        assert_eq!(lasso_words(2, 3, 4).count(), 15 * 30);
        assert_eq!(lasso_words(3, 0, 1).count(), 3);
    }
}
