//! List-labelling successor for a single nondeterministic accepting component.
//!
//! A label is an ascending list of integers, read as the path from the root
//! to a node in a Safra-style tree. Runs taking an accepting edge get a fresh
//! child number appended; runs meeting at a state keep the smallest list in
//! list order; a node all of whose runs moved on to children is collapsed back
//! (good event), and numbers that disappear are bad events.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::dac::EventSets;
use crate::error::Error;
use crate::scc::Component;
use crate::{Color, Letter, State};

/// Ascending list; empty means "not reached".
pub type LabelList = Vec<u32>;

/// Compares lists after padding the shorter one with ∞ at the rear, so a
/// proper extension is smaller than its prefix and `⟨⟩` is the largest list.
pub fn list_compare(x: &[u32], y: &[u32]) -> Ordering {
    for i in 0..x.len().max(y.len()) {
        match (x.get(i), y.get(i)) {
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Equal => continue,
                other => return other,
            },
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => unreachable!(),
        }
    }
    Ordering::Equal
}

/// List per member of the component, by local index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NacLabel(pub Vec<LabelList>);

impl NacLabel {
    pub fn empty(size: usize) -> Self {
        NacLabel(vec![Vec::new(); size])
    }

    pub fn reached(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_empty())
            .map(|(i, _)| i)
    }

    /// The set of nonempty lists.
    pub fn values(&self) -> BTreeSet<&[u32]> {
        self.0
            .iter()
            .filter(|l| !l.is_empty())
            .map(Vec::as_slice)
            .collect()
    }

    /// Every integer occurring in some list.
    pub fn integers(&self) -> BTreeSet<u32> {
        self.0.iter().flatten().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NacStep {
    pub label: NacLabel,
    pub events: EventSets,
    pub color: Color,
}

pub fn nac_initial(nac: &Component, initial: State) -> NacLabel {
    let mut t = NacLabel::empty(nac.len());
    if let Some(i) = nac.local_index(initial) {
        t.0[i] = vec![1];
    }
    t
}

// Smallest positive integers not in `used`, in ascending order.
struct Fresh<'a> {
    used: &'a BTreeSet<u32>,
    next: u32,
}

impl Fresh<'_> {
    fn take(&mut self) -> u32 {
        while self.used.contains(&self.next) {
            self.next += 1;
        }
        let u = self.next;
        self.next += 1;
        u
    }
}

/// One step of the NAC labelling on `letter`.
///
/// Targets are visited in ascending local order and, for each target, its
/// reached predecessors in ascending local order; every accepting edge
/// consumes the next fresh number. Entering locals are numbered afterwards,
/// also ascending.
pub fn nondet_succ(
    nac: &Component,
    t: &NacLabel,
    letter: Letter,
    entering: &[usize],
) -> Result<NacStep, Error> {
    let size = nac.len();
    let used = t.integers();
    let mut fresh = Fresh {
        used: &used,
        next: 1,
    };

    // predecessors per target, ascending in both
    let mut preds: Vec<Vec<(usize, bool)>> = vec![Vec::new(); size];
    for q in t.reached() {
        for &(target, acc) in nac.internal(q, letter) {
            preds[target as usize].push((q, acc));
        }
    }

    let mut next: Vec<LabelList> = vec![Vec::new(); size];
    for (target, ps) in preds.iter().enumerate() {
        let mut best: Option<LabelList> = None;
        for &(q, acc) in ps {
            let mut candidate = t.0[q].clone();
            if acc {
                candidate.push(fresh.take());
            }
            if best
                .as_ref()
                .is_none_or(|b| list_compare(&candidate, b) == Ordering::Less)
            {
                best = Some(candidate);
            }
        }
        if let Some(b) = best {
            next[target] = b;
        }
    }

    let mut entering = entering.to_vec();
    entering.sort_unstable();
    for &q in &entering {
        if !next[q].is_empty() {
            return Err(Error::EnteringOverlap {
                state: nac.states()[q],
            });
        }
        next[q] = vec![fresh.take()];
    }

    let sentinel = size as u32 + 1;
    let intermediate = NacLabel(next);
    let after = intermediate.integers();
    let mut bad: Vec<u32> = used.difference(&after).copied().collect();
    bad.push(sentinel);
    bad.sort_unstable();
    bad.dedup();

    // Truncate each list to its shortest prefix missing from the values.
    let present: BTreeSet<Vec<u32>> = intermediate
        .values()
        .into_iter()
        .map(<[u32]>::to_vec)
        .collect();
    let mut good: Vec<u32> = vec![sentinel];
    let mut truncated = intermediate.0.clone();
    for list in truncated.iter_mut().filter(|l| !l.is_empty()) {
        if let Some(k) = (1..=list.len()).find(|&k| !present.contains(&list[..k])) {
            list.truncate(k);
            good.push(list[k - 1]);
        }
    }
    good.sort_unstable();
    good.dedup();

    // Rank-compress over all integers still occurring.
    let ranks: BTreeMap<u32, u32> = truncated
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<u32>>()
        .into_iter()
        .zip(1..)
        .collect();
    for list in truncated.iter_mut() {
        for v in list.iter_mut() {
            *v = ranks[v];
        }
    }
    debug_assert!(ranks.len() <= size, "more tree nodes than component states");

    let events = EventSets { bad, good };
    let color = events.color();
    Ok(NacStep {
        label: NacLabel(truncated),
        events,
        color,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::running_example;
    use crate::scc::{classify, decompose};

    fn example_nac() -> Component {
        let nba = running_example();
        classify(&nba, decompose(&nba)).nacs.remove(0)
    }

    #[test]
    fn list_order() {
        assert_eq!(list_compare(&[1, 3, 5], &[1, 3]), Ordering::Less);
        assert_eq!(list_compare(&[1, 3, 5], &[1, 2]), Ordering::Greater);
        assert_eq!(list_compare(&[], &[4]), Ordering::Greater);
        assert_eq!(list_compare(&[], &[]), Ordering::Equal);
        assert_eq!(list_compare(&[2], &[2]), Ordering::Equal);
    }

    #[test]
    fn initial_labels() {
        let n = example_nac();
        assert_eq!(n.states(), &[0, 1]);
        assert_eq!(nac_initial(&n, 0), NacLabel(vec![vec![1], vec![]]));
        assert_eq!(nac_initial(&n, 3), NacLabel::empty(2));
    }

    #[test]
    fn worked_example_level_one_to_two() {
        let n = example_nac();
        let t = NacLabel(vec![vec![1, 2], vec![1]]);
        let step = nondet_succ(&n, &t, 0, &[]).unwrap();
        assert_eq!(step.label, NacLabel(vec![vec![1], vec![1]]));
        assert_eq!(step.events.bad, vec![3]);
        assert_eq!(step.events.good, vec![1, 3]);
        assert_eq!(step.color, 2);
    }

    #[test]
    fn level_zero_to_one_branches_without_truncation() {
        let n = example_nac();
        let step = nondet_succ(&n, &NacLabel(vec![vec![1], vec![]]), 0, &[]).unwrap();
        assert_eq!(step.label, NacLabel(vec![vec![1, 2], vec![1]]));
        assert_eq!(step.events.bad, vec![3]);
        assert_eq!(step.events.good, vec![3]);
        assert_eq!(step.color, 5);
    }

    #[test]
    fn empty_slice() {
        let n = example_nac();
        let step = nondet_succ(&n, &NacLabel::empty(2), 0, &[]).unwrap();
        assert_eq!(step.label, NacLabel::empty(2));
        assert_eq!(
            step.events,
            EventSets {
                bad: vec![3],
                good: vec![3]
            }
        );
        assert_eq!(step.color, 5);
    }

    #[test]
    fn entering_gets_fresh_singleton_after_existing() {
        let n = example_nac();
        // q0 alone on letter b: q0 -b-> q0 nonaccepting; q1 enters from outside
        let step = nondet_succ(&n, &NacLabel(vec![vec![1], vec![]]), 1, &[1]).unwrap();
        assert_eq!(step.label, NacLabel(vec![vec![1], vec![2]]));
        assert_eq!(step.color, 5);
    }

    #[test]
    fn entering_overlap_is_rejected() {
        let n = example_nac();
        let r = nondet_succ(&n, &NacLabel(vec![vec![1], vec![]]), 0, &[1]);
        assert_eq!(r, Err(Error::EnteringOverlap { state: 1 }));
    }
}
