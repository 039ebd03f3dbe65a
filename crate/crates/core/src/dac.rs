//! Labelling successor for a single deterministic accepting component.
//!
//! Every reached state of the DAC carries a distinct number recording when
//! its run entered the component: lower numbers entered earlier. Merging runs
//! keep the lower number, entering runs get numbers above all existing ones,
//! and the numbers are rank-compressed after each step.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::scc::Component;
use crate::{Color, Letter};

/// Label per member of the component, by local index; `None` = not reached.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DacLabel(pub Vec<Option<u32>>);

impl DacLabel {
    pub fn empty(size: usize) -> Self {
        DacLabel(vec![None; size])
    }

    /// Locals carrying a finite label.
    pub fn reached(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_some())
            .map(|(i, _)| i)
    }

    pub fn values(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.0.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs
    }
}

/// Bad and good event sets of one step, sentinel included, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventSets {
    pub bad: Vec<u32>,
    pub good: Vec<u32>,
}

impl EventSets {
    /// `min(2·min B − 1, 2·min G)`.
    pub fn color(&self) -> Color {
        let b = self
            .bad
            .first()
            .copied()
            .expect("bad set always holds the sentinel");
        let g = self
            .good
            .first()
            .copied()
            .expect("good set always holds the sentinel");
        (2 * b - 1).min(2 * g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DacStep {
    pub label: DacLabel,
    pub events: EventSets,
    pub color: Color,
}

/// Label 1 on the initial state when it belongs to the DAC.
pub fn dac_initial(dac: &Component, initial: crate::State) -> DacLabel {
    let mut g = DacLabel::empty(dac.len());
    if let Some(i) = dac.local_index(initial) {
        g.0[i] = Some(1);
    }
    g
}

/// Maps each distinct value to its rank (1-based) among all values.
pub fn ord_compress(values: &[Option<u32>]) -> Vec<Option<u32>> {
    let mut sorted: Vec<u32> = values.iter().flatten().copied().collect();
    sorted.sort_unstable();
    sorted.dedup();
    values
        .iter()
        .map(|v| v.map(|x| sorted.binary_search(&x).expect("value present") as u32 + 1))
        .collect()
}

/// One step of the DAC labelling on `letter`.
///
/// `entering` lists the locals reached from outside the component at the next
/// level and not from inside it; they are numbered in ascending local order.
pub fn det_succ(
    dac: &Component,
    g: &DacLabel,
    letter: Letter,
    entering: &[usize],
) -> Result<DacStep, Error> {
    let size = dac.len();
    let mut next: Vec<Option<u32>> = vec![None; size];
    for q in g.reached() {
        let label = g.0[q].expect("reached");
        if let Some(&(t, _)) = dac.internal(q, letter).first() {
            let slot = &mut next[t as usize];
            *slot = Some(slot.map_or(label, |cur| cur.min(label)));
        }
    }

    let mut good: Vec<u32> = g
        .reached()
        .filter_map(|q| {
            let k = g.0[q]?;
            let &(t, acc) = dac.internal(q, letter).first()?;
            (acc && next[t as usize] == Some(k)).then_some(k)
        })
        .collect();

    let mut entering = entering.to_vec();
    entering.sort_unstable();
    for (i, &q) in entering.iter().enumerate() {
        if next[q].is_some() {
            return Err(Error::EnteringOverlap {
                state: dac.states()[q],
            });
        }
        next[q] = Some((size + 1 + i) as u32);
    }

    let before = g.values();
    let after: Vec<u32> = {
        let mut v: Vec<u32> = next.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    };
    let sentinel = size as u32 + 1;
    let mut bad: Vec<u32> = before
        .iter()
        .copied()
        .filter(|v| after.binary_search(v).is_err())
        .collect();
    bad.push(sentinel);
    bad.sort_unstable();
    bad.dedup();
    good.push(sentinel);
    good.sort_unstable();
    good.dedup();

    let events = EventSets { bad, good };
    let color = events.color();
    Ok(DacStep {
        label: DacLabel(ord_compress(&next)),
        events,
        color,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::running_example;
    use crate::scc::{classify, decompose};

    fn running_example_dac() -> Component {
        let nba = running_example();
        classify(&nba, decompose(&nba)).dacs.remove(0)
    }

    #[test]
    fn ord_of_sparse_values() {
        assert_eq!(
            ord_compress(&[Some(4), None, Some(2), Some(7)]),
            vec![Some(2), None, Some(1), Some(3)]
        );
    }

    #[test]
    fn initial_labels() {
        let d = running_example_dac();
        assert_eq!(d.states(), &[4, 5]);
        assert_eq!(dac_initial(&d, 0), DacLabel(vec![None, None]));
        assert_eq!(dac_initial(&d, 4), DacLabel(vec![Some(1), None]));
    }

    #[test]
    fn worked_example_level_three_to_four() {
        let d = running_example_dac();
        let g = DacLabel(vec![Some(1), None]);
        // q4 re-enters from q2 while q4 -a-> q5 carries label 1
        let step = det_succ(&d, &g, 0, &[0]).unwrap();
        assert_eq!(step.label, DacLabel(vec![Some(2), Some(1)]));
        assert_eq!(step.events.bad, vec![3]);
        assert_eq!(step.events.good, vec![1, 3]);
        assert_eq!(step.color, 2);
    }

    #[test]
    fn empty_slice_emits_neutral_odd_color() {
        let d = running_example_dac();
        let step = det_succ(&d, &DacLabel::empty(2), 0, &[]).unwrap();
        assert_eq!(step.label, DacLabel::empty(2));
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
    fn leaving_run_emits_color_one() {
        // no internal edge on letter 0, so the run leaves the component
        let d = Component::standalone(1, 2, &[(0, 1, 0, true), (0, 1, 0, false)]);
        let step = det_succ(&d, &DacLabel(vec![Some(1)]), 0, &[]).unwrap();
        assert_eq!(step.label, DacLabel(vec![None]));
        assert_eq!(step.events.bad, vec![1, 2]);
        assert_eq!(step.color, 1);
    }

    #[test]
    fn entering_overlap_is_rejected() {
        let d = running_example_dac();
        let g = DacLabel(vec![Some(1), None]);
        assert_eq!(
            det_succ(&d, &g, 0, &[1]),
            Err(Error::EnteringOverlap { state: 5 })
        );
    }

    #[test]
    fn merge_keeps_lower_label() {
        // both locals go to local 0 on letter 0
        let d = Component::standalone(2, 1, &[(0, 0, 0, false), (1, 0, 0, true)]);
        let step = det_succ(&d, &DacLabel(vec![Some(2), Some(1)]), 0, &[]).unwrap();
        assert_eq!(step.label, DacLabel(vec![Some(1), None]));
        // label 2 vanished, label 1 took an accepting edge
        assert_eq!(step.events.bad, vec![2, 3]);
        assert_eq!(step.events.good, vec![1, 3]);
        assert_eq!(step.color, 2);
    }
}
