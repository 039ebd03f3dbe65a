//! Breakpoint successor for all inherently weak components at once.

use crate::automaton::{reached_step, Nba};
use crate::bitset::BitSet;
use crate::scc::SccClassification;
use crate::{Color, Letter, State};

/// `p` holds the reached states of weak components, `o` the runs being
/// tracked inside accepting ones. Always `o ⊆ p ∩ WA`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakState {
    pub p: BitSet,
    pub o: BitSet,
}

pub fn weak_initial(cls: &SccClassification, initial: State) -> WeakState {
    let mut p = BitSet::new();
    if cls.weak.contains(initial) {
        p.insert(initial);
    }
    WeakState {
        p,
        o: BitSet::new(),
    }
}

/// Successor on `letter`, where `next_reached` is the full reached set of the
/// next level. Color 1 iff the source breakpoint set is empty, else 2.
pub fn weak_succ(
    nba: &Nba,
    cls: &SccClassification,
    ws: &WeakState,
    letter: Letter,
    next_reached: &BitSet,
) -> (WeakState, Color) {
    let p = next_reached.intersection(&cls.weak);
    let (o, color) = if ws.o.is_empty() {
        (p.intersection(&cls.weak_accepting), 1)
    } else {
        (
            reached_step(nba, &ws.o, letter).intersection(&cls.weak_accepting),
            2,
        )
    };
    debug_assert!(o.is_subset(&p));
    (WeakState { p, o }, color)
}
