//! Macrostate composition and the deterministic Emerson-Lei automaton.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::acceptance::Acceptance;
use crate::automaton::{reached_step, Dela, Nba};
use crate::bitset::BitSet;
use crate::dac::{dac_initial, det_succ, DacLabel};
use crate::error::Error;
use crate::nac::{nac_initial, nondet_succ, NacLabel};
use crate::scc::{classify, decompose, Component, SccClassification};
use crate::weak::{weak_initial, weak_succ, WeakState};
use crate::{Color, Letter, State};

/// Colors of one parity block: `base + 1 ..= base + 2·size + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub base: Color,
    pub size: usize,
}

impl Block {
    pub fn last_color(&self) -> Color {
        self.base + 2 * self.size as Color + 1
    }

    pub fn contains(&self, color: Color) -> bool {
        color > self.base && color <= self.last_color()
    }

    /// `⋁_{c=1..size} (⋀_{j=1..c} Fin(2j−1+base) ∧ Inf(2c+base))`
    pub fn acceptance(&self) -> Acceptance {
        Acceptance::any(self.disjuncts())
    }

    fn disjuncts(&self) -> impl Iterator<Item = Acceptance> + '_ {
        (1..=self.size as Color).map(|c| {
            let fins = (1..=c).map(|j| Acceptance::Fin(2 * j - 1 + self.base));
            Acceptance::all(fins.chain(core::iter::once(Acceptance::Inf(2 * c + self.base))))
        })
    }
}

/// Where each component's colors live in the output automaton.
///
/// The weak block owns colors 1 and 2; DAC blocks follow in classification
/// order, then NAC blocks. When there are no weak states at all the weak block
/// is dropped and the first block starts at base 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorLayout {
    pub weak: bool,
    pub blocks: Vec<Block>,
    pub color_count: usize,
}

impl ColorLayout {
    pub fn new(weak: bool, sizes: impl IntoIterator<Item = usize>, state_count: usize) -> Self {
        let mut base = if weak { 2 } else { 0 };
        let blocks: Vec<Block> = sizes
            .into_iter()
            .map(|size| {
                let b = Block { base, size };
                base = b.last_color();
                b
            })
            .collect();
        ColorLayout {
            weak,
            blocks,
            color_count: 3 * state_count + 1,
        }
    }

    pub fn for_classification(cls: &SccClassification) -> Self {
        let sizes = cls.dacs.iter().chain(&cls.nacs).map(Component::len);
        ColorLayout::new(!cls.weak.is_empty(), sizes, cls.scc_of.len())
    }

    /// Largest color any transition can carry.
    pub fn max_color(&self) -> Color {
        self.blocks
            .last()
            .map_or(if self.weak { 2 } else { 0 }, Block::last_color)
    }

    /// Index of the block holding `color`, `None` for the weak block.
    pub fn block_of(&self, color: Color) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(color))
    }

    /// `Fin(1)` for the weak block (if any) or'ed with the disjuncts of every
    /// parity block, as one flat disjunction.
    pub fn acceptance(&self) -> Acceptance {
        let weak = self.weak.then_some(Acceptance::Fin(1));
        Acceptance::any(
            weak.into_iter()
                .chain(self.blocks.iter().flat_map(Block::disjuncts)),
        )
    }

    /// Recovers the layout from an acceptance formula of the shape produced
    /// by [`ColorLayout::acceptance`].
    pub fn from_acceptance(acc: &Acceptance, color_count: usize) -> Result<Self, Error> {
        let mut disjuncts = Vec::new();
        acc.disjuncts(&mut disjuncts);
        let weak = disjuncts.first() == Some(&&Acceptance::Fin(1));
        let mut base = if weak { 2 } else { 0 };
        let mut blocks: Vec<Block> = Vec::new();
        for d in disjuncts.iter().skip(weak as usize) {
            let mut conj = Vec::new();
            d.conjuncts(&mut conj);
            let (inf, fins) = conj.split_last().ok_or(Error::UnexpectedAcceptance)?;
            let Acceptance::Inf(inf) = inf else {
                return Err(Error::UnexpectedAcceptance);
            };
            let c = fins.len() as Color;
            let block_base = if c == 1 {
                if let Some(b) = blocks.last() {
                    base = b.last_color();
                }
                blocks.push(Block { base, size: 1 });
                base
            } else {
                let b = blocks.last_mut().ok_or(Error::UnexpectedAcceptance)?;
                if b.size as Color + 1 != c {
                    return Err(Error::UnexpectedAcceptance);
                }
                b.size += 1;
                b.base
            };
            let fins_ok = fins
                .iter()
                .zip(1..)
                .all(|(f, j)| **f == Acceptance::Fin(2 * j - 1 + block_base));
            if c == 0 || !fins_ok || *inf != 2 * c + block_base {
                return Err(Error::UnexpectedAcceptance);
            }
        }
        if !weak && blocks.is_empty() {
            return Err(Error::UnexpectedAcceptance);
        }
        let layout = ColorLayout {
            weak,
            blocks,
            color_count,
        };
        if layout.max_color() as usize >= color_count {
            return Err(Error::UnexpectedAcceptance);
        }
        Ok(layout)
    }
}

/// One state of the deterministic automaton.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Macrostate {
    pub weak: WeakState,
    pub dacs: Vec<DacLabel>,
    pub nacs: Vec<NacLabel>,
}

/// Successor computation over macrostates for a fixed NBA.
pub struct Determinizer<'a> {
    nba: &'a Nba,
    cls: SccClassification,
    layout: ColorLayout,
}

impl<'a> Determinizer<'a> {
    pub fn new(nba: &'a Nba) -> Self {
        let cls = classify(nba, decompose(nba));
        let layout = ColorLayout::for_classification(&cls);
        Determinizer { nba, cls, layout }
    }

    pub fn classification(&self) -> &SccClassification {
        &self.cls
    }

    pub fn layout(&self) -> &ColorLayout {
        &self.layout
    }

    pub fn initial(&self) -> Macrostate {
        let init = self.nba.initial();
        Macrostate {
            weak: weak_initial(&self.cls, init),
            dacs: self.cls.dacs.iter().map(|d| dac_initial(d, init)).collect(),
            nacs: self.cls.nacs.iter().map(|n| nac_initial(n, init)).collect(),
        }
    }

    /// NBA states represented by `m`.
    pub fn reached(&self, m: &Macrostate) -> BitSet {
        let mut s = m.weak.p.clone();
        for (d, g) in self.cls.dacs.iter().zip(&m.dacs) {
            s.extend(g.reached().map(|i| d.states()[i]));
        }
        for (n, t) in self.cls.nacs.iter().zip(&m.nacs) {
            s.extend(t.reached().map(|i| n.states()[i]));
        }
        s
    }

    /// Successor of `m` on `letter` with the transition's colors: one from
    /// the weak block (if present) and one per DAC and NAC, each shifted by
    /// its block base.
    pub fn succ(&self, m: &Macrostate, letter: Letter) -> Result<(Macrostate, BitSet), Error> {
        let next_reached = reached_step(self.nba, &self.reached(m), letter);
        let mut colors = BitSet::new();

        let (weak, weak_color) = weak_succ(self.nba, &self.cls, &m.weak, letter, &next_reached);
        if self.layout.weak {
            colors.insert(weak_color);
        }

        let mut blocks = self.layout.blocks.iter();
        let mut dacs = Vec::with_capacity(m.dacs.len());
        for (d, g) in self.cls.dacs.iter().zip(&m.dacs) {
            let inside: Vec<usize> = g.reached().collect();
            let entering = entering_locals(d, &inside, letter, &next_reached);
            let step = det_succ(d, g, letter, &entering)?;
            colors.insert(step.color + blocks.next().expect("block per DAC").base);
            dacs.push(step.label);
        }
        let mut nacs = Vec::with_capacity(m.nacs.len());
        for (n, t) in self.cls.nacs.iter().zip(&m.nacs) {
            let inside: Vec<usize> = t.reached().collect();
            let entering = entering_locals(n, &inside, letter, &next_reached);
            let step = nondet_succ(n, t, letter, &entering)?;
            colors.insert(step.color + blocks.next().expect("block per NAC").base);
            nacs.push(step.label);
        }
        Ok((Macrostate { weak, dacs, nacs }, colors))
    }
}

// Members reached at the next level that no reached member reaches internally.
fn entering_locals(
    c: &Component,
    inside: &[usize],
    letter: Letter,
    next_reached: &BitSet,
) -> Vec<usize> {
    let mut internal = BitSet::new();
    for &q in inside {
        internal.extend(c.internal(q, letter).iter().map(|&(t, _)| t));
    }
    c.states()
        .iter()
        .enumerate()
        .filter(|&(i, &q)| next_reached.contains(q) && !internal.contains(i as u32))
        .map(|(i, _)| i)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Abort once more than this many macrostates have been discovered.
    pub max_states: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_states: 1_000_000,
        }
    }
}

/// The constructed automaton together with what produced it.
#[derive(Clone, Debug)]
pub struct Determinization {
    pub dela: Dela,
    pub layout: ColorLayout,
    pub classification: SccClassification,
    /// Macrostate of each output state, by index.
    pub macrostates: Vec<Macrostate>,
}

/// Explores all macrostates reachable from the initial one breadth-first,
/// letters in ascending order; output states are numbered in discovery order.
pub fn build_dela(nba: &Nba, options: &Options) -> Result<Determinization, Error> {
    let det = Determinizer::new(nba);
    let alphabet = nba.alphabet_size();
    let mut index: BTreeMap<Macrostate, State> = BTreeMap::new();
    let mut states: Vec<Macrostate> = Vec::new();
    let mut successor = Vec::new();
    let mut edge_colors = Vec::new();
    let mut queue = VecDeque::new();

    let init = det.initial();
    index.insert(init.clone(), 0);
    states.push(init);
    queue.push_back(0usize);
    while let Some(id) = queue.pop_front() {
        for a in 0..alphabet as Letter {
            let (next, colors) = det.succ(&states[id], a)?;
            let target = match index.get(&next) {
                Some(&t) => t,
                None => {
                    if states.len() >= options.max_states {
                        return Err(Error::MacrostateCap {
                            cap: options.max_states,
                        });
                    }
                    let t = states.len() as State;
                    index.insert(next.clone(), t);
                    states.push(next);
                    queue.push_back(t as usize);
                    t
                }
            };
            successor.push(target);
            edge_colors.push(colors);
        }
    }

    let layout = det.layout.clone();
    let dela = Dela {
        state_count: states.len(),
        initial: 0,
        alphabet_size: alphabet,
        successor,
        edge_colors,
        color_count: layout.color_count,
        acceptance: layout.acceptance(),
    };
    debug_assert!(dela.validate().is_ok());
    Ok(Determinization {
        dela,
        layout,
        classification: det.cls,
        macrostates: states,
    })
}

/// `3^|W| · Π 3·|D|! · Π 2·(|N|!)²`, saturating.
pub fn state_bound(cls: &SccClassification) -> u128 {
    fn factorial(n: usize) -> u128 {
        (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
    }
    let weak = 3u128.saturating_pow(cls.weak.len() as u32);
    let dacs = cls.dacs.iter().fold(1u128, |acc, d| {
        acc.saturating_mul(3u128.saturating_mul(factorial(d.len())))
    });
    let nacs = cls.nacs.iter().fold(1u128, |acc, n| {
        let f = factorial(n.len());
        acc.saturating_mul(2u128.saturating_mul(f.saturating_mul(f)))
    });
    weak.saturating_mul(dacs).saturating_mul(nacs)
}
