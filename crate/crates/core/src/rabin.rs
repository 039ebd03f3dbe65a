//! Recoloring the Emerson-Lei output into a Rabin automaton.
//!
//! States and transitions are kept as they are; only colors and the
//! acceptance formula change. Pair `r` uses `Fin(2r) ∧ Inf(2r+1)`.

use alloc::vec::Vec;

use crate::acceptance::Acceptance;
use crate::automaton::Dela;
use crate::bitset::BitSet;
use crate::determinize::ColorLayout;
use crate::error::Error;
use crate::Color;

/// A Rabin pair over the recolored automaton.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RabinPair {
    pub fin: Color,
    pub inf: Color,
}

/// Number of pairs produced for `layout`.
pub fn pair_count(layout: &ColorLayout) -> usize {
    layout.weak as usize + layout.blocks.iter().map(|b| b.size).sum::<usize>()
}

/// Recolors `dela`, whose colors follow `layout`, into a Rabin automaton.
///
/// The weak block becomes the pair `(old color 1, always)`. A parity block of
/// size `s` becomes `s` pairs; the pair for internal even color `2c` sees its
/// Inf color where the block color equals `2c` and its Fin color where the
/// block color is below `2c`.
pub fn to_rabin(dela: &Dela, layout: &ColorLayout) -> Result<Dela, Error> {
    let pairs = pair_count(layout);
    // first pair index of every parity block
    let mut first_pair = Vec::with_capacity(layout.blocks.len());
    let mut next = layout.weak as usize;
    for b in &layout.blocks {
        first_pair.push(next);
        next += b.size;
    }

    let mut edge_colors = Vec::with_capacity(dela.edge_colors.len());
    for old in &dela.edge_colors {
        let mut colors = BitSet::new();
        let mut seen = BitSet::new();
        for color in old {
            match layout.block_of(color) {
                None if layout.weak && (color == 1 || color == 2) => {
                    if color == 1 {
                        colors.insert(0);
                    }
                }
                None => return Err(Error::UnexpectedAcceptance),
                Some(i) => {
                    if !seen.insert(i as u32) {
                        return Err(Error::UnexpectedAcceptance);
                    }
                    let block = layout.blocks[i];
                    let internal = color - block.base;
                    for c in 1..=block.size as Color {
                        let r = (first_pair[i] + c as usize - 1) as Color;
                        if internal == 2 * c {
                            colors.insert(2 * r + 1);
                        } else if internal < 2 * c {
                            colors.insert(2 * r);
                        }
                    }
                }
            }
        }
        if layout.weak {
            colors.insert(1);
        }
        edge_colors.push(colors);
    }

    let acceptance = Acceptance::any(
        (0..pairs as Color).map(|r| Acceptance::Fin(2 * r).and(Acceptance::Inf(2 * r + 1))),
    );
    let out = Dela {
        state_count: dela.state_count,
        initial: dela.initial,
        alphabet_size: dela.alphabet_size,
        successor: dela.successor.clone(),
        edge_colors,
        color_count: 2 * pairs,
        acceptance,
    };
    assert_eq!(out.state_count, dela.state_count);
    assert_eq!(out.transition_count(), dela.transition_count());
    Ok(out)
}

/// The pairs of a Rabin automaton produced by [`to_rabin`].
pub fn rabin_pairs(rabin: &Dela) -> Vec<RabinPair> {
    (0..rabin.color_count as Color / 2)
        .map(|r| RabinPair {
            fin: 2 * r,
            inf: 2 * r + 1,
        })
        .collect()
}
