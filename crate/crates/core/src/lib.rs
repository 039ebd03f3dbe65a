//! Divide-and-conquer determinization of nondeterministic Büchi automata.
//!
//! The input NBA is split into its maximal strongly connected components, each
//! classified as inherently weak, deterministic accepting (DAC) or
//! nondeterministic accepting (NAC). Every class gets its own successor
//! construction ([`weak`], [`dac`], [`nac`]); [`determinize`] runs them in
//! lockstep over macrostates and assembles a deterministic Emerson-Lei
//! automaton whose acceptance formula is the disjunction of one condition per
//! component. [`rabin`] recolors that automaton into a Rabin automaton without
//! touching states or transitions, and [`lasso`] decides membership of
//! ultimately periodic words for both models so the result can be checked.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod acceptance;
pub mod automaton;
pub mod bitset;
pub mod dac;
pub mod determinize;
pub mod error;
pub mod generate;
pub mod lasso;
pub mod nac;
pub mod rabin;
pub mod scc;
pub mod weak;

pub use acceptance::Acceptance;
pub use automaton::{normalize, reached_step, Dela, Edge, Nba, RawBuchi};
pub use bitset::BitSet;
pub use determinize::{build_dela, ColorLayout, Determinization, Macrostate, Options};
pub use error::Error;
pub use lasso::LassoWord;
pub use scc::{classify, decompose, SccClassification, SccKind};

/// Index of an automaton state.
pub type State = u32;
/// Index of a letter in the explicit alphabet.
pub type Letter = u32;
/// An acceptance color.
pub type Color = u32;
