//! Test-corpus automata: a fixed running example, the hard family with
//! singleton DACs, and seeded random NBAs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::Nba;
use crate::{Letter, State};

/// Seven-state running example over `{a, b}` (a = 0, b = 1), initial `q0`.
///
/// SCCs: `{q0, q1}` nondeterministic accepting, `{q2, q3}` accepting weak,
/// `{q4, q5}` deterministic accepting, `{q6}` nonaccepting weak.
pub fn running_example() -> Nba {
    const A: Letter = 0;
    const B: Letter = 1;
    let mut nba = Nba::new(7, 2, 0);
    for &(q, a, t, acc) in &[
        (0, A, 0, true),
        (0, A, 1, false),
        (0, B, 0, false),
        (1, A, 0, false),
        (1, A, 2, false),
        (1, B, 1, false),
        (2, A, 3, true),
        (2, A, 4, false),
        (2, B, 6, false),
        (3, A, 2, true),
        (3, A, 6, false),
        (3, B, 6, false),
        (4, A, 5, true),
        (4, B, 4, false),
        (5, A, 5, false),
        (5, B, 4, false),
        (5, B, 6, false),
        (6, A, 6, false),
        (6, B, 6, false),
    ] {
        nba.add_transition(q, a, t, acc);
    }
    nba
}

/// Only the weak part of [`running_example`]: `{q2, q3}` and `{q6}`, renumbered to
/// 0, 1, 2, initial `q2`.
pub fn weak_example() -> Nba {
    let mut nba = Nba::new(3, 2, 0);
    for &(q, a, t, acc) in &[
        (0, 0, 1, true),
        (0, 1, 2, false),
        (1, 0, 0, true),
        (1, 0, 2, false),
        (1, 1, 2, false),
        (2, 0, 2, false),
        (2, 1, 2, false),
    ] {
        nba.add_transition(q, a, t, acc);
    }
    nba
}

/// [`running_example`] without the NAC, starting in `q2`: an elevator automaton (weak
/// components and DACs only) that is not semi-deterministic. States
/// `q2..q6` become 0..4.
pub fn elevator_example() -> Nba {
    let mut nba = Nba::new(5, 2, 0);
    for &(q, a, t, acc) in &[
        (0, 0, 1, true),
        (0, 0, 2, false),
        (0, 1, 4, false),
        (1, 0, 0, true),
        (1, 0, 4, false),
        (1, 1, 4, false),
        (2, 0, 3, true),
        (2, 1, 2, false),
        (3, 0, 3, false),
        (3, 1, 2, false),
        (3, 1, 4, false),
        (4, 0, 4, false),
        (4, 1, 4, false),
    ] {
        nba.add_transition(q, a, t, acc);
    }
    nba
}

/// A single strongly connected nondeterministic component over `{a, b}`:
/// three states guessing when the suffix becomes `a`-only.
pub fn nac_only() -> Nba {
    let mut nba = Nba::new(3, 2, 0);
    for &(q, a, t, acc) in &[
        (0, 0, 0, false),
        (0, 1, 0, false),
        (0, 0, 1, false),
        (1, 0, 1, true),
        (1, 0, 2, false),
        (1, 1, 0, false),
        (2, 0, 1, true),
        (2, 1, 2, false),
        (2, 1, 0, false),
    ] {
        nba.add_transition(q, a, t, acc);
    }
    nba
}

/// Hard family over letters `0..=n`: states `q0 = 0`, `q_i = i` for
/// `1 <= i <= n` and `q_bot = n + 1`.
///
/// `q0` loops on every letter and moves to `q_i` on `i` with an accepting
/// edge. `q_i` loops on `i` (accepting) and on `0` (nonaccepting) and falls
/// to `q_bot` on every other letter; `q_bot` loops on everything. Each `{q_i}`
/// is a DAC; `{q0}` and `{q_bot}` are nonaccepting weak components.
pub fn gen_family_an(n: usize) -> Nba {
    assert!(n >= 1, "family is defined for n >= 1");
    let letters = n + 1;
    let bot = (n + 1) as State;
    let mut nba = Nba::new(n + 2, letters, 0);
    for a in 0..letters as Letter {
        nba.add_transition(0, a, 0, false);
        nba.add_transition(bot, a, bot, false);
    }
    for i in 1..=n as State {
        nba.add_transition(0, i, i, true);
        for a in 0..letters as Letter {
            match a {
                0 => nba.add_transition(i, 0, i, false),
                a if a == i => nba.add_transition(i, a, i, true),
                a => nba.add_transition(i, a, bot, false),
            }
        }
    }
    nba
}

/// Reproducible random complete NBA.
///
/// Every `(state, letter)` gets `max(1, k)` uniformly drawn targets where `k`
/// is `floor(transition_density)` plus one more with probability equal to its
/// fractional part; each edge is accepting with probability
/// `accepting_density`. The initial state is 0.
pub fn gen_random_nba(
    seed: u64,
    n: usize,
    alphabet_size: usize,
    transition_density: f64,
    accepting_density: f64,
) -> Nba {
    assert!(n >= 1 && alphabet_size >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nba = Nba::new(n, alphabet_size, 0);
    let whole = transition_density.max(0.0) as usize;
    let frac = transition_density.max(0.0) - whole as f64;
    for q in 0..n as State {
        for a in 0..alphabet_size as Letter {
            let extra = rng.gen_bool(frac.clamp(0.0, 1.0)) as usize;
            let count = (whole + extra).max(1);
            for _ in 0..count {
                let t = rng.gen_range(0..n as State);
                let acc = rng.gen_bool(accepting_density.clamp(0.0, 1.0));
                nba.add_transition(q, a, t, acc);
            }
        }
    }
    nba
}

/// Seeded random corpus over two letters: `n = 1 + seed % 6` states with
/// transition and accepting densities cycling through a few mixes.
pub fn random_corpus(count: u64) -> impl Iterator<Item = (u64, Nba)> {
    const TRANSITION: [f64; 4] = [1.0, 1.3, 1.6, 2.2];
    const ACCEPTING: [f64; 3] = [0.2, 0.35, 0.5];
    (0..count).map(|seed| {
        let n = 1 + (seed % 6) as usize;
        let d = TRANSITION[(seed / 6 % 4) as usize];
        let f = ACCEPTING[(seed / 24 % 3) as usize];
        (seed, gen_random_nba(seed, n, 2, d, f))
    })
}
