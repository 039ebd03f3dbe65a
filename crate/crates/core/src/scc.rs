//! SCC decomposition and classification into weak, deterministic accepting
//! and nondeterministic accepting components.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::automaton::Nba;
use crate::bitset::BitSet;
use crate::{Letter, State};

/// Maximal SCCs in reverse topological order: every SCC reachable from
/// another one is listed before it. Members of each SCC are sorted.
pub fn decompose(nba: &Nba) -> Vec<Vec<State>> {
    let n = nba.state_count();
    let adjacency: Vec<Vec<State>> = (0..n as State)
        .map(|q| {
            let mut succ: Vec<State> = (0..nba.alphabet_size() as Letter)
                .flat_map(|a| nba.successors(q, a).iter().map(|e| e.target))
                .collect();
            succ.sort_unstable();
            succ.dedup();
            succ
        })
        .collect();
    tarjan(&adjacency)
}

const UNVISITED: usize = usize::MAX;

// Iterative Tarjan; emits components as they are closed, which is reverse
// topological order.
fn tarjan(adjacency: &[Vec<State>]) -> Vec<Vec<State>> {
    let n = adjacency.len();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut sccs = Vec::new();
    let mut next_index = 0;
    // (node, position of the next child to look at)
    let mut call_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call_stack.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut child)) = call_stack.last_mut() {
            if let Some(&w) = adjacency[v].get(*child) {
                *child += 1;
                let w = w as usize;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
                continue;
            }
            call_stack.pop();
            if let Some(&(parent, _)) = call_stack.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
            if lowlink[v] == index[v] {
                let mut scc = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    scc.push(w as State);
                    if w == v {
                        break;
                    }
                }
                scc.sort_unstable();
                sccs.push(scc);
            }
        }
    }
    sccs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SccKind {
    IwcAccepting,
    IwcNonAccepting,
    Dac,
    Nac,
}

impl SccKind {
    pub fn is_weak(self) -> bool {
        matches!(self, SccKind::IwcAccepting | SccKind::IwcNonAccepting)
    }

    pub fn name(self) -> &'static str {
        match self {
            SccKind::IwcAccepting => "IWC_ACCEPTING",
            SccKind::IwcNonAccepting => "IWC_NONACCEPTING",
            SccKind::Dac => "DAC",
            SccKind::Nac => "NAC",
        }
    }
}

impl fmt::Display for SccKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One DAC or NAC with its transitions restricted to the component.
///
/// Members are addressed by their local index (position in `states`), which
/// follows the global state order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    states: Vec<State>,
    alphabet_size: usize,
    // indexed by local * alphabet_size + letter: (local target, accepting)
    internal: Vec<Vec<(u32, bool)>>,
}

impl Component {
    /// Restricts `nba` to `states` (must be sorted).
    pub fn from_nba(nba: &Nba, states: &[State]) -> Self {
        debug_assert!(states.windows(2).all(|w| w[0] < w[1]));
        let alphabet_size = nba.alphabet_size();
        let mut internal = vec![Vec::new(); states.len() * alphabet_size];
        for (i, &q) in states.iter().enumerate() {
            for a in 0..alphabet_size {
                for e in nba.successors(q, a as Letter) {
                    if let Ok(j) = states.binary_search(&e.target) {
                        internal[i * alphabet_size + a].push((j as u32, e.accepting));
                    }
                }
            }
        }
        Component {
            states: states.to_vec(),
            alphabet_size,
            internal,
        }
    }

    /// A standalone component of `size` states `0..size` with the given
    /// internal transitions `(source, letter, target, accepting)`.
    pub fn standalone(
        size: usize,
        alphabet_size: usize,
        edges: &[(u32, Letter, u32, bool)],
    ) -> Self {
        let mut nba = Nba::new(size, alphabet_size, 0);
        for &(q, a, t, acc) in edges {
            nba.add_transition(q, a, t, acc);
        }
        let states: Vec<State> = (0..size as State).collect();
        Component::from_nba(&nba, &states)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn local_index(&self, state: State) -> Option<usize> {
        self.states.binary_search(&state).ok()
    }

    /// Internal successors of local state `local` on `letter`, as local
    /// indices with accepting flags, ascending.
    pub fn internal(&self, local: usize, letter: Letter) -> &[(u32, bool)] {
        &self.internal[local * self.alphabet_size + letter as usize]
    }

    pub fn is_deterministic(&self) -> bool {
        self.internal.iter().all(|es| es.len() <= 1)
    }
}

/// Classification of all SCCs of an NBA.
#[derive(Clone, Debug)]
pub struct SccClassification {
    /// SCC index of every state.
    pub scc_of: Vec<usize>,
    pub sccs: Vec<Vec<State>>,
    pub kinds: Vec<SccKind>,
    /// States of all inherently weak components.
    pub weak: BitSet,
    /// States of the accepting inherently weak components.
    pub weak_accepting: BitSet,
    /// DACs ordered by smallest member.
    pub dacs: Vec<Component>,
    /// NACs ordered by smallest member.
    pub nacs: Vec<Component>,
}

impl SccClassification {
    pub fn kind_of(&self, state: State) -> SccKind {
        self.kinds[self.scc_of[state as usize]]
    }
}

/// Classifies the SCCs returned by [`decompose`].
///
/// Trivial SCCs and SCCs without an internal accepting transition are
/// nonaccepting IWCs. An accepting SCC whose nonaccepting internal edges form
/// no cycle is an accepting IWC (every cycle takes an accepting edge). The
/// remaining accepting SCCs are DACs if their internal transitions are
/// deterministic and NACs otherwise.
pub fn classify(nba: &Nba, sccs: Vec<Vec<State>>) -> SccClassification {
    let n = nba.state_count();
    let mut scc_of = vec![usize::MAX; n];
    for (i, scc) in sccs.iter().enumerate() {
        for &q in scc {
            scc_of[q as usize] = i;
        }
    }
    assert!(
        scc_of.iter().all(|&i| i != usize::MAX),
        "SCCs must cover all states"
    );

    let mut kinds = Vec::with_capacity(sccs.len());
    let mut weak = BitSet::new();
    let mut weak_accepting = BitSet::new();
    let mut dacs = Vec::new();
    let mut nacs = Vec::new();
    for (i, scc) in sccs.iter().enumerate() {
        let component = Component::from_nba(nba, scc);
        let has_accepting = component.internal.iter().flatten().any(|&(_, acc)| acc);
        let kind = if !has_accepting {
            SccKind::IwcNonAccepting
        } else if !has_nonaccepting_cycle(&component) {
            SccKind::IwcAccepting
        } else if component.is_deterministic() {
            SccKind::Dac
        } else {
            SccKind::Nac
        };
        kinds.push(kind);
        match kind {
            SccKind::IwcAccepting => {
                weak.extend(scc.iter().copied());
                weak_accepting.extend(scc.iter().copied());
            }
            SccKind::IwcNonAccepting => weak.extend(scc.iter().copied()),
            SccKind::Dac => dacs.push(component),
            SccKind::Nac => nacs.push(component),
        }
        debug_assert_eq!(scc_of[scc[0] as usize], i);
    }
    dacs.sort_by_key(|c: &Component| c.states[0]);
    nacs.sort_by_key(|c: &Component| c.states[0]);
    SccClassification {
        scc_of,
        sccs,
        kinds,
        weak,
        weak_accepting,
        dacs,
        nacs,
    }
}

// Does the subgraph of nonaccepting internal edges contain a cycle?
fn has_nonaccepting_cycle(c: &Component) -> bool {
    let size = c.len();
    let mut indegree = vec![0usize; size];
    let succ = |q: usize| {
        (0..c.alphabet_size as Letter)
            .flat_map(move |a| c.internal(q, a).iter())
            .filter(|&&(_, acc)| !acc)
            .map(|&(t, _)| t as usize)
    };
    for q in 0..size {
        for t in succ(q) {
            indegree[t] += 1;
        }
    }
    // Kahn: the graph is acyclic iff every node can be peeled off.
    let mut ready: Vec<usize> = (0..size).filter(|&q| indegree[q] == 0).collect();
    let mut removed = 0;
    while let Some(q) = ready.pop() {
        removed += 1;
        for t in succ(q) {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.push(t);
            }
        }
    }
    removed < size
}
