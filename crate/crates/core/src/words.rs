//! Forbidden-factor automaton over a presentation's alphabet, with
//! enumeration and counting of legal words by length and by degree.
//!
//! A word is *legal* when it contains no forbidden word as a factor. The
//! automaton is a deterministic, total Aho–Corasick-style recognizer whose
//! single absorbing dead state is reached exactly by the illegal words.

use crate::error::{Error, Result};
use crate::model::{MonomialPresentation, Word};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::VecDeque;

/// Default cap on the number of words an enumeration call may produce.
pub const DEFAULT_ENUM_BUDGET: usize = 1_000_000;

/// Deterministic total automaton recognizing factor-free words.
///
/// States are the prefixes of forbidden words that are not themselves
/// illegal; the dead state is implicit (`None` transitions). State 0 is the
/// root (empty prefix). The state count is at most 1 + Σ|w| over forbidden w.
#[derive(Debug, Clone)]
pub struct FactorAutomaton {
    alphabet: usize,
    letter_degrees: Vec<u32>,
    /// `transitions[s * alphabet + c]`: next live state, or `None` for dead.
    transitions: Vec<Option<u32>>,
    live_states: usize,
}

impl FactorAutomaton {
    /// Builds the automaton for a presentation. Forbidden sets that are not
    /// reduced (some word a factor of another) are handled correctly.
    pub fn new(p: &MonomialPresentation) -> Self {
        let alphabet = p.alphabet_size();
        let letter_degrees: Vec<u32> =
            p.generators().iter().map(|g| g.degree).collect();

        // Trie over the forbidden words.
        struct Node {
            children: Vec<Option<usize>>,
            fail: usize,
            terminal: bool,
        }
        let new_node = |alphabet: usize| Node {
            children: vec![None; alphabet],
            fail: 0,
            terminal: false,
        };
        let mut nodes = vec![new_node(alphabet)];
        for w in p.forbidden() {
            let mut at = 0;
            for &c in &w.0 {
                at = match nodes[at].children[c] {
                    Some(n) => n,
                    None => {
                        nodes.push(new_node(alphabet));
                        let n = nodes.len() - 1;
                        nodes[at].children[c] = Some(n);
                        n
                    }
                };
            }
            nodes[at].terminal = true;
        }

        // Breadth-first failure links; a node is dead as soon as its failure
        // chain reaches a terminal, because a forbidden factor has occurred.
        let mut order = VecDeque::new();
        for c in 0..alphabet {
            if let Some(n) = nodes[0].children[c] {
                order.push_back(n);
            }
        }
        let mut bfs: Vec<usize> = Vec::with_capacity(nodes.len());
        while let Some(n) = order.pop_front() {
            bfs.push(n);
            for c in 0..alphabet {
                if let Some(m) = nodes[n].children[c] {
                    let mut f = nodes[n].fail;
                    let fail = loop {
                        if let Some(g) = nodes[f].children[c] {
                            if g != m {
                                break g;
                            }
                        }
                        if f == 0 {
                            break 0;
                        }
                        f = nodes[f].fail;
                    };
                    nodes[m].fail = fail;
                    if nodes[fail].terminal {
                        nodes[m].terminal = true;
                    }
                    order.push_back(m);
                }
            }
        }

        // Collapse dead nodes and complete the transition table.
        let mut live_index = vec![usize::MAX; nodes.len()];
        let mut live_states = 0;
        if !nodes[0].terminal {
            live_index[0] = 0;
            live_states = 1;
        }
        for &n in &bfs {
            if !nodes[n].terminal {
                live_index[n] = live_states;
                live_states += 1;
            }
        }

        let mut transitions = vec![None; live_states * alphabet];
        let mut full_next = vec![0usize; nodes.len() * alphabet];
        // Root first, then BFS order, so `full_next` of the failure node is
        // always computed before it is consulted.
        for c in 0..alphabet {
            full_next[c] = nodes[0].children[c].unwrap_or(0);
        }
        for &n in &bfs {
            for c in 0..alphabet {
                full_next[n * alphabet + c] = match nodes[n].children[c] {
                    Some(m) => m,
                    None => full_next[nodes[n].fail * alphabet + c],
                };
            }
        }
        if live_states > 0 {
            for n in std::iter::once(0).chain(bfs.iter().copied()) {
                if live_index[n] == usize::MAX {
                    continue;
                }
                for c in 0..alphabet {
                    let m = full_next[n * alphabet + c];
                    transitions[live_index[n] * alphabet + c] = if nodes[m].terminal {
                        None
                    } else {
                        Some(live_index[m] as u32)
                    };
                }
            }
        }

        FactorAutomaton { alphabet, letter_degrees, transitions, live_states }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    /// Number of live states (the dead state is implicit).
    pub fn state_count(&self) -> usize {
        self.live_states
    }

    /// Steps the automaton; `None` is the absorbing dead state.
    pub fn step(&self, state: u32, letter: usize) -> Option<u32> {
        self.transitions[state as usize * self.alphabet + letter]
    }

    fn run(&self, w: &Word) -> Option<u32> {
        if self.live_states == 0 {
            // The empty word itself is forbidden only if some forbidden word
            // is empty, which validation excludes; live_states == 0 cannot
            // happen for valid presentations but keep the run total.
            return None;
        }
        let mut state = 0u32;
        for &c in &w.0 {
            state = self.step(state, c)?;
        }
        Some(state)
    }

    /// True iff the word contains no forbidden factor.
    pub fn is_legal(&self, w: &Word) -> bool {
        self.run(w).is_some()
    }

    /// All legal words of length `n`, lexicographic in generator order.
    ///
    /// Fails with a budget error if more than `budget` words would be
    /// produced (or visited while searching).
    pub fn enumerate_by_length(&self, n: usize, budget: usize) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        if self.live_states == 0 {
            return Ok(out);
        }
        let mut visited = 0usize;
        let visit_cap = budget.saturating_mul(2);
        // Iterative DFS in lexicographic order.
        let mut letters: Vec<usize> = Vec::with_capacity(n);
        let mut states: Vec<u32> = vec![0];
        let mut next_letter: Vec<usize> = vec![0];
        loop {
            let depth = letters.len();
            if depth == n {
                out.push(Word(letters.clone()));
                if out.len() > budget {
                    return Err(Error::BudgetExceeded(format!(
                        "more than {budget} legal words of length {n}"
                    )));
                }
                if n == 0 {
                    return Ok(out);
                }
                // Backtrack.
                letters.pop();
                states.pop();
                next_letter.pop();
                continue;
            }
            let mut advanced = false;
            while next_letter[depth] < self.alphabet {
                let c = next_letter[depth];
                next_letter[depth] += 1;
                if let Some(s) = self.step(states[depth], c) {
                    visited += 1;
                    if visited > visit_cap {
                        return Err(Error::BudgetExceeded(format!(
                            "length-{n} enumeration visited more than {visit_cap} prefixes"
                        )));
                    }
                    letters.push(c);
                    states.push(s);
                    next_letter.push(0);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if depth == 0 {
                    return Ok(out);
                }
                letters.pop();
                states.pop();
                next_letter.pop();
            }
        }
    }

    /// Number of legal words of length exactly `n`, by dynamic programming
    /// over states. Exact (big-integer) and uncapped.
    pub fn count_by_length(&self, n: usize) -> BigUint {
        if self.live_states == 0 {
            return BigUint::zero();
        }
        let mut cur = vec![BigUint::zero(); self.live_states];
        cur[0] = BigUint::one();
        for _ in 0..n {
            let mut next = vec![BigUint::zero(); self.live_states];
            for (s, ways) in cur.iter().enumerate() {
                if ways.is_zero() {
                    continue;
                }
                for c in 0..self.alphabet {
                    if let Some(t) = self.step(s as u32, c) {
                        next[t as usize] += ways;
                    }
                }
            }
            cur = next;
        }
        cur.into_iter().sum()
    }

    /// Legal-word counts by degree 0..=N: coefficient d is the number of
    /// legal words of degree d, i.e. dim of the algebra in degree d.
    pub fn count_by_degree(&self, max_degree: usize) -> DegreeSeries {
        let mut coeffs = vec![BigUint::zero(); max_degree + 1];
        if self.live_states == 0 {
            return DegreeSeries { coeffs };
        }
        // ways[d][s] = number of legal words of degree d ending in state s.
        let mut ways: Vec<Vec<BigUint>> =
            vec![vec![BigUint::zero(); self.live_states]; max_degree + 1];
        ways[0][0] = BigUint::one();
        for d in 0..=max_degree {
            for s in 0..self.live_states {
                if ways[d][s].is_zero() {
                    continue;
                }
                let w = ways[d][s].clone();
                for c in 0..self.alphabet {
                    let nd = d + self.letter_degrees[c] as usize;
                    if nd > max_degree {
                        continue;
                    }
                    if let Some(t) = self.step(s as u32, c) {
                        ways[nd][t as usize] += &w;
                    }
                }
            }
            coeffs[d] = ways[d].iter().sum();
        }
        DegreeSeries { coeffs }
    }
}

/// Nonnegative integer coefficients indexed by degree 0..N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSeries {
    pub coeffs: Vec<BigUint>,
}

impl DegreeSeries {
    pub fn max_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// JSON array of exact integers.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(biguint_json).collect())
    }
}

pub(crate) fn biguint_json(n: &BigUint) -> serde_json::Value {
    // serde_json is built with arbitrary precision, so any decimal string
    // parses into a Number.
    let num: serde_json::Number = n.to_string().parse().expect("decimal integer");
    serde_json::Value::Number(num)
}

impl std::fmt::Display for DegreeSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
