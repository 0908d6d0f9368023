//! Aho–Corasick automaton over a set of forbidden words.
//!
//! States are the distinct prefixes of the patterns. The transition table is
//! complete (failure links are folded in), so scanning a word is one table
//! lookup per letter. A state is *dead* when some pattern is a suffix of the
//! prefix it represents; words that never enter a dead state are exactly the
//! words avoiding every pattern.

use std::collections::VecDeque;

use crate::freealg::Letter;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct PatternAutomaton {
    stride: usize,
    n_letters: usize,
    /// `goto[state * stride + letter]`
    goto: Vec<u32>,
    /// Pattern index recognised on entering the state (own pattern first,
    /// otherwise the nearest one along the failure chain).
    hit: Vec<u32>,
}

/// An occurrence of a pattern inside a scanned word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Match {
    pub pattern: usize,
    pub start: usize,
    pub end: usize,
}

impl PatternAutomaton {
    pub fn new<'a>(n_letters: usize, patterns: impl IntoIterator<Item = &'a [Letter]>) -> Self {
        let n = n_letters.max(1);
        let mut goto: Vec<u32> = vec![NONE; n];
        let mut hit: Vec<u32> = vec![NONE];
        for (idx, pat) in patterns.into_iter().enumerate() {
            let mut s = 0usize;
            for &l in pat {
                let slot = s * n + l as usize;
                if goto[slot] == NONE {
                    let fresh = hit.len() as u32;
                    goto[slot] = fresh;
                    goto.extend(std::iter::repeat_n(NONE, n));
                    hit.push(NONE);
                }
                s = goto[slot] as usize;
            }
            // keep the first pattern registered for a state
            if hit[s] == NONE {
                hit[s] = idx as u32;
            }
        }
        // breadth-first completion of failure transitions
        let mut fail = vec![0u32; hit.len()];
        let mut queue = VecDeque::new();
        for slot in &mut goto[..n] {
            match *slot {
                NONE => *slot = 0,
                t => {
                    fail[t as usize] = 0;
                    queue.push_back(t as usize);
                }
            }
        }
        while let Some(s) = queue.pop_front() {
            let f = fail[s] as usize;
            if hit[s] == NONE {
                hit[s] = hit[f];
            }
            for l in 0..n {
                let slot = s * n + l;
                match goto[slot] {
                    NONE => goto[slot] = goto[f * n + l],
                    t => {
                        fail[t as usize] = goto[f * n + l];
                        queue.push_back(t as usize);
                    }
                }
            }
        }
        PatternAutomaton { stride: n, n_letters, goto, hit }
    }

    pub fn n_states(&self) -> usize {
        self.hit.len()
    }

    pub fn n_letters(&self) -> usize {
        self.n_letters
    }

    #[inline]
    pub fn step(&self, state: usize, letter: Letter) -> usize {
        self.goto[state * self.stride + letter as usize] as usize
    }

    #[inline]
    pub fn is_dead(&self, state: usize) -> bool {
        self.hit[state] != NONE
    }

    /// Pattern index recognised at `state`, if any.
    pub fn hit(&self, state: usize) -> Option<usize> {
        match self.hit[state] {
            NONE => None,
            h => Some(h as usize),
        }
    }

    /// Leftmost-ending occurrence of any pattern in `word`.
    pub fn first_match(&self, word: &[Letter], pattern_len: impl Fn(usize) -> usize) -> Option<Match> {
        if self.is_dead(0) {
            return Some(Match { pattern: self.hit[0] as usize, start: 0, end: 0 });
        }
        let mut s = 0usize;
        for (i, &l) in word.iter().enumerate() {
            s = self.step(s, l);
            if let Some(p) = self.hit(s) {
                let len = pattern_len(p);
                return Some(Match { pattern: p, start: i + 1 - len, end: i + 1 });
            }
        }
        None
    }

    /// Number of words of each length `0..=max_len` avoiding every pattern.
    pub fn count_avoiding(&self, max_len: usize) -> Result<Vec<u128>, CountOverflow> {
        let mut out = Vec::with_capacity(max_len + 1);
        let mut cur = vec![0u128; self.n_states()];
        if !self.is_dead(0) {
            cur[0] = 1;
        }
        out.push(cur.iter().sum());
        for _ in 0..max_len {
            let mut next = vec![0u128; self.n_states()];
            for (s, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for l in 0..self.n_letters {
                    let t = self.goto[s * self.stride + l] as usize;
                    if !self.is_dead(t) {
                        next[t] = next[t].checked_add(c).ok_or(CountOverflow)?;
                    }
                }
            }
            let total = next.iter().try_fold(0u128, |a, &b| a.checked_add(b)).ok_or(CountOverflow)?;
            out.push(total);
            cur = next;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOverflow;
