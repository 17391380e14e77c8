use super::pattern::order_isomorphic;
use super::Permutation;
use crate::{check_ceiling, Error, Result, DEFAULT_MAX_N};

/// Lexicographic stream of the permutations of `{1..n}` avoiding a pattern.
///
/// Generated by depth-first extension of prefixes; a prefix is abandoned as
/// soon as an occurrence of the pattern ends at its last entry. Cloning the
/// iterator restarts nothing: the clone continues from the same point.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    pattern: Option<Vec<usize>>,
    word: Vec<usize>,
    used: Vec<bool>,
    // next value to try at each depth
    cursor: Vec<usize>,
    done: bool,
}

impl Avoiders {
    fn new(n: usize, pattern: Option<Vec<usize>>) -> Self {
        let mut cursor = vec![1; n + 1];
        cursor[0] = 1;
        Avoiders {
            n,
            pattern,
            word: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor,
            done: n == 0,
        }
    }

    fn pop(&mut self) {
        if let Some(v) = self.word.pop() {
            self.used[v] = false;
        }
    }

    /// Does an occurrence of the pattern end at the last entry of `word`?
    fn completes_occurrence(&self) -> bool {
        let Some(tau) = &self.pattern else {
            return false;
        };
        let k = tau.len();
        let len = self.word.len();
        if k > len {
            return false;
        }
        let last = self.word[len - 1];
        if k == 1 {
            return true;
        }
        // choose k-1 earlier positions
        let mut idx: Vec<usize> = (0..k - 1).collect();
        let m = len - 1;
        let mut sub = vec![0; k];
        loop {
            for (slot, &i) in sub.iter_mut().zip(&idx) {
                *slot = self.word[i];
            }
            sub[k - 1] = last;
            if order_isomorphic(&sub, tau) {
                return true;
            }
            let r = k - 1;
            let mut i = r;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] < m - r + i {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.word.len();
            if depth == self.n {
                let out = Permutation::from_word_unchecked(self.word.clone());
                self.pop();
                return Some(out);
            }
            let mut advanced = false;
            while self.cursor[depth] <= self.n {
                let v = self.cursor[depth];
                self.cursor[depth] += 1;
                if self.used[v] {
                    continue;
                }
                self.word.push(v);
                self.used[v] = true;
                if self.completes_occurrence() {
                    self.pop();
                } else {
                    self.cursor[depth + 1] = 1;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

/// All `τ`-avoiding permutations of length `n`, lexicographically, subject
/// to the default ceiling on `n`.
pub fn enumerate_avoiders(n: usize, tau: &Permutation) -> Result<Avoiders> {
    enumerate_avoiders_within(n, tau, DEFAULT_MAX_N)
}

pub fn enumerate_avoiders_within(n: usize, tau: &Permutation, max_n: usize) -> Result<Avoiders> {
    if n == 0 {
        return Err(Error::InvalidPermutation("length must be positive".into()));
    }
    check_ceiling(n, max_n)?;
    Ok(Avoiders::new(n, Some(tau.word().to_vec())))
}

/// Every permutation of `{1..n}` in lexicographic order. No ceiling; callers
/// keep `n` small.
pub fn all_permutations(n: usize) -> Avoiders {
    Avoiders::new(n, None)
}
