use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::{Error, Result};

/// The six patterns of length three, each with a linear-time recognizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    #[serde(rename = "123")]
    P123,
    #[serde(rename = "132")]
    P132,
    #[serde(rename = "213")]
    P213,
    #[serde(rename = "231")]
    P231,
    #[serde(rename = "312")]
    P312,
    #[serde(rename = "321")]
    P321,
}

impl Pattern {
    pub const ALL: [Pattern; 6] = [
        Pattern::P123,
        Pattern::P132,
        Pattern::P213,
        Pattern::P231,
        Pattern::P312,
        Pattern::P321,
    ];

    pub fn word(self) -> [usize; 3] {
        match self {
            Pattern::P123 => [1, 2, 3],
            Pattern::P132 => [1, 3, 2],
            Pattern::P213 => [2, 1, 3],
            Pattern::P231 => [2, 3, 1],
            Pattern::P312 => [3, 1, 2],
            Pattern::P321 => [3, 2, 1],
        }
    }

    pub fn as_permutation(self) -> Permutation {
        Permutation::from_word_unchecked(self.word().to_vec())
    }

    pub fn from_permutation(tau: &Permutation) -> Option<Pattern> {
        Pattern::ALL.into_iter().find(|p| p.word() == tau.word())
    }

    pub fn is_avoided_by(self, sigma: &Permutation) -> bool {
        let w = sigma.word();
        match self {
            Pattern::P231 => stack_sortable(w.iter().copied()),
            // 132 reversed is 231
            Pattern::P132 => stack_sortable(w.iter().rev().copied()),
            // 312 is the inverse of 231
            Pattern::P312 => stack_sortable(sigma.inverse().word().iter().copied()),
            // 213 reversed is 312
            Pattern::P213 => stack_sortable(sigma.reverse().inverse().word().iter().copied()),
            Pattern::P123 => !has_increasing_triple(w.iter().copied()),
            Pattern::P321 => !has_increasing_triple(w.iter().rev().copied()),
        }
    }

    /// Returns the typed precondition error when `sigma` contains `self`.
    pub fn require_avoided_by(self, sigma: &Permutation) -> Result<()> {
        if self.is_avoided_by(sigma) {
            Ok(())
        } else {
            Err(Error::NotAvoiding(self))
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.word();
        write!(f, "{a}{b}{c}")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tau: Permutation = s.parse()?;
        Pattern::from_permutation(&tau)
            .ok_or_else(|| Error::InvalidPermutation(format!("{s:?} is not a pattern of length 3")))
    }
}

/// Knuth's one-stack sort succeeds exactly on the 231-avoiders.
fn stack_sortable(word: impl Iterator<Item = usize>) -> bool {
    let mut stack: Vec<usize> = Vec::new();
    let mut next_out = 1;
    for x in word {
        while let Some(&top) = stack.last() {
            if top < x {
                if top != next_out {
                    return false;
                }
                next_out += 1;
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(x);
    }
    while let Some(top) = stack.pop() {
        if top != next_out {
            return false;
        }
        next_out += 1;
    }
    true
}

fn has_increasing_triple(word: impl Iterator<Item = usize>) -> bool {
    let mut first = usize::MAX;
    let mut second = usize::MAX;
    for x in word {
        if x <= first {
            first = x;
        } else if x <= second {
            second = x;
        } else {
            return true;
        }
    }
    false
}

/// True if some `tau.len()`-subsequence of `sigma` is order-isomorphic to
/// `tau`. Exhaustive over position subsets.
pub fn contains_naive(sigma: &Permutation, tau: &Permutation) -> bool {
    let (w, t) = (sigma.word(), tau.word());
    let k = t.len();
    if k > w.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<usize> = idx.iter().map(|&i| w[i]).collect();
        if order_isomorphic(&sub, t) {
            return true;
        }
        // advance to the next k-combination of 0..n
        let n = w.len();
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) fn order_isomorphic(vals: &[usize], tau: &[usize]) -> bool {
    (0..tau.len()).all(|a| (0..tau.len()).all(|b| (vals[a] < vals[b]) == (tau[a] < tau[b])))
}

/// Pattern avoidance for any `tau`. Patterns of length three use the linear
/// recognizers of [`Pattern`]; longer patterns use the exhaustive scan.
pub fn avoids(sigma: &Permutation, tau: &Permutation) -> bool {
    match Pattern::from_permutation(tau) {
        Some(p) => p.is_avoided_by(sigma),
        None => !contains_naive(sigma, tau),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::enumerate::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let t231 = p("231");
        assert!(avoids(&p("[6,2,1,5,4,3]"), &t231));
        assert!(!avoids(&p("[2,3,1]"), &t231));
        assert!(avoids(&p("[1,4,2,3]"), &t231));
        assert!(avoids(&p("[1,2]"), &t231));
        assert!(!avoids(&p("[1]"), &p("[1]")));
    }

    #[test]
    fn fast_recognizers_agree_with_naive_scan() {
        for n in 1..=8 {
            for sigma in all_permutations(n) {
                for pat in Pattern::ALL {
                    assert_eq!(
                        pat.is_avoided_by(&sigma),
                        !contains_naive(&sigma, &pat.as_permutation()),
                        "{sigma} vs {pat}"
                    );
                }
            }
        }
    }

    #[test]
    fn explicit_inequality_characterizations() {
        // 231: no i<j<k with σ_k < σ_i < σ_j; 312: no i<j<k with σ_j < σ_k < σ_i
        for sigma in all_permutations(7) {
            let w = sigma.word();
            let n = w.len();
            let mut has231 = false;
            let mut has312 = false;
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        has231 |= w[k] < w[i] && w[i] < w[j];
                        has312 |= w[j] < w[k] && w[k] < w[i];
                    }
                }
            }
            assert_eq!(Pattern::P231.is_avoided_by(&sigma), !has231);
            assert_eq!(Pattern::P312.is_avoided_by(&sigma), !has312);
        }
    }

    #[test]
    fn longer_patterns_use_the_scan() {
        let tau = p("[1,3,2,4]");
        assert!(!avoids(&p("[2,5,3,6,1,4]"), &tau));
        assert!(avoids(&p("[4,3,2,1]"), &tau));
        assert!(avoids(&p("[1,2]"), &tau));
    }

    #[test]
    fn pattern_text_and_error_naming() {
        assert_eq!("231".parse::<Pattern>().unwrap(), Pattern::P231);
        assert_eq!("[3,1,2]".parse::<Pattern>().unwrap(), Pattern::P312);
        assert!("1234".parse::<Pattern>().is_err());
        let err = Pattern::P231.require_avoided_by(&p("231")).unwrap_err();
        assert!(err.to_string().starts_with("NotAvoiding231"));
    }
}
