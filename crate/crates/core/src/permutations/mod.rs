//! Permutations in one-line notation and their descent statistics.
//!
//! Descent conventions: `i` in `1..n` is a descent when `σ_i > σ_{i+1}`,
//! otherwise an ascent, and `n` itself is **always an ascent**. This departs
//! from the usual definition but every reconstruction argument for
//! 231-avoiders relies on each descent block being followed by an ascent.

mod enumerate;
mod pattern;
mod reconstruct;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use enumerate::all_permutations;
pub use enumerate::{enumerate_avoiders, enumerate_avoiders_within, Avoiders};
pub use pattern::{avoids, contains_naive, Pattern};
pub use reconstruct::{reconstruct_231, tau_offset};

/// A permutation of `{1..n}`, `n ≥ 1`, stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

/// The four descent-type sets of a permutation.
///
/// `asc_set` and `iasc_set` always contain `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentData {
    pub des_set: BTreeSet<usize>,
    pub asc_set: BTreeSet<usize>,
    pub ides_set: BTreeSet<usize>,
    pub iasc_set: BTreeSet<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermStats {
    pub des: usize,
    pub asc: usize,
    pub maj: usize,
    pub imaj: usize,
    pub inv: usize,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a bijection on `1..=word.len()`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation::from_word_unchecked((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// The reversal ρ: `[σ_1,…,σ_n] ↦ [σ_n,…,σ_1]`.
    pub fn reverse(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn descents(&self) -> BTreeSet<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Ascent set, including `n`.
    pub fn ascents(&self) -> BTreeSet<usize> {
        ascents_from_descents(self.len(), &self.descents())
    }

    pub fn inverse_descents(&self) -> BTreeSet<usize> {
        self.inverse().descents()
    }

    pub fn descent_data(&self) -> DescentData {
        let n = self.len();
        let des_set = self.descents();
        let ides_set = self.inverse_descents();
        DescentData {
            asc_set: ascents_from_descents(n, &des_set),
            iasc_set: ascents_from_descents(n, &ides_set),
            des_set,
            ides_set,
        }
    }

    pub fn des(&self) -> usize {
        self.descents().len()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    pub fn imaj(&self) -> usize {
        self.inverse().maj()
    }

    /// Inversion number, counted with a Fenwick tree over values.
    pub fn inv(&self) -> usize {
        let n = self.len();
        let mut tree = vec![0usize; n + 1];
        let mut count = 0;
        for (seen, &v) in self.word.iter().enumerate() {
            // number of earlier values ≤ v
            let mut smaller = 0;
            let mut i = v;
            while i > 0 {
                smaller += tree[i];
                i &= i - 1;
            }
            count += seen - smaller;
            let mut i = v;
            while i <= n {
                tree[i] += 1;
                i += i & i.wrapping_neg();
            }
        }
        count
    }

    pub fn stats(&self) -> PermStats {
        let des = self.des();
        PermStats {
            des,
            asc: self.len() - des,
            maj: self.maj(),
            imaj: self.imaj(),
            inv: self.inv(),
        }
    }

    /// `h_i = |{j > i : σ_j > σ_i}|` for `i = 1..n`.
    pub fn heights(&self) -> Vec<usize> {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x > w[i]).count())
            .collect()
    }
}

/// `({1..n-1} \ des) ∪ {n}`.
pub fn ascents_from_descents(n: usize, des: &BTreeSet<usize>) -> BTreeSet<usize> {
    (1..=n).filter(|i| !des.contains(i)).collect()
}

pub fn descent_data(sigma: &Permutation) -> DescentData {
    sigma.descent_data()
}

pub fn perm_stats(sigma: &Permutation) -> PermStats {
    sigma.stats()
}

pub fn inverse(sigma: &Permutation) -> Permutation {
    sigma.inverse()
}

pub fn reverse_rho(sigma: &Permutation) -> Permutation {
    sigma.reverse()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `[6,2,1,5,4,3]`, `6,2,1,5,4,3`, `6 2 1 5 4 3`, or the compact
/// digit string `621543` (only unambiguous for `n ≤ 9`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(trimmed)
            .trim();
        let has_separator = inner.contains(',') || inner.contains(char::is_whitespace);
        let word: Option<Vec<usize>> = if has_separator {
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| tok.parse::<usize>().ok())
                .collect()
        } else {
            inner.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let word = word.ok_or_else(|| Error::InvalidPermutation(format!("cannot parse {s:?}")))?;
        Permutation::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn brute_inv(sigma: &Permutation) -> usize {
        let w = sigma.word();
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn parses_all_text_forms() {
        let expected = Permutation::new(vec![6, 2, 1, 5, 4, 3]).unwrap();
        for s in [
            "[6,2,1,5,4,3]",
            "6,2,1,5,4,3",
            " [6, 2, 1, 5, 4, 3] ",
            "621543",
            "6 2 1 5 4 3",
        ] {
            assert_eq!(p(s), expected, "{s}");
        }
        assert_eq!(expected.to_string(), "[6,2,1,5,4,3]");
        assert!("[1,1]".parse::<Permutation>().is_err());
        assert!("[0,1]".parse::<Permutation>().is_err());
        assert!("[1,3]".parse::<Permutation>().is_err());
        assert!("[]".parse::<Permutation>().is_err());
        assert!("[a,b]".parse::<Permutation>().is_err());
    }

    #[test]
    fn descent_data_of_worked_example() {
        let d = p("[6,2,1,5,4,3]").descent_data();
        assert_eq!(d.des_set, set(&[1, 2, 4, 5]));
        assert_eq!(d.asc_set, set(&[3, 6]));
        assert_eq!(d.ides_set, set(&[1, 3, 4, 5]));
        assert_eq!(d.iasc_set, set(&[2, 6]));
    }

    #[test]
    fn descent_data_identity_and_123_witness() {
        let d = Permutation::identity(4).descent_data();
        assert!(d.des_set.is_empty());
        assert_eq!(d.asc_set, set(&[1, 2, 3, 4]));
        assert!(d.ides_set.is_empty());

        let d = p("[2,4,1,3]").descent_data();
        assert_eq!(d.des_set, set(&[2]));
        assert_eq!(d.ides_set, set(&[1, 3]));
    }

    #[test]
    fn n_equals_one_is_total() {
        let one = Permutation::identity(1);
        let d = one.descent_data();
        assert!(d.des_set.is_empty());
        assert_eq!(d.asc_set, set(&[1]));
        assert_eq!(
            one.stats(),
            PermStats {
                des: 0,
                asc: 1,
                maj: 0,
                imaj: 0,
                inv: 0
            }
        );
        assert_eq!(one.reverse(), one);
        assert_eq!(one.inverse(), one);
    }

    #[test]
    fn stats_of_worked_example() {
        let s = p("[6,2,1,5,4,3]").stats();
        assert_eq!((s.maj, s.imaj), (12, 13));
        assert_eq!(s.inv, 9);
        assert_eq!(s.inv, brute_inv(&p("[6,2,1,5,4,3]")));
        assert_eq!((s.des, s.asc), (4, 2));
        let id = Permutation::identity(7).stats();
        assert_eq!((id.maj, id.imaj, id.inv), (0, 0, 0));
    }

    #[test]
    fn inverse_and_reverse_examples() {
        assert_eq!(p("[6,2,1,5,4,3]").inverse(), p("[3,2,6,5,4,1]"));
        assert_eq!(p("[2,3,1]").inverse(), p("[3,1,2]"));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("[6,2,1,5,4,3]").reverse(), p("[3,4,5,1,2,6]"));
        assert_eq!(Permutation::identity(4).reverse(), p("[4,3,2,1]"));
    }

    #[test]
    fn heights_examples() {
        assert_eq!(p("[3,4,5,1,2,6]").heights(), vec![3, 2, 1, 2, 1, 0]);
        assert_eq!(p("[1,2,3]").heights(), vec![2, 1, 0]);
        assert_eq!(p("[3,2,1]").heights(), vec![0, 0, 0]);
    }

    #[test]
    fn serde_uses_plain_arrays() {
        let s = p("[2,3,1]");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,3,1]");
        let back: Permutation = serde_json::from_str("[2,3,1]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Permutation>("[2,2,1]").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
            (1..=max).prop_flat_map(|n| {
                Just((1..=n).collect::<Vec<_>>())
                    .prop_shuffle()
                    .prop_map(|w| Permutation::new(w).unwrap())
            })
        }

        proptest! {
            #[test]
            fn involutions_and_descent_swaps(s in arb_perm(12)) {
                let n = s.len();
                prop_assert_eq!(s.inverse().inverse(), s.clone());
                prop_assert_eq!(s.reverse().reverse(), s.clone());
                prop_assert_eq!(s.inverse().descents(), s.inverse_descents());
                prop_assert_eq!(s.inverse().inverse_descents(), s.descents());
                prop_assert_eq!((s.inverse().maj(), s.inverse().imaj()), (s.imaj(), s.maj()));

                let r = s.reverse();
                let rdes: BTreeSet<usize> = (1..n)
                    .filter(|i| !s.descents().contains(&(n - i)))
                    .collect();
                prop_assert_eq!(r.descents(), rdes);
                let rides: BTreeSet<usize> = (1..n)
                    .filter(|i| !s.inverse_descents().contains(i))
                    .collect();
                prop_assert_eq!(r.inverse_descents(), rides);
            }

            #[test]
            fn fenwick_inversions_match_brute_force(s in arb_perm(12)) {
                prop_assert_eq!(s.inv(), brute_inv(&s));
            }

            #[test]
            fn text_form_round_trips(s in arb_perm(12)) {
                prop_assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s);
            }
        }
    }
}
