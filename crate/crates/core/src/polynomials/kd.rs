//! Search for non-negative shifts `k_D` with
//! `Cat_n(q,t) = Σ_D q^{maj₁ D - k_D} t^{C(n,2) - maj₀ D - k_D}`.
//!
//! A path with exponents `(a, b)` can only land on a target monomial
//! `(a - k, b - k)`, so paths and target monomials split into classes by
//! `a - b`. Inside one class a path at `a` is compatible with every target
//! at `α ≤ a`: the compatibility graph is a Ferrers board, which gives both
//! a feasibility test and a closed product formula for the number of
//! assignments.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use super::catalan::cat_qt_within;
use super::matching::hopcroft_karp;
use super::multipoly::{Monomial, MultiPoly};
use crate::dyck::{enumerate_dyck_within, DyckPath};
use crate::{binom2, Error, Result, DEFAULT_MAX_N};

/// Largest `n` for which every assignment is listed.
pub const FULL_ENUMERATION_MAX_N: usize = 5;

/// One solution; paths not listed have `k_D = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct KdAssignment {
    shifts: BTreeMap<DyckPath, u32>,
}

impl KdAssignment {
    pub fn get(&self, d: &DyckPath) -> u32 {
        self.shifts.get(d).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&DyckPath, u32)> + '_ {
        self.shifts.iter().map(|(d, &k)| (d, k))
    }

    /// `Σ_D q^{maj₁ - k_D} t^{C(n,2) - maj₀ - k_D}` over `D_n`.
    pub fn shifted_polynomial(&self, n: usize) -> Result<MultiPoly> {
        let c = binom2(n) as u32;
        let mut ms = Vec::new();
        for d in enumerate_dyck_within(n, usize::MAX)? {
            let s = d.stats();
            let k = self.get(&d);
            let q = (s.maj1 as u32).checked_sub(k).ok_or(Error::NegativeExponent)?;
            let t = (c - s.maj0 as u32).checked_sub(k).ok_or(Error::NegativeExponent)?;
            ms.push(Monomial::qt(q, t));
        }
        Ok(MultiPoly::from_monomials(ms))
    }

    /// JSON object from path word to its (non-zero) shift.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self.shifts.iter().map(|(d, &k)| (d.to_string(), json!(k))).collect();
        Value::Object(map)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KdSearch {
    pub n: usize,
    /// All assignments when `exhaustive`, otherwise a single one.
    pub assignments: Vec<KdAssignment>,
    pub exhaustive: bool,
    /// Exact number of assignments.
    pub count: BigUint,
}

impl KdSearch {
    pub fn to_json(&self) -> Value {
        let count = match self.count.to_u64() {
            Some(c) => json!(c),
            None => json!(self.count.to_string()),
        };
        json!({
            "n": self.n,
            "exhaustive": self.exhaustive,
            "count": count,
            "assignments": self.assignments.iter().map(KdAssignment::to_json).collect::<Vec<_>>(),
        })
    }
}

struct PathExp {
    path: DyckPath,
    a: u32,
}

/// Per class: the paths and the multiset of target `α` values.
#[derive(Default)]
struct Class {
    paths: Vec<PathExp>,
    targets: BTreeMap<u32, u64>,
}

impl Class {
    /// Number of ways to match the paths onto the target slots, with slots
    /// of equal monomial treated as indistinguishable.
    fn count(&self) -> BigUint {
        let mut a: Vec<u32> = self.paths.iter().map(|p| p.a).collect();
        a.sort_unstable();
        let mut total = BigUint::one();
        for (i, &ai) in a.iter().enumerate() {
            let below: u64 = self.targets.range(..=ai).map(|(_, &m)| m).sum();
            if below <= i as u64 {
                return BigUint::zero();
            }
            total *= below - i as u64;
        }
        for &m in self.targets.values() {
            for f in 2..=m {
                total /= f;
            }
        }
        total
    }

    /// Every assignment of targets to paths, by backtracking.
    fn enumerate(&self) -> Vec<Vec<u32>> {
        fn feasible(paths: &[u32], targets: &BTreeMap<u32, u64>) -> bool {
            let mut p = paths.to_vec();
            p.sort_unstable();
            let slots = targets
                .iter()
                .flat_map(|(&alpha, &m)| std::iter::repeat_n(alpha, m as usize));
            let mut count = 0;
            for (alpha, a) in slots.zip(&p) {
                if alpha > *a {
                    return false;
                }
                count += 1;
            }
            count == p.len() && targets.values().sum::<u64>() == p.len() as u64
        }

        fn go(i: usize, a: &[u32], targets: &mut BTreeMap<u32, u64>, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == a.len() {
                out.push(chosen.clone());
                return;
            }
            // prefer small shifts: largest admissible α first
            let options: Vec<u32> = targets
                .range(..=a[i])
                .filter(|(_, &m)| m > 0)
                .map(|(&alpha, _)| alpha)
                .rev()
                .collect();
            for alpha in options {
                *targets.get_mut(&alpha).unwrap() -= 1;
                let live: BTreeMap<u32, u64> = targets.iter().filter(|(_, &m)| m > 0).map(|(&x, &m)| (x, m)).collect();
                if feasible(&a[i + 1..], &live) {
                    chosen.push(alpha);
                    go(i + 1, a, targets, chosen, out);
                    chosen.pop();
                }
                *targets.get_mut(&alpha).unwrap() += 1;
            }
        }

        let a: Vec<u32> = self.paths.iter().map(|p| p.a).collect();
        let mut targets = self.targets.clone();
        let mut out = Vec::new();
        go(0, &a, &mut targets, &mut Vec::new(), &mut out);
        out
    }
}

/// Finds the shifts `k_D`. For `n ≤ FULL_ENUMERATION_MAX_N` every
/// assignment is listed; above that one assignment is produced by maximum
/// bipartite matching. The exact count is reported either way.
pub fn kd_search(n: usize) -> Result<KdSearch> {
    kd_search_within(n, DEFAULT_MAX_N)
}

pub fn kd_search_within(n: usize, max_n: usize) -> Result<KdSearch> {
    let target = cat_qt_within(n, max_n)?;
    let c = binom2(n) as i64;

    let mut classes: BTreeMap<i64, Class> = BTreeMap::new();
    for d in enumerate_dyck_within(n, max_n)? {
        let s = d.stats();
        let (a, b) = (s.maj1 as i64, c - s.maj0 as i64);
        classes
            .entry(a - b)
            .or_default()
            .paths
            .push(PathExp { path: d, a: a as u32 });
    }
    for (m, coef) in target.terms() {
        let mult = coef
            .to_u64()
            .ok_or_else(|| Error::Internal(format!("coefficient {coef} of Cat_{n}")))?;
        let key = m.q as i64 - m.t as i64;
        *classes.entry(key).or_default().targets.entry(m.q).or_default() += mult;
    }

    let count = classes.values().map(Class::count).product::<BigUint>();
    if count.is_zero() {
        return Err(Error::NoAssignment(n));
    }

    let exhaustive = n <= FULL_ENUMERATION_MAX_N;
    let assignments = if exhaustive {
        let mut partial = vec![KdAssignment::default()];
        for class in classes.values() {
            let options = class.enumerate();
            let mut next = Vec::with_capacity(partial.len() * options.len());
            for base in &partial {
                for choice in &options {
                    let mut asg = base.clone();
                    for (p, &alpha) in class.paths.iter().zip(choice) {
                        if p.a > alpha {
                            asg.shifts.insert(p.path.clone(), p.a - alpha);
                        }
                    }
                    next.push(asg);
                }
            }
            partial = next;
        }
        partial.sort();
        partial
    } else {
        vec![matching_assignment(&classes, n)?]
    };

    Ok(KdSearch {
        n,
        assignments,
        exhaustive,
        count,
    })
}

fn matching_assignment(classes: &BTreeMap<i64, Class>, n: usize) -> Result<KdAssignment> {
    let mut asg = KdAssignment::default();
    for class in classes.values() {
        let slots: Vec<u32> = class
            .targets
            .iter()
            .flat_map(|(&alpha, &m)| std::iter::repeat_n(alpha, m as usize))
            .collect();
        let adj: Vec<Vec<usize>> = class
            .paths
            .iter()
            .map(|p| (0..slots.len()).filter(|&j| slots[j] <= p.a).collect())
            .collect();
        let matching = hopcroft_karp(&adj, slots.len());
        if slots.len() != class.paths.len() || matching.iter().any(Option::is_none) {
            return Err(Error::NoAssignment(n));
        }
        for (p, j) in class.paths.iter().zip(matching) {
            let alpha = slots[j.expect("perfect matching")];
            if p.a > alpha {
                asg.shifts.insert(p.path.clone(), p.a - alpha);
            }
        }
    }
    Ok(asg)
}
