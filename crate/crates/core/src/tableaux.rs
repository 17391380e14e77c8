//! Robinson–Schensted insertion, Schützenberger evacuation and the descent
//! preserving involution on 321-avoiding permutations.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::permutations::{Pattern, Permutation};
use crate::{Error, Result};

/// A standard Young tableau in English notation (first row on top).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!("entries must be 1..={n}, each once")));
            }
            seen[v] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau(format!("column conflict in row {}", r + 1)));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Row index (0-based) of every entry, indexed by value.
    fn row_of(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        row_of
    }

    /// `{i : i + 1 lies in a strictly lower row than i}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let row_of = self.row_of();
        (1..self.size()).filter(|&i| row_of[i + 1] > row_of[i]).collect()
    }

    /// Schützenberger evacuation: repeatedly delete the smallest entry, slide
    /// the hole outward by jeu de taquin, and label the vacated outer corner
    /// with `n`, `n-1`, … in turn.
    pub fn evacuation(&self) -> StandardTableau {
        let n = self.size();
        let mut work = self.rows.clone();
        let mut out: Vec<Vec<usize>> = self.rows.iter().map(|row| vec![0; row.len()]).collect();
        for label in (1..=n).rev() {
            let (mut r, mut c) = (0, 0);
            loop {
                let right = work[r].get(c + 1).copied();
                let below = work.get(r + 1).and_then(|row| row.get(c)).copied();
                match (right, below) {
                    (None, None) => break,
                    (Some(x), Some(y)) if y < x => {
                        work[r][c] = y;
                        r += 1;
                    }
                    (Some(x), _) => {
                        work[r][c] = x;
                        c += 1;
                    }
                    (None, Some(y)) => {
                        work[r][c] = y;
                        r += 1;
                    }
                }
            }
            work[r].pop();
            if work[r].is_empty() {
                work.pop();
            }
            out[r][c] = label;
        }
        StandardTableau { rows: out }
    }
}

pub fn tableau_descents(t: &StandardTableau) -> BTreeSet<usize> {
    t.descents()
}

pub fn evacuation(t: &StandardTableau) -> StandardTableau {
    t.evacuation()
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let json = serde_json::to_string(&self.rows).map_err(|_| fmt::Error)?;
        f.write_str(&json)
    }
}

/// Row insertion. Returns the insertion tableau `P` and recording tableau `Q`.
pub fn rsk(sigma: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &x) in sigma.word().iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![k + 1]);
                break;
            }
            let pos = p[r].partition_point(|&y| y < x);
            if pos == p[r].len() {
                p[r].push(x);
                q[r].push(k + 1);
                break;
            }
            x = std::mem::replace(&mut p[r][pos], x);
            r += 1;
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Reverse bumping, removing cells in the order given by the largest entries
/// of `q`.
pub fn inverse_rsk(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!(
            "shapes differ: {:?} vs {:?}",
            p.shape(),
            q.shape()
        )));
    }
    let n = p.size();
    let q_row = q.row_of();
    let mut rows = p.rows.clone();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        let r = q_row[k];
        let mut y = rows[r].pop().ok_or_else(|| Error::Internal("ragged tableau".into()))?;
        if rows[r].is_empty() {
            rows.pop();
        }
        for above in (0..r).rev() {
            let pos = rows[above].partition_point(|&v| v < y);
            if pos == 0 {
                return Err(Error::Internal("reverse bump found no smaller entry".into()));
            }
            y = std::mem::replace(&mut rows[above][pos - 1], y);
        }
        word[k - 1] = y;
    }
    Permutation::new(word).map_err(|e| Error::Internal(e.to_string()))
}

/// The involution on `S_n(321)` given by `σ ↦ (P, Q) ↦ (evac P, Q) ↦ j(σ)`.
/// It keeps `Des` and sends `iDes` to `{n - j : j ∈ iDes}`.
pub fn j_involution(sigma: &Permutation) -> Result<Permutation> {
    Pattern::P321.require_avoided_by(sigma)?;
    let (p, q) = rsk(sigma);
    inverse_rsk(&p.evacuation(), &q)
}

/// `ρ ∘ i ∘ j ∘ i : S_n(321) → S_n(123)`, taking `(des, maj, imaj)` to
/// `(n-1-des, C(n,2)-maj, C(n,2)-imaj)`.
pub fn trio_321_123(sigma: &Permutation) -> Result<Permutation> {
    Pattern::P321.require_avoided_by(sigma)?;
    Ok(j_involution(&sigma.inverse())?.inverse().reverse())
}

/// Every standard Young tableau with `n` cells, by backtracking over the row
/// receiving each successive entry.
pub fn standard_tableaux(n: usize) -> Vec<StandardTableau> {
    fn fill(rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<StandardTableau>) {
        if next > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..=rows.len() {
            let fits = if r == rows.len() {
                true
            } else {
                r == 0 || rows[r].len() < rows[r - 1].len()
            };
            if !fits {
                continue;
            }
            if r == rows.len() {
                rows.push(vec![next]);
            } else {
                rows[r].push(next);
            }
            fill(rows, next + 1, n, out);
            rows[r].pop();
            if rows[r].is_empty() {
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::new(), 1, n, &mut out);
    out
}
