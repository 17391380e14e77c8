//! Dyck paths as words in `0` (north) and `1` (east).
//!
//! A descent of a path is a position `i` with `D_i = 1` and `D_{i+1} = 0`,
//! i.e. a valley. Its coordinates are the lattice point reached after the
//! east step; the x- and y-coordinates of all valleys determine the path.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{check_ceiling, Error, Result, DEFAULT_MAX_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    North,
    East,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Valley coordinates of a path, split into the x-set and y-set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawValleySet")]
pub struct ValleySet {
    n: usize,
    xs: Vec<usize>,
    ys: Vec<usize>,
}

#[derive(Deserialize)]
struct RawValleySet {
    n: usize,
    xs: Vec<usize>,
    ys: Vec<usize>,
}

impl TryFrom<RawValleySet> for ValleySet {
    type Error = Error;

    fn try_from(raw: RawValleySet) -> Result<Self> {
        ValleySet::new(raw.n, raw.xs, raw.ys)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStats {
    pub des_set: BTreeSet<usize>,
    pub maj: usize,
    pub maj0: usize,
    pub maj1: usize,
}

impl ValleySet {
    /// Checks that `xs`, `ys` are strictly increasing subsets of `1..n` of
    /// equal size with `xs[l] ≤ ys[l]`, which is exactly the condition for a
    /// Dyck path with these valleys to exist.
    pub fn new(n: usize, xs: Vec<usize>, ys: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidValleySet("semilength must be positive".into()));
        }
        if xs.len() != ys.len() {
            return Err(Error::InvalidValleySet(format!(
                "{} x-coordinates but {} y-coordinates",
                xs.len(),
                ys.len()
            )));
        }
        for s in [&xs, &ys] {
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidValleySet("coordinates must strictly increase".into()));
            }
            if s.iter().any(|&v| v == 0 || v >= n) {
                return Err(Error::InvalidValleySet(format!("coordinates must lie in 1..{n}")));
            }
        }
        if let Some((x, y)) = xs.iter().zip(&ys).find(|(x, y)| x > y) {
            return Err(Error::InvalidValleySet(format!(
                "valley ({x},{y}) lies below the diagonal"
            )));
        }
        Ok(ValleySet { n, xs, ys })
    }

    pub fn from_sets(n: usize, xs: &BTreeSet<usize>, ys: &BTreeSet<usize>) -> Result<Self> {
        ValleySet::new(n, xs.iter().copied().collect(), ys.iter().copied().collect())
    }

    pub fn semilength(&self) -> usize {
        self.n
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    pub fn x_set(&self) -> BTreeSet<usize> {
        self.xs.iter().copied().collect()
    }

    pub fn y_set(&self) -> BTreeSet<usize> {
        self.ys.iter().copied().collect()
    }

    pub fn coords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.xs.iter().copied().zip(self.ys.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }
}

impl DyckPath {
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyPath);
        }
        let north = steps.iter().filter(|&&s| s == Step::North).count();
        let east = steps.len() - north;
        if north != east {
            return Err(Error::UnbalancedCounts { north, east });
        }
        let mut height: isize = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::North { 1 } else { -1 };
            if height < 0 {
                return Err(Error::PrefixViolation { position: i + 1 });
            }
        }
        Ok(DyckPath { steps })
    }

    fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::from_steps(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// `0^n 1^n`.
    pub fn max_path(n: usize) -> Self {
        let mut steps = vec![Step::North; n];
        steps.extend(std::iter::repeat_n(Step::East, n));
        DyckPath::from_steps_unchecked(steps)
    }

    /// `(01)^n`.
    pub fn diagonal(n: usize) -> Self {
        DyckPath::from_steps_unchecked((0..n).flat_map(|_| [Step::North, Step::East]).collect())
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Positions `i` (1-based) with `D_i = 1, D_{i+1} = 0`.
    pub fn descents(&self) -> BTreeSet<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::East && w[1] == Step::North)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    pub fn stats(&self) -> PathStats {
        let (mut maj0, mut maj1) = (0, 0);
        let (mut zeros, mut ones) = (0, 0);
        let mut des_set = BTreeSet::new();
        for (i, w) in self.steps.windows(2).enumerate() {
            match w[0] {
                Step::North => zeros += 1,
                Step::East => ones += 1,
            }
            if w[0] == Step::East && w[1] == Step::North {
                des_set.insert(i + 1);
                maj0 += zeros;
                maj1 += ones;
            }
        }
        PathStats {
            maj: des_set.iter().sum(),
            des_set,
            maj0,
            maj1,
        }
    }

    pub fn maj0(&self) -> usize {
        self.stats().maj0
    }

    pub fn maj1(&self) -> usize {
        self.stats().maj1
    }

    pub fn valleys(&self) -> ValleySet {
        let (mut x, mut y) = (0, 0);
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::North => y += 1,
                Step::East => {
                    x += 1;
                    if self.steps.get(i + 1) == Some(&Step::North) {
                        xs.push(x);
                        ys.push(y);
                    }
                }
            }
        }
        ValleySet {
            n: self.semilength(),
            xs,
            ys,
        }
    }

    /// The unique path with the given valleys: north runs of lengths
    /// `y_1, y_2 - y_1, …, n - y_k` alternating with east runs
    /// `x_1, x_2 - x_1, …, n - x_k`.
    pub fn from_valleys(v: &ValleySet) -> DyckPath {
        let n = v.n;
        let mut steps = Vec::with_capacity(2 * n);
        let (mut px, mut py) = (0, 0);
        for (x, y) in v.coords().chain(std::iter::once((n, n))) {
            steps.extend(std::iter::repeat_n(Step::North, y - py));
            steps.extend(std::iter::repeat_n(Step::East, x - px));
            px = x;
            py = y;
        }
        DyckPath::from_steps_unchecked(steps)
    }

    /// Height at which each east step starts, i.e. the top of column `x`.
    fn column_tops(&self) -> Vec<usize> {
        let mut tops = Vec::with_capacity(self.semilength());
        let mut y = 0;
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => tops.push(y),
            }
        }
        tops
    }

    /// Full cells between the path and the diagonal: `Σ_k (k-1) - e_k`, where
    /// `e_k` counts east steps before the `k`-th north step.
    pub fn area(&self) -> usize {
        let (mut east, mut k, mut area) = (0, 0, 0);
        for s in &self.steps {
            match s {
                Step::North => {
                    area += k - east;
                    k += 1;
                }
                Step::East => east += 1,
            }
        }
        area
    }

    /// The bounce path rises from `(a, a)` to the height where the path's
    /// east step at column `a` begins, then runs east back to the diagonal.
    /// `bounce = Σ (n - a_i)` over its interior diagonal touch points.
    pub fn bounce(&self) -> usize {
        let n = self.semilength();
        let tops = self.column_tops();
        let (mut a, mut total) = (0, 0);
        loop {
            a = tops[a];
            if a == n {
                return total;
            }
            total += n - a;
        }
    }

    /// Ψ on paths: valleys `(X, Y) ↦ ([n-1] \ Y, [n-1] \ X)`.
    pub fn psi_complement(&self) -> DyckPath {
        let n = self.semilength();
        let v = self.valleys();
        let (xset, yset) = (v.x_set(), v.y_set());
        let xs = (1..n).filter(|i| !yset.contains(i)).collect();
        let ys = (1..n).filter(|i| !xset.contains(i)).collect();
        let v = ValleySet::new(n, xs, ys).expect("complement of a valley set is a valley set");
        DyckPath::from_valleys(&v)
    }

    /// Valleys `(i, j) ↦ (n - j, n - i)`.
    pub fn reflect(&self) -> DyckPath {
        let n = self.semilength();
        let v = self.valleys();
        let xs = v.ys.iter().rev().map(|j| n - j).collect();
        let ys = v.xs.iter().rev().map(|i| n - i).collect();
        DyckPath::from_valleys(&ValleySet { n, xs, ys })
    }
}

pub fn parse_path(word: &str) -> Result<DyckPath> {
    word.parse()
}

pub fn path_stats(d: &DyckPath) -> PathStats {
    d.stats()
}

pub fn valleys(d: &DyckPath) -> ValleySet {
    d.valleys()
}

pub fn from_valleys(v: &ValleySet) -> DyckPath {
    DyckPath::from_valleys(v)
}

pub fn area(d: &DyckPath) -> usize {
    d.area()
}

pub fn bounce(d: &DyckPath) -> usize {
    d.bounce()
}

pub fn psi_complement(d: &DyckPath) -> DyckPath {
    d.psi_complement()
}

pub fn reflect(d: &DyckPath) -> DyckPath {
    d.reflect()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::North => "0",
                Step::East => "1",
            })?;
        }
        Ok(())
    }
}

/// Blanks inside the word are ignored.
impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => steps.push(Step::North),
                '1' => steps.push(Step::East),
                c if c.is_whitespace() => {}
                c => return Err(Error::NonBinaryCharacter { ch: c, position: i + 1 }),
            }
        }
        DyckPath::from_steps(steps)
    }
}

impl TryFrom<String> for DyckPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DyckPath> for String {
    fn from(d: DyckPath) -> String {
        d.to_string()
    }
}

/// Lexicographic stream (`0 < 1`) of all Dyck paths of semilength `n`.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    n: usize,
    steps: Vec<Step>,
    north: usize,
    // whether the step at each depth has already tried East
    tried_east: Vec<bool>,
    started: bool,
    done: bool,
}

impl DyckPaths {
    fn new(n: usize) -> Self {
        DyckPaths {
            n,
            steps: Vec::with_capacity(2 * n),
            north: 0,
            tried_east: Vec::with_capacity(2 * n),
            started: false,
            done: n == 0,
        }
    }

    fn push(&mut self, s: Step) {
        if s == Step::North {
            self.north += 1;
        }
        self.steps.push(s);
    }

    fn pop(&mut self) -> Option<Step> {
        let s = self.steps.pop()?;
        if s == Step::North {
            self.north -= 1;
        }
        Some(s)
    }

    /// Extends the current prefix to the lexicographically smallest path.
    fn fill_min(&mut self) {
        while self.steps.len() < 2 * self.n {
            let east = self.steps.len() - self.north;
            if self.north < self.n {
                self.push(Step::North);
                self.tried_east.push(false);
            } else {
                debug_assert!(east < self.north);
                self.push(Step::East);
                self.tried_east.push(true);
            }
        }
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_min();
            return Some(DyckPath::from_steps_unchecked(self.steps.clone()));
        }
        // rightmost North that can be turned into East
        loop {
            let Some(s) = self.pop() else {
                self.done = true;
                return None;
            };
            let tried = self.tried_east.pop().unwrap_or(true);
            if s == Step::North && !tried {
                let east = self.steps.len() - self.north;
                if east < self.north {
                    self.push(Step::East);
                    self.tried_east.push(true);
                    self.fill_min();
                    return Some(DyckPath::from_steps_unchecked(self.steps.clone()));
                }
            }
        }
    }
}

pub fn enumerate_dyck(n: usize) -> Result<DyckPaths> {
    enumerate_dyck_within(n, DEFAULT_MAX_N)
}

pub fn enumerate_dyck_within(n: usize, max_n: usize) -> Result<DyckPaths> {
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    check_ceiling(n, max_n)?;
    Ok(DyckPaths::new(n))
}
