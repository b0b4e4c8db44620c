//! Last-passage percolation on square arrays of nonnegative integers.
//!
//! The passage time is the largest sum of entries along a chain of distinct
//! points from `(1, 1)` to `(m, m)` whose coordinates increase weakly. With
//! nonnegative entries any such chain can be filled in to a unit-step path
//! without lowering its sum, so the usual step dynamic program is exact.

use serde::{Deserialize, Serialize};

use crate::biwords::PlanarArray;
use crate::exec::Strategy;
use crate::ExactCount;

/// Lattice points `(i, j)`, one-based, weakly increasing in both coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathChain {
    pub points: Vec<(u32, u32)>,
}

impl PathChain {
    /// Sum of the entries of `x` on the chain.
    pub fn weight(&self, x: &PlanarArray) -> u64 {
        self.points
            .iter()
            .map(|&(i, j)| x.get(i as usize - 1, j as usize - 1))
            .sum()
    }

    pub fn is_monotone(&self) -> bool {
        self.points
            .windows(2)
            .all(|w| w[0] != w[1] && w[0].0 <= w[1].0 && w[0].1 <= w[1].1)
    }
}

/// `T[i][j]` is the passage time from the corner to zero-based `(i, j)`.
fn passage_table(x: &PlanarArray) -> Vec<Vec<u64>> {
    let m = x.m() as usize;
    let mut t = vec![vec![0u64; m]; m];
    for i in 0..m {
        for j in 0..m {
            let up = if i > 0 { t[i - 1][j] } else { 0 };
            let left = if j > 0 { t[i][j - 1] } else { 0 };
            t[i][j] = x.get(i, j) + up.max(left);
        }
    }
    t
}

/// Last-passage time from `(1, 1)` to `(m, m)`; 0 for the empty array.
pub fn last_passage_time(x: &PlanarArray) -> u64 {
    let m = x.m() as usize;
    if m == 0 {
        return 0;
    }
    passage_table(x)[m - 1][m - 1]
}

/// A chain attaining [`last_passage_time`], recovered by walking the table
/// back from `(m, m)`. On ties the walk steps back along the row, to
/// `(i, j - 1)`, so for a zero array the chain runs down the first column and
/// then along the last row.
pub fn chain_certificate(x: &PlanarArray) -> PathChain {
    let m = x.m() as usize;
    if m == 0 {
        return PathChain { points: Vec::new() };
    }
    let t = passage_table(x);
    let (mut i, mut j) = (m - 1, m - 1);
    let mut points = vec![(i as u32 + 1, j as u32 + 1)];
    while i > 0 || j > 0 {
        if i == 0 || (j > 0 && t[i][j - 1] >= t[i - 1][j]) {
            j -= 1;
        } else {
            i -= 1;
        }
        points.push((i as u32 + 1, j as u32 + 1));
    }
    points.reverse();
    PathChain { points }
}

/// Passage times of the cells filled so far, row-major, for an `m x m` search
/// bounded by `n`.
struct Search {
    m: usize,
    n: u64,
    times: Vec<u64>,
}

impl Search {
    /// Counts completions from row-major `cell` onward. Every entry lies on
    /// some chain, so each one is at most `n`, and a branch dies as soon as a
    /// partial passage time exceeds `n`.
    fn count_from(&mut self, cell: usize) -> u64 {
        if cell == self.m * self.m {
            return 1;
        }
        let (i, j) = (cell / self.m, cell % self.m);
        let up = if i > 0 { self.times[cell - self.m] } else { 0 };
        let left = if j > 0 { self.times[cell - 1] } else { 0 };
        let base = up.max(left);
        let mut total = 0;
        for t in base..=self.n {
            self.times[cell] = t;
            total += self.count_from(cell + 1);
        }
        total
    }
}

/// All admissible first rows, given as their passage times (weakly
/// increasing, at most `n`).
fn first_rows(m: usize, n: u64) -> Vec<Vec<u64>> {
    let mut rows = vec![Vec::new()];
    for _ in 0..m {
        rows = rows
            .into_iter()
            .flat_map(|row: Vec<u64>| {
                let base = row.last().copied().unwrap_or(0);
                (base..=n).map(move |t| {
                    let mut next = row.clone();
                    next.push(t);
                    next
                })
            })
            .collect();
    }
    rows
}

/// Number of `m x m` nonnegative integer arrays with last-passage time at
/// most `n`, by depth-first search over entries in row-major order. The
/// search is split across tasks by the first row.
pub fn count_matrices(m: u32, n: u64) -> ExactCount {
    count_matrices_with(m, n, Strategy::default())
}

pub fn count_matrices_with(m: u32, n: u64, strategy: Strategy) -> ExactCount {
    let m = m as usize;
    if m == 0 {
        return ExactCount::one();
    }
    strategy
        .map(first_rows(m, n), |row| {
            let mut times = row;
            times.resize(m * m, 0);
            Search { m, n, times }.count_from(m)
        })
        .into_iter()
        .map(ExactCount::from)
        .sum()
}
