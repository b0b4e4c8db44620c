//! Two-rowed lexicographic arrays (biwords), their longest weakly increasing
//! subsequence, and the correspondence with nonnegative integer matrices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::{ExactCount, Letter};

/// A column `(u, v)` of a biword.
pub type Column = (Letter, Letter);

/// A two-rowed array over `1..=m` whose columns are sorted with `u` as the
/// primary key and `v` as the secondary key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Biword {
    m: u32,
    columns: Vec<Column>,
}

impl Biword {
    pub fn empty(m: u32) -> Self {
        Biword {
            m,
            columns: Vec::new(),
        }
    }

    pub fn new(m: u32, columns: Vec<Column>) -> Result<Self> {
        for &(u, v) in &columns {
            for letter in [u, v] {
                if letter < 1 || letter > m {
                    return Err(Error::LetterOutOfRange { letter, m });
                }
            }
        }
        if let Some(position) = columns.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotLexicographic {
                position: position + 1,
            });
        }
        Ok(Biword { m, columns })
    }

    pub fn from_rows(m: u32, u: &[Letter], v: &[Letter]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::RowLengthMismatch {
                u: u.len(),
                v: v.len(),
            });
        }
        Biword::new(m, u.iter().copied().zip(v.iter().copied()).collect())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    /// Number of columns.
    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn top(&self) -> Vec<Letter> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn bottom(&self) -> Vec<Letter> {
        self.columns.iter().map(|c| c.1).collect()
    }

    /// Renders as `(top; bottom)` using letters `a..z` when `m <= 26`.
    pub fn display_letters(&self) -> String {
        format!(
            "({}; {})",
            render_row(&self.top(), self.m),
            render_row(&self.bottom(), self.m)
        )
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_letters())
    }
}

/// Renders a row of letters as `a..z` for alphabets of at most 26 letters,
/// otherwise as space-separated integers.
pub fn render_row(row: &[Letter], m: u32) -> String {
    if m <= 26 {
        row.iter()
            .map(|&l| char::from(b'a' + (l - 1) as u8))
            .collect()
    } else {
        row.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses a row rendered by [`render_row`] with letters `a..z`.
pub fn parse_letter_row(row: &str) -> Option<Vec<Letter>> {
    row.chars()
        .map(|c| {
            c.is_ascii_lowercase()
                .then(|| u32::from(c as u8 - b'a') + 1)
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct BiwordRepr {
    m: u32,
    u: Vec<Letter>,
    v: Vec<Letter>,
}

impl Serialize for Biword {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BiwordRepr {
            m: self.m,
            u: self.top(),
            v: self.bottom(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Biword {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = BiwordRepr::deserialize(deserializer)?;
        Biword::from_rows(r.m, &r.u, &r.v).map_err(serde::de::Error::custom)
    }
}

/// An `m x m` matrix of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PlanarArray {
    m: u32,
    entries: Vec<Vec<u64>>,
}

impl PlanarArray {
    pub fn zeros(m: u32) -> Self {
        PlanarArray {
            m,
            entries: vec![vec![0; m as usize]; m as usize],
        }
    }

    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self> {
        let m = entries.len() as u32;
        if entries.iter().any(|row| row.len() != m as usize) {
            return Err(Error::MatrixNotSquare { m });
        }
        Ok(PlanarArray { m, entries })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row][col]
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }
}

#[derive(Deserialize)]
struct PlanarArrayRepr {
    m: u32,
    entries: Vec<Vec<u64>>,
}

impl<'de> Deserialize<'de> for PlanarArray {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = PlanarArrayRepr::deserialize(deserializer)?;
        let x = PlanarArray::new(r.entries).map_err(serde::de::Error::custom)?;
        if x.m != r.m {
            return Err(serde::de::Error::custom(Error::MatrixNotSquare { m: r.m }));
        }
        Ok(x)
    }
}

/// True when every letter is in `1..=m` and the columns are sorted with `u`
/// primary and `v` secondary.
pub fn is_lexicographic(columns: &[Column], m: u32) -> bool {
    columns
        .iter()
        .all(|&(u, v)| (1..=m).contains(&u) && (1..=m).contains(&v))
        && columns.windows(2).all(|w| w[0] <= w[1])
}

/// Longest chain of positions `i_1 < ... < i_s` whose columns increase weakly
/// in both coordinates, by dynamic programming straight from the definition.
pub fn lis_by_definition(a: &Biword) -> usize {
    let cols = a.columns();
    let mut best = vec![1usize; cols.len()];
    for j in 0..cols.len() {
        for i in 0..j {
            if cols[i].0 <= cols[j].0 && cols[i].1 <= cols[j].1 {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Patience sorting state for the longest weakly increasing subsequence.
/// `tails[k]` is the smallest last letter of a weakly increasing subsequence of
/// length `k + 1` seen so far.
#[derive(Debug, Clone, Default)]
pub(crate) struct Patience {
    tails: Vec<Letter>,
}

impl Patience {
    /// Adds a letter and returns the current subsequence length.
    pub(crate) fn push(&mut self, v: Letter) -> usize {
        let k = self.tails.partition_point(|&t| t <= v);
        if k == self.tails.len() {
            self.tails.push(v);
        } else {
            self.tails[k] = v;
        }
        self.tails.len()
    }

    pub(crate) fn len(&self) -> usize {
        self.tails.len()
    }
}

/// Longest weakly increasing subsequence of the bottom row. For a
/// lexicographic biword the top row of any position-increasing subsequence is
/// already weakly increasing, so this equals [`lis_by_definition`].
pub fn lis_patience(a: &Biword) -> usize {
    let mut pile = Patience::default();
    for &(_, v) in a.columns() {
        pile.push(v);
    }
    pile.len()
}

/// Length of the longest weakly increasing subsequence.
pub fn longest_weakly_increasing(a: &Biword) -> usize {
    lis_patience(a)
}

/// Multiplicity matrix: entry `(i, j)` counts the columns equal to `(i+1, j+1)`.
pub fn to_matrix(a: &Biword) -> PlanarArray {
    let mut x = PlanarArray::zeros(a.m);
    for &(u, v) in a.columns() {
        x.entries[(u - 1) as usize][(v - 1) as usize] += 1;
    }
    x
}

/// The unique lexicographic biword with the given multiplicity matrix.
pub fn from_matrix(x: &PlanarArray) -> Biword {
    let mut columns = Vec::with_capacity(x.total() as usize);
    for (i, row) in x.entries.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            let col = (i as Letter + 1, j as Letter + 1);
            columns.extend(std::iter::repeat_n(col, count as usize));
        }
    }
    Biword { m: x.m, columns }
}

/// Column with index `idx` in lexicographic order of the `m * m` columns.
fn column_at(idx: u32, m: u32) -> Column {
    (idx / m + 1, idx % m + 1)
}

/// Depth-first walk over sorted column sequences whose bottom-row patience
/// length stays at most `max_lis`. `visit` sees every surviving prefix once,
/// in lexicographic order, and the walk starts after `prefix`.
fn walk<F: FnMut(&[u32])>(
    m: u32,
    max_lis: usize,
    prefix: &mut Vec<u32>,
    pile: &Patience,
    visit: &mut F,
) {
    visit(prefix);
    let start = prefix.last().copied().unwrap_or(0);
    for idx in start..m * m {
        let mut next = pile.clone();
        if next.push(column_at(idx, m).1) > max_lis {
            continue;
        }
        prefix.push(idx);
        walk(m, max_lis, prefix, &next, visit);
        prefix.pop();
    }
}

/// Tasks for the parallel walk: the empty biword on its own, then one subtree
/// per admissible first column.
fn first_columns(m: u32, max_lis: usize) -> Vec<Option<u32>> {
    let mut tasks = vec![None];
    if max_lis > 0 {
        tasks.extend((0..m * m).map(Some));
    }
    tasks
}

fn walk_subtree<F: FnMut(&[u32])>(m: u32, max_lis: usize, first: Option<u32>, visit: &mut F) {
    match first {
        None => visit(&[]),
        Some(idx) => {
            let mut pile = Patience::default();
            pile.push(column_at(idx, m).1);
            let mut prefix = vec![idx];
            walk(m, max_lis, &mut prefix, &pile, visit);
        }
    }
}

/// Every lexicographic biword over `1..=m` whose longest weakly increasing
/// subsequence is at most `max_lis`, grouped by size and lexicographic within
/// a size.
pub fn enumerate_biwords(m: u32, max_lis: usize) -> Vec<Biword> {
    enumerate_biwords_with(m, max_lis, Strategy::default())
}

pub fn enumerate_biwords_with(m: u32, max_lis: usize, strategy: Strategy) -> Vec<Biword> {
    let chunks = strategy.map(first_columns(m, max_lis), |first| {
        let mut out = Vec::new();
        walk_subtree(m, max_lis, first, &mut |idx: &[u32]| {
            out.push(Biword {
                m,
                columns: idx.iter().map(|&i| column_at(i, m)).collect(),
            })
        });
        out
    });
    let mut all: Vec<Biword> = chunks.into_iter().flatten().collect();
    // Stable: lexicographic order survives inside each size.
    all.sort_by_key(Biword::size);
    if let Some(last) = all.last() {
        assert!(
            last.size() <= m as usize * max_lis,
            "biword larger than m * max_lis"
        );
    }
    all
}

/// Number of biwords [`enumerate_biwords`] would return, without building them.
pub fn count_biwords(m: u32, max_lis: usize, strategy: Strategy) -> ExactCount {
    strategy
        .map(first_columns(m, max_lis), |first| {
            let mut n = 0u64;
            walk_subtree(m, max_lis, first, &mut |_: &[u32]| n += 1);
            n
        })
        .into_iter()
        .map(ExactCount::from)
        .sum()
}
