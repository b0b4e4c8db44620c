//! Semistandard Young tableaux and their exhaustive enumeration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::Letter;

/// A filling of `shape` by letters `1..=m` with weakly increasing rows and
/// strictly increasing columns. The alphabet bound is stored with the tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemistandardTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<Letter>>,
    pub m: u32,
}

impl SemistandardTableau {
    pub fn empty(m: u32) -> Self {
        SemistandardTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
            m,
        }
    }

    /// Builds a tableau from rows, deriving the shape and checking validity.
    pub fn from_rows(rows: Vec<Vec<Letter>>, m: u32) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let t = SemistandardTableau { shape, rows, m };
        if !t.rows_match_shape() {
            return Err(Error::RowsDoNotMatchShape {
                shape: t.shape.parts().to_vec(),
            });
        }
        if !is_valid_ssyt(&t) {
            return Err(Error::NotSemistandard { m });
        }
        Ok(t)
    }

    fn rows_match_shape(&self) -> bool {
        self.rows.len() == self.shape.len()
            && self
                .rows
                .iter()
                .zip(self.shape.parts())
                .all(|(r, &len)| r.len() == len as usize)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

/// Checks that rows match the shape, rows weakly increase, columns strictly
/// increase and every letter lies in `1..=m`.
pub fn is_valid_ssyt(t: &SemistandardTableau) -> bool {
    if !t.rows_match_shape() {
        return false;
    }
    for (r, row) in t.rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if x < 1 || x > t.m {
                return false;
            }
            if c > 0 && row[c - 1] > x {
                return false;
            }
            if r > 0 && t.rows[r - 1][c] >= x {
                return false;
            }
        }
    }
    true
}

/// Every semistandard tableau of `shape` over `1..=m`, in row-major
/// lexicographic order of entries.
pub fn enumerate_ssyt(shape: &Partition, m: u32) -> Vec<SemistandardTableau> {
    let mut out = Vec::new();
    if shape.len() > m as usize {
        return out;
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    backtrack(shape, m, &cells, 0, &mut rows, &mut out);
    out
}

fn backtrack(
    shape: &Partition,
    m: u32,
    cells: &[(usize, usize)],
    idx: usize,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<SemistandardTableau>,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        out.push(SemistandardTableau {
            shape: shape.clone(),
            rows: rows.clone(),
            m,
        });
        return;
    };
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    // Row r needs room for the strictly increasing column below it:
    // the cell at depth d below must hold at most m - d.
    let below = shape
        .parts()
        .iter()
        .skip(r + 1)
        .take_while(|&&len| len as usize > c)
        .count() as u32;
    let hi = m.saturating_sub(below);
    for x in left.max(above)..=hi {
        rows[r][c] = x;
        backtrack(shape, m, cells, idx + 1, rows, out);
    }
    rows[r][c] = 0;
}
