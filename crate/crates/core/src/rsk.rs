//! Robinson–Schensted–Knuth correspondence between lexicographic biwords and
//! pairs of semistandard tableaux of equal shape.

use serde::{Deserialize, Serialize};

use crate::biwords::{Biword, Column};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{is_valid_ssyt, SemistandardTableau};
use crate::Letter;

/// Insertion tableau `p` and recording tableau `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauPair {
    pub p: SemistandardTableau,
    pub q: SemistandardTableau,
}

impl TableauPair {
    pub fn shape(&self) -> &Partition {
        &self.p.shape
    }

    pub fn validate(&self) -> Result<()> {
        if self.p.m != self.q.m {
            return Err(Error::AlphabetMismatch {
                p: self.p.m,
                q: self.q.m,
            });
        }
        if self.p.shape != self.q.shape {
            return Err(Error::ShapeMismatch {
                p: self.p.shape.parts().to_vec(),
                q: self.q.shape.parts().to_vec(),
            });
        }
        for t in [&self.p, &self.q] {
            if !is_valid_ssyt(t) {
                return Err(Error::NotSemistandard { m: t.m });
            }
        }
        Ok(())
    }
}

/// Row-inserts `v` into `rows`, returning the index of the row that grew.
/// The inserted letter bumps the leftmost entry strictly greater than it.
fn row_insert(rows: &mut Vec<Vec<Letter>>, mut v: Letter) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let k = row.partition_point(|&x| x <= v);
        if k == row.len() {
            row.push(v);
            return r;
        }
        std::mem::swap(&mut row[k], &mut v);
    }
    rows.push(vec![v]);
    rows.len() - 1
}

fn tableau(rows: Vec<Vec<Letter>>, m: u32) -> SemistandardTableau {
    let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
        .expect("insertion keeps rows weakly decreasing in length");
    SemistandardTableau { shape, rows, m }
}

/// Inserts the bottom row letter by letter and records the top row.
pub fn rsk_forward(a: &Biword) -> TableauPair {
    let mut p: Vec<Vec<Letter>> = Vec::new();
    let mut q: Vec<Vec<Letter>> = Vec::new();
    for &(u, v) in a.columns() {
        let r = row_insert(&mut p, v);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(u);
    }
    TableauPair {
        p: tableau(p, a.m()),
        q: tableau(q, a.m()),
    }
}

/// As [`rsk_forward`] for raw columns, rejecting columns that are out of the
/// alphabet or not in lexicographic order.
pub fn rsk_forward_columns(m: u32, columns: &[Column]) -> Result<TableauPair> {
    let a = Biword::new(m, columns.to_vec())?;
    Ok(rsk_forward(&a))
}

/// Undoes [`rsk_forward`]: repeatedly removes the largest letter of `q`
/// (rightmost among equal letters), reverse-bumps the entry at the same cell
/// out of `p`, and prepends the resulting column.
pub fn rsk_inverse(pair: &TableauPair) -> Result<Biword> {
    pair.validate()?;
    let m = pair.p.m;
    let mut p = pair.p.rows.clone();
    let mut q = pair.q.rows.clone();
    let mut columns: Vec<Column> = Vec::with_capacity(pair.p.size());

    while !q.is_empty() {
        // Cells holding the largest letter form a horizontal strip, so the
        // rightmost one ends its row and is a corner of the shape.
        let (r, u) = q
            .iter()
            .enumerate()
            .map(|(r, row)| (r, *row.last().expect("rows are nonempty")))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("q is nonempty");
        q[r].pop();
        let mut x = p[r].pop().expect("p and q share a shape");
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        for row in p[..r].iter_mut().rev() {
            // Rightmost entry strictly smaller than x.
            let k = row.partition_point(|&y| y < x) - 1;
            std::mem::swap(&mut row[k], &mut x);
        }
        columns.push((u, x));
    }
    columns.reverse();
    Biword::new(m, columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biwords::enumerate_biwords;
    use std::collections::BTreeMap;

    #[test]
    fn empty_roundtrip() {
        let pair = rsk_forward(&Biword::empty(2));
        assert!(pair.p.rows.is_empty() && pair.q.rows.is_empty());
        assert_eq!(rsk_inverse(&pair).unwrap(), Biword::empty(2));
    }

    #[test]
    fn small_forward_and_inverse() {
        let a = Biword::new(2, vec![(1, 1), (2, 2)]).unwrap();
        let pair = rsk_forward(&a);
        assert_eq!(pair.p.rows, vec![vec![1, 2]]);
        assert_eq!(pair.q.rows, vec![vec![1, 2]]);
        assert_eq!(rsk_inverse(&pair).unwrap(), a);
    }

    #[test]
    fn bumping_cascades() {
        // (abb; bab): b, then a bumps b, then b appends to row 0.
        let a = Biword::new(2, vec![(1, 2), (2, 1), (2, 2)]).unwrap();
        let pair = rsk_forward(&a);
        assert_eq!(pair.p.rows, vec![vec![1, 2], vec![2]]);
        assert_eq!(pair.q.rows, vec![vec![1, 2], vec![2]]);
        assert_eq!(rsk_inverse(&pair).unwrap(), a);
    }

    #[test]
    fn shape_multiplicities_for_two_letters() {
        let mut shapes: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for a in enumerate_biwords(2, 2) {
            *shapes
                .entry(rsk_forward(&a).shape().parts().to_vec())
                .or_default() += 1;
        }
        let expect: BTreeMap<Vec<u32>, usize> = [
            (vec![], 1),
            (vec![1], 4),
            (vec![2], 9),
            (vec![1, 1], 1),
            (vec![2, 1], 4),
            (vec![2, 2], 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(shapes, expect);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            rsk_forward_columns(2, &[(2, 1), (1, 1)]),
            Err(Error::NotLexicographic { .. })
        ));

        let p = SemistandardTableau::from_rows(vec![vec![1, 2]], 2).unwrap();
        let q = SemistandardTableau::from_rows(vec![vec![1], vec![2]], 2).unwrap();
        assert!(matches!(
            rsk_inverse(&TableauPair { p: p.clone(), q }),
            Err(Error::ShapeMismatch { .. })
        ));

        let bad = SemistandardTableau {
            shape: Partition::new(vec![2]).unwrap(),
            rows: vec![vec![2, 1]],
            m: 2,
        };
        assert!(matches!(
            rsk_inverse(&TableauPair { p, q: bad }),
            Err(Error::NotSemistandard { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let pair = rsk_forward(&Biword::new(2, vec![(1, 1), (2, 2)]).unwrap());
        assert_eq!(
            serde_json::to_string(&pair).unwrap(),
            r#"{"p":{"shape":[2],"rows":[[1,2]],"m":2},"q":{"shape":[2],"rows":[[1,2]],"m":2}}"#
        );
    }
}
