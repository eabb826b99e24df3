use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Young diagram stored as weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Trailing zero rows are dropped; anything else out of order is an error.
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        let mut rows = rows;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidLabel(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(YoungDiagram { rows })
    }

    /// Diagram with the given column heights (any order is accepted).
    pub fn from_columns(columns: &[u32]) -> Self {
        let mut cols: Vec<u32> = columns.iter().copied().filter(|&c| c > 0).collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { rows: transpose(&cols) }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `i` (1-based), zero past the end.
    pub fn row(&self, i: u32) -> u32 {
        self.rows.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn columns(&self) -> Vec<u32> {
        transpose(&self.rows)
    }

    /// Height of column `k` (1-based), zero past the end.
    pub fn column(&self, k: u32) -> u32 {
        self.rows.iter().filter(|&&r| r >= k).count() as u32
    }

    pub fn conjugate(&self) -> Self {
        YoungDiagram { rows: self.columns() }
    }

    /// All diagrams of exactly `size` boxes with at most `max_rows` rows, in
    /// reverse lexicographic order of rows.
    pub fn all_of_size(size: u32, max_rows: u32) -> Vec<YoungDiagram> {
        fn go(rem: u32, cap: u32, rows_left: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if rem == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for r in (1..=cap.min(rem)).rev() {
                cur.push(r);
                go(rem - r, r, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_rows, &mut Vec::new(), &mut out);
        out
    }

    /// All diagrams of at most `max_size` boxes and at most `max_rows` rows.
    pub fn all_up_to(max_size: u32, max_rows: u32) -> Vec<YoungDiagram> {
        (0..=max_size).flat_map(|s| Self::all_of_size(s, max_rows)).collect()
    }
}

fn transpose(rows: &[u32]) -> Vec<u32> {
    let width = rows.first().copied().unwrap_or(0);
    (1..=width).map(|k| rows.iter().filter(|&&r| r >= k).count() as u32).collect()
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(rows: Vec<u32>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(y: YoungDiagram) -> Self {
        y.rows
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Replaces column heights `r_1 ≥ … ≥ r_k` by `N − r_k ≥ … ≥ N − r_1`;
/// the diagram of the conjugate `U(N)` representation up to a power of det.
pub fn conjugate_relative(y: &YoungDiagram, n: u32) -> Result<YoungDiagram> {
    let cols = y.columns();
    if let Some(&c) = cols.first() {
        if c > n {
            return Err(Error::InvalidLabel(format!("{y} has a column of height {c} > N = {n}")));
        }
    }
    let flipped: Vec<u32> = cols.iter().rev().map(|&c| n - c).collect();
    Ok(YoungDiagram::from_columns(&flipped))
}

/// Diagrams obtained from `y` by adding one box.
pub fn pieri_add_box(y: &YoungDiagram) -> BTreeSet<YoungDiagram> {
    let mut out = BTreeSet::new();
    let rows = y.rows();
    for i in 0..=rows.len() {
        let cur = rows.get(i).copied().unwrap_or(0);
        let above = if i == 0 { u32::MAX } else { rows[i - 1] };
        if cur < above {
            let mut r = rows.to_vec();
            if i == r.len() {
                r.push(1);
            } else {
                r[i] += 1;
            }
            out.insert(YoungDiagram { rows: r });
        }
    }
    out
}

/// Diagrams obtained from `y` by adding two boxes, no two in one column.
pub fn pieri_add_two_boxes_row(y: &YoungDiagram) -> BTreeSet<YoungDiagram> {
    let mut out = BTreeSet::new();
    for once in pieri_add_box(y) {
        for twice in pieri_add_box(&once) {
            if is_horizontal_strip(y, &twice) {
                out.insert(twice);
            }
        }
    }
    out
}

/// `outer / inner` has at most one box per column.
fn is_horizontal_strip(inner: &YoungDiagram, outer: &YoungDiagram) -> bool {
    let n = outer.num_rows().max(inner.num_rows());
    (1..=n).all(|i| {
        let o = outer.row(i);
        o >= inner.row(i) && (i == 1 || o <= inner.row(i - 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert_eq!(yd(&[2, 1, 0]), yd(&[2, 1]));
        assert_eq!(yd(&[3, 1]).columns(), vec![2, 1, 1]);
        assert_eq!(YoungDiagram::from_columns(&[1, 2]), yd(&[2, 1]));
    }

    #[test]
    fn conjugate_relative_examples() {
        assert_eq!(conjugate_relative(&YoungDiagram::empty(), 4).unwrap(), YoungDiagram::empty());
        assert_eq!(conjugate_relative(&yd(&[1]), 3).unwrap(), yd(&[1, 1]));
        assert_eq!(conjugate_relative(&yd(&[2, 1]), 2).unwrap(), yd(&[1]));
        assert!(conjugate_relative(&yd(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn pieri_examples() {
        let one: BTreeSet<_> = [yd(&[2]), yd(&[1, 1])].into_iter().collect();
        assert_eq!(pieri_add_box(&yd(&[1])), one);
        let two: BTreeSet<_> = [yd(&[2])].into_iter().collect();
        assert_eq!(pieri_add_two_boxes_row(&YoungDiagram::empty()), two);
        let three: BTreeSet<_> = [yd(&[3]), yd(&[2, 1])].into_iter().collect();
        assert_eq!(pieri_add_two_boxes_row(&yd(&[1])), three);
    }

    #[test]
    fn enumeration_counts() {
        // Partition numbers 1, 1, 2, 3, 5, 7.
        let counts: Vec<usize> = (0..6).map(|s| YoungDiagram::all_of_size(s, 10).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7]);
        assert_eq!(YoungDiagram::all_of_size(4, 2).len(), 3);
    }
}
