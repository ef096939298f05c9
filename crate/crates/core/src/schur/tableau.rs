use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row lengths {rows:?} do not match shape {shape}")]
    ShapeMismatch { shape: Partition, rows: Vec<usize> },
    #[error("row {row} is not weakly increasing")]
    RowNotWeak { row: usize },
    #[error("column {col} is not strictly increasing")]
    ColumnNotStrict { col: usize },
    #[error("entry {entry} outside {min}..={max}")]
    EntryOutOfRange { entry: usize, min: usize, max: usize },
}

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase. Entries are positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lens.clone())
            .map_err(|_| TableauError::ShapeMismatch { shape: Partition::empty(), rows: lens })?;
        Self::with_shape(shape, rows)
    }

    /// Builds a tableau whose row lengths must equal `shape` (trailing zero
    /// rows allowed on either side).
    pub fn with_shape(shape: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let shape = shape.trimmed();
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(TableauError::ShapeMismatch { shape, rows: lens });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(TableauError::RowNotWeak { row: r });
            }
            if let Some(&e) = row.iter().find(|&&e| e == 0) {
                return Err(TableauError::EntryOutOfRange { entry: e, min: 1, max: usize::MAX });
            }
        }
        for r in 1..rows.len() {
            for (c, &v) in rows[r].iter().enumerate() {
                if rows[r - 1][c] >= v {
                    return Err(TableauError::ColumnNotStrict { col: c });
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau { shape: Partition::empty(), rows: Vec::new() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn max_entry(&self) -> usize {
        self.entries().max().unwrap_or(0)
    }

    pub fn min_entry(&self) -> usize {
        self.entries().min().unwrap_or(0)
    }

    /// `content[v-1]` = number of occurrences of `v`, for `v` in `1..=max`.
    pub fn content(&self, max: usize) -> Vec<usize> {
        let mut out = vec![0; max];
        for e in self.entries() {
            out[e - 1] += 1;
        }
        out
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

/// Streams every semistandard tableau of `shape` with entries in
/// `min..=max`, in row-major lexicographic order.
pub fn enumerate_ssyt(shape: &Partition, min: usize, max: usize) -> SsytIter {
    SsytIter::new(shape, min, max)
}

#[derive(Debug, Clone)]
pub struct SsytIter {
    shape: Partition,
    cells: Vec<(usize, usize)>,
    col_heights: Vec<usize>,
    min: usize,
    max: usize,
    grid: Vec<Vec<usize>>,
    done: bool,
}

impl SsytIter {
    fn new(shape: &Partition, min: usize, max: usize) -> Self {
        let shape = shape.trimmed();
        let cells: Vec<(usize, usize)> =
            shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
        let col_heights = shape.conjugate().parts().to_vec();
        let grid = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut it = SsytIter { shape, cells, col_heights, min: min.max(1), max, grid, done: false };
        it.done = !it.fill_from(0);
        it
    }

    fn lower(&self, r: usize, c: usize) -> usize {
        let mut lo = self.min + r;
        if c > 0 {
            lo = lo.max(self.grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(self.grid[r - 1][c] + 1);
        }
        lo
    }

    fn upper(&self, r: usize, c: usize) -> Option<usize> {
        self.max.checked_sub(self.col_heights[c] - 1 - r)
    }

    /// Minimal completion of cells `from..`; false if infeasible.
    fn fill_from(&mut self, from: usize) -> bool {
        for idx in from..self.cells.len() {
            let (r, c) = self.cells[idx];
            let lo = self.lower(r, c);
            match self.upper(r, c) {
                Some(hi) if lo <= hi => self.grid[r][c] = lo,
                _ => return false,
            }
        }
        true
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let out = Tableau { shape: self.shape.clone(), rows: self.grid.clone() };
        let mut advanced = false;
        for idx in (0..self.cells.len()).rev() {
            let (r, c) = self.cells[idx];
            if self.upper(r, c).is_some_and(|hi| self.grid[r][c] < hi) {
                self.grid[r][c] += 1;
                advanced = self.fill_from(idx + 1);
                debug_assert!(advanced);
                break;
            }
        }
        self.done = !advanced;
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Brute force: all fillings with entries in min..=max, filtered.
    fn brute(shape: &Partition, min: usize, max: usize) -> Vec<Tableau> {
        let cells: usize = shape.weight();
        let span = max + 1 - min;
        let total = span.pow(cells as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut rows = Vec::new();
            for &len in shape.trimmed().parts() {
                let mut row = Vec::new();
                for _ in 0..len {
                    row.push(min + code % span);
                    code /= span;
                }
                rows.push(row);
            }
            if let Ok(t) = Tableau::with_shape(shape.clone(), rows) {
                out.push(t);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 1], vec![2]]).is_ok());
        assert_eq!(Tableau::new(vec![vec![2, 1]]), Err(TableauError::RowNotWeak { row: 0 }));
        assert_eq!(Tableau::new(vec![vec![1, 2], vec![1]]), Err(TableauError::ColumnNotStrict { col: 0 }));
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::with_shape(part(&[2, 1, 0]), vec![vec![1, 2], vec![3]]).is_ok());
    }

    #[test]
    fn shape_21_in_3_letters() {
        let all: Vec<_> = enumerate_ssyt(&part(&[2, 1]), 1, 3).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0].rows(), &[vec![1, 1], vec![2]]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn matches_brute_force() {
        for shape in [vec![], vec![1], vec![2, 1], vec![2, 2], vec![3, 1, 1], vec![2, 2, 1], vec![1, 1, 1, 1]] {
            let shape = part(&shape);
            for (min, max) in [(1, 1), (1, 2), (1, 3), (2, 4), (1, 4)] {
                let got: Vec<_> = enumerate_ssyt(&shape, min, max).collect();
                assert_eq!(got, brute(&shape, min, max), "{shape} {min}..={max}");
            }
        }
    }

    #[test]
    fn too_many_rows_is_empty() {
        assert_eq!(enumerate_ssyt(&part(&[1, 1, 1]), 1, 2).count(), 0);
        assert_eq!(enumerate_ssyt(&Partition::empty(), 1, 0).count(), 1);
    }
}
