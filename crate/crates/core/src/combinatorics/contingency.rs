use std::fmt;

use super::composition::{weak_compositions_of, WeakComposition};

/// A `k × ℓ` matrix of nonnegative integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContingencyTable {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl ContingencyTable {
    pub fn from_rows(rows: usize, cols: usize, cells: Vec<u32>) -> Self {
        assert_eq!(cells.len(), rows * cols, "cell count must be rows × cols");
        ContingencyTable { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.cols + j]
    }

    pub fn transpose(&self) -> ContingencyTable {
        let mut cells = Vec::with_capacity(self.cells.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                cells.push(self.get(i, j));
            }
        }
        ContingencyTable {
            rows: self.cols,
            cols: self.rows,
            cells,
        }
    }

    /// Column-major reading `(γ_{1,1}, γ_{2,1}, …, γ_{k,ℓ})`.
    pub fn column_major(&self) -> WeakComposition {
        WeakComposition::new(self.transpose().cells)
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }
}

impl fmt::Display for ContingencyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Lazy stream of all tables with row sums `alpha` and column sums `beta`,
/// in lexicographic order of the row-major reading.
pub fn contingency_tables(alpha: &WeakComposition, beta: &WeakComposition) -> ContingencyTables {
    ContingencyTables {
        row_rem: alpha.entries().to_vec(),
        col_rem: beta.entries().to_vec(),
        rows: alpha.len(),
        cols: beta.len(),
        cells: Vec::new(),
        state: if alpha.size() == beta.size() {
            State::Fresh
        } else {
            State::Done
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Iterator returned by [`contingency_tables`].
///
/// Cells are filled row by row; each cell ranges over the values that still
/// leave the remaining row and column budgets satisfiable, so backtracking
/// never hits a dead end.
#[derive(Clone, Debug)]
pub struct ContingencyTables {
    row_rem: Vec<u32>,
    col_rem: Vec<u32>,
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
    state: State,
}

impl ContingencyTables {
    fn bounds(&self, pos: usize) -> (u32, u32) {
        let (i, j) = (pos / self.cols, pos % self.cols);
        let later: u32 = self.col_rem[j + 1..].iter().sum();
        let hi = self.row_rem[i].min(self.col_rem[j]);
        let lo = self.row_rem[i].saturating_sub(later);
        (lo, hi)
    }

    fn push(&mut self, pos: usize, v: u32) {
        let (i, j) = (pos / self.cols, pos % self.cols);
        self.row_rem[i] -= v;
        self.col_rem[j] -= v;
        self.cells.push(v);
    }

    fn pop(&mut self) -> u32 {
        let pos = self.cells.len() - 1;
        let v = self.cells.pop().unwrap();
        let (i, j) = (pos / self.cols, pos % self.cols);
        self.row_rem[i] += v;
        self.col_rem[j] += v;
        v
    }

    fn fill_from(&mut self, start: usize) {
        for pos in start..self.rows * self.cols {
            let (lo, hi) = self.bounds(pos);
            debug_assert!(lo <= hi);
            self.push(pos, lo);
        }
    }

    fn current(&self) -> ContingencyTable {
        ContingencyTable::from_rows(self.rows, self.cols, self.cells.clone())
    }
}

impl Iterator for ContingencyTables {
    type Item = ContingencyTable;

    fn next(&mut self) -> Option<ContingencyTable> {
        match self.state {
            State::Done => None,
            State::Fresh => {
                self.state = State::Running;
                self.fill_from(0);
                Some(self.current())
            }
            State::Running => {
                while !self.cells.is_empty() {
                    let pos = self.cells.len() - 1;
                    let v = self.pop();
                    let (_, hi) = self.bounds(pos);
                    if v < hi {
                        self.push(pos, v + 1);
                        self.fill_from(pos + 1);
                        return Some(self.current());
                    }
                }
                self.state = State::Done;
                None
            }
        }
    }
}

/// All `k × ℓ` tables with row sums `gamma` and no column constraint,
/// in lexicographic order of the row-major reading.
pub fn row_sum_tables(gamma: &WeakComposition, l: usize) -> Vec<ContingencyTable> {
    let mut out = vec![Vec::new()];
    for &g in gamma.entries() {
        let rows = weak_compositions_of(g as usize, l);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                rows.iter().map(move |r| {
                    let mut p = prefix.clone();
                    p.extend_from_slice(r.entries());
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|cells| ContingencyTable::from_rows(gamma.len(), l, cells))
        .collect()
}
