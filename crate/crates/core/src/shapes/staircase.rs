use std::fmt;

use serde::{Deserialize, Serialize};

use super::{top_row, GtPattern, Partition, ShapeError};

/// A staircase: a semistandard filling of the conjugate of
/// `(N, N-1, .., N-n)` with entries in `1..=N`, whose diagonals weakly
/// decrease towards the south-east in French notation. Here `N = λ_1 + n`.
///
/// Column `c` (0-based) holds `N - c` distinct entries and is stored as a
/// sorted set; in French notation it is read bottom to top. Cell `(c, r)` is
/// `columns[c][r]` with `r = 0` the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Staircase {
    columns: Vec<Vec<u32>>,
}

impl Staircase {
    pub fn new(columns: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        let bad = |why: &str| ShapeError::InvalidStaircase {
            columns: columns.clone(),
            why: why.to_string(),
        };
        if columns.len() < 2 {
            return Err(bad("a staircase has n + 1 >= 2 columns"));
        }
        let top = columns[0].len();
        for (c, col) in columns.iter().enumerate() {
            if col.len() + c != top {
                return Err(bad("column c must hold N - c entries"));
            }
            if col.iter().any(|&t| t == 0 || t as usize > top) {
                return Err(bad("entries must lie in 1..=N"));
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad("columns must strictly increase upwards"));
            }
        }
        for pair in columns.windows(2) {
            let (left, right) = (&pair[0], &pair[1]);
            if right.iter().zip(left).any(|(r, l)| r < l) {
                return Err(bad("rows must weakly increase to the right"));
            }
            // Cell (c+1, r) sits south-east of (c, r+1).
            if right.iter().zip(&left[1..]).any(|(se, nw)| se > nw) {
                return Err(bad("diagonals must weakly decrease to the south-east"));
            }
        }
        Ok(Staircase { columns })
    }

    /// `N = λ_1 + n`.
    pub fn size(&self) -> u32 {
        self.columns[0].len() as u32
    }

    pub fn n(&self) -> usize {
        self.columns.len() - 1
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// The integers in `1..=N` missing from the rightmost column.
    pub fn missing_from_last(&self) -> Vec<u32> {
        complement(
            self.columns.last().expect("at least two columns"),
            self.size(),
        )
    }

    /// The partition `λ` whose [`top_row`] is missing from the rightmost column.
    pub fn partition(&self) -> Partition {
        let missing = self.missing_from_last();
        let n = missing.len();
        let parts = (1..=n)
            .map(|i| missing[n - i] - (n + 1 - i) as u32)
            .collect();
        Partition::new(parts).expect("strictly increasing missing set gives a partition")
    }
}

fn complement(set: &[u32], size: u32) -> Vec<u32> {
    (1..=size)
        .filter(|t| set.binary_search(t).is_err())
        .collect()
}

impl TryFrom<Vec<Vec<u32>>> for Staircase {
    type Error = ShapeError;
    fn try_from(columns: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        Staircase::new(columns)
    }
}

impl From<Staircase> for Vec<Vec<u32>> {
    fn from(s: Staircase) -> Self {
        s.columns
    }
}

/// French notation: bottom row printed last.
impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.size().to_string().len();
        for r in (0..self.size() as usize).rev() {
            let cells: Vec<String> = self
                .columns
                .iter()
                .filter_map(|col| col.get(r))
                .map(|t| format!("{t:>width$}"))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Column `j + 1` is the complement in `1..=N` of Gelfand-Tsetlin row `n + 1 - j`
/// (1-based rows; row `n + 1` is empty).
pub fn gt_to_staircase(g: &GtPattern) -> Staircase {
    let n = g.n();
    let size = g.rightmost(0);
    let mut columns = vec![(1..=size).collect::<Vec<u32>>()];
    for j in 1..=n {
        columns.push(complement(&g.rows()[n - j], size));
    }
    Staircase::new(columns).expect("interlacing patterns map to valid staircases")
}

pub fn staircase_to_gt(s: &Staircase) -> Result<GtPattern, ShapeError> {
    let n = s.n();
    let rows = (0..n)
        .map(|r| complement(&s.columns()[n - r], s.size()))
        .collect();
    GtPattern::new(rows)
}

/// Every staircase whose rightmost column misses exactly `top_row(λ)`,
/// found by a direct search over columns without going through patterns.
pub fn enumerate_staircases(lambda: &Partition) -> Vec<Staircase> {
    let n = lambda.n();
    if n == 0 {
        return Vec::new();
    }
    let size = lambda.largest() + n as u32;
    let last = complement(&top_row(lambda), size);
    let mut columns = vec![(1..=size).collect::<Vec<u32>>()];
    let mut out = Vec::new();
    search_columns(n, size, &last, &mut columns, &mut out);
    out
}

fn search_columns(
    n: usize,
    size: u32,
    last: &[u32],
    columns: &mut Vec<Vec<u32>>,
    out: &mut Vec<Staircase>,
) {
    let c = columns.len();
    if c == n + 1 {
        if let Ok(s) = Staircase::new(columns.clone()) {
            out.push(s);
        }
        return;
    }
    if c == n {
        columns.push(last.to_vec());
        search_columns(n, size, last, columns, out);
        columns.pop();
        return;
    }
    let len = size as usize - c;
    for subset in subsets(size, len) {
        let left = &columns[c - 1];
        let rows_ok = subset.iter().zip(left).all(|(r, l)| r >= l);
        let diag_ok = subset.iter().zip(&left[1..]).all(|(se, nw)| se <= nw);
        if rows_ok && diag_ok {
            columns.push(subset);
            search_columns(n, size, last, columns, out);
            columns.pop();
        }
    }
}

/// All `k`-subsets of `1..=size`, each sorted, in lexicographic order.
fn subsets(size: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, size: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..=size {
            cur.push(t);
            go(t + 1, size, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, size, k, &mut Vec::new(), &mut out);
    out
}
