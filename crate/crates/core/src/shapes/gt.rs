use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Partition, ShapeError};

/// Column numbers lacking a top-boundary hydrogen: `{λ_i + n + 1 - i}`, increasing.
///
/// This is also the first row of every Gelfand-Tsetlin pattern attached to `λ`.
pub fn top_row(lambda: &Partition) -> Vec<u32> {
    let n = lambda.n() as u32;
    let mut row: Vec<u32> = (1..=n)
        .map(|i| lambda.part(i as usize) + n + 1 - i)
        .collect();
    row.reverse();
    row
}

/// A strict Gelfand-Tsetlin pattern.
///
/// Row `0` is the top row with `n` entries; row `r` has `n - r` entries. Rows
/// interlace, `t[r][j] <= t[r+1][j] <= t[r][j+1]`, and every row is strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct GtPattern {
    rows: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        let n = rows.len();
        let bad = |why: &str| ShapeError::InvalidPattern {
            rows: rows.clone(),
            why: why.to_string(),
        };
        if n == 0 {
            return Err(bad("no rows"));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n - r {
                return Err(bad("row lengths must be n, n-1, .., 1"));
            }
            if row.contains(&0) {
                return Err(bad("entries must be positive"));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad("rows must be strictly increasing"));
            }
        }
        for r in 0..n - 1 {
            let (upper, lower) = (&rows[r], &rows[r + 1]);
            for (j, &t) in lower.iter().enumerate() {
                if t < upper[j] || t > upper[j + 1] {
                    return Err(bad("rows do not interlace"));
                }
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn top(&self) -> &[u32] {
        &self.rows[0]
    }

    /// Rightmost entry of row `r` (0-based).
    pub fn rightmost(&self, r: usize) -> u32 {
        *self.rows[r].last().expect("rows are nonempty")
    }

    /// The partition whose [`top_row`] is this pattern's first row.
    pub fn partition(&self) -> Partition {
        let n = self.n();
        let top = self.top();
        let parts = (1..=n).map(|i| top[n - i] - (n + 1 - i) as u32).collect();
        Partition::new(parts).expect("a strictly increasing positive row gives a partition")
    }
}

impl TryFrom<Vec<Vec<u32>>> for GtPattern {
    type Error = ShapeError;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        GtPattern::new(rows)
    }
}

impl From<GtPattern> for Vec<Vec<u32>> {
    fn from(g: GtPattern) -> Self {
        g.rows
    }
}

/// Triangular layout, each row indented by half a cell.
impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1);
        for (r, row) in self.rows.iter().enumerate() {
            let indent = " ".repeat(r * (width + 1) / 2);
            let cells: Vec<String> = row.iter().map(|t| format!("{t:>width$}")).collect();
            writeln!(f, "{indent}{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Every strict pattern whose first row is `top_row(λ)`, in lexicographic
/// order of the flattened rows.
pub fn enumerate_gt(lambda: &Partition) -> Vec<GtPattern> {
    let n = lambda.n();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows = vec![top_row(lambda)];
    extend_rows(n, &mut rows, &mut out);
    out
}

fn extend_rows(n: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<GtPattern>) {
    if rows.len() == n {
        out.push(GtPattern { rows: rows.clone() });
        return;
    }
    let upper = rows.last().expect("at least the top row").clone();
    let mut next = Vec::with_capacity(upper.len() - 1);
    fill_row(&upper, &mut next, n, rows, out);
}

fn fill_row(
    upper: &[u32],
    next: &mut Vec<u32>,
    n: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<GtPattern>,
) {
    let j = next.len();
    if j == upper.len() - 1 {
        rows.push(next.clone());
        extend_rows(n, rows, out);
        rows.pop();
        return;
    }
    let lo = match next.last() {
        Some(&prev) => upper[j].max(prev + 1),
        None => upper[j],
    };
    for t in lo..=upper[j + 1] {
        next.push(t);
        fill_row(upper, next, n, rows, out);
        next.pop();
    }
}
