use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BoundarySpec, Dir, LatticeError, VertexConfig};
use crate::shapes::GtPattern;

/// One admissible state of the ice model.
///
/// Constructing a state checks edge consistency, the left, right and bottom
/// boundaries, and that exactly `n` top edges are empty. The top gaps
/// themselves are read off the grid (see [`IceState::boundary`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Wire", into = "Wire")]
pub struct IceState {
    grid: Vec<Vec<VertexConfig>>,
}

impl IceState {
    pub fn new(grid: Vec<Vec<VertexConfig>>) -> Result<Self, LatticeError> {
        let n = grid.len();
        let m = grid.first().map_or(0, Vec::len);
        if n == 0 || m == 0 || grid.iter().any(|r| r.len() != m) {
            return Err(LatticeError::Ragged);
        }
        for (i, row) in grid.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                let at = |why| LatticeError::Inconsistent {
                    row: i + 1,
                    col: j + 1,
                    why,
                };
                if j + 1 < m && c.has(Dir::E) == row[j + 1].has(Dir::W) {
                    return Err(at("horizontal edge to the east needs exactly one bond"));
                }
                if i + 1 < n && c.has(Dir::S) == grid[i + 1][j].has(Dir::N) {
                    return Err(at("vertical edge to the south needs exactly one bond"));
                }
            }
            if !row[0].has(Dir::W) || !row[m - 1].has(Dir::E) {
                return Err(LatticeError::Boundary(format!(
                    "row {} must be bonded to both side hydrogens",
                    i + 1
                )));
            }
        }
        if grid[n - 1].iter().any(|c| c.has(Dir::S)) {
            return Err(LatticeError::Boundary(
                "bottom edge carries no hydrogens".into(),
            ));
        }
        let gaps = grid[0].iter().filter(|c| !c.has(Dir::N)).count();
        if gaps != n {
            return Err(LatticeError::Boundary(format!(
                "expected {n} empty top edges, found {gaps}"
            )));
        }
        Ok(IceState { grid })
    }

    pub fn n(&self) -> usize {
        self.grid.len()
    }

    pub fn m(&self) -> usize {
        self.grid[0].len()
    }

    pub fn grid(&self) -> &[Vec<VertexConfig>] {
        &self.grid
    }

    /// Configuration at 1-based row `i`, column `j`.
    pub fn config(&self, i: usize, j: usize) -> VertexConfig {
        self.grid[i - 1][j - 1]
    }

    pub fn boundary(&self) -> BoundarySpec {
        BoundarySpec {
            n: self.n(),
            m: self.m(),
            top_gaps: self.grid[0]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.has(Dir::N))
                .map(|(j, _)| j as u32 + 1)
                .collect(),
        }
    }

    /// ASCII drawing: `O` for oxygens, `*` for a hydrogen drawn next to the
    /// oxygen it is bonded to, `|` for the unbonded half of a vertical edge.
    pub fn render(&self) -> String {
        let (n, m) = (self.n(), self.m());
        let width = 4 * m + 1;
        let col = |j: usize| 2 + 4 * j;
        let mut lines = Vec::new();
        let vertical = |pick: &dyn Fn(usize) -> Option<char>| {
            let mut line = vec![' '; width];
            for j in 0..m {
                if let Some(ch) = pick(j) {
                    line[col(j)] = ch;
                }
            }
            line.into_iter().collect::<String>().trim_end().to_string()
        };
        lines.push(vertical(&|j| self.grid[0][j].has(Dir::N).then_some('*')));
        for i in 0..n {
            let row = &self.grid[i];
            let mut line = String::from(" *");
            for (j, c) in row.iter().enumerate() {
                line.push('O');
                if j + 1 < m {
                    line.push_str(if c.has(Dir::E) { "*  " } else { "  *" });
                }
            }
            line.push('*');
            lines.push(line);
            if i + 1 < n {
                let below = &self.grid[i + 1];
                lines.push(vertical(&|j| {
                    Some(if row[j].has(Dir::S) { '*' } else { '|' })
                }));
                lines.push(vertical(&|j| {
                    Some(if below[j].has(Dir::N) { '*' } else { '|' })
                }));
            }
        }
        lines.join("\n") + "\n"
    }
}

impl fmt::Display for IceState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Reads the pattern off a state: row 1 is the set of top gaps; row `i > 1`
/// lists the columns whose vertical hydrogen between rows `i-1` and `i` is
/// bonded to the oxygen above it.
pub fn state_to_gt(s: &IceState) -> Result<GtPattern, LatticeError> {
    let mut rows = vec![s.boundary().top_gaps];
    for row in &s.grid[..s.n() - 1] {
        rows.push(
            row.iter()
                .enumerate()
                .filter(|(_, c)| c.has(Dir::S))
                .map(|(j, _)| j as u32 + 1)
                .collect(),
        );
    }
    Ok(GtPattern::new(rows)?)
}

/// Inverse of [`state_to_gt`] on a grid with `m` columns.
///
/// Vertical hydrogens are placed from the pattern; each row is then completed
/// left to right, bonding the east hydrogen whenever the oxygen still lacks a bond.
pub fn gt_to_state(g: &GtPattern, m: usize) -> Result<IceState, LatticeError> {
    let n = g.n();
    if (g.rightmost(0) as usize) > m {
        return Err(LatticeError::TooFewColumns {
            lambda: g.partition(),
            m,
        });
    }
    let contains = |row: &[u32], j: usize| row.binary_search(&(j as u32)).is_ok();
    let mut grid = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(m);
        // The hydrogen on the west edge of column 1 is the boundary one.
        let mut west = true;
        for j in 1..=m {
            let north = if i == 0 {
                !contains(g.top(), j)
            } else {
                !contains(&g.rows()[i], j)
            };
            let south = i + 1 < n && contains(&g.rows()[i + 1], j);
            let bonds = u8::from(north) + u8::from(south) + u8::from(west);
            let east = match bonds {
                1 => true,
                2 => false,
                _ => {
                    return Err(LatticeError::Propagation(format!(
                        "oxygen at row {}, column {j} would have {bonds} bonds",
                        i + 1
                    )))
                }
            };
            if j == m && !east {
                return Err(LatticeError::Propagation(format!(
                    "row {} cannot bond the east boundary hydrogen",
                    i + 1
                )));
            }
            row.push(VertexConfig::from_bonds(north, south, east, west).expect("two bonds"));
            west = !east;
        }
        grid.push(row);
    }
    IceState::new(grid)
}

#[derive(Serialize, Deserialize)]
struct Wire {
    n: usize,
    m: usize,
    grid: Vec<Vec<String>>,
}

impl From<IceState> for Wire {
    fn from(s: IceState) -> Self {
        Wire {
            n: s.n(),
            m: s.m(),
            grid: s
                .grid
                .iter()
                .map(|r| r.iter().map(|c| c.name().to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<Wire> for IceState {
    type Error = LatticeError;
    fn try_from(w: Wire) -> Result<Self, LatticeError> {
        let grid = w
            .grid
            .iter()
            .map(|r| r.iter().map(|c| c.parse()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let s = IceState::new(grid)?;
        if s.n() != w.n || s.m() != w.m {
            return Err(LatticeError::Ragged);
        }
        Ok(s)
    }
}
