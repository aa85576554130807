use super::{gt_to_state, BoundarySpec, Dir, IceState, LatticeError, VertexConfig};
use crate::shapes::{enumerate_gt, Partition};

/// How [`enumerate_states`] finds the states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Map every strict Gelfand-Tsetlin pattern through [`gt_to_state`].
    ViaGt,
    /// Fill the grid vertex by vertex, checking every local constraint as it goes.
    Backtrack,
}

/// All states with the λ-boundary on `λ_1 + n` columns.
pub fn enumerate_states(lambda: &Partition, strategy: Strategy) -> Vec<IceState> {
    if lambda.n() == 0 {
        return Vec::new();
    }
    enumerate_states_in(&BoundarySpec::for_partition(lambda), strategy)
        .expect("the natural boundary always enumerates")
}

/// All states for an explicit boundary. `ViaGt` requires the top gaps to
/// come from a partition and the grid to be wide enough for them.
pub fn enumerate_states_in(
    spec: &BoundarySpec,
    strategy: Strategy,
) -> Result<Vec<IceState>, LatticeError> {
    match strategy {
        Strategy::ViaGt => {
            let lambda = partition_of_gaps(spec)?;
            enumerate_gt(&lambda)
                .iter()
                .map(|g| gt_to_state(g, spec.m))
                .collect()
        }
        Strategy::Backtrack => Ok(Backtracker::new(spec).run()),
    }
}

fn partition_of_gaps(spec: &BoundarySpec) -> Result<Partition, LatticeError> {
    let n = spec.top_gaps.len();
    if n != spec.n || spec.top_gaps.windows(2).any(|w| w[0] >= w[1]) || spec.top_gaps[0] == 0 {
        return Err(LatticeError::Boundary(format!(
            "top gaps {:?} do not describe a partition with {} parts",
            spec.top_gaps, spec.n
        )));
    }
    let parts = (1..=n)
        .map(|i| spec.top_gaps[n - i] - (n + 1 - i) as u32)
        .collect();
    Ok(Partition::new(parts)?)
}

struct Backtracker<'a> {
    spec: &'a BoundarySpec,
    grid: Vec<Vec<VertexConfig>>,
    out: Vec<IceState>,
}

impl<'a> Backtracker<'a> {
    fn new(spec: &'a BoundarySpec) -> Self {
        Backtracker {
            spec,
            grid: vec![Vec::with_capacity(spec.m); spec.n],
            out: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<IceState> {
        if self.spec.n > 0 && self.spec.m > 0 {
            self.place(0, 0);
        }
        self.out
    }

    fn place(&mut self, i: usize, j: usize) {
        let (n, m) = (self.spec.n, self.spec.m);
        if i == n {
            let state = IceState::new(self.grid.clone()).expect("local checks imply validity");
            self.out.push(state);
            return;
        }
        let (ni, nj) = if j + 1 == m { (i + 1, 0) } else { (i, j + 1) };
        for c in VertexConfig::ALL {
            if self.fits(c, i, j) {
                self.grid[i].push(c);
                self.place(ni, nj);
                self.grid[i].pop();
            }
        }
    }

    /// Checks `c` at (i, j) against its west and north neighbours and the boundary.
    fn fits(&self, c: VertexConfig, i: usize, j: usize) -> bool {
        let (n, m) = (self.spec.n, self.spec.m);
        let north_ok = if i == 0 {
            c.has(Dir::N) != self.spec.is_gap(j + 1)
        } else {
            c.has(Dir::N) != self.grid[i - 1][j].has(Dir::S)
        };
        let west_ok = if j == 0 {
            c.has(Dir::W)
        } else {
            c.has(Dir::W) != self.grid[i][j - 1].has(Dir::E)
        };
        let east_ok = j + 1 < m || c.has(Dir::E);
        let south_ok = i + 1 < n || !c.has(Dir::S);
        if !(north_ok && west_ok && east_ok && south_ok) {
            return false;
        }
        // Forward check. Counting bonds in a row gives N + S = m - 1, so every
        // complete state has exactly n - 1 - i south bonds in row i (0-based).
        let south_so_far =
            self.grid[i].iter().filter(|c| c.has(Dir::S)).count() + usize::from(c.has(Dir::S));
        let quota = n - 1 - i;
        if south_so_far > quota {
            return false;
        }
        let remaining = m - 1 - j;
        south_so_far + remaining >= quota
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use VertexConfig::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sorted(mut v: Vec<IceState>) -> Vec<IceState> {
        v.sort();
        v
    }

    #[test]
    fn examples() {
        let s = enumerate_states(&p(&[0]), Strategy::Backtrack);
        assert_eq!(s, vec![IceState::new(vec![vec![EW]]).unwrap()]);
        let s = enumerate_states(&p(&[1]), Strategy::Backtrack);
        assert_eq!(s, vec![IceState::new(vec![vec![NW, EW]]).unwrap()]);
        assert_eq!(
            enumerate_states(&p(&[0, 0, 0]), Strategy::Backtrack).len(),
            7
        );
        assert_eq!(enumerate_states(&p(&[0, 0, 0]), Strategy::ViaGt).len(), 7);
    }

    #[test]
    fn strategies_agree() {
        for n in 1..=3 {
            for l in Partition::in_box(n, 3) {
                assert_eq!(
                    sorted(enumerate_states(&l, Strategy::ViaGt)),
                    sorted(enumerate_states(&l, Strategy::Backtrack)),
                    "{l}"
                );
            }
        }
    }

    #[test]
    fn rejects_malformed_gaps() {
        let spec = BoundarySpec {
            n: 2,
            m: 3,
            top_gaps: vec![2],
        };
        assert!(enumerate_states_in(&spec, Strategy::ViaGt).is_err());
        assert!(enumerate_states_in(&spec, Strategy::Backtrack)
            .unwrap()
            .is_empty());
    }
}
