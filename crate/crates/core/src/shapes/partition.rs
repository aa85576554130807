use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ShapeError;

/// A partition with an explicit number of parts.
///
/// Trailing zeros are significant: `(1)` and `(1,0)` are different objects,
/// because the partition function and the factorial Schur function both
/// depend on the number of row variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// `(0, .., 0)` with `n` parts.
    pub fn zeros(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    /// Number of parts, zeros included.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `λ_1`, or 0 for the partition with no parts.
    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ρ = (n-1, .., 1, 0)`.
    pub fn rho(n: usize) -> Vec<u32> {
        (0..n as u32).rev().collect()
    }

    /// `δ = (0, 1, .., n-1)`.
    pub fn delta(n: usize) -> Vec<u32> {
        (0..n as u32).collect()
    }

    /// `λ + ρ`, strictly decreasing.
    pub fn plus_rho(&self) -> Partition {
        let n = self.n() as u32;
        Partition {
            parts: (0..n).map(|i| self.parts[i as usize] + n - 1 - i).collect(),
        }
    }

    /// The transposed diagram; it has `λ_1` parts.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Appends zeros up to `n` parts. Fails if a nonzero part would be dropped.
    pub fn padded(&self, n: usize) -> Result<Partition, ShapeError> {
        if self.parts.iter().skip(n).any(|&p| p > 0) {
            return Err(ShapeError::TooManyParts {
                partition: self.clone(),
                n,
            });
        }
        let mut parts: Vec<u32> = self.parts.iter().take(n).copied().collect();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// Diagram containment `self ⊆ other`, ignoring trailing zeros.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        let len = self.n().max(other.n());
        (1..=len).all(|i| self.part(i) <= other.part(i))
    }

    /// Cells `(i, j)` of the diagram, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// All partitions with exactly `n` parts, each at most `max_part`, in
    /// lexicographic order of their part vectors.
    pub fn in_box(n: usize, max_part: u32) -> Vec<Partition> {
        fn go(n: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in 0..=max {
                prefix.push(p);
                go(n, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions with `n` parts and size at most `d`, ordered by size
    /// and then lexicographically.
    pub fn with_size_at_most(n: usize, d: u32) -> Vec<Partition> {
        let mut out = Partition::in_box(n, d);
        out.retain(|p| p.size() <= d);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = ShapeError;
    fn try_from(parts: Vec<u32>) -> Result<Self, ShapeError> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses comma-separated parts, e.g. `5,4,1`. Surrounding parentheses are accepted.
impl FromStr for Partition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition { parts: Vec::new() });
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| ShapeError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[0]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[5, 4, 1]).conjugate(), p(&[3, 2, 2, 2, 1]));
    }

    #[test]
    fn derived_vectors() {
        let l = p(&[5, 4, 1]);
        assert_eq!(Partition::rho(3), vec![2, 1, 0]);
        assert_eq!(Partition::delta(3), vec![0, 1, 2]);
        assert_eq!(l.plus_rho(), p(&[7, 5, 1]));
        assert_eq!(l.size(), 10);
        assert_eq!(l.part(4), 0);
        assert_eq!(l.cells().count(), 10);
    }

    #[test]
    fn validation_and_parsing() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(ShapeError::NotWeaklyDecreasing(_))
        ));
        assert_eq!("5,4,1".parse::<Partition>().unwrap(), p(&[5, 4, 1]));
        assert_eq!("(1,0)".parse::<Partition>().unwrap(), p(&[1, 0]));
        assert!("2,foo".parse::<Partition>().is_err());
        assert!(p(&[2, 1]).padded(1).is_err());
        assert_eq!(p(&[2, 0]).padded(1).unwrap(), p(&[2]));
    }

    #[test]
    fn containment_ignores_trailing_zeros() {
        assert!(p(&[1]).is_contained_in(&p(&[1, 0])));
        assert!(p(&[1, 1]).is_contained_in(&p(&[2, 1])));
        assert!(!p(&[1, 1]).is_contained_in(&p(&[2])));
    }

    #[test]
    fn box_enumeration() {
        // Partitions in a 3x3 box: binomial(6, 3).
        assert_eq!(Partition::in_box(3, 3).len(), 20);
        let by_size = Partition::with_size_at_most(2, 2);
        let shown: Vec<String> = by_size.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["(0,0)", "(1,0)", "(1,1)", "(2,0)"]);
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(mut parts in proptest::collection::vec(0u32..6, 0..6)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let l = Partition::new(parts).unwrap();
            prop_assert_eq!(l.conjugate().conjugate().padded(l.n()).unwrap(), l);
        }
    }
}
