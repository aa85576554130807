use serde::{Deserialize, Serialize};

use super::{Partition, ShapeError};

/// A semistandard Young tableau in English notation: rows weakly increase to
/// the right, columns strictly increase downwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        let lengths = rows.iter().map(|r| r.len() as u32).collect();
        Partition::new(lengths).map_err(|_| ShapeError::InvalidTableau(rows.clone()))?;
        let ok = rows
            .iter()
            .all(|r| r.iter().all(|&t| t > 0) && r.windows(2).all(|w| w[0] <= w[1]))
            && rows
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        if !ok {
            return Err(ShapeError::InvalidTableau(rows));
        }
        Ok(Tableau { rows })
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("validated on construction")
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at the 1-based cell `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// `(i, j, T(i,j))` for every cell, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &t)| (i + 1, j + 1, t)))
    }
}

/// Content `j - i` of the 1-based cell `(i, j)`.
pub fn content(i: usize, j: usize) -> i64 {
    j as i64 - i as i64
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = ShapeError;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

/// All semistandard tableaux of shape `λ` with entries in `1..=max_entry`,
/// in lexicographic order of the row-major reading word.
pub fn enumerate_ssyt(lambda: &Partition, max_entry: u32) -> Vec<Tableau> {
    let mut rows: Vec<Vec<u32>> = lambda
        .parts()
        .iter()
        .map(|&p| Vec::with_capacity(p as usize))
        .collect();
    let cells: Vec<(usize, usize)> = lambda.cells().map(|(i, j)| (i - 1, j - 1)).collect();
    let mut out = Vec::new();
    fill(&cells, 0, max_entry, &mut rows, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    max_entry: u32,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(Tableau { rows: rows.clone() });
        return;
    };
    let left = if j > 0 { rows[i][j - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
    for t in left.max(above)..=max_entry {
        rows[i].push(t);
        fill(cells, k + 1, max_entry, rows, out);
        rows[i].pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let empty = enumerate_ssyt(&p(&[0]), 3);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].cells().count(), 0);

        let single = enumerate_ssyt(&p(&[1]), 1);
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].rows(), &[vec![1]]);

        let two: Vec<Vec<Vec<u32>>> = enumerate_ssyt(&p(&[1]), 2)
            .into_iter()
            .map(Vec::from)
            .collect();
        assert_eq!(two, vec![vec![vec![1]], vec![vec![2]]]);
    }

    #[test]
    fn single_box_count_is_the_entry_bound() {
        for n in 1..6 {
            assert_eq!(enumerate_ssyt(&p(&[1]), n).len(), n as usize);
        }
    }

    /// Weyl dimension formula for GL_n: prod_{i<j} (λ_i - λ_j + j - i) / (j - i).
    fn weyl_dimension(lambda: &[u32], n: usize) -> u64 {
        let part = |i: usize| lambda.get(i).copied().unwrap_or(0) as i64;
        let (mut num, mut den) = (1i64, 1i64);
        for i in 0..n {
            for j in i + 1..n {
                num *= part(i) - part(j) + (j - i) as i64;
                den *= (j - i) as i64;
            }
        }
        (num / den) as u64
    }

    #[test]
    fn counts_match_weyl_dimension() {
        for parts in [&[2, 1][..], &[3, 1, 0], &[2, 2, 1], &[3, 3, 3], &[4, 0, 0]] {
            for n in 1..=4 {
                let l = p(parts);
                let expected = if l.parts().iter().filter(|&&x| x > 0).count() > n {
                    0
                } else {
                    weyl_dimension(parts, n)
                };
                assert_eq!(
                    enumerate_ssyt(&l, n as u32).len() as u64,
                    expected,
                    "{l} n={n}"
                );
            }
        }
    }

    #[test]
    fn validation_and_order() {
        assert!(Tableau::new(vec![vec![1, 1], vec![2]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        let all = enumerate_ssyt(&p(&[2, 1]), 3);
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|t| Tableau::new(t.rows().to_vec()).is_ok()));
        assert_eq!(content(1, 3), 2);
        assert_eq!(content(3, 1), -2);
    }
}
