//! Square ice with the λ-boundary condition.
//!
//! The grid has `n` rows (row 1 at the top) and `m = λ_1 + n` columns (column
//! 1 at the left). Every edge carries one hydrogen atom, except boundary edges
//! where the boundary condition says otherwise: all left and right edges carry
//! one, no bottom edge does, and the top edge of column `j` carries one unless
//! `j` is in [`top_row`](crate::shapes::top_row)`(λ)`. A boundary hydrogen is
//! bonded to the oxygen next to it.
//!
//! Each oxygen is bonded to exactly two hydrogens; a [`VertexConfig`] records
//! which two.

mod enumerate;
mod state;
mod weight;

use thiserror::Error;

use crate::ring::RingError;
use crate::shapes::{top_row, Partition, ShapeError};

pub use enumerate::{enumerate_states, enumerate_states_in, Strategy};
pub use state::{gt_to_state, state_to_gt, IceState};
pub use weight::{
    a_prefactor_exponents, check_symmetry, delta_normalized, partition_function,
    partition_function_in, state_weight, vertex_weight, RectWeight, RectWeights, SymmetryCheck,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("grid must have at least one row and one column, all rows of equal length")]
    Ragged,
    #[error("inconsistent bonding at row {row}, column {col}: {why}")]
    Inconsistent {
        row: usize,
        col: usize,
        why: &'static str,
    },
    #[error("boundary violation: {0}")]
    Boundary(String),
    #[error("unknown vertex configuration {0:?}")]
    UnknownConfig(String),
    #[error("pattern cannot be realized as an ice state: {0}")]
    Propagation(String),
    #[error("{m} columns are too few for λ = {lambda}")]
    TooFewColumns { lambda: Partition, m: usize },
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Compass direction of a hydrogen around an oxygen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    N,
    S,
    E,
    W,
}

/// The two hydrogens an oxygen is bonded to.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub enum VertexConfig {
    NS,
    EW,
    NE,
    NW,
    SE,
    SW,
}

impl VertexConfig {
    pub const ALL: [VertexConfig; 6] = [
        VertexConfig::NS,
        VertexConfig::EW,
        VertexConfig::NE,
        VertexConfig::NW,
        VertexConfig::SE,
        VertexConfig::SW,
    ];

    pub fn has(self, d: Dir) -> bool {
        use VertexConfig::*;
        matches!(
            (self, d),
            (NS | NE | NW, Dir::N)
                | (NS | SE | SW, Dir::S)
                | (EW | NE | SE, Dir::E)
                | (EW | NW | SW, Dir::W)
        )
    }

    /// The configuration bonded exactly to the given directions, if there are two of them.
    pub fn from_bonds(n: bool, s: bool, e: bool, w: bool) -> Option<Self> {
        use VertexConfig::*;
        match (n, s, e, w) {
            (true, true, false, false) => Some(NS),
            (false, false, true, true) => Some(EW),
            (true, false, true, false) => Some(NE),
            (true, false, false, true) => Some(NW),
            (false, true, true, false) => Some(SE),
            (false, true, false, true) => Some(SW),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        use VertexConfig::*;
        match self {
            NS => "NS",
            EW => "EW",
            NE => "NE",
            NW => "NW",
            SE => "SE",
            SW => "SW",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl std::str::FromStr for VertexConfig {
    type Err = LatticeError;
    fn from_str(s: &str) -> Result<Self, LatticeError> {
        VertexConfig::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| LatticeError::UnknownConfig(s.to_string()))
    }
}

/// Shape of the grid and the top-boundary gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySpec {
    pub n: usize,
    pub m: usize,
    /// Columns (1-based, increasing) with no hydrogen on the top edge.
    pub top_gaps: Vec<u32>,
}

impl BoundarySpec {
    /// The λ-boundary on `λ_1 + n` columns.
    pub fn for_partition(lambda: &Partition) -> Self {
        let n = lambda.n();
        BoundarySpec {
            n,
            m: lambda.largest() as usize + n,
            top_gaps: top_row(lambda),
        }
    }

    /// The λ-boundary on `m >= λ_1 + n` columns; extra columns get a top hydrogen.
    pub fn with_columns(lambda: &Partition, m: usize) -> Result<Self, LatticeError> {
        let mut spec = Self::for_partition(lambda);
        if m < spec.m || spec.n == 0 {
            return Err(LatticeError::TooFewColumns {
                lambda: lambda.clone(),
                m,
            });
        }
        spec.m = m;
        Ok(spec)
    }

    pub fn is_gap(&self, col: usize) -> bool {
        self.top_gaps.binary_search(&(col as u32)).is_ok()
    }
}
