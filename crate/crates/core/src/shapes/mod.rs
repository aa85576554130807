//! Partitions, semistandard tableaux, strict Gelfand-Tsetlin patterns and
//! staircases, with the bijection between patterns and staircases.

mod gt;
mod partition;
mod staircase;
mod tableau;

use thiserror::Error;

pub use gt::{enumerate_gt, top_row, GtPattern};
pub use partition::Partition;
pub use staircase::{enumerate_staircases, gt_to_staircase, staircase_to_gt, Staircase};
pub use tableau::{content, enumerate_ssyt, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("{partition} has more than {n} nonzero parts")]
    TooManyParts { partition: Partition, n: usize },
    #[error("invalid Gelfand-Tsetlin pattern {rows:?}: {why}")]
    InvalidPattern { rows: Vec<Vec<u32>>, why: String },
    #[error("invalid staircase {columns:?}: {why}")]
    InvalidStaircase { columns: Vec<Vec<u32>>, why: String },
    #[error("invalid semistandard tableau {0:?}")]
    InvalidTableau(Vec<Vec<u32>>),
}
