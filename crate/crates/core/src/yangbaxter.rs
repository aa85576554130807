//! Diagonal crossings and the star-triangle identity.
//!
//! Two horizontal strings, `i` (row variable `x1`) and `j` (row variable
//! `x2`), cross at a diagonal oxygen and then pass through one column with
//! variable `a1`. The left diagram has the crossing west of the column, the
//! right diagram east of it. Six external half-edges `α..ζ` are shared by both
//! diagrams; fixing which three carry a hydrogen and summing over the
//! interior gives the two sides of the identity.
//!
//! Crossing half-edges are named by their position in the picture: `SW` is
//! lower left, `NE` upper right, and so on. String `i` runs from lower left to
//! upper right.

use std::fmt;

use thiserror::Error;

use crate::lattice::{Dir, RectWeights, VertexConfig};
use crate::ring::{LaurentPoly, VarSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YangBaxterError {
    #[error("a boundary sextuple needs exactly three hydrogens, mask {0:#08b} has {1}")]
    BadSextuple(u8, u32),
}

/// A half-edge of the crossing oxygen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    SW,
    NW,
    NE,
    SE,
}

/// The two diagonal half-edges a crossing oxygen is bonded to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingConfig {
    SwNe,
    NwSe,
    NwNe,
    SwSe,
    SeNe,
    SwNw,
}

impl CrossingConfig {
    /// In the order the pictures are drawn.
    pub const ALL: [CrossingConfig; 6] = [
        CrossingConfig::SwNe,
        CrossingConfig::NwSe,
        CrossingConfig::NwNe,
        CrossingConfig::SwSe,
        CrossingConfig::SeNe,
        CrossingConfig::SwNw,
    ];

    pub fn has(self, c: Corner) -> bool {
        use CrossingConfig::*;
        matches!(
            (self, c),
            (SwNe | SwSe | SwNw, Corner::SW)
                | (NwSe | NwNe | SwNw, Corner::NW)
                | (SwNe | NwNe | SeNe, Corner::NE)
                | (NwSe | SwSe | SeNe, Corner::SE)
        )
    }

    /// The configuration bonded to exactly the given corners, if there are two of them.
    pub fn from_corners(sw: bool, nw: bool, ne: bool, se: bool) -> Option<Self> {
        CrossingConfig::ALL.into_iter().find(|c| {
            [
                c.has(Corner::SW),
                c.has(Corner::NW),
                c.has(Corner::NE),
                c.has(Corner::SE),
            ] == [sw, nw, ne, se]
        })
    }

    pub fn name(self) -> &'static str {
        use CrossingConfig::*;
        match self {
            SwNe => "SW-NE",
            NwSe => "NW-SE",
            NwNe => "NW-NE",
            SwSe => "SW-SE",
            SeNe => "SE-NE",
            SwNw => "SW-NW",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A crossing weight `constant + inv_lower / x_i + inv_upper / x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingWeight {
    pub constant: i64,
    pub inv_lower: i64,
    pub inv_upper: i64,
}

impl CrossingWeight {
    pub const fn new(constant: i64, inv_lower: i64, inv_upper: i64) -> Self {
        CrossingWeight {
            constant,
            inv_lower,
            inv_upper,
        }
    }

    fn at(&self, space: VarSpace) -> LaurentPoly {
        let zero_a = vec![0; space.na()];
        let inv = |k: usize| {
            let mut ex = vec![0; space.nx()];
            ex[k] = -1;
            LaurentPoly::monomial(space, &ex, &zero_a).expect("two-string space")
        };
        let c = |v: i64| LaurentPoly::constant(space, v);
        &(&c(self.constant) + &(&c(self.inv_lower) * &inv(0))) + &(&c(self.inv_upper) * &inv(1))
    }
}

/// A weight for each crossing configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingWeights {
    table: [CrossingWeight; 6],
}

impl Default for CrossingWeights {
    fn default() -> Self {
        let w = CrossingWeight::new;
        CrossingWeights {
            table: [
                w(0, 1, 0),
                w(0, 0, 1),
                w(0, 1, -1),
                w(0, 0, 0),
                w(0, 1, 0),
                w(0, 0, 1),
            ],
        }
    }
}

impl CrossingWeights {
    pub fn get(&self, c: CrossingConfig) -> CrossingWeight {
        self.table[c.index()]
    }

    /// A copy with one entry replaced.
    pub fn with(&self, c: CrossingConfig, w: CrossingWeight) -> Self {
        let mut out = self.clone();
        out.table[c.index()] = w;
        out
    }
}

/// The variables `x1 = x_i`, `x2 = x_j`, `a1 = a`.
pub fn star_triangle_space() -> VarSpace {
    VarSpace::new(2, 1).expect("nonempty")
}

/// Default weight of `c` for lower string `x1` and upper string `x2`.
pub fn crossing_weight(c: CrossingConfig) -> LaurentPoly {
    CrossingWeights::default().get(c).at(star_triangle_space())
}

/// An external half-edge shared by both diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryPosition {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    Zeta,
}

impl BoundaryPosition {
    pub const ALL: [BoundaryPosition; 6] = [
        BoundaryPosition::Alpha,
        BoundaryPosition::Beta,
        BoundaryPosition::Gamma,
        BoundaryPosition::Delta,
        BoundaryPosition::Epsilon,
        BoundaryPosition::Zeta,
    ];

    pub fn bit(self) -> u8 {
        1 << (self as u8)
    }

    pub fn symbol(self) -> char {
        ['α', 'β', 'γ', 'δ', 'ε', 'ζ'][self as usize]
    }
}

/// Which three of the six external half-edges carry a hydrogen.
/// Bit `k` of the mask is position `k` in `α, β, γ, δ, ε, ζ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundarySextuple {
    mask: u8,
}

impl BoundarySextuple {
    pub fn new(mask: u8) -> Result<Self, YangBaxterError> {
        let ones = mask.count_ones();
        if mask >> 6 != 0 || ones != 3 {
            return Err(YangBaxterError::BadSextuple(mask, ones));
        }
        Ok(BoundarySextuple { mask })
    }

    pub fn from_positions(ps: &[BoundaryPosition]) -> Result<Self, YangBaxterError> {
        Self::new(ps.iter().fold(0, |m, p| m | p.bit()))
    }

    pub fn mask(self) -> u8 {
        self.mask
    }

    pub fn has(self, p: BoundaryPosition) -> bool {
        self.mask & p.bit() != 0
    }
}

impl fmt::Display for BoundarySextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = BoundaryPosition::ALL
            .into_iter()
            .filter(|&p| self.has(p))
            .map(BoundaryPosition::symbol)
            .collect();
        f.write_str(&s)
    }
}

/// The 20 sextuples in increasing mask order.
pub fn all_sextuples() -> Vec<BoundarySextuple> {
    (0u8..64)
        .filter_map(|m| BoundarySextuple::new(m).ok())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Port {
    Crossing(Corner),
    Rect(Dir),
}

/// Node 0 is the crossing, nodes 1 and 2 the upper and lower column oxygens.
#[derive(Debug, Clone, Copy)]
struct Diagram {
    /// String (0 = `i`, 1 = `j`) passing through each column oxygen.
    strings: [usize; 2],
    legs: [(usize, Port); 6],
    segments: [((usize, Port), (usize, Port)); 3],
}

use Corner::{NE, NW, SE, SW};
use Port::{Crossing as X, Rect as R};

const LEFT: Diagram = Diagram {
    strings: [0, 1],
    legs: [
        (0, X(SW)),
        (0, X(NW)),
        (1, R(Dir::N)),
        (1, R(Dir::E)),
        (2, R(Dir::E)),
        (2, R(Dir::S)),
    ],
    segments: [
        ((0, X(NE)), (1, R(Dir::W))),
        ((0, X(SE)), (2, R(Dir::W))),
        ((2, R(Dir::N)), (1, R(Dir::S))),
    ],
};

const RIGHT: Diagram = Diagram {
    strings: [1, 0],
    legs: [
        (2, R(Dir::W)),
        (1, R(Dir::W)),
        (1, R(Dir::N)),
        (0, X(NE)),
        (0, X(SE)),
        (2, R(Dir::S)),
    ],
    segments: [
        ((1, R(Dir::E)), (0, X(NW))),
        ((2, R(Dir::E)), (0, X(SW))),
        ((2, R(Dir::N)), (1, R(Dir::S))),
    ],
};

#[derive(Default, Clone, Copy)]
struct Bonds {
    crossing: [bool; 4],
    rect: [[bool; 4]; 2],
}

impl Bonds {
    fn set(&mut self, node: usize, port: Port) {
        match port {
            X(c) => self.crossing[c as usize] = true,
            R(d) => {
                let k = match d {
                    Dir::N => 0,
                    Dir::S => 1,
                    Dir::E => 2,
                    Dir::W => 3,
                };
                self.rect[node - 1][k] = true;
            }
        }
    }
}

impl Diagram {
    fn sum(&self, b: BoundarySextuple, rect: &RectWeights, cross: &CrossingWeights) -> LaurentPoly {
        let space = star_triangle_space();
        let mut base = Bonds::default();
        for (p, &(node, port)) in BoundaryPosition::ALL.iter().zip(&self.legs) {
            if b.has(*p) {
                base.set(node, port);
            }
        }
        let mut total = LaurentPoly::zero(space);
        for choice in 0u8..8 {
            let mut bonds = base;
            for (k, &(first, second)) in self.segments.iter().enumerate() {
                let (node, port) = if choice & (1 << k) == 0 {
                    first
                } else {
                    second
                };
                bonds.set(node, port);
            }
            let [sw, nw, ne, se] = bonds.crossing;
            let Some(c) = CrossingConfig::from_corners(sw, nw, ne, se) else {
                continue;
            };
            let mut term = cross.get(c).at(space);
            let mut ok = true;
            for (k, r) in bonds.rect.iter().enumerate() {
                match VertexConfig::from_bonds(r[0], r[1], r[2], r[3]) {
                    Some(v) => {
                        let w = rect
                            .weight(v, space, self.strings[k] + 1, 1)
                            .expect("indices lie in the two-string space");
                        term = &term * &w;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                total = &total + &term;
            }
        }
        total
    }
}

/// Both sides for `b` with the default weights.
pub fn star_triangle_sides(b: BoundarySextuple) -> (LaurentPoly, LaurentPoly) {
    star_triangle_sides_with(b, &RectWeights::default(), &CrossingWeights::default())
}

pub fn star_triangle_sides_with(
    b: BoundarySextuple,
    rect: &RectWeights,
    cross: &CrossingWeights,
) -> (LaurentPoly, LaurentPoly) {
    (LEFT.sum(b, rect, cross), RIGHT.sum(b, rect, cross))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTriangleCase {
    pub sextuple: BoundarySextuple,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl StarTriangleCase {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTriangleReport {
    pub cases: Vec<StarTriangleCase>,
}

impl StarTriangleReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(StarTriangleCase::equal)
    }

    pub fn failures(&self) -> impl Iterator<Item = &StarTriangleCase> {
        self.cases.iter().filter(|c| !c.equal())
    }
}

pub fn verify_star_triangle() -> StarTriangleReport {
    verify_star_triangle_with(&RectWeights::default(), &CrossingWeights::default())
}

pub fn verify_star_triangle_with(
    rect: &RectWeights,
    cross: &CrossingWeights,
) -> StarTriangleReport {
    let cases = all_sextuples()
        .into_iter()
        .map(|b| {
            let (lhs, rhs) = star_triangle_sides_with(b, rect, cross);
            StarTriangleCase {
                sextuple: b,
                lhs,
                rhs,
            }
        })
        .collect();
    StarTriangleReport { cases }
}
