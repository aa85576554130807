use super::{enumerate_states_in, BoundarySpec, IceState, LatticeError, Strategy, VertexConfig};
use crate::ring::{LaurentPoly, RingError, VarSpace};
use crate::shapes::Partition;

/// A rectilinear Boltzmann weight of the form `constant + ratio * x_i / a_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectWeight {
    pub constant: i64,
    pub ratio: i64,
}

impl RectWeight {
    pub const fn new(constant: i64, ratio: i64) -> Self {
        RectWeight { constant, ratio }
    }

    /// The weight at row `i`, column `j` (both 1-based) as a polynomial in `space`.
    pub fn at(&self, space: VarSpace, i: usize, j: usize) -> Result<LaurentPoly, RingError> {
        let mut ex = vec![0; space.nx()];
        let mut ea = vec![0; space.na()];
        if i == 0 || i > ex.len() || j == 0 || j > ea.len() {
            return Err(RingError::ExponentLength {
                nx: space.nx(),
                na: space.na(),
                got_x: i,
                got_a: j,
            });
        }
        ex[i - 1] = 1;
        ea[j - 1] = -1;
        let ratio = LaurentPoly::monomial(space, &ex, &ea)?;
        Ok(&LaurentPoly::constant(space, self.constant)
            + &(&ratio * &LaurentPoly::constant(space, self.ratio)))
    }
}

/// A weight for each of the six vertex configurations.
///
/// The default table is the one whose partition function is a factorial
/// Schur function: `NS ↦ x_i/a_j`, `NW ↦ x_i/a_j - 1`, everything else `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectWeights {
    table: [RectWeight; 6],
}

impl Default for RectWeights {
    fn default() -> Self {
        let mut table = [RectWeight::new(1, 0); 6];
        table[VertexConfig::NS.index()] = RectWeight::new(0, 1);
        table[VertexConfig::NW.index()] = RectWeight::new(-1, 1);
        RectWeights { table }
    }
}

impl RectWeights {
    pub fn get(&self, c: VertexConfig) -> RectWeight {
        self.table[c.index()]
    }

    /// A copy with one entry replaced.
    pub fn with(&self, c: VertexConfig, w: RectWeight) -> Self {
        let mut out = self.clone();
        out.table[c.index()] = w;
        out
    }

    pub fn weight(
        &self,
        c: VertexConfig,
        space: VarSpace,
        i: usize,
        j: usize,
    ) -> Result<LaurentPoly, RingError> {
        self.get(c).at(space, i, j)
    }
}

/// Boltzmann weight of configuration `c` at row `i`, column `j` (1-based).
pub fn vertex_weight(
    c: VertexConfig,
    space: VarSpace,
    i: usize,
    j: usize,
) -> Result<LaurentPoly, RingError> {
    RectWeights::default().weight(c, space, i, j)
}

/// Product of the vertex weights of `s`, in the space `(n, m)` of the grid.
pub fn state_weight(s: &IceState, weights: &RectWeights) -> Result<LaurentPoly, LatticeError> {
    let space = VarSpace::new(s.n(), s.m())?;
    let mut acc = LaurentPoly::one(space);
    for (i, row) in s.grid().iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            let w = weights.get(c);
            if w == RectWeight::new(1, 0) {
                continue;
            }
            acc = &acc * &w.at(space, i + 1, j + 1)?;
        }
    }
    Ok(acc)
}

/// `Z_λ(x|a)` on `λ_1 + n` columns with the default weights.
pub fn partition_function(lambda: &Partition) -> LaurentPoly {
    let spec = BoundarySpec::for_partition(lambda);
    partition_function_in(&spec, Strategy::ViaGt, &RectWeights::default())
        .expect("the natural boundary has a valid variable space")
}

/// Sum of state weights over every state for `spec`, found with `strategy`.
pub fn partition_function_in(
    spec: &BoundarySpec,
    strategy: Strategy,
    weights: &RectWeights,
) -> Result<LaurentPoly, LatticeError> {
    let space = VarSpace::new(spec.n, spec.m)?;
    let mut z = LaurentPoly::zero(space);
    for s in enumerate_states_in(spec, strategy)? {
        z = &z + &state_weight(&s, weights)?;
    }
    Ok(z)
}

/// `x^{-δ} · p` with `δ = (0, 1, .., n-1)`.
pub fn delta_normalized(p: &LaurentPoly) -> LaurentPoly {
    let space = p.space();
    let ex: Vec<i32> = (0..space.nx() as i32).map(|k| -k).collect();
    p.shift(&ex, &vec![0; space.na()])
        .expect("shift vectors are built from the space")
}

/// Exponents of `a^{(λ+ρ)'}`, padded to `m` a-variables.
pub fn a_prefactor_exponents(lambda: &Partition, m: usize) -> Vec<i32> {
    let conj = lambda.plus_rho().conjugate();
    let mut ea = vec![0; m.max(conj.n())];
    for (k, &e) in conj.parts().iter().enumerate() {
        ea[k] = e as i32;
    }
    ea
}

/// Outcome of the two symmetry tests for the transposition `x_i ↔ x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    /// 1-based index of the transposition.
    pub i: usize,
    /// `x^{-δ} Z` is unchanged by the swap.
    pub delta_normalized_fixed: bool,
    /// `Z / x_{i+1} = (Z with x_i, x_{i+1} swapped) / x_i`.
    pub exchange_relation: bool,
}

impl SymmetryCheck {
    pub fn passed(&self) -> bool {
        self.delta_normalized_fixed && self.exchange_relation
    }
}

/// Runs both symmetry tests for every adjacent transposition of `z`'s x-variables.
pub fn check_symmetry(z: &LaurentPoly) -> Vec<SymmetryCheck> {
    let space = z.space();
    let nx = space.nx();
    let normalized = delta_normalized(z);
    let zero_a = vec![0; space.na()];
    let inv_x = |k: usize| {
        let mut ex = vec![0; nx];
        ex[k - 1] = -1;
        LaurentPoly::monomial(space, &ex, &zero_a).expect("in range")
    };
    (1..nx)
        .map(|i| {
            let swapped = z.transpose_x(i).expect("in range");
            SymmetryCheck {
                i,
                delta_normalized_fixed: normalized.transpose_x(i).expect("in range") == normalized,
                exchange_relation: z * &inv_x(i + 1) == &swapped * &inv_x(i),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_states;
    use crate::ring::Var;
    use VertexConfig::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn weight_table() {
        let s = VarSpace::new(1, 4).unwrap();
        assert_eq!(
            vertex_weight(NS, s, 1, 4).unwrap().render_canonical(),
            "x1*a4^-1"
        );
        assert_eq!(
            vertex_weight(NW, s, 1, 1).unwrap().render_canonical(),
            "-1 + x1*a1^-1"
        );
        for c in [EW, NE, SE, SW] {
            assert_eq!(vertex_weight(c, s, 1, 2).unwrap(), LaurentPoly::one(s));
        }
        assert!(vertex_weight(NS, s, 2, 1).is_err());
    }

    #[test]
    fn small_partition_functions() {
        assert_eq!(partition_function(&p(&[0])).render_canonical(), "1");
        assert_eq!(
            partition_function(&p(&[1])).render_canonical(),
            "-1 + x1*a1^-1"
        );
    }

    #[test]
    fn two_row_partition_function_by_hand() {
        // States for λ = (1,0), one per second pattern row t:
        //   t=1: SW NW EW / EW NE NE  -> x1/a2 - 1
        //   t=2: EW NS EW / NW EW NE  -> (x1/a2)(x2/a1 - 1)
        //   t=3: EW NE SE / NW NW EW  -> (x2/a1 - 1)(x2/a2 - 1)
        let l = p(&[1, 0]);
        let space = VarSpace::new(2, 3).unwrap();
        let x = |i| LaurentPoly::var(space, Var::X(i)).unwrap();
        let a = |j| LaurentPoly::var(space, Var::A(j)).unwrap();
        let one = LaurentPoly::one(space);
        let ratio = |i: usize, j: usize| {
            let mut ex = vec![0; 2];
            let mut ea = vec![0; 3];
            ex[i - 1] = 1;
            ea[j - 1] = -1;
            LaurentPoly::monomial(space, &ex, &ea).unwrap()
        };
        let by_hand = &(&(&ratio(1, 2) - &one) + &(&ratio(1, 2) * &(&ratio(2, 1) - &one)))
            + &(&(&ratio(2, 1) - &one) * &(&ratio(2, 2) - &one));
        let spec = BoundarySpec::for_partition(&l);
        for strategy in [Strategy::Backtrack, Strategy::ViaGt] {
            let z = partition_function_in(&spec, strategy, &RectWeights::default()).unwrap();
            assert_eq!(z, by_hand);
        }
        // x2 ((x1 - a1) + (x2 - a2)) / (a1 a2)
        let inv_a1a2 = LaurentPoly::monomial(space, &[0, 0], &[-1, -1, 0]).unwrap();
        let closed = &(&x(2) * &(&(&x(1) - &a(1)) + &(&x(2) - &a(2)))) * &inv_a1a2;
        assert_eq!(by_hand, closed);
        assert_eq!(enumerate_states(&l, Strategy::Backtrack).len(), 3);
    }

    #[test]
    fn row_degree_counts_vertical_and_northwest_molecules() {
        for s in enumerate_states(&p(&[2, 1, 0]), Strategy::ViaGt) {
            let w = state_weight(&s, &RectWeights::default()).unwrap();
            let top = w
                .monomials()
                .map(|m| m.ex.clone())
                .max_by_key(|ex| ex.iter().sum::<i32>());
            let top = top.unwrap();
            for (i, row) in s.grid().iter().enumerate() {
                let count = row.iter().filter(|c| matches!(c, NS | NW)).count() as i32;
                assert_eq!(top[i], count);
            }
        }
    }

    #[test]
    fn symmetry_small() {
        for l in [p(&[1, 0]), p(&[2, 1, 0]), p(&[1, 1, 0])] {
            let z = partition_function(&l);
            assert!(check_symmetry(&z).iter().all(SymmetryCheck::passed), "{l}");
        }
        let s = VarSpace::new(2, 1).unwrap();
        let asym = LaurentPoly::var(s, Var::X(1)).unwrap();
        assert!(!check_symmetry(&asym)[0].passed());
    }

    #[test]
    fn prefactor() {
        // (λ+ρ) = (7,5,1), conjugate (3,2,2,2,2,1,1).
        assert_eq!(
            a_prefactor_exponents(&p(&[5, 4, 1]), 8),
            vec![3, 2, 2, 2, 2, 1, 1, 0]
        );
        assert_eq!(a_prefactor_exponents(&p(&[0]), 1), vec![0]);
    }
}
