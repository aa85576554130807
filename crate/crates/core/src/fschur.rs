//! Factorial Schur functions and the identities relating them to the ice model.
//!
//! For a partition `λ` with `n` parts,
//!
//! ```text
//! s_λ(x|a) = Σ_T Π_{(i,j) ∈ λ} (x_{T(i,j)} - a_{T(i,j) + j - i})
//! ```
//!
//! summed over semistandard tableaux `T` with entries in `1..=n`.
//!
//! ```
//! use squareice::{fschur, Partition};
//!
//! let s = fschur::factorial_schur(&"1,0".parse::<Partition>().unwrap(), 3).unwrap();
//! assert_eq!(s.render_canonical(), "-1*a2 + -1*a1 + x2 + x1");
//! ```

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{
    a_prefactor_exponents, partition_function_in, BoundarySpec, LatticeError, RectWeights, Strategy,
};
use crate::ring::{LaurentPoly, Monomial, Rational, RingError, Var, VarSpace};
use crate::shapes::{content, enumerate_ssyt, Partition, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FschurError {
    #[error("{what} needs at least {needed} column variables, got {m}")]
    TooFewColumns {
        what: &'static str,
        needed: usize,
        m: usize,
    },
    #[error("partitions must have the same number of parts, got {0} and {1}")]
    PartCount(usize, usize),
    #[error("the empty partition has no row variables")]
    NoRows,
    #[error("a-values must be distinct; a{0} and a{1} coincide")]
    RepeatedAValues(usize, usize),
    #[error("need at least {needed} a-values, got {got}")]
    TooFewAValues { needed: usize, got: usize },
    #[error("input is not symmetric in the row variables")]
    NotSymmetric,
    #[error("input has negative powers of the row variables")]
    NotPolynomial,
    #[error("input has x-degree {degree}, above the bound {bound}")]
    DegreeTooHigh { degree: i64, bound: u32 },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// `n + λ_1`, the number of column variables the ice model for `λ` uses.
pub fn natural_columns(lambda: &Partition) -> usize {
    lambda.n() + lambda.largest() as usize
}

fn check_columns(what: &'static str, needed: usize, m: usize) -> Result<(), FschurError> {
    if m < needed {
        return Err(FschurError::TooFewColumns { what, needed, m });
    }
    Ok(())
}

/// `s_λ(x|a)` in `λ.n()` row variables and `m >= n + λ_1` column variables.
pub fn factorial_schur(lambda: &Partition, m: usize) -> Result<LaurentPoly, FschurError> {
    let n = lambda.n();
    if n == 0 {
        return Err(FschurError::NoRows);
    }
    check_columns("s_λ", natural_columns(lambda), m)?;
    let space = VarSpace::new(n, m)?;
    let mut total = LaurentPoly::zero(space);
    for t in enumerate_ssyt(lambda, n as u32) {
        total = &total + &tableau_product(&t, space)?;
    }
    Ok(total)
}

fn tableau_product(t: &Tableau, space: VarSpace) -> Result<LaurentPoly, FschurError> {
    let mut acc = LaurentPoly::one(space);
    for (i, j, v) in t.cells() {
        let a = (v as i64 + content(i, j)) as usize;
        let factor =
            &LaurentPoly::var(space, Var::X(v as usize))? - &LaurentPoly::var(space, Var::A(a))?;
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// The substitution `x_i ↦ a_{n+1-i+μ_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationPoint {
    mu: Partition,
    m: usize,
    targets: Vec<usize>,
}

impl SpecializationPoint {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Index of the column variable replacing `x_i`, for `i = 1..=n` in order.
    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn bindings(&self) -> BTreeMap<Var, Monomial> {
        let n = self.targets.len();
        self.targets
            .iter()
            .enumerate()
            .map(|(k, &t)| {
                let mut ea = vec![0; self.m];
                ea[t - 1] = 1;
                (Var::X(k + 1), Monomial::new(1, vec![0; n], ea))
            })
            .collect()
    }

    /// `p(a_μ|a)`, moving `p` into `m` column variables first.
    pub fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly, FschurError> {
        let space = VarSpace::new(self.targets.len(), self.m)?;
        let p = p.extend_space(space)?;
        Ok(p.substitute_monomials(&self.bindings())?)
    }

    /// The numeric point `(a_{t_1}, .., a_{t_n})` for given column values.
    pub fn numeric(&self, a_values: &[Rational]) -> Vec<Rational> {
        self.targets
            .iter()
            .map(|&t| a_values[t - 1].clone())
            .collect()
    }
}

pub fn a_mu(mu: &Partition, m: usize) -> Result<SpecializationPoint, FschurError> {
    let n = mu.n();
    if n == 0 {
        return Err(FschurError::NoRows);
    }
    check_columns("a_μ", natural_columns(mu), m)?;
    let targets = (1..=n).map(|i| n + 1 - i + mu.part(i) as usize).collect();
    Ok(SpecializationPoint {
        mu: mu.clone(),
        m,
        targets,
    })
}

/// Which side of the main identity a vanishing check is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Schur,
    Z,
}

/// `Π_{(i,j) ∈ λ} (a_{n+1-i+λ_i} - a_{n-λ'_j+j})`.
pub fn schur_diagonal(lambda: &Partition, m: usize) -> Result<LaurentPoly, FschurError> {
    diagonal(lambda, m, |space, hi, lo| {
        Ok(&LaurentPoly::var(space, Var::A(hi))? - &LaurentPoly::var(space, Var::A(lo))?)
    })
}

/// `Π_{(i,j) ∈ λ} (a_{n+1-i+λ_i} / a_{n-λ'_j+j} - 1)`.
pub fn z_diagonal(lambda: &Partition, m: usize) -> Result<LaurentPoly, FschurError> {
    diagonal(lambda, m, |space, hi, lo| {
        let mut ea = vec![0; space.na()];
        ea[hi - 1] += 1;
        ea[lo - 1] -= 1;
        let ratio = LaurentPoly::monomial(space, &vec![0; space.nx()], &ea)?;
        Ok(&ratio - &LaurentPoly::one(space))
    })
}

fn diagonal(
    lambda: &Partition,
    m: usize,
    factor: impl Fn(VarSpace, usize, usize) -> Result<LaurentPoly, RingError>,
) -> Result<LaurentPoly, FschurError> {
    let n = lambda.n();
    if n == 0 {
        return Err(FschurError::NoRows);
    }
    check_columns("the diagonal product", natural_columns(lambda), m)?;
    let space = VarSpace::new(n, m)?;
    let conj = lambda.conjugate();
    let mut acc = LaurentPoly::one(space);
    for (i, j) in lambda.cells() {
        let hi = n + 1 - i + lambda.part(i) as usize;
        let lo = n + j - conj.part(j) as usize;
        acc = &acc * &factor(space, hi, lo)?;
    }
    Ok(acc)
}

/// Outcome of substituting `a_μ` into `s_λ` or `Z_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingVerdict {
    pub lambda: Partition,
    pub mu: Partition,
    pub target: Target,
    pub value: LaurentPoly,
    /// `λ ⊆ μ`.
    pub contained: bool,
    /// For `λ = μ`, whether the value equals the diagonal product.
    pub diagonal_matches: Option<bool>,
}

impl VanishingVerdict {
    pub fn vanishes(&self) -> bool {
        self.value.is_zero()
    }

    /// `λ ⊄ μ` forces zero, `λ = μ` forces the diagonal product; other pairs claim nothing.
    pub fn passed(&self) -> bool {
        (self.contained || self.vanishes()) && self.diagonal_matches != Some(false)
    }
}

/// Substitutes `a_μ` into the target for `λ`, in `n + max(λ_1, μ_1)` column variables.
pub fn vanishing_check(
    lambda: &Partition,
    mu: &Partition,
    target: Target,
) -> Result<VanishingVerdict, FschurError> {
    if lambda.n() != mu.n() {
        return Err(FschurError::PartCount(lambda.n(), mu.n()));
    }
    let m = natural_columns(lambda).max(natural_columns(mu));
    let point = a_mu(mu, m)?;
    let (poly, diag) = match target {
        Target::Schur => (factorial_schur(lambda, m)?, schur_diagonal(lambda, m)?),
        Target::Z => {
            let spec = BoundarySpec::with_columns(lambda, m)?;
            let z = partition_function_in(&spec, Strategy::ViaGt, &RectWeights::default())?;
            (z, z_diagonal(lambda, m)?)
        }
    };
    let value = point.apply(&poly)?;
    Ok(VanishingVerdict {
        lambda: lambda.clone(),
        mu: mu.clone(),
        target,
        diagonal_matches: (lambda == mu).then(|| value == diag),
        contained: lambda.is_contained_in(mu),
        value,
    })
}

/// Coefficients of a symmetric polynomial in the basis `s_μ(x|a)` at a numeric `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub n: usize,
    pub degree: u32,
    /// One entry per `μ` with `n` parts and `|μ| <= degree`, zeros included.
    pub coeffs: BTreeMap<Partition, Rational>,
    pub a_values: Vec<Rational>,
}

impl ExpansionResult {
    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter().filter(|(_, c)| !c.is_zero())
    }

    /// `Σ c_μ s_μ(xs|a)`.
    pub fn evaluate(&self, xs: &[Rational]) -> Rational {
        self.nonzero()
            .map(|(mu, c)| c * schur_at(&enumerate_ssyt(mu, self.n as u32), xs, &self.a_values))
            .fold(Rational::zero(), |s, t| s + t)
    }
}

/// `s_μ(xs|a)` from its tableaux.
fn schur_at(tableaux: &[Tableau], xs: &[Rational], a: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for t in tableaux {
        let mut term = Rational::one();
        for (i, j, v) in t.cells() {
            let k = (v as i64 + content(i, j)) as usize;
            term *= &xs[v as usize - 1] - &a[k - 1];
        }
        total += term;
    }
    total
}

/// The numeric column values `1, 2, 5, 11, 23, 47, ..`: after the first,
/// `a_{k+1} = 2 a_k + 1`.
pub fn default_a_values(count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        let v = match k {
            0 => Rational::one(),
            1 => Rational::from_integer(2.into()),
            _ => &out[k - 1] * Rational::from_integer(2.into()) + Rational::one(),
        };
        out.push(v);
    }
    out
}

/// Expands `f`, symmetric and polynomial in `x` of x-degree at most `degree`,
/// after setting the column variables of `f` to the leading `a_values`.
///
/// The coefficients are solved for one `μ` at a time, by increasing size,
/// by evaluating at `x = a_μ`.
pub fn expand_in_factorial_basis(
    f: &LaurentPoly,
    degree: u32,
    a_values: &[Rational],
) -> Result<ExpansionResult, FschurError> {
    let space = f.space();
    let n = space.nx();
    let needed = space.na().max(n + degree as usize);
    if a_values.len() < needed {
        return Err(FschurError::TooFewAValues {
            needed,
            got: a_values.len(),
        });
    }
    for (k, v) in a_values.iter().enumerate() {
        if let Some(l) = a_values[..k].iter().position(|w| w == v) {
            return Err(FschurError::RepeatedAValues(l + 1, k + 1));
        }
    }
    if !f.is_polynomial_in_x() {
        return Err(FschurError::NotPolynomial);
    }
    if let Some(d) = f.x_degree() {
        if d > degree as i64 {
            return Err(FschurError::DegreeTooHigh {
                degree: d,
                bound: degree,
            });
        }
    }
    if !f.is_symmetric_in_x() {
        return Err(FschurError::NotSymmetric);
    }

    let f_a = &a_values[..space.na()];
    let basis: Vec<(Partition, Vec<Tableau>)> = Partition::with_size_at_most(n, degree)
        .into_iter()
        .map(|mu| {
            let t = enumerate_ssyt(&mu, n as u32);
            (mu, t)
        })
        .collect();
    let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut solved: Vec<(usize, Rational)> = Vec::new();
    for (k, (mu, tableaux)) in basis.iter().enumerate() {
        let point = a_mu(mu, needed)?.numeric(a_values);
        let mut residual = f.evaluate(&point, f_a)?;
        for (l, c) in &solved {
            residual -= c * schur_at(&basis[*l].1, &point, a_values);
        }
        let diag = schur_at(tableaux, &point, a_values);
        // Distinct a-values make every diagonal factor nonzero.
        let c = residual / diag;
        if !c.is_zero() {
            solved.push((k, c.clone()));
        }
        coeffs.insert(mu.clone(), c);
    }
    Ok(ExpansionResult {
        n,
        degree,
        coeffs,
        a_values: a_values.to_vec(),
    })
}

/// Both sides of `Z_λ · a^{(λ+ρ)'} = x^δ · s_λ(x|a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainTheoremCertificate {
    pub lambda: Partition,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl MainTheoremCertificate {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn verify_main_theorem(lambda: &Partition) -> Result<MainTheoremCertificate, FschurError> {
    verify_main_theorem_with(lambda, Strategy::ViaGt, &RectWeights::default())
}

pub fn verify_main_theorem_with(
    lambda: &Partition,
    strategy: Strategy,
    weights: &RectWeights,
) -> Result<MainTheoremCertificate, FschurError> {
    let n = lambda.n();
    if n == 0 {
        return Err(FschurError::NoRows);
    }
    let m = natural_columns(lambda);
    let z = partition_function_in(&BoundarySpec::for_partition(lambda), strategy, weights)?;
    let s = factorial_schur(lambda, m)?;
    let lhs = z.shift(&vec![0; n], &a_prefactor_exponents(lambda, m))?;
    let delta: Vec<i32> = (0..n as i32).collect();
    let rhs = s.shift(&delta, &vec![0; m])?;
    Ok(MainTheoremCertificate {
        lambda: lambda.clone(),
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{delta_normalized, partition_function};
    use proptest::prelude::{prop_assert, prop_assert_eq, proptest, ProptestConfig};
    use proptest::strategy::Strategy as PropStrategy;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn default_column_values() {
        let want: Vec<Rational> = [1, 2, 5, 11, 23, 47].into_iter().map(r).collect();
        assert_eq!(default_a_values(6), want);
        assert!(default_a_values(0).is_empty());
    }

    #[test]
    fn small_factorial_schur() {
        assert_eq!(
            factorial_schur(&p(&[0]), 1).unwrap().render_canonical(),
            "1"
        );
        assert_eq!(
            factorial_schur(&p(&[1]), 2).unwrap().render_canonical(),
            "-1*a1 + x1"
        );
        assert!(factorial_schur(&p(&[2]), 2).is_err());
        assert!(factorial_schur(&p(&[]), 2).is_err());
    }

    #[test]
    fn two_by_one_by_hand() {
        // λ = (1,1), n = 2: the single tableau with column (1,2) gives
        // (x1 - a1)(x2 - a1), since the contents are 0 and -1.
        let s = factorial_schur(&p(&[1, 1]), 3).unwrap();
        let space = s.space();
        let x = |i| LaurentPoly::var(space, Var::X(i)).unwrap();
        let a = |j| LaurentPoly::var(space, Var::A(j)).unwrap();
        assert_eq!(s, &(&x(1) - &a(1)) * &(&x(2) - &a(1)));
    }

    #[test]
    fn a_mu_targets() {
        assert_eq!(a_mu(&p(&[0]), 1).unwrap().targets(), &[1]);
        assert_eq!(a_mu(&p(&[1]), 2).unwrap().targets(), &[2]);
        assert_eq!(a_mu(&p(&[2, 1, 0]), 5).unwrap().targets(), &[5, 3, 1]);
        assert!(a_mu(&p(&[2, 1, 0]), 4).is_err());
    }

    #[test]
    fn vanishing_examples() {
        let v = vanishing_check(&p(&[1]), &p(&[0]), Target::Z).unwrap();
        assert!(v.vanishes() && v.passed());
        let v = vanishing_check(&p(&[1]), &p(&[1]), Target::Z).unwrap();
        assert_eq!(v.value.render_canonical(), "a1^-1*a2 + -1");
        assert_eq!(v.diagonal_matches, Some(true));
        let v = vanishing_check(&p(&[1]), &p(&[1]), Target::Schur).unwrap();
        assert_eq!(v.value.render_canonical(), "a2 + -1*a1");
        assert!(v.passed());
        assert!(vanishing_check(&p(&[1]), &p(&[1, 0]), Target::Z).is_err());
    }

    #[test]
    fn expansion_examples() {
        let one = LaurentPoly::one(VarSpace::new(2, 1).unwrap());
        let e = expand_in_factorial_basis(&one, 0, &default_a_values(3)).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeff(&p(&[0, 0])), r(1));

        let z = partition_function(&p(&[1]));
        let e = expand_in_factorial_basis(&z, 1, &[r(1), r(2)]).unwrap();
        assert_eq!(e.coeff(&p(&[1])), r(1));
        assert_eq!(e.coeff(&p(&[0])), r(0));

        let a = [r(3), r(7)];
        let e = expand_in_factorial_basis(&z, 1, &a).unwrap();
        assert_eq!(e.coeff(&p(&[1])), Rational::new(1.into(), 3.into()));
    }

    #[test]
    fn expansion_errors() {
        let s = VarSpace::new(2, 2).unwrap();
        let x1 = LaurentPoly::var(s, Var::X(1)).unwrap();
        let a = default_a_values(4);
        assert_eq!(
            expand_in_factorial_basis(&x1, 1, &a),
            Err(FschurError::NotSymmetric)
        );
        let inv = LaurentPoly::monomial(s, &[-1, -1], &[0, 0]).unwrap();
        assert_eq!(
            expand_in_factorial_basis(&inv, 1, &a),
            Err(FschurError::NotPolynomial)
        );
        let sq = &x1 * &LaurentPoly::var(s, Var::X(2)).unwrap();
        assert!(matches!(
            expand_in_factorial_basis(&sq, 1, &a),
            Err(FschurError::DegreeTooHigh { .. })
        ));
        assert!(matches!(
            expand_in_factorial_basis(&sq, 2, &[r(1), r(2), r(1), r(4)]),
            Err(FschurError::RepeatedAValues(1, 3))
        ));
        assert!(matches!(
            expand_in_factorial_basis(&sq, 2, &a[..3]),
            Err(FschurError::TooFewAValues { .. })
        ));
    }

    #[test]
    fn main_theorem_examples() {
        for l in [p(&[0]), p(&[1]), p(&[1, 0]), p(&[2, 1]), p(&[1, 1, 0])] {
            let cert = verify_main_theorem(&l).unwrap();
            assert!(cert.passed(), "{l}: {} vs {}", cert.lhs, cert.rhs);
        }
        let cert = verify_main_theorem(&p(&[1])).unwrap();
        assert_eq!(cert.lhs.render_canonical(), "-1*a1 + x1");
    }

    #[test]
    fn expanding_the_partition_function() {
        let a = default_a_values(8);
        for l in [p(&[1, 0]), p(&[2, 1]), p(&[1, 1, 0])] {
            let z = delta_normalized(&partition_function(&l));
            let e = expand_in_factorial_basis(&z, l.size(), &a).unwrap();
            let pref = a_prefactor_exponents(&l, z.space().na());
            let mut expected = Rational::one();
            for (k, &ex) in pref.iter().enumerate() {
                expected /= a[k].pow(ex);
            }
            let nz: Vec<_> = e.nonzero().collect();
            assert_eq!(nz, vec![(&l, &expected)], "{l}");
        }
    }

    fn small_partition() -> impl PropStrategy<Value = Partition> {
        (1usize..=3)
            .prop_flat_map(|n| proptest::collection::vec(0u32..=3, n))
            .prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn factorial_schur_is_symmetric_with_degree_size(l in small_partition()) {
            let s = factorial_schur(&l, natural_columns(&l)).unwrap();
            prop_assert!(s.is_symmetric_in_x());
            prop_assert!(s.is_polynomial());
            prop_assert_eq!(s.x_degree(), Some(l.size() as i64));
        }

        #[test]
        fn self_expansion_is_a_unit_vector(l in small_partition()) {
            let s = factorial_schur(&l, natural_columns(&l)).unwrap();
            let a = default_a_values(l.n() + l.size() as usize + 1);
            let e = expand_in_factorial_basis(&s, l.size(), &a).unwrap();
            let nz: Vec<_> = e.nonzero().collect();
            let one = Rational::one();
            prop_assert_eq!(nz, vec![(&l, &one)]);
        }

        #[test]
        fn expansion_reconstructs_at_other_points(l in small_partition(), shift in 1i64..50) {
            let s = factorial_schur(&l, natural_columns(&l)).unwrap();
            let z = &s + &LaurentPoly::constant(s.space(), 3);
            let a = default_a_values(l.n() + l.size() as usize);
            let e = expand_in_factorial_basis(&z, l.size(), &a).unwrap();
            let xs: Vec<Rational> = (0..l.n() as i64).map(|k| r(shift + 7 * k)).collect();
            let direct = z.evaluate(&xs, &a[..z.space().na()]).unwrap();
            prop_assert_eq!(e.evaluate(&xs), direct);
        }
    }
}
