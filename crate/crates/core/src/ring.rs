//! Exact multivariate Laurent polynomials over the integers.
//!
//! Every polynomial lives in a [`VarSpace`]: `nx` row variables `x1..xn` and
//! `na` column variables `a1..am`. Exponents may be negative. Terms are kept
//! sparse in a map whose key order is the canonical term order: total degree
//! (over all variables) ascending, then lexicographic on the concatenated
//! exponent vector `(x-exponents, a-exponents)`.
//!
//! Variable names ([`Var`]) are 1-based, so `Var::X(1)` is `x1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational scalar. Always normalized: positive denominator, coprime parts.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable spaces differ: {0} vs {1}")]
    SpaceMismatch(VarSpace, VarSpace),
    #[error("a variable space needs at least one x and one a variable")]
    EmptySpace,
    #[error("variable {0} is not in {1}")]
    UnknownVariable(Var, VarSpace),
    #[error("exponent vectors have lengths ({got_x}, {got_a}), space needs ({nx}, {na})")]
    ExponentLength {
        nx: usize,
        na: usize,
        got_x: usize,
        got_a: usize,
    },
    #[error("monomial binding for {0} has zero coefficient")]
    ZeroBinding(Var),
    #[error("{0} is bound to zero but occurs with a negative exponent")]
    ZeroToNegativePower(Var),
    #[error("substitution left the non-integral coefficient {0}")]
    NonIntegral(Rational),
    #[error("not a permutation of {0} elements")]
    NotAPermutation(usize),
    #[error("cannot move {from} into the smaller space {to}")]
    Shrink { from: VarSpace, to: VarSpace },
    #[error("invalid integer coefficient {0:?}")]
    BadCoefficient(String),
    #[error("expected {expected} values for {what}, got {got}")]
    ValueCount {
        what: &'static str,
        expected: usize,
        got: usize,
    },
}

/// The two alphabets a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSpace {
    nx: usize,
    na: usize,
}

impl VarSpace {
    pub fn new(nx: usize, na: usize) -> Result<Self, RingError> {
        if nx == 0 || na == 0 {
            return Err(RingError::EmptySpace);
        }
        Ok(VarSpace { nx, na })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn na(&self) -> usize {
        self.na
    }

    fn len(&self) -> usize {
        self.nx + self.na
    }

    fn slot(&self, var: Var) -> Result<usize, RingError> {
        match var {
            Var::X(i) if (1..=self.nx).contains(&i) => Ok(i - 1),
            Var::A(j) if (1..=self.na).contains(&j) => Ok(self.nx + j - 1),
            _ => Err(RingError::UnknownVariable(var, *self)),
        }
    }

    fn var_at(&self, slot: usize) -> Var {
        if slot < self.nx {
            Var::X(slot + 1)
        } else {
            Var::A(slot - self.nx + 1)
        }
    }
}

impl fmt::Display for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x1..x{}; a1..a{})", self.nx, self.na)
    }
}

/// A variable name, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    A(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::A(j) => write!(f, "a{j}"),
        }
    }
}

/// One term `coef * x^ex * a^ea`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coef: BigInt,
    pub ex: Vec<i32>,
    pub ea: Vec<i32>,
}

impl Monomial {
    pub fn new(coef: impl Into<BigInt>, ex: Vec<i32>, ea: Vec<i32>) -> Self {
        Monomial {
            coef: coef.into(),
            ex,
            ea,
        }
    }

    /// The unit monomial consisting of a single variable.
    pub fn var(space: VarSpace, var: Var) -> Result<Self, RingError> {
        let slot = space.slot(var)?;
        let mut ex = vec![0; space.nx];
        let mut ea = vec![0; space.na];
        if slot < space.nx {
            ex[slot] = 1;
        } else {
            ea[slot - space.nx] = 1;
        }
        Ok(Monomial::new(1, ex, ea))
    }

    fn check_space(&self, space: VarSpace) -> Result<(), RingError> {
        if self.ex.len() != space.nx || self.ea.len() != space.na {
            return Err(RingError::ExponentLength {
                nx: space.nx,
                na: space.na,
                got_x: self.ex.len(),
                got_a: self.ea.len(),
            });
        }
        Ok(())
    }
}

/// Map key realizing the canonical order. Field order matters for the derived `Ord`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key {
    degree: i64,
    exps: Vec<i32>,
}

impl Key {
    fn new(exps: Vec<i32>) -> Self {
        let degree = exps.iter().map(|&e| i64::from(e)).sum();
        Key { degree, exps }
    }
}

/// An exact Laurent polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "wire::Poly", into = "wire::Poly")]
pub struct LaurentPoly {
    space: VarSpace,
    terms: BTreeMap<Key, BigInt>,
}

/// What a variable is replaced by in [`LaurentPoly::substitute`].
#[derive(Debug, Clone, PartialEq)]
pub enum Binding {
    Monomial(Monomial),
    Scalar(Rational),
}

pub type Bindings = BTreeMap<Var, Binding>;

/// Result of a substitution: still symbolic, or fully evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum Substituted {
    Poly(LaurentPoly),
    Scalar(Rational),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Applies a binary (or, for `Neg`, unary) ring operation. `q` is ignored for `Neg`.
pub fn arith(op: ArithOp, p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, RingError> {
    match op {
        ArithOp::Add => p.try_add(q),
        ArithOp::Sub => p.try_sub(q),
        ArithOp::Mul => p.try_mul(q),
        ArithOp::Neg => Ok(-p),
    }
}

impl LaurentPoly {
    pub fn zero(space: VarSpace) -> Self {
        LaurentPoly {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, 1)
    }

    pub fn constant(space: VarSpace, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(space);
        p.accumulate(vec![0; space.len()], c.into());
        p
    }

    pub fn var(space: VarSpace, var: Var) -> Result<Self, RingError> {
        Self::from_monomial(space, Monomial::var(space, var)?)
    }

    /// `x1^ex[0] * .. * a1^ea[0] * ..` with coefficient 1.
    pub fn monomial(space: VarSpace, ex: &[i32], ea: &[i32]) -> Result<Self, RingError> {
        Self::from_monomial(space, Monomial::new(1, ex.to_vec(), ea.to_vec()))
    }

    pub fn from_monomial(space: VarSpace, m: Monomial) -> Result<Self, RingError> {
        m.check_space(space)?;
        let mut p = Self::zero(space);
        let mut exps = m.ex;
        exps.extend(m.ea);
        p.accumulate(exps, m.coef);
        Ok(p)
    }

    pub fn from_monomials(
        space: VarSpace,
        terms: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self, RingError> {
        let mut p = Self::zero(space);
        for m in terms {
            m.check_space(space)?;
            let mut exps = m.ex;
            exps.extend(m.ea);
            p.accumulate(exps, m.coef);
        }
        Ok(p)
    }

    fn accumulate(&mut self, exps: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Key::new(exps);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        let nx = self.space.nx;
        self.terms.iter().map(move |(k, c)| Monomial {
            coef: c.clone(),
            ex: k.exps[..nx].to_vec(),
            ea: k.exps[nx..].to_vec(),
        })
    }

    fn ensure_same(&self, other: &Self) -> Result<(), RingError> {
        if self.space != other.space {
            return Err(RingError::SpaceMismatch(self.space, other.space));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.ensure_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.accumulate(k.exps.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.ensure_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.accumulate(k.exps.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.ensure_same(other)?;
        let mut out = Self::zero(self.space);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let exps = k1.exps.iter().zip(&k2.exps).map(|(a, b)| a + b).collect();
                out.accumulate(exps, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.space);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the unit monomial `x^ex * a^ea`; a plain exponent shift.
    pub fn shift(&self, ex: &[i32], ea: &[i32]) -> Result<Self, RingError> {
        Monomial::new(1, ex.to_vec(), ea.to_vec()).check_space(self.space)?;
        let shift: Vec<i32> = ex.iter().chain(ea).copied().collect();
        let mut out = Self::zero(self.space);
        for (k, c) in &self.terms {
            let exps = k.exps.iter().zip(&shift).map(|(a, b)| a + b).collect();
            out.terms.insert(Key::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Largest total x-degree over all terms; `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<i64> {
        let nx = self.space.nx;
        self.terms
            .keys()
            .map(|k| k.exps[..nx].iter().map(|&e| i64::from(e)).sum())
            .max()
    }

    /// True when no exponent, x or a, is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|k| k.exps.iter().all(|&e| e >= 0))
    }

    /// True when no x-exponent is negative (a-exponents unrestricted).
    pub fn is_polynomial_in_x(&self) -> bool {
        let nx = self.space.nx;
        self.terms
            .keys()
            .all(|k| k.exps[..nx].iter().all(|&e| e >= 0))
    }

    /// Re-indexes the x-variables: `x_{k+1}` becomes `x_{sigma[k]+1}`.
    ///
    /// `sigma` is a 0-based permutation of `0..nx`.
    pub fn permute_x(&self, sigma: &[usize]) -> Result<Self, RingError> {
        let nx = self.space.nx;
        let mut seen = vec![false; nx];
        if sigma.len() != nx {
            return Err(RingError::NotAPermutation(nx));
        }
        for &s in sigma {
            if s >= nx || std::mem::replace(&mut seen[s], true) {
                return Err(RingError::NotAPermutation(nx));
            }
        }
        let mut out = Self::zero(self.space);
        for (k, c) in &self.terms {
            let mut exps = k.exps.clone();
            for (from, &to) in sigma.iter().enumerate() {
                exps[to] = k.exps[from];
            }
            out.terms.insert(Key::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Swaps `x_i` and `x_{i+1}` (1-based `i`).
    pub fn transpose_x(&self, i: usize) -> Result<Self, RingError> {
        let nx = self.space.nx;
        if i == 0 || i >= nx {
            return Err(RingError::UnknownVariable(Var::X(i + 1), self.space));
        }
        let mut sigma: Vec<usize> = (0..nx).collect();
        sigma.swap(i - 1, i);
        self.permute_x(&sigma)
    }

    /// Fixed by every adjacent transposition of the x-variables.
    pub fn is_symmetric_in_x(&self) -> bool {
        (1..self.space.nx).all(|i| self.transpose_x(i).is_ok_and(|q| &q == self))
    }

    /// Embeds into a space with at least as many variables of each kind.
    pub fn extend_space(&self, to: VarSpace) -> Result<Self, RingError> {
        if to.nx < self.space.nx || to.na < self.space.na {
            return Err(RingError::Shrink {
                from: self.space,
                to,
            });
        }
        let nx = self.space.nx;
        let mut out = Self::zero(to);
        for (k, c) in &self.terms {
            let mut exps = vec![0; to.len()];
            exps[..nx].copy_from_slice(&k.exps[..nx]);
            exps[to.nx..to.nx + self.space.na].copy_from_slice(&k.exps[nx..]);
            out.terms.insert(Key::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Simultaneous substitution of variables by monomials or rational scalars.
    ///
    /// If every variable of the space is bound to a scalar the result is a
    /// [`Substituted::Scalar`]. Otherwise the result must again have integer
    /// coefficients.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Substituted, RingError> {
        let space = self.space;
        let mut slots: Vec<(usize, Var, &Binding)> = Vec::with_capacity(bindings.len());
        for (&var, binding) in bindings {
            let slot = space.slot(var)?;
            if let Binding::Monomial(m) = binding {
                m.check_space(space)?;
                if m.coef.is_zero() {
                    return Err(RingError::ZeroBinding(var));
                }
            }
            slots.push((slot, var, binding));
        }

        let mut acc: BTreeMap<Key, Rational> = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut coef = Rational::from_integer(c.clone());
            let mut exps = k.exps.clone();
            for &(slot, _, _) in &slots {
                exps[slot] = 0;
            }
            for &(slot, var, binding) in &slots {
                let e = k.exps[slot];
                if e == 0 {
                    continue;
                }
                match binding {
                    Binding::Scalar(r) => {
                        if r.is_zero() {
                            if e < 0 {
                                return Err(RingError::ZeroToNegativePower(var));
                            }
                            coef = Rational::zero();
                        } else {
                            coef *= r.pow(e);
                        }
                    }
                    Binding::Monomial(m) => {
                        coef *= Rational::from_integer(m.coef.clone()).pow(e);
                        for (dst, src) in exps.iter_mut().zip(m.ex.iter().chain(&m.ea)) {
                            *dst += e * src;
                        }
                    }
                }
            }
            if coef.is_zero() {
                continue;
            }
            let key = Key::new(exps);
            let slot = acc.entry(key).or_insert_with(Rational::zero);
            *slot += coef;
        }
        acc.retain(|_, c| !c.is_zero());

        let all_scalar = (0..space.len())
            .all(|s| matches!(bindings.get(&space.var_at(s)), Some(Binding::Scalar(_))));
        if all_scalar {
            return Ok(Substituted::Scalar(
                acc.into_values().fold(Rational::zero(), |a, b| a + b),
            ));
        }
        let mut out = Self::zero(space);
        for (k, c) in acc {
            if !c.is_integer() {
                return Err(RingError::NonIntegral(c));
            }
            out.terms.insert(k, c.to_integer());
        }
        Ok(Substituted::Poly(out))
    }

    /// Substitution where every binding is a monomial, so the result stays symbolic.
    pub fn substitute_monomials(
        &self,
        bindings: &BTreeMap<Var, Monomial>,
    ) -> Result<Self, RingError> {
        let b: Bindings = bindings
            .iter()
            .map(|(v, m)| (*v, Binding::Monomial(m.clone())))
            .collect();
        match self.substitute(&b)? {
            Substituted::Poly(p) => Ok(p),
            Substituted::Scalar(_) => unreachable!("monomial bindings never evaluate to a scalar"),
        }
    }

    /// Full numeric evaluation at `x = xs`, `a = as_`.
    pub fn evaluate(&self, xs: &[Rational], as_: &[Rational]) -> Result<Rational, RingError> {
        if xs.len() != self.space.nx {
            return Err(RingError::ValueCount {
                what: "x",
                expected: self.space.nx,
                got: xs.len(),
            });
        }
        if as_.len() != self.space.na {
            return Err(RingError::ValueCount {
                what: "a",
                expected: self.space.na,
                got: as_.len(),
            });
        }
        let mut total = Rational::zero();
        for (k, c) in &self.terms {
            let mut term = Rational::from_integer(c.clone());
            for (slot, (&e, v)) in k.exps.iter().zip(xs.iter().chain(as_)).enumerate() {
                if e == 0 {
                    continue;
                }
                if v.is_zero() {
                    if e < 0 {
                        return Err(RingError::ZeroToNegativePower(self.space.var_at(slot)));
                    }
                    term = Rational::zero();
                    break;
                }
                term *= v.pow(e);
            }
            total += term;
        }
        Ok(total)
    }

    /// The deterministic text form used as the equality surface in reports.
    pub fn render_canonical(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let nx = self.space.nx;
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let factors: Vec<String> = k
                    .exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(slot, &e)| {
                        let name = if slot < nx {
                            format!("x{}", slot + 1)
                        } else {
                            format!("a{}", slot - nx + 1)
                        };
                        if e == 1 {
                            name
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
                if factors.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    factors.join("*")
                } else {
                    format!("{}*{}", c, factors.join("*"))
                }
            })
            .collect();
        rendered.join(" + ")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_canonical())
    }
}

// Operator impls panic on mismatched spaces; the `try_*` methods report it instead.
macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$try(rhs)
                    .expect("operands live in different variable spaces")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            space: self.space,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

mod wire {
    use super::*;

    #[derive(Serialize, Deserialize)]
    pub struct Term {
        pub c: String,
        pub x: Vec<i32>,
        pub a: Vec<i32>,
    }

    #[derive(Serialize, Deserialize)]
    pub struct Poly {
        pub nx: usize,
        pub na: usize,
        pub terms: Vec<Term>,
    }

    impl From<LaurentPoly> for Poly {
        fn from(p: LaurentPoly) -> Self {
            Poly {
                nx: p.space.nx,
                na: p.space.na,
                terms: p
                    .monomials()
                    .map(|m| Term {
                        c: m.coef.to_string(),
                        x: m.ex,
                        a: m.ea,
                    })
                    .collect(),
            }
        }
    }

    impl TryFrom<Poly> for LaurentPoly {
        type Error = RingError;
        fn try_from(w: Poly) -> Result<Self, RingError> {
            let space = VarSpace::new(w.nx, w.na)?;
            let mut monomials = Vec::with_capacity(w.terms.len());
            for t in w.terms {
                let coef: BigInt =
                    t.c.parse()
                        .map_err(|_| RingError::BadCoefficient(t.c.clone()))?;
                monomials.push(Monomial::new(coef, t.x, t.a));
            }
            LaurentPoly::from_monomials(space, monomials)
        }
    }
}
