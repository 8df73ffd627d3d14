//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] is a map from exponent vectors to nonzero rational
//! coefficients over an explicit, ordered [`VarList`]. Canonical form is
//! maintained by every operation: no zero coefficients are stored and terms
//! are kept in graded-lexicographic order, so equality is structural.
//!
//! Arithmetic between polynomials over different variable lists is a
//! programming error: the operators panic. Operations driven by caller data
//! (evaluation, composition, name lookup) return [`PolyError`] instead.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::rational::{ComplexRational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VarMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable names must be non-empty and distinct")]
    InvalidVarList,
}

/// Ordered list of distinct variable names, shared by the polynomials of one
/// chart. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarList(Arc<[String]>);

impl VarList {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.iter().any(String::is_empty) {
            return Err(PolyError::InvalidVarList);
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(PolyError::InvalidVarList);
            }
        }
        Ok(VarList(names.into()))
    }

    /// `x1..xn` style list: `numbered("x", 3)` is `x1, x2, x3`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self, PolyError> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Debug for VarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarList[{}]", self.0.join(", "))
    }
}

impl fmt::Display for VarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(", "))
    }
}

/// Exponent vector of one term. Ordered by total degree, then
/// lexicographically, so `BTreeMap` iteration is graded-lex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn constant(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn of_var(n_vars: usize, var: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[var] = 1;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn product(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over a fixed variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: VarList,
    terms: BTreeMap<Monomial, Rational>,
}

fn assert_same_vars(a: &VarList, b: &VarList) {
    assert_eq!(
        a, b,
        "polynomial variable lists differ: [{a}] vs [{b}]"
    );
}

impl Polynomial {
    pub fn zero(vars: &VarList) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarList, value: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.insert_term(Monomial::constant(vars.len()), value);
        p
    }

    pub fn one(vars: &VarList) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The variable named `name`, as a polynomial.
    pub fn variable(vars: &VarList, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(vars, i))
    }

    /// The `i`-th variable as a polynomial. Panics if out of range.
    pub fn var_at(vars: &VarList, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        let mut p = Self::zero(vars);
        p.insert_term(Monomial::of_var(vars.len(), i), Rational::one());
        p
    }

    /// Single term `coeff * prod vars[i]^exponents[i]`.
    pub fn monomial(vars: &VarList, exponents: &[u32], coeff: Rational) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.insert_term(Monomial(exponents.to_vec()), coeff);
        p
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// `Some(value)` when the polynomial is constant (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn insert_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial(&self, var: &str) -> Result<Self, PolyError> {
        let i = self
            .vars
            .index_of(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        Ok(self.partial_at(i))
    }

    /// Formal partial derivative with respect to variable `i`.
    /// Panics if the index is out of range.
    pub fn partial_at(&self, i: usize) -> Self {
        assert!(i < self.vars.len(), "variable index {i} out of range");
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.insert_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Exact evaluation. `point` assigns every variable, in variable order.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= point[v].clone().pow(e as i32);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one
    /// target variable list, which becomes the result's list.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Self, PolyError> {
        if images.len() != self.vars.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target = images[0].vars.clone();
        for img in images {
            if img.vars != target {
                return Err(PolyError::VarMismatch {
                    left: target.to_string(),
                    right: img.vars.to_string(),
                });
            }
        }
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[v].pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Reinterprets the polynomial over a larger variable list; every
    /// variable must exist (by name) in `target`.
    pub fn embed(&self, target: &VarList) -> Result<Self, PolyError> {
        let mut index = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            index.push(
                target
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?,
            );
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (v, &e) in m.0.iter().enumerate() {
                exps[index[v]] = e;
            }
            out.insert_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_same_vars(&self.vars, &rhs.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_same_vars(&self.vars, &rhs.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_same_vars(&self.vars, &rhs.vars);
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.product(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Polynomial with complex rational coefficients, stored as a real and an
/// imaginary part over one shared variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexPolynomial {
    re: Polynomial,
    im: Polynomial,
}

impl ComplexPolynomial {
    /// Panics if the parts have different variable lists.
    pub fn new(re: Polynomial, im: Polynomial) -> Self {
        assert_same_vars(re.vars(), im.vars());
        ComplexPolynomial { re, im }
    }

    pub fn from_real(re: Polynomial) -> Self {
        let im = Polynomial::zero(re.vars());
        ComplexPolynomial { re, im }
    }

    pub fn zero(vars: &VarList) -> Self {
        Self::from_real(Polynomial::zero(vars))
    }

    pub fn one(vars: &VarList) -> Self {
        Self::from_real(Polynomial::one(vars))
    }

    pub fn constant(vars: &VarList, value: ComplexRational) -> Self {
        ComplexPolynomial {
            re: Polynomial::constant(vars, value.re),
            im: Polynomial::constant(vars, value.im),
        }
    }

    pub fn vars(&self) -> &VarList {
        self.re.vars()
    }

    pub fn re(&self) -> &Polynomial {
        &self.re
    }

    pub fn im(&self) -> &Polynomial {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        ComplexPolynomial {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn constant_value(&self) -> Option<ComplexRational> {
        Some(ComplexRational::new(
            self.re.constant_value()?,
            self.im.constant_value()?,
        ))
    }

    pub fn scaled(&self, factor: &ComplexRational) -> Self {
        ComplexPolynomial {
            re: &self.re.scaled(&factor.re) - &self.im.scaled(&factor.im),
            im: &self.re.scaled(&factor.im) + &self.im.scaled(&factor.re),
        }
    }

    pub fn partial_at(&self, i: usize) -> Self {
        ComplexPolynomial {
            re: self.re.partial_at(i),
            im: self.im.partial_at(i),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<ComplexRational, PolyError> {
        Ok(ComplexRational::new(
            self.re.eval(point)?,
            self.im.eval(point)?,
        ))
    }

    /// Substitutes real polynomials for the variables of both parts.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Self, PolyError> {
        Ok(ComplexPolynomial {
            re: self.re.compose(images)?,
            im: self.im.compose(images)?,
        })
    }

    pub fn embed(&self, target: &VarList) -> Result<Self, PolyError> {
        Ok(ComplexPolynomial {
            re: self.re.embed(target)?,
            im: self.im.embed(target)?,
        })
    }
}

impl Add for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn add(self, rhs: &ComplexPolynomial) -> ComplexPolynomial {
        ComplexPolynomial {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn sub(self, rhs: &ComplexPolynomial) -> ComplexPolynomial {
        ComplexPolynomial {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn mul(self, rhs: &ComplexPolynomial) -> ComplexPolynomial {
        ComplexPolynomial {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Mul<&Polynomial> for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn mul(self, rhs: &Polynomial) -> ComplexPolynomial {
        ComplexPolynomial {
            re: &self.re * rhs,
            im: &self.im * rhs,
        }
    }
}

impl Neg for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn neg(self) -> ComplexPolynomial {
        ComplexPolynomial {
            re: -&self.re,
            im: -&self.im,
        }
    }
}
