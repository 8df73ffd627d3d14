//! Differential forms on coordinate charts.
//!
//! A [`DifferentialForm`] of degree `k` on a [`Chart`] stores one
//! [`ComplexPolynomial`] coefficient per strictly increasing `k`-tuple of
//! coordinate indices. Canonicalization happens at construction time: index
//! tuples are sorted with the sign of the sorting permutation, repeated
//! indices annihilate, and zero coefficients are dropped. Equality of forms
//! is therefore structural.
//!
//! As in [`crate::poly`], structural misuse (mixing charts, contracting a
//! 0-form) panics, while data-driven operations return errors.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::linalg;
use crate::poly::{ComplexPolynomial, PolyError, Polynomial, VarList};
use crate::rational::{ComplexRational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("point assigns {got} coordinates, chart has {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("expected {expected} vectors, got {got}")]
    VectorCount { expected: usize, got: usize },
    #[error("vector has {got} components, chart has {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error("form coefficients are not constant")]
    NonConstantCoefficients,
    #[error("map expects source chart `{expected}`, got `{found}`")]
    SourceChartMismatch { expected: String, found: String },
    #[error("{0} components supplied for a {1}-dimensional chart")]
    ComponentCount(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A named coordinate chart: an ordered list of distinct coordinate names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chart {
    name: String,
    coords: VarList,
}

impl Chart {
    pub fn new(name: impl Into<String>, coords: VarList) -> Self {
        Chart {
            name: name.into(),
            coords,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coords(&self) -> &VarList {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord_name(&self, i: usize) -> &str {
        self.coords.name(i)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.coords)
    }
}

fn assert_same_chart(a: &Chart, b: &Chart) {
    assert_eq!(a, b, "charts differ: {a} vs {b}");
}

/// Sorts `indices` in place, returning the sign of the sorting permutation,
/// or `None` when an index repeats (the term annihilates).
fn sort_indices(indices: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && indices[j - 1] == indices[j] {
            return None;
        }
    }
    Some(sign)
}

/// Merges two strictly increasing index tuples, returning the merged tuple
/// and the sign of the interleaving permutation; `None` on a shared index.
fn merge_indices(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                inversions += a.len() - i;
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, if inversions % 2 == 0 { 1 } else { -1 }))
}

/// A degree-`k` alternating form with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DifferentialForm {
    chart: Chart,
    degree: usize,
    terms: BTreeMap<Vec<usize>, ComplexPolynomial>,
}

impl DifferentialForm {
    pub fn zero(chart: &Chart, degree: usize) -> Self {
        DifferentialForm {
            chart: chart.clone(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A degree-0 form. Panics if the coefficient's variables are not the
    /// chart coordinates.
    pub fn scalar(chart: &Chart, value: ComplexPolynomial) -> Self {
        assert_eq!(
            value.vars(),
            chart.coords(),
            "scalar coefficient must live on the chart"
        );
        let mut form = Self::zero(chart, 0);
        form.add_term(&[], value);
        form
    }

    pub fn real_scalar(chart: &Chart, value: Polynomial) -> Self {
        Self::scalar(chart, ComplexPolynomial::from_real(value))
    }

    /// The coordinate differential `d(coords[i])`.
    pub fn coordinate_differential(chart: &Chart, i: usize) -> Self {
        assert!(i < chart.dim(), "coordinate index {i} out of range");
        let mut form = Self::zero(chart, 1);
        form.add_term(&[i], ComplexPolynomial::one(chart.coords()));
        form
    }

    /// Builds a form from raw terms: tuples are canonicalized, repeated
    /// indices annihilate, like terms merge, zero coefficients vanish.
    /// Panics on out-of-range indices, wrong tuple lengths, or coefficients
    /// over a different variable list.
    pub fn from_terms<I>(chart: &Chart, degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, ComplexPolynomial)>,
    {
        let mut form = Self::zero(chart, degree);
        for (indices, coeff) in terms {
            form.add_term(&indices, coeff);
        }
        form
    }

    fn add_term(&mut self, indices: &[usize], coeff: ComplexPolynomial) {
        assert_eq!(indices.len(), self.degree, "index tuple length");
        assert_eq!(
            coeff.vars(),
            self.chart.coords(),
            "coefficient must live on the chart"
        );
        assert!(
            indices.iter().all(|&i| i < self.chart.dim()),
            "coordinate index out of range"
        );
        if coeff.is_zero() {
            return;
        }
        let mut sorted = indices.to_vec();
        let Some(sign) = sort_indices(&mut sorted) else {
            return;
        };
        let signed = if sign < 0 { -&coeff } else { coeff };
        match self.terms.entry(sorted) {
            Entry::Vacant(e) => {
                e.insert(signed);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &signed;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic index order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &ComplexPolynomial)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Coefficient of a strictly increasing index tuple (zero when absent).
    pub fn coefficient(&self, indices: &[usize]) -> ComplexPolynomial {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "coefficient lookup expects a strictly increasing tuple"
        );
        self.terms
            .get(indices)
            .cloned()
            .unwrap_or_else(|| ComplexPolynomial::zero(self.chart.coords()))
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(ComplexPolynomial::is_real)
    }

    /// Form whose coefficients are the real parts of this form's.
    pub fn real_part(&self) -> Self {
        DifferentialForm {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.re().is_zero())
                .map(|(k, c)| (k.clone(), ComplexPolynomial::from_real(c.re().clone())))
                .collect(),
        }
    }

    /// Form whose coefficients are the imaginary parts of this form's.
    pub fn imaginary_part(&self) -> Self {
        DifferentialForm {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.im().is_zero())
                .map(|(k, c)| (k.clone(), ComplexPolynomial::from_real(c.im().clone())))
                .collect(),
        }
    }

    pub fn scaled(&self, factor: &ComplexRational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.chart, self.degree);
        }
        DifferentialForm {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.scaled(factor)))
                .collect(),
        }
    }

    /// Wedge product. Panics on a chart mismatch.
    pub fn wedge(&self, other: &Self) -> Self {
        assert_same_chart(&self.chart, &other.chart);
        let degree = self.degree + other.degree;
        let mut out = Self::zero(&self.chart, degree);
        if degree > self.chart.dim() {
            return out;
        }
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                let Some((merged, sign)) = merge_indices(ia, ib) else {
                    continue;
                };
                let mut coeff = ca * cb;
                if sign < 0 {
                    coeff = -&coeff;
                }
                out.add_term(&merged, coeff);
            }
        }
        out
    }

    /// Exterior derivative: `d(f dx_I) = sum_v (∂f/∂v) dv ∧ dx_I`.
    pub fn exterior_derivative(&self) -> Self {
        let dim = self.chart.dim();
        let mut out = Self::zero(&self.chart, self.degree + 1);
        if self.degree + 1 > dim {
            return out;
        }
        for (indices, coeff) in &self.terms {
            for v in 0..dim {
                if indices.contains(&v) {
                    continue;
                }
                let df = coeff.partial_at(v);
                if df.is_zero() {
                    continue;
                }
                let mut with_v = Vec::with_capacity(indices.len() + 1);
                with_v.push(v);
                with_v.extend_from_slice(indices);
                out.add_term(&with_v, df);
            }
        }
        out
    }

    /// Interior product `Y ⌟ self`: contraction in the first slot.
    /// Panics on a chart mismatch or a degree-0 form.
    pub fn interior_product(&self, field: &VectorField) -> Self {
        assert_same_chart(&self.chart, &field.chart);
        assert!(self.degree >= 1, "interior product needs degree >= 1");
        let mut out = Self::zero(&self.chart, self.degree - 1);
        for (indices, coeff) in &self.terms {
            for (slot, &idx) in indices.iter().enumerate() {
                let component = &field.components[idx];
                if component.is_zero() {
                    continue;
                }
                let mut rest: Vec<usize> = indices.clone();
                rest.remove(slot);
                let mut c = coeff * component;
                if slot % 2 == 1 {
                    c = -&c;
                }
                out.add_term(&rest, c);
            }
        }
        out
    }

    /// Substitutes the point into every coefficient, leaving a form with
    /// constant coefficients on the same chart.
    pub fn eval(&self, point: &[Rational]) -> Result<Self, ExteriorError> {
        if point.len() != self.chart.dim() {
            return Err(ExteriorError::PointLength {
                expected: self.chart.dim(),
                got: point.len(),
            });
        }
        let coords = self.chart.coords();
        let mut out = Self::zero(&self.chart, self.degree);
        for (indices, coeff) in &self.terms {
            let value = coeff.eval(point)?;
            out.add_term(indices, ComplexPolynomial::constant(coords, value));
        }
        Ok(out)
    }

    /// Evaluates a constant-coefficient `k`-form on `k` vectors:
    /// `sum_I c_I det(vectors restricted to I)`.
    pub fn apply_to_vectors(&self, vectors: &[Vec<Rational>]) -> Result<ComplexRational, ExteriorError> {
        if vectors.len() != self.degree {
            return Err(ExteriorError::VectorCount {
                expected: self.degree,
                got: vectors.len(),
            });
        }
        for v in vectors {
            if v.len() != self.chart.dim() {
                return Err(ExteriorError::VectorLength {
                    expected: self.chart.dim(),
                    got: v.len(),
                });
            }
        }
        let mut acc = ComplexRational::zero();
        for (indices, coeff) in &self.terms {
            let value = coeff
                .constant_value()
                .ok_or(ExteriorError::NonConstantCoefficients)?;
            let minor: Vec<Vec<Rational>> = indices
                .iter()
                .map(|&i| vectors.iter().map(|v| v[i].clone()).collect())
                .collect();
            let d = linalg::det(&minor);
            acc = &acc + &(&value * &ComplexRational::from_real(d));
        }
        Ok(acc)
    }
}

impl Add for &DifferentialForm {
    type Output = DifferentialForm;
    fn add(self, rhs: &DifferentialForm) -> DifferentialForm {
        assert_same_chart(&self.chart, &rhs.chart);
        assert_eq!(self.degree, rhs.degree, "cannot add forms of different degrees");
        let mut out = self.clone();
        for (indices, coeff) in &rhs.terms {
            out.add_term(indices, coeff.clone());
        }
        out
    }
}

impl Sub for &DifferentialForm {
    type Output = DifferentialForm;
    fn sub(self, rhs: &DifferentialForm) -> DifferentialForm {
        self + &-rhs
    }
}

impl Neg for &DifferentialForm {
    type Output = DifferentialForm;
    fn neg(self) -> DifferentialForm {
        DifferentialForm {
            chart: self.chart.clone(),
            degree: self.degree,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

/// A vector field with one polynomial component per chart coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    chart: Chart,
    components: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(chart: &Chart, components: Vec<Polynomial>) -> Result<Self, ExteriorError> {
        if components.len() != chart.dim() {
            return Err(ExteriorError::ComponentCount(components.len(), chart.dim()));
        }
        for c in &components {
            if c.vars() != chart.coords() {
                return Err(PolyError::VarMismatch {
                    left: chart.coords().to_string(),
                    right: c.vars().to_string(),
                }
                .into());
            }
        }
        Ok(VectorField {
            chart: chart.clone(),
            components,
        })
    }

    /// The coordinate basis field `∂/∂(coords[i])`.
    pub fn basis(chart: &Chart, i: usize) -> Self {
        assert!(i < chart.dim(), "coordinate index {i} out of range");
        let components = (0..chart.dim())
            .map(|j| {
                if j == i {
                    Polynomial::one(chart.coords())
                } else {
                    Polynomial::zero(chart.coords())
                }
            })
            .collect();
        VectorField {
            chart: chart.clone(),
            components,
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }
}

/// A polynomial map between charts: one polynomial over the source
/// coordinates per target coordinate. Pullback transports forms from the
/// target chart to the source chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap {
    source: Chart,
    target: Chart,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(source: &Chart, target: &Chart, components: Vec<Polynomial>) -> Result<Self, ExteriorError> {
        if components.len() != target.dim() {
            return Err(ExteriorError::ComponentCount(components.len(), target.dim()));
        }
        for c in &components {
            if c.vars() != source.coords() {
                return Err(PolyError::VarMismatch {
                    left: source.coords().to_string(),
                    right: c.vars().to_string(),
                }
                .into());
            }
        }
        Ok(PolyMap {
            source: source.clone(),
            target: target.clone(),
            components,
        })
    }

    pub fn identity(chart: &Chart) -> Self {
        let components = (0..chart.dim())
            .map(|i| Polynomial::var_at(chart.coords(), i))
            .collect();
        PolyMap {
            source: chart.clone(),
            target: chart.clone(),
            components,
        }
    }

    /// The linear map with matrix `m` (rows indexed by target coordinates).
    pub fn linear(source: &Chart, target: &Chart, m: &[Vec<Rational>]) -> Result<Self, ExteriorError> {
        if m.len() != target.dim() {
            return Err(ExteriorError::ComponentCount(m.len(), target.dim()));
        }
        let components = m
            .iter()
            .map(|row| {
                assert_eq!(row.len(), source.dim(), "matrix row length");
                let mut p = Polynomial::zero(source.coords());
                for (j, entry) in row.iter().enumerate() {
                    p = &p + &Polynomial::var_at(source.coords(), j).scaled(entry);
                }
                p
            })
            .collect();
        PolyMap::new(source, target, components)
    }

    pub fn source(&self) -> &Chart {
        &self.source
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// Every component is homogeneous linear (degree exactly 1, no constant
    /// term).
    pub fn is_linear(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.terms().all(|(m, _)| m.degree() == 1))
    }

    /// Composition `self ∘ inner`; `inner`'s target must be `self`'s source.
    pub fn compose(&self, inner: &PolyMap) -> Result<Self, ExteriorError> {
        if inner.target != self.source {
            return Err(ExteriorError::SourceChartMismatch {
                expected: self.source.to_string(),
                found: inner.target.to_string(),
            });
        }
        let components = self
            .components
            .iter()
            .map(|c| c.compose(&inner.components))
            .collect::<Result<Vec<_>, _>>()?;
        PolyMap::new(&inner.source, &self.target, components)
    }

    /// Applies the map to an exact point of the source chart.
    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>, ExteriorError> {
        if point.len() != self.source.dim() {
            return Err(ExteriorError::PointLength {
                expected: self.source.dim(),
                got: point.len(),
            });
        }
        Ok(self
            .components
            .iter()
            .map(|c| c.eval(point))
            .collect::<Result<Vec<_>, _>>()?)
    }

    /// Differential `d(components[i])` as a 1-form on the source chart.
    fn component_differential(&self, i: usize) -> DifferentialForm {
        DifferentialForm::real_scalar(&self.source, self.components[i].clone())
            .exterior_derivative()
    }

    /// Pullback `F*(f dx_I) = (f ∘ F) dF_{i1} ∧ … ∧ dF_{ik}`.
    /// Panics when the form does not live on the target chart.
    pub fn pullback(&self, form: &DifferentialForm) -> DifferentialForm {
        assert_same_chart(form.chart(), &self.target);
        let mut differentials: Vec<Option<DifferentialForm>> = vec![None; self.target.dim()];
        let mut out = DifferentialForm::zero(&self.source, form.degree());
        if form.degree() > self.source.dim() {
            return out;
        }
        for (indices, coeff) in &form.terms {
            let composed = coeff
                .compose(&self.components)
                .expect("map components validated at construction");
            if composed.is_zero() {
                continue;
            }
            let mut acc = DifferentialForm::scalar(&self.source, composed);
            for &i in indices {
                if differentials[i].is_none() {
                    differentials[i] = Some(self.component_differential(i));
                }
                acc = acc.wedge(differentials[i].as_ref().unwrap());
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        out
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: [", self.source.name(), self.target.name())?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} = {}", self.target.coord_name(i), c)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn chart3() -> Chart {
        Chart::new("R3", VarList::numbered("x", 3).unwrap())
    }

    fn dx(chart: &Chart, i: usize) -> DifferentialForm {
        DifferentialForm::coordinate_differential(chart, i)
    }

    fn var(chart: &Chart, i: usize) -> Polynomial {
        Polynomial::var_at(chart.coords(), i)
    }

    #[test]
    fn wedge_antisymmetry() {
        let ch = chart3();
        let a = dx(&ch, 0).wedge(&dx(&ch, 1));
        let b = dx(&ch, 1).wedge(&dx(&ch, 0));
        assert_eq!(a.coefficient(&[0, 1]).constant_value().unwrap().re, rat(1));
        assert_eq!(b, -&a);
        assert!(dx(&ch, 0).wedge(&dx(&ch, 0)).is_zero());
    }

    #[test]
    fn wedge_beyond_dimension_vanishes() {
        let ch = chart3();
        let top = dx(&ch, 0).wedge(&dx(&ch, 1)).wedge(&dx(&ch, 2));
        assert_eq!(top.degree(), 3);
        let over = top.wedge(&dx(&ch, 0));
        assert_eq!(over.degree(), 4);
        assert!(over.is_zero());
    }

    #[test]
    fn exterior_derivative_basics() {
        let ch = chart3();
        // d(x1 dx2) = dx1 ∧ dx2
        let form = DifferentialForm::from_terms(
            &ch,
            1,
            [(vec![1], ComplexPolynomial::from_real(var(&ch, 0)))],
        );
        let d = form.exterior_derivative();
        assert_eq!(d, dx(&ch, 0).wedge(&dx(&ch, 1)));
        // constant-coefficient forms are closed
        assert!(dx(&ch, 0).wedge(&dx(&ch, 2)).exterior_derivative().is_zero());
        // degree-0 constant on the chart
        let c = DifferentialForm::real_scalar(&ch, Polynomial::constant(ch.coords(), rat(4)));
        assert!(c.exterior_derivative().is_zero());
        assert_eq!(c.exterior_derivative().degree(), 1);
    }

    #[test]
    fn interior_product_signs() {
        let ch = chart3();
        let e1 = VectorField::basis(&ch, 0);
        let e2 = VectorField::basis(&ch, 1);
        let e3 = VectorField::basis(&ch, 2);
        let dx12 = dx(&ch, 0).wedge(&dx(&ch, 1));
        assert_eq!(dx12.interior_product(&e1), dx(&ch, 1));
        assert!(dx12.interior_product(&e3).is_zero());
        let dx123 = dx(&ch, 0).wedge(&dx(&ch, 1)).wedge(&dx(&ch, 2));
        assert_eq!(
            dx123.interior_product(&e2),
            -&dx(&ch, 0).wedge(&dx(&ch, 2))
        );
    }

    #[test]
    #[should_panic(expected = "degree >= 1")]
    fn interior_product_rejects_scalars() {
        let ch = chart3();
        let f = DifferentialForm::real_scalar(&ch, var(&ch, 0));
        let _ = f.interior_product(&VectorField::basis(&ch, 0));
    }

    #[test]
    #[should_panic(expected = "charts differ")]
    fn wedge_rejects_chart_mismatch() {
        let a = chart3();
        let b = Chart::new("other", VarList::numbered("y", 3).unwrap());
        let _ = dx(&a, 0).wedge(&dx(&b, 0));
    }

    #[test]
    fn pullback_identity_and_collapse() {
        let ch = chart3();
        let id = PolyMap::identity(&ch);
        let form = DifferentialForm::from_terms(
            &ch,
            2,
            [(vec![0, 2], ComplexPolynomial::from_real(var(&ch, 1)))],
        );
        assert_eq!(id.pullback(&form), form);

        // inclusion x3 -> 0 kills dx3
        let plane = Chart::new("R2", VarList::numbered("x", 2).unwrap());
        let incl = PolyMap::new(
            &plane,
            &ch,
            vec![
                Polynomial::var_at(plane.coords(), 0),
                Polynomial::var_at(plane.coords(), 1),
                Polynomial::zero(plane.coords()),
            ],
        )
        .unwrap();
        assert!(incl.pullback(&dx(&ch, 2)).is_zero());
        assert_eq!(incl.pullback(&dx(&ch, 0)), dx(&plane, 0));
    }

    #[test]
    fn pullback_on_nonlinear_map() {
        // F: (u) -> (u, u^2); F*(x2 dx1 - dx2) = u^2 du - 2u du
        let line = Chart::new("R1", VarList::new(["u"]).unwrap());
        let plane = Chart::new("R2", VarList::numbered("x", 2).unwrap());
        let u = Polynomial::var_at(line.coords(), 0);
        let f = PolyMap::new(&plane.clone(), &plane, vec![]).err();
        assert!(f.is_some());
        let map = PolyMap::new(&line, &plane, vec![u.clone(), &u * &u]).unwrap();
        let form = DifferentialForm::from_terms(
            &plane,
            1,
            [
                (vec![0], ComplexPolynomial::from_real(var(&plane, 1))),
                (
                    vec![1],
                    ComplexPolynomial::constant(plane.coords(), ComplexRational::from_real(rat(-1))),
                ),
            ],
        );
        let pulled = map.pullback(&form);
        let expect = DifferentialForm::from_terms(
            &line,
            1,
            [(
                vec![0],
                ComplexPolynomial::from_real(&(&u * &u) - &u.scaled(&rat(2))),
            )],
        );
        assert_eq!(pulled, expect);
    }

    #[test]
    fn map_composition_and_eval() {
        let ch = chart3();
        let m = PolyMap::linear(
            &ch,
            &ch,
            &[
                vec![rat(0), rat(1), rat(0)],
                vec![rat(1), rat(0), rat(0)],
                vec![rat(0), rat(0), rat(2)],
            ],
        )
        .unwrap();
        let composed = m.compose(&m).unwrap();
        let pt = [rat(1), rat(2), rat(3)];
        assert_eq!(composed.eval(&pt).unwrap(), vec![rat(1), rat(2), rat(12)]);
        assert!(m.is_linear());
        assert!(!PolyMap::identity(&ch)
            .compose(&m)
            .unwrap()
            .components()
            .is_empty());
    }

    #[test]
    fn evaluation_of_forms() {
        let ch = Chart::new("T*R1", VarList::new(["x1", "xi1"]).unwrap());
        // alpha = xi1 dx1
        let alpha = DifferentialForm::from_terms(
            &ch,
            1,
            [(
                vec![0],
                ComplexPolynomial::from_real(Polynomial::var_at(ch.coords(), 1)),
            )],
        );
        let at = alpha.eval(&[rat(9), rat(1)]).unwrap();
        assert_eq!(at, dx(&ch, 0));
        assert!(matches!(
            alpha.eval(&[rat(1)]),
            Err(ExteriorError::PointLength { expected: 2, got: 1 })
        ));
        // constant form evaluates to itself
        let omega = dx(&ch, 0).wedge(&dx(&ch, 1));
        assert_eq!(omega.eval(&[rat(5), rat(7)]).unwrap(), omega);
    }

    #[test]
    fn constant_form_on_vectors() {
        let ch = chart3();
        let vol = dx(&ch, 0).wedge(&dx(&ch, 1)).wedge(&dx(&ch, 2));
        let e = |i: usize| {
            (0..3)
                .map(|j| if i == j { rat(1) } else { rat(0) })
                .collect::<Vec<_>>()
        };
        let v = vol.apply_to_vectors(&[e(0), e(1), e(2)]).unwrap();
        assert_eq!(v, ComplexRational::from_real(rat(1)));
        let swapped = vol.apply_to_vectors(&[e(1), e(0), e(2)]).unwrap();
        assert_eq!(swapped, ComplexRational::from_real(rat(-1)));
        assert!(matches!(
            vol.apply_to_vectors(&[e(0)]),
            Err(ExteriorError::VectorCount { .. })
        ));
    }

    #[test]
    fn real_and_imaginary_parts() {
        let ch = chart3();
        let coeff = ComplexPolynomial::new(var(&ch, 0), Polynomial::one(ch.coords()));
        let form = DifferentialForm::from_terms(&ch, 1, [(vec![2], coeff)]);
        assert!(!form.is_real());
        let re = form.real_part();
        let im = form.imaginary_part();
        assert!(re.is_real() && im.is_real());
        assert_eq!(re.coefficient(&[2]).re(), &var(&ch, 0));
        assert_eq!(im.coefficient(&[2]).re(), &Polynomial::one(ch.coords()));
    }
}
