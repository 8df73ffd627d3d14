//! Seeded random generators for property checks and benchmarks.
//!
//! Everything is deterministic given the seed, so randomized identities are
//! reproducible; [`DEFAULT_SEED`] is the seed used when none is supplied.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::{Chart, DifferentialForm, PolyMap, VectorField};
use crate::linalg;
use crate::octonion::Octonion;
use crate::poly::{ComplexPolynomial, Polynomial, VarList};
use crate::rational::{rat, ratio, ComplexRational, Rational};

pub const DEFAULT_SEED: u64 = 0x6732_ca1c;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in `-bound..=bound` and denominator in `1..=3`.
pub fn rational(rng: &mut impl Rng, bound: i64) -> Rational {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn nonzero_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let r = rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn point(rng: &mut impl Rng, dim: usize, bound: i64) -> Vec<Rational> {
    (0..dim).map(|_| rational(rng, bound)).collect()
}

pub fn octonion(rng: &mut impl Rng) -> Octonion {
    Octonion::new(std::array::from_fn(|_| rational(rng, 3)))
}

pub fn imaginary_octonion(rng: &mut impl Rng) -> Octonion {
    Octonion::imaginary(std::array::from_fn(|_| rational(rng, 3)))
}

/// Sparse polynomial with `terms` random monomials of total degree at most
/// `max_degree`.
pub fn polynomial(rng: &mut impl Rng, vars: &VarList, max_degree: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(vars);
    for _ in 0..terms {
        let mut budget = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; vars.len()];
        for e in exps.iter_mut() {
            if budget == 0 {
                break;
            }
            *e = rng.gen_range(0..=budget.min(2));
            budget -= *e;
        }
        p = &p + &Polynomial::monomial(vars, &exps, rational(rng, 3));
    }
    p
}

pub fn complex_polynomial(
    rng: &mut impl Rng,
    vars: &VarList,
    max_degree: u32,
    terms: usize,
) -> ComplexPolynomial {
    ComplexPolynomial::new(
        polynomial(rng, vars, max_degree, terms),
        polynomial(rng, vars, max_degree, terms),
    )
}

/// Random degree-`k` form with a handful of polynomial coefficients.
pub fn form(rng: &mut impl Rng, chart: &Chart, degree: usize, max_coeff_degree: u32) -> DifferentialForm {
    if degree > chart.dim() {
        return DifferentialForm::zero(chart, degree);
    }
    let tuples: Vec<Vec<usize>> = (0..chart.dim()).combinations(degree).collect();
    let n_terms = rng.gen_range(1..=3.min(tuples.len()));
    let mut terms = Vec::new();
    for _ in 0..n_terms {
        let tuple = tuples[rng.gen_range(0..tuples.len())].clone();
        terms.push((tuple, complex_polynomial(rng, chart.coords(), max_coeff_degree, 2)));
    }
    DifferentialForm::from_terms(chart, degree, terms)
}

/// Random form with real polynomial coefficients.
pub fn real_form(rng: &mut impl Rng, chart: &Chart, degree: usize, max_coeff_degree: u32) -> DifferentialForm {
    if degree > chart.dim() {
        return DifferentialForm::zero(chart, degree);
    }
    let tuples: Vec<Vec<usize>> = (0..chart.dim()).combinations(degree).collect();
    let n_terms = rng.gen_range(1..=3.min(tuples.len()));
    let mut terms = Vec::new();
    for _ in 0..n_terms {
        let tuple = tuples[rng.gen_range(0..tuples.len())].clone();
        terms.push((
            tuple,
            ComplexPolynomial::from_real(polynomial(rng, chart.coords(), max_coeff_degree, 2)),
        ));
    }
    DifferentialForm::from_terms(chart, degree, terms)
}

pub fn vector_field(rng: &mut impl Rng, chart: &Chart, max_degree: u32) -> VectorField {
    let components = (0..chart.dim())
        .map(|_| polynomial(rng, chart.coords(), max_degree, 2))
        .collect();
    VectorField::new(chart, components).expect("components match chart")
}

/// Random polynomial map between the charts (not necessarily invertible).
pub fn poly_map(rng: &mut impl Rng, source: &Chart, target: &Chart, max_degree: u32) -> PolyMap {
    let components = (0..target.dim())
        .map(|_| polynomial(rng, source.coords(), max_degree, 2))
        .collect();
    PolyMap::new(source, target, components).expect("components match charts")
}

/// Random invertible rational matrix (retries until the determinant is
/// nonzero).
pub fn invertible_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Vec<Rational>> {
    loop {
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| rational(rng, bound)).collect())
            .collect();
        if !linalg::det(&m).is_zero() {
            return m;
        }
    }
}

/// Random invertible 3x3 complex rational matrix.
pub fn invertible_complex3(rng: &mut impl Rng, bound: i64) -> [[ComplexRational; 3]; 3] {
    loop {
        let m: [[ComplexRational; 3]; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| ComplexRational::new(rational(rng, bound), rational(rng, bound)))
        });
        let rows: Vec<Vec<ComplexRational>> = m.iter().map(|r| r.to_vec()).collect();
        if !linalg::det_complex(&rows).is_zero() {
            return m;
        }
    }
}

/// A small chart for randomized engine-law checks.
pub fn small_chart(rng: &mut impl Rng, name: &str, prefix: &str) -> Chart {
    let dim = rng.gen_range(2..=4);
    Chart::new(name, VarList::numbered(prefix, dim).expect("static names"))
}

fn is_zero_rat(r: &Rational) -> bool {
    use num_traits::Zero;
    r.is_zero()
}

trait IsZeroExt {
    fn is_zero(&self) -> bool;
}

impl IsZeroExt for Rational {
    fn is_zero(&self) -> bool {
        is_zero_rat(self)
    }
}

pub fn rational_i64(n: i64) -> Rational {
    rat(n)
}
