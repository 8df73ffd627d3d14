//! Octonion algebra and the model 3-form it induces.
//!
//! The basis multiplication table comes from Cayley-Dickson doubling of the
//! quaternions. The 2-fold cross product on imaginary octonions is
//! `u × v = Im(conj(v) · u)`, and pairing it with the Euclidean inner
//! product yields a constant 3-form on the seven imaginary directions.
//! Different table conventions produce 3-forms that differ from the model
//! form [`standard_phi0`] by a signed permutation of the basis, which
//! [`find_signed_permutation`] recovers and reports.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use itertools::Itertools;
use num_traits::Zero;

use crate::exterior::{Chart, DifferentialForm, PolyMap};
use crate::poly::{ComplexPolynomial, VarList};
use crate::rational::{rat, ComplexRational, Rational};

/// Signed basis product: `e_i * e_j = sign * e_index`.
pub type BasisProduct = (i8, usize);

/// The fixed 8x8 basis multiplication table of the octonions,
/// over the ordered basis `(1, e1, ..., e7)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CayleyTable {
    entries: [[BasisProduct; 8]; 8],
}

fn doubled_table(dim: usize) -> Vec<Vec<BasisProduct>> {
    if dim == 1 {
        return vec![vec![(1, 0)]];
    }
    let half = dim / 2;
    let sub = doubled_table(half);
    let conj_sign = |i: usize| if i == 0 { 1i8 } else { -1i8 };
    let mut table = vec![vec![(0i8, 0usize); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let (low_i, low_j) = (i % half, j % half);
            // (a, b)(c, d) = (ac - conj(d) b, da + b conj(c))
            table[i][j] = match (i < half, j < half) {
                (true, true) => sub[low_i][low_j],
                (true, false) => {
                    let (s, k) = sub[low_j][low_i];
                    (s, k + half)
                }
                (false, true) => {
                    let (s, k) = sub[low_i][low_j];
                    (s * conj_sign(low_j), k + half)
                }
                (false, false) => {
                    let (s, k) = sub[low_j][low_i];
                    (-s * conj_sign(low_j), k)
                }
            };
        }
    }
    table
}

impl CayleyTable {
    /// The table obtained by Cayley-Dickson doubling of the quaternions.
    pub fn cayley_dickson() -> &'static CayleyTable {
        static TABLE: OnceLock<CayleyTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let raw = doubled_table(8);
            let mut entries = [[(0i8, 0usize); 8]; 8];
            for (i, row) in raw.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    entries[i][j] = e;
                }
            }
            CayleyTable { entries }
        })
    }

    /// The signed basis element `e_i * e_j`.
    pub fn product(&self, i: usize, j: usize) -> BasisProduct {
        self.entries[i][j]
    }
}

/// An octonion with exact rational components over the basis `(1, e1..e7)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Octonion {
    components: [Rational; 8],
}

impl Octonion {
    pub fn new(components: [Rational; 8]) -> Self {
        Octonion { components }
    }

    pub fn zero() -> Self {
        Octonion {
            components: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::basis_unit(0)
    }

    /// `e_i` for `i` in `0..8` (`e_0` is the real unit).
    pub fn basis_unit(i: usize) -> Self {
        assert!(i < 8, "basis index {i} out of range");
        let mut o = Self::zero();
        o.components[i] = rat(1);
        o
    }

    /// Imaginary octonion from its seven `e1..e7` components.
    pub fn imaginary(parts: [Rational; 7]) -> Self {
        let mut o = Self::zero();
        for (i, p) in parts.into_iter().enumerate() {
            o.components[i + 1] = p;
        }
        o
    }

    pub fn components(&self) -> &[Rational; 8] {
        &self.components
    }

    pub fn real_part(&self) -> &Rational {
        &self.components[0]
    }

    pub fn imaginary_part(&self) -> Octonion {
        let mut o = self.clone();
        o.components[0] = Rational::zero();
        o
    }

    pub fn is_imaginary(&self) -> bool {
        self.components[0].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Zero::is_zero)
    }

    /// Conjugation negates exactly the components `e1..e7`.
    pub fn conjugate(&self) -> Octonion {
        let mut o = -self;
        o.components[0] = -o.components[0].clone();
        o
    }

    /// Standard Euclidean inner product on the eight components.
    pub fn inner(&self, other: &Octonion) -> Rational {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> Rational {
        self.inner(self)
    }

    pub fn scaled(&self, factor: &Rational) -> Octonion {
        Octonion {
            components: std::array::from_fn(|i| &self.components[i] * factor),
        }
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion {
            components: std::array::from_fn(|i| &self.components[i] + &rhs.components[i]),
        }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion {
            components: std::array::from_fn(|i| &self.components[i] - &rhs.components[i]),
        }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            components: std::array::from_fn(|i| -self.components[i].clone()),
        }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        let table = CayleyTable::cayley_dickson();
        let mut out = Octonion::zero();
        for i in 0..8 {
            if self.components[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.components[j].is_zero() {
                    continue;
                }
                let (sign, k) = table.product(i, j);
                let term = &self.components[i] * &rhs.components[j];
                if sign < 0 {
                    out.components[k] -= term;
                } else {
                    out.components[k] += term;
                }
            }
        }
        out
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*e{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The 2-fold cross product `u × v = Im(conj(v) · u)`.
/// Panics unless both arguments are imaginary.
pub fn cross(u: &Octonion, v: &Octonion) -> Octonion {
    assert!(
        u.is_imaginary() && v.is_imaginary(),
        "cross product is defined on imaginary octonions"
    );
    (&v.conjugate() * u).imaginary_part()
}

/// The seven-coordinate model chart `R7` with coordinates `x1..x7`,
/// identified with the imaginary octonion directions `e1..e7`.
pub fn model_chart() -> Chart {
    Chart::new("R7", VarList::numbered("x", 7).expect("static names"))
}

/// The model G2 3-form
/// `phi0 = e^123 + e^145 + e^167 + e^246 - e^257 - e^347 - e^356`
/// as a constant 3-form on [`model_chart`].
pub fn standard_phi0() -> DifferentialForm {
    standard_phi0_on(&model_chart())
}

/// [`standard_phi0`] over an arbitrary 7-dimensional chart.
pub fn standard_phi0_on(chart: &Chart) -> DifferentialForm {
    assert_eq!(chart.dim(), 7, "phi0 lives on a 7-dimensional chart");
    let signed_terms: [([usize; 3], i64); 7] = [
        ([0, 1, 2], 1),
        ([0, 3, 4], 1),
        ([0, 5, 6], 1),
        ([1, 3, 5], 1),
        ([1, 4, 6], -1),
        ([2, 3, 6], -1),
        ([2, 4, 5], -1),
    ];
    DifferentialForm::from_terms(
        chart,
        3,
        signed_terms.into_iter().map(|(indices, sign)| {
            (
                indices.to_vec(),
                ComplexPolynomial::constant(chart.coords(), ComplexRational::from_real(rat(sign))),
            )
        }),
    )
}

/// The constant 3-form `phi(u, v, w) = <u × v, w>` assembled from the cross
/// product on the imaginary units, over [`model_chart`].
pub fn phi_from_cross() -> DifferentialForm {
    let chart = model_chart();
    let mut terms = Vec::new();
    for (i, j, k) in (0..7).tuple_combinations() {
        let c = cross(&Octonion::basis_unit(i + 1), &Octonion::basis_unit(j + 1))
            .inner(&Octonion::basis_unit(k + 1));
        if !c.is_zero() {
            terms.push((
                vec![i, j, k],
                ComplexPolynomial::constant(chart.coords(), ComplexRational::from_real(c)),
            ));
        }
    }
    DifferentialForm::from_terms(&chart, 3, terms)
}

/// A signed relabeling of the seven basis directions:
/// direction `i` maps to `sign[i] * e_{image[i]}` (0-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermutation {
    pub image: [usize; 7],
    pub sign: [i8; 7],
}

impl SignedPermutation {
    /// Transforms a constant form on a 7-dim chart by the linear map
    /// `T(e_i) = sign[i] * e_{image[i]}`, i.e. computes `T* form`.
    pub fn apply(&self, form: &DifferentialForm) -> DifferentialForm {
        assert_eq!(form.chart().dim(), 7, "signed permutations act on 7 directions");
        let mut inverse = [0usize; 7];
        for (i, &img) in self.image.iter().enumerate() {
            inverse[img] = i;
        }
        let mut terms = Vec::new();
        for (indices, coeff) in form.terms() {
            let pre: Vec<usize> = indices.iter().map(|&p| inverse[p]).collect();
            let mut sign_product = 1i8;
            for &a in &pre {
                sign_product *= self.sign[a];
            }
            let c = if sign_product < 0 { -coeff } else { coeff.clone() };
            // `from_terms` sorts `pre` and supplies the permutation sign.
            terms.push((pre, c));
        }
        DifferentialForm::from_terms(form.chart(), form.degree(), terms)
    }

    /// The same relabeling as a linear [`PolyMap`] on the chart, so the
    /// transform can be cross-checked through the pullback machinery.
    pub fn as_poly_map(&self, chart: &Chart) -> PolyMap {
        let mut matrix = vec![vec![Rational::zero(); 7]; 7];
        for i in 0..7 {
            matrix[self.image[i]][i] = rat(self.sign[i] as i64);
        }
        PolyMap::linear(chart, chart, &matrix).expect("square matrix")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..7 {
            if i > 0 {
                write!(f, ", ")?;
            }
            let sign = if self.sign[i] < 0 { "-" } else { "" };
            write!(f, "e{} -> {}e{}", i + 1, sign, self.image[i] + 1)?;
        }
        Ok(())
    }
}

fn constant_coefficients(form: &DifferentialForm) -> Option<Vec<(Vec<usize>, Rational)>> {
    form.terms()
        .map(|(indices, coeff)| {
            let c = coeff.constant_value()?;
            c.is_real().then(|| (indices.to_vec(), c.re))
        })
        .collect()
}

/// Searches for a signed permutation `T` with `T* source = target`.
/// Both forms must be constant real 3-forms on 7-dimensional charts.
/// Deterministic: the first match in lexicographic permutation order and
/// ascending sign-pattern order is returned.
pub fn find_signed_permutation(
    source: &DifferentialForm,
    target: &DifferentialForm,
) -> Option<SignedPermutation> {
    let src = constant_coefficients(source)?;
    let tgt = constant_coefficients(target)?;
    if src.len() != tgt.len() {
        return None;
    }
    let tgt_map: std::collections::BTreeMap<Vec<usize>, Rational> = tgt.into_iter().collect();

    for perm in (0..7usize).permutations(7) {
        let mut image = [0usize; 7];
        image.copy_from_slice(&perm);
        let mut inverse = [0usize; 7];
        for (i, &img) in image.iter().enumerate() {
            inverse[img] = i;
        }
        // unsigned support must match before trying sign patterns
        let support_ok = src.iter().all(|(indices, c)| {
            let mut pre: Vec<usize> = indices.iter().map(|&p| inverse[p]).collect();
            pre.sort_unstable();
            tgt_map
                .get(&pre)
                .map(|t| {
                    let mut a = c.clone();
                    if a < Rational::zero() {
                        a = -a;
                    }
                    let mut b = t.clone();
                    if b < Rational::zero() {
                        b = -b;
                    }
                    a == b
                })
                .unwrap_or(false)
        });
        if !support_ok {
            continue;
        }
        for bits in 0u32..128 {
            let mut sign = [1i8; 7];
            for (i, s) in sign.iter_mut().enumerate() {
                if bits >> i & 1 == 1 {
                    *s = -1;
                }
            }
            let candidate = SignedPermutation { image, sign };
            if candidate.apply(source) == *target {
                return Some(candidate);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::sample;
    use rand::Rng;

    #[test]
    fn table_identity_and_unit_squares() {
        let t = CayleyTable::cayley_dickson();
        for i in 0..8 {
            assert_eq!(t.product(0, i), (1, i));
            assert_eq!(t.product(i, 0), (1, i));
        }
        for i in 1..8 {
            assert_eq!(t.product(i, i), (-1, 0), "e{i}^2 = -1");
        }
    }

    #[test]
    fn multiplication_basics() {
        let u = Octonion::imaginary([rat(1), rat(-2), rat(3), ratio(1, 2), rat(0), rat(5), rat(-7)]);
        assert_eq!(&Octonion::one() * &u, u);
        assert_eq!(&u * &Octonion::one(), u);
        let e1 = Octonion::basis_unit(1);
        assert_eq!(&e1 * &e1, -&Octonion::one());
    }

    #[test]
    fn normed_algebra_law_random() {
        let mut rng = sample::rng(11);
        for _ in 0..200 {
            let u = sample::octonion(&mut rng);
            let v = sample::octonion(&mut rng);
            let prod = &u * &v;
            assert_eq!(prod.norm_sqr(), u.norm_sqr() * v.norm_sqr());
        }
    }

    #[test]
    fn cross_is_alternating_and_orthogonal() {
        let mut rng = sample::rng(12);
        for _ in 0..100 {
            let u = sample::imaginary_octonion(&mut rng);
            let v = sample::imaginary_octonion(&mut rng);
            assert!(cross(&u, &u).is_zero());
            let c = cross(&u, &v);
            assert!(c.inner(&u).is_zero());
            assert!(c.inner(&v).is_zero());
            // Lagrange-type identity
            let lhs = c.norm_sqr() + u.inner(&v) * u.inner(&v);
            assert_eq!(lhs, u.norm_sqr() * v.norm_sqr());
        }
    }

    #[test]
    fn cross_is_bilinear() {
        let mut rng = sample::rng(13);
        for _ in 0..50 {
            let u = sample::imaginary_octonion(&mut rng);
            let v = sample::imaginary_octonion(&mut rng);
            let w = sample::imaginary_octonion(&mut rng);
            let a = sample::rational(&mut rng, 5);
            let sum = &u + &v.scaled(&a);
            let lhs = cross(&sum, &w);
            let rhs = &cross(&u, &w) + &cross(&v, &w).scaled(&a);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    #[should_panic(expected = "imaginary")]
    fn cross_rejects_non_imaginary() {
        let _ = cross(&Octonion::one(), &Octonion::basis_unit(1));
    }

    #[test]
    fn cross_of_first_two_units() {
        // sign fixed by the Cayley-Dickson table
        let c = cross(&Octonion::basis_unit(1), &Octonion::basis_unit(2));
        assert_eq!(c, Octonion::basis_unit(3));
    }

    #[test]
    fn phi0_coefficients() {
        let phi0 = standard_phi0();
        assert_eq!(phi0.num_terms(), 7);
        let coeff = |idx: &[usize]| phi0.coefficient(idx).constant_value().unwrap().re;
        assert_eq!(coeff(&[0, 1, 2]), rat(1));
        assert_eq!(coeff(&[1, 4, 6]), rat(-1)); // e^257
        assert_eq!(coeff(&[0, 1, 3]), rat(0)); // e^124 absent
        for (_, c) in phi0.terms() {
            let v = c.constant_value().unwrap().re;
            assert!(v == rat(1) || v == rat(-1));
        }
    }

    #[test]
    fn phi_from_cross_matches_pairing_on_all_triples() {
        let phi = phi_from_cross();
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    let expected = cross(&Octonion::basis_unit(i), &Octonion::basis_unit(j))
                        .inner(&Octonion::basis_unit(k));
                    let mut vectors = Vec::new();
                    for idx in [i, j, k] {
                        let mut v = vec![rat(0); 7];
                        v[idx - 1] = rat(1);
                        vectors.push(v);
                    }
                    let got = phi.apply_to_vectors(&vectors).unwrap();
                    assert_eq!(got, ComplexRational::from_real(expected), "triple ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn phi_from_cross_is_alternating_on_random_vectors() {
        fn parity(perm: &[usize]) -> i8 {
            let mut sign = 1i8;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] {
                        sign = -sign;
                    }
                }
            }
            sign
        }
        let mut rng = sample::rng(14);
        let phi = phi_from_cross();
        for _ in 0..20 {
            let vecs: Vec<Vec<Rational>> = (0..3)
                .map(|_| (0..7).map(|_| sample::rational(&mut rng, 4)).collect())
                .collect();
            let base = phi.apply_to_vectors(&vecs).unwrap();
            for perm in (0..3usize).permutations(3) {
                let permuted: Vec<Vec<Rational>> =
                    perm.iter().map(|&i| vecs[i].clone()).collect();
                let got = phi.apply_to_vectors(&permuted).unwrap();
                let want = if parity(&perm) < 0 { -&base } else { base.clone() };
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn signed_permutation_to_phi0() {
        let phi = phi_from_cross();
        let phi0 = standard_phi0();
        let sp = find_signed_permutation(&phi, &phi0).expect("equivalence exists");
        // frozen: identity permutation with sign flips on e1, e2, e4
        assert_eq!(sp.image, [0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(sp.sign, [-1, -1, 1, -1, 1, 1, 1]);
        assert_eq!(sp.apply(&phi), phi0);
        // cross-check through the pullback machinery
        let map = sp.as_poly_map(phi.chart());
        assert_eq!(map.pullback(&phi), phi0);
    }

    #[test]
    fn signed_permutation_fails_for_inequivalent_forms() {
        let phi0 = standard_phi0();
        let chart = model_chart();
        let degenerate = DifferentialForm::from_terms(
            &chart,
            3,
            [(
                vec![0, 1, 2],
                ComplexPolynomial::one(chart.coords()),
            )],
        );
        assert!(find_signed_permutation(&degenerate, &phi0).is_none());
    }

    #[test]
    fn random_octonions_are_not_special() {
        // conj is an anti-automorphism: conj(uv) = conj(v) conj(u)
        let mut rng = sample::rng(15);
        for _ in 0..100 {
            let u = sample::octonion(&mut rng);
            let v = sample::octonion(&mut rng);
            assert_eq!((&u * &v).conjugate(), &v.conjugate() * &u.conjugate());
            let k: i64 = rng.gen_range(-4..=4);
            assert_eq!((&u + &v).scaled(&rat(k)), &u.scaled(&rat(k)) + &v.scaled(&rat(k)));
        }
    }
}
