//! Helpers shared by the property and acceptance suites.
#![allow(dead_code)]

use gorlab::catalog::{self, CaseData, CaseId, Family, Params};
use gorlab::groebner::Ideal;
use gorlab::homalg::GradedComplex;
use gorlab::linalg;
use gorlab::monomial::Monomial;
use gorlab::{FieldDescriptor, LinearChange, PolyMatrix, Polynomial, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q() -> FieldDescriptor {
    FieldDescriptor::Rationals
}

/// A rational `n/d` with `|n| <= 9`, `1 <= d <= 4`, never zero.
pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            let d: i64 = rng.gen_range(1..=4);
            return q().from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d))).expect("rational");
        }
    }
}

/// Homogeneous polynomial of degree `d` with small integer coefficients.
pub fn random_form(rng: &mut ChaCha8Rng, field: FieldDescriptor, d: u32, density: f64) -> Polynomial {
    let mut terms = Vec::new();
    for m in Monomial::of_degree(d) {
        if rng.gen_bool(density) {
            terms.push((m, field.from_i64(rng.gen_range(-4..=4))));
        }
    }
    Polynomial::from_terms(field, terms).expect("one field")
}

/// Invertible change with integer entries in `[-3, 3]`.
pub fn random_change(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> LinearChange {
    loop {
        let m = std::array::from_fn(|_| std::array::from_fn(|_| field.from_i64(rng.gen_range(-3..=3))));
        if let Ok(l) = LinearChange::new(m) {
            return l;
        }
    }
}

/// 2k x 2k skew matrix of random linear forms.
pub fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> PolyMatrix {
    let f = q();
    let mut t = PolyMatrix::zeros(f, n, n);
    for i in 0..n {
        for j in i + 1..n {
            let p = random_form(rng, f, 1, 0.6);
            t.set(j, i, -&p);
            t.set(i, j, p);
        }
    }
    t
}

/// The resolution `G` of `Q/J` for a doubling case.
pub fn resolution(d: &CaseData) -> GradedComplex {
    match d.id.family() {
        Family::I | Family::II => catalog::brown_resolution(d).expect("Brown resolution"),
        _ => catalog::eagon_northcott(d).expect("Eagon-Northcott resolution"),
    }
}

pub fn default_data(id: CaseId) -> CaseData {
    catalog::case_data(id, &id.default_params(), id.default_field()).expect("default parameters")
}

/// Random parameters for a parametric case over Q, or the other root of
/// `a^2 - a + 1` for IVa. `None` for cases without parameters.
pub fn random_params(id: CaseId, rng: &mut ChaCha8Rng) -> Option<Params> {
    let names = id.parameter_names();
    if names.is_empty() {
        return None;
    }
    if id == CaseId::IVa {
        let e = FieldDescriptor::eisenstein();
        let t = e.generator().expect("extension");
        let root = if rng.gen_bool(0.5) { t } else { e.one().try_sub(&t).expect("same field") };
        return Some(Params::new().with('a', root));
    }
    let mut p = Params::new();
    for &n in names {
        p.set(n, nonzero_rational(rng));
    }
    Some(p)
}

/// Membership by linear algebra: a homogeneous `p` of degree `d` lies in the
/// ideal of homogeneous `gens` iff it is in the span of `m · g` for monomials
/// `m` of degree `d - deg g`.
pub fn member_oracle(p: &Polynomial, gens: &[Polynomial]) -> bool {
    for k in 0..=p.degree().unwrap_or(0) {
        let part = p.component(k);
        if part.is_zero() {
            continue;
        }
        let basis = Monomial::of_degree(k);
        let row_of = |q: &Polynomial| -> Vec<Scalar> { basis.iter().map(|m| q.coefficient(m)).collect() };
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for g in gens {
            let dg = g.degree().expect("nonzero generator");
            if dg <= k {
                rows.extend(Monomial::of_degree(k - dg).iter().map(|m| row_of(&g.mul_monomial(m))));
            }
        }
        let r = linalg::rank(&rows);
        rows.push(row_of(&part));
        if linalg::rank(&rows) != r {
            return false;
        }
    }
    true
}

/// Standard monomials of degree `d` with respect to the leading monomials of a Gröbner basis.
pub fn staircase_count(i: &Ideal, d: u32) -> i64 {
    let lms = i.groebner_basis().leading_monomials();
    Monomial::of_degree(d).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count() as i64
}
