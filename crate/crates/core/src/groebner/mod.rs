//! Homogeneous ideals and their Groebner bases.
//!
//! An [`Ideal`] caches its reduced grevlex basis on first use. Because the
//! reduced basis of an ideal is unique, ideal equality is basis equality.
//! Colon ideals go through one auxiliary variable under an elimination
//! order; Hilbert series and codimension are read off the leading-term
//! ideal.

mod engine;
mod hilbert;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use hilbert::HilbertSeries;

use crate::field::{FieldDescriptor, FieldError, Scalar};
use crate::linalg;
use crate::monomial::{Monomial, MonomialOrder, NVARS};
use crate::poly::Polynomial;
use engine::OPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("the ideal is the whole ring")]
    UnitIdeal,
    #[error("colon by the zero polynomial")]
    ZeroDivisorInput,
    #[error("sequence contains the zero polynomial")]
    ZeroElement,
}

/// A reduced Groebner basis: monic, sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: FieldDescriptor,
    order: MonomialOrder,
    elems: Vec<OPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|e| e.to_poly(self.field)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| *e.lm()).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        engine::reduce(&OPoly::from_poly(p, self.order), &self.elems, self.order).to_poly(self.field)
    }
}

/// Reduced Groebner basis of `gens` under `order`.
pub fn buchberger(field: FieldDescriptor, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    for g in gens {
        if g.field() != field {
            return Err(FieldError::FieldMismatch(field, g.field()).into());
        }
    }
    let input: Vec<OPoly> = gens.iter().map(|g| OPoly::from_poly(g, order)).collect();
    Ok(GroebnerBasis { field, order, elems: engine::buchberger(&input, order) })
}

/// Fully reduced remainder of `p` modulo `gb`.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

/// A homogeneous ideal of `Q` with a cached reduced grevlex basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    field: FieldDescriptor,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Ideal {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(field: FieldDescriptor, gens: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.field() != field {
                return Err(FieldError::FieldMismatch(field, g.field()).into());
            }
            if !g.is_homogeneous() {
                return Err(GroebnerError::NotHomogeneous(g.to_string()));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal { field, gens: kept, gb: OnceLock::new() })
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        Ideal { field, gens: Vec::new(), gb: OnceLock::new() }
    }

    /// The ideal `(x, y, z, w)^d`.
    pub fn power_of_maximal(field: FieldDescriptor, d: u32) -> Self {
        let gens = Monomial::of_degree(d).into_iter().map(|m| Polynomial::monomial(field, m)).collect();
        Ideal { field, gens, gb: OnceLock::new() }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            let input: Vec<OPoly> = self.gens.iter().map(|g| OPoly::from_poly(g, MonomialOrder::Grevlex)).collect();
            Arc::new(GroebnerBasis {
                field: self.field,
                order: MonomialOrder::Grevlex,
                elems: engine::buchberger(&input, MonomialOrder::Grevlex),
            })
        })
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().leading_monomials().contains(&Monomial::ONE)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.field() == self.field && self.groebner_basis().normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.groebner_basis().normal_form(p)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ideal { field: self.field, gens, gb: OnceLock::new() }
    }

    /// `self + (extra)`.
    pub fn with(&self, extra: &[Polynomial]) -> Result<Ideal, GroebnerError> {
        Ideal::new(self.field, self.gens.iter().chain(extra).cloned().collect())
    }

    /// The colon ideal `{g : g f in self}`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal, GroebnerError> {
        colon_ideal(self, f)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let u = Polynomial::monomial(self.field, Monomial::aux());
        let one_minus_u = &Polynomial::one(self.field) - &u;
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g * &u)
            .chain(other.gens.iter().map(|h| h * &one_minus_u))
            .collect();
        let gb = buchberger(self.field, &gens, MonomialOrder::Elimination)?;
        let kept = gb.elems.iter().filter(|e| e.lm().aux_degree() == 0).map(|e| e.to_poly(self.field)).collect();
        Ideal::new(self.field, kept)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::from_numerator(hilbert::monomial_numerator(&self.groebner_basis().leading_monomials()))
    }

    /// `4 - dim(Q/I)`, computed from the leading-term ideal.
    pub fn codimension(&self) -> Result<u32, GroebnerError> {
        let lms = self.groebner_basis().leading_monomials();
        if lms.contains(&Monomial::ONE) {
            return Err(GroebnerError::UnitIdeal);
        }
        // dim Q/I = largest set of variables containing the support of no leading monomial
        let mut dim = 0;
        for set in 0u32..(1 << NVARS) {
            let independent = lms.iter().all(|m| m.support().any(|v| set & (1 << v) == 0));
            if independent {
                dim = dim.max(set.count_ones());
            }
        }
        Ok(NVARS as u32 - dim)
    }

    /// Hilbert function of `Q/I` while it stays positive, up to degree `cap`.
    /// Returns `None` if it is still positive at `cap`.
    pub fn artinian_hilbert_function(&self, cap: usize) -> Option<Vec<i64>> {
        let hs = self.hilbert_series().expand(cap);
        let end = hs.iter().position(|&v| v == 0)?;
        Some(hs[..end].to_vec())
    }

    /// A `k`-basis of the degree-`d` piece, in reduced row echelon form.
    pub fn degree_piece(&self, d: u32) -> Vec<Polynomial> {
        degree_piece(self.field, &self.gens, d)
    }

    pub fn minimal_generators(&self) -> MinimalGenerators {
        minimal_generators(self)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Ideal) -> bool {
        ideal_equal(self, other)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

pub fn ideal_member(p: &Polynomial, i: &Ideal) -> bool {
    i.contains(p)
}

/// Equality of ideals via identical reduced grevlex bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> bool {
    a.field == b.field && a.groebner_basis().elems == b.groebner_basis().elems
}

/// `I : (f)`, computed as `(I ∩ (f)) / f` with the intersection taken by elimination.
pub fn colon_ideal(i: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisorInput);
    }
    if f.field() != i.field {
        return Err(FieldError::FieldMismatch(i.field, f.field()).into());
    }
    if !f.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous(f.to_string()));
    }
    let principal = Ideal::new(i.field, vec![f.clone()])?;
    let meet = i.intersect(&principal)?;
    let quotients = meet
        .gens
        .iter()
        .map(|h| h.exact_div(f).expect("elements of (f) are divisible by f"))
        .collect();
    Ideal::new(i.field, quotients)
}

pub fn hilbert_series(i: &Ideal) -> HilbertSeries {
    i.hilbert_series()
}

pub fn codimension(i: &Ideal) -> Result<u32, GroebnerError> {
    i.codimension()
}

/// A homogeneous sequence is regular exactly when the ideal it generates has codimension equal to its length.
pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<bool, GroebnerError> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    if fs.iter().any(Polynomial::is_zero) {
        return Err(GroebnerError::ZeroElement);
    }
    let ideal = Ideal::new(first.field(), fs.to_vec())?;
    if ideal.is_unit() {
        return Ok(false);
    }
    Ok(ideal.codimension()? == fs.len() as u32)
}

/// Minimal homogeneous generators with their degree histogram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalGenerators {
    pub generators: Vec<Polynomial>,
    pub histogram: BTreeMap<u32, usize>,
}

impl MinimalGenerators {
    pub fn count(&self) -> usize {
        self.generators.len()
    }
}

pub(crate) fn index_of(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (*m, i)).collect()
}

/// RREF basis of the span of `polys`, all homogeneous of degree `d`.
pub(crate) fn span_basis(field: FieldDescriptor, polys: &[Polynomial], d: u32) -> Vec<Polynomial> {
    let basis = Monomial::of_degree(d);
    let idx = index_of(&basis);
    let mut rows: Vec<Vec<Scalar>> = polys.iter().map(|p| p.coords(&idx, basis.len())).collect();
    linalg::rref(&mut rows);
    rows.iter().map(|r| Polynomial::from_coords(field, &basis, r)).collect()
}

/// Basis of `(gens)_d`: the span of all `m * g` with `deg m + deg g = d`.
pub fn degree_piece(field: FieldDescriptor, gens: &[Polynomial], d: u32) -> Vec<Polynomial> {
    let mut products = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        for m in Monomial::of_degree(d - dg) {
            products.push(g.mul_monomial(&m));
        }
    }
    span_basis(field, &products, d)
}

/// Minimal generators by graded linear algebra: in each degree, keep a
/// complement of the part generated by lower degrees.
pub fn minimal_generators(i: &Ideal) -> MinimalGenerators {
    let mut by_degree: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
    for g in &i.gens {
        by_degree.entry(g.degree().expect("nonzero")).or_default().push(g.clone());
    }
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut histogram = BTreeMap::new();
    for (&d, gens) in &by_degree {
        let basis = Monomial::of_degree(d);
        let idx = index_of(&basis);
        let lower = degree_piece(i.field, &kept, d);
        let mut w: Vec<Vec<Scalar>> = lower.iter().map(|p| p.coords(&idx, basis.len())).collect();
        let pivots = linalg::rref(&mut w);
        // Reduce the new generators modulo the lower part, then take an echelon basis of the remainder.
        let mut fresh: Vec<Vec<Scalar>> = gens
            .iter()
            .map(|g| {
                let mut v = g.coords(&idx, basis.len());
                for (row, &pc) in w.iter().zip(&pivots) {
                    if !v[pc].is_zero() {
                        let c = v[pc].clone();
                        for (k, r) in row.iter().enumerate() {
                            if !r.is_zero() {
                                v[k] = &v[k] - &(&c * r);
                            }
                        }
                    }
                }
                v
            })
            .collect();
        linalg::rref(&mut fresh);
        if !fresh.is_empty() {
            histogram.insert(d, fresh.len());
        }
        kept.extend(fresh.iter().map(|r| Polynomial::from_coords(i.field, &basis, r)));
    }
    MinimalGenerators { generators: kept, histogram }
}

/// Whether `p` is homogeneous and lies in the `k`-span of `(gens)_{deg p}`;
/// equivalent to ideal membership without computing a Groebner basis.
pub fn member_by_degree(p: &Polynomial, gens: &[Polynomial]) -> bool {
    let Some(d) = p.degree() else { return true };
    let piece = degree_piece(p.field(), gens, d);
    let basis = Monomial::of_degree(d);
    let idx = index_of(&basis);
    let mut rows: Vec<Vec<Scalar>> = piece.iter().map(|q| q.coords(&idx, basis.len())).collect();
    let before = rows.len();
    rows.push(p.coords(&idx, basis.len()));
    linalg::rref(&mut rows);
    rows.len() == before
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    fn p(s: &str) -> Polynomial {
        parse_poly(s, Q).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(Q, gens.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn small_bases() {
        let gb = ideal(&["x^2-y^2", "x^2+y^2"]).groebner_basis().polynomials();
        assert_eq!(gb, vec![p("y^2"), p("x^2")]);
        let gb = ideal(&["x*y-z^2", "y*z"]).groebner_basis().polynomials();
        let mut want = vec![p("y*z"), p("x*y-z^2"), p("z^3")];
        want.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&a.terms()[0].0, &b.terms()[0].0));
        assert_eq!(gb, want);
    }

    #[test]
    fn basis_independent_of_generator_order() {
        let a = ideal(&["x*y-z*w", "y^3", "x^2", "y*z-2*z^2+7*z*w-w^2"]);
        let b = ideal(&["y*z-2*z^2+7*z*w-w^2", "x^2", "y^3", "x*y-z*w"]);
        assert_eq!(a.groebner_basis(), b.groebner_basis());
    }

    #[test]
    fn colon_examples() {
        let c = ideal(&["x^2"]).colon(&p("x")).unwrap();
        assert_eq!(c, ideal(&["x"]));
        let i = ideal(&["x*y", "x*z"]);
        assert_eq!(i.colon(&p("y")).unwrap(), ideal(&["x"]));
        assert!(i.colon(&p("x*y")).unwrap().is_unit());
        assert_eq!(i.colon(&Polynomial::zero(Q)).unwrap_err(), GroebnerError::ZeroDivisorInput);
    }

    #[test]
    fn codimension_and_regularity() {
        assert_eq!(ideal(&["x", "y", "z", "w"]).codimension().unwrap(), 4);
        assert_eq!(ideal(&["x*y", "x*z"]).codimension().unwrap(), 1);
        assert_eq!(ideal(&["1"]).codimension(), Err(GroebnerError::UnitIdeal));
        assert!(!is_regular_sequence(&[p("x"), p("x")]).unwrap());
        assert!(is_regular_sequence(&[p("x^2"), p("y^3"), p("z*w + x^2")]).unwrap());
        assert_eq!(is_regular_sequence(&[p("x"), Polynomial::zero(Q)]), Err(GroebnerError::ZeroElement));
    }

    #[test]
    fn hilbert_of_zero_ideal() {
        assert_eq!(Ideal::zero(Q).hilbert_series().numerator(), &[1]);
        assert_eq!(Ideal::zero(Q).hilbert_series().expand(2), vec![1, 4, 10]);
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let i = ideal(&["x^2", "x*y", "x^2*z", "x^2 + x*y", "y^3"]);
        let mg = i.minimal_generators();
        assert_eq!(mg.count(), 3);
        assert_eq!(mg.histogram, BTreeMap::from([(2, 2), (3, 1)]));
        assert_eq!(Ideal::power_of_maximal(Q, 2).minimal_generators().count(), 10);
    }

    #[test]
    fn membership_agrees_with_degree_span() {
        let gens = vec![p("x*y - z*w"), p("y^2"), p("z^2 + x*w")];
        let i = Ideal::new(Q, gens.clone()).unwrap();
        for s in ["x*y^2 - y*z*w", "z^3 + x*z*w", "x^3", "y*z^2 + x*y*w"] {
            assert_eq!(i.contains(&p(s)), member_by_degree(&p(s), &gens), "{s}");
        }
    }
}
