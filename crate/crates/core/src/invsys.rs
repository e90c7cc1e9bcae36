//! Divided-power dual ring and Macaulay inverse systems.
//!
//! `Q` acts on the divided-power ring `D = k_DP[X, Y, Z, W]` by contraction:
//! `x^a ∘ X^[b] = X^[b - a]` when `b >= a` componentwise and `0` otherwise.
//! No factorials enter the action, so everything here is valid in any
//! characteristic. The annihilator of a form of degree `s` is computed one
//! degree at a time as the kernel of the pairing `Q_d -> D_{s-d}`.

use std::collections::HashMap;
use std::fmt;

use crate::field::{FieldDescriptor, FieldError, Scalar};
use crate::groebner::{self, Ideal};
use crate::linalg;
use crate::monomial::{Monomial, MonomialOrder, NVARS};
use crate::poly::{LinearChange, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvsysError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the dual form is zero")]
    ZeroForm,
    #[error("the dual form is not homogeneous")]
    NotHomogeneous,
    #[error("expected a form of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("quotient is not Artinian below degree {0}")]
    NotArtinian(usize),
    #[error("not a linear form: {0}")]
    NotLinear(String),
    #[error("quotient is not Gorenstein (top Hilbert function value {0})")]
    NotGorenstein(i64),
}

/// Exponent vector of a divided monomial `X^[a] Y^[b] Z^[c] W^[d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualMonomial(pub [u16; NVARS]);

impl DualMonomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&d| d as u32).sum()
    }

    fn as_monomial(&self) -> Monomial {
        Monomial::new(self.0)
    }
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_dual_monomial(f, self)
    }
}

/// An element of the divided-power ring. Terms are sorted by decreasing grevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividedForm {
    field: FieldDescriptor,
    terms: Vec<(DualMonomial, Scalar)>,
}

fn binomial(n: u32, k: u32, field: FieldDescriptor) -> Scalar {
    // Exact in the integers, then mapped into the field.
    let mut acc = num_bigint::BigInt::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    field.from_bigint(&acc)
}

impl DividedForm {
    fn from_map(field: FieldDescriptor, map: HashMap<DualMonomial, Scalar>) -> Self {
        let mut terms: Vec<(DualMonomial, Scalar)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0.as_monomial(), &a.0.as_monomial()));
        DividedForm { field, terms }
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        DividedForm { field, terms: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        DividedForm::term(c, DualMonomial::default())
    }

    pub fn term(c: Scalar, m: DualMonomial) -> Self {
        let field = c.field();
        if c.is_zero() {
            return DividedForm::zero(field);
        }
        DividedForm { field, terms: vec![(m, c)] }
    }

    pub fn from_terms(field: FieldDescriptor, terms: impl IntoIterator<Item = (DualMonomial, Scalar)>) -> Result<Self, FieldError> {
        let mut map: HashMap<DualMonomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            if c.field() != field {
                return Err(FieldError::FieldMismatch(field, c.field()));
            }
            let e = map.entry(m).or_insert_with(|| field.zero());
            *e = &*e + &c;
        }
        Ok(DividedForm::from_map(field, map))
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn terms(&self) -> &[(DualMonomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &DualMonomial) -> Scalar {
        self.terms.iter().find(|(n, _)| n == m).map(|(_, c)| c.clone()).unwrap_or_else(|| self.field.zero())
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(self.field.zero()),
            [(m, c)] if m.degree() == 0 => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &DividedForm) -> DividedForm {
        let mut map: HashMap<DualMonomial, Scalar> = self.terms.iter().cloned().collect();
        for (m, c) in &other.terms {
            let e = map.entry(*m).or_insert_with(|| self.field.zero());
            *e = &*e + c;
        }
        DividedForm::from_map(self.field, map)
    }

    pub fn neg(&self) -> DividedForm {
        DividedForm { field: self.field, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> DividedForm {
        if c.is_zero() {
            return DividedForm::zero(self.field);
        }
        DividedForm { field: self.field, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// Divided-power product: `X^[a] X^[b] = C(a+b, a) X^[a+b]` in each variable.
    pub fn dp_multiply(&self, other: &DividedForm) -> DividedForm {
        let mut map: HashMap<DualMonomial, Scalar> = HashMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                let mut e = [0u16; NVARS];
                let mut coef = a * b;
                for (i, ei) in e.iter_mut().enumerate() {
                    *ei = m.0[i] + n.0[i];
                    coef = &coef * &binomial(*ei as u32, m.0[i] as u32, self.field);
                }
                if coef.is_zero() {
                    continue;
                }
                let slot = map.entry(DualMonomial(e)).or_insert_with(|| self.field.zero());
                *slot = &*slot + &coef;
            }
        }
        DividedForm::from_map(self.field, map)
    }

    /// Substitutes `X_i -> sum_j m[i][j] X_j`, using
    /// `(sum_j c_j X_j)^[n] = sum_{|g| = n} prod_j c_j^{g_j} X^[g]`, which needs no division.
    pub fn substitute(&self, l: &LinearChange) -> DividedForm {
        let m = l.matrix();
        let max_deg = self.terms.iter().flat_map(|(d, _)| d.0).max().unwrap_or(0) as u32;
        // powers[i][n] = (image of X_i)^[n]
        let powers: Vec<Vec<DividedForm>> = (0..NVARS)
            .map(|i| {
                (0..=max_deg)
                    .map(|n| {
                        let terms = Monomial::of_degree(n).into_iter().map(|g| {
                            let e = g.exponents();
                            let mut c = self.field.one();
                            for j in 0..NVARS {
                                c = &c * &m[i][j].pow(e[j] as u32);
                            }
                            (DualMonomial(e), c)
                        });
                        DividedForm::from_terms(self.field, terms).expect("one field")
                    })
                    .collect()
            })
            .collect();
        let mut acc = DividedForm::zero(self.field);
        for (d, c) in &self.terms {
            let mut t = DividedForm::constant(c.clone());
            for i in 0..NVARS {
                if d.0[i] > 0 {
                    t = t.dp_multiply(&powers[i][d.0[i] as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Display for DividedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.prints_negative();
            let c = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Contraction `p ∘ F`, extended bilinearly from the monomial rule.
pub fn contract(p: &Polynomial, form: &DividedForm) -> Result<DividedForm, FieldError> {
    if p.field() != form.field {
        return Err(FieldError::FieldMismatch(form.field, p.field()));
    }
    let mut map: HashMap<DualMonomial, Scalar> = HashMap::new();
    for (m, a) in p.terms() {
        let alpha = m.exponents();
        for (d, b) in &form.terms {
            if (0..NVARS).all(|i| alpha[i] <= d.0[i]) {
                let mut e = d.0;
                for i in 0..NVARS {
                    e[i] -= alpha[i];
                }
                let slot = map.entry(DualMonomial(e)).or_insert_with(|| form.field.zero());
                *slot = &*slot + &(a * b);
            }
        }
    }
    Ok(DividedForm::from_map(form.field, map))
}

/// A nonzero homogeneous dual form; the socle degree of its annihilator is its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGenerator {
    form: DividedForm,
}

impl DualGenerator {
    /// A nonzero cubic.
    pub fn new(form: DividedForm) -> Result<Self, InvsysError> {
        let g = DualGenerator::of_any_degree(form)?;
        match g.degree() {
            3 => Ok(g),
            found => Err(InvsysError::WrongDegree { expected: 3, found }),
        }
    }

    pub fn of_any_degree(form: DividedForm) -> Result<Self, InvsysError> {
        if form.is_zero() {
            return Err(InvsysError::ZeroForm);
        }
        if !form.is_homogeneous() {
            return Err(InvsysError::NotHomogeneous);
        }
        Ok(DualGenerator { form })
    }

    pub fn form(&self) -> &DividedForm {
        &self.form
    }

    pub fn field(&self) -> FieldDescriptor {
        self.form.field
    }

    pub fn degree(&self) -> u32 {
        self.form.degree().expect("nonzero")
    }
}

impl fmt::Display for DualGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

/// Basis of `ker(Q_d -> D_{s-d}, p -> p ∘ F)`.
fn annihilator_piece(form: &DividedForm, d: u32) -> Vec<Polynomial> {
    let field = form.field;
    let s = form.degree().expect("nonzero");
    let source = Monomial::of_degree(d);
    let target: Vec<DualMonomial> = Monomial::of_degree(s - d).into_iter().map(|m| DualMonomial(m.exponents())).collect();
    let index: HashMap<DualMonomial, usize> = target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    // Column k holds the coordinates of (source_k ∘ F).
    let mut mat = vec![vec![field.zero(); source.len()]; target.len()];
    for (k, m) in source.iter().enumerate() {
        let image = contract(&Polynomial::monomial(field, *m), form).expect("one field");
        for (dm, c) in image.terms() {
            mat[index[dm]][k] = c.clone();
        }
    }
    linalg::kernel(&mat, source.len(), field)
        .iter()
        .map(|v| Polynomial::from_coords(field, &source, v))
        .collect()
}

/// `Ann_Q(F)`, generated by its pieces in degrees `1..=s` and all of `Q_{s+1}`,
/// returned on minimal generators.
pub fn annihilator(f: &DualGenerator) -> Ideal {
    let field = f.field();
    let s = f.degree();
    let mut gens = Vec::new();
    for d in 1..=s {
        gens.extend(annihilator_piece(&f.form, d));
    }
    gens.extend(Monomial::of_degree(s + 1).into_iter().map(|m| Polynomial::monomial(field, m)));
    let all = Ideal::new(field, gens).expect("kernel vectors are homogeneous");
    let minimal = groebner::minimal_generators(&all);
    Ideal::new(field, minimal.generators).expect("homogeneous")
}

/// Hilbert function of `Q/I`, ending at the last nonzero value.
pub fn hilbert_function_artinian(i: &Ideal, cap: usize) -> Result<Vec<i64>, InvsysError> {
    i.artinian_hilbert_function(cap).ok_or(InvsysError::NotArtinian(cap))
}

/// Rank of multiplication by the linear form `l` from `(Q/I)_1` to `(Q/I)_2`.
pub fn linear_form_rank(i: &Ideal, l: &Polynomial) -> Result<usize, InvsysError> {
    if l.is_zero() {
        return Ok(0);
    }
    if l.degree() != Some(1) || !l.is_homogeneous() {
        return Err(InvsysError::NotLinear(l.to_string()));
    }
    let field = i.field();
    let i2 = i.degree_piece(2);
    let basis = Monomial::of_degree(2);
    let idx = groebner::index_of(&basis);
    let mut rows: Vec<Vec<Scalar>> = i2.iter().map(|p| p.coords(&idx, basis.len())).collect();
    let base = linalg::rank(&rows);
    for v in 0..NVARS {
        rows.push((l * &Polynomial::var(field, v)).coords(&idx, basis.len()));
    }
    Ok(linalg::rank(&rows) - base)
}

/// Kinds of connected-sum decomposition witnessed by quadratic monomials in `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectedSumType {
    /// `x'y', x'z', x'w' ∈ I`.
    OneThree,
    /// `x'z', x'w', y'z', y'w' ∈ I`.
    TwoTwo,
}

/// Whether the products of new variables required by `kind` lie in `I`,
/// where the new variables are the images `l.image(0..4)`.
pub fn connected_sum_witness_check(i: &Ideal, l: &LinearChange, kind: ConnectedSumType) -> bool {
    let pairs: &[(usize, usize)] = match kind {
        ConnectedSumType::OneThree => &[(0, 1), (0, 2), (0, 3)],
        ConnectedSumType::TwoTwo => &[(0, 2), (0, 3), (1, 2), (1, 3)],
    };
    pairs.iter().all(|&(a, b)| i.contains(&(&l.image(a) * &l.image(b))))
}

/// The change acting on `Q` that matches the substitution `l` on `D`:
/// `Ann(F.substitute(l)) = Ann(F)` transformed by `contragredient(l)`.
pub fn contragredient(l: &LinearChange) -> LinearChange {
    l.transpose().inverse()
}

/// Recovers the dual generator of a Gorenstein Artinian ideal from the
/// orthogonal complement of its top nonzero degree piece.
pub fn dual_generator_of(i: &Ideal, cap: usize) -> Result<DualGenerator, InvsysError> {
    let hf = hilbert_function_artinian(i, cap)?;
    let s = (hf.len() - 1) as u32;
    if hf[s as usize] != 1 {
        return Err(InvsysError::NotGorenstein(hf[s as usize]));
    }
    let field = i.field();
    let basis = Monomial::of_degree(s);
    let idx = groebner::index_of(&basis);
    // The pairing Q_s x D_s -> k is the identity on monomial bases.
    let rows: Vec<Vec<Scalar>> = i.degree_piece(s).iter().map(|p| p.coords(&idx, basis.len())).collect();
    let kernel = linalg::kernel(&rows, basis.len(), field);
    let v = kernel.first().ok_or(InvsysError::ZeroForm)?;
    let form = DividedForm::from_terms(field, basis.iter().zip(v).map(|(m, c)| (DualMonomial(m.exponents()), c.clone())))?;
    DualGenerator::of_any_degree(form)
}
