//! Sparse polynomials in `Q = k[x, y, z, w]` and linear changes of variables.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::field::{FieldDescriptor, FieldError, Scalar};
use crate::linalg;
use crate::monomial::{Monomial, MonomialOrder, NVARS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("linear change of variables is singular")]
    SingularChange,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("Pfaffian of an odd-dimensional matrix")]
    OddDimension,
    #[error("matrix shapes do not match: {0}")]
    ShapeMismatch(String),
}

/// A polynomial with terms sorted strictly decreasing under grevlex.
///
/// No stored coefficient is zero, and all coefficients lie in `field`, so
/// two polynomials are equal exactly when their term lists are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldDescriptor,
    terms: Vec<(Monomial, Scalar)>,
}

fn desc(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(b, a)
}

impl Polynomial {
    pub fn zero(field: FieldDescriptor) -> Self {
        Polynomial { field, terms: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::term(c, Monomial::ONE)
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Polynomial::constant(field.one())
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let field = c.field();
        if c.is_zero() {
            Polynomial::zero(field)
        } else {
            Polynomial { field, terms: vec![(m, c)] }
        }
    }

    pub fn monomial(field: FieldDescriptor, m: Monomial) -> Self {
        Polynomial::term(field.one(), m)
    }

    /// The variable with index `i` (0 = x, 1 = y, 2 = z, 3 = w).
    pub fn var(field: FieldDescriptor, i: usize) -> Self {
        Polynomial::monomial(field, Monomial::var(i))
    }

    /// Builds a polynomial from arbitrary terms, combining repeats and dropping zeros.
    pub fn from_terms(
        field: FieldDescriptor,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self, FieldError> {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            if c.field() != field {
                return Err(FieldError::FieldMismatch(field, c.field()));
            }
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Ok(Polynomial::from_map(field, acc))
    }

    fn from_map(field: FieldDescriptor, acc: HashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| desc(&a.0, &b.0));
        Polynomial { field, terms }
    }

    /// Terms sorted by decreasing grevlex order.
    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// True for zero and for polynomials whose terms share one degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .binary_search_by(|(t, _)| desc(t, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::ONE)
    }

    fn check(&self, other: &Polynomial) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.field, other.field))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, FieldError> {
        self.check(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match desc(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Polynomial { field: self.field, terms: out })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, FieldError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, FieldError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field));
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial::from_map(self.field, acc))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Divides every term by `m`; `None` unless `m` divides all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| m.quotient_of(t).map(|q| (q, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial { field: self.field, terms })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / q`, or `None` if `q` does not divide `self`.
    pub fn exact_div(&self, q: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = q.leading_term()?;
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let qm = lm.quotient_of(m)?;
            let qc = c * &lc_inv;
            rem = &rem - &q.mul_monomial(&qm).scale(&qc);
            quot.push((qm, qc));
        }
        Some(Polynomial { field: self.field, terms: quot })
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
        }
    }

    /// Substitutes `images[i]` for the `i`-th variable.
    pub fn substitute(&self, images: &[Polynomial; NVARS]) -> Polynomial {
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(p.field)]).collect();
        let mut acc = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exponent(i) as usize;
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                if e > 0 {
                    t = &t * &pw[e];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Scalar; NVARS]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in point.iter().enumerate() {
                t = &t * &v.pow(m.exponent(i) as u32);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficient vector against an ordered monomial basis; terms outside the basis are ignored.
    pub(crate) fn coords(&self, basis_index: &HashMap<Monomial, usize>, len: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); len];
        for (m, c) in &self.terms {
            if let Some(&i) = basis_index.get(m) {
                v[i] = c.clone();
            }
        }
        v
    }

    pub(crate) fn from_coords(field: FieldDescriptor, basis: &[Monomial], v: &[Scalar]) -> Polynomial {
        let terms = basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c.clone()));
        Polynomial::from_terms(field, terms).expect("coordinates share the field")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different fields.
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: decreasing grevlex, explicit `*` and `^`.
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
            if *m == Monomial::ONE {
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

/// Invertible linear substitution: variable `i` is replaced by `sum_j m[i][j] * var_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearChange {
    matrix: [[Scalar; NVARS]; NVARS],
}

impl LinearChange {
    pub fn new(matrix: [[Scalar; NVARS]; NVARS]) -> Result<Self, PolyError> {
        let field = matrix[0][0].field();
        if matrix.iter().flatten().any(|c| c.field() != field) {
            let other = matrix.iter().flatten().find(|c| c.field() != field).unwrap().field();
            return Err(FieldError::FieldMismatch(field, other).into());
        }
        let rows: Vec<Vec<Scalar>> = matrix.iter().map(|r| r.to_vec()).collect();
        if linalg::det(&rows, field).is_zero() {
            return Err(PolyError::SingularChange);
        }
        Ok(LinearChange { matrix })
    }

    /// Builds the change sending each variable to the given linear form.
    pub fn from_images(images: &[Polynomial; NVARS]) -> Result<Self, PolyError> {
        let field = images[0].field();
        let mut matrix: [[Scalar; NVARS]; NVARS] = std::array::from_fn(|_| std::array::from_fn(|_| field.zero()));
        for (i, p) in images.iter().enumerate() {
            for (m, c) in p.terms() {
                if m.degree() != 1 {
                    return Err(PolyError::ShapeMismatch(format!("image {p} is not a linear form")));
                }
                let j = m.support().next().expect("degree one");
                matrix[i][j] = c.clone();
            }
        }
        LinearChange::new(matrix)
    }

    pub fn identity(field: FieldDescriptor) -> Self {
        LinearChange {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { field.one() } else { field.zero() })),
        }
    }

    pub fn matrix(&self) -> &[[Scalar; NVARS]; NVARS] {
        &self.matrix
    }

    pub fn field(&self) -> FieldDescriptor {
        self.matrix[0][0].field()
    }

    /// The linear form replacing variable `i`.
    pub fn image(&self, i: usize) -> Polynomial {
        let f = self.field();
        let terms = (0..NVARS).map(|j| (Monomial::var(j), self.matrix[i][j].clone()));
        Polynomial::from_terms(f, terms).expect("shared field")
    }

    /// Substituting by `self` and then by `other` equals substituting by `self.then(other)`.
    pub fn then(&self, other: &LinearChange) -> LinearChange {
        let f = self.field();
        let matrix = std::array::from_fn(|i| {
            std::array::from_fn(|k| {
                (0..NVARS).fold(f.zero(), |acc, j| &acc + &(&self.matrix[i][j] * &other.matrix[j][k]))
            })
        });
        LinearChange { matrix }
    }

    pub fn inverse(&self) -> LinearChange {
        let f = self.field();
        let a: Vec<Vec<Scalar>> = self.matrix.iter().map(|r| r.to_vec()).collect();
        let id: Vec<Vec<Scalar>> = LinearChange::identity(f).matrix.iter().map(|r| r.to_vec()).collect();
        let x = linalg::solve(&a, &id, NVARS, f).expect("invertible by construction");
        LinearChange { matrix: std::array::from_fn(|i| std::array::from_fn(|j| x[i][j].clone())) }
    }

    /// The transpose, which drives the contragredient action on the dual ring.
    pub fn transpose(&self) -> LinearChange {
        LinearChange { matrix: std::array::from_fn(|i| std::array::from_fn(|j| self.matrix[j][i].clone())) }
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let images = std::array::from_fn(|i| self.image(i));
        p.substitute(&images)
    }
}

/// Substitutes each variable of `p` by its image under `l`.
pub fn apply_linear_change(p: &Polynomial, l: &LinearChange) -> Polynomial {
    l.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    fn p(s: &str) -> Polynomial {
        parse_poly(s, Q).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let f = FieldDescriptor::prime(2).unwrap();
        let s = parse_poly("x+y", f).unwrap();
        assert_eq!(s.pow(2), parse_poly("x^2+y^2", f).unwrap());
    }

    #[test]
    fn distribute_case_ib_generator() {
        assert_eq!(&p("z") * &p("y*z + z^2 - z*w - w^2"), p("y*z^2 + z^3 - z^2*w - z*w^2"));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2*y - y*z^2 + x*w^2");
        let b = p("x + z");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), Some(a));
        assert_eq!(p("x^2 + 1").exact_div(&p("x + 1")), None);
    }

    #[test]
    fn connected_sum_change() {
        let a = Q.from_i64(3);
        let images = [
            p("x"),
            &p("y - z") - &p("w").scale(&a),
            p("z + x"),
            &p("w") + &p("x").scale(&(&a * &a)),
        ];
        let l = LinearChange::from_images(&images).unwrap();
        assert_eq!(l.apply(&p("y*z")), p("x*y + y*z - z^2 - x*z - 3*x*w - 3*z*w"));
        assert_eq!(l.apply(&p("x*z")), p("x*z + x^2"));
        let q = p("x^2*y - 2*z*w^2 + y^3");
        assert_eq!(l.inverse().apply(&l.apply(&q)), q);
        assert_eq!(l.then(&l.inverse()), LinearChange::identity(Q));
    }

    #[test]
    fn singular_change_rejected() {
        let images = [p("x"), p("x"), p("z"), p("w")];
        assert_eq!(LinearChange::from_images(&images), Err(PolyError::SingularChange));
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(p("-1/2*z*w + 3*x^2*y").to_string(), "3*x^2*y - 1/2*z*w");
        assert_eq!(p("w^3 - 1 + x").to_string(), "w^3 + x - 1");
        let e = FieldDescriptor::eisenstein();
        let q = parse_poly("y^2 - (t-1)*z*w - (2*t-1)*z^2 + t*x^2", e).unwrap();
        assert_eq!(q.to_string(), "t*x^2 + y^2 + (1 - 2*t)*z^2 + (1 - t)*z*w");
    }
}
