//! The catalog of codimension-four Gorenstein ideals of socle degree three
//! and the machinery that certifies their structure.
//!
//! Every non-quadratic case is a pair `J ⊂ I` with `J` of grade three, a
//! resolution `G` of `Q/J` (Pfaffian/Brown format for families I and II,
//! Eagon–Northcott for III and IV), and a presentation `φ` of `I/J` by the
//! shifted dual of `G`. The doubling pipeline lifts `φ` to a chain map and
//! takes its mapping cone, which resolves `Q/I`.

mod builders;
mod checks;
mod data;
mod extras;
mod pipeline;
mod quadratic;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::field::{FieldDescriptor, FieldError, Scalar};
use crate::groebner::GroebnerError;
use crate::homalg::{HomalgError, Witnesses};
use crate::invsys::{DualGenerator, InvsysError};
use crate::matrix::PolyMatrix;
use crate::poly::{PolyError, Polynomial};
use crate::text::{parse_dual, parse_poly, parse_scalar, ParseError};

pub use builders::{be_gorenstein_resolution, brown_resolution, build_phi, eagon_northcott, eagon_northcott_2x4};
pub use checks::{verify_appendix, verify_identities, verify_presentation_exact, CheckOutcome, PresentationReport};
pub use extras::{connected_sum_example, example_char_two, j_invariant, CharTwoReport, ConnectedSumReport};
pub use pipeline::{
    degree_cap, doubling_pipeline, expected_betti_table, reverify, run_case, verify_all, Certificate, CheckRecord,
    DOUBLING_CHECKS,
};
pub use quadratic::{
    frozen_q6, quadratic_case_pipeline, random_cubic_check, search_q6, QuadraticInstance, RandomCubicReport,
    Q6_FROZEN_SEED,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("parameter constraint violated: {0}")]
    ParameterConstraintViolated(String),
    #[error("case {case} needs the field {needed}, not {found}")]
    WrongField { case: CaseId, needed: String, found: FieldDescriptor },
    #[error("case {case} needs parameter {name}")]
    MissingParameter { case: CaseId, name: char },
    #[error("case {case} takes no parameter {name}")]
    UnexpectedParameter { case: CaseId, name: char },
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("template for {case} does not parse: {source}")]
    Template { case: CaseId, source: ParseError },
    #[error("ideal of Pfaffians has codimension {0}, expected 3")]
    WrongCodimension(String),
    #[error("{0} is a zero divisor modulo J")]
    NotRegular(String),
    #[error("Hilbert function {0:?} is not (1, 4, 4, 1)")]
    WrongHilbert(Vec<i64>),
    #[error("a = {0} gives a singular cubic")]
    DegenerateCubic(String),
    #[error("case {0} is not handled by this operation")]
    WrongCase(CaseId),
    #[error("matrix must have linear entries: {0}")]
    NotLinear(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    Invsys(#[from] InvsysError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    Ia,
    Ib,
    IIa,
    IIb,
    IIc,
    IId,
    IIIa,
    IIIb,
    IIIc,
    IIId,
    IVa,
    IVb,
    IVc,
    Q6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Seven generators, Brown-format resolution of `J`.
    I,
    /// Seven generators, connected sums.
    II,
    /// Nine generators, Eagon–Northcott resolution of `J`.
    III,
    /// Nine generators, connected sums.
    IV,
    /// Six quadrics; `J` is a Pfaffian ideal.
    Quadratic,
}

impl CaseId {
    pub const ALL: [CaseId; 14] = [
        CaseId::Ia,
        CaseId::Ib,
        CaseId::IIa,
        CaseId::IIb,
        CaseId::IIc,
        CaseId::IId,
        CaseId::IIIa,
        CaseId::IIIb,
        CaseId::IIIc,
        CaseId::IIId,
        CaseId::IVa,
        CaseId::IVb,
        CaseId::IVc,
        CaseId::Q6,
    ];

    pub fn family(self) -> Family {
        use CaseId::*;
        match self {
            Ia | Ib => Family::I,
            IIa | IIb | IIc | IId => Family::II,
            IIIa | IIIb | IIIc | IIId => Family::III,
            IVa | IVb | IVc => Family::IV,
            Q6 => Family::Quadratic,
        }
    }

    pub fn name(self) -> &'static str {
        use CaseId::*;
        match self {
            Ia => "Ia",
            Ib => "Ib",
            IIa => "IIa",
            IIb => "IIb",
            IIc => "IIc",
            IId => "IId",
            IIIa => "IIIa",
            IIIb => "IIIb",
            IIIc => "IIIc",
            IIId => "IIId",
            IVa => "IVa",
            IVb => "IVb",
            IVc => "IVc",
            Q6 => "Q6",
        }
    }

    /// Free parameters the caller may set. `b` in IIa is derived from `a`.
    pub fn parameter_names(self) -> &'static [char] {
        use CaseId::*;
        match self {
            Ia | IIIb => &['a', 'b'],
            Ib | IIa | IIIc | IVa => &['a'],
            _ => &[],
        }
    }

    /// Expected minimal number of generators of `I`.
    pub fn expected_mu(self) -> usize {
        match self.family() {
            Family::I | Family::II => 7,
            Family::III | Family::IV => 9,
            Family::Quadratic => 6,
        }
    }

    /// The field the case is computed over by default.
    pub fn default_field(self) -> FieldDescriptor {
        if self == CaseId::IVa {
            FieldDescriptor::eisenstein()
        } else {
            FieldDescriptor::Rationals
        }
    }

    pub fn default_params(self) -> Params {
        let q = FieldDescriptor::Rationals;
        use CaseId::*;
        match self {
            Ia => Params::new().with('a', q.from_i64(2)).with('b', q.from_i64(3)),
            Ib | IIa => Params::new().with('a', q.from_i64(2)),
            IIIb => Params::new().with('a', q.from_i64(1)).with('b', q.from_i64(2)),
            IIIc => Params::new().with('a', q.from_i64(1)),
            IVa => {
                let e = FieldDescriptor::eisenstein();
                Params::new().with('a', e.generator().expect("extension"))
            }
            _ => Params::new(),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s.trim())).ok_or_else(|| CatalogError::UnknownCase(s.into()))
    }
}

impl Serialize for CaseId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for CaseId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Named scalar parameters, in name order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(Vec<(char, Scalar)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: char, value: Scalar) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: char, value: Scalar) {
        match self.0.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = value,
            None => {
                self.0.push((name, value));
                self.0.sort_by_key(|(n, _)| *n);
            }
        }
    }

    pub fn get(&self, name: char) -> Option<&Scalar> {
        self.0.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, &Scalar)> {
        self.0.iter().map(|(n, v)| (*n, v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Re-reads every value in `field`; rational values embed into any field
    /// of characteristic zero.
    pub fn in_field(&self, field: FieldDescriptor) -> Result<Params, CatalogError> {
        let mut out = Params::new();
        for (n, v) in self.iter() {
            let w = if v.field() == field {
                v.clone()
            } else {
                let q = v.as_rational().ok_or_else(|| FieldError::NotRepresentable(v.to_string(), field))?;
                field.from_rational(&q)?
            };
            out.set(n, w);
        }
        Ok(out)
    }

    /// `{"a": "2", "b": "3"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(self.iter().map(|(n, v)| (n.to_string(), v.to_string().into())).collect())
    }

    pub fn from_json(v: &serde_json::Value, field: FieldDescriptor) -> Result<Params, String> {
        let mut out = Params::new();
        for (k, val) in v.as_object().ok_or("params must be an object")? {
            let name = k.chars().next().filter(|_| k.len() == 1).ok_or_else(|| format!("bad parameter name {k:?}"))?;
            let text = val.as_str().ok_or_else(|| format!("parameter {k} must be a string"))?;
            out.set(name, parse_scalar(text, field).map_err(|e| e.to_string())?);
        }
        Ok(out)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(n, v)| format!("{n}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Structural data from which `J` and its resolution are built.
#[derive(Debug, Clone)]
pub enum Structure {
    /// 5x5 skew matrix whose submaximal Pfaffians (with the row of `x`
    /// multiples) generate `J`, plus the closed forms listed for its Pfaffians.
    Skew { matrix: PolyMatrix, second_family: bool, listed_pfaffians: Vec<(usize, Polynomial)> },
    /// 2x4 matrix whose maximal minors generate `J`.
    Minors { matrix: PolyMatrix },
    /// 5x5 skew matrix of linear forms; `J` is its Pfaffian ideal.
    Pfaffian { matrix: PolyMatrix },
}

#[derive(Debug, Clone)]
pub enum ColonRhs {
    J,
    JPlus(Vec<Polynomial>),
    Explicit(Vec<Polynomial>),
}

/// One stated fact about `J` to be verified by ideal arithmetic.
#[derive(Debug, Clone)]
pub enum AppendixClaim {
    Colon { by: Polynomial, rhs: ColonRhs },
    Member(Polynomial),
    Regular(Vec<Polynomial>),
}

/// A case with its parameters substituted.
#[derive(Debug, Clone)]
pub struct CaseData {
    pub id: CaseId,
    pub field: FieldDescriptor,
    /// Caller parameters plus derived ones (`b` in IIa, `c` in IIIb, `s` in IIb).
    pub params: Params,
    pub dual: DualGenerator,
    pub ideal_i: Vec<Polynomial>,
    pub ideal_j: Vec<Polynomial>,
    pub structure: Structure,
    /// Components of the presentation `φ` of `I/J`; empty for Q6.
    pub phi: Vec<Polynomial>,
    /// For Q6: the quadric `f` with `I = J + (f)`.
    pub quadric: Option<Polynomial>,
    pub witnesses: Witnesses,
    pub appendix: Vec<AppendixClaim>,
    /// `T5` in terms of the other Pfaffians (family I).
    pub t5_identity: Option<Polynomial>,
    /// How any ambiguity in the data was settled.
    pub notes: Vec<String>,
}

fn substitute_params(text: &str, params: &Params) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match params.get(ch) {
            Some(v) => {
                out.push('(');
                out.push_str(&v.to_string());
                out.push(')');
            }
            None => out.push(ch),
        }
    }
    out
}

struct Loader<'a> {
    id: CaseId,
    field: FieldDescriptor,
    params: &'a Params,
    pfaffians: Vec<(String, String)>,
}

impl Loader<'_> {
    fn expand(&self, text: &str) -> String {
        let mut s = text.to_string();
        for (name, value) in &self.pfaffians {
            s = s.replace(name.as_str(), &format!("({value})"));
        }
        substitute_params(&s, self.params)
    }

    fn poly(&self, text: &str) -> Result<Polynomial, CatalogError> {
        parse_poly(&self.expand(text), self.field).map_err(|source| CatalogError::Template { case: self.id, source })
    }

    fn polys(&self, texts: &[&str]) -> Result<Vec<Polynomial>, CatalogError> {
        texts.iter().map(|t| self.poly(t)).collect()
    }
}

fn check_params(id: CaseId, field: FieldDescriptor, params: &Params) -> Result<Params, CatalogError> {
    for (n, _) in params.iter() {
        if !id.parameter_names().contains(&n) {
            return Err(CatalogError::UnexpectedParameter { case: id, name: n });
        }
    }
    if id == CaseId::IVa && field != FieldDescriptor::eisenstein() {
        return Err(CatalogError::WrongField { case: id, needed: FieldDescriptor::eisenstein().to_string(), found: field });
    }
    let mut full = params.in_field(field)?;
    for &n in id.parameter_names() {
        if full.get(n).is_none() {
            return Err(CatalogError::MissingParameter { case: id, name: n });
        }
    }
    let one = field.one();
    match id {
        CaseId::IIa => {
            let a = full.get('a').expect("checked").clone();
            let a2 = a.pow(2);
            let disc = a2.try_sub(&a)?.try_add(&one)?;
            let product = a.try_mul(&a.try_sub(&one)?)?.try_mul(&disc)?;
            if product.is_zero() {
                return Err(CatalogError::ParameterConstraintViolated(format!("a(a-1)(a^2-a+1) = 0 at a = {a}")));
            }
            full.set('b', disc.inv()?);
        }
        CaseId::IVa => {
            let a = full.get('a').expect("checked").clone();
            let v = a.pow(2).try_sub(&a)?.try_add(&one)?;
            if !v.is_zero() {
                return Err(CatalogError::ParameterConstraintViolated(format!("a^2-a+1 = {v} ≠ 0 at a = {a}")));
            }
        }
        CaseId::IIIb => {
            let (a, b) = (full.get('a').expect("checked").clone(), full.get('b').expect("checked").clone());
            full.set('c', a.pow(2).try_sub(&b)?);
        }
        _ => {}
    }
    Ok(full)
}

/// Substitutes `params` into the case over `field`.
///
/// IIb has a sign ambiguity in the cubic generator; it is settled here by
/// requiring the annihilator of `F` to equal `I` and `φ ∘ ∂3*` to vanish
/// modulo `J`, and the outcome is recorded in `notes`.
pub fn case_data(id: CaseId, params: &Params, field: FieldDescriptor) -> Result<CaseData, CatalogError> {
    if id == CaseId::Q6 {
        if !params.is_empty() {
            let (n, _) = params.iter().next().expect("nonempty");
            return Err(CatalogError::UnexpectedParameter { case: id, name: n });
        }
        return quadratic::q6_case_data(field);
    }
    let full = check_params(id, field, params)?;
    if id == CaseId::IIb {
        return builders::resolve_sign_iib(field, full);
    }
    load(id, field, full)
}

pub(crate) fn load(id: CaseId, field: FieldDescriptor, full: Params) -> Result<CaseData, CatalogError> {
    let t = data::template(id);
    let mut loader = Loader { id, field, params: &full, pfaffians: Vec::new() };
    let dual_text = substitute_params(t.dual, &full);
    let form = parse_dual(&dual_text, field).map_err(|source| CatalogError::Template { case: id, source })?;
    let dual = DualGenerator::new(form)?;
    let ideal_i = loader.polys(t.ideal_i)?;
    let ideal_j = loader.polys(t.ideal_j)?;
    let phi = loader.polys(t.phi)?;
    let structure = match &t.structure {
        data::StructureT::Skew { abcd, second_family } => {
            let e = loader.polys(abcd)?;
            let matrix = builders::skew_matrix(field, &e, *second_family);
            let listed = t.pfaffians.iter().map(|(i, s)| Ok((*i, loader.poly(s)?))).collect::<Result<Vec<_>, CatalogError>>()?;
            // T1..T5 in later templates refer to the computed Pfaffians.
            let pf = matrix.submaximal_pfaffians()?;
            loader.pfaffians = pf.iter().enumerate().map(|(k, p)| (format!("T{}", k + 1), p.to_string())).collect();
            Structure::Skew { matrix, second_family: *second_family, listed_pfaffians: listed }
        }
        data::StructureT::Minors { abc, r } => {
            let first = loader.polys(abc)?;
            let r = loader.poly(r)?;
            Structure::Minors { matrix: builders::minors_matrix(field, &first, &r) }
        }
    };
    let mut witnesses = Witnesses::default();
    for (index, seq) in t.witnesses {
        witnesses = witnesses.with(*index, loader.polys(seq)?);
    }
    let rhs = |r: &data::RhsT| -> Result<ColonRhs, CatalogError> {
        Ok(match r {
            data::RhsT::J => ColonRhs::J,
            data::RhsT::JPlus(v) => ColonRhs::JPlus(loader.polys(v)?),
            data::RhsT::Explicit(v) => ColonRhs::Explicit(loader.polys(v)?),
        })
    };
    let appendix = t
        .claims
        .iter()
        .map(|c| {
            Ok(match c {
                data::ClaimT::Colon { by, rhs: r } => AppendixClaim::Colon { by: loader.poly(by)?, rhs: rhs(r)? },
                data::ClaimT::Member(p) => AppendixClaim::Member(loader.poly(p)?),
                data::ClaimT::Regular(v) => AppendixClaim::Regular(loader.polys(v)?),
            })
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    let t5_identity = t.t5_identity.map(|s| loader.poly(s)).transpose()?;
    Ok(CaseData {
        id,
        field,
        params: full,
        dual,
        ideal_i,
        ideal_j,
        structure,
        phi,
        quadric: None,
        witnesses,
        appendix,
        t5_identity,
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests;
