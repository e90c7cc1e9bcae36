//! Resolutions of `J` and the presentation map `φ`.

use super::{load, CaseData, CaseId, CatalogError, Params, Structure};
use crate::field::FieldDescriptor;
use crate::groebner::Ideal;
use crate::homalg::{dualize_shift, GradedComplex, GradedFreeModule, GradedMatrix};
use crate::invsys::annihilator;
use crate::matrix::{subsets, PolyMatrix};
use crate::poly::Polynomial;

fn var(field: FieldDescriptor, i: usize) -> Polynomial {
    Polynomial::var(field, i)
}

fn zero(field: FieldDescriptor) -> Polynomial {
    Polynomial::zero(field)
}

fn rows(field: FieldDescriptor, cols: usize, r: Vec<Vec<Polynomial>>) -> PolyMatrix {
    PolyMatrix::from_rows(field, cols, r).expect("rows have the stated width")
}

fn module(degrees: &[i32]) -> GradedFreeModule {
    GradedFreeModule::new(degrees.to_vec())
}

/// The 5x5 skew matrix with entries `A, B, C, D`; in the second family the
/// `(2,5)` and `(3,4)` entries are `y` instead of `0` and `x`.
pub(crate) fn skew_matrix(field: FieldDescriptor, abcd: &[Polynomial], second_family: bool) -> PolyMatrix {
    let [a, b, c, d] = [&abcd[0], &abcd[1], &abcd[2], &abcd[3]].map(|p| p.clone());
    let (x, y, z, w) = (var(field, 0), var(field, 1), var(field, 2), var(field, 3));
    let (e, u) = if second_family { (y.clone(), y) } else { (zero(field), x) };
    let o = || zero(field);
    rows(
        field,
        5,
        vec![
            vec![o(), o(), a.clone(), b.clone(), o()],
            vec![o(), o(), c.clone(), d.clone(), e.clone()],
            vec![-&a, -&c, o(), u.clone(), z.clone()],
            vec![-&b, -&d, -&u, o(), w.clone()],
            vec![o(), -&e, -&z, -&w, o()],
        ],
    )
}

/// `[[x, A, B, C], [0, r, z, w]]`.
pub(crate) fn minors_matrix(field: FieldDescriptor, abc: &[Polynomial], r: &Polynomial) -> PolyMatrix {
    rows(
        field,
        4,
        vec![
            vec![var(field, 0), abc[0].clone(), abc[1].clone(), abc[2].clone()],
            vec![zero(field), r.clone(), var(field, 2), var(field, 3)],
        ],
    )
}

/// Brown-format resolution `Q <- Q^5(-2) <- Q(-4)+Q^5(-3) <- Q(-5)+Q(-4)` of
/// `Q/J` for families I and II, built from the case's skew matrix.
pub fn brown_resolution(d: &CaseData) -> Result<GradedComplex, CatalogError> {
    let Structure::Skew { matrix, .. } = &d.structure else {
        return Err(CatalogError::WrongCase(d.id));
    };
    let field = d.field;
    let pf = matrix.submaximal_pfaffians()?;
    let e = |i: usize, j: usize| matrix.get(i, j).clone();
    let (a, b, c, dd) = (e(0, 2), e(0, 3), e(1, 2), e(1, 3));
    let u = e(2, 3);
    let y_entry = e(1, 4);
    let (x, z, w) = (var(field, 0), var(field, 2), var(field, 3));
    let o = || zero(field);
    let d1 = rows(field, 5, vec![vec![pf[0].clone(), -&pf[1], -&(&x * &w), &x * &z, -&(&x * &u)]]);
    let d2 = rows(
        field,
        6,
        vec![
            vec![pf[1].clone(), o(), x.clone(), o(), o(), o()],
            vec![pf[0].clone(), -&x, o(), o(), o(), o()],
            vec![o(), a, c, o(), -&u, -&z],
            vec![o(), b, dd, u.clone(), o(), -&w],
            vec![o(), o(), y_entry, z.clone(), w.clone(), o()],
        ],
    );
    let d3 = rows(
        field,
        2,
        vec![
            vec![x.clone(), o()],
            vec![pf[0].clone(), o()],
            vec![-&pf[1], o()],
            vec![pf[2].clone(), -&w],
            vec![-&pf[3], z],
            vec![pf[4].clone(), -&u],
        ],
    );
    let (g0, g1, g2, g3) = (module(&[0]), module(&[2; 5]), module(&[4, 3, 3, 3, 3, 3]), module(&[5, 4]));
    let diffs = vec![
        GradedMatrix::new(d1, g1.clone(), g0)?,
        GradedMatrix::new(d2, g2.clone(), g1)?,
        GradedMatrix::new(d3, g3, g2)?,
    ];
    Ok(GradedComplex::new(field, 0, diffs)?)
}

/// Eagon–Northcott complex of a 2x4 matrix `M = (m; n)` of linear forms.
///
/// Generators of `G1` are the minors `Δ_ij = m_i n_j - m_j n_i` in the order
/// `12, 13, 23, 14, 24, 34`. Columns of `∂2` run over the triples `123, 124,
/// 134, 234`, each once with `m` and once with `n`; rows of `∂3` run over the
/// same triples, two per triple.
pub fn eagon_northcott_2x4(m: &PolyMatrix) -> Result<GradedComplex, CatalogError> {
    let field = m.field();
    let pairs: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
    let row_of = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("pair");
    let top = |i: usize| m.get(0, i).clone();
    let bot = |i: usize| m.get(1, i).clone();
    let minor = |i: usize, j: usize| &(&top(i) * &bot(j)) - &(&top(j) * &bot(i));
    let d1 = rows(field, 6, vec![pairs.iter().map(|&(i, j)| minor(i, j)).collect()]);

    let triples = subsets(4, 3);
    let mut d2 = PolyMatrix::zeros(field, 6, 8);
    for (t, tr) in triples.iter().enumerate() {
        let (i, j, k) = (tr[0], tr[1], tr[2]);
        for (s, r) in [&top as &dyn Fn(usize) -> Polynomial, &bot].into_iter().enumerate() {
            let col = 2 * t + s;
            d2.set(row_of(i, j), col, -&r(k));
            d2.set(row_of(i, k), col, r(j));
            d2.set(row_of(j, k), col, -&r(i));
        }
    }
    let mut d3 = PolyMatrix::zeros(field, 8, 3);
    for (t, tr) in triples.iter().enumerate() {
        let c = (0..4).find(|q| !tr.contains(q)).expect("complement");
        let sign = if t % 2 == 0 { 1 } else { -1 };
        let sg = |p: Polynomial| if sign > 0 { p } else { -&p };
        d3.set(2 * t, 0, sg(top(c)));
        d3.set(2 * t, 1, sg(bot(c)));
        d3.set(2 * t + 1, 1, sg(top(c)));
        d3.set(2 * t + 1, 2, sg(bot(c)));
    }
    let (g0, g1, g2, g3) = (module(&[0]), module(&[2; 6]), module(&[3; 8]), module(&[4; 3]));
    let diffs = vec![
        GradedMatrix::new(d1, g1.clone(), g0)?,
        GradedMatrix::new(d2, g2.clone(), g1)?,
        GradedMatrix::new(d3, g3, g2)?,
    ];
    Ok(GradedComplex::new(field, 0, diffs)?)
}

/// Eagon–Northcott resolution of `Q/J` for families III and IV.
pub fn eagon_northcott(d: &CaseData) -> Result<GradedComplex, CatalogError> {
    match &d.structure {
        Structure::Minors { matrix } => eagon_northcott_2x4(matrix),
        _ => Err(CatalogError::WrongCase(d.id)),
    }
}

/// Signed submaximal Pfaffians `(T1, -T2, T3, -T4, T5)`, which span the
/// left kernel of the skew matrix.
pub(crate) fn signed_pfaffians(t: &PolyMatrix) -> Result<Vec<Polynomial>, CatalogError> {
    let pf = t.submaximal_pfaffians()?;
    Ok(pf.iter().enumerate().map(|(i, p)| if i % 2 == 0 { p.clone() } else { -p }).collect())
}

/// Resolution `Q <- Q^5(-2) <- Q^5(-3) <- Q(-5)` of the Pfaffian ideal of a
/// 5x5 skew matrix of linear forms: `∂2 = T`, `∂1` the signed Pfaffians,
/// `∂3 = ∂1^T`. Fails unless the Pfaffians generate an ideal of codimension 3.
pub fn be_gorenstein_resolution(t: &PolyMatrix) -> Result<GradedComplex, CatalogError> {
    let field = t.field();
    if t.rows() != 5 || t.cols() != 5 {
        return Err(CatalogError::NotLinear(format!("{}x{} matrix, need 5x5", t.rows(), t.cols())));
    }
    if let Some((i, j, p)) = t.entries().find(|(_, _, p)| !p.is_zero() && p.degree() != Some(1) || !p.is_homogeneous()) {
        return Err(CatalogError::NotLinear(format!("entry ({}, {}) = {p}", i + 1, j + 1)));
    }
    let d1 = signed_pfaffians(t)?;
    let nonzero: Vec<Polynomial> = d1.iter().filter(|p| !p.is_zero()).cloned().collect();
    let codim = if nonzero.is_empty() { 0 } else { Ideal::new(field, nonzero)?.codimension()? };
    if codim != 3 {
        return Err(CatalogError::WrongCodimension(codim.to_string()));
    }
    let d1m = rows(field, 5, vec![d1.clone()]);
    let d3m = d1m.transpose();
    let (g0, g1, g2, g3) = (module(&[0]), module(&[2; 5]), module(&[3; 5]), module(&[5]));
    let diffs = vec![
        GradedMatrix::new(d1m, g1.clone(), g0)?,
        GradedMatrix::new(t.clone(), g2.clone(), g1)?,
        GradedMatrix::new(d3m, g3, g2)?,
    ];
    Ok(GradedComplex::new(field, 0, diffs)?)
}

/// `φ` as a map from the bottom module of `Σ^{-3} G^*(-7)` to `Q`.
pub fn build_phi(d: &CaseData) -> Result<GradedMatrix, CatalogError> {
    if d.phi.is_empty() {
        return Err(CatalogError::WrongCase(d.id));
    }
    let degrees: Vec<i32> = d.phi.iter().map(|p| p.degree().unwrap_or(0) as i32).collect();
    let m = rows(d.field, d.phi.len(), vec![d.phi.clone()]);
    Ok(GradedMatrix::new(m, module(&degrees), module(&[0]))?)
}

/// The resolution of `Q/J` appropriate to the case.
pub(crate) fn resolution_of(d: &CaseData) -> Result<GradedComplex, CatalogError> {
    match &d.structure {
        Structure::Skew { .. } => brown_resolution(d),
        Structure::Minors { matrix } => eagon_northcott_2x4(matrix),
        Structure::Pfaffian { matrix } => be_gorenstein_resolution(matrix),
    }
}

/// Entries of `φ ∘ (first differential of the shifted dual)` that are not in `J`.
pub(crate) fn phi_relations_outside_j(phi: &GradedMatrix, g: &GradedComplex, j: &Ideal) -> Result<Vec<Polynomial>, CatalogError> {
    let dual = dualize_shift(g, 3, 7);
    let d = dual.differential(1).expect("three-step complex");
    let prod = phi.compose(d)?;
    Ok(prod.matrix().entries().filter(|(_, _, p)| !j.contains(p)).map(|(_, _, p)| p.clone()).collect())
}

/// Tries each sign `s` of `w^3` in the cubic generator together with each
/// orientation `e` of the cubic component of `φ`, keeping the first pair for
/// which both `Ann(F) = I` and `φ ∘ ∂3* ≡ 0 mod J` hold.
pub(crate) fn resolve_sign_iib(field: FieldDescriptor, params: Params) -> Result<CaseData, CatalogError> {
    let mut tried = Vec::new();
    let mut chosen = None;
    for (s, e) in [(-1i64, 1i64), (1, 1), (-1, -1), (1, -1)] {
        let mut p = params.clone();
        p.set('s', field.from_i64(s));
        p.set('e', field.from_i64(e));
        let d = load(CaseId::IIb, field, p)?;
        let i = Ideal::new(field, d.ideal_i.clone())?;
        let j = Ideal::new(field, d.ideal_j.clone())?;
        let ann_ok = annihilator(&d.dual) == i;
        let g = brown_resolution(&d)?;
        let outside = phi_relations_outside_j(&build_phi(&d)?, &g, &j)?;
        let cubic = d.ideal_i.last().expect("cubic generator").clone();
        let phi2 = d.phi.last().expect("cubic component").clone();
        tried.push(format!("generator {cubic}, φ2 = {phi2}: annihilator {}, φ∘∂3* {}", verdict(ann_ok), verdict(outside.is_empty())));
        if ann_ok && outside.is_empty() && chosen.is_none() {
            chosen = Some(d);
        }
    }
    let summary = tried.join("; ");
    match chosen {
        Some(mut d) => {
            let cubic = d.ideal_i.last().expect("cubic").to_string();
            let phi2 = d.phi.last().expect("cubic component").to_string();
            d.notes.push(format!("sign of w^3 resolved to {cubic} with φ2 = {phi2} ({summary})"));
            Ok(d)
        }
        None => {
            let mut p = params;
            p.set('s', field.from_i64(-1));
            p.set('e', field.from_i64(1));
            let mut d = load(CaseId::IIb, field, p)?;
            d.notes.push(format!("no sign of w^3 passes ({summary})"));
            Ok(d)
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "fails"
    }
}
