//! End-to-end doubling pipelines and their certificates.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::builders::{build_phi, resolution_of};
use super::checks::{verify_appendix, verify_identities, verify_presentation_exact};
use super::{case_data, quadratic, CaseData, CaseId, CatalogError, Family, Params, Structure};
use crate::field::FieldDescriptor;
use crate::groebner::{HilbertSeries, Ideal};
use crate::homalg::{
    alternating_twist_series, betti_table, certify_acyclic, compose_zero, dualize_shift, is_minimal, koszul_betti,
    lift_chain_map, mapping_cone, AcyclicityReport, BettiTable, GradedComplex, Witnesses,
};
use crate::invsys::annihilator;
use crate::matrix::PolyMatrix;

/// Cap on the degree searched when deciding that a quotient is Artinian.
/// `GORLAB_DEGREE_CAP` overrides the default of 12.
pub fn degree_cap() -> usize {
    std::env::var("GORLAB_DEGREE_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(12)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u64,
}

/// Record of every check run on one case instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub case: CaseId,
    pub field: FieldDescriptor,
    pub params: Params,
    pub checks: Vec<CheckRecord>,
    pub betti_g: Option<BettiTable>,
    pub betti_cone: Option<BettiTable>,
    pub hilbert_qi: Option<HilbertSeries>,
    pub hilbert_qj: Option<HilbertSeries>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> Vec<&CheckRecord> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> Value {
        let series = |h: &Option<HilbertSeries>| {
            h.as_ref().map_or(Value::Null, |h| json!({"text": h.to_string(), "numerator": h.numerator()}))
        };
        json!({
            "case": self.case.name(),
            "field": self.field.to_string(),
            "params": self.params.to_json(),
            "pass": self.pass(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "pass": c.pass, "detail": c.detail, "elapsed_ms": c.elapsed_ms
            })).collect::<Vec<_>>(),
            "betti_G": self.betti_g.as_ref().map_or(Value::Null, |b| b.to_json()),
            "betti_cone": self.betti_cone.as_ref().map_or(Value::Null, |b| b.to_json()),
            "hilbert_QI": series(&self.hilbert_qi),
            "hilbert_QJ": series(&self.hilbert_qj),
            "notes": self.notes,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn from_json(v: &Value) -> Result<Certificate, String> {
        let s = |k: &str| v.get(k).and_then(Value::as_str).ok_or_else(|| format!("missing string field {k:?}"));
        let case: CaseId = s("case")?.parse().map_err(|e: CatalogError| e.to_string())?;
        let field: FieldDescriptor = s("field")?.parse().map_err(|e: crate::field::FieldError| e.to_string())?;
        let params = Params::from_json(v.get("params").unwrap_or(&Value::Null), field)?;
        let checks = v
            .get("checks")
            .and_then(Value::as_array)
            .ok_or("missing checks")?
            .iter()
            .map(|c| {
                Ok(CheckRecord {
                    name: c.get("name").and_then(Value::as_str).ok_or("check without name")?.to_string(),
                    pass: c.get("pass").and_then(Value::as_bool).ok_or("check without pass")?,
                    detail: c.get("detail").and_then(Value::as_str).unwrap_or("").to_string(),
                    elapsed_ms: c.get("elapsed_ms").and_then(Value::as_u64).unwrap_or(0),
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        let betti = |k: &str| match v.get(k) {
            None | Some(Value::Null) => Ok(None),
            Some(b) => BettiTable::from_json(b).map(Some).ok_or_else(|| format!("bad Betti table {k:?}")),
        };
        let series = |k: &str| match v.get(k).and_then(|h| h.get("numerator")) {
            None | Some(Value::Null) => Ok(None),
            Some(n) => serde_json::from_value::<Vec<i64>>(n.clone())
                .map(|n| Some(HilbertSeries::from_numerator(n)))
                .map_err(|e| e.to_string()),
        };
        let notes = v
            .get("notes")
            .and_then(Value::as_array)
            .map(|a| a.iter().filter_map(|n| n.as_str().map(String::from)).collect())
            .unwrap_or_default();
        Ok(Certificate {
            case,
            field,
            params,
            checks,
            betti_g: betti("betti_G")?,
            betti_cone: betti("betti_cone")?,
            hilbert_qi: series("hilbert_QI")?,
            hilbert_qj: series("hilbert_QJ")?,
            notes,
            elapsed_ms: v.get("elapsed_ms").and_then(Value::as_u64).unwrap_or(0),
        })
    }
}

/// Accumulates check records; a failed prerequisite turns later checks into
/// failures marked as not run.
pub(crate) struct Run {
    checks: Vec<CheckRecord>,
}

impl Run {
    pub(crate) fn new() -> Self {
        Run { checks: Vec::new() }
    }

    pub(crate) fn record(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckRecord { name: name.into(), pass, detail: detail.into(), elapsed_ms: 0 });
    }

    /// Runs `f`, recording its verdict; errors count as failures.
    pub(crate) fn check(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String), CatalogError>) -> bool {
        let t = Instant::now();
        let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(CheckRecord { name: name.into(), pass, detail, elapsed_ms: t.elapsed().as_millis() as u64 });
        pass
    }

    /// Like `check`, but keeps the value produced on success.
    pub(crate) fn value<T>(&mut self, name: &str, f: impl FnOnce() -> Result<(Option<T>, String), CatalogError>) -> Option<T> {
        let t = Instant::now();
        let (v, detail) = f().unwrap_or_else(|e| (None, format!("error: {e}")));
        self.checks.push(CheckRecord { name: name.into(), pass: v.is_some(), detail, elapsed_ms: t.elapsed().as_millis() as u64 });
        v
    }

    pub(crate) fn skip(&mut self, names: &[&str], reason: &str) {
        for n in names {
            self.record(n, false, format!("not run: {reason}"));
        }
    }

    pub(crate) fn into_checks(self) -> Vec<CheckRecord> {
        self.checks
    }
}

pub(crate) fn hf_detail(hf: &Option<Vec<i64>>) -> String {
    match hf {
        Some(v) => format!("{v:?}"),
        None => "not Artinian within the degree cap".into(),
    }
}

fn expected_cone_table(family: Family) -> BettiTable {
    let e: &[((usize, i32), usize)] = match family {
        Family::I | Family::II => &[((0, 0), 1), ((1, 2), 6), ((1, 3), 1), ((2, 3), 6), ((2, 4), 6), ((3, 4), 1), ((3, 5), 6), ((4, 7), 1)],
        Family::III | Family::IV => &[((0, 0), 1), ((1, 2), 6), ((1, 3), 3), ((2, 3), 8), ((2, 4), 8), ((3, 4), 3), ((3, 5), 6), ((4, 7), 1)],
        Family::Quadratic => &[((0, 0), 1), ((1, 2), 6), ((2, 3), 5), ((2, 4), 5), ((3, 5), 6), ((4, 7), 1)],
    };
    BettiTable::from_entries(e.iter().copied())
}

/// The Betti table every doubling cone of the family must have.
pub fn expected_betti_table(case: CaseId) -> BettiTable {
    expected_cone_table(case.family())
}

pub(crate) fn gorenstein_hilbert() -> HilbertSeries {
    HilbertSeries::from_hilbert_function(&[1, 4, 4, 1])
}

/// Witnesses for `Σ^{-3} G^*`: its `i`-th differential has the same ideal
/// of minors as `∂_{4-i}`.
fn dual_witnesses(w: &Witnesses) -> Witnesses {
    Witnesses(w.0.iter().map(|(i, s)| (4 - i, s.clone())).collect())
}

fn acyclic(c: &GradedComplex, w: &Witnesses) -> Result<(Option<AcyclicityReport>, String), CatalogError> {
    match certify_acyclic(c, w) {
        Ok(r) => {
            let s = r.summary();
            Ok((Some(r), s))
        }
        Err(e) => Ok((None, e.to_string())),
    }
}

fn structure_check(d: &CaseData, j: &Ideal, g: &GradedComplex) -> Result<(bool, String), CatalogError> {
    let first = g.differential(1).expect("three-step complex").matrix().row(0).to_vec();
    let i1 = Ideal::new(d.field, first.into_iter().filter(|p| !p.is_zero()).collect())?;
    let j_ok = i1 == *j;
    match &d.structure {
        Structure::Skew { matrix, listed_pfaffians, .. } => {
            let pf = matrix.submaximal_pfaffians()?;
            let mut bad = Vec::new();
            for (k, p) in pf.iter().enumerate() {
                let listed = listed_pfaffians.iter().find(|(i, _)| *i == k + 1).map(|(_, q)| q.clone());
                let ok = match &listed {
                    Some(q) => q == p,
                    None => p.is_zero(),
                };
                if !ok {
                    bad.push(format!("T{} = {p}", k + 1));
                }
            }
            let pf_text = pf.iter().enumerate().map(|(k, p)| format!("T{} = {p}", k + 1)).collect::<Vec<_>>().join(", ");
            let detail = format!(
                "{pf_text}; closed forms {}; J = I1(∂1) {}",
                if bad.is_empty() { "match".to_string() } else { format!("differ at {}", bad.join(", ")) },
                if j_ok { "holds" } else { "fails" }
            );
            Ok((bad.is_empty() && j_ok, detail))
        }
        Structure::Minors { matrix } | Structure::Pfaffian { matrix } => {
            Ok((j_ok, format!("M = {}; J = ideal of its minors {}", matrix_text(matrix), if j_ok { "holds" } else { "fails" })))
        }
    }
}

pub(crate) fn matrix_text(m: &PolyMatrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| format!("[{}]", m.row(i).iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn constraint_detail(d: &CaseData) -> String {
    match d.id {
        CaseId::IIa => {
            let a = d.params.get('a').expect("a");
            format!("a = {a}, a(a-1)(a^2-a+1) ≠ 0, b = 1/(a^2-a+1) = {}", d.params.get('b').expect("b"))
        }
        CaseId::IVa => format!("a = {}, a^2-a+1 = 0 in {}", d.params.get('a').expect("a"), d.field),
        _ if d.params.is_empty() => "no parameters".into(),
        _ => d.params.to_string(),
    }
}

/// Check names of the doubling pipeline, in order. `identities` runs only
/// for families I and II and `sign_resolution` only for IIb.
pub const DOUBLING_CHECKS: [&str; 23] = [
    "params_admissible",
    "sign_resolution",
    "annihilator_equals_i",
    "minimal_generator_count",
    "hilbert_function",
    "structure_pfaffians",
    "structure_minors",
    "j_contained_in_i",
    "codim_j",
    "codim_i",
    "resolution_homogeneous",
    "resolution_compose_zero",
    "acyclic_g",
    "acyclic_dual",
    "identities",
    "appendix",
    "presentation_exact",
    "chain_map_lift",
    "cone_compose_zero",
    "cone_minimal",
    "betti_table",
    "betti_koszul_cross_check",
    "hilbert_cone",
];

/// Runs every check for a non-quadratic case.
///
/// Fails with an error only for invalid input (parameters, field); a
/// mathematical check that fails is recorded in the certificate instead.
pub fn doubling_pipeline(id: CaseId, params: &Params, field: FieldDescriptor) -> Result<Certificate, CatalogError> {
    if id == CaseId::Q6 {
        return Err(CatalogError::WrongCase(id));
    }
    let start = Instant::now();
    let d = case_data(id, params, field)?;
    let cap = degree_cap();
    let mut run = Run::new();
    run.record("params_admissible", true, constraint_detail(&d));
    if id == CaseId::IIb {
        let note = d.notes.first().cloned().unwrap_or_default();
        run.record("sign_resolution", note.starts_with("sign of w^3 resolved"), note);
    }
    let i = Ideal::new(field, d.ideal_i.clone())?;
    let j = Ideal::new(field, d.ideal_j.clone())?;
    run.check("annihilator_equals_i", || {
        let ann = annihilator(&d.dual);
        let ok = ann == i;
        Ok((ok, format!("Ann({}) {} I = {i}", d.dual.form(), if ok { "=" } else { "≠" })))
    });
    run.check("minimal_generator_count", || {
        let mg = i.minimal_generators();
        let want: BTreeMap<u32, usize> = [(2, 6), (3, id.expected_mu() - 6)].into_iter().collect();
        Ok((mg.histogram == want, format!("μ(I) = {} with degree histogram {:?}", mg.count(), mg.histogram)))
    });
    let hf = i.artinian_hilbert_function(cap);
    run.record("hilbert_function", hf.as_deref() == Some(&[1, 4, 4, 1][..]), format!("HF(Q/I) = {}", hf_detail(&hf)));

    let g = resolution_of(&d);
    let structure_name = if matches!(d.structure, Structure::Skew { .. }) { "structure_pfaffians" } else { "structure_minors" };
    let g = match g {
        Ok(g) => g,
        Err(e) => {
            let pos = DOUBLING_CHECKS.iter().position(|n| *n == structure_name).expect("listed");
            let rest: Vec<&str> = DOUBLING_CHECKS[pos..]
                .iter()
                .copied()
                .filter(|n| *n != "structure_minors" && *n != "structure_pfaffians" && applies(n, id))
                .collect();
            run.record(structure_name, false, format!("building the resolution failed: {e}"));
            run.skip(&rest, "no resolution");
            return Ok(finish(d, run, None, None, Some(&i), Some(&j), start));
        }
    };
    run.check(structure_name, || structure_check(&d, &j, &g));
    run.check("j_contained_in_i", || Ok((i.contains_ideal(&j), format!("J = {j}"))));
    run.check("codim_j", || {
        let c = j.codimension()?;
        Ok((c == 3, format!("codim J = {c} (over {field})")))
    });
    run.check("codim_i", || {
        let c = i.codimension()?;
        Ok((c == 4, format!("codim I = {c} (over {field})")))
    });
    let dual = dualize_shift(&g, 3, 7);
    run.check("resolution_homogeneous", || {
        Ok((g.is_homogeneous() && dual.is_homogeneous(), format!("G: {g}; Σ^-3 G*(-7): {dual}")))
    });
    let composes = run.check("resolution_compose_zero", || {
        Ok((compose_zero(&g) && compose_zero(&dual), "consecutive differentials of G and of its shifted dual compose to zero".into()))
    });
    let (rep_g, rep_d) = if composes {
        let rg = run.value("acyclic_g", || acyclic(&g, &d.witnesses));
        let rd = run.value("acyclic_dual", || acyclic(&dual, &dual_witnesses(&d.witnesses)));
        (rg, rd)
    } else {
        run.skip(&["acyclic_g", "acyclic_dual"], "differentials do not compose to zero");
        (None, None)
    };
    if matches!(id.family(), Family::I | Family::II) {
        run.check("identities", || verify_identities(&d).map(|o| (o.pass, o.detail)));
    }
    run.check("appendix", || verify_appendix(&d).map(|o| (o.pass, o.detail)));
    let phi = build_phi(&d)?;
    match (&rep_g, &rep_d) {
        (Some(_), Some(rd)) => {
            run.check("presentation_exact", || {
                let r = verify_presentation_exact(&phi, &g, rd, &i, &j)?;
                Ok((r.pass(), r.detail))
            });
        }
        _ => run.skip(&["presentation_exact"], "G or its dual is not certified acyclic"),
    }
    let chain = run.value("chain_map_lift", || match lift_chain_map(&phi, &dual, &g) {
        Ok(c) => {
            let degs: Vec<String> = c.components().iter().map(|m| format!("{}x{}", m.matrix().rows(), m.matrix().cols())).collect();
            Ok((Some(c), format!("ι0 = φ lifted to components of shapes {}; all squares commute", degs.join(", "))))
        }
        Err(e) => Ok((None, e.to_string())),
    });
    let Some(chain) = chain else {
        run.skip(&["cone_compose_zero", "cone_minimal", "betti_table", "betti_koszul_cross_check", "hilbert_cone"], "no chain map");
        return Ok(finish(d, run, Some(betti_table(&g)), None, Some(&i), Some(&j), start));
    };
    let cone = mapping_cone(&chain);
    cone_checks(&mut run, &cone, &i, id, cap);
    Ok(finish(d, run, Some(betti_table(&g)), Some(betti_table(&cone)), Some(&i), Some(&j), start))
}

fn applies(name: &str, id: CaseId) -> bool {
    match name {
        "identities" => matches!(id.family(), Family::I | Family::II),
        "sign_resolution" => id == CaseId::IIb,
        _ => true,
    }
}

/// The checks shared by every cone: complex, minimality, Betti table against
/// the expected one and against Koszul homology of `Q/I`, Hilbert series.
pub(crate) fn cone_checks(run: &mut Run, cone: &GradedComplex, i: &Ideal, id: CaseId, cap: usize) {
    run.check("cone_compose_zero", || Ok((compose_zero(cone) && cone.is_homogeneous(), format!("{cone}"))));
    run.check("cone_minimal", || Ok((is_minimal(cone), "no differential entry has a nonzero constant term".into())));
    let table = betti_table(cone);
    run.check("betti_table", || {
        let want = expected_betti_table(id);
        Ok((table == want, format!("totals {:?}\n{table}", table.totals())))
    });
    run.check("betti_koszul_cross_check", || {
        let k = koszul_betti(i, cap)?;
        Ok((k == table, format!("Koszul homology of Q/I gives totals {:?}", k.totals())))
    });
    run.check("hilbert_cone", || {
        let hs = alternating_twist_series(cone)?;
        let ok = hs == gorenstein_hilbert() && hs == i.hilbert_series();
        Ok((ok, format!("alternating twist sum of the cone = {hs}")))
    });
}

pub(crate) fn finish(
    d: CaseData,
    run: Run,
    betti_g: Option<BettiTable>,
    betti_cone: Option<BettiTable>,
    i: Option<&Ideal>,
    j: Option<&Ideal>,
    start: Instant,
) -> Certificate {
    Certificate {
        case: d.id,
        field: d.field,
        params: d.params,
        checks: run.into_checks(),
        betti_g,
        betti_cone,
        hilbert_qi: i.map(|i| i.hilbert_series()),
        hilbert_qj: j.map(|j| j.hilbert_series()),
        notes: d.notes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the pipeline appropriate to the case.
pub fn run_case(id: CaseId, params: &Params, field: FieldDescriptor) -> Result<Certificate, CatalogError> {
    if id == CaseId::Q6 {
        if let Some((n, _)) = params.iter().next() {
            return Err(CatalogError::UnexpectedParameter { case: id, name: n });
        }
        let inst = quadratic::frozen_q6(field)?;
        quadratic::quadratic_case_pipeline(&inst.t, &inst.f)
    } else {
        doubling_pipeline(id, params, field)
    }
}

/// Every case at its default parameters and field, in catalog order.
pub fn verify_all() -> Vec<(CaseId, Result<Certificate, CatalogError>)> {
    let results: Vec<_> = CaseId::ALL
        .par_iter()
        .map(|&id| (id, run_case(id, &id.default_params(), id.default_field())))
        .collect();
    results
}

/// Re-runs the certificate's case and lists the checks whose verdict or
/// presence differs.
pub fn reverify(cert: &Certificate) -> Result<Vec<String>, CatalogError> {
    // Derived parameters (b in IIa, c in IIIb, the IIb signs) are recomputed.
    let mut params = Params::new();
    for (n, v) in cert.params.iter().filter(|(n, _)| cert.case.parameter_names().contains(n)) {
        params.set(n, v.clone());
    }
    let fresh = run_case(cert.case, &params, cert.field)?;
    let mut diffs = Vec::new();
    let old: BTreeMap<&str, bool> = cert.checks.iter().map(|c| (c.name.as_str(), c.pass)).collect();
    let new: BTreeMap<&str, bool> = fresh.checks.iter().map(|c| (c.name.as_str(), c.pass)).collect();
    for (name, pass) in &old {
        match new.get(name) {
            Some(p) if p == pass => {}
            Some(p) => diffs.push(format!("{name}: recorded {pass}, now {p}")),
            None => diffs.push(format!("{name}: no longer run")),
        }
    }
    for name in new.keys().filter(|n| !old.contains_key(*n)) {
        diffs.push(format!("{name}: not in the certificate"));
    }
    if fresh.betti_cone != cert.betti_cone {
        diffs.push("betti_cone differs".into());
    }
    Ok(diffs)
}
