//! Verifiers for the polynomial identities, the colon-ideal facts and the
//! exactness of the presentation of `I/J`.

use super::builders::phi_relations_outside_j;
use super::{AppendixClaim, CaseData, CatalogError, ColonRhs, Family, Structure};
use crate::groebner::{is_regular_sequence, HilbertSeries, Ideal};
use crate::homalg::{dualize_shift, hilbert_series_of_coker, AcyclicityReport, GradedComplex, GradedMatrix};
use crate::poly::Polynomial;

/// Pass/fail with a human-readable account.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub pass: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_parts(parts: Vec<(String, bool)>) -> Self {
        let pass = parts.iter().all(|(_, ok)| *ok);
        let detail = parts.iter().map(|(s, ok)| format!("{s}: {}", if *ok { "ok" } else { "FAILED" })).collect::<Vec<_>>().join("; ");
        CheckOutcome { pass, detail }
    }
}

/// The family I identities `zT5 = AT1 - CT2`, `wT5 = BT1 - DT2` and the
/// expression of `T5` through `y^2, T1, T2`; or the three family II syzygies
/// `AT1 - CT2 + yT4 - zT5 = 0`, `BT1 - DT2 + yT3 - wT5 = 0`, `yT2 - zT3 + wT4 = 0`.
pub fn verify_identities(d: &CaseData) -> Result<CheckOutcome, CatalogError> {
    let Structure::Skew { matrix, .. } = &d.structure else {
        return Err(CatalogError::WrongCase(d.id));
    };
    let f = d.field;
    let t = matrix.submaximal_pfaffians()?;
    let (a, b, c, dd) = (matrix.get(0, 2), matrix.get(0, 3), matrix.get(1, 2), matrix.get(1, 3));
    let (y, z, w) = (Polynomial::var(f, 1), Polynomial::var(f, 2), Polynomial::var(f, 3));
    let mut parts = Vec::new();
    match d.id.family() {
        Family::I => {
            parts.push(("iden1: z*T5 = A*T1 - C*T2".to_string(), &z * &t[4] == &(a * &t[0]) - &(c * &t[1])));
            parts.push(("iden1: w*T5 = B*T1 - D*T2".to_string(), &w * &t[4] == &(b * &t[0]) - &(dd * &t[1])));
            if let Some(rhs) = &d.t5_identity {
                parts.push((format!("iden2: T5 = {rhs}"), &t[4] == rhs));
            }
        }
        Family::II => {
            let e1 = &(&(&(a * &t[0]) - &(c * &t[1])) + &(&y * &t[3])) - &(&z * &t[4]);
            let e2 = &(&(&(b * &t[0]) - &(dd * &t[1])) + &(&y * &t[2])) - &(&w * &t[4]);
            let e3 = &(&(&y * &t[1]) - &(&z * &t[2])) + &(&w * &t[3]);
            parts.push(("idenII: A*T1 - C*T2 + y*T4 - z*T5 = 0".to_string(), e1.is_zero()));
            parts.push(("idenII: B*T1 - D*T2 + y*T3 - w*T5 = 0".to_string(), e2.is_zero()));
            parts.push(("idenII: y*T2 - z*T3 + w*T4 = 0".to_string(), e3.is_zero()));
        }
        _ => return Err(CatalogError::WrongCase(d.id)),
    }
    Ok(CheckOutcome::from_parts(parts))
}

fn list(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

/// Every colon equality, membership and regular sequence attached to the case.
pub fn verify_appendix(d: &CaseData) -> Result<CheckOutcome, CatalogError> {
    let f = d.field;
    let j = Ideal::new(f, d.ideal_j.clone())?;
    let mut parts = Vec::new();
    for claim in &d.appendix {
        match claim {
            AppendixClaim::Colon { by, rhs } => {
                let (label, expected) = match rhs {
                    ColonRhs::J => ("J".to_string(), j.clone()),
                    ColonRhs::JPlus(extra) => (format!("J + ({})", list(extra)), j.with(extra)?),
                    ColonRhs::Explicit(gens) => (format!("({})", list(gens)), Ideal::new(f, gens.clone())?),
                };
                let colon = j.colon(by)?;
                parts.push((format!("J:({by}) = {label}"), colon == expected));
            }
            AppendixClaim::Member(p) => parts.push((format!("{p} ∈ J"), j.contains(p))),
            AppendixClaim::Regular(seq) => {
                let ok = is_regular_sequence(seq)?;
                parts.push((format!("{{{}}} regular", list(seq)), ok));
            }
        }
    }
    if parts.is_empty() {
        return Ok(CheckOutcome { pass: true, detail: "no claims for this case".into() });
    }
    Ok(CheckOutcome::from_parts(parts))
}

/// The three sub-checks certifying that
/// `F'_1 --∂'_1--> F'_0 --φ--> I/J -> 0` is exact, where `F' = Σ^{-3} G^*(-7)`.
#[derive(Debug, Clone)]
pub struct PresentationReport {
    /// (i) every entry of `φ ∘ ∂'_1` lies in `J`.
    pub relations_in_j: bool,
    /// (ii) `J + (φ) = I`.
    pub generates_i: bool,
    /// (iii) `HS(Q/J) - HS(Q/I) = HS(coker ∂'_1)`.
    pub series_match: bool,
    pub hilbert_qj: HilbertSeries,
    pub hilbert_qi: HilbertSeries,
    pub hilbert_coker: HilbertSeries,
    pub detail: String,
}

impl PresentationReport {
    pub fn pass(&self) -> bool {
        self.relations_in_j && self.generates_i && self.series_match
    }
}

/// `dual_report` must certify `Σ^{-3} G^*(-7)`; its alternating twist sum is
/// then the Hilbert series of `coker ∂'_1`.
pub fn verify_presentation_exact(
    phi: &GradedMatrix,
    g: &GradedComplex,
    dual_report: &AcyclicityReport,
    i: &Ideal,
    j: &Ideal,
) -> Result<PresentationReport, CatalogError> {
    let outside = phi_relations_outside_j(phi, g, j)?;
    let relations_in_j = outside.is_empty();
    let generates_i = j.with(phi.matrix().row(0))? == *i;
    let dual = dualize_shift(g, 3, 7);
    let hilbert_coker = hilbert_series_of_coker(&dual, dual_report)?;
    let (hilbert_qj, hilbert_qi) = (j.hilbert_series(), i.hilbert_series());
    let series_match = hilbert_qj.sub(&hilbert_qi) == hilbert_coker;
    let mut detail = vec![
        if relations_in_j {
            "(i) φ∘∂'1 ≡ 0 mod J".to_string()
        } else {
            format!("(i) entries outside J: {}", list(&outside))
        },
        format!("(ii) J + (φ) {} I", if generates_i { "=" } else { "≠" }),
        format!(
            "(iii) HS(Q/J) - HS(Q/I) = {} {} HS(coker) = {}",
            hilbert_qj.sub(&hilbert_qi),
            if series_match { "=" } else { "≠" },
            hilbert_coker
        ),
    ];
    detail.retain(|s| !s.is_empty());
    Ok(PresentationReport { relations_in_j, generates_i, series_match, hilbert_qj, hilbert_qi, hilbert_coker, detail: detail.join("; ") })
}
