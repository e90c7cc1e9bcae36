//! The quadratic case: `I = J + (f)` with `J` the Pfaffians of a 5x5 skew
//! matrix of linear forms and `f` a quadric regular on `Q/J`.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::builders::{be_gorenstein_resolution, signed_pfaffians};
use super::pipeline::{cone_checks, degree_cap, finish, hf_detail, matrix_text, Certificate, Run};
use super::{AppendixClaim, CaseData, CaseId, CatalogError, ColonRhs, Params, Structure};
use crate::field::FieldDescriptor;
use crate::groebner::Ideal;
use crate::homalg::{betti_table, certify_acyclic, compose_zero, koszul_betti, mapping_cone, BettiTable, ChainMap, Witnesses};
use crate::invsys::{annihilator, dual_generator_of, DividedForm, DualGenerator, DualMonomial};
use crate::matrix::PolyMatrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::text::parse_poly;

/// Seed whose search result is frozen below.
pub const Q6_FROZEN_SEED: u64 = 6;

/// Upper triangle of the frozen skew matrix, row by row.
const FROZEN_T_UPPER: [&str; 10] = ["z - w", "-z", "y", "0", "x + w", "-y", "-z", "0", "y", "x + z"];
const FROZEN_F: &str = "w^2";

/// A skew matrix `T` and a quadric `f` defining a quadratic case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticInstance {
    pub t: PolyMatrix,
    pub f: Polynomial,
    /// Candidates drawn before this one was accepted (0 for the frozen instance).
    pub attempts: usize,
}

fn skew_from_upper(field: FieldDescriptor, upper: &[Polynomial]) -> PolyMatrix {
    let mut t = PolyMatrix::zeros(field, 5, 5);
    let mut k = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            t.set(i, j, upper[k].clone());
            t.set(j, i, -&upper[k]);
            k += 1;
        }
    }
    t
}

/// The frozen instance, read in `field`.
pub fn frozen_q6(field: FieldDescriptor) -> Result<QuadraticInstance, CatalogError> {
    let p = |s: &str| parse_poly(s, field).map_err(|source| CatalogError::Template { case: CaseId::Q6, source });
    let upper = FROZEN_T_UPPER.iter().map(|s| p(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(QuadraticInstance { t: skew_from_upper(field, &upper), f: p(FROZEN_F)?, attempts: 0 })
}

fn random_linear(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> Polynomial {
    if rng.gen_bool(0.25) {
        return Polynomial::zero(field);
    }
    let mut vars = [0usize, 1, 2, 3];
    vars.shuffle(rng);
    let n = rng.gen_range(1..=2);
    let mut p = Polynomial::zero(field);
    for &v in &vars[..n] {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        p = &p + &Polynomial::var(field, v).scale(&field.from_i64(sign));
    }
    p
}

fn random_quadric(rng: &mut ChaCha8Rng, field: FieldDescriptor) -> Polynomial {
    let monos = Monomial::of_degree(2);
    let n = rng.gen_range(1..=3);
    let mut p = Polynomial::zero(field);
    for m in monos.choose_multiple(rng, n) {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        p = &p + &Polynomial::monomial(field, *m).scale(&field.from_i64(sign));
    }
    p
}

/// Whether `(t, f)` defines a quadratic case: the Pfaffians have codimension
/// three, `f` is regular on `Q/J` and `Q/(J + f)` has Hilbert function 1,4,4,1.
fn admissible(t: &PolyMatrix, f: &Polynomial) -> Result<(), CatalogError> {
    be_gorenstein_resolution(t)?;
    let j = pfaffian_ideal(t)?;
    if j.colon(f)? != j {
        return Err(CatalogError::NotRegular(format!("J:({f}) ≠ J")));
    }
    let i = j.with(std::slice::from_ref(f))?;
    match i.artinian_hilbert_function(degree_cap()) {
        Some(hf) if hf == [1, 4, 4, 1] => Ok(()),
        Some(hf) => Err(CatalogError::WrongHilbert(hf)),
        None => Err(CatalogError::WrongHilbert(Vec::new())),
    }
}

fn pfaffian_ideal(t: &PolyMatrix) -> Result<Ideal, CatalogError> {
    let gens: Vec<Polynomial> = signed_pfaffians(t)?.into_iter().filter(|p| !p.is_zero()).collect();
    Ok(Ideal::new(t.field(), gens)?)
}

/// Draws skew matrices with entries `0` or `±v ± v'` and quadrics with up to
/// three monomial terms until an admissible pair appears.
pub fn search_q6(seed: u64) -> Result<QuadraticInstance, CatalogError> {
    let field = FieldDescriptor::Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempts in 1..=10_000 {
        let upper: Vec<Polynomial> = (0..10).map(|_| random_linear(&mut rng, field)).collect();
        let f = random_quadric(&mut rng, field);
        let t = skew_from_upper(field, &upper);
        if admissible(&t, &f).is_ok() {
            return Ok(QuadraticInstance { t, f, attempts });
        }
    }
    Err(CatalogError::NotRegular(format!("no admissible pair in 10000 draws from seed {seed}")))
}

pub(crate) fn q6_case_data(field: FieldDescriptor) -> Result<CaseData, CatalogError> {
    let inst = frozen_q6(field)?;
    case_data_for(field, &inst.t, &inst.f)
}

fn case_data_for(field: FieldDescriptor, t: &PolyMatrix, f: &Polynomial) -> Result<CaseData, CatalogError> {
    let j = pfaffian_ideal(t)?;
    let i = j.with(std::slice::from_ref(f))?;
    let dual = dual_generator_of(&i, degree_cap())?;
    Ok(CaseData {
        id: CaseId::Q6,
        field,
        params: Params::new(),
        dual,
        ideal_i: i.generators().to_vec(),
        ideal_j: j.generators().to_vec(),
        structure: Structure::Pfaffian { matrix: t.clone() },
        phi: Vec::new(),
        quadric: Some(f.clone()),
        witnesses: Witnesses::default(),
        appendix: vec![AppendixClaim::Colon { by: f.clone(), rhs: ColonRhs::J }],
        t5_identity: None,
        notes: vec![format!("T = {}, f = {f}", matrix_text(t))],
    })
}

/// Certifies the quadratic case for `(t, f)`: the cone of multiplication by
/// `f` on the Pfaffian resolution `G` resolves `Q/(J + f)`.
///
/// Fails with `NotRegular` when `J:(f) ≠ J` and `WrongHilbert` when the
/// Hilbert function of `Q/(J + f)` is not 1,4,4,1.
pub fn quadratic_case_pipeline(t: &PolyMatrix, f: &Polynomial) -> Result<Certificate, CatalogError> {
    let start = Instant::now();
    let field = t.field();
    admissible(t, f)?;
    let d = case_data_for(field, t, f)?;
    let cap = degree_cap();
    let i = Ideal::new(field, d.ideal_i.clone())?;
    let j = Ideal::new(field, d.ideal_j.clone())?;
    let mut run = Run::new();
    run.record("params_admissible", true, "no parameters");
    run.check("annihilator_equals_i", || {
        let ann = annihilator(&d.dual);
        Ok((ann == i, format!("dual generator {} recovered from the socle of Q/I", d.dual.form())))
    });
    run.check("minimal_generator_count", || {
        let mg = i.minimal_generators();
        Ok((mg.count() == 6 && mg.histogram.keys().all(|&k| k == 2), format!("μ(I) = {} with degree histogram {:?}", mg.count(), mg.histogram)))
    });
    let hf = i.artinian_hilbert_function(cap);
    run.record("hilbert_function", hf.as_deref() == Some(&[1, 4, 4, 1][..]), format!("HF(Q/I) = {}", hf_detail(&hf)));
    run.check("structure_pfaffians", || {
        Ok((t.is_skew_symmetric(), format!("T = {}, J = signed submaximal Pfaffians of T", matrix_text(t))))
    });
    run.check("j_contained_in_i", || Ok((i.contains_ideal(&j), format!("J = {j}"))));
    run.check("codim_j", || {
        let c = j.codimension()?;
        Ok((c == 3, format!("codim J = {c}")))
    });
    run.check("codim_i", || {
        let c = i.codimension()?;
        Ok((c == 4, format!("codim I = {c}")))
    });
    let g = be_gorenstein_resolution(t)?;
    run.check("resolution_homogeneous", || Ok((g.is_homogeneous(), format!("G: {g}"))));
    run.check("resolution_compose_zero", || Ok((compose_zero(&g), "consecutive differentials of G compose to zero".into())));
    run.check("acyclic_g", || {
        let r = certify_acyclic(&g, &d.witnesses)?;
        Ok((true, r.summary()))
    });
    run.check("appendix", || Ok((j.colon(f)? == j, format!("J:({f}) = J"))));
    run.check("presentation_exact", || {
        // ω of the Gorenstein ring Q/J is Q/J itself, embedded by f in degree 2.
        let (hj, hi) = (j.hilbert_series(), i.hilbert_series());
        let want = hj.shifted(2);
        let diff = hj.sub(&hi);
        Ok((diff == want, format!("HS(Q/J) - HS(Q/I) = {diff}, t^2 HS(Q/J) = {want}")))
    });
    let chain = run.value("chain_map_lift", || {
        // Multiplication by f is a chain map G(-2) -> G; scalar lift f·id.
        let c = ChainMap::multiplication(&g, f);
        Ok((Some(c), format!("multiplication by {f} on G")))
    });
    let chain = chain.expect("multiplication is always a chain map");
    let cone = mapping_cone(&chain);
    cone_checks(&mut run, &cone, &i, CaseId::Q6, cap);
    Ok(finish(d, run, Some(betti_table(&g)), Some(betti_table(&cone)), Some(&i), Some(&j), start))
}

/// Annihilator data for a random cubic form.
#[derive(Debug, Clone)]
pub struct RandomCubicReport {
    pub seed: u64,
    pub form: DividedForm,
    pub mu: usize,
    pub hilbert_function: Option<Vec<i64>>,
    pub betti: BettiTable,
}

impl RandomCubicReport {
    /// Six quadrics, Hilbert function 1,4,4,1 and total Betti numbers 1,6,10,6,1.
    pub fn pass(&self) -> bool {
        self.mu == 6 && self.hilbert_function.as_deref() == Some(&[1, 4, 4, 1][..]) && self.betti.totals() == [1, 6, 10, 6, 1]
    }
}

/// Cubic with integer coefficients in `[-5, 5]` on every divided-power monomial.
pub fn random_cubic_check(seed: u64) -> Result<RandomCubicReport, CatalogError> {
    let field = FieldDescriptor::Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms = Monomial::of_degree(3)
        .into_iter()
        .map(|m| (DualMonomial(m.exponents()), field.from_i64(rng.gen_range(-5..=5))))
        .collect::<Vec<_>>();
    let form = DividedForm::from_terms(field, terms)?;
    let i = annihilator(&DualGenerator::new(form.clone())?);
    let cap = degree_cap();
    Ok(RandomCubicReport {
        seed,
        form,
        mu: i.minimal_generators().count(),
        hilbert_function: i.artinian_hilbert_function(cap),
        betti: koszul_betti(&i, cap)?,
    })
}
