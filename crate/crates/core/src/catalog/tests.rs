use super::*;
use crate::groebner::Ideal;
use crate::homalg::{betti_table, compose_zero, GradedComplex};
use crate::text::parse_poly;

fn q() -> FieldDescriptor {
    FieldDescriptor::Rationals
}

fn p(s: &str) -> Polynomial {
    parse_poly(s, q()).unwrap()
}

fn mat(rows: &[&[&str]]) -> PolyMatrix {
    let cols = rows[0].len();
    PolyMatrix::from_rows(q(), cols, rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
}

fn params(pairs: &[(char, i64)]) -> Params {
    pairs.iter().fold(Params::new(), |acc, &(n, v)| acc.with(n, q().from_i64(v)))
}

fn data(id: CaseId, pairs: &[(char, i64)]) -> CaseData {
    case_data(id, &params(pairs), q()).unwrap()
}

fn diff(g: &GradedComplex, i: i32) -> PolyMatrix {
    g.differential(i).unwrap().matrix().clone()
}

#[test]
fn iiid_eagon_northcott_matches_reference_matrices() {
    let g = eagon_northcott(&data(CaseId::IIId, &[])).unwrap();
    // A = y, B = 0, C = z, second row of M is (0, x, z, w).
    let d1 = mat(&[&["x^2", "x*z", "z*y", "x*w", "w*y - x*z", "-z*z"]]);
    let d2 = mat(&[
        &["0", "-z", "-z", "-w", "0", "0", "0", "0"],
        &["y", "x", "0", "0", "-z", "-w", "0", "0"],
        &["-x", "0", "0", "0", "0", "0", "-z", "-w"],
        &["0", "0", "y", "x", "0", "z", "0", "0"],
        &["0", "0", "-x", "0", "0", "0", "0", "z"],
        &["0", "0", "0", "0", "-x", "0", "-y", "-x"],
    ]);
    let d3 = mat(&[&["z", "w", "0"], &["0", "z", "w"], &["0", "-z", "0"], &["0", "0", "-z"], &["y", "x", "0"], &["0", "y", "x"], &["-x", "0", "0"], &["0", "-x", "0"]]);
    assert_eq!(diff(&g, 1), d1);
    assert_eq!(diff(&g, 2), d2);
    assert_eq!(diff(&g, 3), d3);
}

#[test]
fn family_iv_reference_second_differential_differs_in_one_entry() {
    let g = eagon_northcott(&data(CaseId::IVb, &[])).unwrap();
    let ours = diff(&g, 2);
    // IVb: A = 0, B = y, C = w; the reference last entry of row 6 is -x.
    let reference = mat(&[
        &["-y", "-z", "-w", "-w", "0", "0", "0", "0"],
        &["0", "y", "0", "0", "-w", "-w", "0", "0"],
        &["-x", "0", "0", "0", "0", "0", "-w", "-w"],
        &["0", "0", "0", "y", "y", "z", "0", "0"],
        &["0", "0", "-x", "0", "0", "0", "y", "z"],
        &["0", "0", "0", "0", "-x", "0", "0", "-x"],
    ]);
    let differing: Vec<(usize, usize)> = reference.entries().filter(|(i, j, e)| ours.get(*i, *j) != *e).map(|(i, j, _)| (i, j)).collect();
    assert_eq!(differing, vec![(5, 7)]);
    assert_eq!(*ours.get(5, 7), p("-y"));
    assert!(!diff(&g, 1).try_mul(&reference).unwrap().is_zero());
    assert!(diff(&g, 1).try_mul(&ours).unwrap().is_zero());
}

#[test]
fn brown_first_differential_ib() {
    let d = data(CaseId::Ib, &[('a', 2)]);
    let Structure::Skew { matrix, .. } = &d.structure else { panic!("skew") };
    let t = matrix.submaximal_pfaffians().unwrap();
    assert_eq!(t[0], p("y*z + 4*z^2 - 2*z*w - w^2"));
    let g = brown_resolution(&d).unwrap();
    let want = [t[0].clone(), -&t[1], p("-x*w"), p("x*z"), p("-x^2")];
    assert_eq!(diff(&g, 1).row(0), &want[..]);
}

#[test]
fn iib_third_pfaffian() {
    let d = data(CaseId::IIb, &[]);
    let Structure::Skew { matrix, .. } = &d.structure else { panic!("skew") };
    assert_eq!(matrix.submaximal_pfaffians().unwrap()[2], p("y^2"));
}

#[test]
fn iva_j_contains_listed_generator() {
    let e = FieldDescriptor::eisenstein();
    let d = case_data(CaseId::IVa, &CaseId::IVa.default_params(), e).unwrap();
    let j = Ideal::new(e, d.ideal_j.clone()).unwrap();
    let g = parse_poly("y^2 - (t - 1)*z*w - (2*t - 1)*z^2", e).unwrap();
    assert!(j.contains(&g));
    let m = parse_poly("w^4 - 3*(2*t - 1)*z^3*w", e).unwrap();
    assert!(j.contains(&m));
}

#[test]
fn every_resolution_composes_to_zero() {
    for id in CaseId::ALL {
        let d = case_data(id, &id.default_params(), id.default_field()).unwrap();
        let g = builders::resolution_of(&d).unwrap();
        assert!(compose_zero(&g), "{id}");
        assert!(g.is_homogeneous(), "{id}");
        let ranks = g.ranks();
        let want: &[usize] = match id.family() {
            Family::I | Family::II => &[1, 5, 6, 2],
            Family::III | Family::IV => &[1, 6, 8, 3],
            Family::Quadratic => &[1, 5, 5, 1],
        };
        assert_eq!(ranks, want, "{id}");
    }
}

#[test]
fn iia_phi_forms_agree() {
    for a in [2i64, 3, -1, 5] {
        let d = data(CaseId::IIa, &[('a', a)]);
        let b = d.params.get('b').unwrap().to_string();
        let s = |t: &str| p(&t.replace('a', &format!("({a})")).replace('b', &format!("({b})")));
        assert_eq!(s("z^2 + (a^2*b + a*b)*z*w + a^2*b*w^2"), s("z^2 + a*(a + 1)*b*z*w + a^2*b*w^2"));
        assert_eq!(d.phi[0], s("z^2 + a*(a + 1)*b*z*w + a^2*b*w^2"));
    }
}

#[test]
fn parameter_errors() {
    assert!(matches!(case_data(CaseId::IIa, &params(&[('a', 1)]), q()), Err(CatalogError::ParameterConstraintViolated(_))));
    assert!(matches!(case_data(CaseId::IIa, &params(&[('a', 0)]), q()), Err(CatalogError::ParameterConstraintViolated(_))));
    let iva = Params::new().with('a', q().from_i64(2));
    assert!(matches!(case_data(CaseId::IVa, &iva, q()), Err(CatalogError::WrongField { .. })));
    let e = FieldDescriptor::eisenstein();
    assert!(matches!(case_data(CaseId::IVa, &Params::new().with('a', e.from_i64(2)), e), Err(CatalogError::ParameterConstraintViolated(_))));
    assert!(matches!(case_data(CaseId::Ia, &params(&[('a', 2)]), q()), Err(CatalogError::MissingParameter { name: 'b', .. })));
    assert!(matches!(case_data(CaseId::IIId, &params(&[('a', 2)]), q()), Err(CatalogError::UnexpectedParameter { name: 'a', .. })));
    assert!(matches!(case_data(CaseId::Q6, &params(&[('a', 2)]), q()), Err(CatalogError::UnexpectedParameter { .. })));
    assert!(matches!(doubling_pipeline(CaseId::IIa, &params(&[('a', 1)]), q()), Err(CatalogError::ParameterConstraintViolated(_))));
    assert!(matches!("IIe".parse::<CaseId>(), Err(CatalogError::UnknownCase(_))));
    assert_eq!("iiib".parse::<CaseId>().unwrap(), CaseId::IIIb);
}

#[test]
fn iva_second_root_is_admissible() {
    let e = FieldDescriptor::eisenstein();
    let other = e.one().try_sub(&e.generator().unwrap()).unwrap();
    let d = case_data(CaseId::IVa, &Params::new().with('a', other), e).unwrap();
    assert_eq!(d.ideal_i.len(), 9);
}

#[test]
fn iib_sign_is_recorded() {
    let d = data(CaseId::IIb, &[]);
    assert_eq!(d.ideal_i.last().unwrap(), &p("x^3 - w^3"));
    assert_eq!(d.phi[1], p("w^3 - x^3"));
    assert!(d.notes[0].starts_with("sign of w^3 resolved to x^3 - w^3"));
}

#[test]
fn iiib_membership_uses_a_squared() {
    let d = data(CaseId::IIIb, &[('a', 2), ('b', 3)]);
    let j = Ideal::new(q(), d.ideal_j.clone()).unwrap();
    assert!(j.contains(&p("y^2*w^2 - 4*y^2*z^2 - w^4")));
    assert!(!j.contains(&p("y^2*w^2 - 2*y^2*z^2 - w^4")));
}

#[test]
fn iiib_colon_by_z_squared() {
    let d = data(CaseId::IIIb, &[('a', 1), ('b', 2)]);
    let j = Ideal::new(q(), d.ideal_j.clone()).unwrap();
    assert_eq!(j.colon(&p("z^2")).unwrap(), Ideal::new(q(), vec![p("x"), p("z"), p("w")]).unwrap());
}

#[test]
fn ia_degenerate_parameters_still_present_i_over_j() {
    let d = data(CaseId::Ia, &[('a', 1), ('b', 0)]);
    let g = brown_resolution(&d).unwrap();
    let j = Ideal::new(q(), d.ideal_j.clone()).unwrap();
    assert!(builders::phi_relations_outside_j(&build_phi(&d).unwrap(), &g, &j).unwrap().is_empty());
    let cert = doubling_pipeline(CaseId::Ia, &params(&[('a', 1), ('b', 0)]), q()).unwrap();
    assert!(cert.check("presentation_exact").unwrap().pass);
    let Structure::Skew { matrix, .. } = &d.structure else { panic!("skew") };
    let t = matrix.submaximal_pfaffians().unwrap();
    let rhs = Ideal::new(q(), vec![p("x"), t[0].clone(), t[1].clone(), t[4].clone()]).unwrap();
    assert_eq!(j.colon(&p("z*w")).unwrap(), rhs);
}

#[test]
fn corrupted_phi_fails_presentation() {
    let d = data(CaseId::IIId, &[]);
    let g = eagon_northcott(&d).unwrap();
    let j = Ideal::new(q(), d.ideal_j.clone()).unwrap();
    let i = Ideal::new(q(), d.ideal_i.clone()).unwrap();
    let mut bad = d.clone();
    bad.phi[1] = p("x*y^2");
    let phi = build_phi(&bad).unwrap();
    let dual = crate::homalg::dualize_shift(&g, 3, 7);
    let wit = crate::homalg::Witnesses(d.witnesses.0.iter().map(|(k, s)| (4 - k, s.clone())).collect());
    let rep = crate::homalg::certify_acyclic(&dual, &wit).unwrap();
    let r = verify_presentation_exact(&phi, &g, &rep, &i, &j).unwrap();
    assert!(!r.pass());
    assert!(!r.relations_in_j || !r.generates_i);
    let good = verify_presentation_exact(&build_phi(&d).unwrap(), &g, &rep, &i, &j).unwrap();
    assert!(good.pass(), "{}", good.detail);
}

#[test]
fn identities_hold() {
    let d = data(CaseId::Ia, &[('a', 2), ('b', 3)]);
    let o = verify_identities(&d).unwrap();
    assert!(o.pass, "{}", o.detail);
    let Structure::Skew { matrix, .. } = &d.structure else { panic!("skew") };
    let t = matrix.submaximal_pfaffians().unwrap();
    // T5 = y^2 - aT1 - bT2 - (ab - 1)^2 zw at a = 2, b = 3.
    let rhs = &(&(&p("y^2") - &t[0].scale(&q().from_i64(2))) - &t[1].scale(&q().from_i64(3))) - &p("25*z*w");
    assert_eq!(t[4], rhs);
    assert!(verify_identities(&data(CaseId::Ib, &[('a', 0)])).unwrap().pass);
    assert!(verify_identities(&data(CaseId::IIc, &[])).unwrap().pass);
    assert!(matches!(verify_identities(&data(CaseId::IIIa, &[])), Err(CatalogError::WrongCase(_))));
}

#[test]
fn j_invariant_values() {
    let e = FieldDescriptor::eisenstein();
    assert!(j_invariant(&e.generator().unwrap()).unwrap().is_zero());
    assert_eq!(j_invariant(&q().from_i64(-1)).unwrap(), q().from_i64(1728));
    assert_eq!(j_invariant(&q().from_i64(2)).unwrap(), q().from_i64(1728));
    assert!(matches!(j_invariant(&q().from_i64(0)), Err(CatalogError::DegenerateCubic(_))));
    assert!(matches!(j_invariant(&q().from_i64(1)), Err(CatalogError::DegenerateCubic(_))));
}

#[test]
fn characteristic_two_example() {
    let r = example_char_two().unwrap();
    assert!(r.pass(), "{r:?}");
}

#[test]
fn connected_sum() {
    for a in [2, -3, 5] {
        let r = connected_sum_example(&q().from_i64(a)).unwrap();
        assert!(r.pass(), "a = {a}: {}", r.annihilator);
    }
}

#[test]
fn connected_sum_form_with_zw_term_has_other_annihilator() {
    let f = crate::text::parse_dual("X*Y[2] + Y*(Z[2] + Z*W + 2*W[2]) + Z[3] + W[3]", q()).unwrap();
    let ann = crate::invsys::annihilator(&crate::invsys::DualGenerator::new(f).unwrap());
    assert_ne!(ann, connected_sum_example(&q().from_i64(2)).unwrap().annihilator);
    assert!(!ann.contains(&p("x*y + y*z - z^2")));
}

#[test]
fn frozen_q6_is_reproduced_by_search() {
    let found = search_q6(Q6_FROZEN_SEED).unwrap();
    let frozen = frozen_q6(q()).unwrap();
    assert_eq!(found.t, frozen.t);
    assert_eq!(found.f, frozen.f);
}

#[test]
fn q6_errors() {
    let inst = frozen_q6(q()).unwrap();
    let d = case_data(CaseId::Q6, &Params::new(), q()).unwrap();
    let in_j = d.ideal_j[0].clone();
    assert!(matches!(quadratic_case_pipeline(&inst.t, &in_j), Err(CatalogError::NotRegular(_))));
    let mut t = inst.t.clone();
    for k in 0..5 {
        t.set(0, k, Polynomial::zero(q()));
        t.set(k, 0, Polynomial::zero(q()));
    }
    assert!(matches!(be_gorenstein_resolution(&t), Err(CatalogError::WrongCodimension(_))));
    let mut quad = inst.t.clone();
    quad.set(0, 1, p("x^2"));
    quad.set(1, 0, p("-x^2"));
    assert!(matches!(be_gorenstein_resolution(&quad), Err(CatalogError::NotLinear(_))));
}

#[test]
fn q6_cone_layout() {
    let inst = frozen_q6(q()).unwrap();
    let cert = quadratic_case_pipeline(&inst.t, &inst.f).unwrap();
    assert!(cert.pass(), "{:?}", cert.failed());
    let b = cert.betti_cone.unwrap();
    assert_eq!(b.totals(), vec![1, 6, 10, 6, 1]);
    assert_eq!((b.get(2, 3), b.get(2, 4), b.get(3, 5), b.get(4, 7)), (5, 5, 6, 1));
    assert_eq!(cert.betti_g.unwrap().totals(), vec![1, 5, 5, 1]);
}

#[test]
fn random_cubic() {
    let r = random_cubic_check(1).unwrap();
    assert!(r.pass(), "{r:?}");
}

#[test]
fn certificate_round_trip_and_reverify() {
    let cert = run_case(CaseId::IIb, &Params::new(), q()).unwrap();
    let back = Certificate::from_json(&cert.to_json()).unwrap();
    assert_eq!(back, cert);
    assert!(reverify(&back).unwrap().is_empty());
    let e = FieldDescriptor::eisenstein();
    let cert = run_case(CaseId::IVa, &CaseId::IVa.default_params(), e).unwrap();
    assert_eq!(Certificate::from_json(&cert.to_json()).unwrap(), cert);
}

#[test]
fn family_betti_tables() {
    let totals = |id: CaseId| {
        let c = run_case(id, &id.default_params(), id.default_field()).unwrap();
        assert!(c.pass(), "{id}: {:?}", c.failed());
        let b = betti_table(&builders::resolution_of(&case_data(id, &id.default_params(), id.default_field()).unwrap()).unwrap());
        assert_eq!(c.betti_g.as_ref(), Some(&b));
        c.betti_cone.unwrap()
    };
    let ia = totals(CaseId::Ia);
    assert_eq!(ia.totals(), vec![1, 7, 12, 7, 1]);
    assert_eq!((ia.get(1, 2), ia.get(1, 3), ia.get(2, 3), ia.get(2, 4)), (6, 1, 6, 6));
    assert_eq!(totals(CaseId::IVb).totals(), vec![1, 9, 16, 9, 1]);
}

