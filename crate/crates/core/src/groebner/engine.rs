//! Buchberger's algorithm on polynomials sorted by an arbitrary order.

use std::cmp::Ordering;

use crate::field::{FieldDescriptor, Scalar};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Polynomial whose terms are sorted strictly decreasing under `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OPoly {
    pub terms: Vec<(Monomial, Scalar)>,
}

impl OPoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        if order != MonomialOrder::Grevlex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        OPoly { terms }
    }

    pub fn to_poly(&self, field: FieldDescriptor) -> Polynomial {
        Polynomial::from_terms(field, self.terms.iter().cloned()).expect("terms share the field")
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.inv().expect("nonzero");
                for t in self.terms.iter_mut() {
                    t.1 = &t.1 * &inv;
                }
            }
        }
        self
    }
}

/// `a - c * m * g`, merged in order.
fn sub_scaled(a: &[(Monomial, Scalar)], c: &Scalar, m: &Monomial, g: &OPoly, order: MonomialOrder) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + g.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < g.terms.len() {
        let gm = g.terms[j].0.mul(m);
        match order.cmp(&a[i].0, &gm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -&(c * &g.terms[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].1 - &(c * &g.terms[j].1);
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &g.terms[j..] {
        out.push((t.0.mul(m), -&(c * &t.1)));
    }
    out
}

/// Fully reduces `p` modulo the monic polynomials `basis`.
pub(crate) fn reduce(p: &OPoly, basis: &[OPoly], order: MonomialOrder) -> OPoly {
    let mut cur = p.terms.clone();
    let mut start = 0;
    let mut done = Vec::new();
    while start < cur.len() {
        let m = cur[start].0;
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = g.lm().quotient_of(&m).expect("divides");
                let c = cur[start].1.clone();
                cur = sub_scaled(&cur[start..], &c, &q, g, order);
                start = 0;
            }
            None => {
                done.push(cur[start].clone());
                start += 1;
            }
        }
    }
    OPoly { terms: done }
}

fn s_poly(f: &OPoly, g: &OPoly, order: MonomialOrder) -> OPoly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).expect("lcm");
    let mg = g.lm().quotient_of(&l).expect("lcm");
    let scaled_f = OPoly { terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect() };
    let one = f.terms[0].1.field().one();
    let terms = sub_scaled(&scaled_f.terms, &one, &mg, g, order);
    OPoly { terms }
}

/// Reduced Groebner basis of the given polynomials, sorted by increasing leading monomial.
///
/// Uses the normal selection strategy together with the coprime and chain
/// criteria. The output depends only on the ideal and the order.
pub(crate) fn buchberger(gens: &[OPoly], order: MonomialOrder) -> Vec<OPoly> {
    let mut basis: Vec<OPoly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    // `handled[i][j]` records that the pair (i, j) has been processed or discarded.
    let mut handled: Vec<Vec<bool>> = Vec::new();

    let mut inputs: Vec<OPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().map(OPoly::monic).collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then_with(|| a.terms.len().cmp(&b.terms.len())));

    let add = |p: OPoly, basis: &mut Vec<OPoly>, pairs: &mut Vec<(usize, usize)>, handled: &mut Vec<Vec<bool>>| {
        let k = basis.len();
        basis.push(p);
        for row in handled.iter_mut() {
            row.push(false);
        }
        handled.push(vec![false; k + 1]);
        for i in 0..k {
            pairs.push((i, k));
        }
    };

    for g in inputs {
        let r = reduce(&g, &basis, order);
        if !r.is_zero() {
            add(r.monic(), &mut basis, &mut pairs, &mut handled);
        }
    }

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first, ties broken by indices.
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = basis[pairs[a].0].lm().lcm(basis[pairs[a].1].lm());
                let lb = basis[pairs[b].0].lm().lcm(basis[pairs[b].1].lm());
                order.cmp(&la, &lb).then_with(|| pairs[a].cmp(&pairs[b]))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);
        let (li, lj) = (*basis[i].lm(), *basis[j].lm());
        let lcm = li.lcm(&lj);
        let coprime = li.is_coprime(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && handled[i.min(k)][i.max(k)]
                && handled[j.min(k)][j.max(k)]
        });
        handled[i][j] = true;
        if coprime || chain {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            add(r.monic(), &mut basis, &mut pairs, &mut handled);
        }
    }

    // Minimalize, then interreduce.
    let mut minimal: Vec<OPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h.lm().divides(g.lm()) && (h.lm() != g.lm() || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let reduced: Vec<OPoly> = (0..minimal.len())
        .map(|k| {
            let others: Vec<OPoly> = minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, g)| g.clone()).collect();
            let lead = OPoly { terms: vec![minimal[k].terms[0].clone()] };
            let tail = OPoly { terms: minimal[k].terms[1..].to_vec() };
            let mut t = lead.terms;
            t.extend(reduce(&tail, &others, order).terms);
            OPoly { terms: t }
        })
        .collect();
    reduced
}
