//! Graded Betti tables, read off a complex or computed independently from
//! Koszul homology.

use std::collections::BTreeMap;
use std::fmt;

use super::{GradedFreeModule, HomalgError};
use crate::field::Scalar;
use crate::groebner::Ideal;
use crate::linalg;
use crate::matrix::subsets;
use crate::monomial::{Monomial, NVARS};
use crate::poly::Polynomial;

/// `β_{i,j}`: the number of generators of internal degree `j` in homological degree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub(crate) fn from_modules(lowest: i32, modules: &[GradedFreeModule]) -> Self {
        let mut t = BettiTable::default();
        for (k, m) in modules.iter().enumerate() {
            debug_assert!(lowest == 0, "Betti tables are indexed from homological degree 0");
            for &d in m.degrees() {
                t.add(k, d, 1);
            }
        }
        t
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i32), usize)>) -> Self {
        let mut t = BettiTable::default();
        for ((i, j), n) in entries {
            t.add(i, j, n);
        }
        t
    }

    fn add(&mut self, i: usize, j: i32, n: usize) {
        if n > 0 {
            *self.entries.entry((i, j)).or_default() += n;
        }
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i32), usize> {
        &self.entries
    }

    /// Column sums, i.e. the ranks of the free modules.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (&(i, _), &n) in &self.entries {
            out[i] += n;
        }
        out
    }

    /// `{"i,j": β_{i,j}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.entries.iter().map(|(&(i, j), &n)| (format!("{i},{j}"), n.into())).collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let mut t = BettiTable::default();
        for (k, n) in v.as_object()? {
            let (i, j) = k.split_once(',')?;
            t.add(i.trim().parse().ok()?, j.trim().parse().ok()?, n.as_u64()? as usize);
        }
        Some(t)
    }
}

impl fmt::Display for BettiTable {
    /// Rows are `j - i`, columns are `i`; zero entries print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let totals = self.totals();
        let cols = totals.len();
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let (lo, hi) = match (rows.first(), rows.last()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return write!(f, "(empty)"),
        };
        let width = totals.iter().map(|n| n.to_string().len()).max().unwrap_or(1).max(cols.saturating_sub(1).to_string().len());
        let label = (lo..=hi).map(|r| format!("{r}:").len()).max().unwrap_or(2).max("total:".len());
        write!(f, "{:label$}", "")?;
        for i in 0..cols {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for n in &totals {
            write!(f, " {n:>width$}")?;
        }
        for r in lo..=hi {
            writeln!(f)?;
            write!(f, "{:>label$}", format!("{r}:"))?;
            for i in 0..cols {
                let n = self.get(i, r + i as i32);
                if n == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {n:>width$}")?;
                }
            }
        }
        Ok(())
    }
}

/// Graded Betti numbers of an Artinian `Q/I` as `dim_k H_i(K ⊗ Q/I)_j`,
/// where `K` is the Koszul complex on `x, y, z, w`. Independent of any
/// resolution built elsewhere.
pub fn koszul_betti(i: &Ideal, cap: usize) -> Result<BettiTable, HomalgError> {
    let field = i.field();
    let hf = i.artinian_hilbert_function(cap).ok_or(HomalgError::NotArtinian(cap))?;
    let socle = hf.len() as i32 - 1;
    let lms = i.groebner_basis().leading_monomials();
    // standard monomials by degree
    let standard: Vec<Vec<Monomial>> = (0..=socle as u32 + 1)
        .map(|d| Monomial::of_degree(d).into_iter().filter(|m| !lms.iter().any(|l| l.divides(m))).collect())
        .collect();
    let pos: Vec<BTreeMap<Monomial, usize>> =
        standard.iter().map(|s| s.iter().enumerate().map(|(k, m)| (*m, k)).collect()).collect();
    let quotient_dim = |d: i32| if (0..=socle).contains(&d) { standard[d as usize].len() } else { 0 };

    // matrix of d_{a,j}: C_{a,j} -> C_{a-1,j}, with C_{a,j} = ∧^a k^4 ⊗ (Q/I)_{j-a}
    let rank_of = |a: usize, j: i32| -> usize {
        if a == 0 || a > NVARS {
            return 0;
        }
        let (src_deg, tgt_deg) = (j - a as i32, j - a as i32 + 1);
        if quotient_dim(src_deg) == 0 || quotient_dim(tgt_deg) == 0 {
            return 0;
        }
        let src_sets = subsets(NVARS, a);
        let tgt_sets = subsets(NVARS, a - 1);
        let tgt_n = standard[tgt_deg as usize].len();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for s in &src_sets {
            for m in &standard[src_deg as usize] {
                let mut v = vec![field.zero(); tgt_sets.len() * tgt_n];
                for (t, &var) in s.iter().enumerate() {
                    let face: Vec<usize> = s.iter().copied().filter(|&u| u != var).collect();
                    let fi = tgt_sets.iter().position(|x| *x == face).expect("face");
                    let prod = Polynomial::monomial(field, m.mul(&Monomial::var(var)));
                    let nf = i.normal_form(&prod);
                    for (mm, c) in nf.terms() {
                        let slot = fi * tgt_n + pos[tgt_deg as usize][mm];
                        v[slot] = if t % 2 == 0 { &v[slot] + c } else { &v[slot] - c };
                    }
                }
                rows.push(v);
            }
        }
        linalg::rank(&rows)
    };

    let mut t = BettiTable::default();
    for a in 0..=NVARS {
        for j in a as i32..=a as i32 + socle {
            let dim = subsets(NVARS, a).len() * quotient_dim(j - a as i32);
            let b = dim - rank_of(a, j) - rank_of(a + 1, j);
            t.add(a, j, b);
        }
    }
    Ok(t)
}
