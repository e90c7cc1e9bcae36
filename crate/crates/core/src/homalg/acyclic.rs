//! Acyclicity certificates via the Buchsbaum–Eisenbud criterion: a complex
//! `0 -> F_n -> ... -> F_0` of free modules is acyclic iff, for every
//! `i >= 1`, `rank ∂_i = r_i` and `grade I_{r_i}(∂_i) >= i`, where
//! `r_i = Σ_{j >= i} (-1)^{j-i} rank F_j`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{sample_point, GradedComplex, HomalgError};
use crate::groebner::{self, is_regular_sequence, GroebnerError, Ideal};
use crate::linalg;
use crate::poly::Polynomial;

/// Above this many minors the witness path is mandatory.
pub const MINOR_BUDGET: u128 = 100_000;

/// Candidate regular sequences inside `I_{r_i}(∂_i)`, keyed by `i`.
#[derive(Debug, Clone, Default)]
pub struct Witnesses(pub BTreeMap<i32, Vec<Polynomial>>);

impl Witnesses {
    pub fn with(mut self, index: i32, seq: Vec<Polynomial>) -> Self {
        self.0.insert(index, seq);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GradeMethod {
    /// `r_i = 0`, so the ideal of minors is the unit ideal.
    Trivial,
    /// A regular sequence of the given length lies in the ideal of minors.
    Witness { length: usize },
    /// All minors were generated; `codim` is `None` for the unit ideal.
    Minors { count: usize, codim: Option<u32>, witness_rejected: Option<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub index: i32,
    pub expected_rank: usize,
    pub rank: usize,
    /// Rank at a random point; a lower bound for `rank`, never used as the answer.
    pub sampled_rank: usize,
    pub needed_grade: u32,
    pub method: GradeMethod,
}

/// Evidence that a complex is acyclic. Only produced when every index passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcyclicityReport {
    pub lowest: i32,
    pub module_ranks: Vec<usize>,
    pub indices: Vec<IndexReport>,
}

impl AcyclicityReport {
    /// Whether this report was produced for a complex with the shape of `c`.
    pub fn certifies(&self, c: &GradedComplex) -> bool {
        self.lowest == c.lowest_degree() && self.module_ranks == c.ranks()
    }

    /// True when every grade bound came from a supplied witness (or is trivial).
    pub fn all_witnessed(&self) -> bool {
        self.indices.iter().all(|r| !matches!(r.method, GradeMethod::Minors { .. }))
    }

    pub fn summary(&self) -> String {
        let parts: Vec<String> = self
            .indices
            .iter()
            .map(|r| {
                let how = match &r.method {
                    GradeMethod::Trivial => "trivial".to_string(),
                    GradeMethod::Witness { length } => format!("witness of length {length}"),
                    GradeMethod::Minors { count, codim, witness_rejected } => {
                        let g = codim.map_or("unit".to_string(), |c| c.to_string());
                        let note = witness_rejected.as_ref().map_or(String::new(), |w| format!(", witness rejected: {w}"));
                        format!("{count} minors, codim {g}{note}")
                    }
                };
                format!("∂{}: rank {} = {}, grade >= {} ({how})", r.index, r.rank, r.expected_rank, r.needed_grade)
            })
            .collect();
        parts.join("; ")
    }
}

fn expected_ranks(c: &GradedComplex) -> Result<Vec<usize>, HomalgError> {
    // r[k] is the expected rank of ∂_{lowest + k + 1}
    let ranks = c.ranks();
    let n = c.differentials().len();
    let mut r = vec![0usize; n];
    let mut next = 0i64;
    for k in (0..n).rev() {
        let v = ranks[k + 1] as i64 - next;
        if v < 0 {
            return Err(HomalgError::NegativeExpectedRank(c.lowest_degree() + k as i32 + 1));
        }
        r[k] = v as usize;
        next = v;
    }
    Ok(r)
}

/// Why a witness sequence does not bound the grade, if it does not.
fn witness_problem(seq: &[Polynomial], minors: &[Polynomial], needed: u32) -> Option<String> {
    if (seq.len() as u32) < needed {
        return Some(format!("length {} < {needed}", seq.len()));
    }
    for w in seq {
        if !groebner::member_by_degree(w, minors) {
            return Some(format!("{w} is not in the ideal of minors"));
        }
    }
    match is_regular_sequence(seq) {
        Ok(true) => None,
        Ok(false) => Some("not a regular sequence".into()),
        Err(e) => Some(e.to_string()),
    }
}

/// Runs the criterion. `witnesses` may supply a regular sequence for any
/// index; it replaces the codimension computation when it checks out.
pub fn certify_acyclic(c: &GradedComplex, witnesses: &Witnesses) -> Result<AcyclicityReport, HomalgError> {
    let expected = expected_ranks(c)?;
    let point = sample_point(c.field(), 0x5eed);
    let mut indices = Vec::new();
    for (k, d) in c.differentials().iter().enumerate() {
        let index = c.lowest_degree() + k as i32 + 1;
        let needed = (k + 1) as u32;
        let r = expected[k];
        let sampled = linalg::rank(&d.matrix().evaluate(&point));
        let rank = if sampled > r { sampled } else { d.matrix().rank() };
        if rank != r {
            return Err(HomalgError::RankMismatch { index, expected: r, found: rank });
        }
        let method = if r == 0 {
            GradeMethod::Trivial
        } else {
            let count = d.matrix().minor_count(r);
            let witness = witnesses.0.get(&index);
            if witness.is_none() && count > MINOR_BUDGET {
                return Err(HomalgError::MinorBudgetExceeded { index, count });
            }
            let minors = d.matrix().minors(r);
            let rejected = witness.and_then(|seq| witness_problem(seq, &minors, needed));
            match (witness, rejected) {
                (Some(seq), None) => GradeMethod::Witness { length: seq.len() },
                (_, rejected) => {
                    if count > MINOR_BUDGET {
                        return Err(HomalgError::MinorBudgetExceeded { index, count });
                    }
                    let ideal = Ideal::new(c.field(), minors.clone()).expect("minors of a homogeneous matrix are homogeneous");
                    let codim = match ideal.codimension() {
                        Ok(g) => Some(g),
                        Err(GroebnerError::UnitIdeal) => None,
                        Err(e) => unreachable!("{e}"),
                    };
                    if let Some(g) = codim {
                        if g < needed {
                            return Err(HomalgError::GradeTooSmall { index, grade: g, needed });
                        }
                    }
                    GradeMethod::Minors { count: minors.len(), codim, witness_rejected: rejected }
                }
            }
        };
        indices.push(IndexReport { index, expected_rank: r, rank, sampled_rank: sampled, needed_grade: needed, method });
    }
    Ok(AcyclicityReport { lowest: c.lowest_degree(), module_ranks: c.ranks(), indices })
}
