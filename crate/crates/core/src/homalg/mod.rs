//! Graded free modules over `Q`, homogeneous matrices and complexes.
//!
//! A [`GradedFreeModule`] is recorded by its generator degrees: degree `a`
//! stands for the summand `Q(-a)`. A map `Q(-a_j) -> Q(-b_i)` is
//! homogeneous when entry `(i, j)` is zero or of degree `a_j - b_i`.
//! Complexes are indexed homologically, `∂_i: F_i -> F_{i-1}`.

mod acyclic;
mod betti;
pub mod conventions;

use std::fmt;

pub use acyclic::{certify_acyclic, AcyclicityReport, GradeMethod, IndexReport, Witnesses, MINOR_BUDGET};
pub use betti::{koszul_betti, BettiTable};

use crate::field::{FieldDescriptor, Scalar};
use crate::groebner::{HilbertSeries, index_of};
use crate::linalg;
use crate::matrix::{subsets, PolyMatrix};
use crate::monomial::Monomial;
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomalgError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry ({0}, {1}) is not homogeneous of the required degree")]
    NotHomogeneous(usize, usize),
    #[error("cannot infer the degree of column {column} of differential {index}: it is zero")]
    ZeroColumn { index: i32, column: usize },
    #[error("column {column} does not lie in the image")]
    LiftColumn { column: usize },
    #[error("chain map lift failed in homological degree {degree} (column {column})")]
    LiftFailed { degree: i32, column: usize },
    #[error("square in homological degree {0} does not commute")]
    NotChainMap(i32),
    #[error("rank of ∂_{index} is {found}, expected {expected}")]
    RankMismatch { index: i32, expected: usize, found: usize },
    #[error("grade of the ideal of minors of ∂_{index} is {grade}, needs at least {needed}")]
    GradeTooSmall { index: i32, grade: u32, needed: u32 },
    #[error("∂_{index} needs {count} minors, over the budget; supply a witness sequence")]
    MinorBudgetExceeded { index: i32, count: u128 },
    #[error("expected ranks of the complex are negative at index {0}")]
    NegativeExpectedRank(i32),
    #[error("the complex has not been certified acyclic")]
    NotCertified,
    #[error("generator degree {0} is negative")]
    NegativeDegree(i32),
    #[error("quotient is not Artinian below degree {0}")]
    NotArtinian(usize),
}

/// `⊕_j Q(-a_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedFreeModule {
    degrees: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(degrees: Vec<i32>) -> Self {
        GradedFreeModule { degrees }
    }

    pub fn zero() -> Self {
        GradedFreeModule::default()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn twisted(&self, d: i32) -> Self {
        GradedFreeModule { degrees: self.degrees.iter().map(|a| a + d).collect() }
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> Self {
        GradedFreeModule { degrees: self.degrees.iter().chain(&other.degrees).copied().collect() }
    }
}

impl fmt::Display for GradedFreeModule {
    /// Groups equal consecutive degrees: `Q(-4) + Q^5(-3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let mut groups: Vec<(i32, usize)> = Vec::new();
        for &d in &self.degrees {
            match groups.last_mut() {
                Some((e, n)) if *e == d => *n += 1,
                _ => groups.push((d, 1)),
            }
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|&(d, n)| {
                let power = if n == 1 { String::new() } else { format!("^{n}") };
                match d {
                    0 => format!("Q{power}"),
                    _ => format!("Q{power}({})", -d),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A matrix of polynomials between graded free modules, `source -> target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    matrix: PolyMatrix,
    source: GradedFreeModule,
    target: GradedFreeModule,
}

impl GradedMatrix {
    pub fn new(matrix: PolyMatrix, source: GradedFreeModule, target: GradedFreeModule) -> Result<Self, HomalgError> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(HomalgError::ShapeMismatch(format!(
                "{}x{} matrix between modules of ranks {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.rank(),
                target.rank()
            )));
        }
        Ok(GradedMatrix { matrix, source, target })
    }

    pub fn zero(field: FieldDescriptor, source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let matrix = PolyMatrix::zeros(field, target.rank(), source.rank());
        GradedMatrix { matrix, source, target }
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn field(&self) -> FieldDescriptor {
        self.matrix.field()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix) -> Result<GradedMatrix, HomalgError> {
        if other.target != self.source {
            return Err(HomalgError::ShapeMismatch("composed maps do not share the middle module".into()));
        }
        let matrix = self.matrix.try_mul(&other.matrix)?;
        Ok(GradedMatrix { matrix, source: other.source.clone(), target: self.target.clone() })
    }

    pub fn neg(&self) -> GradedMatrix {
        GradedMatrix { matrix: self.matrix.neg(), ..self.clone() }
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} <- {}", self.target, self.source)?;
        write!(f, "{}", self.matrix)
    }
}

/// Checks the degree rule entry by entry; returns the first offending position.
pub fn check_homogeneous(m: &GradedMatrix) -> Result<(), (usize, usize)> {
    for (i, j, p) in m.matrix.entries() {
        if p.is_zero() {
            continue;
        }
        let want = m.source.degrees[j] - m.target.degrees[i];
        if want < 0 || !p.is_homogeneous() || p.degree() != Some(want as u32) {
            return Err((i, j));
        }
    }
    Ok(())
}

/// Finite complex `F_hi -> ... -> F_lo` of graded free modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedComplex {
    field: FieldDescriptor,
    lowest: i32,
    modules: Vec<GradedFreeModule>,
    /// `differentials[k] = ∂_{lowest + k + 1}: modules[k + 1] -> modules[k]`.
    differentials: Vec<GradedMatrix>,
}

impl GradedComplex {
    /// `differentials[k]` maps homological degree `lowest + k + 1` to `lowest + k`.
    pub fn new(field: FieldDescriptor, lowest: i32, differentials: Vec<GradedMatrix>) -> Result<Self, HomalgError> {
        let Some(first) = differentials.first() else {
            return Err(HomalgError::ShapeMismatch("a complex needs at least one differential".into()));
        };
        let mut modules = vec![first.target.clone()];
        for (k, d) in differentials.iter().enumerate() {
            if d.target != modules[k] {
                return Err(HomalgError::ShapeMismatch(format!("∂_{} does not land in F_{}", lowest + k as i32 + 1, lowest + k as i32)));
            }
            modules.push(d.source.clone());
        }
        Ok(GradedComplex { field, lowest, modules, differentials })
    }

    /// Builds a complex from bare matrices, reading the degrees of each
    /// source from the first nonzero entry in every column.
    pub fn infer(field: FieldDescriptor, lowest: i32, f_lowest: GradedFreeModule, matrices: Vec<PolyMatrix>) -> Result<Self, HomalgError> {
        let mut target = f_lowest;
        let mut diffs = Vec::with_capacity(matrices.len());
        for (k, m) in matrices.into_iter().enumerate() {
            let index = lowest + k as i32 + 1;
            let mut degrees = Vec::with_capacity(m.cols());
            for j in 0..m.cols() {
                let i = (0..m.rows())
                    .find(|&i| !m.get(i, j).is_zero())
                    .ok_or(HomalgError::ZeroColumn { index, column: j })?;
                degrees.push(target.degrees[i] + m.get(i, j).degree().expect("nonzero") as i32);
            }
            let source = GradedFreeModule::new(degrees);
            let d = GradedMatrix::new(m, source.clone(), target)?;
            check_homogeneous(&d).map_err(|(i, j)| HomalgError::NotHomogeneous(i, j))?;
            diffs.push(d);
            target = source;
        }
        GradedComplex::new(field, lowest, diffs)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn lowest_degree(&self) -> i32 {
        self.lowest
    }

    pub fn highest_degree(&self) -> i32 {
        self.lowest + self.modules.len() as i32 - 1
    }

    /// `F_i`, or the zero module outside the range.
    pub fn module(&self, i: i32) -> GradedFreeModule {
        let k = i - self.lowest;
        if k < 0 || k as usize >= self.modules.len() {
            return GradedFreeModule::zero();
        }
        self.modules[k as usize].clone()
    }

    /// `∂_i: F_i -> F_{i-1}`, for `lowest < i <= highest`.
    pub fn differential(&self, i: i32) -> Option<&GradedMatrix> {
        let k = i - self.lowest - 1;
        if k < 0 {
            return None;
        }
        self.differentials.get(k as usize)
    }

    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.differentials
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(GradedFreeModule::rank).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.differentials.iter().all(|d| check_homogeneous(d).is_ok())
    }

    /// Replaces one differential entry; used to build corrupted copies in tests.
    pub fn with_entry(&self, i: i32, row: usize, col: usize, p: Polynomial) -> GradedComplex {
        let mut out = self.clone();
        let k = (i - self.lowest - 1) as usize;
        out.differentials[k].matrix.set(row, col, p);
        out
    }
}

impl fmt::Display for GradedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.modules.iter().rev().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" -> "))
    }
}

/// Whether every composition `∂_{i-1} ∂_i` vanishes.
pub fn compose_zero(c: &GradedComplex) -> bool {
    c.differentials.windows(2).all(|w| w[0].compose(&w[1]).map(|m| m.matrix.is_zero()).unwrap_or(false))
}

/// The Koszul complex on homogeneous elements `fs`, with `K_0 = Q`.
pub fn koszul_complex(field: FieldDescriptor, fs: &[Polynomial]) -> Result<GradedComplex, HomalgError> {
    let n = fs.len();
    let deg = |s: &[usize]| s.iter().map(|&k| fs[k].degree().unwrap_or(0) as i32).sum::<i32>();
    let mut diffs = Vec::new();
    for i in 1..=n {
        let src = subsets(n, i);
        let tgt = subsets(n, i - 1);
        let mut m = PolyMatrix::zeros(field, tgt.len(), src.len());
        for (j, s) in src.iter().enumerate() {
            for (t, &v) in s.iter().enumerate() {
                let rest: Vec<usize> = s.iter().copied().filter(|&u| u != v).collect();
                let row = tgt.iter().position(|r| *r == rest).expect("face");
                let p = if t % 2 == 0 { fs[v].clone() } else { -&fs[v] };
                m.set(row, j, p);
            }
        }
        let source = GradedFreeModule::new(src.iter().map(|s| deg(s)).collect());
        let target = GradedFreeModule::new(tgt.iter().map(|s| deg(s)).collect());
        diffs.push(GradedMatrix::new(m, source, target)?);
    }
    GradedComplex::new(field, 0, diffs)
}

/// `Σ^{-g} C^*(-extra)`: `D_i = Hom(C_{g-i}, Q)(-extra)`, generator degrees
/// `extra - a`, differential `(-1)^g (∂_{g-i+1})^T`.
pub fn dualize_shift(c: &GradedComplex, g: i32, extra: i32) -> GradedComplex {
    let sign = conventions::dual_sign(g);
    let dual = |m: &GradedFreeModule| GradedFreeModule::new(m.degrees.iter().map(|a| extra - a).collect());
    let lowest = g - c.highest_degree();
    let mut diffs = Vec::new();
    for i in lowest + 1..=g - c.lowest {
        let d = c.differential(g - i + 1).expect("in range");
        let mut m = d.matrix.transpose();
        if sign < 0 {
            m = m.neg();
        }
        diffs.push(GradedMatrix { matrix: m, source: dual(&d.target), target: dual(&d.source) });
    }
    GradedComplex { field: c.field, lowest, modules: (lowest..=g - c.lowest).map(|i| dual(&c.module(g - i))).collect(), differentials: diffs }
}

/// Solves `d · X = rhs` over `Q` with `X` homogeneous of degree zero,
/// column by column as a linear system in the coefficients of the entries of `X`.
pub fn lift_through(d: &GradedMatrix, rhs: &GradedMatrix) -> Result<GradedMatrix, HomalgError> {
    if d.target != rhs.target {
        return Err(HomalgError::ShapeMismatch("lift_through: different targets".into()));
    }
    check_homogeneous(d).map_err(|(i, j)| HomalgError::NotHomogeneous(i, j))?;
    let field = d.field();
    let mut x = PolyMatrix::zeros(field, d.source.rank(), rhs.source.rank());
    for k in 0..rhs.source.rank() {
        let c = rhs.source.degrees[k];
        // unknowns: (row of X, monomial)
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        for (i, &b) in d.source.degrees.iter().enumerate() {
            if c - b >= 0 {
                unknowns.extend(Monomial::of_degree((c - b) as u32).into_iter().map(|m| (i, m)));
            }
        }
        // equations: (row of d, monomial) blocks
        let mut offsets = Vec::with_capacity(d.target.rank());
        let mut bases = Vec::with_capacity(d.target.rank());
        let mut neq = 0;
        for (j, &t) in d.target.degrees.iter().enumerate() {
            let e = c - t;
            let basis = if e >= 0 { Monomial::of_degree(e as u32) } else { Vec::new() };
            if e < 0 && !rhs.matrix.get(j, k).is_zero() {
                return Err(HomalgError::LiftColumn { column: k });
            }
            offsets.push(neq);
            neq += basis.len();
            bases.push(basis);
        }
        let indices: Vec<_> = bases.iter().map(|b| index_of(b)).collect();
        let mut a = vec![vec![field.zero(); unknowns.len()]; neq];
        for (u, (i, m)) in unknowns.iter().enumerate() {
            for j in 0..d.target.rank() {
                let entry = d.matrix.get(j, *i);
                for (mm, coef) in entry.terms() {
                    let prod = mm.mul(m);
                    let row = offsets[j] + indices[j][&prod];
                    a[row][u] = &a[row][u] + coef;
                }
            }
        }
        let mut b = vec![vec![field.zero()]; neq];
        for j in 0..d.target.rank() {
            for (mm, coef) in rhs.matrix.get(j, k).terms() {
                let Some(&pos) = indices[j].get(mm) else {
                    return Err(HomalgError::LiftColumn { column: k });
                };
                b[offsets[j] + pos][0] = coef.clone();
            }
        }
        let sol = linalg::solve(&a, &b, unknowns.len(), field).map_err(|_| HomalgError::LiftColumn { column: k })?;
        let mut entries = vec![Polynomial::zero(field); d.source.rank()];
        for (u, (i, m)) in unknowns.iter().enumerate() {
            if !sol[u][0].is_zero() {
                entries[*i] = &entries[*i] + &Polynomial::term(sol[u][0].clone(), *m);
            }
        }
        for (i, p) in entries.into_iter().enumerate() {
            x.set(i, k, p);
        }
    }
    let out = GradedMatrix { matrix: x, source: rhs.source.clone(), target: d.source.clone() };
    debug_assert!(d.compose(&out).map(|m| m.matrix == rhs.matrix).unwrap_or(false));
    Ok(out)
}

/// A degree-preserving map of complexes `source -> target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: GradedComplex,
    target: GradedComplex,
    /// `components[k]` acts in homological degree `source.lowest + k`.
    components: Vec<GradedMatrix>,
}

impl ChainMap {
    /// Validates every commuting square `∂^T_i ι_i = ι_{i-1} ∂^S_i`.
    pub fn new(source: GradedComplex, target: GradedComplex, components: Vec<GradedMatrix>) -> Result<Self, HomalgError> {
        if source.lowest != target.lowest || components.len() != source.modules.len() {
            return Err(HomalgError::ShapeMismatch("chain map components do not match the complexes".into()));
        }
        let map = ChainMap { source, target, components };
        for i in map.source.lowest + 1..=map.source.highest_degree() {
            if !map.square_commutes(i)? {
                return Err(HomalgError::NotChainMap(i));
            }
        }
        Ok(map)
    }

    fn square_commutes(&self, i: i32) -> Result<bool, HomalgError> {
        let k = (i - self.source.lowest) as usize;
        let right = self.components[k - 1].compose(self.source.differential(i).expect("in range"))?;
        let left = match self.target.differential(i) {
            Some(d) => d.compose(&self.components[k])?,
            None => return Ok(right.matrix.is_zero()),
        };
        Ok(left.matrix == right.matrix)
    }

    pub fn component(&self, i: i32) -> Option<&GradedMatrix> {
        self.components.get((i - self.source.lowest) as usize)
    }

    pub fn components(&self) -> &[GradedMatrix] {
        &self.components
    }

    pub fn source(&self) -> &GradedComplex {
        &self.source
    }

    pub fn target(&self) -> &GradedComplex {
        &self.target
    }

    pub fn identity(c: &GradedComplex) -> ChainMap {
        let components = c
            .modules
            .iter()
            .map(|m| GradedMatrix { matrix: PolyMatrix::identity(c.field, m.rank()), source: m.clone(), target: m.clone() })
            .collect();
        ChainMap { source: c.clone(), target: c.clone(), components }
    }

    /// Multiplication by a homogeneous `f` from `C(-deg f)` to `C`.
    pub fn multiplication(c: &GradedComplex, f: &Polynomial) -> ChainMap {
        let d = f.degree().unwrap_or(0) as i32;
        let shifted = GradedComplex {
            field: c.field,
            lowest: c.lowest,
            modules: c.modules.iter().map(|m| m.twisted(d)).collect(),
            differentials: c
                .differentials
                .iter()
                .map(|m| GradedMatrix { matrix: m.matrix.clone(), source: m.source.twisted(d), target: m.target.twisted(d) })
                .collect(),
        };
        let components = c
            .modules
            .iter()
            .map(|m| GradedMatrix {
                matrix: PolyMatrix::identity(c.field, m.rank()).scale(f),
                source: m.twisted(d),
                target: m.clone(),
            })
            .collect();
        ChainMap { source: shifted, target: c.clone(), components }
    }
}

/// Extends `iota0: S_lo -> T_lo` to a chain map by solving
/// `∂^T_i ι_i = ι_{i-1} ∂^S_i` in each degree.
pub fn lift_chain_map(iota0: &GradedMatrix, source: &GradedComplex, target: &GradedComplex) -> Result<ChainMap, HomalgError> {
    if iota0.source != source.module(source.lowest) || iota0.target != target.module(target.lowest) || source.lowest != target.lowest {
        return Err(HomalgError::ShapeMismatch("ι_0 does not match the bottom modules".into()));
    }
    let mut comps = vec![iota0.clone()];
    for i in source.lowest + 1..=source.highest_degree() {
        let rhs = comps.last().expect("nonempty").compose(source.differential(i).expect("in range"))?;
        let next = match target.differential(i) {
            Some(d) => lift_through(d, &rhs).map_err(|e| match e {
                HomalgError::LiftColumn { column } => HomalgError::LiftFailed { degree: i, column },
                other => other,
            })?,
            None => {
                if let Some((_, j, _)) = rhs.matrix.entries().find(|(_, _, p)| !p.is_zero()) {
                    return Err(HomalgError::LiftFailed { degree: i, column: j });
                }
                GradedMatrix::zero(source.field, source.module(i), GradedFreeModule::zero())
            }
        };
        comps.push(next);
    }
    ChainMap::new(source.clone(), target.clone(), comps)
}

/// `Cone_i = T_i ⊕ S_{i-1}` with differential `[[∂^T, ι], [0, -∂^S]]`.
pub fn mapping_cone(phi: &ChainMap) -> GradedComplex {
    let (s, t) = (&phi.source, &phi.target);
    let field = t.field;
    let lowest = t.lowest;
    let highest = t.highest_degree().max(s.highest_degree() + 1);
    let cone_module = |i: i32| t.module(i).direct_sum(&s.module(i - 1));
    let mut diffs = Vec::new();
    for i in lowest + 1..=highest {
        let (src, tgt) = (cone_module(i), cone_module(i - 1));
        let (nt_i, nt_im1) = (t.module(i).rank(), t.module(i - 1).rank());
        let mut m = PolyMatrix::zeros(field, tgt.rank(), src.rank());
        if let Some(d) = t.differential(i) {
            for (a, b, p) in d.matrix.entries() {
                m.set(a, b, p.clone());
            }
        }
        if let Some(iota) = phi.component(i - 1) {
            for (a, b, p) in iota.matrix.entries() {
                m.set(a, nt_i + b, p.clone());
            }
        }
        if let Some(d) = s.differential(i - 1) {
            for (a, b, p) in d.matrix.entries() {
                let v = if conventions::CONE_SOURCE_SIGN < 0 { -p } else { p.clone() };
                m.set(nt_im1 + a, nt_i + b, v);
            }
        }
        diffs.push(GradedMatrix { matrix: m, source: src, target: tgt });
    }
    GradedComplex::new(field, lowest, diffs).expect("cone modules line up")
}

/// True when no differential entry has a nonzero constant term.
pub fn is_minimal(c: &GradedComplex) -> bool {
    c.differentials.iter().all(|d| !d.matrix.has_unit_entry())
}

pub fn betti_table(c: &GradedComplex) -> BettiTable {
    BettiTable::from_modules(c.lowest, &c.modules)
}

/// `Σ_i (-1)^(i - lowest) Σ_j t^{a_ij} / (1 - t)^4`, with no exactness assumed.
pub fn alternating_twist_series(c: &GradedComplex) -> Result<HilbertSeries, HomalgError> {
    let mut twists = Vec::new();
    for (k, m) in c.modules.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for &d in &m.degrees {
            if d < 0 {
                return Err(HomalgError::NegativeDegree(d));
            }
            twists.push((sign, d as i64));
        }
    }
    Ok(HilbertSeries::from_twists(twists))
}

/// Hilbert series of `H_lowest(C)`, which equals the alternating twist sum once `C` is acyclic.
pub fn hilbert_series_of_coker(c: &GradedComplex, report: &AcyclicityReport) -> Result<HilbertSeries, HomalgError> {
    if !report.certifies(c) {
        return Err(HomalgError::NotCertified);
    }
    alternating_twist_series(c)
}

/// A random rational point used for rank pre-checks.
pub(crate) fn sample_point(field: FieldDescriptor, seed: u64) -> [Scalar; 4] {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    std::array::from_fn(|_| field.from_i64(rng.gen_range(-97..=97)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    fn p(s: &str) -> Polynomial {
        parse_poly(s, Q).unwrap()
    }

    fn vars(names: &[&str]) -> Vec<Polynomial> {
        names.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn homogeneity_rule() {
        let m = PolyMatrix::identity(Q, 1);
        let ok = GradedMatrix::new(m.clone(), GradedFreeModule::new(vec![0]), GradedFreeModule::new(vec![0])).unwrap();
        assert!(check_homogeneous(&ok).is_ok());
        let bad = GradedMatrix::new(m, GradedFreeModule::new(vec![1]), GradedFreeModule::new(vec![0])).unwrap();
        assert_eq!(check_homogeneous(&bad), Err((0, 0)));
        let zero = GradedMatrix::zero(Q, GradedFreeModule::new(vec![5, 7]), GradedFreeModule::new(vec![0]));
        assert!(check_homogeneous(&zero).is_ok());
    }

    #[test]
    fn koszul_complexes() {
        let k = koszul_complex(Q, &vars(&["x", "y"])).unwrap();
        assert!(compose_zero(&k));
        assert_eq!(k.ranks(), vec![1, 2, 1]);
        let bad = k.with_entry(2, 0, 0, p("2*y"));
        assert!(!compose_zero(&bad));
        let k4 = koszul_complex(Q, &vars(&["x", "y", "z", "w"])).unwrap();
        let report = certify_acyclic(&k4, &Witnesses::default()).unwrap();
        assert_eq!(hilbert_series_of_coker(&k4, &report).unwrap().to_string(), "1");
        assert_eq!(betti_table(&k4).totals(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn dual_round_trip() {
        let k = koszul_complex(Q, &vars(&["x", "y"])).unwrap();
        let d = dualize_shift(&k, 0, 0);
        assert_eq!(d.lowest_degree(), -2);
        assert_eq!(d.module(-2).degrees(), &[-2]);
        assert!(compose_zero(&d));
        assert_eq!(dualize_shift(&d, 0, 0), k);
        let d3 = dualize_shift(&k, 2, 2);
        assert_eq!(d3.module(0).degrees(), &[0]);
        assert_eq!(d3.module(1).degrees(), &[1, 1]);
        assert!(certify_acyclic(&d3, &Witnesses::default()).is_ok());
    }

    #[test]
    fn lifting_through_matrices() {
        let col = |entries: &[&str], src: Vec<i32>, tgt: Vec<i32>| {
            let rows = entries.iter().map(|s| vec![p(s)]).collect();
            GradedMatrix::new(PolyMatrix::from_rows(Q, 1, rows).unwrap(), GradedFreeModule::new(src), GradedFreeModule::new(tgt)).unwrap()
        };
        let d = col(&["x", "y"], vec![1], vec![0, 0]);
        let x = lift_through(&d, &d).unwrap();
        assert_eq!(x.matrix().get(0, 0), &Polynomial::one(Q));
        let b = col(&["x^2", "x*y"], vec![2], vec![0, 0]);
        assert_eq!(lift_through(&d, &b).unwrap().matrix().get(0, 0), &p("x"));
        let c = col(&["x^2", "y^2"], vec![2], vec![0, 0]);
        assert_eq!(lift_through(&d, &c), Err(HomalgError::LiftColumn { column: 0 }));
    }

    #[test]
    fn identity_lift_and_cone() {
        let k = koszul_complex(Q, &vars(&["x"])).unwrap();
        let iota0 = GradedMatrix::new(PolyMatrix::identity(Q, 1), k.module(0), k.module(0)).unwrap();
        let map = lift_chain_map(&iota0, &k, &k).unwrap();
        assert_eq!(map, ChainMap::identity(&k));
        let cone = mapping_cone(&map);
        assert!(compose_zero(&cone));
        assert!(!is_minimal(&cone));
        assert!(alternating_twist_series(&cone).unwrap().numerator().is_empty());
    }

    #[test]
    fn multiplication_cone_resolves_quotient() {
        // The cone of multiplication by z on the Koszul complex of (x, y) resolves Q/(x, y, z).
        let k = koszul_complex(Q, &vars(&["x", "y"])).unwrap();
        let cone = mapping_cone(&ChainMap::multiplication(&k, &p("z")));
        assert!(compose_zero(&cone));
        assert!(is_minimal(&cone));
        assert_eq!(cone.ranks(), vec![1, 3, 3, 1]);
        let report = certify_acyclic(&cone, &Witnesses::default()).unwrap();
        assert_eq!(hilbert_series_of_coker(&cone, &report).unwrap().to_string(), "1/(1 - t)");
    }
}
