//! Monomials in `x, y, z, w` and the orders used to sort them.
//!
//! Precedence is fixed as `x > y > z > w`. A fifth, hidden slot holds an
//! auxiliary variable that only appears inside elimination computations;
//! monomials built through the public constructors never touch it.

use std::cmp::Ordering;
use std::fmt;

/// Number of user-visible variables.
pub const NVARS: usize = 4;
pub(crate) const AUX: usize = 4;
pub const VAR_NAMES: [char; NVARS] = ['x', 'y', 'z', 'w'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub(crate) e: [u16; NVARS + 1],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e: [0; NVARS + 1] };

    pub fn new(exps: [u16; NVARS]) -> Self {
        let mut e = [0; NVARS + 1];
        e[..NVARS].copy_from_slice(&exps);
        Monomial { e }
    }

    /// The monomial consisting of the single variable with index `i` (0 = x).
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS + 1];
        e[i] = 1;
        Monomial { e }
    }

    pub(crate) fn aux() -> Self {
        Monomial::var(AUX)
    }

    pub fn exponents(&self) -> [u16; NVARS] {
        let mut out = [0; NVARS];
        out.copy_from_slice(&self.e[..NVARS]);
        out
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.e[i]
    }

    pub(crate) fn aux_degree(&self) -> u16 {
        self.e[AUX]
    }

    /// Total degree in the visible variables.
    pub fn degree(&self) -> u32 {
        self.e[..NVARS].iter().map(|&d| d as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(other.e) {
            *a += b;
        }
        Monomial { e }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.e.iter().zip(other.e).all(|(&a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut e = other.e;
        for (a, b) in e.iter_mut().zip(self.e) {
            *a -= b;
        }
        Some(Monomial { e })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(other.e) {
            *a = (*a).max(b);
        }
        Monomial { e }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.e.iter().zip(other.e).all(|(&a, b)| a == 0 || b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=NVARS).filter(|&i| self.e[i] > 0)
    }

    /// All monomials of total degree `d` in the visible variables, largest first under grevlex.
    pub fn of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let d = d as u16;
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    out.push(Monomial::new([a, b, c, d - a - b - c]));
                }
            }
        }
        out.sort_by(|p, q| MonomialOrder::Grevlex.cmp(q, p));
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &d) in self.e.iter().enumerate() {
            if d == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = if i < NVARS { VAR_NAMES[i] } else { 'u' };
            if d == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{d}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Monomial orders. All respect `x > y > z > w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; the default everywhere.
    #[default]
    Grevlex,
    Lex,
    /// Block order eliminating the auxiliary variable, grevlex on the rest.
    Elimination,
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = a.e.iter().map(|&d| d as u32).sum();
    let db: u32 = b.e.iter().map(|&d| d as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..=NVARS).rev() {
            match a.e[i].cmp(&b.e[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.e[AUX].cmp(&b.e[AUX]).then_with(|| a.e[..NVARS].cmp(&b.e[..NVARS])),
            MonomialOrder::Elimination => a.e[AUX].cmp(&b.e[AUX]).then_with(|| grevlex(a, b)),
        }
    }
}
