//! Hilbert series of quotients `Q/M`, written over the denominator `(1 - t)^4`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::monomial::{Monomial, NVARS};

/// `numerator(t) / (1 - t)^4` with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

fn shift(a: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0; d];
    out.extend_from_slice(a);
    trim(out)
}

/// Divides by `(1 - t)` when possible.
fn div_one_minus_t(a: &[i64]) -> Option<Vec<i64>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    // a = (1 - t) q  <=>  q_k = a_0 + ... + a_k
    let mut q = Vec::with_capacity(a.len());
    let mut acc = 0;
    for &c in a {
        acc += c;
        q.push(acc);
    }
    (q.pop() == Some(0)).then(|| trim(q))
}

impl HilbertSeries {
    /// Series `numerator / (1 - t)^4`.
    pub fn from_numerator(numerator: Vec<i64>) -> Self {
        HilbertSeries { numerator: trim(numerator) }
    }

    /// The series of a finite-length module whose Hilbert function is `hf`.
    pub fn from_hilbert_function(hf: &[i64]) -> Self {
        let mut num = hf.to_vec();
        for _ in 0..NVARS {
            num = mul(&num, &[1, -1]);
        }
        HilbertSeries::from_numerator(num)
    }

    /// `sum_k sign_k t^{d_k} / (1 - t)^4`, the series of an alternating sum of free modules.
    pub fn from_twists(twists: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut num: Vec<i64> = Vec::new();
        for (sign, d) in twists {
            assert!(d >= 0, "negative generator degree {d}");
            num = add(&num, &shift(&[sign], d as usize));
        }
        HilbertSeries::from_numerator(num)
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Cancels common `(1 - t)` factors: returns `(numerator, k)` for `numerator / (1 - t)^k`.
    pub fn reduced(&self) -> (Vec<i64>, u32) {
        let mut num = self.numerator.clone();
        let mut k = NVARS as u32;
        while k > 0 && !num.is_empty() {
            match div_one_minus_t(&num) {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        (num, k)
    }

    /// Krull dimension of the module (the pole order at `t = 1`).
    pub fn dimension(&self) -> u32 {
        if self.numerator.is_empty() {
            return 0;
        }
        self.reduced().1
    }

    /// Coefficients of the power series up to and including degree `n`.
    pub fn expand(&self, n: usize) -> Vec<i64> {
        let mut c: Vec<i64> = (0..=n).map(|i| self.numerator.get(i).copied().unwrap_or(0)).collect();
        for _ in 0..NVARS {
            for i in 1..=n {
                c[i] += c[i - 1];
            }
        }
        c
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        let neg: Vec<i64> = other.numerator.iter().map(|c| -c).collect();
        HilbertSeries::from_numerator(add(&self.numerator, &neg))
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        HilbertSeries::from_numerator(add(&self.numerator, &other.numerator))
    }

    /// Multiplies by `t^d`.
    pub fn shifted(&self, d: usize) -> HilbertSeries {
        HilbertSeries::from_numerator(shift(&self.numerator, d))
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, c: &[i64]) -> fmt::Result {
    let mut first = true;
    for (i, &v) in c.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let sign = if v < 0 { "-" } else { "+" };
        if first {
            if v < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let a = v.abs();
        match (i, a) {
            (0, _) => write!(f, "{a}")?,
            (1, 1) => write!(f, "t")?,
            (1, _) => write!(f, "{a}*t")?,
            (_, 1) => write!(f, "t^{i}")?,
            _ => write!(f, "{a}*t^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for HilbertSeries {
    /// Reduced rational form, e.g. `(1 + 3*t + t^2)/(1 - t)` or `1 + 4*t + 4*t^2 + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, k) = self.reduced();
        let nonzero = num.iter().filter(|&&c| c != 0).count();
        if k == 0 {
            return write_poly(f, &num);
        }
        if nonzero > 1 {
            write!(f, "(")?;
            write_poly(f, &num)?;
            write!(f, ")")?;
        } else {
            write_poly(f, &num)?;
        }
        match k {
            1 => write!(f, "/(1 - t)"),
            _ => write!(f, "/(1 - t)^{k}"),
        }
    }
}

fn minimalize(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in mons {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator of the Hilbert series of `Q/M` for a monomial ideal `M`,
/// by pivoting on single variables: `HS(M) = HS(M + (v)) + t HS(M : v)`.
pub(crate) fn monomial_numerator(mons: &[Monomial]) -> Vec<i64> {
    let mons = minimalize(mons.to_vec());
    if mons.iter().any(|m| m.degree() == 0) {
        return Vec::new();
    }
    let pairwise_coprime = mons.iter().enumerate().all(|(i, a)| mons[..i].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut prod = vec![1];
        for m in &mons {
            let d = m.degree() as usize;
            let mut f = vec![0; d + 1];
            f[0] = 1;
            f[d] -= 1;
            prod = mul(&prod, &f);
        }
        return trim(prod);
    }
    let v = (0..NVARS)
        .max_by_key(|&i| (mons.iter().filter(|m| m.exponent(i) > 0).count(), std::cmp::Reverse(i)))
        .expect("nonempty");
    let mut plus = mons.clone();
    plus.push(Monomial::var(v));
    let colon: Vec<Monomial> = mons
        .iter()
        .map(|m| {
            let mut e = m.exponents();
            e[v] = e[v].saturating_sub(1);
            Monomial::new(e)
        })
        .collect();
    add(&monomial_numerator(&plus), &shift(&monomial_numerator(&colon), 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [u16; 4]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn zero_ideal_and_maximal_ideal() {
        assert_eq!(monomial_numerator(&[]), vec![1]);
        let max = [m([1, 0, 0, 0]), m([0, 1, 0, 0]), m([0, 0, 1, 0]), m([0, 0, 0, 1])];
        let hs = HilbertSeries::from_numerator(monomial_numerator(&max));
        assert_eq!(hs.expand(3), vec![1, 0, 0, 0]);
        assert_eq!(hs.to_string(), "1");
    }

    #[test]
    fn staircase_of_monomial_j() {
        // x^2, xz, xw, yz, yw, z^2
        let gens = [
            m([2, 0, 0, 0]),
            m([1, 0, 1, 0]),
            m([1, 0, 0, 1]),
            m([0, 1, 1, 0]),
            m([0, 1, 0, 1]),
            m([0, 0, 2, 0]),
        ];
        let hs = HilbertSeries::from_numerator(monomial_numerator(&gens));
        assert_eq!(hs.numerator(), &[1, 0, -6, 8, -3]);
        assert_eq!(hs.expand(5), vec![1, 4, 4, 4, 4, 4]);
        assert_eq!(hs.to_string(), "(1 + 3*t)/(1 - t)");
        assert_eq!(hs.dimension(), 1);
    }

    #[test]
    fn twist_sums() {
        let g = HilbertSeries::from_twists([(1, 0), (-1, 2), (-1, 2), (-1, 2), (-1, 2), (-1, 2), (1, 3), (1, 3), (1, 3), (1, 3), (1, 3), (-1, 5)]);
        assert_eq!(g.to_string(), "(1 + 3*t + t^2)/(1 - t)");
        let art = HilbertSeries::from_hilbert_function(&[1, 4, 4, 1]);
        assert_eq!(art.to_string(), "1 + 4*t + 4*t^2 + t^3");
        assert_eq!(art.numerator(), &[1, 0, -6, 5, 5, -6, 0, 1]);
    }
}
