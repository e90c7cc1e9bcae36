//! Dense matrices of polynomials: products, Pfaffians, fraction-free
//! determinants and ranks, and ideals of minors.

use std::collections::HashMap;
use std::fmt;

use crate::field::{FieldDescriptor, Scalar};
use crate::linalg::ScalarMatrix;
use crate::monomial::NVARS;
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        PolyMatrix { field, rows, cols, data: vec![Polynomial::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(field));
        }
        m
    }

    /// Builds from rows; every row must have `cols` entries.
    pub fn from_rows(field: FieldDescriptor, cols: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self, PolyError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(PolyError::ShapeMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for p in &r {
                if p.field() != field {
                    return Err(crate::field::FieldError::FieldMismatch(field, p.field()).into());
                }
            }
            data.extend(r);
        }
        Ok(PolyMatrix { field, rows: nrows, cols, data })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.data.iter().enumerate().map(move |(k, p)| (k / self.cols, k % self.cols, p))
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.field);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.field, self.cols, self.rows);
        for (i, j, p) in self.entries() {
            out.set(j, i, p.clone());
        }
        out
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix { data: self.data.iter().map(|p| -p).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: &Polynomial) -> PolyMatrix {
        PolyMatrix { data: self.data.iter().map(|p| p * c).collect(), ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        PolyMatrix { field: self.field, rows: rows.len(), cols: cols.len(), data }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
        let (r1, r2, c1, c2) = (a.rows, c.rows, a.cols, b.cols);
        let mut out = PolyMatrix::zeros(a.field, r1 + r2, c1 + c2);
        for (blk, di, dj) in [(a, 0, 0), (b, 0, c1), (c, r1, 0), (d, r1, c1)] {
            for (i, j, p) in blk.entries() {
                out.set(i + di, j + dj, p.clone());
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar; NVARS]) -> ScalarMatrix {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.evaluate(point)).collect()).collect()
    }

    /// Pfaffian by expansion along the first row, normalized so that
    /// `pf([[0, 1], [-1, 0]]) = 1`.
    pub fn pfaffian(&self) -> Result<Polynomial, PolyError> {
        if !self.is_skew_symmetric() {
            return Err(PolyError::NotSkewSymmetric);
        }
        if self.rows % 2 == 1 {
            return Err(PolyError::OddDimension);
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pf_rec(&idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> Polynomial {
        if idx.is_empty() {
            return Polynomial::one(self.field);
        }
        let mut acc = Polynomial::zero(self.field);
        for j in 1..idx.len() {
            let t = self.get(idx[0], idx[j]);
            if t.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(k, _)| k != 0 && k != j).map(|(_, &v)| v).collect();
            let term = t * &self.pf_rec(&rest);
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// `T_i` = Pfaffian of the matrix with row and column `i` deleted, for a 5x5 skew matrix.
    pub fn submaximal_pfaffians(&self) -> Result<Vec<Polynomial>, PolyError> {
        if !self.is_skew_symmetric() {
            return Err(PolyError::NotSkewSymmetric);
        }
        if self.rows % 2 == 0 {
            return Err(PolyError::OddDimension);
        }
        Ok((0..self.rows)
            .map(|i| {
                let keep: Vec<usize> = (0..self.rows).filter(|&k| k != i).collect();
                self.pf_rec(&keep)
            })
            .collect())
    }

    /// Fraction-free row echelon form. Returns the rank and, for square
    /// matrices of full rank, the determinant.
    fn bareiss(&self) -> (usize, Option<Polynomial>) {
        let (n, m) = (self.rows, self.cols);
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = Polynomial::one(self.field);
        let mut r = 0;
        let mut negate = false;
        for c in 0..m {
            if r == n {
                break;
            }
            let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                negate = !negate;
            }
            for i in r + 1..n {
                for j in c + 1..m {
                    let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
                }
                a[i][c] = Polynomial::zero(self.field);
            }
            prev = a[r][c].clone();
            r += 1;
        }
        let det = (n == m && r == n).then(|| if negate { -&prev } else { prev });
        (r, det)
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn det(&self) -> Result<Polynomial, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::ShapeMismatch(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        Ok(self.bareiss().1.unwrap_or_else(|| Polynomial::zero(self.field)))
    }

    /// Number of `r x r` minors.
    pub fn minor_count(&self, r: usize) -> u128 {
        binomial(self.rows, r) * binomial(self.cols, r)
    }

    /// All nonzero `r x r` minors, computed by Laplace expansion with shared sub-minors.
    pub fn minors(&self, r: usize) -> Vec<Polynomial> {
        if r == 0 {
            return vec![Polynomial::one(self.field)];
        }
        if r > self.rows || r > self.cols {
            return Vec::new();
        }
        let mut memo: HashMap<(u64, u64), Polynomial> = HashMap::new();
        let mut out = Vec::new();
        for rows in subsets(self.rows, r) {
            for cols in subsets(self.cols, r) {
                let d = self.minor_rec(&rows, &cols, &mut memo);
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        out
    }

    fn minor_rec(&self, rows: &[usize], cols: &[usize], memo: &mut HashMap<(u64, u64), Polynomial>) -> Polynomial {
        let k = rows.len();
        if k == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let key = (mask(rows), mask(cols));
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let last = rows[k - 1];
        let mut acc = Polynomial::zero(self.field);
        for t in 0..k {
            let a = self.get(last, cols[t]);
            if a.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(s, _)| s != t).map(|(_, &c)| c).collect();
            let sub = self.minor_rec(&rows[..k - 1], &sub_cols, memo);
            if sub.is_zero() {
                continue;
            }
            let term = a * &sub;
            acc = if (k - 1 + t) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        memo.insert(key, acc.clone());
        acc
    }

    /// True when some entry has a nonzero constant term.
    pub fn has_unit_entry(&self) -> bool {
        self.data.iter().any(|p| !p.constant_term().is_zero())
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |m, &i| m | 1 << i)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        let cols = rows[0].len();
        let rows = rows.iter().map(|r| r.iter().map(|s| parse_poly(s, Q).unwrap()).collect()).collect();
        PolyMatrix::from_rows(Q, cols, rows).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_poly(s, Q).unwrap()
    }

    #[test]
    fn two_by_two_pfaffian() {
        assert_eq!(m(&[&["0", "1"], &["-1", "0"]]).pfaffian().unwrap(), p("1"));
        assert_eq!(m(&[&["0", "x+y"], &["-x-y", "0"]]).pfaffian().unwrap(), p("x+y"));
    }

    #[test]
    fn four_by_four_pfaffian() {
        // a12 = x, a13 = y, a14 = z, a23 = w, a24 = x+z, a34 = y-w
        let t = m(&[
            &["0", "x", "y", "z"],
            &["-x", "0", "w", "x+z"],
            &["-y", "-w", "0", "y-w"],
            &["-z", "-x-z", "-y+w", "0"],
        ]);
        let expected = p("x*(y-w) - y*(x+z) + z*w");
        assert_eq!(t.pfaffian().unwrap(), expected);
        assert_eq!(t.det().unwrap(), expected.pow(2));
    }

    #[test]
    fn pfaffian_rejects_bad_input() {
        assert_eq!(m(&[&["0", "x"], &["x", "0"]]).pfaffian(), Err(PolyError::NotSkewSymmetric));
        assert_eq!(
            m(&[&["0", "x", "y"], &["-x", "0", "z"], &["-y", "-z", "0"]]).pfaffian(),
            Err(PolyError::OddDimension)
        );
    }

    #[test]
    fn rank_over_fraction_field() {
        let a = m(&[&["x", "y"], &["x*z", "y*z"]]);
        assert_eq!(a.rank(), 1);
        let b = m(&[&["x", "y", "0"], &["0", "z", "w"], &["x", "y+z", "w"]]);
        assert_eq!(b.rank(), 2);
        assert_eq!(b.det().unwrap(), p("0"));
        assert_eq!(m(&[&["0", "0"], &["0", "x"]]).rank(), 1);
    }

    #[test]
    fn minors_agree_with_determinants() {
        let a = m(&[&["x", "y", "z"], &["y", "z", "w"], &["z", "w", "x"]]);
        assert_eq!(a.minors(3), vec![a.det().unwrap()]);
        let two = a.minors(2);
        assert_eq!(two.len(), 9);
        assert!(two.contains(&p("x*z - y^2")));
        assert_eq!(a.minor_count(2), 9);
    }
}
