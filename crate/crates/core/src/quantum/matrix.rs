//! Square matrices over the Gaussian rationals `ℚ(i)`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{fmt_rational, parse_rational};
use crate::{Error, Result};

pub type GaussianRational = Complex<BigRational>;

pub fn gr(re: i64, im: i64) -> GaussianRational {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with rational `a`, `b`.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid Gaussian rational `{s}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(&t).map_err(|_| bad())?, BigRational::zero()));
    };
    // split at the last sign that is not the leading one
    let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').last().map(|(k, _)| k);
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        other => other.strip_prefix('+').unwrap_or(other).to_string(),
    };
    Ok(Complex::new(
        parse_rational(re).map_err(|_| bad())?,
        parse_rational(&im).map_err(|_| bad())?,
    ))
}

pub fn fmt_gaussian(z: &GaussianRational) -> String {
    let re = &z.re;
    let im = &z.im;
    let im_part = |lead: bool| -> String {
        let neg = im < &BigRational::zero();
        let mag = if neg { -im.clone() } else { im.clone() };
        let body = if mag.is_one() { "i".to_string() } else { format!("{}i", fmt_rational(&mag)) };
        match (lead, neg) {
            (true, true) => format!("-{body}"),
            (true, false) => body,
            (false, true) => format!("-{body}"),
            (false, false) => format!("+{body}"),
        }
    };
    match (re.is_zero(), im.is_zero()) {
        (_, true) => fmt_rational(re),
        (true, false) => im_part(true),
        (false, false) => format!("{}{}", fmt_rational(re), im_part(false)),
    }
}

/// Dense square matrix with exact complex entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianMatrix {
    dim: usize,
    entries: Vec<GaussianRational>,
}

impl GaussianMatrix {
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Mismatch("matrix must be square and non-empty".into()));
        }
        Ok(GaussianMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer-entry convenience: `(re, im)` pairs row by row.
    pub fn from_ints(dim: usize, entries: &[(i64, i64)]) -> Self {
        assert_eq!(entries.len(), dim * dim);
        GaussianMatrix { dim, entries: entries.iter().map(|&(a, b)| gr(a, b)).collect() }
    }

    pub fn zeros(dim: usize) -> Self {
        GaussianMatrix { dim, entries: vec![GaussianRational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = GaussianRational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.dim + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut GaussianRational {
        &mut self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Mismatch(format!("{}x{} times {}x{}", self.dim, self.dim, other.dim, other.dim)));
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.at(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        GaussianMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        *out.at(i * m + k, j * m + l) = self.get(i, j) * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                *out.at(j, i) = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.dim).map(|i| self.get(i, i).clone()).fold(GaussianRational::zero(), |a, b| a + b)
    }

    /// `Some(c)` if the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<GaussianRational> {
        let c = self.get(0, 0).clone();
        (*self == Self::identity(self.dim).scale(&c)).then_some(c)
    }

    /// Exact inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(pivot * n + j, col * n + j);
                    inv.entries.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = a.get(col, col).inv();
            for j in 0..n {
                *a.at(col, j) = a.get(col, j) * &pinv;
                *inv.at(col, j) = inv.get(col, j) * &pinv;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let da = a.get(col, j) * &f;
                    let di = inv.get(col, j) * &f;
                    *a.at(r, j) -= da;
                    *inv.at(r, j) -= di;
                }
            }
        }
        Some(inv)
    }
}

/// Rows separated by `;`, entries by `,`: `"1,1;1,-1"`.
impl FromStr for GaussianMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| row.split(',').map(parse_gaussian).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

impl fmt::Display for GaussianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| fmt_gaussian(self.get(i, j))).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// Rank of a rectangular system (rows of equal length) by exact elimination.
pub fn rank(rows: &[Vec<GaussianRational>]) -> usize {
    row_reduce(rows.to_vec()).1.len()
}

/// Reduced row echelon form and pivot columns.
fn row_reduce(mut rows: Vec<Vec<GaussianRational>>) -> (Vec<Vec<GaussianRational>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v -= pv * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (rows, pivots)
}

/// Solves `A x = b` for square invertible `A` (given by rows).
pub fn solve(a: &[Vec<GaussianRational>], b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
    let n = a.len();
    let aug: Vec<Vec<GaussianRational>> =
        a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect()).collect();
    let (red, pivots) = row_reduce(aug);
    (pivots == (0..n).collect::<Vec<_>>()).then(|| red.iter().map(|row| row[n].clone()).collect())
}
