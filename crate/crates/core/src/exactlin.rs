//! Exact rational scalars, dense matrices and the elimination kernels the
//! rest of the crate is built on.
//!
//! Everything here is exact: there are no tolerances, and every matrix entry
//! is kept in canonical reduced form by [`BigRational`].

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational with positive, coprime denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q`, reduced. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`; the result is canonicalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Canonical text form: `"p/q"` with `q > 0`, or `"p"` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::SizeMismatch {
                left: entries.len(),
                right: rows * cols,
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, size, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from equal-length rows. An empty row list gives a
    /// `0 x cols` matrix only through [`Matrix::zeros`]; here it is `0 x 0`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::SizeMismatch {
                    left: row.len(),
                    right: cols,
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols)
                .map(|k| &self[(r, k)] * &other[(k, c)])
                .fold(Rational::zero(), |acc, x| acc + x)
        }))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != v.len() {
            return Err(Error::SizeMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Exact inverse, or `None` when singular or non-square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (reduced, pivots) = rref(&augmented);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| reduced[(r, c + n)].clone()))
    }

    /// Matrix rendered as rows of canonical rational strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| format_vector(self.row(r))).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row = format_vector(self.row(r));
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let Some(found) = (pivot_row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if found != pivot_row {
            for c in 0..a.cols {
                a.entries.swap(found * a.cols + c, pivot_row * a.cols + c);
            }
        }
        let inv = a[(pivot_row, col)].recip();
        for c in col..a.cols {
            let v = &a[(pivot_row, c)] * &inv;
            a.set(pivot_row, c, v);
        }
        for r in 0..a.rows {
            if r == pivot_row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for c in col..a.cols {
                if a[(pivot_row, c)].is_zero() {
                    continue;
                }
                let v = &a[(r, c)] - &factor * &a[(pivot_row, c)];
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of the right null space `{x : m x = 0}`, one vector per free column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); m.cols];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -reduced[(r, f)].clone();
            }
            x
        })
        .collect()
}

/// Some exact solution of `m x = b`, or `Ok(None)` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows {
        return Err(Error::SizeMismatch {
            left: b.len(),
            right: m.rows,
        });
    }
    let augmented = Matrix::from_fn(m.rows, m.cols + 1, |r, c| {
        if c < m.cols {
            m[(r, c)].clone()
        } else {
            b[r].clone()
        }
    });
    let (reduced, pivots) = rref(&augmented);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(r, m.cols)].clone();
    }
    Ok(Some(x))
}

/// A vector type with an exact inner product and linear combinations.
pub trait InnerProductSpace: Sized {
    fn inner(&self, other: &Self) -> Rational;

    /// `Σ coeffs[i] · vectors[i]`; `template` fixes the shape when the list
    /// is empty.
    fn linear_combination(template: &Self, coeffs: &[Rational], vectors: &[Self]) -> Self;
}

impl InnerProductSpace for Vec<Rational> {
    fn inner(&self, other: &Self) -> Rational {
        dot(self, other)
    }

    fn linear_combination(template: &Self, coeffs: &[Rational], vectors: &[Self]) -> Self {
        let mut out = vec![Rational::zero(); template.len()];
        for (c, v) in coeffs.iter().zip(vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }
}

pub fn gram_matrix<V: InnerProductSpace>(vectors: &[V]) -> Matrix {
    let k = vectors.len();
    let mut g = Matrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let v = vectors[a].inner(&vectors[b]);
            g.set(b, a, v.clone());
            g.set(a, b, v);
        }
    }
    g
}

fn check_gram(basis_len: usize, gram: &Matrix) -> Result<()> {
    if gram.rows() != basis_len || gram.cols() != basis_len {
        return Err(Error::SizeMismatch {
            left: gram.rows(),
            right: basis_len,
        });
    }
    Ok(())
}

/// Orthogonal projection of `x` onto `span(basis)`: solves
/// `gram · c = (⟨basis[i], x⟩)_i` and returns `Σ c_i basis[i]`.
pub fn project_gram<V: InnerProductSpace>(basis: &[V], gram: &Matrix, x: &V) -> Result<V> {
    check_gram(basis.len(), gram)?;
    if rank(gram) < basis.len() {
        return Err(Error::SingularGram);
    }
    let rhs: Vec<Rational> = basis.iter().map(|b| b.inner(x)).collect();
    let coeffs = solve(gram, &rhs)?.ok_or(Error::SingularGram)?;
    Ok(V::linear_combination(x, &coeffs, basis))
}

/// Same projection as [`project_gram`] using a precomputed inverse Gram
/// matrix; also returns the coefficients in `basis`.
pub fn project_with_inverse<V: InnerProductSpace>(
    basis: &[V],
    gram_inverse: &Matrix,
    x: &V,
) -> Result<(V, Vec<Rational>)> {
    check_gram(basis.len(), gram_inverse)?;
    let rhs: Vec<Rational> = basis.iter().map(|b| b.inner(x)).collect();
    let coeffs = gram_inverse.mul_vec(&rhs)?;
    Ok((V::linear_combination(x, &coeffs, basis), coeffs))
}

/// Scales a rational vector to the primitive integer vector on the same ray
/// (positive factor). The zero vector maps to zeros.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
