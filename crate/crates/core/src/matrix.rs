//! Dense exact matrices under `+`, the natural product and the usual product.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::scalar::{is_prime_value, Domain, Scalar};

/// Largest number of positions for which masks are enumerated eagerly.
pub const ENUMERATION_BITS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub rows: usize,
    pub cols: usize,
}

impl Shape {
    pub fn new(rows: usize, cols: usize) -> Result<Shape> {
        if rows == 0 || cols == 0 {
            return Err(AlgebraError::InvalidShape(rows, cols));
        }
        Ok(Shape { rows, cols })
    }

    /// Number of positions.
    pub fn size(self) -> usize {
        self.rows * self.cols
    }

    pub fn is_square(self) -> bool {
        self.rows == self.cols
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    shape: Shape,
    domain: Domain,
    entries: Vec<BigRational>,
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: shape, domain, then entries row-major.
impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.shape, self.domain, &self.entries).cmp(&(other.shape, other.domain, &other.entries))
    }
}

impl Matrix {
    /// Build from row-major values, normalizing each into `domain`.
    pub fn new(shape: Shape, domain: Domain, values: Vec<BigRational>) -> Result<Matrix> {
        if values.len() != shape.size() {
            return Err(AlgebraError::InvalidShape(shape.rows, values.len() / shape.rows.max(1)));
        }
        let entries = values.into_iter().map(|v| domain.normalize(v)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { shape, domain, entries })
    }

    pub fn from_rows(domain: Domain, rows: &[Vec<BigRational>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let shape = Shape::new(rows.len(), cols)?;
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::Parse { line: 1, col: 1, msg: "rows have different lengths".into() });
        }
        Matrix::new(shape, domain, rows.iter().flatten().cloned().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(domain: Domain, rows: &[&[i64]]) -> Result<Matrix> {
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        Matrix::from_rows(domain, &rows)
    }

    /// A 1×n row matrix.
    pub fn row(domain: Domain, values: &[i64]) -> Result<Matrix> {
        Matrix::from_ints(domain, &[values])
    }

    pub fn zeros(shape: Shape, domain: Domain) -> Matrix {
        Matrix { shape, domain, entries: vec![BigRational::zero(); shape.size()] }
    }

    /// The all-ones matrix `J`, identity of the natural product.
    pub fn ones(shape: Shape, domain: Domain) -> Matrix {
        Matrix { shape, domain, entries: vec![BigRational::one(); shape.size()] }
    }

    pub fn identity(n: usize, domain: Domain) -> Result<Matrix> {
        let shape = Shape::new(n, n)?;
        let mut m = Matrix::zeros(shape, domain);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        Ok(m)
    }

    pub fn diagonal(domain: Domain, diag: &[BigRational]) -> Result<Matrix> {
        let n = diag.len();
        let mut values = vec![BigRational::zero(); n * n];
        for (i, d) in diag.iter().enumerate() {
            values[i * n + i] = d.clone();
        }
        Matrix::new(Shape::new(n, n)?, domain, values)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rows(&self) -> usize {
        self.shape.rows
    }

    pub fn cols(&self) -> usize {
        self.shape.cols
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.shape.cols + col]
    }

    pub fn scalar(&self, row: usize, col: usize) -> Scalar {
        Scalar::new(self.domain, self.get(row, col).clone()).expect("entries are normalized")
    }

    pub fn row_values(&self, row: usize) -> &[BigRational] {
        let c = self.shape.cols;
        &self.entries[row * c..(row + 1) * c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_ones(&self) -> bool {
        self.entries.iter().all(One::is_one)
    }

    /// Reinterpret the same values in another domain.
    pub fn convert(&self, domain: Domain) -> Result<Matrix> {
        Matrix::new(self.shape, domain, self.entries.clone())
    }

    fn check_same(&self, other: &Matrix) -> Result<()> {
        if self.domain != other.domain {
            return Err(AlgebraError::DomainMismatch(self.domain, other.domain));
        }
        if self.shape != other.shape {
            return Err(AlgebraError::ShapeMismatch(self.shape, other.shape));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Result<Matrix> {
        self.check_same(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { shape: self.shape, domain: self.domain, entries })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        let d = self.domain;
        self.zip_with(other, |a, b| d.add(a, b))
    }

    pub fn neg(&self) -> Result<Matrix> {
        let entries = self.entries.iter().map(|a| self.domain.neg(a)).collect::<Result<_>>()?;
        Ok(Matrix { shape: self.shape, domain: self.domain, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.domain.sub(a, b))
            .collect::<Result<_>>()?;
        Ok(Matrix { shape: self.shape, domain: self.domain, entries })
    }

    /// The natural product: `(a ×n b)_ij = a_ij b_ij`.
    pub fn nproduct(&self, other: &Matrix) -> Result<Matrix> {
        let d = self.domain;
        self.zip_with(other, |a, b| d.mul(a, b))
    }

    /// Ordinary row-by-column product.
    pub fn uproduct(&self, other: &Matrix) -> Result<Matrix> {
        if self.domain != other.domain {
            return Err(AlgebraError::DomainMismatch(self.domain, other.domain));
        }
        if self.shape.cols != other.shape.rows {
            return Err(AlgebraError::ShapeMismatch(self.shape, other.shape));
        }
        let (m, k, n) = (self.shape.rows, self.shape.cols, other.shape.cols);
        let d = self.domain;
        let mut entries = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                let mut acc = BigRational::zero();
                for t in 0..k {
                    acc = d.add(&acc, &d.mul(self.get(i, t), other.get(t, j)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { shape: Shape { rows: m, cols: n }, domain: d, entries })
    }

    /// Multiply every entry by `c`.
    pub fn scale(&self, c: &BigRational) -> Result<Matrix> {
        let c = self.domain.normalize(c.clone())?;
        Ok(self.map(|a| self.domain.mul(a, &c)))
    }

    pub fn map(&self, f: impl Fn(&BigRational) -> BigRational) -> Matrix {
        Matrix { shape: self.shape, domain: self.domain, entries: self.entries.iter().map(f).collect() }
    }

    /// `A^{×n k}`; the zeroth power is `J`.
    pub fn npow(&self, k: u32) -> Matrix {
        let d = self.domain;
        self.map(|a| {
            let mut acc = BigRational::one();
            for _ in 0..k {
                acc = d.mul(&acc, a);
            }
            acc
        })
    }

    /// The matrix `B` with `A ×n B = J`.
    pub fn natural_inverse(&self) -> Result<Matrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (idx, a) in self.entries.iter().enumerate() {
            match self.domain.inv(a) {
                Ok(b) => entries.push(b),
                Err(_) => {
                    return Err(AlgebraError::NotInvertible {
                        row: idx / self.shape.cols,
                        col: idx % self.shape.cols,
                    })
                }
            }
        }
        Ok(Matrix { shape: self.shape, domain: self.domain, entries })
    }

    pub fn is_idempotent(&self) -> bool {
        self.entries.iter().all(|a| self.domain.is_idempotent(a))
    }

    pub fn support(&self) -> SupportMask {
        SupportMask { shape: self.shape, bits: self.entries.iter().map(|a| !a.is_zero()).collect() }
    }

    /// Pattern of the matrices whose support is exactly the zero-set of `self`.
    pub fn main_complement(&self) -> SupportMask {
        self.support().complement()
    }

    pub fn is_orthogonal(&self, other: &Matrix) -> Result<bool> {
        self.check_same(other)?;
        let d = self.domain;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a.is_zero() || b.is_zero() || d.mul(a, b).is_zero()))
    }

    /// Entrywise quotient `other / self` over the integers, if every division is exact.
    pub fn divides(&self, other: &Matrix) -> Result<Option<Matrix>> {
        self.check_same(other)?;
        if let Some(idx) = self.entries.iter().position(Zero::is_zero) {
            return Err(AlgebraError::ZeroDivisorEntry { row: idx / self.shape.cols, col: idx % self.shape.cols });
        }
        if !self.domain.is_discrete() || matches!(self.domain, Domain::Mod(_)) {
            return Err(AlgebraError::UnsupportedDomain(self.domain, "divisibility".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for (a, b) in self.entries.iter().zip(&other.entries) {
            let q = b / a;
            if !q.is_integer() {
                return Ok(None);
            }
            entries.push(q);
        }
        Ok(Some(Matrix { shape: self.shape, domain: self.domain, entries }))
    }

    /// A row matrix all of whose entries are positive primes.
    pub fn is_prime_row(&self) -> bool {
        self.shape.rows == 1 && self.entries.iter().all(is_prime_value)
    }

    /// The 0/1 matrix marking the zero-set of `self`, which annihilates it.
    pub fn zero_divisor_witness(&self) -> Option<Matrix> {
        let mask = self.main_complement();
        if mask.popcount() == 0 {
            return None;
        }
        Some(mask.to_matrix(self.domain))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.shape.rows)
            .all(|i| (0..self.shape.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Matrix inverse under the usual product, by Gauss-Jordan over the rationals.
    ///
    /// `None` when singular. The result is converted back into the matrix's
    /// domain, which may fail for `Z` inputs with non-integral inverses.
    pub fn usual_inverse(&self) -> Result<Option<Matrix>> {
        if !self.shape.is_square() {
            return Err(AlgebraError::NotSquare(self.shape));
        }
        if let Domain::Mod(_) = self.domain {
            return Err(AlgebraError::UnsupportedDomain(self.domain, "matrix inverse".into()));
        }
        let n = self.shape.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n).map(|i| self.row_values(i).to_vec()).collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(None);
            };
            a.swap(col, p);
            inv.swap(col, p);
            let pivot = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &pivot;
                inv[col][j] = &inv[col][j] / &pivot;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let da = &f * &a[col][j];
                        let di = &f * &inv[col][j];
                        a[r][j] -= da;
                        inv[r][j] -= di;
                    }
                }
            }
        }
        Matrix::new(self.shape, self.domain, inv.into_iter().flatten().collect()).map(Some)
    }

    /// True when every entry is strictly positive.
    pub fn is_strictly_positive(&self) -> bool {
        self.entries.iter().all(Signed::is_positive)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_matrix(self))
    }
}

/// A 0/1 pattern over a shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportMask {
    shape: Shape,
    bits: Vec<bool>,
}

impl SupportMask {
    pub fn new(shape: Shape, bits: Vec<bool>) -> Result<SupportMask> {
        if bits.len() != shape.size() {
            return Err(AlgebraError::InvalidShape(shape.rows, shape.cols));
        }
        Ok(SupportMask { shape, bits })
    }

    pub fn from_ints(rows: &[&[u8]]) -> Result<SupportMask> {
        let shape = Shape::new(rows.len(), rows.first().map_or(0, |r| r.len()))?;
        let bits: Vec<bool> = rows.iter().flat_map(|r| r.iter().map(|&b| b != 0)).collect();
        SupportMask::new(shape, bits)
    }

    pub fn full(shape: Shape) -> SupportMask {
        SupportMask { shape, bits: vec![true; shape.size()] }
    }

    pub fn empty(shape: Shape) -> SupportMask {
        SupportMask { shape, bits: vec![false; shape.size()] }
    }

    /// The mask whose bits spell `index` in binary, first position most significant.
    pub fn from_index(shape: Shape, index: u64) -> SupportMask {
        let n = shape.size();
        let bits = (0..n).map(|p| (index >> (n - 1 - p)) & 1 == 1).collect();
        SupportMask { shape, bits }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.shape.cols + col]
    }

    pub fn popcount(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> SupportMask {
        SupportMask { shape: self.shape, bits: self.bits.iter().map(|b| !b).collect() }
    }

    pub fn and(&self, other: &SupportMask) -> SupportMask {
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect();
        SupportMask { shape: self.shape, bits }
    }

    pub fn or(&self, other: &SupportMask) -> SupportMask {
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect();
        SupportMask { shape: self.shape, bits }
    }

    pub fn is_subset(&self, other: &SupportMask) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| !a || *b)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    pub fn is_full(&self) -> bool {
        self.bits.iter().all(|b| *b)
    }

    /// Positions set in the mask, row-major.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let c = self.shape.cols;
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| (i / c, i % c)).collect()
    }

    pub fn to_matrix(&self, domain: Domain) -> Matrix {
        let entries = self
            .bits
            .iter()
            .map(|&b| if b { BigRational::one() } else { BigRational::zero() })
            .collect();
        Matrix { shape: self.shape, domain, entries }
    }
}

impl fmt::Display for SupportMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_matrix(Domain::Int).to_string())
    }
}

/// Every 0/1 matrix of the shape, in row-major lexicographic order.
pub fn trivial_idempotents(shape: Shape) -> Result<Vec<SupportMask>> {
    trivial_idempotents_bounded(shape, ENUMERATION_BITS)
}

pub fn trivial_idempotents_bounded(shape: Shape, max_bits: usize) -> Result<Vec<SupportMask>> {
    let n = shape.size();
    if n > max_bits {
        return Err(AlgebraError::TooLarge(format!("{shape} has 2^{n} masks (limit 2^{max_bits})")));
    }
    Ok((0..1u64 << n).map(|i| SupportMask::from_index(shape, i)).collect())
}

/// `2^(rows*cols)`, without enumerating.
pub fn trivial_idempotent_count(shape: Shape) -> BigUint {
    BigUint::one() << shape.size()
}
