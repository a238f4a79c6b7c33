//! Polynomials in one variable with matrix coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::matrix::{Matrix, Shape};
use crate::scalar::{exact_root, Domain};
use crate::supermatrix::PartitionType;

/// Sparse polynomial: degree to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatPoly {
    shape: Shape,
    domain: Domain,
    ptype: Option<PartitionType>,
    terms: BTreeMap<usize, Matrix>,
}

impl MatPoly {
    pub fn zero(shape: Shape, domain: Domain, ptype: Option<PartitionType>) -> MatPoly {
        let ptype = ptype.filter(|p| !p.is_trivial());
        MatPoly { shape, domain, ptype, terms: BTreeMap::new() }
    }

    /// Collect terms, summing repeated degrees and dropping zeros.
    pub fn from_terms(
        shape: Shape,
        domain: Domain,
        ptype: Option<PartitionType>,
        terms: impl IntoIterator<Item = (usize, Matrix)>,
    ) -> Result<MatPoly> {
        let ptype = ptype.filter(|p| !p.is_trivial());
        if let Some(p) = &ptype {
            if p.shape() != shape {
                return Err(AlgebraError::ShapeMismatch(p.shape(), shape));
            }
        }
        let mut out = MatPoly::zero(shape, domain, ptype);
        for (k, m) in terms {
            if m.shape() != shape {
                return Err(AlgebraError::ShapeMismatch(shape, m.shape()));
            }
            if m.domain() != domain {
                return Err(AlgebraError::DomainMismatch(domain, m.domain()));
            }
            let sum = match out.terms.remove(&k) {
                Some(prev) => prev.add(&m)?,
                None => m,
            };
            out.insert(k, sum);
        }
        Ok(out)
    }

    /// Unpartitioned polynomial from `(degree, coefficient)` pairs; needs at least one term.
    pub fn from_pairs(terms: Vec<(usize, Matrix)>) -> Result<MatPoly> {
        let first = terms.first().ok_or(AlgebraError::ZeroPolynomial)?;
        let (shape, domain) = (first.1.shape(), first.1.domain());
        MatPoly::from_terms(shape, domain, None, terms)
    }

    pub fn constant(m: Matrix) -> MatPoly {
        let mut p = MatPoly::zero(m.shape(), m.domain(), None);
        p.insert(0, m);
        p
    }

    /// Attach a partition; a cut-free partition is stored as `None`.
    pub fn with_partition(mut self, ptype: Option<PartitionType>) -> Result<MatPoly> {
        let ptype = ptype.filter(|p| !p.is_trivial());
        if let Some(p) = &ptype {
            if p.shape() != self.shape {
                return Err(AlgebraError::ShapeMismatch(p.shape(), self.shape));
            }
        }
        self.ptype = ptype;
        Ok(self)
    }

    fn insert(&mut self, k: usize, m: Matrix) {
        if !m.is_zero() {
            self.terms.insert(k, m);
        }
    }

    fn empty_like(&self) -> MatPoly {
        MatPoly::zero(self.shape, self.domain, self.ptype.clone())
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn ptype(&self) -> Option<&PartitionType> {
        self.ptype.as_ref()
    }

    pub fn terms(&self) -> &BTreeMap<usize, Matrix> {
        &self.terms
    }

    pub fn coeff(&self, k: usize) -> Matrix {
        self.terms.get(&k).cloned().unwrap_or_else(|| Matrix::zeros(self.shape, self.domain))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn lead(&self) -> Option<&Matrix> {
        self.terms.values().next_back()
    }

    fn check_compatible(&self, other: &MatPoly) -> Result<()> {
        if self.shape != other.shape {
            return Err(AlgebraError::ShapeMismatch(self.shape, other.shape));
        }
        if self.ptype != other.ptype {
            return Err(AlgebraError::TypeMismatch(format!(
                "{} vs {}",
                describe_ptype(&self.ptype),
                describe_ptype(&other.ptype)
            )));
        }
        if self.domain != other.domain {
            return Err(AlgebraError::DomainMismatch(self.domain, other.domain));
        }
        Ok(())
    }

    pub fn add(&self, other: &MatPoly) -> Result<MatPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&k, m) in &other.terms {
            let sum = match out.terms.remove(&k) {
                Some(prev) => prev.add(m)?,
                None => m.clone(),
            };
            out.insert(k, sum);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<MatPoly> {
        let mut out = self.empty_like();
        for (&k, m) in &self.terms {
            out.insert(k, m.neg()?);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MatPoly) -> Result<MatPoly> {
        self.add(&other.neg()?)
    }

    fn convolve(&self, other: &MatPoly, mul: impl Fn(&Matrix, &Matrix) -> Result<Matrix>) -> Result<MatPoly> {
        let mut acc: BTreeMap<usize, Matrix> = BTreeMap::new();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                let prod = mul(a, b)?;
                let entry = match acc.remove(&(i + j)) {
                    Some(prev) => prev.add(&prod)?,
                    None => prod,
                };
                acc.insert(i + j, entry);
            }
        }
        let mut out = self.empty_like();
        for (k, m) in acc {
            out.insert(k, m);
        }
        Ok(out)
    }

    /// Cauchy product with `×n` on coefficients.
    pub fn mul_natural(&self, other: &MatPoly) -> Result<MatPoly> {
        self.check_compatible(other)?;
        self.convolve(other, Matrix::nproduct)
    }

    /// Cauchy product with the usual matrix product on coefficients.
    pub fn mul_usual(&self, other: &MatPoly) -> Result<MatPoly> {
        self.require_plain_square()?;
        self.check_compatible(other)?;
        self.convolve(other, Matrix::uproduct)
    }

    fn require_plain_square(&self) -> Result<()> {
        if !self.shape.is_square() {
            return Err(AlgebraError::NotSquare(self.shape));
        }
        if self.ptype.as_ref().is_some_and(|p| !p.is_trivial()) {
            return Err(AlgebraError::TypeMismatch("usual product needs unpartitioned coefficients".into()));
        }
        Ok(())
    }

    pub fn derivative(&self) -> MatPoly {
        let mut out = self.empty_like();
        for (&k, m) in &self.terms {
            if k > 0 {
                out.insert(k - 1, m.map(|a| self.domain.scale(a, k as u64)));
            }
        }
        out
    }

    /// Termwise antiderivative plus the constant `c` (zero when absent).
    pub fn integrate(&self, c: Option<&Matrix>) -> Result<MatPoly> {
        let mut out = self.empty_like();
        if let Some(c) = c {
            if c.shape() != self.shape {
                return Err(AlgebraError::ShapeMismatch(self.shape, c.shape()));
            }
            if c.domain() != self.domain {
                return Err(AlgebraError::DomainMismatch(self.domain, c.domain()));
            }
            out.insert(0, c.clone());
        }
        let cols = self.shape.cols;
        for (&k, m) in &self.terms {
            let divisor = BigRational::from_integer(BigInt::from(k + 1));
            let not_closed = |idx: usize| AlgebraError::NotClosed {
                domain: self.domain,
                degree: k + 1,
                row: idx / cols,
                col: idx % cols,
            };
            let mut values = Vec::with_capacity(m.entries().len());
            for (idx, a) in m.entries().iter().enumerate() {
                let v = match self.domain {
                    Domain::Rat | Domain::NonNegRat => a / &divisor,
                    Domain::Int | Domain::NonNegInt => {
                        let q = a / &divisor;
                        if !q.is_integer() {
                            return Err(not_closed(idx));
                        }
                        q
                    }
                    Domain::Mod(_) => match self.domain.inv(&divisor) {
                        Ok(inv) => self.domain.mul(a, &inv),
                        Err(_) if a.is_zero() => a.clone(),
                        Err(_) => return Err(not_closed(idx)),
                    },
                };
                values.push(v);
            }
            out.insert(k + 1, Matrix::new(self.shape, self.domain, values)?);
        }
        Ok(out)
    }

    /// `t ×n p` where `t` is the entrywise inverse of the leading coefficient.
    pub fn monicize_natural(&self) -> Result<MatPoly> {
        let lead = self.lead().ok_or(AlgebraError::ZeroPolynomial)?;
        let t = lead.natural_inverse().map_err(|e| match e {
            AlgebraError::NotInvertible { row, col } => AlgebraError::NotMonicizable { row, col },
            other => other,
        })?;
        let mut out = self.empty_like();
        for (&k, m) in &self.terms {
            out.insert(k, t.nproduct(m)?);
        }
        Ok(out)
    }

    /// `A⁻¹ p` where `A` is the leading coefficient, computed over the rationals.
    pub fn monicize_usual(&self) -> Result<MatPoly> {
        self.require_plain_square()?;
        if let Domain::Mod(_) = self.domain {
            return Err(AlgebraError::UnsupportedDomain(self.domain, "usual monicization".into()));
        }
        let lead = self.lead().ok_or(AlgebraError::ZeroPolynomial)?;
        let inv = lead.convert(Domain::Rat)?.usual_inverse()?.ok_or(AlgebraError::SingularLead)?;
        let mut out = self.empty_like();
        for (&k, m) in &self.terms {
            let prod = inv.uproduct(&m.convert(Domain::Rat)?)?;
            out.insert(k, prod.convert(self.domain)?);
        }
        Ok(out)
    }

    /// `Σ a_k ×n X^{×n k}`.
    pub fn evaluate_natural(&self, x: &Matrix) -> Result<Matrix> {
        if x.shape() != self.shape {
            return Err(AlgebraError::ShapeMismatch(self.shape, x.shape()));
        }
        if x.domain() != self.domain {
            return Err(AlgebraError::DomainMismatch(self.domain, x.domain()));
        }
        let mut acc = Matrix::zeros(self.shape, self.domain);
        for (&k, m) in &self.terms {
            acc = acc.add(&m.nproduct(&x.npow(k as u32))?)?;
        }
        Ok(acc)
    }

    /// Invertible under the natural product.
    ///
    /// Position by position: the constant entry is a unit and every higher
    /// entry is nilpotent. Over integral domains this means "constant with
    /// unit entries".
    pub fn is_unit_natural(&self) -> bool {
        let d = self.domain;
        let c = self.coeff(0);
        c.entries().iter().all(|a| d.is_unit(a))
            && self.terms.range(1..).all(|(_, m)| m.entries().iter().all(|a| d.is_nilpotent(a)))
    }

    pub fn is_idempotent_natural(&self) -> bool {
        self.mul_natural(self).is_ok_and(|sq| &sq == self)
    }
}

impl fmt::Display for MatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_poly(self))
    }
}

fn describe_ptype(p: &Option<PartitionType>) -> String {
    match p {
        Some(p) => p.to_string(),
        None => "unpartitioned".into(),
    }
}

/// Roots of a componentwise equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    /// Aligned roots (all components take the same sign branch).
    pub roots: Vec<Matrix>,
    /// More roots arise by choosing signs independently per component.
    pub independent_signs: bool,
    /// Why the set is empty, when it is.
    pub reason: Option<AlgebraError>,
}

fn check_lead(a: &Matrix) -> Result<()> {
    if let Some(idx) = a.entries().iter().position(Zero::is_zero) {
        return Err(AlgebraError::ZeroLead { row: idx / a.cols(), col: idx % a.cols() });
    }
    Ok(())
}

/// Solve `a ×n x^{×n k} = c`.
pub fn solve_binomial(a: &Matrix, c: &Matrix, k: u32) -> Result<RootSet> {
    if a.shape() != c.shape() {
        return Err(AlgebraError::ShapeMismatch(a.shape(), c.shape()));
    }
    if a.domain() != c.domain() {
        return Err(AlgebraError::DomainMismatch(a.domain(), c.domain()));
    }
    let domain = a.domain();
    if let Domain::Mod(_) = domain {
        return Err(AlgebraError::UnsupportedDomain(domain, "binomial solving".into()));
    }
    if k == 0 {
        return Err(AlgebraError::UnsupportedDomain(domain, "exponent 0".into()));
    }
    check_lead(a)?;
    let empty = |component| RootSet {
        roots: vec![],
        independent_signs: false,
        reason: Some(AlgebraError::NoRationalRoot { component }),
    };
    let mut root = Vec::with_capacity(a.entries().len());
    for (i, (ai, ci)) in a.entries().iter().zip(c.entries()).enumerate() {
        let v = ci / ai;
        match exact_root(&v, k).filter(|r| domain.normalize(r.clone()).is_ok()) {
            Some(r) => root.push(r),
            None => return Ok(empty(i)),
        }
    }
    let pos = Matrix::new(a.shape(), domain, root)?;
    let nonzero = pos.entries().iter().filter(|r| !r.is_zero()).count();
    if k % 2 == 1 || nonzero == 0 || domain.is_cone() {
        return Ok(RootSet { roots: vec![pos], independent_signs: false, reason: None });
    }
    let neg = pos.neg()?;
    Ok(RootSet { roots: vec![pos, neg], independent_signs: nonzero > 1, reason: None })
}

/// Solve `a ×n x² + b ×n x + c = 0` componentwise over the rationals.
pub fn solve_quadratic(a: &Matrix, b: &Matrix, c: &Matrix) -> Result<RootSet> {
    for m in [b, c] {
        if m.shape() != a.shape() {
            return Err(AlgebraError::ShapeMismatch(a.shape(), m.shape()));
        }
        if m.domain() != a.domain() {
            return Err(AlgebraError::DomainMismatch(a.domain(), m.domain()));
        }
    }
    if a.domain() != Domain::Rat {
        return Err(AlgebraError::UnsupportedDomain(a.domain(), "quadratic solving".into()));
    }
    check_lead(a)?;
    let two = BigRational::from_integer(2.into());
    let four = BigRational::from_integer(4.into());
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    let mut split = 0;
    for (i, ((ai, bi), ci)) in a.entries().iter().zip(b.entries()).zip(c.entries()).enumerate() {
        let disc = bi * bi - &four * ai * ci;
        let s = exact_root(&disc, 2).ok_or(AlgebraError::NoRationalRoot { component: i })?;
        if !s.is_zero() {
            split += 1;
        }
        let denom = &two * ai;
        plus.push((-bi + &s) / &denom);
        minus.push((-bi - &s) / &denom);
    }
    let p = Matrix::new(a.shape(), Domain::Rat, plus)?;
    let m = Matrix::new(a.shape(), Domain::Rat, minus)?;
    let roots = if p == m { vec![p] } else { vec![p, m] };
    Ok(RootSet { roots, independent_signs: split > 1, reason: None })
}

/// `x ↦ J` as a polynomial: the identity for `mul_natural`.
pub fn natural_one(shape: Shape, domain: Domain) -> MatPoly {
    MatPoly::constant(Matrix::ones(shape, domain))
}

/// True when `p` is the constant `J`.
pub fn is_natural_one(p: &MatPoly) -> bool {
    p.degree() == Some(0) && p.coeff(0).entries().iter().all(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Matrix {
        Matrix::row(Domain::Int, v).unwrap()
    }

    fn qrow(v: &[i64]) -> Matrix {
        Matrix::row(Domain::Rat, v).unwrap()
    }

    fn frow(v: &[(i64, i64)]) -> Matrix {
        let vals = vec![v.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect()];
        Matrix::from_rows(Domain::Rat, &vals).unwrap()
    }

    fn sq(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(Domain::Int, rows).unwrap()
    }

    fn poly(terms: Vec<(usize, Matrix)>) -> MatPoly {
        MatPoly::from_pairs(terms).unwrap()
    }

    #[test]
    fn row_product() {
        let p = poly(vec![(0, row(&[0, 1, 2])), (1, row(&[3, 4, 0])), (2, row(&[2, 1, 5])), (3, row(&[3, 0, 2]))]);
        let q = poly(vec![(0, row(&[6, 0, 2])), (1, row(&[0, 1, 4])), (2, row(&[3, 1, 0])), (4, row(&[1, 2, 3]))]);
        let expect = poly(vec![
            (0, row(&[0, 0, 4])),
            (1, row(&[18, 1, 8])),
            (2, row(&[12, 5, 10])),
            (3, row(&[27, 5, 24])),
            (4, row(&[6, 3, 14])),
            (5, row(&[12, 8, 0])),
            (6, row(&[2, 2, 15])),
            (7, row(&[3, 0, 6])),
        ]);
        assert_eq!(p.mul_natural(&q).unwrap(), expect);
        assert_eq!(q.mul_natural(&p).unwrap(), expect);
        let one = natural_one(p.shape(), Domain::Int);
        assert_eq!(p.mul_natural(&one).unwrap(), p);
    }

    #[test]
    fn usual_product_two_by_two() {
        let p = poly(vec![(0, sq(&[&[1, 2], &[0, 4]])), (1, sq(&[&[0, 1], &[2, 3]])), (2, sq(&[&[1, 2], &[3, 0]]))]);
        let q = poly(vec![(0, sq(&[&[0, 1], &[2, 0]])), (1, sq(&[&[1, 0], &[2, 3]])), (3, sq(&[&[1, 2], &[3, 4]]))]);
        let expect = poly(vec![
            (0, sq(&[&[4, 1], &[8, 0]])),
            (1, sq(&[&[7, 6], &[14, 14]])),
            (2, sq(&[&[6, 4], &[8, 12]])),
            (3, sq(&[&[12, 16], &[15, 16]])),
            (4, sq(&[&[3, 4], &[11, 16]])),
            (5, sq(&[&[7, 10], &[3, 6]])),
        ]);
        assert_eq!(p.mul_usual(&q).unwrap(), expect);
        assert_ne!(q.mul_usual(&p).unwrap(), expect);
        assert!(matches!(
            poly(vec![(0, row(&[1, 2]))]).mul_usual(&poly(vec![(0, row(&[1, 2]))])),
            Err(AlgebraError::NotSquare(_))
        ));
    }

    #[test]
    fn derivative_of_row_poly() {
        let p = poly(vec![
            (0, row(&[2, 0, 1, 0, 1, 5])),
            (1, row(&[3, 2, 1, 0, 0, 0])),
            (2, row(&[0, 1, 0, 2, 0, 4])),
            (3, row(&[0, -2, -3, 0, 0, 0])),
            (5, row(&[8, 0, 7, 0, 1, 0])),
        ]);
        let expect = poly(vec![
            (0, row(&[3, 2, 1, 0, 0, 0])),
            (1, row(&[0, 2, 0, 4, 0, 8])),
            (2, row(&[0, -6, -9, 0, 0, 0])),
            (4, row(&[40, 0, 35, 0, 5, 0])),
        ]);
        assert_eq!(p.derivative(), expect);
        assert!(poly(vec![(0, row(&[1, 2]))]).derivative().is_zero());
    }

    #[test]
    fn integral_over_rationals() {
        let p = poly(vec![
            (0, qrow(&[1, 2, 3, 4, 5])),
            (1, qrow(&[0, 1, 0, 3, -1])),
            (2, qrow(&[5, 0, 8, 1, 7])),
            (3, qrow(&[1, 2, 0, 4, 5])),
            (4, qrow(&[-2, 1, 4, 3, 0])),
        ]);
        let expect = poly(vec![
            (1, qrow(&[1, 2, 3, 4, 5])),
            (2, frow(&[(0, 1), (1, 2), (0, 1), (3, 2), (-1, 2)])),
            (3, frow(&[(5, 3), (0, 1), (8, 3), (1, 3), (7, 3)])),
            (4, frow(&[(1, 4), (1, 2), (0, 1), (1, 1), (5, 4)])),
            (5, frow(&[(-2, 5), (1, 5), (4, 5), (3, 5), (0, 1)])),
        ]);
        let got = p.integrate(None).unwrap();
        assert_eq!(got, expect);
        assert_eq!(got.derivative(), p);
        let c = qrow(&[9, 9, 9, 9, 9]);
        assert_eq!(p.integrate(Some(&c)).unwrap().coeff(0), c);
    }

    #[test]
    fn integral_not_closed_over_integers() {
        let terms = |d: Domain| {
            let r = |v: &[i64]| Matrix::row(d, v).unwrap();
            MatPoly::from_pairs(vec![
                (0, r(&[3, 8, 4, 0])),
                (1, r(&[2, 0, 4, 9])),
                (2, r(&[1, 2, 1, 1])),
                (3, r(&[1, 0, 1, 1])),
                (5, r(&[3, 4, 8, 9])),
            ])
            .unwrap()
        };
        assert!(matches!(terms(Domain::Int).integrate(None), Err(AlgebraError::NotClosed { .. })));
        assert!(terms(Domain::Rat).integrate(None).is_ok());
        // 2 is not a unit mod 4, 3 is
        let m = MatPoly::from_pairs(vec![(2, Matrix::row(Domain::Mod(4), &[1]).unwrap())]).unwrap();
        assert_eq!(m.integrate(None).unwrap().coeff(3), Matrix::row(Domain::Mod(4), &[3]).unwrap());
        let m = MatPoly::from_pairs(vec![(1, Matrix::row(Domain::Mod(4), &[1]).unwrap())]).unwrap();
        assert!(matches!(m.integrate(None), Err(AlgebraError::NotClosed { degree: 2, .. })));
    }

    #[test]
    fn degrees() {
        assert_eq!(poly(vec![(10, row(&[1])), (0, row(&[2]))]).degree(), Some(10));
        assert_eq!(MatPoly::zero(Shape::new(1, 1).unwrap(), Domain::Int, None).degree(), None);
    }

    #[test]
    fn natural_monic() {
        let p = poly(vec![
            (5, qrow(&[5, 7, 8, -4])),
            (3, qrow(&[1, 2, 3, 0])),
            (1, qrow(&[7, 0, 1, 5])),
            (0, qrow(&[8, 9, 0, 2])),
        ]);
        let expect = poly(vec![
            (5, qrow(&[1, 1, 1, 1])),
            (3, frow(&[(1, 5), (2, 7), (3, 8), (0, 1)])),
            (1, frow(&[(7, 5), (0, 1), (1, 8), (-5, 4)])),
            (0, frow(&[(8, 5), (9, 7), (0, 1), (-1, 2)])),
        ]);
        assert_eq!(p.monicize_natural().unwrap(), expect);
        assert_eq!(expect.monicize_natural().unwrap(), expect);
        let bad = poly(vec![
            (4, qrow(&[0, 3, 0, 0])),
            (3, qrow(&[1, 2, 3, 4])),
            (1, qrow(&[2, 0, 0, 1])),
            (0, qrow(&[1, 2, 0, 5])),
        ]);
        assert!(matches!(bad.monicize_natural(), Err(AlgebraError::NotMonicizable { row: 0, col: 0 })));
    }

    #[test]
    fn usual_monic() {
        let q2 = |r: &[&[i64]]| Matrix::from_ints(Domain::Rat, r).unwrap();
        let f = |r: &[&[(i64, i64)]]| {
            let rows: Vec<Vec<BigRational>> =
                r.iter().map(|row| row.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect()).collect();
            Matrix::from_rows(Domain::Rat, &rows).unwrap()
        };
        let p = poly(vec![
            (5, q2(&[&[7, 0], &[0, 8]])),
            (4, q2(&[&[1, 8], &[7, 5]])),
            (3, q2(&[&[0, 1], &[2, 0]])),
            (2, q2(&[&[0, 1], &[1, 0]])),
            (0, q2(&[&[1, 0], &[2, 5]])),
        ]);
        let expect = poly(vec![
            (5, Matrix::identity(2, Domain::Rat).unwrap()),
            (4, f(&[&[(1, 7), (8, 7)], &[(7, 8), (5, 8)]])),
            (3, f(&[&[(0, 1), (1, 7)], &[(1, 4), (0, 1)]])),
            (2, f(&[&[(0, 1), (1, 7)], &[(1, 8), (0, 1)]])),
            (0, f(&[&[(1, 7), (0, 1)], &[(1, 4), (5, 8)]])),
        ]);
        assert_eq!(p.monicize_usual().unwrap(), expect);
        let singular = poly(vec![(7, q2(&[&[3, 0], &[1, 0]])), (0, q2(&[&[1, 1], &[1, 1]]))]);
        assert_eq!(singular.monicize_usual(), Err(AlgebraError::SingularLead));
    }

    #[test]
    fn binomial_roots() {
        let r = solve_binomial(&qrow(&[1, 1, 1]), &qrow(&[27, 8, 125]), 3).unwrap();
        assert_eq!(r.roots, vec![qrow(&[3, 2, 5])]);
        let r = solve_binomial(&qrow(&[1, 1, 1, 1]), &qrow(&[4, 9, 25, 4]), 2).unwrap();
        assert_eq!(r.roots, vec![qrow(&[2, 3, 5, 2]), qrow(&[-2, -3, -5, -2])]);
        assert!(r.independent_signs);
        let r = solve_binomial(&qrow(&[1, 1, 1, 1]), &qrow(&[-4, -9, -25, -4]), 2).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.reason, Some(AlgebraError::NoRationalRoot { component: 0 }));
        assert!(matches!(solve_binomial(&qrow(&[0, 1]), &qrow(&[1, 1]), 2), Err(AlgebraError::ZeroLead { .. })));
    }

    #[test]
    fn quadratic_roots() {
        let j = qrow(&[1, 1, 1, 1]);
        let r = solve_quadratic(&j, &qrow(&[4, 4, 4, 4]), &qrow(&[4, 4, 4, 4])).unwrap();
        assert_eq!(r.roots, vec![qrow(&[-2, -2, -2, -2])]);
        let j5 = qrow(&[1, 1, 1, 1, 1]);
        let r = solve_quadratic(&j5, &qrow(&[0, 0, 0, 0, 0]), &qrow(&[-4, -9, -16, -25, -81])).unwrap();
        assert_eq!(r.roots, vec![qrow(&[2, 3, 4, 5, 9]), qrow(&[-2, -3, -4, -5, -9])]);
        let one = qrow(&[1]);
        assert_eq!(solve_quadratic(&one, &one, &one), Err(AlgebraError::NoRationalRoot { component: 0 }));
    }

    #[test]
    fn cube_vanishes_at_its_root() {
        // ((1,1,1)x - (2,1,3))^3
        let p = poly(vec![
            (3, row(&[1, 1, 1])),
            (2, row(&[-6, -3, -9])),
            (1, row(&[12, 3, 27])),
            (0, row(&[-8, -1, -27])),
        ]);
        let lin = poly(vec![(1, row(&[1, 1, 1])), (0, row(&[-2, -1, -3]))]);
        let cube = lin.mul_natural(&lin).unwrap().mul_natural(&lin).unwrap();
        assert_eq!(cube, p);
        assert!(p.evaluate_natural(&row(&[2, 1, 3])).unwrap().is_zero());
        let j = Matrix::ones(p.shape(), Domain::Int);
        assert_eq!(p.evaluate_natural(&j).unwrap(), row(&[-1, 0, -8]));
    }

    #[test]
    fn zero_divisor_polys() {
        let p = poly(vec![
            (0, row(&[3, 2, 0, 0, 0])),
            (1, row(&[6, 3, 0, 0, 0])),
            (2, row(&[7, 0, 0, 0, 0])),
            (4, row(&[8, 1, 0, 0, 0])),
        ]);
        let q = poly(vec![
            (0, row(&[0, 0, 1, 2, 3])),
            (2, row(&[0, 0, 0, 4, 2])),
            (3, row(&[0, 0, 0, 1, 4])),
            (4, row(&[0, 0, 0, 3, 4])),
            (7, row(&[0, 0, 0, 5, 2])),
        ]);
        assert!(p.mul_natural(&q).unwrap().is_zero());
    }

    #[test]
    fn units_and_idempotents() {
        assert!(poly(vec![(0, row(&[1, -1]))]).is_unit_natural());
        assert!(!poly(vec![(0, row(&[1, -1])), (1, row(&[1, 0]))]).is_unit_natural());
        assert!(poly(vec![(0, row(&[1, 0]))]).is_idempotent_natural());
        assert!(!poly(vec![(1, row(&[1, 0]))]).is_idempotent_natural());
        // 1 + 2x is a unit mod 4: (1 + 2x)^2 = 1
        let m = |v| Matrix::row(Domain::Mod(4), &[v]).unwrap();
        let u = poly(vec![(0, m(1)), (1, m(2))]);
        assert!(u.is_unit_natural());
        assert!(is_natural_one(&u.mul_natural(&u).unwrap()));
    }
}
