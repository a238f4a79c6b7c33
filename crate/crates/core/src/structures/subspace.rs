//! Coordinate subspaces given by support masks, and their orthogonal
//! complements under the natural product.

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::matrix::{Matrix, Shape, SupportMask};
use crate::random::{self, SeededRng};
use crate::scalar::Domain;

/// All matrices whose support lies inside `mask`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaskSubspace {
    mask: SupportMask,
    domain: Domain,
}

impl MaskSubspace {
    pub fn new(mask: SupportMask, domain: Domain) -> MaskSubspace {
        MaskSubspace { mask, domain }
    }

    /// Subspace spanned by the given positions.
    pub fn from_positions(shape: Shape, domain: Domain, positions: &[(usize, usize)]) -> Result<MaskSubspace> {
        let mut bits = vec![false; shape.size()];
        for &(r, c) in positions {
            if r >= shape.rows || c >= shape.cols {
                return Err(AlgebraError::InvalidShape(r + 1, c + 1));
            }
            bits[r * shape.cols + c] = true;
        }
        Ok(MaskSubspace { mask: SupportMask::new(shape, bits)?, domain })
    }

    pub fn mask(&self) -> &SupportMask {
        &self.mask
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn shape(&self) -> Shape {
        self.mask.shape()
    }

    /// Dimension over a field: the number of free positions.
    pub fn dim(&self) -> usize {
        self.mask.popcount()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.shape() == self.shape() && m.domain() == self.domain && m.support().is_subset(&self.mask)
    }

    /// A random member: random values on the mask, zero elsewhere.
    pub fn sample(&self, rng: &mut SeededRng) -> Matrix {
        let full = random::matrix(rng, self.shape(), self.domain);
        full.nproduct(&self.mask.to_matrix(self.domain)).expect("same shape and domain")
    }
}

/// `{y : x ×n y = 0}`.
pub fn orthogonal_space(x: &Matrix) -> MaskSubspace {
    MaskSubspace::new(x.main_complement(), x.domain())
}

pub fn subspace_complement(w: &MaskSubspace) -> MaskSubspace {
    MaskSubspace::new(w.mask.complement(), w.domain)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    Direct,
    PseudoDirect,
    NotSpanning,
}

impl SumKind {
    pub fn name(self) -> &'static str {
        match self {
            SumKind::Direct => "direct",
            SumKind::PseudoDirect => "pseudo-direct",
            SumKind::NotSpanning => "not-spanning",
        }
    }
}

/// Two subspace indices `i < j` and the positions they share.
pub type Overlap = (usize, usize, Vec<(usize, usize)>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumReport {
    pub kind: SumKind,
    pub overlaps: Vec<Overlap>,
    /// Positions no subspace reaches.
    pub gaps: Vec<(usize, usize)>,
}

impl SumReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "overlaps": self.overlaps.iter().map(|(i, j, ps)| json!({"pair": [i, j], "positions": ps})).collect::<Vec<_>>(),
            "gaps": self.gaps,
        })
    }
}

/// Classify the sum of coordinate subspaces.
pub fn check_sum(subspaces: &[MaskSubspace]) -> Result<SumReport> {
    let first = subspaces
        .first()
        .ok_or_else(|| AlgebraError::InvalidPartition("no subspaces to sum".into()))?;
    for s in subspaces {
        if s.shape() != first.shape() {
            return Err(AlgebraError::ShapeMismatch(first.shape(), s.shape()));
        }
        if s.domain != first.domain {
            return Err(AlgebraError::DomainMismatch(first.domain, s.domain));
        }
    }
    let mut overlaps = Vec::new();
    for i in 0..subspaces.len() {
        for j in i + 1..subspaces.len() {
            let shared = subspaces[i].mask.and(&subspaces[j].mask);
            if !shared.is_empty() {
                overlaps.push((i, j, shared.positions()));
            }
        }
    }
    let union = subspaces.iter().fold(SupportMask::empty(first.shape()), |acc, s| acc.or(&s.mask));
    let gaps = union.complement().positions();
    let kind = if !gaps.is_empty() {
        SumKind::NotSpanning
    } else if overlaps.is_empty() {
        SumKind::Direct
    } else {
        SumKind::PseudoDirect
    };
    Ok(SumReport { kind, overlaps, gaps })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    pub samples: usize,
    /// A pair of strictly positive matrices whose product has a zero entry.
    pub positive_zero_divisor: Option<(Matrix, Matrix)>,
    /// A pair with `a + b = 0` but `a` or `b` nonzero.
    pub strictness_violation: Option<(Matrix, Matrix)>,
    /// Once zeros are allowed, a nonzero pair with product zero.
    pub zero_pattern: (Matrix, Matrix),
}

fn cone_value(rng: &mut SeededRng, domain: Domain, allow_zero: bool) -> BigRational {
    let lo = if allow_zero { 0 } else { 1 };
    match domain {
        Domain::NonNegInt => BigRational::from_integer(rng.gen_range(lo..=20i64).into()),
        _ => BigRational::new(rng.gen_range(lo..=20i64).into(), rng.gen_range(1..=9i64).into()),
    }
}

fn cone_matrix(rng: &mut SeededRng, shape: Shape, domain: Domain, allow_zero: bool) -> Matrix {
    let vals = (0..shape.size()).map(|_| cone_value(rng, domain, allow_zero)).collect();
    Matrix::new(shape, domain, vals).expect("nonnegative values")
}

/// Sampled semifield checks over a nonnegative cone.
pub fn cone_positivity_check(shape: Shape, domain: Domain, samples: usize, seed: u64) -> Result<ConeReport> {
    if !domain.is_cone() {
        return Err(AlgebraError::UnsupportedDomain(domain, "cone positivity check".into()));
    }
    let mut rng = random::rng(seed);
    let mut positive_zero_divisor = None;
    let mut strictness_violation = None;
    for _ in 0..samples {
        let a = cone_matrix(&mut rng, shape, domain, false);
        let b = cone_matrix(&mut rng, shape, domain, false);
        let p = a.nproduct(&b)?;
        if positive_zero_divisor.is_none() && p.entries().iter().any(Zero::is_zero) {
            positive_zero_divisor = Some((a, b));
        }
        let c = cone_matrix(&mut rng, shape, domain, true);
        let d = cone_matrix(&mut rng, shape, domain, true);
        if strictness_violation.is_none() && c.add(&d)?.is_zero() && !(c.is_zero() && d.is_zero()) {
            strictness_violation = Some((c, d));
        }
    }
    // a positive matrix with its first entry zeroed, and the matrix living on that entry
    let mut a = cone_matrix(&mut rng, shape, domain, false);
    let first = SupportMask::from_index(shape, 1 << (shape.size() - 1));
    a = a.nproduct(&first.complement().to_matrix(domain))?;
    let b = first.to_matrix(domain).scale(&cone_value(&mut rng, domain, false))?;
    Ok(ConeReport { samples, positive_zero_divisor, strictness_violation, zero_pattern: (a, b) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(r: usize, c: usize) -> Shape {
        Shape::new(r, c).unwrap()
    }

    #[test]
    fn orthogonal_space_of_diagonal() {
        let x = Matrix::from_ints(Domain::Rat, &[&[3, 0], &[0, 5]]).unwrap();
        let w = orthogonal_space(&x);
        assert_eq!(w.mask(), &SupportMask::from_ints(&[&[0, 1], &[1, 0]]).unwrap());
        assert!(orthogonal_space(&Matrix::zeros(shape(2, 2), Domain::Rat)).mask().is_full());
        assert!(orthogonal_space(&Matrix::ones(shape(2, 2), Domain::Rat)).mask().is_empty());
    }

    #[test]
    fn bottom_row_complement() {
        let b = MaskSubspace::from_positions(shape(3, 3), Domain::Rat, &[(2, 0), (2, 1), (2, 2)]).unwrap();
        let c = subspace_complement(&b);
        assert_eq!(c.mask(), &SupportMask::from_ints(&[&[1, 1, 1], &[1, 1, 1], &[0, 0, 0]]).unwrap());
        assert_eq!(b.dim() + c.dim(), 9);
        assert_eq!(check_sum(&[b, c]).unwrap().kind, SumKind::Direct);
    }

    #[test]
    fn direct_and_pseudo_direct() {
        let s = shape(3, 3);
        let m = |ps: &[(usize, usize)]| MaskSubspace::from_positions(s, Domain::Rat, ps).unwrap();
        let parts = vec![
            m(&[(0, 0), (0, 1), (2, 2)]),
            m(&[(0, 2), (1, 1)]),
            m(&[(1, 0), (1, 2), (2, 1)]),
            m(&[(2, 0)]),
        ];
        assert_eq!(check_sum(&parts).unwrap().kind, SumKind::Direct);
        let r = check_sum(&parts[..3]).unwrap();
        assert_eq!(r.kind, SumKind::NotSpanning);
        assert_eq!(r.gaps, vec![(2, 0)]);

        let col = shape(12, 1);
        let rows = |a: usize, b: usize| {
            let ps: Vec<(usize, usize)> = (a..=b).map(|r| (r, 0)).collect();
            MaskSubspace::from_positions(col, Domain::Rat, &ps).unwrap()
        };
        let r = check_sum(&[rows(0, 1), rows(1, 3), rows(2, 5), rows(5, 11)]).unwrap();
        assert_eq!(r.kind, SumKind::PseudoDirect);
        assert_eq!(r.overlaps[0], (0, 1, vec![(1, 0)]));
        let whole = MaskSubspace::new(SupportMask::full(s), Domain::Rat);
        assert_eq!(check_sum(&[whole]).unwrap().kind, SumKind::Direct);
    }

    #[test]
    fn cone_checks() {
        let r = cone_positivity_check(shape(1, 4), Domain::NonNegRat, 500, 1).unwrap();
        assert_eq!(r.positive_zero_divisor, None);
        assert_eq!(r.strictness_violation, None);
        let (a, b) = r.zero_pattern;
        assert!(!a.is_zero() && !b.is_zero());
        assert!(a.nproduct(&b).unwrap().is_zero());
        assert!(cone_positivity_check(shape(1, 4), Domain::Rat, 1, 1).is_err());
    }
}
