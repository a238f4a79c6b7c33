//! Partitioned ("super") matrices. Binary operations demand the same partition.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::matrix::{Matrix, Shape};
use crate::scalar::Domain;

/// Row and column cut positions. A cut `k` separates index `k-1` from `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionType {
    shape: Shape,
    row_cuts: BTreeSet<usize>,
    col_cuts: BTreeSet<usize>,
}

impl PartitionType {
    pub fn new(
        shape: Shape,
        row_cuts: impl IntoIterator<Item = usize>,
        col_cuts: impl IntoIterator<Item = usize>,
    ) -> Result<PartitionType> {
        let row_cuts: BTreeSet<usize> = row_cuts.into_iter().collect();
        let col_cuts: BTreeSet<usize> = col_cuts.into_iter().collect();
        if let Some(&c) = row_cuts.iter().find(|&&c| c == 0 || c >= shape.rows) {
            return Err(AlgebraError::InvalidPartition(format!("row cut {c} outside 1..{}", shape.rows)));
        }
        if let Some(&c) = col_cuts.iter().find(|&&c| c == 0 || c >= shape.cols) {
            return Err(AlgebraError::InvalidPartition(format!("column cut {c} outside 1..{}", shape.cols)));
        }
        Ok(PartitionType { shape, row_cuts, col_cuts })
    }

    /// No cuts at all.
    pub fn trivial(shape: Shape) -> PartitionType {
        PartitionType { shape, row_cuts: BTreeSet::new(), col_cuts: BTreeSet::new() }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn row_cuts(&self) -> &BTreeSet<usize> {
        &self.row_cuts
    }

    pub fn col_cuts(&self) -> &BTreeSet<usize> {
        &self.col_cuts
    }

    pub fn is_trivial(&self) -> bool {
        self.row_cuts.is_empty() && self.col_cuts.is_empty()
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rows{:?} cols{:?}", self.shape, self.row_cuts, self.col_cuts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMatrix {
    base: Matrix,
    ptype: PartitionType,
}

impl SuperMatrix {
    pub fn new(base: Matrix, ptype: PartitionType) -> Result<SuperMatrix> {
        if ptype.shape != base.shape() {
            return Err(AlgebraError::ShapeMismatch(ptype.shape, base.shape()));
        }
        Ok(SuperMatrix { base, ptype })
    }

    pub fn with_cuts(
        base: Matrix,
        row_cuts: impl IntoIterator<Item = usize>,
        col_cuts: impl IntoIterator<Item = usize>,
    ) -> Result<SuperMatrix> {
        let ptype = PartitionType::new(base.shape(), row_cuts, col_cuts)?;
        Ok(SuperMatrix { base, ptype })
    }

    pub fn unpartitioned(base: Matrix) -> SuperMatrix {
        let ptype = PartitionType::trivial(base.shape());
        SuperMatrix { base, ptype }
    }

    pub fn ones(ptype: &PartitionType, domain: Domain) -> SuperMatrix {
        SuperMatrix { base: Matrix::ones(ptype.shape, domain), ptype: ptype.clone() }
    }

    pub fn zeros(ptype: &PartitionType, domain: Domain) -> SuperMatrix {
        SuperMatrix { base: Matrix::zeros(ptype.shape, domain), ptype: ptype.clone() }
    }

    pub fn base(&self) -> &Matrix {
        &self.base
    }

    pub fn into_base(self) -> Matrix {
        self.base
    }

    pub fn ptype(&self) -> &PartitionType {
        &self.ptype
    }

    pub fn domain(&self) -> Domain {
        self.base.domain()
    }

    pub fn shape(&self) -> Shape {
        self.base.shape()
    }

    /// Identical shape, domain and cut sets.
    pub fn same_type(&self, other: &SuperMatrix) -> bool {
        self.ptype == other.ptype && self.domain() == other.domain()
    }

    fn require_same_type(&self, other: &SuperMatrix) -> Result<()> {
        if self.ptype != other.ptype {
            if self.shape() != other.shape() {
                return Err(AlgebraError::ShapeMismatch(self.shape(), other.shape()));
            }
            return Err(AlgebraError::TypeMismatch(format!("{} vs {}", self.ptype, other.ptype)));
        }
        if self.domain() != other.domain() {
            return Err(AlgebraError::DomainMismatch(self.domain(), other.domain()));
        }
        Ok(())
    }

    pub fn add(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.require_same_type(other)?;
        Ok(SuperMatrix { base: self.base.add(&other.base)?, ptype: self.ptype.clone() })
    }

    pub fn nproduct(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.require_same_type(other)?;
        Ok(SuperMatrix { base: self.base.nproduct(&other.base)?, ptype: self.ptype.clone() })
    }

    pub fn neg(&self) -> Result<SuperMatrix> {
        Ok(SuperMatrix { base: self.base.neg()?, ptype: self.ptype.clone() })
    }

    pub fn inverse(&self) -> Result<SuperMatrix> {
        Ok(SuperMatrix { base: self.base.natural_inverse()?, ptype: self.ptype.clone() })
    }

    pub fn is_orthogonal(&self, other: &SuperMatrix) -> Result<bool> {
        Ok(self.nproduct(other)?.base.is_zero())
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_super(self))
    }
}

pub fn same_type(s: &SuperMatrix, t: &SuperMatrix) -> bool {
    s.same_type(t)
}

pub fn super_add(s: &SuperMatrix, t: &SuperMatrix) -> Result<SuperMatrix> {
    s.add(t)
}

pub fn super_nproduct(s: &SuperMatrix, t: &SuperMatrix) -> Result<SuperMatrix> {
    s.nproduct(t)
}

pub fn super_inverse(s: &SuperMatrix) -> Result<SuperMatrix> {
    s.inverse()
}
