//! Seeded random matrices and polynomials for the sampled law checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matpoly::MatPoly;
use crate::matrix::{Matrix, Shape};
use crate::scalar::Domain;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A value drawn to suit `domain`: small integers, small fractions, or residues.
pub fn value(rng: &mut SeededRng, domain: Domain) -> BigRational {
    let v = match domain {
        Domain::Int => BigRational::from_integer(rng.gen_range(-9i64..=9).into()),
        Domain::NonNegInt => BigRational::from_integer(rng.gen_range(0i64..=9).into()),
        Domain::Rat => BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=6).into()),
        Domain::NonNegRat => BigRational::new(rng.gen_range(0i64..=9).into(), rng.gen_range(1i64..=6).into()),
        Domain::Mod(n) => BigRational::from_integer(BigInt::from(rng.gen_range(0..n))),
    };
    domain.normalize(v).expect("sampled inside the domain")
}

/// A strictly positive rational.
pub fn positive(rng: &mut SeededRng) -> BigRational {
    BigRational::new(rng.gen_range(1i64..=20).into(), rng.gen_range(1i64..=9).into())
}

pub fn shape(rng: &mut SeededRng, max_rows: usize, max_cols: usize) -> Shape {
    Shape::new(rng.gen_range(1..=max_rows), rng.gen_range(1..=max_cols)).expect("positive dimensions")
}

pub fn matrix(rng: &mut SeededRng, shape: Shape, domain: Domain) -> Matrix {
    let values = (0..shape.size()).map(|_| value(rng, domain)).collect();
    Matrix::new(shape, domain, values).expect("sampled inside the domain")
}

pub fn positive_matrix(rng: &mut SeededRng, shape: Shape, domain: Domain) -> Matrix {
    let values = (0..shape.size()).map(|_| positive(rng)).collect();
    Matrix::new(shape, domain, values).expect("positive values fit every rational domain")
}

/// Diagonal matrix with random diagonal and zeros elsewhere.
pub fn diagonal(rng: &mut SeededRng, n: usize, domain: Domain) -> Matrix {
    let diag: Vec<BigRational> = (0..n).map(|_| value(rng, domain)).collect();
    Matrix::diagonal(domain, &diag).expect("n >= 1")
}

/// Polynomial with degree at most `max_deg`; every degree is present with probability 1/2.
pub fn poly(rng: &mut SeededRng, shape: Shape, domain: Domain, max_deg: usize) -> MatPoly {
    let mut terms = Vec::new();
    for k in 0..=max_deg {
        if rng.gen_bool(0.5) {
            terms.push((k, matrix(rng, shape, domain)));
        }
    }
    MatPoly::from_terms(shape, domain, None, terms).expect("uniform terms")
}

/// Polynomial of exact degree `deg` (leading coefficient nonzero).
pub fn poly_of_degree(rng: &mut SeededRng, shape: Shape, domain: Domain, deg: usize) -> MatPoly {
    loop {
        let mut p = poly(rng, shape, domain, deg.saturating_sub(1));
        let lead = matrix(rng, shape, domain);
        if lead.is_zero() {
            continue;
        }
        p = p.add(&MatPoly::from_terms(shape, domain, None, [(deg, lead)]).expect("uniform")).expect("same kind");
        return p;
    }
}
