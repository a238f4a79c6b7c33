//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::collections::BTreeSet;
use std::time::Instant;

use natprod::matpoly::natural_one;
use natprod::random::{self, SeededRng};
use natprod::structures::{
    check_sum, cone_positivity_check, ideal_generated, idempotents_in, orthogonal_space, subspace_complement, Carrier,
    MaskSubspace, Operation, SumKind,
};
use natprod::supermatrix::{super_add, super_nproduct, PartitionType};
use natprod::text::parse_poly;
use natprod::verify::{run_suite, Suite, VerifyOptions};
use natprod::{AlgebraError, Domain, MatPoly, Matrix, Shape, SuperMatrix, SupportMask};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const Q: Domain = Domain::Rat;
const Z: Domain = Domain::Int;

fn shape(r: usize, c: usize) -> Shape {
    Shape::new(r, c).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: AlgebraError) -> String {
    e.to_string()
}

/// Entrywise product computed directly from the entries.
fn hadamard(a: &Matrix, b: &Matrix) -> Vec<BigRational> {
    a.entries().iter().zip(b.entries()).map(|(x, y)| x * y).collect()
}

fn shapes_up_to(max_size: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    for r in 1..=max_size {
        for c in 1..=max_size / r {
            out.push(shape(r, c));
        }
    }
    out
}

fn paper_regression() -> Outcome {
    let start = Instant::now();
    let rep = run_suite(Suite::PaperExamples, VerifyOptions::default());
    let elapsed = start.elapsed();
    if let Some(f) = rep.first_failure() {
        return Err(format!("{}: {}", f.name, f.detail));
    }
    ensure(rep.cases.len() >= 25, || format!("only {} cases", rep.cases.len()))?;
    ensure(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))?;
    Ok(format!("{} cases in {:.0?}", rep.cases.len(), elapsed))
}

fn law_suite() -> Outcome {
    let mut rng = random::rng(11);
    for _ in 0..10_000 {
        let s = random::shape(&mut rng, 5, 5);
        let (a, b, c) = (random::matrix(&mut rng, s, Q), random::matrix(&mut rng, s, Q), random::matrix(&mut rng, s, Q));
        let ab = a.nproduct(&b).map_err(err)?;
        ensure(ab.entries() == hadamard(&a, &b).as_slice(), || format!("entrywise product wrong for {a} {b}"))?;
        ensure(ab == b.nproduct(&a).map_err(err)?, || "not commutative".into())?;
        let left = ab.nproduct(&c).map_err(err)?;
        let right = a.nproduct(&b.nproduct(&c).map_err(err)?).map_err(err)?;
        ensure(left == right, || "not associative".into())?;
        let dist = a.nproduct(&b.add(&c).map_err(err)?).map_err(err)?;
        let sum = ab.add(&a.nproduct(&c).map_err(err)?).map_err(err)?;
        ensure(dist == sum, || "not distributive".into())?;
        ensure(a.nproduct(&Matrix::ones(s, Q)).map_err(err)? == a, || "J is not an identity".into())?;
    }
    for _ in 0..1_000 {
        let s = random::shape(&mut rng, 3, 3);
        let (a, b, c) = (random::poly(&mut rng, s, Q, 4), random::poly(&mut rng, s, Q, 4), random::poly(&mut rng, s, Q, 4));
        let ab = a.mul_natural(&b).map_err(err)?;
        ensure(ab == b.mul_natural(&a).map_err(err)?, || "poly product not commutative".into())?;
        ensure(
            ab.mul_natural(&c).map_err(err)? == a.mul_natural(&b.mul_natural(&c).map_err(err)?).map_err(err)?,
            || "poly product not associative".into(),
        )?;
        ensure(
            a.mul_natural(&b.add(&c).map_err(err)?).map_err(err)?
                == ab.add(&a.mul_natural(&c).map_err(err)?).map_err(err)?,
            || "poly product not distributive".into(),
        )?;
        ensure(a.mul_natural(&natural_one(s, Q)).map_err(err)? == a, || "J is not a poly identity".into())?;
        ensure(a.add(&a.neg().map_err(err)?).map_err(err)?.is_zero(), || "no additive inverse".into())?;
        // coefficient of x^k in the product is the convolution of entrywise products
        let top = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
        for k in 0..=top {
            let mut acc = Matrix::zeros(s, Q);
            for i in 0..=k {
                let t = a.coeff(i).nproduct(&b.coeff(k - i)).map_err(err)?;
                acc = acc.add(&t).map_err(err)?;
            }
            ensure(ab.coeff(k) == acc, || format!("coefficient {k} of the product"))?;
        }
    }
    Ok("10000 matrix triples, 1000 polynomial triples".into())
}

fn diagonal_equivalence() -> Outcome {
    let mut rng = random::rng(12);
    for _ in 0..1_000 {
        let n = rng.gen_range(1..=6);
        let a = random::diagonal(&mut rng, n, Q);
        let b = random::diagonal(&mut rng, n, Q);
        let u = a.uproduct(&b).map_err(err)?;
        ensure(u == a.nproduct(&b).map_err(err)?, || format!("{a} and {b} disagree"))?;
        ensure(u.entries() == hadamard(&a, &b).as_slice(), || "diagonal product wrong".into())?;
    }
    let d = |v: &[i64]| Matrix::diagonal(Z, &v.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>());
    let a = d(&[7, 8, 2, 4]).map_err(err)?;
    let b = d(&[1, 2, 3, 4]).map_err(err)?;
    let want = d(&[7, 16, 6, 16]).map_err(err)?;
    ensure(a.uproduct(&b).map_err(err)? == want && a.nproduct(&b).map_err(err)? == want, || "diag(7,16,6,16)".into())?;
    Ok("1000 pairs plus diag(7,16,6,16)".into())
}

fn idempotent_census() -> Outcome {
    let mut checked = 0;
    for s in shapes_up_to(12) {
        let c = Carrier::masks(s, Operation::NaturalProduct).map_err(err)?;
        let found = idempotents_in(&c).len();
        // every 0/1 pattern squares to itself, so the brute count equals the carrier size
        let brute = c.elements().iter().filter(|m| m.entries().iter().all(|v| v * v == *v)).count();
        ensure(found == 1 << s.size() && brute == found, || format!("masks {s}: {found}"))?;
        checked += 1;
    }
    for s in shapes_up_to(4) {
        let mn = s.size() as u32;
        let mut brute = 0usize;
        for code in 0..6u64.pow(mn) {
            let mut rest = code;
            let mut ok = true;
            for _ in 0..mn {
                let e = rest % 6;
                rest /= 6;
                ok &= e * e % 6 == e;
            }
            brute += ok as usize;
        }
        let c = Carrier::all_matrices(s, 6, Operation::NaturalProduct).map_err(err)?;
        let found = idempotents_in(&c).len();
        ensure(brute == 4usize.pow(mn) && found == brute, || format!("Zn:6 {s}: {found} vs {brute}"))?;
        checked += 1;
    }
    Ok(format!("{checked} shapes"))
}

fn ideal_order_law() -> Outcome {
    let mut n = 0;
    let mut sizes = BTreeSet::new();
    for rows in 1..=2 {
        for cols in 1..=4 {
            let s = shape(rows, cols);
            let c = Carrier::masks(s, Operation::NaturalProduct).map_err(err)?;
            for x in c.elements() {
                let xm = x.support();
                let mut products = BTreeSet::new();
                for y in c.elements() {
                    products.insert(xm.and(&y.support()));
                }
                let got = ideal_generated(&c, x).map_err(err)?.cardinality();
                let want = 1usize << xm.popcount();
                ensure(got == want && products.len() == want, || format!("<{x}> has {got}, expected {want}"))?;
                if s == shape(2, 4) {
                    sizes.insert(got);
                }
                n += 1;
            }
        }
    }
    ensure(sizes.contains(&16) && sizes.contains(&64), || "2x4 ideal sizes missing 16 or 64".into())?;
    Ok(format!("{n} generators"))
}

fn inverse_characterization() -> Outcome {
    let mut n = 0;
    for rows in 1..=2 {
        for cols in 1..=3 {
            let s = shape(rows, cols);
            let all_cuts = PartitionType::new(s, 1..rows, 1..cols).map_err(err)?;
            for code in 0..7u64.pow(s.size() as u32) {
                let mut rest = code;
                let vals: Vec<BigRational> = (0..s.size())
                    .map(|_| {
                        let v = (rest % 7) as i64 - 3;
                        rest /= 7;
                        BigRational::from_integer(v.into())
                    })
                    .collect();
                let units = vals.iter().all(|v| v.abs().is_one());
                let m = Matrix::new(s, Z, vals).map_err(err)?;
                let inv = m.natural_inverse();
                ensure(inv.is_ok() == units, || format!("natural inverse of {m}: {inv:?}"))?;
                if let Ok(i) = &inv {
                    ensure(m.nproduct(i).map_err(err)?.is_ones(), || format!("{m} times its inverse"))?;
                }
                let sm = SuperMatrix::new(m.clone(), all_cuts.clone()).map_err(err)?;
                ensure(sm.inverse().is_ok() == units, || format!("super inverse of {m}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} matrices"))
}

fn calculus_closure() -> Outcome {
    let mut rng = random::rng(13);
    for _ in 0..1_000 {
        let s = random::shape(&mut rng, 3, 3);
        let p = random::poly(&mut rng, s, Z, 6);
        let d = p.derivative();
        ensure(d.domain() == Z, || "derivative left Z".into())?;
        for (k, c) in d.terms() {
            // independent oracle: (k+1) times the next coefficient
            let want = p.coeff(k + 1).map(|v| v * BigRational::from_integer(BigInt::from(k + 1)));
            ensure(*c == want && c.entries().iter().all(|v| v.is_integer()), || format!("coefficient {k} of {p}"))?;
        }
    }
    let text = "[3 8 4 0] + [2 0 4 9] * x + [1 2 1 1] * x^2 + [1 0 1 1] * x^3 + [3 4 8 9] * x^5";
    let over_z = parse_poly(text, Z).map_err(err)?.integrate(None);
    ensure(matches!(over_z, Err(AlgebraError::NotClosed { .. })), || format!("integral over Z gave {over_z:?}"))?;
    let q = parse_poly(text, Q).map_err(err)?;
    ensure(q.integrate(None).map_err(err)?.derivative() == q, || "integral over Q".into())?;
    for _ in 0..1_000 {
        let s = random::shape(&mut rng, 3, 3);
        let p = random::poly(&mut rng, s, Q, 6);
        let c = random::matrix(&mut rng, s, Q);
        let i = p.integrate(Some(&c)).map_err(err)?;
        ensure(i.derivative() == p && i.coeff(0) == c, || format!("round trip of {p}"))?;
    }
    Ok("1000 integer derivatives, 1000 round trips".into())
}

fn random_mask(rng: &mut SeededRng, s: Shape) -> SupportMask {
    SupportMask::new(s, (0..s.size()).map(|_| rng.gen_bool(0.5)).collect()).unwrap()
}

fn orthogonality() -> Outcome {
    let mut pairs = 0u64;
    for s in shapes_up_to(10) {
        let masks: Vec<SupportMask> = (0..1u64 << s.size()).map(|i| SupportMask::from_index(s, i)).collect();
        let mats: Vec<Matrix> = masks.iter().map(|m| m.to_matrix(Z)).collect();
        for (x, xm) in masks.iter().zip(&mats) {
            let w = orthogonal_space(xm);
            ensure(w.mask() == &x.complement(), || format!("x⊥ of {x}"))?;
            for (y, ym) in masks.iter().zip(&mats) {
                let zero = xm.is_orthogonal(ym).map_err(err)?;
                ensure(zero == y.is_subset(w.mask()), || format!("{x} vs {y}"))?;
                pairs += 1;
            }
        }
    }
    let mut rng = random::rng(14);
    for _ in 0..1_000 {
        let s = random::shape(&mut rng, 5, 5);
        let mask = random_mask(&mut rng, s);
        let x = random::matrix(&mut rng, s, Q).nproduct(&mask.to_matrix(Q)).map_err(err)?;
        let y = random::matrix(&mut rng, s, Q);
        let zero = x.nproduct(&y).map_err(err)?.is_zero();
        ensure(zero == orthogonal_space(&x).contains(&y), || format!("{x} vs {y}"))?;
        let w = MaskSubspace::new(mask, Q);
        let wp = subspace_complement(&w);
        ensure(w.dim() + wp.dim() == s.size(), || "dimensions do not add up".into())?;
        let (a, b) = (w.sample(&mut rng), wp.sample(&mut rng));
        ensure(a.nproduct(&b).map_err(err)?.is_zero(), || format!("{a} and {b} not orthogonal"))?;
    }
    Ok(format!("{pairs} mask pairs, 1000 sampled subspaces"))
}

fn direct_sums() -> Outcome {
    let s = shape(3, 3);
    let sub = |ps: &[(usize, usize)]| MaskSubspace::from_positions(s, Q, ps).unwrap();
    let parts = vec![sub(&[(0, 0), (0, 1), (2, 2)]), sub(&[(0, 2), (1, 1)]), sub(&[(1, 0), (1, 2), (2, 1)]), sub(&[(2, 0)])];
    ensure(check_sum(&parts).map_err(err)?.kind == SumKind::Direct, || "four-part sum not direct".into())?;
    for skip in 0..parts.len() {
        let rest: Vec<_> = parts.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| p.clone()).collect();
        ensure(check_sum(&rest).map_err(err)?.kind == SumKind::NotSpanning, || format!("dropping part {skip}"))?;
    }
    let col = shape(12, 1);
    let rows = |a: usize, b: usize| {
        MaskSubspace::from_positions(col, Q, &(a..=b).map(|r| (r, 0)).collect::<Vec<_>>()).unwrap()
    };
    let pseudo = check_sum(&[rows(0, 1), rows(1, 3), rows(2, 5), rows(5, 11)]).map_err(err)?;
    ensure(pseudo.kind == SumKind::PseudoDirect, || format!("overlapping cover gave {}", pseudo.kind.name()))?;
    Ok("direct, not-spanning, pseudo-direct".into())
}

fn partitions_of(s: Shape) -> Vec<PartitionType> {
    let mut out = Vec::new();
    for r in 0..1u32 << (s.rows - 1) {
        for c in 0..1u32 << (s.cols - 1) {
            let rc: Vec<usize> = (1..s.rows).filter(|i| r >> (i - 1) & 1 == 1).collect();
            let cc: Vec<usize> = (1..s.cols).filter(|i| c >> (i - 1) & 1 == 1).collect();
            out.push(PartitionType::new(s, rc, cc).unwrap());
        }
    }
    out
}

fn is_type_mismatch<T>(r: &natprod::Result<T>) -> bool {
    matches!(r, Err(AlgebraError::TypeMismatch(_)))
}

fn partition_contract() -> Outcome {
    let mut rng = random::rng(15);
    let mut mismatches = 0;
    for rows in 1..=3 {
        for cols in 1..=3 {
            let s = shape(rows, cols);
            let types = partitions_of(s);
            for t in &types {
                for u in types.iter().filter(|u| *u != t) {
                    let a = SuperMatrix::new(random::matrix(&mut rng, s, Q), t.clone()).map_err(err)?;
                    let b = SuperMatrix::new(random::matrix(&mut rng, s, Q), u.clone()).map_err(err)?;
                    let pa = MatPoly::from_terms(s, Q, Some(t.clone()), [(1, a.base().clone())]).map_err(err)?;
                    let pb = MatPoly::from_terms(s, Q, Some(u.clone()), [(2, b.base().clone())]).map_err(err)?;
                    let all = [
                        is_type_mismatch(&a.add(&b)),
                        is_type_mismatch(&a.nproduct(&b)),
                        is_type_mismatch(&a.is_orthogonal(&b)),
                        is_type_mismatch(&super_add(&a, &b)),
                        is_type_mismatch(&super_nproduct(&a, &b)),
                        is_type_mismatch(&pa.add(&pb)),
                        is_type_mismatch(&pa.mul_natural(&pb)),
                    ];
                    ensure(all.iter().all(|&x| x), || format!("{t} vs {u}: {all:?}"))?;
                    mismatches += 1;
                }
            }
        }
    }
    for _ in 0..10_000 {
        let s = random::shape(&mut rng, 5, 5);
        let types = partitions_of(s);
        let t = &types[rng.gen_range(0..types.len())];
        let a = SuperMatrix::new(random::matrix(&mut rng, s, Q), t.clone()).map_err(err)?;
        let b = SuperMatrix::new(random::matrix(&mut rng, s, Q), t.clone()).map_err(err)?;
        let p = a.nproduct(&b).map_err(err)?;
        ensure(p.base().entries() == hadamard(a.base(), b.base()).as_slice() && p.ptype() == t, || "flattened product".into())?;
        let sum = a.add(&b).map_err(err)?;
        ensure(sum.base() == &a.base().add(b.base()).map_err(err)? && sum.ptype() == t, || "flattened sum".into())?;
    }
    Ok(format!("{mismatches} mixed-type pairs, 10000 same-type pairs"))
}

fn cone_properties() -> Outcome {
    let mut rng = random::rng(16);
    for _ in 0..10_000 {
        let s = random::shape(&mut rng, 4, 4);
        let a = random::positive_matrix(&mut rng, s, Domain::NonNegRat);
        let b = random::positive_matrix(&mut rng, s, Domain::NonNegRat);
        ensure(a.nproduct(&b).map_err(err)?.entries().iter().all(|v| v > &BigRational::zero()), || {
            format!("{a} times {b} has a zero")
        })?;
        ensure(!a.add(&b).map_err(err)?.is_zero(), || "positive sum is zero".into())?;
    }
    let rep = cone_positivity_check(shape(2, 3), Domain::NonNegRat, 10_000, 16).map_err(err)?;
    ensure(rep.positive_zero_divisor.is_none() && rep.strictness_violation.is_none(), || format!("{rep:?}"))?;
    let x = Matrix::row(Domain::NonNegInt, &[3, 0, 4]).map_err(err)?;
    let y = Matrix::row(Domain::NonNegInt, &[0, 7, 0]).map_err(err)?;
    ensure(x.nproduct(&y).map_err(err)?.is_zero(), || "(3,0,4)(0,7,0) is not zero".into())?;
    ensure(x.zero_divisor_witness().is_some(), || "no witness for (3,0,4)".into())?;
    let (a, b) = rep.zero_pattern;
    ensure(!a.is_zero() && !b.is_zero() && a.nproduct(&b).map_err(err)?.is_zero(), || "zero pattern".into())?;
    Ok("20000 positive pairs, zero pattern exhibited".into())
}

fn constant_units() -> Outcome {
    let mut n = 0;
    for rows in 1..=2 {
        for cols in 1..=3 {
            let s = shape(rows, cols);
            for t in partitions_of(s) {
                for code in 0..3u64.pow(s.size() as u32) {
                    let mut rest = code;
                    let vals: Vec<i64> = (0..s.size())
                        .map(|_| {
                            let v = (rest % 3) as i64 - 1;
                            rest /= 3;
                            v
                        })
                        .collect();
                    let m = Matrix::new(s, Z, vals.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                        .map_err(err)?;
                    let p = MatPoly::from_terms(s, Z, Some(t.clone()), [(0, m.clone())]).map_err(err)?;
                    let unit = vals.iter().all(|v| v.abs() == 1);
                    let idem = vals.iter().all(|v| *v == 0 || *v == 1);
                    ensure(p.is_unit_natural() == unit, || format!("unit test for {m}"))?;
                    ensure(p.is_idempotent_natural() == idem, || format!("idempotent test for {m}"))?;
                    if unit {
                        let inv = MatPoly::from_terms(s, Z, Some(t.clone()), [(0, m.natural_inverse().map_err(err)?)])
                            .map_err(err)?;
                        let prod = p.mul_natural(&inv).map_err(err)?;
                        ensure(prod.degree() == Some(0) && prod.coeff(0).is_ones(), || format!("inverse of {m}"))?;
                    }
                    n += 1;
                }
            }
        }
    }
    let mut rng = random::rng(17);
    for _ in 0..1_000 {
        let s = random::shape(&mut rng, 3, 3);
        let d = if rng.gen_bool(0.5) { Z } else { Q };
        let deg = rng.gen_range(1..=4);
        let p = random::poly_of_degree(&mut rng, s, d, deg);
        ensure(!p.is_unit_natural() && !p.is_idempotent_natural(), || format!("{p} is a unit or idempotent"))?;
        // squaring doubles the degree over an integral domain, so p² = p is impossible
        let sq = p.mul_natural(&p).map_err(err)?;
        ensure(sq.degree() > p.degree(), || format!("{p} squared did not grow"))?;
    }
    Ok(format!("{n} constant super polynomials, 1000 random polynomials"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("worked-example regression", paper_regression),
        ("algebraic laws", law_suite),
        ("diagonal equivalence", diagonal_equivalence),
        ("idempotent censuses", idempotent_census),
        ("ideal-order law", ideal_order_law),
        ("inverse characterization", inverse_characterization),
        ("calculus closure", calculus_closure),
        ("orthogonality", orthogonality),
        ("direct-sum classifier", direct_sums),
        ("partition contract", partition_contract),
        ("cone semifield", cone_properties),
        ("constant-only units and idempotents", constant_units),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({:.2?})", i + 1, start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
