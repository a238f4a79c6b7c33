//! Built-in regression suites: worked examples, sampled algebraic laws and
//! counting checks.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::Rng;
use serde_json::{json, Value};

use crate::error::AlgebraError;
use crate::matpoly::{solve_binomial, solve_quadratic, MatPoly};
use crate::matrix::{trivial_idempotent_count, trivial_idempotents, Matrix, Shape, SupportMask};
use crate::random;
use crate::scalar::Domain;
use crate::structures::{
    analyze, check_sum, cone_positivity_check, ideal_generated, idempotents_in, is_smarandache, orthogonal_space,
    subspace_complement, Carrier, MaskSubspace, Operation, SumKind,
};
use crate::supermatrix::SuperMatrix;
use crate::text::{parse_matrix, parse_poly, parse_super};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PaperExamples,
    Laws,
    Census,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperExamples => "paper-examples",
            Suite::Laws => "laws",
            Suite::Census => "census",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "paper-examples" => Ok(Suite::PaperExamples),
            "laws" => Ok(Suite::Laws),
            "census" => Ok(Suite::Census),
            other => Err(format!("unknown suite `{other}` (expected paper-examples, laws or census)")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Sample count for the matrix laws; polynomial laws use a tenth of it.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, samples: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CaseResult> {
        self.cases.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "total": self.cases.len(),
            "failures": self.cases.iter().filter(|c| !c.passed).count(),
            "cases": self.cases.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let _ = writeln!(s, "{} {}  {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
        }
        let failed = self.cases.iter().filter(|c| !c.passed).count();
        let _ = writeln!(s, "{}: {} cases, {} failed", self.suite, self.cases.len(), failed);
        if let Some(f) = self.first_failure() {
            let _ = writeln!(s, "first failure: {}\n{}", f.name, f.detail);
        }
        s
    }
}

/// A failed check, with a readable diff.
#[derive(Debug)]
pub struct Fail(pub String);

impl From<AlgebraError> for Fail {
    fn from(e: AlgebraError) -> Fail {
        Fail(format!("unexpected error: {e}"))
    }
}

type Check = Result<String, Fail>;

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: &T, want: &T) -> Result<(), Fail> {
    if got == want {
        Ok(())
    } else {
        Err(Fail(format!("{what}\n  expected {want}\n  got      {got}")))
    }
}

fn expect(cond: bool, msg: impl Into<String>) -> Result<(), Fail> {
    if cond {
        Ok(())
    } else {
        Err(Fail(msg.into()))
    }
}

fn expect_err<T: std::fmt::Debug>(
    what: &str,
    r: crate::error::Result<T>,
    ok: impl Fn(&AlgebraError) -> bool,
) -> Result<AlgebraError, Fail> {
    match r {
        Err(e) if ok(&e) => Ok(e),
        Err(e) => Err(Fail(format!("{what}: wrong error {e}"))),
        Ok(v) => Err(Fail(format!("{what}: expected an error, got {v:?}"))),
    }
}

struct Runner {
    cases: Vec<CaseResult>,
}

impl Runner {
    fn case(&mut self, name: &str, f: impl FnOnce() -> Check) {
        let (passed, detail) = match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
            Ok(Ok(d)) => (true, d),
            Ok(Err(Fail(d))) => (false, d),
            Err(_) => (false, "panicked".to_string()),
        };
        self.cases.push(CaseResult { name: name.to_string(), passed, detail });
    }
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> SuiteReport {
    let mut r = Runner { cases: Vec::new() };
    match suite {
        Suite::PaperExamples => paper_examples(&mut r),
        Suite::Laws => laws(&mut r, opts),
        Suite::Census => census(&mut r),
    }
    SuiteReport { suite: suite.name().to_string(), cases: r.cases }
}

const Z: Domain = Domain::Int;
const Q: Domain = Domain::Rat;

fn m(text: &str, d: Domain) -> Result<Matrix, Fail> {
    Ok(parse_matrix(text, d)?)
}

fn p(text: &str, d: Domain) -> Result<MatPoly, Fail> {
    Ok(parse_poly(text, d)?)
}

fn shape(r: usize, c: usize) -> Shape {
    Shape::new(r, c).expect("positive")
}

fn paper_examples(r: &mut Runner) {
    r.case("row-poly-sum", || {
        let a = p("[0 2 1 0] + [7 0 1 2] * x + [1 1 1 1] * x^3 + [0 1 2 0] * x^5", Q)?;
        let b = p("[7 8 9 10] + [3 1 0 7] * x + [3 0 1 4] * x^3 - [4 2 3 4] * x^4 + [7 1 0 0] * x^5 + [1 2 3 4] * x^8", Q)?;
        let want = p("[7 10 10 10] + [10 1 1 9] * x + [4 1 2 5] * x^3 - [4 2 3 4] * x^4 + [7 2 2 0] * x^5 + [1 2 3 4] * x^8", Q)?;
        let got = a.add(&b)?;
        expect_eq("p + q", &got, &want)?;
        expect(a.add(&a.neg()?)?.is_zero(), "p + (-p) is not zero")?;
        Ok(got.to_string())
    });

    r.case("square-poly-sum", || {
        let a = p("[0 3 -2;1 0 0;0 0 4] + [2 1 0;3 0 2;1 2 3] * x^2 + [0 1 2;1 2 0;2 1 0] * x^3", Q)?;
        let b = p(
            "[1 2 1;0 1 3;-6 1 2] + [1 2 3;0 1 5;-5 0 1] * x + [-1 2 3;-2 3 1;-3 2 1] * x^2 + [0 1 0;9 0 1;0 2 3] * x^3",
            Q,
        )?;
        let want = p(
            "[1 5 -1;1 1 3;-6 1 6] + [1 2 3;0 1 5;-5 0 1] * x + [1 3 3;1 3 3;-2 4 4] * x^2 + [0 2 2;10 2 1;2 3 3] * x^3",
            Q,
        )?;
        let got = a.add(&b)?;
        expect_eq("p + q", &got, &want)?;
        Ok(got.coeff(0).to_string())
    });

    r.case("poly-usual-product", || {
        let a = p("[1 2;0 4] + [0 1;2 3] * x + [1 2;3 0] * x^2", Z)?;
        let b = p("[0 1;2 0] + [1 0;2 3] * x + [1 2;3 4] * x^3", Z)?;
        let want = p(
            "[4 1;8 0] + [7 6;14 14] * x + [6 4;8 12] * x^2 + [12 16;15 16] * x^3 + [3 4;11 16] * x^4 + [7 10;3 6] * x^5",
            Z,
        )?;
        let got = a.mul_usual(&b)?;
        expect_eq("p q", &got, &want)?;
        expect(b.mul_usual(&a)? != got, "usual product commuted")?;
        Ok(got.to_string())
    });

    r.case("row-poly-natural-product", || {
        let a = p("[0 1 2] + [3 4 0] * x + [2 1 5] * x^2 + [3 0 2] * x^3", Z)?;
        let b = p("[6 0 2] + [0 1 4] * x + [3 1 0] * x^2 + [1 2 3] * x^4", Z)?;
        let want = p(
            "[0 0 4] + [18 1 8] * x + [12 5 10] * x^2 + [27 5 24] * x^3 + [6 3 14] * x^4 + [12 8 0] * x^5 + [2 2 15] * x^6 + [3 0 6] * x^7",
            Z,
        )?;
        let got = a.mul_natural(&b)?;
        expect_eq("p ×n q", &got, &want)?;
        Ok(got.to_string())
    });

    r.case("super-poly-natural-product", || {
        let a = p(
            "[3 2 | 0;1 0 | 1;0 2 | 3] + [7 5 | 1;0 1 | 2;0 0 | 3] * x + [1 2 | 3;0 0 | 7;0 1 | 2] * x^2 + [0 0 | 9;1 0 | 3;2 7 | 2] * x^4",
            Z,
        )?;
        let b = p("[4 0 | 2;1 5 | 6;7 0 | 2] + [1 2 | 3;4 5 | 6;7 8 | 9] * x^2 + [0 3 | 1;2 1 | 0;3 4 | 5] * x^3", Z)?;
        let want = p(
            "[12 0 | 0;1 0 | 6;0 0 | 6] + [28 0 | 2;0 5 | 12;0 0 | 6] * x + [7 4 | 6;4 0 | 48;0 16 | 31] * x^2 \
             + [7 16 | 3;2 5 | 12;0 8 | 42] * x^3 + [1 19 | 28;1 1 | 60;14 8 | 37] * x^4 + [0 6 | 3;0 0 | 0;0 4 | 10] * x^5 \
             + [0 0 | 27;4 0 | 18;14 56 | 18] * x^6 + [0 0 | 9;2 0 | 0;6 28 | 10] * x^7",
            Z,
        )?;
        let got = a.mul_natural(&b)?;
        expect_eq("p ×n q", &got, &want)?;
        expect(got.ptype() == a.ptype(), "partition lost")?;
        Ok(format!("degree {}", got.degree().unwrap_or(0)))
    });

    r.case("square-poly-derivative", || {
        let a = p("[3 0;1 2] + [2 6;1 5] * x + [7 0;0 8] * x^2 - [3 1;0 0] * x^3 + [8 1;0 1] * x^4 - [0 4;-2 0] * x^5", Z)?;
        let want = p("[2 6;1 5] + [14 0;0 16] * x - [9 3;0 0] * x^2 + [32 4;0 4] * x^3 - [0 20;-10 0] * x^4", Z)?;
        let got = a.derivative();
        expect_eq("p'", &got, &want)?;
        Ok(got.to_string())
    });

    r.case("row-poly-derivative", || {
        let a = p("[2 0 1 0 1 5] + [3 2 1 0 0 0] * x + [0 1 0 2 0 4] * x^2 + [0 -2 -3 0 0 0] * x^3 + [8 0 7 0 1 0] * x^5", Z)?;
        let want = p("[3 2 1 0 0 0] + [0 2 0 4 0 8] * x + [0 -6 -9 0 0 0] * x^2 + [40 0 35 0 5 0] * x^4", Z)?;
        let got = a.derivative();
        expect_eq("p'", &got, &want)?;
        Ok(got.to_string())
    });

    r.case("row-poly-integral", || {
        let a = p("[1 2 3 4 5] + [0 1 0 3 -1] * x + [5 0 8 1 7] * x^2 + [1 2 0 4 5] * x^3 + [-2 1 4 3 0] * x^4", Q)?;
        let want = p(
            "[1 2 3 4 5] * x + [0 1/2 0 3/2 -1/2] * x^2 + [5/3 0 8/3 1/3 7/3] * x^3 + [1/4 1/2 0 1 5/4] * x^4 + [-2/5 1/5 4/5 3/5 0] * x^5",
            Q,
        )?;
        let got = a.integrate(None)?;
        expect_eq("∫p", &got, &want)?;
        let c = m("[1 1 1 1 1]", Q)?;
        expect_eq("constant", &a.integrate(Some(&c))?.coeff(0), &c)?;
        Ok(got.to_string())
    });

    r.case("integral-leaves-integers", || {
        let text = "[3 8 4 0] + [2 0 4 9] * x + [1 2 1 1] * x^2 + [1 0 1 1] * x^3 + [3 4 8 9] * x^5";
        let e = expect_err("integral over Z", p(text, Z)?.integrate(None), |e| matches!(e, AlgebraError::NotClosed { .. }))?;
        let over_q = p(text, Q)?.integrate(None)?;
        expect_eq("round trip over Q", &over_q.derivative(), &p(text, Q)?)?;
        Ok(e.to_string())
    });

    r.case("degree-ten", || {
        let a = p(
            "[3 0;-1 2] + [1 0;0 2] * x^2 + [0 1;0 3] * x^3 + [1 0;4 0] * x^5 + [1 4;0 0] * x^8 + [0 0;1 2] * x^9 + [0 1;5 0] * x^10",
            Z,
        )?;
        expect_eq("degree", &a.degree().unwrap_or(0), &10)?;
        Ok("10".into())
    });

    r.case("degree-eight", || {
        let a = p("[3 1 2;0 1 5;0 0 1] + [7 2 1;0 5 7;6 1 2] * x^2 + [2 0 1;0 7 4;0 1 0] * x^4 + [2 1 5;6 7 8;0 1 2] * x^8", Z)?;
        expect_eq("degree", &a.degree().unwrap_or(0), &8)?;
        Ok("8".into())
    });

    r.case("column-natural-product", || {
        let got = m("[7;2;0;1;5]", Z)?.nproduct(&m("[1;3;5;2;7]", Z)?)?;
        expect_eq("x ×n y", &got, &m("[7;6;0;2;35]", Z)?)?;
        Ok(got.to_string())
    });

    r.case("orthogonal-columns", || {
        let a = m("[1;2;3;0;0;0]", Z)?;
        let b = m("[0;0;0;0;1;2]", Z)?;
        expect(a.is_orthogonal(&b)?, "columns not orthogonal")?;
        Ok("x ×n y = 0".into())
    });

    r.case("sign-columns-group", || {
        let mut els = Vec::new();
        for s in 0..8 {
            let sign = |bit: i32| if s >> bit & 1 == 1 { "-1" } else { "1" };
            els.push(m(&format!("[{};{};{}]", sign(2), sign(1), sign(0)), Z)?);
        }
        let c = Carrier::explicit(els.clone(), Operation::NaturalProduct)?;
        let rep = analyze(&c)?;
        expect(rep.closed && rep.associative && rep.commutative, "not a commutative semigroup")?;
        expect_eq("identity", &rep.identity.clone().map(|i| i.to_string()).unwrap_or_default(), &"[1;1;1]".to_string())?;
        expect_eq("group order", &rep.max_subgroups.iter().map(|g| g.elements.len()).max().unwrap_or(0), &8)?;
        let mut with_zero = els;
        with_zero.push(m("[0;0;0]", Z)?);
        let w = is_smarandache(&Carrier::explicit(with_zero, Operation::NaturalProduct)?)?
            .ok_or_else(|| Fail("no subgroup found".into()))?;
        expect_eq("subgroup order", &w.elements.len(), &8)?;
        let pair = Carrier::explicit(vec![m("[0;0;0]", Z)?, m("[1;1;1]", Z)?, m("[-1;-1;-1]", Z)?], Operation::NaturalProduct)?;
        let w = is_smarandache(&pair)?.ok_or_else(|| Fail("no subgroup found".into()))?;
        expect_eq("{J, -J}", &w.elements.len(), &2)?;
        Ok("group of order 8".into())
    });

    r.case("square-natural-product", || {
        let a = m("[6 1 2;0 3 4;2 1 0]", Z)?;
        let b = m("[3 0 1;2 1 0;0 1 2]", Z)?;
        let got = a.nproduct(&b)?;
        expect_eq("A ×n B", &got, &m("[18 0 2;0 3 0;0 1 0]", Z)?)?;
        Ok(got.to_string())
    });

    r.case("square-usual-product", || {
        let a = m("[6 1 2;0 3 4;2 1 0]", Z)?;
        let b = m("[3 0 1;2 1 0;0 1 2]", Z)?;
        let got = a.uproduct(&b)?;
        expect_eq("A B", &got, &m("[20 3 10;6 7 8;8 1 2]", Z)?)?;
        expect(got != a.nproduct(&b)?, "products agree")?;
        Ok(got.to_string())
    });

    r.case("usual-product-order", || {
        let a = m("[3 4;2 0]", Z)?;
        let b = m("[1 2;0 1]", Z)?;
        expect_eq("M N", &a.uproduct(&b)?, &m("[3 10;2 4]", Z)?)?;
        expect_eq("N M", &b.uproduct(&a)?, &m("[7 4;2 0]", Z)?)?;
        let pa = MatPoly::constant(a);
        let pb = MatPoly::constant(b);
        expect(pa.mul_usual(&pb)? != pb.mul_usual(&pa)?, "constant polynomials commute")?;
        Ok("M N ≠ N M".into())
    });

    r.case("diagonal-products", || {
        let a = m("[7 0 0 0;0 8 0 0;0 0 2 0;0 0 0 4]", Z)?;
        let b = m("[1 0 0 0;0 2 0 0;0 0 3 0;0 0 0 4]", Z)?;
        let want = m("[7 0 0 0;0 16 0 0;0 0 6 0;0 0 0 16]", Z)?;
        expect_eq("usual", &a.uproduct(&b)?, &want)?;
        expect_eq("natural", &a.nproduct(&b)?, &want)?;
        Ok(want.to_string())
    });

    r.case("natural-inverse", || {
        let a = m("[3 4;5 8;1 9;4 7]", Q)?;
        let got = a.natural_inverse()?;
        expect_eq("inverse", &got, &m("[1/3 1/4;1/5 1/8;1 1/9;1/4 1/7]", Q)?)?;
        expect(a.nproduct(&got)?.is_ones(), "a ×n a⁻¹ ≠ J")?;
        expect(got.nproduct(&a)? == a.nproduct(&got)?, "ab ≠ ba")?;
        Ok(got.to_string())
    });

    r.case("cone-zero-divisor", || {
        let a = m("[3 0 4]", Domain::NonNegInt)?;
        let b = m("[0 7 0]", Domain::NonNegInt)?;
        expect(a.nproduct(&b)?.is_zero(), "(3,0,4)(0,7,0) ≠ 0")?;
        let w = a.zero_divisor_witness().ok_or_else(|| Fail("no witness".into()))?;
        expect_eq("witness", &w, &m("[0 1 0]", Domain::NonNegInt)?)?;
        Ok(w.to_string())
    });

    r.case("cone-semifield", || {
        let rep = cone_positivity_check(shape(1, 4), Domain::NonNegRat, 1000, 0)?;
        expect(rep.positive_zero_divisor.is_none(), "positive zero divisor found")?;
        expect(rep.strictness_violation.is_none(), "strictness fails")?;
        Ok("1000 samples".into())
    });

    r.case("zero-one-idempotents", || {
        let x = m("[1 1 1;0 0 0;1 1 1;0 0 0;0 0 0]", Domain::NonNegInt)?;
        let y = m("[0 0 0;1 0 0;0 1 0;0 0 1;0 1 1]", Domain::NonNegInt)?;
        expect(x.is_idempotent() && y.is_idempotent(), "x² ≠ x")?;
        let zd = m("[0 0 0;1 2 3;0 0 0;4 5 6;0 0 0]", Domain::NonNegInt)?
            .nproduct(&m("[1 2 3;0 0 0;4 5 6;0 0 0;7 8 9]", Domain::NonNegInt)?)?;
        expect(zd.is_zero(), "row pattern product not zero")?;
        Ok("x² = x".into())
    });

    r.case("masks-two-by-two", || {
        let all = trivial_idempotents(shape(2, 2))?;
        expect_eq("count", &all.len(), &16)?;
        expect(all.iter().all(|s| s.to_matrix(Domain::NonNegInt).is_idempotent()), "mask not idempotent")?;
        let rep = analyze(&Carrier::masks(shape(2, 2), Operation::NaturalProduct)?)?;
        expect(rep.closed && rep.associative && rep.commutative, "masks not a semigroup")?;
        let add = analyze(&Carrier::masks(shape(2, 2), Operation::Addition)?)?;
        expect(!add.closed, "masks closed under +")?;
        Ok("16 masks".into())
    });

    r.case("masks-two-by-four-ideals", || {
        let c = Carrier::masks(shape(2, 4), Operation::NaturalProduct)?;
        expect_eq("|I|", &c.len(), &256)?;
        let x = m("[1 1 1 1;0 0 0 0]", Z)?;
        expect_eq("|<x>|", &ideal_generated(&c, &x)?.cardinality(), &16)?;
        let j = m("[1 1 1 0;1 1 1 0]", Z)?;
        expect_eq("|<j>|", &ideal_generated(&c, &j)?.cardinality(), &64)?;
        let zero = Matrix::zeros(shape(2, 4), Z);
        expect_eq("<0>", &ideal_generated(&c, &zero)?.cardinality(), &1)?;
        let ones = Matrix::ones(shape(2, 4), Z);
        expect_eq("<J>", &ideal_generated(&c, &ones)?.cardinality(), &256)?;
        Ok("16, 64".into())
    });

    r.case("orthogonal-space", || {
        let x = m("[2 0;0 5]", Q)?;
        let w = orthogonal_space(&x);
        expect_eq("mask", w.mask(), &SupportMask::from_ints(&[&[0, 1], &[1, 0]])?)?;
        for y in ["[0 0;0 0]", "[0 3;7 0]", "[0 3;0 0]", "[0 0;7 0]"] {
            expect(w.contains(&m(y, Q)?), format!("{y} missing"))?;
        }
        let x2 = m("[0 1;4 0]", Q)?;
        expect_eq("second mask", orthogonal_space(&x2).mask(), &SupportMask::from_ints(&[&[1, 0], &[0, 1]])?)?;
        Ok(w.mask().to_string())
    });

    r.case("bottom-row-complement", || {
        let b = MaskSubspace::new(SupportMask::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[1, 1, 1]])?, Q);
        let c = subspace_complement(&b);
        expect_eq("B⊥", c.mask(), &SupportMask::from_ints(&[&[1, 1, 1], &[1, 1, 1], &[0, 0, 0]])?)?;
        expect_eq("sum", &check_sum(&[c.clone(), b])?.kind.name(), &"direct")?;
        Ok(c.mask().to_string())
    });

    r.case("main-complement", || {
        let pm = m("[3 0;-2 0]", Q)?;
        expect_eq("mask", &pm.main_complement(), &SupportMask::from_ints(&[&[0, 1], &[0, 1]])?)?;
        expect(Matrix::zeros(shape(2, 2), Q).main_complement().is_full(), "{0}⊥ ≠ V")?;
        Ok(pm.main_complement().to_string())
    });

    r.case("orthogonal-rows", || {
        expect(m("[0 4 -5 0 7]", Z)?.is_orthogonal(&m("[1 0 0 8 0]", Z)?)?, "rows not orthogonal")?;
        Ok("x ×n y = 0".into())
    });

    r.case("direct-sum", || {
        let s = shape(3, 3);
        let sub = |ps: &[(usize, usize)]| MaskSubspace::from_positions(s, Q, ps);
        let parts = vec![
            sub(&[(0, 0), (0, 1), (2, 2)])?,
            sub(&[(0, 2), (1, 1)])?,
            sub(&[(1, 0), (1, 2), (2, 1)])?,
            sub(&[(2, 0)])?,
        ];
        expect_eq("kind", &check_sum(&parts)?.kind.name(), &"direct")?;
        Ok("direct".into())
    });

    r.case("pseudo-direct-sum", || {
        let col = shape(12, 1);
        let rows = |a: usize, b: usize| {
            let ps: Vec<(usize, usize)> = (a..=b).map(|r| (r, 0)).collect();
            MaskSubspace::from_positions(col, Q, &ps)
        };
        let rep = check_sum(&[rows(0, 1)?, rows(1, 3)?, rows(2, 5)?, rows(5, 11)?])?;
        expect_eq("kind", &rep.kind.name(), &"pseudo-direct")?;
        Ok(format!("{} overlaps", rep.overlaps.len()))
    });

    r.case("super-natural-product", || {
        let x = parse_super("[1 2 | 3 4 | 5;9 8 | 7 6 | 5;0 1 | 2 7 | 1]", Z)?;
        let y = parse_super("[0 1 | 2 3 | 5;9 0 | 1 3 | 4;7 2 | 3 1 | 2]", Z)?;
        let got = x.nproduct(&y)?;
        expect_eq("x ×n y", &got, &parse_super("[0 2 | 6 12 | 25;81 0 | 7 18 | 20;0 2 | 6 7 | 2]", Z)?)?;
        expect_eq("identity", &x.nproduct(&SuperMatrix::ones(x.ptype(), Z))?, &x)?;
        let other = parse_super("[0 1 2 | 3 5;9 0 1 | 3 4;7 2 3 | 1 2]", Z)?;
        expect_err("different cuts", x.nproduct(&other), |e| matches!(e, AlgebraError::TypeMismatch(_)))?;
        Ok(got.to_string())
    });

    r.case("super-zero-divisors", || {
        let x = parse_super(
            "[7 8 0 | 9 4 2;--;0 1 2 | 5 7 8;1 2 3 | 0 1 0;--;5 7 0 | 9 2 0;1 2 3 | 0 2 3;0 8 7 | 0 5 4]",
            Z,
        )?;
        let y = parse_super(
            "[0 0 9 | 0 0 0;--;7 0 0 | 0 0 0;0 0 0 | 6 0 8;--;0 0 6 | 0 0 2;0 0 0 | 6 0 0;5 0 0 | 7 0 0]",
            Z,
        )?;
        expect(x.nproduct(&y)?.base().is_zero(), "product not zero")?;
        Ok("x ×n y = 0".into())
    });

    r.case("super-inverse", || {
        let x = parse_super("[1/8 | 7 5 | 3 2 4 -1]", Q)?;
        let got = x.inverse()?;
        expect_eq("x⁻¹", &got, &parse_super("[8 | 1/7 1/5 | 1/3 1/2 1/4 -1]", Q)?)?;
        let y = parse_super("[1 0 | 5 7 2 | 1 5 7 -1 2]", Q)?;
        expect_err("zero entry", y.inverse(), |e| matches!(e, AlgebraError::NotInvertible { .. }))?;
        let u = parse_super("[1 -1 | 1;--;-1 -1 | 1]", Z)?;
        expect_eq("±1 self-inverse", &u.inverse()?, &u)?;
        Ok(got.to_string())
    });

    r.case("cube-factoring", || {
        let lin = p("[1 1 1] * x - [2 1 3]", Z)?;
        let cube = lin.mul_natural(&lin)?.mul_natural(&lin)?;
        let want = p("[1 1 1] * x^3 - [6 3 9] * x^2 + [12 3 27] * x - [8 1 27]", Z)?;
        expect_eq("((1,1,1)x - (2,1,3))³", &cube, &want)?;
        expect(cube.evaluate_natural(&m("[2 1 3]", Z)?)?.is_zero(), "p(2,1,3) ≠ 0")?;
        Ok(cube.to_string())
    });

    r.case("binomial-equations", || {
        let cube = solve_binomial(&m("[1 1 1]", Q)?, &m("[27 8 125]", Q)?, 3)?;
        expect_eq("cube roots", &cube.roots.len(), &1)?;
        expect_eq("cube root", &cube.roots[0], &m("[3 2 5]", Q)?)?;
        let sq = solve_binomial(&m("[1 1 1 1]", Q)?, &m("[4 9 25 4]", Q)?, 2)?;
        expect_eq("square roots", &sq.roots.len(), &2)?;
        expect_eq("+root", &sq.roots[0], &m("[2 3 5 2]", Q)?)?;
        expect_eq("-root", &sq.roots[1], &m("[-2 -3 -5 -2]", Q)?)?;
        let none = solve_binomial(&m("[1 1 1 1]", Q)?, &m("[-4 -9 -25 -4]", Q)?, 2)?;
        expect(none.roots.is_empty() && matches!(none.reason, Some(AlgebraError::NoRationalRoot { .. })), "imaginary roots accepted")?;
        Ok("x = ±(2,3,5,2)".into())
    });

    r.case("quadratic-equations", || {
        let j4 = m("[1 1 1 1]", Q)?;
        let four = m("[4 4 4 4]", Q)?;
        let double = solve_quadratic(&j4, &four, &four)?;
        expect_eq("coincident roots", &double.roots.len(), &1)?;
        expect_eq("root", &double.roots[0], &m("[-2 -2 -2 -2]", Q)?)?;
        let j5 = m("[1 1 1 1 1]", Q)?;
        let diff = solve_quadratic(&j5, &Matrix::zeros(shape(1, 5), Q), &m("[-4 -9 -16 -25 -81]", Q)?)?;
        expect_eq("+root", &diff.roots[0], &m("[2 3 4 5 9]", Q)?)?;
        expect_eq("-root", &diff.roots[1], &m("[-2 -3 -4 -5 -9]", Q)?)?;
        Ok("-(2,2,2,2) twice".into())
    });

    r.case("natural-monic", || {
        let q = p("[5 7 8 -4] * x^5 + [1 2 3 0] * x^3 + [7 0 1 5] * x + [8 9 0 2]", Q)?;
        let want = p("[1 1 1 1] * x^5 + [1/5 2/7 3/8 0] * x^3 + [7/5 0 1/8 -5/4] * x + [8/5 9/7 0 -1/2]", Q)?;
        let got = q.monicize_natural()?;
        expect_eq("t q", &got, &want)?;
        let bad = p("[0 3 0 0] * x^4 + [1 2 3 4] * x^3 + [2 0 0 1] * x + [1 2 0 5]", Q)?;
        expect_err("zero lead entry", bad.monicize_natural(), |e| matches!(e, AlgebraError::NotMonicizable { .. }))?;
        Ok(got.to_string())
    });

    r.case("usual-monic", || {
        let a = p("[7 0;0 8] * x^5 + [1 8;7 5] * x^4 + [0 1;2 0] * x^3 + [0 1;1 0] * x^2 + [1 0;2 5]", Q)?;
        let want = p(
            "[1 0;0 1] * x^5 + [1/7 8/7;7/8 5/8] * x^4 + [0 1/7;1/4 0] * x^3 + [0 1/7;1/8 0] * x^2 + [1/7 0;1/4 5/8]",
            Q,
        )?;
        let got = a.monicize_usual()?;
        expect_eq("A⁻¹ p", &got, &want)?;
        let singular = p("[3 0;1 0] * x^7 + [1 2;3 4] * x^2 + [1 0;0 1]", Q)?;
        expect_err("singular lead", singular.monicize_usual(), |e| *e == AlgebraError::SingularLead)?;
        Ok(got.lead().map(|l| l.to_string()).unwrap_or_default())
    });

    r.case("row-divisibility", || {
        let q = m("[5 7 2 8]", Z)?.divides(&m("[10 14 8 8]", Z)?)?;
        expect_eq("y / x", &q.map(|q| q.to_string()).unwrap_or_default(), &"[2 2 4 1]".to_string())?;
        expect_err(
            "zero divisor entry",
            m("[0 2 3 5 7 8]", Z)?.divides(&m("[5 4 6 10 21 24]", Z)?),
            |e| matches!(e, AlgebraError::ZeroDivisorEntry { .. }),
        )?;
        Ok("(2,2,4,1)".into())
    });

    r.case("prime-rows", || {
        expect(m("[3 5 11 13]", Z)?.is_prime_row(), "(3,5,11,13)")?;
        expect(m("[7 5 2 19 23 31]", Z)?.is_prime_row(), "(7,5,2,19,23,31)")?;
        expect(!m("[4 5]", Z)?.is_prime_row(), "(4,5)")?;
        Ok("prime".into())
    });

    r.case("polynomial-zero-divisors", || {
        let a = p("[3 2 0 0 0] + [6 3 0 0 0] * x + [7 0 0 0 0] * x^2 + [8 1 0 0 0] * x^4", Z)?;
        let b = p("[0 0 1 2 3] + [0 0 0 4 2] * x^2 + [0 0 0 1 4] * x^3 + [0 0 0 3 4] * x^4 + [0 0 0 5 2] * x^7", Z)?;
        expect(a.mul_natural(&b)?.is_zero(), "p q ≠ 0")?;
        Ok("p(x) q(x) = 0".into())
    });
}

fn laws(r: &mut Runner, opts: VerifyOptions) {
    let n = opts.samples.max(1);
    let small = (n / 10).max(1);
    let seed = opts.seed;

    r.case("scalar-ring-laws", move || {
        let mut rng = random::rng(seed);
        for d in [Domain::Int, Domain::Rat, Domain::Mod(12)] {
            for _ in 0..n {
                let (a, b, c) = (random::value(&mut rng, d), random::value(&mut rng, d), random::value(&mut rng, d));
                expect(d.add(&d.add(&a, &b), &c) == d.add(&a, &d.add(&b, &c)), format!("+ assoc in {d}"))?;
                expect(d.mul(&d.mul(&a, &b), &c) == d.mul(&a, &d.mul(&b, &c)), format!("× assoc in {d}"))?;
                expect(d.mul(&a, &b) == d.mul(&b, &a), format!("× comm in {d}"))?;
                expect(d.mul(&a, &d.add(&b, &c)) == d.add(&d.mul(&a, &b), &d.mul(&a, &c)), format!("distributive in {d}"))?;
            }
        }
        Ok(format!("{n} triples per domain"))
    });

    let mats = move |rng: &mut random::SeededRng| {
        let s = random::shape(rng, 5, 5);
        (random::matrix(rng, s, Q), random::matrix(rng, s, Q), random::matrix(rng, s, Q))
    };

    r.case("natural-product-laws", move || {
        let mut rng = random::rng(seed ^ 1);
        for _ in 0..n {
            let (a, b, c) = mats(&mut rng);
            expect_eq("commutative", &a.nproduct(&b)?, &b.nproduct(&a)?)?;
            expect_eq("associative", &a.nproduct(&b)?.nproduct(&c)?, &a.nproduct(&b.nproduct(&c)?)?)?;
            expect_eq("distributive", &a.nproduct(&b.add(&c)?)?, &a.nproduct(&b)?.add(&a.nproduct(&c)?)?)?;
            expect_eq("J identity", &a.nproduct(&Matrix::ones(a.shape(), Q))?, &a)?;
        }
        Ok(format!("{n} triples"))
    });

    r.case("diagonal-equivalence", move || {
        let mut rng = random::rng(seed ^ 2);
        for _ in 0..small {
            let k = rng.gen_range(1..=6);
            let a = random::diagonal(&mut rng, k, Q);
            let b = random::diagonal(&mut rng, k, Q);
            expect_eq("uprod = nprod", &a.uproduct(&b)?, &a.nproduct(&b)?)?;
        }
        Ok(format!("{small} pairs"))
    });

    let polys = move |rng: &mut random::SeededRng, d: Domain| {
        let s = random::shape(rng, 3, 3);
        (random::poly(rng, s, d, 4), random::poly(rng, s, d, 4), random::poly(rng, s, d, 4))
    };

    r.case("polynomial-ring-laws", move || {
        let mut rng = random::rng(seed ^ 3);
        for _ in 0..small {
            let (a, b, c) = polys(&mut rng, Q);
            expect_eq("commutative", &a.mul_natural(&b)?, &b.mul_natural(&a)?)?;
            expect_eq("associative", &a.mul_natural(&b)?.mul_natural(&c)?, &a.mul_natural(&b.mul_natural(&c)?)?)?;
            expect_eq("distributive", &a.mul_natural(&b.add(&c)?)?, &a.mul_natural(&b)?.add(&a.mul_natural(&c)?)?)?;
            let one = crate::matpoly::natural_one(a.shape(), Q);
            expect_eq("J identity", &a.mul_natural(&one)?, &a)?;
            expect_eq("+ associative", &a.add(&b)?.add(&c)?, &a.add(&b.add(&c)?)?)?;
        }
        Ok(format!("{small} triples"))
    });

    r.case("leibniz-rule", move || {
        let mut rng = random::rng(seed ^ 4);
        for _ in 0..small {
            let (a, b, _) = polys(&mut rng, Q);
            let lhs = a.mul_natural(&b)?.derivative();
            let rhs = a.derivative().mul_natural(&b)?.add(&a.mul_natural(&b.derivative())?)?;
            expect_eq("(pq)' = p'q + pq'", &lhs, &rhs)?;
        }
        Ok(format!("{small} pairs"))
    });

    r.case("calculus-round-trip", move || {
        let mut rng = random::rng(seed ^ 5);
        for _ in 0..small {
            let (a, _, _) = polys(&mut rng, Q);
            let c = random::matrix(&mut rng, a.shape(), Q);
            expect_eq("(∫p)' = p", &a.integrate(Some(&c))?.derivative(), &a)?;
        }
        Ok(format!("{small} polynomials"))
    });

    r.case("integer-derivative-closure", move || {
        let mut rng = random::rng(seed ^ 6);
        for _ in 0..small {
            let (a, _, _) = polys(&mut rng, Z);
            let d = a.derivative();
            expect(d.domain() == Z && d.terms().values().all(|m| m.entries().iter().all(|v| v.is_integer())), "non-integer")?;
        }
        Ok(format!("{small} polynomials"))
    });

    r.case("degree-additivity", move || {
        let mut rng = random::rng(seed ^ 7);
        let (mut additive, mut drops) = (0, 0);
        for _ in 0..small {
            let s = random::shape(&mut rng, 2, 3);
            let (da, db) = (rng.gen_range(0..4), rng.gen_range(0..4));
            let a = random::poly_of_degree(&mut rng, s, Z, da);
            let b = random::poly_of_degree(&mut rng, s, Z, db);
            let (la, lb) = (a.lead().expect("nonzero"), b.lead().expect("nonzero"));
            let prod = a.mul_natural(&b)?;
            let da = da + db;
            if la.nproduct(lb)?.is_zero() {
                drops += 1;
                expect(prod.degree().is_none_or(|d| d < da), "degree did not drop")?;
            } else {
                additive += 1;
                expect_eq("deg(pq)", &prod.degree().unwrap_or(0), &da)?;
            }
        }
        let lead = p("[1 0] * x^2 + [1 1]", Z)?;
        let other = p("[0 1] * x^3 + [1 1]", Z)?;
        expect_eq("zero-overlap leads", &lead.mul_natural(&other)?.degree().unwrap_or(0), &3)?;
        Ok(format!("{additive} additive, {drops} drops"))
    });

    r.case("usual-product-noncommutative", move || {
        let mut rng = random::rng(seed ^ 8);
        for _ in 0..small.max(50) {
            let s = shape(2, 2);
            let a = random::poly(&mut rng, s, Z, 2);
            let b = random::poly(&mut rng, s, Z, 2);
            if a.mul_usual(&b)? != b.mul_usual(&a)? {
                return Ok("witness found".into());
            }
        }
        Err(Fail("no noncommuting pair sampled".into()))
    });

    r.case("super-flattening", move || {
        let mut rng = random::rng(seed ^ 9);
        for _ in 0..n {
            let s = random::shape(&mut rng, 4, 4);
            let rc: Vec<usize> = (1..s.rows).filter(|_| rng.gen_bool(0.5)).collect();
            let cc: Vec<usize> = (1..s.cols).filter(|_| rng.gen_bool(0.5)).collect();
            let a = SuperMatrix::with_cuts(random::matrix(&mut rng, s, Q), rc.clone(), cc.clone())?;
            let b = SuperMatrix::with_cuts(random::matrix(&mut rng, s, Q), rc, cc)?;
            let prod = a.nproduct(&b)?;
            expect_eq("flattened product", prod.base(), &a.base().nproduct(b.base())?)?;
            expect_eq("flattened sum", a.add(&b)?.base(), &a.base().add(b.base())?)?;
            expect(prod.ptype() == a.ptype(), "partition changed")?;
        }
        Ok(format!("{n} pairs"))
    });
}

fn census(r: &mut Runner) {
    r.case("mask-idempotent-counts", || {
        let mut seen = 0;
        for rows in 1..=12 {
            for cols in 1..=12 / rows {
                let s = shape(rows, cols);
                let c = Carrier::masks(s, Operation::NaturalProduct)?;
                let count = idempotents_in(&c).len();
                expect_eq(&format!("masks {s}"), &BigUint::from(count), &trivial_idempotent_count(s))?;
                seen += 1;
            }
        }
        Ok(format!("{seen} shapes"))
    });

    r.case("masks-two-by-four", || {
        let c = Carrier::masks(shape(2, 4), Operation::NaturalProduct)?;
        expect_eq("count", &idempotents_in(&c).len(), &256)?;
        Ok("256".into())
    });

    r.case("mod-six-idempotent-counts", || {
        let mut seen = 0;
        for rows in 1..=4 {
            for cols in 1..=4 / rows {
                let s = shape(rows, cols);
                let c = Carrier::all_matrices(s, 6, Operation::NaturalProduct)?;
                let brute = c.elements().iter().filter(|e| e.nproduct(e).is_ok_and(|sq| &sq == *e)).count();
                let want = 4usize.pow(s.size() as u32);
                expect_eq(&format!("Zn:6 {s}"), &brute, &want)?;
                expect_eq(&format!("Zn:6 {s} library"), &idempotents_in(&c).len(), &want)?;
                seen += 1;
            }
        }
        Ok(format!("{seen} shapes"))
    });

    r.case("ideal-order-law", || {
        let mut seen = 0;
        for rows in 1..=2 {
            for cols in 1..=4 {
                let s = shape(rows, cols);
                let c = Carrier::masks(s, Operation::NaturalProduct)?;
                for x in c.elements() {
                    let want = 1usize << x.support().popcount();
                    expect_eq(&format!("|<{x}>|"), &ideal_generated(&c, x)?.cardinality(), &want)?;
                    seen += 1;
                }
            }
        }
        Ok(format!("{seen} generators"))
    });

    r.case("smarandache-units-mod-five", || {
        let c = Carrier::all_matrices(shape(1, 2), 5, Operation::NaturalProduct)?;
        let w = is_smarandache(&c)?.ok_or_else(|| Fail("none found".into()))?;
        expect_eq("order", &w.elements.len(), &16)?;
        let masks = Carrier::masks(shape(1, 2), Operation::NaturalProduct)?;
        expect(is_smarandache(&masks)?.is_none(), "masks 1x2 reported a subgroup")?;
        Ok("16".into())
    });

    r.case("direct-sum-kinds", || {
        let s = shape(2, 2);
        let full = MaskSubspace::new(SupportMask::full(s), Q);
        expect(check_sum(&[full])?.kind == SumKind::Direct, "full mask")?;
        Ok("direct".into())
    });
}
