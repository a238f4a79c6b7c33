//! Finite structure analysis: closure, associativity, identities,
//! idempotents, zero divisors, principal ideals and maximal subgroups.

pub mod subspace;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::matrix::{trivial_idempotents_bounded, Matrix, Shape};
use crate::random;
use crate::scalar::Domain;

pub use subspace::{
    check_sum, cone_positivity_check, orthogonal_space, subspace_complement, ConeReport, MaskSubspace, SumKind,
    SumReport,
};

/// Most elements a carrier may have.
pub const CARRIER_LIMIT: usize = 1 << 16;
/// Associativity is checked on every triple up to this size.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
/// Pairwise analyses (tables, zero divisors, subgroups) stop here.
pub const PAIRWISE_LIMIT: usize = 4096;
pub const DEFAULT_ASSOC_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    NaturalProduct,
    Addition,
}

impl Operation {
    pub fn apply(self, a: &Matrix, b: &Matrix) -> Matrix {
        match self {
            Operation::NaturalProduct => a.nproduct(b),
            Operation::Addition => a.add(b),
        }
        .expect("carrier members share shape and domain")
    }

    pub fn name(self) -> &'static str {
        match self {
            Operation::NaturalProduct => "nprod",
            Operation::Addition => "add",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarrierKind {
    /// Every matrix of the shape over `Zn`.
    AllMatrices { shape: Shape, modulus: u64 },
    /// Every 0/1 matrix of the shape, over `Z`.
    Masks(Shape),
    ExplicitList,
}

/// A finite set of same-shape matrices with a binary operation.
#[derive(Debug, Clone)]
pub struct Carrier {
    kind: CarrierKind,
    op: Operation,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
}

impl Carrier {
    fn build(kind: CarrierKind, op: Operation, mut elements: Vec<Matrix>) -> Carrier {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Carrier { kind, op, elements, index }
    }

    pub fn masks(shape: Shape, op: Operation) -> Result<Carrier> {
        let masks = trivial_idempotents_bounded(shape, CARRIER_LIMIT.trailing_zeros() as usize)?;
        let elements = masks.iter().map(|m| m.to_matrix(Domain::Int)).collect();
        Ok(Carrier::build(CarrierKind::Masks(shape), op, elements))
    }

    pub fn all_matrices(shape: Shape, modulus: u64, op: Operation) -> Result<Carrier> {
        let domain = Domain::modular(modulus)?;
        let size = shape.size() as u32;
        let count = modulus.checked_pow(size).filter(|&c| c <= CARRIER_LIMIT as u64).ok_or_else(|| {
            AlgebraError::TooLarge(format!("{modulus}^{size} matrices exceed the limit of {CARRIER_LIMIT}"))
        })?;
        let mut elements = Vec::with_capacity(count as usize);
        for mut code in 0..count {
            let mut vals = vec![0i64; shape.size()];
            for slot in vals.iter_mut().rev() {
                *slot = (code % modulus) as i64;
                code /= modulus;
            }
            let vals = vals.into_iter().map(|v| domain.from_i64(v).expect("residue")).collect();
            elements.push(Matrix::new(shape, domain, vals)?);
        }
        Ok(Carrier::build(CarrierKind::AllMatrices { shape, modulus }, op, elements))
    }

    /// Duplicates are dropped; members must share shape and domain.
    pub fn explicit(elements: Vec<Matrix>, op: Operation) -> Result<Carrier> {
        let first = elements.first().ok_or(AlgebraError::InvalidShape(0, 0))?;
        let (shape, domain) = (first.shape(), first.domain());
        for m in &elements {
            if m.shape() != shape {
                return Err(AlgebraError::ShapeMismatch(shape, m.shape()));
            }
            if m.domain() != domain {
                return Err(AlgebraError::DomainMismatch(domain, m.domain()));
            }
        }
        if elements.len() > CARRIER_LIMIT {
            return Err(AlgebraError::TooLarge(format!("{} elements", elements.len())));
        }
        Ok(Carrier::build(CarrierKind::ExplicitList, op, elements))
    }

    pub fn kind(&self) -> &CarrierKind {
        &self.kind
    }

    pub fn op(&self) -> Operation {
        self.op
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn apply(&self, a: usize, b: usize) -> Matrix {
        self.op.apply(&self.elements[a], &self.elements[b])
    }

    fn require_pairwise(&self) -> Result<()> {
        if self.len() > PAIRWISE_LIMIT {
            return Err(AlgebraError::TooLarge(format!(
                "{} elements; pairwise analysis stops at {PAIRWISE_LIMIT}",
                self.len()
            )));
        }
        Ok(())
    }

    /// Cayley table; `None` where the result leaves the carrier.
    fn table(&self) -> Vec<Option<usize>> {
        let n = self.len();
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t.push(self.position(&self.apply(a, b)));
            }
        }
        t
    }

    pub fn describe(&self) -> String {
        let base = match &self.kind {
            CarrierKind::AllMatrices { shape, modulus } => format!("zn:{modulus}:{shape}"),
            CarrierKind::Masks(shape) => format!("masks:{shape}"),
            CarrierKind::ExplicitList => format!("list({})", self.len()),
        };
        format!("{base}@{}", self.op.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssocMode {
    Exhaustive,
    Sampled(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupWitness {
    pub idempotent: Matrix,
    pub elements: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub carrier: String,
    pub size: usize,
    pub closed: bool,
    pub closure_witness: Option<(Matrix, Matrix)>,
    pub associative: bool,
    pub assoc_mode: AssocMode,
    pub assoc_witness: Option<(Matrix, Matrix, Matrix)>,
    pub commutative: bool,
    pub commutative_witness: Option<(Matrix, Matrix)>,
    pub identity: Option<Matrix>,
    pub idempotents: Vec<Matrix>,
    pub zero_divisor_pairs: Vec<(Matrix, Matrix)>,
    pub max_subgroups: Vec<SubgroupWitness>,
    pub smarandache: Option<SubgroupWitness>,
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { seed: 0, samples: DEFAULT_ASSOC_SAMPLES }
    }
}

pub fn analyze(carrier: &Carrier) -> Result<StructureReport> {
    analyze_with(carrier, AnalyzeOptions::default())
}

pub fn analyze_with(carrier: &Carrier, opts: AnalyzeOptions) -> Result<StructureReport> {
    carrier.require_pairwise()?;
    let n = carrier.len();
    let el = carrier.elements();
    let table = carrier.table();
    let at = |a: usize, b: usize| table[a * n + b];

    let closure_witness = (0..n * n).find(|&i| table[i].is_none()).map(|i| (el[i / n].clone(), el[i % n].clone()));

    let commutative_witness = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| carrier.apply(a, b) != carrier.apply(b, a))
        .map(|(a, b)| (el[a].clone(), el[b].clone()));

    let assoc_fails = |a: usize, b: usize, c: usize| -> bool {
        if let (Some(ab), Some(bc)) = (at(a, b), at(b, c)) {
            if let (Some(x), Some(y)) = (at(ab, c), at(a, bc)) {
                return x != y;
            }
        }
        let ab = carrier.apply(a, b);
        let bc = carrier.apply(b, c);
        carrier.op.apply(&ab, &el[c]) != carrier.op.apply(&el[a], &bc)
    };
    let (assoc_mode, assoc_witness) = if n <= EXHAUSTIVE_ASSOC_LIMIT {
        let w = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .find(|&(a, b, c)| assoc_fails(a, b, c));
        (AssocMode::Exhaustive, w)
    } else {
        let mut rng = random::rng(opts.seed);
        let w = (0..opts.samples)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            .find(|&(a, b, c)| assoc_fails(a, b, c));
        (AssocMode::Sampled(opts.samples), w)
    };

    let identity = (0..n).find(|&e| (0..n).all(|a| at(e, a) == Some(a) && at(a, e) == Some(a))).map(|e| el[e].clone());

    let idem: Vec<usize> = (0..n).filter(|&e| at(e, e) == Some(e)).collect();

    let mut zero_divisor_pairs = Vec::new();
    if carrier.op == Operation::NaturalProduct {
        for a in 0..n {
            if el[a].is_zero() {
                continue;
            }
            for b in a..n {
                if !el[b].is_zero() && carrier.apply(a, b).is_zero() {
                    zero_divisor_pairs.push((el[a].clone(), el[b].clone()));
                }
            }
        }
    }

    let max_subgroups: Vec<SubgroupWitness> = idem.iter().map(|&e| maximal_subgroup(carrier, &table, e)).collect();
    let smarandache = pick_smarandache(carrier, &table, &max_subgroups);

    Ok(StructureReport {
        carrier: carrier.describe(),
        size: n,
        closed: closure_witness.is_none(),
        closure_witness,
        associative: assoc_witness.is_none(),
        assoc_mode,
        assoc_witness: assoc_witness.map(|(a, b, c)| (el[a].clone(), el[b].clone(), el[c].clone())),
        commutative: commutative_witness.is_none(),
        commutative_witness,
        identity,
        idempotents: idem.iter().map(|&e| el[e].clone()).collect(),
        zero_divisor_pairs,
        max_subgroups,
        smarandache,
    })
}

/// Elements `a` with `ae = ea = a` that have an inverse relative to `e`.
fn maximal_subgroup(carrier: &Carrier, table: &[Option<usize>], e: usize) -> SubgroupWitness {
    let n = carrier.len();
    let at = |a: usize, b: usize| table[a * n + b];
    let local: Vec<usize> = (0..n).filter(|&a| at(a, e) == Some(a) && at(e, a) == Some(a)).collect();
    let members: Vec<usize> = local
        .iter()
        .copied()
        .filter(|&a| local.iter().any(|&b| at(a, b) == Some(e) && at(b, a) == Some(e)))
        .collect();
    let el = carrier.elements();
    SubgroupWitness { idempotent: el[e].clone(), elements: members.iter().map(|&i| el[i].clone()).collect() }
}

/// Largest proper maximal subgroup with at least two elements; if the whole
/// carrier is a group, a proper cyclic subgroup instead.
fn pick_smarandache(carrier: &Carrier, table: &[Option<usize>], groups: &[SubgroupWitness]) -> Option<SubgroupWitness> {
    let n = carrier.len();
    let proper = groups
        .iter()
        .filter(|g| g.elements.len() >= 2 && g.elements.len() < n)
        .fold(None::<&SubgroupWitness>, |best, g| match best {
            Some(b) if b.elements.len() >= g.elements.len() => Some(b),
            _ => Some(g),
        });
    if let Some(g) = proper {
        return Some(g.clone());
    }
    let whole = groups.iter().find(|g| g.elements.len() == n)?;
    let e = carrier.position(&whole.idempotent)?;
    let at = |a: usize, b: usize| table[a * n + b];
    let mut best: Option<BTreeSet<usize>> = None;
    for a in 0..n {
        let mut cyc = BTreeSet::from([e]);
        let mut p = a;
        while cyc.insert(p) {
            p = at(p, a)?;
        }
        if cyc.len() >= 2 && cyc.len() < n && best.as_ref().is_none_or(|b| cyc.len() > b.len()) {
            best = Some(cyc);
        }
    }
    let el = carrier.elements();
    best.map(|s| SubgroupWitness { idempotent: whole.idempotent.clone(), elements: s.iter().map(|&i| el[i].clone()).collect() })
}

pub fn idempotents_in(carrier: &Carrier) -> Vec<Matrix> {
    carrier
        .elements()
        .iter()
        .filter(|e| &carrier.op.apply(e, e) == *e)
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealReport {
    pub generator: Matrix,
    pub elements: Vec<Matrix>,
}

impl IdealReport {
    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }
}

/// `{x} ∪ {x·s : s ∈ C}`, the principal ideal of a commutative semigroup.
pub fn ideal_generated(carrier: &Carrier, x: &Matrix) -> Result<IdealReport> {
    if !carrier.contains(x) {
        return Err(AlgebraError::NotMember);
    }
    let mut set: BTreeSet<Matrix> = BTreeSet::from([x.clone()]);
    for s in carrier.elements() {
        set.insert(carrier.op.apply(x, s));
    }
    Ok(IdealReport { generator: x.clone(), elements: set.into_iter().collect() })
}

pub fn is_subsemigroup(carrier: &Carrier, subset: &[Matrix]) -> bool {
    let set: BTreeSet<&Matrix> = subset.iter().collect();
    !subset.is_empty()
        && subset.iter().all(|m| carrier.contains(m))
        && subset.iter().all(|a| subset.iter().all(|b| set.contains(&carrier.op.apply(a, b))))
}

pub fn is_ideal(carrier: &Carrier, subset: &[Matrix]) -> bool {
    let set: BTreeSet<&Matrix> = subset.iter().collect();
    is_subsemigroup(carrier, subset)
        && subset.iter().all(|a| {
            carrier
                .elements()
                .iter()
                .all(|s| set.contains(&carrier.op.apply(a, s)) && set.contains(&carrier.op.apply(s, a)))
        })
}

pub fn is_smarandache(carrier: &Carrier) -> Result<Option<SubgroupWitness>> {
    carrier.require_pairwise()?;
    let table = carrier.table();
    let n = carrier.len();
    let groups: Vec<SubgroupWitness> = (0..n)
        .filter(|&e| table[e * n + e] == Some(e))
        .map(|e| maximal_subgroup(carrier, &table, e))
        .collect();
    Ok(pick_smarandache(carrier, &table, &groups))
}

fn list(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(|m| Value::String(m.to_string())).collect())
}

fn group_json(g: &SubgroupWitness) -> Value {
    json!({ "idempotent": g.idempotent.to_string(), "order": g.elements.len(), "elements": list(&g.elements) })
}

impl StructureReport {
    pub fn to_json(&self) -> Value {
        let pair = |p: &Option<(Matrix, Matrix)>| p.as_ref().map(|(a, b)| json!([a.to_string(), b.to_string()]));
        json!({
            "carrier": self.carrier,
            "size": self.size,
            "closed": { "holds": self.closed, "witness": pair(&self.closure_witness) },
            "associative": {
                "holds": self.associative,
                "mode": match self.assoc_mode {
                    AssocMode::Exhaustive => "exhaustive".to_string(),
                    AssocMode::Sampled(k) => format!("sampled({k})"),
                },
                "witness": self.assoc_witness.as_ref().map(|(a, b, c)| json!([a.to_string(), b.to_string(), c.to_string()])),
            },
            "commutative": { "holds": self.commutative, "witness": pair(&self.commutative_witness) },
            "identity": self.identity.as_ref().map(|m| m.to_string()),
            "idempotents": list(&self.idempotents),
            "zero_divisor_pairs": self.zero_divisor_pairs.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect::<Vec<_>>(),
            "max_subgroups": self.max_subgroups.iter().map(group_json).collect::<Vec<_>>(),
            "smarandache": self.smarandache.as_ref().map(group_json),
        })
    }

    pub fn to_text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        let _ = writeln!(s, "carrier       {} ({} elements)", self.carrier, self.size);
        let _ = write!(s, "closed        {}", yes(self.closed));
        if let Some((a, b)) = &self.closure_witness {
            let _ = write!(s, "  witness {a} {b}");
        }
        s.push('\n');
        let mode = match self.assoc_mode {
            AssocMode::Exhaustive => "exhaustive".to_string(),
            AssocMode::Sampled(k) => format!("sampled {k}"),
        };
        let _ = write!(s, "associative   {} ({mode})", yes(self.associative));
        if let Some((a, b, c)) = &self.assoc_witness {
            let _ = write!(s, "  witness {a} {b} {c}");
        }
        s.push('\n');
        let _ = write!(s, "commutative   {}", yes(self.commutative));
        if let Some((a, b)) = &self.commutative_witness {
            let _ = write!(s, "  witness {a} {b}");
        }
        s.push('\n');
        let _ = writeln!(s, "identity      {}", self.identity.as_ref().map_or("none".to_string(), |m| m.to_string()));
        let _ = writeln!(s, "idempotents   {}", self.idempotents.len());
        let _ = writeln!(s, "zero divisors {} pairs", self.zero_divisor_pairs.len());
        let _ = writeln!(s, "subgroups     {}", self.max_subgroups.iter().map(|g| g.elements.len().to_string()).collect::<Vec<_>>().join(" "));
        match &self.smarandache {
            Some(g) => {
                let _ = writeln!(s, "smarandache   yes, order {} at {}", g.elements.len(), g.idempotent);
            }
            None => s.push_str("smarandache   no\n"),
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(r: usize, c: usize) -> Shape {
        Shape::new(r, c).unwrap()
    }

    #[test]
    fn masks_under_natural_product() {
        let c = Carrier::masks(shape(2, 2), Operation::NaturalProduct).unwrap();
        let r = analyze(&c).unwrap();
        assert!(r.closed && r.associative && r.commutative);
        assert_eq!(r.assoc_mode, AssocMode::Exhaustive);
        assert_eq!(r.identity, Some(Matrix::ones(shape(2, 2), Domain::Int)));
        assert_eq!(r.idempotents.len(), 16);
    }

    #[test]
    fn masks_not_closed_under_addition() {
        let c = Carrier::masks(shape(2, 2), Operation::Addition).unwrap();
        let r = analyze(&c).unwrap();
        assert!(!r.closed);
        let (a, b) = r.closure_witness.unwrap();
        assert!(!c.contains(&a.add(&b).unwrap()));
    }

    #[test]
    fn zn3_row_pairs() {
        let c = Carrier::all_matrices(shape(1, 2), 3, Operation::NaturalProduct).unwrap();
        let r = analyze(&c).unwrap();
        assert!(r.closed && r.associative && r.commutative && r.identity.is_some());
        let m = |a, b| Matrix::row(Domain::Mod(3), &[a, b]).unwrap();
        assert_eq!(r.idempotents, vec![m(0, 0), m(0, 1), m(1, 0), m(1, 1)]);
    }

    #[test]
    fn sign_vectors_form_a_group() {
        let mut els = Vec::new();
        for a in [-1, 1] {
            for b in [-1, 1] {
                for c in [-1, 1] {
                    els.push(Matrix::from_ints(Domain::Int, &[&[a], &[b], &[c]]).unwrap());
                }
            }
        }
        let c = Carrier::explicit(els, Operation::NaturalProduct).unwrap();
        let r = analyze(&c).unwrap();
        assert_eq!(r.idempotents.len(), 1);
        assert_eq!(r.max_subgroups[0].elements.len(), 8);
        // a proper cyclic subgroup of order 2
        assert_eq!(r.smarandache.unwrap().elements.len(), 2);
    }

    #[test]
    fn idempotents_mod_six() {
        let c = Carrier::all_matrices(shape(1, 1), 6, Operation::NaturalProduct).unwrap();
        let got: Vec<String> = idempotents_in(&c).iter().map(|m| m.to_string()).collect();
        assert_eq!(got, vec!["[0]", "[1]", "[3]", "[4]"]);
        let c = Carrier::all_matrices(shape(1, 2), 6, Operation::NaturalProduct).unwrap();
        assert_eq!(idempotents_in(&c).len(), 16);
    }

    #[test]
    fn principal_ideals_in_masks() {
        let c = Carrier::masks(shape(2, 4), Operation::NaturalProduct).unwrap();
        let x = Matrix::from_ints(Domain::Int, &[&[1, 1, 1, 1], &[0, 0, 0, 0]]).unwrap();
        assert_eq!(ideal_generated(&c, &x).unwrap().cardinality(), 16);
        let z = Matrix::zeros(shape(2, 4), Domain::Int);
        assert_eq!(ideal_generated(&c, &z).unwrap().elements, vec![z.clone()]);
        let j = Matrix::ones(shape(2, 4), Domain::Int);
        assert_eq!(ideal_generated(&c, &j).unwrap().cardinality(), 256);
        let y = Matrix::from_ints(Domain::Int, &[&[1, 1, 1, 0], &[1, 1, 1, 0]]).unwrap();
        assert_eq!(ideal_generated(&c, &y).unwrap().cardinality(), 64);
        let outside = Matrix::from_ints(Domain::Int, &[&[2, 0, 0, 0], &[0, 0, 0, 0]]).unwrap();
        assert_eq!(ideal_generated(&c, &outside), Err(AlgebraError::NotMember));
    }

    #[test]
    fn smarandache_examples() {
        let col = |v: i64| Matrix::from_ints(Domain::Int, &[&[v], &[v], &[v]]).unwrap();
        let c = Carrier::explicit(vec![col(0), col(1), col(-1)], Operation::NaturalProduct).unwrap();
        let w = is_smarandache(&c).unwrap().unwrap();
        assert_eq!(w.elements, vec![col(-1), col(1)]);

        let c = Carrier::all_matrices(shape(1, 2), 5, Operation::NaturalProduct).unwrap();
        let w = is_smarandache(&c).unwrap().unwrap();
        assert_eq!(w.elements.len(), 16);
        assert!(w.elements.iter().all(|m| m.entries().iter().all(|v| !num_traits::Zero::is_zero(v))));

        let c = Carrier::masks(shape(1, 2), Operation::NaturalProduct).unwrap();
        assert_eq!(is_smarandache(&c).unwrap(), None);
    }

    #[test]
    fn ideals_versus_subsemigroups() {
        let c = Carrier::masks(shape(1, 2), Operation::NaturalProduct).unwrap();
        let j = Matrix::ones(shape(1, 2), Domain::Int);
        assert!(is_subsemigroup(&c, std::slice::from_ref(&j)));
        assert!(!is_ideal(&c, std::slice::from_ref(&j)));
        let ideal = ideal_generated(&c, &j).unwrap().elements;
        assert!(is_ideal(&c, &ideal));
    }

    #[test]
    fn sampled_associativity_for_large_carriers() {
        let c = Carrier::masks(shape(1, 7), Operation::NaturalProduct).unwrap();
        let r = analyze_with(&c, AnalyzeOptions { seed: 3, samples: 500 }).unwrap();
        assert_eq!(r.assoc_mode, AssocMode::Sampled(500));
        assert!(r.associative);
        assert_eq!(r.to_json(), analyze_with(&c, AnalyzeOptions { seed: 3, samples: 500 }).unwrap().to_json());
    }

    #[test]
    fn carrier_limits() {
        assert!(matches!(Carrier::all_matrices(shape(3, 3), 5, Operation::NaturalProduct), Err(AlgebraError::TooLarge(_))));
        assert!(matches!(Carrier::masks(shape(5, 5), Operation::NaturalProduct), Err(AlgebraError::TooLarge(_))));
    }
}
