//! Exhaustive enumeration and exact counting.
//!
//! Everything here is exact: counts are big integers, automorphism sums are
//! big rationals, and no floating point appears anywhere. Enumeration walks
//! every valid `v1`-rooted code in token order and keeps exactly the codes
//! that are canonical for their tree, so the stream is deduplicated and
//! sorted by construction. A guard refuses enumerations whose exact size
//! exceeds a caller-supplied cap.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::code::{
    canonical_code, decode, shape_code_with_multiplicity, CodeString, ShapeCode, Token,
};
use crate::moves::{elementary_move, Direction};
use crate::parity::invariant;
use crate::tree::{Color, Passport, PlaneTree};

/// Exact non-negative count.
pub type BigCount = BigUint;

/// Exact rational, used for automorphism sums.
pub type ExactRational = BigRational;

/// Default enumeration guard: refuse runs larger than a million trees.
pub const DEFAULT_MAX_TREES: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("need at least one vertex of each colour, got n={n}, m={m}")]
    InvalidDimensions { n: usize, m: usize },
    #[error("passport {passport} does not fit n={n}, m={m}")]
    InconsistentPassport { n: usize, m: usize, passport: String },
    #[error("an even vertex count is required, got n+m = {0}")]
    OddVertexCount(usize),
    #[error("{total} trees exceed the enumeration guard of {max}")]
    ResourceLimit { total: BigCount, max: u64 },
}

/// Exact factorial.
pub fn factorial(k: usize) -> BigCount {
    let mut acc = BigUint::from(1u32);
    for i in 2..=k {
        acc *= BigUint::from(i);
    }
    acc
}

/// The number of plane labelled trees with `n` white and `m` black vertices:
/// `((n + m - 2)!)^2 / ((n - 1)! (m - 1)!)`.
pub fn count_total(n: usize, m: usize) -> Result<BigCount, CensusError> {
    if n == 0 || m == 0 {
        return Err(CensusError::InvalidDimensions { n, m });
    }
    let f = factorial(n + m - 2);
    Ok(&f * &f / (factorial(n - 1) * factorial(m - 1)))
}

fn check_passport_dims(n: usize, m: usize, passport: &Passport) -> Result<(), CensusError> {
    if passport.white_degrees().len() != n || passport.black_degrees().len() != m {
        return Err(CensusError::InconsistentPassport {
            n,
            m,
            passport: passport.to_string(),
        });
    }
    Ok(())
}

/// The number of plane labelled `(n, m)`-trees with the given passport:
/// `n! m! (n-1)! (m-1)!` divided by the product of the dual-passport
/// multiplicity factorials.
pub fn count_passport(n: usize, m: usize, passport: &Passport) -> Result<BigCount, CensusError> {
    if n == 0 || m == 0 {
        return Err(CensusError::InvalidDimensions { n, m });
    }
    check_passport_dims(n, m, passport)?;
    let numerator = factorial(n) * factorial(m) * factorial(n - 1) * factorial(m - 1);
    Ok(numerator / dual_factorial_product(passport))
}

fn dual_factorial_product(passport: &Passport) -> BigUint {
    let dual = passport.dual();
    let mut product = BigUint::from(1u32);
    for &mult in dual
        .white_multiplicities()
        .values()
        .chain(dual.black_multiplicities().values())
    {
        product *= factorial(mult);
    }
    product
}

fn guard(n: usize, m: usize, max_trees: u64) -> Result<BigCount, CensusError> {
    let total = count_total(n, m)?;
    if total > BigUint::from(max_trees) {
        return Err(CensusError::ResourceLimit { total, max: max_trees });
    }
    Ok(total)
}

/// Depth-first generator of every valid `v1`-rooted code on the label sets
/// `v1..=vn`, `u1..=um`, visited in token order.
struct CodeGen<'f> {
    white_cap: usize,
    black_cap: usize,
    tokens: Vec<Token>,
    open: Vec<Color>,
    white_used: Vec<bool>,
    black_used: Vec<bool>,
    white_left: usize,
    black_left: usize,
    visit: &'f mut dyn FnMut(&[Token]) -> ControlFlow<()>,
}

impl CodeGen<'_> {
    fn mark(&mut self, color: Color, index: usize, used: bool) {
        match color {
            Color::White => {
                self.white_used[index] = used;
                if used {
                    self.white_left -= 1;
                } else {
                    self.white_left += 1;
                }
            }
            Color::Black => {
                self.black_used[index] = used;
                if used {
                    self.black_left -= 1;
                } else {
                    self.black_left += 1;
                }
            }
        }
    }

    fn run(&mut self) -> ControlFlow<()> {
        let Some(&top) = self.open.last() else {
            return (self.visit)(&self.tokens);
        };
        let child_color = top.opposite();
        let cap = match child_color {
            Color::White => self.white_cap,
            Color::Black => self.black_cap,
        };
        for index in 1..=cap {
            let used = match child_color {
                Color::White => self.white_used[index],
                Color::Black => self.black_used[index],
            };
            if used {
                continue;
            }
            self.mark(child_color, index, true);
            self.open.push(child_color);
            self.tokens.push(match child_color {
                Color::White => Token::White(index),
                Color::Black => Token::Black(index),
            });
            self.run()?;
            self.tokens.pop();
            self.open.pop();
            self.mark(child_color, index, false);
        }
        // Closing is legal unless it strands unused labels: the root may
        // close only when everything is used, and popping down to the bare
        // white root is a dead end if white labels remain but no black ones.
        let can_close = match self.open.len() {
            1 => self.white_left == 0 && self.black_left == 0,
            2 => !(self.white_left > 0 && self.black_left == 0),
            _ => true,
        };
        if can_close {
            self.tokens.push(Token::Close);
            let popped = self.open.pop().expect("stack is non-empty");
            self.run()?;
            self.open.push(popped);
            self.tokens.pop();
        }
        ControlFlow::Continue(())
    }
}

/// A rooted code is canonical when no cyclic rotation of the root's child
/// blocks (the other root-edge choices for the same tree) compares smaller.
fn is_canonical_rooted(tokens: &[Token]) -> bool {
    let inner = &tokens[1..tokens.len() - 1];
    let mut starts = Vec::new();
    let mut depth = 0i64;
    for (k, tok) in inner.iter().enumerate() {
        if depth == 0 {
            starts.push(k);
        }
        depth += if tok.is_label() { 1 } else { -1 };
    }
    if starts.len() <= 1 {
        return true;
    }
    for &s in &starts[1..] {
        let rotated = inner[s..].iter().chain(inner[..s].iter());
        if rotated.lt(inner.iter()) {
            return false;
        }
    }
    true
}

/// Visits every plane labelled `(n, m)`-tree exactly once, in sorted
/// canonical-code order, paired with its canonical code. Returns the number
/// of trees visited (the full count unless the visitor breaks early).
pub fn for_each_tree(
    n: usize,
    m: usize,
    max_trees: u64,
    mut f: impl FnMut(&PlaneTree, &CodeString) -> ControlFlow<()>,
) -> Result<u64, CensusError> {
    guard(n, m, max_trees)?;
    let mut count = 0u64;
    let mut visit = |tokens: &[Token]| -> ControlFlow<()> {
        if !is_canonical_rooted(tokens) {
            return ControlFlow::Continue(());
        }
        let code =
            CodeString::from_tokens(tokens.to_vec()).expect("generator emits valid codes");
        let (tree, _) = decode(&code).expect("generator emits decodable codes");
        count += 1;
        f(&tree, &code)
    };
    let mut white_used = vec![false; n + 1];
    white_used[1] = true;
    let mut gen = CodeGen {
        white_cap: n,
        black_cap: m,
        tokens: vec![Token::White(1)],
        open: vec![Color::White],
        white_used,
        black_used: vec![false; m + 1],
        white_left: n - 1,
        black_left: m,
        visit: &mut visit,
    };
    let _ = gen.run();
    drop(gen);
    Ok(count)
}

/// Materialises the full enumeration in sorted canonical-code order.
pub fn enumerate_all(n: usize, m: usize, max_trees: u64) -> Result<Vec<PlaneTree>, CensusError> {
    let mut trees = Vec::new();
    for_each_tree(n, m, max_trees, |tree, _| {
        trees.push(tree.clone());
        ControlFlow::Continue(())
    })?;
    Ok(trees)
}

/// Order of the colour-preserving plane automorphism group: the number of
/// white darts whose rooted shape code equals the canonical one (the group
/// acts freely on white darts).
pub fn aut_order(tree: &PlaneTree) -> usize {
    shape_code_with_multiplicity(tree).1
}

/// One unlabelled plane tree, its automorphism order, and its passport.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeRecord {
    pub shape: ShapeCode,
    pub aut_order: usize,
    pub passport: Passport,
}

/// All distinct unlabelled `(n, m)`-shapes, obtained by projecting the
/// labelled enumeration through the shape code.
pub fn shapes(n: usize, m: usize, max_trees: u64) -> Result<Vec<ShapeRecord>, CensusError> {
    let mut map: BTreeMap<ShapeCode, ShapeRecord> = BTreeMap::new();
    for_each_tree(n, m, max_trees, |tree, _| {
        let (shape, mult) = shape_code_with_multiplicity(tree);
        map.entry(shape.clone()).or_insert_with(|| ShapeRecord {
            shape,
            aut_order: mult,
            passport: tree.passport(),
        });
        ControlFlow::Continue(())
    })?;
    Ok(map.into_values().collect())
}

/// Both sides of the automorphism identity for one passport.
#[derive(Clone, Debug, PartialEq)]
pub struct GjCheck {
    /// Sum of `1 / aut_order` over the distinct shapes with the passport.
    pub lhs: ExactRational,
    /// `(n-1)! (m-1)!` over the product of dual-passport factorials.
    pub rhs: ExactRational,
    pub equal: bool,
}

pub(crate) fn gj_rhs(passport: &Passport) -> ExactRational {
    let n = passport.white_degrees().len();
    let m = passport.black_degrees().len();
    let numerator = factorial(n - 1) * factorial(m - 1);
    BigRational::new(
        BigInt::from(numerator),
        BigInt::from(dual_factorial_product(passport)),
    )
}

pub(crate) fn gj_from_shapes(records: &[ShapeRecord], passport: &Passport) -> GjCheck {
    let mut lhs: BigRational = Zero::zero();
    for record in records.iter().filter(|r| &r.passport == passport) {
        lhs += BigRational::new(BigInt::from(1), BigInt::from(record.aut_order));
    }
    let rhs = gj_rhs(passport);
    let equal = lhs == rhs;
    GjCheck { lhs, rhs, equal }
}

/// Compares the enumerated automorphism sum against its closed form for one
/// passport.
pub fn gj_check(
    n: usize,
    m: usize,
    passport: &Passport,
    max_trees: u64,
) -> Result<GjCheck, CensusError> {
    if n == 0 || m == 0 {
        return Err(CensusError::InvalidDimensions { n, m });
    }
    check_passport_dims(n, m, passport)?;
    let records = shapes(n, m, max_trees)?;
    Ok(gj_from_shapes(&records, passport))
}

/// Exact even/odd and per-passport counts over a full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub m: usize,
    pub total: BigCount,
    pub even_count: BigCount,
    pub odd_count: BigCount,
    pub per_passport: BTreeMap<Passport, BigCount>,
}

impl CensusReport {
    pub fn to_json(&self) -> serde_json::Value {
        let per_passport: BTreeMap<String, String> = self
            .per_passport
            .iter()
            .map(|(p, c)| (p.to_string(), c.to_string()))
            .collect();
        serde_json::json!({
            "n": self.n,
            "m": self.m,
            "total": self.total.to_string(),
            "even": self.even_count.to_string(),
            "odd": self.odd_count.to_string(),
            "per_passport": per_passport,
        })
    }
}

/// Counts even and odd trees, and trees per passport, over all
/// `(n, m)`-trees. Requires an even vertex count.
pub fn parity_census(n: usize, m: usize, max_trees: u64) -> Result<CensusReport, CensusError> {
    if (n + m) % 2 != 0 {
        return Err(CensusError::OddVertexCount(n + m));
    }
    let mut even = 0u64;
    let mut odd = 0u64;
    let mut per_passport: BTreeMap<Passport, u64> = BTreeMap::new();
    let total = for_each_tree(n, m, max_trees, |tree, _| {
        match invariant(tree).expect("vertex count is even") {
            0 => even += 1,
            _ => odd += 1,
        }
        *per_passport.entry(tree.passport()).or_insert(0) += 1;
        ControlFlow::Continue(())
    })?;
    Ok(CensusReport {
        n,
        m,
        total: BigUint::from(total),
        even_count: BigUint::from(even),
        odd_count: BigUint::from(odd),
        per_passport: per_passport
            .into_iter()
            .map(|(p, c)| (p, BigUint::from(c)))
            .collect(),
    })
}

/// Summary of the elementary-movement graph on all `(n, m)`-trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MovementGraphSummary {
    pub n: usize,
    pub m: usize,
    pub nodes: u64,
    pub edges: u64,
    /// True when every movement edge joins an even tree to an odd tree.
    pub bipartite: bool,
    pub components: u64,
    pub even_class: u64,
    pub odd_class: u64,
}

/// Builds the graph whose nodes are all `(n, m)`-trees and whose edges are
/// elementary movements (every leaf, both directions), then checks that the
/// parity invariant two-colours it.
pub fn movement_graph(
    n: usize,
    m: usize,
    max_trees: u64,
) -> Result<MovementGraphSummary, CensusError> {
    if (n + m) % 2 != 0 {
        return Err(CensusError::OddVertexCount(n + m));
    }
    let mut trees: Vec<PlaneTree> = Vec::new();
    let mut index: BTreeMap<CodeString, usize> = BTreeMap::new();
    for_each_tree(n, m, max_trees, |tree, code| {
        index.insert(code.clone(), trees.len());
        trees.push(tree.clone());
        ControlFlow::Continue(())
    })?;
    let parities: Vec<u8> = trees
        .iter()
        .map(|t| invariant(t).expect("vertex count is even"))
        .collect();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, tree) in trees.iter().enumerate() {
        for leaf in tree.leaves() {
            for direction in [Direction::Ccw, Direction::Cw] {
                let outcome =
                    elementary_move(tree, leaf, direction).expect("leaves of the tree move");
                if &outcome.tree == tree {
                    continue;
                }
                let j = index[&canonical_code(&outcome.tree)];
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    let bipartite = edges.iter().all(|&(a, b)| parities[a] != parities[b]);
    let components = component_count(trees.len(), &edges);
    Ok(MovementGraphSummary {
        n,
        m,
        nodes: trees.len() as u64,
        edges: edges.len() as u64,
        bipartite,
        components: components as u64,
        even_class: parities.iter().filter(|&&p| p == 0).count() as u64,
        odd_class: parities.iter().filter(|&&p| p == 1).count() as u64,
    })
}

fn component_count(nodes: usize, edges: &BTreeSet<(usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    (0..nodes).filter(|&x| find(&mut parent, x) == x).count()
}

/// Draws one tree uniformly at random by indexing into the deterministic
/// enumeration. The same `(n, m, seed)` always yields the same tree.
pub fn sample_random(
    n: usize,
    m: usize,
    seed: u64,
    max_trees: u64,
) -> Result<PlaneTree, CensusError> {
    let total = guard(n, m, max_trees)?;
    let total_u64 = u64::try_from(&total).expect("the guard caps the total");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(0..total_u64);
    let mut seen = 0u64;
    let mut picked: Option<PlaneTree> = None;
    for_each_tree(n, m, max_trees, |tree, _| {
        if seen == target {
            picked = Some(tree.clone());
            return ControlFlow::Break(());
        }
        seen += 1;
        ControlFlow::Continue(())
    })?;
    Ok(picked.expect("the target index is below the enumeration length"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::lex;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn count_total_values() {
        assert_eq!(count_total(1, 1).unwrap(), big(1));
        assert_eq!(count_total(2, 2).unwrap(), big(4));
        assert_eq!(count_total(3, 3).unwrap(), big(144));
        assert_eq!(count_total(2, 3).unwrap(), big(18));
        assert_eq!(count_total(1, 3).unwrap(), big(2));
        assert!(matches!(
            count_total(0, 3),
            Err(CensusError::InvalidDimensions { .. })
        ));
    }

    #[test]
    fn count_passport_values() {
        let p = "3,1|2,1,1".parse().unwrap();
        assert_eq!(count_passport(2, 3, &p).unwrap(), big(12));
        let q = "2,2|2,1,1".parse().unwrap();
        assert_eq!(count_passport(2, 3, &q).unwrap(), big(6));
        let single = "1|1".parse().unwrap();
        assert_eq!(count_passport(1, 1, &single).unwrap(), big(1));
        assert!(matches!(
            count_passport(3, 3, &p),
            Err(CensusError::InconsistentPassport { .. })
        ));
    }

    #[test]
    fn enumerate_small_sets_exactly() {
        let codes = |n, m| -> Vec<String> {
            let mut out = Vec::new();
            for_each_tree(n, m, DEFAULT_MAX_TREES, |_, code| {
                out.push(code.to_string());
                ControlFlow::Continue(())
            })
            .unwrap();
            out
        };
        assert_eq!(codes(1, 1), vec!["v1u1))"]);
        assert_eq!(codes(1, 3), vec!["v1u1)u2)u3))", "v1u1)u3)u2))"]);
        assert_eq!(
            codes(2, 2),
            vec![
                "v1u1v2u2))))",
                "v1u1v2))u2))",
                "v1u1)u2v2)))",
                "v1u2v2u1))))",
            ]
        );
    }

    #[test]
    fn enumeration_is_sorted_and_collision_free() {
        let mut codes = Vec::new();
        for_each_tree(3, 2, DEFAULT_MAX_TREES, |_, code| {
            codes.push(code.clone());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(codes.len() as u64, 18);
        let set: BTreeSet<_> = codes.iter().cloned().collect();
        assert_eq!(set.len(), codes.len());
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted);
    }

    #[test]
    fn enumeration_matches_formula_on_samples() {
        for (n, m) in [(1, 1), (1, 4), (2, 3), (3, 3), (2, 4)] {
            let trees = enumerate_all(n, m, DEFAULT_MAX_TREES).unwrap();
            assert_eq!(big(trees.len() as u64), count_total(n, m).unwrap(), "({n},{m})");
        }
    }

    #[test]
    fn resource_guard_refuses_large_runs() {
        assert!(matches!(
            enumerate_all(5, 5, DEFAULT_MAX_TREES),
            Err(CensusError::ResourceLimit { .. })
        ));
        assert!(matches!(
            enumerate_all(2, 2, 3),
            Err(CensusError::ResourceLimit { .. })
        ));
    }

    #[test]
    fn aut_order_examples() {
        let single = decode(&lex("v1u1))").unwrap()).unwrap().0;
        assert_eq!(aut_order(&single), 1);
        // White-centred stars: all rotations are equivalent.
        let star = decode(&lex("v1u1)u2)u3))").unwrap()).unwrap().0;
        assert_eq!(aut_order(&star), 3);
        let path5 = decode(&lex("v1u1)u2v2u3))))").unwrap()).unwrap().0;
        assert_eq!(aut_order(&path5), 2);
    }

    #[test]
    fn gj_check_examples() {
        let one = BigRational::new(BigInt::from(1), BigInt::from(1));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = "1|1".parse().unwrap();
        let check = gj_check(1, 1, &p, DEFAULT_MAX_TREES).unwrap();
        assert!(check.equal);
        assert_eq!(check.lhs, one);
        let p = "2,2|2,1,1".parse().unwrap();
        let check = gj_check(2, 3, &p, DEFAULT_MAX_TREES).unwrap();
        assert!(check.equal);
        assert_eq!(check.lhs, half);
        // White-centred star: a single shape with aut order m.
        for m in 2..=5 {
            let p = Passport::new(vec![m], vec![1; m]).unwrap();
            let check = gj_check(1, m, &p, DEFAULT_MAX_TREES).unwrap();
            assert!(check.equal);
            assert_eq!(
                check.lhs,
                BigRational::new(BigInt::from(1), BigInt::from(m))
            );
        }
    }

    #[test]
    fn parity_census_values() {
        let report = parity_census(1, 1, DEFAULT_MAX_TREES).unwrap();
        assert_eq!((report.total, report.even_count, report.odd_count), (big(1), big(1), big(0)));
        let report = parity_census(2, 2, DEFAULT_MAX_TREES).unwrap();
        assert_eq!((report.total, report.even_count, report.odd_count), (big(4), big(2), big(2)));
        let report = parity_census(1, 3, DEFAULT_MAX_TREES).unwrap();
        assert_eq!((report.total, report.even_count, report.odd_count), (big(2), big(1), big(1)));
        assert!(matches!(
            parity_census(1, 2, DEFAULT_MAX_TREES),
            Err(CensusError::OddVertexCount(3))
        ));
    }

    #[test]
    fn per_passport_totals_sum_to_the_census() {
        let report = parity_census(3, 3, DEFAULT_MAX_TREES).unwrap();
        let sum: BigUint = report.per_passport.values().sum();
        assert_eq!(sum, report.total);
        for (passport, count) in &report.per_passport {
            assert_eq!(count, &count_passport(3, 3, passport).unwrap());
        }
    }

    #[test]
    fn movement_graph_summaries() {
        let g = movement_graph(1, 1, DEFAULT_MAX_TREES).unwrap();
        assert_eq!((g.nodes, g.edges, g.components), (1, 0, 1));
        assert!(g.bipartite);
        let g = movement_graph(1, 3, DEFAULT_MAX_TREES).unwrap();
        assert_eq!((g.nodes, g.edges), (2, 1));
        assert!(g.bipartite);
        assert_eq!((g.even_class, g.odd_class), (1, 1));
        let g = movement_graph(2, 2, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(g.nodes, 4);
        assert!(g.bipartite);
        assert_eq!((g.even_class, g.odd_class), (2, 2));
    }

    #[test]
    fn sampling_is_deterministic_and_in_range() {
        let a = sample_random(2, 2, 42, DEFAULT_MAX_TREES).unwrap();
        let b = sample_random(2, 2, 42, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(a, b);
        let single = sample_random(1, 1, 7, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(single.vertex_count(), 2);
    }

    #[test]
    fn fixed_degree_assignments_are_equinumerous() {
        // Trees sharing an exact degree function number (n-1)! (m-1)!.
        let expected = 2u64; // (2-1)! * (3-1)!
        let mut groups: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for tree in enumerate_all(2, 3, DEFAULT_MAX_TREES).unwrap() {
            let degrees: Vec<usize> = tree.vertices().map(|v| tree.degree(v)).collect();
            *groups.entry(degrees).or_insert(0) += 1;
        }
        assert_eq!(groups.len(), 9);
        assert!(groups.values().all(|&count| count == expected));
    }

    #[test]
    fn white_dart_count_is_a_multiple_of_the_aut_order() {
        for tree in enumerate_all(2, 3, DEFAULT_MAX_TREES).unwrap() {
            let darts: usize = tree.white_vertices().map(|v| tree.degree(v)).sum();
            assert_eq!(darts % aut_order(&tree), 0);
        }
    }
}
