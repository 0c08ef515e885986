//! Steiner systems S(2, r, n): constructions, a first-principles verifier,
//! and an independent brute-force search used as the oracle for the
//! constructions.
//!
//! A verified system has n points, blocks of size r, and every unordered
//! point pair in exactly one block; the replication number k = (n-1)/(r-1)
//! and block count b = nk/r follow. The constructions cover all pairs
//! (r = 2), triple systems for n = 1, 3 (mod 6) via the Bose and Skolem
//! quasigroup constructions, and projective/affine planes over GF(q).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FiniteField;

/// A block design candidate: n points, blocks of size r.
///
/// Construction enforces the structural shape (block size, range,
/// distinctness); whether the pair-coverage property holds is the
/// verifier's business, so broken designs can be represented and reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    n: usize,
    r: usize,
    blocks: Vec<Vec<usize>>,
}

impl SteinerSystem {
    /// Builds a system candidate, sorting each block and the block list.
    pub fn new(n: usize, r: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::input("block size r must be at least 2"));
        }
        let mut blocks = blocks;
        for (i, block) in blocks.iter_mut().enumerate() {
            if block.len() != r {
                return Err(Error::input(format!(
                    "block {i} has {} points, expected {r}",
                    block.len()
                )));
            }
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("block {i} repeats a point")));
            }
            if block.iter().any(|&x| x >= n) {
                return Err(Error::input(format!(
                    "block {i} references a point outside 0..{n}"
                )));
            }
        }
        blocks.sort();
        Ok(SteinerSystem { n, r, blocks })
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn block_size(&self) -> usize {
        self.r
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Replication number (n - 1)/(r - 1) when it is an integer.
    pub fn replication(&self) -> Option<usize> {
        let (n, r) = (self.n, self.r);
        ((n - 1) % (r - 1) == 0).then(|| (n - 1) / (r - 1))
    }
}

/// First verification failure, in pair-scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SteinerViolation {
    /// The pair {u, v} lies in no block.
    PairUncovered { u: usize, v: usize },
    /// The pair {u, v} lies in `count` > 1 blocks.
    PairOvercovered { u: usize, v: usize, count: usize },
    /// Point replication is not the uniform k = (n-1)/(r-1).
    ReplicationMismatch {
        point: usize,
        count: usize,
        expected: usize,
    },
    /// Block count disagrees with b = nk/r.
    BlockCountMismatch { found: usize, expected: usize },
}

impl std::fmt::Display for SteinerViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SteinerViolation::PairUncovered { u, v } => {
                write!(f, "pair {{{u}, {v}}} is covered by no block")
            }
            SteinerViolation::PairOvercovered { u, v, count } => {
                write!(f, "pair {{{u}, {v}}} is covered by {count} blocks")
            }
            SteinerViolation::ReplicationMismatch {
                point,
                count,
                expected,
            } => write!(
                f,
                "point {point} lies in {count} blocks, expected {expected}"
            ),
            SteinerViolation::BlockCountMismatch { found, expected } => {
                write!(f, "{found} blocks, expected {expected}")
            }
        }
    }
}

/// Verification report: valid, or the first violation found.
#[derive(Debug, Clone)]
pub struct SteinerReport {
    pub violation: Option<SteinerViolation>,
}

impl SteinerReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the pair-coverage property directly, pair by pair, then the
/// replication and block-count arithmetic.
pub fn verify_steiner(s: &SteinerSystem) -> SteinerReport {
    let n = s.point_count();
    let mut pair_count = vec![0usize; n * n];
    let mut point_count = vec![0usize; n];
    for block in s.blocks() {
        for (i, &u) in block.iter().enumerate() {
            point_count[u] += 1;
            for &v in &block[i + 1..] {
                pair_count[u * n + v] += 1;
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            match pair_count[u * n + v] {
                1 => {}
                0 => {
                    return SteinerReport {
                        violation: Some(SteinerViolation::PairUncovered { u, v }),
                    }
                }
                count => {
                    return SteinerReport {
                        violation: Some(SteinerViolation::PairOvercovered { u, v, count }),
                    }
                }
            }
        }
    }
    // With every pair covered exactly once these are forced, but they are
    // part of the contract, so check them from scratch.
    let k = match s.replication() {
        Some(k) => k,
        None => {
            return SteinerReport {
                violation: Some(SteinerViolation::BlockCountMismatch {
                    found: s.block_count(),
                    expected: 0,
                }),
            }
        }
    };
    for (point, &count) in point_count.iter().enumerate() {
        if count != k {
            return SteinerReport {
                violation: Some(SteinerViolation::ReplicationMismatch {
                    point,
                    count,
                    expected: k,
                }),
            };
        }
    }
    let expected_blocks = n * k / s.block_size();
    if s.block_count() != expected_blocks || (n * k) % s.block_size() != 0 {
        return SteinerReport {
            violation: Some(SteinerViolation::BlockCountMismatch {
                found: s.block_count(),
                expected: expected_blocks,
            }),
        };
    }
    SteinerReport { violation: None }
}

/// S(2, 2, n): every pair is its own block.
pub fn pairs_system(n: usize) -> Result<SteinerSystem> {
    if n < 2 {
        return Err(Error::input("pairs system needs at least 2 points"));
    }
    let blocks = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| vec![u, v]))
        .collect();
    SteinerSystem::new(n, 2, blocks)
}

/// Bose triple system S(2, 3, n) for n = 6t + 3: points are
/// Z_{2t+1} x {0, 1, 2} with the idempotent commutative quasigroup
/// i ∘ j = (t + 1)(i + j) mod (2t + 1).
pub fn bose_triple_system(n: usize) -> Result<SteinerSystem> {
    if n < 9 || n % 6 != 3 {
        return Err(Error::input(format!(
            "Bose construction needs n >= 9 with n = 3 (mod 6), got {n}"
        )));
    }
    let t = (n - 3) / 6;
    let m = 2 * t + 1;
    let point = |i: usize, level: usize| level * m + i;
    let op = |i: usize, j: usize| (t + 1) * (i + j) % m;

    let mut blocks = Vec::new();
    for i in 0..m {
        blocks.push(vec![point(i, 0), point(i, 1), point(i, 2)]);
    }
    for level in 0..3 {
        for i in 0..m {
            for j in i + 1..m {
                blocks.push(vec![
                    point(i, level),
                    point(j, level),
                    point(op(i, j), (level + 1) % 3),
                ]);
            }
        }
    }
    SteinerSystem::new(n, 3, blocks)
}

/// Skolem triple system S(2, 3, n) for n = 6t + 1: points are
/// Z_{2t} x {0, 1, 2} plus one extra point, over the half-idempotent
/// commutative quasigroup i ∘ j = rho((i + j) mod 2t) with rho(2x) = x
/// and rho(2x + 1) = t + x.
pub fn skolem_triple_system(n: usize) -> Result<SteinerSystem> {
    if n < 7 || n % 6 != 1 {
        return Err(Error::input(format!(
            "Skolem construction needs n >= 7 with n = 1 (mod 6), got {n}"
        )));
    }
    let t = (n - 1) / 6;
    let m = 2 * t;
    let point = |i: usize, level: usize| level * m + i;
    let infinity = n - 1;
    let rho = |x: usize| if x % 2 == 0 { x / 2 } else { t + (x - 1) / 2 };
    let op = |i: usize, j: usize| rho((i + j) % m);

    let mut blocks = Vec::new();
    for i in 0..t {
        blocks.push(vec![point(i, 0), point(i, 1), point(i, 2)]);
    }
    for level in 0..3 {
        for x in 0..t {
            blocks.push(vec![
                infinity,
                point(t + x, level),
                point(x, (level + 1) % 3),
            ]);
        }
    }
    for level in 0..3 {
        for i in 0..m {
            for j in i + 1..m {
                blocks.push(vec![
                    point(i, level),
                    point(j, level),
                    point(op(i, j), (level + 1) % 3),
                ]);
            }
        }
    }
    SteinerSystem::new(n, 3, blocks)
}

/// Outcome of the brute-force search.
#[derive(Debug, Clone)]
pub enum BruteForceOutcome {
    Found(SteinerSystem),
    /// Exhausted the search space: no system exists.
    Exhausted,
    /// Budget ran out before the space was exhausted.
    Indeterminate,
}

#[derive(Debug, Clone)]
pub struct BruteForceBudget {
    pub max_nodes: u64,
    /// Instances above this point count are refused.
    pub point_cap: usize,
}

impl Default for BruteForceBudget {
    fn default() -> Self {
        BruteForceBudget {
            max_nodes: 10_000_000,
            point_cap: 15,
        }
    }
}

/// Exhaustive backtracking for S(2, r, n): repeatedly covers the
/// lexicographically first uncovered pair, trying candidate blocks in
/// lexicographic order. Independent of every closed-form construction.
pub fn brute_force_steiner(
    n: usize,
    r: usize,
    budget: &BruteForceBudget,
) -> Result<BruteForceOutcome> {
    if r < 2 || r > n {
        return Err(Error::input(format!(
            "block size {r} out of range 2..={n}"
        )));
    }
    if n > budget.point_cap {
        return Err(Error::input(format!(
            "{n} points exceed the brute-force cap {}",
            budget.point_cap
        )));
    }
    // Arithmetic necessary conditions; failing them proves absence.
    if (n - 1) % (r - 1) != 0 || (n * ((n - 1) / (r - 1))) % r != 0 {
        return Ok(BruteForceOutcome::Exhausted);
    }

    let mut searcher = PairCover {
        n,
        r,
        covered: vec![false; n * n],
        blocks: Vec::new(),
        nodes: 0,
        max_nodes: budget.max_nodes,
        exhausted: true,
    };
    let total_pairs = n * (n - 1) / 2;
    if searcher.extend(total_pairs) {
        let blocks = searcher.blocks.clone();
        return Ok(BruteForceOutcome::Found(SteinerSystem::new(n, r, blocks)?));
    }
    Ok(if searcher.exhausted {
        BruteForceOutcome::Exhausted
    } else {
        BruteForceOutcome::Indeterminate
    })
}

struct PairCover {
    n: usize,
    r: usize,
    covered: Vec<bool>,
    blocks: Vec<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
}

impl PairCover {
    fn pair(&self, u: usize, v: usize) -> usize {
        u * self.n + v
    }

    fn extend(&mut self, pairs_left: usize) -> bool {
        if pairs_left == 0 {
            return true;
        }
        let Some((u, v)) = self.first_uncovered() else {
            return true;
        };
        if self.nodes >= self.max_nodes {
            self.exhausted = false;
            return false;
        }
        let mut block = vec![u, v];
        self.try_candidates(&mut block, v + 1, pairs_left)
    }

    fn first_uncovered(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.covered[self.pair(u, v)] {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Extends `block` with points >= `from`, keeping all its pairs
    /// uncovered, and recurses when it reaches size r.
    fn try_candidates(&mut self, block: &mut Vec<usize>, from: usize, pairs_left: usize) -> bool {
        if block.len() == self.r {
            self.nodes += 1;
            self.place(block);
            let done = self.extend(pairs_left - self.r * (self.r - 1) / 2);
            if done {
                return true;
            }
            self.unplace(block);
            return false;
        }
        let slots_needed = self.r - block.len();
        for x in from..self.n {
            if self.n - x < slots_needed {
                break;
            }
            if block.iter().any(|&y| self.covered[self.pair(y, x)]) {
                continue;
            }
            block.push(x);
            if self.try_candidates(block, x + 1, pairs_left) {
                return true;
            }
            block.pop();
            if !self.exhausted {
                return false;
            }
        }
        false
    }

    fn place(&mut self, block: &[usize]) {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                let idx = self.pair(u, v);
                self.covered[idx] = true;
            }
        }
        self.blocks.push(block.to_vec());
    }

    fn unplace(&mut self, block: &[usize]) {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                let idx = self.pair(u, v);
                self.covered[idx] = false;
            }
        }
        self.blocks.pop();
    }
}

/// Projective plane of order q as S(2, q+1, q^2+q+1): points are the
/// 1-dimensional subspaces of GF(q)^3, blocks the 2-dimensional ones.
pub fn projective_plane(q: usize) -> Result<SteinerSystem> {
    let f = FiniteField::new(q)?;
    let reps = canonical_triples(&f);
    let n = reps.len();
    debug_assert_eq!(n, q * q + q + 1);

    let mut blocks = Vec::with_capacity(n);
    for line in &reps {
        let mut block = Vec::with_capacity(q + 1);
        for (idx, point) in reps.iter().enumerate() {
            let dot = (0..3).fold(0, |acc, i| f.add(acc, f.mul(line[i], point[i])));
            if dot == 0 {
                block.push(idx);
            }
        }
        if block.len() != q + 1 {
            return Err(Error::internal(format!(
                "projective line holds {} points, expected {}",
                block.len(),
                q + 1
            )));
        }
        blocks.push(block);
    }
    SteinerSystem::new(n, q + 1, blocks)
}

/// Canonical representatives of nonzero triples up to scaling:
/// (1, y, z), then (0, 1, z), then (0, 0, 1).
fn canonical_triples(f: &FiniteField) -> Vec<[usize; 3]> {
    let q = f.order();
    let mut reps = Vec::with_capacity(q * q + q + 1);
    for y in 0..q {
        for z in 0..q {
            reps.push([1, y, z]);
        }
    }
    for z in 0..q {
        reps.push([0, 1, z]);
    }
    reps.push([0, 0, 1]);
    reps
}

/// Affine plane of order q as S(2, q, q^2): points are GF(q)^2, blocks the
/// lines y = mx + c plus the verticals x = c.
pub fn affine_plane(q: usize) -> Result<SteinerSystem> {
    let f = FiniteField::new(q)?;
    let point = |x: usize, y: usize| x * q + y;
    let mut blocks = Vec::with_capacity(q * q + q);
    for m in 0..q {
        for c in 0..q {
            blocks.push((0..q).map(|x| point(x, f.add(f.mul(m, x), c))).collect());
        }
    }
    for c in 0..q {
        blocks.push((0..q).map(|y| point(c, y)).collect());
    }
    SteinerSystem::new(q * q, q, blocks)
}

/// Interchange form of a design: `{"n": .., "r": .., "blocks": [[..]]}`
/// with sorted blocks in lexicographic order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DesignDoc {
    pub n: usize,
    pub r: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl DesignDoc {
    pub fn new(s: &SteinerSystem) -> Self {
        DesignDoc {
            n: s.point_count(),
            r: s.block_size(),
            blocks: s.blocks().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("design serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))
    }

    pub fn system(&self) -> Result<SteinerSystem> {
        SteinerSystem::new(self.n, self.r, self.blocks.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_valid(s: &SteinerSystem) {
        let report = verify_steiner(s);
        assert!(
            report.is_valid(),
            "expected a valid system, got: {}",
            report.violation.unwrap()
        );
    }

    #[test]
    fn fano_plane_verifies() {
        let fano = projective_plane(2).unwrap();
        assert_eq!(fano.point_count(), 7);
        assert_eq!(fano.block_count(), 7);
        assert_eq!(fano.block_size(), 3);
        assert_valid(&fano);
    }

    #[test]
    fn all_pairs_of_five_points_verify() {
        let s = pairs_system(5).unwrap();
        assert_eq!(s.block_count(), 10);
        assert_valid(&s);
        assert_eq!(pairs_system(3).unwrap().block_count(), 3);
        assert_eq!(pairs_system(2).unwrap().block_count(), 1);
    }

    #[test]
    fn duplicated_block_is_reported_as_overcovered_pair() {
        let fano = projective_plane(2).unwrap();
        let mut blocks = fano.blocks().to_vec();
        blocks.push(blocks[0].clone());
        let broken = SteinerSystem::new(7, 3, blocks).unwrap();
        let report = verify_steiner(&broken);
        assert!(matches!(
            report.violation,
            Some(SteinerViolation::PairOvercovered { count: 2, .. })
        ));
    }

    #[test]
    fn missing_block_is_reported_as_uncovered_pair() {
        let fano = projective_plane(2).unwrap();
        let mut blocks = fano.blocks().to_vec();
        blocks.pop();
        let broken = SteinerSystem::new(7, 3, blocks).unwrap();
        assert!(matches!(
            verify_steiner(&broken).violation,
            Some(SteinerViolation::PairUncovered { .. })
        ));
    }

    #[test]
    fn bose_examples() {
        let s = bose_triple_system(9).unwrap();
        assert_eq!(s.block_count(), 12);
        assert_valid(&s);
        let s = bose_triple_system(15).unwrap();
        assert_eq!(s.block_count(), 35);
        assert_valid(&s);
        assert!(bose_triple_system(11).is_err());
        assert!(bose_triple_system(3).is_err());
    }

    #[test]
    fn skolem_examples() {
        let s = skolem_triple_system(7).unwrap();
        assert_eq!(s.block_count(), 7);
        assert_valid(&s);
        let s = skolem_triple_system(13).unwrap();
        assert_eq!(s.block_count(), 26);
        assert_valid(&s);
        assert!(skolem_triple_system(9).is_err());
    }

    #[test]
    fn brute_force_examples() {
        let budget = BruteForceBudget::default();
        match brute_force_steiner(7, 3, &budget).unwrap() {
            BruteForceOutcome::Found(s) => {
                assert_eq!(s.block_count(), 7);
                assert_valid(&s);
            }
            other => panic!("expected a system, got {other:?}"),
        }
        assert!(matches!(
            brute_force_steiner(6, 3, &budget).unwrap(),
            BruteForceOutcome::Exhausted
        ));
        match brute_force_steiner(9, 3, &budget).unwrap() {
            BruteForceOutcome::Found(s) => {
                assert_eq!(s.block_count(), 12);
                assert_valid(&s);
            }
            other => panic!("expected a system, got {other:?}"),
        }
    }

    #[test]
    fn brute_force_finds_s_2_4_13() {
        let budget = BruteForceBudget::default();
        match brute_force_steiner(13, 4, &budget).unwrap() {
            BruteForceOutcome::Found(s) => {
                assert_eq!(s.block_count(), 13);
                assert_valid(&s);
            }
            other => panic!("expected a system, got {other:?}"),
        }
    }

    #[test]
    fn brute_force_budget_flags_indeterminate() {
        let tight = BruteForceBudget {
            max_nodes: 2,
            ..BruteForceBudget::default()
        };
        assert!(matches!(
            brute_force_steiner(13, 3, &tight).unwrap(),
            BruteForceOutcome::Indeterminate
        ));
    }

    #[test]
    fn construction_parameters_match_brute_force_existence() {
        let budget = BruteForceBudget::default();
        for n in [7usize, 13] {
            let constructed = skolem_triple_system(n).unwrap();
            match brute_force_steiner(n, 3, &budget).unwrap() {
                BruteForceOutcome::Found(found) => {
                    assert_eq!(found.point_count(), constructed.point_count());
                    assert_eq!(found.block_count(), constructed.block_count());
                }
                other => panic!("expected a system for n={n}, got {other:?}"),
            }
        }
        for n in [9usize, 15] {
            let constructed = bose_triple_system(n).unwrap();
            match brute_force_steiner(n, 3, &budget).unwrap() {
                BruteForceOutcome::Found(found) => {
                    assert_eq!(found.block_count(), constructed.block_count());
                }
                other => panic!("expected a system for n={n}, got {other:?}"),
            }
        }
    }

    #[test]
    fn projective_plane_examples() {
        let s = projective_plane(3).unwrap();
        assert_eq!(s.point_count(), 13);
        assert_eq!(s.block_count(), 13);
        assert_eq!(s.block_size(), 4);
        assert_valid(&s);
        assert!(projective_plane(6).is_err());
        let s = projective_plane(4).unwrap();
        assert_eq!(s.point_count(), 21);
        assert_valid(&s);
    }

    #[test]
    fn affine_plane_examples() {
        let s = affine_plane(2).unwrap();
        assert_eq!(s.point_count(), 4);
        assert_eq!(s.block_count(), 6);
        assert_eq!(s.block_size(), 2);
        assert_valid(&s);

        let s = affine_plane(3).unwrap();
        assert_eq!(s.point_count(), 9);
        assert_eq!(s.block_count(), 12);
        assert_valid(&s);

        let s = affine_plane(4).unwrap();
        assert_eq!(s.point_count(), 16);
        assert_eq!(s.block_count(), 20);
        assert_valid(&s);
    }

    #[test]
    fn design_doc_round_trip() {
        let s = skolem_triple_system(7).unwrap();
        let doc = DesignDoc::new(&s);
        let back = DesignDoc::from_json(&doc.to_json()).unwrap().system().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn system_constructor_rejects_bad_blocks() {
        assert!(SteinerSystem::new(5, 3, vec![vec![0, 1]]).is_err());
        assert!(SteinerSystem::new(5, 3, vec![vec![0, 1, 5]]).is_err());
        assert!(SteinerSystem::new(5, 3, vec![vec![0, 1, 1]]).is_err());
        assert!(SteinerSystem::new(5, 1, vec![]).is_err());
    }
}
