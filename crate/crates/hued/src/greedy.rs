//! Greedy r-hued coloring within `(r - 1)(Δ + 1) + 2` colors.
//!
//! Vertices are colored one major step at a time. At the start of a step
//! the uncolored vertex `v` splits its neighborhood into weak neighbors
//! (at most `r - 1` distinct colors visible from them) and strong ones.
//! With few weak neighbors, `v` takes a color avoiding its neighbors'
//! colors and everything visible from its weak neighbors (Case 1).
//! Otherwise the colored weak neighbors are stripped, `v` is colored, and
//! the whole weak set is recolored so that its first `r` members receive
//! pairwise distinct colors (Case 2). Counting the forbidden sets shows
//! the palette `{1, ..., (r - 1)(Δ + 1) + 2}` never runs out, and after
//! every step the state is a partial r-hued coloring.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{is_partial_r_hued, is_r_hued, rainbow_invariant_holds, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// How the next uncolored vertex is picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderPolicy {
    /// Ascending vertex index; deterministic.
    #[default]
    Index,
    /// Uniform over the uncolored set, driven by the seed.
    Random,
}

impl std::str::FromStr for OrderPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "index" => Ok(OrderPolicy::Index),
            "random" => Ok(OrderPolicy::Random),
            other => Err(Error::input(format!("unknown order policy {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GreedyOptions {
    pub order: OrderPolicy,
    pub seed: u64,
    /// Record one entry per colored vertex in the step log.
    pub log_steps: bool,
    /// Re-verify the partial r-hued condition and the rainbow invariant
    /// after every major step, with the independent verifiers.
    pub check_steps: bool,
}

impl Default for GreedyOptions {
    fn default() -> Self {
        GreedyOptions {
            order: OrderPolicy::Index,
            seed: 0,
            log_steps: false,
            check_steps: cfg!(debug_assertions),
        }
    }
}

/// Which rule colored a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    /// Plain first-fit, used when `min(r, Δ) <= 1`.
    FirstFit,
    /// Few weak neighbors: single assignment.
    Case1,
    /// Many weak neighbors: the step's center vertex.
    Case2Center,
    /// Many weak neighbors: one of the recolored weak vertices.
    Case2Weak,
}

impl StepCase {
    pub fn tag(self) -> &'static str {
        match self {
            StepCase::FirstFit => "first-fit",
            StepCase::Case1 => "case1",
            StepCase::Case2Center => "case2",
            StepCase::Case2Weak => "case2-weak",
        }
    }
}

/// One color assignment: which vertex, under which rule, and how many
/// colors were forbidden at that moment.
#[derive(Debug, Clone, Copy)]
pub struct StepRecord {
    pub vertex: usize,
    pub case: StepCase,
    pub forbidden: usize,
}

/// Result of a greedy run.
#[derive(Debug, Clone)]
pub struct GreedyRun {
    pub coloring: PartialColoring,
    pub steps: Vec<StepRecord>,
    /// Palette bound actually enforced: `Δ + 1` when `min(r, Δ) <= 1`,
    /// `(min(r, Δ) - 1)(Δ + 1) + 2` otherwise.
    pub palette_bound: usize,
    /// `min(r, Δ)`; colorings that are r'-hued for this value are r-hued
    /// for the requested r as well.
    pub effective_r: usize,
}

/// Palette bound for the greedy algorithm on a graph of maximum degree
/// `max_degree`, after clamping r.
pub fn greedy_palette_bound(r: usize, max_degree: usize) -> usize {
    let r_eff = r.min(max_degree);
    if r_eff <= 1 {
        max_degree + 1
    } else {
        (r_eff - 1) * (max_degree + 1) + 2
    }
}

/// Colors every vertex of `g` with an r-hued coloring using at most
/// `greedy_palette_bound(r, Δ)` colors.
pub fn greedy_r_hued(g: &Graph, r: usize, opts: &GreedyOptions) -> Result<GreedyRun> {
    if r == 0 {
        return Err(Error::input("r must be at least 1"));
    }
    let run = Machine::new(g, r, opts).run()?;
    debug_assert!(is_r_hued(g, &run.coloring, run.effective_r).unwrap_or(false));
    Ok(run)
}

/// Scratch set of colors with O(1) insert/lookup, reusable across steps.
struct ColorSet {
    stamp: Vec<u32>,
    epoch: u32,
    len: usize,
}

impl ColorSet {
    fn new(palette: usize) -> Self {
        ColorSet {
            stamp: vec![0; palette + 1],
            epoch: 0,
            len: 0,
        }
    }

    fn clear(&mut self) {
        self.epoch += 1;
        self.len = 0;
    }

    fn insert(&mut self, c: usize) {
        if self.stamp[c] != self.epoch {
            self.stamp[c] = self.epoch;
            self.len += 1;
        }
    }

    fn smallest_absent(&self, palette: usize) -> Option<usize> {
        (1..=palette).find(|&c| self.stamp[c] != self.epoch)
    }
}

struct Machine<'a> {
    g: &'a Graph,
    opts: &'a GreedyOptions,
    r_eff: usize,
    bound: usize,
    colors: Vec<usize>, // 0 = unassigned
    // Incremental per-vertex view of the neighborhood coloring.
    color_count: Vec<Vec<u16>>,
    distinct: Vec<usize>,
    colored_nbrs: Vec<usize>,
    uncolored: BTreeSet<usize>,
    steps: Vec<StepRecord>,
    forbid: ColorSet,
    rng: ChaCha8Rng,
}

impl<'a> Machine<'a> {
    fn new(g: &'a Graph, r: usize, opts: &'a GreedyOptions) -> Self {
        let n = g.vertex_count();
        let delta = g.max_degree();
        let r_eff = r.min(delta);
        let bound = greedy_palette_bound(r, delta);
        Machine {
            g,
            opts,
            r_eff,
            bound,
            colors: vec![0; n],
            color_count: (0..n).map(|_| vec![0u16; bound + 1]).collect(),
            distinct: vec![0; n],
            colored_nbrs: vec![0; n],
            uncolored: (0..n).collect(),
            steps: Vec::new(),
            forbid: ColorSet::new(bound),
            rng: ChaCha8Rng::seed_from_u64(opts.seed),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        debug_assert_eq!(self.colors[v], 0);
        self.colors[v] = c;
        for &u in self.g.neighbors(v) {
            if self.color_count[u][c] == 0 {
                self.distinct[u] += 1;
            }
            self.color_count[u][c] += 1;
            self.colored_nbrs[u] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        debug_assert_ne!(c, 0);
        self.colors[v] = 0;
        for &u in self.g.neighbors(v) {
            self.color_count[u][c] -= 1;
            if self.color_count[u][c] == 0 {
                self.distinct[u] -= 1;
            }
            self.colored_nbrs[u] -= 1;
        }
    }

    fn is_weak(&self, x: usize) -> bool {
        self.distinct[x] <= self.r_eff - 1
    }

    fn pick_vertex(&mut self) -> usize {
        match self.opts.order {
            OrderPolicy::Index => *self.uncolored.iter().next().expect("nonempty"),
            OrderPolicy::Random => {
                let k = self.rng.gen_range(0..self.uncolored.len());
                *self.uncolored.iter().nth(k).expect("in range")
            }
        }
    }

    fn record(&mut self, vertex: usize, case: StepCase, forbidden: usize) {
        if self.opts.log_steps {
            self.steps.push(StepRecord {
                vertex,
                case,
                forbidden,
            });
        }
    }

    fn choose(&mut self, vertex: usize, case: StepCase) -> Result<usize> {
        let forbidden = self.forbid.len;
        let c = self
            .forbid
            .smallest_absent(self.bound)
            .ok_or_else(|| {
                Error::internal(format!(
                    "palette of size {} exhausted at vertex {vertex} ({})",
                    self.bound,
                    case.tag()
                ))
            })?;
        self.record(vertex, case, forbidden);
        Ok(c)
    }

    fn run(mut self) -> Result<GreedyRun> {
        if self.r_eff <= 1 {
            self.run_first_fit()?;
        } else {
            while !self.uncolored.is_empty() {
                let v = self.pick_vertex();
                self.major_step(v)?;
                if self.opts.check_steps {
                    self.check_step_state()?;
                }
            }
        }
        let mut phi = PartialColoring::new(self.g.vertex_count(), self.bound);
        for (v, &c) in self.colors.iter().enumerate() {
            phi.assign(v, c);
        }
        Ok(GreedyRun {
            coloring: phi,
            steps: self.steps,
            palette_bound: self.bound,
            effective_r: self.r_eff,
        })
    }

    /// Proper coloring by first fit; sufficient when `min(r, Δ) <= 1`.
    fn run_first_fit(&mut self) -> Result<()> {
        while !self.uncolored.is_empty() {
            let v = self.pick_vertex();
            self.forbid.clear();
            for &u in self.g.neighbors(v) {
                if self.colors[u] != 0 {
                    self.forbid.insert(self.colors[u]);
                }
            }
            let c = self.choose(v, StepCase::FirstFit)?;
            self.assign(v, c);
            self.uncolored.remove(&v);
        }
        Ok(())
    }

    fn major_step(&mut self, v: usize) -> Result<()> {
        // Weak/strong split of N(v) against the coloring at step start.
        let mut weak = Vec::new();
        let mut strong = Vec::new();
        for &x in self.g.neighbors(v) {
            if self.is_weak(x) {
                weak.push(x);
            } else {
                strong.push(x);
            }
        }

        if weak.len() <= self.r_eff - 1 {
            self.case1(v, &weak, &strong)?;
        } else {
            self.case2(v, &weak, &strong)?;
        }
        Ok(())
    }

    /// Case 1: at most `r - 1` weak neighbors. One assignment avoiding the
    /// colors of N(v) and everything visible from the weak neighbors.
    fn case1(&mut self, v: usize, weak: &[usize], strong: &[usize]) -> Result<()> {
        self.forbid.clear();
        for &x in strong.iter().chain(weak) {
            if self.colors[x] != 0 {
                self.forbid.insert(self.colors[x]);
            }
        }
        for &x in weak {
            for &y in self.g.neighbors(x) {
                if self.colors[y] != 0 {
                    self.forbid.insert(self.colors[y]);
                }
            }
        }
        if self.opts.check_steps {
            let cap = self.g.max_degree() + (self.r_eff - 1) * (self.r_eff - 1);
            if self.forbid.len > cap {
                return Err(Error::internal(format!(
                    "case 1 forbidden set {} exceeds Δ + (r-1)^2 = {cap}",
                    self.forbid.len
                )));
            }
        }
        let c = self.choose(v, StepCase::Case1)?;
        self.assign(v, c);
        self.uncolored.remove(&v);
        Ok(())
    }

    /// Case 2: at least `r` weak neighbors. Strip their colors, color `v`,
    /// then recolor the whole weak set; the first `r` weak vertices also
    /// avoid one another so `v` ends up seeing `r` distinct colors.
    fn case2(&mut self, v: usize, weak: &[usize], strong: &[usize]) -> Result<()> {
        let delta = self.g.max_degree();
        for &w in weak {
            if self.colors[w] != 0 {
                self.unassign(w);
            }
        }

        self.forbid.clear();
        for &x in strong {
            if self.colors[x] != 0 {
                self.forbid.insert(self.colors[x]);
            }
        }
        for &x in weak {
            for &y in self.g.neighbors(x) {
                if self.colors[y] != 0 {
                    self.forbid.insert(self.colors[y]);
                }
            }
        }
        if self.opts.check_steps {
            let cap = delta * (self.r_eff - 1);
            if self.forbid.len > cap {
                return Err(Error::internal(format!(
                    "case 2 forbidden set {} for the center exceeds Δ(r-1) = {cap}",
                    self.forbid.len
                )));
            }
        }
        let c = self.choose(v, StepCase::Case2Center)?;
        self.assign(v, c);

        // weak is ascending by construction: w_1 < w_2 < ... < w_k.
        for (j, &w) in weak.iter().enumerate() {
            self.forbid.clear();
            self.forbid.insert(self.colors[v]);
            for &u in self.g.neighbors(w) {
                if u != v && self.colors[u] != 0 {
                    self.forbid.insert(self.colors[u]);
                }
            }
            // Colors visible from the *currently* weak neighbors of w,
            // so that their neighborhoods stay rainbow.
            for &x in self.g.neighbors(w) {
                if x != v && self.is_weak(x) {
                    for &y in self.g.neighbors(x) {
                        if self.colors[y] != 0 {
                            self.forbid.insert(self.colors[y]);
                        }
                    }
                }
            }
            // The first r weak vertices must be pairwise distinct; later
            // ones are already guaranteed r distinct colors around v.
            if j < self.r_eff {
                for &w_earlier in &weak[..j] {
                    self.forbid.insert(self.colors[w_earlier]);
                }
            }
            if self.opts.check_steps {
                let cap = 1 + (delta + 1) * (self.r_eff - 1);
                if self.forbid.len > cap {
                    return Err(Error::internal(format!(
                        "case 2 forbidden set {} for a weak vertex exceeds 1 + (Δ+1)(r-1) = {cap}",
                        self.forbid.len
                    )));
                }
            }
            let c = self.choose(w, StepCase::Case2Weak)?;
            self.assign(w, c);
        }

        self.uncolored.remove(&v);
        for w in weak {
            self.uncolored.remove(w);
        }
        Ok(())
    }

    /// Every vertex outside the uncolored set must be colored, the state
    /// must be a partial r-hued coloring, and neighborhoods with at most
    /// r colored vertices must be rainbow. Checked with the standalone
    /// verifiers, not the incremental counters.
    fn check_step_state(&self) -> Result<()> {
        let mut phi = PartialColoring::new(self.g.vertex_count(), self.bound);
        for (v, &c) in self.colors.iter().enumerate() {
            if c != 0 {
                phi.assign(v, c);
            } else if !self.uncolored.contains(&v) {
                return Err(Error::internal(format!(
                    "vertex {v} left the uncolored set without a color"
                )));
            }
        }
        if !is_partial_r_hued(self.g, &phi, self.r_eff)? {
            return Err(Error::internal(
                "step boundary is not a partial r-hued coloring".to_string(),
            ));
        }
        if !rainbow_invariant_holds(self.g, &phi, self.r_eff) {
            return Err(Error::internal(
                "rainbow invariant violated at step boundary".to_string(),
            ));
        }
        Ok(())
    }
}
