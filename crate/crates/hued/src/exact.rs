//! Exhaustive computation of the r-hued chromatic number on small graphs.
//!
//! The search iterates the palette size k upward from a cheap lower bound.
//! Each level is a depth-first search over vertices in descending-degree
//! order with three prunes: properness, hue feasibility (distinct colored
//! neighbors plus uncolored neighbors must still be able to reach
//! `min(r, deg)`), and color symmetry breaking (a new color must be the
//! smallest unused one). The first feasible k, with every smaller level
//! exhausted, is the exact value.

use std::time::{Duration, Instant};

use crate::coloring::{is_r_hued, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::{greedy_r_hued, GreedyOptions};

/// Budget and scale limits for one `exact_chi_r` call.
#[derive(Debug, Clone)]
pub struct ExactOptions {
    /// Hard cap on instance size; larger graphs are refused outright.
    pub vertex_cap: usize,
    /// Search-node budget per palette level, if any.
    pub max_nodes: Option<u64>,
    /// Wall-clock limit over the whole call, if any.
    pub timeout: Option<Duration>,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            vertex_cap: 40,
            max_nodes: None,
            timeout: None,
        }
    }
}

/// Outcome of an exact search.
///
/// With `timed_out == false`, `chi_r` is the r-hued chromatic number:
/// every smaller palette was exhausted without a coloring. With
/// `timed_out == true` some level ran out of budget and `chi_r` is only a
/// verified upper bound. The witness always passes `is_r_hued` and uses
/// exactly `chi_r` colors.
#[derive(Debug, Clone)]
pub struct ExactResult {
    pub chi_r: usize,
    pub witness: PartialColoring,
    pub nodes_explored: u64,
    pub timed_out: bool,
}

/// Search seed: one more than the largest hue requirement of any vertex.
/// Vertex v needs `min(r, deg v)` distinct neighbor colors plus a color of
/// its own different from all of them.
pub fn lower_bound(g: &Graph, r: usize) -> usize {
    (0..g.vertex_count())
        .map(|v| r.min(g.degree(v)) + 1)
        .max()
        .unwrap_or(1)
        .max(1)
}

/// Computes χ_r of `g` by iterative-deepening backtracking.
pub fn exact_chi_r(g: &Graph, r: usize, opts: &ExactOptions) -> Result<ExactResult> {
    if r == 0 {
        return Err(Error::input("r must be at least 1"));
    }
    let n = g.vertex_count();
    if n > opts.vertex_cap {
        return Err(Error::input(format!(
            "graph has {n} vertices, exceeding the exact-search cap {}",
            opts.vertex_cap
        )));
    }
    if n == 0 {
        return Ok(ExactResult {
            chi_r: 0,
            witness: PartialColoring::new(0, 1),
            nodes_explored: 0,
            timed_out: false,
        });
    }

    // A greedy run caps the search: only palettes below it need refuting.
    let upper = greedy_r_hued(
        g,
        r,
        &GreedyOptions {
            check_steps: false,
            ..GreedyOptions::default()
        },
    )?;
    let upper_witness = upper.coloring.compacted();
    let upper_colors = upper_witness.colors_used();

    let deadline = opts.timeout.map(|t| Instant::now() + t);
    let mut nodes_total = 0u64;
    let mut timed_out = false;

    for k in lower_bound(g, r)..upper_colors {
        let mut search = Search::new(g, r, k, opts.max_nodes, deadline);
        let status = search.dfs(0, 0);
        nodes_total += search.nodes;
        match status {
            Status::Sat => {
                let mut witness = PartialColoring::new(n, k);
                for (v, &c) in search.colors.iter().enumerate() {
                    witness.assign(v, c);
                }
                debug_assert!(is_r_hued(g, &witness, r).unwrap_or(false));
                return Ok(ExactResult {
                    chi_r: k,
                    witness,
                    nodes_explored: nodes_total,
                    timed_out,
                });
            }
            Status::Unsat => {}
            Status::Budget => timed_out = true,
        }
    }

    Ok(ExactResult {
        chi_r: upper_colors,
        witness: upper_witness,
        nodes_explored: nodes_total,
        timed_out,
    })
}

enum Status {
    Sat,
    Unsat,
    Budget,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    need: Vec<usize>,
    colors: Vec<usize>, // 0 = unassigned
    color_count: Vec<Vec<u32>>,
    distinct: Vec<usize>,
    uncolored_nbrs: Vec<usize>,
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        r: usize,
        k: usize,
        max_nodes: Option<u64>,
        deadline: Option<Instant>,
    ) -> Self {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        // Fail-first: highest degree earliest, ties by index.
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Search {
            g,
            k,
            order,
            need: (0..n).map(|v| r.min(g.degree(v))).collect(),
            colors: vec![0; n],
            color_count: (0..n).map(|_| vec![0u32; k + 1]).collect(),
            distinct: vec![0; n],
            uncolored_nbrs: (0..n).map(|v| g.degree(v)).collect(),
            nodes: 0,
            max_nodes,
            deadline,
        }
    }

    fn out_of_budget(&self) -> bool {
        if let Some(cap) = self.max_nodes {
            if self.nodes > cap {
                return true;
            }
        }
        if let Some(deadline) = self.deadline {
            if self.nodes % 4096 == 0 && Instant::now() >= deadline {
                return true;
            }
        }
        false
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.colors[v] = c;
        let mut feasible = true;
        for &u in self.g.neighbors(v) {
            if self.color_count[u][c] == 0 {
                self.distinct[u] += 1;
            }
            self.color_count[u][c] += 1;
            self.uncolored_nbrs[u] -= 1;
            if self.distinct[u] + self.uncolored_nbrs[u] < self.need[u] {
                feasible = false;
            }
        }
        feasible
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for &u in self.g.neighbors(v) {
            self.color_count[u][c] -= 1;
            if self.color_count[u][c] == 0 {
                self.distinct[u] -= 1;
            }
            self.uncolored_nbrs[u] += 1;
        }
    }

    fn dfs(&mut self, idx: usize, used: usize) -> Status {
        if idx == self.order.len() {
            return Status::Sat;
        }
        let v = self.order[idx];
        for c in 1..=self.k.min(used + 1) {
            if self.color_count[v][c] > 0 {
                continue; // a neighbor already wears c
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return Status::Budget;
            }
            let feasible = self.assign(v, c);
            if feasible {
                match self.dfs(idx + 1, used.max(c)) {
                    Status::Unsat => {}
                    done => return done, // keep the witness assignment on Sat
                }
            }
            self.unassign(v);
        }
        Status::Unsat
    }
}
