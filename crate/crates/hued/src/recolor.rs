//! Compressing an r-hued coloring of a Levi graph down to n colors.
//!
//! In any r-hued coloring of the Levi graph of an S(2, r, n), the point
//! vertices carry pairwise distinct colors: every block sees exactly r
//! neighbors and needs r distinct colors on them, and every point pair
//! shares a block. So at least n colors appear on the points. This module
//! walks the block vertices whose color falls outside the point palette
//! and recolors each with a point color, never touching the points, until
//! every color in use comes from the point side — exactly n colors.
//!
//! For point degree at least r + 2 a counting argument guarantees a free
//! point color at every step. Below that threshold the procedure runs
//! best-effort and reports whether it finished.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coloring::{is_r_hued, PartialColoring};
use crate::error::{Error, Result};
use crate::levi::LeviGraph;

/// One recoloring move.
#[derive(Debug, Clone, Serialize)]
pub struct RecolorStep {
    pub block_vertex: usize,
    /// 1 when some neighbor already saw r colors elsewhere, 2 otherwise.
    pub case: u8,
    pub old_color: usize,
    pub new_color: usize,
}

/// What the reduction did.
#[derive(Debug, Clone, Serialize)]
pub struct RecolorReport {
    pub input_colors: usize,
    pub output_colors: usize,
    pub steps: Vec<RecolorStep>,
    /// False only in best-effort mode (point degree < r + 2) when some
    /// block could not be recolored; the returned coloring is still valid.
    pub completed: bool,
    pub stuck_block: Option<usize>,
}

/// Recolors block vertices of `lg` until every color in use appears on a
/// point vertex. `phi` must be a total r-hued coloring of the Levi graph
/// for the system's block size r.
pub fn reduce_levi_coloring(
    lg: &LeviGraph,
    phi: &PartialColoring,
    r: usize,
) -> Result<(PartialColoring, RecolorReport)> {
    let g = lg.graph();
    if r != lg.system().block_size() {
        return Err(Error::input(format!(
            "r = {r} does not match the system block size {}",
            lg.system().block_size()
        )));
    }
    if !is_r_hued(g, phi, r)? {
        return Err(Error::input(
            "input coloring is not r-hued on the Levi graph".to_string(),
        ));
    }

    let n = lg.point_count();
    let point_colors: BTreeSet<usize> = lg.point_side().map(|v| phi.color(v).unwrap()).collect();
    if point_colors.len() != n {
        // Forced for any valid r-hued coloring of a Levi graph.
        return Err(Error::internal(format!(
            "points wear {} distinct colors, expected {n}",
            point_colors.len()
        )));
    }
    let point_degree = lg
        .point_side()
        .map(|v| g.degree(v))
        .max()
        .unwrap_or(0);
    let guaranteed = point_degree >= r + 2;

    let mut phi = phi.clone();
    let mut report = RecolorReport {
        input_colors: phi.colors_used(),
        output_colors: 0,
        steps: Vec::new(),
        completed: true,
        stuck_block: None,
    };

    loop {
        let offending: Vec<usize> = lg
            .block_side()
            .filter(|&y| !point_colors.contains(&phi.color(y).unwrap()))
            .collect();
        let Some(&y) = offending.first() else { break };

        // Distinct colors each neighbor point sees away from y.
        let sees_elsewhere = |z: usize| -> usize {
            g.neighbors(z)
                .iter()
                .filter(|&&w| w != y)
                .map(|&w| phi.color(w).unwrap())
                .collect::<BTreeSet<_>>()
                .len()
        };
        let satisfied: Vec<usize> = g
            .neighbors(y)
            .iter()
            .copied()
            .filter(|&z| sees_elsewhere(z) >= r)
            .collect();

        let mut forbidden = BTreeSet::new();
        let case = if satisfied.is_empty() {
            // Every neighbor point needs y's color slot: avoid all colors
            // around y and around each neighbor point.
            for &w in g.neighbors(y) {
                forbidden.insert(phi.color(w).unwrap());
                for &x in g.neighbors(w) {
                    if x != y {
                        forbidden.insert(phi.color(x).unwrap());
                    }
                }
            }
            if forbidden.len() > r * r {
                return Err(Error::internal(format!(
                    "case 2 forbidden set {} exceeds r^2 = {}",
                    forbidden.len(),
                    r * r
                )));
            }
            2
        } else {
            // Satisfied neighbors only require properness; the rest also
            // pin their remaining color diversity.
            for &z in &satisfied {
                forbidden.insert(phi.color(z).unwrap());
            }
            for &w in g.neighbors(y) {
                if satisfied.contains(&w) {
                    continue;
                }
                forbidden.insert(phi.color(w).unwrap());
                for &x in g.neighbors(w) {
                    if x != y {
                        forbidden.insert(phi.color(x).unwrap());
                    }
                }
            }
            let l = satisfied.len();
            if forbidden.len() > l + (r - l) * r {
                return Err(Error::internal(format!(
                    "case 1 forbidden set {} exceeds l + (r - l) r = {}",
                    forbidden.len(),
                    l + (r - l) * r
                )));
            }
            1
        };

        let Some(&new_color) = point_colors.difference(&forbidden).next() else {
            if guaranteed {
                return Err(Error::internal(format!(
                    "no admissible point color for block vertex {y} despite point degree {point_degree} >= r + 2"
                )));
            }
            report.completed = false;
            report.stuck_block = Some(y);
            break;
        };

        let old_color = phi.color(y).unwrap();
        phi.assign(y, new_color);
        report.steps.push(RecolorStep {
            block_vertex: y,
            case,
            old_color,
            new_color,
        });

        if !is_r_hued(g, &phi, r)? {
            return Err(Error::internal(format!(
                "recoloring block vertex {y} with {new_color} broke the r-hued property"
            )));
        }
        let still_offending = lg
            .block_side()
            .filter(|&v| !point_colors.contains(&phi.color(v).unwrap()))
            .count();
        if still_offending != offending.len() - 1 {
            return Err(Error::internal(
                "offending-block count did not shrink by one".to_string(),
            ));
        }
    }

    report.output_colors = phi.colors_used();
    Ok((phi, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{bose_triple_system, pairs_system, skolem_triple_system};
    use crate::greedy::{greedy_r_hued, GreedyOptions};
    use crate::levi::levi_graph;

    fn greedy_coloring(lg: &LeviGraph, r: usize) -> PartialColoring {
        greedy_r_hued(lg.graph(), r, &GreedyOptions::default())
            .unwrap()
            .coloring
    }

    #[test]
    fn pairs_system_reduces_to_five_colors() {
        let lg = levi_graph(&pairs_system(5).unwrap()).unwrap();
        let phi = greedy_coloring(&lg, 2);
        assert!(phi.colors_used() <= 7);
        let (reduced, report) = reduce_levi_coloring(&lg, &phi, 2).unwrap();
        assert!(report.completed);
        assert!(is_r_hued(lg.graph(), &reduced, 2).unwrap());
        assert_eq!(reduced.colors_used(), 5);
        assert_eq!(report.output_colors, 5);
    }

    #[test]
    fn skolem_13_reduces_to_thirteen_colors() {
        let lg = levi_graph(&skolem_triple_system(13).unwrap()).unwrap();
        let phi = greedy_coloring(&lg, 3);
        let (reduced, report) = reduce_levi_coloring(&lg, &phi, 3).unwrap();
        assert!(report.completed);
        assert!(is_r_hued(lg.graph(), &reduced, 3).unwrap());
        assert_eq!(reduced.colors_used(), 13);
    }

    #[test]
    fn already_reduced_input_is_returned_unchanged() {
        let lg = levi_graph(&pairs_system(5).unwrap()).unwrap();
        let phi = greedy_coloring(&lg, 2);
        let (reduced, _) = reduce_levi_coloring(&lg, &phi, 2).unwrap();
        let (again, report) = reduce_levi_coloring(&lg, &reduced, 2).unwrap();
        assert!(report.steps.is_empty());
        assert_eq!(again, reduced);
        assert_eq!(report.input_colors, report.output_colors);
    }

    #[test]
    fn best_effort_mode_reports_without_failing() {
        // S(2,3,9) has point degree 4 < r + 2 = 5: outside the guarantee.
        let lg = levi_graph(&bose_triple_system(9).unwrap()).unwrap();
        let phi = greedy_coloring(&lg, 3);
        let (reduced, report) = reduce_levi_coloring(&lg, &phi, 3).unwrap();
        assert!(is_r_hued(lg.graph(), &reduced, 3).unwrap());
        if report.completed {
            assert_eq!(reduced.colors_used(), 9);
        } else {
            assert!(report.stuck_block.is_some());
        }
    }

    #[test]
    fn wrong_r_is_rejected() {
        let lg = levi_graph(&pairs_system(5).unwrap()).unwrap();
        let phi = greedy_coloring(&lg, 2);
        assert!(reduce_levi_coloring(&lg, &phi, 3).is_err());
    }

    #[test]
    fn invalid_coloring_is_rejected() {
        let lg = levi_graph(&pairs_system(5).unwrap()).unwrap();
        let bad = PartialColoring::new(lg.graph().vertex_count(), 3);
        assert!(reduce_levi_coloring(&lg, &bad, 2).is_err());
    }
}
