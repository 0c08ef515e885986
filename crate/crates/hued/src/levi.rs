//! Incidence (Levi) graphs of Steiner systems.
//!
//! Vertices `0..n` are the points, `n..n + b` the blocks, with an edge
//! whenever a point lies in a block. The points-first numbering is part of
//! the external contract; the recoloring procedure and the file formats
//! rely on it. For an S(2, r, n) the graph is bipartite, biregular with
//! point degree k and block degree r, and has girth at least 6 (two points
//! never share two blocks, which is exactly the absence of 4-cycles).

use crate::designs::{verify_steiner, SteinerSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A Levi graph together with its bipartition and originating system.
#[derive(Debug, Clone)]
pub struct LeviGraph {
    graph: Graph,
    system: SteinerSystem,
}

impl LeviGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn system(&self) -> &SteinerSystem {
        &self.system
    }

    pub fn point_count(&self) -> usize {
        self.system.point_count()
    }

    pub fn block_count(&self) -> usize {
        self.system.block_count()
    }

    /// Point-side vertices: `0..n`.
    pub fn point_side(&self) -> std::ops::Range<usize> {
        0..self.point_count()
    }

    /// Block-side vertices: `n..n + b`.
    pub fn block_side(&self) -> std::ops::Range<usize> {
        self.point_count()..self.point_count() + self.block_count()
    }

    /// The block index behind a block-side vertex.
    pub fn block_of_vertex(&self, v: usize) -> usize {
        debug_assert!(self.block_side().contains(&v));
        v - self.point_count()
    }
}

/// Builds the Levi graph of a verified system. Fails on systems that do
/// not pass `verify_steiner`.
pub fn levi_graph(system: &SteinerSystem) -> Result<LeviGraph> {
    let report = verify_steiner(system);
    if let Some(violation) = report.violation {
        return Err(Error::input(format!(
            "system fails verification: {violation}"
        )));
    }
    let n = system.point_count();
    let b = system.block_count();
    let edges = system
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(i, block)| block.iter().map(move |&v| (v, n + i)));
    Ok(LeviGraph {
        graph: Graph::from_edges(n + b, edges)?,
        system: system.clone(),
    })
}

/// Rebuilds a Levi graph from a plain graph plus the points-first split:
/// blocks are read off as the neighborhoods of the block-side vertices.
/// The reconstructed system must verify.
pub fn levi_from_graph(graph: &Graph, point_count: usize, r: usize) -> Result<LeviGraph> {
    if point_count > graph.vertex_count() {
        return Err(Error::input(format!(
            "point count {point_count} exceeds the vertex count {}",
            graph.vertex_count()
        )));
    }
    let blocks: Vec<Vec<usize>> = (point_count..graph.vertex_count())
        .map(|v| {
            let nbrs = graph.neighbors(v).to_vec();
            if nbrs.iter().any(|&u| u >= point_count) {
                return Err(Error::input(format!(
                    "vertex {v} on the block side touches another block vertex"
                )));
            }
            Ok(nbrs)
        })
        .collect::<Result<_>>()?;
    let system = SteinerSystem::new(point_count, r, blocks)?;
    let rebuilt = levi_graph(&system)?;
    if rebuilt.graph() != graph {
        return Err(Error::input(
            "graph is not the Levi graph of the system it induces".to_string(),
        ));
    }
    Ok(rebuilt)
}
