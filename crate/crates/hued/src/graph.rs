//! Immutable simple graphs with dense 0-based vertex indices.
//!
//! Adjacency lists are kept sorted and deduplicated; self-loops are rejected
//! at construction time. All queries are read-only, so a `Graph` can be
//! shared freely between threads.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..vertex_count()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Number of edges incident to `v`.
    ///
    /// Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Maximum vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// Runs a full BFS from every vertex and takes the minimum closed-walk
    /// length `dist(u) + dist(v) + 1` over all non-tree edges `(u, v)`
    /// encountered. Each such walk contains a cycle no longer than itself,
    /// and a BFS rooted on a shortest cycle realizes its exact length, so
    /// the minimum over all roots is the girth.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            dist[start] = 0;
            queue.clear();
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                // Any candidate discoverable from this level has length
                // at least 2*dist[u], so deeper levels cannot improve.
                if best != usize::MAX && 2 * dist[u] >= best {
                    break;
                }
                for &v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Two-coloring by BFS if the graph is bipartite, `None` otherwise.
    ///
    /// Components are two-colored independently; side 0 contains the
    /// lowest-index vertex of each component. Both sides come back sorted.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        let mut sides = (Vec::new(), Vec::new());
        for (v, &s) in side.iter().enumerate() {
            if s == 0 {
                sides.0.push(v);
            } else {
                sides.1.push(v);
            }
        }
        Some(sides)
    }

    /// The square graph: edges between all pairs at distance 1 or 2.
    pub fn square(&self) -> Graph {
        let n = self.vertex_count();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        for v in 0..n {
            let mut touched = Vec::new();
            for &u in self.neighbors(v) {
                if !seen[u] && u != v {
                    seen[u] = true;
                    touched.push(u);
                }
                for &w in self.neighbors(u) {
                    if !seen[w] && w != v {
                        seen[w] = true;
                        touched.push(w);
                    }
                }
            }
            touched.sort_unstable();
            adjacency[v] = touched.clone();
            for u in touched {
                seen[u] = false;
            }
        }
        Graph { adjacency }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut adjacency = Vec::with_capacity(n);
        for v in 0..n {
            adjacency.push((0..n).filter(|&u| u != v).collect());
        }
        Graph { adjacency }
    }

    /// Cycle C_n (requires n >= 3).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    /// Path on n vertices.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    /// Star K_{1,k}: vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
            .expect("star edges are simple")
    }

    /// The Petersen graph: outer cycle 0..4, inner pentagram 5..9, spokes i—i+5.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, edges).expect("petersen edges are simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heawood() -> Graph {
        // The (3,6)-cage: 14-cycle plus chords.
        let mut edges: Vec<(usize, usize)> = (0..14).map(|v| (v, (v + 1) % 14)).collect();
        edges.extend([(0, 5), (2, 7), (4, 9), (6, 11), (8, 13), (10, 1), (12, 3)]);
        Graph::from_edges(14, edges).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(Graph::complete(4).degree(0), 3);
        assert_eq!(Graph::new(1).degree(0), 0);
        let p = Graph::petersen();
        for v in 0..10 {
            assert_eq!(p.degree(v), 3);
        }
    }

    #[test]
    #[should_panic]
    fn degree_out_of_range_panics() {
        Graph::new(2).degree(2);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::cycle(5).max_degree(), 2);
        assert_eq!(Graph::star(5).max_degree(), 5);
        assert_eq!(heawood().max_degree(), 3);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::cycle(5).girth(), Some(5));
        assert_eq!(Graph::path(6).girth(), None);
        assert_eq!(Graph::new(3).girth(), None);
        assert_eq!(heawood().girth(), Some(6));
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::cycle(6).girth(), Some(6));
        assert_eq!(Graph::petersen().girth(), Some(5));
    }

    #[test]
    fn girth_on_disconnected_graph() {
        // A triangle next to an isolated path.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            Graph::cycle(6).bipartition(),
            Some((vec![0, 2, 4], vec![1, 3, 5]))
        );
        assert_eq!(Graph::cycle(5).bipartition(), None);
    }

    #[test]
    fn bipartition_disconnected_roots_side_zero() {
        // Two components: edge 0-1 and path 2-3-4.
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let (zero, one) = g.bipartition().unwrap();
        assert_eq!(zero, vec![0, 2, 4]);
        assert_eq!(one, vec![1, 3]);
    }

    #[test]
    fn square_of_path_and_cycle() {
        let sq = Graph::path(3).square();
        assert_eq!(sq.edge_count(), 3); // triangle
        let c5sq = Graph::cycle(5).square();
        assert_eq!(c5sq, Graph::complete(5));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::petersen();
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }
}
