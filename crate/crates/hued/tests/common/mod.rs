//! Shared test oracles, deliberately independent of the library's own
//! search and traversal code: plain enumeration and per-edge BFS only.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use hued::Graph;

/// Naive χ_r: try k = 1, 2, ... and enumerate every proper assignment
/// with k colors (pruning only on immediate properness violations, which
/// discards no valid total assignment), checking the hue condition at the
/// leaves with its own counting code.
pub fn naive_chi_r(g: &Graph, r: usize) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        if enumerate(g, r, k, 0, &mut colors) {
            return k;
        }
    }
    unreachable!("n distinct colors always form an r-hued coloring");
}

fn enumerate(g: &Graph, r: usize, k: usize, v: usize, colors: &mut [usize]) -> bool {
    if v == g.vertex_count() {
        return hued_everywhere(g, r, colors);
    }
    for c in 1..=k {
        if g.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if enumerate(g, r, k, v + 1, colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

fn hued_everywhere(g: &Graph, r: usize, colors: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let distinct: BTreeSet<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
        distinct.len() >= r.min(g.degree(v))
    })
}

/// Naive girth: for every edge (u, v), remove it and measure the shortest
/// remaining u–v path; the girth is the minimum such distance plus one.
pub fn naive_girth(g: &Graph) -> Option<usize> {
    let mut best = usize::MAX;
    for (u, v) in g.edges() {
        if let Some(d) = bfs_distance_avoiding_edge(g, u, v) {
            best = best.min(d + 1);
        }
    }
    (best != usize::MAX).then_some(best)
}

fn bfs_distance_avoiding_edge(g: &Graph, from: usize, to: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if (x == from && y == to) || (x == to && y == from) {
                continue;
            }
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if y == to {
                    return Some(dist[y]);
                }
                queue.push_back(y);
            }
        }
    }
    (dist[to] != usize::MAX).then_some(dist[to])
}

/// All connected graphs on exactly `n <= 7` vertices, one representative
/// per isomorphism class: a graph is kept iff its adjacency bitmask is
/// lexicographically minimal over all vertex permutations.
pub fn connected_graphs_upto_iso(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 7);
    if n == 1 {
        return vec![Graph::new(1)];
    }
    let bits = n * (n - 1) / 2;
    let pair_index = |i: usize, j: usize| -> usize {
        // pairs (i, j), i < j, ordered lexicographically
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        (0..i).map(|a| n - 1 - a).sum::<usize>() + (j - i - 1)
    };

    // Per permutation, where each edge bit lands.
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut map = vec![0; bits];
            for i in 0..n {
                for j in i + 1..n {
                    map[pair_index(i, j)] = pair_index(p[i], p[j]);
                }
            }
            map
        })
        .collect();

    let mut result = Vec::new();
    'mask: for mask in 0u32..(1u32 << bits) {
        if !mask_connected(mask, n, &pair_index) {
            continue;
        }
        for map in &maps[1..] {
            let mut image = 0u32;
            let mut m = mask;
            while m != 0 {
                let bit = m.trailing_zeros() as usize;
                image |= 1 << map[bit];
                m &= m - 1;
            }
            if image < mask {
                continue 'mask;
            }
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if mask >> pair_index(i, j) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        result.push(Graph::from_edges(n, edges).unwrap());
    }
    result
}

fn mask_connected(mask: u32, n: usize, pair_index: &dyn Fn(usize, usize) -> usize) -> bool {
    let mut reached = 1usize; // bitset over vertices, start at 0
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for y in 0..n {
            if y != x && reached >> y & 1 == 0 && mask >> pair_index(x, y) & 1 == 1 {
                reached |= 1 << y;
                frontier.push(y);
            }
        }
    }
    reached.count_ones() as usize == n
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    // Identity first, so callers can skip it.
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
