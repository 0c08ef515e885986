//! Partial colorings and the three verifiers: proper, r-hued, partial r-hued.
//!
//! A coloring is *r-hued* when it is proper and every vertex `v` sees at
//! least `min(r, deg(v))` distinct colors on its neighborhood. The partial
//! variant relaxes the requirement to the colored part of each
//! neighborhood, which is the invariant the greedy algorithm maintains
//! between steps.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partial assignment of 1-based colors to vertices, bounded by a palette.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<Option<usize>>,
    palette_size: usize,
}

impl PartialColoring {
    /// Fully-unassigned coloring over a palette `{1, ..., palette_size}`.
    pub fn new(vertex_count: usize, palette_size: usize) -> Self {
        PartialColoring {
            colors: vec![None; vertex_count],
            palette_size,
        }
    }

    /// Builds a coloring from explicit per-vertex entries.
    pub fn from_colors(colors: Vec<Option<usize>>, palette_size: usize) -> Result<Self> {
        for (v, &c) in colors.iter().enumerate() {
            if let Some(c) = c {
                if c == 0 || c > palette_size {
                    return Err(Error::input(format!(
                        "color {c} at vertex {v} outside palette 1..={palette_size}"
                    )));
                }
            }
        }
        Ok(PartialColoring {
            colors,
            palette_size,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    /// Assigns color `c` to `v`. Panics if `c` is outside the palette.
    pub fn assign(&mut self, v: usize, c: usize) {
        assert!(
            c >= 1 && c <= self.palette_size,
            "color {c} outside palette 1..={}",
            self.palette_size
        );
        self.colors[v] = Some(c);
    }

    pub fn unassign(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn assigned_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    /// Number of distinct colors currently assigned.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn colors(&self) -> &[Option<usize>] {
        &self.colors
    }

    /// Renumbers the used colors to `1..=colors_used()`, preserving their
    /// relative order, and shrinks the palette accordingly.
    pub fn compacted(&self) -> PartialColoring {
        let used: BTreeSet<usize> = self.colors.iter().flatten().copied().collect();
        let rank: std::collections::BTreeMap<usize, usize> =
            used.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect();
        PartialColoring {
            colors: self.colors.iter().map(|c| c.map(|c| rank[&c])).collect(),
            palette_size: used.len().max(1),
        }
    }
}

fn check_sizes(g: &Graph, phi: &PartialColoring) -> Result<()> {
    if g.vertex_count() != phi.vertex_count() {
        return Err(Error::input(format!(
            "coloring covers {} vertices, graph has {}",
            phi.vertex_count(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Distinct colors on the neighborhood of `v` under `phi`.
pub fn neighbor_color_count(g: &Graph, phi: &PartialColoring, v: usize) -> usize {
    g.neighbors(v)
        .iter()
        .filter_map(|&u| phi.color(u))
        .collect::<BTreeSet<_>>()
        .len()
}

/// True iff no edge joins two assigned vertices of equal color.
pub fn is_proper(g: &Graph, phi: &PartialColoring) -> Result<bool> {
    check_sizes(g, phi)?;
    Ok(g.edges().all(|(u, v)| match (phi.color(u), phi.color(v)) {
        (Some(a), Some(b)) => a != b,
        _ => true,
    }))
}

/// True iff `phi` is total, proper, and every vertex sees at least
/// `min(r, deg(v))` distinct neighbor colors.
pub fn is_r_hued(g: &Graph, phi: &PartialColoring, r: usize) -> Result<bool> {
    check_sizes(g, phi)?;
    if !phi.is_total() {
        return Err(Error::input(
            "is_r_hued requires a total coloring; use is_partial_r_hued".to_string(),
        ));
    }
    if !is_proper(g, phi)? {
        return Ok(false);
    }
    Ok((0..g.vertex_count())
        .all(|v| neighbor_color_count(g, phi, v) >= r.min(g.degree(v))))
}

/// True iff `phi` is a partial r-hued coloring: proper on assigned pairs,
/// and every vertex `u` (colored or not) sees at least
/// `min(r, |colored neighbors of u|)` distinct neighbor colors.
pub fn is_partial_r_hued(g: &Graph, phi: &PartialColoring, r: usize) -> Result<bool> {
    check_sizes(g, phi)?;
    if !is_proper(g, phi)? {
        return Ok(false);
    }
    Ok((0..g.vertex_count()).all(|u| {
        let colored = g
            .neighbors(u)
            .iter()
            .filter(|&&x| phi.color(x).is_some())
            .count();
        neighbor_color_count(g, phi, u) >= r.min(colored)
    }))
}

/// Splits the neighborhood of `v` into weak and strong neighbors relative
/// to the current partial coloring: `x` is weak when its own neighborhood
/// shows at most `r - 1` distinct colors, strong otherwise. Returns
/// `(weak, strong)`, both in ascending vertex order.
pub fn weak_strong_split(
    g: &Graph,
    phi: &PartialColoring,
    r: usize,
    v: usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut weak = Vec::new();
    let mut strong = Vec::new();
    for &x in g.neighbors(v) {
        if neighbor_color_count(g, phi, x) >= r {
            strong.push(x);
        } else {
            weak.push(x);
        }
    }
    (weak, strong)
}

/// Rainbow invariant: every vertex with at most `r` colored neighbors has
/// them pairwise distinctly colored.
pub fn rainbow_invariant_holds(g: &Graph, phi: &PartialColoring, r: usize) -> bool {
    (0..g.vertex_count()).all(|v| {
        let colors: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter_map(|&u| phi.color(u))
            .collect();
        colors.len() > r || colors.iter().collect::<BTreeSet<_>>().len() == colors.len()
    })
}

/// Interchange form of a coloring: `{"r": .., "palette_size": ..,
/// "colors": [..]}` with 0-based vertex positions and 1-based colors
/// (`null` marks an unassigned vertex).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub r: usize,
    pub palette_size: usize,
    pub colors: Vec<Option<usize>>,
}

impl ColoringDoc {
    pub fn new(phi: &PartialColoring, r: usize) -> Self {
        ColoringDoc {
            r,
            palette_size: phi.palette_size(),
            colors: phi.colors().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))
    }

    pub fn coloring(&self) -> Result<PartialColoring> {
        PartialColoring::from_colors(self.colors.clone(), self.palette_size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring(colors: &[usize], palette: usize) -> PartialColoring {
        let entries = colors
            .iter()
            .map(|&c| if c == 0 { None } else { Some(c) })
            .collect();
        PartialColoring::from_colors(entries, palette).unwrap()
    }

    #[test]
    fn proper_examples() {
        let c4 = Graph::cycle(4);
        assert!(is_proper(&c4, &coloring(&[1, 2, 1, 2], 2)).unwrap());
        let k2 = Graph::complete(2);
        assert!(!is_proper(&k2, &coloring(&[1, 1], 2)).unwrap());
        let p3 = Graph::path(3);
        assert!(is_proper(&p3, &coloring(&[1, 0, 1], 2)).unwrap());
    }

    #[test]
    fn proper_size_mismatch_is_an_error() {
        let g = Graph::path(3);
        assert!(is_proper(&g, &coloring(&[1, 2], 2)).is_err());
    }

    #[test]
    fn r_hued_examples() {
        let c6 = Graph::cycle(6);
        assert!(is_r_hued(&c6, &coloring(&[1, 2, 3, 1, 2, 3], 3), 2).unwrap());
        let c4 = Graph::cycle(4);
        assert!(!is_r_hued(&c4, &coloring(&[1, 2, 1, 2], 2), 2).unwrap());
        let c5 = Graph::cycle(5);
        assert!(is_r_hued(&c5, &coloring(&[1, 2, 3, 4, 5], 5), 2).unwrap());
    }

    #[test]
    fn r_hued_rejects_partial_input() {
        let p3 = Graph::path(3);
        assert!(is_r_hued(&p3, &coloring(&[1, 0, 1], 2), 2).is_err());
    }

    #[test]
    fn partial_r_hued_examples() {
        let g = Graph::petersen();
        let empty = PartialColoring::new(10, 4);
        assert!(is_partial_r_hued(&g, &empty, 3).unwrap());

        let p3 = Graph::path(3);
        assert!(!is_partial_r_hued(&p3, &coloring(&[1, 0, 1], 2), 2).unwrap());
        assert!(is_partial_r_hued(&p3, &coloring(&[1, 0, 2], 2), 2).unwrap());
    }

    #[test]
    fn weak_strong_split_examples() {
        let star = Graph::star(3);
        let all_uncolored = PartialColoring::new(4, 4);
        let (weak, strong) = weak_strong_split(&star, &all_uncolored, 2, 0);
        assert_eq!(weak, vec![1, 2, 3]);
        assert!(strong.is_empty());

        // Leaves colored 1, 2, 3: from a leaf's view the center is strong.
        let phi = coloring(&[0, 1, 2, 3], 4);
        let (weak, strong) = weak_strong_split(&star, &phi, 2, 1);
        assert!(weak.is_empty());
        assert_eq!(strong, vec![0]);

        let p3 = Graph::path(3);
        let phi = coloring(&[1, 0, 0], 2);
        let (weak, strong) = weak_strong_split(&p3, &phi, 2, 0);
        assert_eq!(weak, vec![1]);
        assert!(strong.is_empty());
    }

    #[test]
    fn rainbow_invariant_examples() {
        let star = Graph::star(3);
        assert!(rainbow_invariant_holds(&star, &coloring(&[0, 1, 2, 3], 3), 3));
        assert!(!rainbow_invariant_holds(&star, &coloring(&[0, 1, 1, 0], 3), 3));
        // With more than r colored neighbors the invariant does not apply.
        assert!(rainbow_invariant_holds(&star, &coloring(&[0, 1, 1, 2], 3), 2));
    }

    #[test]
    fn coloring_doc_round_trip() {
        let phi = coloring(&[1, 0, 2], 5);
        let doc = ColoringDoc::new(&phi, 2);
        let json = doc.to_json();
        assert_eq!(json, r#"{"r":2,"palette_size":5,"colors":[1,null,2]}"#);
        let back = ColoringDoc::from_json(&json).unwrap();
        assert_eq!(back.coloring().unwrap(), phi);
        assert_eq!(back.r, 2);
    }

    #[test]
    fn compacted_renumbers_colors() {
        let phi = coloring(&[7, 0, 3, 7], 9);
        let compact = phi.compacted();
        assert_eq!(compact.colors(), &[Some(2), None, Some(1), Some(2)]);
        assert_eq!(compact.palette_size(), 2);
    }

    #[test]
    #[should_panic]
    fn assign_outside_palette_panics() {
        let mut phi = PartialColoring::new(3, 2);
        phi.assign(0, 3);
    }
}
