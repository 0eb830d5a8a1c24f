//! Canonical forms for colored graphs under vertex permutation, optionally
//! also under permutation of the palette.
//!
//! The canonical key is computed by iterative partition refinement on
//! color-aware degree profiles, followed by backtracking over the vertices of
//! the first non-singleton cell (individualize, re-refine, recurse). Among all
//! discrete orderings reached this way the lexicographically least adjacency
//! encoding wins. In palette mode the encoding relabels the colors that
//! actually occur by first use, which equals minimizing over all permutations
//! of the used colors; unused colors never participate.
//!
//! Cost is exponential in the size of the automorphism group, so this is meant
//! for the small graphs handled by the search module, not for the large
//! constructed graphs.

use std::collections::BTreeMap;

use crate::graph::{EdgeColoredGraph, SimpleGraph};

/// Marker value for a distinguished edge; never a real color.
pub(crate) const MARK: u8 = 255;

/// Which permutations identify two graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonMode {
    /// Vertex relabelings only; colors are fixed.
    Vertex,
    /// Vertex relabelings combined with permutations of the palette.
    VertexAndPalette,
}

/// A byte string equal for two graphs iff they are isomorphic in the chosen
/// mode.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalKey({:02x?})", self.0)
    }
}

/// Canonical key of `g` in the given mode.
pub fn canonical_key(g: &EdgeColoredGraph, mode: CanonMode) -> CanonicalKey {
    Canonizer::from_graph(g, mode, None).key()
}

/// Canonical key of `g` with one edge distinguished. Two marked graphs get
/// equal keys iff some isomorphism (in the mode's group) maps one marked edge
/// to the other, which is the orbit test used by canonical augmentation.
pub(crate) fn canonical_key_marked(
    g: &EdgeColoredGraph,
    mode: CanonMode,
    mark: (usize, usize),
) -> CanonicalKey {
    Canonizer::from_graph(g, mode, Some(mark)).key()
}

/// Canonical key plus a vertex order realizing it (`order[i]` is the original
/// vertex placed at canonical position `i`).
pub(crate) fn canonical_form(g: &EdgeColoredGraph, mode: CanonMode) -> (CanonicalKey, Vec<usize>) {
    Canonizer::from_graph(g, mode, None).form()
}

/// The designated deletion edge: the edge occupying the last nonzero slot of
/// the canonical encoding, pulled back to original labels. `None` on edgeless
/// graphs. Well-defined on isomorphism classes up to automorphism.
pub(crate) fn canonical_deletion_edge(
    g: &EdgeColoredGraph,
    mode: CanonMode,
) -> Option<(usize, usize)> {
    let n = g.n();
    let c = Canonizer::from_graph(g, mode, None);
    let (enc, order) = c.run();
    let pos = enc.iter().rposition(|&b| b != 0)?;
    // Invert the row-major upper-triangle slot index.
    let mut p = pos;
    for i in 0..n {
        let row = n - 1 - i;
        if p < row {
            let (u, v) = (order[i], order[i + 1 + p]);
            return Some((u.min(v), u.max(v)));
        }
        p -= row;
    }
    unreachable!("slot index out of range");
}

/// Canonical key of an uncolored graph (vertex mode, single color).
pub fn canonical_key_simple(g: &SimpleGraph) -> CanonicalKey {
    canonical_key(&g.to_colored(1).expect("t=1 is valid"), CanonMode::Vertex)
}

struct Canonizer {
    n: usize,
    t: usize,
    mode: CanonMode,
    mat: Vec<u8>,
}

impl Canonizer {
    fn from_graph(g: &EdgeColoredGraph, mode: CanonMode, mark: Option<(usize, usize)>) -> Self {
        let n = g.n();
        let mut mat = vec![0u8; n * n];
        for (u, v, c) in g.edges() {
            mat[u * n + v] = c;
            mat[v * n + u] = c;
        }
        if let Some((u, v)) = mark {
            debug_assert!(g.has_edge(u, v), "marked pair must be an edge");
            mat[u * n + v] = MARK;
            mat[v * n + u] = MARK;
        }
        Canonizer {
            n,
            t: g.t(),
            mode,
            mat,
        }
    }

    fn key(&self) -> CanonicalKey {
        CanonicalKey(self.assemble(self.run().0))
    }

    fn form(&self) -> (CanonicalKey, Vec<usize>) {
        let (enc, order) = self.run();
        (CanonicalKey(self.assemble(enc)), order)
    }

    fn assemble(&self, enc: Vec<u8>) -> Vec<u8> {
        let mut bytes = Vec::with_capacity(6 + enc.len());
        bytes.push(match self.mode {
            CanonMode::Vertex => 0,
            CanonMode::VertexAndPalette => 1,
        });
        bytes.extend_from_slice(&(self.n as u32).to_le_bytes());
        bytes.push(self.t as u8);
        bytes.extend_from_slice(&enc);
        bytes
    }

    /// Returns the minimal encoding and a vertex order achieving it.
    fn run(&self) -> (Vec<u8>, Vec<usize>) {
        if self.n == 0 {
            return (Vec::new(), Vec::new());
        }
        let cells = vec![(0..self.n).collect::<Vec<usize>>()];
        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        self.search(cells, &mut best);
        best.expect("at least one leaf")
    }

    fn search(&self, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
        self.refine(&mut cells);
        match cells.iter().position(|c| c.len() > 1) {
            Some(ci) => {
                let members = cells[ci].clone();
                for &v in &members {
                    let mut next = cells.clone();
                    next[ci] = vec![v];
                    next.insert(
                        ci + 1,
                        members.iter().copied().filter(|&u| u != v).collect(),
                    );
                    self.search(next, best);
                }
            }
            None => {
                let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let enc = self.encode(&order);
                let better = match best {
                    None => true,
                    Some((b, _)) => enc < *b,
                };
                if better {
                    *best = Some((enc, order));
                }
            }
        }
    }

    /// Splits cells by color-aware neighborhood profiles until stable. Cell
    /// order stays canonical: groups are ordered by their profile value inside
    /// each parent cell.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let ncells = cells.len();
            let keys: Vec<Vec<u32>> = (0..self.n)
                .map(|v| self.vertex_profile(v, &cell_of, ncells))
                .collect();
            let mut new_cells: Vec<Vec<usize>> = Vec::with_capacity(ncells);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    new_cells.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<&Vec<u32>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    groups.entry(&keys[v]).or_default().push(v);
                }
                if groups.len() > 1 {
                    split = true;
                }
                for (_, members) in groups {
                    new_cells.push(members);
                }
            }
            *cells = new_cells;
            if !split {
                return;
            }
        }
    }

    /// Per-vertex invariant: counts of neighbors by (color slot, cell). In
    /// palette mode the per-color rows are sorted so the profile is invariant
    /// under palette permutation; the marker row stays fixed.
    fn vertex_profile(&self, v: usize, cell_of: &[usize], ncells: usize) -> Vec<u32> {
        let mut rows = vec![vec![0u32; ncells]; self.t + 1];
        for u in 0..self.n {
            let m = self.mat[v * self.n + u];
            if m == 0 {
                continue;
            }
            let slot = if m == MARK { self.t } else { (m - 1) as usize };
            rows[slot][cell_of[u]] += 1;
        }
        if self.mode == CanonMode::VertexAndPalette {
            let mark_row = rows.pop().expect("mark row");
            rows.sort_unstable();
            rows.push(mark_row);
        }
        rows.concat()
    }

    /// Upper-triangle adjacency encoding in the given order. Palette mode
    /// relabels real colors by first occurrence; 0 and the marker are fixed.
    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        let mut map = [0u8; 256];
        let mut next: u8 = 1;
        for i in 0..n {
            for j in i + 1..n {
                let m = self.mat[order[i] * n + order[j]];
                let v = match self.mode {
                    CanonMode::Vertex => m,
                    CanonMode::VertexAndPalette => {
                        if m == 0 || m == MARK {
                            m
                        } else {
                            let idx = m as usize;
                            if map[idx] == 0 {
                                map[idx] = next;
                                next += 1;
                            }
                            map[idx]
                        }
                    }
                };
                out.push(v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color;

    fn triangle(colors: [Color; 3], t: usize) -> EdgeColoredGraph {
        let mut g = EdgeColoredGraph::new(3, t).unwrap();
        g.add_edge(0, 1, colors[0]).unwrap();
        g.add_edge(1, 2, colors[1]).unwrap();
        g.add_edge(0, 2, colors[2]).unwrap();
        g
    }

    #[test]
    fn relabeled_triangles_share_keys() {
        let g = triangle([1, 1, 2], 2);
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(
            canonical_key(&g, CanonMode::Vertex),
            canonical_key(&h, CanonMode::Vertex)
        );
    }

    #[test]
    fn palette_mode_identifies_color_swaps() {
        let g = triangle([1, 1, 2], 2);
        let h = triangle([2, 2, 1], 2);
        assert_ne!(
            canonical_key(&g, CanonMode::Vertex),
            canonical_key(&h, CanonMode::Vertex)
        );
        assert_eq!(
            canonical_key(&g, CanonMode::VertexAndPalette),
            canonical_key(&h, CanonMode::VertexAndPalette)
        );
    }

    #[test]
    fn distinct_color_multisets_stay_distinct() {
        let g = triangle([1, 1, 2], 3);
        let h = triangle([1, 2, 3], 3);
        for mode in [CanonMode::Vertex, CanonMode::VertexAndPalette] {
            assert_ne!(canonical_key(&g, mode), canonical_key(&h, mode));
        }
    }

    #[test]
    fn deletion_edge_is_an_edge() {
        let mut g = EdgeColoredGraph::new(4, 2).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 2).unwrap();
        g.add_edge(2, 3, 1).unwrap();
        let (u, v) = canonical_deletion_edge(&g, CanonMode::Vertex).unwrap();
        assert!(g.has_edge(u, v));
        let empty = EdgeColoredGraph::new(3, 2).unwrap();
        assert!(canonical_deletion_edge(&empty, CanonMode::Vertex).is_none());
    }

    #[test]
    fn deletion_edge_orbit_is_label_independent() {
        let mut g = EdgeColoredGraph::new(5, 2).unwrap();
        for (u, v, c) in [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 2), (0, 4, 1)] {
            g.add_edge(u, v, c).unwrap();
        }
        let del = canonical_deletion_edge(&g, CanonMode::Vertex).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let h = g.relabel(&perm).unwrap();
        let del_h = canonical_deletion_edge(&h, CanonMode::Vertex).unwrap();
        // The two designated edges correspond under the relabeling up to
        // automorphism: their marked keys agree.
        let back = (perm[del.0].min(perm[del.1]), perm[del.0].max(perm[del.1]));
        assert_eq!(
            canonical_key_marked(&h, CanonMode::Vertex, back),
            canonical_key_marked(&h, CanonMode::Vertex, del_h)
        );
    }

    #[test]
    fn key_round_trips_structure() {
        // Same key implies same edge count and degree sequence; spot check a
        // pair of non-isomorphic graphs with equal degree sequences.
        let mut c6 = EdgeColoredGraph::new(6, 1).unwrap();
        for v in 0..6 {
            c6.add_edge(v, (v + 1) % 6, 1).unwrap();
        }
        let mut two_triangles = EdgeColoredGraph::new(6, 1).unwrap();
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            two_triangles.add_edge(u, v, 1).unwrap();
        }
        assert_eq!(c6.degree_sequence(), two_triangles.degree_sequence());
        assert_ne!(
            canonical_key(&c6, CanonMode::Vertex),
            canonical_key(&two_triangles, CanonMode::Vertex)
        );
    }
}
