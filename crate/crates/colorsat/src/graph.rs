//! Edge-colored and plain graph representations.
//!
//! Vertices are `0..n`, colors are `1..=t`. Adjacency is stored per color as
//! flat `u64` bitset rows so that neighborhood intersections (the inner loop of
//! every saturation and triangle test) are word-parallel.

use std::fmt;

use crate::bitset::{self, AndIter, BitIter};
use crate::{Error, Result};

/// An edge color. Colors are 1-based; `0` is reserved for "no edge" in
/// encodings and `255` for internal markers.
pub type Color = u8;

pub(crate) const MAX_PALETTE: usize = 254;

/// A simple graph with a `t`-edge-coloring.
///
/// Values are immutable as far as shared use is concerned: the mutating
/// methods take `&mut self` and are meant for single-owner builders, while
/// [`EdgeColoredGraph::with_edge`] returns a new value. Either way two graphs
/// compare equal iff they have identical labeled colored edge sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoredGraph {
    n: usize,
    t: usize,
    words: usize,
    /// Row layout: `(v * (t + 1) + slot) * words`, slot 0 is the union
    /// adjacency of `v`, slot `c` (1-based) the color-`c` adjacency.
    bits: Vec<u64>,
    edge_count: usize,
}

impl EdgeColoredGraph {
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if t == 0 || t > MAX_PALETTE {
            return Err(Error::Parameter(format!(
                "palette size {t} outside 1..={MAX_PALETTE}"
            )));
        }
        let words = bitset::words_for(n.max(1));
        Ok(EdgeColoredGraph {
            n,
            t,
            words,
            bits: vec![0; n * (t + 1) * words],
            edge_count: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    fn row_range(&self, v: usize, slot: usize) -> std::ops::Range<usize> {
        let start = (v * (self.t + 1) + slot) * self.words;
        start..start + self.words
    }

    /// Union adjacency row of `v` (all colors).
    #[inline]
    pub(crate) fn adj_row(&self, v: usize) -> &[u64] {
        &self.bits[self.row_range(v, 0)]
    }

    /// Color-`c` adjacency row of `v`.
    #[inline]
    pub(crate) fn color_row(&self, v: usize, c: Color) -> &[u64] {
        &self.bits[self.row_range(v, c as usize)]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    fn check_color(&self, c: Color) -> Result<()> {
        if c == 0 || c as usize > self.t {
            Err(Error::PaletteOutOfRange(c, self.t))
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && bitset::test_bit(self.adj_row(u), v)
    }

    /// Color of the edge `uv`, or `None` if `uv` is not an edge.
    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        if !self.has_edge(u, v) {
            return None;
        }
        (1..=self.t as Color).find(|&c| bitset::test_bit(self.color_row(u, c), v))
    }

    pub fn add_edge(&mut self, u: usize, v: usize, c: Color) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_color(c)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let slot = c as usize;
        for (a, b) in [(u, v), (v, u)] {
            let r = self.row_range(a, 0);
            bitset::set_bit(&mut self.bits[r], b);
            let r = self.row_range(a, slot);
            bitset::set_bit(&mut self.bits[r], b);
        }
        self.edge_count += 1;
        Ok(())
    }

    /// Removes the edge `uv` and returns its color.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<Color> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let c = self
            .color_of(u, v)
            .ok_or(Error::MissingEdge(u.min(v), u.max(v)))?;
        let slot = c as usize;
        for (a, b) in [(u, v), (v, u)] {
            let r = self.row_range(a, 0);
            bitset::clear_bit(&mut self.bits[r], b);
            let r = self.row_range(a, slot);
            bitset::clear_bit(&mut self.bits[r], b);
        }
        self.edge_count -= 1;
        Ok(c)
    }

    /// Value-semantic edge addition: returns a new graph with `uv` colored `c`.
    pub fn with_edge(&self, u: usize, v: usize, c: Color) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v, c)?;
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count_ones(self.adj_row(v))
    }

    pub fn color_degree(&self, v: usize, c: Color) -> usize {
        bitset::count_ones(self.color_row(v, c))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.adj_row(v))
    }

    pub fn color_neighbors(&self, v: usize, c: Color) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.color_row(v, c))
    }

    pub fn common_neighbors<'a>(&'a self, u: usize, v: usize) -> impl Iterator<Item = usize> + 'a {
        AndIter::new(self.adj_row(u), self.adj_row(v))
    }

    /// Edges as `(u, v, color)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize, Color)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v, self.color_of(u, v).unwrap()));
                }
            }
        }
        out
    }

    /// Non-edges as `(u, v)` with `u < v`, ascending.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Largest color value appearing on any edge (0 if edgeless).
    pub fn max_color_used(&self) -> Color {
        for c in (1..=self.t as Color).rev() {
            if (0..self.n).any(|v| !self.color_row(v, c).iter().all(|&w| w == 0)) {
                return c;
            }
        }
        0
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The partition of `N(v)` by edge color.
    pub fn color_neighborhood(&self, v: usize) -> Result<ColorNeighborhood> {
        self.check_vertex(v)?;
        let classes = (1..=self.t as Color)
            .map(|c| self.color_neighbors(v, c).collect())
            .collect();
        Ok(ColorNeighborhood { vertex: v, classes })
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Parameter("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::Parameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut g = EdgeColoredGraph::new(self.n, self.t)?;
        for (u, v, c) in self.edges() {
            g.add_edge(perm[u], perm[v], c)?;
        }
        Ok(g)
    }

    /// Applies a palette permutation: color `c` becomes `palette[c - 1]`.
    pub fn recolor(&self, palette: &[Color]) -> Result<Self> {
        if palette.len() != self.t {
            return Err(Error::Parameter("palette permutation length mismatch".into()));
        }
        let mut g = EdgeColoredGraph::new(self.n, self.t)?;
        for (u, v, c) in self.edges() {
            g.add_edge(u, v, palette[c as usize - 1])?;
        }
        Ok(g)
    }

    /// Forgets colors.
    pub fn to_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (u, v, _) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    /// The uncolored complement.
    pub fn complement_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (u, v) in self.non_edges() {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    /// Parses the `.ecg` interchange format.
    ///
    /// Line 1 is `ecg <n> <t>`; each edge is `e <u> <v> <c>` with
    /// `0 <= u < v < n` and `1 <= c <= t`. Lines starting with `#` and blank
    /// lines are ignored. Duplicate pairs are rejected.
    pub fn parse_ecg(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        if it.next() != Some("ecg") {
            return Err(Error::Parse("expected header `ecg <n> <t>`".into()));
        }
        let n: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad vertex count".into()))?;
        let t: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad palette size".into()))?;
        if it.next().is_some() {
            return Err(Error::Parse("trailing tokens in header".into()));
        }
        let mut g = EdgeColoredGraph::new(n, t)?;
        for line in lines {
            let mut it = line.split_whitespace();
            if it.next() != Some("e") {
                return Err(Error::Parse(format!("expected edge line, got `{line}`")));
            }
            let mut field = |name: &str| -> Result<usize> {
                it.next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad {name} in `{line}`")))
            };
            let u = field("endpoint")?;
            let v = field("endpoint")?;
            let c = field("color")?;
            if u >= v {
                return Err(Error::Parse(format!("edge `{line}` must have u < v")));
            }
            if c == 0 || c > t {
                return Err(Error::PaletteOutOfRange(c.min(255) as Color, t));
            }
            g.add_edge(u, v, c as Color)?;
        }
        Ok(g)
    }

    /// Writes the `.ecg` format, edges sorted by `(u, v)`.
    pub fn write_ecg(&self) -> String {
        let mut s = format!("ecg {} {}\n", self.n, self.t);
        for (u, v, c) in self.edges() {
            s.push_str(&format!("e {u} {v} {c}\n"));
        }
        s
    }
}

impl fmt::Display for EdgeColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.write_ecg())
    }
}

impl fmt::Debug for EdgeColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoredGraph(n={}, t={}, {:?})", self.n, self.t, self.edges())
    }
}

impl serde::Serialize for EdgeColoredGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.write_ecg())
    }
}

/// The per-color partition of a vertex neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorNeighborhood {
    vertex: usize,
    classes: Vec<Vec<usize>>,
}

impl ColorNeighborhood {
    pub fn vertex(&self) -> usize {
        self.vertex
    }

    /// Vertices joined to the base vertex by color `c`.
    pub fn class(&self, c: Color) -> &[usize] {
        &self.classes[c as usize - 1]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn degree(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// An uncolored simple graph. Used for family hosts, cover targets and
/// degree-sequence realizations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = bitset::words_for(n.max(1));
        SimpleGraph {
            n,
            words,
            bits: vec![0; n * words],
            edge_count: 0,
        }
    }

    pub fn complete(k: usize) -> Self {
        let mut g = SimpleGraph::new(k);
        for u in 0..k {
            for v in u + 1..k {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// The star `K_{1,s}`: center 0, leaves `1..=s`.
    pub fn star(s: usize) -> Self {
        let mut g = SimpleGraph::new(s + 1);
        for v in 1..=s {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    /// The path on `k` vertices.
    pub fn path(k: usize) -> Self {
        let mut g = SimpleGraph::new(k);
        for v in 1..k {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    /// `m` disjoint copies of `K_k`.
    pub fn disjoint_cliques(m: usize, k: usize) -> Self {
        let mut g = SimpleGraph::new(m * k);
        for b in 0..m {
            for u in 0..k {
                for v in u + 1..k {
                    g.add_edge(b * k + u, b * k + v).unwrap();
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub(crate) fn adj_row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && bitset::test_bit(self.adj_row(u), v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        bitset::set_bit(&mut self.bits[u * self.words..(u + 1) * self.words], v);
        bitset::set_bit(&mut self.bits[v * self.words..(v + 1) * self.words], u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        bitset::clear_bit(&mut self.bits[u * self.words..(u + 1) * self.words], v);
        bitset::clear_bit(&mut self.bits[v * self.words..(v + 1) * self.words], u);
        self.edge_count -= 1;
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count_ones(self.adj_row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.adj_row(v))
    }

    pub fn common_neighbors<'a>(&'a self, u: usize, v: usize) -> impl Iterator<Item = usize> + 'a {
        AndIter::new(self.adj_row(u), self.adj_row(v))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (u, v) in self.non_edges() {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// All edges colored 1, palette `t`.
    pub fn to_colored(&self, t: usize) -> Result<EdgeColoredGraph> {
        let mut g = EdgeColoredGraph::new(self.n, t)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    /// Reads a `.ecg` file as an uncolored host (colors ignored).
    pub fn parse_ecg_ignore_colors(text: &str) -> Result<Self> {
        Ok(EdgeColoredGraph::parse_ecg(text)?.to_simple())
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, {:?})", self.n, self.edges())
    }
}
