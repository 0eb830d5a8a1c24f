//! Forbidden families of edge-colored graphs: every copy of a host graph `H`
//! whose edges use exactly `r` distinct colors. Monochromatic and rainbow
//! families are the `r = 1` and `r = e(H)` special cases.

use std::fmt;

use crate::graph::{Color, EdgeColoredGraph, SimpleGraph};
use crate::{choose2, Error, Result};

/// How many distinct colors a copy of the host must carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorRule {
    Monochromatic,
    Rainbow,
    ExactlyColors(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum HostKind {
    Triangle,
    /// `K_{1,s}` with this many leaves; center precomputed.
    Star(usize),
    Other,
}

/// A forbidden family: colorings of a fixed host graph using exactly `r`
/// colors. Invariant under vertex relabeling and palette permutation.
#[derive(Clone, Debug)]
pub struct ForbiddenFamily {
    host: SimpleGraph,
    rule: ColorRule,
    r: usize,
    kind: HostKind,
    literal: String,
}

impl ForbiddenFamily {
    pub fn new(host: SimpleGraph, rule: ColorRule) -> Result<Self> {
        let e = host.edge_count();
        if e == 0 {
            return Err(Error::Parameter("host graph has no edges".into()));
        }
        let r = match rule {
            ColorRule::Monochromatic => 1,
            ColorRule::Rainbow => e,
            ColorRule::ExactlyColors(r) => r,
        };
        if r == 0 || r > e {
            return Err(Error::Parameter(format!(
                "color count {r} outside 1..={e} for this host"
            )));
        }
        let kind = classify_host(&host);
        let literal = format!("{}({})", rule_prefix(rule, r), describe_host(&host));
        Ok(ForbiddenFamily {
            host,
            rule,
            r,
            kind,
            literal,
        })
    }

    pub fn mono(host: SimpleGraph) -> Result<Self> {
        Self::new(host, ColorRule::Monochromatic)
    }

    pub fn rainbow(host: SimpleGraph) -> Result<Self> {
        Self::new(host, ColorRule::Rainbow)
    }

    pub fn exactly(host: SimpleGraph, r: usize) -> Result<Self> {
        Self::new(host, ColorRule::ExactlyColors(r))
    }

    /// Parses a family literal such as `mono(K3)`, `exact2(K3)`,
    /// `exact3(K1,3)`, `rainbow(3K2)` or `mono(P4)`. A host token ending in
    /// `.ecg` is read from that file with colors ignored.
    pub fn parse(literal: &str) -> Result<Self> {
        let lit = literal.trim();
        let open = lit
            .find('(')
            .ok_or_else(|| Error::Parse(format!("family literal `{lit}` missing `(`")))?;
        if !lit.ends_with(')') {
            return Err(Error::Parse(format!("family literal `{lit}` missing `)`")));
        }
        let rule_str = &lit[..open];
        let host_str = &lit[open + 1..lit.len() - 1];
        let host = parse_host(host_str)?;
        let rule = if rule_str == "mono" {
            ColorRule::Monochromatic
        } else if rule_str == "rainbow" {
            ColorRule::Rainbow
        } else if let Some(digits) = rule_str.strip_prefix("exact") {
            let r: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad color count in `{lit}`")))?;
            ColorRule::ExactlyColors(r)
        } else {
            return Err(Error::Parse(format!("unknown rule `{rule_str}`")));
        };
        let mut fam = Self::new(host, rule)?;
        fam.literal = lit.to_string();
        Ok(fam)
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn rule(&self) -> ColorRule {
        self.rule
    }

    /// The exact number of distinct colors each member carries.
    pub fn required_colors(&self) -> usize {
        self.r
    }

    pub fn literal(&self) -> &str {
        &self.literal
    }

    /// Does `g` contain a member as a colored subgraph? Dispatches to the
    /// triangle and star fast paths; use [`ForbiddenFamily::find_member`] for
    /// the generic matcher and a witness embedding.
    pub fn contains_member(&self, g: &EdgeColoredGraph) -> bool {
        match self.kind {
            HostKind::Triangle => self.triangle_contains(g),
            HostKind::Star(s) => self.star_contains(g, s),
            HostKind::Other => self.find_member(g).is_some(),
        }
    }

    /// Generic backtracking search; returns an embedding witness.
    pub fn find_member(&self, g: &EdgeColoredGraph) -> Option<Embedding> {
        Matcher::new(g, &self.host, self.r).search(None)
    }

    /// Would adding `uv` in color `c` create a member? Only embeddings using
    /// the new edge are searched.
    pub fn creates_member_on_add(
        &self,
        g: &EdgeColoredGraph,
        u: usize,
        v: usize,
        c: Color,
    ) -> Result<bool> {
        if g.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        match self.kind {
            HostKind::Triangle => {
                if c == 0 || c as usize > g.t() {
                    return Err(Error::PaletteOutOfRange(c, g.t()));
                }
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                if u >= g.n() || v >= g.n() {
                    return Err(Error::VertexOutOfRange(u.max(v), g.n()));
                }
                Ok(self.covered_colors_k3(g, u, v) >> c & 1 == 1)
            }
            HostKind::Star(s) => {
                if c == 0 || c as usize > g.t() {
                    return Err(Error::PaletteOutOfRange(c, g.t()));
                }
                if u >= g.n() || v >= g.n() {
                    return Err(Error::VertexOutOfRange(u.max(v), g.n()));
                }
                Ok(self.star_creates_at(g, u, c, s) || self.star_creates_at(g, v, c, s))
            }
            HostKind::Other => {
                let g2 = g.with_edge(u, v, c)?;
                Ok(self.find_member_through(&g2, u, v).is_some())
            }
        }
    }

    /// Generic matcher restricted to embeddings mapping some host edge onto
    /// the (existing) edge `uv` of `g`.
    pub fn find_member_through(
        &self,
        g: &EdgeColoredGraph,
        u: usize,
        v: usize,
    ) -> Option<Embedding> {
        debug_assert!(g.has_edge(u, v));
        let host_edges = self.host.edges();
        for &(a, b) in &host_edges {
            for (ha, hb) in [(a, b), (b, a)] {
                if let Some(e) = Matcher::new(g, &self.host, self.r).search(Some((ha, hb, u, v))) {
                    return Some(e);
                }
            }
        }
        None
    }

    /// Bitmask (bit `c` set for color `c`) of colors whose addition on the
    /// non-edge `uv` creates a member, for the triangle host.
    pub(crate) fn covered_colors_k3(&self, g: &EdgeColoredGraph, u: usize, v: usize) -> u64 {
        debug_assert!(matches!(self.kind, HostKind::Triangle));
        let t = g.t();
        let full: u64 = mask_all(t);
        let mut covered: u64 = 0;
        for w in g.common_neighbors(u, v) {
            let a = g.color_of(u, w).unwrap();
            let b = g.color_of(w, v).unwrap();
            covered |= match self.r {
                1 => {
                    if a == b {
                        1u64 << a
                    } else {
                        0
                    }
                }
                2 => {
                    if a == b {
                        full & !(1u64 << a)
                    } else {
                        (1u64 << a) | (1u64 << b)
                    }
                }
                3 => {
                    if a != b {
                        full & !(1u64 << a) & !(1u64 << b)
                    } else {
                        0
                    }
                }
                _ => unreachable!("triangle host has at most 3 edges"),
            };
            if covered == full {
                break;
            }
        }
        covered
    }

    /// Does adding an edge of color `c` at `center` complete a star member
    /// there? Checks whether `s - 1` existing edges at `center` can join the
    /// new edge to form a star with exactly `r` distinct colors.
    fn star_creates_at(&self, g: &EdgeColoredGraph, center: usize, c: Color, s: usize) -> bool {
        let r = self.r;
        if s < r {
            return false;
        }
        let t = g.t();
        let c_count = g.color_degree(center, c);
        let mut others: Vec<usize> = (1..=t as Color)
            .filter(|&col| col != c)
            .map(|col| g.color_degree(center, col))
            .filter(|&d| d > 0)
            .collect();
        others.sort_unstable_by(|a, b| b.cmp(a));
        if others.len() < r - 1 {
            return false;
        }
        let top: usize = others.iter().take(r - 1).sum();
        c_count + top >= s - 1
    }

    fn triangle_contains(&self, g: &EdgeColoredGraph) -> bool {
        for (u, v, cuv) in g.edges() {
            for w in g.common_neighbors(u, v) {
                if w <= v {
                    continue;
                }
                let a = g.color_of(u, w).unwrap();
                let b = g.color_of(v, w).unwrap();
                if distinct3(cuv, a, b) == self.r {
                    return true;
                }
            }
        }
        false
    }

    fn star_contains(&self, g: &EdgeColoredGraph, s: usize) -> bool {
        let r = self.r;
        if s < r {
            return false;
        }
        let t = g.t();
        (0..g.n()).any(|v| {
            let mut counts: Vec<usize> = (1..=t as Color)
                .map(|c| g.color_degree(v, c))
                .filter(|&d| d > 0)
                .collect();
            if counts.len() < r {
                return false;
            }
            counts.sort_unstable_by(|a, b| b.cmp(a));
            counts.iter().take(r).sum::<usize>() >= s
        })
    }

    /// Decides whether every member has, for every member edge `uv`, a 2-edge
    /// path from `u` to `v` inside the member whose edges get distinct colors.
    ///
    /// For complete hosts `K_k` this is the counting criterion
    /// `r >= C(k-1,2) + 2`; for other hosts every member is checked (members
    /// are enumerated up to palette permutation as partitions of `E(H)` into
    /// exactly `r` classes), guarded at `e(H) <= 12`.
    pub fn member_edges_have_rainbow_path(&self) -> Result<bool> {
        let h = &self.host;
        let k = h.n();
        if h.edge_count() == choose2(k) && k >= 2 {
            return Ok(self.r >= choose2(k - 1) + 2);
        }
        let edges = h.edges();
        let m = edges.len();
        if m > 12 {
            return Err(Error::HostTooLarge(m, 12));
        }
        // For each host edge, the pairs of edge indices forming a 2-path
        // between its endpoints inside H.
        let index_of = |a: usize, b: usize| edges.iter().position(|&(x, y)| (x, y) == (a.min(b), a.max(b)));
        let mut paths: Vec<Vec<(usize, usize)>> = Vec::with_capacity(m);
        for &(a, b) in &edges {
            let mut list = Vec::new();
            for x in h.common_neighbors(a, b) {
                list.push((index_of(a, x).unwrap(), index_of(x, b).unwrap()));
            }
            paths.push(list);
        }
        // Any edge with no 2-path at all fails in every member.
        if paths.iter().any(Vec::is_empty) {
            return Ok(false);
        }
        let ok = for_each_partition(m, self.r, &mut |block| {
            // `block[i]` is the color class of edge i; require every edge to
            // have a bichromatic 2-path.
            (0..m).all(|e| paths[e].iter().any(|&(i, j)| block[i] != block[j]))
        });
        Ok(ok)
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal)
    }
}

/// A witness embedding: `map[h]` is the image of host vertex `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding(pub Vec<usize>);

/// Is there a vertex `x` with `ux` and `xv` edges of distinct colors?
pub fn rainbow_two_path_exists(g: &EdgeColoredGraph, u: usize, v: usize) -> bool {
    u != v
        && g.common_neighbors(u, v)
            .any(|x| g.color_of(u, x) != g.color_of(x, v))
}

#[inline]
pub(crate) fn mask_all(t: usize) -> u64 {
    ((1u128 << (t + 1)) - 2) as u64
}

#[inline]
fn distinct3(a: Color, b: Color, c: Color) -> usize {
    1 + usize::from(b != a) + usize::from(c != a && c != b)
}

fn classify_host(h: &SimpleGraph) -> HostKind {
    if h.n() == 3 && h.edge_count() == 3 {
        return HostKind::Triangle;
    }
    if h.n() >= 3 && h.edge_count() == h.n() - 1 {
        // A star has one vertex of full degree and leaves of degree 1.
        if let Some(center) = (0..h.n()).find(|&v| h.degree(v) == h.n() - 1) {
            if (0..h.n()).all(|v| v == center || h.degree(v) == 1) {
                return HostKind::Star(h.n() - 1);
            }
        }
    }
    HostKind::Other
}

fn describe_host(h: &SimpleGraph) -> String {
    let n = h.n();
    let e = h.edge_count();
    if e == choose2(n) && n >= 2 {
        return format!("K{n}");
    }
    if let HostKind::Star(s) = classify_host(h) {
        return format!("K1,{s}");
    }
    // m disjoint copies of K_k?
    for k in 2..=n {
        if n % k == 0 {
            let m = n / k;
            if e == m * choose2(k) && h == &SimpleGraph::disjoint_cliques(m, k) {
                return format!("{m}K{k}");
            }
        }
    }
    if h == &SimpleGraph::path(n) {
        return format!("P{n}");
    }
    format!("host(n={n},e={e})")
}

fn parse_host(s: &str) -> Result<SimpleGraph> {
    let s = s.trim();
    if s.ends_with(".ecg") {
        let text = std::fs::read_to_string(s)?;
        return SimpleGraph::parse_ecg_ignore_colors(&text);
    }
    let parse_num = |d: &str, what: &str| -> Result<usize> {
        d.parse()
            .map_err(|_| Error::Parse(format!("bad {what} in host `{s}`")))
    };
    if let Some(rest) = s.strip_prefix('K') {
        if let Some((a, b)) = rest.split_once(',') {
            if parse_num(a, "star")? != 1 {
                return Err(Error::Parse(format!("host `{s}`: only K1,s stars supported")));
            }
            let leaves = parse_num(b, "leaf count")?;
            if leaves == 0 {
                return Err(Error::Parse("star needs at least one leaf".into()));
            }
            return Ok(SimpleGraph::star(leaves));
        }
        let k = parse_num(rest, "clique size")?;
        if k < 2 {
            return Err(Error::Parse("complete host needs k >= 2".into()));
        }
        return Ok(SimpleGraph::complete(k));
    }
    if let Some(rest) = s.strip_prefix('P') {
        let k = parse_num(rest, "path length")?;
        if k < 2 {
            return Err(Error::Parse("path host needs k >= 2".into()));
        }
        return Ok(SimpleGraph::path(k));
    }
    if let Some(pos) = s.find('K') {
        let m = parse_num(&s[..pos], "copy count")?;
        let k = parse_num(&s[pos + 1..], "clique size")?;
        if m == 0 || k < 2 {
            return Err(Error::Parse(format!("bad disjoint-clique host `{s}`")));
        }
        return Ok(SimpleGraph::disjoint_cliques(m, k));
    }
    Err(Error::Parse(format!("unrecognized host `{s}`")))
}

/// Calls `visit` for every partition of `0..m` into exactly `r` nonempty
/// blocks (restricted growth strings). Returns false as soon as `visit` does.
fn for_each_partition(m: usize, r: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if r > m {
        return true; // no members at all
    }
    let mut block = vec![0usize; m];
    fn rec(
        block: &mut Vec<usize>,
        i: usize,
        used: usize,
        m: usize,
        r: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == m {
            return used != r || visit(block);
        }
        // Not enough positions left to open the remaining blocks.
        if r - used > m - i {
            return true;
        }
        let limit = (used + 1).min(r);
        for b in 0..limit {
            block[i] = b;
            let next_used = used.max(b + 1);
            if !rec(block, i + 1, next_used, m, r, visit) {
                return false;
            }
        }
        true
    }
    rec(&mut block, 0, 0, m, r, visit)
}

/// Backtracking colored-subgraph matcher. The host side is tiny, so the order
/// is precomputed greedily: anchored vertices first, then vertices with the
/// most placed neighbors (ties by host degree).
struct Matcher<'a> {
    g: &'a EdgeColoredGraph,
    host: &'a SimpleGraph,
    r: usize,
    host_edge_count: usize,
    /// Distinct colors incident to each G vertex (rainbow prune).
    g_distinct: Vec<usize>,
    /// Largest single color class at each G vertex (mono prune).
    g_max_class: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a EdgeColoredGraph, host: &'a SimpleGraph, r: usize) -> Self {
        let t = g.t();
        let mut g_distinct = vec![0usize; g.n()];
        let mut g_max_class = vec![0usize; g.n()];
        for v in 0..g.n() {
            for c in 1..=t as Color {
                let d = g.color_degree(v, c);
                if d > 0 {
                    g_distinct[v] += 1;
                    g_max_class[v] = g_max_class[v].max(d);
                }
            }
        }
        Matcher {
            g,
            host,
            r,
            host_edge_count: host.edge_count(),
            g_distinct,
            g_max_class,
        }
    }

    /// `anchor` maps host edge `(ha, hb)` onto the G edge `(gu, gv)`.
    fn search(&self, anchor: Option<(usize, usize, usize, usize)>) -> Option<Embedding> {
        let hn = self.host.n();
        if self.g.n() < hn || self.g.edge_count() < self.host_edge_count {
            return None;
        }
        let order = self.assignment_order(anchor.map(|(a, b, _, _)| (a, b)));
        // placed_neighbors[i]: order positions j < i adjacent (in H) to order[i].
        let placed: Vec<Vec<usize>> = (0..hn)
            .map(|i| {
                (0..i)
                    .filter(|&j| self.host.has_edge(order[j], order[i]))
                    .collect()
            })
            .collect();
        let mut map = vec![usize::MAX; hn];
        let mut used = vec![false; self.g.n()];
        let mut counts = vec![0u32; self.g.t() + 1];
        let mut state = MatchState {
            distinct: 0,
            mapped_edges: 0,
        };
        let start = if let Some((_, _, gu, gv)) = anchor {
            if !self.try_place(&order, &placed, 0, gu, &mut map, &mut used, &mut counts, &mut state)
            {
                return None;
            }
            if !self.try_place(&order, &placed, 1, gv, &mut map, &mut used, &mut counts, &mut state)
            {
                self.unplace(&order, &placed, 0, &mut map, &mut used, &mut counts, &mut state);
                return None;
            }
            2
        } else {
            0
        };
        if self.extend(&order, &placed, start, &mut map, &mut used, &mut counts, &mut state) {
            Some(Embedding(map))
        } else {
            None
        }
    }

    fn assignment_order(&self, anchor: Option<(usize, usize)>) -> Vec<usize> {
        let hn = self.host.n();
        let mut order = Vec::with_capacity(hn);
        let mut chosen = vec![false; hn];
        if let Some((a, b)) = anchor {
            order.push(a);
            order.push(b);
            chosen[a] = true;
            chosen[b] = true;
        }
        while order.len() < hn {
            let best = (0..hn)
                .filter(|&v| !chosen[v])
                .max_by_key(|&v| {
                    let attached = order
                        .iter()
                        .filter(|&&u| self.host.has_edge(u, v))
                        .count();
                    (attached, self.host.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            order.push(best);
            chosen[best] = true;
        }
        order
    }

    #[allow(clippy::too_many_arguments)]
    fn try_place(
        &self,
        order: &[usize],
        placed: &[Vec<usize>],
        pos: usize,
        gx: usize,
        map: &mut [usize],
        used: &mut [bool],
        counts: &mut [u32],
        state: &mut MatchState,
    ) -> bool {
        if used[gx] {
            return false;
        }
        let hv = order[pos];
        let hdeg = self.host.degree(hv);
        if self.g.degree(gx) < hdeg {
            return false;
        }
        if self.r == self.host_edge_count && self.g_distinct[gx] < hdeg {
            return false; // rainbow member needs that many distinct colors here
        }
        if self.r == 1 && self.g_max_class[gx] < hdeg {
            return false;
        }
        let mut new_colors: Vec<Color> = Vec::with_capacity(placed[pos].len());
        for &j in &placed[pos] {
            match self.g.color_of(gx, map[order[j]]) {
                Some(c) => new_colors.push(c),
                None => return false,
            }
        }
        for &c in &new_colors {
            if counts[c as usize] == 0 {
                state.distinct += 1;
            }
            counts[c as usize] += 1;
        }
        state.mapped_edges += new_colors.len();
        if state.distinct > self.r
            || state.distinct + (self.host_edge_count - state.mapped_edges) < self.r
        {
            // Roll back the color bookkeeping.
            for &c in &new_colors {
                counts[c as usize] -= 1;
                if counts[c as usize] == 0 {
                    state.distinct -= 1;
                }
            }
            state.mapped_edges -= new_colors.len();
            return false;
        }
        map[hv] = gx;
        used[gx] = true;
        true
    }

    fn unplace(
        &self,
        order: &[usize],
        placed: &[Vec<usize>],
        pos: usize,
        map: &mut [usize],
        used: &mut [bool],
        counts: &mut [u32],
        state: &mut MatchState,
    ) {
        let hv = order[pos];
        let gx = map[hv];
        for &j in &placed[pos] {
            let c = self.g.color_of(gx, map[order[j]]).unwrap();
            counts[c as usize] -= 1;
            if counts[c as usize] == 0 {
                state.distinct -= 1;
            }
            state.mapped_edges -= 1;
        }
        map[hv] = usize::MAX;
        used[gx] = false;
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        order: &[usize],
        placed: &[Vec<usize>],
        pos: usize,
        map: &mut [usize],
        used: &mut [bool],
        counts: &mut [u32],
        state: &mut MatchState,
    ) -> bool {
        if pos == order.len() {
            return state.distinct == self.r;
        }
        let candidates: Vec<usize> = if let Some(&first) = placed[pos].first() {
            self.g
                .neighbors(map[order[first]])
                .filter(|&x| !used[x])
                .collect()
        } else {
            (0..self.g.n()).filter(|&x| !used[x]).collect()
        };
        for gx in candidates {
            if self.try_place(order, placed, pos, gx, map, used, counts, state) {
                if self.extend(order, placed, pos + 1, map, used, counts, state) {
                    return true;
                }
                self.unplace(order, placed, pos, map, used, counts, state);
            }
        }
        false
    }
}

struct MatchState {
    distinct: usize,
    mapped_edges: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(colors: [Color; 3], t: usize) -> EdgeColoredGraph {
        let mut g = EdgeColoredGraph::new(3, t).unwrap();
        g.add_edge(0, 1, colors[0]).unwrap();
        g.add_edge(1, 2, colors[1]).unwrap();
        g.add_edge(0, 2, colors[2]).unwrap();
        g
    }

    #[test]
    fn parse_literals() {
        let f = ForbiddenFamily::parse("mono(K3)").unwrap();
        assert_eq!(f.required_colors(), 1);
        assert_eq!(f.host().n(), 3);
        let f = ForbiddenFamily::parse("exact2(K3)").unwrap();
        assert_eq!(f.required_colors(), 2);
        let f = ForbiddenFamily::parse("exact3(K1,3)").unwrap();
        assert_eq!(f.required_colors(), 3);
        assert_eq!(f.host().degree(0), 3);
        let f = ForbiddenFamily::parse("rainbow(3K2)").unwrap();
        assert_eq!(f.required_colors(), 3);
        assert_eq!(f.host().n(), 6);
        let f = ForbiddenFamily::parse("mono(P4)").unwrap();
        assert_eq!(f.host().edge_count(), 3);
        assert!(ForbiddenFamily::parse("exact4(K3)").is_err());
        assert!(ForbiddenFamily::parse("weird(K3)").is_err());
        assert!(ForbiddenFamily::parse("mono(K3").is_err());
    }

    #[test]
    fn literal_round_trips() {
        for lit in ["mono(K3)", "exact2(K3)", "rainbow(3K2)", "exact2(K1,3)"] {
            let f = ForbiddenFamily::parse(lit).unwrap();
            assert_eq!(f.to_string(), lit);
        }
        let f = ForbiddenFamily::exactly(SimpleGraph::complete(4), 3).unwrap();
        assert_eq!(f.to_string(), "exact3(K4)");
    }

    #[test]
    fn triangle_membership() {
        let f = ForbiddenFamily::parse("exact2(K3)").unwrap();
        assert!(!f.contains_member(&triangle([1, 1, 1], 2)));
        assert!(f.contains_member(&triangle([1, 1, 2], 2)));
        assert!(!f.contains_member(&triangle([1, 2, 3], 3)));
        let mono = ForbiddenFamily::parse("mono(K3)").unwrap();
        assert!(mono.contains_member(&triangle([2, 2, 2], 2)));
        assert!(!mono.contains_member(&triangle([1, 1, 2], 2)));
    }

    #[test]
    fn creates_member_matches_definition() {
        let f = ForbiddenFamily::parse("exact2(K3)").unwrap();
        // 2-edge path u-x-v with colors (1,2): closing in color 1 makes {1,2}.
        let mut g = EdgeColoredGraph::new(3, 2).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 2).unwrap();
        assert!(f.creates_member_on_add(&g, 0, 2, 1).unwrap());
        assert!(f.creates_member_on_add(&g, 0, 2, 2).unwrap());
        // Same-colored path: closing in that color is monochromatic.
        let mut g = EdgeColoredGraph::new(3, 2).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 1).unwrap();
        assert!(!f.creates_member_on_add(&g, 0, 2, 1).unwrap());
        assert!(f.creates_member_on_add(&g, 0, 2, 2).unwrap());
        // Asking about an existing edge is an error.
        assert!(f.creates_member_on_add(&g, 0, 1, 1).is_err());
    }

    #[test]
    fn rainbow_two_paths() {
        let mut g = EdgeColoredGraph::new(3, 2).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 2).unwrap();
        assert!(rainbow_two_path_exists(&g, 0, 2));
        let mut g = EdgeColoredGraph::new(3, 2).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 1).unwrap();
        assert!(!rainbow_two_path_exists(&g, 0, 2));
    }

    #[test]
    fn rainbow_path_hypothesis_for_cliques() {
        // k=4: threshold is C(3,2)+2 = 5.
        let f = ForbiddenFamily::exactly(SimpleGraph::complete(4), 5).unwrap();
        assert!(f.member_edges_have_rainbow_path().unwrap());
        let f = ForbiddenFamily::exactly(SimpleGraph::complete(4), 4).unwrap();
        assert!(!f.member_edges_have_rainbow_path().unwrap());
        let f = ForbiddenFamily::parse("mono(K3)").unwrap();
        assert!(!f.member_edges_have_rainbow_path().unwrap());
        // Stars have no 2-paths between edge endpoints at all.
        let f = ForbiddenFamily::parse("exact2(K1,3)").unwrap();
        assert!(!f.member_edges_have_rainbow_path().unwrap());
    }

    #[test]
    fn clique_formula_matches_exhaustive_check() {
        // Cross-validate the closed form against the partition enumeration on
        // small cliques by rebuilding the host as an anonymous graph (so the
        // exhaustive branch is taken).
        for k in [3usize, 4] {
            let host = SimpleGraph::complete(k);
            for r in 1..=choose2(k) {
                let fam = ForbiddenFamily::exactly(host.clone(), r).unwrap();
                let formula = fam.member_edges_have_rainbow_path().unwrap();
                // Force the generic path: copy the host with an extra isolated
                // vertex removed again is still complete; instead call the
                // partition check directly.
                let edges = host.edges();
                let m = edges.len();
                let index_of = |a: usize, b: usize| {
                    edges
                        .iter()
                        .position(|&(x, y)| (x, y) == (a.min(b), a.max(b)))
                        .unwrap()
                };
                let mut paths: Vec<Vec<(usize, usize)>> = Vec::new();
                for &(a, b) in &edges {
                    paths.push(
                        host.common_neighbors(a, b)
                            .map(|x| (index_of(a, x), index_of(x, b)))
                            .collect(),
                    );
                }
                let exhaustive = if paths.iter().any(Vec::is_empty) {
                    false
                } else {
                    for_each_partition(m, r, &mut |block| {
                        (0..m).all(|e| paths[e].iter().any(|&(i, j)| block[i] != block[j]))
                    })
                };
                assert_eq!(formula, exhaustive, "k={k} r={r}");
            }
        }
    }

    #[test]
    fn disconnected_host_matching() {
        // Rainbow 2K2 inside a rainbow path of length 3.
        let f = ForbiddenFamily::parse("rainbow(2K2)").unwrap();
        let mut g = EdgeColoredGraph::new(4, 3).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 2).unwrap();
        g.add_edge(2, 3, 3).unwrap();
        // Must use disjoint edges: (0,1) and (2,3).
        assert!(f.contains_member(&g));
        let m = f.find_member(&g).unwrap();
        assert_eq!(m.0.len(), 4);
        // Mono 2K2 is absent (all edge colors differ).
        let f = ForbiddenFamily::parse("mono(2K2)").unwrap();
        assert!(!f.contains_member(&g));
    }

    #[test]
    fn partition_enumeration_counts() {
        // Stirling numbers S(4, r) = 1, 7, 6, 1.
        for (r, expect) in [(1, 1), (2, 7), (3, 6), (4, 1)] {
            let mut count = 0usize;
            for_each_partition(4, r, &mut |_| {
                count += 1;
                true
            });
            assert_eq!(count, expect, "S(4,{r})");
        }
    }
}
