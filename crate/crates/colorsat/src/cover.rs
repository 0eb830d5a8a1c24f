//! Complete multipartite covers of a graph and their minimum weight `f(H)`.
//!
//! A member is a complete multipartite graph given by at most `t` disjoint
//! vertex sets; it covers every pair lying in two distinct parts. A family of
//! members covers `H` when every edge of `H` is covered, and its weight is the
//! sum of all part sizes. `f(H)` is the minimum weight over valid covers.
//!
//! The exact minimizer is a branch-and-bound of our own design: branch on the
//! lexicographically least uncovered edge, enumerate canonical members through
//! it (vertices that would cover nothing are excluded — deleting such a vertex
//! from any cover keeps it valid), prune with a vertex-disjoint clique packing
//! whose clique values are exact `f(K_q)` numbers bootstrapped from smaller
//! instances. The packing never uses the analytic `n log n / log t` bound, so
//! verifying that bound against these exact values stays meaningful.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::family::rainbow_two_path_exists;
use crate::graph::{EdgeColoredGraph, SimpleGraph};
use crate::{Error, Result};

/// A complete multipartite graph over a ground vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TPartiteGraph {
    parts: Vec<Vec<usize>>,
}

impl TPartiteGraph {
    /// Builds a member; empty parts are dropped (they carry no weight).
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        let mut parts: Vec<Vec<usize>> = parts.into_iter().filter(|p| !p.is_empty()).collect();
        for p in &mut parts {
            p.sort_unstable();
        }
        TPartiteGraph { parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Do the parts overlap?
    pub fn parts_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.parts.iter().flatten().all(|&v| seen.insert(v))
    }

    /// Is the pair `uv` an edge of this multipartite graph?
    pub fn covers_pair(&self, u: usize, v: usize) -> bool {
        let pu = self.parts.iter().position(|p| p.binary_search(&u).is_ok());
        let pv = self.parts.iter().position(|p| p.binary_search(&v).is_ok());
        matches!((pu, pv), (Some(a), Some(b)) if a != b)
    }
}

/// A collection of members intended to cover the target's edge set.
#[derive(Clone, Debug, Serialize)]
pub struct TPartiteCover {
    pub members: Vec<TPartiteGraph>,
    #[serde(skip)]
    pub target: SimpleGraph,
}

impl TPartiteCover {
    pub fn total_weight(&self) -> usize {
        self.members.iter().map(TPartiteGraph::weight).sum()
    }
}

/// True iff every edge of the target lies in some member. Overlapping parts in
/// any member are a malformed-cover error.
pub fn cover_is_valid(cover: &TPartiteCover) -> Result<bool> {
    for (i, m) in cover.members.iter().enumerate() {
        if !m.parts_disjoint() {
            return Err(Error::OverlappingParts(i));
        }
    }
    Ok(cover
        .target
        .edges()
        .iter()
        .all(|&(u, v)| cover.members.iter().any(|m| m.covers_pair(u, v))))
}

/// The per-vertex multipartite graphs `G_v` (parts = color classes of `v`)
/// as a cover of the complement of `G`. Requires every non-edge of `G` to have
/// a rainbow 2-path — the failing non-edge is named otherwise. Total weight is
/// the degree sum `2 e(G)`.
pub fn saturated_to_cover(g: &EdgeColoredGraph) -> Result<TPartiteCover> {
    for &(u, v) in &g.non_edges() {
        if !rainbow_two_path_exists(g, u, v) {
            return Err(Error::NoRainbowPath(u, v));
        }
    }
    let members = (0..g.n())
        .map(|v| {
            let parts = (1..=g.t() as crate::graph::Color)
                .map(|c| g.color_neighbors(v, c).collect())
                .collect();
            TPartiteGraph::new(parts)
        })
        .collect();
    Ok(TPartiteCover {
        members,
        target: g.complement_simple(),
    })
}

/// Partitions `E(H)` into stars along a vertex ordering: member `i` has parts
/// `{v_i}` and the later neighbors of `v_i`. Always a valid cover of `H` with
/// total weight exactly `e(H) + n`.
pub fn star_cover(h: &SimpleGraph, ordering: &[usize]) -> Result<TPartiteCover> {
    let n = h.n();
    if ordering.len() != n {
        return Err(Error::Parameter("ordering length mismatch".into()));
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n || seen[v] {
            return Err(Error::Parameter("ordering is not a permutation".into()));
        }
        seen[v] = true;
    }
    let members = (0..n)
        .map(|i| {
            let v = ordering[i];
            let later: Vec<usize> = (i + 1..n)
                .map(|j| ordering[j])
                .filter(|&w| h.has_edge(v, w))
                .collect();
            TPartiteGraph::new(vec![vec![v], later])
        })
        .collect();
    Ok(TPartiteCover {
        members,
        target: h.clone(),
    })
}

/// `n * log(n) / log(t)`, the analytic lower bound for `f(K_n)`.
pub fn kn_lower_bound(n: usize, t: usize) -> Result<f64> {
    if t < 2 {
        return Err(Error::Parameter(format!("t = {t} < 2")));
    }
    if n < 1 {
        return Err(Error::Parameter("n must be positive".into()));
    }
    Ok(n as f64 * (n as f64).ln() / (t as f64).ln())
}

#[derive(Clone, Copy, Debug)]
pub struct ExactCoverOptions {
    /// Largest `n` accepted without `force`.
    pub guard: usize,
    pub force: bool,
    pub parallel: bool,
}

impl Default for ExactCoverOptions {
    fn default() -> Self {
        ExactCoverOptions {
            guard: 10,
            force: false,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverSolution {
    pub weight: usize,
    pub cover: TPartiteCover,
    /// Clique-packing bound at the root (not the analytic bound).
    pub root_lower_bound: usize,
    pub nodes: u64,
    pub elapsed_secs: f64,
}

/// Exact minimum cover weight `f(H)` with an optimal witness cover.
pub fn exact_cover_weight(
    h: &SimpleGraph,
    t: usize,
    opts: ExactCoverOptions,
) -> Result<CoverSolution> {
    if t < 2 {
        return Err(Error::Parameter(format!("t = {t} < 2")));
    }
    if h.n() > opts.guard && !opts.force {
        return Err(Error::GuardExceeded(format!(
            "exact cover weight guard is n <= {}, got n = {}",
            opts.guard,
            h.n()
        )));
    }
    if h.edge_count() > 63 {
        return Err(Error::GuardExceeded(format!(
            "edge masks support at most 63 edges, got {}",
            h.edge_count()
        )));
    }
    let started = Instant::now();
    let omega = max_clique_size(h);
    let table = clique_weight_table(omega, t, opts.parallel)?;
    let (weight, members, root_lb, nodes) = solve_cover(h, t, &table, opts.parallel);
    Ok(CoverSolution {
        weight: weight as usize,
        cover: TPartiteCover {
            members,
            target: h.clone(),
        },
        root_lower_bound: root_lb as usize,
        nodes,
        elapsed_secs: started.elapsed().as_secs_f64(),
    })
}

/// Report for the complement inequality `f(complement H) >= f(K_n) - (e + n)`.
#[derive(Clone, Debug, Serialize)]
pub struct ComplementCoverReport {
    pub n: usize,
    pub t: usize,
    pub f_complement: usize,
    pub f_complete: usize,
    pub star_weight: usize,
    pub holds: bool,
    pub slack: i64,
}

pub fn complement_cover_bound(
    h: &SimpleGraph,
    t: usize,
    opts: ExactCoverOptions,
) -> Result<ComplementCoverReport> {
    let n = h.n();
    let f_complement = exact_cover_weight(&h.complement(), t, opts)?.weight;
    let f_complete = exact_cover_weight(&SimpleGraph::complete(n), t, opts)?.weight;
    let star_weight = h.edge_count() + n;
    let slack = f_complement as i64 - (f_complete as i64 - star_weight as i64);
    Ok(ComplementCoverReport {
        n,
        t,
        f_complement,
        f_complete,
        star_weight,
        holds: slack >= 0,
        slack,
    })
}

/// Exact maximum clique size; `h` is small by the cover guard.
pub(crate) fn max_clique_size(h: &SimpleGraph) -> usize {
    fn rec(h: &SimpleGraph, cand: Vec<usize>, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        if size + cand.len() <= *best {
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| h.has_edge(v, w))
                .collect();
            rec(h, next, size + 1, best);
        }
    }
    let mut best = if h.n() > 0 { 1 } else { 0 };
    rec(h, (0..h.n()).collect(), 0, &mut best);
    best
}

/// Cached exact `f(K_q, t)` values for `q = 2..=q_max`, bootstrapped in
/// ascending order so each solve only uses strictly smaller entries in its
/// own lower bound.
fn clique_weight_table(q_max: usize, t: usize, parallel: bool) -> Result<Vec<u32>> {
    static CACHE: Mutex<Option<HashMap<(usize, usize), u32>>> = Mutex::new(None);
    let mut table = vec![0u32; q_max.max(1) + 1];
    for q in 2..=q_max {
        let cached = {
            let guard = CACHE.lock().unwrap();
            guard.as_ref().and_then(|m| m.get(&(q, t)).copied())
        };
        let w = match cached {
            Some(w) => w,
            None => {
                let sub: Vec<u32> = table[..q].to_vec();
                let (w, _, _, _) = solve_cover(&SimpleGraph::complete(q), t, &sub, parallel);
                let mut guard = CACHE.lock().unwrap();
                guard.get_or_insert_with(HashMap::new).insert((q, t), w);
                w
            }
        };
        table[q] = w;
    }
    Ok(table)
}

struct CoverInstance {
    n: usize,
    t: usize,
    edges: Vec<(usize, usize)>,
    /// `edge_idx[u * n + v]`: bit index of edge `uv`, or usize::MAX.
    edge_idx: Vec<usize>,
    /// Exact `f(K_q)` values indexed by q (monotone; clamped when packing
    /// finds a clique larger than the table).
    clique_f: Vec<u32>,
}

#[derive(Clone)]
struct Candidate {
    parts: Vec<Vec<usize>>,
    covered: u64,
    weight: u32,
}

fn solve_cover(
    h: &SimpleGraph,
    t: usize,
    clique_f: &[u32],
    parallel: bool,
) -> (u32, Vec<TPartiteGraph>, u32, u64) {
    let n = h.n();
    let edges = h.edges();
    let m = edges.len();
    if m == 0 {
        return (0, Vec::new(), 0, 0);
    }
    let mut edge_idx = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        edge_idx[u * n + v] = i;
        edge_idx[v * n + u] = i;
    }
    let inst = CoverInstance {
        n,
        t,
        edges,
        edge_idx,
        clique_f: clique_f.to_vec(),
    };
    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let star = star_cover(h, &(0..n).collect::<Vec<usize>>()).expect("identity ordering");
    let star_weight = star.total_weight() as u32;
    let root_lb = clique_packing_lb(&inst, full);

    let (u, v) = inst.edges[0];
    let root_candidates = gen_members(&inst, full, u, v);
    let shared = AtomicU32::new(star_weight);
    let run_branch = |cand: &Candidate| -> (u32, Option<Vec<TPartiteGraph>>, u64) {
        let mut ctx = Dfs {
            inst: &inst,
            shared: &shared,
            local_best: u32::MAX,
            best_chain: None,
            visited: HashMap::new(),
            chain: vec![TPartiteGraph::new(cand.parts.clone())],
            nodes: 0,
        };
        ctx.dfs(full & !cand.covered, cand.weight);
        (ctx.local_best, ctx.best_chain, ctx.nodes)
    };
    let results: Vec<(u32, Option<Vec<TPartiteGraph>>, u64)> = if parallel {
        root_candidates.par_iter().map(run_branch).collect()
    } else {
        root_candidates.iter().map(run_branch).collect()
    };
    let nodes: u64 = results.iter().map(|r| r.2).sum::<u64>() + 1;
    let mut best_weight = star_weight;
    let mut best_chain: Vec<TPartiteGraph> = star.members;
    for (w, chain, _) in results {
        if w < best_weight {
            best_weight = w;
            best_chain = chain.expect("weight implies chain");
        }
    }
    (best_weight, best_chain, root_lb, nodes)
}

struct Dfs<'a> {
    inst: &'a CoverInstance,
    shared: &'a AtomicU32,
    local_best: u32,
    best_chain: Option<Vec<TPartiteGraph>>,
    /// mask -> least weight it was reached with; revisits at equal or larger
    /// weight cannot improve anything reachable from here.
    visited: HashMap<u64, u32>,
    chain: Vec<TPartiteGraph>,
    nodes: u64,
}

impl Dfs<'_> {
    fn dfs(&mut self, mask: u64, weight: u32) {
        self.nodes += 1;
        if mask == 0 {
            if weight < self.local_best {
                self.local_best = weight;
                self.best_chain = Some(self.chain.clone());
                self.shared.fetch_min(weight, Ordering::Relaxed);
            }
            return;
        }
        if let Some(&w0) = self.visited.get(&mask) {
            if w0 <= weight {
                return;
            }
        }
        self.visited.insert(mask, weight);
        let bound = self.local_best.min(self.shared.load(Ordering::Relaxed));
        if weight + clique_packing_lb(self.inst, mask) > bound {
            return;
        }
        let first = mask.trailing_zeros() as usize;
        let (u, v) = self.inst.edges[first];
        for cand in gen_members(self.inst, mask, u, v) {
            self.chain.push(TPartiteGraph::new(cand.parts.clone()));
            self.dfs(mask & !cand.covered, weight + cand.weight);
            self.chain.pop();
        }
    }
}

/// All canonical members covering the anchor pair `uv`: `u` seeds part 1, `v`
/// part 2, remaining active vertices are assigned out/parts with new parts
/// opened in first-use order. Every vertex of a candidate must cover at least
/// one currently uncovered edge inside the member.
fn gen_members(inst: &CoverInstance, mask: u64, u: usize, v: usize) -> Vec<Candidate> {
    let n = inst.n;
    let touches = |x: usize| -> bool {
        (0..n).any(|y| {
            y != x && inst.edge_idx[x * n + y] != usize::MAX && mask >> inst.edge_idx[x * n + y] & 1 == 1
        })
    };
    let active: Vec<usize> = (0..n).filter(|&x| x != u && x != v && touches(x)).collect();
    let mut out = Vec::new();
    let mut assign = vec![0usize; active.len()];
    gen_rec(inst, mask, u, v, &active, &mut assign, 0, 2, &mut out);
    // Deterministic candidate order: strongest coverage first, then lighter
    // members, then a fixed structural tiebreak.
    out.sort_by(|a, b| {
        b.covered
            .count_ones()
            .cmp(&a.covered.count_ones())
            .then(a.weight.cmp(&b.weight))
            .then_with(|| a.parts.cmp(&b.parts))
    });
    out
}

#[allow(clippy::too_many_arguments)]
fn gen_rec(
    inst: &CoverInstance,
    mask: u64,
    u: usize,
    v: usize,
    active: &[usize],
    assign: &mut Vec<usize>,
    i: usize,
    max_part: usize,
    out: &mut Vec<Candidate>,
) {
    if i == active.len() {
        if let Some(c) = finalize_member(inst, mask, u, v, active, assign, max_part) {
            out.push(c);
        }
        return;
    }
    let limit = (max_part + 1).min(inst.t);
    for p in 0..=limit {
        assign[i] = p;
        gen_rec(inst, mask, u, v, active, assign, i + 1, max_part.max(p), out);
    }
}

fn finalize_member(
    inst: &CoverInstance,
    mask: u64,
    u: usize,
    v: usize,
    active: &[usize],
    assign: &[usize],
    max_part: usize,
) -> Option<Candidate> {
    let n = inst.n;
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); max_part];
    parts[0].push(u);
    parts[1].push(v);
    for (i, &x) in active.iter().enumerate() {
        if assign[i] > 0 {
            parts[assign[i] - 1].push(x);
        }
    }
    let members: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(pi, p)| p.iter().map(move |&x| (x, pi)))
        .collect();
    let mut covered: u64 = 0;
    let mut useful = vec![false; members.len()];
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            let (x, px) = members[a];
            let (y, py) = members[b];
            if px == py {
                continue;
            }
            let idx = inst.edge_idx[x * n + y];
            if idx != usize::MAX && mask >> idx & 1 == 1 {
                covered |= 1 << idx;
                useful[a] = true;
                useful[b] = true;
            }
        }
    }
    if !useful.iter().all(|&b| b) {
        return None;
    }
    let weight = members.len() as u32;
    for p in &mut parts {
        p.sort_unstable();
    }
    Some(Candidate {
        parts,
        covered,
        weight,
    })
}

/// Lower bound on the remaining cover weight: pack vertex-disjoint cliques of
/// the uncovered graph greedily and charge each clique its exact `f(K_q)`
/// (clamped to the largest bootstrapped entry, which is sound because `f(K_q)`
/// is monotone in `q`).
fn clique_packing_lb(inst: &CoverInstance, mask: u64) -> u32 {
    let n = inst.n;
    let mut adj = vec![0u32; n];
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (a, b) = inst.edges[i];
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut alive: u32 = (0..n).filter(|&x| adj[x] != 0).fold(0, |m, x| m | 1 << x);
    let mut lb = 0u32;
    while alive != 0 {
        let deg = |x: usize, pool: u32| (adj[x] & pool).count_ones();
        let Some(start) = iter_bits32(alive).max_by_key(|&x| (deg(x, alive), std::cmp::Reverse(x)))
        else {
            break;
        };
        if deg(start, alive) == 0 {
            break;
        }
        let mut clique: u32 = 1 << start;
        let mut cand = adj[start] & alive;
        while cand != 0 {
            let next = iter_bits32(cand)
                .max_by_key(|&x| (deg(x, cand), std::cmp::Reverse(x)))
                .unwrap();
            clique |= 1 << next;
            cand &= adj[next];
        }
        let q = clique.count_ones() as usize;
        let idx = q.min(inst.clique_f.len() - 1);
        lb += if idx >= 2 { inst.clique_f[idx] } else { 2 };
        alive &= !clique;
        // Drop vertices whose uncovered edges all led into the removed clique.
        alive = iter_bits32(alive)
            .filter(|&x| adj[x] & alive != 0)
            .fold(0, |m, x| m | 1 << x);
    }
    lb
}

fn iter_bits32(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(h: &SimpleGraph, t: usize) -> CoverSolution {
        exact_cover_weight(h, t, ExactCoverOptions::default()).unwrap()
    }

    #[test]
    fn single_edge_cover() {
        let mut h = SimpleGraph::new(2);
        h.add_edge(0, 1).unwrap();
        let sol = solve(&h, 2);
        assert_eq!(sol.weight, 2);
        assert!(cover_is_valid(&sol.cover).unwrap());
    }

    #[test]
    fn empty_target_has_weight_zero() {
        let h = SimpleGraph::new(4);
        let sol = solve(&h, 2);
        assert_eq!(sol.weight, 0);
        assert!(sol.cover.members.is_empty());
        assert!(cover_is_valid(&sol.cover).unwrap());
    }

    #[test]
    fn cover_validity_examples() {
        // Single edge, one member with parts {0},{1}.
        let mut target = SimpleGraph::new(2);
        target.add_edge(0, 1).unwrap();
        let cover = TPartiteCover {
            members: vec![TPartiteGraph::new(vec![vec![0], vec![1]])],
            target,
        };
        assert!(cover_is_valid(&cover).unwrap());
        assert_eq!(cover.total_weight(), 2);

        // Triangle target, bipartite member {0},{1,2} misses the edge 1-2.
        let cover = TPartiteCover {
            members: vec![TPartiteGraph::new(vec![vec![0], vec![1, 2]])],
            target: SimpleGraph::complete(3),
        };
        assert!(!cover_is_valid(&cover).unwrap());

        // Overlapping parts are malformed.
        let cover = TPartiteCover {
            members: vec![TPartiteGraph::new(vec![vec![0, 1], vec![1, 2]])],
            target: SimpleGraph::complete(3),
        };
        assert!(matches!(cover_is_valid(&cover), Err(Error::OverlappingParts(0))));
    }

    #[test]
    fn star_cover_weight_identity() {
        let h = SimpleGraph::path(3);
        let cover = star_cover(&h, &[0, 1, 2]).unwrap();
        assert_eq!(cover.total_weight(), 2 + 3);
        assert!(cover_is_valid(&cover).unwrap());

        let h = SimpleGraph::new(4);
        let cover = star_cover(&h, &[3, 2, 1, 0]).unwrap();
        assert_eq!(cover.total_weight(), 4);

        let h = SimpleGraph::complete(3);
        let cover = star_cover(&h, &[2, 0, 1]).unwrap();
        assert_eq!(cover.total_weight(), 6);
        assert!(cover_is_valid(&cover).unwrap());

        assert!(star_cover(&h, &[0, 1]).is_err());
        assert!(star_cover(&h, &[0, 1, 1]).is_err());
    }

    #[test]
    fn kn_lower_bound_values() {
        assert!((kn_lower_bound(4, 2).unwrap() - 8.0).abs() < 1e-9);
        assert!((kn_lower_bound(9, 3).unwrap() - 18.0).abs() < 1e-9);
        assert_eq!(kn_lower_bound(1, 5).unwrap(), 0.0);
        assert!(kn_lower_bound(3, 1).is_err());
    }

    #[test]
    fn exact_weight_k4_matches_bruteforce_oracle() {
        // Independent oracle: enumerate all covers of K4 with at most 4
        // members of weight <= 12 built from bipartitions of subsets.
        let h = SimpleGraph::complete(4);
        let mut members: Vec<(Vec<usize>, Vec<usize>, u64)> = Vec::new();
        let edges = h.edges();
        let eidx = |u: usize, v: usize| edges.iter().position(|&(a, b)| (a, b) == (u.min(v), u.max(v))).unwrap();
        // All ordered pairs of disjoint nonempty subsets (A, B) with min(A u B) in A.
        for a_mask in 1u32..16 {
            for b_mask in 1u32..16 {
                if a_mask & b_mask != 0 {
                    continue;
                }
                let lowest = (a_mask | b_mask).trailing_zeros();
                if a_mask >> lowest & 1 == 0 {
                    continue; // canonical: lowest vertex in A
                }
                let a: Vec<usize> = (0..4).filter(|&i| a_mask >> i & 1 == 1).collect();
                let b: Vec<usize> = (0..4).filter(|&i| b_mask >> i & 1 == 1).collect();
                let mut cov = 0u64;
                for &x in &a {
                    for &y in &b {
                        cov |= 1 << eidx(x, y);
                    }
                }
                members.push((a, b, cov));
            }
        }
        let full = (1u64 << 6) - 1;
        let mut best = u32::MAX;
        // Up to 4 members, weight <= 12.
        fn rec(
            members: &[(Vec<usize>, Vec<usize>, u64)],
            start: usize,
            cov: u64,
            weight: u32,
            depth: usize,
            full: u64,
            best: &mut u32,
        ) {
            if cov == full {
                *best = (*best).min(weight);
                return;
            }
            if depth == 4 || weight >= 12 {
                return;
            }
            for i in start..members.len() {
                let (a, b, c) = &members[i];
                let w = (a.len() + b.len()) as u32;
                if weight + w > 12 {
                    continue;
                }
                rec(members, i, cov | c, weight + w, depth + 1, full, best);
            }
        }
        rec(&members, 0, 0, 0, 0, full, &mut best);
        assert_eq!(best, 8, "oracle value for f(K4, 2)");
        let sol = solve(&h, 2);
        assert_eq!(sol.weight, 8);
        assert!(cover_is_valid(&sol.cover).unwrap());
        assert_eq!(sol.cover.total_weight(), 8);
    }

    #[test]
    fn tripartite_members_help_when_allowed() {
        // f(K3, 3) = 3 with a single tripartite member; with t = 2 it needs 5.
        let h = SimpleGraph::complete(3);
        assert_eq!(solve(&h, 3).weight, 3);
        assert_eq!(solve(&h, 2).weight, 5);
    }

    #[test]
    fn grid_cover_of_k9_is_optimal() {
        // Two orthogonal tripartitions cover K9 with weight 18 = 9 log_3 9.
        let h = SimpleGraph::complete(9);
        let sol = solve(&h, 3);
        assert_eq!(sol.weight, 18);
    }

    #[test]
    fn saturated_to_cover_requires_rainbow_paths() {
        // All-red star: the leaves' non-edges have monochromatic 2-paths only.
        let mut g = EdgeColoredGraph::new(3, 2).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(0, 2, 1).unwrap();
        assert!(matches!(saturated_to_cover(&g), Err(Error::NoRainbowPath(1, 2))));

        // Bicolored path: valid, weight = degree sum.
        let mut g = EdgeColoredGraph::new(3, 2).unwrap();
        g.add_edge(0, 1, 1).unwrap();
        g.add_edge(1, 2, 2).unwrap();
        let cover = saturated_to_cover(&g).unwrap();
        assert!(cover_is_valid(&cover).unwrap());
        assert_eq!(cover.total_weight(), 2 * g.edge_count());

        // Single vertex: empty cover of an empty complement.
        let g = EdgeColoredGraph::new(1, 2).unwrap();
        let cover = saturated_to_cover(&g).unwrap();
        assert_eq!(cover.total_weight(), 0);
        assert!(cover_is_valid(&cover).unwrap());
    }

    #[test]
    fn complement_bound_examples() {
        let opts = ExactCoverOptions::default();
        // Empty graph on 4 vertices: slack is exactly e + n = 4.
        let rep = complement_cover_bound(&SimpleGraph::new(4), 2, opts).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.slack, 4);
        // One edge on 4 vertices.
        let mut h = SimpleGraph::new(4);
        h.add_edge(0, 1).unwrap();
        let rep = complement_cover_bound(&h, 2, opts).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn guard_rejects_large_instances() {
        let h = SimpleGraph::complete(11);
        assert!(matches!(
            exact_cover_weight(&h, 2, ExactCoverOptions::default()),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn max_clique_values() {
        assert_eq!(max_clique_size(&SimpleGraph::complete(5)), 5);
        assert_eq!(max_clique_size(&SimpleGraph::path(4)), 2);
        assert_eq!(max_clique_size(&SimpleGraph::new(3)), 1);
    }
}
