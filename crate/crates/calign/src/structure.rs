//! Forbidden-subgraph detectors and per-instance verification of the
//! structural theorems about conflict graphs.
//!
//! Every detector returns a witness that re-verifies independently against
//! the raw adjacency; a theorem violation is a falsifiable bug report, never
//! a swallowed condition.

use std::fmt;

use crate::conflict::build_conflict_graph;
use crate::error::{Error, Result};
use crate::graph;
use crate::model::{instance_stats, AlignmentInstance, InstanceStats};
use crate::solver::find_is_of_size;

/// Hole/antihole search is exponential in the worst case; refuse graphs
/// larger than this instead of spinning.
pub const HOLE_VERTEX_CAP: usize = 200;
/// The complement of a sparse graph is dense, so the antihole side caps lower.
pub const ANTIHOLE_VERTEX_CAP: usize = 120;

// ---------------------------------------------------------------------------
// Maximum clique (Bron-Kerbosch with pivoting)
// ---------------------------------------------------------------------------

fn bron_kerbosch(
    adj: &[Vec<usize>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    best: &mut Vec<usize>,
) {
    if p.is_empty() && x.is_empty() {
        if r.len() > best.len() {
            *best = r.clone();
        }
        return;
    }
    if r.len() + p.len() <= best.len() {
        return;
    }
    // Pivot on the vertex of P | X with most neighbors in P (first maximum).
    let mut pivot = usize::MAX;
    let mut pivot_score = usize::MAX;
    for &u in p.iter().chain(x.iter()) {
        let score = p.iter().filter(|&&v| graph::has_edge(adj, u, v)).count();
        if pivot == usize::MAX || score > pivot_score {
            pivot = u;
            pivot_score = score;
        }
    }
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !graph::has_edge(adj, pivot, v))
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let next_p: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&w| graph::has_edge(adj, v, w))
            .collect();
        let next_x: Vec<usize> = x
            .iter()
            .copied()
            .filter(|&w| graph::has_edge(adj, v, w))
            .collect();
        r.push(v);
        bron_kerbosch(adj, r, next_p, next_x, best);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Exact maximum clique; `(0, [])` on the empty graph.
pub fn max_clique(adj: &[Vec<usize>]) -> (usize, Vec<usize>) {
    let mut best = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(adj, &mut r, (0..adj.len()).collect(), Vec::new(), &mut best);
    best.sort_unstable();
    (best.len(), best)
}

// ---------------------------------------------------------------------------
// Chordless cycles, holes, induced paths
// ---------------------------------------------------------------------------

/// DFS over chordless paths anchored at the cycle's minimum vertex. A path
/// may only close at the first vertex adjacent to the anchor (extending past
/// a neighbor of the anchor would leave a chord), which keeps the search
/// exact.
fn cycle_dfs(
    adj: &[Vec<usize>],
    path: &mut Vec<usize>,
    in_path: &mut [bool],
    min_len: usize,
    max_len: usize,
) -> Option<Vec<usize>> {
    let anchor = path[0];
    let last = *path.last().unwrap();
    for &u in &adj[last] {
        if u <= anchor || in_path[u] {
            continue;
        }
        let interior = &path[1..path.len() - 1];
        if interior.iter().any(|&w| graph::has_edge(adj, u, w)) {
            continue;
        }
        if path.len() >= 2 && graph::has_edge(adj, u, anchor) {
            let len = path.len() + 1;
            if len >= min_len && len <= max_len {
                let mut cycle = path.clone();
                cycle.push(u);
                return Some(cycle);
            }
            continue;
        }
        if path.len() + 1 < max_len {
            path.push(u);
            in_path[u] = true;
            if let Some(cycle) = cycle_dfs(adj, path, in_path, min_len, max_len) {
                return Some(cycle);
            }
            path.pop();
            in_path[u] = false;
        }
    }
    None
}

/// An induced chordless cycle with length in `[min_len, max_len]`, if any.
/// The witness lists the cycle vertices in traversal order.
pub fn find_chordless_cycle(
    adj: &[Vec<usize>],
    min_len: usize,
    max_len: usize,
) -> Option<Vec<usize>> {
    let min_len = min_len.max(3);
    if max_len < min_len {
        return None;
    }
    let n = adj.len();
    let mut in_path = vec![false; n];
    for v0 in 0..n {
        let mut path = vec![v0];
        in_path[v0] = true;
        if let Some(cycle) = cycle_dfs(adj, &mut path, &mut in_path, min_len, max_len) {
            return Some(cycle);
        }
        in_path[v0] = false;
    }
    None
}

/// An induced chordless cycle of length >= `min_len` (a hole for
/// `min_len = 5`). Fails loudly above [`HOLE_VERTEX_CAP`] vertices.
pub fn find_hole(adj: &[Vec<usize>], min_len: usize) -> Result<Option<Vec<usize>>> {
    if adj.len() > HOLE_VERTEX_CAP {
        return Err(Error::Resource(format!(
            "hole detection capped at {HOLE_VERTEX_CAP} vertices, graph has {}",
            adj.len()
        )));
    }
    Ok(find_chordless_cycle(adj, min_len, adj.len()))
}

/// An induced path on exactly `len` vertices, if any.
pub fn find_induced_path(adj: &[Vec<usize>], len: usize) -> Option<Vec<usize>> {
    fn dfs(adj: &[Vec<usize>], path: &mut Vec<usize>, in_path: &mut [bool], len: usize) -> bool {
        if path.len() == len {
            return true;
        }
        let last = *path.last().unwrap();
        for &u in &adj[last] {
            if in_path[u] {
                continue;
            }
            let earlier = &path[..path.len() - 1];
            if earlier.iter().any(|&w| graph::has_edge(adj, u, w)) {
                continue;
            }
            path.push(u);
            in_path[u] = true;
            if dfs(adj, path, in_path, len) {
                return true;
            }
            path.pop();
            in_path[u] = false;
        }
        false
    }

    if len == 0 {
        return None;
    }
    let n = adj.len();
    if len == 1 {
        return (n > 0).then(|| vec![0]);
    }
    let mut in_path = vec![false; n];
    for v0 in 0..n {
        let mut path = vec![v0];
        in_path[v0] = true;
        if dfs(adj, &mut path, &mut in_path, len) {
            return Some(path);
        }
        in_path[v0] = false;
    }
    None
}

/// Verdict of the weak-triangulation test together with the falsifying
/// witness when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakTriangulationWitness {
    Hole(Vec<usize>),
    Antihole(Vec<usize>),
}

/// True iff neither the graph nor its complement contains a chordless cycle
/// of length >= 5.
pub fn is_weakly_triangulated(
    adj: &[Vec<usize>],
) -> Result<(bool, Option<WeakTriangulationWitness>)> {
    if let Some(hole) = find_hole(adj, 5)? {
        return Ok((false, Some(WeakTriangulationWitness::Hole(hole))));
    }
    if adj.len() > ANTIHOLE_VERTEX_CAP {
        return Err(Error::Resource(format!(
            "antihole detection capped at {ANTIHOLE_VERTEX_CAP} vertices, graph has {}",
            adj.len()
        )));
    }
    let co = graph::complement(adj);
    if let Some(hole) = find_chordless_cycle(&co, 5, co.len()) {
        return Ok((false, Some(WeakTriangulationWitness::Antihole(hole))));
    }
    Ok((true, None))
}

// ---------------------------------------------------------------------------
// Wheels, fans, claws
// ---------------------------------------------------------------------------

/// An induced wheel: a hub adjacent to every vertex of an induced cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wheel {
    pub hub: usize,
    pub rim: Vec<usize>,
}

/// An induced fan: a hub adjacent to every vertex of an induced path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub hub: usize,
    pub path: Vec<usize>,
}

/// A d-claw: a center with `d` pairwise-nonadjacent neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub talons: Vec<usize>,
}

/// Searches for an induced wheel W_k with rim length `k` in
/// `[k_min, k_max]`: an induced cycle inside some vertex's neighborhood.
pub fn find_induced_wheel(adj: &[Vec<usize>], k_min: usize, k_max: usize) -> Option<Wheel> {
    for hub in 0..adj.len() {
        if adj[hub].len() < k_min {
            continue;
        }
        let (sub, back) = graph::induced(adj, &adj[hub]);
        let cap = k_max.min(sub.len());
        if let Some(cycle) = find_chordless_cycle(&sub, k_min, cap) {
            return Some(Wheel {
                hub,
                rim: cycle.into_iter().map(|v| back[v]).collect(),
            });
        }
    }
    None
}

/// Searches for an induced fan F_t: an induced path on exactly `t` vertices
/// inside some vertex's neighborhood. Since induced paths are closed under
/// taking sub-paths, `F_t`-freeness for all `t >= t0` reduces to `t = t0`.
pub fn find_induced_fan(adj: &[Vec<usize>], t: usize) -> Option<Fan> {
    for hub in 0..adj.len() {
        if adj[hub].len() < t {
            continue;
        }
        let (sub, back) = graph::induced(adj, &adj[hub]);
        if let Some(path) = find_induced_path(&sub, t) {
            return Some(Fan {
                hub,
                path: path.into_iter().map(|v| back[v]).collect(),
            });
        }
    }
    None
}

/// Searches for a d-claw: an independent set of size `d` inside some
/// vertex's neighborhood (exact search).
pub fn find_claw(adj: &[Vec<usize>], d: usize) -> Option<Claw> {
    for center in 0..adj.len() {
        if adj[center].len() < d {
            continue;
        }
        let (sub, back) = graph::induced(adj, &adj[center]);
        let active: Vec<usize> = (0..sub.len()).collect();
        if let Some(mut talons) = find_is_of_size(&sub, &active, d) {
            talons.sort_unstable();
            return Some(Claw {
                center,
                talons: talons.into_iter().map(|v| back[v]).collect(),
            });
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Witness re-verification
// ---------------------------------------------------------------------------

/// Checks that `cycle` really is an induced chordless cycle of the graph.
pub fn verify_chordless_cycle(adj: &[Vec<usize>], cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if graph::has_edge(adj, cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Checks that `path` really is an induced path of the graph.
pub fn verify_induced_path(adj: &[Vec<usize>], path: &[usize]) -> bool {
    let k = path.len();
    if k == 0 {
        return false;
    }
    let mut sorted = path.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1;
            if graph::has_edge(adj, path[i], path[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

pub fn verify_wheel(adj: &[Vec<usize>], wheel: &Wheel) -> bool {
    wheel.rim.iter().all(|&v| graph::has_edge(adj, wheel.hub, v))
        && verify_chordless_cycle(adj, &wheel.rim)
}

pub fn verify_fan(adj: &[Vec<usize>], fan: &Fan) -> bool {
    fan.path.iter().all(|&v| graph::has_edge(adj, fan.hub, v))
        && verify_induced_path(adj, &fan.path)
}

pub fn verify_claw(adj: &[Vec<usize>], claw: &Claw) -> bool {
    !claw.talons.is_empty()
        && claw.talons.iter().all(|&v| graph::has_edge(adj, claw.center, v))
        && graph::is_independent_set(adj, &claw.talons)
}

// ---------------------------------------------------------------------------
// Degree bound
// ---------------------------------------------------------------------------

/// The conflict-graph degree bound in terms of the instance parameters:
/// `2*D1*m1^2 + 2*D2*m2^2 - 2*D1*m1 - 2*D2*m2 - m1^2 - m2^2 + 2*m1 + 2*m2 - 2`.
pub fn degree_bound(inst: &AlignmentInstance) -> i64 {
    let d1 = inst.g1().max_degree() as i64;
    let d2 = inst.g2().max_degree() as i64;
    let m1 = inst.m1() as i64;
    let m2 = inst.m2() as i64;
    2 * d1 * m1 * m1 + 2 * d2 * m2 * m2 - 2 * d1 * m1 - 2 * d2 * m2 - m1 * m1 - m2 * m2
        + 2 * m1
        + 2 * m2
        - 2
}

// ---------------------------------------------------------------------------
// The aggregate report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Violation(String),
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
    pub detail: String,
}

/// Per-instance record of every structural check whose hypothesis the
/// instance satisfies.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub cg_vertices: usize,
    pub cg_edges: usize,
    pub cg_max_degree: usize,
    pub stats: InstanceStats,
    pub max_clique_size: usize,
    pub degree_bound: i64,
    pub checks: Vec<Check>,
}

impl StructureReport {
    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.verdict, Verdict::Violation(_)))
    }

    pub fn has_violations(&self) -> bool {
        self.violations().next().is_some()
    }

    /// Machine-readable key-value lines, one finding per line.
    pub fn to_kv_lines(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        writeln!(out, "cg_vertices {}", self.cg_vertices).unwrap();
        writeln!(out, "cg_edges {}", self.cg_edges).unwrap();
        writeln!(out, "cg_max_degree {}", self.cg_max_degree).unwrap();
        writeln!(out, "m1 {}", self.stats.m1).unwrap();
        writeln!(out, "m2 {}", self.stats.m2).unwrap();
        writeln!(out, "delta1 {}", self.stats.delta1).unwrap();
        writeln!(out, "delta2 {}", self.stats.delta2).unwrap();
        writeln!(out, "g1_acyclic {}", self.stats.g1_acyclic).unwrap();
        writeln!(out, "max_clique {}", self.max_clique_size).unwrap();
        writeln!(out, "degree_bound {}", self.degree_bound).unwrap();
        for check in &self.checks {
            match &check.verdict {
                Verdict::Pass => writeln!(out, "check {} pass {}", check.name, check.detail),
                Verdict::Violation(w) => {
                    writeln!(out, "check {} violation {} witness={w}", check.name, check.detail)
                }
                Verdict::Skipped(reason) => {
                    writeln!(out, "check {} skipped {reason}", check.name)
                }
            }
            .unwrap();
        }
        writeln!(out, "violations {}", self.violations().count()).unwrap();
        out
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "conflict graph: {} vertices, {} edges, max degree {}",
            self.cg_vertices, self.cg_edges, self.cg_max_degree
        )?;
        writeln!(
            f,
            "instance: m1={} m2={} delta1={} delta2={} g1_acyclic={}",
            self.stats.m1, self.stats.m2, self.stats.delta1, self.stats.delta2,
            self.stats.g1_acyclic
        )?;
        writeln!(
            f,
            "max clique {} | degree bound {}",
            self.max_clique_size, self.degree_bound
        )?;
        for check in &self.checks {
            match &check.verdict {
                Verdict::Pass => writeln!(f, "[pass] {}: {}", check.name, check.detail)?,
                Verdict::Violation(w) => {
                    writeln!(f, "[VIOLATION] {}: {} witness={w}", check.name, check.detail)?
                }
                Verdict::Skipped(r) => writeln!(f, "[skipped] {}: {r}", check.name)?,
            }
        }
        Ok(())
    }
}

/// Runs every detector whose hypothesis the instance satisfies and records
/// verdicts. Violations become report entries, never panics or errors.
pub fn check_all(inst: &AlignmentInstance) -> StructureReport {
    let cg = build_conflict_graph(inst);
    let adj = cg.adjacency();
    let stats = instance_stats(inst);
    let bound = degree_bound(inst);
    let (omega, omega_witness) = max_clique(adj);
    let cg_max_degree = graph::max_degree(adj);
    let mut checks = Vec::new();

    // Degree bound applies to every instance, any m1, m2.
    let delta_ok = (cg_max_degree as i64) <= bound;
    checks.push(Check {
        name: "degree-bound",
        verdict: if delta_ok {
            Verdict::Pass
        } else {
            Verdict::Violation(format!("max_degree={cg_max_degree}"))
        },
        detail: format!("max_degree={cg_max_degree} bound={bound}"),
    });

    if stats.m2 == 1 {
        let cap = (stats.m1 * stats.m1) as usize;
        checks.push(Check {
            name: "clique-bound",
            verdict: if omega <= cap {
                Verdict::Pass
            } else {
                Verdict::Violation(format!("{omega_witness:?}"))
            },
            detail: format!("omega={omega} bound={cap}"),
        });

        let dmin = stats.delta1.min(stats.delta2);
        let d = 2 * dmin + 2;
        let claw = find_claw(adj, d);
        checks.push(Check {
            name: "claw-free",
            verdict: match &claw {
                None => Verdict::Pass,
                Some(c) => Verdict::Violation(format!("{c:?}")),
            },
            detail: format!("d={d}"),
        });

        let wheel7 = find_induced_wheel(adj, 7, adj.len());
        checks.push(Check {
            name: "wheel-free-k7",
            verdict: match &wheel7 {
                None => Verdict::Pass,
                Some(w) => Verdict::Violation(format!("{w:?}")),
            },
            detail: "k in [7, n]".into(),
        });

        if stats.m1 <= 2 {
            let wheel5 = find_induced_wheel(adj, 5, adj.len());
            checks.push(Check {
                name: "wheel-free-k5",
                verdict: match &wheel5 {
                    None => Verdict::Pass,
                    Some(w) => Verdict::Violation(format!("{w:?}")),
                },
                detail: "k in [5, n]".into(),
            });
            let fan8 = find_induced_fan(adj, 8);
            checks.push(Check {
                name: "fan-free-f8",
                verdict: match &fan8 {
                    None => Verdict::Pass,
                    Some(fan) => Verdict::Violation(format!("{fan:?}")),
                },
                detail: "t >= 8".into(),
            });
        }

        if stats.g1_acyclic {
            match is_weakly_triangulated(adj) {
                Ok((true, _)) => checks.push(Check {
                    name: "weakly-triangulated",
                    verdict: Verdict::Pass,
                    detail: "no hole or antihole of length >= 5".into(),
                }),
                Ok((false, witness)) => checks.push(Check {
                    name: "weakly-triangulated",
                    verdict: Verdict::Violation(format!("{witness:?}")),
                    detail: "hole or antihole found".into(),
                }),
                Err(e) => checks.push(Check {
                    name: "weakly-triangulated",
                    verdict: Verdict::Skipped(e.to_string()),
                    detail: String::new(),
                }),
            }
        }
    }

    StructureReport {
        cg_vertices: cg.vertex_count(),
        cg_edges: cg.edge_count(),
        cg_max_degree,
        stats,
        max_clique_size: omega,
        degree_bound: bound,
        checks,
    }
}
