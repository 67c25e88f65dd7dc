//! Seeded validation corpora: one preset per structural claim, runnable from
//! the CLI (`corpus --preset <id>`) and from the acceptance suite.
//!
//! Every preset sweeps deterministic seeds, recomputes the hypothesis
//! parameters from each generated instance, and records a violation string
//! (with the serialized instance and witness) for anything that fails, so a
//! red run is directly minimizable.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::conflict::{build_conflict_graph, ConflictGraph};
use crate::error::{Error, Result};
use crate::generator::{generate, GenParams};
use crate::graph::{self, Adjacency};
use crate::model::{instance_stats, serialize_instance, AlignmentInstance, SideGraph};
use crate::oracle::{brute_force_best, OracleLimit};
use crate::solver::{
    bounded_search_fpt, chain_approx, exact_mis, greedy_clawfree, kfree_fpt,
    ramsey_clique_removal, DEFAULT_NODE_BUDGET,
};
use crate::structure::{
    find_chordless_cycle, find_claw, find_induced_fan, find_induced_wheel, is_weakly_triangulated,
    max_clique, verify_chordless_cycle, verify_claw, verify_wheel,
};

/// Outcome of one preset run.
#[derive(Debug, Clone)]
pub struct PresetReport {
    pub preset: &'static str,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl PresetReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// One machine-parseable line: `criterion <id> pass|FAIL cases=<n> violations=<k>`.
    pub fn summary_line(&self) -> String {
        format!(
            "criterion {} {} cases={} violations={}",
            self.preset,
            if self.passed() { "pass" } else { "FAIL" },
            self.cases,
            self.violations.len()
        )
    }
}

pub const PRESETS: &[&str] = &[
    "reduction",
    "theorem3",
    "theorem6",
    "theorem12",
    "theorem15",
    "claw",
    "degree",
    "corollary8",
    "ramsey",
    "fpt",
    "detectors",
];

pub fn default_count(preset: &str) -> Option<usize> {
    match preset {
        "reduction" => Some(200),
        "theorem3" => Some(200),
        "theorem6" => Some(500),
        "theorem12" => Some(300),
        "theorem15" => Some(500),
        "claw" => Some(300),
        "degree" => Some(500),
        "corollary8" => Some(200),
        "ramsey" => Some(200),
        "fpt" => Some(100),
        "detectors" => Some(150),
        _ => None,
    }
}

/// Runs a preset over `count` cases starting at `base_seed`.
pub fn run_preset(preset: &str, count: usize, base_seed: u64) -> Result<PresetReport> {
    match preset {
        "reduction" => Ok(reduction_equivalence(count, base_seed)),
        "theorem3" => Ok(weak_triangulation(count, base_seed)),
        "theorem6" => Ok(wheel_and_fan_m1_2(count, base_seed)),
        "theorem12" => Ok(wheel_k7(count, base_seed)),
        "theorem15" => Ok(clique_bound(count, base_seed)),
        "claw" => Ok(claw_free(count, base_seed)),
        "degree" => Ok(degree_lemma(count, base_seed)),
        "corollary8" => Ok(chain_bound(count, base_seed)),
        "ramsey" => Ok(ramsey_product(count, base_seed)),
        "fpt" => Ok(fpt_correctness(count, base_seed)),
        "detectors" => Ok(detector_soundness(count, base_seed)),
        other => Err(Error::Contract(format!(
            "unknown preset `{other}` (expected one of {PRESETS:?})"
        ))),
    }
}

fn violation(params: &GenParams, inst: &AlignmentInstance, what: impl AsRef<str>) -> String {
    format!(
        "seed={} {}\ninstance:\n{}",
        params.seed,
        what.as_ref(),
        serialize_instance(inst)
    )
}

/// Sweeps `count` generated instances; when `require_nonempty_cg` the seed
/// walker skips instances with empty conflict graphs (retry-with-next-seed).
fn sweep(
    preset: &'static str,
    count: usize,
    base_seed: u64,
    require_nonempty_cg: bool,
    mut params_for: impl FnMut(usize) -> GenParams,
    mut check: impl FnMut(&GenParams, &AlignmentInstance, &ConflictGraph) -> Vec<String>,
) -> PresetReport {
    let mut violations = Vec::new();
    let mut cases = 0;
    let mut seed = base_seed;
    let mut attempts = 0usize;
    let max_attempts = count.saturating_mul(50).max(1000);
    while cases < count && attempts < max_attempts {
        attempts += 1;
        let mut params = params_for(cases);
        params.seed = seed;
        seed += 1;
        let inst = match generate(&params) {
            Ok(inst) => inst,
            Err(e) => {
                violations.push(format!("seed={} generator error: {e}", params.seed));
                break;
            }
        };
        let cg = build_conflict_graph(&inst);
        if require_nonempty_cg && cg.vertex_count() == 0 {
            continue;
        }
        violations.extend(check(&params, &inst, &cg));
        cases += 1;
    }
    if cases < count {
        violations.push(format!(
            "only {cases}/{count} usable instances within {max_attempts} seed attempts"
        ));
    }
    PresetReport {
        preset,
        cases,
        violations,
    }
}

// ---------------------------------------------------------------------------
// Criterion 1: oracle / exact-MIS reduction equivalence
// ---------------------------------------------------------------------------

fn reduction_equivalence(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "reduction",
        count,
        base_seed,
        false,
        |_| GenParams {
            n1: 10,
            n2: 10,
            p1: 0.3,
            p2: 0.3,
            m1_cap: 3,
            m2_cap: 2,
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let mut out = Vec::new();
            let oracle = match brute_force_best(inst, OracleLimit::default()) {
                Ok(a) => a,
                Err(e) => return vec![violation(params, inst, format!("oracle failed: {e}"))],
            };
            let exact = match exact_mis(cg, DEFAULT_NODE_BUDGET) {
                Ok(r) => r,
                Err(e) => return vec![violation(params, inst, format!("exact_mis failed: {e}"))],
            };
            if oracle.conserved() != exact.chosen.len() {
                out.push(violation(
                    params,
                    inst,
                    format!(
                        "oracle conserved {} != exact MIS size {}",
                        oracle.conserved(),
                        exact.chosen.len()
                    ),
                ));
            }
            out
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 2: acyclic G1, m2 = 1 conflict graphs are weakly triangulated
// ---------------------------------------------------------------------------

fn weak_triangulation(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "theorem3",
        count,
        base_seed,
        false,
        |_| GenParams {
            n1: 12,
            n2: 12,
            p1: 0.7,
            p2: 0.35,
            m1_cap: 3,
            m2_cap: 1,
            g1_acyclic: true,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| match is_weakly_triangulated(cg.adjacency()) {
            Ok((true, _)) => Vec::new(),
            Ok((false, witness)) => vec![violation(
                params,
                inst,
                format!("conflict graph not weakly triangulated: {witness:?}"),
            )],
            Err(e) => vec![violation(params, inst, format!("check failed: {e}"))],
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 3: m1 = 2, m2 = 1 conflict graphs have no W_k (k>=5), no F_t (t>=8)
// ---------------------------------------------------------------------------

fn wheel_and_fan_m1_2(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "theorem6",
        count,
        base_seed,
        false,
        |_| GenParams {
            n1: 12,
            n2: 12,
            p1: 0.35,
            p2: 0.35,
            m1_cap: 2,
            m2_cap: 1,
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let mut out = Vec::new();
            let adj = cg.adjacency();
            if let Some(w) = find_induced_wheel(adj, 5, adj.len()) {
                out.push(violation(params, inst, format!("induced wheel found: {w:?}")));
            }
            if let Some(f) = find_induced_fan(adj, 8) {
                out.push(violation(params, inst, format!("induced fan found: {f:?}")));
            }
            out
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 4: m2 = 1 conflict graphs have no W_k for k in [7, 10]; an
// m1 = 3 construction exhibits W5/W6
// ---------------------------------------------------------------------------

/// Hand-frozen m1 = 3, m2 = 1 instance whose conflict graph contains an
/// induced W5 or W6 (found by seeded search, verified by the wheel detector).
pub const WHEEL_M1_3_INSTANCE: &str = "TO_BE_FROZEN";

pub fn wheel_construction() -> AlignmentInstance {
    crate::model::parse_instance(WHEEL_M1_3_INSTANCE).expect("frozen instance parses")
}

fn wheel_k7(count: usize, base_seed: u64) -> PresetReport {
    let mut report = sweep(
        "theorem12",
        count,
        base_seed,
        false,
        |i| GenParams {
            n1: 12,
            n2: 12,
            p1: 0.4,
            p2: 0.4,
            m1_cap: 2 + (i % 3),
            m2_cap: 1,
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let adj = cg.adjacency();
            match find_induced_wheel(adj, 7, 10.min(adj.len())) {
                None => Vec::new(),
                Some(w) => vec![violation(params, inst, format!("induced wheel found: {w:?}"))],
            }
        },
    );
    // The positive side: the frozen m1 = 3 construction must exhibit W5 or W6.
    let inst = wheel_construction();
    let stats = instance_stats(&inst);
    if stats.m1 != 3 || stats.m2 != 1 {
        report.violations.push(format!(
            "wheel construction has m1={} m2={}, expected 3 and 1",
            stats.m1, stats.m2
        ));
    }
    let cg = build_conflict_graph(&inst);
    match find_induced_wheel(cg.adjacency(), 5, 6) {
        Some(w) if verify_wheel(cg.adjacency(), &w) => {}
        Some(w) => report
            .violations
            .push(format!("wheel construction witness fails re-verification: {w:?}")),
        None => report
            .violations
            .push("wheel construction exhibits no W5 or W6".into()),
    }
    report
}

// ---------------------------------------------------------------------------
// Criterion 5: clique number bounded by m1^2, with tight constructions
// ---------------------------------------------------------------------------

/// The clique construction: one `G1` edge `ab`, `m1` similarity partners on
/// each end, and a complete bipartite `G2` between the two partner sets.
/// Every partner pair yields a c4 and all m1^2 c4s share `a` and `b`, so the
/// conflict graph is K_{m1^2}.
pub fn clique_construction(m1: usize) -> AlignmentInstance {
    let mut g1 = SideGraph::new(2);
    g1.add_edge(0, 1).unwrap();
    let mut g2 = SideGraph::new(2 * m1);
    // vertices 0..m1 are partners of b (named c_j), m1..2*m1 partners of a (d_i)
    for c in 0..m1 {
        for d in m1..2 * m1 {
            g2.add_edge(c, d).unwrap();
        }
    }
    let mut sim = Vec::new();
    for d in m1..2 * m1 {
        sim.push((0, d)); // a - d_i
    }
    for c in 0..m1 {
        sim.push((1, c)); // b - c_j
    }
    AlignmentInstance::with_default_names(g1, g2, sim).expect("construction is valid")
}

fn clique_bound(count: usize, base_seed: u64) -> PresetReport {
    let mut report = sweep(
        "theorem15",
        count,
        base_seed,
        false,
        |i| GenParams {
            n1: 12,
            n2: 12,
            p1: 0.4,
            p2: 0.4,
            m1_cap: 1 + (i % 3),
            m2_cap: 1,
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let m1 = inst.m1();
            let (omega, witness) = max_clique(cg.adjacency());
            if omega > m1 * m1 {
                vec![violation(
                    params,
                    inst,
                    format!("omega={omega} exceeds m1^2={} witness={witness:?}", m1 * m1),
                )]
            } else {
                Vec::new()
            }
        },
    );
    for m1 in [2usize, 3] {
        let inst = clique_construction(m1);
        if inst.m1() != m1 || inst.m2() != 1 {
            report.violations.push(format!(
                "clique construction for m1={m1} has m1={} m2={}",
                inst.m1(),
                inst.m2()
            ));
            continue;
        }
        let cg = build_conflict_graph(&inst);
        let (omega, _) = max_clique(cg.adjacency());
        if omega != m1 * m1 {
            report.violations.push(format!(
                "clique construction for m1={m1} achieves omega={omega}, expected {}",
                m1 * m1
            ));
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Criterion 6: no (2*Delta_min + 2)-claw for m2 = 1
// ---------------------------------------------------------------------------

fn claw_free(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "claw",
        count,
        base_seed,
        false,
        |i| GenParams {
            n1: 10,
            n2: 10,
            p1: 0.4,
            p2: 0.4,
            m1_cap: 1 + (i % 3),
            m2_cap: 1,
            g1_acyclic: false,
            max_degree_cap: [Some(2), Some(3), None][i % 3],
            seed: 0,
        },
        |params, inst, cg| {
            let stats = instance_stats(inst);
            let d = 2 * stats.delta1.min(stats.delta2) + 2;
            match find_claw(cg.adjacency(), d) {
                None => Vec::new(),
                Some(c) => vec![violation(params, inst, format!("{d}-claw found: {c:?}"))],
            }
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 7: conflict-graph degree bounded by the closed formula
// ---------------------------------------------------------------------------

fn degree_lemma(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "degree",
        count,
        base_seed,
        false,
        |i| GenParams {
            n1: 10,
            n2: 10,
            p1: 0.35,
            p2: 0.35,
            m1_cap: 1 + (i % 3),
            m2_cap: 1 + ((i / 3) % 3),
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let mut out = Vec::new();
            let bound = crate::structure::degree_bound(inst);
            let delta = cg.max_degree() as i64;
            if delta > bound {
                out.push(violation(
                    params,
                    inst,
                    format!("conflict-graph degree {delta} exceeds bound {bound}"),
                ));
            }
            if inst.m1() <= 1 && inst.m2() <= 1 && cg.edge_count() != 0 {
                out.push(violation(
                    params,
                    inst,
                    format!("m1=m2=1 but conflict graph has {} edges", cg.edge_count()),
                ));
            }
            out
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 8: chain approximation meets its bound and shape assertion
// ---------------------------------------------------------------------------

fn chain_bound(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "corollary8",
        count,
        base_seed,
        true,
        |_| GenParams {
            n1: 12,
            n2: 12,
            p1: 0.45,
            p2: 0.45,
            m1_cap: 2,
            m2_cap: 1,
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let result = match chain_approx(cg, true) {
                Ok(r) => r,
                Err(e) => {
                    return vec![violation(params, inst, format!("chain approximation failed: {e}"))]
                }
            };
            let delta = cg.max_degree() as i64;
            let bound = (delta - 1).div_euclid(2);
            let mut out = Vec::new();
            if (result.chosen.len() as i64) < bound {
                out.push(violation(
                    params,
                    inst,
                    format!("chain size {} below bound {bound}", result.chosen.len()),
                ));
            }
            if !graph::is_independent_set(cg.adjacency(), &result.chosen) {
                out.push(violation(params, inst, "chain result not independent"));
            }
            out
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 9: Ramsey product bound
// ---------------------------------------------------------------------------

fn ramsey_product(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "ramsey",
        count,
        base_seed,
        true,
        |i| GenParams {
            n1: 12,
            n2: 12,
            p1: 0.4,
            p2: 0.4,
            m1_cap: 1 + (i % 3),
            m2_cap: 1 + (i % 2),
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let (result, clique) = match ramsey_clique_removal(cg) {
                Ok(x) => x,
                Err(e) => return vec![violation(params, inst, format!("clique removal failed: {e}"))],
            };
            let mut out = Vec::new();
            let n = cg.vertex_count() as f64;
            let product = (result.chosen.len() * clique.len()) as f64;
            if product + 1e-9 < 0.25 * n.log2().powi(2) {
                out.push(violation(
                    params,
                    inst,
                    format!(
                        "product {}x{} below log^2(n)/4 for n={n}",
                        result.chosen.len(),
                        clique.len()
                    ),
                ));
            }
            if !graph::is_clique(cg.adjacency(), &clique) {
                out.push(violation(params, inst, "returned clique is not a clique"));
            }
            out
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 10: FPT solvers agree with the exact solver for all k
// ---------------------------------------------------------------------------

fn fpt_correctness(count: usize, base_seed: u64) -> PresetReport {
    sweep(
        "fpt",
        count,
        base_seed,
        false,
        |i| GenParams {
            n1: 8,
            n2: 8,
            p1: 0.35,
            p2: 0.35,
            m1_cap: 1 + (i % 3),
            m2_cap: 1,
            g1_acyclic: false,
            max_degree_cap: None,
            seed: 0,
        },
        |params, inst, cg| {
            let mut out = Vec::new();
            let exact = match exact_mis(cg, DEFAULT_NODE_BUDGET) {
                Ok(r) => r.chosen.len(),
                Err(e) => return vec![violation(params, inst, format!("exact_mis failed: {e}"))],
            };
            let r = inst.m1() * inst.m1() + 1;
            for k in 1..=exact + 1 {
                let expected = k <= exact;
                match bounded_search_fpt(cg, k) {
                    Ok(found) => {
                        if found.is_some() != expected {
                            out.push(violation(
                                params,
                                inst,
                                format!("bounded search found({k})={} but exact={exact}", found.is_some()),
                            ));
                        }
                    }
                    Err(e) => out.push(violation(params, inst, format!("bounded search failed: {e}"))),
                }
                match kfree_fpt(cg, k, r) {
                    Ok(found) => {
                        if found.is_some() != expected {
                            out.push(violation(
                                params,
                                inst,
                                format!("kfree found({k})={} but exact={exact}", found.is_some()),
                            ));
                        }
                    }
                    Err(e) => out.push(violation(params, inst, format!("kfree_fpt failed: {e}"))),
                }
            }
            out
        },
    )
}

// ---------------------------------------------------------------------------
// Criterion 11: planted-subgraph detector soundness
// ---------------------------------------------------------------------------

/// Random graph with a zone of `planted` vertices whose internal edges are
/// exactly `zone_edges`; all other pairs appear with probability `p`.
fn planted_graph(
    n: usize,
    p: f64,
    planted: usize,
    zone_edges: &[(usize, usize)],
    seed: u64,
) -> Adjacency {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if i < planted && j < planted {
                continue;
            }
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    edges.extend_from_slice(zone_edges);
    graph::from_edges(n, &edges)
}

pub fn planted_hole(n: usize, p: f64, len: usize, seed: u64) -> Adjacency {
    let cycle: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    planted_graph(n, p, len, &cycle, seed)
}

pub fn planted_wheel(n: usize, p: f64, rim: usize, seed: u64) -> Adjacency {
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    planted_graph(n, p, rim + 1, &edges, seed)
}

pub fn planted_claw(n: usize, p: f64, d: usize, seed: u64) -> Adjacency {
    let edges: Vec<(usize, usize)> = (0..d).map(|i| (i, d)).collect();
    planted_graph(n, p, d + 1, &edges, seed)
}

fn detector_soundness(count: usize, base_seed: u64) -> PresetReport {
    let per_kind = count.div_ceil(3);
    let mut violations = Vec::new();
    let n = 18;
    let p = 0.3;

    for i in 0..per_kind {
        let len = 5 + (i % 4);
        let adj = planted_hole(n, p, len, base_seed + i as u64);
        match find_chordless_cycle(&adj, 5, len) {
            Some(hole) if verify_chordless_cycle(&adj, &hole) && hole.len() <= len => {}
            Some(hole) => violations.push(format!(
                "planted hole case {i}: invalid witness {hole:?} (planted {len})"
            )),
            None => violations.push(format!("planted hole case {i}: C_{len} not found")),
        }
    }

    for i in 0..per_kind {
        let rim = 4 + (i % 4);
        let adj = planted_wheel(n, p, rim, base_seed + 1000 + i as u64);
        match find_induced_wheel(&adj, 4, rim) {
            Some(w) if verify_wheel(&adj, &w) && w.rim.len() <= rim => {}
            Some(w) => violations.push(format!(
                "planted wheel case {i}: invalid witness {w:?} (planted rim {rim})"
            )),
            None => violations.push(format!("planted wheel case {i}: W_{rim} not found")),
        }
    }

    for i in 0..per_kind {
        let d = 3 + (i % 3);
        let adj = planted_claw(n, p, d, base_seed + 2000 + i as u64);
        match find_claw(&adj, d) {
            Some(c) if verify_claw(&adj, &c) && c.talons.len() == d => {}
            Some(c) => violations.push(format!(
                "planted claw case {i}: invalid witness {c:?} (planted {d})"
            )),
            None => violations.push(format!("planted claw case {i}: {d}-claw not found")),
        }
    }

    PresetReport {
        preset: "detectors",
        cases: per_kind * 3,
        violations,
    }
}

// ---------------------------------------------------------------------------
// Extra invariants exercised by the test suite
// ---------------------------------------------------------------------------

/// Greedy lower-bound sanity: on m2 = 1 instances the minimum-degree greedy
/// respects the (d-1) factor for d = 2*Delta_min + 2.
pub fn greedy_ratio_holds(inst: &AlignmentInstance) -> Result<bool> {
    let cg = build_conflict_graph(inst);
    if cg.vertex_count() == 0 {
        return Ok(true);
    }
    let exact = exact_mis(&cg, DEFAULT_NODE_BUDGET)?;
    let greedy = greedy_clawfree(&cg)?;
    let stats = instance_stats(inst);
    let d = 2 * stats.delta1.min(stats.delta2) + 2;
    Ok(greedy.chosen.len() * (d - 1) >= exact.chosen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_construction_shapes() {
        for m1 in 1..=3 {
            let inst = clique_construction(m1);
            assert_eq!(inst.m1(), m1);
            assert_eq!(inst.m2(), 1);
            let cg = build_conflict_graph(&inst);
            assert_eq!(cg.vertex_count(), m1 * m1);
            let (omega, _) = max_clique(cg.adjacency());
            assert_eq!(omega, m1 * m1);
        }
    }

    #[test]
    fn planted_builders_are_deterministic() {
        let a = planted_hole(18, 0.3, 6, 42);
        let b = planted_hole(18, 0.3, 6, 42);
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_preset_is_rejected() {
        assert!(run_preset("nope", 1, 1).is_err());
    }

    #[test]
    fn small_smoke_runs() {
        for preset in ["reduction", "theorem3", "theorem6", "degree"] {
            let report = run_preset(preset, 5, 1).unwrap();
            assert!(report.passed(), "{preset}: {:?}", report.violations);
        }
    }
}
