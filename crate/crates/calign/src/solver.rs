//! Maximum-independent-set solvers over the conflict graph and conversion of
//! independent sets into alignments.
//!
//! The exact branch-and-bound and the bounded search tree are deterministic:
//! branching vertices break ties toward the lowest index and branches are
//! explored in a fixed order, so a given conflict graph always produces the
//! same solution.

use std::collections::BTreeSet;

use crate::conflict::{classify_conflict, ConflictGraph, ConflictType};
use crate::error::{Error, Result};
use crate::graph;
use crate::model::Alignment;

/// Default node budget for [`exact_mis`]. Desk-scale instances finish far
/// below this; runaway inputs fail loudly instead of spinning.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Outcome of a solver run: the chosen c4 indices (an independent set of the
/// conflict graph), the realized alignment, and an optional certificate.
///
/// `alignment.conserved()` is recomputed from the matching and may exceed
/// `chosen.len()` when extra c4s are realized for free.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub chosen: Vec<usize>,
    pub alignment: Alignment,
    pub method: &'static str,
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone)]
pub enum Certificate {
    /// A clique found alongside the independent set (Ramsey extraction).
    Clique(Vec<usize>),
    /// The parameter k of a fixed-parameter run.
    Parameter(usize),
    /// A proven lower bound on the solution size.
    Bound(i64),
}

/// Converts an independent set of the conflict graph into the alignment
/// realizing every chosen c4 (the union of their similarity edges, which
/// independence guarantees to be a matching).
pub fn alignment_from_is(cg: &ConflictGraph, chosen: &[usize]) -> Result<Alignment> {
    for (i, &u) in chosen.iter().enumerate() {
        for &v in &chosen[i + 1..] {
            if u == v || cg.has_edge(u, v) {
                return Err(Error::Contract(format!(
                    "chosen set is not independent: c4s {u} and {v}"
                )));
            }
        }
    }
    let mut pairs = BTreeSet::new();
    for &i in chosen {
        for e in cg.c4s()[i].sim_edges() {
            pairs.insert(e);
        }
    }
    let alignment = Alignment::new(cg.instance(), pairs.into_iter().collect())?;
    debug_assert!(alignment.conserved() >= chosen.len());
    Ok(alignment)
}

fn build_result(
    cg: &ConflictGraph,
    mut chosen: Vec<usize>,
    method: &'static str,
    certificate: Option<Certificate>,
) -> Result<SolveResult> {
    chosen.sort_unstable();
    let alignment = alignment_from_is(cg, &chosen)?;
    Ok(SolveResult {
        chosen,
        alignment,
        method,
        certificate,
    })
}

// ---------------------------------------------------------------------------
// Exact branch and bound
// ---------------------------------------------------------------------------

struct MisSearch<'a> {
    adj: &'a [Vec<usize>],
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
}

impl MisSearch<'_> {
    /// Number of cliques in a greedy clique cover of `active`; an upper bound
    /// on the independence number of the induced subgraph.
    fn cover_bound(&self, active: &[usize]) -> usize {
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        'verts: for &v in active {
            for clique in &mut cliques {
                if clique.iter().all(|&u| graph::has_edge(self.adj, u, v)) {
                    clique.push(v);
                    continue 'verts;
                }
            }
            cliques.push(vec![v]);
        }
        cliques.len()
    }

    fn search(&mut self, mut active: Vec<usize>, mut chosen: Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            let mut best = std::mem::take(&mut self.best);
            best.sort_unstable();
            return Err(Error::BudgetExceeded {
                nodes: self.nodes - 1,
                best,
            });
        }
        let mut memb = vec![false; self.adj.len()];
        for &v in &active {
            memb[v] = true;
        }
        // Vertices isolated within `active` belong to some maximum solution.
        active.retain(|&v| {
            if self.adj[v].iter().any(|&u| memb[u]) {
                true
            } else {
                chosen.push(v);
                false
            }
        });
        if active.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return Ok(());
        }
        if chosen.len() + self.cover_bound(&active) <= self.best.len() {
            return Ok(());
        }
        // Branch on a maximum-degree vertex, lowest index on ties.
        let mut pick = active[0];
        let mut pick_deg = 0;
        for &v in &active {
            let d = self.adj[v].iter().filter(|&&u| memb[u]).count();
            if d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        // Include branch: take `pick`, drop its closed neighborhood.
        let mut include_chosen = chosen.clone();
        include_chosen.push(pick);
        let include_active: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&v| v != pick && !graph::has_edge(self.adj, pick, v))
            .collect();
        self.search(include_active, include_chosen)?;
        // Exclude branch.
        let exclude_active: Vec<usize> = active.iter().copied().filter(|&v| v != pick).collect();
        self.search(exclude_active, chosen)
    }
}

/// Exact maximum independent set of the conflict graph by branch and bound
/// with a greedy clique-cover upper bound.
pub fn exact_mis(cg: &ConflictGraph, budget: u64) -> Result<SolveResult> {
    let mut search = MisSearch {
        adj: cg.adjacency(),
        budget,
        nodes: 0,
        best: Vec::new(),
    };
    search.search((0..cg.vertex_count()).collect(), Vec::new())?;
    let best = std::mem::take(&mut search.best);
    build_result(cg, best, "exact", None)
}

// ---------------------------------------------------------------------------
// Bounded search tree (FPT in the solution size)
// ---------------------------------------------------------------------------

/// Finds an independent set of exactly `k` vertices inside the subgraph
/// induced by `active`, or proves none exists. Branches over the closed
/// neighborhood of a minimum-degree vertex.
pub(crate) fn find_is_of_size(adj: &[Vec<usize>], active: &[usize], k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if active.len() < k {
        return None;
    }
    let mut memb = vec![false; adj.len()];
    for &v in active {
        memb[v] = true;
    }
    let mut pick = active[0];
    let mut pick_deg = usize::MAX;
    for &v in active {
        let d = adj[v].iter().filter(|&&u| memb[u]).count();
        if d < pick_deg {
            pick = v;
            pick_deg = d;
            if d == 0 {
                break;
            }
        }
    }
    // Some size-k independent set intersects N[pick]; branch over the choice.
    let mut branch_set: Vec<usize> = Vec::with_capacity(pick_deg + 1);
    branch_set.push(pick);
    branch_set.extend(adj[pick].iter().copied().filter(|&u| memb[u]));
    branch_set.sort_unstable();
    for &u in &branch_set {
        let next: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&v| v != u && !graph::has_edge(adj, u, v))
            .collect();
        if let Some(mut set) = find_is_of_size(adj, &next, k - 1) {
            set.push(u);
            return Some(set);
        }
    }
    None
}

/// Bounded-search-tree decision procedure: an independent set of size
/// exactly `k`, or `None` certifying that no such set exists.
pub fn bounded_search_fpt(cg: &ConflictGraph, k: usize) -> Result<Option<SolveResult>> {
    let active: Vec<usize> = (0..cg.vertex_count()).collect();
    match find_is_of_size(cg.adjacency(), &active, k) {
        Some(set) => Ok(Some(build_result(
            cg,
            set,
            "fpt",
            Some(Certificate::Parameter(k)),
        )?)),
        None => Ok(None),
    }
}

// ---------------------------------------------------------------------------
// Constructive (Delta - 2) / 2 approximation for m1 <= 2, m2 = 1
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ComponentShape {
    P1,
    P2,
    P3,
    C4,
}

/// Classifies a connected component as one of the four shapes the Type1
/// neighborhood of any vertex can induce when m1 <= 2 and m2 = 1. Any other
/// shape falsifies the structure theory and is surfaced as a violation.
fn component_shape(sub: &[Vec<usize>], comp: &[usize]) -> Result<ComponentShape> {
    let degrees: Vec<usize> = comp.iter().map(|&v| sub[v].len()).collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    match (comp.len(), edges) {
        (1, 0) => Ok(ComponentShape::P1),
        (2, 1) => Ok(ComponentShape::P2),
        (3, 2) => Ok(ComponentShape::P3),
        (4, 4) if degrees.iter().all(|&d| d == 2) => Ok(ComponentShape::C4),
        (n, m) => Err(Error::Structural(format!(
            "Type1 neighborhood component with {n} vertices and {m} edges is none of P1, P2, P3, C4"
        ))),
    }
}

/// Constructive approximation guaranteeing at least
/// ceil((Delta(C) - 2) / 2) chosen c4s for instances with m1 <= 2, m2 = 1.
///
/// Picks a maximum-degree vertex, classifies its neighbors by conflict type,
/// selects an independent half of every path or 4-cycle component induced by
/// the Type1 neighbors, adds the unique Type2 neighbor if present, and
/// excludes Type3 neighbors. With `extend` the result is grown greedily over
/// the rest of the graph (minimum degree first) without breaking
/// independence.
pub fn chain_approx(cg: &ConflictGraph, extend: bool) -> Result<SolveResult> {
    let inst = cg.instance();
    if inst.m1() > 2 || inst.m2() != 1 {
        return Err(Error::Contract(format!(
            "chain approximation requires m1 <= 2 and m2 = 1, got m1={}, m2={}",
            inst.m1(),
            inst.m2()
        )));
    }
    if cg.vertex_count() == 0 {
        return Err(Error::Contract(
            "chain approximation requires a nonempty conflict graph".into(),
        ));
    }

    let mut hub = 0;
    for v in 1..cg.vertex_count() {
        if cg.degree(v) > cg.degree(hub) {
            hub = v;
        }
    }
    let hub_c4 = cg.c4s()[hub];

    let mut type1 = Vec::new();
    let mut type2 = Vec::new();
    let mut type3 = Vec::new();
    for &u in cg.neighbors(hub) {
        match classify_conflict(inst, &hub_c4, &cg.c4s()[u])? {
            ConflictType::Type1a | ConflictType::Type1b => type1.push(u),
            ConflictType::Type2 => type2.push(u),
            ConflictType::Type3a | ConflictType::Type3b => type3.push(u),
            ConflictType::Unclassified => unreachable!("m2 = 1 was checked above"),
        }
    }
    if type2.len() > 1 {
        return Err(Error::Structural(format!(
            "{} Type2 neighbors on one c4; at most one is possible for m1 = 2",
            type2.len()
        )));
    }

    let (sub, back) = graph::induced(cg.adjacency(), &type1);
    let mut chosen: Vec<usize> = Vec::new();
    for comp in graph::components(&sub) {
        match component_shape(&sub, &comp)? {
            ComponentShape::P1 | ComponentShape::P2 => chosen.push(back[comp[0]]),
            ComponentShape::P3 => {
                for &v in &comp {
                    if sub[v].len() == 1 {
                        chosen.push(back[v]);
                    }
                }
            }
            ComponentShape::C4 => {
                let first = comp[0];
                let opposite = comp
                    .iter()
                    .copied()
                    .find(|&v| v != first && !graph::has_edge(&sub, first, v))
                    .expect("a 4-cycle has an opposite vertex");
                chosen.push(back[first]);
                chosen.push(back[opposite]);
            }
        }
    }
    chosen.extend(&type2);
    chosen.sort_unstable();

    let delta = cg.max_degree() as i64;
    let bound = (delta - 1).div_euclid(2); // ceil((delta - 2) / 2)
    if (chosen.len() as i64) < bound {
        return Err(Error::Structural(format!(
            "chain approximation selected {} c4s, below the guaranteed {bound}",
            chosen.len()
        )));
    }

    if extend {
        let candidates: Vec<usize> = (0..cg.vertex_count())
            .filter(|&v| {
                !chosen.contains(&v) && !chosen.iter().any(|&c| cg.has_edge(c, v))
            })
            .collect();
        chosen.extend(greedy_min_degree(cg.adjacency(), candidates));
        chosen.sort_unstable();
    }

    build_result(cg, chosen, "chain", Some(Certificate::Bound(bound)))
}

// ---------------------------------------------------------------------------
// Ramsey split and clique removal
// ---------------------------------------------------------------------------

/// Recursive Ramsey split: returns (independent set, clique), both sorted.
/// Guarantees binom(|I| + |K|, |I|) > n, which yields the
/// |I|*|K| >= log^2(n)/4 product bound.
fn ramsey_split(adj: &[Vec<usize>], active: &[usize]) -> (Vec<usize>, Vec<usize>) {
    if active.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let pivot = active[0];
    let mut nbrs = Vec::new();
    let mut rest = Vec::new();
    for &v in &active[1..] {
        if graph::has_edge(adj, pivot, v) {
            nbrs.push(v);
        } else {
            rest.push(v);
        }
    }
    let (is_n, cl_n) = ramsey_split(adj, &nbrs);
    let (is_r, cl_r) = ramsey_split(adj, &rest);

    let mut is_with_pivot = Vec::with_capacity(is_r.len() + 1);
    is_with_pivot.push(pivot);
    is_with_pivot.extend(is_r);
    let best_is = if is_n.len() > is_with_pivot.len() {
        is_n
    } else {
        is_with_pivot
    };

    let mut cl_with_pivot = Vec::with_capacity(cl_n.len() + 1);
    cl_with_pivot.push(pivot);
    cl_with_pivot.extend(cl_n);
    let best_cl = if cl_r.len() > cl_with_pivot.len() {
        cl_r
    } else {
        cl_with_pivot
    };

    (best_is, best_cl)
}

/// Boppana-Halldorsson clique removal: repeatedly Ramsey-split the residual
/// graph, keeping the largest independent set and the largest clique seen.
/// Verifies the product bound |I| * |K| >= log2^2(n) / 4 before returning.
pub fn ramsey_clique_removal(cg: &ConflictGraph) -> Result<(SolveResult, Vec<usize>)> {
    let n = cg.vertex_count();
    if n == 0 {
        return Err(Error::Contract(
            "clique removal requires a nonempty conflict graph".into(),
        ));
    }
    let adj = cg.adjacency();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut best_is: Vec<usize> = Vec::new();
    let mut best_clique: Vec<usize> = Vec::new();
    while !remaining.is_empty() {
        let (is_set, clique) = ramsey_split(adj, &remaining);
        if is_set.len() > best_is.len() {
            best_is = is_set;
        }
        if clique.len() > best_clique.len() {
            best_clique = clique.clone();
        }
        remaining.retain(|v| !clique.contains(v));
    }
    let product = (best_is.len() * best_clique.len()) as f64;
    let required = 0.25 * (n as f64).log2().powi(2);
    if product + 1e-9 < required {
        return Err(Error::Structural(format!(
            "Ramsey product bound violated: |I|*|K| = {product} < {required} on {n} vertices"
        )));
    }
    best_clique.sort_unstable();
    let result = build_result(
        cg,
        best_is,
        "ramsey",
        Some(Certificate::Clique(best_clique.clone())),
    )?;
    Ok((result, best_clique))
}

// ---------------------------------------------------------------------------
// FPT via K_r-freeness
// ---------------------------------------------------------------------------

/// Upper estimate of the Ramsey number R(r, k) as binom(r + k - 2, r - 1),
/// saturating on overflow.
fn ramsey_upper_bound(r: usize, k: usize) -> u64 {
    let n = (r + k - 2) as u128;
    let mut pick = (r - 1) as u128;
    if pick > n - pick {
        pick = n - pick;
    }
    let mut result: u128 = 1;
    for i in 1..=pick {
        result = result.saturating_mul(n - pick + i) / i;
        if result > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    result as u64
}

/// Fixed-parameter independent set search for K_r-free conflict graphs
/// (the caller passes r = m1^2 + 1, which the clique bound guarantees for
/// m2 = 1 instances).
///
/// Above the Ramsey threshold binom(r+k-2, r-1) the split extraction must
/// produce a size-k independent set, because the clique side cannot reach r;
/// if it does reach r, the clique bound itself is falsified and the witness
/// is surfaced as a structural violation. Below the threshold the bounded
/// search tree decides the question exactly.
pub fn kfree_fpt(cg: &ConflictGraph, k: usize, r: usize) -> Result<Option<SolveResult>> {
    if r < 2 {
        return Err(Error::Contract("clique-size bound r must be at least 2".into()));
    }
    if k == 0 {
        return Ok(Some(build_result(
            cg,
            Vec::new(),
            "kfree-fpt",
            Some(Certificate::Parameter(0)),
        )?));
    }
    let n = cg.vertex_count();
    let threshold = ramsey_upper_bound(r, k);
    if (n as u64) >= threshold {
        let active: Vec<usize> = (0..n).collect();
        let (mut is_set, clique) = ramsey_split(cg.adjacency(), &active);
        if clique.len() >= r {
            return Err(Error::Structural(format!(
                "extracted a clique of size {} from a conflict graph assumed K_{r}-free: {clique:?}",
                clique.len()
            )));
        }
        if is_set.len() < k {
            return Err(Error::Structural(format!(
                "Ramsey extraction returned |I|={}, |K|={} on {n} >= {threshold} vertices",
                is_set.len(),
                clique.len()
            )));
        }
        is_set.sort_unstable();
        is_set.truncate(k);
        Ok(Some(build_result(
            cg,
            is_set,
            "kfree-fpt",
            Some(Certificate::Parameter(k)),
        )?))
    } else {
        let active: Vec<usize> = (0..n).collect();
        match find_is_of_size(cg.adjacency(), &active, k) {
            Some(set) => Ok(Some(build_result(
                cg,
                set,
                "kfree-fpt",
                Some(Certificate::Parameter(k)),
            )?)),
            None => Ok(None),
        }
    }
}

// ---------------------------------------------------------------------------
// Minimum-degree greedy
// ---------------------------------------------------------------------------

/// Repeatedly selects a minimum-degree vertex (lowest index on ties) from
/// `candidates` and deletes its closed neighborhood.
fn greedy_min_degree(adj: &[Vec<usize>], mut candidates: Vec<usize>) -> Vec<usize> {
    let mut picked = Vec::new();
    while !candidates.is_empty() {
        let mut memb = vec![false; adj.len()];
        for &v in &candidates {
            memb[v] = true;
        }
        let mut pick = candidates[0];
        let mut pick_deg = usize::MAX;
        for &v in &candidates {
            let d = adj[v].iter().filter(|&&u| memb[u]).count();
            if d < pick_deg {
                pick = v;
                pick_deg = d;
                if d == 0 {
                    break;
                }
            }
        }
        picked.push(pick);
        candidates.retain(|&v| v != pick && !graph::has_edge(adj, pick, v));
    }
    picked
}

/// Minimum-degree greedy independent set. On a d-claw-free graph this is a
/// (d-1)-approximation; conflict graphs with m2 = 1 are (2*Delta_min + 2)-
/// claw-free, so the guarantee is a factor of 2*Delta_min + 1.
pub fn greedy_clawfree(cg: &ConflictGraph) -> Result<SolveResult> {
    let picked = greedy_min_degree(cg.adjacency(), (0..cg.vertex_count()).collect());
    build_result(cg, picked, "greedy", None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::build_conflict_graph;
    use crate::model::{parse_instance, AlignmentInstance};

    /// k disjoint single-c4 components: edgeless conflict graph on k vertices.
    fn disjoint_c4s(k: usize) -> AlignmentInstance {
        let mut text = String::new();
        for i in 0..k {
            text.push_str(&format!("g1 a{i} b{i}\ng2 c{i} d{i}\n"));
            text.push_str(&format!("sim a{i} d{i}\nsim b{i} c{i}\n"));
        }
        parse_instance(&text).unwrap()
    }

    /// c4 ring: G1 is a k-cycle, conflict graph is the cycle C_k.
    fn ring_instance(k: usize) -> AlignmentInstance {
        let mut text = String::new();
        for i in 0..k {
            text.push_str(&format!("g1 v{} v{}\n", i, (i + 1) % k));
            text.push_str(&format!("g2 a{i} b{i}\n"));
        }
        for i in 0..k {
            text.push_str(&format!("sim v{i} a{i}\n"));
            text.push_str(&format!("sim v{} b{i}\n", (i + 1) % k));
        }
        parse_instance(&text).unwrap()
    }

    fn chain_instance(k: usize) -> AlignmentInstance {
        let mut text = String::new();
        for i in 0..k {
            text.push_str(&format!("g1 v{} v{}\n", i, i + 1));
            text.push_str(&format!("g2 a{i} b{i}\n"));
            text.push_str(&format!("sim v{i} a{i}\nsim v{} b{i}\n", i + 1));
        }
        parse_instance(&text).unwrap()
    }

    #[test]
    fn ring_conflict_graph_is_a_cycle() {
        let inst = ring_instance(5);
        let cg = build_conflict_graph(&inst);
        assert_eq!(cg.vertex_count(), 5);
        assert_eq!(cg.edge_count(), 5);
        assert!((0..5).all(|v| cg.degree(v) == 2));
    }

    #[test]
    fn exact_on_edgeless_graph_takes_everything() {
        let inst = disjoint_c4s(7);
        let cg = build_conflict_graph(&inst);
        let r = exact_mis(&cg, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.chosen.len(), 7);
        assert_eq!(r.alignment.conserved(), 7);
    }

    #[test]
    fn exact_on_c5() {
        let inst = ring_instance(5);
        let cg = build_conflict_graph(&inst);
        let r = exact_mis(&cg, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.chosen.len(), 2);
    }

    #[test]
    fn exact_budget_carries_best_so_far() {
        let inst = ring_instance(9);
        let cg = build_conflict_graph(&inst);
        let err = exact_mis(&cg, 1).unwrap_err();
        match err {
            Error::BudgetExceeded { nodes, .. } => assert_eq!(nodes, 1),
            other => panic!("expected budget error, got {other}"),
        }
    }

    #[test]
    fn fpt_on_c5() {
        let inst = ring_instance(5);
        let cg = build_conflict_graph(&inst);
        assert!(bounded_search_fpt(&cg, 2).unwrap().is_some());
        assert!(bounded_search_fpt(&cg, 3).unwrap().is_none());
    }

    #[test]
    fn fpt_k_zero_is_trivial() {
        let inst = disjoint_c4s(2);
        let cg = build_conflict_graph(&inst);
        let r = bounded_search_fpt(&cg, 0).unwrap().unwrap();
        assert!(r.chosen.is_empty());
    }

    #[test]
    fn alignment_from_empty_set() {
        let inst = disjoint_c4s(2);
        let cg = build_conflict_graph(&inst);
        let a = alignment_from_is(&cg, &[]).unwrap();
        assert_eq!(a.conserved(), 0);
        assert!(a.is_empty());
    }

    #[test]
    fn alignment_from_chain_singleton() {
        let inst = chain_instance(2);
        let cg = build_conflict_graph(&inst);
        let a = alignment_from_is(&cg, &[0]).unwrap();
        assert_eq!(a.pairs().len(), 2);
        assert_eq!(a.conserved(), 1);
    }

    #[test]
    fn alignment_rejects_dependent_set() {
        let inst = chain_instance(2);
        let cg = build_conflict_graph(&inst);
        assert!(alignment_from_is(&cg, &[0, 1]).is_err());
    }

    #[test]
    fn shared_sim_edge_c4s_align_together() {
        // Two non-conflicting c4s sharing the similarity edge a-d: choosing
        // both realizes 3 pairs and 2 conserved edges.
        let inst = parse_instance(
            "g1 a b\ng1 a e\ng2 c d\ng2 d f\nsim a d\nsim b c\nsim e f\n",
        )
        .unwrap();
        let cg = build_conflict_graph(&inst);
        assert_eq!(cg.vertex_count(), 2);
        assert_eq!(cg.edge_count(), 0);
        let a = alignment_from_is(&cg, &[0, 1]).unwrap();
        assert_eq!(a.pairs().len(), 3);
        assert_eq!(a.conserved(), 2);
    }

    #[test]
    fn chain_approx_on_p3_chain() {
        let inst = chain_instance(3);
        let cg = build_conflict_graph(&inst);
        let r = chain_approx(&cg, true).unwrap();
        assert!(r.chosen.len() >= 1);
        assert_eq!(r.chosen.len(), 2); // both endpoints of the P3
        let exact = exact_mis(&cg, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.chosen.len(), exact.chosen.len());
    }

    #[test]
    fn chain_approx_single_c4() {
        let inst = disjoint_c4s(1);
        let cg = build_conflict_graph(&inst);
        let r = chain_approx(&cg, true).unwrap();
        assert_eq!(r.chosen, vec![0]);
        assert_eq!(r.alignment.conserved(), 1);
    }

    #[test]
    fn chain_approx_rejects_m1_3() {
        // a has three similarity partners
        let inst = parse_instance(
            "g1 a b\ng2 c d\ng2v e\ng2v f\nsim a d\nsim b c\nsim a e\nsim a f\n",
        )
        .unwrap();
        assert_eq!(inst.m1(), 3);
        let cg = build_conflict_graph(&inst);
        assert!(matches!(chain_approx(&cg, true), Err(Error::Contract(_))));
    }

    #[test]
    fn ramsey_split_on_edgeless() {
        let adj = vec![Vec::new(); 16];
        let active: Vec<usize> = (0..16).collect();
        let (is_set, clique) = ramsey_split(&adj, &active);
        assert_eq!(is_set.len(), 16);
        assert_eq!(clique.len(), 1);
    }

    #[test]
    fn ramsey_split_on_complete() {
        let edges: Vec<(usize, usize)> =
            (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).collect();
        let adj = graph::from_edges(8, &edges);
        let active: Vec<usize> = (0..8).collect();
        let (is_set, clique) = ramsey_split(&adj, &active);
        assert_eq!(is_set.len(), 1);
        assert_eq!(clique.len(), 8);
        // product 8 >= log2(8)^2 / 4 = 2.25
        assert!((is_set.len() * clique.len()) as f64 >= 0.25 * 9.0);
    }

    #[test]
    fn clique_removal_on_edgeless_instance() {
        let inst = disjoint_c4s(16);
        let cg = build_conflict_graph(&inst);
        let (r, clique) = ramsey_clique_removal(&cg).unwrap();
        assert_eq!(r.chosen.len(), 16);
        assert_eq!(clique.len(), 1);
    }

    #[test]
    fn clique_removal_on_ring() {
        let inst = ring_instance(6);
        let cg = build_conflict_graph(&inst);
        let (r, clique) = ramsey_clique_removal(&cg).unwrap();
        assert!(graph::is_independent_set(cg.adjacency(), &r.chosen));
        assert!(graph::is_clique(cg.adjacency(), &clique));
        assert!(!clique.is_empty());
    }

    #[test]
    fn ramsey_upper_bound_values() {
        assert_eq!(ramsey_upper_bound(3, 3), 6); // binom(4, 2)
        assert_eq!(ramsey_upper_bound(2, 5), 5); // binom(5, 1)
        assert_eq!(ramsey_upper_bound(5, 5), 70); // binom(8, 4)
        assert_eq!(ramsey_upper_bound(40, 40), u64::MAX); // saturates
    }

    #[test]
    fn kfree_on_edgeless() {
        let inst = disjoint_c4s(3);
        let cg = build_conflict_graph(&inst);
        // m1 = 1, so r = 2; the conflict graph is K_2-free (edgeless)
        let r = kfree_fpt(&cg, 3, 2).unwrap().unwrap();
        assert_eq!(r.chosen, vec![0, 1, 2]);
        assert!(kfree_fpt(&cg, 4, 2).unwrap().is_none());
    }

    #[test]
    fn kfree_on_c5() {
        let inst = ring_instance(5);
        let cg = build_conflict_graph(&inst);
        // n = 5 < R_est(3, 3) = 6: decided by bounded search
        assert!(kfree_fpt(&cg, 3, 3).unwrap().is_none());
        assert!(kfree_fpt(&cg, 2, 3).unwrap().is_some());
    }

    #[test]
    fn greedy_on_edgeless_takes_everything() {
        let inst = disjoint_c4s(5);
        let cg = build_conflict_graph(&inst);
        let r = greedy_clawfree(&cg).unwrap();
        assert_eq!(r.chosen.len(), 5);
    }

    #[test]
    fn greedy_kernel_on_star() {
        let edges: Vec<(usize, usize)> = (1..6).map(|i| (0, i)).collect();
        let adj = graph::from_edges(6, &edges);
        let picked = greedy_min_degree(&adj, (0..6).collect());
        assert_eq!(picked, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn every_solver_returns_an_independent_set() {
        let inst = ring_instance(7);
        let cg = build_conflict_graph(&inst);
        let adj = cg.adjacency();
        let results = vec![
            exact_mis(&cg, DEFAULT_NODE_BUDGET).unwrap(),
            bounded_search_fpt(&cg, 2).unwrap().unwrap(),
            chain_approx(&cg, true).unwrap(),
            ramsey_clique_removal(&cg).unwrap().0,
            kfree_fpt(&cg, 2, 5).unwrap().unwrap(),
            greedy_clawfree(&cg).unwrap(),
        ];
        for r in results {
            assert!(graph::is_independent_set(adj, &r.chosen), "{}", r.method);
            assert!(r.alignment.conserved() >= r.chosen.len(), "{}", r.method);
        }
    }
}
