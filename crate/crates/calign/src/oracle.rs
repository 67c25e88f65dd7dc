//! Ground-truth brute force over matchings of `S`, plus the conserved-edge
//! counter used by every other module.

use crate::error::{Error, Result};
use crate::model::{Alignment, AlignmentInstance};

/// Brute force refuses instances with more similarity edges than this.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimit {
    pub max_sim_edges: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit { max_sim_edges: 22 }
    }
}

/// Counts conserved edges of a matching: unordered pairs of alignment pairs
/// whose `V1` endpoints are adjacent in `G1` and `V2` endpoints adjacent in
/// `G2`. Rejects pair sets that are not matchings of `S`.
pub fn count_conserved(inst: &AlignmentInstance, pairs: &[(usize, usize)]) -> Result<usize> {
    for (i, &(u1, u2)) in pairs.iter().enumerate() {
        if !inst.has_sim(u1, u2) {
            return Err(Error::Contract(format!(
                "pair ({u1},{u2}) is not a similarity edge"
            )));
        }
        for &(v1, v2) in &pairs[i + 1..] {
            if u1 == v1 || u2 == v2 {
                return Err(Error::Contract(format!(
                    "pairs ({u1},{u2}) and ({v1},{v2}) are not a matching"
                )));
            }
        }
    }
    let mut count = 0;
    for (i, &(u1, u2)) in pairs.iter().enumerate() {
        for &(v1, v2) in &pairs[i + 1..] {
            if inst.g1().has_edge(u1, v1) && inst.g2().has_edge(u2, v2) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Hard cap from the bitmask representation of chosen sim-edge subsets.
const MASK_CAP: usize = 60;

/// Exact maximum over all matchings of `S` by subset enumeration with
/// matching-feasibility pruning. Deterministic: among optima, returns the one
/// whose sorted vector of chosen sim-edge indices is lexicographically least.
pub fn brute_force_best(inst: &AlignmentInstance, limit: OracleLimit) -> Result<Alignment> {
    let sim = inst.sim();
    if sim.len() > limit.max_sim_edges.min(MASK_CAP) {
        return Err(Error::Resource(format!(
            "brute force limited to {} similarity edges, instance has {}",
            limit.max_sim_edges.min(MASK_CAP),
            sim.len()
        )));
    }

    // partner[i] = bitmask of sim edges j that form a conserved edge with i
    // when both are chosen.
    let n = sim.len();
    let mut partner = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            let ((a, c), (b, d)) = (sim[i], sim[j]);
            if a != b && c != d && inst.g1().has_edge(a, b) && inst.g2().has_edge(c, d) {
                partner[i] |= 1 << j;
                partner[j] |= 1 << i;
            }
        }
    }
    // potential[i]: admissible overestimate of conserved pairs still gainable
    // once edges 0..i are decided (every such pair touches an edge >= i).
    let mut potential = vec![0usize; n + 1];
    for i in (0..n).rev() {
        potential[i] = potential[i + 1] + partner[i].count_ones() as usize;
    }

    struct Search<'a> {
        sim: &'a [(usize, usize)],
        partner: &'a [u64],
        potential: &'a [usize],
        best_mask: u64,
        best_conserved: usize,
        best_indices: Vec<usize>,
    }

    impl Search<'_> {
        fn record(&mut self, mask: u64, conserved: usize) {
            let indices = mask_indices(mask, self.sim.len());
            if conserved > self.best_conserved
                || (conserved == self.best_conserved && indices < self.best_indices)
            {
                self.best_conserved = conserved;
                self.best_mask = mask;
                self.best_indices = indices;
            }
        }

        fn recurse(
            &mut self,
            next: usize,
            mask: u64,
            conserved: usize,
            used1: &mut [bool],
            used2: &mut [bool],
        ) {
            if next == self.sim.len() {
                self.record(mask, conserved);
                return;
            }
            if conserved + self.potential[next] < self.best_conserved {
                return;
            }
            let (u, v) = self.sim[next];
            if !used1[u] && !used2[v] {
                used1[u] = true;
                used2[v] = true;
                let gained = (self.partner[next] & mask).count_ones() as usize;
                self.recurse(next + 1, mask | (1 << next), conserved + gained, used1, used2);
                used1[u] = false;
                used2[v] = false;
            }
            self.recurse(next + 1, mask, conserved, used1, used2);
        }
    }

    fn mask_indices(mask: u64, n: usize) -> Vec<usize> {
        (0..n).filter(|i| mask & (1 << i) != 0).collect()
    }

    let mut search = Search {
        sim,
        partner: &partner,
        potential: &potential,
        best_mask: 0,
        best_conserved: 0,
        best_indices: Vec::new(),
    };
    let mut used1 = vec![false; inst.g1().vertex_count()];
    let mut used2 = vec![false; inst.g2().vertex_count()];
    search.recurse(0, 0, 0, &mut used1, &mut used2);

    let pairs: Vec<(usize, usize)> = mask_indices(search.best_mask, n)
        .into_iter()
        .map(|i| sim[i])
        .collect();
    Alignment::new(inst, pairs)
}
