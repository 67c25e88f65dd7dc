//! Instance and alignment data model, the line-oriented text formats, and
//! basic graph statistics.
//!
//! An alignment instance is a pair of undirected simple graphs `G1`, `G2`
//! plus a bipartite similarity graph `S` between their vertex sets. Vertex
//! namespaces of the two sides are disjoint: the same textual name on both
//! sides denotes two different vertices. All neighbor lists are kept sorted
//! so iteration order is deterministic across runs and platforms.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::oracle;

/// One side graph (`G1` or `G2`): simple, undirected, loop-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl SideGraph {
    pub fn new(vertex_count: usize) -> Self {
        SideGraph {
            adj: vec![Vec::new(); vertex_count],
            edges: Vec::new(),
        }
    }

    /// Grows the vertex set so that `v` is a valid index.
    pub fn ensure_vertex(&mut self, v: usize) {
        if v >= self.adj.len() {
            self.adj.resize(v + 1, Vec::new());
        }
    }

    /// Inserts the undirected edge `{u, v}`. Self-loops and duplicates are
    /// rejected; both endpoints must already exist.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Contract(format!("self-loop at vertex {u}")));
        }
        if u >= self.adj.len() || v >= self.adj.len() {
            return Err(Error::Contract(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.adj.len()
            )));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        match self.edges.binary_search(&(a, b)) {
            Ok(_) => return Err(Error::Contract(format!("duplicate edge ({a},{b})"))),
            Err(pos) => self.edges.insert(pos, (a, b)),
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// True iff the graph contains no cycle (union-find over the edge list).
    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.adj.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }
}

/// A full problem input: two side graphs, the similarity edge set, and the
/// vertex names retained from parsing (used for output).
///
/// `m1` and `m2` are the maximum similarity degrees over `V1` and `V2`;
/// they are always recomputed from `sim`, never trusted from the input.
#[derive(Debug, Clone)]
pub struct AlignmentInstance {
    g1: SideGraph,
    g2: SideGraph,
    sim: Vec<(usize, usize)>,
    sim1: Vec<Vec<usize>>,
    sim2: Vec<Vec<usize>>,
    m1: usize,
    m2: usize,
    names1: Vec<String>,
    names2: Vec<String>,
}

impl AlignmentInstance {
    /// Builds and validates an instance. `names1`/`names2` must match the
    /// vertex counts; `sim` pairs are `(v1_index, v2_index)`.
    pub fn new(
        g1: SideGraph,
        g2: SideGraph,
        sim: Vec<(usize, usize)>,
        names1: Vec<String>,
        names2: Vec<String>,
    ) -> Result<Self> {
        if names1.len() != g1.vertex_count() || names2.len() != g2.vertex_count() {
            return Err(Error::Contract(
                "name table length does not match vertex count".into(),
            ));
        }
        let mut sim = sim;
        sim.sort_unstable();
        for w in sim.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Contract(format!(
                    "duplicate similarity edge ({},{})",
                    w[0].0, w[0].1
                )));
            }
        }
        let mut sim1 = vec![Vec::new(); g1.vertex_count()];
        let mut sim2 = vec![Vec::new(); g2.vertex_count()];
        for &(u, v) in &sim {
            if u >= g1.vertex_count() || v >= g2.vertex_count() {
                return Err(Error::Contract(format!(
                    "similarity edge ({u},{v}) out of range"
                )));
            }
            sim1[u].push(v);
            sim2[v].push(u);
        }
        let m1 = sim1.iter().map(|l| l.len()).max().unwrap_or(0);
        let m2 = sim2.iter().map(|l| l.len()).max().unwrap_or(0);
        Ok(AlignmentInstance {
            g1,
            g2,
            sim,
            sim1,
            sim2,
            m1,
            m2,
            names1,
            names2,
        })
    }

    /// Builds an instance with synthetic names `u<i>` / `v<j>`.
    pub fn with_default_names(
        g1: SideGraph,
        g2: SideGraph,
        sim: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let names1 = (0..g1.vertex_count()).map(|i| format!("u{i}")).collect();
        let names2 = (0..g2.vertex_count()).map(|j| format!("v{j}")).collect();
        Self::new(g1, g2, sim, names1, names2)
    }

    pub fn g1(&self) -> &SideGraph {
        &self.g1
    }

    pub fn g2(&self) -> &SideGraph {
        &self.g2
    }

    /// Similarity edges as sorted `(v1_index, v2_index)` pairs.
    pub fn sim(&self) -> &[(usize, usize)] {
        &self.sim
    }

    /// Sorted similarity partners of a `V1` vertex.
    pub fn sim_partners1(&self, v1: usize) -> &[usize] {
        &self.sim1[v1]
    }

    /// Sorted similarity partners of a `V2` vertex.
    pub fn sim_partners2(&self, v2: usize) -> &[usize] {
        &self.sim2[v2]
    }

    pub fn has_sim(&self, v1: usize, v2: usize) -> bool {
        self.sim.binary_search(&(v1, v2)).is_ok()
    }

    pub fn m1(&self) -> usize {
        self.m1
    }

    pub fn m2(&self) -> usize {
        self.m2
    }

    pub fn name1(&self, v: usize) -> &str {
        &self.names1[v]
    }

    pub fn name2(&self, v: usize) -> &str {
        &self.names2[v]
    }
}

/// Degree and shape statistics reported by [`instance_stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceStats {
    pub delta1: usize,
    pub delta2: usize,
    pub m1: usize,
    pub m2: usize,
    pub g1_acyclic: bool,
}

pub fn instance_stats(inst: &AlignmentInstance) -> InstanceStats {
    InstanceStats {
        delta1: inst.g1().max_degree(),
        delta2: inst.g2().max_degree(),
        m1: inst.m1(),
        m2: inst.m2(),
        g1_acyclic: inst.g1().is_acyclic(),
    }
}

/// A legal alignment: a matching of `S` together with its conserved-edge
/// count. Construction validates the matching property, membership in `S`,
/// and recomputes `conserved` through the oracle counter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pairs: Vec<(usize, usize)>,
    conserved: usize,
}

impl Alignment {
    pub fn new(inst: &AlignmentInstance, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        pairs.dedup();
        let conserved = oracle::count_conserved(inst, &pairs)?;
        Ok(Alignment { pairs, conserved })
    }

    pub fn empty() -> Self {
        Alignment {
            pairs: Vec::new(),
            conserved: 0,
        }
    }

    /// Sorted `(v1_index, v2_index)` pairs.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn conserved(&self) -> usize {
        self.conserved
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct Interner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            names: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// Parses the line-oriented instance format.
///
/// Directives (whitespace-separated tokens, `#` starts a comment):
///
/// ```text
/// g1 <u> <v>    edge of G1            g1v <u>    isolated vertex of G1
/// g2 <u> <v>    edge of G2            g2v <v>    isolated vertex of G2
/// sim <u> <v>   similarity edge, u from V1 and v from V2
/// ```
///
/// Vertex names map to dense indices in first-seen order. A `sim` line may
/// only reference names already declared on the respective side.
pub fn parse_instance(text: &str) -> Result<AlignmentInstance> {
    let mut names1 = Interner::new();
    let mut names2 = Interner::new();
    let mut g1 = SideGraph::new(0);
    let mut g2 = SideGraph::new(0);
    let mut sim: Vec<(usize, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match toks[0] {
            "g1" | "g2" => {
                if toks.len() != 3 {
                    return Err(parse_err(lineno, format!("`{}` expects 2 vertex names", toks[0])));
                }
                let (names, g) = if toks[0] == "g1" {
                    (&mut names1, &mut g1)
                } else {
                    (&mut names2, &mut g2)
                };
                let u = names.intern(toks[1]);
                let v = names.intern(toks[2]);
                g.ensure_vertex(u.max(v));
                g.add_edge(u, v).map_err(|e| match e {
                    Error::Contract(msg) => parse_err(lineno, msg),
                    other => other,
                })?;
            }
            "g1v" | "g2v" => {
                if toks.len() != 2 {
                    return Err(parse_err(lineno, format!("`{}` expects 1 vertex name", toks[0])));
                }
                let (names, g) = if toks[0] == "g1v" {
                    (&mut names1, &mut g1)
                } else {
                    (&mut names2, &mut g2)
                };
                let u = names.intern(toks[1]);
                g.ensure_vertex(u);
            }
            "sim" => {
                if toks.len() != 3 {
                    return Err(parse_err(lineno, "`sim` expects 2 vertex names"));
                }
                let u = names1
                    .get(toks[1])
                    .ok_or_else(|| parse_err(lineno, format!("unknown G1 vertex `{}`", toks[1])))?;
                let v = names2
                    .get(toks[2])
                    .ok_or_else(|| parse_err(lineno, format!("unknown G2 vertex `{}`", toks[2])))?;
                if sim.contains(&(u, v)) {
                    return Err(parse_err(
                        lineno,
                        format!("duplicate similarity edge {} {}", toks[1], toks[2]),
                    ));
                }
                sim.push((u, v));
            }
            other => {
                return Err(parse_err(lineno, format!("unknown directive `{other}`")));
            }
        }
    }

    AlignmentInstance::new(g1, g2, sim, names1.names, names2.names)
}

/// Serializes an instance back to the text format. Every vertex is declared
/// explicitly in index order, so `parse_instance(serialize_instance(i))`
/// reproduces `i` exactly, indices included.
pub fn serialize_instance(inst: &AlignmentInstance) -> String {
    let mut out = String::new();
    for v in 0..inst.g1().vertex_count() {
        writeln!(out, "g1v {}", inst.name1(v)).unwrap();
    }
    for v in 0..inst.g2().vertex_count() {
        writeln!(out, "g2v {}", inst.name2(v)).unwrap();
    }
    for &(u, v) in inst.g1().edges() {
        writeln!(out, "g1 {} {}", inst.name1(u), inst.name1(v)).unwrap();
    }
    for &(u, v) in inst.g2().edges() {
        writeln!(out, "g2 {} {}", inst.name2(u), inst.name2(v)).unwrap();
    }
    for &(u, v) in inst.sim() {
        writeln!(out, "sim {} {}", inst.name1(u), inst.name2(v)).unwrap();
    }
    out
}

/// Serializes an alignment: one `pair <v1name> <v2name>` line per pair,
/// sorted by `v1name`, then a trailing `conserved <k>` line.
pub fn serialize_alignment(a: &Alignment, inst: &AlignmentInstance) -> String {
    let mut rows: Vec<(&str, &str)> = a
        .pairs()
        .iter()
        .map(|&(u, v)| (inst.name1(u), inst.name2(v)))
        .collect();
    rows.sort();
    let mut out = String::new();
    for (u, v) in rows {
        writeln!(out, "pair {u} {v}").unwrap();
    }
    writeln!(out, "conserved {}", a.conserved()).unwrap();
    out
}

/// Parses the alignment format back against an instance; used for
/// round-trip validation. The `conserved` line must match the recount.
pub fn parse_alignment(text: &str, inst: &AlignmentInstance) -> Result<Alignment> {
    let mut pairs = Vec::new();
    let mut stated: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match toks[0] {
            "pair" if toks.len() == 3 => {
                let find1 = (0..inst.g1().vertex_count()).find(|&i| inst.name1(i) == toks[1]);
                let find2 = (0..inst.g2().vertex_count()).find(|&j| inst.name2(j) == toks[2]);
                match (find1, find2) {
                    (Some(u), Some(v)) => pairs.push((u, v)),
                    _ => return Err(parse_err(lineno, "pair references unknown vertex")),
                }
            }
            "conserved" if toks.len() == 2 => {
                stated = Some(
                    toks[1]
                        .parse()
                        .map_err(|_| parse_err(lineno, "bad conserved count"))?,
                );
            }
            _ => return Err(parse_err(lineno, "expected `pair <u> <v>` or `conserved <k>`")),
        }
    }
    let alignment = Alignment::new(inst, pairs)?;
    if let Some(k) = stated {
        if k != alignment.conserved() {
            return Err(Error::Contract(format!(
                "stated conserved count {k} disagrees with recount {}",
                alignment.conserved()
            )));
        }
    }
    Ok(alignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const SINGLE_C4: &str = "g1 a b\ng2 c d\nsim a d\nsim b c\n";

    #[test]
    fn parse_minimal_single_c4() {
        let inst = parse_instance(SINGLE_C4).unwrap();
        assert_eq!(inst.g1().edge_count(), 1);
        assert_eq!(inst.g2().edge_count(), 1);
        assert_eq!(inst.sim().len(), 2);
        assert_eq!((inst.m1(), inst.m2()), (1, 1));
        assert_eq!(inst.name1(0), "a");
        assert_eq!(inst.name2(1), "d");
    }

    #[test]
    fn parse_empty_text() {
        let inst = parse_instance("").unwrap();
        assert_eq!(inst.g1().vertex_count(), 0);
        assert_eq!(inst.g2().vertex_count(), 0);
        assert_eq!(inst.sim().len(), 0);
    }

    #[test]
    fn self_loop_is_rejected() {
        let err = parse_instance("g1 a a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let err = parse_instance("g1 a b\ng1 b a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn sim_to_unknown_vertex_is_rejected() {
        let err = parse_instance("g1 a b\nsim a z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn duplicate_sim_is_rejected() {
        let err = parse_instance("g1 a b\ng2 c d\nsim a d\nsim a d\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn comments_and_isolated_vertices() {
        let inst = parse_instance("# header\ng1v x # lonely\ng2v y\n").unwrap();
        assert_eq!(inst.g1().vertex_count(), 1);
        assert_eq!(inst.g2().vertex_count(), 1);
        assert_eq!(inst.g1().degree(0), 0);
    }

    #[test]
    fn stats_on_single_c4() {
        let inst = parse_instance(SINGLE_C4).unwrap();
        let s = instance_stats(&inst);
        assert_eq!((s.delta1, s.delta2, s.m1, s.m2, s.g1_acyclic), (1, 1, 1, 1, true));
    }

    #[test]
    fn stats_triangle_g1() {
        let inst = parse_instance("g1 a b\ng1 b c\ng1 c a\n").unwrap();
        let s = instance_stats(&inst);
        assert_eq!((s.delta1, s.delta2, s.m1, s.m2), (2, 0, 0, 0));
        assert!(!s.g1_acyclic);
    }

    #[test]
    fn stats_path_g1() {
        let inst = parse_instance("g1 a b\ng1 b c\ng1 c d\n").unwrap();
        let s = instance_stats(&inst);
        assert_eq!(s.delta1, 2);
        assert!(s.g1_acyclic);
    }

    #[test]
    fn alignment_serialization() {
        let inst = parse_instance(SINGLE_C4).unwrap();
        let a = Alignment::new(&inst, vec![(0, 1), (1, 0)]).unwrap(); // (a,d), (b,c)
        assert_eq!(a.conserved(), 1);
        assert_eq!(serialize_alignment(&a, &inst), "pair a d\npair b c\nconserved 1\n");
    }

    #[test]
    fn empty_alignment_serialization() {
        let inst = parse_instance(SINGLE_C4).unwrap();
        let a = Alignment::empty();
        assert_eq!(serialize_alignment(&a, &inst), "conserved 0\n");
    }

    #[test]
    fn non_matching_pairs_rejected() {
        let inst = parse_instance(SINGLE_C4).unwrap();
        // a mapped twice: needs a second partner for a to exist in S first
        let inst2 =
            parse_instance("g1 a b\ng2 c d\nsim a d\nsim a c\nsim b c\n").unwrap();
        assert!(Alignment::new(&inst2, vec![(0, 0), (0, 1)]).is_err());
        // pair not in S
        assert!(Alignment::new(&inst, vec![(0, 0)]).is_err());
    }

    #[test]
    fn alignment_round_trip() {
        let inst = parse_instance(SINGLE_C4).unwrap();
        let a = Alignment::new(&inst, vec![(0, 1), (1, 0)]).unwrap();
        let text = serialize_alignment(&a, &inst);
        let back = parse_alignment(&text, &inst).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn instance_round_trip_exact() {
        let text = "g1v lone\ng1 a b\ng1 b c\ng2 x y\ng2v z\nsim a x\nsim b y\n";
        let inst = parse_instance(text).unwrap();
        let re = parse_instance(&serialize_instance(&inst)).unwrap();
        assert_eq!(re.g1().edges(), inst.g1().edges());
        assert_eq!(re.g2().edges(), inst.g2().edges());
        assert_eq!(re.sim(), inst.sim());
        assert_eq!(
            (0..re.g1().vertex_count()).map(|i| re.name1(i).to_string()).collect::<Vec<_>>(),
            (0..inst.g1().vertex_count()).map(|i| inst.name1(i).to_string()).collect::<Vec<_>>(),
        );
    }
}
