//! Plain adjacency-list helpers shared by the solvers and the detectors.
//!
//! Everything in this module works on `&[Vec<usize>]` where entry `v` is the
//! sorted neighbor list of vertex `v`. Graphs are simple and undirected.

/// Sorted adjacency lists indexed by vertex.
pub type Adjacency = Vec<Vec<usize>>;

/// Builds adjacency lists from an edge list. Ignores nothing: duplicate or
/// reversed edges must not be passed.
pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Adjacency {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

pub fn edge_count(adj: &[Vec<usize>]) -> usize {
    adj.iter().map(|l| l.len()).sum::<usize>() / 2
}

pub fn max_degree(adj: &[Vec<usize>]) -> usize {
    adj.iter().map(|l| l.len()).max().unwrap_or(0)
}

pub fn has_edge(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    adj[u].binary_search(&v).is_ok()
}

/// Complement graph on the same vertex set.
pub fn complement(adj: &[Vec<usize>]) -> Adjacency {
    let n = adj.len();
    let mut out = vec![Vec::new(); n];
    for (v, list) in adj.iter().enumerate() {
        let mut it = list.iter().copied().peekable();
        for u in 0..n {
            if it.peek() == Some(&u) {
                it.next();
            } else if u != v {
                out[v].push(u);
            }
        }
    }
    out
}

/// Subgraph induced by `verts` (need not be sorted). Returns the local
/// adjacency plus the local-index -> original-index map.
pub fn induced(adj: &[Vec<usize>], verts: &[usize]) -> (Adjacency, Vec<usize>) {
    let mut order: Vec<usize> = verts.to_vec();
    order.sort_unstable();
    order.dedup();
    let mut local = vec![usize::MAX; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        local[v] = i;
    }
    let mut sub = vec![Vec::new(); order.len()];
    for (i, &v) in order.iter().enumerate() {
        for &u in &adj[v] {
            if local[u] != usize::MAX {
                sub[i].push(local[u]);
            }
        }
        sub[i].sort_unstable();
    }
    (sub, order)
}

/// True iff no two vertices of `set` are adjacent.
pub fn is_independent_set(adj: &[Vec<usize>], set: &[usize]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if has_edge(adj, u, v) {
                return false;
            }
        }
    }
    true
}

/// True iff all vertices of `set` are pairwise adjacent.
pub fn is_clique(adj: &[Vec<usize>], set: &[usize]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if !has_edge(adj, u, v) {
                return false;
            }
        }
    }
    true
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Adjacency {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        from_edges(n, &edges)
    }

    #[test]
    fn complement_of_path() {
        let p3 = path(3);
        let c = complement(&p3);
        assert_eq!(edge_count(&c), 1);
        assert!(has_edge(&c, 0, 2));
        assert!(!has_edge(&c, 0, 1));
    }

    #[test]
    fn induced_keeps_edges_within_selection() {
        let p4 = path(4);
        let (sub, back) = induced(&p4, &[3, 1, 2]);
        assert_eq!(back, vec![1, 2, 3]);
        assert_eq!(edge_count(&sub), 2);
        assert!(has_edge(&sub, 0, 1) && has_edge(&sub, 1, 2));
    }

    #[test]
    fn components_of_two_paths() {
        let mut adj = path(3);
        adj.extend(from_edges(2, &[(0, 1)]).into_iter().map(|l| {
            l.into_iter().map(|v| v + 3).collect::<Vec<_>>()
        }));
        let comps = components(&adj);
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn independence_and_cliques() {
        let p3 = path(3);
        assert!(is_independent_set(&p3, &[0, 2]));
        assert!(!is_independent_set(&p3, &[0, 1]));
        assert!(is_clique(&p3, &[1, 2]));
        assert!(!is_clique(&p3, &[0, 2]));
    }
}
