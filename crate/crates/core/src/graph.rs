use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A finite simple undirected graph with integer vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<usize, BTreeSet<usize>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from a vertex list and an edge list. Loops are rejected
    /// and repeated edges collapse; endpoints not in `vertices` are added.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = usize>,
        E: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (a, b) in edges {
            if a == b {
                return Err(Error::Internal(format!("loop at vertex {a}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: usize) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.adj.entry(a).or_default().insert(b);
        self.adj.entry(b).or_default().insert(a);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(&a).is_some_and(|n| n.contains(&b))
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&a, n)| n.range(a + 1..).map(move |&b| (a, b)))
    }

    /// `N_G(v)`: the vertices adjacent to `v`.
    pub fn neighborhood(&self, v: usize) -> Result<&BTreeSet<usize>> {
        self.adj.get(&v).ok_or(Error::NotAVertex(v))
    }

    pub(crate) fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[&v]
    }

    pub fn is_clique<'a, I: IntoIterator<Item = &'a usize>>(&self, vs: I) -> bool {
        let vs: Vec<usize> = vs.into_iter().copied().collect();
        vs.iter()
            .enumerate()
            .all(|(k, &a)| vs[k + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// The subgraph induced on `keep`.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.intersection(keep).copied().collect()))
            .collect();
        Graph { adj }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.values().all(|nb| nb.len() + 1 == n)
    }
}

/// One representative of every isomorphism class of simple graphs on the
/// vertices `1..=n` (`n ≤ 6`), by minimizing the edge mask over all relabelings.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 6 {
        return Err(Error::CapExceeded { what: "graph enumeration", m: n, cap: 6 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let slot = |a: usize, b: usize| pairs.iter().position(|&e| e == (a.min(b), a.max(b))).expect("pair");
    let perms = permutations(n);
    // perm_maps[k][e] = image of edge slot e under the k-th relabeling
    let perm_maps: Vec<Vec<usize>> =
        perms.iter().map(|pi| pairs.iter().map(|&(a, b)| slot(pi[a], pi[b])).collect()).collect();
    let mut classes = std::collections::BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let canon = perm_maps
            .iter()
            .map(|map| {
                map.iter().enumerate().filter(|&(e, _)| mask >> e & 1 == 1).fold(0u32, |acc, (_, &t)| acc | 1 << t)
            })
            .min()
            .unwrap_or(mask);
        classes.insert(canon);
    }
    Ok(classes
        .into_iter()
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|&(e, _)| mask >> e & 1 == 1).map(|(_, &(a, b))| (a + 1, b + 1));
            Graph::from_edges(1..=n, edges).expect("no loops")
        })
        .collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..n {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}
