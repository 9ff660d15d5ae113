//! Chordal graph recognition through perfect elimination orderings.
//!
//! A candidate ordering comes from lexicographic breadth-first search
//! (partition refinement, lowest label first on ties); reversing the visit
//! order gives a perfect elimination ordering exactly when the graph is
//! chordal, and every candidate is checked before it is returned.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex ordering `a_1 < ... < a_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct EliminationOrdering(pub Vec<usize>);

impl EliminationOrdering {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

struct Class {
    members: BTreeSet<usize>,
    prev: Option<usize>,
    next: Option<usize>,
}

/// Lex-BFS visit order.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let mut classes = vec![Class { members: g.vertices().collect(), prev: None, next: None }];
    let mut head = if g.vertex_count() == 0 { None } else { Some(0) };
    let mut class_of: HashMap<usize, usize> = g.vertices().map(|v| (v, 0)).collect();
    let mut order = Vec::with_capacity(g.vertex_count());

    while let Some(h) = head {
        let v = classes[h].members.pop_first().expect("classes in the list are non-empty");
        class_of.remove(&v);
        order.push(v);

        // split[c] = the class created in front of c during this round
        let mut split: HashMap<usize, usize> = HashMap::new();
        for &w in g.neighbors(v) {
            let Some(&c) = class_of.get(&w) else {
                continue;
            };
            let target = *split.entry(c).or_insert_with(|| {
                let id = classes.len();
                let prev = classes[c].prev;
                classes.push(Class { members: BTreeSet::new(), prev, next: Some(c) });
                match prev {
                    Some(p) => classes[p].next = Some(id),
                    None => head = Some(id),
                }
                classes[c].prev = Some(id);
                id
            });
            classes[c].members.remove(&w);
            classes[target].members.insert(w);
            class_of.insert(w, target);
        }
        let touched: Vec<usize> = split.keys().copied().chain(std::iter::once(h)).collect();
        for c in touched {
            if classes[c].members.is_empty() {
                let (prev, next) = (classes[c].prev, classes[c].next);
                match prev {
                    Some(p) => classes[p].next = next,
                    None if head == Some(c) => head = next,
                    None => {}
                }
                if let Some(n) = next {
                    classes[n].prev = prev;
                }
                classes[c].prev = None;
                classes[c].next = None;
            }
        }
    }
    order
}

/// Checks that each vertex's later neighbours form a clique.
///
/// Uses the parent test: with `u` the earliest later neighbour of `v`, every
/// other later neighbour of `v` must be adjacent to `u`.
pub fn verify_peo(g: &Graph, order: &EliminationOrdering) -> Result<bool> {
    let pos = positions(g, order)?;
    for &v in order.as_slice() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|w| pos[w] > pos[&v]).collect();
        let Some(&u) = later.iter().min_by_key(|w| pos[*w]) else {
            continue;
        };
        if later.iter().any(|&x| x != u && !g.has_edge(u, x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn positions(g: &Graph, order: &EliminationOrdering) -> Result<HashMap<usize, usize>> {
    let pos: HashMap<usize, usize> = order.as_slice().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if pos.len() != order.0.len() || pos.len() != g.vertex_count() || !g.vertices().all(|v| pos.contains_key(&v)) {
        return Err(Error::NotAPermutation);
    }
    Ok(pos)
}

/// A verified perfect elimination ordering, if the graph is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<EliminationOrdering> {
    let mut order = lex_bfs(g);
    order.reverse();
    let order = EliminationOrdering(order);
    verify_peo(g, &order).expect("Lex-BFS visits every vertex once").then_some(order)
}

/// `(chordal, witness ordering)`.
pub fn is_chordal(g: &Graph) -> (bool, Option<EliminationOrdering>) {
    let peo = perfect_elimination_ordering(g);
    (peo.is_some(), peo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::moore::{moore_complex, MooreLabels};

    fn c4() -> Graph {
        Graph::from_edges(1..=4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
        if v.len() <= 1 {
            return vec![v.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn complete_graphs_accept_every_order() {
        let k3 = Graph::from_edges(1..=3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        for p in permutations(&[1, 2, 3]) {
            assert!(verify_peo(&k3, &EliminationOrdering(p)).unwrap());
        }
    }

    #[test]
    fn four_cycle_rejects_every_order() {
        let g = c4();
        let perms = permutations(&[1, 2, 3, 4]);
        assert_eq!(perms.len(), 24);
        for p in perms {
            assert!(!verify_peo(&g, &EliminationOrdering(p)).unwrap());
        }
        assert_eq!(is_chordal(&g), (false, None));
    }

    #[test]
    fn non_permutations_are_errors() {
        let g = c4();
        assert_eq!(verify_peo(&g, &EliminationOrdering(vec![1, 2, 3])), Err(Error::NotAPermutation));
        assert_eq!(verify_peo(&g, &EliminationOrdering(vec![1, 2, 3, 3])), Err(Error::NotAPermutation));
        assert_eq!(verify_peo(&g, &EliminationOrdering(vec![1, 2, 3, 5])), Err(Error::NotAPermutation));
    }

    #[test]
    fn trees_are_chordal() {
        let t = Graph::from_edges(1..=7, [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (6, 7)]).unwrap();
        let (ok, peo) = is_chordal(&t);
        assert!(ok);
        assert!(verify_peo(&t, &peo.unwrap()).unwrap());
        assert!(is_chordal(&Graph::new()).0);
    }

    #[test]
    fn moore_skeletons_are_chordal() {
        assert!(is_chordal(&catalog::moore_rp2().one_skeleton()).0);
        for p in 3..=5 {
            let g = moore_complex(p).unwrap().one_skeleton();
            assert!(is_chordal(&g).0, "M({p})");
        }
    }

    #[test]
    fn stated_ordering_for_m3() {
        let l = MooreLabels::new(3);
        let g = moore_complex(3).unwrap().one_skeleton();
        let order = l.stated_elimination_ordering();
        assert_eq!(order.0, vec![l.u(1), l.u(2), l.u(3), l.w(1), l.w(2), l.w(3), l.v(1), l.v(2), l.v(3)]);
        assert!(verify_peo(&g, &order).unwrap());
        let nb: Vec<usize> = g.neighborhood(l.u(1)).unwrap().iter().copied().collect();
        let mut want = vec![l.v(1), l.v(3), l.w(1), l.w(2)];
        want.sort();
        assert_eq!(nb, want);
        let nb: Vec<usize> = g.neighborhood(l.v(1)).unwrap().iter().copied().collect();
        let mut want = vec![l.v(2), l.v(3), l.w(1), l.w(2), l.w(3), l.u(1), l.u(2), l.u(3)];
        want.sort();
        assert_eq!(nb, want);
    }

    #[test]
    fn lex_bfs_breaks_ties_by_label() {
        let g = c4();
        assert_eq!(lex_bfs(&g), vec![1, 2, 4, 3]);
    }
}
