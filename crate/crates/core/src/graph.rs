//! Undirected simple graphs on dense labels `0..n`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge stored canonically as `(min, max)`.
pub type Edge = (usize, usize);

fn canonical(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected simple graph with vertices `0..n`.
///
/// Edges are kept in a sorted set of canonical pairs, so iteration order is
/// the lexicographic order of `(min, max)`. Rigidity-matrix rows follow it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&canonical(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<Edge> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(canonical(u, v))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let e = self.check_pair(u, v)?;
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let e = self.check_pair(u, v)?;
        if !self.edges.remove(&e) {
            return Err(Error::MissingEdge(e.0, e.1));
        }
        Ok(())
    }

    /// Appends a fresh isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Merges `other` into a copy of `self`, sending vertex `i` of `other`
    /// to `label_map[i]`.
    ///
    /// The map must be injective. Labels beyond `self.n()` grow the vertex
    /// set. Edges present in both graphs after relabeling are kept once, which
    /// is what gluing two graphs along shared vertices requires.
    pub fn union_with_relabeling(&self, other: &Graph, label_map: &[usize]) -> Result<Graph> {
        if label_map.len() != other.n {
            return Err(Error::LabelMapLength {
                expected: other.n,
                got: label_map.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for &l in label_map {
            if !seen.insert(l) {
                return Err(Error::NonInjectiveMap(l));
            }
        }
        let n = label_map
            .iter()
            .map(|&l| l + 1)
            .max()
            .unwrap_or(0)
            .max(self.n);
        let mut out = Graph {
            n,
            edges: self.edges.clone(),
        };
        for (u, v) in other.edges() {
            out.edges.insert(canonical(label_map[u], label_map[v]));
        }
        Ok(out)
    }

    /// Applies a permutation: vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LabelMapLength {
                expected: self.n,
                got: perm.len(),
            });
        }
        if let Some(&bad) = perm.iter().find(|&&p| p >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        Graph::empty(self.n).union_with_relabeling(self, perm)
    }

    /// Number of edges with both endpoints in `subset`.
    pub fn induced_edge_count(&self, subset: &VertexSubset) -> Result<usize> {
        let mut member = vec![false; self.n];
        for &v in subset.members() {
            self.check_vertex(v)?;
            member[v] = true;
        }
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| member[u] && member[v])
            .count())
    }

    /// Adjacency rows as bitmasks, available for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Some(adj)
    }

    /// All vertex pairs that are not edges, in canonical order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.edges.contains(&(u, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Complete graph `K_k` on `0..k`.
pub fn complete_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::TooSmall {
            what: "complete graph order",
            min: 1,
            got: 0,
        });
    }
    let mut g = Graph::empty(k);
    for u in 0..k {
        for v in (u + 1)..k {
            g.edges.insert((u, v));
        }
    }
    Ok(g)
}

/// Complete bipartite graph `K_{a,b}`; parts are `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    for (what, got) in [("bipartite part a", a), ("bipartite part b", b)] {
        if got == 0 {
            return Err(Error::TooSmall { what, min: 1, got });
        }
    }
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.edges.insert((u, v));
        }
    }
    Ok(g)
}

/// A set of vertex labels, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let set: BTreeSet<usize> = members.into_iter().collect();
        VertexSubset(set.into_iter().collect())
    }

    pub fn full(n: usize) -> Self {
        VertexSubset((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSubset((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    /// Bitmask form; `None` if some member is 64 or larger.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &v| (v < 64).then(|| acc | 1 << v))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset::new(self.0.iter().chain(other.0.iter()).copied())
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSubset::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_graph_counts() {
        let k1 = complete_graph(1).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(complete_graph(3).unwrap().m(), 3);
        assert_eq!(complete_graph(5).unwrap().m(), 10);
        assert!(matches!(complete_graph(0), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn complete_bipartite_counts() {
        let g = complete_bipartite(1, 1).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(complete_bipartite(2, 3).unwrap().m(), 6);
        let g = complete_bipartite(3, 3).unwrap();
        assert_eq!(g.m(), 9);
        assert!(g.edges().all(|(u, v)| u < 3 && v >= 3));
        assert!(complete_bipartite(0, 2).is_err());
        assert!(complete_bipartite(2, 0).is_err());
    }

    #[test]
    fn induced_counts_on_triangle() {
        let t = complete_graph(3).unwrap();
        assert_eq!(t.induced_edge_count(&VertexSubset::full(3)).unwrap(), 3);
        assert_eq!(t.induced_edge_count(&VertexSubset::new([0, 2])).unwrap(), 1);
        assert_eq!(
            t.induced_edge_count(&VertexSubset::new([0, 7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        );
    }

    #[test]
    fn add_and_remove() {
        let mut g = Graph::empty(2);
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(matches!(
            g.add_edge(0, 2),
            Err(Error::VertexOutOfRange { .. })
        ));
        g.remove_edge(1, 0).unwrap();
        assert_eq!(g.remove_edge(0, 1), Err(Error::MissingEdge(0, 1)));
    }

    #[test]
    fn glue_triangles_on_vertex() {
        let t = complete_graph(3).unwrap();
        let g = t.union_with_relabeling(&t, &[2, 3, 4]).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(
            t.union_with_relabeling(&t, &[2, 2, 4]),
            Err(Error::NonInjectiveMap(2))
        );
        assert!(matches!(
            t.union_with_relabeling(&t, &[0, 1]),
            Err(Error::LabelMapLength { .. })
        ));
    }

    #[test]
    fn subset_masks() {
        let s = VertexSubset::new([5, 1, 1, 3]);
        assert_eq!(s.members(), &[1, 3, 5]);
        assert_eq!(s.to_mask(), Some(0b101010));
        assert_eq!(VertexSubset::from_mask(0b101010), s);
        assert_eq!(VertexSubset::new([64]).to_mask(), None);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn full_subset_counts_every_edge(g in arb_graph()) {
            prop_assert_eq!(g.induced_edge_count(&VertexSubset::full(g.n())).unwrap(), g.m());
        }

        #[test]
        fn induced_count_is_monotone(g in arb_graph(), a in any::<u16>(), b in any::<u16>()) {
            let all = (1u64 << g.n()) - 1;
            let small = u64::from(a & b) & all;
            let big = (u64::from(a) | small) & all;
            let cs = g.induced_edge_count(&VertexSubset::from_mask(small)).unwrap();
            let cb = g.induced_edge_count(&VertexSubset::from_mask(big)).unwrap();
            prop_assert!(cs <= cb);
        }

        #[test]
        fn relabeling_preserves_counts(
            g in arb_graph(),
            seed in any::<u64>(),
            mask in any::<u16>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(h.n(), g.n());
            prop_assert_eq!(h.m(), g.m());
            let s = VertexSubset::from_mask(u64::from(mask) & ((1u64 << g.n()) - 1));
            let moved: VertexSubset = s.members().iter().map(|&v| perm[v]).collect();
            prop_assert_eq!(
                g.induced_edge_count(&s).unwrap(),
                h.induced_edge_count(&moved).unwrap()
            );
        }
    }
}
