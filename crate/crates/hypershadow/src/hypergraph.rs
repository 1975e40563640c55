//! r-uniform hypergraphs on the labeled vertex set {1, ..., n}.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::set::{VertexSet, MAX_VERTICES};

/// An r-uniform hypergraph on vertices 1..=n.
///
/// Edges are bitmask sets, kept sorted (antilex order) without duplicates, so
/// subset tests and membership queries are O(1) and O(log m). Values are
/// immutable after construction; every operation builds a new graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    edges: Vec<VertexSet>,
}

impl UniformHypergraph {
    /// Builds a graph, validating arity, vertex range, and edge uniqueness.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, r: usize, edges: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::LabelOverflow);
        }
        if r == 0 {
            return Err(Error::Uniformity("uniformity must be at least 1".to_string()));
        }
        let full = VertexSet::full(n)?;
        let mut collected = BTreeSet::new();
        for e in edges {
            if e.len() != r {
                return Err(Error::EdgeArity {
                    edge: e,
                    got: e.len(),
                    expected: r,
                });
            }
            if !e.is_subset_of(full) {
                let v = e.iter().find(|&v| v > n).unwrap_or(0);
                return Err(Error::VertexRange { vertex: v, limit: n });
            }
            if !collected.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        Ok(UniformHypergraph {
            n,
            r,
            edges: collected.into_iter().collect(),
        })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, [])
    }

    /// The complete r-graph on n vertices.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        let full = VertexSet::full(n)?;
        Self::new(n, r, full.subsets_of_size(r))
    }

    pub fn from_family(n: usize, family: &SetFamily) -> Result<Self> {
        Self::new(n, family.k(), family.iter())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn edge_family(&self) -> SetFamily {
        SetFamily::from_sets(self.r, self.edges.iter().copied())
            .expect("edges are uniform by construction")
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n).expect("n was validated")
    }

    /// Number of edges containing S. Returns 0 when |S| > r.
    pub fn degree(&self, s: VertexSet) -> usize {
        if s.len() > self.r {
            return 0;
        }
        self.edges.iter().filter(|e| s.is_subset_of(**e)).count()
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for v in e.iter() {
                deg[v - 1] += 1;
            }
        }
        deg
    }

    /// The link of Y restricted to S: the (r - |Y|)-graph whose edges A
    /// satisfy A union Y in E, with A inside S. Labels are kept, so the
    /// result lives on the same vertex universe.
    pub fn link(&self, y: VertexSet, s: VertexSet) -> Result<UniformHypergraph> {
        if !y.is_disjoint(s) {
            return Err(Error::Overlap(y, s));
        }
        if y.len() >= self.r {
            return Err(Error::Uniformity(format!(
                "link set of size {} must be smaller than the uniformity {}",
                y.len(),
                self.r
            )));
        }
        let full = self.vertex_set();
        if !y.is_subset_of(full) || !s.is_subset_of(full) {
            return Err(Error::Precondition(
                "link sets must lie inside the vertex set".to_string(),
            ));
        }
        let sub = self.r - y.len();
        let edges = self
            .edges
            .iter()
            .filter(|e| y.is_subset_of(**e) && (**e - y).is_subset_of(s))
            .map(|e| *e - y);
        UniformHypergraph::new(self.n, sub, edges)
    }

    /// Vertices outside S that share an edge with S.
    pub fn neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::Precondition(
                "neighborhood set must lie inside the vertex set".to_string(),
            ));
        }
        let mut out = VertexSet::EMPTY;
        for e in &self.edges {
            if !(*e & s).is_empty() {
                out = out | (*e - s);
            }
        }
        Ok(out)
    }

    /// Neighbors of a single vertex.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for e in &self.edges {
            if e.contains(v) {
                out = out | *e;
            }
        }
        out.without(v)
    }

    /// Induced subgraph on S, relabeled to 1..=|S|. The returned map sends
    /// new labels to the original ones: `map[new - 1] = old`.
    pub fn induced(&self, s: VertexSet) -> Result<(UniformHypergraph, Vec<usize>)> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::Precondition(
                "induced set must lie inside the vertex set".to_string(),
            ));
        }
        let map: Vec<usize> = s.iter().collect();
        let mut back = vec![0usize; self.n + 1];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset_of(s))
            .map(|e| {
                VertexSet::from_labels(e.iter().map(|v| back[v]))
                    .expect("relabeled edge stays in range")
            })
            .collect::<Vec<_>>();
        let g = UniformHypergraph::new(map.len(), self.r, edges)?;
        Ok((g, map))
    }

    /// True when every r-subset of S is an edge; vacuously true for |S| < r.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        if s.len() < self.r {
            return true;
        }
        s.subsets_of_size(self.r).all(|sub| self.has_edge(sub))
    }

    /// All k-sets containing v that induce a complete r-graph.
    pub fn cliques_containing(&self, v: usize, k: usize) -> Result<SetFamily> {
        if k < self.r {
            return Err(Error::Uniformity(format!(
                "clique order {k} is below the uniformity {}",
                self.r
            )));
        }
        if v == 0 || v > self.n {
            return Err(Error::VertexRange { vertex: v, limit: self.n });
        }
        let rest = self.vertex_set().without(v);
        let mut fam = SetFamily::new(k);
        for tail in rest.subsets_of_size(k - 1) {
            let cand = tail.with(v);
            if self.is_clique(cand) {
                fam.insert(cand)?;
            }
        }
        Ok(fam)
    }

    /// All q-sets that induce a complete r-graph.
    pub fn cliques_of_size(&self, q: usize) -> SetFamily {
        let mut fam = SetFamily::new(q);
        for cand in self.vertex_set().subsets_of_size(q) {
            if self.is_clique(cand) {
                fam.insert(cand).expect("uniform by construction");
            }
        }
        fam
    }

    /// Connected components; vertices on no edge appear as singletons.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp_of = vec![0usize; self.n + 1];
        let mut comps: Vec<VertexSet> = Vec::new();
        for v in 1..=self.n {
            if comp_of[v] != 0 {
                continue;
            }
            let mut frontier = VertexSet::singleton(v).expect("v in range");
            let mut seen = frontier;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for e in &self.edges {
                    if !(*e & frontier).is_empty() {
                        next = next | (*e - seen);
                    }
                }
                seen = seen | next;
                frontier = next;
            }
            let id = comps.len() + 1;
            for u in seen.iter() {
                comp_of[u] = id;
            }
            comps.push(seen);
        }
        comps
    }

}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}, r={}, m={})", self.n, self.r, self.edges.len())
    }
}

impl fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}, r={}, edges=", self.n, self.r)?;
        f.debug_list().entries(self.edges.iter()).finish()?;
        write!(f, ")")
    }
}
