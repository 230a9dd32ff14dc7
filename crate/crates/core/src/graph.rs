//! Simple graphs on at most 64 labelled vertices, stored as neighbour bit masks.
//!
//! Vertex labels double as the variable names of the polynomial ring an edge
//! ideal lives in: vertex `i` is the `i`-th ring variable, and no other module
//! ever re-maps them.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::GraphError;

/// Largest vertex count representable by a [`Graph`].
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of one particular graph, as a bit mask over vertex indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The first `n` vertices.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    /// Vertex indices in increasing order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// Labelled simple graph.
///
/// Invariants: no loops, symmetric adjacency, pairwise distinct labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("labels", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooLarge(labels.len()));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![0; n],
        })
    }

    /// Edgeless graph with labels `x1..xn`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new((1..=n).map(|i| format!("x{i}")))
    }

    /// Graph with labels `x1..xn` and the given index pairs as edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::UnknownVertex(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(GraphError::Loop(self.labels[u].clone()));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a list of labels to a vertex set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet, GraphError> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| GraphError::UnknownVertex(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn set_labels(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    /// Union of open neighbourhoods of a set.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        VertexSet(set.iter().fold(0, |m, v| m | self.adj[v]))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u] >> v & 1 == 1
    }

    /// Edges as index pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&m| m == 0)
    }

    /// Adjacency masks, one per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// `G \ U`: removes the vertices in `U` and every edge meeting them.
    /// Surviving vertices keep their labels and relative order.
    pub fn delete_vertices(&self, removed: VertexSet) -> Result<Graph, GraphError> {
        if !removed.is_subset(self.vertices()) {
            return Err(GraphError::NotSubset);
        }
        Ok(self.induced(self.vertices().difference(removed)))
    }

    /// Subgraph induced on `keep`, renumbered in increasing index order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let kept: Vec<usize> = keep.intersection(self.vertices()).iter().collect();
        let mut pos = [usize::MAX; 64];
        for (new, &old) in kept.iter().enumerate() {
            pos[old] = new;
        }
        let adj = kept
            .iter()
            .map(|&old| Bits(self.adj[old] & keep.0).fold(0u64, |m, w| m | 1u64 << pos[w]))
            .collect();
        Graph {
            labels: kept.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
        }
    }

    /// Disjoint union; labels of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::new(self.labels.iter().chain(other.labels.iter()).cloned())?;
        let off = self.n();
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off)?;
        }
        Ok(g)
    }

    /// Same graph with new labels (index-aligned).
    pub fn relabel<S: Into<String>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Graph, GraphError> {
        let mut g = Graph::new(labels)?;
        if g.n() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: g.n(),
            });
        }
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// Shortest-path length in edges; `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::UnknownVertex(format!("#{}", u.max(v))));
        }
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            if frontier >> v & 1 == 1 {
                return Ok(Some(d));
            }
            let next = Bits(frontier).fold(0u64, |m, w| m | self.adj[w]) & !seen;
            seen |= next;
            frontier = next;
            d += 1;
        }
        Ok(None)
    }

    /// All vertices at distance at most two from `v` (including `v`).
    pub fn ball2(&self, v: usize) -> VertexSet {
        let closed = self.closed_neighbors(v);
        VertexSet(closed.iter().fold(closed.0, |m, w| m | self.adj[w]))
    }

    /// True iff the closed neighbourhoods of the given vertices are pairwise disjoint.
    pub fn is_star_packing(&self, centers: VertexSet) -> bool {
        let mut covered = 0u64;
        for c in centers.iter() {
            let closed = self.closed_neighbors(c).0;
            if covered & closed != 0 {
                return false;
            }
            covered |= closed;
        }
        true
    }

    /// All triangles as sorted index triples, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for c in Bits(self.adj[a] & self.adj[b] & u64::MAX.checked_shl(b as u32 + 1).unwrap_or(0)) {
                out.push([a, b, c]);
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(a, b)| self.adj[a] & self.adj[b] == 0)
    }

    /// True iff no six vertices induce a whiskered triangle (a triangle with a
    /// pendant edge at each corner).
    pub fn is_wk3_free(&self) -> bool {
        self.find_wk3().is_none()
    }

    /// An induced whiskered triangle as `([x1, x2, x3], [z1, z2, z3])`, where
    /// `zi` is the whisker at `xi`.
    pub fn find_wk3(&self) -> Option<([usize; 3], [usize; 3])> {
        for t in self.triangles() {
            let tri = VertexSet::from_indices(t);
            // whisker candidates at each corner: adjacent to that corner only
            let cand: Vec<Vec<usize>> = (0..3)
                .map(|k| {
                    let others = tri.difference(VertexSet::singleton(t[k]));
                    self.neighbors(t[k])
                        .difference(tri)
                        .iter()
                        .filter(|&z| self.adj[z] & others.0 == 0)
                        .collect()
                })
                .collect();
            for &z0 in &cand[0] {
                for &z1 in &cand[1] {
                    if self.has_edge(z0, z1) {
                        continue;
                    }
                    for &z2 in &cand[2] {
                        if !self.has_edge(z0, z2) && !self.has_edge(z1, z2) {
                            return Some((t, [z0, z1, z2]));
                        }
                    }
                }
            }
        }
        None
    }

    /// Maximum star packing, found as a maximum set of vertices with pairwise
    /// disjoint closed neighbourhoods (exact branch and bound).
    pub fn star_packing_number(&self) -> StarPackingWitness {
        let n = self.n();
        let balls: Vec<u64> = (0..n).map(|v| self.ball2(v).0).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let mut search = PackingSearch {
            balls: &balls,
            order: &order,
            best: 0,
        };
        search.run(self.vertices().0, 0);
        StarPackingWitness {
            centers: VertexSet(search.best),
            size: search.best.count_ones() as usize,
        }
    }

    /// `alpha_2(G)` without the witness.
    pub fn alpha2(&self) -> usize {
        self.star_packing_number().size
    }

    /// Builds the graph `G'` of the even-connection construction together with
    /// `L = N_{G\A}(x_i) ∩ N_{G\A}(x_j)`.
    ///
    /// `G'` lives on `V(G) \ (A ∪ L)`; its edges are those of `G \ (A ∪ L)`
    /// plus every pair `x_p x_q` with `x_p` adjacent to `x_i` and `x_q`
    /// adjacent to `x_j` in `G \ (A ∪ L)`.
    pub fn even_connection_graph(
        &self,
        i: usize,
        j: usize,
        removed: VertexSet,
    ) -> Result<(Graph, VertexSet), GraphError> {
        self.check_admissible(i, j, removed)?;
        let common = self.neighbors(i).intersection(self.neighbors(j)).difference(removed);
        let gone = removed.union(common);
        let keep = self.vertices().difference(gone);
        let ni = self.neighbors(i).intersection(keep);
        let nj = self.neighbors(j).intersection(keep);
        let mut g = self.clone();
        for p in ni.iter() {
            for q in nj.iter() {
                if p != q {
                    g.add_edge(p, q)?;
                }
            }
        }
        Ok((g.induced(keep), common))
    }

    /// `(N(x_i) ∪ N(x_j)) \ {x_i, x_j}`: the pool admissible deletion sets are drawn from.
    pub fn admissible_pool(&self, i: usize, j: usize) -> VertexSet {
        self.neighbors(i)
            .union(self.neighbors(j))
            .difference(VertexSet::from_indices([i, j]))
    }

    /// Checks that `x_i x_j` is an edge and `A` lies inside its admissible pool.
    pub fn check_admissible(&self, i: usize, j: usize, removed: VertexSet) -> Result<(), GraphError> {
        if !self.has_edge(i, j) {
            return Err(GraphError::NotAnEdge(self.label_or_index(i), self.label_or_index(j)));
        }
        if !removed.is_subset(self.admissible_pool(i, j)) {
            return Err(GraphError::Inadmissible);
        }
        Ok(())
    }

    fn label_or_index(&self, v: usize) -> String {
        self.labels.get(v).cloned().unwrap_or_else(|| format!("#{v}"))
    }

    /// The graph6 encoding of this graph (labels are dropped).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        if n <= 62 {
            out.push((n as u8 + 63) as char);
        } else {
            out.push('~');
            for shift in [12, 6, 0] {
                out.push((((n >> shift) & 63) as u8 + 63) as char);
            }
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                nbits += 1;
                if nbits == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(((acc << (6 - nbits)) + 63) as char);
        }
        out
    }

    /// Decodes one graph6 line (a trailing newline is tolerated).
    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        parse_graph6(text)
    }

    /// Parses an edge list; see [`parse_edge_list`].
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        parse_edge_list(text)
    }
}

struct PackingSearch<'a> {
    balls: &'a [u64],
    order: &'a [usize],
    // best centre set found so far
    best: u64,
}

impl PackingSearch<'_> {
    fn run(&mut self, cands: u64, chosen: u64) {
        if chosen.count_ones() + cands.count_ones() <= self.best.count_ones() {
            return;
        }
        let Some(&v) = self.order.iter().find(|&&v| cands >> v & 1 == 1) else {
            self.best = chosen;
            return;
        };
        self.run(cands & !self.balls[v], chosen | 1u64 << v);
        self.run(cands & !(1u64 << v), chosen);
    }
}

/// Centres of a maximum star packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarPackingWitness {
    pub centers: VertexSet,
    pub size: usize,
}

/// Decodes a single graph6 string into a graph labelled `x1..xn`.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    let err = |offset: usize, msg: &str| GraphError::Parse {
        offset,
        msg: msg.to_string(),
    };
    if let Some(off) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(off, "byte outside the printable graph6 range 63..=126"));
    }
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated 18-bit size header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated 36-bit size header"));
        }
        let n = bytes[2..8].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < need {
        return Err(err(bytes.len(), "edge section shorter than the size header requires"));
    }
    if body.len() > need {
        return Err(err(body_start + need, "trailing bytes after the edge section"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses whitespace-separated edge lines `u v` and isolated-vertex lines `u`.
/// Blank lines and `#` comments are skipped. Vertices are ordered by natural
/// label order (`x2` before `x10`).
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut names: BTreeSet<NaturalKey> = BTreeSet::new();
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [u] => {
                names.insert(NaturalKey(u.to_string()));
            }
            [u, v] => {
                if u == v {
                    return Err(GraphError::Loop(u.to_string()));
                }
                names.insert(NaturalKey(u.to_string()));
                names.insert(NaturalKey(v.to_string()));
                pairs.push((u.to_string(), v.to_string()));
            }
            _ => return Err(GraphError::TooManyTokens { line: lineno + 1 }),
        }
    }
    let labels: Vec<String> = names.into_iter().map(|k| k.0).collect();
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut g = Graph::new(labels.iter().cloned())?;
    for (u, v) in &pairs {
        g.add_edge(index[u.as_str()], index[v.as_str()])?;
    }
    Ok(g)
}

/// Orders labels by alternating text and number chunks, so `x2 < x10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalKey(pub String);

impl Ord for NaturalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        natural_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for NaturalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let b = s.as_bytes();
        while start < b.len() {
            let digit = b[start].is_ascii_digit();
            let mut end = start;
            while end < b.len() && b[end].is_ascii_digit() == digit {
                end += 1;
            }
            out.push((digit, &s[start..end]));
            start = end;
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(cb.iter()) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then_with(|| p.cmp(q))
            }
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

/// Small named graphs used throughout the tests and the example table.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("n <= 64");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid");
            }
        }
        g
    }

    /// Path on `n` vertices `x1 - x2 - ... - xn`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("valid")
    }

    /// Whiskered triangle: triangle `x1 x2 x3` with leaves `z1, z2, z3`.
    pub fn whiskered_triangle() -> Graph {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).expect("valid");
        g.relabel(["x1", "x2", "x3", "z1", "z2", "z3"]).expect("six labels")
    }

    /// Whiskered triangle with the leaf `z3` removed.
    pub fn whiskered_triangle_minus_leaf() -> Graph {
        let g = whiskered_triangle();
        g.delete_vertices(super::VertexSet::singleton(5)).expect("z3 exists")
    }
}
