//! Graph corpora: graph6 line files, exhaustive enumeration of small graphs
//! up to isomorphism, and seeded random graphs.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{GraphError, HarnessError};
use crate::graph::{parse_graph6, Graph};

/// Reads one graph per line. Blank lines and lines starting with `#` are
/// skipped; errors carry the 1-based line number.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| HarnessError::Corpus { line: k + 1, source })?;
        out.push(g);
    }
    Ok(out)
}

pub fn write_graph6_lines(graphs: &[Graph]) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&g.to_graph6());
        out.push('\n');
    }
    out
}

/// Canonical code of a graph on at most 11 vertices: the largest graph6 bit
/// string (upper triangle, column by column) over all vertex orders that list
/// vertices by nonincreasing degree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let mut search = CanonSearch {
        adj: g.adjacency(),
        deg: (0..n).map(|v| g.degree(v)).collect(),
        n,
        order: Vec::with_capacity(n),
        best: None,
    };
    let mut sorted = search.deg.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    search.extend(0, 0, &sorted);
    search.best.unwrap_or(0)
}

struct CanonSearch<'a> {
    adj: &'a [u64],
    deg: Vec<usize>,
    n: usize,
    order: Vec<usize>,
    best: Option<u64>,
}

impl CanonSearch<'_> {
    /// `code` holds the bits for the first `order.len()` positions, which is
    /// a prefix of the full code in graph6 bit order.
    fn extend(&mut self, used: u64, code: u64, degree_profile: &[usize]) {
        let k = self.order.len();
        if let Some(best) = self.best {
            let bits = k * k.saturating_sub(1) / 2;
            let total = self.n * self.n.saturating_sub(1) / 2;
            if code < best >> (total - bits) {
                return;
            }
        }
        if k == self.n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let want = degree_profile[k];
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.deg[v] != want {
                continue;
            }
            let mut c = code;
            for &u in &self.order {
                c = c << 1 | (self.adj[u] >> v & 1);
            }
            self.order.push(v);
            self.extend(used | 1 << v, c, degree_profile);
            self.order.pop();
        }
    }
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n).expect("small");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                g.add_edge(i, j).expect("valid");
            }
            k += 1;
        }
    }
    g
}

/// All graphs on exactly `n` vertices up to isomorphism, each in canonical
/// form, sorted by edge count and then by decreasing canonical code.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0).expect("empty")];
    for k in 1..=n {
        layer = next_layer(&layer, k);
    }
    layer
}

/// All graphs with `1..=max_n` vertices up to isomorphism.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut layer = vec![Graph::empty(0).expect("empty")];
    for k in 1..=max_n {
        layer = next_layer(&layer, k);
        out.extend(layer.iter().cloned());
    }
    out
}

// Every graph on `n` vertices arises from one on `n - 1` vertices by adding a
// vertex with some neighbourhood.
fn next_layer(prev: &[Graph], n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive enumeration is limited to 10 vertices");
    let mut seen = HashSet::new();
    let mut codes = Vec::new();
    for h in prev {
        for nbrs in 0u64..1 << (n - 1) {
            let mut g = Graph::empty(n).expect("small");
            for (u, v) in h.edges() {
                g.add_edge(u, v).expect("valid");
            }
            for u in crate::graph::Bits(nbrs) {
                g.add_edge(u, n - 1).expect("valid");
            }
            let code = canonical_code(&g);
            if seen.insert(code) {
                codes.push((g.edge_count(), code));
            }
        }
    }
    codes.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    codes.into_iter().map(|(_, c)| graph_from_code(n, c)).collect()
}

/// Erdős–Rényi graph `G(n, p)` labelled `x1..xn`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}
