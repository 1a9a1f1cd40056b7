//! Small undirected graphs with closed neighborhoods stored as bit masks.
//!
//! Vertices are `0..n` with `n <= 62`. A [`Graph`] is immutable once built;
//! every constructor validates its input and applies the symmetric closure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_ORDER};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Provenance of the vertices of a corona product `G ⊙ H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaLabeling {
    /// Index of the i-th vertex of `G` inside the product.
    pub base_vertices: Vec<usize>,
    /// Indices of the i-th copy of `H`, in the vertex order of `H`.
    pub copy_vertices: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
    pub isolated: usize,
    pub leaves: usize,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::SizeLimit(n));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("graph order must be at least 1".into()));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Builds from a symmetric, loop-free adjacency list. Callers inside the
    /// crate guarantee the invariants.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, &a)| a.with(v))
            .collect();
        Graph {
            n: adj.len(),
            adj,
            closed,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    pub fn closed_neighborhoods(&self) -> &[VertexSet] {
        &self.closed
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks a vertex up by label or by decimal index.
    pub fn find_vertex(&self, name: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(v) = labels.iter().position(|l| l == name) {
                return Some(v);
            }
        }
        name.parse::<usize>().ok().filter(|&v| v < self.n)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn stats(&self) -> GraphStats {
        let mut degree_sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        GraphStats {
            n: self.n,
            edges: self.edge_count(),
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            isolated: degree_sequence.iter().filter(|&&d| d == 0).count(),
            leaves: degree_sequence.iter().filter(|&&d| d == 1).count(),
            degree_sequence,
        }
    }

    /// Whether `set` dominates every vertex.
    pub fn is_dominating(&self, set: VertexSet) -> bool {
        self.dominated_by(set) == self.vertices()
    }

    /// Union of the closed neighborhoods of `set`.
    pub fn dominated_by(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.closed[v]))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.dominated_by(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Subgraph induced by `keep`, reindexed in ascending order. Labels are carried over.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph> {
        let kept: Vec<usize> = keep.intersection(self.vertices()).iter().collect();
        if kept.is_empty() {
            return Err(Error::InvalidParameter("empty induced subgraph".into()));
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|w| index[w])
                    .collect()
            })
            .collect();
        let mut g = Graph::from_adjacency(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(kept.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union, `other` placed after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::SizeLimit(n));
        }
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges)
    }

    /// Adjacency in the "n m" / "u v" edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut tokens = text.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::ParseError(format!("not a vertex index: {t:?}")))
        });
        let mut next = |what: &str| {
            tokens
                .next()
                .unwrap_or_else(|| Err(Error::ParseError(format!("missing {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            edges.push((u, v));
        }
        if tokens.next().is_some() {
            return Err(Error::ParseError("trailing tokens after edge list".into()));
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// `G ⊙ H`: base vertices first (`0..n(G)`), then the copies of `H` in order.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, CoronaLabeling)> {
    let (gn, hn) = (g.order(), h.order());
    let n = gn * (hn + 1);
    if n > MAX_ORDER {
        return Err(Error::SizeLimit(n));
    }
    let mut edges = g.edges();
    let mut copy_vertices = Vec::with_capacity(gn);
    let mut labels: Vec<String> = (1..=gn).map(|i| format!("v{i}")).collect();
    for i in 0..gn {
        let offset = gn + i * hn;
        copy_vertices.push((offset..offset + hn).collect());
        edges.extend(h.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
        edges.extend((offset..offset + hn).map(|w| (i, w)));
        labels.extend((0..hn).map(|w| format!("H{}:{}", i + 1, h.label(w))));
    }
    let product = Graph::from_edges(n, &edges)?.with_labels(labels)?;
    Ok((
        product,
        CoronaLabeling {
            base_vertices: (0..gn).collect(),
            copy_vertices,
        },
    ))
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}`, center 0.
    Star(usize),
    Empty(usize),
    /// Two adjacent centers (0 and 1) with `a` and `b` pendant leaves.
    DoubleStar(usize, usize),
    /// `m` copies of `C_4` sharing one vertex (index 0).
    HmGadget(usize),
    /// The 8-vertex graph `h1..h8` whose vertex `h3` supports two leaves.
    Fig1H,
    /// `P_k ⊙ K_1`, a caterpillar with a perfect matching.
    Comb(usize),
    /// `K_4` minus one edge.
    Diamond,
}

impl GraphKind {
    pub fn build(self) -> Result<Graph> {
        let bad = |msg: &str| Err(Error::InvalidParameter(format!("{self:?}: {msg}")));
        match self {
            GraphKind::Path(k) => {
                if k == 0 {
                    return bad("order must be positive");
                }
                let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
                Graph::from_edges(k, &edges)
            }
            GraphKind::Cycle(k) => {
                if k < 3 {
                    return bad("cycle needs at least 3 vertices");
                }
                let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                Graph::from_edges(k, &edges)
            }
            GraphKind::Complete(k) => {
                if k == 0 {
                    return bad("order must be positive");
                }
                let mut edges = Vec::new();
                for u in 0..k {
                    for v in u + 1..k {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(k, &edges)
            }
            GraphKind::Star(k) => {
                if k == 0 {
                    return bad("star needs at least one leaf");
                }
                let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
                Graph::from_edges(k + 1, &edges)
            }
            GraphKind::Empty(k) => {
                if k == 0 {
                    return bad("order must be positive");
                }
                Graph::from_edges(k, &[])
            }
            GraphKind::DoubleStar(a, b) => {
                if a == 0 || b == 0 {
                    return bad("both centers need a leaf");
                }
                let mut edges = vec![(0, 1)];
                edges.extend((0..a).map(|i| (0, 2 + i)));
                edges.extend((0..b).map(|i| (1, 2 + a + i)));
                Graph::from_edges(2 + a + b, &edges)
            }
            GraphKind::HmGadget(m) => {
                if m < 2 {
                    return bad("m must be at least 2");
                }
                let mut edges = Vec::new();
                for i in 0..m {
                    let (a, b, c) = (1 + 3 * i, 2 + 3 * i, 3 + 3 * i);
                    edges.extend([(0, a), (a, b), (b, c), (c, 0)]);
                }
                Graph::from_edges(3 * m + 1, &edges)
            }
            GraphKind::Fig1H => {
                // h1..h8 are indices 0..7
                let edges = [
                    (1, 3),
                    (2, 3),
                    (3, 4),
                    (3, 5),
                    (3, 8),
                    (4, 6),
                    (6, 8),
                    (7, 8),
                    (5, 7),
                ]
                .map(|(u, v)| (u - 1, v - 1));
                Graph::from_edges(8, &edges)?.with_labels((1..=8).map(|i| format!("h{i}")).collect())
            }
            GraphKind::Comb(k) => {
                let (g, _) = corona(&GraphKind::Path(k).build()?, &GraphKind::Empty(1).build()?)?;
                Ok(Graph::from_adjacency(g.adj))
            }
            GraphKind::Diamond => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    /// Parses `kind[:p1[,p2]]`, e.g. `path:3`, `double_star:2,2`, `Hm:3`, `fig1_H`.
    fn from_str(s: &str) -> Result<GraphKind> {
        let s = s.strip_prefix("gen:").unwrap_or(s);
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k, p),
            None => (s, ""),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad generator parameter {p:?}")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "generator {kind:?} takes {k} parameter(s)"
                )))
            }
        };
        let kind_lc = kind.to_ascii_lowercase();
        let parsed = match kind_lc.as_str() {
            "path" => arity(1).map(|_| GraphKind::Path(nums[0])),
            "cycle" => arity(1).map(|_| GraphKind::Cycle(nums[0])),
            "complete" => arity(1).map(|_| GraphKind::Complete(nums[0])),
            "star" => arity(1).map(|_| GraphKind::Star(nums[0])),
            "empty" => arity(1).map(|_| GraphKind::Empty(nums[0])),
            "double_star" => arity(2).map(|_| GraphKind::DoubleStar(nums[0], nums[1])),
            "hm" | "hm_gadget" => arity(1).map(|_| GraphKind::HmGadget(nums[0])),
            "fig1_h" => arity(0).map(|_| GraphKind::Fig1H),
            "comb" => arity(1).map(|_| GraphKind::Comb(nums[0])),
            "diamond" => arity(0).map(|_| GraphKind::Diamond),
            _ => Err(Error::InvalidParameter(format!("unknown generator {kind:?}"))),
        }?;
        Ok(parsed)
    }
}

/// Convenience wrapper for `spec.parse::<GraphKind>()?.build()`.
pub fn generate(spec: &str) -> Result<Graph> {
    spec.parse::<GraphKind>()?.build()
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::ParseError("empty graph6 string".into()))?;
    if first == 126 {
        return Err(Error::SizeLimit(63));
    }
    if !(63..126).contains(&first) {
        return Err(Error::ParseError(format!("invalid order byte {first}")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::ParseError("graph6 order 0 is not supported".into()));
    }
    let bits = n * (n - 1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::ParseError(format!(
            "expected {} data bytes for order {n}, got {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::ParseError(format!("invalid data byte {b}")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::ParseError("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_examples() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.stats().degree_sequence, vec![2, 2, 1, 1]);
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(k1.closed_neighborhood(0), VertexSet::singleton(0));
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::InvalidEdge(1, 1)));
        assert_eq!(Graph::from_edges(63, &[]), Err(Error::SizeLimit(63)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn corona_of_k2_and_k1_is_a_path() {
        let (p, lab) = corona(&generate("path:2").unwrap(), &generate("empty:1").unwrap()).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.edge_count(), 3);
        assert_eq!(lab.base_vertices, vec![0, 1]);
        assert_eq!(lab.copy_vertices, vec![vec![2], vec![3]]);
        assert!(p.is_tree());
        assert_eq!(p.max_degree(), 2);
    }

    #[test]
    fn corona_orders_and_min_degree() {
        let (p, _) = corona(&generate("path:3").unwrap(), &generate("fig1_H").unwrap()).unwrap();
        assert_eq!(p.order(), 27);
        let (c, _) = corona(&generate("cycle:4").unwrap(), &generate("complete:2").unwrap()).unwrap();
        assert_eq!(c.min_degree(), 2);
        assert_eq!(p.label(3), "H1:h1");
    }

    #[test]
    fn corona_size_limit() {
        let k8 = generate("complete:8").unwrap();
        assert_eq!(corona(&k8, &k8).unwrap_err(), Error::SizeLimit(72));
    }

    #[test]
    fn generators() {
        let h3 = generate("Hm:3").unwrap();
        assert_eq!(h3.order(), 10);
        assert_eq!(h3.degree(0), 6);
        assert_eq!(generate("Hm:2").unwrap().order(), 7);
        assert!(generate("Hm:1").is_err());

        let f = generate("fig1_H").unwrap();
        let h3v = f.find_vertex("h3").unwrap();
        assert_eq!(f.degree(h3v), 5);
        for leaf in ["h1", "h2"] {
            let l = f.find_vertex(leaf).unwrap();
            assert_eq!(f.degree(l), 1);
            assert!(f.has_edge(l, h3v));
        }
        assert!(f.is_connected());

        let e2 = generate("empty:2").unwrap();
        assert_eq!((e2.order(), e2.edge_count()), (2, 0));
        assert!(!e2.is_connected());

        let ds = generate("double_star:2,3").unwrap();
        assert_eq!((ds.order(), ds.edge_count()), (7, 6));
        assert!(generate("cycle:2").is_err());
        assert!(generate("wheel:5").is_err());
        assert!(generate("path").is_err());
        assert_eq!(generate("comb:3").unwrap().order(), 6);
    }

    #[test]
    fn stats_examples() {
        let k1 = generate("empty:1").unwrap().stats();
        assert_eq!((k1.n, k1.edges, k1.min_degree, k1.max_degree), (1, 0, 0, 0));
        assert_eq!((k1.isolated, k1.leaves), (1, 0));
        let f = generate("fig1_H").unwrap().stats();
        assert_eq!((f.n, f.edges, f.leaves), (8, 9, 2));
        let s = generate("star:5").unwrap().stats();
        assert_eq!((s.n, s.max_degree, s.leaves), (6, 5, 5));
    }

    #[test]
    fn graph6_known_encodings() {
        assert_eq!(to_graph6(&generate("path:2").unwrap()), "A_");
        assert_eq!(to_graph6(&generate("empty:1").unwrap()), "@");
        // P4: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1 -> 101001 = 41
        assert_eq!(to_graph6(&generate("path:4").unwrap()), "Ch");
        assert_eq!(to_graph6(&generate("complete:4").unwrap()), "C~");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(from_graph6(""), Err(Error::ParseError(_))));
        assert!(matches!(from_graph6("A"), Err(Error::ParseError(_))));
        assert!(matches!(from_graph6("A_x"), Err(Error::ParseError(_))));
        assert!(matches!(from_graph6("A "), Err(Error::ParseError(_))));
        assert!(matches!(from_graph6("A`"), Err(Error::ParseError(_))));
        assert!(matches!(from_graph6("~?@?"), Err(Error::SizeLimit(_))));
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::from_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, generate("path:4").unwrap());
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(Graph::from_edge_list("3 2\n0 1").is_err());
        assert!(Graph::from_edge_list("2 1\n0 x").is_err());
    }

    #[test]
    fn remove_vertex_keeps_labels() {
        let f = generate("fig1_H").unwrap();
        let g = f.remove_vertex(2).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.stats().isolated, 2);
        assert_eq!(g.label(2), "h4");
    }
}
