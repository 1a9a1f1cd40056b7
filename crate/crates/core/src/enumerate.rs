//! Brute-force canonical forms and exhaustive enumeration of small graphs.
//!
//! Canonical labels come from color refinement followed by trying every
//! arrangement of each color cell; twins (vertices with equal open or closed
//! neighborhoods) are never reordered against each other since swapping them
//! is an automorphism. This is plenty for the orders used here (n <= 10).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest order accepted by [`canonical_form`] and [`automorphism_orbits`].
pub const MAX_CANON_ORDER: usize = 12;

#[derive(Debug, Clone)]
pub struct Canonical {
    /// Upper-triangle adjacency bits of the canonically relabeled graph.
    pub code: u128,
    /// `order[p]` is the original vertex placed at canonical position `p`.
    pub order: Vec<usize>,
    /// Representative (smallest member) of each vertex's automorphism orbit.
    pub orbit: Vec<usize>,
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = v;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Stable color refinement; returns colors that are isomorphism-invariant
/// given isomorphism-invariant initial colors.
fn refine(g: &Graph, initial: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut colors = initial.to_vec();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let before = colors.iter().collect::<HashSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn code_of(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        let row = g.neighbors(order[j]);
        for &u in &order[..j] {
            code = code << 1 | row.contains(u) as u128;
        }
    }
    code
}

/// Canonical form of `g` relative to an optional invariant vertex coloring
/// (for instance, membership in a predominated set).
pub fn canonical_with_colors(g: &Graph, colors: Option<&[usize]>) -> Result<Canonical> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::SizeLimit(n));
    }
    let initial: Vec<usize> = (0..n)
        .map(|v| colors.map_or(0, |c| c[v]) * (n + 1) + g.degree(v))
        .collect();
    let colors = refine(g, &initial);

    let mut twin = (0..n).collect::<Vec<_>>();
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] == colors[v]
                && (g.neighbors(u) == g.neighbors(v)
                    || g.closed_neighborhood(u) == g.closed_neighborhood(v))
            {
                union(&mut twin, u, v);
            }
        }
    }
    let twin: Vec<usize> = (0..n).map(|v| find(&mut twin, v)).collect();

    // cells in color order; each cell arranged as a multiset permutation of twin classes
    let mut cell_ids: Vec<usize> = colors.clone();
    cell_ids.sort_unstable();
    cell_ids.dedup();
    let cells: Vec<Vec<usize>> = cell_ids
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut arrangements: Vec<Vec<usize>> = cells
        .iter()
        .map(|cell| {
            let mut classes: Vec<usize> = cell.iter().map(|&v| twin[v]).collect();
            classes.sort_unstable();
            classes
        })
        .collect();

    let realize = |arr: &[Vec<usize>]| -> Vec<usize> {
        let mut order = Vec::with_capacity(n);
        for (cell, classes) in cells.iter().zip(arr) {
            let mut used = VertexSet::EMPTY;
            for &class in classes {
                let v = cell
                    .iter()
                    .copied()
                    .find(|&v| twin[v] == class && !used.contains(v))
                    .unwrap();
                used.insert(v);
                order.push(v);
            }
        }
        order
    };

    let mut best_code = u128::MAX;
    let mut best_order = Vec::new();
    let mut orbit_uf: Vec<usize> = (0..n).collect();
    for (v, &t) in twin.iter().enumerate() {
        union(&mut orbit_uf, v, t);
    }
    loop {
        let order = realize(&arrangements);
        let code = code_of(g, &order);
        if code < best_code {
            best_code = code;
            best_order = order;
        } else if code == best_code {
            for p in 0..n {
                union(&mut orbit_uf, best_order[p], order[p]);
            }
        }
        // odometer over cells
        let mut advanced = false;
        for arr in arrangements.iter_mut().rev() {
            if next_permutation(arr) {
                advanced = true;
                break;
            }
            arr.sort_unstable();
        }
        if !advanced {
            break;
        }
    }
    let orbit = (0..n).map(|v| find(&mut orbit_uf, v)).collect();
    Ok(Canonical {
        code: best_code,
        order: best_order,
        orbit,
    })
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    canonical_with_colors(g, None)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let c = canonical_form(g)?;
    let mut perm = vec![0; g.order()];
    for (p, &v) in c.order.iter().enumerate() {
        perm[v] = p;
    }
    Ok(g.permuted(&perm))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)?.code == canonical_form(h)?.code)
}

/// Orbit representative of every vertex under automorphisms that preserve
/// the given vertex coloring.
pub fn automorphism_orbits(g: &Graph, colors: Option<&[usize]>) -> Result<Vec<usize>> {
    Ok(canonical_with_colors(g, colors)?.orbit)
}

/// One representative of every isomorphism class of graphs of order `n`,
/// in a deterministic order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 9 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration supports orders 1..=9, got {n}"
        )));
    }
    let mut layer = vec![Graph::from_edges(1, &[])?];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 0u64..1 << (m - 1) {
                let mut adj: Vec<VertexSet> = (0..m - 1)
                    .map(|v| {
                        let a = g.neighbors(v);
                        if mask >> v & 1 == 1 {
                            a.with(m - 1)
                        } else {
                            a
                        }
                    })
                    .collect();
                adj.push(VertexSet(mask));
                let cand = Graph::from_adjacency(adj);
                let canon = canonical_graph(&cand)?;
                if seen.insert(crate::graph::to_graph6(&canon)) {
                    next.push(canon);
                }
            }
        }
        next.sort_by_key(|g| (g.edge_count(), crate::graph::to_graph6(g)));
        layer = next;
    }
    Ok(layer)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// All trees of order `n` up to isomorphism (`n <= 12`).
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CANON_ORDER {
        return Err(Error::InvalidParameter(format!(
            "tree enumeration supports orders 1..={MAX_CANON_ORDER}, got {n}"
        )));
    }
    let mut layer = vec![Graph::from_edges(1, &[])?];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &layer {
            for v in 0..m - 1 {
                let mut edges = t.edges();
                edges.push((v, m - 1));
                let canon = canonical_graph(&Graph::from_edges(m, &edges)?)?;
                if seen.insert(crate::graph::to_graph6(&canon)) {
                    next.push(canon);
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}
