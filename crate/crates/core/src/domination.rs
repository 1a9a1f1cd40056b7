//! Classical domination: exact domination number, minimum dominating sets,
//! and the structural predicates behind the small-value characterizations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Stored minimum dominating sets are capped at this many; counts stay exact.
pub const GAMMA_SET_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationProfile {
    pub gamma: usize,
    pub gamma_set_count: u64,
    /// All minimum dominating sets, or `None` when there are more than the cap.
    pub gamma_sets: Option<Vec<Vec<usize>>>,
    pub per_vertex_gamma_set_count: Vec<u64>,
    pub dominating_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralPredicates {
    pub isolated_vertices: Vec<usize>,
    pub leaves: Vec<usize>,
    pub support_vertices: Vec<usize>,
    pub strong_support_vertices: Vec<usize>,
    pub dominating_vertices: Vec<usize>,
}

/// Structural predictions of small game values. `None` marks a claim whose
/// hypothesis does not hold for the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallValuePredictions {
    /// `γ_MB = 2`; applies when `γ = 2`.
    pub mb_is_2: Option<bool>,
    /// `γ_MB' = 2`; applies when `γ <= 2`.
    pub mb_prime_is_2: Option<bool>,
    /// `γ_MB' = 2` from Dominator's reply to each first move of Staller.
    pub mb_prime_is_2_by_reply: Option<bool>,
    /// `γ_SMB = 2`; applies when `δ >= 1`.
    pub smb_is_2: Option<bool>,
    /// `γ_SMB' = 2`; applies when `δ >= 1`.
    pub smb_prime_is_2: Option<bool>,
    /// `γ_SMB' = 3`; applies when `δ >= 1`.
    pub smb_prime_is_3: Option<bool>,
}

fn has_dominating_set_of_size(g: &Graph, dominated: VertexSet, budget: usize) -> bool {
    let all = g.vertices();
    let Some(x) = all.difference(dominated).first() else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // some member of N[x] must be chosen
    g.closed_neighborhood(x)
        .iter()
        .any(|v| has_dominating_set_of_size(g, dominated.union(g.closed_neighborhood(v)), budget - 1))
}

pub fn domination_number(g: &Graph) -> usize {
    (1..=g.order())
        .find(|&k| has_dominating_set_of_size(g, VertexSet::EMPTY, k))
        .expect("the whole vertex set dominates")
}

/// Calls `visit` on every dominating set of exactly `k` vertices, in
/// lexicographic order of sorted members.
pub fn for_each_dominating_set(g: &Graph, k: usize, mut visit: impl FnMut(VertexSet)) {
    fn rec(
        g: &Graph,
        start: usize,
        left: usize,
        chosen: VertexSet,
        dominated: VertexSet,
        visit: &mut impl FnMut(VertexSet),
    ) {
        let n = g.order();
        let missing = g.vertices().difference(dominated);
        if left == 0 {
            if missing.is_empty() {
                visit(chosen);
            }
            return;
        }
        // every undominated vertex still needs a neighbor at index >= start
        let reachable = VertexSet::full(n).difference(VertexSet::full(start));
        if missing
            .iter()
            .any(|x| g.closed_neighborhood(x).is_disjoint(reachable))
        {
            return;
        }
        for v in start..=n - left {
            rec(
                g,
                v + 1,
                left - 1,
                chosen.with(v),
                dominated.union(g.closed_neighborhood(v)),
                visit,
            );
        }
    }
    if k <= g.order() {
        rec(g, 0, k, VertexSet::EMPTY, VertexSet::EMPTY, &mut visit);
    }
}

pub fn dominating_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| g.degree(v) + 1 == g.order())
        .collect()
}

pub fn gamma_set_profile(g: &Graph) -> DominationProfile {
    profile_with_cap(g, GAMMA_SET_CAP)
}

pub fn profile_with_cap(g: &Graph, cap: usize) -> DominationProfile {
    let gamma = domination_number(g);
    let mut count = 0u64;
    let mut sets = Vec::new();
    let mut per_vertex = vec![0u64; g.order()];
    for_each_dominating_set(g, gamma, |s| {
        count += 1;
        for v in s {
            per_vertex[v] += 1;
        }
        if sets.len() <= cap {
            sets.push(s.iter().collect::<Vec<_>>());
        }
    });
    DominationProfile {
        gamma,
        gamma_set_count: count,
        gamma_sets: (count as usize <= cap).then_some(sets),
        per_vertex_gamma_set_count: per_vertex,
        dominating_vertices: dominating_vertices(g),
    }
}

pub fn structural_predicates(g: &Graph) -> StructuralPredicates {
    let n = g.order();
    let leaves_set: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let leaf_neighbors = |v: usize| g.neighbors(v).intersection(leaves_set).len();
    StructuralPredicates {
        isolated_vertices: (0..n).filter(|&v| g.degree(v) == 0).collect(),
        leaves: leaves_set.iter().collect(),
        support_vertices: (0..n).filter(|&v| leaf_neighbors(v) >= 1).collect(),
        strong_support_vertices: (0..n).filter(|&v| leaf_neighbors(v) >= 2).collect(),
        dominating_vertices: dominating_vertices(g),
    }
}

/// Leaf elimination: match a leaf with its neighbor, delete both, repeat.
pub fn tree_has_perfect_matching(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() % 2 == 1 {
        return Ok(false);
    }
    let mut alive = t.vertices();
    while !alive.is_empty() {
        let deg = |v: usize| t.neighbors(v).intersection(alive).len();
        if alive.iter().any(|v| deg(v) == 0) {
            return Ok(false);
        }
        let leaf = alive.iter().find(|&v| deg(v) == 1).expect("a forest has a leaf");
        let partner = t.neighbors(leaf).intersection(alive).first().unwrap();
        alive = alive.without(leaf).without(partner);
    }
    Ok(true)
}

/// For each vertex, the number of dominating sets of size exactly 2 containing it.
pub fn dominating_pair_counts(g: &Graph) -> Vec<usize> {
    let mut counts = vec![0; g.order()];
    for_each_dominating_set(g, 2, |s| {
        for v in s {
            counts[v] += 1;
        }
    });
    counts
}

/// Dominating sets `{x, y}` of size 2.
fn dominating_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for_each_dominating_set(g, 2, |s| {
        if s.len() == 2 {
            let mut it = s.iter();
            pairs.push((it.next().unwrap(), it.next().unwrap()));
        }
    });
    pairs
}

/// Whatever Staller claims first, Dominator has a vertex that is dominating
/// or has two dominating partners Staller has not taken.
fn mb_prime_is_2_by_reply(g: &Graph, dominating: &[usize]) -> bool {
    let pairs = dominating_pairs(g);
    let answers = |s: usize, x: usize| {
        dominating.contains(&x)
            || pairs
                .iter()
                .filter(|&&(a, b)| (a == x && b != s) || (b == x && a != s))
                .count()
                >= 2
    };
    dominating.len() <= 1 && g.vertices().iter().all(|s| g.vertices().iter().any(|x| x != s && answers(s, x)))
}

fn smb_is_2_condition(p: &StructuralPredicates) -> bool {
    p.strong_support_vertices.len() >= 2
}

pub fn predicted_small_values(g: &Graph) -> SmallValuePredictions {
    let gamma = domination_number(g);
    let preds = structural_predicates(g);
    let min_degree_ok = preds.isolated_vertices.is_empty();

    let mb_is_2 = (gamma == 2).then(|| {
        gamma_set_profile(g)
            .per_vertex_gamma_set_count
            .iter()
            .any(|&c| c >= 2)
    });
    let mb_prime_is_2 = (gamma <= 2).then(|| {
        let pairs = dominating_pair_counts(g);
        preds.dominating_vertices.len() <= 1 && pairs.iter().filter(|&&c| c >= 2).count() >= 2
    });
    let mb_prime_is_2_by_reply =
        (gamma <= 2).then(|| mb_prime_is_2_by_reply(g, &preds.dominating_vertices));
    let smb_is_2 = min_degree_ok.then(|| smb_is_2_condition(&preds));
    let smb_prime_is_2 = min_degree_ok.then_some(!preds.strong_support_vertices.is_empty());
    let smb_prime_is_3 = min_degree_ok.then(|| {
        preds.strong_support_vertices.is_empty()
            && g.order() > 1
            && (0..g.order()).any(|u| {
                let rest = structural_predicates(&g.remove_vertex(u).expect("order > 1"));
                smb_is_2_condition(&rest)
                    || (rest.isolated_vertices.len() == 1 && !rest.strong_support_vertices.is_empty())
            })
    });
    SmallValuePredictions {
        mb_is_2,
        mb_prime_is_2,
        mb_prime_is_2_by_reply,
        smb_is_2,
        smb_prime_is_2,
        smb_prime_is_3,
    }
}
