//! Reference game evaluator: plain minimax over every legal move, straight
//! from the rules, with no table, pruning, or forced-move logic.

use mbd_core::{Graph, MoveCount, VertexSet};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Counted {
    Dominator,
    Staller,
}

/// Dominator wins when `V(G) \ A` is dominated by his vertices.
pub fn dominator_won(g: &Graph, a: VertexSet, d: VertexSet) -> bool {
    (0..g.order()).all(|x| a.contains(x) || d.iter().any(|v| g.closed_neighborhood(v).contains(x)))
}

/// Staller wins when her vertices meet every dominating set of `G | A`,
/// checked by listing every dominating set.
pub fn staller_won_by_hitting(g: &Graph, a: VertexSet, s: VertexSet) -> bool {
    (0u64..1 << g.order())
        .map(VertexSet)
        .filter(|&set| dominator_won(g, a, set))
        .all(|set| !set.is_disjoint(s))
}

fn staller_won(g: &Graph, a: VertexSet, s: VertexSet) -> bool {
    (0..g.order())
        .any(|x| !a.contains(x) && g.closed_neighborhood(x).is_subset(s))
}

fn plus1(m: MoveCount) -> MoveCount {
    match m {
        MoveCount::Finite(v) => MoveCount::Finite(v + 1),
        MoveCount::Infinite => MoveCount::Infinite,
    }
}

/// Minimax value; `dominator_to_move` says whose turn it is. With
/// `allow_pass`, the uncounted player may pass unless the previous move was a pass.
#[allow(clippy::too_many_arguments)]
pub fn value(
    g: &Graph,
    a: VertexSet,
    d: VertexSet,
    s: VertexSet,
    dominator_to_move: bool,
    counted: Counted,
    allow_pass: bool,
    last_was_pass: bool,
) -> MoveCount {
    if dominator_won(g, a, d) {
        return match counted {
            Counted::Dominator => MoveCount::Finite(0),
            Counted::Staller => MoveCount::Infinite,
        };
    }
    if staller_won(g, a, s) {
        return match counted {
            Counted::Dominator => MoveCount::Infinite,
            Counted::Staller => MoveCount::Finite(0),
        };
    }
    let mover_counted = dominator_to_move == (counted == Counted::Dominator);
    let mut children = Vec::new();
    for v in 0..g.order() {
        if d.contains(v) || s.contains(v) {
            continue;
        }
        let (nd, ns) = if dominator_to_move {
            (d.with(v), s)
        } else {
            (d, s.with(v))
        };
        let child = value(g, a, nd, ns, !dominator_to_move, counted, allow_pass, false);
        children.push(if mover_counted { plus1(child) } else { child });
    }
    if allow_pass && !mover_counted && !last_was_pass {
        children.push(value(g, a, d, s, !dominator_to_move, counted, allow_pass, true));
    }
    if mover_counted {
        children.into_iter().min().unwrap()
    } else {
        children.into_iter().max().unwrap()
    }
}

/// `(γ_MB, γ_MB', γ_SMB, γ_SMB')` of `G | A`.
pub fn numbers(g: &Graph, a: VertexSet) -> [MoveCount; 4] {
    let e = VertexSet::EMPTY;
    [
        value(g, a, e, e, true, Counted::Dominator, false, false),
        value(g, a, e, e, false, Counted::Dominator, false, false),
        value(g, a, e, e, true, Counted::Staller, false, false),
        value(g, a, e, e, false, Counted::Staller, false, false),
    ]
}

/// Same minimax as [`value`] without passes, memoized on the position so it
/// reaches 10 to 12 vertices.
pub struct Memo<'a> {
    g: &'a Graph,
    a: VertexSet,
    counted: Counted,
    seen: std::collections::HashMap<(u64, u64, bool), MoveCount>,
}

impl<'a> Memo<'a> {
    pub fn new(g: &'a Graph, a: VertexSet, counted: Counted) -> Memo<'a> {
        Memo {
            g,
            a,
            counted,
            seen: std::collections::HashMap::new(),
        }
    }

    pub fn value(&mut self, d: VertexSet, s: VertexSet, dominator_to_move: bool) -> MoveCount {
        let key = (d.0, s.0, dominator_to_move);
        if let Some(&v) = self.seen.get(&key) {
            return v;
        }
        let (g, a, counted) = (self.g, self.a, self.counted);
        let v = if dominator_won(g, a, d) {
            match counted {
                Counted::Dominator => MoveCount::Finite(0),
                Counted::Staller => MoveCount::Infinite,
            }
        } else if staller_won(g, a, s) {
            match counted {
                Counted::Dominator => MoveCount::Infinite,
                Counted::Staller => MoveCount::Finite(0),
            }
        } else {
            let mover_counted = dominator_to_move == (counted == Counted::Dominator);
            let mut best: Option<MoveCount> = None;
            for v in 0..g.order() {
                if d.contains(v) || s.contains(v) {
                    continue;
                }
                let child = if dominator_to_move {
                    self.value(d.with(v), s, false)
                } else {
                    self.value(d, s.with(v), true)
                };
                let child = if mover_counted { plus1(child) } else { child };
                best = Some(match best {
                    None => child,
                    Some(b) if mover_counted => b.min(child),
                    Some(b) => b.max(child),
                });
            }
            best.unwrap()
        };
        self.seen.insert(key, v);
        v
    }
}

/// [`numbers`] through [`Memo`].
pub fn memo_numbers(g: &Graph, a: VertexSet) -> [MoveCount; 4] {
    let e = VertexSet::EMPTY;
    let mut dom = Memo::new(g, a, Counted::Dominator);
    let mut stal = Memo::new(g, a, Counted::Staller);
    [
        dom.value(e, e, true),
        dom.value(e, e, false),
        stal.value(e, e, true),
        stal.value(e, e, false),
    ]
}
