//! Exact evaluation of the Maker-Breaker domination game.
//!
//! Dominator wins once every vertex outside the predominated set has a
//! Dominator vertex in its closed neighborhood; Staller wins once she owns
//! the whole closed neighborhood of such a vertex. [`solve`] returns the
//! minimax number of moves of the counted player (Dominator for
//! [`Objective::Mb`], Staller for [`Objective::Smb`]).

mod search;
mod table;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use search::{Pos, Searcher, NEVER};

/// Default cap on the order of graphs accepted by [`solve`].
pub const DEFAULT_SIZE_CAP: usize = 26;
/// Orders up to this use root-level symmetry reduction.
pub const SYMMETRY_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }
}

/// Whose moves are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Objective {
    /// Dominator's moves (`γ_MB`, `γ_MB'`).
    Mb,
    /// Staller's moves (`γ_SMB`, `γ_SMB'`).
    Smb,
}

impl Objective {
    pub fn counted_player(self) -> Player {
        match self {
            Objective::Mb => Player::Dominator,
            Objective::Smb => Player::Staller,
        }
    }
}

/// A number of moves, or infinity when the counted player cannot win.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveCount {
    Finite(u32),
    Infinite,
}

impl MoveCount {
    pub fn is_finite(self) -> bool {
        matches!(self, MoveCount::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            MoveCount::Finite(v) => Some(v),
            MoveCount::Infinite => None,
        }
    }

    fn from_raw(v: u8) -> MoveCount {
        if v == NEVER {
            MoveCount::Infinite
        } else {
            MoveCount::Finite(v as u32)
        }
    }

    pub(crate) fn plus(self, k: u32) -> MoveCount {
        match self {
            MoveCount::Finite(v) => MoveCount::Finite(v + k),
            MoveCount::Infinite => MoveCount::Infinite,
        }
    }
}

impl fmt::Display for MoveCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveCount::Finite(v) => write!(f, "{v}"),
            MoveCount::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for MoveCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<MoveCount> {
        match s {
            "inf" => Ok(MoveCount::Infinite),
            _ => s
                .parse()
                .map(MoveCount::Finite)
                .map_err(|_| Error::ParseError(format!("not a move count: {s:?}"))),
        }
    }
}

impl Serialize for MoveCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MoveCount::Finite(v) => s.serialize_u32(*v),
            MoveCount::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for MoveCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<MoveCount, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(MoveCount::Finite(v)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// Dominator wins whoever starts.
    D,
    /// Staller wins whoever starts.
    S,
    /// The first player wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::D => "D",
            Outcome::S => "S",
            Outcome::N => "N",
        })
    }
}

/// Result of inspecting a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    DominatorWon,
    StallerWon,
    Ongoing,
}

/// A position of the game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    pub dominator: VertexSet,
    pub staller: VertexSet,
    pub predominated: VertexSet,
    pub to_move: Player,
    /// Passes made so far; with none, the turn follows from the claim counts.
    pub passes: u32,
}

impl GameState {
    pub fn new(first: Player, predominated: VertexSet) -> GameState {
        GameState {
            dominator: VertexSet::EMPTY,
            staller: VertexSet::EMPTY,
            predominated,
            to_move: first,
            passes: 0,
        }
    }

    pub fn is_free(&self, v: usize) -> bool {
        !self.dominator.contains(v) && !self.staller.contains(v)
    }

    /// Claims `v` for the player to move.
    pub fn play(&mut self, v: usize) {
        match self.to_move {
            Player::Dominator => self.dominator.insert(v),
            Player::Staller => self.staller.insert(v),
        }
        self.to_move = self.to_move.other();
    }

    pub fn pass(&mut self) {
        self.passes += 1;
        self.to_move = self.to_move.other();
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let all = g.vertices();
        if !self.dominator.is_disjoint(self.staller) {
            return Err(Error::InvalidParameter("a vertex is claimed by both players".into()));
        }
        for set in [self.dominator, self.staller, self.predominated] {
            if let Some(v) = set.difference(all).first() {
                return Err(Error::InvalidVertex { vertex: v, order: g.order() });
            }
        }
        Ok(())
    }

    /// Moves made so far, passes included.
    pub fn history_len(&self) -> usize {
        self.dominator.len() + self.staller.len() + self.passes as usize
    }
}

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub objective: Objective,
    pub first_player: Player,
    pub predominated: VertexSet,
    /// Lets the player whose moves are not counted pass.
    pub allow_pass: bool,
    pub node_limit: u64,
    pub table_memory_bytes: usize,
    pub size_cap: usize,
    /// Deduplicate first moves that are equivalent under automorphisms.
    pub symmetry: bool,
    /// Evaluate root moves on the rayon pool, one table per move.
    pub parallel_root: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            objective: Objective::Mb,
            first_player: Player::Dominator,
            predominated: VertexSet::EMPTY,
            allow_pass: false,
            node_limit: 200_000_000,
            table_memory_bytes: 512 << 20,
            size_cap: DEFAULT_SIZE_CAP,
            symmetry: true,
            parallel_root: false,
        }
    }
}

impl SolveConfig {
    pub fn new(objective: Objective, first_player: Player) -> SolveConfig {
        SolveConfig {
            objective,
            first_player,
            ..SolveConfig::default()
        }
    }

    pub fn with_predominated(mut self, a: VertexSet) -> SolveConfig {
        self.predominated = a;
        self
    }

    pub fn with_pass(mut self, allow: bool) -> SolveConfig {
        self.allow_pass = allow;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub table_hits: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveReport {
    pub value: MoveCount,
    pub stats: SearchStats,
}

pub fn terminal_status(g: &Graph, s: &GameState) -> Status {
    let dominated = g.dominated_by(s.dominator).union(s.predominated);
    let undominated = g.vertices().difference(dominated);
    if undominated.is_empty() {
        Status::DominatorWon
    } else if undominated
        .iter()
        .any(|v| g.closed_neighborhood(v).is_subset(s.staller))
    {
        Status::StallerWon
    } else {
        Status::Ongoing
    }
}

fn check_size(g: &Graph, cfg: &SolveConfig) -> Result<()> {
    if g.order() > cfg.size_cap {
        return Err(Error::SizeLimit(g.order()));
    }
    if !cfg.predominated.is_subset(g.vertices()) {
        let v = cfg.predominated.difference(g.vertices()).first().unwrap();
        return Err(Error::InvalidVertex { vertex: v, order: g.order() });
    }
    Ok(())
}

fn root_orbits(g: &Graph, cfg: &SolveConfig) -> Option<VertexSet> {
    if !cfg.symmetry || g.order() > SYMMETRY_MAX_ORDER {
        return None;
    }
    let colors: Vec<usize> = (0..g.order())
        .map(|v| cfg.predominated.contains(v) as usize)
        .collect();
    let orbit = enumerate::automorphism_orbits(g, Some(&colors)).ok()?;
    Some((0..g.order()).filter(|&v| orbit[v] == v).collect())
}

fn searcher<'a>(g: &'a Graph, cfg: &SolveConfig) -> Searcher<'a> {
    Searcher::new(
        g.closed_neighborhoods(),
        cfg.predominated,
        cfg.objective,
        cfg.allow_pass,
        cfg.node_limit,
        cfg.table_memory_bytes,
    )
}

fn to_pos(s: &GameState) -> Pos {
    Pos {
        dominator: s.dominator,
        staller: s.staller,
        to_move: s.to_move,
    }
}

/// Exact game value with search statistics.
pub fn solve_with_stats(g: &Graph, cfg: &SolveConfig) -> Result<SolveReport> {
    check_size(g, cfg)?;
    let start = Instant::now();
    let root = GameState::new(cfg.first_player, cfg.predominated);
    if cfg.parallel_root {
        return solve_parallel_root(g, cfg, &root, start);
    }
    let mut search = searcher(g, cfg);
    search.set_root_moves(root_orbits(g, cfg));
    let value = search.value(to_pos(&root))?;
    Ok(SolveReport {
        value: MoveCount::from_raw(value),
        stats: SearchStats {
            nodes: search.nodes,
            table_hits: search.table_hits,
            elapsed: start.elapsed(),
        },
    })
}

pub fn solve(g: &Graph, cfg: &SolveConfig) -> Result<MoveCount> {
    solve_with_stats(g, cfg).map(|r| r.value)
}

/// Value of an arbitrary position under `cfg`'s objective and pass rule.
pub fn position_value(g: &Graph, s: &GameState, cfg: &SolveConfig) -> Result<MoveCount> {
    check_size(g, cfg)?;
    s.validate(g)?;
    let cfg = SolveConfig {
        predominated: s.predominated,
        ..cfg.clone()
    };
    let mut search = searcher(g, &cfg);
    Ok(MoveCount::from_raw(search.value(to_pos(s))?))
}

/// Value of the game on `G | A`, where vertices of `A` need no domination.
pub fn solve_with_predomination(g: &Graph, a: VertexSet, cfg: &SolveConfig) -> Result<MoveCount> {
    solve(g, &cfg.clone().with_predominated(a))
}

/// Combines child values into the value of the parent for the player to move.
fn better(mover_counts: bool, a: MoveCount, b: MoveCount) -> bool {
    // the counted player minimizes, the other maximizes
    if mover_counts {
        a < b
    } else {
        a > b
    }
}

fn solve_parallel_root(
    g: &Graph,
    cfg: &SolveConfig,
    root: &GameState,
    start: Instant,
) -> Result<SolveReport> {
    let status = terminal_status(g, root);
    if status != Status::Ongoing {
        let value = match (status, cfg.objective) {
            (Status::DominatorWon, Objective::Mb) | (Status::StallerWon, Objective::Smb) => {
                MoveCount::Finite(0)
            }
            _ => MoveCount::Infinite,
        };
        return Ok(SolveReport {
            value,
            stats: SearchStats::default(),
        });
    }
    let mover_counts = root.to_move == cfg.objective.counted_player();
    let reps = root_orbits(g, cfg).unwrap_or(g.vertices());
    let mut children: Vec<Option<usize>> = reps.iter().map(Some).collect();
    if cfg.allow_pass && !mover_counts {
        children.push(None);
    }
    let results: Vec<Result<(MoveCount, u64, u64)>> = children
        .par_iter()
        .map(|&mv| {
            let mut child = root.clone();
            match mv {
                Some(v) => child.play(v),
                None => child.pass(),
            }
            let mut search = searcher(g, cfg);
            let v = MoveCount::from_raw(search.value(to_pos(&child))?);
            Ok((v, search.nodes, search.table_hits))
        })
        .collect();
    let mut best: Option<MoveCount> = None;
    let mut stats = SearchStats::default();
    for r in results {
        let (v, nodes, hits) = r?;
        stats.nodes += nodes;
        stats.table_hits += hits;
        let v = if mover_counts { v.plus(1) } else { v };
        if best.is_none_or(|b| better(mover_counts, v, b)) {
            best = Some(v);
        }
    }
    stats.elapsed = start.elapsed();
    Ok(SolveReport {
        value: best.expect("an ongoing game has a legal move"),
        stats,
    })
}

/// A minimax-optimal move for the player to move; ties go to the lowest index.
pub fn optimal_move(g: &Graph, s: &GameState, cfg: &SolveConfig) -> Result<usize> {
    optimal_move_with_value(g, s, cfg).map(|(v, _)| v)
}

/// Like [`optimal_move`], also returning the value of the position.
pub fn optimal_move_with_value(
    g: &Graph,
    s: &GameState,
    cfg: &SolveConfig,
) -> Result<(usize, MoveCount)> {
    check_size(g, cfg)?;
    s.validate(g)?;
    if terminal_status(g, s) != Status::Ongoing {
        return Err(Error::NoLegalMove);
    }
    let cfg = SolveConfig {
        predominated: s.predominated,
        ..cfg.clone()
    };
    let mover_counts = s.to_move == cfg.objective.counted_player();
    let mut search = searcher(g, &cfg);
    let mut best: Option<(usize, MoveCount)> = None;
    for v in (0..g.order()).filter(|&v| s.is_free(v)) {
        let mut child = s.clone();
        child.play(v);
        let mut value = MoveCount::from_raw(search.value(to_pos(&child))?);
        if mover_counts {
            value = value.plus(1);
        }
        if best.is_none_or(|(_, b)| better(mover_counts, value, b)) {
            best = Some((v, value));
        }
    }
    best.ok_or(Error::NoLegalMove)
}

/// Whether the counted player can force a win within `k` of their own moves.
pub fn wins_within(g: &Graph, cfg: &SolveConfig, k: u32) -> Result<bool> {
    check_size(g, cfg)?;
    let mut search = searcher(g, cfg);
    search.set_root_moves(root_orbits(g, cfg));
    let root = GameState::new(cfg.first_player, cfg.predominated);
    search.wins(to_pos(&root), k.min(search::UNBOUNDED as u32 - 1) as u8)
}

/// Whether the counted player of `objective` can win at all.
fn can_win(g: &Graph, cfg: &SolveConfig) -> Result<bool> {
    check_size(g, cfg)?;
    let mut search = searcher(g, cfg);
    search.set_root_moves(root_orbits(g, cfg));
    let root = GameState::new(cfg.first_player, cfg.predominated);
    search.wins(to_pos(&root), search::UNBOUNDED)
}

fn outcome_from(d_game: bool, s_game: bool) -> Result<Outcome> {
    match (d_game, s_game) {
        (true, true) => Ok(Outcome::D),
        (false, false) => Ok(Outcome::S),
        (true, false) => Ok(Outcome::N),
        (false, true) => Err(Error::Inconsistent(
            "Dominator wins the S-game but loses the D-game".into(),
        )),
    }
}

/// Winner pattern from Dominator's winnability in the D-game and the S-game.
pub fn outcome(g: &Graph) -> Result<Outcome> {
    outcome_with(g, &SolveConfig::default())
}

pub fn outcome_with(g: &Graph, base: &SolveConfig) -> Result<Outcome> {
    let cfg = |first| SolveConfig {
        objective: Objective::Mb,
        first_player: first,
        ..base.clone()
    };
    outcome_from(
        can_win(g, &cfg(Player::Dominator))?,
        can_win(g, &cfg(Player::Staller))?,
    )
}

/// The four move-count invariants and the outcome of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MbdNumbers {
    /// `γ_MB`: Dominator's moves in the D-game.
    pub mb: MoveCount,
    /// `γ_MB'`: Dominator's moves in the S-game.
    pub mb_prime: MoveCount,
    /// `γ_SMB`: Staller's moves in the D-game.
    pub smb: MoveCount,
    /// `γ_SMB'`: Staller's moves in the S-game.
    pub smb_prime: MoveCount,
    pub outcome: Outcome,
}

pub fn all_mbd_numbers(g: &Graph) -> Result<MbdNumbers> {
    all_mbd_numbers_with(g, &SolveConfig::default())
}

pub fn all_mbd_numbers_with(g: &Graph, base: &SolveConfig) -> Result<MbdNumbers> {
    let run = |objective, first| {
        solve(
            g,
            &SolveConfig {
                objective,
                first_player: first,
                ..base.clone()
            },
        )
    };
    let mb = run(Objective::Mb, Player::Dominator)?;
    let mb_prime = run(Objective::Mb, Player::Staller)?;
    let smb = run(Objective::Smb, Player::Dominator)?;
    let smb_prime = run(Objective::Smb, Player::Staller)?;
    if mb.is_finite() == smb.is_finite() || mb_prime.is_finite() == smb_prime.is_finite() {
        return Err(Error::Inconsistent(format!(
            "exactly one player must win each game: mb={mb} smb={smb} mb'={mb_prime} smb'={smb_prime}"
        )));
    }
    if mb.cmp(&mb_prime) == Ordering::Greater || smb.cmp(&smb_prime) == Ordering::Less {
        return Err(Error::Inconsistent(format!(
            "ordering violated: mb={mb} mb'={mb_prime} smb={smb} smb'={smb_prime}"
        )));
    }
    let outcome = outcome_from(mb.is_finite(), mb_prime.is_finite())?;
    Ok(MbdNumbers {
        mb,
        mb_prime,
        smb,
        smb_prime,
        outcome,
    })
}

#[cfg(test)]
mod tests;
