//! Depth-first budgeted search.
//!
//! `wins(pos, k)` answers whether the objective player (the one whose moves
//! are counted) can force a win using at most `k` more of their own moves.
//! Exact values come from iterative deepening on `k`; the table stores a
//! `[lo, hi]` interval for every visited position.

use super::table::Table;
use super::{Objective, Player};
use crate::error::Error;
use crate::set::VertexSet;

/// Budget meaning "any finite number of moves".
pub(crate) const UNBOUNDED: u8 = 254;
/// Stored value meaning the objective player cannot win.
pub(crate) const NEVER: u8 = 255;

const PASS: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Pos {
    pub dominator: VertexSet,
    pub staller: VertexSet,
    pub to_move: Player,
}

pub(crate) struct Searcher<'a> {
    closed: &'a [VertexSet],
    all: VertexSet,
    predominated: VertexSet,
    objective: Objective,
    allow_pass: bool,
    /// Restricts moves in positions with nothing claimed (orbit representatives).
    root_moves: Option<VertexSet>,
    table: Table,
    pub nodes: u64,
    pub table_hits: u64,
    node_limit: u64,
}

/// Facts about a position shared by every case of the search.
struct Scan {
    undominated: VertexSet,
    free: VertexSet,
    /// Vertices that are the last unclaimed vertex of some undominated closed neighborhood.
    blockers: VertexSet,
    /// Smallest number of unclaimed vertices left in an undominated closed neighborhood.
    min_rem: u32,
    staller_won: bool,
}

impl<'a> Searcher<'a> {
    pub fn new(
        closed: &'a [VertexSet],
        predominated: VertexSet,
        objective: Objective,
        allow_pass: bool,
        node_limit: u64,
        table_bytes: usize,
    ) -> Searcher<'a> {
        Searcher {
            closed,
            all: VertexSet::full(closed.len()),
            predominated,
            objective,
            allow_pass,
            root_moves: None,
            table: Table::new(table_bytes),
            nodes: 0,
            table_hits: 0,
            node_limit,
        }
    }

    pub fn set_root_moves(&mut self, moves: Option<VertexSet>) {
        self.root_moves = moves;
    }

    pub fn dominated(&self, dominator: VertexSet) -> VertexSet {
        dominator
            .iter()
            .fold(self.predominated, |acc, v| acc.union(self.closed[v]))
    }

    fn scan(&self, pos: &Pos) -> Scan {
        let free = self.all.difference(pos.dominator.union(pos.staller));
        let undominated = self.all.difference(self.dominated(pos.dominator));
        let mut blockers = VertexSet::EMPTY;
        let mut min_rem = u32::MAX;
        let mut staller_won = false;
        for x in undominated {
            let rem = self.closed[x].intersection(free);
            match rem.len() {
                0 => {
                    staller_won = true;
                    break;
                }
                1 => blockers = blockers.union(rem),
                _ => {}
            }
            min_rem = min_rem.min(rem.len() as u32);
        }
        Scan {
            undominated,
            free,
            blockers,
            min_rem,
            staller_won,
        }
    }

    /// Exact number of objective moves still needed, or [`NEVER`].
    pub fn value(&mut self, pos: Pos) -> Result<u8, Error> {
        if !self.wins(pos, UNBOUNDED)? {
            return Ok(NEVER);
        }
        let mut k = match self.table.get(key_dom(&pos), pos.staller.0) {
            Some((lo, _)) => lo,
            None => 0,
        };
        while !self.wins(pos, k)? {
            k += 1;
        }
        Ok(k)
    }

    pub fn wins(&mut self, pos: Pos, k: u8) -> Result<bool, Error> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::NodeLimitExceeded(self.nodes));
        }
        let key = key_dom(&pos);
        if let Some((lo, hi)) = self.table.get(key, pos.staller.0) {
            if hi <= k {
                self.table_hits += 1;
                return Ok(true);
            }
            if lo > k {
                self.table_hits += 1;
                return Ok(false);
            }
        }
        let result = match (self.objective, pos.to_move) {
            (Objective::Mb, Player::Dominator) => self.mb_dominator(pos, k)?,
            (Objective::Mb, Player::Staller) => self.mb_staller(pos, k)?,
            (Objective::Smb, Player::Dominator) => self.smb_dominator(pos, k)?,
            (Objective::Smb, Player::Staller) => self.smb_staller(pos, k)?,
        };
        if result {
            self.table.store(key, pos.staller.0, 0, k);
        } else {
            self.table.store(key, pos.staller.0, k.saturating_add(1), NEVER);
        }
        Ok(result)
    }

    fn restrict_root(&self, pos: &Pos, moves: VertexSet) -> VertexSet {
        match self.root_moves {
            Some(r) if pos.dominator.is_empty() && pos.staller.is_empty() => moves.intersection(r),
            _ => moves,
        }
    }

    /// Largest number of undominated vertices a single unclaimed vertex covers.
    fn max_cover(&self, s: &Scan) -> usize {
        s.free
            .iter()
            .map(|w| self.closed[w].intersection(s.undominated).len())
            .max()
            .unwrap_or(0)
    }

    /// Dominator candidates: skip `u` when another unclaimed `w` dominates a
    /// superset of what `u` would newly dominate.
    fn dominator_moves(&self, pos: &Pos, s: &Scan, out: &mut Vec<(u32, u8)>) {
        let moves = self.restrict_root(pos, s.free);
        let gain: Vec<(usize, VertexSet)> = moves
            .iter()
            .map(|w| (w, self.closed[w].intersection(s.undominated)))
            .collect();
        for &(u, gu) in &gain {
            let dominated = gain
                .iter()
                .any(|&(w, gw)| w != u && gu.is_subset(gw) && (gu != gw || w < u));
            if !dominated {
                out.push((u32::MAX - gu.len() as u32, u as u8));
            }
        }
        out.sort_unstable();
    }

    /// Staller candidates: vertices in some undominated closed neighborhood,
    /// plus one representative of the vertices that matter to nobody.
    fn staller_moves(&self, pos: &Pos, s: &Scan, out: &mut Vec<(u32, u8)>) {
        let moves = self.restrict_root(pos, s.free);
        let mut score = [u32::MAX; 64];
        let mut useful = VertexSet::EMPTY;
        for x in s.undominated {
            let rem = self.closed[x].intersection(s.free);
            let r = rem.len() as u32;
            for u in rem {
                // prefer the neighborhood closest to completion, then the most touched
                score[u] = score[u].min(r << 16).saturating_sub(1);
            }
            useful = useful.union(rem);
        }
        for u in moves.intersection(useful) {
            out.push((score[u], u as u8));
        }
        if let Some(u) = moves.difference(useful).first() {
            out.push((u32::MAX, u as u8));
        }
        out.sort_unstable();
    }

    /// Whether Staller, to move, has a vertex completing two closed
    /// neighborhoods up to distinct single vertices.
    fn staller_double_threat(&self, s: &Scan) -> bool {
        let mut partner = [u8::MAX; 64];
        for x in s.undominated {
            let rem = self.closed[x].intersection(s.free);
            if rem.len() != 2 {
                continue;
            }
            let a = rem.first().unwrap();
            let b = rem.without(a).first().unwrap();
            for (u, t) in [(a, b), (b, a)] {
                match partner[u] {
                    p if p == u8::MAX => partner[u] = t as u8,
                    p if p as usize != t => return true,
                    _ => {}
                }
            }
        }
        false
    }

    fn child(&self, pos: &Pos, mv: u8) -> Pos {
        let mut next = *pos;
        if mv != PASS {
            match pos.to_move {
                Player::Dominator => next.dominator.insert(mv as usize),
                Player::Staller => next.staller.insert(mv as usize),
            }
        }
        next.to_move = pos.to_move.other();
        next
    }

    fn mb_dominator(&mut self, pos: Pos, k: u8) -> Result<bool, Error> {
        let s = self.scan(&pos);
        if s.undominated.is_empty() {
            return Ok(true);
        }
        if s.staller_won || k == 0 {
            return Ok(false);
        }
        if s.free
            .iter()
            .any(|w| s.undominated.is_subset(self.closed[w]))
        {
            return Ok(true);
        }
        if k == 1 || s.blockers.len() >= 2 {
            return Ok(false);
        }
        if k != UNBOUNDED && s.undominated.len() > k as usize * self.max_cover(&s) {
            return Ok(false);
        }
        let mut moves = Vec::with_capacity(s.free.len());
        if let Some(b) = s.blockers.first() {
            moves.push((0, b as u8));
        } else {
            self.dominator_moves(&pos, &s, &mut moves);
        }
        let next_k = if k == UNBOUNDED { k } else { k - 1 };
        for &(_, mv) in &moves {
            if self.wins(self.child(&pos, mv), next_k)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn mb_staller(&mut self, pos: Pos, k: u8) -> Result<bool, Error> {
        let s = self.scan(&pos);
        if s.undominated.is_empty() {
            return Ok(true);
        }
        if s.staller_won || !s.blockers.is_empty() || k == 0 {
            return Ok(false);
        }
        if k != UNBOUNDED && s.undominated.len() > k as usize * self.max_cover(&s) {
            return Ok(false);
        }
        if self.staller_double_threat(&s) {
            return Ok(false);
        }
        let mut moves = Vec::with_capacity(s.free.len() + 1);
        self.staller_moves(&pos, &s, &mut moves);
        if self.allow_pass {
            moves.push((u32::MAX, PASS));
        }
        for &(_, mv) in &moves {
            if !self.wins(self.child(&pos, mv), k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn smb_staller(&mut self, pos: Pos, k: u8) -> Result<bool, Error> {
        let s = self.scan(&pos);
        if s.staller_won {
            return Ok(true);
        }
        if s.undominated.is_empty() || k == 0 {
            return Ok(false);
        }
        if !s.blockers.is_empty() {
            return Ok(true);
        }
        if k != UNBOUNDED && s.min_rem > k as u32 {
            return Ok(false);
        }
        if self.staller_double_threat(&s) {
            return Ok(k >= 2);
        }
        if k == 1 {
            return Ok(false);
        }
        let mut moves = Vec::with_capacity(s.free.len());
        self.staller_moves(&pos, &s, &mut moves);
        let next_k = if k == UNBOUNDED { k } else { k - 1 };
        for &(_, mv) in &moves {
            if self.wins(self.child(&pos, mv), next_k)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn smb_dominator(&mut self, pos: Pos, k: u8) -> Result<bool, Error> {
        let s = self.scan(&pos);
        if s.staller_won {
            return Ok(true);
        }
        if s.undominated.is_empty() || k == 0 {
            return Ok(false);
        }
        if s.free
            .iter()
            .any(|w| s.undominated.is_subset(self.closed[w]))
        {
            return Ok(false);
        }
        if s.blockers.len() >= 2 {
            return Ok(true);
        }
        if k != UNBOUNDED && s.min_rem > k as u32 {
            return Ok(false);
        }
        let mut moves = Vec::with_capacity(s.free.len() + 1);
        if let Some(b) = s.blockers.first() {
            moves.push((0, b as u8));
        } else {
            self.dominator_moves(&pos, &s, &mut moves);
            if self.allow_pass {
                moves.push((u32::MAX, PASS));
            }
        }
        for &(_, mv) in &moves {
            if !self.wins(self.child(&pos, mv), k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[inline]
fn key_dom(pos: &Pos) -> u64 {
    pos.dominator.0 | ((pos.to_move == Player::Staller) as u64) << 63
}
