use std::io::{BufRead, Write};

use mbd_core::{optimal_move, terminal_status, GameState, Graph, Player, SolveConfig, Status};

use crate::input::parse_vertex;
use crate::Failure;

fn name(p: Player) -> &'static str {
    match p {
        Player::Dominator => "Dominator",
        Player::Staller => "Staller",
    }
}

fn list(g: &Graph, set: mbd_core::VertexSet) -> String {
    let labels: Vec<String> = set.iter().map(|v| g.label(v)).collect();
    format!("{{{}}}", labels.join(", "))
}

/// Runs a game between a human on `input` and the engine.
pub fn play(
    g: &Graph,
    cfg: &SolveConfig,
    human: Player,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let mut state = GameState::new(cfg.first_player, cfg.predominated);
    writeln!(
        out,
        "{} starts; you are {}. Enter a vertex label or index, q to quit.",
        name(cfg.first_player),
        name(human)
    )?;
    loop {
        match terminal_status(g, &state) {
            Status::DominatorWon => {
                writeln!(out, "Dominator wins in {}", state.dominator.len())?;
                return Ok(());
            }
            Status::StallerWon => {
                writeln!(out, "Staller wins in {}", state.staller.len())?;
                return Ok(());
            }
            Status::Ongoing => {}
        }
        if state.to_move == human {
            write!(out, "free {}> ", list(g, g.vertices().difference(state.dominator.union(state.staller))))?;
            out.flush()?;
            let mut line = String::new();
            if input.read_line(&mut line)? == 0 {
                writeln!(out)?;
                writeln!(out, "session ended")?;
                return Ok(());
            }
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if line == "q" || line == "quit" {
                writeln!(out, "session ended")?;
                return Ok(());
            }
            match parse_vertex(g, line) {
                Ok(v) if state.is_free(v) => {
                    state.play(v);
                }
                Ok(v) => writeln!(out, "illegal: {} is already claimed", g.label(v))?,
                Err(_) => writeln!(out, "illegal: no vertex {line:?}")?,
            }
        } else {
            let v = optimal_move(g, &state, cfg)?;
            writeln!(out, "{} plays {} ({v})", name(state.to_move), g.label(v))?;
            state.play(v);
        }
    }
}
