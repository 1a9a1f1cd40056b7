//! Exact solver for the Maker-Breaker domination game on small graphs.
//!
//! Dominator and Staller alternately claim vertices; Dominator wins by
//! claiming a dominating set, Staller by claiming a whole closed
//! neighborhood. The crate computes game outcomes and the four move-count
//! invariants, builds corona products, and checks the known closed forms
//! for coronas against exhaustive search.

// lets shared test helpers name the crate the same way from unit and integration tests
extern crate self as mbd_core;

pub mod domination;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod set;
pub mod solver;
pub mod verify;

pub use error::{Error, Result, MAX_ORDER};
pub use graph::{corona, from_graph6, generate, to_graph6, CoronaLabeling, Graph, GraphKind, GraphStats};
pub use set::VertexSet;
pub use solver::{
    all_mbd_numbers, optimal_move, outcome, solve, solve_with_predomination, terminal_status, wins_within,
    GameState, MbdNumbers, MoveCount, Objective, Outcome, Player, SolveConfig, Status,
};
pub use verify::{run_suite, Instance, Selector, Summary, VerificationReport, VerifyConfig, VerifyStatus};
