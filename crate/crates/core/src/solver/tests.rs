use super::*;
use crate::enumerate::all_graphs;
use crate::graph::generate;

#[path = "../../tests/common/oracle.rs"]
#[allow(dead_code)]
mod oracle;

use MoveCount::{Finite, Infinite};

fn cfg(objective: Objective, first: Player) -> SolveConfig {
    SolveConfig::new(objective, first)
}

fn mb_d() -> SolveConfig {
    cfg(Objective::Mb, Player::Dominator)
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

#[test]
fn terminal_status_examples() {
    let k2 = generate("path:2").unwrap();
    let mut s = GameState::new(Player::Dominator, VertexSet::EMPTY);
    s.dominator = set(&[0]);
    assert_eq!(terminal_status(&k2, &s), Status::DominatorWon);

    let e2 = generate("empty:2").unwrap();
    let mut s = GameState::new(Player::Dominator, VertexSet::EMPTY);
    s.staller = set(&[1]);
    assert_eq!(terminal_status(&e2, &s), Status::StallerWon);

    let c4 = generate("cycle:4").unwrap();
    let mut s = GameState::new(Player::Dominator, VertexSet::EMPTY);
    s.dominator = set(&[0]);
    s.staller = set(&[2]);
    assert_eq!(terminal_status(&c4, &s), Status::Ongoing);
}

#[test]
fn staller_win_rule_matches_hitting_every_dominating_set() {
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            for a in 0u64..1 << n {
                let a = VertexSet(a);
                for s in 0u64..1 << n {
                    let mut st = GameState::new(Player::Dominator, a);
                    st.staller = VertexSet(s);
                    let rule = terminal_status(&g, &st) == Status::StallerWon;
                    let hitting = oracle::staller_won_by_hitting(&g, a, VertexSet(s));
                    assert_eq!(rule, hitting, "{g:?} A={a:?} S={s:?}");
                }
            }
        }
    }
}

#[test]
fn single_vertex() {
    let k1 = generate("empty:1").unwrap();
    assert_eq!(solve(&k1, &mb_d()).unwrap(), Finite(1));
    assert_eq!(solve(&k1, &cfg(Objective::Mb, Player::Staller)).unwrap(), Infinite);
    assert_eq!(solve(&k1, &cfg(Objective::Smb, Player::Staller)).unwrap(), Finite(1));
}

#[test]
fn known_values() {
    assert_eq!(solve(&generate("fig1_H").unwrap(), &mb_d()).unwrap(), Finite(3));
    assert_eq!(solve(&generate("Hm:3").unwrap(), &mb_d()).unwrap(), Finite(4));
    let p4 = generate("path:4").unwrap();
    assert_eq!(solve(&p4, &mb_d()).unwrap(), Finite(2));
    assert_eq!(solve(&p4, &cfg(Objective::Mb, Player::Staller)).unwrap(), Finite(2));
    let e2 = generate("empty:2").unwrap();
    assert_eq!(solve(&e2, &cfg(Objective::Smb, Player::Dominator)).unwrap(), Finite(1));
    let p3 = generate("path:3").unwrap();
    assert_eq!(solve(&p3, &cfg(Objective::Smb, Player::Staller)).unwrap(), Finite(2));
}

#[test]
fn outcomes() {
    assert_eq!(outcome(&generate("path:2").unwrap()).unwrap(), Outcome::D);
    assert_eq!(outcome(&generate("empty:2").unwrap()).unwrap(), Outcome::S);
    assert_eq!(outcome(&generate("fig1_H").unwrap()).unwrap(), Outcome::N);
}

#[test]
fn all_numbers_examples() {
    let k1 = all_mbd_numbers(&generate("empty:1").unwrap()).unwrap();
    assert_eq!(
        (k1.mb, k1.mb_prime, k1.smb, k1.smb_prime, k1.outcome),
        (Finite(1), Infinite, Infinite, Finite(1), Outcome::N)
    );
    let e2 = all_mbd_numbers(&generate("empty:2").unwrap()).unwrap();
    assert_eq!(
        (e2.mb, e2.mb_prime, e2.smb, e2.smb_prime, e2.outcome),
        (Infinite, Infinite, Finite(1), Finite(1), Outcome::S)
    );
    let p4 = all_mbd_numbers(&generate("path:4").unwrap()).unwrap();
    assert_eq!(
        (p4.mb, p4.mb_prime, p4.smb, p4.smb_prime, p4.outcome),
        (Finite(2), Finite(2), Infinite, Infinite, Outcome::D)
    );
}

#[test]
fn optimal_moves() {
    let f = generate("fig1_H").unwrap();
    let root = GameState::new(Player::Dominator, VertexSet::EMPTY);
    assert_eq!(optimal_move(&f, &root, &mb_d()).unwrap(), f.find_vertex("h3").unwrap());

    let k2 = generate("path:2").unwrap();
    assert_eq!(optimal_move(&k2, &root, &mb_d()).unwrap(), 0);

    let p3 = generate("path:3").unwrap();
    let s_root = GameState::new(Player::Staller, VertexSet::EMPTY);
    let smb = cfg(Objective::Smb, Player::Staller);
    assert_eq!(optimal_move_with_value(&p3, &s_root, &smb).unwrap(), (1, Finite(2)));

    let mut done = root.clone();
    done.play(0);
    assert_eq!(optimal_move(&k2, &done, &mb_d()), Err(Error::NoLegalMove));
}

#[test]
fn predomination() {
    let p4 = generate("path:4").unwrap();
    assert_eq!(solve_with_predomination(&p4, p4.vertices(), &mb_d()).unwrap(), Finite(0));
    assert_eq!(solve_with_predomination(&p4, set(&[0, 1]), &mb_d()).unwrap(), Finite(1));
    assert_eq!(
        solve_with_predomination(&p4, VertexSet::EMPTY, &mb_d()).unwrap(),
        solve(&p4, &mb_d()).unwrap()
    );
    assert!(matches!(
        solve_with_predomination(&p4, set(&[7]), &mb_d()),
        Err(Error::InvalidVertex { .. })
    ));
}

#[test]
fn limits() {
    let big = generate("path:27").unwrap();
    assert_eq!(solve(&big, &mb_d()), Err(Error::SizeLimit(27)));
    let f = generate("Hm:3").unwrap();
    let tiny = SolveConfig {
        node_limit: 5,
        ..mb_d()
    };
    assert!(matches!(solve(&f, &tiny), Err(Error::NodeLimitExceeded(_))));
}

#[test]
fn move_count_text_and_json() {
    assert_eq!(Infinite.to_string(), "inf");
    assert_eq!("3".parse::<MoveCount>().unwrap(), Finite(3));
    assert_eq!(serde_json::to_string(&Infinite).unwrap(), "\"inf\"");
    assert_eq!(serde_json::from_str::<MoveCount>("\"inf\"").unwrap(), Infinite);
    assert_eq!(serde_json::from_str::<MoveCount>("4").unwrap(), Finite(4));
    assert!(Finite(100) < Infinite);
}

const CONFIGS: [(Objective, Player); 4] = [
    (Objective::Mb, Player::Dominator),
    (Objective::Mb, Player::Staller),
    (Objective::Smb, Player::Dominator),
    (Objective::Smb, Player::Staller),
];

#[test]
fn agrees_with_plain_minimax_on_all_graphs_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let expected = oracle::numbers(&g, VertexSet::EMPTY);
            for (i, (obj, first)) in CONFIGS.into_iter().enumerate() {
                assert_eq!(solve(&g, &cfg(obj, first)).unwrap(), expected[i], "{g:?} {obj:?} {first:?}");
            }
        }
    }
}

#[test]
fn agrees_with_plain_minimax_under_predomination() {
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            for a in 0u64..1 << n {
                let a = VertexSet(a);
                let expected = oracle::numbers(&g, a);
                for (i, (obj, first)) in CONFIGS.into_iter().enumerate() {
                    let got = solve_with_predomination(&g, a, &cfg(obj, first)).unwrap();
                    assert_eq!(got, expected[i], "{g:?} A={a:?} {obj:?} {first:?}");
                }
            }
        }
    }
}

#[test]
fn passing_matches_plain_minimax_with_passes() {
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            let e = VertexSet::EMPTY;
            for (obj, first) in CONFIGS {
                let counted = match obj {
                    Objective::Mb => oracle::Counted::Dominator,
                    Objective::Smb => oracle::Counted::Staller,
                };
                let expected =
                    oracle::value(&g, e, e, e, first == Player::Dominator, counted, true, false);
                let got = solve(&g, &cfg(obj, first).with_pass(true)).unwrap();
                assert_eq!(got, expected, "{g:?} {obj:?} {first:?}");
            }
        }
    }
}

#[test]
fn optimal_move_matches_minimax_children() {
    for g in all_graphs(5).unwrap() {
        for (obj, first) in CONFIGS {
            let c = cfg(obj, first);
            let root = GameState::new(first, VertexSet::EMPTY);
            let (mv, value) = optimal_move_with_value(&g, &root, &c).unwrap();
            assert_eq!(value, solve(&g, &c).unwrap(), "{g:?} {obj:?} {first:?}");
            let mut child = root.clone();
            child.play(mv);
            let mut child_value = position_value(&g, &child, &c).unwrap();
            if first == obj.counted_player() {
                child_value = child_value.plus(1);
            }
            assert_eq!(child_value, value);
        }
    }
}

#[test]
fn symmetry_and_parallel_root_do_not_change_values() {
    for g in all_graphs(6).unwrap().into_iter().step_by(3) {
        for (obj, first) in CONFIGS {
            let base = cfg(obj, first);
            let plain = SolveConfig {
                symmetry: false,
                ..base.clone()
            };
            let par = SolveConfig {
                parallel_root: true,
                ..base.clone()
            };
            let v = solve(&g, &base).unwrap();
            assert_eq!(solve(&g, &plain).unwrap(), v);
            assert_eq!(solve(&g, &par).unwrap(), v);
        }
    }
}

#[test]
fn tiny_table_gives_same_values() {
    let tiny = |obj, first| SolveConfig {
        table_memory_bytes: 0,
        ..cfg(obj, first)
    };
    for spec in ["fig1_H", "Hm:2", "comb:4", "cycle:7"] {
        let g = generate(spec).unwrap();
        for (obj, first) in CONFIGS {
            assert_eq!(
                solve(&g, &tiny(obj, first)).unwrap(),
                solve(&g, &cfg(obj, first)).unwrap(),
                "{spec}"
            );
        }
    }
}
