use super::*;
use crate::canon::brute_force_canonicalize;
use crate::fol::parse_theory;
use crate::kernel::{is_model, UNASSIGNED};
use std::collections::HashSet;

fn state(text: &str, n: usize, strategy: Strategy, lnh: bool) -> SearchState {
    let t = parse_theory(text).unwrap();
    SearchState::new(Arc::new(ground_theory(&t, n).unwrap()), strategy, true, lnh)
}

#[test]
fn row_major_starts_at_first_cell() {
    let s = state("functions f/2.", 2, Strategy::RowMajor, true);
    assert_eq!(s.next_cell(), Some(0));
    assert_eq!(s.cell_order(), &[0, 1, 2, 3]);
}

#[test]
fn total_cube_has_no_next_cell() {
    let mut s = state("functions f/2.", 2, Strategy::RowMajor, false);
    for cell in 0..4 {
        s.assign_and_propagate(cell, 0).unwrap();
    }
    assert_eq!(s.next_cell(), None);
}

#[test]
fn concentric_order() {
    let s = state("functions f/2.", 3, Strategy::Concentric, true);
    // (0,0); then (0,1) (1,0) (1,1); then the cells touching 2
    assert_eq!(s.cell_order(), &[0, 1, 3, 4, 2, 5, 6, 7, 8]);
    let s = state("functions c/0, g/1.", 2, Strategy::Concentric, true);
    assert_eq!(s.cell_order(), &[0, 1, 2]);
}

#[test]
fn commutativity_propagates_the_mirror_cell() {
    let mut s = state("f(x,y) = f(y,x).", 3, Strategy::RowMajor, true);
    s.assign_and_propagate(1, 2).unwrap();
    assert_eq!(s.cube().get(3), 2);
    assert!(!s.cube().trail()[1].decision);
}

#[test]
fn negative_propagation_forces_the_last_value() {
    let mut s = state("f(x,y) != f(y,x).", 2, Strategy::RowMajor, false);
    s.assign_and_propagate(1, 1).unwrap();
    assert!(s.is_excluded(2, 1));
    assert_eq!(s.cube().get(2), 0);

    let mut s = state("x = y | f(x,y) != f(y,x).", 3, Strategy::RowMajor, false);
    s.assign_and_propagate(1, 1).unwrap();
    assert!(s.is_excluded(3, 1));
    assert_eq!(s.cube().get(3), UNASSIGNED);
    assert_eq!(s.candidate_values(3), vec![0, 2]);
}

#[test]
fn empty_theory_does_not_propagate() {
    let mut s = state("functions f/2.", 3, Strategy::RowMajor, true);
    s.assign_and_propagate(4, 2).unwrap();
    assert_eq!(s.cube().assigned_count(), 1);
}

#[test]
fn conflict_restores_the_state() {
    let mut s = state("x * y = x * z -> y = z.", 2, Strategy::RowMajor, false);
    s.assign_and_propagate(0, 1).unwrap();
    let before = s.cube().clone();
    // 0*1 = 1 collides with 0*0 = 1
    assert_eq!(s.assign_and_propagate(1, 1), Err(Conflict));
    assert_eq!(s.cube(), &before);
    assert_eq!(s.cube().trail().len(), before.trail().len());
}

#[test]
fn lnh_candidates() {
    for n in 2..=5 {
        let s = state("functions f/2.", n, Strategy::RowMajor, true);
        assert_eq!(s.candidate_values(0), vec![0, 1]);
        let s = state("functions f/2.", n, Strategy::RowMajor, false);
        assert_eq!(s.candidate_values(0), (0..n as u8).collect::<Vec<_>>());
    }
    let s = state("0 * x = 0 * x.", 4, Strategy::RowMajor, true);
    assert_eq!(s.candidate_values(0), vec![0, 1]);
    // f(2,3) names 3 already
    let s = state("functions f/2.", 5, Strategy::RowMajor, true);
    assert_eq!(s.candidate_values(13), vec![0, 1, 2, 3, 4]);
}

#[test]
fn lnh_does_not_touch_relations() {
    let s = state("relations r/1.", 3, Strategy::RowMajor, true);
    assert_eq!(s.candidate_values(2), vec![crate::kernel::FALSE, crate::kernel::TRUE]);
}

fn oracle_keys(models: &[Cube]) -> HashSet<Vec<u8>> {
    models
        .iter()
        .map(|m| brute_force_canonicalize(m).unwrap().1 .0.into_bytes())
        .collect()
}

#[test]
fn binary_operations_on_two_elements() {
    let t = parse_theory("functions f/2.").unwrap();
    for canon in [CanonMode::Graph, CanonMode::Perm] {
        let opts = SearchOptions { canon, ..SearchOptions::default() };
        let (models, stats) = collect_models(&t, 2, &opts).unwrap();
        assert_eq!(models.len(), 10);
        assert!(stats.is_complete());
        assert_eq!(oracle_keys(&models).len(), 10);
    }
    let opts = SearchOptions { canon: CanonMode::Off, lnh: false, ..SearchOptions::default() };
    assert_eq!(collect_models(&t, 2, &opts).unwrap().0.len(), 16);
}

#[test]
fn models_satisfy_the_theory() {
    let t = parse_theory("x * y = y * x. (x * y) * z = x * (y * z).").unwrap();
    let g = ground_theory(&t, 3).unwrap();
    let (models, _) = collect_models(&t, 3, &SearchOptions::default()).unwrap();
    assert!(!models.is_empty());
    assert!(models.iter().all(|m| is_model(m, &g)));
    let keys = oracle_keys(&models);
    assert_eq!(keys.len(), models.len());
}

#[test]
fn option_combinations_agree() {
    let t = parse_theory("x * (x * y) = y.").unwrap();
    let mut reference = None;
    for lnh in [true, false] {
        for propagation in [true, false] {
            for strategy in [Strategy::RowMajor, Strategy::Concentric] {
                let opts = SearchOptions { lnh, propagation, strategy, ..SearchOptions::default() };
                let keys = oracle_keys(&collect_models(&t, 4, &opts).unwrap().0);
                match &reference {
                    None => reference = Some(keys),
                    Some(r) => assert_eq!(r, &keys),
                }
            }
        }
    }
}

#[test]
fn inconsistent_theory_has_no_models() {
    let t = parse_theory("functions f/1. 0 = 1.").unwrap();
    let (models, stats) = collect_models(&t, 2, &SearchOptions::default()).unwrap();
    assert!(models.is_empty());
    assert_eq!(stats.nodes, 0);
}

#[test]
fn caps() {
    let t = parse_theory("functions f/2.").unwrap();
    let opts = SearchOptions { max_models: Some(3), ..SearchOptions::default() };
    let (models, stats) = collect_models(&t, 3, &opts).unwrap();
    assert_eq!(models.len(), 3);
    assert_eq!(stats.outcome, Outcome::ModelLimit);
    assert!(!stats.aborted());

    let opts = SearchOptions { node_cap: Some(5), ..SearchOptions::default() };
    let stats = collect_models(&t, 3, &opts).unwrap().1;
    assert_eq!(stats.outcome, Outcome::NodeCap);
    assert_eq!(stats.nodes, 5);

    let opts = SearchOptions { store_cap: Some(40), ..SearchOptions::default() };
    let stats = collect_models(&t, 3, &opts).unwrap().1;
    assert_eq!(stats.outcome, Outcome::StoreCap);
    assert!(stats.aborted());
}

#[test]
fn order_one_is_rejected() {
    let t = parse_theory("functions f/2.").unwrap();
    assert!(matches!(collect_models(&t, 1, &SearchOptions::default()), Err(Error::DomainSize(1))));
}

#[test]
fn pruning_never_expands_more_nodes() {
    let t = parse_theory("x * y = y * x.").unwrap();
    let on = collect_models(&t, 3, &SearchOptions::default()).unwrap().1;
    let off = collect_models(&t, 3, &SearchOptions { canon: CanonMode::Off, ..SearchOptions::default() }).unwrap().1;
    assert!(on.nodes <= off.nodes);
    assert!(on.pruned > 0);
}
