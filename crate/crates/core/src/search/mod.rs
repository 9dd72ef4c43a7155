//! Depth-first model search with canonical-key pruning.
//!
//! Each decision is followed by unit propagation; the resulting cube is
//! canonicalized and abandoned when its key was seen before. Total cubes
//! that survive are models, one per isomorphism class.

mod state;

use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::canon::{brute_force_canonicalize, canonical_key, BRUTE_FORCE_MAX_ORDER};
use crate::fol::Theory;
use crate::ground::{ground_theory, GroundClauseSet};
use crate::kernel::Cube;
use crate::store::{SeenStore, StoreMode};
use crate::{Error, Result};

pub use state::{cell_order, Conflict, Mark, SearchState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Symbol tables in signature order, each row-major.
    #[default]
    RowMajor,
    /// Cells by largest argument, then as in row-major.
    Concentric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CanonMode {
    /// Canonical labeling of the cube's colored graph.
    #[default]
    Graph,
    /// Least encoding over all domain permutations (small orders only).
    Perm,
    /// No isomorphism pruning: every model the search reaches is emitted.
    Off,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub strategy: Strategy,
    pub lnh: bool,
    pub propagation: bool,
    pub canon: CanonMode,
    pub max_models: Option<u64>,
    pub store_mode: StoreMode,
    /// Abort once the seen-key store holds more than this many bytes.
    pub store_cap: Option<u64>,
    /// Abort after this many decisions.
    pub node_cap: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            strategy: Strategy::RowMajor,
            lnh: true,
            propagation: true,
            canon: CanonMode::Graph,
            max_models: None,
            store_mode: StoreMode::Full,
            store_cap: None,
            node_cap: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Outcome {
    #[default]
    Complete,
    ModelLimit,
    StoreCap,
    NodeCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Decisions tried.
    pub nodes: u64,
    pub conflicts: u64,
    /// Cubes dropped because their key was already stored.
    pub pruned: u64,
    pub keys: u64,
    pub key_bytes: u64,
    pub models: u64,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl SearchStats {
    /// False if a cap stopped the search before the space was exhausted.
    pub fn is_complete(&self) -> bool {
        self.outcome == Outcome::Complete
    }

    pub fn aborted(&self) -> bool {
        matches!(self.outcome, Outcome::StoreCap | Outcome::NodeCap)
    }
}

struct Frame {
    cell: usize,
    order_pos: usize,
    candidates: Vec<u8>,
    next: usize,
    mark: Mark,
}

/// Grounds `theory` at order `n` and runs [`search_ground`].
pub fn search(
    theory: &Theory,
    n: usize,
    options: &SearchOptions,
    sink: &mut dyn FnMut(u64, &Cube),
) -> Result<SearchStats> {
    if n < 2 {
        return Err(Error::DomainSize(n));
    }
    let ground = ground_theory(theory, n)?;
    search_ground(Arc::new(ground), options, sink)
}

/// Enumerates the models of the ground clauses, calling `sink` with a
/// running index for each model in discovery order.
pub fn search_ground(
    ground: Arc<GroundClauseSet>,
    options: &SearchOptions,
    sink: &mut dyn FnMut(u64, &Cube),
) -> Result<SearchStats> {
    let start = Instant::now();
    let n = ground.layout().order();
    if options.canon == CanonMode::Perm && n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OracleGuard(n));
    }
    let mut store = SeenStore::new(options.store_mode).with_cap(options.store_cap);
    let mut stats = SearchStats::default();
    let mut state = SearchState::new(ground, options.strategy, options.propagation, options.lnh);

    let key = |c: &Cube| -> Vec<u8> {
        match options.canon {
            CanonMode::Graph => canonical_key(c).0.into_bytes(),
            CanonMode::Perm => brute_force_canonicalize(c)
                .expect("order checked against the oracle guard")
                .1
                .0
                .into_bytes(),
            CanonMode::Off => Vec::new(),
        }
    };

    let finish = |mut stats: SearchStats, store: &SeenStore, outcome: Outcome| {
        stats.keys = store.stats().keys;
        stats.key_bytes = store.stats().bytes;
        stats.outcome = outcome;
        stats.elapsed = start.elapsed();
        stats
    };

    if state.propagate_root().is_err() {
        return Ok(finish(stats, &store, Outcome::Complete));
    }
    if options.canon != CanonMode::Off {
        store.insert_bytes(&key(state.cube()));
    }
    let Some((order_pos, cell)) = state.next_cell_from(0) else {
        sink(0, state.cube());
        stats.models = 1;
        return Ok(finish(stats, &store, Outcome::Complete));
    };
    let mut stack = vec![Frame {
        cell,
        order_pos,
        candidates: state.candidate_values(cell),
        next: 0,
        mark: state.mark(),
    }];

    while let Some(top) = stack.last_mut() {
        state.undo_to(top.mark);
        let Some(&value) = top.candidates.get(top.next) else {
            stack.pop();
            continue;
        };
        top.next += 1;
        let (cell, order_pos) = (top.cell, top.order_pos);

        if options.node_cap.is_some_and(|cap| stats.nodes >= cap) {
            return Ok(finish(stats, &store, Outcome::NodeCap));
        }
        stats.nodes += 1;
        if state.assign_and_propagate(cell, value).is_err() {
            stats.conflicts += 1;
            continue;
        }
        if options.canon != CanonMode::Off {
            if !store.insert_bytes(&key(state.cube())) {
                stats.pruned += 1;
                continue;
            }
            if store.over_cap() {
                return Ok(finish(stats, &store, Outcome::StoreCap));
            }
        }
        match state.next_cell_from(order_pos) {
            None => {
                sink(stats.models, state.cube());
                stats.models += 1;
                if options.max_models.is_some_and(|m| stats.models >= m) {
                    return Ok(finish(stats, &store, Outcome::ModelLimit));
                }
            }
            Some((pos, next)) => {
                let candidates = state.candidate_values(next);
                let mark = state.mark();
                stack.push(Frame {
                    cell: next,
                    order_pos: pos,
                    candidates,
                    next: 0,
                    mark,
                });
            }
        }
    }
    Ok(finish(stats, &store, Outcome::Complete))
}

/// Collects all models into a vector.
pub fn collect_models(theory: &Theory, n: usize, options: &SearchOptions) -> Result<(Vec<Cube>, SearchStats)> {
    let mut models = Vec::new();
    let stats = search(theory, n, options, &mut |_, c| models.push(c.clone()))?;
    Ok((models, stats))
}

#[cfg(test)]
mod tests;
