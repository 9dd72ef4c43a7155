//! Removing isomorphic copies from a stream of models.

use std::sync::Arc;

use crate::canon::{brute_force_canonicalize, canonical_key};
use crate::kernel::{Cube, Layout};
use crate::store::{SeenStore, StoreMode};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterMode {
    #[default]
    Graph,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FilterStats {
    pub read: u64,
    pub kept: u64,
    pub dropped: u64,
}

/// Passes the first model of each isomorphism class to `emit`, in input
/// order, together with its position in the input. All models must share
/// one layout.
pub fn filter_models<I>(input: I, mode: FilterMode, mut emit: impl FnMut(u64, &Cube)) -> Result<FilterStats>
where
    I: IntoIterator<Item = Result<Cube>>,
{
    let mut store = SeenStore::new(StoreMode::Full);
    let mut stats = FilterStats::default();
    let mut layout: Option<Arc<Layout>> = None;
    for model in input {
        let model = model?;
        match &layout {
            None => layout = Some(model.layout().clone()),
            Some(l) if l != model.layout() => {
                return Err(Error::SignatureMismatch(format!(
                    "model {} differs in signature or order from the first",
                    stats.read + 1
                )))
            }
            Some(_) => {}
        }
        let key = match mode {
            FilterMode::Graph => canonical_key(&model),
            FilterMode::BruteForce => brute_force_canonicalize(&model)?.1,
        };
        let index = stats.read;
        stats.read += 1;
        if store.insert_if_new(&key) {
            stats.kept += 1;
            emit(index, &model);
        } else {
            stats.dropped += 1;
        }
    }
    Ok(stats)
}
