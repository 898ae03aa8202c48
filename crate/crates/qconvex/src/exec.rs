use rayon::prelude::*;

/// Maps `f` over `inputs`, optionally on the rayon pool. Output order matches
/// input order in both modes, so downstream aggregation is deterministic.
pub(crate) fn map_ordered<I, O, F>(inputs: Vec<I>, parallel: bool, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Send + Sync,
{
    if parallel {
        inputs.into_par_iter().map(f).collect()
    } else {
        inputs.into_iter().map(f).collect()
    }
}
