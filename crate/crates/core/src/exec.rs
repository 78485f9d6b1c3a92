//! Execution strategy for the batch loops (sequence sweeps, oracle search,
//! pairwise scans).
//!
//! With the `parallel` feature (on by default) work items are distributed
//! over the rayon thread pool; without it everything runs on the calling
//! thread. Output order always matches input order, so results never depend
//! on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}


impl Strategy {
    pub fn map<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Like [`Strategy::map`] but stops at an error. When several items fail
    /// the reported error is the one with the smallest input position.
    pub fn try_map<I, T, E, F>(self, items: &[I], f: F) -> Result<Vec<T>, E>
    where
        I: Sync,
        T: Send,
        E: Send,
        F: Fn(&I) -> Result<T, E> + Sync + Send,
    {
        self.map(items, f).into_iter().collect()
    }

    pub fn sum<I, F>(self, items: &[I], f: F) -> u64
    where
        I: Sync,
        F: Fn(&I) -> u64 + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).sum(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).sum(),
        }
    }
}
