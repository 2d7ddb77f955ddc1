//! Trial-indexed fold/reduce over `0..trials`, run on rayon when the
//! `parallel` feature is enabled and sequentially otherwise.
//!
//! Every trial draws from its own ChaCha stream keyed by
//! `(seed, trial index)`, so results do not depend on how trials are split
//! across workers as long as the reduction is order-insensitive.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon global pool; sequential without the `parallel` feature.
    #[default]
    Parallel,
}

impl Execution {
    pub fn fold_trials<T, ID, F, R>(self, trials: u64, identity: ID, fold: F, reduce: R) -> T
    where
        T: Send,
        ID: Fn() -> T + Sync + Send,
        F: Fn(T, u64) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..trials)
                    .into_par_iter()
                    .fold(&identity, &fold)
                    .reduce(&identity, &reduce)
            }
            _ => {
                let _ = &reduce;
                (0..trials).fold(identity(), fold)
            }
        }
    }

    /// Maps each index and collects results in index order.
    pub fn map_collect<T, F>(self, count: usize, map: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..count).into_par_iter().map(map).collect()
            }
            _ => (0..count).map(map).collect(),
        }
    }
}

/// Runs `f` on a dedicated pool of `jobs` threads.
#[cfg(feature = "parallel")]
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_jobs<R: Send>(_jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    f()
}

/// Independent stream `stream` of the generator seeded by `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
