//! Execution strategy for the data-parallel kernels.
//!
//! Every kernel that fans out work does so over an ordered list of independent
//! tasks and merges the results in task order, so the output never depends on
//! the strategy or on the number of worker threads.

/// How a kernel should schedule its independent tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Run every task on the calling thread, in order.
    Sequential,
    /// Run tasks on the current rayon pool. Without the `parallel` feature this
    /// falls back to [`Strategy::Sequential`].
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// True when tasks will actually run on more than the calling thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }

    /// Maps `f` over `tasks` and returns the results in task order.
    pub fn map<T, R, F>(self, tasks: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Strategy::Parallel {
            use rayon::prelude::*;
            return tasks.into_par_iter().map(f).collect();
        }
        tasks.into_iter().map(f).collect()
    }
}
