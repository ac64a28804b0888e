use std::path::PathBuf;

use clap::ValueEnum;

use crate::failure::{usage, Failure};

/// Smallest accepted resource ceiling.
pub const MIN_CEILING: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub workers: usize,
    pub ceiling: u64,
}

impl Config {
    pub fn new(cache_dir: Option<PathBuf>, workers: Option<usize>, ceiling: u64) -> Result<Self, Failure> {
        let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if workers == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        if ceiling < MIN_CEILING {
            return Err(usage(format!("--ceiling must be at least {MIN_CEILING}")));
        }
        Ok(Self {
            cache_dir,
            workers,
            ceiling,
        })
    }

    pub fn pool(&self) -> anyhow::Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.workers).build()?)
    }
}
