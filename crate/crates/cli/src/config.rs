//! Run configuration: output format, bounds with hard guards, worker pool,
//! and the shape-vector cache location.

use std::path::PathBuf;

use anyhow::{bail, Context};
use schurmatch::ShapeVectorCache;

/// Hard guard for full sweeps over all matchings of size `N`.
pub const HARD_MAX_N: usize = 16;
/// Hard guard for the Schreier graph vertex count `2n`.
pub const HARD_MAX_2N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug)]
pub struct RunConfig {
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<usize>,
    pub format: OutputFormat,
    pub seed: u64,
    pub max_n: usize,
    pub max_2n: usize,
}

/// Number of matchings on `[n]` over all `f` (involutions of `S_n`); the
/// size estimate quoted when a bound is refused.
pub fn involution_count(n: usize) -> u128 {
    let mut prev: u128 = 1; // I(0)
    let mut cur: u128 = 1; // I(1)
    if n == 0 {
        return 1;
    }
    for k in 2..=n {
        let next = cur + (k as u128 - 1) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(n-1)!!`, the number of perfect matchings on `[n]` for even `n`.
pub fn double_factorial_below(n: usize) -> u128 {
    let mut acc: u128 = 1;
    let mut k = n as u128;
    while k > 1 {
        acc *= k - 1;
        k -= 2;
    }
    acc
}

impl RunConfig {
    /// Enforces the hard guards, failing fast with a size estimate.
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.max_n > HARD_MAX_N {
            bail!(
                "refusing --max-n {}: a full sweep at N = {} touches ~{} matchings; the hard guard is N <= {HARD_MAX_N}",
                self.max_n,
                self.max_n,
                involution_count(self.max_n)
            );
        }
        if self.max_2n > HARD_MAX_2N {
            bail!(
                "refusing --max-2n {}: the Schreier graph on 2n = {} has {} vertices; the hard guard is 2n <= {HARD_MAX_2N}",
                self.max_2n,
                self.max_2n,
                double_factorial_below(self.max_2n)
            );
        }
        Ok(())
    }

    /// Rejects a per-command `n` that exceeds the configured sweep bound.
    pub fn check_n(&self, n: usize) -> anyhow::Result<()> {
        if n > self.max_n {
            bail!(
                "N = {n} exceeds the bound {} (raise with --max-n, hard guard {HARD_MAX_N}); the sweep would touch ~{} matchings",
                self.max_n,
                involution_count(n)
            );
        }
        Ok(())
    }

    pub fn check_2n(&self, n2: usize) -> anyhow::Result<()> {
        if n2 > self.max_2n {
            bail!(
                "2n = {n2} exceeds the bound {} (raise with --max-2n, hard guard {HARD_MAX_2N}); the graph would hold {} vertices",
                self.max_2n,
                double_factorial_below(n2)
            );
        }
        Ok(())
    }

    /// Opens the shape-vector cache: on disk when a directory was configured
    /// (flag or `SCHURMATCH_CACHE_DIR`), otherwise in memory.
    pub fn open_cache(&self) -> anyhow::Result<ShapeVectorCache> {
        match &self.cache_dir {
            Some(dir) => ShapeVectorCache::with_dir(dir)
                .with_context(|| format!("cannot use cache directory {}", dir.display())),
            None => Ok(ShapeVectorCache::in_memory()),
        }
    }

    /// Builds the rayon pool this run computes in. `--threads 0` or absence
    /// means automatic sizing.
    pub fn thread_pool(&self) -> anyhow::Result<rayon::ThreadPool> {
        let threads = self.threads.unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("cannot build worker pool")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        let known = [1u128, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496];
        for (n, &want) in known.iter().enumerate() {
            assert_eq!(involution_count(n), want, "I({n})");
        }
    }

    #[test]
    fn guards() {
        let mut cfg = RunConfig {
            cache_dir: None,
            threads: None,
            format: OutputFormat::Text,
            seed: 0,
            max_n: 12,
            max_2n: 12,
        };
        assert!(cfg.validate().is_ok());
        cfg.max_n = 17;
        assert!(cfg.validate().unwrap_err().to_string().contains("hard guard"));
        cfg.max_n = 12;
        cfg.max_2n = 16;
        assert!(cfg.validate().is_err());
        cfg.max_2n = 12;
        assert!(cfg.check_n(13).is_err());
        assert!(cfg.check_2n(14).is_err());
        assert!(cfg.check_n(12).is_ok());
    }
}
