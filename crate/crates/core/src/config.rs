use std::path::PathBuf;

/// Environment variable consulted for the Witt polynomial cache directory
/// when no explicit directory is configured.
pub const CACHE_ENV_VAR: &str = "WITTLAB_CACHE";

/// Default cache directory, relative to the working directory.
pub const DEFAULT_CACHE_DIR: &str = "./witt-cache";

/// Runtime configuration: cache location, size caps and the seed that fixes
/// all randomized runs.
#[derive(Debug, Clone)]
pub struct Config {
    /// Explicit cache directory; `None` means "env var, then default".
    pub cache_dir: Option<PathBuf>,
    /// Largest allowed Witt level per prime when generating universal
    /// polynomials. Degrees grow as p^n, so this is a hard guard.
    pub level_cap_p2: usize,
    pub level_cap_odd: usize,
    /// Cap on V-exponents in skew polynomial normal forms.
    pub v_exponent_cap: usize,
    /// Cap on the total number of monomial generators in a Čech complex.
    pub window_cap: usize,
    /// Seed for all randomized property runs.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cache_dir: None,
            level_cap_p2: 6,
            level_cap_odd: 4,
            v_exponent_cap: 32,
            window_cap: 1024,
            seed: 0,
        }
    }
}

impl Config {
    /// Resolve the cache directory: explicit setting, then `WITTLAB_CACHE`,
    /// then `./witt-cache`.
    pub fn resolve_cache_dir(&self) -> PathBuf {
        if let Some(dir) = &self.cache_dir {
            return dir.clone();
        }
        if let Ok(dir) = std::env::var(CACHE_ENV_VAR) {
            if !dir.is_empty() {
                return PathBuf::from(dir);
            }
        }
        PathBuf::from(DEFAULT_CACHE_DIR)
    }

    /// Level cap for a given prime.
    pub fn level_cap(&self, p: u64) -> usize {
        if p == 2 {
            self.level_cap_p2
        } else {
            self.level_cap_odd
        }
    }
}
