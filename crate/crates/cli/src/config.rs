use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

/// Environment variable that replaces every per-command size cap.
pub const MAX_N_ENV: &str = "HURWITZ_MAX_N";

/// Failure classes, each with its own process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A verification or theorem check did not hold.
    #[error("{0}")]
    CheckFailed(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hurwitz_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            _ => 2,
        }
    }
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub ref_seq: Option<PathBuf>,
    /// Largest `n` this command accepts.
    pub cap: usize,
}

impl RunConfig {
    /// Checks `n` against `default_cap`, or against `max_n_override` when set
    /// (the value of `HURWITZ_MAX_N`).
    pub fn new(
        n: usize,
        threads: Option<usize>,
        out: Option<PathBuf>,
        ref_seq: Option<PathBuf>,
        default_cap: usize,
        max_n_override: Option<&str>,
    ) -> Result<Self, CliError> {
        let cap = match max_n_override {
            Some(raw) => raw
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("{MAX_N_ENV}={raw:?} is not a number")))?,
            None => default_cap,
        };
        if n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        if n > cap {
            return Err(CliError::Usage(format!(
                "n = {n} exceeds the cap {cap} for this command (raise it with {MAX_N_ENV})"
            )));
        }
        if threads == Some(0) {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        Ok(Self { n, threads, out, ref_seq, cap })
    }

    /// Like [`RunConfig::new`] with the override read from the environment.
    pub fn from_env(
        n: usize,
        threads: Option<usize>,
        out: Option<PathBuf>,
        ref_seq: Option<PathBuf>,
        default_cap: usize,
    ) -> Result<Self, CliError> {
        let env = std::env::var(MAX_N_ENV).ok();
        Self::new(n, threads, out, ref_seq, default_cap, env.as_deref())
    }

    /// Installs the global rayon pool when a thread count was requested.
    pub fn install_thread_pool(&self) -> Result<(), CliError> {
        if let Some(k) = self.threads {
            rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global()
                .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
        }
        Ok(())
    }
}

/// Operator-supplied reference values, e.g. antipode counts of `H(B_n)`.
///
/// ```toml
/// name = "antipodes of e in H(B_n)"
/// provenance = "where the numbers came from"
/// [values]
/// 3 = 5
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ReferenceSequence {
    pub name: Option<String>,
    /// Mandatory: a reference file must say where its numbers came from.
    pub provenance: String,
    pub values: BTreeMap<String, u64>,
}

impl ReferenceSequence {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let seq: Self = toml::from_str(text).map_err(|e| CliError::Usage(format!("reference file: {e}")))?;
        if seq.provenance.trim().is_empty() {
            return Err(CliError::Usage("reference file: provenance must not be empty".into()));
        }
        if let Some(bad) = seq.values.keys().find(|k| k.parse::<usize>().is_err()) {
            return Err(CliError::Usage(format!("reference file: key {bad:?} is not an integer n")));
        }
        Ok(seq)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, n: usize) -> Option<u64> {
        self.values.get(&n.to_string()).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_and_override() {
        assert!(RunConfig::new(4, None, None, None, 9, None).is_ok());
        assert!(matches!(RunConfig::new(10, None, None, None, 9, None), Err(CliError::Usage(_))));
        assert_eq!(RunConfig::new(10, None, None, None, 9, Some("11")).unwrap().cap, 11);
        assert!(RunConfig::new(4, None, None, None, 9, Some("x")).is_err());
        assert!(RunConfig::new(4, Some(0), None, None, 9, None).is_err());
        assert!(RunConfig::new(0, None, None, None, 9, None).is_err());
    }

    #[test]
    fn reference_file_parsing() {
        let seq = ReferenceSequence::parse("provenance = \"hand count\"\n[values]\n2 = 1\n3 = 4\n").unwrap();
        assert_eq!(seq.get(3), Some(4));
        assert_eq!(seq.get(4), None);
        assert!(ReferenceSequence::parse("[values]\n3 = 4\n").is_err());
        assert!(ReferenceSequence::parse("provenance = \"\"\n[values]\n").is_err());
        assert!(ReferenceSequence::parse("provenance = \"x\"\n[values]\nthree = 4\n").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::CheckFailed("x".into()).exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Core(hurwitz_core::Error::CapExceeded("x".into())).exit_code(), 2);
    }
}
