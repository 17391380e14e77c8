//! Bijections between pattern-avoiding permutations and Dyck paths.
//!
//! The central map is [`bijections::phi`], which sends a 231-avoiding
//! permutation to the Dyck path whose valley x- and y-coordinates are its
//! descent set and inverse descent set. Around it sit the complement
//! involution Ψ, Krattenthaler's height bijection κ, the RSK-based involution
//! on 321-avoiders, and the polynomials built from these statistics:
//! the bistatistic polynomial `A_n(q,t)`, the area/bounce `q,t`-Catalan
//! polynomial and MacMahon's `q`-Catalan number.
//!
//! Conventions used throughout:
//!
//! * positions and values are 1-based;
//! * `n` is always counted as an **ascent** of a permutation of length `n`,
//!   so `Asc(σ)` is never empty;
//! * Dyck paths are words in `0` (north) and `1` (east).

pub mod bijections;
pub mod dyck;
mod error;
pub mod permutations;
pub mod polynomials;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};

/// Default ceiling on `n` for every exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 12;

pub(crate) fn check_ceiling(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        Err(Error::ResourceLimit { n, max_n })
    } else {
        Ok(())
    }
}

/// `n choose 2`.
pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The Catalan number `Cat_n`, via the convolution recurrence.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}
