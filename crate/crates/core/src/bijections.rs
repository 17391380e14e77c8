//! Maps between pattern classes of permutations and Dyck paths.
//!
//! Each checked map verifies its pattern precondition with the linear
//! recognizers of [`Pattern`] and reports the violated class; the
//! `*_unchecked` variants skip that test for enumeration loops that already
//! know their input class.

use std::collections::BTreeSet;

use crate::dyck::{DyckPath, Step, ValleySet};
use crate::permutations::{reconstruct_231, Pattern, Permutation};
use crate::{Error, Result};

/// Φ: sends `σ ∈ S_n(231)` to the path with `Set_X = Des(σ)` and
/// `Set_Y = iDes(σ)`.
pub fn phi(sigma: &Permutation) -> Result<DyckPath> {
    Pattern::P231.require_avoided_by(sigma)?;
    phi_unchecked(sigma)
}

pub fn phi_unchecked(sigma: &Permutation) -> Result<DyckPath> {
    let v = ValleySet::from_sets(sigma.len(), &sigma.descents(), &sigma.inverse_descents())
        .map_err(|e| Error::Internal(format!("descent data of {sigma} is not a valley set: {e}")))?;
    Ok(DyckPath::from_valleys(&v))
}

pub fn phi_inv(d: &DyckPath) -> Permutation {
    let v = d.valleys();
    reconstruct_231(d.semilength(), &v.x_set(), &v.y_set())
        .expect("valley sets of a Dyck path are descent data of a 231-avoider")
}

/// Ψ on `S_n(231)`: the 231-avoider with `Des = [n-1] \ iDes(σ)` and
/// `iDes = [n-1] \ Des(σ)`.
pub fn psi_perm(sigma: &Permutation) -> Result<Permutation> {
    Pattern::P231.require_avoided_by(sigma)?;
    let n = sigma.len();
    let complement = |s: BTreeSet<usize>| -> BTreeSet<usize> { (1..n).filter(|i| !s.contains(i)).collect() };
    reconstruct_231(n, &complement(sigma.inverse_descents()), &complement(sigma.descents()))
}

/// ψ = reflect ∘ Ψ on Dyck paths.
pub fn psi_small(d: &DyckPath) -> DyckPath {
    d.psi_complement().reflect()
}

pub fn heights(sigma: &Permutation) -> Vec<usize> {
    sigma.heights()
}

/// The height criterion for 132-avoidance: `h_{i+1} ≥ h_i - 1` for all `i`.
pub fn heights_avoid_132(h: &[usize]) -> bool {
    h.windows(2).all(|w| w[1] + 1 >= w[0])
}

/// Krattenthaler's κ on `S_n(132)`: reading `σ` left to right, climb with
/// north steps as needed and then take an east step from height `h_i + 1`
/// down to `h_i`.
pub fn kappa(sigma: &Permutation) -> Result<DyckPath> {
    let h = sigma.heights();
    if !heights_avoid_132(&h) {
        return Err(Error::NotAvoiding(Pattern::P132));
    }
    debug_assert!(Pattern::P132.is_avoided_by(sigma));
    let mut steps = Vec::with_capacity(2 * sigma.len());
    let mut height = 0;
    for &hi in &h {
        while height < hi + 1 {
            steps.push(Step::North);
            height += 1;
        }
        if height != hi + 1 {
            return Err(Error::Internal(format!(
                "κ({sigma}) would step east from height {height}"
            )));
        }
        steps.push(Step::East);
        height -= 1;
    }
    DyckPath::from_steps(steps).map_err(|e| Error::Internal(format!("κ({sigma}): {e}")))
}

/// `ψ ∘ Φ ∘ ρ`, which agrees with [`kappa`] on `S_n(132)`.
pub fn kappa_factored(sigma: &Permutation) -> Result<DyckPath> {
    Pattern::P132.require_avoided_by(sigma)?;
    Ok(psi_small(&phi_unchecked(&sigma.reverse())?))
}

/// β = Ψ ∘ Φ ∘ i, defined on `S_n(312)` so that the inverse is 231-avoiding.
pub fn beta(sigma: &Permutation) -> Result<DyckPath> {
    Pattern::P312.require_avoided_by(sigma)?;
    Ok(phi_unchecked(&sigma.inverse())?.psi_complement())
}

/// `ρ ∘ i ∘ Ψ ∘ ρ : S_n(132) → S_n(213)`, taking `(des, maj, imaj)` to
/// `(n-1-des, C(n,2)-maj, C(n,2)-imaj)`.
pub fn trio_132_213(sigma: &Permutation) -> Result<Permutation> {
    Pattern::P132.require_avoided_by(sigma)?;
    Ok(psi_perm(&sigma.reverse())?.inverse().reverse())
}
