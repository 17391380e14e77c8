use crate::dyck::enumerate_dyck_within;
use crate::permutations::{enumerate_avoiders_within, Pattern};
use crate::{binom2, check_ceiling, Error, Result, DEFAULT_MAX_N};

use super::multipoly::{Monomial, MultiPoly};
use super::series::TruncatedSeries;

/// `[k]_q = 1 + q + … + q^{k-1}`.
pub fn q_integer(k: usize) -> MultiPoly {
    MultiPoly::from_monomials((0..k as u32).map(|e| Monomial::qt(e, 0)))
}

/// Gaussian binomial `[k choose l]_q` from the recurrence
/// `[k, l] = [k-1, l-1] + q^l [k-1, l]`.
pub fn q_binomial(k: usize, l: usize) -> Result<MultiPoly> {
    if l > k {
        return Err(Error::BinomialRange { k, l });
    }
    // row[j] = [m choose j]_q for the current m
    let mut row = vec![MultiPoly::one()];
    for m in 1..=k {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j > 0 { row[j - 1].clone() } else { MultiPoly::zero() };
            let right = match row.get(j) {
                Some(p) => p * &MultiPoly::term(Monomial::qt(j as u32, 0), 1),
                None => MultiPoly::zero(),
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(l))
}

/// `A_n(q,t) = Σ_{σ ∈ S_n(231)} q^{maj σ} t^{C(n,2) - imaj σ}`, with `A_0 = 1`.
pub fn a_poly(n: usize) -> Result<MultiPoly> {
    a_poly_within(n, DEFAULT_MAX_N)
}

pub fn a_poly_within(n: usize, max_n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let c = binom2(n);
    let avoiders = enumerate_avoiders_within(n, &Pattern::P231.as_permutation(), max_n)?;
    Ok(MultiPoly::from_monomials(
        avoiders.map(|s| Monomial::qt(s.maj() as u32, (c - s.imaj()) as u32)),
    ))
}

/// `A_n(q,t)` computed on Dyck paths as `Σ_D q^{maj₁ D} t^{C(n,2) - maj₀ D}`.
pub fn a_poly_via_paths(n: usize) -> Result<MultiPoly> {
    a_poly_via_paths_within(n, DEFAULT_MAX_N)
}

pub fn a_poly_via_paths_within(n: usize, max_n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let c = binom2(n);
    Ok(MultiPoly::from_monomials(enumerate_dyck_within(n, max_n)?.map(|d| {
        let s = d.stats();
        Monomial::qt(s.maj1 as u32, (c - s.maj0) as u32)
    })))
}

/// `Cat_n(q,t) = Σ_D q^{area D} t^{bounce D}`.
pub fn cat_qt(n: usize) -> Result<MultiPoly> {
    cat_qt_within(n, DEFAULT_MAX_N)
}

pub fn cat_qt_within(n: usize, max_n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    Ok(MultiPoly::from_monomials(
        enumerate_dyck_within(n, max_n)?.map(|d| Monomial::qt(d.area() as u32, d.bounce() as u32)),
    ))
}

/// MacMahon's `q`-Catalan number as `Σ_D q^{maj D}`.
pub fn macmahon_q_catalan(n: usize) -> Result<MultiPoly> {
    macmahon_q_catalan_within(n, DEFAULT_MAX_N)
}

pub fn macmahon_q_catalan_within(n: usize, max_n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    Ok(MultiPoly::from_monomials(
        enumerate_dyck_within(n, max_n)?.map(|d| Monomial::qt(d.maj() as u32, 0)),
    ))
}

/// `[2n choose n]_q / [n+1]_q`; the division must leave no remainder.
pub fn macmahon_by_division(n: usize) -> Result<MultiPoly> {
    let (quot, rem) = q_binomial(2 * n, n)?.div_rem_q(&q_integer(n + 1))?;
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "[{} choose {n}]_q is not divisible by [{}]_q: remainder {rem}",
            2 * n,
            n + 1
        )));
    }
    Ok(quot)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `p(q,t) ↦ p(t,q)`.
    QtSwap,
    /// `p(q,t) ↦ q^{C(n,2)} p(q, q^{-1})`.
    TToQInverseShifted(usize),
}

pub fn specialize(p: &MultiPoly, mode: Specialization) -> Result<MultiPoly> {
    match mode {
        Specialization::QtSwap => Ok(p.swap_qt()),
        Specialization::TToQInverseShifted(n) => p.t_to_q_inverse_shifted(binom2(n) as u32),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `a^des q^maj t^imaj`.
    Plain,
    /// `a^{n-1-des} q^{C(n,2)-maj} t^{C(n,2)-imaj}`.
    Complemented,
}

/// Trivariate generating function of `(des, maj, imaj)` over `S_n(pattern)`.
pub fn tristat_gf(n: usize, pattern: Pattern, orientation: Orientation) -> Result<MultiPoly> {
    tristat_gf_within(n, pattern, orientation, DEFAULT_MAX_N)
}

pub fn tristat_gf_within(n: usize, pattern: Pattern, orientation: Orientation, max_n: usize) -> Result<MultiPoly> {
    let c = binom2(n);
    let perms = enumerate_avoiders_within(n, &pattern.as_permutation(), max_n)?;
    Ok(MultiPoly::from_monomials(perms.map(|s| {
        let (des, maj, imaj) = (s.des(), s.maj(), s.imaj());
        let (a, q, t) = match orientation {
            Orientation::Plain => (des, maj, imaj),
            Orientation::Complemented => (n - 1 - des, c - maj, c - imaj),
        };
        Monomial::new(a as u32, q as u32, t as u32)
    })))
}

/// Denominator of the `n`-th term in the generating-function identity for
/// `A_n(q,t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfDenominator {
    /// `(1+qz)…(1+q^{n+1}z)(1+tz)…(1+t^{n+1}z)`, as usually displayed.
    /// Leaves the residual `1 - q - t` at `z^1`.
    Printed,
    /// `(1+z)(1+qz)…(1+q^n z)(1+tz)…(1+t^n z)`. The identity holds with this
    /// form; at `q = t = 1` it reduces to `Σ Cat_n z^n / (1+z)^{2n+1} = 1`.
    Shifted,
}

/// Residuals at `z^0..=z^order` of
/// `Σ_n A_n(q,t) z^n / (1+qz)…(1+q^{n+1}z)(1+tz)…(1+t^{n+1}z) - 1`.
/// `A_0 = 1`.
pub fn verify_gf_identity(order: usize) -> Result<Vec<MultiPoly>> {
    verify_gf_identity_with(order, GfDenominator::Printed)
}

/// As [`verify_gf_identity`] with an explicit denominator convention.
pub fn verify_gf_identity_with(order: usize, denominator: GfDenominator) -> Result<Vec<MultiPoly>> {
    check_ceiling(order, DEFAULT_MAX_N)?;
    gf_residuals(order, denominator, a_poly_via_paths)
}

/// As [`verify_gf_identity_with`] with the coefficients `A_n` supplied by
/// the caller.
pub fn gf_residuals(
    order: usize,
    denominator: GfDenominator,
    mut coefficient: impl FnMut(usize) -> Result<MultiPoly>,
) -> Result<Vec<MultiPoly>> {
    let factor_pair = |series: &TruncatedSeries, i: u32| {
        let qi = MultiPoly::term(Monomial::qt(i, 0), 1);
        let ti = MultiPoly::term(Monomial::qt(0, i), 1);
        let s = series * &TruncatedSeries::inverse_of_one_plus(&qi, order);
        &s * &TruncatedSeries::inverse_of_one_plus(&ti, order)
    };
    let mut total = TruncatedSeries::zero(order);
    // inverse of the n-th denominator, extended by one factor pair per n
    let mut denominator_inverse = match denominator {
        GfDenominator::Printed => TruncatedSeries::one(order),
        GfDenominator::Shifted => TruncatedSeries::inverse_of_one_plus(&MultiPoly::one(), order),
    };
    for n in 0..=order {
        denominator_inverse = match denominator {
            GfDenominator::Printed => factor_pair(&denominator_inverse, (n + 1) as u32),
            GfDenominator::Shifted if n > 0 => factor_pair(&denominator_inverse, n as u32),
            GfDenominator::Shifted => denominator_inverse,
        };
        let a_n = coefficient(n)?;
        total = &total + &denominator_inverse.scale(&a_n).shift(n);
    }
    Ok((&total - &TruncatedSeries::one(order)).into_coefficients())
}
