use std::ops::{Add, Mul, Sub};

use super::multipoly::MultiPoly;

/// Power series in `z` with polynomial coefficients, truncated after `z^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coefficients: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::monomial(order, 0, MultiPoly::one())
    }

    /// `c · z^k`, or zero if `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, c: MultiPoly) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coefficients[k] = c;
        }
        s
    }

    /// `1 / (1 + x z) = Σ_m (-x)^m z^m`.
    pub fn inverse_of_one_plus(x: &MultiPoly, order: usize) -> Self {
        let minus_x = &MultiPoly::zero() - x;
        let mut coefficients = Vec::with_capacity(order + 1);
        let mut power = MultiPoly::one();
        for _ in 0..=order {
            coefficients.push(power.clone());
            power = &power * &minus_x;
        }
        TruncatedSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &MultiPoly {
        &self.coefficients[k]
    }

    pub fn coefficients(&self) -> &[MultiPoly] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<MultiPoly> {
        self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(MultiPoly::is_zero)
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `z^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        for (i, c) in self.coefficients.iter().enumerate() {
            if i + k <= order {
                out.coefficients[i + k] = c.clone();
            }
        }
        out
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coefficients: (0..=order)
                .map(|k| f(&self.coefficients[k], &rhs.coefficients[k]))
                .collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Truncated product; the result has the smaller of the two orders.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=order {
            if self.coefficients[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                let prod = &self.coefficients[i] * &rhs.coefficients[j];
                out.coefficients[i + j] = &out.coefficients[i + j] + &prod;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_inverse_cancels() {
        let order = 6;
        let x = poly("q^2 + t");
        let one_plus_xz = &TruncatedSeries::one(order) + &TruncatedSeries::monomial(order, 1, x.clone());
        let prod = &one_plus_xz * &TruncatedSeries::inverse_of_one_plus(&x, order);
        assert_eq!(prod, TruncatedSeries::one(order));
    }

    #[test]
    fn truncation_and_shift() {
        let s = TruncatedSeries::inverse_of_one_plus(&poly("q"), 3);
        assert_eq!(s.coefficient(3), &poly("-q^3"));
        let shifted = s.shift(2);
        assert_eq!(shifted.coefficient(2), &MultiPoly::one());
        assert_eq!(shifted.coefficient(3), &poly("-q"));
        assert!(TruncatedSeries::monomial(2, 5, poly("q")).is_zero());
        let mixed = &TruncatedSeries::one(4) * &TruncatedSeries::one(2);
        assert_eq!(mixed.order(), 2);
        assert_eq!(MultiPoly::from(3), poly("3"));
    }
}
