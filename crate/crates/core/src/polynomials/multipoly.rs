use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::{Error, Result};

/// Exponents of `a^a q^q t^t`. Ordered lexicographically on `(a, q, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub a: u32,
    pub q: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, q: 0, t: 0 };

    pub fn new(a: u32, q: u32, t: u32) -> Self {
        Monomial { a, q, t }
    }

    pub fn qt(q: u32, t: u32) -> Self {
        Monomial { a: 0, q, t }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial {
            a: self.a + other.a,
            q: self.q + other.q,
            t: self.t + other.t,
        }
    }

    fn is_one(self) -> bool {
        self == Monomial::ONE
    }
}

/// Sparse polynomial in `a, q, t` with exact integer coefficients. Zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::term(Monomial::ONE, 1)
    }

    pub fn term(m: Monomial, coef: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, coef.into());
        p
    }

    pub fn q() -> Self {
        MultiPoly::term(Monomial::qt(1, 0), 1)
    }

    pub fn t() -> Self {
        MultiPoly::term(Monomial::qt(0, 1), 1)
    }

    pub fn a() -> Self {
        MultiPoly::term(Monomial::new(1, 0, 0), 1)
    }

    /// Sum of the given monomials, each with coefficient one.
    pub fn from_monomials(ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
        for m in ms {
            *counts.entry(m).or_default() += 1;
        }
        MultiPoly {
            terms: counts.into_iter().map(|(m, c)| (m, BigInt::from(c))).collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `a = q = t = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    pub fn swap_qt(&self) -> MultiPoly {
        self.map_monomials(|m| Monomial { a: m.a, q: m.t, t: m.q })
    }

    /// `q^shift · p(q, q^{-1})`, failing if any exponent would be negative.
    pub fn t_to_q_inverse_shifted(&self, shift: u32) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (&m, c) in &self.terms {
            let e = (m.q + shift).checked_sub(m.t).ok_or(Error::NegativeExponent)?;
            out.add_term(Monomial { a: m.a, q: e, t: 0 }, c.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn is_univariate_q(&self) -> bool {
        self.terms.keys().all(|m| m.a == 0 && m.t == 0)
    }

    fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).max()
    }

    /// Long division of polynomials in `q` alone. Returns `(quotient, remainder)`.
    pub fn div_rem_q(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        if !self.is_univariate_q() || !divisor.is_univariate_q() {
            return Err(Error::InvalidPolynomial(
                "division only supports polynomials in q".into(),
            ));
        }
        let dd = divisor
            .q_degree()
            .ok_or_else(|| Error::InvalidPolynomial("division by zero".into()))?;
        let lead = divisor.coeff(Monomial::qt(dd, 0));
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some(rd) = rem.q_degree() {
            if rd < dd {
                break;
            }
            let rc = rem.coeff(Monomial::qt(rd, 0));
            if (&rc % &lead) != BigInt::zero() {
                break;
            }
            let factor = MultiPoly::term(Monomial::qt(rd - dd, 0), &rc / &lead);
            rem = &rem - &(&factor * divisor);
            quot = &quot + &factor;
        }
        Ok((quot, rem))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let coef = match c.to_i64() {
                    Some(v) => json!(v),
                    None => json!(c.to_string()),
                };
                json!({ "a": m.a, "q": m.q, "t": m.t, "coef": coef })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<MultiPoly> {
        let bad = |what: &str| Error::InvalidPolynomial(format!("JSON polynomial: {what}"));
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut out = MultiPoly::zero();
        for term in terms {
            let exp = |k: &str| -> Result<u32> {
                term.get(k)
                    .and_then(Value::as_u64)
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad(&format!("bad exponent {k}")))
            };
            let coef = match term.get("coef") {
                Some(Value::Number(num)) => num
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("non-integer coefficient"))?,
                Some(Value::String(s)) => s.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("missing coefficient")),
            };
            out.add_term(Monomial::new(exp("a")?, exp("q")?, exp("t")?), coef);
        }
        Ok(out)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&m1, c1) in &self.terms {
            for (&m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(&m, c)| (m, -c.clone())).collect(),
        }
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::term(Monomial::ONE, BigInt::from(c))
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("a", m.a), ("q", m.q), ("t", m.t)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Terms in descending canonical order, e.g. `2*q^3*t^3 + q^2*t - 1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

/// Parses sums of terms like `2*q^3*t^3`, `q^5t`, `-qt^2`, `7`.
/// Factors may be joined by `*` or written side by side.
impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::InvalidPolynomial(format!("{msg} in {s:?}"));
        if chars.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = MultiPoly::zero();
        let mut i = 0;
        let read_number = |i: &mut usize| -> Option<String> {
            let start = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            (*i > start).then(|| chars[start..*i].iter().collect())
        };
        while i < chars.len() {
            let mut sign = BigInt::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad("expected + or -"));
            }
            let mut coef = BigInt::one();
            let mut saw_factor = false;
            if let Some(num) = read_number(&mut i) {
                coef = num.parse().map_err(|_| bad("bad coefficient"))?;
                saw_factor = true;
            }
            let mut m = Monomial::ONE;
            loop {
                if i < chars.len() && chars[i] == '*' {
                    i += 1;
                }
                let Some(&v) = chars.get(i) else { break };
                if !matches!(v, 'a' | 'q' | 't') {
                    break;
                }
                i += 1;
                let mut e = 1;
                if chars.get(i) == Some(&'^') {
                    i += 1;
                    e = read_number(&mut i)
                        .ok_or_else(|| bad("missing exponent"))?
                        .parse::<u32>()
                        .map_err(|_| bad("bad exponent"))?;
                }
                match v {
                    'a' => m.a += e,
                    'q' => m.q += e,
                    _ => m.t += e,
                }
                saw_factor = true;
            }
            if !saw_factor {
                return Err(bad("empty term"));
            }
            out.add_term(m, sign * coef);
        }
        Ok(out)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        MultiPoly::from_json(&v).map_err(D::Error::custom)
    }
}
