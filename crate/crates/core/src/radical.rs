//! Exact arithmetic on numbers of the form `sum_s q_s * sqrt(s)` with
//! rational coefficients and squarefree positive radicands.
//!
//! Square roots of distinct squarefree integers are linearly independent
//! over the rationals, so a value is zero exactly when its term map is
//! empty. That gives a symbolic zero test; nonzero signs are certified by
//! interval evaluation at escalating precision.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RadicalError {
    #[error("radicand must be positive")]
    ZeroRadicand,
}

/// Exact value `sum_s terms[s] * sqrt(s)`; keys squarefree, coefficients
/// nonzero rationals. `sqrt(1)` carries the rational part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalValue {
    terms: BTreeMap<u64, BigRational>,
}

impl RadicalValue {
    pub fn zero() -> Self {
        RadicalValue::default()
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "denominator must be nonzero");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        RadicalValue { terms }
    }

    /// A single term `q * sqrt(s)`; `s` is reduced to squarefree form.
    pub fn from_term(q: BigRational, radicand: u64) -> Result<Self, RadicalError> {
        if radicand == 0 {
            return Err(RadicalError::ZeroRadicand);
        }
        let (s, t) = squarefree_decompose(radicand);
        let coeff = q * BigRational::from_integer(BigInt::from(t));
        let mut out = RadicalValue::zero();
        out.add_term(s, coeff);
        Ok(out)
    }

    /// `1 / sqrt(p)` for `p >= 1`: with `p = s * t^2` and `s` squarefree,
    /// the result is the single term `sqrt(s) / (s * t)`.
    pub fn reciprocal_sqrt(p: u64) -> Result<Self, RadicalError> {
        if p == 0 {
            return Err(RadicalError::ZeroRadicand);
        }
        let (s, t) = squarefree_decompose(p);
        let coeff = BigRational::new(BigInt::one(), BigInt::from(s) * BigInt::from(t));
        let mut out = RadicalValue::zero();
        out.add_term(s, coeff);
        Ok(out)
    }

    fn add_term(&mut self, s: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + q;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &RadicalValue) -> RadicalValue {
        let mut out = self.clone();
        for (&s, q) in &other.terms {
            out.add_term(s, q.clone());
        }
        out
    }

    pub fn sub(&self, other: &RadicalValue) -> RadicalValue {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RadicalValue {
        RadicalValue {
            terms: self.terms.iter().map(|(&s, q)| (s, -q.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> RadicalValue {
        if factor.is_zero() {
            return RadicalValue::zero();
        }
        RadicalValue {
            terms: self
                .terms
                .iter()
                .map(|(&s, q)| (s, q.clone() * factor.clone()))
                .collect(),
        }
    }

    pub fn scale_int(&self, factor: i64) -> RadicalValue {
        self.scale(&BigRational::from_integer(BigInt::from(factor)))
    }

    /// Term-by-term product: `sqrt(a) * sqrt(b) = g * sqrt(ab / g^2)` with
    /// `g = gcd(a, b)`.
    pub fn mul(&self, other: &RadicalValue) -> RadicalValue {
        let mut out = RadicalValue::zero();
        for (&a, qa) in &self.terms {
            for (&b, qb) in &other.terms {
                let g = a.gcd(&b);
                let s = (a / g) * (b / g);
                let coeff = qa.clone() * qb.clone() * BigRational::from_integer(BigInt::from(g));
                out.add_term(s, coeff);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact sign. Zero is symbolic (empty term map); nonzero values are
    /// decided by interval evaluation at escalating precision, which must
    /// terminate because the value is provably nonzero.
    pub fn sign(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        if self.terms.len() == 1 {
            if let Some(q) = self.terms.get(&1) {
                return if q.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        let mut bits = 64;
        while bits <= 1024 {
            let (lo, hi) = self.interval(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
        unreachable!("sign of a provably nonzero radical value undecided at 1024 bits");
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Exact comparison of two values.
    pub fn cmp_value(&self, other: &RadicalValue) -> Ordering {
        self.sub(other).sign()
    }

    /// Rational interval `[lo, hi]` containing the value, with each root
    /// bracketed to `bits` fractional bits.
    fn interval(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        let denom = BigInt::one() << bits;
        for (&s, q) in &self.terms {
            if s == 1 {
                lo += q.clone();
                hi += q.clone();
                continue;
            }
            let scaled = BigInt::from(s) << (2 * bits);
            let root = scaled.sqrt();
            let r_lo = BigRational::new(root.clone(), denom.clone());
            let r_hi = BigRational::new(root + BigInt::one(), denom.clone());
            if q.is_positive() {
                lo += q.clone() * r_lo;
                hi += q.clone() * r_hi;
            } else {
                lo += q.clone() * r_hi;
                hi += q.clone() * r_lo;
            }
        }
        (lo, hi)
    }

    /// Double-precision approximation.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&s, q)| ratio_to_f64(q) * (s as f64).sqrt())
            .sum()
    }

    /// Correctly rounded decimal string with `digits` fractional digits
    /// (round half away from zero; ties can only occur for purely rational
    /// values, where rounding is exact).
    pub fn to_decimal(&self, digits: usize) -> String {
        assert!(digits >= 1, "need at least one digit");
        let pow = BigInt::from(10u32).pow(digits as u32);
        let irrational = self.terms.keys().any(|&s| s != 1);
        let scaled: BigInt = if !irrational {
            let q = self
                .terms
                .get(&1)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            round_half_away(&(q * BigRational::from_integer(pow.clone())))
        } else {
            let mut bits = 64;
            loop {
                let (lo, hi) = self.interval(bits);
                let rlo = round_half_away(&(lo * BigRational::from_integer(pow.clone())));
                let rhi = round_half_away(&(hi * BigRational::from_integer(pow.clone())));
                if rlo == rhi {
                    break rlo;
                }
                bits *= 2;
                assert!(bits <= 1 << 20, "decimal rounding did not converge");
            }
        };
        let negative = scaled.is_negative();
        let abs = scaled.abs();
        let (int_part, frac_part) = abs.div_rem(&pow);
        format!(
            "{}{}.{:0width$}",
            if negative { "-" } else { "" },
            int_part,
            frac_part,
            width = digits
        )
    }
}

impl fmt::Display for RadicalValue {
    /// Textual form `q1*sqrt(s1) + q2*sqrt(s2) + ...` with `sqrt(1)` elided
    /// and rationals printed as `a/b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&s, q) in &self.terms {
            let negative = q.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
                first = false;
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = q.abs();
            write_ratio(f, &a)?;
            if s != 1 {
                write!(f, "*sqrt({s})")?;
            }
        }
        Ok(())
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

/// `floor(x + 1/2)` for `x >= 0`, mirrored for negative `x`.
fn round_half_away(x: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let num = x.numer();
    let den = x.denom();
    if !num.is_negative() {
        (num * &two + den).div_floor(&(den * &two))
    } else {
        -((-num * &two + den).div_floor(&(den * &two)))
    }
}

/// Write `p = s * t^2` with `s` squarefree; returns `(s, t)`.
pub fn squarefree_decompose(p: u64) -> (u64, u64) {
    let mut rest = p;
    let mut s = 1u64;
    let mut t = 1u64;
    let mut d = 2u64;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            t *= d.pow(e / 2);
            if e % 2 == 1 {
                s *= d;
            }
        }
        d += 1;
    }
    s *= rest;
    (s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reciprocal_sqrt_examples() {
        // 1/sqrt(4) = 1/2
        assert_eq!(
            RadicalValue::reciprocal_sqrt(4).unwrap(),
            RadicalValue::from_ratio(1, 2)
        );
        // 1/sqrt(6) = sqrt(6)/6
        assert_eq!(
            RadicalValue::reciprocal_sqrt(6).unwrap(),
            RadicalValue::from_term(ratio(1, 6), 6).unwrap()
        );
        // 12 = 3 * 2^2, so 1/sqrt(12) = sqrt(3)/6
        assert_eq!(
            RadicalValue::reciprocal_sqrt(12).unwrap(),
            RadicalValue::from_term(ratio(1, 6), 3).unwrap()
        );
        assert_eq!(
            RadicalValue::reciprocal_sqrt(0),
            Err(RadicalError::ZeroRadicand)
        );
    }

    #[test]
    fn addition_and_scaling() {
        let a = RadicalValue::from_term(ratio(1, 6), 6).unwrap();
        let b = RadicalValue::from_term(ratio(-1, 6), 6).unwrap();
        assert!(a.add(&b).is_zero());

        let half = RadicalValue::from_ratio(1, 2);
        assert_eq!(half.scale_int(4), RadicalValue::from_integer(2));

        // -5/6 + (1/3)*sqrt(6) equals -(5 - 2*sqrt(6))/6
        let c =
            RadicalValue::from_ratio(-5, 6).add(&RadicalValue::from_term(ratio(1, 3), 6).unwrap());
        assert_eq!(c.to_decimal(12), "-0.016836752406");
    }

    #[test]
    fn sign_examples() {
        assert_eq!(RadicalValue::zero().sign(), Ordering::Equal);
        // 1 - sqrt(2) < 0
        let v =
            RadicalValue::from_integer(1).sub(&RadicalValue::from_term(ratio(1, 1), 2).unwrap());
        assert_eq!(v.sign(), Ordering::Less);
        // (2*sqrt(6) - 5)/6 < 0
        let w =
            RadicalValue::from_ratio(-5, 6).add(&RadicalValue::from_term(ratio(1, 3), 6).unwrap());
        assert_eq!(w.sign(), Ordering::Less);
        assert_eq!(w.neg().sign(), Ordering::Greater);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(RadicalValue::from_integer(2).to_decimal(3), "2.000");
        // (5 - 2*sqrt(6))/6
        let v =
            RadicalValue::from_ratio(5, 6).sub(&RadicalValue::from_term(ratio(1, 3), 6).unwrap());
        assert_eq!(v.to_decimal(6), "0.016837");
        // (6 - (2*sqrt(3) + sqrt(6)))/3
        let w = RadicalValue::from_integer(2)
            .sub(&RadicalValue::from_term(ratio(2, 3), 3).unwrap())
            .sub(&RadicalValue::from_term(ratio(1, 3), 6).unwrap());
        assert_eq!(w.to_decimal(6), "0.028803");
        assert_eq!(RadicalValue::from_ratio(-1, 8).to_decimal(2), "-0.13");
    }

    #[test]
    fn display_form() {
        assert_eq!(RadicalValue::zero().to_string(), "0");
        assert_eq!(RadicalValue::from_integer(2).to_string(), "2");
        let v =
            RadicalValue::from_ratio(-5, 6).add(&RadicalValue::from_term(ratio(1, 3), 6).unwrap());
        assert_eq!(v.to_string(), "-5/6 + 1/3*sqrt(6)");
        let w =
            RadicalValue::from_ratio(1, 2).sub(&RadicalValue::from_term(ratio(1, 1), 2).unwrap());
        assert_eq!(w.to_string(), "1/2 - 1*sqrt(2)");
    }

    #[test]
    fn squarefree_decomposition() {
        assert_eq!(squarefree_decompose(1), (1, 1));
        assert_eq!(squarefree_decompose(4), (1, 2));
        assert_eq!(squarefree_decompose(12), (3, 2));
        assert_eq!(squarefree_decompose(360), (10, 6));
        assert_eq!(squarefree_decompose(3969), (1, 63));
    }
}
