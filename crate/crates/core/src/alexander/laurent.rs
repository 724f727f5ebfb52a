use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An integer Laurent polynomial in `t`, stored sparsely with no zero
/// coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `coeff * t^exp`.
    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// Builds `sum coeffs[k] * t^(min_exp + k)`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(min_exp: i64, coeffs: &[C]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(min_exp + k as i64, c.clone().into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Value at `t = -1`; well defined for negative exponents too.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(e, c)| if e.is_even() { c.clone() } else { -c })
            .sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder.
    pub fn div_exact(&self, divisor: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        let (d_min, d_max) = (divisor.min_exp()?, divisor.max_exp()?);
        let Some(s_min) = self.min_exp() else {
            return Some(Self::zero());
        };
        let lead = divisor.coeff(d_max);
        let q_min = s_min - d_min;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(r_max) = rem.max_exp() {
            let e = r_max - d_max;
            if e < q_min {
                return None;
            }
            let (c, r) = rem.coeff(r_max).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in divisor.terms() {
                rem.add_term(de + e, -(&c * dc));
            }
            quotient.add_term(e, c);
        }
        Some(quotient)
    }

    /// True when the lowest exponent is 0 and the value at `t = 1` is `+1`.
    pub fn is_canonical(&self) -> bool {
        self.min_exp() == Some(0) && self.eval_at_one().is_one()
    }

    /// The representative of `±t^k · self` with lowest exponent 0 and a
    /// positive value at `t = 1` (a positive lowest coefficient if that
    /// value is zero).
    pub fn canonicalize(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        let at_one = shifted.eval_at_one();
        let negate = if at_one.is_zero() {
            shifted.coeff(0).is_negative()
        } else {
            at_one.is_negative()
        };
        if negate {
            -shifted
        } else {
            shifted
        }
    }

    /// True when the coefficients read the same from either end.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => self
                .coeffs
                .iter()
                .all(|(&e, c)| self.coeff(lo + hi - e) == *c),
            _ => true,
        }
    }

    /// Dense coefficients from the lowest to the highest exponent.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coeff(e)).collect(),
            _ => Vec::new(),
        }
    }

    /// Ascending coefficient list from exponent 0, e.g. `1,-1,1` for
    /// `t^2 - t + 1`. Returns `None` when a negative exponent is present.
    pub fn to_coeff_string(&self) -> Option<String> {
        if self.is_zero() {
            return Some("0".into());
        }
        if self.min_exp()? < 0 {
            return None;
        }
        let hi = self.max_exp()?;
        let parts: Vec<String> = (0..=hi).map(|e| self.coeff(e).to_string()).collect();
        Some(parts.join(","))
    }

    /// Inverse of [`LaurentPolynomial::to_coeff_string`].
    pub fn parse_coeff_string(text: &str) -> Result<Self, String> {
        let coeffs = text
            .split(',')
            .map(|part| {
                let digits = part.strip_prefix('-').unwrap_or(part);
                let canonical = !digits.is_empty()
                    && digits.bytes().all(|b| b.is_ascii_digit())
                    && (digits == "0" || !digits.starts_with('0'))
                    && part != "-0";
                if canonical {
                    part.parse::<BigInt>().map_err(|e| e.to_string())
                } else {
                    Err(format!("bad coefficient {part:?}"))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            return Err("trailing zero coefficient".into());
        }
        Ok(Self::from_coeffs(0, &coeffs))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(min: i64, c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(min, c)
    }

    #[test]
    fn arithmetic() {
        let trefoil = p(0, &[1, -1, 1]);
        assert_eq!(&trefoil * &trefoil, p(0, &[1, -2, 3, -2, 1]));
        assert_eq!(&trefoil - &trefoil, LaurentPolynomial::zero());
        assert_eq!(&p(-1, &[1]) * &p(1, &[1]), LaurentPolynomial::one());
        assert_eq!(trefoil.to_string(), "t^2 - t + 1");
        assert_eq!(p(-2, &[-3, 0, 1]).to_string(), "1 - 3t^-2");
    }

    #[test]
    fn exact_division() {
        let one_minus_t = p(0, &[1, -1]);
        let prod = &p(0, &[1, -1, 1]) * &one_minus_t.pow(4);
        assert_eq!(prod.div_exact(&one_minus_t.pow(4)), Some(p(0, &[1, -1, 1])));
        assert_eq!(p(0, &[1, 1]).div_exact(&one_minus_t), None);
        assert_eq!(p(0, &[2]).div_exact(&p(0, &[3])), None);
        assert_eq!(
            p(-3, &[1, 0, -1]).div_exact(&p(-1, &[1, 1])),
            Some(p(-2, &[1, -1]))
        );
        assert_eq!(
            LaurentPolynomial::zero().div_exact(&one_minus_t),
            Some(LaurentPolynomial::zero())
        );
    }

    #[test]
    fn canonical_form() {
        let q = p(-3, &[-1, 1, -1]).canonicalize();
        assert_eq!(q, p(0, &[1, -1, 1]));
        assert!(q.is_canonical());
        assert!(q.is_palindromic());
        assert_eq!(q.eval_at_minus_one(), BigInt::from(3));
        assert!(!p(0, &[1, 2]).is_palindromic());
    }

    #[test]
    fn coeff_strings() {
        assert_eq!(LaurentPolynomial::one().to_coeff_string().unwrap(), "1");
        assert_eq!(p(0, &[1, -1, 1]).to_coeff_string().unwrap(), "1,-1,1");
        assert_eq!(p(1, &[1]).to_coeff_string().unwrap(), "0,1");
        assert_eq!(p(-1, &[1]).to_coeff_string(), None);
        assert_eq!(
            LaurentPolynomial::parse_coeff_string("1,-1,1").unwrap(),
            p(0, &[1, -1, 1])
        );
        for bad in ["", "1,", "1,-0", "01", "1,0", "+1", "1, 2"] {
            assert!(LaurentPolynomial::parse_coeff_string(bad).is_err(), "{bad}");
        }
    }

    fn poly() -> impl Strategy<Value = LaurentPolynomial> {
        (-4i64..4, prop::collection::vec(-5i64..5, 0..6)).prop_map(|(m, c)| p(m, &c))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in poly(), b in poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn nonnegative_coeff_strings_round_trip(c in prop::collection::vec(-9i64..9, 1..8)) {
            let q = p(0, &c);
            prop_assume!(q.min_exp() == Some(0));
            let text = q.to_coeff_string().unwrap();
            prop_assert_eq!(LaurentPolynomial::parse_coeff_string(&text).unwrap(), q);
        }
    }
}
