//! Dense univariate polynomials with exact big-integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
}

/// `coeffs[i]` is the coefficient of `x^i`; no trailing zeros, so the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - a`.
    pub fn x_minus(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// `x(x-1)...(x-k+1)`; the empty product for `k = 0`.
    pub fn falling_factorial(k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, i| &acc * &Self::x_minus(i as i64))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients of `p(x + a)` by repeated synthetic division
    /// (Taylor shift).
    pub fn shift(&self, a: i64) -> Self {
        let a = BigInt::from(a);
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * &a;
                c[j] += t;
            }
        }
        Self::from_coeffs(c)
    }

    /// `p(x - 1)`.
    pub fn shift_down(&self) -> Self {
        self.shift(-1)
    }

    /// `p(x + 1)`.
    pub fn shift_up(&self) -> Self {
        self.shift(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn compare_at(&self, other: &IntPoly, x: i64) -> Ordering {
        self.eval_at(x).cmp(&other.eval_at(x))
    }

    /// Quotient `r` with `self = divisor * r`, or an error when the division
    /// is not exact over the integers.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if nd < dd {
            return Err(PolyError::NotDivisible);
        }
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Finds `(k, m)` with `self = (x)_k (x-1)^m`, if any.
    pub fn match_falling_times_power(&self) -> Option<(usize, usize)> {
        let deg = self.degree()?;
        let x1 = IntPoly::x_minus(1);
        (0..=deg).find_map(|k| {
            let m = deg - k;
            (&IntPoly::falling_factorial(k) * &x1.pow(m as u32) == *self).then_some((k, m))
        })
    }

    /// Coefficients lowest power first, e.g. `[0, -1, 1]`.
    pub fn coeff_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Human-readable factored form when the polynomial is `(x)_k (x-1)^m`.
    pub fn factored(&self) -> Option<String> {
        let (k, m) = self.match_falling_times_power()?;
        let mut parts = Vec::new();
        if k > 0 {
            parts.push(format!("(x)_{k}"));
        }
        match m {
            0 => {}
            1 => parts.push("(x-1)".into()),
            _ => parts.push(format!("(x-1)^{m}")),
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        Some(parts.join(" "))
    }

    /// Sign of the polynomial for all sufficiently large `x`.
    pub fn eventual_sign(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(c)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;

            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&IntPoly::x_minus(1) + &IntPoly::one(), IntPoly::x());
        assert_eq!(&IntPoly::x() * &IntPoly::x_minus(1), p(&[0, -1, 1]));
        let q = p(&[3, 0, -7, 2]);
        assert!((&q - &q).is_zero());
        assert_eq!((&q - &q).degree(), None);
    }

    #[test]
    fn exact_division() {
        let ff4 = IntPoly::falling_factorial(4);
        let ff2 = IntPoly::falling_factorial(2);
        assert_eq!(ff4.exact_div(&ff2).unwrap(), p(&[6, -5, 1]));
        assert_eq!(p(&[-1, 0, 1]).exact_div(&IntPoly::x_minus(1)).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 0, 1]).exact_div(&IntPoly::x_minus(1)), Err(PolyError::NotDivisible));
        assert_eq!(p(&[1, 1]).exact_div(&IntPoly::zero()), Err(PolyError::DivisionByZero));
        assert_eq!(p(&[1, 2]).exact_div(&p(&[2])), Err(PolyError::NotDivisible));
    }

    #[test]
    fn shifts() {
        assert_eq!(p(&[0, 0, 1]).shift_down(), p(&[1, -2, 1]));
        assert_eq!(p(&[7]).shift_down(), p(&[7]));
        // (x)_k shifted is (x-1)(x-2)...(x-k)
        for k in 0..7 {
            let expect = (1..=k).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::x_minus(i as i64));
            assert_eq!(IntPoly::falling_factorial(k).shift_down(), expect);
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(IntPoly::falling_factorial(0), IntPoly::one());
        assert_eq!(IntPoly::falling_factorial(2), p(&[0, -1, 1]));
        assert_eq!(IntPoly::falling_factorial(4).eval_at(4), BigInt::from(24));
    }

    #[test]
    fn evaluations() {
        let x1 = IntPoly::x_minus(1);
        assert_eq!((&x1.pow(5) - &x1).eval_at(3), BigInt::from(30));
        assert_eq!((&IntPoly::falling_factorial(4) * &x1).eval_at(4), BigInt::from(72));
        assert_eq!(IntPoly::zero().eval_at(17), BigInt::zero());
        assert_eq!(x1.pow(0), IntPoly::one());
        assert_eq!(x1.pow(2), p(&[1, -2, 1]));
        let ff4 = IntPoly::falling_factorial(4);
        let lhs = &ff4 * &IntPoly::falling_factorial(3);
        let rhs = &ff4 * &x1.pow(3);
        assert_eq!(lhs.compare_at(&rhs, 5), Ordering::Less);
        assert_eq!(lhs.eval_at(5), BigInt::from(120 * 60));
        assert_eq!(rhs.eval_at(5), BigInt::from(120 * 64));
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let q = IntPoly::x_minus(1).pow(200);
        assert_eq!(q.eval_at(3), BigInt::from(2).pow(200));
        assert!(q.coeffs().iter().any(|c| c.bits() > 64));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, -1, 1]).to_string(), "x^2 - x");
        assert_eq!(p(&[-6, 11, -6, 1]).to_string(), "x^3 - 6x^2 + 11x - 6");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1, 1]).coeff_list(), "[0, -1, 1]");
        let f = &IntPoly::falling_factorial(4) * &IntPoly::x_minus(1).pow(2);
        assert_eq!(f.match_falling_times_power(), Some((4, 2)));
        assert_eq!(f.factored().as_deref(), Some("(x)_4 (x-1)^2"));
        assert_eq!(p(&[1, 0, 1]).factored(), None);
    }

    #[test]
    fn factor_inequalities_over_range() {
        for k in 4..=12i64 {
            for x in k..=k + 32 {
                assert!(x * (x - 2) < (x - 1) * (x - 1));
                let kk = k as usize;
                let ffk = IntPoly::falling_factorial(kk);
                let lhs = &ffk * &IntPoly::falling_factorial(kk - 1);
                let rhs = &ffk * &IntPoly::x_minus(1).pow(k as u32 - 1);
                assert_eq!(lhs.compare_at(&rhs, x), Ordering::Less, "k={k} x={x}");
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-50i64..50, 0..7).prop_map(|c| IntPoly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a * &b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
                prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a.clone());
            }
        }

        #[test]
        fn shift_inverse_and_eval(a in arb_poly(), b in arb_poly(), x in -30i64..30) {
            prop_assert_eq!(a.shift_up().shift_down(), a.clone());
            prop_assert_eq!(a.shift_down().eval_at(x), a.eval_at(x - 1));
            prop_assert_eq!((&a * &b).eval_at(x), a.eval_at(x) * b.eval_at(x));
        }

        #[test]
        fn falling_factorial_at_integers(k in 0usize..12, x in 0i64..12) {
            let v = IntPoly::falling_factorial(k).eval_at(x);
            if (x as usize) < k {
                prop_assert!(v.is_zero());
            }
            if x as usize == k {
                let fact: BigInt = (1..=k as i64).map(BigInt::from).product();
                prop_assert_eq!(v, fact);
            }
        }
    }
}
