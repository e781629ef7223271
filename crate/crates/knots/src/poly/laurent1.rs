//! One-variable Laurent polynomials with exact integer coefficients.
//! Exponents are stored in half units (exponent e means x^(e/2)) so that
//! link Jones polynomials and the z/t substitutions stay exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Laurent1 {
    /// half-exponent -> coefficient, no zero entries.
    terms: BTreeMap<i64, BigInt>,
}

impl serde::Serialize for Laurent1 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Laurent1 {
    pub fn zero() -> Self {
        Laurent1::default()
    }

    pub fn one() -> Self {
        Laurent1::monomial_half(0, BigInt::one())
    }

    /// coef * x^(half/2)
    pub fn monomial_half(half: i64, coef: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(half, coef);
        }
        Laurent1 { terms }
    }

    /// coef * x^e with integer exponent e.
    pub fn monomial(e: i64, coef: i64) -> Self {
        Laurent1::monomial_half(2 * e, BigInt::from(coef))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms_half(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term_half(&mut self, half: i64, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(half).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&half);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms_half() {
            out.add_term_half(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent1 { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent1::zero();
        for (e1, c1) in self.terms_half() {
            for (e2, c2) in other.terms_half() {
                out.add_term_half(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Multiply by coef * x^(half/2).
    pub fn mul_monomial_half(&self, half: i64, coef: &BigInt) -> Self {
        if coef.is_zero() {
            return Laurent1::zero();
        }
        Laurent1 { terms: self.terms.iter().map(|(&e, c)| (e + half, c * coef)).collect() }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Laurent1::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Lowest exponent in half units.
    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Degree data as exact rationals (exponents in whole variable units).
    pub fn min_deg(&self) -> Option<BigRational> {
        self.min_half().map(|h| BigRational::new(BigInt::from(h), BigInt::from(2)))
    }

    pub fn max_deg(&self) -> Option<BigRational> {
        self.max_half().map(|h| BigRational::new(BigInt::from(h), BigInt::from(2)))
    }

    pub fn span(&self) -> Option<BigRational> {
        Some(self.max_deg()? - self.min_deg()?)
    }

    /// Coefficient of the lowest-degree term.
    pub fn min_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    pub fn max_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn coeff_half(&self, half: i64) -> BigInt {
        self.terms.get(&half).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of x^e (integer exponent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeff_half(2 * e)
    }

    /// All exponents are integers (even in half units).
    pub fn integral_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Evaluate at a rational point (requires integral exponents).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        assert!(self.integral_exponents());
        let mut acc = BigRational::zero();
        for (h, c) in self.terms_half() {
            let e = h / 2;
            let p = if e >= 0 {
                num_traits::pow::pow(x.clone(), e as usize)
            } else {
                num_traits::pow::pow(x.clone(), (-e) as usize).recip()
            };
            acc += BigRational::from(c.clone()) * p;
        }
        acc
    }

    /// n-th formal derivative evaluated at 1:
    /// sum of c_e * e (e-1) ... (e-n+1), exact.
    pub fn derivative_at_one(&self, n: u32) -> BigRational {
        let mut acc = BigRational::zero();
        for (h, c) in self.terms_half() {
            let e = BigRational::new(BigInt::from(h), BigInt::from(2));
            let mut f = BigRational::from(BigInt::one());
            for k in 0..n {
                f *= e.clone() - BigRational::from(BigInt::from(k));
            }
            acc += BigRational::from(c.clone()) * f;
        }
        acc
    }

    /// Substitute x -> x^-1.
    pub fn conjugate(&self) -> Self {
        Laurent1 { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// All coefficients non-negative.
    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Leading (highest-degree) coefficient is +/-1.
    pub fn is_monic(&self) -> bool {
        self.max_coeff().map(|c| c.abs().is_one()).unwrap_or(false)
    }

    /// Exact division (panics if the division is not exact).
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Laurent1::zero();
        let (dh, dc) = {
            let h = d.max_half().unwrap();
            (h, d.terms[&h].clone())
        };
        while !rem.is_zero() {
            let rh = rem.max_half().unwrap();
            let rc = rem.terms[&rh].clone();
            let q = &rc / &dc;
            assert!((&q * &dc) == rc, "non-exact polynomial division");
            let qh = rh - dh;
            quot.add_term_half(qh, &q);
            rem = rem.sub(&d.mul_monomial_half(qh, &q));
        }
        quot
    }

    /// Serialize as a sorted term list, e.g. "-1*t^4 + 1*t^3 + 1*t".
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (h, c) in self.terms_half() {
            let e = if h % 2 == 0 {
                match h / 2 {
                    0 => String::new(),
                    1 => format!("*{var}"),
                    k => format!("*{var}^{k}"),
                }
            } else {
                format!("*{var}^({h}/2)")
            };
            parts.push(format!("{c}{e}"));
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("t"))
    }
}
