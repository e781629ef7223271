//! Two-variable (l, m) Laurent polynomials with exact integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Laurent2 {
    /// (l-exponent, m-exponent) -> coefficient, no zero entries.
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl serde::Serialize for Laurent2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Laurent2 {
    pub fn zero() -> Self {
        Laurent2::default()
    }

    pub fn one() -> Self {
        Laurent2::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(l: i64, m: i64, coef: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert((l, m), coef);
        }
        Laurent2 { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, l: i64, m: i64, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry((l, m)).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&(l, m));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, m), c) in other.terms() {
            out.add_term(l, m, c);
        }
        out
    }

    pub fn mul_monomial(&self, l: i64, m: i64, coef: &BigInt) -> Self {
        if coef.is_zero() {
            return Laurent2::zero();
        }
        Laurent2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + l, b + m), c * coef))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent2::zero();
        for ((l1, m1), c1) in self.terms() {
            for ((l2, m2), c2) in other.terms() {
                out.add_term(l1 + l2, m1 + m2, &(c1 * c2));
            }
        }
        out
    }

    pub fn coeff(&self, l: i64, m: i64) -> BigInt {
        self.terms.get(&(l, m)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_deg_l(&self) -> Option<i64> {
        self.terms.keys().map(|&(l, _)| l).min()
    }

    pub fn max_deg_l(&self) -> Option<i64> {
        self.terms.keys().map(|&(l, _)| l).max()
    }

    pub fn min_deg_m(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, m)| m).min()
    }

    pub fn max_deg_m(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, m)| m).max()
    }

    /// Serialize sorted by (m, l): "coef*l^a*m^b + ...".
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<(i64, i64)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(l, m)| (m, l));
        let mut parts = Vec::new();
        for (l, m) in keys {
            let c = &self.terms[&(l, m)];
            let lp = match l {
                0 => String::new(),
                1 => "*l".into(),
                k => format!("*l^{k}"),
            };
            let mp = match m {
                0 => String::new(),
                1 => "*m".into(),
                k => format!("*m^{k}"),
            };
            parts.push(format!("{c}{lp}{mp}"));
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}
