//! Exact integer Laurent polynomials, the value type of every polynomial
//! invariant in this crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Formal variable a polynomial is written in.
///
/// `SqrtT` exponents count powers of t^(1/2), so an exponent of 2 means t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    T,
    SqrtT,
}

impl Var {
    fn symbol(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::T => "t",
            Var::SqrtT => "sqrt_t",
        }
    }
}

/// Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored; equality is coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly {
            var,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, BigInt::one())
    }

    pub fn monomial(var: Var, exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { var, coeffs }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs.
    pub fn from_terms(var: Var, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(var);
        for &(e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    fn same_var(&self, other: &Self) -> Var {
        assert_eq!(
            self.var, other.var,
            "mixed-variable polynomial arithmetic ({:?} vs {:?})",
            self.var, other.var
        );
        self.var
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.same_var(other);
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.same_var(other);
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            out.coeffs.insert(e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let var = self.same_var(other);
        let mut out = Self::zero(var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            out.add_term(e, c * &k);
        }
        out
    }

    pub fn shift(&self, by: i64) -> Self {
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            out.coeffs.insert(e + by, c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes x -> x^-1.
    pub fn reciprocal(&self) -> Self {
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            out.coeffs.insert(-e, c.clone());
        }
        out
    }

    /// Reinterprets this polynomial in a new variable, mapping each exponent
    /// k to k * num / den. Returns None if any exponent fails to divide.
    pub fn substitute_exponents(&self, new_var: Var, num: i64, den: i64) -> Option<Self> {
        let mut out = Self::zero(new_var);
        for (e, c) in self.terms() {
            let scaled = e.checked_mul(num)?;
            if scaled % den != 0 {
                return None;
            }
            out.coeffs.insert(scaled / den, c.clone());
        }
        Some(out)
    }

    /// Evaluates at an integer point.
    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for (e, c) in self.terms() {
            assert!(e >= 0 || x.magnitude().is_one(), "negative exponent at non-unit point");
            let p = if e >= 0 {
                x.pow(e as u32)
            } else {
                // x = ±1 here
                x.pow((-e) as u32)
            };
            acc += c * p;
        }
        acc
    }

    /// Exact division; None if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let var = self.same_var(divisor);
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(var));
        }
        // Shift both to ordinary polynomials.
        let ns = self.min_exp().unwrap();
        let nd = divisor.min_exp().unwrap();
        let mut rem = self.shift(-ns);
        let div = divisor.shift(-nd);
        let dd = div.max_exp().unwrap();
        let dlead = div.coeff(dd);
        let mut quo = Self::zero(var);
        while !rem.is_zero() {
            let rd = rem.max_exp().unwrap();
            if rd < dd {
                return None;
            }
            let rl = rem.coeff(rd);
            if (&rl % &dlead) != BigInt::zero() {
                return None;
            }
            let q = &rl / &dlead;
            let qe = rd - dd;
            quo.add_term(qe, q.clone());
            for (e, c) in div.terms() {
                rem.add_term(e + qe, -(c * &q));
            }
        }
        Some(quo.shift(ns - nd))
    }

    /// Whether the coefficient sequence is symmetric under x -> x^-1.
    pub fn is_palindromic(&self) -> bool {
        *self == self.reciprocal()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sym = self.var.symbol();
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if e == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&format!("{}^{}", sym, e));
            }
        }
        out
    }

    /// Parses the `render` format back, e.g. `2*t^-1 - 5 + 2*t^1`.
    pub fn parse(var: Var, text: &str) -> Result<Self, String> {
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero(var));
        }
        let mut p = Self::zero(var);
        // Tokenize into signed terms.
        let normalized = text.replace(" - ", " + -");
        for raw in normalized.split(" + ") {
            let raw = raw.trim();
            if raw.is_empty() {
                return Err(format!("empty term in polynomial '{text}'"));
            }
            let (sign, body) = match raw.strip_prefix('-') {
                Some(b) => (-1i64, b.trim()),
                None => (1i64, raw),
            };
            let sym = var.symbol();
            let (coeff_str, exp) = if let Some(idx) = body.find(sym) {
                let coeff_part = body[..idx].trim().trim_end_matches('*').trim();
                let exp_part = body[idx + sym.len()..]
                    .trim()
                    .strip_prefix('^')
                    .ok_or_else(|| format!("missing exponent in term '{raw}'"))?;
                let exp: i64 = exp_part
                    .parse()
                    .map_err(|_| format!("bad exponent in term '{raw}'"))?;
                (coeff_part, exp)
            } else {
                (body, 0)
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str
                    .parse()
                    .map_err(|_| format!("bad coefficient in term '{raw}'"))?
            };
            p.add_term(exp, coeff * sign);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::T, terms)
    }

    #[test]
    fn arithmetic_basics() {
        let a = t(&[(-1, 2), (0, -5), (1, 2)]);
        let b = t(&[(0, 1), (1, 1)]);
        assert_eq!(a.add(&b), t(&[(-1, 2), (0, -4), (1, 3)]));
        assert_eq!(a.sub(&a), LaurentPoly::zero(Var::T));
        assert_eq!(
            a.mul(&b),
            t(&[(-1, 2), (0, -3), (1, -3), (2, 2)])
        );
    }

    #[test]
    fn exact_division() {
        // (t^36 - 1) / (t^4 - 1) = sum of t^{4k}, k=0..8
        let num = t(&[(36, 1), (0, -1)]);
        let den = t(&[(4, 1), (0, -1)]);
        let q = num.div_exact(&den).unwrap();
        let expect = t(&(0..9).map(|k| (4 * k, 1)).collect::<Vec<_>>());
        assert_eq!(q, expect);
        // inexact
        assert!(t(&[(1, 1), (0, 1)]).div_exact(&t(&[(1, 1), (0, -1)])).is_none());
    }

    #[test]
    fn eval_and_palindrome() {
        let d = t(&[(-1, 2), (0, -5), (1, 2)]);
        assert_eq!(d.eval_int(-1), BigInt::from(-9));
        assert_eq!(d.eval_int(1), BigInt::from(-1));
        assert!(d.is_palindromic());
        assert!(!t(&[(0, 1), (1, 1)]).is_palindromic());
    }

    #[test]
    fn render_round_trip() {
        let d = t(&[(-1, 2), (0, -5), (1, 2)]);
        assert_eq!(d.render(), "2*t^-1 - 5 + 2*t^1");
        assert_eq!(LaurentPoly::parse(Var::T, &d.render()).unwrap(), d);
        let j = t(&[(1, 1), (3, 1), (4, -1)]);
        assert_eq!(j.render(), "t^1 + t^3 - t^4");
        assert_eq!(LaurentPoly::parse(Var::T, &j.render()).unwrap(), j);
        assert_eq!(LaurentPoly::parse(Var::T, "0").unwrap(), LaurentPoly::zero(Var::T));
        assert_eq!(LaurentPoly::parse(Var::T, "1").unwrap(), LaurentPoly::one(Var::T));
        let neg = t(&[(0, -3), (2, 1)]);
        assert_eq!(neg.render(), "-3 + t^2");
        assert_eq!(LaurentPoly::parse(Var::T, &neg.render()).unwrap(), neg);
    }

    #[test]
    fn exponent_substitution() {
        // A^-4 = t: bracket exponent -4k maps to t^k
        let p = LaurentPoly::from_terms(Var::A, &[(-4, 1), (-12, 1), (-16, -1)]);
        let q = p.substitute_exponents(Var::T, -1, 4).unwrap();
        assert_eq!(q, t(&[(1, 1), (3, 1), (4, -1)]));
        assert!(LaurentPoly::from_terms(Var::A, &[(-3, 1)])
            .substitute_exponents(Var::T, -1, 4)
            .is_none());
    }
}
