//! Sparse multivariate polynomials over the integers.
//!
//! These are only asked to do what universal Witt polynomial generation
//! needs: ring arithmetic, powers, substitution, exact division by an
//! integer, and evaluation. Degrees grow like p^n, so everything here is
//! deliberately simple and exact rather than asymptotically clever.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse integer polynomial in a fixed ordered list of variables.
///
/// Invariants: no stored term has a zero coefficient, and every exponent
/// vector has length equal to the variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        IntPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: BigInt) -> Self {
        let mut poly = IntPoly::zero(vars);
        if !c.is_zero() {
            poly.terms.insert(vec![0; poly.vars.len()], c);
        }
        poly
    }

    /// The monomial `var_index` with exponent 1.
    pub fn variable(vars: Vec<String>, var_index: usize) -> Self {
        assert!(var_index < vars.len(), "variable index out of range");
        let mut exps = vec![0u32; vars.len()];
        exps[var_index] = 1;
        let mut poly = IntPoly::zero(vars);
        poly.terms.insert(exps, BigInt::one());
        poly
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut poly = IntPoly::zero(vars);
        for (exps, coeff) in terms {
            poly.add_term(&exps, coeff);
        }
        poly
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn assert_same_vars(&self, other: &IntPoly) {
        assert_eq!(self.vars, other.vars, "variable lists differ");
    }

    fn add_term(&mut self, exps: &[u32], coeff: BigInt) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(exps) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(exps);
                }
            }
            None => {
                self.terms.insert(exps.to_vec(), coeff);
            }
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            out.add_term(exps, coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> IntPoly {
        let mut out = IntPoly::zero(self.vars.clone());
        for (exps, coeff) in &self.terms {
            out.terms.insert(exps.clone(), -coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        self.assert_same_vars(other);
        let mut out = IntPoly::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&exps, ca * cb);
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(self.vars.clone());
        }
        let mut out = IntPoly::zero(self.vars.clone());
        for (exps, coeff) in &self.terms {
            out.terms.insert(exps.clone(), coeff * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut out = IntPoly::constant(self.vars.clone(), BigInt::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact division by an integer. Every coefficient must be divisible;
    /// a remainder means the caller's recursion is wrong, not bad input.
    pub fn exact_div_int(&self, d: &BigInt) -> Result<IntPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = IntPoly::zero(self.vars.clone());
        for (exps, coeff) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(coeff, d);
            if !r.is_zero() {
                return Err(Error::Internal(format!(
                    "inexact division: coefficient {} not divisible by {}",
                    coeff, d
                )));
            }
            out.terms.insert(exps.clone(), q);
        }
        Ok(out)
    }

    /// Substitute polynomials for variables. `args` must supply one
    /// polynomial (over a common variable list) per variable of `self`.
    pub fn compose(&self, args: &[IntPoly]) -> IntPoly {
        assert_eq!(args.len(), self.vars.len(), "one argument per variable");
        let out_vars = if args.is_empty() {
            Vec::new()
        } else {
            args[0].vars.clone()
        };
        let mut out = IntPoly::zero(out_vars.clone());
        for (exps, coeff) in &self.terms {
            let mut term = IntPoly::constant(out_vars.clone(), coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&args[i].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval_int(&self, args: &[BigInt]) -> BigInt {
        assert_eq!(args.len(), self.vars.len(), "one argument per variable");
        let mut acc = BigInt::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &args[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Reduce coefficients into `0..p`, dropping terms that vanish. Used to
    /// specialize universal polynomials to characteristic-p targets before
    /// evaluation.
    pub fn reduce_mod(&self, p: u64) -> IntPoly {
        let p = BigInt::from(p);
        let mut out = IntPoly::zero(self.vars.clone());
        for (exps, coeff) in &self.terms {
            let mut r = coeff % &p;
            if r.is_negative() {
                r += &p;
            }
            out.add_term(exps, r);
        }
        out
    }

    /// Largest total degree among the stored terms (0 for the zero poly).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{}", coeff)?;
            } else if coeff.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn x() -> IntPoly {
        IntPoly::variable(xy(), 0)
    }

    fn y() -> IntPoly {
        IntPoly::variable(xy(), 1)
    }

    #[test]
    fn arithmetic_basics() {
        let p = x().add(&y()).mul(&x().sub(&y()));
        let expected = x().mul(&x()).sub(&y().mul(&y()));
        assert_eq!(p, expected);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = x().sub(&x());
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        let q = x().add(&y()).sub(&y());
        assert_eq!(q, x());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let base = x().add(&IntPoly::constant(xy(), BigInt::from(2)));
        let mut acc = IntPoly::constant(xy(), BigInt::one());
        for e in 0..6u32 {
            assert_eq!(base.pow(e), acc);
            acc = acc.mul(&base);
        }
    }

    #[test]
    fn exact_division() {
        let p = x().scalar_mul(&BigInt::from(6)).add(&y().scalar_mul(&BigInt::from(4)));
        let q = p.exact_div_int(&BigInt::from(2)).unwrap();
        assert_eq!(
            q,
            x().scalar_mul(&BigInt::from(3)).add(&y().scalar_mul(&BigInt::from(2)))
        );
        assert!(p.exact_div_int(&BigInt::from(4)).is_err());
    }

    #[test]
    fn compose_and_eval_agree() {
        // p(x, y) = x^2 + 3y, composed with (x+y, x*y)
        let p = x().pow(2).add(&y().scalar_mul(&BigInt::from(3)));
        let composed = p.compose(&[x().add(&y()), x().mul(&y())]);
        for (a, b) in [(2i64, 5i64), (-1, 3), (0, 0), (7, -2)] {
            let args = [BigInt::from(a), BigInt::from(b)];
            let direct = p.eval_int(&[BigInt::from(a + b), BigInt::from(a * b)]);
            assert_eq!(composed.eval_int(&args), direct);
        }
    }

    #[test]
    fn reduce_mod_drops_multiples() {
        let p = x().scalar_mul(&BigInt::from(4)).add(&y().scalar_mul(&BigInt::from(3)));
        let r = p.reduce_mod(2);
        assert_eq!(r, y());
    }
}
