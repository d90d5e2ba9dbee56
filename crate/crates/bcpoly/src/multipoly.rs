//! Sparse multivariate (Laurent) polynomials and dense univariate polynomials
//! over the rationals. These are working representations used to expand and
//! compare the structured types elsewhere in the crate; they carry no basis
//! conventions of their own.

use crate::rational::Q;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A sparse polynomial in `nvars` variables with integer (possibly negative)
/// exponents — negative exponents make it a Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    pub nvars: usize,
    /// exponent vector -> coefficient; zero coefficients are never stored.
    pub terms: BTreeMap<Vec<i64>, Q>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    /// The monomial `x_i^k` (0-based variable index).
    pub fn monomial(nvars: usize, i: usize, k: i64) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Q::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, expo: Vec<i64>, c: Q) {
        debug_assert_eq!(expo.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, s: &Q) -> MultiPoly {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a rational point (all exponents must be applicable:
    /// negative exponents require nonzero coordinates).
    pub fn eval(&self, point: &[Q]) -> Q {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k >= 0 {
                    t *= crate::rational::pow_q(x, k as usize);
                } else {
                    t *= crate::rational::pow_q(&x.recip(), (-k) as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute `z_i -> z_i^{-1}` for every variable (Laurent conjugation).
    pub fn invert_variables(&self) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.iter().map(|k| -k).collect(), c.clone());
        }
        out
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coeff(&self, expo: &[i64]) -> Q {
        self.terms.get(expo).cloned().unwrap_or_else(Q::zero)
    }

    /// The constant-term coefficient.
    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.nvars])
    }

    /// Exact division, `self = q * d`, under lex order on exponents.
    /// Returns `None` when the division leaves a remainder. Exponents must be
    /// nonnegative (plain polynomials).
    pub fn divide_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        debug_assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero(), "division by zero polynomial");
        let (lead_e, lead_c) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quo = Self::zero(self.nvars);
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
            let qe: Vec<i64> = re.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&k| k < 0) {
                return None;
            }
            let qc = &rc / &lead_c;
            quo.add_term(qe.clone(), qc.clone());
            // rem -= (qc * x^qe) * d
            for (e, c) in &d.terms {
                let te: Vec<i64> = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(te, -(&qc * c));
            }
        }
        Some(quo)
    }

    /// Keep only terms whose weighted total degree equals `deg`
    /// (weights all 1).
    pub fn homogeneous_part(&self, deg: i64) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().sum::<i64>() == deg {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }
}

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Q>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    /// Coefficient of `x^k` (zero when absent).
    pub fn coeff(&self, k: usize) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn leading(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::new(v)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::new(v)
    }

    pub fn scale(&self, s: &Q) -> UniPoly {
        UniPoly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }

    /// Multiply by `x`.
    pub fn shift_up(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Q::zero()];
        v.extend(self.0.iter().cloned());
        UniPoly::new(v)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division; `None` when a remainder is left.
    pub fn divide_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.0.len() - 1;
        if rem.len() < d.0.len() {
            return if self.is_zero() { Some(UniPoly::zero()) } else { None };
        }
        let mut quo = vec![Q::zero(); rem.len() - dd];
        let lead = d.0[dd].clone();
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + i] -= t;
                }
            }
            quo[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(UniPoly::new(quo))
        } else {
            None
        }
    }
}
