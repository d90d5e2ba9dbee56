//! Multivariate Jacobi polynomials on the torus.
//!
//! `J_λ(z; θ, a, b)` is the Weyl-group-invariant Laurent polynomial family
//! orthogonal for the weight
//! `Π_{i<j} |(z_i - z_j)(1 - z_i z_j)|^{2θ} Π_i |1 - z_i|^{2a+1} |1 + z_i|^{2b+1}`
//! on the n-torus, normalized so that the leading invariant monomial `m̃_λ`
//! has coefficient one. Everything here is exact rational arithmetic.
//!
//! The central tool is the expansion of the normalized polynomial
//! `Φ_λ = J_λ / J_λ(1ⁿ)` about `z = (1, …, 1)`:
//!
//! `Φ_λ = Σ_{μ ⊆ λ} [I_μ(λ; θ; σ + θn) / C(n, μ)] · 2^{|μ|} · P_μ(y; θ)`
//!
//! with `y_i = (z_i + z_i⁻¹ - 2)/2`, `σ = (a + b + 1)/2`, Jack polynomials
//! `P_μ`, interpolation values `I_μ(λ)`, and denominators
//! `C(n, μ) = I_μ(μ; θ; σ + θn) · J_μ(1ⁿ)` which admit a hook/rising-factorial
//! product form.

use crate::interp::{interp_normalization, interp_value};
use crate::multipoly::MultiPoly;
use crate::partition::{partition_leq, Partition, PartitionOrder};
use crate::rational::{pow_q, q, qi, rising, Q};
use crate::symfun::{distinct_permutations, eval_monomial_sym, hook_products, jack_polynomial};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// The parameter triple `(θ, a, b)` with `θ > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTriple {
    pub theta: Q,
    pub a: Q,
    pub b: Q,
}

impl ParamTriple {
    pub fn new(theta: Q, a: Q, b: Q) -> Result<Self> {
        if theta <= Q::zero() {
            return Err(Error::Domain(format!("θ must be positive, got {theta}")));
        }
        Ok(ParamTriple { theta, a, b })
    }

    /// `σ = (a + b + 1)/2`.
    pub fn sigma(&self) -> Q {
        (&self.a + &self.b + Q::one()) / qi(2)
    }

    /// The interpolation shift used by the binomial expansion: `σ + θn`.
    pub fn h_for(&self, n: usize) -> Q {
        self.sigma() + &self.theta * qi(n as i64)
    }

    /// The positivity range `a ≥ b ≥ -1/2`.
    pub fn in_positivity_range(&self) -> bool {
        self.a >= self.b && self.b >= q(-1, 2)
    }
}

/// A Weyl-invariant Laurent polynomial on the n-torus, stored over the
/// monomial symmetric basis in the variables `y_i = (z_i + z_i⁻¹ - 2)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoly {
    pub n: usize,
    /// Coefficients over `m_ν(y_1, …, y_n)`, `ℓ(ν) ≤ n`.
    pub coeffs: BTreeMap<Partition, Q>,
}

impl TorusPoly {
    pub fn zero(n: usize) -> Self {
        TorusPoly { n, coeffs: BTreeMap::new() }
    }

    pub fn coeff(&self, nu: &Partition) -> Q {
        self.coeffs.get(nu).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, nu: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        debug_assert!(nu.len() <= self.n);
        let entry = self.coeffs.entry(nu.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&nu);
        }
    }

    pub fn add(&self, other: &TorusPoly) -> TorusPoly {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, s: &Q) -> TorusPoly {
        if s.is_zero() {
            return TorusPoly::zero(self.n);
        }
        TorusPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluate at explicit torus coordinates (nonzero rationals).
    pub fn eval_z(&self, z: &[Q]) -> Result<Q> {
        if z.len() != self.n {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.n,
                z.len()
            )));
        }
        if z.iter().any(|zi| zi.is_zero()) {
            return Err(Error::Domain("torus coordinates must be nonzero".into()));
        }
        let y: Vec<Q> = z
            .iter()
            .map(|zi| (zi + zi.recip() - qi(2)) / qi(2))
            .collect();
        Ok(self.eval_y(&y))
    }

    /// Evaluate as a function of the `y` variables directly.
    pub fn eval_y(&self, y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (nu, c) in &self.coeffs {
            acc += c * &eval_monomial_sym(nu, y);
        }
        acc
    }

    /// Value at the identity point `z = (1, …, 1)` (all `y_i = 0`).
    pub fn value_at_identity(&self) -> Q {
        self.coeff(&Partition::empty())
    }

    /// Substitute `z_n = 1` (equivalently `y_n = 0`).
    pub fn specialize_last_to_one(&self) -> TorusPoly {
        assert!(self.n >= 1);
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(nu, _)| nu.len() <= self.n - 1)
            .map(|(nu, c)| (nu.clone(), c.clone()))
            .collect();
        TorusPoly { n: self.n - 1, coeffs }
    }

    /// Expand into a Laurent polynomial in `z_1, …, z_n`.
    pub fn to_laurent(&self) -> MultiPoly {
        let n = self.n;
        // y as a Laurent polynomial per variable: (z + z⁻¹ - 2)/2.
        let y_of = |i: usize| -> MultiPoly {
            let mut p = MultiPoly::zero(n);
            let mut e = vec![0i64; n];
            e[i] = 1;
            p.add_term(e.clone(), q(1, 2));
            e[i] = -1;
            p.add_term(e.clone(), q(1, 2));
            e[i] = 0;
            p.add_term(e, qi(-1));
            p
        };
        let mut out = MultiPoly::zero(n);
        for (nu, c) in &self.coeffs {
            for expo in distinct_permutations(nu, n) {
                let mut term = MultiPoly::constant(n, c.clone());
                for (i, &e) in expo.iter().enumerate() {
                    if e > 0 {
                        term = term.mul(&y_of(i).pow(e));
                    }
                }
                out = out.add(&term);
            }
        }
        out
    }
}

/// The binomial-formula denominator
/// `C(n, μ; θ; a, b) = 4^{|μ|} (H/H') Π_i r(θ(n-i+1), μ_i) r(θ(n-i)+a+1, μ_i)`
/// with `r` the rising factorial; independent of `b`.
pub fn c_denominator(n: usize, mu: &Partition, params: &ParamTriple) -> Result<Q> {
    if mu.len() > n {
        return Err(Error::Domain(format!("partition {mu} has more than {n} rows")));
    }
    let th = &params.theta;
    let (h, hp) = hook_products(mu, th);
    let mut acc = pow_q(&qi(4), mu.size()) * h / hp;
    for (i0, &mi) in mu.parts().iter().enumerate() {
        let i = (i0 + 1) as i64;
        acc *= rising(&(th * qi(n as i64 - i + 1)), mi);
        acc *= rising(&(th * qi(n as i64 - i) + &params.a + Q::one()), mi);
    }
    Ok(acc)
}

/// `J_λ(1, …, 1; θ, a, b) = C(n, λ) / I_λ(λ; θ; σ + θn)`.
pub fn jacobi_value_at_identity(lambda: &Partition, n: usize, params: &ParamTriple) -> Result<Q> {
    let c = c_denominator(n, lambda, params)?;
    let norm = interp_normalization(lambda, &params.theta, &params.h_for(n));
    if norm.is_zero() {
        return Err(Error::Domain(format!(
            "normalization vanishes for λ = {lambda} at these parameters"
        )));
    }
    Ok(c / norm)
}

/// Independent product formula for `J_λ(1ⁿ)`, exact for all rational
/// parameters: rising-factorial ratios of integer length, one pair of ratios
/// per root of the type-BC system. The two single-root groups are merged via
/// the duplication split `r(2x, 2k) = 4^k r(x, k) r(x + 1/2, k)` so that the
/// boundary `a = b = -1/2` stays pole-free: the lone 0/0 pair resolves to 2
/// by continuity in the parameters.
pub fn opdam_value(lambda: &Partition, n: usize, params: &ParamTriple) -> Result<Q> {
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} rows")));
    }
    let th = &params.theta;
    let a = &params.a;
    let sigma = params.sigma();
    let two_sigma = qi(2) * &sigma;
    let pole = || Error::Domain("value product formula hits a pole at these parameters".into());
    let ratio = |x: Q, y: Q, k: usize| -> Result<Q> {
        let den = rising(&y, k);
        if den.is_zero() {
            return Err(pole());
        }
        Ok(rising(&x, k) / den)
    };
    let mut acc = Q::one();
    for i in 1..=n {
        let li = lambda.part(i);
        // Pair roots: differences and sums of rows.
        for j in i + 1..=n {
            let lj = lambda.part(j);
            acc *= ratio(
                th * qi((j - i + 1) as i64),
                th * qi((j - i) as i64),
                li - lj,
            )?;
            acc *= ratio(
                th * qi((2 * n - i - j + 1) as i64) + &two_sigma,
                th * qi((2 * n - i - j) as i64) + &two_sigma,
                li + lj,
            )?;
        }
        // Merged single-root factor for row i (v = θ(n - i)):
        //   r(v+a+1, λ_i) · Π_k (v+2σ+k)/(v+σ+k) / r(v+σ+1/2, λ_i).
        let v = th * qi((n - i) as i64);
        acc *= rising(&(&v + a + Q::one()), li);
        let den = rising(&(&v + &sigma + q(1, 2)), li);
        if den.is_zero() {
            return Err(pole());
        }
        acc /= den;
        for k in 0..li {
            let num = &v + &two_sigma + qi(k as i64);
            let d = &v + &sigma + qi(k as i64);
            if d.is_zero() {
                // Both vanish only at σ = 0, v = 0, k = 0, where the ratio
                // 2σ/σ continues to 2.
                if num.is_zero() {
                    acc *= qi(2);
                } else {
                    return Err(pole());
                }
            } else {
                acc *= num / d;
            }
        }
    }
    Ok(acc)
}

/// The normalized Jacobi polynomial `Φ_λ = J_λ / J_λ(1ⁿ)` via the binomial
/// expansion over subdiagrams of λ. Degree is capped by the dense Jack
/// construction; large-rank asymptotics use the one-variable expansion
/// [`one_variable_fourier`] instead.
pub fn normalized_jacobi(lambda: &Partition, n: usize, params: &ParamTriple) -> Result<TorusPoly> {
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} rows")));
    }
    let h = params.h_for(n);
    let mut out = TorusPoly::zero(n);
    for mu in crate::partition::subpartitions(lambda) {
        if mu.len() > n {
            continue;
        }
        let iv = interp_value(&mu, lambda, n, &params.theta, &h)?;
        if iv.is_zero() {
            continue;
        }
        let c = c_denominator(n, &mu, params)?;
        if c.is_zero() {
            return Err(Error::Domain(format!(
                "binomial denominator vanishes at μ = {mu}"
            )));
        }
        let scale = iv * pow_q(&qi(2), mu.size()) / c;
        for (nu, jc) in jack_polynomial(&mu, n, &params.theta)?.coeffs {
            out.add_term(nu, jc * &scale);
        }
    }
    Ok(out)
}

/// The monic Jacobi polynomial `J_λ` (leading invariant-monomial coefficient
/// one): `J_λ = J_λ(1ⁿ) · Φ_λ`.
pub fn jacobi_monic(lambda: &Partition, n: usize, params: &ParamTriple) -> Result<TorusPoly> {
    let phi = normalized_jacobi(lambda, n, params)?;
    Ok(phi.scale(&jacobi_value_at_identity(lambda, n, params)?))
}

/// Coefficients of the one-variable restriction
/// `Φ_λ(z, 1, …, 1) = Σ_m d_m (x - 1)^m`, `x = (z + z⁻¹)/2`:
/// `d_m = I_(m)(λ; θ; σ + θn) 2^m / C(n, (m))`, for `m = 0, …, λ_1`.
/// Only one-row shapes survive the restriction, so this scales to large λ.
pub fn one_variable_fourier(lambda: &Partition, n: usize, params: &ParamTriple) -> Result<Vec<Q>> {
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} rows")));
    }
    let h = params.h_for(n);
    let mut out = Vec::with_capacity(lambda.part(1) + 1);
    for m in 0..=lambda.part(1) {
        let mu = if m == 0 {
            Partition::empty()
        } else {
            Partition::from_sorted(vec![m])
        };
        let iv = interp_value(&mu, lambda, n, &params.theta, &h)?;
        let c = c_denominator(n, &mu, params)?;
        out.push(iv * pow_q(&qi(2), m) / c);
    }
    Ok(out)
}

/// Expand `J_λ` over the invariant monomials `m̃_μ` (orbit sums under
/// permutations and inversions of the `z_i`), returning the coefficients
/// `u_λμ`. The expansion is read off the Laurent form: each orbit is
/// represented by its weakly decreasing vector of exponent absolute values,
/// and constancy along every orbit is verified.
pub fn u_coefficients(
    lambda: &Partition,
    n: usize,
    params: &ParamTriple,
) -> Result<BTreeMap<Partition, Q>> {
    let laurent = jacobi_monic(lambda, n, params)?.to_laurent();
    let mut out: BTreeMap<Partition, Q> = BTreeMap::new();
    for (e, c) in &laurent.terms {
        let mut abs: Vec<usize> = e.iter().map(|&x| x.unsigned_abs() as usize).collect();
        abs.sort_unstable_by(|x, y| y.cmp(x));
        let rep = Partition::from_sorted(abs.into_iter().filter(|&x| x > 0).collect());
        match out.get(&rep) {
            None => {
                out.insert(rep, c.clone());
            }
            Some(prev) => {
                if prev != c {
                    return Err(Error::Domain(format!(
                        "expansion of J_{lambda} is not invariant along the orbit of {rep}"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// The orthogonality weight as an exact Laurent polynomial. Requires every
/// exponent to be a nonnegative integer: `θ ∈ ℤ₊`, `a + 1/2 ∈ ℤ₊`,
/// `b + 1/2 ∈ ℤ₊`.
pub fn weight_laurent(n: usize, params: &ParamTriple) -> Result<MultiPoly> {
    let half = q(1, 2);
    let (t, aa, bb) = match (
        crate::rational::as_usize(&params.theta),
        crate::rational::as_usize(&(&params.a + &half)),
        crate::rational::as_usize(&(&params.b + &half)),
    ) {
        (Some(t), Some(aa), Some(bb)) => (t, aa, bb),
        _ => return Err(Error::ExactModeUnavailable),
    };
    let mut w = MultiPoly::one(n);
    let monomial = |pairs: &[(usize, i64)], c: Q| -> MultiPoly {
        let mut e = vec![0i64; n];
        for &(i, k) in pairs {
            e[i] = k;
        }
        let mut p = MultiPoly::zero(n);
        p.add_term(e, c);
        p
    };
    for i in 0..n {
        for j in i + 1..n {
            let mut cross = MultiPoly::one(n);
            // (z_i - z_j)(z_i⁻¹ - z_j⁻¹) = 2 - z_i z_j⁻¹ - z_i⁻¹ z_j
            let mut d = monomial(&[], qi(2));
            d = d.add(&monomial(&[(i, 1), (j, -1)], qi(-1)));
            d = d.add(&monomial(&[(i, -1), (j, 1)], qi(-1)));
            cross = cross.mul(&d);
            // (1 - z_i z_j)(1 - z_i⁻¹ z_j⁻¹) = 2 - z_i z_j - z_i⁻¹ z_j⁻¹... kept factored
            let mut s = monomial(&[], qi(2));
            s = s.add(&monomial(&[(i, 1), (j, 1)], qi(-1)));
            s = s.add(&monomial(&[(i, -1), (j, -1)], qi(-1)));
            cross = cross.mul(&s);
            w = w.mul(&cross.pow(t));
        }
    }
    for i in 0..n {
        // (1 - z)(1 - z⁻¹) = 2 - z - z⁻¹ ; (1 + z)(1 + z⁻¹) = 2 + z + z⁻¹
        let mut minus = monomial(&[], qi(2));
        minus = minus.add(&monomial(&[(i, 1)], qi(-1)));
        minus = minus.add(&monomial(&[(i, -1)], qi(-1)));
        let mut plus = monomial(&[], qi(2));
        plus = plus.add(&monomial(&[(i, 1)], Q::one()));
        plus = plus.add(&monomial(&[(i, -1)], Q::one()));
        w = w.mul(&minus.pow(aa)).mul(&plus.pow(bb));
    }
    Ok(w)
}

/// Exact torus pairing `CT(f · g · w)`: the constant term of the product with
/// the weight. (Invariant polynomials are self-conjugate under `z ↦ z⁻¹`, so
/// no conjugation is needed.) Available only when the weight is a Laurent
/// polynomial; see [`weight_laurent`].
pub fn exact_inner_product(f: &TorusPoly, g: &TorusPoly, params: &ParamTriple) -> Result<Q> {
    if f.n != g.n {
        return Err(Error::Domain("operands live on different tori".into()));
    }
    let w = weight_laurent(f.n, params)?;
    Ok(f.to_laurent().mul(&g.to_laurent()).mul(&w).constant_term())
}

/// Branching: expand the restriction `J_λ(z_1, …, z_{n-1}, 1)` over the
/// (n-1)-variable family: `J_λ(…, 1) = Σ_ν d_ν J_ν(z_1, …, z_{n-1})`.
/// The expansion is triangular for the (degree, lex) order because the top
/// `y`-monomial of `J_κ` is `2^{|κ|} m_κ(y)`.
pub fn branching_expand(
    lambda: &Partition,
    n: usize,
    params: &ParamTriple,
) -> Result<BTreeMap<Partition, Q>> {
    if n == 0 {
        return Err(Error::Domain("branching needs at least one variable".into()));
    }
    let restricted = jacobi_monic(lambda, n, params)?.specialize_last_to_one();
    let mut rest = restricted;
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        // Largest remaining key by (size, lex): within each degree, lex-max
        // is dominance-maximal, so elimination is triangular.
        let kappa = rest
            .coeffs
            .keys()
            .max_by(|x, y| (x.size(), *x).cmp(&(y.size(), *y)))
            .unwrap()
            .clone();
        let d = rest.coeff(&kappa) / pow_q(&qi(2), kappa.size());
        let jk = jacobi_monic(&kappa, n - 1, params)?;
        rest = rest.add(&jk.scale(&-d.clone()));
        if !d.is_zero() {
            out.insert(kappa, d);
        }
    }
    Ok(out)
}

/// Check that the invariant-monomial support of `J_λ` is contained in the
/// cone order `μ ≪ λ` (every prefix sum of λ dominates that of μ).
pub fn support_in_cone(u: &BTreeMap<Partition, Q>, lambda: &Partition) -> bool {
    u.keys().all(|mu| partition_leq(mu, lambda, PartitionOrder::Ll))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn params(theta: (i64, i64), a: (i64, i64), b: (i64, i64)) -> ParamTriple {
        ParamTriple::new(q(theta.0, theta.1), q(a.0, a.1), q(b.0, b.1)).unwrap()
    }

    #[test]
    fn c_denominator_closed_forms() {
        // C(n, (1)) = 4n(θ(n-1) + a + 1).
        for n in 1..=4usize {
            let pr = params((1, 2), (1, 3), (0, 1));
            let expect = qi(4)
                * qi(n as i64)
                * (&pr.theta * qi(n as i64 - 1) + &pr.a + Q::one());
            assert_eq!(c_denominator(n, &p(&[1]), &pr).unwrap(), expect);
        }
        // Frozen: θ = 1, a = b = 0, n = 2, μ = (1,1).
        let pr = params((1, 1), (0, 1), (0, 1));
        assert_eq!(c_denominator(2, &p(&[1, 1]), &pr).unwrap(), qi(64));
    }

    #[test]
    fn c_equals_normalization_times_value_at_identity() {
        for pr in [
            params((1, 1), (0, 1), (0, 1)),
            params((1, 2), (1, 2), (-1, 2)),
            params((2, 1), (1, 1), (1, 2)),
        ] {
            for n in 1..=3usize {
                for mu in partitions_up_to(3, n) {
                    let c = c_denominator(n, &mu, &pr).unwrap();
                    let norm = interp_normalization(&mu, &pr.theta, &pr.h_for(n));
                    let j1 = jacobi_value_at_identity(&mu, n, &pr).unwrap();
                    assert_eq!(c, norm * j1, "μ = {mu}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn value_at_identity_matches_product_formula() {
        for pr in [
            params((1, 1), (0, 1), (0, 1)),
            params((1, 2), (1, 2), (-1, 2)),
            params((5, 3), (3, 4), (1, 4)),
            params((2, 1), (1, 1), (1, 2)),
        ] {
            for n in 1..=3usize {
                for lam in partitions_up_to(4, n) {
                    assert_eq!(
                        jacobi_value_at_identity(&lam, n, &pr).unwrap(),
                        opdam_value(&lam, n, &pr).unwrap(),
                        "λ = {lam}, n = {n}, θ = {}",
                        pr.theta
                    );
                }
            }
        }
    }

    #[test]
    fn value_at_identity_single_box() {
        // J_(1)(1; a, b) = 4(a + 1)/(a + b + 2) in one variable.
        let pr = params((1, 1), (1, 3), (1, 5));
        let expect = qi(4) * (&pr.a + Q::one()) / (&pr.a + &pr.b + qi(2));
        assert_eq!(jacobi_value_at_identity(&p(&[1]), 1, &pr).unwrap(), expect);
        // Boundary a = b = -1/2: J_(1) = z + z⁻¹ has value 2.
        let pr = params((1, 1), (-1, 2), (-1, 2));
        assert_eq!(jacobi_value_at_identity(&p(&[1]), 1, &pr).unwrap(), qi(2));
        assert_eq!(opdam_value(&p(&[1]), 1, &pr).unwrap(), qi(2));
    }

    #[test]
    fn one_variable_jacobi_is_classical() {
        // n = 1, a = b = -1/2: J_(l) = z^l + z^{-l} (Chebyshev), so
        // J_(l)(1) = 2 and Φ evaluates to cos(lφ)-type sums; check the
        // monic Laurent expansion directly.
        let pr = params((1, 1), (-1, 2), (-1, 2));
        for l in 1..=4usize {
            let j = jacobi_monic(&p(&[l]), 1, &pr).unwrap().to_laurent();
            let mut expect = MultiPoly::zero(1);
            expect.add_term(vec![l as i64], Q::one());
            expect.add_term(vec![-(l as i64)], Q::one());
            assert_eq!(j, expect, "Chebyshev mismatch at l = {l}");
        }
    }

    #[test]
    fn normalized_jacobi_is_one_at_identity() {
        let pr = params((1, 2), (1, 2), (0, 1));
        for lam in [p(&[1]), p(&[2, 1]), p(&[2, 2])] {
            let phi = normalized_jacobi(&lam, 3, &pr).unwrap();
            assert_eq!(phi.value_at_identity(), Q::one());
        }
    }

    #[test]
    fn single_box_y_coefficient() {
        // Φ_(1) = 1 + [2 I_(1)((1))/C(n,(1))] m_(1)(y), with
        // I_(1)((1); θ; σ + θn) = 2θ(n-1) + a + b + 2.
        let pr = params((1, 2), (1, 3), (1, 7));
        let n = 3;
        let phi = normalized_jacobi(&p(&[1]), n, &pr).unwrap();
        let h = pr.h_for(n);
        let i1 = Q::one() + qi(2) * &h - qi(2) * &pr.theta;
        let num = qi(2) * &pr.theta * qi(n as i64 - 1) + &pr.a + &pr.b + qi(2);
        assert_eq!(i1, num);
        let den = qi(4) * qi(n as i64) * (&pr.theta * qi(n as i64 - 1) + &pr.a + Q::one());
        assert_eq!(phi.coeff(&p(&[1])), qi(2) * i1 / den);
        assert_eq!(phi.coeffs.len(), 2);
    }

    #[test]
    fn monic_leading_coefficient_is_one() {
        for pr in [
            params((1, 1), (1, 2), (1, 2)),
            params((1, 2), (0, 1), (-1, 2)),
            params((2, 1), (1, 1), (0, 1)),
        ] {
            for n in 1..=3usize {
                for lam in partitions_up_to(3, n) {
                    let u = u_coefficients(&lam, n, &pr).unwrap();
                    assert_eq!(u.get(&lam), Some(&Q::one()), "u_λλ ≠ 1 at λ = {lam}, n = {n}");
                    assert!(support_in_cone(&u, &lam), "support leaks the cone at {lam}");
                }
            }
        }
    }

    #[test]
    fn u_coefficients_nonnegative_in_standard_range() {
        let pr = params((1, 2), (1, 2), (0, 1));
        for lam in partitions_up_to(4, 2) {
            for (mu, c) in u_coefficients(&lam, 2, &pr).unwrap() {
                assert!(c >= Q::zero(), "u_{{{lam},{mu}}} = {c} < 0");
            }
        }
    }

    #[test]
    fn weight_requires_integer_exponents() {
        let pr = params((1, 2), (0, 1), (0, 1));
        match weight_laurent(2, &pr) {
            Err(Error::ExactModeUnavailable) => {}
            other => panic!("expected exact-mode error, got {other:?}"),
        }
    }

    #[test]
    fn weight_constant_term_examples() {
        // n = 1, a = b = -1/2: weight ≡ 1.
        let pr = params((1, 1), (-1, 2), (-1, 2));
        let w = weight_laurent(1, &pr).unwrap();
        assert_eq!(w, MultiPoly::one(1));
        // CT(J_(1)² · 1) = CT((z + z⁻¹)²) = 2.
        let f = jacobi_monic(&p(&[1]), 1, &pr).unwrap();
        assert_eq!(exact_inner_product(&f, &f, &pr).unwrap(), qi(2));
    }

    #[test]
    fn orthogonality_in_one_variable() {
        let pr = params((1, 1), (1, 2), (1, 2));
        let polys: Vec<TorusPoly> = (0..=4)
            .map(|l| {
                let lam = if l == 0 { Partition::empty() } else { p(&[l]) };
                jacobi_monic(&lam, 1, &pr).unwrap()
            })
            .collect();
        for i in 0..polys.len() {
            for j in 0..polys.len() {
                let ip = exact_inner_product(&polys[i], &polys[j], &pr).unwrap();
                if i == j {
                    assert!(ip > Q::zero());
                } else {
                    assert_eq!(ip, Q::zero(), "⟨J_{i}, J_{j}⟩ ≠ 0");
                }
            }
        }
    }

    #[test]
    fn branching_positive_and_mass_preserving() {
        let pr = params((1, 1), (1, 2), (1, 2));
        let n = 3;
        for lam in [p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2, 1])] {
            let d = branching_expand(&lam, n, &pr).unwrap();
            assert!(!d.is_empty());
            for (nu, c) in &d {
                assert!(c > &Q::zero(), "d_{nu} = {c} ≤ 0 for λ = {lam}");
                assert!(nu.len() <= n - 1);
            }
            // Sum rule at the identity: J_λ(1ⁿ) = Σ d_ν J_ν(1^{n-1}).
            let lhs = jacobi_value_at_identity(&lam, n, &pr).unwrap();
            let mut rhs = Q::zero();
            for (nu, c) in &d {
                rhs += c * jacobi_value_at_identity(nu, n - 1, &pr).unwrap();
            }
            assert_eq!(lhs, rhs, "identity sum rule fails for λ = {lam}");
        }
    }

    #[test]
    fn branching_matches_symplectic_multiplicities() {
        // At θ = 1, a = b = 1/2 the monic polynomials are the symplectic
        // characters, so restriction to z_n = 1 must reproduce the classical
        // Sp(n) ⊃ Sp(n-1) rule: the multiplicity of ν is the number of μ
        // with λ/μ and μ/ν both "interlacing" (λ_i ≥ μ_i ≥ λ_{i+1}, then
        // μ_i ≥ ν_i ≥ μ_{i+1}).  Expected tables computed by hand.
        let pr = params((1, 1), (1, 2), (1, 2));

        let lam = p(&[3, 1]);
        assert_eq!(opdam_value(&lam, 2, &pr).unwrap(), qi(35)); // Weyl dim
        let d = branching_expand(&lam, 2, &pr).unwrap();
        let expect = vec![
            (p(&[]), qi(3)),
            (p(&[1]), qi(6)),
            (p(&[2]), qi(4)),
            (p(&[3]), qi(2)),
        ];
        assert_eq!(d.into_iter().collect::<Vec<_>>(), expect);

        let lam = p(&[2, 2]);
        assert_eq!(opdam_value(&lam, 2, &pr).unwrap(), qi(14)); // Weyl dim
        let d = branching_expand(&lam, 2, &pr).unwrap();
        let expect = vec![(p(&[]), qi(1)), (p(&[1]), qi(2)), (p(&[2]), qi(3))];
        assert_eq!(d.into_iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn restriction_matches_direct_specialization() {
        let pr = params((1, 2), (1, 2), (-1, 2));
        let lam = p(&[2, 1]);
        let n = 3;
        let d = branching_expand(&lam, n, &pr).unwrap();
        // Reconstruct and compare at generic torus points.
        let restricted = jacobi_monic(&lam, n, &pr).unwrap();
        for zpt in [vec![qi(2), qi(3)], vec![q(1, 2), qi(5)], vec![qi(1), q(2, 7)]] {
            let mut full = zpt.clone();
            full.push(Q::one());
            let lhs = restricted.eval_z(&full).unwrap();
            let mut rhs = Q::zero();
            for (nu, c) in &d {
                rhs += c * jacobi_monic(nu, n - 1, &pr).unwrap().eval_z(&zpt).unwrap();
            }
            assert_eq!(lhs, rhs);
        }
    }
}
