//! Fully explicit machinery at θ = 1: classical one-variable Jacobi
//! polynomials, determinantal multivariate Jacobi polynomials, factorial
//! Schur polynomials, and an explicit two-step branching rule with positive
//! closed-form coefficients.
//!
//! Nothing here depends on the general-θ pipeline (Gram–Schmidt Jack
//! polynomials, Newton interpolation, binomial expansion), so the routines
//! in this module serve as independent oracles for it at θ = 1.

use crate::interp::ShiftedSymPoly;
use crate::linalg;
use crate::multipoly::{MultiPoly, UniPoly};
use crate::partition::{reverse_tableaux, Partition};
use crate::rational::{pow_q, q, qi, rising, Q};
use crate::symfun::{distinct_permutations, jack_lambda, SymPoly};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

fn check_ab(a: &Q, b: &Q) -> Result<()> {
    if *a <= qi(-1) || *b <= qi(-1) {
        return Err(Error::Domain(format!(
            "classical parameters must satisfy a, b > -1 (got a = {a}, b = {b})"
        )));
    }
    Ok(())
}

/// The classical one-variable polynomial of degree `l`, orthogonal on
/// `[-1, 1]` against `(1-x)^a (1+x)^b`, in the normalization with
/// value `(a+1)(a+2)···(a+l)/l!` at `x = 1`: the terminating
/// hypergeometric sum `p_l(1) · ₂F₁(-l, l+a+b+1; a+1; (1-x)/2)`.
pub fn classical_jacobi(l: usize, a: &Q, b: &Q) -> Result<UniPoly> {
    check_ab(a, b)?;
    // t = (1 - x)/2, accumulated power by power.
    let t = UniPoly::new(vec![q(1, 2), q(-1, 2)]);
    let mut tpow = UniPoly::constant(Q::one());
    let mut acc = UniPoly::zero();
    for j in 0..=l {
        let num = rising(&qi(-(l as i64)), j) * rising(&(qi(l as i64) + a + b + Q::one()), j);
        let den = rising(&(a + Q::one()), j) * rising(&Q::one(), j);
        acc = acc.add(&tpow.scale(&(num / den)));
        tpow = tpow.mul(&t);
    }
    Ok(acc.scale(&classical_value_at_one(l, a)))
}

/// The value of `classical_jacobi(l, a, b)` at `x = 1`; depends only on `a`.
pub fn classical_value_at_one(l: usize, a: &Q) -> Q {
    rising(&(a + Q::one()), l) / rising(&Q::one(), l)
}

/// The leading coefficient of `classical_jacobi(l, a, b)`.
pub fn kappa(l: usize, a: &Q, b: &Q) -> Q {
    rising(&(qi(l as i64) + a + b + Q::one()), l) / (pow_q(&qi(2), l) * rising(&Q::one(), l))
}

/// The unit-normalized polynomial `r_l = p_l / p_l(1)`, so `r_l(1) = 1`.
pub fn r_poly(l: usize, a: &Q, b: &Q) -> Result<UniPoly> {
    let p = classical_jacobi(l, a, b)?;
    Ok(p.scale(&(Q::one() / classical_value_at_one(l, a))))
}

/// The difference quotient `(r_{l+1}(x) - r_l(x)) / (x - 1)`; the division is
/// exact because both numerator terms equal 1 at `x = 1`. Proportional to
/// `classical_jacobi(l, a+1, b)` with a positive constant.
pub fn r_tilde(l: usize, a: &Q, b: &Q) -> Result<UniPoly> {
    let num = r_poly(l + 1, a, b)?.sub(&r_poly(l, a, b)?);
    let div = UniPoly::new(vec![qi(-1), Q::one()]);
    Ok(num
        .divide_exact(&div)
        .expect("difference of unit-normalized polynomials vanishes at x = 1"))
}

/// Coefficients `(a_m, b_m, c_m)` of the three-term recurrence
/// `r_{m+1} = (a_m x + b_m) r_m - c_m r_{m-1}` for the unit-normalized
/// family; `a_m + b_m - c_m = 1` and `a_m, c_m > 0`. At `m = 0` the triple
/// degenerates to `(a_0, b_0, 0)`.
pub fn recurrence_coefficients(m: usize, a: &Q, b: &Q) -> Result<(Q, Q, Q)> {
    check_ab(a, b)?;
    let s = a + b;
    if m == 0 {
        let den = qi(2) * (a + Q::one());
        return Ok(((&s + qi(2)) / &den, (a - b) / den, Q::zero()));
    }
    let m_q = qi(m as i64);
    let two_m_s = qi(2) * &m_q + &s;
    let am = (&two_m_s + Q::one()) * (&two_m_s + qi(2))
        / (qi(2) * (&m_q + &s + Q::one()) * (&m_q + a + Q::one()));
    let bm = (&two_m_s + Q::one()) * (a * a - b * b)
        / (qi(2) * (&m_q + &s + Q::one()) * &two_m_s * (&m_q + a + Q::one()));
    let cm = &m_q * (&m_q + b) * (&two_m_s + qi(2))
        / ((&m_q + &s + Q::one()) * &two_m_s * (&m_q + a + Q::one()));
    Ok((am, bm, cm))
}

/// `B(m, l) = (Π_{l<p≤m} c_p) · a_l`, the coefficient of `r_l` in the
/// expansion of the difference quotient `r̃_m` over `r_0, …, r_m`.
pub fn branching_b(m: usize, l: usize, a: &Q, b: &Q) -> Result<Q> {
    if m < l {
        return Err(Error::Domain(format!(
            "difference-quotient expansion needs m ≥ l (got m = {m}, l = {l})"
        )));
    }
    let mut acc = recurrence_coefficients(l, a, b)?.0;
    for p in l + 1..=m {
        acc *= recurrence_coefficients(p, a, b)?.2;
    }
    debug_assert_eq!(acc, branching_b_closed(m, l, a, b).unwrap());
    Ok(acc)
}

/// Closed form for `branching_b`:
/// `(2m+a+b+2)·(m!/l!)·r(l+b+1, m-l)·(2l+a+b+1) / (2·r(l+a+b+1, m-l+1)·r(l+a+1, m-l+1))`
/// with `r` the rising factorial; at `l = 0` the pair
/// `(2l+a+b+1)/r(l+a+b+1, m-l+1)` must be read as `1/r(a+b+2, m)`, which
/// also covers the removable zero at `a + b = -1`.
pub fn branching_b_closed(m: usize, l: usize, a: &Q, b: &Q) -> Result<Q> {
    check_ab(a, b)?;
    if m < l {
        return Err(Error::Domain(format!(
            "difference-quotient expansion needs m ≥ l (got m = {m}, l = {l})"
        )));
    }
    let l_q = qi(l as i64);
    let num = (qi(2 * m as i64) + a + b + qi(2))
        * rising(&(&l_q + Q::one()), m - l)
        * rising(&(&l_q + b + Q::one()), m - l);
    let middle = if l == 0 {
        Q::one() / rising(&(a + b + qi(2)), m)
    } else {
        (qi(2 * l as i64) + a + b + Q::one()) / rising(&(&l_q + a + b + Q::one()), m - l + 1)
    };
    let den = qi(2) * rising(&(&l_q + a + Q::one()), m - l + 1);
    Ok(num * middle / den)
}

/// `A(μ, ν) = Π_{i=1}^{n-1} B(μ_i + n-1-i, ν_i + n-1-i)`, the positive
/// coefficient of the rank-`n-1` determinant on `r`-polynomials in the
/// expansion of the determinant on difference quotients. Returns 0 when ν
/// does not interlace μ∪0 (outside the expansion's support).
pub fn branching_a(mu: &Partition, nu: &Partition, n: usize, a: &Q, b: &Q) -> Result<Q> {
    if n == 0 || mu.len() > n - 1 || nu.len() > n - 1 {
        return Err(Error::Domain(format!(
            "interlacing coefficient needs ℓ(μ), ℓ(ν) ≤ n-1 (got μ = {mu}, ν = {nu}, n = {n})"
        )));
    }
    for i in 1..=n.saturating_sub(1) {
        if nu.part(i) > mu.part(i) || nu.part(i) < mu.part(i + 1) {
            return Ok(Q::zero());
        }
    }
    let mut acc = Q::one();
    for i in 1..=n - 1 {
        acc *= branching_b(mu.part(i) + n - 1 - i, nu.part(i) + n - 1 - i, a, b)?;
    }
    Ok(acc)
}

/// All integer sequences `κ` with `bounds[i].0 ≤ κ_i ≤ bounds[i].1` that form
/// partitions (the bounds already enforce weak decrease when they interlace).
fn box_sequences(bounds: &[(usize, usize)]) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(bounds: &[(usize, usize)], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == bounds.len() {
            out.push(Partition::new(cur.clone()).expect("interlacing bounds give a partition"));
            return;
        }
        let (lo, hi) = bounds[cur.len()];
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(bounds, cur, out);
            cur.pop();
        }
    }
    rec(bounds, &mut cur, &mut out);
    out
}

/// Two-step restriction of the unit-normalized determinantal family: the
/// total coefficient of `R_ν` (n-1 variables) in `R_λ(x_1, …, x_{n-1}, 1)`,
/// obtained by composing `R_λ(…, 1) = Σ_{μ≺λ} R̃_μ` with
/// `R̃_μ = Σ_{ν≺μ∪0} A(μ,ν) R_ν`. All coefficients are strictly positive.
pub fn two_step_branching(
    lambda: &Partition,
    n: usize,
    a: &Q,
    b: &Q,
) -> Result<BTreeMap<Partition, Q>> {
    check_ab(a, b)?;
    if n < 2 {
        return Err(Error::Domain(format!("restriction needs n ≥ 2 (got n = {n})")));
    }
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} rows")));
    }
    let mu_bounds: Vec<(usize, usize)> =
        (1..n).map(|i| (lambda.part(i + 1), lambda.part(i))).collect();
    let mut total: BTreeMap<Partition, Q> = BTreeMap::new();
    for mu in box_sequences(&mu_bounds) {
        let nu_bounds: Vec<(usize, usize)> =
            (1..n).map(|i| (mu.part(i + 1), mu.part(i))).collect();
        for nu in box_sequences(&nu_bounds) {
            let coeff = branching_a(&mu, &nu, n, a, b)?;
            *total.entry(nu).or_insert_with(Q::zero) += coeff;
        }
    }
    Ok(total)
}

/// The constant relating the unit-normalized determinant `R_λ` to the monic
/// torus polynomial: `J_λ = c · R_λ` with
/// `c = 2^{|λ|} Π_i p_{λ_i+n-i}(1) / κ(λ_i+n-i)`.
pub fn monic_renormalization(lambda: &Partition, n: usize, a: &Q, b: &Q) -> Result<Q> {
    check_ab(a, b)?;
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} rows")));
    }
    let mut acc = pow_q(&qi(2), lambda.size());
    for i in 1..=n {
        let l = lambda.part(i) + n - i;
        acc *= classical_value_at_one(l, a) / kappa(l, a, b);
    }
    Ok(acc)
}

/// Expand `det[g_j(x_i)] / V(x)` over Schur polynomials: the coefficient of
/// `s_{κ-δ}` is `det[coeff of x^{κ_i} in g_j]` summed over strictly
/// decreasing exponent tuples `κ`, with `δ = (n-1, …, 1, 0)`.
fn schur_expand_alternant(cols: &[UniPoly]) -> Vec<(Partition, Q)> {
    let n = cols.len();
    let max_deg = cols.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let mut out = Vec::new();
    let mut kappa_rows: Vec<usize> = Vec::new();
    fn rec(
        cols: &[UniPoly],
        n: usize,
        next_max: usize,
        kappa_rows: &mut Vec<usize>,
        out: &mut Vec<(Partition, Q)>,
    ) {
        if kappa_rows.len() == n {
            let m: Vec<Vec<Q>> = kappa_rows
                .iter()
                .map(|&k| cols.iter().map(|g| g.coeff(k)).collect())
                .collect();
            let det = linalg::determinant(m);
            if !det.is_zero() {
                let parts: Vec<usize> = kappa_rows
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| k - (n - 1 - i))
                    .collect();
                let mu = Partition::new(parts).expect("strictly decreasing κ minus staircase");
                out.push((mu, det));
            }
            return;
        }
        let remaining = n - kappa_rows.len();
        // κ is strictly decreasing, so the current entry must leave room.
        for k in (remaining - 1..=next_max).rev() {
            kappa_rows.push(k);
            rec(cols, n, k.saturating_sub(1), kappa_rows, out);
            kappa_rows.pop();
        }
    }
    rec(cols, n, max_deg, &mut kappa_rows, &mut out);
    out
}

/// Convert a Schur-basis expansion into monomial-symmetric coefficients in
/// `n` variables (monomials with more than `n` rows vanish identically).
fn schur_sum_to_monomial(terms: &[(Partition, Q)], n: usize) -> Result<BTreeMap<Partition, Q>> {
    let mut coeffs: BTreeMap<Partition, Q> = BTreeMap::new();
    for (mu, c) in terms {
        for (nu, w) in jack_lambda(mu, &Q::one())? {
            if nu.len() > n {
                continue;
            }
            let e = coeffs.entry(nu).or_insert_with(Q::zero);
            *e += c * &w;
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(coeffs)
}

/// The determinantal polynomial `det[p_{λ_i+n-i}(x_j)] / V(x)`: a symmetric
/// polynomial in `x_1, …, x_n`, returned over the monomial symmetric basis.
/// Multiplied by `determinantal_constant` and evaluated at
/// `x_i = (z_i + z_i^{-1})/2`, it equals the monic torus polynomial at θ = 1.
pub fn determinantal_jacobi(
    lambda: &Partition,
    n: usize,
    a: &Q,
    b: &Q,
) -> Result<crate::symfun::SymPoly> {
    check_ab(a, b)?;
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} rows")));
    }
    let cols: Vec<UniPoly> = (1..=n)
        .map(|j| classical_jacobi(lambda.part(j) + n - j, a, b))
        .collect::<Result<_>>()?;
    let coeffs = schur_sum_to_monomial(&schur_expand_alternant(&cols), n)?;
    Ok(crate::symfun::SymPoly { n, coeffs })
}

/// `2^{|λ|} / Π_i κ(λ_i + n - i)` — the factor making the determinantal
/// polynomial monic on the torus.
pub fn determinantal_constant(lambda: &Partition, n: usize, a: &Q, b: &Q) -> Q {
    let mut acc = pow_q(&qi(2), lambda.size());
    for i in 1..=n {
        acc /= kappa(lambda.part(i) + n - i, a, b);
    }
    acc
}

/// Expand a symmetric polynomial in `x` into a Weyl-invariant Laurent
/// polynomial in `z` via `x_i = (z_i + z_i⁻¹)/2`; the torus form of the
/// determinantal polynomials.
pub fn half_sum_laurent(sp: &SymPoly) -> MultiPoly {
    let n = sp.n;
    let x: Vec<MultiPoly> = (0..n)
        .map(|i| {
            MultiPoly::monomial(n, i, 1)
                .add(&MultiPoly::monomial(n, i, -1))
                .scale(&q(1, 2))
        })
        .collect();
    let mut acc = MultiPoly::zero(n);
    for (nu, c) in &sp.coeffs {
        for perm in distinct_permutations(nu, n) {
            let mut term = MultiPoly::constant(n, c.clone());
            for (i, &e) in perm.iter().enumerate() {
                term = term.mul(&x[i].pow(e));
            }
            acc = acc.add(&term);
        }
    }
    acc
}

/// A finite prefix `(A_1, A_2, …)` of a factorial-parameter sequence, used
/// by the generalized powers `(y | A)^m = (y - A_1)···(y - A_m)`.
#[derive(Clone, Debug)]
pub struct FactorialGrid {
    entries: Vec<Q>,
}

impl FactorialGrid {
    pub fn new(entries: Vec<Q>) -> Self {
        FactorialGrid { entries }
    }

    /// The sequence `A_k = (h - n + k - 1)²` attached to rank `n` and shift
    /// `h`, long enough for `horizon` generalized-power factors.
    pub fn shifted_squares(h: &Q, n: usize, horizon: usize) -> Self {
        let entries = (1..=horizon)
            .map(|k| {
                let s = h - qi(n as i64) + qi(k as i64 - 1);
                &s * &s
            })
            .collect();
        FactorialGrid { entries }
    }

    pub fn horizon(&self) -> usize {
        self.entries.len()
    }

    /// 1-based entry `A_k`.
    pub fn entry(&self, k: usize) -> Result<&Q> {
        if k == 0 || k > self.entries.len() {
            return Err(Error::Domain(format!(
                "factorial grid of horizon {} has no entry A_{k}",
                self.entries.len()
            )));
        }
        Ok(&self.entries[k - 1])
    }

    /// `(y | A)^m` as a polynomial in `y`.
    fn generalized_power(&self, m: usize) -> Result<UniPoly> {
        let mut acc = UniPoly::constant(Q::one());
        for t in 1..=m {
            let at = self.entry(t)?;
            acc = acc.mul(&UniPoly::new(vec![-at.clone(), Q::one()]));
        }
        Ok(acc)
    }

    fn generalized_power_at(&self, y: &Q, m: usize) -> Result<Q> {
        let mut acc = Q::one();
        for t in 1..=m {
            acc *= y - self.entry(t)?;
        }
        Ok(acc)
    }
}

/// Factorial Schur value `s_μ(y | A) = det[(y_i | A)^{μ_j + n - j}] / V(y)`.
/// When the `y_i` are not pairwise distinct the Vandermonde vanishes and the
/// value is computed from the tableau sum instead.
pub fn factorial_schur(mu: &Partition, y: &[Q], grid: &FactorialGrid) -> Result<Q> {
    let n = y.len();
    if mu.len() > n {
        return Err(Error::Domain(format!("partition {mu} has more than {n} rows")));
    }
    let mut vandermonde = Q::one();
    for i in 0..n {
        for j in i + 1..n {
            vandermonde *= &y[i] - &y[j];
        }
    }
    if vandermonde.is_zero() {
        return factorial_schur_tableau(mu, y, grid);
    }
    let m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (1..=n)
                .map(|j| grid.generalized_power_at(&y[i], mu.part(j) + n - j))
                .collect::<Result<Vec<Q>>>()
        })
        .collect::<Result<_>>()?;
    Ok(linalg::determinant(m) / vandermonde)
}

/// Tableau sum for the factorial Schur value:
/// `Σ_T Π_{(i,j)∈μ} (y_{T(i,j)} - A_{j-i+n+1-T(i,j)})` over reverse tableaux
/// with entries in `{1, …, n}`. Agrees with the determinant ratio.
pub fn factorial_schur_tableau(mu: &Partition, y: &[Q], grid: &FactorialGrid) -> Result<Q> {
    let n = y.len();
    if mu.len() > n {
        return Err(Error::Domain(format!("partition {mu} has more than {n} rows")));
    }
    let mut acc = Q::zero();
    for t in reverse_tableaux(mu, n) {
        let mut term = Q::one();
        for (i, j) in t.shape().boxes() {
            let e = t.entry(i, j);
            // Column strictness gives e ≤ n - i + 1, so the index is ≥ j ≥ 1.
            let idx = j + (n + 1 - e) - i;
            term *= &y[e - 1] - grid.entry(idx)?;
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// The interpolation polynomial at θ = 1 as a factorial Schur polynomial in
/// the shifted squares: `I_μ(x; 1; h) = s_μ((x_1+h-1)², …, (x_n+h-n)² | A)`
/// with `A_k = (h-n+k-1)²`. Returned over the monomial symmetric basis of
/// the squares, matching the Newton construction exactly.
pub fn interp_theta1(mu: &Partition, n: usize, h: &Q) -> Result<ShiftedSymPoly> {
    if mu.len() > n {
        return Err(Error::Domain(format!("partition {mu} has more than {n} rows")));
    }
    let grid = FactorialGrid::shifted_squares(h, n, mu.part(1) + n);
    let cols: Vec<UniPoly> = (1..=n)
        .map(|j| grid.generalized_power(mu.part(j) + n - j))
        .collect::<Result<_>>()?;
    let coeffs = schur_sum_to_monomial(&schur_expand_alternant(&cols), n)?;
    Ok(ShiftedSymPoly { n, theta: Q::one(), h: h.clone(), coeffs })
}
