//! Interpolation polynomials `I_μ(x; θ; h)`.
//!
//! `I_μ` is the unique symmetric polynomial of degree ≤ |μ| in the shifted
//! squares `u_i = (x_i + h - θi)²` that vanishes at every partition point
//! `x = λ` with `|λ| ≤ |μ|, λ ≠ μ` and takes a prescribed product value at
//! `x = μ`. It also vanishes at every λ that does not contain μ (extra
//! vanishing), has nonnegative tableau expansion, and degenerates at θ = 1 to
//! a factorial Schur polynomial in the shifted squares.
//!
//! Three independent routes are provided: a Newton-type linear solve on the
//! grid of partition points, a positive combinatorial sum over reverse
//! tableaux with box factors linear in the `u` variables, and a
//! horizontal-strip chain recursion that evaluates the tableau sum at a
//! single point in polynomial time (used for large-rank asymptotics).

use crate::linalg;
use crate::multipoly::{MultiPoly, UniPoly};
use crate::partition::{horizontal_strip_predecessors, partitions_up_to, Partition};
use crate::rational::{qi, Q};
use crate::symfun::{eval_monomial_sym, jack_branching_psi};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// A symmetric polynomial in the shifted squares `u_i = (x_i + h - θi)²`,
/// stored over the monomial symmetric basis of the `u` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSymPoly {
    pub n: usize,
    pub theta: Q,
    pub h: Q,
    /// Coefficients over `m_ν(u_1, …, u_n)`.
    pub coeffs: BTreeMap<Partition, Q>,
}

impl ShiftedSymPoly {
    pub fn coeff(&self, nu: &Partition) -> Q {
        self.coeffs.get(nu).cloned().unwrap_or_else(Q::zero)
    }

    /// Evaluate as a function of the `u` variables directly.
    pub fn eval_u(&self, u: &[Q]) -> Q {
        assert_eq!(u.len(), self.n);
        let mut acc = Q::zero();
        for (nu, c) in &self.coeffs {
            acc += c * &eval_monomial_sym(nu, u);
        }
        acc
    }

    /// Evaluate at a point `x` of length `n` (substituting the shifted squares).
    pub fn eval_x(&self, x: &[Q]) -> Q {
        self.eval_u(&shifted_squares(x, &self.theta, &self.h))
    }

    /// Evaluate at the partition point `x = λ` (zero-padded to length `n`).
    pub fn eval_partition(&self, lambda: &Partition) -> Result<Q> {
        let x = partition_point(lambda, self.n)?;
        Ok(self.eval_x(&x))
    }
}

/// `u_i = (x_i + h - θi)²` for `i = 1, …, len(x)`.
pub fn shifted_squares(x: &[Q], theta: &Q, h: &Q) -> Vec<Q> {
    x.iter()
        .enumerate()
        .map(|(i, xi)| {
            let s = xi + h - theta * qi((i + 1) as i64);
            &s * &s
        })
        .collect()
}

fn partition_point(lambda: &Partition, n: usize) -> Result<Vec<Q>> {
    if lambda.len() > n {
        return Err(Error::Domain(format!(
            "partition {lambda} has more than {n} rows"
        )));
    }
    Ok((1..=n).map(|i| qi(lambda.part(i) as i64)).collect())
}

/// The normalization value `I_μ(μ; θ; h)`: the product over boxes `(i,j)` of
/// `(1 + μ_i - j + θ(μ'_j - i)) · (2h - 1 + μ_i + j - θ(μ'_j + i))`.
pub fn interp_normalization(mu: &Partition, theta: &Q, h: &Q) -> Q {
    let conj = mu.conjugate();
    let two_h = qi(2) * h;
    let mut acc = Q::one();
    for (i, j) in mu.boxes() {
        let row = qi(mu.part(i) as i64);
        let col = qi(conj.part(j) as i64);
        let a = Q::one() + &row - qi(j as i64) + theta * (&col - qi(i as i64));
        let b = &two_h - Q::one() + &row + qi(j as i64) - theta * (&col + qi(i as i64));
        acc *= a * b;
    }
    acc
}

/// Newton construction: solve the vanishing/normalization conditions on the
/// grid of all partitions of size ≤ |μ| with at most `n` rows.
pub fn interp_newton(mu: &Partition, n: usize, theta: &Q, h: &Q) -> Result<ShiftedSymPoly> {
    check_shape(mu, n)?;
    let nodes = partitions_up_to(mu.size(), n);
    let basis = &nodes; // same index set: m_ν(u) for |ν| ≤ |μ|, ℓ(ν) ≤ n
    let mut a = Vec::with_capacity(nodes.len());
    let mut b = Vec::with_capacity(nodes.len());
    for lam in nodes.iter() {
        let x = partition_point(lam, n)?;
        let u = shifted_squares(&x, theta, h);
        a.push(basis.iter().map(|nu| eval_monomial_sym(nu, &u)).collect::<Vec<_>>());
        b.push(if lam == mu {
            interp_normalization(mu, theta, h)
        } else {
            Q::zero()
        });
    }
    let sol = linalg::solve(a, b).ok_or_else(|| {
        Error::DegenerateGrid(format!(
            "interpolation grid is degenerate for μ = {mu}, n = {n}, θ = {theta}, h = {h}"
        ))
    })?;
    let mut coeffs = BTreeMap::new();
    for (nu, c) in basis.iter().zip(sol) {
        if !c.is_zero() {
            coeffs.insert(nu.clone(), c);
        }
    }
    Ok(ShiftedSymPoly { n, theta: theta.clone(), h: h.clone(), coeffs })
}

/// The box factor constant for box `(i, j)` filled with entry `t`:
/// the factor is `u_t - ((j-1) - θ(i-1) + h - θt)²`.
fn box_constant(i: usize, j: usize, t: usize, theta: &Q, h: &Q) -> Q {
    let s = qi((j - 1) as i64) - theta * qi((i - 1) as i64) + h - theta * qi(t as i64);
    &s * &s
}

/// Combinatorial construction: the positive sum over reverse tableaux of
/// shape μ with entries in `{1, …, n}` of `ψ_T(θ)` times the product of box
/// factors, assembled as a polynomial in the `u` variables.
pub fn interp_combinatorial(mu: &Partition, n: usize, theta: &Q, h: &Q) -> Result<ShiftedSymPoly> {
    check_shape(mu, n)?;
    let mut total = MultiPoly::zero(n);
    for t in crate::partition::reverse_tableaux(mu, n) {
        let psi = crate::symfun::psi_tableau_weight(&t, theta)?;
        if psi.is_zero() {
            continue;
        }
        let mut term = MultiPoly::constant(n, psi);
        for (i, j) in t.shape().boxes() {
            let entry = t.entry(i, j);
            let mut factor = MultiPoly::zero(n);
            let mut e = vec![0i64; n];
            e[entry - 1] = 1;
            factor.add_term(e, Q::one());
            factor.add_term(vec![0; n], -box_constant(i, j, entry, theta, h));
            term = term.mul(&factor);
        }
        total = total.add(&term);
    }
    let coeffs = symmetric_multipoly_to_monomial_basis(&total)
        .expect("tableau sum must be symmetric in the u variables");
    Ok(ShiftedSymPoly { n, theta: theta.clone(), h: h.clone(), coeffs })
}

/// Read a symmetric polynomial off a raw expansion, returning `None` if the
/// expansion is not in fact symmetric.
fn symmetric_multipoly_to_monomial_basis(p: &MultiPoly) -> Option<BTreeMap<Partition, Q>> {
    let mut coeffs = BTreeMap::new();
    for (e, c) in &p.terms {
        if e.iter().any(|&x| x < 0) {
            return None;
        }
        let sorted: Vec<usize> = {
            let mut v: Vec<usize> = e.iter().map(|&x| x as usize).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        let is_rep = e.iter().map(|&x| x as usize).eq(sorted.iter().cloned());
        let nu = Partition::from_sorted(sorted.into_iter().filter(|&x| x > 0).collect());
        if is_rep {
            coeffs.insert(nu, c.clone());
        }
    }
    // Every term must match its orbit representative's coefficient.
    for (e, c) in &p.terms {
        let mut v: Vec<usize> = e.iter().map(|&x| x as usize).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let nu = Partition::from_sorted(v.into_iter().filter(|&x| x > 0).collect());
        if coeffs.get(&nu) != Some(c) {
            return None;
        }
    }
    Some(coeffs)
}

fn check_shape(mu: &Partition, n: usize) -> Result<()> {
    if mu.len() > n {
        return Err(Error::Domain(format!(
            "shape {mu} has more rows than the {n} available variables"
        )));
    }
    Ok(())
}

/// Evaluate `I_μ(λ; θ; h)` at a single partition point by the
/// horizontal-strip chain recursion
/// `F(t, ρ) = Σ_{ρ/ρ' strip} ψ_{ρ/ρ'} Π_{(i,j) ∈ ρ/ρ'} (u_t - c_{ij}(t)²) F(t+1, ρ')`,
/// which runs in `O(n · #subshapes²)` instead of enumerating tableaux.
pub fn interp_value(
    mu: &Partition,
    lambda: &Partition,
    n: usize,
    theta: &Q,
    h: &Q,
) -> Result<Q> {
    check_shape(mu, n)?;
    let x = partition_point(lambda, n)?;
    let u = shifted_squares(&x, theta, h);
    let mut memo: HashMap<(usize, Partition), Q> = HashMap::new();
    fn rec(
        t: usize,
        rho: &Partition,
        n: usize,
        u: &[Q],
        theta: &Q,
        h: &Q,
        memo: &mut HashMap<(usize, Partition), Q>,
    ) -> Result<Q> {
        if t == n + 1 {
            return Ok(if rho.is_empty() { Q::one() } else { Q::zero() });
        }
        // Entries below t can only fill n - t + 1 more layers.
        if rho.len() > n - t + 1 {
            return Ok(Q::zero());
        }
        let key = (t, rho.clone());
        if let Some(v) = memo.get(&key) {
            return Ok(v.clone());
        }
        let mut acc = Q::zero();
        for prev in horizontal_strip_predecessors(rho) {
            let tail = rec(t + 1, &prev, n, u, theta, h, memo)?;
            if tail.is_zero() {
                continue;
            }
            let psi = jack_branching_psi(rho, &prev, theta)?;
            if psi.is_zero() {
                continue;
            }
            let mut weight = psi;
            for i in 1..=rho.len() {
                for j in prev.part(i) + 1..=rho.part(i) {
                    weight *= &u[t - 1] - box_constant(i, j, t, theta, h);
                }
            }
            acc += weight * tail;
        }
        memo.insert(key, acc.clone());
        Ok(acc)
    }
    rec(1, mu, n, &u, theta, h, &mut memo)
}

/// Coefficients of `I_μ` over `m_ν(u)` as polynomials in `h` (the other
/// parameters fixed). Each coefficient has degree ≤ 2|μ| in `h`; they are
/// recovered by sampling 2|μ| + 1 generic values and interpolating.
pub fn interp_symbolic_h(
    mu: &Partition,
    n: usize,
    theta: &Q,
) -> Result<BTreeMap<Partition, UniPoly>> {
    check_shape(mu, n)?;
    let samples = 2 * mu.size() + 1;
    let mut per_h: Vec<(Q, ShiftedSymPoly)> = Vec::with_capacity(samples);
    for j in 0..samples {
        // Values beyond θn keep the node family strictly separated.
        let h = theta * qi(n as i64) + qi(1 + j as i64);
        per_h.push((h.clone(), interp_newton(mu, n, theta, &h)?));
    }
    let mut support: std::collections::BTreeSet<Partition> = std::collections::BTreeSet::new();
    for (_, p) in &per_h {
        support.extend(p.coeffs.keys().cloned());
    }
    let mut out = BTreeMap::new();
    for nu in support {
        let points: Vec<(Q, Q)> = per_h.iter().map(|(h, p)| (h.clone(), p.coeff(&nu))).collect();
        let coeffs = linalg::lagrange_coefficients(&points).ok_or_else(|| {
            Error::DegenerateGrid("repeated h sample in coefficient interpolation".into())
        })?;
        let poly = UniPoly::new(coeffs);
        if !poly.is_zero() {
            out.insert(nu, poly);
        }
    }
    Ok(out)
}

/// `I_(1)(λ; θ; h) = Σ_i λ_i (λ_i + 2h - 2θi)`: the closed form used by the
/// growth estimates.
pub fn interp_one_box_value(lambda: &Partition, theta: &Q, h: &Q) -> Q {
    let mut acc = Q::zero();
    for (i0, &li) in lambda.parts().iter().enumerate() {
        let i = qi((i0 + 1) as i64);
        let l = qi(li as i64);
        acc += &l * (&l + qi(2) * h - qi(2) * theta * &i);
    }
    acc
}
