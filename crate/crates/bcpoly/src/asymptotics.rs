//! Large-rank behaviour: realizing row/column frequency profiles as concrete
//! partitions, the one-variable limit profile function and its multiplicative
//! extension to the torus, desk-scale convergence experiments, exact
//! normalization-ratio checks, moment growth bounds, and the parameter
//! dictionary for the classical compact symmetric-space series.

use crate::interp::{interp_one_box_value, interp_value};
use crate::jacobi::{c_denominator, one_variable_fourier, ParamTriple};
use crate::partition::Partition;
use crate::rational::{fmt_q, pow_q, q, q_to_f64, qi, Q};
use crate::symfun::{hook_products, VKParams};
use crate::{Error, Result};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// `⌊x·n⌋` for a nonnegative rational frequency `x`.
fn floor_times(x: &Q, n: usize) -> usize {
    (x * qi(n as i64))
        .floor()
        .to_integer()
        .to_usize()
        .expect("frequency × size overflows usize")
}

/// Realize a frequency profile as a concrete partition with `n` available
/// rows. The diagram is assembled from three blocks, top to bottom:
///
/// 1. rows of length `⌊α_i n⌋` (the row frequencies),
/// 2. a near-square block of `⌊γn⌋` cells (width `⌈√⌊γn⌋⌉`), so that the
///    excess mass shows up in `|λ|/n` but vanishes from both the row and the
///    column frequency estimates as `n` grows,
/// 3. the columns `⌊β_j n⌋`, left-justified (the column frequencies).
///
/// Rows of length zero are skipped. The operation errors when the blocks do
/// not stack into a weakly decreasing shape or more than `n` rows are needed;
/// it never truncates.
pub fn vk_realize(vk: &VKParams, n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::Domain("n must be a positive integer".into()));
    }
    let mut rows: Vec<usize> = Vec::new();
    for al in &vk.alpha {
        let r = floor_times(al, n);
        if r > 0 {
            rows.push(r);
        }
    }
    let g = floor_times(&vk.gamma, n);
    if g > 0 {
        let mut s = 1usize;
        while s * s < g {
            s += 1;
        }
        if let Some(&last) = rows.last() {
            if last < s {
                return Err(Error::InfeasibleRealization(format!(
                    "n = {n} too small: excess block of width {s} under a row of length {last}"
                )));
            }
        }
        rows.extend(std::iter::repeat(s).take(g / s));
        if g % s > 0 {
            rows.push(g % s);
        }
    }
    let heights: Vec<usize> = vk
        .beta
        .iter()
        .map(|b| floor_times(b, n))
        .filter(|&h| h > 0)
        .collect();
    if let Some(&tallest) = heights.first() {
        // Left-justified columns of the given heights, read off as rows:
        // row k of the block has length #{j : heights_j ≥ k}.
        let widths: Vec<usize> = (1..=tallest)
            .map(|k| heights.iter().filter(|&&h| h >= k).count())
            .collect();
        if let Some(&last) = rows.last() {
            if last < widths[0] {
                return Err(Error::InfeasibleRealization(format!(
                    "n = {n} too small: column block of width {} under a row of length {last}",
                    widths[0]
                )));
            }
        }
        rows.extend(widths);
    }
    if rows.len() > n {
        return Err(Error::InfeasibleRealization(format!(
            "n = {n} too small: profile needs {} rows",
            rows.len()
        )));
    }
    Partition::new(rows)
        .map_err(|_| Error::InfeasibleRealization("blocks do not stack monotonically".into()))
}

/// The one-variable limit profile
///
/// `φ(x) = e^{γ(x−1)} · Π_i [1 + (β_i/2)·((2θ+ā+b̄−θβ_i)/(θ+ā))·(x−1)]
///                    / Π_i [1 − (α_i/(2θ))·((2θ+ā+b̄+α_i)/(θ+ā))·(x−1)]^θ`,
///
/// where `ā` and `b̄` are the growth rates of the parameters relative to the
/// rank (zero when the parameters stay fixed). Evaluation is in floating
/// point; a vanishing or negative denominator base is reported as a pole.
pub fn limit_phi(vk: &VKParams, theta: &Q, a_bar: &Q, b_bar: &Q, x: f64) -> Result<f64> {
    if theta <= &Q::zero() {
        return Err(Error::Domain(format!("θ must be positive, got {}", fmt_q(theta))));
    }
    if a_bar.is_negative() || b_bar.is_negative() {
        return Err(Error::Domain(
            "the scaled parameter limits ā, b̄ must be nonnegative".into(),
        ));
    }
    let th = q_to_f64(theta);
    let ab = q_to_f64(a_bar);
    let bb = q_to_f64(b_bar);
    let dx = x - 1.0;
    let mut acc = (q_to_f64(&vk.gamma) * dx).exp();
    for b in &vk.beta {
        let bf = q_to_f64(b);
        acc *= 1.0 + 0.5 * bf * (2.0 * th + ab + bb - th * bf) / (th + ab) * dx;
    }
    for a in &vk.alpha {
        let af = q_to_f64(a);
        let base = 1.0 - af / (2.0 * th) * (2.0 * th + ab + bb + af) / (th + ab) * dx;
        if base <= 0.0 {
            return Err(Error::Domain(format!("pole encountered at x = {x}")));
        }
        acc /= base.powf(th);
    }
    Ok(acc)
}

/// The limit profile at a unit-modulus point `z`, with `ā = b̄ = 0`, computed
/// through the factorized form over the pair `(z, z̄)`:
///
/// `φ = e^{γ(z+z̄−2)/2} · Π_i |1 + (β_i/2)(z−1)|² / Π_i |1 − (α_i/(2θ))(z−1)|^{2θ}`.
///
/// Equivalent to [`limit_phi`] at `x = (z + z⁻¹)/2` via
/// `(1 − c(z−1))(1 − c(z̄−1)) = 1 − 2c(1+c)(x−1)`.
pub fn limit_phi_z(vk: &VKParams, theta: &Q, z: Complex64) -> Result<f64> {
    if theta <= &Q::zero() {
        return Err(Error::Domain(format!("θ must be positive, got {}", fmt_q(theta))));
    }
    if (z.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::Domain(format!("z = {z} is not on the unit circle")));
    }
    let th = q_to_f64(theta);
    let one = Complex64::new(1.0, 0.0);
    let zm1 = z - one;
    let zcm1 = z.conj() - one;
    let mut acc = (0.5 * q_to_f64(&vk.gamma) * (zm1 + zcm1).re).exp();
    for b in &vk.beta {
        let c = 0.5 * q_to_f64(b);
        acc *= ((one + c * zm1) * (one + c * zcm1)).re;
    }
    for a in &vk.alpha {
        let c = q_to_f64(a) / (2.0 * th);
        let base = ((one - c * zm1) * (one - c * zcm1)).re;
        if base <= 0.0 {
            return Err(Error::Domain(format!("pole encountered at z = {z}")));
        }
        acc /= base.powf(th);
    }
    Ok(acc)
}

/// The multiplicative extension `Φ(z_1, …, z_k) = Π_j φ((z_j + z_j⁻¹)/2)` of
/// the limit profile to tuples of unit-modulus points (`ā = b̄ = 0`).
/// Real-valued since each factor pairs `z_j` with its conjugate.
pub fn limit_phi_product(vk: &VKParams, theta: &Q, zs: &[Complex64]) -> Result<f64> {
    let mut acc = 1.0;
    for &z in zs {
        acc *= limit_phi_z(vk, theta, z)?;
    }
    Ok(acc)
}

/// One row of a convergence experiment: the partition realized at rank `n`
/// and the sup-distance, over the sample grid, between the one-variable
/// restriction of the normalized polynomial and the limit profile.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub n: usize,
    pub lambda: Partition,
    pub sup_error: f64,
    pub grid_size: usize,
}

/// For each rank in `sizes`: realize the profile, expand the one-variable
/// restriction `Φ_λ(x, 1, …, 1)` in powers of `x − 1` (exactly), and measure
/// the sup-distance to the limit profile over `grid`. The parameters `a, b`
/// are held constant, so the limit profile is taken at `ā = b̄ = 0`.
pub fn convergence_experiment(
    vk: &VKParams,
    params: &ParamTriple,
    sizes: &[usize],
    grid: &[f64],
) -> Result<Vec<ConvergenceRow>> {
    if grid.is_empty() {
        return Err(Error::Domain("the sample grid must be nonempty".into()));
    }
    let zero = Q::zero();
    let mut out = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let lambda = vk_realize(vk, n)?;
        let coeffs: Vec<f64> = one_variable_fourier(&lambda, n, params)?
            .iter()
            .map(q_to_f64)
            .collect();
        let mut sup = 0.0f64;
        for &x in grid {
            let mut val = 0.0;
            for c in coeffs.iter().rev() {
                val = val * (x - 1.0) + c;
            }
            let err = (val - limit_phi(vk, &params.theta, &zero, &zero, x)?).abs();
            if err > sup {
                sup = err;
            }
        }
        out.push(ConvergenceRow { n, lambda, sup_error: sup, grid_size: grid.len() });
    }
    Ok(out)
}

/// An affine schedule `n ↦ slope·n + intercept` for a parameter that may
/// grow with the rank; `slope` is its growth rate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRule {
    pub slope: Q,
    pub intercept: Q,
}

impl AffineRule {
    pub fn new(slope: Q, intercept: Q) -> Self {
        AffineRule { slope, intercept }
    }

    pub fn constant(c: Q) -> Self {
        AffineRule { slope: Q::zero(), intercept: c }
    }

    pub fn eval(&self, n: usize) -> Q {
        &self.slope * qi(n as i64) + &self.intercept
    }
}

/// Exact ratio of the binomial-formula denominator `C(n, μ; θ; a_n, b_n)` to
/// its predicted large-`n` growth
///
/// `(H/H') · 4^{|μ|} · θ^{|μ|} · (θ+ā)^{|μ|} · n^{2|μ|}`,
///
/// where `ā` is the growth rate of `a_n` and `(H, H')` are the two hook
/// products of `μ`. The ratio tends to 1; each entry is exactly rational.
pub fn c_asymptotics_check(
    mu: &Partition,
    theta: &Q,
    a_rule: &AffineRule,
    b_rule: &AffineRule,
    sizes: &[usize],
) -> Result<Vec<(usize, Q)>> {
    if a_rule.slope.is_negative() || b_rule.slope.is_negative() {
        return Err(Error::Domain(
            "parameter schedules must have nonnegative growth rates".into(),
        ));
    }
    let k = mu.size();
    let (h, hp) = hook_products(mu, theta);
    let fixed =
        h / hp * pow_q(&qi(4), k) * pow_q(theta, k) * pow_q(&(theta + &a_rule.slope), k);
    let mut out = Vec::with_capacity(sizes.len());
    for &n in sizes {
        if n == 0 || mu.len() > n {
            return Err(Error::Domain(format!(
                "rank {n} cannot hold a {}-row shape",
                mu.len()
            )));
        }
        let a_n = a_rule.eval(n);
        let b_n = b_rule.eval(n);
        if a_n <= qi(-1) || b_n <= qi(-1) {
            return Err(Error::Domain(format!(
                "schedule leaves the admissible range a, b > -1 at n = {n}"
            )));
        }
        let params = ParamTriple::new(theta.clone(), a_n, b_n)?;
        let c = c_denominator(n, mu, &params)?;
        out.push((n, c / (&fixed * pow_q(&qi(n as i64), 2 * k))));
    }
    Ok(out)
}

/// One row of the moment-growth report along a partition sequence.
#[derive(Clone, Debug)]
pub struct GrowthRow {
    pub n: usize,
    pub lambda: Partition,
    /// `I_(1)(λ; θ; h_n)`, the first spectral moment.
    pub one_box: Q,
    /// `I_(2)(λ; θ; h_n)`, the second spectral moment.
    pub two_box: Q,
    /// Whether `I_(2) ≤ I_(1)²` held at this rank.
    pub bound_holds: bool,
    /// `|λ|/n`.
    pub size_ratio: f64,
    /// `I_(1)/n²`.
    pub moment_ratio: f64,
}

/// Evaluate the one- and two-box interpolation values along a sequence of
/// `(n, λ(n))` pairs and check the growth bound `I_(2)(λ) ≤ I_(1)(λ)²`,
/// which is guaranteed whenever `h_n ≥ θn − 1/2`; the operation refuses
/// schedules that violate that hypothesis. The reported ratios `|λ|/n` and
/// `I_(1)/n²` stay bounded exactly when the sequence has linear row growth.
pub fn growth_checks(
    seq: &[(usize, Partition)],
    theta: &Q,
    h_rule: &AffineRule,
) -> Result<Vec<GrowthRow>> {
    let two = Partition::from_sorted(vec![2]);
    let mut out = Vec::with_capacity(seq.len());
    for (n, lambda) in seq {
        let n = *n;
        if n == 0 || lambda.len() > n {
            return Err(Error::Domain(format!(
                "rank {n} cannot hold a {}-row shape",
                lambda.len()
            )));
        }
        let h = h_rule.eval(n);
        let floor = theta * qi(n as i64) - q(1, 2);
        if h < floor {
            return Err(Error::Domain(format!(
                "h = {} at n = {n} violates the growth hypothesis h ≥ θn − 1/2 = {}",
                fmt_q(&h),
                fmt_q(&floor)
            )));
        }
        let one_box = interp_one_box_value(lambda, theta, &h);
        let two_box = interp_value(&two, lambda, n, theta, &h)?;
        let bound_holds = two_box <= &one_box * &one_box;
        out.push(GrowthRow {
            n,
            lambda: lambda.clone(),
            size_ratio: lambda.size() as f64 / n as f64,
            moment_ratio: q_to_f64(&one_box) / (n * n) as f64,
            one_box,
            two_box,
            bound_holds,
        });
    }
    Ok(out)
}

/// Coefficients through `t^degree` of the specialized kernel series
/// `ε ∘ π_τ (Π_j (1 − x_j t)^{−θ})`: the substitution `x ↦ x(x+τ)` applied
/// to the generating series of the `g_k`, then specialized at the profile.
/// Exactly rational.
pub fn specialized_kernel_series(
    vk: &VKParams,
    theta: &Q,
    tau: &Q,
    degree: usize,
) -> Result<Vec<Q>> {
    if theta <= &Q::zero() {
        return Err(Error::Domain(format!("θ must be positive, got {}", fmt_q(theta))));
    }
    Ok(crate::symfun::g_series(theta, degree)
        .iter()
        .map(|g| {
            crate::symfun::epsilon_specialize(&crate::symfun::pi_tau(g, tau), vk, theta)
        })
        .collect())
}

/// Coefficients through `t^degree` of the closed rational form the
/// specialized kernel series must equal:
///
/// `e^{γθτt} · Π_i (1 + θβ_i(τ − θβ_i) t) / Π_i (1 − α_i(τ + α_i) t)^θ`.
pub fn kernel_series_closed_form(
    vk: &VKParams,
    theta: &Q,
    tau: &Q,
    degree: usize,
) -> Result<Vec<Q>> {
    if theta <= &Q::zero() {
        return Err(Error::Domain(format!("θ must be positive, got {}", fmt_q(theta))));
    }
    let mul_in = |series: &mut Vec<Q>, factor: &[Q]| {
        let mut out = vec![Q::zero(); degree + 1];
        for i in 0..=degree {
            for j in 0..=degree - i {
                let t = &series[i] * &factor[j];
                out[i + j] += t;
            }
        }
        *series = out;
    };
    let mut acc = vec![Q::zero(); degree + 1];
    acc[0] = Q::one();
    // e^{γθτ t}
    let gtt = &vk.gamma * theta * tau;
    let mut exp_series = vec![Q::zero(); degree + 1];
    let mut term = Q::one();
    for (k, slot) in exp_series.iter_mut().enumerate() {
        if k > 0 {
            term = term * &gtt / qi(k as i64);
        }
        *slot = term.clone();
    }
    mul_in(&mut acc, &exp_series);
    // Π (1 + θβ(τ − θβ) t)
    for b in &vk.beta {
        let c = theta * b * (tau - theta * b);
        let mut lin = vec![Q::zero(); degree + 1];
        lin[0] = Q::one();
        lin[1] = c;
        mul_in(&mut acc, &lin);
    }
    // Π (1 − α(τ + α) t)^{−θ} = Σ_k rising(θ, k)/k! · (α(τ+α))^k t^k
    for a in &vk.alpha {
        let c = a * (tau + a);
        let mut neg = vec![Q::zero(); degree + 1];
        let mut term = Q::one();
        for (k, slot) in neg.iter_mut().enumerate() {
            if k > 0 {
                term = term * (theta + qi(k as i64 - 1)) * &c / qi(k as i64);
            }
            *slot = term.clone();
        }
        mul_in(&mut acc, &neg);
    }
    Ok(acc)
}

/// Restricted root system of a symmetric-space series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystem {
    B,
    C,
    D,
    BC,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystem::B => write!(f, "B_n"),
            RootSystem::C => write!(f, "C_n"),
            RootSystem::D => write!(f, "D_n"),
            RootSystem::BC => write!(f, "BC_n"),
        }
    }
}

/// Parity choice for the series whose parameters depend on whether the
/// ambient dimension is even or odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// One line of the parameter dictionary for the classical series of compact
/// symmetric spaces `G(n)/K(n)` whose spherical functions restrict to this
/// family. Series 1–3 (the type-A / unitary-group series) belong to a
/// different one-parameter family and are rejected as out of scope.
#[derive(Clone, Debug)]
pub struct SeriesEntry {
    pub series_id: u32,
    /// The ambient group `G(n)`.
    pub group: String,
    /// The fixed-point subgroup `K(n)`.
    pub subgroup: String,
    pub theta: Q,
    pub a: Q,
    pub b: Q,
    pub root_system: RootSystem,
    pub parity: Option<Parity>,
    /// Set when the restricted root system is `D_n`, where the spherical
    /// functions span only the even part of the polynomial family and the
    /// dictionary applies with that caveat.
    pub dn_caveat: bool,
}

/// Look up the `(θ, a, b)` parameters of a symmetric-space series by its
/// row number in the classical dictionary. Series 7 and 10 depend on the
/// parity of the ambient dimension and require an explicit choice; the
/// other series reject a parity option.
pub fn table2_params(series_id: u32, parity: Option<Parity>) -> Result<SeriesEntry> {
    match series_id {
        1..=3 => return Err(Error::OutOfScopeSeries(series_id)),
        4..=10 => {}
        _ => {
            return Err(Error::Domain(format!(
                "series id {series_id} is not in the dictionary (rows 4–10)"
            )))
        }
    }
    let needs_parity = matches!(series_id, 7 | 10);
    if needs_parity && parity.is_none() {
        return Err(Error::MissingParity(series_id));
    }
    if !needs_parity && parity.is_some() {
        return Err(Error::Domain(format!(
            "series {series_id} does not take a parity option"
        )));
    }
    let (group, subgroup, theta, a, b, root_system) = match (series_id, parity) {
        (4, None) => ("O(2n)", "O(n) x O(n)", q(1, 2), q(-1, 2), q(-1, 2), RootSystem::D),
        (5, None) => ("Sp(n)", "U(n)", q(1, 2), qi(0), qi(0), RootSystem::C),
        (6, None) => ("U(2n)", "U(n) x U(n)", qi(1), qi(0), qi(0), RootSystem::C),
        (7, Some(Parity::Even)) => {
            ("O(m) x O(m), m = 2n", "O(m)", qi(1), q(-1, 2), q(-1, 2), RootSystem::D)
        }
        (7, Some(Parity::Odd)) => {
            ("O(m) x O(m), m = 2n+1", "O(m)", qi(1), q(1, 2), q(-1, 2), RootSystem::B)
        }
        (8, None) => ("Sp(n) x Sp(n)", "Sp(n)", qi(1), q(1, 2), q(1, 2), RootSystem::C),
        (9, None) => ("Sp(2n)", "Sp(n) x Sp(n)", qi(2), qi(1), qi(1), RootSystem::C),
        (10, Some(Parity::Even)) => ("O(2m), m = 2n", "U(m)", qi(2), qi(0), qi(0), RootSystem::C),
        (10, Some(Parity::Odd)) => {
            ("O(2m), m = 2n+1", "U(m)", qi(2), qi(2), qi(0), RootSystem::BC)
        }
        _ => unreachable!("parity constraints already enforced"),
    };
    Ok(SeriesEntry {
        series_id,
        group: group.into(),
        subgroup: subgroup.into(),
        theta,
        a,
        b,
        dn_caveat: root_system == RootSystem::D,
        root_system,
        parity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{epsilon_specialize, jack_in_p_basis, pi_tau, SymFunc};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vk(alpha: &[Q], beta: &[Q], gamma: Q) -> VKParams {
        VKParams::new(alpha.to_vec(), beta.to_vec(), gamma).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn realize_row_and_column_blocks() {
        assert_eq!(vk_realize(&vk(&[q(1, 2)], &[], qi(0)), 4).unwrap(), p(&[2]));
        assert_eq!(vk_realize(&vk(&[], &[q(1, 2)], qi(0)), 4).unwrap(), p(&[1, 1]));
        // Excess goes into a near-square block below the rows.
        assert_eq!(
            vk_realize(&vk(&[q(1, 2)], &[], q(1, 2)), 8).unwrap(),
            p(&[4, 2, 2])
        );
        // All three blocks together.
        assert_eq!(
            vk_realize(&vk(&[q(1, 2), q(1, 4)], &[q(1, 8)], qi(0)), 8).unwrap(),
            p(&[4, 2, 1])
        );
        // Two columns out of a wider excess block.
        assert_eq!(
            vk_realize(&vk(&[], &[q(1, 4), q(1, 4)], q(1, 2)), 8).unwrap(),
            p(&[2, 2, 2, 2])
        );
        assert_eq!(vk_realize(&vk(&[], &[], Q::zero()), 5).unwrap(), Partition::empty());
    }

    #[test]
    fn realize_rejects_too_small_ranks() {
        // Excess block wider than the last row above it.
        let e = vk_realize(&vk(&[q(1, 4)], &[], q(1, 2)), 4).unwrap_err();
        assert!(matches!(e, Error::InfeasibleRealization(_)), "{e}");
        // Row block plus full-height column block exceeds n rows.
        let e = vk_realize(&vk(&[q(1, 2)], &[Q::one()], qi(0)), 4).unwrap_err();
        assert!(matches!(e, Error::InfeasibleRealization(_)), "{e}");
        // A full-height column block alone fits exactly.
        assert_eq!(
            vk_realize(&vk(&[], &[Q::one()], qi(0)), 4).unwrap(),
            p(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn realized_ratios_track_the_profile() {
        let profile = vk(&[q(1, 2), q(1, 3)], &[], qi(0));
        for n in [8usize, 16, 64] {
            let lam = vk_realize(&profile, n).unwrap();
            for (i, al) in profile.alpha.iter().enumerate() {
                let ratio = q(lam.part(i + 1) as i64, n as i64);
                assert!((ratio - al).abs() <= q(1, n as i64));
            }
        }
        // Column frequencies are exact on the conjugate side.
        let cols = vk(&[], &[q(1, 2), q(1, 4)], qi(0));
        let lam = vk_realize(&cols, 16).unwrap();
        assert_eq!(lam.conjugate(), p(&[8, 4]));
        // Excess contributes to |λ|/n but not to the leading row or column
        // frequency estimates: both are O(√n), checked at a desk scale.
        let dust = vk(&[], &[], Q::one());
        let lam = vk_realize(&dust, 400).unwrap();
        assert_eq!(lam.size(), 400);
        assert!(lam.part(1) <= 20 && lam.len() <= 20);
    }

    #[test]
    fn limit_profile_normalization_and_fixture() {
        let zero = Q::zero();
        let one = Q::one();
        // Empty profile ⟹ constant 1; x = 1 ⟹ 1 for any profile.
        let empty = vk(&[], &[], Q::zero());
        for x in [-1.0, -0.3, 0.5, 1.0] {
            assert_eq!(limit_phi(&empty, &one, &zero, &zero, x).unwrap(), 1.0);
        }
        let mixed = vk(&[q(1, 3)], &[q(1, 5)], q(1, 7));
        assert!((limit_phi(&mixed, &q(1, 2), &zero, &zero, 1.0).unwrap() - 1.0).abs() < 1e-15);
        // Single row frequency 1/2 at θ = 1: φ(−1) = 4/9.
        let single = vk(&[q(1, 2)], &[], Q::zero());
        let v = limit_phi(&single, &one, &zero, &zero, -1.0).unwrap();
        assert!((v - 4.0 / 9.0).abs() < 1e-15, "{v}");
        // A pole outside the admissible range is reported as such.
        let e = limit_phi(&vk(&[Q::one()], &[], Q::zero()), &one, &zero, &zero, 3.0).unwrap_err();
        assert!(matches!(e, Error::Domain(ref m) if m.contains("pole")), "{e}");
    }

    #[test]
    fn circle_route_matches_interval_route() {
        let zero = Q::zero();
        let mut rng = ChaCha8Rng::seed_from_u64(404);
        for _ in 0..5 {
            let alpha: Vec<Q> = {
                let a1 = q(rng.gen_range(1..=4), 8);
                let a2 = q(rng.gen_range(0..=2), 8);
                let mut v = vec![a1, a2];
                v.sort_by(|x, y| y.cmp(x));
                v
            };
            let beta = vec![q(rng.gen_range(0..=3), 8)];
            let gamma = q(rng.gen_range(0..=4), 8);
            let profile = VKParams::new(alpha, beta, gamma).unwrap();
            let theta = [q(1, 2), Q::one(), qi(2)][rng.gen_range(0..3)].clone();
            for k in 0..=16 {
                let t = std::f64::consts::PI * (k as f64) / 16.0;
                let z = Complex64::new(t.cos(), t.sin());
                let via_circle = limit_phi_z(&profile, &theta, z).unwrap();
                let via_interval = limit_phi(&profile, &theta, &zero, &zero, t.cos()).unwrap();
                assert!(
                    (via_circle - via_interval).abs() <= 1e-12 * (1.0 + via_interval.abs()),
                    "θ={theta} z={z}: {via_circle} vs {via_interval}"
                );
            }
        }
    }

    #[test]
    fn product_form_is_multiplicative_and_bounded() {
        let profile = vk(&[q(1, 2)], &[q(1, 4)], q(1, 8));
        let theta = Q::one();
        let z1 = Complex64::from_polar(1.0, 0.7);
        let z2 = Complex64::from_polar(1.0, 2.4);
        let both = limit_phi_product(&profile, &theta, &[z1, z2]).unwrap();
        let one = limit_phi_product(&profile, &theta, &[z1]).unwrap();
        let two = limit_phi_product(&profile, &theta, &[z2]).unwrap();
        assert!((both - one * two).abs() < 1e-14);
        assert_eq!(limit_phi_product(&profile, &theta, &[]).unwrap(), 1.0);
        let at_one = limit_phi_product(&profile, &theta, &[Complex64::new(1.0, 0.0)]).unwrap();
        assert!((at_one - 1.0).abs() < 1e-15);
        // Values stay within [0, 1] on the circle for profiles in [0, 1]
        // (positive-definiteness heritage, checked empirically).
        for k in 0..=20 {
            let t = std::f64::consts::PI * (k as f64) / 20.0;
            let z = Complex64::from_polar(1.0, t);
            let v = limit_phi_product(&profile, &theta, &[z]).unwrap();
            assert!((0.0..=1.0 + 1e-12).contains(&v), "t={t}: {v}");
        }
        let e = limit_phi_product(&profile, &theta, &[Complex64::new(1.5, 0.0)]).unwrap_err();
        assert!(matches!(e, Error::Domain(_)), "{e}");
    }

    #[test]
    fn convergence_toward_the_limit_profile() {
        // Single row frequency 1/2 at θ = 1, a = b = 1/2: the normalized
        // one-variable restrictions approach the limit profile.
        let profile = vk(&[q(1, 2)], &[], Q::zero());
        let params = ParamTriple::new(Q::one(), q(1, 2), q(1, 2)).unwrap();
        let grid: Vec<f64> = (0..17).map(|k| -1.0 + 2.0 * (k as f64) / 16.0).collect();
        let rows = convergence_experiment(&profile, &params, &[8, 16, 32], &grid).unwrap();
        assert_eq!(rows[0].lambda, p(&[4]));
        assert_eq!(rows[1].lambda, p(&[8]));
        assert_eq!(rows[2].lambda, p(&[16]));
        assert!(rows[0].sup_error > rows[1].sup_error);
        assert!(rows[1].sup_error > rows[2].sup_error);
        assert!(rows[2].sup_error < rows[0].sup_error / 2.0);
        // Empty profile: the restriction is constantly 1, so the error
        // vanishes identically.
        let empty = vk(&[], &[], Q::zero());
        for row in convergence_experiment(&empty, &params, &[4, 8], &grid).unwrap() {
            assert_eq!(row.sup_error, 0.0);
            assert_eq!(row.grid_size, 17);
        }
        // Column case at θ = 1/2, a = 0, b = −1/2.
        let cols = vk(&[], &[q(1, 2)], Q::zero());
        let params = ParamTriple::new(q(1, 2), Q::zero(), q(-1, 2)).unwrap();
        let rows = convergence_experiment(&cols, &params, &[8, 16, 32], &grid).unwrap();
        assert!(rows[0].sup_error > rows[1].sup_error);
        assert!(rows[1].sup_error > rows[2].sup_error);
    }

    #[test]
    fn normalization_ratio_is_exactly_one_in_the_closed_case() {
        // C(n, (1); 1; 0, 0) = 4n·((n−1)+1) = 4n², so the ratio is 1.
        let rows = c_asymptotics_check(
            &p(&[1]),
            &Q::one(),
            &AffineRule::constant(Q::zero()),
            &AffineRule::constant(Q::zero()),
            &[1, 2, 5, 10, 100],
        )
        .unwrap();
        for (n, ratio) in rows {
            assert!(ratio.is_one(), "n={n}: {}", fmt_q(&ratio));
        }
    }

    #[test]
    fn normalization_ratio_approaches_one() {
        // One-box shape: C = 4n(n + a_n), so a pure-slope schedule a_n = n/2
        // gives 4n·(3n/2) = 6n², exactly the predicted growth.
        for (n, ratio) in c_asymptotics_check(
            &p(&[1]),
            &Q::one(),
            &AffineRule::new(q(1, 2), Q::zero()),
            &AffineRule::constant(Q::zero()),
            &[3, 30, 300],
        )
        .unwrap()
        {
            assert!(ratio.is_one(), "n={n}: {}", fmt_q(&ratio));
        }
        // An intercept perturbs the ratio by O(1/n): 1 + 2/(3n) here.
        let rows = c_asymptotics_check(
            &p(&[1]),
            &Q::one(),
            &AffineRule::new(q(1, 2), Q::one()),
            &AffineRule::constant(Q::zero()),
            &[10, 40, 400],
        )
        .unwrap();
        for (n, ratio) in &rows {
            assert_eq!(ratio.clone(), Q::one() + q(2, 3 * *n as i64));
        }
        let errs: Vec<Q> = rows.iter().map(|(_, r)| (r - Q::one()).abs()).collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2]);
        assert!(errs[2] < q(1, 100));
        // Two-box shapes, fixed parameters: within 10% of the limit at n = 200.
        for shape in [p(&[2]), p(&[1, 1])] {
            let rows = c_asymptotics_check(
                &shape,
                &Q::one(),
                &AffineRule::constant(Q::zero()),
                &AffineRule::constant(Q::zero()),
                &[200],
            )
            .unwrap();
            let (_, ratio) = &rows[0];
            assert!((ratio - Q::one()).abs() <= q(1, 10), "{shape}: {}", fmt_q(ratio));
        }
    }

    #[test]
    fn growth_bound_along_simple_sequences() {
        // λ(n) = (n) with h_n = n + 1 at θ = 1.
        let seq: Vec<(usize, Partition)> = (1..=20).map(|n| (n, p(&[n]))).collect();
        let rule = AffineRule::new(Q::one(), Q::one());
        for row in growth_checks(&seq, &Q::one(), &rule).unwrap() {
            assert!(row.bound_holds, "n={}", row.n);
            assert!((row.size_ratio - 1.0).abs() < 1e-15);
        }
        // λ(n) = (1): the first moment grows linearly, so I_(1)/n² → 0.
        let seq: Vec<(usize, Partition)> = [2usize, 8, 32].iter().map(|&n| (n, p(&[1]))).collect();
        let rows = growth_checks(&seq, &Q::one(), &rule).unwrap();
        assert!(rows[2].moment_ratio < rows[0].moment_ratio);
        assert!(rows.iter().all(|r| r.bound_holds));
        // The hypothesis h ≥ θn − 1/2 is enforced.
        let e = growth_checks(&[(4, p(&[2]))], &qi(2), &AffineRule::constant(qi(3))).unwrap_err();
        assert!(matches!(e, Error::Domain(ref m) if m.contains("hypothesis")), "{e}");
    }

    #[test]
    fn growth_bound_on_random_partitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let thetas = [q(1, 2), Q::one(), qi(2)];
        for trial in 0..50 {
            let n = rng.gen_range(1..=6usize);
            let mut parts: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=5)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::from_sorted(parts.into_iter().filter(|&x| x > 0).collect());
            let theta = thetas[rng.gen_range(0..3)].clone();
            // Smallest admissible h plus a random nonnegative offset.
            let h = &theta * qi(n as i64) - q(1, 2) + q(rng.gen_range(0..8), 4);
            let rule = AffineRule::constant(h.clone());
            let rows = growth_checks(&[(n, lam.clone())], &theta, &rule).unwrap();
            assert!(rows[0].bound_holds, "trial {trial}: λ={lam} n={n} θ={theta} h={}", fmt_q(&h));
        }
    }

    /// ε ∘ π_τ applied to the generating-series coefficients `g_r` must
    /// reproduce the coefficients of the closed rational form
    /// `e^{γθτt} Π_i (1 + θβ_i(τ − θβ_i) t) / Π_i (1 − α_i(τ + α_i) t)^θ`.
    #[test]
    fn specialized_kernel_series_matches_closed_form() {
        let degree = 6usize;
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..5 {
            let mut alpha = vec![q(rng.gen_range(1..=6), 4), q(rng.gen_range(0..=3), 4)];
            alpha.sort_by(|x, y| y.cmp(x));
            let beta = vec![q(rng.gen_range(0..=4), 4)];
            let gamma = q(rng.gen_range(0..=5), 4);
            let profile = VKParams::new(alpha, beta, gamma).unwrap();
            let theta = [q(1, 2), Q::one(), qi(2), q(5, 3)][rng.gen_range(0..4)].clone();
            let tau = q(rng.gen_range(-3..=6), 2);

            let lhs = specialized_kernel_series(&profile, &theta, &tau, degree).unwrap();
            let rhs = kernel_series_closed_form(&profile, &theta, &tau, degree).unwrap();
            assert_eq!(lhs.len(), degree + 1);
            assert_eq!(lhs, rhs, "θ={theta} τ={tau}");
            // Degree-0 sanity: both start at 1.
            assert!(lhs[0].is_one());
        }
    }

    /// The scaled interpolation values along a realized sequence approach
    /// the specialization of their top-degree symmetric-function part: for
    /// `f = I_μ` with `|μ| ≤ 2`, `f(λ(n); h_n)/n^{2|μ|}` tends to
    /// `ε(π_{2h̄}(P_μ))` with `h̄ = θ + (ā+b̄)/2`.
    #[test]
    fn scaled_moments_approach_their_specializations() {
        let profile = vk(&[q(1, 2)], &[], Q::zero());
        let theta = Q::one();
        let params = ParamTriple::new(theta.clone(), q(1, 2), q(1, 2)).unwrap();
        let n = 64usize;
        let lam = vk_realize(&profile, n).unwrap();
        let h = params.h_for(n);
        let h_bar = theta.clone(); // fixed a, b ⟹ ā = b̄ = 0
        for mu in [p(&[1]), p(&[2]), p(&[1, 1])] {
            let scaled = interp_value(&mu, &lam, n, &theta, &h).unwrap()
                / pow_q(&qi(n as i64), 2 * mu.size());
            let top = pi_tau(&jack_in_p_basis(&mu, &theta).unwrap(), &(qi(2) * &h_bar));
            let target = epsilon_specialize(&top, &profile, &theta);
            let diff = q_to_f64(&(&scaled - &target)).abs();
            assert!(diff <= 0.05, "μ={mu}: {} vs {} (diff {diff})", fmt_q(&scaled), fmt_q(&target));
        }
        // Exact fixture for the one-box case: I_(1)((32); 1; 65)/64² = 5/4
        // and ε(π₂(p₁)) = ε(p₂ + 2p₁) = 1/4 + 1 = 5/4.
        let one_box = interp_one_box_value(&p(&[32]), &theta, &h);
        assert_eq!(one_box / qi(64 * 64), q(5, 4));
        let top = pi_tau(&SymFunc::power_sum(1), &qi(2));
        assert_eq!(epsilon_specialize(&top, &profile, &theta), q(5, 4));
    }

    #[test]
    fn dictionary_rows_match_the_frozen_table() {
        let s6 = table2_params(6, None).unwrap();
        assert_eq!(
            (s6.theta.clone(), s6.a.clone(), s6.b.clone(), s6.root_system),
            (qi(1), qi(0), qi(0), RootSystem::C)
        );
        assert_eq!(s6.group, "U(2n)");
        assert_eq!(s6.subgroup, "U(n) x U(n)");
        assert!(!s6.dn_caveat);

        let s9 = table2_params(9, None).unwrap();
        assert_eq!(
            (s9.theta.clone(), s9.a.clone(), s9.b.clone(), s9.root_system),
            (qi(2), qi(1), qi(1), RootSystem::C)
        );

        let s4 = table2_params(4, None).unwrap();
        assert_eq!(
            (s4.theta.clone(), s4.a.clone(), s4.b.clone(), s4.root_system),
            (q(1, 2), q(-1, 2), q(-1, 2), RootSystem::D)
        );
        assert!(s4.dn_caveat);

        let s5 = table2_params(5, None).unwrap();
        assert_eq!(
            (s5.theta.clone(), s5.a.clone(), s5.b.clone(), s5.root_system),
            (q(1, 2), qi(0), qi(0), RootSystem::C)
        );

        let s7e = table2_params(7, Some(Parity::Even)).unwrap();
        assert_eq!(
            (s7e.theta.clone(), s7e.a.clone(), s7e.b.clone(), s7e.root_system),
            (qi(1), q(-1, 2), q(-1, 2), RootSystem::D)
        );
        assert!(s7e.dn_caveat);
        let s7o = table2_params(7, Some(Parity::Odd)).unwrap();
        assert_eq!(
            (s7o.theta.clone(), s7o.a.clone(), s7o.b.clone(), s7o.root_system),
            (qi(1), q(1, 2), q(-1, 2), RootSystem::B)
        );
        assert!(!s7o.dn_caveat);

        let s8 = table2_params(8, None).unwrap();
        assert_eq!(
            (s8.theta.clone(), s8.a.clone(), s8.b.clone(), s8.root_system),
            (qi(1), q(1, 2), q(1, 2), RootSystem::C)
        );

        let s10e = table2_params(10, Some(Parity::Even)).unwrap();
        assert_eq!(
            (s10e.theta.clone(), s10e.a.clone(), s10e.b.clone(), s10e.root_system),
            (qi(2), qi(0), qi(0), RootSystem::C)
        );
        let s10o = table2_params(10, Some(Parity::Odd)).unwrap();
        assert_eq!(
            (s10o.theta.clone(), s10o.a.clone(), s10o.b.clone(), s10o.root_system),
            (qi(2), qi(2), qi(0), RootSystem::BC)
        );

        // Every in-scope row sits in the orthogonality regime a ≥ b ≥ −1/2.
        for (id, parity) in [
            (4, None),
            (5, None),
            (6, None),
            (7, Some(Parity::Even)),
            (7, Some(Parity::Odd)),
            (8, None),
            (9, None),
            (10, Some(Parity::Even)),
            (10, Some(Parity::Odd)),
        ] {
            let entry = table2_params(id, parity).unwrap();
            assert!(entry.a >= entry.b && entry.b >= q(-1, 2), "series {id}");
            assert_eq!(entry.dn_caveat, entry.root_system == RootSystem::D);
        }
    }

    #[test]
    fn dictionary_rejects_malformed_requests() {
        for id in [1u32, 2, 3] {
            let e = table2_params(id, None).unwrap_err();
            assert!(matches!(e, Error::OutOfScopeSeries(got) if got == id), "{e}");
        }
        for id in [7u32, 10] {
            let e = table2_params(id, None).unwrap_err();
            assert!(matches!(e, Error::MissingParity(got) if got == id), "{e}");
        }
        let e = table2_params(8, Some(Parity::Even)).unwrap_err();
        assert!(matches!(e, Error::Domain(_)), "{e}");
        let e = table2_params(11, None).unwrap_err();
        assert!(matches!(e, Error::Domain(_)), "{e}");
        let e = table2_params(0, None).unwrap_err();
        assert!(matches!(e, Error::Domain(_)), "{e}");
    }

    #[test]
    fn affine_rules_evaluate_and_guard() {
        let rule = AffineRule::new(q(1, 2), qi(-1));
        assert_eq!(rule.eval(10), qi(4));
        assert_eq!(AffineRule::constant(q(3, 2)).eval(999), q(3, 2));
        let e = c_asymptotics_check(
            &p(&[1]),
            &Q::one(),
            &AffineRule::constant(qi(-2)),
            &AffineRule::constant(Q::zero()),
            &[3],
        )
        .unwrap_err();
        assert!(matches!(e, Error::Domain(ref m) if m.contains("admissible")), "{e}");
    }
}
