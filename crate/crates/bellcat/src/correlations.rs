//! Correlation measures for the damped Bell cat family and for general
//! two-qubit X-states: mutual information, measurement-conditioned entropy
//! and its minimization, the purification shortcut for the minimal
//! conditional entropy, classical correlation, quantum discord, and
//! concurrence.

use nalgebra::Matrix4;
use serde::Serialize;

use crate::cat::{pow_p, rank2_decomposition, CatDampingParams};
use crate::density::{
    binary_entropy, bloch_from_xstate, partial_trace, von_neumann_entropy,
    xstate_eigenvalues, BlochX, C64, HermMatrix2, Mat4, Spectrum, Subsystem, XMatrix4,
};
use crate::{Error, Result};

/// Polar/azimuthal parametrization of a projective measurement on qubit A.
/// (theta, phi) and (pi - theta, phi + pi) label the same projector pair up
/// to outcome swap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementAngles {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::Domain(format!("theta = {theta} outside [0, pi]")));
        }
        if !(0.0..2.0 * std::f64::consts::PI).contains(&phi) {
            return Err(Error::Domain(format!("phi = {phi} outside [0, 2pi)")));
        }
        Ok(Self { theta, phi })
    }
}

/// All measures for one parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationReport {
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub discord: f64,
    pub smin: f64,
    pub concurrence: f64,
    pub optimal_angles: MeasurementAngles,
}

/// Grid resolution and refinement tolerance for the conditional-entropy
/// minimization. The closed form provides an independent certificate, so
/// these are verification knobs rather than correctness assumptions.
#[derive(Debug, Clone, Copy)]
pub struct SearchGrid {
    pub n_theta: usize,
    pub n_phi: usize,
    pub refine_tol: f64,
}

impl Default for SearchGrid {
    fn default() -> Self {
        Self { n_theta: 181, n_phi: 181, refine_tol: 1e-10 }
    }
}

/// Quantum mutual information I = S(A) + S(B) - S(AB), closed form.
pub fn mutual_information(params: &CatDampingParams) -> Result<f64> {
    let p = params.p();
    let (rsq, tsq) = (params.rsq(), params.tsq());
    let den = 2.0 + 2.0 * p * p;
    Ok(binary_entropy((1.0 + p) * (1.0 + p) / den)?
        + binary_entropy((1.0 + pow_p(p, tsq)) * (1.0 + pow_p(p, rsq + 1.0)) / den)?
        - binary_entropy((1.0 + pow_p(p, rsq)) * (1.0 + pow_p(p, tsq + 1.0)) / den)?)
}

fn outcome_axis(m: &MeasurementAngles, k: usize) -> [f64; 3] {
    let sign = if k == 0 { 1.0 } else { -1.0 };
    [
        sign * m.theta.sin() * m.phi.cos(),
        sign * m.theta.sin() * m.phi.sin(),
        sign * m.theta.cos(),
    ]
}

/// Post-measurement ensemble on B: probabilities and conditional states for
/// the projective measurement (theta, phi) on A.
pub fn conditional_states(
    b: &BlochX,
    m: &MeasurementAngles,
) -> Result<[(f64, HermMatrix2); 2]> {
    let mut out = [(0.0, HermMatrix2::diagonal(0.0, 0.0)); 2];
    for k in 0..2 {
        let [s1, s2, s3] = outcome_axis(m, k);
        let pk = 0.5 * (1.0 + b.r30 * s3);
        if pk < 1e-14 {
            return Err(Error::Degenerate(format!("outcome {k} has probability {pk}")));
        }
        let q = 1.0 / (4.0 * pk);
        out[k] = (
            pk,
            HermMatrix2 {
                a11: q * (1.0 + b.r03 + (b.r30 + b.r33) * s3),
                a22: q * (1.0 - b.r03 + (b.r30 - b.r33) * s3),
                a12: C64::new(q * b.r11 * s1, -q * b.r22 * s2),
            },
        );
    }
    Ok(out)
}

/// Conditional entropy S~(theta, phi) = sum_k p_k H(1/2 + 1/2 sqrt(1 - 4 det rho_k)).
/// Outcomes with vanishing probability contribute zero.
pub fn conditional_entropy(b: &BlochX, m: &MeasurementAngles) -> Result<f64> {
    let mut s = 0.0;
    for k in 0..2 {
        let [s1, s2, s3] = outcome_axis(m, k);
        let pk = 0.5 * (1.0 + b.r30 * s3);
        if pk < 1e-14 {
            continue;
        }
        let q = 1.0 / (4.0 * pk);
        let a11 = q * (1.0 + b.r03 + (b.r30 + b.r33) * s3);
        let a22 = q * (1.0 - b.r03 + (b.r30 - b.r33) * s3);
        let off = q * q * (b.r11 * b.r11 * s1 * s1 + b.r22 * b.r22 * s2 * s2);
        let det = a11 * a22 - off;
        let disc = (1.0 - 4.0 * det).max(0.0).sqrt();
        s += pk * binary_entropy(0.5 + 0.5 * disc)?;
    }
    Ok(s)
}

/// Global minimum of the conditional entropy over projective measurements:
/// deterministic coarse grid scan followed by pattern-search refinement.
/// Ties on the grid break toward smaller theta, then smaller phi.
pub fn minimize_conditional_entropy(
    b: &BlochX,
    grid: &SearchGrid,
) -> (f64, MeasurementAngles) {
    use std::f64::consts::PI;
    let eval = |theta: f64, phi: f64| -> f64 {
        let m = MeasurementAngles { theta, phi };
        conditional_entropy(b, &m).unwrap_or(f64::INFINITY)
    };

    let mut best = (f64::INFINITY, 0.0, 0.0);
    let dt = PI / (grid.n_theta - 1) as f64;
    let dp = 2.0 * PI / grid.n_phi as f64;
    for i in 0..grid.n_theta {
        let theta = i as f64 * dt;
        let pole = i == 0 || i == grid.n_theta - 1;
        let n_phi = if pole { 1 } else { grid.n_phi };
        for j in 0..n_phi {
            let phi = j as f64 * dp;
            let v = eval(theta, phi);
            if v < best.0 {
                best = (v, theta, phi);
            }
        }
    }

    // pattern search around the grid argmin
    let (mut value, mut theta, mut phi) = best;
    let mut step = dt.max(dp);
    while step > grid.refine_tol {
        let mut moved = false;
        for (ds_t, ds_p) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            let t = (theta + ds_t).clamp(0.0, PI);
            let f = (phi + ds_p).rem_euclid(2.0 * PI);
            let v = eval(t, f);
            if v < value {
                value = v;
                theta = t;
                phi = f;
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    (value, MeasurementAngles { theta, phi })
}

/// Concurrence of the complementary state rho^BC of the purified family,
/// closed form.
pub fn bc_concurrence(params: &CatDampingParams) -> f64 {
    let p = params.p();
    let num = p * ((1.0 - pow_p(p, 2.0 * params.rsq()))
        * (1.0 - pow_p(p, 2.0 * params.tsq())))
    .sqrt();
    num / (1.0 + p * p)
}

/// Minimal conditional entropy via the entanglement of formation of
/// rho^BC: S~_min = H(1/2 + 1/2 sqrt(1 - C(rho^BC)^2)).
pub fn koashi_winter_smin(params: &CatDampingParams) -> Result<f64> {
    let c = bc_concurrence(params);
    binary_entropy(0.5 + 0.5 * (1.0 - c * c).max(0.0).sqrt())
}

/// Tripartite pure state whose C-marginal trace reproduces rho^AB.
/// Amplitude index is 4*i_A + 2*i_B + i_C over the {u, v} bases.
#[derive(Debug, Clone, PartialEq)]
pub struct Purification {
    pub amplitudes: [C64; 8],
}

impl Purification {
    /// Tr_C as a dense 4x4 on AB (basis uu, uv, vu, vv).
    pub fn reduced_ab(&self) -> Mat4 {
        let mut rho = Mat4::zeros();
        for m in 0..4 {
            for n in 0..4 {
                for c in 0..2 {
                    rho[(m, n)] += self.amplitudes[2 * m + c] * self.amplitudes[2 * n + c].conj();
                }
            }
        }
        rho
    }

    /// Tr_A as a dense 4x4 on BC (basis index 2*i_B + i_C).
    pub fn reduced_bc(&self) -> Mat4 {
        let mut rho = Mat4::zeros();
        for m in 0..4 {
            for n in 0..4 {
                for a in 0..2 {
                    rho[(m, n)] += self.amplitudes[4 * a + m] * self.amplitudes[4 * a + n].conj();
                }
            }
        }
        rho
    }

    /// Tr_B as a dense 4x4 on AC (basis index 2*i_A + i_C).
    pub fn reduced_ac(&self) -> Mat4 {
        let mut rho = Mat4::zeros();
        for m in 0..4 {
            for n in 0..4 {
                let (am, cm) = (m / 2, m % 2);
                let (an, cn) = (n / 2, n % 2);
                for b in 0..2 {
                    rho[(m, n)] +=
                        self.amplitudes[4 * am + 2 * b + cm] * self.amplitudes[4 * an + 2 * b + cn].conj();
                }
            }
        }
        rho
    }
}

/// Rank-2 purification |psi> = sqrt(l1) psi_1 (x) |u_C> + sqrt(l2) psi_2 (x) |v_C>.
pub fn purify(params: &CatDampingParams) -> Purification {
    let spec = rank2_decomposition(params);
    let vecs = spec.vectors.as_ref().unwrap();
    let mut amplitudes = [C64::new(0.0, 0.0); 8];
    for (branch, c_index) in [(0usize, 0usize), (1, 1)] {
        let w = spec.values[branch].max(0.0).sqrt();
        for ab in 0..4 {
            amplitudes[2 * ab + c_index] += w * vecs[branch][ab];
        }
    }
    Purification { amplitudes }
}

/// rho^BC = Tr_A of the purification, returned in X form (the rank-2
/// structure keeps it on the X pattern in the BC product basis).
pub fn rho_bc(params: &CatDampingParams) -> XMatrix4 {
    let dense = purify(params).reduced_bc();
    XMatrix4::from_matrix(&dense, 1e-12).expect("rho^BC must be X-shaped")
}

/// Classical correlation, closed form; equals S(B) - S~_min.
pub fn classical_correlation(params: &CatDampingParams) -> Result<f64> {
    let p = params.p();
    let (rsq, tsq) = (params.rsq(), params.tsq());
    let den = 1.0 + p * p;
    let root =
        (1.0 + p * p + pow_p(p, 2.0 * rsq + 2.0) + pow_p(p, 2.0 * tsq + 2.0)).sqrt();
    Ok(binary_entropy(0.5 + 0.5 * (pow_p(p, tsq) + pow_p(p, rsq + 1.0)) / den)?
        - binary_entropy((0.5 + 0.5 * root / den).min(1.0))?)
}

/// Quantum discord, closed form.
pub fn quantum_discord_closed(params: &CatDampingParams) -> Result<f64> {
    let p = params.p();
    let (rsq, tsq) = (params.rsq(), params.tsq());
    let den = 1.0 + p * p;
    let root =
        (1.0 + p * p + pow_p(p, 2.0 * rsq + 2.0) + pow_p(p, 2.0 * tsq + 2.0)).sqrt();
    let d = binary_entropy(0.5 + p / den)?
        + binary_entropy((0.5 + 0.5 * root / den).min(1.0))?
        - binary_entropy(0.5 + 0.5 * (pow_p(p, rsq) + pow_p(p, tsq + 1.0)) / den)?;
    Ok(clamp_small_negative(d))
}

fn clamp_small_negative(x: f64) -> f64 {
    if x < 0.0 && x > -1e-9 {
        0.0
    } else {
        x
    }
}

/// Full numerical report for an arbitrary X-state density: discord from the
/// minimized conditional entropy, D = S(A) + S~_min - S(AB).
///
/// Local phase rotations are applied first so the anti-diagonal entries are
/// real; no correlation measure changes under them.
pub fn quantum_discord_numeric(x: &XMatrix4, grid: &SearchGrid) -> Result<CorrelationReport> {
    x.validate_density()?;
    let rotated = XMatrix4 {
        d: x.d,
        z14: C64::new(x.z14.norm(), 0.0),
        z23: C64::new(x.z23.norm(), 0.0),
    };
    let bloch = bloch_from_xstate(&rotated);

    let s_a = von_neumann_entropy(&Spectrum::from_values(
        partial_trace(x, Subsystem::A).eigenvalues().to_vec(),
    ))?;
    let s_b = von_neumann_entropy(&Spectrum::from_values(
        partial_trace(x, Subsystem::B).eigenvalues().to_vec(),
    ))?;
    let s_ab = von_neumann_entropy(&xstate_eigenvalues(x))?;

    let (smin, optimal_angles) = minimize_conditional_entropy(&bloch, grid);
    let mutual = s_a + s_b - s_ab;
    let classical = clamp_small_negative(s_b - smin);
    let discord = clamp_small_negative(s_a + smin - s_ab);
    Ok(CorrelationReport {
        mutual_information: mutual,
        classical_correlation: classical,
        discord,
        smin,
        concurrence: concurrence_xstate(x),
        optimal_angles,
    })
}

/// X-state concurrence: 2 max{0, |z14| - sqrt(d2 d3), |z23| - sqrt(d1 d4)}.
pub fn concurrence_xstate(x: &XMatrix4) -> f64 {
    let outer = x.z14.norm() - (x.d[1] * x.d[2]).max(0.0).sqrt();
    let inner = x.z23.norm() - (x.d[0] * x.d[3]).max(0.0).sqrt();
    (2.0 * outer.max(inner)).max(0.0)
}

/// Wootters concurrence of a general two-qubit density from the spin-flip
/// spectrum: max{0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)} where
/// mu_i are the eigenvalues of rho (sy x sy) rho* (sy x sy).
///
/// The square roots are computed directly as the singular values of the
/// complex symmetric matrix tau = X^T (sy x sy) X, where the columns of X
/// are the eigenvectors of rho scaled by the square roots of its
/// eigenvalues. The nonzero eigenvalues of rho rho~ are the squared
/// singular values of tau, so this avoids taking square roots of
/// eigenvalue-level noise.
pub fn concurrence_wootters(rho: &Mat4) -> f64 {
    let y: Mat4 = Matrix4::from_fn(|i, j| {
        if i + j == 3 {
            let s = if i == 0 || i == 3 { -1.0 } else { 1.0 };
            C64::new(s, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let eig = rho.symmetric_eigen();
    let sqrt_diag =
        Matrix4::from_diagonal(&eig.eigenvalues.map(|v| C64::new(v.max(0.0).sqrt(), 0.0)));
    let x = eig.eigenvectors * sqrt_diag;
    let tau = x.transpose() * y * x;
    let mut sigma: Vec<f64> = tau.svd(false, false).singular_values.iter().copied().collect();
    sigma.sort_by(|a, b| b.partial_cmp(a).unwrap());
    (sigma[0] - sigma[1] - sigma[2] - sigma[3]).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::damped_bell_xstate;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn params(p: f64, rsq: f64) -> CatDampingParams {
        CatDampingParams::new(p, rsq).unwrap()
    }

    #[test]
    fn mutual_information_limits() {
        // Bell-state limit: p -> 0, no damping
        let i = mutual_information(&params(1e-12, 0.0)).unwrap();
        assert!((i - 2.0).abs() < 1e-9, "I = {i}");
        // fully decohered product limit
        let i = mutual_information(&params(1e-12, 1.0)).unwrap();
        assert!(i.abs() < 1e-9, "I = {i}");
    }

    #[test]
    fn mutual_information_matches_entropy_pipeline() {
        for (p, rsq) in [(0.5, 0.5), (0.3, 0.2), (0.8, 0.7)] {
            let pr = params(p, rsq);
            let x = damped_bell_xstate(&pr);
            let s_a = von_neumann_entropy(&Spectrum::from_values(
                partial_trace(&x, Subsystem::A).eigenvalues().to_vec(),
            ))
            .unwrap();
            let s_b = von_neumann_entropy(&Spectrum::from_values(
                partial_trace(&x, Subsystem::B).eigenvalues().to_vec(),
            ))
            .unwrap();
            let s_ab = von_neumann_entropy(&xstate_eigenvalues(&x)).unwrap();
            assert!((mutual_information(&pr).unwrap() - (s_a + s_b - s_ab)).abs() < 1e-12);
        }
    }

    #[test]
    fn conditional_states_sigma3_measurement() {
        let pr = params(0.5, 0.5);
        let b = bloch_from_xstate(&damped_bell_xstate(&pr));
        let m = MeasurementAngles::new(0.0, 0.0).unwrap();
        let states = conditional_states(&b, &m).unwrap();
        assert!((states[0].0 - 0.5 * (1.0 + b.r30)).abs() < 1e-14);
        assert!((states[1].0 - 0.5 * (1.0 - b.r30)).abs() < 1e-14);
        assert!((states[0].0 + states[1].0 - 1.0).abs() < 1e-14);
        for (_, rho) in states {
            rho.validate_density().unwrap();
        }
    }

    #[test]
    fn conditional_states_maximally_mixed() {
        let b = BlochX { r30: 0.0, r03: 0.0, r11: 0.0, r22: 0.0, r33: 0.0 };
        let m = MeasurementAngles::new(1.1, 2.3).unwrap();
        for (pk, rho) in conditional_states(&b, &m).unwrap() {
            assert!((pk - 0.5).abs() < 1e-14);
            assert!((rho.a11 - 0.5).abs() < 1e-14);
            assert!((rho.a22 - 0.5).abs() < 1e-14);
            assert!(rho.a12.norm() < 1e-14);
        }
    }

    #[test]
    fn conditional_entropy_product_state_is_marginal_entropy() {
        // r11 = r22 = r33 = 0 makes the state a product; measuring A cannot
        // change B.
        let b = BlochX { r30: 0.3, r03: 0.4, r11: 0.0, r22: 0.0, r33: 0.12 };
        // r33 = r30*r03 keeps it an exact product
        let s_b = binary_entropy(0.5 * (1.0 + b.r03)).unwrap();
        for (theta, phi) in [(0.0, 0.0), (FRAC_PI_2, 0.0), (1.0, 2.0), (PI, 0.0)] {
            let m = MeasurementAngles::new(theta, phi).unwrap();
            let s = conditional_entropy(&b, &m).unwrap();
            assert!((s - s_b).abs() < 1e-12, "theta={theta} phi={phi}: {s} vs {s_b}");
        }
    }

    #[test]
    fn conditional_entropy_pure_branches() {
        // pure Bell cat limit: conditional states are pure at any angles
        let pr = params(0.5, 0.0);
        let b = bloch_from_xstate(&damped_bell_xstate(&pr));
        let m = MeasurementAngles::new(FRAC_PI_2, 0.0).unwrap();
        let states = conditional_states(&b, &m).unwrap();
        for (_, rho) in states {
            assert!(rho.det().abs() < 1e-12);
        }
        assert!(conditional_entropy(&b, &m).unwrap() < 1e-9);
    }

    #[test]
    fn stated_optimum_matches_koashi_winter() {
        let pr = params(0.5, 0.5);
        let b = bloch_from_xstate(&damped_bell_xstate(&pr));
        let m = MeasurementAngles::new(FRAC_PI_2, 0.0).unwrap();
        let s = conditional_entropy(&b, &m).unwrap();
        assert!((s - koashi_winter_smin(&pr).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn minimizer_agrees_with_closed_form() {
        let grid = SearchGrid::default();
        for (p, rsq) in [(0.2, 0.3), (0.5, 0.5), (0.8, 0.1), (0.4, 0.9)] {
            let pr = params(p, rsq);
            let b = bloch_from_xstate(&damped_bell_xstate(&pr));
            let (smin, _) = minimize_conditional_entropy(&b, &grid);
            let kw = koashi_winter_smin(&pr).unwrap();
            assert!((smin - kw).abs() < 1e-8, "({p},{rsq}): {smin} vs {kw}");
        }
    }

    #[test]
    fn minimizer_beats_denser_verification_grid() {
        let b = bloch_from_xstate(&damped_bell_xstate(&params(0.45, 0.35)));
        let (smin, _) = minimize_conditional_entropy(&b, &SearchGrid::default());
        let dense = SearchGrid { n_theta: 601, n_phi: 601, refine_tol: 1e-3 };
        let (dense_min, _) = minimize_conditional_entropy(&b, &dense);
        assert!(smin <= dense_min + 1e-8);
    }

    #[test]
    fn koashi_winter_limits() {
        assert!(koashi_winter_smin(&params(0.5, 0.0)).unwrap().abs() < 1e-15);
        assert!(koashi_winter_smin(&params(0.5, 1.0)).unwrap().abs() < 1e-15);
    }

    #[test]
    fn purification_traces_back_to_state() {
        for (p, rsq) in [(0.5, 0.5), (0.2, 0.8), (0.9, 0.3)] {
            let pr = params(p, rsq);
            let x = damped_bell_xstate(&pr).to_matrix();
            let ab = purify(&pr).reduced_ab();
            assert!((ab - x).norm() < 1e-12, "({p},{rsq})");
        }
    }

    #[test]
    fn purification_purity_balances_marginals() {
        // S(AC) = S(B) for a pure tripartite state
        let pr = params(0.6, 0.4);
        let psi = purify(&pr);
        let s_ac = von_neumann_entropy(&Spectrum::from_values(crate::density::hermitian_eigenvalues(
            &psi.reduced_ac(),
        )))
        .unwrap();
        let s_b = von_neumann_entropy(&Spectrum::from_values(
            partial_trace(&damped_bell_xstate(&pr), Subsystem::B)
                .eigenvalues()
                .to_vec(),
        ))
        .unwrap();
        assert!((s_ac - s_b).abs() < 1e-10);
    }

    #[test]
    fn rho_bc_concurrence_matches_closed_form() {
        for (p, rsq) in [(0.5, 0.5), (0.3, 0.2), (0.7, 0.8), (0.1, 0.6)] {
            let pr = params(p, rsq);
            let w = concurrence_wootters(&rho_bc(&pr).to_matrix());
            assert!((w - bc_concurrence(&pr)).abs() < 1e-10, "({p},{rsq})");
        }
    }

    #[test]
    fn classical_correlation_identity() {
        for (p, rsq) in [(0.5, 0.5), (0.2, 0.9), (0.8, 0.15)] {
            let pr = params(p, rsq);
            let s_b = von_neumann_entropy(&Spectrum::from_values(
                partial_trace(&damped_bell_xstate(&pr), Subsystem::B)
                    .eigenvalues()
                    .to_vec(),
            ))
            .unwrap();
            let lhs = classical_correlation(&pr).unwrap();
            let rhs = s_b - koashi_winter_smin(&pr).unwrap();
            assert!((lhs - rhs).abs() < 1e-9, "({p},{rsq}): {lhs} vs {rhs}");
        }
    }

    #[test]
    fn classical_correlation_pure_state_is_marginal_entropy() {
        let pr = params(0.5, 0.0);
        let s_b = von_neumann_entropy(&Spectrum::from_values(
            partial_trace(&damped_bell_xstate(&pr), Subsystem::B)
                .eigenvalues()
                .to_vec(),
        ))
        .unwrap();
        assert!((classical_correlation(&pr).unwrap() - s_b).abs() < 1e-12);
    }

    #[test]
    fn discord_pure_limit() {
        for p in [0.1, 0.5, 0.9] {
            let pr = params(p, 0.0);
            let expected = binary_entropy(0.5 + p / (1.0 + p * p)).unwrap();
            assert!((quantum_discord_closed(&pr).unwrap() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn discord_full_reflection_vanishes() {
        for p in [0.1, 0.5, 0.9] {
            assert!(quantum_discord_closed(&params(p, 1.0)).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn discord_numeric_maximally_mixed() {
        let report =
            quantum_discord_numeric(&XMatrix4::maximally_mixed(), &SearchGrid::default()).unwrap();
        assert!(report.mutual_information.abs() < 1e-12);
        assert!(report.classical_correlation.abs() < 1e-12);
        assert!(report.discord.abs() < 1e-12);
        assert!(report.concurrence.abs() < 1e-12);
    }

    #[test]
    fn discord_numeric_matches_closed_form() {
        let grid = SearchGrid::default();
        for (p, rsq) in [(0.4, 0.5), (0.7, 0.2), (0.15, 0.85)] {
            let pr = params(p, rsq);
            let report = quantum_discord_numeric(&damped_bell_xstate(&pr), &grid).unwrap();
            let closed = quantum_discord_closed(&pr).unwrap();
            assert!(
                (report.discord - closed).abs() < 1e-6,
                "({p},{rsq}): {} vs {closed}",
                report.discord
            );
        }
    }

    #[test]
    fn concurrence_closed_form_family() {
        for (p, rsq) in [(0.5_f64, 0.5_f64), (0.2, 0.3), (0.9, 0.8)] {
            let pr = params(p, rsq);
            let expected = p.powf(rsq)
                * ((1.0 - p * p) * (1.0 - p.powf(2.0 * (1.0 - rsq)))).sqrt()
                / (1.0 + p * p);
            let got = concurrence_xstate(&damped_bell_xstate(&pr));
            assert!((got - expected).abs() < 1e-12, "({p},{rsq})");
        }
    }

    #[test]
    fn concurrence_product_state() {
        assert_eq!(concurrence_xstate(&XMatrix4::diagonal([0.4, 0.3, 0.2, 0.1])), 0.0);
        assert_eq!(
            concurrence_wootters(&XMatrix4::diagonal([0.4, 0.3, 0.2, 0.1]).to_matrix()),
            0.0
        );
    }

    #[test]
    fn wootters_pure_bell_cat() {
        for p in [0.1_f64, 0.5, 0.9] {
            let pr = params(p, 0.0);
            let expected = (1.0 - p * p) / (1.0 + p * p);
            let got = concurrence_wootters(&damped_bell_xstate(&pr).to_matrix());
            assert!((got - expected).abs() < 1e-10, "p={p}");
        }
    }

    #[test]
    fn wootters_matches_xstate_closed_form() {
        for (p, rsq) in [(0.5, 0.5), (0.25, 0.75), (0.8, 0.2)] {
            let x = damped_bell_xstate(&params(p, rsq));
            let a = concurrence_xstate(&x);
            let b = concurrence_wootters(&x.to_matrix());
            assert!((a - b).abs() < 1e-10, "({p},{rsq}): {a} vs {b}");
        }
    }

    #[test]
    fn pure_input_discord_equals_entanglement_of_formation() {
        for p in [0.2_f64, 0.5, 0.8] {
            let pr = params(p, 0.0);
            let c = (1.0 - p * p) / (1.0 + p * p);
            let eof = binary_entropy(0.5 + 0.5 * (1.0 - c * c).sqrt()).unwrap();
            assert!((quantum_discord_closed(&pr).unwrap() - eof).abs() < 1e-10);
        }
    }
}
