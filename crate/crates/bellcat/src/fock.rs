//! Independent first-principles verification in truncated Fock space:
//! coherent-state superpositions, the exact beam-splitter rule on coherent
//! inputs, trace-out of the loss mode, and projection onto the even/odd cat
//! qubit bases. Everything here is built from Fock amplitudes and inner
//! products only, with no reference to the closed-form matrices it checks.

use crate::cat::{QSuperposition, TwoModeSuperposition};
use crate::density::{C64, HermMatrix2, Mat4, XMatrix4};
use crate::{Error, Result};

/// State vector in a Fock space truncated at `dim` levels.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    pub amplitudes: Vec<C64>,
}

impl FockVector {
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// <self|other>.
    pub fn inner(&self, other: &FockVector) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Weight lost to truncation, 1 - |amplitudes|^2.
    pub fn truncation_deficit(&self) -> f64 {
        1.0 - self.norm_sqr()
    }

    pub fn scale(&self, f: C64) -> FockVector {
        FockVector { amplitudes: self.amplitudes.iter().map(|a| a * f).collect() }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        FockVector {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Coherent state |alpha> in the truncated number basis:
/// amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
pub fn coherent_fock(alpha: C64, dim: usize) -> FockVector {
    let mut amplitudes = Vec::with_capacity(dim);
    let mut term = C64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
    for n in 0..dim {
        if n > 0 {
            term *= alpha / (n as f64).sqrt();
        }
        amplitudes.push(term);
    }
    FockVector { amplitudes }
}

/// Error if a constructed vector lost more than `tol` of its weight.
pub fn check_truncation(v: &FockVector, tol: f64) -> Result<()> {
    let deficit = v.truncation_deficit();
    if deficit > tol {
        Err(Error::Truncation { deficit, dim: v.dim() })
    } else {
        Ok(())
    }
}

/// Beam-splitter action on |n, 0>: amplitudes over |n-m, m> for m = 0..n,
/// the SU(2) coherent-state profile with xi = r/t.
pub fn beam_splitter_n0(n: usize, xi: C64) -> Vec<C64> {
    let scale = (1.0 + xi.norm_sqr()).powf(-(n as f64) / 2.0);
    let mut out = Vec::with_capacity(n + 1);
    let mut coeff = C64::new(scale, 0.0);
    for m in 0..=n {
        out.push(coeff);
        // advance sqrt(binom(n, m+1)) = sqrt(binom(n, m) * (n-m)/(m+1))
        if m < n {
            coeff *= xi * ((n - m) as f64 / (m + 1) as f64).sqrt();
        }
    }
    out
}

/// Orthonormal even/odd cat basis: u = (|a> + |-a>)/(2 a_alpha),
/// v = (|a> - |-a>)/(2 b_alpha).
pub fn qubit_basis(alpha_mag: f64, dim: usize) -> Result<(FockVector, FockVector)> {
    let p = (-2.0 * alpha_mag * alpha_mag).exp();
    let a = (0.5 * (1.0 + p)).sqrt();
    let b = (0.5 * (1.0 - p)).sqrt();
    if b < 1e-8 {
        return Err(Error::Degenerate(format!(
            "odd-cat amplitude {b} too small at |alpha| = {alpha_mag}"
        )));
    }
    let plus = coherent_fock(C64::new(alpha_mag, 0.0), dim);
    let minus = coherent_fock(C64::new(-alpha_mag, 0.0), dim);
    let u = plus.add(&minus).scale(C64::new(1.0 / (2.0 * a), 0.0));
    let v = plus.add(&minus.scale(C64::new(-1.0, 0.0))).scale(C64::new(1.0 / (2.0 * b), 0.0));
    Ok((u, v))
}

/// Qubit basis for the transmitted mode. When the transmitted amplitude is
/// below the degeneracy cutoff (e.g. a fully reflecting splitter), falls
/// back to the alpha -> 0 limit of the even/odd cat basis, {|0>, |1>}; the
/// replacement error in v is O(alpha^2) < 1e-16 there.
fn transmitted_basis(alpha_mag: f64, dim: usize) -> Result<(FockVector, FockVector)> {
    match qubit_basis(alpha_mag, dim) {
        Err(Error::Degenerate(_)) => {
            let mut u = vec![C64::new(0.0, 0.0); dim];
            let mut v = vec![C64::new(0.0, 0.0); dim];
            u[0] = C64::new(1.0, 0.0);
            v[1] = C64::new(1.0, 0.0);
            Ok((FockVector { amplitudes: u }, FockVector { amplitudes: v }))
        }
        other => other,
    }
}

/// Oracle output: a qubit-basis density renormalized by its computed trace,
/// together with the pre-normalization deficit.
#[derive(Debug, Clone)]
pub struct OracleOutput<M> {
    pub matrix: M,
    pub deficit: f64,
}

/// One branch of a superposition after the splitter: a coefficient, the
/// qubit-space projection of the signal modes, and the loss-mode vector.
struct Branch {
    coeff: C64,
    signal: Vec<C64>,
    loss: FockVector,
}

/// Trace out the loss mode of sum_i coeff_i |signal_i>|loss_i> and return
/// the signal-space density, renormalized by its trace.
///
/// With `loss_basis = None` the trace uses exact inner products; otherwise
/// it sums projections onto the supplied orthonormal vectors (used to check
/// basis independence of the trace-out).
fn trace_out_loss(
    branches: &[Branch],
    signal_dim: usize,
    loss_basis: Option<&[FockVector]>,
) -> Result<(Vec<Vec<C64>>, f64)> {
    let n = branches.len();
    let mut gram = vec![vec![C64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            // Tr_l |w_i><w_j| = <w_j|w_i>
            gram[i][j] = match loss_basis {
                None => branches[j].loss.inner(&branches[i].loss),
                Some(basis) => basis
                    .iter()
                    .map(|e| branches[j].loss.inner(e) * e.inner(&branches[i].loss))
                    .sum(),
            };
        }
    }
    let mut rho = vec![vec![C64::new(0.0, 0.0); signal_dim]; signal_dim];
    for i in 0..n {
        for j in 0..n {
            let w = branches[i].coeff * branches[j].coeff.conj() * gram[i][j];
            for k in 0..signal_dim {
                for l in 0..signal_dim {
                    rho[k][l] += w * branches[i].signal[k] * branches[j].signal[l].conj();
                }
            }
        }
    }
    let trace: f64 = (0..signal_dim).map(|k| rho[k][k].re).sum();
    if trace <= 1e-14 {
        return Err(Error::Degenerate("oracle density has vanishing trace".into()));
    }
    for row in rho.iter_mut() {
        for e in row.iter_mut() {
            *e /= trace;
        }
    }
    Ok((rho, 1.0 - trace))
}

fn bell_branches(alpha_mag: f64, rsq: f64, dim: usize) -> Result<Vec<Branch>> {
    let t = (1.0 - rsq).sqrt();
    let r = rsq.sqrt();
    let p = (-2.0 * alpha_mag * alpha_mag).exp();
    let n_alpha = 2.0 * (1.0 + p * p);
    let coeff = C64::new(1.0 / n_alpha.sqrt(), 0.0);

    let (u, v) = qubit_basis(alpha_mag, dim)?;
    let (ut, vt) = transmitted_basis(alpha_mag * t, dim)?;

    let mut branches = Vec::new();
    for sign in [1.0, -1.0] {
        let xa = coherent_fock(C64::new(sign * alpha_mag, 0.0), dim);
        let xb = coherent_fock(C64::new(sign * alpha_mag * t, 0.0), dim);
        let loss = coherent_fock(C64::new(sign * alpha_mag * r, 0.0), dim);
        let pa = [u.inner(&xa), v.inner(&xa)];
        let pb = [ut.inner(&xb), vt.inner(&xb)];
        let mut signal = Vec::with_capacity(4);
        for i in 0..2 {
            for j in 0..2 {
                signal.push(pa[i] * pb[j]);
            }
        }
        branches.push(Branch { coeff, signal, loss });
    }
    Ok(branches)
}

fn to_mat4(rho: &[Vec<C64>]) -> Mat4 {
    Mat4::from_fn(|i, j| rho[i][j])
}

/// Two-qubit density of the Bell cat-state after beam-splitter damping,
/// built entirely from Fock amplitudes: exact coherent-splitter rule,
/// loss-mode trace-out, qubit-basis projection.
pub fn damped_bell_oracle(alpha_mag: f64, rsq: f64, dim: usize) -> Result<OracleOutput<XMatrix4>> {
    let (rho, deficit) = trace_out_loss(&bell_branches(alpha_mag, rsq, dim)?, 4, None)?;
    let matrix = XMatrix4::from_matrix(&to_mat4(&rho), 1e-9)?;
    Ok(OracleOutput { matrix, deficit })
}

/// Same construction with the loss trace taken in an explicit orthonormal
/// basis instead of the number basis.
pub fn damped_bell_oracle_in_loss_basis(
    alpha_mag: f64,
    rsq: f64,
    dim: usize,
    loss_basis: &[FockVector],
) -> Result<OracleOutput<XMatrix4>> {
    let (rho, deficit) =
        trace_out_loss(&bell_branches(alpha_mag, rsq, dim)?, 4, Some(loss_basis))?;
    let matrix = XMatrix4::from_matrix(&to_mat4(&rho), 1e-9)?;
    Ok(OracleOutput { matrix, deficit })
}

/// Single-mode counterpart: damp a|{-alpha}> + b|alpha> and express the
/// transmitted mode in its even/odd cat basis.
pub fn damped_single_mode_oracle(
    qs: &QSuperposition,
    alpha_mag: f64,
    rsq: f64,
    dim: usize,
) -> Result<OracleOutput<HermMatrix2>> {
    let t = (1.0 - rsq).sqrt();
    let r = rsq.sqrt();
    let norm = qs.normalization();
    let (ut, vt) = transmitted_basis(alpha_mag * t, dim)?;

    let mut branches = Vec::new();
    for (amp, sign) in [(qs.a, -1.0), (qs.b, 1.0)] {
        let xb = coherent_fock(C64::new(sign * alpha_mag * t, 0.0), dim);
        let loss = coherent_fock(C64::new(sign * alpha_mag * r, 0.0), dim);
        branches.push(Branch {
            coeff: amp / C64::new(norm.sqrt(), 0.0),
            signal: vec![ut.inner(&xb), vt.inner(&xb)],
            loss,
        });
    }
    let (rho, deficit) = trace_out_loss(&branches, 2, None)?;
    Ok(OracleOutput {
        matrix: HermMatrix2 { a11: rho[0][0].re, a22: rho[1][1].re, a12: rho[0][1] },
        deficit,
    })
}

/// Two-mode counterpart; the reduced state is a dense 4x4 in general.
pub fn damped_two_mode_oracle(
    tms: &TwoModeSuperposition,
    alpha_mag: f64,
    rsq: f64,
    dim: usize,
) -> Result<OracleOutput<Mat4>> {
    let t = (1.0 - rsq).sqrt();
    let r = rsq.sqrt();
    let norm = tms.normalization_sq().sqrt();
    let (u, v) = qubit_basis(alpha_mag, dim)?;
    let (ut, vt) = transmitted_basis(alpha_mag * t, dim)?;

    let amps = [
        C64::new(tms.omega.sqrt() / norm, 0.0),
        C64::from_polar((1.0 - tms.omega).sqrt() / norm, tms.chi_phase),
    ];
    let mut branches = Vec::new();
    for (amp, sign) in [(amps[0], 1.0), (amps[1], -1.0)] {
        let xa = coherent_fock(C64::new(sign * alpha_mag, 0.0), dim);
        let xb = coherent_fock(C64::new(sign * alpha_mag * t, 0.0), dim);
        let loss = coherent_fock(C64::new(sign * alpha_mag * r, 0.0), dim);
        let pa = [u.inner(&xa), v.inner(&xa)];
        let pb = [ut.inner(&xb), vt.inner(&xb)];
        let mut signal = Vec::with_capacity(4);
        for i in 0..2 {
            for j in 0..2 {
                signal.push(pa[i] * pb[j]);
            }
        }
        branches.push(Branch { coeff: amp, signal, loss });
    }
    let (rho, deficit) = trace_out_loss(&branches, 4, None)?;
    Ok(OracleOutput { matrix: to_mat4(&rho), deficit })
}
