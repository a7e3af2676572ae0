//! Qubit-mapped density matrices of coherent-state superpositions after
//! beam-splitter amplitude damping: the single-mode state, the two-mode
//! state, and the damped Bell cat-state family.

use num_complex::Complex64;

use crate::density::{C64, HermMatrix2, Mat4, Spectrum, XMatrix4};
use crate::{Error, Result};

/// Parameters of the damped Bell cat family: the overlap p = <-a|a> of the
/// encoding coherent states and the beam-splitter reflection fraction r^2.
/// Everything else (transmission, channel overlap, even/odd cat amplitudes)
/// derives from these two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatDampingParams {
    p: f64,
    rsq: f64,
}

impl CatDampingParams {
    pub fn new(p: f64, rsq: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("overlap p = {p} outside [0,1]")));
        }
        if !(0.0..=1.0).contains(&rsq) {
            return Err(Error::Domain(format!("reflection fraction rsq = {rsq} outside [0,1]")));
        }
        Ok(Self { p, rsq })
    }

    /// Construct from the coherent amplitude magnitude |alpha| instead of p.
    pub fn from_alpha(alpha_mag: f64, rsq: f64) -> Result<Self> {
        if alpha_mag < 0.0 {
            return Err(Error::Domain(format!("|alpha| = {alpha_mag} negative")));
        }
        Self::new((-2.0 * alpha_mag * alpha_mag).exp(), rsq)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn rsq(&self) -> f64 {
        self.rsq
    }

    /// Transmission fraction t^2 = 1 - r^2.
    pub fn tsq(&self) -> f64 {
        1.0 - self.rsq
    }

    /// Channel overlap c = p^(r^2) of the reflected coherent components.
    /// p^0 is taken as 1 even at p = 0, so rsq = 0 is always the pure limit.
    pub fn c(&self) -> f64 {
        pow_p(self.p, self.rsq)
    }

    /// Even-cat amplitude of mode A: a = sqrt((1+p)/2).
    pub fn a_alpha(&self) -> f64 {
        (0.5 * (1.0 + self.p)).sqrt()
    }

    /// Odd-cat amplitude of mode A: b = sqrt((1-p)/2).
    pub fn b_alpha(&self) -> f64 {
        (0.5 * (1.0 - self.p)).sqrt()
    }

    /// Transmitted-mode overlap p^(t^2).
    pub fn p_t(&self) -> f64 {
        pow_p(self.p, self.tsq())
    }

    pub fn a_alpha_t(&self) -> f64 {
        (0.5 * (1.0 + self.p_t())).sqrt()
    }

    pub fn b_alpha_t(&self) -> f64 {
        (0.5 * (1.0 - self.p_t())).sqrt()
    }

    /// Bell-state normalization N = 2(1 + p^2).
    pub fn n_alpha(&self) -> f64 {
        2.0 * (1.0 + self.p * self.p)
    }
}

/// p^e with the convention p^0 = 1 even at p = 0 (pure limit at rsq = 0).
pub(crate) fn pow_p(p: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        p.powf(e)
    }
}

/// Single-mode superposition a|-alpha> + b|alpha> (normalized on demand).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QSuperposition {
    pub a: C64,
    pub b: C64,
    pub p: f64,
}

impl QSuperposition {
    pub fn new(a: C64, b: C64, p: f64) -> Result<Self> {
        let norm = a.norm_sqr() + b.norm_sqr();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::Domain(format!("|a|^2 + |b|^2 = {norm}, expected 1")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("overlap p = {p} outside [0,1]")));
        }
        let s = Self { a, b, p };
        if s.normalization() <= 1e-14 {
            return Err(Error::Degenerate("N(alpha) vanishes".into()));
        }
        Ok(s)
    }

    /// N(alpha) = 1 + p (a b* + a* b).
    pub fn normalization(&self) -> f64 {
        1.0 + self.p * 2.0 * (self.a * self.b.conj()).re
    }
}

/// Two-mode superposition sqrt(w)|a,a> + e^{i chi} sqrt(1-w)|-a,-a>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeSuperposition {
    pub omega: f64,
    pub chi_phase: f64,
    pub p: f64,
}

impl TwoModeSuperposition {
    pub fn new(omega: f64, chi_phase: f64, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&omega) {
            return Err(Error::Domain(format!("omega = {omega} outside [0,1]")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("overlap p = {p} outside [0,1]")));
        }
        let s = Self { omega, chi_phase, p };
        if s.normalization_sq() <= 1e-14 {
            return Err(Error::Degenerate("two-mode normalization vanishes".into()));
        }
        Ok(s)
    }

    /// N^2 = 1 + 2 sqrt(w(1-w)) cos(chi) p^2 (both modes at amplitude alpha).
    pub fn normalization_sq(&self) -> f64 {
        1.0 + 2.0 * (self.omega * (1.0 - self.omega)).sqrt()
            * self.chi_phase.cos()
            * self.p
            * self.p
    }
}

/// X-matrix of the Bell cat-state after beam-splitter damping of mode B,
/// in the even/odd cat product basis.
pub fn damped_bell_xstate(params: &CatDampingParams) -> XMatrix4 {
    let c = params.c();
    let (a, b) = (params.a_alpha(), params.b_alpha());
    let (at, bt) = (params.a_alpha_t(), params.b_alpha_t());
    let k = 2.0 / params.n_alpha();
    let cross = a * at * b * bt;
    XMatrix4 {
        d: [
            k * (1.0 + c) * a * a * at * at,
            k * (1.0 - c) * a * a * bt * bt,
            k * (1.0 - c) * b * b * at * at,
            k * (1.0 + c) * b * b * bt * bt,
        ],
        z14: C64::new(k * (1.0 + c) * cross, 0.0),
        z23: C64::new(k * (1.0 - c) * cross, 0.0),
    }
}

/// Closed-form Bloch correlation coefficients of the damped Bell family.
pub fn bloch_correlations(params: &CatDampingParams) -> crate::density::BlochX {
    let p = params.p();
    let tsq = params.tsq();
    let den = 1.0 + p * p;
    let root = ((1.0 - p * p) * (1.0 - pow_p(p, 2.0 * tsq))).sqrt();
    crate::density::BlochX {
        r03: (pow_p(p, tsq) + pow_p(p, 2.0 - tsq)) / den,
        r30: 2.0 * p / den,
        r11: root / den,
        r22: -pow_p(p, 1.0 - tsq) * root / den,
        r33: (pow_p(p, 1.0 + tsq) + pow_p(p, 1.0 - tsq)) / den,
    }
}

/// Closed-form rank-2 spectral decomposition of the damped Bell state:
/// eigenvalues lambda_1, lambda_2 (then two zeros) with their eigenvectors
/// in the ordered product basis {uu, uv, vu, vv}.
pub fn rank2_decomposition(params: &CatDampingParams) -> Spectrum {
    let p = params.p();
    let den = 2.0 + 2.0 * p * p;
    let c = params.c();
    let q = pow_p(p, params.tsq() + 1.0);
    let l1 = (1.0 + c) * (1.0 + q) / den;
    let l2 = (1.0 - c) * (1.0 - q) / den;
    let (a, b) = (params.a_alpha(), params.b_alpha());
    let (at, bt) = (params.a_alpha_t(), params.b_alpha_t());
    let zero = C64::new(0.0, 0.0);
    let re = |x: f64| C64::new(x, 0.0);

    let n1 = (a * a * at * at + b * b * bt * bt).sqrt();
    let psi1 = if n1 > 1e-14 {
        vec![re(a * at / n1), zero, zero, re(b * bt / n1)]
    } else {
        vec![re(1.0), zero, zero, zero]
    };
    let n2 = (a * a * bt * bt + b * b * at * at).sqrt();
    let psi2 = if n2 > 1e-14 {
        vec![zero, re(a * bt / n2), re(b * at / n2), zero]
    } else {
        vec![zero, re(1.0), zero, zero]
    };
    // fill the null space so the spectrum carries four vectors
    let psi3 = vec![re(psi1[3].re), zero, zero, re(-psi1[0].re)];
    let psi4 = vec![zero, re(psi2[2].re), re(-psi2[1].re), zero];
    Spectrum {
        values: vec![l1, l2, 0.0, 0.0],
        vectors: Some(vec![psi1, psi2, psi3, psi4]),
    }
}

/// 2x2 qubit-basis density of a single-mode superposition after damping:
/// the phase-flip mixture of the amplitude-reduced superposition, expressed
/// in the transmitted even/odd cat basis.
pub fn damped_single_mode(qs: &QSuperposition, rsq: f64) -> Result<HermMatrix2> {
    if !(0.0..=1.0).contains(&rsq) {
        return Err(Error::Domain(format!("rsq = {rsq} outside [0,1]")));
    }
    let c = pow_p(qs.p, rsq);
    let pt = pow_p(qs.p, 1.0 - rsq);
    let at = (0.5 * (1.0 + pt)).sqrt();
    let bt = (0.5 * (1.0 - pt)).sqrt();
    let n_alpha = qs.normalization();
    // branch s = +1 keeps the superposition, s = -1 carries the phase flip:
    // a|-at> + s b|at> = (a + s b) at |u> + (s b - a) bt |v>
    let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (s, weight) in [(1.0, 0.5 * (1.0 + c)), (-1.0, 0.5 * (1.0 - c))] {
        let w = [(qs.a + s * qs.b) * at, (s * qs.b - qs.a) * bt];
        for i in 0..2 {
            for j in 0..2 {
                rho[i][j] += weight / n_alpha * w[i] * w[j].conj();
            }
        }
    }
    Ok(HermMatrix2 { a11: rho[0][0].re, a22: rho[1][1].re, a12: rho[0][1] })
}

/// Dense 4x4 qubit-basis density of a two-mode superposition with mode B
/// damped. Not an X-state in general: for omega != 1/2 the two branches are
/// unbalanced and coherences appear off the anti-diagonal.
pub fn damped_two_mode(tms: &TwoModeSuperposition, rsq: f64) -> Result<Mat4> {
    if !(0.0..=1.0).contains(&rsq) {
        return Err(Error::Domain(format!("rsq = {rsq} outside [0,1]")));
    }
    let p = tms.p;
    let c = pow_p(p, rsq);
    let a = (0.5 * (1.0 + p)).sqrt();
    let b = (0.5 * (1.0 - p)).sqrt();
    let pt = pow_p(p, 1.0 - rsq);
    let at = (0.5 * (1.0 + pt)).sqrt();
    let bt = (0.5 * (1.0 - pt)).sqrt();
    let g = Complex64::from_polar((1.0 - tms.omega).sqrt(), tms.chi_phase);
    let sw = Complex64::new(tms.omega.sqrt(), 0.0);
    let n_sq = tms.normalization_sq();

    // |a, at>  = (a u + b v)(at u_t + bt v_t),  |-a, -at> flips both signs
    let plus = [a * at, a * bt, b * at, b * bt];
    let sign = [1.0, -1.0, -1.0, 1.0];
    let mut rho = Mat4::zeros();
    for (s, weight) in [(1.0, 0.5 * (1.0 + c)), (-1.0, 0.5 * (1.0 - c))] {
        let mut w = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            w[i] = (sw + s * sign[i] * g) * plus[i];
        }
        for i in 0..4 {
            for j in 0..4 {
                rho[(i, j)] += weight / n_sq * w[i] * w[j].conj();
            }
        }
    }
    Ok(rho)
}
