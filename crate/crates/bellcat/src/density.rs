//! Minimal Hermitian-matrix algebra for dimensions 2 and 4, entropy
//! functions, and the X-state / Bloch representations used everywhere else.
//!
//! Entropies are in bits (log base 2) throughout.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::{Error, Result};

/// Trace tolerance for density validation.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues above this negative slack are clamped to zero; anything
/// more negative is treated as a construction bug.
pub const EIG_TOL: f64 = 1e-10;

pub type C64 = Complex64;
pub type Mat2 = Matrix2<Complex64>;
pub type Mat4 = Matrix4<Complex64>;

/// Which marginal to keep in a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Hermitian 2x2 matrix stored as two real diagonal entries and the upper
/// off-diagonal entry; the lower entry is implied by conjugation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermMatrix2 {
    pub a11: f64,
    pub a22: f64,
    pub a12: C64,
}

impl HermMatrix2 {
    pub fn diagonal(a11: f64, a22: f64) -> Self {
        Self { a11, a22, a12: C64::new(0.0, 0.0) }
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12.norm_sqr()
    }

    /// Eigenvalues in descending order (closed form).
    pub fn eigenvalues(&self) -> [f64; 2] {
        let mid = 0.5 * (self.a11 + self.a22);
        let rad = (0.25 * (self.a11 - self.a22).powi(2) + self.a12.norm_sqr()).sqrt();
        [mid + rad, mid - rad]
    }

    pub fn to_matrix(&self) -> Mat2 {
        Mat2::new(
            C64::new(self.a11, 0.0),
            self.a12,
            self.a12.conj(),
            C64::new(self.a22, 0.0),
        )
    }

    /// Check trace-1 and positive semidefiniteness within the module slacks.
    pub fn validate_density(&self) -> Result<()> {
        if (self.trace() - 1.0).abs() > TRACE_TOL {
            return Err(Error::Density(format!("trace {} != 1", self.trace())));
        }
        let [_, lo] = self.eigenvalues();
        if lo < -EIG_TOL {
            return Err(Error::Density(format!("negative eigenvalue {lo}")));
        }
        Ok(())
    }
}

/// Two-qubit X-state: four real diagonal entries plus the two upper
/// anti-diagonal entries; the lower anti-diagonal is implied by conjugation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XMatrix4 {
    pub d: [f64; 4],
    pub z14: C64,
    pub z23: C64,
}

impl XMatrix4 {
    pub fn diagonal(d: [f64; 4]) -> Self {
        Self { d, z14: C64::new(0.0, 0.0), z23: C64::new(0.0, 0.0) }
    }

    pub fn maximally_mixed() -> Self {
        Self::diagonal([0.25; 4])
    }

    pub fn trace(&self) -> f64 {
        self.d.iter().sum()
    }

    pub fn to_matrix(&self) -> Mat4 {
        let z = C64::new(0.0, 0.0);
        let r = |x: f64| C64::new(x, 0.0);
        Mat4::new(
            r(self.d[0]), z, z, self.z14,
            z, r(self.d[1]), self.z23, z,
            z, self.z23.conj(), r(self.d[2]), z,
            self.z14.conj(), z, z, r(self.d[3]),
        )
    }

    /// Read an X-state back from a dense matrix; entries off the X pattern
    /// must be below `tol` in magnitude.
    pub fn from_matrix(m: &Mat4, tol: f64) -> Result<Self> {
        for i in 0..4 {
            for j in 0..4 {
                let on_x = i == j || i + j == 3;
                if !on_x && m[(i, j)].norm() > tol {
                    return Err(Error::Density(format!(
                        "entry ({i},{j}) = {} off the X pattern",
                        m[(i, j)]
                    )));
                }
            }
        }
        Ok(Self {
            d: [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re],
            z14: m[(0, 3)],
            z23: m[(1, 2)],
        })
    }

    /// Trace-1 and block positivity within slack: |z14|^2 <= d1*d4 and
    /// |z23|^2 <= d2*d3.
    pub fn validate_density(&self) -> Result<()> {
        if (self.trace() - 1.0).abs() > TRACE_TOL {
            return Err(Error::Density(format!("trace {} != 1", self.trace())));
        }
        for (i, di) in self.d.iter().enumerate() {
            if *di < -TRACE_TOL {
                return Err(Error::Density(format!("diagonal entry {i} = {di} < 0")));
            }
        }
        if self.z14.norm_sqr() > self.d[0] * self.d[3] + TRACE_TOL {
            return Err(Error::Density("outer block not PSD".into()));
        }
        if self.z23.norm_sqr() > self.d[1] * self.d[2] + TRACE_TOL {
            return Err(Error::Density("inner block not PSD".into()));
        }
        Ok(())
    }
}

/// Correlation coefficients of the Bloch form
/// rho = (I@I + R30 s3@I + R03 I@s3 + sum_i Rii si@si) / 4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochX {
    pub r30: f64,
    pub r03: f64,
    pub r11: f64,
    pub r22: f64,
    pub r33: f64,
}

/// Real eigenvalues in descending order, optionally with matching
/// eigenvectors (complex amplitude vectors).
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<C64>>>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Self { values, vectors: None }
    }
}

/// Binary Shannon entropy H(x) = -x log2 x - (1-x) log2 (1-x), in bits.
///
/// Values within 1e-12 outside [0, 1] are clamped; larger excursions are a
/// domain error.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-TRACE_TOL..=1.0 + TRACE_TOL).contains(&x) {
        return Err(Error::Domain(format!("binary_entropy argument {x} outside [0,1]")));
    }
    let x = x.clamp(0.0, 1.0);
    Ok(xlog2x(x) + xlog2x(1.0 - x))
}

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Von Neumann entropy -sum lambda_i log2 lambda_i of a spectrum, in bits.
///
/// The spectrum must sum to 1 within 1e-10 with no eigenvalue below -1e-10;
/// small negatives inside the slack are clamped to zero.
pub fn von_neumann_entropy(s: &Spectrum) -> Result<f64> {
    let sum: f64 = s.values.iter().sum();
    if (sum - 1.0).abs() > EIG_TOL {
        return Err(Error::Spectrum(format!("eigenvalues sum to {sum}, expected 1")));
    }
    let mut h = 0.0;
    for &v in &s.values {
        if v < -EIG_TOL {
            return Err(Error::Spectrum(format!("eigenvalue {v} below -{EIG_TOL}")));
        }
        h += xlog2x(v.max(0.0));
    }
    Ok(h)
}

/// Closed-form eigenvalues of an X-matrix via its two 2x2 blocks,
/// descending.
pub fn xstate_eigenvalues(x: &XMatrix4) -> Spectrum {
    let outer = HermMatrix2 { a11: x.d[0], a22: x.d[3], a12: x.z14 }.eigenvalues();
    let inner = HermMatrix2 { a11: x.d[1], a22: x.d[2], a12: x.z23 }.eigenvalues();
    Spectrum::from_values(vec![outer[0], outer[1], inner[0], inner[1]])
}

/// Reduced state of one qubit. For an X-state both marginals are diagonal.
pub fn partial_trace(x: &XMatrix4, keep: Subsystem) -> HermMatrix2 {
    match keep {
        Subsystem::A => HermMatrix2::diagonal(x.d[0] + x.d[1], x.d[2] + x.d[3]),
        Subsystem::B => HermMatrix2::diagonal(x.d[0] + x.d[2], x.d[1] + x.d[3]),
    }
}

/// Bloch correlation coefficients of an X-state. The anti-diagonal entries
/// enter through their real parts (the representation carries only the
/// diagonal sigma_i x sigma_i terms).
pub fn bloch_from_xstate(x: &XMatrix4) -> BlochX {
    let [d1, d2, d3, d4] = x.d;
    BlochX {
        r30: d1 + d2 - d3 - d4,
        r03: d1 - d2 + d3 - d4,
        r33: d1 - d2 - d3 + d4,
        r11: 2.0 * (x.z14.re + x.z23.re),
        r22: 2.0 * (x.z23.re - x.z14.re),
    }
}

/// Inverse of [`bloch_from_xstate`]; fails if the coefficients do not give a
/// positive semidefinite density.
pub fn xstate_from_bloch(b: &BlochX) -> Result<XMatrix4> {
    let x = XMatrix4 {
        d: [
            0.25 * (1.0 + b.r30 + b.r03 + b.r33),
            0.25 * (1.0 + b.r30 - b.r03 - b.r33),
            0.25 * (1.0 - b.r30 + b.r03 - b.r33),
            0.25 * (1.0 - b.r30 - b.r03 + b.r33),
        ],
        z14: C64::new(0.25 * (b.r11 - b.r22), 0.0),
        z23: C64::new(0.25 * (b.r11 + b.r22), 0.0),
    };
    x.validate_density()?;
    Ok(x)
}

/// Eigenvalues of a dense Hermitian 4x4 matrix, descending.
pub fn hermitian_eigenvalues(m: &Mat4) -> Vec<f64> {
    let eig = m.symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

/// Validate an arbitrary dense 4x4 density: Hermitian, trace 1 within
/// 1e-12, minimum eigenvalue >= -1e-10.
pub fn validate_density4(m: &Mat4) -> Result<()> {
    let herm_dev = (m - m.adjoint()).norm();
    if herm_dev > 1e-10 {
        return Err(Error::Density(format!("not Hermitian (deviation {herm_dev:.3e})")));
    }
    let tr = m.trace();
    if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
        return Err(Error::Density(format!("trace {tr} != 1")));
    }
    let vals = hermitian_eigenvalues(m);
    let min = vals.last().copied().unwrap();
    if min < -EIG_TOL {
        return Err(Error::Density(format!("negative eigenvalue {min}")));
    }
    Ok(())
}
