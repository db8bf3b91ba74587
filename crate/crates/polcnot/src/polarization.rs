//! Linear polarization states and their algebra.
//!
//! A linear polarization state is a direction, not a vector: angles that
//! differ by a whole number of half-turns describe the same state, so all
//! public arithmetic here is carried out modulo pi. Jones and Stokes
//! representations are provided for reporting and for mapping states onto
//! the Poincare sphere.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};

/// Default tolerance (radians) when comparing polarization states.
pub const DEFAULT_STATE_TOLERANCE: f64 = 1e-9;

/// A linear polarization direction, stored as its canonical angle in `[0, pi)`.
///
/// Angle 0 is the horizontal axis of the transverse plane; pi/2 is the
/// vertical axis orthogonal to it.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LinearPolarizationAngle {
    theta: f64,
}

impl LinearPolarizationAngle {
    /// Horizontal basis state (angle 0).
    pub const HORIZONTAL: Self = Self { theta: 0.0 };

    /// Vertical basis state (angle pi/2).
    pub const VERTICAL: Self = Self {
        theta: FRAC_PI_2,
    };

    /// Reduces an arbitrary finite angle to its canonical representative in `[0, pi)`.
    pub fn new(raw: f64) -> Result<Self> {
        ensure_finite("polarization angle", raw)?;
        Ok(Self {
            theta: reduce_mod_pi(raw),
        })
    }

    /// Canonical angle in radians, always in `[0, pi)`.
    pub fn radians(self) -> f64 {
        self.theta
    }

    /// Rotates the polarization plane by `phi` radians.
    ///
    /// Positive `phi` turns the state from the 0-axis toward the pi/2-axis
    /// when viewed along the propagation direction; the canonical result is
    /// `normalize(theta - phi)`. `phi` may wind any number of turns.
    pub fn rotate(self, phi: f64) -> Result<Self> {
        ensure_finite("rotation angle", phi)?;
        Self::new(self.theta - phi)
    }

    /// Shortest angular distance to another state, in `[0, pi/2]`.
    pub fn distance(self, other: Self) -> f64 {
        let delta = (self.theta - other.theta).abs().rem_euclid(PI);
        delta.min(PI - delta)
    }

    /// Signed deviation from `other` in `(-pi/2, pi/2]`, such that
    /// `deviation.abs() == distance`.
    pub fn deviation_from(self, other: Self) -> f64 {
        let d = (self.theta - other.theta + FRAC_PI_2).rem_euclid(PI) - FRAC_PI_2;
        if d == -FRAC_PI_2 {
            FRAC_PI_2
        } else {
            d
        }
    }

    /// Compares two states within an angular tolerance.
    pub fn approx_eq(self, other: Self, tolerance: f64) -> bool {
        self.distance(other) <= tolerance
    }

    /// Jones vector of the state, with real amplitudes `(cos theta, sin theta)`.
    pub fn to_jones(self) -> JonesVector {
        JonesVector {
            horizontal: Complex64::new(self.theta.cos(), 0.0),
            vertical: Complex64::new(self.theta.sin(), 0.0),
        }
    }
}

impl std::fmt::Display for LinearPolarizationAngle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} rad", self.theta)
    }
}

fn reduce_mod_pi(raw: f64) -> f64 {
    let r = raw.rem_euclid(PI);
    // rem_euclid can round up to the modulus itself for tiny negative inputs.
    if r >= PI {
        0.0
    } else {
        r
    }
}

/// Squared overlap of the qubit encodings of two linear states: `cos^2(a - b)`.
///
/// Equals 1 for identical states and 0 for orthogonal ones.
pub fn fidelity(a: LinearPolarizationAngle, b: LinearPolarizationAngle) -> f64 {
    let c = (a.radians() - b.radians()).cos();
    c * c
}

/// Normalized Jones vector: two complex field amplitudes with unit norm.
///
/// Global phase carries no physical meaning; use [`JonesVector::overlap`] or
/// [`JonesVector::approx_eq`] rather than componentwise comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesVector {
    pub horizontal: Complex64,
    pub vertical: Complex64,
}

impl JonesVector {
    /// Unit-norm tolerance accepted by [`JonesVector::new`].
    pub const NORM_TOLERANCE: f64 = 1e-12;

    pub fn new(horizontal: Complex64, vertical: Complex64) -> Result<Self> {
        let norm_sq = horizontal.norm_sqr() + vertical.norm_sqr();
        if !norm_sq.is_finite() {
            return Err(Error::NonFinite {
                what: "Jones vector norm",
                value: norm_sq,
            });
        }
        if (norm_sq - 1.0).abs() > 2.0 * Self::NORM_TOLERANCE {
            return Err(Error::InvalidParameter {
                what: "Jones vector norm^2",
                constraint: "1 within 2e-12",
                value: norm_sq,
            });
        }
        Ok(Self {
            horizontal,
            vertical,
        })
    }

    /// Complex inner product `<self|other>`.
    pub fn overlap(&self, other: &Self) -> Complex64 {
        self.horizontal.conj() * other.horizontal + self.vertical.conj() * other.vertical
    }

    /// Squared magnitude of the overlap, the qubit transition probability.
    pub fn overlap_probability(&self, other: &Self) -> f64 {
        self.overlap(other).norm_sqr()
    }

    /// Equality up to a global phase.
    pub fn approx_eq(&self, other: &Self, tolerance: f64) -> bool {
        (1.0 - self.overlap_probability(other)).abs() <= tolerance
    }

    /// Stokes parameters of the state.
    ///
    /// `S1` separates horizontal/vertical, `S2` the diagonals, `S3` the
    /// circular components (`S3 = 0` for every linear state). A linear state
    /// at angle theta maps to the Poincare equator at doubled azimuth:
    /// `S1 = cos 2theta`, `S2 = sin 2theta`.
    pub fn to_stokes(&self) -> StokesVector {
        let cross = self.horizontal.conj() * self.vertical;
        StokesVector {
            s0: self.horizontal.norm_sqr() + self.vertical.norm_sqr(),
            s1: self.horizontal.norm_sqr() - self.vertical.norm_sqr(),
            s2: 2.0 * cross.re,
            s3: 2.0 * cross.im,
        }
    }
}

/// Stokes parameters `(S0, S1, S2, S3)`, dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesVector {
    pub s0: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl StokesVector {
    /// `sqrt(S1^2 + S2^2 + S3^2) / S0`; 1 for fully polarized light.
    pub fn degree_of_polarization(&self) -> f64 {
        (self.s1 * self.s1 + self.s2 * self.s2 + self.s3 * self.s3).sqrt() / self.s0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn angle(raw: f64) -> LinearPolarizationAngle {
        LinearPolarizationAngle::new(raw).unwrap()
    }

    #[test]
    fn normalize_identity_and_wrapping() {
        assert_eq!(angle(0.0).radians(), 0.0);
        assert!((angle(3.0 * FRAC_PI_2).radians() - FRAC_PI_2).abs() < 1e-15);
        assert!((angle(-FRAC_PI_4).radians() - 3.0 * FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn normalize_rejects_non_finite() {
        assert!(LinearPolarizationAngle::new(f64::NAN).is_err());
        assert!(LinearPolarizationAngle::new(f64::INFINITY).is_err());
    }

    #[test]
    fn normalize_is_idempotent_and_pi_periodic() {
        for k in -5i32..=5 {
            let raw = 0.7 + f64::from(k) * PI;
            let a = angle(raw);
            assert!(a.approx_eq(angle(0.7), 1e-12));
            assert_eq!(LinearPolarizationAngle::new(a.radians()).unwrap(), a);
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(angle(0.0).rotate(0.0).unwrap().radians(), 0.0);
        assert!(angle(FRAC_PI_2).rotate(FRAC_PI_2).unwrap().radians().abs() < 1e-15);
        // Winding beyond a full turn is removed mod pi.
        let wound = angle(0.0).rotate(4.0 * PI + FRAC_PI_2).unwrap();
        assert!((wound.radians() - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(angle(0.0).distance(angle(0.0)), 0.0);
        assert!((angle(0.0).distance(angle(FRAC_PI_2)) - FRAC_PI_2).abs() < 1e-15);
        // Wraps across the 0/pi seam.
        assert!((angle(0.1).distance(angle(PI - 0.1)) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn deviation_is_signed_distance() {
        let d = angle(0.1).deviation_from(angle(PI - 0.1));
        assert!((d.abs() - 0.2).abs() < 1e-12);
        assert!((angle(1.0).deviation_from(angle(0.8)) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn jones_and_stokes_basis_states() {
        let h = angle(0.0).to_jones();
        assert_eq!(h.horizontal, Complex64::new(1.0, 0.0));
        let s = h.to_stokes();
        assert_eq!((s.s0, s.s1, s.s2, s.s3), (1.0, 1.0, 0.0, 0.0));

        let v = angle(FRAC_PI_2).to_jones().to_stokes();
        assert!((v.s1 + 1.0).abs() < 1e-15 && v.s2.abs() < 1e-15);

        let d = angle(FRAC_PI_4).to_jones().to_stokes();
        assert!(d.s1.abs() < 1e-15);
        assert!((d.s2 - 1.0).abs() < 1e-15);
        assert_eq!(d.s3, 0.0);
    }

    #[test]
    fn stokes_is_fully_polarized_for_linear_states() {
        for k in 0..100 {
            let s = angle(f64::from(k) * 0.031).to_jones().to_stokes();
            let r = s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3;
            assert!((r - s.s0 * s.s0).abs() < 1e-9);
        }
    }

    #[test]
    fn fidelity_examples() {
        assert_eq!(fidelity(angle(0.3), angle(0.3)), 1.0);
        assert!(fidelity(angle(0.0), angle(FRAC_PI_2)) < 1e-30);
        assert!((fidelity(angle(0.0), angle(FRAC_PI_4)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn fidelity_matches_jones_overlap() {
        for k in 0..50 {
            let a = angle(f64::from(k) * 0.097);
            let b = angle(f64::from(k) * 0.311 + 0.2);
            let f = fidelity(a, b);
            let o = a.to_jones().overlap_probability(&b.to_jones());
            assert!((f - o).abs() < 1e-12);
        }
    }

    #[test]
    fn jones_constructor_enforces_unit_norm() {
        assert!(JonesVector::new(Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)).is_err());
        let ok = JonesVector::new(
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2),
        )
        .unwrap();
        assert!((ok.to_stokes().s3 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn jones_equality_ignores_global_phase() {
        let a = angle(0.4).to_jones();
        let phase = Complex64::from_polar(1.0, 1.234);
        let b = JonesVector::new(a.horizontal * phase, a.vertical * phase).unwrap();
        assert!(a.approx_eq(&b, 1e-12));
    }
}
