//! The molecular solution: analytic polarization density and its
//! Boltzmann-orientation Monte Carlo counterpart.
//!
//! The solution contains molecules that carry an electric dipole moment, an
//! optical-activity axis parallel to it, and a magnetic moment perpendicular
//! to both. A strong magnetic field locks the thermal rotation of each
//! molecule to precession about the field axis, so the dipole is confined to
//! the transverse plane; the control beam's electric field then biases the
//! in-plane orientation distribution and induces a net polarization density.
//!
//! Two independent routes to that density coexist on purpose:
//! [`langevin_debye_polarization`] evaluates the closed-form model, while
//! [`monte_carlo::mc_mean_polarization`] averages explicitly sampled dipole
//! orientations. [`monte_carlo::oracle_compare`] reports their ratio without
//! reconciling them.

pub mod bessel;
pub mod monte_carlo;

use std::f64::consts::{PI, SQRT_2};

use crate::error::{ensure_non_negative, ensure_positive, Error, Result};
use crate::polarization::LinearPolarizationAngle;

/// Boltzmann constant, exact SI value (J/K).
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Unit system for thermal-energy bookkeeping.
///
/// `Natural` sets the Boltzmann constant to 1 so that temperatures are
/// expressed directly as thermal energies; used by unit tests and by
/// dimensionless bench fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Units {
    #[default]
    Si,
    Natural,
}

impl Units {
    /// Boltzmann constant in this unit system.
    pub fn boltzmann(self) -> f64 {
        match self {
            Units::Si => BOLTZMANN,
            Units::Natural => 1.0,
        }
    }
}

/// A molecule with an electric dipole moment, an optical-activity axis
/// parallel to it, and a magnetic moment perpendicular to both.
///
/// The axis geometry is fixed by construction, so only the scalar strengths
/// are stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriactiveMolecule {
    /// Electric dipole moment, C*m.
    pub dipole_moment: f64,
    /// Magnetic moment, J/T.
    pub magnetic_moment: f64,
    /// Baseline specific rotatory strength, rad*m^2: rotation per unit path
    /// per unit number density when the in-plane orientations are isotropic.
    pub baseline_rotatory_strength: f64,
    /// Alignment rotatory coupling, rad*m/C: extra rotation per unit path per
    /// unit polarization density.
    pub alignment_coupling: f64,
}

impl TriactiveMolecule {
    pub fn new(
        dipole_moment: f64,
        magnetic_moment: f64,
        baseline_rotatory_strength: f64,
        alignment_coupling: f64,
    ) -> Result<Self> {
        ensure_positive("dipole moment p", dipole_moment)?;
        ensure_positive("magnetic moment m", magnetic_moment)?;
        ensure_non_negative("baseline rotatory strength sigma0", baseline_rotatory_strength)?;
        ensure_non_negative("alignment coupling kappa", alignment_coupling)?;
        Ok(Self {
            dipole_moment,
            magnetic_moment,
            baseline_rotatory_strength,
            alignment_coupling,
        })
    }
}

/// A homogeneous solution of one molecule species.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub molecule: TriactiveMolecule,
    /// Number density, 1/m^3.
    pub number_density: f64,
    /// Temperature, K (or thermal energy in natural units).
    pub temperature: f64,
    pub units: Units,
}

impl Solution {
    /// SI solution. Temperature 0 is rejected here so the downstream
    /// formulas never divide by zero.
    pub fn new(molecule: TriactiveMolecule, number_density: f64, temperature: f64) -> Result<Self> {
        Self::with_units(molecule, number_density, temperature, Units::Si)
    }

    /// Solution in natural units (k = 1).
    pub fn natural(
        molecule: TriactiveMolecule,
        number_density: f64,
        temperature: f64,
    ) -> Result<Self> {
        Self::with_units(molecule, number_density, temperature, Units::Natural)
    }

    pub fn with_units(
        molecule: TriactiveMolecule,
        number_density: f64,
        temperature: f64,
        units: Units,
    ) -> Result<Self> {
        ensure_positive("number density n", number_density)?;
        ensure_positive("temperature T", temperature)?;
        Ok(Self {
            molecule,
            number_density,
            temperature,
            units,
        })
    }

    /// Thermal energy kT.
    pub fn thermal_energy(&self) -> f64 {
        self.units.boltzmann() * self.temperature
    }
}

/// External fields applied to the cell, plus the control-beam polarization
/// that orients the induced anisotropy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfig {
    /// Magnetic flux density magnitude, T; directed along the control-beam axis.
    pub magnetic_field: f64,
    /// Control-beam electric field amplitude, V/m.
    pub control_field: f64,
    /// Control-beam linear polarization angle.
    pub control_angle: LinearPolarizationAngle,
}

impl FieldConfig {
    pub fn new(
        magnetic_field: f64,
        control_field: f64,
        control_angle: LinearPolarizationAngle,
    ) -> Result<Self> {
        ensure_non_negative("magnetic field B", magnetic_field)?;
        ensure_non_negative("control field E_C", control_field)?;
        Ok(Self {
            magnetic_field,
            control_field,
            control_angle,
        })
    }
}

/// Mean polarization density of the solution under the control field, C/m^2.
///
/// Closed-form model: `P = n p^2 pi E_C / (sqrt(2) k T)`, linear in the field
/// and in the number density, inverse in temperature. The Monte Carlo route
/// in [`monte_carlo`] estimates the same quantity from first principles; see
/// [`monte_carlo::oracle_compare`] for how the two relate.
pub fn langevin_debye_polarization(solution: &Solution, control_field: f64) -> Result<f64> {
    ensure_non_negative("control field E_C", control_field)?;
    let p = solution.molecule.dipole_moment;
    Ok(solution.number_density * p * p * PI * control_field / (SQRT_2 * solution.thermal_energy()))
}

/// Dimensionless field-to-thermal ratio `x = p E_C / (k T)` that concentrates
/// the in-plane orientation distribution.
pub fn dipole_field_ratio(solution: &Solution, control_field: f64) -> f64 {
    solution.molecule.dipole_moment * control_field / solution.thermal_energy()
}

/// Degree of magnetic-moment alignment with the field axis, in `[0, 1]`.
///
/// Classical Langevin saturation `A = coth(x) - 1/x` with `x = m B / (k T)`:
/// 0 for a free rotor, 1 for a fully locked precession plane. The ideal-B
/// orientation model corresponds to `A = 1`; finite fields scale the induced
/// polarization and the alignment rotatory term by this factor.
pub fn b_field_order_parameter(
    molecule: &TriactiveMolecule,
    magnetic_field: f64,
    temperature: f64,
    units: Units,
) -> Result<f64> {
    ensure_non_negative("magnetic field B", magnetic_field)?;
    ensure_positive("temperature T", temperature)?;
    let x = molecule.magnetic_moment * magnetic_field / (units.boltzmann() * temperature);
    Ok(langevin_function(x))
}

/// `coth(x) - 1/x`, continuous at 0, monotone increasing, asymptote 1.
pub fn langevin_function(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x.abs() < 1e-4 {
        // Series expansion; the direct form cancels catastrophically here.
        let x2 = x * x;
        return x / 3.0 - x * x2 / 45.0 + 2.0 * x2 * x2 * x / 945.0;
    }
    1.0 / x.tanh() - 1.0 / x
}

/// In-plane dipole orientation density under the ideal-B model.
///
/// The dipole angle phi lives on `[0, 2pi)`; the density is
/// `exp(x cos(phi - gamma)) / (2 pi I0(x))`, uniform at zero field and
/// peaked at the control polarization angle gamma otherwise.
#[derive(Debug, Clone, Copy)]
pub struct OrientationPdf {
    /// Peak dipole angle (the control polarization direction), radians.
    pub mean_angle: f64,
    /// Concentration `x = p E_C / (k T)`.
    pub concentration: f64,
    normalization: f64,
}

impl OrientationPdf {
    pub fn density(&self, phi: f64) -> f64 {
        self.normalization * (self.concentration * (phi - self.mean_angle).cos()).exp()
    }
}

/// Builds the orientation density for a solution in the given fields.
pub fn orientation_pdf(solution: &Solution, fields: &FieldConfig) -> OrientationPdf {
    let x = dipole_field_ratio(solution, fields.control_field);
    OrientationPdf {
        mean_angle: fields.control_angle.radians(),
        concentration: x,
        normalization: 1.0 / (2.0 * PI * bessel::bessel_i0(x)),
    }
}

pub use monte_carlo::{mc_mean_polarization, oracle_compare, McPolarization, OracleReport};
