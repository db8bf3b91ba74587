//! Desk-scale simulator of an optical CNOT cell acting on linear
//! polarization states.
//!
//! The cell is a cuvette of field-aligned optically active dipole molecules
//! in crossed magnetic and electric fields. A control beam travelling along
//! the magnetic field sets the polarization density of the solution; a
//! target beam travelling perpendicular to it has its polarization plane
//! rotated by an amount that depends on the control beam's polarization.
//! With the cell calibrated, the rotation difference between the two control
//! basis settings realizes a CNOT truth table on polarization angles.
//!
//! Module map:
//! - [`polarization`]: angle algebra mod pi, Jones/Stokes representations.
//! - [`medium`]: the molecular solution, the closed-form polarization
//!   density, and the Monte Carlo orientation oracle.
//! - [`cell`]: beam propagation through the cell, winding bookkeeping,
//!   thermal-noise shot sampling.
//! - [`gate`]: the ideal gate map, truth-table evaluation, derivative-free
//!   calibration, fidelity and temperature studies.
//! - [`scenario`]: the bench description file format.
//! - [`run`]: scenario dispatch and CSV/report emission for the CLI.

pub mod cell;
pub mod error;
pub mod gate;
pub mod medium;
pub mod polarization;
pub mod run;
pub mod scenario;

pub use error::{Error, Result};
pub use polarization::{fidelity, JonesVector, LinearPolarizationAngle, StokesVector};
