//! Diffraction in time: the Moshinsky shutter in configuration space, in
//! Wigner phase space and as a symplectic tomogram.
//!
//! Natural units `hbar = m = 1` throughout, except where [`PhysicalUnits`]
//! is passed explicitly.
//!
//! ```
//! use shutter_core::{m_density, ShutterParams, SpacetimePoint};
//!
//! let rho = m_density(SpacetimePoint::new(2.0, 2.0), ShutterParams::real(1.0)).unwrap();
//! assert!((rho - 0.25).abs() < 1e-12);
//! ```

pub mod error;
pub mod quad;
pub mod shutter;
pub mod specfun;
pub mod table;
pub mod tomogram;
pub mod wigner;

pub use error::{Result, ShutterError};
pub use quad::{OscIntegralResult, QuadConfig, QuadError};
pub use shutter::{
    density_from_w, m_amplitude, m_density, m_via_propagator, propagator, step, w_of, ShutterParams,
    SpacetimePoint,
};
pub use specfun::{erfc_complex, fresnel, ComplexValue, FresnelPair};
pub use table::{GridSpec, SampleTable, TableError};
pub use tomogram::{
    canonical_map, canonical_matrix, chi_closed, chi_oracle, chi_oracle_extrapolated, frame_from_angles,
    rho_of, tomogram_closed, tomogram_from_chi, Frame, TomogramPoint,
};
pub use wigner::{
    classical_concentration, classical_concentration_in_box, wigner_cgs, wigner_closed, wigner_marginal,
    wigner_oracle, wigner_oracle_extrapolated, OracleValue, PhasePoint, PhysicalUnits, DEFAULT_EPS_LADDER,
};
