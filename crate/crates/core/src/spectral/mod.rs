//! Spectral radius of the adjacency matrix, closed forms for the named
//! families, and classical upper bounds.

mod bounds;
mod closed;
pub mod exact;
mod power;

pub use bounds::{hong_bound, hsk_f, nikiforov_bound};
pub use closed::{
    appendix_bracket_cut_pair, appendix_bracket_g2, cubic_largest_root, rho_split_closed_form, Cubic,
    CubicFamily, CubicKind,
};
pub use exact::{compare_rho_int, compare_rho_sq};
pub use power::{spectral_radius, SpectralEstimate, DEFAULT_TOL, MAX_ITERATIONS};
