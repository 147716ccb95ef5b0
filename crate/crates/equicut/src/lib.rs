//! Exact computations for one-parameter torus actions on projective space:
//! stability analysis of weight configurations, fixed-point inventories of
//! the associated cut space, residue-based wall-crossing sums, and
//! characteristic numbers (Euler characteristic, Todd genus) of the symplectic
//! quotient — all over arbitrary-precision rational arithmetic.

pub mod charnum;
pub mod cli;
pub mod cut;
pub mod error;
pub mod exact;
pub mod localization;
pub mod oracle;
pub mod scenario;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
