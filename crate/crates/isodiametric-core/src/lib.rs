//! Numerical toolkit for stability of the isodiametric inequality.
//!
//! The crate constructs axially symmetric nearly-optimal sets for the
//! isodiametric problem, evaluates their deficit and asymmetry functionals,
//! rearranges arbitrary bounded sets by spherical caps, and verifies the
//! perimeter bound for convex bodies of fixed diameter together with the
//! deficit comparison `delta'(hull) <= delta(set)`.
//!
//! Modules:
//! - [`geom`]: dimension-generic scalar geometry (cap areas, chords, constants);
//! - [`profile`]: the [`profile::RadialProfile`] set representation and all
//!   deficit/asymmetry functionals evaluated on it;
//! - [`construct`]: builders for the nearly-optimal families, the envelope
//!   function `g`, ball-with-notch profiles, and Reuleaux polygons;
//! - [`rearrange`]: rearrangement by spherical caps of membership-oracle sets;
//! - [`convex`]: convex hulls, perimeters, the Cauchy projection formula and
//!   the perimeter/deficit checks;
//! - [`experiment`]: seeded decay-rate experiments, corpora and the
//!   verification suite used by the CLI.

pub mod construct;
pub mod convex;
pub mod error;
pub mod experiment;
pub mod geom;
pub(crate) mod opt;
pub mod profile;
pub mod rearrange;

pub use error::{Error, Result};
pub use geom::{CapAngle, ConstantsTable, Dimension};
pub use profile::{DeficitReport, RadialProfile};
