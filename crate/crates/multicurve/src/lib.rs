pub mod connectivity;
pub mod curve;
pub mod cut;
pub mod embeddings;
pub mod enumeration;
pub mod error;
pub mod graphs;
pub mod mcg;
pub mod overlay;
pub mod schema;
pub mod surface;
pub mod trace;
pub mod triangulation;

pub use curve::{Arc, Carrier, Curve, Multicurve};
pub use error::{Error, Result};
pub use surface::{SurfaceDecomposition, SurfaceType};
