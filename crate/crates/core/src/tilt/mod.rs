//! Hearts in the bounded derived category of a Dynkin quiver, simple tilts
//! and the exchange graph of the interval between the standard heart and its
//! shift.
//!
//! The same graph models the hearts of the 3-Calabi-Yau category attached
//! to the quiver: the two interval exchange graphs are isomorphic, and only
//! the quiver-side objects are ever computed.

mod export;
mod graph;
mod heart;
mod orbit;

pub use export::{eg_dot, eg_json, folded_dot};
pub use graph::{build_interval_eg, Edge, ExchangeGraph};
pub use heart::{multi_tilt, multi_tilt_backward, tilt_backward, tilt_forward, Heart};
pub use orbit::{
    folded_eg, is_f_stable, orbit_ext_pattern, orbit_tilt, orbit_tilt_backward, simple_orbits, FoldedEdge, FoldedGraph,
    OrbitExtPattern,
};
