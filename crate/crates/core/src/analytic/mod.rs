//! Double-precision exploration inside the unit disk.
//!
//! Nothing here is a proof: tail estimates are heuristic and always reported
//! next to the values they qualify.

mod eval;
mod orbit;
mod profile;
mod report;
mod roots;

pub use eval::{eval_disk, DiskPoint, DiskValue, FloatSeries};
pub use orbit::{orbit_tree, singular_orbit, Orbit, OrbitNode, OrbitPolicy, OrbitTree, SingularOrbit};
pub use profile::{default_radii, profile_csv, radial_profile, ProfileRow, MAX_RADIUS};
pub use report::{boundary_report, root_of_unity_grid, BoundaryReport, Pole};
pub use roots::polynomial_roots;
