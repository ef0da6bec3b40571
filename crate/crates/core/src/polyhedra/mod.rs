//! Cones, fans and the fan operations: star subdivisions, stellar
//! transforms and common refinements.

mod cone;
mod fan;
mod ops;

pub use cone::Cone;
pub use fan::{fans_equal, Fan};
pub use fan::meet_in_common_face;
pub use ops::{common_refinement, same_support, star_subdivision, stellar_transform, stellar_transform_relaxed, StellarPair};
