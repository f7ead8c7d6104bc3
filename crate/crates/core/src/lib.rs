//! Exact computations in the RO(C2×Σ2)-graded Bredon cohomology of a point with `Z/2`
//! coefficients, of a few classifying spaces, and of the Bredon motivic cohomology of the
//! real numbers.

pub mod degrees;
pub mod error;
pub mod f2algebra;
pub mod figure;
pub mod klein_point;
pub mod motivic;
pub mod series;
pub mod spaces;
pub mod verify;

pub use degrees::{realize, region_of, Axis, KleinDegree, MotivicBidegree, Region};
pub use error::{Error, Result};
pub use series::{dim_point, series_for, LaurentPoly};
pub use f2algebra::{normal_form, F2Element, Monomial, Sector};
pub use figure::RegionMap;
pub use klein_point::{group_at, multiply, GroupDescriptor, MackeyLevel};
pub use motivic::{borel_group, motivic_group_r, realization_status, MotivicGroup, RealizationStatus, Status};
