//! Exact planar primitives.
//!
//! Algorithms that run inside enumeration loops work on vertex *indices*
//! through the [`Predicates`] trait, so the same code serves the `i128`
//! fast path and the big-integer path. The owning types ([`Point`],
//! [`PointSet`], [`Polygon`]) sit on top of that.

mod cycle;
mod hull;
mod kernel;
mod point;
mod polygon;
mod set;

pub use cycle::{
    ccw_cycle, cycle_orientation, is_simple_cycle, locate_in_cycle, reflex_in_cycle,
    triangulate_cycle, winding_number, CycleRegion,
};
pub use hull::{hull_indices, in_closed_hull, is_convex_position_indices, strictly_inside_hull};
pub use kernel::{
    on_segment, segments_intersect, strictly_between, BigKernel, Coords, Predicates, SmallKernel,
    SMALL_LIMIT,
};
pub use point::{orientation, Location, Orientation, Point};
pub use polygon::{canonicalize_polygon, Polygon};
pub use set::{
    convex_hull, convex_hull_with_boundary, is_convex_position, is_general_position, PointSet,
};

/// Runs `$body` with `$k` bound to the kernel matching the storage of `$coords`.
#[macro_export]
macro_rules! with_kernel {
    ($coords:expr, $k:ident => $body:expr) => {
        match $coords {
            $crate::geom::Coords::Small(v) => {
                let $k = &$crate::geom::SmallKernel(v.as_slice());
                $body
            }
            $crate::geom::Coords::Big(v) => {
                let $k = &$crate::geom::BigKernel(v.as_slice());
                $body
            }
        }
    };
}
