//! Exact enumeration of k-gons, k-holes, islands and crossing numbers of
//! planar point sets with integer coordinates.
//!
//! Every predicate is evaluated exactly. Coordinates are arbitrary-precision
//! integers; sets whose coordinates fit in 60 bits take an `i128` fast path.
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature spreads
//! subset enumeration over a rayon pool; results do not depend on the number
//! of workers.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod census;
pub mod combin;
mod error;
pub mod generators;
pub mod geom;
pub mod grid;
pub mod ordertype;
pub mod polygonize;
pub mod relations;

pub use error::{Error, Result};
pub use geom::{
    orientation, Location, Orientation, Point, PointSet, Polygon,
};
pub use census::{GonClass, GonCount};
