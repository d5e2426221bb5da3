use alloc::vec::Vec;

use super::cycle::{ccw_cycle, is_simple_cycle, reflex_in_cycle, CycleRegion};
use super::kernel::Coords;
use super::point::{Location, Point};
use crate::{with_kernel, Error, Result};

/// A closed polygonal cycle on distinct points, stored canonically.
///
/// The canonical form starts at the lexicographically smallest vertex.
/// Simple cycles run counter-clockwise; non-simple cycles take whichever of
/// the two directions is lexicographically smaller. Two cycles describe the
/// same undirected polygon iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::Degenerate("a polygon needs at least 3 vertices".into()));
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        if let Some(i) = sorted.windows(2).position(|w| w[0] == w[1]) {
            let dup = &sorted[i];
            let mut at = vertices.iter().enumerate().filter(|(_, v)| *v == dup).map(|(i, _)| i);
            return Err(Error::Duplicate(at.next().unwrap_or(0), at.next().unwrap_or(0)));
        }
        Ok(Polygon { vertices: canonical_cycle(vertices) })
    }

    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> Self {
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        let coords = Coords::from_points(&self.vertices);
        let cycle: Vec<usize> = (0..self.len()).collect();
        with_kernel!(&coords, k => is_simple_cycle(k, &cycle))
    }

    /// Exact location of `p`; the polygon must be simple.
    pub fn locate(&self, p: &Point) -> Result<Location> {
        if self.vertices.contains(p) {
            if !self.is_simple() {
                return Err(Error::NonSimple);
            }
            return Ok(Location::Boundary);
        }
        let mut pts = self.vertices.clone();
        pts.push(p.clone());
        let coords = Coords::from_points(&pts);
        let cycle: Vec<usize> = (0..self.len()).collect();
        let q = self.len();
        with_kernel!(&coords, k => {
            if !is_simple_cycle(k, &cycle) {
                return Err(Error::NonSimple);
            }
            let region = CycleRegion::new(k, &cycle).ok_or(Error::NonSimple)?;
            Ok(region.locate(k, q))
        })
    }

    /// Indices (into [`Polygon::vertices`]) of vertices with interior angle
    /// above pi. The polygon must be simple.
    pub fn reflex_vertices(&self) -> Result<Vec<usize>> {
        let coords = Coords::from_points(&self.vertices);
        let cycle: Vec<usize> = (0..self.len()).collect();
        with_kernel!(&coords, k => {
            if !is_simple_cycle(k, &cycle) {
                return Err(Error::NonSimple);
            }
            // canonical simple polygons are already counter-clockwise
            debug_assert_eq!(ccw_cycle(k, &cycle), cycle);
            Ok(reflex_in_cycle(k, &cycle))
        })
    }
}

/// Canonical representative of the cycle through `vertices`.
pub fn canonicalize_polygon(vertices: &[Point]) -> Result<Polygon> {
    Polygon::new(vertices.to_vec())
}

fn canonical_cycle(vertices: Vec<Point>) -> Vec<Point> {
    let n = vertices.len();
    let start = (0..n).min_by(|&a, &b| vertices[a].cmp(&vertices[b])).unwrap_or(0);
    let forward: Vec<Point> = (0..n).map(|i| vertices[(start + i) % n].clone()).collect();
    let backward: Vec<Point> = (0..n).map(|i| vertices[(start + n - i) % n].clone()).collect();
    let coords = Coords::from_points(&forward);
    let cycle: Vec<usize> = (0..n).collect();
    let simple_ccw = with_kernel!(&coords, k => {
        is_simple_cycle(k, &cycle).then(|| ccw_cycle(k, &cycle) == cycle)
    });
    match simple_ccw {
        Some(true) => forward,
        Some(false) => backward,
        None => forward.min(backward),
    }
}
