use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::hull::hull_indices;
use super::kernel::{on_segment, Coords, Predicates};
use super::point::{Orientation, Point};
use super::polygon::Polygon;
use crate::{with_kernel, Error, Result};

/// A finite planar point set with pairwise distinct points.
///
/// Sets built with [`PointSet::new`] are in general position. Grid-like
/// sets carry `collinear_allowed` and are rejected by the gon/hole counters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    coords: Coords,
    collinear_allowed: bool,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let set = Self::with_collinear(points)?;
        if let Some((a, b, c)) = set.first_collinear_triple() {
            return Err(Error::Collinear(a, b, c));
        }
        Ok(PointSet { collinear_allowed: false, ..set })
    }

    /// A set that may contain collinear triples (integer grids).
    pub fn with_collinear(points: Vec<Point>) -> Result<Self> {
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::Duplicate(a, b));
            }
        }
        Ok(PointSet { coords: Coords::from_points(&points), collinear_allowed: true })
    }

    pub fn from_i64(points: &[(i64, i64)]) -> Result<Self> {
        Self::new(points.iter().map(|&p| p.into()).collect())
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.coords.point(i)
    }

    pub fn points(&self) -> Vec<Point> {
        self.coords.to_points()
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    pub fn collinear_allowed(&self) -> bool {
        self.collinear_allowed
    }

    /// The subset at `idx`, in that order.
    pub fn subset(&self, idx: &[usize]) -> Result<PointSet> {
        PointSet::new(idx.iter().map(|&i| self.point(i)).collect())
    }

    pub fn first_collinear_triple(&self) -> Option<(usize, usize, usize)> {
        with_kernel!(&self.coords, k => first_collinear(k))
    }

    /// Errors unless the set is flagged and verified general position.
    pub fn require_general_position(&self) -> Result<()> {
        if self.collinear_allowed {
            return Err(Error::Degenerate(
                "set allows collinear points; gon and hole counts need general position".to_string(),
            ));
        }
        Ok(())
    }
}

fn first_collinear<K: Predicates>(k: &K) -> Option<(usize, usize, usize)> {
    let n = k.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if k.orient(a, b, c) == Orientation::Collinear {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// No three points of the set are collinear.
pub fn is_general_position(set: &PointSet) -> bool {
    set.first_collinear_triple().is_none()
}

/// Counter-clockwise hull of the set.
pub fn convex_hull(set: &PointSet) -> Result<Polygon> {
    convex_hull_with_boundary(set).map(|(h, _)| h)
}

/// Hull plus the non-vertex points lying on hull edges (only possible for
/// sets with collinear points).
pub fn convex_hull_with_boundary(set: &PointSet) -> Result<(Polygon, Vec<Point>)> {
    if set.len() < 3 {
        return Err(Error::Degenerate(format!("hull of {} points", set.len())));
    }
    let all: Vec<usize> = (0..set.len()).collect();
    let (hull, boundary) = with_kernel!(set.coords(), k => {
        let hull = hull_indices(k, &all);
        let n = hull.len();
        let boundary: Vec<usize> = if n < 3 {
            Vec::new()
        } else {
            all.iter()
                .copied()
                .filter(|p| !hull.contains(p))
                .filter(|&p| (0..n).any(|i| on_segment(k, p, hull[i], hull[(i + 1) % n])))
                .collect()
        };
        (hull, boundary)
    });
    if hull.len() < 3 {
        return Err(Error::Degenerate("all points are collinear".to_string()));
    }
    let poly = Polygon::from_ccw_unchecked(hull.iter().map(|&i| set.point(i)).collect());
    Ok((poly, boundary.iter().map(|&i| set.point(i)).collect()))
}

/// Every point is a vertex of the convex hull. Needs at least three points
/// and no collinear triple.
pub fn is_convex_position(points: &[Point]) -> Result<bool> {
    if points.len() < 3 {
        return Err(Error::Degenerate(format!("{} points", points.len())));
    }
    let set = PointSet::new(points.to_vec()).map_err(|e| match e {
        Error::Collinear(..) => Error::Degenerate(e.to_string()),
        other => other,
    })?;
    let all: Vec<usize> = (0..set.len()).collect();
    Ok(with_kernel!(set.coords(), k => hull_indices(k, &all).len() == all.len()))
}
