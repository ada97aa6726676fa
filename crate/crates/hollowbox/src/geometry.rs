//! Exact rational geometry: intervals, axis-aligned boxes, hollow boxes and
//! the elementary predicates everything else builds on.
//!
//! A [`HollowBox`] denotes the topological boundary of a nondegenerate box;
//! in dimension 1 that is a two-point set. Solid boxes may be degenerate in
//! any subset of axes, hollow boxes may not be degenerate anywhere.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

use std::fmt;

use thiserror::Error;

use crate::bits::BitString;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("interval endpoints out of order (lo > hi)")]
    EmptyInterval,
    #[error("boxes must have at least one axis")]
    ZeroDimension,
    #[error("hollow box has a degenerate side on axis {axis}")]
    DegenerateHollowSide { axis: usize },
    #[error("cannot take a facet on degenerate axis {axis}")]
    DegenerateFacetAxis { axis: usize },
}

/// Which endpoint of an interval a facet is pinned to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Lo,
    Hi,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Lo, Side::Hi];

    pub fn index(self) -> usize {
        match self {
            Side::Lo => 0,
            Side::Hi => 1,
        }
    }
}

/// A compact interval `[lo, hi]` with `lo <= hi`. `lo == hi` is permitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Scalar,
    hi: Scalar,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar) -> Result<Self, GeometryError> {
        if lo > hi {
            return Err(GeometryError::EmptyInterval);
        }
        Ok(Interval { lo, hi })
    }

    /// The degenerate interval `[v, v]`.
    pub fn point(v: Scalar) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Scalar {
        &self.lo
    }

    pub fn hi(&self) -> &Scalar {
        &self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn endpoint(&self, side: Side) -> &Scalar {
        match side {
            Side::Lo => &self.lo,
            Side::Hi => &self.hi,
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn strictly_contains(&self, x: &Scalar) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn on_endpoint(&self, x: &Scalar) -> bool {
        x == &self.lo || x == &self.hi
    }

    /// `self ⊆ other`.
    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn meet(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Interval { lo, hi })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            crate::scalar::format_scalar(&self.lo),
            crate::scalar::format_scalar(&self.hi)
        )
    }
}

/// A point of `ℝ^d` with exact rational coordinates. Ordering is
/// lexicographic by coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        assert!(!coords.is_empty(), "points must have at least one coordinate");
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&crate::scalar::format_scalar(c))?;
        }
        f.write_str(")")
    }
}

/// An axis-aligned box: the cartesian product of `d` compact intervals.
/// May be degenerate in any subset of axes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxisBox {
    sides: Vec<Interval>,
}

impl AxisBox {
    pub fn new(sides: Vec<Interval>) -> Result<Self, GeometryError> {
        if sides.is_empty() {
            return Err(GeometryError::ZeroDimension);
        }
        Ok(AxisBox { sides })
    }

    /// Builds a box from integer endpoint pairs; convenient in tests and
    /// generators.
    ///
    /// # Panics
    /// Panics on empty input or `lo > hi`.
    pub fn from_int_pairs(pairs: &[(i64, i64)]) -> Self {
        let sides = pairs
            .iter()
            .map(|&(lo, hi)| {
                Interval::new(crate::scalar::int(lo), crate::scalar::int(hi))
                    .expect("endpoint pair out of order")
            })
            .collect();
        AxisBox::new(sides).expect("at least one axis required")
    }

    pub fn dim(&self) -> usize {
        self.sides.len()
    }

    pub fn sides(&self) -> &[Interval] {
        &self.sides
    }

    pub fn side(&self, axis: usize) -> &Interval {
        &self.sides[axis]
    }

    pub fn is_degenerate(&self) -> bool {
        self.sides.iter().any(Interval::is_degenerate)
    }

    pub fn nondegenerate_axes(&self) -> usize {
        self.sides.iter().filter(|s| !s.is_degenerate()).count()
    }

    /// Closed containment: every coordinate within its side.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn contains(&self, p: &Point) -> bool {
        assert_eq!(self.dim(), p.dim(), "dimension mismatch");
        self.sides
            .iter()
            .zip(p.coords())
            .all(|(side, x)| side.contains(x))
    }

    /// Strict containment in every coordinate; always false for a
    /// degenerate box (its interior is empty).
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn interior_contains(&self, p: &Point) -> bool {
        assert_eq!(self.dim(), p.dim(), "dimension mismatch");
        self.sides
            .iter()
            .zip(p.coords())
            .all(|(side, x)| side.strictly_contains(x))
    }

    /// `self ⊆ other`.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn subset_of(&self, other: &AxisBox) -> bool {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.sides
            .iter()
            .zip(other.sides())
            .all(|(a, b)| a.subset_of(b))
    }

    /// The vertex selected by `index`: coordinate `i` is the low endpoint
    /// of side `i` when bit `i` is 0, the high endpoint when it is 1.
    /// Distinct indices repeat as points exactly on degenerate axes.
    ///
    /// # Panics
    /// Panics if `index.len() != self.dim()`.
    pub fn vertex(&self, index: &BitString) -> Point {
        assert_eq!(self.dim(), index.len(), "vertex index length mismatch");
        Point::new(
            self.sides
                .iter()
                .zip(index.bits())
                .map(|(side, &bit)| {
                    if bit { side.hi().clone() } else { side.lo().clone() }
                })
                .collect(),
        )
    }

    /// All `2^d` indexed vertices in lexicographic index order.
    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        BitString::all(self.dim()).map(|idx| self.vertex(&idx))
    }

    /// The facet pinned to the given endpoint of the given axis: the box
    /// with that side collapsed to a single value.
    pub fn facet(&self, axis: usize, side: Side) -> Result<AxisBox, GeometryError> {
        if self.sides[axis].is_degenerate() {
            return Err(GeometryError::DegenerateFacetAxis { axis });
        }
        let mut sides = self.sides.clone();
        sides[axis] = Interval::point(self.sides[axis].endpoint(side).clone());
        Ok(AxisBox { sides })
    }

    /// The lexicographically least point of the box.
    pub fn lo_corner(&self) -> Point {
        Point::new(self.sides.iter().map(|s| s.lo().clone()).collect())
    }

    pub fn meet(&self, other: &AxisBox) -> Option<AxisBox> {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let mut sides = Vec::with_capacity(self.dim());
        for (a, b) in self.sides.iter().zip(other.sides()) {
            sides.push(a.meet(b)?);
        }
        Some(AxisBox { sides })
    }
}

impl fmt::Display for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sides.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The common intersection of a nonempty list of boxes, or `None` when some
/// axis yields `lo > hi`.
///
/// # Panics
/// Panics on an empty iterator or mismatched dimensions.
pub fn box_meet<'a>(boxes: impl IntoIterator<Item = &'a AxisBox>) -> Option<AxisBox> {
    let mut iter = boxes.into_iter();
    let first = iter.next().expect("box_meet needs at least one box").clone();
    iter.try_fold(first, |acc, b| acc.meet(b))
}

/// The boundary of a nondegenerate box. The shell records the geometry; the
/// denoted point set is its topological boundary (in `ℝ^1`, the two-point
/// set of endpoints).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HollowBox {
    shell: AxisBox,
}

impl HollowBox {
    pub fn new(shell: AxisBox) -> Result<Self, GeometryError> {
        for (axis, side) in shell.sides().iter().enumerate() {
            if side.is_degenerate() {
                return Err(GeometryError::DegenerateHollowSide { axis });
            }
        }
        Ok(HollowBox { shell })
    }

    pub fn from_int_pairs(pairs: &[(i64, i64)]) -> Self {
        HollowBox::new(AxisBox::from_int_pairs(pairs)).expect("degenerate shell")
    }

    pub fn dim(&self) -> usize {
        self.shell.dim()
    }

    /// The convex hull of the boundary, which is the shell box itself.
    pub fn hull(&self) -> &AxisBox {
        &self.shell
    }

    pub fn into_hull(self) -> AxisBox {
        self.shell
    }

    /// Boundary membership: inside the shell with at least one coordinate
    /// on an endpoint of its side.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn contains(&self, p: &Point) -> bool {
        assert_eq!(self.dim(), p.dim(), "dimension mismatch");
        self.shell.contains(p)
            && self
                .shell
                .sides()
                .iter()
                .zip(p.coords())
                .any(|(side, x)| side.on_endpoint(x))
    }

    /// The `2d` facets in (axis ascending, low then high) order.
    pub fn facets(&self) -> impl Iterator<Item = AxisBox> + '_ {
        (0..self.dim()).flat_map(move |axis| {
            Side::BOTH.into_iter().map(move |side| {
                self.shell
                    .facet(axis, side)
                    .expect("hollow box sides are nondegenerate")
            })
        })
    }
}

impl fmt::Display for HollowBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bd({})", self.shell)
    }
}

/// A membership-testable target set: a finite point set or a segment.
/// Used for exact `⊆` queries against intersections of families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSet {
    Points(Vec<Point>),
    Segment { a: Point, b: Point },
}

/// `conv{p, q}`. Collapses to a one-point set when `p == q`.
pub fn segment(p: Point, q: Point) -> TargetSet {
    assert_eq!(p.dim(), q.dim(), "dimension mismatch");
    if p == q {
        TargetSet::Points(vec![p])
    } else {
        TargetSet::Segment { a: p, b: q }
    }
}

impl TargetSet {
    pub fn points(points: Vec<Point>) -> TargetSet {
        TargetSet::Points(points)
    }

    /// Exact membership. Segment membership is rational colinearity plus
    /// betweenness; for axis-aligned segments this reduces to a coordinate
    /// interval check.
    pub fn contains(&self, x: &Point) -> bool {
        match self {
            TargetSet::Points(pts) => pts.iter().any(|p| p == x),
            TargetSet::Segment { a, b } => {
                if x.dim() != a.dim() {
                    return false;
                }
                // Solve x = a + t (b - a) on some axis where a and b differ,
                // then verify every axis agrees and 0 <= t <= 1.
                let pivot = (0..a.dim())
                    .find(|&i| a.coord(i) != b.coord(i))
                    .expect("segment endpoints are distinct");
                let t = (x.coord(pivot) - a.coord(pivot))
                    / (b.coord(pivot) - a.coord(pivot));
                if t < crate::scalar::int(0) || t > crate::scalar::int(1) {
                    return false;
                }
                (0..a.dim()).all(|i| {
                    x.coord(i) - a.coord(i) == (b.coord(i) - a.coord(i)) * t.clone()
                })
            }
        }
    }

    /// Coordinates that appear in the description of the set, per axis.
    pub fn coordinate_values(&self, axis: usize) -> Vec<&Scalar> {
        match self {
            TargetSet::Points(pts) => pts.iter().map(|p| p.coord(axis)).collect(),
            TargetSet::Segment { a, b } => vec![a.coord(axis), b.coord(axis)],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn pt(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn box_contains_examples() {
        let b = AxisBox::from_int_pairs(&[(0, 1), (0, 1)]);
        assert!(b.contains(&pt(&[0, 0])));
        assert!(!b.contains(&Point::new(vec![frac(1, 2), int(2)])));
        let degenerate = AxisBox::from_int_pairs(&[(0, 0), (0, 1)]);
        assert!(degenerate.contains(&Point::new(vec![int(0), frac(1, 2)])));
    }

    #[test]
    fn hollow_contains_examples() {
        let h = HollowBox::from_int_pairs(&[(0, 1), (0, 1)]);
        assert!(h.contains(&Point::new(vec![frac(1, 2), int(0)])));
        assert!(!h.contains(&Point::new(vec![frac(1, 2), frac(1, 2)])));
        assert!(!h.contains(&pt(&[2, 0])));
    }

    #[test]
    fn hull_is_the_shell() {
        let h = HollowBox::from_int_pairs(&[(-1, 5), (0, 2)]);
        assert_eq!(h.hull(), &AxisBox::from_int_pairs(&[(-1, 5), (0, 2)]));
    }

    #[test]
    fn interior_examples() {
        let b = AxisBox::from_int_pairs(&[(0, 1), (0, 1)]);
        assert!(b.interior_contains(&Point::new(vec![frac(1, 2), frac(1, 2)])));
        assert!(!b.interior_contains(&Point::new(vec![int(0), frac(1, 2)])));
        let degenerate = AxisBox::from_int_pairs(&[(0, 0), (0, 1)]);
        assert!(!degenerate.interior_contains(&Point::new(vec![int(0), frac(1, 2)])));
    }

    #[test]
    fn vertex_examples() {
        let b = AxisBox::from_int_pairs(&[(0, 1), (0, 1)]);
        assert_eq!(b.vertex(&BitString::parse("10").unwrap()), pt(&[1, 0]));
        assert_eq!(b.vertex(&BitString::parse("11").unwrap()), pt(&[1, 1]));
        let degenerate = AxisBox::from_int_pairs(&[(0, 0), (0, 1)]);
        assert_eq!(
            degenerate.vertex(&BitString::parse("00").unwrap()),
            degenerate.vertex(&BitString::parse("10").unwrap())
        );
    }

    #[test]
    fn distinct_vertex_count_is_two_to_nondegenerate_axes() {
        use std::collections::BTreeSet;
        for b in [
            AxisBox::from_int_pairs(&[(0, 1), (0, 1), (2, 2)]),
            AxisBox::from_int_pairs(&[(3, 3), (1, 1)]),
            AxisBox::from_int_pairs(&[(0, 2), (0, 1), (1, 4)]),
        ] {
            let distinct: BTreeSet<Point> = b.vertices().collect();
            assert_eq!(distinct.len(), 1 << b.nondegenerate_axes());
        }
    }

    #[test]
    fn facet_examples() {
        let b = AxisBox::from_int_pairs(&[(0, 4), (0, 4)]);
        assert_eq!(
            b.facet(0, Side::Lo).unwrap(),
            AxisBox::from_int_pairs(&[(0, 0), (0, 4)])
        );
        assert_eq!(
            b.facet(1, Side::Hi).unwrap(),
            AxisBox::from_int_pairs(&[(0, 4), (4, 4)])
        );
        let cube = AxisBox::from_int_pairs(&[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(
            cube.facet(2, Side::Lo).unwrap(),
            AxisBox::from_int_pairs(&[(0, 1), (0, 1), (0, 0)])
        );
        let degenerate = AxisBox::from_int_pairs(&[(0, 0), (0, 1)]);
        assert_eq!(
            degenerate.facet(0, Side::Lo),
            Err(GeometryError::DegenerateFacetAxis { axis: 0 })
        );
    }

    #[test]
    fn box_meet_examples() {
        let a = AxisBox::from_int_pairs(&[(0, 2), (0, 2)]);
        let b = AxisBox::from_int_pairs(&[(1, 3), (1, 3)]);
        assert_eq!(
            box_meet([&a, &b]),
            Some(AxisBox::from_int_pairs(&[(1, 2), (1, 2)]))
        );
        let c = AxisBox::from_int_pairs(&[(2, 3), (0, 1)]);
        let d = AxisBox::from_int_pairs(&[(0, 1), (0, 1)]);
        assert_eq!(box_meet([&c, &d]), None);
        assert_eq!(box_meet([&a]), Some(a.clone()));
    }

    #[test]
    fn hollow_rejects_degenerate_sides() {
        let degenerate = AxisBox::from_int_pairs(&[(0, 1), (2, 2)]);
        assert_eq!(
            HollowBox::new(degenerate),
            Err(GeometryError::DegenerateHollowSide { axis: 1 })
        );
    }

    #[test]
    fn one_dimensional_hollow_box_is_a_two_point_set() {
        let h = HollowBox::from_int_pairs(&[(0, 1)]);
        assert!(h.contains(&pt(&[0])));
        assert!(h.contains(&pt(&[1])));
        assert!(!h.contains(&Point::new(vec![frac(1, 2)])));
    }

    #[test]
    fn segment_examples() {
        let s = segment(pt(&[0, 0]), pt(&[0, 1]));
        assert!(s.contains(&Point::new(vec![int(0), frac(1, 2)])));
        let single = segment(pt(&[3, 4]), pt(&[3, 4]));
        assert_eq!(single, TargetSet::Points(vec![pt(&[3, 4])]));
        assert!(single.contains(&pt(&[3, 4])));
        let diag = segment(pt(&[0, 0]), pt(&[1, 1]));
        assert!(diag.contains(&Point::new(vec![frac(1, 2), frac(1, 2)])));
        assert!(!diag.contains(&Point::new(vec![frac(1, 2), int(0)])));
        assert!(!diag.contains(&pt(&[2, 2])));
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn contains_panics_on_dimension_mismatch() {
        let b = AxisBox::from_int_pairs(&[(0, 1), (0, 1)]);
        b.contains(&pt(&[0]));
    }
}
