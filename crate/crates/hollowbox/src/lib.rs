//! Exact-arithmetic intersection predicates, Helly numbers, and cube-cover
//! combinatorics for hollow axis-aligned boxes.
//!
//! A hollow axis-aligned box is the boundary of a nondegenerate box (in
//! `ℝ^1`, a two-point set). Solid boxes obey the classical pattern: pairwise
//! intersection forces a common point. Families of hollow boxes do not, and
//! this crate provides the machinery to compute exactly how far that fails:
//!
//! * [`geometry`] — rational intervals, boxes, hollow boxes and their
//!   predicates; no floating point anywhere;
//! * [`intersect`] — two independent exact emptiness deciders (a grid
//!   oracle and a backtracking facet search) that cross-check each other;
//! * [`patterns`] — covers of `{0,1}^d` by wildcard patterns, minimal
//!   covers and their classification;
//! * [`extremal`] — generators and recognizers for the two extremal family
//!   shapes whose Helly defects are `2d+1` and `2^d`;
//! * [`verify`] — Π_k checks, Helly-defect computation, and randomized
//!   falsification sweeps for the intersection theorems.

pub mod bits;
pub mod family;
pub mod geometry;
pub mod intersect;
pub mod patterns;
pub mod scalar;

pub use bits::BitString;
pub use family::{Family, Member};
pub use geometry::{box_meet, segment, AxisBox, HollowBox, Interval, Point, Side, TargetSet};
pub use intersect::{
    build_grid, dfs_intersect, intersection_reps, oracle_intersect, subset_check,
    IntersectionResult,
};
pub use patterns::{Pattern, PatternSet};
pub use scalar::Scalar;
