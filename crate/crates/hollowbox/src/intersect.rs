//! Exact emptiness decisions for families of solid and hollow boxes.
//!
//! Two independent algorithms answer the same question and cross-check each
//! other:
//!
//! * the **grid oracle** ([`oracle_intersect`]) enumerates representative
//!   points of the coordinate arrangement spanned by all member endpoints
//!   (endpoints plus midpoints of consecutive endpoints, per axis). The
//!   intersection of the family is a finite union of closed faces of that
//!   arrangement, so it is nonempty iff it contains a representative. This
//!   makes `Empty` a certificate, at the cost of a grid whose size is the
//!   product of per-axis candidate counts;
//! * the **facet search** ([`dfs_intersect`]) backtracks over one facet
//!   choice per hollow member, keeping the running box intersection and
//!   pruning as soon as it empties.
//!
//! Both return exact rational witness points. Witnesses may differ between
//! the algorithms; emptiness never may.

use thiserror::Error;

use crate::family::{Family, Member};
use crate::geometry::{AxisBox, Interval, Point, Side, TargetSet};
use crate::scalar::{midpoint, Scalar};

/// Grids larger than this many candidate points are refused by the oracle
/// (the facet search has no such limit). Overridable per call; the CLI also
/// honors the `HH_CAND_CAP` environment variable.
pub const DEFAULT_CANDIDATE_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(
        "candidate grid has {candidates} points, above the cap of {cap}; \
         use the facet search or raise the cap"
    )]
    CandidateCapExceeded { candidates: u128, cap: u64 },
    #[error("target coordinate {value} on axis {axis} is not a member endpoint")]
    TargetOffGrid { axis: usize, value: String },
}

/// Outcome of an emptiness decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntersectionResult {
    Empty,
    Witness(Point),
}

impl IntersectionResult {
    pub fn is_empty(&self) -> bool {
        matches!(self, IntersectionResult::Empty)
    }

    pub fn witness(&self) -> Option<&Point> {
        match self {
            IntersectionResult::Empty => None,
            IntersectionResult::Witness(p) => Some(p),
        }
    }
}

/// Per-axis endpoint and candidate lists for the grid oracle.
///
/// Candidates are the sorted distinct member endpoints interleaved with the
/// midpoints of consecutive endpoint pairs (`2m - 1` candidates for `m`
/// endpoints), so every face of the product arrangement has a
/// representative and no candidate falls outside the global endpoint range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFrame {
    axes: Vec<AxisGrid>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisGrid {
    pub endpoints: Vec<Scalar>,
    pub candidates: Vec<Scalar>,
}

impl GridFrame {
    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axis(&self, i: usize) -> &AxisGrid {
        &self.axes[i]
    }

    /// Total number of candidate points (product over axes).
    pub fn candidate_count(&self) -> u128 {
        self.axes
            .iter()
            .map(|a| a.candidates.len() as u128)
            .product()
    }
}

/// Builds the per-axis endpoint/candidate lists for a family.
pub fn build_grid(family: &Family) -> GridFrame {
    let d = family.dim();
    let mut axes = Vec::with_capacity(d);
    for axis in 0..d {
        let mut endpoints: Vec<Scalar> = Vec::with_capacity(2 * family.len());
        for m in family.iter() {
            let side = m.hull().side(axis);
            endpoints.push(side.lo().clone());
            endpoints.push(side.hi().clone());
        }
        endpoints.sort();
        endpoints.dedup();
        let mut candidates = Vec::with_capacity(2 * endpoints.len() - 1);
        for (i, e) in endpoints.iter().enumerate() {
            if i > 0 {
                candidates.push(midpoint(&endpoints[i - 1], e));
            }
            candidates.push(e.clone());
        }
        axes.push(AxisGrid {
            endpoints,
            candidates,
        });
    }
    GridFrame { axes }
}

/// A subset of member indices, used to query the same grid for many
/// subfamilies without rebuilding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberMask {
    words: Vec<u64>,
    len: usize,
}

impl MemberMask {
    pub fn all(len: usize) -> Self {
        let mut words = vec![u64::MAX; len.div_ceil(64)];
        if len % 64 != 0 {
            *words.last_mut().unwrap() = (1u64 << (len % 64)) - 1;
        }
        MemberMask { words, len }
    }

    pub fn empty(len: usize) -> Self {
        MemberMask {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn without(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.remove(i);
        m
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn intersects(&self, other: &[u64]) -> bool {
        self.words.iter().zip(other).any(|(a, b)| a & b != 0)
    }

    /// True when every set bit of `self & other` is also set in `cover`.
    fn and_covered_by(&self, other: &[u64], cover: &[u64]) -> bool {
        self.words
            .iter()
            .zip(other)
            .zip(cover)
            .all(|((a, b), c)| a & b & !c == 0)
    }
}

/// The grid oracle with its per-axis classification tables built once, so
/// that many subfamilies of one family can be queried cheaply.
pub struct GridSolver<'a> {
    family: &'a Family,
    grid: GridFrame,
    words: usize,
    hollow: Vec<u64>,
    // outside[axis][candidate * words + w]: members whose side on `axis`
    // excludes the candidate; boundary likewise for endpoint contact.
    outside: Vec<Vec<u64>>,
    boundary: Vec<Vec<u64>>,
}

impl<'a> GridSolver<'a> {
    pub fn new(family: &'a Family, cap: u64) -> Result<Self, EngineError> {
        let grid = build_grid(family);
        let candidates = grid.candidate_count();
        if candidates > cap as u128 {
            return Err(EngineError::CandidateCapExceeded { candidates, cap });
        }
        let n = family.len();
        let words = n.div_ceil(64);
        let mut hollow = vec![0u64; words];
        for (i, m) in family.iter().enumerate() {
            if m.is_hollow() {
                hollow[i / 64] |= 1 << (i % 64);
            }
        }
        let mut outside = Vec::with_capacity(grid.dim());
        let mut boundary = Vec::with_capacity(grid.dim());
        for axis in 0..grid.dim() {
            let cands = &grid.axis(axis).candidates;
            let mut out = vec![0u64; cands.len() * words];
            let mut bnd = vec![0u64; cands.len() * words];
            for (ci, c) in cands.iter().enumerate() {
                for (mi, m) in family.iter().enumerate() {
                    let side = m.hull().side(axis);
                    if !side.contains(c) {
                        out[ci * words + mi / 64] |= 1 << (mi % 64);
                    } else if side.on_endpoint(c) {
                        bnd[ci * words + mi / 64] |= 1 << (mi % 64);
                    }
                }
            }
            outside.push(out);
            boundary.push(bnd);
        }
        Ok(GridSolver {
            family,
            grid,
            words,
            hollow,
            outside,
            boundary,
        })
    }

    pub fn grid(&self) -> &GridFrame {
        &self.grid
    }

    pub fn full_mask(&self) -> MemberMask {
        MemberMask::all(self.family.len())
    }

    /// True when `value` occurs in the endpoint list of `axis`.
    pub fn is_endpoint(&self, axis: usize, value: &Scalar) -> bool {
        self.grid.axis(axis).endpoints.binary_search(value).is_ok()
    }

    fn point_at(&self, choice: &[usize]) -> Point {
        Point::new(
            choice
                .iter()
                .enumerate()
                .map(|(axis, &ci)| self.grid.axis(axis).candidates[ci].clone())
                .collect(),
        )
    }

    /// Depth-first enumeration of candidate points lying in every active
    /// member, in lexicographic order. `visit` returns `false` to stop.
    fn enumerate(&self, active: &MemberMask, visit: &mut impl FnMut(&[usize]) -> bool) {
        let d = self.grid.dim();
        let words = self.words;
        let mut out_acc = vec![vec![0u64; words]; d + 1];
        let mut bnd_acc = vec![vec![0u64; words]; d + 1];
        let mut choice = vec![0usize; d];

        fn recurse(
            solver: &GridSolver<'_>,
            active: &MemberMask,
            depth: usize,
            out_acc: &mut [Vec<u64>],
            bnd_acc: &mut [Vec<u64>],
            choice: &mut [usize],
            visit: &mut impl FnMut(&[usize]) -> bool,
        ) -> bool {
            let d = solver.grid.dim();
            if depth == d {
                // Point is inside the hull of every active member; hollow
                // members additionally need an endpoint contact on some axis.
                let ok = active.and_covered_by(&solver.hollow, &bnd_acc[depth]);
                return !ok || visit(choice);
            }
            let words = solver.words;
            let n_cands = solver.grid.axis(depth).candidates.len();
            for ci in 0..n_cands {
                let (lower, upper) = out_acc.split_at_mut(depth + 1);
                let prev_out = &lower[depth];
                let next_out = &mut upper[0];
                let table = &solver.outside[depth][ci * words..(ci + 1) * words];
                for w in 0..words {
                    next_out[w] = prev_out[w] | table[w];
                }
                if active.intersects(next_out) {
                    continue;
                }
                let (lower, upper) = bnd_acc.split_at_mut(depth + 1);
                let prev_bnd = &lower[depth];
                let next_bnd = &mut upper[0];
                let table = &solver.boundary[depth][ci * words..(ci + 1) * words];
                for w in 0..words {
                    next_bnd[w] = prev_bnd[w] | table[w];
                }
                choice[depth] = ci;
                if !recurse(solver, active, depth + 1, out_acc, bnd_acc, choice, visit) {
                    return false;
                }
            }
            true
        }

        recurse(
            self,
            active,
            0,
            &mut out_acc,
            &mut bnd_acc,
            &mut choice,
            visit,
        );
    }

    /// Lexicographically least candidate point lying in every active
    /// member, if any.
    pub fn first_witness(&self, active: &MemberMask) -> Option<Point> {
        let mut found = None;
        self.enumerate(active, &mut |choice| {
            found = Some(self.point_at(choice));
            false
        });
        found
    }

    /// All candidate points lying in every active member, lexicographically
    /// sorted.
    pub fn representatives(&self, active: &MemberMask) -> Vec<Point> {
        let mut reps = Vec::new();
        self.enumerate(active, &mut |choice| {
            reps.push(self.point_at(choice));
            true
        });
        reps
    }

    /// True when every representative of the active subfamily's
    /// intersection lies in `target`.
    pub fn subset_of_target(&self, active: &MemberMask, target: &TargetSet) -> bool {
        let mut ok = true;
        self.enumerate(active, &mut |choice| {
            ok = target.contains(&self.point_at(choice));
            ok
        });
        ok
    }

    /// Validates that every coordinate used by `target` is a member
    /// endpoint on its axis, which is what makes [`Self::subset_of_target`]
    /// a complete decision procedure.
    pub fn validate_target(&self, target: &TargetSet) -> Result<(), EngineError> {
        for axis in 0..self.grid.dim() {
            for value in target.coordinate_values(axis) {
                if !self.is_endpoint(axis, value) {
                    return Err(EngineError::TargetOffGrid {
                        axis,
                        value: crate::scalar::format_scalar(value),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Ground-truth emptiness decision by exhaustive candidate enumeration.
/// Returns the lexicographically least witness, which makes the outcome
/// independent of member order.
pub fn oracle_intersect(family: &Family) -> Result<IntersectionResult, EngineError> {
    oracle_intersect_with_cap(family, DEFAULT_CANDIDATE_CAP)
}

pub fn oracle_intersect_with_cap(
    family: &Family,
    cap: u64,
) -> Result<IntersectionResult, EngineError> {
    let solver = GridSolver::new(family, cap)?;
    Ok(match solver.first_witness(&solver.full_mask()) {
        Some(p) => IntersectionResult::Witness(p),
        None => IntersectionResult::Empty,
    })
}

/// All representatives of the family's intersection, lexicographically
/// sorted. Empty intersection yields an empty list.
pub fn intersection_reps(family: &Family) -> Result<Vec<Point>, EngineError> {
    let solver = GridSolver::new(family, DEFAULT_CANDIDATE_CAP)?;
    Ok(solver.representatives(&solver.full_mask()))
}

/// Decides whether the family's intersection is contained in `target`.
/// Vacuously true for an empty intersection.
///
/// `target` must be grid-aligned: every coordinate it uses must be an
/// endpoint of some member on that axis. Otherwise the face-representative
/// completeness argument fails and the query is rejected loudly.
pub fn subset_check(family: &Family, target: &TargetSet) -> Result<bool, EngineError> {
    let solver = GridSolver::new(family, DEFAULT_CANDIDATE_CAP)?;
    solver.validate_target(target)?;
    Ok(solver.subset_of_target(&solver.full_mask(), target))
}

/// Backtracking facet search: one facet choice per hollow member, the
/// running box intersection pruned on emptiness. Returns the first
/// nonempty leaf's lexicographically least corner (members in input order,
/// facets in axis-ascending, low-then-high order).
pub fn dfs_intersect(family: &Family) -> IntersectionResult {
    let indices: Vec<usize> = (0..family.len()).collect();
    dfs_intersect_indices(family, &indices)
}

/// [`dfs_intersect`] on the subfamily selected by `indices`, without
/// materializing it.
///
/// # Panics
/// Panics if `indices` is empty or out of bounds.
pub fn dfs_intersect_indices(family: &Family, indices: &[usize]) -> IntersectionResult {
    assert!(!indices.is_empty(), "subfamily needs at least one index");
    // Hulls of all members are pre-intersected; a facet choice then only
    // pins one axis, because the running box already lies inside the
    // chosen member's shell on every other axis.
    let mut running: Vec<Interval> = match crate::geometry::box_meet(
        indices.iter().map(|&i| family.member(i).hull()),
    ) {
        Some(b) => b.sides().to_vec(),
        None => return IntersectionResult::Empty,
    };
    let hollows: Vec<&crate::geometry::HollowBox> = indices
        .iter()
        .filter_map(|&i| match family.member(i) {
            Member::Hollow(h) => Some(h),
            Member::Solid(_) => None,
        })
        .collect();

    fn search(running: &mut Vec<Interval>, hollows: &[&crate::geometry::HollowBox]) -> Option<Point> {
        let Some((h, rest)) = hollows.split_first() else {
            return Some(Point::new(
                running.iter().map(|s| s.lo().clone()).collect(),
            ));
        };
        for axis in 0..running.len() {
            for side in Side::BOTH {
                let endpoint = h.hull().side(axis).endpoint(side);
                if !running[axis].contains(endpoint) {
                    continue;
                }
                let saved = std::mem::replace(
                    &mut running[axis],
                    Interval::point(endpoint.clone()),
                );
                let found = search(running, rest);
                running[axis] = saved;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    match search(&mut running, &hollows) {
        Some(p) => IntersectionResult::Witness(p),
        None => IntersectionResult::Empty,
    }
}
