//! Finite families of solid and hollow boxes.

use std::fmt;

use thiserror::Error;

use crate::geometry::{AxisBox, HollowBox, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("a family must contain at least one member")]
    Empty,
    #[error("member {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
}

/// One member of a family: either a solid box (the box itself as a point
/// set) or a hollow box (its boundary).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Member {
    Solid(AxisBox),
    Hollow(HollowBox),
}

impl Member {
    pub fn dim(&self) -> usize {
        match self {
            Member::Solid(b) => b.dim(),
            Member::Hollow(h) => h.dim(),
        }
    }

    pub fn is_hollow(&self) -> bool {
        matches!(self, Member::Hollow(_))
    }

    /// Convex hull of the denoted point set.
    pub fn hull(&self) -> &AxisBox {
        match self {
            Member::Solid(b) => b,
            Member::Hollow(h) => h.hull(),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Member::Solid(b) => b.contains(p),
            Member::Hollow(h) => h.contains(p),
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Solid(b) => write!(f, "solid {b}"),
            Member::Hollow(h) => write!(f, "{h}"),
        }
    }
}

/// An ordered, nonempty list of members of one dimension. The order only
/// matters for determinism of witnesses and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    dim: usize,
    members: Vec<Member>,
}

impl Family {
    pub fn new(members: Vec<Member>) -> Result<Self, FamilyError> {
        let dim = members.first().ok_or(FamilyError::Empty)?.dim();
        for (index, m) in members.iter().enumerate() {
            if m.dim() != dim {
                return Err(FamilyError::DimensionMismatch {
                    index,
                    expected: dim,
                    found: m.dim(),
                });
            }
        }
        Ok(Family { dim, members })
    }

    pub fn of_hollow(boxes: Vec<HollowBox>) -> Result<Self, FamilyError> {
        Family::new(boxes.into_iter().map(Member::Hollow).collect())
    }

    pub fn of_solid(boxes: Vec<AxisBox>) -> Result<Self, FamilyError> {
        Family::new(boxes.into_iter().map(Member::Solid).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn member(&self, i: usize) -> &Member {
        &self.members[i]
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &Member> {
        self.members.iter()
    }

    pub fn all_hollow(&self) -> bool {
        self.members.iter().all(Member::is_hollow)
    }

    pub fn all_solid(&self) -> bool {
        self.members.iter().all(|m| !m.is_hollow())
    }

    /// The subfamily selected by `indices`, preserving their order.
    ///
    /// # Panics
    /// Panics if `indices` is empty or out of bounds.
    pub fn subfamily(&self, indices: &[usize]) -> Family {
        assert!(!indices.is_empty(), "subfamily needs at least one index");
        Family {
            dim: self.dim,
            members: indices.iter().map(|&i| self.members[i].clone()).collect(),
        }
    }

    /// Indices of the first occurrence of each distinct member, in order.
    pub fn distinct_indices(&self) -> Vec<usize> {
        let mut seen: Vec<&Member> = Vec::new();
        let mut out = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            if !seen.contains(&m) {
                seen.push(m);
                out.push(i);
            }
        }
        out
    }

    /// Membership of a point in every member.
    pub fn contains(&self, p: &Point) -> bool {
        self.members.iter().all(|m| m.contains(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_mixed_dimensions() {
        assert_eq!(Family::new(vec![]), Err(FamilyError::Empty));
        let a = Member::Hollow(HollowBox::from_int_pairs(&[(0, 1)]));
        let b = Member::Hollow(HollowBox::from_int_pairs(&[(0, 1), (0, 1)]));
        assert_eq!(
            Family::new(vec![a, b]),
            Err(FamilyError::DimensionMismatch {
                index: 1,
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn distinct_indices_collapses_duplicates() {
        let h = HollowBox::from_int_pairs(&[(0, 1)]);
        let g = HollowBox::from_int_pairs(&[(1, 2)]);
        let f = Family::of_hollow(vec![h.clone(), g.clone(), h, g]).unwrap();
        assert_eq!(f.distinct_indices(), vec![0, 1]);
    }
}
