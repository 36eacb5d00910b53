//! Boundedness and convergence of eventually periodic sequences of sets in
//! a finite space.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::finite_topology::{FiniteSpace, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("the cycle of a periodic family must be nonempty")]
    EmptyCycle,
    #[error("{0} is not a subset of the carrier")]
    OutOfRange(PointSet),
}

/// `prefix` once, then `cycle` repeated forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicFamily {
    #[serde(default)]
    pub prefix: Vec<PointSet>,
    pub cycle: Vec<PointSet>,
}

impl PeriodicFamily {
    pub fn new(prefix: Vec<PointSet>, cycle: Vec<PointSet>) -> Result<Self, FamilyError> {
        let f = PeriodicFamily { prefix, cycle };
        if f.cycle.is_empty() {
            return Err(FamilyError::EmptyCycle);
        }
        Ok(f)
    }

    pub fn constant(s: PointSet) -> Self {
        PeriodicFamily {
            prefix: Vec::new(),
            cycle: vec![s],
        }
    }

    pub fn get(&self, n: usize) -> PointSet {
        match self.prefix.get(n) {
            Some(&s) => s,
            None => self.cycle[(n - self.prefix.len()) % self.cycle.len()],
        }
    }

    fn check(&self, space: &FiniteSpace) -> Result<(), FamilyError> {
        if self.cycle.is_empty() {
            return Err(FamilyError::EmptyCycle);
        }
        match self.prefix.iter().chain(&self.cycle).find(|s| space.check_set(**s).is_err()) {
            Some(&s) => Err(FamilyError::OutOfRange(s)),
            None => Ok(()),
        }
    }

    /// Every point has a neighborhood meeting finitely many members. On a
    /// finite carrier that means only finitely many members are nonempty.
    pub fn is_locally_finite(&self) -> bool {
        self.cycle.iter().all(|s| s.is_empty())
    }
}

/// Whether `f` meets only finitely many members of `gamma`.
pub fn meets_finitely_many(f: PointSet, gamma: &PeriodicFamily) -> bool {
    !gamma.cycle.iter().any(|g| g.meets(f))
}

/// Bounded: for every locally finite `γ` some member meets finitely many
/// members of `γ`. A locally finite `γ` on a finite carrier has finitely
/// many nonempty members, so any member works.
pub fn bounded_family_check(space: &FiniteSpace, family: &PeriodicFamily) -> Result<bool, FamilyError> {
    family.check(space)?;
    Ok(true)
}

/// Converges to `k`: every open `U ⊇ k` contains all but finitely many
/// members. The recurring members must then lie in the smallest open set
/// around `k`.
pub fn converges_to_check(space: &FiniteSpace, family: &PeriodicFamily, k: PointSet) -> Result<bool, FamilyError> {
    family.check(space)?;
    space.check_set(k).map_err(|_| FamilyError::OutOfRange(k))?;
    let hull = space.open_hull(k);
    Ok(family.cycle.iter().all(|f| f.is_subset(hull)))
}
