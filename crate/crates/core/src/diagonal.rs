//! Relations on `X x X`, semi-neighborhoods of the diagonal, and the
//! Delta-Baire decision procedure.
//!
//! The production check reduces to a single relation: product closure is
//! monotone and the rows-are-minimal-neighborhoods relation is the least
//! semi-neighborhood, so a witness for it is a witness for every other one.
//! The brute-force enumerator is kept as an independent oracle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::finite_topology::{FiniteSpace, PointSet, TopologyError};

/// Default cap on the number of semi-neighborhoods the oracle enumerates.
pub const DEFAULT_BRUTEFORCE_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagonalError {
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("relation has {got} rows but the space has {expected} points")]
    RowCount { expected: usize, got: usize },
    #[error("relation is not a semi-neighborhood of the diagonal: {0}")]
    NotSemiNbhd(String),
    #[error("brute force would visit {needed} semi-neighborhoods, above the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

/// `P` given by its rows `P_x = {y : (x, y) in P}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RelationJson")]
pub struct Relation {
    space: FiniteSpace,
    rows: Vec<PointSet>,
}

#[derive(Deserialize)]
struct RelationJson {
    space: FiniteSpace,
    rows: Vec<PointSet>,
}

impl TryFrom<RelationJson> for Relation {
    type Error = DiagonalError;

    fn try_from(json: RelationJson) -> Result<Self, Self::Error> {
        Relation::new(json.space, json.rows)
    }
}

impl Relation {
    pub fn new(space: FiniteSpace, rows: Vec<PointSet>) -> Result<Self, DiagonalError> {
        if rows.len() != space.len() {
            return Err(DiagonalError::RowCount {
                expected: space.len(),
                got: rows.len(),
            });
        }
        for &row in &rows {
            space.check_set(row)?;
        }
        Ok(Relation { space, rows })
    }

    pub fn from_pairs(
        space: FiniteSpace,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DiagonalError> {
        let n = space.len();
        let mut rows = vec![PointSet::EMPTY; n];
        for (x, y) in pairs {
            if x >= n || y >= n {
                return Err(TopologyError::PointOutOfRange { point: x.max(y), points: n }.into());
            }
            rows[x].insert(y);
        }
        Relation::new(space, rows)
    }

    pub fn identity(space: FiniteSpace) -> Self {
        let rows = (0..space.len()).map(PointSet::singleton).collect();
        Relation { space, rows }
    }

    pub fn full(space: FiniteSpace) -> Self {
        let rows = vec![space.carrier(); space.len()];
        Relation { space, rows }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    pub fn row(&self, x: usize) -> PointSet {
        self.rows[x]
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows.get(x).is_some_and(|r| r.contains(y))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().map(move |y| (x, y)))
    }

    /// Row-wise containment.
    pub fn is_subrelation(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(*b))
    }

    /// Whether `a x b` contains no pair of the relation.
    pub fn misses_box(&self, a: PointSet, b: PointSet) -> bool {
        a.iter().all(|x| !self.rows[x].meets(b))
    }

    /// Whether `a x b` is contained in the relation.
    pub fn contains_box(&self, a: PointSet, b: PointSet) -> bool {
        a.iter().all(|x| b.is_subset(self.rows[x]))
    }

    pub fn is_semi_open(&self) -> bool {
        self.rows.iter().all(|&r| self.space.open(r))
    }

    pub fn contains_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, r)| r.contains(x))
    }

    pub fn is_semi_nbhd(&self) -> bool {
        self.contains_diagonal() && self.is_semi_open()
    }

    /// Closure in the square: `(x, y)` is kept iff the minimal box
    /// `N(x) x N(y)` meets the relation.
    pub fn product_closure(&self) -> Relation {
        let n = self.space.len();
        let rows = (0..n)
            .map(|x| {
                let reach = self
                    .space
                    .min_nbhd(x)
                    .iter()
                    .fold(PointSet::EMPTY, |acc, x2| acc.union(self.rows[x2]));
                (0..n)
                    .filter(|&y| self.space.min_nbhd(y).meets(reach))
                    .collect()
            })
            .collect();
        Relation {
            space: self.space.clone(),
            rows,
        }
    }
}

/// A relation that is semi-open and contains the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SemiNbhd(Relation);

impl TryFrom<Relation> for SemiNbhd {
    type Error = DiagonalError;

    fn try_from(rel: Relation) -> Result<Self, Self::Error> {
        if let Some(x) = (0..rel.space.len()).find(|&x| !rel.rows[x].contains(x)) {
            return Err(DiagonalError::NotSemiNbhd(format!("({x},{x}) is missing")));
        }
        if let Some(x) = (0..rel.space.len()).find(|&x| !rel.space.open(rel.rows[x])) {
            return Err(DiagonalError::NotSemiNbhd(format!(
                "row {x} = {} is not open",
                rel.rows[x]
            )));
        }
        Ok(SemiNbhd(rel))
    }
}

impl SemiNbhd {
    pub fn relation(&self) -> &Relation {
        &self.0
    }

    pub fn into_relation(self) -> Relation {
        self.0
    }
}

/// Rows are the minimal neighborhoods; the least semi-neighborhood.
pub fn minimal_semi_nbhd(space: &FiniteSpace) -> SemiNbhd {
    SemiNbhd(Relation {
        space: space.clone(),
        rows: space.min_nbhds().to_vec(),
    })
}

/// Least nonempty open `W` (bit order) with `W x W` inside the product
/// closure of `p`, or `None`.
///
/// Any nonempty open subset of a witness is again a witness and precedes it
/// in bit order, so the search only visits minimal open sets.
pub fn delta_baire_witness(p: &SemiNbhd) -> Option<PointSet> {
    let closure = p.relation().product_closure();
    p.relation()
        .space()
        .minimal_opens()
        .into_iter()
        .find(|&w| closure.contains_box(w, w))
}

/// Post-hoc check of a witness: nonempty, open, `W x W` inside the closure.
pub fn is_valid_witness(p: &Relation, w: PointSet) -> bool {
    !w.is_empty()
        && p.space().check_set(w).is_ok()
        && p.space().open(w)
        && p.product_closure().contains_box(w, w)
}

pub fn is_delta_baire(space: &FiniteSpace) -> bool {
    !space.is_empty() && delta_baire_witness(&minimal_semi_nbhd(space)).is_some()
}

/// Exhaustive oracle: every semi-neighborhood of the diagonal, closures
/// computed by quantifying over all pairs of open sets.
pub fn is_delta_baire_bruteforce(space: &FiniteSpace, budget: u64) -> Result<bool, DiagonalError> {
    if space.is_empty() {
        return Ok(false);
    }
    let opens = space.opens();
    let nonempty: Vec<PointSet> = opens.iter().copied().filter(|o| !o.is_empty()).collect();
    let choices: Vec<Vec<PointSet>> = (0..space.len())
        .map(|x| opens.iter().copied().filter(|o| o.contains(x)).collect())
        .collect();
    let needed: u128 = choices.iter().map(|c| c.len() as u128).product();
    if needed > budget as u128 {
        return Err(DiagonalError::BudgetExceeded { needed, budget });
    }

    let in_closure = |rows: &[PointSet], x: usize, y: usize| {
        opens.iter().filter(|o| o.contains(x)).all(|&ox| {
            opens
                .iter()
                .filter(|o| o.contains(y))
                .all(|&oy| ox.iter().any(|a| rows[a].meets(oy)))
        })
    };
    let has_witness = |rows: &[PointSet]| {
        nonempty.iter().any(|&w| {
            w.iter()
                .all(|x| w.iter().all(|y| in_closure(rows, x, y)))
        })
    };

    // split on the first row so workers own disjoint slices of the search
    let all = choices[0].par_iter().all(|&first| {
        let mut rows = vec![PointSet::EMPTY; space.len()];
        rows[0] = first;
        let mut idx = vec![0usize; space.len()];
        loop {
            for x in 1..space.len() {
                rows[x] = choices[x][idx[x]];
            }
            if !has_witness(&rows) {
                return false;
            }
            // odometer over rows 1..n
            let mut x = 1;
            loop {
                if x == space.len() {
                    return true;
                }
                idx[x] += 1;
                if idx[x] < choices[x].len() {
                    break;
                }
                idx[x] = 0;
                x += 1;
            }
        }
    });
    Ok(all)
}

/// The intersection of all dense open sets is dense and nonempty.
///
/// In a finite space the countable families of dense opens are just finite
/// families repeated, so this is the full Baire condition.
pub fn is_baire(space: &FiniteSpace) -> bool {
    if space.is_empty() {
        return false;
    }
    let core = space
        .opens()
        .into_iter()
        .filter(|&o| space.dense(o))
        .fold(space.carrier(), PointSet::intersection);
    !core.is_empty() && space.dense(core)
}
