use std::fmt::{Debug, Display};
use std::hash::Hash;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::diagonal::Relation;
use crate::finite_topology::{FiniteSpace, PointSet};

/// Constraint sets with at most this many points get uniformly random
/// moves drawn from the full open-set enumeration.
pub const FINITE_UNIFORM_LIMIT: usize = 10;

/// The space a game is played on, as seen by the referee and strategies.
pub trait Arena: Send + Sync {
    /// A move: a nonempty open set in the arena's move language.
    type Set: Clone + Eq + Hash + Debug + Display + Serialize + DeserializeOwned + Send + Sync;
    type Point: Clone + PartialEq + Debug + Display + Serialize + DeserializeOwned + Send + Sync;
    /// Relations on the square, for separation certificates.
    type Relation: Clone + Debug + Serialize + DeserializeOwned + Send + Sync;

    /// `U_{-1}`.
    fn root(&self) -> Self::Set;

    /// `Ok` iff `s` is a nonempty open set of this arena.
    fn validate(&self, s: &Self::Set) -> Result<(), String>;

    fn is_subset(&self, a: &Self::Set, b: &Self::Set) -> bool;

    /// `closure(a) ⊆ b`.
    fn closure_within(&self, a: &Self::Set, b: &Self::Set) -> bool;

    fn meets(&self, a: &Self::Set, b: &Self::Set) -> bool;

    /// Whether the carrier is finite, which makes α's win conditions exact.
    fn is_finite(&self) -> bool;

    /// Every legal move inside `within`, when the arena can enumerate them.
    fn legal_subsets(&self, within: &Self::Set) -> Option<Vec<Self::Set>>;

    /// A seeded legal move inside `within`.
    fn random_subset(&self, within: &Self::Set, rng: &mut ChaCha8Rng) -> Self::Set;

    fn contains_point(&self, s: &Self::Set, x: &Self::Point) -> bool;

    /// Whether every neighborhood of `x` meets `s`.
    fn nbhd_meets(&self, x: &Self::Point, s: &Self::Set) -> bool;

    /// Canonical point of a nonempty set.
    fn representative(&self, s: &Self::Set) -> Self::Point;

    /// Candidate pairs `(V, W)` inside `within`, in search order.
    fn separation_candidates(&self, within: &Self::Set) -> Vec<(Self::Set, Self::Set)>;

    /// `V x W ∩ P = ∅`.
    fn separates(&self, p: &Self::Relation, v: &Self::Set, w: &Self::Set) -> bool;

    fn is_semi_nbhd(&self, p: &Self::Relation) -> bool;
}

impl Arena for FiniteSpace {
    type Set = PointSet;
    type Point = usize;
    type Relation = Relation;

    fn root(&self) -> PointSet {
        self.carrier()
    }

    fn validate(&self, s: &PointSet) -> Result<(), String> {
        self.check_set(*s).map_err(|e| e.to_string())?;
        if s.is_empty() {
            return Err("set is empty".into());
        }
        if !self.open(*s) {
            return Err(format!("{s} is not open"));
        }
        Ok(())
    }

    fn is_subset(&self, a: &PointSet, b: &PointSet) -> bool {
        a.is_subset(*b)
    }

    fn closure_within(&self, a: &PointSet, b: &PointSet) -> bool {
        self.cl(*a).is_subset(*b)
    }

    fn meets(&self, a: &PointSet, b: &PointSet) -> bool {
        a.meets(*b)
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn legal_subsets(&self, within: &PointSet) -> Option<Vec<PointSet>> {
        let mut opens = self.opens_within(*within);
        opens.retain(|o| !o.is_empty());
        Some(opens)
    }

    fn random_subset(&self, within: &PointSet, rng: &mut ChaCha8Rng) -> PointSet {
        let inner = self.int(*within);
        if inner.len() <= FINITE_UNIFORM_LIMIT {
            let opens = self.legal_subsets(within).unwrap_or_default();
            if let Some(&o) = opens.choose(rng) {
                return o;
            }
            return *within;
        }
        // too many opens to list: a random nonempty union of minimal neighborhoods
        let points = inner.to_vec();
        let first = points[rng.gen_range(0..points.len())];
        let mut acc = self.min_nbhd(first);
        for &x in &points {
            if rng.gen_bool(0.5) {
                acc = acc.union(self.min_nbhd(x));
            }
        }
        acc
    }

    fn contains_point(&self, s: &PointSet, x: &usize) -> bool {
        s.contains(*x)
    }

    fn nbhd_meets(&self, x: &usize, s: &PointSet) -> bool {
        *x < self.len() && self.min_nbhd(*x).meets(*s)
    }

    fn representative(&self, s: &PointSet) -> usize {
        s.least().expect("representative of an empty set")
    }

    fn separation_candidates(&self, within: &PointSet) -> Vec<(PointSet, PointSet)> {
        let opens = self.legal_subsets(within).unwrap_or_default();
        opens
            .iter()
            .flat_map(|&v| opens.iter().map(move |&w| (v, w)))
            .collect()
    }

    fn separates(&self, p: &Relation, v: &PointSet, w: &PointSet) -> bool {
        p.space() == self && p.misses_box(*v, *w)
    }

    fn is_semi_nbhd(&self, p: &Relation) -> bool {
        p.space() == self && p.is_semi_nbhd()
    }
}
