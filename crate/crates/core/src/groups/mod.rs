//! Finite groups carrying a topology.
//!
//! Joint continuity of multiplication is decided with minimal
//! neighborhoods: `m` is continuous at `(g, h)` iff some product of open
//! sets around `g` and `h` lands in `N(gh)`, and `N(g) x N(h)` is the least
//! such box, so continuity everywhere is `N(g) N(h) ⊆ N(gh)` for all pairs.
//! The same argument gives `N(g)^-1 ⊆ N(g^-1)` for the inverse.

mod catalog;
mod harness;

pub use catalog::{all_labeled_groups, catalog, cyclic, direct_product, klein, symmetric3, MAX_LATIN_ORDER};
pub use harness::{theorem1_harness, GroupSource, HarnessConfig, HarnessError, HarnessReport, OrderStats, Violation};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagonal::{delta_baire_witness, Relation, SemiNbhd};
use crate::finite_topology::{FiniteSpace, PointSet, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cayley table: {0}")]
    InvalidTable(String),
    #[error("space has {space} points but the group has order {order}")]
    SpaceSize { order: usize, space: usize },
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("group is not paratopological")]
    NotParatopological,
    #[error("{0} is not an open set containing the identity")]
    NotIdentityNbhd(PointSet),
    #[error("no open V around the identity has closure(V V) inside {0}")]
    NoShrink(PointSet),
    #[error("no nonempty open W has W x W inside the closure of I({0}); the space is not Delta-Baire")]
    NoWitness(PointSet),
    #[error("witness contract violated: {0}")]
    ContractViolated(String),
}

/// A validated multiplication table on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn new(cayley: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = cayley.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("a group has at least one element".into()));
        }
        if let Some(r) = cayley.iter().position(|row| row.len() != n) {
            return Err(GroupError::InvalidTable(format!("row {r} does not have {n} entries")));
        }
        if let Some(&bad) = cayley.iter().flatten().find(|&&v| v >= n) {
            return Err(GroupError::InvalidTable(format!("entry {bad} is outside 0..{n}")));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(GroupError::InvalidTable(format!(
                            "({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| cayley[e][g] == g && cayley[g][e] == g))
            .ok_or_else(|| GroupError::InvalidTable("no identity element".into()))?;
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| cayley[g][h] == identity && cayley[h][g] == identity)
                    .ok_or_else(|| GroupError::InvalidTable(format!("{g} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Group { cayley, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.cayley[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// `{a b : a in x, b in y}`.
    pub fn set_mul(&self, x: PointSet, y: PointSet) -> PointSet {
        x.iter()
            .flat_map(|a| y.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .collect()
    }

    pub fn set_inv(&self, x: PointSet) -> PointSet {
        x.iter().map(|g| self.inv(g)).collect()
    }

    /// `g M`.
    pub fn translate(&self, g: usize, m: PointSet) -> PointSet {
        m.iter().map(|x| self.mul(g, x)).collect()
    }
}

/// Which continuity properties a topologized group has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub semitopological: bool,
    pub paratopological: bool,
    pub topological: bool,
}

/// Group table plus a topology on the same carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupJson", into = "GroupJson")]
pub struct FiniteTopoGroup {
    group: Group,
    space: FiniteSpace,
}

/// Wire form: `{"order": n, "cayley": [[..]], "space": <space>}`.
#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    cayley: Vec<Vec<usize>>,
    space: FiniteSpace,
}

impl TryFrom<GroupJson> for FiniteTopoGroup {
    type Error = GroupError;

    fn try_from(json: GroupJson) -> Result<Self, Self::Error> {
        if json.cayley.len() != json.order {
            return Err(GroupError::InvalidTable(format!(
                "order {} but {} rows",
                json.order,
                json.cayley.len()
            )));
        }
        FiniteTopoGroup::new(Group::new(json.cayley)?, json.space)
    }
}

impl From<FiniteTopoGroup> for GroupJson {
    fn from(g: FiniteTopoGroup) -> Self {
        GroupJson {
            order: g.group.order(),
            cayley: g.group.cayley,
            space: g.space,
        }
    }
}

/// Output of [`FiniteTopoGroup::inverse_continuity_witness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseWitness {
    /// Open `V` around the identity with `closure(V V) ⊆ U`.
    pub v: PointSet,
    /// Nonempty open `W` with `W x W` inside the closure of `I(V)`.
    pub w: PointSet,
    /// `W^-1 W`: symmetric, open, contains the identity, inside `U ∩ U^-1`.
    pub p: PointSet,
    /// Whether `closure(I(V)) ⊆ I(U)` held, the intermediate claim of the argument.
    pub closure_inside_i_u: bool,
}

impl FiniteTopoGroup {
    pub fn new(group: Group, space: FiniteSpace) -> Result<Self, GroupError> {
        if group.order() != space.len() {
            return Err(GroupError::SpaceSize {
                order: group.order(),
                space: space.len(),
            });
        }
        Ok(FiniteTopoGroup { group, space })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn classify(&self) -> Classification {
        let g = &self.group;
        let n = g.order();
        let semitopological = (0..n).all(|a| {
            let left: Vec<usize> = (0..n).map(|x| g.mul(a, x)).collect();
            let right: Vec<usize> = (0..n).map(|x| g.mul(x, a)).collect();
            self.space.is_continuous_self_map(&left) && self.space.is_continuous_self_map(&right)
        });
        let nb = |x| self.space.min_nbhd(x);
        let paratopological = (0..n).all(|a| {
            (0..n).all(|b| g.set_mul(nb(a), nb(b)).is_subset(nb(g.mul(a, b))))
        });
        let topological =
            paratopological && (0..n).all(|a| g.set_inv(nb(a)).is_subset(nb(g.inv(a))));
        Classification {
            semitopological,
            paratopological,
            topological,
        }
    }

    /// Translation invariance `N(g) = g N(e)`, which every semitopological
    /// instance must satisfy.
    pub fn is_translation_invariant(&self) -> bool {
        let base = self.space.min_nbhd(self.group.identity());
        (0..self.group.order()).all(|g| self.space.min_nbhd(g) == self.group.translate(g, base))
    }

    /// `I(M) = {(g, h) : g^-1 h ∈ M}`; row `g` is `g M`.
    pub fn i_relation(&self, m: PointSet) -> Relation {
        let rows = (0..self.group.order())
            .map(|g| self.group.translate(g, m))
            .collect();
        Relation::new(self.space.clone(), rows).expect("translates stay in the carrier")
    }

    /// Runs the inverse-continuity argument for one open `u` around `e`:
    /// shrink to `V` with `closure(V V) ⊆ u`, take a Delta-Baire witness `W`
    /// for `I(V)`, and return `P = W^-1 W`.
    pub fn inverse_continuity_witness(&self, u: PointSet) -> Result<InverseWitness, GroupError> {
        let g = &self.group;
        let e = g.identity();
        self.space.check_set(u)?;
        if !u.contains(e) || !self.space.open(u) {
            return Err(GroupError::NotIdentityNbhd(u));
        }
        if !self.classify().paratopological {
            return Err(GroupError::NotParatopological);
        }
        let v = self
            .space
            .opens()
            .into_iter()
            .find(|&v| v.contains(e) && self.space.cl(g.set_mul(v, v)).is_subset(u))
            .ok_or(GroupError::NoShrink(u))?;

        let iv = SemiNbhd::try_from(self.i_relation(v))
            .map_err(|err| GroupError::ContractViolated(format!("I(V) is not a semi-neighborhood: {err}")))?;
        let closure_inside_i_u = iv
            .relation()
            .product_closure()
            .is_subrelation(&self.i_relation(u));
        let w = delta_baire_witness(&iv).ok_or(GroupError::NoWitness(v))?;
        let p = g.set_mul(g.set_inv(w), w);

        let contract = [
            (self.space.open(p), "P is open"),
            (p.contains(e), "e ∈ P"),
            (g.set_inv(p) == p, "P = P^-1"),
            (p.is_subset(u), "P ⊆ U"),
            (p.is_subset(g.set_inv(u)), "P ⊆ U^-1"),
        ];
        if let Some((_, what)) = contract.iter().find(|(ok, _)| !ok) {
            return Err(GroupError::ContractViolated(format!("{what} fails for P = {p}")));
        }
        Ok(InverseWitness {
            v,
            w,
            p,
            closure_inside_i_u,
        })
    }

    /// Open sets containing the identity, ascending.
    pub fn identity_nbhds(&self) -> Vec<PointSet> {
        let e = self.group.identity();
        self.space
            .opens()
            .into_iter()
            .filter(|o| o.contains(e))
            .collect()
    }
}
