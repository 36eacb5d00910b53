//! Exhaustive scan of (group table, topology) pairs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{all_labeled_groups, catalog, FiniteTopoGroup, Group};
use crate::diagonal::is_delta_baire;
use crate::finite_topology::{enumerate_spaces, FiniteSpace, TopologyError, MAX_ENUMERATION_POINTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSource {
    /// One table per isomorphism class.
    Catalog,
    /// Every labeled table, via Latin squares.
    AllLabeled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessConfig {
    pub max_order: usize,
    pub max_space_points: usize,
    pub groups: GroupSource,
    /// Cap on the number of (group, topology) instances.
    pub max_instances: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            max_order: 4,
            max_space_points: 5,
            groups: GroupSource::Catalog,
            max_instances: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("order {order} exceeds the topology enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("labeled group enumeration is limited to order {0}")]
    LabeledTooLarge(usize),
    #[error("scan needs {needed} instances, above the budget of {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStats {
    pub order: usize,
    pub groups: usize,
    pub spaces: usize,
    pub instances: u64,
    pub semitopological: u64,
    pub paratopological: u64,
    pub topological: u64,
    pub paratopological_regular: u64,
    pub paratopological_nonregular: u64,
    pub paratopological_delta_baire: u64,
    pub witness_checks: u64,
    pub violations: u64,
}

impl OrderStats {
    fn merge(mut self, other: OrderStats) -> OrderStats {
        self.instances += other.instances;
        self.semitopological += other.semitopological;
        self.paratopological += other.paratopological;
        self.topological += other.topological;
        self.paratopological_regular += other.paratopological_regular;
        self.paratopological_nonregular += other.paratopological_nonregular;
        self.paratopological_delta_baire += other.paratopological_delta_baire;
        self.witness_checks += other.witness_checks;
        self.violations += other.violations;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub group: String,
    pub space: FiniteSpace,
    pub what: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessReport {
    pub format: u32,
    pub config: HarnessConfig,
    pub orders: Vec<OrderStats>,
    pub total: OrderStats,
    pub violations: Vec<Violation>,
    /// Every paratopological instance found was topological.
    pub paratopological_implies_topological: bool,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.total.violations == 0
    }
}

/// For every enumerated instance: classify, check translation invariance of
/// semitopological ones, and for paratopological ones check
/// `Delta-Baire => topological` and run the inverse-continuity witness for
/// every open set around the identity.
pub fn theorem1_harness(config: &HarnessConfig) -> Result<HarnessReport, HarnessError> {
    let bound = config.max_space_points.min(MAX_ENUMERATION_POINTS);
    if config.max_order > bound {
        return Err(HarnessError::OrderTooLarge {
            order: config.max_order,
            bound,
        });
    }
    let mut plan: Vec<(usize, Vec<(String, Group)>, Vec<FiniteSpace>)> = Vec::new();
    let mut needed = 0u64;
    for order in 1..=config.max_order {
        let groups: Vec<(String, Group)> = match config.groups {
            GroupSource::Catalog => catalog(order)
                .into_iter()
                .map(|(name, g)| (name.to_string(), g))
                .collect(),
            GroupSource::AllLabeled => all_labeled_groups(order)
                .ok_or(HarnessError::LabeledTooLarge(super::MAX_LATIN_ORDER))?
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("labeled{order}#{i}"), g))
                .collect(),
        };
        let spaces = enumerate_spaces(order)?;
        needed += (groups.len() * spaces.len()) as u64;
        if needed > config.max_instances {
            return Err(HarnessError::BudgetExceeded {
                needed,
                budget: config.max_instances,
            });
        }
        plan.push((order, groups, spaces));
    }

    let mut orders = Vec::new();
    let mut violations = Vec::new();
    for (order, groups, spaces) in &plan {
        let mut stats = OrderStats {
            order: *order,
            groups: groups.len(),
            spaces: spaces.len(),
            ..OrderStats::default()
        };
        for (name, group) in groups {
            let (s, mut v) = spaces
                .par_iter()
                .map(|space| check_instance(name, group, space))
                .reduce(
                    || (OrderStats::default(), Vec::new()),
                    |(a, mut va), (b, vb)| {
                        va.extend(vb);
                        (a.merge(b), va)
                    },
                );
            stats = stats.merge(s);
            violations.append(&mut v);
        }
        orders.push(stats);
    }
    let total = orders.iter().cloned().fold(OrderStats::default(), OrderStats::merge);
    Ok(HarnessReport {
        format: 1,
        config: config.clone(),
        paratopological_implies_topological: total.paratopological == total.topological,
        orders,
        total,
        violations,
    })
}

fn check_instance(name: &str, group: &Group, space: &FiniteSpace) -> (OrderStats, Vec<Violation>) {
    let mut stats = OrderStats {
        instances: 1,
        ..OrderStats::default()
    };
    let mut violations = Vec::new();
    let mut flag = |what: String| {
        violations.push(Violation {
            group: name.to_string(),
            space: space.clone(),
            what,
        })
    };
    let tg = FiniteTopoGroup::new(group.clone(), space.clone()).expect("sizes agree by construction");
    let c = tg.classify();
    if c.topological && !c.paratopological || c.paratopological && !c.semitopological {
        flag(format!("classification not monotone: {c:?}"));
    }
    if c.semitopological {
        stats.semitopological = 1;
        if !tg.is_translation_invariant() {
            flag("semitopological instance is not translation invariant".into());
        }
    }
    if c.paratopological {
        stats.paratopological = 1;
        if space.is_regular() {
            stats.paratopological_regular = 1;
        } else {
            stats.paratopological_nonregular = 1;
        }
        let delta_baire = is_delta_baire(space);
        if delta_baire {
            stats.paratopological_delta_baire = 1;
            if !c.topological {
                flag("paratopological and Delta-Baire but not topological".into());
            }
        }
        for u in tg.identity_nbhds() {
            stats.witness_checks += 1;
            match tg.inverse_continuity_witness(u) {
                Ok(w) if !w.closure_inside_i_u => {
                    flag(format!("closure of I({}) is not inside I({u})", w.v))
                }
                Ok(_) => {}
                Err(err) => flag(format!("witness for U = {u}: {err}")),
            }
        }
    }
    if c.topological {
        stats.topological = 1;
    }
    stats.violations = violations.len() as u64;
    (stats, violations)
}
