//! Scans topologized groups of order up to 4 and checks one group by hand.

use baire_lab::finite_topology::{FiniteSpace, PointSet};
use baire_lab::groups::{cyclic, theorem1_harness, FiniteTopoGroup, HarnessConfig};

fn main() {
    let report = theorem1_harness(&HarnessConfig::default()).unwrap();
    for o in &report.orders {
        println!(
            "order {}: {} instances, {} paratopological, {} topological",
            o.order, o.instances, o.paratopological, o.topological
        );
    }
    println!("violations: {}", report.total.violations);

    // Z_4 with the cosets of {0, 2} as minimal neighborhoods
    let blocks = [PointSet::from([0, 2]), PointSet::from([1, 3])];
    let tg = FiniteTopoGroup::new(cyclic(4), FiniteSpace::partition(4, &blocks).unwrap()).unwrap();
    println!("{:?}", tg.classify());
    let w = tg.inverse_continuity_witness(PointSet::from([0, 2])).unwrap();
    println!("V = {}  W = {}  P = {}", w.v, w.w, w.p);
}
