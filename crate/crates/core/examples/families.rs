//! Eventually periodic families: local finiteness, convergence, boundedness.

use baire_lab::combinators::{bounded_family_check, converges_to_check, PeriodicFamily};
use baire_lab::finite_topology::{FiniteSpace, PointSet};

fn main() {
    let s = FiniteSpace::sierpinski();
    let f = PeriodicFamily::constant(PointSet::from([0]));
    println!("{{0}},{{0}},.. converges to {{0}}: {}", converges_to_check(&s, &f, PointSet::from([0])).unwrap());
    println!("{{0}},{{0}},.. converges to {{1}}: {}", converges_to_check(&s, &f, PointSet::from([1])).unwrap());
    println!("locally finite: {}", f.is_locally_finite());

    let d = FiniteSpace::discrete(3);
    let g = PeriodicFamily::new(vec![PointSet::from([0]), PointSet::from([1])], vec![PointSet::EMPTY]).unwrap();
    println!("{{0}},{{1}},∅,..: locally finite {}, bounded {}", g.is_locally_finite(), bounded_family_check(&d, &g).unwrap());
}
