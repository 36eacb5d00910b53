//! Exact witnesses on the Sorgenfrey line.

use baire_lab::sorgenfrey::{
    delta_baire_failure_witness, interval_closure, inversion_discontinuity_witness, rat, strip_closure,
    unit_interval, unit_strip,
};

fn main() {
    let u = vec![unit_interval()];
    let w = inversion_discontinuity_witness(&u).unwrap();
    for eps in [rat(1, 1), rat(1, 10), rat(1, 1000)] {
        let t = w.counterexample(&eps);
        println!("eps = {eps}: t = {t}, -t outside U: {}", w.validates(&u, &eps));
    }

    let (x, y) = delta_baire_failure_witness(&unit_interval());
    let closed = strip_closure(&unit_strip());
    println!("({x}, {y}) in closure of I([0,1)): {}", closed.contains(&x, &y));

    let c = interval_closure(&unit_interval());
    println!("closure of {} = {}", unit_interval(), c.value);
    for line in &c.trace {
        println!("  {line}");
    }
}
