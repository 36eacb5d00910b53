//! Checks a few finite spaces and prints their Δ-Baire witnesses.

use baire_lab::diagonal::{delta_baire_witness, is_baire, is_delta_baire, minimal_semi_nbhd};
use baire_lab::finite_topology::{enumerate_spaces, FiniteSpace, PointSet};

fn main() {
    let spaces = [
        ("sierpinski", FiniteSpace::sierpinski()),
        ("chain-3", FiniteSpace::chain(3)),
        ("partition-4", FiniteSpace::partition(4, &[PointSet::from([0, 1]), PointSet::from([2, 3])]).unwrap()),
    ];
    for (name, x) in &spaces {
        let p = minimal_semi_nbhd(x);
        let w = delta_baire_witness(&p).unwrap();
        println!(
            "{name}: regular={} baire={} delta_baire={} witness={w}",
            x.is_regular(),
            is_baire(x),
            is_delta_baire(x)
        );
    }

    for n in 1..=4 {
        let all = enumerate_spaces(n).unwrap();
        let regular = all.iter().filter(|s| s.is_regular()).count();
        println!("{n} points: {} topologies, {regular} regular, all delta-Baire: {}", all.len(), all.iter().all(is_delta_baire));
    }
}
