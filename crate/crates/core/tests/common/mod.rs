//! Oracles shared by the integration tests. They work from the minimal
//! neighborhoods alone and never call the library's own set operations.
#![allow(dead_code)]

use baire_lab::finite_topology::{enumerate_spaces, FiniteSpace, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn spaces_upto(n: usize) -> Vec<FiniteSpace> {
    (1..=n).flat_map(|k| enumerate_spaces(k).unwrap()).collect()
}

/// A seeded space: random edges, then reflexive-transitive closure.
pub fn random_space(n: usize, seed: u64) -> FiniteSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = i == j || rng.gen_bool(0.3);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let nbhds = (0..n)
        .map(|i| (0..n).filter(|&j| le[i][j]).collect::<PointSet>())
        .collect();
    FiniteSpace::new(nbhds).unwrap()
}

pub fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    (0..1u64 << n).map(PointSet::from_bits)
}

pub fn is_open(x: &FiniteSpace, s: PointSet) -> bool {
    s.iter().all(|p| x.min_nbhd(p).is_subset(s))
}

pub fn closure(x: &FiniteSpace, s: PointSet) -> PointSet {
    (0..x.len()).filter(|&p| x.min_nbhd(p).meets(s)).collect()
}

pub fn is_dense(x: &FiniteSpace, s: PointSet) -> bool {
    closure(x, s) == x.carrier()
}

pub fn opens(x: &FiniteSpace) -> Vec<PointSet> {
    subsets(x.len()).filter(|&s| is_open(x, s)).collect()
}

/// Set partitions of `0..n` by restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<PointSet>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<PointSet>, out: &mut Vec<Vec<PointSet>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..=blocks.len() {
            if b == blocks.len() {
                blocks.push(PointSet::singleton(i));
                go(i + 1, n, blocks, out);
                blocks.pop();
            } else {
                blocks[b].insert(i);
                go(i + 1, n, blocks, out);
                blocks[b].remove(i);
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}
