mod common;

use baire_lab::diagonal::{
    delta_baire_witness, is_baire, is_delta_baire, is_delta_baire_bruteforce, is_valid_witness, minimal_semi_nbhd,
    Relation,
};
use baire_lab::finite_topology::{enumerate_spaces, product, FiniteSpace, PointSet, ProductLayout};
use baire_lab::groups::{catalog, cyclic, FiniteTopoGroup};
use common::{closure, is_dense, is_open, opens, random_space, spaces_upto, subsets};
use proptest::prelude::*;

/// Counts preorders on `n` points by brute force over all relations.
fn count_preorders(n: usize) -> usize {
    let cells = n * n;
    (0u64..1 << cells)
        .filter(|&bits| {
            let le = |i: usize, j: usize| bits >> (i * n + j) & 1 == 1;
            (0..n).all(|i| le(i, i))
                && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(le(i, j) && le(j, k)) || le(i, k))))
        })
        .count()
}

#[test]
fn enumeration_matches_preorder_count() {
    for n in 1..=4 {
        let spaces = enumerate_spaces(n).unwrap();
        assert_eq!(spaces.len(), count_preorders(n), "n = {n}");
        let mut seen: Vec<_> = spaces.iter().map(|s| s.min_nbhds().to_vec()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), spaces.len());
    }
    assert_eq!(enumerate_spaces(5).unwrap().len(), 6942);
    assert!(enumerate_spaces(7).is_err());
}

#[test]
fn opens_are_a_topology() {
    for x in spaces_upto(3) {
        let os = x.opens();
        assert_eq!(os, opens(&x));
        for &a in &os {
            for &b in &os {
                assert!(os.contains(&a.union(b)) && os.contains(&a.intersection(b)));
            }
        }
    }
}

#[test]
fn regular_exactly_when_partition() {
    for x in spaces_upto(4) {
        let os = opens(&x);
        let regular = (0..x.len()).all(|p| {
            os.iter()
                .filter(|u| u.contains(p))
                .all(|&u| os.iter().any(|&v| v.contains(p) && closure(&x, v).is_subset(u)))
        });
        assert_eq!(x.is_regular(), regular, "{x:?}");
        assert_eq!(x.is_partition(), regular, "{x:?}");
    }
}

#[test]
fn product_min_nbhds_are_boxes() {
    let spaces = spaces_upto(2);
    for a in &spaces {
        for b in &spaces {
            let p = product(a, b).unwrap();
            let (q, layout) = ProductLayout::product_space(&[a.clone(), b.clone()]).unwrap();
            assert_eq!(p, q);
            for i in 0..a.len() {
                for j in 0..b.len() {
                    let pt = layout.encode(&[i, j]);
                    assert_eq!(p.min_nbhd(pt), layout.boxed(&[a.min_nbhd(i), b.min_nbhd(j)]));
                }
            }
        }
    }
    let ind = FiniteSpace::indiscrete(2);
    let s = FiniteSpace::sierpinski();
    let (p, layout) = ProductLayout::product_space(&[ind.clone(), s.clone()]).unwrap();
    for x in 0..2 {
        for y in 0..2 {
            assert_eq!(p.min_nbhd(layout.encode(&[x, y])), layout.boxed(&[ind.carrier(), s.min_nbhd(y)]));
        }
    }
}

#[test]
fn subspace_topology_is_traced() {
    for x in spaces_upto(3) {
        for y in subsets(x.len()).filter(|y| !y.is_empty()) {
            let sub = x.subspace(y).unwrap();
            let traced: Vec<PointSet> = {
                let mut v: Vec<_> = opens(&x).into_iter().map(|o| sub.from_parent(o.intersection(y))).collect();
                v.sort();
                v.dedup();
                v
            };
            let mut own = sub.space.opens();
            own.sort();
            assert_eq!(own, traced);
            assert_eq!(sub.image(), y);
        }
    }
}

#[test]
fn delta_baire_examples() {
    for x in [FiniteSpace::discrete(2), FiniteSpace::sierpinski(), FiniteSpace::chain(3)] {
        assert!(is_delta_baire(&x));
        assert!(is_delta_baire_bruteforce(&x, 1 << 20).unwrap());
    }
    assert!(!is_delta_baire(&FiniteSpace::empty()));
    assert!(!is_baire(&FiniteSpace::empty()));
}

#[test]
fn witness_from_minimal_relation_is_valid() {
    for x in spaces_upto(4) {
        let p = minimal_semi_nbhd(&x);
        let w = delta_baire_witness(&p).expect("finite spaces have witnesses");
        assert!(is_open(&x, w) && !w.is_empty());
        let closed = p.relation().product_closure();
        for a in w.iter() {
            for b in w.iter() {
                assert!(closed.contains(a, b));
            }
        }
        assert!(is_valid_witness(p.relation(), w));
    }
}

#[test]
fn every_finite_space_is_baire() {
    for x in spaces_upto(3) {
        let dense_opens: Vec<_> = opens(&x).into_iter().filter(|&o| is_dense(&x, o)).collect();
        let meet = dense_opens.iter().fold(x.carrier(), |a, &b| a.intersection(b));
        assert!(is_dense(&x, meet));
        assert!(is_baire(&x));
    }
}

#[test]
fn bruteforce_budget_is_enforced() {
    assert!(is_delta_baire_bruteforce(&FiniteSpace::discrete(4), 3).is_err());
}

#[test]
fn relation_rejects_bad_rows() {
    let s = FiniteSpace::sierpinski();
    assert!(Relation::new(s.clone(), vec![PointSet::from([0])]).is_err());
    assert!(Relation::new(s, vec![PointSet::from([5]), PointSet::from([0])]).is_err());
}

/// Joint continuity checked on minimal neighborhoods.
fn oracle_classify(tg: &FiniteTopoGroup) -> (bool, bool, bool) {
    let g = tg.group();
    let x = tg.space();
    let n = g.order();
    let semi = (0..n).all(|a| {
        (0..n).all(|b| {
            let m = x.min_nbhd(g.mul(a, b));
            g.translate(a, x.min_nbhd(b)).is_subset(m)
                && x.min_nbhd(a).iter().all(|c| m.contains(g.mul(c, b)))
        })
    });
    let para = (0..n).all(|a| (0..n).all(|b| g.set_mul(x.min_nbhd(a), x.min_nbhd(b)).is_subset(x.min_nbhd(g.mul(a, b)))));
    let inv = (0..n).all(|a| g.set_inv(x.min_nbhd(a)).is_subset(x.min_nbhd(g.inv(a))));
    (semi, para, para && inv)
}

#[test]
fn classification_matches_oracle() {
    for order in 1..=4 {
        for (_, g) in catalog(order) {
            for x in enumerate_spaces(order).unwrap() {
                let tg = FiniteTopoGroup::new(g.clone(), x).unwrap();
                let c = tg.classify();
                assert_eq!((c.semitopological, c.paratopological, c.topological), oracle_classify(&tg));
            }
        }
    }
}

#[test]
fn finite_paratopological_groups_are_topological() {
    let mut para = 0;
    for order in 1..=4 {
        for (_, g) in catalog(order) {
            for x in enumerate_spaces(order).unwrap() {
                let c = FiniteTopoGroup::new(g.clone(), x).unwrap().classify();
                if c.paratopological {
                    para += 1;
                    assert!(c.topological);
                }
            }
        }
    }
    assert!(para > 0);
}

#[test]
fn i_relation_of_open_identity_nbhd_is_semi_nbhd() {
    for order in 1..=4 {
        for (_, g) in catalog(order) {
            for x in enumerate_spaces(order).unwrap() {
                let tg = FiniteTopoGroup::new(g.clone(), x).unwrap();
                if !tg.classify().semitopological {
                    continue;
                }
                for m in tg.identity_nbhds() {
                    assert!(tg.i_relation(m).is_semi_nbhd());
                }
            }
        }
    }
    let z3 = cyclic(3);
    let tg = FiniteTopoGroup::new(z3, FiniteSpace::indiscrete(3)).unwrap();
    assert_eq!(tg.i_relation(PointSet::from([0, 1])).row(2), PointSet::from([0, 2]));
}

proptest! {
    #[test]
    fn closure_interior_duality(seed in any::<u64>(), n in 1usize..=6, bits in any::<u64>()) {
        let x = random_space(n, seed);
        let s = PointSet::from_bits(bits & x.carrier().bits());
        let cl = x.closure(s).unwrap();
        prop_assert_eq!(cl, closure(&x, s));
        let comp = x.carrier().difference(s);
        prop_assert_eq!(x.interior(comp).unwrap(), x.carrier().difference(cl));
        prop_assert_eq!(x.is_open(s).unwrap(), is_open(&x, s));
        prop_assert!(is_open(&x, x.open_hull(s)) && s.is_subset(x.open_hull(s)));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 0usize..=6) {
        let x = random_space(n, seed);
        let text = serde_json::to_string(&x).unwrap();
        let back: FiniteSpace = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn delta_baire_agrees_with_bruteforce(seed in any::<u64>(), n in 1usize..=4) {
        let x = random_space(n, seed);
        prop_assert_eq!(is_delta_baire(&x), is_delta_baire_bruteforce(&x, 1 << 24).unwrap());
    }
}
