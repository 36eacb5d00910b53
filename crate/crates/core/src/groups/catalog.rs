use super::Group;

/// Largest order for which [`all_labeled_groups`] fills Latin squares.
pub const MAX_LATIN_ORDER: usize = 5;

pub fn cyclic(n: usize) -> Group {
    let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    Group::new(cayley).expect("cyclic table is a group")
}

pub fn direct_product(a: &Group, b: &Group) -> Group {
    let nb = b.order();
    let n = a.order() * nb;
    let cayley = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                .collect()
        })
        .collect();
    Group::new(cayley).expect("direct product of groups is a group")
}

/// `Z2 x Z2`.
pub fn klein() -> Group {
    direct_product(&cyclic(2), &cyclic(2))
}

/// Permutations of `{0,1,2}` in lexicographic order, composed as
/// `(a b)(i) = a(b(i))`; element 0 is the identity.
pub fn symmetric3() -> Group {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let cayley = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect();
    Group::new(cayley).expect("S3 table is a group")
}

/// One table per isomorphism class, orders 1 through 6.
pub fn catalog(order: usize) -> Vec<(&'static str, Group)> {
    match order {
        1 => vec![("Z1", cyclic(1))],
        2 => vec![("Z2", cyclic(2))],
        3 => vec![("Z3", cyclic(3))],
        4 => vec![("Z4", cyclic(4)), ("Z2xZ2", klein())],
        5 => vec![("Z5", cyclic(5))],
        6 => vec![("Z6", cyclic(6)), ("S3", symmetric3())],
        _ => Vec::new(),
    }
}

/// Every group table on `0..order` (any element may be the identity),
/// found by filling Latin squares and keeping the associative ones.
pub fn all_labeled_groups(order: usize) -> Option<Vec<Group>> {
    if order == 0 || order > MAX_LATIN_ORDER {
        return None;
    }
    let mut search = LatinSearch {
        n: order,
        cells: vec![vec![usize::MAX; order]; order],
        out: Vec::new(),
    };
    search.fill(0);
    Some(search.out)
}

struct LatinSearch {
    n: usize,
    cells: Vec<Vec<usize>>,
    out: Vec<Group>,
}

impl LatinSearch {
    fn fill(&mut self, at: usize) {
        if at == self.n * self.n {
            if let Ok(g) = Group::new(self.cells.clone()) {
                self.out.push(g);
            }
            return;
        }
        let (r, c) = (at / self.n, at % self.n);
        for v in 0..self.n {
            let used = self.cells[r][..c].contains(&v) || (0..r).any(|r2| self.cells[r2][c] == v);
            if used || !self.associative_so_far(r, c, v) {
                continue;
            }
            self.cells[r][c] = v;
            self.fill(at + 1);
            self.cells[r][c] = usize::MAX;
        }
    }

    /// Checks every associativity instance whose entries are all known once
    /// `(r, c) = v` is placed.
    fn associative_so_far(&mut self, r: usize, c: usize, v: usize) -> bool {
        self.cells[r][c] = v;
        let n = self.n;
        let get = |cells: &Vec<Vec<usize>>, a: usize, b: usize| {
            let x = cells[a][b];
            (x != usize::MAX).then_some(x)
        };
        let mut ok = true;
        'outer: for a in 0..n {
            for b in 0..n {
                let Some(ab) = get(&self.cells, a, b) else { continue };
                for d in 0..n {
                    let lhs = get(&self.cells, ab, d);
                    let rhs = get(&self.cells, b, d).and_then(|bd| get(&self.cells, a, bd));
                    if let (Some(l), Some(rr)) = (lhs, rhs) {
                        if l != rr {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        self.cells[r][c] = usize::MAX;
        ok
    }
}
