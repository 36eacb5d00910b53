//! Finite topological spaces in minimal-neighborhood form.
//!
//! A topology on `0..n` is stored as the minimal open set containing each
//! point. Open sets are exactly the unions of minimal neighborhoods, so the
//! representation is equivalent to the specialization preorder
//! (`y <= x` iff `y` lies in the minimal neighborhood of `x`).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest carrier a [`PointSet`] can address.
pub const MAX_POINTS: usize = 64;

/// Largest `n` accepted by [`enumerate_spaces`].
pub const MAX_ENUMERATION_POINTS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("point {point} is outside the carrier 0..{points}")]
    PointOutOfRange { point: usize, points: usize },
    #[error("carrier of {0} points exceeds the supported maximum of {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("expected {expected} minimal neighborhoods, got {got}")]
    RowCount { expected: usize, got: usize },
    #[error("point {0} is missing from its own minimal neighborhood")]
    NotReflexive(usize),
    #[error("{inner} lies in the minimal neighborhood of {outer} but its own neighborhood is not contained in it")]
    NotTransitive { outer: usize, inner: usize },
    #[error("enumeration of {0}-point topologies is beyond the supported bound {MAX_ENUMERATION_POINTS}")]
    EnumerationTooLarge(usize),
    #[error("subspace must be nonempty")]
    EmptySubspace,
}

/// A subset of `0..64`, stored as a bit mask.
///
/// The derived ordering compares the masks as integers; every search in the
/// crate that needs a canonical choice uses this order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_POINTS);
        PointSet(1u64 << x)
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_POINTS && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest element, if any.
    pub fn least(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn greatest(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> PointIter {
        PointIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for PointSet {
    fn from(points: [usize; N]) -> Self {
        points.into_iter().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for PointSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = points.iter().find(|&&x| x >= MAX_POINTS) {
            return Err(serde::de::Error::custom(format!(
                "point {bad} exceeds the supported carrier size {MAX_POINTS}"
            )));
        }
        Ok(points.into_iter().collect())
    }
}

pub struct PointIter(u64);

impl Iterator for PointIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }
}

/// A topology on `0..n` given by per-point minimal open neighborhoods.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpaceJson", into = "SpaceJson")]
pub struct FiniteSpace {
    min_nbhds: Vec<PointSet>,
}

/// Wire form: `{"points": n, "min_nbhds": [[ints]...]}`.
#[derive(Serialize, Deserialize)]
struct SpaceJson {
    points: usize,
    min_nbhds: Vec<PointSet>,
}

impl TryFrom<SpaceJson> for FiniteSpace {
    type Error = TopologyError;

    fn try_from(json: SpaceJson) -> Result<Self, Self::Error> {
        if json.min_nbhds.len() != json.points {
            return Err(TopologyError::RowCount {
                expected: json.points,
                got: json.min_nbhds.len(),
            });
        }
        FiniteSpace::new(json.min_nbhds)
    }
}

impl From<FiniteSpace> for SpaceJson {
    fn from(space: FiniteSpace) -> Self {
        SpaceJson {
            points: space.len(),
            min_nbhds: space.min_nbhds,
        }
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace{:?}", self.min_nbhds)
    }
}

impl FiniteSpace {
    /// Validates reflexivity and transitivity of the neighborhood assignment.
    pub fn new(min_nbhds: Vec<PointSet>) -> Result<Self, TopologyError> {
        let n = min_nbhds.len();
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        let carrier = PointSet::full(n);
        for (x, &nb) in min_nbhds.iter().enumerate() {
            if let Some(bad) = nb.difference(carrier).least() {
                return Err(TopologyError::PointOutOfRange { point: bad, points: n });
            }
            if !nb.contains(x) {
                return Err(TopologyError::NotReflexive(x));
            }
        }
        for (x, &nb) in min_nbhds.iter().enumerate() {
            for y in nb.iter() {
                if !min_nbhds[y].is_subset(nb) {
                    return Err(TopologyError::NotTransitive { outer: x, inner: y });
                }
            }
        }
        Ok(FiniteSpace { min_nbhds })
    }

    pub fn empty() -> Self {
        FiniteSpace { min_nbhds: Vec::new() }
    }

    pub fn discrete(n: usize) -> Self {
        FiniteSpace {
            min_nbhds: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        FiniteSpace {
            min_nbhds: vec![PointSet::full(n); n],
        }
    }

    /// Opens `{}`, `{0}`, `{0,1}`.
    pub fn sierpinski() -> Self {
        FiniteSpace {
            min_nbhds: vec![PointSet::from([0]), PointSet::from([0, 1])],
        }
    }

    /// Minimal neighborhoods `{0}, {0,1}, .., {0..n-1}`.
    pub fn chain(n: usize) -> Self {
        FiniteSpace {
            min_nbhds: (0..n).map(|x| PointSet::full(x + 1)).collect(),
        }
    }

    /// Partition topology whose open sets are the unions of `blocks`.
    pub fn partition(n: usize, blocks: &[PointSet]) -> Result<Self, TopologyError> {
        let mut min_nbhds = vec![PointSet::EMPTY; n];
        for &block in blocks {
            for x in block.iter() {
                if x >= n {
                    return Err(TopologyError::PointOutOfRange { point: x, points: n });
                }
                min_nbhds[x] = block;
            }
        }
        FiniteSpace::new(min_nbhds)
    }

    pub fn len(&self) -> usize {
        self.min_nbhds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.min_nbhds.is_empty()
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhds[x]
    }

    pub fn min_nbhds(&self) -> &[PointSet] {
        &self.min_nbhds
    }

    pub fn check_set(&self, s: PointSet) -> Result<(), TopologyError> {
        match s.difference(self.carrier()).least() {
            Some(point) => Err(TopologyError::PointOutOfRange {
                point,
                points: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn is_open(&self, s: PointSet) -> Result<bool, TopologyError> {
        self.check_set(s)?;
        Ok(self.open(s))
    }

    pub fn closure(&self, s: PointSet) -> Result<PointSet, TopologyError> {
        self.check_set(s)?;
        Ok(self.cl(s))
    }

    pub fn interior(&self, s: PointSet) -> Result<PointSet, TopologyError> {
        self.check_set(s)?;
        Ok(self.int(s))
    }

    pub fn is_dense(&self, s: PointSet) -> Result<bool, TopologyError> {
        self.check_set(s)?;
        Ok(self.dense(s))
    }

    // Unchecked forms; callers guarantee `s` lies in the carrier.

    pub(crate) fn open(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.min_nbhds[x].is_subset(s))
    }

    pub(crate) fn cl(&self, s: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.min_nbhds[x].meets(s))
            .collect()
    }

    pub(crate) fn int(&self, s: PointSet) -> PointSet {
        s.iter().filter(|&x| self.min_nbhds[x].is_subset(s)).collect()
    }

    pub(crate) fn dense(&self, s: PointSet) -> bool {
        self.cl(s) == self.carrier()
    }

    /// Smallest open set containing `s`.
    pub fn open_hull(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, x| acc.union(self.min_nbhds[x]))
    }

    /// Every open set, ascending in bit order (the empty set first).
    pub fn opens(&self) -> Vec<PointSet> {
        self.opens_within(self.carrier())
    }

    /// Every open subset of `u`, ascending in bit order.
    pub fn opens_within(&self, u: PointSet) -> Vec<PointSet> {
        let mut acc = BTreeSet::from([PointSet::EMPTY]);
        for x in self.int(u).iter() {
            let nb = self.min_nbhds[x];
            let extended: Vec<PointSet> = acc.iter().map(|o| o.union(nb)).collect();
            acc.extend(extended);
        }
        acc.into_iter().collect()
    }

    /// Nonempty open sets with no nonempty proper open subset.
    pub fn minimal_opens(&self) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = self
            .min_nbhds
            .iter()
            .copied()
            .filter(|&nb| nb.iter().all(|y| self.min_nbhds[y] == nb))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Regularity by definition: every open `U` around `x` contains an open
    /// `V` around `x` together with its closure.
    pub fn is_regular(&self) -> bool {
        let opens = self.opens();
        (0..self.len()).all(|x| {
            opens.iter().filter(|u| u.contains(x)).all(|&u| {
                opens
                    .iter()
                    .any(|&v| v.contains(x) && self.cl(v).is_subset(u))
            })
        })
    }

    /// Whether the minimal neighborhoods partition the carrier.
    pub fn is_partition(&self) -> bool {
        self.min_nbhds.iter().all(|&a| {
            self.min_nbhds
                .iter()
                .all(|&b| a == b || !a.meets(b))
        })
    }

    /// Whether `f` (a map on the carrier) is continuous: preimages of
    /// minimal neighborhoods are open.
    pub fn is_continuous_self_map(&self, f: &[usize]) -> bool {
        self.min_nbhds.iter().all(|&nb| {
            let pre: PointSet = (0..self.len()).filter(|&x| nb.contains(f[x])).collect();
            self.open(pre)
        })
    }

    pub fn subspace(&self, y: PointSet) -> Result<Subspace, TopologyError> {
        self.check_set(y)?;
        if y.is_empty() {
            return Err(TopologyError::EmptySubspace);
        }
        let embedding = y.to_vec();
        let local = |s: PointSet| -> PointSet {
            embedding
                .iter()
                .enumerate()
                .filter(|(_, &p)| s.contains(p))
                .map(|(i, _)| i)
                .collect()
        };
        let min_nbhds = embedding
            .iter()
            .map(|&p| local(self.min_nbhds[p].intersection(y)))
            .collect();
        Ok(Subspace {
            space: FiniteSpace { min_nbhds },
            embedding,
            parent_points: self.len(),
        })
    }
}

/// Product space; point `(x, y)` is flattened to `x * b.len() + y`.
pub fn product(a: &FiniteSpace, b: &FiniteSpace) -> Result<FiniteSpace, TopologyError> {
    let n = a.len() * b.len();
    if n > MAX_POINTS {
        return Err(TopologyError::TooManyPoints(n));
    }
    let layout = ProductLayout::new(vec![a.len(), b.len()])?;
    let min_nbhds = (0..n)
        .map(|p| {
            let c = layout.decode(p);
            layout.boxed(&[a.min_nbhd(c[0]), b.min_nbhd(c[1])])
        })
        .collect();
    Ok(FiniteSpace { min_nbhds })
}

/// Row-major coordinates of a flattened finite product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductLayout {
    dims: Vec<usize>,
}

impl ProductLayout {
    pub fn new(dims: Vec<usize>) -> Result<Self, TopologyError> {
        let n = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .unwrap_or(usize::MAX);
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        Ok(ProductLayout { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&c, &d)| acc * d + c)
    }

    pub fn decode(&self, mut p: usize) -> Vec<usize> {
        let mut coords = vec![0; self.dims.len()];
        for (slot, &d) in coords.iter_mut().zip(&self.dims).rev() {
            *slot = p % d;
            p /= d;
        }
        coords
    }

    /// The box `sides[0] x sides[1] x ..` as a flattened set.
    pub fn boxed(&self, sides: &[PointSet]) -> PointSet {
        (0..self.size())
            .filter(|&p| {
                self.decode(p)
                    .iter()
                    .zip(sides)
                    .all(|(&c, side)| side.contains(c))
            })
            .collect()
    }

    /// Projection of a flattened set onto coordinate `axis`.
    pub fn project(&self, s: PointSet, axis: usize) -> PointSet {
        s.iter().map(|p| self.decode(p)[axis]).collect()
    }

    /// The product space of `factors`, in this layout.
    pub fn product_space(factors: &[FiniteSpace]) -> Result<(FiniteSpace, ProductLayout), TopologyError> {
        let layout = ProductLayout::new(factors.iter().map(FiniteSpace::len).collect())?;
        let min_nbhds = (0..layout.size())
            .map(|p| {
                let sides: Vec<PointSet> = layout
                    .decode(p)
                    .iter()
                    .zip(factors)
                    .map(|(&c, f)| f.min_nbhd(c))
                    .collect();
                layout.boxed(&sides)
            })
            .collect();
        Ok((FiniteSpace { min_nbhds }, layout))
    }
}

/// A subspace together with its embedding into the parent carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub space: FiniteSpace,
    /// `embedding[i]` is the parent index of local point `i`.
    pub embedding: Vec<usize>,
    parent_points: usize,
}

impl Subspace {
    pub fn image(&self) -> PointSet {
        self.embedding.iter().copied().collect()
    }

    pub fn parent_points(&self) -> usize {
        self.parent_points
    }

    pub fn to_parent(&self, s: PointSet) -> PointSet {
        s.iter().map(|i| self.embedding[i]).collect()
    }

    /// Local indices of the parent points of `s` that lie in the subspace.
    pub fn from_parent(&self, s: PointSet) -> PointSet {
        self.embedding
            .iter()
            .enumerate()
            .filter(|(_, &p)| s.contains(p))
            .map(|(i, _)| i)
            .collect()
    }
}

/// All labeled topologies on `n` points, each exactly once.
///
/// Backtracks over the off-diagonal entries of the specialization preorder,
/// pruning as soon as a decided triple violates transitivity.
pub fn enumerate_spaces(n: usize) -> Result<Vec<FiniteSpace>, TopologyError> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(TopologyError::EnumerationTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut state = PreorderSearch {
        n,
        rel: (0..n).map(PointSet::singleton).collect(),
        decided: (0..n).map(PointSet::singleton).collect(),
        out: Vec::new(),
    };
    state.extend(&pairs, 0);
    Ok(state.out)
}

struct PreorderSearch {
    n: usize,
    // rel[i] is the minimal neighborhood of i under construction
    rel: Vec<PointSet>,
    decided: Vec<PointSet>,
    out: Vec<FiniteSpace>,
}

impl PreorderSearch {
    fn is(&self, i: usize, j: usize) -> Option<bool> {
        self.decided[i].contains(j).then(|| self.rel[i].contains(j))
    }

    fn consistent(&self, i: usize, j: usize, value: bool) -> bool {
        (0..self.n).all(|k| {
            if value {
                // (i,j),(j,k) => (i,k)   and   (k,i),(i,j) => (k,j)
                !(self.is(j, k) == Some(true) && self.is(i, k) == Some(false))
                    && !(self.is(k, i) == Some(true) && self.is(k, j) == Some(false))
            } else {
                // (i,k),(k,j) => (i,j)
                !(self.is(i, k) == Some(true) && self.is(k, j) == Some(true))
            }
        })
    }

    fn extend(&mut self, pairs: &[(usize, usize)], at: usize) {
        let Some(&(i, j)) = pairs.get(at) else {
            self.out.push(FiniteSpace {
                min_nbhds: self.rel.clone(),
            });
            return;
        };
        self.decided[i].insert(j);
        for value in [false, true] {
            if value {
                self.rel[i].insert(j);
            }
            if self.consistent(i, j, value) {
                self.extend(pairs, at + 1);
            }
            self.rel[i].remove(j);
        }
        self.decided[i].remove(j);
    }
}
