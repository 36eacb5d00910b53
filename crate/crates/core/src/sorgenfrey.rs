//! The Sorgenfrey line over ℚ: basic sets `[a, b)` and difference strips
//! `{(x, y) : y - x ∈ [a, b)}` on the plane, with exact arithmetic.
//!
//! The carrier is ℚ rather than ℝ. Every witness below only needs rational
//! points, but note that the rational Sorgenfrey line is not Baire.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::combinators::{theorem2_beta_strategy, SeparatingBeta};
use crate::games::Arena;

pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SorgenfreyError {
    #[error("degenerate interval: need a < b, got [{a}, {b})")]
    Degenerate { a: String, b: String },
    #[error("0 is not in u")]
    ZeroNotInU,
    #[error("u contains a two-sided neighborhood of 0, so negation is continuous there")]
    NotAWitnessCase,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("empty union")]
    EmptyUnion,
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p/q"`, `"p"` or a finite decimal like `"-1.25"`.
pub fn parse_rat(s: &str) -> Result<Rat, SorgenfreyError> {
    let t = s.trim();
    let err = || SorgenfreyError::Parse(s.to_string());
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{frac}", whole.trim_start_matches(['-', '+']));
        let n: BigInt = digits.parse().map_err(|_| err())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rat::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let r = Rat::from_str(t).map_err(|_| err())?;
    if r.denom().is_zero() {
        return Err(err());
    }
    Ok(r)
}

pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

fn half(r: &Rat) -> Rat {
    r / int(2)
}

mod rat_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// A rational carried as a `"p/q"` string in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RatStr(#[serde(with = "rat_str")] pub Rat);

impl fmt::Display for RatStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    #[serde(with = "rat_str")]
    a: Rat,
    #[serde(with = "rat_str")]
    b: Rat,
}

/// The basic open set `[a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IntervalJson", into = "IntervalJson")]
pub struct SInterval {
    a: Rat,
    b: Rat,
}

impl TryFrom<IntervalJson> for SInterval {
    type Error = SorgenfreyError;

    fn try_from(j: IntervalJson) -> Result<Self, Self::Error> {
        SInterval::new(j.a, j.b)
    }
}

impl From<SInterval> for IntervalJson {
    fn from(i: SInterval) -> Self {
        IntervalJson { a: i.a, b: i.b }
    }
}

impl SInterval {
    pub fn new(a: Rat, b: Rat) -> Result<Self, SorgenfreyError> {
        if a < b {
            Ok(SInterval { a, b })
        } else {
            Err(SorgenfreyError::Degenerate {
                a: fmt_rat(&a),
                b: fmt_rat(&b),
            })
        }
    }

    pub fn parse(a: &str, b: &str) -> Result<Self, SorgenfreyError> {
        SInterval::new(parse_rat(a)?, parse_rat(b)?)
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn length(&self) -> Rat {
        &self.b - &self.a
    }

    pub fn midpoint(&self) -> Rat {
        half(&(&self.a + &self.b))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.a <= x && x < &self.b
    }

    pub fn is_subset(&self, other: &SInterval) -> bool {
        other.a <= self.a && self.b <= other.b
    }

    pub fn meets(&self, other: &SInterval) -> bool {
        self.a.clone().max(other.a.clone()) < self.b.clone().min(other.b.clone())
    }

    pub fn intersection(&self, other: &SInterval) -> Option<SInterval> {
        SInterval::new(self.a.clone().max(other.a.clone()), self.b.clone().min(other.b.clone())).ok()
    }

    /// `[a + i·(b−a)/k, a + j·(b−a)/k)` for `0 ≤ i < j ≤ k`.
    pub fn grid_piece(&self, k: u32, i: u32, j: u32) -> SInterval {
        assert!(i < j && j <= k, "bad grid piece {i}..{j} of {k}");
        let step = self.length() / int(k as i64);
        SInterval {
            a: &self.a + &step * int(i as i64),
            b: &self.a + &step * int(j as i64),
        }
    }
}

impl fmt::Display for SInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.a, self.b)
    }
}

#[derive(Serialize, Deserialize)]
struct StripJson {
    #[serde(with = "rat_str")]
    a: Rat,
    #[serde(with = "rat_str")]
    b: Rat,
    #[serde(default)]
    closed_right: bool,
}

/// `{(x, y) : y − x ∈ [a, b)}`, or `[a, b]` when `closed_right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StripJson", into = "StripJson")]
pub struct Strip {
    a: Rat,
    b: Rat,
    closed_right: bool,
}

impl TryFrom<StripJson> for Strip {
    type Error = SorgenfreyError;

    fn try_from(j: StripJson) -> Result<Self, Self::Error> {
        Strip::new(j.a, j.b, j.closed_right)
    }
}

impl From<Strip> for StripJson {
    fn from(s: Strip) -> Self {
        StripJson {
            a: s.a,
            b: s.b,
            closed_right: s.closed_right,
        }
    }
}

impl Strip {
    pub fn new(a: Rat, b: Rat, closed_right: bool) -> Result<Self, SorgenfreyError> {
        if a < b {
            Ok(Strip { a, b, closed_right })
        } else {
            Err(SorgenfreyError::Degenerate {
                a: fmt_rat(&a),
                b: fmt_rat(&b),
            })
        }
    }

    /// `I(V) = {(x, y) : y − x ∈ V}` for a basic `V`.
    pub fn of_interval(v: &SInterval) -> Strip {
        Strip {
            a: v.a.clone(),
            b: v.b.clone(),
            closed_right: false,
        }
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn closed_right(&self) -> bool {
        self.closed_right
    }

    pub fn contains_difference(&self, d: &Rat) -> bool {
        &self.a <= d && (d < &self.b || (self.closed_right && d == &self.b))
    }

    pub fn contains(&self, x: &Rat, y: &Rat) -> bool {
        self.contains_difference(&(y - x))
    }

    /// `(V × W) ∩ strip = ∅`. The differences `y − x` over the box fill the
    /// open interval `(w.a − v.b, w.b − v.a)`.
    pub fn misses_box(&self, v: &SInterval, w: &SInterval) -> bool {
        &w.b - &v.a <= self.a || &w.a - &v.b >= self.b
    }

    /// Whether the strip is a neighborhood of the diagonal with every
    /// vertical section `[x + a, x + b)` open.
    pub fn is_semi_nbhd(&self) -> bool {
        !self.closed_right && self.a <= Rat::zero() && Rat::zero() < self.b
    }
}

impl fmt::Display for Strip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let close = if self.closed_right { ']' } else { ')' };
        write!(f, "{{y - x in [{}, {}{close}}}", self.a, self.b)
    }
}

/// A basic neighborhood of `x` missing `i`, when `x ∉ i`.
pub fn separating_nbhd(i: &SInterval, x: &Rat) -> Option<SInterval> {
    if x < &i.a {
        Some(SInterval {
            a: x.clone(),
            b: i.a.clone(),
        })
    } else if x >= &i.b {
        Some(SInterval {
            a: x.clone(),
            b: x + Rat::one(),
        })
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Traced<T> {
    pub value: T,
    pub trace: Vec<String>,
}

/// `[a, b)` is clopen, so its closure is itself.
pub fn interval_closure(i: &SInterval) -> Traced<SInterval> {
    let trace = vec![
        format!("x < {}: [x, {}) is a neighborhood of x missing {i}", i.a, i.a),
        format!("x >= {}: [x, x+1) lies right of {} and misses {i}", i.b, i.b),
        format!("so no point outside {i} is in its closure"),
    ];
    Traced {
        value: i.clone(),
        trace,
    }
}

/// Closure of a strip in the Sorgenfrey plane: the right edge joins.
///
/// A box `[x, x+ε) × [y, y+δ)` realizes exactly the differences
/// `(y−x−ε, y−x+δ)`. Such an open interval meets `[a, b)` for every small
/// ε, δ iff `a ≤ y−x ≤ b`.
pub fn strip_closure(s: &Strip) -> Strip {
    Strip {
        a: s.a.clone(),
        b: s.b.clone(),
        closed_right: true,
    }
}

/// For `u ∋ 0` given as a union of basic sets, a map `ε ↦ t` with
/// `t ∈ [0, ε)` and `−t ∉ u`, showing no `[0, ε)` negates into `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionWitness {
    /// Distance from 0 to the nearest point of `u` left of 0, if any.
    gap: Option<Rat>,
}

impl InversionWitness {
    pub fn point(&self) -> Rat {
        Rat::zero()
    }

    pub fn counterexample(&self, eps: &Rat) -> Rat {
        assert!(eps.is_positive(), "epsilon must be positive");
        match &self.gap {
            Some(g) if g < eps => half(g),
            _ => half(eps),
        }
    }

    /// Re-checks the counterexample for one `ε` against `u`.
    pub fn validates(&self, u: &[SInterval], eps: &Rat) -> bool {
        let t = self.counterexample(eps);
        let neg = -t.clone();
        !t.is_negative() && &t < eps && !u.iter().any(|i| i.contains(&neg))
    }
}

pub fn inversion_discontinuity_witness(u: &[SInterval]) -> Result<InversionWitness, SorgenfreyError> {
    if u.is_empty() {
        return Err(SorgenfreyError::EmptyUnion);
    }
    let zero = Rat::zero();
    if !u.iter().any(|i| i.contains(&zero)) {
        return Err(SorgenfreyError::ZeroNotInU);
    }
    let mut gap: Option<Rat> = None;
    for i in u {
        if i.a < zero {
            if i.b >= zero {
                return Err(SorgenfreyError::NotAWitnessCase);
            }
            let g = -i.b.clone();
            gap = Some(gap.map_or(g.clone(), |h| h.min(g)));
        }
    }
    Ok(InversionWitness { gap })
}

/// A pair `(x, y) ∈ w × w` outside the closure of `I([0, 1))`.
pub fn delta_baire_failure_witness(w: &SInterval) -> (Rat, Rat) {
    let m = w.midpoint();
    let q = w.length() / int(4);
    let x = &m + &q;
    let y = &m - &q;
    debug_assert!(w.contains(&x) && w.contains(&y));
    debug_assert!(!strip_closure(&unit_strip()).contains(&x, &y));
    (x, y)
}

/// `I([0, 1))`.
pub fn unit_strip() -> Strip {
    Strip::of_interval(&unit_interval())
}

pub fn unit_interval() -> SInterval {
    SInterval {
        a: Rat::zero(),
        b: Rat::one(),
    }
}

/// Grid resolution for seeded random refinements.
pub const RANDOM_GRID: u32 = 8;

/// The game arena on a basic interval of the Sorgenfrey line; moves are
/// basic intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SorgenfreyArena {
    pub root: SInterval,
}

impl Default for SorgenfreyArena {
    fn default() -> Self {
        SorgenfreyArena { root: unit_interval() }
    }
}

impl SorgenfreyArena {
    pub fn new(root: SInterval) -> Self {
        SorgenfreyArena { root }
    }
}

impl Arena for SorgenfreyArena {
    type Set = SInterval;
    type Point = RatStr;
    type Relation = Strip;

    fn root(&self) -> SInterval {
        self.root.clone()
    }

    fn validate(&self, s: &SInterval) -> Result<(), String> {
        if s.a < s.b {
            Ok(())
        } else {
            Err(format!("{s} is empty"))
        }
    }

    fn is_subset(&self, a: &SInterval, b: &SInterval) -> bool {
        a.is_subset(b)
    }

    fn closure_within(&self, a: &SInterval, b: &SInterval) -> bool {
        interval_closure(a).value.is_subset(b)
    }

    fn meets(&self, a: &SInterval, b: &SInterval) -> bool {
        a.meets(b)
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn legal_subsets(&self, _within: &SInterval) -> Option<Vec<SInterval>> {
        None
    }

    fn random_subset(&self, within: &SInterval, rng: &mut ChaCha8Rng) -> SInterval {
        let i = rng.gen_range(0..RANDOM_GRID);
        let j = rng.gen_range(i + 1..=RANDOM_GRID);
        within.grid_piece(RANDOM_GRID, i, j)
    }

    fn contains_point(&self, s: &SInterval, x: &RatStr) -> bool {
        s.contains(&x.0)
    }

    fn nbhd_meets(&self, x: &RatStr, s: &SInterval) -> bool {
        separating_nbhd(s, &x.0).is_none()
    }

    fn representative(&self, s: &SInterval) -> RatStr {
        RatStr(s.a.clone())
    }

    /// The midpoint split: `V = [m, b)`, `W = [a, m)`.
    fn separation_candidates(&self, within: &SInterval) -> Vec<(SInterval, SInterval)> {
        let m = within.midpoint();
        vec![(
            SInterval {
                a: m.clone(),
                b: within.b.clone(),
            },
            SInterval {
                a: within.a.clone(),
                b: m,
            },
        )]
    }

    fn separates(&self, p: &Strip, v: &SInterval, w: &SInterval) -> bool {
        p.misses_box(v, w)
    }

    fn is_semi_nbhd(&self, p: &Strip) -> bool {
        p.is_semi_nbhd()
    }
}

/// The separating β-strategy for `P = I([0, 1))`, played from `[0, 1)`.
pub fn theorem2_beta_strategy_sorgenfrey() -> SeparatingBeta<SorgenfreyArena> {
    theorem2_beta_strategy(&SorgenfreyArena::default(), unit_strip())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: &str, b: &str) -> SInterval {
        SInterval::parse(a, b).unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(fmt_rat(&rat(-2, 4)), "-1/2");
        let j = serde_json::to_string(&iv("0", "1/2")).unwrap();
        assert_eq!(j, r#"{"a":"0","b":"1/2"}"#);
        assert!(serde_json::from_str::<SInterval>(r#"{"a":"1","b":"1"}"#).is_err());
    }

    #[test]
    fn closure_of_basic_sets() {
        for i in [iv("0", "1"), iv("-1", "0")] {
            let c = interval_closure(&i);
            assert_eq!(c.value, i);
            assert!(!c.trace.is_empty());
        }
        assert!(SInterval::new(int(1), int(0)).is_err());
        let i = iv("0", "1");
        assert!(separating_nbhd(&i, &int(1)).is_some_and(|n| !n.meets(&i)));
        assert!(separating_nbhd(&i, &rat(-1, 3)).is_some_and(|n| !n.meets(&i)));
        assert!(separating_nbhd(&i, &int(0)).is_none());
    }

    #[test]
    fn strip_closure_examples() {
        let c = strip_closure(&unit_strip());
        assert!(c.closed_right());
        assert!(c.contains(&int(0), &int(1)));
        assert!(!c.contains(&rat(1, 2), &rat(1, 4)));
        assert!(!unit_strip().contains(&int(0), &int(1)));
    }

    #[test]
    fn inversion_examples() {
        let u = [iv("0", "1")];
        let w = inversion_discontinuity_witness(&u).unwrap();
        assert_eq!(w.counterexample(&rat(1, 2)), rat(1, 4));
        assert_eq!(w.counterexample(&int(2)), int(1));
        assert!(w.validates(&u, &rat(1, 2)));
        assert_eq!(
            inversion_discontinuity_witness(&[iv("-1", "0"), iv("0", "1")]),
            Err(SorgenfreyError::NotAWitnessCase)
        );
        assert_eq!(
            inversion_discontinuity_witness(&[iv("1", "2")]),
            Err(SorgenfreyError::ZeroNotInU)
        );
        let u = [iv("-3", "-1/2"), iv("0", "1")];
        let w = inversion_discontinuity_witness(&u).unwrap();
        assert_eq!(w.counterexample(&int(5)), rat(1, 4));
        assert!(w.validates(&u, &int(5)));
    }

    #[test]
    fn failure_pair_examples() {
        assert_eq!(delta_baire_failure_witness(&iv("0", "1")), (rat(3, 4), rat(1, 4)));
        assert_eq!(delta_baire_failure_witness(&iv("-2", "-1")), (rat(-5, 4), rat(-7, 4)));
    }

    #[test]
    fn box_difference_range() {
        let v = iv("1/2", "1");
        let w = iv("0", "1/2");
        assert!(unit_strip().misses_box(&v, &w));
        assert!(!unit_strip().misses_box(&w, &v));
        assert!(unit_strip().is_semi_nbhd());
        assert!(!strip_closure(&unit_strip()).is_semi_nbhd());
    }
}
