//! Binary walks on Z², vertex-disjoint walk triples and their LGV count,
//! and the walk-tuple side of the involutive Baxter bijection.

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, compositions, det3, to_nonnegative};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::perm::ParameterProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn step(self, s: Step) -> Self {
        match s {
            Step::East => Self::new(self.x + 1, self.y),
            Step::North => Self::new(self.x, self.y + 1),
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Unit step of a binary walk. `East < North`, so derived ordering on step
/// words is the lexicographic order of their `E`/`N` spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
        }
    }
}

pub fn parse_steps(word: &str) -> Result<Vec<Step>> {
    word.chars()
        .map(|c| match c {
            'E' => Ok(Step::East),
            'N' => Ok(Step::North),
            other => Err(Error::Format(format!("bad walk step {other:?}"))),
        })
        .collect()
}

pub fn steps_word(steps: &[Step]) -> String {
    steps.iter().map(|s| s.as_char()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWalk {
    pub start: LatticePoint,
    pub steps: Vec<Step>,
}

impl BinaryWalk {
    pub fn new(start: LatticePoint, steps: Vec<Step>) -> Self {
        Self { start, steps }
    }

    pub fn parse(start: LatticePoint, word: &str) -> Result<Self> {
        Ok(Self::new(start, parse_steps(word)?))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn east_steps(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::East).count()
    }

    pub fn end(&self) -> LatticePoint {
        let e = self.east_steps() as i64;
        let n = self.len() as i64 - e;
        LatticePoint::new(self.start.x + e, self.start.y + n)
    }

    /// Visited points, start and end included.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().scan(self.start, |pt, &s| {
            *pt = pt.step(s);
            Some(*pt)
        }))
    }

    pub fn word(&self) -> String {
        steps_word(&self.steps)
    }

    pub fn is_disjoint_from(&self, other: &BinaryWalk) -> bool {
        let mine: HashSet<LatticePoint> = self.points().collect();
        other.points().all(|pt| !mine.contains(&pt))
    }
}

impl fmt::Display for BinaryWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.word())
    }
}

pub fn pairwise_disjoint(walks: &[BinaryWalk]) -> bool {
    let mut seen = HashSet::new();
    walks.iter().all(|w| {
        w.points()
            .collect::<Vec<_>>()
            .into_iter()
            .all(|pt| seen.insert(pt))
    })
}

/// Number of binary walks from `a` to `b`.
pub fn walk_count(a: LatticePoint, b: LatticePoint) -> BigUint {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    if dx < 0 || dy < 0 {
        BigUint::zero()
    } else {
        binomial((dx + dy) as u64, dx as u64)
    }
}

/// Vertex-disjoint triple count via the Lindström–Gessel–Viennot
/// determinant. Only meaningful when every disjoint routing connects start
/// `i` to end `i`; a negative determinant is reported as a contract error.
pub fn lgv_count_3(starts: &[LatticePoint; 3], ends: &[LatticePoint; 3]) -> Result<BigUint> {
    let m: [[BigInt; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| walk_count(starts[i], ends[j]).into()));
    let det = det3(&m);
    to_nonnegative("LGV determinant", det).map_err(|e| {
        Error::Contract(format!(
            "start/end configuration is permutable ({e}): starts {starts:?}, ends {ends:?}"
        ))
    })
}

/// All walks from `a` to `b`, lexicographic by step word.
pub fn walks_between(a: LatticePoint, b: LatticePoint) -> Vec<BinaryWalk> {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let mut out = Vec::new();
    if dx < 0 || dy < 0 {
        return out;
    }
    fn rec(
        east: i64,
        north: i64,
        cur: &mut Vec<Step>,
        start: LatticePoint,
        out: &mut Vec<BinaryWalk>,
    ) {
        if east == 0 && north == 0 {
            out.push(BinaryWalk::new(start, cur.clone()));
            return;
        }
        if east > 0 {
            cur.push(Step::East);
            rec(east - 1, north, cur, start, out);
            cur.pop();
        }
        if north > 0 {
            cur.push(Step::North);
            rec(east, north - 1, cur, start, out);
            cur.pop();
        }
    }
    rec(dx, dy, &mut Vec::new(), a, &mut out);
    out
}

fn combined_steps(starts: &[LatticePoint; 3], ends: &[LatticePoint; 3]) -> usize {
    starts
        .iter()
        .zip(ends)
        .map(|(a, b)| ((b.x - a.x).max(0) + (b.y - a.y).max(0)) as usize)
        .sum()
}

/// Brute-force listing of every pairwise vertex-disjoint triple of walks with
/// walk `i` running from `starts[i]` to `ends[i]`.
pub fn enumerate_disjoint_triples(
    starts: &[LatticePoint; 3],
    ends: &[LatticePoint; 3],
    bounds: &Bounds,
) -> Result<Vec<[BinaryWalk; 3]>> {
    Bounds::check(
        "combined walk steps",
        combined_steps(starts, ends),
        bounds.walk_steps,
    )?;
    let first = walks_between(starts[0], ends[0]);
    let second = walks_between(starts[1], ends[1]);
    let third = walks_between(starts[2], ends[2]);
    let point_sets = |ws: &[BinaryWalk]| -> Vec<HashSet<LatticePoint>> {
        ws.iter().map(|w| w.points().collect()).collect()
    };
    let (s1, s2, s3) = (point_sets(&first), point_sets(&second), point_sets(&third));
    let mut out = Vec::new();
    for (w1, p1) in first.iter().zip(&s1) {
        for (w2, p2) in second.iter().zip(&s2) {
            if !p1.is_disjoint(p2) {
                continue;
            }
            for (w3, p3) in third.iter().zip(&s3) {
                if p3.is_disjoint(p1) && p3.is_disjoint(p2) {
                    out.push([w1.clone(), w2.clone(), w3.clone()]);
                }
            }
        }
    }
    Ok(out)
}

pub const STANDARD_STARTS: [LatticePoint; 3] = [
    LatticePoint::new(-1, 1),
    LatticePoint::new(0, 0),
    LatticePoint::new(0, -1),
];

/// Whether the walk endpoints for `profile` are reachable from the starts.
/// With `n = 0` only `(0, 0, p, 0)` for `p >= 1` is reachable, matching the
/// identity permutation of size `p`.
pub fn is_feasible(profile: &ParameterProfile) -> bool {
    let (n, k, p, r) = (profile.n, profile.k, profile.p, profile.r);
    k < n + p && k + r <= n
}

/// End points `(k-1, n+p-k)`, `(k, n+p-k-1)`, `(k+r, n-k-r-1)`.
pub fn tuple_ends(profile: &ParameterProfile) -> [LatticePoint; 3] {
    let (n, k, p, r) = (
        i64::from(profile.n),
        i64::from(profile.k),
        i64::from(profile.p),
        i64::from(profile.r),
    );
    [
        LatticePoint::new(k - 1, n + p - k),
        LatticePoint::new(k, n + p - k - 1),
        LatticePoint::new(k + r, n - k - r - 1),
    ]
}

/// `C(p+r, r)` weight sequences times the LGV count of the walk triples.
pub fn walk_tuple_count(profile: &ParameterProfile) -> Result<BigUint> {
    if !is_feasible(profile) {
        return Ok(BigUint::zero());
    }
    let triples = lgv_count_3(&STANDARD_STARTS, &tuple_ends(profile))?;
    Ok(binomial(u64::from(profile.p + profile.r), u64::from(profile.r)) * triples)
}

/// Three disjoint walks plus a weight sequence, for a fixed profile.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalkTuple {
    pub w1: BinaryWalk,
    pub w2: BinaryWalk,
    pub w3: BinaryWalk,
    pub s: Vec<u64>,
}

impl WalkTuple {
    /// Checks every structural condition for membership at `profile`.
    pub fn validate(&self, profile: &ParameterProfile) -> Result<()> {
        let walks = [&self.w1, &self.w2, &self.w3];
        let ends = tuple_ends(profile);
        for (idx, w) in walks.iter().enumerate() {
            if w.start != STANDARD_STARTS[idx] {
                return Err(Error::Contract(format!(
                    "walk {} starts at {}, expected {}",
                    idx + 1,
                    w.start,
                    STANDARD_STARTS[idx]
                )));
            }
            if w.end() != ends[idx] {
                return Err(Error::Contract(format!(
                    "walk {} ends at {}, expected {}",
                    idx + 1,
                    w.end(),
                    ends[idx]
                )));
            }
        }
        if !pairwise_disjoint(&[self.w1.clone(), self.w2.clone(), self.w3.clone()]) {
            return Err(Error::Contract("walks are not vertex-disjoint".into()));
        }
        if self.s.len() != profile.r as usize + 1
            || self.s.iter().sum::<u64>() != u64::from(profile.p)
        {
            return Err(Error::Contract(format!(
                "weights {:?} must be {} entries summing to {}",
                self.s,
                profile.r + 1,
                profile.p
            )));
        }
        Ok(())
    }

    /// The tuple viewed as a member of the wider class of decorated-orientation codes.
    pub fn to_decorated(&self) -> Result<DecoratedTuple> {
        DecoratedTuple::new(
            self.w1.clone(),
            self.w2.clone(),
            self.w3.clone(),
            self.s.clone(),
        )
    }
}

impl fmt::Display for WalkTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "W1={} W2={} W3={} S={:?}",
            self.w1.word(),
            self.w2.word(),
            self.w3.word(),
            self.s
        )
    }
}

pub fn enumerate_walk_tuples(
    profile: &ParameterProfile,
    bounds: &Bounds,
) -> Result<Vec<WalkTuple>> {
    if !is_feasible(profile) {
        return Ok(Vec::new());
    }
    let triples = enumerate_disjoint_triples(&STANDARD_STARTS, &tuple_ends(profile), bounds)?;
    let weights = compositions(u64::from(profile.p), profile.r as usize + 1);
    let mut out = Vec::with_capacity(triples.len() * weights.len());
    for [w1, w2, w3] in triples {
        if profile.p == 0 && w3.steps.first() != Some(&Step::East) {
            return Err(Error::Contract(format!(
                "third walk {} leaves its start northwards",
                w3.word()
            )));
        }
        for s in &weights {
            out.push(WalkTuple {
                w1: w1.clone(),
                w2: w2.clone(),
                w3: w3.clone(),
                s: s.clone(),
            });
        }
    }
    Ok(out)
}

/// A 4-tuple `(W1, W2, W3, S)` with the three walks disjoint from the
/// standard starts, `W1` and `W2` of equal length and East count, `W3`
/// ending in the cone `x3 >= x2`, `x3 + y3 <= x2 + y2`, and `S` a sequence
/// of `a + 1` non-negative integers summing to `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedTuple {
    w1: BinaryWalk,
    w2: BinaryWalk,
    w3: BinaryWalk,
    s: Vec<u64>,
}

impl DecoratedTuple {
    pub fn new(w1: BinaryWalk, w2: BinaryWalk, w3: BinaryWalk, s: Vec<u64>) -> Result<Self> {
        let starts = [w1.start, w2.start, w3.start];
        if starts != STANDARD_STARTS {
            return Err(Error::Contract(format!(
                "walk starts {starts:?} are not standard"
            )));
        }
        if !pairwise_disjoint(&[w1.clone(), w2.clone(), w3.clone()]) {
            return Err(Error::Contract("walks are not vertex-disjoint".into()));
        }
        if w1.len() != w2.len() || w1.east_steps() != w2.east_steps() {
            return Err(Error::Contract(
                "first two walks differ in length or East count".into(),
            ));
        }
        let (e2, e3) = (w2.end(), w3.end());
        let a = e3.x - e2.x;
        let b = e2.x + e2.y - e3.x - e3.y;
        if a < 0 || b < 0 {
            return Err(Error::Contract(format!(
                "third walk end {e3} outside the cone of {e2}"
            )));
        }
        if s.len() as i64 != a + 1 || s.iter().sum::<u64>() as i64 != b {
            return Err(Error::Contract(format!(
                "weights {s:?} must be {} entries summing to {b}",
                a + 1
            )));
        }
        Ok(Self { w1, w2, w3, s })
    }

    pub fn walks(&self) -> [&BinaryWalk; 3] {
        [&self.w1, &self.w2, &self.w3]
    }

    pub fn weights(&self) -> &[u64] {
        &self.s
    }

    /// `x3 - x2`.
    pub fn a(&self) -> u64 {
        (self.w3.end().x - self.w2.end().x) as u64
    }

    /// `x2 + y2 - x3 - y3`.
    pub fn b(&self) -> u64 {
        let (e2, e3) = (self.w2.end(), self.w3.end());
        (e2.x + e2.y - e3.x - e3.y) as u64
    }

    /// `(n, k, p, r)` read off the walk endpoints.
    pub fn profile(&self) -> ParameterProfile {
        let k = self.w2.east_steps() as u32;
        let p = self.b() as u32;
        let n = self.w3.len() as u32;
        ParameterProfile::new(n, k, p, self.a() as u32)
    }

    pub fn into_walk_tuple(self) -> WalkTuple {
        WalkTuple {
            w1: self.w1,
            w2: self.w2,
            w3: self.w3,
            s: self.s,
        }
    }
}

pub fn is_decorated_tuple(w1: &BinaryWalk, w2: &BinaryWalk, w3: &BinaryWalk, s: &[u64]) -> bool {
    DecoratedTuple::new(w1.clone(), w2.clone(), w3.clone(), s.to_vec()).is_ok()
}

/// Walk triples encoding plane bipolar orientations with `edges` edges and
/// `inner` non-polar vertices: the first two walks have `edges - 1` steps and
/// `inner` East steps; the third starts with a forced East from `(0,-1)` and
/// ends at `(x2 + 1, y2 - 1)`.
pub fn orientation_ends(edges: u32, inner: u32) -> Option<[LatticePoint; 3]> {
    if edges == 0 || inner + 1 > edges {
        return None;
    }
    let (m, k) = (i64::from(edges), i64::from(inner));
    Some([
        LatticePoint::new(k - 1, m - k),
        LatticePoint::new(k, m - k - 1),
        LatticePoint::new(k + 1, m - k - 2),
    ])
}

pub fn orientation_triple_count(edges: u32, inner: u32) -> Result<BigUint> {
    match orientation_ends(edges, inner) {
        Some(ends) => lgv_count_3(&STANDARD_STARTS, &ends),
        None => Ok(BigUint::zero()),
    }
}

pub fn enumerate_orientation_triples(
    edges: u32,
    inner: u32,
    bounds: &Bounds,
) -> Result<Vec<[BinaryWalk; 3]>> {
    match orientation_ends(edges, inner) {
        Some(ends) => enumerate_disjoint_triples(&STANDARD_STARTS, &ends, bounds),
        None => Ok(Vec::new()),
    }
}
