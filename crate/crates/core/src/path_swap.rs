//! Triples of diagonal paths for the fixed-point-free count, and the
//! head-swap involution pairing class `V` with `S ⊎ mir(S)`.
//!
//! Coordinates are doubled so every position is integral: a step moves the
//! abscissa by ±1 and the height by 1, the three paths start at abscissae
//! −2, 0, 2, and two endpoints "at distance 1" differ by 2.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::walks::{BinaryWalk, LatticePoint, Step, WalkTuple, STANDARD_STARTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagonalStep {
    /// `(-1, +1)` in doubled coordinates.
    Left,
    /// `(+1, +1)` in doubled coordinates.
    Right,
}

impl DiagonalStep {
    fn dx(self) -> i64 {
        match self {
            DiagonalStep::Left => -1,
            DiagonalStep::Right => 1,
        }
    }

    fn flipped(self) -> Self {
        match self {
            DiagonalStep::Left => DiagonalStep::Right,
            DiagonalStep::Right => DiagonalStep::Left,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            DiagonalStep::Left => 'L',
            DiagonalStep::Right => 'R',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalPath {
    pub start_x: i64,
    pub steps: Vec<DiagonalStep>,
}

impl DiagonalPath {
    pub fn new(start_x: i64, steps: Vec<DiagonalStep>) -> Self {
        Self { start_x, steps }
    }

    pub fn parse(start_x: i64, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'L' => Ok(DiagonalStep::Left),
                'R' => Ok(DiagonalStep::Right),
                other => Err(Error::Format(format!("bad diagonal step {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self::new(start_x, steps))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Abscissa after each step; element `t` is the position at height `t`.
    pub fn abscissae(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut x = self.start_x;
        out.push(x);
        for s in &self.steps {
            x += s.dx();
            out.push(x);
        }
        out
    }

    pub fn end_x(&self) -> i64 {
        self.start_x + self.steps.iter().map(|s| s.dx()).sum::<i64>()
    }

    pub fn mirrored(&self) -> Self {
        Self::new(
            -self.start_x,
            self.steps.iter().map(|s| s.flipped()).collect(),
        )
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for DiagonalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start_x, self.word())
    }
}

/// Equal-length paths advance in lockstep, so they share a point exactly
/// when their abscissae agree at some height.
fn meet(a: &DiagonalPath, b: &DiagonalPath) -> bool {
    first_common_time(a, b).is_some()
}

fn first_common_time(a: &DiagonalPath, b: &DiagonalPath) -> Option<usize> {
    a.abscissae()
        .iter()
        .zip(b.abscissae())
        .position(|(&x, y)| x == y)
}

/// Paths starting at −2, 0 and 2, each with `n − 1` steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalTriple {
    pub left: DiagonalPath,
    pub mid: DiagonalPath,
    pub right: DiagonalPath,
}

impl DiagonalTriple {
    pub fn new(left: DiagonalPath, mid: DiagonalPath, right: DiagonalPath) -> Result<Self> {
        if (left.start_x, mid.start_x, right.start_x) != (-2, 0, 2) {
            return Err(Error::Contract(format!(
                "starts {}, {}, {} are not -2, 0, 2",
                left.start_x, mid.start_x, right.start_x
            )));
        }
        if left.len() != mid.len() || mid.len() != right.len() {
            return Err(Error::Contract("paths have unequal lengths".into()));
        }
        Ok(Self { left, mid, right })
    }

    /// From three step words, left path first.
    pub fn parse(left: &str, mid: &str, right: &str) -> Result<Self> {
        Self::new(
            DiagonalPath::parse(-2, left)?,
            DiagonalPath::parse(0, mid)?,
            DiagonalPath::parse(2, right)?,
        )
    }

    /// `n`, one more than the common path length.
    pub fn size(&self) -> usize {
        self.mid.len() + 1
    }

    /// Reflection in the vertical axis: left and right trade places.
    pub fn mirrored(&self) -> Self {
        Self {
            left: self.right.mirrored(),
            mid: self.mid.mirrored(),
            right: self.left.mirrored(),
        }
    }
}

impl fmt::Display for DiagonalTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.left.word(),
            self.mid.word(),
            self.right.word()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClassFlags {
    pub in_r: bool,
    pub in_u: bool,
    pub in_s: bool,
    pub in_mir_s: bool,
    pub in_v: bool,
}

fn u_and_s(t: &DiagonalTriple) -> (bool, bool) {
    let in_u = !meet(&t.left, &t.mid) && t.mid.end_x() - t.left.end_x() == 2;
    (in_u, in_u && meet(&t.mid, &t.right))
}

pub fn classify(t: &DiagonalTriple) -> ClassFlags {
    let (in_u, in_s) = u_and_s(t);
    let in_r = in_u && !meet(&t.right, &t.left) && !meet(&t.right, &t.mid);
    let (_, in_mir_s) = u_and_s(&t.mirrored());
    let in_v = !meet(&t.left, &t.right) && t.right.end_x() - t.left.end_x() == 2;
    ClassFlags {
        in_r,
        in_u,
        in_s,
        in_mir_s,
        in_v,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    /// The middle path reaches both outer paths at the same point; only
    /// possible when those two meet each other.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meeting {
    /// Height of the first common point.
    pub time: usize,
    pub side: Side,
}

/// First height at which the middle path touches an outer path.
pub fn first_meeting(t: &DiagonalTriple) -> Option<Meeting> {
    let (l, m, r) = (t.left.abscissae(), t.mid.abscissae(), t.right.abscissae());
    (0..m.len()).find_map(|time| match (m[time] == l[time], m[time] == r[time]) {
        (true, true) => Some(Meeting {
            time,
            side: Side::Both,
        }),
        (true, false) => Some(Meeting {
            time,
            side: Side::Left,
        }),
        (false, true) => Some(Meeting {
            time,
            side: Side::Right,
        }),
        (false, false) => None,
    })
}

/// Exchanges everything after height `time` between `a` and `b`. When the
/// paths meet at `time` this is the same as exchanging their initial
/// segments and relabelling by start point.
fn exchange_tails(a: &mut DiagonalPath, b: &mut DiagonalPath, time: usize) {
    let tail_a = a.steps.split_off(time);
    let tail_b = b.steps.split_off(time);
    a.steps.extend(tail_b);
    b.steps.extend(tail_a);
}

fn swap_at_first_meeting(t: &DiagonalTriple) -> Result<(DiagonalTriple, Side)> {
    let meeting = first_meeting(t)
        .ok_or_else(|| Error::Contract(format!("middle path of {t} never meets an outer path")))?;
    let mut out = t.clone();
    match meeting.side {
        Side::Left => exchange_tails(&mut out.mid, &mut out.left, meeting.time),
        Side::Right => exchange_tails(&mut out.mid, &mut out.right, meeting.time),
        Side::Both => {
            return Err(Error::Contract(format!(
                "middle path of {t} first meets both outer paths at height {}",
                meeting.time
            )))
        }
    }
    Ok((out, meeting.side))
}

/// Head swap from `V` into `S` (meeting on the right) or `mir(S)` (on the left).
pub fn swap_v_to_shat(t: &DiagonalTriple) -> Result<DiagonalTriple> {
    if !classify(t).in_v {
        return Err(Error::Contract(format!("{t} is not in class V")));
    }
    let (out, side) = swap_at_first_meeting(t)?;
    let flags = classify(&out);
    let landed = match side {
        Side::Right => flags.in_s && !flags.in_mir_s,
        _ => flags.in_mir_s && !flags.in_s,
    };
    if !landed {
        return Err(Error::Contract(format!(
            "swapping {t} on the {side:?} gave {out}, outside the expected class"
        )));
    }
    Ok(out)
}

/// Inverse head swap from `S ⊎ mir(S)` back into `V`.
pub fn swap_shat_to_v(t: &DiagonalTriple) -> Result<DiagonalTriple> {
    let flags = classify(t);
    if flags.in_s == flags.in_mir_s {
        return Err(Error::Contract(format!(
            "{t} must lie in exactly one of S and mir(S), flags {flags:?}"
        )));
    }
    let (out, _) = swap_at_first_meeting(t)?;
    if !classify(&out).in_v {
        return Err(Error::Contract(format!(
            "swapping {t} gave {out}, not in V"
        )));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    R,
    U,
    S,
    MirS,
    V,
    /// `S ⊎ mir(S)`.
    Shat,
}

impl ClassLabel {
    pub fn holds(self, f: &ClassFlags) -> bool {
        match self {
            ClassLabel::R => f.in_r,
            ClassLabel::U => f.in_u,
            ClassLabel::S => f.in_s,
            ClassLabel::MirS => f.in_mir_s,
            ClassLabel::V => f.in_v,
            ClassLabel::Shat => f.in_s || f.in_mir_s,
        }
    }
}

fn all_words(len: usize) -> Vec<Vec<DiagonalStep>> {
    (0u64..1 << len)
        .map(|mask| {
            (0..len)
                .map(|b| {
                    // Most significant bit first keeps the list lexicographic.
                    if mask >> (len - 1 - b) & 1 == 1 {
                        DiagonalStep::Right
                    } else {
                        DiagonalStep::Left
                    }
                })
                .collect()
        })
        .collect()
}

/// Every triple of size `n` in class `label`, sorted by (left, mid, right) words.
pub fn enumerate_class(
    n: usize,
    label: ClassLabel,
    bounds: &Bounds,
) -> Result<Vec<DiagonalTriple>> {
    Ok(classified_triples(n, bounds)?
        .into_iter()
        .filter(|(_, f)| label.holds(f))
        .map(|(t, _)| t)
        .collect())
}

/// Every triple of size `n` with its class flags, in enumeration order.
pub fn classified_triples(n: usize, bounds: &Bounds) -> Result<Vec<(DiagonalTriple, ClassFlags)>> {
    if n == 0 {
        return Err(Error::Contract("diagonal triples need n >= 1".into()));
    }
    Bounds::check("diagonal triple size n", n, bounds.path_n)?;
    let words = all_words(n - 1);
    Ok(words
        .par_iter()
        .flat_map_iter(|left| {
            let words = &words;
            words.iter().flat_map(move |mid| {
                words.iter().map(move |right| {
                    let t = DiagonalTriple {
                        left: DiagonalPath::new(-2, left.clone()),
                        mid: DiagonalPath::new(0, mid.clone()),
                        right: DiagonalPath::new(2, right.clone()),
                    };
                    let f = classify(&t);
                    (t, f)
                })
            })
        })
        .collect())
}

fn to_diagonal(walk: &BinaryWalk, start_x: i64) -> DiagonalPath {
    DiagonalPath::new(
        start_x,
        walk.steps
            .iter()
            .map(|s| match s {
                Step::East => DiagonalStep::Right,
                Step::North => DiagonalStep::Left,
            })
            .collect(),
    )
}

fn to_binary(path: &DiagonalPath, start: LatticePoint) -> BinaryWalk {
    BinaryWalk::new(
        start,
        path.steps
            .iter()
            .map(|s| match s {
                DiagonalStep::Right => Step::East,
                DiagonalStep::Left => Step::North,
            })
            .collect(),
    )
}

/// Turns a fixed-point-free walk tuple into a diagonal triple via
/// `(x, y) ↦ (x − y, x + y)`, dropping the forced first East step of the
/// third walk.
pub fn rotate_from_binary(t: &WalkTuple) -> Result<DiagonalTriple> {
    if t.s.iter().any(|&v| v != 0) {
        return Err(Error::Contract(format!(
            "weights {:?} are not all zero (tuple has fixed points)",
            t.s
        )));
    }
    if [t.w1.start, t.w2.start, t.w3.start] != STANDARD_STARTS {
        return Err(Error::Contract(
            "walks do not use the standard starts".into(),
        ));
    }
    if t.w3.steps.first() != Some(&Step::East) {
        return Err(Error::Contract(format!(
            "third walk {} does not start East",
            t.w3.word()
        )));
    }
    let third = BinaryWalk::new(LatticePoint::new(1, -1), t.w3.steps[1..].to_vec());
    DiagonalTriple::new(
        to_diagonal(&t.w1, -2),
        to_diagonal(&t.w2, 0),
        to_diagonal(&third, 2),
    )
}

/// Inverse of [`rotate_from_binary`]; the weight sequence is all zeros with
/// one entry per unit of horizontal gap between the last two endpoints.
pub fn rotate_to_binary(t: &DiagonalTriple) -> Result<WalkTuple> {
    let gap = t.right.end_x() - t.mid.end_x();
    if gap < 0 || gap % 2 != 0 {
        return Err(Error::Contract(format!(
            "{t} has right end left of middle end"
        )));
    }
    let mut w3 = vec![Step::East];
    w3.extend(to_binary(&t.right, STANDARD_STARTS[2]).steps);
    Ok(WalkTuple {
        w1: to_binary(&t.left, STANDARD_STARTS[0]),
        w2: to_binary(&t.mid, STANDARD_STARTS[1]),
        w3: BinaryWalk::new(STANDARD_STARTS[2], w3),
        s: vec![0; (gap / 2) as usize + 1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(l: &str, m: &str, r: &str) -> DiagonalTriple {
        DiagonalTriple::parse(l, m, r).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(DiagonalTriple::new(
            DiagonalPath::parse(0, "L").unwrap(),
            DiagonalPath::parse(0, "L").unwrap(),
            DiagonalPath::parse(2, "L").unwrap()
        )
        .is_err());
        assert!(DiagonalTriple::parse("L", "", "R").is_err());
        assert!(DiagonalTriple::parse("X", "L", "R").is_err());
    }

    #[test]
    fn classify_examples() {
        let f = classify(&triple("R", "R", "L"));
        assert!(f.in_u && f.in_s && f.in_v && !f.in_r && !f.in_mir_s);

        let f = classify(&triple("L", "R", "R"));
        assert!(!f.in_u && !f.in_s && !f.in_r);

        let f = classify(&triple("L", "L", "R"));
        assert!(f.in_r && f.in_u && !f.in_s);
    }

    #[test]
    fn first_meeting_examples() {
        assert_eq!(
            first_meeting(&triple("R", "R", "L")),
            Some(Meeting {
                time: 1,
                side: Side::Right
            })
        );
        assert_eq!(
            first_meeting(&triple("R", "L", "L")),
            Some(Meeting {
                time: 1,
                side: Side::Left
            })
        );
        assert_eq!(first_meeting(&triple("L", "L", "R")), None);
        assert_eq!(
            first_meeting(&triple("RR", "LR", "LL")),
            Some(Meeting {
                time: 1,
                side: Side::Left
            })
        );
    }

    #[test]
    fn swap_examples() {
        let a = triple("R", "R", "L");
        let b = triple("R", "L", "L");
        assert_eq!(swap_v_to_shat(&a).unwrap(), a);
        assert!(classify(&swap_v_to_shat(&a).unwrap()).in_s);
        assert_eq!(swap_v_to_shat(&b).unwrap(), b);
        assert!(classify(&swap_v_to_shat(&b).unwrap()).in_mir_s);
        assert_eq!(swap_shat_to_v(&a).unwrap(), a);
        assert_eq!(swap_shat_to_v(&b).unwrap(), b);

        // Longer instance: the middle path meets the right path at height 1
        // and the tails after that point trade places.
        let t = triple("RR", "RL", "LR");
        assert_eq!(
            first_meeting(&t),
            Some(Meeting {
                time: 1,
                side: Side::Right
            })
        );
        let swapped = swap_v_to_shat(&t).unwrap();
        assert_eq!(swapped, triple("RR", "RR", "LL"));
        assert_eq!(swap_shat_to_v(&swapped).unwrap(), t);

        assert!(swap_v_to_shat(&triple("L", "L", "R")).is_err());
        assert!(swap_shat_to_v(&triple("L", "L", "R")).is_err());
    }

    #[test]
    fn small_class_sizes() {
        let b = Bounds::default();
        let size = |n, l| enumerate_class(n, l, &b).unwrap().len();
        assert_eq!(size(2, ClassLabel::R), 3);
        assert_eq!(size(2, ClassLabel::U), 4);
        assert_eq!(size(2, ClassLabel::S), 1);
        assert_eq!(size(2, ClassLabel::V), 2);
        assert_eq!(size(2, ClassLabel::Shat), 2);
        assert_eq!(size(1, ClassLabel::R), 1);
        assert_eq!(size(1, ClassLabel::S), 0);
        assert_eq!(size(3, ClassLabel::R), 12);
        assert!(matches!(
            enumerate_class(9, ClassLabel::R, &b),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn enumeration_is_sorted() {
        let all = classified_triples(4, &Bounds::default()).unwrap();
        assert_eq!(all.len(), 1 << 9);
        assert!(all.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn rotation_of_smallest_tuple() {
        let t = WalkTuple {
            w1: BinaryWalk::new(STANDARD_STARTS[0], vec![]),
            w2: BinaryWalk::new(STANDARD_STARTS[1], vec![]),
            w3: BinaryWalk::new(STANDARD_STARTS[2], vec![Step::East]),
            s: vec![0, 0],
        };
        let d = rotate_from_binary(&t).unwrap();
        assert_eq!(d, triple("", "", ""));
        assert_eq!(rotate_to_binary(&d).unwrap(), t);
        let weighted = WalkTuple { s: vec![1, 0], ..t };
        assert!(rotate_from_binary(&weighted).is_err());
    }
}
