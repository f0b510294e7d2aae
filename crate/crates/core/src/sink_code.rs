//! Sink decorations (marked sink-corners and sink-edges) and their encoding
//! as a binary walk plus a weight sequence, together with the splice that
//! replaces the `East North^i` tail of the third walk by that code.

use std::fmt;

use crate::error::{Error, Result};
use crate::walks::{BinaryWalk, DecoratedTuple, LatticePoint, Step, WalkTuple};

/// Marks on the `i` sink-corners and `i + 1` sink-edges of an orientation.
/// Edge `j` sits between corner `j - 1` and corner `j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SinkDecoration {
    corners: Vec<bool>,
    edges: Vec<bool>,
}

impl SinkDecoration {
    pub fn new(corners: Vec<bool>, edges: Vec<bool>) -> Result<Self> {
        if edges.len() != corners.len() + 1 {
            return Err(Error::Contract(format!(
                "{} corners need {} edges, got {}",
                corners.len(),
                corners.len() + 1,
                edges.len()
            )));
        }
        let markable = markable_edges(&corners);
        if let Some(j) = (0..edges.len()).find(|&j| edges[j] && !markable.contains(&j)) {
            return Err(Error::Contract(format!(
                "edge {j} is marked but an incident corner is not"
            )));
        }
        Ok(Self { corners, edges })
    }

    pub fn unmarked(corner_count: usize) -> Self {
        Self {
            corners: vec![false; corner_count],
            edges: vec![false; corner_count + 1],
        }
    }

    /// Parses two 0/1 strings, corners first.
    pub fn parse(corners: &str, edges: &str) -> Result<Self> {
        Self::new(parse_bits(corners)?, parse_bits(edges)?)
    }

    pub fn corner_count(&self) -> usize {
        self.corners.len()
    }

    pub fn corners(&self) -> &[bool] {
        &self.corners
    }

    pub fn edges(&self) -> &[bool] {
        &self.edges
    }

    /// `p`, the number of marked edges.
    pub fn marked_edges(&self) -> usize {
        self.edges.iter().filter(|&&m| m).count()
    }

    /// `q`, the number of marked corners.
    pub fn marked_corners(&self) -> usize {
        self.corners.iter().filter(|&&m| m).count()
    }
}

impl fmt::Display for SinkDecoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "corners={} edges={}",
            bits(&self.corners),
            bits(&self.edges)
        )
    }
}

pub fn bits(marks: &[bool]) -> String {
    marks.iter().map(|&m| if m { '1' } else { '0' }).collect()
}

fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Format(format!("bad mark {other:?}"))),
        })
        .collect()
}

/// Walk `W` and weights `S`. `S` has one entry per East step of `W` plus
/// one for the trailing East step dropped at the end of encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SinkCode {
    pub w: Vec<Step>,
    pub s: Vec<u64>,
}

impl fmt::Display for SinkCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W={} S={:?}", crate::walks::steps_word(&self.w), self.s)
    }
}

/// Edges that may carry a mark given the corner marks: those whose existing
/// neighbouring corners are all marked.
pub fn markable_edges(corner_marks: &[bool]) -> Vec<usize> {
    let i = corner_marks.len();
    (0..=i)
        .filter(|&j| (j == 0 || corner_marks[j - 1]) && (j == i || corner_marks[j]))
        .collect()
}

pub fn encode(d: &SinkDecoration) -> SinkCode {
    let i = d.corner_count();
    // Padded corner walk: East, one step per corner, East. Point t (between
    // steps t-1 and t) is edge t-1.
    let padded = std::iter::once(Step::East)
        .chain(
            d.corners
                .iter()
                .map(|&m| if m { Step::East } else { Step::North }),
        )
        .chain(std::iter::once(Step::East));
    let mut w = Vec::with_capacity(i + 2);
    let mut s = Vec::new();
    for (t, step) in padded.enumerate() {
        if t > 0 && d.edges[t - 1] {
            // Deleted point: both neighbours are East, merge into the last one.
            *s.last_mut().expect("merge follows an East step") += 1;
            continue;
        }
        if step == Step::East {
            s.push(0);
        }
        w.push(step);
    }
    w.pop();
    SinkCode { w, s }
}

pub fn decode(code: &SinkCode, corner_count: usize) -> Result<SinkDecoration> {
    if code.w.first() == Some(&Step::North) {
        return Err(Error::Format("sink code walk starts with North".into()));
    }
    let easts = code.w.iter().filter(|&&s| s == Step::East).count();
    if code.s.len() != easts + 1 {
        return Err(Error::Format(format!(
            "{} weights for {} East steps plus the trailing one",
            code.s.len(),
            easts
        )));
    }
    let deleted: u64 = code
        .s
        .iter()
        .try_fold(0u64, |acc, &v| acc.checked_add(v))
        .ok_or_else(|| Error::Format("weight total overflows".into()))?;
    let expected = corner_count as u64 + 2;
    let expanded = deleted.saturating_add(code.w.len() as u64 + 1);
    if expanded != expected {
        return Err(Error::Format(format!(
            "code expands to {expanded} steps, {corner_count} corners need {expected}"
        )));
    }
    let mut padded = Vec::with_capacity(corner_count + 2);
    let mut edges = vec![false; corner_count + 1];
    let mut weights = code.s.iter();
    for &step in code.w.iter().chain(std::iter::once(&Step::East)) {
        padded.push(step);
        if step == Step::East {
            let t = *weights.next().expect("weight count checked above");
            for _ in 0..t {
                // The point just reached is deleted; it is edge `len - 1`.
                edges[padded.len() - 1] = true;
                padded.push(Step::East);
            }
        }
    }
    let corners = padded[1..=corner_count]
        .iter()
        .map(|&s| s == Step::East)
        .collect();
    SinkDecoration::new(corners, edges)
}

/// Every decoration with `corner_count` corners, ordered by corner marks then edge marks.
pub fn enumerate_decorations(corner_count: usize) -> Vec<SinkDecoration> {
    let mut out = Vec::new();
    for cmask in 0u64..(1 << corner_count) {
        let corners: Vec<bool> = (0..corner_count).map(|b| cmask >> b & 1 == 1).collect();
        let markable = markable_edges(&corners);
        for emask in 0u64..(1 << markable.len()) {
            let mut edges = vec![false; corner_count + 1];
            for (b, &j) in markable.iter().enumerate() {
                edges[j] = emask >> b & 1 == 1;
            }
            out.push(SinkDecoration {
                corners: corners.clone(),
                edges,
            });
        }
    }
    out
}

/// Every syntactically valid code for `corner_count` corners: `W` empty or
/// starting East with at most `corner_count + 1` steps, and `S` any
/// composition of the missing length into `East(W) + 1` parts.
pub fn enumerate_codes(corner_count: usize) -> Vec<SinkCode> {
    let mut out = Vec::new();
    for len in 0..=corner_count + 1 {
        let deleted = (corner_count + 1 - len) as u64;
        let words: Vec<Vec<Step>> = if len == 0 {
            vec![Vec::new()]
        } else {
            (0u64..(1 << (len - 1)))
                .map(|mask| {
                    std::iter::once(Step::East)
                        .chain((0..len - 1).map(|b| {
                            if mask >> b & 1 == 1 {
                                Step::North
                            } else {
                                Step::East
                            }
                        }))
                        .collect()
                })
                .collect()
        };
        for w in words {
            let parts = w.iter().filter(|&&s| s == Step::East).count() + 1;
            for s in crate::arith::compositions(deleted, parts) {
                out.push(SinkCode { w: w.clone(), s });
            }
        }
    }
    out
}

fn trailing_norths(steps: &[Step]) -> usize {
    steps
        .iter()
        .rev()
        .take_while(|&&s| s == Step::North)
        .count()
}

/// Replaces the suffix `East North^i` of `w3` by `w`.
pub fn splice(w3: &BinaryWalk, corner_count: usize, w: &[Step]) -> Result<BinaryWalk> {
    let len = w3.len();
    let tail_ok = len > corner_count
        && trailing_norths(&w3.steps) == corner_count
        && w3.steps[len - corner_count - 1] == Step::East;
    if !tail_ok {
        return Err(Error::Contract(format!(
            "walk {} does not end with East followed by exactly {corner_count} Norths",
            w3.word()
        )));
    }
    let mut steps = w3.steps[..len - corner_count - 1].to_vec();
    steps.extend_from_slice(w);
    Ok(BinaryWalk::new(w3.start, steps))
}

/// Length of the longest prefix of `w3_prime` staying in `{x <= column}`.
fn prefix_in_column(w3_prime: &BinaryWalk, column: i64) -> usize {
    w3_prime
        .points()
        .skip(1)
        .take_while(|pt| pt.x <= column)
        .count()
}

/// Recovers the walk before [`splice`]: the part of `w3_prime` in
/// `{x <= x2}`, then East, then Norths up to `(x2 + 1, y2 - 1)`.
pub fn unsplice(w3_prime: &BinaryWalk, w2_end: LatticePoint) -> Result<BinaryWalk> {
    if w3_prime.start.x > w2_end.x {
        return Err(Error::Contract(format!(
            "walk start {} is right of column {}",
            w3_prime.start, w2_end.x
        )));
    }
    let keep = prefix_in_column(w3_prime, w2_end.x);
    let mut steps = w3_prime.steps[..keep].to_vec();
    let corner = BinaryWalk::new(w3_prime.start, steps.clone()).end();
    if corner.x != w2_end.x {
        return Err(Error::Contract(format!(
            "walk {} never reaches column {}",
            w3_prime.word(),
            w2_end.x
        )));
    }
    let rise = w2_end.y - 1 - corner.y;
    if rise < 0 {
        return Err(Error::Contract(format!(
            "walk {} reaches column {} above {}",
            w3_prime.word(),
            w2_end.x,
            w2_end.y - 1
        )));
    }
    steps.push(Step::East);
    steps.extend(std::iter::repeat_n(Step::North, rise as usize));
    Ok(BinaryWalk::new(w3_prime.start, steps))
}

/// Combines an orientation walk triple with a decoration of its sink into a
/// decorated tuple; the decoration must have as many corners as the third
/// walk has trailing Norths.
pub fn attach(triple: &[BinaryWalk; 3], d: &SinkDecoration) -> Result<WalkTuple> {
    let [w1, w2, w3] = triple;
    let code = encode(d);
    let w3_prime = splice(w3, d.corner_count(), &code.w)?;
    let tuple = DecoratedTuple::new(w1.clone(), w2.clone(), w3_prime, code.s)?;
    Ok(tuple.into_walk_tuple())
}

/// Inverse of [`attach`].
pub fn detach(tuple: &WalkTuple) -> Result<([BinaryWalk; 3], SinkDecoration)> {
    let w3 = unsplice(&tuple.w3, tuple.w2.end())?;
    let corner_count = trailing_norths(&w3.steps);
    let keep = w3.len() - corner_count - 1;
    let code = SinkCode {
        w: tuple.w3.steps[keep..].to_vec(),
        s: tuple.s.clone(),
    };
    let d = decode(&code, corner_count)?;
    Ok(([tuple.w1.clone(), tuple.w2.clone(), w3], d))
}
