//! Permutations in one-line notation, the Baxter and involution predicates,
//! descent classification, and exhaustive involution generation.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..m}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={m}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            values: (1..=m).collect(),
        }
    }

    /// Parses a word such as `"2143"`; sizes above 9 need `parse_list`.
    pub fn parse_word(word: &str) -> Result<Self> {
        let values = word
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    /// Parses a comma or whitespace separated list such as `"2,1,4,3"`.
    pub fn parse_list(text: &str) -> Result<Self> {
        let values = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Image of `i` (1-based).
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { values: inv }
    }

    pub fn reverse_complement(&self) -> Self {
        let m = self.len();
        Self {
            values: self.values.iter().rev().map(|&v| m + 1 - v).collect(),
        }
    }

    pub fn fixed_points(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// The quadruple `(n, k, p, r)`: `2n` non-fixed points, `2k` descents not
/// crossing the diagonal, `p` fixed points and `r` crossing descents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParameterProfile {
    pub n: u32,
    pub k: u32,
    pub p: u32,
    pub r: u32,
}

impl ParameterProfile {
    pub const fn new(n: u32, k: u32, p: u32, r: u32) -> Self {
        Self { n, k, p, r }
    }

    /// Size `2n + p` of the permutations carrying this profile.
    pub fn size(&self) -> usize {
        2 * self.n as usize + self.p as usize
    }
}

impl fmt::Display for ParameterProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.p, self.r)
    }
}

pub fn is_involution(perm: &Permutation) -> bool {
    perm.values
        .iter()
        .enumerate()
        .all(|(i, &v)| perm.values[v - 1] == i + 1)
}

/// Baxter test: avoidance of the vincular patterns 2-41-3 and 3-14-2.
///
/// For positions `i < j < j+1 < l` an occurrence of 2-41-3 has
/// `π(j+1) < π(i) < π(l) < π(j)` and one of 3-14-2 has
/// `π(j) < π(l) < π(i) < π(j+1)`.
pub fn is_baxter(perm: &Permutation) -> bool {
    let v = &perm.values;
    let m = v.len();
    for j in 1..m.saturating_sub(2) {
        let (hi, lo) = (v[j], v[j + 1]);
        for i in 0..j {
            for l in j + 2..m {
                let (a, b) = (v[i], v[l]);
                if lo < a && a < b && b < hi {
                    return false;
                }
                if hi < b && b < a && a < lo {
                    return false;
                }
            }
        }
    }
    true
}

/// Descent-anchored variant of [`is_baxter`]: only adjacent pairs forming a
/// descent (for 2-41-3) or an ascent (for 3-14-2) can anchor an occurrence,
/// and for each anchor it suffices to ask whether some value in the window
/// appears on the left with a larger value in the window on the right.
pub fn is_baxter_fast(perm: &Permutation) -> bool {
    let v = &perm.values;
    let m = v.len();
    for j in 1..m.saturating_sub(2) {
        let (x, y) = (v[j], v[j + 1]);
        let (lo, hi, left_smaller) = if x > y { (y, x, true) } else { (x, y, false) };
        // 2-41-3 needs left < right inside (lo, hi); 3-14-2 needs left > right.
        let left: Option<usize> = if left_smaller {
            v[..j].iter().copied().filter(|&a| lo < a && a < hi).min()
        } else {
            v[..j].iter().copied().filter(|&a| lo < a && a < hi).max()
        };
        if let Some(a) = left {
            let hit = v[j + 2..]
                .iter()
                .any(|&b| lo < b && b < hi && if left_smaller { b > a } else { b < a });
            if hit {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descent {
    /// 1-based position `i` with `π(i) > π(i+1)`.
    pub index: usize,
    /// Whether `π(i) > i` and `π(i+1) < i+1`.
    pub crossing: bool,
}

pub fn descent_profile(perm: &Permutation) -> Vec<Descent> {
    (1..perm.len())
        .filter(|&i| perm.at(i) > perm.at(i + 1))
        .map(|i| Descent {
            index: i,
            crossing: perm.at(i) > i && perm.at(i + 1) < i + 1,
        })
        .collect()
}

/// Profile of an involutive Baxter permutation. Fails if the count of
/// non-fixed points or of non-crossing descents is odd.
pub fn profile(perm: &Permutation) -> Result<ParameterProfile> {
    let p = perm.fixed_points();
    let moved = perm.len() - p;
    let descents = descent_profile(perm);
    let r = descents.iter().filter(|d| d.crossing).count();
    let plain = descents.len() - r;
    if !moved.is_multiple_of(2) {
        return Err(Error::Contract(format!(
            "{perm} has an odd number ({moved}) of non-fixed points"
        )));
    }
    if !plain.is_multiple_of(2) {
        return Err(Error::Contract(format!(
            "{perm} has an odd number ({plain}) of non-crossing descents"
        )));
    }
    Ok(ParameterProfile::new(
        (moved / 2) as u32,
        (plain / 2) as u32,
        p as u32,
        r as u32,
    ))
}

/// Every involution of size `m` in lexicographic order of one-line notation.
pub fn enumerate_involutions(m: usize, fixed_point_free: bool) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut values = vec![0usize; m];
    involutions_into(&mut values, 0, fixed_point_free, &mut out);
    out
}

/// Involutions of size `m` with `π(1) = first`, lexicographically ordered.
/// Concatenating over `first = 1..=m` reproduces [`enumerate_involutions`].
pub fn enumerate_involutions_with_first(
    m: usize,
    first: usize,
    fixed_point_free: bool,
) -> Vec<Permutation> {
    let mut out = Vec::new();
    if m == 0 || first == 0 || first > m || (fixed_point_free && first == 1) {
        return out;
    }
    let mut values = vec![0usize; m];
    values[0] = first;
    values[first - 1] = 1;
    involutions_into(&mut values, 1, fixed_point_free, &mut out);
    out
}

fn involutions_into(
    values: &mut [usize],
    from: usize,
    fixed_point_free: bool,
    out: &mut Vec<Permutation>,
) {
    let m = values.len();
    let Some(pos) = (from..m).find(|&i| values[i] == 0) else {
        out.push(Permutation {
            values: values.to_vec(),
        });
        return;
    };
    // Smallest admissible image first keeps the output lexicographic.
    for partner in pos..m {
        if values[partner] != 0 || (fixed_point_free && partner == pos) {
            continue;
        }
        values[pos] = partner + 1;
        values[partner] = pos + 1;
        involutions_into(values, pos + 1, fixed_point_free, out);
        values[pos] = 0;
        values[partner] = 0;
    }
}

/// Profile counts over all involutive Baxter permutations of size `m`.
pub fn profile_census(m: usize) -> Result<BTreeMap<ParameterProfile, u64>> {
    census_filtered(m, false)
}

/// As [`profile_census`] restricted to fixed-point-free involutions.
pub fn fpf_census(m: usize) -> Result<BTreeMap<ParameterProfile, u64>> {
    census_filtered(m, true)
}

fn census_filtered(m: usize, fixed_point_free: bool) -> Result<BTreeMap<ParameterProfile, u64>> {
    if m == 0 {
        return Ok(BTreeMap::from([(ParameterProfile::new(0, 0, 0, 0), 1)]));
    }
    let partial: Vec<Result<BTreeMap<ParameterProfile, u64>>> = (1..=m)
        .into_par_iter()
        .map(|first| {
            let mut counts = BTreeMap::new();
            for perm in enumerate_involutions_with_first(m, first, fixed_point_free) {
                if is_baxter(&perm) {
                    *counts.entry(profile(&perm)?).or_insert(0) += 1;
                }
            }
            Ok(counts)
        })
        .collect();
    let mut total = BTreeMap::new();
    for counts in partial {
        for (prof, c) in counts? {
            *total.entry(prof).or_insert(0) += c;
        }
    }
    Ok(total)
}

/// Count of all Baxter permutations of size `m` (Heap's algorithm over S_m).
pub fn count_baxter(m: usize) -> u64 {
    let mut values: Vec<usize> = (1..=m).collect();
    let mut perm = Permutation {
        values: values.clone(),
    };
    let mut count = u64::from(is_baxter(&perm));
    let mut c = vec![0usize; m];
    let mut i = 1;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                values.swap(0, i);
            } else {
                values.swap(c[i], i);
            }
            perm.values.copy_from_slice(&values);
            count += u64::from(is_baxter(&perm));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}
