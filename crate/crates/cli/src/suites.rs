//! Counting commands and exhaustive verification suites. Each builds a
//! [`Report`] from library operations; the first disagreement becomes the
//! report's counterexample.

use std::collections::BTreeMap;

use baxter_inv::closed_forms::{a_multi, b_fpf, feasible_profiles, s_count, u_count};
use baxter_inv::path_swap::{classified_triples, swap_shat_to_v, swap_v_to_shat};
use baxter_inv::perm::{fpf_census, profile_census};
use baxter_inv::sink_code::{bits, decode, encode, enumerate_codes, enumerate_decorations};
use baxter_inv::walks::{
    enumerate_disjoint_triples, enumerate_walk_tuples, lgv_count_3, tuple_ends, walk_tuple_count,
    STANDARD_STARTS,
};
use baxter_inv::{Bounds, Error, ParameterProfile, Result};
use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::json;

use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Paths,
    Brute,
}

fn profile_cells(p: &ParameterProfile) -> Vec<String> {
    vec![
        p.n.to_string(),
        p.k.to_string(),
        p.p.to_string(),
        p.r.to_string(),
    ]
}

fn profile_json(p: &ParameterProfile) -> serde_json::Value {
    json!({"n": p.n, "k": p.k, "p": p.p, "r": p.r})
}

fn census(size: usize, bounds: &Bounds) -> Result<BTreeMap<ParameterProfile, u64>> {
    Bounds::check("permutation size", size, bounds.perm_size)?;
    profile_census(size)
}

/// Every `(n, k, p, r)` with `2n + p = size`, including the identity profile
/// and infeasible neighbours of the feasible range.
fn profile_grid(size: u32) -> Vec<ParameterProfile> {
    let mut out = vec![ParameterProfile::new(0, 0, size, 0)];
    for n in 1..=size / 2 {
        let p = size - 2 * n;
        for k in 0..=n + p {
            for r in 0..=n + 1 {
                out.push(ParameterProfile::new(n, k, p, r));
            }
        }
    }
    out
}

pub fn count_formula(profile: ParameterProfile) -> Result<Report> {
    let value = a_multi(&profile)?;
    let mut report = Report::new("count formula", vec!["count"])
        .param("n", profile.n)
        .param("k", profile.k)
        .param("p", profile.p)
        .param("r", profile.r);
    report.row(vec![value.to_string()]);
    Ok(report)
}

/// Fixed-point-free involutive Baxter permutations of size `2n`.
pub fn fpf_count(n: u32, method: Method, bounds: &Bounds) -> Result<BigUint> {
    match method {
        Method::Formula => b_fpf(n),
        Method::Paths => feasible_profiles(2 * n)
            .into_iter()
            .filter(|p| p.p == 0)
            .map(|p| walk_tuple_count(&p))
            .sum(),
        Method::Brute => {
            let size = 2 * n as usize;
            Bounds::check("permutation size", size, bounds.perm_size)?;
            Ok(BigUint::from(fpf_census(size)?.values().sum::<u64>()))
        }
    }
}

pub fn count_fpf(n: u32, method: Method, bounds: &Bounds) -> Result<Report> {
    let mut report = Report::new("count fpf", vec!["count"])
        .param("n", n)
        .param("method", format!("{method:?}").to_lowercase());
    report.row(vec![fpf_count(n, method, bounds)?.to_string()]);
    Ok(report)
}

pub fn count_census(size: usize, bounds: &Bounds) -> Result<Report> {
    let counts = census(size, bounds)?;
    let mut report =
        Report::new("count census", vec!["n", "k", "p", "r", "count"]).param("size", size);
    // Larger n first, then by (k, p, r).
    let mut entries: Vec<_> = counts.into_iter().collect();
    entries.sort_by_key(|(p, _)| (std::cmp::Reverse(p.n), p.k, p.p, p.r));
    for (prof, count) in entries {
        let mut cells = profile_cells(&prof);
        cells.push(count.to_string());
        report.row(cells);
    }
    Ok(report)
}

pub fn verify_bijection(max_size: u32, bounds: &Bounds) -> Result<Report> {
    let mut report = Report::new(
        "verify bijection",
        vec!["n", "k", "p", "r", "census", "tuples", "lgv"],
    )
    .param("max_size", max_size);
    for size in 1..=max_size {
        let counts = census(size as usize, bounds)?;
        for prof in profile_grid(size) {
            let expected = counts.get(&prof).copied().unwrap_or(0);
            let tuples = enumerate_walk_tuples(&prof, bounds)?;
            for t in &tuples {
                if let Err(e) = t.validate(&prof) {
                    report.fail(json!({"profile": profile_json(&prof), "tuple": t.to_string(), "error": e.to_string()}));
                }
            }
            let lgv = walk_tuple_count(&prof)?;
            let agree = tuples.len() as u64 == expected && lgv == BigUint::from(expected);
            if !agree {
                report.fail(json!({
                    "profile": profile_json(&prof),
                    "census": expected.to_string(),
                    "tuples": tuples.len().to_string(),
                    "lgv": lgv.to_string(),
                }));
            }
            if expected != 0 || !tuples.is_empty() {
                let mut cells = profile_cells(&prof);
                cells.extend([
                    expected.to_string(),
                    tuples.len().to_string(),
                    lgv.to_string(),
                ]);
                report.row(cells);
            }
        }
    }
    Ok(report)
}

pub fn verify_formula(max_size: u32, bounds: &Bounds) -> Result<Report> {
    let mut report = Report::new(
        "verify formula",
        vec!["n", "k", "p", "r", "census", "formula"],
    )
    .param("max_size", max_size);
    for size in 1..=max_size {
        let counts = census(size as usize, bounds)?;
        let identity = ParameterProfile::new(0, 0, size, 0);
        if counts.get(&identity) != Some(&1) {
            report.fail(json!({"profile": profile_json(&identity), "census": counts.get(&identity).copied().unwrap_or(0).to_string(), "expected": "1"}));
        }
        for prof in profile_grid(size).into_iter().filter(|p| p.n > 0) {
            let expected = counts.get(&prof).copied().unwrap_or(0);
            let formula = match a_multi(&prof) {
                Ok(v) => v,
                Err(e @ Error::Inexact { .. }) => {
                    report.fail(json!({"profile": profile_json(&prof), "error": e.to_string()}));
                    continue;
                }
                Err(e) => return Err(e),
            };
            if formula != BigUint::from(expected) {
                report.fail(json!({
                    "profile": profile_json(&prof),
                    "census": expected.to_string(),
                    "formula": formula.to_string(),
                }));
            }
            if expected != 0 || formula != BigUint::from(0u32) {
                let mut cells = profile_cells(&prof);
                cells.extend([expected.to_string(), formula.to_string()]);
                report.row(cells);
            }
        }
    }
    Ok(report)
}

pub fn verify_involution(max_n: usize, bounds: &Bounds) -> Result<Report> {
    let mut report = Report::new(
        "verify involution",
        vec![
            "n",
            "R",
            "U",
            "S",
            "mirS",
            "V",
            "2*s_n",
            "b_n",
            "v_round_trips",
            "shat_round_trips",
        ],
    )
    .param("max_n", max_n);
    for n in 1..=max_n {
        let all = classified_triples(n, bounds)?;
        let mut sizes = [0u64; 5];
        let (mut v_ok, mut shat_ok) = (0u64, 0u64);
        for (t, f) in &all {
            for (slot, hit) in sizes
                .iter_mut()
                .zip([f.in_r, f.in_u, f.in_s, f.in_mir_s, f.in_v])
            {
                *slot += u64::from(hit);
            }
            if f.in_s && f.in_mir_s {
                report.fail(
                    json!({"n": n, "triple": t.to_string(), "error": "in both S and mir(S)"}),
                );
            }
            if f.in_v {
                match swap_v_to_shat(t).and_then(|img| swap_shat_to_v(&img).map(|back| (img, back))) {
                    Ok((_, back)) if &back == t => v_ok += 1,
                    Ok((img, back)) => report.fail(json!({"n": n, "triple": t.to_string(), "image": img.to_string(), "back": back.to_string()})),
                    Err(e) => report.fail(json!({"n": n, "triple": t.to_string(), "error": e.to_string()})),
                }
            }
            if f.in_s || f.in_mir_s {
                match swap_shat_to_v(t).and_then(|img| swap_v_to_shat(&img).map(|back| (img, back))) {
                    Ok((_, back)) if &back == t => shat_ok += 1,
                    Ok((img, back)) => report.fail(json!({"n": n, "triple": t.to_string(), "image": img.to_string(), "back": back.to_string()})),
                    Err(e) => report.fail(json!({"n": n, "triple": t.to_string(), "error": e.to_string()})),
                }
            }
        }
        let [r, u, s, mir_s, v] = sizes;
        let n32 = n as u32;
        let twice_s = s_count(n32)? * 2u32;
        let b = b_fpf(n32)?;
        let consistent = u == r + s
            && s == mir_s
            && BigUint::from(v) == twice_s
            && BigUint::from(r) == b
            && v_ok == v
            && shat_ok == s + mir_s;
        if !consistent {
            report.fail(json!({
                "n": n, "R": r.to_string(), "U": u.to_string(), "S": s.to_string(),
                "mirS": mir_s.to_string(), "V": v.to_string(),
                "2*s_n": twice_s.to_string(), "b_n": b.to_string(),
            }));
        }
        report.row(
            [n as u64, r, u, s, mir_s, v]
                .iter()
                .map(u64::to_string)
                .chain([
                    twice_s.to_string(),
                    b.to_string(),
                    v_ok.to_string(),
                    shat_ok.to_string(),
                ])
                .collect(),
        );
    }
    Ok(report)
}

pub fn verify_sinkcode(max_i: usize) -> Result<Report> {
    let mut report = Report::new(
        "verify sinkcode",
        vec!["i", "decorations", "codes", "round_trips"],
    )
    .param("max_i", max_i);
    for i in 0..=max_i {
        let decorations = enumerate_decorations(i);
        let codes = enumerate_codes(i);
        let mut passed = 0u64;
        for d in &decorations {
            match decode(&encode(d), i) {
                Ok(back) if &back == d => passed += 1,
                other => report.fail(json!({
                    "corners": bits(d.corners()), "edges": bits(d.edges()),
                    "decoded": format!("{other:?}"),
                })),
            }
        }
        for c in &codes {
            match decode(c, i).map(|d| encode(&d)) {
                Ok(back) if &back == c => passed += 1,
                other => {
                    report.fail(json!({"code": c.to_string(), "encoded": format!("{other:?}")}))
                }
            }
        }
        if codes.len() != decorations.len() {
            report.fail(json!({"i": i, "codes": codes.len().to_string(), "decorations": decorations.len().to_string()}));
        }
        report.row(vec![
            i.to_string(),
            decorations.len().to_string(),
            codes.len().to_string(),
            passed.to_string(),
        ]);
    }
    Ok(report)
}

pub fn verify_lgv(max_steps: usize, bounds: &Bounds) -> Result<Report> {
    let limited = Bounds {
        walk_steps: max_steps,
        ..*bounds
    };
    Bounds::check("combined walk steps", max_steps, bounds.walk_steps)?;
    let mut report = Report::new(
        "verify lgv",
        vec!["n", "k", "p", "r", "steps", "lgv", "brute"],
    )
    .param("max_steps", max_steps);
    // Combined length is 3n + 2p - 2 (or 2p - 2 for n = 0).
    let mut size = 1u32;
    loop {
        let mut grid: Vec<ParameterProfile> = feasible_profiles(size);
        grid.push(ParameterProfile::new(0, 0, size, 0));
        let mut any = false;
        for prof in grid {
            let ends = tuple_ends(&prof);
            let steps: i64 = (0..3)
                .map(|i| ends[i].x - STANDARD_STARTS[i].x + ends[i].y - STANDARD_STARTS[i].y)
                .sum();
            if steps as usize > max_steps {
                continue;
            }
            any = true;
            let lgv = lgv_count_3(&STANDARD_STARTS, &ends)?;
            let brute = enumerate_disjoint_triples(&STANDARD_STARTS, &ends, &limited)?.len();
            if lgv != BigUint::from(brute) {
                report.fail(json!({
                    "profile": profile_json(&prof),
                    "lgv": lgv.to_string(),
                    "brute": brute.to_string(),
                }));
            }
            let mut cells = profile_cells(&prof);
            cells.extend([steps.to_string(), lgv.to_string(), brute.to_string()]);
            report.row(cells);
        }
        // Smallest combined length at this size is at least size - 2.
        if !any && size as usize > max_steps + 2 {
            break;
        }
        size += 1;
    }
    Ok(report)
}

pub fn verify_identities(max_n: u32) -> Result<Report> {
    let mut report = Report::new("verify identities", vec!["n", "b_n", "u_n", "s_n", "sum_a"])
        .param("max_n", max_n);
    for n in 1..=max_n {
        let (b, u, s) = (b_fpf(n)?, u_count(n)?, s_count(n)?);
        let sum_a: Result<BigUint> = feasible_profiles(2 * n)
            .into_iter()
            .filter(|p| p.p == 0)
            .map(|p| a_multi(&p))
            .sum();
        let sum_a = match sum_a {
            Ok(v) => v,
            Err(e) => {
                report.fail(json!({"n": n, "error": e.to_string()}));
                continue;
            }
        };
        if &b + &s != u || sum_a != b {
            report.fail(json!({
                "n": n, "b_n": b.to_string(), "u_n": u.to_string(),
                "s_n": s.to_string(), "sum_a": sum_a.to_string(),
            }));
        }
        report.row(vec![
            n.to_string(),
            b.to_string(),
            u.to_string(),
            s.to_string(),
            sum_a.to_string(),
        ]);
    }
    // Integrality of the multivariate formula over 2n + p <= max_n.
    for size in 2..=max_n {
        for prof in feasible_profiles(size) {
            if let Err(e) = a_multi(&prof) {
                report.fail(json!({"profile": profile_json(&prof), "error": e.to_string()}));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use baxter_inv::perm::{enumerate_involutions, is_baxter};

    fn brute_fpf_direct(n: usize) -> usize {
        enumerate_involutions(2 * n, true)
            .iter()
            .filter(|p| is_baxter(p))
            .count()
    }

    #[test]
    fn methods_agree() {
        let bounds = Bounds::default();
        for n in 1..=5 {
            let f = fpf_count(n, Method::Formula, &bounds).unwrap();
            assert_eq!(fpf_count(n, Method::Paths, &bounds).unwrap(), f);
            assert_eq!(fpf_count(n, Method::Brute, &bounds).unwrap(), f);
            assert_eq!(BigUint::from(brute_fpf_direct(n as usize)), f);
        }
    }

    #[test]
    fn census_rows_in_documented_order() {
        let r = count_census(3, &Bounds::default()).unwrap();
        assert_eq!(
            r.rows,
            vec![
                vec!["1", "0", "1", "1", "2"],
                vec!["1", "1", "1", "0", "1"],
                vec!["0", "0", "3", "0", "1"],
            ]
        );
    }

    #[test]
    fn suites_pass_at_small_scale() {
        let b = Bounds::default();
        assert!(!verify_bijection(5, &b).unwrap().failed());
        assert!(!verify_formula(6, &b).unwrap().failed());
        assert!(!verify_involution(4, &b).unwrap().failed());
        assert!(!verify_sinkcode(5).unwrap().failed());
        assert!(!verify_lgv(10, &b).unwrap().failed());
        assert!(!verify_identities(15).unwrap().failed());
    }

    #[test]
    fn bounds_are_enforced() {
        let tight = Bounds {
            perm_size: 6,
            walk_steps: 10,
            path_n: 3,
        };
        assert!(matches!(
            count_census(8, &tight),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            fpf_count(4, Method::Brute, &tight),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            verify_involution(4, &tight),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            verify_lgv(12, &tight),
            Err(Error::Capacity { .. })
        ));
    }
}
