//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p baxter-inv --test acceptance` (add `--release`
//! for realistic timings).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use baxter_inv::closed_forms::{a_multi, b_fpf, feasible_profiles, s_count, u_count};
use baxter_inv::path_swap::{classified_triples, swap_shat_to_v, swap_v_to_shat};
use baxter_inv::perm::{
    count_baxter, enumerate_involutions, fpf_census, is_baxter, profile_census,
};
use baxter_inv::sink_code::{decode, encode, enumerate_codes, enumerate_decorations};
use baxter_inv::walks::{
    enumerate_disjoint_triples, enumerate_walk_tuples, lgv_count_3, tuple_ends, walk_count,
    LatticePoint, STANDARD_STARTS,
};
use baxter_inv::{Bounds, ParameterProfile};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

/// Name, optional time limit, check.
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every `(n, k, p, r)` with `n >= 1` and `2n + p = size`, including
/// infeasible ones just outside the feasible range.
fn profile_grid(size: u32) -> Vec<ParameterProfile> {
    let mut out = Vec::new();
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

fn census_or_fail(size: usize) -> Result<BTreeMap<ParameterProfile, u64>, String> {
    let census = profile_census(size).map_err(|e| e.to_string())?;
    let identity = ParameterProfile::new(0, 0, size as u32, 0);
    for (prof, &count) in &census {
        if prof.n == 0 {
            ensure(*prof == identity && count == 1, || {
                format!("size {size}: unexpected n = 0 entry {prof} -> {count}")
            })?;
        }
    }
    Ok(census)
}

fn c1_fixed_point_free() -> Outcome {
    let expected = [1u64, 3, 12, 56, 288, 1584];
    for (idx, &want) in expected.iter().enumerate() {
        let n = idx as u32 + 1;
        let brute = enumerate_involutions(2 * n as usize, true)
            .iter()
            .filter(|p| is_baxter(p))
            .count() as u64;
        let census: u64 = fpf_census(2 * n as usize)
            .map_err(|e| e.to_string())?
            .values()
            .sum();
        let formula = b_fpf(n).map_err(|e| e.to_string())?;
        ensure(
            brute == want && census == want && formula == BigUint::from(want),
            || {
                format!(
                    "n = {n}: brute {brute}, census {census}, formula {formula}, expected {want}"
                )
            },
        )?;
    }
    Ok("b_1..b_6 = 1, 3, 12, 56, 288, 1584 by brute force and formula".into())
}

fn c2_multivariate_formula() -> Outcome {
    let mut checked = 0;
    for size in 1..=10u32 {
        let census = census_or_fail(size as usize)?;
        for prof in profile_grid(size) {
            let want = census.get(&prof).copied().unwrap_or(0);
            let got = a_multi(&prof).map_err(|e| format!("{prof}: {e}"))?;
            ensure(got == BigUint::from(want), || {
                format!("{prof}: formula {got}, census {want}")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} profiles with 2n+p <= 10 agree with the census"
    ))
}

fn c3_walk_tuples() -> Outcome {
    let bounds = Bounds::default();
    let mut checked = 0;
    for size in 1..=8u32 {
        let census = census_or_fail(size as usize)?;
        let mut grid = profile_grid(size);
        grid.push(ParameterProfile::new(0, 0, size, 0));
        for prof in grid {
            let want = census.get(&prof).copied().unwrap_or(0);
            let tuples =
                enumerate_walk_tuples(&prof, &bounds).map_err(|e| format!("{prof}: {e}"))?;
            for t in &tuples {
                t.validate(&prof).map_err(|e| format!("{prof}: {t}: {e}"))?;
            }
            ensure(tuples.len() as u64 == want, || {
                format!("{prof}: {} walk tuples, census {want}", tuples.len())
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} profiles with 2n+p <= 8 agree with the census"
    ))
}

fn lgv_matches_brute(
    starts: &[LatticePoint; 3],
    ends: &[LatticePoint; 3],
    bounds: &Bounds,
) -> Result<(), String> {
    let det = lgv_count_3(starts, ends).map_err(|e| e.to_string())?;
    let brute = enumerate_disjoint_triples(starts, ends, bounds).map_err(|e| e.to_string())?;
    ensure(det == BigUint::from(brute.len()), || {
        format!(
            "starts {starts:?} ends {ends:?}: LGV {det}, brute {}",
            brute.len()
        )
    })
}

/// True when no non-identity matching of starts to ends admits a disjoint routing.
fn non_permutable(starts: &[LatticePoint; 3], ends: &[LatticePoint; 3], bounds: &Bounds) -> bool {
    const SIGMAS: [[usize; 3]; 5] = [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    SIGMAS.iter().all(|sigma| {
        let permuted = [ends[sigma[0]], ends[sigma[1]], ends[sigma[2]]];
        let blocked = (0..3).any(|i| walk_count(starts[i], permuted[i]) == BigUint::from(0u32));
        blocked
            || enumerate_disjoint_triples(starts, &permuted, bounds)
                .map(|v| v.is_empty())
                .unwrap_or(false)
    })
}

fn c4_lgv_oracle() -> Outcome {
    let bounds = Bounds::default();
    let mut configs = 0;
    for size in 1..=8u32 {
        let mut grid: Vec<ParameterProfile> = feasible_profiles(size);
        grid.push(ParameterProfile::new(0, 0, size, 0));
        for prof in grid {
            lgv_matches_brute(&STANDARD_STARTS, &tuple_ends(&prof), &bounds)
                .map_err(|e| format!("{prof}: {e}"))?;
            configs += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x1ba7_7e12);
    let mut random = 0;
    let mut attempts = 0;
    while random < 200 {
        attempts += 1;
        ensure(attempts < 200_000, || {
            "could not sample 200 configurations".into()
        })?;
        let mut pt = |lo: i64, hi: i64| {
            LatticePoint::new(rng.random_range(lo..=hi), rng.random_range(lo..=hi))
        };
        let starts = [pt(-3, 3), pt(-3, 3), pt(-3, 3)];
        let ends = [pt(-1, 7), pt(-1, 7), pt(-1, 7)];
        let distinct = |ps: &[LatticePoint; 3]| ps[0] != ps[1] && ps[1] != ps[2] && ps[0] != ps[2];
        if !distinct(&starts) || !distinct(&ends) {
            continue;
        }
        let reachable = (0..3).all(|i| walk_count(starts[i], ends[i]) > BigUint::from(0u32));
        let len: i64 = (0..3)
            .map(|i| ends[i].x - starts[i].x + ends[i].y - starts[i].y)
            .sum();
        if !reachable || len > 18 || !non_permutable(&starts, &ends, &bounds) {
            continue;
        }
        lgv_matches_brute(&starts, &ends, &bounds)?;
        random += 1;
    }
    Ok(format!(
        "{configs} tuple configurations and {random} random configurations"
    ))
}

fn c5_sink_code() -> Outcome {
    let mut total = 0;
    for i in 0..=8usize {
        let decorations = enumerate_decorations(i);
        for d in &decorations {
            let back = decode(&encode(d), i).map_err(|e| format!("{d}: {e}"))?;
            ensure(&back == d, || format!("decode(encode({d})) = {back}"))?;
        }
        let codes = enumerate_codes(i);
        for c in &codes {
            let d = decode(c, i).map_err(|e| format!("{c}: {e}"))?;
            ensure(&encode(&d) == c, || {
                format!("encode(decode({c})) = {}", encode(&d))
            })?;
        }
        ensure(codes.len() == decorations.len(), || {
            format!(
                "i = {i}: {} codes vs {} decorations",
                codes.len(),
                decorations.len()
            )
        })?;
        total += decorations.len();
    }
    Ok(format!(
        "{total} decorations round-trip for i <= 8, zero failures"
    ))
}

fn c6_head_swap() -> Outcome {
    let bounds = Bounds::default();
    let mut sizes = Vec::new();
    for n in 1..=7usize {
        let all = classified_triples(n, &bounds).map_err(|e| e.to_string())?;
        let (mut r, mut u, mut s, mut mir_s, mut v) = (0u64, 0u64, 0u64, 0u64, 0u64);
        for (t, f) in &all {
            r += u64::from(f.in_r);
            u += u64::from(f.in_u);
            s += u64::from(f.in_s);
            mir_s += u64::from(f.in_mir_s);
            v += u64::from(f.in_v);
            ensure(!(f.in_s && f.in_mir_s), || {
                format!("{t} lies in S and mir(S)")
            })?;
            if f.in_v {
                let img = swap_v_to_shat(t).map_err(|e| e.to_string())?;
                let back = swap_shat_to_v(&img).map_err(|e| e.to_string())?;
                ensure(&back == t, || format!("{t} -> {img} -> {back}"))?;
            }
            if f.in_s || f.in_mir_s {
                let img = swap_shat_to_v(t).map_err(|e| e.to_string())?;
                let back = swap_v_to_shat(&img).map_err(|e| e.to_string())?;
                ensure(&back == t, || format!("{t} -> {img} -> {back}"))?;
            }
        }
        let n32 = n as u32;
        let s_formula = s_count(n32).map_err(|e| e.to_string())?;
        let b = b_fpf(n32).map_err(|e| e.to_string())?;
        ensure(BigUint::from(v) == &s_formula * 2u32, || {
            format!("n = {n}: |V| = {v}, 2 s_n = {}", &s_formula * 2u32)
        })?;
        ensure(v == s + mir_s, || {
            format!("n = {n}: |V| = {v}, |S| + |mir S| = {}", s + mir_s)
        })?;
        ensure(u == r + s, || {
            format!("n = {n}: |U| = {u}, |R| + |S| = {}", r + s)
        })?;
        ensure(BigUint::from(r) == b, || {
            format!("n = {n}: |R| = {r}, b_n = {b}")
        })?;
        sizes.push(format!("{v}"));
    }
    Ok(format!(
        "|V_1..V_7| = {}; swaps mutually inverse",
        sizes.join(", ")
    ))
}

fn c7_identities() -> Outcome {
    for n in 1..=40 {
        let (b, u, s) = (
            b_fpf(n).map_err(|e| e.to_string())?,
            u_count(n).map_err(|e| e.to_string())?,
            s_count(n).map_err(|e| e.to_string())?,
        );
        ensure(&b + &s == u, || format!("n = {n}: b {b} + s {s} != u {u}"))?;
    }
    let mut evaluated = 0;
    for size in 2..=40u32 {
        for prof in feasible_profiles(size) {
            a_multi(&prof).map_err(|e| format!("{prof}: {e}"))?;
            evaluated += 1;
        }
    }
    Ok(format!(
        "b = u - s for n <= 40; {evaluated} exact multivariate evaluations"
    ))
}

fn c8_baxter_numbers() -> Outcome {
    let expected = [1u64, 2, 6, 22, 92, 422, 2074, 10754];
    let got: Vec<u64> = (1..=8).map(count_baxter).collect();
    ensure(got == expected, || {
        format!("got {got:?}, expected {expected:?}")
    })?;
    Ok("Baxter numbers for sizes 1..8 reproduced".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "1 fixed-point-free count b_n, n = 1..6",
            Some(Duration::from_secs(30)),
            c1_fixed_point_free,
        ),
        (
            "2 multivariate formula vs census, 2n+p <= 10",
            Some(Duration::from_secs(120)),
            c2_multivariate_formula,
        ),
        ("3 walk tuples vs census, 2n+p <= 8", None, c3_walk_tuples),
        ("4 LGV determinant vs brute force", None, c4_lgv_oracle),
        ("5 sink-code bijectivity, i <= 8", None, c5_sink_code),
        (
            "6 head-swap involution, n <= 7",
            Some(Duration::from_secs(60)),
            c6_head_swap,
        ),
        ("7 closed-form identities, n <= 40", None, c7_identities),
        ("8 Baxter numbers, sizes 1..8", None, c8_baxter_numbers),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(max)) if elapsed > max => {
                Err(format!("took {elapsed:.2?}, limit {max:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
