//! Exhaustive checks of the diagonal path classes and the head-swap
//! involution.

use std::collections::BTreeSet;

use baxter_inv::closed_forms::{b_fpf, feasible_profiles, s_count, u_count};
use baxter_inv::path_swap::{
    classified_triples, first_meeting, rotate_from_binary, rotate_to_binary, swap_shat_to_v,
    swap_v_to_shat, DiagonalTriple, Side,
};
use baxter_inv::walks::{enumerate_walk_tuples, walk_tuple_count};
use baxter_inv::Bounds;
use num_bigint::BigUint;

const MAX_N: usize = 7;

#[test]
fn class_structure_and_involution() {
    let bounds = Bounds::default();
    for n in 1..=MAX_N {
        let all = classified_triples(n, &bounds).unwrap();
        let (mut r, mut u, mut s, mut mir_s, mut v) = (0u64, 0u64, 0u64, 0u64, 0u64);
        let mut shat = BTreeSet::new();
        let mut image = BTreeSet::new();
        for (t, f) in &all {
            r += u64::from(f.in_r);
            u += u64::from(f.in_u);
            s += u64::from(f.in_s);
            mir_s += u64::from(f.in_mir_s);
            v += u64::from(f.in_v);
            // U splits into R and S; a right path meeting the left one meets the middle one too.
            if f.in_u {
                assert!(f.in_r ^ f.in_s, "{t}");
            }
            assert!(!(f.in_s && f.in_mir_s), "{t} in S and mir(S)");
            if f.in_s || f.in_mir_s {
                shat.insert(t.clone());
                let back = swap_shat_to_v(t).unwrap();
                assert_eq!(&swap_v_to_shat(&back).unwrap(), t);
            }
            if f.in_v {
                let m = first_meeting(t).expect("middle path meets an outer path");
                assert_ne!(m.side, Side::Both, "{t}");
                let img = swap_v_to_shat(t).unwrap();
                assert_eq!(&swap_shat_to_v(&img).unwrap(), t);
                assert!(image.insert(img), "swap is not injective at {t}");
            }
        }
        assert_eq!(u, r + s);
        assert_eq!(s, mir_s);
        assert_eq!(image, shat, "n = {n}");
        assert_eq!(v, 2 * s);
        let n32 = n as u32;
        assert_eq!(BigUint::from(v), s_count(n32).unwrap() * 2u32);
        assert_eq!(BigUint::from(u), u_count(n32).unwrap());
        assert_eq!(BigUint::from(r), b_fpf(n32).unwrap());
    }
}

#[test]
fn rotation_identifies_fixed_point_free_tuples_with_r() {
    let bounds = Bounds::default();
    for n in 1..=6usize {
        let mut rotated = BTreeSet::new();
        let mut expected = BigUint::from(0u32);
        for profile in feasible_profiles(2 * n as u32)
            .into_iter()
            .filter(|p| p.p == 0)
        {
            expected += walk_tuple_count(&profile).unwrap();
            for t in enumerate_walk_tuples(&profile, &bounds).unwrap() {
                let d = rotate_from_binary(&t).unwrap();
                assert_eq!(rotate_to_binary(&d).unwrap(), t);
                assert!(rotated.insert(d));
            }
        }
        let r: BTreeSet<DiagonalTriple> = classified_triples(n, &bounds)
            .unwrap()
            .into_iter()
            .filter(|(_, f)| f.in_r)
            .map(|(t, _)| t)
            .collect();
        assert_eq!(rotated, r, "n = {n}");
        assert_eq!(BigUint::from(r.len()), expected);
    }
}
