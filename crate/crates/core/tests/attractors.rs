mod common;

use common::{c, family, letters};
use morphic_sa::attractors::{
    attractor_for_prefix, attractor_for_prefix_with_origin, check_conditions, gamma_n,
    ijl_sequences, is_attractor, minimal_family_check, p_n, profile, q_n_direct, q_n_formula,
    smallest_attractor, Attractor, Construction,
};
use morphic_sa::words::{prefix, word_un, Lengths};
use morphic_sa::{Error, ParamWord};
use num_bigint::BigUint;
use proptest::prelude::*;

fn passing(c: &ParamWord) -> bool {
    check_conditions(c).unwrap().all_hold()
}

fn u64_of(v: &BigUint) -> u64 {
    v.try_into().unwrap()
}

#[test]
fn direct_fractional_powers() {
    assert_eq!(q_n_direct(&c("102"), 3, Some(100)), Ok(7));
    assert_eq!(q_n_direct(&c("210221"), 0, Some(10)), Ok(2));
    assert_eq!(q_n_direct(&c("11"), 1, Some(100)), Ok(3));
    assert_eq!(q_n_direct(&c("11"), 4, Some(5)), Err(Error::CapReached(5)));
}

#[test]
fn letters_after_q_n() {
    for c in family(4, 3) {
        let rows = ijl_sequences(&c, 8);
        let lengths = Lengths::new(&c, 10);
        let u = prefix(&c, lengths.get_u64(10).unwrap() as usize);
        for row in &rows {
            let n = row.n;
            let q = q_n_direct(&c, n, None).unwrap() as usize;
            let un = word_un(&c, n);
            let mut pair = [u[q] as usize, un[q % un.len()] as usize];
            pair.sort_unstable();
            assert_eq!(pair, [row.i, row.j], "c = {c}, n = {n}");
            let q_from_ell: BigUint = (0..=n).map(|i| lengths.get(n - i) * rows[i].ell).sum();
            assert_eq!(q_from_ell, BigUint::from(q), "c = {c}, n = {n}");
        }
    }
}

#[test]
fn interval_sanity() {
    for c in family(4, 3) {
        let pass = passing(&c);
        let lengths = Lengths::new(&c, 14);
        for n in 0..13 {
            let p = p_n(&c, n);
            assert!(lengths.get(n) <= &p && p < *lengths.get(n + 1), "c = {c}, n = {n}");
            if pass {
                assert!(lengths.get(n + 1) - 1u32 <= q_n_formula(&c, n), "c = {c}, n = {n}");
            }
        }
    }
}

#[test]
fn no_length_set_works_for_102() {
    let c = c("102");
    let u = prefix(&c, 8);
    let candidates = [1u64, 2, 3, 5];
    for mask in 1u32..16 {
        let set: Vec<u64> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]).collect();
        let gamma = Attractor::new(set, 8).unwrap();
        assert!(!is_attractor(&u, &gamma).unwrap(), "{gamma}");
    }
    assert!(matches!(attractor_for_prefix(&c, 8), Err(Error::OutsideTheoremScope(_))));
}

#[test]
fn smallest_sizes_on_gamma_windows() {
    for c in family(3, 3).into_iter().filter(passing) {
        let sizes = profile(&c, 80, 200).unwrap().sizes();
        for n in 0.. {
            let p = u64_of(&p_n(&c, n));
            if p > 80 {
                break;
            }
            let q = u64_of(&q_n_formula(&c, n)).min(80);
            let expected = gamma_n(&c, n as i64).len();
            for m in p..=q {
                assert_eq!(sizes[m as usize - 1], expected, "c = {c}, m = {m}");
            }
        }
    }
}

#[test]
fn profile_lower_bound() {
    for c in family(3, 2) {
        let u = prefix(&c, 50);
        for entry in profile(&c, 50, 200).unwrap().entries {
            let mut seen = u[..entry.m as usize].to_vec();
            seen.sort_unstable();
            seen.dedup();
            assert!(entry.size >= seen.len());
            assert_eq!(entry.size, entry.witness.len());
            assert!(is_attractor(&u[..entry.m as usize], &entry.witness).unwrap());
        }
    }
}

#[test]
fn claims_follow_preference() {
    // 12: Γ_3 = {4,8} fails on 01000101, so the claim-1 set is used
    let (gamma, origin) = attractor_for_prefix_with_origin(&c("12"), 8).unwrap();
    assert_eq!(gamma.positions(), [2, 4, 8]);
    assert_eq!(origin, Construction::GammaPlusLength { n: 3 });
    let (gamma, origin) = attractor_for_prefix_with_origin(&c("211"), 30).unwrap();
    assert!(matches!(origin, Construction::Gamma { .. }));
    assert!(gamma.len() <= 3);
}

#[test]
fn minimal_family_members() {
    let members: Vec<String> = family(4, 3)
        .into_iter()
        .filter(passing)
        .filter(|c| minimal_family_check(c).unwrap())
        .map(|c| c.to_string())
        .collect();
    for code in ["11", "21", "111", "211", "1111", "2221"] {
        assert!(members.contains(&code.to_string()), "{code}");
    }
    assert!(!members.contains(&"12".to_string()));
    assert!(!members.contains(&"2121".to_string()));
}

#[test]
fn known_minimal_attractors() {
    let e = smallest_attractor(&letters("012001")).unwrap();
    assert_eq!(e.size, 3);
    let spec = Attractor::new(vec![2, 3, 4], 6).unwrap();
    assert!(is_attractor(&letters("012001"), &spec).unwrap());
}

proptest! {
    #[test]
    fn fractional_power_extension(
        z in proptest::collection::vec(0u8..3, 1..6),
        extra_x in 0usize..10,
        extra_y in 0usize..14,
        mask in any::<u32>(),
    ) {
        let x_len = z.len() + extra_x;
        let y_len = x_len + extra_y;
        let y: Vec<u8> = z.iter().copied().cycle().take(y_len).collect();
        let x = &y[..x_len];
        let random: Vec<u64> = (1..=x_len as u64).filter(|p| mask >> (p % 32) & 1 == 1).collect();
        let random = Attractor::new(random, x_len as u64).unwrap();
        let gamma = if is_attractor(x, &random).unwrap() {
            random
        } else {
            smallest_attractor(x).unwrap().witness
        };
        let mut extended = gamma.positions().to_vec();
        extended.push(z.len() as u64);
        let extended = Attractor::new(extended, y_len as u64).unwrap();
        prop_assert!(is_attractor(&y, &extended).unwrap());
    }
}
