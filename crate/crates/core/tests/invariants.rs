use std::collections::BTreeMap;

use farep::facalc::{self, FBModuleData};
use farep::fbgroth::{invert_triv, series_h, series_s, VirtualFB};
use farep::linalg::Q;
use farep::partitions::{hook, is_horizontal_strip, partitions_of, Partition};
use farep::symrep::{self, character_table, induction_product, perm_character, ClassFunction, IrrDecomposition, MapKind};
use num_traits::Zero;
use proptest::prelude::*;

// Partition counts from Σ_k σ(k) p(n−k) = n p(n).
fn partition_counts(max: usize) -> Vec<u64> {
    let sigma = |k: usize| (1..=k).filter(|d| k.is_multiple_of(*d)).sum::<usize>() as u64;
    let mut p = vec![1u64];
    for n in 1..=max {
        let s: u64 = (1..=n).map(|k| sigma(k) * p[n - k]).sum();
        p.push(s / n as u64);
    }
    p
}

fn small_partitions(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

#[test]
fn partition_counts_match_divisor_recursion() {
    let expected = partition_counts(12);
    for n in 0..=12 {
        assert_eq!(partitions_of(n).len() as u64, expected[n], "n = {n}");
    }
}

#[test]
fn horizontal_strips_match_column_counts() {
    let all = small_partitions(8);
    for lambda in &all {
        for mu in &all {
            if !lambda.contains(mu) {
                assert!(is_horizontal_strip(lambda, mu).is_err());
                continue;
            }
            // Count skew cells in each column directly.
            let mut per_column = BTreeMap::new();
            for (i, &l) in lambda.parts().iter().enumerate() {
                for c in mu.part(i)..l {
                    *per_column.entry(c).or_insert(0) += 1;
                }
            }
            let brute = per_column.values().all(|&n| n <= 1);
            assert_eq!(is_horizontal_strip(lambda, mu).unwrap(), brute, "{lambda} / {mu}");
        }
    }
}

#[test]
fn containment_is_a_partial_order() {
    let all = small_partitions(8);
    for a in &all {
        assert!(a.contains(a));
        for b in &all {
            if a.contains(b) && b.contains(a) {
                assert_eq!(a, b);
            }
            if !a.contains(b) {
                continue;
            }
            for c in &all {
                if b.contains(c) {
                    assert!(a.contains(c), "{a} ⊇ {b} ⊇ {c}");
                }
            }
        }
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 0..=8 {
        let t = character_table(n).unwrap();
        let k = t.partitions().len();
        for i in 0..k {
            for j in 0..k {
                let rows: i128 = (0..k)
                    .map(|c| t.row(i)[c] as i128 * t.row(j)[c] as i128 * t.class_size(c) as i128)
                    .sum();
                assert_eq!(rows, if i == j { t.group_order() as i128 } else { 0 }, "rows n = {n}");
                let cols: i128 = (0..k).map(|r| t.row(r)[i] as i128 * t.row(r)[j] as i128).sum();
                assert_eq!(cols, if i == j { t.z(i) as i128 } else { 0 }, "columns n = {n}");
            }
        }
    }
}

#[test]
fn pieri_for_trivial_times_sign() {
    for n in 1..=7 {
        for k in 1..=n {
            let product = induction_product(&IrrDecomposition::trivial(n - k), &IrrDecomposition::sign(k)).unwrap();
            let mut expected = IrrDecomposition::irreducible(hook(n, k).unwrap());
            if k < n {
                expected = expected.add(&IrrDecomposition::irreducible(hook(n, k + 1).unwrap())).unwrap();
            }
            assert_eq!(product, expected, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn injections_induce_from_trivial() {
    for n in 0..=7 {
        for s in 0..=n {
            let bimodule = perm_character(s, n, MapKind::Injective).decompose().unwrap();
            for mu in partitions_of(s) {
                let expected =
                    induction_product(&IrrDecomposition::trivial(n - s), &IrrDecomposition::irreducible(mu.clone())).unwrap();
                assert_eq!(bimodule.tensor_left(&mu), expected, "s = {s}, n = {n}, {mu}");
            }
        }
    }
}

#[test]
fn series_identities_at_moderate_truncation() {
    for trunc in 1..=10 {
        for k in 0..trunc {
            let w = series_s(k, trunc).add(&series_s(k + 1, trunc)).unwrap();
            assert_eq!(w, VirtualFB::sgn(k, trunc));
        }
        for k in 0..=6.min(trunc - 1) {
            let h = series_h(k, trunc).add(&series_h(k + 1, trunc)).unwrap();
            assert_eq!(h, VirtualFB::sgn(k, trunc).day(&VirtualFB::triv(trunc)).unwrap());
        }
        for k in 0..=8.min(trunc) {
            assert_eq!(invert_triv(&series_h(k, trunc)).unwrap(), series_s(k, trunc));
        }
    }
}

// k[t]^{⊗n} as an S_t-module: its character counts fixed points to the n-th power.
fn tensor_power_data(n: usize, trunc: usize) -> FBModuleData {
    let degrees = (1..=trunc)
        .map(|t| {
            let ch = ClassFunction::from_fn(t, |beta| {
                let fixed = beta.parts().iter().filter(|&&p| p == 1).count();
                Q::from_integer((fixed as i64).pow(n as u32).into())
            });
            (t, symrep::decompose(&ch).unwrap().genuine().unwrap())
        })
        .collect();
    FBModuleData::new(trunc, u64::from(n == 0), degrees).unwrap()
}

#[test]
fn multiplicities_of_projectives_account_for_every_dimension() {
    for n in 0..=3 {
        let mults = facalc::multiplicities(&tensor_power_data(n, 7)).unwrap();
        assert!(mults.values().all(|&m| m > 0), "n = {n}: {mults:?}");
        for t in 0..=6 {
            let expected = (t as i64).pow(n as u32);
            assert_eq!(facalc::composition_dimension(&mults, t).unwrap(), expected, "n = {n}, t = {t}");
        }
    }
}

fn irr(max: usize) -> impl Strategy<Value = IrrDecomposition> {
    (0..=max).prop_flat_map(|n| {
        let parts = partitions_of(n);
        proptest::collection::vec(-3i64..=3, parts.len()).prop_map(move |cs| {
            let mults = parts.iter().cloned().zip(cs).filter(|(_, c)| *c != 0).collect();
            IrrDecomposition::new(n, mults).unwrap()
        })
    })
}

fn virtual_fb(trunc: usize) -> impl Strategy<Value = VirtualFB> {
    let all = small_partitions(trunc);
    proptest::collection::btree_map(0..all.len(), -3i64..=3, 0..5).prop_map(move |m| {
        let coeffs = m.into_iter().filter(|(_, c)| *c != 0).map(|(i, c)| (all[i].clone(), c)).collect();
        VirtualFB::new(trunc, coeffs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decompose_inverts_reconstruct(x in irr(8)) {
        let back = symrep::decompose(&x.character().unwrap()).unwrap().integral().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn induction_product_is_commutative(a in irr(4), b in irr(4)) {
        prop_assert_eq!(induction_product(&a, &b).unwrap(), induction_product(&b, &a).unwrap());
    }

    #[test]
    fn induction_product_is_associative(a in irr(3), b in irr(3), c in irr(2)) {
        let left = induction_product(&induction_product(&a, &b).unwrap(), &c).unwrap();
        let right = induction_product(&a, &induction_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn class_function_inner_product_detects_multiplicity(x in irr(6)) {
        let ch = x.character().unwrap();
        for (lambda, &m) in x.mults() {
            let ip = ch.inner(&ClassFunction::irreducible(lambda).unwrap()).unwrap();
            prop_assert_eq!(ip, Q::from_integer(m.into()));
        }
        prop_assert_eq!(ch.inner(&ch).unwrap().is_zero(), x.is_zero());
    }

    #[test]
    fn invert_triv_round_trips(a in virtual_fb(8)) {
        let t = VirtualFB::triv(8);
        prop_assert_eq!(invert_triv(&a.day(&t).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(invert_triv(&a).unwrap().day(&t).unwrap(), a);
    }

    #[test]
    fn day_is_a_commutative_monoid(a in virtual_fb(8), b in virtual_fb(8), c in virtual_fb(8)) {
        prop_assert_eq!(a.day(&b).unwrap(), b.day(&a).unwrap());
        prop_assert_eq!(a.day(&b).unwrap().day(&c).unwrap(), a.day(&b.day(&c).unwrap()).unwrap());
        prop_assert_eq!(a.day(&VirtualFB::unit(8)).unwrap(), a);
    }

    #[test]
    fn regular_character_is_sum_of_dimensions(n in 0usize..=7) {
        let reg = IrrDecomposition::regular(n);
        let total: i64 = reg.mults().values().sum();
        prop_assert_eq!(total as usize, partitions_of(n).iter().map(|l| l.dim() as usize).sum::<usize>());
        prop_assert_eq!(reg.character().unwrap().dimension(), Q::from_integer((1..=n as i64).product::<i64>().into()));
    }
}
