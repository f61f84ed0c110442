use lgr_schubert::indexcomb::enumerate_isotropic;
use lgr_schubert::laurent::Root;
use lgr_schubert::oracles::{chern_consistency, chern_lowest};
use lgr_schubert::restriction::{positivity_certificate, RestrictionCache};
use lgr_schubert::{restrict_h, restrict_k, FloatLaurent, IsotropicIndex, Laurent, Theory};
use proptest::prelude::*;

fn pairs(n: usize) -> Vec<(IsotropicIndex, IsotropicIndex)> {
    let all = enumerate_isotropic(n).unwrap();
    all.iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn float(p: &Laurent) -> FloatLaurent {
    p.map_coefficients(|&c| c as f64)
}

#[test]
fn cohomology_values_are_homogeneous_of_degree_length() {
    for n in 1..=4 {
        for (a, b) in pairs(n) {
            let h = restrict_h(&a, &b).unwrap().value;
            if h.is_zero() {
                continue;
            }
            assert!(h.is_polynomial());
            assert_eq!(h.homogeneous_degree(), Some(Some(a.length() as i64)), "{a} at {b}");
        }
    }
}

#[test]
fn k_values_have_chern_order_length() {
    for n in 1..=3 {
        for (a, b) in pairs(n) {
            let k = restrict_k(&a, &b).unwrap().value;
            if k.is_zero() {
                continue;
            }
            let low = k.chern_lowest_form(1).unwrap();
            assert_eq!(low.homogeneous_degree(), Some(Some(a.length() as i64)));
        }
    }
}

#[test]
fn chern_consistency_at_rank_four() {
    for (a, b) in pairs(4) {
        assert!(chern_consistency(&a, &b).unwrap(), "{a} at {b}");
    }
    let a: IsotropicIndex = "-4,-3,-2,-1".parse().unwrap();
    assert_eq!(chern_lowest(&a, &a).unwrap(), restrict_h(&a, &a).unwrap().value);
}

/// With `t_i = 0.5 + 0.1 i`, every `B⁻`-positive character `e^θ` exceeds 1,
/// so every K summand is positive after the sign `(−1)^{l(α)}`; with
/// `t_i = i − n − 1` every `B⁻`-positive root is positive.
#[test]
fn sums_are_positive_at_dominant_points() {
    for n in 1..=4 {
        let pk: Vec<f64> = (1..=n).map(|i| 0.5 + 0.1 * i as f64).collect();
        let ph: Vec<f64> = (1..=n).map(|i| i as f64 - n as f64 - 1.0).collect();
        for (a, b) in pairs(n) {
            let k = restrict_k(&a, &b).unwrap();
            let h = restrict_h(&a, &b).unwrap();
            let sign = if a.length() % 2 == 0 { 1.0 } else { -1.0 };
            let kv = sign * float(&k.value).evaluate(&pk).unwrap();
            let hv = float(&h.value).evaluate(&ph).unwrap();
            if k.term_count == 0 {
                assert!(k.value.is_zero() && h.value.is_zero());
            } else {
                assert!(kv > 0.0, "{a} at {b}: {kv}");
                assert!(hv > 0.0, "{a} at {b}: {hv}");
            }
        }
    }
}

#[test]
fn diagonal_values_are_products_of_inverted_roots() {
    for n in 1..=4 {
        for a in enumerate_isotropic(n).unwrap() {
            let h = restrict_h(&a, &a).unwrap();
            assert_eq!(h.term_count, 1);
            let cert = positivity_certificate(&a, &a, Theory::H).unwrap();
            let prod = cert[0]
                .iter()
                .fold(Laurent::one(n), |acc, r| &acc * &r.h_factor(n));
            assert_eq!(prod, h.value);
            assert_eq!(cert[0].len(), a.length());
        }
    }
}

#[test]
fn certificates_use_only_b_minus_positive_roots() {
    for n in 1..=4 {
        for (a, b) in pairs(n) {
            for theory in [Theory::K, Theory::H] {
                for term in positivity_certificate(&a, &b, theory).unwrap() {
                    for root in term {
                        let std = root.standard(n);
                        let c = std.coeffs();
                        // standard positive: first nonzero coefficient is positive
                        let lead = c.iter().find(|&&x| x != 0).unwrap();
                        assert!(*lead > 0, "{root} at {a}, {b}");
                        assert_eq!(root.root(n), std.negated());
                    }
                }
            }
        }
    }
}

#[test]
fn cache_agrees_with_direct_computation() {
    let cache = RestrictionCache::new();
    for (a, b) in pairs(2) {
        for theory in [Theory::K, Theory::H] {
            let direct = lgr_schubert::restriction::restrict(&a, &b, theory).unwrap();
            assert_eq!(cache.get(&a, &b, theory).unwrap(), direct);
        }
    }
    assert_eq!(cache.len(), 32);
}

#[test]
fn mismatched_ranks_are_rejected() {
    let a = IsotropicIndex::identity(2).unwrap();
    let b = IsotropicIndex::identity(3).unwrap();
    assert!(restrict_k(&a, &b).is_err());
    assert!(restrict_h(&a, &b).is_err());
}

proptest! {
    #[test]
    fn k_and_h_share_support(ai in 0usize..16, bi in 0usize..16) {
        let all = enumerate_isotropic(4).unwrap();
        let (a, b) = (&all[ai], &all[bi]);
        let k = restrict_k(a, b).unwrap();
        let h = restrict_h(a, b).unwrap();
        prop_assert_eq!(k.value.is_zero(), h.value.is_zero());
        prop_assert_eq!(h.term_count == 0, k.term_count == 0);
        prop_assert!(h.term_count <= k.term_count);
    }

    #[test]
    fn result_json_round_trips(ai in 0usize..8, bi in 0usize..8) {
        let all = enumerate_isotropic(3).unwrap();
        let r = restrict_k(&all[ai], &all[bi]).unwrap();
        let js = serde_json::to_value(&r).unwrap();
        let back: Laurent = serde_json::from_value(js["value"].clone()).unwrap();
        prop_assert_eq!(back, r.value);
        prop_assert_eq!(js["theory"].as_str(), Some("K"));
    }
}

#[test]
fn roots_reject_non_roots() {
    assert!(Root::new(vec![1, 1, 1]).is_err());
    assert!(Root::new(vec![2, 1]).is_err());
    assert!(Root::new(vec![0, 0]).is_err());
}
