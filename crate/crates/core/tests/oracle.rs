//! The group-algebra oracle against the Jennings formula beyond the
//! acceptance range: order 64, odd primes, and random subgroups.

use lieindex::algebra::{dimension_subgroup_check, identity_checks, lower_lie_powers, upper_with, GroupAlgebra};
use lieindex::catalog::Catalog;
use lieindex::{jennings_data, Group, Permutation};
use proptest::prelude::*;
use std::sync::OnceLock;

/// `(x, y) ↦ (x + 1, y)` and `(x, y) ↦ (x, y + x)` on `Z_p × Z_p`.
fn heisenberg(p: u32) -> Group {
    let idx = |x: u32, y: u32| (x % p) * p + (y % p);
    let shift: Vec<u32> = (0..p * p).map(|i| idx(i / p + 1, i % p)).collect();
    let shear: Vec<u32> = (0..p * p).map(|i| idx(i / p, i % p + i / p)).collect();
    let gens = [Permutation::from_images(shift).unwrap(), Permutation::from_images(shear).unwrap()];
    Group::from_generators(&gens).unwrap()
}

/// `C_{p²} ⋊ C_p` with the generator acting as `x ↦ (1+p)x`.
fn metacyclic(p: u32) -> Group {
    let q = p * p;
    let rot: Vec<u32> = (0..q).map(|i| (i + 1) % q).collect();
    let mul: Vec<u32> = (0..q).map(|i| (i * (1 + p)) % q).collect();
    let gens = [Permutation::from_images(rot).unwrap(), Permutation::from_images(mul).unwrap()];
    Group::from_generators(&gens).unwrap()
}

/// `C_p ≀ C_p` on `p²` points.
fn wreath(p: u32) -> Group {
    let q = p * p;
    let base: Vec<u32> = (0..q).map(|i| if i < p { (i + 1) % p } else { i }).collect();
    let top: Vec<u32> = (0..q).map(|i| (i + p) % q).collect();
    let gens = [Permutation::from_images(base).unwrap(), Permutation::from_images(top).unwrap()];
    Group::from_generators(&gens).unwrap()
}

fn order_64() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::builtin_order_64)
}

fn assert_oracle_agrees(g: &Group, p: u64, label: &str) {
    let jd = jennings_data(g, p).unwrap();
    let alg = GroupAlgebra::new(g, p).unwrap();
    let upper = upper_with(&alg, None).unwrap();
    assert_eq!(upper.t_upper, Some(jd.formula_value() as usize), "{label}: t^L");
    let checks = identity_checks(&alg, &upper).unwrap();
    assert!(checks.iter().all(|c| c.1), "{label}: identity fails at {checks:?}");
}

#[test]
fn odd_prime_groups() {
    for (g, p, label) in [
        (heisenberg(3), 3, "Heisenberg mod 3"),
        (metacyclic(3), 3, "C9 ⋊ C3"),
        (wreath(3), 3, "C3 wr C3"),
        (heisenberg(5), 5, "Heisenberg mod 5"),
    ] {
        assert_oracle_agrees(&g, p, label);
    }
    assert_eq!(heisenberg(5).order(), 125);
    assert_eq!(wreath(3).order(), 81);
    // |G'| = p, so t^L = p + 1
    assert_eq!(jennings_data(&heisenberg(5), 5).unwrap().t_upper, 6);
    let lower = lower_lie_powers(&heisenberg(3), 3, None).unwrap();
    assert_eq!(lower.t_lower, Some(4));
}

#[test]
fn wreath_product_has_longer_series() {
    let g = wreath(3);
    let jd = jennings_data(&g, 3).unwrap();
    // G' is the sum-zero part of the base group
    assert_eq!(jd.n, 2);
    assert_eq!(g.whole().lower_central_series().class, Some(3));
    assert!(jd.t_upper <= 10);
    let lower = lower_lie_powers(&g, 3, None).unwrap();
    let t_lower = lower.t_lower.unwrap() as u64;
    assert!(4 <= t_lower && t_lower <= jd.t_upper);
}

#[test]
fn order_64_sample() {
    let cat = order_64();
    assert_eq!(cat.len(), 267);
    for e in cat.entries().iter().step_by(7) {
        assert_oracle_agrees(&e.group, 2, &e.id.to_string());
    }
}

#[test]
fn single_level_checks() {
    let cat = Catalog::builtin_order_32();
    let g = &cat.entries()[10].group;
    for m in 1..=6 {
        assert!(dimension_subgroup_check(g, 2, m).unwrap(), "m = {m}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Subgroups of order-64 groups give further 2-groups on which the
    /// oracle and the formula must agree.
    #[test]
    fn random_subgroups(index in 0usize..267, picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let g = &order_64().entries()[index].group;
        let seed: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let h = g.subgroup_generated(seed).to_group();
        assert_oracle_agrees(&h, 2, &format!("subgroup of S(64,{})", index + 1));
        let jd = jennings_data(&h, 2).unwrap();
        prop_assert_eq!(jd.d.values().sum::<u32>(), jd.n);
        if !jd.commutative {
            prop_assert!(3 <= jd.t_upper && jd.t_upper <= (1u64 << jd.n) + 1);
        }
    }
}
