use lieindex::catalog::Catalog;
use lieindex::dseq::{enumerate_raw, feasible_set, prune, prune_with_e, DSeq, DSeqProblem, Verdict};
use lieindex::jennings_data;
use proptest::prelude::*;

fn problem() -> impl Strategy<Value = DSeqProblem> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 1u32..=6, 0u64..=24, any::<bool>()).prop_map(|(p, n, w, nc)| {
        DSeqProblem::new(p, n, 2 + (p as i128 - 1) * w as i128).unwrap().with_noncyclic(nc)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn feasible_sequences_are_well_formed(pr in problem()) {
        let found = feasible_set(&pr);
        for w in found.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for s in &found {
            prop_assert_eq!(s.n(), pr.n);
            prop_assert_eq!(s.t_upper(pr.p) as i128, pr.target);
            prop_assert_eq!(s.get(2) > 0, true);
            let e = s.e.expect("search records a witness");
            prop_assert!(pr.e_range().contains(&e));
            prop_assert!(prune_with_e(s, pr.p, e).is_empty());
            match prune(s, &pr) {
                Verdict::Feasible { witnesses } => prop_assert_eq!(witnesses[0], e),
                other => prop_assert!(false, "{} rejected: {:?}", s, other),
            }
        }
    }

    #[test]
    fn noncyclic_assumption_only_removes(pr in problem()) {
        let strict: Vec<DSeq> = feasible_set(&pr.with_noncyclic(true));
        let loose: Vec<DSeq> = feasible_set(&pr.with_noncyclic(false));
        for s in &strict {
            prop_assert!(loose.iter().any(|t| t.d == s.d));
        }
    }

    #[test]
    fn rejections_are_explained(pr in problem()) {
        for s in enumerate_raw(&pr) {
            if let Verdict::Rejected { violations, per_e } = prune(&s, &pr) {
                let every_e_fails = per_e.iter().all(|(_, v)| v.is_some());
                prop_assert!(!violations.is_empty() || every_e_fails || per_e.is_empty());
                for v in &violations {
                    prop_assert_eq!(s.get(v.zero + 1), 0);
                    prop_assert!(s.get(v.offending + 1) > 0);
                    prop_assert!(v.zero < v.offending);
                }
            }
        }
    }
}

/// The d-sequence of every catalog group is found by the search for its own
/// `n` and `t^L`.
#[test]
fn group_sequences_are_found_by_the_search() {
    let mut cat = Catalog::builtin();
    cat.extend(Catalog::builtin_order_64());
    let mut checked = 0;
    for e in cat.entries().iter().filter(|e| e.group.order().is_power_of_two() && e.group.order() > 1) {
        let jd = jennings_data(&e.group, 2).unwrap();
        if jd.commutative {
            continue;
        }
        let cyclic = e.group.derived_subgroup().abelian_invariants().unwrap().is_cyclic();
        let pr = DSeqProblem::new(2, jd.n, jd.t_upper as i128).unwrap().with_noncyclic(!cyclic);
        let found = feasible_set(&pr);
        let own: std::collections::BTreeMap<u64, u32> = jd.d.iter().map(|(&m, &d)| (m as u64, d)).collect();
        assert!(found.iter().any(|s| s.d == own), "{}: {:?} not in {:?}", e.id, own, found);
        checked += 1;
    }
    assert!(checked > 250);
}
