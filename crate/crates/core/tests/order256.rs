//! Classification of the bundled order-256 and order-128 groups with
//! `|G'| = 32`.

use std::collections::BTreeMap;

use lieindex::catalog::{parse_catalog_str, Catalog};
use lieindex::classify::{verify_biconditional, CaseVReading};
use lieindex::dseq::{feasible_set, DSeqProblem};
use lieindex::group::DEFAULT_ORDER_CAP;

const SAMPLE: &str = include_str!("data/order_256_sample.txt");

/// Expected case ids for k = 14 and k = 15.
const EXPECTED: &[(&str, &[&str], &[&str])] = &[
    ("S(256,64)", &[], &[]),
    ("S(256,400)", &[], &[]),
    ("S(256,406)", &["i"], &[]),
    ("S(256,432)", &["i"], &[]),
    ("S(256,442)", &["i"], &[]),
    ("S(256,503)", &[], &["xiv"]),
    ("S(256,514)", &[], &["xiv"]),
    ("S(256,515)", &[], &["xii"]),
    ("S(256,524)", &[], &["xii"]),
    ("S(256,2982)", &[], &[]),
    ("S(256,3582)", &[], &[]),
    ("S(256,6347)", &[], &[]),
    ("S(256,6649)", &[], &["i"]),
    ("S(256,6722)", &[], &["i"]),
    ("S(128,161)", &[], &[]),
    ("S(128,162)", &[], &[]),
    ("S(128,163)", &[], &[]),
];

#[test]
fn sample_cases_and_sequences() {
    let sample = parse_catalog_str(SAMPLE, "order_256_sample", DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(sample.len(), EXPECTED.len());
    let c32 = Catalog::builtin_order_32();
    for k in [14, 15] {
        let feasible: Vec<BTreeMap<usize, u32>> = feasible_set(&DSeqProblem::for_k(2, 5, k).unwrap())
            .into_iter()
            .map(|s| s.d.iter().map(|(&m, &d)| (m as usize, d)).collect())
            .collect();
        assert_eq!(feasible.len(), if k == 14 { 1 } else { 2 }, "k = {k}");
        for (e, (id, k14, k15)) in sample.entries().iter().zip(EXPECTED) {
            assert_eq!(e.id.to_string(), *id);
            let want = if k == 14 { k14 } else { k15 };
            for reading in [CaseVReading::AsPrinted, CaseVReading::WithGamma4Bound] {
                let r = verify_biconditional(&e.group, 2, k, &c32, reading).unwrap();
                assert!(r.consistent, "{id} k = {k}: {r:?}");
                assert_eq!(r.outcome.case_ids(), *want, "{id} k = {k}");
                if r.outcome.is_match() {
                    assert!(feasible.contains(&r.d_seq), "{id} k = {k}: {:?}", r.d_seq);
                }
            }
        }
    }
}
