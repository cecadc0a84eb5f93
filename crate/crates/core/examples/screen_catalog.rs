//! Runs the k = 14, 15 biconditional over every group in a catalog file and
//! prints the groups that hit a target, match a case, or are inconsistent.
//!
//! ```text
//! cargo run --release -p lieindex-core --example screen_catalog -- groups.txt
//! ```

use std::process::ExitCode;

use lieindex::catalog::{parse_catalog, Catalog};
use lieindex::classify::{verify_biconditional, CaseVReading};
use lieindex::group::DEFAULT_ORDER_CAP;
use rayon::prelude::*;

fn main() -> ExitCode {
    let Some(path) = std::env::args().nth(1) else {
        eprintln!("usage: screen_catalog <catalog-file> [p]");
        return ExitCode::from(2);
    };
    let p: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(2);
    let catalog = match parse_catalog(&path, DEFAULT_ORDER_CAP) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let c32 = Catalog::builtin_order_32();
    c32.precompute_fingerprints();
    let start = std::time::Instant::now();
    let lines: Vec<Result<Vec<String>, String>> = catalog
        .entries()
        .par_iter()
        .map(|e| {
            let mut out = Vec::new();
            for k in [14, 15] {
                let printed = verify_biconditional(&e.group, p, k, &c32, CaseVReading::AsPrinted);
                let augmented = verify_biconditional(&e.group, p, k, &c32, CaseVReading::WithGamma4Bound);
                let (r, r2) = match (printed, augmented) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(err), _) | (_, Err(err)) => return Err(format!("{}: {err}", e.id)),
                };
                if r.t_upper as i128 == r.target || r.outcome.is_match() || !r.consistent || !r2.consistent {
                    let d: Vec<String> = r.d_seq.iter().map(|(m, v)| format!("{m}:{v}")).collect();
                    out.push(format!(
                        "{} k={k} t^L={} d={{{}}} cases={:?} consistent={} consistent_with_gamma4_bound={}",
                        e.id,
                        r.t_upper,
                        d.join(", "),
                        r.outcome.case_ids(),
                        r.consistent,
                        r2.consistent
                    ));
                }
            }
            Ok(out)
        })
        .collect();
    let mut failures = 0;
    for l in &lines {
        match l {
            Ok(rows) => rows.iter().for_each(|r| println!("{r}")),
            Err(e) => {
                failures += 1;
                eprintln!("error: {e}");
            }
        }
    }
    eprintln!("{} groups screened in {:.1?}", catalog.len(), start.elapsed());
    if failures > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
