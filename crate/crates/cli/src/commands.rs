use std::path::Path;

use lieindex::algebra::{identity_checks, lower_with, upper_with, GroupAlgebra};
use lieindex::catalog::{
    diff_table1, parse_catalog, parse_flags_csv, parse_group_file, parse_table1_csv, table1_report, Catalog,
    CatalogEntry, TABLE1_FLAGS, TABLE1_GOLDEN,
};
use lieindex::classify::{verify_biconditional, CaseVReading, StructuralProfile, Sub};
use lieindex::dseq::{feasible_set, scan_report, target_for_k, DSeq, DSeqProblem};
use lieindex::group::{is_prime, DEFAULT_ORDER_CAP};
use lieindex::jennings_data;
use serde::Serialize;

use crate::error::{code, CliError};
use crate::render::*;
use crate::{ClassifyArgs, DseqArgs, GroupArgs, OracleArgs, Reading, Table1Args};

/// A finished command: both renderings plus the exit code.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    pub exit: u8,
}

impl Output {
    fn new<R: Serialize + std::fmt::Display>(report: &R, exit: u8) -> Output {
        Output {
            text: report.to_string(),
            json: serde_json::to_value(report).expect("reports serialize"),
            exit,
        }
    }
}

fn load_group(args: &GroupArgs) -> Result<CatalogEntry, CliError> {
    Ok(parse_group_file(&args.file, DEFAULT_ORDER_CAP)?)
}

fn derived_is_cyclic(entry: &CatalogEntry) -> bool {
    let d = entry.group.derived_subgroup();
    !d.is_trivial() && d.abelian_invariants().is_ok_and(|t| t.factors().len() == 1)
}

pub fn jennings(args: &GroupArgs) -> Result<Output, CliError> {
    let entry = load_group(args)?;
    let jd = jennings_data(&entry.group, args.p)?;
    let report = JenningsReport {
        schema: SCHEMA,
        command: "jennings",
        group: entry.id,
        order: entry.group.order(),
        p: args.p,
        n: jd.n,
        dim_subgroup_orders: jd.dim_subgroups.iter().map(|h| h.order()).collect(),
        d_seq: jd.d.clone(),
        t_upper: jd.t_upper,
        formula_value: jd.formula_value(),
        commutative: jd.commutative,
        cyclic_derived: derived_is_cyclic(&entry),
    };
    Ok(Output::new(&report, code::OK))
}

/// Parses `2,3,5`, `2-13` or `1..=10` (and mixtures) into a sorted list.
pub fn parse_list(s: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::Usage(format!("expected a number, list or range, got {s:?}"));
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let range = item
            .split_once("..=")
            .or_else(|| item.split_once(".."))
            .or_else(|| item.get(1..).and_then(|t| t.find('-')).map(|i| (&item[..i + 1], &item[i + 2..])));
        match range {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(item.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn single<T: TryFrom<i64>>(s: &str, what: &str) -> Result<T, CliError> {
    match parse_list(s)?.as_slice() {
        [v] => T::try_from(*v).map_err(|_| CliError::Usage(format!("{what} out of range: {v}"))),
        _ => Err(CliError::Usage(format!("{what} takes a single value without --scan"))),
    }
}

fn seq_out(s: &DSeq) -> SeqOut {
    SeqOut { d_seq: s.d.clone(), e: s.e }
}

pub fn dseq(args: &DseqArgs) -> Result<Output, CliError> {
    if args.scan {
        return dseq_scan(args);
    }
    let p: u64 = single(&args.p, "p")?;
    let n: u32 = single(&args.n, "n")?;
    let (problem, k) = match (&args.k, args.target) {
        (_, Some(t)) => (DSeqProblem::new(p, n, t)?, None),
        (Some(k), None) => {
            let k: i64 = single(k, "k")?;
            (DSeqProblem::for_k(p, n, k)?, Some(k))
        }
        (None, None) => return Err(CliError::Usage("give -k or --target".into())),
    };
    let found = feasible_set(&problem);
    let report = DseqReport {
        schema: SCHEMA,
        command: "dseq",
        p,
        n,
        k,
        target: problem.target,
        assume_noncyclic: problem.assume_noncyclic,
        count: found.len(),
        sequences: found.iter().map(seq_out).collect(),
    };
    Ok(Output::new(&report, code::OK))
}

fn dseq_scan(args: &DseqArgs) -> Result<Output, CliError> {
    let k = args.k.as_deref().ok_or_else(|| CliError::Usage("--scan needs -k".into()))?;
    let explicit_p = !args.p.contains(['-', '.']);
    let mut ps = Vec::new();
    for p in parse_list(&args.p)? {
        let p = u64::try_from(p).map_err(|_| CliError::Usage(format!("bad prime {p}")))?;
        if is_prime(p) {
            ps.push(p);
        } else if explicit_p {
            return Err(CliError::Usage(format!("{p} is not a prime")));
        }
    }
    let ns = parse_list(&args.n)?
        .into_iter()
        .map(|n| u32::try_from(n).map_err(|_| CliError::Usage(format!("bad n {n}"))))
        .collect::<Result<Vec<u32>, _>>()?;
    let ks = parse_list(k)?;
    let rows = scan_report(&ps, &ns, &ks)?;
    let report = ScanReport {
        schema: SCHEMA,
        command: "dseq-scan",
        rows: rows
            .iter()
            .map(|r| ScanRowOut {
                p: r.p,
                n: r.n,
                k: r.k,
                target: target_for_k(r.p, r.n, r.k),
                status: r.status,
                count: r.feasible.len(),
                sequences: r.feasible.iter().map(seq_out).collect(),
            })
            .collect(),
    };
    Ok(Output::new(&report, code::OK))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Catalog(e.into()))
}

pub fn table1(args: &Table1Args) -> Result<Output, CliError> {
    let catalog = match &args.catalog {
        Some(path) => parse_catalog(path, DEFAULT_ORDER_CAP)?,
        None => Catalog::builtin_order_32(),
    };
    let golden = match &args.golden {
        Some(path) => parse_table1_csv(&read(path)?, &path.display().to_string())?,
        None => parse_table1_csv(TABLE1_GOLDEN, "builtin:table1.csv")?,
    };
    let flags = match &args.flags {
        Some(path) => parse_flags_csv(&read(path)?, &path.display().to_string())?,
        None => parse_flags_csv(TABLE1_FLAGS, "builtin:table1_flags.csv")?,
    };
    let computed = table1_report(&catalog)?;
    let diff = diff_table1(&computed, &golden, &flags);
    let note_for = |d: &lieindex::catalog::CellDiff| {
        flags
            .iter()
            .find(|f| f.id == d.id && f.column == d.column)
            .map(|f| f.note.clone())
            .unwrap_or_default()
    };
    let report = Table1Report {
        schema: SCHEMA,
        command: "table1",
        rows: computed.len(),
        compared_cells: diff.compared_cells,
        flagged: diff.flagged.iter().map(|d| FlaggedCell { note: note_for(d), diff: d.clone() }).collect(),
        unflagged: diff.unflagged.clone(),
        stale_flags: diff.stale_flags.clone(),
        missing_rows: diff.missing_rows.clone(),
        extra_rows: diff.extra_rows.clone(),
        clean: diff.is_clean(),
    };
    let exit = if report.clean { code::OK } else { code::MISMATCH };
    Ok(Output::new(&report, exit))
}

pub fn oracle(args: &OracleArgs, cap: usize) -> Result<Output, CliError> {
    let entry = load_group(&args.group)?;
    let p = args.group.p;
    let alg = GroupAlgebra::with_cap(&entry.group, p, cap)?;
    let jd = jennings_data(&entry.group, p)?;
    let lower = lower_with(&alg, args.m_max);
    let upper = upper_with(&alg, args.m_max)?;
    let checks = identity_checks(&alg, &upper)?;
    // Jennings reports 1 for commutative KG; the series itself vanishes at 2.
    let jennings_direct = if jd.commutative { jd.formula_value() } else { jd.t_upper };
    let agree = upper.t_upper.map(|t| t as u64) == Some(jennings_direct) && checks.iter().all(|c| c.1);
    let report = OracleReport {
        schema: SCHEMA,
        command: "oracle",
        group: entry.id,
        order: entry.group.order(),
        p,
        t_lower: lower.t_lower,
        t_upper: upper.t_upper,
        t_upper_jennings: jd.t_upper,
        lower_dims: lower.dims.clone(),
        upper_dims: upper.dims.clone(),
        checks: checks.into_iter().map(|(m, holds)| CheckOut { m, holds }).collect(),
        commutative: jd.commutative,
        cyclic_derived: derived_is_cyclic(&entry),
        agree,
    };
    // A bounded run that stops early is not a disagreement.
    let exit = if agree || (args.m_max.is_some() && upper.t_upper.is_none()) { code::OK } else { code::MISMATCH };
    Ok(Output::new(&report, exit))
}

fn profile_rows(profile: &StructuralProfile) -> Vec<SubOut> {
    Sub::ALL
        .iter()
        .filter_map(|&s| {
            profile.info(s).map(|i| SubOut { name: s.to_string(), order: i.order, iso: i.iso.to_string() })
        })
        .collect()
}

pub fn classify(args: &ClassifyArgs) -> Result<Output, CliError> {
    let entry = load_group(&args.group)?;
    let p = args.group.p;
    let k: i64 = args.k.parse().map_err(|_| CliError::Usage(format!("bad k {}", args.k)))?;
    let catalog = match &args.catalog {
        Some(path) => parse_catalog(path, DEFAULT_ORDER_CAP)?,
        None => Catalog::builtin_order_32(),
    };
    let reading = match args.reading {
        Reading::AsPrinted => CaseVReading::AsPrinted,
        Reading::WithGamma4Bound => CaseVReading::WithGamma4Bound,
    };
    let r = verify_biconditional(&entry.group, p, k, &catalog, reading)?;
    let profile = lieindex::classify::structural_profile(&entry.group, p, &catalog)?;
    let report = ClassifyReport {
        schema: SCHEMA,
        command: "classify",
        group: entry.id,
        p,
        k,
        n: r.n,
        t_upper: r.t_upper,
        target: r.target,
        d_seq: r.d_seq.clone(),
        profile: profile_rows(&profile),
        inclusions: profile.inclusions.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        case: r.outcome.primary().map(|m| m.case),
        cases: r.outcome.case_ids(),
        multi_match: r.outcome.multi_match(),
        reading: match reading {
            CaseVReading::AsPrinted => "as-printed",
            CaseVReading::WithGamma4Bound => "with-gamma4-bound",
        },
        consistent: r.consistent,
    };
    let exit = if r.consistent { code::OK } else { code::MISMATCH };
    Ok(Output::new(&report, exit))
}
