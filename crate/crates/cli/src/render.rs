//! Report types. Each serializes to the JSON payload and renders the same
//! numbers as text.

use std::collections::BTreeMap;
use std::fmt::{self, Display, Write};

use lieindex::catalog::{CellDiff, CellFlag, GroupId};
use lieindex::dseq::ScanStatus;
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Sparse map rendered as `{2:1, 3:2}`.
pub struct Sparse<'a, K>(pub &'a BTreeMap<K, u32>);

impl<K: Display> Display for Sparse<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(m, d)| format!("{m}:{d}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize)]
pub struct JenningsReport {
    pub schema: u32,
    pub command: &'static str,
    pub group: GroupId,
    pub order: usize,
    pub p: u64,
    pub n: u32,
    /// Orders of `D_(2), D_(3), …` down to the trivial subgroup.
    pub dim_subgroup_orders: Vec<usize>,
    pub d_seq: BTreeMap<usize, u32>,
    pub t_upper: u64,
    pub formula_value: u64,
    pub commutative: bool,
    pub cyclic_derived: bool,
}

impl Display for JenningsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {} (order {}), p = {}", self.group, self.order, self.p)?;
        writeln!(f, "|G'| = {}^{}", self.p, self.n)?;
        for (i, o) in self.dim_subgroup_orders.iter().enumerate() {
            writeln!(f, "|D_({})| = {o}", i + 2)?;
        }
        writeln!(f, "t^L = {}, d = {}", self.t_upper, Sparse(&self.d_seq))?;
        if self.commutative {
            writeln!(f, "note: G' = 1, KG is commutative (formula value {})", self.formula_value)?;
        }
        if self.cyclic_derived {
            writeln!(f, "note: G' is cyclic, t^L = |G'| + 1 = {}", self.p.pow(self.n) + 1)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
pub struct SeqOut {
    pub d_seq: BTreeMap<u64, u32>,
    /// Smallest exponent witness `e` with `exp(G') = p^e`.
    pub e: Option<u32>,
}

#[derive(Serialize)]
pub struct DseqReport {
    pub schema: u32,
    pub command: &'static str,
    pub p: u64,
    pub n: u32,
    pub k: Option<i64>,
    pub target: i128,
    pub assume_noncyclic: bool,
    pub count: usize,
    pub sequences: Vec<SeqOut>,
}

impl Display for DseqReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k.map(|k| format!(", k = {k}")).unwrap_or_default();
        writeln!(f, "p = {}, n = {}{k}, target t^L = {}", self.p, self.n, self.target)?;
        for s in &self.sequences {
            let e = s.e.map(|e| format!("  (e = {e})")).unwrap_or_default();
            writeln!(f, "{}{e}", Sparse(&s.d_seq))?;
        }
        writeln!(f, "{} feasible", self.count)
    }
}

#[derive(Serialize)]
pub struct ScanRowOut {
    pub p: u64,
    pub n: u32,
    pub k: i64,
    pub target: Option<i128>,
    pub status: ScanStatus,
    pub count: usize,
    pub sequences: Vec<SeqOut>,
}

#[derive(Serialize)]
pub struct ScanReport {
    pub schema: u32,
    pub command: &'static str,
    pub rows: Vec<ScanRowOut>,
}

impl Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4} {:>4} {:>4} {:>12} {:>8}  status", "k", "p", "n", "target", "count")?;
        for r in &self.rows {
            let target = r.target.map_or("-".to_string(), |t| t.to_string());
            let status = match r.status {
                ScanStatus::Searched => "searched",
                ScanStatus::ExcludedByIndexBound => "excluded (index bound)",
                ScanStatus::Unreachable => "unreachable",
            };
            let mut line = format!("{:>4} {:>4} {:>4} {target:>12} {:>8}  {status}", r.k, r.p, r.n, r.count);
            for s in &r.sequences {
                write!(line, "  {}", Sparse(&s.d_seq))?;
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
pub struct Table1Report {
    pub schema: u32,
    pub command: &'static str,
    pub rows: usize,
    pub compared_cells: usize,
    pub flagged: Vec<FlaggedCell>,
    pub unflagged: Vec<CellDiff>,
    pub stale_flags: Vec<CellFlag>,
    pub missing_rows: Vec<GroupId>,
    pub extra_rows: Vec<GroupId>,
    pub clean: bool,
}

#[derive(Serialize)]
pub struct FlaggedCell {
    #[serde(flatten)]
    pub diff: CellDiff,
    pub note: String,
}

impl Display for Table1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} rows, {} cells compared", self.rows, self.compared_cells)?;
        for c in &self.flagged {
            let d = &c.diff;
            writeln!(f, "flagged   {} {}: printed {}, computed {} ({})", d.id, d.column, d.golden, d.computed, c.note)?;
        }
        for d in &self.unflagged {
            writeln!(f, "MISMATCH  {} {}: golden {}, computed {}", d.id, d.column, d.golden, d.computed)?;
        }
        for s in &self.stale_flags {
            writeln!(f, "STALE     {} {}: flag no longer matches a difference", s.id, s.column)?;
        }
        for id in &self.missing_rows {
            writeln!(f, "MISSING   {id}")?;
        }
        for id in &self.extra_rows {
            writeln!(f, "EXTRA     {id}")?;
        }
        writeln!(
            f,
            "{} flagged, {} unflagged: {}",
            self.flagged.len(),
            self.unflagged.len(),
            if self.clean { "clean" } else { "FAILED" }
        )
    }
}

#[derive(Serialize)]
pub struct CheckOut {
    pub m: usize,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub schema: u32,
    pub command: &'static str,
    pub group: GroupId,
    pub order: usize,
    pub p: u64,
    pub t_lower: Option<usize>,
    /// Direct value from the upper Lie power series.
    pub t_upper: Option<usize>,
    pub t_upper_jennings: u64,
    pub lower_dims: Vec<usize>,
    pub upper_dims: Vec<usize>,
    pub checks: Vec<CheckOut>,
    pub commutative: bool,
    pub cyclic_derived: bool,
    pub agree: bool,
}

fn opt(v: Option<usize>) -> String {
    v.map_or("not reached".to_string(), |v| v.to_string())
}

impl Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {} (order {}), p = {}", self.group, self.order, self.p)?;
        writeln!(f, "dim KG^[n]: {:?}", self.lower_dims)?;
        writeln!(f, "dim KG^(n): {:?}", self.upper_dims)?;
        writeln!(f, "t_L = {}", opt(self.t_lower))?;
        writeln!(f, "t^L(direct) = {}", opt(self.t_upper))?;
        writeln!(f, "t^L(Jennings) = {}", self.t_upper_jennings)?;
        for c in &self.checks {
            writeln!(f, "D_({}) = G ∩ (1 + KG^({})): {}", c.m, c.m, if c.holds { "ok" } else { "FAILS" })?;
        }
        if self.commutative {
            writeln!(f, "note: G' = 1, KG is commutative")?;
        }
        if self.cyclic_derived {
            writeln!(f, "note: G' is cyclic")?;
        }
        writeln!(f, "{}", if self.agree { "all checks pass" } else { "DISAGREEMENT" })
    }
}

#[derive(Serialize)]
pub struct SubOut {
    pub name: String,
    pub order: usize,
    pub iso: String,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub command: &'static str,
    pub group: GroupId,
    pub p: u64,
    pub k: i64,
    pub n: u32,
    pub t_upper: u64,
    pub target: i128,
    pub d_seq: BTreeMap<usize, u32>,
    pub profile: Vec<SubOut>,
    pub inclusions: Vec<(String, String)>,
    /// First matching case id.
    pub case: Option<&'static str>,
    pub cases: Vec<&'static str>,
    pub multi_match: bool,
    pub reading: &'static str,
    pub consistent: bool,
}

impl Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {}, p = {}, k = {}", self.group, self.p, self.k)?;
        for s in &self.profile {
            writeln!(f, "  {:<16} {} (order {})", s.name, s.iso, s.order)?;
        }
        writeln!(f, "t^L = {}, target = {}, d = {}", self.t_upper, self.target, Sparse(&self.d_seq))?;
        match self.case {
            Some(c) => writeln!(f, "case = {c}")?,
            None => writeln!(f, "case = none")?,
        }
        if self.multi_match {
            writeln!(f, "flag: several printed cases hold: {}", self.cases.join(", "))?;
        }
        writeln!(f, "consistent = {}", self.consistent)
    }
}
