//! Jennings d-sequences with a prescribed upper Lie nilpotency index.
//!
//! A d-sequence is a finitely supported family `d_(j) ≥ 0` (`j ≥ 2`) with
//! `d_(2) ≥ 1`, `Σ d_(j) = n` and `2 + (p-1)·Σ (j-1)·d_(j) = t`. Positions are
//! stored as `j`; the pruning rules are phrased with `m = j - 1`, so a "zero
//! at m" means `d_(m+1) = 0` with some positive entry further right.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::DseqError;
use crate::group::is_prime;

/// The part of `x` coprime to `p`.
pub fn nu_p_prime(mut x: u64, p: u64) -> u64 {
    assert!(x > 0 && p > 1);
    while x.is_multiple_of(p) {
        x /= p;
    }
    x
}

fn is_power_of(mut x: u64, p: u64) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Target index `pⁿ - k(p-1) + 1`.
pub fn target_for_k(p: u64, n: u32, k: i64) -> Option<i128> {
    let pn = (p as i128).checked_pow(n)?;
    Some(pn - k as i128 * (p as i128 - 1) + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DSeqProblem {
    pub p: u64,
    pub n: u32,
    pub target: i128,
    /// Restricts the exponent witness `e = log_p exp(G')` to `1..=n-1`.
    pub assume_noncyclic: bool,
}

impl DSeqProblem {
    /// `assume_noncyclic` starts out false; see [`Self::for_k`].
    pub fn new(p: u64, n: u32, target: i128) -> Result<Self, DseqError> {
        if !is_prime(p) {
            return Err(DseqError::NotPrime(p));
        }
        if (target - 2).rem_euclid(p as i128 - 1) != 0 {
            return Err(DseqError::TargetNotRepresentable { numerator: target - 2, p_minus_1: p - 1 });
        }
        Ok(DSeqProblem { p, n, target, assume_noncyclic: false })
    }

    /// Problem for `t = pⁿ - k(p-1) + 1`. A cyclic `G'` of order `pⁿ` forces
    /// `k = 0`, so for `k ≠ 0` the noncyclic assumption is switched on.
    pub fn for_k(p: u64, n: u32, k: i64) -> Result<Self, DseqError> {
        if !is_prime(p) {
            return Err(DseqError::NotPrime(p));
        }
        let target = target_for_k(p, n, k).ok_or(DseqError::Overflow { p, n })?;
        let mut problem = DSeqProblem::new(p, n, target)?;
        problem.assume_noncyclic = k != 0;
        Ok(problem)
    }

    pub fn with_noncyclic(mut self, assume: bool) -> Self {
        self.assume_noncyclic = assume;
        self
    }

    /// `Σ (j-1)·d_(j)`, or `None` when the target is below 2.
    pub fn weight(&self) -> Option<u64> {
        let w = (self.target - 2) / (self.p as i128 - 1);
        (w >= 0).then(|| u64::try_from(w).ok()).flatten()
    }

    pub fn e_range(&self) -> std::ops::RangeInclusive<u32> {
        if self.assume_noncyclic {
            1..=self.n.saturating_sub(1)
        } else {
            1..=self.n
        }
    }
}

/// A sparse d-sequence. Ordered lexicographically by its support pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DSeq {
    pub d: BTreeMap<u64, u32>,
    /// Smallest exponent witness, when the sequence came from a feasibility
    /// search.
    pub e: Option<u32>,
}

impl DSeq {
    /// Zero entries are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> DSeq {
        DSeq { d: pairs.into_iter().filter(|&(_, v)| v > 0).collect(), e: None }
    }

    pub fn get(&self, j: u64) -> u32 {
        self.d.get(&j).copied().unwrap_or(0)
    }

    pub fn n(&self) -> u32 {
        self.d.values().sum()
    }

    pub fn weight(&self) -> u64 {
        self.d.iter().map(|(&j, &v)| (j - 1) * v as u64).sum()
    }

    pub fn t_upper(&self, p: u64) -> u64 {
        2 + (p - 1) * self.weight()
    }

    pub fn last_position(&self) -> Option<u64> {
        self.d.keys().next_back().copied()
    }

    /// `m` values (so `d_(m+1) = 0`) lying strictly inside the support.
    pub fn interior_zeros(&self) -> Vec<u64> {
        let Some(last) = self.last_position() else { return Vec::new() };
        (1..last - 1).filter(|&m| self.get(m + 1) == 0).collect()
    }
}

impl fmt::Display for DSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.d.iter().map(|(j, v)| format!("{j}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    /// Zero at a power of p.
    PowerOfP,
    /// Zero at a multiple of p^(e-1).
    ExponentBound,
    /// `d_(pm+1) ≤ d_(m+1)` once some zero lies below pm.
    Monotone,
    /// A zero at m forbids later positives at s with ν(s) ≥ ν(m).
    CoprimePart,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::PowerOfP => "i",
            Rule::ExponentBound => "ii",
            Rule::Monotone => "iv",
            Rule::CoprimePart => "v",
        })
    }
}

/// One rule firing. Both fields use the `m = j - 1` convention: the zero is
/// `d_(zero+1) = 0` and the offending entry is `d_(offending+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub zero: u64,
    pub offending: u64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (z, o) = (self.zero + 1, self.offending + 1);
        match self.rule {
            Rule::Monotone => {
                write!(f, "rule iv: d_({o}) exceeds the entry it is bounded by, after d_({z}) = 0")
            }
            rule => write!(f, "rule {rule}: d_({z}) = 0 but d_({o}) > 0"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every listed exponent `e` passes all rules.
    Feasible { witnesses: Vec<u32> },
    /// `violations` holds the e-independent firings; `per_e` the first
    /// exponent-bound firing for each candidate `e`.
    Rejected { violations: Vec<Violation>, per_e: Vec<(u32, Option<Violation>)> },
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible { .. })
    }

    /// Rules that fired; the exponent bound counts only when it fired for
    /// every candidate `e`.
    pub fn rules(&self) -> BTreeSet<Rule> {
        match self {
            Verdict::Feasible { .. } => BTreeSet::new(),
            Verdict::Rejected { violations, per_e } => {
                let mut rules: BTreeSet<Rule> = violations.iter().map(|v| v.rule).collect();
                if per_e.iter().all(|(_, v)| v.is_some()) {
                    rules.insert(Rule::ExponentBound);
                }
                rules
            }
        }
    }
}

fn exponent_independent_violations(seq: &DSeq, p: u64) -> Vec<Violation> {
    let mut out = Vec::new();
    let zeros = seq.interior_zeros();
    let positives: Vec<u64> = seq.d.keys().map(|j| j - 1).collect();
    for &m in &zeros {
        if is_power_of(m, p) {
            let s = *positives.iter().find(|&&s| s > m).expect("interior zero");
            out.push(Violation { rule: Rule::PowerOfP, zero: m, offending: s });
        }
        let nu_m = nu_p_prime(m, p);
        for &s in positives.iter().filter(|&&s| s > m) {
            if nu_p_prime(s, p) >= nu_m {
                out.push(Violation { rule: Rule::CoprimePart, zero: m, offending: s });
            }
        }
    }
    if let Some(&l) = zeros.first() {
        for &pm in positives.iter().filter(|&&s| s > l && s % p == 0) {
            let m = pm / p;
            if seq.get(pm + 1) > seq.get(m + 1) {
                out.push(Violation { rule: Rule::Monotone, zero: l, offending: pm });
            }
        }
    }
    out.sort();
    out
}

fn exponent_violation(seq: &DSeq, p: u64, e: u32) -> Option<Violation> {
    let q = p.checked_pow(e - 1)?;
    let m = seq.interior_zeros().into_iter().find(|m| m % q == 0)?;
    let s = seq.d.keys().map(|j| j - 1).find(|&s| s > m).expect("interior zero");
    Some(Violation { rule: Rule::ExponentBound, zero: m, offending: s })
}

/// All rule firings for one fixed exponent witness `e ≥ 1`.
pub fn prune_with_e(seq: &DSeq, p: u64, e: u32) -> Vec<Violation> {
    assert!(e >= 1);
    let mut out = exponent_independent_violations(seq, p);
    out.extend(exponent_violation(seq, p, e));
    out.sort();
    out
}

pub fn prune(seq: &DSeq, problem: &DSeqProblem) -> Verdict {
    let violations = exponent_independent_violations(seq, problem.p);
    let per_e: Vec<(u32, Option<Violation>)> =
        problem.e_range().map(|e| (e, exponent_violation(seq, problem.p, e))).collect();
    let witnesses: Vec<u32> = per_e.iter().filter(|(_, v)| v.is_none()).map(|&(e, _)| e).collect();
    if violations.is_empty() && !witnesses.is_empty() {
        Verdict::Feasible { witnesses }
    } else {
        Verdict::Rejected { violations, per_e }
    }
}

/// Every sequence of the right length and index, before pruning.
pub fn enumerate_raw(problem: &DSeqProblem) -> Vec<DSeq> {
    let Some(w) = problem.weight() else { return Vec::new() };
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    raw_rec(1, problem.n, w, &mut cur, &mut out);
    out.sort();
    out
}

fn raw_rec(m: u64, c: u32, w: u64, cur: &mut BTreeMap<u64, u32>, out: &mut Vec<DSeq>) {
    if c == 0 {
        if w == 0 {
            out.push(DSeq { d: cur.clone(), e: None });
        }
        return;
    }
    // d_(2) must be positive; later positions may be skipped.
    let mut s = m;
    while s * c as u64 <= w {
        for v in 1..=c.min((w / s) as u32) {
            cur.insert(s + 1, v);
            raw_rec(s + 1, c - v, w - s * v as u64, cur, out);
        }
        cur.remove(&(s + 1));
        if s == 1 && m == 1 {
            break;
        }
        s += 1;
    }
}

/// Sequences surviving [`prune`], found by a search that applies the rules
/// to prefixes. Each carries its smallest witness `e`.
pub fn feasible_set(problem: &DSeqProblem) -> Vec<DSeq> {
    let Some(w) = problem.weight() else { return Vec::new() };
    let mut found: BTreeMap<BTreeMap<u64, u32>, u32> = BTreeMap::new();
    for e in problem.e_range().rev() {
        let mut search = Search {
            p: problem.p,
            barrier: problem.p.checked_pow(e - 1),
            cur: BTreeMap::new(),
            out: Vec::new(),
        };
        search.run(0, problem.n, w, u64::MAX, false);
        for d in search.out {
            found.insert(d, e);
        }
    }
    found.into_iter().map(|(d, e)| DSeq { d, e: Some(e) }).collect()
}

struct Search {
    p: u64,
    /// `p^(e-1)`, or `None` when it overflows (no zero is then a multiple).
    barrier: Option<u64>,
    cur: BTreeMap<u64, u32>,
    out: Vec<BTreeMap<u64, u32>>,
}

impl Search {
    /// `last` is the last decided `m`; `min_nu` the least ν over zeros so far.
    fn run(&mut self, last: u64, c: u32, w: u64, min_nu: u64, has_zero: bool) {
        if c == 0 {
            if w == 0 {
                self.out.push(self.cur.clone());
            }
            return;
        }
        let (mut gap_nu, mut gap_zero) = (min_nu, has_zero);
        let mut s = last + 1;
        while s.saturating_mul(c as u64) <= w {
            if nu_p_prime(s, self.p) < gap_nu {
                let mut cap = c.min((w / s) as u32);
                if gap_zero && s.is_multiple_of(self.p) {
                    cap = cap.min(self.cur.get(&(s / self.p + 1)).copied().unwrap_or(0));
                }
                for v in 1..=cap {
                    self.cur.insert(s + 1, v);
                    self.run(s, c - v, w - s * v as u64, gap_nu, gap_zero);
                }
                self.cur.remove(&(s + 1));
            }
            // Leave d_(s+1) = 0 and move on, unless such a zero must end the sequence.
            if is_power_of(s, self.p) || self.barrier.is_some_and(|q| s.is_multiple_of(q)) {
                break;
            }
            gap_nu = gap_nu.min(nu_p_prime(s, self.p));
            gap_zero = true;
            s += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScanStatus {
    Searched,
    /// `p ≥ 5` and the target exceeds `p^(n-1) + 2p - 1` while staying below
    /// `pⁿ + 1`.
    ExcludedByIndexBound,
    /// Target below 2 or incompatible with `p - 1`.
    Unreachable,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub p: u64,
    pub n: u32,
    pub k: i64,
    pub target: i128,
    pub status: ScanStatus,
    pub feasible: Vec<DSeq>,
}

/// Upper bound on the index of a non-maximal case for odd `p ≥ 5`.
pub fn passes_index_bound(p: u64, n: u32, target: i128) -> bool {
    if p < 5 || n == 0 {
        return true;
    }
    let (p, pn) = (p as i128, (p as i128).pow(n));
    target > pn || target < p.pow(n - 1) + 2 * p
}

pub fn scan_report(ps: &[u64], ns: &[u32], ks: &[i64]) -> Result<Vec<ScanRow>, DseqError> {
    if let Some(&bad) = ps.iter().find(|&&p| !is_prime(p)) {
        return Err(DseqError::NotPrime(bad));
    }
    let jobs: Vec<(u64, u32, i64)> = ps
        .iter()
        .flat_map(|&p| ns.iter().flat_map(move |&n| ks.iter().map(move |&k| (p, n, k))))
        .collect();
    let mut rows: Vec<ScanRow> = jobs
        .into_par_iter()
        .map(|(p, n, k)| {
            let target = target_for_k(p, n, k).unwrap_or(i128::MAX);
            let row = |status, feasible| ScanRow { p, n, k, target, status, feasible };
            match DSeqProblem::for_k(p, n, k) {
                Ok(problem) if problem.weight().is_some() => {
                    if passes_index_bound(p, n, target) {
                        row(ScanStatus::Searched, feasible_set(&problem))
                    } else {
                        row(ScanStatus::ExcludedByIndexBound, Vec::new())
                    }
                }
                _ => row(ScanStatus::Unreachable, Vec::new()),
            }
        })
        .collect();
    rows.sort_by_key(|r| (r.k, r.p, r.n));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(pairs: &[(u64, u32)]) -> DSeq {
        DSeq::from_pairs(pairs.iter().copied())
    }

    fn strip(v: Vec<DSeq>) -> Vec<DSeq> {
        v.into_iter().map(|s| DSeq { e: None, ..s }).collect()
    }

    /// Counts non-decreasing lists `1 = a_1 ≤ … ≤ a_n` summing to `w`.
    fn naive_count(n: u32, w: u64) -> usize {
        fn go(left: u32, w: u64, min: u64) -> usize {
            if left == 0 {
                return usize::from(w == 0);
            }
            (min..=w).take_while(|&a| a * left as u64 <= w).map(|a| go(left - 1, w - a, a)).sum()
        }
        if n == 0 || w < 1 {
            return 0;
        }
        go(n - 1, w - 1, 1)
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_p_prime(12, 2), 3);
        assert_eq!(nu_p_prime(8, 2), 1);
        assert_eq!(nu_p_prime(45, 3), 5);
        assert_eq!(nu_p_prime(7, 5), 7);
    }

    #[test]
    fn problem_validation() {
        assert_eq!(DSeqProblem::new(4, 2, 5).unwrap_err(), DseqError::NotPrime(4));
        assert!(matches!(
            DSeqProblem::new(3, 2, 7),
            Err(DseqError::TargetNotRepresentable { numerator: 5, p_minus_1: 2 })
        ));
        let pr = DSeqProblem::for_k(2, 5, 14).unwrap();
        assert_eq!(pr.target, 19);
        assert!(pr.assume_noncyclic);
        assert_eq!(pr.e_range(), 1..=4);
        assert!(!DSeqProblem::for_k(2, 1, 0).unwrap().assume_noncyclic);
    }

    #[test]
    fn raw_small_instances() {
        let only = enumerate_raw(&DSeqProblem::for_k(2, 1, 0).unwrap());
        assert_eq!(only, vec![seq(&[(2, 1)])]);
        let pr = DSeqProblem::for_k(2, 2, 0).unwrap();
        assert_eq!(enumerate_raw(&pr), vec![seq(&[(2, 1), (3, 1)])]);
        let pr = DSeqProblem::new(2, 2, 4).unwrap();
        assert_eq!(enumerate_raw(&pr), vec![seq(&[(2, 2)])]);
        let pr = DSeqProblem::new(2, 2, 6).unwrap();
        assert_eq!(enumerate_raw(&pr), vec![seq(&[(2, 1), (4, 1)])]);
    }

    #[test]
    fn single_entry_is_feasible() {
        let pr = DSeqProblem::for_k(2, 1, 0).unwrap();
        assert_eq!(prune(&seq(&[(2, 1)]), &pr), Verdict::Feasible { witnesses: vec![1] });
        assert_eq!(strip(feasible_set(&pr)), vec![seq(&[(2, 1)])]);
    }

    #[test]
    fn known_rejections() {
        let pr = DSeqProblem::for_k(2, 5, 14).unwrap();
        let a = prune(&seq(&[(2, 1), (3, 1), (5, 2), (7, 1)]), &pr);
        assert!(a.rules().contains(&Rule::CoprimePart));
        let b = prune(&seq(&[(2, 1), (3, 1), (5, 2), (6, 1)]), &pr);
        assert!(b.rules().contains(&Rule::Monotone));
        let c = prune(&seq(&[(2, 1), (4, 1)]), &DSeqProblem::new(2, 2, 5).unwrap());
        assert_eq!(c.rules(), BTreeSet::from([Rule::PowerOfP, Rule::ExponentBound, Rule::CoprimePart]));
    }

    #[test]
    fn exponent_rule_depends_on_e() {
        // zero at m = 3 is a multiple of 3^(e-1) only for e = 1, 2
        let s = seq(&[(2, 2), (5, 1)]);
        assert!(prune_with_e(&s, 3, 2).iter().any(|v| v.rule == Rule::ExponentBound));
        assert!(prune_with_e(&s, 3, 3).iter().all(|v| v.rule != Rule::ExponentBound));
    }

    #[test]
    fn k14_order_32() {
        let got = strip(feasible_set(&DSeqProblem::for_k(2, 5, 14).unwrap()));
        assert_eq!(got, vec![seq(&[(2, 1), (3, 2), (5, 1), (9, 1)])]);
    }

    #[test]
    fn k15_order_32_and_p17() {
        let got = strip(feasible_set(&DSeqProblem::for_k(2, 5, 15).unwrap()));
        assert_eq!(
            got,
            vec![seq(&[(2, 1), (3, 1), (4, 1), (5, 1), (7, 1)]), seq(&[(2, 2), (3, 1), (5, 1), (9, 1)])]
        );
        let got = strip(feasible_set(&DSeqProblem::for_k(17, 2, 15).unwrap()));
        assert_eq!(got, vec![seq(&[(2, 1), (3, 1)])]);
    }

    #[test]
    fn index_bound_filter() {
        assert!(passes_index_bound(2, 7, 3));
        assert!(!passes_index_bound(5, 3, 100));
        assert!(passes_index_bound(5, 3, 34));
        assert!(passes_index_bound(5, 3, 126));
    }

    #[test]
    fn scan_rows_are_ordered() {
        let rows = scan_report(&[3, 2], &[5, 4], &[15, 14]).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.k, r.p, r.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(scan_report(&[6], &[2], &[1]).is_err());
    }

    #[test]
    fn raw_counts_match_naive_counter() {
        for p in [2u64, 3, 5] {
            for n in 1..=5 {
                for w in 0..=40u64 {
                    let pr = DSeqProblem::new(p, n, 2 + (p as i128 - 1) * w as i128).unwrap();
                    assert_eq!(enumerate_raw(&pr).len(), naive_count(n, w), "p={p} n={n} w={w}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn search_equals_filtered_enumeration(
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
            n in 1u32..=6,
            w in 0u64..=45,
            noncyclic in any::<bool>(),
        ) {
            let pr = DSeqProblem::new(p, n, 2 + (p as i128 - 1) * w as i128)
                .unwrap()
                .with_noncyclic(noncyclic);
            let expected: Vec<DSeq> = enumerate_raw(&pr)
                .into_iter()
                .filter(|s| prune(s, &pr).is_feasible())
                .collect();
            let got = feasible_set(&pr);
            prop_assert_eq!(strip(got.clone()), expected);
            for s in &got {
                match prune(s, &pr) {
                    Verdict::Feasible { witnesses } => prop_assert_eq!(Some(witnesses[0]), s.e),
                    other => prop_assert!(false, "{other:?}"),
                }
            }
        }

        #[test]
        fn raw_sequences_have_right_shape(p in 2u64..=7, n in 1u32..=5, w in 0u64..=30) {
            prop_assume!(is_prime(p));
            let pr = DSeqProblem::new(p, n, 2 + (p as i128 - 1) * w as i128).unwrap();
            for s in enumerate_raw(&pr) {
                prop_assert_eq!(s.n(), n);
                prop_assert!(s.get(2) >= 1);
                prop_assert_eq!(s.t_upper(p) as i128, pr.target);
            }
        }
    }
}
