//! Structural classification of groups whose group algebra has
//! `t^L = |G'| - k(p-1) + 1` for `k ∈ {14, 15}`.
//!
//! Each printed case is one [`CaseRow`]: a conjunction of [`Atom`]s over a
//! fixed vocabulary of subgroups ([`Sub`]). A [`StructuralProfile`] records
//! the isomorphism type, order and mutual inclusions of those subgroups, so
//! profiles can be computed from a group or written down by hand.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::catalog::{identify, Catalog, GroupId};
use crate::dseq::target_for_k;
use crate::error::{CatalogError, ClassifyError, LieError};
use crate::group::{exact_log, AbelianType, Group, Subgroup};
use crate::lie::jennings_data;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sub {
    Derived,
    Gamma3,
    Gamma4,
    Gamma5,
    Gamma6,
    /// `G'^2`.
    DerivedSq,
    /// `G'^4`.
    DerivedP4,
    /// `γ3^2`.
    Gamma3Sq,
    /// `γ4^2`.
    Gamma4Sq,
    /// `γ3^2·G'^4`.
    Gamma3SqDerivedP4,
    /// `G'^2 ∩ γ3`.
    DerivedSqMeetGamma3,
    /// `γ3^2 ∩ γ4`.
    Gamma3SqMeetGamma4,
    /// `γ3^2·G'^4 ∩ γ4`.
    Gamma3SqDerivedP4MeetGamma4,
    /// `γ5 ∩ γ3^2`.
    Gamma5MeetGamma3Sq,
}

impl Sub {
    pub const ALL: [Sub; 14] = [
        Sub::Derived,
        Sub::Gamma3,
        Sub::Gamma4,
        Sub::Gamma5,
        Sub::Gamma6,
        Sub::DerivedSq,
        Sub::DerivedP4,
        Sub::Gamma3Sq,
        Sub::Gamma4Sq,
        Sub::Gamma3SqDerivedP4,
        Sub::DerivedSqMeetGamma3,
        Sub::Gamma3SqMeetGamma4,
        Sub::Gamma3SqDerivedP4MeetGamma4,
        Sub::Gamma5MeetGamma3Sq,
    ];
}

impl fmt::Display for Sub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sub::Derived => "G'",
            Sub::Gamma3 => "γ3",
            Sub::Gamma4 => "γ4",
            Sub::Gamma5 => "γ5",
            Sub::Gamma6 => "γ6",
            Sub::DerivedSq => "G'^2",
            Sub::DerivedP4 => "G'^4",
            Sub::Gamma3Sq => "γ3^2",
            Sub::Gamma4Sq => "γ4^2",
            Sub::Gamma3SqDerivedP4 => "γ3^2·G'^4",
            Sub::DerivedSqMeetGamma3 => "G'^2 ∩ γ3",
            Sub::Gamma3SqMeetGamma4 => "γ3^2 ∩ γ4",
            Sub::Gamma3SqDerivedP4MeetGamma4 => "γ3^2·G'^4 ∩ γ4",
            Sub::Gamma5MeetGamma3Sq => "γ5 ∩ γ3^2",
        })
    }
}

/// Isomorphism type named in a condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    /// Abelian with these cyclic factors.
    Ab(&'static [u64]),
    /// `S(32, i)`.
    Small32(usize),
}

impl Shape {
    fn matches(&self, iso: &SubIso) -> bool {
        match (self, iso) {
            (Shape::Ab(f), SubIso::Abelian(t)) => AbelianType::from_cyclic_factors(f) == *t,
            (Shape::Small32(i), SubIso::Identified(id)) => *id == GroupId::new(32, *i),
            _ => false,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Ab(factors) => write!(f, "{}", AbelianType::from_cyclic_factors(factors)),
            Shape::Small32(i) => write!(f, "S(32,{i})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Atom {
    Iso(Sub, Shape),
    IsoAny(Sub, &'static [Shape]),
    Order(Sub, usize),
    Subset(Sub, Sub),
    Equal(Sub, Sub),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Iso(s, shape) => write!(f, "{s} ≅ {shape}"),
            Atom::IsoAny(s, shapes) => {
                let names: Vec<String> = shapes.iter().map(Shape::to_string).collect();
                write!(f, "{s} ≅ one of {{{}}}", names.join(", "))
            }
            Atom::Order(s, n) => write!(f, "|{s}| = {n}"),
            Atom::Subset(a, b) => write!(f, "{a} ⊆ {b}"),
            Atom::Equal(a, b) => write!(f, "{a} = {b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SubIso {
    Abelian(AbelianType),
    Identified(GroupId),
    Nonabelian { order: usize },
    /// Only the order is known (hand-written profiles).
    Unknown,
}

impl fmt::Display for SubIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubIso::Abelian(t) => write!(f, "{t}"),
            SubIso::Identified(id) => write!(f, "{id}"),
            SubIso::Nonabelian { order } => write!(f, "nonabelian of order {order}"),
            SubIso::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubInfo {
    pub order: usize,
    pub iso: SubIso,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct StructuralProfile {
    pub p: u64,
    pub subgroups: BTreeMap<Sub, SubInfo>,
    /// Pairs `(a, b)` with `a ⊆ b`, `a ≠ b` as expressions.
    pub inclusions: BTreeSet<(Sub, Sub)>,
}

impl StructuralProfile {
    /// An empty profile to be filled in by hand.
    pub fn synthetic(p: u64) -> Self {
        StructuralProfile { p, ..Default::default() }
    }

    pub fn abelian(mut self, s: Sub, factors: &[u64]) -> Self {
        let t = AbelianType::from_cyclic_factors(factors);
        self.subgroups.insert(s, SubInfo { order: t.order() as usize, iso: SubIso::Abelian(t) });
        self
    }

    pub fn small32(mut self, s: Sub, index: usize) -> Self {
        self.subgroups.insert(s, SubInfo { order: 32, iso: SubIso::Identified(GroupId::new(32, index)) });
        self
    }

    pub fn order(mut self, s: Sub, order: usize) -> Self {
        let info = self.subgroups.entry(s).or_insert(SubInfo { order, iso: SubIso::Unknown });
        info.order = order;
        self
    }

    pub fn subset(mut self, a: Sub, b: Sub) -> Self {
        self.inclusions.insert((a, b));
        self
    }

    pub fn equal(self, a: Sub, b: Sub) -> Self {
        self.subset(a, b).subset(b, a)
    }

    /// A hand-written profile satisfying exactly the atoms of `row`. For a
    /// choice of shapes the first one is used.
    pub fn witness(p: u64, row: &CaseRow) -> Self {
        let mut prof = StructuralProfile::synthetic(p);
        for atom in row.atoms {
            prof = match *atom {
                Atom::Iso(s, shape) | Atom::IsoAny(s, &[shape, ..]) => match shape {
                    Shape::Ab(f) => prof.abelian(s, f),
                    Shape::Small32(i) => prof.small32(s, i),
                },
                Atom::IsoAny(_, []) => prof,
                Atom::Order(s, n) => prof.order(s, n),
                Atom::Subset(a, b) => prof.subset(a, b),
                Atom::Equal(a, b) => prof.equal(a, b),
            };
        }
        prof
    }

    pub fn info(&self, s: Sub) -> Option<&SubInfo> {
        self.subgroups.get(&s)
    }

    pub fn is_subset(&self, a: Sub, b: Sub) -> bool {
        a == b || self.inclusions.contains(&(a, b))
    }

    pub fn holds(&self, atom: &Atom) -> bool {
        match *atom {
            Atom::Iso(s, shape) => self.info(s).is_some_and(|i| shape.matches(&i.iso)),
            Atom::IsoAny(s, shapes) => self.info(s).is_some_and(|i| shapes.iter().any(|sh| sh.matches(&i.iso))),
            Atom::Order(s, n) => self.info(s).is_some_and(|i| i.order == n),
            Atom::Subset(a, b) => self.is_subset(a, b),
            Atom::Equal(a, b) => self.is_subset(a, b) && self.is_subset(b, a),
        }
    }
}

/// Subgroups named by [`Sub`], computed in `g`.
pub fn named_subgroups(g: &Group) -> BTreeMap<Sub, Subgroup<'_>> {
    let lcs = g.whole().lower_central_series();
    let d = lcs.term(2).clone();
    let g3 = lcs.term(3).clone();
    let g4 = lcs.term(4).clone();
    let g5 = lcs.term(5).clone();
    let g6 = lcs.term(6).clone();
    let d2 = d.power_subgroup(2);
    let d4 = d.power_subgroup(4);
    let g3sq = g3.power_subgroup(2);
    let g4sq = g4.power_subgroup(2);
    let g3sq_d4 = g3sq.join(&d4);
    BTreeMap::from([
        (Sub::DerivedSqMeetGamma3, d2.intersection(&g3)),
        (Sub::Gamma3SqMeetGamma4, g3sq.intersection(&g4)),
        (Sub::Gamma3SqDerivedP4MeetGamma4, g3sq_d4.intersection(&g4)),
        (Sub::Gamma5MeetGamma3Sq, g5.intersection(&g3sq)),
        (Sub::Derived, d),
        (Sub::Gamma3, g3),
        (Sub::Gamma4, g4),
        (Sub::Gamma5, g5),
        (Sub::Gamma6, g6),
        (Sub::DerivedSq, d2),
        (Sub::DerivedP4, d4),
        (Sub::Gamma3Sq, g3sq),
        (Sub::Gamma4Sq, g4sq),
        (Sub::Gamma3SqDerivedP4, g3sq_d4),
    ])
}

/// Profile of `g`. A nonabelian `G'` is identified in `catalog`; this is
/// required when `|G'| = 32`.
pub fn structural_profile(g: &Group, p: u64, catalog: &Catalog) -> Result<StructuralProfile, ClassifyError> {
    if !crate::lie::check_lie_nilpotent(g, p) {
        return Err(LieError::NotLieNilpotent { p }.into());
    }
    let subs = named_subgroups(g);
    let mut profile = StructuralProfile::synthetic(p);
    for (&s, h) in &subs {
        let iso = match h.abelian_invariants() {
            Ok(t) => SubIso::Abelian(t),
            Err(_) if s == Sub::Derived => match identify(&h.to_group(), catalog) {
                Ok(id) => SubIso::Identified(id),
                Err(source) if h.order() == 32 => {
                    return Err(ClassifyError::Unidentified { order: h.order(), source })
                }
                Err(CatalogError::NotInCatalog) => SubIso::Nonabelian { order: h.order() },
                Err(source) => return Err(ClassifyError::Unidentified { order: h.order(), source }),
            },
            Err(_) => SubIso::Nonabelian { order: h.order() },
        };
        profile.subgroups.insert(s, SubInfo { order: h.order(), iso });
    }
    for (&a, ha) in &subs {
        for (&b, hb) in &subs {
            if a != b && ha.is_subgroup_of(hb) {
                profile.inclusions.insert((a, b));
            }
        }
    }
    Ok(profile)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTable {
    K14,
    K15P2,
    K15P17,
}

impl fmt::Display for CaseTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTable::K14 => "K14",
            CaseTable::K15P2 => "K15_P2",
            CaseTable::K15P17 => "K15_P17",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CaseRow {
    pub case: &'static str,
    pub atoms: &'static [Atom],
}

/// Which reading of case (v) of the `K15_P2` table to use. As printed it has
/// no `γ4` clause; the derivation behind it also forces `γ4 ⊆ G'^4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum CaseVReading {
    #[default]
    AsPrinted,
    WithGamma4Bound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseMatch {
    pub table: CaseTable,
    pub case: &'static str,
    /// Index of the matching row within its table.
    pub row: usize,
    pub atoms: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MatchOutcome {
    pub matches: Vec<CaseMatch>,
}

impl MatchOutcome {
    pub fn primary(&self) -> Option<&CaseMatch> {
        self.matches.first()
    }

    pub fn is_match(&self) -> bool {
        !self.matches.is_empty()
    }

    /// Distinct case ids that matched.
    pub fn case_ids(&self) -> Vec<&'static str> {
        let mut ids: Vec<&'static str> = Vec::new();
        for m in &self.matches {
            if !ids.contains(&m.case) {
                ids.push(m.case);
            }
        }
        ids
    }

    /// More than one printed case holds at once.
    pub fn multi_match(&self) -> bool {
        self.case_ids().len() > 1
    }
}

fn run_table(table: CaseTable, rows: &[CaseRow], profile: &StructuralProfile) -> MatchOutcome {
    let matches = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.atoms.iter().all(|a| profile.holds(a)))
        .map(|(row, r)| CaseMatch {
            table,
            case: r.case,
            row,
            atoms: r.atoms.iter().map(Atom::to_string).collect(),
        })
        .collect();
    MatchOutcome { matches }
}

pub fn match_k14(profile: &StructuralProfile) -> MatchOutcome {
    if profile.p != 2 {
        return MatchOutcome::default();
    }
    run_table(CaseTable::K14, K14_CASES, profile)
}

pub fn match_k15(profile: &StructuralProfile, reading: CaseVReading) -> MatchOutcome {
    match profile.p {
        2 => {
            let rows: Vec<CaseRow> = K15_P2_CASES
                .iter()
                .map(|r| match (r.case, reading) {
                    ("v", CaseVReading::WithGamma4Bound) => CaseRow { case: "v", atoms: K15_P2_CASE_V_WITH_GAMMA4 },
                    _ => *r,
                })
                .collect();
            run_table(CaseTable::K15P2, &rows, profile)
        }
        17 => run_table(CaseTable::K15P17, K15_P17_CASES, profile),
        _ => MatchOutcome::default(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BiconditionalReport {
    pub p: u64,
    pub k: i64,
    pub n: u32,
    pub t_upper: u64,
    pub target: i128,
    pub d_seq: BTreeMap<usize, u32>,
    pub outcome: MatchOutcome,
    /// `t^L` equals the target exactly when some case matched.
    pub consistent: bool,
}

pub fn verify_biconditional(
    g: &Group,
    p: u64,
    k: i64,
    catalog: &Catalog,
    reading: CaseVReading,
) -> Result<BiconditionalReport, ClassifyError> {
    let jd = jennings_data(g, p)?;
    let profile = structural_profile(g, p, catalog)?;
    let outcome = match k {
        14 => match_k14(&profile),
        15 => match_k15(&profile, reading),
        other => return Err(ClassifyError::UnsupportedK(other)),
    };
    let n = exact_log(g.derived_subgroup().order() as u64, p).expect("checked p-power");
    let target = target_for_k(p, n, k).unwrap_or(i128::MAX);
    let hits = jd.t_upper as i128 == target;
    Ok(BiconditionalReport {
        p,
        k,
        n,
        t_upper: jd.t_upper,
        target,
        d_seq: jd.d.clone(),
        consistent: hits == outcome.is_match(),
        outcome,
    })
}

use Atom::{Equal, Iso, IsoAny, Order, Subset};
use Shape::{Ab, Small32};
use Sub::{
    Derived as D, DerivedP4 as D4, DerivedSq as D2, DerivedSqMeetGamma3 as D2M3, Gamma3 as G3,
    Gamma3Sq as G3SQ, Gamma3SqDerivedP4 as G3SQD4, Gamma3SqDerivedP4MeetGamma4 as G3SQD4M4,
    Gamma3SqMeetGamma4 as G3SQM4, Gamma4 as G4, Gamma4Sq as G4SQ, Gamma5 as G5, Gamma5MeetGamma3Sq as G5MG3SQ,
    Gamma6 as G6,
};

const C16_C2: Shape = Ab(&[16, 2]);
const C8_C4: Shape = Ab(&[8, 4]);
const C8_C2_C2: Shape = Ab(&[8, 2, 2]);
const C8_C2: Shape = Ab(&[8, 2]);
const C8: Shape = Ab(&[8]);
const C4_C2: Shape = Ab(&[4, 2]);
const C4_C4: Shape = Ab(&[4, 4]);
const C4_C2_C2: Shape = Ab(&[4, 2, 2]);
const C2_C2: Shape = Ab(&[2, 2]);
const C4: Shape = Ab(&[4]);
const C2: Shape = Ab(&[2]);

const RANK3_ORDER32: &[Shape] = &[C8_C2_C2, Ab(&[4, 4, 2]), Ab(&[4, 2, 2, 2])];
const C8C4_OR_C4C4C2: &[Shape] = &[C8_C4, Ab(&[4, 4, 2])];
const S5_24_25_37_48: &[Shape] = &[Small32(5), Small32(24), Small32(25), Small32(37), Small32(48)];
const S4_12_24_TO_26: &[Shape] = &[Small32(4), Small32(12), Small32(24), Small32(25), Small32(26)];

pub static K14_CASES: &[CaseRow] = &[
    CaseRow { case: "i", atoms: &[Iso(D, C16_C2), Subset(D2, G3), Iso(G3, C8_C2), Subset(G4, G3SQ)] },
    CaseRow {
        case: "ii(a)",
        atoms: &[Iso(D, C16_C2), Iso(G3, C8), Subset(G4, D4), Equal(D4, G3SQ), Equal(G3SQ, D2M3), Iso(D2M3, C4)],
    },
    CaseRow {
        case: "ii(b)",
        atoms: &[Iso(D, C16_C2), Iso(G3, C4_C2), Iso(D2M3, C4), Subset(G4, D4), Subset(G3SQ, D4)],
    },
    CaseRow {
        case: "iii",
        atoms: &[Iso(D, C16_C2), Order(G3, 4), Order(D2M3, 2), Subset(G4, D4), Subset(G3SQ, D4)],
    },
    CaseRow { case: "iv", atoms: &[Iso(D, C16_C2), Iso(G3, C2), Order(D2M3, 1)] },
    CaseRow { case: "v", atoms: &[Iso(D, C8_C4), Subset(D2, G3), Iso(G3, C8_C2), Subset(G4, G3SQ)] },
    CaseRow {
        case: "vi",
        atoms: &[Iso(D, C8_C4), Iso(G3, C8), Order(D2M3, 2), Subset(G4, G3SQ), Subset(D4, G3SQ)],
    },
    CaseRow { case: "vii", atoms: &[Iso(D, C8_C2_C2), Subset(D2, G3), Iso(G3, C8_C2), Subset(G4, G3SQ)] },
    CaseRow {
        case: "viii",
        atoms: &[Iso(D, C8_C2_C2), Iso(G3, C8), Order(D2M3, 2), Subset(G4, G3SQ), Subset(D4, G3SQ)],
    },
    CaseRow {
        case: "ix",
        atoms: &[
            IsoAny(D, &[Small32(4), Small32(5), Small32(12)]),
            Subset(D2, G3),
            Iso(G3, C8_C2),
            Equal(G4, G3SQ),
            Iso(G5, C2),
        ],
    },
    CaseRow {
        case: "x",
        atoms: &[
            Iso(D, Small32(4)),
            Iso(G3, C8),
            Subset(D4, D2M3),
            Equal(D2M3, G4),
            Equal(G4, G3SQ),
            Iso(G5, C2),
        ],
    },
    CaseRow {
        case: "xi",
        atoms: &[Iso(D, Small32(37)), Subset(D2, G3), Iso(G3, C8_C2), Equal(G4, G3SQ), Iso(G5, C2)],
    },
    CaseRow {
        case: "xii",
        atoms: &[Iso(D, Small32(17)), Iso(G5, C2), Subset(D2, G3), Iso(G3, C8_C2), Equal(G4, G3SQ)],
    },
    CaseRow {
        case: "xii",
        atoms: &[
            Iso(D, Small32(17)),
            Iso(G5, C2),
            Iso(G3, C8),
            Equal(D2M3, G4),
            Equal(G4, G3SQ),
            Equal(G3SQ, D4),
        ],
    },
    CaseRow {
        case: "xii",
        atoms: &[
            Iso(D, Small32(17)),
            Iso(G5, C2),
            Iso(G3, C4_C2),
            Subset(G3SQ, D2M3),
            Equal(D2M3, G4),
            Equal(G4, D4),
            Iso(D4, C4),
        ],
    },
    CaseRow {
        case: "xiii",
        atoms: &[Iso(D, Small32(38)), Subset(D2, G3), Iso(G3, C8_C2), Equal(G4, G3SQ), Iso(G5, C2)],
    },
];

static K15_P2_CASE_V_WITH_GAMMA4: &[Atom] =
    &[Iso(D, Small32(17)), Subset(G3, D2), Iso(D2, C8), Iso(G3, C4), Subset(G4, D4)];

pub static K15_P2_CASES: &[CaseRow] = &[
    CaseRow { case: "i", atoms: &[Iso(D, C16_C2), Subset(G3, D2), Subset(G4, D4)] },
    CaseRow { case: "ii", atoms: &[Iso(D, C8_C2_C2), Subset(D2, G3), Iso(G3, C8), Subset(G4, G3SQ)] },
    CaseRow {
        case: "iii(a)",
        atoms: &[
            IsoAny(D, &[Small32(17), Small32(38)]),
            Subset(D2, G3),
            Iso(G3, C8),
            Subset(G4, G3SQ),
            Order(G5, 1),
        ],
    },
    CaseRow {
        case: "iii(b)",
        atoms: &[
            IsoAny(D, &[Small32(17), Small32(38)]),
            Subset(D2, G3),
            Iso(G3, C8),
            Equal(G4, G3SQ),
            Iso(G5, C2),
        ],
    },
    CaseRow {
        case: "iv",
        atoms: &[Iso(D, Small32(37)), Subset(D2, G3), Iso(G3, C8), Equal(G4, G3SQ), Iso(G5, C2)],
    },
    CaseRow { case: "v", atoms: &[Iso(D, Small32(17)), Subset(G3, D2), Iso(D2, C8), Iso(G3, C4)] },
    CaseRow {
        case: "vi",
        atoms: &[
            IsoAny(D, RANK3_ORDER32),
            Subset(D2, G3),
            Iso(G3, C4_C2_C2),
            Iso(G4, C4_C2),
            Subset(G6, G3SQ),
            Equal(G3SQ, G4SQ),
            Subset(G4SQ, G5),
            Iso(G5, C2_C2),
        ],
    },
    CaseRow {
        case: "vii",
        atoms: &[
            IsoAny(D, S5_24_25_37_48),
            Subset(D2, G3),
            Iso(G3, C4_C2_C2),
            Iso(G4, C4_C2),
            Subset(G3SQ, G5),
            Iso(G5, C2_C2),
            Order(G6, 1),
        ],
    },
    CaseRow {
        case: "viii",
        atoms: &[
            IsoAny(D, &[Small32(28), Small32(29), Small32(30)]),
            Subset(D2, G3),
            Iso(G3, C4_C2_C2),
            Iso(G4, C4_C2),
            Equal(G6, G3SQ),
            Subset(G3SQ, G5),
            Iso(G5, C2_C2),
        ],
    },
    CaseRow {
        case: "ix",
        atoms: &[
            IsoAny(
                D,
                &[
                    Small32(2),
                    Small32(5),
                    Small32(22),
                    Small32(23),
                    Small32(24),
                    Small32(25),
                    Small32(37),
                    Small32(46),
                    Small32(47),
                    Small32(48),
                ],
            ),
            Subset(D2, G3),
            Iso(G3, C4_C2_C2),
            Iso(G4, C4_C2),
            Equal(G6, G3SQ),
            Subset(G3SQ, G5),
            Iso(G5, C2_C2),
        ],
    },
    CaseRow {
        case: "x",
        atoms: &[
            IsoAny(D, RANK3_ORDER32),
            Subset(D2, G3),
            Iso(G3, C4_C2_C2),
            Iso(G4, C4_C2),
            Subset(G3SQ, G4),
            Iso(G5, C2),
            Order(G5MG3SQ, 1),
        ],
    },
    CaseRow {
        case: "xi",
        atoms: &[
            IsoAny(D, S5_24_25_37_48),
            Subset(D2, G3),
            Iso(G3, C4_C2_C2),
            Iso(G4, C4_C2),
            Subset(G3SQ, G4),
            Iso(G5, C2),
            Order(G5MG3SQ, 1),
        ],
    },
    CaseRow {
        case: "xii",
        atoms: &[
            IsoAny(D, C8C4_OR_C4C4C2),
            Subset(D2, G3),
            Iso(G3, C4_C4),
            Subset(G5, G3SQ),
            Subset(G3SQ, G4),
            Iso(G4, C4_C2),
        ],
    },
    CaseRow {
        case: "xiii",
        atoms: &[
            IsoAny(D, S4_12_24_TO_26),
            Subset(D2, G3),
            Iso(G3, C4_C4),
            Iso(G4, C4_C2),
            Equal(G5, G3SQ),
            Order(G6, 1),
        ],
    },
    CaseRow {
        case: "xiv",
        atoms: &[
            IsoAny(
                D,
                &[
                    Small32(4),
                    Small32(12),
                    Small32(24),
                    Small32(25),
                    Small32(26),
                    Small32(31),
                    Small32(32),
                    Small32(33),
                    Small32(34),
                    Small32(35),
                ],
            ),
            Subset(D2, G3),
            Iso(G3, C4_C4),
            Iso(G4, C4_C2),
            Equal(G5, G3SQ),
            Iso(G6, C2),
        ],
    },
    CaseRow {
        case: "xv",
        atoms: &[
            IsoAny(D, S4_12_24_TO_26),
            Subset(D2, G3),
            Iso(G3, C4_C4),
            Subset(G5, G3SQ),
            Subset(G3SQ, G4),
            Iso(G4, C4_C2),
            Iso(G5, C2),
        ],
    },
    CaseRow {
        case: "xvi",
        atoms: &[
            IsoAny(D, C8C4_OR_C4C4C2),
            Subset(D2, G3),
            Iso(G3, C4_C4),
            Iso(G4, C4),
            Order(G3SQM4, 2),
            Subset(G5, G3SQ),
        ],
    },
    CaseRow {
        case: "xvii",
        atoms: &[
            IsoAny(D, S4_12_24_TO_26),
            Subset(D2, G3),
            Iso(G3, C4_C4),
            Iso(G4, C4),
            Order(G3SQM4, 2),
            Subset(G5, G3SQ),
            Iso(G5, C2),
        ],
    },
    CaseRow {
        case: "xviii",
        atoms: &[
            IsoAny(D, &[Small32(4), Small32(5), Small32(12), Small32(17)]),
            Iso(G3, C4_C2),
            Order(D2M3, 4),
            Iso(G4, C4),
            Order(G3SQD4M4, 2),
            Iso(G5, C2),
            Subset(G5, G3SQD4),
            Iso(G3SQD4, C2_C2),
        ],
    },
    CaseRow {
        case: "xix",
        atoms: &[
            IsoAny(D, &[C8_C2_C2, Ab(&[4, 4, 2])]),
            Iso(G3, C4_C2),
            Order(D2M3, 2),
            Iso(G4, C4),
            Order(G3SQD4M4, 2),
            Subset(G5, G3SQD4),
            Iso(G3SQD4, C2_C2),
        ],
    },
    CaseRow {
        case: "xx",
        atoms: &[
            IsoAny(D, &[Small32(24), Small32(25), Small32(26), Small32(37), Small32(38)]),
            Iso(G3, C4_C2),
            Order(D2M3, 2),
            Iso(G4, C4),
            Order(G3SQD4M4, 2),
            Iso(G5, C2),
            Subset(G5, G3SQD4),
            Iso(G3SQD4, C2_C2),
        ],
    },
];

pub static K15_P17_CASES: &[CaseRow] =
    &[CaseRow { case: "i", atoms: &[Iso(D, Ab(&[17, 17])), Iso(G3, Ab(&[17]))] }];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::testing::*;

    #[test]
    fn tables_have_printed_case_ranges() {
        let ids = |rows: &[CaseRow]| {
            let mut v: Vec<&str> = rows.iter().map(|r| r.case).collect();
            v.dedup();
            v
        };
        assert_eq!(
            ids(K14_CASES),
            ["i", "ii(a)", "ii(b)", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii"]
        );
        assert_eq!(K14_CASES.iter().filter(|r| r.case == "xii").count(), 3);
        assert_eq!(ids(K15_P2_CASES).len(), 21);
        assert_eq!(ids(K15_P2_CASES).last(), Some(&"xx"));
        assert_eq!(K15_P17_CASES.len(), 1);
    }

    #[test]
    fn every_k14_row_has_a_witness_profile() {
        for (row, case) in K14_CASES.iter().enumerate() {
            let outcome = match_k14(&StructuralProfile::witness(2, case));
            assert!(outcome.matches.iter().any(|m| m.row == row), "row {row} ({})", case.case);
        }
    }

    #[test]
    fn every_k15_row_has_a_witness_profile() {
        for (row, case) in K15_P2_CASES.iter().enumerate() {
            let outcome = match_k15(&StructuralProfile::witness(2, case), CaseVReading::AsPrinted);
            assert!(outcome.matches.iter().any(|m| m.row == row), "row {row} ({})", case.case);
        }
        let p17 = StructuralProfile::witness(17, &K15_P17_CASES[0]);
        assert_eq!(match_k15(&p17, CaseVReading::AsPrinted).primary().unwrap().table, CaseTable::K15P17);
    }

    #[test]
    fn k14_case_i_example() {
        let prof = StructuralProfile::synthetic(2)
            .abelian(Sub::Derived, &[16, 2])
            .abelian(Sub::Gamma3, &[8, 2])
            .subset(Sub::DerivedSq, Sub::Gamma3)
            .subset(Sub::Gamma4, Sub::Gamma3Sq);
        let out = match_k14(&prof);
        assert_eq!(out.case_ids(), ["i"]);
        assert!(!out.multi_match());
    }

    #[test]
    fn k14_case_vi_example() {
        let prof = StructuralProfile::synthetic(2)
            .abelian(Sub::Derived, &[8, 4])
            .abelian(Sub::Gamma3, &[8])
            .abelian(Sub::DerivedSqMeetGamma3, &[2])
            .subset(Sub::Gamma4, Sub::Gamma3Sq)
            .subset(Sub::DerivedP4, Sub::Gamma3Sq);
        assert_eq!(match_k14(&prof).case_ids(), ["vi"]);
    }

    #[test]
    fn k15_case_i_and_p17_examples() {
        let prof = StructuralProfile::synthetic(2)
            .abelian(Sub::Derived, &[16, 2])
            .subset(Sub::Gamma3, Sub::DerivedSq)
            .subset(Sub::Gamma4, Sub::DerivedP4);
        assert_eq!(match_k15(&prof, CaseVReading::AsPrinted).case_ids(), ["i"]);
        let p17 = StructuralProfile::synthetic(17).abelian(Sub::Derived, &[17, 17]).abelian(Sub::Gamma3, &[17]);
        assert!(match_k15(&p17, CaseVReading::AsPrinted).is_match());
        let p3 = StructuralProfile { p: 3, ..p17.clone() };
        assert!(!match_k15(&p3, CaseVReading::AsPrinted).is_match());
        assert!(!match_k14(&p17).is_match());
    }

    #[test]
    fn case_v_readings_differ() {
        let prof = StructuralProfile::synthetic(2)
            .small32(Sub::Derived, 17)
            .abelian(Sub::DerivedSq, &[8])
            .abelian(Sub::Gamma3, &[4])
            .subset(Sub::Gamma3, Sub::DerivedSq);
        assert_eq!(match_k15(&prof, CaseVReading::AsPrinted).case_ids(), ["v"]);
        assert!(!match_k15(&prof, CaseVReading::WithGamma4Bound).is_match());
        let prof = prof.subset(Sub::Gamma4, Sub::DerivedP4);
        assert!(match_k15(&prof, CaseVReading::WithGamma4Bound).is_match());
    }

    #[test]
    fn cyclic_derived_matches_nothing() {
        let prof = StructuralProfile::synthetic(2).abelian(Sub::Derived, &[32]);
        assert!(!match_k14(&prof).is_match());
        assert!(!match_k15(&prof, CaseVReading::AsPrinted).is_match());
    }

    #[test]
    fn overlapping_rows_are_flagged() {
        // with γ6 = γ3^2 = 1 both (vii) and (ix) hold for G' = S(32,5)
        let prof = StructuralProfile::witness(2, &K15_P2_CASES[9]).small32(Sub::Derived, 5).order(Sub::Gamma6, 1);
        let out = match_k15(&prof, CaseVReading::AsPrinted);
        assert_eq!(out.case_ids(), ["vii", "ix"]);
        assert!(out.multi_match());
    }

    #[test]
    fn computed_profiles() {
        let cat = Catalog::new(Vec::new());
        let d8 = dihedral(4);
        let prof = structural_profile(&d8, 2, &cat).unwrap();
        assert!(prof.holds(&Iso(Sub::Derived, C2)));
        assert!(prof.holds(&Order(Sub::Gamma3, 1)));
        assert!(prof.holds(&Order(Sub::DerivedSq, 1)));

        let d32 = dihedral(16);
        let prof = structural_profile(&d32, 2, &cat).unwrap();
        assert!(prof.holds(&Iso(Sub::Derived, C8)));
        assert!(prof.holds(&Iso(Sub::Gamma3, C4)));
        assert!(prof.holds(&Iso(Sub::Gamma4, C2)));
        assert!(prof.holds(&Order(Sub::Gamma5, 1)));
        assert!(prof.holds(&Subset(Sub::Gamma4, Sub::Gamma3)));
        assert!(prof.holds(&Equal(Sub::Gamma3, Sub::DerivedSq)));

        let ab = abelian(&[4, 2]);
        let prof = structural_profile(&ab, 2, &cat).unwrap();
        for a in Sub::ALL {
            for b in Sub::ALL {
                assert!(prof.is_subset(a, b));
            }
        }
        assert!(structural_profile(&symmetric3(), 2, &cat).is_err());
    }

    #[test]
    fn biconditional_on_small_groups() {
        let cat = Catalog::new(Vec::new());
        let d32 = dihedral(16);
        let rep = verify_biconditional(&d32, 2, 14, &cat, CaseVReading::AsPrinted).unwrap();
        assert_eq!((rep.t_upper, rep.target), (9, -5));
        assert!(!rep.outcome.is_match());
        assert!(rep.consistent);
        assert!(matches!(
            verify_biconditional(&d32, 2, 13, &cat, CaseVReading::AsPrinted),
            Err(ClassifyError::UnsupportedK(13))
        ));
    }
}
