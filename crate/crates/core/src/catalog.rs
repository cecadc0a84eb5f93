//! Small-group catalog: file format, fingerprints, identification and the
//! order-32 invariant table.
//!
//! Catalog files are line oriented:
//!
//! ```text
//! [group]
//! id = "S(8,3)"
//! degree = 4
//! gens = (1,2,3,4) | (1,3)
//! ```
//!
//! Points are 1-based, generators are separated by `|`, the identity is
//! `()`, and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::CatalogError;
use crate::group::{AbelianType, Group, DEFAULT_ORDER_CAP};
use crate::iso::is_isomorphic;
use crate::perm::Permutation;

const ORDER_LE_16: &str = include_str!("../data/catalog/order_le_16.txt");
const ORDER_32: &str = include_str!("../data/catalog/order_32.txt");
const ORDER_64: &str = include_str!("../data/catalog/order_64.txt");

/// Golden transcription of the order-32 invariant table.
pub const TABLE1_GOLDEN: &str = include_str!("../data/golden/table1.csv");
/// Cells where the printed table and the computed values are known to differ.
pub const TABLE1_FLAGS: &str = include_str!("../data/golden/table1_flags.csv");

/// `S(order, index)` in Small-Groups numbering.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupId {
    pub order: usize,
    pub index: usize,
}

impl GroupId {
    pub const fn new(order: usize, index: usize) -> Self {
        GroupId { order, index }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.order, self.index)
    }
}

impl Serialize for GroupId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for GroupId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix("S(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("expected S(order,index), got {s:?}"))?;
        let (o, i) = inner.split_once(',').ok_or_else(|| format!("expected S(order,index), got {s:?}"))?;
        let order = o.trim().parse().map_err(|_| format!("bad order in {s:?}"))?;
        let index = i.trim().parse().map_err(|_| format!("bad index in {s:?}"))?;
        Ok(GroupId { order, index })
    }
}

pub struct CatalogEntry {
    pub id: GroupId,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub group: Group,
    fingerprint: OnceLock<Fingerprint>,
}

impl CatalogEntry {
    pub fn fingerprint(&self) -> &Fingerprint {
        self.fingerprint.get_or_init(|| fingerprint(&self.group))
    }
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id).field("degree", &self.degree).finish()
    }
}

#[derive(Default, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn new(entries: Vec<CatalogEntry>) -> Self {
        Catalog { entries }
    }

    /// Every group of order at most 16 and of order 32.
    pub fn builtin() -> Catalog {
        let mut c = parse_catalog_str(ORDER_LE_16, "builtin:order_le_16", DEFAULT_ORDER_CAP)
            .expect("bundled catalog parses");
        c.extend(Catalog::builtin_order_32());
        c
    }

    pub fn builtin_order_32() -> Catalog {
        parse_catalog_str(ORDER_32, "builtin:order_32", DEFAULT_ORDER_CAP).expect("bundled catalog parses")
    }

    pub fn builtin_order_64() -> Catalog {
        parse_catalog_str(ORDER_64, "builtin:order_64", DEFAULT_ORDER_CAP).expect("bundled catalog parses")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        parse_catalog(path, DEFAULT_ORDER_CAP)
    }

    pub fn extend(&mut self, other: Catalog) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: GroupId) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn retain(&mut self, keep: impl FnMut(&CatalogEntry) -> bool) {
        self.entries.retain(keep);
    }

    /// Fills every fingerprint cache in parallel.
    pub fn precompute_fingerprints(&self) {
        self.entries.par_iter().for_each(|e| {
            e.fingerprint();
        });
    }
}

pub fn parse_catalog(path: impl AsRef<Path>, cap: usize) -> Result<Catalog, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_catalog_str(&text, &path.display().to_string(), cap)
}

#[derive(Default)]
struct RawEntry {
    line: usize,
    id: Option<GroupId>,
    degree: Option<usize>,
    gens: Option<(usize, usize, String)>,
}

pub fn parse_catalog_str(text: &str, origin: &str, cap: usize) -> Result<Catalog, CatalogError> {
    let perr = |line: usize, column: usize, message: String| CatalogError::Parse {
        path: origin.to_string(),
        line,
        column,
        message,
    };
    let mut raws: Vec<RawEntry> = Vec::new();
    let mut current: Option<RawEntry> = None;
    for (ln, raw_line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            if let Some(e) = current.take() {
                raws.push(e);
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        if line == "[group]" {
            if let Some(e) = current.take() {
                raws.push(e);
            }
            current = Some(RawEntry { line: line_no, ..Default::default() });
            continue;
        }
        let indent = raw_line.len() - raw_line.trim_start().len();
        let entry = current
            .as_mut()
            .ok_or_else(|| perr(line_no, indent + 1, "expected [group] header".into()))?;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| perr(line_no, indent + 1, "expected key = value".into()))?;
        let value_col = indent + key.len() + 2 + (value.len() - value.trim_start().len());
        let value = value.trim();
        match key.trim() {
            "id" => {
                let unquoted = value
                    .strip_prefix('"')
                    .and_then(|v| v.strip_suffix('"'))
                    .ok_or_else(|| perr(line_no, value_col, "id must be a quoted string".into()))?;
                let id = unquoted.parse::<GroupId>().map_err(|m| perr(line_no, value_col, m))?;
                entry.id = Some(id);
            }
            "degree" => {
                let d: usize = value
                    .parse()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| perr(line_no, value_col, format!("bad degree {value:?}")))?;
                entry.degree = Some(d);
            }
            "gens" => entry.gens = Some((line_no, value_col, value.to_string())),
            other => return Err(perr(line_no, indent + 1, format!("unknown key {other:?}"))),
        }
    }
    if let Some(e) = current.take() {
        raws.push(e);
    }

    let mut prepared = Vec::with_capacity(raws.len());
    for raw in raws {
        let id = raw.id.ok_or_else(|| perr(raw.line, 1, "entry has no id".into()))?;
        let degree = raw.degree.ok_or_else(|| perr(raw.line, 1, "entry has no degree".into()))?;
        let mut generators = Vec::new();
        if let Some((gl, gc, gens)) = &raw.gens {
            if !gens.is_empty() {
                let mut col = *gc;
                for part in gens.split('|') {
                    let p = Permutation::parse_cycles(degree, part)
                        .map_err(|e| perr(*gl, col + (part.len() - part.trim_start().len()), e.to_string()))?;
                    generators.push(p);
                    col += part.len() + 1;
                }
            }
        }
        prepared.push((id, degree, generators));
    }

    let entries = prepared
        .into_par_iter()
        .map(|(id, degree, generators)| {
            let group = if generators.is_empty() {
                Group::trivial()
            } else {
                Group::from_generators_with_cap(&generators, cap).map_err(|source| CatalogError::Group { id, source })?
            };
            if group.order() != id.order {
                return Err(CatalogError::OrderMismatch { id, found: group.order() });
            }
            Ok(CatalogEntry { id, degree, generators, group, fingerprint: OnceLock::new() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Catalog { entries })
}

/// Renders a single-entry group file.
pub fn render_entry(id: GroupId, degree: usize, generators: &[Permutation]) -> String {
    let gens = if generators.is_empty() {
        "()".to_string()
    } else {
        generators.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
    };
    format!("[group]\nid = \"{id}\"\ndegree = {degree}\ngens = {gens}\n")
}

/// Isomorphism-invariant description of a subgroup: its abelian type, or a
/// coarse tuple when it is nonabelian.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Descriptor {
    Abelian(AbelianType),
    Nonabelian { order: usize, exponent: u64, class: Option<usize>, histogram: BTreeMap<u64, usize> },
}

impl Descriptor {
    pub fn of(h: &crate::group::Subgroup<'_>) -> Descriptor {
        match h.abelian_invariants() {
            Ok(t) => Descriptor::Abelian(t),
            Err(_) => Descriptor::Nonabelian {
                order: h.order(),
                exponent: h.exponent(),
                class: h.lower_central_series().class,
                histogram: h.element_order_histogram(),
            },
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Descriptor::Abelian(t) => t.order() as usize,
            Descriptor::Nonabelian { order, .. } => *order,
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Abelian(t) => write!(f, "{t}"),
            Descriptor::Nonabelian { order, exponent, class, .. } => {
                let cl = class.map_or("inf".to_string(), |c| c.to_string());
                write!(f, "nonabelian[order={order},exp={exponent},cl={cl}]")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: u64,
    pub class: Option<usize>,
    pub histogram: BTreeMap<u64, usize>,
    pub center: AbelianType,
    pub g2: Descriptor,
    pub g4: Descriptor,
    pub g2_cap_center: Descriptor,
    pub g4_cap_center: Descriptor,
    pub derived: Descriptor,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let whole = g.whole();
    let center = whole.center();
    let g2 = whole.power_subgroup(2);
    let g4 = whole.power_subgroup(4);
    Fingerprint {
        order: g.order(),
        exponent: whole.exponent(),
        class: whole.lower_central_series().class,
        histogram: whole.element_order_histogram(),
        center: center.abelian_invariants().expect("centres are abelian"),
        g2_cap_center: Descriptor::of(&g2.intersection(&center)),
        g4_cap_center: Descriptor::of(&g4.intersection(&center)),
        g2: Descriptor::of(&g2),
        g4: Descriptor::of(&g4),
        derived: Descriptor::of(&g.derived_subgroup()),
    }
}

/// Finds the unique catalog entry isomorphic to `g`.
pub fn identify(g: &Group, catalog: &Catalog) -> Result<GroupId, CatalogError> {
    let same_order: Vec<&CatalogEntry> = catalog.entries.iter().filter(|e| e.id.order == g.order()).collect();
    if same_order.is_empty() {
        return Err(CatalogError::NotInCatalog);
    }
    let fp = fingerprint(g);
    let matches: Vec<GroupId> = same_order
        .into_iter()
        .filter(|e| *e.fingerprint() == fp)
        .filter(|e| is_isomorphic(g, &e.group))
        .map(|e| e.id)
        .collect();
    match matches.len() {
        0 => Err(CatalogError::NotInCatalog),
        1 => Ok(matches[0]),
        _ => Err(CatalogError::Ambiguous(matches)),
    }
}

/// Abelian groups of order 32 are absent from the printed table.
pub const TABLE1_ABELIAN_INDICES: [usize; 7] = [1, 3, 16, 21, 36, 45, 51];

pub fn table1_ids() -> Vec<GroupId> {
    (1..=51).filter(|i| !TABLE1_ABELIAN_INDICES.contains(i)).map(|i| GroupId::new(32, i)).collect()
}

pub const TABLE1_COLUMNS: [&str; 7] = ["exp", "center", "g2", "g4", "g2_cap_z", "g4_cap_z", "cl"];

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Table1Row {
    pub id: GroupId,
    /// Cells in [`TABLE1_COLUMNS`] order.
    pub cells: [String; 7],
}

impl Table1Row {
    pub fn from_fingerprint(id: GroupId, fp: &Fingerprint) -> Self {
        Table1Row {
            id,
            cells: [
                fp.exponent.to_string(),
                fp.center.to_string(),
                fp.g2.to_string(),
                fp.g4.to_string(),
                fp.g2_cap_center.to_string(),
                fp.g4_cap_center.to_string(),
                fp.class.map_or("inf".to_string(), |c| c.to_string()),
            ],
        }
    }

    pub fn cell(&self, column: &str) -> Option<&str> {
        TABLE1_COLUMNS.iter().position(|c| *c == column).map(|i| self.cells[i].as_str())
    }
}

/// One row per nonabelian group of order 32, in id order.
pub fn table1_report(catalog: &Catalog) -> Result<Vec<Table1Row>, CatalogError> {
    let ids = table1_ids();
    let missing: Vec<GroupId> = ids.iter().copied().filter(|&id| catalog.get(id).is_none()).collect();
    if !missing.is_empty() {
        return Err(CatalogError::MissingEntries(missing));
    }
    Ok(ids
        .par_iter()
        .map(|&id| {
            let entry = catalog.get(id).expect("checked above");
            Table1Row::from_fingerprint(id, entry.fingerprint())
        })
        .collect())
}

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = format!("id,{}\n", TABLE1_COLUMNS.join(","));
    for r in rows {
        out.push_str(&format!("\"{}\",{}\n", r.id, r.cells.join(",")));
    }
    out
}

pub fn parse_table1_csv(text: &str, origin: &str) -> Result<Vec<Table1Row>, CatalogError> {
    let gerr = |message: String| CatalogError::Golden { path: origin.to_string(), message };
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| gerr(e.to_string()))?.clone();
    let expected: Vec<&str> = std::iter::once("id").chain(TABLE1_COLUMNS).collect();
    if header.iter().collect::<Vec<_>>() != expected {
        return Err(gerr(format!("header must be {}", expected.join(","))));
    }
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| gerr(e.to_string()))?;
        let id = rec[0].parse::<GroupId>().map_err(gerr)?;
        let mut cells: [String; 7] = Default::default();
        for (i, c) in cells.iter_mut().enumerate() {
            *c = normalize_cell(&rec[i + 1]);
        }
        rows.push(Table1Row { id, cells });
    }
    Ok(rows)
}

/// Canonical spelling so `C2xC2xC2` and `(C2)^3` compare equal.
fn normalize_cell(cell: &str) -> String {
    let cell = cell.trim();
    match AbelianType::parse(cell) {
        Some(t) if cell.starts_with('C') || cell.starts_with('(') || cell == "1" => t.to_string(),
        _ => cell.to_string(),
    }
}

/// A printed-table cell known to disagree with the computed value.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CellFlag {
    pub id: GroupId,
    pub column: String,
    pub printed: String,
    pub computed: String,
    pub note: String,
}

pub fn parse_flags_csv(text: &str, origin: &str) -> Result<Vec<CellFlag>, CatalogError> {
    let gerr = |message: String| CatalogError::Golden { path: origin.to_string(), message };
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut flags = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| gerr(e.to_string()))?;
        if rec.len() != 5 {
            return Err(gerr("flag rows need id,column,printed,computed,note".into()));
        }
        flags.push(CellFlag {
            id: rec[0].parse().map_err(gerr)?,
            column: rec[1].trim().to_string(),
            printed: normalize_cell(&rec[2]),
            computed: normalize_cell(&rec[3]),
            note: rec[4].trim().to_string(),
        });
    }
    Ok(flags)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CellDiff {
    pub id: GroupId,
    pub column: String,
    pub golden: String,
    pub computed: String,
}

#[derive(Clone, Default, Debug, Serialize)]
pub struct Table1Diff {
    pub compared_cells: usize,
    /// Mismatches covered by a flag whose printed and computed values agree with the run.
    pub flagged: Vec<CellDiff>,
    pub unflagged: Vec<CellDiff>,
    /// Flags that no longer correspond to a mismatch.
    pub stale_flags: Vec<CellFlag>,
    pub missing_rows: Vec<GroupId>,
    pub extra_rows: Vec<GroupId>,
}

impl Table1Diff {
    pub fn is_clean(&self) -> bool {
        self.unflagged.is_empty() && self.stale_flags.is_empty() && self.missing_rows.is_empty() && self.extra_rows.is_empty()
    }
}

pub fn diff_table1(computed: &[Table1Row], golden: &[Table1Row], flags: &[CellFlag]) -> Table1Diff {
    let mut diff = Table1Diff::default();
    let mut used = vec![false; flags.len()];
    for g in golden {
        let Some(c) = computed.iter().find(|c| c.id == g.id) else {
            diff.missing_rows.push(g.id);
            continue;
        };
        for (i, column) in TABLE1_COLUMNS.iter().enumerate() {
            diff.compared_cells += 1;
            if c.cells[i] == g.cells[i] {
                continue;
            }
            let cell = CellDiff {
                id: g.id,
                column: column.to_string(),
                golden: g.cells[i].clone(),
                computed: c.cells[i].clone(),
            };
            let flag = flags.iter().position(|f| {
                f.id == g.id && f.column == *column && f.printed == cell.golden && f.computed == cell.computed
            });
            match flag {
                Some(k) => {
                    used[k] = true;
                    diff.flagged.push(cell);
                }
                None => diff.unflagged.push(cell),
            }
        }
    }
    for c in computed {
        if !golden.iter().any(|g| g.id == c.id) {
            diff.extra_rows.push(c.id);
        }
    }
    diff.stale_flags = flags.iter().zip(&used).filter(|(_, u)| !**u).map(|(f, _)| f.clone()).collect();
    diff
}

pub fn parse_group_file(path: impl AsRef<Path>, cap: usize) -> Result<CatalogEntry, CatalogError> {
    let path = path.as_ref();
    let mut catalog = parse_catalog(path, cap)?;
    match catalog.entries.len() {
        1 => Ok(catalog.entries.remove(0)),
        n => Err(CatalogError::Parse {
            path: path.display().to_string(),
            line: 1,
            column: 1,
            message: format!("group file must hold exactly one entry, found {n}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::testing::*;

    #[test]
    fn parses_trivial_and_dihedral_entries() {
        let text = "[group]\nid = \"S(1,1)\"\ndegree = 1\ngens = ()\n\n# comment\n[group]\nid = \"S(8,3)\"\ndegree = 4\ngens = (1,2,3,4) | (1,3)\n";
        let c = parse_catalog_str(text, "t", 512).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.entries()[0].group.order(), 1);
        assert_eq!(c.entries()[1].group.order(), 8);
        let no_gens = parse_catalog_str("[group]\nid = \"S(1,1)\"\ndegree = 1\n", "t", 512).unwrap();
        assert_eq!(no_gens.entries()[0].group.order(), 1);
    }

    #[test]
    fn order_mismatch_and_parse_errors() {
        let text = "[group]\nid = \"S(32,1)\"\ndegree = 16\ngens = (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)\n";
        match parse_catalog_str(text, "t", 512) {
            Err(CatalogError::OrderMismatch { id, found }) => {
                assert_eq!(id, GroupId::new(32, 1));
                assert_eq!(found, 16);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_catalog_str("[group]\nid = \"S(2,1)\"\ndegree = 2\ngens = (1,3)\n", "t", 512) {
            Err(CatalogError::Parse { line, column, .. }) => assert_eq!((line, column), (4, 8)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_catalog_str("id = \"S(2,1)\"\n", "t", 512), Err(CatalogError::Parse { line: 1, .. })));
        assert!(matches!(
            parse_catalog_str("[group]\nid = S(2,1)\ndegree = 2\n", "t", 512),
            Err(CatalogError::Parse { line: 2, column: 6, .. })
        ));
        let s5 = "[group]\nid = \"S(120,34)\"\ndegree = 5\ngens = (1,2,3,4,5) | (1,2)\n";
        assert!(matches!(parse_catalog_str(s5, "t", 64), Err(CatalogError::Group { .. })));
    }

    #[test]
    fn group_id_round_trip() {
        let id: GroupId = "S(32, 17)".parse().unwrap();
        assert_eq!(id, GroupId::new(32, 17));
        assert_eq!(id.to_string(), "S(32,17)");
        assert!("T(1,1)".parse::<GroupId>().is_err());
    }

    #[test]
    fn trivial_fingerprint() {
        let fp = fingerprint(&Group::trivial());
        assert_eq!(fp.order, 1);
        assert_eq!(fp.exponent, 1);
        assert_eq!(fp.class, Some(0));
        assert!(fp.center.is_trivial());
        assert_eq!(fp.g2, Descriptor::Abelian(AbelianType::trivial()));
    }

    #[test]
    fn empty_catalog_misses_all_rows() {
        match table1_report(&Catalog::default()) {
            Err(CatalogError::MissingEntries(ids)) => assert_eq!(ids.len(), 44),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identify_small_groups() {
        let c = Catalog::builtin();
        assert_eq!(identify(&dihedral(4), &c).unwrap(), GroupId::new(8, 3));
        assert_eq!(identify(&quaternion8(), &c).unwrap(), GroupId::new(8, 4));
        assert_eq!(identify(&abelian(&[2, 2]), &c).unwrap(), GroupId::new(4, 2));
        let only32 = Catalog::builtin_order_32();
        assert!(matches!(identify(&cyclic(2), &only32), Err(CatalogError::NotInCatalog)));
    }

    #[test]
    fn golden_parses_with_44_rows() {
        let rows = parse_table1_csv(TABLE1_GOLDEN, "golden").unwrap();
        assert_eq!(rows.len(), 44);
        assert_eq!(rows.iter().map(|r| r.id).collect::<Vec<_>>(), table1_ids());
        assert_eq!(rows[0].cell("center"), Some("(C2)^3"));
    }

    #[test]
    fn injected_fault_is_a_single_unflagged_diff() {
        let golden = parse_table1_csv(TABLE1_GOLDEN, "golden").unwrap();
        let mut altered = golden.clone();
        altered[3].cells[0] = "16".into();
        let d = diff_table1(&golden, &altered, &[]);
        assert_eq!(d.unflagged.len(), 1);
        assert_eq!(d.compared_cells, 44 * 7);
        assert!(!d.is_clean());
        assert!(diff_table1(&golden, &golden, &[]).is_clean());
    }
}
