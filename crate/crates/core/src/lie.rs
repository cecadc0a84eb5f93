//! Lie dimension subgroups and the Jennings value of the upper Lie
//! nilpotency index.
//!
//! For a nilpotent group `G` whose derived subgroup has order `pⁿ`, the
//! Lie dimension subgroups are
//!
//! ```text
//! D_(m)(G) = Π { γ_i(G)^(p^j) : (i-1)·p^j ≥ m-1 },
//! ```
//!
//! and with `p^d_(m) = |D_(m) : D_(m+1)|` the upper Lie nilpotency index of
//! the group algebra over a field of characteristic `p` is
//! `2 + (p-1)·Σ_{m≥1} m·d_(m+1)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::LieError;
use crate::group::{exact_log, Group, LowerCentralSeries, Subgroup};

/// True iff `G` is nilpotent and `|G'|` is a power of `p`.
pub fn check_lie_nilpotent(g: &Group, p: u64) -> bool {
    let lcs = g.whole().lower_central_series();
    lcs.class.is_some() && exact_log(lcs.term(2).order() as u64, p).is_some()
}

/// Precomputed power subgroups `γ_i^(p^j)` used by every `D_(m)`.
pub struct DimensionSubgroups<'g> {
    group: &'g Group,
    /// `(i, p^j, γ_i^(p^j))` for `i ≥ 2`.
    factors: Vec<(usize, u64, Subgroup<'g>)>,
}

impl<'g> DimensionSubgroups<'g> {
    pub fn new(g: &'g Group, p: u64) -> Result<Self, LieError> {
        if !check_lie_nilpotent(g, p) {
            return Err(LieError::NotLieNilpotent { p });
        }
        let lcs: LowerCentralSeries<'g> = g.whole().lower_central_series();
        let class = lcs.class.expect("checked nilpotent");
        let exponent = g.exponent();
        let mut factors = Vec::new();
        for i in 2..=class + 1 {
            let gamma = lcs.term(i);
            let mut q = 1u64;
            while q <= exponent {
                factors.push((i, q, gamma.power_subgroup(q)));
                q *= p;
            }
        }
        Ok(DimensionSubgroups { group: g, factors })
    }

    pub fn get(&self, m: usize) -> Subgroup<'g> {
        assert!(m >= 1, "Lie dimension subgroups are indexed from 1");
        if m == 1 {
            return self.group.whole();
        }
        let seed: Vec<usize> = self
            .factors
            .iter()
            .filter(|(i, q, _)| (*i as u64 - 1) * q >= m as u64 - 1)
            .flat_map(|(_, _, h)| h.generators().iter().copied())
            .collect();
        self.group.subgroup_generated(seed)
    }
}

pub fn lie_dimension_subgroup(g: &Group, p: u64, m: usize) -> Result<Subgroup<'_>, LieError> {
    Ok(DimensionSubgroups::new(g, p)?.get(m))
}

#[derive(Clone)]
pub struct JenningsData<'g> {
    pub p: u64,
    /// `|G'| = pⁿ`.
    pub n: u32,
    /// `D_(2) = G', D_(3), …`, ending with the trivial subgroup.
    pub dim_subgroups: Vec<Subgroup<'g>>,
    /// Nonzero `d_(m)`, keyed by `m ≥ 2`.
    pub d: BTreeMap<usize, u32>,
    /// Upper Lie nilpotency index; 1 when `G' = 1` (see [`Self::commutative`]).
    pub t_upper: u64,
    /// `G' = 1`, so the group algebra is commutative. The Jennings formula
    /// would give 2 here; this crate reports 1 and sets the flag instead.
    pub commutative: bool,
}

impl JenningsData<'_> {
    /// `2 + (p-1)·Σ m·d_(m+1)`, without the commutative convention.
    pub fn formula_value(&self) -> u64 {
        jennings_formula(self.p, &self.d)
    }

    pub fn d_seq(&self) -> DSeqView<'_> {
        DSeqView(&self.d)
    }
}

pub fn jennings_formula(p: u64, d: &BTreeMap<usize, u32>) -> u64 {
    2 + (p - 1) * d.iter().map(|(&m, &dm)| (m as u64 - 1) * dm as u64).sum::<u64>()
}

pub fn jennings_data(g: &Group, p: u64) -> Result<JenningsData<'_>, LieError> {
    let dims = DimensionSubgroups::new(g, p)?;
    let mut dim_subgroups = vec![dims.get(2)];
    let mut d = BTreeMap::new();
    let mut m = 2;
    while !dim_subgroups.last().expect("nonempty").is_trivial() {
        let next = dims.get(m + 1);
        let cur = dim_subgroups.last().expect("nonempty");
        let index = cur.order() / next.order();
        let dm = exact_log(index as u64, p).ok_or(LieError::NonPPowerIndex { p, m, index })?;
        if dm > 0 {
            d.insert(m, dm);
        }
        dim_subgroups.push(next);
        m += 1;
    }
    let n = exact_log(dim_subgroups[0].order() as u64, p).expect("checked p-power");
    let commutative = n == 0;
    let t_upper = if commutative { 1 } else { jennings_formula(p, &d) };
    Ok(JenningsData { p, n, dim_subgroups, d, t_upper, commutative })
}

/// Renders a sparse d-sequence as `{2:1, 3:2}`.
pub struct DSeqView<'a>(pub &'a BTreeMap<usize, u32>);

impl fmt::Display for DSeqView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(m, d)| format!("{m}:{d}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::testing::*;

    #[test]
    fn lie_nilpotency_guard() {
        assert!(check_lie_nilpotent(&abelian(&[4, 2]), 2));
        assert!(check_lie_nilpotent(&abelian(&[3]), 5));
        assert!(check_lie_nilpotent(&dihedral(4), 2));
        assert!(!check_lie_nilpotent(&dihedral(4), 3));
        assert!(!check_lie_nilpotent(&symmetric3(), 2));
        assert!(!check_lie_nilpotent(&symmetric3(), 3));
        assert_eq!(
            lie_dimension_subgroup(&symmetric3(), 2, 2).unwrap_err(),
            LieError::NotLieNilpotent { p: 2 }
        );
    }

    #[test]
    fn dimension_subgroups_of_d8() {
        let d8 = dihedral(4);
        assert_eq!(lie_dimension_subgroup(&d8, 2, 1).unwrap().order(), 8);
        let d2 = lie_dimension_subgroup(&d8, 2, 2).unwrap();
        assert!(d2.same_members(&d8.derived_subgroup()));
        assert!(lie_dimension_subgroup(&d8, 2, 3).unwrap().is_trivial());
        assert!(lie_dimension_subgroup(&d8, 2, 40).unwrap().is_trivial());
    }

    #[test]
    fn jennings_examples() {
        let d8 = dihedral(4);
        let j = jennings_data(&d8, 2).unwrap();
        assert_eq!(j.d, BTreeMap::from([(2, 1)]));
        assert_eq!(j.t_upper, 3);
        assert_eq!(j.d_seq().to_string(), "{2:1}");

        let d16 = dihedral(8);
        let j = jennings_data(&d16, 2).unwrap();
        assert_eq!(j.n, 2);
        assert_eq!(j.t_upper, 5);

        let ab = abelian(&[4, 2]);
        let j = jennings_data(&ab, 2).unwrap();
        assert!(j.commutative);
        assert_eq!(j.t_upper, 1);
        assert_eq!(j.formula_value(), 2);
        assert!(j.d.is_empty());
    }

    #[test]
    fn chain_is_descending_and_normal() {
        let d32 = dihedral(16);
        let j = jennings_data(&d32, 2).unwrap();
        for w in j.dim_subgroups.windows(2) {
            assert!(w[1].is_subgroup_of(&w[0]));
            assert!(w[1].is_normal());
        }
        assert_eq!(j.d.values().sum::<u32>(), j.n);
        // cyclic G' of order 8
        assert_eq!(j.t_upper, 9);
    }
}
