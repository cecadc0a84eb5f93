//! Direct computations in the modular group algebra F_pG.
//!
//! These are brute-force oracles: Lie powers `KG^[n]` (spanned by left-normed
//! brackets and closed to an ideal), upper Lie powers
//! `KG^(1) = KG, KG^(n+1) = [KG^(n), KG]·KG`, the indices `t_L` and `t^L`, and
//! the identity `D_(m) = G ∩ (1 + KG^(m))`.

use crate::bitset::ElementSet;
use crate::error::AlgebraError;
use crate::group::{is_prime, Group};
use crate::lie::DimensionSubgroups;
use crate::linalg::{BitRow, ByteRow, FieldRow, Subspace};

pub const DEFAULT_ALGEBRA_CAP: usize = 128;

/// Coefficients indexed by group element index, reduced mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub coeffs: Vec<u8>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c))
    }
}

pub struct GroupAlgebra<'g> {
    group: &'g Group,
    p: u8,
}

impl<'g> GroupAlgebra<'g> {
    pub fn new(group: &'g Group, p: u64) -> Result<Self, AlgebraError> {
        Self::with_cap(group, p, DEFAULT_ALGEBRA_CAP)
    }

    pub fn with_cap(group: &'g Group, p: u64, cap: usize) -> Result<Self, AlgebraError> {
        if group.order() > cap {
            return Err(AlgebraError::CapExceeded { order: group.order(), cap });
        }
        if !is_prime(p) || p > u8::MAX as u64 {
            return Err(AlgebraError::UnsupportedPrime(p));
        }
        Ok(GroupAlgebra { group, p: p as u8 })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { coeffs: vec![0; self.dim()] }
    }

    pub fn basis_element(&self, x: usize) -> AlgebraElement {
        let mut e = self.zero();
        e.coeffs[x] = 1;
        e
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    pub fn element(&self, coeffs: &[i64]) -> AlgebraElement {
        assert_eq!(coeffs.len(), self.dim());
        let p = self.p as i64;
        AlgebraElement { coeffs: coeffs.iter().map(|c| c.rem_euclid(p) as u8).collect() }
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let p = self.p as u16;
        AlgebraElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| ((x as u16 + y as u16) % p) as u8).collect(),
        }
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let p = self.p as u16;
        AlgebraElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| ((x as u16 + p - y as u16) % p) as u8)
                .collect(),
        }
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let p = self.p as u32;
        let mut acc = vec![0u32; self.dim()];
        for (x, ax) in a.support() {
            for (y, by) in b.support() {
                let z = self.group.mul(x, y);
                acc[z] = (acc[z] + ax as u32 * by as u32) % p;
            }
        }
        AlgebraElement { coeffs: acc.into_iter().map(|c| c as u8).collect() }
    }

    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.sub(&self.multiply(a, b), &self.multiply(b, a))
    }

    /// `a·g`.
    pub fn mul_right(&self, a: &[u8], g: usize) -> Vec<u8> {
        let mut out = vec![0u8; a.len()];
        for (x, &c) in a.iter().enumerate() {
            if c != 0 {
                out[self.group.mul(x, g)] = c;
            }
        }
        out
    }

    /// `g·a`.
    pub fn mul_left(&self, g: usize, a: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; a.len()];
        for (x, &c) in a.iter().enumerate() {
            if c != 0 {
                out[self.group.mul(g, x)] = c;
            }
        }
        out
    }

    /// `[a, g] = a·g - g·a`.
    pub fn bracket_group(&self, a: &[u8], g: usize) -> Vec<u8> {
        let p = self.p as u16;
        let right = self.mul_right(a, g);
        let left = self.mul_left(g, a);
        right.iter().zip(&left).map(|(&x, &y)| ((x as u16 + p - y as u16) % p) as u8).collect()
    }

    fn sided_closure<R: FieldRow>(&self, seed: Vec<Vec<u8>>, two_sided: bool) -> Subspace<R> {
        let mut space = Subspace::zero(self.p, self.dim());
        let mut queue = Vec::new();
        for v in seed {
            if space.insert(&v) {
                queue.push(v);
            }
        }
        let gens = self.group.generators();
        while let Some(v) = queue.pop() {
            for &g in gens {
                let r = self.mul_right(&v, g);
                if space.insert(&r) {
                    queue.push(r);
                }
                if two_sided {
                    let l = self.mul_left(g, &v);
                    if space.insert(&l) {
                        queue.push(l);
                    }
                }
            }
        }
        space
    }

    fn brackets_with_group<R: FieldRow>(&self, space: &Subspace<R>) -> Vec<Vec<u8>> {
        let mut out = Vec::with_capacity(space.dim() * self.dim());
        for q in space.basis() {
            for g in 1..self.dim() {
                let b = self.bracket_group(&q, g);
                if b.iter().any(|&c| c != 0) {
                    out.push(b);
                }
            }
        }
        out
    }

    fn span<R: FieldRow>(&self, vectors: Vec<Vec<u8>>) -> Subspace<R> {
        let mut s = Subspace::zero(self.p, self.dim());
        for v in vectors {
            s.insert(&v);
        }
        s
    }
}

/// A subspace of F_pG in canonical echelon form.
#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraSubspace {
    Binary(Subspace<BitRow>),
    Odd(Subspace<ByteRow>),
}

impl AlgebraSubspace {
    pub fn dim(&self) -> usize {
        match self {
            AlgebraSubspace::Binary(s) => s.dim(),
            AlgebraSubspace::Odd(s) => s.dim(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, a: &AlgebraElement) -> bool {
        match self {
            AlgebraSubspace::Binary(s) => s.contains(&a.coeffs),
            AlgebraSubspace::Odd(s) => s.contains(&a.coeffs),
        }
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        let rows = match self {
            AlgebraSubspace::Binary(s) => s.basis(),
            AlgebraSubspace::Odd(s) => s.basis(),
        };
        rows.into_iter().map(|coeffs| AlgebraElement { coeffs }).collect()
    }

    pub fn is_subspace_of(&self, other: &AlgebraSubspace) -> bool {
        match (self, other) {
            (AlgebraSubspace::Binary(a), AlgebraSubspace::Binary(b)) => a.is_subspace_of(b),
            (AlgebraSubspace::Odd(a), AlgebraSubspace::Odd(b)) => a.is_subspace_of(b),
            _ => panic!("subspaces over different fields"),
        }
    }
}

trait Wrap: FieldRow {
    fn wrap(s: Subspace<Self>) -> AlgebraSubspace;
}

impl Wrap for BitRow {
    fn wrap(s: Subspace<Self>) -> AlgebraSubspace {
        AlgebraSubspace::Binary(s)
    }
}

impl Wrap for ByteRow {
    fn wrap(s: Subspace<Self>) -> AlgebraSubspace {
        AlgebraSubspace::Odd(s)
    }
}

#[derive(Clone, Debug)]
pub struct LowerLiePowers {
    /// `dim KG^[n]` for `n = 1, 2, …` up to the vanishing level or the bound.
    pub dims: Vec<usize>,
    /// `dim S_n`, the bracket span before ideal closure.
    pub span_dims: Vec<usize>,
    pub ideals: Vec<AlgebraSubspace>,
    /// Least `n` with `KG^[n] = 0`.
    pub t_lower: Option<usize>,
    /// `G` is abelian, so the min-definition gives 2.
    pub commutative: bool,
}

#[derive(Clone, Debug)]
pub struct UpperLiePowers {
    /// `KG^(1), KG^(2), …`, ending with the zero subspace when reached.
    pub terms: Vec<AlgebraSubspace>,
    pub dims: Vec<usize>,
    /// Least `n` with `KG^(n) = 0`.
    pub t_upper: Option<usize>,
    pub commutative: bool,
}

impl UpperLiePowers {
    /// `KG^(m)` for `m ≥ 1`; `None` past the computed range unless it vanished.
    pub fn term(&self, m: usize) -> Option<&AlgebraSubspace> {
        assert!(m >= 1);
        match self.terms.get(m - 1) {
            Some(t) => Some(t),
            None if self.t_upper.is_some() => self.terms.last(),
            None => None,
        }
    }

    /// `{g ∈ G : g - 1 ∈ KG^(m)}`.
    pub fn dimension_subgroup(&self, alg: &GroupAlgebra<'_>, m: usize) -> Option<ElementSet> {
        let term = self.term(m)?;
        let mut out = ElementSet::empty(alg.dim());
        for g in 0..alg.dim() {
            let mut v = alg.basis_element(g);
            v.coeffs[0] = (v.coeffs[0] + alg.p - 1) % alg.p;
            if term.contains(&v) {
                out.insert(g);
            }
        }
        Some(out)
    }
}

fn default_bound(g: &Group) -> usize {
    g.order() + 1
}

pub fn lower_lie_powers(g: &Group, p: u64, m_max: Option<usize>) -> Result<LowerLiePowers, AlgebraError> {
    let alg = GroupAlgebra::new(g, p)?;
    Ok(lower_with(&alg, m_max))
}

pub fn lower_with(alg: &GroupAlgebra<'_>, m_max: Option<usize>) -> LowerLiePowers {
    let bound = m_max.unwrap_or_else(|| default_bound(alg.group));
    if alg.p == 2 {
        lower_generic::<BitRow>(alg, bound)
    } else {
        lower_generic::<ByteRow>(alg, bound)
    }
}

fn lower_generic<R: Wrap>(alg: &GroupAlgebra<'_>, m_max: usize) -> LowerLiePowers {
    let mut span: Subspace<R> = Subspace::full(alg.p, alg.dim());
    let mut out = LowerLiePowers {
        dims: vec![alg.dim()],
        span_dims: vec![alg.dim()],
        ideals: vec![R::wrap(span.clone())],
        t_lower: None,
        commutative: alg.group.is_abelian(),
    };
    for n in 2..=m_max {
        let next: Subspace<R> = alg.span(alg.brackets_with_group(&span));
        let ideal: Subspace<R> = alg.sided_closure(next.basis(), true);
        out.dims.push(ideal.dim());
        out.span_dims.push(next.dim());
        out.ideals.push(R::wrap(ideal));
        if next.is_zero() {
            out.t_lower = Some(n);
            break;
        }
        if next.dim() == span.dim() {
            break;
        }
        span = next;
    }
    out
}

pub fn upper_lie_powers(g: &Group, p: u64, m_max: Option<usize>) -> Result<UpperLiePowers, AlgebraError> {
    let alg = GroupAlgebra::new(g, p)?;
    upper_with(&alg, m_max)
}

pub fn upper_with(alg: &GroupAlgebra<'_>, m_max: Option<usize>) -> Result<UpperLiePowers, AlgebraError> {
    let bound = m_max.unwrap_or_else(|| default_bound(alg.group));
    if alg.p == 2 {
        upper_generic::<BitRow>(alg, bound)
    } else {
        upper_generic::<ByteRow>(alg, bound)
    }
}

fn upper_generic<R: Wrap>(alg: &GroupAlgebra<'_>, m_max: usize) -> Result<UpperLiePowers, AlgebraError> {
    let mut cur: Subspace<R> = Subspace::full(alg.p, alg.dim());
    let mut out = UpperLiePowers {
        terms: vec![R::wrap(cur.clone())],
        dims: vec![alg.dim()],
        t_upper: None,
        commutative: alg.group.is_abelian(),
    };
    for n in 2..=m_max {
        let next: Subspace<R> = alg.sided_closure(alg.brackets_with_group(&cur), false);
        if !next.is_subspace_of(&cur) {
            return Err(AlgebraError::NoConvergence(n));
        }
        out.dims.push(next.dim());
        out.terms.push(R::wrap(next.clone()));
        if next.is_zero() {
            out.t_upper = Some(n);
            break;
        }
        if next.dim() == cur.dim() {
            break;
        }
        cur = next;
    }
    Ok(out)
}

/// `{g : g - 1 ∈ KG^(m)}` equals the Lie dimension subgroup `D_(m)`.
pub fn dimension_subgroup_check(g: &Group, p: u64, m: usize) -> Result<bool, AlgebraError> {
    let alg = GroupAlgebra::new(g, p)?;
    let upper = upper_with(&alg, Some(m.max(2)))?;
    let dims = DimensionSubgroups::new(g, p)?;
    Ok(compare_dimension_subgroup(&alg, &upper, &dims, m))
}

/// Runs the check for `m = 1 ..= t^L`, returning the first failing `m`.
pub fn dimension_subgroup_check_all(g: &Group, p: u64) -> Result<Option<usize>, AlgebraError> {
    let alg = GroupAlgebra::new(g, p)?;
    let upper = upper_with(&alg, None)?;
    Ok(identity_checks(&alg, &upper)?.into_iter().find(|(_, ok)| !ok).map(|(m, _)| m))
}

/// `(m, D_(m) = G ∩ (1 + KG^(m)))` for every computed level `m`.
pub fn identity_checks(alg: &GroupAlgebra<'_>, upper: &UpperLiePowers) -> Result<Vec<(usize, bool)>, AlgebraError> {
    let dims = DimensionSubgroups::new(alg.group, alg.p as u64)?;
    let last = upper.t_upper.unwrap_or(upper.terms.len());
    Ok((1..=last).map(|m| (m, compare_dimension_subgroup(alg, upper, &dims, m))).collect())
}

fn compare_dimension_subgroup(
    alg: &GroupAlgebra<'_>,
    upper: &UpperLiePowers,
    dims: &DimensionSubgroups<'_>,
    m: usize,
) -> bool {
    match upper.dimension_subgroup(alg, m) {
        Some(lhs) => &lhs == dims.get(m).members(),
        None => false,
    }
}
