//! Finite groups as multiplication tables, with subgroup machinery.
//!
//! A [`Group`] is built once from permutation generators and then answers
//! every product by table lookup. Element 0 is always the identity and the
//! remaining elements are numbered in breadth-first order of the Cayley
//! graph, visiting generators in input order, so indices are reproducible.
//!
//! [`Subgroup`] borrows its parent and stores membership as an
//! [`ElementSet`]; everything else in this module is expressed through it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bitset::ElementSet;
use crate::error::GroupError;
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 512;

pub struct Group {
    degree: usize,
    elements: Vec<Permutation>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
}

impl Group {
    pub fn trivial() -> Group {
        Group::from_generators(&[]).expect("trivial group always fits")
    }

    pub fn from_generators(gens: &[Permutation]) -> Result<Group, GroupError> {
        Group::from_generators_with_cap(gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_with_cap(gens: &[Permutation], cap: usize) -> Result<Group, GroupError> {
        let degree = gens.first().map_or(1, Permutation::degree);
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch { expected: degree, found: bad.degree() });
        }
        let k = gens.len();
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // parent[x] = (y, g) with x = y * gens[g]
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut right_gen: Vec<u32> = Vec::new();
        let mut x = 0;
        while x < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let y = elements[x].then(g);
                let yi = match index.get(&y) {
                    Some(&yi) => yi,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::ClosureExceedsCap { cap });
                        }
                        let yi = elements.len();
                        index.insert(y.clone(), yi);
                        elements.push(y);
                        parent.push((x, gi));
                        yi
                    }
                };
                right_gen.push(yi as u32);
            }
            x += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
            for b in 1..n {
                let (pb, gi) = parent[b];
                let ab_parent = mul[a * n + pb] as usize;
                mul[a * n + b] = right_gen[ab_parent * k + gi];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&c| c == 0).expect("every element has an inverse") as u32;
        }
        let gen_indices = gens.iter().map(|g| index[g]).collect();
        Ok(Group { degree, elements, mul, inv, gens: gen_indices })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Element indices of the generators, in input order.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: usize, mut q: u64) -> usize {
        let mut base = x;
        let mut acc = 0;
        while q > 0 {
            if q & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            q >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn index_of(&self, perm: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e == perm)
    }

    /// Exhaustive associativity check; intended for tests and validation.
    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup { group: self, members: ElementSet::full(self.order()), gens: self.gens.clone() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        let mut members = ElementSet::empty(self.order());
        members.insert(0);
        Subgroup { group: self, members, gens: Vec::new() }
    }

    /// Smallest subgroup containing every seed index.
    pub fn subgroup_generated<I>(&self, seed: I) -> Subgroup<'_>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members = ElementSet::empty(self.order());
        members.insert(0);
        let mut list = vec![0usize];
        let mut gens = Vec::new();
        for s in seed {
            if members.contains(s) {
                continue;
            }
            gens.push(s);
            let mut i = 0;
            while i < list.len() {
                let x = list[i];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if members.insert(y) {
                        list.push(y);
                    }
                }
                i += 1;
            }
        }
        Subgroup { group: self, members, gens }
    }

    pub fn is_abelian(&self) -> bool {
        self.whole().is_abelian()
    }

    pub fn exponent(&self) -> u64 {
        self.whole().exponent()
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.whole().lower_central_series().class
    }

    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let g = self.whole();
        g.commutator_with(&g)
    }

    /// Relabels the points of every generator by `relabel`; the result is isomorphic.
    pub fn relabeled(&self, relabel: &Permutation) -> Result<Group, GroupError> {
        let gens: Vec<Permutation> =
            self.gens.iter().map(|&g| self.elements[g].conjugate_points(relabel)).collect();
        if gens.is_empty() {
            return Ok(Group::trivial());
        }
        Group::from_generators_with_cap(&gens, self.order().max(1))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("order", &self.order()).field("degree", &self.degree).finish()
    }
}

/// Invariant-factor decomposition `C_{d1} × … × C_{dr}` with `d1 | d2 | … | dr`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, serde::Serialize)]
pub struct AbelianType(Vec<u64>);

impl AbelianType {
    pub fn trivial() -> Self {
        AbelianType(Vec::new())
    }

    /// Builds a type from arbitrary cyclic factors, normalising to invariant factors.
    pub fn from_cyclic_factors(factors: &[u64]) -> Self {
        let mut prime_parts: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &f in factors {
            let mut rest = f;
            let mut q = 2;
            while rest > 1 {
                if rest % q == 0 {
                    let mut pk = 1;
                    while rest % q == 0 {
                        rest /= q;
                        pk *= q;
                    }
                    prime_parts.entry(q).or_default().push(pk);
                }
                q += 1;
            }
        }
        AbelianType::from_prime_parts(prime_parts)
    }

    fn from_prime_parts(mut prime_parts: BTreeMap<u64, Vec<u64>>) -> Self {
        let rank = prime_parts.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        for parts in prime_parts.values_mut() {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            for (j, &pk) in parts.iter().enumerate() {
                factors[j] *= pk;
            }
        }
        factors.reverse();
        AbelianType(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn exponent(&self) -> u64 {
        self.0.last().copied().unwrap_or(1)
    }

    /// Parses C-notation: `1`, `C8`, `C4xC2`, `(C2)^3`, `C4x(C2)^2`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text == "1" {
            return Some(AbelianType::trivial());
        }
        let mut factors = Vec::new();
        for part in text.split(['x', '×']) {
            let part = part.trim();
            let (base, mult) = match part.strip_prefix('(') {
                Some(inner) => {
                    let (b, e) = inner.split_once(")^")?;
                    (b, e.parse::<usize>().ok()?)
                }
                None => (part, 1),
            };
            let q: u64 = base.trim().strip_prefix('C')?.parse().ok()?;
            if q < 2 {
                return None;
            }
            factors.extend(std::iter::repeat_n(q, mult));
        }
        Some(AbelianType::from_cyclic_factors(&factors))
    }
}

impl fmt::Display for AbelianType {
    /// Descending factors; three or more equal factors collapse to `(Cq)^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut i = self.0.len();
        while i > 0 {
            let q = self.0[i - 1];
            let mut run = 0;
            while i > 0 && self.0[i - 1] == q {
                run += 1;
                i -= 1;
            }
            if run >= 3 {
                parts.push(format!("(C{q})^{run}"));
            } else {
                for _ in 0..run {
                    parts.push(format!("C{q}"));
                }
            }
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// A subgroup of a borrowed parent group.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g Group,
    members: ElementSet,
    gens: Vec<usize>,
}

/// Lower central series `γ1 ⊇ γ2 ⊇ …`, truncated at the first repeated term.
#[derive(Clone)]
pub struct LowerCentralSeries<'g> {
    pub terms: Vec<Subgroup<'g>>,
    /// `None` when the series stabilises at a nontrivial term.
    pub class: Option<usize>,
}

impl<'g> LowerCentralSeries<'g> {
    /// γ_i for `i ≥ 1`; terms past the stored ones repeat the last term.
    pub fn term(&self, i: usize) -> &Subgroup<'g> {
        assert!(i >= 1);
        let last = self.terms.len() - 1;
        &self.terms[(i - 1).min(last)]
    }
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g Group {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// A generating set; greedy, not necessarily minimal.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_members(&self, other: &Subgroup<'_>) -> bool {
        self.members == other.members
    }

    pub fn is_closed(&self) -> bool {
        self.contains(0)
            && self.elements().all(|a| {
                self.contains(self.group.inv(a)) && self.elements().all(|b| self.contains(self.group.mul(a, b)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.group;
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Normal in the parent group, checked on generators.
    pub fn is_normal(&self) -> bool {
        let g = self.group;
        g.gens.iter().all(|&x| self.gens.iter().all(|&h| self.contains(g.conjugate(h, x))))
    }

    pub fn intersection(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let common = self.members.intersection(&other.members);
        self.group.subgroup_generated(common.iter())
    }

    pub fn join(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        self.group.subgroup_generated(self.gens.iter().chain(&other.gens).copied())
    }

    /// Subgroup generated by all `[a, b]` with `a ∈ self`, `b ∈ other`.
    pub fn commutator_with(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let g = self.group;
        let mut seen = ElementSet::empty(g.order());
        let mut seed = Vec::new();
        for a in self.elements() {
            for b in other.elements() {
                let c = g.commutator(a, b);
                if seen.insert(c) {
                    seed.push(c);
                }
            }
        }
        g.subgroup_generated(seed)
    }

    /// Subgroup generated by `{h^q : h ∈ self}`.
    pub fn power_subgroup(&self, q: u64) -> Subgroup<'g> {
        let g = self.group;
        let mut seen = ElementSet::empty(g.order());
        let seed: Vec<usize> = self.elements().map(|h| g.pow(h, q)).filter(|&x| seen.insert(x)).collect();
        g.subgroup_generated(seed)
    }

    pub fn center(&self) -> Subgroup<'g> {
        let g = self.group;
        let central: Vec<usize> = self
            .elements()
            .filter(|&x| self.gens.iter().all(|&h| g.mul(x, h) == g.mul(h, x)))
            .collect();
        g.subgroup_generated(central)
    }

    pub fn exponent(&self) -> u64 {
        self.elements().map(|x| self.group.element_order(x)).fold(1, lcm)
    }

    pub fn element_order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for x in self.elements() {
            *h.entry(self.group.element_order(x)).or_insert(0) += 1;
        }
        h
    }

    pub fn lower_central_series(&self) -> LowerCentralSeries<'g> {
        let mut terms = vec![self.clone()];
        loop {
            let last = terms.last().expect("series is never empty");
            if last.is_trivial() {
                let class = terms.len() - 1;
                return LowerCentralSeries { terms, class: Some(class) };
            }
            let next = last.commutator_with(self);
            if next.same_members(last) {
                return LowerCentralSeries { terms, class: None };
            }
            terms.push(next);
        }
    }

    pub fn abelian_invariants(&self) -> Result<AbelianType, GroupError> {
        if !self.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        let orders: Vec<u64> = self.elements().map(|x| self.group.element_order(x)).collect();
        let mut prime_parts: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for p in prime_divisors(self.order() as u64) {
            // c_k = #{x : x^(p^k) = 1} = p^(s_k), s_k = Σ min(k, a_i)
            let mut s = vec![0u32];
            let mut pk = 1u64;
            loop {
                pk *= p;
                let c = orders.iter().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
                let sk = ilog(c, p);
                let done = sk == *s.last().unwrap();
                s.push(sk);
                if done {
                    break;
                }
            }
            // r_k = number of cyclic p-factors of exponent ≥ k
            let r: Vec<u32> = s.windows(2).map(|w| w[1] - w[0]).collect();
            let parts = prime_parts.entry(p).or_default();
            for k in 1..r.len() {
                let exactly = r[k - 1] - r.get(k).copied().unwrap_or(0);
                for _ in 0..exactly {
                    parts.push(p.pow(k as u32));
                }
            }
        }
        Ok(AbelianType::from_prime_parts(prime_parts))
    }

    /// Rebuilds this subgroup as a standalone group.
    pub fn to_group(&self) -> Group {
        let perms: Vec<Permutation> = self.gens.iter().map(|&g| self.group.element(g).clone()).collect();
        if perms.is_empty() {
            return Group::trivial();
        }
        Group::from_generators_with_cap(&perms, self.order()).expect("subgroup closure has the subgroup's order")
    }
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup").field("order", &self.order()).field("gens", &self.gens).finish()
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// `log_p(x)` when `x` is an exact power of `p`.
pub fn exact_log(x: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    let mut y = x;
    while y > 1 {
        if !y.is_multiple_of(p) {
            return None;
        }
        y /= p;
        k += 1;
    }
    (y == 1).then_some(k)
}

fn ilog(x: u64, p: u64) -> u32 {
    exact_log(x, p).expect("count of p-torsion is a power of p")
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;

    pub fn perm(degree: usize, cycles: &str) -> Permutation {
        Permutation::parse_cycles(degree, cycles).unwrap()
    }

    pub fn dihedral(n: usize) -> Group {
        let rot = (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        let mut refl = String::new();
        for i in 2..=n / 2 + (n % 2) {
            let j = n + 2 - i;
            if i < j {
                refl.push_str(&format!("({i},{j})"));
            }
        }
        if refl.is_empty() {
            refl.push_str("()");
        }
        Group::from_generators(&[perm(n, &format!("({rot})")), perm(n, &refl)]).unwrap()
    }

    pub fn quaternion8() -> Group {
        Group::from_generators(&[perm(8, "(1,2,3,4)(5,6,7,8)"), perm(8, "(1,5,3,7)(2,8,4,6)")]).unwrap()
    }

    pub fn cyclic(n: usize) -> Group {
        let c = (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        Group::from_generators(&[perm(n, &format!("({c})"))]).unwrap()
    }

    pub fn symmetric3() -> Group {
        Group::from_generators(&[perm(3, "(1,2,3)"), perm(3, "(1,2)")]).unwrap()
    }

    /// Direct product of cyclic groups acting on disjoint blocks.
    pub fn abelian(factors: &[usize]) -> Group {
        let degree: usize = factors.iter().sum();
        let mut start = 1;
        let mut gens = Vec::new();
        for &f in factors {
            let c = (start..start + f).map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            gens.push(perm(degree, &format!("({c})")));
            start += f;
        }
        Group::from_generators(&gens).unwrap()
    }
}
