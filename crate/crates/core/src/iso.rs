//! Isomorphism testing by generator-image backtracking.

use std::collections::BTreeMap;

use crate::bitset::ElementSet;
use crate::group::{AbelianType, Group};

/// Cheap isomorphism invariants compared before any search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsoScreen {
    order: usize,
    exponent: u64,
    class: Option<usize>,
    histogram: BTreeMap<u64, usize>,
    center: AbelianType,
    derived: (usize, BTreeMap<u64, usize>),
    /// Histogram of (element order, centralizer order).
    order_centralizer: BTreeMap<(u64, usize), usize>,
}

impl IsoScreen {
    pub fn of(g: &Group) -> IsoScreen {
        let whole = g.whole();
        let derived = g.derived_subgroup();
        let profile = element_profile(g);
        let mut order_centralizer = BTreeMap::new();
        for &key in &profile {
            *order_centralizer.entry(key).or_insert(0) += 1;
        }
        IsoScreen {
            order: g.order(),
            exponent: whole.exponent(),
            class: whole.lower_central_series().class,
            histogram: whole.element_order_histogram(),
            center: whole.center().abelian_invariants().expect("centres are abelian"),
            derived: (derived.order(), derived.element_order_histogram()),
            order_centralizer,
        }
    }
}

fn element_profile(g: &Group) -> Vec<(u64, usize)> {
    let n = g.order();
    (0..n)
        .map(|x| {
            let cent = (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            (g.element_order(x), cent)
        })
        .collect()
}

pub fn is_isomorphic(a: &Group, b: &Group) -> bool {
    if a.order() != b.order() {
        return false;
    }
    if IsoScreen::of(a) != IsoScreen::of(b) {
        return false;
    }
    find_isomorphism(a, b).is_some()
}

/// Generating set chosen greedily, largest element orders first.
pub fn greedy_generating_set(g: &Group) -> Vec<usize> {
    let mut by_order: Vec<(u64, usize)> = (1..g.order()).map(|x| (g.element_order(x), x)).collect();
    by_order.sort_by(|l, r| r.0.cmp(&l.0).then(l.1.cmp(&r.1)));
    let mut gens = Vec::new();
    let mut current = g.trivial_subgroup();
    for (_, x) in by_order {
        if current.order() == g.order() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = g.subgroup_generated(gens.iter().copied());
        }
    }
    gens
}

/// Returns `phi` with `phi[x]` the image in `b` of element `x` of `a`.
pub fn find_isomorphism(a: &Group, b: &Group) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let gens = greedy_generating_set(a);
    let prof_a = element_profile(a);
    let prof_b = element_profile(b);
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&x| (0..b.order()).filter(|&y| prof_b[y] == prof_a[x]).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut search = Search { a, b, gens: &gens, candidates: &candidates, images: Vec::new() };
    search.extend()
}

struct Search<'a> {
    a: &'a Group,
    b: &'a Group,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    images: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self) -> Option<Vec<usize>> {
        let depth = self.images.len();
        if depth == self.gens.len() {
            return self.partial_map();
        }
        for &y in &self.candidates[depth] {
            self.images.push(y);
            if self.partial_map().is_some() {
                if let Some(phi) = self.extend() {
                    return Some(phi);
                }
            }
            self.images.pop();
        }
        None
    }

    /// Extends the assigned generator images to a map on the subgroup they
    /// generate, returning `None` on any relation or injectivity failure.
    fn partial_map(&self) -> Option<Vec<usize>> {
        let (a, b) = (self.a, self.b);
        let k = self.images.len();
        let mut phi = vec![usize::MAX; a.order()];
        let mut used = ElementSet::empty(b.order());
        phi[0] = 0;
        used.insert(0);
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for j in 0..k {
                let y = a.mul(x, self.gens[j]);
                let img = b.mul(phi[x], self.images[j]);
                if phi[y] == usize::MAX {
                    if !used.insert(img) {
                        return None;
                    }
                    phi[y] = img;
                    queue.push(y);
                } else if phi[y] != img {
                    return None;
                }
            }
        }
        Some(phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::testing::*;

    #[test]
    fn reflexive_and_distinguishing() {
        let d8 = dihedral(4);
        assert!(is_isomorphic(&d8, &d8));
        assert!(!is_isomorphic(&abelian(&[4, 4]), &abelian(&[8, 2])));
        assert!(!is_isomorphic(&d8, &quaternion8()));
        assert!(is_isomorphic(&abelian(&[2, 3]), &cyclic(6)));
    }

    #[test]
    fn found_map_is_a_homomorphism() {
        let d8 = dihedral(4);
        let other = Group::from_generators(&[perm(4, "(1,3)"), perm(4, "(1,4,3,2)")]).unwrap();
        let phi = find_isomorphism(&d8, &other).unwrap();
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(phi[d8.mul(x, y)], other.mul(phi[x], phi[y]));
            }
        }
    }
}
