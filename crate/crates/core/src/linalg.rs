//! Row-reduced subspaces of F_p^n.

use std::fmt::Debug;

/// A coefficient row over F_p. Coefficients are always reduced mod p.
pub trait FieldRow: Clone + PartialEq + Debug + Send + Sync {
    fn from_coeffs(coeffs: &[u8]) -> Self;
    fn to_coeffs(&self, len: usize) -> Vec<u8>;
    fn get(&self, i: usize) -> u8;
    fn leading(&self) -> Option<usize>;
    /// `self += c·other`.
    fn add_scaled(&mut self, c: u8, other: &Self, p: u8);
    fn scale(&mut self, c: u8, p: u8);
}

/// Packed row over F_2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitRow(Vec<u64>);

impl FieldRow for BitRow {
    fn from_coeffs(coeffs: &[u8]) -> Self {
        let mut words = vec![0u64; coeffs.len().div_ceil(64)];
        for (i, &c) in coeffs.iter().enumerate() {
            if c & 1 == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        BitRow(words)
    }

    fn to_coeffs(&self, len: usize) -> Vec<u8> {
        (0..len).map(|i| self.get(i)).collect()
    }

    fn get(&self, i: usize) -> u8 {
        ((self.0[i / 64] >> (i % 64)) & 1) as u8
    }

    fn leading(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn add_scaled(&mut self, c: u8, other: &Self, _p: u8) {
        if c & 1 == 1 {
            for (a, b) in self.0.iter_mut().zip(&other.0) {
                *a ^= b;
            }
        }
    }

    fn scale(&mut self, c: u8, _p: u8) {
        if c & 1 == 0 {
            self.0.iter_mut().for_each(|w| *w = 0);
        }
    }
}

/// Byte row over F_p for odd p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ByteRow(Vec<u8>);

impl FieldRow for ByteRow {
    fn from_coeffs(coeffs: &[u8]) -> Self {
        ByteRow(coeffs.to_vec())
    }

    fn to_coeffs(&self, _len: usize) -> Vec<u8> {
        self.0.clone()
    }

    fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    fn leading(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0)
    }

    fn add_scaled(&mut self, c: u8, other: &Self, p: u8) {
        if c == 0 {
            return;
        }
        let (c, p) = (c as u16, p as u16);
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a = ((*a as u16 + c * b as u16) % p) as u8;
        }
    }

    fn scale(&mut self, c: u8, p: u8) {
        for a in &mut self.0 {
            *a = ((*a as u16 * c as u16) % p as u16) as u8;
        }
    }
}

pub fn inverse_mod(a: u8, p: u8) -> u8 {
    debug_assert!(!a.is_multiple_of(p));
    (1..p).find(|&x| (a as u16 * x as u16) % p as u16 == 1).expect("p is prime")
}

/// Subspace held in reduced row echelon form, rows sorted by pivot.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<R: FieldRow> {
    p: u8,
    len: usize,
    rows: Vec<R>,
    pivots: Vec<usize>,
}

impl<R: FieldRow> Subspace<R> {
    pub fn zero(p: u8, len: usize) -> Self {
        Subspace { p, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(p: u8, len: usize) -> Self {
        let mut s = Self::zero(p, len);
        for i in 0..len {
            let mut e = vec![0u8; len];
            e[i] = 1;
            s.insert(&e);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[R] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|r| r.to_coeffs(self.len)).collect()
    }

    fn reduce(&self, mut v: R) -> R {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = v.get(c);
            if a != 0 {
                v.add_scaled(self.p - a, row, self.p);
            }
        }
        v
    }

    pub fn contains(&self, coeffs: &[u8]) -> bool {
        self.reduce(R::from_coeffs(coeffs)).leading().is_none()
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, coeffs: &[u8]) -> bool {
        debug_assert_eq!(coeffs.len(), self.len);
        self.insert_row(R::from_coeffs(coeffs))
    }

    pub fn insert_row(&mut self, row: R) -> bool {
        let mut v = self.reduce(row);
        let Some(c) = v.leading() else { return false };
        v.scale(inverse_mod(v.get(c), self.p), self.p);
        for row in &mut self.rows {
            let a = row.get(c);
            if a != 0 {
                row.add_scaled(self.p - a, &v, self.p);
            }
        }
        let at = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.reduce(r.clone()).leading().is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_rows_reduce() {
        let mut s: Subspace<BitRow> = Subspace::zero(2, 70);
        let mut a = vec![0u8; 70];
        a[3] = 1;
        a[69] = 1;
        let mut b = vec![0u8; 70];
        b[69] = 1;
        assert!(s.insert(&a));
        assert!(s.insert(&b));
        let mut c = vec![0u8; 70];
        c[3] = 1;
        assert!(s.contains(&c));
        assert!(!s.insert(&c));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis()[0], c);
    }

    #[test]
    fn byte_rows_are_canonical() {
        let mut s: Subspace<ByteRow> = Subspace::zero(5, 3);
        s.insert(&[2, 4, 1]);
        s.insert(&[0, 3, 3]);
        let mut t: Subspace<ByteRow> = Subspace::zero(5, 3);
        t.insert(&[2, 1, 3]);
        t.insert(&[1, 2, 3]);
        assert_eq!(s.basis(), t.basis());
        assert!(s.is_subspace_of(&t) && t.is_subspace_of(&s));
        assert!(!s.contains(&[0, 0, 1]));
        assert!(Subspace::<ByteRow>::full(5, 3).contains(&[0, 0, 1]));
    }

    #[test]
    fn inverses() {
        for p in [2u8, 3, 5, 7, 11, 13] {
            for a in 1..p {
                assert_eq!((a as u16 * inverse_mod(a, p) as u16) % p as u16, 1);
            }
        }
    }
}
