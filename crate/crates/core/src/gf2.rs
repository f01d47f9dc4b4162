//! Packed GF(2) vectors and incremental row reduction.
//!
//! Everything mod-2 in the crate (cohomology bases, decomposition
//! certificates, the Wu and G-group computations) bottoms out here.

use std::fmt;

const WORD: usize = 64;

/// A fixed-length vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if b {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in BitVec xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the bitwise AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A row of an [`Echelon`] together with an arbitrary linear tag that is
/// combined alongside it (used to carry preimages and coordinates).
#[derive(Clone, Debug)]
struct Row<T> {
    pivot: usize,
    bits: BitVec,
    tag: T,
}

/// Tags combined under row operations. `()` means "no bookkeeping".
pub trait Tag: Clone {
    fn xor_assign(&mut self, other: &Self);
}

impl Tag for () {
    fn xor_assign(&mut self, _: &Self) {}
}

impl Tag for BitVec {
    fn xor_assign(&mut self, other: &Self) {
        BitVec::xor_assign(self, other)
    }
}

impl<A: Tag, B: Tag> Tag for (A, B) {
    fn xor_assign(&mut self, other: &Self) {
        self.0.xor_assign(&other.0);
        self.1.xor_assign(&other.1);
    }
}

/// Incrementally built row-echelon form. Each stored row has a distinct
/// pivot (its lowest set bit) and is reduced against every earlier row, so a
/// single ascending pass reduces any vector.
#[derive(Clone, Debug)]
pub struct Echelon<T: Tag = ()> {
    width: usize,
    rows: Vec<Row<T>>,
}

impl<T: Tag> Echelon<T> {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &BitVec> + '_ {
        self.rows.iter().map(|r| &r.bits)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.pivot)
    }

    /// Reduces `v` (and its tag) against the stored rows, in place.
    pub fn reduce(&self, v: &mut BitVec, tag: &mut T) {
        for row in &self.rows {
            if v.get(row.pivot) {
                v.xor_assign(&row.bits);
                tag.xor_assign(&row.tag);
            }
        }
    }

    /// Inserts `v`; returns the residue and whether it was independent.
    pub fn insert(&mut self, mut v: BitVec, mut tag: T) -> (bool, BitVec, T) {
        assert_eq!(v.len(), self.width);
        self.reduce(&mut v, &mut tag);
        match v.first_one() {
            None => (false, v, tag),
            Some(pivot) => {
                // keep earlier rows free of the new pivot
                for row in &mut self.rows {
                    if row.bits.get(pivot) {
                        row.bits.xor_assign(&v);
                        row.tag.xor_assign(&tag);
                    }
                }
                let at = self.rows.partition_point(|r| r.pivot < pivot);
                self.rows.insert(
                    at,
                    Row {
                        pivot,
                        bits: v.clone(),
                        tag: tag.clone(),
                    },
                );
                (true, v, tag)
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool
    where
        T: Default,
    {
        let mut v = v.clone();
        let mut t = T::default();
        self.reduce(&mut v, &mut t);
        v.is_zero()
    }
}

/// Rank of a list of vectors of common width.
pub fn rank(width: usize, vectors: &[BitVec]) -> usize {
    let mut e: Echelon = Echelon::new(width);
    for v in vectors {
        e.insert(v.clone(), ());
    }
    e.rank()
}

/// Basis of the kernel of the linear map whose matrix has the given columns
/// (column `j` is the image of the `j`-th unit vector, of length `rows`).
/// Deterministic: vectors come out ordered by their free column.
pub fn kernel(rows: usize, columns: &[BitVec]) -> Vec<BitVec> {
    let n = columns.len();
    let mut e: Echelon<BitVec> = Echelon::new(rows);
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        assert_eq!(col.len(), rows);
        let (indep, _, tag) = e.insert(col.clone(), BitVec::unit(n, j));
        if !indep {
            out.push(tag);
        }
    }
    out
}

/// Solves `sum_j x_j columns[j] = target`; `None` if inconsistent.
pub fn solve(rows: usize, columns: &[BitVec], target: &BitVec) -> Option<BitVec> {
    let n = columns.len();
    let mut e: Echelon<BitVec> = Echelon::new(rows);
    for (j, col) in columns.iter().enumerate() {
        e.insert(col.clone(), BitVec::unit(n, j));
    }
    let mut v = target.clone();
    let mut tag = BitVec::zeros(n);
    e.reduce(&mut v, &mut tag);
    v.is_zero().then_some(tag)
}
