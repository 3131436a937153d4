//! Bit-packed vectors over GF(2): symplectic `(a|b)` vectors and dense
//! GF(2) matrices with Gaussian elimination, rank and null spaces.

use std::fmt;

use crate::error::Error;
use crate::field::{Gf4, Gf4Vector};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A vector in F_2^{2n}, stored as separate `a` and `b` bit blocks so the
/// symplectic product is two AND-XOR-popcount passes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    n: usize,
    a: Vec<u64>,
    b: Vec<u64>,
}

impl SymplecticVector {
    pub fn zero(n: usize) -> SymplecticVector {
        let w = words_for(n);
        SymplecticVector {
            n,
            a: vec![0; w],
            b: vec![0; w],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn a_bit(&self, i: usize) -> u8 {
        ((self.a[i / WORD_BITS] >> (i % WORD_BITS)) & 1) as u8
    }

    pub fn b_bit(&self, i: usize) -> u8 {
        ((self.b[i / WORD_BITS] >> (i % WORD_BITS)) & 1) as u8
    }

    pub fn set_pair(&mut self, i: usize, a: u8, b: u8) {
        assert!(i < self.n);
        let (w, s) = (i / WORD_BITS, i % WORD_BITS);
        self.a[w] = (self.a[w] & !(1 << s)) | (u64::from(a & 1) << s);
        self.b[w] = (self.b[w] & !(1 << s)) | (u64::from(b & 1) << s);
    }

    pub fn xor_assign(&mut self, rhs: &SymplecticVector) {
        assert_eq!(self.n, rhs.n);
        for (x, y) in self.a.iter_mut().zip(&rhs.a) {
            *x ^= y;
        }
        for (x, y) in self.b.iter_mut().zip(&rhs.b) {
            *x ^= y;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&w| w == 0) && self.b.iter().all(|&w| w == 0)
    }

    /// Number of positions i with (a_i, b_i) != (0, 0).
    pub fn symplectic_weight(&self) -> usize {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(&x, &y)| (x | y).count_ones() as usize)
            .sum()
    }

    /// phi: reinterpret the bit pairs as GF(4) symbols.
    pub fn to_gf4(&self) -> Gf4Vector {
        Gf4Vector::new(
            (0..self.n)
                .map(|i| Gf4::from_bits(self.a_bit(i), self.b_bit(i)))
                .collect(),
        )
    }

    /// phi^{-1}: reinterpret GF(4) symbols as bit pairs.
    pub fn from_gf4(v: &Gf4Vector) -> SymplecticVector {
        let mut out = SymplecticVector::zero(v.len());
        for (i, &s) in v.symbols().iter().enumerate() {
            out.set_pair(i, s.a_bit(), s.b_bit());
        }
        out
    }

    /// Parse the `a-bits "|" b-bits` text form, e.g. `10|01`.
    pub fn parse(s: &str) -> Result<SymplecticVector, Error> {
        let (sa, sb) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in '{s}'")))?;
        if sa.len() != sb.len() {
            return Err(Error::Parse(format!("halves differ in length in '{s}'")));
        }
        let mut out = SymplecticVector::zero(sa.len());
        for (i, (ca, cb)) in sa.chars().zip(sb.chars()).enumerate() {
            let bit = |c: char| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(Error::Parse(format!("invalid bit '{other}'"))),
            };
            out.set_pair(i, bit(ca)?, bit(cb)?);
        }
        Ok(out)
    }

    pub(crate) fn a_words(&self) -> &[u64] {
        &self.a
    }

    pub(crate) fn b_words(&self) -> &[u64] {
        &self.b
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.a_bit(i))?;
        }
        write!(f, "|")?;
        for i in 0..self.n {
            write!(f, "{}", self.b_bit(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Symplectic inner product a.(b')^T + b.(a')^T over GF(2).
pub fn symplectic_inner(u: &SymplecticVector, v: &SymplecticVector) -> Result<u8, Error> {
    if u.n != v.n {
        return Err(Error::LengthMismatch(u.n, v.n));
    }
    let mut acc = 0u32;
    for (&x, &y) in u.a.iter().zip(&v.b) {
        acc ^= (x & y).count_ones();
    }
    for (&x, &y) in u.b.iter().zip(&v.a) {
        acc ^= (x & y).count_ones();
    }
    Ok((acc & 1) as u8)
}

/// Dense GF(2) matrix, bit-packed row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Gf2Matrix {
        let stride = words_for(cols).max(1);
        Gf2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        ((self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1) as u8
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        let idx = r * self.stride + c / WORD_BITS;
        let s = c % WORD_BITS;
        self.data[idx] = (self.data[idx] & !(1 << s)) | (u64::from(v & 1) << s);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.stride, src * self.stride);
        for i in 0..self.stride {
            let v = self.data[s + i];
            self.data[d + i] ^= v;
        }
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for i in 0..self.stride {
            self.data.swap(r1 * self.stride + i, r2 * self.stride + i);
        }
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// of the leading rank(self) rows. Pivot choice is deterministic:
    /// columns scanned left to right, first available row wins.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) == 1) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) == 1 {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space {x : Mx = 0}, one vector per row.
    pub fn kernel(&self) -> Gf2Matrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Gf2Matrix::zero(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                out.set(k, p, m.get(i, f));
            }
        }
        out
    }

    /// Multiply by a column vector given as bit-packed words.
    pub fn mul_vec(&self, x: &[u64]) -> Vec<u8> {
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u32;
                for (w, &xv) in self.row(r).iter().zip(x) {
                    acc ^= (w & xv).count_ones();
                }
                (acc & 1) as u8
            })
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Pack symplectic vectors as matrix rows of width 2n: a bits in columns
/// 0..n, b bits in columns n..2n.
pub fn stack_symplectic(n: usize, vectors: &[SymplecticVector]) -> Gf2Matrix {
    let mut m = Gf2Matrix::zero(vectors.len(), 2 * n);
    for (r, v) in vectors.iter().enumerate() {
        assert_eq!(v.len(), n);
        for i in 0..n {
            m.set(r, i, v.a_bit(i));
            m.set(r, n + i, v.b_bit(i));
        }
    }
    m
}

/// Inverse of [`stack_symplectic`]: unpack each matrix row into an (a|b) vector.
pub fn unstack_symplectic(m: &Gf2Matrix) -> Vec<SymplecticVector> {
    assert!(m.cols() % 2 == 0);
    let n = m.cols() / 2;
    (0..m.rows())
        .map(|r| {
            let mut v = SymplecticVector::zero(n);
            for i in 0..n {
                v.set_pair(i, m.get(r, i), m.get(r, n + i));
            }
            v
        })
        .collect()
}
