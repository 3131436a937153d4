//! GF(4) symbols and symbol vectors.
//!
//! A symbol is stored as the bit pair `(a, b)` with `0 = (0,0)`,
//! `w = (1,0)`, `W = (0,1)` and `1 = (1,1)`, so that the isometry
//! between `F_2^{2n}` and `F_4^n` is a plain reinterpretation:
//! `phi((a|b)) = w*a + W*b` holds symbol-wise with zero conversion cost.

use std::fmt;

use crate::error::Error;

/// An element of GF(4). Bit 0 holds `a`, bit 1 holds `b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0b00);
    /// `w` (a primitive element, w^3 = 1)
    pub const OMEGA: Gf4 = Gf4(0b01);
    /// `W = 1 + w = w^2`
    pub const OMEGA_SQ: Gf4 = Gf4(0b10);
    pub const ONE: Gf4 = Gf4(0b11);

    pub fn from_bits(a: u8, b: u8) -> Gf4 {
        Gf4((a & 1) | ((b & 1) << 1))
    }

    pub fn a_bit(self) -> u8 {
        self.0 & 1
    }

    pub fn b_bit(self) -> u8 {
        (self.0 >> 1) & 1
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Field multiplication.
    pub fn mul(self, rhs: Gf4) -> Gf4 {
        // Indexed by (self << 2) | rhs; rows/cols in order 0, w, W, 1.
        const TABLE: [u8; 16] = [
            0b00, 0b00, 0b00, 0b00, // 0 * x
            0b00, 0b10, 0b11, 0b01, // w * {0,w,W,1}
            0b00, 0b11, 0b01, 0b10, // W * {0,w,W,1}
            0b00, 0b01, 0b10, 0b11, // 1 * {0,w,W,1}
        ];
        Gf4(TABLE[((self.0 << 2) | rhs.0) as usize])
    }

    /// Conjugation x -> x^2; swaps w and W.
    pub fn conj(self) -> Gf4 {
        Gf4(((self.0 & 1) << 1) | ((self.0 >> 1) & 1))
    }

    /// tr(x) = x + x^2 as a GF(2) value.
    pub fn trace(self) -> u8 {
        self.a_bit() ^ self.b_bit()
    }

    pub fn to_char(self) -> char {
        match self.0 {
            0b00 => '0',
            0b01 => 'w',
            0b10 => 'W',
            _ => '1',
        }
    }

    pub fn from_char(c: char) -> Result<Gf4, Error> {
        match c {
            '0' => Ok(Gf4::ZERO),
            'w' => Ok(Gf4::OMEGA),
            'W' => Ok(Gf4::OMEGA_SQ),
            '1' => Ok(Gf4::ONE),
            other => Err(Error::Parse(format!("invalid GF(4) symbol '{other}'"))),
        }
    }

    pub fn all() -> [Gf4; 4] {
        [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_SQ]
    }
}

impl std::ops::Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl std::ops::Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::mul(self, rhs)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A vector in GF(4)^n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Vector {
    symbols: Vec<Gf4>,
}

impl Gf4Vector {
    pub fn new(symbols: Vec<Gf4>) -> Gf4Vector {
        Gf4Vector { symbols }
    }

    pub fn zero(n: usize) -> Gf4Vector {
        Gf4Vector {
            symbols: vec![Gf4::ZERO; n],
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Gf4] {
        &self.symbols
    }

    pub fn get(&self, i: usize) -> Gf4 {
        self.symbols[i]
    }

    pub fn set(&mut self, i: usize, x: Gf4) {
        self.symbols[i] = x;
    }

    /// Number of nonzero positions.
    pub fn symbol_weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|s| s.is_zero())
    }

    pub fn add(&self, rhs: &Gf4Vector) -> Gf4Vector {
        assert_eq!(self.len(), rhs.len());
        Gf4Vector {
            symbols: self
                .symbols
                .iter()
                .zip(&rhs.symbols)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }

    pub fn scale(&self, s: Gf4) -> Gf4Vector {
        Gf4Vector {
            symbols: self.symbols.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn parse(s: &str) -> Result<Gf4Vector, Error> {
        s.chars()
            .map(Gf4::from_char)
            .collect::<Result<Vec<_>, _>>()
            .map(Gf4Vector::new)
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Trace inner product: sum_j (u_j v_j^2 + u_j^2 v_j), a GF(2) value.
pub fn trace_inner(u: &Gf4Vector, v: &Gf4Vector) -> Result<u8, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    let mut acc = 0u8;
    for (&x, &y) in u.symbols.iter().zip(&v.symbols) {
        acc ^= (x * y.conj()).trace();
    }
    Ok(acc)
}

/// Hermitian inner product: sum_j u_j v_j^2.
pub fn hermitian_inner(u: &Gf4Vector, v: &Gf4Vector) -> Result<Gf4, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    let mut acc = Gf4::ZERO;
    for (&x, &y) in u.symbols.iter().zip(&v.symbols) {
        acc = acc + x * y.conj();
    }
    Ok(acc)
}
