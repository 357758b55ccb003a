//! GF(4) = {0, 1, ω, ω̄} and the map `γ` onto binary symplectic rows.
//!
//! Each element is stored as the two bits `(z, x)` of its `γ` image, using the
//! GF(2) basis `{ω, ω̄}`: `0 = (0,0)`, `ω = (1,0)`, `ω̄ = (0,1)`, `1 = ω + ω̄ = (1,1)`.
//! Addition is XOR of the codes, conjugation swaps the two bits and the trace
//! `e + e²` is `z ⊕ x`. With this choice
//! `tr(u · conj(v)) = z_u x_v + x_u z_v`, which is the symplectic product.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitVec};
use crate::pauli::PauliVector;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf4(u8);

// indexed by the 2-bit code: 0, ω̄, ω, 1
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 2, 3, 1], [0, 3, 1, 2], [0, 1, 2, 3]];
const INV: [u8; 4] = [0, 2, 1, 3];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0b00);
    pub const ONE: Gf4 = Gf4(0b11);
    pub const OMEGA: Gf4 = Gf4(0b10);
    pub const OMEGA_BAR: Gf4 = Gf4(0b01);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];

    /// Element with the given `γ` bits.
    #[inline]
    pub const fn from_bits(z: bool, x: bool) -> Gf4 {
        Gf4(((z as u8) << 1) | x as u8)
    }

    #[inline]
    pub const fn z_bit(self) -> bool {
        self.0 & 0b10 != 0
    }

    #[inline]
    pub const fn x_bit(self) -> bool {
        self.0 & 0b01 != 0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius map `e ↦ e²`.
    #[inline]
    pub const fn conj(self) -> Gf4 {
        Gf4(((self.0 & 1) << 1) | (self.0 >> 1))
    }

    /// Absolute trace `e + e²` into GF(2).
    #[inline]
    pub const fn trace(self) -> bool {
        self.z_bit() ^ self.x_bit()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Gf4> {
        (!self.is_zero()).then_some(Gf4(INV[self.0 as usize]))
    }

    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA_BAR),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Gf4::ZERO => '0',
            Gf4::ONE => '1',
            Gf4::OMEGA => 'w',
            _ => 'W',
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;

    // characteristic 2: addition is XOR of the bit pairs
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;

    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match *self {
            Gf4::ZERO => "0",
            Gf4::ONE => "1",
            Gf4::OMEGA => "ω",
            _ => "ω̄",
        };
        f.write_str(name)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// `γ` of a GF(4) vector: the Pauli whose z/x rows are the basis coordinates.
pub fn gamma(v: &[Gf4]) -> PauliVector {
    let z = BitVec::from_bools(&v.iter().map(|e| e.z_bit()).collect::<Vec<_>>());
    let x = BitVec::from_bools(&v.iter().map(|e| e.x_bit()).collect::<Vec<_>>());
    PauliVector::new(z, x).expect("equal lengths")
}

/// Inverse of [`gamma`].
pub fn gamma_inv(p: &PauliVector) -> Vec<Gf4> {
    p.z()
        .iter()
        .zip(p.x().iter())
        .map(|(z, x)| Gf4::from_bits(z, x))
        .collect()
}

/// `Σ_t tr(u_t · conj(v_t))` mod 2.
pub fn trace_inner(u: &[Gf4], v: &[Gf4]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::Shape {
            op: "trace_inner",
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(u.iter()
        .zip(v)
        .fold(false, |acc, (&a, &b)| acc ^ (a * b.conj()).trace()))
}

/// Dense matrix over GF(4).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Gf4::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf4::ONE);
        }
        m
    }

    /// Panics on ragged rows.
    pub fn from_rows<R: AsRef<[Gf4]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_rows_with_cols(cols, rows)
    }

    pub fn from_rows_with_cols<R: AsRef<[Gf4]>>(cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Parses one row string over `{0, 1, w, W}`.
    pub fn parse_row(s: &str) -> Result<Vec<Gf4>> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Gf4::from_char(c).ok_or(Error::Parse {
                    position: i + 1,
                    found: c,
                })
            })
            .collect()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, e: Gf4) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = e;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Gf4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [Gf4] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Gf4Matrix {
        let mut t = Gf4Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise conjugate `M*`.
    pub fn conj(&self) -> Gf4Matrix {
        Gf4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.conj()).collect(),
        }
    }

    /// Conjugate transpose `M†`.
    pub fn dagger(&self) -> Gf4Matrix {
        self.conj().transpose()
    }

    pub fn scale(&self, s: Gf4) -> Gf4Matrix {
        Gf4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| s * e).collect(),
        }
    }

    pub fn vstack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.cols {
            return Err(Error::Shape {
                op: "vstack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        Ok(out)
    }

    pub fn mul(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "gf4 mul",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Gf4Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let e = out.get(i, j) + a * other.get(t, j);
                    out.set(i, j, e);
                }
            }
        }
        Ok(out)
    }

    /// Binary matrix of trace products: entry `(i, j) = Σ_t tr(a_it · conj(b_jt))`.
    pub fn trace_product(&self, other: &Gf4Matrix) -> Result<BinMatrix> {
        if self.cols != other.cols {
            return Err(Error::Shape {
                op: "trace_product",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut out = BinMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                if trace_inner(self.row(i), other.row(j))? {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form in place (pivots scaled to 1); returns pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, col).inv().expect("pivot is nonzero");
            for e in self.row_mut(r) {
                *e = inv * *e;
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                let f = self.get(i, col);
                if i != r && !f.is_zero() {
                    for (e, &pe) in self.row_mut(i).iter_mut().zip(&pivot_row) {
                        *e = *e + f * pe;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    /// Rank over GF(4). The input is left untouched.
    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Basis of `{ v : M v^T = 0 }` (bilinear, no conjugation), one vector per row.
    pub fn kernel(&self) -> Gf4Matrix {
        let mut m = self.clone();
        let pivots = m.reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut k = Gf4Matrix::zeros(free.len(), self.cols);
        for (r, &f) in free.iter().enumerate() {
            k.set(r, f, Gf4::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                // char 2: -a = a
                k.set(r, pc, m.get(pr, f));
            }
        }
        k
    }

    /// `γ` applied to each row.
    pub fn gamma_rows(&self) -> Vec<PauliVector> {
        (0..self.rows).map(|i| gamma(self.row(i))).collect()
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf4Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for e in self.row(i) {
                write!(f, "{e}")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for e in self.row(i) {
                write!(f, "{e}")?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: Gf4 = Gf4::OMEGA;
    const WB: Gf4 = Gf4::OMEGA_BAR;
    const O: Gf4 = Gf4::ONE;
    const Z: Gf4 = Gf4::ZERO;

    #[test]
    fn field_identities() {
        assert_eq!(W * WB, O);
        assert_eq!(W * W, WB);
        assert_eq!(WB * WB, W);
        assert_eq!(O + W + WB, Z);
        for a in Gf4::ALL {
            assert_eq!(a + a, Z);
            assert_eq!(a * O, a);
            if let Some(inv) = a.inv() {
                assert_eq!(a * inv, O);
            }
        }
        assert_eq!(Z.inv(), None);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(W.conj(), WB);
        assert_eq!(O.conj(), O);
        for e in Gf4::ALL {
            assert_eq!(e.conj().conj(), e);
            assert_eq!(e.conj(), e * e);
        }
    }

    #[test]
    fn trace_examples() {
        assert!(!Z.trace());
        assert!(W.trace());
        assert!(WB.trace());
        assert!(!O.trace());
        for e in Gf4::ALL {
            assert_eq!(e.trace(), e + e * e == O);
        }
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma(&[Z, Z, Z]).is_identity());
        assert_eq!(gamma(&[W]).to_string(), "Z");
        assert_eq!(gamma(&[O]).to_string(), "Y");
        assert_eq!(gamma(&[WB]).to_string(), "X");
        let v = vec![O, W, Z, WB];
        assert_eq!(gamma_inv(&gamma(&v)), v);
    }

    #[test]
    fn trace_product_examples() {
        let a = Gf4Matrix::from_rows(&[[W]]);
        let b = Gf4Matrix::from_rows(&[[WB]]);
        assert_eq!(a.trace_product(&b).unwrap(), BinMatrix::from_rows(&[[1u8]]));
        assert_eq!(a.trace_product(&a).unwrap(), BinMatrix::from_rows(&[[0u8]]));
        let m = Gf4Matrix::from_rows(&[[W, O, WB], [O, O, Z]]);
        assert!(m.trace_product(&Gf4Matrix::zeros(4, 3)).unwrap().is_zero());
        assert!(m.trace_product(&Gf4Matrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf4Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Gf4Matrix::from_rows(&[[W]]).rank(), 1);
        // row 2 = ω̄ · row 1
        assert_eq!(Gf4Matrix::from_rows(&[[O, W], [WB, O]]).rank(), 1);
        assert_eq!(Gf4Matrix::identity(5).rank(), 5);
    }

    #[test]
    fn kernel_annihilates() {
        let m = Gf4Matrix::from_rows(&[[O, O, O, O, Z], [Z, O, W, WB, O]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 3);
        assert!(m.mul(&k.transpose()).unwrap().is_zero());
        assert_eq!(k.rank(), 3);
    }

    #[test]
    fn parse_row_alphabet() {
        assert_eq!(Gf4Matrix::parse_row("01wW").unwrap(), vec![Z, O, W, WB]);
        assert_eq!(
            Gf4Matrix::parse_row("0x").unwrap_err(),
            Error::Parse {
                position: 2,
                found: 'x'
            }
        );
    }
}
