//! Phase-free Pauli operators in binary symplectic form.
//!
//! A Pauli on `n` qubits is stored as the pair `(z | x)` of length-`n` bit
//! vectors: `I = (0,0)`, `X = (0,1)`, `Z = (1,0)`, `Y = (1,1)`. Overall phases
//! are not represented.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitVec};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PauliVector {
    z: BitVec,
    x: BitVec,
}

impl PauliVector {
    pub fn identity(n: usize) -> Self {
        Self {
            z: BitVec::zeros(n),
            x: BitVec::zeros(n),
        }
    }

    pub fn new(z: BitVec, x: BitVec) -> Result<Self> {
        if z.len() != x.len() {
            return Err(Error::Shape {
                op: "PauliVector::new",
                expected: z.len(),
                found: x.len(),
            });
        }
        Ok(Self { z, x })
    }

    /// Single-qubit `X` or `Z` on `qubit`, the building blocks of standard bases.
    pub fn single(n: usize, qubit: usize, letter: char) -> Self {
        let mut p = Self::identity(n);
        match letter {
            'X' => p.x.set(qubit, true),
            'Z' => p.z.set(qubit, true),
            'Y' => {
                p.x.set(qubit, true);
                p.z.set(qubit, true);
            }
            'I' => {}
            other => panic!("not a Pauli letter: {other}"),
        }
        p
    }

    /// Splits a `(z | x)` row of length `2n`.
    pub fn from_symplectic(row: &BitVec) -> Result<Self> {
        if !row.len().is_multiple_of(2) {
            return Err(Error::Shape {
                op: "PauliVector::from_symplectic",
                expected: row.len() + 1,
                found: row.len(),
            });
        }
        let n = row.len() / 2;
        Ok(Self {
            z: row.slice(0, n),
            x: row.slice(n, n),
        })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.z.len()
    }

    #[inline]
    pub fn z(&self) -> &BitVec {
        &self.z
    }

    #[inline]
    pub fn x(&self) -> &BitVec {
        &self.x
    }

    pub fn is_identity(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        self.z
            .words()
            .iter()
            .zip(self.x.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// The concatenated `(z | x)` row.
    pub fn to_symplectic(&self) -> BitVec {
        self.z.concat(&self.x)
    }

    fn check_len(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::Shape {
                op,
                expected: self.num_qubits(),
                found: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// `z·x' + x·z'` mod 2: `true` iff the two operators anticommute.
    pub fn symplectic_product(&self, other: &Self) -> Result<bool> {
        self.check_len(other, "symplectic_product")?;
        Ok(self.anticommutes_unchecked(other))
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        self.symplectic_product(other).map(|b| !b)
    }

    /// Lengths must match; only debug builds check.
    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &Self) -> bool {
        debug_assert_eq!(self.num_qubits(), other.num_qubits());
        let zw = self.z.words();
        let xw = self.x.words();
        let ozw = other.z.words();
        let oxw = other.x.words();
        let mut acc = 0u64;
        for t in 0..zw.len() {
            acc ^= (zw[t] & oxw[t]) ^ (xw[t] & ozw[t]);
        }
        acc.count_ones() & 1 == 1
    }

    /// Phase-free product: componentwise sum of the symplectic rows.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "multiply")?;
        let mut out = self.clone();
        out.mul_assign_unchecked(other);
        Ok(out)
    }

    #[inline]
    pub(crate) fn mul_assign_unchecked(&mut self, other: &Self) {
        self.z.xor_assign(&other.z);
        self.x.xor_assign(&other.x);
    }

    pub fn letter(&self, qubit: usize) -> char {
        match (self.z.get(qubit), self.x.get(qubit)) {
            (false, false) => 'I',
            (false, true) => 'X',
            (true, false) => 'Z',
            (true, true) => 'Y',
        }
    }
}

/// Parses a string over `{I, X, Y, Z}`.
pub fn parse_pauli(s: &str) -> Result<PauliVector> {
    let letters: Vec<char> = s.chars().collect();
    let mut p = PauliVector::identity(letters.len());
    for (q, &c) in letters.iter().enumerate() {
        match c {
            'I' => {}
            'X' => p.x.set(q, true),
            'Z' => p.z.set(q, true),
            'Y' => {
                p.z.set(q, true);
                p.x.set(q, true);
            }
            found => {
                return Err(Error::Parse {
                    position: q + 1,
                    found,
                })
            }
        }
    }
    Ok(p)
}

impl FromStr for PauliVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.num_qubits() {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl Serialize for PauliVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_pauli(&s).map_err(serde::de::Error::custom)
    }
}

/// An ordered list of generators on a common number of qubits.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GeneratorSet {
    n: usize,
    gens: Vec<PauliVector>,
}

impl GeneratorSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            gens: Vec::new(),
        }
    }

    pub fn new(n: usize, gens: Vec<PauliVector>) -> Result<Self> {
        for g in &gens {
            if g.num_qubits() != n {
                return Err(Error::Shape {
                    op: "GeneratorSet::new",
                    expected: n,
                    found: g.num_qubits(),
                });
            }
        }
        Ok(Self { n, gens })
    }

    /// Parses one Pauli string per entry. An empty list yields an empty set on
    /// `n_if_empty` qubits.
    pub fn parse<S: AsRef<str>>(lines: &[S], n_if_empty: usize) -> Result<Self> {
        let gens = lines
            .iter()
            .map(|l| parse_pauli(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let n = gens.first().map_or(n_if_empty, PauliVector::num_qubits);
        Self::new(n, gens)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    #[inline]
    pub fn gens(&self) -> &[PauliVector] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<PauliVector> {
        self.gens
    }

    pub fn push(&mut self, g: PauliVector) -> Result<()> {
        if g.num_qubits() != self.n {
            return Err(Error::Shape {
                op: "GeneratorSet::push",
                expected: self.n,
                found: g.num_qubits(),
            });
        }
        self.gens.push(g);
        Ok(())
    }

    /// `[M_Z | M_X]`, shape `m x 2n`.
    pub fn to_matrix(&self) -> BinMatrix {
        let rows: Vec<BitVec> = self.gens.iter().map(PauliVector::to_symplectic).collect();
        BinMatrix::from_bitvecs(2 * self.n, &rows)
    }

    pub fn from_matrix(m: &BinMatrix) -> Result<Self> {
        if !m.cols().is_multiple_of(2) {
            return Err(Error::Shape {
                op: "GeneratorSet::from_matrix",
                expected: m.cols() + 1,
                found: m.cols(),
            });
        }
        let gens = (0..m.rows())
            .map(|i| PauliVector::from_symplectic(&m.row(i)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m.cols() / 2, gens)
    }

    pub fn z_block(&self) -> BinMatrix {
        let rows: Vec<BitVec> = self.gens.iter().map(|g| g.z.clone()).collect();
        BinMatrix::from_bitvecs(self.n, &rows)
    }

    pub fn x_block(&self) -> BinMatrix {
        let rows: Vec<BitVec> = self.gens.iter().map(|g| g.x.clone()).collect();
        BinMatrix::from_bitvecs(self.n, &rows)
    }

    /// Symplectic product matrix `M_Z M_X^T + M_X M_Z^T`.
    pub fn omega(&self) -> BinMatrix {
        let mz = self.z_block();
        let mx = self.x_block();
        let a = mz.mul(&mx.transpose()).expect("blocks share width n");
        let b = mx.mul(&mz.transpose()).expect("blocks share width n");
        a.add(&b).expect("both products are m x m")
    }

    /// True when every pair of generators commutes.
    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, g)| {
            self.gens[i + 1..]
                .iter()
                .all(|h| !g.anticommutes_unchecked(h))
        })
    }

    /// Rank of the binary representation, i.e. the number of independent generators.
    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a PauliVector;
    type IntoIter = std::slice::Iter<'a, PauliVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.gens.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliVector {
        parse_pauli(s).unwrap()
    }

    #[test]
    fn symplectic_product_examples() {
        assert!(p("X").symplectic_product(&p("Z")).unwrap());
        for s in ["I", "X", "Y", "Z", "XZIYY"] {
            assert!(!p(s).symplectic_product(&p(s)).unwrap());
        }
        // anticommuting positions: 0 (X,Z) and 1 (Z,X); even count
        assert!(!p("XZIX").symplectic_product(&p("ZXIX")).unwrap());
        assert!(matches!(
            p("XX").symplectic_product(&p("X")),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn multiply_examples() {
        let g = p("XYZI");
        assert_eq!(g.multiply(&PauliVector::identity(4)).unwrap(), g);
        assert!(g.multiply(&g).unwrap().is_identity());
        assert_eq!(p("X").multiply(&p("Z")).unwrap(), p("Y"));
        assert!(p("X").multiply(&p("XX")).is_err());
    }

    #[test]
    fn parse_examples() {
        let v = p("IXZY");
        let bits = |b: &BitVec| b.iter().map(u8::from).collect::<Vec<_>>();
        assert_eq!(bits(v.z()), vec![0, 0, 1, 1]);
        assert_eq!(bits(v.x()), vec![0, 1, 0, 1]);
        assert_eq!(p("").num_qubits(), 0);
        assert_eq!(
            parse_pauli("XQ").unwrap_err(),
            Error::Parse {
                position: 2,
                found: 'Q'
            }
        );
    }

    #[test]
    fn to_matrix_examples() {
        let one = GeneratorSet::parse(&["Z"], 1).unwrap();
        assert_eq!(one.to_matrix(), BinMatrix::from_rows(&[[1u8, 0]]));
        let xz = GeneratorSet::parse(&["X", "Z"], 1).unwrap();
        assert_eq!(xz.to_matrix(), BinMatrix::from_rows(&[[0u8, 1], [1, 0]]));
        assert_eq!(GeneratorSet::from_matrix(&xz.to_matrix()).unwrap(), xz);
    }

    #[test]
    fn omega_examples() {
        let commuting = GeneratorSet::parse(&["ZZI", "IZZ", "XXX"], 3).unwrap();
        assert!(commuting.omega().is_zero());
        let xz = GeneratorSet::parse(&["X", "Z"], 1).unwrap();
        assert_eq!(xz.omega(), BinMatrix::j_block());
        let empty = GeneratorSet::empty(0);
        assert_eq!(empty.omega(), BinMatrix::zeros(0, 0));
    }

    #[test]
    fn wide_operators_cross_word_boundaries() {
        let mut a = PauliVector::identity(130);
        let mut b = PauliVector::identity(130);
        a.x.set(129, true);
        b.z.set(129, true);
        assert!(a.symplectic_product(&b).unwrap());
        a.x.set(64, true);
        b.z.set(64, true);
        assert!(!a.symplectic_product(&b).unwrap());
        assert_eq!(p(&a.to_string()), a);
    }

    #[test]
    fn serde_as_string() {
        let g = p("XYZI");
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, "\"XYZI\"");
        assert_eq!(serde_json::from_str::<PauliVector>(&json).unwrap(), g);
        assert!(serde_json::from_str::<PauliVector>("\"XA\"").is_err());
    }
}
