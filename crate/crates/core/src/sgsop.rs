//! Symplectic Gram-Schmidt orthogonalization of a Pauli generator list.
//!
//! The sweep keeps a front pointer into the working list. If the front
//! generator commutes with everything after it, it is set aside as isotropic.
//! Otherwise the first later generator that anticommutes with it is swapped
//! into the next slot, the two form a symplectic pair, and every remaining
//! generator `g` is replaced by `g · g1^f(g,g2) · g2^f(g,g1)` so that it
//! commutes with both. Every change is logged, so the input can be rebuilt
//! exactly by undoing the log.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BinMatrix;
use crate::pauli::{GeneratorSet, PauliVector};

/// One logged action of the sweep. Positions refer to the working list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SgsopStep {
    /// The generator at `index` commuted with every later one.
    SetAside { index: usize },
    /// The generator at `first` pairs with the one originally at `partner`,
    /// which was swapped into position `first + 1`.
    PairFound { first: usize, partner: usize },
    /// `g[index] ← g[index] · g[pair]^e1 · g[pair+1]^e2` with
    /// `exponents = (e1, e2) = (f(g, g[pair+1]), f(g, g[pair]))`.
    RowUpdate {
        index: usize,
        pair: usize,
        exponents: (bool, bool),
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticDecomposition {
    pub num_qubits: usize,
    pub pairs: Vec<(PauliVector, PauliVector)>,
    pub isotropic: Vec<PauliVector>,
    pub log: Vec<SgsopStep>,
}

/// Runs the sweep. Deterministic: ties go to the smallest partner index.
pub fn sgsop(gs: &GeneratorSet) -> SymplecticDecomposition {
    let mut work: Vec<PauliVector> = gs.gens().to_vec();
    let m = work.len();
    let mut pairs = Vec::new();
    let mut isotropic = Vec::new();
    let mut log = Vec::new();

    let mut front = 0;
    while front < m {
        let partner = (front + 1..m).find(|&j| work[front].anticommutes_unchecked(&work[j]));
        let Some(j) = partner else {
            log.push(SgsopStep::SetAside { index: front });
            isotropic.push(work[front].clone());
            front += 1;
            continue;
        };
        work.swap(front + 1, j);
        log.push(SgsopStep::PairFound {
            first: front,
            partner: j,
        });

        let (done, rest) = work.split_at_mut(front + 2);
        let (g1, g2) = (&done[front], &done[front + 1]);
        for (offset, g) in rest.iter_mut().enumerate() {
            let e1 = g.anticommutes_unchecked(g2);
            let e2 = g.anticommutes_unchecked(g1);
            if e1 {
                g.mul_assign_unchecked(g1);
            }
            if e2 {
                g.mul_assign_unchecked(g2);
            }
            if e1 || e2 {
                log.push(SgsopStep::RowUpdate {
                    index: front + 2 + offset,
                    pair: front,
                    exponents: (e1, e2),
                });
            }
        }
        pairs.push((g1.clone(), g2.clone()));
        front += 2;
    }

    SymplecticDecomposition {
        num_qubits: gs.num_qubits(),
        pairs,
        isotropic,
        log,
    }
}

/// `½ rank(Ω)`, computed through the symplectic product matrix only.
pub fn pair_count(gs: &GeneratorSet) -> usize {
    gs.omega().rank() / 2
}

/// `J ⊕ … ⊕ J ⊕ [0] ⊕ … ⊕ [0]` with the given block counts.
pub fn standard_form(pairs: usize, isotropic: usize) -> BinMatrix {
    let mut blocks = vec![BinMatrix::j_block(); pairs];
    blocks.extend(std::iter::repeat_n(BinMatrix::zeros(1, 1), isotropic));
    BinMatrix::direct_sum(&blocks)
}

impl SymplecticDecomposition {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn isotropic_count(&self) -> usize {
        self.isotropic.len()
    }

    /// Total number of processed generators, `2·pairs + isotropic`.
    pub fn len(&self) -> usize {
        2 * self.pairs.len() + self.isotropic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs flattened in order, followed by the isotropic generators.
    pub fn reordered(&self) -> GeneratorSet {
        let mut gens = Vec::with_capacity(self.len());
        for (a, b) in &self.pairs {
            gens.push(a.clone());
            gens.push(b.clone());
        }
        gens.extend(self.isotropic.iter().cloned());
        GeneratorSet::new(self.num_qubits, gens).expect("decomposition members share n")
    }

    pub fn isotropic_set(&self) -> GeneratorSet {
        GeneratorSet::new(self.num_qubits, self.isotropic.clone())
            .expect("decomposition members share n")
    }

    /// Both members of every pair, in order.
    pub fn paired_set(&self) -> GeneratorSet {
        let gens = self
            .pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        GeneratorSet::new(self.num_qubits, gens).expect("decomposition members share n")
    }

    /// `Ω` of [`Self::reordered`]; equals [`standard_form`] for a valid decomposition.
    pub fn standard_form_omega(&self) -> BinMatrix {
        self.reordered().omega()
    }

    /// Rebuilds the input list by undoing the log.
    pub fn replay_inverse(&self) -> Result<GeneratorSet> {
        let m = self.len();
        let n = self.num_qubits;
        for g in self
            .pairs
            .iter()
            .flat_map(|(a, b)| [a, b])
            .chain(&self.isotropic)
        {
            if g.num_qubits() != n {
                return Err(Error::Replay(format!(
                    "generator {g} has {} qubits, expected {n}",
                    g.num_qubits()
                )));
            }
        }

        // Lay the processed generators back out in discovery order while
        // checking that the log describes a well-formed sweep.
        let mut work: Vec<PauliVector> = Vec::with_capacity(m);
        let mut pairs = self.pairs.iter();
        let mut isotropic = self.isotropic.iter();
        let mut current_pair: Option<usize> = None;
        for (s, step) in self.log.iter().enumerate() {
            let front = work.len();
            match *step {
                SgsopStep::SetAside { index } => {
                    if index != front {
                        return Err(Error::Replay(format!(
                            "step {s}: set-aside at {index}, sweep is at {front}"
                        )));
                    }
                    let g = isotropic.next().ok_or_else(|| {
                        Error::Replay(format!(
                            "step {s}: more set-asides than isotropic generators"
                        ))
                    })?;
                    work.push(g.clone());
                    current_pair = None;
                }
                SgsopStep::PairFound { first, partner } => {
                    if first != front || partner <= first || partner >= m {
                        return Err(Error::Replay(format!(
                            "step {s}: pair ({first}, {partner}) invalid at sweep position {front} of {m}"
                        )));
                    }
                    let (a, b) = pairs.next().ok_or_else(|| {
                        Error::Replay(format!("step {s}: more pair steps than pairs"))
                    })?;
                    work.push(a.clone());
                    work.push(b.clone());
                    current_pair = Some(first);
                }
                SgsopStep::RowUpdate { index, pair, .. } => {
                    if current_pair != Some(pair) || index < pair + 2 || index >= m {
                        return Err(Error::Replay(format!(
                            "step {s}: update of {index} against pair at {pair} is out of place"
                        )));
                    }
                }
            }
        }
        if work.len() != m || pairs.next().is_some() || isotropic.next().is_some() {
            return Err(Error::Replay(format!(
                "log accounts for {} of {m} generators",
                work.len()
            )));
        }

        for step in self.log.iter().rev() {
            match *step {
                SgsopStep::SetAside { .. } => {}
                SgsopStep::PairFound { first, partner } => work.swap(first + 1, partner),
                SgsopStep::RowUpdate {
                    index,
                    pair,
                    exponents: (e1, e2),
                } => {
                    let (head, tail) = work.split_at_mut(index);
                    let g = &mut tail[0];
                    if e1 {
                        g.mul_assign_unchecked(&head[pair]);
                    }
                    if e2 {
                        g.mul_assign_unchecked(&head[pair + 1]);
                    }
                }
            }
        }
        GeneratorSet::new(n, work)
    }
}
