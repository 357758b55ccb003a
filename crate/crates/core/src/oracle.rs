//! Slow, independent recomputation of everything the fast path produces.
//!
//! Nothing here touches packed words: ranks are computed on `Vec<Vec<bool>>`
//! and commutation is read off the Pauli letters position by position.
//! The seeded random code generators used by tests and `verify` live here too.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::{CodeKind, CssCodePair, Gf4Code};
use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitVec};
use crate::gf4::{Gf4, Gf4Matrix};
use crate::pauli::{GeneratorSet, PauliVector};
use crate::sgsop::{standard_form, SymplecticDecomposition};

/// One named comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Self {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

fn to_bool_rows(m: &BinMatrix) -> Vec<Vec<bool>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect()
}

fn naive_rank_rows(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col]) else {
            continue;
        };
        rows.swap(rank, p);
        for i in rank + 1..rows.len() {
            if rows[i][col] {
                let pivot = rows[rank].clone();
                for (a, b) in rows[i][col..].iter_mut().zip(&pivot[col..]) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Row-echelon rank on unpacked booleans.
pub fn naive_rank(m: &BinMatrix) -> usize {
    naive_rank_rows(to_bool_rows(m))
}

/// Anticommutation read off the letters: count positions where both factors
/// are non-identity and differ.
pub fn letter_anticommutes(a: &PauliVector, b: &PauliVector) -> bool {
    let (sa, sb) = (a.to_string(), b.to_string());
    assert_eq!(sa.len(), sb.len(), "qubit count mismatch");
    sa.chars()
        .zip(sb.chars())
        .filter(|&(x, y)| x != 'I' && y != 'I' && x != y)
        .count()
        % 2
        == 1
}

/// `Ω` built entry by entry from pairwise commutation.
pub fn pairwise_omega(gs: &GeneratorSet) -> BinMatrix {
    let g = gs.gens();
    let mut m = BinMatrix::zeros(g.len(), g.len());
    for i in 0..g.len() {
        for j in 0..g.len() {
            if letter_anticommutes(&g[i], &g[j]) {
                m.set(i, j, true);
            }
        }
    }
    m
}

fn symplectic_rows(gens: &[PauliVector]) -> Vec<Vec<bool>> {
    gens.iter()
        .map(|g| g.z().iter().chain(g.x().iter()).collect())
        .collect()
}

/// Same span, decided by three naive ranks.
fn naive_same_span(a: &[PauliVector], b: &[PauliVector]) -> bool {
    let ra = naive_rank_rows(symplectic_rows(a));
    let rb = naive_rank_rows(symplectic_rows(b));
    let mut both = symplectic_rows(a);
    both.extend(symplectic_rows(b));
    ra == rb && naive_rank_rows(both) == ra
}

/// Checks every contract of a decomposition of `input`.
pub fn verify_decomposition(
    input: &GeneratorSet,
    d: &SymplecticDecomposition,
) -> VerificationReport {
    let mut report = VerificationReport::default();

    let unpaired = d
        .pairs
        .iter()
        .filter(|(a, b)| a.num_qubits() != b.num_qubits() || !letter_anticommutes(a, b))
        .count();
    report.push(Check::new("pairs anticommute", 0, unpaired));

    // Every two processed generators not forming a pair must commute.
    let mut flat: Vec<(usize, &PauliVector)> = Vec::new();
    for (t, (a, b)) in d.pairs.iter().enumerate() {
        flat.push((t, a));
        flat.push((t, b));
    }
    flat.extend(d.isotropic.iter().map(|g| (usize::MAX, g)));
    let mut clashes = 0usize;
    for (x, &(tx, gx)) in flat.iter().enumerate() {
        for &(ty, gy) in &flat[x + 1..] {
            if tx == ty && tx != usize::MAX {
                continue;
            }
            if gx.num_qubits() != gy.num_qubits() || letter_anticommutes(gx, gy) {
                clashes += 1;
            }
        }
    }
    report.push(Check::new("non-partners commute", 0, clashes));

    report.push(Check::new(
        "2*pairs + isotropic = m",
        input.len(),
        2 * d.pairs.len() + d.isotropic.len(),
    ));

    let output: Vec<PauliVector> = flat.iter().map(|&(_, g)| g.clone()).collect();
    let same_n = output.iter().all(|g| g.num_qubits() == input.num_qubits());
    report.push(Check::new(
        "generated group preserved",
        true,
        same_n && naive_same_span(input.gens(), &output),
    ));

    let replay = match d.replay_inverse() {
        Ok(gs) if gs == *input => "exact".to_string(),
        Ok(_) => "mismatch".to_string(),
        Err(e) => format!("error: {e}"),
    };
    report.push(Check::new("replay_inverse round-trip", "exact", replay));

    let twice_pairs = naive_rank(&pairwise_omega(input));
    report.push(Check::new(
        "pairs = rank(Omega)/2",
        format!("{}/2", twice_pairs),
        format!("{}/2", 2 * d.pairs.len()),
    ));

    if same_n {
        let reordered = GeneratorSet::new(input.num_qubits(), output).expect("same n");
        report.push(Check::new(
            "Omega standard form",
            true,
            pairwise_omega(&reordered) == standard_form(d.pairs.len(), d.isotropic.len()),
        ));
    }
    report
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_pauli<R: Rng>(rng: &mut R, n: usize) -> PauliVector {
    let z = BitVec::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<bool>>());
    let x = BitVec::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<bool>>());
    PauliVector::new(z, x).expect("equal lengths")
}

/// `m` independent uniformly random generators (not necessarily independent
/// or commuting).
pub fn random_generator_set<R: Rng>(rng: &mut R, n: usize, m: usize) -> GeneratorSet {
    GeneratorSet::new(n, (0..m).map(|_| random_pauli(rng, n)).collect()).expect("width n")
}

const MAX_RETRIES: usize = 256;

fn random_full_rank_binary<R: Rng>(rng: &mut R, k: usize, n: usize) -> Result<BinMatrix> {
    if k > n {
        return Err(Error::Generation(format!(
            "cannot have rank {k} with {n} columns"
        )));
    }
    for _ in 0..MAX_RETRIES {
        let mut m = BinMatrix::zeros(k, n);
        for i in 0..k {
            for j in 0..n {
                m.set(i, j, rng.gen());
            }
        }
        if m.rank() == k {
            return Ok(m);
        }
    }
    Err(Error::Generation(format!(
        "no full-rank {k}x{n} binary matrix after {MAX_RETRIES} draws"
    )))
}

fn random_gf4<R: Rng>(rng: &mut R) -> Gf4 {
    Gf4::ALL[rng.gen_range(0..4)]
}

fn random_gf4_matrix<R: Rng>(rng: &mut R, k: usize, n: usize) -> Gf4Matrix {
    let mut m = Gf4Matrix::zeros(k, n);
    for i in 0..k {
        for j in 0..n {
            m.set(i, j, random_gf4(rng));
        }
    }
    m
}

fn random_full_rank_gf4<R: Rng>(rng: &mut R, k: usize, n: usize) -> Result<Gf4Matrix> {
    if k > n {
        return Err(Error::Generation(format!(
            "cannot have rank {k} with {n} columns"
        )));
    }
    for _ in 0..MAX_RETRIES {
        let m = random_gf4_matrix(rng, k, n);
        if m.rank() == k {
            return Ok(m);
        }
    }
    Err(Error::Generation(format!(
        "no full-rank {k}x{n} GF(4) matrix after {MAX_RETRIES} draws"
    )))
}

/// Random CSS pair with `G1` of `k1` rows and `G2` of `k2` rows; parity
/// checks are kernel bases.
pub fn random_css(n: usize, k1: usize, k2: usize, seed: u64) -> Result<CssCodePair> {
    let mut rng = rng_from_seed(seed);
    let g1 = random_full_rank_binary(&mut rng, k1, n)?;
    let g2 = random_full_rank_binary(&mut rng, k2, n)?;
    CssCodePair::new(g1, g2, None, None)
}

/// Random GF(4)-linear `[n, k]` code, generally not trace-orthogonal.
pub fn random_crss(n: usize, k: usize, seed: u64) -> Result<Gf4Code> {
    let mut rng = rng_from_seed(seed);
    let g = random_full_rank_gf4(&mut rng, k, n)?;
    Gf4Code::new(g, None)
}

/// Random trace-orthogonal code: `H` has `checks` rows with `H H† = 0`.
pub fn random_trace_orthogonal_crss(n: usize, checks: usize, seed: u64) -> Result<Gf4Code> {
    let mut rng = rng_from_seed(seed);
    let mut h = Gf4Matrix::zeros(0, n);
    let mut attempts = 0;
    while h.rows() < checks {
        attempts += 1;
        if attempts > MAX_RETRIES * (checks + 1) {
            return Err(Error::Generation(format!(
                "no self-orthogonal {checks}x{n} check matrix found"
            )));
        }
        // Hermitian complement of the rows so far: conj(H) vᵀ = 0.
        let complement = h.conj().kernel();
        let mut v = vec![Gf4::ZERO; n];
        for r in 0..complement.rows() {
            let s = random_gf4(&mut rng);
            for (e, &b) in v.iter_mut().zip(complement.row(r)) {
                *e = *e + s * b;
            }
        }
        // v·v† is the Hamming weight mod 2
        if v.iter().filter(|e| !e.is_zero()).count() % 2 != 0 {
            continue;
        }
        let candidate = h.vstack(&Gf4Matrix::from_rows_with_cols(n, &[v]))?;
        if candidate.rank() == candidate.rows() {
            h = candidate;
        }
    }
    let g = h.kernel();
    Gf4Code::new(g, Some(h))
}

/// Symplectic transvection `v ↦ v + ⟨v, t⟩ t`.
fn transvect(v: &mut PauliVector, t: &PauliVector) {
    if v.symplectic_product(t).expect("same n") {
        *v = v.multiply(t).expect("same n");
    }
}

/// Random code with `isotropic` commuting checks and `ebits` anticommuting
/// check pairs on `n` qubits, plus its full normalizer. Built from the
/// standard form and scrambled by random transvections.
pub fn random_stabilizer(
    n: usize,
    isotropic: usize,
    ebits: usize,
    seed: u64,
) -> Result<(GeneratorSet, GeneratorSet)> {
    if isotropic + ebits > n {
        return Err(Error::Generation(format!(
            "{isotropic} isotropic checks and {ebits} ebits do not fit in {n} qubits"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut checks: Vec<PauliVector> = (0..isotropic)
        .map(|q| PauliVector::single(n, q, 'Z'))
        .collect();
    for q in isotropic..isotropic + ebits {
        checks.push(PauliVector::single(n, q, 'Z'));
        checks.push(PauliVector::single(n, q, 'X'));
    }
    let mut normalizer: Vec<PauliVector> = (0..isotropic)
        .map(|q| PauliVector::single(n, q, 'Z'))
        .collect();
    for q in isotropic + ebits..n {
        normalizer.push(PauliVector::single(n, q, 'Z'));
        normalizer.push(PauliVector::single(n, q, 'X'));
    }
    for _ in 0..(4 * n + 4) {
        let t = random_pauli(&mut rng, n);
        for v in checks.iter_mut().chain(normalizer.iter_mut()) {
            transvect(v, &t);
        }
    }
    Ok((
        GeneratorSet::new(n, checks)?,
        GeneratorSet::new(n, normalizer)?,
    ))
}

/// Output of [`random_code`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RandomCode {
    Css(CssCodePair),
    Crss(Gf4Code),
    Stabilizer {
        checks: GeneratorSet,
        normalizer: GeneratorSet,
    },
}

/// `rates` is `[k1, k2]` for CSS, `[k]` for CRSS and `[isotropic, ebits]` for
/// stabilizer codes.
pub fn random_code(kind: CodeKind, n: usize, rates: &[usize], seed: u64) -> Result<RandomCode> {
    if n == 0 {
        return Err(Error::Generation("n must be at least 1".into()));
    }
    let want = |len: usize| {
        if rates.len() == len {
            Ok(())
        } else {
            Err(Error::Generation(format!(
                "{kind:?} codes take {len} rate parameters, got {}",
                rates.len()
            )))
        }
    };
    match kind {
        CodeKind::Css => {
            want(2)?;
            random_css(n, rates[0], rates[1], seed).map(RandomCode::Css)
        }
        CodeKind::Crss => {
            want(1)?;
            random_crss(n, rates[0], seed).map(RandomCode::Crss)
        }
        CodeKind::Stabilizer => {
            want(2)?;
            let (checks, normalizer) = random_stabilizer(n, rates[0], rates[1], seed)?;
            Ok(RandomCode::Stabilizer { checks, normalizer })
        }
    }
}
