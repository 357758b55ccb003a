//! Code constructions and analyses.
//!
//! Each analysis runs the symplectic sweep twice: on the check generators
//! (its pairs are the ebits `c`, the rest the isotropic part) and on the
//! normalizer (its pairs are the logical operators). The closed-form rank
//! formulas are then evaluated alongside and recorded as [`FormulaCheck`]s.
//! A disagreeing check is reported, never turned into an error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BinMatrix;
use crate::gf4::{Gf4, Gf4Matrix};
use crate::pauli::{GeneratorSet, PauliVector};
use crate::sgsop::{pair_count, sgsop, SymplecticDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Stabilizer,
    Css,
    Crss,
}

/// Two classical binary codes `C1`, `C2` of length `n`, given by generator
/// matrices and full-rank parity checks with `H1 G1ᵀ = 0`, `H2 G2ᵀ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCodePair {
    n: usize,
    g1: BinMatrix,
    g2: BinMatrix,
    h1: BinMatrix,
    h2: BinMatrix,
}

fn check_binary_code(
    name: &str,
    n: usize,
    g: &BinMatrix,
    h: Option<BinMatrix>,
) -> Result<BinMatrix> {
    let gname = format!("G{name}");
    let hname = format!("H{name}");
    if g.cols() != n {
        return Err(Error::Shape {
            op: "CssCodePair::new",
            expected: n,
            found: g.cols(),
        });
    }
    if g.rank() != g.rows() {
        return Err(Error::InvalidInput(format!(
            "{gname} does not have full row rank (rank {} < {} rows)",
            g.rank(),
            g.rows()
        )));
    }
    let Some(h) = h else {
        return Ok(g.kernel());
    };
    if h.cols() != n {
        return Err(Error::Shape {
            op: "CssCodePair::new",
            expected: n,
            found: h.cols(),
        });
    }
    if !h.mul(&g.transpose())?.is_zero() {
        return Err(Error::InvalidInput(format!("{hname}·{gname}^T != 0")));
    }
    let k = g.rows();
    if h.rows() != n - k || h.rank() != n - k {
        return Err(Error::InvalidInput(format!(
            "{hname} must have n - k{name} = {} independent rows (has {} rows of rank {})",
            n - k,
            h.rows(),
            h.rank()
        )));
    }
    Ok(h)
}

impl CssCodePair {
    /// Validates the pair. Missing parity checks are derived as kernel bases.
    pub fn new(
        g1: BinMatrix,
        g2: BinMatrix,
        h1: Option<BinMatrix>,
        h2: Option<BinMatrix>,
    ) -> Result<Self> {
        let n = g1.cols();
        let h1 = check_binary_code("1", n, &g1, h1)?;
        let h2 = check_binary_code("2", n, &g2, h2)?;
        Ok(Self { n, g1, g2, h1, h2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k1(&self) -> usize {
        self.g1.rows()
    }

    pub fn k2(&self) -> usize {
        self.g2.rows()
    }

    pub fn g1(&self) -> &BinMatrix {
        &self.g1
    }

    pub fn g2(&self) -> &BinMatrix {
        &self.g2
    }

    pub fn h1(&self) -> &BinMatrix {
        &self.h1
    }

    pub fn h2(&self) -> &BinMatrix {
        &self.h2
    }
}

/// Rows of `z_rows` as Z-type generators followed by rows of `x_rows` as X-type.
fn zx_generators(n: usize, z_rows: &BinMatrix, x_rows: &BinMatrix) -> GeneratorSet {
    let mut gens = Vec::with_capacity(z_rows.rows() + x_rows.rows());
    for r in z_rows.to_rows() {
        gens.push(PauliVector::new(r, crate::gf2::BitVec::zeros(n)).expect("width n"));
    }
    for r in x_rows.to_rows() {
        gens.push(PauliVector::new(crate::gf2::BitVec::zeros(n), r).expect("width n"));
    }
    GeneratorSet::new(n, gens).expect("width n")
}

/// `[[H1, 0], [0, H2]]` in `(Z | X)` layout.
pub fn css_check_matrix(code: &CssCodePair) -> GeneratorSet {
    zx_generators(code.n, &code.h1, &code.h2)
}

/// `[[0, G1], [G2, 0]]` in `(Z | X)` layout, listed as the Z-type rows of `G2`
/// followed by the X-type rows of `G1`.
pub fn css_normalizer(code: &CssCodePair) -> GeneratorSet {
    zx_generators(code.n, &code.g2, &code.g1)
}

/// `c = rank(G1 G2ᵀ) − (k1 + k2 − n)`.
pub fn css_entanglement_g(code: &CssCodePair) -> Result<usize> {
    let r = code.g1.mul(&code.g2.transpose())?.rank() as i64;
    let c = r - (code.k1() as i64 + code.k2() as i64 - code.n as i64);
    usize::try_from(c).map_err(|_| {
        Error::InvalidInput(format!(
            "rank(G1 G2^T) = {r} is below k1 + k2 - n; inputs are inconsistent"
        ))
    })
}

/// `c = rank(H1 H2ᵀ)`.
pub fn css_entanglement_h(code: &CssCodePair) -> usize {
    code.h1
        .mul(&code.h2.transpose())
        .expect("both checks have n columns")
        .rank()
}

/// An additive GF(4)-linear code: generator `G` (`k x n`) and parity check
/// `H` (`(n−k) x n`) with `H Gᵀ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf4Code {
    n: usize,
    g: Gf4Matrix,
    h: Gf4Matrix,
}

impl Gf4Code {
    pub fn new(g: Gf4Matrix, h: Option<Gf4Matrix>) -> Result<Self> {
        let n = g.cols();
        let k = g.rows();
        if g.rank() != k {
            return Err(Error::InvalidInput(format!(
                "G does not have full row rank over GF(4) (rank {} < {k} rows)",
                g.rank()
            )));
        }
        let h = match h {
            None => g.kernel(),
            Some(h) => {
                if h.cols() != n {
                    return Err(Error::Shape {
                        op: "Gf4Code::new",
                        expected: n,
                        found: h.cols(),
                    });
                }
                if !h.mul(&g.transpose())?.is_zero() {
                    return Err(Error::InvalidInput("H·G^T != 0 over GF(4)".into()));
                }
                if h.rows() != n - k || h.rank() != n - k {
                    return Err(Error::InvalidInput(format!(
                        "H must have n - k = {} independent rows (has {} rows of rank {})",
                        n - k,
                        h.rows(),
                        h.rank()
                    )));
                }
                h
            }
        };
        Ok(Self { n, g, h })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.g.rows()
    }

    pub fn g(&self) -> &Gf4Matrix {
        &self.g
    }

    pub fn h(&self) -> &Gf4Matrix {
        &self.h
    }

    /// `tr{H H†} = 0` over the additive span `[ωH; ω̄H]` of the checks, i.e.
    /// the code imports to an unassisted stabilizer code. Checking only the
    /// rows of `H` is not enough: `tr(h h̄')` can vanish while `tr(ω h h̄')`
    /// does not.
    pub fn is_trace_orthogonal(&self) -> bool {
        let s = self
            .h
            .scale(Gf4::OMEGA)
            .vstack(&self.h.scale(Gf4::OMEGA_BAR))
            .expect("same width");
        s.trace_product(&s).expect("same width").is_zero()
    }
}

fn gamma_of_scaled(n: usize, m: &Gf4Matrix) -> GeneratorSet {
    let mut gens = m.scale(Gf4::OMEGA).gamma_rows();
    gens.extend(m.scale(Gf4::OMEGA_BAR).gamma_rows());
    GeneratorSet::new(n, gens).expect("width n")
}

/// `γ([ωH; ω̄H])`: `2(n−k)` generators.
pub fn crss_check_matrix(code: &Gf4Code) -> GeneratorSet {
    gamma_of_scaled(code.n, &code.h)
}

/// `γ([ωG*; ω̄G*])` with `G*` the entrywise conjugate: `2k` generators.
pub fn crss_normalizer(code: &Gf4Code) -> GeneratorSet {
    gamma_of_scaled(code.n, &code.g.conj())
}

/// `c = rank(G G†) − (2k − n)` over GF(4).
pub fn crss_entanglement_g(code: &Gf4Code) -> Result<usize> {
    let r = code.g.mul(&code.g.dagger())?.rank() as i64;
    let c = r - (2 * code.k() as i64 - code.n as i64);
    usize::try_from(c).map_err(|_| {
        Error::InvalidInput(format!(
            "rank(G G^dagger) = {r} is below 2k - n; inputs are inconsistent"
        ))
    })
}

/// `c = rank(H H†)` over GF(4).
pub fn crss_entanglement_h(code: &Gf4Code) -> usize {
    code.h.mul(&code.h.dagger()).expect("H† has n rows").rank()
}

/// One cross-check: two independently computed quantities that must agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub agree: bool,
}

impl FormulaCheck {
    pub fn equal(name: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Self {
            name: name.into(),
            lhs,
            rhs,
            agree: lhs == rhs,
        }
    }
}

/// Result of analyzing a code.
///
/// `m` and `p` are the sizes of the check and normalizer generator lists,
/// `c` the number of symplectic pairs among the checks (ebits), `i` the
/// number of isotropic check generators, `l` the number of symplectic pairs
/// in the normalizer and `k` the number of logical qubits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub kind: CodeKind,
    pub n: usize,
    pub k: i64,
    pub c: usize,
    pub l: usize,
    pub i: usize,
    pub m: usize,
    pub p: usize,
    pub entanglement_assisted: bool,
    pub logical_pairs: Vec<(PauliVector, PauliVector)>,
    pub isotropic_gens: Vec<PauliVector>,
    pub entanglement_pairs: Vec<(PauliVector, PauliVector)>,
    pub formula_checks: Vec<FormulaCheck>,
}

impl CodeReport {
    pub fn all_checks_pass(&self) -> bool {
        self.formula_checks.iter().all(|c| c.agree)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &FormulaCheck> {
        self.formula_checks.iter().filter(|c| !c.agree)
    }
}

/// Checks shared by every analysis.
fn common_checks(
    checks: &GeneratorSet,
    normalizer: &GeneratorSet,
    ds: &SymplecticDecomposition,
    dn: &SymplecticDecomposition,
) -> Vec<FormulaCheck> {
    let (m, p) = (checks.len() as i64, normalizer.len() as i64);
    let (c, i, l) = (
        ds.pair_count() as i64,
        ds.isotropic_count() as i64,
        dn.pair_count() as i64,
    );
    let iso_s = ds.isotropic_set().to_matrix();
    let iso_n = dn.isotropic_set().to_matrix();
    let same_span = iso_s.row_space_equal(&iso_n).expect("both have 2n columns");
    vec![
        FormulaCheck::equal("m = i + 2c", m, i + 2 * c),
        FormulaCheck::equal("p = i + 2l", p, i + 2 * l),
        FormulaCheck::equal("rank(Omega_S)/2 = c", pair_count(checks) as i64, c),
        FormulaCheck::equal("rank(Omega_N)/2 = l", pair_count(normalizer) as i64, l),
        FormulaCheck {
            name: "span(S_I from S) = span(S_I from N(S))".into(),
            lhs: iso_s.rank() as i64,
            rhs: iso_n.rank() as i64,
            agree: same_span,
        },
    ]
}

#[allow(clippy::too_many_arguments)]
fn build_report(
    kind: CodeKind,
    n: usize,
    k: i64,
    ds: SymplecticDecomposition,
    dn: SymplecticDecomposition,
    m: usize,
    p: usize,
    formula_checks: Vec<FormulaCheck>,
) -> CodeReport {
    let c = ds.pair_count();
    CodeReport {
        kind,
        n,
        k,
        c,
        l: dn.pair_count(),
        i: ds.isotropic_count(),
        m,
        p,
        entanglement_assisted: c > 0,
        logical_pairs: dn.pairs,
        isotropic_gens: dn.isotropic,
        entanglement_pairs: ds.pairs,
        formula_checks,
    }
}

pub fn analyze_css(code: &CssCodePair) -> CodeReport {
    let checks = css_check_matrix(code);
    let normalizer = css_normalizer(code);
    let ds = sgsop(&checks);
    let dn = sgsop(&normalizer);

    let (n, k1, k2) = (code.n as i64, code.k1() as i64, code.k2() as i64);
    let c = ds.pair_count() as i64;
    let k = k1 + k2 - n + c;
    let rank_g = code.g1.mul(&code.g2.transpose()).expect("width n").rank() as i64;

    let mut fc = vec![
        FormulaCheck::equal("rank(G1 G2^T) = k1 + k2 - n + c", rank_g, k),
        FormulaCheck::equal("rank(H1 H2^T) = c", css_entanglement_h(code) as i64, c),
        FormulaCheck::equal("l = k1 + k2 - n + c", dn.pair_count() as i64, k),
    ];
    fc.extend(common_checks(&checks, &normalizer, &ds, &dn));
    let (m, p) = (checks.len(), normalizer.len());
    build_report(CodeKind::Css, code.n, k, ds, dn, m, p, fc)
}

pub fn analyze_crss(code: &Gf4Code) -> CodeReport {
    let checks = crss_check_matrix(code);
    let normalizer = crss_normalizer(code);
    let ds = sgsop(&checks);
    let dn = sgsop(&normalizer);

    let (n, kc) = (code.n as i64, code.k() as i64);
    let c = ds.pair_count() as i64;
    let k = 2 * kc - n + c;
    let rank_g = code.g.mul(&code.g.dagger()).expect("width n").rank() as i64;

    let mut fc = vec![
        FormulaCheck::equal("rank(G G^dagger) = 2k - n + c", rank_g, k),
        FormulaCheck::equal("rank(H H^dagger) = c", crss_entanglement_h(code) as i64, c),
        FormulaCheck::equal("l = 2k - n + c", dn.pair_count() as i64, k),
    ];
    fc.extend(common_checks(&checks, &normalizer, &ds, &dn));
    let (m, p) = (checks.len(), normalizer.len());
    build_report(CodeKind::Crss, code.n, k, ds, dn, m, p, fc)
}

/// Every Pauli commuting with all of `gs`, as a basis of its binary kernel.
pub fn centralizer(gs: &GeneratorSet) -> GeneratorSet {
    let n = gs.num_qubits();
    // v commutes with (z|x) iff x·v_z + z·v_x = 0
    let swapped = gs
        .x_block()
        .hstack(&gs.z_block())
        .expect("blocks have equal row counts");
    let basis = GeneratorSet::from_matrix(&swapped.kernel()).expect("kernel has 2n columns");
    debug_assert_eq!(basis.num_qubits(), n);
    basis
}

/// Analyzes an arbitrary generator list. Without an explicit normalizer the
/// full centralizer of `gs` is used.
pub fn analyze_stabilizer(
    gs: &GeneratorSet,
    normalizer: Option<&GeneratorSet>,
) -> Result<CodeReport> {
    let n = gs.num_qubits();
    let normalizer = match normalizer {
        Some(nz) if nz.num_qubits() != n && !nz.is_empty() => {
            return Err(Error::Shape {
                op: "analyze_stabilizer",
                expected: n,
                found: nz.num_qubits(),
            })
        }
        Some(nz) => GeneratorSet::new(n, nz.gens().to_vec())?,
        None => centralizer(gs),
    };
    let ds = sgsop(gs);
    for (a, g) in normalizer.gens().iter().enumerate() {
        for (b, s) in ds.isotropic.iter().enumerate() {
            if g.anticommutes_unchecked(s) {
                return Err(Error::InvalidInput(format!(
                    "normalizer generator {} ({g}) anticommutes with isotropic generator {} ({s})",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    let dn = sgsop(&normalizer);

    let c = ds.pair_count() as i64;
    let l = dn.pair_count() as i64;
    let logical = n as i64 - gs.rank() as i64 + c;
    let mut fc = vec![FormulaCheck::equal("l = n - rank(S) + c", l, logical)];
    fc.extend(common_checks(gs, &normalizer, &ds, &dn));
    let (m, p) = (gs.len(), normalizer.len());
    Ok(build_report(CodeKind::Stabilizer, n, l, ds, dn, m, p, fc))
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: Gf4 = Gf4::OMEGA;
    const WB: Gf4 = Gf4::OMEGA_BAR;
    const O: Gf4 = Gf4::ONE;
    const Z: Gf4 = Gf4::ZERO;

    fn hamming_h() -> BinMatrix {
        BinMatrix::from_rows(&[
            [0u8, 0, 0, 1, 1, 1, 1],
            [0, 1, 1, 0, 0, 1, 1],
            [1, 0, 1, 0, 1, 0, 1],
        ])
    }

    fn steane() -> CssCodePair {
        let h = hamming_h();
        let g = h.kernel();
        CssCodePair::new(g.clone(), g, Some(h.clone()), Some(h)).unwrap()
    }

    fn set(lines: &[&str]) -> GeneratorSet {
        GeneratorSet::parse(lines, lines.first().map_or(0, |l| l.len())).unwrap()
    }

    #[test]
    fn steane_check_matrix_commutes() {
        let s = css_check_matrix(&steane());
        assert_eq!(s.len(), 6);
        assert!(s.omega().is_zero());
    }

    #[test]
    fn small_check_matrices() {
        let rep = BinMatrix::from_rows(&[[1u8, 1]]);
        let code =
            CssCodePair::new(rep.clone(), rep.clone(), Some(rep.clone()), Some(rep)).unwrap();
        let s = css_check_matrix(&code);
        assert_eq!(s.to_string(), "ZZ\nXX");
        assert!(s.is_abelian());

        let code = ea_pair();
        let s = css_check_matrix(&code);
        assert_eq!(s.to_string(), "ZI\nXI");
        assert!(!s.is_abelian());
    }

    /// H1 = H2 = [1 0], G1 = G2 = [0 1].
    fn ea_pair() -> CssCodePair {
        let h = BinMatrix::from_rows(&[[1u8, 0]]);
        let g = BinMatrix::from_rows(&[[0u8, 1]]);
        CssCodePair::new(g.clone(), g, Some(h.clone()), Some(h)).unwrap()
    }

    #[test]
    fn css_normalizer_examples() {
        let code = steane();
        let nz = css_normalizer(&code);
        assert_eq!(nz.len(), 8);
        assert_eq!(nz.rank(), 8);
        let s = css_check_matrix(&code);
        for g in &nz {
            for h in &s {
                assert!(g.commutes_with(h).unwrap());
            }
        }
        let one = BinMatrix::from_rows(&[[1u8]]);
        let code = CssCodePair::new(one.clone(), one, None, None).unwrap();
        assert_eq!(css_normalizer(&code).to_string(), "Z\nX");
    }

    #[test]
    fn rank_deficient_generators_rejected() {
        let g = BinMatrix::from_rows(&[[1u8, 1, 0], [1, 1, 0]]);
        let ok = BinMatrix::from_rows(&[[1u8, 0, 0]]);
        assert!(matches!(
            CssCodePair::new(g, ok, None, None),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn nonorthogonal_parity_check_rejected() {
        let g = BinMatrix::from_rows(&[[1u8, 0]]);
        let h = BinMatrix::from_rows(&[[1u8, 0]]);
        let err = CssCodePair::new(g.clone(), g, Some(h), None).unwrap_err();
        assert_eq!(err, Error::InvalidInput("H1·G1^T != 0".into()));
    }

    #[test]
    fn analyze_steane() {
        let r = analyze_css(&steane());
        assert_eq!((r.k, r.c, r.l, r.i), (1, 0, 1, 6));
        assert_eq!(r.logical_pairs.len(), 1);
        assert_eq!(r.isotropic_gens.len(), 6);
        assert!(r.all_checks_pass(), "{:?}", r.formula_checks);
        let s = css_check_matrix(&steane());
        let (a, b) = &r.logical_pairs[0];
        assert!(a.symplectic_product(b).unwrap());
        for g in &s {
            assert!(a.commutes_with(g).unwrap() && b.commutes_with(g).unwrap());
        }
    }

    #[test]
    fn analyze_repetition_pair_has_no_logical_qubit() {
        let rep = BinMatrix::from_rows(&[[1u8, 1]]);
        let code = CssCodePair::new(rep.clone(), rep, None, None).unwrap();
        let r = analyze_css(&code);
        assert_eq!((r.k, r.c), (0, 0));
        assert!(r.all_checks_pass());
    }

    #[test]
    fn analyze_single_free_qubit() {
        let one = BinMatrix::from_rows(&[[1u8]]);
        let code = CssCodePair::new(one.clone(), one, None, None).unwrap();
        assert_eq!(code.h1().rows(), 0);
        let r = analyze_css(&code);
        assert_eq!((r.k, r.c), (1, 0));
        assert!(r.all_checks_pass());
    }

    #[test]
    fn css_entanglement_examples() {
        assert_eq!(css_entanglement_g(&steane()).unwrap(), 0);
        assert_eq!(css_entanglement_h(&steane()), 0);
        let ea = ea_pair();
        assert_eq!(css_entanglement_g(&ea).unwrap(), 1);
        assert_eq!(css_entanglement_h(&ea), 1);
        assert_eq!(sgsop(&css_check_matrix(&ea)).pair_count(), 1);
        let r = analyze_css(&ea);
        assert_eq!((r.k, r.c, r.l, r.i), (1, 1, 1, 0));
        assert!(r.entanglement_assisted);
        assert!(r.all_checks_pass(), "{:?}", r.formula_checks);

        // k2 = n: H2 is empty
        let g1 = BinMatrix::from_rows(&[[1u8, 1, 0]]);
        let code = CssCodePair::new(g1, BinMatrix::identity(3), None, None).unwrap();
        assert_eq!(code.h2().rows(), 0);
        assert_eq!(css_entanglement_h(&code), 0);
        assert_eq!(css_entanglement_g(&code).unwrap(), 0);
    }

    #[test]
    fn crss_check_matrix_example() {
        let code = Gf4Code::new(
            Gf4Matrix::from_rows(&[[O, O]]),
            Some(Gf4Matrix::from_rows(&[[W, W]])),
        );
        // H·Gᵀ = ω + ω = 0
        let code = code.unwrap();
        let s = crss_check_matrix(&code);
        // ω·(ω,ω) = (ω̄,ω̄) → XX ; ω̄·(ω,ω) = (1,1) → YY
        assert_eq!(s.to_string(), "XX\nYY");
    }

    #[test]
    fn crss_single_free_qubit() {
        let code = Gf4Code::new(Gf4Matrix::from_rows(&[[O]]), None).unwrap();
        assert_eq!(code.h().rows(), 0);
        let nz = crss_normalizer(&code);
        assert_eq!(nz.len(), 2);
        assert!(nz.gens()[0].symplectic_product(&nz.gens()[1]).unwrap());
        assert_eq!(crss_entanglement_g(&code).unwrap(), 0);
        let r = analyze_crss(&code);
        assert_eq!((r.k, r.c, r.l), (1, 0, 1));
        assert!(r.all_checks_pass());
        assert!(crss_normalizer(&Gf4Code::new(Gf4Matrix::zeros(0, 3), None).unwrap()).is_empty());
    }

    #[test]
    fn crss_omega_scalar_examples() {
        let code = Gf4Code::new(Gf4Matrix::from_rows(&[[W]]), None).unwrap();
        assert_eq!(crss_entanglement_g(&code).unwrap(), 0);
        // H = [ω] on one qubit needs G with H Gᵀ = 0, i.e. k = 0
        let code =
            Gf4Code::new(Gf4Matrix::zeros(0, 1), Some(Gf4Matrix::from_rows(&[[W]]))).unwrap();
        assert_eq!(crss_entanglement_h(&code), 1);
        let r = analyze_crss(&code);
        assert_eq!((r.c, r.k), (1, 0));
        assert!(r.all_checks_pass(), "{:?}", r.formula_checks);
    }

    fn five_qubit_gf4() -> Gf4Code {
        let h = Gf4Matrix::from_rows(&[[O, O, O, O, Z], [Z, O, W, WB, O]]);
        let g = h.kernel();
        Gf4Code::new(g, Some(h)).unwrap()
    }

    #[test]
    fn five_qubit_from_gf4() {
        let code = five_qubit_gf4();
        assert!(code.is_trace_orthogonal());
        assert_eq!(code.k(), 3);
        let r = analyze_crss(&code);
        assert_eq!((r.k, r.c, r.l, r.i), (1, 0, 1, 4));
        assert!(r.all_checks_pass(), "{:?}", r.formula_checks);
        assert_eq!(crss_entanglement_h(&code), 0);
        assert_eq!(crss_entanglement_g(&code).unwrap(), 0);
    }

    #[test]
    fn trace_orthogonality_covers_scalar_multiples() {
        // tr(h h̄) = tr(1) = 0 for this row, but ωh and ω̄h anticommute.
        let h = Gf4Matrix::from_rows(&[[O, Z]]);
        let code = Gf4Code::new(h.kernel(), Some(h)).unwrap();
        assert!(!code.is_trace_orthogonal());
        assert_eq!(crss_entanglement_h(&code), 1);
    }

    #[test]
    fn stabilizer_examples() {
        let r = analyze_stabilizer(&set(&["ZZI", "IZZ"]), None).unwrap();
        assert!(!r.entanglement_assisted);
        assert_eq!((r.c, r.k, r.i), (0, 1, 2));
        assert!(r.all_checks_pass(), "{:?}", r.formula_checks);

        let r = analyze_stabilizer(&set(&["XI", "ZI"]), None).unwrap();
        assert_eq!((r.c, r.i, r.k), (1, 0, 1));
        assert!(r.all_checks_pass(), "{:?}", r.formula_checks);

        let s = set(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let nz = set(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "XXXXX", "ZZZZZ"]);
        let r = analyze_stabilizer(&s, Some(&nz)).unwrap();
        assert_eq!((r.k, r.l, r.i, r.p, r.m), (1, 1, 4, 6, 4));
        assert!(r.all_checks_pass(), "{:?}", r.formula_checks);
        let derived = analyze_stabilizer(&s, None).unwrap();
        assert_eq!((derived.k, derived.l, derived.i, derived.p), (1, 1, 4, 6));
    }

    #[test]
    fn inconsistent_normalizer_rejected() {
        let s = set(&["ZZ"]);
        let nz = set(&["ZZ", "XI"]);
        assert!(matches!(
            analyze_stabilizer(&s, Some(&nz)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn incomplete_normalizer_fails_a_check() {
        let s = set(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let nz = set(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "XXXXX"]);
        let r = analyze_stabilizer(&s, Some(&nz)).unwrap();
        assert!(!r.all_checks_pass());
        assert!(r.failed_checks().any(|c| c.name == "p = i + 2l"));
    }

    #[test]
    fn centralizer_of_empty_set_is_everything() {
        let nz = centralizer(&GeneratorSet::empty(3));
        assert_eq!(nz.len(), 6);
        assert_eq!(sgsop(&nz).pair_count(), 3);
    }
}
