//! Subcommand implementations. Each returns a serializable output value;
//! rendering to text or JSON happens in [`crate::render`].

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use symplectic_qec::codes::{
    analyze_crss, analyze_css, analyze_stabilizer, crss_check_matrix, crss_entanglement_g,
    crss_entanglement_h, crss_normalizer, css_check_matrix, css_entanglement_g, css_entanglement_h,
    css_normalizer, CodeReport, CssCodePair, Gf4Code,
};
use symplectic_qec::oracle::{self, Check, VerificationReport};
use symplectic_qec::{sgsop, GeneratorSet, PauliVector, SymplecticDecomposition};

use crate::codefile::CodeFile;
use crate::error::CliError;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub schema: u32,
    pub command: String,
    pub all_checks_pass: bool,
    pub report: CodeReport,
}

fn css_code(file: &CodeFile) -> Result<Option<CssCodePair>, CliError> {
    match file {
        CodeFile::Css { g1, g2, h1, h2 } => Ok(Some(CssCodePair::new(
            g1.clone(),
            g2.clone(),
            h1.clone(),
            h2.clone(),
        )?)),
        _ => Ok(None),
    }
}

fn gf4_code(file: &CodeFile) -> Result<Option<Gf4Code>, CliError> {
    match file {
        CodeFile::Crss { g, h } => Ok(Some(Gf4Code::new(g.clone(), h.clone())?)),
        _ => Ok(None),
    }
}

pub fn analyze(file: &CodeFile) -> Result<AnalyzeOutput, CliError> {
    let report = match file {
        CodeFile::Pauli {
            generators,
            normalizer,
        } => analyze_stabilizer(generators, normalizer.as_ref())?,
        CodeFile::Css { .. } => analyze_css(&css_code(file)?.expect("css file")),
        CodeFile::Crss { .. } => analyze_crss(&gf4_code(file)?.expect("crss file")),
    };
    Ok(AnalyzeOutput {
        schema: SCHEMA,
        command: "analyze".into(),
        all_checks_pass: report.all_checks_pass(),
        report,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SgsopOutput {
    pub schema: u32,
    pub command: String,
    pub input: Vec<PauliVector>,
    pub decomposition: SymplecticDecomposition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replay: Option<Vec<PauliVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub round_trip: Option<bool>,
}

pub fn run_sgsop(file: &CodeFile, reverse: bool) -> Result<SgsopOutput, CliError> {
    let CodeFile::Pauli { generators, .. } = file else {
        return Err(CliError::Validation(
            "sgsop expects a pauli file (one Pauli string per line)".into(),
        ));
    };
    let decomposition = sgsop(generators);
    let (replay, round_trip) = if reverse {
        let back = decomposition.replay_inverse()?;
        let exact = back == *generators;
        (Some(back.into_gens()), Some(exact))
    } else {
        (None, None)
    };
    Ok(SgsopOutput {
        schema: SCHEMA,
        command: "sgsop".into(),
        input: generators.gens().to_vec(),
        decomposition,
        replay,
        round_trip,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum Method {
    #[value(name = "G")]
    #[serde(rename = "G")]
    G,
    #[value(name = "H")]
    #[serde(rename = "H")]
    H,
    #[value(name = "both")]
    #[serde(rename = "both")]
    Both,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: String,
    pub formula: String,
    pub c: usize,
    pub median_us: f64,
    pub repeats: usize,
    pub h_derived: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntanglementOutput {
    pub schema: u32,
    pub command: String,
    pub kind: String,
    pub n: usize,
    pub k: Vec<usize>,
    pub methods: Vec<MethodResult>,
    pub sgsop_c: usize,
    pub agree: bool,
}

fn median_micros<T>(repeats: usize, mut f: impl FnMut() -> T) -> (T, f64) {
    let repeats = repeats.max(1);
    let mut times = Vec::with_capacity(repeats);
    let mut last = None;
    for _ in 0..repeats {
        let start = Instant::now();
        let v = f();
        times.push(start.elapsed().as_secs_f64() * 1e6);
        last = Some(v);
    }
    times.sort_by(f64::total_cmp);
    let mid = times.len() / 2;
    let median = if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2.0
    };
    (last.expect("at least one run"), median)
}

pub fn entanglement(
    file: &CodeFile,
    method: Method,
    repeats: usize,
) -> Result<EntanglementOutput, CliError> {
    let want_g = matches!(method, Method::G | Method::Both);
    let want_h = matches!(method, Method::H | Method::Both);
    let mut methods = Vec::new();
    let (kind, n, k, sgsop_c);
    match file {
        CodeFile::Css { h1, h2, .. } => {
            let code = css_code(file)?.expect("css file");
            let derived = h1.is_none() || h2.is_none();
            if want_g {
                let (c, t) = median_micros(repeats, || css_entanglement_g(&code));
                methods.push(MethodResult {
                    method: "G".into(),
                    formula: "c = rank(G1 G2^T) - (k1 + k2 - n)".into(),
                    c: c?,
                    median_us: t,
                    repeats: repeats.max(1),
                    h_derived: false,
                });
            }
            if want_h {
                let (c, t) = median_micros(repeats, || css_entanglement_h(&code));
                methods.push(MethodResult {
                    method: "H".into(),
                    formula: "c = rank(H1 H2^T)".into(),
                    c,
                    median_us: t,
                    repeats: repeats.max(1),
                    h_derived: derived,
                });
            }
            kind = "css";
            n = code.n();
            k = vec![code.k1(), code.k2()];
            sgsop_c = sgsop(&css_check_matrix(&code)).pair_count();
        }
        CodeFile::Crss { h, .. } => {
            let code = gf4_code(file)?.expect("crss file");
            if want_g {
                let (c, t) = median_micros(repeats, || crss_entanglement_g(&code));
                methods.push(MethodResult {
                    method: "G".into(),
                    formula: "c = rank(G G^dagger) - (2k - n)".into(),
                    c: c?,
                    median_us: t,
                    repeats: repeats.max(1),
                    h_derived: false,
                });
            }
            if want_h {
                let (c, t) = median_micros(repeats, || crss_entanglement_h(&code));
                methods.push(MethodResult {
                    method: "H".into(),
                    formula: "c = rank(H H^dagger)".into(),
                    c,
                    median_us: t,
                    repeats: repeats.max(1),
                    h_derived: h.is_none(),
                });
            }
            kind = "crss";
            n = code.n();
            k = vec![code.k()];
            sgsop_c = sgsop(&crss_check_matrix(&code)).pair_count();
        }
        CodeFile::Pauli { .. } => {
            return Err(CliError::Validation(
                "entanglement formulas need a css or crss file".into(),
            ))
        }
    }
    let agree = methods.iter().all(|m| m.c == sgsop_c);
    Ok(EntanglementOutput {
        schema: SCHEMA,
        command: "entanglement".into(),
        kind: kind.into(),
        n,
        k,
        methods,
        sgsop_c,
        agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    pub name: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub schema: u32,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub trials: usize,
    pub all_pass: bool,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<Failure>,
}

#[derive(Default)]
struct Tally {
    summary: Vec<CheckSummary>,
    failures: Vec<Failure>,
}

impl Tally {
    fn add(&mut self, trial: Option<usize>, report: &VerificationReport) {
        for check in &report.checks {
            let entry = match self.summary.iter().position(|s| s.name == check.name) {
                Some(i) => &mut self.summary[i],
                None => {
                    self.summary.push(CheckSummary {
                        name: check.name.clone(),
                        passed: 0,
                        failed: 0,
                    });
                    self.summary.last_mut().expect("just pushed")
                }
            };
            if check.pass {
                entry.passed += 1;
            } else {
                entry.failed += 1;
                self.failures.push(Failure {
                    trial,
                    name: check.name.clone(),
                    expected: check.expected.clone(),
                    actual: check.actual.clone(),
                });
            }
        }
    }

    fn finish(self, seed: Option<u64>, trials: usize) -> VerifyOutput {
        VerifyOutput {
            schema: SCHEMA,
            command: "verify".into(),
            seed,
            trials,
            all_pass: self.failures.is_empty(),
            checks: self.summary,
            failures: self.failures,
        }
    }
}

fn prefixed(prefix: &str, report: VerificationReport) -> VerificationReport {
    VerificationReport {
        seed: report.seed,
        checks: report
            .checks
            .into_iter()
            .map(|c| Check {
                name: format!("{prefix}: {}", c.name),
                ..c
            })
            .collect(),
    }
}

fn decomposition_checks(prefix: &str, gs: &GeneratorSet) -> VerificationReport {
    prefixed(prefix, oracle::verify_decomposition(gs, &sgsop(gs)))
}

fn formula_checks(prefix: &str, report: &CodeReport) -> VerificationReport {
    let mut out = VerificationReport::default();
    for f in &report.formula_checks {
        out.push(Check {
            name: format!("{prefix}: {}", f.name),
            expected: f.rhs.to_string(),
            actual: f.lhs.to_string(),
            pass: f.agree,
        });
    }
    out
}

/// Checks a saved `sgsop --format json` dump.
fn verify_dump(source: &str) -> Result<VerificationReport, CliError> {
    let dump: SgsopOutput = serde_json::from_str(source).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: format!("invalid decomposition dump: {e}"),
    })?;
    let n = dump.decomposition.num_qubits;
    let input = GeneratorSet::new(n, dump.input)
        .map_err(|e| CliError::Validation(format!("decomposition dump: {e}")))?;
    Ok(oracle::verify_decomposition(&input, &dump.decomposition))
}

fn verify_code_file(file: &CodeFile) -> Result<VerificationReport, CliError> {
    let mut report = VerificationReport::default();
    match file {
        CodeFile::Pauli {
            generators,
            normalizer,
        } => {
            report.extend(decomposition_checks("S", generators));
            if let Some(nz) = normalizer {
                report.extend(decomposition_checks("N(S)", nz));
            }
            let analysis = analyze_stabilizer(generators, normalizer.as_ref())?;
            report.extend(formula_checks("analysis", &analysis));
        }
        CodeFile::Css { .. } => {
            let code = css_code(file)?.expect("css file");
            report.extend(decomposition_checks("S", &css_check_matrix(&code)));
            report.extend(decomposition_checks("N(S)", &css_normalizer(&code)));
            report.extend(formula_checks("analysis", &analyze_css(&code)));
        }
        CodeFile::Crss { .. } => {
            let code = gf4_code(file)?.expect("crss file");
            report.extend(decomposition_checks("S", &crss_check_matrix(&code)));
            report.extend(decomposition_checks("N(S)", &crss_normalizer(&code)));
            report.extend(formula_checks("analysis", &analyze_crss(&code)));
        }
    }
    Ok(report)
}

/// Verifies either a code file or a decomposition dump (detected by a leading `{`).
pub fn verify_source(source: &str) -> Result<VerifyOutput, CliError> {
    let report = if source.trim_start().starts_with('{') {
        verify_dump(source)?
    } else {
        verify_code_file(&crate::codefile::parse_code_file(source)?)?
    };
    let mut tally = Tally::default();
    tally.add(None, &report);
    Ok(tally.finish(None, 1))
}

/// Randomized oracle sweep on `n` qubits; trial seeds are drawn from `seed`.
pub fn verify_random(n: usize, trials: usize, seed: u64) -> Result<VerifyOutput, CliError> {
    if n == 0 {
        return Err(CliError::Validation("--random needs n >= 1".into()));
    }
    let mut master = oracle::rng_from_seed(seed);
    let mut tally = Tally::default();
    let gen_err = |e: symplectic_qec::Error| CliError::Validation(e.to_string());
    for trial in 0..trials {
        let trial_seed: u64 = master.gen();
        let mut rng = oracle::rng_from_seed(trial_seed);
        let mut report = VerificationReport::default();

        let m = rng.gen_range(0..=2 * n);
        let gs = oracle::random_generator_set(&mut rng, n, m);
        report.extend(decomposition_checks("sgsop", &gs));

        let (k1, k2) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let css = oracle::random_css(n, k1, k2, rng.gen()).map_err(gen_err)?;
        report.extend(formula_checks("css", &analyze_css(&css)));

        let k = rng.gen_range(0..=n);
        let crss = oracle::random_crss(n, k, rng.gen()).map_err(gen_err)?;
        report.extend(formula_checks("crss", &analyze_crss(&crss)));

        let iso = rng.gen_range(0..=n);
        let ebits = rng.gen_range(0..=n - iso);
        let (checks, normalizer) =
            oracle::random_stabilizer(n, iso, ebits, rng.gen()).map_err(gen_err)?;
        let analysis = analyze_stabilizer(&checks, Some(&normalizer))?;
        report.extend(formula_checks("stabilizer", &analysis));

        tally.add(Some(trial), &report);
    }
    Ok(tally.finish(Some(seed), trials))
}
