//! Plain-text code description files.
//!
//! One matrix row per line. A line `NAME:` opens a section, `#` starts a
//! comment, blank lines are ignored. An optional first directive
//! `kind: pauli|css|crss` fixes the kind; otherwise it is inferred from the
//! section names (`G1`/`G2`/`H1`/`H2` → css, `G`/`H` → crss, anything else →
//! pauli). In pauli files rows before any section, or under `STABILIZER:`,
//! are the generators; `NORMALIZER:` is optional.

use std::collections::BTreeMap;

use symplectic_qec::{BinMatrix, GeneratorSet, Gf4Matrix, PauliVector};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Pauli,
    Css,
    Crss,
}

impl FileKind {
    fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pauli" | "stabilizer" => Some(FileKind::Pauli),
            "css" => Some(FileKind::Css),
            "crss" | "gf4" => Some(FileKind::Crss),
            _ => None,
        }
    }

    fn sections(self) -> &'static [&'static str] {
        match self {
            FileKind::Pauli => &["STABILIZER", "NORMALIZER"],
            FileKind::Css => &["G1", "G2", "H1", "H2"],
            FileKind::Crss => &["G", "H"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeFile {
    Pauli {
        generators: GeneratorSet,
        normalizer: Option<GeneratorSet>,
    },
    Css {
        g1: BinMatrix,
        g2: BinMatrix,
        h1: Option<BinMatrix>,
        h2: Option<BinMatrix>,
    },
    Crss {
        g: Gf4Matrix,
        h: Option<Gf4Matrix>,
    },
}

impl CodeFile {
    pub fn kind(&self) -> FileKind {
        match self {
            CodeFile::Pauli { .. } => FileKind::Pauli,
            CodeFile::Css { .. } => FileKind::Css,
            CodeFile::Crss { .. } => FileKind::Crss,
        }
    }
}

struct Row {
    line: usize,
    text: String,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn section_name(text: &str) -> Option<&str> {
    let name = text.strip_suffix(':')?.trim();
    (!name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'))
        .then_some(name)
}

pub fn parse_code_file(source: &str) -> Result<CodeFile, CliError> {
    let mut explicit_kind = None;
    let mut current = String::new();
    let mut sections: BTreeMap<String, Vec<Row>> = BTreeMap::new();
    let mut seen_content = false;

    for (idx, raw) in source.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text
            .strip_prefix("kind:")
            .or_else(|| text.strip_prefix("KIND:"))
        {
            if seen_content {
                return Err(parse_error(line, 1, "kind directive must come first"));
            }
            let kind = FileKind::parse(rest.trim())
                .ok_or_else(|| parse_error(line, 6, format!("unknown kind {:?}", rest.trim())))?;
            explicit_kind = Some(kind);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if let Some(name) = section_name(text) {
            current = name.to_ascii_uppercase();
            if sections.contains_key(&current) {
                return Err(parse_error(line, 1, format!("duplicate section {name}")));
            }
            sections.insert(current.clone(), Vec::new());
            continue;
        }
        sections.entry(current.clone()).or_default().push(Row {
            line,
            text: text.chars().filter(|c| !c.is_whitespace()).collect(),
        });
    }

    let kind = explicit_kind.unwrap_or_else(|| {
        if sections
            .keys()
            .any(|k| ["G1", "G2", "H1", "H2"].contains(&k.as_str()))
        {
            FileKind::Css
        } else if sections.keys().any(|k| k == "G" || k == "H") {
            FileKind::Crss
        } else {
            FileKind::Pauli
        }
    });

    for (name, rows) in &sections {
        let allowed =
            name.is_empty() && kind == FileKind::Pauli || kind.sections().contains(&name.as_str());
        if !allowed {
            let line = rows.first().map_or(1, |r| r.line);
            let what = if name.is_empty() {
                "rows outside a section".to_string()
            } else {
                format!("section {name}")
            };
            return Err(parse_error(
                line,
                1,
                format!("{what} not valid in a {kind:?} file"),
            ));
        }
    }

    // One width for every row in the file.
    let mut width: Option<(usize, usize)> = None;
    for rows in sections.values() {
        for r in rows {
            let w = r.text.chars().count();
            match width {
                None => width = Some((w, r.line)),
                Some((w0, l0)) if w0 != w => {
                    return Err(parse_error(
                        r.line,
                        1,
                        format!("row has width {w}, but line {l0} has width {w0}"),
                    ))
                }
                _ => {}
            }
        }
    }
    let n = width.map_or(0, |(w, _)| w);

    match kind {
        FileKind::Pauli => {
            if sections.contains_key("") && sections.contains_key("STABILIZER") {
                return Err(parse_error(
                    1,
                    1,
                    "generators given both before and under STABILIZER:",
                ));
            }
            let gens = sections
                .remove("")
                .or_else(|| sections.remove("STABILIZER"))
                .unwrap_or_default();
            let generators = pauli_rows(&gens, n)?;
            let normalizer = sections
                .remove("NORMALIZER")
                .map(|rows| pauli_rows(&rows, n))
                .transpose()?;
            Ok(CodeFile::Pauli {
                generators,
                normalizer,
            })
        }
        FileKind::Css => {
            let mut take = |name: &str| sections.remove(name).map(|rows| binary_rows(&rows, n));
            let g1 =
                take("G1").ok_or_else(|| parse_error(1, 1, "css file needs a G1: section"))??;
            let g2 =
                take("G2").ok_or_else(|| parse_error(1, 1, "css file needs a G2: section"))??;
            let h1 = take("H1").transpose()?;
            let h2 = take("H2").transpose()?;
            Ok(CodeFile::Css { g1, g2, h1, h2 })
        }
        FileKind::Crss => {
            let mut take = |name: &str| sections.remove(name).map(|rows| gf4_rows(&rows, n));
            let g =
                take("G").ok_or_else(|| parse_error(1, 1, "crss file needs a G: section"))??;
            let h = take("H").transpose()?;
            Ok(CodeFile::Crss { g, h })
        }
    }
}

fn pauli_rows(rows: &[Row], n: usize) -> Result<GeneratorSet, CliError> {
    let gens = rows
        .iter()
        .map(|r| {
            r.text.parse::<PauliVector>().map_err(|e| match e {
                symplectic_qec::Error::Parse { position, found } => parse_error(
                    r.line,
                    position,
                    format!("invalid Pauli letter {found:?} (expected I, X, Y or Z)"),
                ),
                other => parse_error(r.line, 1, other.to_string()),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeneratorSet::new(n, gens).expect("widths checked"))
}

fn binary_rows(rows: &[Row], n: usize) -> Result<BinMatrix, CliError> {
    let mut m = BinMatrix::zeros(rows.len(), n);
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in r.text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => m.set(i, j, true),
                other => {
                    return Err(parse_error(
                        r.line,
                        j + 1,
                        format!("invalid binary digit {other:?}"),
                    ))
                }
            }
        }
    }
    Ok(m)
}

fn gf4_rows(rows: &[Row], n: usize) -> Result<Gf4Matrix, CliError> {
    let parsed = rows
        .iter()
        .map(|r| {
            Gf4Matrix::parse_row(&r.text).map_err(|e| match e {
                symplectic_qec::Error::Parse { position, found } => parse_error(
                    r.line,
                    position,
                    format!("invalid GF(4) symbol {found:?} (expected 0, 1, w or W)"),
                ),
                other => parse_error(r.line, 1, other.to_string()),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Gf4Matrix::from_rows_with_cols(n, &parsed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_file_with_normalizer() {
        let src = "# five-qubit code\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n\nNORMALIZER:\nXXXXX\nZZZZZ # logical\n";
        let CodeFile::Pauli {
            generators,
            normalizer,
        } = parse_code_file(src).unwrap()
        else {
            panic!("expected pauli kind");
        };
        assert_eq!(generators.len(), 4);
        assert_eq!(normalizer.unwrap().len(), 2);
    }

    #[test]
    fn empty_file_is_an_empty_pauli_set() {
        let f = parse_code_file("# nothing\n\n").unwrap();
        assert_eq!(
            f,
            CodeFile::Pauli {
                generators: GeneratorSet::empty(0),
                normalizer: None
            }
        );
    }

    #[test]
    fn css_and_crss_inference() {
        let css = parse_code_file("G1:\n01\nG2:\n0 1\nH1:\n10\n").unwrap();
        assert_eq!(css.kind(), FileKind::Css);
        let CodeFile::Css { h1, h2, .. } = css else {
            unreachable!()
        };
        assert!(h1.is_some() && h2.is_none());
        let crss = parse_code_file("G:\n1wW0\n").unwrap();
        assert_eq!(crss.kind(), FileKind::Crss);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_code_file("XZ\nXQ\n").unwrap_err();
        assert!(
            matches!(
                err,
                CliError::Parse {
                    line: 2,
                    column: 2,
                    ..
                }
            ),
            "{err:?}"
        );
        let err = parse_code_file("kind: css\nG1:\n101\nG2:\n12\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 5, .. }), "{err:?}");
        let err = parse_code_file("G1:\n101\nG2:\n1011\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 4, .. }), "{err:?}");
        let err = parse_code_file("G1:\n101\n").unwrap_err();
        assert!(err.to_string().contains("G2"), "{err}");
        let err = parse_code_file("kind: pauli\nG:\nXX\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 3, .. }), "{err:?}");
        let err = parse_code_file("kind: qudit\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, .. }));
    }
}
