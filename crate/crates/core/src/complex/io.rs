//! Plain-text facet lists.
//!
//! ```text
//! # comment
//! v 1
//! v 2
//! v 3
//! f 1 2
//! f 2 3
//! ```
//!
//! `v` lines declare vertices in index order, `f` lines declare facets. Text
//! after `#` is ignored. The writer emits all `v` lines followed by facets in
//! canonical order, so parsing and writing again is byte-stable.

use std::fmt::Write as _;

use super::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_facet_file(text: &str) -> Result<SimplicialComplex> {
    let mut labels = Vec::new();
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut first_facet_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let label = tokens.next().ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "`v` needs a label".into(),
                })?;
                if let Some(extra) = tokens.next() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("unexpected token `{extra}` after vertex label"),
                    });
                }
                if labels.iter().any(|l| l == label) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("duplicate vertex label `{label}`"),
                    });
                }
                labels.push(label.to_string());
            }
            Some("f") => {
                let facet: Vec<String> = tokens.map(str::to_string).collect();
                if let Some(bad) = facet.iter().find(|l| !labels.contains(l)) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("unknown vertex label `{bad}`"),
                    });
                }
                if facets.is_empty() {
                    first_facet_line = line_no;
                }
                facets.push(facet);
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `v` or `f`, found `{other}`"),
                })
            }
            None => unreachable!(),
        }
    }
    SimplicialComplex::from_facets(&labels, &facets).map_err(|e| Error::Parse {
        line: first_facet_line,
        message: e.to_string(),
    })
}

pub fn write_facet_file(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for l in complex.labels() {
        writeln!(out, "v {l}").unwrap();
    }
    for facet in complex.labelled_facets() {
        if facet.is_empty() {
            writeln!(out, "f").unwrap();
        } else {
            writeln!(out, "f {}", facet.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::mobius_with_two_discs;

    #[test]
    fn round_trip_is_byte_stable() {
        let text = write_facet_file(&mobius_with_two_discs());
        let again = write_facet_file(&parse_facet_file(&text).unwrap());
        assert_eq!(text, again);
        assert!(text.starts_with("v 1\nv 2\n"));
    }

    #[test]
    fn comments_and_facet_order_are_ignored() {
        let a = parse_facet_file("# x\nv 1\nv 2\nv 3\nf 2 3 # tail\n\nf 1 2\n").unwrap();
        let b = parse_facet_file("v 1\nv 2\nv 3\nf 1 2\nf 3 2\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_facet_file("v 1\nf 1 2\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, message: "unknown vertex label `2`".into() });
        let e = parse_facet_file("v 1\nx 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_facet_file("v 1\nv 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_facet_file("v 1\nv 2\nf 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }
}
