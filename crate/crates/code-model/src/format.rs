use num_rational::BigRational;

use padic_core::{PAdicVector, Prime};

use crate::{
    CodeVariant, ModelError, PAdicCode, PairInequality, ParseError, ParseErrorKind, SeparationSpec,
};

/// Parses the line-oriented code file format:
///
/// ```text
/// prime <p>
/// dim <d>
/// cos_theta <a/b>
/// variant <pe|pn> <unit_norm:0|1> <unit_self:0|1>
/// <d whitespace-separated rationals per vector line>
/// ```
///
/// Header lines may appear in any order before the first vector; the
/// `variant` line is optional and defaults to `pe 1 1`.  Blank lines and
/// lines starting with `#` are ignored.  Errors carry 1-based line numbers.
pub fn parse_code_file(text: &str) -> Result<PAdicCode, ParseError> {
    let mut prime: Option<(usize, Prime)> = None;
    let mut dim: Option<usize> = None;
    let mut cos_theta: Option<BigRational> = None;
    let mut variant = CodeVariant::default();
    let mut vectors: Vec<PAdicVector> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |kind: ParseErrorKind| ParseError { line, kind };
        let malformed = |what: &'static str, detail: String| ParseError {
            line,
            kind: ParseErrorKind::Malformed { what, detail },
        };

        let mut tokens = trimmed.split_whitespace();
        let head = tokens.next().expect("non-empty line has a token");
        match head {
            "prime" if vectors.is_empty() => {
                if prime.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader("prime")));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| err(ParseErrorKind::MissingHeader("prime")))?;
                if value == "real" {
                    return Err(malformed(
                        "prime",
                        "`prime real` files describe real codes; use the classical tools"
                            .to_string(),
                    ));
                }
                let value: u64 = value
                    .parse()
                    .map_err(|_| malformed("prime", format!("{value:?} is not an integer")))?;
                let p = Prime::new(value).map_err(|e| malformed("prime", e.to_string()))?;
                prime = Some((line, p));
            }
            "dim" if vectors.is_empty() => {
                if dim.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader("dim")));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| err(ParseErrorKind::MissingHeader("dim")))?;
                let d: usize = value
                    .parse()
                    .map_err(|_| malformed("dim", format!("{value:?} is not an integer")))?;
                if d == 0 {
                    return Err(malformed("dim", "dimension must be positive".to_string()));
                }
                dim = Some(d);
            }
            "cos_theta" if vectors.is_empty() => {
                if cos_theta.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader("cos_theta")));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| err(ParseErrorKind::MissingHeader("cos_theta")))?;
                let r = padic_core::parse_rational(value)
                    .map_err(|e| malformed("cos_theta", e.to_string()))?;
                cos_theta = Some(r);
            }
            "variant" if vectors.is_empty() => {
                let kind = tokens
                    .next()
                    .ok_or_else(|| err(ParseErrorKind::MissingHeader("variant")))?;
                let inequality = match kind {
                    "pe" => PairInequality::Pe,
                    "pn" => PairInequality::Pn,
                    other => {
                        return Err(malformed(
                            "variant",
                            format!("{other:?} is neither `pe` nor `pn`"),
                        ))
                    }
                };
                let flag = |token: Option<&str>| -> Result<bool, ParseError> {
                    match token {
                        Some("0") => Ok(false),
                        Some("1") => Ok(true),
                        other => Err(malformed(
                            "variant",
                            format!("expected flag 0 or 1, found {other:?}"),
                        )),
                    }
                };
                variant = CodeVariant {
                    inequality,
                    require_unit_norm: flag(tokens.next())?,
                    require_unit_self_product: flag(tokens.next())?,
                };
            }
            _ => {
                // a vector line; all headers must be in place
                let (_, p) = prime
                    .ok_or_else(|| err(ParseErrorKind::MissingHeader("prime")))?;
                let d = dim.ok_or_else(|| err(ParseErrorKind::MissingHeader("dim")))?;
                if cos_theta.is_none() {
                    return Err(err(ParseErrorKind::MissingHeader("cos_theta")));
                }
                let mut entries = Vec::with_capacity(d);
                for token in std::iter::once(head).chain(tokens) {
                    let r = padic_core::parse_rational(token)
                        .map_err(|e| malformed("vector entry", e.to_string()))?;
                    entries.push(r);
                }
                if entries.len() != d {
                    return Err(malformed(
                        "vector",
                        format!("expected {d} entries, found {}", entries.len()),
                    ));
                }
                let v = PAdicVector::new(p, entries)
                    .map_err(|e| malformed("vector", e.to_string()))?;
                vectors.push(v);
            }
        }
    }

    let eof = |kind: ParseErrorKind| ParseError {
        line: last_line,
        kind,
    };
    let (prime_line, p) = prime.ok_or_else(|| eof(ParseErrorKind::MissingHeader("prime")))?;
    let d = dim.ok_or_else(|| eof(ParseErrorKind::MissingHeader("dim")))?;
    let cos = cos_theta.ok_or_else(|| eof(ParseErrorKind::MissingHeader("cos_theta")))?;
    if vectors.is_empty() {
        return Err(eof(ParseErrorKind::NoVectors));
    }
    let spec = SeparationSpec::exact(cos).map_err(|e| ParseError {
        line: prime_line,
        kind: ParseErrorKind::Model(e),
    })?;
    PAdicCode::new(p, d, vectors, spec, variant).map_err(|e| ParseError {
        line: last_line,
        kind: ParseErrorKind::Model(e),
    })
}

/// Serializes a code in the file format above.  Requires exact mode
/// (approximate separations have no file representation).
pub fn write_code_file(code: &PAdicCode) -> Result<String, ModelError> {
    let cos_theta = match code.spec() {
        SeparationSpec::Exact { cos_theta } => padic_core::format_rational(cos_theta),
        SeparationSpec::Approximate { .. } => {
            return Err(ModelError::ApproximateModeUnsupported("write_code_file"))
        }
    };
    let variant = code.variant();
    let mut out = String::new();
    out.push_str(&format!("prime {}\n", code.prime()));
    out.push_str(&format!("dim {}\n", code.dim()));
    out.push_str(&format!("cos_theta {cos_theta}\n"));
    out.push_str(&format!(
        "variant {} {} {}\n",
        match variant.inequality {
            PairInequality::Pe => "pe",
            PairInequality::Pn => "pn",
        },
        variant.require_unit_norm as u8,
        variant.require_unit_self_product as u8,
    ));
    for v in code.vectors() {
        let entries: Vec<String> = v.entries().iter().map(padic_core::format_rational).collect();
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "prime 3\ndim 2\ncos_theta 1/2\nvariant pe 1 1\n1 0\n-1 0\n0 1\n0 -1\n";

    #[test]
    fn parse_round_trip() {
        let code = parse_code_file(K4).unwrap();
        assert_eq!(code.prime().value(), 3);
        assert_eq!(code.dim(), 2);
        assert_eq!(code.len(), 4);
        assert_eq!(write_code_file(&code).unwrap(), K4);
    }

    #[test]
    fn variant_defaults_when_omitted() {
        let text = "prime 3\ndim 1\ncos_theta 1/2\n1\n";
        let code = parse_code_file(text).unwrap();
        assert_eq!(code.variant(), CodeVariant::default());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = "# a witness\nprime 3\n\ndim 1\ncos_theta 1/2\n\n1\n";
        assert!(parse_code_file(text).is_ok());
    }

    #[test]
    fn truncated_file_reports_line() {
        let text = "prime 3\ndim 2\ncos_theta 1/2\n";
        let err = parse_code_file(text).unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::NoVectors);
    }

    #[test]
    fn wrong_entry_count_reports_line() {
        let text = "prime 3\ndim 2\ncos_theta 1/2\n1 0\n1\n";
        let err = parse_code_file(text).unwrap_err();
        assert_eq!(err.line, 5);
    }

    #[test]
    fn bad_rational_reports_line() {
        let text = "prime 3\ndim 1\ncos_theta 1/2\nx\n";
        let err = parse_code_file(text).unwrap_err();
        assert_eq!(err.line, 4);
    }

    #[test]
    fn composite_prime_rejected() {
        let text = "prime 4\ndim 1\ncos_theta 1/2\n1\n";
        let err = parse_code_file(text).unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn real_sentinel_redirects() {
        let text = "prime real\ndim 2\ncos_theta 1/2\n1 0\n";
        let err = parse_code_file(text).unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.to_string().contains("real"));
    }

    #[test]
    fn cos_theta_out_of_range_rejected() {
        let text = "prime 3\ndim 1\ncos_theta 3/2\n1\n";
        assert!(parse_code_file(text).is_err());
    }
}
