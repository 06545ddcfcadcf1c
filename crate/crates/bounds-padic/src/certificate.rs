use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed};

use code_model::AbsMultiset;
use padic_core::{PAdicAbs, Prime};

use crate::{CertParseError, CertificateError};

/// A piecewise-constant function on `[0, infinity)` given by threshold
/// pieces: `base` on `[0, cutoffs[0})`, then the value of the last piece
/// whose cutoff is at most the argument.  Cutoffs are positive and
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdRule {
    base: BigRational,
    pieces: Vec<(BigRational, BigRational)>,
}

impl ThresholdRule {
    pub fn new(
        base: BigRational,
        pieces: Vec<(BigRational, BigRational)>,
    ) -> Result<Self, CertificateError> {
        let mut previous: Option<&BigRational> = None;
        for (cutoff, _) in &pieces {
            if !cutoff.is_positive() || previous.is_some_and(|p| p >= cutoff) {
                return Err(CertificateError::BadThresholdRule);
            }
            previous = Some(cutoff);
        }
        Ok(ThresholdRule { base, pieces })
    }

    pub fn base(&self) -> &BigRational {
        &self.base
    }

    pub fn pieces(&self) -> &[(BigRational, BigRational)] {
        &self.pieces
    }

    pub fn eval(&self, r: &BigRational) -> &BigRational {
        let mut value = &self.base;
        for (cutoff, piece) in &self.pieces {
            if r >= cutoff {
                value = piece;
            } else {
                break;
            }
        }
        value
    }

    /// The pieces (value plus the implicit base piece) whose interval
    /// meets `[from, infinity)` — hypothesis (ii) of the interval form is
    /// checked on each of them.
    pub fn values_on_tail(&self, from: &BigRational) -> Vec<&BigRational> {
        let mut values = Vec::new();
        match self.pieces.first() {
            Some((first_cutoff, _)) if from < first_cutoff => values.push(&self.base),
            None => values.push(&self.base),
            _ => {}
        }
        for (index, (_, value)) in self.pieces.iter().enumerate() {
            let meets_tail = match self.pieces.get(index + 1) {
                Some((end, _)) => from < end,
                None => true,
            };
            if meets_tail {
                values.push(value);
            }
        }
        values
    }
}

/// A Pfender-style certificate: a constant `c > 0` and a function `phi`
/// defined either on a finite set of p-adic absolute values (the
/// finite-domain form) or on all of `[0, infinity)` by a threshold rule
/// (the interval form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfenderCertificate {
    c: BigRational,
    phi: PhiFunction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiFunction {
    Finite(BTreeMap<PAdicAbs, BigRational>),
    Interval(ThresholdRule),
}

impl PfenderCertificate {
    pub fn finite(
        c: BigRational,
        phi: BTreeMap<PAdicAbs, BigRational>,
    ) -> Result<Self, CertificateError> {
        if !c.is_positive() {
            return Err(CertificateError::NonPositiveC(
                padic_core::format_rational(&c),
            ));
        }
        if !phi.keys().any(|value| value.is_zero()) {
            return Err(CertificateError::MissingZeroKey);
        }
        Ok(PfenderCertificate {
            c,
            phi: PhiFunction::Finite(phi),
        })
    }

    pub fn interval(c: BigRational, rule: ThresholdRule) -> Result<Self, CertificateError> {
        if !c.is_positive() {
            return Err(CertificateError::NonPositiveC(
                padic_core::format_rational(&c),
            ));
        }
        Ok(PfenderCertificate {
            c,
            phi: PhiFunction::Interval(rule),
        })
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    pub fn phi(&self) -> &PhiFunction {
        &self.phi
    }

    /// `phi(0)`, which always exists by construction.
    pub fn phi_zero(&self) -> &BigRational {
        match &self.phi {
            PhiFunction::Finite(map) => map
                .iter()
                .find(|(value, _)| value.is_zero())
                .map(|(_, phi)| phi)
                .expect("finite certificates contain the zero key"),
            PhiFunction::Interval(rule) => rule.base(),
        }
    }

    /// `phi` at a p-adic absolute value, when defined.
    pub fn eval(&self, value: &PAdicAbs) -> Option<&BigRational> {
        match &self.phi {
            PhiFunction::Finite(map) => map.get(value),
            PhiFunction::Interval(rule) => Some(rule.eval(&value.to_rational())),
        }
    }

    /// The same certificate scaled to `(lambda * phi, lambda * c)`; the
    /// hypotheses and the bound are invariant under this.
    pub fn scaled(&self, lambda: &BigRational) -> Result<Self, CertificateError> {
        let c = &self.c * lambda;
        let phi = match &self.phi {
            PhiFunction::Finite(map) => PhiFunction::Finite(
                map.iter()
                    .map(|(value, phi)| (*value, phi * lambda))
                    .collect(),
            ),
            PhiFunction::Interval(rule) => PhiFunction::Interval(ThresholdRule::new(
                rule.base() * lambda,
                rule.pieces()
                    .iter()
                    .map(|(cutoff, value)| (cutoff.clone(), value * lambda))
                    .collect(),
            )?),
        };
        if !c.is_positive() {
            return Err(CertificateError::NonPositiveC(
                padic_core::format_rational(&c),
            ));
        }
        Ok(PfenderCertificate { c, phi })
    }
}

/// The bound `(phi(0) + c) / c`.
pub fn certificate_bound(cert: &PfenderCertificate) -> BigRational {
    (cert.phi_zero() + cert.c()) / cert.c()
}

/// The canonical per-code certificate achieving bound exactly `n`:
/// `c = 1`, `phi(0) = n - 1`, `phi(v) = -1` for every off-diagonal value.
/// The off-diagonal values must not contain 0 (guaranteed for valid codes
/// with a positive threshold).
pub fn trivial_tight_certificate(
    n: usize,
    values: &AbsMultiset,
) -> Result<PfenderCertificate, CertificateError> {
    assert!(n >= 1);
    if values.keys().any(|value| value.is_zero()) {
        return Err(CertificateError::ZeroOffDiagonal);
    }
    let zero_key = values
        .keys()
        .next()
        .map(|any| PAdicAbs::zero(any.prime()))
        .unwrap_or_else(|| PAdicAbs::zero(Prime::new(2).expect("2 is prime")));
    let mut phi = BTreeMap::new();
    phi.insert(zero_key, BigRational::from_integer((n as i64 - 1).into()));
    for value in values.keys() {
        phi.insert(*value, -BigRational::one());
    }
    PfenderCertificate::finite(BigRational::one(), phi)
}

/// Parses the certificate file format:
///
/// ```text
/// c <a/b>
/// phi <value> <a/b>
/// ```
///
/// where `<value>` is an absolute value as exact rational text (`0`, `1`,
/// `1/9`, `9`) or in caret form (`3^-2`).  Blank lines and `#` comments
/// are ignored.
pub fn parse_certificate_file(
    text: &str,
    prime: Prime,
) -> Result<PfenderCertificate, CertParseError> {
    let mut c: Option<BigRational> = None;
    let mut phi: BTreeMap<PAdicAbs, BigRational> = BTreeMap::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: String| CertParseError { line, message };
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("c") => {
                if c.is_some() {
                    return Err(err("duplicate `c` line".to_string()));
                }
                let value = tokens.next().ok_or_else(|| err("expected `c <a/b>`".to_string()))?;
                let value = padic_core::parse_rational(value).map_err(|e| err(e.to_string()))?;
                c = Some(value);
            }
            Some("phi") => {
                let key = tokens
                    .next()
                    .ok_or_else(|| err("expected `phi <value> <a/b>`".to_string()))?;
                let key = PAdicAbs::parse(key, prime).map_err(|e| err(e.to_string()))?;
                let value = tokens
                    .next()
                    .ok_or_else(|| err("expected `phi <value> <a/b>`".to_string()))?;
                let value = padic_core::parse_rational(value).map_err(|e| err(e.to_string()))?;
                if phi.insert(key, value).is_some() {
                    return Err(err(format!("duplicate phi entry for {key}")));
                }
            }
            Some(other) => {
                return Err(err(format!("unknown directive {other:?}")));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let c = c.ok_or(CertParseError {
        line: last_line,
        message: "missing `c` line".to_string(),
    })?;
    PfenderCertificate::finite(c, phi).map_err(|e| CertParseError {
        line: last_line,
        message: e.to_string(),
    })
}

/// Serializes a finite-form certificate (interval rules have no file
/// form; they are an API-level object).
pub fn write_certificate_file(cert: &PfenderCertificate) -> Option<String> {
    let PhiFunction::Finite(map) = cert.phi() else {
        return None;
    };
    let mut out = format!("c {}\n", padic_core::format_rational(cert.c()));
    for (value, phi) in map {
        out.push_str(&format!(
            "phi {} {}\n",
            value,
            padic_core::format_rational(phi)
        ));
    }
    Some(out)
}
