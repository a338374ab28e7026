//! Resolves a command-line input into a bialgebra or monoid.
//!
//! An input is a path to a JSON document or `@name` for a built-in fixture.
//! Besides the corpus names, `@monogenic:I:P`, `@cyclic:N` and
//! `@radford-dual:N` are accepted.

use std::fs;

use bialg_core::corpus::{builtin, builtin_monoid};
use bialg_core::families::radford_dual;
use bialg_core::monoid::{cyclic_group, monogenic, monoid_bialgebra, FiniteMonoid};
use bialg_core::{Bialgebra, Error, Field};

use crate::document::{parse_document, Document};
use crate::error::CliError;

#[derive(Clone, Debug)]
pub struct Input {
    pub origin: String,
    /// Not yet checked against the bialgebra axioms.
    pub bialgebra: Bialgebra,
    pub monoid: Option<FiniteMonoid>,
}

impl Input {
    /// The bialgebra, after checking every axiom.
    pub fn verified(&self) -> Result<&Bialgebra, CliError> {
        let report = self.bialgebra.verify_axioms();
        let failure = report
            .failures()
            .next()
            .map(|(axiom, witness)| Error::InvalidBialgebra {
                axiom: axiom.to_string(),
                witness: witness.to_string(),
            });
        match failure {
            None => Ok(&self.bialgebra),
            Some(e) => Err(CliError::Core(e)),
        }
    }
}

fn parse_numbers(rest: &str, count: usize, origin: &str) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = rest.split(':').collect();
    if parts.len() != count {
        return Err(CliError::Usage(format!(
            "{origin}: expected {count} numeric parameters"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| CliError::Usage(format!("{origin}: `{p}` is not a number")))
        })
        .collect()
}

fn builtin_monoid_named(name: &str, origin: &str) -> Result<Option<FiniteMonoid>, CliError> {
    if let Some(rest) = name.strip_prefix("monogenic:") {
        let n = parse_numbers(rest, 2, origin)?;
        return Ok(Some(monogenic(n[0], n[1])?));
    }
    if let Some(rest) = name.strip_prefix("cyclic:") {
        let n = parse_numbers(rest, 1, origin)?;
        return Ok(Some(cyclic_group(n[0])?));
    }
    builtin_monoid(name).transpose().map_err(CliError::from)
}

fn validated(m: FiniteMonoid, origin: &str) -> Result<FiniteMonoid, CliError> {
    match m.defect() {
        None => Ok(m),
        Some(defect) => Err(CliError::Core(Error::Monoid(format!("{origin}: {defect}")))),
    }
}

fn read(arg: &str) -> Result<Document, CliError> {
    let text = fs::read_to_string(arg).map_err(|source| CliError::Io {
        origin: arg.to_string(),
        source,
    })?;
    parse_document(&text, arg)
}

pub fn load(arg: &str, field: Option<Field>) -> Result<Input, CliError> {
    let origin = arg.to_string();
    if let Some(name) = arg.strip_prefix('@') {
        let over = field.unwrap_or(Field::Rational);
        if let Some(m) = builtin_monoid_named(name, arg)? {
            let bialgebra = monoid_bialgebra(&m, over)?;
            return Ok(Input {
                origin,
                bialgebra,
                monoid: Some(m),
            });
        }
        if let Some(rest) = name.strip_prefix("radford-dual:") {
            let n = parse_numbers(rest, 1, arg)?;
            return Ok(Input {
                origin,
                bialgebra: radford_dual(over, n[0])?,
                monoid: None,
            });
        }
        let fixture = builtin(name, over).map_err(|e| match e {
            Error::Unsupported(msg) if msg.starts_with("no built-in") => CliError::Usage(msg),
            other => CliError::Core(other),
        })?;
        return Ok(Input {
            origin,
            bialgebra: fixture.bialgebra,
            monoid: fixture.monoid,
        });
    }
    match read(arg)? {
        Document::Bialgebra(doc) => Ok(Input {
            bialgebra: doc.to_bialgebra(field, arg)?,
            origin,
            monoid: None,
        }),
        Document::Monoid(doc) => {
            let m = validated(doc.to_monoid(arg)?, arg)?;
            let bialgebra = monoid_bialgebra(&m, field.unwrap_or(Field::Rational))?;
            Ok(Input {
                origin,
                bialgebra,
                monoid: Some(m),
            })
        }
    }
}

/// A monoid input: a monoid document or a built-in monoid name.
pub fn load_monoid(arg: &str) -> Result<FiniteMonoid, CliError> {
    if let Some(name) = arg.strip_prefix('@') {
        return builtin_monoid_named(name, arg)?
            .ok_or_else(|| CliError::Usage(format!("{arg}: not a built-in monoid")));
    }
    match read(arg)? {
        Document::Monoid(doc) => validated(doc.to_monoid(arg)?, arg),
        Document::Bialgebra(_) => Err(CliError::Usage(format!("{arg}: expected a monoid document"))),
    }
}
