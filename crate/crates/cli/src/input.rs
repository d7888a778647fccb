//! Input files.
//!
//! Finite space:
//!
//! ```json
//! {"points": 2, "specializations": [[1, 0]]}
//! ```
//!
//! A pair `[a, b]` means `a ∈ cl{b}`; the reflexive-transitive closure is
//! taken. A finite map is `{"source": SPACE, "target": SPACE, "assignment":
//! [...]}` and a subset is `{"space": SPACE, "subset": [...]}`.
//!
//! Polynomial map with source strata:
//!
//! ```json
//! {"vars": ["x", "y"], "map_to": ["z"], "components": ["x"],
//!  "source": [{"present": ["x*y - 1"], "absent": ["1"]}]}
//! ```
//!
//! `map_to` names the target coordinates (default `z1..zm`). An omitted
//! `source` is the whole space, an omitted `absent` list is `["1"]`.
//! Polynomials use the grammar
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' poly ')'
//! ```

use std::path::{Path, PathBuf};

use goodmap_core::poly::{parse_polynomial, Ideal, Polynomial, Rational};
use goodmap_core::{
    AffineConstructible, FiniteSpace, PointSet, PolyMap, SizeCap, SpaceMap, Stratum,
};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::CliError;

/// Raw file contents with their digest.
pub struct Source {
    pub path: PathBuf,
    pub text: String,
    pub sha256: String,
}

impl Source {
    pub fn read(path: &Path) -> Result<Source, CliError> {
        let bytes =
            std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let sha256 = hex::encode(Sha256::digest(&bytes));
        let text = String::from_utf8(bytes)
            .map_err(|e| CliError::Input(format!("{}: not UTF-8: {e}", path.display())))?;
        Ok(Source {
            path: path.to_path_buf(),
            text,
            sha256,
        })
    }

    fn located(&self, line: usize, column: usize, message: impl std::fmt::Display) -> CliError {
        CliError::Input(format!(
            "{}:{line}:{column}: {message}",
            self.path.display()
        ))
    }

    fn json<T: DeserializeOwned>(&self) -> Result<T, CliError> {
        serde_json::from_str(&self.text).map_err(|e| {
            // serde_json appends its own location; keep only the message
            let message = e.to_string();
            let message = message
                .split(" at line ")
                .next()
                .unwrap_or(&message)
                .to_string();
            self.located(e.line(), e.column(), message)
        })
    }

    /// Line and column of character `offset` within the JSON string literal
    /// holding `text`.
    fn locate_literal(&self, text: &str, offset: usize) -> (usize, usize) {
        let needle = serde_json::to_string(text).expect("strings serialize");
        let start = self.text.find(&needle).map_or(0, |i| i + 1);
        let prefix = &self.text[..start];
        let line = prefix.matches('\n').count() + 1;
        let line_start = prefix.rfind('\n').map_or(0, |i| i + 1);
        let column = self.text[line_start..start].chars().count() + offset;
        (line, column)
    }

    fn polynomial(&self, text: &str, names: &[String]) -> Result<Polynomial<Rational>, CliError> {
        parse_polynomial(text, names).map_err(|e| match e {
            goodmap_core::Error::Parse { column, message } => {
                let (line, col) = self.locate_literal(text, column);
                self.located(line, col, message)
            }
            other => CliError::Input(other.to_string()),
        })
    }
}

fn capped(space: &FiniteSpace, cap: SizeCap) -> Result<(), CliError> {
    cap.check(space).map_err(|e| CliError::Input(e.to_string()))
}

pub fn space(source: &Source, cap: SizeCap) -> Result<FiniteSpace, CliError> {
    let space: FiniteSpace = source.json()?;
    capped(&space, cap)?;
    Ok(space)
}

pub fn map(source: &Source, cap: SizeCap) -> Result<SpaceMap, CliError> {
    let map: SpaceMap = source.json()?;
    capped(map.source(), cap)?;
    capped(map.target(), cap)?;
    Ok(map)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubsetFile {
    space: FiniteSpace,
    subset: PointSet,
}

pub fn subset(source: &Source, cap: SizeCap) -> Result<(FiniteSpace, PointSet), CliError> {
    let file: SubsetFile = source.json()?;
    capped(&file.space, cap)?;
    if !file.space.contains_set(file.subset) {
        return Err(CliError::Input(format!(
            "{}: subset {} is not inside a space with {} points",
            source.path.display(),
            file.subset,
            file.space.len()
        )));
    }
    Ok((file.space, file.subset))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumFile {
    #[serde(default)]
    present: Vec<String>,
    absent: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyMapFile {
    vars: Vec<String>,
    map_to: Option<Vec<String>>,
    components: Vec<String>,
    source: Option<Vec<StratumFile>>,
}

/// A parsed polynomial-map file.
pub struct PolyInput {
    pub vars: Vec<String>,
    pub map_to: Vec<String>,
    pub map: PolyMap<Rational>,
    pub source: AffineConstructible<Rational>,
}

fn check_names(source: &Source, field: &str, names: &[String]) -> Result<(), CliError> {
    for (i, name) in names.iter().enumerate() {
        let mut chars = name.chars();
        let valid = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(CliError::Input(format!(
                "{}: `{name}` in {field} is not a variable name",
                source.path.display()
            )));
        }
        if names[..i].contains(name) {
            return Err(CliError::Input(format!(
                "{}: variable `{name}` repeated in {field}",
                source.path.display()
            )));
        }
    }
    Ok(())
}

pub fn poly_map(source: &Source) -> Result<PolyInput, CliError> {
    let file: PolyMapFile = source.json()?;
    check_names(source, "vars", &file.vars)?;
    let m = file.components.len();
    let map_to = file
        .map_to
        .unwrap_or_else(|| (1..=m).map(|i| format!("z{i}")).collect());
    check_names(source, "map_to", &map_to)?;
    if map_to.len() != m {
        return Err(CliError::Input(format!(
            "{}: map_to names {} coordinates but there are {m} components",
            source.path.display(),
            map_to.len()
        )));
    }
    let n = file.vars.len();
    let parse_all = |list: &[String]| -> Result<Vec<Polynomial<Rational>>, CliError> {
        list.iter()
            .map(|p| source.polynomial(p, &file.vars))
            .collect()
    };
    let map = PolyMap::new(n, parse_all(&file.components)?)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let ideal = |gens| Ideal::new(n, gens).map_err(|e| CliError::Input(e.to_string()));
    let strata = match &file.source {
        None => vec![Stratum::whole(n)],
        Some(list) => list
            .iter()
            .map(|s| {
                let present = ideal(parse_all(&s.present)?)?;
                let absent = match &s.absent {
                    None => Ideal::unit(n),
                    Some(a) => ideal(parse_all(a)?)?,
                };
                Stratum::new(present, absent).map_err(|e| CliError::Input(e.to_string()))
            })
            .collect::<Result<_, _>>()?,
    };
    let source_set =
        AffineConstructible::new(n, strata).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(PolyInput {
        vars: file.vars,
        map_to,
        map,
        source: source_set,
    })
}
