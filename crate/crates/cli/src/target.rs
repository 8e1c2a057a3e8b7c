//! Parsing of family specs (`A 5`, `A:5`), graph files and ranges.

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use artin_morse::coxeter::{CoxeterGraph, Family};

/// What a command runs on: a cataloged family or a graph read from disk.
#[derive(Clone, Debug)]
pub enum Target {
    Family(Family, usize),
    Graph(PathBuf, CoxeterGraph),
}

impl Target {
    /// `arg` is a family name followed by `n`, the shorthand `family:n`, or
    /// a path to a graph JSON file.
    pub fn parse(arg: &str, n: Option<usize>) -> Result<Self> {
        if let Some((name, size)) = arg.split_once(':') {
            if n.is_some() {
                bail!("{arg:?} already names n; drop the extra argument");
            }
            let family: Family = name.parse()?;
            let n = size.parse().with_context(|| format!("bad n in {arg:?}"))?;
            return Ok(Target::Family(family, n));
        }
        if let Ok(family) = arg.parse::<Family>() {
            let n = n.with_context(|| format!("family {arg} needs n"))?;
            return Ok(Target::Family(family, n));
        }
        let path = Path::new(arg);
        if !path.exists() {
            bail!("{arg:?} is neither a family (A, B, tA, tC) nor a graph file");
        }
        if n.is_some() {
            bail!("n is not used with a graph file");
        }
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let graph = CoxeterGraph::from_json(&text).with_context(|| format!("parsing {arg}"))?;
        Ok(Target::Graph(path.to_path_buf(), graph))
    }

    pub fn graph(&self) -> Result<CoxeterGraph> {
        Ok(match self {
            Target::Family(f, n) => f.graph(*n)?,
            Target::Graph(_, g) => g.clone(),
        })
    }

    /// The `family` field of JSON output; `"graph"` for files.
    pub fn family_name(&self) -> String {
        match self {
            Target::Family(f, _) => f.to_string(),
            Target::Graph(..) => "graph".to_string(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Target::Family(_, n) => *n,
            Target::Graph(_, g) => g.n_vertices(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Target::Family(f, n) => format!("{f}_{n}"),
            Target::Graph(p, _) => p.display().to_string(),
        }
    }
}

/// `a..b` and `a..=b` are both inclusive; a bare number is a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |x: &str| x.trim().parse::<usize>().with_context(|| format!("bad range {s:?}"));
    let r = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if r.is_empty() {
        bail!("empty range {s:?}");
    }
    Ok(r)
}

/// Comma-separated vertex labels, e.g. `2,3,5`.
pub fn parse_vertices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse().with_context(|| format!("bad vertex {x:?}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_forms() {
        assert!(matches!(Target::parse("A", Some(3)).unwrap(), Target::Family(Family::A, 3)));
        assert!(matches!(Target::parse("tC:4", None).unwrap(), Target::Family(Family::TildeC, 4)));
        assert!(Target::parse("A", None).is_err());
        assert!(Target::parse("tA:3", Some(3)).is_err());
        assert!(Target::parse("Z:3", None).is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..8").unwrap(), 2..=8);
        assert_eq!(parse_range("2..=8").unwrap(), 2..=8);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("8..2").is_err());
        assert_eq!(parse_vertices("2, 3,5").unwrap(), vec![2, 3, 5]);
    }
}
