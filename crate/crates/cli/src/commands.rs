use std::collections::BTreeMap;
use std::fmt::Write;
use std::ops::RangeInclusive;
use std::path::Path;

use anyhow::{bail, Context, Result};
use artin_morse::catalog::{catalog_provider, check_spec, FamilySpec};
use artin_morse::complexes::{c_of, e1_page};
use artin_morse::coxeter::{enumeration_cap, Family, Simplex, SphericalComplex};
use artin_morse::independence::{ind_complex, reduced_betti, SimpleGraph};
use artin_morse::morse::{homology_artin_with, morse_complex_with, DegreeHomology};
use artin_morse::oracle::homology_direct_with;
use artin_morse::{Exec, HomologyTable};
use serde::Serialize;

use crate::target::Target;
use crate::{Format, Method, Verdict};

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Ok
    } else {
        Verdict::Failed
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Printed vertex set, e.g. `{2,3,4}`.
fn vertex_set(k: &SphericalComplex, s: Simplex) -> String {
    let labels: Vec<String> = s.vertices().map(|v| k.graph.vertex_label(v).to_string()).collect();
    format!("{{{}}}", labels.join(","))
}

#[derive(Serialize)]
struct HomologyReport<'a> {
    family: String,
    n: usize,
    d: Option<u32>,
    degrees: &'a [DegreeHomology],
    verified: bool,
}

/// `verified` is true only when both methods ran and agree.
pub fn homology(target: &Target, method: Option<Method>, d: Option<u32>, format: Format, exec: Exec) -> Result<(String, Verdict)> {
    let method = method.unwrap_or(match target {
        Target::Family(..) => Method::Morse,
        Target::Graph(..) => Method::Snf,
    });
    let k = SphericalComplex::new(&target.graph()?)?;
    let morse = match (method, target) {
        (Method::Snf, _) => None,
        (_, Target::Family(f, n)) => Some(homology_artin_with(&k, &catalog_provider(*f, *n), exec, d)?),
        (_, Target::Graph(..)) => bail!("no cataloged matching for a graph file; use --method snf"),
    };
    let snf = match method {
        Method::Morse => None,
        _ => {
            let t = homology_direct_with(&c_of(&k), exec)?;
            Some(d.map_or(t.clone(), |d| t.restrict_to(d)))
        }
    };
    let agree = match (&morse, &snf) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let table: &HomologyTable = morse.as_ref().or(snf.as_ref()).expect("one method ran");

    let mut out = String::new();
    match format {
        Format::Json => out = json(&HomologyReport {
            family: target.family_name(),
            n: target.n(),
            d,
            degrees: &table.degrees,
            verified: agree == Some(true),
        }),
        Format::Text => {
            let only = d.map_or(String::new(), |d| format!(", phi_{d} torsion only"));
            writeln!(out, "{}{only}", target.label())?;
            write!(out, "{table}")?;
            if let (Some(false), Some(b)) = (agree, &snf) {
                writeln!(out, "snf gives instead:")?;
                write!(out, "{b}")?;
            }
            if let Some(a) = agree {
                writeln!(out, "morse = snf: {}", pass(a))?;
            }
        }
    }
    Ok((out, verdict(agree != Some(false))))
}

#[derive(Serialize)]
struct CellRow {
    name: String,
    cell: String,
    vertices: String,
    degree: usize,
    exponent: u32,
}

#[derive(Serialize)]
struct CriticalReport {
    family: String,
    n: usize,
    d: usize,
    f: usize,
    cells: Vec<CellRow>,
    matches_closed_form: bool,
}

/// Computed critical cells, named after the closed-form table. Exits 2
/// when the two disagree.
pub fn critical(target: &Target, d: usize, f: usize, format: Format, exec: Exec) -> Result<(String, Verdict)> {
    let Target::Family(family, n) = *target else {
        bail!("critical needs a cataloged family, not a graph file");
    };
    let spec = FamilySpec::with_f(family, n, d, f)?;
    let k = spec.complex()?;
    let mc = morse_complex_with(&k, &spec.matching()?, d as u32, exec)?;
    let table = spec.critical_cells()?;
    let names: BTreeMap<Simplex, &str> = table.iter().map(|c| (c.simplex, c.name.as_str())).collect();

    let mut got: Vec<(Simplex, u32)> = mc.critical().collect();
    got.sort_by_key(|&(s, _)| (s.len(), s));
    let mut want: Vec<(Simplex, u32)> = table.iter().map(|c| (c.simplex, c.exponent)).collect();
    want.sort_by_key(|&(s, _)| (s.len(), s));
    let matches = got == want;

    let cells: Vec<CellRow> = got
        .iter()
        .map(|&(s, v)| CellRow {
            name: names.get(&s).unwrap_or(&"-").to_string(),
            cell: s.bitstring(spec.width()),
            vertices: vertex_set(&k, s),
            degree: s.len(),
            exponent: v,
        })
        .collect();

    let mut out = String::new();
    match format {
        Format::Json => out = json(&CriticalReport { family: family.to_string(), n, d, f, cells, matches_closed_form: matches }),
        Format::Text => {
            let sub = if f > 0 { format!(", f = {f}") } else { String::new() };
            writeln!(out, "{family}_{n}, d = {d}{sub}: {} critical cells", cells.len())?;
            let name_w = cells.iter().map(|c| c.name.len()).max().unwrap_or(0).max(4);
            let vert_w = cells.iter().map(|c| c.vertices.len()).max().unwrap_or(0).max(8);
            writeln!(out, "{:name_w$}  {:w$}  {:vert_w$}  deg  v", "name", "cell", "vertices", w = spec.width())?;
            for c in &cells {
                writeln!(out, "{:name_w$}  {}  {:vert_w$}  {:>3}  {}", c.name, c.cell, c.vertices, c.degree, c.exponent)?;
            }
            writeln!(out, "closed form: {}", pass(matches))?;
        }
    }
    Ok((out, verdict(matches)))
}

#[derive(Serialize)]
struct VerifyRow {
    n: usize,
    /// `None` for the oracle row.
    d: Option<usize>,
    check: &'static str,
    passed: bool,
    detail: Vec<String>,
}

fn oracle_cap(family: Family) -> usize {
    match family {
        Family::A | Family::B => 5,
        Family::TildeA | Family::TildeC => 4,
    }
}

/// Every cataloged matching in the grid is checked for acyclicity, weights,
/// precision, collapse and the closed forms; small `n` are also compared
/// with the Smith form oracle.
pub fn verify(
    family: Family,
    ns: RangeInclusive<usize>,
    ds: Option<RangeInclusive<usize>>,
    oracle_max: Option<usize>,
    format: Format,
    exec: Exec,
) -> Result<(String, Verdict)> {
    if *ns.start() < family.min_n() {
        bail!("{family} needs n >= {}", family.min_n());
    }
    let oracle_max = oracle_max.unwrap_or(oracle_cap(family));
    let mut specs = Vec::new();
    for n in ns.clone() {
        let ds = ds.clone().unwrap_or(2..=2 * n + 2);
        for d in ds.filter(|&d| d >= 2) {
            specs.push(FamilySpec::new(family, n, d)?);
        }
    }
    let mut rows: Vec<VerifyRow> = exec.map(specs, |spec| match check_spec(&spec, Exec::Sequential) {
        Ok((report, _)) => VerifyRow {
            n: spec.n,
            d: Some(spec.d),
            check: "matching",
            passed: report.passed(),
            detail: if report.passed() {
                vec![format!("{} critical", report.n_critical)]
            } else {
                let mut v = vec![format!(
                    "acyclic={} weighted={} precise={} collapse={} cells={} incidences={}",
                    report.acyclic,
                    report.weighted,
                    report.precise,
                    report.collapse,
                    report.critical_cells_match,
                    report.incidences_match
                )];
                v.extend(report.problems);
                v
            },
        },
        Err(e) => VerifyRow { n: spec.n, d: Some(spec.d), check: "matching", passed: false, detail: vec![e.to_string()] },
    });
    let oracle_ns: Vec<usize> = ns.filter(|&n| n <= oracle_max).collect();
    rows.extend(exec.map(oracle_ns, |n| {
        let row = |passed, detail| VerifyRow { n, d: None, check: "oracle", passed, detail };
        let run = || -> artin_morse::Result<(HomologyTable, HomologyTable)> {
            let k = SphericalComplex::new(&family.graph(n)?)?;
            let morse = homology_artin_with(&k, &catalog_provider(family, n), Exec::Sequential, None)?;
            Ok((morse, homology_direct_with(&c_of(&k), Exec::Sequential)?))
        };
        match run() {
            Ok((a, b)) if a == b => row(true, vec![]),
            Ok((a, b)) => row(false, vec![format!("morse:\n{a}snf:\n{b}")]),
            Err(e) => row(false, vec![e.to_string()]),
        }
    }));
    rows.sort_by_key(|r| (r.n, r.d.is_none(), r.d));
    let failed = rows.iter().filter(|r| !r.passed).count();

    let mut out = String::new();
    match format {
        Format::Json => out = json(&rows),
        Format::Text => {
            for r in &rows {
                let what = r.d.map_or("oracle".to_string(), |d| format!("d={d}"));
                let first = r.detail.first().map_or(String::new(), |x| format!(" ({x})"));
                writeln!(out, "{}  {family}_{} {what}{first}", pass(r.passed), r.n)?;
                for x in r.detail.iter().skip(1) {
                    writeln!(out, "      {x}")?;
                }
            }
            writeln!(out, "{} checks, {failed} failed", rows.len())?;
        }
    }
    Ok((out, verdict(failed == 0)))
}

#[derive(Serialize)]
struct BettiEntry {
    dim: i64,
    rank: usize,
}

#[derive(Serialize)]
struct IndependenceReport {
    graph: String,
    r: usize,
    n_simplices: usize,
    dim: i64,
    reduced_betti: Vec<BettiEntry>,
    contains: Option<bool>,
}

pub fn independence(
    n: Option<usize>,
    r: usize,
    graph_file: Option<&Path>,
    contains: Option<&[usize]>,
    format: Format,
) -> Result<(String, Verdict)> {
    // vertices print 1-based on A_n and as in the file otherwise
    let (g, name, offset) = match (graph_file, n) {
        (Some(p), _) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            (SimpleGraph::from_json(&text)?, p.display().to_string(), 0)
        }
        (None, Some(n)) => (SimpleGraph::path(n)?, format!("A_{n}"), 1),
        (None, None) => bail!("give n or --graph"),
    };
    let cap = enumeration_cap();
    if g.n_vertices() > cap {
        bail!("{} vertices exceeds ARTIN_MORSE_MAX_N = {cap}", g.n_vertices());
    }
    let ind = ind_complex(&g, r);
    let betti = reduced_betti(&ind);
    let member = match contains {
        None => None,
        Some(vs) => {
            let mut s = Simplex::EMPTY;
            for &v in vs {
                if v < offset || v - offset >= g.n_vertices() {
                    bail!("vertex {v} is not in {name}");
                }
                s = s.with(v - offset);
            }
            // the empty set is not a simplex here
            Some(!s.is_empty() && ind.contains(s))
        }
    };

    let mut out = String::new();
    match format {
        Format::Json => {
            out = json(&IndependenceReport {
                graph: name,
                r,
                n_simplices: ind.simplices.len(),
                dim: ind.dim(),
                reduced_betti: betti.iter().map(|(&dim, &rank)| BettiEntry { dim, rank }).collect(),
                contains: member,
            })
        }
        Format::Text => {
            writeln!(out, "Ind_{r}({name}): {} simplices, dimension {}", ind.simplices.len(), ind.dim())?;
            if betti.is_empty() {
                writeln!(out, "reduced Betti numbers: all zero")?;
            }
            for (dim, rank) in &betti {
                writeln!(out, "reduced b_{dim} = {rank}")?;
            }
            if let (Some(vs), Some(m)) = (contains, member) {
                let list: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                writeln!(out, "contains {{{}}}: {m}", list.join(","))?;
            }
        }
    }
    Ok((out, Verdict::Ok))
}

#[derive(Serialize)]
struct E1Entry {
    p: i64,
    q: i64,
    rank: usize,
}

#[derive(Serialize)]
struct E1Report {
    family: String,
    n: usize,
    d: u32,
    entries: Vec<E1Entry>,
}

/// Entry `(p, q)` counts copies of `R/(phi_d^p)` in total degree `p + q`.
pub fn e1(target: &Target, d: u32, format: Format) -> Result<(String, Verdict)> {
    if d < 2 {
        bail!("d = {d} must be at least 2");
    }
    let k = SphericalComplex::new(&target.graph()?)?;
    let page = e1_page(&k, d);
    let mut out = String::new();
    match format {
        Format::Json => {
            out = json(&E1Report {
                family: target.family_name(),
                n: target.n(),
                d,
                entries: page.iter().map(|(&(p, q), &rank)| E1Entry { p, q, rank }).collect(),
            })
        }
        Format::Text => {
            writeln!(out, "E1 page of the phi_{d} filtration on {}", target.label())?;
            if page.is_empty() {
                writeln!(out, "empty")?;
            }
            for ((p, q), rank) in &page {
                writeln!(out, "p={p} q={q}: {rank}")?;
            }
        }
    }
    Ok((out, Verdict::Ok))
}
