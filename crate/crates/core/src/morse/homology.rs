use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::complex::{component_complex, components, morse_complex_with, verify_precise, MorseComplex};
use super::Matching;
use crate::complexes::c0_of;
use crate::coxeter::SphericalComplex;
use crate::{Error, Exec};

/// Homology of `L_phi`: per degree, exponent `e >= 1` of `R/(phi^e)` to multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhiHomology {
    pub degrees: BTreeMap<usize, BTreeMap<u32, usize>>,
}

impl PhiHomology {
    fn add(&mut self, m: usize, e: u32, mult: usize) {
        if mult > 0 && e > 0 {
            *self.degrees.entry(m).or_default().entry(e).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, m: usize, e: u32) -> usize {
        self.degrees.get(&m).and_then(|d| d.get(&e)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// `H_m(L_phi)` from a precise Morse complex: on each component `i` with
/// offset `k_i`, `dim H_m(V^i)` copies of `R/(phi^{m+k_i})`, plus `rank delta_m`
/// copies of `R/(phi)`. Summands with non-positive exponent vanish.
pub fn homology_l_phi(mc: &MorseComplex) -> Result<PhiHomology, Error> {
    if !verify_precise(mc) {
        return Err(Error::NotPrecise(format!("phi_{} Morse complex", mc.d)));
    }
    let mut out = PhiHomology::default();
    let dec = components(mc);
    for (comp, &k) in dec.components.iter().zip(&dec.offsets) {
        let sub = component_complex(mc, comp);
        for (m, b) in sub.betti().into_iter().enumerate() {
            let e = m as i64 + k;
            if e > 0 {
                out.add(m, e as u32, b);
            }
        }
    }
    for m in 1..=mc.top() {
        out.add(m, 1, mc.delta_rank(m));
    }
    Ok(out)
}

/// A summand `(R/(phi_d^exp))^mult`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorsionSummand {
    pub d: u32,
    pub exp: u32,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub m: usize,
    pub free_rank: usize,
    pub torsion: Vec<TorsionSummand>,
}

/// `H_m` as an `R`-module for every degree `m = 0..=top`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyTable {
    pub fn zero(top: usize) -> Self {
        HomologyTable {
            degrees: (0..=top)
                .map(|m| DegreeHomology { m, free_rank: 0, torsion: Vec::new() })
                .collect(),
        }
    }

    /// Adds summands, merging equal `(d, exp)` and keeping them sorted.
    pub fn add_torsion(&mut self, m: usize, d: u32, exp: u32, mult: usize) {
        if mult == 0 || exp == 0 {
            return;
        }
        let t = &mut self.degrees[m].torsion;
        match t.iter_mut().find(|s| s.d == d && s.exp == exp) {
            Some(s) => s.mult += mult,
            None => {
                t.push(TorsionSummand { d, exp, mult });
                t.sort();
            }
        }
    }

    pub fn free_rank(&self, m: usize) -> usize {
        self.degrees.get(m).map_or(0, |x| x.free_rank)
    }

    /// Multiplicity of `R/(phi_d^exp)` in degree `m`.
    pub fn multiplicity(&self, m: usize, d: u32, exp: u32) -> usize {
        self.degrees.get(m).map_or(0, |x| {
            x.torsion.iter().filter(|s| s.d == d && s.exp == exp).map(|s| s.mult).sum()
        })
    }

    /// Total multiplicity of `phi_d`-torsion (any exponent) in degree `m`.
    pub fn phi_multiplicity(&self, m: usize, d: u32) -> usize {
        self.degrees.get(m).map_or(0, |x| {
            x.torsion.iter().filter(|s| s.d == d).map(|s| s.mult).sum()
        })
    }

    /// Keeps only `phi_d`-torsion (free ranks are kept).
    pub fn restrict_to(&self, d: u32) -> Self {
        let mut t = self.clone();
        for deg in &mut t.degrees {
            deg.torsion.retain(|s| s.d == d);
        }
        t
    }

    pub fn torsion(&self) -> impl Iterator<Item = (usize, TorsionSummand)> + '_ {
        self.degrees.iter().flat_map(|x| x.torsion.iter().map(move |s| (x.m, *s)))
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for deg in &self.degrees {
            let mut parts = Vec::new();
            if deg.free_rank > 0 {
                parts.push(if deg.free_rank == 1 { "R".to_string() } else { format!("R^{}", deg.free_rank) });
            }
            for s in &deg.torsion {
                let phi = if s.exp == 1 { format!("phi_{}", s.d) } else { format!("phi_{}^{}", s.d, s.exp) };
                parts.push(if s.mult == 1 { format!("R/({phi})") } else { format!("(R/({phi}))^{}", s.mult) });
            }
            let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
            writeln!(f, "H_{} = {}", deg.m, body)?;
        }
        Ok(())
    }
}

/// Supplies a matching for each `phi_d`; it must be precise.
pub type MatchingProvider<'a> = dyn Fn(u32) -> Result<Box<dyn Matching + Send>, Error> + Sync + 'a;

/// `H_m = (+)_phi (R/(phi))^{rank delta^phi_{m+1}} (+) H_m(C0)`, summed over
/// `phi_d` for `2 <= d <= d_max`. Degrees run over `0..=dim K`.
pub fn homology_artin(k: &SphericalComplex, provider: &MatchingProvider<'_>) -> Result<HomologyTable, Error> {
    homology_artin_with(k, provider, Exec::default(), None)
}

/// As [`homology_artin`], optionally restricted to one `d`, with explicit
/// execution mode for the per-`d` jobs.
pub fn homology_artin_with(
    k: &SphericalComplex,
    provider: &MatchingProvider<'_>,
    exec: Exec,
    only_d: Option<u32>,
) -> Result<HomologyTable, Error> {
    let top = k.dim();
    let mut table = HomologyTable::zero(top);
    for (m, b) in c0_of(k).betti().into_iter().enumerate() {
        table.degrees[m].free_rank = b;
    }
    let ds: Vec<u32> = (2..=k.d_max())
        .filter(|&d| only_d.is_none_or(|x| x == d))
        .filter(|&d| k.cells().iter().any(|&s| k.exponent(s, d) > 0))
        .collect();
    let ranks = exec.try_map(ds, |d| {
        let matching = provider(d)?;
        let mc = morse_complex_with(k, &matching, d, Exec::Sequential)?;
        if !verify_precise(&mc) {
            return Err(Error::NotPrecise(format!("matching for phi_{d}")));
        }
        Ok((d, (0..=top).map(|m| mc.delta_rank(m + 1)).collect::<Vec<_>>()))
    })?;
    for (d, r) in ranks {
        for (m, rank) in r.into_iter().enumerate() {
            table.add_torsion(m, d, 1, rank);
        }
    }
    Ok(table)
}
