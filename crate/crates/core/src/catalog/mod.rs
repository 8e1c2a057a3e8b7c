//! Explicit precise matchings for `A_n`, `B_n`, `Ã_n` and `C̃_n`, their
//! critical cells in closed form, and the incidence numbers between them.
//!
//! Closed forms are written as bitstrings with the lowest vertex leftmost:
//! vertex 1 for `A_n`/`B_n`, vertex 0 for the affine families.

mod a;
mod b;
mod independence;
mod tilde_a;
mod tilde_c;

use std::collections::{BTreeMap, BTreeSet};

pub use a::{a_toggle, critical_a, matching_a, AMatching};
pub use b::{b_toggle, critical_b, incidence_b, matching_b, BMatching};
pub use independence::{matching_a_independence, IndependenceMatching};
pub use tilde_a::{critical_tilde_a, incidence_tilde_a, matching_tilde_a, Relabel, TildeAMatching};
pub use tilde_c::{critical_tilde_c, incidence_tilde_c, matching_tilde_c, TildeCMatching};

use crate::coxeter::{Family, Simplex, SphericalComplex};
use crate::morse::{
    collapse_check, morse_complex_with, verify_acyclic, verify_precise, verify_weighted, Matching,
    MorseComplex,
};
use crate::{Error, Exec, Result};

pub(crate) fn ones(k: usize) -> String {
    "1".repeat(k)
}

pub(crate) fn check_params(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::BadParams(what()))
    }
}

/// A cataloged instance. `f` is only meaningful for `A` (the subposet
/// `K_{n,f}` of simplices containing `1..=f`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub d: usize,
    pub f: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, d: usize) -> Result<Self> {
        Self::with_f(family, n, d, 0)
    }

    pub fn with_f(family: Family, n: usize, d: usize, f: usize) -> Result<Self> {
        check_params(d >= 2, || format!("d = {d} must be at least 2"))?;
        check_params(n >= family.min_n(), || format!("{family}_{n} needs n >= {}", family.min_n()))?;
        check_params(f == 0 || (family == Family::A && f <= n), || {
            format!("f = {f} is only allowed for A with f <= n")
        })?;
        Ok(FamilySpec { family, n, d, f })
    }

    /// Number of Coxeter generators, i.e. the bitstring width.
    pub fn width(&self) -> usize {
        if self.family.is_affine() {
            self.n + 1
        } else {
            self.n
        }
    }

    pub fn matching(&self) -> Result<Box<dyn Matching + Send>> {
        let (n, d) = (self.n, self.d);
        Ok(match self.family {
            Family::A => Box::new(matching_a(n, self.f, d)?),
            Family::B => Box::new(matching_b(n, d)?),
            Family::TildeA => Box::new(matching_tilde_a(n, d)?),
            Family::TildeC => Box::new(matching_tilde_c(n, d)?),
        })
    }

    pub fn critical_cells(&self) -> Result<Vec<CriticalCell>> {
        let (n, d) = (self.n, self.d);
        match self.family {
            Family::A if self.f >= d => {
                // frozen prefix: every exponent grows by f / d
                let s = self.f / d * d;
                let shift = (self.f / d) as u32;
                Ok(critical_a(n - s, self.f - s, d)?
                    .into_iter()
                    .map(|c| CriticalCell {
                        name: c.name,
                        simplex: Simplex((c.simplex.0 << s) | Simplex::full(s).0),
                        exponent: c.exponent + shift,
                    })
                    .collect())
            }
            Family::A => critical_a(n, self.f, d),
            Family::B => critical_b(n, d),
            Family::TildeA => critical_tilde_a(n, d),
            Family::TildeC => critical_tilde_c(n, d),
        }
    }

    pub fn incidence_rules(&self) -> Result<Vec<IncidenceRule>> {
        let (n, d) = (self.n, self.d);
        match self.family {
            Family::A => {
                // two critical cells, joined only by the trivial path
                let c = self.critical_cells()?;
                Ok(match c.as_slice() {
                    [s, t] => vec![IncidenceRule::signed(
                        "[sigma:tau]",
                        s.simplex,
                        t.simplex,
                        crate::complexes::incidence(s.simplex, t.simplex),
                    )],
                    _ => Vec::new(),
                })
            }
            Family::B => incidence_b(n, d),
            Family::TildeA => incidence_tilde_a(n, d),
            Family::TildeC => incidence_tilde_c(n, d),
        }
    }

    pub fn complex(&self) -> Result<SphericalComplex> {
        SphericalComplex::new(&self.family.graph(self.n)?)
    }
}

/// Matching provider for [`crate::morse::homology_artin`] on a family.
pub fn catalog_provider(family: Family, n: usize) -> impl Fn(u32) -> Result<Box<dyn Matching + Send>> + Sync {
    move |d| FamilySpec::new(family, n, d as usize)?.matching()
}

/// A critical cell from a closed-form table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalCell {
    pub name: String,
    pub simplex: Simplex,
    pub exponent: u32,
}

impl CriticalCell {
    pub(crate) fn new(name: &str, bits: &str, exponent: u32) -> Self {
        let simplex = Simplex::from_bitstring(bits).expect("pattern is a bitstring");
        CriticalCell { name: name.to_string(), simplex, exponent }
    }

    pub fn degree(&self) -> usize {
        self.simplex.len()
    }
}

/// A predicted Morse incidence `[sigma : tau]`; `sign = None` means `±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceRule {
    pub rule: &'static str,
    pub sigma: Simplex,
    pub tau: Simplex,
    pub sign: Option<i64>,
}

impl IncidenceRule {
    pub(crate) fn signed(rule: &'static str, sigma: Simplex, tau: Simplex, sign: i64) -> Self {
        IncidenceRule { rule, sigma, tau, sign: Some(sign) }
    }

    pub(crate) fn unsigned(rule: &'static str, sigma: Simplex, tau: Simplex) -> Self {
        IncidenceRule { rule, sigma, tau, sign: None }
    }

    pub fn accepts(&self, value: i64) -> bool {
        match self.sign {
            Some(s) => value == s,
            None => value.abs() == 1,
        }
    }
}

/// Outcome of checking a cataloged matching against its closed forms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogReport {
    pub acyclic: bool,
    pub weighted: bool,
    pub precise: bool,
    pub collapse: bool,
    pub critical_cells_match: bool,
    pub incidences_match: bool,
    pub n_critical: usize,
    pub problems: Vec<String>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.acyclic
            && self.weighted
            && self.precise
            && self.collapse
            && self.critical_cells_match
            && self.incidences_match
    }
}

/// Builds the Morse complex of a cataloged matching and compares it with the
/// closed-form cells and incidences.
pub fn check_spec(spec: &FamilySpec, exec: Exec) -> Result<(CatalogReport, MorseComplex)> {
    let k = spec.complex()?;
    let m = spec.matching()?;
    let d = spec.d as u32;
    let mut report = CatalogReport {
        acyclic: verify_acyclic(&k, &m)?,
        weighted: verify_weighted(&k, &m, d),
        ..Default::default()
    };
    // morse_complex_with refuses both failures with a typed error
    let mc = morse_complex_with(&k, &m, d, exec)?;
    report.precise = verify_precise(&mc);
    report.collapse = collapse_check(&mc);
    report.n_critical = mc.n_critical();

    let got: BTreeSet<(Simplex, u32)> = mc.critical().collect();
    let want: BTreeSet<(Simplex, u32)> =
        spec.critical_cells()?.iter().map(|c| (c.simplex, c.exponent)).collect();
    report.critical_cells_match = got == want;
    let w = spec.width();
    for (s, v) in got.symmetric_difference(&want) {
        let side = if got.contains(&(*s, *v)) { "computed only" } else { "table only" };
        report.problems.push(format!("{side}: {} (v = {v})", s.bitstring(w)));
    }

    let rules = spec.incidence_rules()?;
    let mut predicted: BTreeMap<(Simplex, Simplex), &IncidenceRule> = BTreeMap::new();
    for r in &rules {
        predicted.insert((r.sigma, r.tau), r);
    }
    report.incidences_match = true;
    for r in &rules {
        let value = mc.incidence(r.sigma, r.tau);
        if !r.accepts(value) {
            report.incidences_match = false;
            report.problems.push(format!(
                "{} {} -> {}: computed {value}, expected {}",
                r.rule,
                r.sigma.bitstring(w),
                r.tau.bitstring(w),
                r.sign.map_or("±1".to_string(), |s| s.to_string())
            ));
        }
    }
    for (sigma, tau, value) in mc.edges() {
        if !predicted.contains_key(&(sigma, tau)) {
            report.incidences_match = false;
            report.problems.push(format!(
                "unpredicted incidence {} -> {} = {value}",
                sigma.bitstring(w),
                tau.bitstring(w)
            ));
        }
    }
    Ok((report, mc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_agree_with_tables() {
        for family in Family::ALL {
            for n in family.min_n()..=5 {
                for d in 2..=2 * n + 2 {
                    let spec = FamilySpec::new(family, n, d).unwrap();
                    let (report, _) = check_spec(&spec, Exec::Sequential).unwrap();
                    assert!(report.passed(), "{family}_{n} d={d}: {report:?}");
                }
            }
        }
    }

    #[test]
    fn k_nf_with_f_at_least_d() {
        for (n, f, d) in [(7, 3, 3), (8, 4, 2), (9, 5, 4), (6, 6, 3), (6, 1, 3), (7, 2, 4), (5, 2, 3)] {
            let spec = FamilySpec::with_f(Family::A, n, d, f).unwrap();
            let (report, _) = check_spec(&spec, Exec::Sequential).unwrap();
            assert!(report.passed(), "n={n} f={f} d={d}: {report:?}");
        }
    }

    #[test]
    fn bad_params() {
        assert!(FamilySpec::new(Family::TildeA, 1, 3).is_err());
        assert!(FamilySpec::new(Family::A, 3, 1).is_err());
        assert!(FamilySpec::with_f(Family::B, 3, 3, 1).is_err());
    }
}
