use std::collections::HashMap;

use super::paths::Flow;
use super::{check_matching, critical_cells, verify_acyclic, verify_weighted, Matching};
use crate::coxeter::{Simplex, SphericalComplex};
use crate::linalg::SparseMatrix;
use crate::{Error, Exec};

/// Critical cells graded by cardinality, with integer Morse incidences.
///
/// `boundary[m]` maps degree `m` to `m - 1`; rows follow `cells[m - 1]` and
/// columns `cells[m]`. `d = 0` means unweighted (all exponents 0).
#[derive(Clone, Debug)]
pub struct MorseComplex {
    pub d: u32,
    pub n_vertices: usize,
    pub cells: Vec<Vec<(Simplex, u32)>>,
    pub boundary: Vec<SparseMatrix>,
}

impl MorseComplex {
    pub fn top(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn n_critical(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.n_critical() == 0
    }

    pub fn critical(&self) -> impl Iterator<Item = (Simplex, u32)> + '_ {
        self.cells.iter().flatten().copied()
    }

    fn position(&self, s: Simplex) -> Option<usize> {
        self.cells.get(s.len())?.iter().position(|c| c.0 == s)
    }

    pub fn exponent(&self, s: Simplex) -> Option<u32> {
        self.position(s).map(|i| self.cells[s.len()][i].1)
    }

    /// `[sigma : tau]^M`, 0 unless both are critical in consecutive degrees.
    pub fn incidence(&self, sigma: Simplex, tau: Simplex) -> i64 {
        if sigma.len() != tau.len() + 1 {
            return 0;
        }
        match (self.position(sigma), self.position(tau)) {
            (Some(c), Some(r)) => self.boundary[sigma.len()].get(r, c),
            _ => 0,
        }
    }

    /// Nonzero incidences `(sigma, tau, [sigma:tau]^M)`.
    pub fn edges(&self) -> Vec<(Simplex, Simplex, i64)> {
        let mut out = Vec::new();
        for m in 1..=self.top() {
            for r in 0..self.cells[m - 1].len() {
                for &(c, v) in self.boundary[m].row(r) {
                    out.push((self.cells[m][c].0, self.cells[m - 1][r].0, v));
                }
            }
        }
        out
    }

    /// Rank over `Q` of the Morse boundary out of degree `m`.
    pub fn delta_rank(&self, m: usize) -> usize {
        self.boundary.get(m).map_or(0, SparseMatrix::rank)
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..=self.top()).all(|m| self.boundary[m - 1].mul(&self.boundary[m]).is_zero())
    }

    /// Betti numbers over `Q` of the Morse complex.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.top() + 1).map(|m| self.delta_rank(m)).collect();
        (0..=self.top()).map(|m| self.cells[m].len() - ranks[m] - ranks[m + 1]).collect()
    }
}

/// Builds the Morse complex after checking that `m` is an acyclic matching
/// and, for `d > 0`, that it is weighted.
pub fn morse_complex(k: &SphericalComplex, m: &dyn Matching, d: u32) -> Result<MorseComplex, Error> {
    morse_complex_with(k, m, d, Exec::default())
}

pub fn morse_complex_with(
    k: &SphericalComplex,
    m: &dyn Matching,
    d: u32,
    exec: Exec,
) -> Result<MorseComplex, Error> {
    check_matching(k, m)?;
    if !verify_acyclic(k, m)? {
        return Err(Error::NotAcyclic);
    }
    if d > 0 && !verify_weighted(k, m, d) {
        return Err(Error::NotWeighted(format!("pairs with unequal phi_{d} exponent")));
    }
    build(k, m, d, exec)
}

/// Builds the Morse complex without verifying the matching first; cycles are
/// still caught by the flow guard.
pub fn morse_complex_unchecked(
    k: &SphericalComplex,
    m: &dyn Matching,
    d: u32,
) -> Result<MorseComplex, Error> {
    build(k, m, d, Exec::Sequential)
}

fn build(k: &SphericalComplex, m: &dyn Matching, d: u32, exec: Exec) -> Result<MorseComplex, Error> {
    let top = k.dim();
    let exp = |s: Simplex| if d == 0 { 0 } else { k.exponent(s, d) };
    let mut cells: Vec<Vec<(Simplex, u32)>> = vec![Vec::new(); top + 1];
    for s in critical_cells(k, m) {
        cells[s.len()].push((s, exp(s)));
    }
    let index: Vec<HashMap<Simplex, usize>> = cells
        .iter()
        .map(|c| c.iter().enumerate().map(|(i, e)| (e.0, i)).collect())
        .collect();
    // Each degree gets its own flow memo, so degrees are independent jobs.
    let degrees: Vec<usize> = (1..=top).collect();
    let mats = exec.try_map(degrees, |deg| {
        let mut flow = Flow::new(k, m);
        let mut mat = SparseMatrix::zeros(cells[deg - 1].len(), cells[deg].len());
        for (col, &(sigma, _)) in cells[deg].iter().enumerate() {
            for (tau, v) in flow.boundary(sigma)? {
                mat.add_to(index[deg - 1][&tau], col, v);
            }
        }
        Ok::<_, Error>(mat)
    })?;
    let mut boundary = vec![SparseMatrix::zeros(0, cells[0].len())];
    boundary.extend(mats);
    Ok(MorseComplex { d, n_vertices: k.n_vertices(), cells, boundary })
}

/// Every nonzero Morse incidence raises the exponent by exactly one.
pub fn verify_precise(mc: &MorseComplex) -> bool {
    (1..=mc.top()).all(|m| {
        (0..mc.cells[m - 1].len()).all(|r| {
            mc.boundary[m]
                .row(r)
                .iter()
                .all(|&(c, _)| mc.cells[m][c].1 == mc.cells[m - 1][r].1 + 1)
        })
    })
}

/// Connected components of the incidence graph of a Morse complex.
#[derive(Clone, Debug)]
pub struct ComponentDecomposition {
    /// Critical cells of each component, in basis order.
    pub components: Vec<Vec<(Simplex, u32)>>,
    /// `v_phi(sigma) - |sigma|` of the first cell; constant on the component
    /// when the complex is precise.
    pub offsets: Vec<i64>,
}

impl ComponentDecomposition {
    /// Whether `v_phi - |sigma|` is constant on every component.
    pub fn offsets_constant(&self) -> bool {
        self.components
            .iter()
            .zip(&self.offsets)
            .all(|(c, &k)| c.iter().all(|&(s, v)| v as i64 - s.len() as i64 == k))
    }
}

pub fn components(mc: &MorseComplex) -> ComponentDecomposition {
    let all: Vec<(Simplex, u32)> = mc.critical().collect();
    let pos: HashMap<Simplex, usize> = all.iter().enumerate().map(|(i, e)| (e.0, i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (sigma, tau, _) in mc.edges() {
        let (a, b) = (find(&mut parent, pos[&sigma]), find(&mut parent, pos[&tau]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<(Simplex, u32)>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, &cell) in all.iter().enumerate() {
        let root = find(&mut parent, i);
        let g = *slot.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(cell);
    }
    let offsets = groups.iter().map(|g| g[0].1 as i64 - g[0].0.len() as i64).collect();
    ComponentDecomposition { components: groups, offsets }
}

/// Restriction of the Morse complex to one component, as a standalone complex.
pub fn component_complex(mc: &MorseComplex, comp: &[(Simplex, u32)]) -> MorseComplex {
    let mut cells = vec![Vec::new(); mc.cells.len()];
    for &c in comp {
        cells[c.0.len()].push(c);
    }
    for c in &mut cells {
        c.sort_by_key(|e| e.0);
    }
    let pick = |sub: &[(Simplex, u32)]| -> Vec<usize> {
        sub.iter().map(|e| mc.position(e.0).unwrap()).collect()
    };
    let mut boundary = vec![SparseMatrix::zeros(0, cells[0].len())];
    for m in 1..cells.len() {
        let rows = pick(&cells[m - 1]);
        let cols = pick(&cells[m]);
        boundary.push(mc.boundary[m].submatrix(&rows, &cols));
    }
    MorseComplex { d: mc.d, n_vertices: mc.n_vertices, cells, boundary }
}

/// `E^2` collapse criterion: on every component, the cells of positive
/// exponent `p` all sit in the single degree `p - k_i`.
pub fn collapse_check(mc: &MorseComplex) -> bool {
    components(mc).components.iter().all(|comp| {
        let mut offsets = comp
            .iter()
            .filter(|c| c.1 > 0)
            .map(|&(s, v)| v as i64 - s.len() as i64);
        match offsets.next() {
            None => true,
            Some(k) => offsets.all(|x| x == k),
        }
    })
}
