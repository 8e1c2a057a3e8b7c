//! The integer complex `C0`, the polynomial complex `C`, the phi-primary
//! quotient `L_phi`, its filtration and the E1 page.
//!
//! Chain degree is the cardinality of a simplex, so the empty simplex sits in
//! degree 0. Within a degree the basis is ordered by bit value.

use std::collections::{BTreeMap, HashMap};

use crate::coxeter::{CoxeterGraph, Simplex, SphericalComplex};
use crate::linalg::SparseMatrix;
use crate::poly::LaurentPoly;
use crate::Error;

/// `[sigma : tau]`: `(-1)^{#{w in sigma : w < v}}` when `tau = sigma \ {v}`, else 0.
pub fn incidence(sigma: Simplex, tau: Simplex) -> i64 {
    if !tau.is_subset(sigma) || sigma.len() != tau.len() + 1 {
        return 0;
    }
    let v = (sigma.0 ^ tau.0).trailing_zeros() as usize;
    if sigma.count_below(v).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Groups cells by cardinality and sorts each degree by bit value.
pub fn graded_bases(cells: impl IntoIterator<Item = Simplex>, top: usize) -> Vec<Vec<Simplex>> {
    let mut bases = vec![Vec::new(); top + 1];
    for s in cells {
        bases[s.len()].push(s);
    }
    for b in &mut bases {
        b.sort_unstable();
        b.dedup();
    }
    bases
}

fn index_maps(bases: &[Vec<Simplex>]) -> Vec<HashMap<Simplex, usize>> {
    bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, &s)| (s, i)).collect())
        .collect()
}

/// A complex of free modules with integer boundary matrices.
///
/// `boundary[k]` maps degree `k` to degree `k - 1`: rows are indexed by
/// `bases[k - 1]`, columns by `bases[k]`. Faces outside the cell set are
/// dropped, which yields the quotient complex when the cells are the
/// complement of a subcomplex.
#[derive(Clone, Debug)]
pub struct IntChainComplex {
    pub bases: Vec<Vec<Simplex>>,
    pub boundary: Vec<SparseMatrix>,
}

impl IntChainComplex {
    pub fn from_cells(cells: impl IntoIterator<Item = Simplex>, top: usize) -> Self {
        let bases = graded_bases(cells, top);
        let index = index_maps(&bases);
        let mut boundary = vec![SparseMatrix::zeros(0, bases[0].len())];
        for k in 1..=top {
            let mut m = SparseMatrix::zeros(bases[k - 1].len(), bases[k].len());
            for (col, &sigma) in bases[k].iter().enumerate() {
                for (_, tau) in sigma.facets() {
                    if let Some(&row) = index[k - 1].get(&tau) {
                        m.add_to(row, col, incidence(sigma, tau));
                    }
                }
            }
            boundary.push(m);
        }
        IntChainComplex { bases, boundary }
    }

    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.bases.get(k).map_or(0, Vec::len)
    }

    /// Rank over `Q` of `boundary[k]` (0 outside the range).
    pub fn boundary_rank(&self, k: usize) -> usize {
        self.boundary.get(k).map_or(0, SparseMatrix::rank)
    }

    /// Betti numbers over `Q`, one per degree.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.top() + 1).map(|k| self.boundary_rank(k)).collect();
        (0..=self.top()).map(|k| self.rank(k) - ranks[k] - ranks[k + 1]).collect()
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..=self.top()).all(|k| self.boundary[k - 1].mul(&self.boundary[k]).is_zero())
    }
}

/// The complex `C` with boundary `[sigma:tau] * W_sigma / W_tau`.
#[derive(Clone, Debug)]
pub struct PolyChainComplex {
    pub bases: Vec<Vec<Simplex>>,
    /// `boundary[k]`: dense `|bases[k-1]| x |bases[k]|` matrix.
    pub boundary: Vec<Vec<Vec<LaurentPoly>>>,
}

impl PolyChainComplex {
    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..=self.top()).all(|k| {
            let (a, b) = (&self.boundary[k - 1], &self.boundary[k]);
            a.iter().all(|row| {
                (0..self.bases[k].len()).all(|c| {
                    row.iter()
                        .enumerate()
                        .fold(LaurentPoly::zero(), |acc, (j, x)| &acc + &(x * &b[j][c]))
                        .is_zero()
                })
            })
        })
    }
}

/// `L_phi` for `phi = phi_d`: cells with positive exponent and their exponents.
#[derive(Clone, Debug)]
pub struct PhiWeightedComplex {
    pub d: u32,
    pub cells: IntChainComplex,
    pub exponents: HashMap<Simplex, u32>,
}

impl PhiWeightedComplex {
    pub fn exponent(&self, s: Simplex) -> u32 {
        self.exponents.get(&s).copied().unwrap_or(0)
    }
}

pub fn build_c0(graph: &CoxeterGraph) -> Result<IntChainComplex, Error> {
    let k = SphericalComplex::new(graph)?;
    Ok(c0_of(&k))
}

pub fn c0_of(k: &SphericalComplex) -> IntChainComplex {
    IntChainComplex::from_cells(k.cells().iter().copied(), k.dim())
}

pub fn build_c(graph: &CoxeterGraph) -> Result<PolyChainComplex, Error> {
    let k = SphericalComplex::new(graph)?;
    Ok(c_of(&k))
}

pub fn c_of(k: &SphericalComplex) -> PolyChainComplex {
    let c0 = c0_of(k);
    let weights: HashMap<Simplex, LaurentPoly> = k
        .cells()
        .iter()
        .map(|&s| (s, crate::coxeter::poincare_polynomial(&k.graph, s).expect("spherical cell")))
        .collect();
    let mut boundary = vec![Vec::new()];
    for deg in 1..=c0.top() {
        let m = &c0.boundary[deg];
        let mut dense = vec![vec![LaurentPoly::zero(); m.n_cols]; m.n_rows];
        for (r, row) in dense.iter_mut().enumerate() {
            let tau = c0.bases[deg - 1][r];
            for &(c, sign) in m.row(r) {
                let sigma = c0.bases[deg][c];
                let ratio = weights[&sigma].div_exact(&weights[&tau]).expect("W_tau divides W_sigma");
                row[c] = ratio.scale(&crate::poly::rational(sign));
            }
        }
        boundary.push(dense);
    }
    PolyChainComplex { bases: c0.bases, boundary }
}

pub fn build_lphi(graph: &CoxeterGraph, d: u32) -> Result<PhiWeightedComplex, Error> {
    let k = SphericalComplex::new(graph)?;
    Ok(lphi_of(&k, d))
}

pub fn lphi_of(k: &SphericalComplex, d: u32) -> PhiWeightedComplex {
    let exponents: HashMap<Simplex, u32> = k
        .cells()
        .iter()
        .map(|&s| (s, k.exponent(s, d)))
        .filter(|&(_, v)| v > 0)
        .collect();
    let cells = IntChainComplex::from_cells(exponents.keys().copied(), k.dim());
    PhiWeightedComplex { d, cells, exponents }
}

/// `K_{phi,s}`: simplices with `v_phi <= s`, in basis order.
pub fn filtration_subcomplex(k: &SphericalComplex, d: u32, s: u32) -> Vec<Simplex> {
    k.cells().iter().copied().filter(|&c| k.exponent(c, d) <= s).collect()
}

/// `E1_{p,q}` ranks for `p >= 1`: homology over `Q` of the quotient
/// `F^p / F^{p-1}` spanned by the simplices with exponent exactly `p`.
/// Each entry counts copies of `R/(phi^p)`. Zero entries are omitted.
pub fn e1_page(k: &SphericalComplex, d: u32) -> BTreeMap<(i64, i64), usize> {
    let mut by_p: BTreeMap<u32, Vec<Simplex>> = BTreeMap::new();
    for &c in k.cells() {
        let v = k.exponent(c, d);
        if v > 0 {
            by_p.entry(v).or_default().push(c);
        }
    }
    let mut page = BTreeMap::new();
    for (p, cells) in by_p {
        let quotient = IntChainComplex::from_cells(cells, k.dim());
        for (m, b) in quotient.betti().into_iter().enumerate() {
            if b > 0 {
                page.insert((p as i64, m as i64 - p as i64), b);
            }
        }
    }
    page
}
