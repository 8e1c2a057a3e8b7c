//! Ground truth that bypasses Morse theory: Smith normal forms and the
//! homology of `C_*` as an `R`-module, `R = Q[q^{±1}]`.

mod snf;

pub use snf::{snf, snf_int, snf_poly, Euclidean, SnfResult};

use crate::complexes::PolyChainComplex;
use crate::morse::HomologyTable;
use crate::poly::factor_cyclotomic;
use crate::{Exec, Result};

/// `H_k(C_*)` over the PID `R`.
///
/// `ker ∂_k` is a direct summand of `C_k` (its quotient embeds in the free
/// module `C_{k-1}`), so `coker ∂_{k+1} = H_k ⊕ im ∂_k` and the torsion of
/// `H_k` is read off the invariant factors of `∂_{k+1}`. Free rank is
/// `n_k - rank ∂_k - rank ∂_{k+1}`. Each non-unit factor is split into
/// `phi_d^e` summands.
pub fn homology_direct(c: &PolyChainComplex) -> Result<HomologyTable> {
    homology_direct_with(c, Exec::default())
}

pub fn homology_direct_with(c: &PolyChainComplex, exec: Exec) -> Result<HomologyTable> {
    let top = c.top();
    let degrees: Vec<usize> = (1..=top).collect();
    let forms = exec.map(degrees, |k| snf_poly(&c.boundary[k]));
    // rank[k] = rank of ∂_k, zero at both ends
    let mut rank = vec![0; top + 2];
    for (k, f) in forms.iter().enumerate() {
        rank[k + 1] = f.rank;
    }
    let mut table = HomologyTable::zero(top);
    for k in 0..=top {
        table.degrees[k].free_rank = c.bases[k].len() - rank[k] - rank[k + 1];
        if k == top {
            continue;
        }
        for factor in &forms[k].diagonal {
            if factor.is_unit() {
                continue;
            }
            let profile = factor_cyclotomic(factor, None)?;
            for (&d, &e) in &profile.exponents {
                table.add_torsion(k, d, e, 1);
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::build_c;
    use crate::coxeter::CoxeterGraph;

    #[test]
    fn a3_matches_the_braid_table() {
        let h = homology_direct(&build_c(&CoxeterGraph::a(3).unwrap()).unwrap()).unwrap();
        assert_eq!(h.multiplicity(0, 2, 1), 1);
        assert_eq!(h.multiplicity(1, 3, 1), 1);
        assert_eq!(h.multiplicity(2, 4, 1), 1);
        assert_eq!(h.torsion().count(), 3);
        assert!((0..=3).all(|m| h.free_rank(m) == 0));
    }

    #[test]
    fn tilde_c2_has_free_top() {
        let h = homology_direct(&build_c(&CoxeterGraph::tilde_c(2).unwrap()).unwrap()).unwrap();
        assert_eq!(h.free_rank(2), 1);
        assert_eq!(h.free_rank(0) + h.free_rank(1), 0);
    }
}
