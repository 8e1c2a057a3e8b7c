use crate::poly::{LaurentPoly, Rational};
use crate::Error;

/// Largest group order [`brute_force_poincare`] will enumerate.
pub const MAX_GROUP_ORDER: usize = 500_000;

/// Types whose groups can be enumerated concretely.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BruteType {
    /// Symmetric group on `k + 1` letters.
    A(usize),
    /// Signed permutations of `k` letters.
    B(usize),
}

/// `sum_{w in W} q^{l(w)}` by listing every group element.
///
/// `A_k` uses inversion counts of permutations of `k + 1` letters; `B_k` uses
/// `inv(w) + sum_{w(i) < 0} |w(i)|` on signed permutations.
pub fn brute_force_poincare(ty: BruteType) -> Result<LaurentPoly, Error> {
    let (letters, signed) = match ty {
        BruteType::A(k) => (k + 1, false),
        BruteType::B(k) => (k, true),
    };
    let mut order: usize = (1..=letters).product();
    if signed {
        order = order.saturating_mul(1usize.checked_shl(letters as u32).unwrap_or(usize::MAX));
    }
    if order > MAX_GROUP_ORDER {
        return Err(Error::TooLarge(format!("{ty:?} has order {order}")));
    }
    let mut counts: Vec<u64> = Vec::new();
    let mut bump = |len: usize| {
        if counts.len() <= len {
            counts.resize(len + 1, 0);
        }
        counts[len] += 1;
    };
    let mut perm: Vec<i64> = (1..=letters as i64).collect();
    for_each_permutation(&mut perm, 0, &mut |p| {
        if !signed {
            bump(inversions(p));
            return;
        }
        for mask in 0u64..1 << letters {
            let w: Vec<i64> =
                p.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect();
            let neg: i64 = w.iter().filter(|&&x| x < 0).map(|x| -x).sum();
            bump(inversions(&w) + neg as usize);
        }
    });
    Ok(LaurentPoly::from_coeffs(
        0,
        counts.into_iter().map(|c| Rational::from_integer(c.into())).collect(),
    ))
}

fn inversions(w: &[i64]) -> usize {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn for_each_permutation(p: &mut Vec<i64>, start: usize, f: &mut impl FnMut(&[i64])) {
    if start == p.len() {
        f(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        for_each_permutation(p, start + 1, f);
        p.swap(start, i);
    }
}
