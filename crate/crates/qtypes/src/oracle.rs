//! Brute-force reference computations.
//!
//! These deliberately avoid the standard-basis engine so they can serve as
//! independent cross-checks: the quotient dimension is computed by row
//! reduction of truncated monomial multiples, and monomial-ideal counts by
//! direct lattice enumeration.

use crate::ideal::IdealPresentation;
use crate::linalg::Matrix;
use crate::poly::{exponent_degree, exponent_divides, Exponents};
use crate::scalar::GaussianRational;

/// All exponent tuples in `nvars` variables of total degree `< bound`,
/// in a fixed deterministic order.
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(nvars: usize, bound: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if pos == nvars {
            out.push(current.clone());
            return;
        }
        let used: u32 = current[..pos].iter().sum();
        for e in 0..(bound - used) {
            current[pos] = e;
            rec(nvars, bound, pos + 1, current, out);
        }
        current[pos] = 0;
    }
    rec(nvars, bound, 0, &mut current, &mut out);
    out
}

/// Dimension of `C[z] / (I + m^d)` by exact row reduction: one row per
/// monomial multiple of a generator, truncated to degree `< d`.
pub fn quotient_dimension_truncated(ideal: &IdealPresentation, d: u32) -> usize {
    let n = ideal.nvars();
    let monoms = monomials_below(n, d);
    let index: std::collections::BTreeMap<&Exponents, usize> =
        monoms.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
    for g in ideal.centered_generators() {
        if g.is_zero() {
            continue;
        }
        for m in &monoms {
            let shifted = g.mul_monomial(m, &GaussianRational::one());
            let mut row = vec![GaussianRational::zero(); monoms.len()];
            let mut nonzero = false;
            for (e, c) in shifted.terms() {
                if exponent_degree(e) < d {
                    row[index[e]] = c.clone();
                    nonzero = true;
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return monoms.len();
    }
    let rank = Matrix::from_rows(rows).rank();
    monoms.len() - rank
}

/// Stabilized colength `dim O/I`: the truncated quotient dimension is
/// nondecreasing in the truncation degree and, once two consecutive values
/// agree, it has reached the true colength. Returns `None` if the value
/// keeps growing up to `max_degree` (not zero-dimensional, or cap too low).
pub fn colength_by_linear_algebra(ideal: &IdealPresentation, max_degree: u32) -> Option<usize> {
    let mut prev = quotient_dimension_truncated(ideal, 1);
    for d in 2..=max_degree {
        let next = quotient_dimension_truncated(ideal, d);
        if next == prev {
            return Some(prev);
        }
        prev = next;
    }
    None
}

/// Lattice count for pure monomial ideals: the number of exponent tuples
/// outside the staircase of the generators. `None` when a generator is not
/// a monomial or no finite box bounds the staircase.
pub fn monomial_colength(ideal: &IdealPresentation) -> Option<usize> {
    let n = ideal.nvars();
    let gens: Vec<&Exponents> = ideal
        .centered_generators()
        .iter()
        .map(|g| g.monomial_parts().map(|(e, _)| e))
        .collect::<Option<Vec<_>>>()?;
    // box bound: for each variable take the least pure-power exponent
    let mut bounds = vec![None; n];
    for e in &gens {
        if let Some(j) = single_support(e) {
            let b = bounds[j].get_or_insert(e[j]);
            *b = (*b).min(e[j]);
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<Vec<_>>>()?;
    let mut count = 0usize;
    let mut current = vec![0u32; n];
    loop {
        if !gens.iter().any(|e| exponent_divides(e, &current)) {
            count += 1;
        }
        let mut j = 0;
        loop {
            if j == n {
                return Some(count);
            }
            current[j] += 1;
            if current[j] < bounds[j] {
                break;
            }
            current[j] = 0;
            j += 1;
        }
    }
}

fn single_support(e: &[u32]) -> Option<usize> {
    let mut support = e.iter().enumerate().filter(|(_, &x)| x > 0);
    let (j, _) = support.next()?;
    if support.next().is_none() {
        Some(j)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyC;

    fn ideal(n: usize, gens: Vec<PolyC>) -> IdealPresentation {
        IdealPresentation::origin(n, gens).unwrap()
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_below(2, 3).len(), 6); // 1, z1, z2, z1^2, z1z2, z2^2
        assert_eq!(monomials_below(3, 2).len(), 4);
    }

    #[test]
    fn colength_matches_hand_values() {
        let i = ideal(2, vec![PolyC::var(2, 0), PolyC::var(2, 1)]);
        assert_eq!(colength_by_linear_algebra(&i, 8), Some(1));
        let i = ideal(2, vec![PolyC::var(2, 0).pow(2), PolyC::var(2, 1).pow(3)]);
        assert_eq!(colength_by_linear_algebra(&i, 10), Some(6));
        assert_eq!(monomial_colength(&i), Some(6));
        // perturbed: (z1^2 + z2^3, z2^2) has colength 4
        let i = ideal(
            2,
            vec![
                PolyC::var(2, 0).pow(2).add(&PolyC::var(2, 1).pow(3)),
                PolyC::var(2, 1).pow(2),
            ],
        );
        assert_eq!(colength_by_linear_algebra(&i, 10), Some(4));
    }

    #[test]
    fn positive_dimensional_never_stabilizes() {
        let i = ideal(2, vec![PolyC::var(2, 0)]);
        assert_eq!(colength_by_linear_algebra(&i, 8), None);
    }

    #[test]
    fn monomial_lattice_count_matrix_case() {
        let i = ideal(
            2,
            vec![
                PolyC::var(2, 0).pow(2),
                PolyC::var(2, 0).mul(&PolyC::var(2, 1)),
                PolyC::var(2, 1).pow(2),
            ],
        );
        assert_eq!(monomial_colength(&i), Some(3));
    }
}
