//! Local standard bases and the multiplicity `D(I, x0) = dim O/I`.
//!
//! The engine is Mora's tangent-cone algorithm: a Buchberger loop over the
//! anti-graded lexicographic order (total degree ascending, lex tiebreak),
//! with the weak normal form that keeps local division terminating by always
//! reducing with an ecart-minimal reducer and admitting intermediate results
//! as reducers. The staircase of the resulting leading ideal counts the
//! quotient dimension.
//!
//! Budget caps (reduction steps, intermediate degree) surface as a distinct
//! error so that an exhausted computation is never reported as an answer.

use crate::error::{Error, Result};
use crate::ideal::IdealPresentation;
use crate::poly::{exponent_degree, exponent_divides, Exponents, PolyC};
use crate::sampler::{summarize, GenericValueReport, SampleValue, SliceSampler};
use crate::scalar::GaussianRational;
use crate::value::ExtendedRational;
use rayon::prelude::*;
use std::cmp::Ordering;

/// Caps on the standard-basis computation.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_reduction_steps: usize,
    pub max_intermediate_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_reduction_steps: 500_000,
            max_intermediate_degree: 512,
        }
    }
}

/// Anti-graded lexicographic comparison: `Greater` means "more leading".
/// Lower total degree wins; equal degrees break lexicographically with
/// `z1 > z2 > ...`.
pub fn local_cmp(a: &[u32], b: &[u32]) -> Ordering {
    exponent_degree(b)
        .cmp(&exponent_degree(a))
        .then_with(|| a.cmp(b))
}

fn leading_term(p: &PolyC) -> Option<(&Exponents, &GaussianRational)> {
    p.terms().max_by(|(ea, _), (eb, _)| local_cmp(ea, eb))
}

fn leading_exponents_of(p: &PolyC) -> Option<Exponents> {
    leading_term(p).map(|(e, _)| e.clone())
}

/// `ecart(f) = deg f - deg LM(f)`: how far the tail reaches above the
/// leading (lowest-degree) term.
fn ecart(p: &PolyC) -> u32 {
    match (p.total_degree(), leading_term(p)) {
        (Some(d), Some((e, _))) => d - exponent_degree(e),
        _ => 0,
    }
}

fn make_monic(p: &PolyC) -> PolyC {
    match leading_term(p) {
        None => p.clone(),
        Some((_, c)) => {
            let inv = c.inverse().expect("nonzero leading coefficient");
            p.scale(&inv)
        }
    }
}

/// `h - (LT h / LT g) * g`, cancelling the leading term of `h`.
fn reduce_leading(h: &PolyC, g: &PolyC) -> PolyC {
    let (eh, ch) = leading_term(h).expect("nonzero h");
    let (eg, cg) = leading_term(g).expect("nonzero g");
    let quot_exp: Exponents = eh.iter().zip(eg).map(|(a, b)| a - b).collect();
    let quot_coeff = ch / cg;
    h.sub(&g.mul_monomial(&quot_exp, &quot_coeff))
}

fn s_polynomial(f: &PolyC, g: &PolyC) -> PolyC {
    let (ef, cf) = leading_term(f).expect("nonzero f");
    let (eg, cg) = leading_term(g).expect("nonzero g");
    let lcm: Exponents = ef.iter().zip(eg).map(|(a, b)| *a.max(b)).collect();
    let mf: Exponents = lcm.iter().zip(ef).map(|(l, e)| l - e).collect();
    let mg: Exponents = lcm.iter().zip(eg).map(|(l, e)| l - e).collect();
    let inv_cf = cf.inverse().unwrap();
    let inv_cg = cg.inverse().unwrap();
    f.mul_monomial(&mf, &inv_cf)
        .sub(&g.mul_monomial(&mg, &inv_cg))
}

struct Budget {
    steps: usize,
    limits: Limits,
}

impl Budget {
    fn new(limits: Limits) -> Self {
        Budget { steps: 0, limits }
    }

    fn spend(&mut self, h: &PolyC) -> Result<()> {
        self.steps += 1;
        if self.steps > self.limits.max_reduction_steps {
            return Err(Error::BudgetExceeded {
                what: format!("{} reduction steps", self.limits.max_reduction_steps),
            });
        }
        if let Some(d) = h.total_degree() {
            if d > self.limits.max_intermediate_degree {
                return Err(Error::BudgetExceeded {
                    what: format!(
                        "intermediate degree {} exceeds {}",
                        d, self.limits.max_intermediate_degree
                    ),
                });
            }
        }
        Ok(())
    }
}

/// Mora weak normal form of `f` against `basis`. Reducers are chosen with
/// minimal ecart (ties to the lowest index); whenever the chosen reducer has
/// larger ecart than the current remainder, the remainder itself joins the
/// reducer set, which is what makes local division terminate.
fn mora_normal_form(f: PolyC, basis: &[PolyC], budget: &mut Budget) -> Result<PolyC> {
    let mut reducers: Vec<PolyC> = basis.to_vec();
    let mut h = f;
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        budget.spend(&h)?;
        let lm_h = leading_exponents_of(&h).unwrap();
        let candidate = reducers
            .iter()
            .enumerate()
            .filter(|(_, g)| {
                leading_term(g).is_some_and(|(eg, _)| exponent_divides(eg, &lm_h))
            })
            .min_by_key(|(idx, g)| (ecart(g), *idx))
            .map(|(idx, _)| idx);
        let Some(idx) = candidate else {
            return Ok(h);
        };
        if ecart(&reducers[idx]) > ecart(&h) {
            reducers.push(h.clone());
        }
        let g = reducers[idx].clone();
        h = reduce_leading(&h, &g);
    }
}

/// Public entry point for a single weak normal form against a basis.
pub fn normal_form(f: &PolyC, basis: &[PolyC], limits: &Limits) -> Result<PolyC> {
    let mut budget = Budget::new(*limits);
    mora_normal_form(f.clone(), basis, &mut budget)
}

/// A standard basis with respect to the anti-graded lexicographic order.
#[derive(Clone, Debug)]
pub struct StandardBasisResult {
    /// Minimal monic basis: no leading exponent divides another.
    pub basis: Vec<PolyC>,
    /// Leading exponents of the basis, the minimal generators of the
    /// leading-term ideal.
    pub leading_exponents: Vec<Exponents>,
    pub order_spec: &'static str,
}

pub const LOCAL_ORDER_SPEC: &str = "antigraded-lex";

/// Compute a standard basis of the ideal with Mora normal forms. Idempotent
/// on its own output: every S-polynomial of the result reduces to zero.
pub fn standard_basis(ideal: &IdealPresentation, limits: &Limits) -> Result<StandardBasisResult> {
    let mut basis: Vec<PolyC> = ideal
        .centered_generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(make_monic)
        .collect();
    let mut budget = Budget::new(*limits);

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let queue_pairs = |pairs: &mut Vec<(usize, usize)>, basis: &[PolyC], new_idx: usize| {
        for i in 0..new_idx {
            pairs.push((i, new_idx));
        }
        // process pairs with low-degree lcm first; deterministic tiebreak
        pairs.sort_by_key(|&(i, j)| {
            let ei = leading_exponents_of(&basis[i]).unwrap();
            let ej = leading_exponents_of(&basis[j]).unwrap();
            let lcm: u32 = ei.iter().zip(&ej).map(|(a, b)| *a.max(b)).sum();
            (std::cmp::Reverse(lcm), std::cmp::Reverse((i, j)))
        });
    };
    for idx in 1..basis.len() {
        queue_pairs(&mut pairs, &basis, idx);
    }

    while let Some((i, j)) = pairs.pop() {
        let ei = leading_exponents_of(&basis[i]).unwrap();
        let ej = leading_exponents_of(&basis[j]).unwrap();
        // product criterion: coprime leading monomials yield nothing new
        if ei.iter().zip(&ej).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        if s.is_zero() {
            continue;
        }
        let h = mora_normal_form(s, &basis, &mut budget)?;
        if !h.is_zero() {
            basis.push(make_monic(&h));
            queue_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }

    // minimalize: drop elements whose leading exponent is divisible by
    // another kept leading exponent
    let mut keep = vec![true; basis.len()];
    let lms: Vec<Exponents> = basis
        .iter()
        .map(|g| leading_exponents_of(g).unwrap())
        .collect();
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            if a != b && keep[b] && exponent_divides(&lms[b], &lms[a]) {
                if lms[a] == lms[b] && a < b {
                    continue;
                }
                keep[a] = false;
                break;
            }
        }
    }
    let mut kept: Vec<(Exponents, PolyC)> = basis
        .into_iter()
        .zip(lms)
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|((g, lm), _)| (lm, g))
        .collect();
    kept.sort_by(|(a, _), (b, _)| local_cmp(b, a));
    let leading_exponents: Vec<Exponents> = kept.iter().map(|(lm, _)| lm.clone()).collect();
    let basis: Vec<PolyC> = kept.into_iter().map(|(_, g)| g).collect();

    Ok(StandardBasisResult {
        basis,
        leading_exponents,
        order_spec: LOCAL_ORDER_SPEC,
    })
}

impl StandardBasisResult {
    /// Per-variable staircase bounds: the exponent of the minimal pure power
    /// of each variable in the leading ideal, `None` when a variable has no
    /// pure power (so the staircase is infinite).
    pub fn pure_power_bounds(&self, nvars: usize) -> Vec<Option<u32>> {
        (0..nvars)
            .map(|j| {
                self.leading_exponents
                    .iter()
                    .filter(|e| {
                        e.iter()
                            .enumerate()
                            .all(|(k, &x)| if k == j { x > 0 } else { x == 0 })
                    })
                    .map(|e| e[j])
                    .min()
            })
            .collect()
    }

    /// All standard monomials (staircase) when finite.
    pub fn staircase(&self, nvars: usize) -> Option<Vec<Exponents>> {
        let bounds = self.pure_power_bounds(nvars);
        let bounds: Vec<u32> = bounds.into_iter().collect::<Option<Vec<_>>>()?;
        let mut out = Vec::new();
        let mut current = vec![0u32; nvars];
        loop {
            if !self
                .leading_exponents
                .iter()
                .any(|lm| exponent_divides(lm, &current))
            {
                out.push(current.clone());
            }
            // odometer over the box
            let mut j = 0;
            loop {
                if j == nvars {
                    return Some(out);
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
}

/// `dim O/I` as the number of standard monomials; `Infinite` when the ideal
/// is not zero-dimensional.
pub fn multiplicity_with(ideal: &IdealPresentation, limits: &Limits) -> Result<ExtendedRational> {
    let sb = standard_basis(ideal, limits)?;
    Ok(match sb.staircase(ideal.nvars()) {
        Some(monomials) => ExtendedRational::finite_int(monomials.len() as u64),
        None => ExtendedRational::Infinite,
    })
}

pub fn multiplicity(ideal: &IdealPresentation) -> Result<ExtendedRational> {
    multiplicity_with(ideal, &Limits::default())
}

/// True iff every variable has a pure power among the leading exponents.
pub fn is_zero_dimensional(ideal: &IdealPresentation) -> Result<bool> {
    let sb = standard_basis(ideal, &Limits::default())?;
    Ok(sb
        .pure_power_bounds(ideal.nvars())
        .iter()
        .all(Option::is_some))
}

/// Sampled multiplicity of `(I, w_1, ..., w_{q-1})` over non-degenerate
/// linear-form tuples. The minimum over samples is the generic value (the
/// infimum over all tuples is achieved on a Zariski-open set), and the
/// report flags disagreement between minimum and mode via the histogram.
pub fn generic_multiplicity(
    ideal: &IdealPresentation,
    sampler: &SliceSampler,
) -> Result<GenericValueReport> {
    let n = ideal.nvars();
    if sampler.q < 2 || sampler.q > n {
        return Err(Error::InvalidParameter(format!(
            "q = {} out of range 2..={}",
            sampler.q, n
        )));
    }
    let outcomes: Vec<Option<Result<SampleValue>>> = (0..sampler.samples)
        .into_par_iter()
        .map(|idx| {
            let slice = sampler.draw(idx, n)?;
            let augmented = match ideal.augmented(slice.forms()) {
                Ok(a) => a,
                Err(e) => return Some(Err(e)),
            };
            Some(multiplicity(&augmented).map(|value| SampleValue {
                value,
                certified: true,
            }))
        })
        .collect();
    let mut rejected = 0;
    let mut samples = Vec::new();
    for o in outcomes {
        match o {
            None => rejected += 1,
            Some(v) => samples.push(v?),
        }
    }
    summarize(&samples, rejected, sampler.seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyC;

    fn zvar(n: usize, j: usize) -> PolyC {
        PolyC::var(n, j)
    }

    fn ideal(n: usize, gens: Vec<PolyC>) -> IdealPresentation {
        IdealPresentation::origin(n, gens).unwrap()
    }

    #[test]
    fn local_order_prefers_low_degree() {
        assert_eq!(local_cmp(&[1, 0], &[0, 2]), Ordering::Greater);
        assert_eq!(local_cmp(&[2, 0], &[1, 1]), Ordering::Greater); // lex tiebreak
        assert_eq!(local_cmp(&[1, 1], &[1, 1]), Ordering::Equal);
    }

    #[test]
    fn maximal_ideal_basis() {
        let i = ideal(2, vec![zvar(2, 0), zvar(2, 1)]);
        let sb = standard_basis(&i, &Limits::default()).unwrap();
        assert_eq!(sb.leading_exponents, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(sb.staircase(2).unwrap(), vec![vec![0, 0]]);
        assert_eq!(
            multiplicity(&i).unwrap(),
            ExtendedRational::finite_int(1)
        );
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let i = ideal(
            2,
            vec![
                zvar(2, 0).pow(2),
                zvar(2, 0).mul(&zvar(2, 1)),
                zvar(2, 1).pow(2),
            ],
        );
        let sb = standard_basis(&i, &Limits::default()).unwrap();
        assert_eq!(sb.leading_exponents.len(), 3);
        let stairs = sb.staircase(2).unwrap();
        assert_eq!(stairs, vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(
            multiplicity(&i).unwrap(),
            ExtendedRational::finite_int(3)
        );
    }

    #[test]
    fn perturbed_ideal_reduces_to_monomial_staircase() {
        // (z1^2 + z2^3, z2^2) generates the same ideal as (z1^2, z2^2):
        // staircase {1, z1, z2, z1 z2}
        let i = ideal(
            2,
            vec![
                zvar(2, 0).pow(2).add(&zvar(2, 1).pow(3)),
                zvar(2, 1).pow(2),
            ],
        );
        let sb = standard_basis(&i, &Limits::default()).unwrap();
        let stairs = sb.staircase(2).unwrap();
        assert_eq!(
            stairs,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        assert_eq!(
            multiplicity(&i).unwrap(),
            ExtendedRational::finite_int(4)
        );
        // input generators reduce to zero against the basis
        for g in i.centered_generators() {
            let nf = normal_form(g, &sb.basis, &Limits::default()).unwrap();
            assert!(nf.is_zero(), "generator must reduce to zero");
        }
    }

    #[test]
    fn multiplicity_of_two_pure_powers() {
        let i = ideal(2, vec![zvar(2, 0).pow(2), zvar(2, 1).pow(3)]);
        assert_eq!(
            multiplicity(&i).unwrap(),
            ExtendedRational::finite_int(6)
        );
    }

    #[test]
    fn positive_dimensional_ideal_is_infinite() {
        let i = ideal(2, vec![zvar(2, 0)]);
        assert_eq!(multiplicity(&i).unwrap(), ExtendedRational::Infinite);
        assert!(!is_zero_dimensional(&i).unwrap());
        let i = ideal(2, vec![zvar(2, 0).mul(&zvar(2, 1))]);
        assert!(!is_zero_dimensional(&i).unwrap());
    }

    #[test]
    fn zero_dimensionality_after_reduction() {
        // (z1 + z2, z2^2) reduces to staircase {1, z2}
        let i = ideal(2, vec![zvar(2, 0).add(&zvar(2, 1)), zvar(2, 1).pow(2)]);
        assert!(is_zero_dimensional(&i).unwrap());
        assert_eq!(
            multiplicity(&i).unwrap(),
            ExtendedRational::finite_int(2)
        );
    }

    #[test]
    fn standard_basis_idempotent() {
        let i = ideal(
            2,
            vec![
                zvar(2, 0).pow(2).add(&zvar(2, 1).pow(3)),
                zvar(2, 1).pow(2),
            ],
        );
        let sb = standard_basis(&i, &Limits::default()).unwrap();
        let again = standard_basis(
            &IdealPresentation::origin(2, sb.basis.clone()).unwrap(),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(again.leading_exponents, sb.leading_exponents);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        // leading terms z1^2 and z1*z2 share a variable, so the S-pair
        // actually reduces and must hit the step cap
        let i = ideal(
            2,
            vec![
                zvar(2, 0).pow(2).add(&zvar(2, 1).pow(3)),
                zvar(2, 0).mul(&zvar(2, 1)),
            ],
        );
        let tiny = Limits {
            max_reduction_steps: 0,
            max_intermediate_degree: 512,
        };
        assert!(matches!(
            standard_basis(&i, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn generic_multiplicity_three_quadrics() {
        // (z1^2, z2^2, z3^2) with one generic form: the restricted ideal is
        // (y1^2, y2^2, y1 y2) of colength 3; special axis-aligned forms give
        // 4, so the minimum equals the mode on generic sampling
        let i = ideal(
            3,
            vec![zvar(3, 0).pow(2), zvar(3, 1).pow(2), zvar(3, 2).pow(2)],
        );
        let sampler = SliceSampler::new(11, 40, 10_000, 2);
        let rep = generic_multiplicity(&i, &sampler).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::finite_int(3));
        assert_eq!(rep.min_value, rep.modal_value);
        assert!(rep.exact);
    }

    #[test]
    fn generic_multiplicity_maximal_ideal() {
        let i = ideal(3, vec![zvar(3, 0), zvar(3, 1), zvar(3, 2)]);
        let sampler = SliceSampler::new(5, 20, 10_000, 2);
        let rep = generic_multiplicity(&i, &sampler).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::finite_int(1));
        assert_eq!(rep.min_value, ExtendedRational::finite_int(1));
    }

    #[test]
    fn generic_multiplicity_plane_curve_pair() {
        // (z1^2, z2^3) in 2 vars, q = 2: a generic line leaves a univariate
        // ideal of colength 2
        let i = ideal(2, vec![zvar(2, 0).pow(2), zvar(2, 1).pow(3)]);
        let sampler = SliceSampler::new(3, 30, 10_000, 2);
        let rep = generic_multiplicity(&i, &sampler).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::finite_int(2));
        assert_eq!(rep.min_value, rep.modal_value);
    }
}
