//! D'Angelo 1-type estimation with certificates, and the q-type family via
//! seeded linear-form sampling.
//!
//! The 1-type of an ideal is a supremum over all curve germs, so a finite
//! computation can in general only certify bounds:
//!
//! - the curve search (monomial curves, coefficient variants, two-term
//!   perturbations, and root-direction lines) produces a witnessed lower
//!   bound;
//! - the multiplicity `D` bounds the type from above; for ideals generated
//!   by homogeneous polynomials the maximal generator degree is a sharper
//!   cap (along any direction some generator survives at its own degree);
//! - monomial ideals are searched exhaustively over monomial curves, exact
//!   under the documented assumption that the optimum is attained on
//!   monomial curves with exponents up to the lcm of the generator degrees;
//! - ideals generated by products of powers of known linear forms (the
//!   restrictions of monomial ideals to a sampled plane) are solved exactly
//!   by direction analysis in up to two variables.
//!
//! A report is `exact` only when a lower witness meets an upper certificate.
//!
//! The q-type family adjoins `q - 1` sampled linear forms, changes
//! coordinates so the forms become the trailing coordinates, restricts to
//! the leading subspace, and measures the 1-type there. The generic-value
//! variant reports the modal value across samples; the sampled-infimum
//! variant reports the minimum, which is only an upper estimate for the
//! true infimum over the (infinite) family of non-degenerate tuples.

use crate::contact::{CurveGerm, LinearSlice};
use crate::error::{Error, Result};
use crate::ideal::IdealPresentation;
use crate::linalg::Matrix;
use crate::local::{multiplicity_with, standard_basis, Limits};
use crate::poly::{exponent_degree, Exponents, PolyC};
use crate::sampler::{summarize, GenericValueReport, SampleValue, SliceSampler};
use crate::scalar::GaussianRational;
use crate::series::{compose_exact, UniPoly};
use crate::value::ExtendedRational;
use num::integer::Integer;
use num::rational::BigRational;
use num::BigInt;
use rayon::prelude::*;
use serde::Serialize;

// ---------------------------------------------------------------------------
// coordinate frames for slicing

/// Exact coordinate change attached to a non-degenerate tuple of linear
/// forms: new coordinates `y = M z` put the forms last, the restriction to
/// their common zero locus keeps the leading `n - count` variables, and the
/// trailing columns of `M^{-1}` span an exact complement (used as the
/// directrix when building cylinders).
#[derive(Clone, Debug)]
pub struct SliceFrame {
    slice: LinearSlice,
    to_new: Matrix,
    to_old: Matrix,
    /// `z_j` expressed in the leading restricted variables.
    images: Vec<PolyC>,
}

impl SliceFrame {
    pub fn new(slice: &LinearSlice) -> Result<Self> {
        let n = slice.nvars();
        let w = slice.coefficient_matrix();
        let to_new = Matrix::complete_rows_to_basis(&w).ok_or(Error::RankDeficient {
            expected: slice.count(),
            got: w.rank(),
        })?;
        let to_old = to_new.inverse().expect("completed basis is invertible");
        let m = n - slice.count();
        let images = (0..n)
            .map(|j| {
                let mut p = PolyC::zero(m);
                for k in 0..m {
                    let c = to_old.get(j, k);
                    if !c.is_zero() {
                        p = p.add(&PolyC::var(m, k).scale(c));
                    }
                }
                p
            })
            .collect();
        Ok(SliceFrame {
            slice: slice.clone(),
            to_new,
            to_old,
            images,
        })
    }

    pub fn slice(&self) -> &LinearSlice {
        &self.slice
    }

    pub fn ambient_vars(&self) -> usize {
        self.slice.nvars()
    }

    pub fn restricted_vars(&self) -> usize {
        self.slice.nvars() - self.slice.count()
    }

    pub fn to_new(&self) -> &Matrix {
        &self.to_new
    }

    pub fn to_old(&self) -> &Matrix {
        &self.to_old
    }

    /// Restriction images: `z_j` as a linear form in the restricted
    /// variables.
    pub fn images(&self) -> &[PolyC] {
        &self.images
    }

    /// Restrict a polynomial (in centered ambient coordinates) to the zero
    /// locus of the slice forms.
    pub fn restrict_poly(&self, p: &PolyC) -> PolyC {
        p.substitute(&self.images)
            .expect("restriction arity is exact")
    }

    /// Embed a curve of the restricted chart into ambient coordinates.
    pub fn embed_components(&self, restricted: &[UniPoly]) -> Vec<UniPoly> {
        let n = self.ambient_vars();
        let m = self.restricted_vars();
        assert_eq!(restricted.len(), m);
        (0..n)
            .map(|j| {
                let mut acc = UniPoly::zero();
                for (k, comp) in restricted.iter().enumerate().take(m) {
                    let c = self.to_old.get(j, k);
                    if !c.is_zero() {
                        acc = acc.add(&comp.scale(c));
                    }
                }
                acc
            })
            .collect()
    }

    /// Basis of the exact complement of the slice subspace: the trailing
    /// columns of `M^{-1}`, an `n x count` matrix.
    pub fn complement_basis(&self) -> Matrix {
        let n = self.ambient_vars();
        let m = self.restricted_vars();
        let k = self.slice.count();
        let mut out = Matrix::zeros(n, k);
        for j in 0..n {
            for c in 0..k {
                out.set(j, c, self.to_old.get(j, m + c).clone());
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerProvenance {
    /// Best value over the heuristic curve family.
    CurveSearch,
    /// Exhaustive monomial-curve search.
    MonomialSearch,
    /// Direction analysis over known linear factors.
    DirectionAnalysis,
    /// Univariate ideal: minimum generator order.
    Univariate,
    /// Integer root of the multiplicity bound.
    RootBound,
    /// A curve inside the zero set witnesses an infinite type.
    ContainedCurve,
    /// The ideal contains a full system of independent linear forms.
    LinearSpan,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperProvenance {
    /// `type <= multiplicity` (colength of the ideal).
    Multiplicity,
    /// Homogeneous generators cap the type at the maximal generator degree.
    HomogeneousDegreeCap,
    /// Monomial search under the monomial-curve sufficiency assumption.
    MonomialAssumption,
    DirectionAnalysis,
    Univariate,
    /// Positive-dimensional zero set: the type is infinite.
    PositiveDimensional,
    LinearSpan,
    /// No finite upper certificate applies.
    Open,
}

/// Certified two-sided estimate of the 1-type.
#[derive(Clone, Debug, Serialize)]
pub struct Delta1Report {
    pub lower: ExtendedRational,
    pub upper: ExtendedRational,
    pub exact: bool,
    pub witness: Option<CurveGerm>,
    /// Rank of the linear forms detected among the generators.
    pub linear_rank: usize,
    /// Colength `D` of the ideal, reported alongside for the
    /// type-vs-multiplicity chain; always an upper bound for the type.
    pub multiplicity: Option<ExtendedRational>,
    pub lower_provenance: LowerProvenance,
    pub upper_provenance: UpperProvenance,
}

impl Delta1Report {
    /// The certified value when exact, otherwise the lower estimate.
    pub fn value(&self) -> &ExtendedRational {
        &self.lower
    }
}

// ---------------------------------------------------------------------------
// curve search

fn finite(n: u64) -> ExtendedRational {
    ExtendedRational::finite_int(n)
}

/// Normalized contact of a polynomial candidate curve with the generators;
/// `None` when the candidate is the zero tuple.
fn candidate_value(gens: &[PolyC], comps: &[UniPoly]) -> Option<ExtendedRational> {
    let s = comps.iter().filter_map(UniPoly::order).min()?;
    let mut best: Option<usize> = None;
    for g in gens {
        let u = compose_exact(g, comps).expect("matching arity in search");
        match u.order() {
            None => continue,
            Some(k) => {
                best = Some(best.map_or(k, |b: usize| b.min(k)));
                if best == Some(0) {
                    break;
                }
            }
        }
    }
    Some(match best {
        None => ExtendedRational::Infinite,
        Some(k) => ExtendedRational::Finite(BigRational::new(
            BigInt::from(k as u64),
            BigInt::from(s as u64),
        )),
    })
}

/// Detect a binary initial form that is a power of a single linear form (or
/// a monomial) and return its root direction(s).
fn binary_root_directions(p: &PolyC) -> Vec<Vec<GaussianRational>> {
    let init = p.initial_form();
    let d = match init.order() {
        Some(d) if d >= 1 && init.nvars() == 2 => d,
        _ => return Vec::new(),
    };
    let coeff_at = |k: u32| init.coeff(&[d - k, k]);
    let c0 = coeff_at(0);
    let cd = coeff_at(d);
    let mut out = Vec::new();
    if init.is_monomial() {
        // c * y1^a y2^b: axis directions
        let (e, _) = init.monomial_parts().unwrap();
        if e[0] > 0 {
            out.push(vec![GaussianRational::zero(), GaussianRational::one()]);
        }
        if e[1] > 0 {
            out.push(vec![GaussianRational::one(), GaussianRational::zero()]);
        }
        return out;
    }
    if !c0.is_zero() {
        // candidate c0 * (y1 + lambda y2)^d
        let lam = &coeff_at(1) / &(&c0 * &GaussianRational::from_int(d as i64));
        let form = PolyC::var(2, 0)
            .add(&PolyC::var(2, 1).scale(&lam))
            .pow(d)
            .scale(&c0);
        if form == init {
            out.push(vec![-&lam, GaussianRational::one()]);
        }
    } else if !cd.is_zero() {
        // candidate cd * (y2 + mu y1)^d
        let mu = &coeff_at(d - 1) / &(&cd * &GaussianRational::from_int(d as i64));
        let form = PolyC::var(2, 1)
            .add(&PolyC::var(2, 0).scale(&mu))
            .pow(d)
            .scale(&cd);
        if form == init {
            out.push(vec![GaussianRational::one(), -&mu]);
        }
    }
    out
}

struct SearchOutcome {
    value: ExtendedRational,
    witness: Option<Vec<UniPoly>>,
}

/// Heuristic maximization of the normalized contact over a documented curve
/// family. Returns a certified-per-curve lower estimate of the supremum and
/// the best witness found; an `Infinite` value means the witness genuinely
/// lies in the zero set of every generator.
fn curve_search(gens: &[PolyC], nvars: usize, budget: u32) -> SearchOutcome {
    let mut best: Option<(ExtendedRational, Vec<UniPoly>)> = None;

    let consider = |comps: &[UniPoly], best: &mut Option<(ExtendedRational, Vec<UniPoly>)>| {
        if let Some(v) = candidate_value(gens, comps) {
            match best {
                Some((bv, _)) if *bv >= v => {}
                _ => *best = Some((v, comps.to_vec())),
            }
        }
    };

    // keep the pattern grid from exploding in higher arity
    let mut eff_budget = budget.max(1);
    while (eff_budget as u64 + 1).pow(nvars as u32) > 60_000 {
        eff_budget -= 1;
    }

    let mut base_curves: Vec<Vec<UniPoly>> = Vec::new();
    let mut pattern = vec![0u32; nvars];
    'outer: loop {
        if pattern.iter().any(|&a| a > 0) {
            let comps: Vec<UniPoly> = pattern
                .iter()
                .map(|&a| {
                    if a == 0 {
                        UniPoly::zero()
                    } else {
                        UniPoly::monomial(GaussianRational::one(), a as usize)
                    }
                })
                .collect();
            base_curves.push(comps);
        }
        let mut j = 0;
        loop {
            if j == nvars {
                break 'outer;
            }
            pattern[j] += 1;
            if pattern[j] <= eff_budget {
                break;
            }
            pattern[j] = 0;
            j += 1;
        }
    }
    // root-direction lines for two-variable searches
    if nvars == 2 {
        for g in gens {
            for dir in binary_root_directions(g) {
                let comps: Vec<UniPoly> = dir
                    .iter()
                    .map(|c| {
                        if c.is_zero() {
                            UniPoly::zero()
                        } else {
                            UniPoly::monomial(c.clone(), 1)
                        }
                    })
                    .collect();
                base_curves.push(comps);
            }
        }
    }

    let variants = [
        GaussianRational::from_int(-1),
        GaussianRational::i(),
        GaussianRational::from_int(2),
    ];
    for base in &base_curves {
        consider(base, &mut best);
        for j in 0..nvars {
            if base[j].is_zero() {
                continue;
            }
            // coefficient variants on one component
            for c in &variants {
                let mut comps = base.clone();
                comps[j] = comps[j].scale(c);
                consider(&comps, &mut best);
            }
            // two-term perturbations on one component
            let a = base[j].order().unwrap() as u32;
            for e in (a + 1)..=budget {
                for sign in [1i64, -1] {
                    let mut comps = base.clone();
                    comps[j] = comps[j].add(&UniPoly::monomial(
                        GaussianRational::from_int(sign),
                        e as usize,
                    ));
                    consider(&comps, &mut best);
                }
            }
        }
    }

    match best {
        Some((value, witness)) => SearchOutcome {
            value,
            witness: Some(witness),
        },
        None => SearchOutcome {
            value: finite(0),
            witness: None,
        },
    }
}

// ---------------------------------------------------------------------------
// exact direction analysis for products of powers of known linear forms

/// Exact 1-type of the ideal generated by `prod_j images[j]^{alpha_j}` over
/// the exponent tuples `alphas`, valid in one or two restricted variables.
///
/// In this homogeneous situation the supremum is attained on lines, and a
/// line's value depends only on which forms vanish along it, so scanning the
/// root directions of the forms plus one generic direction is exhaustive.
pub(crate) fn monomial_direction_delta1(
    alphas: &[Exponents],
    images: &[PolyC],
    m: usize,
) -> Option<(ExtendedRational, Vec<GaussianRational>)> {
    if m == 0 || m > 2 {
        return None;
    }
    let rows: Vec<Option<Vec<GaussianRational>>> = images
        .iter()
        .map(|p| {
            if p.is_zero() {
                None
            } else {
                Some(p.linear_form_coeffs().expect("restriction image is linear"))
            }
        })
        .collect();
    let mut candidates: Vec<Vec<GaussianRational>> = Vec::new();
    if m == 1 {
        candidates.push(vec![GaussianRational::one()]);
    } else {
        // one direction avoiding every nonzero form
        'generic: for k in 0..=(images.len() as i64 + 1) {
            let v = vec![GaussianRational::one(), GaussianRational::from_int(k)];
            for r in rows.iter().flatten() {
                let val = &r[0] + &(&r[1] * &v[1]);
                if val.is_zero() {
                    continue 'generic;
                }
            }
            candidates.push(v);
            break;
        }
        // the root direction of each nonzero form
        for r in rows.iter().flatten() {
            let v = vec![-&r[1], r[0].clone()];
            if !candidates.contains(&v) {
                candidates.push(v);
            }
        }
    }

    let mut best: Option<(ExtendedRational, Vec<GaussianRational>)> = None;
    for v in candidates {
        let vanishing: Vec<bool> = rows
            .iter()
            .map(|r| match r {
                None => true,
                Some(coeffs) => {
                    let mut acc = GaussianRational::zero();
                    for (c, x) in coeffs.iter().zip(&v) {
                        acc = &acc + &(c * x);
                    }
                    acc.is_zero()
                }
            })
            .collect();
        let mut val: Option<u32> = None;
        for alpha in alphas {
            if alpha
                .iter()
                .enumerate()
                .all(|(j, &e)| e == 0 || !vanishing[j])
            {
                let d = exponent_degree(alpha);
                val = Some(val.map_or(d, |b| b.min(d)));
            }
        }
        let value = match val {
            Some(d) => finite(d as u64),
            None => ExtendedRational::Infinite,
        };
        match &best {
            Some((bv, _)) if *bv >= value => {}
            _ => best = Some((value, v)),
        }
    }
    best
}

// ---------------------------------------------------------------------------
// 1-type entry points

fn lcm_of_degrees(gens: &[PolyC]) -> u32 {
    gens.iter()
        .filter_map(|g| g.total_degree())
        .fold(1u64, |acc, d| acc.lcm(&(d as u64)))
        .min(u32::MAX as u64) as u32
}

/// Exhaustive 1-type of a monomial ideal over monomial curves
/// `(t^{a_1}, ..., t^{a_n})` with exponents up to `budget` (a zero exponent
/// means the component is identically zero). Exact under the documented
/// assumption that the supremum over all curves is attained on monomial
/// curves with exponents at most the lcm of the generator degrees.
pub fn delta1_monomial(ideal: &IdealPresentation, budget: u32) -> Result<Delta1Report> {
    let gens = ideal.centered_generators();
    let mut alphas: Vec<Exponents> = Vec::new();
    let mut max_deg = 0u32;
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let (e, _) = g.monomial_parts().ok_or(Error::NonMonomialGenerator)?;
        max_deg = max_deg.max(exponent_degree(e));
        alphas.push(e.clone());
    }
    if alphas.is_empty() {
        // zero ideal: every curve is contained in the zero set
        let witness = axis_line(ideal.nvars(), 0, ideal.base_point().to_vec())?;
        return Ok(Delta1Report {
            lower: ExtendedRational::Infinite,
            upper: ExtendedRational::Infinite,
            exact: true,
            witness: Some(witness),
            linear_rank: 0,
            multiplicity: Some(ExtendedRational::Infinite),
            lower_provenance: LowerProvenance::ContainedCurve,
            upper_provenance: UpperProvenance::PositiveDimensional,
        });
    }
    if budget < max_deg {
        return Err(Error::BudgetTooSmall {
            budget,
            required: max_deg,
        });
    }
    let n = ideal.nvars();
    let (value, exps) = monomial_search(&alphas, n, budget);
    let witness = CurveGerm::from_polynomials(
        exps.iter()
            .map(|&a| {
                if a == 0 {
                    UniPoly::zero()
                } else {
                    UniPoly::monomial(GaussianRational::one(), a)
                }
            })
            .collect(),
        ideal.base_point().to_vec(),
        crate::series::DEFAULT_TRUNCATION,
    )?;
    let exact = value.is_infinite() || budget >= lcm_of_degrees(gens);
    let upper = if exact {
        value.clone()
    } else {
        ExtendedRational::Infinite
    };
    Ok(Delta1Report {
        lower: value,
        upper,
        exact,
        witness: Some(witness),
        linear_rank: 0,
        multiplicity: None,
        lower_provenance: LowerProvenance::MonomialSearch,
        upper_provenance: if exact {
            UpperProvenance::MonomialAssumption
        } else {
            UpperProvenance::Open
        },
    })
}

/// Inner exhaustive search over monomial curves; returns the best value and
/// the witness exponent tuple. An `Infinite` value is returned as soon as a
/// curve annihilates every generator (exact containment for monomial data).
fn monomial_search(alphas: &[Exponents], n: usize, budget: u32) -> (ExtendedRational, Vec<usize>) {
    let mut best: Option<(ExtendedRational, Vec<usize>)> = None;
    let mut a = vec![0u32; n];
    'outer: loop {
        if a.iter().any(|&x| x > 0) {
            let s = a.iter().filter(|&&x| x > 0).min().copied().unwrap();
            let mut min_ord: Option<u64> = None;
            for alpha in alphas {
                if alpha.iter().zip(&a).any(|(&e, &x)| e > 0 && x == 0) {
                    continue; // generator pulls back to zero
                }
                let ord: u64 = alpha
                    .iter()
                    .zip(&a)
                    .map(|(&e, &x)| e as u64 * x as u64)
                    .sum();
                min_ord = Some(min_ord.map_or(ord, |b| b.min(ord)));
            }
            let value = match min_ord {
                None => {
                    // the whole curve lies in the zero set of the ideal
                    return (
                        ExtendedRational::Infinite,
                        a.iter().map(|&x| x as usize).collect(),
                    );
                }
                Some(k) => ExtendedRational::Finite(BigRational::new(
                    BigInt::from(k),
                    BigInt::from(s as u64),
                )),
            };
            match &best {
                Some((bv, _)) if *bv >= value => {}
                _ => best = Some((value, a.iter().map(|&x| x as usize).collect())),
            }
        }
        let mut j = 0;
        loop {
            if j == n {
                break 'outer;
            }
            a[j] += 1;
            if a[j] <= budget {
                break;
            }
            a[j] = 0;
            j += 1;
        }
    }
    best.expect("nonempty exponent grid")
}

fn axis_line(
    nvars: usize,
    axis: usize,
    base_point: Vec<GaussianRational>,
) -> Result<CurveGerm> {
    let comps = (0..nvars)
        .map(|j| {
            if j == axis {
                UniPoly::monomial(GaussianRational::one(), 1)
            } else {
                UniPoly::zero()
            }
        })
        .collect();
    CurveGerm::from_polynomials(comps, base_point, crate::series::DEFAULT_TRUNCATION)
}

struct InnerReport {
    lower: ExtendedRational,
    upper: ExtendedRational,
    exact: bool,
    witness: Option<Vec<UniPoly>>,
    linear_rank: usize,
    lower_provenance: LowerProvenance,
    upper_provenance: UpperProvenance,
}

/// Largest integer `r` with `r^e <= value`.
fn floor_root(value: u64, e: u32) -> u64 {
    if e == 0 {
        return 1;
    }
    let mut r = 1u64;
    while (r + 1).checked_pow(e).is_some_and(|p| p <= value) {
        r += 1;
    }
    r
}

fn delta1_core(gens: Vec<PolyC>, n: usize, budget: u32, limits: &Limits) -> Result<InnerReport> {
    let gens: Vec<PolyC> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        // zero ideal: any curve sits in the zero set
        return Ok(InnerReport {
            lower: ExtendedRational::Infinite,
            upper: ExtendedRational::Infinite,
            exact: true,
            witness: Some(line_components(n, 0)),
            linear_rank: 0,
            lower_provenance: LowerProvenance::ContainedCurve,
            upper_provenance: UpperProvenance::PositiveDimensional,
        });
    }

    // independent linear forms among the generators
    let linear: Vec<(usize, Vec<GaussianRational>)> = gens
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.linear_form_coeffs().map(|c| (i, c)))
        .collect();
    if !linear.is_empty() {
        let mut chosen_rows: Vec<Vec<GaussianRational>> = Vec::new();
        let mut chosen_forms: Vec<PolyC> = Vec::new();
        for (i, row) in &linear {
            let mut rows = chosen_rows.clone();
            rows.push(row.clone());
            if Matrix::from_rows(rows.clone()).rank() == rows.len() {
                chosen_rows = rows;
                chosen_forms.push(gens[*i].clone());
            }
        }
        let k = chosen_forms.len();
        if k == n {
            // the ideal contains the full maximal ideal in degree one
            return Ok(InnerReport {
                lower: finite(1),
                upper: finite(1),
                exact: true,
                witness: Some(line_components(n, 0)),
                linear_rank: k,
                lower_provenance: LowerProvenance::LinearSpan,
                upper_provenance: UpperProvenance::LinearSpan,
            });
        }
        let slice = LinearSlice::new(chosen_forms)?;
        let frame = SliceFrame::new(&slice)?;
        let rgens: Vec<PolyC> = gens.iter().map(|g| frame.restrict_poly(g)).collect();
        let mut inner = delta1_core(rgens, n - k, budget, limits)?;
        // lift the witness and attach the root bound from the type-vs-
        // multiplicity chain with the k detected forms
        inner.witness = inner.witness.map(|w| frame.embed_components(&w));
        if !inner.exact {
            if let ExtendedRational::Finite(d) = &inner.upper {
                let d: u64 = d.to_integer().try_into().unwrap_or(u64::MAX);
                let rb = finite(floor_root(d, (n - k) as u32));
                if rb > inner.lower {
                    inner.lower = rb;
                    inner.lower_provenance = LowerProvenance::RootBound;
                    inner.witness = None;
                }
            }
        }
        inner.linear_rank = k;
        return Ok(inner);
    }

    // pure monomial generators: exhaustive search
    if gens.iter().all(|g| g.is_monomial()) {
        let alphas: Vec<Exponents> = gens
            .iter()
            .map(|g| g.monomial_parts().unwrap().0.clone())
            .collect();
        let max_deg = alphas.iter().map(|a| exponent_degree(a)).max().unwrap();
        let eff_budget = budget.max(max_deg).max(lcm_of_degrees(&gens).min(24));
        let (value, exps) = monomial_search(&alphas, n, eff_budget);
        let exact = value.is_infinite() || eff_budget >= lcm_of_degrees(&gens);
        let upper = if exact {
            value.clone()
        } else {
            multiplicity_of(&gens, n, limits)?
        };
        return Ok(InnerReport {
            lower: value,
            upper,
            exact,
            witness: Some(
                exps.iter()
                    .map(|&a| {
                        if a == 0 {
                            UniPoly::zero()
                        } else {
                            UniPoly::monomial(GaussianRational::one(), a)
                        }
                    })
                    .collect(),
            ),
            linear_rank: 0,
            lower_provenance: LowerProvenance::MonomialSearch,
            upper_provenance: if exact {
                UpperProvenance::MonomialAssumption
            } else {
                UpperProvenance::Multiplicity
            },
        });
    }

    // univariate: the type is the minimal vanishing order
    if n == 1 {
        let d = gens.iter().filter_map(PolyC::order).min().unwrap();
        return Ok(InnerReport {
            lower: finite(d as u64),
            upper: finite(d as u64),
            exact: true,
            witness: Some(line_components(1, 0)),
            linear_rank: 0,
            lower_provenance: LowerProvenance::Univariate,
            upper_provenance: UpperProvenance::Univariate,
        });
    }

    let presentation = IdealPresentation::origin(n, gens.clone())?;
    let sb = standard_basis(&presentation, limits)?;
    let zero_dim = sb
        .pure_power_bounds(n)
        .iter()
        .all(Option::is_some);
    if !zero_dim {
        // a positive-dimensional zero set contains curves through the
        // point, so the type is infinite; the search may exhibit one
        let search = curve_search(&gens, n, budget);
        let witness = if search.value.is_infinite() {
            search.witness
        } else {
            None
        };
        return Ok(InnerReport {
            lower: ExtendedRational::Infinite,
            upper: ExtendedRational::Infinite,
            exact: true,
            witness,
            linear_rank: 0,
            lower_provenance: LowerProvenance::ContainedCurve,
            upper_provenance: UpperProvenance::PositiveDimensional,
        });
    }
    let mult = finite(sb.staircase(n).unwrap().len() as u64);

    // homogeneous generators cap the type at the maximal generator degree
    let homogeneous = gens.iter().all(PolyC::is_homogeneous);
    let degree_cap = gens.iter().filter_map(PolyC::total_degree).max().unwrap();
    let (upper, upper_provenance) = if homogeneous && finite(degree_cap as u64) < mult {
        (finite(degree_cap as u64), UpperProvenance::HomogeneousDegreeCap)
    } else {
        (mult, UpperProvenance::Multiplicity)
    };

    let search = curve_search(&gens, n, budget);
    debug_assert!(!search.value.is_infinite(), "no curve fits a zero-dimensional zero set");
    let exact = search.value == upper;
    Ok(InnerReport {
        lower: search.value,
        upper,
        exact,
        witness: search.witness,
        linear_rank: 0,
        lower_provenance: LowerProvenance::CurveSearch,
        upper_provenance,
    })
}

fn multiplicity_of(gens: &[PolyC], n: usize, limits: &Limits) -> Result<ExtendedRational> {
    let p = IdealPresentation::origin(n, gens.to_vec())?;
    multiplicity_with(&p, limits)
}

/// 1-type of a raw centered generating set in its own chart: value, witness
/// components, certification. Used by the cylinder estimators on
/// restriction-derived ideals that never exist as standalone presentations.
pub(crate) fn delta1_bounds_core_for_catlin(
    gens: Vec<PolyC>,
    nvars: usize,
    budget: u32,
) -> Result<(ExtendedRational, Option<Vec<UniPoly>>, bool)> {
    let inner = delta1_core(gens, nvars, budget, &Limits::default())?;
    Ok((inner.lower, inner.witness, inner.exact))
}

fn line_components(n: usize, axis: usize) -> Vec<UniPoly> {
    (0..n)
        .map(|j| {
            if j == axis {
                UniPoly::monomial(GaussianRational::one(), 1)
            } else {
                UniPoly::zero()
            }
        })
        .collect()
}

/// Certified bounds on the 1-type of an arbitrary ideal presentation:
/// a witnessed lower bound from the curve search (with the root bound from
/// the multiplicity chain when linear forms are present) and an upper bound
/// from the multiplicity or a homogeneity cap. `exact` only when they meet.
pub fn delta1_bounds(ideal: &IdealPresentation, budget: u32) -> Result<Delta1Report> {
    let limits = Limits::default();
    let inner = delta1_core(
        ideal.centered_generators().to_vec(),
        ideal.nvars(),
        budget,
        &limits,
    )?;
    let witness = match inner.witness {
        Some(comps) => Some(CurveGerm::from_polynomials(
            comps,
            ideal.base_point().to_vec(),
            crate::series::DEFAULT_TRUNCATION,
        )?),
        None => None,
    };
    let mult = multiplicity_with(ideal, &limits)?;
    Ok(Delta1Report {
        lower: inner.lower,
        upper: inner.upper,
        exact: inner.exact,
        witness,
        linear_rank: inner.linear_rank,
        multiplicity: Some(mult),
        lower_provenance: inner.lower_provenance,
        upper_provenance: inner.upper_provenance,
    })
}

// ---------------------------------------------------------------------------
// sampled q-types

/// One accepted slice sample: the restricted 1-type value, its
/// certification, the witness curve in ambient coordinates, and the frame.
#[derive(Clone, Debug)]
pub(crate) struct SampleDelta1 {
    pub value: ExtendedRational,
    pub certified: bool,
    pub witness_ambient: Option<Vec<UniPoly>>,
    pub frame: SliceFrame,
}

/// Per-sample restricted 1-types over the sampler's tuples. Samples run in
/// parallel; the output order is by sample index, so downstream aggregation
/// is deterministic.
pub(crate) fn sampled_delta1(
    ideal: &IdealPresentation,
    sampler: &SliceSampler,
    budget: u32,
) -> Result<(Vec<SampleDelta1>, usize)> {
    let n = ideal.nvars();
    let q = sampler.q;
    if q < 2 || q > n {
        return Err(Error::InvalidParameter(format!(
            "q = {} out of range 2..={}",
            q, n
        )));
    }
    let m = n - (q - 1);
    let monomial = ideal.all_monomial();
    let limits = Limits::default();
    let outcomes: Vec<Option<Result<SampleDelta1>>> = (0..sampler.samples)
        .into_par_iter()
        .map(|idx| {
            let slice = sampler.draw(idx, n)?;
            Some((|| {
                let frame = SliceFrame::new(&slice)?;
                if monomial && m <= 2 {
                    let alphas: Vec<Exponents> = ideal
                        .centered_generators()
                        .iter()
                        .filter(|g| !g.is_zero())
                        .map(|g| g.monomial_parts().unwrap().0.clone())
                        .collect();
                    let (value, dir) =
                        monomial_direction_delta1(&alphas, frame.images(), m)
                            .expect("direction analysis applies for m <= 2");
                    let restricted: Vec<UniPoly> = dir
                        .iter()
                        .map(|c| {
                            if c.is_zero() {
                                UniPoly::zero()
                            } else {
                                UniPoly::monomial(c.clone(), 1)
                            }
                        })
                        .collect();
                    let witness = frame.embed_components(&restricted);
                    Ok(SampleDelta1 {
                        value,
                        certified: true,
                        witness_ambient: Some(witness),
                        frame,
                    })
                } else {
                    let rgens: Vec<PolyC> = ideal
                        .centered_generators()
                        .iter()
                        .map(|g| frame.restrict_poly(g))
                        .collect();
                    let inner = delta1_core(rgens, m, budget, &limits)?;
                    let witness = inner.witness.map(|w| frame.embed_components(&w));
                    Ok(SampleDelta1 {
                        value: inner.lower,
                        certified: inner.exact,
                        witness_ambient: witness,
                        frame,
                    })
                }
            })())
        })
        .collect();
    let mut rejected = 0;
    let mut samples = Vec::new();
    for o in outcomes {
        match o {
            None => rejected += 1,
            Some(r) => samples.push(r?),
        }
    }
    Ok((samples, rejected))
}

/// Generic-value q-type: the modal restricted 1-type over sampled
/// non-degenerate tuples of `q - 1` linear forms.
pub fn tilde_deltaq(
    ideal: &IdealPresentation,
    sampler: &SliceSampler,
    budget: u32,
) -> Result<GenericValueReport> {
    let (samples, rejected) = sampled_delta1(ideal, sampler, budget)?;
    let values: Vec<SampleValue> = samples
        .iter()
        .map(|s| SampleValue {
            value: s.value.clone(),
            certified: s.certified,
        })
        .collect();
    summarize(&values, rejected, sampler.seed)
}

/// Sampled-infimum q-type: the minimum restricted 1-type across samples.
/// The true q-type is an infimum over the infinite family of non-degenerate
/// tuples, so `min_value` is an upper estimate for it; the full histogram is
/// reported alongside.
pub fn deltaq_sampled_inf(
    ideal: &IdealPresentation,
    sampler: &SliceSampler,
    budget: u32,
) -> Result<GenericValueReport> {
    tilde_deltaq(ideal, sampler, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyC;

    fn zv(n: usize, j: usize) -> PolyC {
        PolyC::var(n, j)
    }

    fn ideal(n: usize, gens: Vec<PolyC>) -> IdealPresentation {
        IdealPresentation::origin(n, gens).unwrap()
    }

    #[test]
    fn monomial_type_of_two_pure_powers() {
        let i = ideal(2, vec![zv(2, 0).pow(2), zv(2, 1).pow(3)]);
        let rep = delta1_monomial(&i, 6).unwrap();
        assert_eq!(rep.lower, finite(3));
        assert!(rep.exact);
        // witness realizes the value (several curves do: (t^3, t^2) and the
        // axis line (0, t) both give 3)
        let w = rep.witness.unwrap();
        assert_eq!(
            crate::contact::ideal_contact(&w, &i).unwrap(),
            finite(3)
        );
    }

    #[test]
    fn monomial_type_of_maximal_ideal() {
        let i = ideal(2, vec![zv(2, 0), zv(2, 1)]);
        let rep = delta1_monomial(&i, 4).unwrap();
        assert_eq!(rep.lower, finite(1));
        assert!(rep.exact);
    }

    #[test]
    fn monomial_type_with_mixed_generators() {
        // (z1 z2, z1^3, z2^3): best normalized value is 3 on (t, t^2)
        let i = ideal(
            2,
            vec![
                zv(2, 0).mul(&zv(2, 1)),
                zv(2, 0).pow(3),
                zv(2, 1).pow(3),
            ],
        );
        let rep = delta1_monomial(&i, 6).unwrap();
        assert_eq!(rep.lower, finite(3));
        assert!(rep.exact);
        let w = rep.witness.unwrap();
        assert_eq!(
            crate::contact::ideal_contact(&w, &i).unwrap(),
            finite(3)
        );
    }

    #[test]
    fn monomial_type_rejects_small_budget() {
        let i = ideal(2, vec![zv(2, 0).pow(2), zv(2, 1).pow(3)]);
        assert!(matches!(
            delta1_monomial(&i, 2),
            Err(Error::BudgetTooSmall { .. })
        ));
        let j = ideal(2, vec![zv(2, 0).add(&zv(2, 1)), zv(2, 1).pow(2)]);
        assert!(matches!(
            delta1_monomial(&j, 6),
            Err(Error::NonMonomialGenerator)
        ));
    }

    #[test]
    fn monomial_type_infinite_with_witness() {
        // (z1 z2) is not zero-dimensional: the axis curve is contained
        let i = ideal(2, vec![zv(2, 0).mul(&zv(2, 1))]);
        let rep = delta1_monomial(&i, 4).unwrap();
        assert_eq!(rep.lower, ExtendedRational::Infinite);
        assert!(rep.exact);
        let w = rep.witness.unwrap();
        assert_eq!(
            crate::contact::ideal_contact(&w, &i).unwrap(),
            ExtendedRational::Infinite
        );
    }

    #[test]
    fn bounds_for_perturbed_ideal() {
        // (z1^2 + z2^3, z2^2): search achieves 2 on (t, t); the only upper
        // certificate is the multiplicity 4, so the report is not exact
        let i = ideal(
            2,
            vec![zv(2, 0).pow(2).add(&zv(2, 1).pow(3)), zv(2, 1).pow(2)],
        );
        let rep = delta1_bounds(&i, 8).unwrap();
        assert_eq!(rep.lower, finite(2));
        assert_eq!(rep.upper, finite(4));
        assert!(!rep.exact);
        assert_eq!(rep.upper_provenance, UpperProvenance::Multiplicity);
        let w = rep.witness.unwrap();
        assert_eq!(crate::contact::ideal_contact(&w, &i).unwrap(), finite(2));
    }

    #[test]
    fn bounds_for_maximal_ideal_are_exact() {
        let i = ideal(2, vec![zv(2, 0), zv(2, 1)]);
        let rep = delta1_bounds(&i, 4).unwrap();
        assert_eq!(rep.lower, finite(1));
        assert_eq!(rep.upper, finite(1));
        assert!(rep.exact);
        assert_eq!(rep.linear_rank, 2);
    }

    #[test]
    fn bounds_with_one_linear_form() {
        // (z1^2, z2^3, z3): restriction along z3 leaves the monomial pair,
        // type 3, multiplicity 6, chain 3 <= 6 <= 9
        let i = ideal(3, vec![zv(3, 0).pow(2), zv(3, 1).pow(3), zv(3, 2)]);
        let rep = delta1_bounds(&i, 8).unwrap();
        assert_eq!(rep.lower, finite(3));
        assert!(rep.exact);
        assert_eq!(rep.linear_rank, 1);
        assert_eq!(rep.multiplicity, Some(finite(6)));
        let w = rep.witness.unwrap();
        assert_eq!(w.nvars(), 3);
        assert_eq!(crate::contact::ideal_contact(&w, &i).unwrap(), finite(3));
    }

    #[test]
    fn exact_report_has_matching_bounds() {
        // exact flag only when lower meets upper
        let i = ideal(2, vec![zv(2, 0).pow(2), zv(2, 1).pow(3)]);
        let rep = delta1_bounds(&i, 8).unwrap();
        assert!(rep.exact);
        assert_eq!(rep.lower, finite(3));
        assert_eq!(rep.upper, finite(3));
    }

    #[test]
    fn direction_analysis_matches_hand_computation() {
        // generators z1^2, z2^3, z3^3 restricted along generic images:
        // killing the first form leaves degree 3, the others leave 2
        let alphas = vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 3]];
        let images = vec![
            PolyC::var(2, 0),
            PolyC::var(2, 1),
            PolyC::var(2, 0).add(&PolyC::var(2, 1)),
        ];
        let (value, dir) = monomial_direction_delta1(&alphas, &images, 2).unwrap();
        assert_eq!(value, finite(3));
        // the witness direction kills the first image
        assert!(images[0]
            .eval(&dir)
            .is_zero());
    }

    #[test]
    fn tilde_deltaq_three_quadrics() {
        let i = ideal(
            3,
            vec![zv(3, 0).pow(2), zv(3, 1).pow(2), zv(3, 2).pow(2)],
        );
        let sampler = SliceSampler::new(17, 60, 10_000, 2);
        let rep = tilde_deltaq(&i, &sampler, 8).unwrap();
        assert_eq!(rep.modal_value, finite(2));
        assert!(rep.exact);
        assert_eq!(rep.min_value, finite(2));
        assert_eq!(rep.max_value, finite(2));
    }

    #[test]
    fn tilde_deltaq_maximal_ideal() {
        let i = ideal(3, vec![zv(3, 0), zv(3, 1), zv(3, 2)]);
        let sampler = SliceSampler::new(23, 40, 10_000, 2);
        let rep = tilde_deltaq(&i, &sampler, 8).unwrap();
        assert_eq!(rep.modal_value, finite(1));
        assert!(rep.exact);
    }

    #[test]
    fn tilde_deltaq_plane_pair_is_univariate() {
        let i = ideal(2, vec![zv(2, 0).pow(2), zv(2, 1).pow(3)]);
        let sampler = SliceSampler::new(29, 50, 10_000, 2);
        let rep = tilde_deltaq(&i, &sampler, 8).unwrap();
        assert_eq!(rep.modal_value, finite(2));
        assert!(rep.exact);
        let inf = deltaq_sampled_inf(&i, &sampler, 8).unwrap();
        assert_eq!(inf.min_value, finite(2));
    }

    #[test]
    fn seed_independence_of_modal_value() {
        let i = ideal(
            3,
            vec![zv(3, 0).pow(2), zv(3, 1).pow(2), zv(3, 2).pow(2)],
        );
        let a = tilde_deltaq(&i, &SliceSampler::new(1, 50, 10_000, 2), 8).unwrap();
        let b = tilde_deltaq(&i, &SliceSampler::new(2, 50, 10_000, 2), 8).unwrap();
        assert_eq!(a.modal_value, b.modal_value);
    }

    #[test]
    fn mixed_degree_monomial_qtype() {
        // (z2^3, z3^3) in 3 variables, q = 2: a generic plane leaves two
        // distinct cubes of linear forms, type 3
        let i = ideal(3, vec![zv(3, 1).pow(3), zv(3, 2).pow(3)]);
        let sampler = SliceSampler::new(31, 60, 10_000, 2);
        let rep = tilde_deltaq(&i, &sampler, 8).unwrap();
        assert_eq!(rep.modal_value, finite(3));
        assert!(rep.exact);
    }

    #[test]
    fn q_equals_n_restricts_to_a_line() {
        let i = ideal(
            3,
            vec![zv(3, 0).pow(2), zv(3, 1).pow(2), zv(3, 2).pow(2)],
        );
        let sampler = SliceSampler::new(37, 40, 10_000, 3);
        let rep = tilde_deltaq(&i, &sampler, 8).unwrap();
        assert_eq!(rep.modal_value, finite(2));
        assert!(rep.exact);
    }
}
