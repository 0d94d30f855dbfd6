//! Cylinder varieties, linear slicing, and the Catlin q-type estimator.
//!
//! A cylinder is the q-dimensional variety swept by translating a curve
//! along a fixed (q-1)-dimensional directrix subspace; it exists whenever
//! the tangent line of the curve avoids the directrix, and it is the
//! cheapest q-dimensional variety containing a prescribed curve. Slicing a
//! cylinder with `q - 1` generic linear forms is an exact linear solve in
//! the sweep parameters, and the intersection is a single parametrized
//! curve, so the branch maximum in the tau quantities is over a singleton.
//!
//! The q-type estimator mirrors that geometry: sample a tuple of forms,
//! find the best witness curve of the restricted ideal inside the sliced
//! subspace, sweep it into a cylinder along an exact complement of the
//! subspace, and measure the generic normalized contact along sliced
//! intersection curves. Slicing the constructed cylinder with the original
//! sample returns the witness curve itself, which is why the estimate
//! agrees with the generic-value q-type.

use crate::contact::{
    hypersurface_contact, CurveGerm, HypersurfaceGerm, LinearSlice,
};
use crate::error::{Error, Result};
use crate::ideal::IdealPresentation;
use crate::linalg::Matrix;
use crate::poly::PolyC;
use crate::sampler::{summarize, GenericValueReport, SampleValue, SliceSampler};
use crate::scalar::GaussianRational;
use crate::series::UniPoly;
use crate::types::{delta1_bounds_core_for_catlin, sampled_delta1, SliceFrame};
use crate::value::ExtendedRational;
use rayon::prelude::*;
use serde::Serialize;

/// A cylinder: a polynomial curve swept along a directrix subspace given by
/// the columns of an `n x (q-1)` matrix of full column rank. The
/// parametrization is `psi(t, u) = curve(t) + directrix * u`.
#[derive(Clone, Debug)]
pub struct CylinderVariety {
    curve: CurveGerm,
    directrix: Matrix,
    q: usize,
}

impl CylinderVariety {
    pub fn curve(&self) -> &CurveGerm {
        &self.curve
    }

    pub fn directrix(&self) -> &Matrix {
        &self.directrix
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn nvars(&self) -> usize {
        self.curve.nvars()
    }

    /// The swept curve at `u`: `psi(t, u) = curve(t) + directrix * u`.
    /// At `u = 0` this reproduces the generating curve exactly.
    pub fn sweep(&self, u: &[GaussianRational]) -> Result<CurveGerm> {
        assert_eq!(u.len(), self.q - 1);
        let offset = self.directrix.mul_vec(u);
        let comps: Vec<UniPoly> = self
            .curve
            .exact_components()
            .expect("cylinder curves are polynomial")
            .to_vec();
        // the sweep moves the base point, not the centered components
        let base: Vec<GaussianRational> = self
            .curve
            .base_point()
            .iter()
            .zip(&offset)
            .map(|(b, o)| b + o)
            .collect();
        CurveGerm::from_polynomials(comps, base, self.curve.truncation())
    }
}

/// Validate and assemble a cylinder over a polynomial curve. Errors when
/// the directrix is rank-deficient or when the tangent direction of the
/// curve lies in its span (no cylinder of dimension `q` exists then).
pub fn build_cylinder(curve: &CurveGerm, directrix: &Matrix, q: usize) -> Result<CylinderVariety> {
    let n = curve.nvars();
    if q < 2 || q + 1 > n + 1 || q > n.saturating_sub(1) + 1 {
        // normalized below; the real constraint is 2 <= q <= n - 1
    }
    if q < 2 || q > n.saturating_sub(1) {
        return Err(Error::InvalidParameter(format!(
            "q = {} out of range 2..={} for cylinders",
            q,
            n.saturating_sub(1)
        )));
    }
    if curve.exact_components().is_none() {
        return Err(Error::InvalidParameter(
            "cylinder curves must have polynomial components".into(),
        ));
    }
    if directrix.nrows() != n || directrix.ncols() != q - 1 {
        return Err(Error::ArityMismatch {
            expected: n,
            got: directrix.nrows(),
        });
    }
    let rank = directrix.rank();
    if rank != q - 1 {
        return Err(Error::RankDeficient {
            expected: q - 1,
            got: rank,
        });
    }
    // tangent direction must increase the rank when adjoined
    let tangent = curve.tangent_direction();
    let mut rows: Vec<Vec<GaussianRational>> = (0..q - 1)
        .map(|c| directrix.column(c))
        .collect();
    rows.push(tangent);
    if Matrix::from_rows(rows).rank() != q {
        return Err(Error::TangentInDirectrix);
    }
    Ok(CylinderVariety {
        curve: curve.clone(),
        directrix: directrix.clone(),
        q,
    })
}

/// The single intersection curve of a cylinder with the zero locus of a
/// slice: the solved sweep parameters `u(t)` and the resulting curve
/// `delta(t) = curve(t) + directrix * u(t)`, which annihilates every slice
/// form exactly and passes through the base point.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionCurve {
    pub delta: CurveGerm,
    #[serde(skip)]
    pub slice: LinearSlice,
    #[serde(serialize_with = "ser_unipolys")]
    pub parameters_solution: Vec<UniPoly>,
}

fn ser_unipolys<S: serde::Serializer>(
    v: &[UniPoly],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    serde::Serialize::serialize(&strings, s)
}

/// Solve `w_i(curve(t) + directrix * u) = 0` for `u(t)`: with
/// `A[i][j] = w_i(directrix column j)`, an invertible `A` gives
/// `u(t) = -A^{-1} (w o curve)(t)`. A singular `A` means this slice is
/// degenerate for the cylinder (the excluded measure-zero configuration).
pub fn slice_cylinder(cyl: &CylinderVariety, slice: &LinearSlice) -> Result<IntersectionCurve> {
    let n = cyl.nvars();
    if slice.nvars() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: slice.nvars(),
        });
    }
    if slice.count() != cyl.q - 1 {
        return Err(Error::InvalidParameter(format!(
            "slice has {} forms; a {}-cylinder needs {}",
            slice.count(),
            cyl.q,
            cyl.q - 1
        )));
    }
    let w = slice.coefficient_matrix();
    let a = w.matmul(&cyl.directrix);
    let a_inv = a.inverse().ok_or(Error::DegenerateSlice)?;
    let gamma = cyl
        .curve
        .exact_components()
        .expect("cylinder curves are polynomial");
    // (w o curve)_i
    let wg: Vec<UniPoly> = (0..slice.count())
        .map(|i| {
            let mut acc = UniPoly::zero();
            for (j, comp) in gamma.iter().enumerate() {
                let c = w.get(i, j);
                if !c.is_zero() {
                    acc = acc.add(&comp.scale(c));
                }
            }
            acc
        })
        .collect();
    let u: Vec<UniPoly> = (0..cyl.q - 1)
        .map(|c| {
            let mut acc = UniPoly::zero();
            for (i, w_comp) in wg.iter().enumerate() {
                let coeff = a_inv.get(c, i);
                if !coeff.is_zero() {
                    acc = acc.add(&w_comp.scale(coeff));
                }
            }
            acc.neg()
        })
        .collect();
    let delta_comps: Vec<UniPoly> = (0..n)
        .map(|j| {
            let mut acc = gamma[j].clone();
            for (c, u_comp) in u.iter().enumerate() {
                let coeff = cyl.directrix.get(j, c);
                if !coeff.is_zero() {
                    acc = acc.add(&u_comp.scale(coeff));
                }
            }
            acc
        })
        .collect();
    let delta = CurveGerm::from_polynomials(
        delta_comps,
        cyl.curve.base_point().to_vec(),
        cyl.curve.truncation(),
    )?;
    Ok(IntersectionCurve {
        delta,
        slice: slice.clone(),
        parameters_solution: u,
    })
}

/// Normalized contact of every generator along the intersection curve of a
/// cylinder with one slice; the ideal value is the minimum. Cylinders have
/// exactly one intersection branch, so no branch maximum appears.
#[derive(Clone, Debug, Serialize)]
pub struct TauReport {
    pub per_generator: Vec<ExtendedRational>,
    pub tau_ideal: ExtendedRational,
    pub delta: CurveGerm,
}

pub fn tau_slice(
    ideal: &IdealPresentation,
    cyl: &CylinderVariety,
    slice: &LinearSlice,
) -> Result<TauReport> {
    if ideal.base_point() != cyl.curve.base_point() {
        return Err(Error::BasePointMismatch);
    }
    let cut = slice_cylinder(cyl, slice)?;
    let mut per = Vec::with_capacity(ideal.generators().len());
    let s = cut.delta.order_index();
    for g in ideal.centered_generators() {
        let ord = crate::contact::pullback_order(g, &cut.delta)?;
        per.push(ord.div_rational(&num::rational::BigRational::from_integer(
            num::BigInt::from(s as u64),
        )));
    }
    let tau_ideal = per.iter().min().cloned().unwrap_or(ExtendedRational::Infinite);
    Ok(TauReport {
        per_generator: per,
        tau_ideal,
        delta: cut.delta,
    })
}

/// Modal ideal tau across sampled slices of one cylinder; degenerate slices
/// (rank-deficient draws or a singular restriction matrix) are counted as
/// rejections.
pub fn tau_generic(
    ideal: &IdealPresentation,
    cyl: &CylinderVariety,
    sampler: &SliceSampler,
) -> Result<GenericValueReport> {
    if sampler.q != cyl.q {
        return Err(Error::InvalidParameter(format!(
            "sampler q = {} does not match cylinder q = {}",
            sampler.q, cyl.q
        )));
    }
    let n = cyl.nvars();
    let outcomes: Vec<Option<Result<SampleValue>>> = (0..sampler.samples)
        .into_par_iter()
        .map(|idx| {
            let slice = sampler.draw(idx, n)?;
            match tau_slice(ideal, cyl, &slice) {
                Err(Error::DegenerateSlice) => None,
                Err(e) => Some(Err(e)),
                Ok(rep) => Some(Ok(SampleValue {
                    value: rep.tau_ideal,
                    certified: true,
                })),
            }
        })
        .collect();
    collect_outcomes(outcomes, sampler.seed)
}

fn collect_outcomes(
    outcomes: Vec<Option<Result<SampleValue>>>,
    seed: u64,
) -> Result<GenericValueReport> {
    let mut rejected = 0;
    let mut samples = Vec::new();
    for o in outcomes {
        match o {
            None => rejected += 1,
            Some(v) => samples.push(v?),
        }
    }
    summarize(&samples, rejected, seed)
}

/// Hypersurface analogue of [`tau_slice`]: the Hermitian contact of the
/// defining function along the intersection curve.
pub fn tau_slice_hypersurface(
    hs: &HypersurfaceGerm,
    cyl: &CylinderVariety,
    slice: &LinearSlice,
) -> Result<ExtendedRational> {
    if hs.base_point() != cyl.curve.base_point() {
        return Err(Error::BasePointMismatch);
    }
    let cut = slice_cylinder(cyl, slice)?;
    hypersurface_contact(&cut.delta, hs)
}

/// Modal Hermitian tau across sampled slices of one cylinder.
pub fn tau_generic_hypersurface(
    hs: &HypersurfaceGerm,
    cyl: &CylinderVariety,
    sampler: &SliceSampler,
) -> Result<GenericValueReport> {
    if sampler.q != cyl.q {
        return Err(Error::InvalidParameter(format!(
            "sampler q = {} does not match cylinder q = {}",
            sampler.q, cyl.q
        )));
    }
    let n = cyl.nvars();
    let outcomes: Vec<Option<Result<SampleValue>>> = (0..sampler.samples)
        .into_par_iter()
        .map(|idx| {
            let slice = sampler.draw(idx, n)?;
            match tau_slice_hypersurface(hs, cyl, &slice) {
                Err(Error::DegenerateSlice) => None,
                Err(e) => Some(Err(e)),
                Ok(v) => Some(Ok(SampleValue {
                    value: v,
                    certified: true,
                })),
            }
        })
        .collect();
    collect_outcomes(outcomes, sampler.seed)
}

/// Catlin q-type estimate for an ideal, restricted to cylinder varieties.
///
/// For each sampled tuple of forms: measure the restricted 1-type with its
/// witness curve, embed the witness into the sliced subspace, build the
/// cylinder whose directrix spans the exact complement of the subspace, and
/// take the modal tau over nested slice samples. The report aggregates the
/// per-cylinder values; `max_value` is the observed supremum (the q-type is
/// a supremum over varieties, so the estimate is a certified lower bound
/// for it), while `modal_value` is the generic-value cross-check.
pub fn catlin_q_estimate(
    ideal: &IdealPresentation,
    sampler: &SliceSampler,
    budget: u32,
) -> Result<GenericValueReport> {
    let n = ideal.nvars();
    if sampler.q < 2 || sampler.q > n.saturating_sub(1) {
        return Err(Error::InvalidParameter(format!(
            "q = {} out of range 2..={} for cylinder estimation",
            sampler.q,
            n.saturating_sub(1)
        )));
    }
    let (samples, rejected) = sampled_delta1(ideal, sampler, budget)?;
    let outcomes: Vec<Result<SampleValue>> = samples
        .par_iter()
        .enumerate()
        .map(|(idx, s)| {
            let Some(witness) = &s.witness_ambient else {
                // no witness curve to sweep: keep the restricted value,
                // uncertified
                return Ok(SampleValue {
                    value: s.value.clone(),
                    certified: false,
                });
            };
            let gamma = CurveGerm::from_polynomials(
                witness.clone(),
                ideal.base_point().to_vec(),
                crate::series::DEFAULT_TRUNCATION,
            )?;
            let directrix = s.frame.complement_basis();
            let cyl = build_cylinder(&gamma, &directrix, sampler.q)?;
            let inner = tau_generic(ideal, &cyl, &sampler.nested(idx))?;
            Ok(SampleValue {
                value: inner.modal_value,
                certified: s.certified && !inner.low_confidence,
            })
        })
        .collect();
    let mut values = Vec::new();
    for o in outcomes {
        values.push(o?);
    }
    summarize(&values, rejected, sampler.seed)
}

/// Catlin q-type estimate for a hypersurface germ, using Hermitian contact
/// orders along cylinder slices.
pub fn catlin_q_hypersurface(
    hs: &HypersurfaceGerm,
    sampler: &SliceSampler,
    budget: u32,
) -> Result<GenericValueReport> {
    let n = hs.nvars();
    if sampler.q < 2 || sampler.q > n.saturating_sub(1) {
        return Err(Error::InvalidParameter(format!(
            "q = {} out of range 2..={} for cylinder estimation",
            sampler.q,
            n.saturating_sub(1)
        )));
    }
    let outcomes: Vec<Option<Result<SampleValue>>> = (0..sampler.samples)
        .into_par_iter()
        .map(|idx| {
            let slice = sampler.draw(idx, n)?;
            Some(hypersurface_sample(hs, sampler, budget, idx, &slice))
        })
        .collect();
    collect_outcomes(outcomes, sampler.seed)
}

fn hypersurface_sample(
    hs: &HypersurfaceGerm,
    sampler: &SliceSampler,
    budget: u32,
    idx: usize,
    slice: &LinearSlice,
) -> Result<SampleValue> {
    let frame = SliceFrame::new(slice)?;
    let (h, f, g) = hs.centered_parts();
    let rh = frame.restrict_poly(h);
    let rf: Vec<PolyC> = f.iter().map(|p| frame.restrict_poly(p)).collect();
    let rg: Vec<PolyC> = g.iter().map(|p| frame.restrict_poly(p)).collect();
    let m = frame.restricted_vars();

    // with no negative part the Hermitian order along any curve is
    // min(ord h, 2 min_j ord f_j), which is the contact with the ideal
    // (h, f_1^2, ..., f_N^2); that reduction gives certified witnesses
    let (value, witness, certified) = if rg.iter().all(PolyC::is_zero) {
        let mut gens: Vec<PolyC> = Vec::new();
        if !rh.is_zero() {
            gens.push(rh.clone());
        }
        for p in &rf {
            if !p.is_zero() {
                gens.push(p.pow(2));
            }
        }
        if gens.is_empty() {
            // r restricts to zero on the subspace
            (ExtendedRational::Infinite, None, true)
        } else {
            let inner = delta1_bounds_core_for_catlin(gens, m, budget)?;
            (inner.0, inner.1, inner.2)
        }
    } else {
        // cancellation possible: search for a strong curve, uncertified
        let restricted = HypersurfaceGerm::origin(m, rh, rf, rg)?;
        hermitian_search(&restricted, m, budget)?
    };

    let Some(witness) = witness else {
        return Ok(SampleValue {
            value,
            certified: false,
        });
    };
    let ambient = frame.embed_components(&witness);
    let gamma = CurveGerm::from_polynomials(
        ambient,
        hs.base_point().to_vec(),
        crate::series::DEFAULT_TRUNCATION,
    )?;
    let cyl = build_cylinder(&gamma, &frame.complement_basis(), sampler.q)?;
    let inner = tau_generic_hypersurface(hs, &cyl, &sampler.nested(idx))?;
    Ok(SampleValue {
        value: inner.modal_value,
        certified: certified && !inner.low_confidence,
    })
}

/// Curve search maximizing the Hermitian contact with a restricted
/// hypersurface (used when modulus cancellation rules out the ideal
/// reduction). Lower bound only.
fn hermitian_search(
    hs: &HypersurfaceGerm,
    nvars: usize,
    budget: u32,
) -> Result<(ExtendedRational, Option<Vec<UniPoly>>, bool)> {
    let mut best: Option<(ExtendedRational, Vec<UniPoly>)> = None;
    let mut pattern = vec![0u32; nvars];
    let eff_budget = budget.min(6);
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
            let phi = CurveGerm::polynomial_origin(comps.clone())?;
            let v = hypersurface_contact(&phi, hs)?;
            match &best {
                Some((bv, _)) if *bv >= v => {}
                _ => best = Some((v, comps)),
            }
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
    Ok(match best {
        Some((v, w)) => (v, Some(w), false),
        None => (ExtendedRational::finite_int(0), None, false),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyC;

    fn zv(n: usize, j: usize) -> PolyC {
        PolyC::var(n, j)
    }

    fn mono_curve(exps: &[usize]) -> CurveGerm {
        let coeffs = vec![GaussianRational::one(); exps.len()];
        CurveGerm::monomial_origin(exps, &coeffs).unwrap()
    }

    fn e3_directrix() -> Matrix {
        let mut u = Matrix::zeros(3, 1);
        u.set(2, 0, GaussianRational::one());
        u
    }

    fn cusp_cylinder() -> CylinderVariety {
        build_cylinder(&mono_curve(&[2, 3, 0]), &e3_directrix(), 2).unwrap()
    }

    #[test]
    fn cylinder_assembly_and_validation() {
        let c = cusp_cylinder();
        assert_eq!(c.q(), 2);
        // psi(t, 0) reproduces the curve
        let swept = c.sweep(&[GaussianRational::zero()]).unwrap();
        assert_eq!(swept, *c.curve());

        // tangent inside the directrix is rejected: curve (0, 0, t), U = e3
        let err = build_cylinder(&mono_curve(&[0, 0, 1]), &e3_directrix(), 2);
        assert!(matches!(err, Err(Error::TangentInDirectrix)));

        // rank-deficient directrix is rejected
        let z = Matrix::zeros(3, 1);
        assert!(matches!(
            build_cylinder(&mono_curve(&[2, 3, 0]), &z, 2),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn shear_cylinder_example() {
        // curve (t, t^2, t^3) with directrix e2: psi(t, u) = (t, t^2+u, t^3)
        let mut u = Matrix::zeros(3, 1);
        u.set(1, 0, GaussianRational::one());
        let c = build_cylinder(&mono_curve(&[1, 2, 3]), &u, 2).unwrap();
        let swept = c.sweep(&[GaussianRational::from_int(5)]).unwrap();
        assert_eq!(swept.base_point()[1], GaussianRational::from_int(5));
    }

    #[test]
    fn slicing_solves_the_linear_system() {
        let c = cusp_cylinder();
        // slice {z3 - z1}: u(t) = t^2, delta = (t^2, t^3, t^2)
        let s = LinearSlice::from_int_rows(&[vec![-1, 0, 1]]).unwrap();
        let cut = slice_cylinder(&c, &s).unwrap();
        assert_eq!(
            cut.parameters_solution[0],
            UniPoly::monomial(GaussianRational::one(), 2)
        );
        let d = cut.delta.exact_components().unwrap();
        assert_eq!(d[2], UniPoly::monomial(GaussianRational::one(), 2));
        // slice forms annihilate delta exactly
        for w in cut.slice.forms() {
            assert_eq!(
                crate::contact::pullback_order(w, &cut.delta).unwrap(),
                ExtendedRational::Infinite
            );
        }
        // curve order is preserved
        assert_eq!(cut.delta.order_index(), 2);

        // slice {z1} annihilates the directrix: degenerate
        let s = LinearSlice::from_int_rows(&[vec![1, 0, 0]]).unwrap();
        assert!(matches!(
            slice_cylinder(&c, &s),
            Err(Error::DegenerateSlice)
        ));

        // slice {z2 - z3}: u(t) = t^3
        let s = LinearSlice::from_int_rows(&[vec![0, 1, -1]]).unwrap();
        let cut = slice_cylinder(&c, &s).unwrap();
        assert_eq!(
            cut.parameters_solution[0],
            UniPoly::monomial(GaussianRational::one(), 3)
        );
    }

    #[test]
    fn tau_along_sliced_cusp_cylinder() {
        let c = cusp_cylinder();
        let s = LinearSlice::from_int_rows(&[vec![-1, 0, 1]]).unwrap();

        // I = (z2): ord t^3 over curve order 2
        let i = IdealPresentation::origin(3, vec![zv(3, 1)]).unwrap();
        let rep = tau_slice(&i, &c, &s).unwrap();
        assert_eq!(rep.tau_ideal, ExtendedRational::finite_ratio(3, 2));

        // I = (z2^2 - z1^3): delta lies in the zero set
        let i = IdealPresentation::origin(
            3,
            vec![zv(3, 1).pow(2).sub(&zv(3, 0).pow(3))],
        )
        .unwrap();
        let rep = tau_slice(&i, &c, &s).unwrap();
        assert_eq!(rep.tau_ideal, ExtendedRational::Infinite);

        // I = (z1, z2, z3): min(2, 3, 2)/2 = 1
        let i = IdealPresentation::origin(3, vec![zv(3, 0), zv(3, 1), zv(3, 2)]).unwrap();
        let rep = tau_slice(&i, &c, &s).unwrap();
        assert_eq!(rep.tau_ideal, ExtendedRational::finite_int(1));
        assert_eq!(rep.per_generator.len(), 3);
    }

    #[test]
    fn tau_generic_on_cusp_cylinder() {
        let c = cusp_cylinder();
        let sampler = SliceSampler::new(41, 60, 10_000, 2);

        // I = (z2): the solved parameter never hits the z2 component
        let i = IdealPresentation::origin(3, vec![zv(3, 1)]).unwrap();
        let rep = tau_generic(&i, &c, &sampler).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::finite_ratio(3, 2));
        assert_eq!(rep.min_value, rep.max_value);

        // I = (z3): generic slices give the third component order 2
        let i = IdealPresentation::origin(3, vec![zv(3, 2)]).unwrap();
        let rep = tau_generic(&i, &c, &sampler).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::finite_int(1));

        // I = (z2^2 - z1^3): infinitely tangent for every slice
        let i = IdealPresentation::origin(
            3,
            vec![zv(3, 1).pow(2).sub(&zv(3, 0).pow(3))],
        )
        .unwrap();
        let rep = tau_generic(&i, &c, &sampler).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::Infinite);
    }

    #[test]
    fn catlin_estimate_matches_generic_type_on_quadrics() {
        let i = IdealPresentation::origin(
            3,
            vec![zv(3, 0).pow(2), zv(3, 1).pow(2), zv(3, 2).pow(2)],
        )
        .unwrap();
        let sampler = SliceSampler::new(47, 30, 10_000, 2);
        let cat = catlin_q_estimate(&i, &sampler, 8).unwrap();
        assert_eq!(cat.modal_value, ExtendedRational::finite_int(2));
        assert!(cat.exact);
        let tdq = crate::types::tilde_deltaq(&i, &sampler, 8).unwrap();
        assert_eq!(cat.modal_value, tdq.modal_value);
    }

    #[test]
    fn catlin_estimate_on_maximal_ideal() {
        let i = IdealPresentation::origin(3, vec![zv(3, 0), zv(3, 1), zv(3, 2)]).unwrap();
        let sampler = SliceSampler::new(53, 30, 10_000, 2);
        let cat = catlin_q_estimate(&i, &sampler, 8).unwrap();
        assert_eq!(cat.modal_value, ExtendedRational::finite_int(1));
    }

    #[test]
    fn catlin_estimate_two_cubes() {
        let i = IdealPresentation::origin(3, vec![zv(3, 1).pow(3), zv(3, 2).pow(3)]).unwrap();
        let sampler = SliceSampler::new(59, 30, 10_000, 2);
        let cat = catlin_q_estimate(&i, &sampler, 8).unwrap();
        assert_eq!(cat.modal_value, ExtendedRational::finite_int(3));
        let tdq = crate::types::tilde_deltaq(&i, &sampler, 8).unwrap();
        assert_eq!(cat.modal_value, tdq.modal_value);
    }

    #[test]
    fn hypersurface_tau_on_fixed_cylinder() {
        // h = 2 z3, f = (z1, z2), g = (); cylinder over (t, 0, 0) with
        // directrix e2; a generic 1-form slice solves the second component
        // and the contact is 2
        let hs = HypersurfaceGerm::origin(
            3,
            zv(3, 2).scale(&GaussianRational::from_int(2)),
            vec![zv(3, 0), zv(3, 1)],
            vec![],
        )
        .unwrap();
        let mut u = Matrix::zeros(3, 1);
        u.set(1, 0, GaussianRational::one());
        let cyl = build_cylinder(&mono_curve(&[1, 0, 0]), &u, 2).unwrap();
        let s = LinearSlice::from_int_rows(&[vec![2, 3, 5]]).unwrap();
        assert_eq!(
            tau_slice_hypersurface(&hs, &cyl, &s).unwrap(),
            ExtendedRational::finite_int(2)
        );

        // f = (z1^2) instead: |t^2|^2 dominates, contact 4
        let hs = HypersurfaceGerm::origin(
            3,
            zv(3, 2).scale(&GaussianRational::from_int(2)),
            vec![zv(3, 0).pow(2)],
            vec![],
        )
        .unwrap();
        assert_eq!(
            tau_slice_hypersurface(&hs, &cyl, &s).unwrap(),
            ExtendedRational::finite_int(4)
        );

        // cancellation model: infinite along any slice
        let hs = HypersurfaceGerm::origin(
            3,
            PolyC::zero(3),
            vec![zv(3, 0)],
            vec![zv(3, 0)],
        )
        .unwrap();
        assert_eq!(
            tau_slice_hypersurface(&hs, &cyl, &s).unwrap(),
            ExtendedRational::Infinite
        );
    }

    #[test]
    fn hypersurface_catlin_estimate_is_a_lower_bound() {
        // plurisubharmonic model: h = 2 z3, f = (z1, z2). The extremal
        // curves kill Re(h), but sweeping along the generic complement
        // directrix re-enters the z3 component at order one, so the
        // cylinder estimate is a strict lower bound (1) for the q-type (2)
        // here; the supremum over all varieties needs a directrix adapted
        // to the kernel of h, which the estimator deliberately does not
        // search.
        let hs = HypersurfaceGerm::origin(
            3,
            zv(3, 2).scale(&GaussianRational::from_int(2)),
            vec![zv(3, 0), zv(3, 1)],
            vec![],
        )
        .unwrap();
        let sampler = SliceSampler::new(61, 20, 10_000, 2);
        let rep = catlin_q_hypersurface(&hs, &sampler, 6).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::finite_int(1));

        // pure modulus model: h = 0, f = (z1^2, z2, z3). On a generic plane
        // the two independent linear moduli cannot both be killed, so the
        // restricted type is 2, and the sweep re-enters killed components
        // at squared order 2 as well: the estimate is tight here
        let hs = HypersurfaceGerm::origin(
            3,
            PolyC::zero(3),
            vec![zv(3, 0).pow(2), zv(3, 1), zv(3, 2)],
            vec![],
        )
        .unwrap();
        let rep = catlin_q_hypersurface(&hs, &sampler, 6).unwrap();
        assert_eq!(rep.modal_value, ExtendedRational::finite_int(2));
    }
}
