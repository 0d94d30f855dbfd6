//! Curve germs, orders of contact, and the q-positivity check.
//!
//! A curve germ is a parametrized holomorphic curve through a base point,
//! the carrier of every contact measurement: the normalized order of
//! contact of a curve with an ideal is the minimum pullback order over the
//! generators divided by the multiplicity of the curve, and the analogous
//! quantity for a real hypersurface uses the Hermitian (t, conj t) order of
//! the pulled-back defining function.
//!
//! When the inputs are exact polynomials, a vanishing pullback is re-checked
//! by exact composition and upgraded from `AtLeast(B)` to `Infinite`; for
//! genuinely truncated series data the one-sided `AtLeast` answer stands.

use crate::error::{Error, Result};
use crate::ideal::IdealPresentation;
use crate::linalg::Matrix;
use crate::poly::PolyC;
use crate::scalar::GaussianRational;
use crate::series::{
    compose, compose_exact, hermitian_order, hermitian_pullback, hermitian_pullback_exact,
    series_order, UniPoly, UniSeries,
};
use crate::value::ExtendedRational;
use num::rational::BigRational;
use num::BigInt;
use serde::Serialize;

// ---------------------------------------------------------------------------
// curve germs

/// Parametrized holomorphic curve `phi` with `phi(0) = base_point`.
///
/// Components are stored centered (zero constant term). Curves built from
/// polynomial data keep their exact components alongside the truncated view,
/// which makes containment in a zero set decidable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveGerm {
    base_point: Vec<GaussianRational>,
    components: Vec<UniSeries>,
    exact: Option<Vec<UniPoly>>,
}

impl CurveGerm {
    /// Curve with exact polynomial components (centered: component `j` is
    /// `phi_j(t) - base_point_j`, so it must have zero constant term).
    pub fn from_polynomials(
        components: Vec<UniPoly>,
        base_point: Vec<GaussianRational>,
        truncation: usize,
    ) -> Result<Self> {
        if components.len() != base_point.len() {
            return Err(Error::ArityMismatch {
                expected: base_point.len(),
                got: components.len(),
            });
        }
        if components.iter().any(|c| !c.coeff(0).is_zero()) {
            return Err(Error::CurveNotCentered);
        }
        if components.iter().all(|c| c.is_zero()) {
            return Err(Error::ConstantCurve);
        }
        let series = components.iter().map(|c| c.truncate(truncation)).collect();
        Ok(CurveGerm {
            base_point,
            components: series,
            exact: Some(components),
        })
    }

    /// Curve through the origin with polynomial components and the default
    /// truncation.
    pub fn polynomial_origin(components: Vec<UniPoly>) -> Result<Self> {
        let n = components.len();
        CurveGerm::from_polynomials(
            components,
            vec![GaussianRational::zero(); n],
            crate::series::DEFAULT_TRUNCATION,
        )
    }

    /// Monomial curve `(c_1 t^{a_1}, ..., c_n t^{a_n})` through the origin;
    /// an exponent of zero means the component is identically zero.
    pub fn monomial_origin(exponents: &[usize], coeffs: &[GaussianRational]) -> Result<Self> {
        assert_eq!(exponents.len(), coeffs.len());
        let comps = exponents
            .iter()
            .zip(coeffs)
            .map(|(&a, c)| {
                if a == 0 {
                    UniPoly::zero()
                } else {
                    UniPoly::monomial(c.clone(), a)
                }
            })
            .collect();
        CurveGerm::polynomial_origin(comps)
    }

    /// Curve from truncated series data; no exact containment decisions are
    /// possible for it.
    pub fn from_series(
        components: Vec<UniSeries>,
        base_point: Vec<GaussianRational>,
    ) -> Result<Self> {
        if components.len() != base_point.len() {
            return Err(Error::ArityMismatch {
                expected: base_point.len(),
                got: components.len(),
            });
        }
        if components.iter().any(|c| !c.coeff(0).is_zero()) {
            return Err(Error::CurveNotCentered);
        }
        if components.iter().all(|c| c.is_zero_truncated()) {
            return Err(Error::ConstantCurve);
        }
        Ok(CurveGerm {
            base_point,
            components,
            exact: None,
        })
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn base_point(&self) -> &[GaussianRational] {
        &self.base_point
    }

    pub fn components(&self) -> &[UniSeries] {
        &self.components
    }

    pub fn exact_components(&self) -> Option<&[UniPoly]> {
        self.exact.as_deref()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exact.is_some()
    }

    pub fn truncation(&self) -> usize {
        self.components
            .iter()
            .map(UniSeries::truncation)
            .min()
            .unwrap_or(crate::series::DEFAULT_TRUNCATION)
    }

    /// `ord_0 phi = min_j ord_0 phi_j`, as a plain index. The constructor
    /// guarantees some component is nonzero up to truncation.
    pub fn order_index(&self) -> usize {
        if let Some(exact) = &self.exact {
            exact.iter().filter_map(UniPoly::order).min().unwrap()
        } else {
            self.components
                .iter()
                .filter_map(UniSeries::order_index)
                .min()
                .unwrap()
        }
    }

    /// Coefficient tuple at the minimal order: the tangent direction of a
    /// single-branch parametrized curve (multi-branch germs must be supplied
    /// branch by branch).
    pub fn tangent_direction(&self) -> Vec<GaussianRational> {
        let s = self.order_index();
        self.components.iter().map(|c| c.coeff(s)).collect()
    }

    /// Reparametrize by `t -> t^k`.
    pub fn reparametrize_power(&self, k: usize) -> Result<Self> {
        assert!(k >= 1);
        match &self.exact {
            Some(exact) => {
                let comps = exact.iter().map(|c| c.stretch(k)).collect();
                CurveGerm::from_polynomials(comps, self.base_point.clone(), self.truncation())
            }
            None => {
                let trunc = self.truncation();
                let comps = self
                    .components
                    .iter()
                    .map(|c| {
                        let mut coeffs = vec![GaussianRational::zero(); trunc];
                        for idx in 0..trunc {
                            if idx * k < trunc {
                                coeffs[idx * k] = c.coeff(idx);
                            }
                        }
                        UniSeries::from_coeffs(coeffs, trunc)
                    })
                    .collect();
                CurveGerm::from_series(comps, self.base_point.clone())
            }
        }
    }
}

/// Curves serialize as their component expressions in `t` (exact when
/// polynomial, truncated otherwise).
impl Serialize for CurveGerm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(None)?;
        let comps: Vec<String> = match &self.exact {
            Some(ps) => ps.iter().map(|p| p.to_string()).collect(),
            None => self.components.iter().map(|s| s.to_string()).collect(),
        };
        map.serialize_entry("components", &comps)?;
        map.serialize_entry("polynomial", &self.exact.is_some())?;
        let base: Vec<String> = self.base_point.iter().map(|c| c.to_string()).collect();
        if base.iter().any(|s| s != "0") {
            map.serialize_entry("base_point", &base)?;
        }
        map.end()
    }
}

/// `ord_0 phi` as an extended value (always finite for a valid germ).
pub fn curve_order(phi: &CurveGerm) -> ExtendedRational {
    ExtendedRational::finite_int(phi.order_index() as u64)
}

/// Pullback order of one polynomial along a curve. Exact for polynomial
/// curves (`Infinite` when the curve lies in the zero set); otherwise
/// `AtLeast(B)` when the truncated pullback vanishes.
pub fn pullback_order(p: &PolyC, phi: &CurveGerm) -> Result<ExtendedRational> {
    if p.nvars() != phi.nvars() {
        return Err(Error::ArityMismatch {
            expected: phi.nvars(),
            got: p.nvars(),
        });
    }
    pullback_order_centered(p, phi)
}

pub(crate) fn pullback_order_centered(p: &PolyC, phi: &CurveGerm) -> Result<ExtendedRational> {
    if let Some(exact) = phi.exact_components() {
        let u = compose_exact(p, exact)?;
        Ok(match u.order() {
            Some(k) => ExtendedRational::finite_int(k as u64),
            None => ExtendedRational::Infinite,
        })
    } else {
        let u = compose(p, phi.components())?;
        Ok(series_order(&u))
    }
}

fn order_ratio(numerator: ExtendedRational, curve_ord: usize) -> ExtendedRational {
    let d = BigRational::from_integer(BigInt::from(curve_ord as u64));
    numerator.div_rational(&d)
}

/// Normalized order of contact of a curve with an ideal:
/// `min_g ord_0 phi^* g / ord_0 phi`, the minimum taken over generators
/// (which realizes the infimum over the whole ideal, since pulling back an
/// ideal combination can only raise the order).
pub fn ideal_contact(phi: &CurveGerm, ideal: &IdealPresentation) -> Result<ExtendedRational> {
    if ideal.nvars() != phi.nvars() {
        return Err(Error::ArityMismatch {
            expected: phi.nvars(),
            got: ideal.nvars(),
        });
    }
    if ideal.base_point() != phi.base_point() {
        return Err(Error::BasePointMismatch);
    }
    let mut best: Option<ExtendedRational> = None;
    for g in ideal.centered_generators() {
        let ord = pullback_order_centered(g, phi)?;
        best = Some(match best {
            None => ord,
            Some(b) => b.min(ord),
        });
    }
    Ok(order_ratio(best.unwrap(), phi.order_index()))
}

// ---------------------------------------------------------------------------
// hypersurface germs

/// A real hypersurface germ presented by a holomorphic decomposition of its
/// defining function: `r = Re(h) + sum |f_j|^2 - sum |g_j|^2` with `h`, the
/// `f_j`, and the `g_j` holomorphic polynomials vanishing at the base point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HypersurfaceGerm {
    nvars: usize,
    h: PolyC,
    f: Vec<PolyC>,
    g: Vec<PolyC>,
    base_point: Vec<GaussianRational>,
    centered_h: PolyC,
    centered_f: Vec<PolyC>,
    centered_g: Vec<PolyC>,
}

impl HypersurfaceGerm {
    pub fn new(
        nvars: usize,
        h: PolyC,
        f: Vec<PolyC>,
        g: Vec<PolyC>,
        base_point: Vec<GaussianRational>,
    ) -> Result<Self> {
        if base_point.len() != nvars {
            return Err(Error::ArityMismatch {
                expected: nvars,
                got: base_point.len(),
            });
        }
        for p in std::iter::once(&h).chain(&f).chain(&g) {
            if p.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: p.nvars(),
                });
            }
        }
        let centered_h = h.translate(&base_point);
        let centered_f: Vec<PolyC> = f.iter().map(|p| p.translate(&base_point)).collect();
        let centered_g: Vec<PolyC> = g.iter().map(|p| p.translate(&base_point)).collect();
        if !centered_h.constant_term().is_zero()
            || centered_f.iter().any(|p| !p.constant_term().is_zero())
            || centered_g.iter().any(|p| !p.constant_term().is_zero())
        {
            return Err(Error::HypersurfaceNotCentered);
        }
        Ok(HypersurfaceGerm {
            nvars,
            h,
            f,
            g,
            base_point,
            centered_h,
            centered_f,
            centered_g,
        })
    }

    pub fn origin(nvars: usize, h: PolyC, f: Vec<PolyC>, g: Vec<PolyC>) -> Result<Self> {
        let base = vec![GaussianRational::zero(); nvars];
        HypersurfaceGerm::new(nvars, h, f, g, base)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn h(&self) -> &PolyC {
        &self.h
    }

    pub fn f(&self) -> &[PolyC] {
        &self.f
    }

    pub fn g(&self) -> &[PolyC] {
        &self.g
    }

    pub fn base_point(&self) -> &[GaussianRational] {
        &self.base_point
    }

    pub fn centered_parts(&self) -> (&PolyC, &[PolyC], &[PolyC]) {
        (&self.centered_h, &self.centered_f, &self.centered_g)
    }
}

/// Hermitian vanishing order of the pulled-back defining function along a
/// curve, exact for polynomial curves.
pub fn hypersurface_pullback_order(
    hs: &HypersurfaceGerm,
    phi: &CurveGerm,
) -> Result<ExtendedRational> {
    let (h, f, g) = hs.centered_parts();
    if let Some(exact) = phi.exact_components() {
        let hp = hermitian_pullback_exact(h, f, g, exact)?;
        Ok(match hp.order() {
            Some(k) => ExtendedRational::finite_int(k as u64),
            None => ExtendedRational::Infinite,
        })
    } else {
        let hser = hermitian_pullback(h, f, g, phi.components())?;
        Ok(hermitian_order(&hser))
    }
}

/// Normalized Hermitian order of contact of a curve with a hypersurface:
/// `ord_0 phi^* r / ord_0 phi`.
pub fn hypersurface_contact(phi: &CurveGerm, hs: &HypersurfaceGerm) -> Result<ExtendedRational> {
    if hs.nvars() != phi.nvars() {
        return Err(Error::ArityMismatch {
            expected: phi.nvars(),
            got: hs.nvars(),
        });
    }
    if hs.base_point() != phi.base_point() {
        return Err(Error::BasePointMismatch);
    }
    let num = hypersurface_pullback_order(hs, phi)?;
    Ok(order_ratio(num, phi.order_index()))
}

// ---------------------------------------------------------------------------
// linear slices

/// A non-degenerate set of linear forms: homogeneous degree-one polynomials
/// whose coefficient matrix has full rank. `count()` forms cut an
/// `(n - count)`-dimensional linear subspace through the base point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSlice {
    forms: Vec<PolyC>,
}

impl LinearSlice {
    pub fn new(forms: Vec<PolyC>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::InvalidParameter(
                "a linear slice needs at least one form".into(),
            ));
        }
        let nvars = forms[0].nvars();
        let mut rows = Vec::with_capacity(forms.len());
        for w in &forms {
            if w.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: w.nvars(),
                });
            }
            let coeffs = w.linear_form_coeffs().ok_or(Error::NotLinearForm)?;
            rows.push(coeffs);
        }
        let m = Matrix::from_rows(rows);
        let rank = m.rank();
        if rank != forms.len() {
            return Err(Error::RankDeficient {
                expected: forms.len(),
                got: rank,
            });
        }
        Ok(LinearSlice { forms })
    }

    /// Build a slice from integer coefficient rows.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let nvars = rows.first().map_or(0, |r| r.len());
        let forms = rows
            .iter()
            .map(|r| {
                let mut p = PolyC::zero(nvars);
                for (j, &c) in r.iter().enumerate() {
                    if c != 0 {
                        p = p.add(&PolyC::var(nvars, j).scale(&GaussianRational::from_int(c)));
                    }
                }
                p
            })
            .collect();
        LinearSlice::new(forms)
    }

    pub fn forms(&self) -> &[PolyC] {
        &self.forms
    }

    pub fn count(&self) -> usize {
        self.forms.len()
    }

    pub fn nvars(&self) -> usize {
        self.forms[0].nvars()
    }

    /// Rows are the coefficient vectors of the forms.
    pub fn coefficient_matrix(&self) -> Matrix {
        Matrix::from_rows(
            self.forms
                .iter()
                .map(|w| w.linear_form_coeffs().unwrap())
                .collect(),
        )
    }
}

// ---------------------------------------------------------------------------
// q-positivity

/// Outcome of the q-positivity check for one curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Applicable and both conditions hold.
    Holds,
    /// Applicable, finite order, but a condition fails.
    Fails,
    /// Curve does not meet the quantifier (h-pullback or slice containment
    /// fails), so the condition is vacuously satisfied.
    Vacuous,
    /// Applicable but the Hermitian order is not finite (identically zero or
    /// truncation-limited); no boolean verdict is honest.
    Indeterminate,
}

impl Verdict {
    /// The boolean the definition asks for, counting vacuous as true.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Holds | Verdict::Vacuous => Some(true),
            Verdict::Fails => Some(false),
            Verdict::Indeterminate => None,
        }
    }
}

/// Full evidence for a q-positivity check: whether the curve is constrained
/// (applicable), the Hermitian order `2a`, and the two conditions (even
/// order; nonvanishing balanced `(a, a)` coefficient).
#[derive(Clone, Debug, Serialize)]
pub struct QPositivityReport {
    pub applicable: bool,
    pub order: ExtendedRational,
    pub half_order: Option<u64>,
    pub condition_even: bool,
    pub condition_balanced: bool,
    pub verdict: Verdict,
}

/// Check the two positivity conditions along one curve: the curve counts
/// only if `phi^* h` vanishes and the curve lies in the zero locus of every
/// slice form; then the pullback of `r` must have even order `2a` with a
/// nonzero balanced derivative coefficient at `(a, a)`.
pub fn q_positivity(
    phi: &CurveGerm,
    hs: &HypersurfaceGerm,
    slice: &LinearSlice,
) -> Result<QPositivityReport> {
    if hs.nvars() != phi.nvars() || slice.nvars() != phi.nvars() {
        return Err(Error::ArityMismatch {
            expected: phi.nvars(),
            got: hs.nvars().max(slice.nvars()),
        });
    }
    if hs.base_point() != phi.base_point() {
        return Err(Error::BasePointMismatch);
    }
    let (h, f, g) = hs.centered_parts();
    let h_vanishes = !pullback_order_centered(h, phi)?.is_finite();
    let in_slice = slice
        .forms()
        .iter()
        .map(|w| pullback_order_centered(w, phi))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|o| !o.is_finite());
    let applicable = h_vanishes && in_slice;

    let (order, balanced_nonzero) = if let Some(exact) = phi.exact_components() {
        let hp = hermitian_pullback_exact(h, f, g, exact)?;
        let order = match hp.order() {
            Some(k) => ExtendedRational::finite_int(k as u64),
            None => ExtendedRational::Infinite,
        };
        let balanced = match hp.order() {
            Some(k) if k % 2 == 0 => !hp.coeff(k / 2, k / 2).is_zero(),
            _ => false,
        };
        (order, balanced)
    } else {
        let hser = hermitian_pullback(h, f, g, phi.components())?;
        let order = hermitian_order(&hser);
        let balanced = match &order {
            ExtendedRational::Finite(r) => {
                let k: u64 = r.to_integer().try_into().unwrap();
                k % 2 == 0 && !hser.coeff((k / 2) as usize, (k / 2) as usize).is_zero()
            }
            _ => false,
        };
        (order, balanced)
    };

    if !applicable {
        return Ok(QPositivityReport {
            applicable,
            order,
            half_order: None,
            condition_even: false,
            condition_balanced: false,
            verdict: Verdict::Vacuous,
        });
    }
    match &order {
        ExtendedRational::Finite(r) => {
            let k: u64 = r.to_integer().try_into().unwrap();
            let even = k % 2 == 0;
            let half = if even { Some(k / 2) } else { None };
            let verdict = if even && balanced_nonzero {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            Ok(QPositivityReport {
                applicable,
                order,
                half_order: half,
                condition_even: even,
                condition_balanced: balanced_nonzero,
                verdict,
            })
        }
        // identically zero pullback (the even-order condition cannot hold)
        // or a truncation-limited order: no boolean verdict
        _ => Ok(QPositivityReport {
            applicable,
            order,
            half_order: None,
            condition_even: false,
            condition_balanced: false,
            verdict: Verdict::Indeterminate,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyC;

    fn curve(exps: &[usize]) -> CurveGerm {
        let coeffs = vec![GaussianRational::one(); exps.len()];
        CurveGerm::monomial_origin(exps, &coeffs).unwrap()
    }

    #[test]
    fn curve_order_examples() {
        assert_eq!(curve(&[2, 3]).order_index(), 2);
        assert_eq!(curve(&[1, 0]).order_index(), 1);
        assert!(matches!(
            CurveGerm::polynomial_origin(vec![UniPoly::zero(), UniPoly::zero()]),
            Err(Error::ConstantCurve)
        ));
    }

    #[test]
    fn ideal_contact_examples() {
        // I = (z1^2, z2^3), phi = (t^3, t^2): min(6, 6)/2 = 3
        let i = IdealPresentation::origin(
            2,
            vec![PolyC::var(2, 0).pow(2), PolyC::var(2, 1).pow(3)],
        )
        .unwrap();
        assert_eq!(
            ideal_contact(&curve(&[3, 2]), &i).unwrap(),
            ExtendedRational::finite_int(3)
        );

        // I = (z2^2 - z1^3), phi = (t^2, t^3): exact containment
        let cusp = IdealPresentation::origin(
            2,
            vec![PolyC::var(2, 1).pow(2).sub(&PolyC::var(2, 0).pow(3))],
        )
        .unwrap();
        assert_eq!(
            ideal_contact(&curve(&[2, 3]), &cusp).unwrap(),
            ExtendedRational::Infinite
        );

        // I = (z1), phi = (t^2, t^3): 2/2 = 1
        let lin = IdealPresentation::origin(2, vec![PolyC::var(2, 0)]).unwrap();
        assert_eq!(
            ideal_contact(&curve(&[2, 3]), &lin).unwrap(),
            ExtendedRational::finite_int(1)
        );
    }

    #[test]
    fn truncated_series_curve_reports_at_least() {
        let comps = vec![
            UniSeries::monomial(GaussianRational::one(), 2, 8),
            UniSeries::monomial(GaussianRational::one(), 3, 8),
        ];
        let phi = CurveGerm::from_series(comps, vec![GaussianRational::zero(); 2]).unwrap();
        let cusp = IdealPresentation::origin(
            2,
            vec![PolyC::var(2, 1).pow(2).sub(&PolyC::var(2, 0).pow(3))],
        )
        .unwrap();
        // numerator AtLeast(8), curve order 2 -> AtLeast(4)
        assert_eq!(
            ideal_contact(&phi, &cusp).unwrap(),
            ExtendedRational::at_least_int(4)
        );
    }

    #[test]
    fn hypersurface_contact_examples() {
        // h = 2 z1, f = (z1), g = (): along (t, 0) the pullback is
        // Re(2t) + |t|^2, order 1, contact 1
        let hs = HypersurfaceGerm::origin(
            2,
            PolyC::var(2, 0).scale(&GaussianRational::from_int(2)),
            vec![PolyC::var(2, 0)],
            vec![],
        )
        .unwrap();
        assert_eq!(
            hypersurface_contact(&curve(&[1, 0]), &hs).unwrap(),
            ExtendedRational::finite_int(1)
        );

        // h = 0, f = (z1^2): |t^2|^2 has order 4
        let hs =
            HypersurfaceGerm::origin(2, PolyC::zero(2), vec![PolyC::var(2, 0).pow(2)], vec![])
                .unwrap();
        assert_eq!(
            hypersurface_contact(&curve(&[1, 0]), &hs).unwrap(),
            ExtendedRational::finite_int(4)
        );

        // identical cancellation f = g = (z1)
        let hs = HypersurfaceGerm::origin(
            2,
            PolyC::zero(2),
            vec![PolyC::var(2, 0)],
            vec![PolyC::var(2, 0)],
        )
        .unwrap();
        assert_eq!(
            hypersurface_contact(&curve(&[1, 0]), &hs).unwrap(),
            ExtendedRational::Infinite
        );
    }

    #[test]
    fn slice_requires_full_rank() {
        assert!(LinearSlice::from_int_rows(&[vec![1, 1, 0], vec![2, 2, 0]]).is_err());
        let s = LinearSlice::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(s.count(), 2);
    }

    #[test]
    fn q_positivity_plurisubharmonic_model() {
        // h = 2 z3, f = (z1, z2), g = (); phi = (t, 0, 0); slice {z2}:
        // applicable, order 2, a = 1, balanced coefficient 1
        let hs = HypersurfaceGerm::origin(
            3,
            PolyC::var(3, 2).scale(&GaussianRational::from_int(2)),
            vec![PolyC::var(3, 0), PolyC::var(3, 1)],
            vec![],
        )
        .unwrap();
        let slice = LinearSlice::new(vec![PolyC::var(3, 1)]).unwrap();
        let rep = q_positivity(&curve(&[1, 0, 0]), &hs, &slice).unwrap();
        assert!(rep.applicable);
        assert_eq!(rep.order, ExtendedRational::finite_int(2));
        assert_eq!(rep.half_order, Some(1));
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn q_positivity_cancellation_is_indeterminate() {
        let hs = HypersurfaceGerm::origin(
            3,
            PolyC::var(3, 2).scale(&GaussianRational::from_int(2)),
            vec![PolyC::var(3, 0)],
            vec![PolyC::var(3, 0)],
        )
        .unwrap();
        let slice = LinearSlice::new(vec![PolyC::var(3, 1)]).unwrap();
        let rep = q_positivity(&curve(&[1, 0, 0]), &hs, &slice).unwrap();
        assert!(rep.applicable);
        assert_eq!(rep.verdict, Verdict::Indeterminate);
    }

    #[test]
    fn q_positivity_vacuous_when_h_pulls_back() {
        // h = z1 along (t, 0, 0): h-pullback nonzero, curve out of scope
        let hs = HypersurfaceGerm::origin(3, PolyC::var(3, 0), vec![], vec![]).unwrap();
        let slice = LinearSlice::new(vec![PolyC::var(3, 1)]).unwrap();
        let rep = q_positivity(&curve(&[1, 0, 0]), &hs, &slice).unwrap();
        assert!(!rep.applicable);
        assert_eq!(rep.verdict, Verdict::Vacuous);
        assert_eq!(rep.verdict.as_bool(), Some(true));
    }

    #[test]
    fn reparametrization_scales_orders_together() {
        let i = IdealPresentation::origin(
            2,
            vec![PolyC::var(2, 0).pow(2), PolyC::var(2, 1).pow(3)],
        )
        .unwrap();
        let phi = curve(&[3, 2]);
        let phi3 = phi.reparametrize_power(3).unwrap();
        assert_eq!(
            ideal_contact(&phi, &i).unwrap(),
            ideal_contact(&phi3, &i).unwrap()
        );
    }
}
