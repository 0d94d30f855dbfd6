//! Univariate series and Hermitian (t, conj t) series.
//!
//! Two parallel representations are used throughout:
//!
//! - truncated series ([`UniSeries`], [`HermitianSeries`]) with a hard
//!   truncation bound `B`; a series that vanishes up to `B` only witnesses
//!   "order at least B";
//! - exact polynomials ([`UniPoly`], [`HermitianPoly`]) for inputs that are
//!   genuinely polynomial, where identical vanishing is decidable and orders
//!   are exact.
//!
//! Binary operations on truncated series propagate the minimum of the two
//! truncation bounds.

use crate::error::{Error, Result};
use crate::poly::PolyC;
use crate::scalar::GaussianRational;
use crate::value::ExtendedRational;
use std::collections::BTreeMap;
use std::fmt;

/// Default truncation bound for series computations.
pub const DEFAULT_TRUNCATION: usize = 64;

// ---------------------------------------------------------------------------
// exact univariate polynomials

/// Dense exact univariate polynomial; no trailing zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// `c * t^k`
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Least index with nonzero coefficient; `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::monomial(GaussianRational::one(), 0);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, t: &GaussianRational) -> GaussianRational {
        // Horner
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    /// `p(t^k)`
    pub fn stretch(&self, k: usize) -> UniPoly {
        assert!(k >= 1);
        let mut coeffs = vec![GaussianRational::zero(); self.coeffs.len() * k];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn truncate(&self, truncation: usize) -> UniSeries {
        let mut coeffs = vec![GaussianRational::zero(); truncation];
        for (k, c) in self.coeffs.iter().enumerate().take(truncation) {
            coeffs[k] = c.clone();
        }
        UniSeries {
            truncation,
            coeffs,
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{}", k),
            };
            let printed = c.to_string();
            let needs_parens =
                printed.contains('+') || printed.rfind('-').is_some_and(|p| p > 0);
            let body = if mono.is_empty() {
                if needs_parens {
                    format!("({})", printed)
                } else {
                    printed.clone()
                }
            } else if c.is_one() {
                mono.clone()
            } else if (-c).is_one() {
                format!("-{}", mono)
            } else if needs_parens {
                format!("({})*{}", printed, mono)
            } else {
                format!("{}*{}", printed, mono)
            };
            if first {
                write!(f, "{}", body)?;
                first = false;
            } else if let Some(stripped) = body.strip_prefix('-') {
                write!(f, " - {}", stripped)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// truncated univariate series

/// Power series truncated at degree `truncation`: coefficients of
/// `t^0 .. t^(truncation-1)` are stored, everything above is unknown.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniSeries {
    truncation: usize,
    coeffs: Vec<GaussianRational>,
}

impl UniSeries {
    pub fn zero(truncation: usize) -> Self {
        assert!(truncation >= 1);
        UniSeries {
            truncation,
            coeffs: vec![GaussianRational::zero(); truncation],
        }
    }

    pub fn from_coeffs(coeffs: Vec<GaussianRational>, truncation: usize) -> Self {
        assert!(truncation >= 1);
        let mut full = vec![GaussianRational::zero(); truncation];
        for (k, c) in coeffs.into_iter().enumerate().take(truncation) {
            full[k] = c;
        }
        UniSeries {
            truncation,
            coeffs: full,
        }
    }

    pub fn monomial(c: GaussianRational, k: usize, truncation: usize) -> Self {
        let mut s = UniSeries::zero(truncation);
        if k < truncation {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// True when every stored coefficient vanishes (the series may still be a
    /// truncation of something nonzero).
    pub fn is_zero_truncated(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Least stored index with nonzero coefficient.
    pub fn order_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &UniSeries) -> UniSeries {
        let trunc = self.truncation.min(other.truncation);
        let coeffs = (0..trunc).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        UniSeries {
            truncation: trunc,
            coeffs,
        }
    }

    pub fn sub(&self, other: &UniSeries) -> UniSeries {
        let trunc = self.truncation.min(other.truncation);
        let coeffs = (0..trunc).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        UniSeries {
            truncation: trunc,
            coeffs,
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> UniSeries {
        UniSeries {
            truncation: self.truncation,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &UniSeries) -> UniSeries {
        let trunc = self.truncation.min(other.truncation);
        let mut coeffs = vec![GaussianRational::zero(); trunc];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= trunc {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= trunc {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        UniSeries {
            truncation: trunc,
            coeffs,
        }
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = UniPoly::from_coeffs(self.coeffs.clone());
        if poly.is_zero() {
            write!(f, "0 + O(t^{})", self.truncation)
        } else {
            write!(f, "{} + O(t^{})", poly, self.truncation)
        }
    }
}

/// Vanishing order of a truncated series: `Finite(k)` for the least nonzero
/// coefficient, `AtLeast(B)` when everything stored vanishes.
pub fn series_order(s: &UniSeries) -> ExtendedRational {
    match s.order_index() {
        Some(k) => ExtendedRational::finite_int(k as u64),
        None => ExtendedRational::at_least_int(s.truncation as u64),
    }
}

// ---------------------------------------------------------------------------
// composition (pullback along a curve)

/// Pullback `p(phi_1(t), ..., phi_n(t))` truncated at the (minimum) bound of
/// the components.
pub fn compose(p: &PolyC, phi: &[UniSeries]) -> Result<UniSeries> {
    if phi.len() != p.nvars() {
        return Err(Error::ArityMismatch {
            expected: p.nvars(),
            got: phi.len(),
        });
    }
    let trunc = phi
        .iter()
        .map(UniSeries::truncation)
        .min()
        .unwrap_or(DEFAULT_TRUNCATION);
    let mut max_exp = vec![0u32; p.nvars()];
    for (e, _) in p.terms() {
        for (j, &x) in e.iter().enumerate() {
            max_exp[j] = max_exp[j].max(x);
        }
    }
    let one = UniSeries::monomial(GaussianRational::one(), 0, trunc);
    let mut powers: Vec<Vec<UniSeries>> = Vec::with_capacity(p.nvars());
    for (j, comp) in phi.iter().enumerate() {
        let mut pws = vec![one.clone()];
        for k in 1..=max_exp[j] {
            let next = pws[(k - 1) as usize].mul(comp);
            pws.push(next);
        }
        powers.push(pws);
    }
    let mut acc = UniSeries::zero(trunc);
    for (e, c) in p.terms() {
        let mut term = one.scale(c);
        for (j, &x) in e.iter().enumerate() {
            if x > 0 {
                term = term.mul(&powers[j][x as usize]);
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Exact pullback for polynomial curve components: no truncation, so zero
/// output means the curve genuinely lies in the zero set.
pub fn compose_exact(p: &PolyC, phi: &[UniPoly]) -> Result<UniPoly> {
    if phi.len() != p.nvars() {
        return Err(Error::ArityMismatch {
            expected: p.nvars(),
            got: phi.len(),
        });
    }
    let mut max_exp = vec![0u32; p.nvars()];
    for (e, _) in p.terms() {
        for (j, &x) in e.iter().enumerate() {
            max_exp[j] = max_exp[j].max(x);
        }
    }
    let one = UniPoly::monomial(GaussianRational::one(), 0);
    let mut powers: Vec<Vec<UniPoly>> = Vec::with_capacity(p.nvars());
    for (j, comp) in phi.iter().enumerate() {
        let mut pws = vec![one.clone()];
        for k in 1..=max_exp[j] {
            let next = pws[(k - 1) as usize].mul(comp);
            pws.push(next);
        }
        powers.push(pws);
    }
    let mut acc = UniPoly::zero();
    for (e, c) in p.terms() {
        let mut term = UniPoly::monomial(c.clone(), 0);
        for (j, &x) in e.iter().enumerate() {
            if x > 0 {
                term = term.mul(&powers[j][x as usize]);
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Hermitian series in (t, conj t)

/// Truncated series in `t` and `conj(t)`; coefficients stored for all
/// `(a, b)` with `a + b < truncation`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianSeries {
    truncation: usize,
    coeffs: BTreeMap<(usize, usize), GaussianRational>,
}

impl HermitianSeries {
    pub fn zero(truncation: usize) -> Self {
        assert!(truncation >= 1);
        HermitianSeries {
            truncation,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeff(&self, a: usize, b: usize) -> GaussianRational {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero_truncated(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &GaussianRational)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, a: usize, b: usize, c: GaussianRational) {
        if a + b >= self.truncation || c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&(a, b)) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.coeffs.remove(&(a, b));
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert((a, b), c);
            }
        }
    }

    /// Hermitian reality: the series is a real-valued function of `t` iff
    /// `coeff(a,b) == conj(coeff(b,a))` for all stored pairs.
    pub fn is_hermitian_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(a, b), c)| self.coeff(b, a) == c.conj())
    }
}

/// Vanishing order in total degree `a + b`; `AtLeast(B)` when nothing below
/// the truncation survives.
pub fn hermitian_order(s: &HermitianSeries) -> ExtendedRational {
    match s.coeffs.keys().map(|&(a, b)| a + b).min() {
        Some(k) => ExtendedRational::finite_int(k as u64),
        None => ExtendedRational::at_least_int(s.truncation as u64),
    }
}

/// Pullback of `Re(h) + sum |f_j|^2 - sum |g_j|^2` along the truncated curve
/// `phi`. The output always satisfies the Hermitian reality invariant.
pub fn hermitian_pullback(
    h: &PolyC,
    f: &[PolyC],
    g: &[PolyC],
    phi: &[UniSeries],
) -> Result<HermitianSeries> {
    let trunc = phi
        .iter()
        .map(UniSeries::truncation)
        .min()
        .unwrap_or(DEFAULT_TRUNCATION);
    let mut out = HermitianSeries::zero(trunc);
    let half = GaussianRational::from_ratio(1, 2);
    let hu = compose(h, phi)?;
    for a in 0..trunc {
        let c = hu.coeff(a);
        if !c.is_zero() {
            out.add_term(a, 0, &c * &half);
            out.add_term(0, a, &c.conj() * &half);
        }
    }
    for (parts, sign) in [(f, 1i64), (g, -1i64)] {
        let s = GaussianRational::from_int(sign);
        for p in parts {
            let u = compose(p, phi)?;
            for a in 0..trunc {
                let ca = u.coeff(a);
                if ca.is_zero() {
                    continue;
                }
                for b in 0..trunc.saturating_sub(a) {
                    let cb = u.coeff(b);
                    if cb.is_zero() {
                        continue;
                    }
                    out.add_term(a, b, &(&ca * &cb.conj()) * &s);
                }
            }
        }
    }
    debug_assert!(out.is_hermitian_symmetric());
    Ok(out)
}

/// Exact (t, conj t) polynomial for polynomial data.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HermitianPoly {
    coeffs: BTreeMap<(usize, usize), GaussianRational>,
}

impl HermitianPoly {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: usize, b: usize) -> GaussianRational {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.keys().map(|&(a, b)| a + b).min()
    }

    fn add_term(&mut self, a: usize, b: usize, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&(a, b)) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.coeffs.remove(&(a, b));
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert((a, b), c);
            }
        }
    }
}

/// Exact counterpart of [`hermitian_pullback`] for polynomial curves.
pub fn hermitian_pullback_exact(
    h: &PolyC,
    f: &[PolyC],
    g: &[PolyC],
    phi: &[UniPoly],
) -> Result<HermitianPoly> {
    let mut out = HermitianPoly::default();
    let half = GaussianRational::from_ratio(1, 2);
    let hu = compose_exact(h, phi)?;
    for (a, c) in hu.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.add_term(a, 0, c * &half);
            out.add_term(0, a, &c.conj() * &half);
        }
    }
    for (parts, sign) in [(f, 1i64), (g, -1i64)] {
        let s = GaussianRational::from_int(sign);
        for p in parts {
            let u = compose_exact(p, phi)?;
            for (a, ca) in u.coeffs().iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in u.coeffs().iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    out.add_term(a, b, &(ca * &cb.conj()) * &s);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyC;

    fn t_pow(k: usize, trunc: usize) -> UniSeries {
        UniSeries::monomial(GaussianRational::one(), k, trunc)
    }

    #[test]
    fn compose_coordinate_projection() {
        // p = z1, phi = (t^2, t^3) -> t^2
        let p = PolyC::var(2, 0);
        let phi = [t_pow(2, 16), t_pow(3, 16)];
        let s = compose(&p, &phi).unwrap();
        assert_eq!(series_order(&s), ExtendedRational::finite_int(2));
        assert_eq!(s.coeff(2), GaussianRational::one());
    }

    #[test]
    fn compose_curve_in_zero_set() {
        // p = z2^2 - z1^3, phi = (t^2, t^3) -> 0
        let p = PolyC::var(2, 1).pow(2).sub(&PolyC::var(2, 0).pow(3));
        let phi = [t_pow(2, 16), t_pow(3, 16)];
        let s = compose(&p, &phi).unwrap();
        assert!(s.is_zero_truncated());
        assert_eq!(series_order(&s), ExtendedRational::at_least_int(16));
        // exact path decides the containment
        let phi_exact = [
            UniPoly::monomial(GaussianRational::one(), 2),
            UniPoly::monomial(GaussianRational::one(), 3),
        ];
        assert!(compose_exact(&p, &phi_exact).unwrap().is_zero());
    }

    #[test]
    fn compose_direct_expansion() {
        // p = z1*z2 + z2^2, phi = (t, t) -> 2 t^2
        let p = PolyC::var(2, 0)
            .mul(&PolyC::var(2, 1))
            .add(&PolyC::var(2, 1).pow(2));
        let phi = [t_pow(1, 8), t_pow(1, 8)];
        let s = compose(&p, &phi).unwrap();
        assert_eq!(s.coeff(2), GaussianRational::from_int(2));
        assert_eq!(series_order(&s), ExtendedRational::finite_int(2));
    }

    #[test]
    fn compose_arity_checked() {
        let p = PolyC::var(2, 0);
        assert!(matches!(
            compose(&p, &[t_pow(1, 8)]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn series_order_examples() {
        let mut s = UniSeries::zero(8);
        s = s.add(&t_pow(3, 8)).add(&t_pow(5, 8));
        assert_eq!(series_order(&s), ExtendedRational::finite_int(3));
        assert_eq!(
            series_order(&UniSeries::zero(64)),
            ExtendedRational::at_least_int(64)
        );
        let one_plus_t = UniSeries::monomial(GaussianRational::one(), 0, 8).add(&t_pow(1, 8));
        assert_eq!(series_order(&one_plus_t), ExtendedRational::finite_int(0));
    }

    #[test]
    fn min_truncation_propagates() {
        let a = t_pow(1, 8);
        let b = t_pow(1, 12);
        assert_eq!(a.mul(&b).truncation(), 8);
        assert_eq!(a.add(&b).truncation(), 8);
    }

    #[test]
    fn hermitian_re_plus_modulus() {
        // h = 2 z1, f = (z1), g = (); phi = (t, 0): Re(2t) + |t|^2
        let h = PolyC::var(2, 0).scale(&GaussianRational::from_int(2));
        let f = [PolyC::var(2, 0)];
        let phi = [t_pow(1, 8), UniSeries::zero(8)];
        let s = hermitian_pullback(&h, &f, &[], &phi).unwrap();
        assert_eq!(s.coeff(1, 0), GaussianRational::one());
        assert_eq!(s.coeff(0, 1), GaussianRational::one());
        assert_eq!(s.coeff(1, 1), GaussianRational::one());
        assert_eq!(hermitian_order(&s), ExtendedRational::finite_int(1));
        assert!(s.is_hermitian_symmetric());
    }

    #[test]
    fn hermitian_exact_cancellation() {
        // h = 0, f = (z1^2), g = (z1^2): identically zero
        let h = PolyC::zero(2);
        let fg = [PolyC::var(2, 0).pow(2)];
        let phi = [t_pow(1, 8), UniSeries::zero(8)];
        let s = hermitian_pullback(&h, &fg, &fg, &phi).unwrap();
        assert!(s.is_zero_truncated());
        assert_eq!(hermitian_order(&s), ExtendedRational::at_least_int(8));
    }

    #[test]
    fn hermitian_pure_holomorphic_cube() {
        // h = z1^3, f = g = (); phi = (t): (t^3 + conj(t)^3)/2, order 3
        let h = PolyC::var(1, 0).pow(3);
        let phi = [t_pow(1, 8)];
        let s = hermitian_pullback(&h, &[], &[], &phi).unwrap();
        assert_eq!(s.coeff(3, 0), GaussianRational::from_ratio(1, 2));
        assert_eq!(s.coeff(0, 3), GaussianRational::from_ratio(1, 2));
        assert_eq!(hermitian_order(&s), ExtendedRational::finite_int(3));
    }

    #[test]
    fn hermitian_order_mixed() {
        // t^2 conj(t) + conj(t)^4 -> order 3
        let mut s = HermitianSeries::zero(16);
        s.add_term(2, 1, GaussianRational::one());
        s.add_term(0, 4, GaussianRational::one());
        assert_eq!(hermitian_order(&s), ExtendedRational::finite_int(3));
        let tt = {
            let mut s = HermitianSeries::zero(16);
            s.add_term(1, 1, GaussianRational::one());
            s
        };
        assert_eq!(hermitian_order(&tt), ExtendedRational::finite_int(2));
    }
}
