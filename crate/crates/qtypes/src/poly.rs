//! Sparse multivariate polynomials over Q(i).
//!
//! Terms are kept in a `BTreeMap` keyed by exponent tuple, with no zero
//! coefficients stored, so equal polynomials have identical representations.
//! These carry the germs, linear forms, and holomorphic decomposition parts
//! everywhere in the crate.

use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

pub type Exponents = Vec<u32>;

pub fn exponent_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

pub fn exponent_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyC {
    nvars: usize,
    terms: BTreeMap<Exponents, GaussianRational>,
}

impl PolyC {
    pub fn zero(nvars: usize) -> Self {
        PolyC {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        let mut p = PolyC::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        PolyC::constant(nvars, GaussianRational::one())
    }

    /// The coordinate `z_{j+1}` (0-based index).
    pub fn var(nvars: usize, j: usize) -> Self {
        assert!(j < nvars);
        let mut e = vec![0; nvars];
        e[j] = 1;
        PolyC::monomial(nvars, e, GaussianRational::one())
    }

    pub fn monomial(nvars: usize, exponents: Exponents, c: GaussianRational) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut p = PolyC::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, GaussianRational)>,
    ) -> Self {
        let mut p = PolyC::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> GaussianRational {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&vec![0; self.nvars])
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: GaussianRational) {
        assert_eq!(e.len(), self.nvars, "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &PolyC) -> PolyC {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyC) -> PolyC {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> PolyC {
        let mut out = PolyC::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &GaussianRational) -> PolyC {
        if s.is_zero() {
            return PolyC::zero(self.nvars);
        }
        let mut out = PolyC::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &PolyC) -> PolyC {
        assert_eq!(self.nvars, other.nvars);
        let mut out = PolyC::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiply by a single monomial, cheaper than a general `mul`.
    pub fn mul_monomial(&self, e: &[u32], c: &GaussianRational) -> PolyC {
        if c.is_zero() {
            return PolyC::zero(self.nvars);
        }
        let mut out = PolyC::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let exp: Exponents = ea.iter().zip(e).map(|(x, y)| x + y).collect();
            out.terms.insert(exp, ca * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> PolyC {
        let mut acc = PolyC::one(self.nvars);
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

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| exponent_degree(e)).max()
    }

    /// Vanishing order at the origin: the lowest total degree among terms.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| exponent_degree(e)).min()
    }

    /// The homogeneous part of lowest total degree.
    pub fn initial_form(&self) -> PolyC {
        match self.order() {
            None => PolyC::zero(self.nvars),
            Some(d) => {
                let mut out = PolyC::zero(self.nvars);
                for (e, c) in &self.terms {
                    if exponent_degree(e) == d {
                        out.terms.insert(e.clone(), c.clone());
                    }
                }
                out
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.order(), self.total_degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `(exponents, coefficient)` when this is a single term.
    pub fn monomial_parts(&self) -> Option<(&Exponents, &GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Coefficient vector when this is homogeneous of degree one.
    pub fn linear_form_coeffs(&self) -> Option<Vec<GaussianRational>> {
        if self.is_zero() || self.order() != Some(1) || self.total_degree() != Some(1) {
            return None;
        }
        let mut coeffs = vec![GaussianRational::zero(); self.nvars];
        for (e, c) in &self.terms {
            let j = e.iter().position(|&x| x == 1).unwrap();
            coeffs[j] = c.clone();
        }
        Some(coeffs)
    }

    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (j, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = &term * &point[j].pow(exp);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Substitute `z_j -> images[j]`; the images must all share one variable
    /// count, which becomes the variable count of the result.
    pub fn substitute(&self, images: &[PolyC]) -> Result<PolyC, Error> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let out_vars = images.first().map_or(0, |p| p.nvars);
        if images.iter().any(|p| p.nvars != out_vars) {
            return Err(Error::ArityMismatch {
                expected: out_vars,
                got: images.iter().map(|p| p.nvars).max().unwrap_or(0),
            });
        }
        // cache powers of each image up to the largest exponent used
        let mut max_exp = vec![0u32; self.nvars];
        for e in self.terms.keys() {
            for (j, &x) in e.iter().enumerate() {
                max_exp[j] = max_exp[j].max(x);
            }
        }
        let mut powers: Vec<Vec<PolyC>> = Vec::with_capacity(self.nvars);
        for (j, img) in images.iter().enumerate() {
            let mut pws = vec![PolyC::one(out_vars)];
            for k in 1..=max_exp[j] {
                let next = pws[(k - 1) as usize].mul(img);
                pws.push(next);
            }
            powers.push(pws);
        }
        let mut out = PolyC::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = PolyC::constant(out_vars, c.clone());
            for (j, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&powers[j][exp as usize]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Compose with the linear map `z -> A z`. Degree is preserved because
    /// the map is invertible; a singular `A` is an error.
    pub fn linear_substitute(&self, a: &Matrix) -> Result<PolyC, Error> {
        if a.nrows() != self.nvars || a.ncols() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: a.nrows(),
            });
        }
        if a.rank() != self.nvars {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<PolyC> = (0..self.nvars)
            .map(|j| {
                let mut row = PolyC::zero(self.nvars);
                for k in 0..self.nvars {
                    let c = a.get(j, k);
                    if !c.is_zero() {
                        let mut e = vec![0; self.nvars];
                        e[k] = 1;
                        row.add_term(e, c.clone());
                    }
                }
                row
            })
            .collect();
        self.substitute(&images)
    }

    /// `p(z + point)`: recenter so that evaluating the result at the origin
    /// matches evaluating `p` at `point`.
    pub fn translate(&self, point: &[GaussianRational]) -> PolyC {
        assert_eq!(point.len(), self.nvars);
        if point.iter().all(|c| c.is_zero()) {
            return self.clone();
        }
        let images: Vec<PolyC> = (0..self.nvars)
            .map(|j| {
                let mut img = PolyC::var(self.nvars, j);
                img.add_term(vec![0; self.nvars], point[j].clone());
                img
            })
            .collect();
        self.substitute(&images).expect("translation arity is exact")
    }

    /// Canonical rendering with the given variable names, lowest total degree
    /// first with lexicographic tiebreak; re-parses to the same polynomial.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        assert_eq!(names.len(), self.nvars);
        PolyDisplay { poly: self, names: Some(names) }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a PolyC,
    names: Option<&'a [String]>,
}

/// Renders one coefficient-monomial product without a leading sign; the
/// caller has already peeled a minus off pure real/imaginary negatives.
fn coeff_times_monomial(c: &GaussianRational, monomial: &str) -> String {
    let printed = c.to_string();
    // mixed `a+b*i` (or `a-b*i`) coefficients need parentheses to re-parse
    // as a single product
    let needs_parens = printed.contains('+') || printed.rfind('-').is_some_and(|p| p > 0);
    if monomial.is_empty() {
        return if needs_parens {
            format!("({})", printed)
        } else {
            printed
        };
    }
    if c.is_one() {
        return monomial.to_string();
    }
    if needs_parens {
        format!("({})*{}", printed, monomial)
    } else {
        format!("{}*{}", printed, monomial)
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.poly;
        if poly.is_zero() {
            return write!(f, "0");
        }
        let default_names: Vec<String>;
        let names: &[String] = match self.names {
            Some(n) => n,
            None => {
                default_names = (1..=poly.nvars).map(|j| format!("z{}", j)).collect();
                &default_names
            }
        };
        let mut keys: Vec<&Exponents> = poly.terms.keys().collect();
        keys.sort_by(|a, b| {
            exponent_degree(a)
                .cmp(&exponent_degree(b))
                .then_with(|| b.cmp(a))
        });
        for (idx, e) in keys.iter().enumerate() {
            let c = &poly.terms[*e];
            let monomial = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, &x)| {
                    if x == 1 {
                        names[j].clone()
                    } else {
                        format!("{}^{}", names[j], x)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            // peel the sign off pure real/imaginary negatives so terms join
            // with " - " instead of " + -"
            let negatable = (c.is_real() && c.re < num::rational::BigRational::from_integer(num::BigInt::from(0)))
                || (c.re.is_zero() && c.im < num::rational::BigRational::from_integer(num::BigInt::from(0)));
            let (sign, body) = if negatable {
                ("-", coeff_times_monomial(&-c, &monomial))
            } else {
                ("+", coeff_times_monomial(c, &monomial))
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
            } else {
                write!(f, " {} {}", sign, body)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolyC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", PolyDisplay { poly: self, names: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(j: usize) -> PolyC {
        PolyC::var(2, j)
    }

    #[test]
    fn arithmetic_is_canonical() {
        let p = z(0).mul(&z(1)).add(&z(1).pow(2)); // z1*z2 + z2^2
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.order(), Some(2));
    }

    #[test]
    fn translation_recenters() {
        // p = z1^2, shifted to base point (1, 0): (z1+1)^2 = z1^2 + 2 z1 + 1
        let p = z(0).pow(2);
        let t = p.translate(&[GaussianRational::from_int(1), GaussianRational::zero()]);
        assert_eq!(t.constant_term(), GaussianRational::from_int(1));
        assert_eq!(t.coeff(&[1, 0]), GaussianRational::from_int(2));
        assert_eq!(
            t.eval(&[GaussianRational::from_int(2), GaussianRational::zero()]),
            p.eval(&[GaussianRational::from_int(3), GaussianRational::zero()])
        );
    }

    #[test]
    fn linear_substitute_swap_and_shear() {
        let p = PolyC::var(2, 0); // z1
        let swap = Matrix::from_rows(vec![
            vec![GaussianRational::zero(), GaussianRational::one()],
            vec![GaussianRational::one(), GaussianRational::zero()],
        ]);
        assert_eq!(p.linear_substitute(&swap).unwrap(), PolyC::var(2, 1));

        let p3 = PolyC::var(3, 2).pow(2); // z3^2
        let mut rows = Matrix::identity(3);
        rows.set(2, 0, GaussianRational::from_int(-1));
        rows.set(2, 1, GaussianRational::from_int(-1));
        let q = p3.linear_substitute(&rows).unwrap();
        // (z3 - z1 - z2)^2
        let expect = PolyC::var(3, 2)
            .sub(&PolyC::var(3, 0))
            .sub(&PolyC::var(3, 1))
            .pow(2);
        assert_eq!(q, expect);
    }

    #[test]
    fn singular_substitution_rejected() {
        let p = PolyC::var(2, 0);
        let sing = Matrix::from_rows(vec![
            vec![GaussianRational::one(), GaussianRational::one()],
            vec![GaussianRational::one(), GaussianRational::one()],
        ]);
        assert!(matches!(
            p.linear_substitute(&sing),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn display_is_deterministic() {
        let p = z(1).pow(2).sub(&z(0).pow(3)); // z2^2 - z1^3  (2 vars)
        assert_eq!(p.to_string(), "z2^2 - z1^3");
        let q = PolyC::monomial(
            2,
            vec![1, 0],
            GaussianRational::new(
                num::rational::BigRational::from_integer(num::BigInt::from(1)),
                num::rational::BigRational::from_integer(num::BigInt::from(2)),
            ),
        );
        assert_eq!(q.to_string(), "(1+2*i)*z1");
    }
}
