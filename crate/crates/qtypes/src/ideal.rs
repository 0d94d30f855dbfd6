//! Ideal presentations: a finite generating set with a base point.
//!
//! All computations in the crate run in coordinates centered at the base
//! point, so the constructor translates every generator exactly and rejects
//! presentations whose generators do not vanish there.

use crate::error::{Error, Result};
use crate::poly::PolyC;
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealPresentation {
    nvars: usize,
    generators: Vec<PolyC>,
    base_point: Vec<GaussianRational>,
    centered: Vec<PolyC>,
}

impl IdealPresentation {
    pub fn new(
        nvars: usize,
        generators: Vec<PolyC>,
        base_point: Vec<GaussianRational>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        if base_point.len() != nvars {
            return Err(Error::ArityMismatch {
                expected: nvars,
                got: base_point.len(),
            });
        }
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: g.nvars(),
                });
            }
        }
        let centered: Vec<PolyC> = generators.iter().map(|g| g.translate(&base_point)).collect();
        if centered.iter().any(|g| !g.constant_term().is_zero()) {
            return Err(Error::ImproperIdeal);
        }
        Ok(IdealPresentation {
            nvars,
            generators,
            base_point,
            centered,
        })
    }

    /// Presentation based at the origin.
    pub fn origin(nvars: usize, generators: Vec<PolyC>) -> Result<Self> {
        let base = vec![GaussianRational::zero(); nvars];
        IdealPresentation::new(nvars, generators, base)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[PolyC] {
        &self.generators
    }

    /// Generators translated to the origin; these are what every engine
    /// actually computes with.
    pub fn centered_generators(&self) -> &[PolyC] {
        &self.centered
    }

    pub fn base_point(&self) -> &[GaussianRational] {
        &self.base_point
    }

    pub fn is_origin_based(&self) -> bool {
        self.base_point.iter().all(|c| c.is_zero())
    }

    pub fn all_monomial(&self) -> bool {
        self.centered.iter().all(|g| g.is_monomial())
    }

    /// The ideal `(I, w_1, ..., w_k)` in centered coordinates: the extra
    /// forms vanish at the origin by homogeneity, so the result is based at
    /// the origin regardless of the original base point.
    pub fn augmented(&self, forms: &[PolyC]) -> Result<IdealPresentation> {
        let mut gens = self.centered.clone();
        for w in forms {
            if w.nvars() != self.nvars {
                return Err(Error::ArityMismatch {
                    expected: self.nvars,
                    got: w.nvars(),
                });
            }
            gens.push(w.clone());
        }
        IdealPresentation::origin(self.nvars, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_improper_presentation() {
        let p = PolyC::one(2); // constant 1
        assert!(matches!(
            IdealPresentation::origin(2, vec![p]),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn translates_to_base_point() {
        // generator z1^2 - 1 based at (1, 0) vanishes there
        let g = PolyC::var(2, 0).pow(2).sub(&PolyC::one(2));
        let i = IdealPresentation::new(
            2,
            vec![g],
            vec![GaussianRational::from_int(1), GaussianRational::zero()],
        )
        .unwrap();
        let centered = &i.centered_generators()[0];
        assert!(centered.constant_term().is_zero());
        // (z1+1)^2 - 1 = z1^2 + 2 z1
        assert_eq!(centered.coeff(&[1, 0]), GaussianRational::from_int(2));
    }

    #[test]
    fn zero_generator_is_allowed() {
        let i = IdealPresentation::origin(2, vec![PolyC::zero(2), PolyC::var(2, 0)]).unwrap();
        assert_eq!(i.generators().len(), 2);
    }
}
