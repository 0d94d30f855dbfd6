//! Seeded sampling of non-degenerate linear-form tuples, and the report
//! type for generic-value experiments.
//!
//! A "generic value" in this domain is attained on a Zariski-open set of
//! linear slices, which has no finite certificate; the artifact therefore
//! samples integer-coefficient forms from a wide range (non-generic draws
//! are measure-tiny but still possible), reports the modal value with its
//! frequency, and flags low confidence instead of guessing.

use crate::contact::LinearSlice;
use crate::error::{Error, Result};
use crate::value::ExtendedRational;
use num::rational::BigRational;
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Acceptance threshold for calling the modal value "generic".
pub const DEFAULT_CONFIDENCE_THRESHOLD: (i64, i64) = (9, 10);

/// Deterministic sampler of `q - 1` linear forms with integer coefficients
/// uniform in `[-range, range]`. Draw `i` depends only on `(seed, i)`, so
/// sampling may run on any number of threads with identical results.
#[derive(Clone, Debug, Serialize)]
pub struct SliceSampler {
    pub seed: u64,
    pub samples: usize,
    pub coefficient_range: i64,
    pub q: usize,
}

impl SliceSampler {
    pub fn new(seed: u64, samples: usize, coefficient_range: i64, q: usize) -> Self {
        assert!(samples >= 1);
        assert!(coefficient_range >= 1);
        assert!(q >= 2);
        SliceSampler {
            seed,
            samples,
            coefficient_range,
            q,
        }
    }

    /// Number of forms per tuple.
    pub fn forms_per_tuple(&self) -> usize {
        self.q - 1
    }

    /// Draw sample `index`: `None` when the tuple is rank-deficient (the
    /// caller counts it as a rejection).
    pub fn draw(&self, index: usize, nvars: usize) -> Option<LinearSlice> {
        let rows = self.draw_rows(index, self.q - 1, nvars);
        LinearSlice::from_int_rows(&rows).ok()
    }

    /// Raw integer rows for sample `index`; separate streams per index keep
    /// the draw order-independent.
    pub fn draw_rows(&self, index: usize, rows: usize, cols: usize) -> Vec<Vec<i64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| rng.gen_range(-self.coefficient_range..=self.coefficient_range))
                    .collect()
            })
            .collect()
    }

    /// A sampler for a nested experiment, decorrelated from this one by the
    /// outer sample index.
    pub fn nested(&self, outer_index: usize) -> SliceSampler {
        SliceSampler {
            seed: splitmix64(self.seed ^ ((outer_index as u64) << 16 | 0x9e37)),
            samples: self.samples,
            coefficient_range: self.coefficient_range,
            q: self.q,
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// One accepted sample: the measured value and whether it was certified
/// (exact) rather than a one-sided bound.
#[derive(Clone, Debug)]
pub struct SampleValue {
    pub value: ExtendedRational,
    pub certified: bool,
}

/// Sampled estimate of a generic-value quantity.
#[derive(Clone, Debug, Serialize)]
pub struct GenericValueReport {
    /// Most frequent value among accepted samples (ties break to the
    /// smaller value).
    pub modal_value: ExtendedRational,
    pub min_value: ExtendedRational,
    pub max_value: ExtendedRational,
    /// Modal count over accepted count, exact.
    #[serde(serialize_with = "serialize_ratio")]
    pub frequency: BigRational,
    pub samples_used: usize,
    pub rejected: usize,
    pub seed: u64,
    /// All modal samples carried a certificate.
    pub exact: bool,
    /// Set when the modal frequency falls below the confidence threshold.
    pub low_confidence: bool,
    /// Value histogram, ascending by value.
    pub tally: Vec<(ExtendedRational, usize)>,
}

fn serialize_ratio<S: serde::Serializer>(
    r: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Aggregate per-sample values into a report. Deterministic: the histogram
/// is ordered by value and ties in the modal count go to the smaller value.
pub fn summarize(
    samples: &[SampleValue],
    rejected: usize,
    seed: u64,
) -> Result<GenericValueReport> {
    if samples.is_empty() {
        return Err(Error::AllSamplesDegenerate { rejected });
    }
    let mut counts: BTreeMap<ExtendedRational, usize> = BTreeMap::new();
    for s in samples {
        *counts.entry(s.value.clone()).or_insert(0) += 1;
    }
    let (modal_value, modal_count) = counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
        .map(|(v, c)| (v.clone(), *c))
        .unwrap();
    let min_value = counts.keys().next().unwrap().clone();
    let max_value = counts.keys().next_back().unwrap().clone();
    let frequency = BigRational::new(
        BigInt::from(modal_count as u64),
        BigInt::from(samples.len() as u64),
    );
    let threshold = BigRational::new(
        BigInt::from(DEFAULT_CONFIDENCE_THRESHOLD.0),
        BigInt::from(DEFAULT_CONFIDENCE_THRESHOLD.1),
    );
    let exact = samples
        .iter()
        .filter(|s| s.value == modal_value)
        .all(|s| s.certified);
    Ok(GenericValueReport {
        low_confidence: frequency < threshold,
        modal_value,
        min_value,
        max_value,
        frequency,
        samples_used: samples.len(),
        rejected,
        seed,
        exact,
        tally: counts.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible_and_index_local() {
        let s = SliceSampler::new(42, 10, 1000, 3);
        let a = s.draw_rows(5, 2, 3);
        let b = s.draw_rows(5, 2, 3);
        assert_eq!(a, b);
        assert_ne!(s.draw_rows(5, 2, 3), s.draw_rows(6, 2, 3));
    }

    #[test]
    fn rejects_rank_deficient_draw() {
        // range 1 with 2 forms in 2 vars collides often; force a specific
        // degenerate pair through the public constructor instead
        assert!(LinearSlice::from_int_rows(&[vec![1, 1], vec![1, 1]]).is_err());
        let s = SliceSampler::new(7, 4, 10_000, 2);
        // with one form, only the zero row is degenerate
        let mut accepted = 0;
        for i in 0..4 {
            if s.draw(i, 3).is_some() {
                accepted += 1;
            }
        }
        assert_eq!(accepted, 4);
    }

    #[test]
    fn summarize_modal_and_flags() {
        let three = ExtendedRational::finite_int(3);
        let four = ExtendedRational::finite_int(4);
        let samples: Vec<SampleValue> = (0..9)
            .map(|_| SampleValue {
                value: three.clone(),
                certified: true,
            })
            .chain(std::iter::once(SampleValue {
                value: four.clone(),
                certified: false,
            }))
            .collect();
        let rep = summarize(&samples, 1, 99).unwrap();
        assert_eq!(rep.modal_value, three);
        assert_eq!(rep.min_value, three);
        assert_eq!(rep.max_value, four);
        assert!(rep.exact);
        assert!(!rep.low_confidence);
        assert_eq!(rep.samples_used, 10);
        assert_eq!(rep.rejected, 1);
        assert_eq!(rep.tally.len(), 2);
    }

    #[test]
    fn summarize_requires_accepted_samples() {
        assert!(matches!(
            summarize(&[], 12, 0),
            Err(Error::AllSamplesDegenerate { rejected: 12 })
        ));
    }
}
