//! Fixtures shared by the benchmarks.

use oscoh::catalog::weights;
use oscoh::WeightVector;

pub fn ceva_weights() -> WeightVector {
    WeightVector::from_i64(&weights::CEVA, 3)
}

pub fn product_weights() -> WeightVector {
    let k: Vec<i64> = weights::CEVA.iter().chain(&weights::MACLANE_SECTION).copied().collect();
    WeightVector::from_i64(&k, 3)
}
