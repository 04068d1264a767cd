//! Sweeps over many independent instances.
//!
//! With the `parallel` feature (on by default) [`map`] fans work out over the
//! rayon pool; without it every sweep runs on the calling thread.

use crate::error::Result;
use crate::polynomial::Sign;
use crate::quadric::{dual_quadric, is_regular, QuadricMatrix, RegularityVerdict};
use crate::subdivision::{induced_subdivision, node_classification, NodeClass};

pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_par<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Order-preserving map, parallel when the feature is enabled.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

pub fn regularity_sweep(batch: &[QuadricMatrix]) -> Vec<Result<RegularityVerdict>> {
    map(batch, is_regular)
}

pub fn dual_sweep(batch: &[QuadricMatrix]) -> Vec<Result<QuadricMatrix>> {
    map(batch, dual_quadric)
}

/// Node classification of the subdivision induced by each quadric.
pub fn classification_sweep(batch: &[QuadricMatrix], sign: Sign) -> Vec<Result<NodeClass>> {
    map(batch, |a| {
        let f = crate::quadric::poly_from_matrix(a)?;
        Ok(node_classification(&induced_subdivision(&f, sign)?))
    })
}
