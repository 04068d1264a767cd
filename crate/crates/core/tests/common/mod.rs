#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropdual::quadric::QuadricMatrix;
use tropdual::semiring::{rat, Rational, TropValue};
use tropdual::TropPolynomial;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with denominator 1 or 2 in `[lo, hi]`.
pub fn half_step(r: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    rat(r.gen_range(2 * lo..=2 * hi), 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsSign {
    Negative,
    Positive,
    Any,
}

/// Quadric of side `size` with prescribed off-diagonal distortion signs.
pub fn quadric_with_distortion(r: &mut impl Rng, size: usize, sign: EpsSign) -> QuadricMatrix {
    let diag: Vec<Rational> = (0..size).map(|_| half_step(r, -6, 6)).collect();
    let mut upper = Vec::with_capacity(size * (size + 1) / 2);
    for i in 0..size {
        for j in i..size {
            if i == j {
                upper.push(TropValue::Finite(diag[i]));
                continue;
            }
            let eps = match sign {
                EpsSign::Negative => -half_step(r, 1, 16) / 2,
                EpsSign::Positive => half_step(r, 1, 16) / 2,
                EpsSign::Any => half_step(r, -8, 8),
            };
            upper.push(TropValue::Finite(eps + (diag[i] + diag[j]) / 2));
        }
    }
    QuadricMatrix::from_upper(size, &upper).unwrap()
}

/// Symmetric integer matrix, with off-diagonal entries `-inf` at rate `p_inf`.
pub fn random_quadric(r: &mut impl Rng, size: usize, p_inf: f64) -> QuadricMatrix {
    let mut upper = Vec::new();
    for i in 0..size {
        for j in i..size {
            if i != j && r.gen_bool(p_inf) {
                upper.push(TropValue::NegInf);
            } else {
                upper.push(TropValue::int(r.gen_range(-9..=9)));
            }
        }
    }
    QuadricMatrix::from_upper(size, &upper).unwrap()
}

/// Random support inside the degree-`deg` triangle with at least two points.
pub fn random_planar(r: &mut impl Rng, max_deg: i64) -> TropPolynomial {
    let deg = r.gen_range(1..=max_deg);
    let lattice: Vec<[i64; 2]> = (0..=deg).flat_map(|i| (0..=deg - i).map(move |j| [i, j])).collect();
    loop {
        let keep = r.gen_range(0.3..=1.0);
        let mut terms: Vec<(Vec<i64>, TropValue)> = Vec::new();
        for e in &lattice {
            if r.gen_bool(keep) {
                terms.push((e.to_vec(), TropValue::Finite(half_step(r, -6, 6))));
            }
        }
        if terms.len() >= 2 {
            return TropPolynomial::new(2, terms).unwrap();
        }
    }
}
