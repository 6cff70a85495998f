use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::presentation::RingPresentation;
use super::prime::{splitting_prime, PrimeStatus};
use super::ratio::Fraction;
use super::splitting::{aq, fedder_is_fpure, q_for};
use crate::error::{Error, Result};

/// Splitting dimension; `-∞` for rings that are not F-pure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sdim {
    NegInfinity,
    Finite(usize),
}

impl Serialize for Sdim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Sdim::NegInfinity => s.serialize_str("-inf"),
            Sdim::Finite(k) => s.serialize_u64(*k as u64),
        }
    }
}

impl std::fmt::Display for Sdim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sdim::NegInfinity => f.write_str("-inf"),
            Sdim::Finite(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SdimReport {
    pub empirical_sdim: Sdim,
    /// `dim(R/P)` for the splitting-prime result.
    pub dim_bound: Option<usize>,
    /// True when `dim_bound` comes from an uncertified candidate prime.
    pub dim_bound_conditional: bool,
    pub ratio_lower: Option<Fraction>,
    pub ratio_upper: Option<Fraction>,
    pub conjecture_gap: Option<i64>,
    /// The `e` values whose `a_q` formed the tail.
    pub tail: Vec<u32>,
    /// `1 / (2 p^{e_max n})`.
    pub threshold: Fraction,
}

/// Number of trailing levels used as the finite stand-in for `liminf`.
pub fn tail_len(e_max: u32) -> u32 {
    e_max.div_ceil(2)
}

/// Largest `k` for which the tail of `a_q / q^k` looks bounded away from 0.
///
/// A level `k` is accepted when every tail ratio exceeds
/// `θ = 1/(2 p^{e_max n})` and the ratio does not decay along the tail
/// faster than `p^{-1/2}` per step. When `a_q ~ c q^s`, the per-step factor
/// is about `p^{s-k}`, so the test separates `k ≤ s` from `k ≥ s + 1`.
pub fn empirical_sdim(p: u64, n: usize, e_max: u32, aqs: &[u64]) -> (usize, Vec<u32>) {
    let t = tail_len(e_max).max(2).min(e_max);
    let first = e_max - t + 1;
    let tail: Vec<u32> = (first..=e_max).collect();
    let big = |v: u64| BigUint::from(v);
    let a = |e: u32| aqs[(e - 1) as usize];
    let p_big = big(p);
    let exceeds_threshold = |k: usize| {
        tail.iter().all(|&e| {
            // a_q / q^k > 1 / (2 p^{e_max n})  <=>  2 a_q p^{e_max n} > q^k
            let lhs = big(a(e)) * 2u32 * p_big.pow(e_max * n as u32);
            let rhs = p_big.pow(e * k as u32);
            lhs > rhs
        })
    };
    let no_fast_decay = |k: usize| {
        // (a_last/a_first) * p^{-span k} >= p^{-span/2}, squared
        let span = e_max - first;
        let lhs = big(a(e_max)).pow(2) * p_big.pow(span);
        let rhs = big(a(first)).pow(2) * p_big.pow(2 * span * k as u32);
        lhs >= rhs
    };
    let mut best = 0;
    for k in 1..=n {
        if exceeds_threshold(k) && no_fast_decay(k) {
            best = k;
        } else {
            break;
        }
    }
    (best, tail)
}

pub fn sdim_report(r: &RingPresentation, e_max: u32) -> Result<SdimReport> {
    if e_max < 3 {
        return Err(Error::Precondition("sdim_report needs e_max >= 3".into()));
    }
    let p = r.p() as u64;
    let n = r.nvars();
    let threshold = Fraction::new(1u32, BigUint::from(p).pow(e_max * n as u32) * 2u32);
    if !fedder_is_fpure(r)? {
        return Ok(SdimReport {
            empirical_sdim: Sdim::NegInfinity,
            dim_bound: None,
            dim_bound_conditional: false,
            ratio_lower: None,
            ratio_upper: None,
            conjecture_gap: None,
            tail: Vec::new(),
            threshold,
        });
    }
    let aqs: Vec<u64> = (1..=e_max).map(|e| aq(r, e)).collect::<Result<_>>()?;
    let (k, tail) = empirical_sdim(p, n, e_max, &aqs);
    let ratios: Vec<Fraction> = tail
        .iter()
        .map(|&e| {
            Ok(Fraction::over_power(
                aqs[(e - 1) as usize],
                q_for(p, e)?,
                k as u32,
            ))
        })
        .collect::<Result<_>>()?;
    let prime = splitting_prime(r, e_max)?;
    let dim_bound = prime.dim_r_mod_p;
    Ok(SdimReport {
        empirical_sdim: Sdim::Finite(k),
        dim_bound,
        dim_bound_conditional: prime.status != PrimeStatus::Exact,
        ratio_lower: ratios.iter().min().cloned(),
        ratio_upper: ratios.iter().max().cloned(),
        conjecture_gap: dim_bound.map(|d| d as i64 - k as i64),
        tail,
        threshold,
    })
}
