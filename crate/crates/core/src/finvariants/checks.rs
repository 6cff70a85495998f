use serde::Serialize;

use super::presentation::{RingPresentation, SplitIdeal};
use super::prime::{PrimeStatus, SplittingPrimeResult};
use super::ratio::Fraction;
use super::splitting::{q_for, split_test, splitting_ideal, splitting_ideal_raw};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientLength};
use crate::monomial::{standard_count, MonomialIdeal};
use crate::polyring::{Monomial, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessOutcome {
    /// `R -> R^{1/q}, 1 ↦ c^{1/q}` splits at this `e`.
    Proven(u32),
    Inconclusive,
}

/// Searches for the least `e ≤ e_max` at which `1 ↦ c^{1/q}` splits.
///
/// The caller asserts that `R_c` is strongly F-regular; this is recorded,
/// not checked. A split then proves strong F-regularity of `R`. The search
/// is one-sided: failure within `e_max` proves nothing.
pub fn strongly_f_regular_witness(r: &RingPresentation, c: &Poly, e_max: u32) -> Result<WitnessOutcome> {
    let c = c.reorder(r.ring());
    if r.ideal().contains(&c) {
        return Err(Error::WitnessInIdeal);
    }
    for e in 1..=e_max {
        if split_test(r, &c, e)? {
            return Ok(WitnessOutcome::Proven(e));
        }
    }
    Ok(WitnessOutcome::Inconclusive)
}

#[derive(Debug, Clone, Serialize)]
pub struct HkEntry {
    pub e: u32,
    pub q: u64,
    /// `λ(R / m^{[q]})`.
    pub length: u64,
    /// `length / q^{dim R}`.
    pub ratio: Fraction,
}

/// Hilbert–Kunz lengths `λ(R/m^{[q]})` normalized by `q^{dim R}`.
pub fn hk_sequence(r: &RingPresentation, e_max: u32) -> Result<Vec<HkEntry>> {
    let d = r.ideal().krull_dim()? as u32;
    let p = r.p() as u64;
    (1..=e_max)
        .map(|e| {
            let q = q_for(p, e)?;
            let len = match r.mono_engine() {
                Some(i) => standard_count(&i.sum(&MonomialIdeal::frobenius_maximal(r.nvars(), q))),
                None => r
                    .ideal()
                    .sum(&Ideal::frobenius_maximal(r.ring(), q))
                    .quotient_length(),
            };
            let length = len
                .finite()
                .ok_or_else(|| Error::Internal("I + m^[q] is not m-primary".into()))?;
            Ok(HkEntry {
                e,
                q,
                length,
                ratio: Fraction::over_power(length, q, d),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MainClaim {
    pub e: u32,
    pub e_prime: u32,
    /// `λ(R/A_{e+e'})`.
    pub lhs: u64,
    /// `λ(R/(P + A_e^{[q']}))`.
    pub middle: u64,
    /// `λ(R/A_e)`.
    pub length_a_e: u64,
    /// `λ(R/(P + m^{[q']}))`.
    pub length_p_mq: u64,
    pub holds: bool,
}

fn finite(len: QuotientLength, what: &str) -> Result<u64> {
    len.finite()
        .ok_or_else(|| Error::Internal(format!("{what} is not m-primary")))
}

/// Evaluates `λ(R/A_{e+e'}) ≤ λ(R/(P + A_e^{[q']})) ≤ λ(R/A_e)·λ(R/(P + m^{[q']}))`
/// with all lengths taken in `S` modulo preimages. Requires a certified
/// splitting prime.
pub fn main_claim_check(
    r: &RingPresentation,
    prime: &SplittingPrimeResult,
    e: u32,
    e_prime: u32,
) -> Result<MainClaim> {
    if prime.status != PrimeStatus::Exact {
        return Err(Error::Precondition(
            "main_claim_check needs an Exact splitting prime".into(),
        ));
    }
    let p = r.p() as u64;
    let q_prime = q_for(p, e_prime)?;
    q_for(p, e + e_prime)?;
    let big = splitting_ideal_raw(r, e + e_prime)?;
    let small = splitting_ideal_raw(r, e)?;
    let (lhs, middle, length_a_e, length_p_mq) =
        match (&big, &small, MonomialIdeal::from_ideal(&prime.candidate)) {
            (SplitIdeal::Mono(b), SplitIdeal::Mono(s), Some(pm)) => {
                let mq = MonomialIdeal::frobenius_maximal(r.nvars(), q_prime);
                (
                    finite(standard_count(b), "A_{e+e'}")?,
                    finite(
                        standard_count(&pm.sum(&s.frobenius_power(q_prime)?)),
                        "P + A_e^[q']",
                    )?,
                    finite(standard_count(s), "A_e")?,
                    finite(standard_count(&pm.sum(&mq)), "P + m^[q']")?,
                )
            }
            _ => {
                let b = big.to_ideal(r);
                let s = small.to_ideal(r);
                let pc = &prime.candidate;
                let mq = Ideal::frobenius_maximal(r.ring(), q_prime);
                (
                    finite(b.quotient_length(), "A_{e+e'}")?,
                    finite(
                        pc.sum(&s.frobenius_power(q_prime)?).quotient_length(),
                        "P + A_e^[q']",
                    )?,
                    finite(s.quotient_length(), "A_e")?,
                    finite(pc.sum(&mq).quotient_length(), "P + m^[q']")?,
                )
            }
        };
    let holds = lhs <= middle && (middle as u128) <= (length_a_e as u128) * (length_p_mq as u128);
    Ok(MainClaim {
        e,
        e_prime,
        lhs,
        middle,
        length_a_e,
        length_p_mq,
        holds,
    })
}

/// Checks `A_e(S') = A_e(R)S' + (z^q)` for `S' = S[z]` with a fresh `z`.
pub fn flat_extension_check(r: &RingPresentation, e: u32) -> Result<bool> {
    let q = q_for(r.p() as u64, e)?;
    let z = r.fresh_variable();
    let ext = r.extend_by_variable(&z)?;
    let n = r.nvars();
    let lifted_map: Vec<usize> = (0..n).collect();
    let base = splitting_ideal(r, e)?;
    let mut gens: Vec<Poly> = base
        .gens()
        .iter()
        .map(|g| g.map_into(ext.ring(), &lifted_map))
        .collect();
    let mut zq = vec![0u64; n + 1];
    zq[n] = q;
    gens.push(Poly::term(ext.ring(), Monomial::from_exponents(&zq), 1));
    let expected = Ideal::new(ext.ring(), gens);
    let got = splitting_ideal(&ext, e)?;
    Ok(got.same_ideal(&expected))
}
