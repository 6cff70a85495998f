use serde::Serialize;

use super::presentation::{Engine, RingPresentation, SplitIdeal};
use super::splitting::{fedder_is_fpure, splitting_ideal, splitting_ideal_raw};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::{is_variable_prime, minimal_primes_squarefree, minimalize, VariablePrime};
use crate::polyring::{Monomial, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PrimeStatus {
    /// Certified prime, from the sum of the minimal primes of a
    /// Stanley–Reisner ideal.
    Exact,
    /// Persistence heuristic over the computed chain; not certified.
    Candidate,
    /// R is not F-pure.
    UnitIdeal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub e: u32,
    /// Whether `candidate ⊆ A_e` was verified.
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct SplittingPrimeResult {
    pub candidate: Ideal,
    pub status: PrimeStatus,
    pub certificates: Vec<Certificate>,
    /// `dim S/candidate`; conditional unless `status == Exact`.
    pub dim_r_mod_p: Option<usize>,
    /// Minimal primes of `I`, when they were computed (squarefree path).
    pub minimal_primes: Option<Vec<VariablePrime>>,
}

/// The splitting prime `P(R) = ∩_e A_e`, or a labelled candidate for it.
///
/// Stanley–Reisner ideals take the exact route: `P` is the sum of the
/// minimal primes. Everything else (including squarefree input forced onto
/// the Gröbner engine) uses the persistence heuristic: keep the reduced
/// Gröbner basis elements that appear in the basis of every computed `A_e`.
pub fn splitting_prime(r: &RingPresentation, e_max: u32) -> Result<SplittingPrimeResult> {
    if e_max < 2 {
        return Err(Error::Precondition("splitting_prime needs e_max >= 2".into()));
    }
    if !fedder_is_fpure(r)? {
        return Ok(SplittingPrimeResult {
            candidate: Ideal::unit(r.ring()),
            status: PrimeStatus::UnitIdeal,
            certificates: Vec::new(),
            dim_r_mod_p: None,
            minimal_primes: None,
        });
    }
    if r.engine() == Engine::Monomial && r.is_squarefree() {
        return exact_stanley_reisner(r, e_max);
    }
    persistence_candidate(r, e_max)
}

fn exact_stanley_reisner(r: &RingPresentation, e_max: u32) -> Result<SplittingPrimeResult> {
    let i = r.monomial_ideal().expect("monomial engine");
    let n = r.nvars();
    let primes = minimal_primes_squarefree(i)?;
    let mut vars: Vec<usize> = primes.iter().flat_map(|q| q.variables.iter().copied()).collect();
    vars.sort_unstable();
    vars.dedup();
    let p = minimalize(n, vars.iter().map(|&v| Monomial::var(n, v)).collect());
    if is_variable_prime(&p).is_none() {
        return Err(Error::Internal(
            "sum of minimal primes is not a variable prime".into(),
        ));
    }
    let mut certificates = Vec::with_capacity(e_max as usize);
    for e in 1..=e_max {
        let holds = match splitting_ideal_raw(r, e)? {
            SplitIdeal::Mono(a) => p.is_subset_of(&a),
            SplitIdeal::Poly(a) => p.to_ideal(r.ring()).is_subset_of(&a),
        };
        certificates.push(Certificate { e, holds });
    }
    let candidate = p.to_ideal(r.ring());
    let dim = n - vars.len();
    Ok(SplittingPrimeResult {
        candidate,
        status: PrimeStatus::Exact,
        certificates,
        dim_r_mod_p: Some(dim),
        minimal_primes: Some(primes),
    })
}

fn persistence_candidate(r: &RingPresentation, e_max: u32) -> Result<SplittingPrimeResult> {
    let chain: Vec<Ideal> = (1..=e_max)
        .map(|e| splitting_ideal(r, e))
        .collect::<Result<_>>()?;
    let bases: Vec<Vec<Poly>> = chain
        .iter()
        .map(|a| a.try_gb().map(|g| g.to_vec()))
        .collect::<Result<_>>()?;
    let persistent: Vec<Poly> = bases[bases.len() - 1]
        .iter()
        .filter(|g| bases.iter().all(|b| b.iter().any(|h| h.terms() == g.terms())))
        .cloned()
        .collect();
    let mut gens = r.ideal().gens().to_vec();
    gens.extend(persistent);
    let candidate = Ideal::new(r.ring(), gens);
    let gb = candidate.try_gb()?.to_vec();
    let candidate = Ideal::new(r.ring(), gb);
    let certificates = chain
        .iter()
        .zip(1..)
        .map(|(a, e)| Certificate {
            e,
            holds: candidate.is_subset_of(a),
        })
        .collect();
    let dim = candidate.krull_dim().ok();
    Ok(SplittingPrimeResult {
        candidate,
        status: PrimeStatus::Candidate,
        certificates,
        dim_r_mod_p: dim,
        minimal_primes: None,
    })
}
