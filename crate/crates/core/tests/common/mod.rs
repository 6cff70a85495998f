#![allow(dead_code)]

use std::sync::Arc;

use frobsig::finvariants::{
    aq, fedder_is_fpure, flat_extension_check, frobenius_colon, main_claim_check, q_for, sdim_report,
    splitting_ideal, splitting_prime, Engine, PrimeStatus, RingPresentation, Sdim,
};
use frobsig::groebner::Ideal;
use frobsig::monomial::{minimalize, MonomialIdeal};
use frobsig::oracle::{brute_mono_colon, dual_rank_aq};
use frobsig::polyring::{Monomial, Poly, PolyRing, PrimeField};
use rand::seq::SliceRandom;
use rand::Rng;

pub const NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

/// Largest `q^n` the random suites will push a length computation to.
pub const BOX_LIMIT: u64 = 20_000;

pub fn ring(p: u64, n: usize) -> Arc<PolyRing> {
    PolyRing::grevlex(
        PrimeField::new(p).unwrap(),
        NAMES[..n].iter().map(|s| s.to_string()).collect(),
    )
}

pub fn mono(r: &Arc<PolyRing>, e: &[u64]) -> Poly {
    Poly::term(r, Monomial::from_exponents(e), 1)
}

/// A monomial ideal problem: `p`, number of variables, generator exponents.
#[derive(Debug, Clone)]
pub struct Instance {
    pub p: u64,
    pub nvars: usize,
    pub gens: Vec<Vec<u64>>,
}

impl Instance {
    pub fn ring(&self) -> Arc<PolyRing> {
        ring(self.p, self.nvars)
    }

    pub fn ideal(&self) -> Ideal {
        let r = self.ring();
        Ideal::new(&r, self.gens.iter().map(|g| mono(&r, g)).collect())
    }

    pub fn presentation(&self, engine: Engine) -> RingPresentation {
        RingPresentation::from_ideal(self.ideal(), engine).unwrap()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&a| a <= 1))
    }

    /// Largest `e ≤ 3` with `q^n ≤ BOX_LIMIT`, but at least 2.
    pub fn e_max(&self) -> u32 {
        let mut e = 2;
        while e < 3 && q_for(self.p, e + 1).unwrap().pow(self.nvars as u32) <= BOX_LIMIT {
            e += 1;
        }
        e
    }

    pub fn describe(&self) -> String {
        let r = self.ring();
        let gens: Vec<String> = self.gens.iter().map(|g| mono(&r, g).to_string()).collect();
        format!("p={} n={} I=({})", self.p, self.nvars, gens.join(", "))
    }
}

/// Random monomial ideal with `n ≤ 4` variables and generators of total
/// degree `1..=4`; about half the draws are squarefree.
pub fn random_instance<R: Rng>(rng: &mut R) -> Instance {
    let p = *[2u64, 3].choose(rng).unwrap();
    let nvars = rng.gen_range(1..=4);
    let squarefree = rng.gen_bool(0.5);
    let ngens = rng.gen_range(0..=4);
    let gens = (0..ngens)
        .map(|_| {
            let mut e = vec![0u64; nvars];
            if squarefree {
                let size = rng.gen_range(1..=nvars);
                let mut idx: Vec<usize> = (0..nvars).collect();
                idx.shuffle(rng);
                for &i in &idx[..size] {
                    e[i] = 1;
                }
            } else {
                for _ in 0..rng.gen_range(1..=4) {
                    e[rng.gen_range(0..nvars)] += 1;
                }
            }
            e
        })
        .collect();
    Instance { p, nvars, gens }
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub violations: Vec<String>,
    /// For squarefree inputs: whether the Gröbner persistence candidate
    /// equals the exact splitting prime.
    pub persistence_matches: Option<bool>,
}

/// Runs every splitting invariant on a monomial instance with both engines.
pub fn check_instance(inst: &Instance) -> Outcome {
    let mut out = Outcome::default();
    let tag = inst.describe();
    let mut fail = |msg: String| out.violations.push(format!("{tag}: {msg}"));
    let rm = inst.presentation(Engine::Monomial);
    let rg = inst.presentation(Engine::Groebner);
    let n = inst.nvars;
    let e_max = inst.e_max();
    let i_mono = rm.monomial_ideal().unwrap().clone();

    let mut aqs = Vec::new();
    let mut chain: Vec<Ideal> = Vec::new();
    for e in 1..=e_max {
        let q = q_for(inst.p, e).unwrap();
        let a = splitting_ideal(&rm, e).unwrap();
        let a_g = splitting_ideal(&rg, e).unwrap();
        if !a.same_ideal(&a_g) {
            fail(format!("engines disagree on A_{e}"));
        }
        let a_q = aq(&rm, e).unwrap();
        let a_q_g = aq(&rg, e).unwrap();
        if a_q != a_q_g {
            fail(format!("engines disagree on a_q at e={e}: {a_q} vs {a_q_g}"));
        }
        if let Some(prev) = chain.last() {
            if !a.is_subset_of(prev) {
                fail(format!("A_{e} not contained in A_{}", e - 1));
            }
        }
        if !rm.ideal().is_subset_of(&a) {
            fail(format!("I not contained in A_{e}"));
        }
        if !Ideal::frobenius_maximal(rm.ring(), q).is_subset_of(&a) {
            fail(format!("m^[q] not contained in A_{e}"));
        }
        match dual_rank_aq(&rm, e) {
            Ok(d) if d == a_q => {}
            Ok(d) => fail(format!("duality: a_q={a_q} but dual rank {d} at e={e}")),
            Err(err) => fail(format!("dual rank failed at e={e}: {err}")),
        }
        aqs.push(a_q);
        chain.push(a);
    }

    // (I^[p] : I) against the box-enumeration oracle
    let ip = i_mono.frobenius_power(inst.p).unwrap();
    let cap = ip
        .min_gens()
        .iter()
        .flat_map(|m| m.exponents().to_vec())
        .max()
        .unwrap_or(0);
    let colon = MonomialIdeal::from_ideal(&frobenius_colon(&rm, 1).unwrap()).unwrap();
    if brute_mono_colon(&ip, &i_mono, cap).unwrap() != colon {
        fail("(I^[p]:I) disagrees with box enumeration".into());
    }

    let fpure = fedder_is_fpure(&rm).unwrap();
    if fpure != (aqs[0] >= 1) || fpure == chain[0].is_unit() || fpure != fedder_is_fpure(&rg).unwrap() {
        fail(format!("Fedder inconsistent: fpure={fpure}, a_p={}", aqs[0]));
    }

    let pr = splitting_prime(&rm, e_max).unwrap();
    match (fpure, pr.status) {
        (false, PrimeStatus::UnitIdeal) => {}
        (true, PrimeStatus::Exact) => {}
        (_, s) => fail(format!("splitting prime status {s:?} with fpure={fpure}")),
    }
    if pr.status == PrimeStatus::Exact {
        let p_mono = MonomialIdeal::from_ideal(&pr.candidate).unwrap();
        if pr.certificates.iter().any(|c| !c.holds) {
            fail("containment certificate failed".into());
        }
        for qp in pr.minimal_primes.as_deref().unwrap_or(&[]) {
            if !qp.to_monomial_ideal(n).is_subset_of(&p_mono) {
                fail(format!("minimal prime {:?} not inside P", qp.variables));
            }
        }
        let r_over_p = RingPresentation::from_ideal(pr.candidate.clone(), Engine::Monomial).unwrap();
        let is_max = p_mono.min_gens().len() == n;
        for e in 1..=e_max {
            let col_r = frobenius_colon(&rm, e).unwrap();
            let col_p = frobenius_colon(&r_over_p, e).unwrap();
            if !col_r.is_subset_of(&col_p) {
                fail(format!("(I^[q]:I) not inside (Q^[q]:Q) at e={e}"));
            }
            let a_p = aq(&r_over_p, e).unwrap();
            if aqs[(e - 1) as usize] > a_p {
                fail(format!(
                    "a_q(R)={} exceeds a_q(R/P)={a_p} at e={e}",
                    aqs[(e - 1) as usize]
                ));
            }
            if is_max && aqs[(e - 1) as usize] != 1 {
                fail(format!("P = m but a_q = {} at e={e}", aqs[(e - 1) as usize]));
            }
        }
        for e in 1..e_max {
            for e2 in 1..=e_max - e {
                match main_claim_check(&rm, &pr, e, e2) {
                    Ok(mc) if mc.holds => {}
                    Ok(mc) => fail(format!("main claim fails at ({e},{e2}): {mc:?}")),
                    Err(err) => fail(format!("main claim error at ({e},{e2}): {err}")),
                }
            }
        }
        if e_max >= 3 {
            let s = sdim_report(&rm, e_max).unwrap();
            match (s.empirical_sdim, pr.dim_r_mod_p) {
                (Sdim::Finite(k), Some(d)) if k <= d => {}
                (k, d) => fail(format!("sdim {k} exceeds dim(R/P) {d:?}")),
            }
        }
    }
    for e in 1..=e_max.min(2) {
        match flat_extension_check(&rm, e) {
            Ok(true) => {}
            Ok(false) => fail(format!("flat extension fails at e={e}")),
            Err(err) => fail(format!("flat extension error at e={e}: {err}")),
        }
    }

    if inst.is_squarefree() && pr.status == PrimeStatus::Exact {
        let heuristic = splitting_prime(&rg, e_max).unwrap();
        out.persistence_matches = Some(heuristic.candidate.same_ideal(&pr.candidate));
    }
    out
}

/// `minimalize` wrapper for building monomial ideals from exponent rows.
pub fn mono_ideal(n: usize, rows: &[&[u64]]) -> MonomialIdeal {
    minimalize(n, rows.iter().map(|r| Monomial::from_exponents(r)).collect())
}

/// `S/(xz - y^2, xw - yz)` over F_2, a non-principal binomial ideal.
pub fn two_binomials_ring() -> RingPresentation {
    let r = ring(2, 4);
    let f = mono(&r, &[1, 0, 1, 0]).sub(&mono(&r, &[0, 2, 0, 0])).unwrap();
    let g = mono(&r, &[1, 0, 0, 1]).sub(&mono(&r, &[0, 1, 1, 0])).unwrap();
    RingPresentation::from_ideal(Ideal::new(&r, vec![f, g]), Engine::Auto).unwrap()
}
