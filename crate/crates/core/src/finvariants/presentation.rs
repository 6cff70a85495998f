use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::MonomialIdeal;
use crate::polyring::{Poly, PolyRing, PrimeField};

/// Which computational path evaluates the colon/length formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Auto,
    Monomial,
    Groebner,
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "monomial" => Ok(Engine::Monomial),
            "groebner" => Ok(Engine::Groebner),
            other => Err(Error::Input(format!("unknown engine `{other}`"))),
        }
    }
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Engine::Auto => "auto",
            Engine::Monomial => "monomial",
            Engine::Groebner => "groebner",
        })
    }
}

/// A splitting ideal `A_e` (as its preimage in `S`), in whichever form the
/// engine produced it.
#[derive(Debug, Clone)]
pub(crate) enum SplitIdeal {
    Mono(MonomialIdeal),
    Poly(Ideal),
}

/// `R = F_p[vars] / I` at the homogeneous maximal ideal. The residue field
/// is `F_p`, so `α(R) = log_p [k : k^p]` is always 0.
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    ideal: Ideal,
    mono: Option<MonomialIdeal>,
    is_squarefree: bool,
    engine: Engine,
    warnings: Vec<String>,
    pub(crate) colon_cache: Mutex<BTreeMap<u32, SplitIdeal>>,
    pub(crate) split_cache: Mutex<BTreeMap<u32, SplitIdeal>>,
}

impl std::fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RingPresentation")
            .field("p", &self.p())
            .field("vars", &self.ring.vars())
            .field("ideal", &self.ideal)
            .field("engine", &self.engine)
            .finish()
    }
}

impl RingPresentation {
    pub fn new(p: u64, vars: Vec<String>, gens: Vec<Poly>, engine: Engine) -> Result<Self> {
        let ring = PolyRing::grevlex(PrimeField::new(p)?, vars);
        for g in &gens {
            if g.ring().nvars() != ring.nvars() {
                return Err(Error::VariableCount {
                    expected: ring.nvars(),
                    got: g.ring().nvars(),
                });
            }
            if g.ring().field() != ring.field() {
                return Err(Error::RingMismatch);
            }
        }
        let ideal = Ideal::new(&ring, gens);
        Self::from_ideal(ideal, engine)
    }

    pub fn from_ideal(ideal: Ideal, engine: Engine) -> Result<Self> {
        let ring = ideal.ring().clone();
        let mono = MonomialIdeal::from_ideal(&ideal);
        let proper = match &mono {
            Some(m) => !m.is_unit(),
            None => !ideal.try_gb()?.first().map(|g| g.is_one()).unwrap_or(false),
        };
        if !proper {
            return Err(Error::UnitIdeal);
        }
        let engine = match (engine, &mono) {
            (Engine::Auto, Some(_)) | (Engine::Monomial, Some(_)) => Engine::Monomial,
            (Engine::Auto, None) | (Engine::Groebner, _) => Engine::Groebner,
            (Engine::Monomial, None) => return Err(Error::NotMonomial),
        };
        let is_squarefree = mono.as_ref().map(|m| m.is_squarefree()).unwrap_or(false);
        let mut warnings = Vec::new();
        match &mono {
            Some(m) if !m.is_squarefree() => warnings.push(
                "ideal is not radical (non-squarefree monomial ideal); formulas are evaluated literally"
                    .to_string(),
            ),
            None => warnings.push("radicality of the ideal is not verified".to_string()),
            _ => {}
        }
        Ok(Self {
            ring,
            ideal,
            mono,
            is_squarefree,
            engine,
            warnings,
            colon_cache: Mutex::new(BTreeMap::new()),
            split_cache: Mutex::new(BTreeMap::new()),
        })
    }

    /// Same ring, different defining ideal (e.g. `S/Q` for a prime `Q ⊇ I`).
    pub fn with_ideal(&self, ideal: Ideal) -> Result<Self> {
        let engine = match self.engine {
            Engine::Groebner => Engine::Groebner,
            _ => Engine::Auto,
        };
        Self::from_ideal(ideal, engine)
    }

    /// Adjoins one variable `name`, keeping the same generators.
    pub fn extend_by_variable(&self, name: &str) -> Result<Self> {
        if self.ring.var_index(name).is_some() {
            return Err(Error::Input(format!("variable `{name}` already present")));
        }
        let mut vars = self.ring.vars().to_vec();
        vars.push(name.to_string());
        let ring = PolyRing::grevlex(self.ring.field(), vars);
        let map: Vec<usize> = (0..self.nvars()).collect();
        let gens = self
            .ideal
            .gens()
            .iter()
            .map(|g| g.map_into(&ring, &map))
            .collect();
        self.with_ideal(Ideal::new(&ring, gens))
    }

    /// A variable name not used in the ring.
    pub fn fresh_variable(&self) -> String {
        let mut name = "z".to_string();
        while self.ring.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }

    pub fn p(&self) -> u32 {
        self.ring.p()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn monomial_ideal(&self) -> Option<&MonomialIdeal> {
        self.mono.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.mono.is_some()
    }

    pub fn is_squarefree(&self) -> bool {
        self.is_squarefree
    }

    /// The resolved engine (never `Auto`).
    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn alpha(&self) -> u32 {
        0
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The monomial ideal when the monomial engine is active.
    pub(crate) fn mono_engine(&self) -> Option<&MonomialIdeal> {
        match self.engine {
            Engine::Monomial => self.mono.as_ref(),
            _ => None,
        }
    }
}
