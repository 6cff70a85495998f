use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::parse::{parse_expr, parse_problem, ProblemFile};
use crate::error::{Error, Result};
use crate::finvariants::{
    fedder_is_fpure, flat_extension_check, frobenius_colon, hk_sequence, main_claim_check, q_for,
    sdim_report, splitting_prime, splitting_report, strongly_f_regular_witness, Engine, PrimeStatus,
    RingPresentation, SplittingPrimeResult, WitnessOutcome, Q_CAP,
};
use crate::groebner::Ideal;
use crate::polyring::Poly;

pub const DEFAULT_EMAX: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Command {
    Fpure,
    Aq,
    Prime,
    Sdim,
    Hk,
    Witness,
    Report,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Fpure,
        Command::Aq,
        Command::Prime,
        Command::Sdim,
        Command::Hk,
        Command::Witness,
        Command::Report,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Fpure => "fpure",
            Command::Aq => "aq",
            Command::Prime => "prime",
            Command::Sdim => "sdim",
            Command::Hk => "hk",
            Command::Witness => "witness",
            Command::Report => "report",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown command `{s}`")))
    }
}

#[derive(Debug, Clone, Default)]
pub struct Flags {
    pub e_max: Option<u32>,
    pub engine: Option<Engine>,
    pub witness: Option<String>,
    pub strict: bool,
    /// Include `wall_time_ms` in JSON (breaks byte-identical output).
    pub timing: bool,
    /// Value of `FROBSIG_EMAX_CAP`, if set.
    pub emax_cap: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: Command,
    pub json: Value,
    pub text: String,
    pub exit_code: i32,
    pub wall_time_ms: u128,
}

impl Report {
    /// Key-sorted, two-space indented JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        write_canonical(&self.json, 0, &mut out);
        out.push('\n');
        out
    }
}

fn write_canonical(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_canonical(&map[k.as_str()], indent + 1, out);
                if i + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_canonical(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn render_gens(gens: &[Poly]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

/// Generators listed by leading monomial, largest first.
fn ideal_gens(i: &Ideal) -> Vec<String> {
    let order = i.ring().order();
    let mut gens: Vec<&Poly> = i.gens().iter().collect();
    gens.sort_by(|a, b| match (a.lead_monomial(), b.lead_monomial()) {
        (Some(x), Some(y)) => order.cmp(y, x),
        _ => std::cmp::Ordering::Equal,
    });
    gens.iter().map(|g| g.to_string()).collect()
}

/// Largest `e` with `p^e ≤ Q_CAP`.
fn q_cap_exponent(p: u64) -> u32 {
    let mut e = 0;
    while q_for(p, e + 1).is_ok() {
        e += 1;
    }
    e
}

struct Ctx<'a> {
    r: RingPresentation,
    e_max: u32,
    witness: Option<Poly>,
    text: &'a mut String,
}

impl Ctx<'_> {
    fn need(&self, what: &str, min: u32) -> Result<()> {
        if self.e_max < min {
            return Err(Error::Input(format!(
                "{what} needs e_max >= {min}, but the effective e_max is {}",
                self.e_max
            )));
        }
        Ok(())
    }

    fn fpure(&mut self) -> Result<Value> {
        let fpure = fedder_is_fpure(&self.r)?;
        let colon = frobenius_colon(&self.r, 1)?;
        let _ = writeln!(self.text, "F-pure: {}", if fpure { "yes" } else { "no" });
        Ok(json!({
            "fpure": fpure,
            "frobenius_colon": ideal_gens(&colon),
        }))
    }

    fn aq(&mut self) -> Result<Value> {
        let rep = splitting_report(&self.r, self.e_max)?;
        let _ = writeln!(self.text, "e  q  a_q  a_q/q^n");
        let n = self.r.nvars();
        let levels: Vec<Value> = rep
            .entries
            .iter()
            .map(|en| {
                let _ = writeln!(self.text, "{}  {}  {}  {}", en.e, en.q, en.aq, en.ratios[n]);
                let ratios: Vec<Value> = en
                    .ratios
                    .iter()
                    .enumerate()
                    .map(|(k, f)| {
                        let mut v = to_value(f);
                        v["k"] = json!(k);
                        v
                    })
                    .collect();
                json!({
                    "e": en.e,
                    "q": en.q,
                    "aq": en.aq,
                    "splitting_ideal": ideal_gens(&en.splitting_ideal),
                    "ratios": ratios,
                })
            })
            .collect();
        Ok(json!({ "fpure": rep.fpure, "levels": levels }))
    }

    fn prime_result(&mut self) -> Result<(SplittingPrimeResult, Value)> {
        self.need("prime", 2)?;
        let pr = splitting_prime(&self.r, self.e_max)?;
        let vars = self.r.ring().vars();
        let minimal_primes = pr.minimal_primes.as_ref().map(|ps| {
            ps.iter()
                .map(|q| q.variables.iter().map(|&i| vars[i].clone()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        });
        let gens = ideal_gens(&pr.candidate);
        let shown = if gens.is_empty() {
            "0".to_string()
        } else {
            gens.join(", ")
        };
        let _ = writeln!(self.text, "splitting prime ({:?}): ({shown})", pr.status);
        if let Some(d) = pr.dim_r_mod_p {
            let cond = if pr.status == PrimeStatus::Exact {
                ""
            } else {
                " (conditional)"
            };
            let _ = writeln!(self.text, "dim R/P = {d}{cond}");
        }
        let v = json!({
            "status": to_value(&pr.status),
            "generators": gens,
            "certificates": to_value(&pr.certificates),
            "dim_r_mod_p": pr.dim_r_mod_p,
            "dim_conditional": pr.status != PrimeStatus::Exact,
            "minimal_primes": minimal_primes,
        });
        Ok((pr, v))
    }

    fn sdim(&mut self) -> Result<Value> {
        self.need("sdim", 3)?;
        let s = sdim_report(&self.r, self.e_max)?;
        let _ = writeln!(self.text, "sdim (empirical): {}", s.empirical_sdim);
        if let (Some(lo), Some(hi)) = (&s.ratio_lower, &s.ratio_upper) {
            let _ = writeln!(self.text, "ratio range over tail: [{lo}, {hi}]");
        }
        if let Some(g) = s.conjecture_gap {
            let _ = writeln!(self.text, "dim(R/P) - sdim = {g}");
        }
        Ok(to_value(&s))
    }

    fn hk(&mut self) -> Result<Value> {
        let d = self.r.ideal().krull_dim()?;
        let hk = hk_sequence(&self.r, self.e_max)?;
        let _ = writeln!(self.text, "dim R = {d}");
        for h in &hk {
            let _ = writeln!(
                self.text,
                "e={} q={} length={} ratio={}",
                h.e, h.q, h.length, h.ratio
            );
        }
        Ok(json!({ "dim": d, "levels": to_value(&hk) }))
    }

    fn witness(&mut self) -> Result<Value> {
        let c = self
            .witness
            .clone()
            .ok_or_else(|| Error::Input("witness needs --witness or a `witness` line".into()))?;
        let outcome = strongly_f_regular_witness(&self.r, &c, self.e_max)?;
        let (name, e) = match outcome {
            WitnessOutcome::Proven(e) => ("proven", Some(e)),
            WitnessOutcome::Inconclusive => ("inconclusive", None),
        };
        let _ = match e {
            Some(e) => writeln!(self.text, "witness {c}: splits at e = {e}"),
            None => writeln!(self.text, "witness {c}: inconclusive up to e = {}", self.e_max),
        };
        Ok(json!({
            "witness": c.to_string(),
            "outcome": name,
            "e": e,
            "assumes_localization_strongly_f_regular": true,
        }))
    }

    fn checks(&mut self, prime: Option<&SplittingPrimeResult>) -> Result<Value> {
        let mut main = Vec::new();
        if let Some(pr) = prime.filter(|pr| pr.status == PrimeStatus::Exact) {
            for e in 1..self.e_max {
                for e_prime in 1..=self.e_max - e {
                    let mc = main_claim_check(&self.r, pr, e, e_prime)?;
                    let _ = writeln!(
                        self.text,
                        "main claim e={e} e'={e_prime}: {} <= {} <= {}*{} {}",
                        mc.lhs,
                        mc.middle,
                        mc.length_a_e,
                        mc.length_p_mq,
                        if mc.holds { "holds" } else { "FAILS" }
                    );
                    main.push(to_value(&mc));
                }
            }
        }
        let mut flat = Vec::new();
        for e in 1..=self.e_max.min(2) {
            let v = match flat_extension_check(&self.r, e) {
                Ok(holds) => {
                    let _ = writeln!(self.text, "flat extension e={e}: {holds}");
                    json!({ "e": e, "holds": holds, "skipped": null })
                }
                Err(err) => json!({ "e": e, "holds": null, "skipped": err.to_string() }),
            };
            flat.push(v);
        }
        Ok(json!({ "main_claim": main, "flat_extension": flat }))
    }

    fn report(&mut self) -> Result<Value> {
        let skipped = |e: Error| json!({ "skipped": e.to_string() });
        let mut out = serde_json::Map::new();
        out.insert("fpure".into(), self.fpure()?);
        out.insert("aq".into(), self.aq()?);
        let prime = match self.prime_result() {
            Ok((pr, v)) => {
                out.insert("prime".into(), v);
                Some(pr)
            }
            Err(e) => {
                out.insert("prime".into(), skipped(e));
                None
            }
        };
        let sdim = self.sdim().unwrap_or_else(skipped);
        out.insert("sdim".into(), sdim);
        out.insert("hk".into(), self.hk()?);
        let w = if self.witness.is_some() {
            self.witness()?
        } else {
            Value::Null
        };
        out.insert("witness".into(), w);
        out.insert("checks".into(), self.checks(prime.as_ref())?);
        Ok(Value::Object(out))
    }
}

fn digest(text: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}

/// Parses `text` and runs `command` on it.
pub fn run_text(command: Command, text: &str, flags: &Flags) -> Result<Report> {
    let problem = parse_problem(text)?;
    run(command, &problem, &digest(text), flags)
}

pub fn run(command: Command, problem: &ProblemFile, input_digest: &str, flags: &Flags) -> Result<Report> {
    let start = Instant::now();
    let requested = flags.e_max.or(problem.e_max).unwrap_or(DEFAULT_EMAX);
    if requested == 0 {
        return Err(Error::Input("e_max must be at least 1".into()));
    }
    let mut warnings = Vec::new();
    let mut e_max = requested;
    if let Some(cap) = flags.emax_cap {
        if cap < e_max {
            warnings.push(format!("e_max lowered from {e_max} to {cap} by FROBSIG_EMAX_CAP"));
            e_max = cap;
        }
    }
    let q_cap = q_cap_exponent(problem.p);
    if q_cap < e_max {
        warnings.push(format!(
            "e_max lowered from {e_max} to {q_cap} so that p^e_max <= {Q_CAP}"
        ));
        e_max = q_cap;
    }
    if e_max == 0 {
        return Err(Error::Input("effective e_max is 0".into()));
    }

    let ring = problem.ring()?;
    let gens = problem.generators(&ring)?;
    let requested_engine = flags.engine.unwrap_or(Engine::Auto);
    let r = RingPresentation::from_ideal(Ideal::new(&ring, gens), requested_engine)?;
    warnings.extend(r.warnings().iter().cloned());
    let witness = match &flags.witness {
        Some(src) => Some(parse_expr(src, &problem.vars, problem.p)?.to_poly(&ring)?),
        None => problem.witness.as_ref().map(|w| w.to_poly(&ring)).transpose()?,
    };

    let mut text = String::new();
    let _ = writeln!(
        text,
        "frobsig {} (p = {}, engine = {}, e_max = {e_max})",
        command.name(),
        problem.p,
        r.engine()
    );
    for w in &warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    let mut ctx = Ctx {
        r,
        e_max,
        witness,
        text: &mut text,
    };
    let result = match command {
        Command::Fpure => ctx.fpure()?,
        Command::Aq => ctx.aq()?,
        Command::Prime => ctx.prime_result()?.1,
        Command::Sdim => ctx.sdim()?,
        Command::Hk => ctx.hk()?,
        Command::Witness => ctx.witness()?,
        Command::Report => ctx.report()?,
    };
    let fpure = fedder_is_fpure(&ctx.r)?;
    let exit_code = if flags.strict && !fpure { 1 } else { 0 };

    let input = json!({
        "digest": input_digest,
        "p": problem.p,
        "vars": problem.vars,
        "ideal": render_gens(ctx.r.ideal().gens()),
    });
    let wall_time_ms = start.elapsed().as_millis();
    let mut json = json!({
        "command": command.name(),
        "engine": ctx.r.engine(),
        "engine_requested": requested_engine,
        "e_max": e_max,
        "e_max_requested": requested,
        "input": input,
        "result": result,
        "version": env!("CARGO_PKG_VERSION"),
        "warnings": warnings,
    });
    if flags.timing {
        json["wall_time_ms"] = json!(wall_time_ms as u64);
    }
    let _ = writeln!(text, "wall time: {wall_time_ms} ms");
    Ok(Report {
        command,
        json,
        text,
        exit_code,
        wall_time_ms,
    })
}
