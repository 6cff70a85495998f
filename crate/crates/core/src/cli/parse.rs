//! The problem-file language.
//!
//! ```text
//! # comment
//! p 3
//! vars x y z
//! emax 4
//! witness x
//! ideal
//! x*y - z^2
//! end
//! ```
//!
//! `p` and `vars` are required, `emax` and `witness` optional, and header
//! lines may appear in any order outside the `ideal` block. Expressions use
//! `+ - * ^` and parentheses; multiplication is always written out.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyRing, PrimeField};

/// Largest exponent literal accepted in an expression.
pub const MAX_EXPONENT: u64 = 1 << 20;

/// Polynomial expression over declared variables. Integer literals are
/// stored reduced mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

impl Expr {
    pub fn to_poly(&self, ring: &Arc<PolyRing>) -> Result<Poly> {
        Ok(match self {
            Expr::Int(c) => Poly::constant(ring, *c as i64),
            Expr::Var(i) => Poly::var(ring, *i),
            Expr::Neg(a) => a.to_poly(ring)?.neg(),
            Expr::Add(a, b) => a.to_poly(ring)?.add(&b.to_poly(ring)?)?,
            Expr::Sub(a, b) => a.to_poly(ring)?.sub(&b.to_poly(ring)?)?,
            Expr::Mul(a, b) => a.to_poly(ring)?.mul(&b.to_poly(ring)?)?,
            Expr::Pow(a, k) => a.to_poly(ring)?.pow(*k)?,
        })
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    /// Minimal-parenthesis rendering that parses back to `self`.
    pub fn render(&self, vars: &[String]) -> String {
        let mut out = String::new();
        self.write(vars, &mut out);
        out
    }

    fn write_at(&self, vars: &[String], min: u8, out: &mut String) {
        if self.prec() < min {
            out.push('(');
            self.write(vars, out);
            out.push(')');
        } else {
            self.write(vars, out);
        }
    }

    fn write(&self, vars: &[String], out: &mut String) {
        match self {
            Expr::Int(c) => out.push_str(&c.to_string()),
            Expr::Var(i) => out.push_str(&vars[*i]),
            Expr::Neg(a) => {
                out.push('-');
                a.write_at(vars, 3, out);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(vars, 1, out);
                out.push_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                });
                b.write_at(vars, 2, out);
            }
            Expr::Mul(a, b) => {
                a.write_at(vars, 2, out);
                out.push('*');
                b.write_at(vars, 3, out);
            }
            Expr::Pow(a, k) => {
                a.write_at(vars, 5, out);
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub p: u64,
    pub vars: Vec<String>,
    pub ideal: Vec<Expr>,
    pub witness: Option<Expr>,
    pub e_max: Option<u32>,
}

impl ProblemFile {
    pub fn ring(&self) -> Result<Arc<PolyRing>> {
        Ok(PolyRing::grevlex(PrimeField::new(self.p)?, self.vars.clone()))
    }

    pub fn generators(&self, ring: &Arc<PolyRing>) -> Result<Vec<Poly>> {
        self.ideal.iter().map(|e| e.to_poly(ring)).collect()
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p {}", self.p)?;
        writeln!(f, "vars {}", self.vars.join(" "))?;
        if let Some(e) = self.e_max {
            writeln!(f, "emax {e}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness {}", w.render(&self.vars))?;
        }
        writeln!(f, "ideal")?;
        for g in &self.ideal {
            writeln!(f, "{}", g.render(&self.vars))?;
        }
        writeln!(f, "end")
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexed {
    tok: Tok,
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Vec<Lexed>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Lexed { tok, col });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && is_ident_start(chars[i]) {
                return Err(syntax(
                    line,
                    col0 + i,
                    "implicit multiplication is not allowed; write `*`",
                ));
            }
            out.push(Lexed {
                tok: Tok::Int(chars[start..i].iter().collect()),
                col,
            });
        } else if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            out.push(Lexed {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Lexed>,
    pos: usize,
    line: usize,
    end_col: usize,
    vars: &'a [String],
    field: PrimeField,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.col).unwrap_or(self.end_col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        syntax(self.line, self.col(), msg)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(self.err("implicit multiplication is not allowed; write `*`"));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        let k = match self.peek() {
            Some(Tok::Int(digits)) => match digits.parse::<u64>() {
                Ok(k) if k <= MAX_EXPONENT => k,
                _ => return Err(syntax(self.line, col, format!("exponent exceeds {MAX_EXPONENT}"))),
            },
            _ => return Err(self.err("expected a non-negative integer exponent")),
        };
        self.pos += 1;
        if self.peek() == Some(&Tok::Caret) {
            return Err(self.err("chained `^` needs parentheses"));
        }
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        let tok = self.toks.get(self.pos).map(|t| t.tok.clone());
        match tok {
            Some(Tok::Int(digits)) => {
                self.pos += 1;
                let p = self.field.p() as u64;
                let c = digits
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Expr::Int(c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Expr::Var(i)),
                    None => Err(Error::UndeclaredVariable {
                        name,
                        line: self.line,
                        column: col,
                    }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.err("expected a number, variable or `(`")),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

fn parse_expr_at(src: &str, line: usize, col0: usize, vars: &[String], field: PrimeField) -> Result<Expr> {
    let toks = lex(src, line, col0)?;
    let end_col = col0 + src.chars().count();
    let mut parser = Parser {
        toks,
        pos: 0,
        line,
        end_col,
        vars,
        field,
    };
    let e = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(parser.err("unexpected token"));
    }
    Ok(e)
}

/// Parses one expression, e.g. the `--witness` argument.
pub fn parse_expr(src: &str, vars: &[String], p: u64) -> Result<Expr> {
    parse_expr_at(src, 1, 1, vars, PrimeField::new(p)?)
}

/// Parses `src` and evaluates it in `ring`.
pub fn parse_poly(src: &str, ring: &Arc<PolyRing>) -> Result<Poly> {
    parse_expr_at(src, 1, 1, ring.vars(), ring.field())?.to_poly(ring)
}

struct Pending {
    line: usize,
    col: usize,
    text: String,
}

/// Strips a trailing `#` comment.
fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("")
}

fn first_word(s: &str) -> (&str, &str, usize) {
    let lead = s.len() - s.trim_start().len();
    let t = &s[lead..];
    let end = t.find(char::is_whitespace).unwrap_or(t.len());
    (&t[..end], &t[end..], lead)
}

fn parse_uint(word: &str, line: usize, col: usize, what: &str) -> Result<u64> {
    word.parse::<u64>().map_err(|_| {
        syntax(
            line,
            col,
            format!("`{what}` expects a non-negative integer, got `{word}`"),
        )
    })
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut p: Option<u64> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut e_max: Option<u32> = None;
    let mut witness: Option<Pending> = None;
    let mut gens: Vec<Pending> = Vec::new();
    let mut seen_ideal = false;
    let mut in_ideal = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = content(raw);
        if body.trim().is_empty() {
            continue;
        }
        let (kw, rest, lead) = first_word(body);
        let col = lead + 1;
        let rest_col = col + kw.chars().count();
        if in_ideal {
            if kw == "end" && rest.trim().is_empty() {
                in_ideal = false;
            } else {
                gens.push(Pending {
                    line,
                    col: 1,
                    text: body.to_string(),
                });
            }
            continue;
        }
        let args: Vec<&str> = rest.split_whitespace().collect();
        let dup = |set: bool| {
            if set {
                Err(syntax(line, col, format!("duplicate `{kw}` line")))
            } else {
                Ok(())
            }
        };
        match kw {
            "p" => {
                dup(p.is_some())?;
                if args.len() != 1 {
                    return Err(syntax(line, rest_col, "`p` expects exactly one integer"));
                }
                let v = parse_uint(args[0], line, rest_col + 1, "p")?;
                PrimeField::new(v)?;
                p = Some(v);
            }
            "vars" => {
                dup(vars.is_some())?;
                if args.is_empty() {
                    return Err(syntax(line, rest_col, "`vars` needs at least one name"));
                }
                let mut names: Vec<String> = Vec::new();
                for a in &args {
                    let ok = a.chars().next().is_some_and(is_ident_start) && a.chars().all(is_ident_char);
                    if !ok {
                        return Err(syntax(line, rest_col + 1, format!("invalid variable name `{a}`")));
                    }
                    if names.iter().any(|n| n == a) {
                        return Err(syntax(
                            line,
                            rest_col + 1,
                            format!("variable `{a}` declared twice"),
                        ));
                    }
                    names.push(a.to_string());
                }
                vars = Some(names);
            }
            "emax" => {
                dup(e_max.is_some())?;
                if args.len() != 1 {
                    return Err(syntax(line, rest_col, "`emax` expects exactly one integer"));
                }
                let v = parse_uint(args[0], line, rest_col + 1, "emax")?;
                if v == 0 || v > 64 {
                    return Err(syntax(line, rest_col + 1, "`emax` must lie in 1..=64"));
                }
                e_max = Some(v as u32);
            }
            "witness" => {
                dup(witness.is_some())?;
                if rest.trim().is_empty() {
                    return Err(syntax(line, rest_col, "`witness` needs an expression"));
                }
                witness = Some(Pending {
                    line,
                    col: rest_col,
                    text: rest.to_string(),
                });
            }
            "ideal" => {
                dup(seen_ideal)?;
                if !rest.trim().is_empty() {
                    return Err(syntax(
                        line,
                        rest_col + 1,
                        "generators go on the lines after `ideal`",
                    ));
                }
                seen_ideal = true;
                in_ideal = true;
            }
            "end" => return Err(syntax(line, col, "`end` without `ideal`")),
            other => return Err(syntax(line, col, format!("unknown directive `{other}`"))),
        }
    }
    let eof = last_line.max(1);
    if in_ideal {
        return Err(syntax(eof, 1, "missing `end` after the ideal block"));
    }
    let p = p.ok_or_else(|| syntax(eof, 1, "missing `p` line"))?;
    let vars = vars.ok_or_else(|| syntax(eof, 1, "missing `vars` line"))?;
    if !seen_ideal {
        return Err(syntax(eof, 1, "missing `ideal` block"));
    }
    let field = PrimeField::new(p)?;
    let parse = |pd: &Pending| parse_expr_at(&pd.text, pd.line, pd.col, &vars, field);
    let ideal = gens.iter().map(parse).collect::<Result<Vec<_>>>()?;
    let witness = witness.as_ref().map(parse).transpose()?;
    Ok(ProblemFile {
        p,
        vars,
        ideal,
        witness,
        e_max,
    })
}
