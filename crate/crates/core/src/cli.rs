//! Expression language for algebra elements and the batch commands behind the `qhaar` binary.
//!
//! Grammar, whitespace insensitive:
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' '*')? ('^' '-'? int)?
//! atom   := 'a'..'k' (rank 3, no 'i', 'j') | 'x[' int ',' int ']' | 'det' | 'Det' | 'q'
//!         | int ('/' int)? | '(' expr ')'
//! ```
//!
//! `det` must carry a negative exponent and stands for powers of `det_q^{-1}`; `Det` is `D_q`.
//! `^*` applies the star map to a single generator. `q^(k/2)` is accepted for half-integer powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::corep::{
    gram_matrix, gram_schmidt, quantum_dimension, weight_spaces, Comodule, Content, DominantWeight, Form, GramMatrix, Method,
    DIRECT_MAX_WIDTH,
};
use crate::error::{Error, Result};
use crate::haar::{haar_pseudo, haar_state, PseudoIndex};
use crate::linsys::{
    build_system, build_system_unchecked, solution_to_csv, solution_to_json, solve_system, source_matrix_solve,
    source_matrix_solve_unchecked,
};
use crate::qalgebra::{dq_power, star_generator, AlgebraElement, Generator, LETTERS3};
use crate::qarith::QRational;
use crate::verify::run_suite;

/// How a generator was written, kept so that printing reproduces the input form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenStyle {
    Letter,
    Indexed,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Signed terms; `true` marks subtraction.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Generator { row: usize, col: usize, style: GenStyle, starred: bool },
    /// `det_q^{-k}`.
    DetInv(u32),
    /// `D_q`.
    Det,
    Q,
    /// `q^{k/2}` with `k` odd.
    QHalf(i64),
    Scalar(BigRational),
    Paren(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(terms) => {
                for (i, (neg, t)) in terms.iter().enumerate() {
                    match (i, neg) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Expr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Expr::Power(b, e) => write!(f, "{b}^{e}"),
            Expr::Generator { row, col, style, starred } => {
                match style {
                    GenStyle::Letter => write!(f, "{}", LETTERS3[(row - 1) * 3 + col - 1])?,
                    GenStyle::Indexed => write!(f, "x[{row},{col}]")?,
                }
                if *starred {
                    write!(f, "^*")?;
                }
                Ok(())
            }
            Expr::DetInv(k) => write!(f, "det^-{k}"),
            Expr::Det => write!(f, "Det"),
            Expr::Q => write!(f, "q"),
            Expr::QHalf(k) => write!(f, "q^({k}/2)"),
            Expr::Scalar(r) => write!(f, "{r}"),
            Expr::Paren(e) => write!(f, "({e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn small_int(&mut self) -> Result<i64> {
        let at = self.pos;
        let v = self.int()?;
        i64::try_from(v).map_err(|_| Error::Parse { pos: at, msg: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            terms.push((neg, self.term()?));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        if terms.len() == 1 && !terms[0].0 {
            Ok(terms.pop().unwrap().1)
        } else {
            Ok(Expr::Sum(terms))
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'(')
    }

    fn term(&mut self) -> Result<Expr> {
        let mut fs = vec![self.factor()?];
        loop {
            if self.eat(b'*') || self.starts_factor() {
                fs.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { Expr::Product(fs) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let mut atom = self.atom()?;
        if self.peek() == Some(b'^') && self.src.get(self.pos + 1..).is_some_and(|r| r.iter().find(|c| !c.is_ascii_whitespace()) == Some(&b'*')) {
            self.pos += 1;
            self.expect(b'*')?;
            match &mut atom {
                Expr::Generator { starred, .. } if !*starred => *starred = true,
                _ => return Err(Error::Parse { pos: start, msg: "'^*' applies to a single generator".into() }),
            }
        }
        if self.eat(b'^') {
            if matches!(atom, Expr::Q) && self.eat(b'(') {
                let neg = self.eat(b'-');
                let k = self.small_int()?;
                self.expect(b'/')?;
                if self.int()? != BigInt::from(2) {
                    return self.err("only halves are allowed in q exponents");
                }
                self.expect(b')')?;
                let k = if neg { -k } else { k };
                return Ok(if k % 2 == 0 { Expr::Power(Box::new(Expr::Q), k / 2) } else { Expr::QHalf(k) });
            }
            let neg = self.eat(b'-');
            let e = self.small_int()?;
            let e = if neg { -e } else { e };
            if matches!(atom, Expr::DetInv(0)) {
                if e >= 0 {
                    return Err(Error::Parse { pos: start, msg: "det needs a negative exponent; use Det for D_q".into() });
                }
                return Ok(Expr::DetInv(u32::try_from(-e).map_err(|_| Error::Parse { pos: start, msg: "exponent too large".into() })?));
            }
            return Ok(Expr::Power(Box::new(atom), e));
        }
        if matches!(atom, Expr::DetInv(0)) {
            return Err(Error::Parse { pos: start, msg: "det needs a negative exponent; use Det for D_q".into() });
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        let c = match self.peek() {
            Some(c) => c,
            None => return self.err("unexpected end of input"),
        };
        let start = self.pos;
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(Expr::Paren(Box::new(e)));
        }
        if c.is_ascii_digit() {
            let num = self.int()?;
            let den = if self.peek() == Some(b'/') {
                self.pos += 1;
                self.int()?
            } else {
                BigInt::one()
            };
            if den.is_zero() {
                return Err(Error::Parse { pos: start, msg: "zero denominator".into() });
            }
            return Ok(Expr::Scalar(BigRational::new(num, den)));
        }
        if !c.is_ascii_alphabetic() {
            return self.err(format!("unexpected '{}'", c as char));
        }
        let mut end = self.pos;
        while end < self.src.len() && self.src[end].is_ascii_alphabetic() {
            end += 1;
        }
        let word = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
        match word {
            "det" => {
                self.pos = end;
                Ok(Expr::DetInv(0))
            }
            "Det" => {
                self.pos = end;
                Ok(Expr::Det)
            }
            "x" if self.src.get(end) == Some(&b'[') => {
                self.pos = end + 1;
                let row = self.small_int()?;
                self.expect(b',')?;
                let col = self.small_int()?;
                self.expect(b']')?;
                if row < 1 || col < 1 || row as usize > self.n || col as usize > self.n {
                    return Err(Error::Parse { pos: start, msg: format!("x[{row},{col}] is outside rank {}", self.n) });
                }
                Ok(Expr::Generator { row: row as usize, col: col as usize, style: GenStyle::Indexed, starred: false })
            }
            _ => {
                // a single letter; juxtaposed letters like "ceg" split into separate factors
                self.pos += 1;
                let ch = c as char;
                if ch == 'q' {
                    return Ok(Expr::Q);
                }
                match Generator::from_letter(ch) {
                    Some(g) if self.n == 3 => Ok(Expr::Generator { row: g.row, col: g.col, style: GenStyle::Letter, starred: false }),
                    Some(_) => Err(Error::Parse { pos: start, msg: format!("letter '{ch}' needs rank 3; use x[i,j]") }),
                    None => Err(Error::Parse { pos: start, msg: format!("unknown generator '{ch}'") }),
                }
            }
        }
    }
}

/// Parse an expression for rank `n`.
pub fn parse(input: &str, n: usize) -> Result<Expr> {
    if n < 2 {
        return Err(Error::Parse { pos: 0, msg: "rank must be at least 2".into() });
    }
    let mut p = Parser { src: input.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn scalar_of(e: &AlgebraElement) -> Option<QRational> {
    match e.terms().collect::<Vec<_>>().as_slice() {
        [] => Some(QRational::zero()),
        [(w, c)] if w.factors.is_empty() && w.det_power == 0 => Some((*c).clone()),
        _ => None,
    }
}

fn big_to_q(r: &BigRational) -> QRational {
    &QRational::from_int(r.numer().clone()) / &QRational::from_int(r.denom().clone())
}

/// The element of `O(U_q(n))` denoted by `e`.
pub fn to_element(e: &Expr, n: usize) -> Result<AlgebraElement> {
    Ok(match e {
        Expr::Sum(ts) => {
            let mut acc = AlgebraElement::zero(n);
            for (neg, t) in ts {
                let x = to_element(t, n)?;
                acc = if *neg { &acc - &x } else { &acc + &x };
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = AlgebraElement::one(n);
            for x in fs {
                acc = &acc * &to_element(x, n)?;
            }
            acc
        }
        Expr::Power(b, k) => {
            let x = to_element(b, n)?;
            if *k >= 0 {
                x.pow(*k as u32)
            } else {
                let s = scalar_of(&x).ok_or_else(|| Error::Unsupported("negative power of a non-scalar".into()))?;
                AlgebraElement::scalar(n, s.inv()?.pow(-k))
            }
        }
        Expr::Generator { row, col, starred, .. } => {
            if *starred {
                star_generator(n, *row, *col)
            } else {
                AlgebraElement::generator(n, *row, *col)
            }
        }
        Expr::DetInv(k) => AlgebraElement::det_inv(n, *k),
        Expr::Det => dq_power(n, 1),
        Expr::Q => AlgebraElement::scalar(n, QRational::q_pow(1)),
        Expr::QHalf(k) => AlgebraElement::scalar(n, QRational::v_pow(*k)),
        Expr::Scalar(r) => AlgebraElement::scalar(n, big_to_q(r)),
        Expr::Paren(x) => to_element(x, n)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown format {s}") }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub n: usize,
    pub format: Format,
    pub at_q: Option<BigRational>,
    pub override_feasibility: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { n: 3, format: Format::Text, at_q: None, override_feasibility: false }
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Eval { expr: String },
    Table { m: u32 },
    Gram { lambda: DominantWeight, mu: Content, form: Form, side: Comodule, method: Option<Method> },
    Ortho { lambda: DominantWeight, mu: Content, form: Form, side: Comodule },
    Dim { lambda: DominantWeight },
    Solve { n: usize, m: u32 },
    Source { n: usize, m: u32 },
    Verify { suite: String, bound: i64 },
}

/// Text produced by a command and the process exit status it asks for.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

/// Exit status for an error: 2 parse, 3 feasibility, 4 empty weight space, 5 residual, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::NotDominant(_) => 2,
        Error::Feasibility(_) => 3,
        Error::EmptyWeightSpace => 4,
        Error::Residual(_) | Error::RankDeficient(_) => 5,
        _ => 1,
    }
}

/// `"2,1,0"` as a list of integers.
pub fn parse_triple(s: &str) -> Result<[i64; 3]> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse { pos: 0, msg: format!("{s}: {e}") })?;
    v.try_into().map_err(|_| Error::Parse { pos: 0, msg: format!("{s}: expected three integers") })
}

fn value_json(v: &QRational, cfg: &Config) -> Result<Value> {
    let mut j = v.to_json();
    if let Some(q0) = &cfg.at_q {
        j["at_q"] = json!(v.evaluate(q0)?.to_string());
    }
    Ok(j)
}

fn value_text(v: &QRational, cfg: &Config) -> Result<String> {
    Ok(match (&cfg.at_q, cfg.format) {
        (Some(q0), Format::Latex) => format!("{} = {}", v.to_latex(), latex_rational(&v.evaluate(q0)?)),
        (None, Format::Latex) => v.to_latex(),
        (Some(q0), _) => format!("{} = {} at q = {}", v, v.evaluate(q0)?, q0),
        (None, _) => v.to_string(),
    })
}

fn latex_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn eval(expr: &str, cfg: &Config) -> Result<String> {
    let e = parse(expr, cfg.n)?;
    let x = to_element(&e, cfg.n)?;
    let v = match haar_state(&x) {
        Err(Error::Unsupported(_)) if cfg.n != 3 => {
            // solve and cache every order that occurs, then retry
            let orders: std::collections::BTreeSet<u32> = x.terms().map(|(w, _)| w.det_power).filter(|&m| m >= 2).collect();
            for m in orders {
                let sys = if cfg.override_feasibility { build_system_unchecked(cfg.n, m)? } else { build_system(cfg.n, m)? };
                solve_system(&sys)?;
            }
            haar_state(&x)?
        }
        r => r?,
    };
    Ok(match cfg.format {
        Format::Json => pretty(&json!({ "expression": e.to_string(), "value": value_json(&v, cfg)? })),
        Format::Csv => {
            let mut s = format!("expression,value\n{},{}", csv_field(&e.to_string()), csv_field(&v.to_string()));
            if let Some(q0) = &cfg.at_q {
                s = s.replacen("value\n", "value,at_q\n", 1) + &format!(",{}", v.evaluate(q0)?);
            }
            s + "\n"
        }
        _ => value_text(&v, cfg)? + "\n",
    })
}

fn table(m: u32, cfg: &Config) -> Result<String> {
    if cfg.n != 3 {
        return solve(cfg.n, m, cfg);
    }
    let rows: Vec<(PseudoIndex, String, QRational)> = PseudoIndex::all(m as i64)
        .into_iter()
        .map(|idx| Ok((idx, idx.word().display(3), haar_pseudo(idx)?)))
        .collect::<Result<_>>()?;
    let label = |i: &PseudoIndex| format!("({};{},{},{},{})", i.m, i.s, i.r, i.l, i.t);
    Ok(match cfg.format {
        Format::Json => {
            let vals = rows
                .iter()
                .map(|(i, w, v)| Ok(json!({ "index": [i.m, i.s, i.r, i.l, i.t], "word": w, "value": value_json(v, cfg)? })))
                .collect::<Result<Vec<_>>>()?;
            pretty(&json!({ "m": m, "rows": vals }))
        }
        Format::Csv => {
            let mut s = String::from("index,word,value\n");
            for (i, w, v) in &rows {
                s += &format!("{},{},{}\n", csv_field(&label(i)), csv_field(w), csv_field(&value_text(v, cfg)?));
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{lll}\n");
            for (i, w, v) in &rows {
                s += &format!("${}$ & ${}$ & ${}$ \\\\\n", label(i), w.replace('*', " "), value_text(v, cfg)?);
            }
            s + "\\end{tabular}\n"
        }
        Format::Text => rows.iter().map(|(i, w, v)| Ok(format!("{}  {}  {}\n", label(i), w, value_text(v, cfg)?))).collect::<Result<String>>()?,
    })
}

fn solve(n: usize, m: u32, cfg: &Config) -> Result<String> {
    let sys = if cfg.override_feasibility { build_system_unchecked(n, m)? } else { build_system(n, m)? };
    let sol = solve_system(&sys)?;
    Ok(match cfg.format {
        Format::Json => pretty(&solution_to_json(n, m, &sol)),
        Format::Csv => solution_to_csv(&sol),
        Format::Latex | Format::Text => {
            let mut keys: Vec<_> = sol.keys().collect();
            keys.sort();
            keys.iter()
                .map(|k| {
                    let key = k.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" | ");
                    Ok(format!("[{}]  {}\n", key, value_text(&sol[*k], cfg)?))
                })
                .collect::<Result<String>>()?
        }
    })
}

fn source(n: usize, m: u32, cfg: &Config) -> Result<String> {
    let v = if cfg.override_feasibility { source_matrix_solve_unchecked(n, m)? } else { source_matrix_solve(n, m)? };
    Ok(match cfg.format {
        Format::Json => pretty(&json!({ "n": n, "m": m, "value": value_json(&v, cfg)? })),
        Format::Csv => format!("n,m,value\n{},{},{}\n", n, m, csv_field(&value_text(&v, cfg)?)),
        _ => value_text(&v, cfg)? + "\n",
    })
}

fn gram_output(g: &GramMatrix, agree: Option<bool>, cfg: &Config) -> Result<String> {
    Ok(match cfg.format {
        Format::Json => {
            let mut j = g.to_json();
            if let Some(q0) = &cfg.at_q {
                let at: Vec<Vec<String>> =
                    g.entries.iter().map(|r| r.iter().map(|x| Ok(x.evaluate(q0)?.to_string())).collect::<Result<_>>()).collect::<Result<_>>()?;
                j["at_q"] = json!(at);
            }
            if let Some(a) = agree {
                j["methods_agree"] = json!(a);
            }
            pretty(&j)
        }
        Format::Csv => {
            let mut s = String::from("row,col,value\n");
            for (i, r) in g.entries.iter().enumerate() {
                for (j, x) in r.iter().enumerate() {
                    s += &format!("{},{},{}\n", i, j, csv_field(&value_text(x, cfg)?));
                }
            }
            s
        }
        Format::Latex => g.to_latex() + "\n",
        Format::Text => {
            let mut s = String::new();
            for (v, r) in g.vectors.iter().zip(&g.entries) {
                let cells = r.iter().map(|x| value_text(x, cfg)).collect::<Result<Vec<_>>>()?;
                s += &format!("{}: {}\n", v, cells.join(" ; "));
            }
            if let Some(a) = agree {
                s += &format!("closed and direct agree: {a}\n");
            }
            s
        }
    })
}

fn gram(lambda: DominantWeight, mu: Content, form: Form, side: Comodule, method: Option<Method>, cfg: &Config) -> Result<String> {
    let width = lambda.lambda1 - lambda.lambda3;
    match method {
        Some(m) => gram_output(&gram_matrix(lambda, mu, form, side, m)?, None, cfg),
        None => {
            let closed = gram_matrix(lambda, mu, form, side, Method::Closed)?;
            let agree = if width <= DIRECT_MAX_WIDTH {
                Some(gram_matrix(lambda, mu, form, side, Method::Direct)?.entries == closed.entries)
            } else {
                None
            };
            gram_output(&closed, agree, cfg)
        }
    }
}

fn ortho(lambda: DominantWeight, mu: Content, form: Form, side: Comodule, cfg: &Config) -> Result<String> {
    let g = gram_matrix(lambda, mu, form, side, Method::Closed)?;
    let o = gram_schmidt(&g.entries)?;
    Ok(match cfg.format {
        Format::Json => {
            let mut j = o.to_json();
            j["lambda"] = json!([lambda.lambda1, lambda.lambda2, lambda.lambda3]);
            j["mu"] = json!(mu);
            j["vectors"] = json!(g.vectors.iter().map(|v| v.exponents().to_vec()).collect::<Vec<_>>());
            j["normalization"] = json!("sqrt pending");
            pretty(&j)
        }
        Format::Csv => {
            let mut s = String::from("index,norm_sq\n");
            for (i, d) in o.norms_sq.iter().enumerate() {
                s += &format!("{},{}\n", i, csv_field(&value_text(d, cfg)?));
            }
            s
        }
        Format::Latex => {
            let mut s = crate::corep::matrix_latex(&o.transform) + "\n";
            for (i, d) in o.norms_sq.iter().enumerate() {
                s += &format!("\\|u_{{{}}}\\|^2 = {}\n", i + 1, value_text(d, cfg)?);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, (row, d)) in o.transform.iter().zip(&o.norms_sq).enumerate() {
                let combo: Vec<String> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| if c.is_one() { format!("v{}", j + 1) } else { format!("({})*v{}", c, j + 1) })
                    .collect();
                s += &format!("u{} = {}\n  norm^2 = {} (sqrt pending)\n", i + 1, combo.join(" + "), value_text(d, cfg)?);
            }
            s
        }
    })
}

fn dim(lambda: DominantWeight, cfg: &Config) -> Result<String> {
    let d = quantum_dimension(lambda);
    let spaces = weight_spaces(lambda);
    let total: usize = spaces.values().map(|v| v.len()).sum();
    Ok(match cfg.format {
        Format::Json => {
            let ws: Vec<Value> = spaces.iter().map(|(mu, ts)| json!({ "mu": mu, "dim": ts.len() })).collect();
            pretty(&json!({ "lambda": [lambda.lambda1, lambda.lambda2, lambda.lambda3], "dim": total, "quantum_dim": value_json(&d, cfg)?, "weights": ws }))
        }
        Format::Csv => {
            let mut s = String::from("mu,dim\n");
            for (mu, ts) in &spaces {
                s += &format!("\"{},{},{}\",{}\n", mu[0], mu[1], mu[2], ts.len());
            }
            s
        }
        _ => {
            let mut s = format!("dim = {}\nquantum dim = {}\n", total, value_text(&d, cfg)?);
            for (mu, ts) in &spaces {
                s += &format!("  mu = ({},{},{}): {}\n", mu[0], mu[1], mu[2], ts.len());
            }
            s
        }
    })
}

fn verify(suite: &str, bound: i64, cfg: &Config) -> Result<Outcome> {
    let reports = run_suite(suite, bound)?;
    let ok = reports.iter().all(|r| r.passed());
    let output = match cfg.format {
        Format::Json => pretty(&json!(reports.iter().map(|r| r.to_json()).collect::<Vec<_>>())),
        Format::Csv => {
            let mut s = String::from("identity,points,failures,elapsed_ms\n");
            for r in &reports {
                s += &format!("{},{},{},{}\n", r.identity_id, r.parameter_grid.len(), r.failures.len(), r.elapsed.as_millis());
            }
            s
        }
        _ => reports
            .iter()
            .map(|r| {
                let tag = if r.passed() { "ok  " } else { "FAIL" };
                format!("{tag} {} ({} points, {} ms) {:?}\n", r.identity_id, r.parameter_grid.len(), r.elapsed.as_millis(), r.failures)
            })
            .collect(),
    };
    Ok(Outcome { output, status: if ok { 0 } else { 5 } })
}

/// Run one command; errors carry their exit status through [`exit_code`].
pub fn run_command(cmd: &Command, cfg: &Config) -> Result<Outcome> {
    let ok = |output: String| Outcome { output, status: 0 };
    Ok(match cmd {
        Command::Eval { expr } => ok(eval(expr, cfg)?),
        Command::Table { m } => ok(table(*m, cfg)?),
        Command::Gram { lambda, mu, form, side, method } => ok(gram(*lambda, *mu, *form, *side, *method, cfg)?),
        Command::Ortho { lambda, mu, form, side } => ok(ortho(*lambda, *mu, *form, *side, cfg)?),
        Command::Dim { lambda } => ok(dim(*lambda, cfg)?),
        Command::Solve { n, m } => ok(solve(*n, *m, cfg)?),
        Command::Source { n, m } => ok(source(*n, *m, cfg)?),
        Command::Verify { suite, bound } => verify(suite, *bound, cfg)?,
    })
}
