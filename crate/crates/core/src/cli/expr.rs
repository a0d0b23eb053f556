//! The expression language for scalars, polynomials and cochains.
//!
//! ```text
//! cochain := ['+' | '-'] term (('+' | '-') term)*
//! term    := product ['#' 'g(' ints ')'] ['^' 'dx(' [ints] ')']
//! product := factor ('*' factor)*
//! factor  := atom ['^' ['-'] int]
//! atom    := int ['/' int] | 'q' digit digit | 'q(' int ',' int ')' | 'zeta'
//!          | 'x' int | '(' cochain ')'
//! ```
//!
//! A `^` after a factor is an exponent when an integer or `-` follows, and
//! opens the wedge part when `dx` follows. Inside parentheses only `#`-free,
//! `dx`-free sums are allowed.

use std::fmt;

use crate::algebra::{multiply, AlgebraElement, ExtIndex, GroupElement, GroupSpec, Monomial, QContext};
use crate::brackets::KoszulCochain;
use crate::group_ext::SkewKoszulCochain;
use crate::scalar::{Cyc, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i128),
    Q(usize, usize),
    Zeta,
    X(usize),
    Dx,
    G,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Hash,
    LParen,
    RParen,
    Comma,
    End,
}

fn lex(text: &str) -> PResult<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| ParseError { pos, msg: msg.to_string() };
    let digits = |mut j: usize| {
        let start = j;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        (start, j)
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b' ' | b'\t' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'#' => Some(Tok::Hash),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, start));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let (s, e) = digits(i);
            let v: i128 = text[s..e].parse().map_err(|_| err(s, "integer too large"))?;
            out.push((Tok::Int(v), start));
            i = e;
            continue;
        }
        if text[i..].starts_with("zeta") {
            out.push((Tok::Zeta, start));
            i += 4;
            continue;
        }
        if text[i..].starts_with("dx") {
            out.push((Tok::Dx, start));
            i += 2;
            continue;
        }
        match c {
            b'q' => {
                let (s, e) = digits(i + 1);
                if e - s == 2 {
                    out.push((Tok::Q((bytes[s] - b'0') as usize, (bytes[s + 1] - b'0') as usize), start));
                    i = e;
                } else if e == s && bytes.get(i + 1) == Some(&b'(') {
                    let (s1, e1) = digits(i + 2);
                    let (s2, e2) = digits(e1 + 1);
                    if e1 == s1 || bytes.get(e1) != Some(&b',') || e2 == s2 || bytes.get(e2) != Some(&b')') {
                        return Err(err(start, "expected q(i,j)"));
                    }
                    let a = text[s1..e1].parse().map_err(|_| err(s1, "index too large"))?;
                    let b = text[s2..e2].parse().map_err(|_| err(s2, "index too large"))?;
                    out.push((Tok::Q(a, b), start));
                    i = e2 + 1;
                } else {
                    return Err(err(start, "unknown q variable; use q<i><j> or q(i,j)"));
                }
            }
            b'x' => {
                let (s, e) = digits(i + 1);
                if e == s {
                    return Err(err(start, "expected variable index after x"));
                }
                let v = text[s..e].parse().map_err(|_| err(s, "index too large"))?;
                out.push((Tok::X(v), start));
                i = e;
            }
            b'g' => {
                out.push((Tok::G, start));
                i += 1;
            }
            _ => return Err(err(start, &format!("unexpected character '{}'", c as char))),
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// What the parser resolves names against.
#[derive(Clone, Copy)]
pub struct Env<'a> {
    pub n: usize,
    pub order: u32,
    /// `None` forbids `q` variables (as in the parameter table itself).
    pub ctx: Option<&'a QContext>,
    /// `None` forbids `# g(...)`.
    pub group: Option<&'a GroupSpec>,
}

impl<'a> Env<'a> {
    pub fn new(ctx: &'a QContext, group: Option<&'a GroupSpec>) -> Self {
        Env {
            n: ctx.n(),
            order: ctx.order(),
            ctx: Some(ctx),
            group,
        }
    }
}

/// One parsed term: coefficient, monomial, group element, wedge.
pub type ParsedTerm = (Scalar, Monomial, Option<GroupElement>, Option<ExtIndex>);

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    env: Env<'a>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].0
    }

    fn here(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> PResult<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn int(&mut self) -> PResult<i128> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let idx = self.pos;
        match self.bump() {
            Tok::Int(v) => Ok(if neg { -v } else { v }),
            _ => {
                self.pos = idx;
                self.fail("expected integer")
            }
        }
    }

    fn int_list(&mut self) -> PResult<Vec<i128>> {
        self.expect(Tok::LParen, "'('")?;
        let mut out = Vec::new();
        if *self.peek() != Tok::RParen {
            out.push(self.int()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                out.push(self.int()?);
            }
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(out)
    }

    fn sum(&mut self, nested: bool) -> PResult<Vec<ParsedTerm>> {
        let mut out = Vec::new();
        let mut negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            for (c, m, g, w) in self.term(nested)? {
                out.push((if negate { c.neg() } else { c }, m, g, w));
            }
            match self.peek() {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                _ => break,
            }
            self.bump();
        }
        Ok(out)
    }

    fn term(&mut self, nested: bool) -> PResult<Vec<ParsedTerm>> {
        let value = self.product()?;
        let mut group = None;
        let mut wedge = None;
        if *self.peek() == Tok::Hash {
            if nested {
                return self.fail("'#' is not allowed inside parentheses");
            }
            self.bump();
            let Some(spec) = self.env.group else {
                return self.fail("'#' needs a group in the configuration");
            };
            self.expect(Tok::G, "g(...)")?;
            let at = self.here();
            let exps = self.int_list()?;
            if exps.len() != spec.orders().len() {
                return Err(ParseError {
                    pos: at,
                    msg: format!("group element needs {} components", spec.orders().len()),
                });
            }
            for (e, o) in exps.iter().zip(spec.orders()) {
                if *e < 0 || *e >= *o as i128 {
                    return Err(ParseError {
                        pos: at,
                        msg: format!("group component {e} outside 0..{o}"),
                    });
                }
            }
            let exps: Vec<i64> = exps.iter().map(|&e| e as i64).collect();
            group = Some(spec.element(&exps).expect("checked above"));
        }
        if *self.peek() == Tok::Caret {
            if nested {
                return self.fail("'^ dx' is not allowed inside parentheses");
            }
            self.bump();
            self.expect(Tok::Dx, "dx(...)")?;
            let at = self.here();
            let idx = self.int_list()?;
            let mut seen = Vec::new();
            for &i in &idx {
                if i < 1 || i > self.env.n as i128 {
                    return Err(ParseError {
                        pos: at,
                        msg: format!("index {i} out of range 1..={}", self.env.n),
                    });
                }
                seen.push(i as usize);
            }
            let set = ExtIndex::from_indices(&seen);
            if set.len() != seen.len() || seen.windows(2).any(|w| w[0] >= w[1]) {
                return Err(ParseError {
                    pos: at,
                    msg: "dx indices must be strictly increasing".into(),
                });
            }
            wedge = Some(set);
        }
        Ok(value
            .terms()
            .map(|(m, c)| (c.clone(), m.clone(), group.clone(), wedge))
            .collect())
    }

    fn product(&mut self) -> PResult<AlgebraElement> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = self.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        match self.env.ctx {
            Some(ctx) => multiply(ctx, a, b),
            None => {
                // Only scalars occur without a context.
                let c = a.coeff(&Monomial::one(self.env.n)).mul(&b.coeff(&Monomial::one(self.env.n)));
                AlgebraElement::scalar(self.env.n, c)
            }
        }
    }

    fn factor(&mut self) -> PResult<AlgebraElement> {
        let start = self.here();
        let base = self.atom()?;
        if *self.peek() == Tok::Caret && matches!(self.peek2(), Tok::Int(_) | Tok::Minus) {
            self.bump();
            let e = self.int()?;
            return self.power(&base, e, start);
        }
        Ok(base)
    }

    fn power(&self, base: &AlgebraElement, e: i128, at: usize) -> PResult<AlgebraElement> {
        let n = self.env.n;
        if e < 0 {
            let scalar = base.len() == 1 && base.terms().all(|(m, _)| m.is_one());
            let inv = if scalar {
                base.coeff(&Monomial::one(n)).pow(e as i64)
            } else {
                None
            };
            return match inv {
                Some(c) => Ok(AlgebraElement::scalar(n, c)),
                None => Err(ParseError {
                    pos: at,
                    msg: "negative exponent of a non-invertible factor".into(),
                }),
            };
        }
        if e > 64 {
            return Err(ParseError {
                pos: at,
                msg: "exponent too large".into(),
            });
        }
        let mut acc = AlgebraElement::one(n);
        for _ in 0..e {
            acc = self.mul(&acc, base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> PResult<AlgebraElement> {
        let n = self.env.n;
        let at = self.here();
        let idx = self.pos;
        match self.bump() {
            Tok::Int(v) => {
                let mut r = Rational::from_integer(v);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let idx = self.pos;
                    let d = match self.bump() {
                        Tok::Int(d) if d != 0 => d,
                        _ => {
                            self.pos = idx;
                            return self.fail("expected nonzero denominator");
                        }
                    };
                    r /= Rational::from_integer(d);
                }
                Ok(AlgebraElement::scalar(n, Scalar::from_rational(r)))
            }
            Tok::Q(i, j) => {
                let Some(ctx) = self.env.ctx else {
                    return Err(ParseError {
                        pos: at,
                        msg: "q variables are not allowed here".into(),
                    });
                };
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(ParseError {
                        pos: at,
                        msg: format!("unknown q variable q({i},{j}) for N = {n}"),
                    });
                }
                Ok(AlgebraElement::scalar(n, ctx.q(i, j)))
            }
            Tok::Zeta => Ok(AlgebraElement::scalar(n, Scalar::from_cyc(Cyc::zeta_pow(self.env.order, 1)))),
            Tok::X(i) => {
                if self.env.ctx.is_none() {
                    return Err(ParseError {
                        pos: at,
                        msg: "variables are not allowed here".into(),
                    });
                }
                if i == 0 || i > n {
                    return Err(ParseError {
                        pos: at,
                        msg: format!("index {i} out of range 1..={n}"),
                    });
                }
                Ok(AlgebraElement::var(n, i))
            }
            Tok::LParen => {
                let inner = self.sum(true)?;
                self.expect(Tok::RParen, "')'")?;
                let mut out = AlgebraElement::zero();
                for (c, m, _, _) in inner {
                    out.add_term(m, c);
                }
                Ok(out)
            }
            _ => {
                self.pos = idx;
                self.fail("expected a number, q variable, zeta, variable or '('")
            }
        }
    }
}

/// Parses a sum of terms, each with optional group and wedge parts.
pub fn parse_terms(env: Env<'_>, text: &str) -> PResult<Vec<ParsedTerm>> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, env };
    if *p.peek() == Tok::End {
        return p.fail("empty expression");
    }
    let out = p.sum(false)?;
    if *p.peek() != Tok::End {
        return p.fail("unexpected trailing input");
    }
    Ok(out)
}

fn no_parts(terms: &[ParsedTerm], text_len: usize) -> PResult<()> {
    if terms.iter().any(|(_, _, g, w)| g.is_some() || w.is_some()) {
        return Err(ParseError {
            pos: text_len,
            msg: "expected a polynomial without '#' or '^ dx' parts".into(),
        });
    }
    Ok(())
}

/// A polynomial in `S_q(V)`.
pub fn parse_polynomial(env: Env<'_>, text: &str) -> PResult<AlgebraElement> {
    let terms = parse_terms(env, text)?;
    no_parts(&terms, 0)?;
    Ok(AlgebraElement::from_terms(terms.into_iter().map(|(c, m, _, _)| (m, c))))
}

/// A scalar; `q` variables are accepted only when `env` carries a context.
pub fn parse_scalar(env: Env<'_>, text: &str) -> PResult<Scalar> {
    let p = parse_polynomial(env, text)?;
    let one = Monomial::one(env.n);
    if p.terms().any(|(m, _)| *m != one) {
        return Err(ParseError {
            pos: 0,
            msg: "expected a scalar".into(),
        });
    }
    Ok(p.coeff(&one))
}

fn common_degree(terms: &[ParsedTerm]) -> PResult<usize> {
    let mut deg = None;
    for (_, _, _, w) in terms {
        let d = w.map_or(0, |w| w.len());
        if deg.is_some_and(|e| e != d) {
            return Err(ParseError {
                pos: 0,
                msg: "terms have different dx degrees".into(),
            });
        }
        deg = Some(d);
    }
    Ok(deg.unwrap_or(0))
}

/// A cochain `Σ c x^a ⊗ dx_b`.
pub fn parse_cocycle(env: Env<'_>, text: &str) -> PResult<KoszulCochain> {
    let terms = parse_terms(env, text)?;
    if terms.iter().any(|t| t.2.is_some()) {
        return Err(ParseError {
            pos: 0,
            msg: "'#' needs a group in the configuration".into(),
        });
    }
    let mut out = KoszulCochain::zero(common_degree(&terms)?);
    for (c, m, _, w) in terms {
        out.add_term(m, w.unwrap_or_default(), c);
    }
    Ok(out)
}

/// A cochain `Σ c x^a ♯ g ⊗ dx_b`; an omitted group part means the identity.
pub fn parse_skew_cocycle(env: Env<'_>, group: &GroupSpec, text: &str) -> PResult<SkewKoszulCochain> {
    let env = Env {
        group: Some(group),
        ..env
    };
    let terms = parse_terms(env, text)?;
    let mut out = SkewKoszulCochain::zero(common_degree(&terms)?);
    for (c, m, g, w) in terms {
        out.add_term(m, g.unwrap_or_else(|| group.identity()), w.unwrap_or_default(), c);
    }
    Ok(out)
}

fn dx_list(b: ExtIndex) -> String {
    let parts: Vec<String> = b.indices().iter().map(|i| i.to_string()).collect();
    format!("dx({})", parts.join(","))
}

/// Canonical text of a cochain; `parse_cocycle` reads it back exactly.
pub fn print_cocycle(x: &KoszulCochain) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .terms()
        .map(|((a, b), c)| format!("({c}) * {a} ^ {}", dx_list(*b)))
        .collect();
    parts.join(" + ")
}

/// Canonical text of a skew cochain.
pub fn print_skew_cocycle(x: &SkewKoszulCochain) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .terms()
        .map(|((a, g, b), c)| format!("({c}) * {a} # {g} ^ {}", dx_list(*b)))
        .collect();
    parts.join(" + ")
}
