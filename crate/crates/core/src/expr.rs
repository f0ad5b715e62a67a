//! A small expression language for naming rings.
//!
//! ```text
//! ring    := factor ("x" factor)*
//! factor  := "(" ring ")" | Z<n> | GF(p, k) | M<n>(ring) | T<n>(ring) | S<n>(ring)
//!          | Tskew<n>(ring, alpha) | K(ring, lit) | MF<n>(ring, lit) | TE(ring)
//!          | GR(ring, group) | Q(ring, [lit, ...])
//! group   := gfactor ("x" gfactor)*
//! gfactor := "(" group ")" | C<n> | D<n> | Q8 | S3
//! alpha   := id | identity | frobenius
//! lit     := integer (that multiple of 1) | #index (a raw element index)
//! ```
//!
//! Constructor names are case-insensitive. [`fmt::Display`] prints the
//! canonical form, which parses back to the same tree.

use std::fmt;
use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::group::{
    make_cyclic, make_dihedral, make_group_product, make_quaternion8, make_symmetric3, FiniteGroup,
};
use crate::group_ring::{group_ring, GroupRing};
use crate::ring::{
    direct_product, equal_diag_triangular, formal_matrix_ks, formal_matrix_ns, make_gf, make_zmod,
    matrix_ring, quotient, skew_triangular, trivial_extension, upper_triangular, Elem, FiniteRing,
    RingEndomorphism,
};
use crate::subsets::ideal_closure;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zmod(usize),
    Gf(u64, u32),
    Product(Vec<RingExpr>),
    Matrix(usize, Box<RingExpr>),
    Upper(usize, Box<RingExpr>),
    EqualDiag(usize, Box<RingExpr>),
    Skew(usize, Box<RingExpr>, Alpha),
    Ks(Box<RingExpr>, Literal),
    Mns(usize, Box<RingExpr>, Literal),
    TrivialExt(Box<RingExpr>),
    GroupRing(Box<RingExpr>, GroupExpr),
    Quotient(Box<RingExpr>, Vec<Literal>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha {
    Identity,
    Frobenius,
}

/// An element named either as an integer multiple of 1 or by raw index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Literal {
    Int(i64),
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    Symmetric3,
    Product(Vec<GroupExpr>),
}

impl Literal {
    pub fn resolve(self, r: &FiniteRing) -> Result<Elem> {
        match self {
            Literal::Int(k) => Ok(r.int(k)),
            Literal::Index(i) => r.check_index(i),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Int(k) => write!(f, "{k}"),
            Literal::Index(i) => write!(f, "#{i}"),
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alpha::Identity => "identity",
            Alpha::Frobenius => "frobenius",
        })
    }
}

fn write_product<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    parts: &[T],
    is_product: impl Fn(&T) -> bool,
) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(" x ")?;
        }
        if is_product(p) {
            write!(f, "({p})")?;
        } else {
            write!(f, "{p}")?;
        }
    }
    Ok(())
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z{n}"),
            RingExpr::Gf(p, k) => write!(f, "GF({p},{k})"),
            RingExpr::Product(parts) => {
                write_product(f, parts, |p| matches!(p, RingExpr::Product(_)))
            }
            RingExpr::Matrix(n, b) => write!(f, "M{n}({b})"),
            RingExpr::Upper(n, b) => write!(f, "T{n}({b})"),
            RingExpr::EqualDiag(n, b) => write!(f, "S{n}({b})"),
            RingExpr::Skew(n, b, a) => write!(f, "Tskew{n}({b}, {a})"),
            RingExpr::Ks(b, s) => write!(f, "K({b}, {s})"),
            RingExpr::Mns(n, b, s) => write!(f, "MF{n}({b}, {s})"),
            RingExpr::TrivialExt(b) => write!(f, "TE({b})"),
            RingExpr::GroupRing(b, g) => write!(f, "GR({b}, {g})"),
            RingExpr::Quotient(b, gens) => {
                let gens: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "Q({b}, [{}])", gens.join(", "))
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Dihedral(n) => write!(f, "D{n}"),
            GroupExpr::Quaternion8 => f.write_str("Q8"),
            GroupExpr::Symmetric3 => f.write_str("S3"),
            GroupExpr::Product(parts) => {
                write_product(f, parts, |p| matches!(p, GroupExpr::Product(_)))
            }
        }
    }
}

// ---- lexer ----

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Times,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Hash,
    Minus,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Times => f.write_str("`x`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Hash => f.write_str("`#`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn err(column: usize, message: impl Into<String>) -> RingError {
    RingError::Parse {
        column,
        message: message.into(),
    }
}

/// Tokens with 1-based character columns. Identifiers are letter runs only,
/// so `Z12` lexes as `Z`, `12`; an `x` glued to the front of an identifier
/// right after a number or `)` is the product operator (`Z3xZ3`).
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out: Vec<(Tok, usize)> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '#' => Some(Tok::Hash),
            '-' => Some(Tok::Minus),
            '×' | '*' => Some(Tok::Times),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let after_operand = matches!(out.last(), Some((Tok::Int(_) | Tok::RParen, _)));
            if word.eq_ignore_ascii_case("x") {
                out.push((Tok::Times, col));
            } else if after_operand && word.starts_with(['x', 'X']) {
                out.push((Tok::Times, col));
                out.push((Tok::Ident(word[1..].to_string()), col + 1));
            } else {
                out.push((Tok::Ident(word), col));
            }
        } else {
            return Err(err(col, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

// ---- parser ----

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(err(self.col(), format!("expected {want}, found {}", self.peek())))
        }
    }

    fn uint(&mut self, what: &str) -> Result<(u64, usize)> {
        let col = self.col();
        match self.bump() {
            (Tok::Int(s), _) => s
                .parse::<u64>()
                .map(|v| (v, col))
                .map_err(|_| err(col, format!("{what} `{s}` is too large"))),
            (t, _) => Err(err(col, format!("expected {what}, found {t}"))),
        }
    }

    /// An integer at least `min`, as a size parameter.
    fn size_param(&mut self, what: &str, min: u64) -> Result<usize> {
        let (v, col) = self.uint(what)?;
        if v < min {
            return Err(err(col, format!("{what} must be at least {min}, got {v}")));
        }
        usize::try_from(v).map_err(|_| err(col, format!("{what} {v} is too large")))
    }

    fn literal(&mut self) -> Result<Literal> {
        let col = self.col();
        match self.peek() {
            Tok::Hash => {
                self.bump();
                let (v, c) = self.uint("element index")?;
                usize::try_from(v)
                    .map(Literal::Index)
                    .map_err(|_| err(c, "element index too large"))
            }
            Tok::Minus => {
                self.bump();
                let (v, c) = self.uint("integer")?;
                i64::try_from(v)
                    .map(|v| Literal::Int(-v))
                    .map_err(|_| err(c, "integer literal out of range"))
            }
            Tok::Int(_) => {
                let (v, c) = self.uint("integer")?;
                i64::try_from(v)
                    .map(Literal::Int)
                    .map_err(|_| err(c, "integer literal out of range"))
            }
            t => Err(err(col, format!("expected an element literal, found {t}"))),
        }
    }

    fn ring(&mut self) -> Result<RingExpr> {
        let mut parts = vec![self.factor()?];
        while *self.peek() == Tok::Times {
            self.bump();
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            RingExpr::Product(parts)
        })
    }

    fn factor(&mut self) -> Result<RingExpr> {
        let col = self.col();
        let name = match self.bump() {
            (Tok::LParen, _) => {
                let inner = self.ring()?;
                self.expect(Tok::RParen)?;
                return Ok(inner);
            }
            (Tok::Ident(s), _) => s.to_ascii_lowercase(),
            (t, _) => return Err(err(col, format!("expected a ring, found {t}"))),
        };
        let unary = |p: &mut Parser, build: fn(usize, Box<RingExpr>) -> RingExpr| -> Result<RingExpr> {
            let n = p.size_param("dimension", 1)?;
            p.expect(Tok::LParen)?;
            let base = p.ring()?;
            p.expect(Tok::RParen)?;
            Ok(build(n, Box::new(base)))
        };
        match name.as_str() {
            "z" => Ok(RingExpr::Zmod(self.size_param("modulus", 1)?)),
            "gf" => {
                self.expect(Tok::LParen)?;
                let (p, pcol) = self.uint("characteristic")?;
                if !crate::ring::is_prime(p) {
                    return Err(err(pcol, format!("{p} is not prime")));
                }
                self.expect(Tok::Comma)?;
                let (k, kcol) = self.uint("degree")?;
                if k == 0 || k > u32::MAX as u64 {
                    return Err(err(kcol, format!("degree must be positive, got {k}")));
                }
                self.expect(Tok::RParen)?;
                Ok(RingExpr::Gf(p, k as u32))
            }
            "m" => unary(self, RingExpr::Matrix),
            "t" => unary(self, RingExpr::Upper),
            "s" => unary(self, RingExpr::EqualDiag),
            "tskew" => {
                let n = self.size_param("dimension", 1)?;
                self.expect(Tok::LParen)?;
                let base = self.ring()?;
                self.expect(Tok::Comma)?;
                let acol = self.col();
                let alpha = match self.bump() {
                    (Tok::Ident(a), _) => match a.to_ascii_lowercase().as_str() {
                        "id" | "identity" => Alpha::Identity,
                        "frobenius" => Alpha::Frobenius,
                        _ => return Err(err(acol, format!("unknown endomorphism `{a}`"))),
                    },
                    (t, _) => return Err(err(acol, format!("expected an endomorphism name, found {t}"))),
                };
                self.expect(Tok::RParen)?;
                Ok(RingExpr::Skew(n, Box::new(base), alpha))
            }
            "k" => {
                self.expect(Tok::LParen)?;
                let base = self.ring()?;
                self.expect(Tok::Comma)?;
                let s = self.literal()?;
                self.expect(Tok::RParen)?;
                Ok(RingExpr::Ks(Box::new(base), s))
            }
            "mf" => {
                let n = self.size_param("dimension", 1)?;
                self.expect(Tok::LParen)?;
                let base = self.ring()?;
                self.expect(Tok::Comma)?;
                let s = self.literal()?;
                self.expect(Tok::RParen)?;
                Ok(RingExpr::Mns(n, Box::new(base), s))
            }
            "te" => {
                self.expect(Tok::LParen)?;
                let base = self.ring()?;
                self.expect(Tok::RParen)?;
                Ok(RingExpr::TrivialExt(Box::new(base)))
            }
            "gr" => {
                self.expect(Tok::LParen)?;
                let base = self.ring()?;
                self.expect(Tok::Comma)?;
                let g = self.group()?;
                self.expect(Tok::RParen)?;
                Ok(RingExpr::GroupRing(Box::new(base), g))
            }
            "q" => {
                self.expect(Tok::LParen)?;
                let base = self.ring()?;
                self.expect(Tok::Comma)?;
                self.expect(Tok::LBracket)?;
                let mut gens = Vec::new();
                if *self.peek() != Tok::RBracket {
                    gens.push(self.literal()?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        gens.push(self.literal()?);
                    }
                }
                self.expect(Tok::RBracket)?;
                self.expect(Tok::RParen)?;
                Ok(RingExpr::Quotient(Box::new(base), gens))
            }
            _ => Err(err(col, format!("unknown ring constructor `{name}`"))),
        }
    }

    fn group(&mut self) -> Result<GroupExpr> {
        let mut parts = vec![self.group_factor()?];
        while *self.peek() == Tok::Times {
            self.bump();
            parts.push(self.group_factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            GroupExpr::Product(parts)
        })
    }

    fn group_factor(&mut self) -> Result<GroupExpr> {
        let col = self.col();
        let name = match self.bump() {
            (Tok::LParen, _) => {
                let inner = self.group()?;
                self.expect(Tok::RParen)?;
                return Ok(inner);
            }
            (Tok::Ident(s), _) => s.to_ascii_lowercase(),
            (t, _) => return Err(err(col, format!("expected a group, found {t}"))),
        };
        match name.as_str() {
            "c" => Ok(GroupExpr::Cyclic(self.size_param("order", 1)?)),
            "d" => Ok(GroupExpr::Dihedral(self.size_param("degree", 1)?)),
            "q" | "s" => {
                let (n, ncol) = self.uint("order")?;
                match (name.as_str(), n) {
                    ("q", 8) => Ok(GroupExpr::Quaternion8),
                    ("s", 3) => Ok(GroupExpr::Symmetric3),
                    _ => Err(err(ncol, format!("only Q8 and S3 are available, got {}{n}", name.to_uppercase()))),
                }
            }
            _ => Err(err(col, format!("unknown group constructor `{name}`"))),
        }
    }
}

pub fn parse(text: &str) -> Result<RingExpr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let expr = p.ring()?;
    if *p.peek() != Tok::End {
        return Err(err(p.col(), format!("unexpected {} after expression", p.peek())));
    }
    Ok(expr)
}

pub fn parse_group(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let g = p.group()?;
    if *p.peek() != Tok::End {
        return Err(err(p.col(), format!("unexpected {} after group", p.peek())));
    }
    Ok(g)
}

impl std::str::FromStr for RingExpr {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

// ---- construction ----

/// A constructed ring, with its group-ring view when the outermost
/// constructor is `GR`.
#[derive(Clone, Debug)]
pub struct Built {
    pub ring: Arc<FiniteRing>,
    pub group_ring: Option<GroupRing>,
}

impl GroupExpr {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupExpr::Cyclic(n) => make_cyclic(*n),
            GroupExpr::Dihedral(n) => make_dihedral(*n),
            GroupExpr::Quaternion8 => make_quaternion8(),
            GroupExpr::Symmetric3 => make_symmetric3(),
            GroupExpr::Product(parts) => {
                let mut it = parts.iter();
                let mut g = it.next().expect("nonempty product").build()?;
                for p in it {
                    g = make_group_product(&g, &p.build()?)?;
                }
                Ok(g)
            }
        }
    }
}

impl RingExpr {
    pub fn build(&self) -> Result<Built> {
        if let RingExpr::GroupRing(base, g) = self {
            let gr = group_ring(&base.build_ring()?, &g.build()?)?;
            return Ok(Built {
                ring: gr.ring().clone(),
                group_ring: Some(gr),
            });
        }
        let ring = self.build_ring()?;
        Ok(Built {
            ring,
            group_ring: None,
        })
    }

    /// Builds the ring, labelled with the canonical expression text.
    pub fn build_ring(&self) -> Result<Arc<FiniteRing>> {
        let ring = match self {
            RingExpr::Zmod(n) => make_zmod(*n)?,
            RingExpr::Gf(p, k) => make_gf(*p, *k)?,
            RingExpr::Product(parts) => {
                let rings = parts.iter().map(|p| p.build_ring()).collect::<Result<Vec<_>>>()?;
                direct_product(&rings)?
            }
            RingExpr::Matrix(n, b) => matrix_ring(&b.build_ring()?, *n)?,
            RingExpr::Upper(n, b) => upper_triangular(&b.build_ring()?, *n)?,
            RingExpr::EqualDiag(n, b) => equal_diag_triangular(&b.build_ring()?, *n)?,
            RingExpr::Skew(n, b, a) => {
                let base = b.build_ring()?;
                let alpha = match a {
                    Alpha::Identity => RingEndomorphism::identity(&base),
                    Alpha::Frobenius => RingEndomorphism::frobenius(&base)?,
                };
                skew_triangular(&base, &alpha, *n)?
            }
            RingExpr::Ks(b, s) => {
                let base = b.build_ring()?;
                formal_matrix_ks(&base, s.resolve(&base)?)?
            }
            RingExpr::Mns(n, b, s) => {
                let base = b.build_ring()?;
                formal_matrix_ns(&base, *n, s.resolve(&base)?)?
            }
            RingExpr::TrivialExt(b) => trivial_extension(&b.build_ring()?)?,
            RingExpr::GroupRing(b, g) => group_ring(&b.build_ring()?, &g.build()?)?.ring().clone(),
            RingExpr::Quotient(b, gens) => {
                let base = b.build_ring()?;
                let gens = gens.iter().map(|g| g.resolve(&base)).collect::<Result<Vec<_>>>()?;
                quotient(&base, &ideal_closure(&base, &gens))?
            }
        };
        Ok(relabel(ring, self.to_string()))
    }
}

fn relabel(ring: Arc<FiniteRing>, label: String) -> Arc<FiniteRing> {
    if ring.label() == label {
        return ring;
    }
    match Arc::try_unwrap(ring) {
        Ok(r) => r.with_label(label).into_arc(),
        Err(shared) => shared,
    }
}

/// Parses and builds in one step.
pub fn build(text: &str) -> Result<Built> {
    parse(text)?.build()
}

/// Reads an element of `r`: a bare index (`3`, `#3`), a negative integer
/// taken as its image `-k·1`, or a component list `[1, 0, 0, 1]`.
pub fn parse_element(r: &FiniteRing, text: &str) -> Result<Elem> {
    let t = text.trim();
    let bad = |message: String| RingError::Parse { column: 1, message };
    if let Some(inner) = t.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| bad(format!("unterminated component list `{t}`")))?;
        let comps = inner
            .split(',')
            .map(|c| c.trim().parse::<usize>().map_err(|_| bad(format!("bad component `{}`", c.trim()))))
            .collect::<Result<Vec<_>>>()?;
        return r.from_components(&comps);
    }
    if t.starts_with('-') {
        let k: i64 = t.parse().map_err(|_| bad(format!("bad integer `{t}`")))?;
        return Ok(r.int(k));
    }
    let idx: usize = t
        .strip_prefix('#')
        .unwrap_or(t)
        .parse()
        .map_err(|_| bad(format!("bad element `{t}`")))?;
    r.check_index(idx)?;
    Ok(idx)
}
