//! A small expression reader for values written the way they are printed:
//! `(2*p^2-p-1)/p^6*sym[1,1,1] + x0^2*sym[2,1,0]/p^4`,
//! `-p^2*(T_2(p^2) + (p^2-p+1)*[p]_3)`, `1 - p^15*v^6`.
//!
//! Operators are `+ - * ^` and `/`, where the divisor must be a Laurent
//! polynomial in `p` dividing the numerator exactly.

use num_bigint::BigInt;

use crate::algebra::{Monomial, PrimeLaurent, XPoly};
use crate::error::{Error, Result};
use crate::series::hecke::{Generator, HeckeExpr};
use crate::symmetric::{msym, Signature};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Atom {
    P,
    V,
    Var(usize),
    Sym(Vec<u32>),
    Gen(Generator),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Int(BigInt),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Some(s)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat("*") {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat("/") {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat("^") {
            let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e = e.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        const GENERATORS: [(&str, Generator); 5] = [
            ("T(p)", Generator::Tp),
            ("T_1(p^2)", Generator::T1),
            ("T_2(p^2)", Generator::T2),
            ("T_3(p^2)", Generator::Bracket),
            ("[p]_3", Generator::Bracket),
        ];
        self.skip_ws();
        for (lit, g) in GENERATORS {
            if self.eat(lit) {
                return Ok(Expr::Atom(Atom::Gen(g)));
            }
        }
        if self.eat("(") {
            let e = self.expr()?;
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            return Ok(e);
        }
        if self.eat("sym[") {
            let mut parts = Vec::new();
            loop {
                let d = self.digits().ok_or_else(|| self.err("expected signature part"))?;
                parts.push(d.parse().map_err(|_| self.err("part too large"))?);
                if self.eat("]") {
                    return Ok(Expr::Atom(Atom::Sym(parts)));
                }
                if !self.eat(",") {
                    return Err(self.err("expected ',' or ']'"));
                }
            }
        }
        if self.eat("x") {
            let d = self.digits().ok_or_else(|| self.err("expected variable index"))?;
            let i = d.parse().map_err(|_| self.err("variable index too large"))?;
            return Ok(Expr::Atom(Atom::Var(i)));
        }
        if self.eat("p") {
            return Ok(Expr::Atom(Atom::P));
        }
        if self.eat("v") {
            return Ok(Expr::Atom(Atom::V));
        }
        if let Some(d) = self.digits() {
            return Ok(Expr::Int(d.parse().expect("decimal digits")));
        }
        Err(self.err("unexpected input"))
    }
}

fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// A ring the reader can evaluate into.
trait Target {
    type Value: Clone;
    fn constant(&self, c: PrimeLaurent) -> Self::Value;
    fn atom(&self, a: &Atom) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn div_scalar(&self, a: &Self::Value, c: &PrimeLaurent) -> Result<Self::Value>;
    fn as_scalar(&self, a: &Self::Value) -> Option<PrimeLaurent>;
}

fn eval<T: Target>(t: &T, e: &Expr) -> Result<T::Value> {
    Ok(match e {
        Expr::Int(k) => t.constant(PrimeLaurent::constant(num_rational::BigRational::from_integer(k.clone()))),
        Expr::Atom(Atom::P) => t.constant(PrimeLaurent::p()),
        Expr::Atom(a) => t.atom(a)?,
        Expr::Neg(a) => t.sub(&t.constant(PrimeLaurent::zero()), &eval(t, a)?),
        Expr::Add(a, b) => t.add(&eval(t, a)?, &eval(t, b)?),
        Expr::Sub(a, b) => t.sub(&eval(t, a)?, &eval(t, b)?),
        Expr::Mul(a, b) => t.mul(&eval(t, a)?, &eval(t, b)?),
        Expr::Div(a, b) => {
            let d = t
                .as_scalar(&eval(t, b)?)
                .ok_or_else(|| Error::Parse("divisor must be a Laurent polynomial in p".into()))?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            t.div_scalar(&eval(t, a)?, &d)?
        }
        Expr::Pow(a, k) => {
            let base = eval(t, a)?;
            (0..*k).fold(t.constant(PrimeLaurent::one()), |acc, _| t.mul(&acc, &base))
        }
    })
}

fn unsupported(a: &Atom, what: &str) -> Error {
    Error::Parse(format!("{a:?} is not allowed in {what}"))
}

struct LaurentTarget;

impl Target for LaurentTarget {
    type Value = PrimeLaurent;
    fn constant(&self, c: PrimeLaurent) -> PrimeLaurent {
        c
    }
    fn atom(&self, a: &Atom) -> Result<PrimeLaurent> {
        Err(unsupported(a, "a Laurent polynomial"))
    }
    fn add(&self, a: &PrimeLaurent, b: &PrimeLaurent) -> PrimeLaurent {
        a + b
    }
    fn sub(&self, a: &PrimeLaurent, b: &PrimeLaurent) -> PrimeLaurent {
        a - b
    }
    fn mul(&self, a: &PrimeLaurent, b: &PrimeLaurent) -> PrimeLaurent {
        a * b
    }
    fn div_scalar(&self, a: &PrimeLaurent, c: &PrimeLaurent) -> Result<PrimeLaurent> {
        a.div_exact(c)
    }
    fn as_scalar(&self, a: &PrimeLaurent) -> Option<PrimeLaurent> {
        Some(a.clone())
    }
}

/// Polynomials in `x0..xn`, or in `v` alone when `v_only` is set.
struct PolyTarget {
    n: usize,
    v_only: bool,
}

impl PolyTarget {
    fn nvars(&self) -> usize {
        if self.v_only {
            1
        } else {
            self.n + 1
        }
    }
}

impl Target for PolyTarget {
    type Value = XPoly;
    fn constant(&self, c: PrimeLaurent) -> XPoly {
        XPoly::constant(self.nvars(), c)
    }
    fn atom(&self, a: &Atom) -> Result<XPoly> {
        match (a, self.v_only) {
            (Atom::V, true) => Ok(XPoly::var(1, 0)),
            (Atom::Var(i), false) if *i <= self.n => Ok(XPoly::var(self.n + 1, *i)),
            (Atom::Sym(parts), false) => msym(&Signature::new(parts.clone())?, self.n),
            _ => Err(unsupported(a, if self.v_only { "a polynomial in v" } else { "a polynomial in x" })),
        }
    }
    fn add(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a + b
    }
    fn sub(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a - b
    }
    fn mul(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a * b
    }
    fn div_scalar(&self, a: &XPoly, c: &PrimeLaurent) -> Result<XPoly> {
        let terms = a
            .terms()
            .map(|(m, x)| Ok((m.clone(), x.div_exact(c)?)))
            .collect::<Result<Vec<(Monomial, PrimeLaurent)>>>()?;
        Ok(XPoly::from_terms(a.nvars(), terms))
    }
    fn as_scalar(&self, a: &XPoly) -> Option<PrimeLaurent> {
        a.as_constant()
    }
}

struct HeckeTarget;

impl Target for HeckeTarget {
    type Value = HeckeExpr;
    fn constant(&self, c: PrimeLaurent) -> HeckeExpr {
        HeckeExpr::constant(c)
    }
    fn atom(&self, a: &Atom) -> Result<HeckeExpr> {
        match a {
            Atom::Gen(g) => Ok(HeckeExpr::generator(*g)),
            _ => Err(unsupported(a, "a Hecke expression")),
        }
    }
    fn add(&self, a: &HeckeExpr, b: &HeckeExpr) -> HeckeExpr {
        a + b
    }
    fn sub(&self, a: &HeckeExpr, b: &HeckeExpr) -> HeckeExpr {
        a - b
    }
    fn mul(&self, a: &HeckeExpr, b: &HeckeExpr) -> HeckeExpr {
        a * b
    }
    fn div_scalar(&self, a: &HeckeExpr, c: &PrimeLaurent) -> Result<HeckeExpr> {
        let terms = a.terms().map(|(m, x)| Ok((*m, x.div_exact(c)?))).collect::<Result<Vec<_>>>()?;
        Ok(HeckeExpr::from_terms(terms))
    }
    fn as_scalar(&self, a: &HeckeExpr) -> Option<PrimeLaurent> {
        match a.terms().collect::<Vec<_>>().as_slice() {
            [] => Some(PrimeLaurent::zero()),
            [(m, c)] if m.degree() == 0 => Some((*c).clone()),
            _ => None,
        }
    }
}

/// A Laurent polynomial in `p`, e.g. `-p^6*(p^2+2*p-1)`.
pub fn parse_laurent(src: &str) -> Result<PrimeLaurent> {
    eval(&LaurentTarget, &parse_expr(src)?)
}

/// A polynomial in `x0..xn`; `sym[..]` must have `n` parts.
pub fn parse_xpoly(src: &str, n: usize) -> Result<XPoly> {
    eval(&PolyTarget { n, v_only: false }, &parse_expr(src)?)
}

/// A polynomial in the Hecke generators.
pub fn parse_hecke(src: &str) -> Result<HeckeExpr> {
    eval(&HeckeTarget, &parse_expr(src)?)
}

/// A polynomial in `v` with coefficients in `Q[p, 1/p]`, as its coefficient
/// list `c_0, c_1, ..` up to the degree.
pub fn parse_vpoly(src: &str) -> Result<Vec<PrimeLaurent>> {
    let poly = eval(&PolyTarget { n: 0, v_only: true }, &parse_expr(src)?)?;
    let degree = poly.terms().map(|(m, _)| m.exps()[0]).max().unwrap_or(0) as usize;
    let mut out = vec![PrimeLaurent::zero(); degree + 1];
    for (m, c) in poly.terms() {
        out[m.exps()[0] as usize] = c.clone();
    }
    Ok(out)
}
