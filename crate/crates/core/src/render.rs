//! Text, LaTeX and JSON renderings in the `sym[i,j,k]` notation.

use serde_json::{json, Value};

use crate::algebra::json::{laurent_to_json, vseries_to_json, xpoly_to_json};
use crate::algebra::{PrimeLaurent, VSeries, XPoly};
use crate::series::hecke::{Generator, HeckeExpr};
use crate::symmetric::{to_msym, SymDecomposition};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Style {
    Text,
    Latex,
}

/// Splits `c` into a sign and `|c|`, where the sign is that of the highest power.
fn split_sign(c: &PrimeLaurent) -> (bool, PrimeLaurent) {
    if c.leading_is_negative() {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn poly_latex(c: &PrimeLaurent) -> String {
    let mut out = String::new();
    for (i, (e, q)) in c.terms().rev().enumerate() {
        let neg = q < &num_rational::BigRational::from_integer(0.into());
        let mag = if neg { -q.clone() } else { q.clone() };
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let one = mag == num_rational::BigRational::from_integer(1.into());
        let coef = if mag.is_integer() {
            mag.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        match e {
            0 => out.push_str(&coef),
            _ => {
                if !one {
                    out.push_str(&coef);
                }
                out.push('p');
                if e != 1 {
                    out.push_str(&format!("^{{{e}}}"));
                }
            }
        }
    }
    out
}

/// A positive coefficient written as `num/p^k`; the flag is set when the
/// text is a sum and needs brackets before a product.
fn magnitude_text(c: &PrimeLaurent, style: Style) -> (String, bool) {
    let low = c.min_exp().unwrap_or(0);
    let (num, k) = if low < 0 { (c.shift(-low), -low) } else { (c.clone(), 0) };
    let compound = num.len() > 1;
    match style {
        Style::Text => {
            if k == 0 {
                return (num.to_string(), compound);
            }
            let num_text = if compound { format!("({num})") } else { num.to_string() };
            let den = if k == 1 { "p".to_string() } else { format!("p^{k}") };
            if !compound && num.as_constant().is_some_and(|q| !q.is_integer()) {
                // rational constant over a power: fold into one fraction
                let q = num.as_constant().expect("constant");
                return (format!("{}/({}*{den})", q.numer(), q.denom()), false);
            }
            (format!("{num_text}/{den}"), false)
        }
        Style::Latex => {
            let num_text = poly_latex(&num);
            if k == 0 {
                return (num_text, compound);
            }
            let den = if k == 1 { "p".to_string() } else { format!("p^{{{k}}}") };
            (format!("\\frac{{{num_text}}}{{{den}}}"), false)
        }
    }
}

/// Joins `coefficient * factors` terms with signs.
fn join_terms(terms: Vec<(PrimeLaurent, Vec<String>)>, style: Style) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let (times, sep) = match style {
        Style::Text => (" * ", "*"),
        Style::Latex => (" ", " "),
    };
    let mut out = String::new();
    for (i, (c, factors)) in terms.into_iter().enumerate() {
        let (neg, mag) = split_sign(&c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = factors.join(sep);
        if body.is_empty() {
            let (text, compound) = magnitude_text(&mag, style);
            if compound && (neg || i > 0) {
                out.push_str(&format!("({text})"));
            } else {
                out.push_str(&text);
            }
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            let (text, compound) = magnitude_text(&mag, style);
            if compound {
                match style {
                    Style::Text => out.push_str(&format!("({text})")),
                    Style::Latex => out.push_str(&format!("\\left({text}\\right)")),
                }
            } else {
                out.push_str(&text);
            }
            out.push_str(times);
            out.push_str(&body);
        }
    }
    out
}

fn power(base: &str, e: u32, style: Style) -> String {
    match (e, style) {
        (1, _) => base.to_string(),
        (_, Style::Text) => format!("{base}^{e}"),
        (_, Style::Latex) => format!("{base}^{{{e}}}"),
    }
}

pub fn sym_decomposition(d: &SymDecomposition, style: Style) -> String {
    let terms = d
        .terms()
        .map(|(w, sig, c)| {
            let mut factors = Vec::new();
            if w > 0 {
                factors.push(power(if style == Style::Text { "x0" } else { "x_0" }, w, style));
            }
            if !sig.is_zero() {
                let idx = sig.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                factors.push(match style {
                    Style::Text => format!("sym[{idx}]"),
                    Style::Latex => format!("\\mathit{{sym}}_{{{idx}}}"),
                });
            }
            (c.clone(), factors)
        })
        .collect();
    join_terms(terms, style)
}

/// Monomial-symmetric rendering when symmetric, plain expansion otherwise.
pub fn xpoly(a: &XPoly, style: Style) -> String {
    match to_msym(a) {
        Ok(d) => sym_decomposition(&d, style),
        Err(_) => match style {
            Style::Text => a.to_string(),
            Style::Latex => xpoly_latex_expanded(a),
        },
    }
}

fn xpoly_latex_expanded(a: &XPoly) -> String {
    let terms = a
        .terms()
        .map(|(m, c)| {
            let factors = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| power(&format!("x_{i}"), e, Style::Latex))
                .collect();
            (c.clone(), factors)
        })
        .collect();
    join_terms(terms, Style::Latex)
}

pub fn laurent(c: &PrimeLaurent, style: Style) -> String {
    join_terms(vec![(c.clone(), Vec::new())], style)
}

pub fn hecke(e: &HeckeExpr, style: Style) -> String {
    let terms = e
        .terms()
        .map(|(m, c)| {
            let factors = Generator::ALL
                .iter()
                .filter(|g| m.0[g.index()] > 0)
                .map(|&g| {
                    let sym = match style {
                        Style::Text => g.symbol(),
                        Style::Latex => g.latex(),
                    };
                    power(sym, m.0[g.index()], style)
                })
                .collect();
            (c.clone(), factors)
        })
        .collect();
    join_terms(terms, style)
}

pub fn hecke_text(e: &HeckeExpr) -> String {
    hecke(e, Style::Text)
}

/// One line per nonzero coefficient: `v^k: ...`.
pub fn vseries(s: &VSeries, style: Style) -> String {
    let lines: Vec<String> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match style {
            Style::Text => format!("v^{k}: {}", xpoly(c, style)),
            Style::Latex => format!("v^{{{k}}} &: {} \\\\", xpoly(c, style)),
        })
        .collect();
    lines.join("\n")
}

pub fn xpoly_json(a: &XPoly) -> Value {
    xpoly_to_json(a)
}

pub fn vseries_json(s: &VSeries) -> Value {
    vseries_to_json(s)
}

pub fn laurent_json(c: &PrimeLaurent) -> Value {
    json!(laurent_to_json(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spherical::{omega_hl, sp_image_tp};
    use crate::symmetric::Signature;

    fn sig(p: &[u32]) -> Signature {
        Signature::new(p.to_vec()).unwrap()
    }

    #[test]
    fn omega_text() {
        let w = omega_hl(&sig(&[2, 1, 0]), 3).unwrap();
        assert_eq!(xpoly(&w, Style::Text), "(2*p^2-p-1)/p^6 * sym[1,1,1] + 1/p^4 * sym[2,1,0]");
        assert_eq!(xpoly(&XPoly::one(4), Style::Text), "1");
        assert_eq!(xpoly(&XPoly::zero(4), Style::Text), "0");
    }

    #[test]
    fn tp_text_and_latex() {
        let t = sp_image_tp(3);
        assert_eq!(xpoly(&t, Style::Text), "x0 + x0*sym[1,0,0] + x0*sym[1,1,0] + x0*sym[1,1,1]");
        assert_eq!(
            xpoly(&t, Style::Latex),
            r"x_0 + x_0 \mathit{sym}_{1,0,0} + x_0 \mathit{sym}_{1,1,0} + x_0 \mathit{sym}_{1,1,1}"
        );
    }

    #[test]
    fn negative_and_compound_coefficients() {
        let c = PrimeLaurent::from_int_coeffs(&[0, -1, 0, -1]);
        assert_eq!(laurent(&c, Style::Text), "-(p^3+p)");
        assert_eq!(laurent(&PrimeLaurent::p_pow(-3), Style::Text), "1/p^3");
        assert_eq!(laurent(&PrimeLaurent::p_pow(-3), Style::Latex), r"\frac{1}{p^{3}}");
        let e = HeckeExpr::generator(Generator::T2).scale(&-PrimeLaurent::p_pow(2));
        assert_eq!(hecke(&e, Style::Text), "-p^2 * T_2(p^2)");
        let e = &HeckeExpr::generator(Generator::Tp).pow(2) - &HeckeExpr::one();
        assert_eq!(hecke(&e, Style::Text), "-1 + T(p)^2");
    }
}
