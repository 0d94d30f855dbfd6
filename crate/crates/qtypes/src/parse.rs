//! Text format for ideals, curves, and hypersurface decompositions.
//!
//! A document is a sequence of statements separated by `;` or newlines,
//! with `#` comments. The first statement declares the variables:
//!
//! ```text
//! vars z1 z2 z3;
//! z1^2 + (1/2)*i*z2;
//! z2^3;
//! ```
//!
//! Plain expression statements make the document an ideal (one generator
//! per statement). A `param t;` statement turns it into a curve document
//! whose expressions are the components in `t`, one per declared variable.
//! Labelled sections `h:`, `f:`, `g:` make it a hypersurface decomposition
//! (`h` takes one expression; `f` and `g` take any number, possibly none).
//! An optional `base c1, c2, ...` statement moves the base point off the
//! origin.
//!
//! Expressions use `+ - * ^` and parentheses, arbitrary-precision integer
//! literals, rational literals `p/q`, and the imaginary unit `i`. Division
//! is only allowed by nonzero constants, and exponents must be literal
//! nonnegative integers; anything else is reported as a non-polynomial
//! construct with its line and column.

use crate::contact::{CurveGerm, HypersurfaceGerm};
use crate::ideal::IdealPresentation;
use crate::poly::PolyC;
use crate::scalar::GaussianRational;
use crate::series::UniPoly;
use num::rational::BigRational;
use num::BigInt;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

// ---------------------------------------------------------------------------
// lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Colon,
    Comma,
    /// statement separator: `;` or newline
    Sep,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut push = |tok: Tok| {
            out.push(Token {
                tok,
                line: tline,
                col: tcol,
            })
        };
        match c {
            '\n' => {
                push(Tok::Sep);
                chars.next();
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            ';' => {
                push(Tok::Sep);
                chars.next();
                col += 1;
            }
            '+' => {
                push(Tok::Plus);
                chars.next();
                col += 1;
            }
            '-' => {
                push(Tok::Minus);
                chars.next();
                col += 1;
            }
            '*' => {
                push(Tok::Star);
                chars.next();
                col += 1;
            }
            '/' => {
                push(Tok::Slash);
                chars.next();
                col += 1;
            }
            '^' => {
                push(Tok::Caret);
                chars.next();
                col += 1;
            }
            '(' => {
                push(Tok::LParen);
                chars.next();
                col += 1;
            }
            ')' => {
                push(Tok::RParen);
                chars.next();
                col += 1;
            }
            ':' => {
                push(Tok::Colon);
                chars.next();
                col += 1;
            }
            ',' => {
                push(Tok::Comma);
                chars.next();
                col += 1;
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                push(Tok::Int(digits.parse().expect("digits parse as BigInt")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                push(Tok::Ident(ident));
            }
            other => {
                return err(line, col, format!("unexpected character {:?}", other));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// expression parser

struct ExprParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    vars: &'a [String],
    end: (usize, usize),
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.col))
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn parse_expr(&mut self) -> Result<PolyC, ParseError> {
        let mut acc = self.parse_term()?;
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.parse_term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<PolyC, ParseError> {
        let mut acc = self.parse_unary()?;
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.parse_unary()?);
                }
                Tok::Slash => {
                    let (line, col) = (t.line, t.col);
                    self.bump();
                    let rhs = self.parse_unary()?;
                    if rhs.total_degree().unwrap_or(0) > 0 {
                        return err(
                            line,
                            col,
                            "non-polynomial construct: division by a non-constant",
                        );
                    }
                    let c = rhs.constant_term();
                    let Some(inv) = c.inverse() else {
                        return err(line, col, "division by zero");
                    };
                    acc = acc.scale(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_unary(&mut self) -> Result<PolyC, ParseError> {
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.parse_unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.parse_unary()
            }
            _ => self.parse_power(),
        }
    }

    fn parse_power(&mut self) -> Result<PolyC, ParseError> {
        let base = self.parse_atom()?;
        if let Some(t) = self.peek() {
            if t.tok == Tok::Caret {
                let (line, col) = (t.line, t.col);
                self.bump();
                let Some(next) = self.bump() else {
                    return err(line, col, "missing exponent after '^'");
                };
                let Tok::Int(e) = &next.tok else {
                    return err(
                        next.line,
                        next.col,
                        "non-polynomial construct: exponent must be a literal nonnegative integer",
                    );
                };
                let e: u32 = e.try_into().map_err(|_| ParseError {
                    line,
                    col,
                    message: "exponent too large".into(),
                })?;
                return Ok(base.pow(e));
            }
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<PolyC, ParseError> {
        let (line, col) = self.here();
        let Some(t) = self.bump() else {
            return err(line, col, "unexpected end of expression");
        };
        match &t.tok {
            Tok::Int(n) => Ok(PolyC::constant(
                self.nvars(),
                GaussianRational::from_rational(BigRational::from_integer(n.clone())),
            )),
            Tok::Ident(name) if name == "i" => {
                Ok(PolyC::constant(self.nvars(), GaussianRational::i()))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| v == name) {
                Some(j) => Ok(PolyC::var(self.nvars(), j)),
                None => err(
                    t.line,
                    t.col,
                    format!("undeclared identifier {}", name),
                ),
            },
            Tok::LParen => {
                let inner = self.parse_expr()?;
                let (line, col) = self.here();
                match self.bump() {
                    Some(tok) if tok.tok == Tok::RParen => Ok(inner),
                    _ => err(line, col, "expected ')'"),
                }
            }
            other => err(t.line, t.col, format!("unexpected token {:?}", other)),
        }
    }
}

/// Parse one expression over the given variable names.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<PolyC, ParseError> {
    let tokens = lex(text)?;
    let tokens: Vec<Token> = tokens.into_iter().filter(|t| t.tok != Tok::Sep).collect();
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let mut p = ExprParser {
        tokens: &tokens,
        pos: 0,
        vars: &vars,
        end: (1, text.len() + 1),
    };
    let e = p.parse_expr()?;
    if let Some(t) = p.peek() {
        return err(t.line, t.col, "trailing input after expression");
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// documents

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DocBody {
    Ideal { generators: Vec<PolyC> },
    Curve { components: Vec<UniPoly> },
    Hypersurface {
        h: PolyC,
        f: Vec<PolyC>,
        g: Vec<PolyC>,
    },
}

/// A parsed input file: declared variables, optional base point, and the
/// kind-specific body (inferred from the statements present).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceDocument {
    pub variables: Vec<String>,
    pub base_point: Vec<GaussianRational>,
    pub body: DocBody,
}

impl SourceDocument {
    pub fn kind(&self) -> &'static str {
        match self.body {
            DocBody::Ideal { .. } => "ideal",
            DocBody::Curve { .. } => "curve",
            DocBody::Hypersurface { .. } => "hypersurface",
        }
    }

    pub fn to_ideal(&self) -> Option<IdealPresentation> {
        match &self.body {
            DocBody::Ideal { generators } => IdealPresentation::new(
                self.variables.len(),
                generators.clone(),
                self.base_point.clone(),
            )
            .ok(),
            _ => None,
        }
    }

    pub fn to_curve(&self, truncation: usize) -> Option<CurveGerm> {
        match &self.body {
            DocBody::Curve { components } => CurveGerm::from_polynomials(
                components.clone(),
                self.base_point.clone(),
                truncation,
            )
            .ok(),
            _ => None,
        }
    }

    pub fn to_hypersurface(&self) -> Option<HypersurfaceGerm> {
        match &self.body {
            DocBody::Hypersurface { h, f, g } => HypersurfaceGerm::new(
                self.variables.len(),
                h.clone(),
                f.clone(),
                g.clone(),
                self.base_point.clone(),
            )
            .ok(),
            _ => None,
        }
    }
}

fn split_statements(tokens: &[Token]) -> Vec<&[Token]> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, t) in tokens.iter().enumerate() {
        if t.tok == Tok::Sep {
            if i > start {
                out.push(&tokens[start..i]);
            }
            start = i + 1;
        }
    }
    if start < tokens.len() {
        out.push(&tokens[start..]);
    }
    out
}

/// Parse a whole document. The kind is inferred: a `param` statement makes
/// it a curve, labelled `h:`/`f:`/`g:` sections make it a hypersurface,
/// plain expressions make it an ideal.
pub fn parse_document(text: &str) -> Result<SourceDocument, ParseError> {
    let tokens = lex(text)?;
    let statements = split_statements(&tokens);
    if statements.is_empty() {
        return err(1, 1, "empty document");
    }

    // vars declaration
    let first = statements[0];
    let vars: Vec<String> = match &first[0].tok {
        Tok::Ident(kw) if kw == "vars" => {
            let mut names = Vec::new();
            for t in &first[1..] {
                match &t.tok {
                    Tok::Ident(name) if name != "i" && name != "t" => {
                        if names.contains(name) {
                            return err(t.line, t.col, format!("duplicate variable {}", name));
                        }
                        names.push(name.clone());
                    }
                    Tok::Ident(name) => {
                        return err(
                            t.line,
                            t.col,
                            format!("{} is reserved and cannot be a variable", name),
                        );
                    }
                    _ => return err(t.line, t.col, "expected a variable name"),
                }
            }
            if names.is_empty() {
                return err(first[0].line, first[0].col, "vars declares no variables");
            }
            names
        }
        _ => {
            return err(
                first[0].line,
                first[0].col,
                "document must start with a vars declaration",
            )
        }
    };
    let nvars = vars.len();

    let mut param: Option<String> = None;
    let mut base_point: Option<Vec<GaussianRational>> = None;
    let mut plain_exprs: Vec<&[Token]> = Vec::new();
    let mut sections: Vec<(String, Vec<&[Token]>)> = Vec::new();
    let mut current_section: Option<usize> = None;

    for stmt in &statements[1..] {
        match &stmt[0].tok {
            Tok::Ident(kw) if kw == "param" && stmt.len() >= 2 => {
                if let Tok::Ident(p) = &stmt[1].tok {
                    param = Some(p.clone());
                } else {
                    return err(stmt[1].line, stmt[1].col, "expected parameter name");
                }
            }
            Tok::Ident(kw) if kw == "base" => {
                let rest = &stmt[1..];
                let mut coords = Vec::new();
                for group in rest.split(|t| t.tok == Tok::Comma) {
                    let empty: Vec<String> = Vec::new();
                    let mut p = ExprParser {
                        tokens: group,
                        pos: 0,
                        vars: &empty,
                        end: (stmt[0].line, stmt[0].col),
                    };
                    let e = p.parse_expr()?;
                    coords.push(e.constant_term());
                }
                base_point = Some(coords);
            }
            Tok::Ident(label)
                if (label == "h" || label == "f" || label == "g")
                    && stmt.len() >= 2
                    && stmt[1].tok == Tok::Colon =>
            {
                sections.push((label.clone(), Vec::new()));
                current_section = Some(sections.len() - 1);
                let rest = &stmt[2..];
                if !rest.is_empty() {
                    sections.last_mut().unwrap().1.push(rest);
                }
            }
            _ => match current_section {
                Some(idx) => sections[idx].1.push(stmt),
                None => plain_exprs.push(stmt),
            },
        }
    }

    let base_point = match base_point {
        None => vec![GaussianRational::zero(); nvars],
        Some(b) => {
            if b.len() != nvars {
                return err(
                    1,
                    1,
                    format!("base point has {} coordinates, expected {}", b.len(), nvars),
                );
            }
            b
        }
    };

    let parse_stmt = |stmt: &[Token], names: &[String]| -> Result<PolyC, ParseError> {
        let mut p = ExprParser {
            tokens: stmt,
            pos: 0,
            vars: names,
            end: (stmt[0].line, stmt[0].col),
        };
        let e = p.parse_expr()?;
        if let Some(t) = p.peek() {
            return err(t.line, t.col, "trailing input after expression");
        }
        Ok(e)
    };

    if let Some(pname) = param {
        if !sections.is_empty() {
            return err(1, 1, "a curve document cannot have h:/f:/g: sections");
        }
        let pvars = vec![pname];
        let comps: Vec<UniPoly> = plain_exprs
            .iter()
            .map(|stmt| {
                let p = parse_stmt(stmt, &pvars)?;
                // univariate PolyC -> dense coefficients
                let deg = p.total_degree().unwrap_or(0) as usize;
                let mut coeffs = vec![GaussianRational::zero(); deg + 1];
                for (e, c) in p.terms() {
                    coeffs[e[0] as usize] = c.clone();
                }
                Ok(UniPoly::from_coeffs(coeffs))
            })
            .collect::<Result<_, ParseError>>()?;
        if comps.len() != nvars {
            return err(
                1,
                1,
                format!(
                    "curve has {} components, expected {} (one per variable)",
                    comps.len(),
                    nvars
                ),
            );
        }
        return Ok(SourceDocument {
            variables: vars,
            base_point,
            body: DocBody::Curve { components: comps },
        });
    }

    if !sections.is_empty() {
        let mut h = PolyC::zero(nvars);
        let mut f = Vec::new();
        let mut g = Vec::new();
        let mut seen_h = false;
        for (label, stmts) in &sections {
            let polys: Vec<PolyC> = stmts
                .iter()
                .map(|s| parse_stmt(s, &vars))
                .collect::<Result<_, ParseError>>()?;
            match label.as_str() {
                "h" => {
                    if seen_h || polys.len() > 1 {
                        return err(1, 1, "section h: takes exactly one expression");
                    }
                    seen_h = true;
                    if let Some(p) = polys.into_iter().next() {
                        h = p;
                    }
                }
                "f" => f.extend(polys),
                "g" => g.extend(polys),
                _ => unreachable!(),
            }
        }
        return Ok(SourceDocument {
            variables: vars,
            base_point,
            body: DocBody::Hypersurface { h, f, g },
        });
    }

    if plain_exprs.is_empty() {
        return err(1, 1, "ideal document has no generators");
    }
    let generators: Vec<PolyC> = plain_exprs
        .iter()
        .map(|s| parse_stmt(s, &vars))
        .collect::<Result<_, ParseError>>()?;
    Ok(SourceDocument {
        variables: vars,
        base_point,
        body: DocBody::Ideal { generators },
    })
}

/// Parse a matrix file: one row per statement, entries separated by commas,
/// each entry a constant expression.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<GaussianRational>>, ParseError> {
    let tokens = lex(text)?;
    let statements = split_statements(&tokens);
    let mut rows = Vec::new();
    for stmt in statements {
        let mut row = Vec::new();
        for group in stmt.split(|t| t.tok == Tok::Comma) {
            if group.is_empty() {
                continue;
            }
            let empty: Vec<String> = Vec::new();
            let mut p = ExprParser {
                tokens: group,
                pos: 0,
                vars: &empty,
                end: (stmt[0].line, stmt[0].col),
            };
            let e = p.parse_expr()?;
            if let Some(t) = p.peek() {
                return err(t.line, t.col, "trailing input in matrix entry");
            }
            row.push(e.constant_term());
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return err(1, 1, "empty matrix");
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return err(1, 1, "matrix rows have unequal lengths");
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_polynomials_with_rational_complex_coefficients() {
        let p = parse_poly("z1^2 + (1/2)*i*z2", &["z1", "z2"]).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&[2, 0]), GaussianRational::one());
        let half_i = GaussianRational::new(
            BigRational::new(BigInt::from(0), BigInt::from(1)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        );
        assert_eq!(p.coeff(&[0, 1]), half_i);
    }

    #[test]
    fn undeclared_identifier_has_position() {
        let e = parse_poly("z1 + w", &["z1"]).unwrap_err();
        assert!(e.message.contains("undeclared identifier w"));
        assert_eq!(e.line, 1);
        assert_eq!(e.col, 6);
    }

    #[test]
    fn non_polynomial_constructs_rejected() {
        let e = parse_poly("z1 / z2", &["z1", "z2"]).unwrap_err();
        assert!(e.message.contains("non-polynomial"));
        let e = parse_poly("z1 ^ z2", &["z1", "z2"]).unwrap_err();
        assert!(e.message.contains("non-polynomial"));
        let e = parse_poly("1/0", &["z1"]).unwrap_err();
        assert!(e.message.contains("division by zero"));
    }

    #[test]
    fn ideal_document() {
        let doc = parse_document("vars z1 z2;\nz2^2 - z1^3;\nz1*z2\n").unwrap();
        assert_eq!(doc.kind(), "ideal");
        assert_eq!(doc.variables, vec!["z1", "z2"]);
        let DocBody::Ideal { generators } = &doc.body else {
            panic!()
        };
        assert_eq!(generators.len(), 2);
        assert!(doc.to_ideal().is_some());
    }

    #[test]
    fn curve_document() {
        let doc = parse_document("vars z1 z2;\nparam t;\nt^2;\nt^3;\n").unwrap();
        assert_eq!(doc.kind(), "curve");
        let c = doc.to_curve(16).unwrap();
        assert_eq!(c.order_index(), 2);
    }

    #[test]
    fn hypersurface_document() {
        let text = "vars z1 z2 z3;\nh: 2*z3;\nf: z1; z2;\ng:;\n";
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.kind(), "hypersurface");
        let DocBody::Hypersurface { h, f, g } = &doc.body else {
            panic!()
        };
        assert_eq!(h.num_terms(), 1);
        assert_eq!(f.len(), 2);
        assert!(g.is_empty());
        assert!(doc.to_hypersurface().is_some());
    }

    #[test]
    fn base_point_statement() {
        let doc = parse_document("vars z1 z2;\nbase 1, -1/2;\nz1^2 - 1;\n").unwrap();
        assert_eq!(doc.base_point[0], GaussianRational::from_int(1));
        assert_eq!(doc.base_point[1], GaussianRational::from_ratio(-1, 2));
    }

    #[test]
    fn one_line_document_with_semicolons() {
        let doc = parse_document("vars z1 z2; z1^2 + (1/2)*i*z2").unwrap();
        assert_eq!(doc.kind(), "ideal");
    }

    #[test]
    fn display_round_trip_is_canonical() {
        let names = vec!["z1".to_string(), "z2".to_string()];
        let cases = [
            "z2^2 - z1^3",
            "z1*z2 + z2^2",
            "1 + z1 + (1/2)*i*z2",
            "(1-2*i)*z1^2",
            "-z1 - i*z2",
        ];
        for src in cases {
            let p = parse_poly(src, &["z1", "z2"]).unwrap();
            let printed = p.display_with(&names).to_string();
            let again = parse_poly(&printed, &["z1", "z2"]).unwrap();
            assert_eq!(p, again, "round trip failed for {} -> {}", src, printed);
            // and printing is idempotent
            assert_eq!(printed, again.display_with(&names).to_string());
        }
    }

    #[test]
    fn matrix_file() {
        let m = parse_matrix("1, 0, 0\n0, 1/2, i\n").unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[1][2], GaussianRational::i());
    }
}
