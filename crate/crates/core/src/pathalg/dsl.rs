//! Line-oriented input format:
//!
//! ```text
//! field Q              # or: field F 7
//! vertex u v
//! arrow a: u -> v
//! arrow b: v -> u
//! relation b*a         # terms: [coeff*]arrow*arrow..., joined by + / -
//! ```

use num_bigint::BigInt;

use crate::exactlin::{FieldSpec, Scalar};

use super::presentation::{QuiverPresentation, Relation, Term};
use super::{ParseError, ParseErrorKind, PathError};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Number(BigInt),
    Colon,
    To,
    Plus,
    Minus,
    Star,
    Slash,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    col: usize,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

fn lex(line: &str, lineno: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            ':' => Some(Tok::Colon),
            '+' => Some(Tok::Plus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Some(Tok::To)
            }
            '-' => Some(Tok::Minus),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Spanned { tok, col });
            i += 1;
            continue;
        }
        if is_name_char(c) {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let tok = if text.chars().all(|d| d.is_ascii_digit()) {
                Tok::Number(text.parse().expect("digits"))
            } else {
                Tok::Word(text)
            };
            out.push(Spanned { tok, col });
            continue;
        }
        return Err(ParseError::syntax(
            lineno,
            col,
            format!("unexpected character `{c}`"),
        ));
    }
    Ok(out)
}

struct LineParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> LineParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::syntax(self.line, self.col(), msg.into())
    }

    fn semantic(&self, col: usize, e: PathError) -> ParseError {
        ParseError {
            line: self.line,
            column: col,
            kind: ParseErrorKind::Semantic(e),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn name(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        let col = self.col();
        match self.next() {
            Some(Tok::Word(w)) => Ok((w, col)),
            Some(Tok::Number(n)) => Ok((n.to_string(), col)),
            _ => Err(ParseError::syntax(
                self.line,
                col,
                format!("expected {what}"),
            )),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            Err(self.err("unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

/// Parses the presentation DSL. Errors carry 1-based line and column.
pub fn parse_presentation(text: &str) -> Result<QuiverPresentation, ParseError> {
    parse_presentation_over(text, None)
}

/// As [`parse_presentation`], but with `field` (when given) replacing the
/// declared field; coefficients are then read in that field.
pub fn parse_presentation_over(
    text: &str,
    field: Option<FieldSpec>,
) -> Result<QuiverPresentation, ParseError> {
    let mut pres = QuiverPresentation::new(field.unwrap_or(FieldSpec::Rationals));
    let mut field_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = lex(raw, line)?;
        if toks.is_empty() {
            continue;
        }
        let mut p = LineParser {
            toks: &toks,
            pos: 0,
            line,
            end_col: raw.chars().count() + 1,
        };
        let (keyword, kcol) = match p.next() {
            Some(Tok::Word(w)) => (w, toks[0].col),
            _ => {
                return Err(ParseError::syntax(
                    line,
                    toks[0].col,
                    "expected a keyword".into(),
                ))
            }
        };
        match keyword.as_str() {
            "field" => {
                if field_seen {
                    return Err(ParseError::syntax(
                        line,
                        kcol,
                        "field declared twice".into(),
                    ));
                }
                if !pres.relations.is_empty() {
                    return Err(ParseError::syntax(
                        line,
                        kcol,
                        "field must be declared before relations".into(),
                    ));
                }
                field_seen = true;
                let col = p.col();
                pres.field = match p.next() {
                    Some(Tok::Word(w)) if w == "Q" => FieldSpec::Rationals,
                    Some(Tok::Word(w)) if w == "F" => {
                        let pcol = p.col();
                        match p.next() {
                            Some(Tok::Number(n)) => {
                                let val: u64 = n.try_into().map_err(|_| {
                                    ParseError::syntax(
                                        line,
                                        pcol,
                                        "characteristic too large".into(),
                                    )
                                })?;
                                FieldSpec::prime(val).map_err(|e| ParseError {
                                    line,
                                    column: pcol,
                                    kind: ParseErrorKind::Field(e),
                                })?
                            }
                            _ => {
                                return Err(ParseError::syntax(
                                    line,
                                    pcol,
                                    "expected a prime".into(),
                                ))
                            }
                        }
                    }
                    _ => {
                        return Err(ParseError::syntax(
                            line,
                            col,
                            "expected `Q` or `F <p>`".into(),
                        ))
                    }
                };
                p.finish()?;
                if let Some(f) = field {
                    pres.field = f;
                }
            }
            "vertex" => {
                if p.peek().is_none() {
                    return Err(p.err("expected at least one vertex name"));
                }
                while p.peek().is_some() {
                    let (name, col) = p.name("vertex name")?;
                    pres.add_vertex(&name).map_err(|e| p.semantic(col, e))?;
                }
            }
            "arrow" => {
                let (name, ncol) = p.name("arrow name")?;
                if name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(ParseError::syntax(
                        line,
                        ncol,
                        "arrow names must not start with a digit".into(),
                    ));
                }
                p.expect(Tok::Colon, "`:`")?;
                let (src, scol) = p.name("source vertex")?;
                p.expect(Tok::To, "`->`")?;
                let (tgt, tcol) = p.name("target vertex")?;
                p.finish()?;
                let s = pres
                    .vertex_index(&src)
                    .ok_or_else(|| p.semantic(scol, PathError::UnknownVertex(src.clone())))?;
                let t = pres
                    .vertex_index(&tgt)
                    .ok_or_else(|| p.semantic(tcol, PathError::UnknownVertex(tgt.clone())))?;
                pres.add_arrow(&name, s, t)
                    .map_err(|e| p.semantic(ncol, e))?;
            }
            "relation" => {
                let rel = parse_relation(&mut p, &pres)?;
                pres.validate_relation(&rel)
                    .map_err(|e| p.semantic(kcol, e))?;
                pres.relations.push(rel);
            }
            other => {
                return Err(ParseError::syntax(
                    line,
                    kcol,
                    format!("unknown keyword `{other}`"),
                ));
            }
        }
    }
    Ok(pres)
}

fn parse_relation(
    p: &mut LineParser<'_>,
    pres: &QuiverPresentation,
) -> Result<Relation, ParseError> {
    let field = pres.field;
    let mut terms: Vec<Term> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = field.one();
        match p.peek() {
            Some(Tok::Plus) => {
                p.next();
            }
            Some(Tok::Minus) => {
                p.next();
                sign = -sign;
            }
            None if !first => break,
            _ if first => {}
            _ => return Err(p.err("expected `+` or `-`")),
        }
        first = false;
        let (coeff, word) = parse_term(p, pres)?;
        let coeff = &sign * &coeff;
        match terms.iter_mut().find(|t| t.word == word) {
            Some(t) => t.coeff += &coeff,
            None => terms.push(Term { coeff, word }),
        }
        if p.peek().is_none() {
            break;
        }
    }
    terms.retain(|t| !t.coeff.is_zero());
    if terms.is_empty() {
        return Err(p.semantic(p.col(), PathError::ZeroRelation));
    }
    Ok(Relation {
        terms,
        line: Some(p.line),
    })
}

fn parse_term(
    p: &mut LineParser<'_>,
    pres: &QuiverPresentation,
) -> Result<(Scalar, Vec<usize>), ParseError> {
    let field = pres.field;
    let mut coeff = field.one();
    let mut word = Vec::new();
    loop {
        let col = p.col();
        match p.next() {
            Some(Tok::Number(n)) => {
                let den = if p.peek() == Some(&Tok::Slash) {
                    p.next();
                    match p.next() {
                        Some(Tok::Number(d)) => d,
                        _ => {
                            return Err(ParseError::syntax(
                                p.line,
                                p.col(),
                                "expected a denominator".into(),
                            ))
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                let value = field.from_ratio(&n, &den).ok_or_else(|| {
                    ParseError::syntax(p.line, col, "denominator vanishes in the field".into())
                })?;
                coeff = &coeff * &value;
            }
            Some(Tok::Word(name)) => {
                let a = pres
                    .arrow_index(&name)
                    .ok_or_else(|| p.semantic(col, PathError::UnknownArrow(name.clone())))?;
                word.push(a);
            }
            _ => {
                return Err(ParseError::syntax(
                    p.line,
                    col,
                    "expected an arrow or a coefficient".into(),
                ))
            }
        }
        if p.peek() == Some(&Tok::Star) {
            p.next();
        } else {
            break;
        }
    }
    if word.is_empty() {
        return Err(p.err("a relation term needs at least one arrow"));
    }
    Ok((coeff, word))
}
