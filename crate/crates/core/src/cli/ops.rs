//! Infix geometric arithmetic over positive literals:
//!
//! ```text
//! expr := term (('+g' | '-g') term)*
//! term := atom (('*g' | '/g') atom)*
//! atom := NUMBER | 'e' | '(' expr ')'
//! ```

use crate::error::{GError, Result};
use crate::garith::GReal;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Num(f64),
    Op(char),
    LParen,
    RParen,
    End,
}

fn syntax(column: usize, message: impl Into<String>) -> GError {
    GError::Parse {
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '/' => {
                if chars.get(i + 1) != Some(&'g') {
                    return Err(syntax(
                        column,
                        format!("`{c}` must be written `{c}g` in geometric arithmetic"),
                    ));
                }
                out.push((Tok::Op(c), column));
                i += 2;
            }
            '(' => {
                out.push((Tok::LParen, column));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, column));
                i += 1;
            }
            'e' if !chars.get(i + 1).is_some_and(|n| n.is_ascii_alphanumeric()) => {
                out.push((Tok::Num(std::f64::consts::E), column));
                i += 1;
            }
            _ if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let lexeme: String = chars[start..i].iter().collect();
                let v = lexeme
                    .parse::<f64>()
                    .map_err(|_| syntax(column, format!("malformed number `{lexeme}`")))?;
                out.push((Tok::Num(v), column));
            }
            _ => return Err(syntax(column, format!("unexpected character `{c}`"))),
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> (Tok, usize) {
        self.tokens[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.tokens[self.pos];
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<GReal> {
        let mut acc = self.term()?;
        while let (Tok::Op(op @ ('+' | '-')), _) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = if op == '+' {
                acc.oplus(rhs)?
            } else {
                acc.ominus(rhs)?
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GReal> {
        let mut acc = self.atom()?;
        while let (Tok::Op(op @ ('*' | '/')), _) = self.peek() {
            self.bump();
            let rhs = self.atom()?;
            acc = if op == '*' {
                acc.odot(rhs)?
            } else {
                acc.oslash(rhs)?
            };
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<GReal> {
        match self.bump() {
            (Tok::Num(v), _) => GReal::from_value(v),
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, column) => Err(syntax(column, "expected `)`")),
                }
            }
            (Tok::End, column) => Err(syntax(column, "unexpected end of input")),
            (_, column) => Err(syntax(column, "expected a positive literal or `(`")),
        }
    }
}

/// Evaluates e.g. `"8 /g 7.389056099"` to `8 ⊘ e²`.
pub fn eval_geometric(text: &str) -> Result<GReal> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let v = p.expr()?;
    match p.peek() {
        (Tok::End, _) => Ok(v),
        (_, column) => Err(syntax(column, "unexpected trailing input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates() {
        let v = eval_geometric("8 /g 7.389056099").unwrap();
        assert!((v.value() - 2.828427).abs() < 1e-6);
        assert!((eval_geometric("2 +g 3").unwrap().value() - 6.0).abs() < 1e-12);
        assert!((eval_geometric("6 -g 3").unwrap().value() - 2.0).abs() < 1e-12);
        // ⊙ binds tighter than ⊕
        let v = eval_geometric("2 +g 3 *g e").unwrap();
        assert!((v.value() - 6.0).abs() < 1e-12);
        let v = eval_geometric("(2 +g 3) *g 2").unwrap();
        assert!((v.value() - 6f64.powf(2f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            eval_geometric("2 + 3"),
            Err(GError::Parse { column: 3, .. })
        ));
        assert!(matches!(eval_geometric("0 +g 3"), Err(GError::Domain(_))));
        assert!(matches!(
            eval_geometric("2 /g 1"),
            Err(GError::DivisionByGeometricZero)
        ));
        assert!(matches!(eval_geometric("(2"), Err(GError::Parse { .. })));
        assert!(matches!(
            eval_geometric("2 3"),
            Err(GError::Parse { column: 3, .. })
        ));
    }
}
