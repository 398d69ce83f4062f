use super::{Expr, Func};
use crate::error::{GError, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn syntax(column: usize, message: impl Into<String>) -> GError {
    GError::Parse {
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => {
                if chars.get(i + 1) == Some(&'*') {
                    return Err(syntax(column, "`**` is not an operator, use `^`"));
                }
                Some(Tok::Star)
            }
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, column });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            // exponent only when digits follow, so `2e` stays `2` then `e`
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
            let value = lexeme
                .parse::<f64>()
                .map_err(|_| syntax(column, format!("malformed number `{lexeme}`")))?;
            out.push(Token {
                tok: Tok::Num(value),
                column,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
            continue;
        }
        return Err(syntax(column, format!("unexpected character `{c}`")));
    }
    out.push(Token {
        tok: Tok::End,
        column: chars.len() + 1,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.advance();
                    lhs = Expr::add(lhs, self.term()?);
                }
                Tok::Minus => {
                    self.advance();
                    lhs = Expr::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.advance();
                    lhs = Expr::mul(lhs, self.unary()?);
                }
                Tok::Slash => {
                    self.advance();
                    lhs = Expr::div(lhs, self.unary()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            self.advance();
            return Ok(Expr::neg(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.advance();
            let exponent = self.unary()?;
            return Ok(Expr::pow(base, exponent));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.advance();
        match t.tok {
            Tok::Num(v) => Ok(Expr::Const(v)),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(Expr::Var),
                "pi" => Ok(Expr::Const(std::f64::consts::PI)),
                "e" => Ok(Expr::Const(std::f64::consts::E)),
                other => {
                    let func = Func::from_name(other)
                        .ok_or_else(|| syntax(t.column, format!("unknown name `{other}`")))?;
                    self.expect(Tok::LParen, "`(` after function name")?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Expr::func(func, arg))
                }
            },
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::End => Err(syntax(t.column, "unexpected end of input")),
            other => Err(syntax(t.column, format!("unexpected {}", describe(&other)))),
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let t = self.advance();
        if t.tok == want {
            Ok(())
        } else if t.tok == Tok::End {
            Err(syntax(
                t.column,
                format!("expected {what}, found end of input"),
            ))
        } else {
            Err(syntax(
                t.column,
                format!("expected {what}, found {}", describe(&t.tok)),
            ))
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(v) => format!("number {v}"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses an expression in `x`. Errors carry the 1-based column.
pub fn parse(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(syntax(t.column, format!("unexpected {}", describe(&t.tok))));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column_of(text: &str) -> usize {
        match parse(text) {
            Err(GError::Parse { column, .. }) => column,
            other => panic!("expected a parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn builds_expected_tree() {
        let e = parse("sin(x)*x^2").unwrap();
        let want = Expr::mul(
            Expr::func(Func::Sin, Expr::Var),
            Expr::pow(Expr::Var, Expr::Const(2.0)),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn parses_quotient_function() {
        let e = parse("exp(-1/x^2)/(x^2*sin(x))").unwrap();
        assert!(matches!(e, Expr::Div(..)));
    }

    #[test]
    fn precedence_and_associativity() {
        // ^ is right associative
        assert_eq!(
            parse("x^2^3").unwrap(),
            Expr::pow(Expr::Var, Expr::pow(Expr::Const(2.0), Expr::Const(3.0)))
        );
        // unary minus binds looser than ^
        assert_eq!(
            parse("-x^2").unwrap(),
            Expr::neg(Expr::pow(Expr::Var, Expr::Const(2.0)))
        );
        // - and / are left associative
        assert_eq!(
            parse("x-1-2").unwrap(),
            Expr::sub(Expr::sub(Expr::Var, Expr::Const(1.0)), Expr::Const(2.0))
        );
        assert_eq!(
            parse("x/2/3").unwrap(),
            Expr::div(Expr::div(Expr::Var, Expr::Const(2.0)), Expr::Const(3.0))
        );
        assert_eq!(
            parse("1+2*x").unwrap(),
            Expr::add(Expr::Const(1.0), Expr::mul(Expr::Const(2.0), Expr::Var))
        );
    }

    #[test]
    fn numbers() {
        assert_eq!(parse("2.5").unwrap(), Expr::Const(2.5));
        assert_eq!(parse("1e-3").unwrap(), Expr::Const(1e-3));
        assert_eq!(parse("2E+2").unwrap(), Expr::Const(200.0));
        // `2e` is the number 2 followed by the constant e: no implicit product
        assert_eq!(column_of("2e"), 2);
    }

    #[test]
    fn error_columns() {
        assert_eq!(column_of("2**x"), 2);
        assert_eq!(column_of("ln("), 4);
        assert_eq!(column_of("sinh(x)"), 1);
        assert_eq!(column_of("x + y"), 5);
        assert_eq!(column_of("(x"), 3);
        assert_eq!(column_of("x)"), 2);
        assert_eq!(column_of("x $ 2"), 3);
        assert_eq!(column_of(""), 1);
        assert_eq!(column_of("sin x"), 5);
    }
}
