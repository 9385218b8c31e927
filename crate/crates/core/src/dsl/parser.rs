use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::ast::MapExpr;
use super::lexer::{tokenize, Spanned, Token};
use crate::error::{ParseError, Position};
use crate::number::{Rational, DEFAULT_ORDER_BOUND};

/// Nesting beyond this is rejected instead of recursing further.
const MAX_DEPTH: usize = 256;

pub(super) struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    depth: usize,
    /// Declared arity; `None` for constant expressions.
    arity: Option<usize>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    pub(super) fn new(text: &str) -> PResult<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            depth: 0,
            arity: None,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn at(&self) -> Position {
        self.tokens[self.pos].at
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].token.clone();
        if t != Token::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(self.at(), message))
    }

    fn expect(&mut self, want: Token) -> PResult<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", want.describe(), self.peek().describe()))
        }
    }

    pub(super) fn finish(&mut self) -> PResult<()> {
        if *self.peek() == Token::End {
            Ok(())
        } else {
            self.error(format!("unexpected {}", self.peek().describe()))
        }
    }

    fn var_index(&self, digits: &str) -> PResult<usize> {
        match digits.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i),
            _ => self.error(format!("invalid variable x{digits}")),
        }
    }

    /// `"f" "(" var ("," var)* ")" "="`, returning the arity. Parameters
    /// must be `x1, x2, ..` in order.
    pub(super) fn header(&mut self) -> PResult<usize> {
        self.expect(Token::F)?;
        self.expect(Token::LParen)?;
        let mut arity = 0;
        loop {
            match self.peek().clone() {
                Token::Var(d) => {
                    let i = self.var_index(&d)?;
                    if i != arity + 1 {
                        return self.error(format!("expected parameter x{}, found x{d}", arity + 1));
                    }
                    self.bump();
                    arity += 1;
                }
                other => return self.error(format!("expected a parameter, found {}", other.describe())),
            }
            match self.bump() {
                Token::Comma => continue,
                Token::RParen => break,
                _ => {
                    self.pos -= 1;
                    return self.error(format!("expected ',' or ')', found {}", self.peek().describe()));
                }
            }
        }
        self.expect(Token::Eq)?;
        self.arity = Some(arity);
        Ok(arity)
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.error("expression nested too deeply");
        }
        Ok(())
    }

    pub(super) fn expr(&mut self) -> PResult<MapExpr> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    lhs = MapExpr::plus(lhs, self.term()?);
                }
                Token::Minus => {
                    self.bump();
                    lhs = MapExpr::minus(lhs, self.term()?);
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> PResult<MapExpr> {
        let mut lhs = self.factor()?;
        while *self.peek() == Token::Star {
            self.bump();
            lhs = MapExpr::times(lhs, self.factor()?);
        }
        Ok(lhs)
    }

    fn small_int(&mut self, what: &str) -> PResult<u64> {
        match self.peek().clone() {
            Token::Int(v) => match v.to_u64() {
                Some(v) => {
                    self.bump();
                    Ok(v)
                }
                None => self.error(format!("{what} {v} is too large")),
            },
            other => self.error(format!("expected {what}, found {}", other.describe())),
        }
    }

    fn factor(&mut self) -> PResult<MapExpr> {
        match self.peek().clone() {
            Token::Minus => {
                self.enter()?;
                self.bump();
                let inner = self.factor()?;
                self.depth -= 1;
                Ok(MapExpr::negation(inner))
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(MapExpr::group(inner))
            }
            Token::Var(d) => {
                let i = self.var_index(&d)?;
                match self.arity {
                    None => return self.error(format!("variable x{d} not allowed in a constant")),
                    Some(k) if i > k => {
                        return self.error(format!("undeclared variable x{d} (arity {k})"));
                    }
                    _ => {}
                }
                self.bump();
                Ok(MapExpr::Var(i))
            }
            Token::Int(n) => {
                self.bump();
                let mut d = BigInt::from(1);
                if *self.peek() == Token::Slash {
                    self.bump();
                    let at = self.at();
                    match self.bump() {
                        Token::Int(v) if v.is_zero() => {
                            return Err(ParseError::new(at, "zero denominator"));
                        }
                        Token::Int(v) => d = v,
                        other => {
                            return Err(ParseError::new(
                                at,
                                format!("expected a denominator, found {}", other.describe()),
                            ));
                        }
                    }
                }
                Ok(MapExpr::Rational(Rational::new(n, d)))
            }
            Token::Zeta => {
                self.bump();
                self.expect(Token::LParen)?;
                let at = self.at();
                let order = self.small_int("root order")?;
                if order == 0 || order > DEFAULT_ORDER_BOUND {
                    return Err(ParseError::new(
                        at,
                        format!("zeta order {order} outside 1..={DEFAULT_ORDER_BOUND}"),
                    ));
                }
                self.expect(Token::RParen)?;
                let mut power = 1;
                if *self.peek() == Token::Caret {
                    self.bump();
                    power = self.small_int("exponent")?;
                }
                Ok(MapExpr::Zeta { order, power })
            }
            other => self.error(format!("expected a value, found {}", other.describe())),
        }
    }

    /// Comma-separated constant expressions.
    pub(super) fn scalar_list(&mut self) -> PResult<Vec<MapExpr>> {
        let mut out = vec![self.expr()?];
        while *self.peek() == Token::Comma {
            self.bump();
            out.push(self.expr()?);
        }
        Ok(out)
    }
}
