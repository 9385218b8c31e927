use num_bigint::BigInt;

use crate::error::{ParseError, Position};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Token {
    Int(BigInt),
    /// `x<digits>`; the index is kept as text so oversized indices can be
    /// reported rather than wrapped.
    Var(String),
    F,
    Zeta,
    LParen,
    RParen,
    Comma,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl Token {
    pub(super) fn describe(&self) -> String {
        match self {
            Token::Int(v) => format!("number {v}"),
            Token::Var(d) => format!("variable x{d}"),
            Token::F => "'f'".into(),
            Token::Zeta => "'zeta'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Comma => "','".into(),
            Token::Eq => "'='".into(),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(super) struct Spanned {
    pub token: Token,
    pub at: Position,
}

pub(super) fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let at = Position { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let token = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Token::Int(digits.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "f" => Token::F,
                "zeta" => Token::Zeta,
                w if w.len() > 1 && w.starts_with('x') && w[1..].bytes().all(|b| b.is_ascii_digit()) => {
                    Token::Var(w[1..].to_string())
                }
                _ => return Err(ParseError::new(at, format!("unknown identifier {word:?}"))),
            }
        } else {
            i += 1;
            match c {
                '(' => Token::LParen,
                ')' => Token::RParen,
                ',' => Token::Comma,
                '=' => Token::Eq,
                '+' => Token::Plus,
                '-' => Token::Minus,
                '*' => Token::Star,
                '/' => Token::Slash,
                '^' => Token::Caret,
                _ => return Err(ParseError::new(at, format!("unexpected character {c:?}"))),
            }
        };
        column += i - start;
        out.push(Spanned { token, at });
    }
    out.push(Spanned {
        token: Token::End,
        at: Position { line, column },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<Token> {
        tokenize(text).unwrap().into_iter().map(|s| s.token).collect()
    }

    #[test]
    fn tokens() {
        assert_eq!(
            kinds("f(x1) = zeta(3)^2*x1 - 1/2"),
            vec![
                Token::F,
                Token::LParen,
                Token::Var("1".into()),
                Token::RParen,
                Token::Eq,
                Token::Zeta,
                Token::LParen,
                Token::Int(3.into()),
                Token::RParen,
                Token::Caret,
                Token::Int(2.into()),
                Token::Star,
                Token::Var("1".into()),
                Token::Minus,
                Token::Int(1.into()),
                Token::Slash,
                Token::Int(2.into()),
                Token::End,
            ]
        );
    }

    #[test]
    fn positions() {
        let toks = tokenize("f(x1)\n  = x1").unwrap();
        let eq = toks.iter().find(|t| t.token == Token::Eq).unwrap();
        assert_eq!(eq.at, Position { line: 2, column: 3 });
        let end = toks.last().unwrap();
        assert_eq!(end.at, Position { line: 2, column: 7 });
    }

    #[test]
    fn rejects_unknown() {
        let e = tokenize("f(x1) = y").unwrap_err();
        assert_eq!(e.position, Position { line: 1, column: 9 });
        assert!(tokenize("x1 $").is_err());
        assert!(tokenize("x").is_err());
        assert!(tokenize("xa").is_err());
    }
}
