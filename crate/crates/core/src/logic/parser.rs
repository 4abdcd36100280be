use crate::error::{Error, Result};
use crate::logic::Formula;
use crate::natural::Natural;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(String),
    Top,
    Bottom,
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Int(s) => format!("integer `{s}`"),
            Token::Top => "`T`".into(),
            Token::Bottom => "`F`".into(),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

fn syntax_error(position: usize, message: impl Into<String>) -> Error {
    Error::SyntaxError {
        position,
        message: message.into(),
    }
}

/// Splits `text` into tokens paired with their byte offsets.
fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' => {
                if bytes.get(i + 1) != Some(&b'>') {
                    return Err(syntax_error(start, "expected `->`"));
                }
                i += 1;
                Token::Arrow
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Token::Int(text[start..=i].to_string())
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                match &text[start..=i] {
                    "T" => Token::Top,
                    "F" => Token::Bottom,
                    name => Token::Ident(name.to_string()),
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax_error(start, format!("unexpected character {ch:?}")));
            }
        };
        out.push((token, start));
        i += 1;
    }
    out.push((Token::Eof, text.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    fn position(&self) -> usize {
        self.tokens[self.cursor].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.cursor].0.clone();
        if t != Token::Eof {
            self.cursor += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        syntax_error(
            self.position(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Token::Arrow {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Token::Or {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::And {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        if *self.peek() == Token::Not {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let position = self.position();
        match self.peek().clone() {
            Token::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Token::Int(digits) => {
                self.bump();
                let n: Natural = digits
                    .parse()
                    .map_err(|e| syntax_error(position, format!("{e}")))?;
                Ok(Formula::Lit(n))
            }
            Token::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Token::Bottom => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Token::LParen => {
                self.bump();
                let inner = self.formula()?;
                if *self.peek() != Token::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

/// Parses a formula; errors carry the byte offset of the offending token.
pub fn parse(text: &str) -> Result<Formula> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        cursor: 0,
    };
    let f = parser.formula()?;
    if *parser.peek() != Token::Eof {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(f)
}
