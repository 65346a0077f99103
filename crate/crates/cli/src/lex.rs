//! Tokenizer shared by the model-file and expression parsers. Every token
//! carries its source position so downstream errors can point at it.

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl Span {
    pub fn start() -> Span {
        Span { line: 1, col: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// A digit run, kept raw so bit-vector literals survive leading zeroes.
    Digits(String),
    Arrow,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Semi,
    Star,
    Plus,
    Eq,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Digits(s) => write!(f, "`{s}`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Eq => write!(f, "`=`"),
        }
    }
}

pub fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>, CliError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
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
            '-' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'>') {
                    chars.next();
                    col += 1;
                    out.push((Tok::Arrow, span));
                } else {
                    return Err(CliError::parse(span, "expected `->`".to_string()));
                }
            }
            '{' | '}' | '(' | ')' | ',' | ':' | ';' | '*' | '+' | '=' => {
                chars.next();
                col += 1;
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    ':' => Tok::Colon,
                    ';' => Tok::Semi,
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    _ => Tok::Eq,
                };
                out.push((tok, span));
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Digits(s), span));
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), span));
            }
            other => {
                return Err(CliError::parse(span, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

/// A cursor over the token stream with single-token lookahead.
pub struct Cursor {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Cursor {
    pub fn new(toks: Vec<(Tok, Span)>) -> Cursor {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    pub fn span(&self) -> Span {
        self.toks
            .get(self.pos)
            .map(|(_, s)| *s)
            .unwrap_or_else(|| {
                self.toks
                    .last()
                    .map(|(_, s)| *s)
                    .unwrap_or_else(Span::start)
            })
    }

    pub fn next(&mut self) -> Option<(Tok, Span)> {
        let item = self.toks.get(self.pos).cloned();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    pub fn expect(&mut self, want: &Tok) -> Result<Span, CliError> {
        let span = self.span();
        match self.next() {
            Some((tok, s)) if tok == *want => Ok(s),
            Some((tok, s)) => Err(CliError::parse(s, format!("expected {want}, found {tok}"))),
            None => Err(CliError::parse(span, format!("expected {want}, found end of input"))),
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, Span), CliError> {
        let span = self.span();
        match self.next() {
            Some((Tok::Ident(s), sp)) => Ok((s, sp)),
            Some((tok, sp)) => Err(CliError::parse(sp, format!("expected a name, found {tok}"))),
            None => Err(CliError::parse(span, "expected a name, found end of input".into())),
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}
