use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    /// `@name`
    Partial(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Prime,
    Comma,
    Semi,
    Eq,
    Arrow,
    Eof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub text: String,
    pub line: usize,
    pub col: usize,
}

impl Token {
    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col: self.col,
            token: if self.tok == Tok::Eof {
                "<end of input>".into()
            } else {
                self.text.clone()
            },
            message: message.into(),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Split ASCII source into tokens; `#` starts a comment running to the
/// end of the line.
pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut pos, mut line, mut col) = (0usize, 1usize, 1usize);
    while pos < chars.len() {
        let c = chars[pos];
        let (start_line, start_col) = (line, col);
        let mut advance = |n: usize, pos: &mut usize| {
            *pos += n;
            col += n;
        };
        if c == '\n' {
            pos += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut pos);
            continue;
        }
        if c == '#' {
            while pos < chars.len() && chars[pos] != '\n' {
                advance(1, &mut pos);
            }
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '\'' => Some(Tok::Prime),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        let (tok, len) = if let Some(t) = simple {
            (t, 1)
        } else if c == '-' {
            if chars.get(pos + 1) == Some(&'>') {
                (Tok::Arrow, 2)
            } else {
                (Tok::Minus, 1)
            }
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            (Tok::Int(chars[pos..end].iter().collect()), end - pos)
        } else if is_ident_start(c) {
            let mut end = pos;
            while end < chars.len() && is_ident_char(chars[end]) {
                end += 1;
            }
            (Tok::Ident(chars[pos..end].iter().collect()), end - pos)
        } else if c == '@' {
            let mut end = pos + 1;
            if end < chars.len() && is_ident_start(chars[end]) {
                while end < chars.len() && is_ident_char(chars[end]) {
                    end += 1;
                }
                (
                    Tok::Partial(chars[pos + 1..end].iter().collect()),
                    end - pos,
                )
            } else {
                return Err(ParseError::Syntax {
                    line,
                    col,
                    token: "@".into(),
                    message: "expected a coordinate name after '@'".into(),
                });
            }
        } else {
            return Err(ParseError::Syntax {
                line,
                col,
                token: c.to_string(),
                message: "unexpected character".into(),
            });
        };
        let text: String = chars[pos..pos + len].iter().collect();
        advance(len, &mut pos);
        out.push(Token {
            tok,
            text,
            line: start_line,
            col: start_col,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        text: String::new(),
        line,
        col,
    });
    Ok(out)
}
