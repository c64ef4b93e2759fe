use std::fmt;

use num_bigint::BigInt;

use super::ParseError;

/// Directive names that contain a hyphen and so cannot be identifiers.
pub const HYPHENATED: [&str; 4] = ["build-lattice", "rep-matrices", "ef-chain", "paper-suite"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Let,
    Assert,
    Dx,
    Dy,
    Sqrt,
    Comm,
    Apply,
    Ident(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
    Assign,
    EqEq,
    NotEq,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TokenKind::Let => "`let`",
            TokenKind::Assert => "`assert`",
            TokenKind::Dx => "`dx`",
            TokenKind::Dy => "`dy`",
            TokenKind::Sqrt => "`sqrt`",
            TokenKind::Comm => "`comm`",
            TokenKind::Apply => "`apply`",
            TokenKind::Ident(name) => return write!(f, "identifier `{name}`"),
            TokenKind::Number(n) => return write!(f, "number {n}"),
            TokenKind::Plus => "`+`",
            TokenKind::Minus => "`-`",
            TokenKind::Star => "`*`",
            TokenKind::Slash => "`/`",
            TokenKind::Caret => "`^`",
            TokenKind::LParen => "`(`",
            TokenKind::RParen => "`)`",
            TokenKind::Comma => "`,`",
            TokenKind::Semi => "`;`",
            TokenKind::Assign => "`=`",
            TokenKind::EqEq => "`==`",
            TokenKind::NotEq => "`!=`",
            TokenKind::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

fn keyword(word: &str) -> Option<TokenKind> {
    Some(match word {
        "let" => TokenKind::Let,
        "assert" => TokenKind::Assert,
        "dx" => TokenKind::Dx,
        "dy" => TokenKind::Dy,
        "sqrt" => TokenKind::Sqrt,
        "comm" => TokenKind::Comm,
        "apply" => TokenKind::Apply,
        _ => return None,
    })
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits source text into tokens. `#` and `//` start comments that run to
/// the end of the line.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut i, &mut col);
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let push = |kind: TokenKind, out: &mut Vec<Token>| out.push(Token { kind, line: tl, col: tc });
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                advance(1, &mut i, &mut col);
            }
            let digits: String = chars[start..i].iter().collect();
            push(TokenKind::Number(digits.parse().expect("digits")), &mut out);
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let rest: String = chars[i..].iter().take(16).collect();
            let hyphenated = HYPHENATED.iter().find(|name| {
                rest.starts_with(*name) && !chars.get(i + name.len()).is_some_and(|&c| ident_char(c))
            });
            let start = i;
            match hyphenated {
                Some(name) => advance(name.len(), &mut i, &mut col),
                None => {
                    while i < chars.len() && ident_char(chars[i]) {
                        advance(1, &mut i, &mut col);
                    }
                }
            }
            let word: String = chars[start..i].iter().collect();
            push(keyword(&word).unwrap_or(TokenKind::Ident(word)), &mut out);
            continue;
        }
        let two: String = chars[i..].iter().take(2).collect();
        let (kind, len) = match (c, two.as_str()) {
            (_, "==") => (TokenKind::EqEq, 2),
            (_, "!=") => (TokenKind::NotEq, 2),
            ('+', _) => (TokenKind::Plus, 1),
            ('-', _) => (TokenKind::Minus, 1),
            ('*', _) => (TokenKind::Star, 1),
            ('/', _) => (TokenKind::Slash, 1),
            ('^', _) => (TokenKind::Caret, 1),
            ('(', _) => (TokenKind::LParen, 1),
            (')', _) => (TokenKind::RParen, 1),
            (',', _) => (TokenKind::Comma, 1),
            (';', _) => (TokenKind::Semi, 1),
            ('=', _) => (TokenKind::Assign, 1),
            _ => {
                return Err(ParseError {
                    line: tl,
                    col: tc,
                    expected: vec!["a token".into()],
                    found: format!("character `{c}`"),
                })
            }
        };
        push(kind, &mut out);
        advance(len, &mut i, &mut col);
    }
    out.push(Token {
        kind: TokenKind::Eof,
        line,
        col,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn hyphenated_directives_and_subtraction() {
        assert_eq!(
            kinds("build-lattice(2); E-F"),
            vec![
                TokenKind::Ident("build-lattice".into()),
                TokenKind::LParen,
                TokenKind::Number(2.into()),
                TokenKind::RParen,
                TokenKind::Semi,
                TokenKind::Ident("E".into()),
                TokenKind::Minus,
                TokenKind::Ident("F".into()),
                TokenKind::Eof,
            ]
        );
    }

    #[test]
    fn positions_and_comments() {
        let toks = tokenize("let H = 4*x*dx; # comment\n  assert H != 0;").unwrap();
        let assert = toks.iter().find(|t| t.kind == TokenKind::Assert).unwrap();
        assert_eq!((assert.line, assert.col), (2, 3));
        assert!(toks.iter().any(|t| t.kind == TokenKind::NotEq));
        assert_eq!(kinds("// only a comment"), vec![TokenKind::Eof]);
    }

    #[test]
    fn unknown_character() {
        let e = tokenize("let a = 1;\nlet b = $;").unwrap_err();
        assert_eq!((e.line, e.col), (2, 9));
    }
}
