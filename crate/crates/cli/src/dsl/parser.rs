use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use opalg_core::ratfield::Rational;

use super::ast::{Arg, BinOp, CmpOp, Directive, Expr, Script, Statement, Stmt};
use super::lexer::{tokenize, Token, TokenKind};
use super::{ParseError, DIRECTIVES};

const FACTOR_START: [&str; 9] = ["number", "name", "`dx`", "`dy`", "`sqrt`", "`comm`", "`apply`", "`(`", "`-`"];

/// Parses a whole script.
pub fn parse(src: &str) -> Result<Script, ParseError> {
    let mut p = Parser::new(src)?;
    let mut statements = Vec::new();
    while p.peek() != &TokenKind::Eof {
        let line = p.tok().line;
        let stmt = p.statement()?;
        statements.push(Statement { stmt, line });
    }
    Ok(Script { statements })
}

/// Parses a single expression with nothing after it.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.expect(TokenKind::Eof)?;
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

fn starts_factor(k: &TokenKind) -> bool {
    matches!(
        k,
        TokenKind::Number(_)
            | TokenKind::Ident(_)
            | TokenKind::Dx
            | TokenKind::Dy
            | TokenKind::Sqrt
            | TokenKind::Comm
            | TokenKind::Apply
            | TokenKind::LParen
    )
}

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
        })
    }

    fn tok(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek(&self) -> &TokenKind {
        &self.tok().kind
    }

    fn bump(&mut self) -> TokenKind {
        let k = self.tok().kind.clone();
        if k != TokenKind::Eof {
            self.pos += 1;
        }
        k
    }

    fn error<S: ToString>(&self, expected: impl IntoIterator<Item = S>) -> ParseError {
        let t = self.tok();
        ParseError {
            line: t.line,
            col: t.col,
            expected: expected.into_iter().map(|s| s.to_string()).collect(),
            found: t.kind.to_string(),
        }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), ParseError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            Err(self.error([kind]))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            TokenKind::Ident(name) => {
                self.bump();
                Ok(name)
            }
            _ => Err(self.error(["name"])),
        }
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let stmt = match self.peek().clone() {
            TokenKind::Let => {
                self.bump();
                let name = self.ident()?;
                self.expect(TokenKind::Assign)?;
                Stmt::Let { name, expr: self.expr()? }
            }
            TokenKind::Assert => {
                self.bump();
                let lhs = self.expr()?;
                let op = match self.peek() {
                    TokenKind::EqEq => CmpOp::Eq,
                    TokenKind::NotEq => CmpOp::Ne,
                    _ => return Err(self.error(["`==`", "`!=`", "`+`", "`-`", "`*`", "`/`", "`^`"])),
                };
                self.bump();
                Stmt::Assert { lhs, op, rhs: self.expr()? }
            }
            TokenKind::Ident(name) if DIRECTIVES.contains(&name.as_str()) => {
                self.bump();
                Stmt::Directive(self.directive(&name)?)
            }
            _ => {
                let mut expected = vec!["`let`".to_string(), "`assert`".to_string()];
                expected.extend(DIRECTIVES.iter().map(|d| format!("`{d}`")));
                return Err(self.error(expected));
            }
        };
        self.expect(TokenKind::Semi)?;
        Ok(stmt)
    }

    fn directive(&mut self, name: &str) -> Result<Directive, ParseError> {
        if name == "paper-suite" {
            if self.eat(&TokenKind::LParen) {
                self.expect(TokenKind::RParen)?;
            }
            return Ok(Directive::PaperSuite);
        }
        self.expect(TokenKind::LParen)?;
        let d = match name {
            "build-lattice" => Directive::BuildLattice(self.count()?),
            "rep-matrices" => Directive::RepMatrices(self.count()?),
            "hw" => {
                let n = self.rational()?;
                let len = if self.eat(&TokenKind::Comma) { Some(self.count()?) } else { None };
                Directive::Hw(n, len)
            }
            "ef-chain" => {
                let p = self.arg()?;
                self.expect(TokenKind::Comma)?;
                let w = self.arg()?;
                self.expect(TokenKind::Comma)?;
                Directive::EfChain { p, w, len: self.count()? }
            }
            "verify" => Directive::Verify(self.ident()?),
            _ => unreachable!("directive names are fixed"),
        };
        self.expect(TokenKind::RParen)?;
        Ok(d)
    }

    fn count(&mut self) -> Result<usize, ParseError> {
        match self.peek().clone() {
            TokenKind::Number(n) => match n.to_usize() {
                Some(v) => {
                    self.bump();
                    Ok(v)
                }
                None => Err(self.error(["a small non-negative integer"])),
            },
            _ => Err(self.error(["number"])),
        }
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            TokenKind::Number(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(["number"])),
        }
    }

    /// `["-"] NUMBER ["/" NUMBER]`.
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let negative = self.eat(&TokenKind::Minus);
        let num = self.number()?;
        let den = if self.eat(&TokenKind::Slash) {
            let d = self.number()?;
            if d.is_zero() {
                self.pos -= 1;
                return Err(self.error(["a nonzero denominator"]));
            }
            d
        } else {
            BigInt::from(1)
        };
        let r = Rational::new(num, den);
        Ok(if negative { -r } else { r })
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        match self.peek() {
            TokenKind::Ident(_) => Ok(Arg::Name(self.ident()?)),
            TokenKind::Number(_) | TokenKind::Minus => Ok(Arg::Value(self.rational()?)),
            _ => Err(self.error(["number", "name", "`-`"])),
        }
    }

    /// `term (("+" | "-") term)*`.
    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.term()?;
        loop {
            let op = match self.peek() {
                TokenKind::Plus => BinOp::Add,
                TokenKind::Minus => BinOp::Sub,
                _ => return Ok(e),
            };
            self.bump();
            e = Expr::bin(op, e, self.term()?);
        }
    }

    /// `power (("*" | "/") power | power)*`; juxtaposition is a product.
    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.power()?;
        loop {
            let op = match self.peek() {
                TokenKind::Star => {
                    self.bump();
                    BinOp::Mul
                }
                TokenKind::Slash => {
                    self.bump();
                    BinOp::Div
                }
                k if starts_factor(k) => BinOp::Mul,
                _ => return Ok(e),
            };
            e = Expr::bin(op, e, self.power()?);
        }
    }

    /// `unary ("^" NUMBER)*`.
    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.unary()?;
        while self.eat(&TokenKind::Caret) {
            let n = match self.peek().clone() {
                TokenKind::Number(n) => n.to_u32().ok_or_else(|| self.error(["an exponent below 2^32"]))?,
                _ => return Err(self.error(["number"])),
            };
            self.bump();
            e = Expr::Pow(Box::new(e), n);
        }
        Ok(e)
    }

    /// Unary minus binds tighter than `^`: `-a^2` is `(-a)^2`.
    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&TokenKind::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let e = match self.peek().clone() {
            TokenKind::Number(n) => Expr::Num(n),
            TokenKind::Ident(name) => Expr::Name(name),
            TokenKind::Dx => Expr::Dx,
            TokenKind::Dy => Expr::Dy,
            TokenKind::Sqrt => {
                self.bump();
                self.expect(TokenKind::LParen)?;
                let a = self.expr()?;
                self.expect(TokenKind::RParen)?;
                return Ok(Expr::Sqrt(Box::new(a)));
            }
            TokenKind::Comm | TokenKind::Apply => {
                let comm = self.bump() == TokenKind::Comm;
                self.expect(TokenKind::LParen)?;
                let a = Box::new(self.expr()?);
                self.expect(TokenKind::Comma)?;
                let b = Box::new(self.expr()?);
                self.expect(TokenKind::RParen)?;
                return Ok(if comm { Expr::Comm(a, b) } else { Expr::Apply(a, b) });
            }
            TokenKind::LParen => {
                self.bump();
                let a = self.expr()?;
                self.expect(TokenKind::RParen)?;
                return Ok(a);
            }
            _ => return Err(self.error(FACTOR_START)),
        };
        self.bump();
        Ok(e)
    }
}
