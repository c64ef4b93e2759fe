use num_bigint::BigInt;
use opalg_core::ratfield::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    /// Left multiplication by the reciprocal of an order-zero operand.
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Name(String),
    Dx,
    Dy,
    Sqrt(Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
    Apply(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    /// Every name referenced, in order of first appearance.
    pub fn names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Name(n) => {
                if !out.contains(&n.as_str()) {
                    out.push(n);
                }
            }
            Expr::Num(_) | Expr::Dx | Expr::Dy => {}
            Expr::Sqrt(a) | Expr::Neg(a) | Expr::Pow(a, _) => a.collect_names(out),
            Expr::Comm(a, b) | Expr::Apply(a, b) | Expr::Bin(_, a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
}

/// A rational literal or the name of a parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Value(Rational),
    Name(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Directive {
    BuildLattice(usize),
    RepMatrices(usize),
    /// Weight and an optional truncation length.
    Hw(Rational, Option<usize>),
    EfChain { p: Arg, w: Arg, len: usize },
    Verify(String),
    PaperSuite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Let { name: String, expr: Expr },
    Assert { lhs: Expr, op: CmpOp, rhs: Expr },
    Directive(Directive),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub stmt: Stmt,
    pub line: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl Script {
    /// The statements without source positions.
    pub fn stmts(&self) -> Vec<&Stmt> {
        self.statements.iter().map(|s| &s.stmt).collect()
    }
}
