//! Canonical source text: one statement per line, `*` for every product and
//! only the parentheses the grammar needs.

use super::ast::{Arg, BinOp, CmpOp, Directive, Expr, Script, Stmt};

/// Binding strength; atoms, negation and powers all bind tighter than any
/// binary operator.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
        Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
        Expr::Neg(_) | Expr::Pow(..) => 3,
        _ => 4,
    }
}

fn wrap(e: &Expr, parens: bool) -> String {
    if parens {
        format!("({})", print_expr(e))
    } else {
        print_expr(e)
    }
}

pub fn print_expr(e: &Expr) -> String {
    match e {
        Expr::Num(n) => n.to_string(),
        Expr::Name(n) => n.clone(),
        Expr::Dx => "dx".into(),
        Expr::Dy => "dy".into(),
        Expr::Sqrt(a) => format!("sqrt({})", print_expr(a)),
        Expr::Comm(a, b) => format!("comm({}, {})", print_expr(a), print_expr(b)),
        Expr::Apply(a, b) => format!("apply({}, {})", print_expr(a), print_expr(b)),
        // the operand of a negation is itself a negation or an atom
        Expr::Neg(a) => format!("-{}", wrap(a, prec(a) < 3 || matches!(**a, Expr::Pow(..)))),
        Expr::Pow(a, n) => format!("{}^{n}", wrap(a, prec(a) < 3)),
        Expr::Bin(op, a, b) => {
            let p = prec(e);
            let sym = match op {
                BinOp::Add => " + ",
                BinOp::Sub => " - ",
                BinOp::Mul => "*",
                BinOp::Div => "/",
            };
            // left associative: equal precedence on the right needs parentheses
            format!("{}{sym}{}", wrap(a, prec(a) < p), wrap(b, prec(b) <= p))
        }
    }
}

fn print_arg(a: &Arg) -> String {
    match a {
        Arg::Value(r) => r.to_string(),
        Arg::Name(n) => n.clone(),
    }
}

pub fn print_directive(d: &Directive) -> String {
    match d {
        Directive::BuildLattice(n) => format!("build-lattice({n})"),
        Directive::RepMatrices(n) => format!("rep-matrices({n})"),
        Directive::Hw(n, None) => format!("hw({n})"),
        Directive::Hw(n, Some(len)) => format!("hw({n}, {len})"),
        Directive::EfChain { p, w, len } => format!("ef-chain({}, {}, {len})", print_arg(p), print_arg(w)),
        Directive::Verify(name) => format!("verify({name})"),
        Directive::PaperSuite => "paper-suite".into(),
    }
}

/// A statement without its terminating semicolon.
pub fn print_stmt(s: &Stmt) -> String {
    match s {
        Stmt::Let { name, expr } => format!("let {name} = {}", print_expr(expr)),
        Stmt::Assert { lhs, op, rhs } => {
            let op = match op {
                CmpOp::Eq => "==",
                CmpOp::Ne => "!=",
            };
            format!("assert {} {op} {}", print_expr(lhs), print_expr(rhs))
        }
        Stmt::Directive(d) => print_directive(d),
    }
}

pub fn print_script(s: &Script) -> String {
    s.statements.iter().map(|st| format!("{};\n", print_stmt(&st.stmt))).collect()
}
