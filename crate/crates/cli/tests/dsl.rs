use num_bigint::BigInt;
use opalg_cli::dsl::{parse, parse_expr, print_expr, print_script, Arg, BinOp, CmpOp, Directive, Expr, Stmt};
use opalg_core::ratfield::q;
use proptest::prelude::*;

fn name(n: &str) -> Expr {
    Expr::Name(n.into())
}

fn num(n: i64) -> Expr {
    Expr::Num(BigInt::from(n))
}

fn mul(a: Expr, b: Expr) -> Expr {
    Expr::bin(BinOp::Mul, a, b)
}

#[test]
fn first_order_binding() {
    let s = parse("let H = 4*x*dx;").unwrap();
    assert_eq!(
        s.stmts(),
        vec![&Stmt::Let {
            name: "H".into(),
            expr: mul(mul(num(4), name("x")), Expr::Dx),
        }]
    );
}

#[test]
fn commutator_assertion() {
    let s = parse("assert comm(H, E) == 2*E;").unwrap();
    let expected = Stmt::Assert {
        lhs: Expr::Comm(Box::new(name("H")), Box::new(name("E"))),
        op: CmpOp::Eq,
        rhs: mul(num(2), name("E")),
    };
    assert_eq!(s.stmts(), vec![&expected]);
}

#[test]
fn square_root_coefficient() {
    let s = parse("let E = 2*sqrt(x*y)*dy;").unwrap();
    let sqrt = Expr::Sqrt(Box::new(mul(name("x"), name("y"))));
    assert_eq!(
        s.stmts(),
        vec![&Stmt::Let {
            name: "E".into(),
            expr: mul(mul(num(2), sqrt), Expr::Dy),
        }]
    );
}

#[test]
fn juxtaposition_is_a_left_associative_product() {
    assert_eq!(parse_expr("4 x dx").unwrap(), parse_expr("(4*x)*dx").unwrap());
    assert_eq!(parse_expr("a b + c").unwrap(), parse_expr("(a*b) + c").unwrap());
    assert_ne!(parse_expr("a*b*c").unwrap(), parse_expr("a*(b*c)").unwrap());
}

#[test]
fn unary_minus_binds_tighter_than_power() {
    let e = parse_expr("-x^2").unwrap();
    assert_eq!(e, Expr::Pow(Box::new(Expr::Neg(Box::new(name("x")))), 2));
    assert_eq!(print_expr(&Expr::Neg(Box::new(Expr::Pow(Box::new(name("x")), 2)))), "-(x^2)");
    assert_eq!(parse_expr("a - -b").unwrap(), Expr::bin(BinOp::Sub, name("a"), Expr::Neg(Box::new(name("b")))));
}

#[test]
fn power_binds_tighter_than_product() {
    assert_eq!(parse_expr("2 dx^2").unwrap(), mul(num(2), Expr::Pow(Box::new(Expr::Dx), 2)));
}

#[test]
fn directives() {
    let s = parse(
        "build-lattice(3);\nrep-matrices(2);\nhw(3/2, 4);\nhw(-1/2, 2);\nef-chain(p, 4, 3);\nef-chain(1/2, w, 2);\nverify(A_gauged);\npaper-suite;",
    )
    .unwrap();
    let ds: Vec<_> = s
        .stmts()
        .into_iter()
        .map(|st| match st {
            Stmt::Directive(d) => d.clone(),
            other => panic!("{other:?}"),
        })
        .collect();
    assert_eq!(
        ds,
        vec![
            Directive::BuildLattice(3),
            Directive::RepMatrices(2),
            Directive::Hw(q(3, 2), Some(4)),
            Directive::Hw(q(-1, 2), Some(2)),
            Directive::EfChain {
                p: Arg::Name("p".into()),
                w: Arg::Value(q(4, 1)),
                len: 3
            },
            Directive::EfChain {
                p: Arg::Value(q(1, 2)),
                w: Arg::Name("w".into()),
                len: 2
            },
            Directive::Verify("A_gauged".into()),
            Directive::PaperSuite,
        ]
    );
    assert_eq!(s.statements[7].line, 8);
}

#[test]
fn names_may_be_greek_or_hyphen_free_directive_words() {
    let s = parse("let hw = α*x - β;\nassert hw != γ;").unwrap();
    assert_eq!(s.statements.len(), 2);
    assert!(parse("let a = E-F;").is_ok());
}

#[test]
fn errors_carry_position_and_expected_tokens() {
    let e = parse("let H = 4*x*dx;\nassert comm(H, E) = 2*E;").unwrap_err();
    assert_eq!((e.line, e.col), (2, 19));
    assert!(e.expected.contains(&"`==`".to_string()), "{e}");
    assert_eq!(e.found, "`=`");

    let e = parse("let a = 1").unwrap_err();
    assert_eq!(e.expected, vec!["`;`"]);
    assert_eq!(e.found, "end of input");

    let e = parse("x = 1;").unwrap_err();
    assert_eq!((e.line, e.col), (1, 1));
    assert!(e.expected.contains(&"`build-lattice`".to_string()));

    let e = parse("hw(1/0);").unwrap_err();
    assert_eq!((e.line, e.col), (1, 6));
    assert_eq!(e.to_string(), "1:6: expected a nonzero denominator, found number 0");

    let e = parse("let a = x^y;").unwrap_err();
    assert_eq!(e.expected, vec!["number"]);
}

#[test]
fn empty_and_comment_only_scripts() {
    assert!(parse("").unwrap().statements.is_empty());
    assert!(parse("# nothing\n// at all\n").unwrap().statements.is_empty());
}

#[test]
fn printing_is_canonical() {
    let src = "let F = 4 sqrt(x*y) dx + 2 (y - 1) sqrt(y/x) dy;\nassert comm(E,F)==H;\nhw(3/2);\n";
    assert_eq!(
        print_script(&parse(src).unwrap()),
        "let F = 4*sqrt(x*y)*dx + 2*(y - 1)*sqrt(y/x)*dy;\nassert comm(E, F) == H;\nhw(3/2);\n"
    );
    assert_eq!(print_expr(&parse_expr("a - (b - c)").unwrap()), "a - (b - c)");
    assert_eq!(print_expr(&parse_expr("(a - b) - c").unwrap()), "a - b - c");
    assert_eq!(print_expr(&parse_expr("(a^2)^3").unwrap()), "a^2^3");
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..20).prop_map(num),
        prop::sample::select(vec!["H", "E", "x", "y", "alpha", "c1", "L2"]).prop_map(name),
        Just(Expr::Dx),
        Just(Expr::Dy),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let op = prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div]);
        prop_oneof![
            (op, inner.clone(), inner.clone()).prop_map(|(o, a, b)| Expr::bin(o, a, b)),
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), 0u32..4).prop_map(|(a, n)| Expr::Pow(Box::new(a), n)),
            inner.clone().prop_map(|a| Expr::Sqrt(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Comm(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Apply(Box::new(a), Box::new(b))),
        ]
    })
}

fn stmt() -> impl Strategy<Value = String> {
    prop_oneof![
        expr().prop_map(|e| format!("let A = {};", print_expr(&e))),
        (expr(), expr(), any::<bool>())
            .prop_map(|(a, b, eq)| format!("assert {} {} {};", print_expr(&a), if eq { "==" } else { "!=" }, print_expr(&b))),
        (0usize..5).prop_map(|n| format!("build-lattice({n});")),
        (-5i64..5, 1i64..4).prop_map(|(n, d)| format!("hw({}, 3);", q(n, d))),
    ]
}

proptest! {
    #[test]
    fn printed_expressions_parse_back(e in expr()) {
        let printed = print_expr(&e);
        prop_assert_eq!(parse_expr(&printed).unwrap(), e, "{}", printed);
    }

    #[test]
    fn parse_print_parse_is_stable(stmts in prop::collection::vec(stmt(), 0..6)) {
        let src = stmts.join("\n");
        let once = parse(&src).unwrap();
        let printed = print_script(&once);
        let twice = parse(&printed).unwrap();
        prop_assert_eq!(once.stmts(), twice.stmts());
        prop_assert_eq!(print_script(&twice), printed);
    }
}
