//! Round trips, precedence and evaluation of the expression language.

use netdensity::directed::Element;
use netdensity::expr::{eval_expr, parse_expr, BinOp, CmpOp, Expr, Func, LogicOp, Type, Value};
use proptest::prelude::*;

const CORPUS: &[&str] = &[
    "n",
    "x1",
    "x1 + x2",
    "x1 - x2 - x3",
    "x1 * x2 + x3",
    "x1 + x2 * x3",
    "(x1 + x2) * x3",
    "x1 / x2 / 2",
    "x1 % 3 == 0",
    "x1 % 2 == 0 && x2 % 2 == 1",
    "x1 == x2 || x2 == x3",
    "x1 < x2 && x2 < x3 || x1 == 1",
    "!(x1 == x2)",
    "!(x1 < 2) && !(x2 < 2)",
    "-x1 + 3",
    "--x1",
    "-(x1 - x2)",
    "abs(x1 - x2) <= 1",
    "min(x1, x2)",
    "max(x1, x2) - min(x1, x2)",
    "pow(x1, 2) + pow(x2, 2) <= pow(x3, 2)",
    "pow(2, x1)",
    "sin(x1)",
    "sin(x1) * sin(x1) + 1",
    "divides(3, x1)",
    "divides(x1, x2)",
    "divides(2, x1) || divides(3, x1)",
    "!divides(2, x1)",
    "if x1 > x2 then x1 else x2",
    "if divides(2, x1) then 1 else -1",
    "if x1 == 1 then x1 == 1 else x2 == 1",
    "(if x1 > 2 then 1 else 0) + 1",
    "1 / x1",
    "1 / (x1 * x2)",
    "2 + 1 / x1",
    "(2 + 1 / x1) * (3 + 1 / x2)",
    "0.5",
    "0.125 * x1",
    "x1 / 2.5 - 1",
    "1 + 2 * 3 - 4 / 5 % 6",
    "x1 >= 3 && x1 <= 10",
    "x1 != x2",
    "x1 + x2 + x3 == 3 * x1",
    "abs(-x1) == x1",
    "min(max(x1, 2), 5)",
    "pow(x1 + 1, 2) % 7 == 1",
    "x1 * (x2 + (x3 - 1))",
    "((x1))",
    "x1 % 2 == 0 || x1 % 3 == 0 && x1 % 5 == 0",
    "!!(x1 > 0)",
    "-1 * -x2",
    "1 - -1",
    "divides(x1, 12) && x1 > 1",
    "if x1 % 2 == 0 then x1 / 2 else 3 * x1 + 1",
];

fn arity_of(src: &str) -> usize {
    if src.split(|c: char| !c.is_alphanumeric()).any(|w| w == "n") {
        1
    } else {
        3
    }
}

#[test]
fn corpus_round_trips() {
    assert!(CORPUS.len() >= 50);
    for src in CORPUS {
        let arity = arity_of(src);
        let a = parse_expr(src, arity).unwrap_or_else(|e| panic!("{src}: {e}"));
        let printed = a.to_string();
        let b = parse_expr(&printed, arity).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(a, b, "{src} -> {printed}");
        assert_eq!(printed, b.to_string());
    }
}

const PRECEDENCE: &[(&str, &str)] = &[
    ("1 + 2 * 3", "1 + (2 * 3)"),
    ("1 * 2 + 3", "(1 * 2) + 3"),
    ("1 - 2 - 3", "(1 - 2) - 3"),
    ("1 / 2 / 3", "(1 / 2) / 3"),
    ("1 % 2 * 3", "(1 % 2) * 3"),
    ("1 + 2 % 3", "1 + (2 % 3)"),
    ("-x1 + 1", "(-x1) + 1"),
    ("-x1 * 2", "(-x1) * 2"),
    ("x1 + 1 < x2", "(x1 + 1) < x2"),
    ("x1 < x2 + 1", "x1 < (x2 + 1)"),
    ("x1 == 1 && x2 == 2", "(x1 == 1) && (x2 == 2)"),
    ("x1 == 1 || x2 == 2 && x3 == 3", "(x1 == 1) || ((x2 == 2) && (x3 == 3))"),
    ("x1 == 1 && x2 == 2 || x3 == 3", "((x1 == 1) && (x2 == 2)) || (x3 == 3)"),
    ("!x1 == 1 || x2 == 2", "(!x1 == 1) || (x2 == 2)"),
    ("!divides(2, x1) && x2 > 1", "(!divides(2, x1)) && (x2 > 1)"),
    ("x1 % 2 == 0", "(x1 % 2) == 0"),
    ("if x1 > 1 then x1 + 1 else x2 * 2", "if (x1 > 1) then (x1 + 1) else (x2 * 2)"),
    ("if x1 > 1 then 1 else 2 + 3", "if (x1 > 1) then 1 else (2 + 3)"),
    ("abs(x1) + 1", "(abs(x1)) + 1"),
    ("2 * pow(x1, 2) - 1", "(2 * (pow(x1, 2))) - 1"),
    ("1 - -1", "1 - (-1)"),
    ("x1 * -x2 + x3", "(x1 * (-x2)) + x3"),
    ("x1 >= x2 || x1 <= x3", "(x1 >= x2) || (x1 <= x3)"),
];

#[test]
fn precedence_table() {
    assert!(PRECEDENCE.len() >= 20);
    for (src, reference) in PRECEDENCE {
        let a = parse_expr(src, 3);
        let b = parse_expr(reference, 3);
        match (a, b) {
            (Ok(a), Ok(b)) => assert_eq!(a, b, "{src} vs {reference}"),
            // `!x1` is a type error either way.
            (Err(_), Err(_)) => assert!(src.starts_with("!x1")),
            (a, b) => panic!("{src}: {a:?} vs {reference}: {b:?}"),
        }
    }
}

#[test]
fn constructed_trees() {
    let x = |i| Box::new(Expr::Coord(i));
    let e = parse_expr("x1 + x2 * 3 < 10 && !divides(2, x1)", 2).unwrap();
    let expected = Expr::Logic(
        LogicOp::And,
        Box::new(Expr::Compare(
            CmpOp::Lt,
            Box::new(Expr::Binary(
                BinOp::Add,
                x(0),
                Box::new(Expr::Binary(BinOp::Mul, x(1), Box::new(Expr::Int(3)))),
            )),
            Box::new(Expr::Int(10)),
        )),
        Box::new(Expr::Not(Box::new(Expr::Call(Func::Divides, vec![Expr::Int(2), Expr::Coord(0)])))),
    );
    assert_eq!(e, expected);
    assert_eq!(e.ty(), Type::Bool);
}

#[test]
fn evaluation_is_deterministic() {
    for src in CORPUS {
        let arity = arity_of(src);
        let e = parse_expr(src, arity).unwrap();
        for c in [[1u64, 2, 3], [4, 4, 4], [12, 5, 7]] {
            let el = Element::new(&c[..arity]);
            let a = eval_expr(&e, &el);
            let b = eval_expr(&e, &el);
            match (a, b) {
                (Ok(Value::Real(u)), Ok(Value::Real(v))) => assert_eq!(u.to_bits(), v.to_bits()),
                (a, b) => assert_eq!(format!("{a:?}"), format!("{b:?}")),
            }
        }
    }
}

fn num_leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..1000).prop_map(Expr::Int),
        (0u32..64).prop_map(|k| Expr::Real(f64::from(k) / 8.0 + 0.125)),
        (0usize..3).prop_map(Expr::Coord),
    ]
}

fn num_expr() -> BoxedStrategy<Expr> {
    num_leaf().prop_recursive(4, 32, 3, |inner| {
        let op = prop_oneof![
            Just(BinOp::Add),
            Just(BinOp::Sub),
            Just(BinOp::Mul),
            Just(BinOp::Div),
            Just(BinOp::Rem)
        ];
        let func = prop_oneof![Just(Func::Min), Just(Func::Max), Just(Func::Pow)];
        prop_oneof![
            (op, inner.clone(), inner.clone()).prop_map(|(o, l, r)| Expr::Binary(o, Box::new(l), Box::new(r))),
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            inner.clone().prop_map(|e| Expr::Call(Func::Abs, vec![e])),
            inner.clone().prop_map(|e| Expr::Call(Func::Sin, vec![e])),
            (func, inner.clone(), inner.clone()).prop_map(|(f, a, b)| Expr::Call(f, vec![a, b])),
            (bool_leaf(inner.clone()), inner.clone(), inner)
                .prop_map(|(c, a, b)| Expr::If(Box::new(c), Box::new(a), Box::new(b))),
        ]
    })
    .boxed()
}

fn bool_leaf(num: impl Strategy<Value = Expr> + Clone) -> impl Strategy<Value = Expr> {
    let cmp = prop_oneof![
        Just(CmpOp::Eq),
        Just(CmpOp::Ne),
        Just(CmpOp::Lt),
        Just(CmpOp::Le),
        Just(CmpOp::Gt),
        Just(CmpOp::Ge)
    ];
    prop_oneof![
        (cmp, num.clone(), num.clone()).prop_map(|(o, l, r)| Expr::Compare(o, Box::new(l), Box::new(r))),
        (num.clone(), num).prop_map(|(a, b)| Expr::Call(Func::Divides, vec![a, b])),
    ]
}

fn bool_expr() -> impl Strategy<Value = Expr> {
    bool_leaf(num_expr()).prop_recursive(3, 16, 2, |inner| {
        let op = prop_oneof![Just(LogicOp::And), Just(LogicOp::Or)];
        prop_oneof![
            (op, inner.clone(), inner.clone()).prop_map(|(o, l, r)| Expr::Logic(o, Box::new(l), Box::new(r))),
            inner.prop_map(|e| Expr::Not(Box::new(e))),
        ]
    })
}

proptest! {
    #[test]
    fn printed_numeric_trees_reparse(e in num_expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_expr(&printed, 3).unwrap(), e);
    }

    #[test]
    fn printed_boolean_trees_reparse(e in bool_expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_expr(&printed, 3).unwrap(), e);
    }
}
