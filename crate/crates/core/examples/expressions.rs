//! The expression language used by the command line: parse, type-check,
//! evaluate and pretty-print.
//!
//! `cargo run --example expressions`

use netdensity::directed::Element;
use netdensity::expr::{eval_expr, parse_expr};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cases: [(&str, usize, &[u64]); 5] = [
        ("1/n", 1, &[4]),
        ("n % 2 == 0 || divides(3, n)", 1, &[9]),
        ("abs(pow(-1, n))/n", 1, &[3]),
        ("if x1==x2 && x2==x3 then 1 else 1/(x1+x2+x3)", 3, &[1, 2, 3]),
        ("-x1 * 2 + max(x1, x2) >= 0", 2, &[5, 7]),
    ];
    for (src, arity, at) in cases {
        let e = parse_expr(src, arity)?;
        let v = eval_expr(&e, &Element::new(at))?;
        println!("{src}\n  = {e}\n  at {} → {v:?}", Element::new(at));
        assert_eq!(parse_expr(&e.to_string(), arity)?, e);
    }
    for bad in ["1 +", "n > 1 + (n < 2)", "y * 2", "1 < n < 3"] {
        println!("{bad:<18} {}", parse_expr(bad, 1).unwrap_err());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
