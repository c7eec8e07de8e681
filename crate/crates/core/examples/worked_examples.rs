//! Every worked example as a pass/fail table, plus the golden CSV files that
//! `netdensity paper-examples --out <dir>` writes.
//!
//! `cargo run --release --example worked_examples`

use netdensity::cli::paper_examples;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let ex = paper_examples(0)?;
    for r in &ex.rows {
        println!("{:<4} {:<58} {}", r.status.to_string(), r.name, r.observed);
    }
    for n in &ex.notes {
        println!("note: {n}");
    }
    for (name, body) in &ex.golden {
        println!("{name}: {} lines", body.lines().count());
    }
    assert!(ex.all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
