//! Parsing, pretty-printing and evaluating group expressions.
//!
//! cargo run --example group_expressions

use centlat::expr::{eval_group_expr, parse_group_expr, EvalContext};

fn main() {
    let ctx = EvalContext::default();
    for text in [
        "cyclic(8)",
        "product(cyclic(2),cyclic(2))",
        "quotient(cover_dq(3), [x^2*y^2])",
        "quotient( dihedral(16), [x^-4] )",
        "quotient(dihedral(6), [y])",
        "quaternion(12)",
        "dihedral(",
    ] {
        match parse_group_expr(text) {
            Err(e) => println!("{text:<36} {e}"),
            Ok(expr) => match eval_group_expr(&expr, &ctx) {
                Ok(ev) => {
                    let gens: Vec<&str> = ev
                        .group
                        .generators()
                        .iter()
                        .map(|(l, _)| l.as_str())
                        .collect();
                    println!(
                        "{:<36} order {:>3}, generators {}",
                        expr.to_string(),
                        ev.group.order(),
                        gens.join(" ")
                    );
                }
                Err(e) => println!("{:<36} {e}", expr.to_string()),
            },
        }
    }
}
