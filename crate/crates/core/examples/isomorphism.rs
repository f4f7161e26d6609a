//! Group isomorphism search, and a round trip of a multiplication table
//! through its JSON form.
//!
//! cargo run --example isomorphism

use centlat::expr::{eval_str, EvalContext};
use centlat::formats::{parse_table_json, to_json_pretty, TableJson};
use centlat::group_isomorphic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = EvalContext::default();
    let pairs = [
        ("quotient(cover_dq(4), [x^4*y^2])", "quaternion(16)"),
        ("quotient(cover_dq(4), [y^2])", "dihedral(16)"),
        ("product(cyclic(2), cyclic(3))", "cyclic(6)"),
        ("dihedral(8)", "quaternion(8)"),
    ];
    for (a, b) in pairs {
        let ga = eval_str(a, &ctx)?.group;
        let gb = eval_str(b, &ctx)?.group;
        match group_isomorphic(&ga, &gb, ctx.cap)? {
            Some(h) => println!("{a} ≅ {b}: {:?}", h.map()),
            None => println!("{a} and {b} are not isomorphic"),
        }
    }

    let s3 = eval_str("dihedral(6)", &ctx)?.group;
    let text = to_json_pretty(&TableJson::from_group(&s3));
    let back = parse_table_json(&text)?;
    println!(
        "dihedral(6) through JSON: equal tables {}",
        back.table() == s3.table()
    );
    Ok(())
}
