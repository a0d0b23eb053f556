//! The text syntax for cocycles and the command-line driver, used as a
//! library.
//!
//! ```text
//! cargo run --example cli_expressions
//! ```

use qsym::algebra::{GroupSpec, QContext};
use qsym::cli::{parse_cocycle, parse_skew_cocycle, print_cocycle, print_skew_cocycle, run, Env};

fn main() {
    let ctx = QContext::symbolic(3, 3).unwrap();
    let env = Env::new(&ctx, None);

    let x = parse_cocycle(env, "2*x2*x1 ^ dx(1,2) + q12 * x3^2 ^ dx(1,2)").unwrap();
    println!("normalized: {}", print_cocycle(&x));

    for bad in ["x1 ^ dx(1,4)", "x1 ^ dx(2,1)"] {
        if let Err(e) = parse_cocycle(env, bad) {
            println!("{bad:?}: {e}");
        }
    }

    let group = GroupSpec::new(vec![3]).unwrap();
    let env = Env::new(&ctx, Some(&group));
    let y = parse_skew_cocycle(env, &group, "zeta * x1 # g(2) ^ dx(3)").unwrap();
    println!("skew: {}", print_skew_cocycle(&y));

    let out = run(["qsym", "dq", "--i", "1", "--mono", "x1^2*x2"]);
    print!("qsym dq (exit {}): {}", out.code, out.stdout);
    let out = run(["qsym", "--json", "bracket", "--alpha", "x1 ^ dx(1)", "--beta", "1 ^ dx(1,2)"]);
    print!("qsym --json bracket (exit {}): {}", out.code, out.stdout);
}
