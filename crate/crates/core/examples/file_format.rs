//! Parse the plain-text algebra and bundle formats, then write them back canonically.

use lie_yamaguti::io::{parse_algebra, parse_bundle, write_algebra, write_bundle};

const ALGEBRA: &str = "\
format 1
field Q
dim 2
# [e1, e2] = e2 and {e1, e2, e1} = -e2
b 1 2 2 1
t 1 2 1 2 -1
";

const BUNDLE: &str = "\
format 1
field GF 2
algebra g
dim 2
b 1 2 2 1
algebra h
dim 1
rho 1 1 1 1
map r 1 2
row 0 1
";

fn main() {
    let a = parse_algebra(ALGEBRA).unwrap();
    println!("{}", a.check_axioms());
    print!("{}", write_algebra(&a));
    assert_eq!(parse_algebra(&write_algebra(&a)).unwrap(), a);

    match parse_bundle(BUNDLE) {
        Ok(bundle) => {
            print!("{}", write_bundle(&bundle));
            println!("matched pair: {}", bundle.matched_pair().unwrap().check());
        }
        Err(e) => println!("{e}"),
    }
    match parse_algebra("format 1\nfield Q\ndim 2\nb 1 2 2 1\nb 2 1 2 1\n") {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("inconsistent double entry: {e}"),
    }
}
