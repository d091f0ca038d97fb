//! Build a few algebras and check the four axioms, including one table that fails.

use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra, TernaryBracket};
use lie_yamaguti::field::Field;
use lie_yamaguti::graded::mc_check_pi;

fn main() {
    let q = Field::Rational;
    let sl2 = BinaryBracket::from_i64(q, 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]);
    for mode in [LieMode::IteratedBracket, LieMode::ZeroTernary] {
        let a = LieYamagutiAlgebra::from_lie(sl2.clone(), mode).unwrap();
        println!("sl2 with {mode:?}: {}", a.check_axioms());
    }

    // A ternary bracket that is not a derivation of itself.
    let b = BinaryBracket::zero(q, 2);
    let t = TernaryBracket::from_i64(q, 2, &[(0, 1, 0, 0, 1)]);
    let a = LieYamagutiAlgebra::new(b.clone(), t.clone()).unwrap();
    println!("table {{e1, e2, e1}} = e1: {}", a.check_axioms());
    println!("Maurer-Cartan test agrees: {}", mc_check_pi(&b, &t) == a.check_axioms().passed());
}
