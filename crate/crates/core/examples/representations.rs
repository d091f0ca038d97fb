use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::field::Field;
use lie_yamaguti::linalg::Matrix;
use lie_yamaguti::representation::Representation;

fn main() {
    let f = Field::prime(5).unwrap();
    let b = BinaryBracket::from_i64(f, 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]);
    let sl2 = LieYamagutiAlgebra::from_lie(b, LieMode::IteratedBracket).unwrap();

    let adjoint = Representation::adjoint(sl2.clone());
    println!("adjoint: {}", adjoint.check());

    let rho = vec![
        Matrix::from_i64(f, &[&[1, 0], &[0, -1]]),
        Matrix::from_i64(f, &[&[0, 1], &[0, 0]]),
        Matrix::from_i64(f, &[&[0, 0], &[1, 0]]),
    ];
    let standard = Representation::from_lie_module(sl2, rho).unwrap();
    println!("standard module: {}", standard.check());
    println!("D(e1, e2) on the module:");
    let d = standard.derived(0, 1);
    for i in 0..d.rows() {
        println!("  {}", d.row(i).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
    }

    let semidirect = standard.semidirect().unwrap();
    println!("semidirect product of dim {}: {}", semidirect.dim(), semidirect.check_axioms());
}
