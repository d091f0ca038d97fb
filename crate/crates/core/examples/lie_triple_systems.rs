use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::field::Field;
use lie_yamaguti::linalg::Matrix;
use lie_yamaguti::lts::{LieTripleSystem, LtsMatchedPair, LtsRepresentation};

fn main() {
    let f = Field::prime(3).unwrap();
    // The triple bracket of sl2 is a Lie triple system.
    let sl2 = LieYamagutiAlgebra::from_lie(
        BinaryBracket::from_i64(f, 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]),
        LieMode::IteratedBracket,
    )
    .unwrap();
    let system = LieTripleSystem::new(sl2.ternary().clone()).unwrap();
    println!("triple system axioms: {}", system.check());

    let adjoint = LtsRepresentation::adjoint(system.clone());
    let flat = LieTripleSystem::zero(f, 3);
    let pair = LtsMatchedPair::new(adjoint, LtsRepresentation::zero(flat, 3)).unwrap();
    let ambient = pair.bicrossed().unwrap();
    println!("bicrossed system of dim {}: {}", ambient.dim(), ambient.check());
    let r = Matrix::zeros(f, 3, 3);
    println!("zero map: {}", pair.check_deformation_map(&r).unwrap());
    println!("embedded pair validates: {}", pair.to_ly().is_ok());
}
