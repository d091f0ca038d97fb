use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::cohomology::{cohomology_dims, defmap_cohomology_dims};
use lie_yamaguti::deformation::DeformationMap;
use lie_yamaguti::field::Field;
use lie_yamaguti::linalg::Matrix;
use lie_yamaguti::matched_pair::MatchedPair;
use lie_yamaguti::representation::Representation;

fn main() {
    let q = Field::Rational;
    let sl2 = LieYamagutiAlgebra::from_lie(
        BinaryBracket::from_i64(q, 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]),
        LieMode::IteratedBracket,
    )
    .unwrap();
    let adjoint = Representation::adjoint(sl2.clone());
    println!("sl2 with adjoint coefficients: {:?}", cohomology_dims(&sl2, &adjoint, 2).unwrap());

    let a = LieYamagutiAlgebra::from_lie(BinaryBracket::from_i64(q, 2, &[(0, 1, 1, 1)]), LieMode::IteratedBracket)
        .unwrap();
    let mp = MatchedPair::semidirect(Representation::adjoint(a)).unwrap();
    let zero = DeformationMap::new(mp, Matrix::zeros(q, 2, 2)).unwrap();
    println!("zero deformation map: {:?}", defmap_cohomology_dims(&zero, 3).unwrap());
}
