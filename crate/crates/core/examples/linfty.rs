//! Derived brackets of a matched pair: the Maurer-Cartan equation picks out deformation maps,
//! and twisting by one of them shifts the equation.

use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::deformation::{check_deformation_map, grid_matrix, DeformationMap};
use lie_yamaguti::field::Field;
use lie_yamaguti::linfty::{build_vdata, derived_brackets, twisted_complex_dims};
use lie_yamaguti::matched_pair::MatchedPair;
use lie_yamaguti::representation::Representation;

fn main() {
    let q = Field::Rational;
    let a = LieYamagutiAlgebra::from_lie(BinaryBracket::from_i64(q, 2, &[(0, 1, 1, 1)]), LieMode::IteratedBracket)
        .unwrap();
    let mp = MatchedPair::semidirect(Representation::adjoint(a)).unwrap();
    let ls = derived_brackets(&build_vdata(&mp).unwrap());

    let mut solutions = Vec::new();
    for k in 0..81u32 {
        let e: Vec<i64> = (0..4).map(|s| (k / 3u32.pow(s) % 3) as i64 - 1).collect();
        let r = grid_matrix(q, 2, 2, &e);
        let mc = ls.mc_equation(&r).unwrap().is_zero();
        assert_eq!(mc, check_deformation_map(&mp, &r).unwrap().passed());
        if mc {
            solutions.push(r);
        }
    }
    println!("{} Maurer-Cartan elements with entries in {{-1, 0, 1}}", solutions.len());

    let r = solutions.iter().find(|r| !r.is_zero()).unwrap().clone();
    let twisted = ls.twist(&DeformationMap::new(mp, r).unwrap()).unwrap();
    println!("cohomology of the twisted unary bracket: {:?}", twisted_complex_dims(&twisted, 3).unwrap());
}
