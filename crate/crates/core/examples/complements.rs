//! Classify the complements of `g` in a bicrossed product up to isomorphism.

use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::deformation::classify_complements;
use lie_yamaguti::field::Field;
use lie_yamaguti::matched_pair::MatchedPair;
use lie_yamaguti::representation::Representation;

fn main() {
    let f = Field::prime(2).unwrap();
    let a = LieYamagutiAlgebra::from_lie(BinaryBracket::from_i64(f, 2, &[(0, 1, 1, 1)]), LieMode::IteratedBracket)
        .unwrap();
    let mp = MatchedPair::semidirect(Representation::adjoint(a)).unwrap();
    let census = classify_complements(&mp.block_inclusion().unwrap(), 1 << 20).unwrap();
    println!("{} complements, factorization index {}", census.maps.len(), census.factorization_index);
    for (k, class) in census.classes.iter().enumerate() {
        println!("class {}:", k + 1);
        for &i in class {
            println!("  {:?}", census.complements[i].iter().map(|v| v.to_string()).collect::<Vec<_>>());
        }
    }
}
