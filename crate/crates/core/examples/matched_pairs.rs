//! Matched pairs from the three constructors, their bicrossed products, and the round trip
//! through the canonical matched pair of the block decomposition.

use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::field::Field;
use lie_yamaguti::matched_pair::MatchedPair;
use lie_yamaguti::representation::Representation;

fn main() {
    let f = Field::prime(3).unwrap();
    let a = LieYamagutiAlgebra::from_lie(BinaryBracket::from_i64(f, 2, &[(0, 1, 1, 1)]), LieMode::IteratedBracket)
        .unwrap();
    let pairs = [
        ("direct", MatchedPair::direct(a.clone(), a.clone()).unwrap()),
        ("semidirect", MatchedPair::semidirect(Representation::adjoint(a.clone())).unwrap()),
        ("action", MatchedPair::action(Representation::zero(a.clone(), 2), a.clone()).unwrap()),
    ];
    for (name, mp) in pairs {
        let ambient = mp.bicrossed().unwrap();
        let back = MatchedPair::canonical(&mp.block_inclusion().unwrap()).unwrap();
        println!(
            "{name}: compatibility {}, bicrossed {}, canonical pair recovers the actions: {}",
            mp.check(),
            ambient.check_axioms(),
            back.on_h().mu_all() == mp.on_h().mu_all() && back.on_g().rho_all() == mp.on_g().rho_all()
        );
    }
}
