//! Enumerate the deformation maps of a small semidirect pair over GF(2) and inspect the
//! structures each one induces.

use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::deformation::{enumerate_deformation_maps, rota_baxter_pair};
use lie_yamaguti::field::Field;
use lie_yamaguti::representation::Representation;

fn main() {
    let f = Field::prime(2).unwrap();
    let a = LieYamagutiAlgebra::from_lie(BinaryBracket::from_i64(f, 2, &[(0, 1, 1, 1)]), LieMode::IteratedBracket)
        .unwrap();
    // Deformation maps of this pair are the relative Rota-Baxter operators of weight 0.
    let mp = rota_baxter_pair(Representation::adjoint(a)).unwrap();
    let maps = enumerate_deformation_maps(&mp, 1 << 20).unwrap();
    println!("{} of 16 maps are deformation maps", maps.len());
    for dm in &maps {
        let induced = dm.induced_algebra();
        println!(
            "r = {:?}: induced algebra {}, induced representation {}",
            dm.map().entries().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            induced.check_axioms(),
            dm.induced_representation().check()
        );
    }
}
