//! Derive the singularity counts by integration in the Chow ring of a
//! blowup.
//!
//! Blowing up projective n-space along a smooth curve produces a variety
//! whose Chow ring is generated by the pulled-back hyperplane class and
//! the exceptional divisor class. The total Chern class of the tangent
//! bundle twisted by the pullback of O(k - 1 + ell) integrates to the
//! number of singularities of the transformed foliation; the same
//! computation restricted to the exceptional divisor counts the part
//! sitting over the curve. This example evaluates both integrals
//! symbolically and checks the closed forms against them.
//!
//! Run with: cargo run -p foliations --example chow_integrals

use foliations::chow::{
    blowup_milnor_total, chern_classes_blowup, chern_classes_exceptional,
    exceptional_milnor_total, BlowupGeometry,
};
use foliations::counts;

fn main() {
    // A quartic curve of genus one, twist one, in projective 4-space.
    let geom = BlowupGeometry::new(4, 3, 1, 4, 1).unwrap();
    println!(
        "blowup of P^{} along a curve with d = {}, g = {}, twist {}",
        geom.n(),
        geom.d(),
        geom.g(),
        geom.ell()
    );
    println!("degree of the normal-bundle twist: {}", geom.normal_degree());

    println!();
    println!("Chern classes upstairs (H = hyperplane, E = exceptional):");
    for (i, c) in chern_classes_blowup(&geom).iter().enumerate() {
        println!("  c_{i} = {c}");
    }

    println!();
    println!("Chern classes on the exceptional divisor:");
    for (i, c) in chern_classes_exceptional(&geom).iter().enumerate() {
        println!("  c_{i} = {c}");
    }

    let on_divisor = exceptional_milnor_total(&geom);
    let upstairs = blowup_milnor_total(&geom);
    println!();
    println!("integral over the exceptional divisor: {on_divisor}");
    println!("integral over the blowup:              {upstairs}");

    let closed_exc =
        counts::exceptional_milnor_total(geom.n(), geom.k(), geom.ell(), geom.d(), geom.g());
    let closed_up =
        counts::blowup_milnor_total(geom.n(), geom.k(), geom.ell(), geom.d(), geom.g());
    println!();
    println!("closed forms: exceptional {closed_exc}, blow-up {closed_up}");
    println!(
        "agreement: {}",
        if on_divisor == closed_exc && upstairs == closed_up {
            "yes"
        } else {
            "NO"
        }
    );
}
