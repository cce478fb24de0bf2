//! A tour of the exact commutative-algebra engine underneath the counts.
//!
//! Everything the library reports about singular loci reduces to four
//! ideal-theoretic operations: reduced bases, normal forms, elimination,
//! and saturation. This example runs each of them on small systems where
//! the answer is easy to confirm by hand.
//!
//! Run with: cargo run -p foliations --example groebner_tour

use foliations::groebner::{
    count_points_on_subspace, groebner_basis, saturate, Ideal, MonomialOrder,
};
use foliations::parser::parse_polynomial;
use foliations::PolyRing;

fn main() {
    let ring = PolyRing::new(&["x", "y", "z"]).unwrap();
    let parse = |s: &str| parse_polynomial(&ring, s).unwrap();

    // Reduced basis of the twisted-cubic-style system.
    let ideal = Ideal::new(
        ring.clone(),
        vec![parse("x*z - y^2"), parse("x^3 - y*z")],
    )
    .unwrap();
    let gb = groebner_basis(&ideal, MonomialOrder::DegRevLex);
    println!("reduced basis (degree-graded order):");
    for p in gb.polys() {
        println!("  {p}");
    }

    // Normal forms decide ideal membership.
    let member = parse("x^4 - x*y*z");
    let outsider = parse("x^2 + y^2");
    println!();
    println!("normal form of {member}: {}", gb.normal_form(&member));
    println!("normal form of {outsider}: {}", gb.normal_form(&outsider));

    // Elimination projects a graph onto its image: here t is eliminated
    // from the parametrization x = t, y = t^2 of a plane parabola.
    let tring = PolyRing::new(&["t", "x", "y"]).unwrap();
    let graph = Ideal::new(
        tring.clone(),
        vec![
            parse_polynomial(&tring, "x - t").unwrap(),
            parse_polynomial(&tring, "y - t^2").unwrap(),
        ],
    )
    .unwrap();
    let image = foliations::groebner::eliminate(&graph, &[0]).unwrap();
    println!();
    println!("eliminating the parameter from x = t, y = t^2:");
    for p in image.gens() {
        println!("  {p}");
    }

    // Saturation strips embedded coordinate components: (x*y, x*z) is a
    // plane plus an embedded line; saturating by (y, z) keeps the plane.
    let mixed = Ideal::new(ring.clone(), vec![parse("x*y"), parse("x*z")]).unwrap();
    let axis = Ideal::coordinate_subspace(&ring, &[1, 2]);
    let plane = saturate(&mixed, &axis).unwrap();
    println!();
    println!("saturating (x*y, x*z) by (y, z):");
    for p in groebner_basis(&plane, MonomialOrder::DegRevLex).polys() {
        println!("  {p}");
    }

    // Counting: a zero-dimensional system has finitely many solutions,
    // weighted by multiplicity, and the count can be restricted to the
    // locus where chosen coordinates vanish.
    let zerodim = Ideal::new(
        ring.clone(),
        vec![parse("x^2 - x"), parse("y^2 - y"), parse("z")],
    )
    .unwrap();
    let all = groebner_basis(&zerodim, MonomialOrder::DegRevLex)
        .colength()
        .unwrap();
    let on_x0 = count_points_on_subspace(&zerodim, &[0]).unwrap();
    println!();
    println!("solutions of x^2 = x, y^2 = y, z = 0: {all}");
    println!("of these, on the plane x = 0:         {on_x0}");
}
