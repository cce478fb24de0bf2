//! Build a family of vector fields that keeps a deformed curve in its
//! singular locus.
//!
//! Start from a complete intersection curve cut out by n-1 equations
//! containing the last coordinate axis, and a polynomial perturbation of
//! those equations with a parameter t. Composing a model field with the
//! deformation map and solving a Cramer system produces, for every t, a
//! field singular along the deformed curve. The construction is exact:
//! the linear system is verified symbolically in the parameter, and each
//! sample value of t is checked for degree preservation and membership of
//! the field components in the deformed curve ideal.
//!
//! Run with: cargo run -p foliations --example deformation_family

use foliations::deformation::{
    build_field_at, build_symbolic, verify_family, CompleteIntersectionData,
};
use foliations::parser::parse_polynomial;
use foliations::rational::{format_rational, integer, rat};
use foliations::PolyRing;

fn main() {
    let ring = PolyRing::new(&["z1", "z2", "z3"]).unwrap();
    let parse = |s: &str| parse_polynomial(&ring, s).unwrap();

    // The curve z1 = z1^2 + z2 = 0 (the z3-axis in disguised coordinates),
    // deformed by h = (1, z1^2).
    let data = CompleteIntersectionData::new(
        ring.clone(),
        vec![parse("z1"), parse("z1^2 + z2")],
        vec![parse("1"), parse("z1^2")],
    )
    .unwrap();
    let field = vec![parse("z1"), parse("z2"), parse("z1*z3")];

    let sym = build_symbolic(&field, &data).unwrap();
    println!("deformation map F_t: ({})", join(sym.map()));
    println!("determinant of the equation Jacobian: {}", sym.determinant());
    println!(
        "Cramer system satisfied symbolically: {}",
        if sym.satisfies_cramer() { "yes" } else { "NO" }
    );
    println!("built family: ({})", join(sym.components()));

    let base = build_field_at(&field, &data, &integer(0)).unwrap();
    println!();
    println!("member at t = 0: ({})", join(base.components()));
    println!("degree: {}", base.degree());

    let samples = [integer(1), rat(1, 2), integer(-3)];
    let report = verify_family(&field, &data, &samples).unwrap();
    println!();
    println!(
        "base member matches the unperturbed family: {}",
        if report.base_matches { "yes" } else { "NO" }
    );
    for s in &report.samples {
        let members: Vec<_> = s
            .component_in_curve_ideal
            .iter()
            .map(|&b| if b { "yes" } else { "NO" })
            .collect();
        println!(
            "t = {}: degree {} ({}), components in deformed curve ideal: {}",
            format_rational(&s.t),
            s.degree,
            if s.degree_preserved { "preserved" } else { "CHANGED" },
            members.join(", ")
        );
    }
}

fn join(polys: &[foliations::MultiPoly]) -> String {
    polys
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
