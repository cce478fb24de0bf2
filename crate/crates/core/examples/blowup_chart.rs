//! Blow up an invariant axis and transform a vector field into a chart.
//!
//! The blowup of affine space along the last coordinate axis is covered by
//! one chart per normal direction. In chart j the substitution keeps the
//! j-th coordinate and scales the other normals by it. A vector field
//! whose components vanish on the axis transforms in two stages: the total
//! transform solves the chain rule through the substitution, and the
//! strict transform divides out the largest common power of the
//! exceptional coordinate (the twist).
//!
//! Run with: cargo run -p foliations --example blowup_chart

use foliations::blowup::{AxisCurve, BlowupChart, MultiplicityProfile};
use foliations::matrix::jacobian;
use foliations::parser::parse_polynomial;
use foliations::{MultiPoly, PolyRing};

fn main() {
    let ring = PolyRing::new(&["z1", "z2", "z3"]).unwrap();
    let components: Vec<_> = [
        "z1^2 + z1*z2 + z2^2",
        "2*z1*z2 + z2^2",
        "z1*(1 + z1 + 2*z3) + z2*(1 + z2 + 3*z3)",
    ]
    .iter()
    .map(|s| parse_polynomial(&ring, s).unwrap())
    .collect();

    let curve = AxisCurve::new(ring.clone(), 2).unwrap();
    let profile = MultiplicityProfile::new(&curve, &components).unwrap();
    println!("case {} with twist {}", profile.case(), profile.twist());

    for j in curve.normals() {
        let chart = BlowupChart::new(&curve, j).unwrap();
        println!();
        println!("chart {} (kept coordinate {}):", j + 1, ring.var_name(j));
        for (name, image) in ring.var_names().iter().zip(chart.substitution()) {
            println!("  {name} -> {image}");
        }

        let total = chart.total_transform(&components).unwrap();
        println!("  total transform:");
        for t in &total {
            println!("    {t}");
        }

        let strict = chart.strict_transform(&components).unwrap();
        println!(
            "  strict transform (divided by {}^{}):",
            chart.ring().var_name(j),
            strict.divided_power
        );
        for s in &strict.components {
            println!("    {s}");
        }

        // The chain rule certifies the total transform: pushing it through
        // the Jacobian of the substitution recovers the pulled-back field.
        let jac = jacobian(chart.substitution(), &[0, 1, 2]);
        let ok = (0..3).all(|row| {
            let mut carried = MultiPoly::zero(chart.ring());
            for (col, t) in total.iter().enumerate() {
                carried = &carried + &(jac.at(row, col) * t);
            }
            carried == chart.pullback(&components[row])
        });
        println!("  chain rule verified: {}", if ok { "yes" } else { "NO" });
    }
}
