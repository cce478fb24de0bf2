//! Classify a vector field along a coordinate axis it leaves invariant.
//!
//! The field is tangent to projective 3-space, written in the affine chart
//! where the axis of the last variable is the curve of interest. The
//! analysis reads off the vanishing orders of the components along the
//! curve, sorts the field into one of the five local cases, and extracts
//! the residual polynomials that decide between the generic and special
//! non-dicritical cases.
//!
//! Run with: cargo run -p foliations --example analyze_field

use foliations::blowup::{residual_polynomials, AxisCurve, MultiplicityProfile};
use foliations::parser::parse_polynomial;
use foliations::PolyRing;

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

    println!("field components:");
    for (name, f) in ring.var_names().iter().zip(&components) {
        println!("  d/d{name}: {f}");
    }

    // The curve is the z3-axis: both other coordinates vanish on it.
    let curve = AxisCurve::new(ring.clone(), 2).unwrap();
    let profile = MultiplicityProfile::new(&curve, &components).unwrap();

    let orders: Vec<_> = profile.orders().iter().map(|o| o.to_string()).collect();
    println!();
    println!("orders along the curve: {}", orders.join(", "));
    println!("case:                   {}", profile.case());
    println!("twist:                  {}", profile.twist());
    println!("curve multiplicity:     {}", profile.curve_multiplicity());
    println!("special:                {}", profile.is_special());

    // Residuals live on the exceptional divisor of the blowup; a case is
    // special precisely when none of them vanishes identically.
    let residuals = residual_polynomials(&curve, &components).unwrap();
    println!();
    println!("residuals in chart {}:", residuals.chart + 1);
    for (position, r) in &residuals.residuals {
        println!("  along {}: {r}", ring.var_name(*position));
    }
}
