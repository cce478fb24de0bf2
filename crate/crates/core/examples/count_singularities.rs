//! Count singularities of a foliation exactly and compare with the closed
//! forms.
//!
//! Three counts meet here. The isolated singularities away from the
//! invariant line are counted chart by chart as the colength of a
//! saturated singular ideal. The singularities of the transformed
//! foliation sitting on the exceptional divisor of the blowup along the
//! line are counted the same way in blowup charts. Closed-form expressions
//! in the degree and twist predict both numbers, and their sum, without
//! touching a single polynomial.
//!
//! Run with: cargo run -p foliations --example count_singularities

use foliations::blowup::milnor_sum_on_exceptional;
use foliations::counts;
use foliations::foliation::{isolated_milnor_total, CoordinateLine, ProjectiveFoliation};
use foliations::parser::parse_polynomial;
use foliations::PolyRing;

fn main() {
    let ring = PolyRing::new(&["z1", "z2", "z3"]).unwrap();
    let components: Vec<_> = [
        "z1^3 + z1^2*z2 + z1*z2^2 + z2^3",
        "2*z1^2*z2 + z1*z2^2 + z2^3",
        "z1^2*(1 + z1 + 3*z3) + z1*z2*(2 + z3) + z2^2*(3 + z3)",
    ]
    .iter()
    .map(|s| parse_polynomial(&ring, s).unwrap())
    .collect();

    let degree = 3;
    let fol = ProjectiveFoliation::from_chart0(ring.clone(), components, degree).unwrap();

    // The invariant curve is the closure of the z3-axis: the line where
    // the homogeneous coordinates 1 and 2 vanish.
    let line = CoordinateLine::new(3, &[1, 2]).unwrap();

    let isolated = isolated_milnor_total(&fol, &[line]).unwrap();
    println!("isolated singularities off the line:");
    for (m, count) in isolated.per_chart.iter().enumerate() {
        println!("  chart {}: {count}", m + 1);
    }
    println!("  total: {}", isolated.total);

    let exceptional = milnor_sum_on_exceptional(&fol, 2).unwrap();
    println!();
    println!("on the exceptional divisor (twist {}):", exceptional.twist);
    for (j, count) in &exceptional.near_charts {
        println!("  near chart {}: {count}", j + 1);
    }
    for (j, count) in &exceptional.far_charts {
        println!("  far chart {}: {count}", j + 1);
    }
    println!("  total: {}", exceptional.total);

    // The closed forms at (n, k) = (3, 3) for a line with this twist.
    let (n, k) = (3u32, degree as i64);
    let ell = exceptional.twist as i64;
    let expected_exc = counts::exceptional_milnor_total(n, k, ell, 1, 0);
    let expected_off = counts::off_curve_milnor_total(n, k, ell, 1, 0);
    let expected_up = counts::blowup_milnor_total(n, k, ell, 1, 0);
    println!();
    println!("closed forms: exceptional {expected_exc}, off-curve {expected_off}, blow-up {expected_up}");

    let blowup_total = exceptional.total + isolated.total;
    println!(
        "engine:       exceptional {}, off-curve {}, blow-up {blowup_total}",
        exceptional.total, isolated.total
    );
    let agree = expected_exc == exceptional.total.into()
        && expected_off == isolated.total.into()
        && expected_up == blowup_total.into();
    println!("agreement: {}", if agree { "yes" } else { "NO" });
}
