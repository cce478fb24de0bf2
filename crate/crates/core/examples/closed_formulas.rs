//! Evaluate the closed-form singularity counts for curves in the singular
//! locus.
//!
//! For a foliation of degree k on projective n-space, the number of
//! isolated singularities (counted with multiplicity) is a geometric sum.
//! A curve of degree d, genus g, and twist ell inside the singular locus
//! absorbs part of that budget: the closed forms below give the count on
//! the exceptional divisor after blowing up along the curve, the count of
//! the transformed foliation, the part away from the curve, and the net
//! contribution of the curve. A negative grand total proves that no
//! foliation with the prescribed curves can have only isolated
//! singularities elsewhere.
//!
//! Run with: cargo run -p foliations --example closed_formulas

use foliations::counts::{
    blowup_milnor_total, curve_contribution, exceptional_milnor_total,
    isolated_singularity_total, off_curve_milnor_total, projective_milnor_total, CurveData,
};

fn main() {
    let (n, k) = (4u32, 3i64);
    println!("foliations of degree {k} on projective {n}-space");
    println!("all-isolated total: {}", projective_milnor_total(n, k));

    let curves = [
        CurveData {
            d: 4,
            g: 1,
            ell: 1,
            branches: vec![2],
        },
        CurveData {
            d: 1,
            g: 0,
            ell: 2,
            branches: vec![],
        },
    ];

    for (i, c) in curves.iter().enumerate() {
        println!();
        println!(
            "curve {} (d = {}, g = {}, ell = {}):",
            i + 1,
            c.d,
            c.g,
            c.ell
        );
        println!(
            "  exceptional  {}",
            exceptional_milnor_total(n, k, c.ell, c.d, c.g)
        );
        println!(
            "  blow-up      {}",
            blowup_milnor_total(n, k, c.ell, c.d, c.g)
        );
        println!(
            "  off-curve    {}",
            off_curve_milnor_total(n, k, c.ell, c.d, c.g)
        );
        println!("  contribution {}", curve_contribution(n, k, c));
    }

    let grand = isolated_singularity_total(n, k, &curves);
    println!();
    println!("isolated singularities left beside both curves: {grand}");
    if grand < 0.into() {
        println!("=> impossible: no such foliation has only isolated extra singularities");
    }
}
