// Distance to a parallel world line in H4 against the Euclidean norm.
//
// The H4 distance depends on the observer scale `T`; as `T` grows the
// simultaneity surface flattens and the Euclidean value is recovered.

use berwald_moor::simultaneity::{distance_asymmetry, distance_h4, simultaneity_x0};
use berwald_moor::{ObserverScale, SpatialOffset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = SpatialOffset::new(0.3, 0.2, 0.1);
    let euclid = d.norm_squared().sqrt();
    println!("offset (0.3, 0.2, 0.1), euclidean norm {euclid:.9}");
    println!("{:>6}  {:>13}  {:>12}  {:>11}", "T", "x0", "l", "l - euclid");
    for t in [1.0, 2.0, 4.0, 10.0, 100.0] {
        let scale = ObserverScale::new(t)?;
        let x0 = simultaneity_x0(scale, d)?;
        let l = distance_h4(scale, d)?;
        println!("{t:>6}  {x0:>13.6e}  {l:>12.9}  {:>11.3e}", l - euclid);
    }

    let unit = ObserverScale::new(1.0)?;
    let on_axis = distance_h4(unit, SpatialOffset::new(0.6, 0.0, 0.0))?;
    println!("on the x1 axis: l(0.6, 0, 0) = {on_axis}");
    assert_eq!(on_axis, 0.6);

    let (there, back) = distance_asymmetry(unit, d)?;
    println!("l(d) = {there:.17}, l(-d) = {back:.17}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
