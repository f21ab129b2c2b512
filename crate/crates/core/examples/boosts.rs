// Frame changes as group elements and as matrices.

use berwald_moor::metric::interval4_h4_orthonormal;
use berwald_moor::transforms::{
    apply_group, boost_matrix, group_from_velocity, inverse_boost_matrix,
    inverse_group_from_velocity, lorentz_boost_sr,
};
use berwald_moor::{Event4, FrameVelocity, Matrix4};

fn print_matrix(label: &str, m: &Matrix4) {
    println!("{label}");
    for row in m.0 {
        println!("  [{:>9.6} {:>9.6} {:>9.6} {:>9.6}]", row[0], row[1], row[2], row[3]);
    }
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let axis = FrameVelocity::from_components(0.6, 0.0, 0.0)?;
    let g = group_from_velocity(axis);
    println!("eps for V = (0.6, 0, 0): {:?}", g.eps());
    let moved = apply_group(&g, Event4::new(1.0, 0.0, 0.0, 0.0));
    println!("rest event (1, 0, 0, 0) -> {:?}", moved.to_array());

    print_matrix("H4 boost, V = (0.6, 0, 0)", &boost_matrix(axis));
    print_matrix("SR boost, V1 = 0.6", &lorentz_boost_sr(0.6)?);
    print_matrix("difference", &(boost_matrix(axis) - lorentz_boost_sr(0.6)?));

    let frame = FrameVelocity::from_components(0.1, 0.2, 0.3)?;
    let e = Event4::new(1.0, 0.2, -0.3, 0.4);
    let there = apply_group(&group_from_velocity(frame), e);
    let back = apply_group(&inverse_group_from_velocity(frame), there);
    let negated = FrameVelocity::new(-frame.velocity())?;
    let not_back = apply_group(&group_from_velocity(negated), there);
    println!(
        "S^4 before {:.12}, after {:.12}",
        interval4_h4_orthonormal(e),
        interval4_h4_orthonormal(there)
    );
    println!("reverse transition returns {:?}", back.to_array());
    println!("transition with -V gives   {:?}", not_back.to_array());
    let product = boost_matrix(frame) * inverse_boost_matrix(frame);
    println!(
        "|M M^-1 - I|_max = {:.2e}",
        (product - Matrix4::identity()).max_abs()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
