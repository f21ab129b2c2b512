// Velocity addition and time dilation under a change of frame.

use berwald_moor::kinematics::velocity_modulus_h4;
use berwald_moor::transforms::{add_velocities, modulus_after_boost, time_dilation_factor};
use berwald_moor::{FrameVelocity, Velocity3};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (Velocity3::ZERO, FrameVelocity::from_components(0.5, 0.0, 0.0)?),
        (Velocity3::new(0.5, 0.0, 0.0), FrameVelocity::from_components(0.3, 0.0, 0.0)?),
        (Velocity3::new(0.0, 0.2, 0.0), FrameVelocity::from_components(0.3, 0.0, 0.0)?),
        (Velocity3::new(0.1, -0.2, 0.15), FrameVelocity::from_components(0.1, 0.2, 0.3)?),
    ];
    for (v, frame) in cases {
        let added = add_velocities(v, frame)?;
        let modulus = modulus_after_boost(v, frame)?;
        let dilation = time_dilation_factor(v, frame)?;
        println!(
            "v = {:?}, V = {:?}\n  v' = ({:.6}, {:.6}, {:.6}), |v'| = {modulus:.6}, dt'/dt = {dilation:.7}",
            v.to_array(),
            frame.velocity().to_array(),
            added.v1,
            added.v2,
            added.v3,
        );
        assert!((velocity_modulus_h4(added)? - modulus).abs() <= 1e-12);
    }
    let sr = (0.5 + 0.3) / (1.0 + 0.5 * 0.3);
    println!("collinear SR reference for 0.5 (+) 0.3: {sr:.6}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
