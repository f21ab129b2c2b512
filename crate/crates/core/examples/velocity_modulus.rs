// H4 velocity modulus next to the Euclidean (special-relativity) one.

use berwald_moor::kinematics::{interval_from_velocity_h4, velocity_modulus_h4, w_form};
use berwald_moor::minkowski::mink_velocity_modulus;
use berwald_moor::Velocity3;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let samples = [
        Velocity3::new(0.6, 0.0, 0.0),
        Velocity3::new(0.1, 0.2, 0.3),
        Velocity3::new(-0.1, -0.2, -0.3),
        Velocity3::new(0.5, 0.5, 0.5),
        Velocity3::new(0.5, 0.5, 0.0),
        Velocity3::new(0.9, 0.9, 0.0),
    ];
    println!("{:>18}  {:>10}  {:>9}  {:>9}  class", "v", "W", "h4", "sr");
    for v in samples {
        let w = w_form(v);
        let h4 = velocity_modulus_h4(v)
            .map(|m| format!("{m:.6}"))
            .unwrap_or_else(|e| e.kind().to_string());
        println!(
            "{:>18}  {:>10.6}  {:>9}  {:>9.6}  {}",
            format!("{:?}", v.to_array()),
            w.w,
            h4,
            mink_velocity_modulus(v),
            v.classify().as_str()
        );
    }
    // proper time over two units of coordinate time
    let tau = interval_from_velocity_h4(2.0, Velocity3::new(0.1, 0.2, 0.3))?;
    println!("interval over dt = 2 at (0.1, 0.2, 0.3): {tau:.9}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
