// Intervals of a few events in H4 and in Minkowski space.
//
// ```text
// cargo run --example intervals
// ```

use berwald_moor::algebra::{cone_classify, to_isotropic};
use berwald_moor::metric::{interval2_minkowski, interval4_h4_orthonormal, interval_h4_isotropic};
use berwald_moor::Event4;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let events = [
        Event4::new(1.0, 0.0, 0.0, 0.0),
        Event4::new(1.0, 0.1, 0.2, 0.3),
        Event4::new(1.0, 0.6, 0.0, 0.0),
        Event4::new(2.0, 0.2, 0.3, -0.1),
        Event4::new(1.0, 0.5, 0.5, 0.0),
    ];
    println!("{:>24}  {:>22}  {:>9}  {:>9}  cone", "event", "xi", "S (H4)", "S (SR)");
    for e in events {
        let xi = to_isotropic(e);
        let s4 = interval4_h4_orthonormal(e);
        let product = interval_h4_isotropic(xi)?;
        assert!((s4 - product.fourth_power).abs() <= 1e-12 * s4.abs().max(1.0));
        println!(
            "{:>24}  {:>22}  {:>9.6}  {:>9.6}  {}",
            format!("{:?}", e.to_array()),
            format!("{:?}", xi.to_array()),
            product.value,
            interval2_minkowski(e).max(0.0).sqrt(),
            cone_classify(xi).as_str()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
