// Sample the simultaneity surface on a grid and export it as CSV, next to
// the flat Minkowski surface for the same grid.

use std::path::PathBuf;

use berwald_moor::mesh::{write_mesh_file, MeshFormat};
use berwald_moor::simultaneity::{sample_flat_surface, sample_surface, AxisRange, SampleStatus};
use berwald_moor::{GridSpec, ObserverScale};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let scale = ObserverScale::new(1.0)?;
    let axis = AxisRange::new(-0.5, 0.5, 11)?;
    let grid = GridSpec::new(axis, axis, AxisRange::new(-0.3, 0.3, 3)?)?;
    let h4 = sample_surface(scale, &grid);
    let flat = sample_flat_surface(scale, &grid);

    let ok = h4.iter().filter(|s| s.status == SampleStatus::Ok).count();
    let max_x0 = h4.iter().filter_map(|s| s.x0).fold(0.0f64, |m, x| m.max(x.abs()));
    println!("{} nodes, {ok} inside the causal region, max |x0| = {max_x0:.4}", h4.len());

    let dir = std::env::temp_dir().join(format!("h4-surface-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let files: [(PathBuf, _); 2] = [(dir.join("h4.csv"), &h4), (dir.join("minkowski.csv"), &flat)];
    for (path, samples) in files {
        write_mesh_file(&path, samples, MeshFormat::Csv)?;
        let text = std::fs::read_to_string(&path)?;
        println!("{}: {} rows", path.display(), text.lines().count() - 1);
        print!("{}", text.lines().take(3).map(|l| format!("  {l}\n")).collect::<String>());
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
