//! A seeded grid over Z_N, Z_a x Z_b and D_n with both theorems and
//! r in {0, beta/4, beta/2}; every certificate is re-verified.
//!
//! cargo run --release --example parameter_sweep

use bohrcert::sweep::{pass_rate, random_grid, rows_to_csv, run_all, GridConfig};

fn main() -> bohrcert::Result<()> {
    let config = GridConfig { count: 25, seed: 2024, ..GridConfig::default() };
    let rows = run_all(&random_grid(&config)?);
    let csv = rows_to_csv(&rows);
    for line in csv.lines().take(9) {
        println!("{line}");
    }
    println!("... {} rows, pass rate {}", rows.len(), pass_rate(&rows));
    Ok(())
}
