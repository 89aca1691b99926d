//! Densities and Weyl averages along T_n = { floor(k^(5/2)) : k <= n }.
//! A numerical illustration only; nothing here proves ergodicity.
//!
//! cargo run --release --example sparse_sequence

use bohrcert::density::{banach_window_density, density_along, weyl_average, IndexSequence, IntegerSet, Theta};

fn main() -> bohrcert::Result<()> {
    let seq = IndexSequence::power_floor(2.5)?;
    println!("first terms: {:?}", seq.terms(8));
    for text in ["0", "1/2", "sqrt2-1", "(sqrt5-1)/2"] {
        let theta: Theta = text.parse()?;
        let row: Vec<String> = [100, 1_000, 10_000]
            .iter()
            .map(|&n| weyl_average(&seq, &theta, n).map(|w| format!("{w:.5}")))
            .collect::<bohrcert::Result<_>>()?;
        println!("theta = {theta:12}  weyl at n = 1e2, 1e3, 1e4: {}", row.join("  "));
    }
    for text in ["even", "residue:1:3", "squares"] {
        let set: IntegerSet = text.parse()?;
        let profile = density_along(|x| set.contains(x), &seq, 10_000)?;
        println!("{set:12} density at n = 1e4: {:.4}, final-quartile max {:.4}", profile.last(), profile.limsup_proxy());
    }
    let even: IntegerSet = "even".parse()?;
    println!("windowed Banach density of the evens (L = 101): {:.4}", banach_window_density(|x| even.contains(x.unsigned_abs()), 101, 0..1000)?);
    Ok(())
}
