//! Lyndon words, their standard bracketings and the Witt dimension formula.
//!
//! cargo run --example lyndon_basis -- 2 5

use glie::lyndon::{enumerate_lyndon_words, standard_bracketing, witt_rank};

fn main() -> glie::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let k = args.first().copied().unwrap_or(2);
    let dmax = args.get(1).copied().unwrap_or(5);

    for d in 1..=dmax {
        let words = enumerate_lyndon_words(k, d)?;
        println!("degree {d}: {} words (witt rank {})", words.len(), witt_rank(k, d)?);
        for w in words.iter().take(8) {
            println!("  {w:<8} {}", standard_bracketing(w)?);
        }
        if words.len() > 8 {
            println!("  ...");
        }
    }
    Ok(())
}
