//! Ranks and torsion of graded components, degree by degree.
//!
//! cargo run --release --example hilbert_table -- kohno 4 5

use glie::gradedquotient::GradedQuotient;
use glie::presentations::PresentationKind;

fn main() -> glie::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: PresentationKind = args.first().map(String::as_str).unwrap_or("pm0n-reduced").parse()?;
    let n = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let dmax = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(5);

    let mut q = GradedQuotient::new(kind.build(n)?)?;
    println!("{kind} (n = {n})");
    for d in 1..=dmax {
        let r = q.component(d)?;
        println!(
            "  degree {d}: free Lie rank {:>4}, ideal rank {:>4}, quotient {}  [{:.2?}]",
            r.witt_rank,
            q.slice(d)?.basis.rank(),
            r.group_label(),
            r.elapsed
        );
    }
    Ok(())
}
