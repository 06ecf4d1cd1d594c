//! The built-in graded presentations and their relations.
//!
//! cargo run --example presentations -- ihara 4

use glie::presentations::PresentationKind;

fn main() -> glie::Result<()> {
    let mut args = std::env::args().skip(1);
    match args.next() {
        Some(name) => {
            let kind: PresentationKind = name.parse()?;
            let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(kind.min_points().max(4));
            print!("{}", kind.build(n)?);
        }
        None => {
            for kind in PresentationKind::ALL {
                let n = kind.min_points().max(4);
                let p = kind.build(n)?;
                println!(
                    "{:<16} n = {n}: {} generators, {} relations of degree 1, {} of degree 2",
                    kind.name(),
                    p.alphabet_size(),
                    p.relations_of_degree(1).count(),
                    p.relations_of_degree(2).count()
                );
            }
        }
    }
    Ok(())
}
