//! Compares graded tables of related presentations and tests centrality.
//!
//! cargo run --release --example splitting_checks -- 5

use glie::gradedquotient::{central_element_check, GradedQuotient};
use glie::presentations::PresentationKind;
use glie::verify::{run_check, CheckName};

fn main() -> glie::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let dmax = 4;

    for check in [CheckName::Theorem1, CheckName::Theorem2, CheckName::Corollary] {
        let report = run_check(check, n, dmax)?;
        println!("{report}\n");
    }

    for kind in [PresentationKind::Ihara, PresentationKind::SphereReduced] {
        let p = kind.build(n)?;
        let z = p.generator_sum();
        println!("{kind}({n}): sum of generators central: {}", central_element_check(&p, &z)?);
    }

    let p = PresentationKind::SphereReduced.build(n)?;
    let z = p.generator_sum().scale(&2.into());
    let mut q = GradedQuotient::new(p)?;
    println!("sphere-reduced({n}): twice the sum central: {}", q.is_central(&z)?);
    Ok(())
}
