//! Hermite and Smith normal forms over the integers.

use glie::zmodule::{hermite_form, lattice_member, smith_invariants, IntMatrix, SparseVector, SubgroupBasis};
use num_bigint::BigInt;

fn main() -> glie::Result<()> {
    let m = IntMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    println!("matrix:\n{m}");
    let h = hermite_form(&m);
    println!("hermite form:\n{h}");
    println!("quotient Z^3 / rows = {}", smith_invariants(&m));

    let v: Vec<BigInt> = [4, 8, 8].map(BigInt::from).to_vec();
    println!("(4, 8, 8) in lattice: {}", lattice_member(&h, &v)?);
    let v: Vec<BigInt> = [1, 0, 0].map(BigInt::from).to_vec();
    println!("(1, 0, 0) in lattice: {}", lattice_member(&h, &v)?);

    // incremental construction, as used for ideal slices
    let mut basis = SubgroupBasis::new(3);
    for row in [[2, 2, 2], [0, 3, 0], [0, 0, 6]] {
        basis.extend([SparseVector::from_dense(&row.map(BigInt::from))])?;
        println!("after {row:?}: rank {}, quotient {}", basis.rank(), basis.quotient_invariants());
    }
    Ok(())
}
