//! Brackets in the free Lie ring, read back in Lyndon coordinates.

use glie::freelie::{FreeLieRing, LieElement};
use num_bigint::BigInt;

fn main() -> glie::Result<()> {
    let ring = FreeLieRing::new(3)?;
    let [a, b, c] = [0, 1, 2].map(|i| LieElement::generator(3, i).expect("in range"));

    let ab = ring.bracket(&a, &b)?;
    let bc = ring.bracket(&b, &c)?;
    println!("[a, b] = {ab}");
    println!("[[a, b], c] = {}", ring.bracket(&ab, &c)?);
    println!("[a, [b, c]] = {}", ring.bracket(&a, &bc)?);
    println!("[b, [a, b]] = {}", ring.bracket(&b, &ab)?);

    // Jacobi: [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
    let ca = ring.bracket(&c, &a)?;
    let jacobi = ring
        .bracket(&a, &bc)?
        .add(&ring.bracket(&b, &ca)?)?
        .add(&ring.bracket(&c, &ab)?)?;
    println!("Jacobi sum = {jacobi}");

    let x = a.add(&b.scale(&BigInt::from(2)))?;
    let y = ring.bracket(&a, &c)?;
    let xy = ring.bracket(&x, &y)?;
    println!("[a + 2b, [a, c]] = {xy}");
    println!("expanded: {}", ring.expand(&xy));
    Ok(())
}
