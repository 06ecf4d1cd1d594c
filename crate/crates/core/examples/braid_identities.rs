//! Braid identities checked through the Artin action on a free group.

use glie::braidcheck::{
    artin_action, braids_equal, delta_squared_product, delta_word, pure_generator_word,
    sphere_relator_sanity, verify_burau_relations, verify_magnus_equivalence, BraidWord,
    FreeGroupWord,
};

fn main() -> glie::Result<()> {
    let n = 4;
    let a13 = pure_generator_word(1, 3, n)?;
    println!("a_13 = {a13}");
    let action = artin_action(&a13);
    for (i, img) in action.images().iter().enumerate() {
        println!("  x{} -> {}", i + 1, img);
    }
    let x2 = FreeGroupWord::generator(2);
    println!("a_13 applied to x2: {}", action.apply(&x2));

    let d2 = delta_word(n)?.power(2);
    println!("Delta^2 = {d2}");
    println!("Delta^2 = product of a_ij: {}", braids_equal(&d2, &delta_squared_product(n)?)?);
    println!("(s1 s2 s3)^4 = Delta^2: {}", verify_magnus_equivalence(n)?);

    let s1 = BraidWord::new(n, vec![1])?;
    let s2 = BraidWord::new(n, vec![2])?;
    let lhs = BraidWord::product(n, [&s1, &s2, &s1])?;
    let rhs = BraidWord::product(n, [&s2, &s1, &s2])?;
    println!("s1 s2 s1 = s2 s1 s2: {}", braids_equal(&lhs, &rhs)?);
    println!("s1 s2 = s2 s1: {}", braids_equal(&s1.concat(&s2)?, &s2.concat(&s1)?)?);

    print!("{}", verify_burau_relations(n));
    println!();
    let s = sphere_relator_sanity(n)?;
    println!(
        "sphere relator: pure = {}, exponent sum = {}, trivial in the disc group = {}",
        s.permutation_is_identity, s.exponent_sum, s.trivial_in_disc_group
    );
    Ok(())
}
