//! The 0-Hecke product on permutations and its action on cosets, and the
//! reflection words whose action matches a rim hook.

use qmindeg::weyl::{reflection_word, bruhat_leq_full};
use qmindeg::{CosetRep, FlagShape, Permutation, RimHookSpec};

fn main() -> qmindeg::Result<()> {
    let u = Permutation::new(vec![3, 1, 4, 2])?;
    let v = Permutation::new(vec![2, 4, 1, 3])?;
    let uv = u.hecke_product(&v);
    println!("u = {u}, v = {v}");
    println!("u . v       = {uv} (length {} <= {} + {})", uv.length(), u.length(), v.length());
    let back = uv.compose(&v.inverse());
    println!("(u . v)v^-1 = {back}, below u: {}", bruhat_leq_full(&back, &u));

    let shape: FlagShape = "1,3,5,7,9/13".parse()?;
    let c = CosetRep::parse(&shape, "2|3,8|10,13|9,11|1,5")?;
    for (q, t) in [(2, 5), (2, 3), (1, 6)] {
        let word = reflection_word(&shape, q, t)?;
        let by_hecke = c.hecke_word_action(&word)?;
        let by_hook = c.to_maya().rim_hook(RimHookSpec::new(&shape, q, t)?)?.to_coset()?;
        println!("({q},{t}) word {word:?}");
        println!("    Hecke action {by_hecke}, rim hook {by_hook}, equal: {}", by_hecke == by_hook);
    }
    Ok(())
}
