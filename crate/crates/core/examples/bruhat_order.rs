//! Compare cosets in Bruhat order three ways: the Maya-diagram counts, the
//! sorted-prefix criterion on permutations, and the closure of cover relations.

use qmindeg::maya::diagram_leq;
use qmindeg::oracle::bruhat_closure;
use qmindeg::weyl::bruhat_leq_full;
use qmindeg::{CosetRep, FlagShape};

fn main() -> qmindeg::Result<()> {
    let shape: FlagShape = "1,3,5,7,9/12".parse()?;
    let v = CosetRep::parse(&shape, "2|7,11|10,12|8,9|1,5")?;
    let w = CosetRep::parse(&shape, "1|5,9|10,11|4,6|2,7")?;
    let (mw, mv) = (w.to_maya(), v.to_maya());

    println!("M^w for w = {w}:\n{}", mw.render(false));
    println!("M^v for v = {v}:\n{}", mv.render(false));
    println!("w <= v by diagrams:   {}", diagram_leq(&mw, &mv)?);
    println!("w <= v by prefixes:   {}", bruhat_leq_full(w.perm(), v.perm()));
    println!("v <= w by diagrams:   {}", diagram_leq(&mv, &mw)?);

    // On a small space the closure oracle is cheap; count comparable pairs.
    let small: FlagShape = "1,2/4".parse()?;
    let closure = bruhat_closure(&small)?;
    let cosets: Vec<CosetRep> = small.cosets().collect();
    let mut comparable = 0;
    for a in &cosets {
        for b in &cosets {
            if closure.leq(a, b) == Some(true) {
                comparable += 1;
            }
        }
    }
    println!("\n{comparable} of {} ordered pairs in {small} are comparable", cosets.len().pow(2));
    Ok(())
}
