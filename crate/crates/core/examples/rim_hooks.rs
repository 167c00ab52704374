//! Apply single generalized rim hooks and show the diagram before and after.

use qmindeg::{step_degree, CosetRep, FlagShape, RimHookSpec};

fn show(flag: &str, coset: &str, q: usize, t: usize) -> qmindeg::Result<()> {
    let shape: FlagShape = flag.parse()?;
    let c = CosetRep::parse(&shape, coset)?;
    let spec = RimHookSpec::new(&shape, q, t)?;
    let before = c.to_maya();
    let after = before.rim_hook(spec)?;

    println!("{flag}: hook {spec} on {c}");
    print!("{}", before.render(false));
    println!("  -> {} (degree {})", after.to_coset()?, step_degree(&shape, spec)?);
    print!("{}", after.render(false));
    println!();
    Ok(())
}

fn main() -> qmindeg::Result<()> {
    // A Grassmannian hook: one row, so q = 1 and t = 2.
    show("8/12", "1,2,3,5,8,9,11,12", 1, 2)?;
    // A hook spanning rows 2..5 of a five-step flag.
    show("1,3,5,7,9/12", "2|3,8|10,12|9,11|1,5", 2, 6)?;
    Ok(())
}
