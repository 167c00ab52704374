//! The Grassmannian projections that give a lower bound on the minimal degree,
//! compared with the chain found by rim hooks.

use qmindeg::{greedy_min_degree, lower_bound_vector, project, projection_degree, CosetRep, FlagShape};

fn main() -> qmindeg::Result<()> {
    let shape: FlagShape = "1,3,5,7,9/13".parse()?;
    let v = CosetRep::parse(&shape, "2|3,8|10,13|9,11|1,5")?;
    let w = CosetRep::parse(&shape, "1|9,10|5,11|6,7|2,3")?;

    for j in 1..=shape.k() {
        let (pv, pw) = (project(&v, j)?, project(&w, j)?);
        println!("Gr({},{}): v -> {pv}, w -> {pw}, degree {}", shape.bound(j), shape.n(), projection_degree(&v, &w, j)?);
    }
    let lower = lower_bound_vector(&v, &w)?;
    let (greedy, _) = greedy_min_degree(&v, &w)?;
    println!("lower bound {lower}, rim-hook chain {greedy}");
    Ok(())
}
