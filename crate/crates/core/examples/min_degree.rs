//! Minimal quantum degree between two Schubert classes, with the rim-hook
//! chain that realizes it.
//!
//! ```text
//! cargo run --example min_degree
//! cargo run --example min_degree -- 1,2/3 "2|1" "1|3"
//! ```

use qmindeg::cli::render_chain;
use qmindeg::{graded_degree, greedy_min_degree, CosetRep, FlagShape};

fn main() -> qmindeg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (flag, v, w) = match args.as_slice() {
        [flag, v, w] => (flag.as_str(), v.as_str(), w.as_str()),
        _ => ("1,3,5,7,9/13", "2|3,8|10,13|9,11|1,5", "1|9,10|5,11|6,7|2,3"),
    };
    let shape: FlagShape = flag.parse()?;
    let v = CosetRep::parse(&shape, v)?;
    let w = CosetRep::parse(&shape, w)?;

    let (degree, trace) = greedy_min_degree(&v, &w)?;
    println!("{shape}: v = {v}, w = {w}");
    println!("minimal degree {degree}  ({})", degree.exponent_form());
    println!("graded degree  {}", graded_degree(&shape, &degree)?);
    println!();
    print!("{}", render_chain(&trace, false));
    Ok(())
}
