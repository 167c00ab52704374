//! List the block-increasing coset representatives of a flag variety,
//! grouped by length.

use std::collections::BTreeMap;

use qmindeg::FlagShape;

fn main() -> qmindeg::Result<()> {
    let flag = std::env::args().nth(1).unwrap_or_else(|| "1,2/4".to_string());
    let shape: FlagShape = flag.parse()?;
    let mut by_length: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for c in shape.cosets() {
        by_length.entry(c.length()).or_default().push(c.to_string());
    }
    println!("{shape}: {} Schubert classes", shape.coset_count());
    for (len, cosets) in by_length {
        println!("  length {len:>2}: {}", cosets.join("  "));
    }
    Ok(())
}
