//! Exhaustively cross-check the rim-hook algorithm against a brute-force
//! search over all chains, on small flag varieties.
//!
//! ```text
//! cargo run --release --example oracle_sweep -- 1,3/5 4
//! ```

use qmindeg::oracle::{verify_space, VerifyOptions};
use qmindeg::FlagShape;

fn main() -> qmindeg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let jobs = args.get(1).and_then(|j| j.parse().ok()).unwrap_or(1);
    let shapes: Vec<String> = match args.first() {
        Some(flag) => vec![flag.clone()],
        None => ["1,2/4", "1,2,3/4", "2/5", "2/6", "1,3/5"].map(String::from).to_vec(),
    };
    for flag in shapes {
        let shape: FlagShape = flag.parse()?;
        let report = verify_space(&shape, VerifyOptions { jobs, ..VerifyOptions::default() })?;
        println!("{shape}: {report}");
        if !report.is_success() {
            std::process::exit(3);
        }
    }
    Ok(())
}
