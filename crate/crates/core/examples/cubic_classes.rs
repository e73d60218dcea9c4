//! Writes one graph6 file per order with every connected cubic graph class.
//!
//! Usage: cargo run --release --example cubic_classes -- <max order> <out dir> [min order]

use std::fmt::Write as _;
use std::path::PathBuf;
use zgrundy::graph::graph6;
use zgrundy::verify::grow_cubic_classes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().ok_or("missing max order")?.parse()?;
    let dir = PathBuf::from(args.next().ok_or("missing output directory")?);
    let min_n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let levels = grow_cubic_classes(max_n)?;
    for (i, level) in levels.iter().enumerate() {
        let n = 4 + 2 * i;
        if n < min_n {
            continue;
        }
        let mut text = String::new();
        writeln!(text, "# Connected cubic graphs on {n} vertices, one per isomorphism class ({} graphs).", level.len())?;
        writeln!(text, "# Generated by `cargo run --release --example cubic_classes`: grown from K4 by edge")?;
        writeln!(text, "# insertion, diamond insertion and bridge joins, deduplicated by isomorphism.")?;
        writeln!(text, "# The class count matches OEIS A002851.")?;
        for g in level {
            writeln!(text, "{}", graph6::encode(g)?)?;
        }
        let path = dir.join(format!("cubic{n}.g6"));
        std::fs::write(&path, text)?;
        println!("{}: {} graphs", path.display(), level.len());
    }
    Ok(())
}
