//! Writes two SVG drawings: node markers for `(T_3, T_8)` and the knot
//! `(T_3, T_4, T_5)` with broken under-strands.
//!
//! Usage: cargo run --example svg_figure [output-dir]

use std::path::PathBuf;

use chebknot::cli::render_svg;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    for (i, j, k, name) in [(3, 8, None, "curve_3_8.svg"), (3, 4, Some(5), "knot_3_4_5.svg")] {
        let (doc, report) = render_svg(i, j, k).unwrap();
        let path = dir.join(name);
        std::fs::write(&path, doc)?;
        println!("{}: {} samples, {} nodes, {} gaps", path.display(), report.samples, report.nodes, report.gapped_crossings);
    }
    Ok(())
}
