use std::path::PathBuf;

use vbraid::render::{render_svg, RenderOptions};
use vbraid::BraidWord;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    for (name, text, n) in [
        ("classical", "s1 s2 S1", 3),
        ("detour", "t1 s2 S2 t1", 3),
        ("odd", "t1 s1 t1 s1", 2),
    ] {
        let w = BraidWord::parse(text, n)?;
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, render_svg(&w, RenderOptions { numbers: true }))?;
        println!("{} -> {}", w, path.display());
    }
    Ok(())
}
