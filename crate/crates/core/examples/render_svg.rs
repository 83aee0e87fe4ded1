//! Writes three SVG figures to the temporary directory: a surface orbit, a
//! billiard orbit and the two strips of one direction.

use pentaflow::cli::{render_figure, RenderMode};
use pentaflow::directions::{coordinate_of_index, DirectionIndex};
use pentaflow::orbits::OrbitKind;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir();
    let x = coordinate_of_index(&DirectionIndex::of(&[1, 2]));
    let jobs = [
        ("surface_12.svg", RenderMode::Surface, false),
        ("billiard_12.svg", RenderMode::Billiard, false),
        ("strips_12.svg", RenderMode::Surface, true),
    ];
    for (name, mode, both) in jobs {
        let fig = render_figure(&x, mode, OrbitKind::Short, both, 20_000).expect("closed orbit");
        let path = dir.join(name);
        std::fs::write(&path, fig.to_svg())?;
        println!("wrote {} ({} segments)", path.display(), fig.paths.len());
    }
    Ok(())
}
