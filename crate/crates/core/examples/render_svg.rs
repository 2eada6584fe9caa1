// Draws a realized hypergraph with its points colored by a proper coloring.

use ababfree::geometry::json::CurvesDocument;
use ababfree::geometry::realize_as_curves;
use ababfree::svg::{render_svg, Scene};
use ababfree::{parse_hypergraph, three_color, HalfIntegerL};

pub fn run_example() -> ababfree::Result<()> {
    let h = parse_hypergraph(r#"{"vertices":["a","b","c"],"edges":[[0,1],[1,2],[0,2]]}"#)?;
    let coloring = three_color(&h)?;
    let (points, family) = realize_as_curves(&h, HalfIntegerL::ABAB)?;
    let scene = Scene::Curves(CurvesDocument { points, family });
    let svg = render_svg(&scene, Some(&coloring))?;

    let path = std::env::temp_dir().join("ababfree-triangle.svg");
    std::fs::write(&path, &svg)?;
    println!("wrote {} ({} bytes)", path.display(), svg.len());
    assert_eq!(svg, render_svg(&scene, Some(&coloring))?);
    Ok(())
}

fn main() -> ababfree::Result<()> {
    run_example()
}
