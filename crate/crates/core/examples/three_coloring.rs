// Colors an ABAB-free hypergraph with three colors and shows the 2-edges the
// coloring is built from.

use ababfree::coloring::{saturate, two_edge_graph};
use ababfree::{colorability_oracle, is_proper_coloring, parse_hypergraph, three_color_verified};

pub fn run_example() -> ababfree::Result<()> {
    let h = parse_hypergraph(
        r#"{"vertices":["a","b","c","d","e","f"],"edges":[[0,1,2,3,4,5],[1,2,3],[3,4,5],[0,5]]}"#,
    )?;

    let saturated = saturate(&h)?;
    println!("2-edges after saturation: {:?}", two_edge_graph(&saturated).edges());

    let coloring = three_color_verified(&h)?;
    println!("coloring {}", coloring.to_json());
    assert!(is_proper_coloring(&h, &coloring)?);
    assert!(coloring.palette_size() <= 3);

    // The exhaustive oracle agrees that two colors would also do here.
    let two = colorability_oracle(&h, 2)?;
    println!("oracle with 2 colors: {}", two.map_or("none".to_string(), |c| c.to_json()));
    Ok(())
}

fn main() -> ababfree::Result<()> {
    run_example()
}
