// Realizes an ABAB-free hypergraph by curves above points on a line and reads
// the hypergraph back.

use ababfree::geometry::json::CurvesDocument;
use ababfree::geometry::{hypergraph_from_curves, realize_as_curves};
use ababfree::{is_abl_free_ordered, parse_hypergraph, HalfIntegerL};

pub fn run_example() -> ababfree::Result<()> {
    let h = parse_hypergraph(r#"{"vertices":["a","b","c","d"],"edges":[[0,1,3],[1,2],[2,3]]}"#)?;
    assert!(is_abl_free_ordered(&h, HalfIntegerL::ABAB).is_free());

    let (points, family) = realize_as_curves(&h, HalfIntegerL::ABAB)?;
    println!("crossings per pair: {:?}", family.crossing_matrix()?);
    assert!(family.max_crossings()? <= 2);

    let back = hypergraph_from_curves(&points, &family)?;
    println!("edges read back: {:?}", back.edges());
    assert_eq!(back.edges(), h.edges());

    let doc = CurvesDocument { points, family };
    println!("{}", doc.to_json());
    Ok(())
}

fn main() -> ababfree::Result<()> {
    run_example()
}
