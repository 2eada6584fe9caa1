// Turns a realizing curve family into stabbed polygons whose boundaries meet
// at most twice.

use ababfree::geometry::{compactify, evenize, hypergraph_from_curves, realize_as_curves};
use ababfree::{parse_hypergraph, HalfIntegerL};

pub fn run_example() -> ababfree::Result<()> {
    let h = parse_hypergraph(r#"{"vertices":["a","b","c","d","e"],"edges":[[0,4],[1,2,3],[2],[0,1,2,3,4]]}"#)?;
    let (points, family) = realize_as_curves(&h, HalfIntegerL::ABAB)?;

    let even = evenize(&points, &family)?;
    let counts = even.crossing_matrix()?;
    assert!(counts.iter().flatten().all(|c| c % 2 == 0));
    assert_eq!(hypergraph_from_curves(&points, &even)?, hypergraph_from_curves(&points, &family)?);

    let compact = compactify(&points, &even)?;
    println!("stab point ({}, {})", compact.stab.x, compact.stab.y);
    for (k, poly) in compact.polygons.iter().enumerate() {
        assert!(poly.is_simple() && poly.contains(&compact.stab));
        let inside: Vec<usize> = (0..points.len())
            .filter(|&i| poly.contains(&points.points[i]))
            .collect();
        println!("polygon {k}: {} corners, contains points {inside:?}", poly.vertices().len());
        assert_eq!(inside, h.edges()[k]);
        for other in &compact.polygons[k + 1..] {
            assert!(poly.boundary_intersections(other)? <= 2);
        }
    }
    Ok(())
}

fn main() -> ababfree::Result<()> {
    run_example()
}
