// Enumerates every disk trace through a common point and colors the
// resulting hypergraph with three colors.

use ababfree::geometry::{enumerate_stabbed_disks, hypergraph_from_stabbed_disks, Point, PointSet};
use ababfree::{is_abl_free_ordered, is_proper_coloring, three_color, HalfIntegerL};

pub fn run_example() -> ababfree::Result<()> {
    let points = PointSet::new(
        [(3, 1), (1, 4), (-2, 3), (-4, -1), (0, -3), (2, -2), (5, 5)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect(),
    )?;
    let stab = Point::from_ints(0, 0);
    let family = enumerate_stabbed_disks(&points, &stab)?;
    let h = hypergraph_from_stabbed_disks(&points, &family)?;
    println!("{} disks realize {} distinct traces", family.disks().len(), h.edge_count());
    assert!(is_abl_free_ordered(&h, HalfIntegerL::ABAB).is_free());

    let coloring = three_color(&h)?;
    println!("angular order {:?}", h.vertices());
    println!("coloring {}", coloring.to_json());
    assert!(is_proper_coloring(&h, &coloring)?);
    Ok(())
}

fn main() -> ababfree::Result<()> {
    run_example()
}
