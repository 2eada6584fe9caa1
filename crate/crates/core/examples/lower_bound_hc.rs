// Builds the ABABA-free hypergraphs `H_c` and checks that they need more
// than `c` colors.

use ababfree::constructions::{build_hc, monochromatic_edge_hc, vertex_count_hc};
use ababfree::{colorability_oracle, is_abl_free_ordered, Coloring, HalfIntegerL};

pub fn run_example() -> ababfree::Result<()> {
    for (c, m) in [(2, 2), (2, 3), (3, 2)] {
        let h = build_hc(c, m)?;
        let free = is_abl_free_ordered(&h, HalfIntegerL::ABABA).is_free();
        let colorable = colorability_oracle(&h, c)?.is_some();
        println!("H_{c} with m={m}: {} vertices, ABABA-free {free}, {c}-colorable {colorable}", h.vertex_count());
        assert!(free && !colorable);
    }

    // Too big for brute force, but any 3-coloring has a monochromatic edge
    // that can be found directly.
    let (c, m) = (3, 3);
    println!("H_3 with m=3 has {} vertices", vertex_count_hc(c, m)?);
    let h = build_hc(c, m)?;
    let coloring = Coloring::new((0..h.vertex_count()).map(|v| (v * 7 + v / 5) % 3).collect());
    let edge = monochromatic_edge_hc(c, m, &coloring)?;
    println!("monochromatic edge {edge:?}");
    assert!(h.contains_edge(&edge));
    Ok(())
}

fn main() -> ababfree::Result<()> {
    run_example()
}
