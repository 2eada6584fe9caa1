// Finds an ABAB alternation between two hyperedges, then searches for a
// vertex order that removes it.

use ababfree::pattern::alternation_length;
use ababfree::{find_abl_free_order, is_abl_free_ordered, parse_hypergraph, HalfIntegerL, Verdict};

pub fn run_example() -> ababfree::Result<()> {
    let h = parse_hypergraph(r#"{"vertices":["a","b","c","d"],"edges":[[0,2],[1,3]]}"#)?;
    println!("longest alternation: {}", alternation_length(&h.edges()[0], &h.edges()[1]));

    match is_abl_free_ordered(&h, HalfIntegerL::ABAB) {
        Verdict::Free => println!("ABAB-free as given"),
        Verdict::Violation(v) => println!("ABAB witness {:?} from {:?} and {:?}", v.witness, v.edge_a, v.edge_b),
    }
    assert!(is_abl_free_ordered(&h, HalfIntegerL::ABABA).is_free());

    let order = find_abl_free_order(&h, HalfIntegerL::ABAB)?.expect("four vertices can always be untangled");
    let fixed = h.reordered(&order)?;
    println!("reordered {:?} -> {}", order, fixed.to_json());
    assert!(is_abl_free_ordered(&fixed, HalfIntegerL::ABAB).is_free());
    Ok(())
}

fn main() -> ababfree::Result<()> {
    run_example()
}
