//! Building, switching and serialising edge-coloured graphs.

use ecmod::cli::{parse_graph, print_graph};
use ecmod::{Colour, ColouredGraph};

fn main() -> ecmod::Result<()> {
    let g = ColouredGraph::from_edges(
        4,
        [
            (0, 1, Colour::RED),
            (1, 2, Colour::BLUE),
            (2, 3, Colour::RED),
            (3, 0, Colour::BLUE),
            (2, 2, Colour::RED),
        ],
    )?;
    println!("{}", print_graph(&g));

    // switching flips non-loop edges at the vertex; loops stay put
    let s = g.switch_at(2)?;
    print!("{}", print_graph(&s));
    assert!(s.switch_at(2)?.same_multiset(&g));

    // a set and its complement switch to the same graph
    let a = g.switch_set(&[0, 1])?;
    let b = g.switch_set(&[2, 3])?;
    println!("complement gives the same graph: {}", a.same_multiset(&b));

    println!("girth {:?}, bipartite {}", g.girth(), g.is_bipartite());
    let back = parse_graph(&print_graph(&g))?;
    println!("round trip: {}", back.same_multiset(&g));
    Ok(())
}
