//! Switching towards each two-vertex core.

use ecmod::fptsolve::solve_switch;
use ecmod::{Colour, ColouredGraph, CoreName};

fn main() -> ecmod::Result<()> {
    // an odd cycle with one red edge, plus a red pendant
    let g = ColouredGraph::from_edges(
        5,
        [
            (0, 1, Colour::BLUE),
            (1, 2, Colour::BLUE),
            (2, 0, Colour::RED),
            (2, 3, Colour::RED),
            (3, 4, Colour::BLUE),
        ],
    )?;
    for core in CoreName::ALL {
        let h = core.target();
        let s = solve_switch(&g, &h, 2)?;
        let set = s.certificate.as_ref().map(|c| c.items().to_vec());
        println!(
            "{:<10} {:<3} {:<18} {:?}",
            core.as_str(),
            if s.answer { "yes" } else { "no" },
            s.method,
            set
        );
    }
    Ok(())
}
