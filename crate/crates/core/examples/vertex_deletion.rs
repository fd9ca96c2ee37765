//! Vertex deletion through the variable-deletion 2-SAT path.

use ecmod::fptsolve::{solve_vdel, solve_xp, verify_solution};
use ecmod::{Colour, ColouredGraph, ProblemKind, Target};

fn main() -> ecmod::Result<()> {
    // two red-blue-red paths sharing their middle edge's ends
    let g = ColouredGraph::from_edges(
        6,
        [
            (0, 1, Colour::RED),
            (1, 2, Colour::BLUE),
            (2, 3, Colour::RED),
            (4, 1, Colour::RED),
            (2, 5, Colour::RED),
        ],
    )?;
    let h = Target::from_name("H2b_r,b")?;
    for k in 0..3 {
        let s = solve_vdel(&g, &h, k)?;
        let xp = solve_xp(ProblemKind::Vdel, &g, &h, k)?;
        println!(
            "k={k}: {} certificate {:?} (exhaustive agrees: {})",
            s.answer,
            s.certificate,
            s.answer == xp.answer
        );
        if s.answer {
            assert!(verify_solution(&g, &h, k, &s)?);
        }
    }
    Ok(())
}
