//! Edge deletion: matching for the polynomial targets, group deletion
//! 2-SAT otherwise.

use ecmod::dichotomy::edel_is_polynomial;
use ecmod::fptsolve::{solve_edel, solve_edel_groups, solve_edel_ptime};
use ecmod::{Colour, ColouredGraph, Target};

fn main() -> ecmod::Result<()> {
    let g = ColouredGraph::from_edges(
        4,
        [
            (0, 1, Colour::RED),
            (1, 2, Colour::BLUE),
            (2, 3, Colour::RED),
            (3, 0, Colour::BLUE),
            (0, 0, Colour::BLUE),
        ],
    )?;
    for name in ["H2-_r,b", "H2b_r,b", "H1_b"] {
        let h = Target::from_name(name)?;
        let s = solve_edel(&g, &h, 3)?;
        println!(
            "{name}: polynomial {} method {} deleted {:?}",
            edel_is_polynomial(&h),
            s.method,
            s.certificate
        );
        if edel_is_polynomial(&h) {
            let p = solve_edel_ptime(&g, &h, 3)?;
            let q = solve_edel_groups(&g, &h, 3)?;
            assert_eq!(p.certificate, q.certificate);
        }
    }
    Ok(())
}
