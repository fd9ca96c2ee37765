//! Vertex cover reductions, solved at every budget next to a brute-force
//! cover.

use ecmod::fptsolve::solve_xp;
use ecmod::gadgets::{
    gen_vc_edel_h2b_rb, gen_vc_edel_h2rb_rb, gen_vc_switch_h2b_rdash, VcInstance,
};

fn min_cover(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u32..1 << n)
        .filter(|m| {
            edges
                .iter()
                .all(|&(a, b)| m >> a & 1 == 1 || m >> b & 1 == 1)
        })
        .map(u32::count_ones)
        .min()
        .unwrap_or(0) as usize
}

fn main() -> ecmod::Result<()> {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
    println!("vertex cover number {}", min_cover(4, &edges));
    for k in 0..4 {
        let vc = VcInstance::new(4, &edges, k)?;
        let answers: Vec<bool> = [
            gen_vc_edel_h2b_rb(&vc),
            gen_vc_edel_h2rb_rb(&vc),
            gen_vc_switch_h2b_rdash(&vc),
        ]
        .iter()
        .map(|r| solve_xp(r.problem, &r.instance, &r.target, r.budget).map(|s| s.answer))
        .collect::<ecmod::Result<_>>()?;
        println!("k={k}: {answers:?}");
    }
    Ok(())
}
