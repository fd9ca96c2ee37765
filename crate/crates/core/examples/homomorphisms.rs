//! Homomorphism tests to small targets and the obstructions behind a no.

use ecmod::homcheck::{
    find_all_blue_odd_cycle, find_odd_blue_parity_cycle, find_rbr_image, hom_exists_2sat,
    hom_exists_bruteforce,
};
use ecmod::{Colour, ColouredGraph, Target};

fn main() -> ecmod::Result<()> {
    let rbr = ColouredGraph::from_edges(
        4,
        [
            (0, 1, Colour::RED),
            (1, 2, Colour::BLUE),
            (2, 3, Colour::RED),
        ],
    )?;
    let h = Target::from_name("H2b_r,b")?;
    println!("rbr -> {h}: {:?}", hom_exists_2sat(&rbr, &h)?);
    if let Some(o) = find_rbr_image(&rbr)? {
        println!("{} on {:?}", o.kind, o.vertices);
    }

    let triangle = ColouredGraph::from_edges(
        3,
        [
            (0, 1, Colour::BLUE),
            (1, 2, Colour::BLUE),
            (0, 2, Colour::BLUE),
        ],
    )?;
    for name in ["H2b_r,r", "H2rb_r,r"] {
        let h = Target::from_name(name)?;
        let two_sat = hom_exists_2sat(&triangle, &h)?;
        let brute = hom_exists_bruteforce(&triangle, &h);
        println!("triangle -> {name}: 2-SAT {two_sat:?}, brute force {brute:?}");
    }
    println!(
        "odd blue parity: {:?}",
        find_odd_blue_parity_cycle(&triangle)?.map(|o| o.vertices)
    );
    println!(
        "all-blue odd cycle: {:?}",
        find_all_blue_odd_cycle(&triangle)?.map(|o| o.vertices)
    );
    Ok(())
}
