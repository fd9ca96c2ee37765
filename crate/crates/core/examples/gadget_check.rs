//! Property checks for the partition and edge gadgets.

use ecmod::gadgets::{verify_gadget_properties, GadgetFamily};

fn main() -> ecmod::Result<()> {
    for x in GadgetFamily::ALL {
        let report = verify_gadget_properties(x, 4, 3)?;
        print!("{report}");
    }
    Ok(())
}
