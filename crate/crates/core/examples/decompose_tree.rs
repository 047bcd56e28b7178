//! Decomposes a glued cycle and writes the tree as Graphviz DOT.
//!
//! ```text
//! cargo run --example decompose_tree | dot -Tsvg > tree.svg
//! ```

use frieze_lab::cycle::cycle_sum;
use frieze_lab::reduce::{decompose, resum};
use frieze_lab::{Domain, QuiddityCycle, SubsetSpec};

fn main() -> frieze_lab::Result<()> {
    let parts = [
        QuiddityCycle::from_ints(&[1, 1, 1])?,
        QuiddityCycle::from_ints(&[3, 0, -3, 0])?,
        QuiddityCycle::from_ints(&[-1, -1, -1])?,
        QuiddityCycle::from_ints(&[-2, 0, 2, 0])?,
    ];
    let mut c = parts[0].clone();
    for p in &parts[1..] {
        c = cycle_sum(&c, p)?;
    }

    let tree = decompose(&c, &SubsetSpec::whole(Domain::Integer))?;
    eprint!("{}", tree.render_text());
    assert_eq!(resum(&tree)?, c);
    print!("{}", tree.to_dot());
    Ok(())
}
