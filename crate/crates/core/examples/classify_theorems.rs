//! Classifies irreducible cycles over Z>=0 and over Z inside finite boxes.

use frieze_lab::enumerate::{classify_parallel, EnumerationTask};
use frieze_lab::{Domain, SubsetSpec};

fn main() -> frieze_lab::Result<()> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let quiet = |_| {};

    for m in 3..=7 {
        let task = EnumerationTask::int_range(0, 4, m)?;
        let r = classify_parallel(&task, &SubsetSpec::non_negative(), jobs, &quiet)?;
        print!("{}", r.render_table());
    }
    println!();
    for m in 3..=6 {
        let task = EnumerationTask::int_range(-3, 3, m)?;
        let r = classify_parallel(&task, &SubsetSpec::whole(Domain::Integer), jobs, &quiet)?;
        print!("{}", r.render_table());
    }
    Ok(())
}
