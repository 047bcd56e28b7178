//! Lists dihedral orbit representatives of cycles over Z/5 and over a small
//! box of Gaussian integers.

use frieze_lab::enumerate::{enumerate_parallel, EnumerationTask};
use frieze_lab::{Domain, RingElement, Sign};

fn main() -> frieze_lab::Result<()> {
    let residues: Vec<_> = (0..5).map(|v| RingElement::modular(v, 5)).collect();
    let task = EnumerationTask::new(Domain::Modular(5), residues, 4)?.with_dedup(true);
    let (cycles, stats) = enumerate_parallel(&task, 2, &|_| {})?;
    println!("Z/5, length 4: {} orbits, {} search nodes", cycles.len(), stats.nodes_visited);
    for c in &cycles {
        println!("  ({c})  lambda = {}", c.lambda());
    }

    let unit_box: Vec<_> = (-1..=1)
        .flat_map(|a| (-1..=1).map(move |b| RingElement::gaussian(a, b)))
        .collect();
    let task = EnumerationTask::new(Domain::Gaussian, unit_box, 4)?
        .with_dedup(true)
        .with_lambda(Some(Sign::Minus));
    let (cycles, _) = enumerate_parallel(&task, 4, &|p| eprintln!("partition {}/{}", p.index + 1, p.partitions))?;
    println!("Z[i] with |re|,|im| <= 1, length 4, lambda = -1: {} orbits", cycles.len());
    for c in cycles {
        println!("  ({c})");
    }
    Ok(())
}
