//! Builds the Gaussian family of irreducible (-1)-cycles and checks each
//! member for interior units.

use frieze_lab::gauss::verify_gauss_irreducible;

fn main() -> frieze_lab::Result<()> {
    let max_k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for k in 1..=max_k {
        let r = verify_gauss_irreducible(k)?;
        println!(
            "k = {k:>2}  m = {:>2}  lambda = {}  units = {}  x[1,{}] = {}  irreducible = {}",
            r.cycle.len(),
            r.cycle.lambda(),
            r.unit_entries.len(),
            2 * k + 5,
            r.marker,
            r.irreducible()
        );
    }
    Ok(())
}
