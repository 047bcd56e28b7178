//! Renders frieze patterns and lists the entries that leave a subset.

use frieze_lab::frieze::make_frieze;
use frieze_lab::{Domain, QuiddityCycle, SubsetSpec};

fn main() -> frieze_lab::Result<()> {
    let hexagon = QuiddityCycle::from_ints(&[4, 1, 2, 2, 2, 1])?;
    let f = make_frieze(&hexagon);
    print!("{}", f.render_text());
    println!("tame: {}\n", f.is_tame());

    let c = QuiddityCycle::from_ints(&[2, 0, -3, -1, -1])?;
    let f = make_frieze(&c);
    print!("{}", f.render_text());
    let outside = f.entries_outside(&SubsetSpec::non_negative())?;
    println!("entries outside Z>=0:");
    for e in outside {
        println!("  x[{},{}] = {}", e.i + 1, e.j + 1, e.value);
    }

    let g = QuiddityCycle::parse(Domain::Gaussian, "2i,1-i,2,2,1+i,-2i,-1+i,-2,-2,-1-i")?;
    println!();
    print!("{}", make_frieze(&g).render_text());
    Ok(())
}
