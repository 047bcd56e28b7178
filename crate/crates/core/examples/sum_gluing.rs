//! Glues cycles together and undoes a gluing by zero contraction.

use frieze_lab::cycle::{cycle_sum, zero_contract};
use frieze_lab::QuiddityCycle;

fn main() -> frieze_lab::Result<()> {
    let triangle = QuiddityCycle::from_ints(&[-1, -1, -1])?;
    for a in -3..=3 {
        let square = QuiddityCycle::from_ints(&[a, 0, -a, 0])?;
        let s = cycle_sum(&square, &triangle)?;
        println!("({square}) (+) ({triangle}) = ({s})  lambda = {}", s.lambda());
    }

    let one = QuiddityCycle::from_ints(&[1, 1, 1])?;
    let mut c = one.clone();
    for _ in 0..4 {
        c = cycle_sum(&c, &one)?;
        println!("{:>2} entries: ({c})  lambda = {}", c.len(), c.lambda());
    }

    let c = QuiddityCycle::from_ints(&[5, 0, -5, 0])?;
    let r = zero_contract(&c, 1)?;
    println!("contracting the zero at position 2 of ({c}) leaves ({r})  lambda = {}", r.lambda());
    Ok(())
}
