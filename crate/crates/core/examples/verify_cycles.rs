//! Checks a handful of sequences over several domains and prints lambda.

use frieze_lab::cycle::{parse_entries, verify_cycle};
use frieze_lab::Domain;

fn main() -> frieze_lab::Result<()> {
    let inputs = [
        (Domain::Integer, "0,0"),
        (Domain::Integer, "1,1,1"),
        (Domain::Integer, "-1,-1,-1"),
        (Domain::Integer, "3,0,-3,0"),
        (Domain::Integer, "1,2"),
        (Domain::Rational, "3,2/3,3,2/3"),
        (Domain::Gaussian, "i,0,-i,0"),
        (Domain::Modular(7), "3,3,3,3"),
    ];
    for (d, text) in inputs {
        let entries = parse_entries(d, text)?;
        match verify_cycle(&entries)? {
            Some(lambda) => println!("{:>5}  ({text})  lambda = {lambda}", d.to_string()),
            None => println!("{:>5}  ({text})  not a lambda-cycle", d.to_string()),
        }
    }
    Ok(())
}
