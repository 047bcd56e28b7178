//! An infinite family of irreducible cycles over the Gaussian integers.
//!
//! For `k >= 1` the cycle
//! `(2i, 1-i, 2 (2k times), 1+i, -2i, -1+i, -2 (2k times), -1-i)`
//! has length `4k + 6` and sign `-1`, and no interior entry of its frieze is
//! a unit `1` or `-1`, so it is irreducible over `Z[i]`.

use crate::cycle::QuiddityCycle;
use crate::error::{Error, Result};
use crate::frieze::{make_frieze, FriezeEntry};
use crate::ring::{RingElement, Sign};

pub fn gauss_family(k: usize) -> Result<QuiddityCycle> {
    if k == 0 {
        return Err(Error::Range("the Gaussian family starts at k = 1".into()));
    }
    let g = RingElement::gaussian;
    let mut entries = Vec::with_capacity(4 * k + 6);
    entries.push(g(0, 2));
    entries.push(g(1, -1));
    entries.extend(std::iter::repeat_n(g(2, 0), 2 * k));
    entries.push(g(1, 1));
    entries.push(g(0, -2));
    entries.push(g(-1, 1));
    entries.extend(std::iter::repeat_n(g(-2, 0), 2 * k));
    entries.push(g(-1, -1));
    QuiddityCycle::with_lambda(entries, Sign::Minus)
}

/// `2ik + i - 1`, the frieze entry `x[1, 2k+5]` in 1-based indexing.
pub fn marker_value(k: usize) -> RingElement {
    RingElement::gaussian(-1, 2 * k as i64 + 1)
}

#[derive(Clone, Debug)]
pub struct GaussReport {
    pub k: usize,
    pub cycle: QuiddityCycle,
    /// All interior entries of one period.
    pub entries: Vec<FriezeEntry>,
    /// Interior entries equal to `1` or `-1`; empty when irreducible.
    pub unit_entries: Vec<FriezeEntry>,
    /// `x[0, 2k+4]` in 0-based indexing.
    pub marker: RingElement,
}

impl GaussReport {
    pub fn irreducible(&self) -> bool {
        self.unit_entries.is_empty()
    }
}

/// Computes the full frieze of the `k`-th family member and collects any
/// unit entries. By the unit-entry criterion the cycle is irreducible over
/// the ring `Z[i]` exactly when none are found.
pub fn verify_gauss_irreducible(k: usize) -> Result<GaussReport> {
    let cycle = gauss_family(k)?;
    let frieze = make_frieze(&cycle);
    let entries = frieze.entries();
    let unit_entries = entries
        .iter()
        .filter(|e| e.value.is_pm_one().is_some())
        .cloned()
        .collect();
    let marker = frieze
        .get(0, 2 * k as isize + 4)
        .expect("2k+4 <= m-2")
        .clone();
    Ok(GaussReport {
        k,
        cycle,
        entries,
        unit_entries,
        marker,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eta::{eta, eta_power_closed, eta_product, Matrix2, PowerBase};
    use crate::ring::Domain;

    #[test]
    fn first_member() {
        let c = gauss_family(1).unwrap();
        assert_eq!(c.to_string(), "2i,1-i,2,2,1+i,-2i,-1+i,-2,-2,-1-i");
        assert_eq!(c.lambda(), Sign::Minus);
        assert_eq!(gauss_family(2).unwrap().len(), 14);
        assert!(gauss_family(0).is_err());
    }

    #[test]
    fn partial_product_closed_form() {
        for k in 1..=6usize {
            let c = gauss_family(k).unwrap();
            let direct = eta_product(&c.entries()[..2 * k + 3]).unwrap();
            let g = |re: i64, im: i64| RingElement::gaussian(re, im);
            let kk = k as i64;
            let expect = Matrix2::new(
                g(-1, 2 * kk + 1),
                g(-2 * kk - 1, -2),
                g(2 * kk + 1, 0),
                g(-1, 2 * kk + 1),
            )
            .unwrap();
            assert_eq!(direct, expect, "k = {k}");
            // same product through the closed form of eta(2)^(2k)
            let power = eta_power_closed(PowerBase::Two, 2 * k as u64)
                .unwrap()
                .embed(Domain::Gaussian)
                .unwrap();
            let via_power = &(&(&eta(&g(0, 2)) * &eta(&g(1, -1))) * &power) * &eta(&g(1, 1));
            assert_eq!(via_power, expect);
        }
    }

    #[test]
    fn small_members_are_irreducible() {
        for k in [1, 5] {
            let r = verify_gauss_irreducible(k).unwrap();
            assert!(r.irreducible(), "k = {k}: {:?}", r.unit_entries);
            assert_eq!(r.marker, marker_value(k));
            let m = 4 * k + 6;
            assert_eq!(r.entries.len(), m * (m - 3));
        }
        assert_eq!(marker_value(1).to_string(), "-1+3i");
    }

    #[test]
    fn corrupted_member_is_not_a_cycle() {
        let mut entries = gauss_family(1).unwrap().entries().to_vec();
        entries[2] = RingElement::gaussian(1, 0);
        assert!(matches!(QuiddityCycle::new(entries), Err(Error::NotACycle(_))));
    }
}
