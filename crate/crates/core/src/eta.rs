//! 2x2 matrices over a ring and the map `eta(c) = [[c, -1], [1, 0]]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Domain, RingElement, Sign};

/// A 2x2 matrix whose entries share one domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    entries: [RingElement; 4],
}

impl Matrix2 {
    pub fn new(a11: RingElement, a12: RingElement, a21: RingElement, a22: RingElement) -> Result<Self> {
        let d = a11.domain();
        if [&a12, &a21, &a22].iter().any(|x| x.domain() != d) {
            return Err(Error::Domain("matrix entries must share one domain".into()));
        }
        Ok(Matrix2 {
            entries: [a11, a12, a21, a22],
        })
    }

    fn from_parts(entries: [RingElement; 4]) -> Self {
        Matrix2 { entries }
    }

    pub fn identity(domain: Domain) -> Self {
        let (z, o) = (RingElement::zero(domain), RingElement::one(domain));
        Matrix2::from_parts([o.clone(), z.clone(), z, o])
    }

    pub fn from_ints(domain: Domain, rows: [[i64; 2]; 2]) -> Self {
        Matrix2::from_parts([
            RingElement::from_int(domain, rows[0][0]),
            RingElement::from_int(domain, rows[0][1]),
            RingElement::from_int(domain, rows[1][0]),
            RingElement::from_int(domain, rows[1][1]),
        ])
    }

    pub fn domain(&self) -> Domain {
        self.entries[0].domain()
    }

    pub fn a11(&self) -> &RingElement {
        &self.entries[0]
    }

    pub fn a12(&self) -> &RingElement {
        &self.entries[1]
    }

    pub fn a21(&self) -> &RingElement {
        &self.entries[2]
    }

    pub fn a22(&self) -> &RingElement {
        &self.entries[3]
    }

    pub fn det(&self) -> RingElement {
        &(self.a11() * self.a22()) - &(self.a12() * self.a21())
    }

    /// Checked product `self * rhs`.
    pub fn mat_mul(&self, rhs: &Matrix2) -> Result<Matrix2> {
        if self.domain() != rhs.domain() {
            return Err(Error::Domain(format!(
                "cannot multiply matrices over {} and {}",
                self.domain(),
                rhs.domain()
            )));
        }
        Ok(self * rhs)
    }

    pub fn scale(&self, s: &RingElement) -> Matrix2 {
        Matrix2::from_parts(self.entries.clone().map(|x| s * &x))
    }

    /// Right-multiplication by `eta(c)`, the step used by every running product.
    pub fn mul_eta(&self, c: &RingElement) -> Matrix2 {
        let [a, b, cc, d] = &self.entries;
        Matrix2::from_parts([
            &(a * c) + b,
            -a,
            &(cc * c) + d,
            -cc,
        ])
    }

    /// Image of an integer matrix under `Z -> domain`.
    pub fn embed(&self, domain: Domain) -> Result<Matrix2> {
        let ints = self
            .entries
            .iter()
            .map(|x| x.as_integer().cloned())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Domain(format!("only integer matrices embed, not {}", self.domain())))?;
        let [a, b, c, d]: [_; 4] = ints.try_into().expect("four entries");
        Ok(Matrix2::from_parts([a, b, c, d].map(|v| RingElement::from_int(domain, v))))
    }

    pub fn neg(&self) -> Matrix2 {
        Matrix2::from_parts(self.entries.clone().map(|x| -x))
    }

    /// `+1` for the identity, `-1` for its negative. In `Z/2` the two coincide
    /// and the answer is `+1`.
    pub fn scalar_id_sign(&self) -> Option<Sign> {
        let id = Matrix2::identity(self.domain());
        if *self == id {
            Some(Sign::Plus)
        } else if *self == id.neg() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

impl std::ops::Mul for &Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: &Matrix2) -> Matrix2 {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Matrix2::from_parts([
            &(a * e) + &(b * g),
            &(a * f) + &(b * h),
            &(c * e) + &(d * g),
            &(c * f) + &(d * h),
        ])
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

pub fn eta(c: &RingElement) -> Matrix2 {
    let d = c.domain();
    Matrix2::from_parts([
        c.clone(),
        -&RingElement::one(d),
        RingElement::one(d),
        RingElement::zero(d),
    ])
}

/// `eta(c)^-1 = [[0, 1], [-1, c]]`.
pub fn eta_inv(c: &RingElement) -> Matrix2 {
    let d = c.domain();
    Matrix2::from_parts([
        RingElement::zero(d),
        RingElement::one(d),
        -&RingElement::one(d),
        c.clone(),
    ])
}

/// Ordered product `eta(c_1) * eta(c_2) * ... * eta(c_n)`, left to right.
///
/// Returns `None` for an empty slice since the domain is then unknown.
pub fn eta_product(cs: &[RingElement]) -> Option<Matrix2> {
    let first = cs.first()?;
    Some(
        cs[1..]
            .iter()
            .fold(eta(first), |acc, c| acc.mul_eta(c)),
    )
}

/// Like [`eta_product`] but rejects mixed domains.
pub fn checked_eta_product(cs: &[RingElement]) -> Result<Matrix2> {
    let first = cs
        .first()
        .ok_or_else(|| Error::Length("empty product".into()))?;
    let d = first.domain();
    if cs.iter().any(|c| c.domain() != d) {
        return Err(Error::Domain("entries must share one domain".into()));
    }
    Ok(eta_product(cs).expect("nonempty"))
}

/// Which of `eta(2)` and `eta(-2)` a closed-form power refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerBase {
    Two,
    MinusTwo,
}

/// Closed form of `eta(2)^l` or `eta(-2)^l` over the integers, `l >= 1`.
///
/// `eta(2)^l = [[l+1, -l], [l, 1-l]]` and
/// `eta(-2)^l = (-1)^l [[l+1, l], [-l, 1-l]]`.
pub fn eta_power_closed(base: PowerBase, l: u64) -> Result<Matrix2> {
    if l == 0 {
        return Err(Error::Range("exponent must be positive".into()));
    }
    let d = Domain::Integer;
    let l = num_bigint::BigInt::from(l);
    let one = num_bigint::BigInt::from(1);
    let e = |v: num_bigint::BigInt| RingElement::from_int(d, v);
    Ok(match base {
        PowerBase::Two => Matrix2::from_parts([
            e(&l + &one),
            e(-&l),
            e(l.clone()),
            e(&one - &l),
        ]),
        PowerBase::MinusTwo => {
            let m = Matrix2::from_parts([e(&l + &one), e(l.clone()), e(-&l), e(&one - &l)]);
            if l.bit(0) {
                m.neg()
            } else {
                m
            }
        }
    })
}
