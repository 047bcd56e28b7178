//! Lambda-quiddity cycles and the operations on them.
//!
//! Positions are 0-based throughout the library. The command line front end
//! converts to and from 1-based positions.

use std::fmt;

use crate::error::{Error, Result};
use crate::eta::checked_eta_product;
use crate::ring::{Domain, RingElement, Sign};

/// Returns `lambda` if `eta(c_1) ... eta(c_m) = lambda * Id`.
pub fn verify_cycle(entries: &[RingElement]) -> Result<Option<Sign>> {
    if entries.len() < 2 {
        return Err(Error::Length(format!(
            "a cycle has at least 2 entries, got {}",
            entries.len()
        )));
    }
    Ok(checked_eta_product(entries)?.scalar_id_sign())
}

/// A sequence `(c_1, ..., c_m)` whose ordered eta-product is `lambda * Id`.
///
/// The product is checked at construction; there is no unchecked constructor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiddityCycle {
    entries: Vec<RingElement>,
    lambda: Sign,
}

impl QuiddityCycle {
    pub fn new(entries: Vec<RingElement>) -> Result<Self> {
        match verify_cycle(&entries)? {
            Some(lambda) => Ok(QuiddityCycle { entries, lambda }),
            None => Err(Error::NotACycle(format!("({})", join(&entries)))),
        }
    }

    /// Builds a cycle and checks that its sign is the expected one.
    pub fn with_lambda(entries: Vec<RingElement>, lambda: Sign) -> Result<Self> {
        let c = QuiddityCycle::new(entries)?;
        if c.lambda != lambda.normalized(c.domain()) {
            return Err(Error::NotACycle(format!(
                "({}) has lambda = {}, not {lambda}",
                join(&c.entries),
                c.lambda
            )));
        }
        Ok(c)
    }

    pub fn parse(domain: Domain, text: &str) -> Result<Self> {
        QuiddityCycle::new(parse_entries(domain, text)?)
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        QuiddityCycle::new(values.iter().map(|&v| RingElement::int(v)).collect())
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn lambda(&self) -> Sign {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn domain(&self) -> Domain {
        self.entries[0].domain()
    }

    /// Entry at a position taken modulo the length.
    pub fn at(&self, pos: isize) -> &RingElement {
        &self.entries[pos.rem_euclid(self.len() as isize) as usize]
    }

    pub fn apply_dihedral(&self, sigma: DihedralElement) -> Result<QuiddityCycle> {
        let m = self.len();
        if sigma.rotation >= m {
            return Err(Error::Range(format!(
                "rotation {} is not below the cycle length {m}",
                sigma.rotation
            )));
        }
        let permuted = (0..m).map(|k| self.entries[sigma.image(k, m)].clone()).collect();
        let out = QuiddityCycle::new(permuted)?;
        debug_assert_eq!(out.lambda, self.lambda);
        Ok(out)
    }

    /// Lexicographically least sequence in the dihedral orbit, with the
    /// element that produces it.
    pub fn canonical_form(&self) -> (Vec<RingElement>, DihedralElement) {
        canonical_form(&self.entries)
    }

    /// Orbit representative as a cycle.
    pub fn canonical(&self) -> QuiddityCycle {
        QuiddityCycle {
            entries: self.canonical_form().0,
            lambda: self.lambda,
        }
    }

    pub fn is_dihedral_equivalent(&self, other: &QuiddityCycle) -> bool {
        self.len() == other.len() && self.canonical_form().0 == other.canonical_form().0
    }
}

impl fmt::Display for QuiddityCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.entries))
    }
}

pub(crate) fn join(entries: &[RingElement]) -> String {
    entries
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses comma-separated literals.
pub fn parse_entries(domain: Domain, text: &str) -> Result<Vec<RingElement>> {
    let text = text.trim();
    let text = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    text.split(',')
        .map(|lit| RingElement::parse(domain, lit))
        .collect()
}

/// An element of the dihedral group `D_m` acting on positions.
///
/// Applied to a sequence `c` it yields `d_k = c_{sigma(k)}` with
/// `sigma(k) = k + rotation` when not reflected and
/// `sigma(k) = rotation + m - 1 - k` when reflected (rotate, then reverse).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement {
        rotation: 0,
        reflected: false,
    };

    pub fn rotation(r: usize) -> Self {
        DihedralElement {
            rotation: r,
            reflected: false,
        }
    }

    pub fn reflection(r: usize) -> Self {
        DihedralElement {
            rotation: r,
            reflected: true,
        }
    }

    /// All `2m` elements: rotations ascending, then the reflected ones.
    pub fn all(m: usize) -> impl Iterator<Item = DihedralElement> {
        (0..m)
            .map(DihedralElement::rotation)
            .chain((0..m).map(DihedralElement::reflection))
    }

    /// `sigma(k)` for a position `k` in `0..m`.
    pub fn image(&self, k: usize, m: usize) -> usize {
        if self.reflected {
            (self.rotation + m - 1 - k % m) % m
        } else {
            (k + self.rotation) % m
        }
    }

    // sigma(k) = s*k + t (mod m)
    fn affine(&self, m: usize) -> (bool, usize) {
        if self.reflected {
            (true, (self.rotation + m - 1) % m)
        } else {
            (false, self.rotation % m)
        }
    }

    fn from_affine(reflected: bool, t: usize, m: usize) -> Self {
        if reflected {
            DihedralElement::reflection((t + 1) % m)
        } else {
            DihedralElement::rotation(t % m)
        }
    }

    /// The element `rho` with `rho(k) = self(next(k))`, so that applying
    /// `self` and then `next` equals applying `rho`.
    pub fn then(&self, next: &DihedralElement, m: usize) -> DihedralElement {
        let (r1, t1) = self.affine(m);
        let (r2, t2) = next.affine(m);
        // self(next(k)) = s1 (s2 k + t2) + t1
        let t = if r1 { (t1 + m - t2 % m) % m } else { (t1 + t2) % m };
        DihedralElement::from_affine(r1 != r2, t, m)
    }

    pub fn inverse(&self, m: usize) -> DihedralElement {
        if self.reflected {
            *self
        } else {
            DihedralElement::rotation((m - self.rotation % m) % m)
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "rot{}+rev", self.rotation)
        } else {
            write!(f, "rot{}", self.rotation)
        }
    }
}

pub fn canonical_form(entries: &[RingElement]) -> (Vec<RingElement>, DihedralElement) {
    let m = entries.len();
    let mut best: Option<(Vec<RingElement>, DihedralElement)> = None;
    for sigma in DihedralElement::all(m) {
        let is_less = match &best {
            None => true,
            Some((b, _)) => {
                let candidate = (0..m).map(|k| &entries[sigma.image(k, m)]);
                candidate.lt(b.iter())
            }
        };
        if is_less {
            let seq = (0..m).map(|k| entries[sigma.image(k, m)].clone()).collect();
            best = Some((seq, sigma));
        }
    }
    best.expect("D_m is nonempty")
}

/// True iff `entries` is the least sequence of its dihedral orbit.
pub fn is_canonical(entries: &[RingElement]) -> bool {
    let m = entries.len();
    DihedralElement::all(m).skip(1).all(|sigma| {
        let other = (0..m).map(|k| &entries[sigma.image(k, m)]);
        !other.lt(entries.iter())
    })
}

/// The sum `(a_1+b_l, a_2, ..., a_{k-1}, a_k+b_1, b_2, ..., b_{l-1})`,
/// a `(-lambda' lambda'')`-cycle of length `k + l - 2`.
pub fn cycle_sum(a: &QuiddityCycle, b: &QuiddityCycle) -> Result<QuiddityCycle> {
    if a.domain() != b.domain() {
        return Err(Error::Domain(format!(
            "cannot glue cycles over {} and {}",
            a.domain(),
            b.domain()
        )));
    }
    let (ae, be) = (a.entries(), b.entries());
    let (k, l) = (ae.len(), be.len());
    let mut out = Vec::with_capacity(k + l - 2);
    out.push(&ae[0] + &be[l - 1]);
    out.extend_from_slice(&ae[1..k - 1]);
    out.push(&ae[k - 1] + &be[0]);
    out.extend_from_slice(&be[1..l - 1]);
    let sum = QuiddityCycle::new(out)?;
    let expected = (-(a.lambda() * b.lambda())).normalized(sum.domain());
    if sum.lambda() != expected {
        return Err(Error::NotACycle(format!(
            "sum ({sum}) has lambda = {} instead of {expected}",
            sum.lambda()
        )));
    }
    Ok(sum)
}

/// Removes a zero entry and merges its two neighbours by addition, negating
/// `lambda`. This undoes gluing with a `(x, 0, -x, 0)`-type cycle.
///
/// The merged entry comes first in the result, followed by the entries after
/// the removed neighbours in cyclic order.
pub fn zero_contract(c: &QuiddityCycle, pos: usize) -> Result<QuiddityCycle> {
    let m = c.len();
    if pos >= m {
        return Err(Error::Range(format!("position {pos} outside a cycle of length {m}")));
    }
    if m < 4 {
        return Err(Error::Length(format!(
            "zero contraction needs length at least 4, got {m}"
        )));
    }
    if !c.entries[pos].is_zero() {
        return Err(Error::NotZero(pos));
    }
    let p = pos as isize;
    let mut out = Vec::with_capacity(m - 2);
    out.push(c.at(p - 1) + c.at(p + 1));
    out.extend((2..m as isize - 1).map(|off| c.at(p + off).clone()));
    let res = QuiddityCycle::new(out)?;
    debug_assert_eq!(res.lambda(), (-c.lambda()).normalized(c.domain()));
    Ok(res)
}
