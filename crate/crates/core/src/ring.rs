//! Exact coefficient domains.
//!
//! Four fixed domains are supported: the integers, the rationals, the
//! Gaussian integers and the residue rings `Z/n`. Every value is kept in a
//! canonical form, so structural equality is semantic equality.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ambient ring every element of a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Integer,
    Rational,
    Gaussian,
    Modular(u64),
}

impl Domain {
    pub fn modular(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("modulus must be at least 2, got {n}")));
        }
        Ok(Domain::Modular(n))
    }

    /// Short tag used in JSON documents and on the command line.
    pub fn tag(&self) -> &'static str {
        match self {
            Domain::Integer => "Z",
            Domain::Rational => "Q",
            Domain::Gaussian => "Z[i]",
            Domain::Modular(_) => "Z/n",
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Domain::Modular(n) => Some(*n),
            _ => None,
        }
    }

    /// Builds a domain from its JSON tag and the optional `n` field.
    pub fn from_tag(tag: &str, n: Option<u64>) -> Result<Self> {
        match (tag, n) {
            ("Z", None) => Ok(Domain::Integer),
            ("Q", None) => Ok(Domain::Rational),
            ("Z[i]", None) => Ok(Domain::Gaussian),
            ("Z/n", Some(n)) => Domain::modular(n),
            ("Z/n", None) => Err(Error::Domain("domain Z/n needs the field n".into())),
            (t, Some(_)) if t != "Z/n" => {
                Err(Error::Domain(format!("field n is only allowed with Z/n, not {t}")))
            }
            (t, _) => Err(Error::Domain(format!("unknown domain tag {t:?}"))),
        }
    }

    /// `1 = -1` holds exactly in `Z/2`.
    pub fn one_is_minus_one(&self) -> bool {
        matches!(self, Domain::Modular(2))
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Modular(n) => write!(f, "Z/{n}"),
            d => f.write_str(d.tag()),
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    /// Accepts `Z`, `Q`, `Z[i]` and `Z/n` with a literal modulus, e.g. `Z/7`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Z" => Ok(Domain::Integer),
            "Q" => Ok(Domain::Rational),
            "Z[i]" => Ok(Domain::Gaussian),
            _ => match s.strip_prefix("Z/") {
                Some(n) => {
                    let n: u64 = n.parse().map_err(|_| Error::parse(s, "bad modulus"))?;
                    Domain::modular(n)
                }
                None => Err(Error::parse(s, "expected one of Z, Q, Z[i], Z/n")),
            },
        }
    }
}

/// A sign `+1` or `-1`. Used for the `lambda` of a cycle and for unit entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// The signs that are distinct in `domain`: only `+1` when `1 = -1`.
    pub fn distinct_in(domain: Domain) -> &'static [Sign] {
        if domain.one_is_minus_one() {
            &Sign::BOTH[..1]
        } else {
            &Sign::BOTH
        }
    }

    pub fn element(self, domain: Domain) -> RingElement {
        match self {
            Sign::Plus => RingElement::one(domain),
            Sign::Minus => -&RingElement::one(domain),
        }
    }

    /// Canonical representative in `domain` (collapses to `+1` in `Z/2`).
    pub fn normalized(self, domain: Domain) -> Sign {
        if domain.one_is_minus_one() {
            Sign::Plus
        } else {
            self
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i8())
    }
}

/// An exact value in one of the supported domains.
///
/// Rationals are always reduced with a positive denominator and residues
/// always lie in `[0, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(BigInt),
    Rational(BigRational),
    Gaussian(Complex<BigInt>),
    Modular { residue: u64, modulus: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

impl RingElement {
    pub fn domain(&self) -> Domain {
        match self {
            RingElement::Integer(_) => Domain::Integer,
            RingElement::Rational(_) => Domain::Rational,
            RingElement::Gaussian(_) => Domain::Gaussian,
            RingElement::Modular { modulus, .. } => Domain::Modular(*modulus),
        }
    }

    pub fn zero(domain: Domain) -> Self {
        RingElement::from_int(domain, BigInt::zero())
    }

    pub fn one(domain: Domain) -> Self {
        RingElement::from_int(domain, BigInt::one())
    }

    /// Image of an integer under the canonical map `Z -> domain`.
    pub fn from_int(domain: Domain, v: impl Into<BigInt>) -> Self {
        let v = v.into();
        match domain {
            Domain::Integer => RingElement::Integer(v),
            Domain::Rational => RingElement::Rational(BigRational::from_integer(v)),
            Domain::Gaussian => RingElement::Gaussian(Complex::new(v, BigInt::zero())),
            Domain::Modular(n) => RingElement::Modular {
                residue: reduce_mod(&v, n),
                modulus: n,
            },
        }
    }

    pub fn int(v: i64) -> Self {
        RingElement::Integer(BigInt::from(v))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        RingElement::Gaussian(Complex::new(BigInt::from(re), BigInt::from(im)))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        RingElement::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn modular(v: i64, n: u64) -> Self {
        RingElement::from_int(Domain::Modular(n), v)
    }

    /// Parses a literal in the grammar of `domain`.
    pub fn parse(domain: Domain, literal: &str) -> Result<Self> {
        let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::parse(literal, "empty literal"));
        }
        match domain {
            Domain::Integer | Domain::Modular(_) => {
                if s.contains('/') {
                    return Err(Error::Domain(format!("{literal:?} is not an integer literal")));
                }
                if s.contains('i') {
                    return Err(Error::Domain(format!("{literal:?} is not a {domain} literal")));
                }
                Ok(RingElement::from_int(domain, parse_int(literal, &s)?))
            }
            Domain::Rational => {
                if s.contains('i') {
                    return Err(Error::Domain(format!("{literal:?} is not a rational literal")));
                }
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (parse_int(literal, n)?, parse_int(literal, d)?),
                    None => (parse_int(literal, &s)?, BigInt::one()),
                };
                if den.is_zero() {
                    return Err(Error::parse(literal, "zero denominator"));
                }
                Ok(RingElement::Rational(BigRational::new(num, den)))
            }
            Domain::Gaussian => {
                if s.contains('/') {
                    return Err(Error::Domain(format!("{literal:?} is not a Gaussian integer")));
                }
                parse_gaussian(literal, &s).map(RingElement::Gaussian)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Integer(v) => v.is_zero(),
            RingElement::Rational(v) => v.is_zero(),
            RingElement::Gaussian(v) => v.re.is_zero() && v.im.is_zero(),
            RingElement::Modular { residue, .. } => *residue == 0,
        }
    }

    /// Reports whether the element is `1` or `-1`. In `Z/2` the answer is `+1`.
    pub fn is_pm_one(&self) -> Option<Sign> {
        let domain = self.domain();
        if *self == RingElement::one(domain) {
            Some(Sign::Plus)
        } else if *self == -&RingElement::one(domain) {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    fn same_domain(&self, other: &RingElement) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "cannot combine elements of {} and {}",
                self.domain(),
                other.domain()
            )))
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_domain(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.same_domain(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_domain(other)?;
        Ok(self * other)
    }

    /// Squared absolute value for integers, field norm for Gaussian integers.
    pub fn norm(&self) -> Option<BigInt> {
        match self {
            RingElement::Integer(v) => Some(v * v),
            RingElement::Gaussian(v) => Some(&v.re * &v.re + &v.im * &v.im),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingElement::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|v| v.to_i64())
    }
}

/// Applies one ring operation. `Neg` ignores `y`.
pub fn arith(op: ArithOp, x: &RingElement, y: &RingElement) -> Result<RingElement> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Neg => Ok(-x),
    }
}

fn reduce_mod(v: &BigInt, n: u64) -> u64 {
    v.mod_floor(&BigInt::from(n))
        .to_u64()
        .expect("residue fits the modulus")
}

fn parse_int(literal: &str, s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(literal, "expected an integer"));
    }
    s.parse().map_err(|_| Error::parse(literal, "expected an integer"))
}

/// Sum of at most one real and one imaginary term, in either order:
/// `3`, `-2i`, `i`, `1+2i`, `-i+1`.
fn parse_gaussian(literal: &str, s: &str) -> Result<Complex<BigInt>> {
    let mut terms = Vec::new();
    let mut start = 0;
    for (pos, ch) in s.char_indices().skip(1) {
        if ch == '+' || ch == '-' {
            terms.push(&s[start..pos]);
            start = pos;
        }
    }
    terms.push(&s[start..]);

    let mut re: Option<BigInt> = None;
    let mut im: Option<BigInt> = None;
    for term in terms {
        if let Some(coeff) = term.strip_suffix('i') {
            if im.is_some() {
                return Err(Error::parse(literal, "two imaginary parts"));
            }
            let v = match coeff {
                "" | "+" => BigInt::one(),
                "-" => -BigInt::one(),
                c => parse_int(literal, c)?,
            };
            im = Some(v);
        } else {
            if re.is_some() {
                return Err(Error::parse(literal, "two real parts"));
            }
            re = Some(parse_int(literal, term)?);
        }
    }
    Ok(Complex::new(re.unwrap_or_default(), im.unwrap_or_default()))
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(v) => write!(f, "{v}"),
            RingElement::Rational(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            RingElement::Gaussian(v) => {
                let imag = |f: &mut fmt::Formatter<'_>, im: &BigInt, lead: bool| {
                    let sign = if im.is_negative() {
                        "-"
                    } else if lead {
                        ""
                    } else {
                        "+"
                    };
                    let mag = im.abs();
                    if mag.is_one() {
                        write!(f, "{sign}i")
                    } else {
                        write!(f, "{sign}{mag}i")
                    }
                };
                match (v.re.is_zero(), v.im.is_zero()) {
                    (_, true) => write!(f, "{}", v.re),
                    (true, false) => imag(f, &v.im, true),
                    (false, false) => {
                        write!(f, "{}", v.re)?;
                        imag(f, &v.im, false)
                    }
                }
            }
            RingElement::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl Ord for RingElement {
    /// Integers and rationals by value, Gaussian integers by `(norm, re, im)`,
    /// residues numerically. Elements of different domains order by domain.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => a.cmp(b),
            (RingElement::Rational(a), RingElement::Rational(b)) => a.cmp(b),
            (RingElement::Gaussian(a), RingElement::Gaussian(b)) => {
                let na = &a.re * &a.re + &a.im * &a.im;
                let nb = &b.re * &b.re + &b.im * &b.im;
                na.cmp(&nb)
                    .then_with(|| a.re.cmp(&b.re))
                    .then_with(|| a.im.cmp(&b.im))
            }
            (
                RingElement::Modular { residue: a, modulus: n },
                RingElement::Modular { residue: b, modulus: m },
            ) => n.cmp(m).then(a.cmp(b)),
            _ => self.domain().cmp(&other.domain()),
        }
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn mismatch(a: &RingElement, b: &RingElement) -> ! {
    panic!(
        "ring elements from different domains: {} and {}",
        a.domain(),
        b.domain()
    )
}

// The operator impls panic on mixed domains. Callers that cannot rule that
// out use the `checked_*` methods.
impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, rhs) {
            (Integer(a), Integer(b)) => Integer(a + b),
            (Rational(a), Rational(b)) => Rational(a + b),
            (Gaussian(a), Gaussian(b)) => Gaussian(a + b),
            (Modular { residue: a, modulus: n }, Modular { residue: b, modulus: m }) if n == m => {
                Modular {
                    residue: ((*a as u128 + *b as u128) % *n as u128) as u64,
                    modulus: *n,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, rhs) {
            (Integer(a), Integer(b)) => Integer(a * b),
            (Rational(a), Rational(b)) => Rational(a * b),
            (Gaussian(a), Gaussian(b)) => Gaussian(a * b),
            (Modular { residue: a, modulus: n }, Modular { residue: b, modulus: m }) if n == m => {
                Modular {
                    residue: ((*a as u128 * *b as u128) % *n as u128) as u64,
                    modulus: *n,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        use RingElement::*;
        match self {
            Integer(a) => Integer(-a),
            Rational(a) => Rational(-a),
            Gaussian(a) => Gaussian(-a.clone()),
            Modular { residue, modulus } => Modular {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetKind {
    WholeRing,
    NonNegativeIntegers,
    PositiveIntegers,
    FiniteList(BTreeSet<RingElement>),
    NormBounded(u64),
}

/// The set `R` that cycle entries and summands are drawn from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSpec {
    kind: SubsetKind,
    domain: Domain,
}

impl SubsetSpec {
    pub fn new(kind: SubsetKind, domain: Domain) -> Result<Self> {
        match &kind {
            SubsetKind::NonNegativeIntegers | SubsetKind::PositiveIntegers
                if domain != Domain::Integer =>
            {
                return Err(Error::Domain(format!(
                    "sign-restricted subsets need the integer domain, not {domain}"
                )));
            }
            SubsetKind::NormBounded(_)
                if !matches!(domain, Domain::Integer | Domain::Gaussian) =>
            {
                return Err(Error::Domain(format!(
                    "norm-bounded subsets need Z or Z[i], not {domain}"
                )));
            }
            SubsetKind::FiniteList(items) => {
                if let Some(bad) = items.iter().find(|x| x.domain() != domain) {
                    return Err(Error::Domain(format!("{bad} is not an element of {domain}")));
                }
            }
            _ => {}
        }
        Ok(SubsetSpec { kind, domain })
    }

    pub fn whole(domain: Domain) -> Self {
        SubsetSpec {
            kind: SubsetKind::WholeRing,
            domain,
        }
    }

    pub fn non_negative() -> Self {
        SubsetSpec {
            kind: SubsetKind::NonNegativeIntegers,
            domain: Domain::Integer,
        }
    }

    pub fn positive() -> Self {
        SubsetSpec {
            kind: SubsetKind::PositiveIntegers,
            domain: Domain::Integer,
        }
    }

    pub fn finite(domain: Domain, items: impl IntoIterator<Item = RingElement>) -> Result<Self> {
        SubsetSpec::new(SubsetKind::FiniteList(items.into_iter().collect()), domain)
    }

    pub fn norm_bounded(domain: Domain, bound: u64) -> Result<Self> {
        SubsetSpec::new(SubsetKind::NormBounded(bound), domain)
    }

    pub fn kind(&self) -> &SubsetKind {
        &self.kind
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_whole_ring(&self) -> bool {
        self.kind == SubsetKind::WholeRing
    }

    pub fn is_member(&self, x: &RingElement) -> Result<bool> {
        if x.domain() != self.domain {
            return Err(Error::Domain(format!(
                "{x} belongs to {}, subset is over {}",
                x.domain(),
                self.domain
            )));
        }
        Ok(self.contains(x))
    }

    /// Membership without the domain check; foreign elements are never members.
    pub(crate) fn contains(&self, x: &RingElement) -> bool {
        if x.domain() != self.domain {
            return false;
        }
        match &self.kind {
            SubsetKind::WholeRing => true,
            SubsetKind::NonNegativeIntegers => x.as_integer().is_some_and(|v| !v.is_negative()),
            SubsetKind::PositiveIntegers => x.as_integer().is_some_and(|v| v.is_positive()),
            SubsetKind::FiniteList(items) => items.contains(x),
            SubsetKind::NormBounded(bound) => x.norm().is_some_and(|n| n <= BigInt::from(*bound)),
        }
    }
}

impl fmt::Display for SubsetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SubsetKind::WholeRing => write!(f, "{}", self.domain),
            SubsetKind::NonNegativeIntegers => f.write_str("Z>=0"),
            SubsetKind::PositiveIntegers => f.write_str("Z>0"),
            SubsetKind::FiniteList(items) => {
                let items: Vec<String> = items.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}} in {}", items.join(","), self.domain)
            }
            SubsetKind::NormBounded(b) => write!(f, "{{x in {} : N(x) <= {b}}}", self.domain),
        }
    }
}

impl FromStr for SubsetKind {
    type Err = Error;

    /// Command line form: `whole`, `nonneg`, `pos`, `norm:B` or `list:a,b,...`.
    /// List items are parsed later, once the domain is known, so this only
    /// recognizes the non-list kinds.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "whole" => Ok(SubsetKind::WholeRing),
            "nonneg" => Ok(SubsetKind::NonNegativeIntegers),
            "pos" => Ok(SubsetKind::PositiveIntegers),
            _ => match s.strip_prefix("norm:") {
                Some(b) => b
                    .parse()
                    .map(SubsetKind::NormBounded)
                    .map_err(|_| Error::parse(s, "bad norm bound")),
                None => Err(Error::parse(s, "expected whole, nonneg, pos, norm:B or list:...")),
            },
        }
    }
}

impl SubsetSpec {
    /// Inverse of [`SubsetSpec::parse`].
    pub fn to_cli(&self) -> String {
        match &self.kind {
            SubsetKind::WholeRing => "whole".into(),
            SubsetKind::NonNegativeIntegers => "nonneg".into(),
            SubsetKind::PositiveIntegers => "pos".into(),
            SubsetKind::NormBounded(b) => format!("norm:{b}"),
            SubsetKind::FiniteList(items) => {
                let items: Vec<String> = items.iter().map(|x| x.to_string()).collect();
                format!("list:{}", items.join(","))
            }
        }
    }

    /// Parses the command line form of a subset over `domain`.
    pub fn parse(domain: Domain, s: &str) -> Result<Self> {
        match s.strip_prefix("list:") {
            Some(items) => {
                let items = items
                    .split(',')
                    .map(|x| RingElement::parse(domain, x))
                    .collect::<Result<Vec<_>>>()?;
                SubsetSpec::finite(domain, items)
            }
            None => SubsetSpec::new(s.parse()?, domain),
        }
    }
}
