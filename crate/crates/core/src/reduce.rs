//! Reducibility of cycles and decomposition into irreducible summands.
//!
//! Over a whole ring a cycle splits exactly when its frieze has an interior
//! entry `1` or `-1`, and the split is built directly from that entry. Over a
//! proper subset the search runs over all dihedral elements and summand
//! lengths; for fixed `(sigma, k)` the interior of the first summand pins the
//! partial product and therefore both of its free endpoints, so no entries
//! need to be guessed.

use std::fmt::Write as _;

use crate::cycle::{cycle_sum, DihedralElement, QuiddityCycle};
use crate::error::{Error, Result};
use crate::eta::{eta, Matrix2};
use crate::frieze::{make_frieze, FriezePattern};
use crate::ring::{RingElement, Sign, SubsetSpec};

/// Evidence that `c^sigma = summand_a (+) summand_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub sigma: DihedralElement,
    /// Length of `summand_a`; `summand_b` has length `m - k + 2`.
    pub k: usize,
    pub summand_a: QuiddityCycle,
    pub summand_b: QuiddityCycle,
    /// First entry of `summand_a`.
    pub derived_a1: RingElement,
    /// Last entry of `summand_a`.
    pub derived_ak: RingElement,
}

impl SplitWitness {
    /// Checks the sum, the sign law and the lengths against `original`.
    pub fn check(&self, original: &QuiddityCycle) -> Result<()> {
        let m = original.len();
        let l = self.summand_b.len();
        if self.summand_a.len() != self.k || self.k < 3 || l < 3 || self.k + l - 2 != m {
            return Err(Error::MalformedTree(format!(
                "summand lengths {} and {l} do not split a cycle of length {m}",
                self.summand_a.len()
            )));
        }
        if self.sigma.rotation >= m {
            return Err(Error::MalformedTree(format!("{} is not in D_{m}", self.sigma)));
        }
        let permuted = original.apply_dihedral(self.sigma)?;
        let sum = cycle_sum(&self.summand_a, &self.summand_b)?;
        if sum != permuted {
            return Err(Error::MalformedTree(format!(
                "({}) (+) ({}) = ({sum}), expected ({permuted})",
                self.summand_a, self.summand_b
            )));
        }
        Ok(())
    }

    /// The two seam positions of `original` (0-based) where the summands meet.
    pub fn seams(&self, m: usize) -> (usize, usize) {
        (self.sigma.image(0, m), self.sigma.image(self.k - 1, m))
    }
}

/// First interior entry equal to `1` or `-1`, scanning `i` then `j`.
pub fn find_unit_entry(f: &FriezePattern) -> Option<(usize, usize, Sign)> {
    f.entries()
        .into_iter()
        .find_map(|e| e.value.is_pm_one().map(|s| (e.i, e.j, s)))
}

/// Splits `c` along the frieze entry `x[i, j] = eps` (0-based, `j` may exceed
/// `m`, with `i + 2 <= j <= i + m - 2`).
///
/// With `M = eta(c_i) ... eta(c_{j-2})`, `a = eps M21` and `b = -eps M12`,
/// the summands are `(a, c_i, ..., c_{j-2}, b)` with sign `-eps` and
/// `(c_{j-1} - b, c_j, ..., c_{i-1} - a)` with sign `lambda eps`. Their sum is
/// the rotation of `c` that starts at `c_{i-1}`.
pub fn split_at_unit(c: &QuiddityCycle, i: usize, j: usize, eps: Sign) -> Result<SplitWitness> {
    let m = c.len();
    if i >= m || j < i + 2 || j + 2 > i + m {
        return Err(Error::Range(format!(
            "need 0 <= i < {m} and i + 2 <= j <= i + {}, got i = {i}, j = {j}",
            m as isize - 2
        )));
    }
    let d = c.domain();
    let (ii, jj) = (i as isize, j as isize);
    let prod = (ii + 1..=jj - 2).fold(eta(c.at(ii)), |acc, k| acc.mul_eta(c.at(k)));
    let eps = eps.normalized(d);
    let eps_el = eps.element(d);
    if prod.a11() != &eps_el {
        return Err(Error::NotUnit { i, j });
    }
    let a = &eps_el * prod.a21();
    let b = -&(&eps_el * prod.a12());

    let mut first = Vec::with_capacity(j - i + 1);
    first.push(a.clone());
    first.extend((ii..=jj - 2).map(|k| c.at(k).clone()));
    first.push(b.clone());
    let summand_a = QuiddityCycle::with_lambda(first, -eps)?;

    let l = m + i + 1 - j;
    let mut second = Vec::with_capacity(l);
    second.push(c.at(jj - 1) - &b);
    second.extend((jj..ii - 1 + m as isize).map(|k| c.at(k).clone()));
    second.push(c.at(ii - 1) - &a);
    let summand_b = QuiddityCycle::with_lambda(second, c.lambda() * eps)?;

    let witness = SplitWitness {
        sigma: DihedralElement::rotation((i + m - 1) % m),
        k: summand_a.len(),
        summand_a,
        summand_b,
        derived_a1: a,
        derived_ak: b,
    };
    debug_assert!(witness.check(c).is_ok());
    Ok(witness)
}

/// Exhaustive split search over `D_m` and summand lengths with summand
/// entries restricted to `subset`. First success in scan order wins:
/// rotations ascending, then reflections; `k` ascending.
pub fn search_split(c: &QuiddityCycle, subset: &SubsetSpec) -> Result<Option<SplitWitness>> {
    check_reducible_input(c, subset)?;
    let m = c.len();
    for sigma in DihedralElement::all(m) {
        let d: Vec<RingElement> = (0..m).map(|p| c.entries()[sigma.image(p, m)].clone()).collect();
        if let Some(w) = search_at(c, &d, sigma, subset) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn search_at(
    c: &QuiddityCycle,
    d: &[RingElement],
    sigma: DihedralElement,
    subset: &SubsetSpec,
) -> Option<SplitWitness> {
    let m = d.len();
    let dom = c.domain();
    // prefix = eta(d_1) ... eta(d_{k-2}) (0-based), the interior of summand_a
    let mut prefix: Option<Matrix2> = None;
    for k in 3..m {
        prefix = Some(match prefix {
            None => eta(&d[1]),
            Some(p) => p.mul_eta(&d[k - 2]),
        });
        let mat = prefix.as_ref().expect("set above");
        for &lam_a in Sign::distinct_in(dom) {
            let l = lam_a.element(dom);
            if *mat.a11() != -&l {
                continue;
            }
            let ak = &l * mat.a12();
            let a1 = -&(&l * mat.a21());
            if *mat.a22() != &l * &(&(&a1 * &ak) - &RingElement::one(dom)) {
                continue;
            }
            let b1 = &d[k - 1] - &ak;
            let bl = &d[0] - &a1;
            if ![&a1, &ak, &b1, &bl]
                .into_iter()
                .chain(&d[1..k - 1])
                .chain(&d[k..])
                .all(|x| subset.contains(x))
            {
                continue;
            }
            let mut first = Vec::with_capacity(k);
            first.push(a1.clone());
            first.extend_from_slice(&d[1..k - 1]);
            first.push(ak.clone());
            let mut second = Vec::with_capacity(m - k + 2);
            second.push(b1);
            second.extend_from_slice(&d[k..]);
            second.push(bl);
            let lam_b = -(c.lambda() * lam_a);
            let (Ok(summand_a), Ok(summand_b)) = (
                QuiddityCycle::with_lambda(first, lam_a),
                QuiddityCycle::with_lambda(second, lam_b),
            ) else {
                continue;
            };
            return Some(SplitWitness {
                sigma,
                k,
                summand_a,
                summand_b,
                derived_a1: a1,
                derived_ak: ak,
            });
        }
    }
    None
}

fn check_reducible_input(c: &QuiddityCycle, subset: &SubsetSpec) -> Result<()> {
    if c.len() < 3 {
        return Err(Error::Length(format!(
            "reducibility is defined for length at least 3, got {}",
            c.len()
        )));
    }
    if c.domain() != subset.domain() {
        return Err(Error::Domain(format!(
            "cycle over {} but subset over {}",
            c.domain(),
            subset.domain()
        )));
    }
    Ok(())
}

/// A split of `c` with both summands over `subset`, or `None` if `c` is
/// irreducible over it.
pub fn is_reducible(c: &QuiddityCycle, subset: &SubsetSpec) -> Result<Option<SplitWitness>> {
    check_reducible_input(c, subset)?;
    if subset.is_whole_ring() {
        match find_unit_entry(&make_frieze(c)) {
            Some((i, j, eps)) => split_at_unit(c, i, j, eps).map(Some),
            None => Ok(None),
        }
    } else {
        search_split(c, subset)
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf {
        cycle: QuiddityCycle,
        irreducible: bool,
    },
    Node {
        cycle: QuiddityCycle,
        witness: SplitWitness,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn cycle(&self) -> &QuiddityCycle {
        match self {
            DecompositionTree::Leaf { cycle, .. } | DecompositionTree::Node { cycle, .. } => cycle,
        }
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&QuiddityCycle> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a QuiddityCycle>) {
        match self {
            DecompositionTree::Leaf { cycle, .. } => out.push(cycle),
            DecompositionTree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 0,
            DecompositionTree::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Indented outline, one line per node.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0, "");
        out
    }

    fn write_text(&self, out: &mut String, indent: usize, tag: &str) {
        let pad = "  ".repeat(indent);
        match self {
            DecompositionTree::Leaf { cycle, irreducible } => {
                let kind = if *irreducible { "irreducible" } else { "leaf" };
                let _ = writeln!(out, "{pad}{tag}({cycle}) lambda = {} [{kind}]", cycle.lambda());
            }
            DecompositionTree::Node {
                cycle,
                witness,
                left,
                right,
            } => {
                let (s, t) = witness.seams(cycle.len());
                let _ = writeln!(
                    out,
                    "{pad}{tag}({cycle}) lambda = {} = {} glued at c{}, c{}",
                    cycle.lambda(),
                    witness.sigma,
                    s + 1,
                    t + 1
                );
                left.write_text(out, indent + 1, "a: ");
                right.write_text(out, indent + 1, "b: ");
            }
        }
    }

    /// Graphviz rendering. Seam labels use 1-based positions of the parent.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph decomposition {\n  node [shape=box, fontname=\"monospace\"];\n");
        let mut next = 0usize;
        self.write_dot(&mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn write_dot(&self, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        let cycle = self.cycle();
        match self {
            DecompositionTree::Leaf { irreducible, .. } => {
                let style = if *irreducible { ", style=bold" } else { "" };
                let _ = writeln!(
                    out,
                    "  n{id} [label=\"({cycle})\\nlambda = {}\"{style}];",
                    cycle.lambda()
                );
            }
            DecompositionTree::Node {
                witness,
                left,
                right,
                ..
            } => {
                let _ = writeln!(
                    out,
                    "  n{id} [label=\"({cycle})\\nlambda = {}\\n{}\"];",
                    cycle.lambda(),
                    witness.sigma
                );
                let (s, t) = witness.seams(cycle.len());
                let l = left.write_dot(out, next);
                let r = right.write_dot(out, next);
                for child in [l, r] {
                    let _ = writeln!(out, "  n{id} -> n{child} [label=\"seam c{}, c{}\"];", s + 1, t + 1);
                }
            }
        }
        id
    }
}

/// Splits recursively until every leaf is irreducible over `subset`.
pub fn decompose(c: &QuiddityCycle, subset: &SubsetSpec) -> Result<DecompositionTree> {
    Ok(match is_reducible(c, subset)? {
        None => DecompositionTree::Leaf {
            cycle: c.clone(),
            irreducible: true,
        },
        Some(witness) => {
            let left = decompose(&witness.summand_a, subset)?;
            let right = decompose(&witness.summand_b, subset)?;
            DecompositionTree::Node {
                cycle: c.clone(),
                witness,
                left: Box::new(left),
                right: Box::new(right),
            }
        }
    })
}

/// Glues the tree back together bottom-up, undoing each node's dihedral
/// element.
pub fn resum(t: &DecompositionTree) -> Result<QuiddityCycle> {
    match t {
        DecompositionTree::Leaf { cycle, .. } => Ok(cycle.clone()),
        DecompositionTree::Node {
            cycle,
            witness,
            left,
            right,
        } => {
            let a = resum(left)?;
            let b = resum(right)?;
            if a != witness.summand_a || b != witness.summand_b {
                return Err(Error::MalformedTree(
                    "children do not match the recorded summands".into(),
                ));
            }
            let glued = cycle_sum(&a, &b)
                .map_err(|e| Error::MalformedTree(format!("summands do not glue: {e}")))?;
            let m = glued.len();
            if witness.sigma.rotation >= m {
                return Err(Error::MalformedTree(format!("{} is not in D_{m}", witness.sigma)));
            }
            let restored = glued.apply_dihedral(witness.sigma.inverse(m))?;
            if restored != *cycle {
                return Err(Error::MalformedTree(format!(
                    "node records ({cycle}) but its children glue to ({restored})"
                )));
            }
            Ok(restored)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Domain;

    fn z(vals: &[i64]) -> QuiddityCycle {
        QuiddityCycle::from_ints(vals).unwrap()
    }

    fn whole() -> SubsetSpec {
        SubsetSpec::whole(Domain::Integer)
    }

    #[test]
    fn unit_entries() {
        let f = make_frieze(&z(&[2, 0, -3, -1, -1]));
        let (i, j, eps) = find_unit_entry(&f).unwrap();
        assert_eq!(f.get(i as isize, j as isize).unwrap().is_pm_one(), Some(eps));
        assert_eq!(find_unit_entry(&make_frieze(&z(&[1, 1, 1]))), None);
        // (5,0,-5,0): interior entries are the cycle entries themselves
        assert_eq!(find_unit_entry(&make_frieze(&z(&[0, 5, 0, -5]))), None);
    }

    #[test]
    fn split_examples() {
        let c = z(&[2, 0, -3, -1, -1]);
        let (i, j, eps) = find_unit_entry(&make_frieze(&c)).unwrap();
        let w = split_at_unit(&c, i, j, eps).unwrap();
        w.check(&c).unwrap();
        assert_eq!(c.lambda(), -(w.summand_a.lambda() * w.summand_b.lambda()));

        let c = z(&[-2, -1, -2, -1]);
        let w = is_reducible(&c, &whole()).unwrap().unwrap();
        assert_eq!(w.summand_a, z(&[-1, -1, -1]));
        assert_eq!(w.summand_b, z(&[-1, -1, -1]));
    }

    #[test]
    fn split_errors() {
        let c = z(&[4, 1, 2, 2, 2, 1]);
        // x[0,2] = c_0 = 4
        assert_eq!(split_at_unit(&c, 0, 2, Sign::Plus), Err(Error::NotUnit { i: 0, j: 2 }));
        assert!(matches!(split_at_unit(&c, 0, 1, Sign::Plus), Err(Error::Range(_))));
        assert!(matches!(split_at_unit(&c, 0, 5, Sign::Plus), Err(Error::Range(_))));
        assert!(matches!(split_at_unit(&c, 6, 8, Sign::Plus), Err(Error::Range(_))));
    }

    #[test]
    fn reducibility_examples() {
        assert_eq!(is_reducible(&z(&[1, 1, 1]), &whole()).unwrap(), None);
        assert_eq!(is_reducible(&z(&[1, 1, 1]), &SubsetSpec::positive()).unwrap(), None);
        let w = is_reducible(&z(&[2, 1, 2, 1]), &whole()).unwrap().unwrap();
        assert_eq!((w.summand_a.entries(), w.summand_b.entries()), (z(&[1, 1, 1]).entries(), z(&[1, 1, 1]).entries()));
        assert_eq!(is_reducible(&z(&[7, 0, -7, 0]), &whole()).unwrap(), None);
        assert!(matches!(is_reducible(&z(&[0, 0]), &whole()), Err(Error::Length(_))));
        let gauss = SubsetSpec::whole(Domain::Gaussian);
        assert!(matches!(is_reducible(&z(&[1, 1, 1]), &gauss), Err(Error::Domain(_))));
    }

    #[test]
    fn positive_cycles_split_off_a_triangle() {
        let c = z(&[4, 1, 2, 2, 2, 1]);
        let w = is_reducible(&c, &SubsetSpec::positive()).unwrap().unwrap();
        w.check(&c).unwrap();
        assert!(w.summand_a == z(&[1, 1, 1]) || w.summand_b == z(&[1, 1, 1]));
    }

    #[test]
    fn decompose_examples() {
        let t = decompose(&z(&[1, 1, 1]), &whole()).unwrap();
        assert_eq!(
            t,
            DecompositionTree::Leaf {
                cycle: z(&[1, 1, 1]),
                irreducible: true
            }
        );

        let c = z(&[2, 0, -3, -1, -1]);
        let t = decompose(&c, &whole()).unwrap();
        // scan order reaches x[0,3] = -1 first, which cuts off the triangle
        // merging c_4 and c_1 (1-based)
        assert_eq!(t.leaves(), [&z(&[0, 2, 0, -2]), &z(&[-1, -1, -1])]);
        assert_eq!(resum(&t).unwrap(), c);
        // the triangle at c_5 instead inverts (3,0,-3,0) (+) (-1,-1,-1)
        let w = split_at_unit(&c, 4, 6, Sign::Minus).unwrap();
        assert_eq!(w.summand_a, z(&[-1, -1, -1]));
        assert!(w.summand_b.is_dihedral_equivalent(&z(&[3, 0, -3, 0])));

        let t = decompose(&z(&[2, 1, 2, 1]), &whole()).unwrap();
        assert_eq!(t.leaves(), [&z(&[1, 1, 1]), &z(&[1, 1, 1])]);
    }

    #[test]
    fn resum_rejects_tampered_trees() {
        let t = decompose(&z(&[2, 1, 2, 1]), &whole()).unwrap();
        let DecompositionTree::Node { cycle, mut witness, left, right } = t else {
            panic!("expected a node");
        };
        witness.sigma = DihedralElement::rotation(1);
        let bad = DecompositionTree::Node {
            cycle: cycle.clone(),
            witness: witness.clone(),
            left: left.clone(),
            right: right.clone(),
        };
        assert!(matches!(resum(&bad), Err(Error::MalformedTree(_))));
        witness.sigma = DihedralElement::rotation(9);
        let bad = DecompositionTree::Node { cycle, witness, left, right };
        assert!(matches!(resum(&bad), Err(Error::MalformedTree(_))));
    }

    #[test]
    fn dot_and_text_output() {
        let t = decompose(&z(&[2, 1, 2, 1]), &whole()).unwrap();
        let dot = t.to_dot();
        assert!(dot.starts_with("digraph decomposition {"));
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("seam c"));
        let text = t.render_text();
        assert_eq!(text.lines().count(), 3);
    }
}
