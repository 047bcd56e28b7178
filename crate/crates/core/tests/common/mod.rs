//! Plain `i64` reference implementations shared by the integration tests.
//! Nothing here calls into the library's matrix or search code.
#![allow(dead_code)]

use frieze_lab::{QuiddityCycle, RingElement};
use rand::Rng;

pub type M = [[i64; 2]; 2];

pub const ID: M = [[1, 0], [0, 1]];

pub fn mul(a: M, b: M) -> M {
    let mut out = [[0; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

pub fn eta(c: i64) -> M {
    [[c, -1], [1, 0]]
}

pub fn product(cs: &[i64]) -> M {
    cs.iter().fold(ID, |acc, &c| mul(acc, eta(c)))
}

/// `Some(lambda)` when the product is `lambda * Id`.
pub fn lambda_of(cs: &[i64]) -> Option<i64> {
    match product(cs) {
        [[1, 0], [0, 1]] => Some(1),
        [[-1, 0], [0, -1]] => Some(-1),
        _ => None,
    }
}

pub fn ints(c: &QuiddityCycle) -> Vec<i64> {
    c.entries().iter().map(|x| x.to_i64().expect("small integer")).collect()
}

/// All `2m` dihedral images, in no particular order.
pub fn dihedral_images(cs: &[i64]) -> Vec<Vec<i64>> {
    let m = cs.len();
    let mut out = Vec::with_capacity(2 * m);
    for r in 0..m {
        out.push((0..m).map(|k| cs[(k + r) % m]).collect());
        out.push((0..m).map(|k| cs[(r + m - k) % m]).collect());
    }
    out
}

fn glue(a: &[i64], b: &[i64]) -> Vec<i64> {
    let (k, l) = (a.len(), b.len());
    let mut out = vec![a[0] + b[l - 1]];
    out.extend_from_slice(&a[1..k - 1]);
    out.push(a[k - 1] + b[0]);
    out.extend_from_slice(&b[1..l - 1]);
    out
}

/// Brute force: is some dihedral image of `cs` a sum of two cycles of length
/// at least 3 whose entries all satisfy `allowed`, with the two free seam
/// values drawn from `seam_values`?
pub fn naive_reducible(cs: &[i64], seam_values: &[i64], allowed: impl Fn(i64) -> bool) -> bool {
    let m = cs.len();
    for d in dihedral_images(cs) {
        for k in 3..m {
            for &a1 in seam_values {
                for &ak in seam_values {
                    let mut a = vec![a1];
                    a.extend_from_slice(&d[1..k - 1]);
                    a.push(ak);
                    let mut b = vec![d[k - 1] - ak];
                    b.extend_from_slice(&d[k..]);
                    b.push(d[0] - a1);
                    if a.iter().chain(&b).all(|&x| allowed(x))
                        && lambda_of(&a).is_some()
                        && lambda_of(&b).is_some()
                        && glue(&a, &b) == d
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Every sequence of length `m` over `values`, by odometer.
pub fn all_sequences(values: &[i64], m: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        out.push(idx.iter().map(|&i| values[i]).collect());
        let mut p = 0;
        while p < m {
            idx[p] += 1;
            if idx[p] < values.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
        if p == m {
            return out;
        }
    }
}

/// Least element of the dihedral orbit.
pub fn canonical(cs: &[i64]) -> Vec<i64> {
    dihedral_images(cs).into_iter().min().expect("nonempty")
}

/// Glues `pieces` random dihedral images of `bases` together.
pub fn random_glued(rng: &mut impl Rng, bases: &[QuiddityCycle], pieces: usize) -> QuiddityCycle {
    use frieze_lab::cycle::cycle_sum;
    use frieze_lab::DihedralElement;
    let pick = |rng: &mut dyn rand::RngCore| {
        let b = &bases[rng.gen_range(0..bases.len())];
        let m = b.len();
        let sigma = DihedralElement {
            rotation: rng.gen_range(0..m),
            reflected: rng.gen_bool(0.5),
        };
        b.apply_dihedral(sigma).expect("valid element")
    };
    let mut acc = pick(rng);
    for _ in 1..pieces {
        let next = pick(rng);
        acc = if rng.gen_bool(0.5) {
            cycle_sum(&acc, &next)
        } else {
            cycle_sum(&next, &acc)
        }
        .expect("sums of cycles are cycles");
    }
    acc
}

pub fn elems(vals: &[i64]) -> Vec<RingElement> {
    vals.iter().map(|&v| RingElement::int(v)).collect()
}
