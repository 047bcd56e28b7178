//! Frieze patterns generated from a cycle.
//!
//! `x[i, j]` is the `(1,1)` entry of `eta(c_i) ... eta(c_{j-2})` for
//! `j >= i + 2`, with `x[i, i+1] = 1` and `x[i, i] = 0`. The pattern stores
//! one fundamental domain `0 <= i < m`, `i <= j <= i + m`, and is extended by
//! `x[i+m, j+m] = x[i, j]`.

use crate::cycle::QuiddityCycle;
use crate::error::{Error, Result};
use crate::ring::{RingElement, Sign, SubsetSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezePattern {
    cycle: QuiddityCycle,
    // rows[i][d] = x[i, i + d], d in 0..=m
    rows: Vec<Vec<RingElement>>,
}

/// An interior entry `x[i, j]` with `i + 2 <= j <= i + m - 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezeEntry {
    pub i: usize,
    pub j: usize,
    pub value: RingElement,
}

pub fn make_frieze(c: &QuiddityCycle) -> FriezePattern {
    FriezePattern::new(c)
}

impl FriezePattern {
    /// Fills the fundamental domain with the continuant recurrence
    /// `x[i, j+1] = c_{j-1} x[i, j] - x[i, j-1]`.
    pub fn new(c: &QuiddityCycle) -> Self {
        let m = c.len();
        let d = c.domain();
        let rows = (0..m)
            .map(|i| {
                let mut row = Vec::with_capacity(m + 1);
                row.push(RingElement::zero(d));
                row.push(RingElement::one(d));
                for off in 1..m {
                    // x[i, i+off+1] = c_{i+off-1} x[i, i+off] - x[i, i+off-1]
                    let next = &(c.at((i + off - 1) as isize) * &row[off]) - &row[off - 1];
                    row.push(next);
                }
                row
            })
            .collect();
        FriezePattern {
            cycle: c.clone(),
            rows,
        }
    }

    pub fn cycle(&self) -> &QuiddityCycle {
        &self.cycle
    }

    pub fn m(&self) -> usize {
        self.cycle.len()
    }

    pub fn lambda(&self) -> Sign {
        self.cycle.lambda()
    }

    /// `x[i, j]` for any integers with `0 <= j - i <= m`.
    pub fn get(&self, i: isize, j: isize) -> Option<&RingElement> {
        let m = self.m() as isize;
        let diff = j - i;
        if !(0..=m).contains(&diff) {
            return None;
        }
        Some(&self.rows[i.rem_euclid(m) as usize][diff as usize])
    }

    fn at(&self, i: isize, j: isize) -> &RingElement {
        self.get(i, j).expect("index inside the strip")
    }

    /// The interior entries of one period, scanned by `i` then `j`.
    pub fn entries(&self) -> Vec<FriezeEntry> {
        let m = self.m();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 2..=(i + m).saturating_sub(2) {
                out.push(FriezeEntry {
                    i,
                    j,
                    value: self.rows[i][j - i].clone(),
                });
            }
        }
        out
    }

    /// Interior entries that are not members of `subset`. When `subset` is
    /// not a ring the frieze may leave it.
    pub fn entries_outside(&self, subset: &SubsetSpec) -> Result<Vec<FriezeEntry>> {
        let mut out = Vec::new();
        for e in self.entries() {
            if !subset.is_member(&e.value)? {
                out.push(e);
            }
        }
        Ok(out)
    }

    /// Every adjacent 3x3 minor `det(x[i+r, j+s])_{r,s<3}` inside the strip
    /// vanishes.
    pub fn is_tame(&self) -> bool {
        let m = self.m() as isize;
        (0..m).all(|i| {
            (i + 2..=i + m - 2).all(|j| {
                let x = |r: isize, s: isize| self.at(i + r, j + s);
                det3([
                    [x(0, 0), x(0, 1), x(0, 2)],
                    [x(1, 0), x(1, 1), x(1, 2)],
                    [x(2, 0), x(2, 1), x(2, 2)],
                ])
                .is_zero()
            })
        })
    }

    /// Copy with `x[i, i+d]` replaced, for probing the tameness check.
    pub fn with_value(&self, i: usize, d: usize, value: RingElement) -> Result<FriezePattern> {
        if i >= self.m() || d > self.m() {
            return Err(Error::Range(format!("cell ({i}, +{d}) outside the fundamental domain")));
        }
        if value.domain() != self.cycle.domain() {
            return Err(Error::Domain("replacement value has the wrong domain".into()));
        }
        let mut out = self.clone();
        out.rows[i][d] = value;
        Ok(out)
    }

    /// Rows `r = 0..=m` of the diagonal layout; row `r` lists `x[i, i+r]`
    /// for `i = 0..m`.
    pub fn diagonal_rows(&self) -> Vec<Vec<&RingElement>> {
        (0..=self.m())
            .map(|r| self.rows.iter().map(|row| &row[r]).collect())
            .collect()
    }

    /// Text rendering: row `r` holds `x[i, i+r]` and is shifted right by half a
    /// cell per row, so that each entry sits between its two neighbours of the
    /// previous row. Cells are left-padded to a common width.
    pub fn render_text(&self) -> String {
        let rows = self.diagonal_rows();
        let width = rows
            .iter()
            .flatten()
            .map(|x| x.to_string().chars().count())
            .max()
            .unwrap_or(1);
        let half = (width + 2) / 2;
        let pitch = 2 * half;
        let mut out = String::new();
        for (r, row) in rows.iter().enumerate() {
            let mut line = " ".repeat(r * half);
            for x in row {
                line.push_str(&format!("{:>pitch$}", x.to_string()));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn det3(x: [[&RingElement; 3]; 3]) -> RingElement {
    let minor = |a: &RingElement, b: &RingElement, c: &RingElement, d: &RingElement| {
        &(a * d) - &(b * c)
    };
    let t0 = x[0][0] * &minor(x[1][1], x[1][2], x[2][1], x[2][2]);
    let t1 = x[0][1] * &minor(x[1][0], x[1][2], x[2][0], x[2][2]);
    let t2 = x[0][2] * &minor(x[1][0], x[1][1], x[2][0], x[2][1]);
    &(&t0 - &t1) + &t2
}
