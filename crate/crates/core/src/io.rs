//! JSON documents exchanged by the command line front end.
//!
//! Ring elements are always written as literals in their domain grammar, and
//! positions are 1-based. The schemas are described in `docs/json-formats.md`.

use serde::{Deserialize, Serialize};

use crate::cycle::{parse_entries, DihedralElement, QuiddityCycle};
use crate::enumerate::{ClassificationReport, SearchStats};
use crate::error::{Error, Result};
use crate::frieze::{FriezeEntry, FriezePattern};
use crate::gauss::GaussReport;
use crate::reduce::{resum, DecompositionTree, SplitWitness};
use crate::ring::{Domain, RingElement, Sign};

/// `{"domain": "Z[i]", "lambda": -1, "entries": ["2i", "1-i", ...]}`, with an
/// extra `"n"` field for `"Z/n"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDocument {
    pub domain: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub lambda: i64,
    pub entries: Vec<String>,
}

impl CycleDocument {
    pub fn from_cycle(c: &QuiddityCycle) -> Self {
        let d = c.domain();
        CycleDocument {
            domain: d.tag().to_string(),
            n: d.modulus(),
            lambda: c.lambda().to_i8().into(),
            entries: c.entries().iter().map(|x| x.to_string()).collect(),
        }
    }

    pub fn domain(&self) -> Result<Domain> {
        Domain::from_tag(&self.domain, self.n)
    }

    /// Parses the entries and checks the recorded `lambda` against the product.
    pub fn to_cycle(&self) -> Result<QuiddityCycle> {
        let d = self.domain()?;
        let entries = self
            .entries
            .iter()
            .map(|x| RingElement::parse(d, x))
            .collect::<Result<Vec<_>>>()?;
        let lambda = Sign::from_i64(self.lambda)
            .ok_or_else(|| Error::parse(&self.lambda.to_string(), "lambda must be 1 or -1"))?;
        QuiddityCycle::with_lambda(entries, lambda)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse("cycle document", e.to_string()))
    }
}

/// Reads a cycle given either inline (`"1,2,1,2"`) or as a JSON document.
pub fn read_cycle(domain: Domain, text: &str) -> Result<QuiddityCycle> {
    if text.trim_start().starts_with('{') {
        CycleDocument::from_json(text)?.to_cycle()
    } else {
        QuiddityCycle::new(parse_entries(domain, text)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDocument {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

impl EntryDocument {
    pub fn from_entry(e: &FriezeEntry) -> Self {
        EntryDocument {
            i: e.i + 1,
            j: e.j + 1,
            value: e.value.to_string(),
        }
    }
}

/// `rows[r][i]` is `x[i+1, i+1+r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriezeDocument {
    pub cycle: CycleDocument,
    pub tame: bool,
    pub rows: Vec<Vec<String>>,
    pub entries: Vec<EntryDocument>,
}

impl FriezeDocument {
    pub fn from_frieze(f: &FriezePattern) -> Self {
        FriezeDocument {
            cycle: CycleDocument::from_cycle(f.cycle()),
            tame: f.is_tame(),
            rows: f
                .diagonal_rows()
                .into_iter()
                .map(|row| row.into_iter().map(|x| x.to_string()).collect())
                .collect(),
            entries: f.entries().iter().map(EntryDocument::from_entry).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub rotation: usize,
    pub reflected: bool,
    pub k: usize,
    pub a1: String,
    pub ak: String,
    /// Seam positions in the parent cycle.
    pub seams: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TreeDocument {
    Leaf {
        cycle: CycleDocument,
        irreducible: bool,
    },
    Node {
        cycle: CycleDocument,
        witness: WitnessDocument,
        left: Box<TreeDocument>,
        right: Box<TreeDocument>,
    },
}

impl TreeDocument {
    pub fn from_tree(t: &DecompositionTree) -> Self {
        match t {
            DecompositionTree::Leaf { cycle, irreducible } => TreeDocument::Leaf {
                cycle: CycleDocument::from_cycle(cycle),
                irreducible: *irreducible,
            },
            DecompositionTree::Node {
                cycle,
                witness,
                left,
                right,
            } => {
                let (s, e) = witness.seams(cycle.len());
                TreeDocument::Node {
                    cycle: CycleDocument::from_cycle(cycle),
                    witness: WitnessDocument {
                        rotation: witness.sigma.rotation,
                        reflected: witness.sigma.reflected,
                        k: witness.k,
                        a1: witness.derived_a1.to_string(),
                        ak: witness.derived_ak.to_string(),
                        seams: [s + 1, e + 1],
                    },
                    left: Box::new(TreeDocument::from_tree(left)),
                    right: Box::new(TreeDocument::from_tree(right)),
                }
            }
        }
    }

    /// Rebuilds the tree and checks that it glues back to its root.
    pub fn to_tree(&self) -> Result<DecompositionTree> {
        let tree = self.build()?;
        resum(&tree)?;
        Ok(tree)
    }

    fn build(&self) -> Result<DecompositionTree> {
        Ok(match self {
            TreeDocument::Leaf { cycle, irreducible } => DecompositionTree::Leaf {
                cycle: cycle.to_cycle()?,
                irreducible: *irreducible,
            },
            TreeDocument::Node {
                cycle,
                witness,
                left,
                right,
            } => {
                let cycle = cycle.to_cycle()?;
                let left = left.build()?;
                let right = right.build()?;
                let d = cycle.domain();
                let w = SplitWitness {
                    sigma: DihedralElement {
                        rotation: witness.rotation,
                        reflected: witness.reflected,
                    },
                    k: witness.k,
                    summand_a: left.cycle().clone(),
                    summand_b: right.cycle().clone(),
                    derived_a1: RingElement::parse(d, &witness.a1)?,
                    derived_ak: RingElement::parse(d, &witness.ak)?,
                };
                let ends_match = w.summand_a.entries().first() == Some(&w.derived_a1)
                    && w.summand_a.entries().last() == Some(&w.derived_ak);
                if !ends_match || w.summand_a.len() != w.k {
                    return Err(Error::MalformedTree(
                        "witness endpoints disagree with the left summand".into(),
                    ));
                }
                DecompositionTree::Node {
                    cycle,
                    witness: w,
                    left: Box::new(left),
                    right: Box::new(right),
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDocument {
    pub nodes_visited: u64,
    pub cycles_found: u64,
    pub emitted: u64,
}

impl From<SearchStats> for StatsDocument {
    fn from(s: SearchStats) -> Self {
        StatsDocument {
            nodes_visited: s.nodes_visited,
            cycles_found: s.cycles_found,
            emitted: s.emitted,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDocument {
    pub domain: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub length: usize,
    pub candidates: Vec<String>,
    pub lambda_filter: Option<i64>,
    pub dedup: bool,
    pub stats: StatsDocument,
    pub cycles: Vec<CycleDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub domain: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub length: usize,
    pub candidates: Vec<String>,
    pub subset: String,
    pub total_cycles: u64,
    pub total_orbits: u64,
    pub reducible_count: u64,
    pub irreducible_orbits: Vec<CycleDocument>,
}

impl ReportDocument {
    pub fn from_report(r: &ClassificationReport) -> Self {
        let d = r.task.domain();
        ReportDocument {
            domain: d.tag().to_string(),
            n: d.modulus(),
            length: r.task.length(),
            candidates: r.task.candidates().iter().map(|x| x.to_string()).collect(),
            subset: r.subset.to_cli(),
            total_cycles: r.total_cycles,
            total_orbits: r.total_orbits,
            reducible_count: r.reducible_count,
            irreducible_orbits: r.irreducible_orbits.iter().map(CycleDocument::from_cycle).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussDocument {
    pub k: usize,
    pub cycle: CycleDocument,
    pub irreducible: bool,
    /// `x[1, 2k+5]`.
    pub marker: String,
    pub unit_entries: Vec<EntryDocument>,
    pub entries: Vec<EntryDocument>,
}

impl GaussDocument {
    pub fn from_report(r: &GaussReport) -> Self {
        GaussDocument {
            k: r.k,
            cycle: CycleDocument::from_cycle(&r.cycle),
            irreducible: r.irreducible(),
            marker: r.marker.to_string(),
            unit_entries: r.unit_entries.iter().map(EntryDocument::from_entry).collect(),
            entries: r.entries.iter().map(EntryDocument::from_entry).collect(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}
