//! Structure files: one JSON document per structure, tagged by `kind`.
//!
//! Carriers are lists of element names. Operation tables are nested maps
//! `row → column → [elements]`; ordinary operations use one-element lists.
//! Grades are `"p/q"` strings.

use std::str::FromStr;

use hyvkit_core::{
    Carrier, CarrierMap, FuzzySet, HvModule, HvRing, HyperAction, HyperOp, IfSet, OrdModule,
    OrdRing, Subset, Q,
};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Table = IndexMap<String, IndexMap<String, Vec<String>>>;
pub type Grades = IndexMap<String, String>;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Semantic(String),
}

impl From<hyvkit_core::Error> for FormatError {
    fn from(e: hyvkit_core::Error) -> Self {
        FormatError::Semantic(e.to_string())
    }
}

type Result<T> = std::result::Result<T, FormatError>;

fn semantic<T>(message: impl Into<String>) -> Result<T> {
    Err(FormatError::Semantic(message.into()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    pub carrier: Vec<String>,
    pub add: Table,
    pub mul: Table,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub ring: RingDoc,
    pub carrier: Vec<String>,
    pub add: Table,
    pub action: Table,
}

/// The on-disk document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StructureFile {
    HvRing(RingDoc),
    HvModule(ModuleDoc),
    OrdRing(RingDoc),
    OrdModule(ModuleDoc),
    FuzzySet {
        carrier: Vec<String>,
        grades: Grades,
    },
    IfSet {
        carrier: Vec<String>,
        mu: Grades,
        lambda: Grades,
    },
    Map {
        source: Vec<String>,
        target: Vec<String>,
        map: IndexMap<String, String>,
    },
    Subset {
        carrier: Vec<String>,
        elements: Vec<String>,
    },
}

/// A validated domain object.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    HvRing(HvRing),
    HvModule(HvModule),
    OrdRing(OrdRing),
    OrdModule(OrdModule),
    FuzzySet(FuzzySet),
    IfSet(IfSet),
    Map(CarrierMap),
    Subset { carrier: Carrier, subset: Subset },
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::HvRing(_) => "hv_ring",
            Structure::HvModule(_) => "hv_module",
            Structure::OrdRing(_) => "ord_ring",
            Structure::OrdModule(_) => "ord_module",
            Structure::FuzzySet(_) => "fuzzy_set",
            Structure::IfSet(_) => "if_set",
            Structure::Map(_) => "map",
            Structure::Subset { .. } => "subset",
        }
    }
}

/// Parses and validates a structure file.
pub fn parse_structure(text: &str) -> Result<Structure> {
    let doc: StructureFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.into_structure()
}

/// Pretty JSON for a structure.
pub fn serialize_structure(s: &Structure) -> String {
    serde_json::to_string_pretty(&StructureFile::from(s)).expect("documents always serialize")
}

fn carrier(names: &[String]) -> Result<Carrier> {
    Ok(Carrier::new(names.iter().cloned())?)
}

fn element(c: &Carrier, name: &str) -> Result<usize> {
    c.index_of(name)
        .map_or_else(|| semantic(format!("unknown element '{name}'")), Ok)
}

fn subset(c: &Carrier, names: &[String]) -> Result<Subset> {
    names.iter().map(|n| element(c, n)).collect()
}

/// Reads a full `rows × cols` table whose entries lie in `cols`; every cell
/// must be present.
fn cells(table: &Table, rows: &Carrier, cols: &Carrier, what: &str) -> Result<Vec<Subset>> {
    for (r, row) in table {
        element(rows, r)?;
        for c in row.keys() {
            element(cols, c)?;
        }
    }
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for r in rows.names() {
        for c in cols.names() {
            let entry = table.get(r).and_then(|row| row.get(c)).map_or_else(
                || semantic(format!("{what} table has no entry at ({r}, {c})")),
                Ok,
            )?;
            if entry.is_empty() {
                return semantic(format!("empty hyperproduct at ({r}, {c}) in {what} table"));
            }
            out.push(subset(cols, entry)?);
        }
    }
    Ok(out)
}

fn single_valued(cells: &[Subset], what: &str) -> Result<Vec<usize>> {
    cells
        .iter()
        .map(|s| match (s.len(), Subset::min(*s)) {
            (1, Some(x)) => Ok(x),
            _ => semantic(format!(
                "{what} table of an ordinary structure must be single-valued"
            )),
        })
        .collect()
}

fn grade(text: &str) -> Result<Q> {
    let g = Q::from_str(text.trim()).or_else(|_| semantic(format!("malformed grade '{text}'")))?;
    if g < Q::from_integer(0) || g > Q::from_integer(1) {
        return semantic(format!("grade {text} outside [0, 1]"));
    }
    Ok(g)
}

fn grades(c: &Carrier, g: &Grades) -> Result<FuzzySet> {
    for name in g.keys() {
        element(c, name)?;
    }
    let values = c
        .names()
        .iter()
        .map(|n| {
            g.get(n).map_or_else(
                || semantic(format!("no grade for element '{n}'")),
                |t| grade(t),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzySet::new(c.clone(), values)?)
}

fn hv_ring(doc: &RingDoc) -> Result<HvRing> {
    let c = carrier(&doc.carrier)?;
    Ok(HvRing::new(
        HyperOp::new(c.clone(), cells(&doc.add, &c, &c, "addition")?)?,
        HyperOp::new(c.clone(), cells(&doc.mul, &c, &c, "multiplication")?)?,
    )?)
}

/// Additive identity and negation of a single-valued addition table.
fn zero_and_negation(add: &[usize], n: usize) -> Result<(usize, Vec<usize>)> {
    let zero = (0..n)
        .find(|&z| (0..n).all(|x| add[z * n + x] == x && add[x * n + z] == x))
        .map_or_else(|| semantic("addition has no identity element"), Ok)?;
    let neg = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| add[x * n + y] == zero)
                .map_or_else(|| semantic("addition has an element without negative"), Ok)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((zero, neg))
}

fn ord_ring(doc: &RingDoc) -> Result<OrdRing> {
    let c = carrier(&doc.carrier)?;
    let n = c.len();
    let add = single_valued(&cells(&doc.add, &c, &c, "addition")?, "addition")?;
    let mul = single_valued(
        &cells(&doc.mul, &c, &c, "multiplication")?,
        "multiplication",
    )?;
    let (zero, neg) = zero_and_negation(&add, n)?;
    Ok(OrdRing::new(c, add, mul, zero, neg)?)
}

impl StructureFile {
    pub fn into_structure(self) -> Result<Structure> {
        Ok(match &self {
            StructureFile::HvRing(doc) => Structure::HvRing(hv_ring(doc)?),
            StructureFile::HvModule(doc) => {
                let ring = hv_ring(&doc.ring)?;
                let c = carrier(&doc.carrier)?;
                let add = HyperOp::new(c.clone(), cells(&doc.add, &c, &c, "module addition")?)?;
                let action = HyperAction::new(
                    ring.carrier().clone(),
                    c.clone(),
                    action_cells(&doc.action, ring.carrier(), &c)?,
                )?;
                Structure::HvModule(HvModule::new(ring, add, action)?)
            }
            StructureFile::OrdRing(doc) => Structure::OrdRing(ord_ring(doc)?),
            StructureFile::OrdModule(doc) => {
                let ring = ord_ring(&doc.ring)?;
                let c = carrier(&doc.carrier)?;
                let add = single_valued(
                    &cells(&doc.add, &c, &c, "module addition")?,
                    "module addition",
                )?;
                let action =
                    single_valued(&action_cells(&doc.action, ring.carrier(), &c)?, "action")?;
                let (zero, neg) = zero_and_negation(&add, c.len())?;
                Structure::OrdModule(OrdModule::new(ring, c, add, zero, neg, action)?)
            }
            StructureFile::FuzzySet {
                carrier: names,
                grades: g,
            } => Structure::FuzzySet(grades(&carrier(names)?, g)?),
            StructureFile::IfSet {
                carrier: names,
                mu,
                lambda,
            } => {
                let c = carrier(names)?;
                Structure::IfSet(IfSet::new(grades(&c, mu)?, grades(&c, lambda)?)?)
            }
            StructureFile::Map {
                source,
                target,
                map,
            } => {
                let (s, t) = (carrier(source)?, carrier(target)?);
                for name in map.keys() {
                    element(&s, name)?;
                }
                let table = s
                    .names()
                    .iter()
                    .map(|x| {
                        let y = map
                            .get(x)
                            .map_or_else(|| semantic(format!("map has no image for '{x}'")), Ok)?;
                        element(&t, y)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Structure::Map(CarrierMap::new(s, t, table)?)
            }
            StructureFile::Subset {
                carrier: names,
                elements,
            } => {
                let c = carrier(names)?;
                let subset = subset(&c, elements)?;
                Structure::Subset { carrier: c, subset }
            }
        })
    }
}

/// Action rows are scalars, columns and entries are module elements.
fn action_cells(table: &Table, scalars: &Carrier, points: &Carrier) -> Result<Vec<Subset>> {
    cells(table, scalars, points, "action")
}

fn names(c: &Carrier) -> Vec<String> {
    c.names().to_vec()
}

fn table_doc(rows: &Carrier, cols: &Carrier, get: impl Fn(usize, usize) -> Subset) -> Table {
    (0..rows.len())
        .map(|r| {
            let row = (0..cols.len())
                .map(|c| {
                    let entry = get(r, c).iter().map(|x| cols.name(x).to_string()).collect();
                    (cols.name(c).to_string(), entry)
                })
                .collect();
            (rows.name(r).to_string(), row)
        })
        .collect()
}

fn ring_doc(r: &HvRing) -> RingDoc {
    let c = r.carrier();
    RingDoc {
        carrier: names(c),
        add: table_doc(c, c, |x, y| r.add.get(x, y)),
        mul: table_doc(c, c, |x, y| r.mul.get(x, y)),
    }
}

fn module_doc(m: &HvModule) -> ModuleDoc {
    let c = m.carrier();
    ModuleDoc {
        ring: ring_doc(&m.ring),
        carrier: names(c),
        add: table_doc(c, c, |x, y| m.add.get(x, y)),
        action: table_doc(m.ring.carrier(), c, |r, x| m.action.get(r, x)),
    }
}

fn grades_doc(f: &FuzzySet) -> Grades {
    f.carrier()
        .names()
        .iter()
        .zip(f.grades())
        .map(|(n, g)| (n.clone(), g.to_string()))
        .collect()
}

impl From<&Structure> for StructureFile {
    fn from(s: &Structure) -> Self {
        match s {
            Structure::HvRing(r) => StructureFile::HvRing(ring_doc(r)),
            Structure::HvModule(m) => StructureFile::HvModule(module_doc(m)),
            Structure::OrdRing(r) => StructureFile::OrdRing(ring_doc(&r.to_hv())),
            Structure::OrdModule(m) => StructureFile::OrdModule(module_doc(&m.to_hv())),
            Structure::FuzzySet(f) => StructureFile::FuzzySet {
                carrier: names(f.carrier()),
                grades: grades_doc(f),
            },
            Structure::IfSet(a) => StructureFile::IfSet {
                carrier: names(a.carrier()),
                mu: grades_doc(a.mu()),
                lambda: grades_doc(a.lambda()),
            },
            Structure::Map(f) => StructureFile::Map {
                source: names(f.source()),
                target: names(f.target()),
                map: (0..f.source().len())
                    .map(|x| {
                        (
                            f.source().name(x).to_string(),
                            f.target().name(f.apply(x)).to_string(),
                        )
                    })
                    .collect(),
            },
            Structure::Subset { carrier: c, subset } => StructureFile::Subset {
                carrier: names(c),
                elements: subset.iter().map(|x| c.name(x).to_string()).collect(),
            },
        }
    }
}
