//! The canonical classes: abelian (`B`), modular (`M`), locally modular
//! (`M₀`) and complete (`T`) elements, judged by the interval `[0, p]`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::central::center;
use crate::error::{Error, Result};
use crate::lattice::{Oml, ProjectionSet};

#[derive(Clone, Debug, Serialize)]
pub struct ClassTable {
    pub abelian: Vec<bool>,
    pub modular: Vec<bool>,
    pub locally_modular: Vec<bool>,
    pub complete: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassName {
    B,
    M,
    M0,
    T,
}

impl ClassName {
    pub const ALL: [ClassName; 4] = [ClassName::B, ClassName::M, ClassName::M0, ClassName::T];
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassName::B => "B",
            ClassName::M => "M",
            ClassName::M0 => "M0",
            ClassName::T => "T",
        })
    }
}

impl FromStr for ClassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "abelian" => Ok(ClassName::B),
            "M" | "modular" => Ok(ClassName::M),
            "M0" | "locally-modular" => Ok(ClassName::M0),
            "T" | "complete" => Ok(ClassName::T),
            _ => Err(Error::Input(format!("unknown class name `{s}`"))),
        }
    }
}

pub fn class_table(l: &Oml) -> &ClassTable {
    l.cache.class_table.get_or_init(|| {
        let intervals: Vec<_> = l.elements().map(|p| l.interval(p)).collect();
        let abelian: Vec<bool> = intervals.iter().map(|iv| iv.oml.is_boolean_lattice()).collect();
        let modular: Vec<bool> = intervals.iter().map(|iv| iv.oml.is_modular_lattice()).collect();
        let locally_modular = intervals
            .iter()
            .map(|iv| {
                let sub = &iv.oml;
                center(sub).iter().filter(|&c| c != sub.bottom()).all(|c| {
                    sub.elements().any(|q| {
                        q != sub.bottom() && sub.leq(q, c) && modular[iv.to_parent(q).0]
                    })
                })
            })
            .collect();
        ClassTable { abelian, modular, locally_modular, complete: vec![true; l.len()] }
    })
}

pub fn class_as_set(l: &Oml, name: ClassName) -> ProjectionSet {
    let t = class_table(l);
    let column = match name {
        ClassName::B => &t.abelian,
        ClassName::M => &t.modular,
        ClassName::M0 => &t.locally_modular,
        ClassName::T => &t.complete,
    };
    ProjectionSet::filter(l, |p| column[p.0])
}
