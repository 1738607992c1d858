//! JSON lattice files: element labels, Hasse covers and the orthocomplement
//! permutation. The order relation is recomputed from the covers on read
//! and the result is re-validated.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{catalog, Oml, RawOml};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    pub ortho: Vec<usize>,
}

impl LatticeFile {
    pub fn from_oml(l: &Oml) -> LatticeFile {
        LatticeFile {
            name: l.name().to_string(),
            elements: l.labels().to_vec(),
            covers: l.covers().into_iter().map(|(a, b)| [a.0, b.0]).collect(),
            ortho: l.elements().map(|p| l.ortho(p).0).collect(),
        }
    }

    pub fn to_raw(&self) -> Result<RawOml> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        RawOml::from_covers(self.elements.clone(), &covers, self.ortho.clone())
    }

    pub fn to_oml(&self) -> Result<Oml> {
        Oml::new(self.name.clone(), self.to_raw()?)
    }

    pub fn from_json(text: &str) -> Result<LatticeFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice files always serialize")
    }
}

/// Resolves a command-line input: an existing file path (or anything ending
/// in `.json`) is read as a [`LatticeFile`], anything else is a catalog
/// token. Returns the display name and the unvalidated relation.
pub fn load_input(arg: &str) -> Result<(String, RawOml)> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {arg}: {e}")))?;
        let file = LatticeFile::from_json(&text)?;
        let raw = file.to_raw()?;
        Ok((file.name, raw))
    } else {
        Ok((arg.to_string(), catalog::load_raw(arg)?))
    }
}

/// [`load_input`] followed by validation.
pub fn load_oml(arg: &str) -> Result<Oml> {
    let (name, raw) = load_input(arg)?;
    Oml::new(name, raw)
}
