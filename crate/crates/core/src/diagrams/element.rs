use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Diagram, DiagramJson};
use crate::error::Result;
use crate::scalars::Cyclotomic;

/// A finite linear combination of diagrams. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: u32,
    terms: BTreeMap<Diagram, Cyclotomic>,
}

impl AlgebraElement {
    pub fn zero(field: u32) -> Self {
        AlgebraElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: Diagram, field: u32) -> Self {
        Self::term(d, Cyclotomic::one(field))
    }

    pub fn term(d: Diagram, c: Cyclotomic) -> Self {
        let mut e = Self::zero(c.modulus());
        e.add_term(d, c);
        e
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Diagram, Cyclotomic> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Diagram) -> Cyclotomic {
        self.terms.get(d).cloned().unwrap_or_else(|| Cyclotomic::zero(self.field))
    }

    pub fn add_term(&mut self, d: Diagram, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Cyclotomic) -> AlgebraElement {
        let mut out = Self::zero(self.field);
        if s.is_zero() {
            return out;
        }
        for (d, c) in &self.terms {
            out.terms.insert(d.clone(), c * s);
        }
        out
    }

    pub fn map_diagrams(&self, f: impl Fn(&Diagram) -> Diagram) -> AlgebraElement {
        let mut out = Self::zero(self.field);
        for (d, c) in &self.terms {
            out.add_term(f(d), c.clone());
        }
        out
    }

    /// Coordinates against a diagram basis; `None` if some diagram is missing.
    pub fn coordinates(&self, index: &std::collections::HashMap<Diagram, usize>, dim: usize) -> Option<Vec<Cyclotomic>> {
        let mut v = vec![Cyclotomic::zero(self.field); dim];
        for (d, c) in &self.terms {
            v[*index.get(d)?] = c.clone();
        }
        Some(v)
    }

    pub fn to_json(&self, m: u32) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(d, c)| TermJson {
                diagram: d.to_json(m),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_json(terms: &[TermJson], field: u32) -> Result<Self> {
        let mut e = Self::zero(field);
        for t in terms {
            e.add_term(Diagram::from_json(&t.diagram)?, t.coeff.clone());
        }
        Ok(e)
    }
}

impl<'a> IntoIterator for &'a AlgebraElement {
    type Item = (&'a Diagram, &'a Cyclotomic);
    type IntoIter = btree_map::Iter<'a, Diagram, Cyclotomic>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub diagram: DiagramJson,
    pub coeff: Cyclotomic,
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c}){d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
