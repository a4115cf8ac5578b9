use std::fs;

use cbrauer::combinatorics::Variant;
use cbrauer::scalars::parse_rational;
use cbrauer::{Cyclotomic, DiagramAlgebra, Error, MComposition, MultiPartition, Params, Result};

use crate::args::JobArgs;

/// Validated job: the algebra plus how its parameters were chosen.
pub struct Job {
    pub args: JobArgs,
}

impl Job {
    pub fn new(args: JobArgs) -> Result<Self> {
        if args.m == 0 {
            return Err(Error::Validation("m must be positive".into()));
        }
        if args.jobs == 0 {
            return Err(Error::Validation("--jobs must be positive".into()));
        }
        Ok(Job { args })
    }

    pub fn m(&self) -> u32 {
        self.args.m
    }

    pub fn n(&self) -> usize {
        self.args.n
    }

    pub fn oriented(&self) -> bool {
        !self.args.unoriented
    }

    pub fn variant(&self) -> Variant {
        if self.oriented() {
            Variant::Oriented
        } else {
            Variant::Unoriented
        }
    }

    pub fn params(&self) -> Result<Params> {
        let m = self.m();
        let p = match (&self.args.delta, self.args.seed) {
            (Some(d), _) => parse_delta(d, m)?,
            (None, Some(seed)) if self.oriented() => Params::generic(m, seed),
            (None, Some(seed)) => Params::generic_unrestricted(m, seed),
            (None, None) => {
                return Err(Error::Validation(
                    "pass --delta, or --seed for generic parameters".into(),
                ))
            }
        };
        if self.oriented() && !p.is_symmetric() {
            return Err(Error::Validation(
                "the oriented product needs delta_i = delta_{m-i}; use --unoriented".into(),
            ));
        }
        Ok(p)
    }

    pub fn algebra(&self) -> Result<DiagramAlgebra> {
        Ok(DiagramAlgebra::cyclotomic(self.n(), &self.params()?, self.oriented()))
    }

    /// Parameter fields echoed in every JSON report that uses them.
    pub fn params_json(&self) -> Result<serde_json::Value> {
        let p = self.params()?;
        Ok(serde_json::json!({
            "delta": p.delta().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "seed": if self.args.delta.is_some() { None } else { self.args.seed },
        }))
    }

    pub fn label(&self, s: &str) -> Result<MultiPartition> {
        let l: MultiPartition = s.parse()?;
        if l.m() != self.m() as usize {
            return Err(Error::Validation(format!("{s} does not have {} components", self.m())));
        }
        Ok(l)
    }

    pub fn composition(&self, s: &str) -> Result<MComposition> {
        let w: MComposition = s.parse()?;
        if w.m() != self.m() as usize {
            return Err(Error::Validation(format!("{s} does not have {} entries", self.m())));
        }
        Ok(w)
    }
}

fn parse_delta(s: &str, m: u32) -> Result<Params> {
    let p = if let Some(path) = s.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {path}: {e}")))?;
        let raw: Vec<Cyclotomic> = serde_json::from_str(&text)?;
        Params::new(raw)?
    } else {
        let qs = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Params::from_rationals(&qs)?
    };
    if p.m() != m {
        return Err(Error::Validation(format!("{} parameters given for m = {m}", p.m())));
    }
    Ok(p)
}
