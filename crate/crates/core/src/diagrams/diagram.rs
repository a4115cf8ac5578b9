use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A reduced labelled Brauer diagram on `n + n` nodes.
///
/// Nodes `0..n` are the top row left to right, `n..2n` the bottom row.
/// Every strand is stored with its canonical orientation, from the smaller
/// node index to the larger one (so through strands point down and arcs
/// point right), and `label[k]` holds that strand's label at both of its ends.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    pub(crate) partner: Vec<u8>,
    pub(crate) label: Vec<u8>,
}

/// A strand `from → to` carrying `label`, in any orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawStrand {
    pub from: usize,
    pub to: usize,
    pub label: i64,
}

impl Diagram {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|k| ((k + n) % (2 * n)) as u8).collect();
        Diagram {
            partner,
            label: vec![0; 2 * n],
        }
    }

    /// Build the canonical representative from strands given in arbitrary
    /// orientation. Reversing a strand negates its label.
    pub fn from_strands(n: usize, m: u32, strands: &[RawStrand]) -> Result<Self> {
        if n > 100 {
            return Err(Error::Scale {
                what: "diagram size n",
                size: n,
                limit: 100,
            });
        }
        if m == 0 {
            return invalid("label modulus must be positive");
        }
        let mut partner = vec![u8::MAX; 2 * n];
        let mut label = vec![0u8; 2 * n];
        for s in strands {
            if s.from >= 2 * n || s.to >= 2 * n || s.from == s.to {
                return invalid(format!("bad strand {} -> {}", s.from, s.to));
            }
            if partner[s.from] != u8::MAX || partner[s.to] != u8::MAX {
                return invalid("strands do not form a perfect matching");
            }
            let l = if s.from < s.to { s.label } else { -s.label };
            let l = l.rem_euclid(m as i64) as u8;
            partner[s.from] = s.to as u8;
            partner[s.to] = s.from as u8;
            label[s.from] = l;
            label[s.to] = l;
        }
        if partner.iter().any(|&p| p == u8::MAX) {
            return invalid("strands do not form a perfect matching");
        }
        Ok(Diagram { partner, label })
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, k: usize) -> usize {
        self.partner[k] as usize
    }

    /// Canonical label of the strand through node `k`.
    pub fn label(&self, k: usize) -> u32 {
        self.label[k] as u32
    }

    pub fn is_through(&self, k: usize) -> bool {
        let n = self.n();
        (k < n) != (self.partner(k) < n)
    }

    pub fn through_count(&self) -> usize {
        (0..self.n()).filter(|&k| self.is_through(k)).count()
    }

    /// Canonical strands `(u, v, label)` with `u < v`, sorted by `u`.
    pub fn strands(&self) -> Vec<(usize, usize, u32)> {
        (0..2 * self.n())
            .filter(|&k| self.partner(k) > k)
            .map(|k| (k, self.partner(k), self.label(k)))
            .collect()
    }

    /// Same matching with every label set to zero.
    pub fn unlabelled(&self) -> Diagram {
        Diagram {
            partner: self.partner.clone(),
            label: vec![0; self.label.len()],
        }
    }

    pub fn has_zero_labels(&self) -> bool {
        self.label.iter().all(|&l| l == 0)
    }

    /// Add `delta` (mod `m`) to the canonical label of the strand at `k`.
    pub fn shift_label(&mut self, k: usize, delta: i64, m: u32) {
        let p = self.partner(k);
        let l = (self.label[k] as i64 + delta).rem_euclid(m as i64) as u8;
        self.label[k] = l;
        self.label[p] = l;
    }

    /// Reflection through the horizontal axis; in the oriented setting this
    /// reverses the canonical direction of through strands.
    pub fn star(&self, m: u32, oriented: bool) -> Diagram {
        let n = self.n();
        let refl = |k: usize| if k < n { k + n } else { k - n };
        let mut strands = Vec::with_capacity(n);
        for (u, v, l) in self.strands() {
            strands.push(RawStrand {
                from: refl(u),
                to: refl(v),
                label: l as i64,
            });
        }
        let mut d = Diagram::from_strands(n, m, &strands).expect("reflection is a matching");
        if !oriented {
            // unoriented labels do not depend on direction
            for (u, v, l) in self.strands() {
                d.label[refl(u)] = l as u8;
                d.label[refl(v)] = l as u8;
            }
        }
        d
    }

    /// Add a through strand `n+1 → (n+1)bar` labelled 0 on the right.
    pub fn embed(&self) -> Diagram {
        let n = self.n();
        let map = |k: usize| if k < n { k } else { k + 1 };
        let mut partner = vec![0u8; 2 * n + 2];
        let mut label = vec![0u8; 2 * n + 2];
        for k in 0..2 * n {
            partner[map(k)] = map(self.partner(k)) as u8;
            label[map(k)] = self.label[k];
        }
        partner[n] = (2 * n + 1) as u8;
        partner[2 * n + 1] = n as u8;
        Diagram { partner, label }
    }

    /// Relabel nodes by a permutation of positions applied to both rows:
    /// position `i` moves to `perm[i]`. Labels are recanonicalised.
    pub fn permute_positions(&self, perm: &[usize], m: u32, oriented: bool) -> Diagram {
        let n = self.n();
        let map = |k: usize| if k < n { perm[k] } else { n + perm[k - n] };
        let strands: Vec<RawStrand> = self
            .strands()
            .into_iter()
            .map(|(u, v, l)| RawStrand {
                from: map(u),
                to: map(v),
                label: l as i64,
            })
            .collect();
        let mut d = Diagram::from_strands(n, m, &strands).expect("permutation keeps a matching");
        if !oriented {
            for (u, v, l) in self.strands() {
                d.label[map(u)] = l as u8;
                d.label[map(v)] = l as u8;
            }
        }
        d
    }

    pub fn node_name(n: usize, k: usize) -> String {
        if k < n {
            format!("{}", k + 1)
        } else {
            format!("{}bar", k - n + 1)
        }
    }

    pub fn parse_node(n: usize, s: &str) -> Result<usize> {
        let s = s.trim();
        let (num, bottom) = match s.strip_suffix("bar") {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let k: usize = num
            .parse()
            .map_err(|_| Error::Validation(format!("bad node name {s:?}")))?;
        if k == 0 || k > n {
            return invalid(format!("node {s:?} out of range for n={n}"));
        }
        Ok(if bottom { n + k - 1 } else { k - 1 })
    }

    pub fn to_json(&self, m: u32) -> DiagramJson {
        let n = self.n();
        DiagramJson {
            n,
            m,
            strands: self
                .strands()
                .into_iter()
                .map(|(u, v, l)| StrandJson {
                    from: Self::node_name(n, u),
                    to: Self::node_name(n, v),
                    label: l as i64,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        let strands = j
            .strands
            .iter()
            .map(|s| {
                Ok(RawStrand {
                    from: Self::parse_node(j.n, &s.from)?,
                    to: Self::parse_node(j.n, &s.to)?,
                    label: s.label,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_strands(j.n, j.m, &strands)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandJson {
    pub from: String,
    pub to: String,
    pub label: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub m: u32,
    pub strands: Vec<StrandJson>,
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let parts: Vec<String> = self
            .strands()
            .into_iter()
            .map(|(u, v, l)| format!("{}-{}:{l}", Diagram::node_name(n, u), Diagram::node_name(n, v)))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(from: usize, to: usize, label: i64) -> RawStrand {
        RawStrand { from, to, label }
    }

    #[test]
    fn canonical_forms() {
        // through strand entered upwards
        let a = Diagram::from_strands(1, 3, &[s(0, 1, 2)]).unwrap();
        let b = Diagram::from_strands(1, 3, &[s(1, 0, 1)]).unwrap();
        assert_eq!(a, b);
        // northern arc entered right to left
        let c = Diagram::from_strands(2, 3, &[s(1, 0, 1), s(2, 3, 0)]).unwrap();
        assert_eq!(c.label(0), 2);
        let id = Diagram::identity(3);
        assert_eq!(Diagram::from_strands(3, 5, &[s(0, 3, 0), s(1, 4, 0), s(2, 5, 0)]).unwrap(), id);
        assert!(Diagram::from_strands(2, 3, &[s(0, 1, 0), s(1, 2, 0)]).is_err());
        assert!(Diagram::from_strands(2, 3, &[s(0, 1, 0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let d = Diagram::from_strands(3, 4, &[s(0, 2, 3), s(1, 5, 1), s(3, 4, 2)]).unwrap();
        let j = d.to_json(4);
        assert_eq!(j.strands[1].to, "3bar");
        let text = serde_json::to_string(&j).unwrap();
        let back: DiagramJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Diagram::from_json(&back).unwrap(), d);
        assert_eq!(d.to_string(), "[1-3:3 2-3bar:1 1bar-2bar:2]");
    }

    #[test]
    fn star_and_embed() {
        let d = Diagram::from_strands(2, 3, &[s(0, 2, 1), s(1, 3, 0)]).unwrap();
        let st = d.star(3, true);
        assert_eq!(st.label(0), 2);
        assert_eq!(st.star(3, true), d);
        assert_eq!(d.star(3, false).label(0), 1);
        let e = d.embed();
        assert_eq!(e.n(), 3);
        assert_eq!(e.partner(0), 3);
        assert_eq!(e.label(0), 1);
        assert_eq!(e.partner(2), 5);
    }
}
