//! Abelian number fields described by congruence data: a modulus `N` and a
//! subgroup `H` of `(Z/N)^x`. The field is the fixed field of `H` inside the
//! `N`-th cyclotomic field, and the Frobenius of `p` is the coset of `p mod N`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::PrimesError;

pub const MAX_MODULUS: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    modulus: u64,
    generators: Vec<u64>,
    label: String,
    #[serde(skip)]
    h_elements: Vec<u64>,
    #[serde(skip)]
    coset_index: Vec<u32>,
    #[serde(skip)]
    coset_reps: Vec<u64>,
    #[serde(skip)]
    coset_orders: Vec<u32>,
}

const NON_UNIT: u32 = u32::MAX;

impl FieldSpec {
    pub fn new(modulus: u64, generators: &[u64], label: impl Into<String>) -> Result<Self, PrimesError> {
        if modulus == 0 || modulus > MAX_MODULUS {
            return Err(PrimesError::InvalidField(format!(
                "modulus {modulus} outside 1..={MAX_MODULUS}"
            )));
        }
        let n = modulus;
        let gens: Vec<u64> = generators.iter().map(|g| g % n).collect();
        if let Some(g) = gens.iter().find(|g| g.gcd(&n) != 1) {
            return Err(PrimesError::InvalidField(format!(
                "generator {g} is not a unit mod {n}"
            )));
        }

        let one = 1 % n;
        let mut in_h = vec![false; n as usize];
        in_h[one as usize] = true;
        let mut h_elements = vec![one];
        let mut head = 0;
        while head < h_elements.len() {
            let x = h_elements[head];
            for &g in &gens {
                let y = x * g % n;
                if !in_h[y as usize] {
                    in_h[y as usize] = true;
                    h_elements.push(y);
                }
            }
            head += 1;
        }
        Ok(Self::from_subgroup(n, gens, in_h, label.into()))
    }

    fn from_subgroup(n: u64, generators: Vec<u64>, in_h: Vec<bool>, label: String) -> Self {
        let h_elements: Vec<u64> = (0..n).filter(|&u| in_h[u as usize]).collect();
        let mut coset_index = vec![NON_UNIT; n as usize];
        let mut coset_reps = Vec::new();
        for u in 0..n {
            if coset_index[u as usize] != NON_UNIT || u.gcd(&n) != 1 {
                continue;
            }
            let c = coset_reps.len() as u32;
            coset_reps.push(u);
            for &h in &h_elements {
                coset_index[(u * h % n) as usize] = c;
            }
        }
        let coset_orders = coset_reps
            .iter()
            .map(|&u| {
                let mut x = u;
                let mut k = 1;
                while !in_h[x as usize] {
                    x = x * u % n;
                    k += 1;
                }
                k
            })
            .collect();
        FieldSpec {
            modulus: n,
            generators,
            label,
            h_elements,
            coset_index,
            coset_reps,
            coset_orders,
        }
    }

    /// Parses `N=<int>`, `H=<comma list>` and optional `label=<text>` lines;
    /// `#` starts a comment. Lines may also be separated by `;`.
    pub fn parse(text: &str) -> Result<Self, PrimesError> {
        let mut modulus = None;
        let mut gens: Option<Vec<u64>> = None;
        let mut label = None;
        let lines = text.lines().enumerate().flat_map(|(i, l)| {
            l.split('#').next().unwrap_or("").split(';').map(move |s| (i + 1, s))
        });
        for (line, raw) in lines {
            let entry = raw.trim();
            if entry.is_empty() {
                continue;
            }
            let err = |msg: String| PrimesError::Parse { line, msg };
            let (key, value) = entry
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got {entry:?}")))?;
            let value = value.trim();
            match key.trim() {
                "N" => {
                    let n: u64 = value
                        .parse()
                        .map_err(|_| err(format!("bad modulus {value:?}")))?;
                    if modulus.replace(n).is_some() {
                        return Err(err("N given twice".into()));
                    }
                }
                "H" => {
                    let list = if value.is_empty() {
                        Vec::new()
                    } else {
                        value
                            .split(',')
                            .map(|t| t.trim().parse::<u64>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| err(format!("bad generator list {value:?}")))?
                    };
                    if list.len() > 64 {
                        return Err(err("more than 64 generators".into()));
                    }
                    if gens.replace(list).is_some() {
                        return Err(err("H given twice".into()));
                    }
                }
                "label" => label = Some(value.to_string()),
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let modulus = modulus.ok_or(PrimesError::Parse {
            line: 0,
            msg: "missing N=".into(),
        })?;
        let gens = gens.unwrap_or_default();
        let label = label.unwrap_or_else(|| default_label(modulus, &gens));
        Self::new(modulus, &gens, label)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Sorted elements of `H`.
    pub fn subgroup(&self) -> &[u64] {
        &self.h_elements
    }

    /// `[(Z/N)^x : H]`.
    pub fn degree(&self) -> u32 {
        self.coset_reps.len() as u32
    }

    /// Least residues of the cosets of `H`; coset 0 is `H` itself.
    pub fn coset_reps(&self) -> &[u64] {
        &self.coset_reps
    }

    pub fn coset_orders(&self) -> &[u32] {
        &self.coset_orders
    }

    /// Coset of `r mod N`, or `None` if `r` is not a unit.
    pub fn coset_of(&self, r: u64) -> Option<usize> {
        let c = self.coset_index[(r % self.modulus) as usize];
        (c != NON_UNIT).then_some(c as usize)
    }

    pub fn is_ramified(&self, p: u64) -> bool {
        self.modulus % p == 0 && self.modulus > 1
    }

    /// Order of the Frobenius of `p` in `(Z/N)^x / H`.
    pub fn residue_degree(&self, p: u64) -> Result<u32, PrimesError> {
        match self.coset_of(p) {
            Some(c) if !self.is_ramified(p) => Ok(self.coset_orders[c]),
            _ => Err(PrimesError::Ramified {
                p,
                modulus: self.modulus,
            }),
        }
    }

    /// The same field described at modulus `m`, a multiple of `N`.
    pub fn lift(&self, m: u64) -> Result<FieldSpec, PrimesError> {
        if m % self.modulus != 0 {
            return Err(PrimesError::InvalidField(format!(
                "{m} is not a multiple of {}",
                self.modulus
            )));
        }
        if m > MAX_MODULUS {
            return Err(PrimesError::InvalidField(format!("modulus {m} too large")));
        }
        let n = self.modulus;
        let in_h: Vec<bool> = (0..m)
            .map(|u| u.gcd(&m) == 1 && self.h_elements.binary_search(&(u % n)).is_ok())
            .collect();
        // Greedy generating set for the preimage.
        let mut member = vec![false; m as usize];
        member[(1 % m) as usize] = true;
        let mut elements = vec![1 % m];
        let mut gens = Vec::new();
        for u in 0..m {
            if !in_h[u as usize] || member[u as usize] {
                continue;
            }
            gens.push(u);
            let base = elements.clone();
            let mut power = u;
            while !member[power as usize] {
                for &e in &base {
                    let y = e * power % m;
                    if !member[y as usize] {
                        member[y as usize] = true;
                        elements.push(y);
                    }
                }
                power = power * u % m;
            }
        }
        Ok(Self::from_subgroup(m, gens, in_h, self.label.clone()))
    }

    /// Whether `self` is contained in `other`, i.e. `H_other` lies in
    /// `H_self` at a common modulus.
    pub fn is_subfield_of(&self, other: &FieldSpec) -> Result<bool, PrimesError> {
        let m = self.modulus.lcm(&other.modulus);
        let (a, b) = (self.lift(m)?, other.lift(m)?);
        Ok(b.h_elements.iter().all(|h| a.h_elements.binary_search(h).is_ok()))
    }

    /// Whether the Galois group `(Z/N)^x / H` is cyclic.
    pub fn is_cyclic(&self) -> bool {
        self.coset_orders.iter().any(|&o| o == self.degree())
    }
}

fn default_label(n: u64, gens: &[u64]) -> String {
    let list: Vec<String> = gens.iter().map(u64::to_string).collect();
    format!("N={n};H={}", list.join(","))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&default_label(self.modulus, &self.generators))
    }
}
