//! Permutations on `{1, ..., degree}` and their cycle notation.
//!
//! Points are 1-based in text and 0-based internally. Composition is
//! left-to-right: `a.then(&b)` applies `a` first, so `x^(ab) = (x^a)^b`.

use std::fmt;

use super::GroupError;

/// Largest point accepted in cycle notation.
pub const MAX_POINT: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::InvalidPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 {
                    return Err(GroupError::InvalidPermutation(
                        "points are numbered from 1".into(),
                    ));
                }
                let i = (pt - 1) as usize;
                if used[i] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {pt} appears twice"
                    )));
                }
                used[i] = true;
                images[i] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`, `(1,2)` or `()`.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(GroupError::InvalidPermutation("empty permutation".into()));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(GroupError::InvalidPermutation(format!(
                    "expected '(' at {rest:?}"
                )));
            };
            let Some(close) = body.find(')') else {
                return Err(GroupError::InvalidPermutation("unclosed cycle".into()));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(GroupError::InvalidPermutation("nested '('".into()));
            }
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let pt: u32 = tok.parse().map_err(|_| {
                    GroupError::InvalidPermutation(format!("bad point {tok:?}"))
                })?;
                if pt == 0 || pt > MAX_POINT {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {pt} out of range 1..={MAX_POINT}"
                    )));
                }
                cycle.push(pt);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(&cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point; points beyond the degree are fixed.
    pub fn image(&self, point: u32) -> u32 {
        self.images.get(point as usize).copied().unwrap_or(point)
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(images.len() as u32..degree.max(images.len()) as u32);
        Permutation { images }
    }

    /// Relabels point `i` as `i + offset`, fixing `0..offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        let mut images: Vec<u32> = (0..offset as u32).collect();
        images.extend(self.images.iter().map(|&i| i + offset as u32));
        Permutation { images }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        let degree = self.degree().max(other.degree());
        let images = (0..degree as u32)
            .map(|i| other.image(self.image(i)))
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, 1-based.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse("(1 2 3)(4,5)").unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert!(Permutation::parse("()").unwrap().is_identity());
        assert!(Permutation::parse(" (2)(1) ").unwrap().is_identity());
    }

    #[test]
    fn malformed_cycles_rejected() {
        for bad in ["(1 2", "1 2)", "(1 1)", "(1 2)(2 3)", "(0 1)", "(a b)", "((1 2))", ""] {
            assert!(
                matches!(Permutation::parse(bad), Err(GroupError::InvalidPermutation(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse("(1 2)").unwrap();
        let b = Permutation::parse("(2 3)").unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).image(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }
}
