//! Named groups built from generators, and a small expression language for
//! composing them, e.g. `direct_product(quaternion8, cyclic(2))`.

use std::fmt;

use super::group::{build_group, direct_product, pair_element, FiniteGroup, MAX_ORDER};
use super::perm::Permutation;
use super::spec_file::parse_group_spec;
use super::GroupError;

/// Nesting limit for catalog expressions.
pub const MAX_DEPTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    Cyclic(u32),
    /// Symmetries of the n-gon, order 2n.
    Dihedral(u32),
    Quaternion8,
    Symmetric(u32),
    DirectProduct(Box<CatalogEntry>, Box<CatalogEntry>),
    /// `G x H` modulo the diagonal pair of least central involutions.
    CentralProductModDiagonalCenter(Box<CatalogEntry>, Box<CatalogEntry>),
    /// `Q8^m x C2` with the centres of the Q8 factors identified.
    Q8PowerFamily(u32),
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogEntry::Cyclic(n) => write!(f, "cyclic({n})"),
            CatalogEntry::Dihedral(n) => write!(f, "dihedral({n})"),
            CatalogEntry::Quaternion8 => f.write_str("quaternion8"),
            CatalogEntry::Symmetric(n) => write!(f, "symmetric({n})"),
            CatalogEntry::DirectProduct(a, b) => write!(f, "direct_product({a}, {b})"),
            CatalogEntry::CentralProductModDiagonalCenter(a, b) => {
                write!(f, "central_product_mod_diagonal_center({a}, {b})")
            }
            CatalogEntry::Q8PowerFamily(m) => write!(f, "q8_power_family({m})"),
        }
    }
}

fn cycle(points: impl IntoIterator<Item = u32>) -> Vec<u32> {
    points.into_iter().collect()
}

fn gens_of(cycles: Vec<Vec<Vec<u32>>>) -> Result<Vec<Permutation>, GroupError> {
    cycles.iter().map(|c| Permutation::from_cycles(c)).collect()
}

fn quaternion8_generators() -> Vec<Permutation> {
    ["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]
        .map(|s| Permutation::parse(s).expect("static generator"))
        .to_vec()
}

/// Least-index non-identity central element of order 2.
fn central_involution(g: &FiniteGroup) -> Result<usize, GroupError> {
    g.center()
        .into_iter()
        .find(|&z| z != 0 && g.mul(z, z) == 0)
        .ok_or_else(|| GroupError::NoCentralInvolution(g.label().to_string()))
}

pub fn catalog(entry: &CatalogEntry) -> Result<FiniteGroup, GroupError> {
    let label = entry.to_string();
    match *entry {
        CatalogEntry::Cyclic(n) => {
            if n == 0 || n as usize > MAX_ORDER {
                return Err(GroupError::InvalidParameter(label));
            }
            let gens = if n == 1 {
                vec![]
            } else {
                gens_of(vec![vec![cycle(1..=n)]])?
            };
            build_group(&gens, MAX_ORDER, label)
        }
        CatalogEntry::Dihedral(n) => {
            if n < 3 || n as usize > MAX_ORDER / 2 {
                return Err(GroupError::InvalidParameter(label));
            }
            let reflection: Vec<Vec<u32>> = (2..=n)
                .map(|i| (i, n + 2 - i))
                .filter(|&(a, b)| a < b)
                .map(|(a, b)| vec![a, b])
                .collect();
            let gens = gens_of(vec![vec![cycle(1..=n)], reflection])?;
            build_group(&gens, MAX_ORDER, label)
        }
        CatalogEntry::Quaternion8 => build_group(&quaternion8_generators(), MAX_ORDER, label),
        CatalogEntry::Symmetric(n) => {
            if n == 0 || n > 12 {
                return Err(GroupError::InvalidParameter(label));
            }
            let gens = match n {
                1 => vec![],
                2 => gens_of(vec![vec![vec![1, 2]]])?,
                _ => gens_of(vec![vec![vec![1, 2]], vec![cycle(1..=n)]])?,
            };
            build_group(&gens, MAX_ORDER, label)
        }
        CatalogEntry::DirectProduct(ref a, ref b) => {
            direct_product(&catalog(a)?, &catalog(b)?, label)
        }
        CatalogEntry::CentralProductModDiagonalCenter(ref a, ref b) => {
            let (g, h) = (catalog(a)?, catalog(b)?);
            let (zg, zh) = (central_involution(&g)?, central_involution(&h)?);
            let prod = direct_product(&g, &h, label.clone())?;
            let z = prod
                .index_of(&pair_element(&g, &h, zg, zh))
                .expect("pair lies in the product");
            prod.quotient(&prod.subgroup(&[z]), label)
        }
        CatalogEntry::Q8PowerFamily(m) => {
            if m == 0 || m > 16 {
                return Err(GroupError::InvalidParameter(label));
            }
            let mut gens = Vec::new();
            for i in 0..m as usize {
                gens.extend(quaternion8_generators().iter().map(|p| p.shifted(8 * i)));
            }
            let c2_at = 8 * m;
            gens.push(Permutation::from_cycles(&[vec![c2_at + 1, c2_at + 2]])?);
            let prod = build_group(&gens, MAX_ORDER, label.clone())?;
            let z = Permutation::parse("(1 3)(2 4)(5 7)(6 8)").expect("static");
            let centres: Vec<usize> = (0..m as usize)
                .map(|i| prod.index_of(&z.shifted(8 * i)).expect("centre lies in product"))
                .collect();
            let identified: Vec<usize> =
                centres.windows(2).map(|w| prod.mul(w[0], w[1])).collect();
            if identified.is_empty() {
                return Ok(prod);
            }
            prod.quotient(&prod.subgroup(&identified), label)
        }
    }
}

/// Parses a catalog expression.
pub fn parse_catalog_expr(text: &str) -> Result<CatalogEntry, GroupError> {
    if text.len() > 4096 {
        return Err(GroupError::UnknownCatalogEntry("expression too long".into()));
    }
    let mut p = ExprParser { s: text.as_bytes(), pos: 0 };
    let e = p.entry(0)?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, msg: &str) -> GroupError {
        GroupError::UnknownCatalogEntry(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<(), GroupError> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<&str, GroupError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn number(&mut self) -> Result<u32, GroupError> {
        self.eat(b'(')?;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        let n = digits
            .parse::<u32>()
            .map_err(|_| self.error("expected an integer parameter"))?;
        self.eat(b')')?;
        Ok(n)
    }

    fn pair(&mut self, depth: usize) -> Result<(Box<CatalogEntry>, Box<CatalogEntry>), GroupError> {
        self.eat(b'(')?;
        let a = self.entry(depth + 1)?;
        self.eat(b',')?;
        let b = self.entry(depth + 1)?;
        self.eat(b')')?;
        Ok((Box::new(a), Box::new(b)))
    }

    fn entry(&mut self, depth: usize) -> Result<CatalogEntry, GroupError> {
        if depth > MAX_DEPTH {
            return Err(self.error("expression nested too deeply"));
        }
        let name = self.ident()?.to_ascii_lowercase();
        Ok(match name.as_str() {
            "cyclic" => CatalogEntry::Cyclic(self.number()?),
            "dihedral" => CatalogEntry::Dihedral(self.number()?),
            "quaternion8" => CatalogEntry::Quaternion8,
            "symmetric" => CatalogEntry::Symmetric(self.number()?),
            "q8_power_family" => CatalogEntry::Q8PowerFamily(self.number()?),
            "direct_product" => {
                let (a, b) = self.pair(depth)?;
                CatalogEntry::DirectProduct(a, b)
            }
            "central_product_mod_diagonal_center" => {
                let (a, b) = self.pair(depth)?;
                CatalogEntry::CentralProductModDiagonalCenter(a, b)
            }
            other => return Err(GroupError::UnknownCatalogEntry(other.to_string())),
        })
    }
}

impl std::str::FromStr for CatalogEntry {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_catalog_expr(s)
    }
}

const BUNDLED_EXPRESSIONS: &[&str] = &[
    "cyclic(1)",
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(6)",
    "cyclic(8)",
    "dihedral(4)",
    "dihedral(5)",
    "dihedral(8)",
    "dihedral(16)",
    "quaternion8",
    "symmetric(3)",
    "symmetric(4)",
    "direct_product(cyclic(2), cyclic(2))",
    "direct_product(quaternion8, cyclic(2))",
    "direct_product(dihedral(4), cyclic(2))",
    "direct_product(symmetric(3), symmetric(3))",
    "direct_product(symmetric(4), cyclic(2))",
    "direct_product(dihedral(4), dihedral(4))",
    "direct_product(quaternion8, quaternion8)",
    "central_product_mod_diagonal_center(quaternion8, quaternion8)",
    "central_product_mod_diagonal_center(dihedral(4), dihedral(4))",
    "central_product_mod_diagonal_center(dihedral(4), quaternion8)",
    "q8_power_family(1)",
    "q8_power_family(2)",
];

const BUNDLED_FILES: &[(&str, &str)] = &[
    ("alternating4", include_str!("../../data/groups/a4.group")),
    ("quaternion8_file", include_str!("../../data/groups/q8.group")),
];

/// The bundled test catalog: every group has order at most 64.
pub fn bundled_catalog() -> Result<Vec<FiniteGroup>, GroupError> {
    let mut out = Vec::new();
    for expr in BUNDLED_EXPRESSIONS {
        out.push(catalog(&parse_catalog_expr(expr)?)?);
    }
    for (label, text) in BUNDLED_FILES {
        let gens = parse_group_spec(text)?;
        out.push(build_group(&gens, MAX_ORDER, *label)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::classes::conjugacy_classes;

    fn order(expr: &str) -> usize {
        catalog(&parse_catalog_expr(expr).unwrap()).unwrap().order()
    }

    #[test]
    fn basic_orders() {
        assert_eq!(order("cyclic(6)"), 6);
        assert_eq!(conjugacy_classes(&catalog(&CatalogEntry::Cyclic(6)).unwrap()).len(), 6);
        assert_eq!(order("quaternion8"), 8);
        assert_eq!(order("dihedral(4)"), 8);
        assert_eq!(order("symmetric(4)"), 24);
        assert_eq!(order("cyclic(1)"), 1);
        assert_eq!(order("q8_power_family(1)"), 16);
        assert_eq!(order("q8_power_family(2)"), 64);
        assert_eq!(order("central_product_mod_diagonal_center(quaternion8, dihedral(4))"), 32);
    }

    #[test]
    fn dihedral_is_nonabelian_with_expected_classes() {
        let d4 = catalog(&CatalogEntry::Dihedral(4)).unwrap();
        assert!(!d4.is_abelian());
        assert_eq!(conjugacy_classes(&d4).class_sizes(), &[1, 1, 2, 2, 2]);
        assert_eq!(d4.center().len(), 2);
    }

    #[test]
    fn expressions_round_trip() {
        for expr in BUNDLED_EXPRESSIONS {
            let e = parse_catalog_expr(expr).unwrap();
            assert_eq!(&e.to_string(), expr);
        }
        assert_eq!(
            parse_catalog_expr(" Direct_Product ( cyclic(2),cyclic( 3 ) ) ").unwrap(),
            CatalogEntry::DirectProduct(
                Box::new(CatalogEntry::Cyclic(2)),
                Box::new(CatalogEntry::Cyclic(3))
            )
        );
    }

    #[test]
    fn bad_expressions() {
        for bad in ["", "foo", "cyclic", "cyclic(x)", "cyclic(2", "direct_product(cyclic(2))", "quaternion8 x"] {
            assert!(parse_catalog_expr(bad).is_err(), "{bad:?}");
        }
        let deep = "direct_product(".repeat(20) + "cyclic(2)";
        assert!(parse_catalog_expr(&deep).is_err());
        assert!(matches!(
            catalog(&CatalogEntry::Cyclic(0)),
            Err(GroupError::InvalidParameter(_))
        ));
        assert!(matches!(
            catalog(&CatalogEntry::Q8PowerFamily(4)),
            Err(GroupError::ClosureExceedsLimit { .. })
        ));
        assert!(matches!(
            catalog(&parse_catalog_expr("central_product_mod_diagonal_center(cyclic(3), cyclic(2))").unwrap()),
            Err(GroupError::NoCentralInvolution(_))
        ));
    }

    #[test]
    fn bundled_catalog_is_small() {
        let groups = bundled_catalog().unwrap();
        assert!(groups.len() >= 20);
        assert!(groups.iter().all(|g| g.order() <= 64));
        let a4 = groups.iter().find(|g| g.label() == "alternating4").unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(conjugacy_classes(a4).class_sizes(), &[1, 3, 4, 4]);
    }
}
