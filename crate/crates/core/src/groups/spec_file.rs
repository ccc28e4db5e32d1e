//! Group spec files: one permutation per line in cycle notation, `#` starts a
//! comment, blank lines are ignored.

use super::perm::Permutation;
use super::GroupError;

/// Most generators accepted from one file.
pub const MAX_GENERATORS: usize = 256;

pub fn parse_group_spec(text: &str) -> Result<Vec<Permutation>, GroupError> {
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if gens.len() == MAX_GENERATORS {
            return Err(GroupError::Parse {
                line: i + 1,
                msg: format!("more than {MAX_GENERATORS} generators"),
            });
        }
        let p = Permutation::parse(line).map_err(|e| GroupError::Parse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        gens.push(p);
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines() {
        let gens = parse_group_spec("# header\n\n(1 2)  # swap\n(1 2 3)\n").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_group_spec("").unwrap().is_empty());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_group_spec("(1 2)\n\n(1 2\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 3, .. }));
    }
}
