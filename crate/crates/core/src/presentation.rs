//! Finite group presentations and the text syntax for words.
//!
//! Words are whitespace-separated letters, each a generator name with an
//! optional `^exponent`, e.g. `"g^5"` or `"h g h g"`. A relation written as
//! `"u = v"` is converted to the relator `u·v⁻¹` at parse time.

use crate::error::{Error, Result};
use crate::word::FreeWord;

/// A finite presentation: named generators and a list of relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generator_names: Vec<String>,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let pres = GroupPresentation { generator_names, relators };
        pres.validate()?;
        Ok(pres)
    }

    /// Parses generators plus relator strings in the text word syntax.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        validate_names(&names)?;
        let rels = relators
            .iter()
            .map(|r| parse_relator(r, &names))
            .collect::<Result<Vec<_>>>()?;
        GroupPresentation::new(names, rels)
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn validate(&self) -> Result<()> {
        validate_names(&self.generator_names)?;
        for (i, r) in self.relators.iter().enumerate() {
            if let Some(m) = r.max_symbol() {
                if m >= self.generator_names.len() {
                    return Err(Error::InvalidPresentation(format!(
                        "relator {} uses symbol index {} but there are only {} generators",
                        i,
                        m,
                        self.generator_names.len()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.exponent_sums(self.generator_count()))
            .collect()
    }

    /// Renders a word in this presentation's generator names.
    pub fn format_word(&self, w: &FreeWord) -> String {
        format_word(w, &self.generator_names)
    }

    pub fn parse_word(&self, text: &str) -> Result<FreeWord> {
        parse_word(text, &self.generator_names)
    }
}

fn validate_names(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        let mut chars = n.chars();
        let head_ok = chars.next().map(|c| c.is_ascii_alphabetic()).unwrap_or(false);
        if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidPresentation(format!(
                "generator name `{n}` is not an identifier"
            )));
        }
        if n == "e" || n == "1" {
            return Err(Error::InvalidPresentation(
                "generator names `e` and `1` are reserved for the identity".into(),
            ));
        }
        if names[..i].contains(n) {
            return Err(Error::InvalidPresentation(format!("duplicate generator name `{n}`")));
        }
    }
    Ok(())
}

/// Parses a relator, accepting either a plain word or a `u = v` relation.
pub fn parse_relator(text: &str, names: &[String]) -> Result<FreeWord> {
    match text.split_once('=') {
        Some((u, v)) => {
            if v.contains('=') {
                return Err(Error::InvalidWord(format!("more than one `=` in `{text}`")));
            }
            let u = parse_word(u, names)?;
            let v = parse_word(v, names)?;
            Ok(u.concat(&v.inverse()))
        }
        None => parse_word(text, names),
    }
}

/// Parses a word in the whitespace-separated `name[^exp]` syntax.
///
/// The empty string, `e`, and `1` all denote the identity.
pub fn parse_word(text: &str, names: &[String]) -> Result<FreeWord> {
    let mut w = FreeWord::identity();
    for token in text.split_whitespace() {
        if token == "e" || token == "1" {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let exp: i64 = e.parse().map_err(|_| {
                    Error::InvalidWord(format!("bad exponent in token `{token}`"))
                })?;
                (n, exp)
            }
            None => (token, 1),
        };
        if exp.unsigned_abs() > (1 << 20) {
            return Err(Error::InvalidWord(format!("exponent out of range in `{token}`")));
        }
        let sym = names
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::InvalidWord(format!("unknown generator `{name}` in token `{token}`")))?;
        w.push(sym, exp);
    }
    Ok(w)
}

/// Inverse of [`parse_word`]; the identity renders as `"e"`.
pub fn format_word(w: &FreeWord, names: &[String]) -> String {
    if w.is_identity() {
        return "e".into();
    }
    w.letters()
        .iter()
        .map(|&(s, e)| {
            if e == 1 {
                names[s].clone()
            } else {
                format!("{}^{}", names[s], e)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_presentation() {
        let p = GroupPresentation::parse(&["g", "h"], &["g^5", "h^2", "h g h g"]).unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators()[0].letters(), &[(0, 5)]);
        assert_eq!(p.relators()[2].letters(), &[(1, 1), (0, 1), (1, 1), (0, 1)]);
    }

    #[test]
    fn equation_relator_becomes_u_v_inverse() {
        // h g h = g^-1 is the same relation as h g h g.
        let p = GroupPresentation::parse(&["g", "h"], &["h g h = g^-1"]).unwrap();
        assert_eq!(p.relators()[0].letters(), &[(1, 1), (0, 1), (1, 1), (0, 1)]);
    }

    #[test]
    fn identity_tokens() {
        let names = vec!["g".to_string()];
        assert!(parse_word("", &names).unwrap().is_identity());
        assert!(parse_word("e", &names).unwrap().is_identity());
        assert!(parse_word("1", &names).unwrap().is_identity());
        assert_eq!(parse_word("g e g", &names).unwrap().letters(), &[(0, 2)]);
    }

    #[test]
    fn reserved_and_duplicate_names_rejected() {
        assert!(GroupPresentation::parse(&["e"], &[]).is_err());
        assert!(GroupPresentation::parse(&["g", "g"], &[]).is_err());
        assert!(GroupPresentation::parse(&["2fast"], &[]).is_err());
    }

    #[test]
    fn unknown_generator_cited_in_error() {
        let err = GroupPresentation::parse(&["g"], &["q^2"]).unwrap_err();
        assert!(err.to_string().contains("q"));
    }

    #[test]
    fn out_of_range_symbol_rejected() {
        let w = FreeWord::from_letters([(3, 1)]);
        assert!(GroupPresentation::new(vec!["g".into()], vec![w]).is_err());
    }

    #[test]
    fn word_format_round_trip() {
        let names = vec!["g".to_string(), "h".to_string()];
        let w = parse_word("g^2 h^-1 g", &names).unwrap();
        assert_eq!(format_word(&w, &names), "g^2 h^-1 g");
        assert_eq!(parse_word(&format_word(&w, &names), &names).unwrap(), w);
        assert_eq!(format_word(&FreeWord::identity(), &names), "e");
    }
}
