//! Named small groups, each built from a standard presentation by coset
//! enumeration: cyclic `C<n>`, dihedral `D<2m>` (the order is the number
//! after the `D`), symmetric `S<n>` for n ≤ 6, and alternating `A<n>` for
//! n ≤ 6.

use std::sync::Arc;

use crate::coset::{coset_enumerate, CosetOutcome};
use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;
use crate::table::PresentedGroup;

const BUILD_BUDGET: usize = 100_000;

/// A named group with its presentation and enumerated table.
#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: Arc<PresentedGroup>,
}

/// Builds a [`PresentedGroup`] by enumerating a presentation expected to
/// close at the given order.
pub fn build_presented_group(pres: GroupPresentation, expect_order: Option<usize>) -> Result<PresentedGroup> {
    match coset_enumerate(&pres, BUILD_BUDGET)?.outcome {
        CosetOutcome::Closed(table) => {
            if let Some(n) = expect_order {
                if table.order() != n {
                    return Err(Error::Internal(format!(
                        "expected order {n}, enumeration closed at {}",
                        table.order()
                    )));
                }
            }
            Ok(PresentedGroup { presentation: pres, table: Arc::new(table) })
        }
        CosetOutcome::Exceeded => Err(Error::Invalid(
            "presentation did not close within the build budget".into(),
        )),
    }
}

fn presentation_for(name: &str) -> Result<(GroupPresentation, usize)> {
    let (kind, num) = name.split_at(1);
    let n: usize = num
        .parse()
        .map_err(|_| Error::UnknownGroupName(name.to_string()))?;
    match kind {
        "C" if n >= 1 => {
            if n == 1 {
                Ok((GroupPresentation::parse(&[], &[])?, 1))
            } else {
                Ok((GroupPresentation::parse(&["g"], &[&format!("g^{n}")])?, n))
            }
        }
        "D" if n >= 2 && n % 2 == 0 => {
            let m = n / 2;
            Ok((
                GroupPresentation::parse(&["g", "h"], &[&format!("g^{m}"), "h^2", "h g h g"])?,
                n,
            ))
        }
        "S" if (2..=6).contains(&n) => {
            // Coxeter presentation on adjacent transpositions.
            let names: Vec<String> = (1..n).map(|i| format!("t{i}")).collect();
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let mut rels: Vec<String> = names.iter().map(|t| format!("{t}^2")).collect();
            for i in 0..n - 1 {
                for j in i + 1..n - 1 {
                    let (a, b) = (&names[i], &names[j]);
                    if j == i + 1 {
                        rels.push(format!("{a} {b} {a} {b} {a} {b}"));
                    } else {
                        rels.push(format!("{a} {b} {a} {b}"));
                    }
                }
            }
            let rel_refs: Vec<&str> = rels.iter().map(|s| s.as_str()).collect();
            Ok((GroupPresentation::parse(&name_refs, &rel_refs)?, factorial(n)))
        }
        "A" if (3..=5).contains(&n) => {
            if n == 3 {
                Ok((GroupPresentation::parse(&["b"], &["b^3"])?, 3))
            } else {
                // (2, 3, n-2)-type two-generator presentations.
                let ab: String = "a b ".repeat(n - 2).trim_end().to_string();
                Ok((
                    GroupPresentation::parse(&["a", "b"], &["a^2", "b^3", &ab])?,
                    factorial(n) / 2,
                ))
            }
        }
        _ => Err(Error::UnknownGroupName(name.to_string())),
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Resolves a group name like `C5`, `D10`, `S5`, or `A4`.
pub fn named_group(name: &str) -> Result<Arc<PresentedGroup>> {
    if name.is_empty() {
        return Err(Error::UnknownGroupName(name.to_string()));
    }
    let (pres, order) = presentation_for(name)?;
    Ok(Arc::new(build_presented_group(pres, Some(order))?))
}

/// The default witness-target list: cyclic groups up to order 12 and the
/// symmetric/alternating groups up to degree 5, ordered by descending group
/// order (ties by name) so the strongest witnesses are tried first.
pub fn default_witness_names() -> Vec<String> {
    let mut names: Vec<String> = (2..=12).map(|n| format!("C{n}")).collect();
    names.extend(["S3", "S4", "S5", "A4", "A5"].map(String::from));
    sort_witness_names(&mut names);
    names
}

fn group_order_of_name(name: &str) -> usize {
    presentation_for(name).map(|(_, n)| n).unwrap_or(0)
}

/// Sorts witness target names by descending group order, then by name.
pub fn sort_witness_names(names: &mut [String]) {
    names.sort_by(|a, b| {
        group_order_of_name(b)
            .cmp(&group_order_of_name(a))
            .then_with(|| a.cmp(b))
    });
}

/// Builds the tables for a list of target names.
pub fn build_targets(names: &[String]) -> Result<Vec<NamedGroup>> {
    names
        .iter()
        .map(|n| Ok(NamedGroup { name: n.clone(), group: named_group(n)? }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_of_named_groups() {
        for (name, order) in [
            ("C1", 1),
            ("C2", 2),
            ("C12", 12),
            ("D4", 4),
            ("D10", 10),
            ("S3", 6),
            ("S4", 24),
            ("S5", 120),
            ("A4", 12),
            ("A5", 60),
        ] {
            let g = named_group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
        }
    }

    #[test]
    fn s5_is_nonabelian_and_has_25_fifth_roots() {
        let s5 = named_group("S5").unwrap();
        let t = &s5.table;
        assert!((0..t.order()).any(|a| (0..t.order()).any(|b| t.mul(a, b) != t.mul(b, a))));
        let count = (0..t.order()).filter(|&a| t.pow(a, 5) == 0).count();
        assert_eq!(count, 25);
    }

    #[test]
    fn unknown_names_rejected() {
        for bad in ["", "Q8", "S9", "D7", "Cx", "A2", "A6"] {
            assert!(named_group(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn witness_list_is_order_sorted() {
        let names = default_witness_names();
        assert_eq!(names[0], "S5");
        assert_eq!(names[1], "A5");
        assert_eq!(names[2], "S4");
        let orders: Vec<usize> = names.iter().map(|n| group_order_of_name(n)).collect();
        assert!(orders.windows(2).all(|w| w[0] >= w[1]));
    }
}
