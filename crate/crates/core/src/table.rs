//! Finite groups realised as multiplication tables with a solved word problem.
//!
//! Tables use a canonical element order: element 0 is the identity and the
//! rest are numbered by breadth-first search from the identity in the Cayley
//! graph, visiting generators in declaration order and then their inverses.
//! This makes every table, and every coefficient vector indexed by it,
//! reproducible across runs.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;
use crate::word::FreeWord;

/// A finite group as a full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    ngens: usize,
    /// `mult[a][b]` is the index of the product `a·b`.
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    /// Images of the presentation generators.
    generator_images: Vec<usize>,
    /// Per element, a shortest word in the generators evaluating to it.
    canonical_words: Vec<FreeWord>,
}

pub const IDENTITY: usize = 0;

impl FiniteGroupTable {
    /// Builds the canonical table from a raw multiplication table.
    ///
    /// `raw_mult` may use any element numbering; `gen_images` must generate
    /// the whole group or construction fails.
    pub fn from_raw(
        raw_mult: Vec<Vec<usize>>,
        raw_identity: usize,
        raw_gen_images: Vec<usize>,
        ngens: usize,
    ) -> Result<Self> {
        let order = raw_mult.len();
        if order == 0 {
            return Err(Error::Invalid("empty multiplication table".into()));
        }
        if raw_gen_images.len() != ngens {
            return Err(Error::Invalid("generator image count mismatch".into()));
        }
        for row in &raw_mult {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(Error::Invalid("malformed multiplication table".into()));
            }
        }

        let raw_inv = invert_table(&raw_mult, raw_identity)?;

        // Canonical BFS order: generators in declaration order, then inverses.
        let mut neighbors: Vec<(usize, i64)> = Vec::with_capacity(2 * ngens);
        for g in 0..ngens {
            neighbors.push((g, 1));
        }
        for g in 0..ngens {
            neighbors.push((g, -1));
        }

        let mut new_index = vec![usize::MAX; order];
        let mut by_new: Vec<usize> = Vec::with_capacity(order);
        let mut words: Vec<FreeWord> = Vec::with_capacity(order);
        new_index[raw_identity] = 0;
        by_new.push(raw_identity);
        words.push(FreeWord::identity());
        let mut queue = VecDeque::from([raw_identity]);
        while let Some(u) = queue.pop_front() {
            let base_word = words[new_index[u]].clone();
            for &(g, e) in &neighbors {
                let img = raw_gen_images[g];
                let v = if e == 1 { raw_mult[u][img] } else { raw_mult[u][raw_inv[img]] };
                if new_index[v] == usize::MAX {
                    new_index[v] = by_new.len();
                    by_new.push(v);
                    let mut w = base_word.clone();
                    w.push(g, e);
                    words.push(w);
                    queue.push_back(v);
                }
            }
        }
        if by_new.len() != order {
            return Err(Error::Invalid(
                "generator images do not generate the whole group".into(),
            ));
        }

        let mult: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| new_index[raw_mult[by_new[a]][by_new[b]]]).collect())
            .collect();
        let inverse: Vec<usize> = (0..order).map(|a| new_index[raw_inv[by_new[a]]]).collect();
        let generator_images: Vec<usize> =
            raw_gen_images.iter().map(|&g| new_index[g]).collect();

        Ok(FiniteGroupTable {
            order,
            ngens,
            mult,
            inverse,
            generator_images,
            canonical_words: words,
        })
    }

    /// Assembles a table already in canonical order. Checks the identity and
    /// inverse laws; full associativity checking is left to [`Self::check_axioms`].
    pub(crate) fn from_parts(
        mult: Vec<Vec<usize>>,
        generator_images: Vec<usize>,
        canonical_words: Vec<FreeWord>,
    ) -> Result<Self> {
        let order = mult.len();
        if order == 0 || canonical_words.len() != order {
            return Err(Error::Internal("malformed table parts".into()));
        }
        let inverse = invert_table(&mult, IDENTITY)?;
        for a in 0..order {
            if mult[IDENTITY][a] != a || mult[a][IDENTITY] != a {
                return Err(Error::Internal(format!("identity law fails at {a}")));
            }
        }
        Ok(FiniteGroupTable {
            order,
            ngens: generator_images.len(),
            mult,
            inverse,
            generator_images,
            canonical_words,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generator_count(&self) -> usize {
        self.ngens
    }

    pub fn identity(&self) -> usize {
        IDENTITY
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn generator_images(&self) -> &[usize] {
        &self.generator_images
    }

    pub fn canonical_words(&self) -> &[FreeWord] {
        &self.canonical_words
    }

    pub fn canonical_word(&self, elt: usize) -> &FreeWord {
        &self.canonical_words[elt]
    }

    pub fn mult_rows(&self) -> &[Vec<usize>] {
        &self.mult
    }

    /// `a^e` by square-and-multiply; `e` may be negative.
    pub fn pow(&self, a: usize, e: i64) -> usize {
        let (mut base, mut e) = if e < 0 { (self.inverse[a], e.unsigned_abs()) } else { (a, e as u64) };
        let mut acc = IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mult[acc][base];
            }
            base = self.mult[base][base];
            e >>= 1;
        }
        acc
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != IDENTITY {
            x = self.mult[x][a];
            n += 1;
        }
        n
    }

    /// Evaluates a word under the generator images; the empty word gives the
    /// identity.
    pub fn word_to_element(&self, w: &FreeWord) -> Result<usize> {
        let mut acc = IDENTITY;
        for &(s, e) in w.letters() {
            if s >= self.ngens {
                return Err(Error::SymbolOutOfRange { index: s, count: self.ngens });
            }
            acc = self.mult[acc][self.pow(self.generator_images[s], e)];
        }
        Ok(acc)
    }

    /// The subgroup generated by `elts`, as a sorted list of element indices.
    pub fn generated_subgroup(&self, elts: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[IDENTITY] = true;
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(u) = queue.pop_front() {
            for &g in elts {
                let v = self.mult[u][g];
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    /// Exhaustively checks the group axioms. Intended for desk-scale tables.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mult[IDENTITY][a] != a || self.mult[a][IDENTITY] != a {
                return Err(Error::Internal(format!("identity law fails at {a}")));
            }
            let ai = self.inverse[a];
            if self.mult[a][ai] != IDENTITY || self.mult[ai][a] != IDENTITY {
                return Err(Error::Internal(format!("inverse law fails at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]] {
                        return Err(Error::Internal(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        for (i, w) in self.canonical_words.iter().enumerate() {
            if self.word_to_element(w)? != i {
                return Err(Error::Internal(format!("canonical word of {i} does not evaluate back")));
            }
        }
        Ok(())
    }
}

fn invert_table(mult: &[Vec<usize>], identity: usize) -> Result<Vec<usize>> {
    let order = mult.len();
    let mut inv = vec![usize::MAX; order];
    for a in 0..order {
        match (0..order).find(|&b| mult[a][b] == identity) {
            Some(b) => {
                if mult[b][a] != identity {
                    return Err(Error::Invalid(format!("element {a} has no two-sided inverse")));
                }
                inv[a] = b;
            }
            None => return Err(Error::Invalid(format!("element {a} has no inverse"))),
        }
    }
    Ok(inv)
}

/// A group presentation together with the enumerated table it presents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedGroup {
    pub presentation: GroupPresentation,
    pub table: Arc<FiniteGroupTable>,
}

impl PresentedGroup {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// Renders an element by its canonical word.
    pub fn format_element(&self, elt: usize) -> String {
        self.presentation.format_word(self.table.canonical_word(elt))
    }

    /// Resolves a word in this presentation's generators to an element.
    pub fn element_from_word_text(&self, text: &str) -> Result<usize> {
        let w = self.presentation.parse_word(text)?;
        self.table.word_to_element(&w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // C4 built by hand with a scrambled raw order, to exercise canonicalisation.
    fn c4_scrambled() -> FiniteGroupTable {
        // raw elements: 0 = g^2, 1 = e, 2 = g^3, 3 = g  (identity at raw index 1)
        let power = [2usize, 0, 3, 1]; // raw index -> exponent of g
        let of_power = [1usize, 3, 0, 2]; // exponent -> raw index
        let mut mult = vec![vec![0usize; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                mult[a][b] = of_power[(power[a] + power[b]) % 4];
            }
        }
        FiniteGroupTable::from_raw(mult, 1, vec![3], 1).unwrap()
    }

    #[test]
    fn canonicalisation_orders_by_bfs() {
        let t = c4_scrambled();
        assert_eq!(t.order(), 4);
        assert_eq!(t.identity(), 0);
        // BFS from e over (g, then g^-1): e, g, g^-1 = g^3, then g^2.
        assert_eq!(t.generator_images(), &[1]);
        assert_eq!(t.mul(1, 1), 3); // g·g = g^2 discovered last
        assert_eq!(t.inv(1), 2);
        t.check_axioms().unwrap();
    }

    #[test]
    fn word_evaluation_and_pow() {
        let t = c4_scrambled();
        let g = t.generator_images()[0];
        assert_eq!(t.pow(g, 4), 0);
        assert_eq!(t.pow(g, -1), t.inv(g));
        assert_eq!(t.word_to_element(&FreeWord::identity()).unwrap(), 0);
        let w = FreeWord::from_letters([(0, 3), (0, 2)]); // g^5 = g
        assert_eq!(t.word_to_element(&w).unwrap(), g);
        assert!(t.word_to_element(&FreeWord::letter(1, 1)).is_err());
    }

    #[test]
    fn generated_subgroup_of_square() {
        let t = c4_scrambled();
        let g = t.generator_images()[0];
        let sq = t.mul(g, g);
        assert_eq!(t.generated_subgroup(&[sq]).len(), 2);
        assert_eq!(t.generated_subgroup(&[g]).len(), 4);
    }

    #[test]
    fn non_generating_images_rejected() {
        // Klein four-group, images generating only a C2.
        let mut mult = vec![vec![0usize; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                mult[a][b] = a ^ b;
            }
        }
        assert!(FiniteGroupTable::from_raw(mult, 0, vec![1], 1).is_err());
    }
}
