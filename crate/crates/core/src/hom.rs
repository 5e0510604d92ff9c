//! Backtracking enumeration of homomorphisms from a presented group into a
//! finite target, with relator pruning.

use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;
use crate::table::FiniteGroupTable;
use crate::word::FreeWord;

/// Default cap on candidate tuples visited during a search.
pub const DEFAULT_HOM_CAP: u64 = 10_000_000;

struct Search<'a> {
    pres: &'a GroupPresentation,
    target: &'a FiniteGroupTable,
    /// Relators bucketed by their largest symbol; checked as soon as every
    /// symbol they mention has an image.
    by_max_symbol: Vec<Vec<&'a FreeWord>>,
    cap: u64,
    visited: u64,
}

impl<'a> Search<'a> {
    fn new(pres: &'a GroupPresentation, target: &'a FiniteGroupTable, cap: u64) -> Result<Self> {
        pres.validate()?;
        let n = pres.generator_count();
        let mut by_max_symbol: Vec<Vec<&FreeWord>> = vec![Vec::new(); n];
        for r in pres.relators() {
            if let Some(m) = r.max_symbol() {
                by_max_symbol[m].push(r);
            }
            // Relators with no letters are identically satisfied.
        }
        Ok(Search { pres, target, by_max_symbol, cap, visited: 0 })
    }

    fn evaluate(&self, w: &FreeWord, images: &[usize]) -> usize {
        let t = self.target;
        let mut acc = t.identity();
        for &(s, e) in w.letters() {
            acc = t.mul(acc, t.pow(images[s], e));
        }
        acc
    }

    /// Extends the partial assignment at position `k`; calls `found` on every
    /// complete homomorphism. `found` returns whether to keep searching.
    fn extend(&mut self, k: usize, images: &mut Vec<usize>, found: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        let n = self.pres.generator_count();
        if k == n {
            return Ok(found(images));
        }
        for img in 0..self.target.order() {
            self.visited += 1;
            if self.visited > self.cap {
                return Err(Error::SearchCapExceeded { cap: self.cap });
            }
            images.push(img);
            let ok = self.by_max_symbol[k]
                .iter()
                .all(|r| self.evaluate(r, images) == self.target.identity());
            if ok && !self.extend(k + 1, images, found)? {
                images.pop();
                return Ok(false);
            }
            images.pop();
        }
        Ok(true)
    }
}

/// All generator-image tuples defining homomorphisms into `target`, in
/// lexicographic order of image indices.
pub fn find_homomorphisms(
    pres: &GroupPresentation,
    target: &FiniteGroupTable,
    cap: u64,
) -> Result<Vec<Vec<usize>>> {
    let mut search = Search::new(pres, target, cap)?;
    let mut out = Vec::new();
    search.extend(0, &mut Vec::new(), &mut |images| {
        out.push(images.to_vec());
        true
    })?;
    Ok(out)
}

/// First homomorphism (in lexicographic order) whose image generates all of
/// `target`, if any.
pub fn exists_surjection(
    pres: &GroupPresentation,
    target: &FiniteGroupTable,
    cap: u64,
) -> Result<Option<Vec<usize>>> {
    let mut search = Search::new(pres, target, cap)?;
    let mut witness = None;
    let order = target.order();
    search.extend(0, &mut Vec::new(), &mut |images| {
        if target.generated_subgroup(images).len() == order {
            witness = Some(images.to_vec());
            false
        } else {
            true
        }
    })?;
    Ok(witness)
}
