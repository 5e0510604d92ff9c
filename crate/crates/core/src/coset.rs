//! Coset enumeration over the trivial subgroup.
//!
//! HLT-style: relators are scanned and filled at each coset in definition
//! order, coincidences are processed eagerly through a union-find, and when
//! the definition budget runs out a deduction-only lookahead pass tries to
//! close the table without defining further cosets. The enumeration is
//! deterministic for fixed inputs.

use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;
use crate::table::FiniteGroupTable;
use crate::word::FreeWord;

const UNDEF: u32 = u32::MAX;

/// Largest group order for which a full multiplication table is materialised.
pub const MAX_TABLE_ORDER: usize = 2048;

#[derive(Debug)]
pub struct CosetResult {
    pub outcome: CosetOutcome,
    /// Total cosets defined, counting ones later merged away.
    pub cosets_defined: usize,
}

#[derive(Debug)]
pub enum CosetOutcome {
    Closed(FiniteGroupTable),
    Exceeded,
}

/// Like [`coset_enumerate`] but reports only the group order on closure,
/// without materialising the multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderResult {
    pub order: Option<usize>,
    pub cosets_defined: usize,
}

/// Enumerates cosets of the trivial subgroup in the presented group.
///
/// Returns the group's canonical [`FiniteGroupTable`] if the presentation
/// closes within `max_cosets` working cosets, or `Exceeded` otherwise.
pub fn coset_enumerate(pres: &GroupPresentation, max_cosets: usize) -> Result<CosetResult> {
    pres.validate()?;
    let mut enumeration = Enumerator::new(pres, max_cosets);
    let closed = enumeration.run();
    let cosets_defined = enumeration.total_defined;
    if !closed {
        return Ok(CosetResult { outcome: CosetOutcome::Exceeded, cosets_defined });
    }
    let table = enumeration.into_table()?;
    Ok(CosetResult { outcome: CosetOutcome::Closed(table), cosets_defined })
}

/// Order-only variant used by classification, where the quotient may close
/// at an order too large to tabulate.
pub fn coset_enumeration_order(pres: &GroupPresentation, max_cosets: usize) -> Result<OrderResult> {
    pres.validate()?;
    let mut enumeration = Enumerator::new(pres, max_cosets);
    let closed = enumeration.run();
    Ok(OrderResult {
        order: closed.then(|| enumeration.live_count()),
        cosets_defined: enumeration.total_defined,
    })
}

struct Enumerator {
    cols: usize,
    relators: Vec<Vec<usize>>,
    table: Vec<Vec<u32>>,
    /// Union-find parent; representatives satisfy `parent[c] == c`.
    parent: Vec<u32>,
    dead_queue: Vec<u32>,
    total_defined: usize,
    max_cosets: usize,
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

fn flatten_relator(w: &FreeWord) -> Vec<usize> {
    let mut cols = Vec::new();
    for &(s, e) in w.letters() {
        let col = if e > 0 { 2 * s } else { 2 * s + 1 };
        for _ in 0..e.unsigned_abs() {
            cols.push(col);
        }
    }
    cols
}

impl Enumerator {
    fn new(pres: &GroupPresentation, max_cosets: usize) -> Self {
        let cols = 2 * pres.generator_count();
        Enumerator {
            cols,
            relators: pres.relators().iter().map(flatten_relator).collect(),
            table: vec![vec![UNDEF; cols]],
            parent: vec![0],
            dead_queue: Vec::new(),
            total_defined: 1,
            max_cosets: max_cosets.max(1),
        }
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let p = self.parent[c as usize];
            self.parent[c as usize] = self.parent[p as usize];
            c = self.parent[c as usize];
        }
        c
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c as u32
    }

    fn live_count(&self) -> usize {
        (0..self.parent.len()).filter(|&c| self.is_live(c)).count()
    }

    /// Defines a new coset `γ` with `α·x = γ`; fails when the budget is spent.
    fn define(&mut self, alpha: u32, x: usize) -> Option<u32> {
        if self.total_defined >= self.max_cosets {
            return None;
        }
        let new = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(new);
        self.total_defined += 1;
        self.table[alpha as usize][x] = new;
        self.table[new as usize][inv_col(x)] = alpha;
        Some(new)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let ra = self.rep(a);
        let rb = self.rep(b);
        if ra == rb {
            return;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop as usize] = keep;
        self.dead_queue.push(drop);
    }

    /// Transfers the table rows of dead cosets, merging further as conflicts
    /// surface.
    fn process_coincidences(&mut self) {
        while let Some(gamma) = self.dead_queue.pop() {
            for x in 0..self.cols {
                let delta = self.table[gamma as usize][x];
                if delta == UNDEF {
                    continue;
                }
                self.table[gamma as usize][x] = UNDEF;
                if self.table[delta as usize][inv_col(x)] == gamma {
                    self.table[delta as usize][inv_col(x)] = UNDEF;
                }
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                let existing = self.table[mu as usize][x];
                if existing != UNDEF {
                    self.merge(nu, existing);
                } else {
                    let back = self.table[nu as usize][inv_col(x)];
                    if back != UNDEF {
                        self.merge(mu, back);
                    } else {
                        self.table[mu as usize][x] = nu;
                        self.table[nu as usize][inv_col(x)] = mu;
                    }
                }
            }
        }
    }

    /// Scans relator `w` at coset `alpha`, filling gaps with new cosets.
    /// Returns `false` if the definition budget was hit mid-scan.
    fn scan_and_fill(&mut self, alpha: u32, rel_idx: usize) -> bool {
        let w = &self.relators[rel_idx];
        let len = w.len();
        if len == 0 {
            return true;
        }
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = len; // backward has consumed letters j..len
        loop {
            while i < j {
                let next = self.table[f as usize][w[i]];
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.merge(f, b);
                    self.process_coincidences();
                }
                return true;
            }
            while j > i {
                let prev = self.table[b as usize][inv_col(w[j - 1])];
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if i == j {
                // Forward and backward meet at the same position.
                if f != b {
                    self.merge(f, b);
                    self.process_coincidences();
                }
                return true;
            }
            if j == i + 1 {
                // Exactly one undefined letter: a deduction closes the cycle.
                self.table[f as usize][w[i]] = b;
                self.table[b as usize][inv_col(w[i])] = f;
                return true;
            }
            match self.define(f, w[i]) {
                Some(next) => {
                    f = next;
                    i += 1;
                }
                None => return false,
            }
        }
    }

    /// Deduction-only scan; never defines. Returns whether anything changed.
    fn scan_no_fill(&mut self, alpha: u32, rel_idx: usize) -> bool {
        let w = &self.relators[rel_idx];
        let len = w.len();
        if len == 0 {
            return false;
        }
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = len;
        while i < j {
            let next = self.table[f as usize][w[i]];
            if next == UNDEF {
                break;
            }
            f = next;
            i += 1;
        }
        if i == j {
            if f != b {
                self.merge(f, b);
                self.process_coincidences();
                return true;
            }
            return false;
        }
        while j > i {
            let prev = self.table[b as usize][inv_col(w[j - 1])];
            if prev == UNDEF {
                break;
            }
            b = prev;
            j -= 1;
        }
        if i == j {
            if f != b {
                self.merge(f, b);
                self.process_coincidences();
                return true;
            }
            return false;
        }
        if j == i + 1 {
            self.table[f as usize][w[i]] = b;
            self.table[b as usize][inv_col(w[i])] = f;
            return true;
        }
        false
    }

    /// Main HLT loop. Returns whether the table closed.
    fn run(&mut self) -> bool {
        let mut alpha = 0usize;
        'outer: while alpha < self.table.len() {
            if !self.is_live(alpha) {
                alpha += 1;
                continue;
            }
            for r in 0..self.relators.len() {
                if !self.scan_and_fill(alpha as u32, r) {
                    return self.lookahead();
                }
                if !self.is_live(alpha) {
                    alpha += 1;
                    continue 'outer;
                }
            }
            for x in 0..self.cols {
                if self.table[alpha][x] == UNDEF && self.define(alpha as u32, x).is_none() {
                    return self.lookahead();
                }
            }
            alpha += 1;
        }
        true
    }

    /// Repeated deduction-only passes after budget exhaustion; may still
    /// close the table.
    fn lookahead(&mut self) -> bool {
        loop {
            let mut changed = false;
            for alpha in 0..self.table.len() {
                if !self.is_live(alpha) {
                    continue;
                }
                for r in 0..self.relators.len() {
                    if self.scan_no_fill(alpha as u32, r) {
                        changed = true;
                    }
                    if !self.is_live(alpha) {
                        break;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // Closed only if every live row is fully defined.
        for c in 0..self.table.len() {
            if self.is_live(c) && self.table[c].iter().any(|&x| x == UNDEF) {
                return false;
            }
        }
        true
    }

    /// Compacts live cosets and builds the canonical table.
    fn into_table(mut self) -> Result<FiniteGroupTable> {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.is_live(c)).collect();
        let order = live.len();
        if order > MAX_TABLE_ORDER {
            return Err(Error::Invalid(format!(
                "group of order {order} exceeds the table materialisation bound {MAX_TABLE_ORDER}"
            )));
        }
        let mut compact = vec![usize::MAX; self.table.len()];
        for (idx, &c) in live.iter().enumerate() {
            compact[c] = idx;
        }
        // Action of generator columns on compacted cosets.
        let cols = self.cols;
        let mut act = vec![vec![usize::MAX; cols]; order];
        for (idx, &c) in live.iter().enumerate() {
            for x in 0..cols {
                let d = self.table[c][x];
                let d = self.rep(d); // rows are complete, entries may be stale
                act[idx][x] = compact[d as usize];
            }
        }

        // Canonical BFS from the identity coset: generators first, then inverses.
        let ngens = cols / 2;
        let mut new_index = vec![usize::MAX; order];
        let mut by_new = Vec::with_capacity(order);
        let mut words: Vec<FreeWord> = Vec::with_capacity(order);
        new_index[0] = 0;
        by_new.push(0usize);
        words.push(FreeWord::identity());
        let mut head = 0usize;
        while head < by_new.len() {
            let u = by_new[head];
            let base = words[head].clone();
            for (col, letter) in bfs_neighbor_order(ngens) {
                let v = act[u][col];
                if new_index[v] == usize::MAX {
                    new_index[v] = by_new.len();
                    by_new.push(v);
                    let mut w = base.clone();
                    w.push(letter.0, letter.1);
                    words.push(w);
                }
            }
            head += 1;
        }
        if by_new.len() != order {
            return Err(Error::Internal("coset graph not connected".into()));
        }

        let act_canon: Vec<Vec<usize>> = (0..order)
            .map(|i| (0..cols).map(|x| new_index[act[by_new[i]][x]]).collect())
            .collect();

        // Multiplication: trace the canonical word of the right factor.
        let mut mult = vec![vec![0usize; order]; order];
        for a in 0..order {
            for b in 0..order {
                let mut c = a;
                for &(s, e) in words[b].letters() {
                    let col = if e > 0 { 2 * s } else { 2 * s + 1 };
                    for _ in 0..e.unsigned_abs() {
                        c = act_canon[c][col];
                    }
                }
                mult[a][b] = c;
            }
        }
        let generator_images: Vec<usize> = (0..ngens).map(|g| act_canon[0][2 * g]).collect();
        FiniteGroupTable::from_parts(mult, generator_images, words)
    }
}

fn bfs_neighbor_order(ngens: usize) -> impl Iterator<Item = (usize, (usize, i64))> {
    (0..ngens)
        .map(|g| (2 * g, (g, 1i64)))
        .chain((0..ngens).map(|g| (2 * g + 1, (g, -1i64))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(gens: &[&str], rels: &[&str], budget: usize) -> CosetResult {
        let pres = GroupPresentation::parse(gens, rels).unwrap();
        coset_enumerate(&pres, budget).unwrap()
    }

    fn closed_order(result: &CosetResult) -> usize {
        match &result.outcome {
            CosetOutcome::Closed(t) => t.order(),
            CosetOutcome::Exceeded => panic!("enumeration did not close"),
        }
    }

    #[test]
    fn cyclic_of_order_five() {
        let r = enumerate(&["g"], &["g^5"], 100);
        assert_eq!(closed_order(&r), 5);
    }

    #[test]
    fn killed_generator_gives_trivial_group() {
        let r = enumerate(&["x"], &["x"], 10);
        assert_eq!(closed_order(&r), 1);
    }

    #[test]
    fn dihedral_of_order_ten() {
        let r = enumerate(&["g", "h"], &["g^5", "h^2", "h g h g"], 100);
        let table = match r.outcome {
            CosetOutcome::Closed(t) => t,
            _ => panic!("did not close"),
        };
        assert_eq!(table.order(), 10);
        table.check_axioms().unwrap();
        // hgh = g^-1
        let g = table.generator_images()[0];
        let h = table.generator_images()[1];
        assert_eq!(table.mul(table.mul(h, g), h), table.inv(g));
    }

    #[test]
    fn free_group_exceeds_budget() {
        let pres = GroupPresentation::parse(&["a", "b"], &[]).unwrap();
        let r = coset_enumerate(&pres, 50).unwrap();
        assert!(matches!(r.outcome, CosetOutcome::Exceeded));
        assert!(r.cosets_defined <= 50);
    }

    #[test]
    fn empty_relator_is_inert() {
        let pres = GroupPresentation::new(
            vec!["g".into()],
            vec![FreeWord::identity(), FreeWord::letter(0, 4)],
        )
        .unwrap();
        let r = coset_enumerate(&pres, 100).unwrap();
        assert_eq!(closed_order(&r), 4);
    }

    #[test]
    fn zero_generator_presentation_is_trivial() {
        let pres = GroupPresentation::new(vec![], vec![]).unwrap();
        let r = coset_enumerate(&pres, 10).unwrap();
        assert_eq!(closed_order(&r), 1);
    }

    #[test]
    fn quaternion_group() {
        // ⟨i,j | i^4, i^2 j^-2, j i j^-1 i⟩ has order 8.
        let r = enumerate(&["i", "j"], &["i^4", "i^2 j^-2", "j i j^-1 i"], 200);
        assert_eq!(closed_order(&r), 8);
    }

    #[test]
    fn symmetric_group_s4_from_coxeter_presentation() {
        let r = enumerate(
            &["t1", "t2", "t3"],
            &["t1^2", "t2^2", "t3^2", "t1 t2 t1 t2 t1 t2", "t2 t3 t2 t3 t2 t3", "t1 t3 t1 t3"],
            2000,
        );
        let table = match r.outcome {
            CosetOutcome::Closed(t) => t,
            _ => panic!("did not close"),
        };
        assert_eq!(table.order(), 24);
        table.check_axioms().unwrap();
    }

    #[test]
    fn deterministic_across_runs() {
        let a = enumerate(&["g", "h"], &["g^5", "h^2", "h g h g"], 100);
        let b = enumerate(&["g", "h"], &["g^5", "h^2", "h g h g"], 100);
        match (a.outcome, b.outcome) {
            (CosetOutcome::Closed(x), CosetOutcome::Closed(y)) => assert_eq!(x, y),
            _ => panic!("did not close"),
        }
        assert_eq!(a.cosets_defined, b.cosets_defined);
    }

    #[test]
    fn order_only_variant_matches() {
        let pres = GroupPresentation::parse(&["g", "h"], &["g^5", "h^2", "h g h g"]).unwrap();
        let r = coset_enumeration_order(&pres, 100).unwrap();
        assert_eq!(r.order, Some(10));
        let free = GroupPresentation::parse(&["a", "b"], &[]).unwrap();
        assert_eq!(coset_enumeration_order(&free, 30).unwrap().order, None);
    }
}
