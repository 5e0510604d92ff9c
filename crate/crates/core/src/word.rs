//! Freely reduced words over an indexed generator alphabet.

/// A freely reduced word: a list of `(symbol, exponent)` letters in which no
/// two adjacent letters share a symbol and no exponent is zero. The empty
/// list is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    /// A single generator with the given exponent (`exp = 0` gives the identity).
    pub fn letter(symbol: usize, exp: i64) -> Self {
        if exp == 0 {
            Self::identity()
        } else {
            FreeWord { letters: vec![(symbol, exp)] }
        }
    }

    /// Builds a word from raw letters, merging and cancelling as needed.
    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut w = Self::identity();
        for (s, e) in letters {
            w.push(s, e);
        }
        w
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters after free reduction (not the sum of |exponents|).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter, keeping the word freely reduced.
    pub fn push(&mut self, symbol: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == symbol {
                last.1 += exp;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((symbol, exp));
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &(s, e) in &other.letters {
            w.push(s, e);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect(),
        }
    }

    /// Conjugate `self` by `g`: returns `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.concat(self).concat(&g.inverse())
    }

    /// Largest symbol index used, if any.
    pub fn max_symbol(&self) -> Option<usize> {
        self.letters.iter().map(|&(s, _)| s).max()
    }

    /// Sum of exponents per symbol, for abelianised images.
    pub fn exponent_sums(&self, nsymbols: usize) -> Vec<i64> {
        let mut sums = vec![0i64; nsymbols];
        for &(s, e) in &self.letters {
            sums[s] += e;
        }
        sums
    }

    /// Remaps every symbol index through `f`.
    pub fn map_symbols(&self, f: impl Fn(usize) -> usize) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().map(|&(s, e)| (f(s), e)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_merges_and_cancels() {
        let mut w = FreeWord::identity();
        w.push(0, 2);
        w.push(0, 3);
        assert_eq!(w.letters(), &[(0, 5)]);
        w.push(0, -5);
        assert!(w.is_identity());
    }

    #[test]
    fn concat_reduces_across_boundary() {
        let a = FreeWord::from_letters([(0, 1), (1, 2)]);
        let b = FreeWord::from_letters([(1, -2), (0, 1)]);
        assert_eq!(a.concat(&b).letters(), &[(0, 2)]);
    }

    #[test]
    fn inverse_round_trip() {
        let w = FreeWord::from_letters([(0, 1), (1, -3), (2, 2)]);
        assert!(w.concat(&w.inverse()).is_identity());
        assert!(w.inverse().concat(&w).is_identity());
    }

    #[test]
    fn zero_exponent_ignored() {
        let w = FreeWord::from_letters([(0, 0), (1, 1), (2, 0)]);
        assert_eq!(w.letters(), &[(1, 1)]);
    }

    #[test]
    fn conjugation_by_identity_is_noop() {
        let w = FreeWord::from_letters([(0, 1), (1, 1)]);
        assert_eq!(w.conjugate_by(&FreeWord::identity()), w);
    }
}
