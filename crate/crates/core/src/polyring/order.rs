use std::cmp::Ordering;

use super::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GradedReverseLex,
    Lex,
    GradedLex,
    /// Block order: compare the total degree of the first `block` variables
    /// (by precedence) and break ties with graded reverse lex on everything.
    /// Eliminates the leading block.
    Elimination {
        block: usize,
    },
}

/// A term order together with a variable precedence: `precedence[0]` is the
/// most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self {
            kind,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GradedReverseLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    /// Panics if `precedence` is not a permutation of `0..n`.
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Self {
        let mut seen = vec![false; precedence.len()];
        for &i in &precedence {
            assert!(i < seen.len() && !seen[i], "precedence must be a permutation");
            seen[i] = true;
        }
        Self { kind, precedence }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    fn lex_cmp(&self, a: &[u64], b: &[u64]) -> Ordering {
        for &i in &self.precedence {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn revlex_tiebreak(&self, a: &[u64], b: &[u64]) -> Ordering {
        for &i in self.precedence.iter().rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ea, eb),
            OrderKind::GradedLex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(ea, eb)),
            OrderKind::GradedReverseLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.revlex_tiebreak(ea, eb)),
            OrderKind::Elimination { block } => {
                let bd = |e: &[u64]| -> u128 { self.precedence[..block].iter().map(|&i| e[i] as u128).sum() };
                bd(ea)
                    .cmp(&bd(eb))
                    .then_with(|| a.degree().cmp(&b.degree()))
                    .then_with(|| self.revlex_tiebreak(ea, eb))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex(3);
        // x*y > z^2 in grevlex (x > y > z)
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
        // x*z < y^2 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        let g = MonomialOrder::new(OrderKind::GradedLex, 3);
        assert_eq!(g.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_puts_block_first() {
        let o = MonomialOrder::new(OrderKind::Elimination { block: 1 }, 3);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    fn kinds() -> impl Strategy<Value = OrderKind> {
        prop_oneof![
            Just(OrderKind::GradedReverseLex),
            Just(OrderKind::Lex),
            Just(OrderKind::GradedLex),
            Just(OrderKind::Elimination { block: 1 }),
        ]
    }

    proptest! {
        #[test]
        fn multiplicative_and_total(kind in kinds(),
                                    a in prop::collection::vec(0u64..5, 3),
                                    b in prop::collection::vec(0u64..5, 3),
                                    w in prop::collection::vec(0u64..5, 3)) {
            let o = MonomialOrder::new(kind, 3);
            let (a, b, w) = (m(&a), m(&b), m(&w));
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a.mul_unchecked(&w), &b.mul_unchecked(&w)), ab);
            prop_assert_ne!(o.cmp(&a.mul_unchecked(&Monomial::var(3, 0)), &a), Ordering::Less);
        }
    }
}
