use std::cmp::Ordering;

use super::monomial::degrevlex;

/// Term orders available to the Gröbner engine.
///
/// All three compare full exponent vectors laid out x-variables first.
/// `BlockEliminatingX` compares the x-block by degrevlex and breaks ties on
/// the parameter block by degrevlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    BlockEliminatingX { n_x: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::BlockEliminatingX { n_x } => {
                let n = n_x.min(a.len());
                degrevlex(&a[..n], &b[..n]).then_with(|| degrevlex(&a[n..], &b[n..]))
            }
        }
    }
}
