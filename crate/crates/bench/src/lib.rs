//! Benchmark fixtures.

use supermod_core::models::{bertrand2, bertrand3, twentieths, Bertrand3Params};
use supermod_core::{
    abstract_best_response_game, ceil_abstraction, gc_from_subset, AbstractGame, Elem,
    GaloisConnection, Game, Rational,
};

pub fn three_firms() -> Game {
    bertrand3(&Bertrand3Params::default()).expect("default market")
}

/// Price abstractions of the three-firm market: `A_1` has a gap, `A_2` and
/// `A_3` are up-sets.
pub fn three_firm_abstractions(game: &Game) -> Vec<GaloisConnection> {
    let members: [Vec<i64>; 3] = [
        (35..=38).chain(42..=46).collect(),
        (36..=46).collect(),
        (38..=46).collect(),
    ];
    members
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let elems = m.iter().map(|&x| Elem::scalar(Rational::new(x, 20)));
            gc_from_subset(game.space(i), elems).expect("meet-closed with top")
        })
        .collect()
}

/// The two-firm market with opponents' prices rounded up to `digits`.
pub fn two_firms_rounded(digits: u32) -> AbstractGame {
    let g = bertrand2().expect("two-firm market");
    let gc = ceil_abstraction(digits, g.space(0)).expect("ceil abstraction");
    abstract_best_response_game(&g, &[gc.clone(), gc]).expect("abstract game")
}

/// A chain of `n` prices spaced by 1/20, for abstraction-law scans.
pub fn price_chain(n: i64) -> supermod_core::Lattice {
    twentieths(20, 19 + n).expect("grid")
}
