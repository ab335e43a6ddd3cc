//! Ready-made games: a 6×6 double-entry matrix game, a three-firm Bertrand
//! oligopoly on a price grid, and a two-firm, two-product Bertrand game with
//! closed-form best responses.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Game, Utility};
use crate::lattice::{Elem, ElemSet, Lattice};
use crate::rational::{q, Rational};

/// A finite game given by one payoff vector `(u_1(s), …, u_n(s))` per profile.
pub fn table_game(spaces: Vec<Lattice>, payoffs: BTreeMap<Elem, Vec<Rational>>) -> Result<Game> {
    let n = spaces.len();
    let profiles = Lattice::product(spaces.clone())?;
    for s in profiles.enumerate()? {
        match payoffs.get(&s) {
            None => return Err(Error::Contract(format!("no payoff given for profile {s}"))),
            Some(v) if v.len() != n => {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                })
            }
            Some(_) => {}
        }
    }
    if let Some(extra) = payoffs.keys().find(|s| !profiles.contains(s)) {
        return Err(Error::NotAMember(extra.clone()));
    }
    let table = Arc::new(payoffs);
    let utilities = (0..n)
        .map(|i| {
            let t = Arc::clone(&table);
            Utility::scalar(move |s| t[s][i].clone())
        })
        .collect();
    Game::new(spaces, utilities)
}

/// Two-player matrix game on `{1..rows} × {1..cols}`; `entries[r][c]` holds
/// `(u_1, u_2)` at profile `(r + 1, c + 1)`.
pub fn matrix_game(entries: &[Vec<(Rational, Rational)>]) -> Result<Game> {
    let rows = entries.len();
    let cols = entries.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 {
        return Err(Error::Contract("empty payoff matrix".into()));
    }
    let mut payoffs = BTreeMap::new();
    for (r, row) in entries.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: row.len(),
            });
        }
        for (c, (u1, u2)) in row.iter().enumerate() {
            payoffs.insert(
                Elem::ints(&[r as i64 + 1, c as i64 + 1]),
                vec![u1.clone(), u2.clone()],
            );
        }
    }
    table_game(
        vec![
            Lattice::int_chain(1, rows as i64)?,
            Lattice::int_chain(1, cols as i64)?,
        ],
        payoffs,
    )
}

const EXAMPLE1: [[(i64, i64); 6]; 6] = [
    [(6, 4), (5, 6), (5, 6), (4, 2), (3, 0), (2, -3)],
    [(6, 4), (6, 6), (6, 7), (6, 4), (5, 2), (4, -1)],
    [(2, 2), (2, 4), (2, 6), (4, 5), (4, 4), (3, 2)],
    [(3, 1), (3, 3), (3, 5), (5, 6), (5, 5), (4, 4)],
    [(0, 0), (0, 2), (3, 4), (6, 6), (7, 5), (6, 5)],
    [(-1, -3), (-1, -1), (2, 4), (5, 6), (6, 5), (6, 5)],
];

/// The 6×6 supermodular game with equilibria `(2,3)` and `(5,4)`. Row `r`
/// lists player 1's strategy `r + 1`.
pub fn example1() -> Game {
    let entries: Vec<Vec<(Rational, Rational)>> = EXAMPLE1
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(a, b)| (Rational::from_integer(a), Rational::from_integer(b)))
                .collect()
        })
        .collect();
    matrix_game(&entries).expect("well-formed matrix")
}

/// Demand `a + b·(sum of rival prices) + c·p − d·p²` and unit cost of a firm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Firm {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub cost: Rational,
}

impl Firm {
    pub fn new(a: i64, b: i64, c: i64, d: i64, cost: Rational) -> Self {
        Firm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
            cost,
        }
    }

    /// Profit at own price `p` against the sum of rival prices.
    pub fn profit(&self, p: &Rational, rivals: &Rational) -> Rational {
        let demand = &self.a + &self.b * rivals + &self.c * p - &self.d * p * p;
        demand * (p - &self.cost)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bertrand3Params {
    pub firms: [Firm; 3],
    /// Grid `{x/denom | lo ≤ x ≤ hi}` shared by all firms.
    pub grid_lo: i64,
    pub grid_hi: i64,
    pub grid_denom: i64,
    /// Round every payoff down to an integer.
    pub floor: bool,
}

impl Default for Bertrand3Params {
    fn default() -> Self {
        Bertrand3Params {
            firms: [
                Firm::new(370, 213, 60, 230, q(11, 10)),
                Firm::new(360, 233, 55, 220, q(6, 5)),
                Firm::new(375, 226, 50, 200, q(5, 4)),
            ],
            grid_lo: 20,
            grid_hi: 46,
            grid_denom: 20,
            floor: false,
        }
    }
}

impl Bertrand3Params {
    pub fn grid(&self) -> Result<Lattice> {
        Lattice::grid(
            q(self.grid_lo, self.grid_denom),
            q(self.grid_hi, self.grid_denom),
            q(1, self.grid_denom),
        )
    }
}

/// Three-firm price competition with payoff `u_i = d_i(s)·(s_i − c_i)`.
pub fn bertrand3(params: &Bertrand3Params) -> Result<Game> {
    let grid = params.grid()?;
    let utilities = (0..3)
        .map(|i| {
            let firm = params.firms[i].clone();
            let floor = params.floor;
            Utility::scalar(move |s| {
                let p = s.coord(i);
                let rivals = s
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, x)| x.clone())
                    .sum();
                let u = firm.profit(p, &rivals);
                if floor {
                    u.floor()
                } else {
                    u
                }
            })
        })
        .collect();
    Game::new(vec![grid.clone(), grid.clone(), grid], utilities)
}

/// Price grid `{x/20 | lo ≤ x ≤ hi}`.
pub fn twentieths(lo: i64, hi: i64) -> Result<Lattice> {
    Lattice::grid(q(lo, 20), q(hi, 20), q(1, 20))
}

fn sgn(x: Rational) -> Rational {
    x.signum()
}

/// The signs `(σ_1, σ_2, σ_3, σ_4)` entering the closed-form best responses:
/// `sgn(s21·s22 − 4)`, `sgn(s21 + s22 − 4)`, `sgn(s11 + s12 − 4)`, `sgn(s11·s12 − 4)`.
fn bertrand2_signs(s: &[Rational]) -> [Rational; 4] {
    let four = Rational::from_integer(4);
    [
        sgn(&s[2] * &s[3] - &four),
        sgn(&s[2] + &s[3] - &four),
        sgn(&s[0] + &s[1] - &four),
        sgn(&s[0] * &s[1] - &four),
    ]
}

/// `(f_11, f_12)(s21, s22)`.
pub fn bertrand2_firm1_response(s21: &Rational, s22: &Rational) -> (Rational, Rational) {
    let four = Rational::from_integer(4);
    let f11 = q(73, 42) + q(1, 42) * s21 + q(2, 21) * s22 + q(4, 21) * sgn(s21 * s22 - &four);
    let f12 = q(247, 140) + q(1, 21) * s21 + q(1, 14) * s22 + q(2, 21) * sgn(s21 + s22 - &four);
    (f11, f12)
}

/// `(f_21, f_22)(s11, s12)`.
pub fn bertrand2_firm2_response(s11: &Rational, s12: &Rational) -> (Rational, Rational) {
    let four = Rational::from_integer(4);
    let f21 = q(9, 5) + q(3, 40) * s11 + q(1, 20) * s12 + q(1, 20) * sgn(s11 + s12 - &four);
    let f22 = q(69, 40) + q(1, 10) * s11 + q(1, 40) * s12 + q(1, 40) * sgn(s11 * s12 - &four);
    (f21, f22)
}

/// Two firms, two products each, prices in `[3/2, 5/2]`. Profiles are
/// `(s11, s12, s21, s22)`. Payoffs are vectors with one component per
/// product; best responses come from the closed forms `f_ij`.
pub fn bertrand2() -> Result<Game> {
    let price = Lattice::interval(q(3, 2), q(5, 2))?;
    let space = Lattice::power(&price, 2)?;
    let four = || Rational::from_integer(4);
    let u1 = Utility::new(2, move |s| {
        let (s11, s12, s21, s22) = (s.coord(0), s.coord(1), s.coord(2), s.coord(3));
        let u11 =
            (Rational::from_integer(52) - s11 * 21 + s21 + s22 * 4 + sgn(s21 * s22 - four()) * 8)
                * (s11 - 1);
        let u12 = (Rational::from_integer(51) - s12 * 21 - sgn(s12 - q(11, 5))
            + s21 * 2
            + s22 * 3
            + sgn(s21 + s22 - four()) * 4)
            * (s12 - q(11, 10));
        vec![u11, u12]
    })
    .componentwise()
    .with_best_response(|s_minus| {
        let (f11, f12) = bertrand2_firm1_response(s_minus.coord(0), s_minus.coord(1));
        Ok(ElemSet::from([Elem::new(vec![f11, f12])]))
    });
    let u2 = Utility::new(2, move |s| {
        let (s11, s12, s21, s22) = (s.coord(0), s.coord(1), s.coord(2), s.coord(3));
        let u21 = (Rational::from_integer(50) - s21 * 20 - sgn(s21 - q(11, 5))
            + s11 * 3
            + s12 * 2
            + sgn(s11 + s12 - four()) * 2)
            * (s21 - q(11, 10));
        let u22 = (Rational::from_integer(49) - s22 * 20 + s11 * 4 + s12 + sgn(s11 * s12 - four()))
            * (s22 - 1);
        vec![u21, u22]
    })
    .componentwise()
    .with_best_response(|s_minus| {
        let (f21, f22) = bertrand2_firm2_response(s_minus.coord(0), s_minus.coord(1));
        Ok(ElemSet::from([Elem::new(vec![f21, f22])]))
    });
    Game::new(vec![space.clone(), space], vec![u1, u2])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedSolution {
    pub signs: [i8; 4],
    pub profile: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bertrand2Equilibria {
    pub lne: Elem,
    pub gne: Elem,
    pub solutions: Vec<SignedSolution>,
}

/// Exact equilibria of [`bertrand2`]: for every assignment of the four sign
/// terms, solve the linear system `s = f(s)` and keep the solutions whose signs
/// agree with the assignment and which lie in the strategy space.
pub fn bertrand2_exact_equilibria() -> Result<Bertrand2Equilibria> {
    let lo = q(3, 2);
    let hi = q(5, 2);
    let mut solutions = Vec::new();
    for code in 0..81 {
        let signs: [i8; 4] = std::array::from_fn(|k| ((code / 3usize.pow(k as u32)) % 3) as i8 - 1);
        let sig: Vec<Rational> = signs
            .iter()
            .map(|&v| Rational::from_integer(v as i64))
            .collect();
        // s − M s = c
        let z = Rational::zero;
        let m: [[Rational; 4]; 4] = [
            [z(), z(), q(1, 42), q(2, 21)],
            [z(), z(), q(1, 21), q(1, 14)],
            [q(3, 40), q(1, 20), z(), z()],
            [q(1, 10), q(1, 40), z(), z()],
        ];
        let c = [
            q(73, 42) + q(4, 21) * &sig[0],
            q(247, 140) + q(2, 21) * &sig[1],
            q(9, 5) + q(1, 20) * &sig[2],
            q(69, 40) + q(1, 40) * &sig[3],
        ];
        let mut a: Vec<Vec<Rational>> = (0..4)
            .map(|r| {
                let mut row: Vec<Rational> = (0..4)
                    .map(|k| {
                        let id = if r == k {
                            Rational::one()
                        } else {
                            Rational::zero()
                        };
                        id - &m[r][k]
                    })
                    .collect();
                row.push(c[r].clone());
                row
            })
            .collect();
        let Some(s) = solve_augmented(&mut a) else {
            continue;
        };
        let inside = s.iter().all(|x| *x >= lo && *x <= hi);
        let consistent = bertrand2_signs(&s)
            .iter()
            .zip(&sig)
            .all(|(actual, assumed)| actual == assumed);
        if inside && consistent {
            solutions.push(SignedSolution {
                signs,
                profile: Elem::new(s),
            });
        }
    }
    if solutions.is_empty() {
        return Err(Error::NoSolution(
            "no sign assignment yields a consistent fixed point".into(),
        ));
    }
    let mut lne = solutions[0].profile.clone();
    let mut gne = lne.clone();
    for sol in &solutions[1..] {
        lne = lne.componentwise_min(&sol.profile);
        gne = gne.componentwise_max(&sol.profile);
    }
    Ok(Bertrand2Equilibria {
        lne,
        gne,
        solutions,
    })
}

/// Gauss-Jordan elimination on an `n × (n+1)` augmented matrix; `None` when
/// singular.
fn solve_augmented(a: &mut [Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for k in col..=n {
            a[col][k] = &a[col][k] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for k in col..=n {
                    let delta = &factor * &a[col][k];
                    a[r][k] -= &delta;
                }
            }
        }
    }
    Some(a.iter().map(|row| row[n].clone()).collect())
}
