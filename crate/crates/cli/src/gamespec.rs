//! Line-oriented text formats for games and abstractions.
//!
//! Game files:
//!
//! ```text
//! # comments run to the end of the line
//! game finite-matrix
//! players 2
//! strategies 1 int 1 6
//! strategies 2 grid 1 2 1/4
//! matrix              # two players: one row per strategy of player 1,
//! 0,0 1,1 ...         # ascending; one "u1,u2" entry per strategy of player 2
//! end
//! ```
//!
//! A `table` block (`s1 s2 ... : u1 u2 ...`, one line per profile) replaces
//! `matrix` for any number of players. The models `bertrand3` (options
//! `grid LO HI DENOM`, `firm I A B C D COST`, `floor yes|no`) and `bertrand2`
//! take no payoff block.
//!
//! Abstraction files hold `playerI: v1 v2 ...` (members of `A_i`),
//! `playerI: ceil N`, `ceil N` (all players) or `product: (a,b)(c,d)...`
//! (members of a relational abstraction of the profile space).

use std::collections::BTreeMap;

use supermod_core::models::{bertrand2, bertrand3, table_game, Bertrand3Params, Firm};
use supermod_core::{
    ceil_abstraction, gc_from_subset, Elem, Error, GaloisConnection, Game, Lattice, Rational,
    Result,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GameKind {
    FiniteMatrix,
    Bertrand3,
    Bertrand2,
}

#[derive(Debug, Clone)]
pub struct ParsedGame {
    pub kind: GameKind,
    pub game: Game,
}

/// A line with its 1-based number, comments stripped.
struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, column: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.no, column, msg)
    }

    /// Whitespace-separated words with their 1-based columns. Parenthesised
    /// groups are single words.
    fn words(&self) -> Result<Vec<(usize, &str)>> {
        let bytes = self.text.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            if bytes[i] == b'(' {
                while i < bytes.len() && bytes[i] != b')' {
                    i += 1;
                }
                if i == bytes.len() {
                    return Err(self.err(start + 1, "unclosed parenthesis"));
                }
                i += 1;
            } else {
                while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'(' {
                    i += 1;
                }
            }
            out.push((start + 1, &self.text[start..i]));
        }
        Ok(out)
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(k, raw)| Line {
            no: k + 1,
            text: raw.split('#').next().unwrap_or("").trim_end(),
        })
        .filter(|l| !l.text.trim().is_empty())
        .collect()
}

fn rational(line: &Line, col: usize, word: &str) -> Result<Rational> {
    word.parse()
        .map_err(|_| line.err(col, format!("not a rational number: {word:?}")))
}

fn integer(line: &Line, col: usize, word: &str) -> Result<i64> {
    word.parse()
        .map_err(|_| line.err(col, format!("not an integer: {word:?}")))
}

/// `3`, `1/2`, `0.25` or a tuple `(a,b,...)`.
fn element(line: &Line, col: usize, word: &str) -> Result<Elem> {
    match word.strip_prefix('(').and_then(|w| w.strip_suffix(')')) {
        Some(inner) => inner
            .split(',')
            .map(|p| rational(line, col, p.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Elem::new),
        None => Ok(Elem::scalar(rational(line, col, word)?)),
    }
}

fn expect_len(line: &Line, words: &[(usize, &str)], n: usize, usage: &str) -> Result<()> {
    if words.len() != n {
        return Err(line.err(1, format!("expected `{usage}`")));
    }
    Ok(())
}

fn player_index(line: &Line, col: usize, word: &str, players: usize) -> Result<usize> {
    let p = integer(line, col, word)?;
    if p < 1 || p as usize > players {
        return Err(line.err(col, format!("player {p} out of range 1..{players}")));
    }
    Ok(p as usize - 1)
}

enum Block {
    Matrix,
    Table,
}

pub fn parse_game(text: &str) -> Result<ParsedGame> {
    let lines = lines(text);
    let mut iter = lines.iter().peekable();
    let first = iter
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty game file"))?;
    let words = first.words()?;
    if words.len() != 2 || words[0].1 != "game" {
        return Err(first.err(1, "expected `game <finite-matrix|bertrand3|bertrand2>`"));
    }
    let kind = match words[1].1 {
        "finite-matrix" => GameKind::FiniteMatrix,
        "bertrand3" => GameKind::Bertrand3,
        "bertrand2" => GameKind::Bertrand2,
        other => return Err(first.err(words[1].0, format!("unknown game kind {other:?}"))),
    };

    let mut players = 2usize;
    let mut spaces: BTreeMap<usize, Lattice> = BTreeMap::new();
    let mut payoffs: Option<BTreeMap<Elem, Vec<Rational>>> = None;
    let mut params = Bertrand3Params::default();

    while let Some(line) = iter.next() {
        let words = line.words()?;
        let (col, key) = words[0];
        match (kind, key) {
            (GameKind::FiniteMatrix, "players") => {
                expect_len(line, &words, 2, "players N")?;
                let n = integer(line, words[1].0, words[1].1)?;
                if n < 1 || !spaces.is_empty() {
                    return Err(
                        line.err(col, "`players` must be positive and precede `strategies`")
                    );
                }
                players = n as usize;
            }
            (GameKind::FiniteMatrix, "strategies") => {
                let p = words.get(1).ok_or_else(|| {
                    line.err(
                        col,
                        "expected `strategies P int LO HI` or `strategies P grid LO HI STEP`",
                    )
                })?;
                let p = player_index(line, p.0, p.1, players)?;
                let lattice = match words.get(2).map(|w| w.1) {
                    Some("int") => {
                        expect_len(line, &words, 5, "strategies P int LO HI")?;
                        Lattice::int_chain(
                            integer(line, words[3].0, words[3].1)?,
                            integer(line, words[4].0, words[4].1)?,
                        )
                    }
                    Some("grid") => {
                        expect_len(line, &words, 6, "strategies P grid LO HI STEP")?;
                        Lattice::grid(
                            rational(line, words[3].0, words[3].1)?,
                            rational(line, words[4].0, words[4].1)?,
                            rational(line, words[5].0, words[5].1)?,
                        )
                    }
                    _ => return Err(line.err(col, "expected `int` or `grid` strategy declaration")),
                }
                .map_err(|e| line.err(col, e.to_string()))?;
                if spaces.insert(p, lattice).is_some() {
                    return Err(line.err(
                        col,
                        format!("strategies of player {} declared twice", p + 1),
                    ));
                }
            }
            (GameKind::FiniteMatrix, "matrix" | "table") => {
                expect_len(line, &words, 1, key)?;
                if payoffs.is_some() {
                    return Err(line.err(col, "more than one payoff block"));
                }
                let space_list = declared_spaces(line, &spaces, players)?;
                let block = if key == "matrix" {
                    Block::Matrix
                } else {
                    Block::Table
                };
                let mut body = Vec::new();
                let end = loop {
                    match iter.next() {
                        None => {
                            return Err(
                                line.err(col, format!("`{key}` block is not closed by `end`"))
                            )
                        }
                        Some(l) if l.text.trim() == "end" => break l,
                        Some(l) => body.push(l),
                    }
                };
                if body.is_empty() {
                    return Err(end.err(1, format!("empty `{key}` block")));
                }
                payoffs = Some(match block {
                    Block::Matrix => matrix_block(line, end, &body, &space_list)?,
                    Block::Table => table_block(end, &body, &space_list)?,
                });
            }
            (GameKind::Bertrand3, "grid") => {
                expect_len(line, &words, 4, "grid LO HI DENOM")?;
                params.grid_lo = integer(line, words[1].0, words[1].1)?;
                params.grid_hi = integer(line, words[2].0, words[2].1)?;
                params.grid_denom = integer(line, words[3].0, words[3].1)?;
            }
            (GameKind::Bertrand3, "firm") => {
                expect_len(line, &words, 7, "firm I A B C D COST")?;
                let i = player_index(line, words[1].0, words[1].1, 3)?;
                let mut coef = [0i64; 4];
                for (k, c) in coef.iter_mut().enumerate() {
                    *c = integer(line, words[k + 2].0, words[k + 2].1)?;
                }
                let cost = rational(line, words[6].0, words[6].1)?;
                params.firms[i] = Firm::new(coef[0], coef[1], coef[2], coef[3], cost);
            }
            (GameKind::Bertrand3, "floor") => {
                expect_len(line, &words, 2, "floor yes|no")?;
                params.floor = match words[1].1 {
                    "yes" => true,
                    "no" => false,
                    other => {
                        return Err(
                            line.err(words[1].0, format!("expected yes or no, got {other:?}"))
                        )
                    }
                };
            }
            _ => {
                return Err(line.err(
                    col,
                    format!("unexpected {key:?} in a {} file", kind_name(kind)),
                ))
            }
        }
    }

    let game = match kind {
        GameKind::FiniteMatrix => {
            let last = lines.last().map_or(1, |l| l.no);
            let table = payoffs
                .ok_or_else(|| Error::parse(last, 1, "missing `matrix` or `table` block"))?;
            let end = Line { no: last, text: "" };
            table_game(declared_spaces(&end, &spaces, players)?, table)?
        }
        GameKind::Bertrand3 => bertrand3(&params)?,
        GameKind::Bertrand2 => bertrand2()?,
    };
    Ok(ParsedGame { kind, game })
}

fn kind_name(kind: GameKind) -> &'static str {
    match kind {
        GameKind::FiniteMatrix => "finite-matrix",
        GameKind::Bertrand3 => "bertrand3",
        GameKind::Bertrand2 => "bertrand2",
    }
}

fn declared_spaces(
    line: &Line,
    spaces: &BTreeMap<usize, Lattice>,
    players: usize,
) -> Result<Vec<Lattice>> {
    (0..players)
        .map(|p| {
            spaces
                .get(&p)
                .cloned()
                .ok_or_else(|| line.err(1, format!("no strategies declared for player {}", p + 1)))
        })
        .collect()
}

fn matrix_block(
    header: &Line,
    end: &Line,
    body: &[&Line],
    spaces: &[Lattice],
) -> Result<BTreeMap<Elem, Vec<Rational>>> {
    if spaces.len() != 2 {
        return Err(header.err(1, "a `matrix` block needs exactly 2 players; use `table`"));
    }
    let rows = spaces[0].enumerate()?;
    let cols = spaces[1].enumerate()?;
    if body.len() != rows.len() {
        let at = body.get(rows.len()).copied().unwrap_or(end);
        return Err(at.err(
            1,
            format!("expected {} matrix rows, found {}", rows.len(), body.len()),
        ));
    }
    let mut table = BTreeMap::new();
    for (line, x) in body.iter().zip(&rows) {
        let words = line.words()?;
        if words.len() != cols.len() {
            return Err(line.err(
                1,
                format!("expected {} entries, found {}", cols.len(), words.len()),
            ));
        }
        for ((col, word), y) in words.iter().zip(&cols) {
            let parts: Vec<&str> = word.split(',').collect();
            if parts.len() != 2 {
                return Err(line.err(*col, format!("expected an entry `u1,u2`, found {word:?}")));
            }
            let u = vec![
                rational(line, *col, parts[0])?,
                rational(line, *col, parts[1])?,
            ];
            table.insert(Elem::concat(&[x.clone(), y.clone()]), u);
        }
    }
    Ok(table)
}

fn table_block(
    end: &Line,
    body: &[&Line],
    spaces: &[Lattice],
) -> Result<BTreeMap<Elem, Vec<Rational>>> {
    let n = spaces.len();
    let mut table = BTreeMap::new();
    for line in body {
        let words = line.words()?;
        let sep = words
            .iter()
            .position(|w| w.1 == ":")
            .ok_or_else(|| line.err(1, "expected `s1 ... sn : u1 ... un`"))?;
        if sep != n || words.len() != 2 * n + 1 {
            return Err(line.err(1, format!("expected {n} strategies, `:` and {n} payoffs")));
        }
        let mut pieces = Vec::with_capacity(n);
        for (k, (col, word)) in words[..n].iter().enumerate() {
            let x = element(line, *col, word)?;
            if !spaces[k].contains(&x) {
                return Err(line.err(*col, format!("{x} is not a strategy of player {}", k + 1)));
            }
            pieces.push(x);
        }
        let u = words[n + 1..]
            .iter()
            .map(|(col, w)| rational(line, *col, w))
            .collect::<Result<Vec<_>>>()?;
        if table.insert(Elem::concat(&pieces), u).is_some() {
            return Err(line.err(1, "profile listed twice"));
        }
    }
    let expected: usize = spaces.iter().map(|s| s.size().unwrap_or(0)).product();
    if table.len() != expected {
        return Err(end.err(
            1,
            format!("table lists {} of {} profiles", table.len(), expected),
        ));
    }
    Ok(table)
}

/// A scalar chain as a `strategies` declaration.
fn strategy_decl(space: &Lattice) -> Result<String> {
    let points = space.enumerate()?;
    if space.arity() != 1 || !space.is_chain() || space.is_subset() {
        return Err(Error::Unsupported(format!(
            "cannot write strategy space {space}"
        )));
    }
    let lo = points[0].coord(0).clone();
    let hi = points[points.len() - 1].coord(0).clone();
    let step = if points.len() > 1 {
        points[1].coord(0).clone() - lo.clone()
    } else {
        Rational::one()
    };
    if lo.is_integer() && step == Rational::one() {
        Ok(format!("int {lo} {hi}"))
    } else {
        Ok(format!("grid {lo} {hi} {step}"))
    }
}

/// Writes a finite game with scalar chain strategy spaces and scalar payoffs
/// as a `finite-matrix` file.
pub fn serialize_game(game: &Game) -> Result<String> {
    let n = game.num_players();
    let mut out = format!("game finite-matrix\nplayers {n}\n");
    for i in 0..n {
        out += &format!("strategies {} {}\n", i + 1, strategy_decl(game.space(i))?);
    }
    let payoff = |s: &Elem| -> Result<Vec<Rational>> {
        (0..n)
            .map(|i| {
                let u = game.payoff(i, s)?;
                if u.len() != 1 {
                    return Err(Error::Unsupported(
                        "vector payoffs cannot be written".into(),
                    ));
                }
                Ok(u.into_iter().next().unwrap())
            })
            .collect()
    };
    if n == 2 {
        out += "matrix\n";
        let cols = game.space(1).enumerate()?;
        for x in game.space(0).enumerate()? {
            let entries = cols
                .iter()
                .map(|y| {
                    let u = payoff(&Elem::concat(&[x.clone(), y.clone()]))?;
                    Ok(format!("{},{}", u[0], u[1]))
                })
                .collect::<Result<Vec<_>>>()?;
            out += &entries.join(" ");
            out.push('\n');
        }
    } else {
        out += "table\n";
        for s in game.profile_space().enumerate()? {
            let coords: Vec<String> = s.coords().iter().map(ToString::to_string).collect();
            let u: Vec<String> = payoff(&s)?.iter().map(ToString::to_string).collect();
            out += &format!("{} : {}\n", coords.join(" "), u.join(" "));
        }
    }
    out += "end\n";
    Ok(out)
}

#[derive(Debug, Clone)]
pub enum AbstractionSpec {
    /// One connection per player; players without a line get the identity.
    PerPlayer(Vec<GaloisConnection>),
    /// A connection on the whole profile space.
    Product(GaloisConnection),
}

pub fn parse_abstraction(text: &str, game: &Game) -> Result<AbstractionSpec> {
    let n = game.num_players();
    let mut per_player: Vec<Option<GaloisConnection>> = vec![None; n];
    let mut product = None;
    for line in lines(text) {
        let words = line.words()?;
        let (col, key) = words[0];
        if key == "ceil" {
            expect_len(&line, &words, 2, "ceil N")?;
            let digits = ceil_digits_arg(&line, words[1])?;
            for (i, slot) in per_player.iter_mut().enumerate() {
                if slot.is_some() {
                    return Err(line.err(col, format!("player {} abstracted twice", i + 1)));
                }
                *slot = Some(
                    ceil_abstraction(digits, game.space(i))
                        .map_err(|e| line.err(col, e.to_string()))?,
                );
            }
            continue;
        }
        let (head, rest_col, rest): (&str, usize, Vec<(usize, &str)>) = match key.strip_suffix(':')
        {
            Some(head) => (head, col, words[1..].to_vec()),
            None => {
                // `product:(2,2)...` has no space after the colon
                let Some(pos) = key.find(':') else {
                    return Err(line.err(
                        col,
                        format!("expected `playerI:`, `product:` or `ceil N`, found {key:?}"),
                    ));
                };
                let mut rest = vec![(col + pos + 1, &key[pos + 1..])];
                rest.extend_from_slice(&words[1..]);
                (&key[..pos], col, rest)
            }
        };
        if rest.is_empty() {
            return Err(line.err(col, "no members listed"));
        }
        if head == "product" {
            if product.is_some() {
                return Err(line.err(col, "more than one `product` line"));
            }
            let members = rest
                .iter()
                .map(|(c, w)| element(&line, *c, w))
                .collect::<Result<Vec<_>>>()?;
            let gc = gc_from_subset(game.profile_space(), members)
                .map_err(|e| line.err(rest_col, e.to_string()))?;
            product = Some(gc);
            continue;
        }
        let Some(idx) = head.strip_prefix("player") else {
            return Err(line.err(col, format!("unknown directive {head:?}")));
        };
        let i = player_index(&line, col, idx, n)?;
        if per_player[i].is_some() {
            return Err(line.err(col, format!("player {} abstracted twice", i + 1)));
        }
        let gc = if rest[0].1 == "ceil" {
            expect_len(&line, &rest, 2, "playerI: ceil N")?;
            ceil_abstraction(ceil_digits_arg(&line, rest[1])?, game.space(i))
        } else {
            let members = rest
                .iter()
                .map(|(c, w)| element(&line, *c, w))
                .collect::<Result<Vec<_>>>()?;
            gc_from_subset(game.space(i), members)
        }
        .map_err(|e| line.err(rest_col, e.to_string()))?;
        per_player[i] = Some(gc);
    }
    match product {
        Some(gc) if per_player.iter().all(Option::is_none) => Ok(AbstractionSpec::Product(gc)),
        Some(_) => Err(Error::parse(
            1,
            1,
            "`product` cannot be combined with per-player lines",
        )),
        None => Ok(AbstractionSpec::PerPlayer(
            per_player
                .into_iter()
                .enumerate()
                .map(|(i, gc)| gc.unwrap_or_else(|| GaloisConnection::identity(game.space(i))))
                .collect(),
        )),
    }
}

fn ceil_digits_arg(line: &Line, (col, word): (usize, &str)) -> Result<u32> {
    word.parse()
        .map_err(|_| line.err(col, format!("expected a digit count, found {word:?}")))
}

/// A correspondence table over the profile space of `domain`: lines
/// `a -> b1 b2 ...`, one per element, with `{}` for an empty image.
pub fn parse_correspondence(
    text: &str,
    domain: &Lattice,
    codomain: &Lattice,
) -> Result<supermod_core::Correspondence> {
    let mut table = BTreeMap::new();
    for line in lines(text) {
        let words = line.words()?;
        let arrow = words
            .iter()
            .position(|w| w.1 == "->")
            .ok_or_else(|| line.err(1, "expected `a -> b1 b2 ...`"))?;
        if arrow != 1 {
            return Err(line.err(1, "expected a single element before `->`"));
        }
        let a = element(&line, words[0].0, words[0].1)?;
        let image = words[2..]
            .iter()
            .filter(|w| w.1 != "{}")
            .map(|(c, w)| element(&line, *c, w))
            .collect::<Result<_>>()?;
        if table.insert(a, image).is_some() {
            return Err(line.err(1, "element listed twice"));
        }
    }
    supermod_core::Correspondence::from_table(domain.clone(), codomain.clone(), table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use supermod_core::models::example1;
    use supermod_core::Elem;

    pub const EXAMPLE1: &str = include_str!("../tests/data/example1.game");

    #[test]
    fn example1_file_matches_the_builtin() {
        let parsed = parse_game(EXAMPLE1).unwrap();
        assert_eq!(parsed.kind, GameKind::FiniteMatrix);
        let g = parsed.game;
        let s = Elem::ints(&[5, 5]);
        assert_eq!(g.payoff(0, &s).unwrap(), vec![Rational::from_integer(7)]);
        assert_eq!(g.payoff(1, &s).unwrap(), vec![Rational::from_integer(5)]);
        let builtin = example1();
        for s in g.profile_space().enumerate().unwrap() {
            for i in 0..2 {
                assert_eq!(g.payoff(i, &s).unwrap(), builtin.payoff(i, &s).unwrap());
            }
        }
    }

    #[test]
    fn round_trip() {
        let g = parse_game(EXAMPLE1).unwrap().game;
        let again = parse_game(&serialize_game(&g).unwrap()).unwrap().game;
        for s in g.profile_space().enumerate().unwrap() {
            for i in 0..2 {
                assert_eq!(g.payoff(i, &s).unwrap(), again.payoff(i, &s).unwrap());
            }
        }
        let three = "game finite-matrix\nplayers 3\nstrategies 1 int 0 1\nstrategies 2 grid 1/2 1 1/2\nstrategies 3 int 2 2\ntable\n\
            0 1/2 2 : 1 2 3\n0 1 2 : 0 0 0\n1 1/2 2 : 1/3 2 -1\n1 1 2 : 4 0.5 0\nend\n";
        let g = parse_game(three).unwrap().game;
        let text = serialize_game(&g).unwrap();
        let again = parse_game(&text).unwrap().game;
        for s in g.profile_space().enumerate().unwrap() {
            for i in 0..3 {
                assert_eq!(g.payoff(i, &s).unwrap(), again.payoff(i, &s).unwrap());
            }
        }
    }

    #[test]
    fn models_by_header() {
        let g = parse_game("game bertrand3\n").unwrap().game;
        assert_eq!(g.space(0).size(), Some(27));
        let floor = parse_game("game bertrand3\ngrid 26 42 20\nfloor yes\n")
            .unwrap()
            .game;
        assert_eq!(floor.space(0).size(), Some(17));
        assert_eq!(
            parse_game("game bertrand2").unwrap().kind,
            GameKind::Bertrand2
        );
    }

    fn parse_err(text: &str) -> (usize, usize) {
        match parse_game(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_games() {
        let head = "game finite-matrix\nstrategies 1 int 1 2\nstrategies 2 int 1 2\n";
        assert_eq!(parse_err(&format!("{head}matrix\nend\n")), (5, 1));
        assert_eq!(
            parse_err(&format!("{head}matrix\n1,1 2,x\n0,0 0,0\nend\n")).0,
            5
        );
        assert_eq!(parse_err(&format!("{head}matrix\n1,1 2,2\nend\n")).0, 6);
        assert_eq!(
            parse_err(&format!("{head}matrix\n1,1\n0,0 0,0\nend\n")).0,
            5
        );
        assert_eq!(parse_err(&format!("{head}matrix\n1,1 0,0\n")).0, 4);
        assert_eq!(parse_err(&format!("{head}table\n1 1 : 0 0\nend\n")).0, 6);
        assert_eq!(parse_err("game poker\n"), (1, 6));
        assert_eq!(parse_err("game bertrand2\nfloor yes\n"), (2, 1));
        assert_eq!(parse_err(""), (1, 1));
    }

    #[test]
    fn abstractions() {
        let g = example1();
        let AbstractionSpec::PerPlayer(gcs) =
            parse_abstraction("player1: 3 5 6\nplayer2: 2 6\n", &g).unwrap()
        else {
            panic!("expected per-player abstractions");
        };
        assert_eq!(
            gcs[0].abstract_lattice().enumerate().unwrap(),
            vec![Elem::int(3), Elem::int(5), Elem::int(6)]
        );
        let AbstractionSpec::PerPlayer(gcs) = parse_abstraction("player2: 4 6", &g).unwrap() else {
            panic!("expected per-player abstractions");
        };
        assert!(gcs[0].is_identity() && !gcs[1].is_identity());
        let AbstractionSpec::Product(gc) =
            parse_abstraction("product: (2,2)(3,4)(4,4)(3,5)(4,5)(6,6)", &g).unwrap()
        else {
            panic!("expected a product abstraction");
        };
        assert_eq!(gc.abstract_lattice().size(), Some(6));
        assert!(matches!(
            parse_abstraction("player1: 3 5", &g),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_abstraction("player3: 1", &g).is_err());
        assert!(parse_abstraction("player1: 6\nplayer1: 6", &g).is_err());
    }

    #[test]
    fn ceil_abstractions() {
        let g = parse_game("game bertrand2").unwrap().game;
        let AbstractionSpec::PerPlayer(gcs) = parse_abstraction("ceil 3", &g).unwrap() else {
            panic!("expected per-player abstractions");
        };
        let x = Elem::new(vec!["10669/6000".parse().unwrap(), "2".parse().unwrap()]);
        assert_eq!(
            gcs[0].alpha(&x).unwrap(),
            Elem::new(vec!["1779/1000".parse().unwrap(), "2".parse().unwrap()])
        );
    }

    #[test]
    fn correspondence_tables() {
        let g = example1();
        let text: String = (1..=6).map(|k| format!("{k} -> {}\n", 7 - k)).collect();
        let f = parse_correspondence(&text, g.space(0), g.space(0)).unwrap();
        assert_eq!(
            f.eval(&Elem::int(2))
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![Elem::int(5)]
        );
        assert!(parse_correspondence("1 -> 2", g.space(0), g.space(0)).is_err());
    }
}
