//! Command-line driver: parses game and abstraction files, runs the solvers
//! and verifiers, and prints one report per run.

pub mod gamespec;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use supermod_core::models::bertrand2_exact_equilibria;
use supermod_core::{
    abstract_best_response_game, best_correct_approx, best_response, ceil_abstraction,
    check_complete_approx, check_correct_approx, check_correct_approx_with, check_em_dominance,
    check_theorem_condition, compose_product, decompose_product, enumerate_equilibria,
    fix_set_multivalued, gamma_s, is_principal_filter, is_relational, is_supermodular_game,
    player_best_response, powerset_compare, restrict_game, rt_solve_with, validate_gc,
    Correspondence, Direction, Elem, Error, GaloisConnection, Game, Result, RtOptions, SetRelation,
};

use gamespec::{
    parse_abstraction, parse_correspondence, parse_game, AbstractionSpec, GameKind, ParsedGame,
};
use report::{profiles, Input, Profile, Report, Solution};

#[derive(Debug, Parser)]
#[command(
    name = "supermod",
    version,
    about = "Equilibria of supermodular games and their abstractions"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Lfp,
    Gfp,
    Enumerate,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RelationArg {
    S,
    H,
    Em,
    All,
}

impl RelationArg {
    fn relations(self) -> Vec<SetRelation> {
        match self {
            RelationArg::S => vec![SetRelation::Smyth],
            RelationArg::H => vec![SetRelation::Hoare],
            RelationArg::Em => vec![SetRelation::EgliMilner],
            RelationArg::All => vec![
                SetRelation::Smyth,
                SetRelation::Hoare,
                SetRelation::EgliMilner,
            ],
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Least and greatest equilibria by round-robin iteration, or all
    /// equilibria by enumeration.
    Solve {
        game: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        /// Player sweep order, 1-based and comma-separated.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Include every iterate of the round-robin runs.
        #[arg(long)]
        trace: bool,
    },
    /// Solve the game restricted to abstract strategy spaces and check that
    /// its equilibria cover the concrete ones.
    Restrict { game: PathBuf, abstraction: PathBuf },
    /// Solve the game in which players see opponents through an abstraction.
    Absresp {
        game: PathBuf,
        #[arg(required_unless_present = "ceil", conflicts_with = "ceil")]
        abstraction: Option<PathBuf>,
        /// Round opponents' strategies up to N decimal digits.
        #[arg(long, value_name = "N")]
        ceil: Option<u32>,
    },
    /// Validate an abstraction and check correctness of an abstract best
    /// response.
    Verify {
        game: PathBuf,
        abstraction: PathBuf,
        /// Abstract correspondence table (`a -> b1 b2 ...` per line) to check
        /// instead of the restricted game's best response.
        #[arg(long)]
        correspondence: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RelationArg::All)]
        relation: RelationArg,
    },
    /// Supermodularity and quasisupermodularity of every player.
    Check { game: PathBuf },
}

/// Runs the driver; returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// An error, with the input file it came from.
#[derive(Debug)]
pub struct CliError {
    pub file: Option<PathBuf>,
    pub error: Error,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.file {
            Some(p) => write!(f, "{}: {}", p.display(), self.error),
            None => write!(f, "{}", self.error),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError { file: None, error }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<(String, Input)> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        file: Some(path.to_path_buf()),
        error: Error::Contract(format!("cannot read: {e}")),
    })?;
    let input = Input::new(&path.display().to_string(), &text);
    Ok((text, input))
}

fn with_file<T>(path: &Path, r: Result<T>) -> CliResult<T> {
    r.map_err(|error| CliError {
        file: Some(path.to_path_buf()),
        error,
    })
}

fn load_game(path: &Path) -> CliResult<(ParsedGame, Input)> {
    let (text, input) = read(path)?;
    Ok((with_file(path, parse_game(&text))?, input))
}

fn load_abstraction(path: &Path, game: &Game) -> CliResult<(AbstractionSpec, Input)> {
    let (text, input) = read(path)?;
    Ok((with_file(path, parse_abstraction(&text, game))?, input))
}

pub fn execute(command: &Command) -> CliResult<Report> {
    match command {
        Command::Solve {
            game,
            mode,
            order,
            trace,
        } => solve(game, *mode, order.as_deref(), *trace),
        Command::Restrict { game, abstraction } => restrict(game, abstraction),
        Command::Absresp {
            game,
            abstraction,
            ceil,
        } => absresp(game, abstraction.as_deref(), *ceil),
        Command::Verify {
            game,
            abstraction,
            correspondence,
            relation,
        } => verify(game, abstraction, correspondence.as_deref(), *relation),
        Command::Check { game } => check(game),
    }
}

fn rt_options(game: &Game, order: Option<&[usize]>) -> Result<RtOptions> {
    let order = match order {
        None => None,
        Some(o) => Some(
            o.iter()
                .map(|&p| {
                    if p == 0 || p > game.num_players() {
                        Err(Error::Contract(format!(
                            "player {p} in --order is out of range"
                        )))
                    } else {
                        Ok(p - 1)
                    }
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Ok(RtOptions {
        order,
        ..RtOptions::default()
    })
}

fn solve(path: &Path, mode: Mode, order: Option<&[usize]>, trace: bool) -> CliResult<Report> {
    let (parsed, input) = load_game(path)?;
    let game = &parsed.game;
    let mut report = Report::new("solve", vec![input]);
    report.set("game", parsed.kind);
    report.set("players", game.num_players());
    if parsed.kind == GameKind::Bertrand2 {
        // Continuous strategy spaces: the equilibria come from the closed-form
        // best responses, not from iteration.
        let exact = bertrand2_exact_equilibria()?;
        report.set("lne", Profile::from(&exact.lne));
        report.set("gne", Profile::from(&exact.gne));
        report.set(
            "method",
            "closed-form best responses, one linear system per sign pattern",
        );
        return Ok(report);
    }
    let opts = rt_options(game, order)?;
    for (dir, wanted) in [(Direction::Lfp, Mode::Lfp), (Direction::Gfp, Mode::Gfp)] {
        if mode == wanted || mode == Mode::All {
            let t = rt_solve_with(game, dir, &opts)?;
            report.set(&dir.to_string(), Solution::from(&t));
            if trace {
                let iterates: Vec<Profile> = t.iterates.iter().map(Profile::from).collect();
                report.set(&format!("{dir}_iterates"), iterates);
            }
        }
    }
    if matches!(mode, Mode::Enumerate | Mode::All) {
        report.set("equilibria", profiles(&enumerate_equilibria(game)?));
    }
    Ok(report)
}

/// Per-player connections; a relational product is replaced by the product
/// of its projections, which is reported.
fn per_player(spec: AbstractionSpec, report: &mut Report) -> Result<Vec<GaloisConnection>> {
    match spec {
        AbstractionSpec::PerPlayer(gcs) => Ok(gcs),
        AbstractionSpec::Product(gc) => {
            if is_relational(&gc)?.relational {
                report.set(
                    "decomposed",
                    "relational abstraction replaced by the product of its projections",
                );
            }
            decompose_product(&gc)
        }
    }
}

fn spaces_of(gcs: &[GaloisConnection]) -> Vec<serde_json::Value> {
    gcs.iter()
        .enumerate()
        .map(|(i, gc)| {
            let members = match gc.abstract_lattice().enumerate() {
                Ok(m) if !gc.is_identity() => {
                    json!(m.iter().map(Profile::from).collect::<Vec<_>>())
                }
                _ => json!(gc.abstract_lattice().to_string()),
            };
            json!({ "player": i + 1, "members": members })
        })
        .collect()
}

fn restrict(game_path: &Path, abs_path: &Path) -> CliResult<Report> {
    let (parsed, gi) = load_game(game_path)?;
    let game = &parsed.game;
    let (spec, ai) = load_abstraction(abs_path, game)?;
    let mut report = Report::new("restrict", vec![gi, ai]);
    let gcs = per_player(spec, &mut report)?;
    let ag = restrict_game(game, &gcs)?;
    report.set("abstract_spaces", spaces_of(&gcs));
    report.set("warnings", &ag.warnings);
    report.set("supermodularity_preserved", ag.supermodularity_preserved);
    let opts = RtOptions::default();
    report.set(
        "lfp",
        Solution::from(&rt_solve_with(&ag.derived, Direction::Lfp, &opts)?),
    );
    report.set(
        "gfp",
        Solution::from(&rt_solve_with(&ag.derived, Direction::Gfp, &opts)?),
    );
    let dom = check_em_dominance(&ag)?;
    report.set("abstract_equilibria", profiles(&dom.abstract_));
    report.set("concrete_equilibria", profiles(&dom.concrete));
    report.set("em_dominance", json!({ "holds": dom.holds }));
    let t = check_theorem_condition(game, &gcs)?;
    let failures: Vec<_> = t
        .failures
        .iter()
        .map(|f| json!({ "a": Profile::from(&f.a), "value": Profile::from(&f.value) }))
        .collect();
    report.set(
        "theorem_condition",
        json!({
            "holds": t.holds,
            "failures": failures,
            "principal_filters": t.principal_filters,
            "all_principal_filter": t.all_principal_filter,
            "dominance_guaranteed": t.dominance_guaranteed,
        }),
    );
    Ok(report)
}

fn absresp(game_path: &Path, abs_path: Option<&Path>, ceil: Option<u32>) -> CliResult<Report> {
    let (parsed, gi) = load_game(game_path)?;
    let game = &parsed.game;
    let mut report = Report::new("absresp", vec![gi]);
    let gcs = match (abs_path, ceil) {
        (Some(p), _) => {
            let (spec, ai) = load_abstraction(p, game)?;
            report.inputs.push(ai);
            per_player(spec, &mut report)?
        }
        (None, Some(n)) => {
            report.set("ceil_digits", n);
            (0..game.num_players())
                .map(|i| ceil_abstraction(n, game.space(i)))
                .collect::<Result<_>>()?
        }
        (None, None) => {
            return Err(Error::Contract("give an abstraction file or --ceil".into()).into())
        }
    };
    let ag = abstract_best_response_game(game, &gcs)?;
    let opts = RtOptions::default();
    let lfp = rt_solve_with(&ag.derived, Direction::Lfp, &opts)?;
    let gfp = rt_solve_with(&ag.derived, Direction::Gfp, &opts)?;
    report.set("lfp", Solution::from(&lfp));
    report.set("gfp", Solution::from(&gfp));

    let concrete = if parsed.kind == GameKind::Bertrand2 {
        let e = bertrand2_exact_equilibria()?;
        Some((e.lne, e.gne))
    } else if game.profile_space().is_finite() {
        let l = rt_solve_with(game, Direction::Lfp, &opts)?;
        let g = rt_solve_with(game, Direction::Gfp, &opts)?;
        report.set(
            "abstract_equilibria",
            profiles(&enumerate_equilibria(&ag.derived)?),
        );
        report.set(
            "em_dominance",
            json!({ "holds": check_em_dominance(&ag)?.holds }),
        );
        Some((l.result, g.result))
    } else {
        None
    };
    if let Some((lne, gne)) = concrete {
        let diff = |a: &Elem, c: &Elem| {
            Elem::new(
                a.coords()
                    .iter()
                    .zip(c.coords())
                    .map(|(x, y)| x.clone() - y.clone())
                    .collect(),
            )
        };
        report.set("concrete_lne", Profile::from(&lne));
        report.set("concrete_gne", Profile::from(&gne));
        report.set(
            "error",
            json!({
                "lne": Profile::from(&diff(&lfp.result, &lne)),
                "gne": Profile::from(&diff(&gfp.result, &gne)),
                "lne_dominates": lne.leq(&lfp.result),
                "gne_dominates": gne.leq(&gfp.result),
            }),
        );
    }
    Ok(report)
}

#[derive(Serialize)]
struct GcReport {
    player: Option<usize>,
    laws_hold: bool,
    violations: Vec<String>,
    insertion: Option<bool>,
    finitely_disjunctive: bool,
    principal_filter: bool,
}

fn gc_report(player: Option<usize>, gc: &GaloisConnection) -> Result<GcReport> {
    let v = validate_gc(gc)?;
    Ok(GcReport {
        player,
        laws_hold: v.holds,
        violations: v
            .violations
            .iter()
            .take(5)
            .map(|x| format!("{x:?}"))
            .collect(),
        insertion: v.flags.is_insertion,
        finitely_disjunctive: v.flags.finitely_disjunctive,
        principal_filter: is_principal_filter(gc)?,
    })
}

fn verify(
    game_path: &Path,
    abs_path: &Path,
    corr_path: Option<&Path>,
    relation: RelationArg,
) -> CliResult<Report> {
    let (parsed, gi) = load_game(game_path)?;
    let game = &parsed.game;
    let (spec, ai) = load_abstraction(abs_path, game)?;
    let mut inputs = vec![gi, ai];
    let corr_text = match corr_path {
        Some(p) => {
            let (text, ci) = read(p)?;
            inputs.push(ci);
            Some((p, text))
        }
        None => None,
    };
    let mut report = Report::new("verify", inputs);

    let (product, default_sharp, label) = match spec {
        AbstractionSpec::PerPlayer(gcs) => {
            let per: Vec<GcReport> = gcs
                .iter()
                .enumerate()
                .map(|(i, gc)| gc_report(Some(i + 1), gc))
                .collect::<Result<_>>()?;
            report.set("abstractions", per);
            let ag = restrict_game(game, &gcs)?;
            report.set(
                "player_correctness",
                player_correctness(game, &ag.derived, &gcs, relation)?,
            );
            (
                compose_product(&gcs)?,
                best_response(&ag.derived),
                "restricted-game best response",
            )
        }
        AbstractionSpec::Product(gc) => {
            report.set("abstraction", gc_report(None, &gc)?);
            let rel = is_relational(&gc)?;
            report.set(
                "relational",
                json!({ "relational": rel.relational, "witness": rel.witness.as_ref().map(Profile::from) }),
            );
            let bca = best_correct_approx(&best_response(game), &gc)?;
            (gc, bca, "best correct approximation")
        }
    };
    let (sharp, label): (Correspondence, &str) = match corr_text {
        Some((p, text)) => {
            let a = product.abstract_lattice();
            (
                with_file(p, parse_correspondence(&text, a, a))?,
                "supplied correspondence",
            )
        }
        None => (default_sharp, label),
    };
    report.set("abstract_correspondence", label);
    let f = best_response(game);
    let verdicts: Vec<_> = relation
        .relations()
        .into_iter()
        .map(|rel| {
            let v = check_correct_approx(&f, &sharp, &product, rel)?;
            Ok(json!({
                "relation": rel.name(),
                "holds": v.holds,
                "counterexample": v.counterexample.map(counterexample_json),
            }))
        })
        .collect::<Result<_>>()?;
    report.set("correctness", verdicts);
    let c = check_complete_approx(&f, &sharp, &product)?;
    report.set(
        "completeness",
        json!({ "holds": c.holds, "witness": c.witness.as_ref().map(Profile::from), "lfp_transfer": c.lfp_transfer }),
    );
    let fix_c = fix_set_multivalued(&f)?.elements;
    let fix_a = fix_set_multivalued(&sharp)?.elements;
    let em = powerset_compare(
        SetRelation::EgliMilner,
        product.concrete(),
        &fix_c,
        &gamma_s(&product, &fix_a)?,
    )?;
    report.set(
        "fixed_points",
        json!({ "concrete": profiles(&fix_c), "abstract": profiles(&fix_a), "em_dominance": em }),
    );
    report.set(
        "abstract_profile_space",
        product.abstract_lattice().to_string(),
    );
    Ok(report)
}

/// `B_i^♯ : A_{-i} → ℘(A_i)` of the restricted game against `B_i`.
fn player_correctness(
    game: &Game,
    derived: &Game,
    gcs: &[GaloisConnection],
    relation: RelationArg,
) -> Result<Vec<serde_json::Value>> {
    let mut out = Vec::new();
    for i in 0..game.num_players() {
        if game.num_players() == 1 {
            break;
        }
        let others: Vec<GaloisConnection> = gcs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let dom = if others.len() == 1 {
            others[0].clone()
        } else {
            compose_product(&others)?
        };
        let f = player_best_response(game, i)?;
        let f_sharp = player_best_response(derived, i)?;
        for rel in relation.relations() {
            let v = check_correct_approx_with(&f, &f_sharp, &dom, &gcs[i], rel)?;
            out.push(json!({
                "player": i + 1,
                "relation": rel.name(),
                "holds": v.holds,
                "counterexample": v.counterexample.map(counterexample_json),
            }));
        }
    }
    Ok(out)
}

fn counterexample_json(ce: supermod_core::ApproxCounterexample) -> serde_json::Value {
    use supermod_core::ApproxCounterexample as C;
    let set = |s: &supermod_core::ElemSet| profiles(s);
    match ce {
        C::Soundness {
            a,
            concrete,
            abstract_,
        } => json!({
            "kind": "soundness", "a": Profile::from(&a), "concrete": set(&concrete), "abstract": set(&abstract_),
        }),
        C::NotExtremal { a, image } => json!({
            "kind": "not-extremal", "a": Profile::from(&a), "image": set(&image),
        }),
        C::NotMonotone { a, a_prime } => json!({
            "kind": "not-monotone", "a": Profile::from(&a), "a_prime": Profile::from(&a_prime),
        }),
    }
}

fn check(path: &Path) -> CliResult<Report> {
    let (parsed, input) = load_game(path)?;
    let mut report = Report::new("check", vec![input]);
    let r = is_supermodular_game(&parsed.game)?;
    report.set("supermodular", r.supermodular);
    report.set("quasisupermodular", r.quasisupermodular);
    let players: Vec<_> = r
        .players
        .iter()
        .map(|p| {
            let verdict = |v: &supermod_core::PropertyVerdict| {
                json!({
                    "holds": v.holds,
                    "violations": v.violations,
                    "counterexample": v.counterexample.as_ref().map(|c| json!({
                        "x": Profile::from(&c.x),
                        "x_prime": Profile::from(&c.x_prime),
                        "y": Profile::from(&c.y),
                        "y_prime": Profile::from(&c.y_prime),
                        "lhs": c.lhs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "rhs": c.rhs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })),
                })
            };
            json!({
                "player": p.player,
                "supermodular": verdict(&p.supermodular),
                "increasing_differences": verdict(&p.increasing_differences),
                "quasisupermodular": verdict(&p.quasisupermodular),
                "single_crossing": verdict(&p.single_crossing),
            })
        })
        .collect();
    report.set("players", players);
    Ok(report)
}
