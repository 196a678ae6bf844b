//! `mystic`: exact Pascal-type incidence checks and identity proofs.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 when the
//! predicate holds or the proof succeeded, 1 when it fails, 2 when the input
//! violates a geometric hypothesis, 3 for malformed input or exhausted
//! resources.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use mystic_core::json::{
    constraints_from_json, lines_from_json, lines_to_json, parse, points_from_json, points_to_json,
    raw_points_from_json, vector_from_json, vector_to_json,
};
use mystic_core::pascal::{pascal_f, pascal_g, pascal_identity, PascalInstance};
use mystic_core::poly::DEFAULT_TERM_CEILING;
use mystic_core::quadric3::{
    exists_quadric, p3l_concurrency_factor, p3l_concurrent, p3l_degenerate_factors, p3l_det,
    p3l_factorization_identity, p3l_frame_normalize, quadric_system, reduce_4p2l, QuadricConstraint,
};
use mystic_core::rnc::{jacobian_at, rnc_check, rnc_sample, RncInstance, RncNormalForm};
use mystic_core::rsb::{rsb_check, rsb_identity, rsb_sample_on_quadric};
use mystic_core::scalar::int;
use mystic_core::{Error, PLine, PPoint, ProofMode, Verdict, Witness};

#[derive(Parser)]
#[command(name = "mystic", version, about = "Exact determinantal conditions for Pascal-type theorems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Six points of the plane on a conic.
    #[command(subcommand)]
    Pascal(PascalCmd),
    /// d+4 points of P^d on a rational normal curve.
    #[command(subcommand)]
    Rnc(RncCmd),
    /// Quadric surfaces in P^3.
    #[command(subcommand)]
    Quadric3(QuadricCmd),
    /// Five lines of P^4 on a quadric.
    #[command(subcommand)]
    Rsb(RsbCmd),
}

#[derive(Subcommand)]
enum PascalCmd {
    /// Conic determinant F and collinearity determinant G of a hexagon.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Symbolic proof of F = G in 18 variables.
    Identity,
}

#[derive(Subcommand)]
enum RncCmd {
    /// Membership test, by normal-form equations and by projections.
    Check {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Seeded d+4 points on a rational normal curve.
    Sample {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Jacobian rank of the normal-form equations at a member instance.
    Jacobian {
        #[arg(long)]
        d: usize,
        /// Instance file; a seeded sample is used when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum QuadricCmd {
    /// Whether a quadric satisfies all point, line and curve constraints.
    Exists {
        #[arg(long)]
        input: PathBuf,
    },
    /// One point and three lines: the 6x6 determinant and its factors.
    P3l {
        #[arg(long)]
        input: PathBuf,
    },
    /// Four points and two lines, against the reduced point and three lines.
    Reduce42 {
        #[arg(long)]
        input: PathBuf,
    },
    /// Symbolic proof of the factorization of the 6x6 determinant.
    IdentityFactorization,
}

#[derive(Subcommand)]
enum RsbCmd {
    /// Quadric determinant F and dependency determinant G of five lines.
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Seeded five lines on x0 x1 + x2 x3 + x4^2 = 0.
    Sample {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Proof of F = G, symbolic or by random evaluation.
    Identity {
        #[arg(long, default_value = "pit")]
        mode: ProofMode,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TERM_CEILING)]
        term_ceiling: usize,
    },
}

enum Output {
    Verdict(Verdict),
    Data(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let (doc, code) = match run(cli.command) {
        Ok(Output::Verdict(mut v)) => {
            v.timing_ms = start.elapsed().as_millis() as u64;
            let code = v.exit_code();
            (serde_json::to_value(&v).expect("verdict serializes"), code)
        }
        Ok(Output::Data(d)) => (d, 0),
        Err(e) if e.is_hypothesis() => {
            let mut v = Verdict::hypothesis(&name, &e);
            v.timing_ms = start.elapsed().as_millis() as u64;
            (serde_json::to_value(&v).expect("verdict serializes"), 2)
        }
        Err(e) => {
            eprintln!("mystic {name}: {e}");
            (json!({ "command": name, "error": e.to_string() }), 3)
        }
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    ExitCode::from(code as u8)
}

fn command_name(c: &Command) -> String {
    let (group, sub) = match c {
        Command::Pascal(PascalCmd::Check { .. }) => ("pascal", "check"),
        Command::Pascal(PascalCmd::Identity) => ("pascal", "identity"),
        Command::Rnc(RncCmd::Check { .. }) => ("rnc", "check"),
        Command::Rnc(RncCmd::Sample { .. }) => ("rnc", "sample"),
        Command::Rnc(RncCmd::Jacobian { .. }) => ("rnc", "jacobian"),
        Command::Quadric3(QuadricCmd::Exists { .. }) => ("quadric3", "exists"),
        Command::Quadric3(QuadricCmd::P3l { .. }) => ("quadric3", "p3l"),
        Command::Quadric3(QuadricCmd::Reduce42 { .. }) => ("quadric3", "reduce42"),
        Command::Quadric3(QuadricCmd::IdentityFactorization) => ("quadric3", "identity-factorization"),
        Command::Rsb(RsbCmd::Check { .. }) => ("rsb", "check"),
        Command::Rsb(RsbCmd::Sample { .. }) => ("rsb", "sample"),
        Command::Rsb(RsbCmd::Identity { .. }) => ("rsb", "identity"),
    };
    format!("{group} {sub}")
}

fn read_json(path: &PathBuf) -> mystic_core::Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn field<'a>(v: &'a Value, key: &str) -> mystic_core::Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn fixed<T, const N: usize>(items: Vec<T>, what: &str) -> mystic_core::Result<[T; N]> {
    let n = items.len();
    items.try_into().map_err(|_| Error::Dimension(format!("expected {N} {what}, got {n}")))
}

fn run(command: Command) -> mystic_core::Result<Output> {
    let name = command_name(&command);
    match command {
        Command::Pascal(PascalCmd::Check { input }) => {
            let pts = raw_points_from_json(&read_json(&input)?)?;
            let inst = PascalInstance::new(&pts)?;
            let f = pascal_f(&inst);
            let g = pascal_g(&inst)?;
            let v = Verdict { member: Some(f == int(0)), ..Verdict::new(&name) }
                .witness("F", Witness::value(&f))
                .witness("G", Witness::value(&g))
                .with("collinear_triples", json!(inst.collinear_triples()));
            Ok(Output::Verdict(v))
        }
        Command::Pascal(PascalCmd::Identity) => Ok(Output::Verdict(Verdict::from_proof(&name, &pascal_identity()?))),
        Command::Rnc(RncCmd::Check { d, input }) => {
            let inst = RncInstance::new(d, &raw_points_from_json(&read_json(&input)?)?)?;
            Ok(Output::Verdict(Verdict::from_rnc(&name, &rnc_check(&inst)?)))
        }
        Command::Rnc(RncCmd::Sample { d, seed }) => {
            let inst = rnc_sample(d, seed)?;
            let mut doc = points_to_json(inst.points());
            doc["d"] = json!(d);
            doc["seed"] = json!(seed);
            Ok(Output::Data(doc))
        }
        Command::Rnc(RncCmd::Jacobian { d, input, seed }) => {
            let inst = match input {
                Some(path) => RncInstance::new(d, &raw_points_from_json(&read_json(&path)?)?)?,
                None => rnc_sample(d, seed)?,
            };
            inst.require_general()?;
            let nf = RncNormalForm::from_instance(&inst)?;
            let rank = mystic_core::rnc::rnc_jacobian_rank(&nf)?;
            let v = Verdict { member: Some(rank + 1 == d), ..Verdict::new(&name) }
                .witness("jacobian", Witness::matrix(&jacobian_at(&nf)?.row_vecs()))
                .with("rank", rank as u64)
                .with("equations", (d - 1) as u64);
            Ok(Output::Verdict(v))
        }
        Command::Quadric3(QuadricCmd::Exists { input }) => {
            let cs = constraints_from_json(&read_json(&input)?)?;
            let rank = quadric_system(&cs)?.rank();
            let (exists, form) = exists_quadric(&cs)?;
            let mut v = Verdict { member: Some(exists), ..Verdict::new(&name) }
                .with("rank", rank as u64)
                .with("kernel_dim", (10 - rank) as u64);
            if let Some(q) = form {
                v = v.witness("quadric", Witness::list(q.coeffs()));
            }
            Ok(Output::Verdict(v))
        }
        Command::Quadric3(QuadricCmd::P3l { input }) => {
            let doc = read_json(&input)?;
            let (r, concurrent) = match doc.get("r") {
                Some(r) => {
                    let r = fixed::<_, 3>(raw_points_from_json(r)?, "points R_i")?;
                    let p = PPoint::coordinate(3, 0);
                    let lines = fixed::<_, 3>(
                        (0..3)
                            .map(|i| PLine::new(PPoint::coordinate(3, i + 1), PPoint::new(r[i].clone())?))
                            .collect::<mystic_core::Result<Vec<_>>>()?,
                        "lines",
                    )?;
                    let c = p3l_concurrent(&p, &lines)?;
                    (r, c)
                }
                None => {
                    let p = PPoint::new(vector_from_json(field(&doc, "point")?)?)?;
                    let lines = fixed::<_, 3>(lines_from_json(field(&doc, "lines")?)?, "lines")?;
                    (p3l_frame_normalize(&p, &lines)?, p3l_concurrent(&p, &lines)?)
                }
            };
            let det = p3l_det(&r)?;
            let v = Verdict { member: Some(det == int(0)), ..Verdict::new(&name) }
                .witness("det", Witness::value(&det))
                .witness("degenerate_factors", Witness::list(&p3l_degenerate_factors(&r)?))
                .witness("concurrency_factor", Witness::value(&p3l_concurrency_factor(&r)?))
                .witness("r", Witness::matrix(&r))
                .with("concurrent", concurrent);
            Ok(Output::Verdict(v))
        }
        Command::Quadric3(QuadricCmd::Reduce42 { input }) => {
            let doc = read_json(&input)?;
            let points = fixed::<_, 4>(points_from_json(field(&doc, "points")?)?, "points")?;
            let [l1, l2] = fixed::<_, 2>(lines_from_json(field(&doc, "lines")?)?, "lines")?;
            let (p0, transversals) = reduce_4p2l(&points, &l1, &l2)?;
            let mut original: Vec<QuadricConstraint> = points.iter().cloned().map(QuadricConstraint::Point).collect();
            original.push(QuadricConstraint::Line(l1));
            original.push(QuadricConstraint::Line(l2));
            let mut reduced = vec![QuadricConstraint::Point(p0.clone())];
            reduced.extend(transversals.iter().cloned().map(QuadricConstraint::Line));
            let (lhs, _) = exists_quadric(&original)?;
            let (rhs, _) = exists_quadric(&reduced)?;
            let v = Verdict { member: Some(lhs), ..Verdict::new(&name) }
                .with("reduced_exists", rhs)
                .with("witnesses_agree", lhs == rhs)
                .with("point", vector_to_json(&p0))
                .with("transversals", lines_to_json(&transversals)["lines"].clone());
            Ok(Output::Verdict(v))
        }
        Command::Quadric3(QuadricCmd::IdentityFactorization) => {
            Ok(Output::Verdict(Verdict::from_proof(&name, &p3l_factorization_identity()?)))
        }
        Command::Rsb(RsbCmd::Check { input }) => {
            let lines = fixed::<_, 5>(lines_from_json(&read_json(&input)?)?, "lines")?;
            Ok(Output::Verdict(Verdict::from_rsb(&name, &rsb_check(&lines)?)))
        }
        Command::Rsb(RsbCmd::Sample { seed }) => {
            let mut doc = lines_to_json(&rsb_sample_on_quadric(seed)?);
            doc["seed"] = json!(seed);
            Ok(Output::Data(doc))
        }
        Command::Rsb(RsbCmd::Identity { mode, trials, seed, term_ceiling }) => {
            let proof = rsb_identity(mode, trials, seed, term_ceiling)?;
            let mut v = Verdict::from_proof(&name, &proof);
            if mode == ProofMode::Pit {
                v = v.with("degree", mystic_core::rsb::RSB_DEGREE as u64).with("seed", seed);
            }
            Ok(Output::Verdict(v))
        }
    }
}
