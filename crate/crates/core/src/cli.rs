//! The `ababfree` command line.
//!
//! Every subcommand reads one JSON document from `--input` (or stdin) and
//! writes its result to `--output` (or stdout). Exit codes: 0 on success, 2
//! when the requested property does not hold, 1 on errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coloring::{three_color, three_color_verified};
use crate::constructions::{build_hc, build_tree_hypergraph};
use crate::error::{Error, Result};
use crate::geometry::json::{CurvesDocument, DisksDocument, PolygonsDocument};
use crate::geometry::{
    compactify, enumerate_stabbed_disks, evenize, hypergraph_from_curves,
    hypergraph_from_stabbed_disks, realize_as_curves, Point, PointSet,
};
use crate::hypergraph::{
    colorability_oracle, monochromatic_edge, parse_hypergraph, Coloring, OrderedHypergraph,
};
use crate::pattern::{find_abl_free_order, is_abl_free_ordered, HalfIntegerL, Verdict};
use crate::svg::{render_svg, Scene};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FALSIFIED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ababfree", version, about = "Alternation-free hypergraphs and their geometric realizations")]
pub struct Cli {
    /// Read the input document from this file instead of stdin.
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the result to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a hypergraph for an (AB)^l-sequence under its vertex order.
    CheckFree {
        #[arg(long)]
        l: HalfIntegerL,
    },
    /// Search all vertex orders for one that is (AB)^l-free (at most 10 vertices).
    FindOrder {
        #[arg(long)]
        l: HalfIntegerL,
    },
    /// Properly 3-color an ABAB-free hypergraph.
    Color3 {
        /// Run the full ABAB check on the input first.
        #[arg(long)]
        verify_input: bool,
        /// Print {"hypergraph":...,"coloring":...} so the result pipes into `verify`.
        #[arg(long)]
        with_hypergraph: bool,
    },
    /// Check a {"hypergraph":...,"coloring":...} document for properness.
    Verify {
        /// Also require that at most this many colors are used.
        #[arg(long)]
        max_colors: Option<usize>,
    },
    /// Print the ABABA-free hypergraph H_c built from m-ary trees.
    GenHc {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        m: usize,
    },
    /// Print the tree hypergraph H(a, b).
    GenTree {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Hypergraph of the points on or above each curve.
    FromCurves,
    /// Realize a hypergraph by points on a line and curves.
    Realize {
        #[arg(long)]
        l: HalfIntegerL,
    },
    /// Make a curve family even without changing its hypergraph.
    Evenize,
    /// Close an even curve family into stabbed polygons.
    Compactify,
    /// Hypergraph of the points inside each disk, in angular order about the stab point.
    FromDisks,
    /// Hypergraph of all disks through the stab point.
    EnumDisks {
        /// Ignore the input and use this many random integer points around the origin.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the realizing disk family instead of the hypergraph.
        #[arg(long)]
        disks: bool,
    },
    /// Exhaustively search for a proper c-coloring.
    OracleColor {
        #[arg(long)]
        c: usize,
    },
    /// Draw a curve, disk or polygon document as SVG.
    Render {
        /// Coloring document whose classes color the points.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

/// A successful run prints `text`; `falsified` selects exit code 2.
struct Outcome {
    text: String,
    falsified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            falsified: false,
        }
    }

    fn falsified(text: String) -> Self {
        Self {
            text,
            falsified: true,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ColoredDoc {
    hypergraph: serde_json::Value,
    coloring: serde_json::Value,
}

/// Runs the command line with the process's stdin, stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
        }
    };
    let result = read_input(&cli, stdin).and_then(|input| execute(&cli.command, &input));
    match result {
        Ok(outcome) => {
            let mut text = outcome.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match &cli.output {
                Some(path) => fs::write(path, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_ERROR;
            }
            if outcome.falsified {
                EXIT_FALSIFIED
            } else {
                EXIT_OK
            }
        }
        Err(e @ Error::NotAbabFree(_)) => {
            let _ = writeln!(stderr, "{e}");
            EXIT_FALSIFIED
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn needs_input(command: &Command) -> bool {
    !matches!(
        command,
        Command::GenHc { .. } | Command::GenTree { .. } | Command::EnumDisks { random: Some(_), .. }
    )
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    if !needs_input(&cli.command) {
        return Ok(String::new());
    }
    match &cli.input {
        Some(path) => fs::read_to_string(path).map_err(|e| {
            Error::Invalid(format!("cannot read {}: {e}", path.display()))
        }),
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn execute(command: &Command, input: &str) -> Result<Outcome> {
    match command {
        Command::CheckFree { l } => {
            let h = parse_hypergraph(input)?;
            Ok(match is_abl_free_ordered(&h, *l) {
                Verdict::Free => Outcome::ok(json!({ "free": true }).to_string()),
                Verdict::Violation(v) => Outcome::falsified(
                    json!({
                        "free": false,
                        "edge_a": v.edge_a,
                        "edge_b": v.edge_b,
                        "witness": v.witness,
                    })
                    .to_string(),
                ),
            })
        }
        Command::FindOrder { l } => {
            let h = parse_hypergraph(input)?;
            Ok(match find_abl_free_order(&h, *l)? {
                Some(order) => Outcome::ok(json!({ "order": order }).to_string()),
                None => Outcome::falsified("none".into()),
            })
        }
        Command::Color3 {
            verify_input,
            with_hypergraph,
        } => {
            let h = parse_hypergraph(input)?;
            let coloring = if *verify_input {
                three_color_verified(&h)?
            } else {
                three_color(&h)?
            };
            Ok(Outcome::ok(if *with_hypergraph {
                colored_json(&h, &coloring)?
            } else {
                coloring.to_json()
            }))
        }
        Command::Verify { max_colors } => {
            let doc: ColoredDoc = serde_json::from_str(input)?;
            let h = OrderedHypergraph::from_json(&doc.hypergraph.to_string())?;
            let coloring = Coloring::from_json(&doc.coloring.to_string())?;
            if coloring.len() != h.vertex_count() {
                return Err(Error::LengthMismatch {
                    expected: h.vertex_count(),
                    got: coloring.len(),
                });
            }
            if let Some(edge) = monochromatic_edge(&h, &coloring) {
                return Ok(Outcome::falsified(
                    json!({ "proper": false, "monochromatic_edge": edge }).to_string(),
                ));
            }
            let palette = coloring.palette_size();
            let report = json!({ "proper": true, "palette": palette }).to_string();
            Ok(match max_colors {
                Some(k) if palette > *k => Outcome::falsified(report),
                _ => Outcome::ok(report),
            })
        }
        Command::GenHc { c, m } => Ok(Outcome::ok(build_hc(*c, *m)?.to_json())),
        Command::GenTree { a, b } => Ok(Outcome::ok(build_tree_hypergraph(*a, *b)?.to_json())),
        Command::FromCurves => {
            let doc = CurvesDocument::from_json(input)?;
            doc.family.validate()?;
            Ok(Outcome::ok(hypergraph_from_curves(&doc.points, &doc.family)?.to_json()))
        }
        Command::Realize { l } => {
            let h = parse_hypergraph(input)?;
            let (points, family) = realize_as_curves(&h, *l)?;
            Ok(Outcome::ok(CurvesDocument { points, family }.to_json()))
        }
        Command::Evenize => {
            let doc = CurvesDocument::from_json(input)?;
            let family = evenize(&doc.points, &doc.family)?;
            Ok(Outcome::ok(
                CurvesDocument {
                    points: doc.points,
                    family,
                }
                .to_json(),
            ))
        }
        Command::Compactify => {
            let doc = CurvesDocument::from_json(input)?;
            let c = compactify(&doc.points, &doc.family)?;
            Ok(Outcome::ok(PolygonsDocument::new(doc.points, &c).to_json()))
        }
        Command::FromDisks => {
            let doc = DisksDocument::from_json(input)?;
            Ok(Outcome::ok(
                hypergraph_from_stabbed_disks(&doc.points, &doc.family)?.to_json(),
            ))
        }
        Command::EnumDisks { random, seed, disks } => {
            let (points, stab) = match random {
                Some(n) => (random_points(*n, *seed)?, Point::from_ints(0, 0)),
                None => {
                    let doc = DisksDocument::from_json(input)?;
                    (doc.points, doc.family.stab().clone())
                }
            };
            let family = enumerate_stabbed_disks(&points, &stab)?;
            Ok(Outcome::ok(if *disks {
                DisksDocument { points, family }.to_json()
            } else {
                hypergraph_from_stabbed_disks(&points, &family)?.to_json()
            }))
        }
        Command::OracleColor { c } => {
            let h = parse_hypergraph(input)?;
            Ok(match colorability_oracle(&h, *c)? {
                Some(coloring) => Outcome::ok(coloring.to_json()),
                None => Outcome::falsified("none".into()),
            })
        }
        Command::Render { coloring } => {
            let scene = Scene::from_json(input)?;
            let coloring = match coloring {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| {
                        Error::Invalid(format!("cannot read {}: {e}", path.display()))
                    })?;
                    Some(Coloring::from_json(&text)?)
                }
                None => None,
            };
            Ok(Outcome::ok(render_svg(&scene, coloring.as_ref())?))
        }
    }
}

fn colored_json(h: &OrderedHypergraph, coloring: &Coloring) -> Result<String> {
    let doc = ColoredDoc {
        hypergraph: serde_json::from_str(&h.to_json())?,
        coloring: serde_json::from_str(&coloring.to_json())?,
    };
    Ok(serde_json::to_string(&doc)?)
}

/// `n` distinct integer points in `[-10, 10]^2` other than the origin.
pub fn random_points(n: usize, seed: u64) -> Result<PointSet> {
    const SPAN: i64 = 10;
    let room = ((2 * SPAN + 1) * (2 * SPAN + 1) - 1) as usize;
    if n > room {
        return Err(Error::Invalid(format!("at most {room} random points fit the grid")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: Vec<(i64, i64)> = Vec::with_capacity(n);
    while chosen.len() < n {
        let p = (rng.gen_range(-SPAN..=SPAN), rng.gen_range(-SPAN..=SPAN));
        if p != (0, 0) && !chosen.contains(&p) {
            chosen.push(p);
        }
    }
    PointSet::new(chosen.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect())
}
