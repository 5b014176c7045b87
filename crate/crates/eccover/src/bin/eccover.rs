//! Command line front end.
//!
//! Instances and certificates stream on stdin/stdout so commands compose:
//!
//! ```text
//! eccover gen donut --k 4 | eccover square | eccover verify
//! eccover gen cubic --n 10 --seed 7 | eccover uniform-cover | eccover verify
//! ```
//!
//! Exit codes: 0 success/verified, 1 verified-false, 2 input error.

use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eccover::error::Result;
use eccover::graph::Multigraph;
use eccover::io::{self, Instance};
use eccover::ratio::{rat, rat_from_str, Rat};
use eccover::verify::{
    brute_force_dominates, verify_certificate, Certificate, MemberPredicate, Relation,
};
use eccover::{gen, square, triangle, uniform};

#[derive(Parser)]
#[command(name = "eccover", version, about = "2-edge-connected cover certificates")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct IoArgs {
    /// input file; stdin when absent
    #[arg(short, long)]
    input: Option<String>,
    /// output file; stdout when absent
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a uniform cover certificate for a cubic 3-edge-connected graph
    UniformCover {
        #[command(flatten)]
        io: IoArgs,
        /// cover value, 7/8 by default; 13/15 needs --coloring
        #[arg(long, default_value = "7/8")]
        factor: String,
        /// proper 3-edge-coloring file (one color 0..2 per edge) for 13/15
        #[arg(long)]
        coloring: Option<String>,
    },
    /// Emit a 9/7 certificate for a half-integer square point
    Square {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Emit a z^{x,e*} certificate for a half-integer triangle point
    Triangle {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Replay a certificate; exit 0 if it verifies, 1 if not
    Verify {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Generate instances
    Gen {
        #[command(subcommand)]
        what: GenCmd,
        /// output file; stdout when absent
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Brute-force check that the certificate target dominates some convex
    /// combination; exit 0 if it does, 1 if not
    Oracle {
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// k-donut square point with costs
    Donut {
        #[arg(long)]
        k: usize,
    },
    /// random cubic 3-edge-connected graph at x = 2/3
    Cubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// a named small graph at x = 2/3
    Named {
        #[arg(value_parser = ["k4", "k33", "prism", "petersen"])]
        name: String,
    },
    /// triangulated K4 triangle point
    TriangulatedK4,
}

fn read_input(path: &Option<String>) -> std::io::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<String>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

/// Accepts an instance or a bare graph, in JSON or text.
fn parse_any_instance(text: &str) -> Result<Instance> {
    if text.trim_start().starts_with('{') {
        io::instance_from_json(text).or_else(|_| {
            io::graph_from_json(text).map(instance_from_graph)
        })
    } else {
        io::parse_instance_text(text).or_else(|_| {
            io::parse_graph_text(text).map(instance_from_graph)
        })
    }
}

fn instance_from_graph(graph: Multigraph) -> Instance {
    let x: Vec<Rat> = (0..graph.m()).map(|_| rat(2, 3)).collect();
    Instance { graph, x, cost: None, estar: None }
}

fn cubic_instance(graph: Multigraph) -> Instance {
    instance_from_graph(graph)
}

fn make_uniform(inst: &Instance, factor: &str, coloring: &Option<String>) -> Result<Certificate> {
    let value = rat_from_str(factor).map_err(eccover::Error::Parse)?;
    let comb = if value == rat(13, 15) {
        let path = coloring.as_ref().ok_or_else(|| {
            eccover::Error::InvalidInput("13/15 needs --coloring".into())
        })?;
        let text = fs::read_to_string(path)
            .map_err(|e| eccover::Error::InvalidInput(format!("coloring file: {e}")))?;
        let colors: Vec<u8> = text
            .split_whitespace()
            .map(|t| t.parse::<u8>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| eccover::Error::Parse(format!("coloring: {e}")))?;
        uniform::cover_13_15(&inst.graph, &colors)?
    } else if value == rat(7, 8) {
        uniform::cover_7_8(&inst.graph)?
    } else {
        return Err(eccover::Error::InvalidInput(format!(
            "unsupported factor {factor}"
        )));
    };
    let target: Vec<Rat> = (0..inst.graph.m()).map(|_| value.clone()).collect();
    Ok(Certificate {
        graph: inst.graph.clone(),
        target,
        relation: Relation::Dominates,
        predicate: MemberPredicate::TwoEcSubgraph,
        combination: comb,
        notes: None,
    })
}

fn make_square(inst: &Instance) -> Result<Certificate> {
    let comb = square::square_certificate(&inst.graph, &inst.x)?;
    let target: Vec<Rat> = inst.x.iter().map(|x| rat(9, 7) * x).collect();
    Ok(Certificate {
        graph: inst.graph.clone(),
        target,
        relation: Relation::Dominates,
        predicate: MemberPredicate::TwoEcMultigraph,
        combination: comb,
        notes: None,
    })
}

fn make_triangle(inst: &Instance) -> Result<Certificate> {
    let estar = inst.estar.ok_or_else(|| {
        eccover::Error::InvalidInput("triangle point needs an estar marker".into())
    })?;
    let point = triangle::validate_triangle(&inst.graph, &inst.x, estar)?;
    let comb = triangle::triangle_certificate(&inst.graph, &inst.x, estar)?;
    Ok(Certificate {
        graph: inst.graph.clone(),
        target: point.z_vector(),
        relation: Relation::Equal,
        predicate: MemberPredicate::TwoEcMultigraph,
        combination: comb,
        notes: None,
    })
}

fn run() -> std::result::Result<u8, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::UniformCover { io: ioargs, factor, coloring } => {
            let text = read_input(&ioargs.input).map_err(|e| e.to_string())?;
            let inst = parse_any_instance(&text).map_err(|e| e.to_string())?;
            let cert = make_uniform(&inst, &factor, &coloring).map_err(|e| e.to_string())?;
            write_output(&ioargs.output, &cert.to_json()).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Cmd::Square { io: ioargs } => {
            let text = read_input(&ioargs.input).map_err(|e| e.to_string())?;
            let inst = parse_any_instance(&text).map_err(|e| e.to_string())?;
            let cert = make_square(&inst).map_err(|e| e.to_string())?;
            write_output(&ioargs.output, &cert.to_json()).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Cmd::Triangle { io: ioargs } => {
            let text = read_input(&ioargs.input).map_err(|e| e.to_string())?;
            let inst = parse_any_instance(&text).map_err(|e| e.to_string())?;
            let cert = make_triangle(&inst).map_err(|e| e.to_string())?;
            write_output(&ioargs.output, &cert.to_json()).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Cmd::Verify { io: ioargs } => {
            let text = read_input(&ioargs.input).map_err(|e| e.to_string())?;
            let cert = Certificate::from_json(&text).map_err(|e| e.to_string())?;
            match verify_certificate(&cert) {
                Ok(()) => {
                    println!("verified: {} members", cert.combination.terms.len());
                    Ok(0)
                }
                Err(e) => {
                    println!("failed: {e}");
                    Ok(1)
                }
            }
        }
        Cmd::Gen { what, output } => {
            let inst = match what {
                GenCmd::Donut { k } => {
                    if k < 2 {
                        return Err("donut needs k >= 2".into());
                    }
                    gen::k_donut(k)
                }
                GenCmd::Cubic { n, seed } => {
                    cubic_instance(gen::random_cubic_3ec(n, seed).map_err(|e| e.to_string())?)
                }
                GenCmd::Named { name } => cubic_instance(match name.as_str() {
                    "k4" => gen::k4(),
                    "k33" => gen::k33(),
                    "prism" => gen::prism(),
                    _ => gen::petersen(),
                }),
                GenCmd::TriangulatedK4 => gen::triangulated_k4(),
            };
            write_output(&output, &io::instance_to_json(&inst)).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Cmd::Oracle { io: ioargs } => {
            let text = read_input(&ioargs.input).map_err(|e| e.to_string())?;
            let cert = Certificate::from_json(&text).map_err(|e| e.to_string())?;
            let ok = brute_force_dominates(&cert.graph, &cert.target, cert.predicate)
                .map_err(|e| e.to_string())?;
            println!("{}", if ok { "dominates" } else { "does-not-dominate" });
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
