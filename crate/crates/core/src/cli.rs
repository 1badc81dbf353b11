//! Command-line front end. Exit codes: 0 ok, 1 verification failure,
//! 2 usage or parse error.

use crate::drawing::GridDrawing;
use crate::lr_opt::{brute_force_min_width, optimal_lr_drawing, rep_sequence};
use crate::outerplanar::{draw_outerplanar, dual_tree, parse_graph, OuterplanarGraph};
use crate::star_strong::{strong_bell_drawing, strong_flat_drawing};
use crate::star_weak::{bell_like_drawing, flat_drawing};
use crate::tree::{complete_tree, parse_tree, path_tree, random_tree, serialize_tree, Dir, Tree};
use crate::verify::{
    closing_edges, is_bell_like, is_flat, is_lr_drawing, is_outerplanar_drawing, is_star_shaped,
    VerifyReport,
};
use crate::worst_case::{fit_power_law, lower_bound_tree, min_nodes_table_from, table_to_csv};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "lrdraw", version, about = "Minimum-width tree drawings and outerplanar layouts")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print a tree in the parenthesized grammar.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Representation sequence and minimum width as JSON.
    Repseq { file: String },
    /// Minimum LR-drawing width.
    Width {
        file: String,
        /// Cross-check against exhaustive search (small trees only).
        #[arg(long)]
        brute_force: bool,
    },
    /// Draw a tree.
    Draw {
        file: String,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        svg: Option<String>,
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        verify: bool,
        /// Draw the closing edges of the star polygons as dashed lines.
        #[arg(long)]
        closing_edges: bool,
    },
    /// Minimum node counts per width from the worst-case frontier.
    Frontier {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        csv: String,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Append the fitted w = a n^b + c as a comment line.
        #[arg(long)]
        fit: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Dual tree of a maximal outerplanar graph.
    Dual {
        graph: String,
        #[arg(long, value_parser = parse_edge)]
        root_edge: (usize, usize),
        #[arg(long)]
        json: Option<String>,
    },
    /// Outerplanar drawing through the dual tree.
    Outerdraw {
        graph: String,
        #[arg(long)]
        svg: Option<String>,
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Check a drawing JSON against its input.
    Verify {
        #[arg(long, value_enum)]
        kind: CheckKind,
        input: String,
        drawing: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenKind {
    Complete,
    Random,
    Path,
    LowerBound,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algo {
    LrOpt,
    Bell,
    Flat,
    StrongFlat,
    StrongBell,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckKind {
    Lr,
    Star,
    Bell,
    Flat,
    Outerplanar,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected U,V, got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

/// Failure kinds mapped to exit codes.
enum Outcome {
    Ok,
    Failed,
}

pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn read_input(name: &str) -> Result<String> {
    if name == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(name).with_context(|| format!("reading {name}"))
    }
}

fn write_output(name: &str, text: &str) -> Result<()> {
    if name == "-" {
        std::io::stdout().write_all(text.as_bytes()).context("writing stdout")
    } else {
        std::fs::write(name, text).with_context(|| format!("writing {name}"))
    }
}

fn load_tree(name: &str) -> Result<Tree> {
    Ok(parse_tree(&read_input(name)?)?)
}

fn load_graph(name: &str) -> Result<OuterplanarGraph> {
    Ok(parse_graph(&read_input(name)?)?)
}

fn tree_edges(t: &Tree) -> Vec<(usize, usize)> {
    (0..t.len()).flat_map(|v| t.left(v).into_iter().chain(t.right(v)).map(move |c| (v, c))).collect()
}

fn report(r: &VerifyReport) -> Outcome {
    println!("{}", r.to_json());
    if r.pass {
        Outcome::Ok
    } else {
        Outcome::Failed
    }
}

fn dispatch(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Gen { kind, h, n, seed } => {
            let t = gen(kind, h, n, seed)?;
            println!("{}", serialize_tree(&t));
        }
        Cmd::Repseq { file } => {
            let s = rep_sequence(&load_tree(&file)?);
            let out = serde_json::json!({ "seq": s.values(), "min_width": s.min_width() });
            println!("{out}");
        }
        Cmd::Width { file, brute_force } => {
            let t = load_tree(&file)?;
            let w = rep_sequence(&t).min_width();
            if brute_force {
                let b = brute_force_min_width(&t)?;
                if b != w {
                    eprintln!("mismatch: dp {w}, brute force {b}");
                    println!("{w}");
                    return Ok(Outcome::Failed);
                }
            }
            println!("{w}");
        }
        Cmd::Draw { file, algo, svg, json, verify, closing_edges: dashed } => {
            let t = load_tree(&file)?;
            let d = draw(&t, algo);
            if svg.is_none() && json.is_none() {
                println!("{}", d.to_json());
            }
            if let Some(out) = svg {
                let extra = if dashed { closing_edges(&t) } else { Vec::new() };
                write_output(&out, &d.to_svg(&tree_edges(&t), &extra))?;
            }
            if let Some(out) = json {
                write_output(&out, &(d.to_json() + "\n"))?;
            }
            if verify {
                let r = check_tree(&t, &d, algo);
                if !r.pass {
                    eprintln!("{}", r.to_json());
                    return Ok(Outcome::Failed);
                }
                eprintln!("verified: width {} height {}", d.width(), d.height());
            }
        }
        Cmd::Frontier { max_n, csv, checkpoint, fit, threads } => {
            let (table, _) = min_nodes_table_from(max_n, checkpoint.as_deref(), threads)?;
            let mut text = table_to_csv(&table);
            if fit {
                let f = fit_power_law(&table)?;
                text.push_str(&format!("# fit a={:.6} b={:.6} c={:.6}\n", f.a, f.b, f.c));
            }
            write_output(&csv, &text)?;
        }
        Cmd::Dual { graph, root_edge, json } => {
            let g = load_graph(&graph)?;
            let dm = dual_tree(&g, root_edge)?;
            println!("{}", serialize_tree(&dm.tree));
            if let Some(out) = json {
                let j = serde_json::json!({
                    "root_edge": [dm.root_edge.0, dm.root_edge.1],
                    "gamma": dm.gamma,
                });
                write_output(&out, &(serde_json::to_string_pretty(&j)? + "\n"))?;
            }
        }
        Cmd::Outerdraw { graph, svg, json, verify } => {
            let g = load_graph(&graph)?;
            let d = draw_outerplanar(&g)?;
            if let Some(out) = svg {
                write_output(&out, &d.to_svg(&g.edges(), &[]))?;
            }
            if let Some(out) = json {
                write_output(&out, &(d.to_json() + "\n"))?;
            }
            if verify {
                let r = is_outerplanar_drawing(&g, &d);
                if !r.pass {
                    eprintln!("{}", r.to_json());
                    return Ok(Outcome::Failed);
                }
                eprintln!("verified: width {} height {}", d.width(), d.height());
            }
        }
        Cmd::Verify { kind, input, drawing } => {
            let d = GridDrawing::from_json(&read_input(&drawing)?)?;
            let r = match kind {
                CheckKind::Outerplanar => is_outerplanar_drawing(&load_graph(&input)?, &d),
                _ => {
                    let t = load_tree(&input)?;
                    if d.points.len() != t.len() {
                        bail!("drawing has {} points, tree has {} nodes", d.points.len(), t.len());
                    }
                    match kind {
                        CheckKind::Lr => is_lr_drawing(&t, &d),
                        CheckKind::Star => is_star_shaped(&t, &d),
                        CheckKind::Bell => is_bell_like(&t, &d),
                        CheckKind::Flat => is_flat(&t, &d),
                        CheckKind::Outerplanar => unreachable!(),
                    }
                }
            };
            return Ok(report(&r));
        }
    }
    Ok(Outcome::Ok)
}

fn gen(kind: GenKind, h: Option<u32>, n: Option<usize>, seed: u64) -> Result<Tree> {
    let need_h = || h.ok_or_else(|| anyhow!("--h is required for this kind"));
    let need_n = || n.ok_or_else(|| anyhow!("--n is required for this kind"));
    Ok(match kind {
        GenKind::Complete => complete_tree(need_h()?)?,
        GenKind::LowerBound => {
            let h = need_h()?;
            if h == 0 || h > 8 {
                bail!("--h must be in 1..=8");
            }
            lower_bound_tree(h)
        }
        GenKind::Random => random_tree(need_n()?, seed)?,
        GenKind::Path => {
            let n = need_n()?;
            if n == 0 {
                bail!("--n must be positive");
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let dirs: Vec<Dir> =
                (1..n).map(|_| if rng.gen_bool(0.5) { Dir::Left } else { Dir::Right }).collect();
            path_tree(&dirs)
        }
    })
}

fn draw(t: &Tree, algo: Algo) -> GridDrawing {
    match algo {
        Algo::LrOpt => optimal_lr_drawing(t),
        Algo::Bell => bell_like_drawing(t),
        Algo::Flat => flat_drawing(t),
        Algo::StrongFlat => strong_flat_drawing(t),
        Algo::StrongBell => strong_bell_drawing(t),
    }
}

fn check_tree(t: &Tree, d: &GridDrawing, algo: Algo) -> VerifyReport {
    match algo {
        Algo::LrOpt => is_lr_drawing(t, d),
        Algo::Bell | Algo::StrongBell => {
            let mut r = is_star_shaped(t, d);
            r.merge(is_bell_like(t, d));
            r
        }
        Algo::Flat | Algo::StrongFlat => {
            let mut r = is_star_shaped(t, d);
            r.merge(is_flat(t, d));
            r
        }
    }
}
