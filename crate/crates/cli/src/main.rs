use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use inscribe_cli::render::{render, Axis};
use inscribe_cli::{
    conic_locus, enumerate, gen_octahedron, gen_regular, parse_any, parse_instance, read_input,
    solve_polygon, solve_polyhedron, solver_config, to_json, CliError, CliResult, Solid, EXIT_OK,
};

#[derive(Parser)]
#[command(name = "inscribe", version, about = "Polygons inscribed in one convex polygon and circumscribed about another")]
struct Cli {
    /// Relative tolerance for geometric predicates
    #[arg(long, global = true, env = "INSCRIBE_EPS")]
    eps: Option<f64>,
    /// Agreement required between independently computed parameters
    #[arg(long, global = true)]
    match_tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a polygon instance over every shift
    SolvePolygon {
        /// Instance file; stdin when omitted or `-`
        input: Option<PathBuf>,
        /// Also run the brute-force scan and compare
        #[arg(long)]
        oracle: bool,
        /// Grid size for --oracle
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
    },
    /// Find inscribed graphs on a polyhedron
    SolvePolyhedron { input: Option<PathBuf> },
    /// Emit the regular-polygon instance with its four known solutions
    GenRegular {
        #[arg(long)]
        n: usize,
        /// Half the side length
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        /// Include the ruler-and-compass trace of the second split value
        #[arg(long)]
        construct: bool,
    },
    /// Emit a polyhedron instance with the regular inner polygon on every face
    GenOctahedron {
        #[arg(long, value_enum, default_value_t = SolidArg::Octahedron)]
        solid: SolidArg,
        /// Number of octahedra glued in a tower
        #[arg(long, default_value_t = 1)]
        glued: usize,
    },
    /// Sample and fit the locus conic of a chain
    ConicLocus {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Count closed polygons on full lines over all orders and assignments
    EnumerateGeneralized { input: Option<PathBuf> },
    /// Draw an instance or result document as SVG
    Render {
        input: Option<PathBuf>,
        /// SVG path; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Projection axis for polyhedra
        #[arg(long, value_enum, default_value_t = AxisArg::Z)]
        axis: AxisArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolidArg {
    Octahedron,
    Tetrahedron,
    Cube,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    X,
    Y,
    Z,
}

fn run(cli: Cli) -> CliResult<(String, i32)> {
    let cfg = solver_config(cli.eps, cli.match_tol)?;
    let load = |p: &Option<PathBuf>| read_input(p.as_deref()).and_then(|t| parse_instance(&t));
    let (doc, code) = match &cli.command {
        Command::SolvePolygon { input, oracle, grid } => {
            let (r, c) = solve_polygon(&load(input)?, &cfg, oracle.then_some(*grid))?;
            (to_json(&r), c)
        }
        Command::SolvePolyhedron { input } => {
            let (r, c) = solve_polyhedron(&load(input)?, &cfg)?;
            (to_json(&r), c)
        }
        Command::ConicLocus { input, samples } => {
            let (r, c) = conic_locus(&load(input)?, &cfg, *samples)?;
            (to_json(&r), c)
        }
        Command::EnumerateGeneralized { input } => {
            let (r, c) = enumerate(&load(input)?, &cfg)?;
            (to_json(&r), c)
        }
        Command::GenRegular { n, a, construct } => (to_json(&gen_regular(*n, *a, *construct)?), EXIT_OK),
        Command::GenOctahedron { solid, glued } => {
            let solid = match solid {
                SolidArg::Octahedron => Solid::Octahedron,
                SolidArg::Tetrahedron => Solid::Tetrahedron,
                SolidArg::Cube => Solid::Cube,
            };
            (to_json(&gen_octahedron(solid, *glued)?), EXIT_OK)
        }
        Command::Render { input, output, axis } => {
            let doc = parse_any(&read_input(input.as_deref())?)?;
            let axis = match axis {
                AxisArg::X => Axis::X,
                AxisArg::Y => Axis::Y,
                AxisArg::Z => Axis::Z,
            };
            let svg = render(&doc, axis)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, svg)
                        .map_err(|e| CliError::input("io_error", format!("{}: {e}", path.display())))?;
                    (String::new(), EXIT_OK)
                }
                None => (svg, EXIT_OK),
            }
        }
    };
    Ok((doc, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(cli) {
        Ok(ok) => ok,
        Err(e) => {
            eprintln!("inscribe: {e}");
            (to_json(&e.to_document()), e.exit_code)
        }
    };
    print!("{out}");
    ExitCode::from(code as u8)
}
