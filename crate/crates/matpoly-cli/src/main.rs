use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matpoly::formats::{parse_matrix_csv, write_matrix_csv};
use matpoly::isomap::{
    check_linearity, check_product_structure, check_ring_axioms, coordinate_matrix_in, sampling_matrix_in,
};
use matpoly::surface::Range;
use matpoly::{
    cayley_hamilton_residual, char_poly_of, classify, construct, construct_all, dp_inverse, dp_power, dp_product,
    eigen_pairs, identity_poly, to_matrix, BiPoly, ConstructionMethod, ErrorKind, MonomialOrder, SurfaceGrid,
    DEFAULT_MAX_PERIOD,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_SHAPE: u8 = 2;
const EXIT_SINGULAR: u8 = 3;
const EXIT_PARSE: u8 = 4;
const EXIT_USAGE: u8 = 64;

/// Exact conversions between rational matrices and bivariate polynomials.
///
/// Polynomial inputs are JSON files as written by `construct`
/// (`{"m": 2, "n": 2, "coeffs": [["5", "-3"], ["-3", "2"]]}`), or polynomial
/// text such as `2*x*y - 3*x - 3*y + 5`, whose shape is then the smallest
/// that holds it. Matrix inputs are CSV. A path of `-` reads standard input.
///
/// Commands that produce a polynomial print its canonical text on the first
/// line, followed by its JSON unless `--out` names a file to hold the JSON.
#[derive(Parser)]
#[command(name = "matpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interpolating polynomial of a CSV matrix.
    Construct {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Lagrange)]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Samples a polynomial on a grid and writes `x,y,z,z_decimal` CSV.
    Sample {
        poly: PathBuf,
        /// `x0:x1,y0:y1`; defaults to the node rectangle `1:m,1:n`.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Grid points per axis, `N` or `NX,NY`.
        #[arg(long, default_value = "25")]
        steps: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DP product of two polynomials.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DP inverse of a square polynomial.
    Inverse {
        poly: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DP power; exponent 0 gives the identity polynomial.
    Power {
        poly: PathBuf,
        exponent: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `P(y, x)`.
    Transpose {
        poly: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symmetry, invertibility and power-based predicates as JSON.
    Classify {
        poly: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_PERIOD)]
        max_period: usize,
    },
    /// Rational eigenvalues and eigen-polynomials.
    Eigen {
        poly: PathBuf,
        /// `sample`: first nonzero node value is 1; `monic`: leading coefficient is 1.
        #[arg(long, value_enum, default_value_t = Normalize::Sample)]
        normalize: Normalize,
    },
    /// Characteristic polynomial.
    CharPoly { poly: PathBuf },
    /// Prints `Σ c_k P^k` for the characteristic polynomial; fails unless zero.
    CayleyHamilton { poly: PathBuf },
    /// Identity polynomial of `P_n^n`.
    Identity {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Values at the integer nodes, as CSV.
    ToMatrix {
        poly: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coordinate matrix of the map from `m x n` matrices to `P_m^n`, as CSV.
    CoordMatrix {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Order::XMajor)]
        order: Order,
        /// Print the sampling matrix (the inverse) instead.
        #[arg(long)]
        sampling: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded randomized checks of linearity, products and ring axioms.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Trials per suite; defaults to 500, 200 and 200.
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Lagrange,
    NewtonFwd,
    NewtonBwd,
    Linsys,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Normalize {
    Sample,
    Monic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    XMajor,
    YMajor,
}

enum Failure {
    Lib { context: String, error: matpoly::Error },
    Io { context: String, error: io::Error },
    Usage(String),
    Check(String),
}

type Outcome<T = ()> = Result<T, Failure>;

fn lib(context: impl Into<String>) -> impl FnOnce(matpoly::Error) -> Failure {
    let context = context.into();
    move |error| Failure::Lib { context, error }
}

fn read(path: &Path) -> Outcome<String> {
    let io_err = |error| Failure::Io {
        context: format!("reading {}", path.display()),
        error,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|error| Failure::Io {
        context: format!("writing {}", path.display()),
        error,
    })
}

fn load_poly(path: &Path) -> Outcome<BiPoly> {
    let text = read(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        BiPoly::from_json(&text)
    } else {
        BiPoly::parse(&text, None)
    };
    parsed.map_err(lib(path.display().to_string()))
}

fn emit_poly(p: &BiPoly, out: Option<&Path>) -> Outcome<String> {
    let mut s = format!("{p}\n");
    match out {
        Some(path) => write_file(path, &(p.to_json_pretty() + "\n"))?,
        None => s.push_str(&(p.to_json() + "\n")),
    }
    Ok(s)
}

fn emit_text(text: String, out: Option<&Path>) -> Outcome<String> {
    match out {
        Some(path) => write_file(path, &text).map(|_| String::new()),
        None => Ok(text),
    }
}

fn parse_steps(s: &str) -> Outcome<(usize, usize)> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Failure::Usage(format!("invalid --steps {s:?}")))
    };
    match s.split_once(',') {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => num(s).map(|v| (v, v)),
    }
}

fn run(command: Command) -> Outcome<String> {
    match command {
        Command::Construct { matrix, method, out } => {
            let a = parse_matrix_csv(&read(&matrix)?).map_err(lib(matrix.display().to_string()))?;
            let p = match method {
                Method::All => {
                    let p = construct_all(&a).map_err(|e| Failure::Check(e.to_string()))?;
                    eprintln!("all four construction methods agree");
                    p
                }
                Method::Lagrange => construct(&a, ConstructionMethod::Lagrange),
                Method::NewtonFwd => construct(&a, ConstructionMethod::NewtonForward),
                Method::NewtonBwd => construct(&a, ConstructionMethod::NewtonBackward),
                Method::Linsys => construct(&a, ConstructionMethod::LinearSystem),
            };
            emit_poly(&p, out.as_deref())
        }
        Command::Sample {
            poly,
            range,
            steps,
            out,
        } => {
            let p = load_poly(&poly)?;
            let range = match range {
                Some(r) => Range::parse(&r).map_err(lib("--range"))?,
                None => Range::nodes(&p),
            };
            let (sx, sy) = parse_steps(&steps)?;
            let grid = SurfaceGrid::sample(&p, &range, sx, sy).map_err(lib("sample"))?;
            emit_text(grid.to_csv(), out.as_deref())
        }
        Command::Product { left, right, out } => {
            let (p, q) = (load_poly(&left)?, load_poly(&right)?);
            emit_poly(&dp_product(&p, &q).map_err(lib("product"))?, out.as_deref())
        }
        Command::Inverse { poly, out } => {
            let p = load_poly(&poly)?;
            emit_poly(&dp_inverse(&p).map_err(lib("inverse"))?, out.as_deref())
        }
        Command::Power { poly, exponent, out } => {
            let p = load_poly(&poly)?;
            emit_poly(&dp_power(&p, exponent).map_err(lib("power"))?, out.as_deref())
        }
        Command::Transpose { poly, out } => emit_poly(&load_poly(&poly)?.transpose(), out.as_deref()),
        Command::Classify { poly, max_period } => {
            let report = classify(&load_poly(&poly)?, max_period).map_err(lib("classify"))?;
            Ok(serde_json::to_string_pretty(&report).expect("plain data serializes") + "\n")
        }
        Command::Eigen { poly, normalize } => {
            let p = load_poly(&poly)?;
            let cp = char_poly_of(&p).map_err(lib("eigen"))?;
            let mut s = format!("characteristic polynomial: {cp}\n");
            for pair in eigen_pairs(&p).map_err(lib("eigen"))? {
                let mut x = pair.eigen_poly;
                if normalize == Normalize::Monic {
                    let lead = x.coeffs().iter().rev().find(|c| !c.is_zero()).expect("nonzero").clone();
                    x = x.scale(&lead.recip().expect("nonzero"));
                }
                s.push_str(&format!("λ = {}: {x}\n", pair.value));
            }
            Ok(s)
        }
        Command::CharPoly { poly } => {
            let cp = char_poly_of(&load_poly(&poly)?).map_err(lib("char-poly"))?;
            Ok(format!("{cp}\n"))
        }
        Command::CayleyHamilton { poly } => {
            let r = cayley_hamilton_residual(&load_poly(&poly)?).map_err(lib("cayley-hamilton"))?;
            if r.is_zero() {
                Ok(format!("{r}\n"))
            } else {
                Err(Failure::Check(format!("nonzero residual {r}")))
            }
        }
        Command::Identity { n, out } => emit_poly(&identity_poly(n).map_err(lib("identity"))?, out.as_deref()),
        Command::ToMatrix { poly, out } => emit_text(write_matrix_csv(&to_matrix(&load_poly(&poly)?)), out.as_deref()),
        Command::CoordMatrix {
            m,
            n,
            order,
            sampling,
            out,
        } => {
            let order = match order {
                Order::XMajor => MonomialOrder::XMajor,
                Order::YMajor => MonomialOrder::YMajor,
            };
            let c = if sampling {
                sampling_matrix_in(m, n, order)
            } else {
                coordinate_matrix_in(m, n, order)
            };
            emit_text(write_matrix_csv(&c.map_err(lib("coord-matrix"))?), out.as_deref())
        }
        Command::Verify { seed, trials } => {
            let reports = [
                check_linearity(trials.unwrap_or(500), 6, 6, seed),
                check_product_structure(trials.unwrap_or(200), 5, seed),
                check_ring_axioms(trials.unwrap_or(200), 4, seed),
            ];
            let json = serde_json::to_string_pretty(&reports).expect("plain data serializes") + "\n";
            if reports.iter().all(|r| r.passed()) {
                Ok(json)
            } else {
                print!("{json}");
                Err(Failure::Check("randomized checks failed".to_string()))
            }
        }
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Lib { error, .. } => match error.kind() {
            ErrorKind::Shape => EXIT_SHAPE,
            ErrorKind::Singular => EXIT_SINGULAR,
            ErrorKind::Parse => EXIT_PARSE,
            ErrorKind::Argument => EXIT_USAGE,
        },
        Failure::Usage(_) => EXIT_USAGE,
        Failure::Io { .. } | Failure::Check(_) => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(EXIT_FAILURE);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Lib { context, error } => eprintln!("error: {context}: {error}"),
                Failure::Io { context, error } => eprintln!("error: {context}: {error}"),
                Failure::Usage(msg) | Failure::Check(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use matpoly::Rat;

    #[test]
    fn steps_forms() {
        assert!(matches!(parse_steps("25"), Ok((25, 25))));
        assert!(matches!(parse_steps("3, 4"), Ok((3, 4))));
        assert!(parse_steps("x").is_err());
    }

    #[test]
    fn exit_codes() {
        let f = |error| Failure::Lib {
            context: String::new(),
            error,
        };
        assert_eq!(exit_code(&f(matpoly::Error::Singular { column: 0 })), EXIT_SINGULAR);
        assert_eq!(exit_code(&f(matpoly::Error::InvalidShape(String::new()))), EXIT_SHAPE);
        assert_eq!(exit_code(&f(Rat::from_fraction_str("1/0").unwrap_err())), EXIT_PARSE);
    }
}
