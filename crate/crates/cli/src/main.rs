use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use witten_count::asymptotics::{divisor_residual, main_term_parts, residual_series, Precision};
use witten_count::forms::{count_under, exponent_fit, HomogeneousForm};
use witten_count::grid::{parse_count, parse_grid_lines, GridSpec};
use witten_count::lattice::{divisor_summatory, rep_count_r, rho, summatory, CountMethod};
use witten_count::quadrature::{f_expansion_check, f_zero, identity_rhs, zeta_half_integral};
use witten_count::witten_zeta::{zeta_su3_direct, zeta_su3_via_rho};
use witten_count::{asymptotics::constants, Error};

const THREADS_VAR: &str = "WITTEN_COUNT_THREADS";

#[derive(Parser)]
#[command(name = "witten-count", version, about = "Counting su(3) representations by dimension")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Hyperbola,
}

impl From<Method> for CountMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Brute => CountMethod::Brute,
            Method::Hyperbola => CountMethod::Hyperbola,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ZetaOrder {
    /// Sum over lattice points in fixed chunks.
    Direct,
    /// Sum rho(n) n^(-s) over dimensions.
    ByDimension,
}

fn count(s: &str) -> Result<u64, Error> {
    parse_count(s)
}

fn index(s: &str) -> Result<usize, Error> {
    let v = parse_count(s)?;
    usize::try_from(v).map_err(|_| Error::InvalidArgument(format!("{v} is too large")))
}

#[derive(Subcommand)]
enum Command {
    /// Number of su(3) irreps of dimension N.
    Rho {
        #[arg(value_parser = count)]
        n: u64,
    },
    /// Number of irreps of dimension at most X.
    Sum {
        #[arg(value_parser = count)]
        x: u64,
        #[arg(long, value_enum, default_value_t = Method::Hyperbola)]
        method: Method,
    },
    /// Residuals against the two-term expansion over a grid.
    Residuals {
        /// `x_min:x_max:points_per_decade`, e.g. `1e2:1e10:25`.
        #[arg(long, required_unless_present = "grid_file", conflicts_with = "grid_file")]
        grid: Option<GridSpec>,
        /// File with one x per line, strictly increasing.
        #[arg(long)]
        grid_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Hyperbola)]
        method: Method,
    },
    /// The two main terms c1 x^(2/3) and c2 x^(1/2).
    Asym { x: f64 },
    /// F(0) by quadrature against its closed form.
    Identity {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// F(y) and its deviation from the two-term small-y expansion.
    Fexp { y: f64 },
    /// zeta(1/2) from the fractional-part integral truncated at T.
    ZetaHalf {
        #[arg(value_parser = count)]
        t: u64,
    },
    /// Witten zeta function of su(3) with a rigorous tail bound.
    Wzeta {
        s: f64,
        #[arg(long, value_parser = count)]
        cutoff: u64,
        #[arg(long, value_enum, default_value_t = ZetaOrder::Direct)]
        order: ZetaOrder,
    },
    /// Dirichlet divisor problem residual.
    Divisor {
        #[arg(value_parser = count)]
        x: u64,
    },
    /// Lattice points with P(m, n) <= X for a form `d:D:a_0,...,a_d` or a preset.
    CountForm {
        form: HomogeneousForm,
        #[arg(value_parser = count)]
        x: u64,
    },
    /// Log-log growth exponent of a form's counting function.
    FitForm {
        form: HomogeneousForm,
        #[arg(long)]
        grid: GridSpec,
    },
    /// Number of representations of dimension n, for n = 0..=N.
    RepCount {
        #[arg(value_parser = index)]
        n: usize,
    },
}

enum Cell {
    Int(u64),
    /// Integers that may not fit in a JSON number.
    Big(String),
    Real(f64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
            Cell::Real(v) => format!("{v:.16e}"),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Big(s) | Cell::Text(s) => Value::from(s.as_str()),
            Cell::Real(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
        }
    }
}

struct Table {
    header: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(header: &'static [&'static str]) -> Self {
        Self { header, rows: Vec::new() }
    }

    fn row(mut self, cells: Vec<Cell>) -> Self {
        self.push(cells);
        self
    }

    fn push(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(&mut *out);
                w.write_record(self.header)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.flush()?;
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .header
                            .iter()
                            .zip(row)
                            .map(|(k, c)| (k.to_string(), c.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &rows)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

fn precision_cell(x: u64) -> Cell {
    Cell::Text(Precision::for_x(x).as_str().to_string())
}

fn run(command: Command) -> Result<Table, Error> {
    use Cell::*;
    Ok(match command {
        Command::Rho { n } => Table::new(&["n", "rho"]).row(vec![Int(n), Int(rho(n)?)]),
        Command::Sum { x, method } => {
            Table::new(&["x", "count"]).row(vec![Int(x), Int(summatory(x, method.into())?)])
        }
        Command::Residuals { grid, grid_file, method } => {
            let xs = match (grid, grid_file) {
                (Some(spec), _) => spec.points(),
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
                    })?;
                    parse_grid_lines(&text)?
                }
                (None, None) => unreachable!("clap requires one grid source"),
            };
            let mut table = Table::new(&[
                "x",
                "count",
                "main_term_23",
                "main_term_12",
                "residual",
                "scaled_residual",
                "method",
                "precision",
            ]);
            for r in residual_series(&xs, method.into())? {
                table.push(vec![
                    Int(r.x),
                    Int(r.exact_count),
                    Real(r.main_term_23),
                    Real(r.main_term_12),
                    Real(r.residual),
                    Real(r.scaled_residual),
                    Text(r.method.as_str().to_string()),
                    Text(r.precision.as_str().to_string()),
                ]);
            }
            table
        }
        Command::Asym { x } => {
            let (t23, t12) = main_term_parts(x)?;
            Table::new(&["x", "main_term_23", "main_term_12", "main_terms"])
                .row(vec![Real(x), Real(t23), Real(t12), Real(t23 + t12)])
        }
        Command::Identity { tol } => {
            if !(tol > 0.0) {
                return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
            }
            let lhs = f_zero(tol)?;
            let rhs = identity_rhs();
            Table::new(&["lhs", "rhs", "abs_diff", "error_estimate", "subdivisions"]).row(vec![
                Real(lhs.value),
                Real(rhs),
                Real((lhs.value - rhs).abs()),
                Real(lhs.error_estimate),
                Int(lhs.subdivisions as u64),
            ])
        }
        Command::Fexp { y } => {
            let c = f_expansion_check(y)?;
            Table::new(&["y", "f_y", "deviation", "bound"])
                .row(vec![Real(c.y), Real(c.f_y), Real(c.deviation), Real(y.powf(3.5))])
        }
        Command::ZetaHalf { t } => {
            let v = zeta_half_integral(t)?;
            let reference = constants().zeta_half.value;
            Table::new(&["t", "value", "reference", "abs_error"])
                .row(vec![Int(t), Real(v), Real(reference), Real((v - reference).abs())])
        }
        Command::Wzeta { s, cutoff, order } => {
            let e = match order {
                ZetaOrder::Direct => zeta_su3_direct(s, cutoff)?,
                ZetaOrder::ByDimension => zeta_su3_via_rho(s, cutoff)?,
            };
            Table::new(&["s", "cutoff", "partial_sum", "tail_bound", "upper", "points"]).row(vec![
                Real(e.s),
                Int(e.dim_cutoff),
                Real(e.partial_sum),
                Real(e.tail_bound),
                Real(e.upper()),
                Int(e.points_included),
            ])
        }
        Command::Divisor { x } => Table::new(&["x", "count", "residual", "precision"]).row(vec![
            Int(x),
            Int(divisor_summatory(x)?),
            Real(divisor_residual(x)?),
            precision_cell(x),
        ]),
        Command::CountForm { form, x } => Table::new(&["form", "x", "count"])
            .row(vec![Text(form.to_string()), Int(x), Int(count_under(&form, x)?)]),
        Command::FitForm { form, grid } => {
            let fit = exponent_fit(&form, &grid.points())?;
            Table::new(&["form", "slope", "intercept", "r_squared", "points"]).row(vec![
                Text(form.to_string()),
                Real(fit.slope),
                Real(fit.intercept),
                Real(fit.r_squared),
                Int(fit.grid.len() as u64),
            ])
        }
        Command::RepCount { n } => {
            let mut table = Table::new(&["n", "r"]);
            for (i, r) in rep_count_r(n).into_iter().enumerate() {
                table.push(vec![Int(i as u64), Big(r.to_string())]);
            }
            table
        }
    })
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let table = match run(cli.command) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match table.write(cli.format, &mut out).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
