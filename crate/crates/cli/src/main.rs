//! Command-line front end for the non-overlapping matrix-code library.
//!
//! Exit codes: 0 success or property verified, 1 mathematical negative
//! (overlap found, table mismatch), 2 usage or input error, 3 comparison
//! budget exceeded, 4 internal method disagreement.

mod tables;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nonoverlap::{
    b_series, code_size_fib, code_size_product, d_term, enumerate_code, kgen_fib_series, r_series,
    serialize_matrix, union_overlap_probe, verify_code, z_series, CodeParams, Count, Error,
    RMethod, DEFAULT_COMPARISON_BUDGET,
};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "nonoverlap",
    version,
    about = "Build, count and verify non-overlapping binary matrix codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one sequence table: n and the exact term, one row per n.
    Seq {
        /// Sequence family.
        #[arg(long, value_enum)]
        kind: SeqKindArg,
        /// Order (f) or forbidden run length (d, r, b, z).
        #[arg(long)]
        k: usize,
        /// Largest index to print.
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Count the family with parameters (k, m, n, h).
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Left padding of ones; 0 is the base family.
        #[arg(long, default_value_t = 0)]
        h: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Product, conflicts_with = "all")]
        method: CountMethod,
        /// Run every applicable method and report agreement.
        #[arg(long)]
        all: bool,
        #[arg(long = "max-comparisons", default_value_t = DEFAULT_COMPARISON_BUDGET)]
        max_comparisons: u64,
    },
    /// Generate family members in the matrix text format.
    Gen {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        h: usize,
        /// Emit only the first LIMIT matrices of the enumeration order.
        #[arg(long)]
        limit: Option<u64>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long = "max-comparisons", default_value_t = DEFAULT_COMPARISON_BUDGET)]
        max_comparisons: u64,
    },
    /// Check that a file of matrices is a non-overlapping set.
    Verify {
        input: PathBuf,
        #[arg(long = "max-comparisons", default_value_t = DEFAULT_COMPARISON_BUDGET)]
        max_comparisons: u64,
    },
    /// Search two families for an overlapping pair.
    Witness {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        m1: usize,
        #[arg(long)]
        n1: usize,
        #[arg(long, default_value_t = 0)]
        h1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        m2: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, default_value_t = 0)]
        h2: usize,
        #[arg(long = "max-comparisons", default_value_t = DEFAULT_COMPARISON_BUDGET)]
        max_comparisons: u64,
    },
    /// Recompute the embedded sequence tables and the linking identities.
    CheckTables {
        /// Upper index for the identity and agreement checks.
        #[arg(long = "n-max", default_value_t = 100)]
        n_max: usize,
        /// Self-test hook: corrupt one embedded cell ("r:3:6" or "b:4:10")
        /// before checking, which must make the run fail.
        #[arg(long = "corrupt-cell", hide = true)]
        corrupt_cell: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeqKindArg {
    F,
    D,
    R,
    B,
    Z,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Tsv,
    Csv,
}

impl OutputFormat {
    fn sep(self) -> char {
        match self {
            OutputFormat::Tsv => '\t',
            OutputFormat::Csv => ',',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Product,
    Fib,
    Enumerate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Seq {
            kind,
            k,
            n_max,
            format,
        } => cmd_seq(kind, k, n_max, format),
        Command::Count {
            k,
            m,
            n,
            h,
            method,
            all,
            max_comparisons,
        } => cmd_count(k, m, n, h, method, all, max_comparisons),
        Command::Gen {
            k,
            m,
            n,
            h,
            limit,
            output,
            max_comparisons,
        } => cmd_gen(k, m, n, h, limit, output, max_comparisons),
        Command::Verify {
            input,
            max_comparisons,
        } => cmd_verify(&input, max_comparisons),
        Command::Witness {
            k1,
            m1,
            n1,
            h1,
            k2,
            m2,
            n2,
            h2,
            max_comparisons,
        } => cmd_witness((k1, m1, n1, h1), (k2, m2, n2, h2), max_comparisons),
        Command::CheckTables {
            n_max,
            corrupt_cell,
        } => cmd_check_tables(n_max, corrupt_cell.as_deref()),
    };
    ExitCode::from(code)
}

fn fail(code: u8, err: impl std::fmt::Display) -> u8 {
    eprintln!("error: {err}");
    code
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn cmd_seq(kind: SeqKindArg, k: usize, n_max: usize, format: OutputFormat) -> u8 {
    let values: Vec<String> = match kind {
        SeqKindArg::F => match kgen_fib_series::<Count>(k, n_max) {
            Ok(v) => v.iter().map(Count::to_string).collect(),
            Err(e) => return fail(EXIT_USAGE, e),
        },
        SeqKindArg::D => {
            let mut v = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                match d_term(k, n) {
                    Ok(d) => v.push(d.to_string()),
                    Err(e) => return fail(EXIT_USAGE, e),
                }
            }
            v
        }
        SeqKindArg::R => match r_series::<Count>(k, n_max, RMethod::FibCorrected) {
            Ok(v) => v.iter().map(Count::to_string).collect(),
            Err(e) => return fail(EXIT_USAGE, e),
        },
        SeqKindArg::B => match b_series::<Count>(k, n_max) {
            Ok(v) => v.iter().map(Count::to_string).collect(),
            Err(e) => return fail(EXIT_USAGE, e),
        },
        SeqKindArg::Z => match z_series::<Count>(k, n_max) {
            Ok(v) => v.iter().map(Count::to_string).collect(),
            Err(e) => return fail(EXIT_USAGE, e),
        },
    };
    let sep = format.sep();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for (n, value) in values.iter().enumerate() {
        writeln!(out, "{n}{sep}{value}").expect("write to stdout");
    }
    EXIT_OK
}

fn cmd_count(
    k: usize,
    m: usize,
    n: usize,
    h: usize,
    method: CountMethod,
    all: bool,
    max_comparisons: u64,
) -> u8 {
    let params = match CodeParams::new(k, m, n, h) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let product = match code_size_product(&params) {
        Ok(v) => v,
        Err(e) => return fail(exit_code_for(&e), e),
    };
    let enumerate_within_budget = product <= Count::from(max_comparisons);

    if all {
        let mut computed = vec![("product", product.clone())];
        if h == 0 {
            match code_size_fib(&params) {
                Ok(v) => computed.push(("fib", v)),
                Err(e) => return fail(exit_code_for(&e), e),
            }
        }
        if enumerate_within_budget {
            let streamed = match enumerate_code(&params) {
                Ok(stream) => stream.count(),
                Err(e) => return fail(exit_code_for(&e), e),
            };
            computed.push(("enumerate", Count::from(streamed)));
        }
        for (name, value) in &computed {
            println!("{name}\t{value}");
        }
        if !enumerate_within_budget {
            println!("enumerate\tskipped (needs {product} matrices, budget {max_comparisons})");
        }
        if computed.iter().all(|(_, v)| *v == product) {
            println!("AGREE");
            EXIT_OK
        } else {
            println!("DISAGREE");
            EXIT_DISAGREE
        }
    } else {
        match method {
            CountMethod::Product => {
                println!("{product}");
                EXIT_OK
            }
            CountMethod::Fib => match code_size_fib(&params) {
                Ok(v) => {
                    println!("{v}");
                    EXIT_OK
                }
                Err(e) => fail(EXIT_USAGE, e),
            },
            CountMethod::Enumerate => {
                if !enumerate_within_budget {
                    return fail(
                        EXIT_BUDGET,
                        format!(
                            "enumeration needs {product} matrices, budget is {max_comparisons}"
                        ),
                    );
                }
                match enumerate_code(&params) {
                    Ok(stream) => {
                        println!("{}", stream.count());
                        EXIT_OK
                    }
                    Err(e) => fail(exit_code_for(&e), e),
                }
            }
        }
    }
}

fn cmd_gen(
    k: usize,
    m: usize,
    n: usize,
    h: usize,
    limit: Option<u64>,
    output: Option<PathBuf>,
    max_comparisons: u64,
) -> u8 {
    let params = match CodeParams::new(k, m, n, h) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let total = match code_size_product(&params) {
        Ok(v) => v,
        Err(e) => return fail(exit_code_for(&e), e),
    };
    let emit = match limit {
        Some(l) => total.clone().min(Count::from(l)),
        None => total.clone(),
    };
    if emit > Count::from(max_comparisons) {
        return fail(
            EXIT_BUDGET,
            format!("would emit {emit} matrices, budget is {max_comparisons}"),
        );
    }
    let emit: u64 = emit.try_into().expect("bounded by the u64 budget");

    let stream = match enumerate_code(&params) {
        Ok(s) => s,
        Err(e) => return fail(exit_code_for(&e), e),
    };
    let result = match &output {
        Some(path) => {
            let file = match fs::File::create(path) {
                Ok(f) => f,
                Err(e) => return fail(EXIT_USAGE, format!("{}: {e}", path.display())),
            };
            write_matrices(BufWriter::new(file), stream, emit)
        }
        None => {
            let stdout = io::stdout();
            write_matrices(BufWriter::new(stdout.lock()), stream, emit)
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let target = output.as_ref().map_or_else(
                || "standard output".to_string(),
                |p| p.display().to_string(),
            );
            fail(EXIT_USAGE, format!("{target}: {e}"))
        }
    }
}

fn write_matrices(
    mut out: impl Write,
    stream: impl Iterator<Item = nonoverlap::BitMatrix>,
    emit: u64,
) -> io::Result<()> {
    for (i, matrix) in stream.take(emit as usize).enumerate() {
        if i > 0 {
            out.write_all(b"\n")?;
        }
        out.write_all(serialize_matrix(&matrix).as_bytes())?;
    }
    out.flush()
}

fn cmd_verify(input: &PathBuf, max_comparisons: u64) -> u8 {
    let text = match fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_USAGE, format!("{}: {e}", input.display())),
    };
    let matrices = match nonoverlap::parse_matrices(&text) {
        Ok(ms) => ms,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let report = match verify_code(&matrices, max_comparisons) {
        Ok(r) => r,
        Err(e) => return fail(exit_code_for(&e), e),
    };
    if report.passed() {
        println!("OK {} matrices", report.matrix_count);
        EXIT_OK
    } else {
        for (i, w) in &report.self_failures {
            println!(
                "self {i} dr={} dc={} window={}x{}",
                w.row_offset, w.col_offset, w.window_rows, w.window_cols
            );
        }
        for (i, j, w) in &report.pair_failures {
            println!(
                "pair {i} {j} dr={} dc={} window={}x{}",
                w.row_offset, w.col_offset, w.window_rows, w.window_cols
            );
        }
        EXIT_NEGATIVE
    }
}

fn cmd_witness(
    left: (usize, usize, usize, usize),
    right: (usize, usize, usize, usize),
    max_comparisons: u64,
) -> u8 {
    let p1 = match CodeParams::new(left.0, left.1, left.2, left.3) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_USAGE, format!("first family: {e}")),
    };
    let p2 = match CodeParams::new(right.0, right.1, right.2, right.3) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_USAGE, format!("second family: {e}")),
    };
    match union_overlap_probe(&p1, &p2, max_comparisons) {
        Ok(None) => {
            println!("none");
            EXIT_OK
        }
        Ok(Some(hit)) => {
            let w = hit.witness;
            println!(
                "pair {} {} dr={} dc={} window={}x{}",
                hit.left_index,
                hit.right_index,
                w.row_offset,
                w.col_offset,
                w.window_rows,
                w.window_cols
            );
            print!("{}", serialize_matrix(&hit.left));
            println!();
            print!("{}", serialize_matrix(&hit.right));
            EXIT_NEGATIVE
        }
        Err(e) => fail(exit_code_for(&e), e),
    }
}

fn cmd_check_tables(n_max: usize, corrupt_cell: Option<&str>) -> u8 {
    let mut r_table = tables::R_TABLE;
    let mut b_table = tables::B_TABLE;
    if let Some(spec) = corrupt_cell {
        match parse_corruption(spec) {
            Some((table, col, n)) => {
                if table == 'r' {
                    r_table[n][col] += 1;
                } else {
                    b_table[n][col] += 1;
                }
            }
            None => {
                return fail(
                    EXIT_USAGE,
                    format!("bad --corrupt-cell {spec:?}, expected e.g. \"r:3:6\""),
                )
            }
        }
    }

    // Embedded tables against the recurrences.
    for (col, &k) in tables::TABLE_K.iter().enumerate() {
        let r = r_series::<Count>(k, 15, RMethod::Signed).expect("k >= 3");
        let b = b_series::<Count>(k, 15).expect("k >= 3");
        for n in 0..=15usize {
            if r[n] != Count::from(r_table[n][col]) {
                println!(
                    "table r cell k={k} n={n}: embedded {}, computed {}",
                    r_table[n][col], r[n]
                );
                return EXIT_NEGATIVE;
            }
            if b[n] != Count::from(b_table[n][col]) {
                println!(
                    "table b cell k={k} n={n}: embedded {}, computed {}",
                    b_table[n][col], b[n]
                );
                return EXIT_NEGATIVE;
            }
        }
    }

    // Linking identities and the three-way r agreement.
    for k in 3..=10usize {
        let f = kgen_fib_series::<Count>(k - 1, n_max.max(1) - 1).expect("k >= 3");
        let b = b_series::<Count>(k, n_max).expect("k >= 3");
        let z = z_series::<Count>(k, n_max).expect("k >= 3");
        let r = r_series::<Count>(k, n_max, RMethod::FibCorrected).expect("k >= 3");
        let two = Count::from(2u32);
        for n in 1..=n_max {
            let d = Count::from(d_term(k, n).expect("k >= 2"));
            if b[n] != two.clone() * f[n - 1].clone()
                || z[n] != f[n - 1]
                || two.clone() * r[n].clone() != f[n - 1].clone() + d
            {
                println!("identity failure at k={k} n={n}");
                return EXIT_NEGATIVE;
            }
        }
    }
    for k in 3..=16usize {
        let a = r_series::<Count>(k, n_max, RMethod::Pyramidal).expect("k >= 3");
        let b = r_series::<Count>(k, n_max, RMethod::Signed).expect("k >= 3");
        let c = r_series::<Count>(k, n_max, RMethod::FibCorrected).expect("k >= 3");
        for n in 0..=n_max {
            if a[n] != b[n] || b[n] != c[n] {
                println!("r-method disagreement at k={k} n={n}");
                return EXIT_NEGATIVE;
            }
        }
    }

    println!("tables: 96+96 cells OK; identities OK");
    EXIT_OK
}

fn parse_corruption(spec: &str) -> Option<(char, usize, usize)> {
    let mut parts = spec.split(':');
    let table = match parts.next()? {
        "r" => 'r',
        "b" => 'b',
        _ => return None,
    };
    let k: usize = parts.next()?.parse().ok()?;
    let n: usize = parts.next()?.parse().ok()?;
    if parts.next().is_some() || n > 15 {
        return None;
    }
    let col = tables::TABLE_K.iter().position(|&tk| tk == k)?;
    Some((table, col, n))
}
