//! Command-line front end. Exit codes: 0 success, 1 a verification check
//! failed, 2 usage or invalid input, 3 I/O.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{catalog, lookup, parse_spec};
use crate::error::{Error, Result};
use crate::group::{build_group, verify_sqrt_properties, GroupTable};
use crate::io::{read_json, state_from_json, to_json, wigner_csv, write_text, GroupJson, IrrepSetJson, Pair, WignerJson};
use crate::report::{verify_all, verify_group, SuiteOptions, VerificationReport, ABELIAN_TOLERANCE, NONABELIAN_TOLERANCE};
use crate::repr::{compute_irreps, irrep_residuals, momentum_basis, IrrepSet};
use crate::wigner::{
    extended_wigner, marginal_momentum, marginal_position, momentum_wavefunction, phase_point_operator, wigner,
    StateVector, Variant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "groupwigner", version, about = "Wigner distributions on finite groups of odd order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build, validate and inspect groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Compute and check unitary irreps.
    #[command(subcommand)]
    Irreps(IrrepsCmd),
    /// Wigner distributions, marginals and phase-point operators.
    #[command(subcommand)]
    Wigner(WignerCmd),
    /// The built-in groups.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Run the full identity suite over every catalog group.
    VerifyAll(SuiteArgs),
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Build a group from an expression such as `C3xC5` or `sd(C7,C3,[0,2,4,6,1,3,5])`.
    Make {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a group file and run the square-root identities.
    Verify { file: PathBuf },
    /// Print the unique square root of an element.
    Sqrt {
        file: PathBuf,
        #[arg(long)]
        element: usize,
    },
}

#[derive(Subcommand, Debug)]
enum IrrepsCmd {
    Compute {
        /// Group file, catalog name or expression.
        group: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the residual table of the irrep axioms for a saved irrep file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "extended")]
    Extended,
}

#[derive(Subcommand, Debug)]
enum WignerCmd {
    Compute {
        #[arg(long)]
        group: String,
        #[arg(long)]
        state: PathBuf,
        #[arg(long, value_enum, default_value = "I")]
        variant: VariantArg,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the diagonal entries as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the identity suite on one group.
    Verify {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Position and momentum marginals of a state.
    Marginals {
        #[arg(long)]
        group: String,
        #[arg(long)]
        state: PathBuf,
        #[arg(long, value_enum, default_value = "I")]
        variant: VariantArg,
    },
    /// Print the phase-point operator at `(g; j m m')` as a JSON matrix.
    Ppo {
        #[arg(long)]
        group: String,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        mp: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
}

#[derive(Args, Debug, Clone)]
struct SuiteArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 100)]
    extended_trials: usize,
    #[arg(long)]
    tolerance: Option<f64>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

impl SuiteArgs {
    fn options(&self) -> SuiteOptions {
        SuiteOptions {
            seed: self.seed,
            trials: self.trials,
            extended_trials: self.extended_trials,
            tolerance: self.tolerance,
        }
    }
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code. Reports go to `out`, errors to stderr.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// A group argument is a path to a group or irrep file when such a file
/// exists, otherwise a catalog name or expression.
fn load_group(arg: &str) -> Result<GroupTable> {
    let path = Path::new(arg);
    if path.is_file() {
        let value: serde_json::Value = read_json(path)?;
        let group = if value.get("irreps").is_some() { value["group"].clone() } else { value };
        let parsed: GroupJson = serde_json::from_value(group).map_err(|e| Error::Parse(e.to_string()))?;
        return parsed.into_group();
    }
    if let Some(entry) = lookup(arg) {
        return Ok(entry.build());
    }
    build_group(&parse_spec(arg)?)
}

fn load_state(path: &Path, n: usize) -> Result<StateVector> {
    let pairs: Vec<Pair> = read_json(path)?;
    let raw = state_from_json(&pairs);
    raw.check_len(n)?;
    StateVector::normalized(raw.psi)
}

fn report_code(report: &VerificationReport) -> i32 {
    if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn print_report(out: &mut dyn Write, report: &VerificationReport, json: bool) -> Result<i32> {
    emit(out, &if json { to_json(report) } else { report.render() })?;
    Ok(report_code(report))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Group(cmd) => group_cmd(cmd, out),
        Command::Irreps(cmd) => irreps_cmd(cmd, out),
        Command::Wigner(cmd) => wigner_cmd(cmd, out),
        Command::Catalog(CatalogCmd::List) => {
            let mut text = format!("{:<8} {:>5}  {}\n", "name", "order", "abelian");
            for e in catalog() {
                text += &format!("{:<8} {:>5}  {}\n", e.name, e.order, if e.abelian { "yes" } else { "no" });
            }
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::VerifyAll(args) => print_report(out, &verify_all(&args.options())?, args.json),
    }
}

fn group_cmd(cmd: GroupCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        GroupCmd::Make { spec, out: path } => {
            let group = load_group(&spec)?;
            let text = to_json(&GroupJson::from_group(&group));
            match path {
                Some(p) => write_text(&p, &text)?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        GroupCmd::Verify { file } => {
            let group = read_json::<GroupJson>(&file)?.into_group()?;
            let classes = group.conjugacy_classes();
            let mut text = format!(
                "order {}, {}, {} conjugacy classes (sizes {:?})\n",
                group.order(),
                if group.is_abelian() { "abelian" } else { "nonabelian" },
                classes.len(),
                classes.iter().map(Vec::len).collect::<Vec<_>>()
            );
            text += "group axioms: PASS\n";
            if !group.is_odd() {
                text += "even order: square-root identities not applicable\n";
                emit(out, &text)?;
                return Ok(EXIT_OK);
            }
            let report = verify_sqrt_properties(&group)?;
            for c in &report.checks {
                text += &format!("{:<40} failures {:>4}  {}\n", c.name, c.failures, if c.failures == 0 { "PASS" } else { "FAIL" });
            }
            emit(out, &text)?;
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        GroupCmd::Sqrt { file, element } => {
            let group = read_json::<GroupJson>(&file)?.into_group()?;
            if element >= group.order() {
                return Err(Error::OutOfRange { index: element, bound: group.order() });
            }
            let s = group.sqrt(element)?;
            emit(out, &format!("{s} {}", group.name(s)))?;
            Ok(EXIT_OK)
        }
    }
}

fn irreps_cmd(cmd: IrrepsCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        IrrepsCmd::Compute { group, out: path } => {
            let set = compute_irreps(&load_group(&group)?)?;
            let text = to_json(&IrrepSetJson::from_set(&set));
            match path {
                Some(p) => write_text(&p, &text)?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        IrrepsCmd::Verify { file, tolerance } => {
            let set = read_json::<IrrepSetJson>(&file)?.into_set()?;
            let tol = tolerance.unwrap_or(default_tolerance(&set));
            let r = irrep_residuals(&set);
            let rows = [
                ("identity", r.identity),
                ("composition", r.composition),
                ("unitarity", r.unitarity),
                ("orthogonality", r.orthogonality),
                ("completeness", r.completeness),
            ];
            let mut text = format!("dimensions {:?}\n", set.dims());
            let mut ok = r.dimension_sum_ok;
            for (name, value) in rows {
                let pass = value <= tol;
                ok &= pass;
                text += &format!("{name:<14} {value:>10.3e}  {}\n", if pass { "PASS" } else { "FAIL" });
            }
            text += &format!("dimension sum  {}\n", if r.dimension_sum_ok { "PASS" } else { "FAIL" });
            emit(out, &text)?;
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn default_tolerance(set: &IrrepSet) -> f64 {
    if set.group().is_abelian() {
        ABELIAN_TOLERANCE
    } else {
        NONABELIAN_TOLERANCE
    }
}

fn plain_variant(v: VariantArg) -> Result<Variant> {
    match v {
        VariantArg::I => Ok(Variant::I),
        VariantArg::II => Ok(Variant::II),
        VariantArg::Extended => Err(Error::Parse("the extended distribution has no marginals command".into())),
    }
}

fn wigner_cmd(cmd: WignerCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        WignerCmd::Compute { group, state, variant, out: path, csv } => {
            let irreps = compute_irreps(&load_group(&group)?)?;
            let psi = load_state(&state, irreps.group().order())?;
            let text = match variant {
                VariantArg::Extended => {
                    if csv.is_some() {
                        return Err(Error::Parse("CSV export covers variants I and II only".into()));
                    }
                    to_json(&WignerJson::from_extended(&extended_wigner(&psi, &irreps)?))
                }
                v => {
                    let w = wigner(&psi, &irreps, plain_variant(v)?)?;
                    if let Some(p) = csv {
                        write_text(&p, &wigner_csv(&w))?;
                    }
                    to_json(&WignerJson::from_tensor(&w))
                }
            };
            match path {
                Some(p) => write_text(&p, &text)?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        WignerCmd::Verify { group, suite } => {
            let entries = verify_group(&group, &load_group(&group)?, &suite.options(), 0)?;
            let report = VerificationReport { seed: suite.seed, trials: suite.trials, entries };
            print_report(out, &report, suite.json)
        }
        WignerCmd::Marginals { group, state, variant } => {
            let irreps = compute_irreps(&load_group(&group)?)?;
            let group = irreps.group();
            let psi = load_state(&state, group.order())?;
            let variant = plain_variant(variant)?;
            let w = wigner(&psi, &irreps, variant)?;
            let mut text = String::from("position marginal\n");
            for (g, p) in marginal_position(&w).iter().enumerate() {
                text += &format!("  {:>3} {:<10} {p:.12}\n", g, group.name(g));
            }
            text += "momentum marginal (diagonal)\n";
            for (j, m) in marginal_momentum(&w).iter().enumerate() {
                let diag: Vec<String> = (0..m.nrows()).map(|k| format!("{:.12}", m[(k, k)].re)).collect();
                text += &format!("  j={j:<3} {}\n", diag.join(" "));
            }
            let mw = momentum_wavefunction(&psi, &momentum_basis(&irreps));
            text += &format!("momentum norm {:.12}\n", mw.norm_sqr());
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        WignerCmd::Ppo { group, g, j, m, mp } => {
            let irreps = compute_irreps(&load_group(&group)?)?;
            let op = phase_point_operator(g, j, m, mp, &irreps)?;
            let rows: Vec<Vec<Pair>> = (0..op.matrix.nrows())
                .map(|r| (0..op.matrix.ncols()).map(|c| [op.matrix[(r, c)].re, op.matrix[(r, c)].im]).collect())
                .collect();
            emit(out, &to_json(&rows))?;
            Ok(EXIT_OK)
        }
    }
}
