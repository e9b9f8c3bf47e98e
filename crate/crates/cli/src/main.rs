//! Command-line front end for the Alexander invariant library.

mod files;

use std::io::Read;
use std::process::ExitCode;

use alex_core::{
    catalog, fox_milnor_witness, AribbonError, ClassicalSeifertMatrix, LaurentPoly, ModuleError,
    ModulePresentation, SeifertError, DEFAULT_DEGREE_BOUND,
};
use clap::{Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;

use files::Input;

const EXIT_NO_WITNESS: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NONZERO_LK: u8 = 3;
const EXIT_ZERO_DET: u8 = 4;
const EXIT_OTHER: u8 = 5;

#[derive(Parser)]
#[command(name = "alex", about = "Alexander invariants of ribbon 2-knots", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the canonical Alexander polynomial of an input file
    Alexander {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search for a Fox-Milnor witness g with p ~ g(t) g(1/t)
    Factorize {
        /// Polynomial text; read from --input when omitted
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        max_degree: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Report linkings condition, concentricity and homology of a presentation
    Check {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the mirror-sum decomposition obstruction
    Obstruct {
        #[arg(long, default_value = "-")]
        input: String,
        /// Evaluation points, e.g. --eval=-1,1
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        eval: Vec<i64>,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        max_degree: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write the Seifert pair of a spun catalog knot or Seifert matrix file
    Spun {
        /// Catalog knot name, or a path when --matrix is set
        name: String,
        /// Treat NAME as a file holding a seifert_pair whose v_plus is the matrix
        #[arg(long)]
        matrix: bool,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Write the mirror image of a module presentation
    Mirror {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Write the block-diagonal connected sum of two inputs
    Connsum {
        first: String,
        second: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn parse_error(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_PARSE, message: message.into() }
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| parse_error(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| parse_error(format!("{path}: {e}")))
    }
}

fn read_input(path: &str) -> Result<Input, CliError> {
    files::parse_input(&read_source(path)?).map_err(parse_error)
}

fn emit(output: &str, text: &str) -> Result<(), CliError> {
    if output == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(output, text)
            .map_err(|e| CliError { code: EXIT_OTHER, message: format!("{output}: {e}") })
    }
}

fn seifert_error(e: SeifertError) -> CliError {
    let code = match e {
        SeifertError::ZeroDeterminant => EXIT_ZERO_DET,
        _ => EXIT_OTHER,
    };
    CliError { code, message: e.to_string() }
}

fn aribbon_error(e: AribbonError) -> CliError {
    let code = match e {
        AribbonError::NonzeroLinkingMatrix => EXIT_NONZERO_LK,
        _ => EXIT_OTHER,
    };
    CliError { code, message: e.to_string() }
}

fn alexander_of(input: &Input) -> Result<LaurentPoly, CliError> {
    let zero_det =
        || CliError { code: EXIT_ZERO_DET, message: "determinant is zero".to_string() };
    match input {
        Input::Presentation(p) => p.alexander().map_err(aribbon_error),
        Input::SeifertPair(p) => p.alexander().map_err(seifert_error),
        Input::SeifertBlocks(b) => {
            let d = b.alexander();
            if d.is_zero() {
                Err(zero_det())
            } else {
                Ok(d)
            }
        }
        Input::Module(m) => {
            let d = m.det();
            if d.is_zero() {
                Err(zero_det())
            } else {
                Ok(d.canonicalize().expect("nonzero"))
            }
        }
    }
}

fn to_module(input: Input) -> Result<ModulePresentation, CliError> {
    match input {
        Input::Module(m) => Ok(m),
        Input::SeifertPair(p) => Ok(ModulePresentation::from_seifert(&p)),
        Input::SeifertBlocks(b) => Ok(ModulePresentation::from_seifert(&b.assemble())),
        Input::Presentation(p) => {
            let pair = p.assemble_seifert_pair().map_err(aribbon_error)?;
            Ok(ModulePresentation::from_seifert(&pair))
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Alexander { input, format } => {
            let delta = alexander_of(&read_input(&input)?)?;
            match format {
                Format::Text => println!("{delta}"),
                Format::Structured => println!("alexander = {delta}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Factorize { poly, input, max_degree, format } => {
            let text = match poly {
                Some(t) => t,
                None => read_source(&input)?,
            };
            let p: LaurentPoly =
                text.trim().parse().map_err(|e: alex_core::LaurentError| parse_error(e.to_string()))?;
            let witness = fox_milnor_witness_bounded(&p, max_degree)?;
            match (&witness, format) {
                (Some(g), Format::Text) => println!("{g}"),
                (None, Format::Text) => println!("none"),
                (Some(g), Format::Structured) => println!("witness = {g}"),
                (None, Format::Structured) => println!("witness = none"),
            }
            Ok(if witness.is_some() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_NO_WITNESS)
            })
        }
        Command::Check { input, format } => {
            let Input::Presentation(p) = read_input(&input)? else {
                return Err(parse_error("check requires a presentation file"));
            };
            print!("{}", check_report(&p, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Obstruct { input, eval, max_degree, format } => {
            let m = to_module(read_input(&input)?)?;
            let report = m.mirror_sum_obstruction(&eval, max_degree).map_err(module_error)?;
            print!("{}", obstruct_report(&report, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Spun { name, matrix, output } => {
            let v = if matrix {
                let Input::SeifertPair(pair) = read_input(&name)? else {
                    return Err(parse_error("--matrix expects a seifert_pair file"));
                };
                ClassicalSeifertMatrix::new(pair.v_plus().clone())
                    .map_err(|e| parse_error(e.to_string()))?
            } else {
                catalog(&name).map_err(|e| parse_error(e.to_string()))?
            };
            emit(&output, &files::write_seifert_pair(&v.spun()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Mirror { input, output } => {
            let m = to_module(read_input(&input)?)?;
            emit(&output, &files::write_module(&m.mirror()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Connsum { first, second, output } => {
            let a = to_module(read_input(&first)?)?;
            let b = to_module(read_input(&second)?)?;
            emit(&output, &files::write_module(&a.connected_sum(&b)))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn module_error(e: ModuleError) -> CliError {
    let code = match e {
        ModuleError::ZeroDeterminant => EXIT_ZERO_DET,
        _ => EXIT_OTHER,
    };
    CliError { code, message: e.to_string() }
}

fn fox_milnor_witness_bounded(
    p: &LaurentPoly,
    max_degree: i64,
) -> Result<Option<LaurentPoly>, CliError> {
    if p.span() > max_degree {
        return Err(CliError {
            code: EXIT_OTHER,
            message: format!("degree {} exceeds bound {max_degree}", p.span()),
        });
    }
    fox_milnor_witness(p).map_err(|e| CliError { code: EXIT_OTHER, message: e.to_string() })
}

fn check_report(p: &alex_core::ARibbonPresentation, format: Format) -> String {
    let linkings = p.check_linkings_condition();
    let concentricity = p.check_concentricity().ok();
    let homology = p.homology();
    let torsion: Vec<String> = homology.h1_torsion.iter().map(BigInt::to_string).collect();
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!(
                "linkings condition: {}\n",
                if linkings.holds { "holds" } else { "fails" }
            ));
            if let Some((i, j)) = linkings.witness {
                out.push_str(&format!("  mismatch at (i, j) = ({i}, {j})\n"));
            }
            if !linkings.trivial_lk {
                out.push_str("  linking matrix Lk_S is nonzero\n");
            }
            match linkings.matrix_check {
                Some(ok) => out.push_str(&format!(
                    "matrix check W+- = transpose(U-+): {}\n",
                    if ok { "holds" } else { "fails" }
                )),
                None => out.push_str("matrix check W+- = transpose(U-+): not evaluated\n"),
            }
            match concentricity {
                Some(c) => out.push_str(&format!(
                    "concentricity: {}\n",
                    if c.holds { "holds" } else { "fails" }
                )),
                None => out.push_str("concentricity: not evaluated (missing eta data)\n"),
            }
            let torsion_part = if torsion.is_empty() {
                String::new()
            } else {
                format!(" + Z/{}", torsion.join(" + Z/"))
            };
            out.push_str(&format!(
                "H1 = Z^{}{torsion_part}, H2 = Z^{}\n",
                homology.h1_free_rank, homology.h2_rank
            ));
        }
        Format::Structured => {
            out.push_str(&format!("linkings = {}\n", linkings.holds));
            if let Some((i, j)) = linkings.witness {
                out.push_str(&format!("linkings_witness = {i},{j}\n"));
            }
            out.push_str(&format!("lk_trivial = {}\n", linkings.trivial_lk));
            match linkings.matrix_check {
                Some(ok) => out.push_str(&format!("linkings_matrix = {ok}\n")),
                None => out.push_str("linkings_matrix = unevaluated\n"),
            }
            match concentricity {
                Some(c) => out.push_str(&format!("concentricity = {}\n", c.holds)),
                None => out.push_str("concentricity = unevaluated\n"),
            }
            out.push_str(&format!("h1_free_rank = {}\n", homology.h1_free_rank));
            out.push_str(&format!("h1_torsion = [{}]\n", torsion.join(", ")));
            out.push_str(&format!("h2_rank = {}\n", homology.h2_rank));
        }
    }
    out
}

fn obstruct_report(r: &alex_core::ObstructionReport, format: Format) -> String {
    let pairings: Vec<String> = r.pairings.iter().map(LaurentPoly::to_string).collect();
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!("{}\n", r.verdict));
            out.push_str(&format!("Delta = {}\n", r.delta));
            if pairings.is_empty() {
                out.push_str("Fox-Milnor pairings: none\n");
            } else {
                out.push_str(&format!("Fox-Milnor pairings: {}\n", pairings.join("; ")));
            }
            for e in &r.evaluations {
                out.push_str(&format!(
                    "t0 = {}: E2 evaluates to {}, pairings blocked: {}\n",
                    e.t0, e.e2_value, e.all_pairings_blocked
                ));
            }
            out.push_str(&format!("note: {}\n", r.note));
        }
        Format::Structured => {
            out.push_str(&format!("verdict = {}\n", r.verdict));
            out.push_str(&format!("delta = {}\n", r.delta));
            out.push_str(&format!("pairings = [{}]\n", pairings.join("; ")));
            for e in &r.evaluations {
                out.push_str(&format!("eval.{}.e2 = {}\n", e.t0, e.e2_value));
                out.push_str(&format!("eval.{}.blocked = {}\n", e.t0, e.all_pairings_blocked));
                out.push_str(&format!("eval.{}.obstructed = {}\n", e.t0, e.obstructed));
            }
            out.push_str(&format!("note = {}\n", r.note));
        }
    }
    out
}
