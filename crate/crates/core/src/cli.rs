//! Command-line front end. [`run`] does all the work and returns the exit
//! status with the text for stdout and stderr, so it can be driven in tests.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::board::{parse_board, Board};
use crate::check::crosscheck_disk;
use crate::corpus::{CorpusSpec, RandomSpec, Region};
use crate::cutpaste::{board_cut_and_paste, cut_and_paste, CutPasteResult};
use crate::diagonals::{all_diagonals, trace_diagonal, Diagonal};
use crate::disk::{validate, QuadDisk};
use crate::error::{Error, Result};
use crate::glue::{parse_glued, render_glued};
use crate::ldu::{canonical_matrix, ldu_factorize, rank_det, solve_disk};
use crate::tilings::{enumerate_tilings, quasi_perfect_matching, signed_count, tiling_parity};

#[derive(Parser, Debug)]
#[command(
    name = "qdisk",
    version,
    about = "Diagonals, cut-and-paste, tilings and exact LDU factorizations of quadriculated disks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the disk and print its vertex and edge census.
    Validate(Input),
    /// List every diagonal with its flags.
    Diagonals(Input),
    /// Cut and paste along a good diagonal (the canonical one by default).
    Cutpaste {
        #[command(flatten)]
        input: Input,
        /// Corner vertex where the diagonal starts.
        #[arg(long)]
        corner: Option<usize>,
    },
    /// Black-to-white adjacency matrix under the canonical labeling.
    Matrix(Input),
    /// Recursive LDU factorization with its trace.
    Ldu(Input),
    /// Determinant of the black-to-white matrix.
    Det(Input),
    /// Rank of the black-to-white matrix.
    Rank(Input),
    /// Integer solution of B x = v.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Right-hand side, one entry per black square.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        rhs: Vec<i64>,
    },
    /// Count, sign-count or list the domino tilings.
    Tilings {
        #[command(flatten)]
        input: Input,
        #[arg(long, group = "mode")]
        count: bool,
        #[arg(long, group = "mode")]
        signed: bool,
        #[arg(long, group = "mode")]
        list: bool,
    },
    /// Quasi-perfect matching of the tilings by parity.
    Match(Input),
    /// Print the regions of a corpus.
    Corpus(CorpusArgs),
    /// Compare determinant, signed tiling count and elimination over a corpus.
    Crosscheck(CorpusArgs),
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; standard input when absent or `-`.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Structured output where the default is plain text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Board,
    Glue,
    Auto,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Every board up to --max-cells cells.
    #[arg(long)]
    all_boards: bool,
    /// Every rectangle with sides up to this length.
    #[arg(long, value_name = "SIDE")]
    rectangles: Option<usize>,
    /// This many random boards with up to --max-cells cells.
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    /// This many random glued disks that are not boards.
    #[arg(long, value_name = "COUNT")]
    glued: Option<usize>,
    #[arg(long, default_value_t = 8)]
    max_cells: usize,
    #[arg(long, default_value_t = 1)]
    min_cells: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep only disks with as many black as white squares.
    #[arg(long)]
    square_only: bool,
    /// Drop glued disks.
    #[arg(long)]
    boards_only: bool,
    #[arg(long)]
    json: bool,
}

impl CorpusArgs {
    fn spec(&self) -> Result<CorpusSpec> {
        let random = |count| RandomSpec {
            seed: self.seed,
            count,
            min: self.min_cells.max(1),
            max: self.max_cells.max(self.min_cells),
        };
        let spec = CorpusSpec {
            all_boards: self.all_boards.then_some(self.max_cells),
            rectangles: self.rectangles,
            random_boards: self.random.map(random),
            glued: self.glued.map(|n| RandomSpec { min: self.min_cells.max(4), ..random(n) }),
            square_only: self.square_only,
            boards_only: self.boards_only,
        };
        if spec.is_empty() {
            return Err(Error::Usage("choose at least one of --all-boards, --rectangles, --random, --glued".into()));
        }
        Ok(spec)
    }
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line (program name first).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => failure(&Error::Usage(text.trim_end().to_string()), None),
            };
        }
    };
    let file = input_path(&cli.command);
    match dispatch(cli.command, stdin) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => failure(&e, file),
    }
}

fn input_path(c: &Command) -> Option<String> {
    let input = match c {
        Command::Validate(i) | Command::Diagonals(i) | Command::Matrix(i) | Command::Ldu(i) => i,
        Command::Det(i) | Command::Rank(i) | Command::Match(i) => i,
        Command::Cutpaste { input, .. } | Command::Solve { input, .. } | Command::Tilings { input, .. } => input,
        Command::Corpus(_) | Command::Crosscheck(_) => return None,
    };
    Some(input.file.as_ref().map_or("-".into(), |p| p.display().to_string()))
}

fn failure(e: &Error, file: Option<String>) -> Outcome {
    let location = match (e.line(), file) {
        (Some(line), file) => json!({ "file": file, "line": line }),
        (None, Some(file)) => json!({ "file": file }),
        (None, None) => Value::Null,
    };
    let report = json!({ "code": e.code(), "message": e.to_string(), "location": location });
    Outcome { code: 1, stdout: String::new(), stderr: format!("{report}\n") }
}

fn to_json<T: Serialize>(value: &T) -> String {
    // Going through `Value` sorts object keys.
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

struct Loaded {
    disk: QuadDisk,
    board: Option<Board>,
}

fn load(input: &Input, stdin: &mut dyn Read) -> Result<Loaded> {
    let text = match &input.file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
            s
        }
    };
    let format = match input.format {
        Format::Auto if looks_glued(&text) => Format::Glue,
        Format::Auto => Format::Board,
        f => f,
    };
    if format == Format::Glue {
        let disk = parse_glued(&text)?;
        validate(&disk)?;
        Ok(Loaded { disk, board: None })
    } else {
        let board = parse_board(&text)?;
        Ok(Loaded { disk: board.disk().clone(), board: Some(board) })
    }
}

fn looks_glued(text: &str) -> bool {
    text.lines().any(|l| l.split('#').next().unwrap_or("").trim_start().starts_with("squares"))
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<(i32, String)> {
    let out = match command {
        Command::Validate(i) => to_json(&validate(&load(&i, stdin)?.disk)?),
        Command::Diagonals(i) => diagonals(&load(&i, stdin)?.disk, i.json),
        Command::Cutpaste { input, corner } => cutpaste(&load(&input, stdin)?, corner)?,
        Command::Matrix(i) => matrix(&load(&i, stdin)?.disk),
        Command::Ldu(i) => ldu(&load(&i, stdin)?.disk)?,
        Command::Det(i) => {
            let disk = load(&i, stdin)?.disk;
            let rd = rank_det(&ldu_factorize(&disk)?);
            let m = canonical_matrix(&disk);
            let d = rd.det.ok_or(Error::NonSquare { rows: m.rows(), cols: m.cols() })?;
            format!("{d}\n")
        }
        Command::Rank(i) => format!("{}\n", rank_det(&ldu_factorize(&load(&i, stdin)?.disk)?).rank),
        Command::Solve { input, rhs } => {
            let x = solve_disk(&load(&input, stdin)?.disk, &rhs)?;
            if input.json {
                to_json(&json!({ "x": x }))
            } else {
                let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
                format!("{}\n", parts.join(","))
            }
        }
        Command::Tilings { input, signed, list, .. } => {
            let disk = load(&input, stdin)?.disk;
            if signed {
                format!("{}\n", signed_count(&disk)?)
            } else if list {
                tilings_list(&disk, input.json)?
            } else {
                format!("{}\n", enumerate_tilings(&disk).len())
            }
        }
        Command::Match(i) => {
            let disk = load(&i, stdin)?.disk;
            let m = quasi_perfect_matching(&disk)?;
            to_json(&json!({
                "tilings": m.images.len(),
                "pairs": m.pairs.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
                "loner": m.loner,
                "trace": m.loner_trace,
            }))
        }
        Command::Corpus(a) => corpus(&a.spec()?, a.json),
        Command::Crosscheck(a) => return crosscheck(&a.spec()?),
    };
    Ok((0, out))
}

fn flags_text(d: &Diagonal) -> String {
    let mut f = vec![if d.good { "good" } else { "bad" }];
    if d.good {
        f.push(if d.balanced { "balanced" } else { "unbalanced" });
    }
    match d.excellent {
        Some(true) => f.push("excellent"),
        Some(false) => f.push("plain"),
        None => {}
    }
    f.join(",")
}

fn diagonal_json(d: &Diagonal) -> Value {
    json!({
        "corner": d.corner(),
        "end": d.end(),
        "length": d.len(),
        "vertices": d.vertices,
        "squares": d.squares,
        "good": d.good,
        "balanced": d.balanced,
        "excellent": d.excellent,
    })
}

fn diagonals(disk: &QuadDisk, as_json: bool) -> String {
    let ds = all_diagonals(disk);
    if as_json {
        return to_json(&ds.iter().map(diagonal_json).collect::<Vec<_>>());
    }
    let mut out = String::new();
    for d in &ds {
        let chain: Vec<String> = d.squares.iter().map(|&s| disk.name(s)).collect();
        out.push_str(&format!("{} {} {} {}\n", d.corner(), d.len(), flags_text(d), chain.join(" ")));
    }
    out
}

fn cutpaste(input: &Loaded, corner: Option<usize>) -> Result<String> {
    let disk = &input.disk;
    let (d, cp, boards): (Diagonal, CutPasteResult, Option<Vec<Board>>) = match (corner, &input.board) {
        (None, Some(board)) => {
            let (d, cp, boards) = board_cut_and_paste(board)?;
            (d, cp, Some(boards))
        }
        (corner, board) => {
            let d = match corner {
                Some(c) => trace_diagonal(disk, c)?,
                None => crate::diagonals::canonical_good_diagonal(disk),
            };
            if !d.good {
                return Err(Error::NotGoodDiagonal(d.corner()));
            }
            let cp = cut_and_paste(disk, &d)?;
            let boards = match board {
                Some(_) if cp.boards_preserved() => Some(cp.boards()?),
                _ => None,
            };
            (d, cp, boards)
        }
    };
    let components: Vec<Value> = cp
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| match &boards {
            Some(bs) => json!({ "format": "board", "text": bs[i].render(), "squares": cp.origins[i] }),
            None => json!({ "format": "glue", "text": render_glued(c), "squares": cp.origins[i] }),
        })
        .collect();
    Ok(to_json(&json!({
        "diagonal": diagonal_json(&d),
        "deleted_side": cp.deleted_side,
        "removed_diagonal": cp.removed_diagonal,
        "removed_flanks": cp.removed_flanks,
        "merges": cp.merges,
        "components": components,
        "square_map": cp.square_map,
    })))
}

fn matrix(disk: &QuadDisk) -> String {
    let m = canonical_matrix(disk);
    let names = |v: &[usize]| v.iter().map(|&s| disk.name(s)).collect::<Vec<_>>();
    to_json(&json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.to_rows(),
        "row_squares": m.row_squares,
        "col_squares": m.col_squares,
        "row_names": names(&m.row_squares),
        "col_names": names(&m.col_squares),
    }))
}

fn ldu(disk: &QuadDisk) -> Result<String> {
    let f = ldu_factorize(disk)?;
    let rows = |a: &ndarray::Array2<i64>| a.rows().into_iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let rd = rank_det(&f);
    Ok(to_json(&json!({
        "L": rows(&f.l),
        "U": rows(&f.u),
        "D_ones": f.d.ones,
        "D_shape": [f.d.rows, f.d.cols],
        "labeling": f.labeling,
        "rank": rd.rank,
        "det": rd.det,
        "trace": f.trace,
    })))
}

fn tilings_list(disk: &QuadDisk, as_json: bool) -> Result<String> {
    let ts = enumerate_tilings(disk);
    let lab = crate::adjacency::Labeling::canonical(disk);
    let square = disk.count(crate::disk::Color::Black) == disk.count(crate::disk::Color::White);
    let parities: Vec<Option<i64>> =
        ts.iter().map(|t| if square { tiling_parity(t, &lab).map(Some) } else { Ok(None) }).collect::<Result<_>>()?;
    if as_json {
        let items: Vec<Value> = ts
            .iter()
            .zip(&parities)
            .enumerate()
            .map(|(i, (t, p))| json!({ "id": i, "dominos": t.dominos, "parity": p }))
            .collect();
        return Ok(to_json(&items));
    }
    let mut out = String::new();
    for (i, (t, p)) in ts.iter().zip(&parities).enumerate() {
        let doms: Vec<String> = t.dominos.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let sign = p.map_or(".".to_string(), |p| format!("{p:+}"));
        out.push_str(&format!("{i} {sign} {}\n", doms.join(" ")));
    }
    Ok(out)
}

fn corpus(spec: &CorpusSpec, as_json: bool) -> String {
    let mut out = String::new();
    let mut items = Vec::new();
    spec.for_each(|r| {
        if as_json {
            let d = r.disk();
            items.push(json!({
                "format": if r.board().is_some() { "board" } else { "glue" },
                "squares": d.num_squares(),
                "black": d.count(crate::disk::Color::Black),
                "white": d.count(crate::disk::Color::White),
                "text": r.render(),
            }));
        } else {
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str(&r.render());
        }
    });
    if as_json {
        to_json(&items)
    } else {
        out
    }
}

fn crosscheck(spec: &CorpusSpec) -> Result<(i32, String)> {
    let (mut disks, mut square) = (0usize, 0usize);
    let mut problems = Vec::new();
    let mut index = 0usize;
    spec.for_each(|r: Region| {
        let i = index;
        index += 1;
        if r.disk().num_squares() < 2 {
            return;
        }
        disks += 1;
        match crosscheck_disk(r.disk()) {
            Ok(c) => {
                if c.det.is_some() {
                    square += 1;
                }
                let issues = c.discrepancies();
                if !issues.is_empty() {
                    problems.push(json!({ "index": i, "region": r.render(), "problems": issues }));
                }
            }
            Err(e) => {
                problems.push(json!({ "index": i, "region": r.render(), "problems": [format!("{}: {e}", e.code())] }))
            }
        }
    });
    let report = json!({ "disks": disks, "square": square, "discrepancies": problems });
    Ok((if problems_empty(&report) { 0 } else { 1 }, to_json(&report)))
}

fn problems_empty(report: &Value) -> bool {
    report["discrepancies"].as_array().is_some_and(|a| a.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str], input: &str) -> Outcome {
        let mut argv = vec!["qdisk"];
        argv.extend_from_slice(args);
        run(argv, &mut input.as_bytes())
    }

    #[test]
    fn det_of_square_is_zero() {
        let o = go(&["det"], "##\n##\n");
        assert_eq!((o.code, o.stdout.as_str()), (0, "0\n"));
    }

    #[test]
    fn parse_errors_carry_location() {
        let o = go(&["validate"], "#x\n");
        assert_eq!(o.code, 1);
        let v: Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(v["code"], "Parse");
        assert_eq!(v["location"]["line"], 1);
    }

    #[test]
    fn glue_detected_automatically() {
        let o = go(&["tilings", "--count"], "squares 2\nglue 0 1 1 3\n");
        assert_eq!(o.stdout, "1\n");
    }

    #[test]
    fn listing_marks_parities() {
        let o = go(&["tilings", "--list"], "##\n##\n");
        let lines: Vec<&str> = o.stdout.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].split(' ').nth(1).unwrap(), "+1");
        assert_eq!(lines[1].split(' ').nth(1).unwrap(), "-1");
    }

    #[test]
    fn usage_errors_are_json() {
        let o = go(&["frobnicate"], "");
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("\"Usage\""));
        assert_eq!(go(&["--help"], "").code, 0);
    }

    #[test]
    fn crosscheck_small_corpus() {
        let o = go(&["crosscheck", "--all-boards", "--max-cells", "6"], "");
        assert_eq!(o.code, 0, "{}", o.stdout);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["discrepancies"].as_array().unwrap().len(), 0);
    }
}
