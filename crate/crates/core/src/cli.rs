//! The `plane-forest` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 internal verification mismatch.

use std::ffi::OsString;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::canonical::{canonical_plane, EquivalenceMode};
use crate::catalog::{PlaneCatalog, RootedCatalog};
use crate::enumerate::{enumerate_plane_center, enumerate_plane_oracle};
use crate::error::Error;
use crate::limits::{Limits, ORACLE_MAX_VERTICES};
use crate::morse::{count_flows, enumerate_flows, flow_from_tree};
use crate::oracle::all_rootings;
use crate::reconcile::reconcile_with_paper;
use crate::render::{Layout, RenderFormat, RenderSpec};
use crate::tree::{count_rooted, rooted_codes, DyckWords};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "plane-forest", version, about = "Plane tree enumeration and Morse flows with one sink on the sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of rooted trees (--edges) or plane tree classes (--vertices).
    Count(SizeArgs),
    /// List rooted trees or plane tree classes.
    Enumerate {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_enum, default_value = "codes")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count (and optionally list) flows with one sink and the given number of saddles.
    Flows {
        #[arg(long)]
        saddles: usize,
        #[arg(long, value_enum, default_value = "oriented")]
        mode: ModeArg,
        #[arg(long)]
        list: bool,
    },
    /// Cross-check the generator against the oracle and compare with published counts.
    Verify {
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
    },
    /// Draw a tree given as U:<code>, B:<code>, or a bare Dyck code.
    Render {
        #[arg(long, allow_hyphen_values = true)]
        code: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[arg(long, value_enum, default_value = "radial")]
        layout: LayoutArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["edges", "vertices"])))]
struct SizeArgs {
    /// Rooted trees with this many edges.
    #[arg(long)]
    edges: Option<usize>,
    /// Plane trees with this many vertices.
    #[arg(long)]
    vertices: Option<usize>,
    #[arg(long, value_enum, default_value = "oriented")]
    mode: ModeArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Oriented,
    Mirror,
}

impl From<ModeArg> for EquivalenceMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Oriented => EquivalenceMode::Oriented,
            ModeArg::Mirror => EquivalenceMode::Mirror,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Codes,
    Catalog,
    Json,
    Dot,
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LayoutArg {
    Layered,
    Radial,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::usage(format!("i/o error: {e}"))
    }
}

/// Runs the CLI with `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, &limits, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, limits: &Limits, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Count(size) => cmd_count(&size, limits, stdout),
        Command::Enumerate { size, format, out } => cmd_enumerate(&size, format, out.as_deref(), limits, stdout),
        Command::Flows { saddles, mode, list } => cmd_flows(saddles, mode.into(), list, limits, stdout),
        Command::Verify { max_vertices } => cmd_verify(max_vertices, stdout),
        Command::Render {
            code,
            format,
            layout,
            out,
        } => cmd_render(code, format, layout, out.as_deref(), stdout),
    }
}

fn cmd_count(size: &SizeArgs, limits: &Limits, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let text = match (size.edges, size.vertices) {
        (Some(edges), None) => count_rooted(edges).to_string(),
        (None, Some(vertices)) => enumerate_plane_center(vertices, size.mode.into(), limits)?
            .len()
            .to_string(),
        _ => return Err(Failure::usage("give exactly one of --edges or --vertices")),
    };
    writeln!(stdout, "{text}")?;
    Ok(EXIT_OK)
}

/// Writes to `out` atomically (temp file in the same directory, then rename),
/// or to stdout.
fn emit(
    out: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    match out {
        None => {
            let mut w = BufWriter::new(stdout);
            body(&mut w)?;
            w.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let tmp = tempfile::NamedTempFile::new_in(dir)?;
            {
                let mut w = BufWriter::new(tmp.as_file());
                body(&mut w)?;
                w.flush()?;
            }
            tmp.persist(path).map_err(|e| Failure::from(e.error))?;
        }
    }
    Ok(())
}

fn cmd_enumerate(
    size: &SizeArgs,
    format: Format,
    out: Option<&Path>,
    limits: &Limits,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    if !matches!(format, Format::Codes | Format::Catalog | Format::Json) {
        return Err(Failure::usage("enumerate supports --format codes, catalog, or json"));
    }
    match (size.edges, size.vertices) {
        (Some(edges), None) => {
            let codes = rooted_codes(edges, limits)?;
            match format {
                Format::Codes => emit(out, stdout, |w| write_lines(w, codes))?,
                _ => {
                    let catalog = RootedCatalog {
                        codes: codes.map(|c| c.into_string()).collect(),
                        count: 0,
                        edges,
                    };
                    let catalog = RootedCatalog {
                        count: catalog.codes.len(),
                        ..catalog
                    };
                    if format == Format::Json {
                        emit(out, stdout, |w| w.write_all(catalog.to_json().as_bytes()))?;
                    } else {
                        emit(out, stdout, |w| {
                            writeln!(w, "{}", catalog.header())?;
                            write_lines(w, catalog.codes.iter())
                        })?;
                    }
                }
            }
        }
        (None, Some(vertices)) => {
            let mode = size.mode.into();
            let trees = enumerate_plane_center(vertices, mode, limits)?;
            let catalog = PlaneCatalog::new(vertices, mode, &trees);
            let text = match format {
                Format::Codes => {
                    let mut s = String::new();
                    for c in &catalog.codes {
                        s.push_str(c);
                        s.push('\n');
                    }
                    s
                }
                Format::Catalog => catalog.to_text(),
                _ => catalog.to_json(),
            };
            emit(out, stdout, |w| w.write_all(text.as_bytes()))?;
        }
        _ => return Err(Failure::usage("give exactly one of --edges or --vertices")),
    }
    Ok(EXIT_OK)
}

fn write_lines<T: std::fmt::Display>(w: &mut dyn Write, items: impl Iterator<Item = T>) -> io::Result<()> {
    for item in items {
        writeln!(w, "{item}")?;
    }
    Ok(())
}

fn cmd_flows(
    saddles: usize,
    mode: EquivalenceMode,
    list: bool,
    limits: &Limits,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    if list {
        let flows = enumerate_flows(saddles, mode, limits)?;
        writeln!(stdout, "{}", flows.len())?;
        for f in flows {
            writeln!(stdout, "{f}")?;
        }
    } else {
        writeln!(stdout, "{}", count_flows(saddles, mode, limits)?)?;
    }
    Ok(EXIT_OK)
}

fn cmd_render(
    code: String,
    format: Format,
    layout: LayoutArg,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let format = match format {
        Format::Dot => RenderFormat::Dot,
        Format::Svg => RenderFormat::Svg,
        Format::Ascii => RenderFormat::Ascii,
        _ => return Err(Failure::usage("render supports --format dot, svg, or ascii")),
    };
    let layout = match layout {
        LayoutArg::Layered => Layout::Layered,
        LayoutArg::Radial => Layout::Radial,
    };
    let text = RenderSpec { format, layout, code }.render()?;
    emit(out, stdout, |w| w.write_all(text.as_bytes()))?;
    Ok(EXIT_OK)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn cmd_verify(max_vertices: usize, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if max_vertices == 0 {
        return Err(Failure::usage("--max-vertices must be at least 1"));
    }
    if max_vertices > ORACLE_MAX_VERTICES {
        return Err(Error::LimitExceeded {
            what: "max-vertices",
            requested: max_vertices,
            limit: ORACLE_MAX_VERTICES,
        }
        .into());
    }
    let limits = Limits::default();
    let mut all_ok = true;
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    line("== center gluing vs exhaustive oracle ==".into());
    line(format!("{:>8}  {:>16}  {:>16}", "vertices", "oriented", "mirror"));
    let mut plane_counts = vec![[0usize; 2]; max_vertices + 1];
    for (v, counts) in plane_counts.iter_mut().enumerate().skip(1) {
        let mut cells = Vec::new();
        for (m, mode) in EquivalenceMode::ALL.into_iter().enumerate() {
            let cell = match (enumerate_plane_center(v, mode, &limits), enumerate_plane_oracle(v, mode)) {
                (Ok(a), Ok(b)) if a == b => {
                    counts[m] = a.len();
                    format!("pass ({})", a.len())
                }
                (Ok(a), Ok(b)) => {
                    all_ok = false;
                    format!("FAIL ({} vs {})", a.len(), b.len())
                }
                (Err(e), _) | (_, Err(e)) => {
                    all_ok = false;
                    format!("FAIL ({e})")
                }
            };
            cells.push(cell);
        }
        line(format!("{v:>8}  {:>16}  {:>16}", cells[0], cells[1]));
    }

    line(String::new());
    line("== rooted enumeration vs closed form ==".into());
    for edges in 0..max_vertices {
        let listed = DyckWords::new(edges).count();
        let formula = u64::try_from(count_rooted(edges)).expect("small");
        let ok = listed as u64 == formula;
        all_ok &= ok;
        line(format!("edges={edges:<3} listed={listed:<8} catalan={formula:<8} {}", status(ok)));
    }

    line(String::new());
    line("== re-rooting invariance of canonical forms ==".into());
    for v in 1..=max_vertices {
        let mut ok = true;
        for mode in EquivalenceMode::ALL {
            for code in DyckWords::new(v - 1) {
                let tree = code.decode();
                let reference = canonical_plane(&tree, mode);
                ok &= all_rootings(&tree, mode)
                    .iter()
                    .all(|r| canonical_plane(&r.decode(), mode) == reference);
            }
        }
        all_ok &= ok;
        line(format!("vertices={v:<3} {}", status(ok)));
    }

    line(String::new());
    line("== flows vs plane trees ==".into());
    for saddles in 0..max_vertices {
        let mut ok = true;
        for (m, mode) in EquivalenceMode::ALL.into_iter().enumerate() {
            match enumerate_flows(saddles, mode, &limits) {
                Ok(flows) => {
                    ok &= flows.len() == plane_counts[saddles + 1][m];
                    ok &= flows.iter().all(|f| f.index_sum() == 2 && f.sinks() == 1);
                    ok &= flows
                        .iter()
                        .all(|f| flow_from_tree(f.separatrices()) == *f);
                }
                Err(_) => ok = false,
            }
        }
        all_ok &= ok;
        line(format!("saddles={saddles:<3} {}", status(ok)));
    }

    line(String::new());
    line("== published counts ==".into());
    let mismatches = match reconcile_with_paper() {
        Ok(report) => {
            for l in report.to_string().lines() {
                line(l.to_owned());
            }
            report.mismatches().count()
        }
        Err(e) => {
            all_ok = false;
            line(format!("FAIL ({e})"));
            0
        }
    };

    line(String::new());
    line(format!(
        "internal checks: {}; published-count mismatches: {mismatches} (reported only)",
        status(all_ok)
    ));
    stdout.write_all(out.as_bytes())?;
    Ok(if all_ok { EXIT_OK } else { EXIT_MISMATCH })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["plane-forest"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_rooted_and_plane() {
        assert_eq!(run_args(&["count", "--edges", "4"]), (0, "14\n".into(), String::new()));
        assert_eq!(run_args(&["count", "--vertices", "1"]).1, "1\n");
        assert_eq!(run_args(&["count", "--vertices", "7"]).1, "14\n");
    }

    #[test]
    fn count_usage_errors() {
        assert_eq!(run_args(&["count"]).0, 1);
        assert_eq!(run_args(&["count", "--edges", "2", "--vertices", "3"]).0, 1);
        assert_eq!(run_args(&["count", "--edges", "x"]).0, 1);
        assert_eq!(run_args(&["count", "--vertices", "2", "--mode", "sideways"]).0, 1);
        assert_eq!(run_args(&["frobnicate"]).0, 1);
        let (code, _, err) = run_args(&["count", "--vertices", "40"]);
        assert_eq!(code, 1);
        assert!(err.contains("limit"), "{err}");
        assert_eq!(run_args(&["count", "--vertices", "0"]).0, 1);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
    }

    #[test]
    fn enumerate_rooted_codes() {
        assert_eq!(
            run_args(&["enumerate", "--edges", "2", "--format", "codes"]).1,
            "(())\n()()\n"
        );
        assert_eq!(run_args(&["enumerate", "--edges", "0"]).1, "\n");
        let (_, out, _) = run_args(&["enumerate", "--edges", "2", "--format", "catalog"]);
        assert_eq!(out, "# rooted-trees e=2 count=2\n(())\n()()\n");
        let (_, out, _) = run_args(&["enumerate", "--edges", "1", "--format", "json"]);
        assert_eq!(out, "{\n  \"codes\": [\n    \"()\"\n  ],\n  \"count\": 1,\n  \"edges\": 1\n}\n");
    }

    #[test]
    fn enumerate_plane_formats() {
        let (code, out, _) = run_args(&["enumerate", "--vertices", "6", "--format", "codes"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        let (_, out, _) = run_args(&["enumerate", "--vertices", "7", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 14);
        assert_eq!(v["mode"], "oriented");
        assert_eq!(run_args(&["enumerate", "--vertices", "3", "--format", "svg"]).0, 1);
    }

    #[test]
    fn enumerate_to_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cat.txt");
        let p = path.to_str().unwrap();
        let (code, out, _) = run_args(&["enumerate", "--vertices", "5", "--format", "catalog", "--out", p]);
        assert_eq!((code, out.as_str()), (0, ""));
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("# plane-trees v=5 mode=oriented count=3\n"));
    }

    #[test]
    fn failed_enumeration_leaves_no_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cat.txt");
        let p = path.to_str().unwrap();
        let (code, _, _) = run_args(&["enumerate", "--vertices", "99", "--out", p]);
        assert_eq!(code, 1);
        assert!(!path.exists());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }

    #[test]
    fn flows() {
        assert_eq!(run_args(&["flows", "--saddles", "0"]).1, "1\n");
        assert_eq!(run_args(&["flows", "--saddles", "3"]).1, "2\n");
        assert_eq!(run_args(&["flows", "--saddles", "4"]).1, "3\n");
        let (_, out, _) = run_args(&["flows", "--saddles", "2", "--list"]);
        assert_eq!(out, "1\nsources=3 saddles=2 sinks=1 tree=U:()()\n");
    }

    #[test]
    fn render() {
        let (code, out, _) = run_args(&["render", "--code", "()", "--format", "ascii"]);
        assert_eq!((code, out.lines().count()), (0, 2));
        assert_eq!(run_args(&["render", "--code", "(()", "--format", "dot"]).0, 1);
        assert_eq!(run_args(&["render", "--code", "()", "--format", "json"]).0, 1);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = run_args(&["verify", "--max-vertices", "6"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("internal checks: pass"));
        assert_eq!(run_args(&["verify", "--max-vertices", "11"]).0, 1);
        assert_eq!(run_args(&["verify", "--max-vertices", "0"]).0, 1);
    }
}
