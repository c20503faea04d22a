use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use skewlines::config::{ConfigError, LineConfig};
use skewlines::groupoid::{GeneratorMode, DEFAULT_BUDGET};
use skewlines::orbits::{OrbitError, P3Point};
use skewlines_cli::family::{parse_field, Family, FamilySpec};
use skewlines_cli::report::{self, GroupOut, OrbitOut, Options};
use skewlines_cli::search;

const EXIT_INVALID: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(name = "skewlines", version, about = "Groups and orbits of skew-line configurations in P^3")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    AllTriples,
    Differences,
}

impl From<Mode> for GeneratorMode {
    fn from(m: Mode) -> GeneratorMode {
        match m {
            Mode::AllTriples => GeneratorMode::AllTriples,
            Mode::Differences => GeneratorMode::Differences,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that the lines are pairwise skew.
    Validate { config: PathBuf },
    /// Look for lines meeting every line of the configuration.
    Transversals { config: PathBuf },
    /// Enumerate and classify the group.
    Group {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "all-triples")]
        mode: Mode,
    },
    /// Orbit of a point under the groupoid maps.
    Orbit {
        config: PathBuf,
        /// "[x:y:z:w]" in the field's syntax, or "generic" for a point of L∞
        /// with trivial stabilizer.
        #[arg(long)]
        seed_point: String,
        /// Use plane intersections in P^3 instead of the matrix formula.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        orbit_budget: Option<usize>,
    },
    /// Build a configuration from a named family.
    Family(FamilyArgs),
    /// Run every analysis and print one report.
    Analyze {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "all-triples")]
        mode: Mode,
        /// Repeatable; "generic" picks a point of L∞ with trivial stabilizer.
        #[arg(long)]
        seed_point: Vec<String>,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        orbit_budget: Option<usize>,
    },
    /// Parameter sweeps, reported without conclusions.
    #[command(subcommand)]
    Search(SearchCommand),
}

#[derive(Args)]
struct FamilyArgs {
    #[command(subcommand)]
    family: FamilyCommand,
    /// Field to build in: Q, Q(zeta<n>), GF(<q>), GF(<p>^<k>) or JSON.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Write the configuration here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Analyze the configuration and compare with the expected group.
    #[arg(long, global = true)]
    analyze: bool,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// {L0, L∞} ∪ {diag(ε^j, ε^-j)} for ε of order n.
    Standard {
        #[arg(long)]
        n: u64,
    },
    /// {L0, L∞, I, diag(a, d)} from two roots of unity u1, u2.
    Cyclic4 {
        #[arg(long)]
        u1_order: u64,
        #[arg(long)]
        u2_order: u64,
    },
    /// {L0, L∞, I} ∪ {[[a, b], [0, a]]} over F_{p^degree}.
    ElementaryAbelian {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Diagonal entries, one line each; defaults to the generator z.
        #[arg(long)]
        a: Vec<String>,
        #[arg(long, default_value = "1")]
        b: String,
    },
    /// {L0, L∞, I, -I + E12, diag(a, 1/a)} with a² given in F_p.
    Affine {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        a_square: i64,
    },
    /// {L0, L∞} ∪ C3 ∪ tC3 with s a root of unity of order s_order.
    C3Scaled {
        #[arg(long)]
        s_order: u64,
    },
    /// Five lines with group A5.
    Icosahedral,
    /// Five lines with group S4.
    Octahedral,
    /// Five lines with group A4.
    Tetrahedral {
        #[arg(long, default_value = "1")]
        a: String,
    },
}

impl From<FamilyCommand> for Family {
    fn from(c: FamilyCommand) -> Family {
        match c {
            FamilyCommand::Standard { n } => Family::StandardConstruction { n },
            FamilyCommand::Cyclic4 { u1_order, u2_order } => Family::Cyclic4Line { u1_order, u2_order },
            FamilyCommand::ElementaryAbelian { p, degree, a, b } => Family::ElementaryAbelian { p, degree, a, b },
            FamilyCommand::Affine { p, a_square } => Family::Affine { p, a_square },
            FamilyCommand::C3Scaled { s_order } => Family::C3Scaled { s_order },
            FamilyCommand::Icosahedral => Family::Icosahedral,
            FamilyCommand::Octahedral => Family::Octahedral,
            FamilyCommand::Tetrahedral { a } => Family::Tetrahedral { a },
        }
    }
}

#[derive(Subcommand)]
enum SearchCommand {
    /// {L0, L∞} ∪ C_n ∪ tC_n for t = ζ_m^k r.
    Scaled {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        m: u64,
        #[arg(long, value_delimiter = ',', default_value = "1,-1,2,-2,1/2,-1/2")]
        scalars: Vec<String>,
    },
    /// Two diagonal lines with entries ζ_m^k r; only finite candidates are listed.
    Diagonal {
        #[arg(long)]
        m: u64,
        #[arg(long, value_delimiter = ',', default_value = "1,-1")]
        scalars: Vec<String>,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure {
            code: EXIT_INVALID,
            error: e.into(),
        }
    }
}

fn fail(code: u8, error: anyhow::Error) -> Failure {
    Failure { code, error }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load(path: &PathBuf) -> Result<LineConfig, Failure> {
    let text = read_input(path)?;
    LineConfig::from_json(&text).map_err(|e| match e {
        ConfigError::Invalid(r) => fail(EXIT_INVALID, anyhow!("{}: lines are not skew: {r}", path.display())),
        e => fail(EXIT_INVALID, anyhow!("{}: {e}", path.display())),
    })
}

fn load_unchecked(path: &PathBuf) -> Result<LineConfig, Failure> {
    let text = read_input(path)?;
    let file = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    LineConfig::from_file_unchecked(&file).map_err(|e| fail(EXIT_INVALID, anyhow!("{}: {e}", path.display())))
}

fn parse_seed(cfg: &LineConfig, s: &str) -> Result<Option<P3Point>, Failure> {
    if s.trim() == "generic" {
        return Ok(None);
    }
    P3Point::parse(cfg.field(), s)
        .map(Some)
        .map_err(|e| fail(EXIT_INVALID, anyhow!("seed {s}: {e}")))
}

fn emit<T: Serialize>(out: &mut dyn Write, json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        serde_json::to_writer_pretty(&mut *out, value)?;
        writeln!(out)?;
    } else {
        write!(out, "{}", text())?;
    }
    Ok(())
}

fn group_text(g: &GroupOut) -> String {
    let mut s = String::new();
    if g.budget_hit {
        s += &format!("budget exceeded after {} elements; the group may be infinite\n", g.order);
        return s;
    }
    s += &format!("order: {}\n", g.order);
    if let Some(l) = &g.label_text {
        s += &format!("label: {l}\n");
    }
    let census: Vec<String> = g.order_census.iter().map(|(o, n)| format!("{o}:{n}")).collect();
    s += &format!("element orders: {}\n", census.join(" "));
    if let Some(w) = &g.witnesses {
        s += &format!("witness orders (r, s, rs): {:?}\n", w.orders);
    }
    if let Some(p) = &g.fixed_point {
        s += &format!("common fixed point: {p}\n");
    }
    if g.violation {
        s += "warning: dihedral group\n";
    }
    s
}

fn orbit_text(o: &OrbitOut) -> String {
    let mut s = format!("seed {} on line {}\n", o.seed, o.carrier);
    s += &format!("total size: {}{}\n", o.total_size, if o.truncated { " (truncated)" } else { "" });
    let per: Vec<String> = o.per_line_sizes.iter().map(|(l, n)| format!("{l}:{n}")).collect();
    s += &format!("per line: {}\n", per.join(" "));
    if let Some(st) = o.stabilizer_order {
        s += &format!("stabilizer order: {st}\n");
    }
    s
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Validate { config } => {
            let cfg = load_unchecked(&config)?;
            let r = cfg.validate();
            emit(out, json, &r, || format!("{r}\n"))?;
            Ok(if r.valid { 0 } else { EXIT_INVALID })
        }
        Command::Transversals { config } => {
            let cfg = load(&config)?;
            let t = report::transversals(&cfg);
            emit(out, json, &t, || {
                let mut s = format!("exists: {}\nmethod: {}\n", t.exists, serde_json::to_string(&t.method).unwrap().trim_matches('"'));
                if t.infinitely_many {
                    s += "infinitely many\n";
                }
                for w in &t.witnesses {
                    s += &format!("through v = {w}\n");
                }
                s
            })?;
            Ok(0)
        }
        Command::Group { config, mode } => {
            let cfg = load(&config)?;
            let g = report::closure(&cfg, mode.into(), cli.budget)?;
            let report = GroupOut::new(&g);
            emit(out, json, &report, || group_text(&report))?;
            Ok(if report.budget_hit {
                EXIT_BUDGET
            } else if report.violation {
                EXIT_INVARIANT
            } else {
                0
            })
        }
        Command::Orbit {
            config,
            seed_point,
            oracle,
            orbit_budget,
        } => {
            let cfg = load(&config)?;
            let g = report::closure(&cfg, GeneratorMode::AllTriples, cli.budget)?;
            let seed = match parse_seed(&cfg, &seed_point)? {
                Some(p) => p,
                None => report::generic_point(&cfg, &g).map_err(|e| fail(EXIT_INVALID, e.into()))?,
            };
            let budget = orbit_budget.unwrap_or_else(|| report::orbit_budget(&cfg, &g));
            let r = report::orbit(&cfg, &g, &seed, budget, oracle).map_err(orbit_failure)?;
            let report = OrbitOut::from(&r);
            emit(out, json, &report, || orbit_text(&report))?;
            Ok(if r.truncated { EXIT_BUDGET } else { 0 })
        }
        Command::Family(args) => {
            let mut spec = FamilySpec::new(args.family.into());
            if let Some(f) = &args.field {
                spec = spec.with_field(parse_field(f)?);
            }
            let built = spec.build()?;
            if args.analyze {
                let r = report::analyze(&built.config, &Options { budget: cli.budget, ..Options::default() }, Some(built.expected))
                    .map_err(|e| fail(EXIT_INVARIANT, e.into()))?;
                emit(out, json, &r, || analysis_text(&r))?;
                return Ok(analysis_code(&r));
            }
            let text = built.config.to_json();
            match &args.out {
                Some(path) => std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?,
                None => writeln!(out, "{text}")?,
            }
            Ok(0)
        }
        Command::Analyze {
            config,
            mode,
            seed_point,
            oracle,
            orbit_budget,
        } => {
            let cfg = load_unchecked(&config)?;
            let seeds = seed_point.iter().map(|s| parse_seed(&cfg, s)).collect::<Result<_, _>>()?;
            let opts = Options {
                budget: cli.budget,
                mode: mode.into(),
                seeds,
                orbit_budget,
                oracle,
            };
            let r = report::analyze(&cfg, &opts, None).map_err(|e| match e {
                report::AnalysisError::Orbit(e) => orbit_failure(e),
                e => fail(EXIT_INVALID, e.into()),
            })?;
            emit(out, json, &r, || analysis_text(&r))?;
            Ok(analysis_code(&r))
        }
        Command::Search(s) => {
            let rows = match s {
                SearchCommand::Scaled { n, m, scalars } => search::scaled(n, if m == 0 { n } else { m }, &scalars, cli.budget),
                SearchCommand::Diagonal { m, scalars } => search::diagonal(m, &scalars, cli.budget),
            };
            emit(out, json, &rows, || {
                rows.iter()
                    .map(|r| {
                        let order = match (r.skew, r.infinite, r.order) {
                            (false, _, _) => "not skew".to_string(),
                            (_, true, _) => "infinite".to_string(),
                            (_, _, Some(o)) => o.to_string(),
                            _ => "budget exceeded".to_string(),
                        };
                        format!("{}\t{order}\n", r.params.join("\t"))
                    })
                    .collect()
            })?;
            Ok(0)
        }
    }
}

fn orbit_failure(e: OrbitError) -> Failure {
    let code = match e {
        OrbitError::Invariant(_) => EXIT_INVARIANT,
        _ => EXIT_INVALID,
    };
    fail(code, e.into())
}

fn analysis_code(r: &report::AnalysisReport) -> u8 {
    if !r.validation.valid {
        return EXIT_INVALID;
    }
    match &r.group {
        Some(g) if g.violation => EXIT_INVARIANT,
        Some(g) if g.budget_hit => EXIT_BUDGET,
        _ => 0,
    }
}

fn analysis_text(r: &report::AnalysisReport) -> String {
    let mut s = format!("lines: {}\n", r.lines.len());
    if !r.validation.valid {
        s += &format!("not skew: {}\n", r.validation);
        return s;
    }
    if let Some(t) = &r.transversals {
        s += &format!("transversal: {}\n", if t.infinitely_many { "infinitely many".into() } else { t.exists.to_string() });
    }
    if let Some(a) = &r.abelian {
        s += &format!("predicted abelian: {}\n", a.abelian);
    }
    s += &format!("generators: {}\n", r.generators.len());
    if let Some(g) = &r.group {
        s += &group_text(g);
    }
    if let Some(ratios) = &r.ratios {
        if ratios.infinite {
            s += "some generator has infinite order\n";
        }
    }
    for o in &r.orbits {
        s += &orbit_text(o);
    }
    if let (Some(e), Some(m)) = (&r.expected, r.matches_expected) {
        s += &format!("expected order {}: {}\n", e.order, if m { "matches" } else { "differs" });
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli, &mut io::stdout().lock()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;
    use skewlines::linalg2::Mat2;

    fn call(args: &[&str]) -> (u8, String) {
        let cli = Cli::try_parse_from(std::iter::once("skewlines").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let code = match run(cli, &mut out) {
            Ok(c) => c,
            Err(f) => f.code,
        };
        (code, String::from_utf8(out).unwrap())
    }

    fn json(args: &[&str]) -> Value {
        let (_, out) = call(args);
        serde_json::from_str(&out).unwrap()
    }

    struct TempDir(PathBuf);

    impl TempDir {
        fn new(tag: &str) -> TempDir {
            let p = std::env::temp_dir().join(format!("skewlines-{tag}-{}", std::process::id()));
            std::fs::create_dir_all(&p).unwrap();
            TempDir(p)
        }

        fn file(&self, name: &str, text: &str) -> String {
            let p = self.0.join(name);
            std::fs::write(&p, text).unwrap();
            p.to_str().unwrap().to_string()
        }
    }

    impl Drop for TempDir {
        fn drop(&mut self) {
            std::fs::remove_dir_all(&self.0).ok();
        }
    }

    #[test]
    fn output_is_deterministic() {
        let dir = TempDir::new("det");
        let (code, text) = call(&["family", "octahedral", "--field", "Q(zeta12)"]);
        assert_eq!(code, 0);
        let cfg = dir.file("s4.json", &text);
        let args = ["--json", "analyze", &cfg, "--seed-point", "[0:0:0:1]", "--seed-point", "generic"];
        let (code, a) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(a, call(&args).1);
        let r: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(r["schema_version"], 1);
        assert_eq!(r["group"]["order"], 24);
        assert_eq!(r["orbits"][0]["total_size"], 30);
        assert_eq!(r["orbits"][1]["total_size"], 120);
    }

    #[test]
    fn family_out_writes_a_loadable_config() {
        let dir = TempDir::new("out");
        let path = dir.0.join("a4.json");
        let p = path.to_str().unwrap();
        assert_eq!(call(&["family", "tetrahedral", "--out", p]).0, 0);
        assert_eq!(call(&["validate", p]).0, 0);
    }

    #[test]
    fn icosahedral_report() {
        let r = json(&["--json", "family", "icosahedral", "--analyze"]);
        assert_eq!(r["group"]["order"], 60);
        assert_eq!(r["group"]["label_text"], "A5");
        assert_eq!(r["transversals"]["exists"], false);
        assert_eq!(r["matches_expected"], true);
    }

    #[test]
    fn jordan_report() {
        let r = json(&["--json", "family", "elementary-abelian", "--p", "3", "--analyze"]);
        assert_eq!(r["group"]["order"], 9);
        assert_eq!(r["group"]["label_text"], "elementary_abelian(3,2)");
    }

    #[test]
    fn group_orbit_and_transversal_commands() {
        let dir = TempDir::new("group");
        let (_, text) = call(&["family", "tetrahedral"]);
        let cfg = dir.file("a4.json", &text);
        let (code, out) = call(&["--json", "group", &cfg]);
        assert_eq!(code, 0);
        let g: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(g["order"], 12);
        assert_eq!(g["budget_hit"], false);
        for key in ["label", "order_census", "witnesses"] {
            assert!(g.get(key).is_some(), "{key}");
        }
        assert_eq!(json(&["--json", "group", &cfg, "--mode", "differences"])["order"], 12);

        let a = json(&["--json", "orbit", &cfg, "--seed-point", "[0:0:0:1]"]);
        let b = json(&["--json", "orbit", &cfg, "--seed-point", "[0:0:0:1]", "--oracle"]);
        assert_eq!(a["total_size"], 20);
        assert_eq!(a, b);
        assert_eq!(json(&["--json", "transversals", &cfg])["exists"], false);

        assert_eq!(call(&["orbit", &cfg, "--seed-point", "[0:0:0:1]", "--orbit-budget", "3"]).0, 2);
        // on none of the lines
        assert_eq!(call(&["orbit", &cfg, "--seed-point", "[1:0:0:1]"]).0, 1);
        assert_eq!(call(&["orbit", &cfg, "--seed-point", "[1:0]"]).0, 1);
    }

    #[test]
    fn invalid_input_exits_one() {
        let dir = TempDir::new("invalid");
        let dup = dir.file(
            "dup.json",
            r#"{"field":{"kind":"rational"},"lines":["zero","infinity","identity","identity"]}"#,
        );
        for cmd in ["validate", "analyze", "group"] {
            assert_eq!(call(&[cmd, &dup]).0, 1, "{cmd}");
        }
        assert_eq!(json(&["--json", "analyze", &dup])["validation"]["valid"], false);
        let junk = dir.file("junk.json", "not json");
        assert_eq!(call(&["group", &junk]).0, 1);
        assert_eq!(call(&["group", "/nonexistent/config.json"]).0, 1);
        assert_eq!(call(&["family", "cyclic4", "--u1-order", "2", "--u2-order", "2"]).0, 1);
        assert_eq!(call(&["family", "octahedral", "--field", "GF(12)"]).0, 1);
    }

    #[test]
    fn infinite_group_hits_the_budget() {
        let dir = TempDir::new("inf");
        let k = skewlines::exactfield::Field::rational();
        let cfg =
            LineConfig::standard(&k, vec![Mat2::identity(&k), Mat2::diag(k.from_i64(2), k.from_i64(3))]).unwrap();
        let path = dir.file("inf.json", &cfg.to_json());
        assert_eq!(call(&["--budget", "200", "group", &path]).0, 2);
        let (code, out) = call(&["--json", "--budget", "200", "analyze", &path]);
        assert_eq!(code, 2);
        let r: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(r["group"]["budget_hit"], true);
        assert_eq!(r["ratios"]["infinite"], true);
    }

    #[test]
    fn search_prints_one_row_per_candidate() {
        let (code, out) = call(&["search", "scaled", "--n", "3", "--m", "6", "--scalars=-1/2"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[0], "n=3\tt=-1/2\t6");
    }
}
