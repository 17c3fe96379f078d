//! Command dispatch for the `ncgraded` binary.
//!
//! Every command produces a [`RunReport`]: a block of `key: value` lines
//! that is byte-identical for identical input files, flags and seed.
//! Exit codes: 0 when every verdict passes, 1 when a check fails, 2 on
//! usage, input or resource errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use ncgraded::colorlie::{
    check_color_axioms, epsilon_symmetric, heisenberg_from_color, koszul_complex, koszul_verify, n_l,
    pbw_dimension, u_presentation, ColorLieAlgebra,
};
use ncgraded::construct::{verify_bold_normal, weyl_witness};
use ncgraded::io::{parse_algebra, parse_color_lie};
use ncgraded::ncalg::{NCPoly, Presentation, QuotientCache, DEFAULT_WORD_BUDGET};
use ncgraded::normelem::{check_power_identities, find_witness, is_normal, is_q_heisenberg, HeisenbergWitness};
use ncgraded::pointgeo::{
    compare_point_sets, extension_fiber, format_point, format_points, is_truncated_point_module,
    normalize_point, skew_point_variety, stabilization_check, torsionfree_search, Point, SearchConfig,
};
use ncgraded::scalar::parse_rational;
use ncgraded::{Error, Rational};

#[derive(Parser, Debug)]
#[command(name = "ncgraded", version, about = "Exact checks on graded noncommutative algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct AlgInput {
    /// Algebra file (.alg)
    file: PathBuf,
    /// Degree cap of the quotient cache
    #[arg(long)]
    cap: Option<usize>,
    /// Largest number of words allowed in one degree
    #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    /// Homogeneous element g in relation syntax
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Number of random seeds or samples
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also propagate from the generic point (1 : t : t^2 : ...)
    #[arg(long)]
    generic: bool,
    /// Largest projective fiber dimension that may be sampled
    #[arg(long, default_value_t = 3)]
    fiber_bound: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            random_seeds: self.samples,
            seed: self.seed,
            generic: self.generic,
            fiber_dim_bound: self.fiber_bound,
            ..SearchConfig::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Hilbert function up to a degree
    Hilbert {
        #[command(flatten)]
        alg: AlgInput,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Degrees of a minimal set of defining relations
    Minrel {
        #[command(flatten)]
        alg: AlgInput,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Check that g = xy - u*yx is a Heisenberg-type normal element
    Heisenberg {
        #[command(flatten)]
        alg: AlgInput,
        #[command(flatten)]
        w: WitnessArgs,
    },
    /// Check the identities for x^r y and y x^r
    PowerIds {
        #[command(flatten)]
        alg: AlgInput,
        #[command(flatten)]
        w: WitnessArgs,
        #[arg(long, default_value_t = 4)]
        r_max: usize,
    },
    /// Check that g times the identity is normal in the quasi-Veronese algebra
    QvCheck {
        #[command(flatten)]
        alg: AlgInput,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Check the homogeneous Weyl identity in the twisted quasi-Veronese algebra
    WeylWitness {
        #[command(flatten)]
        alg: AlgInput,
        #[command(flatten)]
        w: WitnessArgs,
    },
    /// Extension fiber of a point sequence, e.g. --points "(1:0),(0:1)"
    PointExtend {
        #[command(flatten)]
        alg: AlgInput,
        #[arg(long)]
        points: String,
    },
    /// Search for a truncated g-torsion-free point module of a given module length
    Torsionfree {
        #[command(flatten)]
        alg: AlgInput,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Maximal coordinate supports of the skew point variety of a .cl file's omega
    SkewVariety { file: PathBuf },
    /// Cross-membership of sampled point sequences of two algebras
    Compare {
        u: PathBuf,
        s: PathBuf,
        /// Number of points per sequence
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Fiber and shift behaviour of sampled sequences of lengths FROM..TO
    Stabilize {
        #[command(flatten)]
        alg: AlgInput,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check the color Lie algebra axioms
    ColorCheck { file: PathBuf },
    /// Presentation of the enveloping algebra on the degree-one generators
    Upresent {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Length of the lower central series generated in degree one
    Nl { file: PathBuf },
    /// Build and verify the color Koszul complex
    Koszul {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long)]
        r_max: Option<usize>,
    },
    /// Heisenberg-type normal element of the enveloping algebra
    HeisenbergExtract { file: PathBuf },
}

/// Structured result of one command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    /// `(path, sha256)` of each input file.
    pub inputs: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub fields: Vec<(String, String)>,
    pub verdicts: Vec<(String, bool)>,
    pub error: Option<String>,
    /// Help or version text; printed verbatim.
    pub notice: Option<String>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self.notice.is_some() {
            0
        } else if self.error.is_some() {
            2
        } else if self.verdicts.iter().any(|(_, ok)| !ok) {
            1
        } else {
            0
        }
    }

    pub fn passed(&self) -> bool {
        self.exit_code() == 0
    }

    pub fn field(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.verdicts.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    pub fn render(&self) -> String {
        if let Some(n) = &self.notice {
            return n.clone();
        }
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (p, d) in &self.inputs {
            let _ = writeln!(out, "input: {p} sha256:{d}");
        }
        if let Some(s) = self.seed {
            let _ = writeln!(out, "seed: {s}");
        }
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k}: {v}");
        }
        for (k, ok) in &self.verdicts {
            let _ = writeln!(out, "check {k}: {}", if *ok { "pass" } else { "FAIL" });
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let status = match self.exit_code() {
            0 => "pass",
            1 => "fail",
            _ => "error",
        };
        let _ = writeln!(out, "status: {status}");
        out
    }

    fn set(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.verdicts.push((name.into(), ok));
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type Run = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Errors that state a mathematical property failing rather than bad input.
fn is_mathematical(e: &Error) -> bool {
    matches!(
        e,
        Error::NotNormal { .. } | Error::NonUnique { .. } | Error::NotGeneratedInDegreeOne(_)
    )
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> RunReport
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let mut report = RunReport {
        command: args.join(" "),
        ..RunReport::default()
    };
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                report.notice = Some(e.to_string());
            } else {
                report.error = Some(e.to_string().trim_end().to_string());
            }
            return report;
        }
    };
    match run(cli.cmd, &mut report) {
        Ok(()) => {}
        Err(Failure::Usage(m)) => report.error = Some(m),
        Err(Failure::Math(e)) if is_mathematical(&e) => {
            report.set("reason", &e);
            report.check("precondition", false);
        }
        Err(Failure::Math(e)) => report.error = Some(e.to_string()),
    }
    report
}

fn read_input(path: &Path, report: &mut RunReport) -> std::result::Result<String, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    report.inputs.push((path.display().to_string(), hex));
    Ok(text)
}

fn load_alg(path: &Path, report: &mut RunReport) -> std::result::Result<Presentation<Rational>, Failure> {
    let text = read_input(path, report)?;
    parse_algebra(&text).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn load_cl(path: &Path, report: &mut RunReport) -> std::result::Result<ColorLieAlgebra<Rational>, Failure> {
    let text = read_input(path, report)?;
    parse_color_lie(&text).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn element(p: &Presentation<Rational>, text: &str, what: &str) -> std::result::Result<NCPoly<Rational>, Failure> {
    p.parse_element(text).map_err(|e| usage(format!("--{what}: {e}")))
}

fn degree(f: &NCPoly<Rational>) -> std::result::Result<usize, Failure> {
    f.homogeneous_degree().ok_or_else(|| usage("element must be homogeneous and nonzero"))
}

fn cache(alg: &AlgInput, p: &Presentation<Rational>, default_cap: usize) -> std::result::Result<QuotientCache<Rational>, Failure> {
    let cap = alg.cap.unwrap_or(default_cap).max(p.max_relation_degree());
    Ok(QuotientCache::build_with_budget(p, cap, alg.budget)?)
}

fn format_dims(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
}

fn format_degree_map(m: &BTreeMap<usize, usize>) -> String {
    if m.is_empty() {
        return "none".into();
    }
    m.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(", ")
}

/// The witness named by the flags, or one found by search.
fn witness(
    p: &Presentation<Rational>,
    c: &QuotientCache<Rational>,
    w: &WitnessArgs,
    report: &mut RunReport,
) -> std::result::Result<Option<HeisenbergWitness<Rational>>, Failure> {
    let g = element(p, &w.g, "g")?;
    match (&w.x, &w.y, &w.u) {
        (Some(x), Some(y), Some(u)) => {
            let u = parse_rational(u).map_err(|e| usage(format!("--u: {e}")))?;
            Ok(Some(HeisenbergWitness::new(g, element(p, x, "x")?, element(p, y, "y")?, u)?))
        }
        (None, None, None) => {
            let found = find_witness(c, &g)?;
            report.set("witness", if found.is_some() { "found by search" } else { "none found" });
            report.check("witness found", found.is_some());
            Ok(found)
        }
        _ => Err(usage("give all of --x, --y, --u or none of them")),
    }
}

fn report_witness(p: &Presentation<Rational>, w: &HeisenbergWitness<Rational>, report: &mut RunReport) {
    report.set("g", p.format(&w.g));
    report.set("x", p.format(&w.x));
    report.set("y", p.format(&w.y));
    report.set("u", &w.u);
}

fn parse_points(text: &str, m: usize) -> std::result::Result<Vec<Point<Rational>>, Failure> {
    let mut out = Vec::new();
    for chunk in text.split(')') {
        let chunk = chunk.trim().trim_start_matches(',').trim().trim_start_matches('(');
        if chunk.is_empty() {
            continue;
        }
        let coords = chunk
            .split(':')
            .map(|s| parse_rational(s).map_err(|e| usage(format!("--points: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coords.len() != m {
            return Err(usage(format!("--points: point ({chunk}) needs {m} coordinates")));
        }
        out.push(normalize_point(&coords).ok_or_else(|| usage("--points: the zero vector is not a point"))?);
    }
    Ok(out)
}

fn run(cmd: Cmd, report: &mut RunReport) -> Run {
    match cmd {
        Cmd::Hilbert { alg, max_degree } => {
            let p = load_alg(&alg.file, report)?;
            let c = QuotientCache::build_with_budget(&p, max_degree, alg.budget)?;
            report.set("dims", format_dims(&c.hilbert()));
        }
        Cmd::Minrel { alg, max_degree } => {
            let p = load_alg(&alg.file, report)?;
            if max_degree < p.max_relation_degree() {
                return Err(usage(format!(
                    "--max-degree must be at least the largest relation degree {}",
                    p.max_relation_degree()
                )));
            }
            let c = QuotientCache::build_with_budget(&p, max_degree, alg.budget)?;
            report.set("minimal relation degrees", format_degree_map(&c.minimal_relation_degrees()));
        }
        Cmd::Heisenberg { alg, w } => {
            let p = load_alg(&alg.file, report)?;
            let n = degree(&element(&p, &w.g, "g")?)?;
            let c = cache(&alg, &p, 2 * n + 2)?;
            if let Some(wit) = witness(&p, &c, &w, report)? {
                report_witness(&p, &wit, report);
                let rep = is_q_heisenberg(&c, &wit)?;
                for (name, ok) in rep.clauses {
                    report.check(name, ok);
                }
            }
        }
        Cmd::PowerIds { alg, w, r_max } => {
            let p = load_alg(&alg.file, report)?;
            let n = degree(&element(&p, &w.g, "g")?)?;
            let c = cache(&alg, &p, (r_max + n).max(n + 1))?;
            if let Some(wit) = witness(&p, &c, &w, report)? {
                report_witness(&p, &wit, report);
                for (r, a, b) in check_power_identities(&c, &wit, r_max)? {
                    report.check(format!("x^{r} y identity"), a);
                    report.check(format!("y x^{r} identity"), b);
                }
            }
        }
        Cmd::QvCheck { alg, g } => {
            let p = load_alg(&alg.file, report)?;
            let g = element(&p, &g, "g")?;
            let n = degree(&g)?;
            let c = cache(&alg, &p, 3 * n)?;
            let rep = verify_bold_normal(&c, &g)?;
            report.set("quasi-Veronese degrees", format_dims(&rep.degrees));
            report.set("elements checked", rep.elements_checked);
            for (q, i, j, w) in rep.failures.iter().take(5) {
                report.set("failure", format!("degree {q} entry ({i},{j}) word {}", w.to_string_with(p.names())));
            }
            report.check("g normal in the quasi-Veronese algebra", rep.passed());
        }
        Cmd::WeylWitness { alg, w } => {
            let p = load_alg(&alg.file, report)?;
            let n = degree(&element(&p, &w.g, "g")?)?;
            let c = cache(&alg, &p, 2 * n + 1)?;
            if let Some(wit) = witness(&p, &c, &w, report)? {
                report_witness(&p, &wit, report);
                let cert = weyl_witness(&c, &wit)?;
                report.set("entries compared", cert.entries.len());
                if let Some(f) = cert.first_failure() {
                    report.set(
                        "first failure",
                        format!("({},{}): {} vs {}", f.i, f.j, p.format(&f.lhs), p.format(&f.rhs)),
                    );
                }
                report.check("Heisenberg clauses", cert.heisenberg.passed());
                report.check("phi(X)phi(Y) - phi(Y)phi(X) = g g entrywise", cert.passed());
            }
        }
        Cmd::PointExtend { alg, points } => {
            let p = load_alg(&alg.file, report)?;
            let pts = parse_points(&points, p.generator_count())?;
            report.set("points", format_points(&pts));
            let valid = is_truncated_point_module(&p, &pts)?;
            if let Some((rel, start)) = valid.first_violation {
                report.set("first violation", format!("relation {} at window {start}", rel + 1));
            }
            report.check("prefix is a truncated point module", valid.valid);
            if valid.valid {
                let f = extension_fiber(&p, &pts)?;
                match f.projective_dim() {
                    None => report.set("fiber", "empty"),
                    Some(0) => report.set("fiber", format!("single point {}", format_point(&f.single_point().expect("dim 0")))),
                    Some(k) => {
                        report.set("fiber", format!("projective dimension {k}"));
                        for b in &f.basis {
                            report.set("spanned by", format_point(b));
                        }
                    }
                }
            }
        }
        Cmd::Torsionfree { alg, g, length, search } => {
            let p = load_alg(&alg.file, report)?;
            let g = element(&p, &g, "g")?;
            report.seed = Some(search.seed);
            let rep = torsionfree_search(&p, &g, length, &search.config())?;
            report.set("module length", rep.length);
            report.set("points per sequence", rep.length - 1);
            report.set("deg g", rep.degree);
            if let Some(w) = &rep.witness {
                report_witness(&p, w, report);
            }
            report.set(
                "seeds",
                format!(
                    "{} coordinate, {} random, {} generic",
                    rep.seeds.coordinate, rep.seeds.random, rep.seeds.generic
                ),
            );
            report.set("nodes", rep.stats.nodes);
            report.set(
                "fiber dimensions",
                rep.stats
                    .fiber_dims
                    .iter()
                    .map(|(k, v)| format!("{k}:{v}"))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            report.set("special parameter values", rep.stats.special_values);
            report.set("exhaustive over seeds", rep.stats.exhaustive());
            match (&rep.found, &rep.lambdas) {
                (Some(f), Some(ls)) => {
                    report.set("result", format!("found {}", format_points(f)));
                    report.set("lambdas", ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", "));
                }
                _ => report.set("result", "empty"),
            }
            report.set("nonexistence bound applies", rep.bound_applies());
            report.check("consistent with the nonexistence bound", rep.consistent());
        }
        Cmd::SkewVariety { file } => {
            let l = load_cl(&file, report)?;
            let fam = skew_point_variety(l.bicharacter().omega())?;
            let names = l.names();
            let thetas = l.thetas();
            for s in &fam.supports {
                let ns: Vec<&str> = s.iter().map(|&i| names[thetas[i]].as_str()).collect();
                report.set("component", format!("{{{}}}", ns.join(", ")));
            }
            report.set("components", fam.supports.len());
        }
        Cmd::Compare { u, s, length, search } => {
            let pu = load_alg(&u, report)?;
            let ps = load_alg(&s, report)?;
            report.seed = Some(search.seed);
            let rep = compare_point_sets(&pu, &ps, length, search.samples, &search.config())?;
            report.set("points per sequence", rep.length);
            report.set("samples", format!("{} / {}", rep.samples_u, rep.samples_s));
            report.set("first only", rep.u_only);
            report.set("second only", rep.s_only);
            for e in rep.u_only_examples.iter().chain(&rep.s_only_examples) {
                report.set("example", format_points(e));
            }
            report.check("point sets agree", rep.agree());
        }
        Cmd::Stabilize { alg, from, to, search } => {
            let p = load_alg(&alg.file, report)?;
            report.seed = Some(search.seed);
            let rep = stabilization_check(&p, from, to, search.samples, &search.config())?;
            for l in &rep.lengths {
                report.set(
                    &format!("length {}", l.length),
                    format!(
                        "samples {}, singleton {}, empty {}, positive {}, shift failures {}",
                        l.samples, l.singleton, l.empty, l.positive, l.shift_failures
                    ),
                );
            }
            report.check("fibers are singletons", rep.lengths.iter().all(|l| l.singleton == l.samples));
            report.check("shifts remain valid", rep.lengths.iter().all(|l| l.shift_failures == 0));
        }
        Cmd::ColorCheck { file } => {
            let l = load_cl(&file, report)?;
            let rep = check_color_axioms(&l);
            report.set("dimension", l.dim());
            for v in &rep.violations {
                report.set("violation", v.describe(l.names()));
            }
            report.check("color Lie axioms", rep.ok());
        }
        Cmd::Upresent { file, max_degree } => {
            let l = load_cl(&file, report)?;
            let p = u_presentation(&l, max_degree)?;
            for r in p.relations() {
                report.set("relation", p.format(r));
            }
            let c = QuotientCache::build(&p, max_degree)?;
            let dims = c.hilbert();
            let pbw: Vec<usize> = (0..=max_degree).map(|d| pbw_dimension(&l, d)).collect::<ncgraded::Result<_>>()?;
            report.set("dims", format_dims(&dims));
            report.set("pbw dims", format_dims(&pbw));
            report.set("minimal relation degrees", format_degree_map(&c.minimal_relation_degrees()));
            let s = epsilon_symmetric(&l)?;
            for r in s.relations() {
                report.set("symmetric relation", s.format(r));
            }
            report.check("dims match PBW count", dims == pbw);
        }
        Cmd::Nl { file } => {
            let l = load_cl(&file, report)?;
            report.set("n_L", n_l(&l));
        }
        Cmd::Koszul { file, max_degree, r_max } => {
            let l = load_cl(&file, report)?;
            let r_max = r_max.unwrap_or(l.dim());
            let k = koszul_complex(&l, r_max, max_degree)?;
            let ranks: Vec<usize> = (0..=r_max).map(|r| k.free_rank(r)).collect();
            report.set("free ranks", format_dims(&ranks));
            let rep = koszul_verify(&k);
            for (r, d) in rep.d_squared_failures.iter().take(5) {
                report.set("d^2 nonzero", format!("r = {r}, degree {d}"));
            }
            for (r, d, s, dim) in rep.exactness_failures.iter().take(5) {
                report.set("homology", format!("r = {r}, degree {d}: rank sum {s} vs dim {dim}"));
            }
            report.check("d^2 = 0", rep.d_squared_zero());
            report.check(format!("exact in degrees 1..{max_degree}"), rep.exact());
        }
        Cmd::HeisenbergExtract { file } => {
            let l = load_cl(&file, report)?;
            let h = heisenberg_from_color(&l)?;
            let p = &h.presentation;
            report.set("n_L", h.n_l);
            report.set("bracket", format!("[{}, {}]", l.names()[h.x_basis], l.names()[h.y_basis]));
            report_witness(p, &h.witness, report);
            let n = h.witness.n();
            let c = QuotientCache::build(p, 2 * n + 2)?;
            report.check("g normal", is_normal(&c, &h.witness.g)?);
            report.check("Heisenberg clauses", is_q_heisenberg(&c, &h.witness)?.passed());
            report.check("Weyl identity", weyl_witness(&c, &h.witness)?.passed());
            let minrel = c.minimal_relation_degrees();
            report.set("minimal relation degrees", format_degree_map(&minrel));
            report.check(
                "relations in degrees <= 2 n_L - 1",
                minrel.keys().all(|&d| d < 2 * h.n_l),
            );
        }
    }
    Ok(())
}
