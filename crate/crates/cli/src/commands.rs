use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use invsys::artinian::DEFAULT_CEILING;
use invsys::duality::{perp_ideal, DualModule};
use invsys::limit::{
    artinian_reduction, dual_tower, reconstruct, section_lift, verify_lis_with, DegreeConvention, TowerOptions,
};
use invsys::rees::{rees_dimension_check, MonoidIdeal};
use invsys::{Error, Exponent, Field, Ideal, MonomialOrder, Polynomial, Result, RingContext};
use serde_json::{json, Map, Value};

use crate::format::{self, LimitJson, RingJson};

#[derive(Parser, Debug)]
#[command(name = "invsys", version, about = "Inverse systems of ideals and their limits")]
pub struct Cli {
    /// Coefficient field: q or fp:<p>; overrides the input file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Monomial order for Gröbner bases and printed output.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Largest reduction index B.
    #[arg(long, global = true, default_value_t = 3)]
    pub mmax: u32,
    /// Degree cap for Artinian searches and Rees slices.
    #[arg(long, global = true)]
    pub degcap: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Skip the regular-sequence test for the z-variables.
    #[arg(long, global = true)]
    pub trust_regular: bool,
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to a file.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for the tower computation.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Total,
    Zblock,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basis of the inverse system of I (or of I_m).
    Perp {
        #[arg(short, long)]
        input: PathBuf,
        /// Reduction index, e.g. 2 or 1,3.
        #[arg(long)]
        m: Option<String>,
    },
    /// Socle representatives of P/I (or P/I_m).
    Socle {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        m: Option<String>,
    },
    /// Hilbert profile of P/I (or P/I_m).
    Hilbert {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        m: Option<String>,
    },
    /// Reduced Gröbner basis of I (or I_m), and normal forms of given polynomials.
    Reduce {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        m: Option<String>,
        #[arg(long = "poly")]
        polys: Vec<String>,
    },
    /// Limit inverse system H_m for m up to --mmax.
    Limit {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Ideal recovered from a limit inverse system file.
    Reconstruct {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Checks the defining conditions of a limit inverse system file.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ConventionArg::Total)]
        convention: ConventionArg,
    },
    /// Compares gr_g(P/I) with (P/(I+g))[Y] in degrees l up to --lmax.
    ReesCheck {
        #[arg(short, long)]
        input: PathBuf,
        /// Comma-separated sequence; defaults to random linear forms.
        #[arg(long)]
        g: Option<String>,
        /// Length of the random sequence when --g is absent.
        #[arg(long, default_value_t = 1)]
        random: usize,
        #[arg(long, default_value_t = 4)]
        lmax: u32,
    },
    /// Socle of a monoid ideal, generators given as `2,0;0,2`.
    MonoidSocle {
        gens: String,
    },
}

struct Report {
    command: &'static str,
    inputs: Value,
    ring: Option<RingJson>,
    results: Vec<String>,
    diagnostics: Map<String, Value>,
    system: Option<LimitJson>,
    text: String,
    status: i32,
}

impl Report {
    fn new(command: &'static str, inputs: Value) -> Self {
        Report {
            command,
            inputs,
            ring: None,
            results: Vec::new(),
            diagnostics: Map::new(),
            system: None,
            text: String::new(),
            status: 0,
        }
    }

    fn diag(&mut self, key: &str, value: impl Into<Value>) {
        self.diagnostics.insert(key.into(), value.into());
    }

    fn json(&self) -> String {
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "ring": self.ring,
            "results": self.results,
            "diagnostics": self.diagnostics,
        });
        if let Some(s) = &self.system {
            v["system"] = serde_json::to_value(s).expect("serializable");
        }
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    }

    /// Results one per line, preceded by diagnostics as comments.
    fn plain(&mut self) {
        let mut s = String::new();
        for (k, v) in &self.diagnostics {
            let v = match v {
                Value::String(x) => x.clone(),
                other => other.to_string(),
            };
            s.push_str(&format!("# {k}: {v}\n"));
        }
        for r in &self.results {
            s.push_str(r);
            s.push('\n');
        }
        self.text = s;
    }
}

fn order_of(o: OrderArg) -> MonomialOrder {
    match o {
        OrderArg::Grevlex => MonomialOrder::grevlex(),
        OrderArg::Lex => MonomialOrder::lex(),
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load_ideal(cli: &Cli, path: &PathBuf) -> Result<(Arc<RingContext>, Ideal)> {
    let (ctx, ideal) = format::parse_ideal_file(&read(path)?)?;
    match &cli.field {
        None => Ok((ctx, ideal)),
        Some(f) => {
            let field: Field = format::parse_field(f)?;
            let ctx = Arc::new(ctx.with_field(field));
            let mut gens = Vec::new();
            for p in ideal.generators() {
                let q = p.change_field(field).map_err(|e| Error::Parse {
                    line: 1,
                    column: 1,
                    message: e.to_string(),
                })?;
                if !q.is_zero() {
                    gens.push(q);
                }
            }
            let ideal = Ideal::new(ctx.clone(), gens)?;
            Ok((ctx, ideal))
        }
    }
}

fn parse_index(s: &str, d: usize) -> Result<Vec<u32>> {
    let bad = |m: String| Error::Parse {
        line: 1,
        column: 1,
        message: m,
    };
    let v: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad(format!("bad reduction index `{s}`")))?;
    if v.len() == 1 && d > 1 {
        return Ok(vec![v[0]; d]);
    }
    if v.len() != d {
        return Err(bad(format!("reduction index `{s}` needs {d} entries")));
    }
    if v.iter().any(|&k| k == 0) {
        return Err(bad("reduction index entries must be positive".into()));
    }
    Ok(v)
}

fn reduced(ideal: &Ideal, m: &Option<String>) -> Result<Ideal> {
    match m {
        None => Ok(ideal.clone()),
        Some(s) => {
            let d = ideal.context().d();
            if d == 0 {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: "--m needs z-variables in the ring".into(),
                });
            }
            artinian_reduction(ideal, &parse_index(s, d)?)
        }
    }
}

fn render(ctx: &RingContext, p: &Polynomial, order: &MonomialOrder) -> String {
    p.render(ctx.var_names(), order)
}

fn render_dual(ctx: &RingContext, p: &Polynomial, order: &MonomialOrder) -> String {
    p.render(ctx.dual_names(), order)
}

fn execute(cli: &Cli) -> Result<Report> {
    let order = order_of(cli.order);
    let ceiling = cli.degcap.unwrap_or(DEFAULT_CEILING);
    let input_of = |p: &PathBuf| json!({ "input": p.display().to_string() });
    match &cli.command {
        Command::Perp { input, m } => {
            let (ctx, ideal) = load_ideal(cli, input)?;
            let mut r = Report::new("perp", json!({ "input": input.display().to_string(), "m": m }));
            r.ring = Some(RingJson::of(&ctx));
            let im = reduced(&ideal, m)?;
            let w: DualModule = perp_ideal(&im)?;
            r.diag("dim", w.dim());
            r.diag("max_degree", w.max_degree().map_or(-1, i64::from));
            r.results = w.basis().iter().map(|p| render_dual(&ctx, p, &order)).collect();
            r.plain();
            Ok(r)
        }
        Command::Socle { input, m } => {
            let (ctx, ideal) = load_ideal(cli, input)?;
            let mut r = Report::new("socle", json!({ "input": input.display().to_string(), "m": m }));
            r.ring = Some(RingJson::of(&ctx));
            let im = reduced(&ideal, m)?;
            let soc = im.socle_basis()?;
            r.diag("type", soc.len());
            r.results = soc.iter().map(|p| render(&ctx, p, &order)).collect();
            r.plain();
            Ok(r)
        }
        Command::Hilbert { input, m } => {
            let (ctx, ideal) = load_ideal(cli, input)?;
            let mut r = Report::new("hilbert", json!({ "input": input.display().to_string(), "m": m }));
            r.ring = Some(RingJson::of(&ctx));
            let h = reduced(&ideal, m)?.hilbert_data()?;
            r.diag("length", h.length());
            r.diag("socle_degree", h.socle_degree().map_or(-1, |x| x as i64));
            r.results = vec![h.to_string()];
            r.plain();
            Ok(r)
        }
        Command::Reduce { input, m, polys } => {
            let (ctx, ideal) = load_ideal(cli, input)?;
            let mut r = Report::new(
                "reduce",
                json!({ "input": input.display().to_string(), "m": m, "poly": polys }),
            );
            r.ring = Some(RingJson::of(&ctx));
            let im = reduced(&ideal, m)?;
            let gb = im.groebner_basis(&order);
            r.results = gb.iter().map(|p| render(&ctx, p, &order)).collect();
            let mut forms = Vec::new();
            for text in polys {
                let p = ctx.parse(text)?;
                forms.push(Value::String(render(&ctx, &im.normal_form(&p, &order)?, &order)));
            }
            if !forms.is_empty() {
                r.diag("normal_forms", forms);
            }
            r.plain();
            Ok(r)
        }
        Command::Limit { input } => {
            let (ctx, ideal) = load_ideal(cli, input)?;
            let mut r = Report::new(
                "limit",
                json!({
                    "input": input.display().to_string(),
                    "mmax": cli.mmax,
                    "trust_regular": cli.trust_regular,
                }),
            );
            r.ring = Some(RingJson::of(&ctx));
            let opts = TowerOptions {
                trust_regular: cli.trust_regular,
                ceiling,
                jobs: cli.jobs.max(1),
            };
            let tower = dual_tower(&ideal, cli.mmax, &opts)?;
            let h = section_lift(&tower)?;
            let report = verify_lis_with(&h, DegreeConvention::Total);
            r.diag("d", h.d());
            r.diag("r", h.r());
            r.diag("s", h.s());
            r.diag("verified", report.passed());
            r.results = h
                .family()
                .values()
                .flat_map(|hm| hm.iter().map(|p| render_dual(&ctx, p, &order)))
                .collect();
            r.system = Some(LimitJson::of(&h));
            r.text = format::print_limit_text(&h);
            Ok(r)
        }
        Command::Reconstruct { input } => {
            let h = format::parse_limit_file(&read(input)?)?;
            let ctx = h.context().clone();
            let mut r = Report::new("reconstruct", input_of(input));
            r.ring = Some(RingJson::of(&ctx));
            let rec = reconstruct(&h)?;
            r.diag("stage", rec.stage);
            r.diag("stable", rec.stable);
            r.results = rec.ideal.generators().iter().map(|p| render(&ctx, p, &order)).collect();
            r.text = format!(
                "# stage: {}\n# stable: {}\n{}",
                rec.stage,
                rec.stable,
                format::print_ideal_file(&ctx, rec.ideal.generators())
            );
            Ok(r)
        }
        Command::Verify { input, convention } => {
            let h = format::parse_limit_file(&read(input)?)?;
            let mut r = Report::new("verify", input_of(input));
            r.ring = Some(RingJson::of(h.context()));
            let conv = match convention {
                ConventionArg::Total => DegreeConvention::Total,
                ConventionArg::Zblock => DegreeConvention::ZBlock,
            };
            let report = verify_lis_with(&h, conv);
            let mut conditions: Vec<_> = report.checks.iter().map(|c| c.condition).collect();
            conditions.sort();
            conditions.dedup();
            for c in conditions {
                let status = if report.condition_passed(c) { "pass" } else { "FAIL" };
                r.results.push(format!("{} {status}", c.label()));
            }
            let failures: Vec<Value> = report
                .failures()
                .iter()
                .map(|f| Value::String(format!("{} {}", f.condition.label(), f.witness.clone().unwrap_or_default())))
                .collect();
            r.diag("passed", report.passed());
            if !failures.is_empty() {
                r.diag("failures", failures);
                r.status = 1;
            }
            r.plain();
            Ok(r)
        }
        Command::ReesCheck { input, g, random, lmax } => {
            let (ctx, ideal) = load_ideal(cli, input)?;
            let mut r = Report::new(
                "rees-check",
                json!({ "input": input.display().to_string(), "g": g, "lmax": lmax, "seed": cli.seed }),
            );
            r.ring = Some(RingJson::of(&ctx));
            let seq: Vec<Polynomial> = match g {
                Some(s) => s.split(',').map(|t| ctx.parse(t.trim())).collect::<Result<_>>()?,
                None => ideal.find_linear_regular_sequence(*random, 50, cli.seed)?,
            };
            r.diag(
                "sequence",
                seq.iter().map(|p| Value::String(render(&ctx, p, &order))).collect::<Vec<_>>(),
            );
            let degcap = cli.degcap.unwrap_or(8);
            for l in 0..=*lmax {
                let rep = rees_dimension_check(&ideal, &seq, l, degcap)?;
                if !rep.regular {
                    r.diag("regular", false);
                    r.results = vec!["rejected: not a regular sequence".into()];
                    r.status = 1;
                    break;
                }
                let line = format!(
                    "l={l} gr={:?} sym={:?} {}",
                    rep.gr_dims,
                    rep.symmetric_dims,
                    if rep.passed { "pass" } else { "FAIL" }
                );
                if !rep.passed {
                    r.status = 1;
                }
                r.results.push(line);
            }
            r.plain();
            Ok(r)
        }
        Command::MonoidSocle { gens } => {
            let mut r = Report::new("monoid-socle", json!({ "gens": gens }));
            let rows: Vec<Vec<u32>> = gens
                .split(';')
                .map(|row| row.split(',').map(|x| x.trim().parse::<u32>()).collect())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("bad generator list `{gens}`"),
                })?;
            let t = rows.first().map_or(0, Vec::len);
            let m = MonoidIdeal::new(t, rows.into_iter().map(Exponent::new).collect()).map_err(|e| Error::Parse {
                line: 1,
                column: 1,
                message: e.to_string(),
            })?;
            r.results = m
                .socle()
                .iter()
                .map(|e| format!("({})", e.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            r.plain();
            Ok(r)
        }
    }
}

/// Runs the command line, writing to the given streams; returns the exit
/// status (0 ok, 1 mathematical rejection, 2 usage or parse error).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let body = if cli.json { report.json() } else { report.text.clone() };
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &body),
                None => out.write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 2;
            }
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}
