//! The ideal file and limit-system file formats.
//!
//! Ideal files are line oriented:
//!
//! ```text
//! field Q
//! ring local vars x,y,z,w
//! zvars x
//! ideal:
//! w - x*y
//! ```
//!
//! Limit-system files repeat the header, add a `limit` line and list each
//! `H_m` under an `H <m>:` heading. A JSON form carries the same data.

use std::collections::BTreeMap;
use std::sync::Arc;

use invsys::limit::{LimitInverseSystem, MultiIndex};
use invsys::{Error, Field, Ideal, Mode, Polynomial, Result, RingContext};
use serde::{Deserialize, Serialize};

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("F{p}"),
    }
}

fn parse_field_name(s: &str) -> std::result::Result<Field, String> {
    match s {
        "Q" | "q" => Ok(Field::Rational),
        _ => {
            let digits = s
                .strip_prefix('F')
                .or_else(|| s.strip_prefix("fp:"))
                .ok_or_else(|| format!("unknown field `{s}` (expected Q or F<p>)"))?;
            let p: u64 = digits.parse().map_err(|_| format!("bad characteristic `{digits}`"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

/// Parses `q`, `Q`, `fp:<p>` or `F<p>`.
pub fn parse_field(s: &str) -> Result<Field> {
    parse_field_name(s).map_err(|m| Error::Parse {
        line: 1,
        column: 1,
        message: m,
    })
}

pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Graded => "graded",
        Mode::Local => "local",
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn csv(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

/// Lines with comments stripped, paired with 1-based line numbers and the
/// column where the trimmed content starts.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        let col = 1 + line.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty()).then_some((i + 1, col, trimmed))
    })
}

fn relocate(e: Error, line: usize, col: usize) -> Error {
    match e {
        Error::Parse { line: l, column, message } => err(line + l - 1, if l == 1 { col + column - 1 } else { column }, message),
        other => err(line, col, other.to_string()),
    }
}

#[derive(Default)]
struct Header {
    field: Option<Field>,
    ring: Option<(Mode, Vec<String>, usize)>,
    zvars: Vec<String>,
    zvars_line: usize,
}

impl Header {
    /// Consumes a header line; returns false when the line is not one.
    fn accept(&mut self, n: usize, col: usize, line: &str) -> Result<bool> {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "field" => {
                if self.field.is_some() {
                    return Err(err(n, col, "duplicate field line"));
                }
                self.field = Some(parse_field_name(rest).map_err(|m| err(n, col + 6, m))?);
            }
            "ring" => {
                if self.ring.is_some() {
                    return Err(err(n, col, "duplicate ring line"));
                }
                let mut words = rest.splitn(2, char::is_whitespace);
                let mode = match words.next() {
                    Some("local") => Mode::Local,
                    Some("graded") => Mode::Graded,
                    other => return Err(err(n, col + 5, format!("expected `local` or `graded`, found {other:?}"))),
                };
                let vars = words
                    .next()
                    .map(str::trim)
                    .and_then(|s| s.strip_prefix("vars"))
                    .ok_or_else(|| err(n, col, "expected `vars <list>`"))?;
                self.ring = Some((mode, csv(vars), n));
            }
            "zvars" => {
                self.zvars = csv(rest);
                self.zvars_line = n;
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn context(&self) -> Result<Arc<RingContext>> {
        let (mode, vars, line) = self.ring.as_ref().ok_or_else(|| err(1, 1, "missing `ring` line"))?;
        let field = self.field.unwrap_or(Field::Rational);
        for z in &self.zvars {
            if !vars.contains(z) {
                return Err(err(self.zvars_line, 1, format!("z-variable `{z}` is not a ring variable")));
            }
        }
        RingContext::new(field, vars, *mode, &self.zvars)
            .map(Arc::new)
            .map_err(|e| err(*line, 1, e.to_string()))
    }
}

fn header_text(ctx: &RingContext) -> String {
    let zs: Vec<&str> = ctx.zvars().iter().map(|&i| ctx.var_names()[i].as_str()).collect();
    let mut s = format!(
        "field {}\nring {} vars {}\n",
        field_name(ctx.field()),
        mode_name(ctx.mode()),
        ctx.var_names().join(",")
    );
    if !zs.is_empty() {
        s.push_str(&format!("zvars {}\n", zs.join(",")));
    }
    s
}

pub fn parse_ideal_file(text: &str) -> Result<(Arc<RingContext>, Ideal)> {
    let mut header = Header::default();
    let mut lines = content_lines(text);
    let mut in_ideal = false;
    for (n, col, line) in lines.by_ref() {
        if line == "ideal:" {
            in_ideal = true;
            break;
        }
        if !header.accept(n, col, line)? {
            return Err(err(n, col, format!("unexpected line `{line}`")));
        }
    }
    if !in_ideal {
        return Err(err(text.lines().count().max(1), 1, "missing `ideal:` block"));
    }
    let ctx = header.context()?;
    let mut gens = Vec::new();
    for (n, col, line) in lines {
        let p = ctx.parse(line).map_err(|e| relocate(e, n, col))?;
        if !p.is_zero() {
            gens.push(p);
        }
    }
    let ideal = Ideal::new(ctx.clone(), gens)?;
    Ok((ctx, ideal))
}

pub fn print_ideal_file(ctx: &RingContext, gens: &[Polynomial]) -> String {
    let mut s = header_text(ctx);
    s.push_str("ideal:\n");
    for g in gens {
        s.push_str(&ctx.render(g));
        s.push('\n');
    }
    s
}

fn index_text(m: &[u32]) -> String {
    m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn print_limit_text(h: &LimitInverseSystem) -> String {
    let ctx = h.context();
    let mut s = header_text(ctx);
    s.push_str(&format!("limit d={} r={} s={} bound={}\n", h.d(), h.r(), h.s(), h.bound()));
    for (m, hm) in h.family() {
        s.push_str(&format!("H {}:\n", index_text(m)));
        for p in hm {
            s.push_str(&ctx.render_dual(p));
            s.push('\n');
        }
    }
    s
}

fn parse_limit_text(text: &str) -> Result<LimitInverseSystem> {
    let mut header = Header::default();
    let mut params: Option<(BTreeMap<String, u64>, usize)> = None;
    let mut ctx: Option<Arc<RingContext>> = None;
    let mut family: BTreeMap<MultiIndex, Vec<Polynomial>> = BTreeMap::new();
    let mut current: Option<MultiIndex> = None;
    for (n, col, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("H ").and_then(|r| r.strip_suffix(':')) {
            let c = match &ctx {
                Some(c) => c.clone(),
                None => {
                    let c = header.context()?;
                    ctx = Some(c.clone());
                    c
                }
            };
            let m: std::result::Result<Vec<u32>, _> = if rest.trim().is_empty() {
                Ok(Vec::new())
            } else {
                rest.split(',').map(|x| x.trim().parse::<u32>()).collect()
            };
            let m = m.map_err(|_| err(n, col + 2, format!("bad index `{rest}`")))?;
            if m.len() != c.d() {
                return Err(err(n, col + 2, format!("index has {} entries, expected {}", m.len(), c.d())));
            }
            if family.insert(m.clone(), Vec::new()).is_some() {
                return Err(err(n, col, format!("duplicate block H {rest}")));
            }
            current = Some(m);
            continue;
        }
        if let Some(m) = &current {
            let c = ctx.as_ref().expect("set with block");
            let p = c.parse_dual(line).map_err(|e| relocate(e, n, col))?;
            family.get_mut(m).expect("block exists").push(p);
            continue;
        }
        if let Some(rest) = line.strip_prefix("limit") {
            let mut map = BTreeMap::new();
            for kv in rest.split_whitespace() {
                let (k, v) = kv.split_once('=').ok_or_else(|| err(n, col, format!("expected key=value, found `{kv}`")))?;
                let v: u64 = v.parse().map_err(|_| err(n, col, format!("bad value in `{kv}`")))?;
                map.insert(k.to_string(), v);
            }
            params = Some((map, n));
            continue;
        }
        if !header.accept(n, col, line)? {
            return Err(err(n, col, format!("unexpected line `{line}`")));
        }
    }
    let ctx = match ctx {
        Some(c) => c,
        None => header.context()?,
    };
    let (params, pline) = params.ok_or_else(|| err(1, 1, "missing `limit` line"))?;
    let get = |k: &str| params.get(k).copied().ok_or_else(|| err(pline, 1, format!("missing `{k}=`")));
    let d = get("d")?;
    if d as usize != ctx.d() {
        return Err(err(pline, 1, format!("d={d} but {} z-variables are declared", ctx.d())));
    }
    LimitInverseSystem::new(ctx, get("r")? as usize, get("s")? as u32, get("bound")? as u32, family)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RingJson {
    pub field: String,
    pub mode: String,
    pub vars: Vec<String>,
    pub zvars: Vec<String>,
}

impl RingJson {
    pub fn of(ctx: &RingContext) -> Self {
        RingJson {
            field: field_name(ctx.field()),
            mode: mode_name(ctx.mode()).into(),
            vars: ctx.var_names().to_vec(),
            zvars: ctx.zvars().iter().map(|&i| ctx.var_names()[i].clone()).collect(),
        }
    }

    fn context(&self) -> Result<Arc<RingContext>> {
        let field = parse_field(&self.field)?;
        let mode = match self.mode.as_str() {
            "local" => Mode::Local,
            "graded" => Mode::Graded,
            other => return Err(err(1, 1, format!("unknown mode `{other}`"))),
        };
        RingContext::new(field, &self.vars, mode, &self.zvars)
            .map(Arc::new)
            .map_err(|e| err(1, 1, e.to_string()))
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct BlockJson {
    pub m: Vec<u32>,
    #[serde(rename = "H")]
    pub h: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct LimitJson {
    pub ring: RingJson,
    pub d: usize,
    pub r: usize,
    pub s: u32,
    pub bound: u32,
    pub family: Vec<BlockJson>,
}

impl LimitJson {
    pub fn of(h: &LimitInverseSystem) -> Self {
        let ctx = h.context();
        LimitJson {
            ring: RingJson::of(ctx),
            d: h.d(),
            r: h.r(),
            s: h.s(),
            bound: h.bound(),
            family: h
                .family()
                .iter()
                .map(|(m, hm)| BlockJson {
                    m: m.clone(),
                    h: hm.iter().map(|p| ctx.render_dual(p)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<LimitInverseSystem> {
        let ctx = self.ring.context()?;
        if self.d != ctx.d() {
            return Err(err(1, 1, format!("d={} but {} z-variables are declared", self.d, ctx.d())));
        }
        let mut family = BTreeMap::new();
        for b in &self.family {
            if b.m.len() != ctx.d() {
                return Err(err(1, 1, format!("index {:?} has the wrong length", b.m)));
            }
            let h = b
                .h
                .iter()
                .map(|s| ctx.parse_dual(s))
                .collect::<Result<Vec<_>>>()?;
            family.insert(b.m.clone(), h);
        }
        LimitInverseSystem::new(ctx, self.r, self.s, self.bound, family)
    }
}

pub fn print_limit_json(h: &LimitInverseSystem) -> String {
    serde_json::to_string_pretty(&LimitJson::of(h)).expect("serializable") + "\n"
}

/// Loads a limit system from text, plain JSON, or a JSON command envelope
/// carrying a `system` field.
pub fn parse_limit_file(text: &str) -> Result<LimitInverseSystem> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
        let inner = value.get("system").cloned().unwrap_or(value);
        let parsed: LimitJson = serde_json::from_value(inner).map_err(|e| err(1, 1, e.to_string()))?;
        parsed.to_system()
    } else {
        parse_limit_text(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "# curve\nfield Q\nring local vars x,y,z,w\nzvars x\nideal:\nw - x*y\ny*z - x^3\nx*z^2 - y^4\nz^3 - x^2*y^3\ny^5 - x^4*z\n";

    #[test]
    fn ideal_file_roundtrip() {
        let (ctx, i) = parse_ideal_file(EXAMPLE).unwrap();
        assert_eq!(ctx.nvars(), 4);
        assert_eq!(ctx.mode(), Mode::Local);
        assert_eq!(i.generators().len(), 5);
        let printed = print_ideal_file(&ctx, i.generators());
        let (ctx2, i2) = parse_ideal_file(&printed).unwrap();
        assert_eq!(ctx, ctx2);
        assert_eq!(i.generators(), i2.generators());
        assert_eq!(print_ideal_file(&ctx2, i2.generators()), printed);
    }

    #[test]
    fn small_file() {
        let (ctx, i) = parse_ideal_file("field Q\nring graded vars x\nideal:\nx^2\n").unwrap();
        assert_eq!(ctx.nvars(), 1);
        assert_eq!(ctx.render(&i.generators()[0]), "x^2");
        let (ctx, _) = parse_ideal_file("field F7\nring graded vars x,y\nideal:\nx^2\n").unwrap();
        assert_eq!(ctx.field(), Field::Prime(7));
    }

    #[test]
    fn rejections_carry_positions() {
        match parse_ideal_file("field Q\nring graded vars x\nzvars q\nideal:\nx\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match parse_ideal_file("field Q\nring graded vars x,y\nideal:\n  x + q\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 7)),
            other => panic!("{other:?}"),
        }
        assert!(parse_ideal_file("ring graded vars x\n").is_err());
        assert!(parse_ideal_file("field R\nring graded vars x\nideal:\n").is_err());
        assert!(parse_ideal_file("field F8\nring graded vars x\nideal:\n").is_err());
        assert!(parse_ideal_file("ring graded vars x\nbogus\nideal:\n").is_err());
    }

    #[test]
    fn limit_file_roundtrip() {
        let ctx = Arc::new(RingContext::graded(&["y", "z"], &["z"]));
        let mut family = BTreeMap::new();
        for m in 1..=3u32 {
            family.insert(vec![m], vec![ctx.parse_dual(&format!("Y*Z^{}", m - 1)).unwrap()]);
        }
        let h = LimitInverseSystem::new(ctx, 1, 1, 3, family).unwrap();
        let text = print_limit_text(&h);
        assert_eq!(parse_limit_file(&text).unwrap(), h);
        let json = print_limit_json(&h);
        assert_eq!(parse_limit_file(&json).unwrap(), h);
        assert!(parse_limit_file("field Q\nring graded vars y,z\nzvars z\nH 1:\nY\n").is_err());
    }
}
