//! Formula-versus-oracle sweeps over parameter grids.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::formulas::{
    f_rho, f_rho_conjecture11, fixed_diag_rhs, g_v_closed, g_v_hook, macmahon_box, s_m_bounded, s_m_gf, staircase_plus,
    trace_gf_formula, TheoremId,
};
use crate::oracle::{
    count_box_rpp, count_syt_with, gf_bounded_with, gf_fixed_diag_with, gf_tableaux_with, gf_trace_with, Caps,
    TableauKind,
};
use crate::qalg::QSeries;
use crate::shapes::{build_m, build_rho, build_v, Partition};

pub const DEFAULT_TRUNCATION: i64 = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub theorem: TheoremId,
    /// One inclusive range per parameter of the theorem, in its order.
    pub ranges: Vec<(String, RangeInclusive<u32>)>,
    pub trunc: i64,
    pub caps: Caps,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    /// A config with every parameter fixed to `0` and default settings.
    pub fn new(theorem: TheoremId) -> Self {
        SweepConfig {
            theorem,
            ranges: theorem.params().iter().map(|p| (p.to_string(), 0..=0)).collect(),
            trunc: DEFAULT_TRUNCATION,
            caps: Caps::from_env(),
            jobs: 0,
            output: None,
        }
    }

    pub fn set_range(&mut self, name: &str, range: RangeInclusive<u32>) -> Result<()> {
        if range.is_empty() {
            return Err(Error::Parse(format!("empty range for {name}")));
        }
        let slot = self
            .ranges
            .iter_mut()
            .find(|(p, _)| p == name)
            .ok_or_else(|| Error::Parse(format!("{} has no parameter {name:?}", self.theorem)))?;
        slot.1 = range;
        Ok(())
    }

    /// Every parameter tuple, last parameter varying fastest.
    pub fn grid(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for (_, r) in &self.ranges {
            out = out.into_iter().flat_map(|p| r.clone().map(move |v| [p.clone(), vec![v]].concat())).collect();
        }
        out
    }
}

/// Parses `lo..hi` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad number {t:?}")));
    let r = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.trim_start_matches('='))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if r.is_empty() {
        return Err(Error::Parse(format!("empty range {s:?}")));
    }
    Ok(r)
}

/// `key = value` lines; `#` starts a comment. Keys are `theorem`, `trunc`,
/// `jobs`, `output`, the cap names, and the theorem's parameters.
impl FromStr for SweepConfig {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        let theorem = pairs
            .iter()
            .find(|(k, _)| k == "theorem")
            .ok_or_else(|| Error::Parse("missing theorem".into()))?
            .1
            .parse::<TheoremId>()?;
        let mut cfg = SweepConfig::new(theorem);
        let int = |v: &str| v.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {v:?}")));
        for (k, v) in &pairs {
            match k.as_str() {
                "theorem" => {}
                "trunc" | "T" => cfg.trunc = int(v)? as i64,
                "jobs" => cfg.jobs = int(v)?,
                "output" => cfg.output = Some(PathBuf::from(v)),
                "count_cells" => cfg.caps.count_cells = int(v)?,
                "enumeration_cells" => cfg.caps.enumeration_cells = int(v)?,
                "series_weight" => cfg.caps.series_weight = int(v)? as i64,
                "box_volume" => cfg.caps.box_volume = int(v)?,
                "excited_diagrams" => cfg.caps.excited_diagrams = int(v)?,
                name => cfg.set_range(name, parse_range(v)?)?,
            }
        }
        Ok(cfg)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    SkippedCap,
    SkippedInvalid,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedCap => "skipped-cap",
            Status::SkippedInvalid => "skipped-invalid",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub theorem: TheoremId,
    pub params: Vec<(String, u32)>,
    pub formula: Option<String>,
    pub oracle: Option<String>,
    pub status: Status,
    pub note: Option<String>,
    pub wall_ms: Option<u64>,
}

struct OrderedParams<'a>(&'a [(String, u32)]);

impl Serialize for OrderedParams<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Serialize for VerificationRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationRecord", 7)?;
        st.serialize_field("theorem", self.theorem.as_str())?;
        st.serialize_field("params", &OrderedParams(&self.params))?;
        st.serialize_field("formula", &self.formula)?;
        st.serialize_field("oracle", &self.oracle)?;
        st.serialize_field("status", self.status.as_str())?;
        if let Some(n) = &self.note {
            st.serialize_field("note", n)?;
        }
        if let Some(ms) = self.wall_ms {
            st.serialize_field("wall_ms", &ms)?;
        }
        st.end()
    }
}

impl VerificationRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn params_text(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
    }
}

/// Both sides of one comparison, rendered as text.
struct Outcome {
    formula: String,
    oracle: String,
    equal: bool,
}

fn ints<T: fmt::Display + PartialEq>(f: T, o: T) -> Outcome {
    Outcome { equal: f == o, formula: f.to_string(), oracle: o.to_string() }
}

fn series(f: QSeries, o: QSeries, t: i64) -> Result<Outcome> {
    let equal = f.agrees_through(&o, t)?;
    Ok(Outcome { formula: f.to_string(), oracle: o.to_string(), equal })
}

fn fixed_diag_case(kind: TableauKind, p: &[u32], t: i64, caps: &Caps) -> Result<Outcome> {
    let n = p[0] as usize;
    let part = |v: &[u32]| -> Result<Partition> {
        if v.iter().skip(n).any(|&x| x != 0) {
            return Err(Error::InvalidParameters(format!("more than {n} nonzero parts")));
        }
        if v.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters("parts must weakly decrease".into()));
        }
        Partition::new(v.iter().copied().filter(|&x| x > 0).collect())
    };
    let lam = part(&p[1..4])?;
    let diag = part(&p[4..7])?;
    let formula = fixed_diag_rhs(kind, &lam, &diag, n, t)?;
    let outer = staircase_plus(&lam, n)?;
    let rdiag: Vec<u64> = diag.padded(n)?.into_iter().map(u64::from).collect();
    let oracle = match gf_fixed_diag_with(&outer, kind, &rdiag, t, caps) {
        Err(Error::InfeasibleDiagonal) => QSeries::zero(Some(t)),
        other => other?,
    };
    series(formula, oracle, t)
}

fn evaluate(theorem: TheoremId, p: &[u32], t: i64, caps: &Caps) -> Result<Outcome> {
    use TheoremId::*;
    Ok(match theorem {
        Rho => ints(
            f_rho(p[0], p[1], p[2], p[3], p[4])?,
            count_syt_with(&build_rho(p[0], p[1], p[2], p[3], p[4])?.into(), caps)?,
        ),
        RhoSymmetric => {
            let (a, n) = (p[0], p[1]);
            ints(f_rho_conjecture11(a, n)?, count_syt_with(&build_rho(n, a, a, a, a)?.into(), caps)?)
        }
        VHook => {
            ints(g_v_hook(p[0], p[1], p[2], p[3])?, count_syt_with(&build_v(p[0], p[1], p[2], p[3])?.into(), caps)?)
        }
        VClosed => {
            ints(g_v_closed(p[0], p[1], p[2], p[3])?, count_syt_with(&build_v(p[0], p[1], p[2], p[3])?.into(), caps)?)
        }
        MBounded => {
            let shape = build_m(p[0], p[1], p[2], p[3], p[4], 1)?.into();
            let oracle = gf_bounded_with(&shape, TableauKind::Ssyt, p[5] as u64, caps)?;
            let formula = s_m_bounded(p[0], p[1], p[2], p[3], p[4], p[5])?;
            Outcome { equal: formula == oracle, formula: formula.to_string(), oracle: oracle.to_string() }
        }
        MProduct => {
            let shape = build_m(p[0], p[1], p[2], p[3], p[4], p[5])?.into();
            let oracle = gf_tableaux_with(&shape, TableauKind::Ssyt, t, None, caps)?;
            series(s_m_gf(p[0], p[1], p[2], p[3], p[4], p[5], t)?, oracle, t)?
        }
        MTrace => {
            let formula = trace_gf_formula(p[0], p[1], p[2], p[3], p[4], p[5], t)?;
            let oracle = gf_trace_with(p[0], p[1], p[2], p[3], p[4], p[5], t, caps)?;
            let at_one = formula.at_x_one().agrees_through(&s_m_gf(p[0], p[1], p[2], p[3], p[4], p[5], t)?, t)?;
            Outcome {
                equal: at_one && formula.agrees(&oracle)?,
                formula: formula.to_string(),
                oracle: oracle.to_string(),
            }
        }
        FixedDiagRpp => fixed_diag_case(TableauKind::Rpp, p, t, caps)?,
        FixedDiagSsyt => fixed_diag_case(TableauKind::Ssyt, p, t, caps)?,
        FixedDiagRst => fixed_diag_case(TableauKind::Rst, p, t, caps)?,
        MacMahon => {
            let oracle = count_box_rpp(p[0], p[1], p[2])?;
            let formula = macmahon_box(p[0], p[1], p[2]).to_polynomial()?;
            Outcome { equal: formula == oracle, formula: formula.to_string(), oracle: oracle.to_string() }
        }
    })
}

/// Evaluates one parameter tuple.
pub fn verify_one(theorem: TheoremId, params: &[u32], t: i64, caps: &Caps, timed: bool) -> VerificationRecord {
    let start = Instant::now();
    let result = evaluate(theorem, params, t, caps);
    let mut rec = VerificationRecord {
        theorem,
        params: theorem.params().iter().map(|s| s.to_string()).zip(params.iter().copied()).collect(),
        formula: None,
        oracle: None,
        status: Status::Fail,
        note: None,
        wall_ms: timed.then(|| start.elapsed().as_millis() as u64),
    };
    match result {
        Ok(o) => {
            rec.status = if o.equal { Status::Pass } else { Status::Fail };
            rec.formula = Some(o.formula);
            rec.oracle = Some(o.oracle);
        }
        Err(e) => {
            rec.status = match e {
                Error::CapExceeded { .. } => Status::SkippedCap,
                Error::InvalidParameters(_) => Status::SkippedInvalid,
                _ => Status::Fail,
            };
            rec.note = Some(e.to_string());
        }
    }
    rec
}

/// Runs the whole grid; records come back in grid order whatever the
/// degree of parallelism.
pub fn run_sweep(cfg: &SweepConfig, timed: bool) -> Vec<VerificationRecord> {
    let grid = cfg.grid();
    let work = || grid.par_iter().map(|p| verify_one(cfg.theorem, p, cfg.trunc, &cfg.caps, timed)).collect();
    if cfg.jobs == 0 {
        return work();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped_cap: usize,
    pub skipped_invalid: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedCap => s.skipped_cap += 1,
                Status::SkippedInvalid => s.skipped_invalid += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} pass, {} fail, {} skipped-cap, {} skipped-invalid",
            self.pass, self.fail, self.skipped_cap, self.skipped_invalid
        )
    }
}

/// JSON Lines text, one record per line.
pub fn report(records: &[VerificationRecord]) -> String {
    records.iter().map(|r| r.to_json() + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let cfg: SweepConfig =
            "theorem = thm3.1\n# grid\nn = 1..2\na = 1\nb = 0..1\nc = 1\nd = 0\ntrunc = 5\n".parse().unwrap();
        assert_eq!(cfg.theorem, TheoremId::Rho);
        assert_eq!(cfg.trunc, 5);
        assert_eq!(
            cfg.grid(),
            vec![vec![1, 1, 0, 1, 0], vec![1, 1, 1, 1, 0], vec![2, 1, 0, 1, 0], vec![2, 1, 1, 1, 0]]
        );
        assert!("n = 1".parse::<SweepConfig>().is_err());
        assert!("theorem = thm3.1\nz = 1".parse::<SweepConfig>().is_err());
        assert!("theorem = thm3.1\nn = 3..1".parse::<SweepConfig>().is_err());
    }

    #[test]
    fn records() {
        let caps = Caps::default();
        let r = verify_one(TheoremId::Rho, &[1, 1, 1, 1, 1], 0, &caps, false);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(
            r.to_json(),
            r#"{"theorem":"thm3.1","params":{"n":1,"a":1,"b":1,"c":1,"d":1},"formula":"16","oracle":"16","status":"pass"}"#
        );
        let r = verify_one(TheoremId::Rho, &[1, 0, 1, 1, 1], 0, &caps, false);
        assert_eq!(r.status, Status::SkippedInvalid);
        let r = verify_one(TheoremId::FixedDiagSsyt, &[2, 1, 0, 0, 1, 1, 0], 6, &caps, false);
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn sweep_order_is_stable() {
        let mut cfg = SweepConfig::new(TheoremId::MacMahon);
        for p in ["a", "b", "c"] {
            cfg.set_range(p, 0..=2).unwrap();
        }
        let serial = report(&run_sweep(&SweepConfig { jobs: 1, ..cfg.clone() }, false));
        let parallel = report(&run_sweep(&SweepConfig { jobs: 4, ..cfg }, false));
        assert_eq!(serial, parallel);
        assert!(!serial.contains("fail"));
    }
}
