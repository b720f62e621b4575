use std::fmt::Write as _;

use homfly_core::Verdict;
use serde::Serialize;

/// Output encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// One computed value.
#[derive(Clone, Debug, Serialize)]
pub struct ValueRecord {
    pub quantity: String,
    pub knot: String,
    pub framing: i64,
    pub color: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reverse: Option<String>,
    /// Human-readable value.
    pub value: String,
    /// Structured exact value.
    pub exact: serde_json::Value,
}

/// One refined LMOV verdict with its integer table.
#[derive(Clone, Debug, Serialize)]
pub struct LmovRecord {
    pub knot: String,
    pub framing: i64,
    pub mu: String,
    pub verdict: String,
    pub pole: u32,
    pub epsilon: u8,
    /// Rows `[g, Q, N]`.
    #[serde(rename = "N")]
    pub n: Vec<(u32, i64, serde_json::Value)>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// A fact about the persistent cache.
#[derive(Clone, Debug, Serialize)]
pub struct CacheRecord {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Record {
    Value(ValueRecord),
    Lmov(LmovRecord),
    Verdict(Verdict),
    Cache(CacheRecord),
}

impl Record {
    pub fn passed(&self) -> bool {
        match self {
            Record::Verdict(v) => v.pass,
            Record::Lmov(l) => l.verdict == "pass",
            Record::Value(_) | Record::Cache(_) => true,
        }
    }
}

/// Everything one invocation prints.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub engine_version: String,
    pub command: Vec<String>,
    pub wall_time_seconds: f64,
    pub results: Vec<Record>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(Record::passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Pretty => self.render_pretty(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let mut header: Option<&str> = None;
        let mut put_header = |w: &mut csv::Writer<Vec<u8>>, h: &'static str, cols: &[&str]| {
            if header != Some(h) {
                w.write_record(cols).expect("in-memory write");
                header = Some(h);
            }
        };
        for r in &self.results {
            match r {
                Record::Value(v) => {
                    put_header(&mut w, "value", &["quantity", "knot", "framing", "color", "reverse", "value"]);
                    let reverse = v.reverse.clone().unwrap_or_default();
                    w.write_record([&v.quantity, &v.knot, &v.framing.to_string(), &v.color, &reverse, &v.value])
                }
                Record::Lmov(l) => {
                    put_header(&mut w, "lmov", &["mu", "g", "Q", "N"]);
                    if l.n.is_empty() {
                        w.write_record([l.mu.as_str(), "", "", ""])
                    } else {
                        l.n.iter().try_for_each(|(g, q, n)| {
                            let n = match n {
                                serde_json::Value::String(s) => s.clone(),
                                other => other.to_string(),
                            };
                            w.write_record([l.mu.clone(), g.to_string(), q.to_string(), n])
                        })
                    }
                }
                Record::Verdict(v) => {
                    put_header(&mut w, "verdict", &["check", "instance", "pass", "detail"]);
                    w.write_record([&v.check, &v.instance, &v.pass.to_string(), &v.detail])
                }
                Record::Cache(c) => {
                    put_header(&mut w, "cache", &["key", "value"]);
                    w.write_record([&c.key, &c.value])
                }
            }
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    fn render_pretty(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = match r {
                Record::Value(v) => {
                    let rev = v.reverse.as_ref().map(|m| format!(" reverse {m}")).unwrap_or_default();
                    writeln!(out, "{} {} (τ={}) {}{rev}: {}", v.quantity, v.knot, v.framing, v.color, v.value)
                }
                Record::Lmov(l) => {
                    let _ = writeln!(
                        out,
                        "{} {} (τ={}) μ={} pole={} ε={}",
                        l.verdict.to_uppercase(),
                        l.knot,
                        l.framing,
                        l.mu,
                        l.pole,
                        l.epsilon
                    );
                    if !l.detail.is_empty() {
                        let _ = writeln!(out, "    {}", l.detail);
                    }
                    l.n.iter().try_for_each(|(g, q, n)| writeln!(out, "    g={g} Q={q} N={n}"))
                }
                Record::Verdict(v) => {
                    let mark = if v.pass { "PASS" } else { "FAIL" };
                    let detail = if v.detail.is_empty() { String::new() } else { format!(": {}", v.detail) };
                    writeln!(out, "{mark} {} [{}]{detail}", v.check, v.instance)
                }
                Record::Cache(c) => writeln!(out, "{}: {}", c.key, c.value),
            };
        }
        let passed = self.results.iter().filter(|r| r.passed()).count();
        let _ = writeln!(out, "{passed}/{} ok in {:.2}s", self.results.len(), self.wall_time_seconds);
        out
    }
}
