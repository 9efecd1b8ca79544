//! CSV and text rendering. Floats use `Display`, which prints the shortest
//! string that parses back to the same value, matching the JSON output.

use clap::ValueEnum;
use rootdisk::hypotheses::HypothesisReport;
use rootdisk::BoundReport;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub const COLUMNS: [&str; 13] = [
    "theorem",
    "t1",
    "t2",
    "k",
    "m",
    "alpha",
    "beta",
    "center_re",
    "center_im",
    "radius",
    "enclosing",
    "tightness",
    "contained",
];

pub struct Row {
    pub theorem: String,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub center_re: f64,
    pub center_im: f64,
    pub radius: f64,
    pub enclosing: f64,
    pub tightness: Option<f64>,
    pub contained: Option<bool>,
    pub nested: Option<bool>,
    pub input: Option<String>,
}

impl Row {
    pub fn from_report(r: &BoundReport) -> Row {
        Row {
            theorem: r.theorem.to_string(),
            t1: r.t1,
            t2: r.t2,
            k: r.k,
            m: r.m,
            alpha: r.wedge.map(|w| w.alpha),
            beta: r.wedge.map(|w| w.beta),
            center_re: r.disk.center.re,
            center_im: r.disk.center.im,
            radius: r.disk.radius,
            enclosing: r.enclosing,
            tightness: None,
            contained: None,
            nested: None,
            input: None,
        }
    }

    pub fn from_verdict(r: &BoundReport, tightness: f64, contained: bool) -> Row {
        Row {
            tightness: Some(tightness),
            contained: Some(contained),
            ..Row::from_report(r)
        }
    }

    fn cells(&self) -> Vec<String> {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        vec![
            self.theorem.clone(),
            opt(self.t1),
            opt(self.t2),
            opt(self.k),
            opt(self.m),
            opt(self.alpha),
            opt(self.beta),
            self.center_re.to_string(),
            self.center_im.to_string(),
            self.radius.to_string(),
            self.enclosing.to_string(),
            opt(self.tightness),
            opt(self.contained),
        ]
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `extended` appends the `nested` and `input` columns used by `compare`.
pub fn print_rows(rows: &[Row], format: Format, extended: bool) {
    match format {
        Format::Csv => {
            let mut header: Vec<&str> = COLUMNS.to_vec();
            if extended {
                header.extend(["nested", "input"]);
            }
            println!("{}", header.join(","));
            for r in rows {
                let mut cells = r.cells();
                if extended {
                    cells.push(r.nested.map(|b| b.to_string()).unwrap_or_default());
                    cells.push(r.input.clone().unwrap_or_default());
                }
                let line: Vec<String> = cells.iter().map(|c| csv_field(c)).collect();
                println!("{}", line.join(","));
            }
        }
        Format::Text | Format::Json => {
            for r in rows {
                print_text(r);
            }
        }
    }
}

fn print_text(r: &Row) {
    let mut line = format!(
        "{:<13} center {} {:+}i  radius {}  enclosing {}",
        r.theorem, r.center_re, r.center_im, r.radius, r.enclosing
    );
    if let Some(t1) = r.t1 {
        line.push_str(&format!("  t1 {t1}"));
    }
    if let Some(t2) = r.t2 {
        line.push_str(&format!("  t2 {t2}"));
    }
    if let Some(k) = r.k {
        line.push_str(&format!("  k {k}"));
    }
    if let Some(m) = r.m {
        line.push_str(&format!("  m {m}"));
    }
    if let (Some(t), Some(c)) = (r.tightness, r.contained) {
        line.push_str(&format!(
            "  tightness {t}  {}",
            if c { "contained" } else { "NOT CONTAINED" }
        ));
    }
    if let Some(n) = r.nested {
        line.push_str(if n { "  nested" } else { "  not nested" });
    }
    if let Some(input) = &r.input {
        line.push_str(&format!("  [{input}]"));
    }
    println!("{line}");
}

pub fn print_check_csv(h: &HypothesisReport) {
    let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    println!("theorem,ok,t1,t2,k,m,alpha,beta,violations");
    let cells = [
        h.theorem.to_string(),
        h.ok.to_string(),
        opt(h.t1),
        opt(h.t2),
        h.k.map(|k| k.to_string()).unwrap_or_default(),
        h.m.map(|m| m.to_string()).unwrap_or_default(),
        opt(h.wedge.map(|w| w.alpha)),
        opt(h.wedge.map(|w| w.beta)),
        h.violations.join("; "),
    ];
    let line: Vec<String> = cells.iter().map(|c| csv_field(c)).collect();
    println!("{}", line.join(","));
}

pub fn print_check_text(h: &HypothesisReport) {
    println!(
        "{}: {}",
        h.theorem,
        if h.ok { "hypotheses hold" } else { "hypotheses fail" }
    );
    if let Some(k) = h.k {
        println!("  k = {k} (admissible {:?})", h.feasible_k);
    }
    if let Some(m) = h.m {
        println!("  m = {m} (admissible {:?})", h.feasible_m);
    }
    if let Some(w) = h.wedge {
        println!("  wedge beta = {}, alpha = {}", w.beta, w.alpha);
    }
    for v in &h.violations {
        println!("  violation: {v}");
    }
    for n in &h.notes {
        println!("  note: {n}");
    }
}
