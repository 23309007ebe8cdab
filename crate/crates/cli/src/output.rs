use serde_json::{json, Value};

use crate::commands::CliError;
use crate::{Command, OutFormat};

pub fn render(cmd: &Command, report: &Value, format: OutFormat) -> String {
    match format {
        OutFormat::Json => format!("{}\n", serde_json::to_string_pretty(report).expect("plain data")),
        OutFormat::Tsv => match cmd {
            Command::Slope { .. } => slope_table(report),
            _ => {
                let mut lines = Vec::new();
                flatten("", report, &mut lines);
                lines.iter().map(|l| format!("{l}\n")).collect()
            }
        },
    }
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// One `path<TAB>value` line per leaf; scalars keep their exact strings.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(xs) if !xs.is_empty() => xs.iter().enumerate().for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        Value::Array(_) => out.push(format!("{prefix}\t")),
        _ => out.push(format!("{prefix}\t{}", leaf(v))),
    }
}

fn slope_table(report: &Value) -> String {
    let mut s = String::from("dims\tdelta0\tdelta_inf\tslope\tfamily\n");
    for row in report["modules"].as_array().into_iter().flatten() {
        let dims: Vec<String> = row["dims"].as_object().into_iter().flatten().map(|(_, d)| d.to_string()).collect();
        s += &format!(
            "{}\t{}\t{}\t{}\t{}\n",
            dims.join(","),
            row["delta0"],
            row["delta_inf"],
            leaf(&row["slope"]),
            leaf(&row["family"])
        );
    }
    s
}

pub fn error_json(e: &CliError) -> String {
    json!({ "canrep_format": canrep::format::FORMAT_VERSION, "error": { "code": e.code(), "message": e.to_string() } }).to_string()
}
