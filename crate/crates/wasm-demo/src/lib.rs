//! Browser bindings. Each export takes plain strings and returns a JSON
//! string, so the page needs no glue beyond `JSON.parse`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use picard::group::{classify, element_order, eval_str, fixed_point_elliptic, IsometryType};
use picard::isotropy::summarize;
use picard::report::Config;
use picard::verify;

fn to_text(v: Value) -> String {
    v.to_string()
}

/// Matrix, type, projective order and (for elliptics) the fixed point.
#[wasm_bindgen]
pub fn inspect_word(word: &str) -> String {
    let g = match eval_str(word) {
        Ok(g) => g,
        Err(e) => return to_text(json!({ "error": e.to_string() })),
    };
    let kind = classify(&g);
    let fixed = match kind {
        Ok(IsometryType::RegularElliptic | IsometryType::SpecialElliptic) => {
            fixed_point_elliptic(&g).ok().map(|v| v.to_string())
        }
        _ => None,
    };
    let rows: Vec<String> = g.matrix().to_string().lines().map(str::to_string).collect();
    to_text(json!({
        "word": word,
        "matrix": rows,
        "type": kind.map(|k| k.to_string()).unwrap_or_else(|e| e.to_string()),
        "order": element_order(&g, 200).ok(),
        "fixed_point": fixed,
    }))
}

/// Finite stabilizer of a named point.
#[wasm_bindgen]
pub fn isotropy(point: &str) -> String {
    match summarize(point, Config::default().max_closure) {
        Ok(s) => serde_json::to_string(&s).expect("serializable"),
        Err(e) => to_text(json!({ "error": e.to_string() })),
    }
}

/// One section of the verification report. Coset bounds are kept small so
/// the page stays responsive.
#[wasm_bindgen]
pub fn verify_section(section: &str) -> String {
    let cfg = Config { max_cosets: 5_000, ..Config::default() };
    match verify::run(section, &cfg) {
        Some(r) => serde_json::to_string(&r).expect("serializable"),
        None => to_text(json!({ "error": format!("unknown section {section}") })),
    }
}

#[wasm_bindgen]
pub fn sections() -> String {
    to_text(json!(verify::SECTIONS))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn word_inspection() {
        let v = parse(inspect_word("R1*R2*R3"));
        assert_eq!(v["order"], 4);
        assert_eq!(v["type"], "regular-elliptic");
        assert_eq!(v["matrix"].as_array().unwrap().len(), 3);
        assert!(parse(inspect_word("R1*")).get("error").is_some());
    }

    #[test]
    fn isotropy_and_sections() {
        assert_eq!(parse(isotropy("w12"))["order"], 12);
        assert!(parse(isotropy("nowhere")).get("error").is_some());
        let r = parse(verify_section("orbits"));
        assert_eq!(r["summary"]["fail"], 0);
        assert_eq!(parse(sections()).as_array().unwrap().len(), verify::SECTIONS.len());
    }
}
