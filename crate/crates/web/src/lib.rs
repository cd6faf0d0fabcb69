//! WebAssembly bindings for the browser demo in `www/`. Every export takes
//! the presentation text and returns JSON (or DOT) as a string.

use quiver_exact_cli::{analyze, k0, load, reconstruct, render_dot, CliError, Options};
use wasm_bindgen::prelude::*;

const EXAMPLES: [(&str, &str); 4] = [
    ("EX1", include_str!("../../../fixtures/EX1.quiver")),
    ("AUS2", include_str!("../../../fixtures/AUS2.quiver")),
    ("A2", include_str!("../../../fixtures/A2.quiver")),
    ("SS1", include_str!("../../../fixtures/SS1.quiver")),
];

fn options(dotted: &str) -> Options {
    Options {
        dotted: Some(dotted.to_string()),
        max_deg: 12,
        check_span: 4,
        ..Options::default()
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

pub fn analyze_text(text: &str) -> Result<String, CliError> {
    let opts = options("split");
    let session = load(text, &opts)?;
    Ok(json(&analyze(&session, &opts)?))
}

pub fn reconstruct_text(text: &str, dotted: &str, verify_ig: bool) -> Result<String, CliError> {
    let opts = Options {
        verify_ig,
        ..options(dotted)
    };
    let session = load(text, &opts)?;
    Ok(json(&reconstruct(&session, &opts)?))
}

pub fn k0_text(text: &str, dotted: &str, samples: usize, seed: u64) -> Result<String, CliError> {
    let opts = Options {
        samples,
        seed,
        ..options(dotted)
    };
    let session = load(text, &opts)?;
    Ok(json(&k0(&session, &opts)?))
}

pub fn dot_text(text: &str, dotted: &str) -> Result<String, CliError> {
    let opts = options(dotted);
    let session = load(text, &opts)?;
    Ok(render_dot(&session.selection(&opts, "all")?))
}

fn js(r: Result<String, CliError>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Names and texts of the bundled example presentations, as JSON pairs.
#[wasm_bindgen]
pub fn examples() -> String {
    json(&EXAMPLES)
}

#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(text: &str) -> Result<String, JsValue> {
    js(analyze_text(text))
}

#[wasm_bindgen(js_name = reconstruct)]
pub fn reconstruct_js(text: &str, dotted: &str, verify_ig: bool) -> Result<String, JsValue> {
    js(reconstruct_text(text, dotted, verify_ig))
}

#[wasm_bindgen(js_name = k0)]
pub fn k0_js(text: &str, dotted: &str, samples: usize, seed: u32) -> Result<String, JsValue> {
    js(k0_text(text, dotted, samples, seed.into()))
}

#[wasm_bindgen(js_name = dot)]
pub fn dot_js(text: &str, dotted: &str) -> Result<String, JsValue> {
    js(dot_text(text, dotted))
}
