//! WebAssembly bindings for the browser demo in `www/`. Every entry point
//! takes and returns JSON text so the page needs no bindings of its own.

use canrep::approx::peg_hom_growth;
use canrep::format::{dims_json, AlgebraSpec};
use canrep::homology::tau_inverse;
use canrep::repcat::Representation;
use canrep::slopes::{closure_pool, PoolConfig, TubularAlgebra};
use canrep::trisection::{regular_simples, TubeId};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn fail(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn algebra(spec: &str) -> Result<std::sync::Arc<canrep::Algebra>, String> {
    AlgebraSpec::from_json(spec).and_then(|s| s.build()).map_err(|e| e.to_string())
}

fn tube(alg: &canrep::Algebra, s: &str) -> Result<TubeId, String> {
    let t = TubeId::parse(alg.field(), s).map_err(|e| e.to_string())?;
    t.validate(alg).map_err(|e| e.to_string())?;
    Ok(t)
}

/// Dimension vectors along `τ⁻ᵏ P` for the projective at `vertex`, stopping
/// early if the orbit leaves the module category.
pub fn tau_orbit_report(spec: &str, vertex: &str, steps: usize) -> Result<Value, String> {
    let alg = algebra(spec)?;
    let v = alg.vertex_index(vertex).ok_or_else(|| format!("unknown vertex {vertex:?}"))?;
    let mut m = Representation::projective(&alg, v);
    let mut rows = vec![json!({ "k": 0, "dims": dims_json(&alg, m.dims()), "defect": m.defect().ok() })];
    for k in 1..=steps {
        let t = tau_inverse(&m).map_err(|e| e.to_string())?;
        if t.module.is_zero() {
            break;
        }
        m = t.module;
        rows.push(json!({ "k": k, "dims": dims_json(&alg, m.dims()), "defect": m.defect().ok() }));
    }
    Ok(json!({ "vertices": alg.vertices(), "orbit": rows }))
}

/// `dim Hom(P(c), S[r])` for `r ≤ depth`, for each regular simple of the tube.
pub fn peg_growth_report(spec: &str, tube_id: &str, depth: usize) -> Result<Value, String> {
    let alg = algebra(spec)?;
    let t = tube(&alg, tube_id)?;
    let peg = Representation::projective(&alg, alg.vertex_count() - 1);
    let mut series = Vec::new();
    for (k, s) in regular_simples(&alg, &t).map_err(|e| e.to_string())?.iter().enumerate() {
        let g = peg_hom_growth(&peg, s, depth).map_err(|e| e.to_string())?;
        series.push(json!({ "socle": k, "dims": g.dims, "monomorphisms": g.witnesses.iter().map(Option::is_some).collect::<Vec<_>>() }));
    }
    Ok(json!({ "tube": t.to_string(), "series": series }))
}

/// `(δ₀, δ_∞)` and slope of every indecomposable found by a small closure
/// search over a tubular algebra.
pub fn slope_scatter_report(spec: &str, max_total_dim: usize, seed: u64) -> Result<Value, String> {
    let alg = algebra(spec)?;
    let tub = TubularAlgebra::new(&alg).map_err(|e| e.to_string())?;
    let cfg = PoolConfig { max_total_dim: max_total_dim.min(9), max_size: 80, seed };
    let pool = closure_pool(&tub, &cfg).map_err(|e| e.to_string())?;
    let points: Vec<Value> = pool
        .iter()
        .map(|m| {
            let d = m.dims();
            let fam = tub.family(d);
            json!({
                "dims": dims_json(&alg, d),
                "delta0": tub.delta_zero(d),
                "delta_inf": tub.delta_infty(d),
                "family": fam.tag(),
                "slope": fam.slope().map(ToString::to_string),
            })
        })
        .collect();
    Ok(json!({ "points": points }))
}

#[wasm_bindgen]
pub fn tau_orbit(spec: &str, vertex: &str, steps: usize) -> String {
    tau_orbit_report(spec, vertex, steps).map_or_else(fail, |v| v.to_string())
}

#[wasm_bindgen]
pub fn peg_growth(spec: &str, tube_id: &str, depth: usize) -> String {
    peg_growth_report(spec, tube_id, depth).map_or_else(fail, |v| v.to_string())
}

#[wasm_bindgen]
pub fn slope_scatter(spec: &str, max_total_dim: usize, seed: u64) -> String {
    slope_scatter_report(spec, max_total_dim, seed).map_or_else(fail, |v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    const KRON: &str = r#"{"field": {"kind": "Fp", "p": 5}}"#;
    const TUBULAR: &str = r#"{"field": {"kind": "Fp", "p": 5}, "weights": [2,2,2,2], "params": ["2","3"]}"#;

    #[test]
    fn orbit_of_the_simple_projective() {
        let v = tau_orbit_report(KRON, "c", 3).unwrap();
        let dims: Vec<(u64, u64)> = v["orbit"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["dims"]["0"].as_u64().unwrap(), r["dims"]["c"].as_u64().unwrap()))
            .collect();
        assert_eq!(dims, vec![(0, 1), (2, 3), (4, 5), (6, 7)]);
        assert!(tau_orbit_report(KRON, "x", 1).is_err());
    }

    #[test]
    fn growth_series() {
        let v = peg_growth_report(KRON, "pt:t", 4).unwrap();
        assert_eq!(v["series"][0]["dims"], json!([1, 2, 3, 4]));
        assert!(peg_growth(KRON, "arm:1", 2).contains("error"));
    }

    #[test]
    fn scatter_points_carry_slopes() {
        let v = slope_scatter_report(TUBULAR, 5, 1).unwrap();
        let pts = v["points"].as_array().unwrap();
        assert!(pts.iter().any(|p| p["slope"] == json!("1")));
        assert!(pts.iter().any(|p| p["family"] == json!("t0")));
    }
}
