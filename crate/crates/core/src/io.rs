//! Import and export: facet-cycle JSON, binary planar_code, DOT.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::PolytopeError;
use crate::polytope::Polytope;

#[derive(Debug, Serialize, Deserialize)]
struct FacetsJson {
    facets: Vec<Vec<u32>>,
}

/// Parse the JSON form `{"facets": [[v, ...], ...]}`.
pub fn parse_json(source: &[u8]) -> Result<Polytope, PolytopeError> {
    let doc: FacetsJson = serde_json::from_slice(source)
        .map_err(|e| PolytopeError::Malformed(format!("json: {e}")))?;
    Polytope::from_facets(doc.facets)
}

/// Export as JSON. Parsing the output reproduces the facet list bit-exactly.
pub fn to_json(p: &Polytope) -> String {
    serde_json::to_string(&FacetsJson { facets: p.facets().to_vec() }).unwrap()
}

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Parse a binary planar_code stream: header, then per graph a vertex count
/// byte and 0-terminated rotation lists (1-based neighbor ids). Facet cycles
/// are recovered by face tracing. Inputs with more than 255 vertices are
/// rejected.
pub fn parse_planar_code(source: &[u8]) -> Result<Vec<Polytope>, PolytopeError> {
    let rest = source
        .strip_prefix(PLANAR_CODE_HEADER)
        .ok_or_else(|| PolytopeError::Malformed("missing planar_code header".into()))?;
    let mut out = Vec::new();
    let mut it = rest.iter().copied().peekable();
    while it.peek().is_some() {
        let n = it.next().unwrap();
        if n == 0 {
            return Err(PolytopeError::Malformed(
                "planar_code with more than 255 vertices is rejected".into(),
            ));
        }
        let n = n as usize;
        let mut rot: Vec<Vec<u32>> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let b = it.next().ok_or_else(|| {
                    PolytopeError::Malformed(format!("truncated rotation list of vertex {v}"))
                })?;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(PolytopeError::Malformed(format!(
                        "neighbor id {b} out of range (n = {n})"
                    )));
                }
                nbrs.push(b as u32 - 1);
            }
            rot.push(nbrs);
        }
        out.push(polytope_from_rotations(&rot)?);
    }
    if out.is_empty() {
        return Err(PolytopeError::Malformed("planar_code stream holds no graph".into()));
    }
    Ok(out)
}

/// Rebuild facet cycles from per-vertex rotation lists via face tracing:
/// the dart after (u,v) is (v,w) with w the rotation predecessor of u at v.
fn polytope_from_rotations(rot: &[Vec<u32>]) -> Result<Polytope, PolytopeError> {
    let n = rot.len();
    let prev = |v: u32, x: u32| -> Result<u32, PolytopeError> {
        let list = &rot[v as usize];
        let i = list
            .iter()
            .position(|&y| y == x)
            .ok_or_else(|| PolytopeError::Malformed(format!("rotation of {v} misses neighbor {x}")))?;
        Ok(list[(i + list.len() - 1) % list.len()])
    };
    let mut used: HashMap<(u32, u32), bool> = HashMap::new();
    for v in 0..n as u32 {
        for &w in &rot[v as usize] {
            if used.insert((v, w), false).is_some() {
                return Err(PolytopeError::Malformed(format!("duplicate neighbor {w} at vertex {v}")));
            }
        }
    }
    let darts: Vec<(u32, u32)> = {
        let mut d: Vec<_> = used.keys().copied().collect();
        d.sort_unstable();
        d
    };
    for &(u, v) in &darts {
        if !used.contains_key(&(v, u)) {
            return Err(PolytopeError::Malformed(format!("edge ({u},{v}) lacks its reverse")));
        }
    }
    let mut facets = Vec::new();
    for &start in &darts {
        if used[&start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        loop {
            *used.get_mut(&cur).unwrap() = true;
            cycle.push(cur.0);
            let next = (cur.1, prev(cur.1, cur.0)?);
            cur = next;
            if cur == start {
                break;
            }
            if cycle.len() > 2 * darts.len() {
                return Err(PolytopeError::Malformed("face tracing does not close".into()));
            }
        }
        facets.push(cycle);
    }
    Polytope::from_facets(facets)
}

/// Export as planar_code (single graph). Fails for more than 255 vertices.
pub fn to_planar_code(p: &Polytope) -> Result<Vec<u8>, PolytopeError> {
    if p.f0() > 255 {
        return Err(PolytopeError::Malformed(format!(
            "planar_code export limited to 255 vertices, got {}",
            p.f0()
        )));
    }
    let mut out = PLANAR_CODE_HEADER.to_vec();
    out.push(p.f0() as u8);
    for v in 0..p.f0() as u32 {
        let nbrs = p.vertex_neighbors(v);
        let first = *nbrs.iter().min().unwrap();
        let mut x = first;
        for _ in 0..3 {
            out.push(x as u8 + 1);
            x = p.rotate(v, x);
        }
        out.push(0);
    }
    Ok(out)
}

/// DOT rendering of the vertex-edge graph.
pub fn to_dot(p: &Polytope) -> String {
    let mut s = String::from("graph polytope {\n");
    for (u, v) in p.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}
