//! Plain-text complex format.
//!
//! ```text
//! # cone over a square
//! vertices 5
//! facet 1 2 5
//! facet 2 3 5
//! ```
//!
//! One `vertices m` header, then one `facet` line per facet. Vertices are the
//! 1-based labels `1..=m`; `#` starts a comment.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::MAX_VERTICES;

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut m: Option<usize> = None;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(keyword) = tokens.next() else { continue };
        match keyword {
            "vertices" => {
                if m.is_some() {
                    return Err(err("duplicate `vertices` header".into()));
                }
                let count = tokens.next().ok_or_else(|| err("`vertices` needs a count".into()))?;
                let count: usize = count.parse().map_err(|_| err(format!("invalid vertex count `{count}`")))?;
                if count > MAX_VERTICES {
                    return Err(err(format!("{count} vertices exceeds the limit of {MAX_VERTICES}")));
                }
                if let Some(extra) = tokens.next() {
                    return Err(err(format!("unexpected token `{extra}`")));
                }
                m = Some(count);
            }
            "facet" => {
                let m = m.ok_or_else(|| err("`facet` before `vertices` header".into()))?;
                let mut facet = Vec::new();
                for tok in tokens {
                    let v: u32 = tok.parse().map_err(|_| err(format!("invalid vertex `{tok}`")))?;
                    if v == 0 || v as usize > m {
                        return Err(err(format!("vertex {v} outside 1..={m}")));
                    }
                    if facet.contains(&v) {
                        return Err(err(format!("vertex {v} repeated in facet")));
                    }
                    facet.push(v);
                }
                facets.push(facet);
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    let m = m.ok_or(Error::Parse { line: text.lines().count().max(1), message: "missing `vertices` header".into() })?;
    SimplicialComplex::from_facets(VertexSet::range(m)?, &facets)
}

/// Render a complex on `1..=m` in the text format, one line per facet.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("vertices {}\n", k.num_vertices());
    for facet in k.facet_labels() {
        if facet.len() <= 1 {
            continue;
        }
        let vs: Vec<String> = facet.iter().map(u32::to_string).collect();
        out.push_str(&format!("facet {}\n", vs.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_TRIANGLES: &str =
        "# two triangles and a path\nvertices 5\nfacet 1 2 5\nfacet 2 3 5   # shaded\nfacet 1 4\nfacet 3 4\n";

    #[test]
    fn parses_two_triangles() {
        let k = parse_complex(TWO_TRIANGLES).unwrap();
        assert_eq!(k.f_vector(), vec![5, 7, 2]);
    }

    #[test]
    fn range_errors_carry_line_numbers() {
        let e = parse_complex("vertices 5\n\nfacet 1 9\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(matches!(parse_complex("facet 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("vertices 25\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("vertices 3\nface 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_complex("# nothing\n").is_err());
    }

    #[test]
    fn no_facets_gives_isolated_vertices() {
        let k = parse_complex("vertices 4\n").unwrap();
        assert_eq!(k.f_vector(), vec![4]);
    }

    #[test]
    fn write_then_parse() {
        let k = parse_complex(TWO_TRIANGLES).unwrap();
        assert_eq!(parse_complex(&write_complex(&k)).unwrap(), k);
    }
}
