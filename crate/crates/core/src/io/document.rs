//! The `.alg` document: a JSON object with structure constants as sparse
//! `[i, j, k, "p/q"]` quadruples and operators as dense grids of rational
//! strings.
//!
//! ```text
//! {
//!   "dim": 2,
//!   "bracket": [[1, 0, 0, "1"], [1, 1, 0, "1"]],
//!   "rb_operator": [["0", "1"], ["0", "0"]],
//!   "representation": { "self": true },
//!   "deformation": { "mu": [[...]], "t": [[["0", "0"], ["0", "0"]]] },
//!   "extension": { "cocycle": { "psi": [...], "chi": [[...]] } }
//! }
//! ```
//!
//! Quadruple `[i, j, k, c]` in `bracket` means `[e_i, e_j]` has `c` in
//! coordinate `k`. A representation's `left` entries are `[x, u, w, c]`
//! (`l(e_x, v_u)` has `c` at `v_w`) and `right` entries are `[u, x, w, c]`.
//! Deformation lists hold orders `1..=N`. An extension is either a cocycle
//! `(ψ, χ)` over the document's representation, or a raw total algebra with
//! its inclusion, projection and fiber operator.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::de::{self, Deserializer};
use serde::Deserialize;

use crate::algebra::{BilinearMap, LinearOperator, RBLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, RatMatrix, Rational};
use crate::repr::Representation;

#[derive(Clone, Debug, PartialEq, Eq)]
struct RatText(Rational);

impl<'de> Deserialize<'de> for RatText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(RatText).map_err(de::Error::custom)
    }
}

type RawQuad = (usize, usize, usize, RatText);
type RawGrid = Vec<Vec<RatText>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    dim: usize,
    bracket: Vec<RawQuad>,
    rb_operator: RawGrid,
    representation: Option<RawRepresentation>,
    deformation: Option<RawDeformation>,
    extension: Option<RawExtension>,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum RawRepresentation {
    SelfRep {
        #[serde(rename = "self")]
        is_self: bool,
    },
    Explicit {
        dim_v: usize,
        #[serde(default)]
        left: Vec<RawQuad>,
        #[serde(default)]
        right: Vec<RawQuad>,
        t_v: RawGrid,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformation {
    mu: Vec<Vec<RawQuad>>,
    t: Vec<RawGrid>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum RawExtension {
    Cocycle {
        #[serde(default)]
        psi: Vec<RawQuad>,
        chi: RawGrid,
    },
    Raw {
        dim: usize,
        #[serde(default)]
        bracket: Vec<RawQuad>,
        rb_operator: RawGrid,
        inclusion: RawGrid,
        projection: RawGrid,
        fiber_operator: RawGrid,
    },
}

/// Which representation a document asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationBlock {
    SelfRepresentation,
    Explicit(Representation),
}

/// Higher-order coefficients `(μ_k, T_k)` for `k = 1..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationBlock {
    pub mu: Vec<BilinearMap>,
    pub t: Vec<LinearOperator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionBlock {
    /// `ψ : g × g → V` and `χ : g → V` over the document's representation.
    Cocycle { psi: BilinearMap, chi: LinearOperator },
    Raw {
        total: RBLeibnizAlgebra,
        inclusion: LinearOperator,
        projection: LinearOperator,
        fiber_operator: LinearOperator,
    },
}

/// A parsed and index-checked document. Axioms are not checked here; the
/// algebra is stored as given so that failures can be reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub algebra: RBLeibnizAlgebra,
    pub representation: Option<RepresentationBlock>,
    pub deformation: Option<DeformationBlock>,
    pub extension: Option<ExtensionBlock>,
}

impl AlgebraDocument {
    pub fn new(algebra: RBLeibnizAlgebra) -> Self {
        AlgebraDocument { algebra, representation: None, deformation: None, extension: None }
    }

    /// The declared representation, or the self-representation when absent.
    pub fn representation_or_self(&self) -> Representation {
        match &self.representation {
            Some(RepresentationBlock::Explicit(r)) => r.clone(),
            _ => crate::repr::self_representation(&self.algebra),
        }
    }
}

fn quads(
    what: &str,
    entries: Vec<RawQuad>,
    dims: (usize, usize, usize),
) -> Result<BilinearMap> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for (n, (i, j, k, RatText(c))) in entries.into_iter().enumerate() {
        if i >= dims.0 || j >= dims.1 || k >= dims.2 {
            return Err(Error::Document(format!(
                "{what} entry {n} [{i}, {j}, {k}] is out of range for dimensions {}x{}->{}",
                dims.0, dims.1, dims.2
            )));
        }
        if !seen.insert((i, j, k)) {
            return Err(Error::Document(format!("{what} entry {n} repeats index [{i}, {j}, {k}]")));
        }
        out.push((i, j, k, c));
    }
    BilinearMap::from_entries(dims.0, dims.1, dims.2, out)
}

fn grid(what: &str, rows: RawGrid, shape: (usize, usize)) -> Result<LinearOperator> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        let got_cols = rows.first().map_or(0, Vec::len);
        return Err(Error::Document(format!(
            "{what} must be a {}x{} grid, got {} row(s) of length {}",
            shape.0,
            shape.1,
            rows.len(),
            got_cols
        )));
    }
    let flat = rows.into_iter().flatten().map(|RatText(q)| q).collect();
    Ok(LinearOperator::new(RatMatrix::from_entries(shape.0, shape.1, flat)?))
}

/// Converts a serde_json failure into a positioned parse error.
fn positioned(e: serde_json::Error) -> Error {
    let message = e.to_string();
    // serde_json appends " at line L column C"; keep only the message.
    let message = match message.rfind(" at line ") {
        Some(p) => message[..p].to_string(),
        None => message,
    };
    Error::Parse { line: e.line(), column: e.column(), message }
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    let raw: RawDocument = serde_json::from_str(text).map_err(positioned)?;
    let n = raw.dim;
    let bracket = quads("bracket", raw.bracket, (n, n, n))?;
    let t = grid("rb_operator", raw.rb_operator, (n, n))?;
    let algebra = RBLeibnizAlgebra::from_parts_unchecked(bracket, t);

    let representation = match raw.representation {
        None => None,
        Some(RawRepresentation::SelfRep { is_self: true }) => Some(RepresentationBlock::SelfRepresentation),
        Some(RawRepresentation::SelfRep { is_self: false }) => {
            return Err(Error::Document("representation {\"self\": false} needs dim_v, left, right and t_v".into()))
        }
        Some(RawRepresentation::Explicit { dim_v, left, right, t_v }) => {
            let left = quads("representation.left", left, (n, dim_v, dim_v))?;
            let right = quads("representation.right", right, (dim_v, n, dim_v))?;
            let t_v = grid("representation.t_v", t_v, (dim_v, dim_v))?;
            Some(RepresentationBlock::Explicit(Representation::new(left, right, t_v)?))
        }
    };

    let deformation = match raw.deformation {
        None => None,
        Some(RawDeformation { mu, t }) => {
            if mu.len() != t.len() {
                return Err(Error::Document(format!(
                    "deformation has {} bracket order(s) but {} operator order(s)",
                    mu.len(),
                    t.len()
                )));
            }
            let mu = mu
                .into_iter()
                .enumerate()
                .map(|(k, q)| quads(&format!("deformation.mu[{}]", k + 1), q, (n, n, n)))
                .collect::<Result<_>>()?;
            let t = t
                .into_iter()
                .enumerate()
                .map(|(k, g)| grid(&format!("deformation.t[{}]", k + 1), g, (n, n)))
                .collect::<Result<_>>()?;
            Some(DeformationBlock { mu, t })
        }
    };

    let extension = match raw.extension {
        None => None,
        Some(RawExtension::Cocycle { psi, chi }) => {
            let dim_v = match &representation {
                Some(RepresentationBlock::Explicit(r)) => r.dim_v(),
                _ => n,
            };
            Some(ExtensionBlock::Cocycle {
                psi: quads("extension.cocycle.psi", psi, (n, n, dim_v))?,
                chi: grid("extension.cocycle.chi", chi, (dim_v, n))?,
            })
        }
        Some(RawExtension::Raw { dim, bracket, rb_operator, inclusion, projection, fiber_operator }) => {
            if dim < n {
                return Err(Error::Document(format!("extension.raw.dim {dim} is smaller than the base dimension {n}")));
            }
            let dv = dim - n;
            let total = RBLeibnizAlgebra::from_parts_unchecked(
                quads("extension.raw.bracket", bracket, (dim, dim, dim))?,
                grid("extension.raw.rb_operator", rb_operator, (dim, dim))?,
            );
            Some(ExtensionBlock::Raw {
                total,
                inclusion: grid("extension.raw.inclusion", inclusion, (dim, dv))?,
                projection: grid("extension.raw.projection", projection, (n, dim))?,
                fiber_operator: grid("extension.raw.fiber_operator", fiber_operator, (dv, dv))?,
            })
        }
    };

    Ok(AlgebraDocument { algebra, representation, deformation, extension })
}

fn push_quads(out: &mut String, indent: &str, b: &BilinearMap) {
    let entries = b.nonzero_entries();
    if entries.is_empty() {
        out.push_str("[]");
        return;
    }
    out.push('[');
    for (n, (i, j, k, c)) in entries.iter().enumerate() {
        let sep = if n + 1 == entries.len() { "" } else { "," };
        let _ = write!(out, "\n{indent}  [{i}, {j}, {k}, \"{}\"]{sep}", format_rational(c));
    }
    let _ = write!(out, "\n{indent}]");
}

fn push_grid(out: &mut String, indent: &str, t: &LinearOperator) {
    let m = t.matrix();
    if m.rows() == 0 {
        out.push_str("[]");
        return;
    }
    out.push('[');
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|q| format!("\"{}\"", format_rational(q))).collect();
        let sep = if i + 1 == m.rows() { "" } else { "," };
        let _ = write!(out, "\n{indent}  [{}]{sep}", row.join(", "));
    }
    let _ = write!(out, "\n{indent}]");
}

/// Canonical text: fixed key order, zero constants dropped, entries sorted
/// by index, rationals in lowest terms.
pub fn serialize_document(doc: &AlgebraDocument) -> String {
    let mut out = String::new();
    let a = &doc.algebra;
    let _ = write!(out, "{{\n  \"dim\": {},\n  \"bracket\": ", a.dim());
    push_quads(&mut out, "  ", a.bracket());
    out.push_str(",\n  \"rb_operator\": ");
    push_grid(&mut out, "  ", a.operator());
    match &doc.representation {
        None => {}
        Some(RepresentationBlock::SelfRepresentation) => out.push_str(",\n  \"representation\": { \"self\": true }"),
        Some(RepresentationBlock::Explicit(r)) => {
            let _ = write!(out, ",\n  \"representation\": {{\n    \"dim_v\": {},\n    \"left\": ", r.dim_v());
            push_quads(&mut out, "    ", r.left());
            out.push_str(",\n    \"right\": ");
            push_quads(&mut out, "    ", r.right());
            out.push_str(",\n    \"t_v\": ");
            push_grid(&mut out, "    ", r.operator());
            out.push_str("\n  }");
        }
    }
    if let Some(d) = &doc.deformation {
        out.push_str(",\n  \"deformation\": {\n    \"mu\": [");
        for (k, mu) in d.mu.iter().enumerate() {
            out.push_str(if k == 0 { "\n      " } else { ",\n      " });
            push_quads(&mut out, "      ", mu);
        }
        out.push_str(if d.mu.is_empty() { "],\n    \"t\": [" } else { "\n    ],\n    \"t\": [" });
        for (k, t) in d.t.iter().enumerate() {
            out.push_str(if k == 0 { "\n      " } else { ",\n      " });
            push_grid(&mut out, "      ", t);
        }
        out.push_str(if d.t.is_empty() { "]\n  }" } else { "\n    ]\n  }" });
    }
    match &doc.extension {
        None => {}
        Some(ExtensionBlock::Cocycle { psi, chi }) => {
            out.push_str(",\n  \"extension\": {\n    \"cocycle\": {\n      \"psi\": ");
            push_quads(&mut out, "      ", psi);
            out.push_str(",\n      \"chi\": ");
            push_grid(&mut out, "      ", chi);
            out.push_str("\n    }\n  }");
        }
        Some(ExtensionBlock::Raw { total, inclusion, projection, fiber_operator }) => {
            let _ = write!(out, ",\n  \"extension\": {{\n    \"raw\": {{\n      \"dim\": {},\n      \"bracket\": ", total.dim());
            push_quads(&mut out, "      ", total.bracket());
            for (key, op) in [
                ("rb_operator", total.operator()),
                ("inclusion", inclusion),
                ("projection", projection),
                ("fiber_operator", fiber_operator),
            ] {
                let _ = write!(out, ",\n      \"{key}\": ");
                push_grid(&mut out, "      ", op);
            }
            out.push_str("\n    }\n  }");
        }
    }
    out.push_str("\n}\n");
    out
}

impl fmt::Display for AlgebraDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_document(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_leibniz, check_rota_baxter};
    use crate::samples;

    const PLANE: &str = r#"{
        "dim": 2,
        "bracket": [[1, 0, 0, "1"], [1, 1, 0, "1"]],
        "rb_operator": [["0", "7/3"], ["0", "0"]]
    }"#;

    #[test]
    fn plane_document_parses_and_validates() {
        let doc = parse_document(PLANE).unwrap();
        assert_eq!(doc.algebra, samples::plane_rb(Rational::new(7.into(), 3.into())));
        assert!(check_leibniz(doc.algebra.bracket()).unwrap().is_empty());
        assert!(check_rota_baxter(doc.algebra.algebra(), doc.algebra.operator()).unwrap().is_empty());
    }

    #[test]
    fn empty_bracket_is_abelian() {
        let doc = parse_document(r#"{"dim": 3, "bracket": [], "rb_operator": [["0","0","0"],["0","0","0"],["0","0","0"]]}"#)
            .unwrap();
        assert_eq!(doc.algebra, samples::abelian_rb(3));
    }

    #[test]
    fn index_out_of_range_is_rejected() {
        let e = parse_document(r#"{"dim": 2, "bracket": [[5, 0, 0, "1"]], "rb_operator": [["0","0"],["0","0"]]}"#)
            .unwrap_err();
        assert!(matches!(e, Error::Document(ref m) if m.contains("out of range")), "{e}");
    }

    #[test]
    fn zero_denominator_has_a_position() {
        let text = "{\n  \"dim\": 1,\n  \"bracket\": [[0, 0, 0, \"1/0\"]],\n  \"rb_operator\": [[\"0\"]]\n}";
        match parse_document(text).unwrap_err() {
            Error::Parse { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("zero denominator"), "{message}");
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn duplicates_and_syntax_errors() {
        let dup = r#"{"dim": 1, "bracket": [[0,0,0,"1"],[0,0,0,"2"]], "rb_operator": [["0"]]}"#;
        assert!(matches!(parse_document(dup), Err(Error::Document(_))));
        assert!(matches!(parse_document("{\"dim\": 1,,}"), Err(Error::Parse { line: 1, .. })));
        let unknown = r#"{"dim": 1, "bracket": [], "rb_operator": [["0"]], "colour": 3}"#;
        assert!(matches!(parse_document(unknown), Err(Error::Parse { .. })));
        let float = r#"{"dim": 1, "bracket": [[0,0,0,0.5]], "rb_operator": [["0"]]}"#;
        assert!(matches!(parse_document(float), Err(Error::Parse { .. })));
        let grid = r#"{"dim": 2, "bracket": [], "rb_operator": [["0"]]}"#;
        assert!(matches!(parse_document(grid), Err(Error::Document(_))));
    }

    #[test]
    fn optional_blocks_round_trip() {
        let a = samples::solvable3_rb(Rational::from_integer(2.into()), Rational::from_integer((-3).into()));
        let r = crate::repr::dual_representation(&a, &crate::repr::self_representation(&a)).unwrap();
        let mut doc = AlgebraDocument::new(a.clone());
        doc.representation = Some(RepresentationBlock::Explicit(r.clone()));
        doc.deformation = Some(DeformationBlock {
            mu: vec![a.bracket().clone(), BilinearMap::square(3)],
            t: vec![LinearOperator::zeros(3, 3), a.operator().clone()],
        });
        doc.extension = Some(ExtensionBlock::Cocycle {
            psi: BilinearMap::zeros(3, 3, 3),
            chi: LinearOperator::identity(3),
        });
        let text = serialize_document(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(serialize_document(&back), text);

        let e = crate::extension::AbelianExtension::split(&a, &r).unwrap();
        doc.extension = Some(ExtensionBlock::Raw {
            total: e.total().clone(),
            inclusion: e.inclusion().clone(),
            projection: e.projection().clone(),
            fiber_operator: e.fiber_operator().clone(),
        });
        doc.representation = Some(RepresentationBlock::SelfRepresentation);
        doc.deformation = Some(DeformationBlock { mu: vec![], t: vec![] });
        assert_eq!(parse_document(&serialize_document(&doc)).unwrap(), doc);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn canonical_documents_round_trip(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = samples::random_rb_algebra(&mut rng);
                let r = samples::random_representation(&mut rng, &a, 2);
                let mut doc = AlgebraDocument::new(a.clone());
                doc.representation = Some(RepresentationBlock::Explicit(r.clone()));
                let n = a.dim();
                doc.deformation = Some(DeformationBlock {
                    mu: vec![samples::random_bracket(&mut rng, n, 0.3)],
                    t: vec![samples::random_operator(&mut rng, n, n, 3)],
                });
                doc.extension = Some(ExtensionBlock::Cocycle {
                    psi: crate::algebra::BilinearMap::zeros(n, n, r.dim_v()),
                    chi: samples::random_operator(&mut rng, r.dim_v(), n, 2),
                });
                let text = serialize_document(&doc);
                let back = parse_document(&text).unwrap();
                prop_assert_eq!(&back, &doc);
                prop_assert_eq!(serialize_document(&back), text);
            }
        }
    }
}
