//! Planar string diagrams over the Frobenius signature.
//!
//! A diagram is a top-to-bottom sequence of slices, each a left-to-right row
//! of generators; planarity is by construction (there is no crossing). The
//! DSL is `slice (";" slice)*` with `slice = gen ("," gen)*` and generator
//! names id, mul, comul, unit, counit, cup, cap.

mod eval;
mod fuzz;
mod lemma;
mod random;

use std::fmt;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use eval::{evaluate, EvalOptions, Evaluator};
pub(crate) use eval::evaluate_pair;
pub use fuzz::{bead_additivity, spider_check, SpiderFailure, SpiderOptions, SpiderOutcome};
pub use lemma::{lemma_suite, LemmaCheck, LemmaReport};
pub use random::random_connected_diagram;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DiagramError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("interface mismatch entering slice {slice}: expected width {expected}, got {got}")]
    InterfaceMismatch {
        slice: usize,
        expected: usize,
        got: usize,
    },
    #[error("empty diagram")]
    EmptyDiagram,
    #[error("diagram is not connected")]
    NotConnected,
    #[error("interface width {width} exceeds the configured maximum {max}")]
    WidthExceeded { width: usize, max: usize },
    #[error("random generator gave up after {0} rejected attempts")]
    GiveUp(usize),
    #[error("identity {tag} failed: {witness}")]
    IdentityFailed { tag: String, witness: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The seven generators with their fixed arities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// 1 -> 1
    Id,
    /// 2 -> 1
    Mul,
    /// 1 -> 2
    Comul,
    /// 0 -> 1
    Unit,
    /// 1 -> 0
    Counit,
    /// 2 -> 0, evaluated as eps o mul
    Cup,
    /// 0 -> 2, evaluated as the metric g
    Cap,
}

impl Generator {
    pub fn in_arity(&self) -> usize {
        match self {
            Generator::Id | Generator::Counit | Generator::Comul => 1,
            Generator::Mul | Generator::Cup => 2,
            Generator::Unit | Generator::Cap => 0,
        }
    }

    pub fn out_arity(&self) -> usize {
        match self {
            Generator::Id | Generator::Unit | Generator::Mul => 1,
            Generator::Comul | Generator::Cap => 2,
            Generator::Counit | Generator::Cup => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::Id => "id",
            Generator::Mul => "mul",
            Generator::Comul => "comul",
            Generator::Unit => "unit",
            Generator::Counit => "counit",
            Generator::Cup => "cup",
            Generator::Cap => "cap",
        }
    }

    pub fn from_name(name: &str) -> Option<Generator> {
        Some(match name {
            "id" => Generator::Id,
            "mul" => Generator::Mul,
            "comul" => Generator::Comul,
            "unit" => Generator::Unit,
            "counit" => Generator::Counit,
            "cup" => Generator::Cup,
            "cap" => Generator::Cap,
            _ => return None,
        })
    }
}

fn slice_in(slice: &[Generator]) -> usize {
    slice.iter().map(Generator::in_arity).sum()
}

fn slice_out(slice: &[Generator]) -> usize {
    slice.iter().map(Generator::out_arity).sum()
}

/// A validated planar diagram: slice interfaces match up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    slices: Vec<Vec<Generator>>,
}

impl Diagram {
    pub fn new(slices: Vec<Vec<Generator>>) -> Result<Diagram, DiagramError> {
        if slices.is_empty() || slices.iter().any(Vec::is_empty) {
            return Err(DiagramError::EmptyDiagram);
        }
        let mut width = slice_in(&slices[0]);
        for (s, slice) in slices.iter().enumerate() {
            let need = slice_in(slice);
            if need != width {
                return Err(DiagramError::InterfaceMismatch {
                    slice: s,
                    expected: width,
                    got: need,
                });
            }
            width = slice_out(slice);
        }
        Ok(Diagram { slices })
    }

    pub fn slices(&self) -> &[Vec<Generator>] {
        &self.slices
    }

    /// Number of input legs.
    pub fn inputs(&self) -> usize {
        slice_in(&self.slices[0])
    }

    /// Number of output legs.
    pub fn outputs(&self) -> usize {
        slice_out(self.slices.last().expect("nonempty"))
    }

    /// Interface widths from the top boundary (inputs) to the bottom
    /// (outputs), one entry per interface.
    pub fn widths(&self) -> Vec<usize> {
        let mut out = vec![self.inputs()];
        for slice in &self.slices {
            out.push(slice_out(slice));
        }
        out
    }

    /// Total number of generator occurrences (Id included).
    pub fn generator_count(&self) -> usize {
        self.slices.iter().map(Vec::len).sum()
    }

    pub fn has_non_identity(&self) -> bool {
        self.slices.iter().flatten().any(|g| *g != Generator::Id)
    }

    /// Stacks `self` on top of `below` (outputs of self feed below).
    pub fn compose(&self, below: &Diagram) -> Result<Diagram, DiagramError> {
        if self.outputs() != below.inputs() {
            return Err(DiagramError::InterfaceMismatch {
                slice: self.slices.len(),
                expected: self.outputs(),
                got: below.inputs(),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend(below.slices.iter().cloned());
        Diagram::new(slices)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .slices
            .iter()
            .map(|slice| {
                slice
                    .iter()
                    .map(Generator::name)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("; ");
        write!(f, "{text}")
    }
}

/// Parses the diagram DSL; whitespace is insignificant.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let mut slices: Vec<Vec<Generator>> = Vec::new();
    let mut current: Vec<Generator> = Vec::new();
    let mut token_start: Option<usize> = None;

    fn flush(
        start: Option<usize>,
        end: usize,
        text: &str,
        current: &mut Vec<Generator>,
    ) -> Result<(), DiagramError> {
        let Some(s) = start else {
            return Err(DiagramError::Parse {
                pos: end,
                msg: "expected generator name".into(),
            });
        };
        let name = &text[s..end];
        match Generator::from_name(name) {
            Some(g) => {
                current.push(g);
                Ok(())
            }
            None => Err(DiagramError::Parse {
                pos: s,
                msg: format!("unknown generator '{name}'"),
            }),
        }
    }

    for (pos, c) in text.char_indices() {
        match c {
            c if c.is_whitespace() => {
                if let Some(s) = token_start.take() {
                    flush(Some(s), pos, text, &mut current)?;
                }
            }
            ',' => {
                flush(token_start.take(), pos, text, &mut current)?;
            }
            ';' => {
                if let Some(s) = token_start.take() {
                    flush(Some(s), pos, text, &mut current)?;
                }
                if current.is_empty() {
                    return Err(DiagramError::Parse {
                        pos,
                        msg: "empty slice".into(),
                    });
                }
                slices.push(std::mem::take(&mut current));
            }
            c if c.is_ascii_alphabetic() => {
                if token_start.is_none() {
                    token_start = Some(pos);
                }
            }
            _ => {
                return Err(DiagramError::Parse {
                    pos,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    if let Some(s) = token_start.take() {
        flush(Some(s), text.len(), text, &mut current)?;
    }
    if !current.is_empty() {
        slices.push(current);
    }
    if slices.is_empty() {
        return Err(DiagramError::Parse {
            pos: text.len(),
            msg: "empty diagram".into(),
        });
    }
    Diagram::new(slices)
}

struct Incidence {
    vertices: usize,
    edges: usize,
    components: usize,
}

/// Census of the incidence graph: one vertex per generator occurrence (Id
/// included) and per boundary endpoint, one edge per wire segment.
fn incidence(d: &Diagram) -> Incidence {
    let m = d.inputs();
    let n = d.outputs();
    let gen_count = d.generator_count();
    let mut offset = Vec::with_capacity(d.slices.len());
    let mut acc = 0;
    for slice in &d.slices {
        offset.push(acc);
        acc += slice.len();
    }
    let top_base = gen_count;
    let bottom_base = gen_count + m;
    let total = gen_count + m + n;
    let mut dsu: Vec<usize> = (0..total).collect();
    fn find(dsu: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while dsu[root] != root {
            root = dsu[root];
        }
        let mut cur = x;
        while dsu[cur] != root {
            let next = dsu[cur];
            dsu[cur] = root;
            cur = next;
        }
        root
    }
    let mut edges = 0;
    let levels = d.slices.len() + 1;
    for level in 0..levels {
        let producers: Vec<usize> = if level == 0 {
            (0..m).map(|j| top_base + j).collect()
        } else {
            let slice = &d.slices[level - 1];
            let mut v = Vec::new();
            for (g_idx, g) in slice.iter().enumerate() {
                for _ in 0..g.out_arity() {
                    v.push(offset[level - 1] + g_idx);
                }
            }
            v
        };
        let consumers: Vec<usize> = if level == levels - 1 {
            (0..n).map(|j| bottom_base + j).collect()
        } else {
            let slice = &d.slices[level];
            let mut v = Vec::new();
            for (g_idx, g) in slice.iter().enumerate() {
                for _ in 0..g.in_arity() {
                    v.push(offset[level] + g_idx);
                }
            }
            v
        };
        debug_assert_eq!(producers.len(), consumers.len());
        for (p, c) in producers.iter().zip(&consumers) {
            let (rp, rc) = (find(&mut dsu, *p), find(&mut dsu, *c));
            if rp != rc {
                dsu[rp] = rc;
            }
            edges += 1;
        }
    }
    let mut roots: Vec<usize> = (0..total).map(|x| find(&mut dsu, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    Incidence {
        vertices: total,
        edges,
        components: roots.len(),
    }
}

/// Number of connected components of the diagram's incidence graph.
pub fn connectivity(d: &Diagram) -> usize {
    incidence(d).components
}

/// Number of bounded faces of a connected planar diagram: the first Betti
/// number E - V + 1 of the incidence graph. Invariant under subdividing
/// wires with Id.
pub fn bounded_faces(d: &Diagram) -> Result<usize, DiagramError> {
    let inc = incidence(d);
    if inc.components != 1 {
        return Err(DiagramError::NotConnected);
    }
    Ok(inc.edges + 1 - inc.vertices)
}

/// The canonical data (m, n, j) of a connected diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StandardForm {
    pub inputs: usize,
    pub outputs: usize,
    pub beads: usize,
}

/// (m, n, number of bounded faces) of a connected diagram.
pub fn canonical_form(d: &Diagram) -> Result<StandardForm, DiagramError> {
    let beads = bounded_faces(d)?;
    Ok(StandardForm {
        inputs: d.inputs(),
        outputs: d.outputs(),
        beads,
    })
}

/// The standard diagram of (m, n, j): an (m-1)-fold product (or unit when
/// m = 0), j beads, then an (n-1)-fold coproduct (or counit when n = 0).
/// A lone wire comes out as "id".
pub fn standard_diagram(form: StandardForm) -> Diagram {
    let StandardForm {
        inputs: m,
        outputs: n,
        beads: j,
    } = form;
    let mut slices: Vec<Vec<Generator>> = Vec::new();
    if m == 0 {
        slices.push(vec![Generator::Unit]);
    } else {
        for w in (2..=m).rev() {
            let mut slice = vec![Generator::Id; w - 2];
            slice.push(Generator::Mul);
            slices.push(slice);
        }
    }
    for _ in 0..j {
        slices.push(vec![Generator::Comul]);
        slices.push(vec![Generator::Mul]);
    }
    if n == 0 {
        slices.push(vec![Generator::Counit]);
    } else {
        for w in 1..n {
            let mut slice = vec![Generator::Id; w - 1];
            slice.push(Generator::Comul);
            slices.push(slice);
        }
    }
    if slices.is_empty() {
        slices.push(vec![Generator::Id]);
    }
    Diagram::new(slices).expect("standard diagram is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_arity() {
        let d = parse_diagram("mul").unwrap();
        assert_eq!((d.inputs(), d.outputs()), (2, 1));
        let d = parse_diagram("cap; mul").unwrap();
        assert_eq!((d.inputs(), d.outputs()), (0, 1));
        assert!(matches!(
            parse_diagram("mul; comul; comul"),
            Err(DiagramError::InterfaceMismatch {
                slice: 2,
                expected: 2,
                got: 1
            })
        ));
        assert!(parse_diagram("frob").is_err());
        assert!(parse_diagram("").is_err());
        let d = parse_diagram("  comul ;  mul  ").unwrap();
        assert_eq!(d.to_string(), "comul; mul");
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn connectivity_counts() {
        assert_eq!(connectivity(&parse_diagram("mul").unwrap()), 1);
        assert_eq!(connectivity(&parse_diagram("id,id").unwrap()), 2);
        assert_eq!(connectivity(&parse_diagram("cap; cup").unwrap()), 1);
        assert_eq!(connectivity(&parse_diagram("unit; counit").unwrap()), 1);
        assert_eq!(
            connectivity(&parse_diagram("unit,unit; counit,counit").unwrap()),
            2
        );
    }

    #[test]
    fn face_counts() {
        assert_eq!(bounded_faces(&parse_diagram("mul").unwrap()).unwrap(), 0);
        assert_eq!(bounded_faces(&parse_diagram("cap; cup").unwrap()).unwrap(), 1);
        // V = 6 (cap, comul, id, id, mul, cup), E = 7, faces = 2
        let d = parse_diagram("cap; comul,id; id,mul; cup").unwrap();
        assert_eq!(bounded_faces(&d).unwrap(), 2);
        assert_eq!(
            bounded_faces(&parse_diagram("id,id").unwrap()),
            Err(DiagramError::NotConnected)
        );
        // id-slice insertion keeps the count
        let d1 = parse_diagram("cap; cup").unwrap();
        let d2 = parse_diagram("cap; id,id; cup").unwrap();
        assert_eq!(bounded_faces(&d1).unwrap(), bounded_faces(&d2).unwrap());
    }

    #[test]
    fn canonical_and_standard() {
        let d = parse_diagram("mul").unwrap();
        assert_eq!(
            canonical_form(&d).unwrap(),
            StandardForm {
                inputs: 2,
                outputs: 1,
                beads: 0
            }
        );
        let circle = parse_diagram("unit; comul; mul; counit").unwrap();
        assert_eq!(
            canonical_form(&circle).unwrap(),
            StandardForm {
                inputs: 0,
                outputs: 0,
                beads: 1
            }
        );
        // standard forms round-trip through canonical_form
        for m in 0..4 {
            for n in 0..4 {
                for j in 0..3 {
                    let form = StandardForm {
                        inputs: m,
                        outputs: n,
                        beads: j,
                    };
                    let d = standard_diagram(form);
                    assert_eq!(canonical_form(&d).unwrap(), form, "({m},{n},{j}) -> {d}");
                }
            }
        }
        let sf = |m, n, j| StandardForm {
            inputs: m,
            outputs: n,
            beads: j,
        };
        assert_eq!(standard_diagram(sf(2, 1, 0)).to_string(), "mul");
        assert_eq!(
            standard_diagram(sf(1, 1, 2)).to_string(),
            "comul; mul; comul; mul"
        );
        assert_eq!(
            standard_diagram(sf(0, 0, 1)).to_string(),
            "unit; comul; mul; counit"
        );
        assert_eq!(standard_diagram(sf(1, 1, 0)).to_string(), "id");
    }
}
