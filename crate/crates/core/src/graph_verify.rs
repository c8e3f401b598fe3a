//! Verification of graph presentations against computable models, for
//! graphs drawn with collinear vertices and nested lower arcs. The edge
//! labelled s < t maps to the band half-twist of strands s and t; singular
//! crossings map to the matching singular band letter; vertex idempotents
//! map to partial identities.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{sergiescu, GraphVariant, PlanarGraph};
use crate::inverse::{pb_from_word, IBGen, IBWord, PartialBraid};
use crate::pres::{
    verify_homomorphism, Assignment, BraidModel, InverseBraidModel, SingularModel,
    VerificationReport,
};
use crate::singular::{singular_nf, SBandGen, SBandWord};
use crate::word::BraidWord;

fn edge_pair(graph: &PlanarGraph, id: &str) -> Result<(usize, usize)> {
    let k = graph
        .edge_index(id)
        .ok_or_else(|| Error::Graph(format!("unknown edge {id}")))?;
    let (a, b) = graph.edge_endpoints(k);
    Ok((a.max(b), a.min(b)))
}

/// Verifies a lower-arc graph presentation in the canonical model of its
/// variant. Variants without a computable model report an error.
pub fn verify_graph_presentation(
    graph: &PlanarGraph,
    variant: GraphVariant,
    n: usize,
) -> Result<VerificationReport> {
    let p = sergiescu(graph, variant, false)?;
    match variant {
        GraphVariant::Plane => {
            let asg_words = graph.band_assignment(n)?;
            let model = BraidModel { strands: n };
            let mut images = HashMap::new();
            for g in p.generators() {
                let id = g.name.strip_prefix("s:").ok_or_else(|| {
                    Error::Graph(format!("unexpected generator {}", g.name))
                })?;
                let w: &BraidWord = asg_words
                    .get(id)
                    .ok_or_else(|| Error::Graph(format!("no braid for edge {id}")))?;
                images.insert(
                    g.name.clone(),
                    (
                        crate::garside::garside_nf(w),
                        Some(crate::garside::garside_nf(&w.inverse())),
                    ),
                );
            }
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("braid group on {n} strands"))
        }
        GraphVariant::SingularPlane => {
            let model = SingularModel { strands: n };
            let mut images = HashMap::new();
            for g in p.generators() {
                if let Some(id) = g.name.strip_prefix("s:") {
                    let (t, s) = edge_pair(graph, id)?;
                    let pos = singular_nf(&SBandWord::from_letters(
                        n,
                        vec![SBandGen::A { t, s, sign: 1 }],
                    )?)?;
                    let neg = singular_nf(&SBandWord::from_letters(
                        n,
                        vec![SBandGen::A { t, s, sign: -1 }],
                    )?)?;
                    images.insert(g.name.clone(), (pos, Some(neg)));
                } else if let Some(id) = g.name.strip_prefix("x:") {
                    let (q, pp) = edge_pair(graph, id)?;
                    let x = singular_nf(&SBandWord::from_letters(
                        n,
                        vec![SBandGen::B { q, p: pp }],
                    )?)?;
                    images.insert(g.name.clone(), (x, None));
                } else {
                    return Err(Error::Graph(format!("unexpected generator {}", g.name)));
                }
            }
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("singular braid monoid on {n} strands"))
        }
        GraphVariant::InversePlane => {
            let model = InverseBraidModel { strands: n };
            let asg_words = graph.band_assignment(n)?;
            let mut images = HashMap::new();
            for g in p.generators() {
                if let Some(id) = g.name.strip_prefix("s:") {
                    let w = asg_words
                        .get(id)
                        .ok_or_else(|| Error::Graph(format!("no braid for edge {id}")))?;
                    let letters: Vec<IBGen> = w
                        .letters()
                        .iter()
                        .map(|l| IBGen::Sigma {
                            i: l.index,
                            sign: l.sign,
                        })
                        .collect();
                    let inv_letters: Vec<IBGen> = w
                        .inverse()
                        .letters()
                        .iter()
                        .map(|l| IBGen::Sigma {
                            i: l.index,
                            sign: l.sign,
                        })
                        .collect();
                    images.insert(
                        g.name.clone(),
                        (
                            pb_from_word(&IBWord::from_letters(n, letters)?)?,
                            Some(pb_from_word(&IBWord::from_letters(n, inv_letters)?)?),
                        ),
                    );
                } else if let Some(v) = g.name.strip_prefix("e:") {
                    let v: usize = v
                        .parse()
                        .map_err(|_| Error::Graph(format!("bad vertex label {v}")))?;
                    images.insert(g.name.clone(), (PartialBraid::epsilon(n, v)?, None));
                } else {
                    return Err(Error::Graph(format!("unexpected generator {}", g.name)));
                }
            }
            let asg = Assignment { model, images };
            verify_homomorphism(&p, &asg, &format!("inverse braid monoid on {n} strands"))
        }
        _ => Err(Error::UnknownFamily(
            "this graph variant has no computable model; generate it instead".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_variants_verify_on_small_graphs() {
        let graphs = [
            PlanarGraph::lower_arc(4, &[(1, 2), (2, 3), (3, 4)]).unwrap(),
            PlanarGraph::lower_arc(4, &[(1, 2), (1, 3), (1, 4)]).unwrap(),
            PlanarGraph::lower_arc(3, &[(1, 2), (2, 3), (1, 3)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.vertices().len();
            let r = verify_graph_presentation(g, GraphVariant::Plane, n).unwrap();
            assert!(r.all_hold(), "plane fails: {:?}", failing(&r));
            let r = verify_graph_presentation(g, GraphVariant::SingularPlane, n).unwrap();
            assert!(r.all_hold(), "singular-plane fails: {:?}", failing(&r));
            let r = verify_graph_presentation(g, GraphVariant::InversePlane, n).unwrap();
            assert!(r.all_hold(), "inverse-plane fails: {:?}", failing(&r));
        }
    }

    fn failing(r: &VerificationReport) -> Vec<String> {
        r.verdicts
            .iter()
            .filter(|(_, v)| !matches!(v, crate::pres::Verdict::Holds))
            .map(|(rel, _)| rel.clone())
            .collect()
    }
}
