//! Brute-force enumeration of monopole-dimer configurations.
//!
//! This is the independent oracle for the determinant: it never builds a
//! matrix, only walks loops and multiplies edge weights.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::dicot::{config_weight, Dicot, EdgeKind, Loop, MonopoleDimerConfig, VertexId};
use crate::rational::Rational;

/// Enumeration refuses dicots larger than this unless told otherwise.
pub const DEFAULT_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("dicot has {vertices} vertices; enumeration is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

struct Walker<'a, F> {
    dicot: &'a Dicot,
    covered: Vec<bool>,
    loops: Vec<Loop>,
    isolated: Vec<VertexId>,
    visit: F,
}

impl<F: FnMut(&MonopoleDimerConfig)> Walker<'_, F> {
    fn cover_rest(&mut self) {
        let Some(start) = self.covered.iter().position(|&c| !c) else {
            let config = MonopoleDimerConfig {
                loops: self.loops.clone(),
                isolated: self.isolated.clone(),
            };
            (self.visit)(&config);
            return;
        };
        let start = VertexId::from_index(start);
        self.covered[start.index()] = true;

        self.isolated.push(start);
        self.cover_rest();
        self.isolated.pop();

        let mut path = vec![start];
        let mut kinds = Vec::new();
        self.extend(&mut path, &mut kinds);

        self.covered[start.index()] = false;
    }

    /// Grows a loop from `path[0]`, the smallest uncovered vertex, so each
    /// directed loop is produced once from its canonical start.
    fn extend(&mut self, path: &mut Vec<VertexId>, kinds: &mut Vec<EdgeKind>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &(next, kind) in self.dicot.neighbors(last) {
            if next == start {
                if path.len() % 2 == 1 {
                    continue;
                }
                let dashed = kinds.iter().filter(|&&k| k == EdgeKind::Dashed).count()
                    + usize::from(kind == EdgeKind::Dashed);
                if dashed % 2 == 1 {
                    continue;
                }
                kinds.push(kind);
                let lp = Loop::new(path.clone(), kinds.clone()).expect("walk is a valid loop");
                kinds.pop();
                self.loops.push(lp);
                self.cover_rest();
                self.loops.pop();
            } else if !self.covered[next.index()] {
                self.covered[next.index()] = true;
                path.push(next);
                kinds.push(kind);
                self.extend(path, kinds);
                kinds.pop();
                path.pop();
                self.covered[next.index()] = false;
            }
        }
    }
}

fn check_size(dicot: &Dicot, limit: usize) -> Result<(), EnumerateError> {
    if dicot.vertex_count() > limit {
        return Err(EnumerateError::TooLarge {
            vertices: dicot.vertex_count(),
            limit,
        });
    }
    Ok(())
}

/// Calls `visit` once per configuration, in a fixed order: the smallest
/// uncovered vertex is first left isolated, then used to start loops in
/// neighbour order (solid before dashed).
pub fn visit_configs(
    dicot: &Dicot,
    limit: usize,
    visit: impl FnMut(&MonopoleDimerConfig),
) -> Result<(), EnumerateError> {
    check_size(dicot, limit)?;
    let mut walker = Walker {
        dicot,
        covered: vec![false; dicot.vertex_count()],
        loops: Vec::new(),
        isolated: Vec::new(),
        visit,
    };
    walker.cover_rest();
    Ok(())
}

pub fn enumerate_configs(dicot: &Dicot) -> Result<Vec<MonopoleDimerConfig>, EnumerateError> {
    enumerate_configs_with_limit(dicot, DEFAULT_MAX_VERTICES)
}

pub fn enumerate_configs_with_limit(
    dicot: &Dicot,
    limit: usize,
) -> Result<Vec<MonopoleDimerConfig>, EnumerateError> {
    let mut out = Vec::new();
    visit_configs(dicot, limit, |c| out.push(c.clone()))?;
    Ok(out)
}

pub fn brute_force_partition_function(dicot: &Dicot) -> Result<Rational, EnumerateError> {
    brute_force_partition_function_with_limit(dicot, DEFAULT_MAX_VERTICES)
}

/// Sum of configuration weights over every configuration.
pub fn brute_force_partition_function_with_limit(
    dicot: &Dicot,
    limit: usize,
) -> Result<Rational, EnumerateError> {
    let mut total = Rational::zero();
    visit_configs(dicot, limit, |c| {
        total += config_weight(c, dicot).expect("enumerated configurations are valid");
    })?;
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityReport {
    pub all_positive: bool,
    /// A negative configuration covering as few vertices by loops as
    /// possible (first in enumeration order among those), with its weight.
    pub witness: Option<(MonopoleDimerConfig, Rational)>,
    pub configurations: usize,
    pub negative: usize,
}

pub fn check_positivity(dicot: &Dicot) -> Result<PositivityReport, EnumerateError> {
    check_positivity_with_limit(dicot, DEFAULT_MAX_VERTICES)
}

pub fn check_positivity_with_limit(
    dicot: &Dicot,
    limit: usize,
) -> Result<PositivityReport, EnumerateError> {
    let mut witness: Option<(MonopoleDimerConfig, Rational)> = None;
    let mut configurations = 0;
    let mut negative = 0;
    visit_configs(dicot, limit, |c| {
        configurations += 1;
        let w = config_weight(c, dicot).expect("enumerated configurations are valid");
        if w.is_negative() {
            negative += 1;
            let smaller = witness
                .as_ref()
                .is_none_or(|(best, _)| c.loop_vertex_count() < best.loop_vertex_count());
            if smaller {
                witness = Some((c.clone(), w));
            }
        }
    })?;
    Ok(PositivityReport {
        all_positive: negative == 0,
        witness,
        configurations,
        negative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicot::{complete_dicot, v, DicotBuilder};
    use crate::rational::int;
    use std::collections::HashSet;

    #[test]
    fn single_edge_configs() {
        let mut b = DicotBuilder::with_unit_weights(2);
        b.solid(1, 2, int(1));
        let d = b.build().unwrap();
        let configs = enumerate_configs(&d).unwrap();
        assert_eq!(configs.len(), 2);
        assert_eq!(configs[0].isolated, vec![v(1), v(2)]);
        assert_eq!(
            configs[1].loops,
            vec![Loop::doubled(v(1), v(2), EdgeKind::Solid).unwrap()]
        );
    }

    #[test]
    fn solid_plus_dashed_has_three() {
        let d = complete_dicot(1).unwrap();
        assert_eq!(enumerate_configs(&d).unwrap().len(), 3);
        assert_eq!(brute_force_partition_function(&d).unwrap(), int(3));
    }

    #[test]
    fn complete_dicot_census() {
        let d = complete_dicot(2).unwrap();
        let configs = enumerate_configs(&d).unwrap();
        assert_eq!(configs.len(), 33);
        let by_shape = |pred: &dyn Fn(&MonopoleDimerConfig) -> bool| {
            configs.iter().filter(|c| pred(c)).count()
        };
        assert_eq!(by_shape(&|c| c.loops.is_empty()), 1);
        assert_eq!(
            by_shape(&|c| c.loops.len() == 1 && c.loops[0].len() == 2),
            8
        );
        assert_eq!(by_shape(&|c| c.loops.len() == 2), 8);
        assert_eq!(
            by_shape(&|c| c.loops.len() == 1 && c.loops[0].len() == 4),
            16
        );
        let distinct: HashSet<_> = configs.iter().map(|c| c.canonical()).collect();
        assert_eq!(distinct.len(), 33);
        assert_eq!(brute_force_partition_function(&d).unwrap(), int(17));
    }

    #[test]
    fn single_vertex() {
        let d = DicotBuilder::new(1, int(5)).build().unwrap();
        assert_eq!(brute_force_partition_function(&d).unwrap(), int(5));
    }

    #[test]
    fn edge_count_rule() {
        // no edges: one configuration; each extra disjoint solid edge doubles it,
        // a single edge on its own adds exactly one
        let d = DicotBuilder::with_unit_weights(6).build().unwrap();
        assert_eq!(enumerate_configs(&d).unwrap().len(), 1);
        let mut b = DicotBuilder::with_unit_weights(6);
        b.solid(3, 6, int(1));
        assert_eq!(enumerate_configs(&b.build().unwrap()).unwrap().len(), 2);
    }

    #[test]
    fn size_guard() {
        let d = DicotBuilder::with_unit_weights(17).build().unwrap();
        assert_eq!(
            enumerate_configs(&d).unwrap_err(),
            EnumerateError::TooLarge {
                vertices: 17,
                limit: 16
            }
        );
        assert_eq!(enumerate_configs_with_limit(&d, 17).unwrap().len(), 1);
    }

    #[test]
    fn complete_dicot_is_not_positive() {
        let report = check_positivity(&complete_dicot(2).unwrap()).unwrap();
        assert!(!report.all_positive);
        let (cfg, w) = report.witness.unwrap();
        assert_eq!(w, int(-1));
        assert_eq!(cfg.loop_vertex_count(), 4);
        assert_eq!(report.negative, 8);
    }
}
