//! Horn maps, their fillers, and bounded recognition of Kan complexes,
//! quasi-categories and nerves.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::sset::{FiniteSSet, SSetError, SimplexRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HornError {
    #[error("horn index {k} out of range for dimension {n}")]
    BadHorn { n: usize, k: usize },
    #[error("bound {bound} needs truncation at least {needed}, object has {truncation}")]
    BoundTooLarge { bound: usize, needed: usize, truncation: i64 },
    #[error(transparent)]
    SSet(#[from] SSetError),
}

/// A map `Λ^k[n] -> K`, given by the images of the faces `d_i` for `i ≠ k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HornMap {
    pub n: usize,
    pub k: usize,
    /// `faces[i]` is the image of `d_i`; `faces[k]` is `None`.
    pub faces: Vec<Option<SimplexRef>>,
}

impl HornMap {
    pub fn is_inner(&self) -> bool {
        0 < self.k && self.k < self.n
    }

    pub fn describe(&self, target: &FiniteSSet) -> String {
        let faces: Vec<String> = self
            .faces
            .iter()
            .enumerate()
            .filter_map(|(i, f)| f.as_ref().map(|f| format!("d{i}={}", target.describe(f))))
            .collect();
        format!("Λ^{}[{}] with {}", self.k, self.n, faces.join(", "))
    }
}

/// Simplices of one level with their faces, computed once.
struct Level {
    simplices: Vec<SimplexRef>,
    faces: Vec<Vec<SimplexRef>>,
}

impl Level {
    fn new(k: &FiniteSSet, n: usize) -> Result<Self, SSetError> {
        let simplices = k.level_set(n)?;
        let faces = if n == 0 {
            vec![Vec::new(); simplices.len()]
        } else {
            simplices.iter().map(|x| k.faces_of(x)).collect::<Result<_, _>>()?
        };
        Ok(Self { simplices, faces })
    }
}

fn check_horn(k: &FiniteSSet, n: usize, kk: usize) -> Result<(), HornError> {
    if n == 0 || kk > n {
        return Err(HornError::BadHorn { n, k: kk });
    }
    match k.truncation() {
        Some(d) if n <= d => Ok(()),
        _ => Err(SSetError::TruncationExceeded {
            requested: n,
            truncation: k.truncation_num(),
        }
        .into()),
    }
}

/// All maps `Λ^k[n] -> K`: choices of `y_i ∈ K_{n-1}` for `i ≠ k` with
/// `d_i y_j = d_{j-1} y_i` for `i < j`. Ordered lexicographically by
/// `(y_0, y_1, ...)` in level-set order.
pub fn enumerate_horn_maps(k: &FiniteSSet, n: usize, kk: usize) -> Result<Vec<HornMap>, HornError> {
    check_horn(k, n, kk)?;
    let level = Level::new(k, n - 1)?;
    let mut out = Vec::new();
    let mut chosen: Vec<Option<usize>> = vec![None; n + 1];
    horn_search(&level, n, kk, 0, &mut chosen, &mut |chosen| {
        out.push(HornMap {
            n,
            k: kk,
            faces: chosen.iter().map(|c| c.map(|i| level.simplices[i].clone())).collect(),
        });
    });
    Ok(out)
}

fn horn_search(
    level: &Level,
    n: usize,
    kk: usize,
    j: usize,
    chosen: &mut Vec<Option<usize>>,
    visit: &mut dyn FnMut(&[Option<usize>]),
) {
    if j > n {
        visit(chosen);
        return;
    }
    if j == kk {
        return horn_search(level, n, kk, j + 1, chosen, visit);
    }
    for cand in 0..level.simplices.len() {
        // d_i y_j = d_{j-1} y_i for every earlier face i
        let compatible = (0..j).filter(|&i| i != kk).all(|i| {
            let yi = chosen[i].unwrap();
            level.faces[cand][i] == level.faces[yi][j - 1]
        });
        if compatible {
            chosen[j] = Some(cand);
            horn_search(level, n, kk, j + 1, chosen, visit);
        }
    }
    chosen[j] = None;
}

/// Every `x ∈ K_n`, degenerate ones included, with `d_i x = y_i` for `i ≠ k`.
pub fn fillers(k: &FiniteSSet, h: &HornMap) -> Result<Vec<SimplexRef>, HornError> {
    check_horn(k, h.n, h.k)?;
    let level = Level::new(k, h.n)?;
    Ok(level
        .simplices
        .iter()
        .zip(&level.faces)
        .filter(|(_, faces)| (0..=h.n).all(|i| h.faces[i].as_ref().is_none_or(|y| &faces[i] == y)))
        .map(|(x, _)| x.clone())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FillerStats {
    pub horn_maps: usize,
    pub unfilled: usize,
    pub multiply_filled: usize,
    pub max_fillers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport {
    pub verdict: Verdict,
    pub bound: usize,
    /// The first failing horn map and its filler count.
    pub witness: Option<(HornMap, usize)>,
    pub stats: FillerStats,
}

impl RecognitionReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn summary(&self, target: &FiniteSSet) -> String {
        let s = &self.stats;
        let mut line = format!(
            "{} up to dimension {}: {} horn maps, {} unfilled, {} with several fillers",
            self.verdict, self.bound, s.horn_maps, s.unfilled, s.multiply_filled
        );
        if let Some((h, count)) = &self.witness {
            line.push_str(&format!("\nwitness: {} has {} fillers", h.describe(target), count));
        }
        line
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Requirement {
    AtLeastOne,
    ExactlyOne,
}

/// One family of horns: dimensions `lo..=bound`, inner or all.
#[derive(Debug, Clone, Copy)]
struct HornClass {
    inner_only: bool,
    /// Dimension from which uniqueness is demanded.
    unique_from: Option<usize>,
}

impl HornClass {
    fn requirement(&self, n: usize) -> Requirement {
        match self.unique_from {
            Some(lo) if n >= lo => Requirement::ExactlyOne,
            _ => Requirement::AtLeastOne,
        }
    }
}

fn recognize(k: &FiniteSSet, bound: usize, class: HornClass) -> Result<RecognitionReport, HornError> {
    let needed = bound + 1;
    if k.truncation().is_none_or(|d| d < needed) {
        return Err(HornError::BoundTooLarge {
            bound,
            needed,
            truncation: k.truncation_num(),
        });
    }
    let mut stats = FillerStats::default();
    let mut witness = None;
    let lo = if class.inner_only { 2 } else { 1 };
    for n in lo..=bound {
        let faces_below = Level::new(k, n - 1)?;
        let top = Level::new(k, n)?;
        let ks: Vec<usize> = if class.inner_only { (1..n).collect() } else { (0..=n).collect() };
        for &kk in &ks {
            // fillers indexed by their horn faces
            let mut by_horn: HashMap<Vec<&SimplexRef>, usize> = HashMap::new();
            for faces in &top.faces {
                let key: Vec<&SimplexRef> = (0..=n).filter(|&i| i != kk).map(|i| &faces[i]).collect();
                *by_horn.entry(key).or_default() += 1;
            }
            let requirement = class.requirement(n);
            let mut chosen = vec![None; n + 1];
            horn_search(&faces_below, n, kk, 0, &mut chosen, &mut |chosen| {
                let key: Vec<&SimplexRef> = chosen.iter().flatten().map(|&i| &faces_below.simplices[i]).collect();
                let count = by_horn.get(&key).copied().unwrap_or(0);
                stats.horn_maps += 1;
                stats.max_fillers = stats.max_fillers.max(count);
                if count == 0 {
                    stats.unfilled += 1;
                }
                if count > 1 {
                    stats.multiply_filled += 1;
                }
                let ok = match requirement {
                    Requirement::AtLeastOne => count >= 1,
                    Requirement::ExactlyOne => count == 1,
                };
                if !ok && witness.is_none() {
                    let h = HornMap {
                        n,
                        k: kk,
                        faces: chosen.iter().map(|c| c.map(|i| faces_below.simplices[i].clone())).collect(),
                    };
                    witness = Some((h, count));
                }
            });
        }
    }
    Ok(RecognitionReport {
        verdict: if witness.is_none() { Verdict::Pass } else { Verdict::Fail },
        bound,
        witness,
        stats,
    })
}

/// Every horn `Λ^k[n]`, `1 <= n <= bound`, has a filler.
pub fn is_kan_up_to(k: &FiniteSSet, bound: usize) -> Result<RecognitionReport, HornError> {
    recognize(
        k,
        bound,
        HornClass {
            inner_only: false,
            unique_from: None,
        },
    )
}

/// Every inner horn, `2 <= n <= bound`, has a filler.
pub fn is_quasicategory_up_to(k: &FiniteSSet, bound: usize) -> Result<RecognitionReport, HornError> {
    recognize(
        k,
        bound,
        HornClass {
            inner_only: true,
            unique_from: None,
        },
    )
}

/// Every inner horn, `2 <= n <= bound`, has exactly one filler.
pub fn is_nerve_up_to(k: &FiniteSSet, bound: usize) -> Result<RecognitionReport, HornError> {
    recognize(
        k,
        bound,
        HornClass {
            inner_only: true,
            unique_from: Some(2),
        },
    )
}

/// Every horn has a filler, and for `n >= 2` exactly one. One-dimensional
/// horns are single vertices and are filled by every edge out of them, so
/// uniqueness there would only hold for discrete categories.
pub fn is_groupoid_nerve_up_to(k: &FiniteSSet, bound: usize) -> Result<RecognitionReport, HornError> {
    recognize(
        k,
        bound,
        HornClass {
            inner_only: false,
            unique_from: Some(2),
        },
    )
}
