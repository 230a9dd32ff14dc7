//! Depth and projective dimension of monomial quotients via polarization and
//! Hochster's formula.
//!
//! For a squarefree ideal `I` with Stanley–Reisner complex `Δ`,
//! `β_{i,W}(S/I) = dim H̃_{|W|-i-1}(Δ_W)`. The projective dimension is the
//! largest `i` with a nonzero Betti number, and
//! `depth S/I = #variables - pd S/I`. Non-squarefree ideals are polarized
//! first; polarization keeps the projective dimension, so depth over the
//! original ring is the polarized depth minus the number of added variables.
//!
//! The depth of a proper nonzero ideal viewed as a module is
//! `depth S/I + 1`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::DepthError;
use crate::homology::{reduced_homology_dims, ComplexView, FieldChoice};
use crate::ideal::{polarize, MonomialIdeal};

/// Default cap on the number of variables after polarization.
pub const DEFAULT_VAR_CAP: usize = 24;

/// Nonzero multigraded Betti numbers of `S/I`, keyed by
/// `(homological degree, multidegree mask)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, u64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, w: u64) -> usize {
        self.entries.get(&(i, w)).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|(&(j, _), _)| j == i).map(|(_, &r)| r).sum()
    }

    /// CSV rows `i,|W|,W-mask-hex,rank`, with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,size,mask,rank\n");
        for (&(i, w), &r) in &self.entries {
            let _ = writeln!(out, "{i},{},{w:x},{r}", w.count_ones());
        }
        out
    }
}

/// Which multidegrees to scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaskScan {
    /// Only unions of generator supports (the lcm lattice); exact.
    LcmLattice,
    /// Every subset of the variables.
    All,
}

#[derive(Clone, Copy, Debug)]
pub struct DepthOptions {
    pub field: FieldChoice,
    pub scan: MaskScan,
    /// Largest polarized variable count accepted.
    pub var_cap: usize,
    pub keep_betti: bool,
}

impl DepthOptions {
    pub fn new(field: FieldChoice) -> Self {
        DepthOptions {
            field,
            scan: MaskScan::LcmLattice,
            var_cap: DEFAULT_VAR_CAP,
            keep_betti: false,
        }
    }
}

impl Default for DepthOptions {
    fn default() -> Self {
        Self::new(FieldChoice::default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthResult {
    pub ambient_size: usize,
    pub pd_quotient: usize,
    pub depth_quotient: usize,
    /// `depth_quotient + 1`; `None` for the zero ideal.
    pub depth_ideal: Option<usize>,
    pub field: FieldChoice,
    /// Variables added by polarization.
    pub polarization_extra: usize,
    /// Betti table of the polarized quotient, when requested.
    pub betti: Option<BettiTable>,
}

/// The lcm lattice of a squarefree ideal: all unions of generator supports,
/// including the empty union.
pub fn lcm_lattice_masks(supports: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::from([0]);
    let mut all = vec![0u64];
    for &s in supports {
        let fresh: Vec<u64> = all.iter().map(|&m| m | s).filter(|m| !seen.contains(m)).collect();
        for m in fresh {
            if seen.insert(m) {
                all.push(m);
            }
        }
    }
    all.sort_unstable();
    all
}

/// Multigraded Betti numbers of `S/I` for a squarefree ideal `I`.
pub fn betti_numbers(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable, DepthError> {
    betti_numbers_with(ideal, field, MaskScan::LcmLattice)
}

pub fn betti_numbers_with(ideal: &MonomialIdeal, field: FieldChoice, scan: MaskScan) -> Result<BettiTable, DepthError> {
    if ideal.is_unit() {
        return Err(DepthError::UnitIdeal);
    }
    let complex = ComplexView::from_ideal(ideal)?;
    let n = complex.nvars();
    let masks: Vec<u64> = match scan {
        MaskScan::LcmLattice => lcm_lattice_masks(complex.nonfaces()),
        MaskScan::All => {
            if n >= 40 {
                return Err(DepthError::TooManyVariables { got: n, cap: 39 });
            }
            (0..1u64 << n).collect()
        }
    };
    let entries = masks
        .par_iter()
        .flat_map_iter(|&w| {
            let size = w.count_ones() as isize;
            let h = reduced_homology_dims(&complex, w, field);
            h.nonzero()
                .map(|(dim, rank)| (((size - dim - 1) as usize, w), rank))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    Ok(BettiTable {
        entries: entries.into_iter().collect(),
    })
}

/// Depth and projective dimension of `S/I` over `I`'s own ambient ring.
pub fn depth_quotient(ideal: &MonomialIdeal, field: FieldChoice) -> Result<DepthResult, DepthError> {
    depth_quotient_with(ideal, &DepthOptions::new(field))
}

pub fn depth_quotient_with(ideal: &MonomialIdeal, opts: &DepthOptions) -> Result<DepthResult, DepthError> {
    if ideal.is_unit() {
        return Err(DepthError::UnitIdeal);
    }
    let n = ideal.nvars();
    if ideal.is_zero() {
        return Ok(DepthResult {
            ambient_size: n,
            pd_quotient: 0,
            depth_quotient: n,
            depth_ideal: None,
            field: opts.field,
            polarization_extra: 0,
            betti: opts.keep_betti.then(|| BettiTable {
                entries: BTreeMap::from([((0, 0), 1)]),
            }),
        });
    }
    let (squarefree, extra) = if ideal.is_squarefree() {
        (ideal.clone(), 0)
    } else {
        let p = polarize(ideal);
        (p.ideal, p.extra)
    };
    if squarefree.nvars() > opts.var_cap {
        return Err(DepthError::TooManyVariables {
            got: squarefree.nvars(),
            cap: opts.var_cap,
        });
    }
    let table = betti_numbers_with(&squarefree, opts.field, opts.scan)?;
    let pd = table.projective_dimension();
    let depth = squarefree.nvars() - pd - extra;
    Ok(DepthResult {
        ambient_size: n,
        pd_quotient: pd,
        depth_quotient: depth,
        depth_ideal: Some(depth + 1),
        field: opts.field,
        polarization_extra: extra,
        betti: opts.keep_betti.then_some(table),
    })
}

/// Depth of a proper nonzero ideal as a module: `depth S/I + 1`.
pub fn depth_ideal(ideal: &MonomialIdeal, field: FieldChoice) -> Result<usize, DepthError> {
    depth_ideal_with(ideal, &DepthOptions::new(field))
}

pub fn depth_ideal_with(ideal: &MonomialIdeal, opts: &DepthOptions) -> Result<usize, DepthError> {
    if ideal.is_zero() {
        return Err(DepthError::ZeroIdeal);
    }
    let r = depth_quotient_with(ideal, opts)?;
    Ok(r.depth_ideal.expect("nonzero ideal"))
}
