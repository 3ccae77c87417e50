//! Report documents, the atlas writer, and the JSON schema behind the CLI.
//!
//! A [`ReportDocument`] is a pure function of its [`ComputeRequest`] and
//! [`SCHEMA_VERSION`]; serializing it twice gives identical bytes.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::{catalog, classify_pair, ActionKind, PairLabel, SymmetricPairClass};
use crate::kmodule::{
    assemble, graded_ranks, AtomKind, KModuleDescriptor, Subset, SubsetOrder, WedgeShape,
};
use crate::oracle::{enumerate_fixed_regular, Check, Status, VerificationReport};
use crate::repring::{
    dominant_count, fixed_and_regular_counts, semidirect_basis_counts, GradedCounts,
};
use crate::rootdata::{CartanType, Family};

pub const SCHEMA_VERSION: u32 = 1;

/// Default weight-degree bound for rank tables.
pub const DEFAULT_GRADING_BOUND: usize = 10;

/// Inline consistency checks run only up to this grading bound.
pub const INLINE_CHECK_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeRequest {
    pub family: Family,
    pub rank: usize,
    pub pair: PairLabel,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub action: ActionKind,
    pub grading_bound: usize,
    pub subset_order: SubsetOrder,
}

impl ComputeRequest {
    pub fn new(family: Family, rank: usize, pair: PairLabel, action: ActionKind) -> Self {
        ComputeRequest {
            family,
            rank,
            pair,
            p: None,
            q: None,
            action,
            grading_bound: DEFAULT_GRADING_BOUND,
            subset_order: SubsetOrder::SizeLex,
        }
    }

    pub fn for_pair(pair: &SymmetricPairClass, action: ActionKind) -> Self {
        let t = pair.group();
        ComputeRequest {
            p: pair.params().map(|(p, _)| p),
            q: pair.params().map(|(_, q)| q),
            ..ComputeRequest::new(t.family(), t.rank(), pair.label(), action)
        }
    }

    /// Resolves the request against the catalog rules. A missing `q` for
    /// `BDI` is filled in from the dimension.
    pub fn pair_class(&self) -> Result<SymmetricPairClass> {
        let t = CartanType::new(self.family, self.rank)?;
        let params = match (self.p, self.q) {
            (None, None) => None,
            (Some(p), Some(q)) => Some((p, q)),
            (Some(p), None) | (None, Some(p)) => {
                let dim = match self.family {
                    Family::B => 2 * self.rank + 1,
                    _ => 2 * self.rank,
                };
                if p >= dim {
                    return Err(Error::InvalidParameters(format!(
                        "p = {p} leaves nothing for q in dimension {dim}"
                    )));
                }
                Some((p, dim - p))
            }
        };
        SymmetricPairClass::new(t, self.pair, params)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestEcho {
    pub family: Family,
    pub rank: usize,
    pub pair: PairLabel,
    pub params: Option<(usize, usize)>,
    pub action: ActionKind,
    pub grading_bound: usize,
    pub subset_order: SubsetOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeEntry {
    pub subset: Subset,
    /// `z2-plus` or `sphere`.
    pub shape: String,
    pub suspension: usize,
    pub epsilon: Option<usize>,
    pub notation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomEntry {
    pub kind: AtomKind,
    pub origin: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomTable {
    pub degree0: Vec<AtomEntry>,
    pub degree1: Vec<AtomEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub bound: usize,
    pub k0: GradedCounts,
    pub k1: GradedCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InlineChecks {
    /// `pass`, `fail` or `not-run`.
    pub status: String,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub request: RequestEcho,
    pub group: String,
    pub pair: String,
    pub involution: String,
    pub sigma: Vec<usize>,
    pub wedge: Vec<WedgeEntry>,
    pub atoms: AtomTable,
    pub graded_ranks: RankTable,
    pub checks: InlineChecks,
}

impl ReportDocument {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let r = &self.request;
        s.push_str(&format!("schema version: {}\n", self.schema_version));
        s.push_str(&format!(
            "group: {}  pair: {}  action: {}  order: {}\n",
            self.group, self.pair, r.action, r.subset_order
        ));
        s.push_str(&format!("involution: {}\n", self.involution));
        s.push_str(&format!("sigma: {:?}\n", self.sigma));
        s.push_str(&format!("wedge ({} summands):\n", self.wedge.len()));
        for w in &self.wedge {
            s.push_str(&format!(
                "  {:<12} subset {} suspension {}{}\n",
                w.notation,
                w.subset,
                w.suspension,
                w.epsilon
                    .map(|e| format!(" epsilon {e}"))
                    .unwrap_or_default()
            ));
        }
        for (deg, atoms) in [(0, &self.atoms.degree0), (1, &self.atoms.degree1)] {
            let list: Vec<String> = atoms
                .iter()
                .map(|a| format!("{}{}", atom_name(a.kind), a.origin))
                .collect();
            s.push_str(&format!("K^{deg} atoms: {}\n", list.join(" ")));
        }
        s.push_str(&format!(
            "graded ranks, degrees 0..={}:\n  K^0 {:?}\n  K^1 {:?}\n",
            self.graded_ranks.bound,
            self.graded_ranks.k0.as_slice(),
            self.graded_ranks.k1.as_slice()
        ));
        s.push_str(&format!("checks: {}\n", self.checks.status));
        for c in &self.checks.checks {
            let st = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            s.push_str(&format!("  {st}  {}\n", c.name));
        }
        s
    }
}

pub fn atom_name(kind: AtomKind) -> &'static str {
    match kind {
        AtomKind::FreeRank1 => "FreeRank1",
        AtomKind::InducedRG => "InducedRG",
        AtomKind::KerRes => "KerRes",
        AtomKind::CokerRes => "CokerRes",
    }
}

fn inline_checks(d: &KModuleDescriptor, ranks: &RankTable) -> Result<InlineChecks> {
    let bound = ranks.bound;
    if bound > INLINE_CHECK_BOUND {
        return Ok(InlineChecks {
            status: "not-run".into(),
            checks: Vec::new(),
        });
    }
    let t = d.pair.group();
    let mut report = VerificationReport::default();
    let fr = fixed_and_regular_counts(t, &d.sigma, bound)?;
    let dom = dominant_count(t, bound)?;
    let rebuilt: Vec<u64> = (0..=bound)
        .map(|k| fr.fixed.get(k) + 2 * fr.regular_orbits.get(k))
        .collect();
    report.compare(
        "repring/restriction-bookkeeping",
        &dom.as_slice().to_vec(),
        &rebuilt,
    );
    let parity = (0..=bound).all(|k| (dom.get(k) - fr.fixed.get(k)) % 2 == 0);
    report.push(
        "repring/parity",
        parity,
        "even",
        if parity { "even" } else { "odd" },
    );
    let top = bound.min(crate::oracle::SWEEP_ENUMERATION_BOUND);
    let enumerated: Vec<(u64, u64, u64)> = (0..=top)
        .map(|k| enumerate_fixed_regular(&d.sigma, k))
        .collect();
    let closed: Vec<(u64, u64, u64)> = (0..=top)
        .map(|k| (dom.get(k), fr.fixed.get(k), fr.regular_orbits.get(k)))
        .collect();
    report.compare("repring/enumeration", &enumerated, &closed);
    if classify_pair(&d.pair).is_inner() && d.action == ActionKind::Alpha {
        let free = semidirect_basis_counts(t, &d.sigma, bound)?.scaled(1 << (t.rank() - 1))?;
        report.compare(
            "kmodule/free-pattern",
            &(free.clone(), free),
            &(ranks.k0.clone(), ranks.k1.clone()),
        );
    }
    Ok(InlineChecks {
        status: if report.passed() { "pass" } else { "fail" }.into(),
        checks: report.checks().to_vec(),
    })
}

pub fn run_compute(req: &ComputeRequest) -> Result<ReportDocument> {
    let pair = req.pair_class()?;
    let d = assemble(&pair, req.action, req.subset_order)?;
    let r = graded_ranks(&d, req.grading_bound)?;
    let ranks = RankTable {
        bound: req.grading_bound,
        k0: r.k0,
        k1: r.k1,
    };
    let checks = inline_checks(&d, &ranks)?;
    let atoms = |v: &[crate::kmodule::ModuleAtom]| {
        v.iter()
            .map(|a| AtomEntry {
                kind: a.kind,
                origin: a.origin,
            })
            .collect()
    };
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        request: RequestEcho {
            family: req.family,
            rank: req.rank,
            pair: req.pair,
            params: pair.params(),
            action: req.action,
            grading_bound: req.grading_bound,
            subset_order: req.subset_order,
        },
        group: pair.group().to_string(),
        pair: pair.to_string(),
        involution: if classify_pair(&pair).is_inner() {
            "inner".into()
        } else {
            "outer".into()
        },
        sigma: d.sigma.permutation().images().to_vec(),
        wedge: d
            .wedge
            .iter()
            .map(|w| WedgeEntry {
                subset: w.subset,
                shape: match w.shape {
                    WedgeShape::Z2Plus => "z2-plus".into(),
                    WedgeShape::Sphere { .. } => "sphere".into(),
                },
                suspension: w.suspension,
                epsilon: match w.shape {
                    WedgeShape::Z2Plus => None,
                    WedgeShape::Sphere { epsilon } => Some(epsilon),
                },
                notation: w.notation(),
            })
            .collect(),
        atoms: AtomTable {
            degree0: atoms(&d.degree0),
            degree1: atoms(&d.degree1),
        },
        graded_ranks: ranks,
        checks,
    })
}

/// `<family><rank>-<pair>-<action>.json`
pub fn atlas_file_name(pair: &SymmetricPairClass, action: ActionKind) -> String {
    format!("{}-{}-{}.json", pair.group(), pair.pair_id(), action)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasEntry {
    pub file: String,
    pub group: String,
    pub pair: String,
    pub action: ActionKind,
    pub involution: String,
    pub checks: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasIndex {
    pub schema_version: u32,
    pub max_rank: usize,
    pub grading_bound: usize,
    pub complete: bool,
    pub files: Vec<AtlasEntry>,
}

pub const ATLAS_INDEX_FILE: &str = "index.json";

fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    let tmp = dir.join(format!(".{name}.tmp"));
    let dest = dir.join(name);
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &dest)?;
    Ok(dest)
}

/// Writes one report per catalog pair of rank `<= max_rank` and action,
/// then `index.json`. On failure, files written by this run are removed.
pub fn run_atlas(max_rank: usize, grading_bound: usize, out_dir: &Path) -> Result<AtlasIndex> {
    let mut docs = Vec::new();
    for pair in catalog(max_rank) {
        for action in ActionKind::BOTH {
            let mut req = ComputeRequest::for_pair(&pair, action);
            req.grading_bound = grading_bound;
            docs.push((atlas_file_name(&pair, action), run_compute(&req)?));
        }
    }
    fs::create_dir_all(out_dir)?;
    let index = AtlasIndex {
        schema_version: SCHEMA_VERSION,
        max_rank,
        grading_bound,
        complete: true,
        files: docs
            .iter()
            .map(|(file, d)| AtlasEntry {
                file: file.clone(),
                group: d.group.clone(),
                pair: d.pair.clone(),
                action: d.request.action,
                involution: d.involution.clone(),
                checks: d.checks.status.clone(),
            })
            .collect(),
    };
    let mut written = Vec::new();
    let result = (|| -> Result<()> {
        for (file, d) in &docs {
            written.push(write_atomic(out_dir, file, &d.to_json_string())?);
        }
        let mut json = serde_json::to_string_pretty(&index).expect("index serializes");
        json.push('\n');
        write_atomic(out_dir, ATLAS_INDEX_FILE, &json)?;
        Ok(())
    })();
    if let Err(e) = result {
        for path in written {
            let _ = fs::remove_file(path);
        }
        return Err(e);
    }
    Ok(index)
}
