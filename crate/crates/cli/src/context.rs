//! Lazily built shared data: each piece is computed at most once per run
//! and only if some check or export needs it.

use std::path::PathBuf;
use std::sync::OnceLock;

use k3_core::golay::{build_code, GolayCode};
use k3_core::graph::IncidenceGraph;
use k3_core::leech::{build_basis, minimal_vectors, minimal_vectors_cached, LeechBasis, LeechVector, ShapeCounts};
use k3_core::lorentz::{
    incidence_graph, roots_attaching_d5, roots_orthogonal_to_r, CurveGraph, LeechRoot, D4Embedding,
};

pub type Shared<T> = Result<T, String>;

#[derive(Clone, Debug)]
pub struct Options {
    /// Extension scan depth for the surface checks (1 = F4, 2 = F16, 3 = F64).
    pub ext_degree: u32,
    pub cache: Option<PathBuf>,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { ext_degree: 3, cache: None, timings: false }
    }
}

pub struct MinVecs {
    pub vectors: Vec<LeechVector>,
    /// Shape census, recounted from the vectors when loaded from the cache.
    pub shapes: ShapeCounts,
}

#[derive(Default)]
pub struct Context {
    pub options: Options,
    code: OnceLock<Shared<GolayCode>>,
    basis: OnceLock<Shared<LeechBasis>>,
    minvecs: OnceLock<Shared<MinVecs>>,
    embedding: OnceLock<Shared<D4Embedding>>,
    roots42: OnceLock<Shared<Vec<LeechRoot>>>,
    roots168: OnceLock<Shared<Vec<LeechRoot>>>,
    curves: OnceLock<Shared<CurveGraph>>,
}

fn shared<T>(cell: &OnceLock<Shared<T>>, f: impl FnOnce() -> Shared<T>) -> Shared<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

impl Context {
    pub fn new(options: Options) -> Self {
        Context { options, ..Context::default() }
    }

    pub fn code(&self) -> Shared<&GolayCode> {
        shared(&self.code, || build_code().map_err(err))
    }

    pub fn basis(&self) -> Shared<&LeechBasis> {
        shared(&self.basis, || build_basis(self.code()?).map_err(err))
    }

    pub fn minvecs(&self) -> Shared<&MinVecs> {
        shared(&self.minvecs, || {
            let code = self.code()?;
            let basis = self.basis()?;
            match &self.options.cache {
                Some(dir) => {
                    std::fs::create_dir_all(dir).map_err(err)?;
                    let (vectors, outcome) = minimal_vectors_cached(basis, code, dir).map_err(err)?;
                    log::info!("minimal vectors: {outcome:?} ({})", dir.display());
                    let shapes = shape_census(&vectors);
                    Ok(MinVecs { vectors, shapes })
                }
                None => {
                    let mv = minimal_vectors(basis, code);
                    Ok(MinVecs { vectors: mv.vectors, shapes: mv.shapes })
                }
            }
        })
    }

    pub fn embedding(&self) -> Shared<&D4Embedding> {
        shared(&self.embedding, || D4Embedding::new(self.basis()?).map_err(err))
    }

    pub fn roots42(&self) -> Shared<&Vec<LeechRoot>> {
        shared(&self.roots42, || {
            Ok(roots_orthogonal_to_r(self.embedding()?, self.basis()?, &self.minvecs()?.vectors))
        })
    }

    pub fn roots168(&self) -> Shared<&Vec<LeechRoot>> {
        shared(&self.roots168, || {
            Ok(roots_attaching_d5(self.embedding()?, self.basis()?, &self.minvecs()?.vectors))
        })
    }

    pub fn curves(&self) -> Shared<&CurveGraph> {
        shared(&self.curves, || incidence_graph(self.roots42()?).map_err(err))
    }

    pub fn curve_graph(&self) -> Shared<&IncidenceGraph> {
        Ok(&self.curves()?.graph)
    }
}

/// Shape classes of minimal vectors: `(±4², 0²²)`, `(±2⁸, 0¹⁶)` and
/// `(∓3, ±1²³)`.
pub fn shape_census(vectors: &[LeechVector]) -> ShapeCounts {
    let mut s = ShapeCounts { fours: 0, octads: 0, odd: 0 };
    for v in vectors {
        let c = v.coords();
        if c.iter().any(|x| x % 2 != 0) {
            s.odd += 1;
        } else if c.iter().filter(|&&x| x != 0).count() == 2 {
            s.fours += 1;
        } else {
            s.octads += 1;
        }
    }
    s
}
