use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, SparseVec, Subspace};
use crate::yd::{CoverReport, YdModule};

/// A candidate relatively projective cover `module -> target`, together
/// with the induced module it is a summand of.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: YdModule,
    pub map: Matrix,
    pub target: YdModule,
    pub ambient: YdModule,
    pub incl: Matrix,
}

impl Cover {
    /// The unique indecomposable summand of `ambient` on which `ambient_map`
    /// does not vanish. `ambient` should be induced, e.g. the coadjoint
    /// module for the unit object.
    pub fn minimal_summand(ambient: YdModule, ambient_map: &Matrix, target: YdModule) -> Result<Self> {
        let mut carrying: Vec<(YdModule, Matrix)> =
            ambient.decompose()?.into_iter().filter(|(_, incl)| !ambient_map.mul(incl).is_zero()).collect();
        if carrying.len() != 1 {
            return Err(Error::UnverifiedCover(format!(
                "map is nonzero on {} indecomposable summands, expected exactly one",
                carrying.len()
            )));
        }
        let (module, incl) = carrying.remove(0);
        let map = ambient_map.mul(&incl);
        Ok(Cover { module, map, target, ambient, incl })
    }

    /// The cover of the unit object: minimal summand of the coadjoint module
    /// carrying the counit `psi -> psi(1)`.
    pub fn of_unit(double: std::sync::Arc<crate::yd::Double>) -> Result<Self> {
        let h = double.algebra();
        let counit = Matrix::from_rows(h.field(), h.dim(), vec![h.one().clone()]);
        let ambient = YdModule::coadjoint(double.clone());
        Self::minimal_summand(ambient, &counit, YdModule::trivial(double))
    }

    /// The cover of `v`: minimal summand of the induced module `F(v)`
    /// carrying the action map `phi (x) x -> phi . x`.
    pub fn of_module(v: &YdModule) -> Result<Self> {
        let ambient = YdModule::induced(v.double().clone(), v.actions())?;
        Self::minimal_summand(ambient, &super::bar::bar_differential(v, 0), v.clone())
    }

    pub fn verify(&self) -> CoverReport {
        self.module.verify_rel_proj_cover(&self.target, &self.map, &self.ambient, &self.incl)
    }

    /// Relatively projective with an `H`-split surjection onto the target;
    /// indecomposability is not required.
    pub fn is_rel_proj_presentation(&self) -> bool {
        let r = self.verify();
        r.is_summand && r.surjective && r.h_split && r.morphism
    }

    /// Whether `x`, in ambient coordinates, lies in the summand.
    pub fn contains(&self, x: &SparseVec) -> bool {
        Subspace::span(self.ambient.field(), self.ambient.dim(), self.incl.cols()).contains(x)
    }

    /// Kernel of the cover map as a submodule, with its inclusion.
    pub fn kernel(&self) -> Result<(YdModule, Matrix)> {
        let sub = Subspace::span(self.module.field(), self.module.dim(), kernel(&self.map));
        self.module.submodule(&sub)
    }
}
