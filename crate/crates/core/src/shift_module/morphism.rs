//! Morphisms of finite shift modules: kernels, cokernels, projective covers.

use std::collections::BTreeMap;

use super::{present_summands, projective_sum, reachable, shift_target, Degree, FiniteShiftModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};

/// Degreewise matrices `V_d → W_d`; missing degrees are zero maps.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftMorphism<E> {
    pub maps: BTreeMap<Degree, Matrix<E>>,
}

impl<E: Clone> ShiftMorphism<E> {
    pub fn at<F: Field<Elem = E>>(
        &self,
        field: &F,
        source: &FiniteShiftModule<F>,
        target: &FiniteShiftModule<F>,
        d: &[u32],
    ) -> Matrix<E> {
        match self.maps.get(d) {
            Some(m) => m.clone(),
            None => Matrix::zeros(field, target.dim(d), source.dim(d)),
        }
    }
}

/// The morphism `⊕_j P(b_j) → ⊕_i P(a_i)` with scalar `c_ij` from summand
/// `j` to summand `i`. Entries must vanish unless `b_j` is reachable from
/// `a_i`.
pub fn scalar_morphism<F: Field>(
    field: &F,
    target_degrees: &[Degree],
    source_degrees: &[Degree],
    scalars: &Matrix<F::Elem>,
) -> Result<ShiftMorphism<F::Elem>> {
    if scalars.shape() != (target_degrees.len(), source_degrees.len()) {
        return Err(Error::ShapeMismatch(format!(
            "scalar matrix is {:?}, degrees give {:?}",
            scalars.shape(),
            (target_degrees.len(), source_degrees.len())
        )));
    }
    for (i, a) in target_degrees.iter().enumerate() {
        for (j, b) in source_degrees.iter().enumerate() {
            if !field.is_zero(scalars.get(i, j)) && !reachable(a, b) {
                return Err(Error::InvalidInput(format!(
                    "no shift map P({b:?}) → P({a:?})"
                )));
            }
        }
    }
    let mut maps = BTreeMap::new();
    let mut degrees: Vec<&Degree> = source_degrees.iter().collect();
    degrees.sort();
    degrees.dedup();
    let mut seen = std::collections::BTreeSet::new();
    for b in degrees {
        for e in super::reachable_from(b)? {
            if !seen.insert(e.clone()) {
                continue;
            }
            let rows = present_summands(target_degrees, &e);
            let cols = present_summands(source_degrees, &e);
            let data = rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| scalars.get(i, j).clone()))
                .collect();
            maps.insert(e, Matrix::from_vec(rows.len(), cols.len(), data)?);
        }
    }
    Ok(ShiftMorphism { maps })
}

/// Whether `phi` has the right shapes and commutes with every shift.
pub fn is_morphism<F: Field>(
    source: &FiniteShiftModule<F>,
    target: &FiniteShiftModule<F>,
    phi: &ShiftMorphism<F::Elem>,
) -> bool {
    let field = source.field();
    for (d, mat) in &phi.maps {
        if mat.shape() != (target.dim(d), source.dim(d)) {
            return false;
        }
    }
    for d in source.dims().keys() {
        for p in 1..=source.m() {
            let Some(e) = shift_target(d, p) else {
                continue;
            };
            let left = phi
                .at(field, source, target, &e)
                .mul(field, &source.shift(d, p).unwrap());
            let right = target
                .shift(d, p)
                .unwrap()
                .mul(field, &phi.at(field, source, target, d));
            match (left, right) {
                (Ok(l), Ok(r)) if l == r => {}
                _ => return false,
            }
        }
    }
    true
}

/// `psi ∘ phi`.
pub fn compose<F: Field>(
    a: &FiniteShiftModule<F>,
    b: &FiniteShiftModule<F>,
    c: &FiniteShiftModule<F>,
    phi: &ShiftMorphism<F::Elem>,
    psi: &ShiftMorphism<F::Elem>,
) -> Result<ShiftMorphism<F::Elem>> {
    let field = a.field();
    let mut maps = BTreeMap::new();
    for d in a.dims().keys() {
        let m = psi.at(field, b, c, d).mul(field, &phi.at(field, a, b, d))?;
        maps.insert(d.clone(), m);
    }
    Ok(ShiftMorphism { maps })
}

/// The kernel of `phi` with its inclusion into the source.
pub fn kernel<F: Field>(
    source: &FiniteShiftModule<F>,
    target: &FiniteShiftModule<F>,
    phi: &ShiftMorphism<F::Elem>,
) -> Result<(FiniteShiftModule<F>, ShiftMorphism<F::Elem>)> {
    let field = source.field();
    let mut bases = BTreeMap::new();
    for d in source.dims().keys() {
        let b = linalg::kernel_basis(field, &phi.at(field, source, target, d))?;
        if b.cols() > 0 {
            bases.insert(d.clone(), b);
        }
    }
    let dims = bases.iter().map(|(d, b)| (d.clone(), b.cols())).collect();
    let mut shifts = BTreeMap::new();
    for (d, b) in &bases {
        for p in 1..=source.m() {
            let Some(e) = shift_target(d, p) else {
                continue;
            };
            let Some(be) = bases.get(&e) else { continue };
            let image = source.shift(d, p).unwrap().mul(field, b)?;
            let x = linalg::solve_matrix(field, be, &image)?
                .ok_or_else(|| Error::InvalidInput(format!("map is not a morphism at {d:?}")))?;
            shifts.insert((d.clone(), p), x);
        }
    }
    let module = FiniteShiftModule::new(field.clone(), source.m(), source.n(), dims, shifts)?;
    Ok((module, ShiftMorphism { maps: bases }))
}

/// The cokernel of `phi` with the projection from the target.
pub fn cokernel<F: Field>(
    source: &FiniteShiftModule<F>,
    target: &FiniteShiftModule<F>,
    phi: &ShiftMorphism<F::Elem>,
) -> Result<(FiniteShiftModule<F>, ShiftMorphism<F::Elem>)> {
    let field = source.field();
    // per degree: projection pi_d and a section (complement basis vectors)
    let mut proj = BTreeMap::new();
    let mut sections = BTreeMap::new();
    for (d, &k) in target.dims() {
        let img = phi.at(field, source, target, d);
        let comp = linalg::complement_basis(field, &img)?;
        if comp.is_empty() {
            continue;
        }
        let ech = linalg::rref(field, &img)?;
        let img_basis = img.select_columns(&ech.pivots);
        let section = Matrix::identity(field, k).select_columns(&comp);
        let t = img_basis.hstack(&section)?;
        let inv = linalg::solve_matrix(field, &t, &Matrix::identity(field, k))?
            .expect("image plus complement is a basis");
        let r = img_basis.cols();
        let rows: Vec<F::Elem> = (r..k).flat_map(|i| inv.row(i).to_vec()).collect();
        proj.insert(d.clone(), Matrix::from_vec(k - r, k, rows)?);
        sections.insert(d.clone(), section);
    }
    let dims = proj.iter().map(|(d, p)| (d.clone(), p.rows())).collect();
    let mut shifts = BTreeMap::new();
    for (d, sec) in &sections {
        for p in 1..=target.m() {
            let Some(e) = shift_target(d, p) else {
                continue;
            };
            let Some(pe) = proj.get(&e) else { continue };
            let m = pe.mul(field, &target.shift(d, p).unwrap().mul(field, sec)?)?;
            shifts.insert((d.clone(), p), m);
        }
    }
    let module = FiniteShiftModule::new(field.clone(), target.m(), target.n(), dims, shifts)?;
    Ok((module, ShiftMorphism { maps: proj }))
}

/// A projective cover `⊕ P(d_k) → V`, returning the generator degrees (with
/// repetition), the projective sum and the covering map.
#[allow(clippy::type_complexity)]
pub fn cover<F: Field>(
    module: &FiniteShiftModule<F>,
) -> Result<(Vec<Degree>, FiniteShiftModule<F>, ShiftMorphism<F::Elem>)> {
    let field = module.field();
    let mut degrees = Vec::new();
    let mut vectors = Vec::new();
    for (d, basis) in module.generator_basis()? {
        for j in 0..basis.cols() {
            degrees.push(d.clone());
            vectors.push(basis.column(j));
        }
    }
    let proj = projective_sum(field.clone(), module.m(), module.n(), &degrees)?;
    let mut maps = BTreeMap::new();
    for e in proj.dims().keys() {
        let present = present_summands(&degrees, e);
        let mut cols = Vec::with_capacity(present.len());
        for &k in &present {
            let t = module
                .transport(&degrees[k], e)?
                .expect("summand is present, so e is reachable");
            cols.push(t.mul_vec(field, &vectors[k])?);
        }
        maps.insert(e.clone(), Matrix::from_columns(field, module.dim(e), &cols));
    }
    Ok((degrees, proj, ShiftMorphism { maps }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::SstIdeal;
    use crate::shift_module::{from_sst_ideal, projective};

    #[test]
    fn cover_of_ideal_is_surjective() {
        let f = PrimeField::default();
        let i = SstIdeal::parse("x1*x3, x2^2").unwrap();
        let v = from_sst_ideal(f, &i, 3, 3).unwrap();
        let (degs, p, pi) = cover(&v).unwrap();
        assert_eq!(degs.len(), 2);
        assert!(is_morphism(&p, &v, &pi));
        let (c, _) = cokernel(&p, &v, &pi).unwrap();
        assert!(c.is_zero());
        let (k, inc) = kernel(&p, &v, &pi).unwrap();
        assert!(k.validate().is_valid());
        assert!(is_morphism(&k, &p, &inc));
        for (d, &dim) in p.dims() {
            assert_eq!(dim, v.dim(d) + k.dim(d));
        }
    }

    #[test]
    fn quotient_of_free_by_ideal() {
        let f = PrimeField::default();
        let i = SstIdeal::parse("x1^2").unwrap();
        let v = from_sst_ideal(f, &i, 2, 2).unwrap();
        let free = projective(f, 2, 2, &[0, 0, 2]).unwrap();
        let maps = v
            .dims()
            .keys()
            .map(|d| (d.clone(), Matrix::identity(&f, 1)))
            .collect();
        let inc = ShiftMorphism { maps };
        assert!(is_morphism(&v, &free, &inc));
        let (q, pi) = cokernel(&v, &free, &inc).unwrap();
        assert!(q.validate().is_valid());
        assert!(is_morphism(&free, &q, &pi));
        assert_eq!(q.total_dim(), 5);
        assert_eq!(q.generators().unwrap(), vec![(vec![0, 0, 2], 1)]);
    }
}
