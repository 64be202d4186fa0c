//! Building new families from old: restriction to a member set and
//! extension back, iterated products, and majority projection of tuples.

use serde::{Deserialize, Serialize};

use super::Family;
use crate::error::{Error, Result};
use crate::foundations::{tuple_digits, SubsetMask, Universe};

/// Relabels a mask over `X` restricted to `q` as a mask over the sub-universe `q`.
fn gather(s: SubsetMask, q: SubsetMask) -> SubsetMask {
    SubsetMask::from_elements(q.elements().enumerate().filter(|&(_, x)| s.contains(x)).map(|(j, _)| j))
}

/// Inverse of [`gather`].
fn scatter(s: SubsetMask, q: SubsetMask) -> SubsetMask {
    SubsetMask::from_elements(q.elements().enumerate().filter(|&(j, _)| s.contains(j)).map(|(_, x)| x))
}

/// `{S ⊆ Q : S ∈ F}`, as a family on the sub-universe `Q`.
pub fn restrict_to(family: &Family, q: SubsetMask) -> Result<Family> {
    if !family.is_self_aso() {
        return Err(Error::NotSelfAsoEventual);
    }
    if !family.contains(q) {
        return Err(Error::NotAMember);
    }
    let sub = family.universe().restrict(q)?;
    Ok(Family::from_fn(&sub, |s| family.contains(scatter(s, q))))
}

/// `{S ⊆ X : S ∩ Q ∈ F'}` for a family `F'` living on the sub-universe `Q`.
pub fn extend_from(sub_family: &Family, x: &Universe, q: SubsetMask) -> Result<Family> {
    if &x.restrict(q)? != sub_family.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(Family::from_fn(x, |s| sub_family.contains(gather(s.intersect(q), q))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProductOrder {
    /// Decide each `X`-slice with the first family, then the slice set with the second.
    #[serde(rename = "xy")]
    XThenY,
    /// Decide each `Y`-slice with the second family, then the slice set with the first.
    #[serde(rename = "yx")]
    YThenX,
}

/// Iterated product on `X × Y` with no species requirements.
pub fn product_raw(e: &Family, f: &Family, order: ProductOrder) -> Result<Family> {
    let (xu, yu) = (e.universe(), f.universe());
    let (nx, ny) = (xu.len(), yu.len());
    let grid = xu.product(yu)?;
    let at = |x: usize, y: usize| x * ny + y;
    Ok(Family::from_fn(&grid, |s| match order {
        ProductOrder::XThenY => {
            let good_rows = (0..ny).filter(|&y| {
                let slice = SubsetMask::from_elements((0..nx).filter(|&x| s.contains(at(x, y))));
                e.contains(slice)
            });
            f.contains(SubsetMask::from_elements(good_rows))
        }
        ProductOrder::YThenX => {
            let good_cols = (0..nx).filter(|&x| {
                let slice = SubsetMask::from_elements((0..ny).filter(|&y| s.contains(at(x, y))));
                f.contains(slice)
            });
            e.contains(SubsetMask::from_elements(good_cols))
        }
    }))
}

fn require_self_aso_eventual(f: &Family) -> Result<()> {
    if f.is_eventual() && f.is_self_aso() {
        Ok(())
    } else {
        Err(Error::NotSelfAsoEventual)
    }
}

/// [`product_raw`] restricted to self-associated eventual inputs.
pub fn product_self_aso(e: &Family, f: &Family, order: ProductOrder) -> Result<Family> {
    require_self_aso_eventual(e)?;
    require_self_aso_eventual(f)?;
    product_raw(e, f, order)
}

/// Projects a family on `(2N+1)`-tuples to the base set: `S` belongs iff the
/// tuples with a strict majority of coordinates in `S` form a member.
pub fn majority_projection(family: &Family, base: &Universe, arity: usize) -> Result<Family> {
    if arity.is_multiple_of(2) {
        return Err(Error::EvenArity(arity));
    }
    if family.universe() != &base.power(arity)? {
        return Err(Error::UniverseMismatch);
    }
    require_self_aso_eventual(family)?;
    let n = base.len();
    let tuples: Vec<Vec<usize>> = (0..family.universe().len()).map(|t| tuple_digits(t, n, arity)).collect();
    let need = arity / 2 + 1;
    Ok(Family::from_fn(base, |s| {
        let winners = tuples
            .iter()
            .enumerate()
            .filter(|(_, t)| t.iter().filter(|&&c| s.contains(c)).count() >= need)
            .map(|(i, _)| i);
        family.contains(SubsetMask::from_elements(winners))
    }))
}
