//! Uniform access to the three ambients a set can live in: a finite group
//! acting on itself, a finite G-space, and a windowed `ℤ^d` group scoped by
//! a [`HorizonPolicy`].
//!
//! Infinite-group quantifiers ("for some finite F ⊆ G", "covers X") are not
//! decidable from finite data. The policy fixes the honest finite stand-in:
//! translates are confined to the margin ball, coverage targets the inner
//! window, and every windowed verdict is horizon-relative.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSpace, WindowedGroup};
use crate::set::FiniteSet;

/// Finite-horizon semantics for quantifiers on windowed groups: witnesses
/// and patterns are confined to the sup-norm ball of radius `margin`, and
/// coverage targets the inner window of radius `horizon - margin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HorizonPolicy {
    horizon: i64,
    margin: i64,
}

impl HorizonPolicy {
    pub fn new(horizon: i64, margin: i64) -> Result<Self> {
        if horizon < 1 || margin < 1 {
            return Err(Error::Precondition(format!(
                "horizon and margin must be positive (got {horizon}, {margin})"
            )));
        }
        if margin >= horizon {
            return Err(Error::Precondition(format!(
                "margin {margin} must be smaller than horizon {horizon}"
            )));
        }
        Ok(HorizonPolicy { horizon, margin })
    }

    pub fn horizon(&self) -> i64 {
        self.horizon
    }

    pub fn margin(&self) -> i64 {
        self.margin
    }

    pub fn inner_radius(&self) -> i64 {
        self.horizon - self.margin
    }
}

/// Ambient structure for the set calculus.
pub trait Carrier {
    /// Group element ids eligible as translate/witness components.
    fn translate_domain(&self) -> Result<Vec<u64>>;
    /// Point ids that coverage must hit and patterns are anchored at.
    fn target_points(&self) -> Result<Vec<u64>>;
    /// Action of a group element on a point.
    fn act(&self, g: u64, x: u64) -> Result<u64>;
    /// Product of two group elements.
    fn mul(&self, g: u64, h: u64) -> Result<u64>;
    fn inv(&self, g: u64) -> Result<u64>;
    fn identity(&self) -> u64;
    fn is_windowed(&self) -> bool {
        false
    }
    fn describe(&self) -> String;
}

/// A finite group acting on itself by left translation.
pub struct GroupCarrier<'a>(pub &'a FiniteGroup);

impl Carrier for GroupCarrier<'_> {
    fn translate_domain(&self) -> Result<Vec<u64>> {
        Ok((0..self.0.order() as u64).collect())
    }

    fn target_points(&self) -> Result<Vec<u64>> {
        Ok((0..self.0.order() as u64).collect())
    }

    fn act(&self, g: u64, x: u64) -> Result<u64> {
        self.check(g)?;
        self.check(x)?;
        Ok(self.0.mul(g as u32, x as u32) as u64)
    }

    fn mul(&self, g: u64, h: u64) -> Result<u64> {
        self.act(g, h)
    }

    fn inv(&self, g: u64) -> Result<u64> {
        self.check(g)?;
        Ok(self.0.inv(g as u32) as u64)
    }

    fn identity(&self) -> u64 {
        self.0.identity() as u64
    }

    fn describe(&self) -> String {
        format!("finite group of order {}", self.0.order())
    }
}

impl GroupCarrier<'_> {
    fn check(&self, id: u64) -> Result<()> {
        if id >= self.0.order() as u64 {
            return Err(Error::ElementOutOfRange {
                id,
                size: self.0.order() as u64,
            });
        }
        Ok(())
    }
}

/// A finite group acting on a finite point set.
pub struct SpaceCarrier<'a>(pub &'a GSpace);

impl Carrier for SpaceCarrier<'_> {
    fn translate_domain(&self) -> Result<Vec<u64>> {
        Ok((0..self.0.group().order() as u64).collect())
    }

    fn target_points(&self) -> Result<Vec<u64>> {
        Ok((0..self.0.points() as u64).collect())
    }

    fn act(&self, g: u64, x: u64) -> Result<u64> {
        if g >= self.0.group().order() as u64 {
            return Err(Error::ElementOutOfRange {
                id: g,
                size: self.0.group().order() as u64,
            });
        }
        if x >= self.0.points() as u64 {
            return Err(Error::ElementOutOfRange {
                id: x,
                size: self.0.points() as u64,
            });
        }
        Ok(self.0.act(g as u32, x as u32) as u64)
    }

    fn mul(&self, g: u64, h: u64) -> Result<u64> {
        Ok(self.0.group().mul(g as u32, h as u32) as u64)
    }

    fn inv(&self, g: u64) -> Result<u64> {
        Ok(self.0.group().inv(g as u32) as u64)
    }

    fn identity(&self) -> u64 {
        self.0.group().identity() as u64
    }

    fn describe(&self) -> String {
        format!(
            "G-space with {} points under a group of order {}",
            self.0.points(),
            self.0.group().order()
        )
    }
}

/// A windowed `ℤ^d` group scoped by a horizon policy.
pub struct WindowCarrier<'a> {
    group: &'a WindowedGroup,
    policy: HorizonPolicy,
}

impl<'a> WindowCarrier<'a> {
    pub fn new(group: &'a WindowedGroup, policy: HorizonPolicy) -> Result<Self> {
        if policy.horizon() != group.horizon() {
            return Err(Error::Precondition(format!(
                "policy horizon {} does not match group horizon {}",
                policy.horizon(),
                group.horizon()
            )));
        }
        Ok(WindowCarrier { group, policy })
    }

    pub fn group(&self) -> &WindowedGroup {
        self.group
    }

    pub fn policy(&self) -> HorizonPolicy {
        self.policy
    }
}

impl Carrier for WindowCarrier<'_> {
    fn translate_domain(&self) -> Result<Vec<u64>> {
        self.group.ball_ids(self.policy.margin())
    }

    fn target_points(&self) -> Result<Vec<u64>> {
        self.group.ball_ids(self.policy.inner_radius())
    }

    fn act(&self, g: u64, x: u64) -> Result<u64> {
        self.group.add(g, x)
    }

    fn mul(&self, g: u64, h: u64) -> Result<u64> {
        self.group.add(g, h)
    }

    fn inv(&self, g: u64) -> Result<u64> {
        Ok(self.group.neg(g))
    }

    fn identity(&self) -> u64 {
        self.group.identity()
    }

    fn is_windowed(&self) -> bool {
        true
    }

    fn describe(&self) -> String {
        format!(
            "windowed Z^{} (horizon {}, margin {})",
            self.group.dim(),
            self.policy.horizon(),
            self.policy.margin()
        )
    }
}

/// `FA = {f·a : f ∈ F, a ∈ A}`, deduplicated. For G-spaces `F` holds group
/// ids and `A` point ids; windowed products overflowing the horizon are an
/// error, never a wraparound.
pub fn set_product<C: Carrier + ?Sized>(c: &C, f: &FiniteSet, a: &FiniteSet) -> Result<FiniteSet> {
    let mut out = Vec::with_capacity(f.len() * a.len());
    for g in f.iter() {
        for x in a.iter() {
            out.push(c.act(g, x)?);
        }
    }
    Ok(FiniteSet::from_ids(out))
}

/// Product of two sets of group elements.
pub fn set_mul<C: Carrier + ?Sized>(c: &C, f: &FiniteSet, g: &FiniteSet) -> Result<FiniteSet> {
    let mut out = Vec::with_capacity(f.len() * g.len());
    for a in f.iter() {
        for b in g.iter() {
            out.push(c.mul(a, b)?);
        }
    }
    Ok(FiniteSet::from_ids(out))
}

/// `F⁻¹ = {f⁻¹ : f ∈ F}`.
pub fn set_inv<C: Carrier + ?Sized>(c: &C, f: &FiniteSet) -> Result<FiniteSet> {
    let mut out = Vec::with_capacity(f.len());
    for a in f.iter() {
        out.push(c.inv(a)?);
    }
    Ok(FiniteSet::from_ids(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_identity_case() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let c = GroupCarrier(&z6);
        let a = FiniteSet::from_ids(vec![2, 4, 5]);
        let e = FiniteSet::singleton(c.identity());
        assert_eq!(set_product(&c, &e, &a).unwrap(), a);
    }

    #[test]
    fn product_mod_six() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let c = GroupCarrier(&z6);
        let f = FiniteSet::from_ids(vec![0, 3]);
        let a = FiniteSet::from_ids(vec![0, 1]);
        assert_eq!(set_product(&c, &f, &a).unwrap().as_slice(), &[0, 1, 3, 4]);
    }

    #[test]
    fn product_windowed_interval() {
        let z = WindowedGroup::new(1, 50).unwrap();
        let policy = HorizonPolicy::new(50, 10).unwrap();
        let c = WindowCarrier::new(&z, policy).unwrap();
        let f = z.set_from_values(&[-1, 0, 1]).unwrap();
        let a = z.set_from_values(&[0, 5]).unwrap();
        let fa = set_product(&c, &f, &a).unwrap();
        assert_eq!(z.values_of(&fa), vec![-1, 0, 1, 4, 5, 6]);

        let near_edge = z.set_from_values(&[50]).unwrap();
        assert!(set_product(&c, &f, &near_edge).is_err());
    }

    #[test]
    fn translation_composes() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        let c = GroupCarrier(&z5);
        let a = FiniteSet::from_ids(vec![0, 2]);
        for g in 0..5u64 {
            for h in 0..5u64 {
                let gh = c.mul(g, h).unwrap();
                let lhs = set_product(
                    &c,
                    &FiniteSet::singleton(g),
                    &set_product(&c, &FiniteSet::singleton(h), &a).unwrap(),
                )
                .unwrap();
                let rhs = set_product(&c, &FiniteSet::singleton(gh), &a).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
