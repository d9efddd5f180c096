//! Group representations: finite groups by Cayley table, windowed `ℤ^d`
//! groups, finite G-spaces, and homomorphisms.
//!
//! Elements are dense integer ids. A finite group of order `n` uses ids
//! `0..n`; a windowed group encodes each vector `v` (with `|v|_∞ ≤ H`) into
//! a single id so that sets of vectors can share the [`FiniteSet`]
//! representation. All operations that could leave the window report
//! [`Error::WindowOverflow`] instead of wrapping.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::FiniteSet;

/// Exhaustive associativity checking is cubic; above this order the
/// validator samples `10 * order` triples instead.
pub const EXHAUSTIVE_ASSOC_ORDER: u32 = 64;

/// Default cap on the order of a direct product.
pub const MAX_PRODUCT_ORDER: u64 = 4096;

// ---------------------------------------------------------------------------
// Finite groups
// ---------------------------------------------------------------------------

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: u32,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

impl FiniteGroup {
    /// Builds a group from a row-major table, rejecting anything that fails
    /// [`validate_group`].
    pub fn from_table(table: &[Vec<u32>]) -> Result<Self> {
        let report = validate_group(table);
        if !report.is_valid() {
            return Err(Error::InvalidGroup(report.to_string()));
        }
        let order = table.len() as u32;
        let mul: Vec<u32> = table.iter().flatten().copied().collect();
        let identity = find_identity(table).expect("validated table has an identity");
        let mut inv = vec![0u32; order as usize];
        for g in 0..order {
            for h in 0..order {
                if mul[(g * order + h) as usize] == identity {
                    inv[g as usize] = h;
                    break;
                }
            }
        }
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            identity,
        })
    }

    /// The cyclic group `ℤ_n` under addition mod n.
    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic(0) has no elements".into()));
        }
        let mut mul = Vec::with_capacity((n * n) as usize);
        for a in 0..n {
            for b in 0..n {
                mul.push((a + b) % n);
            }
        }
        let inv = (0..n).map(|a| (n - a) % n).collect();
        Ok(FiniteGroup {
            order: n,
            mul,
            inv,
            identity: 0,
        })
    }

    /// Direct product with componentwise multiplication. Element `(a, b)` of
    /// `G × H` has id `a * |H| + b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Self::product_with_cap(g, h, MAX_PRODUCT_ORDER)
    }

    pub fn product_with_cap(g: &FiniteGroup, h: &FiniteGroup, cap: u64) -> Result<Self> {
        let order = g.order as u64 * h.order as u64;
        if order > cap {
            return Err(Error::InvalidGroup(format!(
                "product order {order} exceeds cap {cap}"
            )));
        }
        let order = order as u32;
        let ho = h.order;
        let mut mul = vec![0u32; (order as usize) * (order as usize)];
        for a1 in 0..g.order {
            for b1 in 0..ho {
                let x = a1 * ho + b1;
                for a2 in 0..g.order {
                    for b2 in 0..ho {
                        let y = a2 * ho + b2;
                        mul[(x as usize) * (order as usize) + y as usize] =
                            g.mul(a1, a2) * ho + h.mul(b1, b2);
                    }
                }
            }
        }
        let inv = (0..order)
            .map(|x| g.inv(x / ho) * ho + h.inv(x % ho))
            .collect();
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            identity: g.identity * ho + h.identity,
        })
    }

    /// The dihedral group of order `2n`: ids `0..n` are rotations,
    /// `n..2n` are reflections.
    pub fn dihedral(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("dihedral(0) has no elements".into()));
        }
        let order = 2 * n;
        let mut table = vec![vec![0u32; order as usize]; order as usize];
        for a in 0..n {
            for b in 0..n {
                table[a as usize][b as usize] = (a + b) % n;
                table[a as usize][(n + b) as usize] = n + (a + b) % n;
                table[(n + a) as usize][b as usize] = n + (a + n - b % n) % n;
                table[(n + a) as usize][(n + b) as usize] = (a + n - b % n) % n;
            }
        }
        Self::from_table(&table)
    }

    /// The quaternion group of order 8.
    pub fn quaternion8() -> Self {
        // (sign, basis) with basis 0=1, 1=i, 2=j, 3=k; id = sign*4 + basis.
        let basis_mul = |a: u32, b: u32| -> (u32, u32) {
            match (a, b) {
                (0, x) => (0, x),
                (x, 0) => (0, x),
                (1, 1) | (2, 2) | (3, 3) => (1, 0),
                (1, 2) => (0, 3),
                (2, 1) => (1, 3),
                (2, 3) => (0, 1),
                (3, 2) => (1, 1),
                (3, 1) => (0, 2),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let mut table = vec![vec![0u32; 8]; 8];
        for x in 0..8u32 {
            for y in 0..8u32 {
                let (s, b) = basis_mul(x % 4, y % 4);
                let sign = (x / 4 + y / 4 + s) % 2;
                table[x as usize][y as usize] = sign * 4 + b;
            }
        }
        Self::from_table(&table).expect("quaternion table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).unwrap()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a as usize) * (self.order as usize) + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// Order of a single element, by repeated multiplication.
    pub fn element_order(&self, g: u32) -> u32 {
        let mut x = g;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// All ids, as a set.
    pub fn universe(&self) -> FiniteSet {
        FiniteSet::range(self.order as u64)
    }

    /// Checks that `h` contains the identity and is closed under products
    /// and inverses.
    pub fn is_subgroup(&self, h: &FiniteSet) -> bool {
        if !h.contains(self.identity as u64) {
            return false;
        }
        for a in h.iter() {
            if !h.contains(self.inv(a as u32) as u64) {
                return false;
            }
            for b in h.iter() {
                if !h.contains(self.mul(a as u32, b as u32) as u64) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks `gHg⁻¹ = H` for all g.
    pub fn is_normal_subgroup(&self, h: &FiniteSet) -> bool {
        if !self.is_subgroup(h) {
            return false;
        }
        for g in 0..self.order {
            for a in h.iter() {
                let conj = self.mul(self.mul(g, a as u32), self.inv(g));
                if !h.contains(conj as u64) {
                    return false;
                }
            }
        }
        true
    }
}

fn find_identity(table: &[Vec<u32>]) -> Option<u32> {
    let n = table.len() as u32;
    (0..n).find(|&e| {
        (0..n).all(|g| {
            table[e as usize][g as usize] == g && table[g as usize][e as usize] == g
        })
    })
}

// ---------------------------------------------------------------------------
// Table validation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotSquare { rows: usize, bad_row: usize, cols: usize },
    EntryOutOfRange { row: usize, col: usize, value: u32 },
    RowNotPermutation { row: usize, duplicate: u32 },
    ColNotPermutation { col: usize, duplicate: u32 },
    NoIdentity,
    InverseMissing { element: u32 },
    NotAssociative { g: u32, h: u32, k: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSquare { rows, bad_row, cols } => {
                write!(f, "table has {rows} rows but row {bad_row} has {cols} entries")
            }
            Violation::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is out of range")
            }
            Violation::RowNotPermutation { row, duplicate } => {
                write!(f, "row {row} repeats element {duplicate} (not a Latin row)")
            }
            Violation::ColNotPermutation { col, duplicate } => {
                write!(f, "column {col} repeats element {duplicate} (not a Latin column)")
            }
            Violation::NoIdentity => write!(f, "no two-sided identity element"),
            Violation::InverseMissing { element } => {
                write!(f, "element {element} has no inverse")
            }
            Violation::NotAssociative { g, h, k } => {
                write!(f, "associativity fails on witness triple ({g},{h},{k})")
            }
        }
    }
}

/// Axiom report for a multiplication table. Empty report ⇔ valid.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// True when associativity was checked on all triples rather than a
    /// deterministic sample.
    pub associativity_exhaustive: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid group table");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Checks every group axiom on a raw table and reports each violation with
/// a witness. Associativity is exhaustive up to order
/// [`EXHAUSTIVE_ASSOC_ORDER`], then sampled on `10 * order` deterministic
/// triples.
pub fn validate_group(table: &[Vec<u32>]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = table.len();
    if n == 0 {
        report.violations.push(Violation::NotSquare {
            rows: 0,
            bad_row: 0,
            cols: 0,
        });
        return report;
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            report.violations.push(Violation::NotSquare {
                rows: n,
                bad_row: i,
                cols: row.len(),
            });
        }
    }
    if !report.violations.is_empty() {
        return report;
    }
    for (i, row) in table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v as usize >= n {
                report.violations.push(Violation::EntryOutOfRange {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
    }
    if !report.violations.is_empty() {
        return report;
    }

    for (i, row) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &v in row {
            if seen[v as usize] {
                report
                    .violations
                    .push(Violation::RowNotPermutation { row: i, duplicate: v });
                break;
            }
            seen[v as usize] = true;
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for row in table {
            let v = row[j];
            if seen[v as usize] {
                report
                    .violations
                    .push(Violation::ColNotPermutation { col: j, duplicate: v });
                break;
            }
            seen[v as usize] = true;
        }
    }

    let identity = find_identity(table);
    if identity.is_none() {
        report.violations.push(Violation::NoIdentity);
    }
    if let Some(e) = identity {
        for g in 0..n {
            let has_inv = (0..n)
                .any(|h| table[g][h] == e as u32 && table[h][g] == e as u32);
            if !has_inv {
                report
                    .violations
                    .push(Violation::InverseMissing { element: g as u32 });
            }
        }
    }

    let assoc_witness = |g: usize, h: usize, k: usize| -> bool {
        table[table[g][h] as usize][k] == table[g][table[h][k] as usize]
    };
    if n as u32 <= EXHAUSTIVE_ASSOC_ORDER {
        report.associativity_exhaustive = true;
        'outer: for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if !assoc_witness(g, h, k) {
                        report.violations.push(Violation::NotAssociative {
                            g: g as u32,
                            h: h as u32,
                            k: k as u32,
                        });
                        break 'outer;
                    }
                }
            }
        }
    } else {
        report.associativity_exhaustive = false;
        let mut state = 0x5eed_0000u64 ^ (n as u64);
        for _ in 0..(10 * n) {
            let g = (splitmix64(&mut state) % n as u64) as usize;
            let h = (splitmix64(&mut state) % n as u64) as usize;
            let k = (splitmix64(&mut state) % n as u64) as usize;
            if !assoc_witness(g, h, k) {
                report.violations.push(Violation::NotAssociative {
                    g: g as u32,
                    h: h as u32,
                    k: k as u32,
                });
                break;
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Windowed ℤ^d
// ---------------------------------------------------------------------------

/// `ℤ^d` truncated to the sup-norm ball of radius `horizon`. Vectors are
/// encoded into ids mixed-radix so sets of vectors reuse [`FiniteSet`];
/// for `d = 1` the encoding `id = v + horizon` is order-preserving.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowedGroup {
    dim: usize,
    horizon: i64,
}

/// Enumerating a ball materializes `(2r+1)^d` ids; refuse beyond this.
const BALL_ENUM_CAP: u64 = 20_000_000;

impl WindowedGroup {
    pub fn new(dim: usize, horizon: i64) -> Result<Self> {
        if dim == 0 || dim > 3 {
            return Err(Error::Precondition(format!(
                "windowed dimension must be 1..=3, got {dim}"
            )));
        }
        if horizon < 1 {
            return Err(Error::Precondition(format!(
                "horizon must be positive, got {horizon}"
            )));
        }
        // side^dim must fit in u64 for the id encoding
        let side = 2u128 * horizon as u128 + 1;
        if side.pow(dim as u32) > u64::MAX as u128 {
            return Err(Error::Precondition(format!(
                "horizon {horizon} too large for dimension {dim}"
            )));
        }
        Ok(WindowedGroup { dim, horizon })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn horizon(&self) -> i64 {
        self.horizon
    }

    fn side(&self) -> u64 {
        2 * self.horizon as u64 + 1
    }

    pub fn encode(&self, v: &[i64]) -> Result<u64> {
        if v.len() != self.dim {
            return Err(Error::Precondition(format!(
                "vector {:?} has dimension {}, expected {}",
                v,
                v.len(),
                self.dim
            )));
        }
        for &c in v {
            if c.abs() > self.horizon {
                return Err(Error::WindowOverflow {
                    vector: v.to_vec(),
                    coordinate: c,
                    horizon: self.horizon,
                });
            }
        }
        let side = self.side();
        let mut id = 0u64;
        for &c in v.iter().rev() {
            id = id * side + (c + self.horizon) as u64;
        }
        Ok(id)
    }

    pub fn decode(&self, mut id: u64) -> Vec<i64> {
        let side = self.side();
        let mut v = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            v.push((id % side) as i64 - self.horizon);
            id /= side;
        }
        v
    }

    pub fn sup_norm(&self, id: u64) -> i64 {
        self.decode(id).iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn add(&self, a: u64, b: u64) -> Result<u64> {
        let va = self.decode(a);
        let vb = self.decode(b);
        let sum: Vec<i64> = va.iter().zip(&vb).map(|(x, y)| x + y).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let v: Vec<i64> = self.decode(a).iter().map(|c| -c).collect();
        self.encode(&v).expect("negation stays in the window")
    }

    pub fn identity(&self) -> u64 {
        self.encode(&vec![0; self.dim]).unwrap()
    }

    /// Ids of all vectors with sup-norm at most `radius`, sorted.
    pub fn ball_ids(&self, radius: i64) -> Result<Vec<u64>> {
        if radius < 0 || radius > self.horizon {
            return Err(Error::Precondition(format!(
                "ball radius {radius} outside [0, {}]",
                self.horizon
            )));
        }
        let count = (2u128 * radius as u128 + 1).pow(self.dim as u32);
        if count > BALL_ENUM_CAP as u128 {
            return Err(Error::Precondition(format!(
                "ball of radius {radius} in dimension {} has {count} elements, beyond the enumeration cap",
                self.dim
            )));
        }
        let mut ids = Vec::with_capacity(count as usize);
        let mut v = vec![-radius; self.dim];
        loop {
            ids.push(self.encode(&v)?);
            let mut i = 0;
            loop {
                if i == self.dim {
                    ids.sort_unstable();
                    return Ok(ids);
                }
                v[i] += 1;
                if v[i] <= radius {
                    break;
                }
                v[i] = -radius;
                i += 1;
            }
        }
    }

    /// Encodes a set of 1-dimensional values.
    pub fn set_from_values(&self, values: &[i64]) -> Result<FiniteSet> {
        let mut ids = Vec::with_capacity(values.len());
        for &v in values {
            ids.push(self.encode(&[v])?);
        }
        Ok(FiniteSet::from_ids(ids))
    }

    /// Decodes a set to raw 1-dimensional values (ascending).
    pub fn values_of(&self, set: &FiniteSet) -> Vec<i64> {
        set.iter().map(|id| self.decode(id)[0]).collect()
    }
}

// ---------------------------------------------------------------------------
// G-spaces
// ---------------------------------------------------------------------------

/// A finite left action of a finite group on a finite point set.
#[derive(Debug, Clone)]
pub struct GSpace {
    group: Arc<FiniteGroup>,
    points: u32,
    action: Vec<u32>,
}

impl GSpace {
    /// Builds a space from an action table (`|G|` rows, one entry per point),
    /// checking identity and compatibility on all pairs.
    pub fn from_action(group: Arc<FiniteGroup>, points: u32, action: Vec<Vec<u32>>) -> Result<Self> {
        if points == 0 {
            return Err(Error::InvalidAction("a G-space must be non-empty".into()));
        }
        if action.len() != group.order() as usize {
            return Err(Error::InvalidAction(format!(
                "action table has {} rows, group has order {}",
                action.len(),
                group.order()
            )));
        }
        for (g, row) in action.iter().enumerate() {
            if row.len() != points as usize {
                return Err(Error::InvalidAction(format!(
                    "action row {g} has {} entries, expected {points}",
                    row.len()
                )));
            }
            for (x, &y) in row.iter().enumerate() {
                if y >= points {
                    return Err(Error::InvalidAction(format!(
                        "action({g},{x}) = {y} is not a point"
                    )));
                }
            }
        }
        let flat: Vec<u32> = action.iter().flatten().copied().collect();
        let space = GSpace {
            group: group.clone(),
            points,
            action: flat,
        };
        let e = group.identity();
        for x in 0..points {
            if space.act(e, x) != x {
                return Err(Error::InvalidAction(format!(
                    "identity moves point {x} to {}",
                    space.act(e, x)
                )));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                for x in 0..points {
                    if space.act(gh, x) != space.act(g, space.act(h, x)) {
                        return Err(Error::InvalidAction(format!(
                            "action incompatible at (g,h,x) = ({g},{h},{x})"
                        )));
                    }
                }
            }
        }
        Ok(space)
    }

    /// The group acting on itself by left translation.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let action = (0..n)
            .flat_map(|g| (0..n).map(move |x| (g, x)))
            .map(|(g, x)| group.mul(g, x))
            .collect();
        GSpace {
            points: n,
            action,
            group,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn points(&self) -> u32 {
        self.points
    }

    pub fn act(&self, g: u32, x: u32) -> u32 {
        self.action[(g as usize) * (self.points as usize) + x as usize]
    }

    pub fn universe(&self) -> FiniteSet {
        FiniteSet::range(self.points as u64)
    }

    /// Orbit partition, each orbit sorted, orbits ordered by least element.
    pub fn orbits(&self) -> Vec<FiniteSet> {
        let mut seen = vec![false; self.points as usize];
        let mut orbits = Vec::new();
        for x in 0..self.points {
            if seen[x as usize] {
                continue;
            }
            let mut orbit = Vec::new();
            for g in 0..self.group.order() {
                let y = self.act(g, x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y as u64);
                }
            }
            orbits.push(FiniteSet::from_ids(orbit));
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

/// A group homomorphism: an image table between finite groups, or an
/// integer matrix `ℤ^d → ℤ^e` between windowed groups.
#[derive(Debug, Clone)]
pub enum GroupHom {
    Finite {
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<u32>,
        surjective: bool,
    },
    Linear {
        source: WindowedGroup,
        target: WindowedGroup,
        /// `target.dim` rows by `source.dim` columns.
        matrix: Vec<Vec<i64>>,
        surjective: bool,
    },
}

impl GroupHom {
    /// Builds and verifies a finite homomorphism (`h(g·g') = h(g)·h(g')` on
    /// all pairs).
    pub fn finite(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<u32>) -> Result<Self> {
        if map.len() != source.order() as usize {
            return Err(Error::Precondition(format!(
                "hom table has {} entries, source order is {}",
                map.len(),
                source.order()
            )));
        }
        for &v in &map {
            if v >= target.order() {
                return Err(Error::Precondition(format!(
                    "hom image {v} not in target group"
                )));
            }
        }
        for g in 0..source.order() {
            for h in 0..source.order() {
                let lhs = map[source.mul(g, h) as usize];
                let rhs = target.mul(map[g as usize], map[h as usize]);
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "not a homomorphism: h({g}·{h}) = {lhs} but h({g})·h({h}) = {rhs}"
                    )));
                }
            }
        }
        let mut hit = vec![false; target.order() as usize];
        for &v in &map {
            hit[v as usize] = true;
        }
        let surjective = hit.iter().all(|&b| b);
        Ok(GroupHom::Finite {
            source,
            target,
            map,
            surjective,
        })
    }

    /// Builds a linear map between windowed groups. Surjectivity onto `ℤ^e`
    /// is decided from the gcd of the maximal minors.
    pub fn linear(source: WindowedGroup, target: WindowedGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != target.dim() || matrix.iter().any(|r| r.len() != source.dim()) {
            return Err(Error::Precondition(format!(
                "matrix shape must be {}x{}",
                target.dim(),
                source.dim()
            )));
        }
        let surjective = maximal_minor_gcd(&matrix, target.dim(), source.dim()) == 1;
        Ok(GroupHom::Linear {
            source,
            target,
            matrix,
            surjective,
        })
    }

    pub fn is_surjective(&self) -> bool {
        match self {
            GroupHom::Finite { surjective, .. } | GroupHom::Linear { surjective, .. } => {
                *surjective
            }
        }
    }

    /// Image of a single element id.
    pub fn apply(&self, id: u64) -> Result<u64> {
        match self {
            GroupHom::Finite { map, source, .. } => {
                if id >= source.order() as u64 {
                    return Err(Error::ElementOutOfRange {
                        id,
                        size: source.order() as u64,
                    });
                }
                Ok(map[id as usize] as u64)
            }
            GroupHom::Linear {
                source,
                target,
                matrix,
                ..
            } => {
                let v = source.decode(id);
                let image: Vec<i64> = matrix
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(m, x)| m * x).sum())
                    .collect();
                target.encode(&image)
            }
        }
    }

    /// Image of a set, deduplicated.
    pub fn image_of(&self, set: &FiniteSet) -> Result<FiniteSet> {
        let mut out = Vec::with_capacity(set.len());
        for id in set.iter() {
            out.push(self.apply(id)?);
        }
        Ok(FiniteSet::from_ids(out))
    }
}

fn maximal_minor_gcd(matrix: &[Vec<i64>], rows: usize, cols: usize) -> i64 {
    if rows > cols {
        return 0;
    }
    fn det(m: &[Vec<i64>]) -> i64 {
        match m.len() {
            1 => m[0][0],
            2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
            3 => {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            }
            _ => unreachable!("dimensions are capped at 3"),
        }
    }
    let mut g: i64 = 0;
    let mut choose = vec![0usize; rows];
    fn rec(
        matrix: &[Vec<i64>],
        rows: usize,
        cols: usize,
        start: usize,
        depth: usize,
        choose: &mut Vec<usize>,
        g: &mut i64,
        det: &dyn Fn(&[Vec<i64>]) -> i64,
    ) {
        if depth == rows {
            let sub: Vec<Vec<i64>> = (0..rows)
                .map(|r| choose.iter().map(|&c| matrix[r][c]).collect())
                .collect();
            let d = det(&sub).abs();
            *g = num_integer::gcd(*g, d);
            return;
        }
        for c in start..cols {
            choose[depth] = c;
            rec(matrix, rows, cols, c + 1, depth + 1, choose, g, det);
        }
    }
    rec(matrix, rows, cols, 0, 0, &mut choose, &mut g, &det);
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables() {
        assert!(FiniteGroup::cyclic(0).is_err());
        let t = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.identity(), 0);
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.mul(1, 3), 0);
        assert_eq!(z4.inv(1), 3);
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let table: Vec<Vec<u32>> = (0..6)
            .map(|a| (0..6).map(|b| z6.mul(a, b)).collect())
            .collect();
        assert!(validate_group(&table).is_valid());
    }

    #[test]
    fn product_groups() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let klein = FiniteGroup::product(&c2, &c2).unwrap();
        for g in 0..4 {
            assert_eq!(klein.mul(g, g), klein.identity());
        }
        // (1,1) in Z2 x Z3 has order 6, so the product is cyclic of order 6
        let z2z3 = FiniteGroup::product(&c2, &c3).unwrap();
        let g = 1 * 3 + 1;
        assert_eq!(z2z3.element_order(g), 6);
        let t = FiniteGroup::trivial();
        let same = FiniteGroup::product(&t, &c3).unwrap();
        assert_eq!(same.order(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(same.mul(a, b), c3.mul(a, b));
            }
        }
        assert!(FiniteGroup::product_with_cap(&c2, &c3, 5).is_err());
    }

    #[test]
    fn dihedral_and_quaternion() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        // a reflection times itself is the identity
        assert_eq!(d3.mul(4, 4), d3.identity());
        // nonabelian
        assert_ne!(d3.mul(1, 3), d3.mul(3, 1));
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.element_order(1), 4);
        assert_eq!(q8.element_order(4), 2);
    }

    #[test]
    fn validation_witnesses() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        let table: Vec<Vec<u32>> = (0..5)
            .map(|a| (0..5).map(|b| z5.mul(a, b)).collect())
            .collect();
        assert!(validate_group(&table).is_valid());

        // break a row: duplicate entry
        let mut broken = table.clone();
        broken[1][1] = broken[1][0];
        let report = validate_group(&broken);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::RowNotPermutation { row: 1, .. })));

        // an associativity-violating magma on 3 elements whose rows and
        // columns are still Latin: a counterexample quasigroup
        let magma = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        let report = validate_group(&magma);
        assert!(!report.is_valid());
    }

    #[test]
    fn windowed_overflow_is_reported() {
        let z = WindowedGroup::new(1, 10).unwrap();
        let a = z.encode(&[7]).unwrap();
        let b = z.encode(&[5]).unwrap();
        assert!(matches!(z.add(a, b), Err(Error::WindowOverflow { .. })));
        let c = z.encode(&[-3]).unwrap();
        assert_eq!(z.decode(z.add(a, c).unwrap()), vec![4]);
        assert_eq!(z.decode(z.neg(a)), vec![-7]);
        assert!(z.encode(&[11]).is_err());
    }

    #[test]
    fn windowed_ball_enumeration() {
        let z = WindowedGroup::new(1, 10).unwrap();
        let ball = z.ball_ids(2).unwrap();
        assert_eq!(
            ball.iter().map(|&id| z.decode(id)[0]).collect::<Vec<_>>(),
            vec![-2, -1, 0, 1, 2]
        );
        let z2 = WindowedGroup::new(2, 5).unwrap();
        assert_eq!(z2.ball_ids(1).unwrap().len(), 9);
    }

    #[test]
    fn orbit_structure() {
        let z4 = Arc::new(FiniteGroup::cyclic(4).unwrap());
        let reg = GSpace::regular(z4);
        assert!(reg.is_transitive());
        assert_eq!(reg.orbits().len(), 1);

        // Z2 on 3 points: swap 0 and 1, fix 2
        let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let sp = GSpace::from_action(z2, 3, vec![vec![0, 1, 2], vec![1, 0, 2]]).unwrap();
        let orbits = sp.orbits();
        assert_eq!(orbits.len(), 2);
        assert!(!sp.is_transitive());
        assert_eq!(orbits[0].as_slice(), &[0, 1]);
        assert_eq!(orbits[1].as_slice(), &[2]);

        // trivial group on 2 points: two singleton orbits
        let t = Arc::new(FiniteGroup::trivial());
        let sp = GSpace::from_action(t, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(sp.orbits().len(), 2);
    }

    #[test]
    fn hom_checks() {
        let z12 = Arc::new(FiniteGroup::cyclic(12).unwrap());
        let z6 = Arc::new(FiniteGroup::cyclic(6).unwrap());
        let map: Vec<u32> = (0..12).map(|x| x % 6).collect();
        let h = GroupHom::finite(z12.clone(), z6.clone(), map).unwrap();
        assert!(h.is_surjective());
        assert_eq!(h.apply(7).unwrap(), 1);

        let bad: Vec<u32> = (0..12).map(|x| (x % 5) % 6).collect();
        assert!(GroupHom::finite(z12, z6, bad).is_err());

        let z1 = WindowedGroup::new(2, 100).unwrap();
        let z2 = WindowedGroup::new(1, 100).unwrap();
        let proj = GroupHom::linear(z1, z2, vec![vec![1, 0]]).unwrap();
        assert!(proj.is_surjective());
        let id = z1.encode(&[3, -4]).unwrap();
        assert_eq!(z2.decode(proj.apply(id).unwrap()), vec![3]);
        let dbl = GroupHom::linear(z1, z2, vec![vec![2, 0]]).unwrap();
        assert!(!dbl.is_surjective());
    }
}
