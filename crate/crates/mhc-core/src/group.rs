//! Finite group multiplication tables and their characters (one-dimensional
//! representations), with exact root-of-unity values.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::scalar::{CycloField, CycloScalar};

/// Hard cap on group order; keeps every all-pairs/all-triples verification
/// loop in this crate comfortably cheap.
pub const MAX_GROUP_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    TooLarge { order: usize },
    BadShape,
    NotClosed { row: usize, col: usize },
    NoIdentity,
    NoInverse { element: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    UnknownGroup { spec: String },
    WrongLength { expected: usize, got: usize },
    WrongField { expected: u32, got: u32 },
    NotRootOfUnity { element: usize },
    NotMultiplicative { a: usize, b: usize },
    InconsistentExponents,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::TooLarge { order } => {
                write!(f, "group order {order} exceeds the cap of {MAX_GROUP_ORDER}")
            }
            GroupError::BadShape => write!(f, "names/table sizes are inconsistent"),
            GroupError::NotClosed { row, col } => {
                write!(f, "table entry at ({row}, {col}) is out of range")
            }
            GroupError::NoIdentity => write!(f, "table has no two-sided identity"),
            GroupError::NoInverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "associativity fails on the triple ({a}, {b}, {c})")
            }
            GroupError::UnknownGroup { spec } => write!(f, "unknown group spec '{spec}'"),
            GroupError::WrongLength { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
            GroupError::WrongField { expected, got } => {
                write!(f, "values must live in the order-{expected} field, got order {got}")
            }
            GroupError::NotRootOfUnity { element } => {
                write!(f, "value at element {element} is not a root of unity of the group exponent")
            }
            GroupError::NotMultiplicative { a, b } => {
                write!(f, "multiplicativity fails on the pair ({a}, {b})")
            }
            GroupError::InconsistentExponents => {
                write!(f, "generator exponents do not extend to a character")
            }
        }
    }
}

impl core::error::Error for GroupError {}

/// A finite group as a validated multiplication table. Elements are indices
/// `0..order`; `names` are only for display and parsing.
#[derive(Debug)]
pub struct GroupTable {
    names: Vec<String>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    exponent: u32,
}

impl GroupTable {
    /// Validate a full multiplication table: closure, identity, inverses,
    /// associativity, and the order cap.
    pub fn from_parts(names: Vec<String>, mul: Vec<usize>) -> Result<Arc<Self>, GroupError> {
        let n = names.len();
        if n == 0 || mul.len() != n * n {
            return Err(GroupError::BadShape);
        }
        if n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge { order: n });
        }
        for r in 0..n {
            for c in 0..n {
                if mul[r * n + c] >= n {
                    return Err(GroupError::NotClosed { row: r, col: c });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b];
                for c in 0..n {
                    if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e * n + g] == g && mul[g * n + e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            inv[g] = (0..n)
                .find(|&h| mul[g * n + h] == identity && mul[h * n + g] == identity)
                .ok_or(GroupError::NoInverse { element: g })?;
        }
        Ok(Arc::new(Self::finish(names, mul, inv, identity)))
    }

    /// Build without any validation. Exists so diagnostics can be exercised
    /// on deliberately corrupted tables; everything downstream treats the
    /// result as untrusted.
    pub fn from_raw_parts(
        names: Vec<String>,
        mul: Vec<usize>,
        inv: Vec<usize>,
        identity: usize,
    ) -> Arc<Self> {
        Arc::new(Self::finish(names, mul, inv, identity))
    }

    fn finish(names: Vec<String>, mul: Vec<usize>, inv: Vec<usize>, identity: usize) -> Self {
        let n = names.len();
        let order_of = |g: usize| -> u32 {
            let mut acc = g;
            for k in 1..=n {
                if acc == identity {
                    return k as u32;
                }
                acc = mul[acc * n + g];
            }
            n as u32 // unreachable for a genuine group; fallback for raw tables
        };
        let mut exponent: u32 = 1;
        for g in 0..n {
            exponent = exponent.lcm(&order_of(g));
        }
        let mut table = GroupTable {
            names,
            mul,
            inv,
            identity,
            generators: Vec::new(),
            exponent,
        };
        let mut reached = table.closure(&[]);
        for g in 0..n {
            if !reached.contains(&g) {
                table.generators.push(g);
                reached = table.closure(&table.generators);
            }
        }
        table
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Smallest N with g^N = e for every g.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Greedily chosen generating set (smallest element indices first).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_order(&self, g: usize) -> u32 {
        let mut acc = g;
        for k in 1..=self.order() {
            if acc == self.identity {
                return k as u32;
            }
            acc = self.mul(acc, g);
        }
        self.order() as u32
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, g: usize) -> bool {
        (0..self.order()).all(|h| self.mul(g, h) == self.mul(h, g))
    }

    /// Subgroup generated by `seed`, as a sorted element list (always
    /// contains the identity).
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut member = vec![false; n];
        member[self.identity] = true;
        for &s in seed {
            member[s] = true;
        }
        loop {
            let mut added = false;
            let current: Vec<usize> = (0..n).filter(|&g| member[g]).collect();
            for &a in &current {
                for &b in &current {
                    let ab = self.mul(a, b);
                    if !member[ab] {
                        member[ab] = true;
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        (0..n).filter(|&g| member[g]).collect()
    }

    /// The subgroup generated by all commutators a⁻¹b⁻¹ab.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut seed = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !seed.contains(&c) {
                    seed.push(c);
                }
            }
        }
        self.closure(&seed)
    }

    /// ℤ/n with elements named "0" … "n-1".
    pub fn cyclic(n: usize) -> Result<Arc<Self>, GroupError> {
        if n == 0 {
            return Err(GroupError::BadShape);
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        let mut mul = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = (a + b) % n;
            }
        }
        Self::from_parts(names, mul)
    }

    /// Direct product with elements named "(a,b)".
    pub fn product(a: &Arc<Self>, b: &Arc<Self>) -> Result<Arc<Self>, GroupError> {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        let mut names = Vec::with_capacity(n);
        for x in 0..na {
            for y in 0..nb {
                names.push(format!("({},{})", a.name(x), b.name(y)));
            }
        }
        let mut mul = vec![0usize; n * n];
        for x1 in 0..na {
            for y1 in 0..nb {
                for x2 in 0..na {
                    for y2 in 0..nb {
                        let i = x1 * nb + y1;
                        let j = x2 * nb + y2;
                        mul[i * n + j] = a.mul(x1, x2) * nb + b.mul(y1, y2);
                    }
                }
            }
        }
        Self::from_parts(names, mul)
    }

    /// Dihedral group of order 2n: rotations r^k and reflections r^k·s, with
    /// s·r = r⁻¹·s.
    pub fn dihedral(n: usize) -> Result<Arc<Self>, GroupError> {
        if n < 2 {
            return Err(GroupError::BadShape);
        }
        let order = 2 * n;
        let mut names = Vec::with_capacity(order);
        for k in 0..n {
            names.push(match k {
                0 => "e".to_string(),
                1 => "r".to_string(),
                _ => format!("r{k}"),
            });
        }
        for k in 0..n {
            names.push(match k {
                0 => "s".to_string(),
                1 => "rs".to_string(),
                _ => format!("r{k}s"),
            });
        }
        // index = k + n·t encodes r^k s^t
        let idx = |k: usize, t: usize| k % n + n * (t % 2);
        let mut mul = vec![0usize; order * order];
        for k in 0..n {
            for t in 0..2 {
                for m in 0..n {
                    for u in 0..2 {
                        // (r^k s^t)(r^m s^u) = r^{k ± m} s^{t+u}
                        let shift = if t == 0 { m } else { n - m };
                        mul[idx(k, t) * order + idx(m, u)] = idx((k + shift) % n, t + u);
                    }
                }
            }
        }
        Self::from_parts(names, mul)
    }

    /// S₃ presented as the dihedral group of the triangle.
    pub fn symmetric3() -> Arc<Self> {
        Self::dihedral(3).expect("order 6 is within the cap")
    }

    /// Symmetries of the square, order 8.
    pub fn dihedral4() -> Arc<Self> {
        Self::dihedral(4).expect("order 8 is within the cap")
    }

    /// Quaternion group {±1, ±i, ±j, ±k}.
    pub fn quaternion8() -> Arc<Self> {
        let units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
        let names: Vec<String> = units.iter().map(|s| s.to_string()).collect();
        // axis 0 = 1, 1 = i, 2 = j, 3 = k; index = 2·axis + (sign < 0)
        // axis multiplication with sign: (s, axis)
        let axis_mul = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) => (false, x),
                (x, 0) => (false, x),
                (1, 1) | (2, 2) | (3, 3) => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let n = 8;
        let mut mul = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let (sa, xa) = (a % 2 == 1, a / 2);
                let (sb, xb) = (b % 2 == 1, b / 2);
                let (sm, xm) = axis_mul(xa, xb);
                let neg = (sa ^ sb) ^ sm;
                mul[a * n + b] = 2 * xm + usize::from(neg);
            }
        }
        Self::from_parts(names, mul).expect("quaternion table is a group")
    }

    /// Parse a group spec: "Z<n>" (optionally chained with "x", e.g.
    /// "Z2xZ4"), "S3", "D4", "Q8".
    pub fn named(spec: &str) -> Result<Arc<Self>, GroupError> {
        let spec = spec.trim();
        match spec {
            "S3" => return Ok(Self::symmetric3()),
            "D4" => return Ok(Self::dihedral4()),
            "Q8" => return Ok(Self::quaternion8()),
            _ => {}
        }
        let unknown = || GroupError::UnknownGroup {
            spec: spec.to_string(),
        };
        let mut acc: Option<Arc<Self>> = None;
        for part in spec.split('x') {
            let digits = part.strip_prefix('Z').ok_or_else(unknown)?;
            let n: usize = digits.parse().map_err(|_| unknown())?;
            let g = Self::cyclic(n)?;
            acc = Some(match acc {
                None => g,
                Some(prev) => Self::product(&prev, &g)?,
            });
        }
        acc.ok_or_else(unknown)
    }
}

/// A character: a group homomorphism into the roots of unity of ℚ(ζ_N),
/// N the group exponent. Stored both as exact scalars and as the exponents
/// k(g) with χ(g) = ζ_N^{k(g)}.
#[derive(Debug, Clone)]
pub struct Character {
    group: Arc<GroupTable>,
    field: Arc<CycloField>,
    exponents: Vec<u32>,
    values: Vec<CycloScalar>,
}

impl Character {
    pub fn trivial(group: &Arc<GroupTable>) -> Self {
        let field = CycloField::new(group.exponent());
        let values = vec![field.one(); group.order()];
        Character {
            group: Arc::clone(group),
            field,
            exponents: vec![0; group.order()],
            values,
        }
    }

    /// Validate an arbitrary value vector as a character.
    pub fn try_new(
        group: &Arc<GroupTable>,
        values: Vec<CycloScalar>,
    ) -> Result<Self, GroupError> {
        let n = group.order();
        if values.len() != n {
            return Err(GroupError::WrongLength {
                expected: n,
                got: values.len(),
            });
        }
        let modulus = group.exponent();
        let field = CycloField::new(modulus);
        let mut exponents = vec![0u32; n];
        for g in 0..n {
            if values[g].order() != modulus {
                return Err(GroupError::WrongField {
                    expected: modulus,
                    got: values[g].order(),
                });
            }
            exponents[g] = (0..modulus)
                .find(|&k| values[g] == field.root_power(k as i64))
                .ok_or(GroupError::NotRootOfUnity { element: g })?;
        }
        verify_exponents(group, &exponents)?;
        Ok(Character {
            group: Arc::clone(group),
            field,
            exponents,
            values,
        })
    }

    /// Build a character from exponents assigned to the group's generator
    /// list: generator i maps to ζ_N^{exps[i]}. Fails when the assignment
    /// does not respect the relations.
    pub fn from_generator_exponents(
        group: &Arc<GroupTable>,
        exps: &[u32],
    ) -> Result<Self, GroupError> {
        let gens = group.generators();
        if exps.len() != gens.len() {
            return Err(GroupError::WrongLength {
                expected: gens.len(),
                got: exps.len(),
            });
        }
        let n = group.order();
        let modulus = group.exponent();
        let mut known: Vec<Option<u32>> = vec![None; n];
        known[group.identity()] = Some(0);
        // Propagate by right multiplication with generators until stable.
        loop {
            let mut changed = false;
            for g in 0..n {
                let Some(base) = known[g] else { continue };
                for (gi, &gen) in gens.iter().enumerate() {
                    let target = group.mul(g, gen);
                    let value = (base + exps[gi] % modulus) % modulus;
                    match known[target] {
                        None => {
                            known[target] = Some(value);
                            changed = true;
                        }
                        Some(existing) => {
                            if existing != value {
                                return Err(GroupError::InconsistentExponents);
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let exponents: Vec<u32> = known
            .into_iter()
            .map(|k| k.ok_or(GroupError::InconsistentExponents))
            .collect::<Result<_, _>>()?;
        verify_exponents(group, &exponents).map_err(|_| GroupError::InconsistentExponents)?;
        Ok(Self::from_exponents_unchecked(group, exponents))
    }

    fn from_exponents_unchecked(group: &Arc<GroupTable>, exponents: Vec<u32>) -> Self {
        let field = CycloField::new(group.exponent());
        let values = exponents
            .iter()
            .map(|&k| field.root_power(k as i64))
            .collect();
        Character {
            group: Arc::clone(group),
            field,
            exponents,
            values,
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn value(&self, g: usize) -> &CycloScalar {
        &self.values[g]
    }

    pub fn values(&self) -> &[CycloScalar] {
        &self.values
    }

    /// k(g) with χ(g) = ζ_N^{k(g)}.
    pub fn root_exponent(&self, g: usize) -> u32 {
        self.exponents[g]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn generator_exponents(&self) -> Vec<u32> {
        self.group
            .generators()
            .iter()
            .map(|&g| self.exponents[g])
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }
}

fn verify_exponents(group: &GroupTable, exponents: &[u32]) -> Result<(), GroupError> {
    let n = group.order();
    let modulus = group.exponent();
    if !exponents[group.identity()].is_multiple_of(modulus) {
        return Err(GroupError::NotMultiplicative {
            a: group.identity(),
            b: group.identity(),
        });
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = exponents[group.mul(a, b)] % modulus;
            let rhs = (exponents[a] + exponents[b]) % modulus;
            if lhs != rhs {
                return Err(GroupError::NotMultiplicative { a, b });
            }
        }
    }
    Ok(())
}

/// All characters of the group, in a deterministic order: sorted by the full
/// exponent vector, so the trivial character always comes first.
pub fn characters(group: &Arc<GroupTable>) -> Vec<Character> {
    let n = group.order();
    let modulus = group.exponent();
    // Characters factor through the quotient by the commutator subgroup.
    let commutators = group.commutator_subgroup();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &c in &commutators {
            coset_of[group.mul(g, c)] = id;
        }
    }
    let q = reps.len();
    let qmul = |a: usize, b: usize| coset_of[group.mul(reps[a], reps[b])];
    let qid = coset_of[group.identity()];

    // Depth-first extension over the abelian quotient: pick the smallest
    // unassigned coset, find its relative order over the assigned subgroup,
    // and branch over every consistent root-of-unity exponent.
    let mut results: Vec<Vec<u32>> = Vec::new();
    let mut known: Vec<Option<u32>> = vec![None; q];
    known[qid] = Some(0);
    fn extend(
        qmul: &dyn Fn(usize, usize) -> usize,
        q: usize,
        modulus: u32,
        known: &[Option<u32>],
        results: &mut Vec<Vec<u32>>,
    ) {
        let Some(g) = (0..q).find(|&g| known[g].is_none()) else {
            results.push(known.iter().map(|k| k.unwrap()).collect());
            return;
        };
        // Smallest r ≥ 1 with g^r already assigned.
        let mut power = g;
        let mut r = 1u32;
        while known[power].is_none() {
            power = qmul(power, g);
            r += 1;
        }
        let target = known[power].unwrap();
        let assigned: Vec<usize> = (0..q).filter(|&h| known[h].is_some()).collect();
        for x in 0..modulus {
            if (r * x) % modulus != target {
                continue;
            }
            let mut next = known.to_vec();
            let mut ok = true;
            'fill: for &h in &assigned {
                let base = next[h].unwrap();
                let mut elem = h;
                for i in 1..r {
                    elem = qmul(elem, g);
                    let value = (base + i * x) % modulus;
                    match next[elem] {
                        None => next[elem] = Some(value),
                        Some(existing) => {
                            if existing != value {
                                ok = false;
                                break 'fill;
                            }
                        }
                    }
                }
            }
            if ok {
                extend(qmul, q, modulus, &next, results);
            }
        }
    }
    extend(&qmul, q, modulus, &known, &mut results);

    let mut lifted: Vec<Vec<u32>> = results
        .into_iter()
        .map(|qexp| (0..n).map(|g| qexp[coset_of[g]]).collect())
        .collect();
    lifted.sort();
    debug_assert_eq!(
        lifted.len() * commutators.len(),
        n,
        "character count must be the abelianization order"
    );
    lifted
        .into_iter()
        .map(|exps| {
            debug_assert!(verify_exponents(group, &exps).is_ok());
            Character::from_exponents_unchecked(group, exps)
        })
        .collect()
}
