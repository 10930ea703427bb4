//! Finite groups as indexed Cayley tables.
//!
//! Elements are the integers `0..order` with the identity pinned at index 0.
//! Groups are immutable once built; every constructor goes through the same
//! full validation (Latin square, identity, associativity), so a
//! [`GroupTable`] in hand is always a group.
//!
//! For odd order the squaring map is a bijection and each element has a
//! unique square root, computed from the element order as `a^((k+1)/2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Constructor descriptor for a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupSpec {
    /// Cyclic group of order `n`; element `k` is `g^k`.
    Cyclic(usize),
    /// Direct product; element `(a, b)` has index `a * |B| + b`.
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// `normal ⋊ acting` for a cyclic acting group. `action` is the image of
    /// the acting generator as a permutation of the normal factor's elements.
    /// Element `(n, h)` has index `n * |H| + h`.
    Semidirect {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        action: Vec<usize>,
    },
    /// An explicit multiplication table, optionally with element labels.
    RawTable {
        mul: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Self {
        GroupSpec::Cyclic(n)
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn semidirect(normal: GroupSpec, acting: GroupSpec, action: Vec<usize>) -> Self {
        GroupSpec::Semidirect {
            normal: Box::new(normal),
            acting: Box::new(acting),
            action,
        }
    }
}

/// A validated finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    sqrt: Option<Vec<usize>>,
    names: Vec<String>,
}

/// Builds and validates the group described by `spec`.
pub fn build_group(spec: &GroupSpec) -> Result<GroupTable> {
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::NotAGroup("cyclic group of order 0".into()));
            }
            let mul = (0..*n)
                .map(|a| (0..*n).map(|b| (a + b) % n).collect())
                .collect();
            let names = (0..*n)
                .map(|k| match k {
                    0 => "e".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{k}"),
                })
                .collect();
            GroupTable::from_table(mul, Some(names))
        }
        GroupSpec::DirectProduct(a, b) => {
            let ga = build_group(a)?;
            let gb = build_group(b)?;
            let (na, nb) = (ga.order(), gb.order());
            let n = na * nb;
            let mut mul = vec![vec![0; n]; n];
            for (x, row) in mul.iter_mut().enumerate() {
                let (xa, xb) = (x / nb, x % nb);
                for (y, cell) in row.iter_mut().enumerate() {
                    let (ya, yb) = (y / nb, y % nb);
                    *cell = ga.mul(xa, ya) * nb + gb.mul(xb, yb);
                }
            }
            let names = (0..n)
                .map(|x| format!("({},{})", ga.name(x / nb), gb.name(x % nb)))
                .collect();
            GroupTable::from_table(mul, Some(names))
        }
        GroupSpec::Semidirect {
            normal,
            acting,
            action,
        } => {
            let gn = build_group(normal)?;
            let gh = build_group(acting)?;
            let powers = action_powers(&gn, &gh, action)?;
            let (nn, nh) = (gn.order(), gh.order());
            let n = nn * nh;
            let mut mul = vec![vec![0; n]; n];
            // (n1, h1)(n2, h2) = (n1 · φ_{h1}(n2), h1 h2)
            for (x, row) in mul.iter_mut().enumerate() {
                let (xn, xh) = (x / nh, x % nh);
                for (y, cell) in row.iter_mut().enumerate() {
                    let (yn, yh) = (y / nh, y % nh);
                    let twisted = powers[xh][yn];
                    *cell = gn.mul(xn, twisted) * nh + gh.mul(xh, yh);
                }
            }
            let names = (0..n)
                .map(|x| format!("({};{})", gn.name(x / nh), gh.name(x % nh)))
                .collect();
            GroupTable::from_table(mul, Some(names))
        }
        GroupSpec::RawTable { mul, names } => GroupTable::from_table(mul.clone(), names.clone()),
    }
}

/// For each element `h` of the cyclic acting group, the automorphism of the
/// normal factor it induces, as a permutation.
fn action_powers(normal: &GroupTable, acting: &GroupTable, action: &[usize]) -> Result<Vec<Vec<usize>>> {
    let nn = normal.order();
    if action.len() != nn {
        return Err(Error::InvalidAction(format!(
            "action has length {}, normal factor has order {nn}",
            action.len()
        )));
    }
    let mut seen = vec![false; nn];
    for &x in action {
        if x >= nn || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidAction("action is not a permutation".into()));
        }
    }
    for a in 0..nn {
        for b in 0..nn {
            if action[normal.mul(a, b)] != normal.mul(action[a], action[b]) {
                return Err(Error::InvalidAction(format!(
                    "action does not preserve the product of {a} and {b}"
                )));
            }
        }
    }
    let gen = acting
        .cyclic_generator()
        .ok_or_else(|| Error::InvalidAction("acting group is not cyclic".into()))?;

    let nh = acting.order();
    let mut powers = vec![Vec::new(); nh];
    let mut elem = acting.identity();
    let mut perm: Vec<usize> = (0..nn).collect();
    for _ in 0..nh {
        powers[elem] = perm.clone();
        perm = perm.iter().map(|&x| action[x]).collect();
        elem = acting.mul(gen, elem);
    }
    if perm.iter().enumerate().any(|(i, &x)| i != x) {
        return Err(Error::InvalidAction(format!(
            "order of the automorphism does not divide {nh}"
        )));
    }
    Ok(powers)
}

impl GroupTable {
    /// Validates a raw multiplication table. If the identity is not at index
    /// 0 the table is relabeled by swapping it there.
    pub fn from_table(mut mul: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::NotAGroup(format!(
                    "{} names for {n} elements",
                    names.len()
                )));
            }
        }
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {a} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("entry {bad} out of range in row {a}")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut names = names.unwrap_or_else(|| (0..n).map(|k| k.to_string()).collect());
        if e != 0 {
            let swap = |x: usize| match x {
                0 => e,
                x if x == e => 0,
                x => x,
            };
            let old = mul;
            mul = (0..n)
                .map(|a| (0..n).map(|b| swap(old[swap(a)][swap(b)])).collect())
                .collect();
            names.swap(0, e);
        }

        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut row_seen[mul[a][b]], true) {
                    return Err(Error::NotAGroup(format!("row {a} is not a permutation")));
                }
                if std::mem::replace(&mut col_seen[mul[b][a]], true) {
                    return Err(Error::NotAGroup(format!("column {a} is not a permutation")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a][b];
                for c in 0..n {
                    if mul[ab][c] != mul[a][mul[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inv: Vec<usize> = (0..n)
            .map(|a| (0..n).position(|b| mul[a][b] == 0).expect("latin square has an inverse"))
            .collect();

        let mut group = GroupTable {
            mul,
            inv,
            sqrt: None,
            names,
        };
        if n % 2 == 1 {
            let sqrt = (0..n)
                .map(|a| {
                    let k = group.element_order(a);
                    group.pow(a, k.div_ceil(2))
                })
                .collect();
            group.sqrt = Some(sqrt);
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn is_odd(&self) -> bool {
        self.sqrt.is_some()
    }

    /// The square-root table, or `EvenOrderGroup` when it does not exist.
    pub fn sqrt_table(&self) -> Result<&[usize]> {
        self.sqrt
            .as_deref()
            .ok_or(Error::EvenOrderGroup(self.order()))
    }

    /// Fails with `EvenOrderGroup` unless the order is odd.
    pub fn require_odd(&self) -> Result<()> {
        self.sqrt_table().map(|_| ())
    }

    /// The unique `s` with `s² = a`.
    pub fn sqrt(&self, a: usize) -> Result<usize> {
        let table = self.sqrt_table()?;
        table
            .get(a)
            .copied()
            .ok_or(Error::OutOfRange { index: a, bound: self.order() })
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.identity();
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn square(&self, a: usize) -> usize {
        self.mul(a, a)
    }

    /// Smallest `k ≥ 1` with `a^k = e`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g a g⁻¹`
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, ordered by smallest member. The
    /// identity class `[0]` always comes first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if assigned[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.conjugate(g, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                assigned[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Some element of maximal order `N`, if the group is cyclic. The lowest
    /// such index is returned.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.order()).find(|&a| self.element_order(a) == self.order())
    }

    /// Explicit isomorphism onto `C_N` (element `x` maps to the exponent `k`
    /// with `x = gen^k`), if one exists.
    pub fn isomorphism_to_cyclic(&self) -> Option<Vec<usize>> {
        let gen = self.cyclic_generator()?;
        let mut map = vec![0; self.order()];
        let mut x = self.identity();
        for (k, _) in (0..self.order()).enumerate() {
            map[x] = k;
            x = self.mul(x, gen);
        }
        Some(map)
    }

    /// Checks that `map` is a bijective homomorphism from `self` onto `other`.
    pub fn is_isomorphism(&self, other: &GroupTable, map: &[usize]) -> bool {
        let n = self.order();
        if other.order() != n || map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in map {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])))
    }

    pub fn check_associativity(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        })
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            (0..n).all(|b| {
                !std::mem::replace(&mut row[self.mul(a, b)], true)
                    && !std::mem::replace(&mut col[self.mul(b, a)], true)
            })
        })
    }
}

/// One exact identity of the square-root calculus and the number of
/// element tuples on which it failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub failures: usize,
}

/// Result of [`verify_sqrt_properties`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SqrtReport {
    pub checks: Vec<IdentityCheck>,
}

impl SqrtReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

/// Exhaustively checks the square-root identities in integer arithmetic.
pub fn verify_sqrt_properties(group: &GroupTable) -> Result<SqrtReport> {
    let sqrt = group.sqrt_table()?;
    let n = group.order();
    let g = group;
    let count = |f: &dyn Fn(usize) -> bool| (0..n).filter(|&a| !f(a)).count();

    let mut checks = Vec::new();
    checks.push(IdentityCheck {
        name: "sqrt squares back",
        failures: count(&|a| g.square(sqrt[a]) == a),
    });

    let mut squares: Vec<usize> = (0..n).map(|a| g.square(a)).collect();
    squares.sort_unstable();
    let mut roots = sqrt.to_vec();
    roots.sort_unstable();
    let bijective = |v: &[usize]| v.iter().enumerate().filter(|(i, &x)| *i != x).count();
    checks.push(IdentityCheck {
        name: "squaring and sqrt are bijections",
        failures: bijective(&squares) + bijective(&roots),
    });
    checks.push(IdentityCheck {
        name: "inverse of sqrt is sqrt of inverse",
        failures: count(&|a| g.inv(sqrt[a]) == sqrt[g.inv(a)]),
    });
    checks.push(IdentityCheck {
        name: "element commutes with its sqrt",
        failures: count(&|a| g.mul(a, sqrt[a]) == g.mul(sqrt[a], a)),
    });
    checks.push(IdentityCheck {
        name: "inverse times sqrt is sqrt of inverse",
        failures: count(&|a| g.mul(g.inv(a), sqrt[a]) == sqrt[g.inv(a)]),
    });
    let mut conj_failures = 0;
    for a in 0..n {
        for b in 0..n {
            if sqrt[g.conjugate(a, b)] != g.conjugate(a, sqrt[b]) {
                conj_failures += 1;
            }
        }
    }
    checks.push(IdentityCheck {
        name: "sqrt commutes with conjugation",
        failures: conj_failures,
    });

    // a = g'⁻¹ g, b = g' g  ⇔  g' = √(b a⁻¹), g = √(a b⁻¹) b = √(b a⁻¹) a
    let mut left_failures = 0;
    let mut left_hits = vec![0usize; n * n];
    // a = g g'⁻¹, b = g g'  ⇔  g' = √(a⁻¹ b), g = b √(b⁻¹ a) = a √(a⁻¹ b)
    let mut right_failures = 0;
    let mut right_hits = vec![0usize; n * n];
    for x in 0..n {
        for xp in 0..n {
            let a = g.mul(g.inv(xp), x);
            let b = g.mul(xp, x);
            left_hits[a * n + b] += 1;
            let gp = sqrt[g.mul(b, g.inv(a))];
            let g1 = g.mul(sqrt[g.mul(a, g.inv(b))], b);
            let g2 = g.mul(sqrt[g.mul(b, g.inv(a))], a);
            if gp != xp || g1 != x || g2 != x {
                left_failures += 1;
            }

            let a = g.mul(x, g.inv(xp));
            let b = g.mul(x, xp);
            right_hits[a * n + b] += 1;
            let gp = sqrt[g.mul(g.inv(a), b)];
            let g1 = g.mul(b, sqrt[g.mul(g.inv(b), a)]);
            let g2 = g.mul(a, sqrt[g.mul(g.inv(a), b)]);
            if gp != xp || g1 != x || g2 != x {
                right_failures += 1;
            }
        }
    }
    checks.push(IdentityCheck {
        name: "left change of variables inverts uniquely",
        failures: left_failures + left_hits.iter().filter(|&&h| h != 1).count(),
    });
    checks.push(IdentityCheck {
        name: "right change of variables inverts uniquely",
        failures: right_failures + right_hits.iter().filter(|&&h| h != 1).count(),
    });

    Ok(SqrtReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f21() -> GroupTable {
        build_group(&GroupSpec::semidirect(
            GroupSpec::cyclic(7),
            GroupSpec::cyclic(3),
            vec![0, 2, 4, 6, 1, 3, 5],
        ))
        .unwrap()
    }

    fn heisenberg27() -> GroupTable {
        let action = (0..9).map(|i| ((i / 3 + i % 3) % 3) * 3 + i % 3).collect();
        build_group(&GroupSpec::semidirect(
            GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(3)),
            GroupSpec::cyclic(3),
            action,
        ))
        .unwrap()
    }

    fn brute_sqrt(g: &GroupTable, a: usize) -> Vec<usize> {
        (0..g.order()).filter(|&s| g.square(s) == a).collect()
    }

    #[test]
    fn trivial_group() {
        let g = build_group(&GroupSpec::cyclic(1)).unwrap();
        assert_eq!(g.table(), &[vec![0]]);
        assert_eq!(g.sqrt(0).unwrap(), 0);
        assert!(verify_sqrt_properties(&g).unwrap().all_pass());
    }

    #[test]
    fn cyclic_five() {
        let g = build_group(&GroupSpec::cyclic(5)).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(g.mul(a, b), (a + b) % 5);
            }
        }
        assert_eq!(g.sqrt(1).unwrap(), 3);
        assert_eq!(g.conjugacy_classes().len(), 5);
    }

    #[test]
    fn cyclic_sqrt_matches_closed_form() {
        for n in [3usize, 5, 7, 9, 15] {
            let g = build_group(&GroupSpec::cyclic(n)).unwrap();
            for k in 0..n {
                let expect = if k % 2 == 1 { (k + n) / 2 } else { k / 2 };
                assert_eq!(g.sqrt(k).unwrap(), expect, "C{n}, g^{k}");
            }
        }
    }

    #[test]
    fn f21_is_nonabelian_group() {
        let g = f21();
        assert_eq!(g.order(), 21);
        assert!(g.check_associativity());
        assert!(g.is_latin_square());
        assert!(!g.is_abelian());
        let witness = (0..21)
            .flat_map(|a| (0..21).map(move |b| (a, b)))
            .find(|&(a, b)| g.mul(a, b) != g.mul(b, a));
        assert!(witness.is_some());
    }

    #[test]
    fn f21_sqrt_of_order_seven_element() {
        let g = f21();
        for a in (0..21).filter(|&a| g.element_order(a) == 7) {
            let s = g.sqrt(a).unwrap();
            assert_eq!(s, g.pow(a, 4));
            assert_eq!(brute_sqrt(&g, a), vec![s]);
        }
    }

    #[test]
    fn sqrt_agrees_with_exhaustive_search() {
        for g in [f21(), heisenberg27(), build_group(&GroupSpec::cyclic(9)).unwrap()] {
            for a in 0..g.order() {
                assert_eq!(brute_sqrt(&g, a), vec![g.sqrt(a).unwrap()]);
            }
        }
    }

    #[test]
    fn class_structure() {
        let mut sizes: Vec<usize> = f21().conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 3, 7, 7]);

        let h = heisenberg27();
        let classes = h.conjugacy_classes();
        assert_eq!(classes.len(), 11);
        assert_eq!(classes.iter().filter(|c| c.len() == 1).count(), 3);
        assert_eq!(classes.iter().filter(|c| c.len() == 3).count(), 8);
        assert_eq!(classes[0], vec![0]);
        for g in [f21(), h] {
            let classes = g.conjugacy_classes();
            assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
            assert!(classes.iter().all(|c| g.order() % c.len() == 0));
        }
    }

    #[test]
    fn sqrt_identities_hold() {
        for g in [
            build_group(&GroupSpec::cyclic(3)).unwrap(),
            f21(),
            heisenberg27(),
        ] {
            let report = verify_sqrt_properties(&g).unwrap();
            assert!(report.all_pass(), "{report:?}");
        }
    }

    #[test]
    fn even_order_has_no_sqrt() {
        for n in [2, 4, 6] {
            let g = build_group(&GroupSpec::cyclic(n)).unwrap();
            assert_eq!(g.sqrt(0), Err(Error::EvenOrderGroup(n)));
            assert_eq!(verify_sqrt_properties(&g), Err(Error::EvenOrderGroup(n)));
        }
    }

    #[test]
    fn cyclic_vs_product_isomorphism() {
        let c15 = build_group(&GroupSpec::cyclic(15)).unwrap();
        let c3c5 = build_group(&GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(5))).unwrap();
        assert!(c3c5.is_abelian());
        let map = c3c5.isomorphism_to_cyclic().unwrap();
        assert!(c3c5.is_isomorphism(&c15, &map));

        let c3c3 = build_group(&GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(3))).unwrap();
        assert!(c3c3.isomorphism_to_cyclic().is_none());
        assert!((0..9).all(|a| c3c3.element_order(a) != 9));
    }

    #[test]
    fn raw_table_errors() {
        let bad = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(matches!(GroupTable::from_table(bad, None), Err(Error::NotAGroup(_))));
        let out_of_range = vec![vec![0, 5], vec![1, 0]];
        assert!(matches!(GroupTable::from_table(out_of_range, None), Err(Error::NotAGroup(_))));
        // A Latin square with identity that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(GroupTable::from_table(loop5, None), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn raw_table_identity_is_moved_to_zero() {
        // C3 with identity labeled 2
        let mul = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let names = vec!["a".into(), "b".into(), "id".into()];
        let g = GroupTable::from_table(mul, Some(names)).unwrap();
        assert_eq!(g.name(0), "id");
        assert!((0..3).all(|a| g.mul(0, a) == a));
    }

    #[test]
    fn invalid_actions() {
        let non_auto = GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), vec![0, 2, 1, 3, 4, 5, 6]);
        assert!(matches!(build_group(&non_auto), Err(Error::InvalidAction(_))));
        // x -> 3x has order 6 mod 7, which does not divide 3
        let wrong_order = GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), vec![0, 3, 6, 2, 5, 1, 4]);
        assert!(matches!(build_group(&wrong_order), Err(Error::InvalidAction(_))));
        let short = GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), vec![0, 1]);
        assert!(matches!(build_group(&short), Err(Error::InvalidAction(_))));
    }
}
