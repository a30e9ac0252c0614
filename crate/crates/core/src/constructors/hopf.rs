//! Hopf group coalgebras without antipode, assembled on the direct sum of
//! their components.

use std::collections::BTreeMap;

use super::bialgebra::{from_bialgebra, Bialgebra, BialgebraVerdict};
use super::fincat::FinCat;
use crate::context::Object;
use crate::error::{Error, Result};
use crate::linalg::{permutation_map, ExactMatrix};

/// One algebra `A_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub carrier: Object,
    /// `A_g ⊗ A_g → A_g`.
    pub mult: ExactMatrix,
    /// `I → A_g`.
    pub unit: ExactMatrix,
}

/// A finite group `G`, algebras `A_g`, maps `Δ_{g,h}: A_{gh} → A_g ⊗ A_h` and a
/// counit `ε: A_e → I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfGroupCoalgebraData {
    pub elements: Vec<String>,
    /// `table[g][h] = gh`.
    pub table: Vec<Vec<usize>>,
    pub components: Vec<Component>,
    pub coproducts: BTreeMap<(usize, usize), ExactMatrix>,
    pub counit: ExactMatrix,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidComponentData(msg.into())
}

impl HopfGroupCoalgebraData {
    /// Every `A_g` is the ground field and every `Δ_{g,h}` is `1`.
    pub fn trivial(elements: &[&str], table: &[Vec<usize>]) -> Self {
        let one = ExactMatrix::identity(1);
        let n = elements.len();
        let component =
            Component { carrier: Object::from_atoms(&["1"]).expect("one label"), mult: one.clone(), unit: one.clone() };
        HopfGroupCoalgebraData {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            table: table.to_vec(),
            components: vec![component; n],
            coproducts: (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).map(|gh| (gh, one.clone())).collect(),
            counit: one,
        }
    }

    fn identity(&self) -> Option<usize> {
        let n = self.elements.len();
        (0..n).find(|&e| (0..n).all(|a| self.table[e][a] == a && self.table[a][e] == a))
    }

    fn dim(&self, g: usize) -> usize {
        self.components[g].carrier.dim()
    }

    fn name(&self, g: usize) -> &str {
        &self.elements[g]
    }

    fn coproduct(&self, g: usize, h: usize) -> &ExactMatrix {
        &self.coproducts[&(g, h)]
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.elements.len();
        if n == 0 || self.table.len() != n || self.table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(bad("the group table must be a square table over the elements"));
        }
        let e = self.identity().ok_or_else(|| bad("the group has no identity element"))?;
        for (a, b, c) in triples(n) {
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                return Err(bad("the group multiplication is not associative"));
            }
        }
        if (0..n).any(|a| !(0..n).any(|b| self.table[a][b] == e)) {
            return Err(bad("some element has no inverse"));
        }
        if self.components.len() != n {
            return Err(bad("there must be one component per group element"));
        }
        for (g, c) in self.components.iter().enumerate() {
            let d = c.carrier.dim();
            if (c.mult.rows(), c.mult.cols()) != (d, d * d) || (c.unit.rows(), c.unit.cols()) != (d, 1) {
                return Err(bad(format!("component {} has structure maps of the wrong shape", self.name(g))));
            }
            let one = ExactMatrix::identity(d);
            let m = &c.mult;
            if m.mul(&m.kron(&one)) != m.mul(&one.kron(m)) {
                return Err(bad(format!("component {} is not associative", self.name(g))));
            }
            if m.mul(&c.unit.kron(&one)) != one || m.mul(&one.kron(&c.unit)) != one {
                return Err(bad(format!("component {} is not unital", self.name(g))));
            }
        }
        if (self.counit.rows(), self.counit.cols()) != (1, self.dim(e)) {
            return Err(bad("the counit must be a map from the identity component to the ground field"));
        }
        for g in 0..n {
            for h in 0..n {
                let gh = self.table[g][h];
                let delta = self
                    .coproducts
                    .get(&(g, h))
                    .ok_or_else(|| bad(format!("missing coproduct for ({}, {})", self.name(g), self.name(h))))?;
                if (delta.rows(), delta.cols()) != (self.dim(g) * self.dim(h), self.dim(gh)) {
                    return Err(bad(format!("coproduct ({}, {}) has the wrong shape", self.name(g), self.name(h))));
                }
                self.check_multiplicative(g, h)?;
            }
        }
        for (g, h, k) in triples(n) {
            let (gh, hk) = (self.table[g][h], self.table[h][k]);
            let left = self.coproduct(g, h).kron(&ExactMatrix::identity(self.dim(k))).mul(self.coproduct(gh, k));
            let right = ExactMatrix::identity(self.dim(g)).kron(self.coproduct(h, k)).mul(self.coproduct(g, hk));
            if left != right {
                return Err(bad(format!(
                    "coassociativity fails for ({}, {}, {})",
                    self.name(g),
                    self.name(h),
                    self.name(k)
                )));
            }
        }
        for g in 0..n {
            let one = ExactMatrix::identity(self.dim(g));
            if self.counit.kron(&one).mul(self.coproduct(e, g)) != one
                || one.kron(&self.counit).mul(self.coproduct(g, e)) != one
            {
                return Err(bad(format!("counit law fails for component {}", self.name(g))));
            }
        }
        let ce = &self.components[e];
        if self.counit.mul(&ce.mult) != self.counit.kron(&self.counit)
            || self.counit.mul(&ce.unit) != ExactMatrix::identity(1)
        {
            return Err(bad("the counit is not an algebra map"));
        }
        Ok(())
    }

    fn check_multiplicative(&self, g: usize, h: usize) -> Result<()> {
        let gh = self.table[g][h];
        let (a, b, c) = (&self.components[g], &self.components[h], &self.components[gh]);
        let delta = self.coproduct(g, h);
        let (dg, dh) = (self.dim(g), self.dim(h));
        let swap = permutation_map(&[0, 2, 1, 3], &[dg, dh, dg, dh])?;
        let lhs = delta.mul(&c.mult);
        let rhs = a.mult.kron(&b.mult).mul(&swap).mul(&delta.kron(delta));
        if lhs != rhs || delta.mul(&c.unit) != a.unit.kron(&b.unit) {
            return Err(bad(format!("coproduct ({}, {}) is not an algebra map", self.name(g), self.name(h))));
        }
        Ok(())
    }

    /// `⊕ A_g` with blockwise algebra structure, `Δ = Σ Δ_{g,h}` and `ε` on `A_e`.
    pub fn direct_sum(&self) -> Result<Bialgebra> {
        self.validate()?;
        let n = self.elements.len();
        let e = self.identity().expect("validated");
        let offsets: Vec<usize> = (0..n)
            .scan(0, |acc, g| {
                let start = *acc;
                *acc += self.dim(g);
                Some(start)
            })
            .collect();
        let total: usize = (0..n).map(|g| self.dim(g)).sum();
        let labels: Vec<String> = (0..n)
            .flat_map(|g| self.components[g].carrier.labels().into_iter().map(move |l| format!("{}:{l}", self.name(g))))
            .collect();
        let carrier = Object::from_atoms(&labels)?;
        let mut mult = Vec::new();
        let mut unit = Vec::new();
        for (g, c) in self.components.iter().enumerate() {
            let (o, d) = (offsets[g], self.dim(g));
            for col in 0..d * d {
                for (r, v) in c.mult.column_entries(col) {
                    mult.push((o + r, (o + col / d) * total + o + col % d, v.clone()));
                }
            }
            unit.extend(c.unit.column_entries(0).iter().map(|(r, v)| (o + r, 0, v.clone())));
        }
        let mut comult = Vec::new();
        for ((g, h), delta) in &self.coproducts {
            let (og, oh, ok) = (offsets[*g], offsets[*h], offsets[self.table[*g][*h]]);
            let dh = self.dim(*h);
            for col in 0..delta.cols() {
                for (r, v) in delta.column_entries(col) {
                    comult.push(((og + r / dh) * total + oh + r % dh, ok + col, v.clone()));
                }
            }
        }
        let counit = (0..self.dim(e)).map(|x| (0, offsets[e] + x, self.counit.get(0, x).clone()));
        Bialgebra::new(
            carrier,
            ExactMatrix::from_triples(total, total * total, mult),
            ExactMatrix::from_triples(total, 1, unit),
            ExactMatrix::from_triples(total * total, total, comult),
            ExactMatrix::from_triples(1, total, counit),
        )
    }

    /// The group as a one-object category.
    pub fn group(&self) -> Result<FinCat> {
        let names: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        FinCat::from_monoid("*", &names, &self.table)
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

/// The quantum category of a Hopf group coalgebra together with its group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfVerdict {
    pub bialgebra: Bialgebra,
    pub verdict: BialgebraVerdict,
    pub group: FinCat,
}

/// Validates the data, assembles the direct sum and decides the axioms.
pub fn from_hopf_group_coalgebra(h: &HopfGroupCoalgebraData) -> Result<HopfVerdict> {
    let bialgebra = h.direct_sum()?;
    let verdict = from_bialgebra(&bialgebra);
    Ok(HopfVerdict { group: h.group()?, bialgebra, verdict })
}
