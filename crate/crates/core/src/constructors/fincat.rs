//! Finite categories given by tables, and an enumerator of small ones.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};

/// A finite category. Composition `comp[(f, g)]` is "f then g" and is defined
/// exactly on pairs with `cod(f) = dom(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    pub objects: Vec<String>,
    pub morphisms: Vec<String>,
    pub dom: Vec<usize>,
    pub cod: Vec<usize>,
    pub ids: Vec<usize>,
    pub comp: BTreeMap<(usize, usize), usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCategory(msg.into())
}

impl FinCat {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<String>,
        dom: Vec<usize>,
        cod: Vec<usize>,
        ids: Vec<usize>,
        comp: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let cat = FinCat { objects, morphisms, dom, cod, ids, comp };
        cat.validate()?;
        Ok(cat)
    }

    /// A one-object category from a monoid multiplication table, `table[a][b] = a·b`.
    /// Composition "a then b" is `b·a`, so that the monoid is read as acting on the left.
    pub fn from_monoid(object: &str, elements: &[&str], table: &[Vec<usize>]) -> Result<Self> {
        let n = elements.len();
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| invalid("the monoid has no identity element"))?;
        let mut comp = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                comp.insert((a, b), table[b][a]);
            }
        }
        Self::new(
            vec![object.to_string()],
            elements.iter().map(|s| s.to_string()).collect(),
            vec![0; n],
            vec![0; n],
            vec![unit],
            comp,
        )
    }

    /// The cyclic group of order `n` with elements `g0 … g{n-1}`.
    pub fn cyclic_group(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|k| format!("g{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_monoid("*", &refs, &table).expect("cyclic groups are monoids")
    }

    /// The symmetric group on three letters, elements named by their images of `123`.
    pub fn symmetric_group_3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let names: Vec<String> =
            perms.iter().map(|p| p.iter().map(|&i| char::from(b'1' + i as u8)).collect()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        // (a·b)(i) = a(b(i))
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let ab = [a[b[0]], a[b[1]], a[b[2]]];
                        perms.iter().position(|p| *p == ab).expect("closed under composition")
                    })
                    .collect()
            })
            .collect();
        Self::from_monoid("*", &refs, &table).expect("S3 is a group")
    }

    /// The terminal category.
    pub fn terminal() -> Self {
        Self::discrete(&["*"])
    }

    pub fn discrete(objects: &[&str]) -> Self {
        let n = objects.len();
        Self::new(
            objects.iter().map(|s| s.to_string()).collect(),
            objects.iter().map(|s| format!("1_{s}")).collect(),
            (0..n).collect(),
            (0..n).collect(),
            (0..n).collect(),
            (0..n).map(|k| ((k, k), k)).collect(),
        )
        .expect("discrete categories are categories")
    }

    /// The walking arrow `0 → 1`.
    pub fn walking_arrow() -> Self {
        let comp = [((0, 0), 0), ((1, 1), 1), ((0, 2), 2), ((2, 1), 2)].into_iter().collect();
        Self::new(
            vec!["0".into(), "1".into()],
            vec!["1_0".into(), "1_1".into(), "a".into()],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![0, 1],
            comp,
        )
        .expect("the walking arrow is a category")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp.get(&(f, g)).copied()
    }

    /// All pairs `(f, g)` with `cod(f) = dom(g)`, in lexicographic order.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.morphisms.len();
        (0..n).flat_map(|f| (0..n).map(move |g| (f, g))).filter(|&(f, g)| self.cod[f] == self.dom[g]).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let (no, nm) = (self.objects.len(), self.morphisms.len());
        for (what, names) in [("object", &self.objects), ("morphism", &self.morphisms)] {
            let distinct: HashSet<&String> = names.iter().collect();
            if distinct.len() != names.len() {
                return Err(invalid(format!("duplicate {what} name")));
            }
        }
        if self.dom.len() != nm || self.cod.len() != nm || self.ids.len() != no {
            return Err(invalid("table lengths do not match the numbers of objects and morphisms"));
        }
        if self.dom.iter().chain(&self.cod).any(|&o| o >= no) || self.ids.iter().any(|&m| m >= nm) {
            return Err(invalid("table entry out of range"));
        }
        for (o, &i) in self.ids.iter().enumerate() {
            if self.dom[i] != o || self.cod[i] != o {
                return Err(invalid(format!("identity of {} is not an endomorphism of it", self.objects[o])));
            }
        }
        for (&(f, g), &h) in &self.comp {
            if f >= nm || g >= nm || h >= nm {
                return Err(invalid("composition entry out of range"));
            }
            if self.cod[f] != self.dom[g] {
                return Err(invalid(format!(
                    "composite of non-composable {} and {}",
                    self.morphisms[f], self.morphisms[g]
                )));
            }
            if self.dom[h] != self.dom[f] || self.cod[h] != self.cod[g] {
                return Err(invalid(format!(
                    "composite of {} then {} has the wrong endpoints",
                    self.morphisms[f], self.morphisms[g]
                )));
            }
        }
        let pairs = self.composable_pairs();
        if pairs.len() != self.comp.len() {
            return Err(invalid("composition is not defined on every composable pair"));
        }
        for f in 0..nm {
            let (a, b) = (self.ids[self.dom[f]], self.ids[self.cod[f]]);
            if self.compose(a, f) != Some(f) || self.compose(f, b) != Some(f) {
                return Err(invalid(format!("identity law fails at {}", self.morphisms[f])));
            }
        }
        for &(f, g) in &pairs {
            let fg = self.comp[&(f, g)];
            for h in (0..nm).filter(|&h| self.dom[h] == self.cod[g]) {
                if self.compose(fg, h) != self.compose(f, self.comp[&(g, h)]) {
                    return Err(invalid(format!(
                        "associativity fails at {}, {}, {}",
                        self.morphisms[f], self.morphisms[g], self.morphisms[h]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The product category with objects and morphisms named `(x,y)`.
    pub fn product(&self, other: &FinCat) -> FinCat {
        let pair = |a: &str, b: &str| format!("({a},{b})");
        let (no2, nm2) = (other.objects.len(), other.morphisms.len());
        let objects = self.objects.iter().flat_map(|a| other.objects.iter().map(move |b| pair(a, b))).collect();
        let morphisms = self.morphisms.iter().flat_map(|a| other.morphisms.iter().map(move |b| pair(a, b))).collect();
        let idx = |f: usize, g: usize| f * nm2 + g;
        let mut dom = Vec::new();
        let mut cod = Vec::new();
        for f in 0..self.morphisms.len() {
            for g in 0..nm2 {
                dom.push(self.dom[f] * no2 + other.dom[g]);
                cod.push(self.cod[f] * no2 + other.cod[g]);
            }
        }
        let ids = (0..self.objects.len())
            .flat_map(|x| (0..no2).map(move |y| (x, y)))
            .map(|(x, y)| idx(self.ids[x], other.ids[y]))
            .collect();
        let mut comp = BTreeMap::new();
        for (&(f1, f2), &f3) in &self.comp {
            for (&(g1, g2), &g3) in &other.comp {
                comp.insert((idx(f1, g1), idx(f2, g2)), idx(f3, g3));
            }
        }
        FinCat { objects, morphisms, dom, cod, ids, comp }
    }

    /// A canonical encoding: equal for isomorphic categories.
    pub fn canonical_form(&self) -> Vec<usize> {
        let no = self.objects.len();
        let mut best: Option<Vec<usize>> = None;
        for obj_perm in permutations(no) {
            // hom sets in the new object order, identities first
            let mut hom: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for f in 0..self.morphisms.len() {
                if self.ids[self.dom[f]] == f {
                    continue;
                }
                hom.entry((obj_perm[self.dom[f]], obj_perm[self.cod[f]])).or_default().push(f);
            }
            let keys: Vec<(usize, usize)> = hom.keys().copied().collect();
            let choices: Vec<Vec<Vec<usize>>> = keys
                .iter()
                .map(|k| {
                    permutations(hom[k].len()).into_iter().map(|p| p.iter().map(|&i| hom[k][i]).collect()).collect()
                })
                .collect();
            for_each_product(&choices, &mut |orders: &[&Vec<usize>]| {
                let mut relabel = vec![0; self.morphisms.len()];
                let mut order = Vec::new();
                let mut ids_by_new = vec![0; no];
                for o in 0..no {
                    ids_by_new[obj_perm[o]] = self.ids[o];
                }
                for (n, &f) in ids_by_new.iter().enumerate() {
                    relabel[f] = n;
                    order.push(f);
                }
                for fs in orders {
                    for &f in fs.iter() {
                        relabel[f] = order.len();
                        order.push(f);
                    }
                }
                let mut code = vec![no, self.morphisms.len()];
                for &f in &order {
                    code.push(obj_perm[self.dom[f]]);
                    code.push(obj_perm[self.cod[f]]);
                }
                for &f in &order {
                    for &g in &order {
                        code.push(self.compose(f, g).map_or(usize::MAX, |h| relabel[h]));
                    }
                }
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            });
        }
        best.unwrap_or_default()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn for_each_product<'a, T>(choices: &'a [Vec<T>], f: &mut dyn FnMut(&[&'a T])) {
    fn go<'a, T>(choices: &'a [Vec<T>], acc: &mut Vec<&'a T>, f: &mut dyn FnMut(&[&'a T])) {
        match choices.split_first() {
            None => f(acc),
            Some((first, rest)) => {
                for c in first {
                    acc.push(c);
                    go(rest, acc, f);
                    acc.pop();
                }
            }
        }
    }
    go(choices, &mut Vec::new(), f)
}

/// Every category with the given objects and the given numbers of
/// non-identity morphisms per hom set (`hom[x][y]`), including isomorphic copies.
pub fn categories_with_homs(hom: &[Vec<usize>]) -> Vec<FinCat> {
    let no = hom.len();
    let objects: Vec<String> = (0..no).map(|o| o.to_string()).collect();
    let mut morphisms: Vec<String> = (0..no).map(|o| format!("1_{o}")).collect();
    let mut dom: Vec<usize> = (0..no).collect();
    let mut cod: Vec<usize> = (0..no).collect();
    for (x, row) in hom.iter().enumerate() {
        for (y, &count) in row.iter().enumerate() {
            for _ in 0..count {
                morphisms.push(format!("f{}", morphisms.len() - no + 1));
                dom.push(x);
                cod.push(y);
            }
        }
    }
    let nm = morphisms.len();
    let ids: Vec<usize> = (0..no).collect();
    let mut base = BTreeMap::new();
    for f in 0..nm {
        base.insert((ids[dom[f]], f), f);
        base.insert((f, ids[cod[f]]), f);
    }
    let open: Vec<(usize, usize)> =
        (no..nm).flat_map(|f| (no..nm).map(move |g| (f, g))).filter(|&(f, g)| cod[f] == dom[g]).collect();
    let options: Vec<Vec<usize>> =
        open.iter().map(|&(f, g)| (0..nm).filter(|&h| dom[h] == dom[f] && cod[h] == cod[g]).collect()).collect();
    let template = FinCat { objects, morphisms, dom, cod, ids, comp: base };
    let mut found = Vec::new();
    let mut comp = template.comp.clone();
    assign(&template, &open, &options, 0, &mut comp, &mut found);
    found
}

fn assign(
    template: &FinCat,
    open: &[(usize, usize)],
    options: &[Vec<usize>],
    k: usize,
    comp: &mut BTreeMap<(usize, usize), usize>,
    found: &mut Vec<FinCat>,
) {
    if k == open.len() {
        found.push(FinCat { comp: comp.clone(), ..template.clone() });
        return;
    }
    for &h in &options[k] {
        comp.insert(open[k], h);
        if partially_associative(template, comp) {
            assign(template, open, options, k + 1, comp, found);
        }
        comp.remove(&open[k]);
    }
}

fn partially_associative(cat: &FinCat, comp: &BTreeMap<(usize, usize), usize>) -> bool {
    let nm = cat.morphisms.len();
    for (&(f, g), &fg) in comp {
        for h in (0..nm).filter(|&h| cat.dom[h] == cat.cod[g]) {
            let (Some(&gh), Some(&left)) = (comp.get(&(g, h)), comp.get(&(fg, h))) else {
                continue;
            };
            if let Some(&right) = comp.get(&(f, gh)) {
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Ways of distributing `count` morphisms over the `n × n` hom sets.
fn distributions(n: usize, count: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = n * n;
    let mut out = Vec::new();
    let mut current = vec![0; cells];
    fn go(k: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k + 1 == current.len() {
            current[k] = left;
            out.push(current.clone());
            return;
        }
        for c in 0..=left {
            current[k] = c;
            go(k + 1, left - c, current, out);
        }
    }
    if cells == 0 {
        return if count == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    go(0, count, &mut current, &mut out);
    out.into_iter().map(|flat| flat.chunks(n).map(<[usize]>::to_vec).collect()).collect()
}

/// All categories up to isomorphism with at most `max_objects` objects and at
/// most `max_morphisms` morphisms (identities included).
pub fn small_categories(max_objects: usize, max_morphisms: usize) -> Vec<FinCat> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 0..=max_objects {
        for extra in 0..=max_morphisms.saturating_sub(n) {
            if n + extra > max_morphisms || (n == 0 && extra > 0) {
                continue;
            }
            for hom in distributions(n, extra) {
                for cat in categories_with_homs(&hom) {
                    if seen.insert(cat.canonical_form()) {
                        out.push(cat);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_categories_are_valid() {
        FinCat::terminal().validate().unwrap();
        FinCat::walking_arrow().validate().unwrap();
        FinCat::cyclic_group(4).validate().unwrap();
        FinCat::symmetric_group_3().validate().unwrap();
        let p = FinCat::walking_arrow().product(&FinCat::walking_arrow());
        p.validate().unwrap();
        assert_eq!((p.object_count(), p.morphism_count()), (4, 9));
    }

    #[test]
    fn symmetric_group_is_not_commutative() {
        let s3 = FinCat::symmetric_group_3();
        assert!((0..6).any(|a| (0..6).any(|b| s3.compose(a, b) != s3.compose(b, a))));
    }

    #[test]
    fn broken_tables_are_rejected() {
        let mut c = FinCat::cyclic_group(3);
        c.comp.insert((1, 1), 1);
        assert!(matches!(c.validate(), Err(Error::InvalidCategory(_))));
        let mut w = FinCat::walking_arrow();
        w.comp.remove(&(0, 2));
        assert!(w.validate().is_err());
    }

    #[test]
    fn monoid_counts_match_known_values() {
        // monoids of order 1..4 up to isomorphism: 1, 2, 7, 35
        let counts: Vec<usize> = (0..4)
            .map(|extra| {
                let cats = categories_with_homs(&[vec![extra]]);
                cats.iter().map(FinCat::canonical_form).collect::<BTreeSet<_>>().len()
            })
            .collect();
        assert_eq!(counts, [1, 2, 7, 35]);
    }

    #[test]
    fn isomorphic_copies_share_a_canonical_form() {
        let cats = categories_with_homs(&[vec![0, 1], vec![0, 0]]);
        let flipped = categories_with_homs(&[vec![0, 0], vec![1, 0]]);
        assert_eq!(cats.len(), 1);
        assert_eq!(cats[0].canonical_form(), flipped[0].canonical_form());
        assert_eq!(cats[0].canonical_form(), FinCat::walking_arrow().canonical_form());
    }

    #[test]
    fn corpus_is_valid() {
        let corpus = small_categories(2, 4);
        assert!(corpus.iter().all(|c| c.validate().is_ok()));
        let one_object = corpus.iter().filter(|c| c.object_count() == 1).count();
        assert_eq!(one_object, 1 + 2 + 7 + 35);
    }
}
