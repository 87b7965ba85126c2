//! Finite groups given by Cayley tables, with normal closures, quotients and
//! a conservative naming of small groups.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::todd_coxeter::{enumerate_cosets, DEFAULT_COSET_LIMIT};
use super::word::{format_word, parse_word, Letter};

/// Largest group materialized as a Cayley table.
pub const MAX_GROUP_ORDER: usize = 2048;
/// Associativity is checked exhaustively up to this order.
pub const ASSOCIATIVITY_CHECK_ORDER: usize = 64;

/// A finite group on the elements `0..order`, with `0` the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    generator_names: Vec<String>,
    /// Element of each named generator.
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a 0-based Cayley table, `table[a][b] = a · b`.
    /// Elements are relabelled so that the identity is `0` only if it
    /// already is; otherwise the table is rejected.
    pub fn from_cayley(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge { order: n, limit: MAX_GROUP_ORDER });
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {} has length {}, expected {n}", a + 1, row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!("entry {} out of range", x + 1)));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("row {} repeats element {}", a + 1, x + 1)));
                }
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if std::mem::replace(&mut seen[row[b]], true) {
                    return Err(Error::InvalidGroup(format!("column {} repeats element {}", b + 1, row[b] + 1)));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        if identity != 0 {
            return Err(Error::InvalidGroup(format!(
                "identity must be the first element, found element {}",
                identity + 1
            )));
        }
        if n <= ASSOCIATIVITY_CHECK_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::InvalidGroup(format!(
                                "not associative at ({}, {}, {})",
                                a + 1,
                                b + 1,
                                c + 1
                            )));
                        }
                    }
                }
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).expect("Latin square")).collect();
        Ok(FiniteGroup { table, inverse, generator_names: Vec::new(), generators: Vec::new() })
    }

    /// Attaches names to elements used as generators in words.
    pub fn with_generators(mut self, names: Vec<String>, elements: Vec<usize>) -> Result<Self> {
        if names.len() != elements.len() {
            return Err(Error::InvalidGroup("generator names and elements differ in length".into()));
        }
        if let Some(&bad) = elements.iter().find(|&&e| e >= self.order()) {
            return Err(Error::InvalidElement((bad + 1).to_string()));
        }
        self.generator_names = names;
        self.generators = elements;
        Ok(self)
    }

    /// The group generated by permutations of `0..degree` (images, 0-based),
    /// composed left to right: `(a · b)(i) = b(a(i))`.
    pub fn from_permutations(perms: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Self> {
        let degree = perms.first().map_or(0, |p| p.len());
        for (i, p) in perms.iter().enumerate() {
            let mut seen = vec![false; degree];
            if p.len() != degree || p.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidGroup(format!("generator {} is not a permutation of 1..{degree}", i + 1)));
            }
        }
        let names = names.unwrap_or_else(|| (1..=perms.len()).map(|i| format!("g{i}")).collect());
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { a.iter().map(|&i| b[i]).collect() };
        let mut elements: Vec<Vec<usize>> = vec![(0..degree).collect()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for p in perms {
                let c = compose(&elements[a], p);
                if !index.contains_key(&c) {
                    if elements.len() >= MAX_GROUP_ORDER {
                        return Err(Error::GroupTooLarge { order: elements.len() + 1, limit: MAX_GROUP_ORDER });
                    }
                    index.insert(c.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(c);
                }
            }
        }
        let table = elements.iter().map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect()).collect();
        let gens = perms.iter().map(|p| index[p]).collect();
        FiniteGroup::from_cayley(table)?.with_generators(names, gens)
    }

    /// The group `⟨generators | relators⟩` via coset enumeration.
    pub fn from_presentation(generators: &[String], relators: &[String]) -> Result<Self> {
        Self::from_presentation_with_limit(generators, relators, DEFAULT_COSET_LIMIT)
    }

    pub fn from_presentation_with_limit(generators: &[String], relators: &[String], limit: usize) -> Result<Self> {
        let mut distinct = BTreeSet::new();
        for g in generators {
            let valid = g.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && g.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || !distinct.insert(g) {
                return Err(Error::InvalidGroup(format!("bad generator name {g:?}")));
            }
        }
        let rels: Vec<Vec<Letter>> = relators.iter().map(|r| parse_word(r, generators)).collect::<Result<_>>()?;
        let cosets = enumerate_cosets(generators.len(), &rels, limit)?;
        let n = cosets.table.len();
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge { order: n, limit: MAX_GROUP_ORDER });
        }
        let act = |a: usize, w: &[Letter]| w.iter().fold(a, |c, &x| cosets.table[c][x]);
        let table = (0..n).map(|a| (0..n).map(|b| act(a, &cosets.words[b])).collect()).collect();
        let gens = (0..generators.len()).map(|i| cosets.table[0][2 * i]).collect();
        FiniteGroup::from_cayley(table)?.with_generators(generators.to_vec(), gens)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    fn check(&self, a: usize) -> Result<usize> {
        if a < self.order() {
            Ok(a)
        } else {
            Err(Error::InvalidElement(format!("{} (group has order {})", a + 1, self.order())))
        }
    }

    /// Evaluates a word in the named generators.
    pub fn element_of_word(&self, word: &str) -> Result<usize> {
        let letters = parse_word(word, &self.generator_names)?;
        Ok(letters.iter().fold(0, |acc, &l| {
            let g = self.generators[l / 2];
            self.mul(acc, if l % 2 == 0 { g } else { self.inverse(g) })
        }))
    }

    /// A short word for every element, breadth-first in the generators, or
    /// the 1-based element index where the generators do not reach.
    pub fn element_names(&self) -> Vec<String> {
        let n = self.order();
        let mut words: Vec<Option<Vec<Letter>>> = vec![None; n];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for (i, &g) in self.generators.iter().enumerate() {
                for (l, h) in [(2 * i, g), (2 * i + 1, self.inverse(g))] {
                    let b = self.mul(a, h);
                    if words[b].is_none() {
                        let mut w = words[a].clone().unwrap();
                        w.push(l);
                        words[b] = Some(w);
                        queue.push_back(b);
                    }
                }
            }
        }
        words
            .into_iter()
            .enumerate()
            .map(|(i, w)| match w {
                Some(w) => format_word(&w, &self.generator_names),
                None => format!("#{}", i + 1),
            })
            .collect()
    }

    /// The subgroup generated by `seeds`, as a sorted element list.
    pub fn subgroup_generated(&self, seeds: &[usize]) -> Result<Vec<usize>> {
        for &s in seeds {
            self.check(s)?;
        }
        let mut members = BTreeSet::from([0usize]);
        let mut queue: VecDeque<usize> = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for &s in seeds {
                let b = self.mul(a, s);
                if members.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        Ok(members.into_iter().collect())
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        set.contains(&0) && set.iter().all(|&a| a < self.order() && set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        self.is_subgroup(subset)
            && (0..self.order()).all(|g| set.iter().all(|&h| set.contains(&self.mul(self.mul(self.inverse(g), h), g))))
    }

    /// The smallest normal subgroup containing `seeds`: the subgroup
    /// generated by all conjugates of the seeds.
    pub fn normal_closure(&self, seeds: &[usize]) -> Result<Vec<usize>> {
        if seeds.is_empty() {
            return Err(Error::InvalidElement("no seed elements given".into()));
        }
        for &s in seeds {
            self.check(s)?;
        }
        let conjugates: BTreeSet<usize> = seeds
            .iter()
            .flat_map(|&s| (0..self.order()).map(move |g| (s, g)))
            .map(|(s, g)| self.mul(self.mul(self.inverse(g), s), g))
            .collect();
        let closure = self.subgroup_generated(&conjugates.into_iter().collect::<Vec<_>>())?;
        debug_assert!(self.is_normal(&closure));
        Ok(closure)
    }

    /// `G / N` on the cosets of `normal`, numbered by least representative.
    /// Named generators map to their images.
    pub fn quotient_group(&self, normal: &[usize]) -> Result<FiniteGroup> {
        for &a in normal {
            self.check(a)?;
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if coset_of[a] == usize::MAX {
                for &h in normal {
                    coset_of[self.mul(a, h)] = reps.len();
                }
                reps.push(a);
            }
        }
        let table: Vec<Vec<usize>> =
            reps.iter().map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect()).collect();
        for a in 0..n {
            for b in 0..n {
                if coset_of[self.mul(a, b)] != table[coset_of[a]][coset_of[b]] {
                    return Err(Error::NotNormal);
                }
            }
        }
        let gens = self.generators.iter().map(|&g| coset_of[g]).collect();
        FiniteGroup::from_cayley(table)?.with_generators(self.generator_names.clone(), gens)
    }

    /// `(element order, count)` pairs, ascending.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut h: BTreeMap<usize, usize> = BTreeMap::new();
        for a in 0..self.order() {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h.into_iter().collect()
    }

    /// Invariant factors `d1 | d2 | ...` (each > 1) of an abelian group.
    pub fn abelian_invariants(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.order();
        let mut primes = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                primes.push(p);
                while m.is_multiple_of(p) {
                    m /= p;
                }
            }
            p += 1;
        }
        // For each prime, the sizes of the cyclic p-factors from the counts
        // of elements killed by p^i.
        let orders: Vec<usize> = (0..n).map(|a| self.element_order(a)).collect();
        let mut columns: Vec<Vec<usize>> = Vec::new();
        for &p in &primes {
            let mut logs = vec![0u32];
            let mut q = 1;
            loop {
                q *= p;
                let count = orders.iter().filter(|&&o| q % o == 0).count();
                let log = count.ilog(p);
                if log == *logs.last().unwrap() {
                    break;
                }
                logs.push(log);
            }
            // number of factors of order >= p^i is logs[i] - logs[i-1]
            let mut factors = Vec::new();
            for i in 1..logs.len() {
                let at_least = (logs[i] - logs[i - 1]) as usize;
                let at_least_next = if i + 1 < logs.len() { (logs[i + 1] - logs[i]) as usize } else { 0 };
                for _ in 0..at_least - at_least_next {
                    factors.push(p.pow(i as u32));
                }
            }
            factors.sort_unstable_by(|a, b| b.cmp(a));
            columns.push(factors);
        }
        let width = columns.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut invariants: Vec<usize> =
            (0..width).map(|i| columns.iter().map(|c| c.get(i).copied().unwrap_or(1)).product()).collect();
        invariants.reverse();
        Some(invariants)
    }
}

/// Identification of a finite group up to isomorphism where that is certain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupIdentity {
    pub order: usize,
    pub label: String,
    pub abelian_invariants: Option<Vec<usize>>,
    pub histogram: Vec<(usize, usize)>,
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Name, order and order histogram.
type CatalogueEntry = (String, usize, Vec<(usize, usize)>);

/// Nonabelian groups of the orders below 24 other than 16, by presentation.
fn nonabelian_catalogue() -> &'static Vec<CatalogueEntry> {
    static CATALOGUE: OnceLock<Vec<CatalogueEntry>> = OnceLock::new();
    CATALOGUE.get_or_init(|| {
        let dihedral = |m: usize| {
            (format!("D{}", subscript(m)), vec!["a", "b"], vec![format!("a^{m}"), "b^2".into(), "(a*b)^2".into()])
        };
        let dicyclic = |m: usize| {
            (
                format!("Dic{}", subscript(m)),
                vec!["a", "b"],
                vec![format!("a^{}", 2 * m), format!("a^{m}*b^-2"), "b^-1*a*b*a".into()],
            )
        };
        let metacyclic = |name: &str, p: usize, q: usize, r: usize| {
            (name.to_string(), vec!["a", "b"], vec![format!("a^{p}"), format!("b^{q}"), format!("b^-1*a*b*a^-{r}")])
        };
        let mut entries = vec![
            ("S₃".to_string(), vec!["a", "b"], vec!["a^3".to_string(), "b^2".into(), "(a*b)^2".into()]),
            dihedral(4),
            ("Q₈".into(), vec!["a", "b"], vec!["a^4".into(), "a^2*b^-2".into(), "b^-1*a*b*a".into()]),
            dihedral(5),
            ("A₄".into(), vec!["a", "b"], vec!["a^2".into(), "b^3".into(), "(a*b)^3".into()]),
            dihedral(6),
            dicyclic(3),
            dihedral(7),
            dihedral(9),
            (
                "S₃×Z₃".into(),
                vec!["a", "b", "c"],
                ["a^3", "b^2", "(a*b)^2", "c^3", "a*c*a^-1*c^-1", "b*c*b^-1*c^-1"].map(String::from).to_vec(),
            ),
            (
                "(Z₃×Z₃)⋊Z₂".into(),
                vec!["a", "b", "c"],
                ["a^3", "b^3", "a*b*a^-1*b^-1", "c^2", "c*a*c^-1*a", "c*b*c^-1*b"].map(String::from).to_vec(),
            ),
            dihedral(10),
            dicyclic(5),
            metacyclic("Z₅⋊Z₄", 5, 4, 2),
            metacyclic("Z₇⋊Z₃", 7, 3, 2),
            dihedral(11),
        ];
        entries
            .drain(..)
            .map(|(name, gens, rels)| {
                let gens: Vec<String> = gens.into_iter().map(String::from).collect();
                let g = FiniteGroup::from_presentation(&gens, &rels).expect("catalogue presentation");
                assert!(!g.is_abelian());
                (name, g.order(), g.order_histogram())
            })
            .collect()
    })
}

/// Orders for which the catalogue lists every nonabelian group.
const CATALOGUED_ORDERS: [usize; 9] = [6, 8, 10, 12, 14, 18, 20, 21, 22];

/// Names a group by its abelian invariants, or by its element-order
/// histogram when that is unique among the nonabelian groups of its order.
/// Otherwise the label states the signature.
pub fn identify_group(g: &FiniteGroup) -> GroupIdentity {
    let order = g.order();
    let histogram = g.order_histogram();
    let invariants = g.abelian_invariants();
    let label = match &invariants {
        Some(inv) if inv.is_empty() => "trivial".to_string(),
        Some(inv) => inv.iter().rev().map(|d| format!("Z{}", subscript(*d))).collect::<Vec<_>>().join("×"),
        None => {
            let matches: Vec<&String> = nonabelian_catalogue()
                .iter()
                .filter(|(_, o, h)| *o == order && *h == histogram)
                .map(|(name, _, _)| name)
                .collect();
            match matches.as_slice() {
                [name] if CATALOGUED_ORDERS.contains(&order) => (*name).clone(),
                _ => {
                    let parts: Vec<String> = histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
                    format!("order-{order} group, order histogram ({})", parts.join(", "))
                }
            }
        }
    };
    GroupIdentity { order, label, abelian_invariants: invariants, histogram }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(gens: &[&str]) -> Vec<String> {
        gens.iter().map(|s| s.to_string()).collect()
    }

    pub(crate) fn dic3() -> FiniteGroup {
        FiniteGroup::from_presentation(&names(&["g3", "g4"]), &names(&["g3^3", "g4^4", "g4^-1*g3*g4*g3^-2"])).unwrap()
    }

    fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn cayley_validation() {
        assert!(FiniteGroup::from_cayley(cyclic_table(5)).is_ok());
        let mut bad = cyclic_table(4);
        bad[1].swap(0, 1);
        assert!(matches!(FiniteGroup::from_cayley(bad), Err(Error::InvalidGroup(_))));
        // a Latin square without associativity: the loop table of order 5
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_cayley(loop5).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
        let shifted: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b + 1) % 3).collect()).collect();
        assert!(FiniteGroup::from_cayley(shifted).is_err());
    }

    #[test]
    fn dicyclic_closures() {
        let g = dic3();
        assert_eq!(g.order(), 12);
        let g4 = g.element_of_word("g4").unwrap();
        assert_eq!(g.normal_closure(&[g4]).unwrap().len(), 12);
        let z = g.element_of_word("g4^2").unwrap();
        let centre = g.normal_closure(&[z]).unwrap();
        assert_eq!(centre.len(), 2);
        assert!((0..12).all(|a| g.mul(a, z) == g.mul(z, a)));
        let q = g.quotient_group(&centre).unwrap();
        assert_eq!(identify_group(&q).label, "S₃");
        assert_eq!(identify_group(&g).label, "Dic₃");
        assert_eq!(identify_group(&g.quotient_group(&g.normal_closure(&[g4]).unwrap()).unwrap()).label, "trivial");
        let g3 = g.element_of_word("g3").unwrap();
        assert!(g.is_normal(&g.subgroup_generated(&[g3]).unwrap()));
        assert!(!g.is_normal(&g.subgroup_generated(&[g4]).unwrap()));
        assert_eq!(g.quotient_group(&g.subgroup_generated(&[g4]).unwrap()), Err(Error::NotNormal));
    }

    #[test]
    fn product_of_cyclic_groups() {
        let g =
            FiniteGroup::from_presentation(&names(&["g10", "g2"]), &names(&["g10^10", "g2^2", "g10*g2*g10^-1*g2^-1"]))
                .unwrap();
        assert_eq!(g.abelian_invariants(), Some(vec![2, 10]));
        assert_eq!(identify_group(&g).label, "Z₁₀×Z₂");
        let g10 = g.element_of_word("g10").unwrap();
        let n = g.normal_closure(&[g10]).unwrap();
        assert_eq!(n, g.subgroup_generated(&[g10]).unwrap());
        let q = g.quotient_group(&n).unwrap();
        assert_eq!(identify_group(&q).label, "Z₂");
    }

    #[test]
    fn order_twelve_histograms_differ() {
        let cat = nonabelian_catalogue();
        let twelve: Vec<_> = cat.iter().filter(|e| e.1 == 12).collect();
        assert_eq!(twelve.len(), 3);
        for i in 0..3 {
            for j in i + 1..3 {
                assert_ne!(twelve[i].2, twelve[j].2);
            }
        }
        for &o in &CATALOGUED_ORDERS {
            let hs: Vec<_> = cat.iter().filter(|e| e.1 == o).map(|e| &e.2).collect();
            assert!(!hs.is_empty());
            let unique: BTreeSet<_> = hs.iter().collect();
            assert_eq!(unique.len(), hs.len(), "order {o}");
        }
    }

    #[test]
    fn permutation_groups() {
        // S4 from a transposition and a 4-cycle
        let g = FiniteGroup::from_permutations(&[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], None).unwrap();
        assert_eq!(g.order(), 24);
        assert!(identify_group(&g).label.starts_with("order-24 group"));
        let s3 = FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], None).unwrap();
        assert_eq!(identify_group(&s3).label, "S₃");
        assert!(FiniteGroup::from_permutations(&[vec![0, 0]], None).is_err());
    }

    #[test]
    fn abelian_invariants() {
        let z = |n: usize| FiniteGroup::from_cayley(cyclic_table(n)).unwrap();
        assert_eq!(z(1).abelian_invariants(), Some(vec![]));
        assert_eq!(z(12).abelian_invariants(), Some(vec![12]));
        let g = FiniteGroup::from_presentation(
            &names(&["a", "b", "c"]),
            &names(&["a^2", "b^4", "c^6", "a*b*a^-1*b^-1", "a*c*a^-1*c^-1", "b*c*b^-1*c^-1"]),
        )
        .unwrap();
        assert_eq!(g.abelian_invariants(), Some(vec![2, 2, 12]));
        assert_eq!(identify_group(&g).label, "Z₁₂×Z₂×Z₂");
    }

    #[test]
    fn element_names_use_generators() {
        let g = dic3();
        let names = g.element_names();
        assert_eq!(names[0], "e");
        for (i, w) in names.iter().enumerate() {
            assert_eq!(g.element_of_word(w).unwrap(), i);
        }
    }

    #[test]
    fn bad_elements() {
        let g = dic3();
        assert!(matches!(g.normal_closure(&[12]), Err(Error::InvalidElement(_))));
        assert!(g.normal_closure(&[]).is_err());
        assert!(matches!(g.element_of_word("g7"), Err(Error::MalformedWord(_))));
    }

    proptest::proptest! {
        #[test]
        fn closure_is_normal_idempotent_and_monotone(seeds in proptest::collection::vec(0usize..12, 1..4), extra in 0usize..12) {
            let g = dic3();
            let n = g.normal_closure(&seeds).unwrap();
            proptest::prop_assert!(g.is_normal(&n));
            proptest::prop_assert_eq!(g.normal_closure(&n).unwrap(), n.clone());
            let mut more = seeds.clone();
            more.push(extra);
            let bigger = g.normal_closure(&more).unwrap();
            proptest::prop_assert!(n.iter().all(|x| bigger.contains(x)));
            let q = g.quotient_group(&n).unwrap();
            proptest::prop_assert_eq!(q.order() * n.len(), g.order());
        }
    }
}
