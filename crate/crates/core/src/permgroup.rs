//! Brute-force enumeration of small permutation groups.
//!
//! Everything here works on the full element list: closure by breadth-first search,
//! conjugacy classes as orbits under conjugation by the generators, and power maps
//! read off class representatives.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::cyclotomic::factorize;
use crate::error::{Error, Result};

pub const DEFAULT_ENUM_CAP: usize = 200_000;

/// A bijection of `{0, …, d-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        if d > u16::MAX as usize {
            return Err(Error::InvalidParameter(format!("degree {d} too large")));
        }
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParameter(format!(
                    "images {images:?} do not form a permutation"
                )));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidParameter(format!(
                        "point {a} outside domain of size {degree}"
                    )));
                }
                if std::mem::replace(&mut moved[a], true) {
                    return Err(Error::InvalidParameter(format!(
                        "point {a} appears twice in cycle notation"
                    )));
                }
                images[a] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::parse(1, text.len() - rest.len() + 1, "expected '('"));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::parse(1, text.len() - rest.len() + 1, "unclosed cycle"));
            };
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>().map_err(|_| {
                        Error::parse(1, text.len() - rest.len() + 2, format!("bad point '{s}'"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Permutation {
            images: images.into(),
        }
    }

    pub fn pow(&self, exp: u64) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for cycle in &self.cycles_with_fixed() {
            let len = cycle.len() as u64;
            let shift = (exp % len) as usize;
            for (pos, &a) in cycle.iter().enumerate() {
                images[a] = cycle[(pos + shift) % cycle.len()] as u16;
            }
        }
        Permutation {
            images: images.into(),
        }
    }

    fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.image(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.image(next);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle lengths, fixed points included, in descending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles_with_fixed().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| acc.lcm(&(len as u64)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self
            .cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if nontrivial.is_empty() {
            return f.write_str("()");
        }
        for cycle in nontrivial {
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Contents of a generator file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(name: impl Into<String>, degree: usize, generators: Vec<Permutation>) -> Self {
        GeneratorSet {
            name: Some(name.into()),
            degree,
            generators,
        }
    }

    /// Reads `domain: d` followed by one generator per line in cycle notation.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut degree = None;
        let mut generators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(v) = line.strip_prefix("name:") {
                name = Some(v.trim().to_owned());
            } else if let Some(v) = line.strip_prefix("domain:") {
                let d = v
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_no, 8, "domain must be a nonnegative integer"))?;
                degree = Some(d);
            } else {
                let Some(d) = degree else {
                    return Err(Error::parse(line_no, 1, "generator before 'domain:' line"));
                };
                let g = Permutation::parse_cycles(d, line).map_err(|e| match e {
                    Error::Parse { column, message, .. } => Error::parse(line_no, column, message),
                    Error::InvalidParameter(message) => Error::parse(line_no, 1, message),
                    other => other,
                })?;
                generators.push(g);
            }
        }
        let degree = degree.ok_or_else(|| Error::parse(1, 1, "missing 'domain:' line"))?;
        Ok(GeneratorSet {
            name,
            degree,
            generators,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name: {name}\n"));
        }
        out.push_str(&format!("domain: {}\n", self.degree));
        for g in &self.generators {
            out.push_str(&format!("{g}\n"));
        }
        out
    }

    /// Generators of `A × B` acting on the disjoint union of the two domains.
    pub fn direct_product(&self, other: &GeneratorSet) -> GeneratorSet {
        let d = self.degree + other.degree;
        let left = self.generators.iter().map(|g| {
            let mut images: Vec<usize> = (0..g.degree()).map(|i| g.image(i)).collect();
            images.extend(self.degree..d);
            Permutation::from_images(images).unwrap()
        });
        let right = other.generators.iter().map(|g| {
            let mut images: Vec<usize> = (0..self.degree).collect();
            images.extend((0..g.degree()).map(|i| g.image(i) + self.degree));
            Permutation::from_images(images).unwrap()
        });
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        GeneratorSet {
            name,
            degree: d,
            generators: left.chain(right).collect(),
        }
    }

    pub fn enumerate(&self) -> Result<GroupData> {
        GroupData::enumerate(self.degree, &self.generators, DEFAULT_ENUM_CAP)
    }

    pub fn enumerate_with_cap(&self, cap: usize) -> Result<GroupData> {
        GroupData::enumerate(self.degree, &self.generators, cap)
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Index of the representative in [`GroupData::elements`].
    pub representative: usize,
    /// Element indices, ascending.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A fully enumerated permutation group with its class data.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub generators: Vec<Permutation>,
    pub degree: usize,
    /// All elements in breadth-first discovery order; index 0 is the identity.
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    class_of: Vec<usize>,
    /// Identity class first, then by element order, class size and discovery.
    pub classes: Vec<ConjugacyClass>,
    pub centralizer_orders: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// `power_maps[s][c]` is the class of `gˢ` for `g` in class `c`, for `0 <= s < exponent`.
    pub power_maps: Vec<Vec<usize>>,
    pub exponent: u64,
}

impl GroupData {
    pub fn enumerate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidParameter(format!(
                "generator {g} has degree {} but the domain has {degree} points",
                g.degree()
            )));
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in generators {
                let next = elements[cursor].then(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::EnumerationCap { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            cursor += 1;
        }

        let inverses: Vec<Permutation> = generators.iter().map(Permutation::inverse).collect();
        let unassigned = usize::MAX;
        let mut class_of = vec![unassigned; elements.len()];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != unassigned {
                continue;
            }
            let id = raw_classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for (g, g_inv) in generators.iter().zip(&inverses) {
                    let y = g_inv.then(&elements[x]).then(g);
                    let y = index[&y];
                    if class_of[y] == unassigned {
                        class_of[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            raw_classes.push(members);
        }

        let orders: Vec<u64> = raw_classes
            .iter()
            .map(|m| elements[m[0]].order())
            .collect();
        let mut perm: Vec<usize> = (0..raw_classes.len()).collect();
        perm.sort_by_key(|&c| (orders[c], raw_classes[c].len(), c));
        let mut relabel = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            relabel[old] = new;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c];
        }
        let mut slots: Vec<Option<Vec<usize>>> = raw_classes.into_iter().map(Some).collect();
        let classes: Vec<ConjugacyClass> = perm
            .iter()
            .map(|&old| {
                let members = slots[old].take().unwrap();
                ConjugacyClass {
                    representative: members[0],
                    members,
                }
            })
            .collect();
        let element_orders: Vec<u64> = perm.iter().map(|&old| orders[old]).collect();

        let order = elements.len() as u64;
        let centralizer_orders = classes
            .iter()
            .map(|c| order / c.size() as u64)
            .collect();
        let exponent = element_orders.iter().fold(1u64, |acc, o| acc.lcm(o));

        let mut power_maps = vec![vec![0usize; classes.len()]; exponent as usize];
        for (c, class) in classes.iter().enumerate() {
            let rep = &elements[class.representative];
            let m = element_orders[c] as usize;
            let mut powers = Vec::with_capacity(m);
            let mut current = Permutation::identity(degree);
            for _ in 0..m {
                powers.push(class_of[index[&current]]);
                current = current.then(rep);
            }
            for (s, row) in power_maps.iter_mut().enumerate() {
                row[c] = powers[s % m];
            }
        }

        Ok(GroupData {
            generators: generators.to_vec(),
            degree,
            elements,
            index,
            class_of,
            classes,
            centralizer_orders,
            element_orders,
            power_maps,
            exponent,
        })
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size() as u64).collect()
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of[i])
    }

    pub fn representative(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class].representative]
    }

    /// Lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// A finite group is nilpotent iff, for each prime `p`, its `p`-elements form a
    /// subgroup; here that is tested as "#p-elements = p-part of |G|".
    pub fn is_nilpotent(&self) -> bool {
        let order = self.order();
        factorize(order).into_iter().all(|(p, a)| {
            let p_part = p.pow(a);
            let count: u64 = self
                .classes
                .iter()
                .zip(&self.element_orders)
                .filter(|(_, &o)| p_part % o == 0)
                .map(|(c, _)| c.size() as u64)
                .sum();
            count == p_part
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, text: &str) -> Permutation {
        Permutation::parse_cycles(d, text).unwrap()
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = cyc(5, "(0 1 2)(3 4)");
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(cyc(3, "()").to_string(), "()");
        assert!(cyc(3, "()").is_identity());
        assert_eq!(p.then(&p.inverse()), Permutation::identity(5));
        assert_eq!(p.pow(3), cyc(5, "(3 4)"));
        assert!(Permutation::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 5)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 1").is_err());
    }

    #[test]
    fn composition_applies_left_first() {
        let a = cyc(3, "(0 1)");
        let b = cyc(3, "(1 2)");
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).image(0), 2);
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let g = GroupData::enumerate(3, &[cyc(3, "(0 1 2)")], DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.num_classes(), 3);
        assert!(g.centralizer_orders.iter().all(|&c| c == 3));
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn symmetric_group_s3() {
        let g = GroupData::enumerate(3, &[cyc(3, "(0 1)"), cyc(3, "(0 1 2)")], DEFAULT_ENUM_CAP)
            .unwrap();
        assert_eq!(g.class_sizes(), vec![1, 3, 2]);
        assert_eq!(g.element_orders, vec![1, 2, 3]);
        assert_eq!(g.exponent(), 6);
        assert!(!g.is_nilpotent());
        // Squares of 3-cycles are 3-cycles, squares of transpositions are trivial.
        assert_eq!(g.power_maps[2], vec![0, 0, 2]);
        assert_eq!(g.power_maps[1], vec![0, 1, 2]);
        assert_eq!(g.power_maps[0], vec![0, 0, 0]);
    }

    #[test]
    fn cyclic_six_is_nilpotent() {
        let g = GroupData::enumerate(6, &[cyc(6, "(0 1 2 3 4 5)")], DEFAULT_ENUM_CAP).unwrap();
        assert!(g.is_nilpotent());
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = [cyc(5, "(0 1)"), cyc(5, "(0 1 2 3 4)")];
        match GroupData::enumerate(5, &s5, 100) {
            Err(Error::EnumerationCap { cap }) => assert_eq!(cap, 100),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn generator_file_parsing() {
        let text = "# the symmetric group\nname: S3\ndomain: 3\n(0 1)\n(0 1 2)\n";
        let set = GeneratorSet::parse(text).unwrap();
        assert_eq!(set.degree, 3);
        assert_eq!(set.generators.len(), 2);
        assert_eq!(GeneratorSet::parse(&set.render()).unwrap(), set);
        match GeneratorSet::parse("domain: 3\n(0 1)\n(0 7)\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(GeneratorSet::parse("(0 1)\n").is_err());
    }

    #[test]
    fn direct_product_of_generator_sets() {
        let c2 = GeneratorSet::new("C2", 2, vec![cyc(2, "(0 1)")]);
        let c3 = GeneratorSet::new("C3", 3, vec![cyc(3, "(0 1 2)")]);
        let g = c2.direct_product(&c3).enumerate().unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 6);
    }
}
