//! Transitive permutation groups of degree 3 to 7, up to conjugacy, with the
//! sets of cycle types they contain.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

/// A cycle type: cycle lengths in descending order, fixed points included.
pub type CycleType = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitiveGroup {
    pub degree: usize,
    pub name: &'static str,
    pub order: usize,
    pub cycle_types: BTreeSet<CycleType>,
}

impl TransitiveGroup {
    /// `A_n` and `S_n` are the only transitive groups of order at least `n!/2`.
    pub fn contains_alternating(&self) -> bool {
        let half: usize = (3..=self.degree).product();
        self.order >= half
    }
}

// (name, generators in cycle notation on 0..n)
const DEGREE_3: &[(&str, &[&str])] = &[("C3", &["(012)"]), ("S3", &["(012)", "(01)"])];

const DEGREE_4: &[(&str, &[&str])] = &[
    ("C4", &["(0123)"]),
    ("V4", &["(01)(23)", "(02)(13)"]),
    ("D4", &["(0123)", "(03)(12)"]),
    ("A4", &["(012)", "(123)"]),
    ("S4", &["(0123)", "(01)"]),
];

const DEGREE_5: &[(&str, &[&str])] = &[
    ("C5", &["(01234)"]),
    ("D5", &["(01234)", "(04)(13)"]),
    ("F20", &["(01234)", "(1243)"]),
    ("A5", &["(012)", "(01234)"]),
    ("S5", &["(01234)", "(01)"]),
];

const DEGREE_6: &[(&str, &[&str])] = &[
    ("C6", &["(012345)"]),
    ("S3", &["(012)(345)", "(03)(15)(24)"]),
    ("D6", &["(012345)", "(05)(14)(23)"]),
    ("A4", &["(045)(132)", "(012)(354)"]),
    ("F18", &["(012)", "(345)", "(04)(15)(23)"]),
    ("2A4", &["(045)(132)", "(012)(354)", "(24)"]),
    ("S4-", &["(1453)", "(04)(15)(23)"]),
    ("S4+", &["(0241)(35)", "(03)(45)"]),
    ("F18:2", &["(012)", "(345)", "(12)(35)", "(04)(15)(23)"]),
    ("F36", &["(012)", "(345)", "(0523)(14)"]),
    ("2S4", &["(1453)", "(04)(15)(23)", "(14)(35)"]),
    ("PSL(2,5)", &["(045)(132)", "(04315)"]),
    ("F36:2", &["(012)", "(0413)(25)", "(03)(14)(25)"]),
    ("PGL(2,5)", &["(01234)", "(05)(12)(34)"]),
    ("A6", &["(012)", "(12345)"]),
    ("S6", &["(012345)", "(01)"]),
];

const DEGREE_7: &[(&str, &[&str])] = &[
    ("C7", &["(0123456)"]),
    ("D7", &["(0123456)", "(16)(25)(34)"]),
    ("F21", &["(0123456)", "(124)(365)"]),
    ("F42", &["(0123456)", "(132645)"]),
    ("PSL(3,2)", &["(0123456)", "(01)(25)"]),
    ("A7", &["(0123456)", "(012)"]),
    ("S7", &["(0123456)", "(01)"]),
];

fn parse_cycles(n: usize, text: &str) -> Vec<u8> {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    for cycle in text.split(')').filter(|c| !c.is_empty()) {
        let points: Vec<u8> = cycle
            .trim_start_matches('(')
            .bytes()
            .map(|b| b - b'0')
            .collect();
        for (i, &pt) in points.iter().enumerate() {
            perm[pt as usize] = points[(i + 1) % points.len()];
        }
    }
    perm
}

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn cycle_type(perm: &[u8]) -> CycleType {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

fn closure(n: usize, generators: &[Vec<u8>]) -> BTreeSet<Vec<u8>> {
    let identity: Vec<u8> = (0..n as u8).collect();
    let mut elements = BTreeSet::new();
    elements.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for h in generators {
            let gh = compose(&g, h);
            if elements.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    elements
}

/// Every transitive subgroup of `S_n` up to conjugacy, for `3 <= n <= 7`;
/// empty otherwise. Ordered by group order.
pub fn transitive_groups(n: usize) -> Vec<TransitiveGroup> {
    let table = match n {
        3 => DEGREE_3,
        4 => DEGREE_4,
        5 => DEGREE_5,
        6 => DEGREE_6,
        7 => DEGREE_7,
        _ => return Vec::new(),
    };
    table
        .iter()
        .map(|(name, gens)| {
            let gens: Vec<Vec<u8>> = gens.iter().map(|g| parse_cycles(n, g)).collect();
            let elements = closure(n, &gens);
            TransitiveGroup {
                degree: n,
                name,
                order: elements.len(),
                cycle_types: elements.iter().map(|g| cycle_type(g)).collect(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit_of_zero(elements: &BTreeSet<Vec<u8>>) -> usize {
        elements.iter().map(|g| g[0]).collect::<BTreeSet<_>>().len()
    }

    #[test]
    fn orders_match_the_classification() {
        let expected: [&[usize]; 5] = [
            &[3, 6],
            &[4, 4, 8, 12, 24],
            &[5, 10, 20, 60, 120],
            &[
                6, 6, 12, 12, 18, 24, 24, 24, 36, 36, 48, 60, 72, 120, 360, 720,
            ],
            &[7, 14, 21, 42, 168, 2520, 5040],
        ];
        for (n, orders) in (3..=7).zip(expected) {
            let got: Vec<usize> = transitive_groups(n).iter().map(|g| g.order).collect();
            assert_eq!(got, orders, "degree {n}");
        }
    }

    #[test]
    fn all_transitive_and_pairwise_distinct() {
        for n in 3..=7 {
            let table = match n {
                3 => DEGREE_3,
                4 => DEGREE_4,
                5 => DEGREE_5,
                6 => DEGREE_6,
                _ => DEGREE_7,
            };
            for (_, gens) in table {
                let gens: Vec<Vec<u8>> = gens.iter().map(|g| parse_cycles(n, g)).collect();
                assert_eq!(orbit_of_zero(&closure(n, &gens)), n);
            }
            let groups = transitive_groups(n);
            for (i, a) in groups.iter().enumerate() {
                for b in &groups[i + 1..] {
                    assert!(
                        a.order != b.order || a.cycle_types != b.cycle_types,
                        "{} and {} share order and cycle types",
                        a.name,
                        b.name
                    );
                }
            }
        }
    }

    #[test]
    fn alternating_membership() {
        for n in 3..=7 {
            let names: Vec<&str> = transitive_groups(n)
                .into_iter()
                .filter(TransitiveGroup::contains_alternating)
                .map(|g| g.name)
                .collect();
            let expected = match n {
                3 => ["C3", "S3"],
                4 => ["A4", "S4"],
                5 => ["A5", "S5"],
                6 => ["A6", "S6"],
                _ => ["A7", "S7"],
            };
            assert_eq!(names, expected);
        }
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(cycle_type(&parse_cycles(6, "(012)(34)")), [3, 2, 1]);
        assert_eq!(cycle_type(&parse_cycles(4, "")), [1, 1, 1, 1]);
        let pgl = &transitive_groups(6)[13];
        assert_eq!(pgl.name, "PGL(2,5)");
        assert!(!pgl.cycle_types.contains(&vec![2, 1, 1, 1, 1]));
        assert!(pgl.cycle_types.contains(&vec![4, 1, 1]));
    }
}
