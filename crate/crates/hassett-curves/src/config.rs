use std::collections::BTreeSet;

use crate::HassettError;

/// A pointed nodal curve of arithmetic genus zero, described purely
/// combinatorially: a tree of components, and marked points grouped into
/// coincidence classes at smooth points.
///
/// Marks are the integers 1..=n. The representation is normalized on
/// construction (sorted names, sorted node pairs, classes ordered by their
/// least mark), so equality is configuration equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableCurveConfig {
    names: Vec<String>,
    /// Index pairs into `names`, each with the smaller index first.
    nodes: Vec<(usize, usize)>,
    /// (component index, sorted marks sharing one smooth point).
    classes: Vec<(usize, Vec<usize>)>,
}

impl StableCurveConfig {
    pub fn new(
        components: Vec<String>,
        nodes: Vec<(String, String)>,
        classes: Vec<(Vec<usize>, String)>,
    ) -> Result<Self, HassettError> {
        let mut names = components;
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(HassettError::DuplicateComponent(w[0].clone()));
        }
        if names.is_empty() {
            return Err(HassettError::Parse("no components".into()));
        }
        let index_of = |name: &str| -> Result<usize, HassettError> {
            names
                .binary_search_by(|probe| probe.as_str().cmp(name))
                .map_err(|_| HassettError::UnknownComponent(name.to_string()))
        };

        let mut edge_list = Vec::with_capacity(nodes.len());
        for (x, y) in &nodes {
            let (i, j) = (index_of(x)?, index_of(y)?);
            if i == j {
                return Err(HassettError::SelfLoop(x.clone()));
            }
            edge_list.push((i.min(j), i.max(j)));
        }
        edge_list.sort();
        if edge_list.len() + 1 != names.len() || !is_connected(names.len(), &edge_list) {
            return Err(HassettError::NotATree);
        }

        let mut class_list = Vec::with_capacity(classes.len());
        let mut all_marks = BTreeSet::new();
        for (marks, comp) in classes {
            let c = index_of(&comp)?;
            if marks.is_empty() {
                return Err(HassettError::Parse("empty coincidence class".into()));
            }
            let mut marks = marks;
            marks.sort_unstable();
            for m in &marks {
                if !all_marks.insert(*m) {
                    return Err(HassettError::DuplicateMark(*m));
                }
            }
            class_list.push((c, marks));
        }
        for (expect, got) in (1..).zip(all_marks.iter()) {
            if expect != *got {
                return Err(HassettError::MissingMark(expect));
            }
        }
        class_list.sort();

        Ok(StableCurveConfig { names, nodes: edge_list, classes: class_list })
    }

    pub fn n_marks(&self) -> usize {
        self.classes.iter().map(|(_, ms)| ms.len()).sum()
    }

    pub fn component_names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn component_count(&self) -> usize {
        self.names.len()
    }

    pub(crate) fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub(crate) fn node_degree(&self, idx: usize) -> usize {
        self.nodes.iter().filter(|(i, j)| *i == idx || *j == idx).count()
    }

    pub(crate) fn node_partner(&self, idx: usize) -> Option<usize> {
        let mut partners = self.nodes.iter().filter_map(|&(i, j)| {
            if i == idx {
                Some(j)
            } else if j == idx {
                Some(i)
            } else {
                None
            }
        });
        let first = partners.next();
        if partners.next().is_some() {
            None
        } else {
            first
        }
    }

    pub(crate) fn classes_iter(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.classes.iter().map(|(c, ms)| (*c, ms.as_slice()))
    }

    pub(crate) fn marks_on(&self, idx: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .classes
            .iter()
            .filter(|(c, _)| *c == idx)
            .flat_map(|(_, ms)| ms.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Contracts the leaf component `idx` onto its unique neighbor. All of
    /// the leaf's marks land at one smooth point of the neighbor, forming a
    /// single coincidence class. Callers check the weight of that class.
    pub(crate) fn contract_leaf(&self, idx: usize) -> (StableCurveConfig, Vec<usize>, String) {
        let partner = self.node_partner(idx).expect("contract_leaf requires a degree-1 component");
        let merged = self.marks_on(idx);
        let neighbor = self.names[partner].clone();

        let components =
            self.names.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, n)| n.clone());
        let nodes = self
            .nodes
            .iter()
            .filter(|&&(i, j)| i != idx && j != idx)
            .map(|&(i, j)| (self.names[i].clone(), self.names[j].clone()));
        let mut classes: Vec<(Vec<usize>, String)> = self
            .classes
            .iter()
            .filter(|(c, _)| *c != idx)
            .map(|(c, ms)| (ms.clone(), self.names[*c].clone()))
            .collect();
        if !merged.is_empty() {
            classes.push((merged.clone(), neighbor.clone()));
        }
        let contracted = StableCurveConfig::new(components.collect(), nodes.collect(), classes)
            .expect("contracting a leaf of a valid tree yields a valid tree");
        (contracted, merged, neighbor)
    }

    /// Canonical text form, re-parseable by [`parse_config`].
    pub fn to_text(&self) -> String {
        let mut parts: Vec<String> = self.names.clone();
        for &(i, j) in &self.nodes {
            parts.push(format!("{}-{}", self.names[i], self.names[j]));
        }
        for (c, ms) in &self.classes {
            if ms.len() == 1 {
                parts.push(format!("{}@{}", ms[0], self.names[*c]));
            } else {
                let inner = ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                parts.push(format!("{{{inner}}}@{}", self.names[*c]));
            }
        }
        parts.join(" ")
    }
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(i, j) in edges {
            let other = if i == v {
                j
            } else if j == v {
                i
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Parses the plain text form: component names as bare words, nodes as
/// `A-B`, assignments as `3@A` or `{1,2,3}@A`. Tokens are separated by
/// whitespace or semicolons; declarations may appear in any order.
pub fn parse_config(text: &str) -> Result<StableCurveConfig, HassettError> {
    let cleaned = text.replace(';', " ");
    let tokens: Vec<&str> = cleaned.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(HassettError::Parse("empty configuration".into()));
    }

    let mut components = Vec::new();
    let mut nodes = Vec::new();
    let mut classes = Vec::new();
    for t in &tokens {
        if let Some((lhs, comp)) = t.rsplit_once('@') {
            let marks = parse_marks(lhs)?;
            check_name(comp)?;
            classes.push((marks, comp.to_string()));
        } else if let Some((x, y)) = t.split_once('-') {
            check_name(x)?;
            check_name(y)?;
            nodes.push((x.to_string(), y.to_string()));
        } else {
            check_name(t)?;
            components.push(t.to_string());
        }
    }
    StableCurveConfig::new(components, nodes, classes)
}

fn parse_marks(lhs: &str) -> Result<Vec<usize>, HassettError> {
    let body = if let Some(stripped) = lhs.strip_prefix('{') {
        stripped
            .strip_suffix('}')
            .ok_or_else(|| HassettError::Parse(format!("unclosed brace in {lhs:?}")))?
    } else {
        lhs
    };
    body.split(',')
        .map(|piece| {
            let piece = piece.trim();
            piece
                .parse::<usize>()
                .map_err(|_| HassettError::Parse(format!("bad mark {piece:?}")))
                .and_then(|m| {
                    if m == 0 {
                        Err(HassettError::Parse("marks are 1-based".into()))
                    } else {
                        Ok(m)
                    }
                })
        })
        .collect()
}

fn check_name(name: &str) -> Result<(), HassettError> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric()),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(HassettError::Parse(format!("bad component name {name:?}")))
    }
}
