//! Oriented link diagrams in PD notation, Wirtinger presentations,
//! component deletion and linking numbers.
//!
//! # PD file format
//!
//! ```text
//! # Hopf link
//! component 1 orientation +
//! component 2 orientation +
//! X[1,3,2,4] X[3,1,4,2]
//! ```
//!
//! * `X[a,b,c,d]` lists the four edge labels (positive integers) around a
//!   crossing, starting with the incoming under-edge and proceeding
//!   counterclockwise. Several tuples may share a line.
//! * Every label occurs in exactly two slots.
//! * Components are numbered by their smallest edge label: component 1 owns
//!   the smallest label overall, and so on.
//! * One `component <i> orientation <+|->` line is required per component.
//!   `+` means the labels increase along the orientation (the edge after the
//!   smallest label has a smaller label than the edge before it), `-` the
//!   reverse. The direction itself is fixed by the incoming under-edges; the
//!   annotation is checked against it and cannot be verified on components
//!   with fewer than three edges.
//! * Every component must pass under at least one crossing. A component that
//!   only passes over (or has no crossings) needs a kink, e.g. `X[1,1,2,2]`.
//!
//! A crossing is positive (`+1`) when, looking along the under-strand, the
//! over-strand passes from left to right.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::free_group::Letter;
use crate::presentation::{Generator, Presentation, Provenance, Relator};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    /// Edge labels in PD order: incoming under, then counterclockwise.
    pub pd: [u32; 4],
    pub sign: i8,
    pub over: usize,
    pub under: usize,
}

impl Crossing {
    pub fn under_in(&self) -> u32 {
        self.pd[0]
    }

    pub fn under_out(&self) -> u32 {
        self.pd[2]
    }

    /// The two labels of the over-strand, `(incoming, outgoing)`.
    pub fn over_edges(&self) -> (u32, u32) {
        if self.sign > 0 {
            (self.pd[3], self.pd[1])
        } else {
            (self.pd[1], self.pd[3])
        }
    }

    pub fn involves(&self, component: usize) -> bool {
        self.over == component || self.under == component
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    /// Edge labels of each component in traversal order, starting at the
    /// smallest label.
    components: Vec<Vec<u32>>,
}

/// Wirtinger arcs: maximal strands broken only at under-crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arcs {
    pub arc_of_edge: BTreeMap<u32, usize>,
    pub component: Vec<usize>,
    pub labels: Vec<String>,
}

/// The surjection `G(L) → G(L')` on Wirtinger generators induced by deleting
/// a component: `images[j]` is the generator of `L'` containing arc `j` of
/// `L`, or `None` for arcs of the deleted component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcMergeMap {
    pub deleted_component: usize,
    pub images: Vec<Option<usize>>,
}

impl ArcMergeMap {
    pub fn image(&self, old: usize) -> Option<usize> {
        self.images.get(old).copied().flatten()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn parse_tuple(body: &str, line: usize) -> Result<[u32; 4]> {
    let nums: Vec<&str> = body.split(',').map(str::trim).collect();
    if nums.len() != 4 {
        return Err(Error::parse(line, format!("crossing `X[{body}]` needs four labels")));
    }
    let mut out = [0u32; 4];
    for (slot, n) in out.iter_mut().zip(nums) {
        *slot = n
            .parse()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| Error::parse(line, format!("bad edge label `{n}`")))?;
    }
    Ok(out)
}

impl LinkDiagram {
    pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
        let mut tuples = Vec::new();
        let mut orientations: BTreeMap<usize, (char, usize)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("component") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [i, "orientation", o] = parts.as_slice() else {
                    return Err(Error::parse(line_no, "expected `component <i> orientation <+|->`"));
                };
                let i: usize = i
                    .parse()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::parse(line_no, "component index must be a positive integer"))?;
                let o = match *o {
                    "+" => '+',
                    "-" => '-',
                    _ => return Err(Error::parse(line_no, "orientation must be `+` or `-`")),
                };
                if orientations.insert(i, (o, line_no)).is_some() {
                    return Err(Error::parse(line_no, format!("component {i} annotated twice")));
                }
                continue;
            }
            let mut rest = line;
            while !rest.is_empty() {
                let Some(body) = rest.strip_prefix("X[") else {
                    return Err(Error::parse(line_no, format!("unexpected text `{rest}`")));
                };
                let end = body
                    .find(']')
                    .ok_or_else(|| Error::parse(line_no, "unterminated crossing tuple"))?;
                tuples.push((parse_tuple(&body[..end], line_no)?, line_no));
                rest = body[end + 1..].trim_start_matches([',', ' ', '\t']);
            }
        }
        if tuples.is_empty() {
            return Err(Error::Diagram("no crossings".into()));
        }
        Self::from_tuples(&tuples.iter().map(|t| t.0).collect::<Vec<_>>(), &orientations)
    }

    fn from_tuples(
        tuples: &[[u32; 4]],
        orientations: &BTreeMap<usize, (char, usize)>,
    ) -> Result<LinkDiagram> {
        // every label fills exactly two slots
        let mut slots: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, t) in tuples.iter().enumerate() {
            for (pos, &label) in t.iter().enumerate() {
                slots.entry(label).or_default().push((c, pos));
            }
        }
        if let Some((label, s)) = slots.iter().find(|(_, s)| s.len() != 2) {
            return Err(Error::Diagram(format!(
                "edge {label} appears in {} slots, expected 2",
                s.len()
            )));
        }
        let other_slot = |label: u32, here: (usize, usize)| -> (usize, usize) {
            let s = &slots[&label];
            if s[0] == here {
                s[1]
            } else {
                s[0]
            }
        };

        // walk each strand from an incoming under-edge, marking slot heads
        let mut head: HashMap<(usize, usize), bool> = HashMap::new();
        let mut walks: Vec<Vec<u32>> = Vec::new();
        for c in 0..tuples.len() {
            if head.contains_key(&(c, 0)) {
                continue;
            }
            let start = (c, 0);
            let mut s = start;
            let mut edges = Vec::new();
            loop {
                if s.1 == 2 {
                    return Err(Error::Diagram(format!(
                        "inconsistent orientation at crossing {}: outgoing under-edge {} is entered",
                        s.0 + 1,
                        tuples[s.0][2]
                    )));
                }
                head.insert(s, true);
                let t = (s.0, s.1 ^ 2);
                if t.1 == 0 || head.insert(t, false).is_some() {
                    return Err(Error::Diagram(format!(
                        "inconsistent orientation at crossing {}",
                        t.0 + 1
                    )));
                }
                let edge = tuples[t.0][t.1];
                edges.push(edge);
                s = other_slot(edge, t);
                if s == start {
                    break;
                }
                if head.contains_key(&s) {
                    return Err(Error::Diagram(format!(
                        "inconsistent orientation at crossing {}",
                        s.0 + 1
                    )));
                }
            }
            walks.push(edges);
        }
        if head.len() != 4 * tuples.len() {
            return Err(Error::Diagram(
                "a component never passes under a crossing; add a kink such as X[1,1,2,2]".into(),
            ));
        }

        for w in &mut walks {
            let pos = w.iter().enumerate().min_by_key(|(_, &e)| e).unwrap().0;
            w.rotate_left(pos);
        }
        walks.sort_by_key(|w| w[0]);
        let comp_of: HashMap<u32, usize> = walks
            .iter()
            .enumerate()
            .flat_map(|(i, w)| w.iter().map(move |&e| (e, i)))
            .collect();

        let crossings = tuples
            .iter()
            .enumerate()
            .map(|(c, t)| Crossing {
                pd: *t,
                sign: if head[&(c, 3)] { 1 } else { -1 },
                over: comp_of[&t[1]],
                under: comp_of[&t[0]],
            })
            .collect();

        let mu = walks.len();
        let listed: BTreeSet<usize> = orientations.keys().copied().collect();
        let expected: BTreeSet<usize> = (1..=mu).collect();
        if listed != expected {
            return Err(Error::Diagram(format!(
                "diagram has {mu} components but orientation lines cover {:?}",
                listed
            )));
        }
        for (i, w) in walks.iter().enumerate() {
            let (o, line) = orientations[&(i + 1)];
            if let Some(actual) = orientation_of(w) {
                if actual != o {
                    return Err(Error::parse(
                        line,
                        format!("orientation `{o}` of component {} contradicts its crossings", i + 1),
                    ));
                }
            }
        }

        Ok(LinkDiagram {
            crossings,
            components: walks,
        })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Edge labels of component `i` in traversal order.
    pub fn component_edges(&self, i: usize) -> &[u32] {
        &self.components[i]
    }

    pub fn signs(&self) -> Vec<i8> {
        self.crossings.iter().map(|c| c.sign).collect()
    }

    /// Wirtinger arcs, numbered component by component in order of first
    /// appearance along each traversal. Arc `j` of component `i` is labelled
    /// `x{i}_{j}` (both 1-based).
    pub fn arcs(&self) -> Arcs {
        let labels: Vec<u32> = self.components.iter().flatten().copied().collect();
        let index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(labels.len());
        for c in &self.crossings {
            uf.union(index[&c.pd[1]], index[&c.pd[3]]);
        }
        let mut arc_of_root: HashMap<usize, usize> = HashMap::new();
        let mut arcs = Arcs {
            arc_of_edge: BTreeMap::new(),
            component: Vec::new(),
            labels: Vec::new(),
        };
        for (i, comp) in self.components.iter().enumerate() {
            let mut count = 0;
            for &e in comp {
                let root = uf.find(index[&e]);
                let arc = *arc_of_root.entry(root).or_insert_with(|| {
                    count += 1;
                    arcs.component.push(i);
                    arcs.labels.push(format!("x{}_{}", i + 1, count));
                    arcs.component.len() - 1
                });
                arcs.arc_of_edge.insert(e, arc);
            }
        }
        arcs
    }

    /// Wirtinger presentation: one generator per arc, one relator
    /// `o^δ · in · o^{-δ} · out^{-1}` per crossing, with the last crossing's
    /// relator dropped when that is needed for deficiency one. Split pieces
    /// without crossings (left behind by [`LinkDiagram::delete_component`])
    /// contribute trivial relators instead.
    pub fn wirtinger(&self) -> Result<Presentation> {
        let mu = self.num_components();
        let arcs = self.arcs();
        let generators: Vec<Generator> = arcs
            .labels
            .iter()
            .zip(&arcs.component)
            .map(|(label, &component)| Generator {
                label: label.clone(),
                component,
            })
            .collect();
        let mut relators: Vec<Relator> = self
            .crossings
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let over = arcs.arc_of_edge[&c.pd[1]];
                let inc = arcs.arc_of_edge[&c.under_in()];
                let out = arcs.arc_of_edge[&c.under_out()];
                Relator {
                    letters: vec![
                        Letter::new(over, c.sign),
                        Letter::new(inc, 1),
                        Letter::new(over, -c.sign),
                        Letter::new(out, -1),
                    ],
                    crossing: Some(k),
                }
            })
            .collect();
        let u = generators.len();
        if relators.len() == u {
            relators.pop();
        }
        while relators.len() + 1 < u {
            relators.push(Relator {
                letters: Vec::new(),
                crossing: None,
            });
        }
        Presentation::new(generators, relators, mu, Provenance::Wirtinger)
    }

    /// `l_i = ½ Σ signs` over crossings between component `i` and
    /// `component`, for every `i ≠ component` in order.
    pub fn linking_numbers(&self, component: usize) -> Result<Vec<i64>> {
        let mu = self.num_components();
        if component >= mu {
            return Err(Error::IndexOutOfRange {
                index: component,
                limit: mu,
            });
        }
        Ok((0..mu)
            .filter(|&i| i != component)
            .map(|i| {
                let twice: i64 = self
                    .crossings
                    .iter()
                    .filter(|c| {
                        (c.over == i && c.under == component) || (c.over == component && c.under == i)
                    })
                    .map(|c| c.sign as i64)
                    .sum();
                debug_assert!(twice % 2 == 0, "odd inter-component crossing sum");
                twice / 2
            })
            .collect())
    }

    /// Removes a component. Edges of the surviving components that were
    /// separated only by deleted crossings are merged and relabelled
    /// consecutively along each component.
    pub fn delete_component(&self, component: usize) -> Result<(LinkDiagram, ArcMergeMap)> {
        let mu = self.num_components();
        if mu < 2 {
            return Err(Error::Diagram("cannot delete the only component".into()));
        }
        if component >= mu {
            return Err(Error::IndexOutOfRange {
                index: component,
                limit: mu,
            });
        }
        let labels: Vec<u32> = self.components.iter().flatten().copied().collect();
        let index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(labels.len());
        for c in self.crossings.iter().filter(|c| c.involves(component)) {
            if c.under != component {
                uf.union(index[&c.pd[0]], index[&c.pd[2]]);
            }
            if c.over != component {
                uf.union(index[&c.pd[1]], index[&c.pd[3]]);
            }
        }

        let mut new_label: HashMap<usize, u32> = HashMap::new();
        let mut components = Vec::new();
        let mut next = 1u32;
        for (i, comp) in self.components.iter().enumerate() {
            if i == component {
                continue;
            }
            // start the walk at an edge boundary so no merged class wraps
            let roots: Vec<usize> = comp.iter().map(|e| uf.find(index[e])).collect();
            let k = roots.len();
            let start = (0..k).find(|&p| roots[p] != roots[(p + k - 1) % k]).unwrap_or(0);
            let mut walk = Vec::new();
            for p in 0..k {
                let r = roots[(start + p) % k];
                if let std::collections::hash_map::Entry::Vacant(v) = new_label.entry(r) {
                    v.insert(next);
                    walk.push(next);
                    next += 1;
                }
            }
            components.push(walk);
        }
        let renumber = |c: usize| if c > component { c - 1 } else { c };
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .filter(|c| !c.involves(component))
            .map(|c| Crossing {
                pd: c.pd.map(|e| new_label[&uf.find(index[&e])]),
                sign: c.sign,
                over: renumber(c.over),
                under: renumber(c.under),
            })
            .collect();
        let reduced = LinkDiagram {
            crossings,
            components,
        };

        let old_arcs = self.arcs();
        let new_arcs = reduced.arcs();
        let mut images = vec![None; old_arcs.labels.len()];
        for (&e, &arc) in &old_arcs.arc_of_edge {
            if old_arcs.component[arc] != component {
                let merged = new_label[&uf.find(index[&e])];
                images[arc] = Some(new_arcs.arc_of_edge[&merged]);
            }
        }
        Ok((
            reduced,
            ArcMergeMap {
                deleted_component: component,
                images,
            },
        ))
    }
}

/// `+` when the labels increase along the traversal, `None` when a component
/// is too short to tell.
fn orientation_of(walk: &[u32]) -> Option<char> {
    if walk.len() < 3 {
        return None;
    }
    Some(if walk[1] < walk[walk.len() - 1] { '+' } else { '-' })
}

impl fmt::Display for LinkDiagram {
    /// Writes the PD file format; crossingless components cannot be expressed
    /// and are noted in a comment.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.components.iter().enumerate() {
            writeln!(f, "component {} orientation {}", i + 1, orientation_of(w).unwrap_or('+'))?;
        }
        for (i, w) in self.components.iter().enumerate() {
            if !self.crossings.iter().any(|c| c.involves(i)) {
                writeln!(f, "# component {} has no crossings (edge {})", i + 1, w[0])?;
            }
        }
        for c in &self.crossings {
            writeln!(f, "X[{},{},{},{}]", c.pd[0], c.pd[1], c.pd[2], c.pd[3])?;
        }
        Ok(())
    }
}
