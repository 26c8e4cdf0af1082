// SPDX-License-Identifier: MIT

//! The S5 automorphism group generated by s, t, i, its actions on labels
//! and quintuplets, and the folded icosidodecahedron connection graph.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::Label;
use crate::error::{Error, Result};
use crate::representation::Quintuplet;

/// Word for the rotation r in the letters s, t, i.
pub const R_WORD: &str = "isti";

/// Permutation of the points {0,1,2,3,4}; `perm[k]` is the image of `k`.
/// Point 0 stands for the full set {1,2,3,4}.
pub type Perm = [u8; 5];

pub const IDENTITY: Perm = [0, 1, 2, 3, 4];

fn letter_perm(c: char) -> Option<Perm> {
    match c {
        's' => Some([1, 0, 4, 3, 2]),
        't' => Some([0, 3, 1, 2, 4]),
        'i' => Some([4, 1, 2, 3, 0]),
        _ => None,
    }
}

pub fn compose(g: &Perm, h: &Perm) -> Perm {
    let mut out = [0u8; 5];
    for k in 0..5 {
        out[k] = g[h[k] as usize];
    }
    out
}

pub fn invert(g: &Perm) -> Perm {
    let mut out = [0u8; 5];
    for k in 0..5 {
        out[g[k] as usize] = k as u8;
    }
    out
}

/// Rewrites `r` as `isti` and drops `e`.
pub fn expand_word(word: &str) -> Result<String> {
    let mut out = String::new();
    for c in word.chars() {
        match c {
            's' | 't' | 'i' => out.push(c),
            'r' => out.push_str(R_WORD),
            'e' => {}
            _ => return Err(Error::Parse(format!("unknown letter {c:?} in word {word:?}"))),
        }
    }
    Ok(out)
}

/// A group element: a permutation plus one word realizing it.
#[derive(Clone, Debug, Serialize)]
pub struct GroupElement {
    pub perm: Perm,
    pub word: String,
}

impl PartialEq for GroupElement {
    fn eq(&self, o: &Self) -> bool {
        self.perm == o.perm
    }
}
impl Eq for GroupElement {}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.word)
        }
    }
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { perm: IDENTITY, word: String::new() }
    }

    /// Parses a word over s, t, i (r and e also accepted). The word
    /// `x1 x2 ... xk` is the composite map `x1 o x2 o ... o xk`.
    pub fn from_word(word: &str) -> Result<Self> {
        let w = expand_word(word)?;
        let perm = w.chars().fold(IDENTITY, |g, c| compose(&g, &letter_perm(c).expect("expanded word")));
        let g = GroupElement { perm, word: w };
        debug_assert!(Label::all().iter().all(|&l| act_on_label(&g, l) == act_on_label_tables(&g, l)));
        Ok(g)
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        GroupElement { perm: compose(&self.perm, &o.perm), word: format!("{}{}", self.word, o.word) }
    }

    /// The inverse with the shortest available word.
    pub fn inverse(&self) -> GroupElement {
        group().element(&invert(&self.perm)).clone()
    }

    /// The same element carrying the shortest word found by breadth-first search.
    pub fn canonical(&self) -> GroupElement {
        group().element(&self.perm).clone()
    }

    pub fn is_identity(&self) -> bool {
        self.perm == IDENTITY
    }
}

fn point_set(k: u8) -> u8 {
    if k == 0 {
        0b1111
    } else {
        1 << (k - 1)
    }
}

/// Subset action: `g(C_I) = C_{XOR_{i in I} S(g(i))}` with `S(0) = {1,2,3,4}`.
pub fn act_on_label(g: &GroupElement, l: Label) -> Label {
    let bits = l.indices().into_iter().fold(0u8, |acc, i| acc ^ point_set(g.perm[i as usize]));
    Label::from_bits(bits).expect("bijection maps nonempty labels to nonempty labels")
}

fn table(letter: char) -> &'static BTreeMap<Label, Label> {
    static TABLES: OnceLock<HashMap<char, BTreeMap<Label, Label>>> = OnceLock::new();
    let all = TABLES.get_or_init(|| {
        let raw: [(char, [(&str, &str); 15]); 3] = [
            (
                's',
                [
                    ("12", "123"),
                    ("13", "124"),
                    ("14", "134"),
                    ("23", "34"),
                    ("24", "24"),
                    ("34", "23"),
                    ("123", "12"),
                    ("124", "13"),
                    ("134", "14"),
                    ("234", "234"),
                    ("1", "1234"),
                    ("2", "4"),
                    ("3", "3"),
                    ("4", "2"),
                    ("1234", "1"),
                ],
            ),
            (
                't',
                [
                    ("12", "13"),
                    ("13", "23"),
                    ("14", "34"),
                    ("23", "12"),
                    ("24", "14"),
                    ("34", "24"),
                    ("123", "123"),
                    ("124", "134"),
                    ("134", "234"),
                    ("234", "124"),
                    ("1", "3"),
                    ("2", "1"),
                    ("3", "2"),
                    ("4", "4"),
                    ("1234", "1234"),
                ],
            ),
            (
                'i',
                [
                    ("12", "12"),
                    ("13", "13"),
                    ("14", "234"),
                    ("23", "23"),
                    ("24", "134"),
                    ("34", "124"),
                    ("123", "123"),
                    ("124", "34"),
                    ("134", "24"),
                    ("234", "14"),
                    ("1", "1"),
                    ("2", "2"),
                    ("3", "3"),
                    ("4", "1234"),
                    ("1234", "4"),
                ],
            ),
        ];
        raw.iter()
            .map(|(c, rows)| {
                let m = rows.iter().map(|(a, b)| (Label::parse(a).unwrap(), Label::parse(b).unwrap())).collect();
                (*c, m)
            })
            .collect()
    });
    &all[&letter]
}

/// Letter-by-letter action through the explicit generator tables.
pub fn act_on_label_tables(g: &GroupElement, l: Label) -> Label {
    g.word.chars().rev().fold(l, |acc, c| table(c)[&acc])
}

fn act_letter_on_quintuplet(c: char, z: &Quintuplet) -> Quintuplet {
    let Quintuplet { j1, j2, j3, j4, j0 } = *z;
    match c {
        's' => Quintuplet::new(j0, j4, j3, j2, j1),
        't' => Quintuplet::new(j2, -j3 - 1.0, -j1 - 1.0, j4, j0),
        'i' => Quintuplet::new(j1, j2, j3, j0, j4),
        _ => unreachable!("expanded word"),
    }
}

/// Action on quintuplets along the word, last letter first.
pub fn act_on_quintuplet(g: &GroupElement, j: &Quintuplet) -> Quintuplet {
    g.word.chars().rev().fold(*j, |acc, c| act_letter_on_quintuplet(c, &acc))
}

/// The full group, built once by breadth-first search over words.
pub struct Group {
    elements: Vec<GroupElement>,
    index: HashMap<Perm, usize>,
}

impl Group {
    fn generate(letters: &str) -> Group {
        let gens: Vec<GroupElement> =
            letters.chars().map(|c| GroupElement::from_word(&c.to_string()).unwrap()).collect();
        let mut elements = vec![GroupElement::identity()];
        let mut index = HashMap::from([(IDENTITY, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &gens {
                let h = elements[k].mul(g);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(h.perm) {
                    e.insert(elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Group { elements, index }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, perm: &Perm) -> &GroupElement {
        &self.elements[self.index[perm]]
    }
}

/// The group generated by s, t, i.
pub fn group() -> &'static Group {
    static G: OnceLock<Group> = OnceLock::new();
    G.get_or_init(|| Group::generate("sti"))
}

/// The subgroup generated by s and t.
pub fn alternating_subgroup() -> Group {
    Group::generate("st")
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn w(s: &str) -> GroupElement {
    GroupElement::from_word(s).expect("static word")
}

fn pow(g: &GroupElement, k: usize) -> GroupElement {
    (0..k).fold(GroupElement::identity(), |acc, _| acc.mul(g))
}

/// Group relations, Coxeter presentation, group orders and r^5 = e.
pub fn group_certificates() -> Vec<Certificate> {
    let mut out = Vec::new();
    let mut check =
        |name: &str, ok: bool, detail: String| out.push(Certificate { name: name.into(), passed: ok, detail });
    let e = GroupElement::identity();
    let rels: [(&str, GroupElement, GroupElement); 8] = [
        ("s^2 = e", pow(&w("s"), 2), e.clone()),
        ("t^3 = e", pow(&w("t"), 3), e.clone()),
        ("i^2 = e", pow(&w("i"), 2), e.clone()),
        ("(st)^5 = e", pow(&w("st"), 5), e.clone()),
        ("(si)^4 = e", pow(&w("si"), 4), e.clone()),
        ("(sti)^6 = e", pow(&w("sti"), 6), e.clone()),
        ("ti = it", w("ti"), w("it")),
        ("(ists)^2 = e", pow(&w("ists"), 2), e.clone()),
    ];
    for (name, a, b) in rels {
        check(name, a == b, String::new());
    }

    let h = [w("sis"), w("sist"), w("ists"), w("i")];
    for (k, hk) in h.iter().enumerate() {
        check(&format!("h{}^2 = e", k + 1), pow(hk, 2) == e, String::new());
    }
    for a in 0..4 {
        for b in a + 1..4 {
            let (x, y) = (&h[a], &h[b]);
            if b - a == 1 {
                check(
                    &format!("h{}h{}h{} = h{}h{}h{}", a + 1, b + 1, a + 1, b + 1, a + 1, b + 1),
                    x.mul(y).mul(x) == y.mul(x).mul(y),
                    String::new(),
                );
            } else {
                check(&format!("h{}h{} = h{}h{}", a + 1, b + 1, b + 1, a + 1), x.mul(y) == y.mul(x), String::new());
            }
        }
    }
    check("i = h4", w("i") == h[3], String::new());
    check("t = h1 h2", w("t") == h[0].mul(&h[1]), String::new());
    let q = h[1].mul(&h[0]).mul(&h[2]).mul(&h[3]);
    check("s = (h2 h1 h3 h4)^2 h2 h1", w("s") == q.mul(&q).mul(&h[1]).mul(&h[0]), String::new());

    let g = group();
    check("order of <s,t,i> is 120", g.order() == 120, format!("order {}", g.order()));
    let a5 = alternating_subgroup();
    check("order of <s,t> is 60", a5.order() == 60, format!("order {}", a5.order()));

    let r5 = pow(&w("r"), 5);
    let labels_ok = Label::all().iter().all(|&l| act_on_label(&r5, l) == l);
    let jt = Quintuplet::new(1.3, 0.7, 2.9, 0.4, 1.1);
    let quint_ok = act_on_quintuplet(&r5, &jt).max_abs_diff(&jt) < 1e-12;
    check("r^5 = e", r5.is_identity() && labels_ok && quint_ok, String::new());

    let table_ok =
        g.elements().iter().all(|x| Label::all().iter().all(|&l| act_on_label(x, l) == act_on_label_tables(x, l)));
    check("subset action matches generator tables", table_ok, String::new());
    out
}

/// Vertex of the connection graph: an unordered commuting pair of
/// non-central generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex(pub Label, pub Label);

impl Vertex {
    pub fn new(a: Label, b: Label) -> Vertex {
        if a <= b {
            Vertex(a, b)
        } else {
            Vertex(b, a)
        }
    }

    fn shares_one(&self, o: &Vertex) -> bool {
        let s = [self.0, self.1];
        let t = [o.0, o.1];
        s.iter().filter(|x| t.contains(x)).count() == 1
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

pub struct Graph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn build() -> Graph {
        let labels: Vec<Label> = Label::all().into_iter().filter(|l| !l.is_central()).collect();
        let mut vertices = Vec::new();
        for (k, &a) in labels.iter().enumerate() {
            for &b in &labels[k + 1..] {
                if a.commutes_with(b) {
                    vertices.push(Vertex::new(a, b));
                }
            }
        }
        vertices.sort();
        let n = vertices.len();
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for a in 0..n {
            for b in a + 1..n {
                if vertices[a].shares_one(&vertices[b]) {
                    edges.push((a, b));
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        Graph { vertices, edges, adj }
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn neighbours(&self, k: usize) -> &[usize] {
        &self.adj[k]
    }

    pub fn adjacent(&self, u: &Vertex, v: &Vertex) -> bool {
        u.shares_one(v) && self.index_of(u).is_some() && self.index_of(v).is_some()
    }

    /// Shortest vertex path by breadth-first search.
    pub fn vertex_path(&self, u: &Vertex, v: &Vertex) -> Result<Vec<Vertex>> {
        let s = self.index_of(u).ok_or_else(|| Error::Path(format!("{u} is not a vertex")))?;
        let t = self.index_of(v).ok_or_else(|| Error::Path(format!("{v} is not a vertex")))?;
        let mut prev = vec![usize::MAX; self.vertices.len()];
        prev[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            if x == t {
                break;
            }
            for &y in &self.adj[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return Err(Error::Path(format!("no path from {u} to {v}")));
        }
        let mut path = vec![t];
        while *path.last().unwrap() != s {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        Ok(path.into_iter().map(|k| self.vertices[k]).collect())
    }

    /// Shortest path realized by group elements whose vertices follow it.
    pub fn path(&self, u: &Vertex, v: &Vertex) -> Result<Vec<GroupElement>> {
        self.vertex_path(u, v)?.iter().map(representative).collect()
    }
}

/// `(g^{-1}(C12), g^{-1}(C123))`.
pub fn vertex_of(g: &GroupElement) -> Vertex {
    let inv = g.inverse();
    Vertex::new(act_on_label(&inv, Label::parse("12").unwrap()), act_on_label(&inv, Label::parse("123").unwrap()))
}

/// The element with the shortest word among those attached to a vertex.
pub fn representative(v: &Vertex) -> Result<GroupElement> {
    group()
        .elements()
        .iter()
        .find(|g| vertex_of(g) == *v)
        .cloned()
        .ok_or_else(|| Error::Path(format!("{v} is not attached to any group element")))
}
