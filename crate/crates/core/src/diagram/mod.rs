//! Oriented link diagrams as planar 4-valent maps in a PD-style text format.
//!
//! ```text
//! diagram 3
//! X + 2 4 3 1
//! X + 4 6 5 3
//! X + 6 2 1 5
//! O 7
//! ```
//!
//! Each `X` line lists the four edge labels met counterclockwise around the
//! crossing, starting from the incoming under-edge. The under strand runs from
//! port 0 to port 2. For a positive crossing the over strand runs from port 3
//! to port 1, for a negative one from port 1 to port 3. An `O` line is a
//! crossingless circle.

pub mod markov;
pub mod seifert;
pub mod skein;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::BraidWord;

pub use markov::{destabilize, exchange_factorization, exchange_move, stabilize};
pub use seifert::{find_reducing_arc, height, seifert_smooth, to_closed_braid, ReducingArc, SeifertPicture, YamadaVogel};
pub use skein::{homfly_via_skein, homfly_via_skein_with_budget, DEFAULT_SKEIN_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub sign: i8,
    pub ports: [u32; 4],
}

impl Crossing {
    pub fn is_incoming(&self, port: usize) -> bool {
        match port {
            0 => true,
            2 => false,
            1 => self.sign < 0,
            _ => self.sign > 0,
        }
    }

    /// Outgoing port reached from an incoming one under oriented smoothing.
    pub fn smoothing_exit(&self, port: usize) -> usize {
        match (self.sign > 0, port) {
            (true, 0) => 1,
            (true, 3) => 2,
            (false, 0) => 3,
            (false, 1) => 2,
            _ => unreachable!("port {port} is not incoming"),
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.ports;
        if self.sign > 0 {
            Crossing { sign: -1, ports: [d, a, b, c] }
        } else {
            Crossing { sign: 1, ports: [b, c, d, a] }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEnds {
    pub tail: (usize, usize),
    pub head: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Faces of the planar map: corner `(c, k)` sits between ports `k` and `k+1`.
#[derive(Clone, Debug)]
pub struct Faces {
    pub corner_face: Vec<[usize; 4]>,
    pub count: usize,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: Vec<u32>) -> Result<Self> {
        let d = LinkDiagram { crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn new_unchecked(crossings: Vec<Crossing>, free_loops: Vec<u32>) -> Self {
        LinkDiagram { crossings, free_loops }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> &[u32] {
        &self.free_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    fn validate(&self) -> Result<()> {
        let mut seen: HashMap<u32, (usize, usize)> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidDiagram(format!("crossing {} has sign {}", ci + 1, c.sign)));
            }
            for (p, &l) in c.ports.iter().enumerate() {
                let e = seen.entry(l).or_insert((0, 0));
                if c.is_incoming(p) {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (l, (i, o)) in &seen {
            if (*i, *o) != (1, 1) {
                return Err(Error::InvalidDiagram(format!("edge {l} must enter one crossing and leave one, found {i} heads and {o} tails")));
            }
        }
        let mut loops = BTreeSet::new();
        for l in &self.free_loops {
            if seen.contains_key(l) || !loops.insert(*l) {
                return Err(Error::InvalidDiagram(format!("free loop label {l} is reused")));
            }
        }
        let faces = self.faces();
        let comps = self.connected_components();
        for comp in &comps {
            let v = comp.len() as i64;
            let e = 2 * v;
            let f: BTreeSet<usize> = comp.iter().flat_map(|&c| faces.corner_face[c].iter().copied()).collect();
            if v - e + f.len() as i64 != 2 {
                return Err(Error::InvalidDiagram(format!("rotation system is not planar (V - E + F = {})", v - e + f.len() as i64)));
            }
        }
        Ok(())
    }

    pub fn edges(&self) -> BTreeMap<u32, EdgeEnds> {
        let mut tails = HashMap::new();
        let mut heads = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (p, &l) in c.ports.iter().enumerate() {
                if c.is_incoming(p) {
                    heads.insert(l, (ci, p));
                } else {
                    tails.insert(l, (ci, p));
                }
            }
        }
        tails.into_iter().map(|(l, t)| (l, EdgeEnds { tail: t, head: heads[&l] })).collect()
    }

    pub fn faces(&self) -> Faces {
        let edges = self.edges();
        let n = self.crossings.len();
        let mut corner_face = vec![[usize::MAX; 4]; n];
        let mut count = 0;
        for c in 0..n {
            for k in 0..4 {
                if corner_face[c][k] != usize::MAX {
                    continue;
                }
                let (mut cc, mut kk) = (c, k);
                while corner_face[cc][kk] == usize::MAX {
                    corner_face[cc][kk] = count;
                    let q = (kk + 1) % 4;
                    let e = edges[&self.crossings[cc].ports[q]];
                    let other = if e.tail == (cc, q) { e.head } else { e.tail };
                    (cc, kk) = other;
                }
                count += 1;
            }
        }
        Faces { corner_face, count }
    }

    /// Face on the given side of an edge, relative to its orientation.
    pub fn edge_face(&self, faces: &Faces, ends: &EdgeEnds, side: Side) -> usize {
        let (c, p) = ends.tail;
        match side {
            Side::Left => faces.corner_face[c][p],
            Side::Right => faces.corner_face[c][(p + 3) % 4],
        }
    }

    /// Crossing sets of the connected pieces of the underlying 4-valent graph.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for e in self.edges().values() {
            let (a, b) = (find(&mut parent, e.tail.0), find(&mut parent, e.head.0));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            let r = find(&mut parent, c);
            groups.entry(r).or_default().push(c);
        }
        groups.into_values().collect()
    }

    /// Link components as cyclic edge sequences, starting at their least label.
    pub fn link_components(&self) -> Vec<Vec<u32>> {
        let edges = self.edges();
        let mut done = BTreeSet::new();
        let mut out = Vec::new();
        for &start in edges.keys() {
            if done.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = start;
            loop {
                done.insert(e);
                comp.push(e);
                let (c, p) = edges[&e].head;
                e = self.crossings[c].ports[(p + 2) % 4];
                if e == start {
                    break;
                }
            }
            out.push(comp);
        }
        for &l in &self.free_loops {
            out.push(vec![l]);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.link_components().len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.ports;
                Crossing { sign: -c.sign, ports: [a, d, cc, b] }
            })
            .collect();
        // reflecting the plane reverses the rotation at every crossing
        LinkDiagram { crossings, free_loops: self.free_loops.clone() }
    }

    fn max_label(&self) -> u32 {
        self.crossings.iter().flat_map(|c| c.ports).chain(self.free_loops.iter().copied()).max().unwrap_or(0)
    }

    /// Reidemeister II finger move pushing edge `a` across edge `b` inside the
    /// face lying on side `side_a` of `a` and side `side_b` of `b`.
    pub fn finger_move(&self, a: u32, side_a: Side, b: u32, side_b: Side, a_over: bool) -> Result<LinkDiagram> {
        if a == b {
            return Err(Error::InvalidArc("a finger move needs two distinct edges".into()));
        }
        let edges = self.edges();
        let (ea, eb) = match (edges.get(&a), edges.get(&b)) {
            (Some(x), Some(y)) => (*x, *y),
            _ => return Err(Error::InvalidArc(format!("edges {a}, {b} are not crossing edges"))),
        };
        let faces = self.faces();
        if self.edge_face(&faces, &ea, side_a) != self.edge_face(&faces, &eb, side_b) {
            return Err(Error::InvalidArc(format!("edges {a} and {b} do not share the chosen face")));
        }
        let base = self.max_label();
        let (a2, a3, b2, b3) = (base + 1, base + 2, base + 3, base + 4);
        let mut crossings = self.crossings.clone();
        crossings[ea.head.0].ports[ea.head.1] = a3;
        crossings[eb.head.0].ports[eb.head.1] = b3;
        // local picture: b horizontal with the face above it, a above the face;
        // directions E=0, N=1, W=2, S=3 in counterclockwise order
        let a_east = side_a == Side::Right;
        let b_east = side_b == Side::Left;
        let (b_in_dir, b_out_dir) = if b_east { (2, 0) } else { (0, 2) };
        // P1 is where a dives under/over b, P2 where it comes back
        let p1_first = a_east == b_east;
        let (b_at_p1, b_at_p2) = if p1_first { ((b, b2), (b2, b3)) } else { ((b2, b3), (b, b2)) };
        let make = |a_in: (usize, u32), a_out: (usize, u32), b_in: u32, b_out: u32| -> Crossing {
            let mut slots = [0u32; 4];
            slots[a_in.0] = a_in.1;
            slots[a_out.0] = a_out.1;
            slots[b_in_dir] = b_in;
            slots[b_out_dir] = b_out;
            let under_in = if a_over { b_in_dir } else { a_in.0 };
            let over_in = if a_over { a_in.0 } else { b_in_dir };
            let ports = [0, 1, 2, 3].map(|k| slots[(under_in + k) % 4]);
            let over_port = (over_in + 4 - under_in) % 4;
            Crossing { sign: if over_port == 3 { 1 } else { -1 }, ports }
        };
        crossings.push(make((1, a), (3, a2), b_at_p1.0, b_at_p1.1));
        crossings.push(make((3, a2), (1, a3), b_at_p2.0, b_at_p2.1));
        LinkDiagram::new(crossings, self.free_loops.clone())
    }

    /// Edges bordering each face, with the side the face lies on.
    pub fn face_boundaries(&self) -> Vec<Vec<(u32, Side)>> {
        let faces = self.faces();
        let mut out = vec![Vec::new(); faces.count];
        for (l, e) in self.edges() {
            for s in [Side::Left, Side::Right] {
                let f = self.edge_face(&faces, &e, s);
                if !out[f].contains(&(l, s)) {
                    out[f].push((l, s));
                }
            }
        }
        out
    }

    /// Relabels edges 1.. in order of first appearance.
    pub fn canonical_labels(&self) -> LinkDiagram {
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut next = 1;
        let mut lab = |l: u32, map: &mut HashMap<u32, u32>| {
            *map.entry(l).or_insert_with(|| {
                next += 1;
                next - 1
            })
        };
        let crossings = self.crossings.iter().map(|c| Crossing { sign: c.sign, ports: c.ports.map(|l| lab(l, &mut map)) }).collect();
        let free_loops = self.free_loops.iter().map(|&l| lab(l, &mut map)).collect();
        LinkDiagram { crossings, free_loops }
    }
}

/// Standard closed-braid diagram: strands run upward and close around the side.
pub fn closure(w: &BraidWord) -> LinkDiagram {
    let n = w.strands();
    let mut current: Vec<u32> = (1..=n as u32).collect();
    let mut next = n as u32 + 1;
    let mut crossings = Vec::with_capacity(w.len());
    let mut touched = vec![false; n];
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        touched[i] = true;
        touched[i + 1] = true;
        let (left_in, right_in) = (current[i], current[i + 1]);
        let (left_out, right_out) = (next, next + 1);
        next += 2;
        let ports = if l > 0 { [right_in, right_out, left_out, left_in] } else { [left_in, right_in, right_out, left_out] };
        crossings.push(Crossing { sign: if l > 0 { 1 } else { -1 }, ports });
        current[i] = left_out;
        current[i + 1] = right_out;
    }
    let rename: HashMap<u32, u32> = (0..n).filter(|&p| touched[p]).map(|p| (current[p], p as u32 + 1)).collect();
    for c in &mut crossings {
        for l in &mut c.ports {
            if let Some(&r) = rename.get(l) {
                *l = r;
            }
        }
    }
    let free_loops = (0..n).filter(|&p| !touched[p]).map(|p| p as u32 + 1).collect();
    LinkDiagram::new_unchecked(crossings, free_loops).canonical_labels()
}

/// Mirror of the standard minimal diagram of the knot 5₂, all crossings positive.
pub fn five_two() -> LinkDiagram {
    "diagram 5\nX + 1 5 2 4\nX + 3 9 4 8\nX + 5 1 6 10\nX + 9 7 10 6\nX + 7 3 8 2\n".parse().expect("valid diagram")
}

/// Closure of `σ₁³`.
pub fn trefoil() -> LinkDiagram {
    closure(&BraidWord::new(2, vec![1, 1, 1]).expect("valid"))
}

/// Closure of `σ₁σ₂⁻¹σ₁σ₂⁻¹`.
pub fn figure_eight() -> LinkDiagram {
    closure(&BraidWord::new(3, vec![1, -2, 1, -2]).expect("valid"))
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "diagram {}", self.crossings.len())?;
        for c in &self.crossings {
            let [a, b, cc, d] = c.ports;
            writeln!(f, "X {} {a} {b} {cc} {d}", if c.sign > 0 { '+' } else { '-' })?;
        }
        for l in &self.free_loops {
            writeln!(f, "O {l}")?;
        }
        Ok(())
    }
}

impl FromStr for LinkDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty diagram".into()))?;
        let declared: usize = header
            .strip_prefix("diagram")
            .map(str::trim)
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `diagram <crossings>`, got `{header}`")))?;
        let mut crossings = Vec::new();
        let mut free_loops = Vec::new();
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["X", sign, a, b, c, d] => {
                    let sign = match *sign {
                        "+" | "+1" | "1" => 1,
                        "-" | "-1" => -1,
                        other => return Err(Error::Parse(format!("bad crossing sign `{other}`"))),
                    };
                    let lab = |x: &str| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad edge label `{x}`")));
                    crossings.push(Crossing { sign, ports: [lab(a)?, lab(b)?, lab(c)?, lab(d)?] });
                }
                ["O", l] => free_loops.push(l.parse::<u32>().map_err(|_| Error::Parse(format!("bad loop label `{l}`")))?),
                _ => return Err(Error::Parse(format!("bad diagram line `{line}`"))),
            }
        }
        if crossings.len() != declared {
            return Err(Error::Parse(format!("header declares {declared} crossings, found {}", crossings.len())));
        }
        if crossings.is_empty() && free_loops.is_empty() {
            return Err(Error::InvalidDiagram("a diagram needs at least one component".into()));
        }
        LinkDiagram::new(crossings, free_loops)
    }
}
