//! Normal planar graphs with rotation systems: face traversal
//! (pseudocycles), tree circuits, graph presentations of braid-like
//! groups/monoids, and the half-twist assignment for lower-arc drawings.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::band::{band_to_artin, BandGen, BandWord};
use crate::error::{Error, Result};
use crate::pres::{GenLabel, PLetter, Presentation};
use crate::word::BraidWord;

/// A connected loop-free planar graph given combinatorially: a clockwise
/// rotation system plus the designated outer face. Vertices carry arbitrary
/// positive integer ids, edges string ids.
#[derive(Debug, Clone)]
pub struct PlanarGraph {
    vertices: Vec<usize>,
    /// (id, endpoint, endpoint)
    edges: Vec<(String, usize, usize)>,
    /// per vertex: incident edge indices in clockwise order
    rotation: BTreeMap<usize, Vec<usize>>,
    /// the outer face as a cyclic edge-id walk
    outer_face: Vec<usize>,
    /// distinguished (punctured) vertices
    distinguished: Vec<usize>,
    /// optional per-edge orientation (tail, head)
    orientation: BTreeMap<usize, (usize, usize)>,
}

/// A directed edge: (edge index, traversed from .1 to .2).
type Dart = (usize, usize, usize);

impl PlanarGraph {
    pub fn new(
        vertices: Vec<usize>,
        edges: Vec<(String, usize, usize)>,
        rotation: BTreeMap<usize, Vec<usize>>,
        outer_face: Vec<usize>,
        distinguished: Vec<usize>,
        orientation: BTreeMap<usize, (usize, usize)>,
    ) -> Result<Self> {
        let g = PlanarGraph {
            vertices,
            edges,
            rotation,
            outer_face,
            distinguished,
            orientation,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let vset: BTreeSet<usize> = self.vertices.iter().cloned().collect();
        if vset.len() != self.vertices.len() {
            return Err(Error::Graph("duplicate vertex ids".into()));
        }
        let mut seen_ids = BTreeSet::new();
        for (id, u, v) in &self.edges {
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {u}")));
            }
            if !vset.contains(u) || !vset.contains(v) {
                return Err(Error::Graph(format!("edge {id} has unknown endpoint")));
            }
            if !seen_ids.insert(id.clone()) {
                return Err(Error::Graph(format!("duplicate edge id {id}")));
            }
        }
        // rotation lists must be permutations of the incident edges
        for &v in &self.vertices {
            let incident: BTreeSet<usize> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, (_, a, b))| *a == v || *b == v)
                .map(|(k, _)| k)
                .collect();
            let rot = self.rotation.get(&v).cloned().unwrap_or_default();
            let rotset: BTreeSet<usize> = rot.iter().cloned().collect();
            if rotset != incident || rot.len() != incident.len() {
                return Err(Error::Graph(format!(
                    "rotation at vertex {v} does not list its incident edges"
                )));
            }
        }
        if !self.edges.is_empty() && !self.is_connected() {
            return Err(Error::Graph("graph is not connected".into()));
        }
        // the outer face must be one of the traversal faces
        if !self.edges.is_empty() {
            let faces = self.faces();
            let outer: Vec<usize> = self.outer_face.clone();
            let found = faces
                .iter()
                .filter(|f| {
                    let ids: Vec<usize> = f.iter().map(|d| d.0).collect();
                    cyclic_equal(&ids, &outer)
                })
                .count();
            if found == 0 {
                return Err(Error::Graph(
                    "outer_face does not match any traversal face".into(),
                ));
            }
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.vertices[0]];
        seen.insert(self.vertices[0]);
        while let Some(v) = stack.pop() {
            for (_, a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if *x == v && seen.insert(*y) {
                        stack.push(*y);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_id(&self, k: usize) -> &str {
        &self.edges[k].0
    }

    pub fn edge_endpoints(&self, k: usize) -> (usize, usize) {
        (self.edges[k].1, self.edges[k].2)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|(e, _, _)| e == id)
    }

    pub fn distinguished(&self) -> &[usize] {
        &self.distinguished
    }

    /// The same graph with the given vertices marked as punctures.
    pub fn with_distinguished(mut self, vs: Vec<usize>) -> Self {
        self.distinguished = vs;
        self
    }

    pub fn orientation_of(&self, k: usize) -> (usize, usize) {
        self.orientation
            .get(&k)
            .cloned()
            .unwrap_or((self.edges[k].1, self.edges[k].2))
    }

    fn degree(&self, v: usize) -> usize {
        self.rotation.get(&v).map_or(0, |r| r.len())
    }

    fn other_end(&self, k: usize, v: usize) -> usize {
        let (a, b) = self.edge_endpoints(k);
        if a == v {
            b
        } else {
            a
        }
    }

    /// The next directed edge of the face walk: the clockwise successor of
    /// the arrival edge in the rotation at the arrival vertex (a uni-valent
    /// vertex sends the walk back along the same edge).
    fn next_dart(&self, dart: Dart) -> Dart {
        let (e, _, v) = dart;
        let rot = &self.rotation[&v];
        let pos = rot.iter().position(|&k| k == e).expect("edge at vertex");
        let next = rot[(pos + 1) % rot.len()];
        (next, v, self.other_end(next, v))
    }

    /// All face walks of the embedding, each as a cyclic dart sequence.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut darts: BTreeSet<Dart> = BTreeSet::new();
        for (k, (_, a, b)) in self.edges.iter().enumerate() {
            darts.insert((k, *a, *b));
            darts.insert((k, *b, *a));
        }
        let mut out = Vec::new();
        while let Some(&start) = darts.iter().next() {
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                walk.push(cur);
                darts.remove(&cur);
                cur = self.next_dart(cur);
                if cur == start {
                    break;
                }
            }
            out.push(walk);
        }
        out
    }

    /// The pseudocycles: one edge-id sequence per bounded face, uni-valent
    /// vertices contributing their pendant edge twice.
    pub fn pseudocycles(&self) -> Result<Vec<Vec<usize>>> {
        if self.edges.is_empty() {
            return Ok(Vec::new());
        }
        let faces = self.faces();
        let mut outer_found = false;
        let mut out = Vec::new();
        for f in &faces {
            let ids: Vec<usize> = f.iter().map(|d| d.0).collect();
            if !outer_found && cyclic_equal(&ids, &self.outer_face) {
                outer_found = true;
                continue;
            }
            out.push(ids);
        }
        if !outer_found {
            return Err(Error::Graph("outer face not among the faces".into()));
        }
        Ok(out)
    }

    /// The circuit δ_{x,y}(Δ) of a maximal tree: starting along `start_edge`
    /// from x to y, the walk passes twice through every tree edge.
    pub fn tree_circuit(
        &self,
        tree: &BTreeSet<usize>,
        start_edge: usize,
        from: usize,
    ) -> Result<Vec<usize>> {
        // must be a spanning tree
        if tree.len() + 1 != self.vertices.len() {
            return Err(Error::Graph("not a maximal tree: wrong edge count".into()));
        }
        if !tree.contains(&start_edge) {
            return Err(Error::Graph("start edge is not in the tree".into()));
        }
        let mut reach: BTreeSet<usize> = BTreeSet::new();
        reach.insert(self.vertices[0]);
        let mut grew = true;
        while grew {
            grew = false;
            for &k in tree {
                let (a, b) = self.edge_endpoints(k);
                if reach.contains(&a) && reach.insert(b) {
                    grew = true;
                }
                if reach.contains(&b) && reach.insert(a) {
                    grew = true;
                }
            }
        }
        if reach.len() != self.vertices.len() {
            return Err(Error::Graph("not a maximal tree: not spanning".into()));
        }
        let (a, b) = self.edge_endpoints(start_edge);
        if from != a && from != b {
            return Err(Error::Graph("start vertex not on the start edge".into()));
        }
        // walk within the tree using tree-restricted rotations
        let tree_rot: BTreeMap<usize, Vec<usize>> = self
            .rotation
            .iter()
            .map(|(v, rot)| {
                (
                    *v,
                    rot.iter().cloned().filter(|k| tree.contains(k)).collect(),
                )
            })
            .collect();
        let next = |dart: Dart| -> Dart {
            let (e, _, v) = dart;
            let rot = &tree_rot[&v];
            let pos = rot.iter().position(|&k| k == e).expect("edge at vertex");
            let nxt = rot[(pos + 1) % rot.len()];
            (nxt, v, self.other_end(nxt, v))
        };
        let start: Dart = (start_edge, from, self.other_end(start_edge, from));
        let mut walk = Vec::with_capacity(2 * tree.len());
        let mut cur = start;
        loop {
            walk.push(cur.0);
            cur = next(cur);
            if cur == start {
                break;
            }
        }
        if walk.len() != 2 * tree.len() {
            return Err(Error::Graph("tree circuit has wrong length".into()));
        }
        Ok(walk)
    }

    /// All spanning trees (edge-index sets); desk scale only.
    pub fn spanning_trees(&self) -> Vec<BTreeSet<usize>> {
        let n = self.vertices.len();
        let m = self.edges.len();
        if n == 0 || m < n - 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut combo: Vec<usize> = (0..n - 1).collect();
        loop {
            let tree: BTreeSet<usize> = combo.iter().cloned().collect();
            if self.is_spanning_acyclic(&tree) {
                out.push(tree);
            }
            // next combination
            let k = n - 1;
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if combo[i] != i + m - k {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }

    fn is_spanning_acyclic(&self, tree: &BTreeSet<usize>) -> bool {
        let mut parent: HashMap<usize, usize> =
            self.vertices.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut HashMap<usize, usize>, v: usize) -> usize {
            let p = parent[&v];
            if p == v {
                v
            } else {
                let r = find(parent, p);
                parent.insert(v, r);
                r
            }
        }
        for &k in tree {
            let (a, b) = self.edge_endpoints(k);
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra == rb {
                return false;
            }
            parent.insert(ra, rb);
        }
        true
    }

    /// Checks the 1-punctured property for a distinguished vertex.
    pub fn is_one_punctured(&self) -> Result<usize> {
        if self.distinguished.len() != 1 {
            return Err(Error::Graph(
                "a 1-punctured graph needs exactly one distinguished vertex".into(),
            ));
        }
        let v = self.distinguished[0];
        let rest: Vec<usize> = self
            .vertices
            .iter()
            .cloned()
            .filter(|&u| u != v)
            .collect();
        if rest.is_empty() {
            return Err(Error::Graph("puncture is the only vertex".into()));
        }
        let mut seen = BTreeSet::new();
        seen.insert(rest[0]);
        let mut stack = vec![rest[0]];
        while let Some(u) = stack.pop() {
            for (_, a, b) in &self.edges {
                if *a == v || *b == v {
                    continue;
                }
                for (x, y) in [(a, b), (b, a)] {
                    if *x == u && seen.insert(*y) {
                        stack.push(*y);
                    }
                }
            }
        }
        if seen.len() != rest.len() {
            return Err(Error::Graph(
                "graph minus the puncture is disconnected".into(),
            ));
        }
        Ok(v)
    }

    /// Parses the structured-text graph format:
    /// `vertices: [ids]`, `edges: [[id, u, v]]`,
    /// `rotation: {v: [edge ids clockwise]}`, `outer_face: [edge ids]`,
    /// `distinguished: [ids]`, `orientation: {edge: [tail, head]}`.
    pub fn from_text(input: &str) -> Result<Self> {
        let mut fields: HashMap<String, String> = HashMap::new();
        let mut current_key: Option<String> = None;
        for raw in input.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, rest)) = line.split_once(':') {
                let key_token = key.trim();
                if [
                    "vertices",
                    "edges",
                    "rotation",
                    "outer_face",
                    "distinguished",
                    "orientation",
                ]
                .contains(&key_token)
                {
                    fields.insert(key_token.to_string(), rest.trim().to_string());
                    current_key = Some(key_token.to_string());
                    continue;
                }
            }
            match &current_key {
                Some(k) => {
                    let entry = fields.get_mut(k).unwrap();
                    entry.push(' ');
                    entry.push_str(line);
                }
                None => {
                    return Err(Error::Graph(format!("unexpected line {line:?}")));
                }
            }
        }
        let get = |k: &str| fields.get(k).cloned().unwrap_or_default();

        let vertices: Vec<usize> = parse_int_list(&get("vertices"))?;
        let mut edges = Vec::new();
        for item in parse_group_list(&get("edges"))? {
            let parts = split_top(&item);
            if parts.len() != 3 {
                return Err(Error::Graph(format!("edge entry {item:?} needs 3 fields")));
            }
            let u: usize = parts[1]
                .trim()
                .parse()
                .map_err(|_| Error::Graph(format!("bad endpoint in {item:?}")))?;
            let v: usize = parts[2]
                .trim()
                .parse()
                .map_err(|_| Error::Graph(format!("bad endpoint in {item:?}")))?;
            edges.push((parts[0].trim().to_string(), u, v));
        }
        let id_index: HashMap<String, usize> = edges
            .iter()
            .enumerate()
            .map(|(k, (id, _, _))| (id.clone(), k))
            .collect();
        let look = |id: &str| -> Result<usize> {
            id_index
                .get(id.trim())
                .cloned()
                .ok_or_else(|| Error::Graph(format!("unknown edge id {id:?}")))
        };

        let mut rotation = BTreeMap::new();
        for (key, val) in parse_map(&get("rotation"))? {
            let v: usize = key
                .trim()
                .parse()
                .map_err(|_| Error::Graph(format!("bad vertex id {key:?}")))?;
            let ids = parse_str_list(&val)?;
            let mut rot = Vec::new();
            for id in ids {
                rot.push(look(&id)?);
            }
            rotation.insert(v, rot);
        }
        let mut outer_face = Vec::new();
        for id in parse_str_list(&get("outer_face"))? {
            outer_face.push(look(&id)?);
        }
        let distinguished: Vec<usize> = if get("distinguished").is_empty() {
            Vec::new()
        } else {
            parse_int_list(&get("distinguished"))?
        };
        let mut orientation = BTreeMap::new();
        for (key, val) in parse_map(&get("orientation"))? {
            let k = look(&key)?;
            let pair: Vec<usize> = parse_int_list(&val)?;
            if pair.len() != 2 {
                return Err(Error::Graph("orientation entries need [tail, head]".into()));
            }
            orientation.insert(k, (pair[0], pair[1]));
        }
        PlanarGraph::new(
            vertices,
            edges,
            rotation,
            outer_face,
            distinguished,
            orientation,
        )
    }

    /// Builds the standard drawing of a graph on collinear vertices `1..n`
    /// with pairwise non-crossing arcs below the line. The rotation system
    /// and outer face come from the geometry.
    pub fn lower_arc(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in arcs {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::Graph(format!("bad arc ({a},{b})")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        for (i, &(a1, b1)) in norm.iter().enumerate() {
            for &(a2, b2) in norm.iter().skip(i + 1) {
                if (a1, b1) == (a2, b2) {
                    return Err(Error::Graph(format!("duplicate arc ({a1},{b1})")));
                }
                // crossing test for arcs below a line
                if (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1) {
                    return Err(Error::Graph(format!(
                        "arcs ({a1},{b1}) and ({a2},{b2}) cross"
                    )));
                }
            }
        }
        let edges: Vec<(String, usize, usize)> = norm
            .iter()
            .map(|&(a, b)| (format!("e{a}_{b}"), a, b))
            .collect();
        let mut rotation: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=n {
            // clockwise: arcs to the right by ascending partner, then arcs
            // to the left by ascending partner
            let mut right: Vec<(usize, usize)> = Vec::new();
            let mut left: Vec<(usize, usize)> = Vec::new();
            for (k, &(a, b)) in norm.iter().enumerate() {
                if a == v {
                    right.push((b, k));
                } else if b == v {
                    left.push((a, k));
                }
            }
            right.sort_unstable();
            left.sort_unstable();
            let rot: Vec<usize> = right
                .into_iter()
                .map(|(_, k)| k)
                .chain(left.into_iter().map(|(_, k)| k))
                .collect();
            rotation.insert(v, rot);
        }
        // the outer face contains the lowest arc at the leftmost covered
        // vertex, traversed toward that vertex
        let outer_face = if norm.is_empty() {
            Vec::new()
        } else {
            let leftmost = norm.iter().map(|&(a, _)| a).min().unwrap();
            let (k, &(_a, b)) = norm
                .iter()
                .enumerate()
                .filter(|(_, &(a, _))| a == leftmost)
                .max_by_key(|(_, &(_, b))| b)
                .map(|(k, arc)| (k, arc))
                .unwrap();
            let g = PlanarGraph {
                vertices: (1..=n).collect(),
                edges: edges.clone(),
                rotation: rotation.clone(),
                outer_face: Vec::new(),
                distinguished: Vec::new(),
                orientation: BTreeMap::new(),
            };
            let start: Dart = (k, b, leftmost);
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                walk.push(cur.0);
                cur = g.next_dart(cur);
                if cur == start {
                    break;
                }
            }
            walk
        };
        PlanarGraph::new(
            (1..=n).collect(),
            edges,
            rotation,
            outer_face,
            Vec::new(),
            BTreeMap::new(),
        )
    }

    /// The half-twist assignment of a lower-arc drawing: the edge joining
    /// s < t maps to the band generator braid on `n` strands.
    pub fn band_assignment(&self, n: usize) -> Result<HashMap<String, BraidWord>> {
        let mut out = HashMap::new();
        for (id, a, b) in &self.edges {
            let (s, t) = (*a.min(b), *a.max(b));
            if t > n {
                return Err(Error::Graph(format!("vertex {t} exceeds strand count {n}")));
            }
            let w = band_to_artin(&BandWord::from_letters(
                n,
                vec![BandGen::new(t, s, 1)],
            )?);
            out.insert(id.clone(), w);
        }
        Ok(out)
    }
}

fn cyclic_equal(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|r| (0..a.len()).all(|i| a[(r + i) % a.len()] == b[i]))
}

fn split_top(item: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in item.chars() {
        match c {
            '[' | '{' | '(' => {
                depth += 1;
                cur.push(c);
            }
            ']' | '}' | ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn strip_brackets<'a>(s: &'a str, open: char, close: char) -> Result<&'a str> {
    let t = s.trim();
    t.strip_prefix(open)
        .and_then(|x| x.strip_suffix(close))
        .ok_or_else(|| Error::Graph(format!("expected {open}...{close} around {t:?}")))
}

fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let inner = strip_brackets(s, '[', ']')?;
    split_top(inner)
        .iter()
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<usize>()
                .map_err(|_| Error::Graph(format!("expected integer, got {x:?}")))
        })
        .collect()
}

fn parse_str_list(s: &str) -> Result<Vec<String>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let inner = strip_brackets(s, '[', ']')?;
    Ok(split_top(inner)
        .into_iter()
        .filter(|x| !x.is_empty())
        .collect())
}

fn parse_group_list(s: &str) -> Result<Vec<String>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let inner = strip_brackets(s, '[', ']')?;
    split_top(inner)
        .into_iter()
        .filter(|x| !x.is_empty())
        .map(|x| strip_brackets(&x, '[', ']').map(str::to_string))
        .collect()
}

fn parse_map(s: &str) -> Result<Vec<(String, String)>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let inner = strip_brackets(s, '{', '}')?;
    split_top(inner)
        .into_iter()
        .filter(|x| !x.is_empty())
        .map(|x| {
            let (k, v) = x
                .split_once(':')
                .ok_or_else(|| Error::Graph(format!("expected key: value in {x:?}")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

/// Variants of the graph presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphVariant {
    Plane,
    Annulus,
    Sphere,
    SingularPlane,
    SingularAnnulus,
    InversePlane,
}

impl GraphVariant {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "plane" => GraphVariant::Plane,
            "annulus" => GraphVariant::Annulus,
            "sphere" => GraphVariant::Sphere,
            "singular-plane" => GraphVariant::SingularPlane,
            "singular-annulus" => GraphVariant::SingularAnnulus,
            "inverse-plane" => GraphVariant::InversePlane,
            other => return Err(Error::UnknownFamily(format!("graph variant {other}"))),
        })
    }
}

struct RelationBuilder {
    gen_index: HashMap<String, usize>,
    generators: Vec<GenLabel>,
    relations: Vec<(Vec<PLetter>, Vec<PLetter>)>,
}

impl RelationBuilder {
    fn new() -> Self {
        RelationBuilder {
            gen_index: HashMap::new(),
            generators: Vec::new(),
            relations: Vec::new(),
        }
    }

    fn gen(&mut self, name: &str, invertible: bool) -> usize {
        if let Some(&k) = self.gen_index.get(name) {
            return k;
        }
        let k = self.generators.len();
        self.generators.push(GenLabel {
            name: name.to_string(),
            invertible,
        });
        self.gen_index.insert(name.to_string(), k);
        k
    }

    fn push(&mut self, lhs: Vec<PLetter>, rhs: Vec<PLetter>) {
        if lhs == rhs {
            return;
        }
        if self
            .relations
            .iter()
            .any(|(l, r)| (l == &lhs && r == &rhs) || (l == &rhs && r == &lhs))
        {
            return;
        }
        self.relations.push((lhs, rhs));
    }

    fn finish(self, name: String) -> Presentation {
        Presentation::new(name, self.generators, self.relations)
            .expect("builder emits well-formed relations")
    }
}

fn pl(g: usize, sign: i8) -> PLetter {
    PLetter { gen: g, sign }
}

fn word(gens: &[usize]) -> Vec<PLetter> {
    gens.iter().map(|&g| pl(g, 1)).collect()
}

/// Generates the graph presentation for the requested variant. Edge labels:
/// `s:<id>` for half twists, `x:<id>` for singular crossings, `t:<id>` for
/// puncture edges, `e:<vertex>` for partial-identity idempotents.
pub fn sergiescu(
    graph: &PlanarGraph,
    variant: GraphVariant,
    minimal_trees: bool,
) -> Result<Presentation> {
    match variant {
        GraphVariant::Plane => plane_presentation(graph, false, false),
        GraphVariant::SingularPlane => plane_presentation(graph, true, false),
        GraphVariant::Sphere => {
            let mut p = plane_presentation(graph, false, false)?;
            add_tree_relations(graph, &mut p, minimal_trees)?;
            Ok(p)
        }
        GraphVariant::InversePlane => plane_presentation(graph, false, true),
        GraphVariant::Annulus => annulus_presentation(graph, false),
        GraphVariant::SingularAnnulus => annulus_presentation(graph, true),
    }
}

fn edges_disjoint(g: &PlanarGraph, a: usize, b: usize) -> bool {
    let (a1, a2) = g.edge_endpoints(a);
    let (b1, b2) = g.edge_endpoints(b);
    a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2
}

fn common_vertex(g: &PlanarGraph, a: usize, b: usize) -> Option<usize> {
    let (a1, a2) = g.edge_endpoints(a);
    let (b1, b2) = g.edge_endpoints(b);
    if a1 == b1 || a1 == b2 {
        Some(a1)
    } else if a2 == b1 || a2 == b2 {
        Some(a2)
    } else {
        None
    }
}

/// Clockwise-ordered triples of edges at every vertex of degree ≥ 3.
fn clockwise_triples(g: &PlanarGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &v in g.vertices() {
        let rot: Vec<usize> = match g.degree(v) {
            d if d >= 3 => g.rotation[&v].clone(),
            _ => continue,
        };
        let d = rot.len();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    out.push([rot[i], rot[j], rot[k]]);
                }
            }
        }
    }
    out
}

/// Valid rotations of a pseudocycle: position r qualifies when its first
/// letter is not the start edge of a reverse and its last letter is not the
/// end edge of a reverse.
fn valid_rotations(cycle: &[usize]) -> Vec<Vec<usize>> {
    let p = cycle.len();
    let at = |i: usize| cycle[i % p];
    let mut out = Vec::new();
    for r in 0..p {
        let first_is_start_of_reverse = at(r) == at(r + 1);
        let last_is_end_of_reverse = at(r + p - 1) == at(r + p - 2);
        if first_is_start_of_reverse || last_is_end_of_reverse {
            continue;
        }
        out.push((0..p).map(|i| at(r + i)).collect());
    }
    out
}

fn plane_presentation(
    graph: &PlanarGraph,
    singular: bool,
    inverse: bool,
) -> Result<Presentation> {
    let mut b = RelationBuilder::new();
    let m = graph.edge_count();
    let sg: Vec<usize> = (0..m)
        .map(|k| b.gen(&format!("s:{}", graph.edge_id(k)), true))
        .collect();
    let xg: Vec<usize> = if singular {
        (0..m)
            .map(|k| b.gen(&format!("x:{}", graph.edge_id(k)), false))
            .collect()
    } else {
        Vec::new()
    };
    let eg: HashMap<usize, usize> = if inverse {
        graph
            .vertices()
            .iter()
            .map(|&v| (v, b.gen(&format!("e:{v}"), false)))
            .collect()
    } else {
        HashMap::new()
    };

    // disjointedness
    for a in 0..m {
        for c in a + 1..m {
            if edges_disjoint(graph, a, c) {
                b.push(word(&[sg[a], sg[c]]), word(&[sg[c], sg[a]]));
                if singular {
                    b.push(word(&[xg[a], xg[c]]), word(&[xg[c], xg[a]]));
                    b.push(word(&[sg[a], xg[c]]), word(&[xg[c], sg[a]]));
                    b.push(word(&[sg[c], xg[a]]), word(&[xg[a], sg[c]]));
                }
            }
        }
    }
    if singular {
        // commutativity and invertibility per edge
        for a in 0..m {
            b.push(word(&[sg[a], xg[a]]), word(&[xg[a], sg[a]]));
            b.push(vec![pl(sg[a], 1), pl(sg[a], -1)], vec![]);
            b.push(vec![pl(sg[a], -1), pl(sg[a], 1)], vec![]);
        }
    }
    // adjacency
    for a in 0..m {
        for c in 0..m {
            if a < c && common_vertex(graph, a, c).is_some() {
                b.push(
                    word(&[sg[a], sg[c], sg[a]]),
                    word(&[sg[c], sg[a], sg[c]]),
                );
            }
            if singular && a != c && common_vertex(graph, a, c).is_some() {
                // x_a σ_c σ_a = σ_c σ_a x_c
                b.push(
                    word(&[xg[a], sg[c], sg[a]]),
                    word(&[sg[c], sg[a], xg[c]]),
                );
            }
        }
    }
    // nodal relations per clockwise triple
    for triple in clockwise_triples(graph) {
        let rotations = [
            [triple[0], triple[1], triple[2]],
            [triple[1], triple[2], triple[0]],
            [triple[2], triple[0], triple[1]],
        ];
        let [a0, b0, c0] = rotations[0];
        b.push(
            word(&[sg[a0], sg[b0], sg[c0], sg[a0]]),
            word(&[sg[b0], sg[c0], sg[a0], sg[b0]]),
        );
        if singular {
            for [a, c, d] in rotations {
                // x_a σ_b σ_c σ_a = σ_b σ_c σ_a x_b: the crossing moves one
                // step along the clockwise rotation, like the adjacency case
                b.push(
                    word(&[xg[a], sg[c], sg[d], sg[a]]),
                    word(&[sg[c], sg[d], sg[a], xg[c]]),
                );
                // σ_a σ_b x_c σ_a = σ_b x_c σ_a σ_b
                b.push(
                    word(&[sg[a], sg[c], xg[d], sg[a]]),
                    word(&[sg[c], xg[d], sg[a], sg[c]]),
                );
                // x_a σ_b x_c σ_a = σ_b x_c σ_a x_b
                b.push(
                    word(&[xg[a], sg[c], xg[d], sg[a]]),
                    word(&[sg[c], xg[d], sg[a], xg[c]]),
                );
            }
        }
    }
    // pseudocycle relations
    for cycle in graph.pseudocycles()? {
        for rot in valid_rotations(&cycle) {
            let p = rot.len();
            let lhs: Vec<usize> = rot[..p - 1].iter().map(|&k| sg[k]).collect();
            let rhs: Vec<usize> = rot[1..].iter().map(|&k| sg[k]).collect();
            b.push(word(&lhs), word(&rhs));
            if singular {
                // x_{a1} σ_{a2}…σ_{a_{p−1}} = σ_{a2}…σ_{a_{p−1}} x_{a_p}
                let mut l = vec![xg[rot[0]]];
                l.extend(rot[1..p - 1].iter().map(|&k| sg[k]));
                let mut r: Vec<usize> =
                    rot[1..p - 1].iter().map(|&k| sg[k]).collect();
                r.push(xg[rot[p - 1]]);
                b.push(word(&l), word(&r));
            }
        }
    }
    if inverse {
        for (&v, &ev) in &eg {
            b.push(word(&[ev]), word(&[ev, ev]));
            for k in 0..m {
                let (a, c) = graph.edge_endpoints(k);
                if v != a && v != c {
                    b.push(word(&[ev, sg[k]]), word(&[sg[k], ev]));
                }
            }
        }
        for k in 0..m {
            let (v0, v1) = graph.orientation_of(k);
            let (e0, e1) = (eg[&v0], eg[&v1]);
            b.push(vec![pl(sg[k], 1), pl(sg[k], -1)], vec![]);
            b.push(vec![pl(sg[k], -1), pl(sg[k], 1)], vec![]);
            b.push(word(&[e0, sg[k]]), word(&[sg[k], e1]));
            b.push(word(&[e1, sg[k]]), word(&[sg[k], e0]));
            for e in [e0, e1] {
                b.push(word(&[e, sg[k], sg[k]]), word(&[sg[k], sg[k], e]));
                b.push(word(&[e, sg[k], sg[k]]), word(&[e]));
            }
            b.push(word(&[e0, e1, sg[k]]), word(&[sg[k], e0, e1]));
            b.push(word(&[e0, e1, sg[k]]), word(&[e0, e1]));
        }
    }
    let name = if inverse {
        "graph-inverse-plane"
    } else if singular {
        "graph-singular-plane"
    } else {
        "graph-plane"
    };
    Ok(b.finish(name.to_string()))
}

fn add_tree_relations(
    graph: &PlanarGraph,
    p: &mut Presentation,
    minimal: bool,
) -> Result<()> {
    let mut trees = graph.spanning_trees();
    if trees.is_empty() {
        return Err(Error::Graph("no spanning tree".into()));
    }
    if minimal {
        trees.truncate(1);
    }
    let mut extra = Vec::new();
    for tree in &trees {
        for &k in tree {
            let (x, y) = graph.edge_endpoints(k);
            for from in [x, y] {
                let walk = graph.tree_circuit(tree, k, from)?;
                let lhs: Vec<PLetter> = walk
                    .iter()
                    .map(|&e| PLetter {
                        gen: p
                            .generator_index(&format!("s:{}", graph.edge_id(e)))
                            .expect("edge generator exists"),
                        sign: 1,
                    })
                    .collect();
                extra.push((lhs, Vec::new()));
            }
        }
    }
    for (lhs, rhs) in extra {
        p.push_relation(lhs, rhs)?;
    }
    p.set_name("graph-sphere".to_string());
    Ok(())
}

fn annulus_presentation(graph: &PlanarGraph, singular: bool) -> Result<Presentation> {
    let v = graph.is_one_punctured()?;
    let mut b = RelationBuilder::new();
    let m = graph.edge_count();
    let at_puncture: Vec<bool> = (0..m)
        .map(|k| {
            let (a, c) = graph.edge_endpoints(k);
            a == v || c == v
        })
        .collect();
    // σ labels for plain edges, τ labels for puncture edges
    let gens: Vec<usize> = (0..m)
        .map(|k| {
            if at_puncture[k] {
                b.gen(&format!("t:{}", graph.edge_id(k)), true)
            } else {
                b.gen(&format!("s:{}", graph.edge_id(k)), true)
            }
        })
        .collect();
    let xg: Vec<Option<usize>> = if singular {
        (0..m)
            .map(|k| {
                if at_puncture[k] {
                    None
                } else {
                    Some(b.gen(&format!("x:{}", graph.edge_id(k)), false))
                }
            })
            .collect()
    } else {
        vec![None; m]
    };

    // disjointedness
    for a in 0..m {
        for c in 0..m {
            if a < c && edges_disjoint(graph, a, c) {
                b.push(word(&[gens[a], gens[c]]), word(&[gens[c], gens[a]]));
                if singular {
                    if let (Some(xa), Some(xc)) = (xg[a], xg[c]) {
                        b.push(word(&[xa, xc]), word(&[xc, xa]));
                    }
                    if let Some(xc) = xg[c] {
                        b.push(word(&[gens[a], xc]), word(&[xc, gens[a]]));
                    }
                    if let Some(xa) = xg[a] {
                        b.push(word(&[gens[c], xa]), word(&[xa, gens[c]]));
                    }
                }
            }
        }
    }
    // adjacency
    for a in 0..m {
        for c in 0..m {
            if a == c || common_vertex(graph, a, c).is_none() {
                continue;
            }
            match (at_puncture[a], at_puncture[c]) {
                (false, false) => {
                    if a < c {
                        b.push(
                            word(&[gens[a], gens[c], gens[a]]),
                            word(&[gens[c], gens[a], gens[c]]),
                        );
                    }
                }
                (true, false) => {
                    // τ_b σ_c τ_b σ_c = σ_c τ_b σ_c τ_b
                    b.push(
                        word(&[gens[a], gens[c], gens[a], gens[c]]),
                        word(&[gens[c], gens[a], gens[c], gens[a]]),
                    );
                }
                _ => {}
            }
            if singular && !at_puncture[a] && !at_puncture[c] {
                if let (Some(xa), Some(xc)) = (xg[a], xg[c]) {
                    b.push(
                        word(&[xa, gens[c], gens[a]]),
                        word(&[gens[c], gens[a], xc]),
                    );
                }
            }
        }
    }
    // singular per-edge relations
    if singular {
        for a in 0..m {
            if let Some(xa) = xg[a] {
                b.push(word(&[gens[a], xa]), word(&[xa, gens[a]]));
            }
            b.push(vec![pl(gens[a], 1), pl(gens[a], -1)], vec![]);
            b.push(vec![pl(gens[a], -1), pl(gens[a], 1)], vec![]);
        }
    }
    // nodal relations
    for triple in clockwise_triples(graph) {
        let taus = triple.iter().filter(|&&k| at_puncture[k]).count();
        if taus == 0 {
            let [a, c, d] = triple;
            b.push(
                word(&[gens[a], gens[c], gens[d], gens[a]]),
                word(&[gens[c], gens[d], gens[a], gens[c]]),
            );
            if singular {
                let rots = [[a, c, d], [c, d, a], [d, a, c]];
                for [p0, p1, p2] in rots {
                    if let Some(x0) = xg[p0] {
                        b.push(
                            word(&[x0, gens[p1], gens[p2], gens[p0]]),
                            word(&[gens[p0], gens[p1], gens[p2], x0]),
                        );
                        if let Some(x2) = xg[p2] {
                            b.push(
                                word(&[gens[p0], gens[p1], x2, gens[p0]]),
                                word(&[gens[p1], x2, gens[p0], gens[p1]]),
                            );
                            if let Some(x1) = xg[p1] {
                                b.push(
                                    word(&[x0, gens[p1], x2, gens[p0]]),
                                    word(&[gens[p1], x2, gens[p0], x1]),
                                );
                            }
                        }
                    }
                }
            }
        } else if taus == 1 {
            // rotate the clockwise triple so the puncture edge sits last
            let pos = triple.iter().position(|&k| at_puncture[k]).unwrap();
            let a = triple[(pos + 1) % 3];
            let c = triple[(pos + 2) % 3];
            let t = triple[pos];
            // σ_a σ_c τ_t σ_a = σ_c τ_t σ_a σ_c
            b.push(
                word(&[gens[a], gens[c], gens[t], gens[a]]),
                word(&[gens[c], gens[t], gens[a], gens[c]]),
            );
            // τ_t σ_a σ_c τ_t σ_a = σ_c τ_t σ_a σ_c τ_t
            b.push(
                word(&[gens[t], gens[a], gens[c], gens[t], gens[a]]),
                word(&[gens[c], gens[t], gens[a], gens[c], gens[t]]),
            );
            if singular {
                // new nodal relations for the singular annulus: the puncture
                // edge in the middle of the clockwise triple (a, t, c)
                if let (Some(xa), Some(xc)) = (xg[a], xg[c]) {
                    b.push(
                        word(&[gens[a], gens[t], gens[c], xa]),
                        word(&[xc, gens[a], gens[t], gens[c]]),
                    );
                    b.push(
                        word(&[gens[t], gens[c], gens[a], gens[t], xc]),
                        word(&[xa, gens[t], gens[c], gens[a], gens[t]]),
                    );
                }
            }
        }
    }
    // pseudocycle relations
    for cycle in graph.pseudocycles()? {
        for rot in valid_rotations(&cycle) {
            let p = rot.len();
            let tau_first = at_puncture[rot[0]];
            let tau_last = at_puncture[rot[p - 1]];
            let middles_plain = rot[1..p - 1].iter().all(|&k| !at_puncture[k]);
            if !middles_plain {
                continue;
            }
            if !tau_first && !tau_last {
                let lhs: Vec<usize> = rot[..p - 1].iter().map(|&k| gens[k]).collect();
                let rhs: Vec<usize> = rot[1..].iter().map(|&k| gens[k]).collect();
                b.push(word(&lhs), word(&rhs));
                if singular {
                    if let (Some(x0), Some(xp)) = (xg[rot[0]], xg[rot[p - 1]]) {
                        let mut l = vec![x0];
                        l.extend(rot[1..p - 1].iter().map(|&k| gens[k]));
                        let mut r: Vec<usize> =
                            rot[1..p - 1].iter().map(|&k| gens[k]).collect();
                        r.push(xp);
                        b.push(word(&l), word(&r));
                    }
                }
            } else if tau_first && tau_last {
                // τ_{a1} σ_{a2}…σ_{a_{p−1}} = σ_{a2}…σ_{a_{p−1}} τ_{a_p}
                let mut lhs = vec![gens[rot[0]]];
                lhs.extend(rot[1..p - 1].iter().map(|&k| gens[k]));
                let mut rhs: Vec<usize> =
                    rot[1..p - 1].iter().map(|&k| gens[k]).collect();
                rhs.push(gens[rot[p - 1]]);
                b.push(word(&lhs), word(&rhs));
            }
        }
    }
    let name = if singular {
        "graph-singular-annulus"
    } else {
        "graph-annulus"
    };
    Ok(b.finish(name.to_string()))
}
