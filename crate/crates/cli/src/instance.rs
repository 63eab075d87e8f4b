//! The `treepath-instance 1` text format.

use std::fmt::Write;

use treepath::generate::Generated;
use treepath::{Dipath, DirectedTree, PriorityRelation, TreeError, VertexId};

use crate::error::InputError;

pub const INSTANCE_HEADER: &str = "treepath-instance 1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSpec {
    Vertices(Vec<VertexId>),
    Pair(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub vertices: usize,
    pub arcs: Vec<(VertexId, VertexId)>,
    pub paths: Vec<PathSpec>,
    pub root: Option<VertexId>,
    pub priority: Option<PriorityRelation>,
}

/// An instance turned into solver input.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub tree: DirectedTree,
    pub paths: Vec<Dipath>,
}

pub(crate) fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub(crate) fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>, InputError> {
    words
        .iter()
        .map(|w| w.parse().map_err(|_| InputError::Syntax { line, msg: format!("expected a number, found `{w}`") }))
        .collect()
}

fn syntax(line: usize, msg: impl Into<String>) -> InputError {
    InputError::Syntax { line, msg: msg.into() }
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, content(l))).filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, h)) if h.split_whitespace().collect::<Vec<_>>() == INSTANCE_HEADER.split(' ').collect::<Vec<_>>() => {}
            Some((line, _)) => return Err(syntax(line, format!("expected header `{INSTANCE_HEADER}`"))),
            None => return Err(syntax(1, "empty input")),
        }
        let mut vertices = None;
        let mut arcs = Vec::new();
        let mut paths = Vec::new();
        let mut path_lines = Vec::new();
        let mut root = None;
        let mut rank: Option<Vec<usize>> = None;
        let mut orders: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        for (line, text) in lines {
            let words: Vec<&str> = text.split_whitespace().collect();
            let args = &words[1..];
            match words[0] {
                "vertices" => {
                    let [n] = numbers(line, args)?[..] else { return Err(syntax(line, "`vertices` takes one number")) };
                    if vertices.replace(n).is_some() {
                        return Err(syntax(line, "repeated `vertices`"));
                    }
                }
                "arc" => {
                    let [t, h] = numbers(line, args)?[..] else { return Err(syntax(line, "`arc` takes two vertices")) };
                    arcs.push((t, h));
                }
                "path" => {
                    paths.push(PathSpec::Vertices(numbers(line, args)?));
                    path_lines.push(line);
                }
                "pair" => {
                    let [s, t] = numbers(line, args)?[..] else { return Err(syntax(line, "`pair` takes two vertices")) };
                    paths.push(PathSpec::Pair(s, t));
                    path_lines.push(line);
                }
                "root" => {
                    let [r] = numbers(line, args)?[..] else { return Err(syntax(line, "`root` takes one vertex")) };
                    if root.replace(r).is_some() {
                        return Err(syntax(line, "repeated `root`"));
                    }
                }
                "rank" => {
                    if rank.replace(numbers(line, args)?).is_some() {
                        return Err(syntax(line, "repeated `rank`"));
                    }
                }
                "order" => {
                    if args.len() < 2 || args[1] != ":" {
                        return Err(syntax(line, "expected `order <arc> : <dipaths>`"));
                    }
                    let arc = numbers(line, &args[..1])?[0];
                    orders.push((line, arc, numbers(line, &args[2..])?));
                }
                other => return Err(syntax(line, format!("unknown record `{other}`"))),
            }
        }
        let vertices = vertices.ok_or_else(|| syntax(1, "missing `vertices`"))?;
        let priority = match (rank, orders.is_empty()) {
            (Some(_), false) => return Err(syntax(orders[0].0, "`order` and `rank` cannot be mixed")),
            (Some(r), true) => Some(PriorityRelation::GlobalRanking(r)),
            (None, true) => None,
            (None, false) => {
                let mut per_arc: Vec<Option<Vec<usize>>> = vec![None; arcs.len()];
                for (line, arc, ids) in orders {
                    let slot = per_arc.get_mut(arc).ok_or_else(|| syntax(line, format!("no arc {arc}")))?;
                    if slot.replace(ids).is_some() {
                        return Err(syntax(line, format!("repeated order for arc {arc}")));
                    }
                }
                Some(PriorityRelation::PerArc(per_arc.into_iter().map(Option::unwrap_or_default).collect()))
            }
        };
        let inst = Instance { vertices, arcs, paths, root, priority };
        inst.load_with(Some(&path_lines))?;
        Ok(inst)
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        let join = |ids: &[usize]| ids.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(out, "{INSTANCE_HEADER}").unwrap();
        writeln!(out, "vertices {}", self.vertices).unwrap();
        for &(t, h) in &self.arcs {
            writeln!(out, "arc {t} {h}").unwrap();
        }
        for p in &self.paths {
            match p {
                PathSpec::Vertices(v) => writeln!(out, "path {}", join(v)).unwrap(),
                PathSpec::Pair(s, t) => writeln!(out, "pair {s} {t}").unwrap(),
            }
        }
        if let Some(r) = self.root {
            writeln!(out, "root {r}").unwrap();
        }
        match &self.priority {
            None => {}
            Some(PriorityRelation::GlobalRanking(r)) => writeln!(out, "rank {}", join(r)).unwrap(),
            Some(PriorityRelation::PerArc(orders)) => {
                for (a, o) in orders.iter().enumerate() {
                    writeln!(out, "order {a} :{}", o.iter().map(|i| format!(" {i}")).collect::<String>()).unwrap();
                }
            }
        }
        out
    }

    pub fn load(&self) -> Result<Loaded, InputError> {
        self.load_with(None)
    }

    fn load_with(&self, lines: Option<&[usize]>) -> Result<Loaded, InputError> {
        let tree = DirectedTree::new(self.vertices, &self.arcs)?;
        let paths = self
            .paths
            .iter()
            .enumerate()
            .map(|(i, spec)| {
                let res = match spec {
                    PathSpec::Vertices(v) if v.len() < 2 => Err(TreeError::EmptyPath),
                    PathSpec::Pair(s, t) if s == t => Err(TreeError::EmptyPath),
                    PathSpec::Vertices(v) => tree.dipath(v.clone()),
                    PathSpec::Pair(s, t) => tree.resolve_dipath(*s, *t),
                };
                res.map_err(|e| match (lines, e) {
                    (Some(l), TreeError::EmptyPath) => InputError::EmptyPath { line: l[i] },
                    (Some(l), e) => InputError::Path { line: l[i], source: e },
                    (None, e) => InputError::Tree(e),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(r) = self.root {
            tree.check_vertex(r)?;
        }
        Ok(Loaded { tree, paths })
    }

    pub fn from_generated(g: &Generated) -> Self {
        Instance {
            vertices: g.tree.vertex_count(),
            arcs: g.tree.arcs().iter().map(|a| (a.tail, a.head)).collect(),
            paths: g.paths.iter().map(|p| PathSpec::Vertices(p.vertices().to_vec())).collect(),
            root: None,
            priority: g.priority.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "treepath-instance 1\nvertices 3\narc 0 1\narc 1 2\npath 0 1 2\npair 1 2\nroot 1\nrank 1 0\n";

    #[test]
    fn round_trip() {
        let inst = Instance::parse(SMALL).unwrap();
        assert_eq!(inst.emit(), SMALL);
        assert_eq!(inst.paths[1], PathSpec::Pair(1, 2));
        assert_eq!(inst.load().unwrap().paths[1].arcs(), &[1]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a chain\ntreepath-instance 1\n\nvertices 2 # two\narc 0 1\npath 0 1\n";
        assert_eq!(Instance::parse(text).unwrap().paths.len(), 1);
    }

    #[test]
    fn zero_arc_path_names_its_line() {
        let text = "treepath-instance 1\nvertices 2\narc 0 1\npath 0 1\npair 1 1\n";
        let err = Instance::parse(text).unwrap_err();
        assert!(matches!(err, InputError::EmptyPath { line: 5 }));
        assert_eq!(err.to_string(), "line 5: dipath has no arcs");
        assert!(matches!(
            Instance::parse("treepath-instance 1\nvertices 2\narc 0 1\npath 1\n"),
            Err(InputError::EmptyPath { line: 4 })
        ));
    }

    #[test]
    fn against_orientation() {
        let text = "treepath-instance 1\nvertices 2\narc 0 1\npath 1 0\n";
        assert!(matches!(Instance::parse(text), Err(InputError::Path { line: 4, .. })));
    }

    #[test]
    fn malformed() {
        assert!(matches!(Instance::parse(""), Err(InputError::Syntax { line: 1, .. })));
        assert!(matches!(Instance::parse("treepath-instance 2\n"), Err(InputError::Syntax { line: 1, .. })));
        assert!(matches!(
            Instance::parse("treepath-instance 1\nvertices 2\narc 0 x\n"),
            Err(InputError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            Instance::parse("treepath-instance 1\nvertices 2\narc 0 1\norder 3 : 0\n"),
            Err(InputError::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            Instance::parse("treepath-instance 1\nvertices 3\narc 0 1\n"),
            Err(InputError::Tree(TreeError::NotATree))
        ));
    }
}
