//! The `treepath-solution 1` text format. Solver reports are written in it,
//! so any report can be fed back to `verify`.

use std::fmt::Write;

use serde::Serialize;
use treepath::{ArcId, PathId};

use crate::error::InputError;
use crate::instance::{content, numbers};

pub const SOLUTION_HEADER: &str = "treepath-solution 1";

const RECORDS: [(&str, &str); 8] = [
    ("coloring", "colors"),
    ("coloring", "load"),
    ("coloring", "color"),
    ("multicut", "size"),
    ("multicut", "cut"),
    ("multicut", "disjoint"),
    ("kernel", "kernel"),
    ("kernel", "witness"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Solution {
    Coloring {
        colors: usize,
        load: usize,
        /// Color of each dipath.
        color: Vec<usize>,
    },
    Multicut {
        cut: Vec<ArcId>,
        disjoint: Vec<PathId>,
    },
    Kernel {
        kernel: Vec<PathId>,
        witness: Vec<KernelWitness>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KernelWitness {
    pub path: PathId,
    pub arc: ArcId,
    pub by: PathId,
}

impl Solution {
    pub fn kind(&self) -> &'static str {
        match self {
            Solution::Coloring { .. } => "coloring",
            Solution::Multicut { .. } => "multicut",
            Solution::Kernel { .. } => "kernel",
        }
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{SOLUTION_HEADER}").unwrap();
        writeln!(out, "kind {}", self.kind()).unwrap();
        match self {
            Solution::Coloring { colors, load, color } => {
                writeln!(out, "colors {colors}").unwrap();
                writeln!(out, "load {load}").unwrap();
                for (p, c) in color.iter().enumerate() {
                    writeln!(out, "color {p} {c}").unwrap();
                }
            }
            Solution::Multicut { cut, disjoint } => {
                writeln!(out, "size {}", cut.len()).unwrap();
                for a in cut {
                    writeln!(out, "cut {a}").unwrap();
                }
                for p in disjoint {
                    writeln!(out, "disjoint {p}").unwrap();
                }
            }
            Solution::Kernel { kernel, witness } => {
                for p in kernel {
                    writeln!(out, "kernel {p}").unwrap();
                }
                for w in witness {
                    writeln!(out, "witness {} {} {}", w.path, w.arc, w.by).unwrap();
                }
            }
        }
        out
    }

    /// Human-readable tables.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        match self {
            Solution::Coloring { colors, load, color } => {
                writeln!(out, "{colors} colors, maximum arc load {load}\n").unwrap();
                writeln!(out, "{:>8}  {:>6}", "dipath", "color").unwrap();
                for (p, c) in color.iter().enumerate() {
                    writeln!(out, "{p:>8}  {c:>6}").unwrap();
                }
            }
            Solution::Multicut { cut, disjoint } => {
                writeln!(out, "{} cut arcs, {} arc-disjoint dipaths\n", cut.len(), disjoint.len()).unwrap();
                writeln!(out, "{:>8}  {:>8}", "cut arc", "dipath").unwrap();
                for i in 0..cut.len().max(disjoint.len()) {
                    let show = |v: Option<&usize>| v.map_or(String::new(), |x| x.to_string());
                    writeln!(out, "{:>8}  {:>8}", show(cut.get(i)), show(disjoint.get(i))).unwrap();
                }
            }
            Solution::Kernel { kernel, witness } => {
                let ids: Vec<String> = kernel.iter().map(|p| p.to_string()).collect();
                writeln!(out, "kernel: {}\n", ids.join(" ")).unwrap();
                writeln!(out, "{:>8}  {:>6}  {:>12}", "dipath", "arc", "dominated by").unwrap();
                for w in witness {
                    writeln!(out, "{:>8}  {:>6}  {:>12}", w.path, w.arc, w.by).unwrap();
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, InputError> {
        let syntax = |line: usize, msg: String| InputError::Syntax { line, msg };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, content(l))).filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, h)) if h.split_whitespace().collect::<Vec<_>>() == SOLUTION_HEADER.split(' ').collect::<Vec<_>>() => {}
            Some((line, _)) => return Err(syntax(line, format!("expected header `{SOLUTION_HEADER}`"))),
            None => return Err(syntax(1, "empty input".into())),
        }
        let kind = match lines.next() {
            Some((line, l)) => match l.split_whitespace().collect::<Vec<_>>()[..] {
                ["kind", k @ ("coloring" | "multicut" | "kernel")] => k,
                _ => return Err(syntax(line, "expected `kind coloring|multicut|kernel`".into())),
            },
            None => return Err(syntax(2, "missing `kind`".into())),
        };
        let mut colors = None;
        let mut load = None;
        let mut color: Vec<Option<usize>> = Vec::new();
        let mut size = None;
        let mut cut = Vec::new();
        let mut disjoint = Vec::new();
        let mut kernel = Vec::new();
        let mut witness = Vec::new();
        for (line, l) in lines {
            let words: Vec<&str> = l.split_whitespace().collect();
            let nums = numbers(line, &words[1..])?;
            let bad = || syntax(line, format!("malformed `{}` record", words[0]));
            match (kind, words[0], &nums[..]) {
                ("coloring", "colors", &[k]) => colors = Some(k),
                ("coloring", "load", &[w]) => load = Some(w),
                ("coloring", "color", &[p, c]) => {
                    if color.len() <= p {
                        color.resize(p + 1, None);
                    }
                    if color[p].replace(c).is_some() {
                        return Err(syntax(line, format!("dipath {p} colored twice")));
                    }
                }
                ("multicut", "size", &[s]) => size = Some(s),
                ("multicut", "cut", &[a]) => cut.push(a),
                ("multicut", "disjoint", &[p]) => disjoint.push(p),
                ("kernel", "kernel", &[p]) => kernel.push(p),
                ("kernel", "witness", &[path, arc, by]) => witness.push(KernelWitness { path, arc, by }),
                (_, w, _) if RECORDS.iter().any(|&(k, r)| r == w && k != kind) => {
                    return Err(syntax(line, format!("`{w}` does not belong in a {kind} solution")));
                }
                _ => return Err(bad()),
            }
        }
        Ok(match kind {
            "coloring" => {
                let color = color
                    .into_iter()
                    .enumerate()
                    .map(|(p, c)| c.ok_or_else(|| InputError::Invalid(format!("dipath {p} has no color"))))
                    .collect::<Result<Vec<_>, _>>()?;
                Solution::Coloring {
                    colors: colors.ok_or_else(|| InputError::Invalid("missing `colors`".into()))?,
                    load: load.ok_or_else(|| InputError::Invalid("missing `load`".into()))?,
                    color,
                }
            }
            "multicut" => {
                if size.is_some_and(|s| s != cut.len()) {
                    return Err(InputError::Invalid("`size` disagrees with the cut records".into()));
                }
                Solution::Multicut { cut, disjoint }
            }
            _ => Solution::Kernel { kernel, witness },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let sols = [
            Solution::Coloring { colors: 2, load: 2, color: vec![0, 1, 0] },
            Solution::Multicut { cut: vec![3, 1], disjoint: vec![0, 4] },
            Solution::Kernel { kernel: vec![1], witness: vec![KernelWitness { path: 0, arc: 2, by: 1 }] },
        ];
        for s in sols {
            assert_eq!(Solution::parse(&s.emit()).unwrap(), s);
        }
    }

    #[test]
    fn rejects_foreign_records() {
        let text = "treepath-solution 1\nkind multicut\ncolor 0 1\n";
        assert!(matches!(Solution::parse(text), Err(InputError::Syntax { line: 3, .. })));
        let text = "treepath-solution 1\nkind coloring\ncolors 1\nload 1\ncolor 1 0\n";
        assert!(Solution::parse(text).is_err());
    }
}
