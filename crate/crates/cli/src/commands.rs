//! The solver, verification and export commands behind the binary.

use std::collections::HashSet;
use std::fmt::Write;

use treepath::coloring::color_dipaths_from;
use treepath::kernel::{validate_priorities, ArcPriorities};
use treepath::multicut::solve_multicut;
use treepath::oracle::{build_intersection_graph, exact_chromatic, exact_min_multicut, verify_kernel, MAX_ARCS, MAX_PATHS};
use treepath::{solve_kernel, ArcId, Dipath, PathId, PathIndex, PriorityRelation, VertexId};

use crate::error::{CliError, InputError};
use crate::instance::{Instance, Loaded};
use crate::solution::{KernelWitness, Solution};

fn root(inst: &Instance, over: Option<VertexId>) -> VertexId {
    over.or(inst.root).unwrap_or(0)
}

pub fn color(inst: &Instance, over: Option<VertexId>) -> Result<Solution, CliError> {
    let Loaded { tree, paths } = inst.load()?;
    tree.check_vertex(root(inst, over)).map_err(InputError::from)?;
    let res = color_dipaths_from(&tree, &paths, root(inst, over))?;
    Ok(Solution::Coloring { colors: res.num_colors, load: res.omega, color: res.color })
}

pub fn multicut(inst: &Instance, over: Option<VertexId>) -> Result<Solution, CliError> {
    let Loaded { tree, paths } = inst.load()?;
    let cert = solve_multicut(&tree, &paths, root(inst, over))?;
    Ok(Solution::Multicut { cut: cert.cut, disjoint: cert.stable_set })
}

pub fn kernel(inst: &Instance, over: Option<VertexId>) -> Result<Solution, CliError> {
    let Loaded { tree, paths } = inst.load()?;
    let rel = inst.priority.as_ref().ok_or(InputError::MissingPriority)?;
    let res = solve_kernel(&tree, &paths, rel, root(inst, over))?;
    let witness = res
        .witness
        .iter()
        .enumerate()
        .filter_map(|(path, w)| w.map(|w| KernelWitness { path, arc: w.arc, by: w.by }))
        .collect();
    Ok(Solution::Kernel { kernel: res.kernel, witness })
}

fn fail<T>(msg: String) -> Result<T, CliError> {
    Err(CliError::Verify(msg))
}

fn shared_arc(p: &Dipath, q: &Dipath) -> Option<ArcId> {
    p.arcs().iter().copied().find(|&a| q.contains_arc(a))
}

fn check_ids(ids: &[PathId], count: usize, what: &str) -> Result<(), CliError> {
    let mut seen = HashSet::new();
    for &p in ids {
        if p >= count {
            return fail(format!("{what} names dipath {p}, but there are {count}"));
        }
        if !seen.insert(p) {
            return fail(format!("{what} lists dipath {p} twice"));
        }
    }
    Ok(())
}

fn check_disjoint(paths: &[Dipath], ids: &[PathId]) -> Result<(), CliError> {
    for (i, &p) in ids.iter().enumerate() {
        for &q in &ids[i + 1..] {
            if let Some(a) = shared_arc(&paths[p], &paths[q]) {
                return fail(format!("dipaths {p} and {q} share arc {a}"));
            }
        }
    }
    Ok(())
}

fn verify_coloring(l: &Loaded, colors: usize, load: usize, color: &[usize]) -> Result<(), CliError> {
    let Loaded { tree, paths } = l;
    if color.len() != paths.len() {
        return fail(format!("{} dipaths but {} colors given", paths.len(), color.len()));
    }
    let mut on_arc: Vec<Vec<PathId>> = vec![Vec::new(); tree.arc_count()];
    for (p, path) in paths.iter().enumerate() {
        for &a in path.arcs() {
            if let Some(&q) = on_arc[a].iter().find(|&&q| color[q] == color[p]) {
                return fail(format!("arc {a}: dipaths {q} and {p} both have color {}", color[p]));
            }
            on_arc[a].push(p);
        }
    }
    let used = color.iter().map(|c| c + 1).max().unwrap_or(0);
    let omega = on_arc.iter().map(Vec::len).max().unwrap_or(0);
    if used != colors {
        return fail(format!("claims {colors} colors but uses {used}"));
    }
    if load != omega {
        return fail(format!("claims load {load} but the maximum arc load is {omega}"));
    }
    if colors != omega {
        return fail(format!("{colors} colors where {omega} suffice"));
    }
    if paths.len() <= MAX_PATHS {
        let chi = exact_chromatic(&build_intersection_graph(tree, paths)).expect("within the oracle limit");
        if chi != colors {
            return fail(format!("{colors} colors but the chromatic number is {chi}"));
        }
    }
    Ok(())
}

fn verify_multicut(l: &Loaded, cut: &[ArcId], disjoint: &[PathId]) -> Result<(), CliError> {
    let Loaded { tree, paths } = l;
    let mut seen = HashSet::new();
    for &a in cut {
        if a >= tree.arc_count() {
            return fail(format!("cut names arc {a}, but there are {}", tree.arc_count()));
        }
        if !seen.insert(a) {
            return fail(format!("cut lists arc {a} twice"));
        }
    }
    check_ids(disjoint, paths.len(), "packing")?;
    if let Some(p) = paths.iter().position(|p| !cut.iter().any(|&a| p.contains_arc(a))) {
        return fail(format!("dipath {p} meets no cut arc"));
    }
    check_disjoint(paths, disjoint)?;
    if cut.len() != disjoint.len() {
        return fail(format!("{} cut arcs against {} disjoint dipaths", cut.len(), disjoint.len()));
    }
    if tree.arc_count() <= MAX_ARCS {
        let best = exact_min_multicut(tree, paths).expect("within the oracle limit").len();
        if best != cut.len() {
            return fail(format!("cut of {} arcs where {best} suffice", cut.len()));
        }
    }
    Ok(())
}

fn verify_kernel_solution(
    l: &Loaded,
    rel: &PriorityRelation,
    kernel: &[PathId],
    witness: &[KernelWitness],
) -> Result<(), CliError> {
    let Loaded { tree, paths } = l;
    let rooted = tree.root(0).map_err(InputError::from)?;
    let index = PathIndex::new(&rooted, paths).map_err(InputError::from)?;
    let prios: ArcPriorities = validate_priorities(tree, paths, &index, rel).map_err(InputError::from)?;
    check_ids(kernel, paths.len(), "kernel")?;
    check_disjoint(paths, kernel)?;
    let members: HashSet<PathId> = kernel.iter().copied().collect();
    for q in (0..paths.len()).filter(|q| !members.contains(q)) {
        let Some(w) = witness.iter().find(|w| w.path == q) else {
            return fail(format!("dipath {q} is outside the kernel without a witness"));
        };
        if !members.contains(&w.by) {
            return fail(format!("witness of dipath {q} names {}, which is not in the kernel", w.by));
        }
        if w.arc >= tree.arc_count() || !prios.at_least(w.arc, w.by, q) {
            return fail(format!("dipath {} does not dominate dipath {q} on arc {}", w.by, w.arc));
        }
    }
    if let Some(w) = witness.iter().find(|w| members.contains(&w.path) || w.path >= paths.len()) {
        return fail(format!("witness given for dipath {}, which needs none", w.path));
    }
    if !verify_kernel(tree, paths, rel, kernel) {
        return fail("not a kernel".into());
    }
    Ok(())
}

/// Re-checks a solution against its instance.
pub fn verify(inst: &Instance, sol: &Solution) -> Result<(), CliError> {
    let l = inst.load()?;
    match sol {
        Solution::Coloring { colors, load, color } => verify_coloring(&l, *colors, *load, color),
        Solution::Multicut { cut, disjoint } => verify_multicut(&l, cut, disjoint),
        Solution::Kernel { kernel, witness } => {
            let rel = inst.priority.as_ref().ok_or(InputError::MissingPriority)?;
            verify_kernel_solution(&l, rel, kernel, witness)
        }
    }
}

const PALETTE: [&str; 12] = [
    "red3", "blue3", "green4", "darkorange2", "purple3", "cyan4", "deeppink3", "gold3", "saddlebrown", "olivedrab",
    "slateblue", "gray30",
];

/// Graphviz rendering of the tree with every dipath drawn alongside the
/// arcs it uses, highlighted by the solution when one is given.
pub fn export_dot(inst: &Instance, sol: Option<&Solution>) -> Result<String, CliError> {
    let Loaded { tree, paths } = inst.load()?;
    let mut out = String::new();
    writeln!(out, "digraph treepath {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..tree.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    let cut: HashSet<ArcId> = match sol {
        Some(Solution::Multicut { cut, .. }) => cut.iter().copied().collect(),
        _ => HashSet::new(),
    };
    for (a, arc) in tree.arcs().iter().enumerate() {
        let style = if cut.contains(&a) { ", color=red, penwidth=3" } else { "" };
        writeln!(out, "  {} -> {} [label=\"a{a}\"{style}];", arc.tail, arc.head).unwrap();
    }
    let picked: HashSet<PathId> = match sol {
        Some(Solution::Multicut { disjoint, .. }) => disjoint.iter().copied().collect(),
        Some(Solution::Kernel { kernel, .. }) => kernel.iter().copied().collect(),
        _ => HashSet::new(),
    };
    for (p, path) in paths.iter().enumerate() {
        let (color, width) = match sol {
            Some(Solution::Coloring { color, .. }) => (PALETTE[color[p] % PALETTE.len()], 1),
            _ if picked.contains(&p) => ("red3", 2),
            _ => ("gray50", 1),
        };
        for w in path.vertices().windows(2) {
            writeln!(
                out,
                "  {} -> {} [style=dashed, constraint=false, color={color}, penwidth={width}, label=\"P{p}\", fontcolor={color}];",
                w[0], w[1]
            )
            .unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}
