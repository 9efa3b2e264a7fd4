//! Known minimum (or best known) vertex cover sizes for the standard DIMACS
//! and BHOSLIB instances.
//!
//! DIMACS graphs are maximum-clique instances: the cover size refers to their
//! complement. BHOSLIB sizes refer to the `.mis` files directly.

use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Clique formulation; search the complement.
    Dimacs,
    /// Independent-set formulation; search the graph as given.
    Bhoslib,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownTarget {
    pub name: &'static str,
    pub vertices: usize,
    pub cover_size: usize,
    /// Optimality has been proved (as opposed to best known).
    pub proved: bool,
    pub suite: Suite,
}

const fn dimacs(name: &'static str, vertices: usize, cover_size: usize, proved: bool) -> KnownTarget {
    KnownTarget {
        name,
        vertices,
        cover_size,
        proved,
        suite: Suite::Dimacs,
    }
}

const fn frb(name: &'static str, vertices: usize, cover_size: usize) -> KnownTarget {
    KnownTarget {
        name,
        vertices,
        cover_size,
        proved: true,
        suite: Suite::Bhoslib,
    }
}

pub const KNOWN_TARGETS: &[KnownTarget] = &[
    dimacs("brock200_2", 200, 188, true),
    dimacs("brock200_4", 200, 183, true),
    dimacs("brock400_2", 400, 371, true),
    dimacs("brock400_4", 400, 367, true),
    dimacs("brock800_2", 800, 776, true),
    dimacs("brock800_4", 800, 774, true),
    dimacs("C125.9", 125, 91, true),
    dimacs("C250.9", 250, 206, true),
    dimacs("C500.9", 500, 443, true),
    dimacs("C1000.9", 1000, 932, false),
    dimacs("C2000.5", 2000, 1984, false),
    dimacs("C2000.9", 2000, 1920, false),
    dimacs("C4000.5", 4000, 3982, false),
    dimacs("DSJC500.5", 500, 487, true),
    dimacs("DSJC1000.5", 1000, 985, true),
    dimacs("gen200_p0.9_44", 200, 156, true),
    dimacs("gen200_p0.9_55", 200, 145, true),
    dimacs("gen400_p0.9_55", 400, 345, true),
    dimacs("gen400_p0.9_65", 400, 335, true),
    dimacs("gen400_p0.9_75", 400, 325, true),
    dimacs("hamming8-4", 256, 240, true),
    dimacs("hamming10-4", 1024, 984, true),
    dimacs("keller4", 171, 160, true),
    dimacs("keller5", 776, 749, true),
    dimacs("keller6", 3361, 3302, false),
    dimacs("MANN_a27", 378, 252, true),
    dimacs("MANN_a45", 1035, 690, true),
    dimacs("MANN_a81", 3321, 2221, false),
    dimacs("p_hat300-1", 300, 292, true),
    dimacs("p_hat300-2", 300, 275, true),
    dimacs("p_hat300-3", 300, 264, true),
    dimacs("p_hat700-1", 700, 689, true),
    dimacs("p_hat700-2", 700, 656, true),
    dimacs("p_hat700-3", 700, 638, true),
    dimacs("p_hat1500-1", 1500, 1488, true),
    dimacs("p_hat1500-2", 1500, 1435, true),
    dimacs("p_hat1500-3", 1500, 1406, false),
    frb("frb30-15-1", 450, 420),
    frb("frb30-15-2", 450, 420),
    frb("frb30-15-3", 450, 420),
    frb("frb30-15-4", 450, 420),
    frb("frb30-15-5", 450, 420),
    frb("frb35-17-1", 595, 560),
    frb("frb35-17-2", 595, 560),
    frb("frb35-17-3", 595, 560),
    frb("frb35-17-4", 595, 560),
    frb("frb35-17-5", 595, 560),
    frb("frb40-19-1", 760, 720),
    frb("frb40-19-2", 760, 720),
    frb("frb40-19-3", 760, 720),
    frb("frb40-19-4", 760, 720),
    frb("frb40-19-5", 760, 720),
    frb("frb45-21-1", 945, 900),
    frb("frb45-21-2", 945, 900),
    frb("frb45-21-3", 945, 900),
    frb("frb45-21-4", 945, 900),
    frb("frb45-21-5", 945, 900),
    frb("frb50-23-1", 1150, 1100),
    frb("frb50-23-2", 1150, 1100),
    frb("frb50-23-3", 1150, 1100),
    frb("frb50-23-4", 1150, 1100),
    frb("frb50-23-5", 1150, 1100),
    frb("frb53-24-1", 1272, 1219),
    frb("frb53-24-2", 1272, 1219),
    frb("frb53-24-3", 1272, 1219),
    frb("frb53-24-4", 1272, 1219),
    frb("frb53-24-5", 1272, 1219),
    frb("frb56-25-1", 1400, 1344),
    frb("frb56-25-2", 1400, 1344),
    frb("frb56-25-3", 1400, 1344),
    frb("frb56-25-4", 1400, 1344),
    frb("frb56-25-5", 1400, 1344),
    frb("frb59-26-1", 1534, 1475),
    frb("frb59-26-2", 1534, 1475),
    frb("frb59-26-3", 1534, 1475),
    frb("frb59-26-4", 1534, 1475),
    frb("frb59-26-5", 1534, 1475),
    frb("frb100-40", 4000, 3900),
];

const EXTENSIONS: &[&str] = &["clq", "mis", "col", "dimacs", "txt"];

/// Instance name from a file path, dropping a known graph-file extension.
pub fn instance_name(path: &Path) -> String {
    let file = path
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_default();
    match file.rsplit_once('.') {
        Some((stem, ext)) if EXTENSIONS.contains(&ext.to_ascii_lowercase().as_str()) => {
            stem.to_string()
        }
        _ => file,
    }
}

fn normalize(name: &str) -> String {
    name.to_ascii_lowercase().replace('_', ".")
}

/// Looks up an instance by name; `brock200_2` and `brock200.2` both match.
pub fn lookup(name: &str) -> Option<&'static KnownTarget> {
    let key = normalize(name);
    KNOWN_TARGETS.iter().find(|t| normalize(t.name) == key)
}
