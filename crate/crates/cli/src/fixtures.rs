use std::path::{Path, PathBuf};

use anyhow::Context;
use packing_core::graph::{named, write_edge_list};
use packing_core::reducibility::{named_config, synthetic_corpus, write_configs, SAMPLE_CONFIG};

use crate::args::FixtureName;

const EMBEDDED: [(&str, FixtureName); 6] = [
    ("k4", FixtureName::K4),
    ("cube", FixtureName::Cube),
    ("dodecahedron", FixtureName::Dodecahedron),
    ("truncated_tetrahedron", FixtureName::TruncatedTetrahedron),
    ("chorded_ring", FixtureName::ChordedRing),
    ("sharpness_gadget", FixtureName::Sharpness),
];

/// Writes the files for `name` into `dir` and returns their paths.
pub fn write(name: FixtureName, dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let mut out = Vec::new();
    let mut put = |file: &str, body: &str| -> anyhow::Result<()> {
        let path = dir.join(file);
        std::fs::write(&path, body).with_context(|| format!("cannot write {}", path.display()))?;
        out.push(path);
        Ok(())
    };
    let all = name == FixtureName::All;
    if all || name == FixtureName::Petersen {
        put("petersen.txt", &write_edge_list(&named::petersen()))?;
    }
    for (graph, tag) in EMBEDDED {
        if all || name == tag {
            let (g, rot) = named::planar_embedding(graph)?;
            put(&format!("{graph}.txt"), &write_edge_list(&g))?;
            put(&format!("{graph}.rot"), &rot.write())?;
        }
    }
    if all || name == FixtureName::Sharpness {
        let (g, rot) = named::planar_embedding("sharpness_doubled")?;
        put("sharpness_doubled.txt", &write_edge_list(&g))?;
        put("sharpness_doubled.rot", &rot.write())?;
    }
    if all || name == FixtureName::SampleConfig {
        put("sample_config.txt", SAMPLE_CONFIG)?;
    }
    if all || name == FixtureName::NamedConfigs {
        for cfg_name in named::CONFIG_NAMES {
            let cfg = named_config(cfg_name).expect("listed configuration exists");
            put(&format!("{cfg_name}.cfg"), &write_configs(&[cfg]))?;
        }
    }
    if all || name == FixtureName::SyntheticConfigs {
        put("synthetic_configs.cfg", &write_configs(&synthetic_corpus()))?;
    }
    Ok(out)
}
