//! File formats, command-line families, reports and the verification
//! suites built on `brittle-core`.

pub mod families;
pub mod format;
pub mod report;
pub mod verify;

use brittle_core::parameters::Limits;

/// Environment variable that overrides solver limits, e.g.
/// `max_vertices=30,max_edges=60,oracle_max_edges=16`.
pub const LIMITS_ENV: &str = "BRITTLE_LIMITS";

/// Applies `key=value` overrides to the default limits.
pub fn parse_limits(spec: &str) -> Result<Limits, String> {
    let mut limits = Limits::default();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| format!("expected key=value, got `{item}`"))?;
        let value: usize = value.trim().parse().map_err(|_| format!("bad number in `{item}`"))?;
        match key.trim() {
            "max_vertices" => limits.max_vertices = value,
            "max_edges" => limits.max_edges = value,
            "oracle_max_edges" => limits.oracle_max_edges = value,
            other => return Err(format!("unknown limit `{other}`")),
        }
    }
    Ok(limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits() {
        assert_eq!(parse_limits("").unwrap(), Limits::default());
        let l = parse_limits("max_vertices=30, max_edges=60").unwrap();
        assert_eq!((l.max_vertices, l.max_edges, l.oracle_max_edges), (30, 60, 16));
        assert!(parse_limits("max_vertices").is_err());
        assert!(parse_limits("speed=3").is_err());
    }
}
