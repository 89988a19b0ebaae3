use thiserror::Error;

/// A set-producing operation was asked for a level above its configured cap.
///
/// Enumerating the nested sets is exponential in the level, so every
/// enumerator refuses levels above a caller-supplied cap instead of trying to
/// materialize an astronomically large set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("level {level} exceeds the configured cap {cap}")]
pub struct CapExceeded {
    pub level: u32,
    pub cap: u32,
}

pub(crate) fn check_cap(level: u32, cap: u32) -> Result<(), CapExceeded> {
    if level > cap {
        Err(CapExceeded { level, cap })
    } else {
        Ok(())
    }
}
