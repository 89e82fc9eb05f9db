//! Movement rules: who must or may move on each turn.

use serde::{Deserialize, Serialize};

/// Constraint on the cops' round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CopRule {
    /// Every cop may move or stay.
    FreeAll,
    /// Every cop must move to a neighbor.
    MustMoveAll,
    /// Each cop may move or stay, but at least one must move.
    AtLeastOne,
    /// At most one cop changes vertex per round.
    AtMostOne,
}

/// Constraint on the robber's move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RobberRule {
    Free,
    MustMove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MovementRule {
    pub cop: CopRule,
    pub robber: RobberRule,
}

impl MovementRule {
    /// Classical game: anyone may stay.
    pub const PASSIVE: MovementRule = MovementRule {
        cop: CopRule::FreeAll,
        robber: RobberRule::Free,
    };
    /// Every player moves on every turn.
    pub const FULLY_ACTIVE: MovementRule = MovementRule {
        cop: CopRule::MustMoveAll,
        robber: RobberRule::MustMove,
    };
    /// At least one cop moves; the robber moves.
    pub const ACTIVE: MovementRule = MovementRule {
        cop: CopRule::AtLeastOne,
        robber: RobberRule::MustMove,
    };
    /// At most one cop moves; the robber may stay.
    pub const LAZY: MovementRule = MovementRule {
        cop: CopRule::AtMostOne,
        robber: RobberRule::Free,
    };

    pub const ALL_PRESETS: [MovementRule; 4] = [
        Self::PASSIVE,
        Self::FULLY_ACTIVE,
        Self::ACTIVE,
        Self::LAZY,
    ];

    /// Whether the per-round `any_moved` flag carries information.
    pub fn uses_moved_flag(&self) -> bool {
        matches!(self.cop, CopRule::AtLeastOne | CopRule::AtMostOne)
    }

    /// Whether some constraint forces movement, which requires every vertex
    /// to have a neighbor.
    pub fn has_must_move(&self) -> bool {
        self.cop == CopRule::MustMoveAll || self.robber == RobberRule::MustMove
    }

    pub fn name(&self) -> &'static str {
        match (self.cop, self.robber) {
            (CopRule::FreeAll, RobberRule::Free) => "passive",
            (CopRule::MustMoveAll, RobberRule::MustMove) => "fully-active",
            (CopRule::AtLeastOne, RobberRule::MustMove) => "active",
            (CopRule::AtMostOne, RobberRule::Free) => "lazy",
            _ => "custom",
        }
    }

    pub fn parse(name: &str) -> Option<MovementRule> {
        match name {
            "passive" => Some(Self::PASSIVE),
            "fully-active" | "fully_active" | "fullyactive" => Some(Self::FULLY_ACTIVE),
            "active" => Some(Self::ACTIVE),
            "lazy" => Some(Self::LAZY),
            _ => None,
        }
    }

    /// Stable one-byte encodings for cache headers and memo keys.
    pub fn cop_byte(&self) -> u8 {
        match self.cop {
            CopRule::FreeAll => 0,
            CopRule::MustMoveAll => 1,
            CopRule::AtLeastOne => 2,
            CopRule::AtMostOne => 3,
        }
    }

    pub fn robber_byte(&self) -> u8 {
        match self.robber {
            RobberRule::Free => 0,
            RobberRule::MustMove => 1,
        }
    }

    pub fn from_bytes(cop: u8, robber: u8) -> Option<MovementRule> {
        let cop = match cop {
            0 => CopRule::FreeAll,
            1 => CopRule::MustMoveAll,
            2 => CopRule::AtLeastOne,
            3 => CopRule::AtMostOne,
            _ => return None,
        };
        let robber = match robber {
            0 => RobberRule::Free,
            1 => RobberRule::MustMove,
            _ => return None,
        };
        Some(MovementRule { cop, robber })
    }
}

impl std::fmt::Display for MovementRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_roundtrip_through_names_and_bytes() {
        for rule in MovementRule::ALL_PRESETS {
            assert_eq!(MovementRule::parse(rule.name()), Some(rule));
            assert_eq!(
                MovementRule::from_bytes(rule.cop_byte(), rule.robber_byte()),
                Some(rule)
            );
        }
        assert!(MovementRule::parse("bogus").is_none());
    }

    #[test]
    fn flag_usage() {
        assert!(!MovementRule::PASSIVE.uses_moved_flag());
        assert!(!MovementRule::FULLY_ACTIVE.uses_moved_flag());
        assert!(MovementRule::ACTIVE.uses_moved_flag());
        assert!(MovementRule::LAZY.uses_moved_flag());
    }
}
