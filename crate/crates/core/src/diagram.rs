//! Validated front diagrams built from sweep words.
//!
//! Assembly replays the word left to right, tracking which arc occupies
//! each strand position. Left cusps create two arcs, right cusps join two
//! arcs' east ends, and a crossing passes the descending strand (the one
//! moving from position `i` to `i+1`) over the other unbroken, splitting
//! the under strand into a west and an east piece.
//!
//! Each component is then traversed as a closed cycle. The first left cusp
//! of a component (in word order) seeds the traversal: by default the
//! strand exits through the cusp's upper branch, and an `o<k>=u|d`
//! directive overrides that. Remaining arc directions follow from the
//! cycle (cusps reverse horizontal direction, crossings keep it), and
//! explicit directives on non-seed cusps are checked for consistency.

use thiserror::Error;

use crate::morse::{Event, EventKind, MorseParseError, MorseWord};

/// Horizontal traversal direction of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Traversal runs left to right.
    East,
    /// Traversal runs right to left.
    West,
}

/// One arc of a diagram: a maximal piece of strand between cusps and
/// under-crossing breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    /// Stable 0-based id (creation order during the sweep).
    pub id: usize,
    /// Index of the event that created the arc's west end.
    pub birth_event: usize,
    /// 1-based strand position the arc occupies right after birth.
    pub birth_level: usize,
    /// Traversal direction.
    pub direction: Direction,
}

/// A cusp with its incident arcs and traversal roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cusp {
    /// Index of the event in the word.
    pub event: usize,
    /// True for a left cusp, false for a right cusp.
    pub left: bool,
    /// For left cusps, the 0-based ordinal among left cusps in word order.
    pub ordinal: Option<usize>,
    /// Arc on the upper branch.
    pub upper: usize,
    /// Arc on the lower branch.
    pub lower: usize,
    /// Arc whose traversal enters the cusp.
    pub in_arc: usize,
    /// Arc whose traversal leaves the cusp.
    pub out_arc: usize,
    /// True when traversal moves upward through the cusp
    /// (enters on the lower branch).
    pub upward: bool,
}

/// A crossing with its incident arcs, traversal roles, and sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// Index of the event in the word.
    pub event: usize,
    /// The unbroken over arc (the strand descending at the event).
    pub over: usize,
    /// West piece of the under strand.
    pub under_west: usize,
    /// East piece of the under strand.
    pub under_east: usize,
    /// Under piece whose traversal enters the crossing.
    pub under_in: usize,
    /// Under piece whose traversal leaves the crossing.
    pub under_out: usize,
    /// True when the over and under strands run in opposite horizontal
    /// directions; the crossing is then negative and the under color is
    /// carried by the inverse operation.
    pub use_inverse: bool,
}

/// One closed component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Arcs in traversal order, starting at the seed cusp's exit arc.
    pub arcs: Vec<usize>,
    /// Index (into the diagram's cusp list) of the left cusp that seeded
    /// the traversal.
    pub seed_cusp: usize,
}

/// Classical numbers read off a single-component diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramInvariants {
    /// Signed crossing count.
    pub writhe: i64,
    /// Number of left cusps.
    pub left_cusps: usize,
    /// Number of right cusps.
    pub right_cusps: usize,
    /// Cusps traversed upward.
    pub up_cusps: usize,
    /// Cusps traversed downward.
    pub down_cusps: usize,
    /// `writhe - (left_cusps + right_cusps) / 2`.
    pub tb: i64,
    /// `(down_cusps - up_cusps) / 2`.
    pub rot: i64,
}

/// Requested polarity for [`FrontDiagram::stabilize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabSign {
    /// Raises the rotation number by 1.
    Plus,
    /// Lowers the rotation number by 1.
    Minus,
}

/// Structural errors for diagram assembly and editing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    /// The word failed lexical parsing.
    #[error(transparent)]
    Parse(#[from] MorseParseError),
    /// An event's position does not fit the strand count at that point.
    #[error("event {event} ({token}) needs a position in 1..={max} ({strands} strands alive)")]
    LevelRange {
        /// 0-based event index.
        event: usize,
        /// The event token.
        token: String,
        /// Strands alive before the event.
        strands: usize,
        /// Largest valid position for this event.
        max: usize,
    },
    /// Strands remain open after the last event.
    #[error("{strands} strands are still open at the end of the word")]
    UnbalancedEnd {
        /// Remaining open strands.
        strands: usize,
    },
    /// A directive disagrees with the propagated orientation.
    #[error("directive for left cusp {ordinal} conflicts with the propagated orientation")]
    OrientationConflict {
        /// 1-based left-cusp ordinal.
        ordinal: usize,
    },
    /// An arc id does not exist in this diagram.
    #[error("arc {arc} does not exist (diagram has {arcs} arcs)")]
    UnknownArc {
        /// The requested id.
        arc: usize,
        /// Number of arcs.
        arcs: usize,
    },
    /// The operation needs a single closed component.
    #[error("diagram has {components} components, expected exactly 1")]
    NotAKnot {
        /// Number of components.
        components: usize,
    },
}

/// Assembles a word into an oriented diagram; the free-function form of
/// [`FrontDiagram::from_word`].
pub fn validate(word: MorseWord) -> Result<FrontDiagram, DiagramError> {
    FrontDiagram::from_word(word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    West,
    East,
}

#[derive(Debug, Clone, Copy)]
struct Link {
    arc: usize,
    end: End,
}

/// A validated, oriented front diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontDiagram {
    word: MorseWord,
    arcs: Vec<Arc>,
    cusps: Vec<Cusp>,
    crossings: Vec<Crossing>,
    components: Vec<Component>,
}

impl FrontDiagram {
    /// Parses and assembles a diagram in one step.
    pub fn from_text(text: &str) -> Result<Self, DiagramError> {
        Ok(Self::from_word(MorseWord::parse(text)?)?)
    }

    /// Assembles a diagram from a parsed word, checking strand bookkeeping
    /// and orientation consistency.
    pub fn from_word(word: MorseWord) -> Result<Self, DiagramError> {
        // Sweep: build arcs, incidences, and end-to-end links.
        let mut strands: Vec<usize> = Vec::new();
        let mut births: Vec<(usize, usize)> = Vec::new(); // (event, level) per arc
        let mut partners: Vec<[Option<Link>; 2]> = Vec::new();
        let mut raw_cusps: Vec<(usize, bool, Option<usize>, usize, usize)> = Vec::new();
        let mut raw_crossings: Vec<(usize, usize, usize, usize)> = Vec::new();
        let mut left_seen = 0usize;

        let mut new_arc = |births: &mut Vec<(usize, usize)>,
                           partners: &mut Vec<[Option<Link>; 2]>,
                           event: usize,
                           level: usize| {
            births.push((event, level));
            partners.push([None, None]);
            births.len() - 1
        };
        let link = |partners: &mut Vec<[Option<Link>; 2]>, a: Link, b: Link| {
            partners[a.arc][a.end as usize] = Some(b);
            partners[b.arc][b.end as usize] = Some(a);
        };

        for (index, event) in word.events().iter().enumerate() {
            let count = strands.len();
            let level = event.level;
            match event.kind {
                EventKind::LeftCusp => {
                    if level > count + 1 {
                        return Err(DiagramError::LevelRange {
                            event: index,
                            token: event.to_string(),
                            strands: count,
                            max: count + 1,
                        });
                    }
                    let upper = new_arc(&mut births, &mut partners, index, level);
                    let lower = new_arc(&mut births, &mut partners, index, level + 1);
                    strands.insert(level - 1, lower);
                    strands.insert(level - 1, upper);
                    link(
                        &mut partners,
                        Link { arc: upper, end: End::West },
                        Link { arc: lower, end: End::West },
                    );
                    raw_cusps.push((index, true, Some(left_seen), upper, lower));
                    left_seen += 1;
                }
                EventKind::RightCusp | EventKind::Crossing => {
                    if count < 2 || level > count - 1 {
                        return Err(DiagramError::LevelRange {
                            event: index,
                            token: event.to_string(),
                            strands: count,
                            max: count.saturating_sub(1),
                        });
                    }
                    if event.kind == EventKind::RightCusp {
                        let upper = strands[level - 1];
                        let lower = strands[level];
                        strands.drain(level - 1..=level);
                        link(
                            &mut partners,
                            Link { arc: upper, end: End::East },
                            Link { arc: lower, end: End::East },
                        );
                        raw_cusps.push((index, false, None, upper, lower));
                    } else {
                        let over = strands[level - 1];
                        let under_west = strands[level];
                        let under_east = new_arc(&mut births, &mut partners, index, level);
                        strands[level - 1] = under_east;
                        strands[level] = over;
                        link(
                            &mut partners,
                            Link { arc: under_west, end: End::East },
                            Link { arc: under_east, end: End::West },
                        );
                        raw_crossings.push((index, over, under_west, under_east));
                    }
                }
            }
        }
        if !strands.is_empty() {
            return Err(DiagramError::UnbalancedEnd {
                strands: strands.len(),
            });
        }

        // Orient each component from its first left cusp.
        let mut direction: Vec<Option<Direction>> = vec![None; births.len()];
        let mut components = Vec::new();
        loop {
            let Some((seed_idx, &(_, _, ordinal, upper, lower))) = raw_cusps
                .iter()
                .enumerate()
                .find(|(_, c)| c.1 && direction[c.3].is_none())
            else {
                break;
            };
            let ordinal = ordinal.expect("left cusps carry an ordinal");
            let exit_upper = word.exit_upper()[ordinal].unwrap_or(true);
            let start = if exit_upper { upper } else { lower };
            let mut arcs_in_order = Vec::new();
            let mut arc = start;
            let mut dir = Direction::East;
            loop {
                direction[arc] = Some(dir);
                arcs_in_order.push(arc);
                let end = match dir {
                    Direction::East => End::East,
                    Direction::West => End::West,
                };
                let next = partners[arc][end as usize].expect("balanced words join every end");
                let (next_arc, next_dir) = match next.end {
                    End::West => (next.arc, Direction::East),
                    End::East => (next.arc, Direction::West),
                };
                if next_arc == start && next_dir == Direction::East {
                    break;
                }
                arc = next_arc;
                dir = next_dir;
            }
            components.push(Component {
                arcs: arcs_in_order,
                seed_cusp: seed_idx,
            });
        }

        let arcs: Vec<Arc> = births
            .iter()
            .enumerate()
            .map(|(id, &(birth_event, birth_level))| Arc {
                id,
                birth_event,
                birth_level,
                direction: direction[id].expect("every arc lies on a traversed component"),
            })
            .collect();

        // Check explicit directives against the propagated orientation.
        for &(_, left, ordinal, upper, _) in &raw_cusps {
            if !left {
                continue;
            }
            let ordinal = ordinal.expect("left cusps carry an ordinal");
            if let Some(bit) = word.exit_upper()[ordinal] {
                let exits_upper = arcs[upper].direction == Direction::East;
                if exits_upper != bit {
                    return Err(DiagramError::OrientationConflict {
                        ordinal: ordinal + 1,
                    });
                }
            }
        }

        // Assign traversal roles.
        let cusps = raw_cusps
            .into_iter()
            .map(|(event, left, ordinal, upper, lower)| {
                let upper_in = if left {
                    arcs[upper].direction == Direction::West
                } else {
                    arcs[upper].direction == Direction::East
                };
                let (in_arc, out_arc) = if upper_in { (upper, lower) } else { (lower, upper) };
                Cusp {
                    event,
                    left,
                    ordinal,
                    upper,
                    lower,
                    in_arc,
                    out_arc,
                    upward: in_arc == lower,
                }
            })
            .collect();
        let crossings = raw_crossings
            .into_iter()
            .map(|(event, over, under_west, under_east)| {
                let under_dir = arcs[under_west].direction;
                debug_assert_eq!(under_dir, arcs[under_east].direction);
                let (under_in, under_out) = match under_dir {
                    Direction::East => (under_west, under_east),
                    Direction::West => (under_east, under_west),
                };
                Crossing {
                    event,
                    over,
                    under_west,
                    under_east,
                    under_in,
                    under_out,
                    use_inverse: arcs[over].direction != under_dir,
                }
            })
            .collect();

        Ok(FrontDiagram {
            word,
            arcs,
            cusps,
            crossings,
            components,
        })
    }

    /// The normalized word.
    pub fn word(&self) -> &MorseWord {
        &self.word
    }

    /// All arcs, indexed by id.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// All cusps in event order.
    pub fn cusps(&self) -> &[Cusp] {
        &self.cusps
    }

    /// All crossings in event order.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Closed components, ordered by their first left cusp.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Signed crossing count.
    pub fn writhe(&self) -> i64 {
        self.crossings
            .iter()
            .map(|c| if c.use_inverse { -1 } else { 1 })
            .sum()
    }

    /// Classical invariants; requires a single closed component.
    pub fn classical_invariants(&self) -> Result<DiagramInvariants, DiagramError> {
        if self.components.len() != 1 {
            return Err(DiagramError::NotAKnot {
                components: self.components.len(),
            });
        }
        let (up, down, left, right) = self.cusp_counts();
        let writhe = self.writhe();
        Ok(DiagramInvariants {
            writhe,
            left_cusps: left,
            right_cusps: right,
            up_cusps: up,
            down_cusps: down,
            tb: writhe - ((left + right) / 2) as i64,
            rot: (down as i64 - up as i64) / 2,
        })
    }

    fn cusp_counts(&self) -> (usize, usize, usize, usize) {
        let up = self.cusps.iter().filter(|c| c.upward).count();
        let down = self.cusps.len() - up;
        let left = self.cusps.iter().filter(|c| c.left).count();
        let right = self.cusps.len() - left;
        (up, down, left, right)
    }

    /// Inserts a zig-zag on `arc`, producing a new diagram with two more
    /// cusps, the same writhe, and the rotation number moved by the sign.
    pub fn stabilize(&self, sign: StabSign, arc: usize) -> Result<FrontDiagram, DiagramError> {
        let Some(arc) = self.arcs.get(arc) else {
            return Err(DiagramError::UnknownArc {
                arc,
                arcs: self.arcs.len(),
            });
        };
        let dip_down = match (sign, arc.direction) {
            (StabSign::Plus, Direction::East) | (StabSign::Minus, Direction::West) => true,
            (StabSign::Plus, Direction::West) | (StabSign::Minus, Direction::East) => false,
        };
        let primary = self.insert_zigzag(arc, dip_down)?;
        if self.zigzag_matches(&primary, sign) {
            return Ok(primary);
        }
        let alternate = self.insert_zigzag(arc, !dip_down)?;
        if self.zigzag_matches(&alternate, sign) {
            return Ok(alternate);
        }
        unreachable!("one zig-zag polarity must realize the requested sign");
    }

    fn insert_zigzag(&self, arc: &Arc, dip_down: bool) -> Result<FrontDiagram, DiagramError> {
        let j = arc.birth_level;
        let inserted = if dip_down {
            [
                Event { kind: EventKind::LeftCusp, level: j + 1 },
                Event { kind: EventKind::RightCusp, level: j },
            ]
        } else {
            [
                Event { kind: EventKind::LeftCusp, level: j },
                Event { kind: EventKind::RightCusp, level: j + 1 },
            ]
        };
        let mut events = self.word.events().to_vec();
        events.splice(arc.birth_event + 1..arc.birth_event + 1, inserted);
        let cusp_slot = self.word.events()[..=arc.birth_event]
            .iter()
            .filter(|e| e.kind == EventKind::LeftCusp)
            .count();
        let mut exit_upper = self.word.exit_upper().to_vec();
        exit_upper.insert(cusp_slot, None);
        let word = MorseWord::from_parts(events, exit_upper)?;
        FrontDiagram::from_word(word)
    }

    fn zigzag_matches(&self, candidate: &FrontDiagram, sign: StabSign) -> bool {
        let (up0, down0, ..) = self.cusp_counts();
        let (up1, down1, ..) = candidate.cusp_counts();
        candidate.writhe() == self.writhe()
            && candidate.components.len() == self.components.len()
            && match sign {
                StabSign::Plus => down1 == down0 + 2 && up1 == up0,
                StabSign::Minus => up1 == up0 + 2 && down1 == down0,
            }
    }
}
