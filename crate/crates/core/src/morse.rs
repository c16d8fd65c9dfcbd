//! A one-line word format for fronts swept left to right.
//!
//! A word is a whitespace-separated list of event tokens, read as a sweep
//! across the plane. Strand positions are numbered from 1 at the top.
//! With `c` strands currently alive:
//!
//! * `L<i>` opens a left cusp whose two new strands occupy positions `i`
//!   and `i+1` (valid for `1 <= i <= c+1`);
//! * `R<i>` closes strands `i` and `i+1` in a right cusp
//!   (valid for `1 <= i <= c-1`);
//! * `X<i>` crosses strands `i` and `i+1` (valid for `1 <= i <= c-1`).
//!
//! Parsing is lexical: it checks token shape and directive bookkeeping
//! only. Position bounds and strand balance are checked when the word is
//! assembled into a diagram. `#` starts a comment that runs to the end of
//! the line.
//!
//! After all events, optional trailing directives `o<k>=u` or `o<k>=d`
//! declare that the strand leaving the `k`-th left cusp (1-based, in word
//! order) exits on the upper (`u`) or lower (`d`) branch. The exit branch
//! of the first left cusp of each component defaults to upper; other
//! cusps are oriented by propagation, and explicit directives on them are
//! checked for consistency.

use std::fmt;

use thiserror::Error;

/// The three event kinds of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    /// Two strands are born.
    LeftCusp,
    /// Two adjacent strands die.
    RightCusp,
    /// Two adjacent strands cross.
    Crossing,
}

/// One event of a sweep at a 1-based strand position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Event {
    /// What happens.
    pub kind: EventKind,
    /// The 1-based position the event acts at.
    pub level: usize,
}

impl fmt::Display for Event {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
            EventKind::Crossing => 'X',
        };
        write!(out, "{letter}{}", self.level)
    }
}

/// Lexical and grammar errors for sweep words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorseParseError {
    /// A token is not `L<i>`, `R<i>`, `X<i>`, or `o<k>=u|d` with a positive
    /// number.
    #[error("token {pos} ({token:?}) is not a valid event or directive")]
    BadToken {
        /// 1-based token position.
        pos: usize,
        /// The offending token.
        token: String,
    },
    /// An event token appears after a directive.
    #[error("token {pos} ({token:?}) appears after a directive; directives must come last")]
    EventAfterDirective {
        /// 1-based token position.
        pos: usize,
        /// The offending token.
        token: String,
    },
    /// A directive names a left cusp that does not exist.
    #[error("directive names left cusp {ordinal}, but the word has {left_cusps}")]
    DirectiveRange {
        /// 1-based cusp ordinal named.
        ordinal: usize,
        /// Number of left cusps in the word.
        left_cusps: usize,
    },
    /// Two directives name the same left cusp.
    #[error("left cusp {ordinal} is set by more than one directive")]
    DirectiveDuplicate {
        /// 1-based cusp ordinal.
        ordinal: usize,
    },
}

/// A lexically valid sweep word: events plus exit-branch directives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorseWord {
    events: Vec<Event>,
    /// Indexed by left-cusp ordinal (0-based, in word order);
    /// `Some(true)` means the exit is on the upper branch.
    exit_upper: Vec<Option<bool>>,
}

fn lex_event(pos: usize, token: &str) -> Result<Event, MorseParseError> {
    let bad = || MorseParseError::BadToken {
        pos,
        token: token.to_string(),
    };
    let mut chars = token.chars();
    let kind = match chars.next() {
        Some('L') => EventKind::LeftCusp,
        Some('R') => EventKind::RightCusp,
        Some('X') => EventKind::Crossing,
        _ => return Err(bad()),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let level: usize = digits.parse().map_err(|_| bad())?;
    if level == 0 {
        return Err(bad());
    }
    Ok(Event { kind, level })
}

fn lex_directive(pos: usize, token: &str) -> Result<(usize, bool), MorseParseError> {
    let bad = || MorseParseError::BadToken {
        pos,
        token: token.to_string(),
    };
    let rest = token.strip_prefix('o').ok_or_else(bad)?;
    let (digits, branch) = rest.split_once('=').ok_or_else(bad)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let ordinal: usize = digits.parse().map_err(|_| bad())?;
    if ordinal == 0 {
        return Err(bad());
    }
    let upper = match branch {
        "u" => true,
        "d" => false,
        _ => return Err(bad()),
    };
    Ok((ordinal, upper))
}

fn bind_directives(
    left_cusps: usize,
    directives: Vec<(usize, bool)>,
) -> Result<Vec<Option<bool>>, MorseParseError> {
    let mut exit_upper = vec![None; left_cusps];
    for (ordinal, upper) in directives {
        if ordinal > left_cusps {
            return Err(MorseParseError::DirectiveRange {
                ordinal,
                left_cusps,
            });
        }
        let slot = &mut exit_upper[ordinal - 1];
        if slot.is_some() {
            return Err(MorseParseError::DirectiveDuplicate { ordinal });
        }
        *slot = Some(upper);
    }
    Ok(exit_upper)
}

impl MorseWord {
    /// Parses a word from text. Lexical and directive checks only;
    /// position bounds and balance are checked at diagram assembly.
    pub fn parse(text: &str) -> Result<Self, MorseParseError> {
        let mut events = Vec::new();
        let mut directives: Vec<(usize, bool)> = Vec::new();
        let mut pos = 0usize;
        for line in text.lines() {
            let code = line.split('#').next().unwrap_or("");
            for token in code.split_whitespace() {
                pos += 1;
                if token.starts_with('o') {
                    let (ordinal, upper) = lex_directive(pos, token)?;
                    directives.push((ordinal, upper));
                } else if directives.is_empty() {
                    events.push(lex_event(pos, token)?);
                } else {
                    return Err(MorseParseError::EventAfterDirective {
                        pos,
                        token: token.to_string(),
                    });
                }
            }
        }
        let left_cusps = events
            .iter()
            .filter(|e| e.kind == EventKind::LeftCusp)
            .count();
        let exit_upper = bind_directives(left_cusps, directives)?;
        Ok(MorseWord { events, exit_upper })
    }

    /// Assembles a word from parts; `exit_upper` must have one slot per
    /// left cusp.
    pub fn from_parts(
        events: Vec<Event>,
        exit_upper: Vec<Option<bool>>,
    ) -> Result<Self, MorseParseError> {
        let left_cusps = events
            .iter()
            .filter(|e| e.kind == EventKind::LeftCusp)
            .count();
        if exit_upper.len() != left_cusps {
            return Err(MorseParseError::DirectiveRange {
                ordinal: exit_upper.len(),
                left_cusps,
            });
        }
        Ok(MorseWord { events, exit_upper })
    }

    /// The events in sweep order.
    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Exit-branch directives by left-cusp ordinal (0-based).
    pub fn exit_upper(&self) -> &[Option<bool>] {
        &self.exit_upper
    }

    /// Number of left cusps.
    pub fn left_cusp_count(&self) -> usize {
        self.exit_upper.len()
    }
}

impl fmt::Display for MorseWord {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for event in &self.events {
            if !first {
                write!(out, " ")?;
            }
            write!(out, "{event}")?;
            first = false;
        }
        for (k, bit) in self.exit_upper.iter().enumerate() {
            if let Some(upper) = bit {
                if !first {
                    write!(out, " ")?;
                }
                write!(out, "o{}={}", k + 1, if *upper { 'u' } else { 'd' })?;
                first = false;
            }
        }
        Ok(())
    }
}
