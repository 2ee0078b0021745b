use thiserror::Error;

/// Why a raw Cayley table was rejected.
///
/// Checks run in a fixed order (shape, range, associativity, identity) and
/// the first violation found is reported with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("a monoid needs at least one element")]
    Empty,
    #[error("order {order} exceeds the supported maximum of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("declared order {declared} but the table has {actual} rows")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table[{row}][{col}] = {value} is outside 0..{order}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not associative: ({s}*{t})*{u} != {s}*({t}*{u})")]
    NotAssociative { s: usize, t: usize, u: usize },
    #[error("no identity element{}", claimed.map(|c| format!(" (element {c} is not one)")).unwrap_or_default())]
    NoIdentity { claimed: Option<usize> },
}

/// Why a raw action table was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActError {
    #[error("an act needs a nonempty carrier")]
    EmptyCarrier,
    #[error("act size {size} exceeds the supported maximum of {max}")]
    TooLarge { size: usize, max: usize },
    #[error("declared size {declared} but the action has {actual} rows")]
    SizeMismatch { declared: usize, actual: usize },
    #[error("action row {row} has {len} entries, expected one per monoid element ({expected})")]
    ShapeMismatch { row: usize, len: usize, expected: usize },
    #[error("action[{a}][{s}] = {value} is outside 0..{size}")]
    OutOfRangeEntry {
        a: usize,
        s: usize,
        value: usize,
        size: usize,
    },
    #[error("unit law fails: {a}*1 != {a}")]
    UnitLawViolation { a: usize },
    #[error("compatibility fails: {a}*({s}{t}) != ({a}*{s})*{t}")]
    CompatibilityViolation { a: usize, s: usize, t: usize },
}

/// A precondition of an algebraic construction was not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element {index} is outside a carrier of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("the set is not a right ideal")]
    NotRightIdeal,
    #[error("the ideal is not two-sided")]
    NotTwoSided,
    #[error("the ideal is not proper")]
    NotProper,
    #[error("ideal powers start at 1")]
    ZeroPower,
    #[error("the set is not a subact")]
    NotASubact,
    #[error("a subact must be nonempty")]
    EmptySubact,
    #[error("the acts are over different monoids")]
    HostMismatch,
    #[error("induced action is not well defined at class {class} under quotient element {element}")]
    WellDefinednessFailure { class: usize, element: usize },
}
