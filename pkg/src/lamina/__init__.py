"""Exact combinatorics of critical diameters for the angle-doubling map."""
from .angles import (
    Angle,
    Arc,
    Leaf,
    OrbitInfo,
    antipode,
    binary_word_to_angle,
    chords_linked,
    cyclic_order,
    double,
    in_arc,
    orbit_info,
    parse_angle,
)
from .classify import (
    CensusRecord,
    KneadingWord,
    Outcome,
    Stage,
    Verdict,
    VerdictKind,
    census,
    classify,
    kneading,
)
from .errors import (
    BudgetExceeded,
    ContainmentError,
    InternalConsistencyError,
    NotInHorseshoe,
    UnlinkednessError,
)
from .horseshoe import (
    Horseshoe,
    Itinerary,
    canonic_horseshoe,
    has_block_structure,
    in_Dinf,
    itinerary,
    prune,
)
from .pullback import PullbackLamination, build, extend, initial
from .rotational import (
    RotationalOrbit,
    is_rotational,
    minimal_rotational_set,
    rotation_number,
    sturmian_orbit,
)

__version__ = "0.1.0"
