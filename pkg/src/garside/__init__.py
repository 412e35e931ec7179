"""Garside group normal forms, summit sets and translation numbers."""

from .conjugacy import (
    SummitOverflowError,
    SummitSet,
    cycling,
    decycling,
    inf_s,
    len_s,
    sup_s,
    summit_representative,
    super_summit_set,
)
from .core import (
    Element,
    GarsideError,
    GarsideStructure,
    StructureMismatchError,
    conjugate,
    inverse,
    lmax,
    multiply,
    normalize,
    power,
    tau_conjugate,
    word_length,
)
from .stable import (
    Certificate,
    GeodesicPowerReport,
    GeodesicStatus,
    certify_periodically_geodesic,
    check_periodically_geodesic_up_to,
    geodesic_power,
    is_in_stable_sss,
    stable_sss,
    stable_sss_by_filter,
)
from .structures import (
    BraidStructure,
    CyclicAmalgamStructure,
    GroupSpecError,
    ProductStructure,
    make_braid,
    make_cyclic_amalgam,
    make_product,
    parse_group_spec,
)
from .translation import (
    ConsistencyError,
    format_rational,
    is_conjugate_to_inf_straight,
    is_conjugate_to_sup_straight,
    is_inf_straight,
    is_sup_straight,
    t_inf,
    t_inf_by_detection,
    t_len,
    t_sup,
)
from .words import WordParseError, format_element, pair, parse_word

__version__ = "0.1.0"
