"""Exact-arithmetic toolkit for plumbing calculus, Seifert invariants,
Lefschetz fibration bookkeeping, and Alexander-polynomial distinguishers."""

__version__ = "0.1.0"

from .exactmat import (
    IntMatrix,
    SmithForm,
    determinant,
    is_negative_definite,
    signature,
    smith_normal_form,
)
from .knots import (
    LaurentPoly,
    SeifertMatrixK,
    alexander,
    connected_sum,
    demo_family,
    family_report,
    fibered_certificate,
    substitute_t_squared,
)
from .mcg import (
    Curve,
    SurfaceSpec,
    TwistWord,
    fiber_class,
    hyperelliptic_word,
    korkmaz_word,
    lf_euler_characteristic,
    pair,
    section_count,
    transvection,
    word_action,
)
from .plumbing import (
    MoveScript,
    PlumbingGraph,
    blow_down,
    blow_up,
    boundary_homology,
    grauert_check,
    intersection_matrix,
    reverse_orientation,
    star_graph_left,
    star_graph_right,
)
from .seifert import (
    OpenBookDesc,
    SeifertData,
    canonical_contact_flag,
    euler_number,
    is_singularity_link,
    openbook_homology,
    openbook_manifold,
    star_to_seifert,
)
from .smooth4 import (
    FillingRecord,
    ManifoldRecord,
    Pi1Tag,
    distinguisher_distinct,
    excise_filling,
    fiber_sum,
    knot_surgery,
    make_W,
    make_X_g1,
)
from .reports import (
    Report,
    report_corollary55,
    report_figure1,
    report_thm44,
    report_thm53,
)
